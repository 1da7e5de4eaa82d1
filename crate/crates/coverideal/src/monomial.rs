//! Monomials and monomial ideals with exact arithmetic: canonical minimal
//! generating sets, intersections, powers, colons, symbolic powers via
//! prime decomposition, Alexander duality, and polarization.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{mask_to_indices, Graph};

/// Ambient size cap wherever variable sets are handled as bitmasks
/// (prime decomposition, duality, Stanley-Reisner constructions).
pub const MAX_MASK_VARS: usize = 64;

/// A monomial as a dense exponent vector aligned with the ambient
/// variable list of the ideal it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u64>) -> Monomial {
        Monomial { exps }
    }

    /// Builds a monomial over `ambient` from (variable, exponent) pairs.
    pub fn from_pairs<T: AsRef<str>>(ambient: &[String], pairs: &[(T, u64)]) -> Result<Monomial> {
        let mut exps = vec![0u64; ambient.len()];
        for (name, e) in pairs {
            let name = name.as_ref();
            let i = ambient
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            exps[i] = exps[i].checked_add(*e).ok_or(Error::Overflow)?;
        }
        Ok(Monomial { exps })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u64 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// self / gcd(self, other): the colon quotient of a generator.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - a.min(b)).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn support_indices(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Text form over the given names: `x1^2*x3`, unit monomial `1`.
    pub fn text(&self, ambient: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ambient[i].clone()),
                _ => parts.push(format!("{}^{}", ambient[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Canonical generator order: total degree, then exponent vectors
/// compared lexicographically with earlier variables dominating.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exps.cmp(&a.exps))
}

/// A monomial ideal stored by its unique minimal generating set in
/// canonical order. The zero ideal has no generators; the unit ideal is
/// generated by 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes: drops every generator divisible by another, removes
    /// duplicates, sorts canonically.
    pub fn new(ambient: Vec<String>, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        for g in &gens {
            if g.exps.len() != ambient.len() {
                return Err(Error::AmbientMismatch);
            }
        }
        let mut sorted = gens;
        sorted.sort_by(canonical_cmp);
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { ambient, gens: minimal })
    }

    pub fn zero(ambient: Vec<String>) -> MonomialIdeal {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: Vec<String>) -> MonomialIdeal {
        let n = ambient.len();
        MonomialIdeal { ambient, gens: vec![Monomial::one(n)] }
    }

    /// Principal ideal (m).
    pub fn principal(ambient: Vec<String>, m: Monomial) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ambient, vec![m])
    }

    /// Convenience: build from (variable, exponent) pair lists.
    pub fn from_gens<T: AsRef<str>>(
        ambient: Vec<String>,
        gens: &[Vec<(T, u64)>],
    ) -> Result<MonomialIdeal> {
        let monomials = gens
            .iter()
            .map(|pairs| Monomial::from_pairs(&ambient, pairs))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ambient, monomials)
    }

    pub fn ambient(&self) -> &[String] {
        &self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Minimal generators of the intersection, via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Minimal generators of I + J.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Minimal generators of the product I * J.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.mul(v)?);
            }
        }
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// k-fold product; the 0th power is the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ambient.clone());
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Colon ideal (I : m).
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.exps.len() != self.ambient.len() {
            return Err(Error::AmbientMismatch);
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Product m * I.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.exps.len() != self.ambient.len() {
            return Err(Error::AmbientMismatch);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(m))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Re-expresses the ideal in a larger ambient containing every
    /// current variable.
    pub fn extend_ambient(&self, ambient: Vec<String>) -> Result<MonomialIdeal> {
        let positions = self
            .ambient
            .iter()
            .map(|v| {
                ambient
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u64; ambient.len()];
                for (old, &new) in positions.iter().enumerate() {
                    exps[new] = g.exps[old];
                }
                Monomial { exps }
            })
            .collect();
        MonomialIdeal::new(ambient, gens)
    }

    /// Largest total degree among minimal generators, and whether all
    /// generators share it.
    pub fn max_gen_degree(&self) -> Result<(u64, bool)> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let degrees: Vec<u64> = self.gens.iter().map(Monomial::degree).collect();
        let max = *degrees.iter().max().expect("nonzero ideal");
        Ok((max, degrees.iter().all(|&d| d == max)))
    }

    /// The edge ideal: one quadratic generator per edge.
    pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
        let ambient: Vec<String> = g.vertex_names().to_vec();
        let gens = g
            .edge_indices()
            .iter()
            .map(|&(i, j)| {
                let mut exps = vec![0u64; ambient.len()];
                exps[i] = 1;
                exps[j] = 1;
                Monomial { exps }
            })
            .collect();
        MonomialIdeal::new(ambient, gens).expect("edge ideal generators are well-formed")
    }

    /// The cover ideal: one squarefree generator per minimal vertex cover.
    /// An edgeless graph yields the unit ideal (its unique minimal cover is
    /// empty).
    pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
        let ambient: Vec<String> = g.vertex_names().to_vec();
        let gens = g
            .minimal_vertex_cover_masks()
            .into_iter()
            .map(|mask| {
                let mut exps = vec![0u64; ambient.len()];
                for i in mask_to_indices(mask) {
                    exps[i] = 1;
                }
                Monomial { exps }
            })
            .collect();
        MonomialIdeal::new(ambient, gens).expect("cover ideal generators are well-formed")
    }

    fn require_squarefree_proper(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.ambient.len() > MAX_MASK_VARS {
            return Err(Error::SizeCap { what: "ambient variables", limit: MAX_MASK_VARS });
        }
        Ok(())
    }

    /// Supports of the irredundant prime decomposition of a squarefree
    /// ideal: the minimal transversals of the generator supports, in
    /// lexicographic order.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<String>>> {
        Ok(self
            .minimal_prime_masks()?
            .into_iter()
            .map(|m| mask_to_indices(m).into_iter().map(|i| self.ambient[i].clone()).collect())
            .collect())
    }

    pub(crate) fn minimal_prime_masks(&self) -> Result<Vec<u64>> {
        self.require_squarefree_proper()?;
        let supports: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        Ok(minimal_transversals(&supports))
    }

    /// k-th symbolic power of a squarefree ideal: the intersection of the
    /// k-th powers of its minimal primes. The 0th symbolic power is the
    /// unit ideal.
    pub fn symbolic_power(&self, k: u64) -> Result<MonomialIdeal> {
        let primes = self.minimal_prime_masks()?;
        if k == 0 {
            return Ok(MonomialIdeal::unit(self.ambient.clone()));
        }
        let mut acc = MonomialIdeal::unit(self.ambient.clone());
        for p in primes {
            let vars: Vec<Monomial> = mask_to_indices(p)
                .into_iter()
                .map(|i| {
                    let mut exps = vec![0u64; self.ambient.len()];
                    exps[i] = 1;
                    Monomial { exps }
                })
                .collect();
            let prime = MonomialIdeal::new(self.ambient.clone(), vars)?;
            acc = acc.intersect(&prime.power(k)?)?;
        }
        Ok(acc)
    }

    /// Alexander dual of a squarefree ideal: generated by the support
    /// products of the minimal primes; involutive.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.minimal_prime_masks()?;
        let gens = primes
            .into_iter()
            .map(|mask| {
                let mut exps = vec![0u64; self.ambient.len()];
                for i in mask_to_indices(mask) {
                    exps[i] = 1;
                }
                Monomial { exps }
            })
            .collect();
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Polarization: each generator `prod x_i^{a_i}` becomes
    /// `prod_{p=1..a_i} x_i_p`, in the squarefree ambient `{v}_{p}` ordered
    /// variable-major with p ascending. Degrees and Betti numbers are
    /// preserved; minimality of the generating set is preserved (checked).
    pub fn polarize(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let max_exps: Vec<u64> = (0..self.ambient.len())
            .map(|i| self.gens.iter().map(|g| g.exps[i]).max().unwrap_or(0))
            .collect();
        let mut ambient = Vec::new();
        let mut offsets = Vec::with_capacity(self.ambient.len());
        for (v, &a) in self.ambient.iter().zip(&max_exps) {
            offsets.push(ambient.len());
            for p in 1..=a {
                ambient.push(format!("{v}_{p}"));
            }
        }
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u64; ambient.len()];
                for (i, &e) in g.exps.iter().enumerate() {
                    for p in 0..e as usize {
                        exps[offsets[i] + p] = 1;
                    }
                }
                Monomial { exps }
            })
            .collect();
        let count = gens.len();
        let polarized = MonomialIdeal::new(ambient, gens)?;
        assert_eq!(
            polarized.gens.len(),
            count,
            "polarization must preserve minimality of the generating set"
        );
        Ok(polarized)
    }

    /// JSON record: {"ambient": [names], "gens": [[[var, exp], ...], ...]}.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .gens
            .iter()
            .map(|g| {
                let pairs: Vec<serde_json::Value> = g
                    .exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| serde_json::json!([self.ambient[i], e]))
                    .collect();
                serde_json::Value::Array(pairs)
            })
            .collect();
        serde_json::json!({ "ambient": self.ambient, "gens": gens })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.text(&self.ambient)).collect();
        if parts.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", parts.join(", "))
        }
    }
}

/// All minimal hitting sets of the given masks, ascending lexicographic
/// by index list.
pub(crate) fn minimal_transversals(supports: &[u64]) -> Vec<u64> {
    let mut found: BTreeSet<u64> = BTreeSet::new();
    fn extend(supports: &[u64], current: u64, found: &mut BTreeSet<u64>) {
        match supports.iter().find(|&&s| s & current == 0) {
            None => {
                found.insert(current);
            }
            Some(&s) => {
                for v in mask_to_indices(s) {
                    extend(supports, current | (1 << v), found);
                }
            }
        }
    }
    extend(supports, 0, &mut found);
    let candidates: Vec<u64> = found.iter().copied().collect();
    let mut minimal: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|&&t| !candidates.iter().any(|&u| u != t && u & t == u))
        .map(|&t| mask_to_indices(t))
        .collect();
    minimal.sort();
    minimal
        .into_iter()
        .map(|ix| ix.into_iter().fold(0u64, |m, i| m | (1 << i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn ideal(ambient: &[&str], gens: &[&[(&str, u64)]]) -> MonomialIdeal {
        let ambient = vars(ambient);
        let gens: Vec<Vec<(&str, u64)>> = gens.iter().map(|g| g.to_vec()).collect();
        MonomialIdeal::from_gens(ambient, &gens).unwrap()
    }

    /// Every monomial over `ambient` with total degree at most `max_deg`.
    fn monomials_up_to(nvars: usize, max_deg: u64) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(nvars)];
        let mut frontier = vec![Monomial::one(nvars)];
        for _ in 0..max_deg {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 0..nvars {
                    let mut exps = m.exponents().to_vec();
                    exps[i] += 1;
                    next.push(Monomial::from_exponents(exps));
                }
            }
            next.sort_by(|a, b| a.exponents().cmp(b.exponents()));
            next.dedup();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(&["x1", "x2"], &[&[("x1", 2)], &[("x1", 2), ("x2", 1)], &[("x2", 1)]]);
        assert_eq!(i, ideal(&["x1", "x2"], &[&[("x1", 2)], &[("x2", 1)]]));

        let unit = ideal(&["x1"], &[&[], &[("x1", 1)]]);
        assert!(unit.is_unit());

        let zero = MonomialIdeal::zero(vars(&["x1"]));
        assert!(zero.is_zero());
        assert_eq!(zero.gens().len(), 0);
    }

    #[test]
    fn canonical_order_is_degree_then_lex() {
        let i = ideal(&["x1", "x2"], &[&[("x2", 2)], &[("x1", 1), ("x2", 1)], &[("x1", 2)]]);
        let texts: Vec<String> = i.gens().iter().map(|g| g.text(i.ambient())).collect();
        assert_eq!(texts, vec!["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(&["x1", "x2"], &[&[("x1", 1)]]);
        let b = ideal(&["x1", "x2"], &[&[("x2", 1)]]);
        assert_eq!(
            a.intersect(&b).unwrap(),
            ideal(&["x1", "x2"], &[&[("x1", 1), ("x2", 1)]])
        );

        let i = ideal(&["x1", "x2", "x3"], &[&[("x1", 1)], &[("x2", 1)]]);
        let j = ideal(&["x1", "x2", "x3"], &[&[("x1", 1)], &[("x3", 1)]]);
        let meet = i.intersect(&j).unwrap();
        assert_eq!(
            meet,
            ideal(&["x1", "x2", "x3"], &[&[("x1", 1)], &[("x2", 1), ("x3", 1)]])
        );
        // membership oracle: m in I cap J iff m in I and m in J
        for m in monomials_up_to(3, 3) {
            assert_eq!(meet.contains(&m), i.contains(&m) && j.contains(&m));
        }

        let unit = MonomialIdeal::unit(vars(&["x1", "x2", "x3"]));
        assert_eq!(i.intersect(&unit).unwrap(), i);

        let other = MonomialIdeal::unit(vars(&["y"]));
        assert!(matches!(i.intersect(&other), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn power_examples() {
        let m2 = ideal(&["x1", "x2"], &[&[("x1", 1)], &[("x2", 1)]]);
        assert_eq!(
            m2.power(2).unwrap(),
            ideal(&["x1", "x2"], &[&[("x1", 2)], &[("x1", 1), ("x2", 1)], &[("x2", 2)]])
        );
        assert!(m2.power(0).unwrap().is_unit());
        let p = ideal(&["x1", "x2"], &[&[("x1", 1), ("x2", 1)]]);
        assert_eq!(p.power(3).unwrap(), ideal(&["x1", "x2"], &[&[("x1", 3), ("x2", 3)]]));
    }

    #[test]
    fn colon_examples() {
        let m2 = ideal(&["x1", "x2"], &[&[("x1", 1)], &[("x2", 1)]]);
        let cubed = m2.power(3).unwrap();
        let v = Monomial::from_pairs(&m2.ambient().to_vec(), &[("x1", 1), ("x2", 1)]).unwrap();
        assert_eq!(cubed.colon(&v).unwrap(), m2);

        let i = ideal(&["x1", "x2"], &[&[("x1", 2), ("x2", 1)]]);
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
        let x1cubed = Monomial::from_pairs(&i.ambient().to_vec(), &[("x1", 3)]).unwrap();
        assert_eq!(i.colon(&x1cubed).unwrap(), ideal(&["x1", "x2"], &[&[("x2", 1)]]));
    }

    #[test]
    fn sum_examples() {
        let a = ideal(&["x1", "x2", "x3"], &[&[("x1", 1), ("x3", 1)]]);
        let b = ideal(&["x1", "x2", "x3"], &[&[("x2", 1)]]);
        assert_eq!(
            a.sum(&b).unwrap(),
            ideal(&["x1", "x2", "x3"], &[&[("x2", 1)], &[("x1", 1), ("x3", 1)]])
        );
        let zero = MonomialIdeal::zero(vars(&["x1", "x2", "x3"]));
        assert_eq!(a.sum(&zero).unwrap(), a);
        let x1 = ideal(&["x1", "x2", "x3"], &[&[("x1", 1)]]);
        let x1x2 = ideal(&["x1", "x2", "x3"], &[&[("x1", 1), ("x2", 1)]]);
        assert_eq!(x1.sum(&x1x2).unwrap(), x1);
    }

    #[test]
    fn edge_and_cover_ideal_examples() {
        let k2 = Graph::path(2);
        assert_eq!(MonomialIdeal::edge_ideal(&k2), ideal(&["x1", "x2"], &[&[("x1", 1), ("x2", 1)]]));
        assert_eq!(
            MonomialIdeal::cover_ideal(&k2),
            ideal(&["x1", "x2"], &[&[("x1", 1)], &[("x2", 1)]])
        );

        let c5 = Graph::cycle(5);
        let i_c5 = MonomialIdeal::edge_ideal(&c5);
        let expect = ideal(
            &["x1", "x2", "x3", "x4", "x5"],
            &[
                &[("x1", 1), ("x2", 1)],
                &[("x2", 1), ("x3", 1)],
                &[("x3", 1), ("x4", 1)],
                &[("x4", 1), ("x5", 1)],
                &[("x1", 1), ("x5", 1)],
            ],
        );
        assert_eq!(i_c5, expect);

        assert!(MonomialIdeal::edge_ideal(&Graph::edgeless(3)).is_zero());
        assert!(MonomialIdeal::cover_ideal(&Graph::edgeless(3)).is_unit());

        let c4 = Graph::cycle(4);
        assert_eq!(
            MonomialIdeal::cover_ideal(&c4),
            ideal(&["x1", "x2", "x3", "x4"], &[&[("x1", 1), ("x3", 1)], &[("x2", 1), ("x4", 1)]])
        );

        // cover ideal equals the intersection of the edge primes
        for g in [Graph::cycle(5), Graph::cycle(4), Graph::path(4)] {
            let ambient: Vec<String> = g.vertex_names().to_vec();
            let mut meet = MonomialIdeal::unit(ambient.clone());
            for (a, b) in g.edge_names() {
                let prime = MonomialIdeal::from_gens(
                    ambient.clone(),
                    &[vec![(a.as_str(), 1)], vec![(b.as_str(), 1)]],
                )
                .unwrap();
                meet = meet.intersect(&prime).unwrap();
            }
            assert_eq!(meet, MonomialIdeal::cover_ideal(&g));
        }

        // cover monomials match the minimal vertex cover list
        let covers = c5.minimal_vertex_covers();
        let j_c5 = MonomialIdeal::cover_ideal(&c5);
        assert_eq!(j_c5.gens().len(), covers.len());
        for c in covers {
            let pairs: Vec<(&str, u64)> = c.iter().map(|v| (v.as_str(), 1)).collect();
            let m = Monomial::from_pairs(j_c5.ambient(), &pairs).unwrap();
            assert!(j_c5.gens().contains(&m));
        }
    }

    #[test]
    fn minimal_primes_examples() {
        let k2_edge = MonomialIdeal::edge_ideal(&Graph::path(2));
        assert_eq!(k2_edge.minimal_primes().unwrap(), vec![vec!["x1"], vec!["x2"]]);

        let c5 = Graph::cycle(5);
        let primes = MonomialIdeal::edge_ideal(&c5).minimal_primes().unwrap();
        let mut covers: Vec<Vec<String>> = c5.minimal_vertex_covers();
        covers.sort();
        assert_eq!(primes, covers);

        let i = ideal(&["x1", "x2", "x3"], &[&[("x1", 1), ("x2", 1)], &[("x1", 1), ("x3", 1)]]);
        assert_eq!(
            i.minimal_primes().unwrap(),
            vec![vec!["x1".to_string()], vec!["x2".to_string(), "x3".to_string()]]
        );

        let nonsq = ideal(&["x1"], &[&[("x1", 2)]]);
        assert!(matches!(nonsq.minimal_primes(), Err(Error::NotSquarefree)));
        assert!(matches!(
            MonomialIdeal::zero(vars(&["x1"])).minimal_primes(),
            Err(Error::ZeroIdeal)
        ));
        assert!(matches!(
            MonomialIdeal::unit(vars(&["x1"])).minimal_primes(),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn symbolic_power_examples() {
        let j_k2 = MonomialIdeal::cover_ideal(&Graph::path(2));
        for k in 0..=4 {
            assert_eq!(j_k2.symbolic_power(k).unwrap(), j_k2.power(k).unwrap());
        }

        let c5 = Graph::cycle(5);
        let j2 = MonomialIdeal::cover_ideal(&c5).symbolic_power(2).unwrap();
        let v = Monomial::from_exponents(vec![1; 5]);
        assert!(j2.contains(&v));
        assert!(j2.gens().contains(&v), "x1*x2*x3*x4*x5 is a minimal generator");

        let i3 = MonomialIdeal::edge_ideal(&c5).symbolic_power(3).unwrap();
        let a = Monomial::from_exponents(vec![3, 3, 0, 0, 0]);
        assert!(i3.gens().contains(&a), "x1^3*x2^3 generates I(C5)^(3)");
        assert!(i3.gens().contains(&v), "x1*x2*x3*x4*x5 generates I(C5)^(3)");
        assert!(!i3.max_gen_degree().unwrap().1);
    }

    #[test]
    fn symbolic_power_contains_ordinary_power() {
        for g in [Graph::cycle(5), Graph::cycle(4), Graph::path(4)] {
            let j = MonomialIdeal::cover_ideal(&g);
            for k in 1..=3 {
                let ordinary = j.power(k).unwrap();
                let symbolic = j.symbolic_power(k).unwrap();
                for u in ordinary.gens() {
                    assert!(symbolic.contains(u));
                }
                // generator powers stay minimal generators
                for u in j.gens() {
                    assert!(symbolic.gens().contains(&u.pow(k).unwrap()));
                }
            }
        }
    }

    #[test]
    fn alexander_dual_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            MonomialIdeal::edge_ideal(&c4).alexander_dual().unwrap(),
            MonomialIdeal::cover_ideal(&c4)
        );
        let k2 = Graph::path(2);
        assert_eq!(
            MonomialIdeal::edge_ideal(&k2).alexander_dual().unwrap(),
            MonomialIdeal::cover_ideal(&k2)
        );
        let c5 = Graph::cycle(5);
        assert_eq!(
            MonomialIdeal::cover_ideal(&c5).alexander_dual().unwrap(),
            MonomialIdeal::edge_ideal(&c5)
        );
    }

    #[test]
    fn polarize_examples() {
        let sq = ideal(&["x1"], &[&[("x1", 2)]]);
        let pol = sq.polarize().unwrap();
        assert_eq!(pol.ambient(), &["x1_1", "x1_2"]);
        assert_eq!(pol, ideal(&["x1_1", "x1_2"], &[&[("x1_1", 1), ("x1_2", 1)]]));

        let m2 = ideal(&["x1", "x2"], &[&[("x1", 1)], &[("x2", 1)]]).power(2).unwrap();
        let pol = m2.polarize().unwrap();
        assert_eq!(pol.ambient(), &["x1_1", "x1_2", "x2_1", "x2_2"]);
        assert_eq!(
            pol,
            ideal(
                &["x1_1", "x1_2", "x2_1", "x2_2"],
                &[
                    &[("x1_1", 1), ("x1_2", 1)],
                    &[("x1_1", 1), ("x2_1", 1)],
                    &[("x2_1", 1), ("x2_2", 1)],
                ]
            )
        );

        // squarefree input: plain renaming v -> v_1
        let j = MonomialIdeal::cover_ideal(&Graph::cycle(4));
        let pol = j.polarize().unwrap();
        assert_eq!(pol.ambient(), &["x1_1", "x2_1", "x3_1", "x4_1"]);
        assert_eq!(pol.gens().len(), j.gens().len());

        assert!(matches!(MonomialIdeal::zero(vars(&["x1"])).polarize(), Err(Error::ZeroIdeal)));
    }

    #[test]
    fn max_gen_degree_examples() {
        let c5 = Graph::cycle(5);
        let j = MonomialIdeal::cover_ideal(&c5);
        assert_eq!(j.max_gen_degree().unwrap(), (3, true));
        assert_eq!(j.symbolic_power(2).unwrap().max_gen_degree().unwrap(), (6, false));
        let m2 = ideal(&["x1", "x2"], &[&[("x1", 1)], &[("x2", 1)]]);
        for k in 1..=5 {
            assert_eq!(m2.power(k).unwrap().max_gen_degree().unwrap(), (k, true));
        }
        assert!(MonomialIdeal::zero(vars(&["x1"])).max_gen_degree().is_err());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(&["x1", "x2", "x3"], &[&[("x1", 1), ("x2", 1)]]);
        let m = Monomial::from_pairs(&vars(&["x1", "x2", "x3"]), &[("x1", 1), ("x2", 1), ("x3", 1)])
            .unwrap();
        assert!(i.contains(&m));
        assert!(!MonomialIdeal::zero(vars(&["x1", "x2", "x3"])).contains(&m));
    }

    #[test]
    fn unmixed_cover_degree_at_least_half_the_vertices() {
        for g in [Graph::cycle(4), Graph::cycle(5), Graph::path(2), Graph::complete(4)] {
            let c = g.classify();
            assert!(c.unmixed && !c.has_isolated);
            let (d, single) = MonomialIdeal::cover_ideal(&g).max_gen_degree().unwrap();
            assert!(single);
            assert!(2 * d as usize >= g.vertex_count());
        }
    }

    #[test]
    fn text_and_json_forms() {
        let i = ideal(&["x1", "x2", "x3"], &[&[("x1", 2), ("x3", 1)]]);
        assert_eq!(i.gens()[0].text(i.ambient()), "x1^2*x3");
        assert_eq!(Monomial::one(3).text(i.ambient()), "1");
        assert_eq!(format!("{i}"), "(x1^2*x3)");
        let json = i.to_json();
        assert_eq!(json["ambient"][0], "x1");
        assert_eq!(json["gens"][0][0][0], "x1");
        assert_eq!(json["gens"][0][0][1], 2);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = ideal(&["x1"], &[&[("x1", u64::MAX / 2)]]);
        assert!(matches!(big.power(3), Err(Error::Overflow)));
    }
}
