//! Graded Betti numbers of monomial ideals via polarization and
//! Hochster's formula, with regularity, projective dimension, and the
//! linear-resolution and linear-presentation predicates.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::homology_dims_from_faces;

/// Subset enumeration cap: ideals with more ambient variables than this
/// are rejected rather than approximated.
pub const MAX_HOCHSTER_VARS: usize = 22;

const FACE_CAP: usize = 1 << 20;

/// What a Betti table describes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "name", rename_all = "lowercase")]
pub enum Subject {
    Ideal(String),
    Quotient(String),
}

/// Graded Betti numbers beta_{i,j} with the coefficient field recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: Subject,
    pub field: Field,
    entries: BTreeMap<(usize, u64), u64>,
}

/// Regularity and projective dimension read off a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResolutionStats {
    pub reg: i64,
    pub pd: usize,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn with_subject(mut self, subject: Subject) -> BettiTable {
        self.subject = subject;
        self
    }

    /// The table of S/I derived from the table of I: a shift by one in
    /// homological degree plus the rank-one head in degree (0, 0).
    pub fn to_quotient(&self, name: &str) -> BettiTable {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        for (&(i, j), &b) in &self.entries {
            entries.insert((i + 1, j), b);
        }
        BettiTable { subject: Subject::Quotient(name.to_string()), field: self.field, entries }
    }

    /// Counts of minimal generators by degree: the i = 0 row.
    pub fn generator_histogram(&self) -> BTreeMap<u64, u64> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == 0)
            .map(|((_, j), &b)| (*j, b))
            .collect()
    }

    /// True iff every nonzero entry sits on the diagonal j - i = d.
    pub fn is_linear_resolution(&self, d: u64) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as u64 + d)
    }

    /// True iff the first syzygies are concentrated in degree d + 1.
    pub fn is_linear_presentation(&self, d: u64) -> bool {
        self.entries
            .keys()
            .filter(|&&(i, _)| i == 1)
            .all(|&(_, j)| j == d + 1)
    }

    pub fn resolution_stats(&self) -> Result<ResolutionStats> {
        if self.entries.is_empty() {
            return Err(Error::EmptyTable);
        }
        let reg = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap();
        let pd = self.entries.keys().map(|&(i, _)| i).max().unwrap();
        Ok(ResolutionStats { reg, pd })
    }

    /// JSON record: {"subject", "field", "entries": [{i, j, beta}], "reg", "pd"}.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &b)| serde_json::json!({ "i": i, "j": j, "beta": b }))
            .collect();
        let stats = self.resolution_stats().ok();
        serde_json::json!({
            "subject": self.subject,
            "field": self.field.to_string(),
            "entries": entries,
            "reg": stats.map(|s| s.reg),
            "pd": stats.map(|s| s.pd),
        })
    }
}

/// How the per-subset homology is evaluated inside Hochster's formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Restrictions with few vertices run directly; large ones go through
    /// the combinatorial Alexander dual of the restriction, which for
    /// cover-type ideals is far smaller. Both are exact.
    #[default]
    Auto,
    Direct,
    Dual,
}

#[derive(Debug, Clone, Copy)]
pub struct HochsterOptions {
    /// Skip subsets whose restriction has a cone vertex (homologically
    /// trivial). Disabling this never changes the result.
    pub prune_cones: bool,
    pub route: Route,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions { prune_cones: true, route: Route::Auto }
    }
}

/// Hochster's formula for a squarefree ideal:
/// beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2} of the restriction
/// of the Stanley-Reisner complex to W.
pub fn hochster_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    hochster_betti_with(ideal, field, HochsterOptions::default())
}

pub fn hochster_betti_with(
    ideal: &MonomialIdeal,
    field: Field,
    options: HochsterOptions,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient().len();
    if n > MAX_HOCHSTER_VARS {
        return Err(Error::SizeCap { what: "subset enumeration", limit: MAX_HOCHSTER_VARS });
    }
    let supports: Vec<u64> = ideal.gens().iter().map(|g| g.support_mask()).collect();

    let entries = (0u64..1u64 << n)
        .into_par_iter()
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<(usize, u64), u64>, w| {
            let relevant: Vec<u64> =
                supports.iter().copied().filter(|&s| s & !w == 0).collect();
            if relevant.is_empty() {
                // the restriction is a full simplex: no reduced homology
                return Ok(acc);
            }
            let union = relevant.iter().fold(0u64, |a, b| a | b);
            if options.prune_cones && union != w {
                return Ok(acc);
            }
            let j = w.count_ones() as u64;
            for (d, h) in restriction_homology(w, &relevant, field, options.route)? {
                if h == 0 {
                    continue;
                }
                let i = j as i64 - d - 2;
                if i >= 0 {
                    *acc.entry((i as usize, j)).or_insert(0) += h as u64;
                }
            }
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;

    let table = BettiTable { subject: Subject::Ideal("I".to_string()), field, entries };
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for g in ideal.gens() {
        *histogram.entry(g.degree()).or_insert(0) += 1;
    }
    assert_eq!(
        table.generator_histogram(),
        histogram,
        "beta_0 row must match the generator degree histogram"
    );
    Ok(table)
}

/// Reduced homology (degree, dimension) pairs of the Stanley-Reisner
/// complex, over ground set `w`, of the generators with support inside
/// `w` (equal to the restriction of the full complex to `w`).
fn restriction_homology(
    w: u64,
    supports: &[u64],
    field: Field,
    route: Route,
) -> Result<Vec<(i64, usize)>> {
    let wsize = w.count_ones() as usize;
    let go_direct = match route {
        Route::Direct => true,
        Route::Dual => false,
        Route::Auto => {
            // pick the side with the smaller face bound; the dual of a
            // cover-type restriction is usually tiny while the direct
            // face lattice is near 2^|w|
            let direct_bound = 1u128 << wsize;
            let dual_bound: u128 = supports
                .iter()
                .map(|s| 1u128 << (wsize as u32 - (s & w).count_ones()))
                .sum();
            dual_bound > direct_bound
        }
    };
    if !go_direct {
        if let Some(faces) = dual_faces(w, supports) {
            let dims = homology_dims_from_faces(&faces, field);
            // combinatorial Alexander duality on ground set w:
            // H~_d(restriction) = H~_{|w| - d - 3}(dual)
            return Ok(dims
                .iter()
                .enumerate()
                .map(|(s, &h)| {
                    let dual_degree = s as i64 - 1;
                    (wsize as i64 - dual_degree - 3, h)
                })
                .collect());
        }
        if route == Route::Dual {
            return Err(Error::SizeCap { what: "dual face enumeration", limit: FACE_CAP });
        }
    }
    let mut faces = Vec::new();
    let mut sub = w;
    loop {
        if !supports.iter().any(|&s| s & !sub == 0) {
            faces.push(sub);
            if faces.len() > FACE_CAP {
                return Err(Error::SizeCap { what: "face enumeration", limit: FACE_CAP });
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    faces.sort_unstable();
    let dims = homology_dims_from_faces(&faces, field);
    Ok(dims.iter().enumerate().map(|(s, &h)| (s as i64 - 1, h)).collect())
}

/// Faces of the Alexander dual of the restriction: all subsets of the
/// facet masks w \ support. None if the enumeration exceeds the cap.
fn dual_faces(w: u64, supports: &[u64]) -> Option<Vec<u64>> {
    let mut seen: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
    for &s in supports {
        let facet = w & !s;
        let mut sub = facet;
        loop {
            seen.insert(sub);
            if seen.len() > FACE_CAP {
                return None;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & facet;
        }
    }
    Some(seen.into_iter().collect())
}

/// Betti table of an arbitrary monomial ideal: polarize (a Betti-number
/// preserving squarefree deformation) and apply Hochster's formula.
pub fn betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let polarized = ideal.polarize()?;
    hochster_betti(&polarized, field)
}

/// True iff the minimal free resolution is linear: the ideal is generated
/// in a single degree d and every beta_{i,j} vanishes off j - i = d.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let (d, single) = ideal.max_gen_degree()?;
    if !single {
        return Ok(false);
    }
    Ok(betti(ideal, field)?.is_linear_resolution(d))
}

/// True iff the first syzygies are linear; only defined for ideals
/// generated in a single degree.
pub fn has_linear_presentation(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let (d, single) = ideal.max_gen_degree()?;
    if !single {
        return Err(Error::NotSingleDegree);
    }
    Ok(betti(ideal, field)?.is_linear_presentation(d))
}

/// Product of all ambient variables.
pub fn total_product(ideal: &MonomialIdeal) -> Monomial {
    Monomial::from_exponents(vec![1; ideal.ambient().len()])
}
