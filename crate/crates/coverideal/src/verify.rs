//! Executable structural checks with per-claim evidence: linear-resolution
//! equivalences, regularity monotonicity, generator-degree linearity, the
//! deletion and colon identities, and the regularity/projective-dimension
//! duality.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{betti, hochster_betti, BettiTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub claims: Vec<Claim>,
    pub quantities: BTreeMap<String, Value>,
}

/// Structured pass/fail evidence for one check on one graph. The verdict
/// is `Pass` exactly when every claim holds; hypothesis failures and size
/// caps yield `Skipped`, never `Fail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub graph: String,
    pub params: BTreeMap<String, Value>,
    pub field: Field,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl VerificationReport {
    pub fn from_claims(
        theorem: &str,
        graph: &str,
        params: BTreeMap<String, Value>,
        field: Field,
        claims: Vec<(String, bool)>,
        quantities: BTreeMap<String, Value>,
    ) -> VerificationReport {
        let claims: Vec<Claim> =
            claims.into_iter().map(|(name, holds)| Claim { name, holds }).collect();
        let verdict = if claims.iter().all(|c| c.holds) { Verdict::Pass } else { Verdict::Fail };
        VerificationReport {
            theorem: theorem.to_string(),
            graph: graph.to_string(),
            params,
            field,
            verdict,
            evidence: Evidence { claims, quantities },
        }
    }

    pub fn skipped(
        theorem: &str,
        graph: &str,
        params: BTreeMap<String, Value>,
        field: Field,
        reason: &str,
    ) -> VerificationReport {
        VerificationReport {
            theorem: theorem.to_string(),
            graph: graph.to_string(),
            params,
            field,
            verdict: Verdict::Skipped { reason: reason.to_string() },
            evidence: Evidence { claims: Vec::new(), quantities: BTreeMap::new() },
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn skipped_reason(&self) -> Option<&str> {
        match &self.verdict {
            Verdict::Skipped { reason } => Some(reason),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    for i in 0..g.vertex_count() {
        if g.degree(i) == 0 {
            return Err(Error::IsolatedVertex(g.vertex_name(i).to_string()));
        }
    }
    Ok(())
}

/// Folds a size-cap failure into a skip reason; every other error stays
/// an error.
fn size_capped<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::SizeCap { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Per-power linearity data for one symbolic power.
struct PowerLinearity {
    degree: u64,
    single_degree: bool,
    linear_resolution: bool,
    linear_presentation: bool,
}

fn power_linearity(ideal: &MonomialIdeal, field: Field) -> Result<PowerLinearity> {
    let (degree, single_degree) = ideal.max_gen_degree()?;
    if !single_degree {
        // the presentation predicate is undefined off single degree; the
        // equivalence counts both conditions as false there
        return Ok(PowerLinearity {
            degree,
            single_degree,
            linear_resolution: false,
            linear_presentation: false,
        });
    }
    let table = betti(ideal, field)?;
    Ok(PowerLinearity {
        degree,
        single_degree,
        linear_resolution: table.is_linear_resolution(degree),
        linear_presentation: table.is_linear_presentation(degree),
    })
}

/// Checks that the five linearity conditions agree on `g`:
/// (i) every symbolic power up to `k` has a linear resolution;
/// (ii) the k-th does; (iii)/(iv) likewise for linear presentations;
/// (v) an order-compatible cover labeling exists. The all-k conditions are
/// checked up to the requested bound (bounded-k evidence).
pub fn verify_main_theorem(g: &Graph, k: u64, field: Field) -> Result<VerificationReport> {
    require_no_isolated(g)?;
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    params.insert("note".to_string(), json!("bounded-k evidence"));
    let graph_desc = g.canonical_string();

    let cover = MonomialIdeal::cover_ideal(g);
    let mut per_power = Vec::new();
    for j in 1..=k {
        let power = match size_capped(cover.symbolic_power(j))? {
            Ok(p) => p,
            Err(reason) => {
                return Ok(VerificationReport::skipped(
                    "main-theorem", &graph_desc, params, field, &reason,
                ))
            }
        };
        match size_capped(power_linearity(&power, field))? {
            Ok(lin) => per_power.push(lin),
            Err(reason) => {
                return Ok(VerificationReport::skipped(
                    "main-theorem", &graph_desc, params, field, &reason,
                ))
            }
        }
    }
    let labeling = match size_capped(g.find_cm_vwc_labeling())? {
        Ok(l) => l,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "main-theorem", &graph_desc, params, field, &reason,
            ))
        }
    };

    let cond_i = per_power.iter().all(|p| p.linear_resolution);
    let cond_ii = per_power.last().expect("k >= 2").linear_resolution;
    let cond_iii = per_power.iter().all(|p| p.linear_presentation);
    let cond_iv = per_power.last().expect("k >= 2").linear_presentation;
    let cond_v = labeling.is_some();
    let conditions = [cond_i, cond_ii, cond_iii, cond_iv, cond_v];
    let agree = conditions.iter().all(|&c| c) || conditions.iter().all(|&c| !c);

    let mut quantities = BTreeMap::new();
    quantities.insert("linear_resolution_all_powers".into(), json!(cond_i));
    quantities.insert("linear_resolution_at_k".into(), json!(cond_ii));
    quantities.insert("linear_presentation_all_powers".into(), json!(cond_iii));
    quantities.insert("linear_presentation_at_k".into(), json!(cond_iv));
    quantities.insert("cm_labeling_exists".into(), json!(cond_v));
    quantities.insert(
        "powers".into(),
        json!(per_power
            .iter()
            .enumerate()
            .map(|(idx, p)| json!({
                "k": idx + 1,
                "degree": p.degree,
                "single_degree": p.single_degree,
                "linear_resolution": p.linear_resolution,
                "linear_presentation": p.linear_presentation,
            }))
            .collect::<Vec<_>>()),
    );
    quantities.insert(
        "convention".into(),
        json!("presentation conditions count as false when the power is not generated in a single degree"),
    );

    Ok(VerificationReport::from_claims(
        "main-theorem",
        &graph_desc,
        params,
        field,
        vec![("five_conditions_agree".to_string(), agree)],
        quantities,
    ))
}

/// Checks that reg(S/J^(k)) is nondecreasing for k = 1..kmax.
pub fn verify_reg_monotone(g: &Graph, kmax: u64, field: Field) -> Result<VerificationReport> {
    if kmax < 2 {
        return Err(Error::InvalidParameter("kmax must be at least 2".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("kmax".to_string(), json!(kmax));
    let graph_desc = g.canonical_string();

    let cover = MonomialIdeal::cover_ideal(g);
    let mut regs: Vec<i64> = Vec::new();
    for k in 1..=kmax {
        let table = match size_capped(
            cover.symbolic_power(k).and_then(|p| betti(&p, field)),
        )? {
            Ok(t) => t,
            Err(reason) => {
                return Ok(VerificationReport::skipped(
                    "reg-monotone", &graph_desc, params, field, &reason,
                ))
            }
        };
        regs.push(table.to_quotient("S/J^(k)").resolution_stats()?.reg);
    }
    let nondecreasing = regs.windows(2).all(|w| w[0] <= w[1]);

    let mut quantities = BTreeMap::new();
    quantities.insert("reg_sequence".into(), json!(regs));
    Ok(VerificationReport::from_claims(
        "reg-monotone",
        &graph_desc,
        params,
        field,
        vec![("reg_nondecreasing".to_string(), nondecreasing)],
        quantities,
    ))
}

/// Checks deg(J^(k)) = k deg(J) for k = 1..kmax; requires the graph to be
/// unmixed or claw-free (and isolated-vertex free), otherwise skips.
pub fn verify_deg_linear(g: &Graph, kmax: u64, field: Field) -> Result<VerificationReport> {
    if kmax < 1 {
        return Err(Error::InvalidParameter("kmax must be at least 1".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("kmax".to_string(), json!(kmax));
    let graph_desc = g.canonical_string();

    let classes = g.classify();
    if classes.has_isolated {
        return Ok(VerificationReport::skipped(
            "deg-linear", &graph_desc, params, field,
            "hypothesis violated: graph has isolated vertices",
        ));
    }
    if !classes.unmixed && !classes.claw_free {
        return Ok(VerificationReport::skipped(
            "deg-linear", &graph_desc, params, field,
            "hypothesis violated: graph is neither unmixed nor claw-free",
        ));
    }
    let cover = MonomialIdeal::cover_ideal(g);
    let base = cover.max_gen_degree()?.0;
    let mut degrees = Vec::new();
    for k in 1..=kmax {
        let deg = match size_capped(cover.symbolic_power(k))? {
            Ok(p) => p.max_gen_degree()?.0,
            Err(reason) => {
                return Ok(VerificationReport::skipped(
                    "deg-linear", &graph_desc, params, field, &reason,
                ))
            }
        };
        degrees.push(deg);
    }
    let linear = degrees.iter().enumerate().all(|(idx, &d)| d == (idx as u64 + 1) * base);

    let mut quantities = BTreeMap::new();
    quantities.insert("base_degree".into(), json!(base));
    quantities.insert("degrees".into(), json!(degrees));
    quantities.insert("unmixed".into(), json!(classes.unmixed));
    quantities.insert("claw_free".into(), json!(classes.claw_free));
    Ok(VerificationReport::from_claims(
        "deg-linear",
        &graph_desc,
        params,
        field,
        vec![("degree_linear_in_k".to_string(), linear)],
        quantities,
    ))
}

/// Checks the deletion identity J(G)^(k) + (x) = u^k J'^(k) + (x), with u
/// the product of the neighbors of x and J' the cover ideal of the graph
/// with the closed neighborhood of x removed.
pub fn verify_deletion_identity(
    g: &Graph,
    x: &str,
    k: u64,
    field: Field,
) -> Result<VerificationReport> {
    let xi = g.vertex_index(x)?;
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    params.insert("vertex".to_string(), json!(x));
    let graph_desc = g.canonical_string();

    let ambient: Vec<String> = g.vertex_names().to_vec();
    let cover = MonomialIdeal::cover_ideal(g);
    let x_ideal = MonomialIdeal::from_gens(ambient.clone(), &[vec![(x, 1u64)]])?;

    let lhs = match size_capped(cover.symbolic_power(k))? {
        Ok(p) => p.sum(&x_ideal)?,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "deletion-identity", &graph_desc, params, field, &reason,
            ))
        }
    };

    let neighbor_product = {
        let pairs: Vec<(String, u64)> =
            g.neighbors(xi).into_iter().map(|i| (g.vertex_name(i).to_string(), 1)).collect();
        Monomial::from_pairs(&ambient, &pairs)?
    };
    let deleted = g.delete_closed_neighborhood(&[x])?;
    let reduced_cover = MonomialIdeal::cover_ideal(&deleted).extend_ambient(ambient.clone())?;
    let reduced_power = if reduced_cover.is_unit() {
        reduced_cover
    } else {
        match size_capped(reduced_cover.symbolic_power(k))? {
            Ok(p) => p,
            Err(reason) => {
                return Ok(VerificationReport::skipped(
                    "deletion-identity", &graph_desc, params, field, &reason,
                ))
            }
        }
    };
    let rhs = reduced_power.scale(&neighbor_product.pow(k)?)?.sum(&x_ideal)?;

    let equal = lhs == rhs;
    let mut quantities = BTreeMap::new();
    quantities.insert("lhs_generators".into(), json!(lhs.gens().len()));
    quantities.insert("rhs_generators".into(), json!(rhs.gens().len()));
    quantities.insert(
        "neighbor_product".into(),
        json!(neighbor_product.text(&ambient)),
    );
    Ok(VerificationReport::from_claims(
        "deletion-identity",
        &graph_desc,
        params,
        field,
        vec![("ideals_equal".to_string(), equal)],
        quantities,
    ))
}

/// Checks (J^(k) : x1...xn) = J^(k-2); for k = 2 the right side is the
/// unit ideal.
pub fn verify_colon_identity(g: &Graph, k: u64, field: Field) -> Result<VerificationReport> {
    require_no_isolated(g)?;
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    let graph_desc = g.canonical_string();

    let cover = MonomialIdeal::cover_ideal(g);
    let v = Monomial::from_exponents(vec![1; g.vertex_count()]);
    let (lhs, rhs) = match size_capped(
        cover
            .symbolic_power(k)
            .and_then(|p| p.colon(&v))
            .and_then(|l| cover.symbolic_power(k - 2).map(|r| (l, r))),
    )? {
        Ok(pair) => pair,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "colon-identity", &graph_desc, params, field, &reason,
            ))
        }
    };

    let equal = lhs == rhs;
    let mut quantities = BTreeMap::new();
    quantities.insert("lhs_generators".into(), json!(lhs.gens().len()));
    quantities.insert("rhs_generators".into(), json!(rhs.gens().len()));
    Ok(VerificationReport::from_claims(
        "colon-identity",
        &graph_desc,
        params,
        field,
        vec![("ideals_equal".to_string(), equal)],
        quantities,
    ))
}

/// Checks the implication: if J^(k) is generated in a single degree for
/// some k >= 2 then the graph is very well-covered.
pub fn verify_singdeg(g: &Graph, k: u64, field: Field) -> Result<VerificationReport> {
    require_no_isolated(g)?;
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    let graph_desc = g.canonical_string();

    let cover = MonomialIdeal::cover_ideal(g);
    let (degree, single) = match size_capped(cover.symbolic_power(k))? {
        Ok(p) => p.max_gen_degree()?,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "single-degree", &graph_desc, params, field, &reason,
            ))
        }
    };
    let vwc = g.classify().very_well_covered;
    let implication = !single || vwc;

    let mut quantities = BTreeMap::new();
    quantities.insert("max_degree".into(), json!(degree));
    quantities.insert("single_degree".into(), json!(single));
    quantities.insert("very_well_covered".into(), json!(vwc));
    Ok(VerificationReport::from_claims(
        "single-degree",
        &graph_desc,
        params,
        field,
        vec![("single_degree_implies_very_well_covered".to_string(), implication)],
        quantities,
    ))
}

/// Checks reg(J(G)) = pd(S/I(G)) from the two Betti tables.
pub fn verify_terai(g: &Graph, field: Field) -> Result<VerificationReport> {
    require_no_isolated(g)?;
    let params = BTreeMap::new();
    let graph_desc = g.canonical_string();

    let cover_table = match size_capped(hochster_betti(&MonomialIdeal::cover_ideal(g), field))? {
        Ok(t) => t,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "terai-duality", &graph_desc, params, field, &reason,
            ))
        }
    };
    let edge_table = match size_capped(hochster_betti(&MonomialIdeal::edge_ideal(g), field))? {
        Ok(t) => t,
        Err(reason) => {
            return Ok(VerificationReport::skipped(
                "terai-duality", &graph_desc, params, field, &reason,
            ))
        }
    };
    let reg_cover = cover_table.resolution_stats()?.reg;
    let pd_edge_quotient = edge_table.to_quotient("S/I").resolution_stats()?.pd;
    let equal = reg_cover == pd_edge_quotient as i64;

    let mut quantities = BTreeMap::new();
    quantities.insert("reg_cover_ideal".into(), json!(reg_cover));
    quantities.insert("pd_edge_quotient".into(), json!(pd_edge_quotient));
    Ok(VerificationReport::from_claims(
        "terai-duality",
        &graph_desc,
        params,
        field,
        vec![("reg_equals_pd".to_string(), equal)],
        quantities,
    ))
}

/// Convenience used by Betti consumers: the Betti table of a symbolic
/// power with the subject filled in.
pub fn symbolic_power_table(
    g: &Graph,
    k: u64,
    field: Field,
) -> Result<BettiTable> {
    let power = MonomialIdeal::cover_ideal(g).symbolic_power(k)?;
    Ok(betti(&power, field)?
        .with_subject(crate::betti::Subject::Ideal(format!("J(G)^({k})"))))
}
