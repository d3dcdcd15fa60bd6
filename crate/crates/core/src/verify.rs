//! Machine checks of the structural claims about power graphs of direct
//! products, run over a fixed family of small groups and seeded random
//! graphs.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{are_isomorphic, graphs_equal_labeled, SimpleGraph};
use crate::group::{FiniteGroup, GroupError};
use crate::power::{exponent_set_window, PowerGraphBundle};
use crate::product::{
    cartesian_product_graph, classical_weight_pair, generalized_product_graph, product_graph,
    ProductError, ProductKind,
};

/// Upper limit for `max_order` in [`verify_all`].
pub const MAX_SWEEP_ORDER: usize = 64;
pub const DEFAULT_SWEEP_ORDER: usize = 36;
pub const DEFAULT_RANDOM_PAIRS: usize = 50;
pub const RANDOM_GRAPH_MAX_VERTICES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("max order {0} exceeds sweep cap {MAX_SWEEP_ORDER}")]
    MaxOrderTooLarge(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// What a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `P(G1 × G2)` equals the generalized product of `P(G1)` and `P(G2)`
    /// under exponent weights, vertex for vertex.
    PowerGraphOfProduct,
    /// Each classical product is a generalized product with constant weights.
    ClassicalAsGeneralized(ProductKind),
    /// For nontrivial factors `P(G1 × G2)` is not isomorphic to the
    /// cartesian product of the factor power graphs.
    NotCartesian,
    /// `{m ≥ 1 : a^m = b}` is the progression `AP(W(a, b))`.
    ExponentProgression,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::PowerGraphOfProduct => f.write_str("power-graph-of-product"),
            Claim::ClassicalAsGeneralized(kind) => write!(f, "classical-as-generalized/{kind}"),
            Claim::NotCartesian => f.write_str("not-cartesian"),
            Claim::ExponentProgression => f.write_str("exponent-progression"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: Claim,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
    /// Non-empty whenever `passed` is false.
    pub counterexample: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(claim: Claim, instance: String, started: Instant) -> Self {
        VerificationReport {
            claim,
            instance,
            passed: true,
            detail: String::new(),
            counterexample: Vec::new(),
            elapsed: started.elapsed(),
        }
    }

    fn fail(&mut self, line: String) {
        self.passed = false;
        self.counterexample.push(line);
    }
}

fn edge_diff_lines(left: &SimpleGraph, right: &SimpleGraph, names: (&str, &str)) -> Vec<String> {
    left.edge_difference(right)
        .into_iter()
        .map(|(u, v, in_left)| {
            let side = if in_left { names.0 } else { names.1 };
            format!("{} -- {} only in {side}", left.label(u), left.label(v))
        })
        .collect()
}

/// Compares `P(g1 × g2)` with the generalized product of the factor power
/// graphs under their exponent weights, as labeled graphs.
pub fn verify_power_graph_of_product(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let product = g1.direct_product(g2)?;
    let lhs = PowerGraphBundle::new(&product).graph;
    let p1 = PowerGraphBundle::new(g1);
    let p2 = PowerGraphBundle::new(g2);
    let rhs = generalized_product_graph(&p1.graph, &p1.weights, &p2.graph, &p2.weights)?;

    let mut report =
        VerificationReport::new(Claim::PowerGraphOfProduct, product.name().into(), started);
    report.detail = format!(
        "power graph {} edges, generalized product {} edges",
        lhs.edge_count(),
        rhs.edge_count()
    );
    if !graphs_equal_labeled(&lhs, &rhs) {
        let diff = edge_diff_lines(&lhs, &rhs, ("power graph", "generalized product"));
        report.passed = false;
        report.counterexample = if diff.is_empty() {
            vec![format!(
                "vertex counts {} vs {}",
                lhs.vertex_count(),
                rhs.vertex_count()
            )]
        } else {
            diff
        };
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// For nontrivial `g1`, `g2`: the isomorphism checker rejects
/// `P(g1 × g2) ≅ P(g1) □ P(g2)`, the power graph has a universal vertex and
/// the cartesian product has none. Returns `None` when a factor is trivial.
pub fn verify_not_cartesian(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
) -> Result<Option<VerificationReport>, VerifyError> {
    if g1.order() < 2 || g2.order() < 2 {
        return Ok(None);
    }
    let started = Instant::now();
    let product = g1.direct_product(g2)?;
    let power = PowerGraphBundle::new(&product).graph;
    let cartesian = cartesian_product_graph(
        &PowerGraphBundle::new(g1).graph,
        &PowerGraphBundle::new(g2).graph,
    )?;
    let mut report = VerificationReport::new(Claim::NotCartesian, product.name().into(), started);
    report.detail = format!(
        "power graph {} edges, cartesian {} edges",
        power.edge_count(),
        cartesian.edge_count()
    );
    match are_isomorphic(&power, &cartesian) {
        Ok(Some(witness)) => report.fail(format!("isomorphism found: {witness:?}")),
        Ok(None) => {}
        Err(e) => report.fail(format!("isomorphism check failed: {e}")),
    }
    let identity = product.identity();
    if power.degree(identity) + 1 != power.vertex_count() {
        report.fail(format!(
            "identity {} is not universal in the power graph",
            power.label(identity)
        ));
    }
    if let Some(v) = cartesian.universal_vertices().next() {
        report.fail(format!(
            "cartesian product has universal vertex {}",
            cartesian.label(v)
        ));
    }
    report.elapsed = started.elapsed();
    Ok(Some(report))
}

/// For every ordered pair `(a, b)`, the exponents `m ∈ [1, 3·o(a)]` with
/// `a^m = b` are exactly the members of `AP(W(a, b))` in that window.
pub fn verify_exponent_progression(group: &FiniteGroup) -> VerificationReport {
    let started = Instant::now();
    let bundle = PowerGraphBundle::new(group);
    let mut report =
        VerificationReport::new(Claim::ExponentProgression, group.name().into(), started);
    let mut pairs = 0usize;
    for a in group.elements() {
        let window = 3 * group.element_order(a) as u64;
        for b in group.elements() {
            pairs += 1;
            let brute = exponent_set_window(group, a, b, window);
            let weight = bundle.weights.get(a, b);
            let predicted: Vec<u64> = (1..=window).filter(|&m| weight.contains(m)).collect();
            if !brute.iter().copied().eq(predicted.iter().copied()) {
                report.fail(format!(
                    "{} -> {}: exponents {brute:?}, AP{weight} gives {predicted:?}",
                    group.label(a),
                    group.label(b)
                ));
            }
        }
    }
    report.detail = format!("{pairs} ordered pairs");
    report.elapsed = started.elapsed();
    report
}

/// Checks that the constant-weight generalized product reproduces the
/// classical product `kind` on `a` and `b`.
pub fn verify_classical_as_generalized(
    kind: ProductKind,
    a: &SimpleGraph,
    b: &SimpleGraph,
    instance: String,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let (wa, wb) = classical_weight_pair(kind, a, b).expect("classical product kind");
    let expected = product_graph(kind, a, b, None)?;
    let general = generalized_product_graph(a, &wa, b, &wb)?;
    let mut report =
        VerificationReport::new(Claim::ClassicalAsGeneralized(kind), instance, started);
    report.detail = format!("{} edges", expected.edge_count());
    if !graphs_equal_labeled(&expected, &general) {
        report.passed = false;
        report.counterexample = edge_diff_lines(&expected, &general, (kind.name(), "generalized"));
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Random graph on `1..=max_vertices` vertices, each edge present with
/// probability `p`.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, p: f64) -> SimpleGraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// `count` seeded random graph pairs.
pub fn random_graph_pairs(seed: u64, count: usize) -> Vec<(SimpleGraph, SimpleGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_graph(&mut rng, RANDOM_GRAPH_MAX_VERTICES, 0.5);
            let b = random_graph(&mut rng, RANDOM_GRAPH_MAX_VERTICES, 0.5);
            (a, b)
        })
        .collect()
}

/// The sweep family: C1–C12, C2xC2, C2xC4, D3, D4, D5, Q8, S3, S4, keeping
/// those of order at most `max_order`.
pub fn sweep_family(max_order: usize) -> Vec<FiniteGroup> {
    let built = || -> Result<Vec<FiniteGroup>, GroupError> {
        let c = FiniteGroup::cyclic;
        let mut family = (1..=12).map(c).collect::<Result<Vec<_>, _>>()?;
        family.push(c(2)?.direct_product(&c(2)?)?);
        family.push(c(2)?.direct_product(&c(4)?)?);
        for n in 3..=5 {
            family.push(FiniteGroup::dihedral(n)?);
        }
        family.push(FiniteGroup::quaternion8());
        family.push(FiniteGroup::symmetric(3)?);
        family.push(FiniteGroup::symmetric(4)?);
        Ok(family)
    };
    let mut family = built().expect("built-in family constructs");
    family.retain(|g| g.order() <= max_order);
    family
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_order: usize,
    pub seed: u64,
    pub random_pairs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_order: DEFAULT_SWEEP_ORDER,
            seed: 0,
            random_pairs: DEFAULT_RANDOM_PAIRS,
        }
    }
}

/// Ordered pairs from the family whose product order is at most `max_order`.
pub fn sweep_pairs(family: &[FiniteGroup], max_order: usize) -> Vec<(&FiniteGroup, &FiniteGroup)> {
    family
        .iter()
        .flat_map(|g1| family.iter().map(move |g2| (g1, g2)))
        .filter(|(g1, g2)| g1.order() * g2.order() <= max_order)
        .collect()
}

/// Runs every check: the product identity on all family pairs, the
/// cartesian non-isomorphism on nontrivial pairs, the exponent progression
/// on every family member, and the three classical constructions on seeded
/// random graph pairs. Reports come back sorted by claim, then instance.
pub fn verify_all(config: SweepConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    if config.max_order > MAX_SWEEP_ORDER {
        return Err(VerifyError::MaxOrderTooLarge(config.max_order));
    }
    let family = sweep_family(config.max_order);
    let pairs = sweep_pairs(&family, config.max_order);

    let mut reports: Vec<VerificationReport> = pairs
        .par_iter()
        .map(|(g1, g2)| verify_power_graph_of_product(g1, g2))
        .collect::<Result<_, _>>()?;
    let not_cartesian: Vec<Option<VerificationReport>> = pairs
        .par_iter()
        .map(|(g1, g2)| verify_not_cartesian(g1, g2))
        .collect::<Result<_, _>>()?;
    reports.extend(not_cartesian.into_iter().flatten());
    reports.extend(
        family
            .par_iter()
            .map(verify_exponent_progression)
            .collect::<Vec<_>>(),
    );

    let graph_pairs = random_graph_pairs(config.seed, config.random_pairs);
    for kind in [
        ProductKind::Direct,
        ProductKind::Cartesian,
        ProductKind::Normal,
    ] {
        let batch: Vec<VerificationReport> = graph_pairs
            .par_iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let instance = format!(
                    "seed{}#{i:02} ({}v,{}v)",
                    config.seed,
                    a.vertex_count(),
                    b.vertex_count()
                );
                verify_classical_as_generalized(kind, a, b, instance)
            })
            .collect::<Result<_, _>>()?;
        reports.extend(batch);
    }
    reports.sort_by(|x, y| (x.claim, &x.instance).cmp(&(y.claim, &y.instance)));
    Ok(reports)
}

/// Text rendering: one line per report, failures followed by their
/// counterexample lines, then per-claim totals. Timings are included only
/// when asked for, so untimed output is reproducible byte for byte.
pub fn render_reports(reports: &[VerificationReport], timing: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(
            out,
            "{status}  {:<36} {:<24} {}",
            r.claim.to_string(),
            r.instance,
            r.detail
        );
        if timing {
            let _ = write!(out, "  [{:.3} ms]", r.elapsed.as_secs_f64() * 1e3);
        }
        out.push('\n');
        for line in &r.counterexample {
            let _ = writeln!(out, "      {line}");
        }
    }
    out.push_str("\nsummary\n");
    let mut claims: Vec<Claim> = reports.iter().map(|r| r.claim).collect();
    claims.dedup();
    for claim in claims {
        let of_claim = reports.iter().filter(|r| r.claim == claim);
        let (total, failed) =
            of_claim.fold((0, 0), |(t, f), r| (t + 1, f + usize::from(!r.passed)));
        let _ = writeln!(
            out,
            "  {:<36} {:>4} instances {:>4} failed",
            claim.to_string(),
            total,
            failed
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(
        out,
        "  {:<36} {:>4} instances {:>4} failed",
        "total",
        reports.len(),
        failed
    );
    out
}
