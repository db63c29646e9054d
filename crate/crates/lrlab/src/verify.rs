//! Verification driver: runs every check for one parameter tuple or a grid.
//!
//! Checks that depend only on (m, n) — generator properties, brackets,
//! relation sets, the candidate-matrix audit, cochain differentials — are
//! computed once per (m, n) in an [`InstanceContext`] and shared by all
//! (k, l) tuples of that instance. Per-tuple checks cover the factorization
//! identity, the closed-form connection (descent, A-linearity, curvature,
//! traces), and the independent companion-matrix solver.
//!
//! ```
//! use lrlab::verify::{InstanceContext, VerifyOptions};
//!
//! let opts = VerifyOptions::default();
//! let ctx = InstanceContext::new(2, 2, &opts);
//! let report = ctx.verify_tuple(1, 1, &opts);
//! assert!(report.verdict);
//! ```

use crate::connections::{a_linearity_failures, curvature, lift_solver, standard_connection};
use crate::derivations::{
    audit_candidate_syzygy_matrix, ce_differential, standard_generators, CochainValue,
    GeneratorSet, Orientation, PAIRS,
};
use crate::matfac::MatrixFactorization;
use crate::poly::Poly;
use crate::rational::rational_int;
use crate::report::{Check, VerificationReport};
use crate::ring::{HypersurfaceRing, RingElem};
use std::collections::BTreeMap;
use std::time::Instant;

/// Options shared by single-tuple and grid verification.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Coefficient degree bound for representation and lifting; when unset,
    /// each instance uses [`default_degree_bound`].
    pub degree_bound: Option<u32>,
    /// Record wall-clock timings per check. Timed reports are not
    /// byte-stable across runs, so this is off by default.
    pub timings: bool,
}

/// Default coefficient degree bound for an instance.
pub fn default_degree_bound(m: u32, n: u32) -> u32 {
    2 * (m + n)
}

/// Collects per-check wall-clock timings when enabled.
struct Recorder {
    timings: Option<BTreeMap<String, u64>>,
}

impl Recorder {
    fn new(enabled: bool) -> Self {
        Recorder {
            timings: enabled.then(BTreeMap::new),
        }
    }

    fn run<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        match &mut self.timings {
            None => f(),
            Some(map) => {
                let start = Instant::now();
                let value = f();
                map.insert(key.to_string(), start.elapsed().as_millis() as u64);
                value
            }
        }
    }
}

/// Checks shared by every (k, l) tuple of one (m, n) instance.
pub struct InstanceContext {
    ring: HypersurfaceRing,
    gens: GeneratorSet,
    degree_bound: u32,
    shared_checks: BTreeMap<String, Check>,
    shared_timings: Option<BTreeMap<String, u64>>,
}

impl InstanceContext {
    pub fn new(m: u32, n: u32, opts: &VerifyOptions) -> Self {
        let ring = HypersurfaceRing::new(m, n).expect("exponents at least 2");
        let degree_bound = opts.degree_bound.unwrap_or(default_degree_bound(m, n));
        let mut rec = Recorder::new(opts.timings);
        let gens = rec.run("standard_generators", || standard_generators(ring));
        let mut checks = BTreeMap::new();

        for (i, d) in gens.gens.iter().enumerate() {
            let key = format!("generator_derivation_{i}");
            let ok = rec.run(&key, || d.is_derivation());
            checks.insert(
                key,
                Check::from_bool(ok, format!("generator {i} does not map f into (f)")),
            );
        }

        checks.insert(
            "generator_euler_exact".to_string(),
            rec.run("generator_euler_exact", || {
                let f = ring.f();
                let got = gens.gens[0].apply_poly(&f);
                let expect = f.scale(&rational_int(2 * i64::from(m) * i64::from(n)));
                Check::from_bool(
                    got == expect,
                    format!("value on f is {got}, not the exact multiple {expect}"),
                )
            }),
        );

        checks.insert(
            "syzygy_relations".to_string(),
            rec.run("syzygy_relations", || {
                let bad: Vec<usize> = gens
                    .syz
                    .relations
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| !gens.is_relation(r))
                    .map(|(i, _)| i)
                    .collect();
                if bad.is_empty() {
                    Check::pass_with(format!(
                        "{} computed relations, all annihilate the generators",
                        gens.syz.len()
                    ))
                } else {
                    Check::fail(format!("relations {bad:?} fail to annihilate"))
                }
            }),
        );

        checks.insert(
            "syzygy_matrix_audit".to_string(),
            rec.run("syzygy_matrix_audit", || {
                let audit = audit_candidate_syzygy_matrix(&gens);
                let annihilating = audit.entries.iter().filter(|e| e.annihilates).count();
                let id_cols: Vec<usize> = audit
                    .identity_hits()
                    .iter()
                    .filter(|e| e.orientation == Orientation::Columns)
                    .map(|e| e.index)
                    .collect();
                let id_rows: Vec<usize> = audit
                    .identity_hits()
                    .iter()
                    .filter(|e| e.orientation == Orientation::Rows)
                    .map(|e| e.index)
                    .collect();
                let detail = format!(
                    "entries {}, annihilating {annihilating}, identity-assignment \
                     columns {id_cols:?}, rows {id_rows:?}",
                    audit.entries.len()
                );
                if audit.span_consistent() {
                    Check::pass_with(detail)
                } else {
                    Check::fail(format!(
                        "{detail}; some annihilating assignment is outside the computed span"
                    ))
                }
            }),
        );

        checks.insert(
            "bracket_antisymmetry".to_string(),
            rec.run("bracket_antisymmetry", || {
                let ok = (0..4).all(|i| {
                    (i..4).all(|j| {
                        gens.gens[i]
                            .bracket(&gens.gens[j])
                            .add(&gens.gens[j].bracket(&gens.gens[i]))
                            .is_zero()
                    })
                });
                Check::from_bool(ok, "some bracket pair is not antisymmetric")
            }),
        );

        checks.insert(
            "bracket_jacobi".to_string(),
            rec.run("bracket_jacobi", || {
                let g = &gens.gens;
                let ok = (0..4).all(|a| {
                    (0..4).all(|b| {
                        (0..4).all(|c| {
                            g[a].bracket(&g[b].bracket(&g[c]))
                                .add(&g[b].bracket(&g[c].bracket(&g[a])))
                                .add(&g[c].bracket(&g[a].bracket(&g[b])))
                                .is_zero()
                        })
                    })
                });
                Check::from_bool(ok, "some generator triple violates the Jacobi identity")
            }),
        );

        checks.insert(
            "cochain_dd_p0".to_string(),
            rec.run("cochain_dd_p0", || {
                for name in ["x", "y", "z"] {
                    let value: Poly = name.parse().expect("coordinate");
                    let c = CochainValue::new(0, vec![ring.elem(&value)]);
                    let outcome = ce_differential(&c, &gens, degree_bound)
                        .and_then(|dc| ce_differential(&dc, &gens, degree_bound));
                    match outcome {
                        Ok(ddc) if ddc.is_zero() => {}
                        Ok(_) => {
                            return Check::fail(format!("d(d({name})) is nonzero"));
                        }
                        Err(e) => return Check::fail(format!("d(d({name})): {e}")),
                    }
                }
                Check::pass_with("coordinates x, y, z")
            }),
        );

        checks.insert(
            "cochain_dd_p1".to_string(),
            rec.run("cochain_dd_p1", || {
                for (a, b) in [("y", "x"), ("x", "z"), ("z", "y")] {
                    let av = ring.elem(&a.parse().expect("coordinate"));
                    let bv = ring.elem(&b.parse().expect("coordinate"));
                    let values: Vec<RingElem> = gens
                        .gens
                        .iter()
                        .map(|d| av.mul(&d.apply(&bv)))
                        .collect();
                    let c = CochainValue::new(1, values);
                    let outcome = ce_differential(&c, &gens, degree_bound)
                        .and_then(|dc| ce_differential(&dc, &gens, degree_bound));
                    match outcome {
                        Ok(ddc) if ddc.is_zero() => {}
                        Ok(_) => {
                            return Check::fail(format!("d(d({a}*d{b})) is nonzero"));
                        }
                        Err(e) => return Check::fail(format!("d(d({a}*d{b})): {e}")),
                    }
                }
                Check::pass_with("product cochains y*dx, x*dz, z*dy")
            }),
        );

        InstanceContext {
            ring,
            gens,
            degree_bound,
            shared_checks: checks,
            shared_timings: rec.timings,
        }
    }

    pub fn ring(&self) -> HypersurfaceRing {
        self.ring
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Runs the per-tuple checks and assembles the full report.
    pub fn verify_tuple(&self, k: u32, l: u32, opts: &VerifyOptions) -> VerificationReport {
        let mut rec = Recorder::new(opts.timings);
        let mut checks = self.shared_checks.clone();
        let bound = self.degree_bound;

        let mf = MatrixFactorization::new(self.ring, k, l)
            .expect("indices validated before verification");

        checks.insert(
            "matrix_factorization".to_string(),
            rec.run("matrix_factorization", || {
                let failures = mf.mf_check();
                if failures.is_empty() {
                    Check::pass()
                } else {
                    Check::fail(format!(
                        "{} product entries differ from f*I; first: {}",
                        failures.len(),
                        failures[0]
                    ))
                }
            }),
        );

        let conn = rec.run("connection_formulas", || standard_connection(&mf));
        match &conn {
            Ok(_) => {
                checks.insert("connection_formulas".to_string(), Check::pass());
            }
            Err(e) => {
                checks.insert(
                    "connection_formulas".to_string(),
                    Check::domain_violation(e.to_string()),
                );
            }
        }

        match &conn {
            Ok(conn) => {
                for (i, op) in conn.ops.iter().enumerate() {
                    let key = format!("descent_{i}");
                    let ok = rec.run(&key, || op.descends(&mf));
                    checks.insert(
                        key,
                        Check::from_bool(
                            ok,
                            format!("operator {i} does not preserve the column span of phi"),
                        ),
                    );
                }

                checks.insert(
                    "a_linearity".to_string(),
                    rec.run("a_linearity", || {
                        let failures = a_linearity_failures(conn);
                        Check::from_bool(
                            failures.is_empty(),
                            format!("relations {failures:?} are not respected"),
                        )
                    }),
                );

                let mut all_traces_zero = true;
                for &(i, j) in &PAIRS {
                    let flat_key = format!("flat_{i}_{j}");
                    let trace_key = format!("trace_{i}_{j}");
                    let value = rec.run(&flat_key, || curvature(conn, i, j, bound));
                    match value {
                        Ok(r) => {
                            checks.insert(
                                flat_key,
                                Check::from_bool(
                                    r.is_zero_on_module(&mf),
                                    format!("curvature of pair ({i}, {j}) acts nonzero on W"),
                                ),
                            );
                            let trace = r.trace();
                            if !trace.is_zero() {
                                all_traces_zero = false;
                            }
                            checks.insert(
                                trace_key,
                                Check::from_bool(
                                    trace.is_zero(),
                                    format!("trace of pair ({i}, {j}) is {trace}, not 0"),
                                ),
                            );
                        }
                        Err(e) => {
                            all_traces_zero = false;
                            checks.insert(flat_key, Check::fail(e.to_string()));
                            checks.insert(trace_key, Check::fail(e.to_string()));
                        }
                    }
                }

                checks.insert(
                    "c1_trace_zero".to_string(),
                    Check::from_bool(all_traces_zero, "some curvature trace is nonzero"),
                );
            }
            Err(e) => {
                let reason = e.to_string();
                for i in 0..4 {
                    checks.insert(format!("descent_{i}"), Check::skipped(reason.clone()));
                }
                checks.insert("a_linearity".to_string(), Check::skipped(reason.clone()));
                for &(i, j) in &PAIRS {
                    checks.insert(format!("flat_{i}_{j}"), Check::skipped(reason.clone()));
                    checks.insert(format!("trace_{i}_{j}"), Check::skipped(reason.clone()));
                }
                checks.insert("c1_trace_zero".to_string(), Check::skipped(reason));
            }
        }

        for (i, d) in self.gens.gens.iter().enumerate() {
            let key = format!("lift_{i}");
            let outcome = rec.run(&key, || lift_solver(d, &mf, bound));
            checks.insert(
                key,
                match outcome {
                    Ok(_) => Check::pass(),
                    Err(e) => Check::fail(e.to_string()),
                },
            );
        }

        let timings = match (&self.shared_timings, rec.timings) {
            (Some(shared), Some(mut own)) => {
                for (key, value) in shared {
                    own.insert(key.clone(), *value);
                }
                Some(own)
            }
            (None, own) => own,
            (Some(shared), None) => Some(shared.clone()),
        };

        VerificationReport::new(self.ring.m(), self.ring.n(), k, l, bound, checks, timings)
    }
}

/// Selection of one factorization index, or all valid values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexSpec {
    All,
    One(u32),
}

impl IndexSpec {
    /// Concrete values for an instance with upper limit `max` (m for k,
    /// n for l). `One` values outside 1..=max yield an empty list.
    pub fn resolve(self, max: u32) -> Vec<u32> {
        match self {
            IndexSpec::All => (1..=max).collect(),
            IndexSpec::One(v) if (1..=max).contains(&v) => vec![v],
            IndexSpec::One(_) => Vec::new(),
        }
    }
}

/// Verifies every requested tuple, ordered lexicographically by
/// (m, n, k, l). With `jobs > 1` the (m, n) instances run on a local
/// thread pool; the output order does not depend on scheduling.
pub fn run_grid(
    ms: &[u32],
    ns: &[u32],
    k: IndexSpec,
    l: IndexSpec,
    jobs: usize,
    opts: &VerifyOptions,
) -> Vec<VerificationReport> {
    let mut instances: Vec<(u32, u32)> = Vec::new();
    for &m in ms {
        for &n in ns {
            instances.push((m, n));
        }
    }

    let verify_instance = |&(m, n): &(u32, u32)| -> Vec<VerificationReport> {
        let ctx = InstanceContext::new(m, n, opts);
        let mut reports = Vec::new();
        for kk in k.resolve(m) {
            for ll in l.resolve(n) {
                reports.push(ctx.verify_tuple(kk, ll, opts));
            }
        }
        reports
    };

    let grouped: Vec<Vec<VerificationReport>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            instances.par_iter().map(verify_instance).collect()
        })
    } else {
        instances.iter().map(verify_instance).collect()
    };

    grouped.into_iter().flatten().collect()
}
