//! Exhaustive checks of the tableau identities over enumerated universes.
//!
//! Every check walks its universe in a fixed order (shapes by size then
//! lexicographically, tableaux lexicographically), so reports are
//! deterministic and the first recorded failure is the smallest one.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{decompose, recompose};
use crate::jdt::{rectify, rectify_with_rng, slide_cells, slide_into};
use crate::plinth::{plinth_of, plinth_volume};
use crate::qseries::{genfun_bruteforce, genfun_plinth, genfun_stanley};
use crate::schutzenberger::{evacuate, reverse_complement, rs_insert, skew_evacuate, skew_evacuate_with, Permutation};
use crate::shape::{enumerate_partitions, enumerate_skew_shapes, SkewShape};
use crate::tableau::{enumerate_ssyt_bounded, enumerate_syt, enumeration_limit, random_syt, StandardTableau};

/// At most this many failures are stored per report; `failure_count` keeps the total.
pub const MAX_STORED_FAILURES: usize = 20;

/// Tableaux drawn per shape when a shape is larger than the enumeration budget.
pub const SAMPLES_PER_SHAPE: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub universe: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Some shapes exceeded the budget and were sampled rather than enumerated.
    pub sampled: bool,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            universe: universe.into(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            sampled: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn case(&mut self, ok: bool, fail: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(fail());
            }
        }
    }

    /// Appends `other`'s cases and failures after this report's.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        let room = MAX_STORED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.sampled |= other.sampled;
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}] cases={} failures={}", self.check, self.universe, self.cases, self.failure_count)?;
        if self.sampled {
            write!(f, " (sampled)")?;
        }
        for x in &self.failures {
            write!(f, "\n  input: {}\n  expected: {}\n  actual: {}", x.input, x.expected, x.actual)?;
        }
        Ok(())
    }
}

/// Skew shapes with at most `max_cells` cells inside a `max_rows × max_cols` box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    pub max_cells: usize,
    pub max_rows: usize,
    pub max_cols: usize,
}

impl Universe {
    /// Every skew shape with at most `n` cells.
    pub fn cells(n: usize) -> Self {
        Universe { max_cells: n, max_rows: n, max_cols: n }
    }

    pub fn boxed(n: usize, rows: usize, cols: usize) -> Self {
        Universe { max_cells: n, max_rows: rows, max_cols: cols }
    }

    pub fn shapes(&self) -> Vec<SkewShape> {
        enumerate_skew_shapes(self.max_cells, self.max_rows, self.max_cols)
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n<={}", self.max_cells)?;
        if self.max_rows < self.max_cells || self.max_cols < self.max_cells {
            write!(f, ", rows<={}, cols<={}", self.max_rows, self.max_cols)?;
        }
        Ok(())
    }
}

fn straight_shapes(max_cells: usize) -> Vec<SkewShape> {
    enumerate_partitions(max_cells).into_iter().map(SkewShape::straight).collect()
}

fn seed_for(shape: &SkewShape, seed: u64) -> u64 {
    shape.to_string().bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// All standard tableaux of `shape`, or a seeded sample when it is over budget.
fn tableaux_of(shape: &SkewShape, seed: u64) -> (Vec<StandardTableau>, bool) {
    if shape.size() <= enumeration_limit() {
        (enumerate_syt(shape).expect("within budget"), false)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(shape, seed));
        let mut v: Vec<_> = (0..SAMPLES_PER_SHAPE).map(|_| random_syt(shape, &mut rng)).collect();
        v.sort();
        v.dedup();
        (v, true)
    }
}

/// Runs `per_shape` over every shape (in parallel) and merges in shape order.
fn sweep(
    check: &str,
    universe: String,
    shapes: &[SkewShape],
    per_shape: impl Fn(&SkewShape, &mut VerificationReport) + Sync,
) -> VerificationReport {
    let parts: Vec<VerificationReport> = shapes
        .par_iter()
        .map(|s| {
            let mut r = VerificationReport::new(check, universe.clone());
            per_shape(s, &mut r);
            r
        })
        .collect();
    parts.into_iter().fold(VerificationReport::new(check, universe), VerificationReport::merge)
}

fn show(q: &StandardTableau) -> String {
    format!("{} on {}", q.tableau().compact(), q.shape())
}

/// `|p(Q)| = maj(S̃ch(Q))` for every standard tableau in the universe.
pub fn check_main_theorem(u: Universe) -> VerificationReport {
    sweep("main-theorem", u.to_string(), &u.shapes(), |s, r| {
        let (qs, sampled) = tableaux_of(s, 0);
        r.sampled |= sampled;
        for q in qs {
            let lhs = plinth_volume(&q);
            let rhs = skew_evacuate(&q).map(|e| e.maj());
            r.case(rhs.as_ref().ok() == Some(&lhs), || Failure {
                input: show(&q),
                expected: lhs.to_string(),
                actual: match &rhs {
                    Ok(v) => v.to_string(),
                    Err(e) => e.to_string(),
                },
            });
        }
    })
}

fn histogram(v: impl Iterator<Item = u64>) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for x in v {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// Per shape, the multiset of plinth volumes equals the multiset of maj.
pub fn check_equidistribution(u: Universe) -> VerificationReport {
    let shapes: Vec<_> = u.shapes().into_iter().filter(|s| s.size() <= enumeration_limit()).collect();
    sweep("equidistribution", u.to_string(), &shapes, |s, r| {
        let qs = enumerate_syt(s).expect("within budget");
        // the plinth volume is taken from the tableau itself, not the closed form
        let vols = histogram(qs.iter().map(|q| plinth_of(q).volume()));
        let majs = histogram(qs.iter().map(|q| q.maj()));
        r.case(vols == majs, || Failure {
            input: s.to_string(),
            expected: format!("{majs:?}"),
            actual: format!("{vols:?}"),
        });
    })
}

/// Plinth formula, maj formula and direct enumeration agree through `q^trunc`.
pub fn check_genfun_identity(u: Universe, trunc: usize) -> VerificationReport {
    let shapes: Vec<_> = u.shapes().into_iter().filter(|s| s.size() <= enumeration_limit()).collect();
    sweep("genfun-identity", format!("{u}, N={trunc}"), &shapes, |s, r| {
        let a = genfun_plinth(s, trunc).expect("within budget");
        let b = genfun_stanley(s, trunc).expect("within budget");
        let c = genfun_bruteforce(s, trunc).expect("within budget");
        r.case(a == c && b == c, || Failure {
            input: s.to_string(),
            expected: c.to_json_array(),
            actual: format!("plinth {} stanley {}", a.to_json_array(), b.to_json_array()),
        });
    })
}

/// Every single slide (inward into an inner corner or outward into an outer
/// corner) preserves the descent set.
pub fn check_descent_invariance(u: Universe) -> VerificationReport {
    sweep("descent-invariance", u.to_string(), &u.shapes(), |s, r| {
        let (qs, sampled) = tableaux_of(s, 0);
        r.sampled |= sampled;
        for q in qs {
            let des = q.descent_set();
            for (c, dir) in slide_cells(&q) {
                let after = slide_into(&q, c, dir).map(|t| t.descent_set());
                r.case(after.as_ref().ok() == Some(&des), || Failure {
                    input: format!("{} slide {dir:?} into {c}", show(&q)),
                    expected: format!("{des:?}"),
                    actual: format!("{after:?}"),
                });
            }
        }
    })
}

/// `Sch² = id` on straight shapes with at most `max_straight` cells, and on
/// skew shapes with `|μ| ≤ max_inner` and at most `max_skew` cells:
/// `S̃ch² = id`, the shape is kept, and the result does not depend on the
/// auxiliary straight tableau of the inner shape.
pub fn check_involutions(max_straight: usize, max_skew: usize, max_inner: usize) -> VerificationReport {
    let straight: Vec<_> = straight_shapes(max_straight);
    let r1 = sweep("involutions", format!("straight n<={max_straight}"), &straight, |s, r| {
        let (qs, sampled) = tableaux_of(s, 0);
        r.sampled |= sampled;
        for q in qs {
            let back = evacuate(&evacuate(&q).unwrap()).unwrap();
            r.case(back == q, || Failure {
                input: format!("Sch(Sch({}))", show(&q)),
                expected: q.tableau().compact(),
                actual: back.tableau().compact(),
            });
        }
    });
    let skew: Vec<_> = Universe::cells(max_skew)
        .shapes()
        .into_iter()
        .filter(|s| s.canonical().inner().size() <= max_inner)
        .collect();
    let universe = format!("skew n<={max_skew}, |inner|<={max_inner}");
    let r2 = sweep("involutions", universe.clone(), &skew, |s, r| {
        let inner = SkewShape::straight(s.canonical().inner().clone());
        let ps = enumerate_syt(&inner).expect("inner shape is small");
        let (qs, sampled) = tableaux_of(s, 0);
        r.sampled |= sampled;
        for q in qs {
            let e = skew_evacuate(&q).unwrap();
            let back = skew_evacuate(&e).unwrap();
            r.case(back == q, || Failure {
                input: format!("skew Sch twice of {}", show(&q)),
                expected: q.tableau().compact(),
                actual: back.tableau().compact(),
            });
            r.case(e.shape() == q.shape(), || Failure {
                input: format!("shape of skew Sch of {}", show(&q)),
                expected: q.shape().to_string(),
                actual: e.shape().to_string(),
            });
            for p in &ps {
                let other = skew_evacuate_with(&q, p).unwrap();
                r.case(other == e, || Failure {
                    input: format!("skew Sch of {} via {}", show(&q), p.tableau().compact()),
                    expected: e.tableau().compact(),
                    actual: other.tableau().compact(),
                });
            }
        }
    });
    let mut merged = r1.merge(r2);
    merged.universe = format!("straight n<={max_straight}; {universe}");
    merged
}

/// For every `w ∈ S_n`, `n ≤ max_n`: `Des(Q) = Des(w)` and `Sch(Q)` is the
/// recording tableau of the reverse complement of `w`.
pub fn check_rsk_facts(max_n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("rsk-facts", format!("S_n, n<={max_n}"));
    for n in 0..=max_n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let part = perms
            .par_iter()
            .map(|w| {
                let mut r = VerificationReport::new("rsk-facts", "");
                let q = rs_insert(w).recording;
                r.case(q.descent_set() == w.descent_set(), || Failure {
                    input: format!("Des of {:?}", w.images()),
                    expected: format!("{:?}", w.descent_set()),
                    actual: format!("{:?}", q.descent_set()),
                });
                let lhs = evacuate(&q).unwrap();
                let rhs = rs_insert(&reverse_complement(w)).recording;
                r.case(lhs == rhs, || Failure {
                    input: format!("Sch of recording tableau of {:?}", w.images()),
                    expected: rhs.tableau().compact(),
                    actual: lhs.tableau().compact(),
                });
                r
            })
            .collect::<Vec<_>>();
        for p in part {
            r = r.merge(p);
        }
    }
    r
}

/// `maj(Q) + maj(Sch(Q)) = n·|Des(Q)|` on straight shapes with at most `max_cells` cells.
pub fn check_maj_complement(max_cells: usize) -> VerificationReport {
    let straight: Vec<_> = straight_shapes(max_cells);
    sweep("maj-complement", format!("straight n<={max_cells}"), &straight, |s, r| {
        let (qs, sampled) = tableaux_of(s, 0);
        r.sampled |= sampled;
        for q in qs {
            let n = q.size() as u64;
            let lhs = q.maj() + evacuate(&q).unwrap().maj();
            let rhs = n * q.descent_set().len() as u64;
            r.case(lhs == rhs, || Failure { input: show(&q), expected: rhs.to_string(), actual: lhs.to_string() });
        }
    })
}

/// `trials` seeded random rectification orders per tableau all agree with
/// the row-major rectification.
pub fn check_rectification_uniqueness(u: Universe, trials: usize, seed: u64) -> VerificationReport {
    sweep("rectification-uniqueness", format!("{u}, {trials} orders, seed {seed}"), &u.shapes(), |s, r| {
        let (qs, sampled) = tableaux_of(s, seed);
        r.sampled |= sampled;
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(s, seed));
        for q in qs {
            let reference = rectify(&q);
            let mut bad = None;
            for _ in 0..trials {
                let other = rectify_with_rng(&q, &mut rng);
                if other != reference && bad.is_none() {
                    bad = Some(other);
                }
            }
            r.case(bad.is_none(), || Failure {
                input: show(&q),
                expected: reference.tableau().compact(),
                actual: bad.unwrap().tableau().compact(),
            });
        }
    })
}

/// `recompose ∘ decompose = id` on semistandard tableaux with entries
/// `≤ max_entry`, the converse on the resulting pairs, and volume preservation.
pub fn check_bijection(u: Universe, max_entry: u32) -> VerificationReport {
    sweep("bijection", format!("{u}, entries<={max_entry}"), &u.shapes(), |s, r| {
        for t in enumerate_ssyt_bounded(s, max_entry) {
            let d = decompose(&t).unwrap();
            let back = recompose(&d.witness, &d.diagram).unwrap();
            r.case(back == t, || Failure {
                input: t.compact(),
                expected: t.compact(),
                actual: back.compact(),
            });
            let again = decompose(&back).unwrap();
            r.case(again == d, || Failure {
                input: format!("{} with {}", d.witness.tableau().compact(), d.diagram),
                expected: d.diagram.to_string(),
                actual: again.diagram.to_string(),
            });
            let vol = d.plinth.volume() + d.diagram.sum();
            r.case(vol == t.volume(), || Failure {
                input: t.compact(),
                expected: t.volume().to_string(),
                actual: vol.to_string(),
            });
        }
    })
}

/// Settings for [`check_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_cells: usize,
    pub trunc: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_cells: 8, trunc: 12, seed: 0 }
    }
}

/// Every check, with universes scaled from `max_cells`.
pub fn check_all(cfg: VerifyConfig) -> Vec<VerificationReport> {
    let m = cfg.max_cells;
    let small = m.saturating_sub(2);
    vec![
        check_main_theorem(Universe::boxed(m, 5, 5)),
        check_equidistribution(Universe::boxed(m, 5, 5)),
        check_genfun_identity(Universe::cells(small), cfg.trunc),
        check_descent_invariance(Universe::cells(small)),
        check_involutions(m, small, 3),
        check_rsk_facts(small),
        check_maj_complement(m),
        check_rectification_uniqueness(Universe::boxed(m.saturating_sub(1).min(7), 5, 5), 50, cfg.seed),
        check_bijection(Universe::cells(small.min(5)), 3),
    ]
}
