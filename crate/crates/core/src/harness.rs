//! Word enumeration and the cross-check suite.
//!
//! Every identity is checked against at least one independent computation:
//! closed forms from the orbit, direct geometry on the grid, the trace-based
//! crossing count, and the braid and its Alexander polynomial.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::braid::{alexander_polynomial, inversion_count, lorenz_braid};
use crate::grid::{self, GridDiagram, Postcondition};
use crate::invariants::{self, InvariantRecord};
use crate::orbit::OrbitCombinatorics;
use crate::unknotting;
use crate::words::{Letter, LorenzWord};

pub const MAX_ENUMERATION_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("maximum length {max_len} exceeds {MAX_ENUMERATION_LENGTH}")]
    BoundTooLarge { max_len: usize },
    #[error("maximum length {max_len} is below 2; the shortest Lorenz word is xy")]
    BoundTooSmall { max_len: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// One representative per primitive binary necklace with both letters, of
/// length `2..=max_len`, ordered by length and then lexicographically.
/// Words of trip number one are kept only if `include_t1` is set.
pub fn enumerate_words(max_len: usize, include_t1: bool) -> Result<Vec<LorenzWord>, HarnessError> {
    if max_len > MAX_ENUMERATION_LENGTH {
        return Err(HarnessError::BoundTooLarge { max_len });
    }
    if max_len < 2 {
        return Err(HarnessError::BoundTooSmall { max_len });
    }
    let mut out = Vec::new();
    for len in 2..=max_len {
        lyndon_words(len, |w| {
            let letters = w
                .iter()
                .map(|&b| if b == 0 { Letter::X } else { Letter::Y })
                .collect();
            let word = LorenzWord::from_letters(letters).expect("Lyndon words are primitive");
            if include_t1 || word.trip_number() > 1 {
                out.push(word);
            }
        });
    }
    Ok(out)
}

/// Binary Lyndon words of exactly length `n` in lexicographic order
/// (Fredricksen-Kessler-Maiorana).
fn lyndon_words(n: usize, mut emit: impl FnMut(&[u8])) {
    let mut a = vec![0u8; n + 1];
    let mut t = n;
    // Iterative form: a[1..=n] holds the current prenecklace.
    loop {
        // Find the rightmost position that can be incremented.
        while t > 0 && a[t] == 1 {
            t -= 1;
        }
        if t == 0 {
            return;
        }
        a[t] += 1;
        let p = t;
        for j in t + 1..=n {
            a[j] = a[j - p];
        }
        if p == n {
            emit(&a[1..=n]);
        }
        t = n;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub word: LorenzWord,
    pub t: usize,
    pub unknotting: Option<usize>,
    pub checks: Vec<CheckResult>,
    /// Whether tracing from some other long horizontal finds a different
    /// number of wrong crossings.
    pub start_dependent: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Command line that reruns this word alone.
    pub fn repro(&self) -> String {
        format!("lorenz verify {}", self.word)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn record(&mut self, name: &str, outcome: Result<(), String>) -> bool {
        let passed = outcome.is_ok();
        self.0.push(CheckResult {
            name: name.to_string(),
            passed,
            detail: outcome.err(),
        });
        passed
    }
}

fn equal<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// Runs every cross-check on one word. Failures are recorded, never raised.
pub fn verify_word(word: &LorenzWord) -> VerificationReport {
    let started = Instant::now();
    let oc = OrbitCombinatorics::new(word);
    let mut checks = Checks(Vec::new());
    checks.record("orbit invariants", oc.check_invariants());

    let record = invariants::closed_form_invariants(&oc).map_err(|e| e.to_string());
    checks.record(
        "closed forms integral",
        record.as_ref().map(|_| ()).map_err(Clone::clone),
    );
    let mut start_dependent = false;
    if let Ok(record) = &record {
        match grid::layout(&oc) {
            Err(e) => {
                checks.record("grid layout", Err(e.to_string()));
            }
            Ok(g) => {
                for p in Postcondition::ALL {
                    checks.record(&p.to_string(), grid::check_postcondition(&g, &oc, p));
                }
                grid_checks(&mut checks, &g, &oc, record);
                start_dependent = is_start_dependent(&g, record.unknotting);
            }
        }
        braid_checks(&mut checks, &oc, record);
    }

    VerificationReport {
        word: word.clone(),
        t: oc.t(),
        unknotting: record.as_ref().ok().map(|r| r.unknotting),
        checks: checks.0,
        start_dependent,
        elapsed: started.elapsed(),
    }
}

fn grid_checks(
    checks: &mut Checks,
    g: &GridDiagram,
    oc: &OrbitCombinatorics,
    record: &InvariantRecord,
) {
    let u = record.unknotting as i64;
    checks.record(
        "A(x-) direct = closed form = u",
        grid::alexander_direct(g)
            .map_err(|e| e.to_string())
            .and_then(|a| {
                equal("direct grading", a, record.alexander_x_minus)?;
                equal("closed form against u", record.alexander_x_minus, u)
            }),
    );

    let report = unknotting::unknotting_set(g);
    checks.record(
        "U = u",
        report.as_ref().map_err(|e| e.to_string()).and_then(|r| {
            equal("U", r.total, u)?;
            equal("trace count", r.trace_wrong as i64, u)
        }),
    );
    checks.record(
        "N_B - N_A = -(t-1)",
        report
            .as_ref()
            .map_err(|e| e.to_string())
            .and_then(|r| equal("N_B - N_A", r.n_b - r.n_a, 1 - oc.t() as i64)),
    );
    checks.record(
        "self-crossings in B and C",
        report.as_ref().map_err(|e| e.to_string()).and_then(|r| {
            equal("self-crossings", r.self_b, oc.b())?;
            // Self-crossings carry equal labels, so the B rule makes them right.
            let wrong_self = r
                .crossings
                .iter()
                .filter(|c| c.region != grid::Region::A && c.wrong && c.strings.0 == c.strings.1)
                .count();
            equal("wrong self-crossings", wrong_self, 0)
        }),
    );
    checks.record(
        "vertical swaps keep N_B - N_A",
        unknotting::central_square(g)
            .map_err(|e| e.to_string())
            .and_then(|sq| {
                let base = sq.epsilon_sum() - sq.delta_sum();
                let t = sq.vertical_labels.len();
                for i in 0..t {
                    for j in i + 1..t {
                        let mut s = sq.clone();
                        s.swap_verticals(i, j);
                        equal(
                            &format!("after swapping {} and {}", i + 1, j + 1),
                            s.epsilon_sum() - s.delta_sum(),
                            base,
                        )?;
                    }
                }
                Ok(())
            }),
    );
    checks.record(
        "u = 0 iff t = 1",
        report.as_ref().map_err(|e| e.to_string()).and_then(|r| {
            equal("empty change set", r.trace_wrong == 0, oc.t() == 1)?;
            equal("zero unknotting number", u == 0, oc.t() == 1)
        }),
    );
    checks.record(
        "word round-trip",
        grid::trace_word(g)
            .map_err(|e| e.to_string())
            .and_then(|w| equal("traced word", &w, oc.word())),
    );
    checks.record(
        "grid JSON round-trip",
        GridDiagram::from_json(&g.to_json())
            .map_err(|e| e.to_string())
            .and_then(|back| {
                if &back == g {
                    Ok(())
                } else {
                    Err("imported grid differs".into())
                }
            }),
    );
}

fn is_start_dependent(g: &GridDiagram, u: usize) -> bool {
    (2..=g.t()).any(|k| match unknotting::classify_by_trace_from(g, k) {
        Ok(crossings) => crossings.iter().filter(|c| c.wrong).count() != u,
        Err(_) => true,
    })
}

fn braid_checks(checks: &mut Checks, oc: &OrbitCombinatorics, record: &InvariantRecord) {
    let braid = lorenz_braid(oc);
    let u = record.unknotting as i64;
    checks.record("braid crossings = c", {
        equal("inversions", inversion_count(&braid), braid.k)
            .and_then(|_| equal("braid crossings", braid.k, record.crossings_total))
    });
    checks.record(
        "(k - n + 1)/2 = u",
        invariants::positive_braid_unknotting(braid.k as i64, braid.strands as i64)
            .map_err(|e| e.to_string())
            .and_then(|v| equal("positive braid unknotting number", v, u)),
    );
    checks.record(
        "Alexander polynomial",
        alexander_polynomial(&braid)
            .map_err(|e| e.to_string())
            .and_then(|delta| {
                equal(
                    "value at 1",
                    delta.eval_one().map_err(|e| e.to_string())?,
                    1,
                )?;
                equal(
                    "degree spread",
                    delta.max_degree() - delta.min_degree(),
                    2 * u,
                )?;
                let symmetric = (delta.min_degree()..=delta.max_degree())
                    .all(|e| delta.coefficient(e) == delta.coefficient(-e));
                equal("symmetric", symmetric, true)
            }),
    );
}

/// How to spread corpus verification over threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    /// `jobs = None` uses the default thread count. Without the `parallel`
    /// feature this runs serially.
    Parallel {
        jobs: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub word: LorenzWord,
    pub check: String,
    pub detail: Option<String>,
    pub repro: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthTally {
    pub length: usize,
    pub words: usize,
    pub passed: usize,
}

/// Aggregate result of a corpus run. Independent of thread count and
/// scheduling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub max_len: usize,
    pub words: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
    pub by_length: Vec<LengthTally>,
    pub trip_one_words: usize,
    pub max_unknotting: usize,
    /// Words where starting the trace at another long horizontal changes
    /// the wrong-crossing count.
    pub start_dependent_words: usize,
    pub failures: Vec<Failure>,
}

pub fn verify_words(
    words: &[LorenzWord],
    execution: Execution,
) -> Result<Vec<VerificationReport>, HarnessError> {
    match execution {
        Execution::Serial => Ok(words.iter().map(verify_word).collect()),
        Execution::Parallel { jobs } => parallel_verify(words, jobs),
    }
}

#[cfg(feature = "parallel")]
fn parallel_verify(
    words: &[LorenzWord],
    jobs: Option<usize>,
) -> Result<Vec<VerificationReport>, HarnessError> {
    use rayon::prelude::*;
    let run = || words.par_iter().map(verify_word).collect();
    match jobs {
        None => Ok(run()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(run))
            .map_err(|e| HarnessError::ThreadPool(e.to_string())),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_verify(
    words: &[LorenzWord],
    _jobs: Option<usize>,
) -> Result<Vec<VerificationReport>, HarnessError> {
    Ok(words.iter().map(verify_word).collect())
}

/// Verifies every word up to `max_len`, trip number one included.
pub fn verify_corpus(max_len: usize, execution: Execution) -> Result<CorpusSummary, HarnessError> {
    let words = enumerate_words(max_len, true)?;
    let reports = verify_words(&words, execution)?;
    Ok(summarize(max_len, &reports))
}

pub fn summarize(max_len: usize, reports: &[VerificationReport]) -> CorpusSummary {
    let mut reports: Vec<&VerificationReport> = reports.iter().collect();
    reports.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    let mut by_length: Vec<LengthTally> = Vec::new();
    for r in &reports {
        let len = r.word.len();
        if by_length.last().map(|t| t.length) != Some(len) {
            by_length.push(LengthTally {
                length: len,
                words: 0,
                passed: 0,
            });
        }
        let tally = by_length.last_mut().expect("just pushed");
        tally.words += 1;
        tally.passed += r.passed() as usize;
    }
    let failures: Vec<Failure> = reports
        .iter()
        .filter_map(|r| {
            r.first_failure().map(|c| Failure {
                word: r.word.clone(),
                check: c.name.clone(),
                detail: c.detail.clone(),
                repro: r.repro(),
            })
        })
        .collect();
    let passed = reports.len() - failures.len();
    CorpusSummary {
        max_len,
        words: reports.len(),
        passed,
        failed: failures.len(),
        all_passed: failures.is_empty(),
        by_length,
        trip_one_words: reports.iter().filter(|r| r.t == 1).count(),
        max_unknotting: reports
            .iter()
            .filter_map(|r| r.unknotting)
            .max()
            .unwrap_or(0),
        start_dependent_words: reports.iter().filter(|r| r.start_dependent).count(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[LorenzWord]) -> Vec<String> {
        v.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(names(&enumerate_words(2, true).unwrap()), ["xy"]);
        assert_eq!(
            names(&enumerate_words(3, true).unwrap()),
            ["xy", "xxy", "xyy"]
        );
        let five = names(&enumerate_words(5, true).unwrap());
        assert_eq!(five.iter().filter(|w| *w == "xyxyy").count(), 1);
        assert_eq!(
            names(&enumerate_words(5, false).unwrap()),
            ["xxyxy", "xyxyy"]
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(
            enumerate_words(1, true),
            Err(HarnessError::BoundTooSmall { max_len: 1 })
        );
        assert_eq!(
            enumerate_words(65, true),
            Err(HarnessError::BoundTooLarge { max_len: 65 })
        );
    }

    #[test]
    fn verify_known_words() {
        for (w, u) in [("xxxyyyxyy", 2), ("xyxyy", 1), ("xxy", 0)] {
            let r = verify_word(&w.parse().unwrap());
            assert!(r.passed(), "{w}: {:?}", r.first_failure());
            assert_eq!(r.unknotting, Some(u));
        }
    }

    #[test]
    fn corpus_to_six() {
        let s = verify_corpus(6, Execution::Serial).unwrap();
        assert!(s.all_passed, "{:?}", s.failures);
        assert_eq!(s.words, 1 + 2 + 3 + 6 + 9);
    }

    #[test]
    fn summary_ignores_report_order() {
        let words = enumerate_words(5, true).unwrap();
        let mut reports = verify_words(&words, Execution::Serial).unwrap();
        let forward = summarize(5, &reports);
        reports.reverse();
        assert_eq!(summarize(5, &reports), forward);
    }
}
