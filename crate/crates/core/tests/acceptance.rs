//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use tropbasis::basis::decompose_vector;
use tropbasis::oracle::{has_positive_cycle, oracle_candidates};
use tropbasis::random::{dense_system, random_system, rng, EntryDist};
use tropbasis::tropical::is_subeigen;
use tropbasis::{
    build_akl, compute_basis, decompose, enumerate_candidates, kleene_star, oracle_basis, star_akl, Basis,
    CanonicalVec, TropError, TropMatrix, TropScalar, TropVector, TwoRowSystem,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn canon(vs: &[TropVector]) -> BTreeSet<CanonicalVec> {
    vs.iter().map(CanonicalVec::from_vector).collect()
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// The fuzz campaign shared by criteria 4 and 5: n cycles through 1..=6.
fn fuzz_systems() -> impl Iterator<Item = TwoRowSystem> {
    (0..1200u64).map(|seed| random_system(&mut rng(seed), 1 + (seed % 6) as usize, EntryDist::FUZZ))
}

fn example1_golden() -> Check {
    let sys = example1();
    let start = Instant::now();
    let basis = compute_basis(&sys);
    let elapsed = start.elapsed();
    let expected = [
        combo(4, &[(2, 0)]),
        combo(4, &[(2, 0), (4, 0)]),
        combo(4, &[(2, 3), (1, 0)]),
        combo(4, &[(2, 2), (3, 0)]),
    ];
    ensure(basis.canonical_set() == canon(&expected), || {
        format!("basis differs: {:?}", basis.canonical_set())
    })?;
    let candidates = enumerate_candidates(&sys, &sys.classify());
    for v in [
        combo(4, &[(2, 5), (1, 2), (4, 0)]),
        combo(4, &[(2, 7), (1, 4), (3, 0)]),
    ] {
        let c = CanonicalVec::from_vector(&v);
        ensure(candidates.iter().any(|g| g.canonical() == c), || {
            format!("{v} is not a candidate")
        })?;
        ensure(!basis.contains_proportional(&v), || format!("{v} kept"))?;
        ensure(decompose_vector(&v, basis.generators()).is_some(), || {
            format!("{v} not generated")
        })?;
    }
    ensure(elapsed < Duration::from_millis(100), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "4 generators, 2 redundant candidates rejected, {:.3} ms",
        ms(elapsed)
    ))
}

fn example2_golden() -> Check {
    let sys = example2();
    let start = Instant::now();
    let basis = compute_basis(&sys);
    let elapsed = start.elapsed();
    let n = 7;
    let expected = [
        combo(n, &[(1, 0)]),
        combo(n, &[(1, 0), (4, 0)]),
        combo(n, &[(1, 4), (5, 0)]),
        combo(n, &[(1, 2), (6, 0)]),
        combo(n, &[(1, 2), (2, 0)]),
        combo(n, &[(1, 3), (3, 0)]),
        combo(n, &[(1, 6), (7, 0)]),
        combo(n, &[(6, 2), (3, 0)]),
        combo(n, &[(3, 0), (6, 3)]),
        combo(n, &[(1, 3), (3, 0), (4, 5)]),
        combo(n, &[(1, 3), (3, 0), (5, 1)]),
        combo(n, &[(1, 4), (3, 1), (7, 0)]),
        combo(n, &[(2, 2), (3, 0), (6, 3)]),
        combo(n, &[(6, 2), (3, 0), (4, 5)]),
        combo(n, &[(6, 2), (3, 0), (5, 1)]),
        combo(n, &[(6, 3), (3, 1), (7, 0)]),
    ];
    ensure(basis.len() == 16, || format!("{} generators", basis.len()))?;
    ensure(basis.canonical_set() == canon(&expected), || {
        format!("basis differs: {:?}", basis.canonical_set())
    })?;
    ensure(elapsed < Duration::from_millis(100), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("16 generators (1 + 8 + 7), {:.3} ms", ms(elapsed)))
}

fn example2_equalities() -> Check {
    let sys = example2();
    let basis = compute_basis(&sys);
    let mut count = 0;
    for g in basis.iter().filter(|g| g.support().len() == 3) {
        for (r, (lhs, rhs)) in sys.sides(&g.vector()).unwrap().into_iter().enumerate() {
            ensure(lhs == rhs, || {
                format!("{} is strict in inequality {}", g.vector(), r + 1)
            })?;
        }
        count += 1;
    }
    ensure(count == 7, || format!("{count} three-element generators"))?;
    Ok(format!(
        "{count} three-element generators tight in both inequalities"
    ))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut instances = 0;
    let mut generators = 0;
    for (idx, sys) in fuzz_systems().enumerate() {
        let fast = compute_basis(&sys);
        let oracle = oracle_basis(&sys);
        ensure(fast.canonical_set() == oracle.canonical_set(), || {
            format!(
                "seed {idx}: fast {:?} oracle {:?}",
                fast.canonical_set(),
                oracle.canonical_set()
            )
        })?;
        instances += 1;
        generators += fast.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{instances} systems, {generators} generators, {:.1} s",
        elapsed.as_secs_f64()
    ))
}

fn soundness(sys: &TwoRowSystem, basis: &Basis) -> Result<(), String> {
    for (idx, b) in basis.iter().enumerate() {
        ensure(sys.is_solution(&b.vector()).unwrap(), || {
            format!("{} is not a solution", b.vector())
        })?;
        let others = basis.without(idx);
        ensure(decompose(b, &others).is_none(), || {
            format!("{} is generated by the others", b.vector())
        })?;
    }
    for c in oracle_candidates(sys) {
        ensure(decompose(&c, basis.generators()).is_some(), || {
            format!("star column {} not generated", c.vector())
        })?;
    }
    Ok(())
}

fn soundness_campaign() -> Check {
    let mut instances = 0;
    for (idx, sys) in fuzz_systems().enumerate() {
        soundness(&sys, &compute_basis(&sys)).map_err(|e| format!("seed {idx}: {e}"))?;
        instances += 1;
    }
    Ok(format!("{instances} systems: solutions, independent, generating"))
}

fn star_properties() -> Check {
    let mut r = rng(0x5eed);
    let (mut divergent, mut convergent) = (0, 0);
    for case in 0..1500 {
        let n = r.gen_range(1..=8);
        let bottom = r.gen_range(0.2..0.8);
        let m = TropMatrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if r.gen_bool(bottom) {
                                TropScalar::Bottom
                            } else {
                                TropScalar::Finite(r.gen_range(-6..=2i64))
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let cyclic = has_positive_cycle(&m).unwrap();
        match kleene_star(&m) {
            Err(TropError::Divergent) => {
                ensure(cyclic, || {
                    format!("case {case}: Divergent without a positive cycle")
                })?;
                divergent += 1;
            }
            Err(e) => return Err(format!("case {case}: {e}")),
            Ok(s) => {
                ensure(!cyclic, || {
                    format!("case {case}: star computed despite a positive cycle")
                })?;
                ensure(s.mul(&s).unwrap() == s, || format!("case {case}: A*A* != A*"))?;
                ensure(TropMatrix::identity(n).leq(&s), || {
                    format!("case {case}: A* not >= I")
                })?;
                ensure(kleene_star(&s).as_ref() == Ok(&s), || {
                    format!("case {case}: (A*)* != A*")
                })?;
                for t in 0..6 {
                    let y: TropVector = (0..n)
                        .map(|_| {
                            if r.gen_bool(0.3) {
                                TropScalar::Bottom
                            } else {
                                TropScalar::Finite(r.gen_range(-8..=8))
                            }
                        })
                        .collect();
                    // half the probes are forced into the subeigenvector cone
                    let x = if t % 2 == 0 { s.mul_vec(&y).unwrap() } else { y };
                    let sub = is_subeigen(&m, &x).unwrap();
                    ensure(sub == (s.mul_vec(&x).unwrap() == x), || {
                        format!("case {case}: is_subeigen disagrees with A*x = x at {x}")
                    })?;
                }
                convergent += 1;
            }
        }
    }
    ensure(divergent > 100 && convergent > 100, || {
        format!("unbalanced: {divergent} divergent, {convergent} convergent")
    })?;
    Ok(format!(
        "{} matrices ({divergent} divergent, {convergent} convergent)",
        divergent + convergent
    ))
}

fn closed_form_stars() -> Check {
    let mut pairs = 0;
    let mut divergent = 0;
    for seed in 0..1200u64 {
        let sys = random_system(&mut rng(seed), 1 + (seed % 8) as usize, EntryDist::FUZZ);
        let cls = sys.classify();
        for &k in &cls.j1() {
            for &l in &cls.j2() {
                let closed = star_akl(&sys, &cls, k, l);
                let generic = kleene_star(&build_akl(&sys, &cls, k, l).unwrap());
                ensure(closed == generic, || {
                    format!("seed {seed}, (k, l) = ({}, {})", k + 1, l + 1)
                })?;
                pairs += 1;
                divergent += usize::from(generic.is_err());
            }
        }
    }
    Ok(format!(
        "{pairs} pivot pairs ({divergent} divergent) over 1200 systems"
    ))
}

fn complexity() -> Check {
    let sizes = [50usize, 100, 200];
    let mut times = Vec::new();
    let mut report = Vec::new();
    for &n in &sizes {
        let sys = dense_system(n as u64, n);
        let mut best = Duration::MAX;
        let mut size = 0;
        for _ in 0..3 {
            let start = Instant::now();
            let basis = compute_basis(&sys);
            best = best.min(start.elapsed());
            size = basis.len();
            drop(basis);
        }
        times.push(best.as_secs_f64());
        report.push(format!("n={n}: {:.1} ms, {size} generators", ms(best)));
    }
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = times.iter().map(|t| t.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let largest = times[2];
    ensure(largest < 10.0, || format!("n=200 took {largest:.2} s"))?;
    ensure(slope <= 3.5, || {
        format!("log-log slope {slope:.2}; {}", report.join("; "))
    })?;
    Ok(format!("{}; slope {slope:.2}", report.join("; ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Example 1 golden basis", example1_golden),
        ("Example 2 golden basis", example2_golden),
        (
            "Example 2 three-element generators are equalities",
            example2_equalities,
        ),
        (
            "fast basis equals oracle basis on seeded systems",
            oracle_equivalence,
        ),
        ("soundness, independence and generation", soundness_campaign),
        ("Kleene star properties", star_properties),
        ("closed-form stars equal generic stars", closed_form_stars),
        ("complexity smoke test", complexity),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
