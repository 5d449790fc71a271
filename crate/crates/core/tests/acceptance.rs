//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the report prints unconditionally.
//! Expected values are built here from hand-written matrices and index
//! arithmetic, not from the library's own constructors.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use catqm::gen::Gen;
use catqm::iso::{self, IsoKind};
use catqm::laws::run_suite;
use catqm::protocols::{
    bell_maps, cnot_equations, make_bell_base, rel_teleportation_search, swap_projectors, verify_cnot_teleportation,
    verify_entanglement_swap, verify_gate_teleportation, verify_teleportation, TeleportationBase,
};
use catqm::qm::{born, dim_scalar, is_preparation, SpectralDecomposition};
use catqm::{structural_iso, Boolean, ComplexRootTwo as C, Morphism, Scalar, Shape};

type Check = std::result::Result<(), String>;

type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, bound: Duration) -> Check {
    let t = start.elapsed();
    ensure(t < bound, || format!("took {t:?}, bound {bound:?}"))
}

fn q() -> Shape {
    Shape::qubit()
}

fn half() -> C {
    C::rational(1, 2)
}

fn mat(rows: &[&[i64]]) -> Morphism<C> {
    Morphism::from_ints(&q(), &q(), rows).unwrap()
}

/// `(1/2)·1_Q` stacked four times, `Q → 4·Q`, written out entrywise.
fn four_halves() -> Morphism<C> {
    let cod = Shape::copies(4, &q()).unwrap();
    Morphism::from_fn(&q(), &cod, |r, c| if r % 2 == c { half() } else { C::zero() })
}

fn teleportation() -> Check {
    let start = Instant::now();
    let tb = lift(make_bell_base::<C>())?;
    let report = lift(verify_teleportation(&tb))?;
    ensure(report.rhs == four_halves(), || {
        format!("protocol composite:\n{}", report.rhs)
    })?;
    ensure(report.is_equal(), || "verdict unequal".into())?;
    within(start, Duration::from_secs(1))?;
    let mut g = Gen::new(0x7e1e);
    for k in 0..24 {
        let tb = lift(g.teleportation_base::<C>())?;
        let report = lift(verify_teleportation(&tb))?;
        ensure(report.rhs == four_halves(), || format!("random base {k} fails"))?;
    }
    Ok(())
}

fn bell_corrections() -> Check {
    let b = lift(bell_maps::<C>())?;
    let expected = [
        mat(&[&[1, 0], &[0, 1]]),
        mat(&[&[0, 1], &[1, 0]]),
        mat(&[&[1, 0], &[0, -1]]),
        mat(&[&[0, -1], &[1, 0]]),
    ];
    ensure(b == expected, || "Bell maps differ from the Pauli matrices".into())?;
    let one = mat(&[&[1, 0], &[0, 1]]);
    let sigma = mat(&[&[0, 1], &[1, 0]]);
    for (i, bi) in b.iter().take(3).enumerate() {
        ensure(lift(bi.compose(bi))? == one, || {
            format!("beta_{} is not an involution", i + 1)
        })?;
        ensure(bi.adjoint() == *bi, || format!("beta_{} inverse differs", i + 1))?;
    }
    let candidate = lift(b[2].compose(&sigma))?;
    ensure(lift(b[3].compose(&candidate))? == one, || {
        "beta_4 ∘ beta_3 ∘ sigma ≠ 1".into()
    })?;
    ensure(lift(candidate.compose(&b[3]))? == one, || {
        "beta_3 ∘ sigma ∘ beta_4 ≠ 1".into()
    })?;
    ensure(b[3].adjoint() == candidate, || "adjoint of beta_4 differs".into())
}

fn gate_teleportation() -> Check {
    let start = Instant::now();
    let tb = lift(make_bell_base::<C>())?;
    let s = C::half_sqrt2();
    let hadamard = mat(&[&[1, 1], &[1, -1]]).scale(&s);
    let mut gates: Vec<Morphism<C>> = tb.betas().to_vec();
    gates.push(hadamard);
    for f in &gates {
        let report = lift(verify_gate_teleportation(&tb, f, None))?;
        let expected = lift(four_halves().compose(f))?;
        ensure(report.rhs == expected && report.is_equal(), || {
            format!("gate {f} fails")
        })?;
    }
    within(start, Duration::from_secs(1))
}

fn cnot() -> Check {
    let start = Instant::now();
    let tb = lift(make_bell_base::<C>())?;
    let qq = Shape::tensor(&q(), &q());
    let cnot = lift(Morphism::<C>::from_ints(
        &qq,
        &qq,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
    ))?;
    let (assumed, derived) = lift(cnot_equations(&tb, &cnot))?;
    ensure(assumed.len() == 4 && derived.len() == 2, || "equation counts".into())?;
    if let Some(e) = assumed.iter().chain(&derived).find(|e| !e.holds) {
        return Err(format!("{} does not hold", e.name));
    }
    let report = lift(verify_cnot_teleportation(&tb, &cnot))?;
    ensure(report.branches.len() == 16, || {
        format!("{} branches", report.branches.len())
    })?;
    let quarter = C::rational(1, 4);
    for b in &report.branches {
        ensure(b.weight == quarter && b.ok, || format!("branch {} fails", b.index))?;
        ensure(b.composite == cnot.scale(&quarter), || {
            format!("branch {} composite", b.index)
        })?;
    }
    ensure(report.is_equal(), || "verdict unequal".into())?;
    within(start, Duration::from_secs(5))
}

fn swap() -> Check {
    let start = Instant::now();
    let tb = lift(make_bell_base::<C>())?;
    let report = lift(verify_entanglement_swap(&tb))?;
    // Ω: four copies of (1/4)·(⌜1⌝ ⊗ ⌜1⌝), with ⌜1⌝ = |00⟩ + |11⟩ on Q* ⊗ Q
    let pair = Shape::tensor(&Shape::dual(&q()), &q());
    let cod = Shape::copies(4, &Shape::tensor(&pair, &pair)).unwrap();
    let bell = |k: usize| k == 0 || k == 3;
    let omega = Morphism::from_fn(&Shape::tensor(&Shape::unit(), &Shape::unit()), &cod, |r, _| {
        let k = r % 16;
        if bell(k / 4) && bell(k % 4) {
            C::rational(1, 4)
        } else {
            C::zero()
        }
    });
    ensure(report.rhs == omega && report.is_equal(), || {
        format!("swap composite:\n{}", report.rhs)
    })?;
    let p = swap_projectors(&tb);
    let dim = p[0].rows();
    let mut total = Morphism::zero(p[0].dom(), p[0].cod());
    for (i, pi) in p.iter().enumerate() {
        ensure(pi.is_self_adjoint(), || format!("P_{} not self-adjoint", i + 1))?;
        ensure(lift(pi.compose(pi))? == *pi, || format!("P_{} not idempotent", i + 1))?;
        for (j, pj) in p.iter().enumerate() {
            if i != j {
                ensure(lift(pi.compose(pj))?.entries().iter().all(Scalar::is_zero), || {
                    format!("P_{} P_{} ≠ 0", i + 1, j + 1)
                })?;
            }
        }
        // rank one with weight 1/2 · 1/2 · 2: trace 1
        let trace = (0..dim).fold(C::zero(), |acc, k| acc.add(pi.entry(k, k)));
        ensure(trace.is_one(), || format!("trace of P_{} is {trace}", i + 1))?;
        total = lift(total.add(pi))?;
    }
    ensure(total.is_identity(), || "projectors do not sum to 1".into())?;
    ensure(
        report.branches.iter().all(|b| b.ok && b.weight == C::rational(1, 4)),
        || "branch weights".into(),
    )?;
    within(start, Duration::from_secs(5))
}

fn law_suites() -> Check {
    let start = Instant::now();
    let complex = run_suite::<C>(2024, 200);
    let boolean = run_suite::<Boolean>(2024, 200);
    for r in [&complex, &boolean] {
        for law in &r.laws {
            ensure(law.cases == 200 && law.ok(), || {
                format!("{} / {}: {:?}", r.semiring, law.name, law.counterexample)
            })?;
        }
    }
    within(start, Duration::from_secs(10))
}

fn born_rule() -> Check {
    let mut g = Gen::new(0xb0a1);
    let mut pairs = 0;
    while pairs < 60 {
        let a = g.shape(6);
        let sd = lift(g.spectral::<C>(&a))?;
        let psi = g.preparation::<C>(&a);
        ensure(is_preparation(&psi), || "not a preparation".into())?;
        let branches = lift(born(&sd, &psi))?;
        let mut total = C::zero();
        for b in &branches {
            ensure(b.probability.is_self_adjoint(), || {
                format!("probability {}", b.probability)
            })?;
            total = total.add(&b.probability);
        }
        ensure(total.is_one(), || format!("probabilities sum to {total}"))?;
        pairs += 1;
    }
    Ok(())
}

fn projector_laws() -> Check {
    let mut g = Gen::new(0x5bec);
    for k in 0..25 {
        let a = g.shape(6);
        let sd: SpectralDecomposition<C> = lift(g.spectral(&a))?;
        let mut total = Morphism::zero(&a, &a);
        for (i, p) in sd.projectors().iter().enumerate() {
            ensure(p.is_self_adjoint() && lift(p.compose(p))? == *p, || {
                format!("case {k}: P_{i}")
            })?;
            for (j, pj) in sd.projectors().iter().enumerate() {
                if i != j {
                    ensure(lift(p.compose(pj))?.entries().iter().all(Scalar::is_zero), || {
                        format!("case {k}: P_{i} P_{j} ≠ 0")
                    })?;
                }
            }
            total = lift(total.add(p))?;
        }
        ensure(total.is_identity(), || format!("case {k}: projectors do not sum to 1"))?;
    }
    Ok(())
}

fn rel_search() -> Check {
    let start = Instant::now();
    let report = rel_teleportation_search();
    ensure(report.candidates == 65536 && report.bases.is_empty(), || {
        format!("{} bases among {}", report.bases.len(), report.candidates)
    })?;
    ensure(report.unitaries_on_q == 2, || {
        format!("{} unitaries", report.unitaries_on_q)
    })?;
    ensure(report.single_branch_ok, || "single-branch teleport fails".into())?;
    ensure(
        TeleportationBase::<Boolean>::new(
            Boolean(true),
            Morphism::zero(
                &Shape::copies(4, &Shape::unit()).unwrap(),
                &Shape::tensor(&Shape::dual(&q()), &q()),
            ),
        )
        .is_err(),
        || "zero prebase accepted".into(),
    )?;
    let mut g = Gen::new(0xd1);
    for _ in 0..200 {
        let a = g.shape(8);
        ensure(dim_scalar::<Boolean>(&a) == Boolean(true), || format!("dim of {a}"))?;
    }
    within(start, Duration::from_secs(10))
}

/// `perm[c]` is the row of the single `1` in column `c`.
fn matches_perm(m: &Morphism<C>, perm: &[usize]) -> bool {
    m.cols() == perm.len()
        && (0..m.rows()).all(|r| (0..m.cols()).all(|c| m.entry(r, c).is_one() == (perm[c] == r)))
        && m.entries().iter().all(|x| x.is_zero() || x.is_one())
}

fn structural_isos() -> Check {
    let mut g = Gen::new(0x150);
    for _ in 0..30 {
        for kind in IsoKind::ALL {
            let params: Vec<Shape> = match kind {
                IsoKind::DNm => vec![
                    Shape::copies(1 + g.below(3), &Shape::unit()).unwrap(),
                    Shape::copies(1 + g.below(3), &Shape::unit()).unwrap(),
                ],
                _ => (0..kind.arity()).map(|_| g.shape(4)).collect(),
            };
            let m = lift(structural_iso::<C>(kind, &params))?;
            ensure(m.is_unitary(), || format!("{kind} on {params:?} not unitary"))?;
        }
    }
    for k in 0..100 {
        let sh: Vec<Shape> = (0..6).map(|_| g.shape(3)).collect();
        let f = g.morphism::<C>(&sh[0], &sh[3]);
        let k1 = g.morphism::<C>(&sh[1], &sh[4]);
        let h = g.morphism::<C>(&sh[2], &sh[5]);
        let lhs = lift(iso::tau::<C>(&sh[3], &sh[4], &sh[5]).compose(&f.tensor(&k1.biproduct(&h))))?;
        let rhs = lift(
            f.tensor(&k1)
                .biproduct(&f.tensor(&h))
                .compose(&iso::tau(&sh[0], &sh[1], &sh[2])),
        )?;
        ensure(lhs == rhs, || format!("tau naturality case {k}"))?;
    }
    for k in 0..50 {
        let (a, b, c) = (g.shape(4), g.shape(4), g.shape(4));
        let (na, nb, nc) = (a.dim(), b.dim(), c.dim());
        // A ⊗ (B ⊕ C): index x·(nb+nc) + y
        let tau: Vec<usize> = (0..na * (nb + nc))
            .map(|i| {
                let (x, y) = (i / (nb + nc), i % (nb + nc));
                if y < nb {
                    x * nb + y
                } else {
                    na * nb + x * nc + (y - nb)
                }
            })
            .collect();
        ensure(matches_perm(&iso::tau(&a, &b, &c), &tau), || format!("tau case {k}"))?;
        // (A ⊕ B) ⊗ C: index y·nc + z, which is already block order
        let upsilon: Vec<usize> = (0..(na + nb) * nc).collect();
        ensure(matches_perm(&iso::upsilon(&a, &b, &c), &upsilon), || {
            format!("upsilon case {k}")
        })?;
        let sigma: Vec<usize> = (0..na * nb).map(|i| (i % nb) * na + i / nb).collect();
        ensure(matches_perm(&iso::sigma(&a, &b), &sigma), || format!("sigma case {k}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("teleportation yields four halves of the identity", teleportation),
        ("Bell corrections invert as stated", bell_corrections),
        ("gate teleportation with derived corrections", gate_teleportation),
        ("CNOT teleportation over 16 branches", cnot),
        ("entanglement swapping and its projectors", swap),
        ("law suites, 200 cases in both semirings", law_suites),
        ("Born rule over random pairs", born_rule),
        ("projector laws of random spectral decompositions", projector_laws),
        ("Boolean teleportation base search", rel_search),
        ("structural isomorphisms", structural_isos),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({t:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({t:.2?}): {why}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
