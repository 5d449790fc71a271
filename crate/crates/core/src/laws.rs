//! Randomized checks of the compact closed, dagger and biproduct laws.
//!
//! Every law draws its own inputs from a [`Gen`] seeded by the suite seed and
//! the law name, so results do not depend on which other laws run.

use serde::Serialize;

use crate::error::Result;
use crate::gen::Gen;
use crate::iso;
use crate::morphism::Morphism;
use crate::qm::Basis;
use crate::scalar::Scalar;
use crate::shape::Shape;

/// `Err` carries a rendered counterexample.
type Outcome = std::result::Result<(), String>;

type Law = fn(&mut Gen) -> Result<Outcome>;

/// Per-law outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub counterexample: Option<String>,
}

impl LawResult {
    pub fn ok(&self) -> bool {
        self.passed == self.cases
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub semiring: &'static str,
    pub seed: u64,
    pub count: usize,
    /// No cases were run, so every law holds trivially.
    pub vacuous: bool,
    pub laws: Vec<LawResult>,
    pub passed: bool,
}

fn law_list<S: Scalar>() -> Vec<(&'static str, Law)> {
    vec![
        ("absorption", absorption::<S>),
        ("compositionality", compositionality::<S>),
        ("compositional-cut", compositional_cut::<S>),
        ("backward-absorption", backward_absorption::<S>),
        ("coname-absorption", coname_absorption::<S>),
        ("coname-backward-absorption", coname_backward_absorption::<S>),
        ("dual-unit-symmetry", dual_unit_symmetry::<S>),
        ("snake", snake::<S>),
        ("dual-via-units", dual_via_units::<S>),
        ("point-adjoint", point_adjoint::<S>),
        ("adjoint-functor", adjoint_functor::<S>),
        ("adjoint-via-duals", adjoint_via_duals::<S>),
        ("inner-product-adjoint", inner_product_adjoint::<S>),
        ("adjoint-inner-product", adjoint_inner_product::<S>),
        ("unitary-preserves-inner-product", unitary_preserves_inner_product::<S>),
        ("adjoint-matrix-in-bases", adjoint_matrix_in_bases::<S>),
        (
            "inner-product-preservation-implies-unitary",
            preservation_implies_unitary::<S>,
        ),
        ("additive-structure", additive_structure::<S>),
        ("scalar-naturality", scalar_naturality::<S>),
        ("tensor-bifunctoriality", tensor_bifunctoriality::<S>),
        ("tau-naturality", tau_naturality::<S>),
    ]
}

/// Names of all laws, in run order.
pub fn law_names() -> Vec<&'static str> {
    law_list::<crate::scalar::Boolean>()
        .into_iter()
        .map(|(n, _)| n)
        .collect()
}

fn law_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the name, mixed with the suite seed
    let h = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    });
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

pub fn run_law<S: Scalar>(name: &'static str, law: Law, seed: u64, count: usize) -> LawResult {
    let mut gen = Gen::new(law_seed(seed, name));
    let mut passed = 0;
    let mut counterexample = None;
    for _ in 0..count {
        match law(&mut gen) {
            Ok(Ok(())) => passed += 1,
            Ok(Err(cx)) => {
                counterexample.get_or_insert(cx);
            }
            Err(e) => {
                counterexample.get_or_insert(format!("error: {e}"));
            }
        }
    }
    LawResult {
        name,
        cases: count,
        passed,
        counterexample,
    }
}

/// Runs every law `count` times.
pub fn run_suite<S: Scalar>(seed: u64, count: usize) -> SuiteReport {
    let laws: Vec<LawResult> = law_list::<S>()
        .into_iter()
        .map(|(name, law)| run_law::<S>(name, law, seed, count))
        .collect();
    SuiteReport {
        semiring: S::NAME,
        seed,
        count,
        vacuous: count == 0,
        passed: laws.iter().all(LawResult::ok),
        laws,
    }
}

fn same<S: Scalar>(lhs: &Morphism<S>, rhs: &Morphism<S>, inputs: &[&Morphism<S>]) -> Outcome {
    if lhs == rhs {
        return Ok(());
    }
    let mut out = String::new();
    for (i, m) in inputs.iter().enumerate() {
        out.push_str(&format!("input {i}: {m}"));
    }
    out.push_str(&format!("lhs: {lhs}rhs: {rhs}"));
    Err(out)
}

fn same_scalar<S: Scalar>(lhs: &S, rhs: &S, inputs: &[&Morphism<S>]) -> Outcome {
    same(&Morphism::scalar(lhs.clone()), &Morphism::scalar(rhs.clone()), inputs)
}

fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().collect()
}

const MAX: usize = 3;

fn id<S: Scalar>(a: &Shape) -> Morphism<S> {
    Morphism::identity(a)
}

fn d(a: &Shape) -> Shape {
    Shape::dual(a)
}

/// `(1_{A*} ⊗ g) ∘ ⌜f⌝ = ⌜g ∘ f⌝`
fn absorption<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&b, &c);
    let lhs = id(&d(&a)).tensor(&h).compose(&f.name())?;
    Ok(same(&lhs, &h.compose(&f)?.name(), &[&f, &h]))
}

/// `λ⁻¹ ∘ (⌞f⌟ ⊗ 1_C) ∘ α ∘ (1_A ⊗ ⌜g⌝) ∘ ρ_A = g ∘ f`
fn compositionality<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&b, &c);
    let lhs = iso::rho::<S>(&a)
        .then(&id(&a).tensor(&h.name()))?
        .then(&iso::alpha(&a, &d(&b), &c))?
        .then(&f.coname().tensor(&id(&c)))?
        .then(&iso::lambda_inv(&c))?;
    Ok(same(&lhs, &h.compose(&f)?, &[&f, &h]))
}

/// `(ρ⁻¹ ⊗ 1_D) ∘ (1_{A*} ⊗ ⌞g⌟ ⊗ 1_D) ∘ (⌜f⌝ ⊗ ⌜h⌝) ∘ ρ_I = ⌜h ∘ g ∘ f⌝`
fn compositional_cut<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c, dd) = (g.shape(2), g.shape(MAX), g.shape(MAX), g.shape(2));
    let f = g.morphism::<S>(&a, &b);
    let m = g.morphism::<S>(&b, &c);
    let h = g.morphism::<S>(&c, &dd);
    let ad_b = Shape::tensor(&d(&a), &b);
    let lhs = iso::rho::<S>(&Shape::unit())
        .then(&f.name().tensor(&h.name()))?
        .then(&iso::alpha(&ad_b, &d(&c), &dd))?
        .then(&iso::alpha_inv::<S>(&d(&a), &b, &d(&c)).tensor(&id(&dd)))?
        .then(&id(&d(&a)).tensor(&m.coname()).tensor(&id(&dd)))?
        .then(&iso::rho_inv::<S>(&d(&a)).tensor(&id(&dd)))?;
    let rhs = h.compose(&m)?.compose(&f)?.name();
    Ok(same(&lhs, &rhs, &[&f, &m, &h]))
}

/// `(g* ⊗ 1_B) ∘ ⌜f⌝ = ⌜f ∘ g⌝`
fn backward_absorption<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let k = g.morphism::<S>(&c, &a);
    let lhs = k.dual().tensor(&id(&b)).compose(&f.name())?;
    Ok(same(&lhs, &f.compose(&k)?.name(), &[&f, &k]))
}

/// `⌞g⌟ ∘ (f ⊗ 1_{C*}) = ⌞g ∘ f⌟`
fn coname_absorption<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&b, &c);
    let lhs = h.coname().compose(&f.tensor(&id(&d(&c))))?;
    Ok(same(&lhs, &h.compose(&f)?.coname(), &[&f, &h]))
}

/// `⌞f⌟ ∘ (1_A ⊗ g*) = ⌞g ∘ f⌟`
fn coname_backward_absorption<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&b, &c);
    let lhs = f.coname().compose(&id(&a).tensor(&h.dual()))?;
    Ok(same(&lhs, &h.compose(&f)?.coname(), &[&f, &h]))
}

/// `η_{A*} = σ_{A*,A} ∘ η_A` and `ε_{A*} = ε_A ∘ σ_{A*,A}`
fn dual_unit_symmetry<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let a = g.shape(4);
    let sigma = iso::sigma::<S>(&d(&a), &a);
    Ok(all([
        same(&Morphism::eta(&d(&a)), &sigma.compose(&Morphism::eta(&a))?, &[]),
        same(
            &Morphism::epsilon(&d(&a)),
            &Morphism::<S>::epsilon(&a).compose(&sigma)?,
            &[],
        ),
    ]))
}

/// Both triangle identities.
fn snake<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let a = g.shape(4);
    let ad = d(&a);
    let left = iso::rho::<S>(&a)
        .then(&id(&a).tensor(&Morphism::eta(&a)))?
        .then(&iso::alpha(&a, &ad, &a))?
        .then(&Morphism::epsilon(&a).tensor(&id(&a)))?
        .then(&iso::lambda_inv(&a))?;
    let right = iso::lambda::<S>(&ad)
        .then(&Morphism::eta(&a).tensor(&id(&ad)))?
        .then(&iso::alpha_inv(&ad, &a, &ad))?
        .then(&id(&ad).tensor(&Morphism::epsilon(&a)))?
        .then(&iso::rho_inv(&ad))?;
    Ok(all([same(&left, &id(&a), &[]), same(&right, &id(&ad), &[])]))
}

/// `f* = ρ⁻¹ ∘ (1_{A*} ⊗ ε_B) ∘ α⁻¹ ∘ ((1_{A*} ⊗ f) ⊗ 1_{B*}) ∘ (η_A ⊗ 1_{B*}) ∘ λ`
fn dual_via_units<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b) = (g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let (ad, bd) = (d(&a), d(&b));
    let lhs = iso::lambda::<S>(&bd)
        .then(&Morphism::eta(&a).tensor(&id(&bd)))?
        .then(&id(&ad).tensor(&f).tensor(&id(&bd)))?
        .then(&iso::alpha_inv(&ad, &b, &bd))?
        .then(&id(&ad).tensor(&Morphism::epsilon(&b)))?
        .then(&iso::rho_inv(&ad))?;
    Ok(same(&lhs, &f.dual(), &[&f]))
}

/// `ψ† = ε_A ∘ (1_A ⊗ ψ_*) ∘ (1_A ⊗ u_I⁻¹) ∘ ρ_A`
fn point_adjoint<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let a = g.shape(4);
    let psi = g.state::<S>(&a);
    let lhs = iso::rho::<S>(&a)
        .then(&id(&a).tensor(&iso::u_unit::<S>().adjoint()))?
        .then(&id(&a).tensor(&psi.conj_star()))?
        .then(&Morphism::epsilon(&a))?;
    Ok(same(&lhs, &psi.adjoint(), &[&psi]))
}

/// `(g∘f)† = f†∘g†`, `(f+h)† = f†+h†`, `0† = 0`, `f†† = f`, `1† = 1`,
/// `(f⊗g)† = f†⊗g†`
fn adjoint_functor<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&a, &b);
    let k = g.morphism::<S>(&b, &c);
    let ins = [&f, &h, &k];
    Ok(all([
        same(&k.compose(&f)?.adjoint(), &f.adjoint().compose(&k.adjoint())?, &ins),
        same(&f.add(&h)?.adjoint(), &f.adjoint().add(&h.adjoint())?, &ins),
        same(&Morphism::<S>::zero(&a, &b).adjoint(), &Morphism::zero(&b, &a), &ins),
        same(&f.adjoint().adjoint(), &f, &ins),
        same(&id::<S>(&a).adjoint(), &id(&a), &ins),
        same(&f.tensor(&k).adjoint(), &f.adjoint().tensor(&k.adjoint()), &ins),
    ]))
}

/// `f† = (f_*)* = (f*)_*`
fn adjoint_via_duals<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b) = (g.shape(4), g.shape(4));
    let f = g.morphism::<S>(&a, &b);
    Ok(all([
        same(&f.adjoint(), &f.conj_star().dual(), &[&f]),
        same(&f.adjoint(), &f.dual().conj_star(), &[&f]),
    ]))
}

/// `⟨ψ|φ⟩ = ψ† ∘ φ = ε_A ∘ (φ ⊗ ψ_*) ∘ (1_I ⊗ u_I⁻¹) ∘ ρ_I`
fn inner_product_adjoint<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let a = g.shape(4);
    let (psi, phi) = (g.state::<S>(&a), g.state::<S>(&a));
    let i = Shape::unit();
    let compact = iso::rho::<S>(&i)
        .then(&id(&i).tensor(&iso::u_unit::<S>().adjoint()))?
        .then(&phi.tensor(&psi.conj_star()))?
        .then(&Morphism::epsilon(&a))?;
    let ip = Morphism::scalar(Morphism::inner_product(&psi, &phi)?);
    Ok(all([
        same(&ip, &psi.adjoint().compose(&phi)?, &[&psi, &phi]),
        same(&ip, &compact, &[&psi, &phi]),
    ]))
}

/// `⟨f†ψ|φ⟩ = ⟨ψ|fφ⟩`
fn adjoint_inner_product<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b) = (g.shape(4), g.shape(4));
    let f = g.morphism::<S>(&a, &b);
    let psi = g.state::<S>(&b);
    let phi = g.state::<S>(&a);
    let lhs = Morphism::inner_product(&f.adjoint().compose(&psi)?, &phi)?;
    let rhs = Morphism::inner_product(&psi, &f.compose(&phi)?)?;
    Ok(same_scalar(&lhs, &rhs, &[&f, &psi, &phi]))
}

/// `⟨Uψ|Uφ⟩ = ⟨ψ|φ⟩`
fn unitary_preserves_inner_product<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let a = g.shape(4);
    let u = g.unitary::<S>(&a);
    let (psi, phi) = (g.state::<S>(&a), g.state::<S>(&a));
    let lhs = Morphism::inner_product(&u.compose(&psi)?, &u.compose(&phi)?)?;
    let rhs = Morphism::inner_product(&psi, &phi)?;
    Ok(same_scalar(&lhs, &rhs, &[&u, &psi, &phi]))
}

/// The matrix of `f†` in permutation bases is the conjugate transpose of the
/// matrix of `f`.
fn adjoint_matrix_in_bases<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b) = (g.shape(4), g.shape(4));
    let f = g.morphism::<S>(&a, &b);
    let random_basis = |g: &mut Gen, x: &Shape| -> Result<Basis<S>> {
        let n = Shape::copies(x.dim(), &Shape::unit())?;
        Basis::new(iso::basis::<S>(x).compose(&g.permutation::<S>(&n))?)
    };
    let ba = random_basis(g, &a)?;
    let bb = random_basis(g, &b)?;
    let m = Basis::matrix_of(&f, &ba, &bb)?;
    let m_dag = Basis::matrix_of(&f.adjoint(), &bb, &ba)?;
    let conj_t = Morphism::from_fn(m.cod(), m.dom(), |r, c| m.entry(c, r).conj());
    Ok(same(&m_dag, &conj_t, &[&f, ba.morphism(), bb.morphism()]))
}

/// On `Q`: `U` preserves all standard-basis inner products exactly when
/// `U†U = 1`.
fn preservation_implies_unitary<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let q = Shape::qubit();
    let u = if g.coin() {
        g.unitary::<S>(&q)
    } else {
        g.morphism::<S>(&q, &q)
    };
    let e = |k: usize| Morphism::ket(&q, (0..2).map(|r| if r == k { S::one() } else { S::zero() }).collect());
    let mut preserves = true;
    for i in 0..2 {
        for j in 0..2 {
            let (ei, ej) = (e(i)?, e(j)?);
            let before = Morphism::inner_product(&ei, &ej)?;
            let after = Morphism::inner_product(&u.compose(&ei)?, &u.compose(&ej)?)?;
            preserves &= before == after;
        }
    }
    let isometry = u.adjoint().compose(&u)?.is_identity();
    if preserves == isometry && (!preserves || u.is_unitary()) {
        Ok(Ok(()))
    } else {
        Ok(Err(format!("preserves = {preserves}, U†U = 1: {isometry}\n{u}")))
    }
}

/// `∇ ∘ (f ⊕ g) ∘ Δ = f + g`
fn additive_structure<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b) = (g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&a, &b);
    let diag = Morphism::tuple(&[id::<S>(&a), id(&a)])?;
    let codiag = Morphism::cotuple(&[id::<S>(&b), id(&b)])?;
    let lhs = codiag.compose(&f.biproduct(&h))?.compose(&diag)?;
    Ok(same(&lhs, &f.add(&h)?, &[&f, &h]))
}

/// `g ∘ (s•f) = s•(g ∘ f) = (s•g) ∘ f`
fn scalar_naturality<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f = g.morphism::<S>(&a, &b);
    let h = g.morphism::<S>(&b, &c);
    let s = g.scalar::<S>();
    let mid = h.compose(&f)?.scale(&s);
    Ok(all([
        same(&h.compose(&f.scale(&s))?, &mid, &[&f, &h]),
        same(&h.scale(&s).compose(&f)?, &mid, &[&f, &h]),
    ]))
}

/// `(f ⊗ g) ∘ (f' ⊗ g') = (f ∘ f') ⊗ (g ∘ g')`
fn tensor_bifunctoriality<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let (a, b, c) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let (x, y, z) = (g.shape(MAX), g.shape(MAX), g.shape(MAX));
    let f1 = g.morphism::<S>(&a, &b);
    let f = g.morphism::<S>(&b, &c);
    let g1 = g.morphism::<S>(&x, &y);
    let gg = g.morphism::<S>(&y, &z);
    let lhs = f.tensor(&gg).compose(&f1.tensor(&g1))?;
    let rhs = f.compose(&f1)?.tensor(&gg.compose(&g1)?);
    Ok(same(&lhs, &rhs, &[&f1, &f, &g1, &gg]))
}

/// `τ ∘ (f ⊗ (g ⊕ h)) = ((f ⊗ g) ⊕ (f ⊗ h)) ∘ τ`
fn tau_naturality<S: Scalar>(g: &mut Gen) -> Result<Outcome> {
    let s = |g: &mut Gen| g.shape(MAX);
    let (a, b, c, a2, b2, c2) = (s(g), s(g), s(g), s(g), s(g), s(g));
    let f = g.morphism::<S>(&a, &a2);
    let k = g.morphism::<S>(&b, &b2);
    let h = g.morphism::<S>(&c, &c2);
    let lhs = iso::tau::<S>(&a2, &b2, &c2).compose(&f.tensor(&k.biproduct(&h)))?;
    let rhs = f.tensor(&k).biproduct(&f.tensor(&h)).compose(&iso::tau(&a, &b, &c))?;
    Ok(same(&lhs, &rhs, &[&f, &k, &h]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Boolean, ComplexRootTwo as C};

    #[test]
    fn complex_suite_passes() {
        let r = run_suite::<C>(11, 20);
        for law in &r.laws {
            assert!(law.ok(), "{}: {:?}", law.name, law.counterexample);
        }
    }

    #[test]
    fn boolean_suite_passes() {
        let r = run_suite::<Boolean>(11, 20);
        assert!(r.passed, "{:?}", r.laws.iter().find(|l| !l.ok()));
    }

    #[test]
    fn zero_cases_is_vacuous() {
        let r = run_suite::<C>(0, 0);
        assert!(r.vacuous && r.passed);
        assert!(r.laws.iter().all(|l| l.cases == 0));
    }

    #[test]
    fn broken_law_reports_counterexample() {
        fn broken(g: &mut Gen) -> Result<Outcome> {
            let q = Shape::qubit();
            let f = g.morphism::<C>(&q, &q);
            Ok(same(&f.adjoint(), &f.dual(), &[&f]))
        }
        let r = run_law::<C>("broken", broken, 3, 50);
        assert!(!r.ok());
        assert!(r.counterexample.unwrap().contains("lhs:"));
    }

    #[test]
    fn names_are_unique() {
        let mut names = law_names();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }
}
