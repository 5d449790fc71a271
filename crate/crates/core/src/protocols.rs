//! Teleportation, logic-gate teleportation, CNOT teleportation and
//! entanglement swapping as composites of named steps, each compared
//! entrywise with its specification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::iso;
use crate::morphism::Morphism;
use crate::qm;
use crate::scalar::{Boolean, Scalar};
use crate::shape::Shape;

fn q() -> Shape {
    Shape::qubit()
}

fn qd() -> Shape {
    Shape::dual(&Shape::qubit())
}

fn four_units() -> Shape {
    Shape::copies(4, &Shape::unit()).expect("nonempty")
}

/// A scalar `s` and a `prebase : 4·I → Q* ⊗ Q` such that `s • prebase` is
/// unitary, every column `βⱼ` is unitary and `2·s†·s = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeleportationBase<S> {
    s: S,
    prebase: Morphism<S>,
    betas: Vec<Morphism<S>>,
}

impl<S: Scalar> TeleportationBase<S> {
    pub fn new(s: S, prebase: Morphism<S>) -> Result<Self> {
        let dom = four_units();
        let cod = Shape::tensor(&qd(), &q());
        if *prebase.dom() != dom {
            return Err(Error::mismatch("teleportation base", &dom, prebase.dom()));
        }
        if *prebase.cod() != cod {
            return Err(Error::mismatch("teleportation base", &cod, prebase.cod()));
        }
        let summands = vec![Shape::unit(); 4];
        let betas = (0..4)
            .map(|j| prebase.compose(&Morphism::injection(j, &summands)?)?.unname())
            .collect::<Result<Vec<_>>>()?;
        let two = S::from_count(2);
        if !two.mul(&s.conj()).mul(&s).is_one() {
            return Err(Error::InvalidBase(format!("2·s†·s ≠ 1 for s = {s}")));
        }
        if !prebase.scale(&s).is_unitary() {
            return Err(Error::InvalidBase("s • prebase is not unitary".into()));
        }
        if let Some(j) = betas.iter().position(|b| !b.is_unitary()) {
            return Err(Error::InvalidBase(format!("beta_{} is not unitary", j + 1)));
        }
        Ok(TeleportationBase { s, prebase, betas })
    }

    /// Assembles the prebase from the names of four maps `Q → Q`.
    pub fn from_maps(s: S, betas: &[Morphism<S>; 4]) -> Result<Self> {
        let names = betas.iter().map(Morphism::name).collect::<Vec<_>>();
        Self::new(s, Morphism::cotuple(&names)?)
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    pub fn prebase(&self) -> &Morphism<S> {
        &self.prebase
    }

    /// `s • prebase`.
    pub fn base(&self) -> Morphism<S> {
        self.prebase.scale(&self.s)
    }

    /// `βᵢ` for `i` in `0..4`.
    pub fn beta(&self, i: usize) -> &Morphism<S> {
        &self.betas[i]
    }

    pub fn betas(&self) -> &[Morphism<S>] {
        &self.betas
    }

    /// `γᵢ = (βᵢ)_*`.
    pub fn gamma(&self, i: usize) -> Morphism<S> {
        self.betas[i].conj_star()
    }

    /// `s†s`, the weight carried by each branch.
    pub fn weight(&self) -> S {
        self.s.conj().mul(&self.s)
    }

    /// `⟨s† • ⌞βᵢ⌟⟩ : Q ⊗ Q* → 4·I`.
    pub fn observation(&self) -> Morphism<S> {
        let s_dag = self.s.conj();
        let effects = self.betas.iter().map(|b| b.coname().scale(&s_dag)).collect::<Vec<_>>();
        Morphism::tuple(&effects).expect("effects share a domain")
    }

    /// The four defining equations of a Bell base.
    pub fn is_bell(&self) -> bool {
        let sq = iso::sigma_q::<S>();
        self.betas[0].is_identity()
            && self.betas[1] == sq
            && self.betas[2].is_self_adjoint()
            && self.betas[3] == sq.compose(&self.betas[2]).expect("endomorphisms")
    }
}

fn minus_one<S: Scalar>() -> Result<S> {
    S::one().neg().map_err(|_| {
        Error::Unsupported(format!(
            "the {} semiring has no -1, so no Bell base can be built; Q has only two unitaries \
             and no teleportation base exists",
            S::NAME
        ))
    })
}

fn teleport_scalar<S: Scalar>() -> Result<S> {
    S::teleport_scalar().ok_or_else(|| Error::Unsupported(format!("the {} semiring has no s with 2s†s = 1", S::NAME)))
}

/// `β₁ = 1`, `β₂ = σ⊕_Q`, `β₃ = diag(1, -1)`, `β₄ = σ⊕_Q ∘ β₃`.
pub fn bell_maps<S: Scalar>() -> Result<[Morphism<S>; 4]> {
    let m = minus_one::<S>()?;
    let (o, z) = (S::one(), S::zero());
    let b3 = Morphism::from_rows(&q(), &q(), vec![vec![o.clone(), z.clone()], vec![z, m]])?;
    let sq = iso::sigma_q::<S>();
    let b4 = sq.compose(&b3)?;
    Ok([Morphism::identity(&q()), sq, b3, b4])
}

pub fn make_bell_base<S: Scalar>() -> Result<TeleportationBase<S>> {
    let s = teleport_scalar::<S>()?;
    let base = TeleportationBase::from_maps(s, &bell_maps()?)?;
    debug_assert!(base.is_bell());
    Ok(base)
}

/// The 4×4 matrix whose columns vectorize the Bell maps.
pub fn bell_column_matrix<S: Scalar>() -> Result<Morphism<S>> {
    minus_one::<S>()?;
    let d = four_units();
    Morphism::from_ints(&d, &d, &[&[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 1, 0, -1], &[1, 0, -1, 0]])
}

/// `prebase = base_{Q*⊗Q} ∘ M` with `M` read through the name
/// vectorization. This coincides with [`make_bell_base`].
pub fn column_matrix_base<S: Scalar>() -> Result<TeleportationBase<S>> {
    let s = teleport_scalar::<S>()?;
    let prebase = iso::basis::<S>(&Shape::tensor(&qd(), &q())).compose(&bell_column_matrix()?)?;
    TeleportationBase::new(s, prebase)
}

/// The same columns read as column-major vectorizations: every map is
/// transposed, which flips the sign of the fourth. A valid teleportation
/// base that is not a Bell base.
pub fn transposed_column_matrix_base<S: Scalar>() -> Result<TeleportationBase<S>> {
    let b = column_matrix_base::<S>()?;
    let t = |m: &Morphism<S>| Morphism::from_fn(&q(), &q(), |r, c| m.entry(c, r).clone());
    TeleportationBase::from_maps(b.s().clone(), &[t(b.beta(0)), t(b.beta(1)), t(b.beta(2)), t(b.beta(3))])
}

/// The CNOT gate: the permutation `(0, 1, 3, 2)` of the computational basis
/// of `Q ⊗ Q`.
pub fn standard_cnot<S: Scalar>() -> Morphism<S> {
    let qq = Shape::tensor(&q(), &q());
    let perm = [0, 1, 3, 2];
    Morphism::from_fn(&qq, &qq, |r, c| if perm[c] == r { S::one() } else { S::zero() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
}

/// One labelled edge of a protocol diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<S> {
    pub label: String,
    pub morphism: Morphism<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch<S> {
    /// Position in branch order; nested rounds are flattened outer-major.
    pub index: usize,
    pub correction: Morphism<S>,
    pub weight: S,
    /// The protocol restricted to this branch.
    pub composite: Morphism<S>,
    /// `composite == weight • expected`.
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolReport<S> {
    pub protocol: String,
    pub semiring: &'static str,
    pub steps: Vec<Step<S>>,
    pub branches: Vec<Branch<S>>,
    /// The specification side.
    pub lhs: Morphism<S>,
    /// The composed protocol.
    pub rhs: Morphism<S>,
    pub verdict: Verdict,
    pub first_difference: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct BranchJson {
    index: usize,
    correction: String,
    weight: String,
    ok: bool,
}

#[derive(Serialize)]
struct StepJson {
    label: String,
    dom: String,
    cod: String,
}

#[derive(Serialize)]
struct ReportJson {
    protocol: String,
    semiring: &'static str,
    branches: Vec<BranchJson>,
    verdict: Verdict,
    first_difference: Option<(usize, usize)>,
    steps: Vec<StepJson>,
    lhs: String,
    rhs: String,
}

impl<S: Scalar> ProtocolReport<S> {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn to_json(&self) -> serde_json::Value {
        let view = ReportJson {
            protocol: self.protocol.clone(),
            semiring: self.semiring,
            branches: self
                .branches
                .iter()
                .map(|b| BranchJson {
                    index: b.index,
                    correction: inline(&b.correction),
                    weight: b.weight.to_string(),
                    ok: b.ok,
                })
                .collect(),
            verdict: self.verdict,
            first_difference: self.first_difference,
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    label: s.label.clone(),
                    dom: s.morphism.dom().to_string(),
                    cod: s.morphism.cod().to_string(),
                })
                .collect(),
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
        };
        serde_json::to_value(view).expect("plain data")
    }
}

/// One-line matrix rendering, `[[a, b], [c, d]]`.
pub fn inline<S: Scalar>(m: &Morphism<S>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Composes labelled steps left to right.
struct Chain<S> {
    current: Morphism<S>,
    steps: Vec<Step<S>>,
}

impl<S: Scalar> Chain<S> {
    fn start(label: &str, m: Morphism<S>) -> Self {
        Chain {
            current: m.clone(),
            steps: vec![Step {
                label: label.into(),
                morphism: m,
            }],
        }
    }

    fn then(&mut self, label: &str, m: Morphism<S>) -> Result<()> {
        self.current = m.compose(&self.current)?;
        self.steps.push(Step {
            label: label.into(),
            morphism: m,
        });
        Ok(())
    }
}

/// Splits the codomain of `m` into nested `counts[0]·(counts[1]·(…))`
/// blocks, outer index slowest.
fn blocks<S: Scalar>(m: &Morphism<S>, counts: &[usize]) -> Result<Vec<Morphism<S>>> {
    let Some((&n, rest)) = counts.split_first() else {
        return Ok(vec![m.clone()]);
    };
    let summands = m.cod().split_summands(n)?;
    let mut out = Vec::new();
    for i in 0..n {
        let block = Morphism::projection(i, &summands)?.compose(m)?;
        out.extend(blocks(&block, rest)?);
    }
    Ok(out)
}

fn finish<S: Scalar>(
    protocol: &str,
    chain: Chain<S>,
    lhs: Morphism<S>,
    counts: &[usize],
    corrections: Vec<Morphism<S>>,
    weight: S,
    expected: &Morphism<S>,
) -> Result<ProtocolReport<S>> {
    let rhs = chain.current;
    let target = expected.scale(&weight);
    let branches = blocks(&rhs, counts)?
        .into_iter()
        .zip(corrections)
        .enumerate()
        .map(|(index, (composite, correction))| Branch {
            index,
            ok: composite == target,
            correction,
            weight: weight.clone(),
            composite,
        })
        .collect();
    let first_difference = lhs.first_difference(&rhs);
    Ok(ProtocolReport {
        protocol: protocol.into(),
        semiring: S::NAME,
        steps: chain.steps,
        branches,
        verdict: if first_difference.is_none() {
            Verdict::Equal
        } else {
            Verdict::Unequal
        },
        first_difference,
        lhs,
        rhs,
    })
}

/// `⟨w • f⟩ᵢ₌₁..ₙ`.
fn weighted_diagonal<S: Scalar>(n: usize, w: &S, f: &Morphism<S>) -> Morphism<S> {
    Morphism::tuple(&vec![f.scale(w); n]).expect("shared domain")
}

/// Teleportation with the resource state `s • ⌜f⌝` and corrections
/// `⊕ φᵢ⁻¹`; plain teleportation is `f = 1`, `φᵢ = βᵢ`.
fn teleport_through<S: Scalar>(
    protocol: &str,
    tb: &TeleportationBase<S>,
    f: &Morphism<S>,
    phis: &[Morphism<S>],
) -> Result<ProtocolReport<S>> {
    let (i, qs) = (Shape::unit(), q());
    let mut c = Chain::start("import unknown state", iso::rho::<S>(&qs));
    c.then(
        "produce entangled pair",
        Morphism::identity(&qs).tensor(&f.name().scale(tb.s())),
    )?;
    c.then("spatial delocation", iso::alpha(&qs, &qd(), &qs))?;
    c.then(
        "teleportation observation",
        tb.observation().tensor(&Morphism::identity(&qs)),
    )?;
    let units = vec![i.clone(); 4];
    let lambdas = iso::copies_of(4, &iso::lambda_inv::<S>(&qs))?;
    c.then(
        "classical communication",
        lambdas.compose(&iso::upsilon_n(&units, &qs)?)?,
    )?;
    let corrections = phis.iter().map(Morphism::adjoint).collect::<Vec<_>>();
    c.then("unitary correction", Morphism::biproduct_all(&corrections)?)?;

    let w = tb.weight();
    let lhs = weighted_diagonal(4, &w, &Morphism::identity(&qs)).compose(f)?;
    finish(protocol, c, lhs, &[4], corrections, w, f)
}

pub fn verify_teleportation<S: Scalar>(tb: &TeleportationBase<S>) -> Result<ProtocolReport<S>> {
    teleport_through("teleport", tb, &Morphism::identity(&q()), tb.betas())
}

/// `φᵢ(f) = f ∘ βᵢ ∘ f†`.
pub fn derive_corrections<S: Scalar>(tb: &TeleportationBase<S>, f: &Morphism<S>) -> Result<Vec<Morphism<S>>> {
    let f_dag = f.adjoint();
    tb.betas().iter().map(|b| f.compose(b)?.compose(&f_dag)).collect()
}

/// Logic-gate teleportation of a unitary `f : Q → Q`. Corrections are
/// derived when not supplied and always checked against `f ∘ βᵢ = φᵢ ∘ f`.
pub fn verify_gate_teleportation<S: Scalar>(
    tb: &TeleportationBase<S>,
    f: &Morphism<S>,
    corrections: Option<Vec<Morphism<S>>>,
) -> Result<ProtocolReport<S>> {
    if *f.dom() != q() || *f.cod() != q() {
        return Err(Error::mismatch("gate teleportation", &q(), f.dom()));
    }
    if !f.is_unitary() {
        return Err(Error::NotUnitary(f.to_string()));
    }
    let phis = match corrections {
        Some(phis) => phis,
        None => derive_corrections(tb, f)?,
    };
    if phis.len() != 4 {
        return Err(Error::IndexOutOfRange {
            index: phis.len(),
            len: 4,
        });
    }
    for (index, (b, phi)) in tb.betas().iter().zip(&phis).enumerate() {
        if f.compose(b)? != phi.compose(f)? {
            return Err(Error::CorrectionViolated { index });
        }
    }
    teleport_through("gate-teleport", tb, f, &phis)
}

/// A named matrix equation and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub name: String,
    pub holds: bool,
}

/// The four commutation equations assumed of CNOT against the Bell maps,
/// then the two that follow from them for `β₄`.
pub fn cnot_equations<S: Scalar>(
    tb: &TeleportationBase<S>,
    cnot: &Morphism<S>,
) -> Result<(Vec<Equation>, Vec<Equation>)> {
    let one = Morphism::identity(&q());
    let sq = iso::sigma_q::<S>();
    let (b3, b4) = (tb.beta(2).clone(), tb.beta(3).clone());
    let eq = |name: &str, left: Morphism<S>, right: Morphism<S>| -> Result<Equation> {
        Ok(Equation {
            name: name.into(),
            holds: cnot.compose(&left)? == right.compose(cnot)?,
        })
    };
    let assumed = vec![
        eq("CNOT(X⊗1) = (X⊗X)CNOT", sq.tensor(&one), sq.tensor(&sq))?,
        eq("CNOT(1⊗X) = (1⊗X)CNOT", one.tensor(&sq), one.tensor(&sq))?,
        eq("CNOT(Z⊗1) = (Z⊗1)CNOT", b3.tensor(&one), b3.tensor(&one))?,
        eq("CNOT(1⊗Z) = (Z⊗Z)CNOT", one.tensor(&b3), b3.tensor(&b3))?,
    ];
    let derived = vec![
        eq("CNOT(Y⊗1) = (Y⊗X)CNOT", b4.tensor(&one), b4.tensor(&sq))?,
        eq("CNOT(1⊗Y) = (Z⊗Y)CNOT", one.tensor(&b4), b3.tensor(&b4))?,
    ];
    Ok((assumed, derived))
}

/// Two-round teleportation of a two-qubit gate through the resource state
/// `s² • ⌜CNOT⌝`.
pub fn verify_cnot_teleportation<S: Scalar>(
    tb: &TeleportationBase<S>,
    cnot: &Morphism<S>,
) -> Result<ProtocolReport<S>> {
    let qs = q();
    let qq = Shape::tensor(&qs, &qs);
    if *cnot.dom() != qq || *cnot.cod() != qq {
        return Err(Error::mismatch("cnot teleportation", &qq, cnot.dom()));
    }
    if !cnot.is_unitary() {
        return Err(Error::NotUnitary(cnot.to_string()));
    }
    let (assumed, derived) = cnot_equations(tb, cnot)?;
    if let Some(e) = assumed.iter().chain(&derived).find(|e| !e.holds) {
        return Err(Error::CommutationFailed(e.name.clone()));
    }

    let one = Morphism::<S>::identity(&qs);
    let cnot_dag = cnot.adjoint();
    let conj = |m: Morphism<S>| cnot.compose(&m).and_then(|x| x.compose(&cnot_dag));
    let phi1 = tb
        .betas()
        .iter()
        .map(|b| conj(b.tensor(&one)))
        .collect::<Result<Vec<_>>>()?;
    let phi2 = tb
        .betas()
        .iter()
        .map(|b| conj(one.tensor(b)))
        .collect::<Result<Vec<_>>>()?;

    let (a, bd, c) = (qq.clone(), Shape::tensor(&qd(), &qd()), qq.clone());
    let (a1, b1) = (qs.clone(), qd());
    let (a2, b2) = (qs.clone(), qd());
    let left = Shape::tensor(&a1, &b1);
    let right = Shape::tensor(&a2, &b2);
    let id = Morphism::<S>::identity;

    let s2 = tb.s().mul(tb.s());
    let mut ch = Chain::start("import unknown state", iso::rho::<S>(&a));
    ch.then("produce CNOT state", id(&a).tensor(&cnot.name().scale(&s2)))?;
    ch.then(
        "split dual",
        id(&a).tensor(&iso::u_tensor::<S>(&qs, &qs).tensor(&id(&c))),
    )?;
    ch.then("regroup", iso::alpha(&a, &bd, &c))?;
    let interchange = iso::alpha_inv::<S>(&a1, &a2, &bd)
        .then(&id(&a1).tensor(&iso::alpha(&a2, &b1, &b2)))?
        .then(&id(&a1).tensor(&iso::sigma::<S>(&a2, &b1).tensor(&id(&b2))))?
        .then(&id(&a1).tensor(&iso::alpha_inv(&b1, &a2, &b2)))?
        .then(&iso::alpha(&a1, &b1, &right))?;
    ch.then("interchange", interchange.tensor(&id(&c)))?;
    let to_end = iso::alpha_inv::<S>(&left, &right, &c)
        .then(&id(&left).tensor(&iso::sigma(&right, &c)))?
        .then(&iso::alpha(&left, &c, &right))?;
    ch.then("spatial delocation", to_end)?;
    ch.then(
        "first observation",
        tb.observation().tensor(&id(&c)).tensor(&id(&right)),
    )?;
    let units = vec![Shape::unit(); 4];
    let comm1 = iso::copies_of(4, &iso::lambda_inv::<S>(&c))?.compose(&iso::upsilon_n(&units, &c)?)?;
    ch.then("first communication", comm1.tensor(&id(&right)))?;
    let corr1 = phi1.iter().map(Morphism::adjoint).collect::<Vec<_>>();
    ch.then("first correction", Morphism::biproduct_all(&corr1)?.tensor(&id(&right)))?;
    let four_c = Shape::copies(4, &c)?;
    ch.then("second observation", id(&four_c).tensor(&tb.observation()))?;
    let comm2 = iso::copies_of(4, &iso::rho_inv::<S>(&four_c))?.compose(&iso::tau_n(&four_c, &units)?)?;
    ch.then("second communication", comm2)?;
    let corr2 = phi2.iter().map(Morphism::adjoint).collect::<Vec<_>>();
    let second = corr2.iter().map(|p| iso::copies_of(4, p)).collect::<Result<Vec<_>>>()?;
    ch.then("second correction", Morphism::biproduct_all(&second)?)?;

    let w = tb.weight();
    let inner = weighted_diagonal(4, &w, &id(&c));
    let lhs = weighted_diagonal(4, &w, &inner).compose(cnot)?;
    let mut corrections = Vec::with_capacity(16);
    for p2 in &corr2 {
        for p1 in &corr1 {
            corrections.push(p2.compose(p1)?);
        }
    }
    finish("cnot-teleport", ch, lhs, &[4, 4], corrections, w.mul(&w), cnot)
}

/// `Pᵢ = s†s • (⌜γᵢ⌝ ∘ ⌞βᵢ⌟) : Q ⊗ Q* → Q ⊗ Q*`.
pub fn swap_projectors<S: Scalar>(tb: &TeleportationBase<S>) -> Vec<Morphism<S>> {
    (0..4)
        .map(|i| qm::entanglement_projector(&tb.gamma(i), &tb.weight()))
        .collect()
}

/// Entanglement swapping on `(Q_d* ⊗ Q_a) ⊗ (Q_b* ⊗ Q_c)`.
///
/// Branch `i` corrects with `(γᵢ⁻¹ ⊗ 1_a) ⊗ (1_{d*} ⊗ βᵢ⁻¹)`: `γᵢ` acts on the
/// `Q_b*` wire, the only one it is typed for.
pub fn verify_entanglement_swap<S: Scalar>(tb: &TeleportationBase<S>) -> Result<ProtocolReport<S>> {
    let (i, qs, qds) = (Shape::unit(), q(), qd());
    let id = Morphism::<S>::identity;
    let (d, a, b, c) = (qds.clone(), qs.clone(), qds.clone(), qs.clone());
    let ab = Shape::tensor(&a, &b);
    let cup = Morphism::<S>::identity(&qs).name();

    let s = tb.s();
    let s2 = s.mul(s);
    let mut ch = Chain::start("produce entangled pairs", cup.tensor(&cup).scale(&s2));
    ch.then(
        "spatial delocation",
        iso::alpha_inv::<S>(&d, &a, &Shape::tensor(&b, &c)).then(&id(&d).tensor(&iso::alpha(&a, &b, &c)))?,
    )?;
    let measure = Morphism::tuple(&swap_projectors(tb))?;
    ch.then("Bell-base measurement", id(&d).tensor(&measure.tensor(&id(&c))))?;
    let abs = vec![ab.clone(); 4];
    let abc = Shape::tensor(&ab, &c);
    let distribute = id(&d)
        .tensor(&iso::upsilon_n(&abs, &c)?)
        .then(&iso::tau_n(&d, &vec![abc.clone(); 4])?)?;
    let regroup = id(&d)
        .tensor(&iso::sigma::<S>(&a, &b).tensor(&id(&c)))
        .then(&iso::alpha(&d, &Shape::tensor(&b, &a), &c))?
        .then(&iso::sigma::<S>(&d, &Shape::tensor(&b, &a)).tensor(&id(&c)))?
        .then(&iso::alpha_inv(&Shape::tensor(&b, &a), &d, &c))?;
    ch.then(
        "classical communication",
        distribute.then(&iso::copies_of(4, &regroup)?)?,
    )?;
    let corrections = (0..4)
        .map(|k| {
            tb.gamma(k)
                .adjoint()
                .tensor(&id(&a))
                .tensor(&id(&d).tensor(&tb.beta(k).adjoint()))
        })
        .collect::<Vec<_>>();
    ch.then("unitary correction", Morphism::biproduct_all(&corrections)?)?;

    let w = s.conj().mul(s).mul(&s2);
    let expected = cup.tensor(&cup);
    debug_assert_eq!(*expected.dom(), Shape::tensor(&i, &i));
    let lhs = weighted_diagonal(4, &w, &expected);
    finish("swap", ch, lhs, &[4], corrections, w, &expected)
}

/// Result of the exhaustive search for Boolean teleportation bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelSearchReport {
    pub candidates: usize,
    pub bases: Vec<String>,
    pub unitaries_on_q: usize,
    /// `β⁻¹ ∘ 1 ∘ β = 1` for every Boolean unitary `β` on `Q`.
    pub single_branch_ok: bool,
}

/// Tries every Boolean `4 × 4` prebase with `s = 1`.
pub fn rel_teleportation_search() -> RelSearchReport {
    let d = four_units();
    let cod = Shape::tensor(&qd(), &q());
    let mut bases = Vec::new();
    for bits in 0u32..1 << 16 {
        let prebase = Morphism::from_fn(&d, &cod, |r, c| Boolean(bits >> (r * 4 + c) & 1 == 1));
        // a unitary Boolean matrix is a permutation: cheap reject first
        if (0..4).any(|r| prebase.row(r).iter().filter(|x| x.0).count() != 1) {
            continue;
        }
        if let Ok(tb) = TeleportationBase::new(Boolean(true), prebase.clone()) {
            bases.push(inline(tb.prebase()));
        }
    }
    let qs = q();
    let unitaries: Vec<Morphism<Boolean>> = (0u32..16)
        .map(|bits| Morphism::from_fn(&qs, &qs, |r, c| Boolean(bits >> (r * 2 + c) & 1 == 1)))
        .filter(Morphism::is_unitary)
        .collect();
    let single_branch_ok = unitaries.iter().all(|b| {
        b.adjoint()
            .compose(&Morphism::identity(&qs))
            .and_then(|m| m.compose(b))
            .map(|m| m.is_identity())
            .unwrap_or(false)
    });
    RelSearchReport {
        candidates: 1 << 16,
        bases,
        unitaries_on_q: unitaries.len(),
        single_branch_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ComplexRootTwo as C;

    fn bell() -> TeleportationBase<C> {
        make_bell_base().unwrap()
    }

    #[test]
    fn bell_maps_match_matrices() {
        let b = bell();
        assert_eq!(inline(b.beta(2)), "[[1, 0], [0, -1]]");
        assert_eq!(inline(b.beta(3)), "[[0, -1], [1, 0]]");
        assert!(b.is_bell());
        assert!(b.base().is_unitary());
    }

    #[test]
    fn prebase_second_column() {
        let b = bell();
        let col: Vec<String> = (0..4).map(|r| b.prebase().entry(r, 1).to_string()).collect();
        assert_eq!(col, ["0", "1", "1", "0"]);
    }

    #[test]
    fn column_matrix_readings() {
        assert_eq!(column_matrix_base::<C>().unwrap(), bell());
        let t = transposed_column_matrix_base::<C>().unwrap();
        assert_eq!(*t.beta(3), bell().beta(3).negate().unwrap());
        assert!(!t.is_bell());
    }

    #[test]
    fn boolean_has_no_bell_base() {
        let e = make_bell_base::<Boolean>().unwrap_err();
        assert!(matches!(e, Error::Unsupported(ref m) if m.contains("no teleportation base")));
    }

    #[test]
    fn observation_is_unitary() {
        assert!(bell().observation().is_unitary());
    }

    #[test]
    fn teleportation_commutes() {
        let r = verify_teleportation(&bell()).unwrap();
        assert!(r.is_equal(), "{:?}", r.first_difference);
        assert!(r.branches.iter().all(|b| b.ok));
        assert_eq!(r.steps.len(), 6);
    }

    #[test]
    fn transposed_base_teleports() {
        let r = verify_teleportation(&transposed_column_matrix_base::<C>().unwrap()).unwrap();
        assert!(r.is_equal());
    }

    #[test]
    fn gate_teleportation_rejects_bad_corrections() {
        let b = bell();
        let f = b.beta(2).clone();
        let plain = verify_gate_teleportation(&b, b.beta(0), Some(b.betas().to_vec()));
        assert!(plain.unwrap().is_equal());
        let e = verify_gate_teleportation(&b, &f, Some(vec![f.clone(); 4]));
        assert!(matches!(e, Err(Error::CorrectionViolated { index: 0 })));
    }

    #[test]
    fn cnot_teleportation_commutes() {
        let r = verify_cnot_teleportation(&bell(), &standard_cnot()).unwrap();
        assert!(r.is_equal(), "{:?}", r.first_difference);
        assert_eq!(r.branches.len(), 16);
        assert!(r.branches.iter().all(|b| b.ok && b.weight == C::rational(1, 4)));
    }

    #[test]
    fn entanglement_swap_commutes() {
        let r = verify_entanglement_swap(&bell()).unwrap();
        assert!(r.is_equal(), "{:?}", r.first_difference);
    }

    #[test]
    fn report_json_fields() {
        let r = verify_teleportation(&bell()).unwrap().to_json();
        for key in ["protocol", "semiring", "branches", "verdict", "lhs", "rhs"] {
            assert!(r.get(key).is_some(), "{key}");
        }
        assert_eq!(r["verdict"], "equal");
        assert_eq!(r["branches"][0]["weight"], "1/2");
    }
}
