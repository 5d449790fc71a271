//! Spectral decompositions, measurements, preparations, the Born rule and
//! dimensions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::iso;
use crate::morphism::Morphism;
use crate::scalar::Scalar;
use crate::shape::Shape;

/// A unitary `U : A → ⊕ Aᵢ` with its derived states, effects and
/// projectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDecomposition<S> {
    u: Morphism<S>,
    summands: Vec<Shape>,
    /// `ψⱼ = U† ∘ qⱼ`
    psis: Vec<Morphism<S>>,
    /// `πⱼ = pⱼ ∘ U`
    pis: Vec<Morphism<S>>,
    /// `Pⱼ = ψⱼ ∘ πⱼ`
    projectors: Vec<Morphism<S>>,
}

impl<S: Scalar> SpectralDecomposition<S> {
    pub fn new(u: Morphism<S>, summands: Vec<Shape>) -> Result<Self> {
        let target = Shape::biproduct_of(&summands)?;
        if *u.cod() != target {
            return Err(Error::mismatch("spectral decomposition", &target, u.cod()));
        }
        if !u.is_unitary() {
            return Err(Error::NotUnitary(format!("{} -> {}", u.dom(), u.cod())));
        }
        let u_dag = u.adjoint();
        let mut psis = Vec::with_capacity(summands.len());
        let mut pis = Vec::with_capacity(summands.len());
        let mut projectors = Vec::with_capacity(summands.len());
        for j in 0..summands.len() {
            let psi = u_dag.compose(&Morphism::injection(j, &summands)?)?;
            let pi = Morphism::projection(j, &summands)?.compose(&u)?;
            projectors.push(psi.compose(&pi)?);
            psis.push(psi);
            pis.push(pi);
        }
        Ok(SpectralDecomposition {
            u,
            summands,
            psis,
            pis,
            projectors,
        })
    }

    /// Measurement in the computational basis of `A`.
    pub fn standard(a: &Shape) -> Self {
        let u = iso::basis::<S>(a).adjoint();
        Self::new(u, vec![Shape::unit(); a.dim()]).expect("basis is unitary")
    }

    pub fn unitary(&self) -> &Morphism<S> {
        &self.u
    }

    pub fn object(&self) -> &Shape {
        self.u.dom()
    }

    pub fn summands(&self) -> &[Shape] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn psi(&self, j: usize) -> &Morphism<S> {
        &self.psis[j]
    }

    pub fn pi(&self, j: usize) -> &Morphism<S> {
        &self.pis[j]
    }

    pub fn projector(&self, j: usize) -> &Morphism<S> {
        &self.projectors[j]
    }

    pub fn projectors(&self) -> &[Morphism<S>] {
        &self.projectors
    }

    /// Every summand is `I`, so each `πⱼ` is an effect `A → I`.
    pub fn is_non_degenerate(&self) -> bool {
        self.summands.iter().all(|s| *s == Shape::unit())
    }

    /// The destructive measurement `A → n·I`, which is `U` itself.
    pub fn observation(&self) -> Result<&Morphism<S>> {
        if self.is_non_degenerate() {
            Ok(&self.u)
        } else {
            Err(Error::Unsupported(
                "destructive measurement of a degenerate spectral decomposition".into(),
            ))
        }
    }
}

/// `⟨Pᵢ⟩ : A → n·A`.
pub fn nondestructive_measurement<S: Scalar>(sd: &SpectralDecomposition<S>) -> Morphism<S> {
    Morphism::tuple(sd.projectors()).expect("projectors share a domain")
}

/// `ψ : I → A` with `⟨ψ|ψ⟩ = 1`.
///
/// This is the norm condition only; whether every unit vector extends to a
/// unitary over the active semiring is not checked.
pub fn is_preparation<S: Scalar>(psi: &Morphism<S>) -> bool {
    *psi.dom() == Shape::unit() && Morphism::inner_product(psi, psi).map(|n| n.is_one()).unwrap_or(false)
}

/// One branch of a Born-rule evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BornBranch<S> {
    pub index: usize,
    /// `πⱼ ∘ ψ`, present for non-degenerate decompositions.
    pub amplitude: Option<S>,
    /// `ψ† ∘ Pⱼ ∘ ψ`
    pub probability: S,
}

pub fn born<S: Scalar>(sd: &SpectralDecomposition<S>, psi: &Morphism<S>) -> Result<Vec<BornBranch<S>>> {
    if psi.cod() != sd.object() {
        return Err(Error::mismatch("born", sd.object(), psi.cod()));
    }
    if !is_preparation(psi) {
        let norm = Morphism::inner_product(psi, psi)?;
        return Err(Error::NotPreparation(norm.to_string()));
    }
    let degenerate = !sd.is_non_degenerate();
    (0..sd.len())
        .map(|j| {
            let probability = Morphism::inner_product(psi, &sd.projector(j).compose(psi)?)?;
            let amplitude = if degenerate {
                None
            } else {
                sd.pi(j).compose(psi)?.as_scalar().cloned()
            };
            Ok(BornBranch {
                index: j,
                amplitude,
                probability,
            })
        })
        .collect()
}

/// Serializable Born-rule report with scalars in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BornReport {
    pub decomposition: String,
    pub branches: Vec<BornRow>,
    pub total: String,
    pub sums_to_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BornRow {
    pub decomposition: String,
    pub branch: usize,
    pub amplitude: Option<String>,
    pub probability: String,
}

impl BornReport {
    pub fn new<S: Scalar>(decomposition: &str, branches: &[BornBranch<S>]) -> Self {
        let total = branches.iter().fold(S::zero(), |acc, b| acc.add(&b.probability));
        BornReport {
            decomposition: decomposition.to_string(),
            branches: branches
                .iter()
                .map(|b| BornRow {
                    decomposition: decomposition.to_string(),
                    branch: b.index,
                    amplitude: b.amplitude.as_ref().map(ToString::to_string),
                    probability: b.probability.to_string(),
                })
                .collect(),
            sums_to_one: total.is_one(),
            total: total.to_string(),
        }
    }
}

/// A unitary `base : n·I → A` with `n = dim A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis<S> {
    base: Morphism<S>,
}

impl<S: Scalar> Basis<S> {
    pub fn new(base: Morphism<S>) -> Result<Self> {
        let n = base.cod().dim();
        if base.dom().unit_copies() != Some(n) {
            let expected = Shape::copies(n, &Shape::unit())?;
            return Err(Error::mismatch("basis", &expected, base.dom()));
        }
        if !base.is_unitary() {
            return Err(Error::NotUnitary(format!("basis of {}", base.cod())));
        }
        Ok(Basis { base })
    }

    pub fn computational(a: &Shape) -> Self {
        Basis { base: iso::basis(a) }
    }

    pub fn morphism(&self) -> &Morphism<S> {
        &self.base
    }

    pub fn object(&self) -> &Shape {
        self.base.cod()
    }

    /// `base_B⁻¹ ∘ f ∘ base_A`, the matrix of `f : A → B` in these bases.
    pub fn matrix_of(f: &Morphism<S>, dom: &Basis<S>, cod: &Basis<S>) -> Result<Morphism<S>> {
        cod.base.adjoint().compose(f)?.compose(&dom.base)
    }
}

/// `dim_s(A) = ε_A ∘ σ_{A*,A} ∘ η_A`.
pub fn dim_scalar<S: Scalar>(a: &Shape) -> S {
    let loop_ = Morphism::<S>::epsilon(a)
        .compose(&iso::sigma(&Shape::dual(a), a))
        .and_then(|m| m.compose(&Morphism::eta(a)))
        .expect("unit and counit endpoints");
    loop_.as_scalar().expect("I -> I").clone()
}

/// The `n` of a basis `n·I → A`; the computational one always exists.
pub fn dim_int(a: &Shape) -> usize {
    a.dim()
}

/// `w • (⌜f⌝ ∘ ⌞f_*⌟) : A* ⊗ B → A* ⊗ B`.
pub fn entanglement_projector<S: Scalar>(f: &Morphism<S>, weight: &S) -> Morphism<S> {
    f.name()
        .compose(&f.conj_star().coname())
        .expect("name and coname meet at I")
        .scale(weight)
}

/// Parses `[scalar *] (c1, c2, ...)` into a state `I → A`.
///
/// Without an explicit shape, two coordinates give `Q` and any other count
/// `n` gives `n·I`.
pub fn parse_state<S: Scalar>(text: &str, shape: Option<&Shape>) -> Result<Morphism<S>> {
    let open = text.find('(').ok_or_else(|| Error::parse(0, "expected `(`"))?;
    let close = text
        .rfind(')')
        .ok_or_else(|| Error::parse(text.len(), "expected `)`"))?;
    if close < open || !text[close + 1..].trim().is_empty() {
        return Err(Error::parse(close + 1, "trailing input after state"));
    }
    let prefix = text[..open].trim_end();
    let factor = if prefix.trim().is_empty() {
        S::one()
    } else {
        let scalar = prefix
            .strip_suffix('*')
            .ok_or_else(|| Error::parse(prefix.len(), "expected `*` before `(`"))?;
        at_offset(0, S::parse(scalar.trim()))?
    };
    let mut coords = Vec::new();
    let mut offset = open + 1;
    for part in text[open + 1..close].split(',') {
        let lead = part.len() - part.trim_start().len();
        coords.push(at_offset(offset + lead, S::parse(part.trim()))?.mul(&factor));
        offset += part.len() + 1;
    }
    let cod = match shape {
        Some(a) => a.clone(),
        None if coords.len() == 2 => Shape::qubit(),
        None => Shape::copies(coords.len(), &Shape::unit())?,
    };
    Morphism::ket(&cod, coords)
}

fn at_offset<T>(offset: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
        other => other,
    })
}
