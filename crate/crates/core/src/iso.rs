//! Structural isomorphisms as permutation matrices.
//!
//! Each generator is described by where it sends every [`BasisPath`] of its
//! domain; the matrix is read off from the two linearizations. Under the
//! left-major convention `α`, `λ`, `ρ`, `d_nm`, `u`, `ν` and `υ` come out as
//! identity matrices with retyped endpoints, while `σ` and `τ` genuinely
//! permute. Inverses are adjoints.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::scalar::Scalar;
use crate::shape::{BasisPath, Shape, ShapeKind};

/// Generators of the structural isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoKind {
    /// `α_{A,B,C} : A ⊗ (B ⊗ C) → (A ⊗ B) ⊗ C`
    Alpha,
    /// `λ_A : A → I ⊗ A`
    Lambda,
    /// `ρ_A : A → A ⊗ I`
    Rho,
    /// `σ_{A,B} : A ⊗ B → B ⊗ A`
    SigmaTensor,
    /// `σ⊕_{A,B} : A ⊕ B → B ⊕ A`
    SigmaBiproduct,
    /// `τ_{A,B,C} : A ⊗ (B ⊕ C) → (A ⊗ B) ⊕ (A ⊗ C)`
    TauLeft,
    /// `υ_{A,B,C} : (A ⊕ B) ⊗ C → (A ⊗ C) ⊕ (B ⊗ C)`
    UpsilonRight,
    /// `d_nm : n·I ⊗ m·I → (nm)·I`, parameters `n·I` and `m·I`.
    DNm,
    /// `u_I : I* → I`
    UUnit,
    /// `ν_{A,B} : (A ⊕ B)* → A* ⊕ B*`
    Nu,
    /// `u_{A,B} : (A ⊗ B)* → A* ⊗ B*`
    UTensor,
    /// The computational basis `n·I → A` with `n = dim A`.
    Basis,
}

impl IsoKind {
    pub const ALL: [IsoKind; 12] = [
        IsoKind::Alpha,
        IsoKind::Lambda,
        IsoKind::Rho,
        IsoKind::SigmaTensor,
        IsoKind::SigmaBiproduct,
        IsoKind::TauLeft,
        IsoKind::UpsilonRight,
        IsoKind::DNm,
        IsoKind::UUnit,
        IsoKind::Nu,
        IsoKind::UTensor,
        IsoKind::Basis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IsoKind::Alpha => "alpha",
            IsoKind::Lambda => "lambda",
            IsoKind::Rho => "rho",
            IsoKind::SigmaTensor => "sigma_tensor",
            IsoKind::SigmaBiproduct => "sigma_biproduct",
            IsoKind::TauLeft => "tau_left",
            IsoKind::UpsilonRight => "upsilon_right",
            IsoKind::DNm => "d_nm",
            IsoKind::UUnit => "u_I",
            IsoKind::Nu => "nu",
            IsoKind::UTensor => "u_tensor",
            IsoKind::Basis => "basis",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            IsoKind::UUnit => 0,
            IsoKind::Lambda | IsoKind::Rho | IsoKind::Basis => 1,
            IsoKind::SigmaTensor | IsoKind::SigmaBiproduct | IsoKind::DNm | IsoKind::Nu | IsoKind::UTensor => 2,
            IsoKind::Alpha | IsoKind::TauLeft | IsoKind::UpsilonRight => 3,
        }
    }
}

impl fmt::Display for IsoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IsoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IsoKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown structural iso `{s}`")))
    }
}

type PathMap = Box<dyn Fn(&BasisPath) -> Option<BasisPath>>;

fn pair(p: &BasisPath) -> Option<(&BasisPath, &BasisPath)> {
    match p {
        BasisPath::Pair(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Endpoints and basis-path action of a generator.
fn describe(kind: IsoKind, params: &[Shape]) -> Result<(Shape, Shape, PathMap)> {
    if params.len() != kind.arity() {
        return Err(Error::ShapeMismatch {
            op: "structural_iso",
            expected: format!("{} shape parameters for {kind}", kind.arity()),
            found: format!("{}", params.len()),
        });
    }
    let t = Shape::tensor;
    let b = Shape::biproduct;
    let d = Shape::dual;
    let id: PathMap = Box::new(|p| Some(p.clone()));
    Ok(match kind {
        IsoKind::Alpha => {
            let [x, y, z] = [&params[0], &params[1], &params[2]];
            let map: PathMap = Box::new(|p| {
                let (a, bc) = pair(p)?;
                let (b, c) = pair(bc)?;
                Some(BasisPath::pair(BasisPath::pair(a.clone(), b.clone()), c.clone()))
            });
            (t(x, &t(y, z)), t(&t(x, y), z), map)
        }
        IsoKind::Lambda => {
            let a = &params[0];
            let map: PathMap = Box::new(|p| Some(BasisPath::pair(BasisPath::Unit, p.clone())));
            (a.clone(), t(&Shape::unit(), a), map)
        }
        IsoKind::Rho => {
            let a = &params[0];
            let map: PathMap = Box::new(|p| Some(BasisPath::pair(p.clone(), BasisPath::Unit)));
            (a.clone(), t(a, &Shape::unit()), map)
        }
        IsoKind::SigmaTensor => {
            let [x, y] = [&params[0], &params[1]];
            let map: PathMap = Box::new(|p| {
                let (a, b) = pair(p)?;
                Some(BasisPath::pair(b.clone(), a.clone()))
            });
            (t(x, y), t(y, x), map)
        }
        IsoKind::SigmaBiproduct => {
            let [x, y] = [&params[0], &params[1]];
            let map: PathMap = Box::new(|p| match p {
                BasisPath::Left(q) => Some(BasisPath::Right(q.clone())),
                BasisPath::Right(q) => Some(BasisPath::Left(q.clone())),
                _ => None,
            });
            (b(x, y), b(y, x), map)
        }
        IsoKind::TauLeft => {
            let [x, y, z] = [&params[0], &params[1], &params[2]];
            let map: PathMap = Box::new(|p| {
                let (a, bc) = pair(p)?;
                match bc {
                    BasisPath::Left(q) => Some(BasisPath::left(BasisPath::pair(a.clone(), (**q).clone()))),
                    BasisPath::Right(q) => Some(BasisPath::right(BasisPath::pair(a.clone(), (**q).clone()))),
                    _ => None,
                }
            });
            (t(x, &b(y, z)), b(&t(x, y), &t(x, z)), map)
        }
        IsoKind::UpsilonRight => {
            let [x, y, z] = [&params[0], &params[1], &params[2]];
            let map: PathMap = Box::new(|p| {
                let (ab, c) = pair(p)?;
                match ab {
                    BasisPath::Left(q) => Some(BasisPath::left(BasisPath::pair((**q).clone(), c.clone()))),
                    BasisPath::Right(q) => Some(BasisPath::right(BasisPath::pair((**q).clone(), c.clone()))),
                    _ => None,
                }
            });
            (t(&b(x, y), z), b(&t(x, z), &t(y, z)), map)
        }
        IsoKind::DNm => {
            let (x, y) = (&params[0], &params[1]);
            let n = x.unit_copies().ok_or_else(|| Error::ShapeMismatch {
                op: "d_nm",
                expected: "n·I".into(),
                found: x.to_string(),
            })?;
            let m = y.unit_copies().ok_or_else(|| Error::ShapeMismatch {
                op: "d_nm",
                expected: "m·I".into(),
                found: y.to_string(),
            })?;
            let cod = Shape::copies(n * m, &Shape::unit())?;
            let (dom, cod2) = (t(x, y), cod.clone());
            let dom2 = dom.clone();
            let map: PathMap = Box::new(move |p| {
                let k = dom2.index_of(p)?;
                cod2.linearize().into_iter().nth(k)
            });
            (dom, cod, map)
        }
        IsoKind::UUnit => (d(&Shape::unit()), Shape::unit(), id),
        IsoKind::Nu => {
            let [x, y] = [&params[0], &params[1]];
            (d(&b(x, y)), b(&d(x), &d(y)), id)
        }
        IsoKind::UTensor => {
            let [x, y] = [&params[0], &params[1]];
            (d(&t(x, y)), t(&d(x), &d(y)), id)
        }
        IsoKind::Basis => {
            let a = params[0].clone();
            let dom = Shape::copies(a.dim(), &Shape::unit())?;
            let (dom2, a2) = (dom.clone(), a.clone());
            let map: PathMap = Box::new(move |p| {
                let k = dom2.index_of(p)?;
                a2.linearize().into_iter().nth(k)
            });
            (dom, a, map)
        }
    })
}

/// Builds the permutation matrix of a structural isomorphism generator.
pub fn structural_iso<S: Scalar>(kind: IsoKind, params: &[Shape]) -> Result<Morphism<S>> {
    let (dom, cod, map) = describe(kind, params)?;
    permutation_from_paths(&dom, &cod, |p| map(p))
}

/// The matrix with a `1` at `(index_of(f(p)), index_of(p))` for every path
/// `p` of `dom`. Fails unless `f` is a bijection onto the paths of `cod`.
pub fn permutation_from_paths<S: Scalar>(
    dom: &Shape,
    cod: &Shape,
    f: impl Fn(&BasisPath) -> Option<BasisPath>,
) -> Result<Morphism<S>> {
    let n = dom.dim();
    let bad = || Error::ShapeMismatch {
        op: "structural_iso",
        expected: format!("a bijection {dom} -> {cod}"),
        found: "an ill-typed basis map".into(),
    };
    if cod.dim() != n {
        return Err(bad());
    }
    let mut target = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for (c, p) in dom.linearize().iter().enumerate() {
        let r = f(p).and_then(|q| cod.index_of(&q)).ok_or_else(bad)?;
        if hit[r] {
            return Err(bad());
        }
        hit[r] = true;
        target[c] = r;
    }
    Ok(Morphism::from_fn(dom, cod, |r, c| {
        if target[c] == r {
            S::one()
        } else {
            S::zero()
        }
    }))
}

pub fn alpha<S: Scalar>(a: &Shape, b: &Shape, c: &Shape) -> Morphism<S> {
    infallible(IsoKind::Alpha, &[a.clone(), b.clone(), c.clone()])
}

pub fn alpha_inv<S: Scalar>(a: &Shape, b: &Shape, c: &Shape) -> Morphism<S> {
    alpha::<S>(a, b, c).adjoint()
}

pub fn lambda<S: Scalar>(a: &Shape) -> Morphism<S> {
    infallible(IsoKind::Lambda, std::slice::from_ref(a))
}

pub fn lambda_inv<S: Scalar>(a: &Shape) -> Morphism<S> {
    lambda::<S>(a).adjoint()
}

pub fn rho<S: Scalar>(a: &Shape) -> Morphism<S> {
    infallible(IsoKind::Rho, std::slice::from_ref(a))
}

pub fn rho_inv<S: Scalar>(a: &Shape) -> Morphism<S> {
    rho::<S>(a).adjoint()
}

pub fn sigma<S: Scalar>(a: &Shape, b: &Shape) -> Morphism<S> {
    infallible(IsoKind::SigmaTensor, &[a.clone(), b.clone()])
}

pub fn sigma_biproduct<S: Scalar>(a: &Shape, b: &Shape) -> Morphism<S> {
    infallible(IsoKind::SigmaBiproduct, &[a.clone(), b.clone()])
}

pub fn tau<S: Scalar>(a: &Shape, b: &Shape, c: &Shape) -> Morphism<S> {
    infallible(IsoKind::TauLeft, &[a.clone(), b.clone(), c.clone()])
}

pub fn upsilon<S: Scalar>(a: &Shape, b: &Shape, c: &Shape) -> Morphism<S> {
    infallible(IsoKind::UpsilonRight, &[a.clone(), b.clone(), c.clone()])
}

pub fn u_unit<S: Scalar>() -> Morphism<S> {
    infallible(IsoKind::UUnit, &[])
}

pub fn nu<S: Scalar>(a: &Shape, b: &Shape) -> Morphism<S> {
    infallible(IsoKind::Nu, &[a.clone(), b.clone()])
}

pub fn u_tensor<S: Scalar>(a: &Shape, b: &Shape) -> Morphism<S> {
    infallible(IsoKind::UTensor, &[a.clone(), b.clone()])
}

pub fn d_nm<S: Scalar>(n: usize, m: usize) -> Result<Morphism<S>> {
    let i = Shape::unit();
    structural_iso(IsoKind::DNm, &[Shape::copies(n, &i)?, Shape::copies(m, &i)?])
}

/// `base_A : n·I → A`.
pub fn basis<S: Scalar>(a: &Shape) -> Morphism<S> {
    infallible(IsoKind::Basis, std::slice::from_ref(a))
}

/// `σ⊕_Q = base_Q ∘ σ⊕_{I,I} ∘ base_Q⁻¹`, the bit flip.
pub fn sigma_q<S: Scalar>() -> Morphism<S> {
    let i = Shape::unit();
    let base = basis::<S>(&Shape::qubit());
    base.compose(&sigma_biproduct(&i, &i))
        .and_then(|m| m.compose(&base.adjoint()))
        .expect("base_Q endpoints")
}

/// n-ary right distributivity `(⊕ Aᵢ) ⊗ C → ⊕ (Aᵢ ⊗ C)` as the tuple
/// `⟨pᵢ ⊗ 1_C⟩`.
pub fn upsilon_n<S: Scalar>(summands: &[Shape], c: &Shape) -> Result<Morphism<S>> {
    let one = Morphism::identity(c);
    let legs = (0..summands.len())
        .map(|i| Ok(Morphism::projection(i, summands)?.tensor(&one)))
        .collect::<Result<Vec<_>>>()?;
    Morphism::tuple(&legs)
}

/// n-ary left distributivity `A ⊗ (⊕ Bᵢ) → ⊕ (A ⊗ Bᵢ)` as the tuple
/// `⟨1_A ⊗ pᵢ⟩`.
pub fn tau_n<S: Scalar>(a: &Shape, summands: &[Shape]) -> Result<Morphism<S>> {
    let one = Morphism::identity(a);
    let legs = (0..summands.len())
        .map(|i| Ok(one.tensor(&Morphism::projection(i, summands)?)))
        .collect::<Result<Vec<_>>>()?;
    Morphism::tuple(&legs)
}

/// `n·f = f ⊕ … ⊕ f`.
pub fn copies_of<S: Scalar>(n: usize, f: &Morphism<S>) -> Result<Morphism<S>> {
    Morphism::biproduct_all(&vec![f.clone(); n])
}

fn infallible<S: Scalar>(kind: IsoKind, params: &[Shape]) -> Morphism<S> {
    structural_iso(kind, params).expect("generator is total on its parameters")
}

/// Checks that a shape is a tensor and returns its factors.
pub fn tensor_factors(s: &Shape) -> Result<(Shape, Shape)> {
    match s.kind() {
        ShapeKind::Tensor(a, b) => Ok((a.clone(), b.clone())),
        _ => Err(Error::ShapeMismatch {
            op: "tensor_factors",
            expected: "a tensor".into(),
            found: s.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ComplexRootTwo as C;

    fn q() -> Shape {
        Shape::qubit()
    }

    fn i() -> Shape {
        Shape::unit()
    }

    fn perm_of(m: &Morphism<C>) -> Vec<usize> {
        (0..m.cols())
            .map(|c| (0..m.rows()).find(|&r| m.entry(r, c).is_one()).unwrap())
            .collect()
    }

    #[test]
    fn lambda_is_retyped_identity() {
        let l = lambda::<C>(&q());
        assert_eq!(l.cod().to_string(), "(I * Q)");
        assert_eq!(perm_of(&l), [0, 1]);
    }

    #[test]
    fn sigma_swaps_middle_entries() {
        assert_eq!(perm_of(&sigma::<C>(&q(), &q())), [0, 2, 1, 3]);
    }

    #[test]
    fn tau_interleaves() {
        let t = tau::<C>(&q(), &i(), &i());
        assert_eq!(t.cod().to_string(), "((Q * I) + (Q * I))");
        assert_eq!(perm_of(&t), [0, 2, 1, 3]);
    }

    #[test]
    fn upsilon_is_identity() {
        let u = upsilon::<C>(&i(), &i(), &q());
        assert_eq!(u.dom().to_string(), "((I + I) * Q)");
        assert_eq!(u.cod().to_string(), "((I * Q) + (I * Q))");
        assert_eq!(perm_of(&u), [0, 1, 2, 3]);
    }

    #[test]
    fn n_ary_distributors_agree_with_binary() {
        let (a, b, c) = (q(), Shape::tensor(&q(), &q()), i());
        assert_eq!(
            upsilon_n::<C>(&[a.clone(), b.clone()], &c).unwrap(),
            upsilon(&a, &b, &c)
        );
        assert_eq!(tau_n::<C>(&a, &[b.clone(), c.clone()]).unwrap(), tau(&a, &b, &c));
    }

    #[test]
    fn bit_flip() {
        assert_eq!(perm_of(&sigma_q::<C>()), [1, 0]);
    }

    #[test]
    fn d_nm_shapes() {
        let d = d_nm::<C>(2, 3).unwrap();
        assert_eq!(d.cols(), 6);
        assert_eq!(d.cod().unit_copies(), Some(6));
        assert!(d.is_identity() || perm_of(&d) == [0, 1, 2, 3, 4, 5]);
        assert!(structural_iso::<C>(IsoKind::DNm, &[q(), i()]).is_err());
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(
            structural_iso::<C>(IsoKind::Alpha, &[q()]),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn every_generator_is_unitary() {
        let shapes = [i(), q(), Shape::biproduct(&i(), &q()), Shape::dual(&q())];
        for kind in IsoKind::ALL {
            if kind == IsoKind::DNm {
                continue;
            }
            let params = vec![shapes[2].clone(); kind.arity()];
            let m = structural_iso::<C>(kind, &params).unwrap();
            assert!(m.is_unitary(), "{kind}");
        }
        for s in &shapes {
            assert!(basis::<C>(s).is_unitary());
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in IsoKind::ALL {
            assert_eq!(kind.name().parse::<IsoKind>().unwrap(), kind);
        }
    }
}
