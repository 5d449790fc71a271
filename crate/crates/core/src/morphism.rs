//! Morphisms of the matrix category over a [`Scalar`] semiring: composition,
//! tensor, biproducts, the compact closed structure and adjoints.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shape::{Shape, ShapeKind};

/// A dense matrix with typed endpoints.
///
/// Entry `(r, c)` is the coefficient of codomain basis element `r` in the
/// image of domain basis element `c`, both in [`Shape::linearize`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism<S> {
    dom: Shape,
    cod: Shape,
    entries: Vec<S>,
}

impl<S: Scalar> Morphism<S> {
    pub fn from_fn(dom: &Shape, cod: &Shape, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let (rows, cols) = (cod.dim(), dom.dim());
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            entries,
        }
    }

    /// Builds a morphism from row-major entries.
    pub fn from_entries(dom: &Shape, cod: &Shape, entries: Vec<S>) -> Result<Self> {
        if entries.len() != dom.dim() * cod.dim() {
            return Err(Error::ShapeMismatch {
                op: "from_entries",
                expected: format!("{} entries for {dom} -> {cod}", dom.dim() * cod.dim()),
                found: format!("{} entries", entries.len()),
            });
        }
        Ok(Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            entries,
        })
    }

    pub fn from_rows(dom: &Shape, cod: &Shape, rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.len() != cod.dim() || rows.iter().any(|r| r.len() != dom.dim()) {
            return Err(Error::ShapeMismatch {
                op: "from_rows",
                expected: format!("{}x{} matrix", cod.dim(), dom.dim()),
                found: format!(
                    "{} rows of lengths {:?}",
                    rows.len(),
                    rows.iter().map(Vec::len).collect::<Vec<_>>()
                ),
            });
        }
        Ok(Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries, convenient for transcribing fixed matrices. Negative
    /// entries need a ring.
    pub fn from_ints(dom: &Shape, cod: &Shape, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&n| int_scalar::<S>(n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(dom, cod, rows)
    }

    pub fn identity(a: &Shape) -> Self {
        Self::from_fn(a, a, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn zero(dom: &Shape, cod: &Shape) -> Self {
        Self::from_fn(dom, cod, |_, _| S::zero())
    }

    /// A scalar as an endomorphism of `I`.
    pub fn scalar(s: S) -> Self {
        let i = Shape::unit();
        Morphism {
            dom: i.clone(),
            cod: i,
            entries: vec![s],
        }
    }

    /// A state `I → A` from its coordinates.
    pub fn ket(cod: &Shape, coords: Vec<S>) -> Result<Self> {
        Self::from_entries(&Shape::unit(), cod, coords)
    }

    pub fn dom(&self) -> &Shape {
        &self.dom
    }

    pub fn cod(&self) -> &Shape {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    pub fn entry(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols() + c]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[S] {
        let n = self.cols();
        &self.entries[r * n..(r + 1) * n]
    }

    /// The single entry of a `1×1` morphism.
    pub fn as_scalar(&self) -> Option<&S> {
        (self.entries.len() == 1).then(|| &self.entries[0])
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Morphism<S>) -> Result<Self> {
        if self.dom != f.cod {
            return Err(Error::mismatch("compose", &self.dom, &f.cod));
        }
        let (n, k, m) = (self.rows(), self.cols(), f.cols());
        let mut out = vec![S::zero(); n * m];
        for r in 0..n {
            for j in 0..k {
                let a = &self.entries[r * k + j];
                if a.is_zero() {
                    continue;
                }
                for c in 0..m {
                    let b = &f.entries[j * m + c];
                    if !b.is_zero() {
                        out[r * m + c] = out[r * m + c].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(Morphism {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            entries: out,
        })
    }

    /// `g ∘ self`, for writing diagrams in the order arrows are traversed.
    pub fn then(&self, g: &Morphism<S>) -> Result<Self> {
        g.compose(self)
    }

    /// Kronecker product with left-major index order.
    pub fn tensor(&self, g: &Morphism<S>) -> Self {
        let (gr, gc) = (g.rows(), g.cols());
        let dom = Shape::tensor(&self.dom, &g.dom);
        let cod = Shape::tensor(&self.cod, &g.cod);
        Self::from_fn(&dom, &cod, |r, c| {
            let a = self.entry(r / gr, c / gc);
            if a.is_zero() {
                S::zero()
            } else {
                a.mul(g.entry(r % gr, c % gc))
            }
        })
    }

    /// Block-diagonal `f ⊕ g`.
    pub fn biproduct(&self, g: &Morphism<S>) -> Self {
        Self::biproduct_all(&[self.clone(), g.clone()]).expect("two summands")
    }

    /// `f₁ ⊕ … ⊕ fₙ` over right-nested biproducts.
    pub fn biproduct_all(fs: &[Morphism<S>]) -> Result<Self> {
        let dom = Shape::biproduct_of(&fs.iter().map(|f| f.dom.clone()).collect::<Vec<_>>())?;
        let cod = Shape::biproduct_of(&fs.iter().map(|f| f.cod.clone()).collect::<Vec<_>>())?;
        let mut m = Self::zero(&dom, &cod);
        let (mut r0, mut c0) = (0, 0);
        let cols = m.cols();
        for f in fs {
            for r in 0..f.rows() {
                for c in 0..f.cols() {
                    m.entries[(r0 + r) * cols + c0 + c] = f.entry(r, c).clone();
                }
            }
            r0 += f.rows();
            c0 += f.cols();
        }
        Ok(m)
    }

    /// `⟨f₁, …, fₙ⟩ : A → ⊕ Bᵢ` for `fᵢ : A → Bᵢ`.
    pub fn tuple(fs: &[Morphism<S>]) -> Result<Self> {
        let first = fs.first().ok_or_else(|| Error::Unsupported("empty tuple".into()))?;
        for f in fs {
            if f.dom != first.dom {
                return Err(Error::mismatch("tuple", &first.dom, &f.dom));
            }
        }
        let cod = Shape::biproduct_of(&fs.iter().map(|f| f.cod.clone()).collect::<Vec<_>>())?;
        Ok(Morphism {
            dom: first.dom.clone(),
            cod,
            entries: fs.iter().flat_map(|f| f.entries.iter().cloned()).collect(),
        })
    }

    /// `[f₁, …, fₙ] : ⊕ Aᵢ → B` for `fᵢ : Aᵢ → B`.
    pub fn cotuple(fs: &[Morphism<S>]) -> Result<Self> {
        let transposes = fs.iter().map(Morphism::transpose).collect::<Vec<_>>();
        for f in fs {
            if f.cod != fs[0].cod {
                return Err(Error::mismatch("cotuple", &fs[0].cod, &f.cod));
            }
        }
        Ok(Self::tuple(&transposes)?.transpose())
    }

    /// Transpose with endpoints swapped but not dualised.
    fn transpose(&self) -> Self {
        Self::from_fn(&self.cod, &self.dom, |r, c| self.entry(c, r).clone())
    }

    pub fn map_entries(&self, f: impl Fn(&S) -> S) -> Self {
        Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise sum of parallel morphisms.
    pub fn add(&self, g: &Morphism<S>) -> Result<Self> {
        if self.dom != g.dom {
            return Err(Error::mismatch("add", &self.dom, &g.dom));
        }
        if self.cod != g.cod {
            return Err(Error::mismatch("add", &self.cod, &g.cod));
        }
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self.entries.iter().zip(&g.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn negate(&self) -> Result<Self> {
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self.entries.iter().map(S::neg).collect::<Result<_>>()?,
        })
    }

    /// `s • f`.
    pub fn scale(&self, s: &S) -> Self {
        self.map_entries(|x| s.mul(x))
    }

    /// `η_A : I → A* ⊗ A`.
    pub fn eta(a: &Shape) -> Self {
        let n = a.dim();
        let cod = Shape::tensor(&Shape::dual(a), a);
        Self::from_fn(&Shape::unit(), &cod, |r, _| unit_at(r / n == r % n))
    }

    /// `ε_A : A ⊗ A* → I`.
    pub fn epsilon(a: &Shape) -> Self {
        let n = a.dim();
        let dom = Shape::tensor(a, &Shape::dual(a));
        Self::from_fn(&dom, &Shape::unit(), |_, c| unit_at(c / n == c % n))
    }

    /// `⌜f⌝ = (1_{A*} ⊗ f) ∘ η_A : I → A* ⊗ B`; the entry at pair `(i, j)` is
    /// the coefficient of `e_j` in `f(e_i)`.
    pub fn name(&self) -> Self {
        let (n, m) = (self.cols(), self.rows());
        let cod = Shape::tensor(&Shape::dual(&self.dom), &self.cod);
        Self::from_fn(&Shape::unit(), &cod, |r, _| self.entry(r % m, r / m).clone()).debug_check_len(n * m)
    }

    /// `⌞f⌟ = ε_B ∘ (f ⊗ 1_{B*}) : A ⊗ B* → I`.
    pub fn coname(&self) -> Self {
        let m = self.rows();
        let dom = Shape::tensor(&self.dom, &Shape::dual(&self.cod));
        Self::from_fn(&dom, &Shape::unit(), |_, c| self.entry(c % m, c / m).clone())
    }

    /// Inverts [`Morphism::name`]: `I → X ⊗ B` is the name of a morphism
    /// `X* → B`.
    pub fn unname(&self) -> Result<Self> {
        let (x, b) = match (self.dom.kind(), self.cod.kind()) {
            (ShapeKind::Unit, ShapeKind::Tensor(x, b)) => (x, b),
            _ => {
                return Err(Error::ShapeMismatch {
                    op: "unname",
                    expected: "I -> (A^ * B)".into(),
                    found: format!("{} -> {}", self.dom, self.cod),
                })
            }
        };
        let a = Shape::dual(x);
        let m = b.dim();
        Ok(Self::from_fn(&a, b, |r, c| self.entries[c * m + r].clone()))
    }

    /// Inverts [`Morphism::coname`]: `A ⊗ X → I` is the coname of a morphism
    /// `A → X*`.
    pub fn unconame(&self) -> Result<Self> {
        let (a, x) = match (self.dom.kind(), self.cod.kind()) {
            (ShapeKind::Tensor(a, x), ShapeKind::Unit) => (a, x),
            _ => {
                return Err(Error::ShapeMismatch {
                    op: "unconame",
                    expected: "(A * B^) -> I".into(),
                    found: format!("{} -> {}", self.dom, self.cod),
                })
            }
        };
        let b = Shape::dual(x);
        let m = b.dim();
        Ok(Self::from_fn(a, &b, |r, c| self.entries[c * m + r].clone()))
    }

    /// `f* : B* → A*`, the transpose.
    pub fn dual(&self) -> Self {
        let dom = Shape::dual(&self.cod);
        let cod = Shape::dual(&self.dom);
        Self::from_fn(&dom, &cod, |r, c| self.entry(c, r).clone())
    }

    /// `f_* : A* → B*`, the entrywise conjugate (covariant).
    pub fn conj_star(&self) -> Self {
        Morphism {
            dom: Shape::dual(&self.dom),
            cod: Shape::dual(&self.cod),
            entries: self.entries.iter().map(S::conj).collect(),
        }
    }

    /// `f† : B → A`, the conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(&self.cod, &self.dom, |r, c| self.entry(c, r).conj())
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && *self == Self::identity(&self.dom)
    }

    /// `U†U = 1` and `UU† = 1`.
    pub fn is_unitary(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let u_dag = self.adjoint();
        let a = u_dag.compose(self).expect("adjoint composes");
        let b = self.compose(&u_dag).expect("adjoint composes");
        a.is_identity() && b.is_identity()
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.dom == self.cod && self.adjoint() == *self
    }

    pub fn is_projector(&self) -> bool {
        self.is_self_adjoint() && self.compose(self).expect("endomorphism") == *self
    }

    /// `⟨ψ|φ⟩ = ψ† ∘ φ` for states `ψ, φ : I → A`.
    pub fn inner_product(psi: &Morphism<S>, phi: &Morphism<S>) -> Result<S> {
        let unit = Shape::unit();
        if psi.dom != unit {
            return Err(Error::mismatch("inner_product", &unit, &psi.dom));
        }
        if phi.dom != unit {
            return Err(Error::mismatch("inner_product", &unit, &phi.dom));
        }
        if psi.cod != phi.cod {
            return Err(Error::mismatch("inner_product", &psi.cod, &phi.cod));
        }
        Ok(psi
            .entries
            .iter()
            .zip(&phi.entries)
            .fold(S::zero(), |acc, (x, y)| acc.add(&x.conj().mul(y))))
    }

    /// `q_i : Aᵢ → ⊕ A`.
    pub fn injection(i: usize, summands: &[Shape]) -> Result<Self> {
        let target = summands.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: summands.len(),
        })?;
        let cod = Shape::biproduct_of(summands)?;
        let offset: usize = summands[..i].iter().map(Shape::dim).sum();
        Ok(Self::from_fn(target, &cod, |r, c| unit_at(r == offset + c)))
    }

    /// `p_i : ⊕ A → Aᵢ`, the adjoint of [`Morphism::injection`].
    pub fn projection(i: usize, summands: &[Shape]) -> Result<Self> {
        Ok(Self::injection(i, summands)?.adjoint())
    }

    /// First `(row, col)` at which two equally-typed morphisms differ.
    pub fn first_difference(&self, other: &Morphism<S>) -> Option<(usize, usize)> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some((0, 0));
        }
        let cols = self.cols();
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / cols, k % cols))
    }

    fn debug_check_len(self, n: usize) -> Self {
        debug_assert_eq!(self.entries.len(), n);
        self
    }

    /// Parses the matrix text format written by `Display`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::parse(0, "empty matrix text"))?;
        let (dom, cod) = header
            .split_once("->")
            .ok_or_else(|| Error::parse(0, "header must read `DOM -> COD`"))?;
        let dom = Shape::parse(dom.trim())?;
        let cod = Shape::parse(cod.trim())?;
        let rows = lines
            .map(|line| line.split(',').map(|e| S::parse(e.trim())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&dom, &cod, rows)
    }
}

fn unit_at<S: Scalar>(on: bool) -> S {
    if on {
        S::one()
    } else {
        S::zero()
    }
}

pub(crate) fn int_scalar<S: Scalar>(n: i64) -> Result<S> {
    let m = S::from_count(n.unsigned_abs() as usize);
    if n < 0 {
        m.neg()
    } else {
        Ok(m)
    }
}

/// Matrix text format: a `DOM -> COD` header line, then one line per row
/// with comma-separated scalars.
impl<S: fmt::Display> fmt::Display for Morphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        for row in self.entries.chunks(self.dom.dim()) {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Morphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        for row in self.entries.chunks(self.dom.dim()) {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Boolean, ComplexRootTwo as C};

    fn q() -> Shape {
        Shape::qubit()
    }

    fn m(rows: &[&[i64]]) -> Morphism<C> {
        Morphism::from_ints(&q(), &q(), rows).unwrap()
    }

    fn beta2() -> Morphism<C> {
        m(&[&[0, 1], &[1, 0]])
    }

    fn beta3() -> Morphism<C> {
        m(&[&[1, 0], &[0, -1]])
    }

    fn beta4() -> Morphism<C> {
        m(&[&[0, -1], &[1, 0]])
    }

    fn col(m: &Morphism<C>) -> Vec<String> {
        m.entries().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn bell_maps_square() {
        let id = Morphism::<C>::identity(&q());
        assert_eq!(beta2().compose(&beta2()).unwrap(), id);
        assert_eq!(beta3().compose(&beta3()).unwrap(), id);
        assert_eq!(beta4().compose(&beta4()).unwrap(), id.negate().unwrap());
        assert_eq!(id.compose(&beta4()).unwrap(), beta4());
    }

    #[test]
    fn compose_checks_shapes() {
        let f = Morphism::<C>::identity(&Shape::tensor(&q(), &q()));
        assert!(matches!(f.compose(&beta2()), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn kronecker_of_bell_maps() {
        let k = beta2().tensor(&beta3());
        let expected = Morphism::<C>::from_ints(
            &Shape::tensor(&q(), &q()),
            &Shape::tensor(&q(), &q()),
            &[&[0, 0, 1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, -1, 0, 0]],
        )
        .unwrap();
        assert_eq!(k, expected);
        let id = Morphism::<C>::identity(&q());
        assert!(id.tensor(&id).is_identity());
    }

    #[test]
    fn biproduct_of_identities() {
        let id = Morphism::<C>::identity(&q());
        let b = id.biproduct(&id);
        assert_eq!(*b.dom(), Shape::biproduct(&q(), &q()));
        assert!(b.is_identity());
        assert_eq!(b.add(&Morphism::zero(b.dom(), b.cod())).unwrap(), b);
    }

    #[test]
    fn cotuple_is_side_by_side() {
        let f = Morphism::<C>::ket(&q(), vec![C::one(), C::i()]).unwrap();
        let g = Morphism::<C>::ket(&q(), vec![C::zero(), C::integer(3)]).unwrap();
        let h = Morphism::cotuple(&[f, g]).unwrap();
        assert_eq!(h.row(0), &[C::one(), C::zero()]);
        assert_eq!(h.row(1), &[C::i(), C::integer(3)]);
    }

    #[test]
    fn eta_and_epsilon() {
        assert_eq!(col(&Morphism::<C>::eta(&q())), ["1", "0", "0", "1"]);
        assert_eq!(col(&Morphism::<C>::epsilon(&q())), ["1", "0", "0", "1"]);
        assert_eq!(col(&Morphism::<C>::eta(&Shape::unit())), ["1"]);
        let b = Morphism::<Boolean>::eta(&q());
        assert_eq!(
            b.entries(),
            &[Boolean(true), Boolean(false), Boolean(false), Boolean(true)]
        );
    }

    #[test]
    fn names() {
        assert_eq!(Morphism::<C>::identity(&q()).name(), Morphism::eta(&q()));
        assert_eq!(Morphism::<C>::identity(&q()).coname(), Morphism::epsilon(&q()));
        assert_eq!(col(&beta2().name()), ["0", "1", "1", "0"]);
        // the coefficient of e_1 in β₄(e_0) sits at pair (0, 1)
        assert_eq!(col(&beta4().name()), ["0", "1", "-1", "0"]);
        assert_eq!(beta3().name().unname().unwrap(), beta3());
        assert_eq!(beta4().coname().unconame().unwrap(), beta4());
        assert!(beta4().unname().is_err());
    }

    #[test]
    fn adjoints() {
        let f = Morphism::<C>::from_rows(&q(), &q(), vec![vec![C::i(), C::zero()], vec![C::zero(), C::one()]]).unwrap();
        let expected = Morphism::<C>::from_rows(
            &q(),
            &q(),
            vec![vec![C::i().negated(), C::zero()], vec![C::zero(), C::one()]],
        )
        .unwrap();
        assert_eq!(f.adjoint(), expected);
        assert_eq!(f.adjoint().adjoint(), f);
        assert_eq!(f.conj_star().dual(), f.adjoint());
        assert_eq!(f.dual().conj_star(), f.adjoint());
    }

    #[test]
    fn boolean_adjoint_is_converse() {
        let r = Morphism::<Boolean>::from_ints(&q(), &Shape::unit(), &[&[1, 0]]).unwrap();
        assert_eq!(r.adjoint(), r.dual().conj_star());
        assert_eq!(r.adjoint().entries(), &[Boolean(true), Boolean(false)]);
    }

    #[test]
    fn inner_products() {
        let e0 = Morphism::<C>::ket(&q(), vec![C::one(), C::zero()]).unwrap();
        let e1 = Morphism::<C>::ket(&q(), vec![C::zero(), C::one()]).unwrap();
        let ii = Morphism::<C>::ket(&q(), vec![C::zero(), C::i()]).unwrap();
        assert_eq!(Morphism::inner_product(&e0, &e1).unwrap(), C::zero());
        assert_eq!(Morphism::inner_product(&ii, &ii).unwrap(), C::one());
        assert!(Morphism::inner_product(&e0, &beta2()).is_err());
    }

    #[test]
    fn boolean_inner_product_is_intersection() {
        let all = Boolean::test_support();
        for a in &all {
            for b in &all {
                for c in &all {
                    for d in &all {
                        let x = Morphism::ket(&q(), vec![*a, *b]).unwrap();
                        let y = Morphism::ket(&q(), vec![*c, *d]).unwrap();
                        let meets = (a.0 && c.0) || (b.0 && d.0);
                        assert_eq!(Morphism::inner_product(&x, &y).unwrap(), Boolean(meets));
                    }
                }
            }
        }
    }

    #[test]
    fn unitarity_checks() {
        let id = Morphism::<C>::identity(&q());
        assert!(id.is_unitary() && id.is_self_adjoint() && id.is_projector());
        assert!(beta4().is_unitary());
        assert!(!beta4().is_self_adjoint());
        assert!(!m(&[&[1, 1], &[0, 1]]).is_unitary());
    }

    #[test]
    fn scaling() {
        let s = C::half_sqrt2();
        let f = beta3();
        assert_eq!(f.scale(&C::one()), f);
        assert_eq!(f.scale(&s).scale(&s), f.scale(&C::rational(1, 2)));
    }

    #[test]
    fn injections_and_projections() {
        let ii = [Shape::unit(), Shape::unit()];
        assert_eq!(col(&Morphism::<C>::injection(0, &ii).unwrap()), ["1", "0"]);
        let qq = [q(), q()];
        let mut total = Morphism::<C>::zero(&Shape::biproduct(&q(), &q()), &Shape::biproduct(&q(), &q()));
        for i in 0..2 {
            let qi = Morphism::<C>::injection(i, &qq).unwrap();
            let pi = Morphism::<C>::projection(i, &qq).unwrap();
            total = total.add(&qi.compose(&pi).unwrap()).unwrap();
            for j in 0..2 {
                let pj = Morphism::<C>::projection(j, &qq).unwrap();
                let pq = pj.compose(&qi).unwrap();
                if i == j {
                    assert!(pq.is_identity());
                } else {
                    assert_eq!(pq, Morphism::zero(&q(), &q()));
                }
            }
        }
        assert!(total.is_identity());
        assert!(matches!(
            Morphism::<C>::injection(2, &qq),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let f = beta4().tensor(&beta2()).scale(&C::half_sqrt2());
        let text = f.to_string();
        assert!(text.starts_with("(Q * Q) -> (Q * Q)\n"));
        assert_eq!(Morphism::<C>::parse_text(&text).unwrap(), f);
        assert!(Morphism::<C>::parse_text("Q -> Q\n1, 0\n").is_err());
    }

    #[test]
    fn negative_entries_need_a_ring() {
        assert!(matches!(
            Morphism::<Boolean>::from_ints(&q(), &q(), &[&[1, 0], &[0, -1]]),
            Err(Error::Unsupported(_))
        ));
    }
}
