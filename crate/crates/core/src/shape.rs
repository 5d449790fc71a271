//! Object expressions over `I`, `Q`, `⊗`, `⊕` and `(·)*`, and their
//! lexicographic basis linearization.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An object of the matrix category: a tree over the tensor unit `I`, the
/// qubit `Q`, tensor, biproduct and dual.
///
/// Duals are strictly involutive: `Shape::dual(&Shape::dual(&x)) == x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Shape(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
enum Node {
    Unit,
    Qubit,
    Tensor(Shape, Shape),
    Biproduct(Shape, Shape),
    Dual(Shape),
}

/// Borrowed view of the top node of a [`Shape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind<'a> {
    Unit,
    Qubit,
    Tensor(&'a Shape, &'a Shape),
    Biproduct(&'a Shape, &'a Shape),
    Dual(&'a Shape),
}

impl Shape {
    pub fn unit() -> Shape {
        Shape(Arc::new(Node::Unit))
    }

    pub fn qubit() -> Shape {
        Shape(Arc::new(Node::Qubit))
    }

    pub fn tensor(a: &Shape, b: &Shape) -> Shape {
        Shape(Arc::new(Node::Tensor(a.clone(), b.clone())))
    }

    pub fn biproduct(a: &Shape, b: &Shape) -> Shape {
        Shape(Arc::new(Node::Biproduct(a.clone(), b.clone())))
    }

    pub fn dual(a: &Shape) -> Shape {
        match &*a.0 {
            Node::Dual(inner) => inner.clone(),
            _ => Shape(Arc::new(Node::Dual(a.clone()))),
        }
    }

    /// Right-nested biproduct `A₁ ⊕ (A₂ ⊕ (… ⊕ Aₙ))`; a single summand is
    /// returned as is.
    pub fn biproduct_of(summands: &[Shape]) -> Result<Shape> {
        match summands {
            [] => Err(Error::Unsupported("empty biproduct (zero object)".into())),
            [only] => Ok(only.clone()),
            [first, rest @ ..] => Ok(Shape::biproduct(first, &Shape::biproduct_of(rest)?)),
        }
    }

    /// `n·A`, the n-fold biproduct of `A` with itself.
    pub fn copies(n: usize, a: &Shape) -> Result<Shape> {
        Shape::biproduct_of(&vec![a.clone(); n])
    }

    pub fn kind(&self) -> ShapeKind<'_> {
        match &*self.0 {
            Node::Unit => ShapeKind::Unit,
            Node::Qubit => ShapeKind::Qubit,
            Node::Tensor(a, b) => ShapeKind::Tensor(a, b),
            Node::Biproduct(a, b) => ShapeKind::Biproduct(a, b),
            Node::Dual(a) => ShapeKind::Dual(a),
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind() {
            ShapeKind::Unit => 1,
            ShapeKind::Qubit => 2,
            ShapeKind::Tensor(a, b) => a.dim() * b.dim(),
            ShapeKind::Biproduct(a, b) => a.dim() + b.dim(),
            ShapeKind::Dual(a) => a.dim(),
        }
    }

    /// Splits the first `n` right-nested summands off this shape.
    pub fn split_summands(&self, n: usize) -> Result<Vec<Shape>> {
        let mut out = Vec::with_capacity(n);
        let mut cur = self.clone();
        for _ in 1..n {
            let (l, r) = match cur.kind() {
                ShapeKind::Biproduct(l, r) => (l.clone(), r.clone()),
                _ => {
                    return Err(Error::ShapeMismatch {
                        op: "split_summands",
                        expected: format!("a biproduct of {n} summands"),
                        found: self.to_string(),
                    })
                }
            };
            out.push(l);
            cur = r;
        }
        if n > 0 {
            out.push(cur);
        }
        Ok(out)
    }

    /// `Some(n)` when this shape is exactly `n·I` in right-nested form.
    pub fn unit_copies(&self) -> Option<usize> {
        match self.kind() {
            ShapeKind::Unit => Some(1),
            ShapeKind::Biproduct(l, r) if *l == Shape::unit() => r.unit_copies().map(|n| n + 1),
            _ => None,
        }
    }

    pub fn linearize(&self) -> Vec<BasisPath> {
        match self.kind() {
            ShapeKind::Unit => vec![BasisPath::Unit],
            ShapeKind::Qubit => vec![BasisPath::Bit(0), BasisPath::Bit(1)],
            ShapeKind::Tensor(a, b) => {
                let right = b.linearize();
                a.linearize()
                    .into_iter()
                    .flat_map(|p| {
                        right
                            .iter()
                            .map(move |q| BasisPath::Pair(Box::new(p.clone()), Box::new(q.clone())))
                    })
                    .collect()
            }
            ShapeKind::Biproduct(a, b) => a
                .linearize()
                .into_iter()
                .map(|p| BasisPath::Left(Box::new(p)))
                .chain(b.linearize().into_iter().map(|p| BasisPath::Right(Box::new(p))))
                .collect(),
            ShapeKind::Dual(a) => a.linearize(),
        }
    }

    /// Position of `path` in [`Shape::linearize`], or `None` if the path does
    /// not address this shape.
    pub fn index_of(&self, path: &BasisPath) -> Option<usize> {
        match (self.kind(), path) {
            (ShapeKind::Dual(a), _) => a.index_of(path),
            (ShapeKind::Unit, BasisPath::Unit) => Some(0),
            (ShapeKind::Qubit, BasisPath::Bit(b)) if *b < 2 => Some(*b as usize),
            (ShapeKind::Tensor(a, b), BasisPath::Pair(p, q)) => Some(a.index_of(p)? * b.dim() + b.index_of(q)?),
            (ShapeKind::Biproduct(a, _), BasisPath::Left(p)) => a.index_of(p),
            (ShapeKind::Biproduct(a, b), BasisPath::Right(p)) => Some(a.dim() + b.index_of(p)?),
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<Shape> {
        let mut p = ShapeParser { src: text, pos: 0 };
        let shape = p.sum()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(Error::parse(p.pos, "trailing input after shape"));
        }
        Ok(shape)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ShapeKind::Unit => f.write_str("I"),
            ShapeKind::Qubit => f.write_str("Q"),
            ShapeKind::Tensor(a, b) => write!(f, "({a} * {b})"),
            ShapeKind::Biproduct(a, b) => write!(f, "({a} + {b})"),
            ShapeKind::Dual(a) => write!(f, "{a}^"),
        }
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shape({self})")
    }
}

impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Shape> {
        Shape::parse(s)
    }
}

/// Grammar: `sum := prod ('+' sum)?`, `prod := post ('*' prod)?`,
/// `post := atom '^'*`, `atom := I | Q | '(' sum ')'`. `⊗` and `⊕` are
/// accepted for `*` and `+`. Both binary operators nest to the right.
struct ShapeParser<'a> {
    src: &'a str,
    pos: usize,
}

impl ShapeParser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat_any(&mut self, tokens: &[&str]) -> bool {
        self.skip_ws();
        for t in tokens {
            if self.src[self.pos..].starts_with(t) {
                self.pos += t.len();
                return true;
            }
        }
        false
    }

    fn sum(&mut self) -> Result<Shape> {
        let left = self.prod()?;
        if self.eat_any(&["+", "⊕"]) {
            Ok(Shape::biproduct(&left, &self.sum()?))
        } else {
            Ok(left)
        }
    }

    fn prod(&mut self) -> Result<Shape> {
        let left = self.post()?;
        if self.eat_any(&["*", "⊗"]) {
            Ok(Shape::tensor(&left, &self.prod()?))
        } else {
            Ok(left)
        }
    }

    fn post(&mut self) -> Result<Shape> {
        let mut s = self.atom()?;
        while self.eat_any(&["^"]) {
            s = Shape::dual(&s);
        }
        Ok(s)
    }

    fn atom(&mut self) -> Result<Shape> {
        if self.eat_any(&["I"]) {
            Ok(Shape::unit())
        } else if self.eat_any(&["Q"]) {
            Ok(Shape::qubit())
        } else if self.eat_any(&["("]) {
            let s = self.sum()?;
            if !self.eat_any(&[")"]) {
                return Err(Error::parse(self.pos, "expected `)`"));
            }
            Ok(s)
        } else {
            Err(Error::parse(self.pos, "expected `I`, `Q` or `(`"))
        }
    }
}

/// Address of one basis element of a [`Shape`].
///
/// Tensor nodes contribute a pair, biproduct nodes a tagged branch, dual nodes
/// are transparent and leaves terminate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisPath {
    Unit,
    Bit(u8),
    Pair(Box<BasisPath>, Box<BasisPath>),
    Left(Box<BasisPath>),
    Right(Box<BasisPath>),
}

impl BasisPath {
    pub fn pair(a: BasisPath, b: BasisPath) -> BasisPath {
        BasisPath::Pair(Box::new(a), Box::new(b))
    }

    pub fn left(p: BasisPath) -> BasisPath {
        BasisPath::Left(Box::new(p))
    }

    pub fn right(p: BasisPath) -> BasisPath {
        BasisPath::Right(Box::new(p))
    }
}

impl fmt::Display for BasisPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisPath::Unit => f.write_str("*"),
            BasisPath::Bit(b) => write!(f, "{b}"),
            BasisPath::Pair(a, b) => write!(f, "({a},{b})"),
            BasisPath::Left(p) if **p == BasisPath::Unit => f.write_str("L"),
            BasisPath::Right(p) if **p == BasisPath::Unit => f.write_str("R"),
            BasisPath::Left(p) => write!(f, "L.{p}"),
            BasisPath::Right(p) => write!(f, "R.{p}"),
        }
    }
}
