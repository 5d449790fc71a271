//! Seeded generators for shapes, morphisms, unitaries, decompositions and
//! teleportation bases.
//!
//! Unitaries are products of permutations, diagonal phases and, when the
//! semiring has `-1` and `s`, embedded two-level Hadamard blocks. They form
//! a subgroup of all unitaries, not all of them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::morphism::Morphism;
use crate::protocols::{bell_maps, TeleportationBase};
use crate::qm::SpectralDecomposition;
use crate::scalar::Scalar;
use crate::shape::Shape;

/// ChaCha8-backed generator; identical seeds give identical streams on every
/// platform.
#[derive(Debug, Clone)]
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// A random shape with `dim ≤ max_dim` (at least `I`).
    pub fn shape(&mut self, max_dim: usize) -> Shape {
        self.shape_at(max_dim.max(1), 3)
    }

    fn shape_at(&mut self, max_dim: usize, depth: usize) -> Shape {
        let leaf = if max_dim >= 2 && self.coin() {
            Shape::qubit()
        } else {
            Shape::unit()
        };
        if depth == 0 || max_dim < 2 {
            return leaf;
        }
        let shape = match self.below(5) {
            0 | 1 => leaf,
            2 => {
                let l = self.shape_at(max_dim / 2, depth - 1);
                let r = self.shape_at(max_dim / l.dim(), depth - 1);
                Shape::tensor(&l, &r)
            }
            3 => {
                let l = self.shape_at(max_dim - 1, depth - 1);
                let r = self.shape_at(max_dim - l.dim(), depth - 1);
                Shape::biproduct(&l, &r)
            }
            _ => Shape::dual(&self.shape_at(max_dim, depth - 1)),
        };
        debug_assert!(shape.dim() <= max_dim);
        shape
    }

    pub fn scalar<S: Scalar>(&mut self) -> S {
        let pool = S::test_support();
        pool[self.below(pool.len())].clone()
    }

    /// Entries drawn from [`Scalar::test_support`].
    pub fn morphism<S: Scalar>(&mut self, dom: &Shape, cod: &Shape) -> Morphism<S> {
        let pool = S::test_support();
        Morphism::from_fn(dom, cod, |_, _| pool[self.rng.random_range(0..pool.len())].clone())
    }

    pub fn state<S: Scalar>(&mut self, a: &Shape) -> Morphism<S> {
        self.morphism(&Shape::unit(), a)
    }

    /// A permutation matrix on `A`.
    pub fn permutation<S: Scalar>(&mut self, a: &Shape) -> Morphism<S> {
        let mut perm: Vec<usize> = (0..a.dim()).collect();
        perm.shuffle(&mut self.rng);
        Morphism::from_fn(a, a, |r, c| if perm[c] == r { S::one() } else { S::zero() })
    }

    /// A unitary endomorphism of `A` from the generated subgroup.
    pub fn unitary<S: Scalar>(&mut self, a: &Shape) -> Morphism<S> {
        let n = a.dim();
        let phases = S::phases();
        let diag: Vec<S> = (0..n).map(|_| phases[self.below(phases.len())].clone()).collect();
        let d = Morphism::from_fn(a, a, |r, c| if r == c { diag[r].clone() } else { S::zero() });
        let mut u = self.permutation::<S>(a).compose(&d).expect("endomorphisms");
        if n >= 2 {
            if let Some(h) = self.hadamard_block::<S>(a) {
                u = u.compose(&h).expect("endomorphisms");
            }
        }
        u.compose(&self.permutation(a)).expect("endomorphisms")
    }

    /// `s·[[1, 1], [1, -1]]` on two random coordinates, identity elsewhere.
    fn hadamard_block<S: Scalar>(&mut self, a: &Shape) -> Option<Morphism<S>> {
        let s = S::teleport_scalar()?;
        let minus_s = s.neg().ok()?;
        if !self.coin() {
            return None;
        }
        let n = a.dim();
        let k = self.below(n);
        let l = (k + 1 + self.below(n - 1)) % n;
        Some(Morphism::from_fn(a, a, |r, c| {
            let block = |x: usize| x == k || x == l;
            if block(r) && block(c) {
                if r == l && c == l {
                    minus_s.clone()
                } else {
                    s.clone()
                }
            } else if r == c {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    /// A unitary `dom → cod` for shapes of equal dimension.
    pub fn unitary_between<S: Scalar>(&mut self, dom: &Shape, cod: &Shape) -> Result<Morphism<S>> {
        let u = self.unitary::<S>(dom);
        Morphism::from_entries(dom, cod, u.entries().to_vec())
    }

    /// A unit-norm state: a column of a random unitary.
    pub fn preparation<S: Scalar>(&mut self, a: &Shape) -> Morphism<S> {
        let u = self.unitary::<S>(a);
        let k = self.below(a.dim());
        Morphism::ket(a, (0..a.dim()).map(|r| u.entry(r, k).clone()).collect()).expect("one column")
    }

    /// Summands `I` and `Q` whose dimensions add up to `n`.
    pub fn partition(&mut self, n: usize) -> Vec<Shape> {
        let mut left = n.max(1);
        let mut parts = Vec::new();
        while left > 0 {
            if left >= 2 && self.coin() {
                parts.push(Shape::qubit());
                left -= 2;
            } else {
                parts.push(Shape::unit());
                left -= 1;
            }
        }
        parts
    }

    pub fn spectral<S: Scalar>(&mut self, a: &Shape) -> Result<SpectralDecomposition<S>> {
        let summands = self.partition(a.dim());
        let cod = Shape::biproduct_of(&summands)?;
        let u = self.unitary_between(a, &cod)?;
        SpectralDecomposition::new(u, summands)
    }

    /// `βᵢ' = uᵢ · V ∘ β_{π(i)} ∘ W` from the Bell maps, with random phases
    /// `uᵢ`, unitaries `V`, `W`, order `π` and a random phase on `s`.
    pub fn teleportation_base<S: Scalar>(&mut self) -> Result<TeleportationBase<S>> {
        let bell = bell_maps::<S>()?;
        let q = Shape::qubit();
        let v = self.unitary::<S>(&q);
        let w = self.unitary::<S>(&q);
        let mut order = [0, 1, 2, 3];
        order.shuffle(&mut self.rng);
        let phases = S::phases();
        let maps = order.map(|j| {
            let u = phases[self.below(phases.len())].clone();
            v.compose(&bell[j])
                .and_then(|m| m.compose(&w))
                .expect("endomorphisms of Q")
                .scale(&u)
        });
        let s = S::teleport_scalar()
            .expect("bell maps exist")
            .mul(&phases[self.below(phases.len())]);
        TeleportationBase::from_maps(s, &maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Boolean, ComplexRootTwo as C};

    #[test]
    fn reproducible() {
        let a = Gen::new(7).morphism::<C>(&Shape::qubit(), &Shape::qubit());
        let b = Gen::new(7).morphism::<C>(&Shape::qubit(), &Shape::qubit());
        assert_eq!(a, b);
    }

    #[test]
    fn shapes_respect_bound() {
        let mut g = Gen::new(1);
        for _ in 0..500 {
            assert!(g.shape(5).dim() <= 5);
        }
    }

    #[test]
    fn unitaries_are_unitary() {
        let mut g = Gen::new(2);
        for _ in 0..50 {
            let a = g.shape(6);
            assert!(g.unitary::<C>(&a).is_unitary());
            assert!(g.unitary::<Boolean>(&a).is_unitary());
        }
    }

    #[test]
    fn hadamard_factors_appear() {
        let mut g = Gen::new(3);
        let q = Shape::qubit();
        let found = (0..50).any(|_| {
            let u = g.unitary::<C>(&q);
            u.entries()
                .iter()
                .any(|x| *x == C::half_sqrt2() || *x == C::half_sqrt2().negated())
        });
        assert!(found);
    }

    #[test]
    fn random_bases_are_valid() {
        let mut g = Gen::new(4);
        for _ in 0..20 {
            g.teleportation_base::<C>().unwrap();
        }
        assert!(g.teleportation_base::<Boolean>().is_err());
    }

    #[test]
    fn preparations_have_unit_norm() {
        let mut g = Gen::new(5);
        for _ in 0..20 {
            let a = g.shape(4);
            assert!(crate::qm::is_preparation(&g.preparation::<C>(&a)));
        }
    }
}
