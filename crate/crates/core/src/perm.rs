//! Dense permutations of `{0, …, n-1}`.
//!
//! Products compose as functions: `(a * b)(x) = a(b(x))`, so `b * a * b.inverse()`
//! is the conjugate of `a` by `b`.

use std::fmt;
use std::ops::Mul;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::MAX_DEGREE;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotBijection(format!(
                    "image {x} of point {i} is out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::NotBijection(format!("point {x} appears twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::NotBijection(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                if touched[a as usize] {
                    return Err(Error::NotBijection(format!("point {a} in two cycles")));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Permutation::from_images(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Least point not fixed, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    /// `g * self * g⁻¹`, given `g` and its inverse.
    pub fn conjugated_by(&self, g: &Permutation, g_inv: &Permutation) -> Permutation {
        // (g x g⁻¹)(i) = g(x(g⁻¹(i)))
        Permutation {
            images: g_inv
                .images
                .iter()
                .map(|&y| g.images[self.images[y as usize] as usize])
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.compose(&b);
            }
        }
        acc
    }

    /// Disjoint cycles of length > 1, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }
}

pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn orders_from_cycle_type() {
        assert_eq!(element_order(&Permutation::identity(4)), 1);
        let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(element_order(&c3), 3);
        let mixed = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(element_order(&mixed), 6);
    }

    #[test]
    fn composition_is_function_composition() {
        let a = Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let b = Permutation::from_cycles(7, &[&[1, 2, 4], &[3, 6, 5]]).unwrap();
        assert_eq!(&(&b * &a) * &b.inverse(), a.pow(2));
        assert_eq!(a.conjugated_by(&b, &b.inverse()), a.pow(2));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(Error::NotBijection(_))
        ));
        assert!(matches!(
            Permutation::from_images(vec![0, 3, 1]),
            Err(Error::NotBijection(_))
        ));
        assert_eq!(Permutation::from_images(vec![]), Err(Error::EmptyDegree));
    }

    #[test]
    fn display_uses_cycle_notation() {
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    proptest! {
        #[test]
        fn group_laws(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
            let id = Permutation::identity(9);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &a.inverse(), id.clone());
            prop_assert_eq!(&a.inverse() * &a, id);
            prop_assert_eq!(a.pow(a.order() as i64), Permutation::identity(9));
            prop_assert_eq!(a.pow(-1), a.inverse());
        }
    }
}
