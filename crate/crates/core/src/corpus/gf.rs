//! The field with 3⁶ = 729 elements.
//!
//! Elements are polynomials `c_0 + c_1 x + … + c_5 x^5` over `F_3` modulo the
//! Conway polynomial `x^6 + 2x^4 + x^2 + 2x + 2`. The element with coefficients
//! `c_i` has index `Σ c_i 3^i`; points of the affine permutation actions are
//! these indices.

use std::ops::{Add, Mul};

use crate::error::{Error, Result};

pub const SIZE: usize = 729;
const DEG: usize = 6;
/// Low coefficients of the modulus (constant term first); the `x^6`
/// coefficient is 1.
pub const MODULUS: [u8; DEG] = [2, 2, 1, 0, 2, 0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf729([u8; DEG]);

impl Gf729 {
    pub const ZERO: Gf729 = Gf729([0; DEG]);
    pub const ONE: Gf729 = Gf729([1, 0, 0, 0, 0, 0]);

    pub fn from_index(mut i: usize) -> Gf729 {
        debug_assert!(i < SIZE);
        let mut c = [0u8; DEG];
        for slot in c.iter_mut() {
            *slot = (i % 3) as u8;
            i /= 3;
        }
        Gf729(c)
    }

    pub fn index(self) -> usize {
        self.0.iter().rev().fold(0, |acc, &c| acc * 3 + c as usize)
    }

    pub fn pow(self, mut e: u64) -> Gf729 {
        let mut acc = Gf729::ONE;
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(self) -> Option<u64> {
        if self == Gf729::ZERO {
            return None;
        }
        let mut x = self;
        let mut n = 1;
        while x != Gf729::ONE {
            x = x * self;
            n += 1;
        }
        Some(n)
    }
}

/// Remainder of `num` modulo the monic polynomial `den` over `F_3`.
fn poly_rem(num: &[u8], den: &[u8]) -> Vec<u8> {
    let mut r = num.to_vec();
    let dn = den.len() - 1;
    while r.len() > dn {
        let t = *r.last().unwrap();
        let shift = r.len() - 1 - dn;
        for (j, &d) in den.iter().enumerate() {
            r[shift + j] = (r[shift + j] + 3 * 3 - t * d % 3) % 3;
        }
        r.pop();
    }
    r
}

/// Checks that the modulus has no monic factor of degree 1, 2 or 3.
pub fn check_modulus_irreducible() -> Result<()> {
    let mut f: Vec<u8> = MODULUS.to_vec();
    f.push(1);
    for d in 1..=3usize {
        for low in 0..3usize.pow(d as u32) {
            let mut g: Vec<u8> = (0..d)
                .map(|i| ((low / 3usize.pow(i as u32)) % 3) as u8)
                .collect();
            g.push(1);
            if poly_rem(&f, &g).iter().all(|&c| c == 0) {
                return Err(Error::SelfCheck(format!(
                    "modulus has a factor of degree {d}"
                )));
            }
        }
    }
    Ok(())
}

/// Least element (by index) of multiplicative order 7.
pub fn least_element_of_order_7() -> Gf729 {
    (1..SIZE)
        .map(Gf729::from_index)
        .find(|x| x.order() == Some(7))
        .expect("7 divides 3^6 - 1")
}

impl Add for Gf729 {
    type Output = Gf729;

    fn add(self, o: Gf729) -> Gf729 {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(o.0) {
            *x = (*x + y) % 3;
        }
        Gf729(c)
    }
}

impl Mul for Gf729 {
    type Output = Gf729;

    fn mul(self, o: Gf729) -> Gf729 {
        let mut prod = [0u8; 2 * DEG - 1];
        for i in 0..DEG {
            if self.0[i] == 0 {
                continue;
            }
            for j in 0..DEG {
                prod[i + j] = (prod[i + j] + self.0[i] * o.0[j]) % 3;
            }
        }
        // x^6 = -(MODULUS) = 2·MODULUS (mod 3)
        for k in (DEG..2 * DEG - 1).rev() {
            let t = prod[k];
            if t == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &m) in MODULUS.iter().enumerate() {
                prod[k - DEG + j] = (prod[k - DEG + j] + 2 * t * m) % 3;
            }
        }
        let mut c = [0u8; DEG];
        c.copy_from_slice(&prod[..DEG]);
        Gf729(c)
    }
}
