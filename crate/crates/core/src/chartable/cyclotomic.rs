//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! An element is a rational coefficient vector of length `φ(e)` over the
//! power basis `1, ζ, …, ζ^{φ(e)-1}`, reduced modulo the `e`-th cyclotomic
//! polynomial. Reduction is exact, so equality is coefficient equality.
//! `ζ_e` stands for `exp(2πi/e)`.
//!
//! Rational coefficients use `i64` numerators and denominators with checked
//! arithmetic: overflow panics rather than producing a wrong value.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::arith::{euler_phi, gcd, lcm};

pub type Rational = Ratio<i64>;

#[inline]
pub(crate) fn radd(a: Rational, b: Rational) -> Rational {
    a.checked_add(&b).expect("rational overflow in addition")
}

#[inline]
pub(crate) fn rsub(a: Rational, b: Rational) -> Rational {
    a.checked_sub(&b).expect("rational overflow in subtraction")
}

#[inline]
pub(crate) fn rmul(a: Rational, b: Rational) -> Rational {
    a.checked_mul(&b)
        .expect("rational overflow in multiplication")
}

/// Power-basis data for one conductor.
struct Basis {
    phi: usize,
    /// `powers[m]` = coefficients of `x^m mod Φ_e`, for `0 <= m < e`.
    powers: Vec<Vec<i64>>,
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let n_us = n as usize;
    let mut num = vec![0i64; n_us + 1];
    num[0] = -1;
    num[n_us] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division not exact");
    quot
}

impl Basis {
    fn new(e: u64) -> Basis {
        let poly = cyclotomic_polynomial(e);
        let phi = poly.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(e));
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce the x^phi term with the monic polynomial
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..phi - 1]);
            if top != 0 {
                for (j, c) in next.iter_mut().enumerate() {
                    *c = c
                        .checked_sub(top.checked_mul(poly[j]).expect("basis overflow"))
                        .expect("basis overflow");
                }
            }
            cur = next;
        }
        Basis { phi, powers }
    }
}

fn basis(e: u64) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("basis cache poisoned").get(&e) {
        return b.clone();
    }
    let b = Arc::new(Basis::new(e));
    cache
        .lock()
        .expect("basis cache poisoned")
        .entry(e)
        .or_insert(b)
        .clone()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn from_rational(conductor: u64, q: Rational) -> Self {
        let mut z = Cyclotomic::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(conductor: u64, n: i64) -> Self {
        Cyclotomic::from_rational(conductor, Rational::from_integer(n))
    }

    pub fn one(conductor: u64) -> Self {
        Cyclotomic::from_integer(conductor, 1)
    }

    /// `ζ_e^m`.
    pub fn root_of_unity(conductor: u64, m: i64) -> Self {
        let b = basis(conductor);
        let m = m.rem_euclid(conductor as i64) as usize;
        Cyclotomic {
            conductor,
            coeffs: b.powers[m]
                .iter()
                .map(|&c| Rational::from_integer(c))
                .collect(),
        }
    }

    /// `Σ_m multiplicity[m] · ζ_e^m` for a vector indexed by `0..e`.
    pub fn from_exponent_sum(conductor: u64, multiplicity: &[Rational]) -> Self {
        assert_eq!(multiplicity.len() as u64, conductor);
        reduce(conductor, multiplicity)
    }

    /// From coefficients over the power basis; fails on a length mismatch.
    pub fn from_coefficients(conductor: u64, coeffs: Vec<Rational>) -> Option<Self> {
        (coeffs.len() as u64 == euler_phi(conductor)).then_some(Cyclotomic { conductor, coeffs })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.coeffs[0])
    }

    /// Re-expresses the value in `Q(ζ_n)` for a multiple `n` of the conductor.
    pub fn lift(&self, n: u64) -> Cyclotomic {
        assert!(
            n.is_multiple_of(self.conductor),
            "lift target must be a multiple"
        );
        if n == self.conductor {
            return self.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut acc = vec![Rational::zero(); n as usize];
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[m * step] = *c;
            }
        }
        reduce(n, &acc)
    }

    /// Re-expresses the value in `Q(ζ_d)` for a divisor `d` of the
    /// conductor; `None` when it does not lie in that subfield.
    pub fn descend(&self, d: u64) -> Option<Cyclotomic> {
        if d == self.conductor {
            return Some(self.clone());
        }
        if d == 0 || !self.conductor.is_multiple_of(d) {
            return None;
        }
        if self.is_rational() {
            return Some(Cyclotomic::from_rational(d, self.coeffs[0]));
        }
        let step = (self.conductor / d) as i64;
        let phi_d = euler_phi(d) as usize;
        let phi_e = self.coeffs.len();
        // columns: ζ_e^{step·m}; augmented with self
        let big = basis(self.conductor);
        let mut rows: Vec<Vec<Rational>> = (0..phi_e)
            .map(|r| {
                let mut row: Vec<Rational> = (0..phi_d)
                    .map(|m| {
                        let idx = (step * m as i64).rem_euclid(self.conductor as i64) as usize;
                        Rational::from_integer(big.powers[idx][r])
                    })
                    .collect();
                row.push(self.coeffs[r]);
                row
            })
            .collect();
        let solution = solve_rational(&mut rows, phi_d)?;
        Some(Cyclotomic {
            conductor: d,
            coeffs: solution,
        })
    }

    /// Smallest conductor `d | e` whose field contains the value.
    pub fn minimal_conductor(&self) -> u64 {
        divisors(self.conductor)
            .into_iter()
            .find(|&d| self.descend(d).is_some())
            .unwrap_or(self.conductor)
    }

    /// Image under the automorphism `ζ ↦ ζ^k`, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let e = self.conductor as i64;
        assert_eq!(
            gcd(k.rem_euclid(e.max(1)) as u64, self.conductor),
            1,
            "Galois exponent must be a unit"
        );
        if self.conductor <= 2 {
            return self.clone();
        }
        let mut acc = vec![Rational::zero(); e as usize];
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(k * m as i64).rem_euclid(e) as usize] = *c;
            }
        }
        reduce(self.conductor, &acc)
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois(self.conductor as i64 - 1)
    }

    pub fn scale(&self, q: Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| rmul(c, q)).collect(),
        }
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let n = lcm(self.conductor, other.conductor);
        (self.lift(n), other.lift(n))
    }

    /// Approximate complex value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (m, c)| {
                let v = *c.numer() as f64 / *c.denom() as f64;
                let t = std::f64::consts::TAU * m as f64 / e;
                (re + v * t.cos(), im + v * t.sin())
            })
    }
}

/// Reduces `Σ acc[m] ζ^m` (indices mod `e`) to the power basis.
fn reduce(e: u64, acc: &[Rational]) -> Cyclotomic {
    let b = basis(e);
    let mut coeffs = vec![Rational::zero(); b.phi];
    for (m, c) in acc.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (slot, &p) in coeffs.iter_mut().zip(&b.powers[m]) {
            if p != 0 {
                *slot = radd(*slot, rmul(*c, Rational::from_integer(p)));
            }
        }
    }
    Cyclotomic {
        conductor: e,
        coeffs,
    }
}

/// `Σ w · a · conj(b)` over the given terms, all at conductor `e`. Products
/// are accumulated as exponent sums and reduced once at the end.
pub(crate) fn hermitian_sum<'a>(
    e: u64,
    terms: impl IntoIterator<Item = (Rational, &'a Cyclotomic, &'a Cyclotomic)>,
) -> Cyclotomic {
    let n = e as usize;
    let mut acc = vec![Rational::zero(); n];
    for (w, a, b) in terms {
        debug_assert!(a.conductor == e && b.conductor == e);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let wx = rmul(w, *x);
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    let k = (i + n - j) % n;
                    acc[k] = radd(acc[k], rmul(wx, *y));
                }
            }
        }
    }
    reduce(e, &acc)
}

/// Solves an augmented system with `unknowns` columns by Gauss–Jordan
/// elimination; `None` if inconsistent. The system is assumed to have full
/// column rank.
fn solve_rational(rows: &mut [Vec<Rational>], unknowns: usize) -> Option<Vec<Rational>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x = rmul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col];
                for c in 0..=unknowns {
                    let v = rmul(f, rows[pivot_row][c]);
                    rows[r][c] = rsub(rows[r][c], v);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = rows[i][unknowns];
    }
    Some(sol)
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| radd(x, y))
                .collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| rsub(x, y))
                .collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        self.scale(-Rational::one())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let e = a.conductor as usize;
        if a.is_rational() {
            return b.scale(a.coeffs[0]);
        }
        if b.is_rational() {
            return a.scale(b.coeffs[0]);
        }
        let mut acc = vec![Rational::zero(); e];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    let k = (i + j) % e;
                    acc[k] = radd(acc[k], rmul(*x, *y));
                }
            }
        }
        reduce(a.conductor, &acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: conductor, then coefficients lexicographically.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let abs = if neg { -*c } else { *c };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let z = match m {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, m),
            };
            if m == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{abs}*{z}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.conductor, self)
    }
}

/// Rational as `"p"` or `"p/q"`.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.trim().parse::<i64>().ok().map(Rational::from_integer),
    }
}
