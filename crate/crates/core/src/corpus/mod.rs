//! Group constructors and the built-in corpus.
//!
//! The corpus covers the three odd-order shapes that cut groups can take
//! (3-groups, Frobenius groups of order 3·7^a, and groups of order 7·3^b)
//! plus abelian controls and one even-order sanity case.

pub mod gf;
pub mod io;

use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, is_power_of, is_prime, mod_pow};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{frobenius_complement, p_core, quotient_group, sylow_subgroup, Subgroup};

use gf::Gf729;

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be positive".into(),
        ));
    }
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    PermGroup::from_generators(vec![Permutation::from_images(images)?], n)
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[PermGroup]) -> Result<PermGroup> {
    if factors.is_empty() {
        return PermGroup::trivial(1);
    }
    let degree: usize = factors.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for f in factors {
        for g in f.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &x) in g.images().iter().enumerate() {
                images[offset as usize + i] = offset + x;
            }
            gens.push(Permutation::from_images(images)?);
        }
        offset += f.degree() as u32;
    }
    PermGroup::from_generators(gens, degree)
}

pub fn elementary_abelian(p: u64, k: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("rank must be at least 1".into()));
    }
    let factor = cyclic(p as usize)?;
    direct_product(&vec![factor; k])
}

/// Left regular representation of a group given by a multiplication rule on
/// `0..order`, generated by the listed element labels.
fn regular(order: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize]) -> Result<PermGroup> {
    let perms = gens
        .iter()
        .map(|&g| Permutation::from_images((0..order).map(|x| mul(g, x) as u32).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(perms, order)
}

/// `C_n ⋊ C_m` with `y x y⁻¹ = x^r`, as a regular permutation group.
pub fn metacyclic(n: usize, m: usize, r: usize) -> Result<PermGroup> {
    if mod_pow(r as u64, m as u64, n as u64) != 1 % n as u64 || gcd(r as u64, n as u64) != 1 {
        return Err(Error::InvalidParameter(format!(
            "{r} does not define an action of C{m} on C{n}"
        )));
    }
    // label i + n·j stands for x^i y^j
    let mul = |a: usize, b: usize| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let rj = mod_pow(r as u64, j as u64, n as u64) as usize;
        (i + rj * k) % n + n * ((j + l) % m)
    };
    regular(n * m, mul, &[1, n])
}

/// Extraspecial group of order 27 and the given exponent (3 or 9).
pub fn extraspecial_27(exponent: u32) -> Result<PermGroup> {
    match exponent {
        3 => {
            // Heisenberg group: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
            let label = |a: usize, b: usize, c: usize| a + 3 * b + 9 * c;
            let mul = |x: usize, y: usize| {
                let (a, b, c) = (x % 3, (x / 3) % 3, x / 9);
                let (a2, b2, c2) = (y % 3, (y / 3) % 3, y / 9);
                label((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3)
            };
            regular(27, mul, &[label(1, 0, 0), label(0, 1, 0)])
        }
        9 => metacyclic(9, 3, 4),
        e => Err(Error::InvalidParameter(format!(
            "extraspecial groups of order 27 have exponent 3 or 9, not {e}"
        ))),
    }
}

/// An extension of `A = C_9 × C_3 = ⟨a⟩ × ⟨b⟩` by `⟨c⟩ ≅ C_3`, as a
/// regular permutation group of order 81. Conjugation by `c` sends `a` to
/// `a^{a_image.0} b^{a_image.1}` and `b` to `a^{b_image.0} b^{b_image.1}`,
/// and `c³ = a^{c_cubed.0} b^{c_cubed.1}`. The map must be an automorphism
/// of order dividing 3 that fixes `c³`.
pub fn c9xc3_by_c3(
    a_image: (u32, u32),
    b_image: (u32, u32),
    c_cubed: (u32, u32),
) -> Result<PermGroup> {
    type Elt = (u32, u32);
    let add = |x: Elt, y: Elt| ((x.0 + y.0) % 9, (x.1 + y.1) % 3);
    let phi = |x: Elt| {
        let a = ((a_image.0 * x.0) % 9, (a_image.1 * x.0) % 3);
        let b = ((b_image.0 * x.1) % 9, (b_image.1 * x.1) % 3);
        add(a, b)
    };
    let invalid = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
    if !(3 * b_image.0).is_multiple_of(9) {
        return invalid("image of b must have order dividing 3");
    }
    let all: Vec<Elt> = (0..9).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    let mut images: Vec<Elt> = all.iter().map(|&x| phi(x)).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != 27 {
        return invalid("map on C9 x C3 is not bijective");
    }
    if all.iter().any(|&x| phi(phi(phi(x))) != x) {
        return invalid("automorphism order does not divide 3");
    }
    let z = (c_cubed.0 % 9, c_cubed.1 % 3);
    if phi(z) != z {
        return invalid("c^3 must be fixed by the automorphism");
    }
    // label x.0 + 9 x.1 + 27 j for the element (x, c^j)
    let decode = |l: usize| ((l % 9) as u32, ((l / 9) % 3) as u32, (l / 27) as u32);
    let mul = |p: usize, q: usize| {
        let (x0, x1, j) = decode(p);
        let (y0, y1, k) = decode(q);
        let mut y = (y0, y1);
        for _ in 0..j {
            y = phi(y);
        }
        let mut s = add((x0, x1), y);
        if j + k >= 3 {
            s = add(s, z);
        }
        (s.0 + 9 * s.1 + 27 * ((j + k) % 3)) as usize
    };
    regular(81, mul, &[1, 9, 27])
}

/// `C_3 ≀ C_3` on 9 points (order 81).
pub fn wreath_c3_c3() -> Result<PermGroup> {
    let a = Permutation::from_cycles(9, &[&[0, 1, 2]])?;
    let b = Permutation::from_cycles(9, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]])?;
    PermGroup::from_generators(vec![a, b], 9)
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return PermGroup::trivial(1);
    }
    let t = Permutation::from_cycles(n, &[&[0, 1]])?;
    let c = Permutation::from_cycles(n, &[&(0..n as u32).collect::<Vec<_>>()])?;
    PermGroup::from_generators(vec![t, c], n)
}

/// `(C_7)^a ⋊ C_3` acting on `(Z/7)^a`, the `C_3` acting as `x ↦ 2x`.
pub fn frobenius_3_7a(a: u32) -> Result<PermGroup> {
    if !(1..=2).contains(&a) {
        return Err(Error::InvalidParameter(format!(
            "a must be 1 or 2, got {a}"
        )));
    }
    let dims = a as usize;
    let n = 7usize.pow(a);
    let coords = |mut i: usize| -> Vec<usize> {
        (0..dims)
            .map(|_| {
                let c = i % 7;
                i /= 7;
                c
            })
            .collect()
    };
    let index = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * 7 + c);
    let mut gens = Vec::new();
    for axis in 0..dims {
        let images = (0..n)
            .map(|i| {
                let mut v = coords(i);
                v[axis] = (v[axis] + 1) % 7;
                index(&v) as u32
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    let images = (0..n)
        .map(|i| {
            let v: Vec<usize> = coords(i).iter().map(|c| 2 * c % 7).collect();
            index(&v) as u32
        })
        .collect();
    gens.push(Permutation::from_images(images)?);
    PermGroup::from_generators(gens, n)
}

/// `A ⋊ F_21` of order 7·3⁷ on the 729 elements of `GF(3⁶)`: `A` is the
/// translation group, the order-7 generator multiplies by the least field
/// element `μ` of multiplicative order 7, and the order-3 generator is the
/// field automorphism `x ↦ x⁹`, which conjugates `μ` to `μ²`.
pub fn double_frobenius_15309() -> Result<PermGroup> {
    gf::check_modulus_irreducible()?;
    let mu = gf::least_element_of_order_7();
    if mu.pow(9) != mu.pow(2) {
        return Err(Error::SelfCheck("Frobenius does not square mu".into()));
    }
    let map = |f: &dyn Fn(Gf729) -> Gf729| -> Result<Permutation> {
        Permutation::from_images(
            (0..gf::SIZE)
                .map(|i| f(Gf729::from_index(i)).index() as u32)
                .collect(),
        )
    };
    let translate = map(&|x| x + Gf729::ONE)?;
    let scale = map(&|x| x * mu)?;
    let frobenius = map(&|x| x.pow(9))?;
    let g = PermGroup::from_generators(vec![translate, scale, frobenius], gf::SIZE)?;
    if g.order() != 15309 {
        return Err(Error::SelfCheck(format!(
            "constructed group has order {}, expected 15309",
            g.order()
        )));
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ThreeGroup,
    Frobenius37a,
    DoubleFrobenius73b,
    Abelian,
    SanityEvenOrder,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Family::ThreeGroup => "3-group",
            Family::Frobenius37a => "frobenius-3-7a",
            Family::DoubleFrobenius73b => "double-frobenius-7-3b",
            Family::Abelian => "abelian",
            Family::SanityEvenOrder => "sanity-even-order",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub params: String,
    pub group: PermGroup,
    pub expected_order: u128,
    pub family: Family,
}

impl CorpusEntry {
    pub fn odd_order(&self) -> bool {
        self.group.order() % 2 == 1
    }

    /// Re-checks the closed-form order and the family structurally.
    pub fn verify_family(&self) -> Result<()> {
        let g = &self.group;
        let fail = |msg: String| Err(Error::SelfCheck(format!("{}: {msg}", self.name)));
        if g.order() != self.expected_order {
            return fail(format!(
                "order {} differs from closed form {}",
                g.order(),
                self.expected_order
            ));
        }
        match self.family {
            Family::ThreeGroup => {
                if g.order() == 1 || !is_power_of(g.order(), 3) {
                    return fail("not a nontrivial 3-group".into());
                }
            }
            Family::Abelian => {
                if !g.is_abelian() {
                    return fail("not abelian".into());
                }
            }
            Family::SanityEvenOrder => {
                if !g.order().is_multiple_of(2) {
                    return fail("order is odd".into());
                }
            }
            Family::Frobenius37a => {
                let kernel = sylow_subgroup(g, 7)?;
                if !kernel.is_normal() || frobenius_complement(g, &kernel)?.is_none() {
                    return fail("Sylow 7-subgroup is not a Frobenius kernel".into());
                }
                if p_core(g, 3)?.order() != 1 {
                    return fail("3-core is nontrivial".into());
                }
            }
            Family::DoubleFrobenius73b => {
                let core = p_core(g, 3)?;
                let h = sylow_subgroup(g, 7)?;
                let oh = core.join(h.generators())?;
                let kernel = Subgroup::of(&oh, core.group().clone())?;
                if frobenius_complement(&oh, &kernel)?.is_none() {
                    return fail("O_3·H is not Frobenius with kernel O_3".into());
                }
                let q = quotient_group(g, &core)?;
                if q.group().order() != 21 || q.group().is_abelian() {
                    return fail("G/O_3 is not the nonabelian group of order 21".into());
                }
            }
        }
        Ok(())
    }
}

struct Spec {
    name: &'static str,
    params: &'static str,
    order: u128,
    family: Family,
    build: fn() -> Result<PermGroup>,
}

#[rustfmt::skip]
const SPECS: &[Spec] = &[
    Spec { name: "trivial", params: "cyclic(1)", order: 1, family: Family::Abelian, build: || cyclic(1) },
    Spec { name: "c3", params: "cyclic(3)", order: 3, family: Family::ThreeGroup, build: || cyclic(3) },
    Spec { name: "c5", params: "cyclic(5)", order: 5, family: Family::Abelian, build: || cyclic(5) },
    Spec { name: "c7", params: "cyclic(7)", order: 7, family: Family::Abelian, build: || cyclic(7) },
    Spec { name: "ea7_1", params: "elementary_abelian(7, 1)", order: 7, family: Family::Abelian, build: || elementary_abelian(7, 1) },
    Spec { name: "c9", params: "cyclic(9)", order: 9, family: Family::ThreeGroup, build: || cyclic(9) },
    Spec { name: "c3xc3", params: "elementary_abelian(3, 2)", order: 9, family: Family::ThreeGroup, build: || elementary_abelian(3, 2) },
    Spec { name: "c15", params: "cyclic(15)", order: 15, family: Family::Abelian, build: || cyclic(15) },
    Spec { name: "c21", params: "cyclic(21)", order: 21, family: Family::Abelian, build: || cyclic(21) },
    Spec { name: "c27", params: "cyclic(27)", order: 27, family: Family::ThreeGroup, build: || cyclic(27) },
    Spec { name: "c9xc3", params: "direct_product(cyclic(9), cyclic(3))", order: 27, family: Family::ThreeGroup, build: || direct_product(&[cyclic(9)?, cyclic(3)?]) },
    Spec { name: "c3xc3xc3", params: "elementary_abelian(3, 3)", order: 27, family: Family::ThreeGroup, build: || elementary_abelian(3, 3) },
    Spec { name: "heisenberg27", params: "extraspecial_27(3)", order: 27, family: Family::ThreeGroup, build: || extraspecial_27(3) },
    Spec { name: "extraspecial27_exp9", params: "extraspecial_27(9)", order: 27, family: Family::ThreeGroup, build: || extraspecial_27(9) },
    Spec { name: "c81", params: "cyclic(81)", order: 81, family: Family::ThreeGroup, build: || cyclic(81) },
    Spec { name: "c27xc3", params: "direct_product(cyclic(27), cyclic(3))", order: 81, family: Family::ThreeGroup, build: || direct_product(&[cyclic(27)?, cyclic(3)?]) },
    Spec { name: "c9xc9", params: "direct_product(cyclic(9), cyclic(9))", order: 81, family: Family::ThreeGroup, build: || direct_product(&[cyclic(9)?, cyclic(9)?]) },
    Spec { name: "c9xc3xc3", params: "direct_product(cyclic(9), cyclic(3), cyclic(3))", order: 81, family: Family::ThreeGroup, build: || direct_product(&[cyclic(9)?, cyclic(3)?, cyclic(3)?]) },
    Spec { name: "c3^4", params: "elementary_abelian(3, 4)", order: 81, family: Family::ThreeGroup, build: || elementary_abelian(3, 4) },
    Spec { name: "heisenberg27xc3", params: "direct_product(extraspecial_27(3), cyclic(3))", order: 81, family: Family::ThreeGroup, build: || direct_product(&[extraspecial_27(3)?, cyclic(3)?]) },
    Spec { name: "extraspecial27_exp9xc3", params: "direct_product(extraspecial_27(9), cyclic(3))", order: 81, family: Family::ThreeGroup, build: || direct_product(&[extraspecial_27(9)?, cyclic(3)?]) },
    Spec { name: "c9xc3:c3", params: "c9xc3_by_c3((1, 1), (0, 1), (0, 0))", order: 81, family: Family::ThreeGroup, build: || c9xc3_by_c3((1, 1), (0, 1), (0, 0)) },
    Spec { name: "c9*heisenberg27", params: "c9xc3_by_c3((1, 0), (3, 1), (0, 0))", order: 81, family: Family::ThreeGroup, build: || c9xc3_by_c3((1, 0), (3, 1), (0, 0)) },
    Spec { name: "maxclass81a", params: "c9xc3_by_c3((1, 2), (3, 1), (0, 0))", order: 81, family: Family::ThreeGroup, build: || c9xc3_by_c3((1, 2), (3, 1), (0, 0)) },
    Spec { name: "maxclass81b", params: "c9xc3_by_c3((1, 1), (3, 1), (0, 0))", order: 81, family: Family::ThreeGroup, build: || c9xc3_by_c3((1, 1), (3, 1), (0, 0)) },
    Spec { name: "maxclass81c", params: "c9xc3_by_c3((1, 2), (3, 1), (3, 0))", order: 81, family: Family::ThreeGroup, build: || c9xc3_by_c3((1, 2), (3, 1), (3, 0)) },
    Spec { name: "c3wrc3", params: "wreath_c3_c3()", order: 81, family: Family::ThreeGroup, build: wreath_c3_c3 },
    Spec { name: "c9:c9", params: "metacyclic(9, 9, 4)", order: 81, family: Family::ThreeGroup, build: || metacyclic(9, 9, 4) },
    Spec { name: "c27:c3", params: "metacyclic(27, 3, 10)", order: 81, family: Family::ThreeGroup, build: || metacyclic(27, 3, 10) },
    Spec { name: "frobenius21", params: "frobenius_3_7a(1)", order: 21, family: Family::Frobenius37a, build: || frobenius_3_7a(1) },
    Spec { name: "frobenius147", params: "frobenius_3_7a(2)", order: 147, family: Family::Frobenius37a, build: || frobenius_3_7a(2) },
    Spec { name: "double_frobenius_15309", params: "double_frobenius_15309()", order: 15309, family: Family::DoubleFrobenius73b, build: double_frobenius_15309 },
    Spec { name: "s3", params: "symmetric(3)", order: 6, family: Family::SanityEvenOrder, build: || symmetric(3) },
];

/// Names of the built-in groups, in corpus order.
pub fn builtin_names() -> Vec<&'static str> {
    SPECS.iter().map(|s| s.name).collect()
}

fn build_entry(spec: &Spec) -> Result<CorpusEntry> {
    Ok(CorpusEntry {
        name: spec.name.to_string(),
        params: spec.params.to_string(),
        group: (spec.build)()?,
        expected_order: spec.order,
        family: spec.family,
    })
}

/// A built-in group by name (case-insensitive; `order21` is accepted as an
/// alias for `frobenius21`).
pub fn builtin(name: &str) -> Result<CorpusEntry> {
    let lower = name.to_ascii_lowercase();
    let key = match lower.as_str() {
        "order21" | "f21" => "frobenius21",
        "f147" => "frobenius147",
        "double_frobenius" | "g15309" => "double_frobenius_15309",
        other => other,
    };
    let spec = SPECS
        .iter()
        .find(|s| s.name == key)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown builtin group '{name}'")))?;
    build_entry(spec)
}

/// The default corpus, optionally limited to orders at most `max_order`.
pub fn default_corpus(max_order: Option<u128>) -> Result<Vec<CorpusEntry>> {
    SPECS
        .iter()
        .filter(|s| max_order.is_none_or(|m| s.order <= m))
        .map(build_entry)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constructors() {
        assert_eq!(cyclic(3).unwrap().order(), 3);
        let e = elementary_abelian(3, 2).unwrap();
        assert_eq!(e.order(), 9);
        assert_eq!(e.exponent().unwrap(), 3);
        let d = direct_product(&[cyclic(3).unwrap(), cyclic(3).unwrap()]).unwrap();
        assert_eq!(d.order(), 9);
        assert_eq!(d.exponent().unwrap(), 3);
        assert!(matches!(cyclic(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            elementary_abelian(4, 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn extraspecial_groups() {
        let he = extraspecial_27(3).unwrap();
        assert_eq!(he.order(), 27);
        assert_eq!(he.exponent().unwrap(), 3);
        let m = extraspecial_27(9).unwrap();
        assert_eq!(m.order(), 27);
        assert_eq!(m.exponent().unwrap(), 9);
        for g in [&he, &m] {
            assert_eq!(crate::structure::center(g).unwrap().order(), 3);
            assert!(!g.is_abelian());
        }
        assert!(matches!(
            extraspecial_27(5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn frobenius_constructions() {
        for (a, order) in [(1u32, 21u128), (2, 147)] {
            let g = frobenius_3_7a(a).unwrap();
            assert_eq!(g.order(), order);
            let k = sylow_subgroup(&g, 7).unwrap();
            assert_eq!(k.order(), order / 3);
            assert!(crate::structure::is_frobenius_with_kernel(&g, &k).unwrap());
            assert_eq!(p_core(&g, 7).unwrap().order(), order / 3);
            assert_eq!(p_core(&g, 3).unwrap().order(), 1);
        }
        assert!(frobenius_3_7a(3).is_err());
    }

    #[test]
    fn double_frobenius_structure() {
        let entry = builtin("double_frobenius_15309").unwrap();
        assert_eq!(entry.group.order(), 15309);
        entry.verify_family().unwrap();
        let core = p_core(&entry.group, 3).unwrap();
        assert_eq!(core.order(), 729);
        assert_eq!(crate::structure::elementary_abelian_prime(&core), Some(3));
    }

    #[test]
    fn builtin_lookup() {
        assert_eq!(builtin("C9").unwrap().group.order(), 9);
        assert_eq!(builtin("order21").unwrap().name, "frobenius21");
        assert!(builtin("nope").is_err());
    }

    #[test]
    fn small_corpus_families_verify() {
        for entry in default_corpus(Some(2000)).unwrap() {
            entry.verify_family().unwrap();
        }
    }
}
