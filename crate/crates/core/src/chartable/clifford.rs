//! Characters of abelian groups and of cyclic extensions, inertia groups and
//! Clifford decompositions.

use std::collections::HashMap;

use num_traits::Zero;

use super::character_table;
use super::class_function::{
    conjugate, conjugation_class_map, induce, multiplicity, restrict, ClassFunction,
};
use super::cyclotomic::{Cyclotomic, Rational};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::Subgroup;

/// All linear characters of an abelian group, built one generator at a
/// time: a character `λ` of `H` extends to `⟨H, g⟩` in `m` ways, where `m` is
/// the order of `g` modulo `H`, by `λ'(h g^j) = λ(h) ω^j` with `ω^m = λ(g^m)`.
/// The trivial character comes first.
pub fn abelian_characters(group: &PermGroup) -> Result<Vec<ClassFunction>> {
    if !group.is_abelian() {
        return Err(Error::InvalidParameter("group is not abelian".into()));
    }
    let table = group.classes()?;
    let elems = table.elements();
    let n = elems.len();
    let e = table.exponent();

    const UNSET: u32 = u32::MAX;
    let mut members: Vec<usize> = vec![0];
    // exponent of ζ_e taken by each character on each member element
    let mut chars: Vec<Vec<u32>> = vec![{
        let mut v = vec![UNSET; n];
        v[0] = 0;
        v
    }];
    let mut in_h = vec![false; n];
    in_h[0] = true;

    for g in group.generators() {
        let gi = elems.index_of_member(g).expect("generator is a member");
        if in_h[gi] {
            continue;
        }
        // m = order of g modulo H, and the new elements h·g^j
        let mut gj = g.clone();
        let mut layers: Vec<Vec<(usize, usize)>> = Vec::new(); // (new element, h)
        let g_m_index = loop {
            let idx = elems.index_of_member(&gj).expect("power is a member");
            if in_h[idx] {
                break idx;
            }
            let layer = members
                .iter()
                .map(|&h| {
                    let hp = elems.get(h);
                    let x = elems
                        .index_by_base_images(|b| hp.apply(gj.apply(b)))
                        .expect("product of members");
                    (x, h)
                })
                .collect();
            layers.push(layer);
            gj = &gj * g;
        };
        let m = layers.len() as u64 + 1;
        let mut next_chars = Vec::with_capacity(chars.len() * m as usize);
        for lambda in &chars {
            let c = lambda[g_m_index] as u64;
            debug_assert_eq!(c % m, 0);
            for t in 0..m {
                let b = (c / m + t * (e / m)) % e;
                let mut new = lambda.clone();
                for (j, layer) in layers.iter().enumerate() {
                    let jb = (j as u64 + 1) * b;
                    for &(x, h) in layer {
                        new[x] = ((lambda[h] as u64 + jb) % e) as u32;
                    }
                }
                next_chars.push(new);
            }
        }
        for layer in &layers {
            for &(x, _) in layer {
                in_h[x] = true;
                members.push(x);
            }
        }
        chars = next_chars;
    }
    if chars.len() != n || members.len() != n {
        return Err(Error::SelfCheck(format!(
            "built {} characters for a group of order {n}",
            chars.len()
        )));
    }
    let roots: Vec<Cyclotomic> = (0..e as i64)
        .map(|m| Cyclotomic::root_of_unity(e, m))
        .collect();
    Ok(chars
        .into_iter()
        .map(|lambda| {
            let values = table
                .classes()
                .iter()
                .map(|c| roots[lambda[c.elements[0] as usize] as usize].clone())
                .collect();
            ClassFunction::from_parts(group, values)
        })
        .collect())
}

/// Irreducible characters of `G = N⟨t⟩` where `N` is an abelian normal
/// subgroup of prime index `q` and `t` has order `q`. Characters of `N`
/// fixed by `t` extend in `q` ways; the others induce irreducibly, one per
/// `t`-orbit.
pub fn characters_of_cyclic_extension(
    group: &PermGroup,
    normal: &PermGroup,
    t: &Permutation,
) -> Result<Vec<ClassFunction>> {
    Ok(
        characters_of_cyclic_extension_with_sources(group, normal, t)?
            .into_iter()
            .map(|(chi, _)| chi)
            .collect(),
    )
}

/// As [`characters_of_cyclic_extension`], pairing each character with the
/// index (in [`abelian_characters`] order of `N`) of a constituent of its
/// restriction to `N`.
pub fn characters_of_cyclic_extension_with_sources(
    group: &PermGroup,
    normal: &PermGroup,
    t: &Permutation,
) -> Result<Vec<(ClassFunction, usize)>> {
    let q = t.order();
    if !is_prime(q)
        || !group.contains(t)
        || normal.contains(t)
        || normal.order() * q as u128 != group.order()
    {
        return Err(Error::InvalidParameter(
            "expected an element of prime order generating the quotient".into(),
        ));
    }
    if !normal.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    if !normal.is_normalized_by(group) {
        return Err(Error::NotNormal);
    }
    let irr_n = abelian_characters(normal)?;
    let index: HashMap<&[Cyclotomic], usize> = irr_n
        .iter()
        .enumerate()
        .map(|(i, c)| (c.values(), i))
        .collect();
    let t_image: Vec<usize> = irr_n
        .iter()
        .map(|lambda| {
            let c = conjugate(lambda, t)?;
            index
                .get(c.values())
                .copied()
                .ok_or_else(|| Error::SelfCheck("conjugate character not found".into()))
        })
        .collect::<Result<_>>()?;

    let g_table = group.classes()?;
    let n_table = normal.classes()?;
    let e = g_table.exponent();
    let t_inv = t.inverse();
    // for each class of G: (j, class of n in N) with rep = n t^j
    let decomposition: Vec<(u64, usize)> = g_table
        .classes()
        .iter()
        .map(|c| {
            let mut x = c.representative.clone();
            for j in 0..q {
                if let Some(i) = n_table.elements().index_of(&x) {
                    return (j, n_table.class_of_index(i));
                }
                x = &x * &t_inv;
            }
            unreachable!("every element lies in some coset N t^j")
        })
        .collect();

    let mut out = Vec::new();
    let mut done = vec![false; irr_n.len()];
    for (i, lambda) in irr_n.iter().enumerate() {
        if done[i] {
            continue;
        }
        if t_image[i] == i {
            done[i] = true;
            for s in 0..q {
                let values = decomposition
                    .iter()
                    .map(|&(j, nc)| {
                        let root = Cyclotomic::root_of_unity(e, ((e / q) * ((s * j) % q)) as i64);
                        &lambda.value(nc).lift(e) * &root
                    })
                    .collect();
                out.push((ClassFunction::from_parts(group, values), i));
            }
        } else {
            let mut k = i;
            while !done[k] {
                done[k] = true;
                k = t_image[k];
            }
            out.push((induce(lambda, group)?, i));
        }
    }
    let total: i64 = out
        .iter()
        .map(|(c, _)| c.degree_integer().map(|d| d * d).unwrap_or(0))
        .sum();
    if total as u128 != group.order() {
        return Err(Error::SelfCheck(format!(
            "squared degrees sum to {total}, expected {}",
            group.order()
        )));
    }
    Ok(out)
}

/// The conjugation action of a group on the class functions of a normal
/// subgroup, precomputed for the generators so that many inertia groups
/// can be taken cheaply.
pub struct InertiaAction {
    group: PermGroup,
    normal: PermGroup,
    generators: Vec<Permutation>,
    /// `class_maps[s][d]` = class of `s n s⁻¹` for the representative `n` of class `d`.
    class_maps: Vec<Vec<usize>>,
}

impl InertiaAction {
    pub fn new(group: &PermGroup, normal: &PermGroup) -> Result<InertiaAction> {
        if !normal.is_subgroup_of(group) {
            return Err(Error::NotSubgroup);
        }
        if !normal.is_normalized_by(group) {
            return Err(Error::NotNormal);
        }
        let table = normal.classes()?;
        let generators = group.generators().to_vec();
        let class_maps = generators
            .iter()
            .map(|s| conjugation_class_map(&table, s, &s.inverse()))
            .collect();
        Ok(InertiaAction {
            group: group.clone(),
            normal: normal.clone(),
            generators,
            class_maps,
        })
    }

    /// `I_G(θ) = {g : θ^g = θ}` by orbit–stabilizer over the generators,
    /// with Schreier generators `u_i s u_j⁻¹` for the stabilizer.
    pub fn inertia_group(&self, theta: &ClassFunction) -> Result<Subgroup> {
        if !theta.group().same_elements(&self.normal) {
            return Err(Error::GroupMismatch);
        }
        // encode θ by indices into its distinct values
        let mut distinct: Vec<&Cyclotomic> = Vec::new();
        let key: Vec<u32> = theta
            .values()
            .iter()
            .map(|v| match distinct.iter().position(|d| *d == v) {
                Some(i) => i as u32,
                None => {
                    distinct.push(v);
                    (distinct.len() - 1) as u32
                }
            })
            .collect();

        let mut orbit: Vec<Vec<u32>> = vec![key.clone()];
        let mut reps: Vec<Permutation> = vec![self.group.identity()];
        let mut position: HashMap<Vec<u32>, usize> = HashMap::from([(key, 0)]);
        let mut stabilizer = self.normal.clone();
        let mut head = 0;
        while head < orbit.len() {
            for (s, map) in self.generators.iter().zip(&self.class_maps) {
                let image: Vec<u32> = map.iter().map(|&c| orbit[head][c]).collect();
                let u = &reps[head] * s;
                match position.get(&image) {
                    Some(&j) => {
                        let schreier = &u * &reps[j].inverse();
                        if !stabilizer.contains(&schreier) {
                            stabilizer = stabilizer.join(&[schreier])?;
                        }
                    }
                    None => {
                        position.insert(image.clone(), orbit.len());
                        orbit.push(image);
                        reps.push(u);
                    }
                }
            }
            head += 1;
        }
        if stabilizer.order() * orbit.len() as u128 != self.group.order() {
            return Err(Error::SelfCheck(format!(
                "stabilizer of order {} and orbit of length {} in a group of order {}",
                stabilizer.order(),
                orbit.len(),
                self.group.order()
            )));
        }
        Subgroup::of(&self.group, stabilizer)
    }

    /// Length of the orbit of `θ` under conjugation.
    pub fn orbit_length(&self, theta: &ClassFunction) -> Result<u128> {
        let i = self.inertia_group(theta)?;
        Ok(self.group.order() / i.order())
    }
}

/// `{g ∈ G : θ^g = θ}` for a class function `θ` of a normal subgroup `N`.
pub fn inertia_group(
    group: &PermGroup,
    normal: &PermGroup,
    theta: &ClassFunction,
) -> Result<Subgroup> {
    InertiaAction::new(group, normal)?.inertia_group(theta)
}

/// Irreducible constituents of `χ_N` with multiplicities, using the given
/// irreducible characters of `N`.
pub fn clifford_constituents_with(
    chi: &ClassFunction,
    normal: &PermGroup,
    irr_normal: &[ClassFunction],
) -> Result<Vec<(ClassFunction, u64)>> {
    if !normal.is_subgroup_of(chi.group()) {
        return Err(Error::NotSubgroup);
    }
    if !normal.is_normalized_by(chi.group()) {
        return Err(Error::NotNormal);
    }
    let restricted = restrict(chi, normal)?;
    let mut out = Vec::new();
    let mut degree_sum = Rational::zero();
    for theta in irr_normal {
        let m = multiplicity(&restricted, theta)?;
        if m > 0 {
            degree_sum += theta
                .degree()
                .to_rational()
                .expect("character degree is rational")
                * Rational::from_integer(m as i64);
            out.push((theta.clone(), m));
        }
    }
    if Some(degree_sum) != chi.degree().to_rational() {
        return Err(Error::SelfCheck(
            "constituent degrees do not add up to the restricted degree".into(),
        ));
    }
    Ok(out)
}

/// Irreducible constituents of `χ_N`, with the table of `N` computed (or
/// the linear characters when `N` is abelian).
pub fn clifford_constituents(
    chi: &ClassFunction,
    normal: &PermGroup,
) -> Result<Vec<(ClassFunction, u64)>> {
    if normal.is_abelian() {
        let irr = abelian_characters(normal)?;
        return clifford_constituents_with(chi, normal, &irr);
    }
    let table = character_table(normal)?;
    clifford_constituents_with(chi, normal, table.characters())
}
