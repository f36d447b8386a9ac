//! Subgroup structure: centers, Sylow subgroups, p-cores, normal subgroups,
//! quotients and Frobenius kernels.

use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use crate::arith::{is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A subgroup together with the group it was taken in.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: PermGroup,
    group: PermGroup,
}

impl Subgroup {
    /// Subgroup of `parent` generated by `gens` (members of `parent`).
    pub fn generated(parent: &PermGroup, gens: Vec<Permutation>) -> Result<Subgroup> {
        Ok(Subgroup {
            group: parent.subgroup(gens)?,
            parent: parent.clone(),
        })
    }

    /// Wraps `group`, checking that it lies in `parent`.
    pub fn of(parent: &PermGroup, group: PermGroup) -> Result<Subgroup> {
        if !group.is_subgroup_of(parent) {
            return Err(Error::NotSubgroup);
        }
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    pub fn whole(parent: &PermGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: parent.clone(),
        }
    }

    pub fn trivial(parent: &PermGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: PermGroup::with_cap(Vec::new(), parent.degree(), parent.enumeration_cap())
                .expect("trivial group"),
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    pub fn index(&self) -> u128 {
        self.parent.order() / self.group.order()
    }

    pub fn is_normal(&self) -> bool {
        self.group.is_normalized_by(&self.parent)
    }

    /// The same subgroup viewed inside another group containing it.
    pub fn reparent(&self, parent: &PermGroup) -> Result<Subgroup> {
        Subgroup::of(parent, self.group.clone())
    }
}

impl Deref for Subgroup {
    type Target = PermGroup;

    fn deref(&self) -> &PermGroup {
        &self.group
    }
}

/// `{z : zg = gz for all g}`; for a nontrivial p-group this is nontrivial.
pub fn center(group: &PermGroup) -> Result<Subgroup> {
    let gens = group.generators().to_vec();
    let z = group.subgroup_where(|x| gens.iter().all(|g| x * g == g * x))?;
    Subgroup::of(group, z)
}

fn normalizes(x: &Permutation, q: &PermGroup) -> bool {
    let x_inv = x.inverse();
    q.generators()
        .iter()
        .all(|g| q.contains(&g.conjugated_by(x, &x_inv)))
}

/// A Sylow `p`-subgroup, grown from the trivial group one normalizing
/// `p`-element at a time. Each step adjoins the first `p`-element (in
/// enumeration order) that normalizes the current `p`-subgroup without lying
/// in it; such an element exists until the Sylow order is reached.
pub fn sylow_subgroup(group: &PermGroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let target = p_part(group.order(), p);
    let elems = group.elements()?;
    let mut q = Subgroup::trivial(group).into_group();
    while q.order() < target {
        let x = elems
            .iter()
            .find(|x| is_power_of(x.order() as u128, p) && normalizes(x, &q) && !q.contains(x))
            .ok_or_else(|| {
                Error::SelfCheck(format!(
                    "no normalizing {p}-element above order {}",
                    q.order()
                ))
            })?;
        q = q.join(std::slice::from_ref(x))?;
        debug_assert!(is_power_of(q.order(), p));
    }
    Subgroup::of(group, q)
}

/// The largest normal `p`-subgroup, computed as the core of a Sylow
/// `p`-subgroup: intersect with conjugates under the generators until stable.
pub fn p_core(group: &PermGroup, p: u64) -> Result<Subgroup> {
    let sylow = sylow_subgroup(group, p)?;
    let mut core = sylow.into_group();
    loop {
        let mut changed = false;
        for s in group.generators() {
            let s_inv = s.inverse();
            // x ∈ s Q s⁻¹  iff  s⁻¹ x s ∈ Q
            let q = core.clone();
            let next = core.subgroup_where(|x| q.contains(&x.conjugated_by(&s_inv, s)))?;
            if next.order() < core.order() {
                core = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let core = Subgroup::of(group, core)?;
    if !core.is_normal() {
        return Err(Error::SelfCheck("p-core is not normal".into()));
    }
    Ok(core)
}

/// Smallest normal subgroup containing `g`.
pub fn normal_closure(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    let mut n = group.subgroup(vec![g.clone()])?;
    loop {
        let mut extra = Vec::new();
        for s in group.generators() {
            let s_inv = s.inverse();
            for h in n.generators() {
                let c = h.conjugated_by(s, &s_inv);
                if !n.contains(&c) && !extra.contains(&c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return Ok(n);
        }
        n = n.join(&extra)?;
    }
}

/// The commutator subgroup: normal closure of the generator commutators.
pub fn derived_subgroup(group: &PermGroup) -> Result<Subgroup> {
    let gens = group.generators();
    let mut d = Subgroup::trivial(group).into_group();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = &(&(a * b) * &a.inverse()) * &b.inverse();
            if !d.contains(&c) {
                d = d.join(normal_closure(group, &c)?.generators())?;
            }
        }
    }
    Subgroup::of(group, d)
}

/// Class indices whose representatives lie in `n`.
fn class_set(group: &PermGroup, n: &PermGroup) -> Result<Vec<bool>> {
    let table = group.classes()?;
    Ok(table
        .classes()
        .iter()
        .map(|c| n.contains(&c.representative))
        .collect())
}

fn is_subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// Every normal subgroup, as unions of conjugacy classes closed under
/// products. Normal closures of single classes are joined pairwise until no
/// new class union appears. Sorted by order, then by class membership.
pub fn normal_subgroups(group: &PermGroup) -> Result<Vec<Subgroup>> {
    let table = group.classes()?;
    let r = table.len();

    let mut closures: Vec<(Vec<bool>, PermGroup)> = Vec::new();
    for c in table.classes().iter().skip(1) {
        let n = normal_closure(group, &c.representative)?;
        let set = class_set(group, &n)?;
        if !closures.iter().any(|(s, _)| *s == set) {
            closures.push((set, n));
        }
    }

    let mut trivial_set = vec![false; r];
    trivial_set[0] = true;
    let mut found: HashMap<Vec<bool>, PermGroup> = HashMap::new();
    found.insert(trivial_set.clone(), Subgroup::trivial(group).into_group());
    let mut queue: VecDeque<Vec<bool>> = VecDeque::from([trivial_set]);
    while let Some(set) = queue.pop_front() {
        let n = found[&set].clone();
        for (cset, cgroup) in &closures {
            if is_subset(cset, &set) {
                continue;
            }
            let joined = n.join(cgroup.generators())?;
            let jset = class_set(group, &joined)?;
            if !found.contains_key(&jset) {
                found.insert(jset.clone(), joined);
                queue.push_back(jset);
            }
        }
    }

    let mut out: Vec<(Vec<bool>, PermGroup)> = found.into_iter().collect();
    out.sort_by(|(sa, a), (sb, b)| a.order().cmp(&b.order()).then_with(|| sb.cmp(sa)));
    out.into_iter()
        .map(|(set, n)| {
            let size: usize = set
                .iter()
                .zip(table.classes())
                .filter(|(&inside, _)| inside)
                .map(|(_, c)| c.size)
                .sum();
            if size as u128 != n.order() {
                return Err(Error::SelfCheck("class union is not a subgroup".into()));
            }
            Subgroup::of(group, n)
        })
        .collect()
}

/// Minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(group: &PermGroup) -> Result<Vec<Subgroup>> {
    let all = normal_subgroups(group)?;
    let nontrivial: Vec<&Subgroup> = all.iter().filter(|n| !n.is_trivial()).collect();
    Ok(nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect())
}

/// The prime `p` if the group is a nontrivial elementary abelian `p`-group.
pub fn elementary_abelian_prime(group: &PermGroup) -> Option<u64> {
    if group.is_trivial() || !group.is_abelian() {
        return None;
    }
    let orders: Vec<u64> = group
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .map(Permutation::order)
        .collect();
    let p = orders[0];
    (is_prime(p) && orders.iter().all(|&o| o == p)).then_some(p)
}

/// `G/N` acting regularly on the cosets of `N`, with the projection.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    parent: PermGroup,
    kernel: Subgroup,
    quotient: PermGroup,
    /// Coset label of every element of the parent, by enumeration index.
    coset_of: Vec<u32>,
    coset_reps: Vec<Permutation>,
}

impl QuotientGroup {
    pub fn group(&self) -> &PermGroup {
        &self.quotient
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn coset_count(&self) -> usize {
        self.coset_reps.len()
    }

    /// Image of `g` in the quotient.
    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        let elems = self.parent.elements()?;
        if elems.index_of(g).is_none() {
            return Err(Error::NotMember);
        }
        let images = self
            .coset_reps
            .iter()
            .map(|r| {
                let i = elems
                    .index_by_base_images(|b| g.apply(r.apply(b)))
                    .expect("product of members");
                self.coset_of[i]
            })
            .collect();
        Ok(Permutation::from_images_unchecked(images))
    }
}

pub fn quotient_group(group: &PermGroup, normal: &Subgroup) -> Result<QuotientGroup> {
    if !normal.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    if !normal.is_normalized_by(group) {
        return Err(Error::NotNormal);
    }
    let elems = group.elements()?;
    let kernel_elems = normal.elements()?;
    const UNSEEN: u32 = u32::MAX;
    let mut coset_of = vec![UNSEEN; elems.len()];
    let mut coset_reps = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        if coset_of[i] != UNSEEN {
            continue;
        }
        let label = coset_reps.len() as u32;
        for n in kernel_elems.iter() {
            let j = elems
                .index_by_base_images(|b| x.apply(n.apply(b)))
                .expect("coset element is a member");
            coset_of[j] = label;
        }
        coset_reps.push(x.clone());
    }
    let m = coset_reps.len();
    let act = |s: &Permutation| -> Permutation {
        let images = coset_reps
            .iter()
            .map(|r| {
                let j = elems
                    .index_by_base_images(|b| s.apply(r.apply(b)))
                    .expect("product of members");
                coset_of[j]
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let gens: Vec<Permutation> = group.generators().iter().map(act).collect();
    let quotient = PermGroup::with_cap(gens, m, group.enumeration_cap())?;
    if quotient.order() * normal.order() != group.order() {
        return Err(Error::SelfCheck("quotient order mismatch".into()));
    }
    Ok(QuotientGroup {
        parent: group.clone(),
        kernel: Subgroup::of(group, normal.group().clone())?,
        quotient,
        coset_of,
        coset_reps,
    })
}

/// A complement to the normal subgroup `kernel` of coprime index, built
/// greedily from elements of order coprime to `|kernel|`.
pub fn coprime_complement(group: &PermGroup, kernel: &Subgroup) -> Result<Option<Subgroup>> {
    let k = kernel.order();
    let m = group.order() / k;
    if gcd_u128(k, m) != 1 {
        return Ok(None);
    }
    let elems = group.elements()?;
    let mut h = Subgroup::trivial(group).into_group();
    for x in elems.iter() {
        if h.order() == m {
            break;
        }
        if gcd_u128(x.order() as u128, k) != 1 || h.contains(x) {
            continue;
        }
        let candidate = h.join(std::slice::from_ref(x))?;
        if gcd_u128(candidate.order(), k) == 1 {
            h = candidate;
        }
    }
    if h.order() != m {
        return Ok(None);
    }
    Subgroup::of(group, h).map(Some)
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

/// True iff `G = K ⋊ H` with `C_K(h) = 1` for every nontrivial `h ∈ H`.
pub fn is_frobenius_with_kernel(group: &PermGroup, kernel: &Subgroup) -> Result<bool> {
    Ok(frobenius_complement(group, kernel)?.is_some())
}

/// The complement witnessing the Frobenius property, if any.
pub fn frobenius_complement(group: &PermGroup, kernel: &Subgroup) -> Result<Option<Subgroup>> {
    if !kernel.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    if !kernel.is_normalized_by(group) {
        return Err(Error::NotNormal);
    }
    if kernel.is_trivial() || kernel.order() == group.order() {
        return Err(Error::InvalidParameter(
            "Frobenius kernel must be a proper nontrivial subgroup".into(),
        ));
    }
    let Some(h) = coprime_complement(group, kernel)? else {
        return Ok(None);
    };
    let kernel_elems = kernel.elements()?;
    let h_elems = h.elements()?;
    let fixed_point_free = h_elems.iter().filter(|x| !x.is_identity()).all(|x| {
        kernel_elems
            .iter()
            .all(|k| k.is_identity() || x * k != k * x)
    });
    Ok(fixed_point_free.then_some(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn order21() -> PermGroup {
        corpus::frobenius_3_7a(1).unwrap()
    }

    #[test]
    fn centers() {
        let c9 = corpus::cyclic(9).unwrap();
        assert_eq!(center(&c9).unwrap().order(), 9);
        assert_eq!(center(&order21()).unwrap().order(), 1);
        let he = corpus::extraspecial_27(3).unwrap();
        assert_eq!(center(&he).unwrap().order(), 3);
    }

    #[test]
    fn sylow_subgroups() {
        let g = order21();
        let s7 = sylow_subgroup(&g, 7).unwrap();
        assert_eq!(s7.order(), 7);
        assert!(s7.is_normal());
        assert_eq!(sylow_subgroup(&g, 5).unwrap().order(), 1);
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        let he = corpus::extraspecial_27(3).unwrap();
        assert!(sylow_subgroup(&he, 3).unwrap().same_elements(&he));
        assert!(matches!(
            sylow_subgroup(&g, 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn cores() {
        let g = order21();
        assert_eq!(p_core(&g, 3).unwrap().order(), 1);
        assert_eq!(p_core(&g, 7).unwrap().order(), 7);
        let he = corpus::extraspecial_27(9).unwrap();
        assert_eq!(p_core(&he, 3).unwrap().order(), 27);
    }

    #[test]
    fn normal_subgroup_lattices() {
        let c3 = corpus::cyclic(3).unwrap();
        let orders: Vec<u128> = normal_subgroups(&c3)
            .unwrap()
            .iter()
            .map(|n| n.order())
            .collect();
        assert_eq!(orders, vec![1, 3]);

        let orders: Vec<u128> = normal_subgroups(&order21())
            .unwrap()
            .iter()
            .map(|n| n.order())
            .collect();
        assert_eq!(orders, vec![1, 7, 21]);

        let e9 = corpus::elementary_abelian(3, 2).unwrap();
        let orders: Vec<u128> = normal_subgroups(&e9)
            .unwrap()
            .iter()
            .map(|n| n.order())
            .collect();
        assert_eq!(orders, vec![1, 3, 3, 3, 3, 9]);
    }

    #[test]
    fn minimal_normals() {
        let m = minimal_normal_subgroups(&order21()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 7);
        assert_eq!(elementary_abelian_prime(&m[0]), Some(7));

        let e9 = corpus::elementary_abelian(3, 2).unwrap();
        let m = minimal_normal_subgroups(&e9).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.iter().all(|n| n.order() == 3));

        let c9 = corpus::cyclic(9).unwrap();
        let m = minimal_normal_subgroups(&c9).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 3);
    }

    #[test]
    fn quotients() {
        let g = order21();
        let k = sylow_subgroup(&g, 7).unwrap();
        let q = quotient_group(&g, &k).unwrap();
        assert_eq!(q.group().order(), 3);
        assert!(q.group().is_abelian());
        let whole = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(whole.group().order(), 1);
        let regular = quotient_group(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(regular.group().order(), 21);
        assert_eq!(regular.group().degree(), 21);

        let s3 = sylow_subgroup(&g, 3).unwrap();
        assert_eq!(quotient_group(&g, &s3).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_n() {
        let g = corpus::frobenius_3_7a(2).unwrap();
        let k = sylow_subgroup(&g, 7).unwrap();
        let q = quotient_group(&g, &k).unwrap();
        let elems = g.elements().unwrap();
        let id = q.group().identity();
        for (i, x) in elems.iter().enumerate().step_by(7) {
            let y = elems.get((i * 31 + 5) % elems.len());
            let lhs = q.project(&(x * y)).unwrap();
            let rhs = &q.project(x).unwrap() * &q.project(y).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(q.project(x).unwrap() == id, k.contains(x));
        }
    }

    #[test]
    fn frobenius_detection() {
        let g = order21();
        let k = sylow_subgroup(&g, 7).unwrap();
        assert!(is_frobenius_with_kernel(&g, &k).unwrap());

        let e9 = corpus::elementary_abelian(3, 2).unwrap();
        let factor = Subgroup::generated(&e9, vec![e9.generators()[0].clone()]).unwrap();
        assert!(!is_frobenius_with_kernel(&e9, &factor).unwrap());

        let he = corpus::extraspecial_27(3).unwrap();
        let z = center(&he).unwrap();
        assert!(!is_frobenius_with_kernel(&he, &z).unwrap());

        assert!(matches!(
            is_frobenius_with_kernel(&g, &Subgroup::whole(&g)),
            Err(Error::InvalidParameter(_))
        ));
    }
}
