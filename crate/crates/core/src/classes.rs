//! Conjugacy classes, power maps and centralizers.

use std::sync::Arc;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::group::{Elements, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Lexicographically least image array in the class.
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
    /// Indices into the group's element list.
    pub elements: Vec<u32>,
}

/// Classes in canonical order: by element order, then size, then
/// representative image array.
pub struct ConjugacyClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    inverse_class: Vec<usize>,
    exponent: u64,
    group_order: u128,
    elements: Arc<Elements>,
}

impl ConjugacyClassTable {
    pub(crate) fn compute(group: &PermGroup) -> Result<ConjugacyClassTable> {
        let elements = group.elements()?;
        let n = elements.len();
        let gens: Vec<(Permutation, Permutation)> = group
            .generators()
            .iter()
            .map(|s| (s.clone(), s.inverse()))
            .collect();

        const UNSEEN: u32 = u32::MAX;
        let mut label = vec![UNSEEN; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if label[start] != UNSEEN {
                continue;
            }
            let id = orbits.len() as u32;
            label[start] = id;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = elements.get(orbit[head] as usize);
                for (s, s_inv) in &gens {
                    // s x s⁻¹ evaluated only on the base
                    let y = elements
                        .index_by_base_images(|b| s.apply(x.apply(s_inv.apply(b))))
                        .expect("conjugate of a member is a member");
                    if label[y] == UNSEEN {
                        label[y] = id;
                        orbit.push(y as u32);
                    }
                }
                head += 1;
            }
            orbits.push(orbit);
        }

        let mut classes: Vec<ConjugacyClass> = orbits
            .into_iter()
            .map(|mut members| {
                members.sort_unstable();
                let rep = members
                    .iter()
                    .map(|&i| elements.get(i as usize))
                    .min()
                    .expect("nonempty class")
                    .clone();
                ConjugacyClass {
                    element_order: rep.order(),
                    size: members.len(),
                    representative: rep,
                    elements: members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.element_order, a.size)
                .cmp(&(b.element_order, b.size))
                .then_with(|| a.representative.images().cmp(b.representative.images()))
        });

        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &e in &c.elements {
                class_of[e as usize] = ci as u32;
            }
        }
        let inverse_class = classes
            .iter()
            .map(|c| {
                let inv = c.representative.inverse();
                class_of[elements.index_of_member(&inv).expect("inverse is a member")] as usize
            })
            .collect();
        let exponent = classes.iter().fold(1, |acc, c| lcm(acc, c.element_order));
        Ok(ConjugacyClassTable {
            classes,
            class_of,
            inverse_class,
            exponent,
            group_order: group.order(),
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn group_order(&self) -> u128 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> &Elements {
        &self.elements
    }

    /// Class index of the element with the given enumeration index.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    /// Class index of a member of the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.class_of[i] as usize)
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    pub fn centralizer_order(&self, i: usize) -> u128 {
        self.group_order / self.classes[i].size as u128
    }

    /// Class of `rep_i^k` for every class `i`. `k` may be negative; it is
    /// reduced modulo each element order.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| {
                let e = k.rem_euclid(c.element_order as i64);
                let g = c.representative.pow(e);
                self.class_of[self
                    .elements
                    .index_of_member(&g)
                    .expect("power is a member")] as usize
            })
            .collect()
    }
}

impl std::fmt::Debug for ConjugacyClassTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConjugacyClassTable")
            .field("classes", &self.classes.len())
            .field("exponent", &self.exponent)
            .finish()
    }
}

pub fn conjugacy_classes(group: &PermGroup) -> Result<Arc<ConjugacyClassTable>> {
    group.classes()
}

pub fn class_power_map(table: &ConjugacyClassTable, k: i64) -> Vec<usize> {
    table.power_map(k)
}

/// `{x ∈ G : xg = gx}`.
pub fn centralizer(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    if !group.contains(g) {
        return Err(Error::NotMember);
    }
    group.subgroup_where(|x| x * g == g * x)
}

pub fn are_conjugate(group: &PermGroup, x: &Permutation, y: &Permutation) -> Result<bool> {
    if !group.contains(x) || !group.contains(y) {
        return Err(Error::NotMember);
    }
    let table = group.classes()?;
    Ok(table.class_of(x) == table.class_of(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn order21() -> PermGroup {
        let a = cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        let b = cyc(7, &[&[1, 2, 4], &[3, 6, 5]]);
        PermGroup::from_generators(vec![a, b], 7).unwrap()
    }

    fn c3() -> PermGroup {
        PermGroup::from_generators(vec![cyc(3, &[&[0, 1, 2]])], 3).unwrap()
    }

    #[test]
    fn cyclic_three_classes() {
        let t = c3().classes().unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.classes().iter().all(|c| c.size == 1));
        assert_eq!(t.power_map(1), vec![0, 1, 2]);
        assert_eq!(t.power_map(2), vec![0, 2, 1]);
    }

    #[test]
    fn trivial_group_has_one_class() {
        let t = PermGroup::trivial(1).unwrap().classes().unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.exponent(), 1);
    }

    #[test]
    fn order21_classes() {
        let g = order21();
        let t = g.classes().unwrap();
        let sizes: Vec<usize> = t.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 7, 7, 3, 3]);
        let orders: Vec<u64> = t.classes().iter().map(|c| c.element_order).collect();
        assert_eq!(orders, vec![1, 3, 3, 7, 7]);
        // the two classes of 7-elements are swapped by cubing
        let p3 = t.power_map(3);
        assert_eq!(p3[3], 4);
        assert_eq!(p3[4], 3);
        assert_eq!(t.exponent(), 21);
    }

    #[test]
    fn order21_conjugacy_and_centralizers() {
        let g = order21();
        let a = g.generators()[0].clone();
        assert!(are_conjugate(&g, &a, &a.pow(2)).unwrap());
        assert!(!are_conjugate(&g, &a, &a.pow(3)).unwrap());
        assert_eq!(centralizer(&g, &a).unwrap().order(), 7);
        assert_eq!(centralizer(&g, &g.identity()).unwrap().order(), 21);
        let outsider = cyc(7, &[&[0, 1]]);
        assert_eq!(centralizer(&g, &outsider).unwrap_err(), Error::NotMember);
        assert_eq!(
            are_conjugate(&g, &a, &outsider).unwrap_err(),
            Error::NotMember
        );
    }

    #[test]
    fn abelian_centralizers_and_conjugacy() {
        let g = c3();
        let a = g.generators()[0].clone();
        assert_eq!(centralizer(&g, &a).unwrap().order(), 3);
        assert!(!are_conjugate(&g, &a, &a.pow(2)).unwrap());
        assert!(are_conjugate(&g, &a, &a).unwrap());
    }

    #[test]
    fn class_equation_and_centralizer_orders() {
        let g = order21();
        let t = g.classes().unwrap();
        let total: usize = t.classes().iter().map(|c| c.size).sum();
        assert_eq!(total as u128, g.order());
        for (i, c) in t.classes().iter().enumerate() {
            let cent = centralizer(&g, &c.representative).unwrap();
            assert_eq!(cent.order(), t.centralizer_order(i));
        }
    }

    proptest! {
        #[test]
        fn conjugates_are_conjugate(i in 0usize..21, j in 0usize..21) {
            let g = order21();
            let elems = g.elements().unwrap();
            let x = elems.get(i);
            let h = elems.get(j);
            let y = x.conjugated_by(h, &h.inverse());
            prop_assert!(are_conjugate(&g, x, &y).unwrap());
        }

        #[test]
        fn power_maps_compose(k in 1i64..42, l in 1i64..42) {
            let g = order21();
            let t = g.classes().unwrap();
            prop_assume!(gcd(k as u64, 21) == 1 && gcd(l as u64, 21) == 1);
            let pk = t.power_map(k);
            let pl = t.power_map(l);
            let pkl = t.power_map(k * l);
            for i in 0..t.len() {
                prop_assert_eq!(pk[pl[i]], pkl[i]);
            }
        }
    }
}
