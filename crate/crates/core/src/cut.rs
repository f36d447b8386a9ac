//! The cut property decided from conjugacy classes.
//!
//! Whether every generator `g^k` of `⟨g⟩` is conjugate to `g` or `g⁻¹` depends
//! only on the class of `g`: conjugating by `x` carries `g^k` to `(xgx⁻¹)^k`.
//! So one representative per class is enough.

use serde::Serialize;

use crate::arith::units;
use crate::classes::ConjugacyClassTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassVerdict {
    /// Every generator of `⟨g⟩` is conjugate to `g`.
    Rational,
    /// Every generator is conjugate to `g` or `g⁻¹`, and some only to `g⁻¹`.
    InverseSemiRationalOnly,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCut {
    pub class: usize,
    pub element_order: u64,
    pub verdict: ClassVerdict,
    /// Least `k` coprime to the element order with `g^k` conjugate to
    /// neither `g` nor `g⁻¹`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityVerdict {
    pub classes: Vec<ClassCut>,
    pub is_rational: bool,
    pub is_cut: bool,
}

impl RationalityVerdict {
    /// The first failing class in class order, if any.
    pub fn first_failure(&self) -> Option<&ClassCut> {
        self.classes
            .iter()
            .find(|c| c.verdict == ClassVerdict::Fails)
    }
}

fn class_verdict(table: &ConjugacyClassTable, class: usize) -> ClassCut {
    let c = table.class(class);
    let n = c.element_order;
    let inverse = table.inverse_class(class);
    let elems = table.elements();
    let mut verdict = ClassVerdict::Rational;
    let mut witness = None;
    for k in units(n).into_iter().skip(1) {
        let power = c.representative.pow(k as i64);
        let target =
            table.class_of_index(elems.index_of_member(&power).expect("power is a member"));
        if target == class {
            continue;
        }
        if target == inverse {
            verdict = ClassVerdict::InverseSemiRationalOnly;
        } else {
            verdict = ClassVerdict::Fails;
            witness = Some(k);
            break;
        }
    }
    ClassCut {
        class,
        element_order: n,
        verdict,
        witness,
    }
}

/// Whether every generator of `⟨g⟩` is conjugate in `group` to `g` or `g⁻¹`;
/// on failure also the least offending exponent.
pub fn is_cut_element(group: &PermGroup, g: &Permutation) -> Result<(bool, Option<u64>)> {
    if !group.contains(g) {
        return Err(Error::NotMember);
    }
    let table = group.classes()?;
    let class = table.class_of(g).ok_or(Error::NotMember)?;
    let v = class_verdict(&table, class);
    Ok((v.verdict != ClassVerdict::Fails, v.witness))
}

pub fn is_cut_group(group: &PermGroup) -> Result<RationalityVerdict> {
    let table = group.classes()?;
    let classes: Vec<ClassCut> = (0..table.len()).map(|i| class_verdict(&table, i)).collect();
    Ok(RationalityVerdict {
        is_rational: classes.iter().all(|c| c.verdict == ClassVerdict::Rational),
        is_cut: classes.iter().all(|c| c.verdict != ClassVerdict::Fails),
        classes,
    })
}

/// True iff every power map by a unit fixes every class.
pub fn is_rational_group(group: &PermGroup) -> Result<bool> {
    let table = group.classes()?;
    Ok(units(table.exponent()).into_iter().all(|k| {
        table
            .power_map(k as i64)
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cyclic, elementary_abelian, extraspecial_27, frobenius_3_7a, symmetric};

    #[test]
    fn cyclic_examples() {
        let c3 = cyclic(3).unwrap();
        let g = c3.generators()[0].clone();
        assert_eq!(is_cut_element(&c3, &g).unwrap(), (true, None));
        let v = is_cut_group(&c3).unwrap();
        assert!(v.is_cut && !v.is_rational);
        assert_eq!(v.classes[1].verdict, ClassVerdict::InverseSemiRationalOnly);

        let c9 = cyclic(9).unwrap();
        let g = c9.generators()[0].clone();
        assert_eq!(is_cut_element(&c9, &g).unwrap(), (false, Some(2)));

        let c7 = cyclic(7).unwrap();
        let v = is_cut_group(&c7).unwrap();
        assert!(!v.is_cut);
        assert_eq!(v.first_failure().unwrap().witness, Some(2));
    }

    #[test]
    fn order21_seven_element_is_cut() {
        let g = frobenius_3_7a(1).unwrap();
        let a = g.generators()[0].clone();
        assert_eq!(a.order(), 7);
        assert_eq!(is_cut_element(&g, &a).unwrap(), (true, None));
        assert!(is_cut_group(&g).unwrap().is_cut);
    }

    #[test]
    fn groups_of_exponent_three() {
        assert!(
            is_cut_group(&elementary_abelian(3, 2).unwrap())
                .unwrap()
                .is_cut
        );
        assert!(is_cut_group(&extraspecial_27(3).unwrap()).unwrap().is_cut);
    }

    #[test]
    fn rationality() {
        assert!(is_rational_group(&PermGroup::trivial(1).unwrap()).unwrap());
        assert!(!is_rational_group(&cyclic(3).unwrap()).unwrap());
        let s3 = symmetric(3).unwrap();
        assert!(is_rational_group(&s3).unwrap());
        assert!(is_cut_group(&s3).unwrap().is_rational);
    }

    #[test]
    fn non_member_is_rejected() {
        let c3 = cyclic(3).unwrap();
        let outsider = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(
            is_cut_element(&c3, &outsider).unwrap_err(),
            Error::NotMember
        );
    }
}
