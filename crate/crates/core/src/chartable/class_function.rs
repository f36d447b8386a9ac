//! Class functions, inner products, induction, restriction and conjugation.

use std::fmt;

use num_traits::{One, Zero};

use super::cyclotomic::{hermitian_sum, Cyclotomic, Rational};
use crate::arith::gcd;
use crate::classes::ConjugacyClassTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A function on the conjugacy classes of a group (in the canonical class
/// order), with values in `Q(ζ_e)` for the group exponent `e`.
#[derive(Clone)]
pub struct ClassFunction {
    group: PermGroup,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    /// Values are lifted to the group exponent; their conductors must divide it.
    pub fn new(group: &PermGroup, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        let table = group.classes()?;
        if values.len() != table.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} classes",
                values.len(),
                table.len()
            )));
        }
        let e = table.exponent();
        let values = values
            .into_iter()
            .map(|v| {
                if e % v.conductor() == 0 {
                    Ok(v.lift(e))
                } else {
                    v.descend(gcd(e, v.conductor()))
                        .map(|w| w.lift(e))
                        .ok_or(Error::NotInField(e))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    /// Values already at the group exponent, one per class.
    pub(crate) fn from_parts(group: &PermGroup, values: Vec<Cyclotomic>) -> ClassFunction {
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn trivial(group: &PermGroup) -> Result<ClassFunction> {
        let table = group.classes()?;
        let one = Cyclotomic::one(table.exponent());
        Ok(ClassFunction::from_parts(group, vec![one; table.len()]))
    }

    /// `|G|` at the identity, zero elsewhere.
    pub fn regular(group: &PermGroup) -> Result<ClassFunction> {
        let table = group.classes()?;
        let e = table.exponent();
        let mut values = vec![Cyclotomic::zero(e); table.len()];
        values[0] = Cyclotomic::from_integer(e, order_i64(group.order()));
        Ok(ClassFunction::from_parts(group, values))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// The conductor all values are stored at (the group exponent).
    pub fn conductor(&self) -> u64 {
        self.values[0].conductor()
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// The degree as an integer, when it is one.
    pub fn degree_integer(&self) -> Option<i64> {
        let q = self.values[0].to_rational()?;
        q.is_integer().then(|| q.to_integer())
    }

    pub fn is_trivial(&self) -> bool {
        self.values
            .iter()
            .all(|v| v.to_rational() == Some(Rational::one()))
    }

    pub fn is_rational_valued(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_rational)
    }

    fn check_same_group(&self, other: &ClassFunction) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        Ok(ClassFunction::from_parts(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        Ok(ClassFunction::from_parts(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, q: Rational) -> ClassFunction {
        ClassFunction::from_parts(
            &self.group,
            self.values.iter().map(|v| v.scale(q)).collect(),
        )
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> ClassFunction {
        ClassFunction::from_parts(
            &self.group,
            self.values.iter().map(Cyclotomic::conj).collect(),
        )
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_group(&self.group, &other.group)
    }
}

impl Eq for ClassFunction {}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.values.iter().map(ToString::to_string))
            .finish()
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn same_group(a: &PermGroup, b: &PermGroup) -> bool {
    a.same_elements(b)
}

pub(crate) fn order_i64(n: u128) -> i64 {
    i64::try_from(n).expect("group order fits in i64")
}

/// `(1/|G|) Σ_c |c| φ(c) conj(ψ(c))`; an error when the result is not
/// rational (which cannot happen for characters).
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Rational> {
    phi.check_same_group(psi)?;
    let table = phi.group.classes()?;
    let total = hermitian_sum(
        phi.conductor(),
        table
            .classes()
            .iter()
            .zip(phi.values.iter().zip(&psi.values))
            .map(|(c, (a, b))| (Rational::from_integer(c.size as i64), a, b)),
    );
    let q = total.to_rational().ok_or(Error::NonRationalInnerProduct)?;
    Ok(q / Rational::from_integer(order_i64(phi.group.order())))
}

/// Class of `G` containing each class representative of `H`.
pub fn class_fusion(h: &PermGroup, g: &PermGroup) -> Result<Vec<usize>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let h_table = h.classes()?;
    let g_table = g.classes()?;
    Ok(h_table
        .classes()
        .iter()
        .map(|c| {
            let i = g_table
                .elements()
                .index_of_member(&c.representative)
                .expect("subgroup element lies in the group");
            g_table.class_of_index(i)
        })
        .collect())
}

/// `θ^G(c) = |G|/(|H|·|c|) · Σ |d| θ(d)`, the sum over classes `d` of `H`
/// fusing into `c`.
pub fn induce(theta: &ClassFunction, g: &PermGroup) -> Result<ClassFunction> {
    let h = &theta.group;
    let fusion = class_fusion(h, g)?;
    let h_table = h.classes()?;
    let g_table = g.classes()?;
    let e = g_table.exponent();
    let mut sums = vec![Cyclotomic::zero(e); g_table.len()];
    for (d, &c) in fusion.iter().enumerate() {
        let v = theta.values[d]
            .lift(e)
            .scale(Rational::from_integer(h_table.class(d).size as i64));
        sums[c] = &sums[c] + &v;
    }
    let index = order_i64(g.order() / h.order());
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| s.scale(Rational::new(index, g_table.class(c).size as i64)))
        .collect();
    Ok(ClassFunction::from_parts(g, values))
}

/// Values of `χ` on the classes of `H ≤ G`, expressed over `Q(ζ_{exp H})`.
pub fn restrict(chi: &ClassFunction, h: &PermGroup) -> Result<ClassFunction> {
    let fusion = class_fusion(h, &chi.group)?;
    let e = h.exponent()?;
    let values = fusion
        .iter()
        .map(|&c| chi.values[c].descend(e).ok_or(Error::NotInField(e)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction::from_parts(h, values))
}

/// Class of `N` containing `g n g⁻¹` for each class representative `n`.
pub(crate) fn conjugation_class_map(
    table: &ConjugacyClassTable,
    g: &Permutation,
    g_inv: &Permutation,
) -> Vec<usize> {
    let elems = table.elements();
    table
        .classes()
        .iter()
        .map(|c| {
            let n = &c.representative;
            let i = elems
                .index_by_base_images(|b| g.apply(n.apply(g_inv.apply(b))))
                .expect("g normalizes the subgroup");
            table.class_of_index(i)
        })
        .collect()
}

/// `θ^g(n) = θ(g n g⁻¹)` for `g` normalizing the group of `θ`.
pub fn conjugate(theta: &ClassFunction, g: &Permutation) -> Result<ClassFunction> {
    let n = &theta.group;
    if g.degree() != n.degree() {
        return Err(Error::DegreeMismatch {
            expected: n.degree(),
            found: g.degree(),
        });
    }
    let g_inv = g.inverse();
    if !n
        .generators()
        .iter()
        .all(|x| n.contains(&x.conjugated_by(g, &g_inv)))
    {
        return Err(Error::NotNormal);
    }
    let table = n.classes()?;
    let map = conjugation_class_map(&table, g, &g_inv);
    Ok(ClassFunction::from_parts(
        n,
        map.iter().map(|&c| theta.values[c].clone()).collect(),
    ))
}

/// `Σ_i coefficient_i · f_i` for class functions on one group.
pub fn linear_combination(terms: &[(Rational, &ClassFunction)]) -> Result<ClassFunction> {
    let (_, first) = terms
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty linear combination".into()))?;
    let mut acc = first.scale(Rational::zero());
    for (q, f) in terms {
        acc = acc.try_add(&f.scale(*q))?;
    }
    Ok(acc)
}

/// Integer multiplicity `⟨χ, θ⟩`, rejecting non-integral results.
pub(crate) fn multiplicity(chi: &ClassFunction, theta: &ClassFunction) -> Result<u64> {
    let m = inner_product(chi, theta)?;
    if !m.is_integer() || m < Rational::zero() {
        return Err(Error::SelfCheck(format!(
            "multiplicity {m} is not a non-negative integer"
        )));
    }
    Ok(m.to_integer() as u64)
}
