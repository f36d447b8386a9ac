//! Permutation groups given by generators.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::classes::ConjugacyClassTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::MAX_DEGREE;

/// Default limit on full element enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

/// The enumerated elements of a group, indexed by their images of the base.
pub struct Elements {
    base: Vec<u32>,
    list: Vec<Permutation>,
    index: HashMap<Box<[u32]>, u32>,
}

impl Elements {
    fn new(chain: &StabChain) -> Elements {
        let base = chain.base();
        let list = chain.enumerate();
        let index = list
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let key: Box<[u32]> = base.iter().map(|&b| g.apply(b)).collect();
                (key, i as u32)
            })
            .collect();
        Elements { base, list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.list[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.list.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.list
    }

    /// Index of a group element; `None` for non-members.
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        let i = self.index_of_member(g)?;
        (self.list[i] == *g).then_some(i)
    }

    /// Index of an element known to be a member, read off its base images.
    #[inline]
    pub fn index_of_member(&self, g: &Permutation) -> Option<usize> {
        self.index_by_base_images(|b| g.apply(b))
    }

    /// Index of the member whose base images are given by `image`. Used to
    /// locate products and conjugates without forming them in full.
    #[inline]
    pub fn index_by_base_images(&self, image: impl Fn(u32) -> u32) -> Option<usize> {
        let key: Box<[u32]> = self.base.iter().map(|&b| image(b)).collect();
        self.index.get(&key).map(|&i| i as usize)
    }
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    cap: usize,
    elements: OnceLock<Option<Arc<Elements>>>,
    classes: OnceLock<Arc<ConjugacyClassTable>>,
}

/// A finite permutation group. Cloning is cheap; all derived data is shared.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn from_generators(gens: Vec<Permutation>, degree: usize) -> Result<PermGroup> {
        PermGroup::with_cap(gens, degree, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(gens: Vec<Permutation>, degree: usize, cap: usize) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, &gens);
        let order = chain.order().ok_or(Error::OrderOverflow)?;
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators: gens,
                chain,
                order,
                cap,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Result<PermGroup> {
        PermGroup::from_generators(Vec::new(), degree)
    }

    /// Subgroup generated by `gens`, which must be members of `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(bad) = gens.iter().find(|g| !self.contains(g)) {
            return Err(if bad.degree() != self.degree() {
                Error::DegreeMismatch {
                    expected: self.degree(),
                    found: bad.degree(),
                }
            } else {
                Error::NotMember
            });
        }
        PermGroup::with_cap(gens, self.degree(), self.inner.cap)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.inner.chain.strong_gens
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn enumeration_cap(&self) -> usize {
        self.inner.cap
    }

    pub fn base(&self) -> Vec<u32> {
        self.inner.chain.base()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.inner.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// Equality as subsets of the symmetric group.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// True when `self` is normalized by every generator of `parent`.
    pub fn is_normalized_by(&self, parent: &PermGroup) -> bool {
        parent.generators().iter().all(|s| {
            let s_inv = s.inverse();
            self.generators()
                .iter()
                .all(|g| self.contains(&g.conjugated_by(s, &s_inv)))
        })
    }

    /// Full element list; fails when the order exceeds the enumeration cap.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        self.inner
            .elements
            .get_or_init(|| {
                (self.order() <= self.inner.cap as u128)
                    .then(|| Arc::new(Elements::new(&self.inner.chain)))
            })
            .clone()
            .ok_or(Error::EnumerationCapExceeded {
                order: self.order(),
                cap: self.inner.cap,
            })
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> Result<Arc<ConjugacyClassTable>> {
        if let Some(t) = self.inner.classes.get() {
            return Ok(t.clone());
        }
        let table = Arc::new(ConjugacyClassTable::compute(self)?);
        Ok(self.inner.classes.get_or_init(|| table).clone())
    }

    /// Group exponent (lcm of element orders).
    pub fn exponent(&self) -> Result<u64> {
        Ok(self.classes()?.exponent())
    }

    /// Subgroup of the elements satisfying `pred`, which must define a
    /// subgroup. Generators are collected greedily in enumeration order.
    pub fn subgroup_where(&self, mut pred: impl FnMut(&Permutation) -> bool) -> Result<PermGroup> {
        let elems = self.elements()?;
        let mut gens = Vec::new();
        let mut current = PermGroup::with_cap(Vec::new(), self.degree(), self.inner.cap)?;
        for g in elems.iter() {
            if !current.contains(g) && pred(g) {
                gens.push(g.clone());
                current = PermGroup::with_cap(
                    current
                        .strong_generators()
                        .iter()
                        .cloned()
                        .chain(std::iter::once(g.clone()))
                        .collect(),
                    self.degree(),
                    self.inner.cap,
                )?;
            }
        }
        // Keep the short generating list rather than the strong generators.
        PermGroup::with_cap(gens, self.degree(), self.inner.cap)
    }

    /// Group generated by `self` together with `extra`.
    pub fn join(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut gens = self.generators().to_vec();
        for g in extra {
            if !g.is_identity() && !self.contains(g) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        PermGroup::with_cap(gens, self.degree(), self.inner.cap)
    }

    /// Canonical generator list (sorted, deduplicated image arrays), used as
    /// a cache key.
    pub fn canonical_key(&self) -> Vec<Vec<u32>> {
        let mut key: Vec<Vec<u32>> = self
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| g.images().to_vec())
            .collect();
        key.sort();
        key.dedup();
        key.insert(0, vec![self.degree() as u32]);
        key
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

/// Builds a group from generators; see [`PermGroup::from_generators`].
pub fn group_from_generators(gens: Vec<Permutation>, degree: usize) -> Result<PermGroup> {
    PermGroup::from_generators(gens, degree)
}
