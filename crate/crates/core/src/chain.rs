//! Deterministic Schreier–Sims over the fixed base `0, 1, …, n-1`.
//!
//! Only levels whose basic orbit is nontrivial are stored. A strong generator
//! `s` belongs to every level whose point is at most `s.first_moved()`, so the
//! stored base points are exactly the first moved points of the strong
//! generators and come out in increasing order.

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: u32,
    pub orbit: Vec<u32>,
    /// `slot[x]` is the position of `x` in `orbit`, or `NONE`.
    slot: Vec<u32>,
    /// `reps[i]` maps `point` to `orbit[i]`.
    pub reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn build(point: u32, gens: &[&Permutation], degree: usize) -> Level {
        let mut slot = vec![NONE; degree];
        let mut orbit = vec![point];
        let mut reps = vec![Permutation::identity(degree)];
        slot[point as usize] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let beta = orbit[head];
            for s in gens {
                let gamma = s.apply(beta);
                if slot[gamma as usize] == NONE {
                    slot[gamma as usize] = orbit.len() as u32;
                    orbit.push(gamma);
                    let rep = s.compose(&reps[head]);
                    reps.push(rep);
                }
            }
            head += 1;
        }
        let inv_reps = reps.iter().map(Permutation::inverse).collect();
        Level {
            point,
            orbit,
            slot,
            reps,
            inv_reps,
        }
    }

    #[inline]
    pub fn position(&self, x: u32) -> Option<usize> {
        match self.slot[x as usize] {
            NONE => None,
            i => Some(i as usize),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub strong_gens: Vec<Permutation>,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            strong_gens: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            if !g.is_identity() && !chain.strong_gens.contains(g) {
                chain.strong_gens.push(g.clone());
            }
        }
        let mut points: Vec<u32> = chain
            .strong_gens
            .iter()
            .filter_map(Permutation::first_moved)
            .collect();
        points.sort_unstable();
        points.dedup();
        for p in points {
            let level = chain.build_level(p);
            chain.levels.push(level);
        }
        chain.complete();
        chain
    }

    fn level_gens(&self, point: u32) -> Vec<&Permutation> {
        self.strong_gens
            .iter()
            .filter(|s| s.first_moved().is_some_and(|m| m >= point))
            .collect()
    }

    fn build_level(&self, point: u32) -> Level {
        Level::build(point, &self.level_gens(point), self.degree)
    }

    /// Runs the Schreier generator test level by level, deepest first, until
    /// every Schreier generator sifts to the identity.
    fn complete(&mut self) {
        let mut idx = self.levels.len();
        'outer: while idx > 0 {
            let level_idx = idx - 1;
            let point = self.levels[level_idx].point;
            let gens: Vec<Permutation> = self.level_gens(point).into_iter().cloned().collect();
            let orbit_len = self.levels[level_idx].orbit.len();
            for i in 0..orbit_len {
                for s in &gens {
                    let level = &self.levels[level_idx];
                    let beta = level.orbit[i];
                    let j = level
                        .position(s.apply(beta))
                        .expect("basic orbit closed under level generators");
                    let moved = s.compose(&level.reps[i]);
                    if moved == level.reps[j] {
                        continue;
                    }
                    let schreier = level.inv_reps[j].compose(&moved);
                    if let Err(residue) = self.sift(schreier) {
                        let m = residue.first_moved().expect("nontrivial residue");
                        self.strong_gens.push(residue);
                        self.refresh_levels(point, m);
                        idx = self
                            .levels
                            .iter()
                            .position(|l| l.point == m)
                            .expect("level for new point")
                            + 1;
                        continue 'outer;
                    }
                }
            }
            idx -= 1;
        }
    }

    /// Rebuilds the basic orbits of every level with point in `(above, upto]`,
    /// creating the level at `upto` if needed.
    fn refresh_levels(&mut self, above: u32, upto: u32) {
        if !self.levels.iter().any(|l| l.point == upto) {
            let pos = self.levels.partition_point(|l| l.point < upto);
            let level = self.build_level(upto);
            self.levels.insert(pos, level);
        }
        for k in 0..self.levels.len() {
            let p = self.levels[k].point;
            if p > above && p <= upto {
                self.levels[k] = self.build_level(p);
            }
        }
    }

    /// Sifts `h` through the chain: `Ok(())` if it reduces to the identity,
    /// otherwise the nontrivial residue.
    pub fn sift(&self, mut h: Permutation) -> Result<(), Permutation> {
        for level in &self.levels {
            let beta = h.apply(level.point);
            if beta == level.point {
                continue;
            }
            match level.position(beta) {
                Some(j) => h = level.inv_reps[j].compose(&h),
                None => return Err(h),
            }
        }
        if h.is_identity() {
            Ok(())
        } else {
            Err(h)
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone()).is_ok()
    }

    /// Product of the basic orbit lengths, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// All elements as products `u_0 * u_1 * … * u_k` of transversal
    /// representatives, in mixed-radix order with level 0 most significant.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut list = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(list.len() * level.reps.len());
            for rep in &level.reps {
                for g in &list {
                    next.push(rep.compose(g));
                }
            }
            list = next;
        }
        list
    }
}
