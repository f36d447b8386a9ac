//! Brute-force reference computations.
//!
//! Nothing here uses stabilizer chains or class tables: elements come from a
//! plain closure under the generators, classes from closure under
//! conjugation by the generators, and every element is tested against every
//! unit exponent. Slow, but independent of the main code paths.

use std::collections::{HashMap, HashSet};

use crate::arith::gcd;
use crate::perm::Permutation;

/// Results of the element-by-element scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceVerdict {
    pub order: usize,
    pub class_count: usize,
    pub is_cut: bool,
    pub is_rational: bool,
}

/// All group elements, identity first, in breadth-first order.
pub fn closure(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.images().to_vec());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        for s in gens {
            let y = &x * s;
            if seen.insert(y.images().to_vec()) {
                out.push(y);
            }
        }
        head += 1;
    }
    out
}

/// Class label of every element of `elements` (as produced by [`closure`]).
fn class_labels(
    elements: &[Permutation],
    gens: &[Permutation],
) -> (HashMap<Vec<u32>, usize>, usize) {
    let inv: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut label: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut count = 0;
    for x in elements {
        if label.contains_key(x.images()) {
            continue;
        }
        let mut stack = vec![x.clone()];
        label.insert(x.images().to_vec(), count);
        while let Some(y) = stack.pop() {
            for (s, si) in gens.iter().zip(&inv) {
                let z = &(s * &y) * si;
                if !label.contains_key(z.images()) {
                    label.insert(z.images().to_vec(), count);
                    stack.push(z);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Scans every element `g` and every `k` coprime to `o(g)`.
pub fn brute_force_cut(gens: &[Permutation], degree: usize) -> BruteForceVerdict {
    let elements = closure(gens, degree);
    let (label, class_count) = class_labels(&elements, gens);
    let mut is_cut = true;
    let mut is_rational = true;
    for g in &elements {
        let n = g.order();
        let own = label[g.images()];
        let inverse = label[g.inverse().images()];
        for k in 1..=n {
            if gcd(k, n) != 1 {
                continue;
            }
            let c = label[g.pow(k as i64).images()];
            if c != own {
                is_rational = false;
                if c != inverse {
                    is_cut = false;
                }
            }
        }
    }
    BruteForceVerdict {
        order: elements.len(),
        class_count,
        is_cut,
        is_rational,
    }
}

/// Least `k` coprime to `o(g)` with `g^k` conjugate to neither `g` nor
/// `g⁻¹`, found by explicit conjugation over the whole group.
pub fn least_cut_witness(gens: &[Permutation], degree: usize, g: &Permutation) -> Option<u64> {
    let g_inv = g.inverse();
    let allowed: HashSet<Vec<u32>> = closure(gens, degree)
        .iter()
        .flat_map(|x| {
            let x_inv = x.inverse();
            [&(x * g) * &x_inv, &(x * &g_inv) * &x_inv]
        })
        .map(|c| c.images().to_vec())
        .collect();
    let n = g.order();
    (1..=n)
        .filter(|&k| gcd(k, n) == 1)
        .find(|&k| !allowed.contains(g.pow(k as i64).images()))
}
