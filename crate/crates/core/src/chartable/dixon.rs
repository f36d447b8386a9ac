//! Irreducible characters by the Burnside–Dixon method.
//!
//! Over `F_p` with `p ≡ 1 (mod e)` and `p > 2√|G|`, the central characters
//! `ω_χ(K_i) = |K_i| χ(g_i) / χ(1)` are the common eigenvectors of the class
//! matrices `A_i[j][k] = c_ijk` (structure constants of the class algebra).
//! Degrees and values follow modulo `p`, and each value is lifted to `Q(ζ_e)`
//! from the eigenvalue multiplicities of `g_i` acting in the representation.

use super::cyclotomic::{Cyclotomic, Rational};
use crate::arith::{gcd, is_prime, isqrt, least_primitive_root, mod_inv, mod_pow};
use crate::classes::ConjugacyClassTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;

pub const DEFAULT_PRIME_BOUND: u64 = 100_000_000;

/// Least prime `p ≡ 1 (mod e)` with `p² > 4·|G|`, below `bound`.
pub fn dixon_prime(exponent: u64, order: u128, bound: u64) -> Result<u64> {
    let mut p = exponent + 1;
    while p < bound {
        if (p as u128) * (p as u128) > 4 * order && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::NoDixonPrime {
        exponent,
        order,
        bound,
    })
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Reduced row echelon form in place; returns pivot columns and drops zero
/// rows.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = mod_inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let (pivot, other) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, &y) in other.iter_mut().zip(pivot.iter()) {
                    *x = (*x + p - mulm(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : M x = 0}` for a square matrix.
fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, p);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        out.push(v);
    }
    out
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u128, |acc, (&a, &b)| acc + a as u128 * b as u128)
                % p as u128
        })
        .map(|x| x as u64)
        .collect()
}

/// Roots in `F_p` of the minimal polynomial of `v` under `m`.
fn krylov_roots(m: &[Vec<u64>], v: Vec<u64>, p: u64) -> Vec<u64> {
    let d = m.len();
    // reduced Krylov vectors with their pivot and polynomial combination
    let mut basis: Vec<(Vec<u64>, usize, Vec<u64>)> = Vec::new();
    let mut power = v;
    for k in 0..=d {
        let mut cur = power.clone();
        let mut combo = vec![0u64; d + 1];
        combo[k] = 1;
        for (b, piv, bc) in &basis {
            let f = cur[*piv];
            if f != 0 {
                for (x, &y) in cur.iter_mut().zip(b) {
                    *x = (*x + p - mulm(f, y, p)) % p;
                }
                for (x, &y) in combo.iter_mut().zip(bc) {
                    *x = (*x + p - mulm(f, y, p)) % p;
                }
            }
        }
        match cur.iter().position(|&x| x != 0) {
            None => {
                let poly = &combo[..=k];
                return (0..p)
                    .filter(|&x| {
                        poly.iter()
                            .rev()
                            .fold(0, |acc, &c| (mulm(acc, x, p) + c) % p)
                            == 0
                    })
                    .collect();
            }
            Some(piv) => {
                let inv = mod_inv(cur[piv], p);
                for x in cur.iter_mut() {
                    *x = mulm(*x, inv, p);
                }
                for x in combo.iter_mut() {
                    *x = mulm(*x, inv, p);
                }
                basis.push((cur, piv, combo));
            }
        }
        power = mat_vec(m, &power, p);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Splits `m` (diagonalizable) into eigenspaces; `None` if the eigenvalues
/// found do not account for the whole space.
fn eigenspaces(m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let d = m.len();
    let mut seen: Vec<u64> = Vec::new();
    let mut spaces = Vec::new();
    let mut dim = 0;
    for start in 0..d {
        if dim == d {
            break;
        }
        let mut e = vec![0u64; d];
        e[start] = 1;
        for lambda in krylov_roots(m, e, p) {
            if seen.contains(&lambda) {
                continue;
            }
            seen.push(lambda);
            let shifted: Vec<Vec<u64>> = m
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = row.clone();
                    r[i] = (r[i] + p - lambda) % p;
                    r
                })
                .collect();
            let ns = nullspace(&shifted, p);
            dim += ns.len();
            spaces.push(ns);
        }
    }
    (dim == d).then_some(spaces)
}

/// Class matrix `A_i[j][k] = #{x ∈ K_i : x⁻¹ z_k ∈ K_j}` for representatives
/// `z_k`.
fn class_matrix(table: &ConjugacyClassTable, i: usize, p: u64) -> Vec<Vec<u64>> {
    let r = table.len();
    let elems = table.elements();
    let mut a = vec![vec![0u64; r]; r];
    let inverses: Vec<_> = table
        .class(i)
        .elements
        .iter()
        .map(|&x| elems.get(x as usize).inverse())
        .collect();
    for k in 0..r {
        let z = &table.class(k).representative;
        for x_inv in &inverses {
            let y = elems
                .index_by_base_images(|b| x_inv.apply(z.apply(b)))
                .expect("product of members");
            let j = table.class_of_index(y);
            a[j][k] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    a
}

/// Character values of all irreducibles (unsorted), together with the prime.
pub(crate) fn irreducible_values(
    group: &PermGroup,
    bound: u64,
) -> Result<(u64, Vec<Vec<Cyclotomic>>)> {
    let table = group.classes()?;
    let r = table.len();
    let e = table.exponent();
    let order = group.order();
    let p = dixon_prime(e, order, bound)?;

    // subspaces as RREF bases of F_p^r
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(&table, i, p);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let mut basis = space;
            let pivots = rref(&mut basis, p);
            let d = basis.len();
            // restriction of A_i, acting on coordinate vectors: m[s][t]
            let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(&a, b, p)).collect();
            let m: Vec<Vec<u64>> = (0..d)
                .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
                .collect();
            let parts = eigenspaces(&m, p).ok_or_else(|| {
                Error::SplittingFailure(format!("class matrix {i} is not diagonalizable mod {p}"))
            })?;
            for part in parts {
                let mut vecs: Vec<Vec<u64>> = part
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; r];
                        for (c, b) in coords.iter().zip(&basis) {
                            if *c != 0 {
                                for (x, &y) in v.iter_mut().zip(b) {
                                    *x = (*x + mulm(*c, y, p)) % p;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                rref(&mut vecs, p);
                next.push(vecs);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::SplittingFailure(format!(
            "{} common eigenspaces for {r} classes",
            spaces.len()
        )));
    }

    let sizes: Vec<u64> = table.classes().iter().map(|c| c.size as u64 % p).collect();
    let order_mod = (order % p as u128) as u64;
    let max_degree = isqrt(order) as u64;
    let root = least_primitive_root(p);
    let z = mod_pow(root, (p - 1) / e, p);
    // power maps for all exponents below e
    let power_maps: Vec<Vec<usize>> = (0..e as i64).map(|k| table.power_map(k)).collect();

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::SplittingFailure(
                "eigenvector vanishes at the identity".into(),
            ));
        }
        let inv0 = mod_inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mulm(x, inv0, p)).collect();
        // Σ_j ω_j ω_j* / h_j = |G| / χ(1)²
        let s = (0..r).fold(0u64, |acc, j| {
            let t = mulm(omega[j], omega[table.inverse_class(j)], p);
            (acc + mulm(t, mod_inv(sizes[j], p), p)) % p
        });
        if s == 0 {
            return Err(Error::LiftFailure("degree sum vanishes modulo p".into()));
        }
        let s_inv = mod_inv(s, p);
        let target = mulm(order_mod, s_inv, p);
        let degree = (1..=max_degree)
            .find(|&d| order.is_multiple_of(d as u128) && mulm(d, d, p) == target)
            .ok_or_else(|| Error::LiftFailure("no admissible degree".into()))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|j| mulm(mulm(omega[j], degree, p), mod_inv(sizes[j], p), p))
            .collect();

        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let o = table.class(j).element_order;
            let step = e / o;
            let zo = mod_pow(z, step, p); // primitive o-th root of unity mod p
            let o_inv = mod_inv(o % p, p);
            let mut mult = vec![Rational::from_integer(0); e as usize];
            let mut total = 0u64;
            for l in 0..o {
                // m_l = (1/o) Σ_k χ(g^k) ζ_o^{-kl}
                let zl_inv = mod_inv(mod_pow(zo, l, p), p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for k in 0..o {
                    let c = power_maps[k as usize][j];
                    acc = (acc + mulm(chi_mod[c], w, p)) % p;
                    w = mulm(w, zl_inv, p);
                }
                let m = mulm(acc, o_inv, p);
                if m > degree {
                    return Err(Error::LiftFailure(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree} at class {j}"
                    )));
                }
                total += m;
                mult[(l * step) as usize] = Rational::from_integer(m as i64);
            }
            if total != degree {
                return Err(Error::LiftFailure(format!(
                    "multiplicities sum to {total}, not {degree}, at class {j}"
                )));
            }
            row.push(Cyclotomic::from_exponent_sum(e, &mult));
        }
        rows.push(row);
    }
    debug_assert!(gcd(p, e) == 1);
    Ok((p, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // p ≡ 1 mod 3 and p² > 12
        assert_eq!(dixon_prime(3, 3, 1000).unwrap(), 7);
        // order 21, exponent 21: p > 2√21 ≈ 9.2, p ≡ 1 mod 21
        assert_eq!(dixon_prime(21, 21, 1000).unwrap(), 43);
        assert!(matches!(
            dixon_prime(21, 21, 40),
            Err(Error::NoDixonPrime { .. })
        ));
    }

    #[test]
    fn linear_algebra_mod_p() {
        let p = 7;
        let m = vec![vec![1, 2], vec![2, 4]];
        let ns = nullspace(&m, p);
        assert_eq!(ns.len(), 1);
        assert_eq!(mat_vec(&m, &ns[0], p), vec![0, 0]);
        // diag(2, 3) has eigenvalues 2 and 3
        let d = vec![vec![2, 0], vec![0, 3]];
        let spaces = eigenspaces(&d, p).unwrap();
        assert_eq!(spaces.len(), 2);
    }
}
