//! Instance checks for groups of order `7·3^b` with a nontrivial 3-core.
//!
//! Notation: `P` a Sylow 3-subgroup, `O = O_3(G)`, `H` a Sylow 7-subgroup
//! (a Hall 3′-subgroup for this order shape), `M` a minimal normal subgroup
//! of `G` inside `Z(O)`.

use num_traits::One;

use super::{Check, CheckStatus};
use crate::arith::units;
use crate::chartable::{
    abelian_characters, character_table, characters_of_cyclic_extension_with_sources, conjugate,
    galois_apply, induce, inner_product, restrict, ClassFunction, InertiaAction, Rational,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{
    center, elementary_abelian_prime, minimal_normal_subgroups, p_core, sylow_subgroup, Subgroup,
};

pub const MINIMAL_NORMAL_CENTRAL: &str = "minimal-normal-central";
pub const INERTIA_TRICHOTOMY: &str = "inertia-trichotomy";
pub const CLIFFORD_INDUCTION: &str = "clifford-induction";
pub const GALOIS_COMMUTES: &str = "galois-commutes";
pub const CONSTITUENT_ORBIT: &str = "constituent-orbit";
pub const CORE_COMPLEMENT_FREE: &str = "core-complement-free";

/// All proof-step names in report order.
pub const PROOF_STEPS: [&str; 6] = [
    MINIMAL_NORMAL_CENTRAL,
    INERTIA_TRICHOTOMY,
    CLIFFORD_INDUCTION,
    GALOIS_COMMUTES,
    CONSTITUENT_ORBIT,
    CORE_COMPLEMENT_FREE,
];

fn claim(name: &str) -> &'static str {
    match name {
        MINIMAL_NORMAL_CENTRAL => "some minimal normal subgroup M of G lies in Z(O_3(G)) and is elementary abelian",
        INERTIA_TRICHOTOMY => "for every nontrivial linear character of M the inertia group is O_3(G) or a Sylow 3-subgroup, and meets H trivially",
        CLIFFORD_INDUCTION => "when the inertia group is P, characters of P over the character of M induce irreducibly to G",
        GALOIS_COMMUTES => "for theta in Irr(O_3(G)) and units k = 1 mod 3, inducing to P commutes with the Galois action",
        CONSTITUENT_ORBIT => "for phi in Irr(P) reducible on O_3(G), phi restricted to O_3(G) is theta + theta^t + theta^(t^-1)",
        CORE_COMPLEMENT_FREE => "for theta in Irr(O_3(G)) lying over a nontrivial character of M, H meets the inertia group of theta trivially",
        _ => "",
    }
}

fn check(name: &str, status: CheckStatus, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        claim: claim(name).to_string(),
        status,
        detail: detail.into(),
    }
}

/// Records every proof step as skipped with the same reason.
pub fn skipped_all(reason: &str) -> Vec<Check> {
    PROOF_STEPS
        .iter()
        .map(|n| check(n, CheckStatus::Skipped, reason))
        .collect()
}

struct Setup {
    g: PermGroup,
    p: Subgroup,
    o: Subgroup,
    h: Subgroup,
    table_cap: u128,
}

/// Runs the proof-step checks. The caller has already established that
/// `|G| = 7·3^b` and that `G` is a cut group.
pub fn proof_steps(g: &PermGroup, table_cap: u128) -> Vec<Check> {
    let setup = match (|| -> Result<Setup> {
        Ok(Setup {
            g: g.clone(),
            p: sylow_subgroup(g, 3)?,
            o: p_core(g, 3)?,
            h: sylow_subgroup(g, 7)?,
            table_cap,
        })
    })() {
        Ok(s) => s,
        Err(e) => {
            return PROOF_STEPS
                .iter()
                .map(|n| check(n, CheckStatus::Fail, format!("setup failed: {e}")))
                .collect()
        }
    };
    if setup.o.is_trivial() {
        return skipped_all("O_3(G) is trivial");
    }
    let mut out = Vec::new();
    let m = match step_a(&setup) {
        Ok((c, m)) => {
            out.push(c);
            m
        }
        Err(e) => {
            out.push(check(
                MINIMAL_NORMAL_CENTRAL,
                CheckStatus::Fail,
                e.to_string(),
            ));
            None
        }
    };
    let Some(m) = m else {
        for name in &PROOF_STEPS[1..] {
            out.push(check(
                name,
                CheckStatus::Skipped,
                "no central minimal normal subgroup",
            ));
        }
        return out;
    };
    let irr_m = abelian_characters(&m);
    let action = InertiaAction::new(g, &m);
    let (irr_m, action) = match (irr_m, action) {
        (Ok(i), Ok(a)) => (i, a),
        (Err(e), _) | (_, Err(e)) => {
            for name in &PROOF_STEPS[1..] {
                out.push(check(
                    name,
                    CheckStatus::Fail,
                    format!("characters of M: {e}"),
                ));
            }
            return out;
        }
    };
    let irr_p = sylow_characters(&setup);
    type Step<'a> = Box<dyn Fn() -> Result<Check> + 'a>;
    let steps: [(&str, Step); 5] = [
        (
            INERTIA_TRICHOTOMY,
            Box::new(|| step_b(&setup, &irr_m, &action)),
        ),
        (
            CLIFFORD_INDUCTION,
            Box::new(|| step_c(&setup, &m, &irr_m, &action, &irr_p)),
        ),
        (GALOIS_COMMUTES, Box::new(|| step_d(&setup))),
        (CONSTITUENT_ORBIT, Box::new(|| step_e(&setup, &irr_p))),
        (CORE_COMPLEMENT_FREE, Box::new(|| step_f(&setup, &m))),
    ];
    for (name, f) in steps {
        out.push(f().unwrap_or_else(|e| check(name, CheckStatus::Fail, e.to_string())));
    }
    out
}

fn step_a(s: &Setup) -> Result<(Check, Option<PermGroup>)> {
    let z = center(&s.o)?;
    let minimal = minimal_normal_subgroups(&s.g)?;
    for m in &minimal {
        if m.is_subgroup_of(&z) {
            return Ok(match elementary_abelian_prime(m) {
                Some(p) => (
                    check(
                        MINIMAL_NORMAL_CENTRAL,
                        CheckStatus::Pass,
                        format!(
                            "M of order {} (elementary abelian {p}-group) inside Z(O) of order {}; minimal normal subgroups of G: {}",
                            m.order(),
                            z.order(),
                            minimal.len()
                        ),
                    ),
                    Some(m.group().clone()),
                ),
                None => (
                    check(
                        MINIMAL_NORMAL_CENTRAL,
                        CheckStatus::Fail,
                        format!("minimal normal M of order {} in Z(O) is not elementary abelian", m.order()),
                    ),
                    None,
                ),
            });
        }
    }
    Ok((
        check(
            MINIMAL_NORMAL_CENTRAL,
            CheckStatus::Fail,
            format!(
                "none of the {} minimal normal subgroups lies in Z(O)",
                minimal.len()
            ),
        ),
        None,
    ))
}

fn nontrivial_elements(h: &PermGroup) -> Result<Vec<Permutation>> {
    Ok(h.elements()?
        .iter()
        .filter(|x| !x.is_identity())
        .cloned()
        .collect())
}

fn is_sylow3(i: &PermGroup, p: &PermGroup) -> bool {
    i.order() == p.order() && crate::arith::is_power_of(i.order(), 3)
}

fn step_b(s: &Setup, irr_m: &[ClassFunction], action: &InertiaAction) -> Result<Check> {
    let h_elems = nontrivial_elements(&s.h)?;
    let (mut equal_o, mut sylow, mut equal_p) = (0usize, 0usize, 0usize);
    for (i, lambda) in irr_m.iter().enumerate().skip(1) {
        let inertia = action.inertia_group(lambda)?;
        if inertia.same_elements(&s.o) {
            equal_o += 1;
        } else if is_sylow3(&inertia, &s.p) {
            sylow += 1;
            if inertia.same_elements(&s.p) {
                equal_p += 1;
            }
        } else {
            return Ok(check(
                INERTIA_TRICHOTOMY,
                CheckStatus::Fail,
                format!(
                    "character {i} of M has inertia group of order {}",
                    inertia.order()
                ),
            ));
        }
        if let Some(x) = h_elems.iter().find(|x| inertia.contains(x)) {
            return Ok(check(
                INERTIA_TRICHOTOMY,
                CheckStatus::Fail,
                format!("character {i} of M is fixed by {x} in H"),
            ));
        }
    }
    Ok(check(
        INERTIA_TRICHOTOMY,
        CheckStatus::Pass,
        format!(
            "{} nontrivial characters: {equal_o} with inertia O, {sylow} with a Sylow 3-subgroup ({equal_p} equal to the chosen P); H meets every inertia group trivially",
            irr_m.len() - 1
        ),
    ))
}

/// Irreducible characters of `P`, each with the index of a constituent in
/// `Irr(O)` when the construction provides one.
type SylowCharacters = std::result::Result<(Vec<(ClassFunction, Option<usize>)>, String), String>;

fn order_three_top(s: &Setup) -> Result<Option<Permutation>> {
    if s.o.order() * 3 != s.p.order() {
        return Ok(None);
    }
    Ok(s.p
        .elements()?
        .iter()
        .find(|x| x.order() == 3 && !s.o.contains(x))
        .cloned())
}

fn sylow_characters(s: &Setup) -> SylowCharacters {
    if s.p.order() <= s.table_cap {
        let t = character_table(&s.p).map_err(|e| e.to_string())?;
        let chars = t.characters().iter().map(|c| (c.clone(), None)).collect();
        return Ok((chars, "character table of P".into()));
    }
    if !s.o.is_abelian() {
        return Err(format!(
            "|P| = {} exceeds the table cap and O_3(G) is not abelian",
            s.p.order()
        ));
    }
    match order_three_top(s) {
        Ok(Some(t)) => characters_of_cyclic_extension_with_sources(&s.p, &s.o, &t)
            .map(|c| {
                (
                    c.into_iter().map(|(chi, src)| (chi, Some(src))).collect(),
                    "Clifford construction over the abelian O_3(G)".into(),
                )
            })
            .map_err(|e| e.to_string()),
        Ok(None) => Err("P/O_3(G) is not generated by an element of order 3".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn step_c(
    s: &Setup,
    m: &PermGroup,
    irr_m: &[ClassFunction],
    action: &InertiaAction,
    irr_p: &SylowCharacters,
) -> Result<Check> {
    let (chars, source) = match irr_p {
        Ok(c) => c,
        Err(reason) => {
            return Ok(check(
                CLIFFORD_INDUCTION,
                CheckStatus::Skipped,
                reason.clone(),
            ))
        }
    };
    let restricted: Vec<ClassFunction> = chars
        .iter()
        .map(|(phi, _)| restrict(phi, m))
        .collect::<Result<_>>()?;
    let (mut lambdas, mut induced) = (0usize, 0usize);
    for (i, lambda) in irr_m.iter().enumerate().skip(1) {
        if !action.inertia_group(lambda)?.same_elements(&s.p) {
            continue;
        }
        lambdas += 1;
        for ((phi, _), res) in chars.iter().zip(&restricted) {
            if inner_product(res, lambda)?.is_zero_value() {
                continue;
            }
            let chi = induce(phi, &s.g)?;
            let norm = inner_product(&chi, &chi)?;
            if norm != Rational::one() {
                return Ok(check(
                    CLIFFORD_INDUCTION,
                    CheckStatus::Fail,
                    format!("a character of P over character {i} of M induces with norm {norm}"),
                ));
            }
            induced += 1;
        }
    }
    if lambdas == 0 {
        return Ok(check(
            CLIFFORD_INDUCTION,
            CheckStatus::Skipped,
            "no character of M has inertia group equal to P",
        ));
    }
    Ok(check(
        CLIFFORD_INDUCTION,
        CheckStatus::Pass,
        format!("{lambdas} characters of M with inertia P; {induced} characters of P over them induce irreducibly ({source})"),
    ))
}

trait ZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl ZeroValue for Rational {
    fn is_zero_value(&self) -> bool {
        *self.numer() == 0
    }
}

fn characters_of_core(s: &Setup) -> std::result::Result<Vec<ClassFunction>, String> {
    if s.o.is_abelian() {
        return abelian_characters(&s.o).map_err(|e| e.to_string());
    }
    if s.o.order() <= s.table_cap {
        return character_table(&s.o)
            .map(|t| t.characters().to_vec())
            .map_err(|e| e.to_string());
    }
    Err(format!("|O_3(G)| = {} exceeds the table cap", s.o.order()))
}

/// At most `limit` evenly spaced indices of `0..n`.
fn sample(n: usize, limit: usize) -> Vec<usize> {
    if n <= limit {
        (0..n).collect()
    } else {
        (0..limit).map(|i| i * n / limit).collect()
    }
}

const GALOIS_SAMPLE: usize = 64;

fn step_d(s: &Setup) -> Result<Check> {
    if s.o.same_elements(&s.p) {
        return Ok(check(GALOIS_COMMUTES, CheckStatus::Skipped, "O_3(G) = P"));
    }
    let irr_o = match characters_of_core(s) {
        Ok(c) => c,
        Err(reason) => return Ok(check(GALOIS_COMMUTES, CheckStatus::Skipped, reason)),
    };
    let e = s.p.exponent()?;
    let ks: Vec<u64> = units(e).into_iter().filter(|k| k % 3 == 1).collect();
    let picked = sample(irr_o.len(), GALOIS_SAMPLE);
    for &i in &picked {
        let theta = &irr_o[i];
        let up = induce(theta, &s.p)?;
        for &k in &ks {
            let lhs = galois_apply(k as i64, &up)?;
            let rhs = induce(&galois_apply(k as i64, theta)?, &s.p)?;
            if lhs != rhs {
                return Ok(check(
                    GALOIS_COMMUTES,
                    CheckStatus::Fail,
                    format!("character {i} of O_3(G), unit {k}"),
                ));
            }
        }
    }
    Ok(check(
        GALOIS_COMMUTES,
        CheckStatus::Pass,
        format!(
            "{} of {} characters of O_3(G), units {ks:?} modulo {e}",
            picked.len(),
            irr_o.len()
        ),
    ))
}

fn step_e(s: &Setup, irr_p: &SylowCharacters) -> Result<Check> {
    if s.o.same_elements(&s.p) {
        return Ok(check(CONSTITUENT_ORBIT, CheckStatus::Skipped, "O_3(G) = P"));
    }
    let (chars, source) = match irr_p {
        Ok(c) => c,
        Err(reason) => {
            return Ok(check(
                CONSTITUENT_ORBIT,
                CheckStatus::Skipped,
                reason.clone(),
            ))
        }
    };
    let Some(t) = order_three_top(s)? else {
        return Ok(check(
            CONSTITUENT_ORBIT,
            CheckStatus::Skipped,
            "P/O_3(G) is not generated by an element of order 3",
        ));
    };
    let t_inv = t.inverse();
    let irr_o = match characters_of_core(s) {
        Ok(c) => c,
        Err(reason) => return Ok(check(CONSTITUENT_ORBIT, CheckStatus::Skipped, reason)),
    };
    let mut reducible = 0usize;
    for (j, (phi, src)) in chars.iter().enumerate() {
        let res = restrict(phi, &s.o)?;
        if inner_product(&res, &res)? == Rational::one() {
            continue;
        }
        reducible += 1;
        let theta = match src {
            Some(i) => &irr_o[*i],
            None => irr_o
                .iter()
                .find(|th| inner_product(&res, th).is_ok_and(|m| !m.is_zero_value()))
                .ok_or_else(|| Error::SelfCheck("restriction has no constituent".into()))?,
        };
        let orbit_sum = theta
            .try_add(&conjugate(theta, &t)?)?
            .try_add(&conjugate(theta, &t_inv)?)?;
        if orbit_sum != res {
            return Ok(check(
                CONSTITUENT_ORBIT,
                CheckStatus::Fail,
                format!(
                    "character {j} of P restricted to O_3(G) is not theta + theta^t + theta^(t^-1)"
                ),
            ));
        }
    }
    Ok(check(
        CONSTITUENT_ORBIT,
        CheckStatus::Pass,
        format!(
            "{reducible} of {} characters of P are reducible on O_3(G), each the orbit sum under an element t of order 3 outside O_3(G) ({source})",
            chars.len()
        ),
    ))
}

fn step_f(s: &Setup, m: &PermGroup) -> Result<Check> {
    let irr_o = match characters_of_core(s) {
        Ok(c) => c,
        Err(reason) => return Ok(check(CORE_COMPLEMENT_FREE, CheckStatus::Skipped, reason)),
    };
    let action = InertiaAction::new(&s.g, &s.o)?;
    let h_elems = nontrivial_elements(&s.h)?;
    let mut over_nontrivial = 0usize;
    for (i, theta) in irr_o.iter().enumerate() {
        let res = restrict(theta, m)?;
        // lies over a nontrivial character of M iff M is not in the kernel
        if res.values().iter().all(|v| v == res.degree()) {
            continue;
        }
        over_nontrivial += 1;
        let inertia = action.inertia_group(theta)?;
        if let Some(x) = h_elems.iter().find(|x| inertia.contains(x)) {
            return Ok(check(
                CORE_COMPLEMENT_FREE,
                CheckStatus::Fail,
                format!("character {i} of O_3(G) is fixed by {x} in H"),
            ));
        }
    }
    Ok(check(
        CORE_COMPLEMENT_FREE,
        CheckStatus::Pass,
        format!("{over_nontrivial} characters of O_3(G) lie over nontrivial characters of M; none is fixed by a nontrivial element of H"),
    ))
}
