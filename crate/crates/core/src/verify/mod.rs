//! Corpus-wide verification: the Sylow and 3-core statements, the order
//! trichotomy for odd cut groups, the structural proof steps on concrete
//! instances, and agreement of the two cut criteria.
//!
//! Every check carries a stable name and a one-line statement of the claim
//! it instantiates. A check is passed, failed or skipped, and a skip always
//! says why.

pub mod proof;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{is_power_of, p_part};
use crate::chartable::{character_cut_criterion, character_table};
use crate::corpus::CorpusEntry;
use crate::cut::{is_cut_group, RationalityVerdict};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::oracle::brute_force_cut;
use crate::structure::{
    center, is_frobenius_with_kernel, normal_subgroups, p_core, quotient_group, sylow_subgroup,
};

/// Version of the report layout; bumped on any incompatible change.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Default largest group order given a full character table.
pub const DEFAULT_TABLE_CAP: u128 = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub status: CheckStatus,
    /// Witnesses on failure, the reason for a skip, counts on success.
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Theorem,
    Trichotomy,
    Proof,
    Equivalence,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "theorem" => Ok(Suite::Theorem),
            "trichotomy" => Ok(Suite::Trichotomy),
            "proof" => Ok(Suite::Proof),
            "equivalence" => Ok(Suite::Equivalence),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidParameter(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Theorem => "theorem",
            Suite::Trichotomy => "trichotomy",
            Suite::Proof => "proof",
            Suite::Equivalence => "equivalence",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub table_cap: u128,
    pub include_timings: bool,
    /// Worker threads; `0` lets the thread pool decide.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suite: Suite::All,
            table_cap: DEFAULT_TABLE_CAP,
            include_timings: false,
            jobs: 0,
        }
    }
}

/// Order and cut verdict of a derived subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupVerdict {
    pub order: u64,
    pub is_cut: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub order: u64,
    pub degree: usize,
    pub odd_order: bool,
    /// Conjugacy-class criterion.
    pub is_cut: Option<bool>,
    /// Character criterion, when the table was within the cap.
    pub is_cut_by_characters: Option<bool>,
    pub sylow3: Option<SubgroupVerdict>,
    pub core3: Option<SubgroupVerdict>,
    pub shape: Option<String>,
    pub trichotomy_ok: Option<bool>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl GroupRecord {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub table_cap: u64,
    pub records: Vec<GroupRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_records(suite: Suite, table_cap: u128, records: Vec<GroupRecord>) -> Self {
        let mut summary = Summary {
            groups: records.len(),
            ..Summary::default()
        };
        for c in records.iter().flat_map(|r| &r.checks) {
            match c.status {
                CheckStatus::Pass => summary.passed += 1,
                CheckStatus::Fail => summary.failed += 1,
                CheckStatus::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION,
            suite,
            table_cap: table_cap as u64,
            records,
            summary,
        }
    }

    /// No check failed; skips do not count against the report.
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn record(&self, name: &str) -> Option<&GroupRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, grouped by record.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let cut = match r.is_cut {
                Some(true) => "cut",
                Some(false) => "not cut",
                None => "cut status unknown",
            };
            out.push_str(&format!("{} (order {}, {cut})\n", r.name, r.order));
            for c in &r.checks {
                out.push_str(&format!("  [{}] {}: {}\n", c.status, c.name, c.detail));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} groups: {} passed, {} failed, {} skipped\n",
            s.groups, s.passed, s.failed, s.skipped
        ));
        out
    }
}

pub const SYLOW3_CUT: &str = "sylow3-cut";
pub const CORE3_CUT: &str = "core3-cut";
pub const QUOTIENT_CLOSURE: &str = "quotient-closure";
pub const TRICHOTOMY: &str = "trichotomy";
pub const CRITERIA_AGREE: &str = "criteria-agree";
pub const ORACLE_AGREES: &str = "oracle-agrees";
pub const CORE_CUT_CONCLUSION: &str = "core-cut";

fn claim(name: &str) -> &'static str {
    match name {
        SYLOW3_CUT => "a Sylow 3-subgroup of an odd-order cut group is cut",
        CORE3_CUT => "O_3 of an odd-order cut group is cut",
        QUOTIENT_CLOSURE => "every quotient G/N of a cut group by a nontrivial normal N is cut (observation)",
        TRICHOTOMY => "an odd-order cut group is a 3-group, a Frobenius group of order 3·7^a, or has order 7·3^b with O_3(G)H Frobenius with kernel O_3(G) and G/O_3(G) nonabelian of order 21",
        CRITERIA_AGREE => "the conjugacy criterion and the field-of-values criterion give the same cut verdict",
        ORACLE_AGREES => "the class-based verdict equals an element-by-element brute-force verdict",
        CORE_CUT_CONCLUSION => "for |G| = 7·3^b the 3-core O_3(G) is cut",
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

fn verdict_detail(v: &RationalityVerdict) -> String {
    match v.first_failure() {
        Some(c) => format!(
            "class {} (element order {}) fails with k = {}",
            c.class,
            c.element_order,
            c.witness.unwrap_or(0)
        ),
        None => "every class passes".into(),
    }
}

/// Order shapes allowed for odd-order cut groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderShape {
    ThreeGroup,
    /// `3·7^a` with `a ≥ 1`.
    ThreeTimesSevenPower,
    /// `7·3^b` with `b ≥ 2`.
    SevenTimesThreePower,
    Other,
}

impl OrderShape {
    pub fn of(order: u128) -> OrderShape {
        if is_power_of(order, 3) {
            OrderShape::ThreeGroup
        } else if order.is_multiple_of(3) && is_power_of(order / 3, 7) {
            OrderShape::ThreeTimesSevenPower
        } else if order.is_multiple_of(7) && is_power_of(order / 7, 3) {
            OrderShape::SevenTimesThreePower
        } else {
            OrderShape::Other
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            OrderShape::ThreeGroup => "3^b",
            OrderShape::ThreeTimesSevenPower => "3*7^a",
            OrderShape::SevenTimesThreePower => "7*3^b",
            OrderShape::Other => "other",
        }
    }
}

/// Sylow 3-subgroup and the cut verdict of a group.
pub fn verify_theorem(group: &PermGroup) -> Result<(SubgroupVerdict, SubgroupVerdict)> {
    let p = sylow_subgroup(group, 3)?;
    let o = p_core(group, 3)?;
    Ok((
        SubgroupVerdict {
            order: p.order() as u64,
            is_cut: is_cut_group(&p)?.is_cut,
        },
        SubgroupVerdict {
            order: o.order() as u64,
            is_cut: is_cut_group(&o)?.is_cut,
        },
    ))
}

/// Checks the shape of `|G|` and the structure attached to it. Returns the
/// shape and a description of what was confirmed or what went wrong.
pub fn verify_trichotomy(group: &PermGroup) -> Result<(OrderShape, bool, String)> {
    let shape = OrderShape::of(group.order());
    Ok(match shape {
        OrderShape::ThreeGroup => (shape, true, "3-group".into()),
        OrderShape::ThreeTimesSevenPower => {
            let kernel = sylow_subgroup(group, 7)?;
            if is_frobenius_with_kernel(group, &kernel)? {
                (
                    shape,
                    true,
                    format!("Frobenius with kernel of order {}", kernel.order()),
                )
            } else {
                (
                    shape,
                    false,
                    "the Sylow 7-subgroup is not a Frobenius kernel".into(),
                )
            }
        }
        OrderShape::SevenTimesThreePower => {
            let o = p_core(group, 3)?;
            let h = sylow_subgroup(group, 7)?;
            if o.is_trivial() {
                return Ok((shape, false, "O_3(G) is trivial".into()));
            }
            let oh = group.subgroup(
                o.generators()
                    .iter()
                    .chain(h.generators())
                    .cloned()
                    .collect(),
            )?;
            let o_in_oh = crate::structure::Subgroup::of(&oh, o.group().clone())?;
            let frobenius = is_frobenius_with_kernel(&oh, &o_in_oh)?;
            let quotient = quotient_group(group, &o)?;
            let q = quotient.group();
            let q_ok = q.order() == 21 && center(q)?.is_trivial();
            match (frobenius, q_ok) {
                (true, true) => (
                    shape,
                    true,
                    format!("O_3(G) of order {} is the kernel of the Frobenius group O_3(G)H; G/O_3(G) is nonabelian of order 21", o.order()),
                ),
                (false, _) => (shape, false, "O_3(G)H is not Frobenius with kernel O_3(G)".into()),
                (true, false) => (
                    shape,
                    false,
                    format!("G/O_3(G) has order {} and is not nonabelian of order 21", q.order()),
                ),
            }
        }
        OrderShape::Other => (
            shape,
            false,
            format!("order {} has none of the allowed shapes", group.order()),
        ),
    })
}

/// Cut verdicts of every quotient by a nontrivial normal subgroup.
pub fn quotient_closure(group: &PermGroup) -> Result<(usize, Option<u128>)> {
    let mut count = 0;
    for n in normal_subgroups(group)? {
        if n.is_trivial() {
            continue;
        }
        let q = quotient_group(group, &n)?;
        count += 1;
        if !is_cut_group(q.group())?.is_cut {
            return Ok((count, Some(n.order())));
        }
    }
    Ok((count, None))
}

/// Conjugacy and character verdicts, or `None` for the latter above `cap`.
pub fn verify_equivalence(group: &PermGroup, cap: u128) -> Result<(bool, Option<bool>)> {
    let by_classes = is_cut_group(group)?.is_cut;
    if group.order() > cap {
        return Ok((by_classes, None));
    }
    let table = character_table(group)?;
    Ok((by_classes, Some(character_cut_criterion(&table)?)))
}

fn run<T>(name: &str, checks: &mut Vec<Check>, f: impl FnOnce() -> Result<T>) -> Option<T> {
    match f() {
        Ok(v) => Some(v),
        Err(e) => {
            checks.push(check(
                name,
                CheckStatus::Fail,
                format!("computation failed: {e}"),
            ));
            None
        }
    }
}

/// Runs the checks of `options.suite` on one group.
pub fn verify_group(
    name: &str,
    family: Option<String>,
    group: &PermGroup,
    options: &VerifyOptions,
) -> GroupRecord {
    let start = Instant::now();
    let suite = options.suite;
    let odd = group.order() % 2 == 1;
    let mut checks = Vec::new();
    let mut record = GroupRecord {
        name: name.to_string(),
        family,
        order: group.order() as u64,
        degree: group.degree(),
        odd_order: odd,
        is_cut: None,
        is_cut_by_characters: None,
        sylow3: None,
        core3: None,
        shape: None,
        trichotomy_ok: None,
        checks: Vec::new(),
        elapsed_ms: None,
    };

    let verdict = run("cut", &mut checks, || is_cut_group(group));
    record.is_cut = verdict.as_ref().map(|v| v.is_cut);
    let hypothesis = match (&verdict, odd) {
        (_, false) => Err("hypothesis not met: even order".to_string()),
        (None, _) => Err("cut verdict unavailable".to_string()),
        (Some(v), true) if !v.is_cut => Err(format!(
            "hypothesis not met: not cut ({})",
            verdict_detail(v)
        )),
        _ => Ok(()),
    };

    if suite.includes(Suite::Theorem) {
        match &hypothesis {
            Err(reason) => {
                for n in [SYLOW3_CUT, CORE3_CUT, QUOTIENT_CLOSURE] {
                    checks.push(check(n, CheckStatus::Skipped, reason.clone()));
                }
            }
            Ok(()) => {
                if let Some((p, o)) = run(SYLOW3_CUT, &mut checks, || verify_theorem(group)) {
                    for (n, v, what) in [
                        (SYLOW3_CUT, &p, "Sylow 3-subgroup"),
                        (CORE3_CUT, &o, "O_3(G)"),
                    ] {
                        let status = if v.is_cut {
                            CheckStatus::Pass
                        } else {
                            CheckStatus::Fail
                        };
                        let verdict = if v.is_cut { "cut" } else { "not cut" };
                        checks.push(check(
                            n,
                            status,
                            format!("{what} of order {} is {verdict}", v.order),
                        ));
                    }
                    record.sylow3 = Some(p);
                    record.core3 = Some(o);
                }
                if let Some((count, bad)) =
                    run(QUOTIENT_CLOSURE, &mut checks, || quotient_closure(group))
                {
                    checks.push(match bad {
                        None => check(
                            QUOTIENT_CLOSURE,
                            CheckStatus::Pass,
                            format!("{count} quotients, all cut"),
                        ),
                        Some(n) => check(
                            QUOTIENT_CLOSURE,
                            CheckStatus::Fail,
                            format!("quotient by a normal subgroup of order {n} is not cut"),
                        ),
                    });
                }
            }
        }
    }

    if suite.includes(Suite::Trichotomy) {
        match &hypothesis {
            Err(reason) => checks.push(check(TRICHOTOMY, CheckStatus::Skipped, reason.clone())),
            Ok(()) => {
                if let Some((shape, ok, detail)) =
                    run(TRICHOTOMY, &mut checks, || verify_trichotomy(group))
                {
                    record.shape = Some(shape.label().to_string());
                    record.trichotomy_ok = Some(ok);
                    let status = if ok {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    };
                    checks.push(check(
                        TRICHOTOMY,
                        status,
                        format!("order shape {}: {detail}", shape.label()),
                    ));
                }
            }
        }
    }

    if suite.includes(Suite::Proof) {
        let shape = OrderShape::of(group.order());
        match &hypothesis {
            Err(reason) => {
                checks.extend(proof::skipped_all(reason));
                checks.push(check(
                    CORE_CUT_CONCLUSION,
                    CheckStatus::Skipped,
                    reason.clone(),
                ));
            }
            Ok(()) if shape != OrderShape::SevenTimesThreePower => {
                let reason = format!("order shape {} is not 7*3^b", shape.label());
                checks.extend(proof::skipped_all(&reason));
                checks.push(check(CORE_CUT_CONCLUSION, CheckStatus::Skipped, reason));
            }
            Ok(()) => {
                checks.extend(proof::proof_steps(group, options.table_cap));
                if let Some(cut) = run(CORE_CUT_CONCLUSION, &mut checks, || {
                    Ok(is_cut_group(p_core(group, 3)?.group())?.is_cut)
                }) {
                    let status = if cut {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    };
                    checks.push(check(
                        CORE_CUT_CONCLUSION,
                        status,
                        format!("O_3(G) cut: {cut}"),
                    ));
                }
            }
        }
    }

    if suite.includes(Suite::Equivalence) {
        if group.order() > options.table_cap {
            let reason = format!(
                "order {} exceeds the table cap {}",
                group.order(),
                options.table_cap
            );
            checks.push(check(CRITERIA_AGREE, CheckStatus::Skipped, reason.clone()));
            checks.push(check(ORACLE_AGREES, CheckStatus::Skipped, reason));
        } else {
            if let Some((by_classes, by_chars)) = run(CRITERIA_AGREE, &mut checks, || {
                verify_equivalence(group, options.table_cap)
            }) {
                let by_chars = by_chars.expect("within the cap");
                record.is_cut_by_characters = Some(by_chars);
                let status = if by_classes == by_chars {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                };
                checks.push(check(
                    CRITERIA_AGREE,
                    status,
                    format!("conjugacy criterion {by_classes}, character criterion {by_chars}"),
                ));
            }
            if let Some(brute) = run(ORACLE_AGREES, &mut checks, || {
                Ok(brute_force_cut(group.generators(), group.degree()).is_cut)
            }) {
                let status = if record.is_cut == Some(brute) {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                };
                checks.push(check(
                    ORACLE_AGREES,
                    status,
                    format!("class-based {:?}, brute force {brute}", record.is_cut),
                ));
            }
        }
    }

    record.checks = checks;
    if options.include_timings {
        record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    record
}

/// Verifies every entry, in parallel when `options.jobs != 1`; records keep
/// the corpus order.
pub fn verify_corpus(
    entries: &[CorpusEntry],
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let records = pool.install(|| {
        entries
            .par_iter()
            .map(|e| verify_group(&e.name, Some(e.family.to_string()), &e.group, options))
            .collect()
    });
    Ok(VerificationReport::from_records(
        options.suite,
        options.table_cap,
        records,
    ))
}

/// Structure summary and cut verdicts of a single group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub exponent: u64,
    pub class_count: usize,
    pub is_abelian: bool,
    pub odd_order: bool,
    pub is_cut: bool,
    pub is_rational: bool,
    /// Least failing `k` of the first failing class.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
    pub center_order: u64,
    pub sylow3: SubgroupVerdict,
    pub core3: SubgroupVerdict,
    pub order_shape: String,
    pub verdict: RationalityVerdict,
}

pub fn analyze(name: &str, group: &PermGroup) -> Result<Analysis> {
    let verdict = is_cut_group(group)?;
    let (sylow3, core3) = verify_theorem(group)?;
    let classes = group.classes()?;
    Ok(Analysis {
        name: name.to_string(),
        order: group.order() as u64,
        degree: group.degree(),
        exponent: classes.exponent(),
        class_count: classes.len(),
        is_abelian: group.is_abelian(),
        odd_order: group.order() % 2 == 1,
        is_cut: verdict.is_cut,
        is_rational: verdict.is_rational,
        witness: verdict.first_failure().and_then(|c| c.witness),
        center_order: center(group)?.order() as u64,
        sylow3,
        core3,
        order_shape: if p_part(group.order(), 2) == 1 {
            OrderShape::of(group.order()).label().to_string()
        } else {
            "even".to_string()
        },
        verdict,
    })
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: order {}, degree {}, exponent {}, {} classes{}\n",
            self.name,
            self.order,
            self.degree,
            self.exponent,
            self.class_count,
            if self.is_abelian { ", abelian" } else { "" }
        );
        out.push_str(&format!("is_cut: {}", self.is_cut));
        if let Some(k) = self.witness {
            out.push_str(&format!(" (witness k = {k})"));
        }
        out.push_str(&format!("\nis_rational: {}\n", self.is_rational));
        out.push_str(&format!("center order: {}\n", self.center_order));
        out.push_str(&format!(
            "Sylow 3-subgroup: order {}, cut {}\nO_3: order {}, cut {}\norder shape: {}\n",
            self.sylow3.order,
            self.sylow3.is_cut,
            self.core3.order,
            self.core3.is_cut,
            self.order_shape
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, cyclic, frobenius_3_7a};

    fn opts(suite: Suite) -> VerifyOptions {
        VerifyOptions {
            suite,
            jobs: 1,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn c3_passes_theorem() {
        let r = verify_group("c3", None, &cyclic(3).unwrap(), &opts(Suite::Theorem));
        assert_eq!(r.check(SYLOW3_CUT).unwrap().status, CheckStatus::Pass);
        assert_eq!(r.check(CORE3_CUT).unwrap().status, CheckStatus::Pass);
        assert_eq!(
            r.sylow3,
            Some(SubgroupVerdict {
                order: 3,
                is_cut: true
            })
        );
    }

    #[test]
    fn c9_is_skipped() {
        let r = verify_group("c9", None, &cyclic(9).unwrap(), &opts(Suite::Theorem));
        let c = r.check(SYLOW3_CUT).unwrap();
        assert_eq!(c.status, CheckStatus::Skipped);
        assert!(c.detail.contains("not cut"));
    }

    #[test]
    fn order_21_trichotomy() {
        let r = verify_group("f21", None, &frobenius_3_7a(1).unwrap(), &opts(Suite::All));
        assert_eq!(r.failures().count(), 0, "{:?}", r.checks);
        assert_eq!(r.shape.as_deref(), Some("3*7^a"));
        assert_eq!(
            r.core3,
            Some(SubgroupVerdict {
                order: 1,
                is_cut: true
            })
        );
        assert_eq!(r.is_cut_by_characters, Some(true));
    }

    #[test]
    fn shapes() {
        assert_eq!(OrderShape::of(1), OrderShape::ThreeGroup);
        assert_eq!(OrderShape::of(21), OrderShape::ThreeTimesSevenPower);
        assert_eq!(OrderShape::of(147), OrderShape::ThreeTimesSevenPower);
        assert_eq!(OrderShape::of(63), OrderShape::SevenTimesThreePower);
        assert_eq!(OrderShape::of(15), OrderShape::Other);
    }

    #[test]
    fn even_order_is_skipped() {
        let s3 = builtin("s3").unwrap();
        let r = verify_group("s3", None, &s3.group, &opts(Suite::Theorem));
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Skipped));
    }

    #[test]
    fn analyze_c9_witness() {
        let a = analyze("c9", &cyclic(9).unwrap()).unwrap();
        assert!(!a.is_cut);
        assert_eq!(a.witness, Some(2));
    }

    #[test]
    fn suite_parsing() {
        for s in ["theorem", "trichotomy", "proof", "equivalence", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
