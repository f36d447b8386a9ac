//! Acceptance criteria, one pass/fail line each.
//!
//! `cargo test -p cutgroups --test acceptance` prints the report. All
//! comparisons are exact; the only tolerances are the wall-clock limits
//! below.

use std::io::Write;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use cutgroups::arith::{is_power_of, prime_factors, units};
use cutgroups::chartable::{
    character_cut_criterion, character_table, field_of_values, inner_product, Cyclotomic,
};
use cutgroups::corpus::{builtin, default_corpus, CorpusEntry};
use cutgroups::cut::is_cut_group;
use cutgroups::oracle::{brute_force_cut, least_cut_witness};
use cutgroups::verify::{proof, verify_corpus, verify_group, CheckStatus, Suite, VerifyOptions};

const TABLE_CAP: u128 = 2000;
const THEOREM_LIMIT: Duration = Duration::from_secs(60);
const EQUIVALENCE_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_LIMIT: Duration = Duration::from_secs(30);
const PROOF_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_corpus() -> Vec<CorpusEntry> {
    default_corpus(Some(TABLE_CAP)).unwrap()
}

fn theorem_instances() -> Outcome {
    let corpus = default_corpus(None).map_err(|e| e.to_string())?;
    let options = VerifyOptions {
        suite: Suite::Theorem,
        ..VerifyOptions::default()
    };
    let report = verify_corpus(&corpus, &options).map_err(|e| e.to_string())?;
    let mut instances = 0;
    for (r, e) in report.records.iter().zip(&corpus) {
        let cut = is_cut_group(&e.group).map_err(|e| e.to_string())?.is_cut;
        ensure(r.is_cut == Some(cut), || {
            format!("{}: cut verdict missing", r.name)
        })?;
        if !(e.odd_order() && cut) {
            continue;
        }
        instances += 1;
        for name in ["sylow3-cut", "core3-cut"] {
            let status = r.check(name).map(|c| c.status);
            ensure(status == Some(CheckStatus::Pass), || {
                format!("{}: {name} {status:?}", r.name)
            })?;
        }
    }
    ensure(report.summary.failed == 0, || {
        format!("{} failed checks", report.summary.failed)
    })?;
    for required in ["c3", "heisenberg27", "frobenius21", "frobenius147"] {
        let r = report
            .record(required)
            .ok_or(format!("{required} missing"))?;
        ensure(
            r.check("sylow3-cut").map(|c| c.status) == Some(CheckStatus::Pass),
            || format!("{required} not verified"),
        )?;
    }
    let df = report
        .record("double_frobenius_15309")
        .ok_or("order-15309 group missing")?;
    Ok(format!(
        "{instances} odd-order cut groups, zero failures; order-15309 group cut: {}",
        df.is_cut.map_or("unknown".into(), |c| c.to_string())
    ))
}

fn criterion_equivalence() -> Outcome {
    let corpus = small_corpus();
    ensure(corpus.len() >= 12, || {
        format!("only {} groups", corpus.len())
    })?;
    for e in &corpus {
        let by_classes = is_cut_group(&e.group).map_err(|x| x.to_string())?.is_cut;
        let table = character_table(&e.group).map_err(|x| x.to_string())?;
        let by_chars = character_cut_criterion(&table).map_err(|x| x.to_string())?;
        ensure(by_classes == by_chars, || {
            format!("{}: classes {by_classes}, characters {by_chars}", e.name)
        })?;
    }
    Ok(format!("{} groups agree", corpus.len()))
}

fn oracle_equivalence() -> Outcome {
    let corpus = small_corpus();
    for e in &corpus {
        let fast = is_cut_group(&e.group).map_err(|x| x.to_string())?.is_cut;
        let slow = brute_force_cut(e.group.generators(), e.group.degree()).is_cut;
        ensure(fast == slow, || {
            format!("{}: class-based {fast}, brute force {slow}", e.name)
        })?;
    }
    Ok(format!("{} groups agree", corpus.len()))
}

fn table_exactness() -> Outcome {
    let one = Ratio::from_integer(1);
    let zero = Ratio::from_integer(0);
    let corpus = small_corpus();
    for e in &corpus {
        let t = character_table(&e.group).map_err(|x| x.to_string())?;
        let chars = t.characters();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = inner_product(a, b).map_err(|x| x.to_string())?;
                ensure(ip == if i == j { one } else { zero }, || {
                    format!("{}: rows {i},{j} give {ip}", e.name)
                })?;
            }
        }
        let classes = t.classes();
        let exp = t.exponent();
        for c in 0..t.len() {
            for d in 0..t.len() {
                let mut sum = Cyclotomic::zero(exp);
                for chi in chars {
                    sum = &sum + &(chi.value(c) * &chi.value(d).conj());
                }
                let expected = if c == d {
                    classes.centralizer_order(c) as i64
                } else {
                    0
                };
                ensure(sum == Cyclotomic::from_integer(exp, expected), || {
                    format!("{}: columns {c},{d} give {sum}", e.name)
                })?;
            }
        }
        let degrees: i64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(degrees as u128 == e.group.order(), || {
            format!("{}: sum of squares {degrees}", e.name)
        })?;
    }

    let c3 = character_table(&builtin("c3").unwrap().group).map_err(|x| x.to_string())?;
    let z = |k| Cyclotomic::root_of_unity(3, k);
    let expected = [[z(0), z(0), z(0)], [z(0), z(1), z(2)], [z(0), z(2), z(1)]];
    for (row, want) in c3.characters().iter().zip(&expected) {
        ensure(row.values() == want, || format!("C3 row {row}"))?;
    }

    let f21 = character_table(&builtin("frobenius21").unwrap().group).map_err(|x| x.to_string())?;
    ensure(f21.degrees() == [1, 1, 1, 3, 3], || {
        format!("order-21 degrees {:?}", f21.degrees())
    })?;
    for chi in &f21.characters()[3..] {
        let f = field_of_values(chi).map_err(|x| x.to_string())?;
        ensure(f.degree == 2 && !f.is_real, || {
            format!("order-21 field {f:?}")
        })?;
    }
    Ok(format!(
        "{} tables exact; C3 and order-21 tables as expected",
        corpus.len()
    ))
}

fn three_group_fields() -> Outcome {
    let mut groups = 0;
    let mut characters = 0;
    for e in small_corpus() {
        let g = &e.group;
        if g.order() == 1 || !is_power_of(g.order(), 3) {
            continue;
        }
        if !is_cut_group(g).map_err(|x| x.to_string())?.is_cut {
            continue;
        }
        groups += 1;
        let t = character_table(g).map_err(|x| x.to_string())?;
        let fixing: Vec<u64> = units(t.exponent())
            .into_iter()
            .filter(|k| k % 3 == 1)
            .collect();
        for chi in t.characters().iter().filter(|c| !c.is_rational_valued()) {
            let f = field_of_values(chi).map_err(|x| x.to_string())?;
            ensure(
                f.degree == 2 && !f.is_real && f.stabilizer == fixing,
                || format!("{}: character {chi} has field {f:?}", e.name),
            )?;
            characters += 1;
        }
    }
    Ok(format!(
        "{characters} non-rational characters over {groups} cut 3-groups"
    ))
}

fn proof_steps() -> Outcome {
    let e = builtin("double_frobenius_15309").map_err(|x| x.to_string())?;
    let options = VerifyOptions {
        suite: Suite::Proof,
        jobs: 1,
        ..VerifyOptions::default()
    };
    let r = verify_group(&e.name, None, &e.group, &options);
    for name in [proof::MINIMAL_NORMAL_CENTRAL, proof::INERTIA_TRICHOTOMY] {
        let c = r.check(name).ok_or(format!("{name} missing"))?;
        ensure(c.status == CheckStatus::Pass, || {
            format!("{name}: {:?} {}", c.status, c.detail)
        })?;
    }
    let inertia = r.check(proof::INERTIA_TRICHOTOMY).unwrap();
    ensure(inertia.detail.starts_with("728 nontrivial"), || {
        inertia.detail.clone()
    })?;
    let statuses: Vec<String> = proof::PROOF_STEPS
        .iter()
        .map(|n| {
            format!(
                "{n}={}",
                r.check(n)
                    .map_or("missing".into(), |c| c.status.to_string())
            )
        })
        .collect();
    Ok(statuses.join(" "))
}

fn allowed_shape(order: u128) -> bool {
    let primes = prime_factors(order as u64);
    let v = |p: u64| {
        let (mut n, mut k) = (order, 0);
        while n % p as u128 == 0 {
            n /= p as u128;
            k += 1;
        }
        k
    };
    match primes.as_slice() {
        [] | [3] => true,
        [3, 7] => v(3) == 1 || v(7) == 1,
        _ => false,
    }
}

fn trichotomy_audit() -> Outcome {
    let corpus = default_corpus(None).map_err(|e| e.to_string())?;
    let mut cut = 0;
    for e in corpus.iter().filter(|e| e.odd_order()) {
        if is_cut_group(&e.group).map_err(|x| x.to_string())?.is_cut {
            cut += 1;
            ensure(allowed_shape(e.group.order()), || {
                format!("{} of order {} is cut", e.name, e.group.order())
            })?;
        }
    }
    let odd = corpus.iter().filter(|e| e.odd_order()).count();
    Ok(format!(
        "{cut} of {odd} odd-order groups cut, all of allowed order shape"
    ))
}

fn negative_controls() -> Outcome {
    let mut out = Vec::new();
    for (name, forced) in [("c7", 2), ("c9", 2), ("ea7_1", 2)] {
        let e = builtin(name).map_err(|x| x.to_string())?;
        let g = &e.group;
        let v = is_cut_group(g).map_err(|x| x.to_string())?;
        ensure(!v.is_cut, || format!("{name} reported cut"))?;
        let fail = v
            .first_failure()
            .ok_or(format!("{name}: no failing class"))?;
        let table = g.classes().map_err(|x| x.to_string())?;
        let rep = &table.class(fail.class).representative;
        let oracle = least_cut_witness(g.generators(), g.degree(), rep);
        ensure(fail.witness == oracle && oracle == Some(forced), || {
            format!("{name}: witness {:?}, oracle {oracle:?}", fail.witness)
        })?;
        out.push(format!("{name} k={forced}"));
    }
    Ok(out.join(", "))
}

const CRITERIA: [Criterion; 8] = [
    Criterion {
        id: "theorem-instances",
        limit: Some(THEOREM_LIMIT),
        run: theorem_instances,
    },
    Criterion {
        id: "criterion-equivalence",
        limit: Some(EQUIVALENCE_LIMIT),
        run: criterion_equivalence,
    },
    Criterion {
        id: "oracle-equivalence",
        limit: Some(ORACLE_LIMIT),
        run: oracle_equivalence,
    },
    Criterion {
        id: "table-exactness",
        limit: None,
        run: table_exactness,
    },
    Criterion {
        id: "three-group-fields",
        limit: None,
        run: three_group_fields,
    },
    Criterion {
        id: "proof-steps-15309",
        limit: Some(PROOF_LIMIT),
        run: proof_steps,
    },
    Criterion {
        id: "trichotomy-audit",
        limit: None,
        run: trichotomy_audit,
    },
    Criterion {
        id: "negative-controls",
        limit: None,
        run: negative_controls,
    },
];

/// Straight to the stdout handle, so the lines survive libtest's capture.
fn report(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        let limit = c.limit.map_or(String::new(), |l| format!(" (limit {l:?})"));
        match &outcome {
            Ok(detail) => report(&format!("PASS {} [{elapsed:.2?}{limit}] {detail}", c.id)),
            Err(why) => {
                report(&format!("FAIL {} [{elapsed:.2?}{limit}] {why}", c.id));
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
