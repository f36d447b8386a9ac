//! Corpus construction, structure, and group file round trips.

use std::collections::BTreeSet;

use proptest::prelude::*;

use cutgroups::arith::p_part;
use cutgroups::corpus::io::{group_to_json, load_fixture, parse_group};
use cutgroups::corpus::{builtin, builtin_names, default_corpus, Family};
use cutgroups::structure::{
    center, derived_subgroup, is_frobenius_with_kernel, normal_subgroups, p_core, quotient_group,
    sylow_subgroup, Subgroup,
};
use cutgroups::{PermGroup, Permutation};

#[test]
fn every_builtin_has_its_closed_form_order_and_family() {
    for name in builtin_names() {
        let e = builtin(name).unwrap();
        assert_eq!(e.group.order(), e.expected_order, "{name}");
        e.verify_family().unwrap();
        assert_eq!(e.odd_order(), e.family != Family::SanityEvenOrder, "{name}");
    }
}

#[test]
fn default_corpus_respects_max_order() {
    let small = default_corpus(Some(81)).unwrap();
    assert!(small.iter().all(|e| e.group.order() <= 81));
    assert!(small.len() < default_corpus(None).unwrap().len());
}

#[test]
fn aliases_resolve() {
    assert_eq!(builtin("order21").unwrap().name, "frobenius21");
    assert_eq!(builtin("f147").unwrap().group.order(), 147);
    assert!(builtin("no-such-group").is_err());
}

/// Invariants that separate the fifteen groups of order 81.
fn fingerprint(g: &PermGroup) -> String {
    let t = g.classes().unwrap();
    let mut classes: Vec<(u64, usize)> = t
        .classes()
        .iter()
        .map(|c| (c.element_order, c.size))
        .collect();
    classes.sort_unstable();
    let normal: Vec<u128> = normal_subgroups(g)
        .unwrap()
        .iter()
        .map(|n| n.order())
        .collect();
    let cubes = g
        .subgroup(t.elements().iter().map(|x| x.pow(3)).collect())
        .unwrap()
        .order();
    format!(
        "exp {} center {} derived {} cubes {} classes {classes:?} normal {normal:?}",
        t.exponent(),
        center(g).unwrap().order(),
        derived_subgroup(g).unwrap().order(),
        cubes,
    )
}

#[test]
fn all_fifteen_groups_of_order_81_are_present() {
    let groups: Vec<_> = default_corpus(None)
        .unwrap()
        .into_iter()
        .filter(|e| e.group.order() == 81)
        .collect();
    assert_eq!(groups.len(), 15);
    let prints: BTreeSet<String> = groups.iter().map(|e| fingerprint(&e.group)).collect();
    assert_eq!(prints.len(), 15);
}

#[test]
fn order_27_nonabelian_groups_are_extraspecial() {
    for name in ["heisenberg27", "extraspecial27_exp9"] {
        let g = builtin(name).unwrap().group;
        let z = center(&g).unwrap();
        let d = derived_subgroup(&g).unwrap();
        assert_eq!(z.order(), 3, "{name}");
        assert!(d.same_elements(&z), "{name}");
    }
}

#[test]
fn sylow_orders_and_coprime_index() {
    for e in default_corpus(Some(2000)).unwrap() {
        for p in [2, 3, 5, 7, 11] {
            let s = sylow_subgroup(&e.group, p).unwrap();
            assert_eq!(s.order(), p_part(e.group.order(), p), "{} p={p}", e.name);
            assert_ne!((e.group.order() / s.order()) % p as u128, 0);
        }
    }
}

#[test]
fn seven_times_three_power_structure() {
    for e in default_corpus(None).unwrap() {
        if e.family != Family::DoubleFrobenius73b {
            continue;
        }
        let g = &e.group;
        let o = p_core(g, 3).unwrap();
        let h = sylow_subgroup(g, 7).unwrap();
        let oh = g
            .subgroup(
                o.generators()
                    .iter()
                    .chain(h.generators())
                    .cloned()
                    .collect(),
            )
            .unwrap();
        let o_in_oh = Subgroup::of(&oh, o.group().clone()).unwrap();
        assert!(is_frobenius_with_kernel(&oh, &o_in_oh).unwrap());
        let q = quotient_group(g, &o).unwrap();
        assert_eq!(q.group().order(), 21);
        assert!(center(q.group()).unwrap().is_trivial());
    }
}

#[test]
fn quotient_projection_is_a_homomorphism_with_kernel_n() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for name in ["frobenius21", "heisenberg27", "c3wrc3", "c9xc3:c3", "s3"] {
        let g = builtin(name).unwrap().group;
        let elems = g.elements().unwrap();
        for n in normal_subgroups(&g).unwrap() {
            let q = quotient_group(&g, &n).unwrap();
            assert_eq!(q.group().order() * n.order(), g.order());
            for _ in 0..100 {
                let a = elems.get(rng.gen_range(0..elems.len()));
                let b = elems.get(rng.gen_range(0..elems.len()));
                let lhs = q.project(&(a * b)).unwrap();
                let rhs = &q.project(a).unwrap() * &q.project(b).unwrap();
                assert_eq!(lhs, rhs, "{name}");
            }
            for x in elems.iter() {
                assert_eq!(q.project(x).unwrap().is_identity(), n.contains(x), "{name}");
            }
        }
    }
}

#[test]
fn fixture_loads() {
    let g = load_fixture("order21").unwrap();
    assert_eq!(g.name, "order21");
    assert_eq!(g.group.order(), 21);
    assert!(g
        .group
        .same_elements(&builtin("frobenius21").unwrap().group));
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #[test]
    fn group_files_round_trip(
        gens in (1usize..9).prop_flat_map(|n| prop::collection::vec(permutation(n), 0..4))
    ) {
        let degree = gens.first().map_or(1, |g| g.degree());
        let g = PermGroup::from_generators(gens, degree).unwrap();
        let text = group_to_json("g", &g, Some("parent"));
        let back = parse_group(&text).unwrap();
        prop_assert_eq!(back.name, "g");
        prop_assert_eq!(back.parent.as_deref(), Some("parent"));
        prop_assert_eq!(back.group.generators(), g.generators());
        prop_assert!(back.group.same_elements(&g));
    }
}
