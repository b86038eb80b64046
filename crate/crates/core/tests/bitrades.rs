mod common;

use std::collections::BTreeSet;

use bitrade::group::IndexedGroup;
use bitrade::latin::{
    beta_maps, examples, from_json, from_perms, roundtrip_check, separation_violation, tau_perms, to_json, Bitrade,
    Role, TauTriple,
};
use bitrade::properties::{
    group_orthogonal_criterion, group_thin_criterion, minimal_oracle, orthogonal_violation, primary_oracle,
    tau_orbits, thin_primary_implies_minimal_check, thin_violation, OracleOutcome, TpmCheck,
};
use common::*;
use proptest::prelude::*;

#[test]
fn corpus_is_large_enough() {
    assert!(group_corpus().len() >= 100);
}

#[test]
fn shape_counts() {
    for (input, b) in group_corpus() {
        let g = &input.group;
        let n = g.order().unwrap() as usize;
        let ord = [&input.a, &input.b, &input.c].map(|x| g.order_of(x) as usize);
        assert_eq!(b.size(), n);
        for (k, role) in Role::ALL.into_iter().enumerate() {
            let counts = b.circ().counts(role);
            assert_eq!(counts.len(), n / ord[k]);
            assert!(counts.iter().all(|&c| c == ord[k]));
        }
    }
}

#[test]
fn criteria_agree_with_scans() {
    for (input, b) in group_corpus() {
        assert_eq!(thin_violation(&b).is_none(), group_thin_criterion(&input).0);
        assert_eq!(orthogonal_violation(&b).is_none(), group_orthogonal_criterion(&input));
    }
}

#[test]
fn unique_intersection_gives_the_same_square() {
    // (gA, gB, gC) in T∘ exactly when g₁A ∩ g₂B ∩ g₃C is a single element.
    for (input, b) in group_corpus().into_iter().filter(|(i, _)| i.group.order().unwrap() <= 200) {
        let g = &input.group;
        let [ha, hb, hc] = [&input.a, &input.b, &input.c].map(|x| g.generated_subgroup(x));
        let (ca, cb, cc) = (g.left_cosets(&ha).unwrap(), g.left_cosets(&hb).unwrap(), g.left_cosets(&hc).unwrap());
        let mut found = BTreeSet::new();
        for x in &ca {
            for y in &cb {
                for z in &cc {
                    let n = x.elements().iter().filter(|e| y.contains(e) && z.contains(e)).count();
                    if n == 1 {
                        found.insert([format!("A:{}", x.rep()), format!("B:{}", y.rep()), format!("C:{}", z.rep())]);
                    }
                }
            }
        }
        let built: BTreeSet<[String; 3]> = b.circ().label_triples().into_iter().collect();
        assert_eq!(found, built);
    }
}

#[test]
fn right_translations_give_the_same_bitrade() {
    for (input, b) in group_corpus() {
        let ig = IndexedGroup::new(&input.group).unwrap();
        let tables = [&input.a, &input.b, &input.c].map(|x| ig.right_mul_table(x).unwrap());
        let via_perms = from_perms(&TauTriple::new(tables).unwrap()).unwrap();
        // Cycles are labelled by their smallest point, cosets by their
        // smallest element; both name the same element.
        let prefix = [("r", "A:"), ("c", "B:"), ("s", "C:")];
        let maps: [Vec<(String, String)>; 3] = [0, 1, 2].map(|k| {
            via_perms
                .alphabets()
                .get(Role::ALL[k])
                .iter()
                .map(|l| {
                    let idx: u32 = l[1..].parse().unwrap();
                    (l.clone(), format!("{}{}", prefix[k].1, ig.element(idx - 1)))
                })
                .collect()
        });
        let renamed = via_perms.relabeled([&maps[0], &maps[1], &maps[2]]).unwrap();
        assert_eq!(renamed, b);
    }
}

#[test]
fn tau_round_trip_over_the_corpus() {
    let mut all: Vec<Bitrade> = group_corpus().into_iter().map(|(_, b)| b).collect();
    all.extend(example_corpus());
    for b in all {
        let tau = tau_perms(&b).unwrap();
        let rebuilt = from_perms(&tau).unwrap();
        assert_eq!(rebuilt.size(), b.size());
        if separation_violation(&b, &tau).is_none() {
            assert!(roundtrip_check(&b).unwrap().holds);
        } else {
            assert!(roundtrip_check(&b).is_err());
        }
    }
}

#[test]
fn beta_maps_change_one_coordinate() {
    for b in example_corpus() {
        for (r, beta) in beta_maps(&b).iter().enumerate() {
            for (s, &c) in beta.iter().enumerate() {
                let (x, y) = (b.star().triples()[s], b.circ().triples()[c as usize]);
                let diff: Vec<usize> = (0..3).filter(|&k| x[k] != y[k]).collect();
                assert_eq!(diff, [r]);
            }
        }
    }
}

#[test]
fn orbit_method_agrees_with_subset_search() {
    let mut all: Vec<Bitrade> = group_corpus().into_iter().map(|(_, b)| b).filter(|b| b.size() <= 16).collect();
    all.extend(example_corpus());
    for b in all {
        let orbit_primary = tau_orbits(&tau_perms(&b).unwrap()).len() == 1;
        match primary_oracle(&b, 16) {
            OracleOutcome::Yes => assert!(orbit_primary),
            OracleOutcome::No(_) => assert!(!orbit_primary),
            OracleOutcome::Unknown => unreachable!(),
        }
    }
}

#[test]
fn thin_and_primary_imply_minimal() {
    let mut checked = 0;
    for (_, b) in group_corpus().into_iter().filter(|(_, b)| b.size() <= 24) {
        if thin_primary_implies_minimal_check(&b, 24).unwrap() == TpmCheck::Consistent {
            checked += 1;
        }
    }
    assert!(checked > 0);
    let two = examples::two_intercalates();
    let OracleOutcome::No(w) = minimal_oracle(two.circ(), 24) else { panic!("expected a smaller trade") };
    assert_eq!(w.len(), 4);
}

#[test]
fn json_round_trip_over_the_corpus() {
    for (_, b) in group_corpus() {
        let back = from_json(&to_json(&b)).unwrap();
        assert_eq!(back, b);
        assert_eq!(back.provenance(), b.provenance());
    }
}

proptest! {
    #[test]
    fn relabelling_preserves_properties(which in 0usize..4, seed in any::<u64>()) {
        let b = example_corpus().swap_remove(which);
        let mut rng = seed;
        let mut shuffle = |labels: &[String], tag: &str| {
            let mut v: Vec<(String, String)> =
                labels.iter().enumerate().map(|(i, l)| (l.clone(), format!("{tag}{i}"))).collect();
            for i in (1..v.len()).rev() {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (rng >> 33) as usize % (i + 1));
            }
            v
        };
        let alph = b.alphabets();
        let maps = [shuffle(&alph.rows, "x"), shuffle(&alph.cols, "y"), shuffle(&alph.syms, "z")];
        let c = b.relabeled([&maps[0], &maps[1], &maps[2]]).unwrap();
        prop_assert_eq!(c.size(), b.size());
        prop_assert_eq!(thin_violation(&c).is_none(), thin_violation(&b).is_none());
        prop_assert_eq!(orthogonal_violation(&c).is_none(), orthogonal_violation(&b).is_none());
        let (tb, tc) = (tau_perms(&b).unwrap(), tau_perms(&c).unwrap());
        prop_assert_eq!(tau_orbits(&tb).len(), tau_orbits(&tc).len());
        prop_assert_eq!(separation_violation(&b, &tb).is_none(), separation_violation(&c, &tc).is_none());
        prop_assert_eq!(from_json(&to_json(&c)).unwrap(), c);
    }

    #[test]
    fn tau_structure_of_corpus_triples(i in 0usize..10_000) {
        let corpus = group_corpus();
        let (_, b) = &corpus[i % corpus.len()];
        let tau = tau_perms(b).unwrap();
        for k in 0..3 {
            prop_assert_eq!(tau.cycles(k).len(), b.alphabets().get(Role::ALL[k]).len());
        }
    }
}
