use std::collections::{BTreeMap, BTreeSet};

use kschur_mn::actions::{act_bounded, Representation};
use kschur_mn::correspondences::{BoundedPartition, GeneratorWord};
use kschur_mn::hookwords::{all_words, classify};
use kschur_mn::mnrule::{build_word_set, candidate_mus, check_instance, oracle_expand, Instance, Variant};

/// Weak hook words of length `r` grouped by their image of `lambda`.
fn brute_word_sets(lambda: &BoundedPartition, r: usize, rep: Representation) -> BTreeMap<BoundedPartition, BTreeSet<GeneratorWord>> {
    let mut out: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
    for w in all_words(lambda.k(), r) {
        if classify(&w).is_none() {
            continue;
        }
        if let Some(mu) = act_bounded(&w, lambda, rep) {
            out.entry(mu).or_default().insert(w);
        }
    }
    out
}

#[test]
fn word_sets_match_brute_force() {
    let mut failures = Vec::new();
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                for (variant, rep) in [(Variant::K, Representation::Star), (Variant::S, Representation::Dot)] {
                    let brute = brute_word_sets(&lambda, r, rep);
                    for mu in candidate_mus(&lambda, r, variant) {
                        let built = build_word_set(&lambda, &mu, r, rep).words;
                        let expected = brute.get(&mu).cloned().unwrap_or_default();
                        if built != expected {
                            failures.push(format!("k={k} r={r} {rep} lambda=({lambda}) mu=({mu}) built={built:?} brute={expected:?}"));
                        }
                    }
                }
            }
        }
    }
    for f in failures.iter().take(30) {
        eprintln!("{f}");
    }
    assert!(failures.is_empty(), "{} mismatches", failures.len());
}

#[test]
fn rule_matches_oracle() {
    let mut failures = Vec::new();
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                for variant in [Variant::K, Variant::S] {
                    let inst = Instance { lambda: lambda.clone(), r, variant };
                    if let Some(m) = check_instance(&inst).unwrap() {
                        failures.push(m.to_string());
                    }
                }
            }
        }
    }
    for f in failures.iter().take(30) {
        eprintln!("{f}");
    }
    assert!(failures.is_empty(), "{} mismatches", failures.len());
}

#[test]
fn nonzero_oracle_terms_pass_filters() {
    let mut failures = Vec::new();
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                for variant in [Variant::K, Variant::S] {
                    let cands: BTreeSet<_> = candidate_mus(&lambda, r, variant).into_iter().map(|m| m.into_shape()).collect();
                    for mu in oracle_expand(&lambda, r, variant).unwrap().terms.keys() {
                        if !cands.contains(mu) {
                            failures.push(format!("k={k} r={r} {variant} lambda=({lambda}) mu=({mu})"));
                        }
                    }
                }
            }
        }
    }
    for f in failures.iter().take(30) {
        eprintln!("{f}");
    }
    assert!(failures.is_empty(), "{} mismatches", failures.len());
}

fn bp(parts: &[usize], k: usize) -> BoundedPartition {
    BoundedPartition::new(kschur_mn::Partition::new(parts.to_vec()).unwrap(), k).unwrap()
}

fn word(k: usize, letters: &[usize]) -> GeneratorWord {
    GeneratorWord::new(k, letters.to_vec()).unwrap()
}

fn cells(list: &[(usize, usize)]) -> BTreeSet<kschur_mn::Cell> {
    list.iter().map(|&(r, c)| kschur_mn::Cell::new(r, c)).collect()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[test]
fn worked_star_set_trace() {
    let build = build_word_set(&bp(&[4, 2, 1, 1], 4), &bp(&[4, 2, 2, 1, 1, 1], 4), 4, Representation::Star);
    assert_eq!(build.pre_must_down_cell, cells(&[(3, 3)]));
    assert_eq!(build.must_down_residue, set(&[0]));
    assert_eq!(build.must_down_cell, cells(&[(6, 1), (3, 3)]));
    assert_eq!(build.pre_must_up_cell, cells(&[(5, 1), (2, 3)]));
    assert_eq!(build.must_up_residue, set(&[1]));
    assert_eq!(build.must_up_cell, cells(&[(5, 1), (2, 3), (1, 7)]));
    assert_eq!(build.up_or_down_residue, set(&[4]));

    let with_four: Vec<_> = build.branches.iter().filter(|b| b.up_choice == set(&[4])).collect();
    assert_eq!(with_four.len(), 3);
    for b in &with_four {
        assert_eq!(b.up_residues, set(&[1, 4]));
        assert_eq!(b.absorb_residue_up, set(&[2]));
        assert_eq!(b.down_residues, set(&[0]));
        assert_eq!(b.absorb_residue_down, set(&[4, 1]));
    }
    let expected: BTreeSet<_> = [word(4, &[1, 0, 4, 1]), word(4, &[0, 4, 4, 1]), word(4, &[0, 4, 1, 2])].into();
    assert_eq!(build.words, expected);
}

#[test]
fn worked_dot_sets() {
    let lambda = bp(&[4, 2, 1, 1], 4);
    assert_eq!(
        kschur_mn::mnrule::build_dot_set(&lambda, &bp(&[4, 2, 2, 2, 2], 4), 4),
        BTreeSet::from([word(4, &[2, 1, 3, 4])])
    );
    assert!(kschur_mn::mnrule::build_dot_set(&lambda, &bp(&[4, 2, 2, 1, 1, 1], 4), 4).is_empty());
}

#[test]
fn worked_candidates() {
    let lambda = bp(&[4, 2, 1, 1], 4);
    let k_cands = candidate_mus(&lambda, 4, Variant::K);
    let s_cands = candidate_mus(&lambda, 4, Variant::S);
    assert!(k_cands.contains(&bp(&[4, 2, 2, 1, 1, 1], 4)));
    assert!(s_cands.contains(&bp(&[4, 2, 2, 2, 2], 4)));
    assert!(!s_cands.contains(&bp(&[4, 2, 2, 1, 1, 1], 4)));
    for mu in &s_cands {
        assert!(k_cands.contains(mu));
    }
}

#[test]
fn generic_engine_specializes() {
    use kschur_mn::mnrule::{generic_expand, mn_expand};
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 5) {
            for r in 1..=k {
                let star = generic_expand(&lambda, r, Representation::Star, |r, mu, la| {
                    if (r + mu.size() - la.size()) % 2 == 0 { 1 } else { -1 }
                })
                .unwrap();
                assert_eq!(star, mn_expand(&lambda, r, Variant::K).unwrap().terms);
                let dot = generic_expand(&lambda, r, Representation::Dot, |_, _, _| 1).unwrap();
                assert_eq!(dot, mn_expand(&lambda, r, Variant::S).unwrap().terms);
            }
        }
    }
}

#[test]
fn generic_engine_with_unit_weight() {
    use kschur_mn::mnrule::{census_weight, generic_expand};
    // direct evaluation of the census sums with every weight equal to one
    for k in 1..=3 {
        for lambda in BoundedPartition::all_up_to(k, 4) {
            for r in 1..=k {
                let mut expected: BTreeMap<kschur_mn::Partition, i64> = BTreeMap::new();
                for w in all_words(k, r) {
                    let Some(class) = classify(&w) else { continue };
                    if let Some(mu) = act_bounded(&w, &lambda, Representation::Star) {
                        *expected.entry(mu.into_shape()).or_default() += census_weight(&class, r);
                    }
                }
                expected.retain(|_, c| *c != 0);
                assert_eq!(generic_expand(&lambda, r, Representation::Star, |_, _, _| 1).unwrap(), expected);
            }
        }
    }
}

#[test]
fn s_variant_degenerates_to_single_words() {
    use kschur_mn::mnrule::{build_dot_set, mn_expand};
    use kschur_mn::shapes::skew;
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                let exp = mn_expand(&lambda, r, Variant::S).unwrap();
                for mu in candidate_mus(&lambda, r, Variant::S) {
                    let words = build_dot_set(&lambda, &mu, r);
                    if words.is_empty() {
                        continue;
                    }
                    assert_eq!(words.len(), 1);
                    let ht = skew(mu.shape(), lambda.shape(), k + 1).unwrap().height();
                    let sign = if ht.is_multiple_of(2) { 1 } else { -1 };
                    assert_eq!(exp.coefficient(mu.shape()), sign);
                    let asc = classify(words.iter().next().unwrap()).unwrap().asc;
                    assert_eq!(asc, ht);
                }
            }
        }
    }
}

#[test]
fn height_is_bounded_by_ascents() {
    use kschur_mn::shapes::skew;
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                for mu in candidate_mus(&lambda, r, Variant::K) {
                    let ht = skew(mu.shape(), lambda.shape(), k + 1).unwrap().height();
                    for w in build_word_set(&lambda, &mu, r, Representation::Star).words {
                        let c = classify(&w).unwrap();
                        assert!(ht <= c.asc, "{w:?} ht={ht}");
                    }
                }
            }
        }
    }
}

#[test]
fn expansion_keys_have_expected_sizes() {
    use kschur_mn::mnrule::mn_expand;
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                for (mu, _) in mn_expand(&lambda, r, Variant::S).unwrap().terms {
                    assert_eq!(mu.size(), lambda.size() + r);
                }
                for (mu, _) in mn_expand(&lambda, r, Variant::K).unwrap().terms {
                    assert!(mu.size() >= lambda.size() && mu.size() <= lambda.size() + r);
                    assert!(mu.contains(lambda.shape()));
                }
            }
        }
    }
}

/// Border strips with sign `(-1)^height`, the classical rule for Schur functions.
fn classical(lambda: &kschur_mn::Partition, r: usize) -> BTreeMap<kschur_mn::Partition, i64> {
    use kschur_mn::shapes::skew;
    kschur_mn::Partition::all_of_size(lambda.size() + r)
        .into_iter()
        .filter(|mu| mu.contains(lambda))
        .filter_map(|mu| {
            let s = skew(&mu, lambda, 2).unwrap();
            let connected = {
                let cells = s.cells();
                let set: BTreeSet<_> = cells.iter().copied().collect();
                let mut seen = BTreeSet::from([cells[0]]);
                let mut stack = vec![cells[0]];
                while let Some(c) = stack.pop() {
                    for n in [(c.row + 1, c.col), (c.row, c.col + 1), (c.row.wrapping_sub(1), c.col), (c.row, c.col.wrapping_sub(1))] {
                        let n = kschur_mn::Cell::new(n.0, n.1);
                        if set.contains(&n) && seen.insert(n) {
                            stack.push(n);
                        }
                    }
                }
                seen.len() == cells.len()
            };
            (s.is_ribbon() && connected).then(|| {
                let rows = s.cells().iter().map(|c| c.row).collect::<BTreeSet<_>>().len();
                (mu, if (rows - 1) % 2 == 0 { 1 } else { -1 })
            })
        })
        .collect()
}

#[test]
fn large_k_recovers_classical_rule() {
    use kschur_mn::mnrule::mn_expand;
    for size in 0..=4 {
        for shape in kschur_mn::Partition::all_of_size(size) {
            for r in 1..=3 {
                let k = size + r;
                let lambda = BoundedPartition::new(shape.clone(), k).unwrap();
                assert_eq!(mn_expand(&lambda, r, Variant::S).unwrap().terms, classical(&shape, r), "({shape}) r={r}");
            }
        }
    }
}

#[test]
fn power_sum_small_cases() {
    use kschur_mn::mnrule::{power_sum_terms, raw_power_sum};
    let p1 = power_sum_terms(4, 1).unwrap();
    assert_eq!(p1.len(), 5);
    assert!((0..=4).all(|i| p1.weight(&word(4, &[i])) == 1));

    let p4 = power_sum_terms(4, 4).unwrap();
    assert_eq!(p4.weight(&word(4, &[0, 4, 1, 2])), 1);
    assert_eq!(p4.weight(&word(4, &[1, 0, 4, 1])), -1);
    assert_eq!(p4.weight(&word(4, &[0, 4, 4, 1])), 2);

    for k in 1..=3 {
        for r in 1..=k {
            let clean = power_sum_terms(k, r).unwrap();
            let raw = raw_power_sum(k, r).unwrap();
            for core in kschur_mn::Core::all_up_to(k, 10) {
                for rep in [Representation::Star, Representation::Dot] {
                    assert_eq!(clean.act_on(&core, rep), raw.act_on(&core, rep), "k={k} r={r} {core:?}");
                }
            }
        }
    }
    assert!(power_sum_terms(2, 3).is_err());
    assert!(power_sum_terms(2, 0).is_err());
}

#[test]
fn pieri_degree_one_is_the_oracle() {
    use kschur_mn::actions::pieri_h;
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            let oracle = oracle_expand(&lambda, 1, Variant::S).unwrap().terms;
            assert_eq!(oracle, pieri_h(1, &lambda, Representation::Dot).unwrap());
        }
    }
}
