//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kschur_mn::actions::{act, subsets_of_size, CyclicInterval, Representation};
use kschur_mn::correspondences::{
    bounded_of_core, core_of_bounded, core_of_word, k_conjugate, word_of_bounded, BoundedPartition, GeneratorWord,
};
use kschur_mn::hookwords::{
    anti_left_side_len, anti_to_hook, classify, eg_tableau, enumerate, hook_rewrite, right_side_len, tau,
    Connectivity, HookClassification, HookFilter, HookType, Side,
};
use kschur_mn::mnrule::{build_dot_set, build_star_set, candidate_mus, mn_expand, oracle_expand, Variant};
use kschur_mn::shapes::{skew, Cell, Core, Partition};

type Check = Result<(), String>;

fn bp(parts: &[usize], k: usize) -> BoundedPartition {
    BoundedPartition::new(Partition::new(parts.to_vec()).unwrap(), k).unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn word(k: usize, letters: &[usize]) -> GeneratorWord {
    GeneratorWord::new(k, letters.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coefficient_k() -> Check {
    let e = mn_expand(&bp(&[4, 2, 1, 1], 4), 4, Variant::K).map_err(|e| e.to_string())?;
    let c = e.coefficient(&p(&[4, 2, 2, 1, 1, 1]));
    ensure(c == -2, || format!("coefficient at (4,2,2,1,1,1) is {c}, expected -2"))
}

fn star_set() -> Check {
    let got = build_star_set(&bp(&[4, 2, 1, 1], 4), &bp(&[4, 2, 2, 1, 1, 1], 4), 4);
    let expected: BTreeSet<_> = [word(4, &[1, 0, 4, 1]), word(4, &[0, 4, 4, 1]), word(4, &[0, 4, 1, 2])].into();
    ensure(got == expected, || format!("got {got:?}"))
}

fn coefficient_s() -> Check {
    let lambda = bp(&[4, 2, 1, 1], 4);
    let e = mn_expand(&lambda, 4, Variant::S).map_err(|e| e.to_string())?;
    let c = e.coefficient(&p(&[4, 2, 2, 2, 2]));
    ensure(c == 1, || format!("coefficient at (4,2,2,2,2) is {c}"))?;
    ensure(!e.terms.contains_key(&p(&[4, 2, 2, 1, 1, 1])), || "(4,2,2,1,1,1) present".into())?;
    let empty = build_dot_set(&lambda, &bp(&[4, 2, 2, 1, 1, 1], 4), 4);
    ensure(empty.is_empty(), || format!("dot set for (4,2,2,1,1,1) is {empty:?}"))?;
    let single = build_dot_set(&lambda, &bp(&[4, 2, 2, 2, 2], 4), 4);
    ensure(single == BTreeSet::from([word(4, &[2, 1, 3, 4])]), || format!("dot set for (4,2,2,2,2) is {single:?}"))
}

fn bijection_fixtures() -> Check {
    let lambda = bp(&[4, 2, 1, 1], 4);
    let w = word_of_bounded(&lambda);
    ensure(w == word(4, &[2, 3, 0, 4, 3, 2, 1, 0]), || format!("word {w}"))?;
    let core = core_of_word(&w);
    ensure(*core.shape() == p(&[6, 2, 1, 1]), || format!("core {core}"))?;
    ensure(core_of_bounded(&lambda) == core, || "core_of_bounded differs".into())?;
    ensure(bounded_of_core(&core) == lambda, || "bounded_of_core differs".into())?;
    let conj = k_conjugate(&lambda);
    ensure(conj == bp(&[3, 1, 1, 1, 1, 1], 4), || format!("k-conjugate {conj}"))?;
    let cells = |xs: &[(usize, usize)]| xs.iter().map(|&(r, c)| Cell::new(r, c)).collect::<BTreeSet<_>>();
    let removable: BTreeSet<_> = core.shape().removable_corners().into_iter().collect();
    ensure(removable == cells(&[(4, 1), (2, 2), (1, 6)]), || format!("removable {removable:?}"))?;
    let addable: BTreeSet<_> = core.shape().addable_corners().into_iter().collect();
    ensure(addable == cells(&[(5, 1), (3, 2), (2, 3), (1, 7)]), || format!("addable {addable:?}"))
}

fn eg_fixture() -> Check {
    let order = CyclicInterval::new(&BTreeSet::from([1, 2, 4, 5]), 6).map_err(|e| e.to_string())?;
    let t = eg_tableau(&[2, 4, 5, 4, 1], &order);
    ensure(t.rows() == [vec![1, 4, 5], vec![2], vec![5]], || format!("tableau {t}"))?;
    ensure(t.reading_word() == vec![5, 2, 1, 4, 5], || format!("reading word {:?}", t.reading_word()))?;
    let x = word(6, &[2, 4, 5, 5, 4, 2, 1]);
    let bar = anti_to_hook(&x, Representation::Star).map_err(|e| e.to_string())?;
    ensure(bar == word(6, &[5, 2, 1, 4, 5]), || format!("anti_to_hook gave {bar}"))?;
    let (left, right) = (anti_left_side_len(&x), right_side_len(&bar));
    ensure(left == Some(3) && right == Some(3), || format!("side lengths {left:?} {right:?}"))
}

fn grid() -> Vec<(BoundedPartition, usize)> {
    let mut out = Vec::new();
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 6) {
            for r in 1..=k {
                out.push((lambda.clone(), r));
            }
        }
    }
    out
}

fn rule_oracle_equivalence() -> Check {
    let mut count = 0;
    for (lambda, r) in grid() {
        for variant in [Variant::K, Variant::S] {
            let rule = mn_expand(&lambda, r, variant).map_err(|e| e.to_string())?;
            let oracle = oracle_expand(&lambda, r, variant).map_err(|e| e.to_string())?;
            ensure(rule.terms == oracle.terms, || {
                format!("k={} r={r} {variant} ({lambda}): rule {:?} oracle {:?}", lambda.k(), rule.terms, oracle.terms)
            })?;
            count += 1;
        }
    }
    println!("    {count} instances compared");
    Ok(())
}

fn cancellation_lemma() -> Check {
    for k in 1..=4 {
        let cores = Core::all_up_to(k, 12);
        for r in 1..=k {
            let words = enumerate(k, r, &HookFilter::default());
            // partition law: each (type, asc) class splits into wc, left, right
            for kind in [HookType::V, HookType::U] {
                for asc in 0..r {
                    let in_class = |c: &HookClassification| c.hook_type == kind && c.asc == asc;
                    let total = words.iter().filter(|(_, c)| in_class(c)).count();
                    let wc = words.iter().filter(|(_, c)| in_class(c) && c.connectivity.is_weak_connected()).count();
                    let side = |s| words.iter().filter(|(_, c)| in_class(c) && !c.connectivity.is_weak_connected() && c.side == Some(s)).count();
                    ensure(total == wc + side(Side::Left) + side(Side::Right), || {
                        format!("partition law fails for k={k} r={r} {kind:?} asc={asc}")
                    })?;
                }
            }
            let mut image = BTreeSet::new();
            for (w, c) in &words {
                // emptiness
                let bad = (c.side == Some(Side::Right) && c.asc == 0)
                    || (c.hook_type == HookType::V && c.side == Some(Side::Left) && c.asc + 1 == r)
                    || (c.hook_type == HookType::U && c.side == Some(Side::Left) && c.asc + 2 == r);
                ensure(!bad, || format!("{w} lies in a class that must be empty ({c})"))?;
                if c.connectivity != Connectivity::Disconnected {
                    continue;
                }
                let t = tau(w).map_err(|e| e.to_string())?;
                let tc = classify(&t).ok_or_else(|| format!("tau({w}) = {t} is not a hook word"))?;
                let expected_asc = match c.side {
                    Some(Side::Right) => c.asc.checked_sub(1),
                    _ => Some(c.asc + 1),
                };
                ensure(
                    tc.connectivity == Connectivity::Disconnected
                        && tc.hook_type == c.hook_type
                        && tc.side.is_some()
                        && tc.side != c.side
                        && Some(tc.asc) == expected_asc,
                    || format!("tau({w}) = {t} has class {tc}"),
                )?;
                ensure(tau(&t).ok().as_ref() == Some(w), || format!("tau is not an involution at {w}"))?;
                ensure(image.insert(t.clone()), || format!("tau is not injective at {w}"))?;
                for core in &cores {
                    for rep in [Representation::Star, Representation::Dot] {
                        ensure(act(w, core, rep) == act(&t, core, rep), || {
                            format!("tau changes the {rep} action of {w} on {core}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn hook_product_identity() -> Check {
    for k in 1..=4 {
        for r in 1..=k {
            let words = enumerate(k, r, &HookFilter::default());
            for i in 0..=r {
                let mut lhs: BTreeMap<GeneratorWord, usize> = BTreeMap::new();
                for a in subsets_of_size(k + 1, r - i) {
                    for b in subsets_of_size(k + 1, i) {
                        let w = hook_rewrite(k, &a, &b).map_err(|e| e.to_string())?;
                        *lhs.entry(w).or_default() += 1;
                    }
                }
                let mut rhs: BTreeMap<GeneratorWord, usize> = BTreeMap::new();
                for (w, c) in &words {
                    let hits = match c.hook_type {
                        HookType::V => usize::from(c.asc == i) + usize::from(c.asc + 1 == i),
                        HookType::U => usize::from(c.asc + 1 == i),
                    };
                    if hits > 0 {
                        *rhs.entry(w.clone()).or_default() += hits;
                    }
                }
                ensure(lhs == rhs, || format!("multisets differ at k={k} r={r} i={i}"))?;
            }
        }
    }
    Ok(())
}

fn degeneration() -> Check {
    for (lambda, r) in grid() {
        let k = lambda.k();
        let e = mn_expand(&lambda, r, Variant::S).map_err(|e| e.to_string())?;
        for mu in candidate_mus(&lambda, r, Variant::S) {
            let words = build_dot_set(&lambda, &mu, r);
            if words.is_empty() {
                continue;
            }
            let ht = skew(mu.shape(), lambda.shape(), k + 1).map_err(|e| e.to_string())?.height();
            let sign = if ht % 2 == 0 { 1 } else { -1 };
            ensure(words.len() == 1, || format!("k={k} r={r} ({lambda}) -> ({mu}): {} words", words.len()))?;
            ensure(e.coefficient(mu.shape()) == sign, || {
                format!("k={k} r={r} ({lambda}) -> ({mu}): coefficient {} height {ht}", e.coefficient(mu.shape()))
            })?;
        }
    }
    Ok(())
}

fn roundtrips() -> Check {
    for k in 1..=4 {
        for lambda in BoundedPartition::all_up_to(k, 10) {
            let back = bounded_of_core(&core_of_word(&word_of_bounded(&lambda)));
            ensure(back == lambda, || format!("k={k}: ({lambda}) came back as ({back})"))?;
            ensure(k_conjugate(&k_conjugate(&lambda)) == lambda, || format!("k-conjugate of ({lambda})"))?;
            ensure(lambda.shape().conjugate().conjugate() == *lambda.shape(), || format!("conjugate of ({lambda})"))?;
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        ("K coefficient of the worked example is -2", coefficient_k, secs(1)),
        ("star word set of the worked example", star_set, secs(1)),
        ("S coefficient and dot word sets of the worked example", coefficient_s, secs(1)),
        ("bijection fixtures", bijection_fixtures, secs(1)),
        ("Edelman-Greene and anti-hook fixtures", eg_fixture, secs(1)),
        ("rule equals oracle for k<=4, |lambda|<=6, K and S", rule_oracle_equivalence, secs(300)),
        ("cancellation lemma: partition law, tau, emptiness", cancellation_lemma, secs(120)),
        ("h_{r-i} e_i hook-word multiset identity", hook_product_identity, secs(60)),
        ("S degeneration: single word, sign (-1)^height", degeneration, secs(300)),
        ("roundtrips and involutions for k<=4, |lambda|<=10", roundtrips, secs(60)),
    ];
    let mut failed = 0;
    for (n, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {msg}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
