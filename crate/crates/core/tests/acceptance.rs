//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{corpus, Grid};
use reduct_core::reduct::{core_attributes, eliminate, exhaustive_reducts, DEFAULT_MAX_ATTRS};
use reduct_core::significance::{rank_attributes, significance};
use reduct_core::topology::{
    attribute_base, base_alg1, compose_bases, family_equal, minimal_neighborhoods, subbase_of,
};
use reduct_core::{builtin_seven_segment, GroupPolicy, ObjectSet, Rational, SetFamily};

const CORPUS_SEED: u64 = 0x5eed_2011;
const CORPUS_SIZE: usize = 250;

const ALL: [&str; 7] = ["a", "b", "c", "d", "e", "f", "g"];

fn family(n: usize, sets: &[&[usize]]) -> SetFamily {
    SetFamily::new(
        n,
        sets.iter()
            .map(|s| ObjectSet::from_indices(n, s.iter().copied()).unwrap()),
    )
}

fn ten_singletons() -> SetFamily {
    SetFamily::new(10, (0..10).map(|x| ObjectSet::singleton(10, x)))
}

fn random_corpus(max_objects: usize) -> Vec<Grid> {
    corpus(CORPUS_SEED, CORPUS_SIZE, max_objects, 7)
}

fn table3_reproduction() {
    let start = Instant::now();
    let is = builtin_seven_segment();
    let r = |n| Rational::new(n, 10);
    let expected = [
        ("c", r(0)),
        ("d", r(0)),
        ("a", r(2)),
        ("f", r(2)),
        ("g", r(2)),
        ("b", r(4)),
        ("e", r(4)),
    ];
    for (name, value) in expected {
        assert_eq!(significance(&is, name).unwrap(), value, "attribute {name}");
    }
    let table = rank_attributes(&is);
    let got: Vec<(&str, Rational)> = table
        .ranked()
        .iter()
        .map(|a| (a.name.as_str(), a.significance))
        .collect();
    assert_eq!(got, expected);
    assert!(start.elapsed() < Duration::from_secs(1));
}

fn base_g_reproduction() {
    let is = builtin_seven_segment();
    let s = subbase_of(&is, &ALL).unwrap();
    assert_eq!(s.len(), 14);
    assert_eq!(minimal_neighborhoods(&s).unwrap(), ten_singletons());
    assert_eq!(base_alg1(&s).unwrap(), ten_singletons());
}

fn intermediate_bases() {
    let is = builtin_seven_segment();
    let g1 = attribute_base(&is, &["d", "a", "f", "g"]).unwrap();
    let g2 = attribute_base(&is, &["b", "e"]).unwrap();
    assert_eq!(
        g1,
        family(10, &[&[0], &[1], &[2, 3], &[4], &[7], &[5, 6, 8, 9]])
    );
    assert_eq!(g2, family(10, &[&[0, 2, 8], &[5], &[6], &[1, 3, 4, 7, 9]]));
    assert_eq!(compose_bases(&g1, &g2).unwrap(), ten_singletons());
}

fn reduct_reproduction() {
    let r = eliminate(&builtin_seven_segment(), GroupPolicy::default());
    assert_eq!(r.reduct, ["a", "b", "e", "f", "g"]);
    assert_eq!(r.removed, ["c", "d"]);
    assert!(r.verified_minimal);
}

fn oracle_equivalence() {
    let start = Instant::now();
    let tables = random_corpus(10);
    assert!(tables.len() >= 200);
    for (i, g) in tables.iter().enumerate() {
        let is = g.to_system();
        let r = eliminate(&is, GroupPolicy::default());
        let all = exhaustive_reducts(&is, DEFAULT_MAX_ATTRS).unwrap();
        assert!(
            all.contains(&r.reduct),
            "table {i}: {:?} not in {:?}",
            r.reduct,
            all
        );
        // independent check against the raw grid
        let names = g.names();
        let idx: Vec<usize> = r
            .reduct
            .iter()
            .map(|n| names.iter().position(|m| m == n).unwrap())
            .collect();
        assert!(
            g.reducts().contains(&idx),
            "table {i}: grid oracle disagrees"
        );
    }
    assert!(start.elapsed() < Duration::from_secs(30));
}

fn method_agreement() {
    let tables = random_corpus(12);
    assert!(tables.len() >= 200);
    for (i, g) in tables.iter().enumerate() {
        let is = g.to_system();
        let names = g.names();
        let s = subbase_of(&is, &names).unwrap();
        assert!(
            family_equal(&base_alg1(&s).unwrap(), &minimal_neighborhoods(&s).unwrap()).unwrap(),
            "table {i}: base_alg1 vs minimal_neighborhoods"
        );
        let full = attribute_base(&is, &names).unwrap();
        let m = names.len();
        for mask in 0u32..(1 << m) {
            let pick = |want: bool| -> Vec<&str> {
                (0..m)
                    .filter(|&b| (mask >> b & 1 == 1) == want)
                    .map(|b| names[b].as_str())
                    .collect()
            };
            let g1 = attribute_base(&is, &pick(true)).unwrap();
            let g2 = attribute_base(&is, &pick(false)).unwrap();
            assert!(
                family_equal(&compose_bases(&g1, &g2).unwrap(), &full).unwrap(),
                "table {i}: split {mask:b}"
            );
        }
    }
}

fn core_significance_consistency() {
    let mut mismatched = Vec::new();
    let mut mismatched_without_duplicates = 0;
    let tables = random_corpus(10);
    for (i, g) in tables.iter().enumerate() {
        let is = g.to_system();
        let positive: Vec<String> = rank_attributes(&is)
            .ranked()
            .iter()
            .filter(|a| !a.significance.is_zero())
            .map(|a| a.name.clone())
            .collect();
        let all = exhaustive_reducts(&is, DEFAULT_MAX_ATTRS).unwrap();
        for r in &all {
            assert!(positive.iter().all(|p| r.contains(p)), "table {i}");
        }
        let core = core_attributes(&is);
        assert!(positive.iter().all(|p| core.contains(p)), "table {i}");
        let mut positive = positive;
        let mut core = core;
        core.sort();
        positive.sort();
        if core != positive {
            mismatched.push(i);
            let mut rows = g.rows.clone();
            rows.sort();
            rows.dedup();
            if rows.len() == g.rows.len() {
                mismatched_without_duplicates += 1;
            }
        }
    }
    println!(
        "    core != {{a : sig(a) > 0}} on {} of {} tables ({} of them without duplicate rows)",
        mismatched.len(),
        tables.len(),
        mismatched_without_duplicates
    );
    assert!(mismatched.is_empty(), "tables {mismatched:?}");
}

fn grouping_invariance() {
    for (i, g) in random_corpus(10).iter().enumerate() {
        let is = g.to_system();
        let m = is.num_conditional();
        let reference = eliminate(&is, GroupPolicy::default()).reduct;
        for policy in [
            GroupPolicy::Count(0),
            GroupPolicy::Count(m.div_ceil(2)),
            GroupPolicy::Count(m),
        ] {
            assert_eq!(
                eliminate(&is, policy).reduct,
                reference,
                "table {i}, {policy:?}"
            );
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 8] = [
        (
            "1 seven-segment significance ranking reproduced exactly",
            table3_reproduction,
        ),
        (
            "2 base G is the ten singletons (both methods)",
            base_g_reproduction,
        ),
        (
            "3 intermediate bases G1, G2 and their composition",
            intermediate_bases,
        ),
        (
            "4 reduct {a,b,e,f,g}, removal order [c, d]",
            reduct_reproduction,
        ),
        (
            "5 elimination output is an enumerated reduct",
            oracle_equivalence,
        ),
        (
            "6 matrix method and split composition agree",
            method_agreement,
        ),
        (
            "7 positive significance equals the core",
            core_significance_consistency,
        ),
        (
            "8 grouping policy never changes the reduct",
            grouping_invariance,
        ),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        println!(
            "[{}] {name} ({} ms)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_millis()
        );
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
