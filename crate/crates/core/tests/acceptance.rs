//! Release gate. Each test covers one numbered criterion, prints a single
//! PASS/FAIL line, and fails loudly on any deviation. All expected values
//! are exact; they are pinned as literals right where they are checked.

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cayley_aut::autsearch::{automorphism_group, brute_force_automorphisms};
use cayley_aut::cayley::{
    build_cayley, family_generators, left_regular_embed, mbs_generators, right_regular_embed,
    CayleyGraph, Family,
};
use cayley_aut::group::PermGroup;
use cayley_aut::perm::{factorial, Perm};
use cayley_aut::tgraph::{
    build_transposition_graph, small_graph_automorphisms, TranspositionSet,
};
use cayley_aut::verify::{
    is_normal_cayley, verify_lambda_automorphisms, verify_mbs_theorem,
    verify_unique_factorization, DecompositionReport,
};

/// Prints the criterion verdict line, then fails the test if anything broke.
fn gate(id: &str, started: Instant, failures: Vec<String>) {
    let elapsed = started.elapsed().as_secs_f64();
    if failures.is_empty() {
        println!("criterion {id}: PASS ({elapsed:.1}s)");
    } else {
        println!("criterion {id}: FAIL ({elapsed:.1}s) {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "criterion {id}: {}", failures.join("; "));
}

macro_rules! check {
    ($failures:expr, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            $failures.push(format!($($msg)+));
        }
    };
}

fn mbs_cayley(n: usize) -> CayleyGraph {
    build_cayley(n, &mbs_generators(n).unwrap()).unwrap()
}

fn family_cayley(family: Family, n: usize) -> CayleyGraph {
    build_cayley(n, &family_generators(family, n).unwrap()).unwrap()
}

fn check_direct_product_report(
    failures: &mut Vec<String>,
    r: &DecompositionReport,
    aut: &str,
    r_ord: &str,
    l_ord: u64,
) {
    let tag = format!("n={} {:?}", r.n, r.family);
    check!(failures, r.aut_order == aut, "{tag}: aut_order {} != {aut}", r.aut_order);
    check!(failures, r.r_order == r_ord, "{tag}: r_order {} != {r_ord}", r.r_order);
    check!(failures, r.l_order == l_ord, "{tag}: l_order {} != {l_ord}", r.l_order);
    check!(failures, r.lambda_all_automorphisms, "{tag}: lambda flag false");
    check!(failures, r.r_normal_in_aut, "{tag}: R not normal");
    check!(failures, r.l_normal_in_aut, "{tag}: lambda image not normal");
    check!(failures, r.intersection_trivial, "{tag}: intersection not trivial");
    check!(failures, r.orders_multiply, "{tag}: orders do not multiply");
    check!(failures, r.is_direct_product, "{tag}: not a direct product");
}

#[test]
fn criterion_1_cycle_family_n5() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let r = verify_mbs_theorem(5).expect("pipeline at n=5");
    check_direct_product_report(&mut failures, &r, "1200", "120", 10);
    check!(&mut failures, r.dihedral_m == Some(5), "dihedral_m {:?} != Some(5)", r.dihedral_m);
    gate("1 (cycle family, n=5)", started, failures);
}

#[test]
fn criterion_2_cycle_family_n6() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let r = verify_mbs_theorem(6).expect("pipeline at n=6");
    check_direct_product_report(&mut failures, &r, "8640", "720", 12);
    check!(&mut failures, r.dihedral_m == Some(6), "dihedral_m {:?} != Some(6)", r.dihedral_m);
    gate("2 (cycle family, n=6)", started, failures);
}

#[test]
fn criterion_2_stretch_cycle_family_n7() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let r = verify_mbs_theorem(7).expect("pipeline at n=7");
    check_direct_product_report(&mut failures, &r, "70560", "5040", 14);
    check!(&mut failures, r.dihedral_m == Some(7), "dihedral_m {:?} != Some(7)", r.dihedral_m);
    gate("2-stretch (cycle family, n=7)", started, failures);
}

#[test]
fn criterion_3_small_n_nonnormal() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let x3 = mbs_cayley(3);
    let x4 = mbs_cayley(4);
    check!(&mut failures, !is_normal_cayley(&x3).unwrap(), "n=3 reported normal");
    check!(&mut failures, !is_normal_cayley(&x4).unwrap(), "n=4 reported normal");

    let engine3 = automorphism_group(x3.graph()).unwrap().order();
    let oracle3 = brute_force_automorphisms(x3.graph()).unwrap().order();
    check!(&mut failures, engine3 == BigUint::from(72u32), "n=3 engine order {engine3} != 72");
    check!(&mut failures, oracle3 == BigUint::from(72u32), "n=3 oracle order {oracle3} != 72");

    // The n = 4 order is deliberately measured, not hard-coded: the claim is
    // only that engine and oracle agree and that the group is strictly
    // bigger than |S_4| x |Aut(C_4)| = 24 * 8 = 192.
    let engine4 = automorphism_group(x4.graph()).unwrap().order();
    let oracle4 = brute_force_automorphisms(x4.graph()).unwrap().order();
    check!(&mut failures, engine4 == oracle4, "n=4 engine {engine4} != oracle {oracle4}");
    check!(&mut failures, engine4 > BigUint::from(192u32), "n=4 order {engine4} not > 192");

    gate("3 (non-normal below n=5)", started, failures);
}

#[test]
fn criterion_4_tree_and_star_direct_products() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for (family, aut, l_ord) in [(Family::Bubble, "48", 2), (Family::Star, "144", 6)] {
        let x = family_cayley(family, 4);
        let r = cayley_aut::verify::verify_direct_product(&x).unwrap();
        check_direct_product_report(&mut failures, &r, aut, "24", l_ord);
        let engine = automorphism_group(x.graph()).unwrap().order();
        let oracle = brute_force_automorphisms(x.graph()).unwrap().order();
        check!(&mut failures, engine.to_string() == aut, "{family}: engine {engine} != {aut}");
        check!(&mut failures, oracle.to_string() == aut, "{family}: oracle {oracle} != {aut}");
    }

    gate("4 (path and star at n=4)", started, failures);
}

/// Transposition sets exercised by the corpus-wide criteria: paths, stars
/// and cycles for n = 3..7 plus two girth-5 unicyclic graphs.
fn corpus() -> Vec<TranspositionSet> {
    let mut sets = Vec::new();
    for n in 3..=7 {
        sets.push(family_generators(Family::Bubble, n).unwrap());
        sets.push(family_generators(Family::Star, n).unwrap());
        sets.push(mbs_generators(n).unwrap());
    }
    sets.push(TranspositionSet::parse("(1,2),(2,3),(3,4),(4,5),(5,1),(1,6)", 6).unwrap());
    sets.push(TranspositionSet::parse("(1,2),(2,3),(3,4),(4,5),(5,1),(2,6),(6,7)", 7).unwrap());
    sets
}

#[test]
fn criterion_5_lifted_point_symmetries_preserve_edges() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for set in corpus() {
        let t = build_transposition_graph(&set);
        let aut_t = small_graph_automorphisms(&t).unwrap();
        let x = build_cayley(set.n(), &set).unwrap();
        check!(
            &mut failures,
            verify_lambda_automorphisms(&x, &aut_t),
            "lift fails for {set} (n={})",
            set.n()
        );
    }

    gate("5 (lifted symmetries on the corpus)", started, failures);
}

#[test]
fn criterion_6_embedding_laws_random_trials() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(611);

    for trial in 0..1000u32 {
        let n = 3 + (trial as usize % 3);
        let a = Perm::unrank(rng.gen_range(0..factorial(n)), n);
        let b = Perm::unrank(rng.gen_range(0..factorial(n)), n);
        let ra = right_regular_embed(&a, n);
        let rb = right_regular_embed(&b, n);
        let la = left_regular_embed(&a, n);
        let lb = left_regular_embed(&b, n);

        check!(
            &mut failures,
            ra.compose(&rb) == right_regular_embed(&a.compose(&b), n),
            "trial {trial}: R(a)R(b) != R(ab) for a={a} b={b} n={n}"
        );
        check!(
            &mut failures,
            la.compose(&lb) == left_regular_embed(&a.compose(&b), n),
            "trial {trial}: L(a)L(b) != L(ab) for a={a} b={b} n={n}"
        );
        check!(
            &mut failures,
            ra.compose(&lb) == lb.compose(&ra),
            "trial {trial}: R(a) and L(b) do not commute for a={a} b={b} n={n}"
        );

        let i = rng.gen_range(0..n);
        let j = loop {
            let j = rng.gen_range(0..n);
            if j != i {
                break j;
            }
        };
        let lhs = Perm::transposition(n, i, j).conjugate(&a);
        let rhs = Perm::transposition(n, a.apply(i), a.apply(j));
        check!(
            &mut failures,
            lhs == rhs,
            "trial {trial}: conjugate(({},{}),{a}) = {lhs} != {rhs}",
            i + 1,
            j + 1
        );

        if failures.len() > 5 {
            break;
        }
    }

    // Whole-group fact, once per degree: the two embedded copies of the
    // symmetric group share only the identity.
    for n in 3..=5 {
        let gens = mbs_generators(n).unwrap().as_perms();
        let right = PermGroup::from_generators(
            gens.iter().map(|s| right_regular_embed(s, n)).collect(),
        )
        .unwrap();
        let left = PermGroup::from_generators(
            gens.iter().map(|s| left_regular_embed(s, n)).collect(),
        )
        .unwrap();
        check!(&mut failures, right.order() == BigUint::from(factorial(n)), "|R image| wrong at n={n}");
        check!(&mut failures, left.order() == BigUint::from(factorial(n)), "|L image| wrong at n={n}");
        check!(
            &mut failures,
            right.intersection_is_trivial(&left).unwrap(),
            "embedded images intersect nontrivially at n={n}"
        );
    }

    gate("6 (embedding laws, 1000 trials)", started, failures);
}

#[test]
fn criterion_7_engine_matches_oracle_on_corpus() {
    let started = Instant::now();
    let mut failures = Vec::new();

    // Every corpus point graph, and every corpus Cayley graph small enough
    // for the oracle (n <= 4, i.e. at most 24 of the 40 allowed vertices).
    let mut graphs = Vec::new();
    for set in corpus() {
        graphs.push((format!("T({set})"), build_transposition_graph(&set).graph().clone()));
        if factorial(set.n()) <= 40 {
            graphs.push((format!("Cay({set})"), build_cayley(set.n(), &set).unwrap().graph().clone()));
        }
    }

    for (name, g) in graphs {
        let engine = automorphism_group(&g).unwrap();
        let oracle = brute_force_automorphisms(&g).unwrap();
        check!(
            &mut failures,
            engine.order() == oracle.order(),
            "{name}: engine {} != oracle {}",
            engine.order(),
            oracle.order()
        );
        let engine_in_oracle = engine.generators().iter().all(|p| oracle.contains(p));
        let oracle_in_engine = oracle.generators().iter().all(|p| engine.contains(p));
        check!(&mut failures, engine_in_oracle, "{name}: engine generator outside oracle group");
        check!(&mut failures, oracle_in_engine, "{name}: oracle generator outside engine group");
    }

    gate("7 (engine vs oracle)", started, failures);
}

#[test]
fn criterion_8_group_engine_sanity() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for n in 3..=7 {
        let g = PermGroup::from_generators(mbs_generators(n).unwrap().as_perms()).unwrap();
        check!(
            &mut failures,
            g.order() == BigUint::from(factorial(n)),
            "cycle-set generators at n={n} give order {} != {}",
            g.order(),
            factorial(n)
        );
        if n <= 6 {
            check!(&mut failures, g.center_is_trivial().unwrap(), "center not trivial at n={n}");
        }
    }

    for n in 3..=8usize {
        let t = build_transposition_graph(&mbs_generators(n).unwrap());
        let aut = small_graph_automorphisms(&t).unwrap();
        let m = aut.recognize_dihedral().unwrap();
        check!(&mut failures, m == Some(n as u64), "Aut(C_{n}) recognized as {m:?}, want Some({n})");
    }

    gate("8 (group engine sanity)", started, failures);
}

#[test]
fn criterion_9_unique_factorization() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for (n, seed) in [(5usize, 95u64), (6, 96)] {
        let x = mbs_cayley(n);
        check!(
            &mut failures,
            verify_unique_factorization(&x, 50, seed).unwrap(),
            "some automorphism at n={n} lacks a unique R(a)*L(b) factorization"
        );
    }

    gate("9 (unique factorization)", started, failures);
}
