//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use common::{has_min_ordering, is_min_ordering, matrix_from_code, orders, rng, rotate};
use siginterval::biarc::{biarc_from_min_ordering, ordering_generated, realize_biarc};
use siginterval::generate::{
    bipartite_from_matrix, random_digraph, random_irreflexive_graph, random_matrix, random_reflexive_graph,
    random_symmetric, reflexive_corpus,
};
use siginterval::graph::{digraph_from_code, Digraph};
use siginterval::hom::{brute_force_hom, solve_list_hom, ListAssignment};
use siginterval::interval::{
    cott_from_min_ordering, cott_to_signed, realize_cott, realize_signed, signed_from_min_ordering, CoTTModel,
};
use siginterval::matrix::{
    augment, independent_kl_free, min_orderable, occurs_at, rotate_occurrence, search_independent, search_simultaneous,
    transform, BinaryMatrix, Pattern, Transform,
};
use siginterval::obstruction::{find_asteroidal_triple, find_invertible_pair, lekkerkerker_boland, IntervalVerdict};
use siginterval::ordering::{find_min_ordering, verify_min_ordering, verify_via_extrema, VertexOrdering};
use siginterval::rational::int;
use siginterval::rays::{min_ordering_from_rays, rays_from_signed, realize_rays};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn valid(h: &Digraph, ord: &VertexOrdering) -> bool {
    matches!(verify_min_ordering(h, ord), Ok(None))
}

fn c1_triple_equivalence() -> Outcome {
    let mut total = 0u64;
    let mut ordered = 0u64;
    for n in 1..=4usize {
        for code in 0..1u64 << (n * n) {
            let h = digraph_from_code(n, code);
            total += 1;
            let oracle = has_min_ordering(&h);
            match find_min_ordering(&h) {
                Some(ord) => {
                    ordered += 1;
                    ensure!(
                        oracle,
                        "n={n} code={code}: search returned an ordering the oracle rejects"
                    );
                    ensure!(
                        is_min_ordering(&h, ord.as_slice()),
                        "n={n} code={code}: ordering fails the definition"
                    );
                    let signed = signed_from_min_ordering(&h, &ord).map_err(|e| format!("n={n} code={code}: {e}"))?;
                    ensure!(
                        realize_signed(&signed) == h,
                        "n={n} code={code}: signed model realizes another digraph"
                    );
                    let biarc = biarc_from_min_ordering(&h, &ord).map_err(|e| format!("n={n} code={code}: {e}"))?;
                    ensure!(
                        realize_biarc(&biarc) == h,
                        "n={n} code={code}: bi-arc model realizes another digraph"
                    );
                    ensure!(
                        ordering_generated(&biarc).ok().as_ref() == Some(&ord),
                        "n={n} code={code}: bi-arc model generates another ordering"
                    );
                }
                None => {
                    ensure!(!oracle, "n={n} code={code}: search missed a min ordering");
                    let id = VertexOrdering::identity(n);
                    ensure!(
                        signed_from_min_ordering(&h, &id).is_err(),
                        "n={n} code={code}: signed construction accepted"
                    );
                    ensure!(
                        biarc_from_min_ordering(&h, &id).is_err(),
                        "n={n} code={code}: bi-arc construction accepted"
                    );
                }
            }
        }
    }
    Ok(format!("{total} digraphs, {ordered} with a min ordering"))
}

fn c2_extrema_agreement() -> Outcome {
    let mut r = rng(2);
    let mut pairs = 0u64;
    for n in 1..=4usize {
        for code in 0..1u64 << (n * n) {
            let h = digraph_from_code(n, code);
            let candidates: Vec<Vec<usize>> = if n <= 3 {
                orders(n).collect()
            } else {
                (0..10)
                    .map(|_| {
                        let mut p: Vec<usize> = (0..n).collect();
                        p.shuffle(&mut r);
                        p
                    })
                    .collect()
            };
            for p in candidates {
                let ord = VertexOrdering::new(p.clone()).map_err(|e| e.to_string())?;
                let direct = verify_min_ordering(&h, &ord).map_err(|e| e.to_string())?.is_none();
                let via = verify_via_extrema(&h, &ord).map_err(|e| e.to_string())?.is_none();
                let oracle = is_min_ordering(&h, &p);
                ensure!(
                    direct == via && via == oracle,
                    "n={n} code={code} order={p:?}: {direct} {via} {oracle}"
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (digraph, ordering) pairs, zero disagreements"))
}

fn c3_irreflexive_graphs() -> Outcome {
    let mut r = rng(3);
    let mut checked = 0;
    while checked < 1000 {
        let n = r.gen_range(2..=6);
        let density = r.gen_range(0.2..0.8);
        let g = random_irreflexive_graph(&mut r, n, density);
        if g.arc_count() == 0 {
            continue;
        }
        ensure!(
            find_min_ordering(&g).is_none(),
            "min ordering found for {:?}",
            g.arcs().collect::<Vec<_>>()
        );
        checked += 1;
    }
    Ok(format!("{checked} graphs, none with a min ordering"))
}

fn c4_reflexive_equivalence() -> Outcome {
    let mut r = rng(4);
    let mut graphs: Vec<(String, Digraph)> = reflexive_corpus();
    for i in 0..2000 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.2..0.8);
        graphs.push((format!("random #{i}"), random_reflexive_graph(&mut r, n, p)));
    }
    let mut interval = 0;
    let mut at_count = 0;
    for (name, h) in &graphs {
        let ordered = find_min_ordering(h).is_some();
        let lb = lekkerkerker_boland(h).map_err(|e| format!("{name}: {e}"))?;
        let lb_interval = matches!(lb, IntervalVerdict::Interval);
        let ip = find_invertible_pair(h).map_err(|e| format!("{name}: {e}"))?;
        if let Some(ip) = &ip {
            ensure!(ip.is_valid(h), "{name}: invalid invertible pair {ip:?}");
        }
        ensure!(
            ordered == lb_interval && lb_interval == ip.is_none(),
            "{name}: min ordering {ordered}, no forbidden structure {lb_interval}, no invertible pair {}",
            ip.is_none()
        );
        if let Some(at) = find_asteroidal_triple(h).map_err(|e| format!("{name}: {e}"))? {
            ensure!(at.is_valid(h), "{name}: invalid asteroidal triple {at:?}");
            ensure!(ip.is_some(), "{name}: asteroidal triple without an invertible pair");
            at_count += 1;
        }
        interval += usize::from(ordered);
    }
    Ok(format!(
        "{} graphs, {interval} interval, {at_count} with an asteroidal triple",
        graphs.len()
    ))
}

fn c5_cott() -> Outcome {
    let mut r = rng(5);
    let mut models = 0;
    for i in 0..2000 {
        let n = r.gen_range(1..=6);
        let density = r.gen_range(0.2..0.8);
        let h = random_symmetric(&mut r, n, density);
        let Some(ord) = find_min_ordering(&h) else { continue };
        let model = cott_from_min_ordering(&h, &ord).map_err(|e| format!("#{i}: {e}"))?;
        ensure!(realize_cott(&model) == h, "#{i}: co-TT model realizes another graph");
        ensure!(
            realize_signed(&cott_to_signed(&model)) == h,
            "#{i}: signed form of co-TT model differs"
        );
        models += 1;
    }
    for i in 0..2000 {
        let n = r.gen_range(1..=6);
        let pairs: Vec<(i64, i64)> = (0..n).map(|_| (r.gen_range(0..8), r.gen_range(0..8))).collect();
        let model = CoTTModel::from_pairs(&pairs);
        ensure!(
            realize_cott(&model) == realize_signed(&cott_to_signed(&model)),
            "random model #{i} {pairs:?}: signed form differs"
        );
    }
    Ok(format!(
        "{models} symmetric digraphs with a min ordering, 2000 random models"
    ))
}

fn check_bipartite(m: &BinaryMatrix) -> Result<bool, String> {
    let b = bipartite_from_matrix(m);
    let h = b.graph();
    let oracle = search_independent(m, &[Pattern::K, Pattern::L])
        .map_err(|e| e.to_string())?
        .is_some();
    match find_min_ordering(h) {
        Some(ord) => {
            ensure!(oracle, "{m:?}: ordering found but no independent K,L-free permutation");
            let signed = signed_from_min_ordering(h, &ord).map_err(|e| e.to_string())?;
            let rays = rays_from_signed(&b, &signed).map_err(|e| e.to_string())?;
            ensure!(
                realize_rays(&rays).graph() == h,
                "{m:?}: ray model realizes another digraph"
            );
            let back = min_ordering_from_rays(&rays).map_err(|e| e.to_string())?;
            ensure!(valid(h, &back), "{m:?}: ordering read from rays does not verify");
            Ok(true)
        }
        None => {
            ensure!(
                !oracle,
                "{m:?}: independent K,L-free permutation exists but no min ordering"
            );
            Ok(false)
        }
    }
}

fn c6_bipartite() -> Outcome {
    let mut count = 0;
    let mut ordered = 0;
    for k in 1..=3 {
        for l in 1..=3 {
            for code in 0..1u64 << (k * l) {
                ordered += usize::from(check_bipartite(&matrix_from_code(k, l, code))?);
                count += 1;
            }
        }
    }
    let mut r = rng(6);
    for _ in 0..2000 {
        let p = r.gen_range(0.2..0.8);
        ordered += usize::from(check_bipartite(&random_matrix(&mut r, 4, 4, p))?);
        count += 1;
    }
    let c6 = BinaryMatrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).map_err(|e| e.to_string())?;
    ensure!(
        independent_kl_free(&c6).is_none(),
        "6-cycle bi-adjacency became K,L-free"
    );
    ensure!(
        search_independent(&c6, &[Pattern::K, Pattern::L])
            .map_err(|e| e.to_string())?
            .is_none(),
        "brute force made the 6-cycle bi-adjacency K,L-free"
    );
    Ok(format!(
        "{count} bi-adjacency matrices, {ordered} with a ray model; 6-cycle: none"
    ))
}

fn check_square(m: &BinaryMatrix) -> Result<(), String> {
    let found = min_orderable(m).map_err(|e| e.to_string())?;
    let oracle = search_simultaneous(m, &[Pattern::K, Pattern::L]).map_err(|e| e.to_string())?;
    ensure!(
        found.is_some() == oracle.is_some(),
        "{m:?}: min_orderable {found:?}, brute force {oracle:?}"
    );
    if let Some(p) = found {
        let permuted = m.permuted(&p, &p);
        for pat in [Pattern::K, Pattern::L] {
            ensure!(
                siginterval::matrix::find_pattern(&permuted, pat).is_none(),
                "{m:?}: {pat:?} survives {p:?}"
            );
        }
    }
    Ok(())
}

fn c7_matrix_orderability() -> Outcome {
    let mut square = 0;
    for n in 1..=3 {
        for code in 0..1u64 << (n * n) {
            check_square(&matrix_from_code(n, n, code))?;
            square += 1;
        }
    }
    let mut r = rng(7);
    for _ in 0..10_000 {
        let p = r.gen_range(0.2..0.8);
        check_square(&random_matrix(&mut r, 4, 4, p))?;
        square += 1;
    }
    let mut rect = 0;
    for k in 1..=3 {
        for l in 1..=3 {
            for code in 0..1u64 << (k * l) {
                let m = matrix_from_code(k, l, code);
                let via_aug = independent_kl_free(&m);
                let direct = min_orderable(&augment(&m)).map_err(|e| e.to_string())?;
                let oracle = search_independent(&m, &[Pattern::K, Pattern::L]).map_err(|e| e.to_string())?;
                ensure!(
                    via_aug.is_some() == direct.is_some() && direct.is_some() == oracle.is_some(),
                    "{m:?}: independent {via_aug:?}, augmented {direct:?}, brute force {oracle:?}"
                );
                if let Some((rp, cp)) = via_aug {
                    let permuted = m.permuted(&rp, &cp);
                    ensure!(
                        siginterval::matrix::is_kl_free(&permuted),
                        "{m:?}: projection is not K,L-free"
                    );
                }
                rect += 1;
            }
        }
    }
    Ok(format!("{square} square matrices, {rect} rectangular matrices"))
}

fn c8_cott_example() -> Outcome {
    let model =
        CoTTModel::new(vec![int(1), int(3), int(7)], vec![int(8), int(10), int(2)]).map_err(|e| e.to_string())?;
    let h = realize_cott(&model);
    let (a, b, d) = (0, 1, 2);
    ensure!(h.has_arc(a, b) && h.has_arc(b, a), "ab missing");
    ensure!(h.has_arc(a, d) && h.has_arc(d, a), "ad missing");
    ensure!(!h.has_arc(b, d) && !h.has_arc(d, b), "bd present");
    ensure!(
        h.has_loop(a) && h.has_loop(b) && !h.has_loop(d),
        "loops differ from {{a, b}}"
    );
    Ok("edges {ab, ad}, non-edge bd, loops {a, b}".into())
}

fn c9_homomorphism() -> Outcome {
    let mut r = rng(9);
    let mut solvable = 0;
    let mut done = 0;
    while done < 1000 {
        let hn = r.gen_range(1..=4);
        let density = r.gen_range(0.2..0.8);
        let h = random_digraph(&mut r, hn, density);
        let Some(ord) = find_min_ordering(&h) else { continue };
        let gn = r.gen_range(1..=4);
        let density = r.gen_range(0.1..0.6);
        let g = random_digraph(&mut r, gn, density);
        let lists = if r.gen_bool(0.3) {
            ListAssignment::full(gn, hn)
        } else {
            let raw = (0..gn).map(|_| (0..hn).filter(|_| r.gen_bool(0.6)).collect()).collect();
            ListAssignment::new(raw, hn).map_err(|e| e.to_string())?
        };
        let fast = solve_list_hom(&g, &h, &ord, &lists).map_err(|e| format!("#{done}: {e}"))?;
        let slow = brute_force_hom(&g, &h, &lists).map_err(|e| format!("#{done}: {e}"))?;
        ensure!(
            fast.is_some() == slow.is_some(),
            "#{done}: solver {fast:?}, brute force {slow:?}"
        );
        for f in fast.iter().chain(slow.iter()) {
            ensure!(f.is_valid(&g, &h, Some(&lists)), "#{done}: {f:?} fails verification");
        }
        solvable += usize::from(fast.is_some());
        done += 1;
    }
    Ok(format!("{done} instances, {solvable} solvable"))
}

fn c10_pattern_algebra() -> Outcome {
    let rot = |p: Pattern| transform(&p.matrix(), Transform::Rotate180);
    ensure!(rot(Pattern::L) == Pattern::Gamma.matrix(), "rotate180(L) != Gamma");
    ensure!(rot(Pattern::K) == Pattern::K.matrix(), "rotate180(K) != K");
    ensure!(rot(Pattern::Id) == Pattern::Id.matrix(), "rotate180(ID) != ID");
    let mut r = rng(10);
    let mut occurrences = 0u64;
    for i in 0..10_000 {
        let rows = r.gen_range(2..=5);
        let cols = r.gen_range(2..=6);
        let m = random_matrix(&mut r, rows, cols, 0.5);
        let rm = transform(&m, Transform::Rotate180);
        ensure!(rm == rotate(&m), "#{i}: rotation differs from the entrywise oracle");
        for p in Pattern::ALL {
            let rp = Pattern::from_matrix(&rotate(&p.matrix())).ok_or("rotated pattern is not a pattern")?;
            for i1 in 0..rows {
                for i2 in i1 + 1..rows {
                    for j1 in 0..cols {
                        for j2 in j1 + 1..cols {
                            let occ = (i1, i2, j1, j2);
                            let here = occurs_at(&m, p, occ);
                            let there = occurs_at(&rm, rp, rotate_occurrence(rows, cols, occ));
                            ensure!(here == there, "#{i}: {p:?} at {occ:?}");
                            occurrences += u64::from(here);
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "fixed rotations hold; 10000 matrices, {occurrences} occurrences mapped"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "min ordering / signed-interval / bi-arc equivalence, all digraphs n <= 4",
            c1_triple_equivalence,
        ),
        ("direct and extrema verifiers agree, n <= 4", c2_extrema_agreement),
        (
            "irreflexive graphs with an edge have no min ordering, n <= 6",
            c3_irreflexive_graphs,
        ),
        (
            "reflexive graphs: min ordering, forbidden structures, invertible pairs, n <= 7",
            c4_reflexive_equivalence,
        ),
        ("co-TT construction realizes symmetric digraphs, n <= 6", c5_cott),
        (
            "bipartite digraphs: min ordering iff ray model, parts <= 4",
            c6_bipartite,
        ),
        (
            "square matrices and augmentation: K,L-free permutations",
            c7_matrix_orderability,
        ),
        ("co-TT model x=(1,3,7), y=(8,10,2)", c8_cott_example),
        ("list homomorphism solver agrees with brute force", c9_homomorphism),
        ("pattern rotations and transform commutation", c10_pattern_algebra),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
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
