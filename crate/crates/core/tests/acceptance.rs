//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use eqadj_core::geometry::generate::{
    random_dyadic_boxes, random_free_scene, random_point_line, random_signrank3, random_udg,
};
use eqadj_core::geometry::{
    dot, measure, point_box_incidence, point_line_incidence, sign_positive, verify_incidence_degeneracy, Scene,
    UdgRealization, CELL_OFFSETS,
};
use eqadj_core::graph::generate::{random_connected_bipartite, random_equivalence};
use eqadj_core::graph::BipartiteGraph;
use eqadj_core::gyarfas::{decompose_component, default_root};
use eqadj_core::labeling::{build_labels, ceil_log2, verify_labels};
use eqadj_core::oracles::{chain_index, find_edge_asteroid_triple, NeighbourhoodMode};
use eqadj_core::protocol::{
    run, run_all_pairs, Event, GyarfasProtocol, Protocol, Role, SignRank3Protocol, UdgProtocol,
};
use eqadj_core::scalar::Scalar;
use eqadj_core::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64) -> Rational {
    Rational::from_ratio(n, 1)
}

fn eat_free(g: &BipartiteGraph) -> bool {
    find_edge_asteroid_triple(g, NeighbourhoodMode::default()).is_none()
}

/// Protocol instances whose labels criterion 6 checks.
#[derive(Default)]
struct LabelPool {
    gyarfas: Vec<GyarfasProtocol>,
    signrank: Vec<SignRank3Protocol<Rational>>,
}

fn criterion_1() -> Outcome {
    let mut r = rng(101);
    let mut failures = 0;
    for _ in 0..500 {
        let nl = r.gen_range(1..=20);
        let nr = r.gen_range(1..=20);
        let p = r.gen_range(0.05..0.5);
        let g = Arc::new(random_connected_bipartite(nl, nr, p, &mut r).unwrap());
        let all: Vec<usize> = (0..g.n()).collect();
        let tree = decompose_component(g.clone(), default_root(&g, &all));
        let report = tree.verify();
        if !report.is_valid() {
            failures += 1;
        }
    }
    if failures == 0 {
        pass("500 graphs, all five clauses hold")
    } else {
        fail(format!("{failures} invalid decompositions"))
    }
}

fn criterion_2(pool: &mut LabelPool) -> Outcome {
    let mut r = rng(202);
    let (mut mismatches, mut depth_violations, mut checked_depth) = (0, 0, 0);
    let mut max_cost = 0;
    for _ in 0..200 {
        let nl = r.gen_range(1..=12);
        let nr = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.5);
        let g = random_connected_bipartite(nl, nr, p, &mut r).unwrap();
        let proto = GyarfasProtocol::new(g.clone());
        let report = run_all_pairs(&proto);
        mismatches += report.mismatches.len();
        max_cost = max_cost.max(report.max_cost);
        if g.n() <= 14 {
            checked_depth += 1;
            let ch = chain_index(&g, g.n());
            if report.max_recursion_depth > ch.value + 1 {
                depth_violations += 1;
            }
        }
        pool.gyarfas.push(proto);
    }
    let detail = format!(
        "200 graphs, {mismatches} mismatches, depth bound violated on {depth_violations}/{checked_depth}, max cost {max_cost}"
    );
    if mismatches == 0 && depth_violations == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_3(pool: &mut LabelPool) -> Outcome {
    let mut r = rng(303);
    let mut worst = 0;
    let mut wrong = 0;
    for _ in 0..50 {
        let count = r.gen_range(1..=8);
        let g = random_equivalence(count, 6, &mut r);
        let proto = match GyarfasProtocol::base_case(g) {
            Ok(p) => p,
            Err(e) => return fail(format!("generator produced a non-equivalence graph: {e}")),
        };
        let report = run_all_pairs(&proto);
        wrong += report.mismatches.len();
        worst = worst.max(report.max_cost);
        pool.gyarfas.push(proto);
    }
    let detail = format!("50 graphs, max cost {worst}, {wrong} mismatches");
    if worst <= 2 && wrong == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn piece_selection_bits_ok<P: Protocol>(p: &P) -> bool {
    p.pairs().iter().all(|&(x, y)| {
        let t = run(p, x, y).transcript;
        let froms: Vec<Option<Role>> = t
            .events
            .iter()
            .take(3)
            .map(|e| match e {
                Event::Bit { from, .. } => Some(*from),
                Event::Query { .. } => None,
            })
            .collect();
        froms == [Some(Role::Alice), Some(Role::Bob), Some(Role::Bob)]
    })
}

fn criterion_4(pool: &mut LabelPool) -> Outcome {
    let mut r = rng(404);
    let mut problems = Vec::new();
    for inst in 0..50 {
        let v = random_signrank3::<Rational, _>(24, 24, &mut r);
        let proto = match SignRank3Protocol::new(v.a.clone(), v.b.clone()) {
            Ok(p) => p,
            Err(e) => return fail(format!("instance {inst}: {e}")),
        };
        let d = proto.decomposition();
        let mut covered = vec![vec![0u8; v.b.len()]; v.a.len()];
        for piece in &d.pieces {
            for (k, &u) in piece.rows.iter().enumerate() {
                for (j, &w) in piece.columns.iter().enumerate() {
                    covered[u][w] += 1;
                    if piece.scene.contains(k, j) != sign_positive(&v.a[u], &v.b[w]) {
                        problems.push(format!("instance {inst}: piece {} disagrees at ({u},{w})", piece.index()));
                    }
                }
            }
            let g = piece.scene.incidence_graph();
            if g.n_left() <= 30 && g.n_right() <= 30 && (!eat_free(&g) || !eat_free(&g.bipartite_complement())) {
                problems.push(format!("instance {inst}: piece {} has an edge-asteroid triple", piece.index()));
            }
        }
        if covered.iter().flatten().any(|&c| c != 1) {
            problems.push(format!("instance {inst}: pieces do not tile the matrix"));
        }
        let report = run_all_pairs(&proto);
        if !report.is_correct() {
            problems.push(format!("instance {inst}: {} protocol mismatches", report.mismatches.len()));
        }
        if !piece_selection_bits_ok(&proto) {
            problems.push(format!("instance {inst}: runs do not open with three selection bits"));
        }
        pool.signrank.push(proto);
    }
    if problems.is_empty() {
        pass("50 instances, tiling, sign reconstruction, EAT-freeness and protocol exact")
    } else {
        fail(format!("{} problems, first: {}", problems.len(), problems[0]))
    }
}

fn udg_density_width(n: usize) -> Rational {
    // about one point per cell of side 1
    Rational::from_ratio((n as f64).sqrt().round() as i64, 1)
}

fn criterion_5() -> Outcome {
    let mut r = rng(505);
    let mut problems = Vec::new();
    let two = q(2);
    let r2 = q(4);
    for inst in 0..50 {
        let u: UdgRealization<Rational> = random_udg(60, two.clone(), udg_density_width(60), &mut r);
        let proto = UdgProtocol::new(u.clone());
        let report = run_all_pairs(&proto);
        if !report.is_correct() {
            problems.push(format!("instance {inst}: {} mismatches", report.mismatches.len()));
        }
        for (x, y) in proto.pairs() {
            if proto.cell(x) == proto.cell(y) {
                let run = run(&proto, x, y);
                if run.cost() != 1 || !run.output().is_plus() {
                    problems.push(format!("instance {inst}: same-cell pair ({x},{y}) took cost {}", run.cost()));
                }
            }
        }
        let (sigma, psi) = u.to_signrank4();
        for i in 0..u.points().len() {
            for j in 0..u.points().len() {
                let dx = u.points()[i][0].clone() - u.points()[j][0].clone();
                let dy = u.points()[i][1].clone() - u.points()[j][1].clone();
                if dot(&sigma[i], &psi[j]) != r2.clone() - (dx.clone() * dx + dy.clone() * dy) {
                    problems.push(format!("instance {inst}: lift identity fails at ({i},{j})"));
                }
            }
        }
        let grid = u.grid();
        for &c1 in grid.keys() {
            for &(a, b) in &CELL_OFFSETS {
                let c2 = (c1.0 + a, c1.1 + b);
                if !grid.contains_key(&c2) {
                    continue;
                }
                let (piece, _) = u.piece(c1, c2);
                if piece.n_left() <= 30 && piece.n_right() <= 30 && !eat_free(&piece.bipartite_complement()) {
                    problems.push(format!("instance {inst}: piece {c1:?}->{c2:?} complement has an EAT"));
                }
            }
        }
    }
    if problems.is_empty() {
        pass("50 realizations, protocol exact, same-cell shortcut, lift identity, complements EAT-free")
    } else {
        fail(format!("{} problems, first: {}", problems.len(), problems[0]))
    }
}

fn size_bound(c: usize, n: usize) -> f64 {
    2f64.powi(c as i32) * (2.0 * f64::from(ceil_log2(n)) + 2.0) + 64.0
}

fn check_labels<P: Protocol>(p: &P, problems: &mut Vec<String>, checked: &mut usize) {
    let Ok(set) = build_labels(p, 12) else { return };
    *checked += 1;
    let bad = verify_labels(p, &set);
    if !bad.is_empty() {
        problems.push(format!("{} decode mismatches", bad.len()));
    }
    let m = set.measure();
    if m.max_bits as f64 > size_bound(set.cost(), set.n()) {
        problems.push(format!("label of {} bits exceeds bound for c = {}", m.max_bits, set.cost()));
    }
}

fn size_law(name: &str, ratios: &[(usize, f64)], problems: &mut Vec<String>) -> String {
    let base = ratios[0].1;
    for &(n, ratio) in &ratios[1..] {
        if ratio > 2.0 * base || ratio < base / 2.0 {
            problems.push(format!("{name}: bits/log N at N={n} is {ratio:.1}, N=64 gives {base:.1}"));
        }
    }
    ratios.iter().map(|(n, r)| format!("{n}:{r:.1}")).collect::<Vec<_>>().join(" ")
}

fn criterion_6(pool: &LabelPool) -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    for p in &pool.gyarfas {
        check_labels(p, &mut problems, &mut checked);
    }
    for p in &pool.signrank {
        check_labels(p, &mut problems, &mut checked);
    }

    let sizes = [64usize, 128, 256, 512];
    let mut r = rng(606);
    let mut eq_ratios = Vec::new();
    for &n in &sizes {
        // bicliques with sides up to 4 until N reaches n, then trimmed
        let mut g = random_equivalence(n / 3, 4, &mut r);
        while g.n() < n {
            g = random_equivalence(n / 3 + 4, 4, &mut r);
        }
        let keep: Vec<usize> = (0..n).map(|i| i * g.n() / n).collect();
        let (g, _) = g.induced(&keep);
        let p = GyarfasProtocol::new(g);
        match build_labels(&p, 64) {
            Ok(set) => {
                if !verify_labels(&p, &set).is_empty() {
                    problems.push(format!("equivalence N={n}: decode mismatches"));
                }
                eq_ratios.push((n, set.measure().bits_per_log_n));
            }
            Err(e) => return fail(format!("equivalence N={n}: {e}")),
        }
    }
    let mut udg_ratios = Vec::new();
    for &n in &sizes {
        let u = random_udg(n, q(2), udg_density_width(n), &mut r);
        let p = UdgProtocol::new(u);
        match build_labels(&p, 64) {
            Ok(set) => {
                if !verify_labels(&p, &set).is_empty() {
                    problems.push(format!("udg N={n}: decode mismatches"));
                }
                udg_ratios.push((n, set.measure().bits_per_log_n));
            }
            Err(e) => return fail(format!("udg N={n}: {e}")),
        }
    }
    let eq = size_law("equivalence", &eq_ratios, &mut problems);
    let udg = size_law("udg", &udg_ratios, &mut problems);
    let detail = format!("{checked} instances with c <= 12 round-trip; bits/log N equivalence [{eq}] udg [{udg}]");
    if problems.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {} problems, first: {}", problems.len(), problems[0]))
    }
}

fn criterion_7() -> Outcome {
    let mut r = rng(707);
    let mut problems = Vec::new();
    let mut worst = [0usize; 3];
    for d in 1..=3 {
        for inst in 0..100 {
            let s: Scene<Rational> = random_free_scene(d, 3, 16, 16, &mut r);
            match verify_incidence_degeneracy(&s, 3) {
                Ok(rep) => {
                    worst[d - 1] = worst[d - 1].max(rep.degeneracy.value);
                    if !rep.holds() {
                        problems.push(format!("dim {d} instance {inst}: degeneracy {}", rep.degeneracy.value));
                    }
                }
                Err(e) => problems.push(format!("dim {d} instance {inst}: {e}")),
            }
        }
    }
    let detail = format!("max degeneracy by dimension {worst:?} against bounds [2, 6, 10]");
    if problems.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; first: {}", problems[0]))
    }
}

fn criterion_8() -> Outcome {
    let mut r = rng(808);
    let mut violations = 0;
    for _ in 0..100 {
        let (points, lines) = random_point_line::<Rational, _>(30, 20, 8, &mut r);
        if !measure(&point_line_incidence(&points, &lines)).k22_free {
            violations += 1;
        }
    }
    let (points, boxes) = random_dyadic_boxes::<Rational, _>(64, 64, 4, &mut r);
    let m = measure(&point_box_incidence(&points, &boxes));
    let detail =
        format!("point-line K22 violations {violations}/100; point-box edges {} degeneracy {}", m.edges, m.degeneracy);
    if violations == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() -> ExitCode {
    let mut pool = LabelPool::default();
    let mut all_ok = true;
    let mut report = |k: usize, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let ok = out.ok && took <= limit;
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {k}: {verdict} [{:.1}s / {}s] {}", took.as_secs_f64(), limit.as_secs(), out.detail);
    };
    report(1, Duration::from_secs(10), &mut criterion_1);
    report(2, Duration::from_secs(120), &mut || criterion_2(&mut pool));
    report(3, Duration::from_secs(5), &mut || criterion_3(&mut pool));
    report(4, Duration::from_secs(300), &mut || criterion_4(&mut pool));
    report(5, Duration::from_secs(300), &mut criterion_5);
    report(6, Duration::from_secs(120), &mut || criterion_6(&pool));
    report(7, Duration::from_secs(60), &mut criterion_7);
    report(8, Duration::from_secs(60), &mut criterion_8);
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
