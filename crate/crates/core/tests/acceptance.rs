//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs under a plain `main` so that each criterion reports even when an
//! earlier one fails; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagstone::bounds::{edge_bound_odd, gamma_check};
use flagstone::complex::{
    check_dehn_sommerville, check_klee, clique_complex, clique_f_vector, euler_characteristic, gamma_vector, h_vector,
    sphere_euler_characteristic,
};
use flagstone::graph::generators::*;
use flagstone::graph::{
    clique_count, contains_multipartite_subgraph, disjoint_union, is_maximal_clique, join, MultipartitePattern,
};
use flagstone::rational::{ceil, int, Rational};
use flagstone::search::{enumerate_classes, exhaustive_search, SearchConfig};
use flagstone::structure::{
    bollobas_lower_bound, check_lemma_independent_bound, is_d_leveled, is_weak_pseudomanifold, link_witness,
    restrict_witness, verify_type_partition, PartitionWitness,
};
use flagstone::Graph;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn extremal_equality() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for s in 1..=4usize {
        for n in (4 * s..=60).step_by(s) {
            let g = join_of_cycles(s, n).map_err(|e| e.to_string())?;
            ensure(is_d_leveled(&g, 2 * s - 1).is_leveled, || format!("s={s} n={n}: not leveled"))?;
            // (s-1)/(2s) n^2 + n, in integers.
            let lhs = 2 * s * g.edge_count();
            let rhs = (s - 1) * n * n + 2 * s * n;
            ensure(lhs == rhs, || format!("s={s} n={n}: {} edges", g.edge_count()))?;
            ensure(int(g.edge_count()) == edge_bound_odd(n as u64, s as u64), || format!("s={s} n={n}: bound"))?;
            checked += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {}", secs(took)))?;
    Ok(format!("{checked} instances in {}", secs(took)))
}

fn vector_pipeline() -> Outcome {
    let cases: [(&str, Graph, usize, Vec<i64>, Vec<i64>); 4] = [
        ("C5", cycle(5).unwrap(), 1, vec![1, 3, 1], vec![1, 1]),
        ("octahedron", cross_polytope(2), 2, vec![1, 3, 3, 1], vec![1, 0]),
        ("C4*C4", join_of_cycles(2, 8).unwrap(), 3, vec![1, 4, 6, 4, 1], vec![1, 0, 0]),
        ("C5*C5", join_of_cycles(2, 10).unwrap(), 3, vec![1, 6, 11, 6, 1], vec![1, 2, 1]),
    ];
    for (name, g, d, h, gamma) in cases {
        let hv = h_vector(&clique_f_vector(&g), d).map_err(|e| e.to_string())?;
        ensure(hv.entries() == ints(&h).as_slice(), || format!("{name}: h = {:?}", hv.entries()))?;
        let gv = gamma_vector(&hv).map_err(|e| e.to_string())?;
        ensure(gv.entries() == ints(&gamma).as_slice(), || format!("{name}: gamma = {:?}", gv.entries()))?;
    }
    // γ₂ = (s-1)/(2s) γ₁² at s = 2 for C5*C5.
    let c = gamma_check(10, 35, 2);
    ensure(c.equality && c.g1 == BigInt::from(2) && c.g2 == BigInt::from(1), || "C5*C5 gamma equality".into())?;
    Ok("4 instances".into())
}

fn gamma_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6A33);
    let trials = 10_000;
    let mut holds = 0;
    for k in 0..trials {
        let s = rng.random_range(1..=10u64);
        // Mix the full range with triples close to the bound.
        let (f0, f1) = if k % 2 == 0 {
            let f0 = rng.random_range(0..=1_000_000u64);
            (f0, rng.random_range(0..=f0 * f0))
        } else {
            let f0 = rng.random_range(0..=2000u64);
            let b = ceil(&edge_bound_odd(f0, s));
            let b: i64 = b.try_into().unwrap();
            (f0, (b + rng.random_range(-3..=3i64)).clamp(0, (f0 * f0) as i64) as u64)
        };
        let c = gamma_check(f0, f1, s);
        let bound = edge_bound_odd(f0, s);
        let direct = int(f1) <= bound;
        ensure(c.holds == direct, || format!("(f0, f1, s) = ({f0}, {f1}, {s}): gamma {} vs bound {direct}", c.holds))?;
        ensure(c.equality == (int(f1) == bound), || format!("({f0}, {f1}, {s}): equality"))?;
        holds += usize::from(direct);
    }
    Ok(format!("{trials} triples agree ({holds} within the bound)"))
}

fn dehn_sommerville_klee() -> Outcome {
    let mut spheres: Vec<(String, Graph, usize)> = Vec::new();
    for s in 1..=3usize {
        for n in (4 * s..=4 * s + 6).step_by(s) {
            spheres.push((format!("join_of_cycles({s},{n})"), join_of_cycles(s, n).unwrap(), 2 * s - 1));
        }
    }
    for k in 4..=10 {
        spheres.push((format!("suspension({k})"), suspension_sphere(k).unwrap(), 2));
    }
    for s in 1..=2 {
        spheres.push((format!("even_sphere({s},5)"), even_sphere_join(s, 5).unwrap(), 2 * s));
    }
    for d in 0..=7 {
        spheres.push((format!("cross_polytope({d})"), cross_polytope(d), d));
    }
    for (name, g, d) in &spheres {
        let f = clique_f_vector(g);
        let h = h_vector(&f, *d).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_dehn_sommerville(&h).holds, || format!("{name}: DS fails"))?;
        let chi = euler_characteristic(&f);
        ensure(chi == sphere_euler_characteristic(*d as isize), || format!("{name}: chi = {chi}"))?;
        let klee = check_klee(&h, chi, *d).map_err(|e| e.to_string())?;
        ensure(klee.holds, || format!("{name}: Klee fails"))?;
    }
    let torus = grid_torus(4, 4).unwrap();
    let f = clique_f_vector(&torus);
    let h = h_vector(&f, 2).unwrap();
    let ds = check_dehn_sommerville(&h);
    ensure(!ds.per_index[1], || format!("torus DS: {:?}", ds.per_index))?;
    let e = h.entries();
    ensure(&e[2] - &e[1] == BigInt::from(6), || format!("torus h = {e:?}"))?;
    let chi = euler_characteristic(&f);
    ensure(chi == 0, || format!("torus chi = {chi}"))?;
    ensure(check_klee(&h, chi, 2).unwrap().holds, || "torus Klee fails".into())?;
    Ok(format!("{} spheres; torus h2-h1 = 6, chi = 0", spheres.len()))
}

fn random_graph_with_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

fn bollobas() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xB011);
    let mut corpus: Vec<Graph> = vec![
        cycle(5).unwrap(),
        cross_polytope(2),
        cross_polytope(4),
        join_of_cycles(2, 8).unwrap(),
        join_of_cycles(2, 20).unwrap(),
        join_of_cycles(3, 24).unwrap(),
        grid_torus(4, 4).unwrap(),
        petersen(),
        complete_multipartite(&[4, 4, 4]).unwrap(),
        complete_multipartite(&[5, 5, 5, 5]).unwrap(),
    ];
    for k in 0..50 {
        let n = rng.random_range(10..=40usize);
        let t = 2 + k % 2;
        let n2 = n * n;
        // Edge counts inside the window (t-1)/(2t) n² <= m <= t/(2(t+1)) n².
        let lo = ((t - 1) * n2).div_ceil(2 * t);
        let hi = (t * n2 / (2 * (t + 1))).min(n * (n - 1) / 2);
        let m = if lo <= hi { rng.random_range(lo..=hi) } else { hi };
        corpus.push(random_graph_with_edges(n, m, &mut rng));
    }
    let mut in_window = 0;
    for g in &corpus {
        for t in [2u32, 3] {
            let b = bollobas_lower_bound(g.n() as u64, g.edge_count() as u64, t);
            if !b.in_window {
                continue;
            }
            in_window += 1;
            let k = clique_count(g, t as usize + 1);
            ensure(BigInt::from(k) >= ceil(&b.value), || {
                format!("n={} m={} t={t}: {k} cliques < {}", g.n(), g.edge_count(), b.value)
            })?;
        }
    }
    let took = start.elapsed();
    ensure(in_window >= 50, || format!("only {in_window} (graph, t) pairs in window"))?;
    ensure(took < Duration::from_secs(60), || format!("took {}", secs(took)))?;
    Ok(format!("{in_window} in-window checks in {}", secs(took)))
}

/// Partitions of `n` into parts of size at least 4, as non-increasing lists.
fn cycle_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (4..=n.min(max)).rev() {
        for mut rest in cycle_partitions(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

fn union_of_cycles(lengths: &[usize]) -> Graph {
    lengths
        .iter()
        .fold(Graph::empty(0), |g, &k| disjoint_union(&g, &cycle(k).unwrap()))
}

fn appendix_criterion() -> Outcome {
    let mut negatives = 0;
    let claw = MultipartitePattern::one_three(1);
    for n in 4..=20 {
        for p in cycle_partitions(n, n) {
            let g = union_of_cycles(&p);
            ensure(is_d_leveled(&g, 1).is_leveled, || format!("{p:?} not 1-leveled"))?;
            ensure(contains_multipartite_subgraph(&g, &claw).is_none(), || format!("{p:?} contains K(1,3)"))?;
            negatives += 1;
        }
    }
    let pattern = MultipartitePattern::one_three(2);
    for a in 4..=16 {
        for b in a..=20 - a {
            let g = join(&cycle(a).unwrap(), &cycle(b).unwrap());
            ensure(is_d_leveled(&g, 3).is_leveled, || format!("C{a}*C{b} not 3-leveled"))?;
            ensure(contains_multipartite_subgraph(&g, &pattern).is_none(), || format!("C{a}*C{b} contains K(1,3,3)"))?;
            negatives += 1;
        }
    }
    for s in 1..=2 {
        let pattern = MultipartitePattern::one_three(s);
        let g = complete_multipartite(pattern.parts()).unwrap();
        let e = contains_multipartite_subgraph(&g, &pattern).ok_or_else(|| format!("control s={s} not found"))?;
        ensure(e.verify(&g, &pattern), || format!("control s={s}: witness does not verify"))?;
    }
    Ok(format!("{negatives} manifold skeletons clear, 2 controls found"))
}

fn exhaustive_oracle() -> Outcome {
    let start = Instant::now();
    let r = exhaustive_search(&SearchConfig::exhaustive(3, 1, 8)).map_err(|e| e.to_string())?;
    for s in &r.summaries {
        if s.n <= 7 {
            ensure(s.leveled == 0, || format!("d=3 n={}: {} leveled", s.n, s.leveled))?;
        }
    }
    let last = r.summaries.last().ok_or("no summaries")?;
    ensure(last.n == 8 && last.max_edges == Some(24) && last.equality == Some(true), || {
        format!("d=3 n=8: max {:?}", last.max_edges)
    })?;
    let arg = r.reports.iter().find(|rep| rep.n == 8).ok_or("no report at n = 8")?;
    ensure(arg.edges == 24 && arg.leveled.verdict, || "argmax does not re-verify".into())?;
    let r1 = exhaustive_search(&SearchConfig::exhaustive(1, 1, 9)).map_err(|e| e.to_string())?;
    for s in &r1.summaries {
        let want = if s.n >= 4 { Some(s.n) } else { None };
        ensure(s.max_edges == want, || format!("d=1 n={}: max {:?}", s.n, s.max_edges))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(600), || format!("took {}", secs(took)))?;
    Ok(format!("d=3 n<=8 and d=1 n<=9 in {}", secs(took)))
}

fn predicate_cross_check() -> Outcome {
    let levels = enumerate_classes(7, None, u64::MAX).map_err(|e| e.to_string())?;
    let mut graphs = 0;
    let mut leveled = 0;
    for classes in &levels {
        for code in classes {
            let g = code.to_graph();
            let k = clique_complex(&g);
            for d in 1..=3 {
                let a = is_d_leveled(&g, d).is_leveled;
                let b = is_weak_pseudomanifold(&k, d);
                ensure(a == b, || format!("{:?} d={d}: leveled {a}, pseudomanifold {b}", g.edges()))?;
                leveled += usize::from(a);
            }
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs x 3 levels agree ({leveled} leveled)"))
}

/// Random graph of type `(t, η, C)`: random graphs inside the parts, all
/// cross edges minus a few, and a handful of exceptional vertices.
fn random_type_instance(rng: &mut ChaCha8Rng) -> (Graph, PartitionWitness) {
    let t = rng.random_range(2..=4usize);
    let sizes: Vec<usize> = (0..t).map(|_| rng.random_range(6..=12)).collect();
    let x_len = rng.random_range(0..=3usize);
    let n: usize = sizes.iter().sum::<usize>() + x_len;
    let mut parts = Vec::new();
    let mut next = 0;
    for &k in &sizes {
        parts.push((next..next + k).collect::<Vec<_>>());
        next += k;
    }
    let x: Vec<usize> = (next..n).collect();
    let mut g = Graph::empty(n);
    let part_of = |v: usize| parts.iter().position(|p| p.contains(&v));
    for u in 0..n {
        for v in u + 1..n {
            let p = match (part_of(u), part_of(v)) {
                (Some(a), Some(b)) if a == b => 0.3,
                (Some(_), Some(_)) => 0.97,
                _ => 0.5,
            };
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    let probe = PartitionWitness::new(parts.clone(), x.clone(), Rational::from_integer(0.into()), x.len());
    let eta = verify_type_partition(&g, &probe).unwrap().min_eta;
    let m = sizes.iter().copied().min().unwrap();
    (g, PartitionWitness::new(parts, x, eta, x_len).with_flatness(Rational::from_integer(1.into()), m))
}

fn fact_restriction(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (g, w) = random_type_instance(rng);
    ensure(verify_type_partition(&g, &w).unwrap().type_holds, || "base witness fails".into())?;
    let keep: Vec<Vec<usize>> = w
        .parts
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.shuffle(rng);
            p.truncate(rng.random_range(1..=p.len()));
            p
        })
        .collect();
    let keep_x: Vec<usize> = w.exceptional.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
    let (h, wr, beta) = restrict_witness(&g, &w, &keep, &keep_x).map_err(|e| e.to_string())?;
    ensure(beta > Rational::from_integer(0.into()) && beta <= Rational::from_integer(1.into()), || "beta".into())?;
    ensure(wr.eta == &w.eta / &beta, || "restricted eta".into())?;
    let d = verify_type_partition(&h, &wr).map_err(|e| e.to_string())?;
    ensure(d.type_holds, || format!("restriction fails at eta = {}", wr.eta))
}

fn fact_common_neighbourhood(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (g, w) = random_type_instance(rng);
    let k = rng.random_range(1..w.t);
    let pool: Vec<usize> = w.parts[..k].iter().flatten().copied().collect();
    let size = rng.random_range(1..=pool.len().min(4));
    let p: Vec<usize> = pool.choose_multiple(rng, size).copied().collect();
    let target = &w.parts[k];
    let common = target.iter().filter(|&&u| p.iter().all(|&v| g.has_edge(u, v))).count();
    let need = (Rational::from_integer(1.into()) - &w.eta * int(p.len())) * int(target.len());
    ensure(int(common) >= need, || format!("|P| = {}: {common} common neighbours < {need}", p.len()))
}

/// Random maximal clique of `g[within]`.
fn random_maximal_clique(g: &Graph, within: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order = within.to_vec();
    order.shuffle(rng);
    let mut sigma: Vec<usize> = Vec::new();
    for v in order {
        if sigma.iter().all(|&u| g.has_edge(u, v)) {
            sigma.push(v);
        }
    }
    sigma.sort_unstable();
    sigma
}

fn fact_link(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (g, w) = random_type_instance(rng);
    let k = rng.random_range(1..w.t);
    let within: Vec<usize> = w.parts[..k].iter().flatten().copied().collect();
    let sigma = random_maximal_clique(&g, &within, rng);
    ensure(is_maximal_clique(&g.induced(&within), &relabel_into(&within, &sigma)), || "sigma not maximal".into())?;
    if &w.eta * int(sigma.len()) >= Rational::from_integer(1.into()) {
        return Ok(());
    }
    let (lk, wl) = link_witness(&g, &w, &sigma, k).map_err(|e| e.to_string())?;
    let shrink = Rational::from_integer(1.into()) - &w.eta * int(sigma.len());
    ensure(wl.eta == &w.eta / &shrink, || "link eta".into())?;
    ensure(wl.t == w.t - k && wl.exceptional.len() <= w.c, || "link parts".into())?;
    let d = verify_type_partition(&lk.graph, &wl).map_err(|e| e.to_string())?;
    ensure(d.type_holds, || format!("link fails at eta = {}", wl.eta))?;
    let large = &shrink * int(w.m);
    ensure(wl.parts.iter().all(|p| int(p.len()) >= large), || "link not large".into())
}

fn relabel_into(within: &[usize], sigma: &[usize]) -> Vec<usize> {
    sigma.iter().map(|v| within.iter().position(|u| u == v).unwrap()).collect()
}

fn random_leveled(rng: &mut ChaCha8Rng) -> (Graph, usize) {
    let d = rng.random_range(1..=4usize);
    let s = d.div_ceil(2);
    let mut g: Option<Graph> = (d % 2 == 0).then(|| independent(2));
    for _ in 0..s {
        let parts = rng.random_range(1..=2);
        let lengths: Vec<usize> = (0..parts).map(|_| rng.random_range(4..=7)).collect();
        let factor = union_of_cycles(&lengths);
        g = Some(match g {
            None => factor,
            Some(acc) => join(&acc, &factor),
        });
    }
    (g.unwrap(), d)
}

fn lemma_independent(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (g, d) = random_leveled(rng);
    ensure(is_d_leveled(&g, d).is_leveled, || "generator not leveled".into())?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut i: Vec<usize> = Vec::new();
    for v in order {
        if i.iter().all(|&u| !g.has_edge(u, v)) && rng.random_bool(0.9) {
            i.push(v);
        }
    }
    let x: Vec<usize> = (0..g.n()).filter(|v| !i.contains(v)).collect();
    let b = check_lemma_independent_bound(&g, d, &i, &x).map_err(|e| e.to_string())?;
    ensure(b.holds && BigInt::from(b.independent) <= b.binomial_rhs, || {
        format!("|I| = {} > {} (d = {d})", b.independent, b.rhs)
    })
}

fn property_suites() -> Outcome {
    let suites: [(&str, fn(&mut ChaCha8Rng) -> Result<(), String>); 4] = [
        ("restriction", fact_restriction),
        ("common-neighbourhood", fact_common_neighbourhood),
        ("link-type", fact_link),
        ("independent-bound", lemma_independent),
    ];
    for (k, (name, run)) in suites.iter().enumerate() {
        for i in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * k as u64 + i);
            run(&mut rng).map_err(|e| format!("{name} #{i}: {e}"))?;
        }
    }
    Ok("4 suites x 100 instances".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 extremal equality", extremal_equality),
        ("2 f/h/gamma pipeline", vector_pipeline),
        ("3 gamma <=> edge bound", gamma_equivalence),
        ("4 Dehn-Sommerville / Klee", dehn_sommerville_klee),
        ("5 Bollobas clique bound", bollobas),
        ("6 multipartite criterion", appendix_criterion),
        ("7 exhaustive search oracle", exhaustive_oracle),
        ("8 leveled vs pseudomanifold", predicate_cross_check),
        ("9 partition and independence suites", property_suites),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
