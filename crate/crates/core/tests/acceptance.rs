// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one line per criterion and fails the run if any
//! criterion fails or exceeds its runtime bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use masure_core::affine_order::{ChainSearch, Relation};
use masure_core::apartment::{
    conv_iterate, enclosure_cl_sharp, frontier_point, gauge_value, grid_points, hull_contains, EnclosureInput,
};
use masure_core::masure::{check_axioms, realize_intersection, Axiom, CatalogBounds};
use masure_core::rational::{add, neg, nullspace, q, qf, qvec, scale, solve, Vector, Q};
use masure_core::root_system::{classify_type, validate_gcm, BlockType};
use masure_core::tits_order::{
    check_lambda_path, lambda_paths_between, leq, orbit, path_endpoint_bound, qvee_leq, unique_straight_path,
    LambdaPath, PathCheck,
};
use masure_core::{
    build_complex, models, Apartment, DeltaFunctional, Error, GluedMasure, HalfSpace, HalfSpaceSet, MasurePoint,
    RootGeneratingSystem, SectorGermRef, WeylElement,
};

const SEED: u64 = 0x6d61_7375_7265;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

struct Criterion {
    id: u8,
    name: &'static str,
    bound: Duration,
    run: fn(&mut ChaCha8Rng) -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "GCM validation and classification", bound: Duration::from_secs(1), run: gcm_suite },
        Criterion {
            id: 2,
            name: "reflections and null-root invariance",
            bound: Duration::from_secs(10),
            run: weyl_suite,
        },
        Criterion { id: 3, name: "dominance and lambda-paths", bound: Duration::from_secs(30), run: path_suite },
        Criterion {
            id: 4,
            name: "enclosure, gauge and convex iterates",
            bound: Duration::from_secs(60),
            run: convex_suite,
        },
        Criterion { id: 5, name: "masure suite on shipped models", bound: Duration::from_secs(120), run: masure_suite },
        Criterion {
            id: 6,
            name: "affine order certificates and NC",
            bound: Duration::from_secs(120),
            run: order_suite,
        },
        Criterion { id: 7, name: "realizing intersections", bound: Duration::from_secs(10), run: realize_suite },
        Criterion { id: 8, name: "axiom checker", bound: Duration::from_secs(60), run: axiom_suite },
    ];
    let filter: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut all_ok = true;
    for c in criteria.iter().filter(|c| filter.is_none_or(|f| f == c.id)) {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + c.id as u64);
        let start = Instant::now();
        let out = (c.run)(&mut rng);
        let took = start.elapsed();
        let ok = out.failures.is_empty() && out.checked > 0 && took <= c.bound;
        all_ok &= ok;
        println!(
            "criterion {} [{}]: {} ({} checks, {} failures, {:.2}s of {}s)",
            c.id,
            c.name,
            if ok { "PASS" } else { "FAIL" },
            out.checked,
            out.failures.len(),
            took.as_secs_f64(),
            c.bound.as_secs()
        );
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn rand_q(rng: &mut ChaCha8Rng, span: i64, den: i64) -> Q {
    qf(rng.gen_range(-span * den..=span * den), rng.gen_range(1..=den))
}

fn rand_vec(rng: &mut ChaCha8Rng, n: usize, span: i64, den: i64) -> Vector {
    (0..n).map(|_| rand_q(rng, span, den)).collect()
}

fn rand_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

/// A dominant vector: prescribed nonnegative values on the simple roots plus
/// a random component in `𝔸_in`.
fn rand_dominant(rng: &mut ChaCha8Rng, s: &RootGeneratingSystem) -> Vector {
    let values: Vector = (0..s.rank()).map(|_| qf(rng.gen_range(0..=6), rng.gen_range(1..=3))).collect();
    let mut v = solve(s.roots(), &values, s.dim()).expect("roots are independent");
    for z in nullspace(s.roots(), s.dim()) {
        v = add(&v, &scale(&rand_q(rng, 2, 2), &z));
    }
    v
}

// Criterion 1. Each label comes with a certificate checked in plain integer
// arithmetic: u > 0 with Au > 0 (finite), Au = 0 (affine) or Au < 0
// (indefinite), block by block.

enum Label {
    Finite(Vec<i64>),
    Affine(Vec<i64>),
    Indefinite(Vec<i64>),
}

type Gcm = Vec<Vec<i64>>;
type Case = (Gcm, Vec<(Vec<usize>, Label)>);

fn gcm_suite(_: &mut ChaCha8Rng) -> Outcome {
    use Label::*;
    let cases: Vec<Case> = vec![
        (vec![vec![2]], vec![(vec![0], Finite(vec![1]))]),
        (vec![vec![2, -1], vec![-1, 2]], vec![(vec![0, 1], Finite(vec![1, 1]))]),
        (vec![vec![2, -2], vec![-1, 2]], vec![(vec![0, 1], Finite(vec![3, 2]))]),
        (vec![vec![2, -1], vec![-3, 2]], vec![(vec![0, 1], Finite(vec![3, 5]))]),
        (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![(vec![0, 1, 2], Finite(vec![3, 4, 3]))]),
        (vec![vec![2, -2], vec![-2, 2]], vec![(vec![0, 1], Affine(vec![1, 1]))]),
        (vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]], vec![(vec![0, 1, 2], Affine(vec![1, 1, 1]))]),
        (vec![vec![2, -1], vec![-4, 2]], vec![(vec![0, 1], Affine(vec![1, 2]))]),
        (vec![vec![2, -3], vec![-3, 2]], vec![(vec![0, 1], Indefinite(vec![1, 1]))]),
        (vec![vec![2, -5], vec![-1, 2]], vec![(vec![0, 1], Indefinite(vec![9, 4]))]),
        (vec![vec![2, 0], vec![0, 2]], vec![(vec![0], Finite(vec![1])), (vec![1], Finite(vec![1]))]),
        (
            vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]],
            vec![(vec![0, 1], Affine(vec![1, 1])), (vec![2], Finite(vec![1]))],
        ),
    ];
    let mut out = Outcome::new();
    for (a, expected) in &cases {
        let gcm = match validate_gcm(a) {
            Ok(g) => g,
            Err(e) => {
                out.check(false, || format!("{a:?} rejected: {e}"));
                continue;
            }
        };
        let blocks = classify_type(&gcm);
        out.check(blocks.len() == expected.len(), || format!("{a:?}: {} blocks", blocks.len()));
        for (idx, label) in expected {
            let (u, want_sign) = match label {
                Finite(u) => (u, 1),
                Affine(u) => (u, 0),
                Indefinite(u) => (u, -1),
            };
            let au: Vec<i64> = idx.iter().map(|&i| idx.iter().zip(u).map(|(&j, x)| a[i][j] * x).sum()).collect();
            let certified = u.iter().all(|&x| x > 0) && au.iter().all(|&x| x.signum() == want_sign);
            out.check(certified, || format!("{a:?}: bad certificate {u:?}"));
            let got = blocks.iter().find(|b| &b.indices == idx).map(|b| &b.kind);
            let agrees = match (label, got) {
                (Finite(_), Some(BlockType::Finite)) => true,
                (Affine(c), Some(BlockType::Affine { marks })) => marks == c,
                (Indefinite(_), Some(BlockType::Indefinite)) => true,
                _ => false,
            };
            out.check(agrees, || format!("{a:?} block {idx:?}: got {got:?}"));
        }
    }
    let rejected: [(Vec<Vec<i64>>, Error); 4] = [
        (vec![vec![2, -1], vec![-1, 3]], Error::DiagonalNotTwo(1)),
        (vec![vec![2, 1], vec![-1, 2]], Error::PositiveOffDiagonal(0, 1)),
        (vec![vec![2, 0], vec![-1, 2]], Error::AsymmetricZero(0, 1)),
        (vec![vec![2, -1]], Error::NotSquare),
    ];
    for (a, e) in rejected {
        let got = validate_gcm(&a);
        out.check(got.as_ref().err() == Some(&e), || format!("{a:?}: expected {e}, got {got:?}"));
    }
    out
}

// Criterion 2.

fn weyl_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let systems = [RootGeneratingSystem::affine_a1(), RootGeneratingSystem::affine_a2()];
    let mut out = Outcome::new();
    for k in 0..1000 {
        let s = &systems[k % 2];
        let delta = s.null_root().unwrap();
        let v = rand_vec(rng, s.dim(), 5, 4);
        let i = rng.gen_range(0..s.rank());
        out.check(s.reflect(i, &s.reflect(i, &v)) == v, || format!("r_{i}^2 moved {v:?}"));
        let word = rand_word(rng, s.rank(), 8);
        let wv = s.apply_word(&word, &v);
        out.check(delta.eval(&wv) == delta.eval(&v), || format!("δ not invariant under {word:?}"));
        // Affine Weyl elements with a translation in Q^∨ also fix δ.
        let t: Vector =
            (0..s.rank()).fold(vec![q(0); s.dim()], |acc, j| add(&acc, &scale(&q(rng.gen_range(-3..=3)), s.coroot(j))));
        let w = WeylElement::from_word(word.clone(), s.dim()).compose(s, &WeylElement::translation(t));
        let image = s.apply_weyl(&w, &v).unwrap();
        out.check(delta.eval(&image) == delta.eval(&v), || format!("δ not invariant under {w:?}"));
    }
    out
}

// Criterion 3.

fn path_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let systems = [
        RootGeneratingSystem::rank_one(),
        RootGeneratingSystem::a2(),
        RootGeneratingSystem::affine_a1(),
        RootGeneratingSystem::affine_a2(),
    ];
    let mut out = Outcome::new();
    for k in 0..1000 {
        let s = &systems[k % systems.len()];
        let lambda = rand_dominant(rng, s);
        let word = rand_word(rng, s.rank(), 6);
        let w_lambda = s.apply_word(&word, &lambda);
        out.check(qvee_leq(s, &w_lambda, &lambda), || format!("w.λ ≰ λ for {lambda:?}, {word:?}"));
    }

    let s = RootGeneratingSystem::rank_one();
    for lambda in [qvec(&[1]), qvec(&[2]), vec![qf(1, 2)], vec![qf(3, 2)]] {
        for a in [qvec(&[0]), vec![qf(-3, 4)], qvec(&[5])] {
            let target = add(&a, &lambda);
            let paths = lambda_paths_between(&s, &a, &target, &lambda, 4, 6, 2);
            let valid: Vec<&LambdaPath> =
                paths.iter().filter(|p| check_lambda_path(&s, p, &lambda).ok() == Some(PathCheck::Valid)).collect();
            out.check(!valid.is_empty(), || format!("no path from {a:?} for λ = {lambda:?}"));
            for p in valid {
                let straight = unique_straight_path(&s, &a, &lambda, p);
                out.check(straight == Ok(true), || format!("folded path {p:?} reaches a + λ"));
            }
        }
    }

    for k in 0..1000 {
        let s = &systems[k % 3];
        let lambda = rand_dominant(rng, s);
        let velocities = orbit(s, &lambda, 4);
        let pieces = rng.gen_range(1..=4);
        let mut cuts: Vec<Q> = (1..pieces).map(|_| qf(rng.gen_range(1..24), 24)).collect();
        cuts.sort();
        cuts.dedup();
        let mut bps = vec![q(0)];
        bps.extend(cuts);
        bps.push(q(1));
        let vs: Vec<Vector> =
            (0..bps.len() - 1).map(|_| velocities[rng.gen_range(0..velocities.len())].clone()).collect();
        let path = LambdaPath::new(rand_vec(rng, s.dim(), 3, 2), bps, vs);
        out.check(path_endpoint_bound(s, &path, &lambda), || format!("endpoint bound fails for {path:?}"));
    }
    out
}

// Criterion 4.

fn convex_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut out = Outcome::new();
    let aps = [Apartment::new(RootGeneratingSystem::rank_one()), Apartment::new(RootGeneratingSystem::affine_a1())];
    let windows: Vec<Vec<Vector>> = aps.iter().map(|ap| ap.root_window(3)).collect();
    for k in 0..500 {
        let (ap, window) = (&aps[k % 2], &windows[k % 2]);
        let n = ap.dim();
        let count = rng.gen_range(1..=3);
        let pts: Vec<Vector> = (0..count).map(|_| rand_vec(rng, n, 3, 2)).collect();
        let mut more = pts.clone();
        more.push(rand_vec(rng, n, 3, 2));
        let cl = |u: &EnclosureInput| enclosure_cl_sharp(ap, window, u).unwrap();
        let e = cl(&EnclosureInput::Points(pts.clone()));
        out.check(pts.iter().all(|p| e.contains(p)), || format!("cl not extensive on {pts:?}"));
        let ee = cl(&EnclosureInput::Set(e.clone()));
        out.check(ee.same_set(&e, n), || format!("cl not idempotent on {pts:?}"));
        let bigger = cl(&EnclosureInput::Points(more));
        out.check(e.subset_of(&bigger, n), || format!("cl not monotone on {pts:?}"));
    }

    for k in 0..200 {
        let n = 1 + k % 3;
        let faces = rng.gen_range(n + 1..=n + 4);
        let c = HalfSpaceSet::enclosed(
            (0..faces).map(|_| HalfSpace::new(rand_vec(rng, n, 3, 1), qf(rng.gen_range(1..=6), 2))).collect(),
        );
        let s = rand_vec(rng, n, 3, 2);
        let j = gauge_value(&c, &s).unwrap();
        // s ∈ tC exactly when t ≥ j.
        for t in [&j + qf(1, 3), j.clone() * qf(1, 2)] {
            if t <= q(0) {
                continue;
            }
            let in_tc = c.contains(&scale(&t.recip(), &s));
            out.check(in_tc == (t >= j), || format!("gauge {j} wrong at t = {t}"));
        }
        match frontier_point(&c, &s) {
            Ok(f) => {
                let jf = gauge_value(&c, &f).unwrap();
                out.check(jf == q(1) && c.contains(&f), || format!("Fr(s) has gauge {jf}"));
            }
            Err(Error::ZeroGauge) => out.check(j == q(0), || "ZeroGauge with positive gauge".into()),
            Err(e) => out.check(false, || format!("frontier: {e}")),
        }
        let p: Vec<Vector> = (0..rng.gen_range(2..=6)).map(|_| rand_vec(rng, n, 3, 2)).collect();
        let it = conv_iterate(&p, n);
        out.check(it.is_full_hull(), || format!("conv_{n} is not the hull of {p:?}"));
        for _ in 0..4 {
            let x = rand_vec(rng, n, 3, 2);
            out.check(it.contains(&x) == hull_contains(&p, &x), || format!("conv_{n} disagrees at {x:?}"));
        }
    }
    out
}

// Criteria 5 and 8 share the shipped models.

fn shipped() -> Vec<(&'static str, GluedMasure)> {
    models::shipped().into_iter().map(|(name, spec)| (name, build_complex(spec).unwrap())).collect()
}

fn grid(m: &GluedMasure, half: i64, step: Q) -> Vec<MasurePoint> {
    let pts = grid_points(m.dim(), &q(half), &step);
    let mut out: Vec<MasurePoint> =
        (0..m.charts()).flat_map(|c| pts.iter().map(move |x| m.canonical(&MasurePoint::new(c, x.clone())))).collect();
    out.sort();
    out.dedup();
    out
}

fn masure_suite(_: &mut ChaCha8Rng) -> Outcome {
    let mut out = Outcome::new();
    for (name, m) in shipped() {
        let pts = if m.dim() == 1 { grid(&m, 3, qf(1, 2)) } else { grid(&m, 1, q(1)) };
        for a in 0..m.charts() {
            for b in (0..m.charts()).filter(|&b| b != a) {
                let inter = match m.intersect_apartments(a, b) {
                    Ok(i) => i,
                    Err(Error::EmptyIntersection(..)) => {
                        let none =
                            pts.iter().all(|p| m.representation(p, a).is_none() || m.representation(p, b).is_none());
                        out.check(none, || format!("{name}: charts {a}, {b} reported disjoint"));
                        continue;
                    }
                    Err(e) => {
                        out.check(false, || format!("{name}: intersect {a} {b}: {e}"));
                        continue;
                    }
                };
                out.check(inter.region.is_enclosed(), || format!("{name}: {a} ∩ {b} not enclosed"));
                let phi = inter.weyl.to_affine(m.system());
                for p in &pts {
                    let Some(x) = m.representation(p, a) else { continue };
                    let inside = m.representation(p, b).is_some();
                    out.check(inter.region.contains(&x) == inside, || format!("{name}: {p} vs {a} ∩ {b}"));
                    if inside {
                        let image = m.representation(p, b).unwrap();
                        out.check(phi.apply(&x) == image, || format!("{name}: {p} not fixed by {a} -> {b}"));
                    }
                }
            }
        }
        let plus = SectorGermRef::plus_infinity(0);
        let minus = SectorGermRef::minus_infinity(0);
        for p in &pts {
            let rp = m.retraction(&plus, p).unwrap();
            let rm = m.retraction(&minus, p).unwrap();
            let in_a0 = m.representation(p, 0).is_some();
            out.check((rp == rm) == in_a0, || format!("{name}: ρ+ = ρ- fails to detect A0 at {p}"));
            out.check(m.characterize_standard(p).unwrap() == in_a0, || format!("{name}: characterize {p}"));
        }
        for germ in [&plus, &minus] {
            for p in pts.iter().step_by(3) {
                for r in pts.iter().step_by(4).filter(|r| r.chart == p.chart) {
                    if leq(m.system(), &p.coord, &r.coord) != Some(true) {
                        continue;
                    }
                    let ok = match m.retract_segment(germ, p, r) {
                        Ok((path, lambda)) => {
                            check_lambda_path(m.system(), &path, &lambda).ok() == Some(PathCheck::Valid)
                                && path.start == m.retraction(germ, p).unwrap()
                                && path.end() == m.retraction(germ, r).unwrap()
                        }
                        Err(_) => false,
                    };
                    out.check(ok, || format!("{name}: retracted [{p}, {r}] is not a λ-path"));
                }
            }
        }
        let charts: Vec<usize> = m.charts_with_germ(&plus).unwrap().into_iter().map(|(c, _)| c).collect();
        let d = |a: usize, b: usize| m.apartment_distance(a, b, Some(&plus)).unwrap();
        for &a in &charts {
            for &b in &charts {
                out.check(d(a, b) == d(b, a) && (d(a, b) == 0) == (a == b), || format!("{name}: d({a},{b})"));
                for &c in &charts {
                    out.check(d(a, c) <= d(a, b) + d(b, c), || format!("{name}: triangle {a} {b} {c}"));
                }
            }
        }
        let bounds = CatalogBounds { chimney_half_width: q(0), ..CatalogBounds::default() };
        let mao = check_axioms(&m, &[Axiom::Mao], &bounds).map(|r| r.all_passed());
        out.check(mao == Ok(true), || format!("{name}: MAO {mao:?}"));
    }
    out
}

// Criterion 6.

fn order_suite(_: &mut ChaCha8Rng) -> Outcome {
    let mut out = Outcome::new();
    let affine = [
        ("affine-one-fold", models::affine_one_fold()),
        ("affine-two-fold", models::affine_two_fold()),
        ("affine-strip", models::affine_realized_strip()),
    ];
    for (name, m) in &affine {
        let d = DeltaFunctional::new(m).unwrap();
        let pts = grid(m, 1, q(1));
        let values: Vec<Q> = pts.iter().map(|p| d.value(p).unwrap()).collect();
        let plus = SectorGermRef::plus_infinity(0);
        let charts: Vec<usize> = m.charts_with_germ(&plus).unwrap().into_iter().map(|(c, _)| c).collect();
        let diameter = charts
            .iter()
            .flat_map(|&a| charts.iter().map(move |&b| (a, b)))
            .map(|(a, b)| m.apartment_distance(a, b, Some(&plus)).unwrap())
            .max()
            .unwrap_or(0);
        let search = ChainSearch::new(m, pts.clone(), diameter + 1);
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                if values[i] < values[j] {
                    let ok = d.certify(&pts[i], &pts[j]).map(|c| d.verify(&c, &pts[i], &pts[j]));
                    out.check(ok == Ok(true), || format!("{name}: no certificate {} < {}: {ok:?}", pts[i], pts[j]));
                } else if values[i] == values[j] && i != j {
                    let cmp = d.compare(&pts[i], &pts[j]).unwrap();
                    if cmp.same_class {
                        continue;
                    }
                    out.check(cmp.relation == Relation::NC, || format!("{name}: {} {} not NC", pts[i], pts[j]));
                    out.check(!search.reachable(i, j), || format!("{name}: chain {} -> {}", pts[i], pts[j]));
                }
            }
        }
    }
    out
}

// Criterion 7.

fn realize_suite(_: &mut ChaCha8Rng) -> Outcome {
    let mut out = Outcome::new();
    let rank_one = RootGeneratingSystem::rank_one();
    let a = rank_one.root(0).clone();
    let interval = HalfSpaceSet::enclosed(vec![HalfSpace::new(a.clone(), q(0)), HalfSpace::new(neg(&a), q(2))]);
    let aff = RootGeneratingSystem::affine_a1();
    let (a0, a1) = (aff.root(0).clone(), aff.root(1).clone());
    let strip = HalfSpaceSet::enclosed(vec![HalfSpace::new(a0.clone(), q(0)), HalfSpace::new(neg(&a0), q(2))]);
    let corner = HalfSpaceSet::enclosed(vec![HalfSpace::new(a0, q(0)), HalfSpace::new(a1, q(1))]);
    let cases = [("[0,2]", rank_one.clone(), interval), ("strip", aff.clone(), strip), ("corner", aff, corner)];
    for (name, s, p) in cases {
        let n = s.dim();
        match realize_intersection(Apartment::new(s), &p) {
            Ok((m, k)) => {
                let inter = m.intersect_apartments(k, 0);
                let ok = inter
                    .as_ref()
                    .is_ok_and(|i| i.region.same_set(&p, n) && i.weyl.to_affine(m.system()).is_identity());
                out.check(ok, || format!("{name}: A{k} ∩ A0 = {inter:?}"));
                let ax =
                    check_axioms(&m, &[Axiom::Ma1, Axiom::MaAfIi], &CatalogBounds::default()).map(|r| r.all_passed());
                out.check(ax == Ok(true), || format!("{name}: axioms {ax:?}"));
            }
            Err(e) => out.check(false, || format!("{name}: {e}")),
        }
    }
    let one = Apartment::new(rank_one);
    let not_minimal = HalfSpaceSet::enclosed(vec![
        HalfSpace::new(a.clone(), q(0)),
        HalfSpace::new(a.clone(), q(1)),
        HalfSpace::new(neg(&a), q(2)),
    ]);
    let got = realize_intersection(one.clone(), &not_minimal).err();
    out.check(got == Some(Error::NotMinimalWriting(1)), || format!("redundant writing: {got:?}"));
    let thin = HalfSpaceSet::enclosed(vec![HalfSpace::new(a.clone(), q(0)), HalfSpace::new(neg(&a), q(0))]);
    let got = realize_intersection(one, &thin).err();
    out.check(got == Some(Error::EmptyInterior), || format!("thin input: {got:?}"));
    out
}

// Criterion 8.

fn axiom_suite(_: &mut ChaCha8Rng) -> Outcome {
    let mut out = Outcome::new();
    let bounds = CatalogBounds::default();
    for (name, m) in shipped() {
        match check_axioms(&m, &Axiom::ALL, &bounds) {
            Ok(r) => out.check(r.all_passed(), || format!("{name}: {:?}", r.results)),
            Err(e) => out.check(false, || format!("{name}: {e}")),
        }
    }
    let broken = [
        ("tripod_missing_chart", models::tripod_missing_chart(), Axiom::MaIiiPairs),
        ("tampered_transition", models::tampered_transition(), Axiom::MaAfIi),
    ];
    for (name, m, axiom) in broken {
        let r = check_axioms(&m, &Axiom::ALL, &bounds).unwrap();
        let failed = r.result(axiom).is_some_and(|a| !a.passed && a.witness.is_some());
        out.check(failed, || format!("{name}: {} not reported with a witness", axiom.name()));
    }
    let got = build_complex(models::off_wall_spec()).err();
    out.check(matches!(got, Some(Error::LevelNotInLambda { .. })), || format!("off-wall gluing: {got:?}"));
    out
}
