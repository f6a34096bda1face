//! The acceptance suite: every criterion runs exactly as stated and prints
//! one PASS/FAIL line. The process exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::rng;
use pathcoalg::balancedforms::{
    balanced_space_bruteforce, compute_f, compute_incidence_params, form_from_f, form_from_params,
    is_balanced, radicals, satisfies_equations, BilinearForm,
};
use pathcoalg::coalgebra::BasisCoalgebra;
use pathcoalg::element::Element;
use pathcoalg::exactfield::{RootOfUnity, Scalar};
use pathcoalg::frobenius::{
    admits_hopf, analyze_family, analyze_incidence, analyze_path, check_condition_d,
    check_condition_d_incidence, classify, iso_invariants, CanonicalKey, Classification,
    ClassifyOutcome, HopfFamily, Summand, SummandKey, Verdict, WindowDeclaration,
};
use pathcoalg::hopf::{
    build_hn, comul_ainf, verify_coalgebra_iso_cn, verify_hopf, AInfLabel, FiniteGroupData,
    QuantumLineProduct,
};
use pathcoalg::incidencecoalg::{embed, tensor_iso_check, IncidenceSubcoalgebra, Poset};
use pathcoalg::quivercoalg::{LineKind, Path, PathSubcoalgebra, WindowedFamily};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

const BOUND: usize = 64;

fn unit_vector(len: usize, k: usize) -> Vec<Scalar> {
    (0..len)
        .map(|i| {
            if i == k {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

fn path_instances() -> Vec<PathSubcoalgebra> {
    let mut r = rng(1);
    (0..200)
        .map(|_| common::random_path_subcoalgebra(&mut r))
        .collect()
}

fn incidence_instances() -> Vec<IncidenceSubcoalgebra> {
    let mut r = rng(2);
    (0..200)
        .map(|_| common::random_incidence_subcoalgebra(&mut r, 10))
        .collect()
}

fn criterion_1(instances: &[PathSubcoalgebra]) -> Outcome {
    let mut forms = 0;
    for (t, c) in instances.iter().enumerate() {
        let f = compute_f(c);
        let ns = balanced_space_bruteforce(c, BOUND).map_err(|e| format!("instance {t}: {e}"))?;
        if ns.len() != f.len() {
            return Err(format!(
                "instance {t}: nullspace dimension {} but |F| = {}",
                ns.len(),
                f.len()
            ));
        }
        for k in 0..f.len() {
            let form = form_from_f(c, &f, &unit_vector(f.len(), k)).unwrap();
            if let Err(e) = is_balanced(&form) {
                return Err(format!("instance {t}: form for F[{k}] unbalanced at {e:?}"));
            }
            if !satisfies_equations(&form) {
                return Err(format!(
                    "instance {t}: form for F[{k}] misses an assembled equation"
                ));
            }
            forms += 1;
        }
    }
    Ok(format!(
        "{} instances, {forms} closed-form forms checked",
        instances.len()
    ))
}

fn criterion_2(instances: &[IncidenceSubcoalgebra]) -> Outcome {
    let mut forms = 0;
    for (t, c) in instances.iter().enumerate() {
        let p = compute_incidence_params(c);
        let m = p.marked_count();
        let ns = balanced_space_bruteforce(c, BOUND).map_err(|e| format!("instance {t}: {e}"))?;
        if ns.len() != m {
            return Err(format!(
                "instance {t}: nullspace dimension {} but {m} marked classes",
                ns.len()
            ));
        }
        for k in 0..m {
            let form = form_from_params(c, &p, &unit_vector(m, k)).unwrap();
            if let Err(e) = is_balanced(&form) {
                return Err(format!(
                    "instance {t}: form for class {k} unbalanced at {e:?}"
                ));
            }
            if !satisfies_equations(&form) {
                return Err(format!(
                    "instance {t}: form for class {k} misses an assembled equation"
                ));
            }
            forms += 1;
        }
    }
    Ok(format!(
        "{} instances, {forms} closed-form forms checked",
        instances.len()
    ))
}

/// Radical triviality of the all-ones closed-form form, `(left, right)`.
fn ones_radicals<C: BasisCoalgebra>(form: &BilinearForm<'_, C>) -> (bool, bool) {
    let r = radicals(form);
    (r.left_trivial(), r.right_trivial())
}

fn criterion_3(paths: &[PathSubcoalgebra], incs: &[IncidenceSubcoalgebra]) -> Outcome {
    // (verdict (c), left radical trivial, right radical trivial)
    let mut rows: Vec<(bool, bool, bool)> = Vec::new();
    let mut positives = 0;
    for (t, c) in paths.iter().enumerate() {
        let left_c = analyze_path(c).left == Verdict::Yes;
        let f = compute_f(c);
        let d = check_condition_d(c, &f).is_ok();
        if left_c != d {
            return Err(format!("path instance {t}: (c) = {left_c}, (d) = {d}"));
        }
        let form = form_from_f(c, &f, &vec![Scalar::one(); f.len()]).unwrap();
        let (l, r) = ones_radicals(&form);
        rows.push((left_c, l, r));
        positives += usize::from(left_c);
    }
    for (t, c) in incs.iter().enumerate() {
        let left_c = analyze_incidence(c).left == Verdict::Yes;
        let p = compute_incidence_params(c);
        let d = check_condition_d_incidence(c, &p).is_ok();
        if left_c != d {
            return Err(format!("incidence instance {t}: (c) = {left_c}, (d) = {d}"));
        }
        let form = form_from_params(c, &p, &vec![Scalar::one(); p.marked_count()]).unwrap();
        let (l, r) = ones_radicals(&form);
        rows.push((left_c, l, r));
        positives += usize::from(left_c);
    }
    let left_side = rows.iter().all(|&(c, l, _)| c == l);
    let right_side = rows.iter().all(|&(c, _, r)| c == r);
    let sides = match (left_side, right_side) {
        (true, true) => "both sides",
        (true, false) => "left side only",
        (false, true) => "right side only",
        (false, false) => {
            let bad_l = rows.iter().filter(|&&(c, l, _)| c != l).count();
            let bad_r = rows.iter().filter(|&&(c, _, r)| c != r).count();
            return Err(format!(
                "(c) ⟺ (d) holds, but no side matches the radical test \
                 ({bad_l} left mismatches, {bad_r} right mismatches)"
            ));
        }
    };
    Ok(format!(
        "(c) ⟺ (d) on {} instances ({positives} co-Frobenius); radical test matches on {sides}",
        rows.len()
    ))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut arrowless = 0;
    for t in 0..50 {
        let q = common::random_acyclic_quiver(&mut r, 6, 8);
        let no_arrows = q.arrow_count() == 0;
        arrowless += usize::from(no_arrows);
        let c = PathSubcoalgebra::full(q).unwrap();
        let yes = analyze_path(&c).left == Verdict::Yes;
        if yes != no_arrows {
            return Err(format!(
                "path instance {t}: verdict {yes}, arrowless {no_arrows}"
            ));
        }
    }
    let mut discrete = 0;
    for t in 0..50 {
        let p = if r.gen_bool(0.25) {
            Poset::antichain(r.gen_range(1..=8))
        } else {
            common::random_poset(&mut r, 10)
        };
        let is_discrete = p.is_discrete();
        discrete += usize::from(is_discrete);
        let yes = analyze_incidence(&IncidenceSubcoalgebra::full(p)).left == Verdict::Yes;
        if yes != is_discrete {
            return Err(format!(
                "poset instance {t}: verdict {yes}, discrete {is_discrete}"
            ));
        }
    }
    Ok(format!(
        "50 path coalgebras ({arrowless} arrowless), 50 incidence coalgebras ({discrete} discrete)"
    ))
}

fn criterion_5() -> Outcome {
    for n in 1..=8 {
        for s in 1..=4 {
            let f = WindowedFamily::cycle(n, s).unwrap();
            let dim = f.build().unwrap().dim();
            if dim != n * (s + 1) {
                return Err(format!("K[C{n},{s}] has dimension {dim}"));
            }
            let rep = analyze_family(&f).unwrap();
            if (rep.left, rep.right) != (Verdict::Yes, Verdict::Yes) {
                return Err(format!("K[C{n},{s}]: {} / {}", rep.left, rep.right));
            }
        }
    }
    let mut r = rng(5);
    let mut windows = 0;
    for s in 1..=4 {
        for a in [-12, -3, 0, 5] {
            let f = WindowedFamily::a_inf_constant((a, a + 3 * s + 4), s).unwrap();
            let rep = analyze_family(&f).unwrap();
            if (rep.left, rep.right) != (Verdict::Yes, Verdict::YesOnWindow) {
                return Err(format!("A∞|{s} on {a}..: {} / {}", rep.left, rep.right));
            }
            windows += 1;
        }
    }
    for _ in 0..20 {
        let end = r.gen_range(0..10);
        let f = WindowedFamily::a0_inf(end, common::random_r(&mut r, (0, end), 3)).unwrap();
        let rep = analyze_family(&f).unwrap();
        let at = rep.right_witness.as_ref().map(|w| w.at.clone());
        if (rep.left, rep.right) != (Verdict::Yes, Verdict::No) || at.as_deref() != Some("0") {
            return Err(format!(
                "{f:?}: {} / {}, witness {at:?}",
                rep.left, rep.right
            ));
        }
        windows += 1;
    }
    Ok(format!("32 cycle coalgebras, {windows} line windows"))
}

/// The key a descriptor must classify to, computed from the descriptor alone.
fn expected_key(d: &Option<WindowedFamily>) -> SummandKey {
    match d {
        None => SummandKey::Point,
        Some(WindowedFamily::Cycle { n, s }) => SummandKey::Cycle { n: *n, s: *s },
        Some(WindowedFamily::Line {
            kind: LineKind::AInf,
            window,
            r,
        }) => SummandKey::AInf {
            offsets: r
                .iter()
                .enumerate()
                .map(|(i, x)| x - window.0 - i as i64)
                .collect(),
        },
        Some(WindowedFamily::Line {
            kind: LineKind::A0Inf,
            r,
            ..
        }) => SummandKey::A0Inf { r: r.clone() },
    }
}

fn materialize(descs: &[Option<WindowedFamily>]) -> (PathSubcoalgebra, Vec<WindowDeclaration>) {
    let parts: Vec<PathSubcoalgebra> = descs
        .iter()
        .map(|d| {
            d.as_ref()
                .map_or_else(common::point, |f| f.build().unwrap())
        })
        .collect();
    let sum = PathSubcoalgebra::direct_sum(&parts.iter().collect::<Vec<_>>()).unwrap();
    let decls = descs
        .iter()
        .enumerate()
        .filter_map(|(i, d)| WindowDeclaration::for_family(d.as_ref()?, &format!("s{i}_")))
        .collect();
    (sum, decls)
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let mut summands = 0;
    for t in 0..100 {
        let mut descs: Vec<Option<WindowedFamily>> = (0..r.gen_range(1..=5))
            .map(|_| common::random_descriptor(&mut r))
            .collect();
        descs.shuffle(&mut r);
        let (c, decls) = materialize(&descs);
        let out = classify(&c, &decls).map_err(|e| format!("instance {t}: {e}"))?;
        let ClassifyOutcome::Classified(cl) = out else {
            return Err(format!("instance {t}: rejected: {out:?}"));
        };
        let mut expected: Vec<SummandKey> = descs.iter().map(expected_key).collect();
        expected.sort();
        if iso_invariants(&cl) != CanonicalKey(expected.clone()) {
            return Err(format!(
                "instance {t}: got {:?}, expected {expected:?}",
                iso_invariants(&cl)
            ));
        }
        summands += descs.len();
    }
    Ok(format!("100 direct sums, {summands} summands"))
}

fn criterion_7() -> Outcome {
    let minus = RootOfUnity::new(2, 1).unwrap();
    let one = RootOfUnity::one();
    let rows: [(usize, usize, RootOfUnity); 5] = [
        (2, 1, minus),
        (4, 1, minus),
        (3, 2, RootOfUnity::new(3, 1).unwrap()),
        (6, 2, RootOfUnity::new(3, 1).unwrap()),
        (4, 3, RootOfUnity::new(4, 1).unwrap()),
    ];
    let mut checked = 0;
    let mut refused = 0;
    for (n, s, q) in rows {
        let mut groups = vec![
            (format!("C{n}"), FiniteGroupData::cyclic(n, q).unwrap()),
            (
                format!("C{n}×C2 (χ(d)=1)"),
                FiniteGroupData::cyclic_times_c2(n, q, one).unwrap(),
            ),
            (
                format!("C{n}×C2 (χ(d)=−1)"),
                FiniteGroupData::cyclic_times_c2(n, q, minus).unwrap(),
            ),
        ];
        if n == 2 {
            // the only row where a dihedral group has a central g of order n
            for m in [2, 6] {
                for chi_t in [one, minus] {
                    groups.push((
                        format!("D{m} (χ(t)={chi_t})"),
                        FiniteGroupData::dihedral(m, chi_t).unwrap(),
                    ));
                }
            }
        }
        for (gname, g) in &groups {
            let trivial_power = (0..g.order()).all(|h| g.chi(h).pow(s as i64 + 1).is_one());
            for alpha in [0, 1] {
                let built = build_hn(s, q, g, Scalar::from_integer(alpha));
                if alpha == 1 && !trivial_power {
                    if built.is_ok() {
                        return Err(format!("({n},{s}) over {gname}: α = 1 accepted"));
                    }
                    refused += 1;
                    continue;
                }
                let h = built.map_err(|e| format!("({n},{s}) over {gname}, α={alpha}: {e}"))?;
                let rep = verify_hopf(&h);
                if !rep.passed() || h.dim() != g.order() * (s + 1) {
                    return Err(format!(
                        "({n},{s}) over {gname}, α={alpha}: {:?}",
                        rep.failure
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} tables verified, {refused} α ≠ 0 requests refused"
    ))
}

/// `p_{i,i+u}` as a path in a built `K[A∞|s]` window starting at `a`.
fn label_path(a: i64, l: AInfLabel) -> Path {
    let start = (l.i - a) as usize;
    if l.u == 0 {
        Path::Vertex(start)
    } else {
        Path::Arrows((start..start + l.u).collect())
    }
}

fn criterion_8() -> Outcome {
    let mut triples = 0u64;
    let mut pairs = 0u64;
    for s in 1..=3usize {
        let q = RootOfUnity::new(s as u32 + 1, 1).unwrap();
        // Products of window labels land in [-12, 12 + s + 1 + s].
        let a = -14;
        let c = WindowedFamily::a_inf_constant((a, 20), s as i64)
            .unwrap()
            .build()
            .unwrap();
        let quiver = c.quiver();
        let to_label = |p: &Path| AInfLabel {
            i: quiver.source(p) as i64 + a,
            u: p.len(),
        };
        let comul = |l: AInfLabel| -> Element<(AInfLabel, AInfLabel)> {
            c.comul(&label_path(a, l))
                .unwrap()
                .map_labels(|(x, y)| (to_label(x), to_label(y)))
        };
        let labels: Vec<AInfLabel> = (-6..=6)
            .flat_map(|i| (0..=s).map(move |u| AInfLabel { i, u }))
            .collect();
        for l in &labels {
            if comul(*l) != comul_ainf(*l) {
                return Err(format!("s={s}: coproduct formulas differ at {l:?}"));
            }
        }
        for alpha in [0, 1] {
            let prod = QuantumLineProduct::new(s, q, Scalar::from_integer(alpha)).unwrap();
            let mut table = BTreeMap::new();
            for &x in &labels {
                for &y in &labels {
                    table.insert((x, y), prod.ainf(x, y).unwrap());
                }
            }
            for &x in &labels {
                for &y in &labels {
                    let xy = &table[&(x, y)];
                    for &z in &labels {
                        let left = prod.ainf_elements(xy, &Element::basis(z)).unwrap();
                        let right = prod
                            .ainf_elements(&Element::basis(x), &table[&(y, z)])
                            .unwrap();
                        if left != right {
                            return Err(format!(
                                "s={s}, α={alpha}: not associative at {x:?} {y:?} {z:?}"
                            ));
                        }
                        triples += 1;
                    }
                    // Δ(xy) = Δ(x)Δ(y), factors multiplied componentwise
                    let lhs = xy.map_linear(|l| comul(*l));
                    let mut rhs = Element::zero();
                    for (&(x1, x2), cx) in comul(x).iter() {
                        for (&(y1, y2), cy) in comul(y).iter() {
                            let c = cx * cy;
                            for (&l, cl) in prod.ainf(x1, y1).unwrap().iter() {
                                for (&r, cr) in prod.ainf(x2, y2).unwrap().iter() {
                                    rhs.add_term((l, r), &(&c * cl) * cr);
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return Err(format!(
                            "s={s}, α={alpha}: Δ not multiplicative at {x:?} {y:?}"
                        ));
                    }
                    pairs += 1;
                    // shifting the first factor shifts the product; so does
                    // shifting the second by a multiple of s+1
                    for t in [-3i64, 1, 2] {
                        let shift = |e: &Element<AInfLabel>, t: i64| {
                            e.map_labels(|l| AInfLabel { i: l.i + t, u: l.u })
                        };
                        let first = prod.ainf(AInfLabel { i: x.i + t, u: x.u }, y).unwrap();
                        let tt = t * (s as i64 + 1);
                        let second = prod
                            .ainf(
                                x,
                                AInfLabel {
                                    i: y.i + tt,
                                    u: y.u,
                                },
                            )
                            .unwrap();
                        if first != shift(xy, t) || second != shift(xy, tt) {
                            return Err(format!("s={s}, α={alpha}: shift {t} changes {x:?} {y:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{triples} triples associative, {pairs} pairs multiplicative and shift-invariant"
    ))
}

fn criterion_9() -> Outcome {
    let mut pairs = 0;
    for (n, s, alpha) in [(2, 1, 0), (4, 1, 1), (6, 2, 0)] {
        let q = RootOfUnity::new(s as u32 + 1, 1).unwrap();
        let rep = verify_coalgebra_iso_cn(n, s, q, Scalar::from_integer(alpha)).unwrap();
        if !rep.passed() {
            return Err(format!("({n},{s},{alpha}): {:?}", rep.failure));
        }
        pairs += rep.pairs_checked;
    }
    Ok(format!("3 isomorphisms, {pairs} pulled-back products"))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let mut multi = 0;
    for t in 0..50 {
        let p = common::random_poset(&mut r, 12);
        let c = IncidenceSubcoalgebra::full(p);
        let rep = embed(&c).verify(&c);
        if !(rep.morphism && rep.counit && rep.injective) {
            return Err(format!("poset {t}: {rep:?}"));
        }
        multi += rep.multi_path_segments;
    }
    let mut products = 0;
    let mut sizes = 0;
    while products < 20 {
        let x = common::random_poset(&mut r, 12);
        let y = common::random_poset(&mut r, 12);
        if x.len() * y.len() > 60 {
            continue;
        }
        let rep = tensor_iso_check(&x, &y).unwrap();
        if !rep.passed() {
            return Err(format!("pair {products}: {rep:?}"));
        }
        sizes += rep.product_size;
        products += 1;
    }
    Ok(format!(
        "50 embeddings ({multi} segments with several paths), 20 product isos ({sizes} elements)"
    ))
}

fn classified(descs: &[Option<WindowedFamily>]) -> Classification {
    let (c, decls) = materialize(descs);
    match classify(&c, &decls).unwrap() {
        ClassifyOutcome::Classified(cl) => cl,
        other => panic!("fixture rejected: {other:?}"),
    }
}

/// Summands (`None` is a point), expected family, `s`, `n`.
type Fixture = (
    Vec<Option<WindowedFamily>>,
    HopfFamily,
    Option<usize>,
    Option<usize>,
);

fn criterion_11() -> Outcome {
    let cyc = |n, s| Some(WindowedFamily::cycle(n, s).unwrap());
    let line = |a, b, s| Some(WindowedFamily::a_inf_constant((a, b), s).unwrap());
    // (fixture, family, parameter s, parameter n)
    let fixtures: Vec<Fixture> = vec![
        (vec![None; 7], HopfFamily::III, None, None),
        (vec![None], HopfFamily::III, None, None),
        (vec![cyc(4, 1), cyc(4, 1)], HopfFamily::II, Some(1), Some(4)),
        (vec![cyc(3, 1)], HopfFamily::None, None, None),
        (vec![cyc(2, 1)], HopfFamily::II, Some(1), Some(2)),
        (
            vec![cyc(6, 2), cyc(6, 2), cyc(6, 2)],
            HopfFamily::II,
            Some(2),
            Some(6),
        ),
        (vec![cyc(4, 2)], HopfFamily::None, None, None),
        (vec![cyc(4, 1), cyc(2, 1)], HopfFamily::None, None, None),
        (
            vec![line(-4, 6, 2), line(0, 9, 2)],
            HopfFamily::I,
            Some(2),
            None,
        ),
        (
            vec![Some(
                WindowedFamily::a_inf((0, 4), vec![1, 3, 4, 5, 7]).unwrap(),
            )],
            HopfFamily::None,
            None,
            None,
        ),
        (
            vec![Some(
                WindowedFamily::a0_inf(5, vec![1, 2, 3, 4, 5, 6]).unwrap(),
            )],
            HopfFamily::None,
            None,
            None,
        ),
        (vec![None, cyc(2, 1)], HopfFamily::None, None, None),
    ];
    for (t, (descs, family, s, n)) in fixtures.iter().enumerate() {
        let cl = classified(descs);
        let h = admits_hopf(&cl);
        if (h.family, h.s, h.n, h.summand_count) != (*family, *s, *n, descs.len()) {
            return Err(format!(
                "fixture {t}: got {:?} s={:?} n={:?}, expected {family:?} s={s:?} n={n:?}",
                h.family, h.s, h.n
            ));
        }
        if *family == HopfFamily::I && h.note.is_none() {
            return Err(format!("fixture {t}: family I without its note"));
        }
        if cl
            .summands
            .iter()
            .any(|x| matches!(x, Summand::Line { .. }))
            != descs
                .iter()
                .any(|d| matches!(d, Some(WindowedFamily::Line { .. })))
        {
            return Err(format!("fixture {t}: summand types changed"));
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let paths = path_instances();
    let incs = incidence_instances();
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "balanced forms on path subcoalgebras",
            Box::new(|| criterion_1(&paths)),
        ),
        (
            "balanced forms on incidence subcoalgebras",
            Box::new(|| criterion_2(&incs)),
        ),
        (
            "criterion equivalence and radical side",
            Box::new(|| criterion_3(&paths, &incs)),
        ),
        ("full coalgebra sweep", Box::new(criterion_4)),
        ("canonical families", Box::new(criterion_5)),
        ("classification round trip", Box::new(criterion_6)),
        ("Hopf axiom grid", Box::new(criterion_7)),
        ("quantum-line product on the line", Box::new(criterion_8)),
        ("coalgebra isomorphism on cycles", Box::new(criterion_9)),
        ("embedding and tensor isomorphism", Box::new(criterion_10)),
        ("admits-Hopf trichotomy", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed [{:.1}s]",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
