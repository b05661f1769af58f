//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::process::ExitCode;
use std::time::Instant;

use cyclic_cat::{CyclicMorphism as M, CyclicObject};
use frob_algebra::{check_knowledgeable, presets, Conventions, LinearMap, Q};
use graph_model::check_model_equivalence;
use plcw_core::surfaces::{bigon_sphere, closed_surface, square_torus, triangle_sphere, triangle_torus};
use plcw_core::{complex_from_words, enumerate_structures, parse_surface, random_move, Bordism, PlcwComplex, DEFAULT_BUDGET};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use state_sum::generators::torus;
use state_sum::{evaluate, evaluate_closed, verify_generator_relations, StateSumData, Word};

const BUDGET: usize = 10_000_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Counts instances and failures of the Λ_r relations.
struct Tally {
    total: usize,
    failed: Vec<String>,
}

impl Tally {
    fn eq(&mut self, what: &str, lhs: M, rhs: M) {
        self.total += 1;
        if lhs != rhs && self.failed.len() < 5 {
            self.failed.push(what.to_string());
        }
    }
}

fn criterion_1() -> Outcome {
    let d = |n, i, r| M::delta(n, i, r).unwrap();
    let s = |n, i, r| M::sigma(n, i, r).unwrap();
    let t = |n, k, r| M::tau_pow(n, k, r).unwrap();
    let c = |g: M, f: M| g.compose(&f).unwrap();
    let mut tally = Tally { total: 0, failed: Vec::new() };
    for r in 1..=5u32 {
        for n in 0..=6usize {
            let at = |name: &str| format!("{name} n={n} r={r}");
            if n >= 1 {
                for j in 0..=n {
                    for i in 0..j {
                        tally.eq(&at("δδ"), c(d(n + 1, j, r), d(n, i, r)), c(d(n + 1, i, r), d(n, j - 1, r)));
                    }
                }
                for j in 0..n {
                    for i in 0..=j {
                        tally.eq(&at("σσ"), c(s(n, j, r), s(n + 1, i, r)), c(s(n, i, r), s(n + 1, j + 1, r)));
                    }
                    for i in 0..=(n + 1) {
                        let rhs = if i < j {
                            c(d(n, i, r), s(n - 1, j - 1, r))
                        } else if i == j || i == j + 1 {
                            M::identity(CyclicObject::new(n, r).unwrap())
                        } else {
                            c(d(n, i - 1, r), s(n - 1, j, r))
                        };
                        tally.eq(&at("σδ"), c(s(n, j, r), d(n + 1, i, r)), rhs);
                    }
                }
                for i in 1..=n {
                    tally.eq(&at("τδ"), c(t(n, 1, r), d(n, i, r)), c(d(n, i - 1, r), t(n - 1, 1, r)));
                }
                tally.eq(&at("τδ_0"), c(t(n, 1, r), d(n, 0, r)), d(n, n, r));
                let top = M::phi_top(n, r).unwrap();
                let bot = M::phi_bottom(n, r).unwrap();
                let ni = n as i64;
                tally.eq(&at("τφ 1"), c(t(1, 1, r), top.clone()), c(bot.clone(), t(n, ni, r)));
                tally.eq(&at("τφ 2"), c(t(1, 1, r), bot.clone()), c(top.clone(), t(n, 1, r)));
                tally.eq(&at("τφ 3"), c(t(1, -1, r), top.clone()), c(bot.clone(), t(n, -1, r)));
                tally.eq(&at("τφ 4"), c(t(1, -1, r), bot), c(top, t(n, -ni, r)));
            }
            for i in 1..=n {
                tally.eq(&at("τσ"), c(t(n, 1, r), s(n, i, r)), c(s(n, i - 1, r), t(n + 1, 1, r)));
            }
            tally.eq(&at("τσ_0"), c(t(n, 1, r), s(n, 0, r)), c(s(n, n, r), t(n + 1, 2, r)));
            // τ_n has order exactly r(n + 1).
            let order = r as usize * (n + 1);
            let mut acc = M::identity(CyclicObject::new(n, r).unwrap());
            let mut exact = true;
            for k in 1..=order {
                acc = c(t(n, 1, r), acc);
                exact &= acc.is_identity() == (k == order);
            }
            tally.total += 1;
            if !exact {
                tally.failed.push(at("τ order"));
            }
        }
    }
    outcome(tally.failed.is_empty(), format!("{} relation instances; failures: {:?}", tally.total, tally.failed))
}

fn criterion_2() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (g, r) in [(1usize, 1u32), (1, 2), (1, 3), (2, 2), (0, 3), (2, 3)] {
        let expected = if (2 - 2 * g as i64).rem_euclid(i64::from(r)) == 0 { (r as usize).pow(2 * g as u32) } else { 0 };
        let got = enumerate_structures(&closed_surface(g), r, DEFAULT_BUDGET).map(|e| e.class_count());
        let ok = got.as_ref().is_ok_and(|&n| n == expected);
        pass &= ok;
        lines.push(format!("(g={g},r={r}) {got:?}/{expected}"));
    }
    outcome(pass, lines.join(" "))
}

fn surface(text: &str) -> PlcwComplex {
    parse_surface(text).unwrap().complex
}

fn criterion_3() -> Outcome {
    let complexes: Vec<(&str, PlcwComplex)> = vec![
        ("square torus", square_torus()),
        ("triangle torus", triangle_torus()),
        ("triangle sphere", triangle_sphere()),
        ("bigon sphere", bigon_sphere(3)),
        (
            "genus two",
            complex_from_words(&[("f", &["+a", "+b", "-a", "-b", "+x"]), ("g", &["-x", "+c", "+d", "-c", "-d"])]).unwrap(),
        ),
        ("disk", surface("edge a u u\nface f +a\nboundary closed out 1 +a\n")),
        ("two-face disk", surface("edge a u u\nedge c u u\nface f +a -c\nface g +c\nboundary closed out 1 +a\n")),
        (
            "cylinder",
            surface("edge a u u\nedge b w w\nedge c u w\nface f -a +c +b -c\nboundary closed in 1 -a\nboundary closed out 1 +b\n"),
        ),
        (
            "pants",
            surface(
                "edge a u u\nedge b v v\nedge c w w\nedge e1 u w\nedge e2 v w\nface f -a +e1 +c -e2 -b +e2 -e1\n\
                 boundary closed in 1 -a\nboundary closed in 1 -b\nboundary closed out 1 +c\n",
            ),
        ),
        (
            "open strip",
            surface("edge i p q\nedge o s t\nedge f1 p s\nedge f2 t q\nface f -i +f1 +o +f2\nboundary open in -i\nboundary open out +o\n"),
        ),
        ("punctured torus", surface("edge a u u\nedge b u u\nedge c u w\nface f +a +b -a -b +c -c\npuncture w\n")),
    ];
    let mut markings = 0;
    let mut bad = Vec::new();
    for (name, k) in &complexes {
        for r in 1..=3 {
            match check_model_equivalence(k, r, DEFAULT_BUDGET) {
                Ok(rep) => {
                    markings += rep.admissible;
                    if !rep.pass {
                        bad.push(format!("{name} r={r}"));
                    }
                }
                Err(e) => bad.push(format!("{name} r={r}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{} complexes, {markings} admissible markings; failures: {bad:?}", complexes.len()))
}

fn criterion_4() -> Outcome {
    let a = presets::clifford1();
    let conv = Conventions::default();
    let mut parts = Vec::new();
    let mut pass = true;
    let one = {
        let mut v = vec![Q::from_integer(0.into()); a.dim()];
        v[0] = Q::from_integer(1.into());
        v
    };
    for r in [2u32, 4] {
        let gc = graded_center::graded_center(&a, r, &conv).unwrap();
        let w = a.window_element();
        let window = w == one;
        let dims = gc.dims().iter().all(|&d| d == 1);
        let nak = a.nakayama().unwrap();
        let n2 = nak.after(&nak) == LinearMap::identity(&a.space);
        let closed = gc.family.check(&conv).passed();
        let known = check_knowledgeable(&a, &gc.family, &gc.iota, &gc.pi, &conv).unwrap().passed();
        pass &= window && dims && n2 && closed && known;
        let wtxt = w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        parts.push(format!(
            "r={r}: window element ({wtxt}) {}, dims {:?} {}, N^2 = id {}, closed {}, knowledgeable {}",
            verdict(window),
            gc.dims(),
            verdict(dims),
            verdict(n2),
            verdict(closed),
            verdict(known)
        ));
    }
    outcome(pass, parts.join("; "))
}

fn verdict(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn criterion_5() -> Outcome {
    let r = 4u32;
    let conv = Conventions::default();
    let data = StateSumData::new(&presets::clifford1(), r).unwrap();
    let fam = &data.center.family;
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for x in 0..4 {
        for z in 0..4 {
            let g = gcd(gcd(x, z), 4);
            let alg = fam.torus(x, z, &conv);
            let reference = fam.torus(g, 0, &conv);
            let ss = evaluate_closed(&torus(r, x, z).unwrap(), &data, BUDGET).unwrap();
            if alg != reference || ss != alg {
                bad.push(format!("({x},{z}): algebraic {alg}, state sum {ss}, T({g},0) = {reference}"));
            }
            values.push(format!("{alg}"));
        }
    }
    outcome(bad.is_empty(), format!("16 pairs, values {}; failures: {bad:?}", values.join(" ")))
}

fn random_bordism(r: u32, rng: &mut StdRng, min_len: usize) -> (Word, Bordism) {
    loop {
        let start = match rng.gen_range(0..3) {
            0 => vec![],
            1 => vec![Some(rng.gen_range(0..i64::from(r)))],
            _ => vec![None],
        };
        let len = rng.gen_range(min_len..=4);
        let w = Word::random(r, &start, len, &mut |n| rng.gen_range(0..n));
        let b = w.bordism(r).unwrap();
        if b.complex.faces.len() <= 8 {
            return (w, b);
        }
    }
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let setups = [(presets::clifford1(), 2u32), (presets::clifford2_twisted(), 4)];
    let mut moves = 0;
    let mut kinds = [0usize; 2];
    let mut bad = Vec::new();
    for i in 0..10 {
        let (alg, r) = &setups[i % 2];
        let data = StateSumData::new(alg, *r).unwrap();
        let (w, mut b) = random_bordism(*r, &mut rng, 1);
        let expected = evaluate(&b, &data, BUDGET).unwrap();
        for step in 0..100 {
            let Some((mv, next)) = random_move(&b, 8, &mut |n| rng.gen_range(0..n)) else {
                bad.push(format!("{w}: no legal move at step {step}"));
                break;
            };
            kinds[usize::from(matches!(mv, plcw_core::AnyMove::Elementary(_)))] += 1;
            b = next;
            moves += 1;
            if evaluate(&b, &data, BUDGET).unwrap() != expected {
                bad.push(format!("{} r={r} {w}: step {step} {mv}", alg.name));
                break;
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("10 bordisms, {moves} moves ({} fixed, {} elementary); failures: {bad:?}", kinds[0], kinds[1]),
    )
}

fn criterion_7() -> Outcome {
    let data = StateSumData::new(&presets::clifford1(), 2).unwrap();
    let rep = verify_generator_relations(&data, BUDGET).unwrap();
    let kinds = rep.summary().len();
    outcome(
        rep.passed(),
        format!("{} instances of {kinds} relations; failures: {:?}", rep.entries.len(), rep.failed_relations()),
    )
}

fn criterion_8() -> Outcome {
    let data = StateSumData::new(&presets::clifford1(), 2).unwrap();
    let mut rng = StdRng::seed_from_u64(8);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let (w, whole) = random_bordism(2, &mut rng, 2);
        let n = w.layers.len();
        let cut = rng.gen_range(1..n);
        let lhs = evaluate(&whole, &data, BUDGET).unwrap();
        let first = evaluate(&w.bordism_of(0..cut, 2).unwrap(), &data, BUDGET).unwrap();
        let second = evaluate(&w.bordism_of(cut..n, 2).unwrap(), &data, BUDGET).unwrap();
        if lhs != second.after(&first) {
            bad.push(format!("{w} cut at {cut}"));
        }
    }
    outcome(bad.is_empty(), format!("50 words of length 2 to 4; failures: {bad:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Λ_r relations, n ≤ 6, r ≤ 5", criterion_1),
        ("r-spin structure counts", criterion_2),
        ("fixed moves vs Λ_r-structure isomorphisms", criterion_3),
        ("graded center of Cℓ(1), r = 2, 4", criterion_4),
        ("torus invariant T(x,z) = T(gcd(x,z,r),0), r = 4", criterion_5),
        ("evaluation invariant under moves", criterion_6),
        ("generator relations, Cℓ(1), r = 2", criterion_7),
        ("functoriality of evaluation", criterion_8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        all &= o.pass;
        println!(
            "criterion {} {}: {} [{:.2} s] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
