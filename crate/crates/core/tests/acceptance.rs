//! Acceptance suite. Prints one line per criterion and exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use braidsat_core::braid::{closure_components, restrict_to_strands};
use braidsat_core::fdtc::{classify_fdtc, compatible_analysis, FdtcVerdict};
use braidsat_core::free_group::{generator_images, words_equal};
use braidsat_core::garside::{conjugate_test, inf_s, normal_form, super_summit_set, DEFAULT_SSS_BUDGET};
use braidsat_core::invariants::{alexander, genus_positive_braid, prime_factor_count, satellite_alexander_check};
use braidsat_core::reduction::{extract_regular_form, find_round_reduction};
use braidsat_core::satellite::{build_satellite, check_regular_positive, companion_stats, threshold_full_twists};
use braidsat_core::{BraidWord, LaurentPoly, RegularForm, SatelliteSpec};
use common::*;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5a7e_111e;

const C1_EXHAUSTIVE_LEN: usize = 6;
const C1_RANDOM_PAIRS: usize = 10_000;
const C1_RANDOM_LEN: usize = 12;
const C1_BUDGET: Duration = Duration::from_secs(120);
const C2_MAX_STRANDS: usize = 6;
const C3_SAMPLES: usize = 10_000;
const C4_PAIRS: usize = 200;
const C4_MAX_LEN: usize = 8;
const C4_BUDGET: Duration = Duration::from_secs(300);
const C5_BUDGET: Duration = Duration::from_secs(600);
const C6_SATELLITES: usize = 50;
const C6_BUDGET: Duration = Duration::from_secs(1800);
const C8_MAX_LEN: usize = 8;
const C9_SATELLITES: usize = 10;
const C9_BUDGET: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.1?}, budget {budget:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    // exhaustive B3: classes by normal form and by free-group images must coincide
    let words = all_words(3, C1_EXHAUSTIVE_LEN, false);
    let mut by_nf: HashMap<_, usize> = HashMap::new();
    let mut by_images: HashMap<_, usize> = HashMap::new();
    let mut reps: Vec<BraidWord> = Vec::new();
    for w in &words {
        let next = reps.len();
        let class = *by_nf.entry(normal_form(w)).or_insert(next);
        if class == next {
            reps.push(w.clone());
        }
        let img = *by_images.entry(generator_images(w)).or_insert(class);
        ensure(img == class, || format!("{w}: images class {img} but normal form class {class}"))?;
        ensure(words_equal(w, &reps[class]).map_err(|e| e.to_string())?, || {
            format!("{w} vs {}: same normal form, words_equal false", reps[class])
        })?;
    }
    ensure(by_images.len() == reps.len(), || "class counts differ".into())?;
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            ensure(!words_equal(a, b).map_err(|e| e.to_string())?, || {
                format!("{a} vs {b}: different normal forms, words_equal true")
            })?;
        }
    }
    // random B4/B5 pairs, half of them equal by construction
    let mut r = rng(SEED);
    let mut equal = 0;
    for i in 0..C1_RANDOM_PAIRS {
        let n = r.gen_range(4..6);
        let l1 = r.gen_range(0..=C1_RANDOM_LEN);
        let a = random_word(&mut r, n, l1);
        let b = if i % 2 == 0 {
            let moves = r.gen_range(1..8);
            scramble(&mut r, &a, moves)
        } else {
            let l2 = r.gen_range(0..=C1_RANDOM_LEN);
            random_word(&mut r, n, l2)
        };
        let nf_eq = normal_form(&a) == normal_form(&b);
        let we = words_equal(&a, &b).map_err(|e| e.to_string())?;
        ensure(nf_eq == we, || format!("{a} vs {b}: normal form {nf_eq}, words_equal {we}"))?;
        equal += usize::from(we);
    }
    within(start, C1_BUDGET)?;
    Ok(format!(
        "{} B3 words in {} classes, {C1_RANDOM_PAIRS} random pairs ({equal} equal), {:.1?}",
        words.len(),
        reps.len(),
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for n in 2..=C2_MAX_STRANDS {
        let twist = BraidWord::full_twist(n);
        for deleted in 0..n {
            let keep: BTreeSet<usize> = (0..n).filter(|&j| j != deleted).collect();
            let got = restrict_to_strands(&twist, &keep).map_err(|e| e.to_string())?;
            let want = BraidWord::full_twist(n - 1);
            ensure(words_equal(&got, &want).map_err(|e| e.to_string())?, || {
                format!("n={n}, deleting strand {}: {got}", deleted + 1)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} deletions for 2 ≤ n ≤ {C2_MAX_STRANDS}"))
}

fn criterion_3() -> Outcome {
    let mut r = rng(SEED + 3);
    for _ in 0..C3_SAMPLES {
        let n = r.gen_range(3..6);
        let len = r.gen_range(0..16);
        let w = random_word(&mut r, n, len);
        let x = normal_form(&w);
        let c = x.cycling();
        let d = x.decycling();
        ensure(c.inf() >= x.inf() && c.sup() <= x.sup(), || format!("cycling {w}: {x:?} -> {c:?}"))?;
        ensure(d.inf() >= x.inf() && d.sup() <= x.sup(), || format!("decycling {w}: {x:?} -> {d:?}"))?;
        let (c2, a) = x.cycling_with_conjugator();
        let a = braidsat_core::GarsideNormalForm::simple(&a);
        ensure(c2 == c && x.conjugate_by(&a) == c, || format!("cycling conjugator {w}"))?;
    }
    Ok(format!("{C3_SAMPLES} braids in B3-B5"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED + 4);
    let mut largest = 0;
    for _ in 0..C4_PAIRS {
        let n = r.gen_range(3..5);
        let len = r.gen_range(1..=C4_MAX_LEN);
        let w = random_word(&mut r, n, len);
        let clen = r.gen_range(1..=C4_MAX_LEN);
        let c = shuffle_conjugate(&mut r, &w, clen);
        let a = super_summit_set(&w, DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?;
        let b = super_summit_set(&c, DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?;
        ensure(a.elements() == b.elements(), || format!("SSS differ: {w} vs {c}"))?;
        largest = largest.max(a.len());
    }
    within(start, C4_BUDGET)?;
    Ok(format!("{C4_PAIRS} pairs, largest SSS {largest}, {:.1?}", start.elapsed()))
}

fn trefoil_satellite(pattern_exp: usize) -> Result<(BraidWord, RegularForm), String> {
    let spec = SatelliteSpec::new(bw(2, &[1, 1, 1]), vec![bw(2, &vec![1; pattern_exp])]).map_err(|e| e.to_string())?;
    build_satellite(&spec).map_err(|e| e.to_string())
}

fn criterion_5() -> Outcome {
    let threshold = threshold_full_twists(1, 2, 1).map_err(|e| e.to_string())?;
    ensure(threshold == 5, || format!("threshold {threshold}"))?;
    let mut out = Vec::new();
    for (exp, positive) in [(11, true), (9, false)] {
        let start = Instant::now();
        let (w, _) = trefoil_satellite(exp)?;
        let s = inf_s(&w).map_err(|e| e.to_string())?;
        within(start, C5_BUDGET)?;
        ensure((s >= 2) == positive, || format!("pattern σ1^{exp}: {w} has inf_s {s}"))?;
        out.push(format!("σ1^{exp}: inf_s {s}"));
    }
    Ok(out.join(", "))
}

fn twisted_pattern(r: &mut ChaCha8Rng, companion: &BraidWord) -> BraidWord {
    let st = &companion_stats(companion).unwrap()[0];
    let s = r.gen_range(2..4);
    let twists = st.writhe + st.braid_index;
    let len = r.gen_range(0..8);
    BraidWord::full_twist(s).pow(twists).concat(&random_positive(r, s, len)).unwrap()
}

fn criterion_6_7() -> (Outcome, Outcome) {
    let start = Instant::now();
    let companions = [
        bw(2, &[1, 1, 1]),
        bw(2, &[1, 1, 1, 1, 1]),
        BraidWord::full_twist(3).concat(&bw(3, &[1, 2])).unwrap(),
    ];
    let mut r = rng(SEED + 6);
    let mut c6: Result<(), String> = Ok(());
    let mut disagreements = Vec::new();
    let mut verdicts = [0usize; 2];
    for i in 0..C6_SATELLITES {
        let comp = companions[i % companions.len()].clone();
        let pattern = twisted_pattern(&mut r, &comp);
        let spec = SatelliteSpec::new(comp.clone(), vec![pattern.clone()]).unwrap();
        let round = (|| -> Result<(), String> {
            let (w, built) = build_satellite(&spec).map_err(|e| e.to_string())?;
            let red = find_round_reduction(&w, DEFAULT_SSS_BUDGET)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no reduction found for {w}"))?;
            let (rf, _) = extract_regular_form(&red.representative.to_word(), &red.partition).map_err(|e| e.to_string())?;
            ensure(conjugate_test(rf.exterior(), &comp, DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?, || {
                format!("exterior {} not conjugate to {comp}", rf.exterior())
            })?;
            ensure(rf.interiors().len() == 1, || format!("{} interiors", rf.interiors().len()))?;
            ensure(
                conjugate_test(&rf.interiors()[0], &built.interiors()[0], DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?,
                || format!("interior {} not conjugate to {}", rf.interiors()[0], built.interiors()[0]),
            )?;
            for k in [1, 2] {
                let v = check_regular_positive(&built, k).map_err(|e| e.to_string())?;
                verdicts[usize::from(v.componentwise)] += 1;
                if !v.agree() {
                    disagreements.push(format!("companion {comp}, pattern {pattern}, k={k}: {v:?}"));
                }
            }
            Ok(())
        })();
        if let Err(e) = round {
            c6 = Err(format!("satellite {i} (companion {comp}, pattern {pattern}): {e}"));
            break;
        }
    }
    let c6 = c6.and_then(|_| within(start, C6_BUDGET)).map(|_| {
        format!("{C6_SATELLITES} satellites round-tripped, {:.1?}", start.elapsed())
    });
    let c7 = if !disagreements.is_empty() {
        for d in &disagreements {
            eprintln!("disagreement: {d}");
        }
        Err(format!("{} disagreements", disagreements.len()))
    } else if c6.is_err() {
        Err("criterion 6 did not complete".into())
    } else {
        Ok(format!("{} checks agree ({} positive, {} not)", verdicts[0] + verdicts[1], verdicts[1], verdicts[0]))
    };
    (c6, c7)
}

/// Conjugate to σ1^a σ2^b with both exponents at least two gives a connected sum of two-bridge torus knots.
fn expected_prime_factors(w: &BraidWord, genus: i64) -> Result<i64, String> {
    if genus == 0 {
        return Ok(0);
    }
    let len = w.len();
    for a in 1..len {
        let mut l = vec![1; a];
        l.extend(vec![2; len - a]);
        if conjugate_test(w, &bw(3, &l), DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())? {
            return Ok(i64::from(a >= 3) + i64::from(len - a >= 3));
        }
    }
    Ok(1)
}

fn criterion_8() -> Outcome {
    let trefoil = alexander(&bw(2, &[1, 1, 1])).map_err(|e| e.to_string())?;
    let want = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
    ensure(trefoil == want, || format!("trefoil gave {trefoil}"))?;
    let p1 = prime_factor_count(&bw(2, &[1, 1, 1])).map_err(|e| e.to_string())?;
    let p2 = prime_factor_count(&bw(3, &[1, 1, 1, 2, 2, 2])).map_err(|e| e.to_string())?;
    ensure(p1 == 1 && p2 == 2, || format!("prime factor counts {p1}, {p2}"))?;
    let mut knots = 0;
    let mut by_p: BTreeMap<i64, usize> = BTreeMap::new();
    for w in all_words(3, C8_MAX_LEN, true) {
        if closure_components(&w).len() != 1 {
            continue;
        }
        knots += 1;
        let g = (w.len() as i64 - 3 + 1) / 2;
        let d = alexander(&w).map_err(|e| e.to_string())?;
        ensure(d.max_degree() == Some(g), || format!("{w}: degree {:?}, genus {g}", d.max_degree()))?;
        ensure(genus_positive_braid(&w).map_err(|e| e.to_string())? == g, || format!("{w}: genus"))?;
        if g == 0 {
            ensure(d == LaurentPoly::one(), || format!("{w}: unknot gave {d}"))?;
            continue;
        }
        ensure(d.coefficient(g) == BigInt::from(1), || format!("{w}: leading coefficient of {d}"))?;
        let p = expected_prime_factors(&w, g)?;
        ensure(d.coefficient(g - 1) == BigInt::from(-p), || format!("{w}: {d} but {p} prime factors"))?;
        *by_p.entry(p).or_default() += 1;
    }
    Ok(format!("{knots} positive B3 knots, prime factor tally {by_p:?}"))
}

fn random_knot(r: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    loop {
        let len = r.gen_range(1..=max_len);
        let w = random_word(r, n, len);
        if closure_components(&w).len() == 1 {
            return w;
        }
    }
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED + 9);
    let mut sizes = BTreeMap::new();
    for _ in 0..C9_SATELLITES {
        let (m, s) = *pick(&mut r, &[(2, 2), (2, 3), (3, 2)]);
        let comp = random_knot(&mut r, m, 8);
        let pattern = random_knot(&mut r, s, 8);
        let spec = SatelliteSpec::new(comp.clone(), vec![pattern.clone()]).map_err(|e| e.to_string())?;
        let res = satellite_alexander_check(&spec).map_err(|e| e.to_string())?;
        ensure(res.holds, || format!("companion {comp}, pattern {pattern}: {res:?}"))?;
        *sizes.entry(m * s).or_insert(0) += 1;
    }
    within(start, C9_BUDGET)?;
    Ok(format!("{C9_SATELLITES} satellites by strand count {sizes:?}"))
}

fn criterion_10() -> Outcome {
    let w = BraidWord::full_twist(3).concat(&bw(3, &[1])).unwrap();
    let v = classify_fdtc(&w).map_err(|e| e.to_string())?;
    ensure(v == FdtcVerdict::EqualOne { blocks: vec![2, 1] }, || format!("Δ²σ1 gave {v:?}"))?;
    let a = compatible_analysis(&w, DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?;
    let rf = a.regular_form.ok_or("no regular form for Δ²σ1")?;
    ensure(conjugate_test(rf.exterior(), &BraidWord::full_twist(2), DEFAULT_SSS_BUDGET).map_err(|e| e.to_string())?, || {
        format!("exterior {}", rf.exterior())
    })?;
    let w = BraidWord::full_twist(3).concat(&bw(3, &[1, 2])).unwrap();
    let v = classify_fdtc(&w).map_err(|e| e.to_string())?;
    ensure(v == FdtcVerdict::GreaterThanOne, || format!("Δ²σ1σ2 gave {v:?}"))?;
    let w = bw(3, &[1, 1, 2, 2]).pow(3);
    let i = normal_form(&w).inf();
    ensure(i < 2, || format!("(σ1²σ2²)³ has inf {i}"))?;
    Ok(format!("verdicts as expected, (σ1²σ2²)³ inf {i}"))
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    report(name, catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into())))
}

fn report(name: &str, o: Outcome) -> bool {
    match o {
        Ok(detail) => {
            println!("{name}: PASS ({detail})");
            true
        }
        Err(detail) => {
            println!("{name}: FAIL ({detail})");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    ok &= run("criterion 1", criterion_1);
    ok &= run("criterion 2", criterion_2);
    ok &= run("criterion 3", criterion_3);
    ok &= run("criterion 4", criterion_4);
    ok &= run("criterion 5", criterion_5);
    let (c6, c7) = catch_unwind(criterion_6_7).unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
    ok &= report("criterion 6", c6);
    ok &= report("criterion 7", c7);
    ok &= run("criterion 8", criterion_8);
    ok &= run("criterion 9", criterion_9);
    ok &= run("criterion 10", criterion_10);
    if !ok {
        std::process::exit(1);
    }
}
