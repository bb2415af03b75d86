//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use scn_core::cube_spectrum::{orthogonality_report, verify_eigenvector, CharacterVector, DistanceGraph};
use scn_core::exact::binomial;
use scn_core::involution_search::{partition_by_parity, search_classes, search_injection, MoveRelation};
use scn_core::krawtchouk::{krawtchouk_at, macwilliams_transform, scn_via_krawtchouk, KrawtchoukTable, WeightDistribution};
use scn_core::lattice_paths::{HeightCensus, PathHistogram};
use scn_core::super_catalan::{catalan, middle_binomial, scn_closed_form, scn_von_szily};
use scn_core::{Int, Limits, Nat, Rat, ScnIndex};

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sign(m: u32) -> Int {
    if m.is_multiple_of(2) {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

/// Closed form = von Szily = Krawtchouk = (-1)^m · path sum, m+n <= 10,
/// with one enumeration pass per N; also the histogram identity.
fn four_way_and_histogram() -> Result<(usize, usize), String> {
    let limits = Limits::default();
    let (mut pairs, mut histograms) = (0, 0);
    for total in 0..=10 {
        let census = HeightCensus::new(total, &limits).map_err(err)?;
        ensure(census.paths() == binomial::<u64>(2 * u64::from(total), total.into()).map_err(err)?, || {
            format!("census for N={total} visited {} paths", census.paths())
        })?;
        for idx in ScnIndex::with_total(total) {
            let closed: Int = scn_closed_form(idx).map_err(err)?;
            let szily: Int = scn_von_szily(idx).map_err(err)?;
            let kraw: Int = scn_via_krawtchouk(idx).map_err(err)?;
            let paths: Int = sign(idx.m) * census.signed_sum::<Int>(idx.m).map_err(err)?;
            ensure(closed == szily && szily == kraw && kraw == paths, || {
                format!("S{idx}: closed {closed}, szily {szily}, krawtchouk {kraw}, paths {paths}")
            })?;
            pairs += 1;
            let h: PathHistogram<Nat> = census.histogram(idx.m).map_err(err)?;
            ensure(h.columns_agree(), || format!("histogram {idx}: {:?} vs {:?}", h.enumerated, h.closed_form))?;
            histograms += 1;
        }
    }
    Ok((pairs, histograms))
}

fn criterion_1() -> Result<(), String> {
    let (pairs, _) = four_way_and_histogram()?;
    ensure(pairs == 66, || format!("checked {pairs} pairs, expected 66"))
}

fn criterion_2() -> Result<(), String> {
    let mut pairs = 0;
    for idx in ScnIndex::up_to(20) {
        let closed: Int = scn_closed_form(idx).map_err(err)?;
        let szily: Int = scn_von_szily(idx).map_err(err)?;
        let kraw: Int = scn_via_krawtchouk(idx).map_err(err)?;
        ensure(closed == szily && szily == kraw, || format!("S{idx}: {closed} / {szily} / {kraw}"))?;
        pairs += 1;
    }
    ensure(pairs == 231, || format!("checked {pairs} pairs, expected 231"))
}

fn criterion_3() -> Result<(), String> {
    let (_, histograms) = four_way_and_histogram()?;
    ensure(histograms == 66, || format!("checked {histograms} histograms, expected 66"))
}

fn criterion_4() -> Result<(), String> {
    for n in 0..=15 {
        let s1: Nat = scn_closed_form(ScnIndex::new(1, n)).map_err(err)?;
        let s0: Nat = scn_closed_form(ScnIndex::new(0, n)).map_err(err)?;
        ensure(s1 == catalan::<Nat>(n).map_err(err)? * 2u32, || format!("S(1,{n}) = {s1}"))?;
        ensure(s0 == middle_binomial::<Nat>(n).map_err(err)?, || format!("S(0,{n}) = {s0}"))?;
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let limits = Limits::default();
    for n in 1..=5 {
        let r = orthogonality_report::<Int>(n, &limits).map_err(err)?;
        ensure(r.sets_agree(), || format!("N={n}: {:?} vs {:?}", r.eigen_set, r.scn_set))?;
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    let limits = Limits::default();
    for d in 1..=8 {
        let table = KrawtchoukTable::<Int>::new(d).map_err(err)?;
        for j in 1..=d {
            let g = DistanceGraph::new(d, j, &limits).map_err(err)?;
            for x in 0..=d {
                let chi = CharacterVector::representative(d, x).map_err(err)?;
                let value = verify_eigenvector::<Int>(&g, &chi).map_err(err)?;
                ensure(Some(&value) == table.get(j, x), || format!("d={d} j={j} x={x}: eigenvalue {value}"))?;
            }
        }
    }
    for d in 0..=12u32 {
        let k = |j, x| krawtchouk_at::<Int>(d, j, x).map_err(err);
        let c = |x: u32| binomial::<Int>(d.into(), x.into()).map_err(err);
        for j in 0..=d {
            for x in 0..=d {
                let reflected = k(j, d - x)?;
                let expected = if j % 2 == 0 { k(j, x)? } else { -k(j, x)? };
                ensure(reflected == expected, || format!("reflection fails at d={d} j={j} x={x}"))?;
            }
        }
        for i in 0..=d {
            for j in 0..=d {
                let mut inner = Int::from(0);
                for x in 0..=d {
                    inner += c(x)? * k(i, x)? * k(j, x)?;
                }
                let expected = if i == j { (Int::from(1) << d as usize) * c(j)? } else { Int::from(0) };
                ensure(inner == expected, || format!("orthogonality fails at d={d} i={i} j={j}: {inner}"))?;
            }
        }
    }
    Ok(())
}

fn span(rows: &[u32]) -> Vec<u32> {
    (0..1u32 << rows.len())
        .map(|c| rows.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).fold(0, |a, (_, r)| a ^ r))
        .collect()
}

fn tally(d: u32, words: &[u32]) -> Vec<i64> {
    let mut counts = vec![0i64; d as usize + 1];
    words.iter().for_each(|w| counts[w.count_ones() as usize] += 1);
    counts
}

fn criterion_7() -> Result<(), String> {
    let hamming = span(&[0b1000110, 0b0100101, 0b0010011, 0b0001111]);
    let simplex: Vec<u32> = (0..128u32)
        .filter(|w| hamming.iter().all(|c| (c & w).count_ones() % 2 == 0))
        .collect();
    ensure(hamming.len() == 16 && simplex.len() == 8, || "code sizes".into())?;
    let (a, b) = (tally(7, &hamming), tally(7, &simplex));
    ensure(a == [1, 0, 0, 7, 7, 0, 0, 1] && b == [1, 0, 0, 0, 7, 0, 0, 0], || format!("tallies {a:?} {b:?}"))?;
    let as_rat = |v: &[i64]| v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect::<Vec<_>>();
    let forward = macwilliams_transform(&WeightDistribution::<Int>::from_slice(&a).map_err(err)?, &Int::from(16)).map_err(err)?;
    let backward = macwilliams_transform(&WeightDistribution::<Int>::from_slice(&b).map_err(err)?, &Int::from(8)).map_err(err)?;
    ensure(forward == as_rat(&b), || format!("Hamming -> {forward:?}"))?;
    ensure(backward == as_rat(&a), || format!("simplex -> {backward:?}"))
}

fn criterion_8() -> Result<(), String> {
    let limits = Limits::default();
    let r = search_injection(ScnIndex::new(1, 1), MoveRelation::BoundarySwap, &limits).map_err(err)?;
    let uncovered: Vec<String> = r.uncovered.iter().map(ToString::to_string).collect();
    ensure(r.deficiency == 0 && uncovered == ["RUUR", "URRU"] && r.scn == Nat::from(2u8), || {
        format!("(1,1) boundary swap: deficiency {}, uncovered {uncovered:?}", r.deficiency)
    })?;

    let chain = [MoveRelation::BoundarySwap, MoveRelation::Hamming(2), MoveRelation::Hamming(4), MoveRelation::Complete];
    for idx in ScnIndex::up_to(8) {
        let classes = partition_by_parity(idx, &limits).map_err(err)?;
        let mut previous = 0;
        for rel in chain {
            let r = search_classes(&classes, rel).map_err(err)?;
            let uncovered = Nat::from(r.uncovered.len());
            ensure(uncovered >= r.scn, || format!("{idx} {rel}: |uncovered| {uncovered} < S = {}", r.scn))?;
            ensure((uncovered == r.scn) == (r.deficiency == 0), || format!("{idx} {rel}: equality/deficiency mismatch"))?;
            ensure(r.uncovered.len() == r.plus_count - r.matched.len(), || format!("{idx} {rel}: uncovered count"))?;
            ensure(r.matched.len() >= previous, || format!("{idx} {rel}: matched {} < {previous}", r.matched.len()))?;
            ensure(r.matched.iter().all(|(a, b)| rel.relates(idx.m, a, b)), || format!("{idx} {rel}: unrelated pair"))?;
            if rel == MoveRelation::Complete {
                ensure(r.deficiency == 0, || format!("{idx}: complete relation left {} unmatched", r.deficiency))?;
            }
            previous = r.matched.len();
        }
    }
    Ok(())
}

fn criterion_9() -> Result<(), String> {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_scn"))
            .args(["--threads", threads, "--format", "json", "verify", "--max", "10", "all"])
            .output()
            .map_err(err)
    };
    let (one, eight) = (run("1")?, run("8")?);
    ensure(one.status.success() && eight.status.success(), || "sweep exited non-zero".into())?;
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).map_err(err)?;
    ensure(v["result"]["passed"] == 66, || format!("sweep passed {}", v["result"]["passed"]))?;
    ensure(one.stdout == eight.stdout, || "1-thread and 8-thread JSON differ".into())
}

fn main() {
    let criteria: [(&str, Duration, Check); 9] = [
        ("1 four-way agreement, m+n <= 10", Duration::from_secs(60), criterion_1),
        ("2 three-way agreement, m+n <= 20", Duration::from_secs(1), criterion_2),
        ("3 histogram identity, m+n <= 10", Duration::from_secs(60), criterion_3),
        ("4 Catalan and middle-binomial special cases, n <= 15", Duration::from_secs(1), criterion_4),
        ("5 orthogonality-graph spectrum, N = 1..5", Duration::from_secs(30), criterion_5),
        ("6 eigen-equation d <= 8, orthogonality and reflection d <= 12", Duration::from_secs(60), criterion_6),
        ("7 MacWilliams Hamming [7,4] <-> simplex [7,3]", Duration::from_secs(1), criterion_7),
        ("8 injection harness invariants, m+n <= 8", Duration::from_secs(120), criterion_8),
        ("9 deterministic JSON with 1 and 8 threads", Duration::from_secs(120), criterion_9),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
