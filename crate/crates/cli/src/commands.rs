//! One handler per subcommand. Each builds the table, CSV and JSON views
//! from the same computed values.

use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Value};

use scn_core::cube_spectrum::orthogonality_report;
use scn_core::involution_search::{export_witnesses, search_injection, MoveRelation};
use scn_core::krawtchouk::{krawtchouk_at, macwilliams_transform, scn_via_krawtchouk, KrawtchoukTable, WeightDistribution};
use scn_core::lattice_paths::{enumerate_paths, histogram, signed_sum_enumerated, HeightCensus, PathHistogram};
use scn_core::super_catalan::{scn_closed_form, scn_von_szily, signed_scn};
use scn_core::{Error, Int, Limits, Nat, Rat, ScnIndex};

use crate::output::{aligned, Csv, Output};
use crate::weights;

#[derive(Debug)]
pub enum CliError {
    /// Bad request: malformed input or an exceeded cap. Exit status 2.
    Usage(String),
    /// A mathematical contract failed. Exit status 1.
    Contract(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Contract(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Contract(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_contract_failure() {
            CliError::Contract(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Szily,
    Krawtchouk,
    Paths,
}

impl Method {
    const ALL: [Method; 4] = [Method::Closed, Method::Szily, Method::Krawtchouk, Method::Paths];

    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Szily => "szily",
            Method::Krawtchouk => "krawtchouk",
            Method::Paths => "paths",
        }
    }

    fn compute(self, idx: ScnIndex, limits: &Limits) -> Result<Int, Error> {
        match self {
            Method::Closed => scn_closed_form(idx),
            Method::Szily => scn_von_szily(idx),
            Method::Krawtchouk => scn_via_krawtchouk(idx),
            Method::Paths => {
                let sum: Int = signed_sum_enumerated(idx, limits)?;
                Ok(if idx.m.is_multiple_of(2) { sum } else { -sum })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyCheck {
    /// von Szily sum against the closed form.
    Szily,
    /// Signed lattice-path sum against (-1)^m S(m,n).
    S1,
    /// Krawtchouk value against the closed form.
    S2,
    /// Enumerated height counts against C(2m,h) C(2n,m+n-h).
    Histogram,
    /// Nonzero spectrum of the orthogonality graph, N = 1..=max.
    Spectrum,
    /// Closed form, von Szily, Krawtchouk and path sum all agree.
    All,
}

impl VerifyCheck {
    fn name(self) -> &'static str {
        match self {
            VerifyCheck::Szily => "szily",
            VerifyCheck::S1 => "s1",
            VerifyCheck::S2 => "s2",
            VerifyCheck::Histogram => "histogram",
            VerifyCheck::Spectrum => "spectrum",
            VerifyCheck::All => "all",
        }
    }

    fn enumerates(self) -> bool {
        matches!(self, VerifyCheck::S1 | VerifyCheck::Histogram | VerifyCheck::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Moves {
    BoundarySwap,
    Hamming,
    Complete,
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn joined<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn strings<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn scn(m: u32, n: u32, method: Method, verify_all: bool, limits: &Limits) -> Result<Output, CliError> {
    let idx = ScnIndex::new(m, n);
    let mut csv = Csv::new(&["m", "n", "method", "value"]);
    if !verify_all {
        let value = method.compute(idx, limits)?;
        csv.push(vec![m.to_string(), n.to_string(), method.name().into(), value.to_string()]);
        return Ok(Output {
            command: "scn",
            params: json!({ "m": m, "n": n, "method": method.name(), "verify_all": false }),
            result: json!({ "method": method.name(), "value": value.to_string() }),
            csv,
            table: value.to_string(),
            failure: None,
        });
    }

    let values = Method::ALL
        .iter()
        .map(|&meth| Ok((meth, meth.compute(idx, limits)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let agree = values.iter().all(|(_, v)| v == &values[0].1);
    let mut rows = Vec::new();
    for (meth, v) in &values {
        let row = vec![m.to_string(), n.to_string(), meth.name().to_string(), v.to_string()];
        csv.push(row.clone());
        rows.push(vec![meth.name().to_string(), v.to_string()]);
    }
    let mut table = aligned(&["method".into(), "value".into()], &rows);
    table.push_str(&format!("{} all methods agree on S{idx}\n", pass_fail(agree)));
    Ok(Output {
        command: "scn",
        params: json!({ "m": m, "n": n, "method": method.name(), "verify_all": true }),
        result: json!({
            "values": values.iter().map(|(meth, v)| json!({ "method": meth.name(), "value": v.to_string() })).collect::<Vec<_>>(),
            "agree": agree,
        }),
        csv,
        table,
        failure: (!agree).then(|| format!("methods disagree on S{idx}")),
    })
}

struct CheckRow {
    m: u32,
    n: u32,
    ok: bool,
    expected: String,
    observed: String,
}

fn pair_check(what: VerifyCheck, idx: ScnIndex, census: Option<&HeightCensus>) -> Result<CheckRow, Error> {
    let closed: Int = scn_closed_form(idx)?;
    let row = |ok: bool, expected: String, observed: String| CheckRow { m: idx.m, n: idx.n, ok, expected, observed };
    // contract failures become FAIL rows; request errors abort the sweep
    let soft = |r: Result<Int, Error>| match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_contract_failure() => Ok(None),
        Err(e) => Err(e),
    };
    let show = |v: &Option<Int>| v.as_ref().map_or_else(|| "error".to_string(), ToString::to_string);
    let census_sum = |c: &HeightCensus| -> Result<Int, Error> {
        let sum: Int = c.signed_sum(idx.m)?;
        Ok(if idx.m.is_multiple_of(2) { sum } else { -sum })
    };
    Ok(match what {
        VerifyCheck::Szily => {
            let v = soft(scn_von_szily(idx))?;
            row(v.as_ref() == Some(&closed), closed.to_string(), show(&v))
        }
        VerifyCheck::S2 => {
            let v = soft(scn_via_krawtchouk(idx))?;
            row(v.as_ref() == Some(&closed), closed.to_string(), show(&v))
        }
        VerifyCheck::S1 => {
            let c = census.expect("enumerating checks carry a census");
            let signed: Int = signed_scn(idx)?;
            let sum: Int = c.signed_sum(idx.m)?;
            row(sum == signed, signed.to_string(), sum.to_string())
        }
        VerifyCheck::Histogram => {
            let h: PathHistogram<Nat> = census.expect("enumerating checks carry a census").histogram(idx.m)?;
            row(h.columns_agree(), joined(&h.closed_form), joined(&h.enumerated))
        }
        VerifyCheck::All => {
            let c = census.expect("enumerating checks carry a census");
            let others = [soft(scn_von_szily(idx))?, soft(scn_via_krawtchouk(idx))?, Some(census_sum(c)?)];
            let ok = others.iter().all(|v| v.as_ref() == Some(&closed));
            row(ok, closed.to_string(), others.iter().map(show).collect::<Vec<_>>().join(";"))
        }
        VerifyCheck::Spectrum => unreachable!("spectrum is swept by N"),
    })
}

pub fn verify(what: VerifyCheck, max: u32, fixed_m: Option<u32>, fixed_n: Option<u32>, limits: &Limits) -> Result<Output, CliError> {
    let params = json!({ "check": what.name(), "max": max, "m": fixed_m, "n": fixed_n });
    if what == VerifyCheck::Spectrum {
        if fixed_m.is_some() || fixed_n.is_some() {
            return Err(CliError::Usage("--m/--n do not apply to the spectrum check".into()));
        }
        return verify_spectrum(max, limits, params);
    }
    if what.enumerates() && max > limits.enumeration {
        return Err(CliError::Usage(format!(
            "--max {max} exceeds the enumeration cap {}; pass --max-cap-override to lift it",
            limits.enumeration
        )));
    }

    let mut rows = Vec::new();
    for total in 0..=max {
        let pairs: Vec<ScnIndex> = ScnIndex::with_total(total)
            .filter(|i| fixed_m.is_none_or(|m| i.m == m) && fixed_n.is_none_or(|n| i.n == n))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let census = if what.enumerates() { Some(HeightCensus::new(total, limits)?) } else { None };
        for idx in pairs {
            rows.push(pair_check(what, idx, census.as_ref())?);
        }
    }

    let mut csv = Csv::new(&["check", "m", "n", "status", "expected", "observed"]);
    let mut table = String::new();
    for r in &rows {
        csv.push(vec![
            what.name().into(),
            r.m.to_string(),
            r.n.to_string(),
            pass_fail(r.ok).into(),
            r.expected.clone(),
            r.observed.clone(),
        ]);
        table.push_str(&format!(
            "{} {} m={} n={} expected={} observed={}\n",
            pass_fail(r.ok),
            what.name(),
            r.m,
            r.n,
            r.expected,
            r.observed
        ));
    }
    let passed = rows.iter().filter(|r| r.ok).count();
    let first_failure = rows.iter().find(|r| !r.ok);
    table.push_str(&format!("{passed}/{} checks passed\n", rows.len()));
    if let Some(f) = first_failure {
        table.push_str(&format!("first failure: (m, n) = ({}, {})\n", f.m, f.n));
    }
    Ok(Output {
        command: "verify",
        params,
        result: json!({
            "check": what.name(),
            "passed": passed,
            "failed": rows.len() - passed,
            "first_failure": first_failure.map(|f| json!({ "m": f.m, "n": f.n })),
            "checks": rows.iter().map(|r| json!({
                "m": r.m,
                "n": r.n,
                "status": pass_fail(r.ok),
                "expected": r.expected,
                "observed": r.observed,
            })).collect::<Vec<_>>(),
        }),
        csv,
        table,
        failure: first_failure.map(|f| format!("{} check failed at (m, n) = ({}, {})", what.name(), f.m, f.n)),
    })
}

fn verify_spectrum(max: u32, limits: &Limits, params: Value) -> Result<Output, CliError> {
    if 2 * max > limits.cube_dimension {
        return Err(CliError::Usage(format!(
            "--max {max} needs cube dimension {} above the cap {}; pass --max-cap-override to lift it",
            2 * max,
            limits.cube_dimension
        )));
    }
    let mut csv = Csv::new(&["check", "N", "status", "eigen_set", "scn_set"]);
    let mut table = String::new();
    let mut checks = Vec::new();
    let mut first_failure = None;
    for half in 1..=max {
        let (ok, eigen, scn) = match orthogonality_report::<Int>(half, limits) {
            Ok(r) => (r.sets_agree(), r.eigen_set.iter().cloned().collect::<Vec<_>>(), r.scn_set.iter().cloned().collect::<Vec<_>>()),
            Err(e) if e.is_contract_failure() => (false, Vec::new(), Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let scn_sorted: Vec<Int> = if scn.is_empty() {
            ScnIndex::with_total(half).map(signed_scn::<Int>).collect::<Result<std::collections::BTreeSet<_>, _>>()?.into_iter().collect()
        } else {
            scn
        };
        if !ok && first_failure.is_none() {
            first_failure = Some(half);
        }
        csv.push(vec!["spectrum".into(), half.to_string(), pass_fail(ok).into(), joined(&eigen), joined(&scn_sorted)]);
        table.push_str(&format!(
            "{} spectrum N={half} eigenvalues={{{}}} signed_scn={{{}}}\n",
            pass_fail(ok),
            eigen.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            scn_sorted.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ));
        checks.push(json!({
            "N": half,
            "status": pass_fail(ok),
            "eigen_set": strings(&eigen),
            "scn_set": strings(&scn_sorted),
        }));
    }
    let passed = checks.iter().filter(|c| c["status"] == "PASS").count();
    table.push_str(&format!("{passed}/{} checks passed\n", checks.len()));
    Ok(Output {
        command: "verify",
        params,
        result: json!({
            "check": "spectrum",
            "passed": passed,
            "failed": checks.len() - passed,
            "first_failure": first_failure.map(|n| json!({ "N": n })),
            "checks": checks,
        }),
        csv,
        table,
        failure: first_failure.map(|n| format!("spectrum check failed at N={n}")),
    })
}

pub fn krawtchouk(d: u32, j: Option<u32>, x: Option<u32>) -> Result<Output, CliError> {
    match (j, x) {
        (Some(j), Some(x)) => {
            let value: Int = krawtchouk_at(d, j, x)?;
            let mut csv = Csv::new(&["d", "j", "x", "value"]);
            csv.push(vec![d.to_string(), j.to_string(), x.to_string(), value.to_string()]);
            Ok(Output {
                command: "krawtchouk",
                params: json!({ "d": d, "j": j, "x": x }),
                result: json!({ "value": value.to_string() }),
                csv,
                table: value.to_string(),
                failure: None,
            })
        }
        (None, None) => {
            let table = KrawtchoukTable::<Int>::new(d)?;
            let mut header = vec!["j".to_string()];
            header.extend((0..=d).map(|x| x.to_string()));
            let rows: Vec<Vec<String>> = table
                .rows()
                .iter()
                .enumerate()
                .map(|(j, row)| std::iter::once(j.to_string()).chain(row.iter().map(ToString::to_string)).collect())
                .collect();
            let mut text_header = header.clone();
            text_header[0] = "j\\x".into();
            Ok(Output {
                command: "krawtchouk",
                params: json!({ "d": d }),
                result: json!({ "d": d, "table": table.rows().iter().map(|r| strings(r)).collect::<Vec<_>>() }),
                csv: Csv { header, rows: rows.clone() },
                table: aligned(&text_header, &rows),
                failure: None,
            })
        }
        _ => Err(CliError::Usage("krawtchouk takes either d alone or d j x".into())),
    }
}

pub fn paths(m: u32, n: u32, list: bool, limits: &Limits) -> Result<Output, CliError> {
    let idx = ScnIndex::new(m, n);
    let h: PathHistogram<Nat> = histogram(idx, limits)?;
    let signed_sum: Int = signed_sum_enumerated(idx, limits)?;
    let signed: Int = signed_scn(idx)?;
    let ok = h.columns_agree() && signed_sum == signed;

    let hist_rows: Vec<Vec<String>> = h
        .enumerated
        .iter()
        .zip(&h.closed_form)
        .enumerate()
        .map(|(height, (e, c))| vec![height.to_string(), e.to_string(), c.to_string()])
        .collect();
    let mut table = aligned(&["h".into(), "enumerated".into(), "closed_form".into()], &hist_rows);
    table.push_str(&format!("signed sum = {signed_sum}, (-1)^m S{idx} = {signed}\n{}\n", pass_fail(ok)));

    let mut result = json!({
        "m": m,
        "n": n,
        "histogram": hist_rows.iter().map(|r| json!({ "h": r[0].parse::<u32>().unwrap_or(0), "enumerated": r[1], "closed_form": r[2] })).collect::<Vec<_>>(),
        "signed_sum": signed_sum.to_string(),
        "signed_scn": signed.to_string(),
        "agree": ok,
    });

    let csv = if list {
        let mut csv = Csv::new(&["path", "height", "sign"]);
        let mut listed = Vec::new();
        for p in enumerate_paths(idx.total(), limits)? {
            let height = p.height_after(2 * m)?;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            csv.push(vec![p.to_string(), height.to_string(), sign.to_string()]);
            listed.push(json!({ "path": p.to_string(), "height": height, "sign": sign }));
        }
        table.push_str(&aligned(&csv.header, &csv.rows));
        result["paths"] = Value::Array(listed);
        csv
    } else {
        Csv {
            header: vec!["h".into(), "enumerated".into(), "closed_form".into()],
            rows: hist_rows,
        }
    };
    Ok(Output {
        command: "paths",
        params: json!({ "m": m, "n": n, "list": list }),
        result,
        csv,
        table,
        failure: (!ok).then(|| format!("enumeration disagrees with the closed form at {idx}")),
    })
}

pub fn spectrum(half: u32, limits: &Limits) -> Result<Output, CliError> {
    let r = orthogonality_report::<Int>(half, limits)?;
    let mut csv = Csv::new(&["x", "eigenvalue", "multiplicity"]);
    for s in &r.spaces {
        csv.push(vec![s.size.to_string(), s.eigenvalue.to_string(), s.multiplicity.to_string()]);
    }
    let eigen: Vec<Int> = r.eigen_set.iter().cloned().collect();
    let scn: Vec<Int> = r.scn_set.iter().cloned().collect();
    let mut table = format!("distance-{half} graph of the {}-cube\n", r.dimension());
    table.push_str(&aligned(&csv.header, &csv.rows));
    table.push_str(&format!(
        "nonzero eigenvalues: {{{}}}\nsigned S(m,n), m+n={half}: {{{}}}\n{}\n",
        eigen.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        scn.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        pass_fail(r.sets_agree())
    ));
    Ok(Output {
        command: "spectrum",
        params: json!({ "N": half }),
        result: json!({
            "N": half,
            "d": r.dimension(),
            "eigen_set": strings(&eigen),
            "scn_set": strings(&scn),
            "multiplicities": r.spaces.iter().map(|s| json!({
                "x": s.size,
                "eigenvalue": s.eigenvalue.to_string(),
                "multiplicity": s.multiplicity.to_string(),
            })).collect::<Vec<_>>(),
            "sets_agree": r.sets_agree(),
        }),
        csv,
        table,
        failure: (!r.sets_agree()).then(|| format!("spectral claim fails at N={half}")),
    })
}

pub fn involution(m: u32, n: u32, moves: Moves, k: u32, limits: &Limits) -> Result<Output, CliError> {
    let relation = match moves {
        Moves::BoundarySwap => MoveRelation::BoundarySwap,
        Moves::Hamming => MoveRelation::Hamming(k),
        Moves::Complete => MoveRelation::Complete,
    };
    let r = search_injection(ScnIndex::new(m, n), relation, limits)?;
    let w = export_witnesses(&r);

    let mut csv = Csv::new(&["kind", "minus", "plus"]);
    for (a, b) in &w.matched {
        csv.push(vec!["matched".into(), a.clone(), b.clone()]);
    }
    for u in &w.uncovered {
        csv.push(vec!["uncovered".into(), String::new(), u.clone()]);
    }

    let mut table = format!(
        "relation {}: |minus| = {}, |plus| = {}, matched = {}, deficiency = {}\n",
        w.relation,
        w.minus_count,
        w.plus_count,
        w.matched.len(),
        w.deficiency
    );
    table.push_str(&format!(
        "|uncovered| = {} vs S({m},{n}) = {}: {}\n",
        w.uncovered_count, w.scn, w.verdict
    ));
    table.push_str("uncovered:\n");
    for u in &w.uncovered {
        table.push_str(&format!("  {}\n", if u.is_empty() { "(empty path)" } else { u }));
    }

    let mut params = json!({ "m": m, "n": n, "moves": w.relation });
    if moves == Moves::Hamming {
        params["k"] = json!(k);
    }
    Ok(Output {
        command: "involution",
        params,
        result: json!({
            "m": w.m,
            "n": w.n,
            "relation": w.relation,
            "minus_count": w.minus_count,
            "plus_count": w.plus_count,
            "matched": w.matched.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "uncovered": w.uncovered,
            "uncovered_count": w.uncovered_count,
            "deficiency": w.deficiency,
            "scn": w.scn,
            "uncovered_equals_scn": w.uncovered_equals_scn,
            "verdict": w.verdict,
        }),
        csv,
        table,
        failure: None,
    })
}

pub fn macwilliams(file: &Path, size_flag: Option<&str>) -> Result<Output, CliError> {
    let input = weights::load(file).map_err(CliError::Usage)?;
    let size: BigInt = match size_flag {
        Some(s) => weights::parse_natural(s).map_err(|e| CliError::Usage(format!("--size: {e}")))?,
        None => input
            .size
            .clone()
            .ok_or_else(|| CliError::Usage("size: missing from the file and --size not given".into()))?,
    };
    let dist = WeightDistribution::<Int>::new(input.d, input.counts.clone())?;
    let dual: Vec<Rat> = macwilliams_transform(&dist, &size)?;
    let integral = dual.iter().all(|b| b.is_integer());

    let mut csv = Csv::new(&["j", "value"]);
    for (j, b) in dual.iter().enumerate() {
        csv.push(vec![j.to_string(), b.to_string()]);
    }
    let table = format!(
        "({})\n{}\n",
        dual.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        if integral { "integral" } else { "not integral: input is not the weight distribution of a linear code" }
    );
    Ok(Output {
        command: "macwilliams",
        params: json!({ "file": file.display().to_string(), "d": input.d, "size": size.to_string() }),
        result: json!({ "d": input.d, "transform": strings(&dual), "integral": integral }),
        csv,
        table,
        failure: None,
    })
}
