use std::path::Path;

use genus_core::classifying::{
    bott_pushforward, bsu_to_bu1, bu6_generator_image, bu6_to_bu1, bu_homology_ring, space_model, SpaceModel,
};
use genus_core::obstruction::{
    builtin_coefficients, coordinate_obstruction, pi0_factors, restriction_index, GradedCoefficients, OperadLevel,
};
use genus_core::symmetric::{newton_polynomial, power_sum_s};
use genus_core::{selftest, BigInt, Coord, Error, Polynomial};
use serde_json::{json, Map, Value};

use crate::output::{int, Body, Rendered};
use crate::{Command, Global};

pub enum Failure {
    /// Bad flags or unreadable input; nothing was computed.
    Invalid(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = Result<(Rendered, bool), Failure>;

fn invalid<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Invalid(msg.into()))
}

fn positive(name: &str, v: u32) -> Result<u32, Failure> {
    if v == 0 {
        return invalid(format!("--{name} must be at least 1"));
    }
    Ok(v)
}

fn level(n: u32) -> Result<OperadLevel, Failure> {
    OperadLevel::try_from(n).or_else(|_| invalid(format!("--n must be 2 or 4, got {n}")))
}

fn max_m(given: Option<u32>, global: &Global) -> Result<u32, Failure> {
    positive("max-m", given.unwrap_or(global.max_degree / 2))
}

/// A builtin name, or else a path to a coefficient file.
fn load_coefficients(spec: &str) -> Result<GradedCoefficients, Failure> {
    if let Ok(c) = builtin_coefficients(spec) {
        return Ok(c);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        return invalid(format!("`{spec}` is neither a builtin coefficient system nor a readable file"));
    }
    let text = std::fs::read_to_string(path).or_else(|e| invalid(format!("{spec}: {e}")))?;
    GradedCoefficients::parse(&text).or_else(|e| invalid(format!("{spec}: {e}")))
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn prime_power_text(pp: Option<(u64, u32)>) -> String {
    pp.map_or_else(|| "-".to_string(), |(p, t)| format!("{p}^{t}"))
}

pub fn run(command: &Command, global: &Global) -> Outcome {
    if !global.max_degree.is_multiple_of(2) {
        return invalid(format!("--max-degree must be even, got {}", global.max_degree));
    }
    match command {
        Command::Newton { m } => newton(positive("m", *m)?),
        Command::Powersum { m } => powersum(positive("m", *m)?),
        Command::Bott { m, poly, iterate } => bott(*m, poly.as_deref(), *iterate),
        Command::BsuMap { max_m: given } => bsu_map(max_m(*given, global)?),
        Command::Bu6Map { max_m: given } => bu6_map(max_m(*given, global)?),
        Command::Ranks { space } => ranks(space, global.max_degree),
        Command::Pi0 { n, coeffs } => pi0(level(*n)?, load_coefficients(coeffs)?, coeffs, global.max_degree),
        Command::IndexTable { n, max_m: given } => index_table(level(*n)?, max_m(*given, global)?),
        Command::Obstruct { n, coeffs, coordinate } => {
            let level = level(*n)?;
            let system = load_coefficients(coeffs)?;
            let text = std::fs::read_to_string(coordinate)
                .or_else(|e| invalid(format!("{}: {e}", coordinate.display())))?;
            let coord = Coord::parse(system, &text).or_else(|e| invalid(format!("{}: {e}", coordinate.display())))?;
            obstruct(level, coeffs, &coordinate.display().to_string(), &coord)
        }
        Command::Selftest => Ok(selftest_report()),
    }
}

fn newton(m: u32) -> Outcome {
    let q = newton_polynomial::<BigInt>(m)?;
    let line = format!("q{m} = {q}");
    Ok((
        Rendered {
            command: "newton",
            inputs: inputs(&[("m", json!(m))]),
            results: json!({ "name": format!("q{m}"), "polynomial": q.to_string() }),
            body: Body::Lines(vec![line]),
        },
        true,
    ))
}

fn powersum(m: u32) -> Outcome {
    let s = power_sum_s::<BigInt>(m)?;
    Ok((
        Rendered {
            command: "powersum",
            inputs: inputs(&[("m", json!(m))]),
            results: json!({ "name": format!("s{m}"), "polynomial": s.to_string() }),
            body: Body::Lines(vec![format!("s{m} = {s}")]),
        },
        true,
    ))
}

fn bott(m: Option<u32>, poly: Option<&str>, iterate: u32) -> Outcome {
    if !matches!(iterate, 1 | 2) {
        return invalid(format!("--iterate must be 1 or 2, got {iterate}"));
    }
    let bu = bu_homology_ring();
    let (label, p, mut given) = match (m, poly) {
        (Some(m), _) => {
            let m = positive("m", m)?;
            let b = bu.indexed_generator("b", m)?;
            (format!("b{m}"), Polynomial::generator(&bu, b), vec![("m", json!(m))])
        }
        (None, Some(text)) => {
            let p = Polynomial::parse(&bu, text).or_else(|e| invalid(format!("--poly: {e}")))?;
            if !p.is_homogeneous() {
                return invalid("--poly must be homogeneous");
            }
            (p.to_string(), p, vec![("poly", json!(text))])
        }
        (None, None) => return invalid("give --m or --poly"),
    };
    given.push(("iterate", json!(iterate)));
    let image = bott_pushforward(&p, iterate)?;
    let op = if iterate == 1 { "B_*" } else { "B_*^2" };
    Ok((
        Rendered {
            command: "bott",
            inputs: inputs(&given),
            results: json!({ "source": p.to_string(), "image": image.to_string() }),
            body: Body::Lines(vec![format!("{op}({label}) = {image}")]),
        },
        true,
    ))
}

fn bsu_map(max_m: u32) -> Outcome {
    let map = bsu_to_bu1::<BigInt>();
    let ring = SpaceModel::Bsu.ring();
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for m in 1..=max_m {
        let g = ring.indexed_generator("c", m + 1)?;
        let image = map.image(g)?;
        let x = SpaceModel::Bu1.ring().generator("x")?;
        let coefficient = image.coefficient_of(&genus_core::Monomial::power(&SpaceModel::Bu1.ring(), x, m))?;
        let class = ring.symbol(g);
        rows.push(vec![m.to_string(), class.clone(), image.to_string()]);
        results.push(json!({ "m": m, "class": class, "image": image.to_string(), "coefficient": int(&coefficient) }));
    }
    Ok((
        Rendered {
            command: "bsu-map",
            inputs: inputs(&[("max_m", json!(max_m))]),
            results: Value::Array(results),
            body: Body::Table {
                headers: vec!["m", "class", "image in H^*(BU(1))"],
                rows,
                footer: Vec::new(),
            },
        },
        true,
    ))
}

fn bu6_map(max_m: u32) -> Outcome {
    let map = bu6_to_bu1::<BigInt>();
    let ring = SpaceModel::Bu6.ring();
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for m in 1..=max_m {
        let g = ring.indexed_generator("y", m + 2)?;
        let image = map.image(g)?;
        let info = bu6_generator_image::<BigInt>(m)?;
        let class = ring.symbol(g);
        let pp = prime_power_text(info.prime_power);
        rows.push(vec![m.to_string(), class.clone(), (m + 1).to_string(), pp.clone(), image.to_string()]);
        results.push(json!({
            "m": m,
            "class": class,
            "prime_power": info.prime_power.map(|(p, t)| json!({ "p": p, "t": t })),
            "image": image.to_string(),
            "coefficient": int(&info.coefficient),
        }));
    }
    Ok((
        Rendered {
            command: "bu6-map",
            inputs: inputs(&[("max_m", json!(max_m))]),
            results: Value::Array(results),
            body: Body::Table {
                headers: vec!["m", "class", "m+1", "prime power", "image in H^*(BU(1))"],
                rows,
                footer: Vec::new(),
            },
        },
        true,
    ))
}

fn ranks(space: &str, max_degree: u32) -> Outcome {
    let Ok(presentation) = space_model(space) else {
        let names: Vec<_> = SpaceModel::ALL.iter().map(|m| m.name()).collect();
        return invalid(format!("unknown space `{space}`; expected one of {}", names.join(", ")));
    };
    let table = presentation.ranks(max_degree);
    let rows = table.iter().map(|(d, r)| vec![d.to_string(), r.to_string()]).collect();
    let results = table.iter().map(|(d, r)| json!({ "degree": d, "rank": r })).collect();
    Ok((
        Rendered {
            command: "ranks",
            inputs: inputs(&[("space", json!(presentation.name())), ("max_degree", json!(max_degree))]),
            results: json!({ "ring": presentation.ring().to_string(), "ranks": Value::Array(results) }),
            body: Body::Table {
                headers: vec!["degree", "rank"],
                rows,
                footer: vec![format!("{}", presentation.ring())],
            },
        },
        true,
    ))
}

fn pi0(level: OperadLevel, coeffs: GradedCoefficients, spec: &str, max_degree: u32) -> Outcome {
    let factors = pi0_factors(level.n(), &coeffs, max_degree)?;
    let space = level.space();
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for f in &factors {
        let h = space.rank(f.cohomological_degree);
        let pi = coeffs.group(f.coefficient_degree);
        rows.push(vec![
            f.k.to_string(),
            format!("H^{}(B^{}BU; pi_{} {})", f.cohomological_degree, level.n(), f.coefficient_degree, coeffs.name()),
            h.to_string(),
            pi.to_string(),
            f.group.to_string(),
        ]);
        results.push(json!({
            "k": f.k,
            "cohomological_degree": f.cohomological_degree,
            "coefficient_degree": f.coefficient_degree,
            "cohomology_rank": h,
            "coefficient_group": { "rank": pi.rank, "torsion": pi.torsion },
            "group": { "rank": f.group.rank, "torsion": f.group.torsion, "text": f.group.to_string() },
        }));
    }
    Ok((
        Rendered {
            command: "pi0",
            inputs: inputs(&[
                ("n", json!(level.n())),
                ("coeffs", json!(spec)),
                ("max_degree", json!(max_degree)),
            ]),
            results: json!({ "coefficients": coeffs.name(), "factors": Value::Array(results) }),
            body: Body::Table {
                headers: vec!["k", "factor", "rank H^s", "pi_2k", "group"],
                rows,
                footer: vec![format!(
                    "pi_0 {}-Ring(MU, {}) is the product of these factors as a set",
                    level,
                    coeffs.name()
                )],
            },
        },
        true,
    ))
}

fn index_table(level: OperadLevel, max_m: u32) -> Outcome {
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for m in 1..=max_m {
        let index = restriction_index::<BigInt>(level.n(), m)?;
        let degree = 2 * m + level.n();
        rows.push(vec![m.to_string(), degree.to_string(), index.to_string()]);
        results.push(json!({ "m": m, "source_degree": degree, "index": int(&index) }));
    }
    Ok((
        Rendered {
            command: "index-table",
            inputs: inputs(&[("n", json!(level.n())), ("max_m", json!(max_m))]),
            results: Value::Array(results),
            body: Body::Table {
                headers: vec!["m", "degree", "index"],
                rows,
                footer: Vec::new(),
            },
        },
        true,
    ))
}

fn obstruct(level: OperadLevel, coeffs: &str, path: &str, coord: &Coord) -> Outcome {
    let report = coordinate_obstruction(coord, level.n())?;
    let summary = match (report.obstructed_at(), report.records.first()) {
        (Some(m), _) => format!("obstructed at m={m}"),
        (None, Some(first)) => format!("{} (m={})", first.verdict, first.m),
        (None, None) => "no nonzero coefficient; nothing to lift".to_string(),
    };
    let rows = report
        .records
        .iter()
        .map(|r| vec![r.m.to_string(), r.index.to_string(), r.verdict.to_string(), r.note.clone()])
        .collect();
    let records = report
        .records
        .iter()
        .map(|r| json!({ "m": r.m, "index": int(&r.index), "verdict": r.verdict.as_str(), "note": r.note }))
        .collect();
    Ok((
        Rendered {
            command: "obstruct",
            inputs: inputs(&[("n", json!(level.n())), ("coeffs", json!(coeffs)), ("coordinate", json!(path))]),
            results: json!({
                "level": level.to_string(),
                "records": Value::Array(records),
                "obstructed_at": report.obstructed_at(),
                "verdict": summary,
            }),
            body: Body::Table {
                headers: vec!["m", "index", "verdict", "note"],
                rows,
                footer: vec![format!("verdict: {summary}")],
            },
        },
        true,
    ))
}

fn selftest_report() -> (Rendered, bool) {
    let outcomes = selftest::run_all();
    let passed = outcomes.iter().filter(|c| c.passed).count();
    let all = passed == outcomes.len();
    let mut lines: Vec<String> = outcomes
        .iter()
        .map(|c| {
            let status = if c.passed { "PASS" } else { "FAIL" };
            format!("check {:>2} {status}  {}: {}", c.id, c.title, c.detail)
        })
        .collect();
    lines.push(format!("{passed}/{} checks passed", outcomes.len()));
    let checks = outcomes
        .iter()
        .map(|c| json!({ "id": c.id, "title": c.title, "passed": c.passed, "detail": c.detail }))
        .collect();
    (
        Rendered {
            command: "selftest",
            inputs: Map::new(),
            results: json!({ "checks": Value::Array(checks), "all_passed": all }),
            body: Body::Lines(lines),
        },
        all,
    )
}
