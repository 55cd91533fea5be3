//! The reproduction checks behind the `selftest` command.
//!
//! Each check recomputes its values through the library and compares them
//! with exact expected values or with the brute-force enumerators in
//! [`crate::partitions`] and [`crate::symmetric::brute_force_newton`].

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::classifying::{
    bsu_restriction_coefficient, bu_homology_ring, bu_restriction_coefficient_4, pushforward_via_single_steps,
    bott_pushforward, SpaceModel, SpacePresentation,
};
use crate::error::Result;
use crate::graded_poly::{GradedPolynomial, Monomial};
use crate::obstruction::{
    builtin_coefficients, coordinate_obstruction, e2_entry, pi0_factors, restriction_index, Coordinate, Verdict,
};
use crate::partitions::enumerate_partitions;
use crate::symmetric::{brute_force_newton, newton_polynomial, power_sum_s, primitive_defect};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// `Ok(Ok(detail))` on success, `Ok(Err(detail))` on a failed comparison.
type Outcome = Result<std::result::Result<String, String>>;

type Check = (u32, &'static str, Option<Duration>, fn() -> Outcome);

const CHECKS: [Check; 10] = [
    (1, "Newton oracle equivalence", Some(Duration::from_secs(5)), newton_oracle),
    (2, "power-sum leading terms", None, power_sum_terms),
    (3, "BSU restriction coefficients through the engine", None, bsu_coefficients),
    (4, "BU degree-4 coefficients and iterate consistency", None, bu4_coefficients),
    (5, "E4 restriction index table", None, e4_index_table),
    (6, "E4 verdicts on x + a3 x^4", None, e4_verdicts),
    (7, "E2 never obstructs", None, e2_consistency),
    (8, "rank tables and E2 factorization", Some(Duration::from_secs(10)), rank_tables),
    (9, "pi0 factors for MU at E2", None, pi0_sanity),
    (10, "power sums are primitive", None, primitivity),
];

/// Runs every check in order. Timing limits are enforced but not reported,
/// so the output is identical between runs.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(id, title, limit, check)| {
            let start = Instant::now();
            let result = check();
            let elapsed = start.elapsed();
            let (passed, detail) = match result {
                Ok(Ok(detail)) => match limit {
                    Some(l) if elapsed > l => (false, format!("{detail}; exceeded the {}s limit", l.as_secs())),
                    _ => (true, detail),
                },
                Ok(Err(detail)) => (false, detail),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome { id, title, passed, detail }
        })
        .collect()
}

fn newton_oracle() -> Outcome {
    for m in 1..=8 {
        let q = newton_polynomial::<BigInt>(m)?;
        for k in m..=m + 2 {
            let oracle = brute_force_newton::<BigInt>(m, k)?;
            if oracle != q {
                return Ok(Err(format!("q{m} = {q} but oracle(k={k}) = {oracle}")));
            }
        }
    }
    Ok(Ok("q1..q8 agree with the oracle for k = m..m+2".into()))
}

fn power_sum_terms() -> Outcome {
    let bu = bu_homology_ring();
    let b1 = bu.generator("b1")?;
    for m in 1..=12u32 {
        let s = power_sum_s::<BigInt>(m)?;
        let top = s.coefficient_of(&Monomial::power(&bu, b1, m))?;
        let lin = s.coefficient_of(&Monomial::generator(&bu, bu.indexed_generator("b", m)?))?;
        let sign = if m % 2 == 1 { 1 } else { -1 };
        if top != BigInt::from(1) || lin != BigInt::from(sign * m as i64) {
            return Ok(Err(format!("s{m}: b1^{m} -> {top}, b{m} -> {lin}")));
        }
    }
    Ok(Ok("m = 1..12".into()))
}

fn bsu_coefficients() -> Outcome {
    for m in 1..=12u32 {
        let got = bsu_restriction_coefficient::<BigInt>(m)?;
        let want = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
        if got != want {
            return Ok(Err(format!("m = {m}: got {got}, want {want}")));
        }
    }
    Ok(Ok("c_{m+1} -> (-1)^m x^m for m = 1..12".into()))
}

fn bu4_coefficients() -> Outcome {
    for m in 1..=12u32 {
        let got = bu_restriction_coefficient_4::<BigInt>(m)?;
        let magnitude = BigInt::from(m + 1);
        let want = if m % 2 == 1 { magnitude } else { -magnitude };
        if got != want {
            return Ok(Err(format!("m = {m}: got {got}, want {want}")));
        }
    }
    let bu = bu_homology_ring();
    for m in 1..=10 {
        let bm = GradedPolynomial::<BigInt>::generator(&bu, bu.indexed_generator("b", m)?);
        let two_steps = pushforward_via_single_steps(&bm)?;
        let direct = bott_pushforward(&bm, 2)?;
        if two_steps != direct {
            return Ok(Err(format!("b{m}: {two_steps} vs {direct}")));
        }
    }
    Ok(Ok("m = 1..12; two single steps = one double step for m = 1..10".into()))
}

fn e4_index_table() -> Outcome {
    let got = (1..=8)
        .map(|m| restriction_index::<BigInt>(4, m))
        .collect::<Result<Vec<_>>>()?;
    let want: Vec<BigInt> = [1, 1, 2, 1, 6, 1, 4, 3].into_iter().map(BigInt::from).collect();
    let shown = got.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let detail = format!("indices [{shown}]");
    Ok(if got == want { Ok(detail) } else { Err(detail) })
}

fn a3_coordinate(a3: [i64; 3]) -> Result<Coordinate<BigInt>> {
    Coordinate::new(
        builtin_coefficients("MU")?,
        [
            (1, vec![BigInt::from(0)]),
            (2, vec![BigInt::from(0); 2]),
            (3, a3.iter().map(|&v| BigInt::from(v)).collect()),
        ],
    )
}

fn e4_verdicts() -> Outcome {
    for a3 in [[1, 0, 0], [0, 0, -3], [2, 4, 5], [7, 7, 7]] {
        let r = coordinate_obstruction(&a3_coordinate(a3)?, 4)?;
        if r.obstructed_at() != Some(3) {
            return Ok(Err(format!("a3 = {a3:?} not obstructed at m = 3")));
        }
    }
    for a3 in [[2, -4, 0], [0, 0, 2], [4, 6, -8]] {
        let r = coordinate_obstruction(&a3_coordinate(a3)?, 4)?;
        if r.records.first().map(|x| (x.m, x.verdict)) != Some((3, Verdict::Unobstructed)) {
            return Ok(Err(format!("a3 = {a3:?} not unobstructed at m = 3")));
        }
    }
    Ok(Ok("odd a3 obstructed, even a3 unobstructed at leading order".into()))
}

fn e2_consistency() -> Outcome {
    for m in 1..=30 {
        let d = restriction_index::<BigInt>(2, m)?;
        if d != BigInt::from(1) {
            return Ok(Err(format!("index {d} at m = {m}")));
        }
    }
    let mu = builtin_coefficients("MU")?;
    for lead in 1..=6u32 {
        let entries = (lead..=6).map(|m| {
            let rank = mu.rank(2 * m) as i64;
            (m, (0..rank).map(|i| BigInt::from(2 * i + 1)).collect::<Vec<_>>())
        });
        let coord = Coordinate::new(mu.clone(), entries)?;
        let r = coordinate_obstruction(&coord, 2)?;
        if r.records.iter().any(|x| x.verdict != Verdict::Unobstructed) {
            return Ok(Err(format!("obstruction reported at E2 for lead {lead}")));
        }
    }
    Ok(Ok("index 1 for m = 1..30; no E2 obstruction for odd coordinates".into()))
}

fn rank_tables() -> Outcome {
    let bsu = SpacePresentation::new(SpaceModel::Bsu);
    let bu6 = SpacePresentation::new(SpaceModel::Bu6);
    for d in 0..=20u32 {
        let (a, b) = (enumerate_partitions(d, 2).len() as u64, enumerate_partitions(d, 3).len() as u64);
        if bsu.rank(2 * d) != a || bu6.rank(2 * d) != b {
            return Ok(Err(format!("degree {}: BSU {} vs {a}, BU6 {} vs {b}", 2 * d, bsu.rank(2 * d), bu6.rank(2 * d))));
        }
    }
    let mu = builtin_coefficients("MU")?;
    for (n, min_part) in [(2u32, 2u32), (4, 3)] {
        for s in 0..=40u32 {
            let h = if s % 2 == 0 { enumerate_partitions(s / 2, min_part).len() as u64 } else { 0 };
            for q in 0..=40u32 {
                let pi = if q % 2 == 0 { enumerate_partitions(q / 2, 1).len() as u64 } else { 0 };
                let got = e2_entry(n, s, q, &mu)?.rank;
                if got != h * pi {
                    return Ok(Err(format!("E{n} entry (s={s}, q={q}) rank {got}, want {}", h * pi)));
                }
            }
        }
    }
    Ok(Ok("d <= 20 and the full s, q <= 40 grid".into()))
}

fn pi0_sanity() -> Outcome {
    const STATED: [u64; 3] = [1, 2, 3];
    let mu = builtin_coefficients("MU")?;
    let factors = pi0_factors(2, &mu, 6)?;
    let got: Vec<u64> = factors.iter().map(|f| f.group.rank).collect();
    let brute: Vec<u64> = (1..=3u32)
        .map(|k| enumerate_partitions(k + 1, 2).len() as u64 * enumerate_partitions(k, 1).len() as u64)
        .collect();
    if got != brute {
        return Ok(Err(format!("engine {got:?} vs brute force {brute:?}")));
    }
    Ok(if got == STATED {
        Ok(format!("ranks {got:?}"))
    } else {
        Err(format!("ranks {got:?} (brute force {brute:?}) differ from the stated {STATED:?}"))
    })
}

fn primitivity() -> Outcome {
    for m in 1..=10 {
        let defect = primitive_defect(&power_sum_s::<BigInt>(m)?)?;
        if !defect.is_zero() {
            return Ok(Err(format!("s{m} has defect {defect}")));
        }
    }
    Ok(Ok("s1..s10".into()))
}
