//! Seeded verification suites for the example codes.
//!
//! Every check draws from one [`Sampler`] in a fixed order, so a seed
//! determines the report completely.

use num_traits::ToPrimitive;

use crate::examples::{build, collapse_advance, ExampleBundle, ExampleParams, ScanExpectation};
use crate::factormap::{
    check_commute, check_injective_pair, extract_pi_v, length_coincidence_scan, locality_witness,
    Code, GeneralMap, Injectivity, SimpleMap, SplitCode,
};
use crate::report::{CheckRecord, FixtureComparison, ReportDocument, ScanRecord, Status, WitnessRecord};
use crate::sampling::{Sampler, GENERATOR};
use crate::suspension::{CeilingFunction, SuspensionPoint};
use crate::symbolic::{Level, SymbolicPoint};
use crate::{Error, QLin, Result};

/// Largest `|u|` for flow offsets.
pub const FLOW_RANGE: i64 = 50;
/// Search bound for orbit equivalence between images.
pub const EQUIVALENCE_BOUND: u32 = 64;
/// Coefficient-sum bound of the length scan.
pub const SCAN_BOUND: u32 = 50;
/// Radii probed for locality witnesses.
pub const WITNESS_RADII: std::ops::RangeInclusive<usize> = 0..=5;
/// Probes per radius.
pub const WITNESS_PROBES: usize = 200;
const SCAN_SAMPLE: usize = 10;

fn describe(x: &SymbolicPoint) -> String {
    match x.level() {
        Level::Ground => format!("rho = {}", x.rho()),
        Level::Upper => format!("rho = {} (upper)", x.rho()),
    }
}

fn record_result<T>(check: &mut CheckRecord, what: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            check.fail(format!("{}: {e}", what()));
            None
        }
    }
}

/// `t(Tx) − t(x) = g(x) − h(πx)` and `π∘T = S∘π` on generic points.
pub fn simple_identity(map: &SimpleMap, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("simple_identity");
    for _ in 0..samples {
        let x = sampler.generic_point(map.source.system());
        let outcome = map
            .check_identity(&x)
            .and_then(|id| Ok((id, map.check_pi_equivariant(&x)?)));
        if let Some((id, equivariant)) = record_result(&mut check, || describe(&x), outcome) {
            check.record(id.holds() && equivariant, || {
                format!("{}: lhs {} rhs {} equivariant {equivariant}", describe(&x), id.lhs, id.rhs)
            });
        }
    }
    check
}

/// Which of the three strata of a doubled system a point lies in.
pub fn stratum(y: &SymbolicPoint) -> Result<&'static str> {
    let label = y.system().doubled_label().ok_or(Error::NotDoubled)?;
    Ok(match (y.level(), y.symbol()? == label) {
        (Level::Upper, _) => "X1'",
        (Level::Ground, true) => "X1",
        (Level::Ground, false) => "X0",
    })
}

fn stratified_point(system: &std::sync::Arc<crate::SubshiftSystem>, i: usize, sampler: &mut Sampler) -> SymbolicPoint {
    let label = system.doubled_label();
    match i % 3 {
        0 => sampler.generic_point_where(system, |y| label.is_none_or(|l| y.symbol().ok() != Some(l))),
        1 => sampler.generic_point_where(system, |y| {
            y.level() == Level::Ground && label.is_none_or(|l| y.symbol().ok() == Some(l))
        }),
        _ => sampler.generic_point_on(system, Level::Upper),
    }
}

/// Both cohomological equations, with the floor index compared to `m(y)`
/// and the next floor index to 0. Samples cycle through the strata.
pub fn cohom_identity(map: &GeneralMap, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("cohom_identity");
    let system = map.source.system().clone();
    for i in 0..samples {
        let y = stratified_point(&system, i, sampler);
        let outcome = map
            .check_cohom(&y)
            .and_then(|c| Ok((c, collapse_advance(&y)?, stratum(&y)?)));
        let Some((c, m, stratum)) = record_result(&mut check, || describe(&y), outcome) else {
            continue;
        };
        check.tally(stratum);
        if c.floor_index == m {
            check.tally("floor_index_equals_m");
        }
        check.record(c.holds() && c.floor_index == m && c.next_floor_index == 0, || {
            format!(
                "{} [{stratum}]: floor index {} (m = {m}), next {}, bases match {}, lhs {} rhs {}",
                describe(&y),
                c.floor_index,
                c.next_floor_index,
                c.bases_match,
                c.increment.lhs,
                c.increment.rhs
            )
        });
    }
    check
}

/// Values of `v(Sy) − v(y)` against the expected set.
pub fn transfer_increments(map: &GeneralMap, expected: &[QLin], samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("transfer_increments");
    let system = map.source.system().clone();
    for i in 0..samples {
        let y = stratified_point(&system, i, sampler);
        let outcome = y.step().and_then(|sy| Ok(map.transfer(&sy)? - map.transfer(&y)?));
        let Some(d) = record_result(&mut check, || describe(&y), outcome) else {
            continue;
        };
        check.tally(d.to_string());
        check.record(expected.contains(&d), || format!("{}: increment {d}", describe(&y)));
    }
    check
}

/// `φ(ξ·u) = φ(ξ)·u` on seeded pairs with `|u| ≤ FLOW_RANGE`; tallies pairs
/// whose flow leaves the starting tile.
pub fn commutation(code: &Code, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("commutation");
    for _ in 0..samples {
        let sp = sampler.suspension_point(code.source());
        let u = sampler.offset(FLOW_RANGE);
        let Some(c) = record_result(&mut check, || describe(&sp.base), check_commute(code, &sp, &u)) else {
            continue;
        };
        if c.crossed {
            check.tally("crossed");
        }
        check.record(c.holds, || format!("{}, s = {}, u = {u}", describe(&sp.base), sp.height));
    }
    check
}

/// `g(x, m + n) = g(x, m) + g(T^m x, n)` for `m, n ∈ [−20, 20]`.
pub fn cocycle_additivity(g: &CeilingFunction, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("cocycle_additivity");
    for _ in 0..samples {
        let x = sampler.generic_point(g.system());
        let (m, n) = (sampler.int(-20, 20), sampler.int(-20, 20));
        let outcome = (|| {
            let whole = g.cocycle(&x, m + n)?;
            let parts = g.cocycle(&x, m)? + g.cocycle(&x.advance(m)?, n)?;
            Ok(whole == parts)
        })();
        if let Some(ok) = record_result(&mut check, || describe(&x), outcome) {
            check.record(ok, || format!("{}, m = {m}, n = {n}", describe(&x)));
        }
    }
    check
}

/// `(ξ·u)·w = ξ·(u + w)`, results canonical.
pub fn flow_additivity(g: &CeilingFunction, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("flow_additivity");
    for _ in 0..samples {
        let sp = sampler.suspension_point(g);
        let (u, w) = (sampler.offset(FLOW_RANGE), sampler.offset(FLOW_RANGE));
        let outcome = (|| {
            let stepwise = g.flow(&g.flow(&sp, &u)?, &w)?;
            let direct = g.flow(&sp, &(&u + &w))?;
            Ok(stepwise == direct && g.is_canonical(&direct)?)
        })();
        if let Some(ok) = record_result(&mut check, || describe(&sp.base), outcome) {
            check.record(ok, || format!("{}, s = {}, u = {u}, w = {w}", describe(&sp.base), sp.height));
        }
    }
    check
}

/// Orbit steps needed to cover a height difference, plus slack.
pub fn equivalence_bound(g: &CeilingFunction, gap: &QLin) -> u32 {
    let steps = (gap.abs().to_f64() / g.min_value().to_f64()).ceil();
    steps.to_u32().unwrap_or(u32::MAX - 2) + 2
}

/// The canonical form of `(x, s)` is equivalent to `(x, s)`.
pub fn canonical_equivalence(g: &CeilingFunction, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("canonical_equivalence");
    for _ in 0..samples {
        let x = sampler.generic_point(g.system());
        let s = sampler.offset(FLOW_RANGE);
        let outcome = (|| {
            let c = g.canonical(&x, &s)?;
            let found = g.equivalent((&x, &s), (&c.base, &c.height), equivalence_bound(g, &s))?;
            Ok(found.is_some() && g.is_canonical(&c)?)
        })();
        if let Some(ok) = record_result(&mut check, || describe(&x), outcome) {
            check.record(ok, || format!("{}, s = {s}", describe(&x)));
        }
    }
    check
}

/// Pairs of distinct canonical points must not have equivalent images
/// unless the points themselves are equivalent.
pub fn injectivity(code: &Code, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("injectivity");
    let g = code.source();
    for _ in 0..samples {
        let a = sampler.suspension_point(g);
        let b = sampler.suspension_point(g);
        if a == b {
            continue;
        }
        let outcome = check_injective_pair(code, &a, &b, EQUIVALENCE_BOUND);
        let Some(result) = record_result(&mut check, || describe(&a.base), outcome) else {
            continue;
        };
        check.tally(match result {
            Injectivity::ImagesDistinct => "images_distinct",
            Injectivity::SourcesEquivalent { .. } => "sources_equivalent",
            Injectivity::Collapsed { .. } => "collapsed",
        });
        check.record(result.is_consistent(), || {
            format!("{} s = {} and {} s = {}", describe(&a.base), a.height, describe(&b.base), b.height)
        });
    }
    check
}

/// `[ρ, s + 1/2]` and `[ρ + 1/2, s]` have the same image yet are not
/// equivalent.
pub fn two_to_one(map: &SimpleMap, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("two_to_one");
    let g = &map.source;
    let half = QLin::ratio(1, 2);
    for _ in 0..samples {
        let x = sampler.generic_point_where(g.system(), |p| *p.rho() < half);
        let outcome = (|| {
            let y = SymbolicPoint::ground(g.system().clone(), x.rho() + &half)?;
            let s = sampler.height(g, &y);
            let a = g.canonical(&x, &(&s + &half))?;
            let b = SuspensionPoint::new(y, s);
            let same_image = map.apply(&a)? == map.apply(&b)?;
            let apart = g
                .equivalent((&a.base, &a.height), (&b.base, &b.height), EQUIVALENCE_BOUND)?
                .is_none();
            Ok(same_image && apart)
        })();
        if let Some(ok) = record_result(&mut check, || describe(&x), outcome) {
            check.record(ok, || describe(&x));
        }
    }
    check
}

/// `(π_Y φ[x, 0], π_ℝ φ[x, 0])` recovers the symbol map and transfer.
pub fn extraction(code: &Code, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("extraction");
    for _ in 0..samples {
        let x = sampler.generic_point(code.source().system());
        let outcome = (|| {
            let (base, v) = extract_pi_v(code, &x)?;
            let expected = match code {
                Code::Simple(m) => m.target.canonical(&m.pi(&x)?, &m.transfer(&x)?)?,
                Code::General(m) => m.target.canonical(&m.pi(&x)?, &m.transfer(&x)?)?,
                Code::Split(m) => SuspensionPoint::new(
                    SymbolicPoint::ground(m.target.system().clone(), x.rho().clone())?,
                    QLin::zero(),
                ),
            };
            Ok(base == expected.base && v == expected.height)
        })();
        if let Some(ok) = record_result(&mut check, || describe(&x), outcome) {
            check.record(ok, || describe(&x));
        }
    }
    check
}

/// Splitting then merging a patch of whole tiles is the identity and keeps
/// the total length.
pub fn split_round_trip(code: &SplitCode, samples: usize, sampler: &mut Sampler) -> CheckRecord {
    let mut check = CheckRecord::new("split_round_trip");
    for _ in 0..samples {
        let sp = sampler.suspension_point(&code.source);
        let half_width = QLin::integer(sampler.int(1, 10));
        let outcome = (|| {
            let patch = code.source.patch(&sp, &half_width)?;
            let split = code.split_patch(&patch);
            let merged = code.merge_patch(&split)?;
            Ok(merged == patch && split.total_length() == patch.total_length() && split.abuts())
        })();
        if let Some(ok) = record_result(&mut check, || describe(&sp.base), outcome) {
            check.record(ok, || format!("{}, half width {half_width}", describe(&sp.base)));
        }
    }
    check
}

/// Witness search over `radii`; `expect_witness` states which outcome
/// passes.
pub fn locality(
    code: &Code,
    radii: impl IntoIterator<Item = usize>,
    probes: usize,
    expect_witness: bool,
    sampler: &mut Sampler,
) -> (CheckRecord, Vec<WitnessRecord>) {
    let mut check = CheckRecord::new("locality");
    let mut found = Vec::new();
    for r in radii {
        let Some(w) = record_result(
            &mut check,
            || format!("radius {r}"),
            locality_witness(code, r, probes, sampler),
        ) else {
            continue;
        };
        let ok = match &w {
            Some(w) => expect_witness && (w.label_a != w.label_b || w.image_gap.is_positive()),
            None => !expect_witness,
        };
        check.record(ok, || format!("radius {r}: witness {}", if w.is_some() { "found" } else { "missing" }));
        found.push(WitnessRecord { radius: r, witness: w });
    }
    (check, found)
}

/// Runs the coincidence scan and compares it with the expectation.
pub fn scan(bundle: &ExampleBundle, bound: u32) -> Result<(CheckRecord, ScanRecord)> {
    let f = &bundle.fixtures;
    let mut check = CheckRecord::new("length_scan");
    let found = length_coincidence_scan(&f.source_lengths, &f.target_lengths, bound)?;
    let ok = match &f.scan {
        None => true,
        Some(ScanExpectation::Empty) => found.is_empty(),
        Some(ScanExpectation::Only { source, target }) => {
            let i = f.source_lengths.iter().position(|l| l == source);
            let j = f.target_lengths.iter().position(|l| l == target);
            match (i, j) {
                (Some(i), Some(j)) => !found.is_empty() && found.iter().all(|c| c.uses_only(i, j)),
                _ => false,
            }
        }
    };
    check.record(ok, || format!("{} coincidences at bound {bound}", found.len()));
    Ok((
        check,
        ScanRecord {
            bound,
            source_lengths: f.source_lengths.clone(),
            target_lengths: f.target_lengths.clone(),
            coincidences: found.len(),
            sample: found.into_iter().take(SCAN_SAMPLE).collect(),
        },
    ))
}

pub fn fixture_comparisons(bundle: &ExampleBundle) -> Vec<FixtureComparison> {
    let mut out = vec![
        FixtureComparison::new(
            "source_lengths",
            bundle.fixtures.source_lengths.clone(),
            bundle.source().value_set().into_iter().collect(),
        ),
        FixtureComparison::new(
            "target_lengths",
            bundle.fixtures.target_lengths.clone(),
            bundle.target().value_set().into_iter().collect(),
        ),
    ];
    if !bundle.fixtures.transfer_increments.is_empty() {
        let positive = bundle.source().min_value().is_positive();
        out.push(FixtureComparison::new(
            "source_ceiling_positive",
            vec![QLin::one()],
            vec![if positive { QLin::one() } else { QLin::zero() }],
        ));
    }
    out
}

/// Full suite for one example with default parameters.
pub fn run(id: u8, samples: usize, seed: u64) -> Result<ReportDocument> {
    let bundle = build(id, &ExampleParams::default())?;
    run_bundle(&bundle, samples, seed)
}

pub fn run_bundle(bundle: &ExampleBundle, samples: usize, seed: u64) -> Result<ReportDocument> {
    let mut sampler = Sampler::new(seed);
    let code = &bundle.code;
    let half = samples.div_ceil(2);
    let mut checks = Vec::new();

    match code {
        Code::Simple(m) => checks.push(simple_identity(m, samples, &mut sampler)),
        Code::General(m) => {
            checks.push(cohom_identity(m, samples, &mut sampler));
            checks.push(transfer_increments(
                m,
                &bundle.fixtures.transfer_increments,
                half,
                &mut sampler,
            ));
        }
        Code::Split(s) => checks.push(split_round_trip(s, samples.div_ceil(10), &mut sampler)),
    }
    checks.push(commutation(code, half, &mut sampler));
    checks.push(cocycle_additivity(code.source(), half, &mut sampler));
    checks.push(flow_additivity(code.source(), half, &mut sampler));
    checks.push(canonical_equivalence(code.source(), half, &mut sampler));
    match (bundle.fixtures.injective, code) {
        (Some(true), _) => checks.push(injectivity(code, samples.div_ceil(5), &mut sampler)),
        (Some(false), Code::Simple(m)) => checks.push(two_to_one(m, samples.div_ceil(5), &mut sampler)),
        _ => {}
    }
    checks.push(extraction(code, half, &mut sampler));

    let mut witnesses = Vec::new();
    if code.source().system().is_plain() {
        let (check, found) = locality(
            code,
            WITNESS_RADII,
            WITNESS_PROBES,
            bundle.fixtures.non_local,
            &mut sampler,
        );
        checks.push(check);
        witnesses = found;
    } else {
        checks.push(CheckRecord::skipped("locality", "source is a doubled system"));
    }

    let mut scan_record = None;
    if bundle.fixtures.scan.is_some() {
        let (check, record) = scan(bundle, SCAN_BOUND)?;
        checks.push(check);
        scan_record = Some(record);
    }

    let mut report = ReportDocument {
        command: "verify".into(),
        example: bundle.id,
        code: code.kind().into(),
        seed,
        generator: GENERATOR.into(),
        samples,
        status: Status::Pass,
        checks,
        fixtures: fixture_comparisons(bundle),
        witnesses,
        scan: scan_record,
        duration_secs: None,
    };
    report.finish();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for id in 1..=5 {
            let report = run(id, 30, 3).unwrap();
            assert!(report.passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn strata_are_distinguished() {
        let b = build(5, &ExampleParams::default()).unwrap();
        let sys = b.source().system().clone();
        let mut sampler = Sampler::new(1);
        let kinds: Vec<_> = (0..3)
            .map(|i| stratum(&stratified_point(&sys, i, &mut sampler)).unwrap())
            .collect();
        assert_eq!(kinds, ["X0", "X1", "X1'"]);
    }
}
