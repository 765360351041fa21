//! Builders for the five example constructions.
//!
//! 1. Simple, non-local, one-to-one code over a Sturmian system.
//! 2. Simple, non-local code that is two-to-one (a doubling of the circle).
//! 3. Example 1 with heights chosen so that no local code exists.
//! 4. Local tile-splitting code onto the doubled system; not simple.
//! 5. General code from the doubled system that is neither simple nor local.
//!
//! Builders validate every parameter constraint before constructing
//! anything. Ceilings that are defined by a formula (`g` in examples 1, 2, 3
//! and 5) are evaluated on a partition refined enough for the formula to be
//! constant on each cell; [`Fixtures`] carry the closed-form value sets.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;

use crate::exactreal::linearly_independent;
use crate::factormap::{Code, GeneralMap, Piece, SimpleMap, SplitCode, SymbolMap, TransferRule};
use crate::suspension::CeilingFunction;
use crate::symbolic::{cylinder, orbit_hit, BlockCode, Level, Partition, SubshiftSystem, Symbol, SymbolicPoint};
use crate::{Error, QLin, Result};

/// Free parameters shared by the examples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleParams {
    /// Rotation angle.
    pub alpha: QLin,
    pub eta1: QLin,
    pub eta2: QLin,
    /// Examples 1 and 2 use the division point `γ = frac(k·α)`.
    pub gamma_multiple: i64,
    /// Length of the coding interval `[0, β)` in examples 4 and 5.
    pub beta: QLin,
    /// Default sampling coordinate.
    pub rho0: QLin,
}

impl Default for ExampleParams {
    fn default() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        let quarter = BigRational::new(1.into(), 4.into());
        ExampleParams {
            alpha: (QLin::sqrt5() - QLin::one()).scale(&half),
            eta1: QLin::integer(5) + QLin::sqrt2(),
            eta2: QLin::integer(5) + QLin::sqrt3(),
            gamma_multiple: 2,
            beta: (QLin::integer(3) - QLin::sqrt5()).scale(&quarter),
            rho0: QLin::ratio(1, 7),
        }
    }
}

/// Expected outcome of the tile-length coincidence scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "expect", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum ScanExpectation {
    Empty,
    /// Every coincidence uses a single length on each side.
    Only { source: QLin, target: QLin },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fixtures {
    pub id: u8,
    /// Tile lengths of the source system.
    pub source_lengths: Vec<QLin>,
    /// Tile lengths of the target system.
    pub target_lengths: Vec<QLin>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanExpectation>,
    /// Whether locality witnesses exist at every radius.
    pub non_local: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injective: Option<bool>,
    /// Values taken by `v(Sy) − v(y)` in example 5.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub transfer_increments: Vec<QLin>,
}

#[derive(Clone, Debug)]
pub struct ExampleBundle {
    pub id: u8,
    pub params: ExampleParams,
    pub code: Code,
    pub fixtures: Fixtures,
}

impl ExampleBundle {
    pub fn source(&self) -> &CeilingFunction {
        self.code.source()
    }

    pub fn target(&self) -> &CeilingFunction {
        self.code.target()
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ParameterViolation(msg.into())
}

fn check_alpha(alpha: &QLin) -> Result<()> {
    if alpha.is_rational() {
        return Err(violation("α must be irrational"));
    }
    if !(alpha.is_positive() && *alpha < QLin::one()) {
        return Err(violation("α must lie in (0, 1)"));
    }
    Ok(())
}

fn check_heights(p: &ExampleParams) -> Result<()> {
    let five = QLin::integer(5);
    if p.eta1 <= five || p.eta2 <= five {
        return Err(violation("η₁ and η₂ must exceed 5"));
    }
    Ok(())
}

fn check_independent(p: &ExampleParams) -> Result<()> {
    if !linearly_independent(&[QLin::one(), p.alpha.clone(), p.eta1.clone(), p.eta2.clone()]) {
        return Err(violation("1, α, η₁, η₂ must be linearly independent over ℤ"));
    }
    Ok(())
}

fn division_point(p: &ExampleParams) -> Result<QLin> {
    let gamma = p.alpha.scale_int(p.gamma_multiple).frac();
    if !(gamma.is_positive() && gamma < QLin::ratio(1, 4)) {
        return Err(violation(format!("γ = {gamma} must lie in ℤα ∩ (0, 1/4)")));
    }
    Ok(gamma)
}

/// `b − k·α` for every boundary `b` and `k ∈ 0..=steps`.
fn orbit_cuts(boundaries: &[QLin], alpha: &QLin, steps: i64) -> Vec<QLin> {
    boundaries
        .iter()
        .flat_map(|b| (0..=steps).map(move |k| b - &alpha.scale_int(k)))
        .collect()
}

fn two_heights(system: &Arc<SubshiftSystem>, split: &QLin, p: &ExampleParams) -> Result<CeilingFunction> {
    CeilingFunction::from_formula(system.clone(), |y| {
        Ok(if y.rho() < split {
            p.eta1.clone()
        } else {
            p.eta2.clone()
        })
    })
}

/// `g(x) = t(Tx) − t(x) + h(πx)`.
fn coboundary_ceiling(
    source: &Arc<SubshiftSystem>,
    target: &CeilingFunction,
    pi: &SymbolMap,
    t: &TransferRule,
) -> Result<CeilingFunction> {
    let tsys = target.system().clone();
    CeilingFunction::from_formula(source.clone(), |x| {
        let step = t.eval(&x.step()?, pi, &tsys)? - t.eval(x, pi, &tsys)?;
        Ok(step + target.eval(&pi.apply(x, &tsys)?)?)
    })
}

fn half_coded() -> Partition {
    Partition::from_cuts(&[Symbol(1), Symbol(0)], &[QLin::ratio(1, 2)]).expect("valid partition")
}

/// Examples 1 and 3: Sturmian coding of `[0, 1/2)`, `π` the identity,
/// `t = ρ`, `h = η₁` on `[0, γ)` and `η₂` on `[γ, 1)`.
fn sturmian_simple(id: u8, p: &ExampleParams, gamma: QLin) -> Result<ExampleBundle> {
    let bounds = [QLin::zero(), QLin::ratio(1, 2), gamma.clone()];
    let sys = Arc::new(SubshiftSystem::plain(
        p.alpha.clone(),
        half_coded().refine(orbit_cuts(&bounds, &p.alpha, 1)),
    )?);
    let h = two_heights(&sys, &gamma, p)?;
    let (pi, t) = (SymbolMap::Identity, TransferRule::Rho);
    let g = coboundary_ceiling(&sys, &h, &pi, &t)?;
    Ok(ExampleBundle {
        id,
        params: p.clone(),
        code: Code::Simple(SimpleMap {
            source: g,
            target: h,
            pi,
            t,
        }),
        fixtures: expected_fixtures(id, p)?,
    })
}

pub fn build_example1(p: &ExampleParams) -> Result<ExampleBundle> {
    check_alpha(&p.alpha)?;
    check_heights(p)?;
    let gamma = division_point(p)?;
    sturmian_simple(1, p, gamma)
}

pub fn build_example2(p: &ExampleParams) -> Result<ExampleBundle> {
    check_alpha(&p.alpha)?;
    check_heights(p)?;
    let gamma = division_point(p)?;
    let split = gamma.scale_int(2);

    let halves = Partition::from_cuts(&[Symbol(0), Symbol(1)], &[QLin::ratio(1, 2)])?;
    let target_sys = Arc::new(SubshiftSystem::plain(
        p.alpha.scale_int(2).frac(),
        halves.refine([split.clone()]),
    )?);
    let h = two_heights(&target_sys, &split, p)?;

    let quarters = Partition::from_cuts(
        &[Symbol(0), Symbol(1), Symbol(2), Symbol(3)],
        &[QLin::ratio(1, 4), QLin::ratio(1, 2), QLin::ratio(3, 4)],
    )?;
    let half = BigRational::new(1.into(), 2.into());
    let mut bounds = quarters.boundaries();
    for b in target_sys.partition().boundaries() {
        let pre = b.scale(&half);
        bounds.push(&pre + &QLin::ratio(1, 2));
        bounds.push(pre);
    }
    let source_sys = Arc::new(SubshiftSystem::plain(
        p.alpha.clone(),
        quarters.refine(orbit_cuts(&bounds, &p.alpha, 1)),
    )?);
    let pi = SymbolMap::Block {
        code: BlockCode::new([
            (Symbol(0), Symbol(0)),
            (Symbol(1), Symbol(1)),
            (Symbol(2), Symbol(0)),
            (Symbol(3), Symbol(1)),
        ]),
        multiplier: 2,
    };
    let t = TransferRule::Rho;
    let g = coboundary_ceiling(&source_sys, &h, &pi, &t)?;
    Ok(ExampleBundle {
        id: 2,
        params: p.clone(),
        code: Code::Simple(SimpleMap {
            source: g,
            target: h,
            pi,
            t,
        }),
        fixtures: expected_fixtures(2, p)?,
    })
}

pub fn build_example3(p: &ExampleParams) -> Result<ExampleBundle> {
    check_alpha(&p.alpha)?;
    check_heights(p)?;
    check_independent(p)?;
    sturmian_simple(3, p, QLin::one() - p.alpha.clone())
}

fn check_short_interval(p: &ExampleParams) -> Result<Partition> {
    if p.alpha <= QLin::ratio(1, 2) {
        return Err(violation("α must exceed 1/2"));
    }
    if !(p.beta.is_positive() && p.beta < QLin::one()) {
        return Err(violation("β must lie in (0, 1)"));
    }
    let coding = Partition::from_cuts(&[Symbol(1), Symbol(0)], std::slice::from_ref(&p.beta))?;
    let probe = SubshiftSystem::plain(p.alpha.clone(), coding.clone())?;
    if !cylinder(&probe, &[Symbol(1), Symbol(1)], 0)?.is_empty() {
        return Err(violation("the block 11 must not occur (need β ≤ 1 − α)"));
    }
    Ok(coding)
}

pub fn build_example4(p: &ExampleParams) -> Result<ExampleBundle> {
    check_alpha(&p.alpha)?;
    let coding = check_short_interval(p)?;
    let x = Arc::new(SubshiftSystem::plain(p.alpha.clone(), coding.clone())?);
    let y = Arc::new(SubshiftSystem::doubled(p.alpha.clone(), coding, Symbol(1))?);
    let half = QLin::ratio(1, 2);
    let g = CeilingFunction::constant(x, QLin::one())?;
    let h = CeilingFunction::from_formula(y, |y| {
        Ok(if y.symbol()? == Symbol(1) { half.clone() } else { QLin::one() })
    })?;
    let pieces = BTreeMap::from([(
        Symbol(1),
        vec![
            Piece {
                length: half.clone(),
                level: Level::Ground,
            },
            Piece {
                length: half,
                level: Level::Upper,
            },
        ],
    )]);
    Ok(ExampleBundle {
        id: 4,
        params: p.clone(),
        code: Code::Split(SplitCode::new(g, h, pieces)?),
        fixtures: expected_fixtures(4, p)?,
    })
}

/// `m(y)`: 1 on the zero cylinder and on the upper floor, 0 on the ground
/// floor over the doubled symbol. Collapsing satisfies `π(Sy) = T^{m(y)} πy`.
pub fn collapse_advance(y: &SymbolicPoint) -> Result<i64> {
    let label = y.system().doubled_label().ok_or(Error::NotDoubled)?;
    Ok(i64::from(y.level() == Level::Upper || y.symbol()? != label))
}

pub fn build_example5(p: &ExampleParams) -> Result<ExampleBundle> {
    check_alpha(&p.alpha)?;
    check_heights(p)?;
    check_independent(p)?;
    let coding = check_short_interval(p)?;
    let gamma = QLin::one() - p.alpha.clone();
    if p.beta >= gamma {
        return Err(violation("β must be smaller than 1 − α"));
    }
    if let Some(n) = orbit_hit(&p.beta, &p.alpha) {
        return Err(violation(format!("β lies on the orbit of 0 (n = {n})")));
    }

    let x = Arc::new(SubshiftSystem::plain(p.alpha.clone(), coding.refine([gamma.clone()]))?);
    let h = two_heights(&x, &gamma, p)?;

    let bounds = x.partition().boundaries();
    let y = Arc::new(SubshiftSystem::doubled(
        p.alpha.clone(),
        coding.refine(orbit_cuts(&bounds, &p.alpha, 2)),
        Symbol(1),
    )?);
    let (pi, v) = (SymbolMap::Collapse, TransferRule::RhoOfImageAfterStep);
    let g = CeilingFunction::from_formula(y, |y| {
        let increment = v.eval(&y.step()?, &pi, &x)? - v.eval(y, &pi, &x)?;
        Ok(increment + h.cocycle(&pi.apply(y, &x)?, collapse_advance(y)?)?)
    })?;
    Ok(ExampleBundle {
        id: 5,
        params: p.clone(),
        code: Code::General(GeneralMap {
            source: g,
            target: h,
            pi,
            v,
        }),
        fixtures: expected_fixtures(5, p)?,
    })
}

pub fn build(id: u8, p: &ExampleParams) -> Result<ExampleBundle> {
    match id {
        1 => build_example1(p),
        2 => build_example2(p),
        3 => build_example3(p),
        4 => build_example4(p),
        5 => build_example5(p),
        other => Err(Error::UnknownExample(other)),
    }
}

fn sorted(mut v: Vec<QLin>) -> Vec<QLin> {
    v.sort();
    v.dedup();
    v
}

/// Closed-form value sets for each example.
pub fn expected_fixtures(id: u8, p: &ExampleParams) -> Result<Fixtures> {
    let (a, e1, e2) = (&p.alpha, &p.eta1, &p.eta2);
    let one = QLin::one();
    let am1 = a - &one;
    let heights = sorted(vec![e1.clone(), e2.clone()]);
    let base = Fixtures {
        id,
        source_lengths: vec![],
        target_lengths: heights.clone(),
        scan: None,
        non_local: true,
        injective: None,
        transfer_increments: vec![],
    };
    Ok(match id {
        1 => Fixtures {
            source_lengths: sorted(vec![e1 + a, e2 + a, e2 + &am1]),
            injective: Some(true),
            ..base
        },
        2 => Fixtures {
            source_lengths: sorted(vec![e1 + a, e2 + a, e1 + &am1, e2 + &am1]),
            injective: Some(false),
            ..base
        },
        3 => Fixtures {
            source_lengths: sorted(vec![e1 + a, e2 + &am1]),
            scan: Some(ScanExpectation::Empty),
            injective: Some(true),
            ..base
        },
        4 => Fixtures {
            source_lengths: vec![one.clone()],
            target_lengths: sorted(vec![QLin::ratio(1, 2), one]),
            non_local: false,
            injective: Some(true),
            ..base
        },
        5 => Fixtures {
            source_lengths: sorted(vec![a.clone(), &am1 + e1, e2.clone(), e2 + a, &am1 + e2]),
            scan: Some(ScanExpectation::Only {
                source: e2.clone(),
                target: e2.clone(),
            }),
            transfer_increments: sorted(vec![QLin::zero(), a.clone(), am1]),
            ..base
        },
        other => return Err(Error::UnknownExample(other)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_satisfy_constraints() {
        let p = ExampleParams::default();
        let gamma = p.alpha.scale_int(2).frac();
        assert_eq!(gamma, QLin::sqrt5() - QLin::integer(2));
        assert!(gamma.is_positive() && gamma < QLin::ratio(1, 4));
        // β = (3 − √5)/4 ≈ 0.191 < 1 − α ≈ 0.382
        assert!(p.beta < QLin::one() - p.alpha.clone());
        assert_eq!(orbit_hit(&p.beta, &p.alpha), None);
        assert!((p.beta.to_f64() - 0.190983).abs() < 1e-6);
    }

    #[test]
    fn ceilings_match_fixtures() {
        let p = ExampleParams::default();
        for id in 1..=5 {
            let b = build(id, &p).unwrap();
            let src: Vec<QLin> = b.source().value_set().into_iter().collect();
            let tgt: Vec<QLin> = b.target().value_set().into_iter().collect();
            assert_eq!(src, b.fixtures.source_lengths, "source lengths of example {id}");
            assert_eq!(tgt, b.fixtures.target_lengths, "target lengths of example {id}");
        }
    }

    #[test]
    fn spot_values() {
        let p = ExampleParams::default();
        let b1 = build_example1(&p).unwrap();
        let x = SymbolicPoint::ground(b1.target().system().clone(), p.rho0.clone()).unwrap();
        assert_eq!(b1.target().eval(&x).unwrap(), p.eta1);
        let b3 = build_example3(&p).unwrap();
        let x = SymbolicPoint::ground(b3.source().system().clone(), p.rho0.clone()).unwrap();
        assert_eq!(b3.source().eval(&x).unwrap(), &p.eta1 + &p.alpha);
        let b4 = build_example4(&p).unwrap();
        let x = SymbolicPoint::ground(b4.source().system().clone(), p.rho0.clone()).unwrap();
        assert_eq!(b4.source().eval(&x).unwrap(), QLin::one());
    }

    #[test]
    fn builders_reject_violations() {
        let base = ExampleParams::default();
        let low = ExampleParams {
            eta1: QLin::integer(5),
            ..base.clone()
        };
        assert!(matches!(build(1, &low), Err(Error::ParameterViolation(_))));
        let big_gamma = ExampleParams {
            gamma_multiple: 1,
            ..base.clone()
        };
        assert!(matches!(build(1, &big_gamma), Err(Error::ParameterViolation(_))));
        let small_alpha = ExampleParams {
            alpha: QLin::one() - base.alpha.clone(),
            ..base.clone()
        };
        assert!(matches!(build(4, &small_alpha), Err(Error::ParameterViolation(_))));
        let rational = ExampleParams {
            alpha: QLin::ratio(2, 3),
            ..base.clone()
        };
        assert!(build(1, &rational).is_err());
        let dependent = ExampleParams {
            eta2: base.eta1.clone() + QLin::one(),
            ..base.clone()
        };
        assert!(matches!(build(3, &dependent), Err(Error::ParameterViolation(_))));
        let wide = ExampleParams {
            beta: QLin::ratio(1, 2),
            ..base.clone()
        };
        assert!(matches!(build(4, &wide), Err(Error::ParameterViolation(_))));
        let on_orbit = ExampleParams {
            beta: QLin::integer(2) - base.alpha.scale_int(3),
            ..base.clone()
        };
        // 2 − 3α ≈ 0.146 lies in (0, 1 − α) but on the orbit of 0
        assert!(matches!(build(5, &on_orbit), Err(Error::ParameterViolation(_))));
        assert!(matches!(build(9, &base), Err(Error::UnknownExample(9))));
    }
}
