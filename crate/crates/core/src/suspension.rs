//! Flows under ceiling functions.
//!
//! A [`CeilingFunction`] over a subshift is the whole suspension system: it
//! carries the cocycle, the floor index, the flow and the equivalence
//! `(x, g(x)) ≡ (Tx, 0)`. Points are kept in canonical form
//! `[x, s]` with `0 ≤ s < g(x)`, so two canonical points denote the same
//! element of the suspension exactly when they are equal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::symbolic::{interior_points, Level, SubshiftSystem, Symbol, SymbolicPoint};
use crate::{Error, QLin, Result};

/// A canonical pair `[x, s]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuspensionPoint {
    pub base: SymbolicPoint,
    pub height: QLin,
}

impl SuspensionPoint {
    pub fn new(base: SymbolicPoint, height: QLin) -> Self {
        SuspensionPoint { base, height }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tile {
    pub label: Symbol,
    pub length: QLin,
    pub left: QLin,
}

impl Tile {
    pub fn right(&self) -> QLin {
        &self.left + &self.length
    }
}

/// Consecutive abutting tiles around the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TilePatch {
    pub tiles: Vec<Tile>,
}

impl TilePatch {
    pub fn total_length(&self) -> QLin {
        self.tiles.iter().map(|t| t.length.clone()).sum()
    }

    pub fn left_end(&self) -> Option<QLin> {
        self.tiles.first().map(|t| t.left.clone())
    }

    pub fn right_end(&self) -> Option<QLin> {
        self.tiles.last().map(Tile::right)
    }

    /// True when every tile starts where its predecessor ends.
    pub fn abuts(&self) -> bool {
        self.tiles.windows(2).all(|w| w[0].right() == w[1].left)
    }

    /// Index of the tile whose half-open span `[left, left + length)`
    /// contains the origin.
    pub fn origin_tile(&self) -> Option<usize> {
        let zero = QLin::zero();
        self.tiles
            .iter()
            .position(|t| t.left <= zero && zero < t.right())
    }
}

/// Positive ceiling indexed by partition cell and floor level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeilingFunction {
    system: Arc<SubshiftSystem>,
    values: BTreeMap<(usize, Level), QLin>,
}

impl CeilingFunction {
    pub fn new(system: Arc<SubshiftSystem>, values: BTreeMap<(usize, Level), QLin>) -> Result<Self> {
        for cell in 0..system.partition().len() {
            for level in system.levels_over(cell) {
                let v = values.get(&(cell, level)).ok_or_else(|| {
                    Error::InvalidCeiling(format!("no value for cell {cell} at {level:?} level"))
                })?;
                if !v.is_positive() {
                    return Err(Error::InvalidCeiling(format!(
                        "value {v} on cell {cell} is not positive"
                    )));
                }
            }
        }
        Ok(CeilingFunction { system, values })
    }

    pub fn constant(system: Arc<SubshiftSystem>, value: QLin) -> Result<Self> {
        CeilingFunction::from_cells(system, |_, _| value.clone())
    }

    /// Value chosen per `(cell index, level)`.
    pub fn from_cells<F>(system: Arc<SubshiftSystem>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, Level) -> QLin,
    {
        let mut values = BTreeMap::new();
        for cell in 0..system.partition().len() {
            for level in system.levels_over(cell) {
                values.insert((cell, level), f(cell, level));
            }
        }
        CeilingFunction::new(system, values)
    }

    /// Value computed by evaluating `f` at an interior probe point of every
    /// `(cell, level)`. The formula must be constant on cells; probes whose
    /// orbit meets a boundary are retried at other interior points.
    pub fn from_formula<F>(system: Arc<SubshiftSystem>, mut f: F) -> Result<Self>
    where
        F: FnMut(&SymbolicPoint) -> Result<QLin>,
    {
        let mut values = BTreeMap::new();
        for (idx, cell) in system.partition().cells().iter().enumerate() {
            for level in system.levels_over(idx) {
                let mut last = None;
                for probe in interior_points(&cell.left, &cell.right, 7) {
                    let point = SymbolicPoint::new(system.clone(), probe, level)?;
                    match f(&point) {
                        Ok(v) => {
                            last = Some(Ok(v));
                            break;
                        }
                        Err(e @ Error::BoundaryHit { .. }) => last = Some(Err(e)),
                        Err(e) => return Err(e),
                    }
                }
                let v = last.expect("at least one probe")?;
                values.insert((idx, level), v);
            }
        }
        CeilingFunction::new(system, values)
    }

    pub fn system(&self) -> &Arc<SubshiftSystem> {
        &self.system
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Level), QLin> {
        &self.values
    }

    /// The distinct tile lengths.
    pub fn value_set(&self) -> BTreeSet<QLin> {
        self.values.values().cloned().collect()
    }

    pub fn min_value(&self) -> QLin {
        self.values.values().min().cloned().expect("nonempty ceiling")
    }

    /// `g(x)`: the value on the central cell and level of `x`.
    pub fn eval(&self, x: &SymbolicPoint) -> Result<QLin> {
        let key = (x.cell()?, x.level());
        Ok(self.values[&key].clone())
    }

    /// `g(x, n)`: the sum of `g` over the orbit segment `x, …, T^{n−1}x` for
    /// positive `n`, its negative over `T^n x, …, T^{−1}x` for negative `n`.
    pub fn cocycle(&self, x: &SymbolicPoint, n: i64) -> Result<QLin> {
        let mut acc = QLin::zero();
        let mut p = x.clone();
        if n >= 0 {
            for _ in 0..n {
                acc += &self.eval(&p)?;
                p = p.step()?;
            }
        } else {
            for _ in 0..-n {
                p = p.step_back()?;
                acc -= &self.eval(&p)?;
            }
        }
        Ok(acc)
    }

    /// `(n, T^n x, g(x, n))` for the unique `n` with
    /// `g(x, n) ≤ s < g(x, n + 1)`.
    pub fn locate(&self, x: &SymbolicPoint, s: &QLin) -> Result<(i64, SymbolicPoint, QLin)> {
        let mut n = 0i64;
        let mut acc = QLin::zero();
        let mut p = x.clone();
        if !s.is_negative() {
            loop {
                let next = &acc + &self.eval(&p)?;
                if next > *s {
                    return Ok((n, p, acc));
                }
                acc = next;
                p = p.step()?;
                n += 1;
            }
        }
        loop {
            p = p.step_back()?;
            n -= 1;
            acc -= &self.eval(&p)?;
            if acc <= *s {
                return Ok((n, p, acc));
            }
        }
    }

    /// The floor index `n_X(x, s)`.
    pub fn floor_index(&self, x: &SymbolicPoint, s: &QLin) -> Result<i64> {
        Ok(self.locate(x, s)?.0)
    }

    /// Canonical representative of the class of `(x, s)`.
    pub fn canonical(&self, x: &SymbolicPoint, s: &QLin) -> Result<SuspensionPoint> {
        let (_, base, acc) = self.locate(x, s)?;
        Ok(SuspensionPoint::new(base, s - &acc))
    }

    /// `[x, s]·u`.
    pub fn flow(&self, sp: &SuspensionPoint, u: &QLin) -> Result<SuspensionPoint> {
        self.canonical(&sp.base, &(&sp.height + u))
    }

    pub fn is_canonical(&self, sp: &SuspensionPoint) -> Result<bool> {
        Ok(!sp.height.is_negative() && sp.height < self.eval(&sp.base)?)
    }

    /// Searches `|n| ≤ bound` for `T^n x = x′` with `s′ = s − g(x, n)`.
    /// Returns the witness of smallest magnitude.
    pub fn equivalent(
        &self,
        a: (&SymbolicPoint, &QLin),
        b: (&SymbolicPoint, &QLin),
        bound: u32,
    ) -> Result<Option<i64>> {
        let matches = |p: &SymbolicPoint, acc: &QLin| *p == *b.0 && *b.1 == a.1 - acc;
        if matches(a.0, &QLin::zero()) {
            return Ok(Some(0));
        }
        let (mut fwd, mut fwd_acc) = (a.0.clone(), QLin::zero());
        let (mut bwd, mut bwd_acc) = (a.0.clone(), QLin::zero());
        for n in 1..=i64::from(bound) {
            fwd_acc += &self.eval(&fwd)?;
            fwd = fwd.step()?;
            if matches(&fwd, &fwd_acc) {
                return Ok(Some(n));
            }
            bwd = bwd.step_back()?;
            bwd_acc -= &self.eval(&bwd)?;
            if matches(&bwd, &bwd_acc) {
                return Ok(Some(-n));
            }
        }
        Ok(None)
    }

    /// Every tile meeting `[−half_width, half_width]` in the tiling of `sp`.
    /// The tile at the origin starts at `−s`.
    pub fn patch(&self, sp: &SuspensionPoint, half_width: &QLin) -> Result<TilePatch> {
        assert!(half_width.is_positive(), "patch half-width must be positive");
        let tile = |p: &SymbolicPoint, left: QLin| -> Result<Tile> {
            Ok(Tile {
                label: p.symbol()?,
                length: self.eval(p)?,
                left,
            })
        };
        let mut tiles = VecDeque::new();
        let centre = tile(&sp.base, -sp.height.clone())?;
        let mut next_left = centre.right();
        let mut prev_right = centre.left.clone();
        tiles.push_back(centre);

        let mut p = sp.base.clone();
        while next_left <= *half_width {
            p = p.step()?;
            let t = tile(&p, next_left)?;
            next_left = t.right();
            tiles.push_back(t);
        }
        let lower = -half_width.clone();
        let mut p = sp.base.clone();
        while prev_right >= lower {
            p = p.step_back()?;
            let len = self.eval(&p)?;
            let t = tile(&p, &prev_right - &len)?;
            prev_right = t.left.clone();
            tiles.push_front(t);
        }
        Ok(TilePatch {
            tiles: tiles.into(),
        })
    }
}
