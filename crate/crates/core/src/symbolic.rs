//! Rotation-coded subshifts.
//!
//! A point of a subshift is stored as its circle coordinate `rho ∈ [0, 1)`
//! and, for doubled systems, a floor level. Symbols are read off on demand by
//! locating orbit points in the coding partition. Orbits that meet a
//! partition boundary are two-valued and are rejected with
//! [`Error::BoundaryHit`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, QLin, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub u8);

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Formats a word as space-separated symbols.
pub fn word_string(word: &[Symbol]) -> String {
    word.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Floor of a point in a doubled system. Plain systems only use `Ground`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Ground,
    Upper,
}

/// `frac(rho + n·alpha)`.
pub fn rotate(rho: &QLin, n: i64, alpha: &QLin) -> QLin {
    (rho + &alpha.scale_int(n)).frac()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub label: Symbol,
    pub left: QLin,
    pub right: QLin,
}

/// Half-open cells `[left, right)` tiling `[0, 1)` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Cell>", into = "Vec<Cell>")]
pub struct Partition {
    cells: Vec<Cell>,
}

impl TryFrom<Vec<Cell>> for Partition {
    type Error = Error;

    fn try_from(cells: Vec<Cell>) -> Result<Self> {
        Partition::new(cells)
    }
}

impl From<Partition> for Vec<Cell> {
    fn from(p: Partition) -> Self {
        p.cells
    }
}

impl Partition {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSystem(msg.to_string());
        let first = cells.first().ok_or_else(|| bad("partition has no cells"))?;
        if !first.left.is_zero() {
            return Err(bad("first cell must start at 0"));
        }
        if cells.last().map(|c| &c.right) != Some(&QLin::one()) {
            return Err(bad("last cell must end at 1"));
        }
        for c in &cells {
            if c.left >= c.right {
                return Err(bad("cell with empty interior"));
            }
        }
        for pair in cells.windows(2) {
            if pair[0].right != pair[1].left {
                return Err(bad("cells must abut"));
            }
        }
        Ok(Partition { cells })
    }

    /// Cells with the given labels between consecutive cut points; `cuts`
    /// are the interior boundaries in increasing order.
    pub fn from_cuts(labels: &[Symbol], cuts: &[QLin]) -> Result<Self> {
        if labels.len() != cuts.len() + 1 {
            return Err(Error::InvalidSystem(
                "need exactly one more label than cut points".into(),
            ));
        }
        let mut edges = Vec::with_capacity(cuts.len() + 2);
        edges.push(QLin::zero());
        edges.extend(cuts.iter().cloned());
        edges.push(QLin::one());
        let cells = labels
            .iter()
            .zip(edges.windows(2))
            .map(|(&label, e)| Cell {
                label,
                left: e[0].clone(),
                right: e[1].clone(),
            })
            .collect();
        Partition::new(cells)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Left endpoints of all cells, including 0.
    pub fn boundaries(&self) -> Vec<QLin> {
        self.cells.iter().map(|c| c.left.clone()).collect()
    }

    pub fn labels(&self) -> BTreeSet<Symbol> {
        self.cells.iter().map(|c| c.label).collect()
    }

    /// Index of the cell containing `rho`, or `None` if `rho` is a boundary.
    /// `rho` must lie in `[0, 1)`.
    pub fn locate(&self, rho: &QLin) -> Option<usize> {
        let idx = self.cells.partition_point(|c| c.right <= *rho);
        let cell = self.cells.get(idx)?;
        if cell.left == *rho {
            None
        } else {
            Some(idx)
        }
    }

    /// Splits cells at every cut (taken mod 1) that falls strictly inside
    /// one. Labels are inherited.
    pub fn refine<I: IntoIterator<Item = QLin>>(&self, cuts: I) -> Partition {
        let cuts: BTreeSet<QLin> = cuts
            .into_iter()
            .map(|c| c.frac())
            .filter(|c| !c.is_zero())
            .collect();
        let mut cells = Vec::new();
        for cell in &self.cells {
            let mut left = cell.left.clone();
            for cut in cuts.iter().filter(|c| **c > cell.left && **c < cell.right) {
                cells.push(Cell {
                    label: cell.label,
                    left: left.clone(),
                    right: cut.clone(),
                });
                left = cut.clone();
            }
            cells.push(Cell {
                label: cell.label,
                left,
                right: cell.right.clone(),
            });
        }
        Partition { cells }
    }

    /// The set of coordinates coded by `label`.
    pub fn preimage(&self, label: Symbol) -> CircleSet {
        CircleSet::from_intervals(
            self.cells
                .iter()
                .filter(|c| c.label == label)
                .map(|c| (c.left.clone(), c.right.clone()))
                .collect(),
        )
    }
}

/// A finite union of disjoint half-open intervals of `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleSet {
    intervals: Vec<(QLin, QLin)>,
}

impl CircleSet {
    pub fn full() -> Self {
        CircleSet {
            intervals: vec![(QLin::zero(), QLin::one())],
        }
    }

    /// Normalises a list of intervals inside `[0, 1]`: sorts, drops empty
    /// ones and merges touching neighbours.
    pub fn from_intervals(mut intervals: Vec<(QLin, QLin)>) -> Self {
        intervals.retain(|(l, r)| l < r);
        intervals.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(QLin, QLin)> = Vec::with_capacity(intervals.len());
        for (l, r) in intervals {
            match merged.last_mut() {
                Some(last) if last.1 >= l => {
                    if r > last.1 {
                        last.1 = r;
                    }
                }
                _ => merged.push((l, r)),
            }
        }
        CircleSet { intervals: merged }
    }

    pub fn intervals(&self) -> &[(QLin, QLin)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn measure(&self) -> QLin {
        self.intervals.iter().map(|(l, r)| r - l).sum()
    }

    pub fn contains(&self, rho: &QLin) -> bool {
        self.intervals.iter().any(|(l, r)| l <= rho && rho < r)
    }

    /// The interval containing `rho`, if any.
    pub fn interval_containing(&self, rho: &QLin) -> Option<&(QLin, QLin)> {
        self.intervals.iter().find(|(l, r)| l <= rho && rho < r)
    }

    /// Image under `rho ↦ frac(rho + shift)`.
    pub fn rotated(&self, shift: &QLin) -> Self {
        let shift = shift.frac();
        let one = QLin::one();
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        for (l, r) in &self.intervals {
            let l = l + &shift;
            let r = r + &shift;
            if l >= one {
                out.push((&l - &one, &r - &one));
            } else if r > one {
                out.push((l, one.clone()));
                out.push((QLin::zero(), &r - &one));
            } else {
                out.push((l, r));
            }
        }
        CircleSet::from_intervals(out)
    }

    pub fn intersect(&self, other: &CircleSet) -> CircleSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.intervals.len() && j < other.intervals.len() {
            let (al, ar) = &self.intervals[i];
            let (bl, br) = &other.intervals[j];
            let lo = if al > bl { al } else { bl };
            let hi = if ar < br { ar } else { br };
            if lo < hi {
                out.push((lo.clone(), hi.clone()));
            }
            if ar < br {
                i += 1;
            } else {
                j += 1;
            }
        }
        CircleSet { intervals: out }
    }
}

/// `count` rationals evenly spaced strictly inside `(left, right)`.
pub fn interior_points(left: &QLin, right: &QLin, count: usize) -> Vec<QLin> {
    assert!(left < right, "interval must have nonempty interior");
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1000));
    let (lo, hi) = loop {
        let el = left.enclose(&width);
        let er = right.enclose(&width);
        if el.hi < er.lo {
            break (el.hi, er.lo);
        }
        width /= BigRational::from_integer(BigInt::from(16));
    };
    let span = &hi - &lo;
    (1..=count)
        .map(|k| {
            let t = BigRational::new(BigInt::from(k), BigInt::from(count + 1));
            QLin::rational(&lo + &span * t)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemKind {
    Plain,
    /// Induced system with a second floor over every cell labelled `label`.
    Doubled { label: Symbol },
}

/// Coding of the rotation by `alpha` through a partition, optionally with a
/// doubled symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SystemDescription", into = "SystemDescription")]
pub struct SubshiftSystem {
    alpha: QLin,
    partition: Partition,
    kind: SystemKind,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindTag {
    Plain,
    Doubled,
}

#[derive(Serialize, Deserialize)]
struct SystemDescription {
    alpha: QLin,
    cells: Vec<Cell>,
    kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    doubled_label: Option<Symbol>,
}

impl TryFrom<SystemDescription> for SubshiftSystem {
    type Error = Error;

    fn try_from(d: SystemDescription) -> Result<Self> {
        let kind = match (d.kind, d.doubled_label) {
            (KindTag::Plain, None) => SystemKind::Plain,
            (KindTag::Doubled, Some(label)) => SystemKind::Doubled { label },
            _ => {
                return Err(Error::InvalidSystem(
                    "doubled_label must be present exactly for doubled systems".into(),
                ))
            }
        };
        SubshiftSystem::new(d.alpha, Partition::new(d.cells)?, kind)
    }
}

impl From<SubshiftSystem> for SystemDescription {
    fn from(s: SubshiftSystem) -> Self {
        let (kind, doubled_label) = match s.kind {
            SystemKind::Plain => (KindTag::Plain, None),
            SystemKind::Doubled { label } => (KindTag::Doubled, Some(label)),
        };
        SystemDescription {
            alpha: s.alpha,
            cells: s.partition.cells,
            kind,
            doubled_label,
        }
    }
}

impl SubshiftSystem {
    pub fn new(alpha: QLin, partition: Partition, kind: SystemKind) -> Result<Self> {
        if alpha.is_rational() {
            return Err(Error::InvalidSystem("rotation angle must be irrational".into()));
        }
        if !(alpha > QLin::zero() && alpha < QLin::one()) {
            return Err(Error::InvalidSystem("rotation angle must lie in (0, 1)".into()));
        }
        if let SystemKind::Doubled { label } = kind {
            if !partition.labels().contains(&label) {
                return Err(Error::InvalidSystem(format!(
                    "doubled label {label} does not occur in the partition"
                )));
            }
        }
        Ok(SubshiftSystem {
            alpha,
            partition,
            kind,
        })
    }

    pub fn plain(alpha: QLin, partition: Partition) -> Result<Self> {
        SubshiftSystem::new(alpha, partition, SystemKind::Plain)
    }

    pub fn doubled(alpha: QLin, partition: Partition, label: Symbol) -> Result<Self> {
        SubshiftSystem::new(alpha, partition, SystemKind::Doubled { label })
    }

    pub fn alpha(&self) -> &QLin {
        &self.alpha
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    pub fn is_plain(&self) -> bool {
        self.kind == SystemKind::Plain
    }

    pub fn doubled_label(&self) -> Option<Symbol> {
        match self.kind {
            SystemKind::Doubled { label } => Some(label),
            SystemKind::Plain => None,
        }
    }

    /// Same rotation and partition with a different kind.
    pub fn with_kind(&self, kind: SystemKind) -> Result<Self> {
        SubshiftSystem::new(self.alpha.clone(), self.partition.clone(), kind)
    }

    /// Same rotation and kind with a refined partition.
    pub fn refined<I: IntoIterator<Item = QLin>>(&self, cuts: I) -> Self {
        SubshiftSystem {
            alpha: self.alpha.clone(),
            partition: self.partition.refine(cuts),
            kind: self.kind.clone(),
        }
    }

    /// Levels a point over `cell` may occupy.
    pub fn levels_over(&self, cell: usize) -> Vec<Level> {
        match self.kind {
            SystemKind::Doubled { label } if self.partition.cells[cell].label == label => {
                vec![Level::Ground, Level::Upper]
            }
            _ => vec![Level::Ground],
        }
    }

    fn cell_of(&self, rho: &QLin) -> Result<usize> {
        self.partition
            .locate(rho)
            .ok_or_else(|| Error::BoundaryHit { point: Box::new(rho.clone()) })
    }
}

/// A point of a subshift: circle coordinate plus floor level.
#[derive(Clone, Debug)]
pub struct SymbolicPoint {
    system: Arc<SubshiftSystem>,
    rho: QLin,
    level: Level,
}

impl PartialEq for SymbolicPoint {
    fn eq(&self, other: &Self) -> bool {
        self.rho == other.rho
            && self.level == other.level
            && (Arc::ptr_eq(&self.system, &other.system) || self.system == other.system)
    }
}

impl Eq for SymbolicPoint {}

impl Serialize for SymbolicPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            rho: &'a QLin,
            level: Level,
        }
        Repr {
            rho: &self.rho,
            level: self.level,
        }
        .serialize(s)
    }
}

impl SymbolicPoint {
    pub fn new(system: Arc<SubshiftSystem>, rho: QLin, level: Level) -> Result<Self> {
        if rho.is_negative() || rho >= QLin::one() {
            return Err(Error::InvalidPoint(format!("rho = {rho} is outside [0, 1)")));
        }
        if level == Level::Upper {
            let label = system
                .doubled_label()
                .ok_or_else(|| Error::InvalidPoint("upper level in a plain system".into()))?;
            let cell = system.cell_of(&rho)?;
            if system.partition.cells[cell].label != label {
                return Err(Error::InvalidPoint(format!(
                    "upper level requires central symbol {label}"
                )));
            }
        }
        Ok(SymbolicPoint { system, rho, level })
    }

    pub fn ground(system: Arc<SubshiftSystem>, rho: QLin) -> Result<Self> {
        SymbolicPoint::new(system, rho, Level::Ground)
    }

    pub fn system(&self) -> &Arc<SubshiftSystem> {
        &self.system
    }

    pub fn rho(&self) -> &QLin {
        &self.rho
    }

    pub fn level(&self) -> Level {
        self.level
    }

    fn with(&self, rho: QLin, level: Level) -> Self {
        SymbolicPoint {
            system: self.system.clone(),
            rho,
            level,
        }
    }

    /// Index of the partition cell containing the circle coordinate.
    pub fn cell(&self) -> Result<usize> {
        self.system.cell_of(&self.rho)
    }

    /// The central symbol.
    pub fn symbol(&self) -> Result<Symbol> {
        match (self.level, self.system.doubled_label()) {
            (Level::Upper, Some(label)) => Ok(label),
            _ => Ok(self.system.partition.cells[self.cell()?].label),
        }
    }

    /// The rotation `T` of a plain system.
    pub fn shift(&self) -> Result<Self> {
        if !self.system.is_plain() {
            return Err(Error::NotPlain);
        }
        Ok(self.with(rotate(&self.rho, 1, &self.system.alpha), Level::Ground))
    }

    pub fn unshift(&self) -> Result<Self> {
        if !self.system.is_plain() {
            return Err(Error::NotPlain);
        }
        Ok(self.with(rotate(&self.rho, -1, &self.system.alpha), Level::Ground))
    }

    /// The induced map `S` of a doubled system: a ground point over the
    /// doubled symbol climbs to the upper floor, every other point moves on
    /// to the next rotation point on the ground floor.
    pub fn step_s(&self) -> Result<Self> {
        let label = self.system.doubled_label().ok_or(Error::NotDoubled)?;
        match self.level {
            Level::Upper => Ok(self.with(rotate(&self.rho, 1, &self.system.alpha), Level::Ground)),
            Level::Ground if self.symbol()? == label => Ok(self.with(self.rho.clone(), Level::Upper)),
            Level::Ground => Ok(self.with(rotate(&self.rho, 1, &self.system.alpha), Level::Ground)),
        }
    }

    pub fn step_s_back(&self) -> Result<Self> {
        let label = self.system.doubled_label().ok_or(Error::NotDoubled)?;
        match self.level {
            Level::Upper => Ok(self.with(self.rho.clone(), Level::Ground)),
            Level::Ground => {
                let prev = self.with(rotate(&self.rho, -1, &self.system.alpha), Level::Ground);
                if prev.symbol()? == label {
                    Ok(prev.with(prev.rho.clone(), Level::Upper))
                } else {
                    Ok(prev)
                }
            }
        }
    }

    /// One step of the system's own map: `T` for plain systems, `S` for
    /// doubled ones.
    pub fn step(&self) -> Result<Self> {
        if self.system.is_plain() {
            self.shift()
        } else {
            self.step_s()
        }
    }

    pub fn step_back(&self) -> Result<Self> {
        if self.system.is_plain() {
            self.unshift()
        } else {
            self.step_s_back()
        }
    }

    /// The `n`-th iterate of the system map (negative `n` runs backwards).
    pub fn advance(&self, n: i64) -> Result<Self> {
        if self.system.is_plain() {
            return Ok(self.with(rotate(&self.rho, n, &self.system.alpha), Level::Ground));
        }
        let mut p = self.clone();
        for _ in 0..n.unsigned_abs() {
            p = if n > 0 { p.step()? } else { p.step_back()? };
        }
        Ok(p)
    }

    pub fn symbol_at(&self, n: i64) -> Result<Symbol> {
        self.advance(n)?.symbol()
    }

    /// Symbols at positions `-r..=r`.
    pub fn window(&self, r: usize) -> Result<Vec<Symbol>> {
        let mut left = Vec::with_capacity(r);
        let mut p = self.clone();
        for _ in 0..r {
            p = p.step_back()?;
            left.push(p.symbol()?);
        }
        left.reverse();
        left.push(self.symbol()?);
        let mut p = self.clone();
        for _ in 0..r {
            p = p.step()?;
            left.push(p.symbol()?);
        }
        Ok(left)
    }
}

/// A 1-block code between alphabets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCode {
    table: BTreeMap<Symbol, Symbol>,
}

impl BlockCode {
    pub fn new<I: IntoIterator<Item = (Symbol, Symbol)>>(pairs: I) -> Self {
        BlockCode {
            table: pairs.into_iter().collect(),
        }
    }

    pub fn identity<I: IntoIterator<Item = Symbol>>(alphabet: I) -> Self {
        BlockCode::new(alphabet.into_iter().map(|s| (s, s)))
    }

    pub fn table(&self) -> &BTreeMap<Symbol, Symbol> {
        &self.table
    }

    pub fn map(&self, s: Symbol) -> Result<Symbol> {
        self.table
            .get(&s)
            .copied()
            .ok_or_else(|| Error::InconsistentCode(format!("symbol {s} has no image")))
    }

    pub fn apply_word(&self, word: &[Symbol]) -> Result<Vec<Symbol>> {
        word.iter().map(|&s| self.map(s)).collect()
    }
}

/// Image of a plain-system point under a 1-block code whose circle action is
/// `rho ↦ frac(multiplier·rho)`. The code table is checked against the
/// target coding at the image point.
pub fn block_code_apply(
    code: &BlockCode,
    multiplier: i64,
    point: &SymbolicPoint,
    target: &Arc<SubshiftSystem>,
) -> Result<SymbolicPoint> {
    if !point.system.is_plain() || !target.is_plain() {
        return Err(Error::NotPlain);
    }
    let rho = point.rho.scale_int(multiplier).frac();
    let image = SymbolicPoint::ground(target.clone(), rho)?;
    let expected = code.map(point.symbol()?)?;
    let found = image.symbol()?;
    if expected != found {
        return Err(Error::InconsistentCode(format!(
            "symbol {} maps to {expected} but the image codes {found}",
            point.symbol()?
        )));
    }
    Ok(image)
}

/// Forgets the floor of a doubled-system point, landing in the plain
/// system `target` at the same circle coordinate.
pub fn collapse_pi(y: &SymbolicPoint, target: &Arc<SubshiftSystem>) -> Result<SymbolicPoint> {
    if y.system.is_plain() {
        return Err(Error::NotDoubled);
    }
    if !target.is_plain() {
        return Err(Error::NotPlain);
    }
    SymbolicPoint::ground(target.clone(), y.rho.clone())
}

/// The exact set of coordinates whose symbols at positions
/// `start..start + word.len()` spell `word`.
pub fn cylinder(system: &SubshiftSystem, word: &[Symbol], start: i64) -> Result<CircleSet> {
    if !system.is_plain() {
        return Err(Error::NotPlain);
    }
    let mut set = CircleSet::full();
    for (i, &label) in word.iter().enumerate() {
        let k = start + i as i64;
        let back = system.alpha.scale_int(-k);
        set = set.intersect(&system.partition.preimage(label).rotated(&back));
        if set.is_empty() {
            break;
        }
    }
    Ok(set)
}

/// An orbit point `rotate(rho0, n)` that coincides with a partition boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub n: i64,
    pub boundary: QLin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Genericity {
    Generic,
    Conflict(Conflict),
}

/// Integer `n` with `diff + n·alpha ∈ ℤ`, if one exists; that is, whether
/// `diff` lies on the orbit of 0 under rotation by `-alpha`.
pub fn orbit_hit(diff: &QLin, alpha: &QLin) -> Option<i64> {
    let pivot = (1..4).find(|&j| !alpha.coeff(j).is_zero())?;
    let n = -(diff.coeff(pivot) / alpha.coeff(pivot));
    if !n.is_integer() {
        return None;
    }
    let n_int = n.to_integer();
    let n_small: i64 = i64::try_from(n_int).ok()?;
    let hit = diff + &alpha.scale_int(n_small);
    (hit.is_rational() && hit.coeff(0).is_integer()).then_some(n_small)
}

/// Every boundary that the full orbit of `rho0` meets, ordered by boundary.
pub fn boundary_conflicts(rho0: &QLin, system: &SubshiftSystem) -> Vec<Conflict> {
    system
        .partition
        .boundaries()
        .into_iter()
        .filter_map(|b| {
            orbit_hit(&(rho0 - &b), &system.alpha).map(|n| Conflict { n, boundary: b })
        })
        .collect()
}

/// Decides exactly whether any point `rho0 + n·alpha (mod 1)`, `n ∈ ℤ`, is a
/// partition boundary, reporting the first such coincidence.
pub fn genericity_check(rho0: &QLin, system: &SubshiftSystem) -> Genericity {
    match boundary_conflicts(rho0, system).into_iter().next() {
        Some(c) => Genericity::Conflict(c),
        None => Genericity::Generic,
    }
}
