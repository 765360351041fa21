//! Factor maps between suspension systems.
//!
//! A general code has the form `φ[x, s] = [πx, 0]·(s + v(x))` for a symbol
//! map `π` and a transfer function `v`; a simple code is the special case
//! where `π` is a factor of the base systems and `t = v` solves the
//! coboundary equation `t(Tx) − t(x) = g(x) − h(πx)`. A split code subdivides
//! tiles and is determined by the central tile alone.
//!
//! The checkers below compare both sides of each identity with exact
//! coefficient equality.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::sampling::Sampler;
use crate::suspension::{CeilingFunction, SuspensionPoint, Tile, TilePatch};
use crate::symbolic::{
    block_code_apply, collapse_pi, cylinder, interior_points, word_string, BlockCode, Genericity,
    Level, SubshiftSystem, Symbol, SymbolicPoint,
};
use crate::{Error, QLin, Result};

/// Symbol-level map `π` from source base points to target base points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolMap {
    Identity,
    /// 1-block code acting on circle coordinates as `rho ↦ frac(k·rho)`.
    Block { code: BlockCode, multiplier: i64 },
    /// Identifies both floors of a doubled system with the plain point below.
    Collapse,
}

impl SymbolMap {
    pub fn apply(&self, x: &SymbolicPoint, target: &Arc<SubshiftSystem>) -> Result<SymbolicPoint> {
        match self {
            SymbolMap::Identity => SymbolicPoint::new(target.clone(), x.rho().clone(), x.level()),
            SymbolMap::Block { code, multiplier } => block_code_apply(code, *multiplier, x, target),
            SymbolMap::Collapse => collapse_pi(x, target),
        }
    }
}

/// Exactly evaluable transfer functions.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum TransferRule {
    /// The circle coordinate of the point itself.
    Rho,
    /// The circle coordinate of `π(step(x))`.
    RhoOfImageAfterStep,
    Constant(QLin),
}

impl TransferRule {
    pub fn eval(
        &self,
        x: &SymbolicPoint,
        pi: &SymbolMap,
        target: &Arc<SubshiftSystem>,
    ) -> Result<QLin> {
        match self {
            TransferRule::Rho => Ok(x.rho().clone()),
            TransferRule::RhoOfImageAfterStep => Ok(pi.apply(&x.step()?, target)?.rho().clone()),
            TransferRule::Constant(c) => Ok(c.clone()),
        }
    }
}

/// `φ[x, s] = [πx, 0]·(s + t(x))` with `t(Tx) − t(x) = g(x) − h(πx)`.
#[derive(Clone, Debug)]
pub struct SimpleMap {
    pub source: CeilingFunction,
    pub target: CeilingFunction,
    pub pi: SymbolMap,
    pub t: TransferRule,
}

/// `φ[x, s] = [πx, 0]·(s + v(x))`.
#[derive(Clone, Debug)]
pub struct GeneralMap {
    pub source: CeilingFunction,
    pub target: CeilingFunction,
    pub pi: SymbolMap,
    pub v: TransferRule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub length: QLin,
    pub level: Level,
}

/// Local code that cuts each source tile into pieces, each piece becoming a
/// tile of the target over the same circle coordinate.
#[derive(Clone, Debug)]
pub struct SplitCode {
    pub source: CeilingFunction,
    pub target: CeilingFunction,
    pieces: BTreeMap<Symbol, Vec<Piece>>,
}

fn pi_image(pi: &SymbolMap, target: &CeilingFunction, x: &SymbolicPoint) -> Result<SymbolicPoint> {
    pi.apply(x, target.system())
}

fn transfer_image(
    target: &CeilingFunction,
    pi: &SymbolMap,
    rule: &TransferRule,
    sp: &SuspensionPoint,
) -> Result<SuspensionPoint> {
    let base = pi_image(pi, target, &sp.base)?;
    let offset = &sp.height + &rule.eval(&sp.base, pi, target.system())?;
    target.canonical(&base, &offset)
}

/// Both sides of the coboundary equation at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: QLin,
    pub rhs: QLin,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl SimpleMap {
    pub fn pi(&self, x: &SymbolicPoint) -> Result<SymbolicPoint> {
        pi_image(&self.pi, &self.target, x)
    }

    pub fn transfer(&self, x: &SymbolicPoint) -> Result<QLin> {
        self.t.eval(x, &self.pi, self.target.system())
    }

    pub fn apply(&self, sp: &SuspensionPoint) -> Result<SuspensionPoint> {
        transfer_image(&self.target, &self.pi, &self.t, sp)
    }

    /// `t(Tx) − t(x)` against `g(x) − h(πx)`.
    pub fn check_identity(&self, x: &SymbolicPoint) -> Result<IdentityCheck> {
        let lhs = self.transfer(&x.step()?)? - self.transfer(x)?;
        let rhs = self.source.eval(x)? - self.target.eval(&self.pi(x)?)?;
        Ok(IdentityCheck { lhs, rhs })
    }

    /// `π∘T = S∘π` at `x`.
    pub fn check_pi_equivariant(&self, x: &SymbolicPoint) -> Result<bool> {
        Ok(self.pi(&x.step()?)? == self.pi(x)?.step()?)
    }
}

/// Result of checking both lines of the cohomological equations at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomCheck {
    /// `n(πx, g(x) + v(x))` in the target.
    pub floor_index: i64,
    /// `n(πTx, v(Tx))` in the target.
    pub next_floor_index: i64,
    pub bases_match: bool,
    pub increment: IdentityCheck,
}

impl CohomCheck {
    pub fn holds(&self) -> bool {
        self.bases_match && self.increment.holds()
    }
}

impl GeneralMap {
    pub fn pi(&self, x: &SymbolicPoint) -> Result<SymbolicPoint> {
        pi_image(&self.pi, &self.target, x)
    }

    pub fn transfer(&self, x: &SymbolicPoint) -> Result<QLin> {
        self.v.eval(x, &self.pi, self.target.system())
    }

    pub fn apply(&self, sp: &SuspensionPoint) -> Result<SuspensionPoint> {
        transfer_image(&self.target, &self.pi, &self.v, sp)
    }

    /// Checks, in the full two-term form,
    ///
    /// ```text
    /// S^{n(πx, g(x)+v(x))} πx = S^{n(πTx, v(Tx))} πTx
    /// v(Tx) − v(x) = g(x) + h(πTx, n(πTx, v(Tx))) − h(πx, n(πx, g(x)+v(x)))
    /// ```
    pub fn check_cohom(&self, x: &SymbolicPoint) -> Result<CohomCheck> {
        let tx = x.step()?;
        let pi_x = self.pi(x)?;
        let pi_tx = self.pi(&tx)?;
        let gx = self.source.eval(x)?;
        let vx = self.transfer(x)?;
        let vtx = self.transfer(&tx)?;
        let (n1, base1, h1) = self.target.locate(&pi_x, &(&gx + &vx))?;
        let (n2, base2, h2) = self.target.locate(&pi_tx, &vtx)?;
        Ok(CohomCheck {
            floor_index: n1,
            next_floor_index: n2,
            bases_match: base1 == base2,
            increment: IdentityCheck {
                lhs: &vtx - &vx,
                rhs: gx + h2 - h1,
            },
        })
    }
}

impl SplitCode {
    /// Validates that the pieces of every label add up to the source tile
    /// and that each piece is a target tile over the same coordinate.
    pub fn new(
        source: CeilingFunction,
        target: CeilingFunction,
        pieces: BTreeMap<Symbol, Vec<Piece>>,
    ) -> Result<Self> {
        let (src, tgt) = (source.system(), target.system());
        if !src.is_plain() {
            return Err(Error::NotPlain);
        }
        if src.partition() != tgt.partition() || src.alpha() != tgt.alpha() {
            return Err(Error::InvalidSystem(
                "split code needs source and target over the same coding".into(),
            ));
        }
        let code = SplitCode {
            source,
            target,
            pieces,
        };
        for (idx, cell) in code.source.system().partition().cells().iter().enumerate() {
            let whole = &code.source.entries()[&(idx, Level::Ground)];
            let pieces = code.pieces_for(cell.label, whole);
            let total: QLin = pieces.iter().map(|p| p.length.clone()).sum();
            if total != *whole {
                return Err(Error::InvalidCeiling(format!(
                    "pieces of label {} do not add up to the source tile",
                    cell.label
                )));
            }
            for p in &pieces {
                if code.target.entries().get(&(idx, p.level)) != Some(&p.length) {
                    return Err(Error::InvalidCeiling(format!(
                        "piece of label {} at {:?} level is not a target tile",
                        cell.label, p.level
                    )));
                }
            }
        }
        Ok(code)
    }

    fn pieces_for(&self, label: Symbol, whole: &QLin) -> Vec<Piece> {
        self.pieces.get(&label).cloned().unwrap_or_else(|| {
            vec![Piece {
                length: whole.clone(),
                level: Level::Ground,
            }]
        })
    }

    pub fn pieces(&self) -> &BTreeMap<Symbol, Vec<Piece>> {
        &self.pieces
    }

    /// The image of `[x, s]` reads only the central symbol of `x` and `s`.
    pub fn apply(&self, sp: &SuspensionPoint) -> Result<SuspensionPoint> {
        let whole = self.source.eval(&sp.base)?;
        let mut start = QLin::zero();
        for piece in self.pieces_for(sp.base.symbol()?, &whole) {
            let end = &start + &piece.length;
            if sp.height < end {
                let base = SymbolicPoint::new(
                    self.target.system().clone(),
                    sp.base.rho().clone(),
                    piece.level,
                )?;
                return Ok(SuspensionPoint::new(base, &sp.height - &start));
            }
            start = end;
        }
        Err(Error::InvalidPoint("height exceeds the source tile".into()))
    }

    /// Replaces every splittable tile by its pieces.
    pub fn split_patch(&self, patch: &TilePatch) -> TilePatch {
        let mut tiles = Vec::new();
        for tile in &patch.tiles {
            match self.pieces.get(&tile.label) {
                Some(pieces) if pieces.iter().map(|p| p.length.clone()).sum::<QLin>() == tile.length => {
                    let mut left = tile.left.clone();
                    for p in pieces {
                        tiles.push(Tile {
                            label: tile.label,
                            length: p.length.clone(),
                            left: left.clone(),
                        });
                        left += &p.length;
                    }
                }
                _ => tiles.push(tile.clone()),
            }
        }
        TilePatch { tiles }
    }

    /// Regroups runs of pieces into whole tiles. A run touching either end
    /// of the patch may be cut off mid-tile; its incomplete group at that
    /// end is dropped. An incomplete interior run is an error.
    pub fn merge_patch(&self, patch: &TilePatch) -> Result<TilePatch> {
        let tiles = &patch.tiles;
        let mut out = Vec::new();
        let mut i = 0;
        while i < tiles.len() {
            let tile = &tiles[i];
            let group = match self.pieces.get(&tile.label) {
                Some(p) if p.len() > 1 && p[0].length == tile.length => p,
                _ => {
                    out.push(tile.clone());
                    i += 1;
                    continue;
                }
            };
            let mut j = i;
            while j < tiles.len() && tiles[j].label == tile.label && tiles[j].length == group[0].length {
                j += 1;
            }
            let k = group.len();
            let run = j - i;
            let excess = run % k;
            let (from, to) = if excess == 0 {
                (i, j)
            } else if i == 0 {
                (i + excess, j)
            } else if j == tiles.len() {
                (i, j - excess)
            } else {
                return Err(Error::MergeParity {
                    label: tile.label.0,
                    run,
                });
            };
            for chunk in tiles[from..to].chunks(k) {
                out.push(Tile {
                    label: tile.label,
                    length: chunk.iter().map(|t| t.length.clone()).sum(),
                    left: chunk[0].left.clone(),
                });
            }
            i = j;
        }
        Ok(TilePatch { tiles: out })
    }
}

/// A code between two suspension systems.
#[derive(Clone, Debug)]
pub enum Code {
    Simple(SimpleMap),
    General(GeneralMap),
    Split(SplitCode),
}

impl Code {
    pub fn source(&self) -> &CeilingFunction {
        match self {
            Code::Simple(m) => &m.source,
            Code::General(m) => &m.source,
            Code::Split(m) => &m.source,
        }
    }

    pub fn target(&self) -> &CeilingFunction {
        match self {
            Code::Simple(m) => &m.target,
            Code::General(m) => &m.target,
            Code::Split(m) => &m.target,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Code::Simple(_) => "simple",
            Code::General(_) => "general",
            Code::Split(_) => "split",
        }
    }

    pub fn apply(&self, sp: &SuspensionPoint) -> Result<SuspensionPoint> {
        match self {
            Code::Simple(m) => m.apply(sp),
            Code::General(m) => m.apply(sp),
            Code::Split(m) => m.apply(sp),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommuteCheck {
    pub holds: bool,
    /// Whether the source flow left the starting tile.
    pub crossed: bool,
}

/// `φ(ξ·u) = φ(ξ)·u`.
pub fn check_commute(code: &Code, sp: &SuspensionPoint, u: &QLin) -> Result<CommuteCheck> {
    let moved = code.source().flow(sp, u)?;
    let lhs = code.apply(&moved)?;
    let rhs = code.target().flow(&code.apply(sp)?, u)?;
    Ok(CommuteCheck {
        holds: lhs == rhs,
        crossed: moved.base != sp.base,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Injectivity {
    ImagesDistinct,
    SourcesEquivalent { shift: i64 },
    /// Equivalent images from inequivalent sources.
    Collapsed { image_shift: i64 },
}

impl Injectivity {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, Injectivity::Collapsed { .. })
    }
}

/// If the images of `a` and `b` are equivalent, the sources must be too.
pub fn check_injective_pair(
    code: &Code,
    a: &SuspensionPoint,
    b: &SuspensionPoint,
    bound: u32,
) -> Result<Injectivity> {
    let ia = code.apply(a)?;
    let ib = code.apply(b)?;
    let Some(image_shift) =
        code.target()
            .equivalent((&ia.base, &ia.height), (&ib.base, &ib.height), bound)?
    else {
        return Ok(Injectivity::ImagesDistinct);
    };
    match code
        .source()
        .equivalent((&a.base, &a.height), (&b.base, &b.height), bound)?
    {
        Some(shift) => Ok(Injectivity::SourcesEquivalent { shift }),
        None => Ok(Injectivity::Collapsed { image_shift }),
    }
}

/// `(π_Y φ[x, 0], π_ℝ φ[x, 0])`: the symbol map and transfer function
/// recovered from the code itself.
pub fn extract_pi_v(code: &Code, x: &SymbolicPoint) -> Result<(SymbolicPoint, QLin)> {
    let image = code.apply(&SuspensionPoint::new(x.clone(), QLin::zero()))?;
    Ok((image.base, image.height))
}

/// Two points that share a coding window yet have different images at the
/// origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub radius: usize,
    pub word: String,
    pub rho_a: QLin,
    pub rho_b: QLin,
    pub label_a: Symbol,
    pub label_b: Symbol,
    pub image_gap: QLin,
}

/// Looks for a pair of source points agreeing on the window of radius `r`
/// whose images `φ[·, 0]` differ in central label or height. Each of the
/// `probes` attempts draws a generic point, takes the cylinder interval of
/// its window and compares two generic points inside it.
pub fn locality_witness(
    code: &Code,
    r: usize,
    probes: usize,
    sampler: &mut Sampler,
) -> Result<Option<Witness>> {
    let system = code.source().system().clone();
    if !system.is_plain() {
        return Err(Error::NotPlain);
    }
    let start = -(r as i64);
    for _ in 0..probes {
        let x = sampler.generic_point(&system);
        let word = x.window(r)?;
        let cyl = cylinder(&system, &word, start)?;
        let (lo, hi) = cyl
            .interval_containing(x.rho())
            .cloned()
            .ok_or_else(|| Error::InvalidPoint("point outside its own cylinder".into()))?;
        let fraction = sampler.unit_fraction();
        let mut candidates = interior_points(&lo, &hi, 8)
            .into_iter()
            .filter(|q| crate::symbolic::genericity_check(q, &system) == Genericity::Generic);
        let (Some(a), Some(b)) = (candidates.next(), candidates.next_back()) else {
            continue;
        };
        // nudge the pair apart by a random amount, staying inside the interval
        let b = &a + &(&b - &a).scale(&fraction);
        if a == b || crate::symbolic::genericity_check(&b, &system) != Genericity::Generic {
            continue;
        }
        let pa = SymbolicPoint::ground(system.clone(), a)?;
        let pb = SymbolicPoint::ground(system.clone(), b)?;
        if pa.window(r)? != word || pb.window(r)? != word {
            return Err(Error::InvalidPoint("cylinder probe has a different window".into()));
        }
        let ia = code.apply(&SuspensionPoint::new(pa.clone(), QLin::zero()))?;
        let ib = code.apply(&SuspensionPoint::new(pb.clone(), QLin::zero()))?;
        let (la, lb) = (ia.base.symbol()?, ib.base.symbol()?);
        if la != lb || ia.height != ib.height {
            return Ok(Some(Witness {
                radius: r,
                word: word_string(&word),
                rho_a: pa.rho().clone(),
                rho_b: pb.rho().clone(),
                label_a: la,
                label_b: lb,
                image_gap: (&ia.height - &ib.height).abs(),
            }));
        }
    }
    Ok(None)
}

/// Equal sums `Σ left[i]·lengths_a[i] = Σ right[j]·lengths_b[j]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Coincidence {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl Coincidence {
    /// True when each side uses only the given length index.
    pub fn uses_only(&self, left_index: usize, right_index: usize) -> bool {
        let only = |counts: &[u32], idx: usize| {
            counts
                .iter()
                .enumerate()
                .all(|(i, &c)| i == idx || c == 0)
        };
        only(&self.left, left_index) && only(&self.right, right_index)
    }
}

type IntVec = [i128; 4];

fn integer_vectors(values: &[QLin], scale: &num_bigint::BigInt) -> Result<Vec<IntVec>> {
    values
        .iter()
        .map(|v| {
            let mut out = [0i128; 4];
            for (slot, c) in out.iter_mut().zip(v.coeffs()) {
                let scaled = c * num_rational::BigRational::from_integer(scale.clone());
                *slot = scaled.to_integer().to_i128().ok_or_else(|| {
                    Error::ParameterViolation("tile length coefficients too large to scan".into())
                })?;
            }
            Ok(out)
        })
        .collect()
}

/// Calls `f` on every vector of nonnegative counts with sum at most `bound`
/// together with the corresponding integer combination.
fn for_each_combination<F: FnMut(&[u32], &IntVec)>(lengths: &[IntVec], bound: u32, f: &mut F) {
    fn go<F: FnMut(&[u32], &IntVec)>(
        lengths: &[IntVec],
        idx: usize,
        left: u32,
        counts: &mut Vec<u32>,
        sum: IntVec,
        f: &mut F,
    ) {
        if idx == lengths.len() {
            f(counts, &sum);
            return;
        }
        let mut acc = sum;
        for c in 0..=left {
            counts[idx] = c;
            go(lengths, idx + 1, left - c, counts, acc, f);
            for (a, l) in acc.iter_mut().zip(lengths[idx].iter()) {
                *a += l;
            }
        }
        counts[idx] = 0;
    }
    let mut counts = vec![0; lengths.len()];
    go(lengths, 0, bound, &mut counts, [0; 4], f);
}

/// Every pair of nonnegative integer combinations, each with coefficient sum
/// at most `bound`, whose exact sums agree. The empty–empty pair is
/// excluded. Lengths are brought to a common denominator so that sums are
/// integer vectors and can be hashed.
pub fn length_coincidence_scan(
    lengths_a: &[QLin],
    lengths_b: &[QLin],
    bound: u32,
) -> Result<Vec<Coincidence>> {
    if bound == 0 {
        return Err(Error::ParameterViolation("scan bound must be at least 1".into()));
    }
    let scale = lengths_a
        .iter()
        .chain(lengths_b)
        .flat_map(|v| v.coeffs().iter())
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let va = integer_vectors(lengths_a, &scale)?;
    let vb = integer_vectors(lengths_b, &scale)?;

    let mut table: HashMap<IntVec, Vec<Vec<u32>>> = HashMap::new();
    for_each_combination(&vb, bound, &mut |counts, sum| {
        table.entry(*sum).or_default().push(counts.to_vec());
    });
    let mut found = Vec::new();
    for_each_combination(&va, bound, &mut |counts, sum| {
        if let Some(rights) = table.get(sum) {
            let empty_left = counts.iter().all(|&c| c == 0);
            for right in rights {
                if empty_left && right.iter().all(|&c| c == 0) {
                    continue;
                }
                found.push(Coincidence {
                    left: counts.to_vec(),
                    right: right.clone(),
                });
            }
        }
    });
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Partition;
    use num_rational::BigRational;

    fn alpha() -> QLin {
        (QLin::sqrt5() - QLin::one()).scale(&BigRational::new(1.into(), 2.into()))
    }

    fn eta1() -> QLin {
        QLin::integer(5) + QLin::sqrt2()
    }

    fn eta2() -> QLin {
        QLin::integer(5) + QLin::sqrt3()
    }

    #[test]
    fn scan_singletons() {
        let found = length_coincidence_scan(&[eta1()], &[eta1()], 7).unwrap();
        assert_eq!(found.len(), 7);
        for (k, c) in found.iter().enumerate() {
            assert_eq!(c.left, vec![k as u32 + 1]);
            assert_eq!(c.right, vec![k as u32 + 1]);
        }
        assert!(length_coincidence_scan(&[eta1()], &[eta2()], 0).is_err());
    }

    /// Brute-force oracle: enumerate both sides explicitly with exact sums.
    fn brute_scan(a: &[QLin], b: &[QLin], bound: u32) -> Vec<Coincidence> {
        fn combos(n: usize, bound: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for c in 0..=bound {
                for mut rest in combos(n - 1, bound - c) {
                    rest.insert(0, c);
                    out.push(rest);
                }
            }
            out
        }
        let sum = |v: &[QLin], c: &[u32]| -> QLin {
            v.iter().zip(c).map(|(x, &k)| x.scale_int(k as i64)).sum()
        };
        let mut out = Vec::new();
        for l in combos(a.len(), bound) {
            for r in combos(b.len(), bound) {
                if l.iter().chain(&r).all(|&c| c == 0) {
                    continue;
                }
                if sum(a, &l) == sum(b, &r) {
                    out.push(Coincidence { left: l.clone(), right: r });
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn scan_matches_brute_force() {
        let half = QLin::ratio(1, 2);
        let a = vec![QLin::one(), alpha(), eta1()];
        let b = vec![half.clone(), QLin::sqrt5(), eta1() + half];
        assert_eq!(
            length_coincidence_scan(&a, &b, 6).unwrap(),
            brute_scan(&a, &b, 6)
        );
        let a = vec![eta1() + alpha(), eta2() + alpha() - QLin::one()];
        let b = vec![eta1(), eta2()];
        assert!(brute_scan(&a, &b, 6).is_empty());
        assert!(length_coincidence_scan(&a, &b, 6).unwrap().is_empty());
    }

    fn split_fixture() -> SplitCode {
        let beta = (QLin::integer(3) - QLin::sqrt5()).scale(&BigRational::new(1.into(), 4.into()));
        let p = Partition::from_cuts(&[Symbol(1), Symbol(0)], &[beta]).unwrap();
        let x = Arc::new(SubshiftSystem::plain(alpha(), p.clone()).unwrap());
        let y = Arc::new(SubshiftSystem::doubled(alpha(), p, Symbol(1)).unwrap());
        let g = CeilingFunction::constant(x, QLin::one()).unwrap();
        let half = QLin::ratio(1, 2);
        let h = CeilingFunction::from_cells(y, |cell, _| if cell == 0 { half.clone() } else { QLin::one() })
            .unwrap();
        let pieces = BTreeMap::from([(
            Symbol(1),
            vec![
                Piece { length: half.clone(), level: Level::Ground },
                Piece { length: half, level: Level::Upper },
            ],
        )]);
        SplitCode::new(g, h, pieces).unwrap()
    }

    fn tile(label: u8, len: QLin, left: QLin) -> Tile {
        Tile { label: Symbol(label), length: len, left }
    }

    #[test]
    fn split_and_merge() {
        let code = split_fixture();
        let patch = TilePatch {
            tiles: vec![
                tile(0, QLin::one(), QLin::integer(-1)),
                tile(1, QLin::one(), QLin::zero()),
            ],
        };
        let split = code.split_patch(&patch);
        let half = QLin::ratio(1, 2);
        assert_eq!(
            split.tiles,
            vec![
                tile(0, QLin::one(), QLin::integer(-1)),
                tile(1, half.clone(), QLin::zero()),
                tile(1, half.clone(), half.clone()),
            ]
        );
        assert_eq!(split.total_length(), patch.total_length());
        assert_eq!(code.merge_patch(&split).unwrap(), patch);

        // a half tile cut off at the right end is dropped
        let mut cut = split.clone();
        cut.tiles.pop();
        assert_eq!(code.merge_patch(&cut).unwrap().tiles.len(), 1);
        // an odd interior run cannot be merged
        let odd = TilePatch {
            tiles: vec![
                tile(0, QLin::one(), QLin::integer(-1)),
                tile(1, half.clone(), QLin::zero()),
                tile(0, QLin::one(), half),
            ],
        };
        assert_eq!(
            code.merge_patch(&odd),
            Err(Error::MergeParity { label: 1, run: 1 })
        );
    }

    #[test]
    fn split_code_is_central() {
        let code = split_fixture();
        let x = SymbolicPoint::ground(code.source.system().clone(), QLin::ratio(1, 7)).unwrap();
        let img = code
            .apply(&SuspensionPoint::new(x.clone(), QLin::ratio(3, 4)))
            .unwrap();
        assert_eq!(img.base.level(), Level::Upper);
        assert_eq!(img.height, QLin::ratio(1, 4));
        let c = Code::Split(code);
        for k in 0..8 {
            let u = QLin::ratio(2 * k + 1, 3);
            let sp = SuspensionPoint::new(x.clone(), QLin::ratio(1, 5));
            assert!(check_commute(&c, &sp, &u).unwrap().holds);
        }
    }
}
