//! Seeded sampling of generic points, heights and time offsets.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::suspension::{CeilingFunction, SuspensionPoint};
use crate::symbolic::{genericity_check, Genericity, Level, SubshiftSystem, SymbolicPoint};
use crate::QLin;

/// Name of the generator recorded in reports.
pub const GENERATOR: &str = "ChaCha8Rng";

/// Largest denominator of sampled circle coordinates.
pub const MAX_DENOMINATOR: i64 = 1_000_000;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi_inclusive: i64) -> i64 {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    /// A rational in `(0, 1)`.
    pub fn unit_fraction(&mut self) -> BigRational {
        let q: i64 = self.rng.gen_range(2..=1000);
        let p: i64 = self.rng.gen_range(1..q);
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    /// A rational `p/q ∈ (0, 1)` with `q ≤ MAX_DENOMINATOR` whose orbit
    /// avoids every partition boundary. Conflicting draws are redrawn.
    pub fn generic_rho(&mut self, system: &SubshiftSystem) -> QLin {
        loop {
            let q: i64 = self.rng.gen_range(2..=MAX_DENOMINATOR);
            let p: i64 = self.rng.gen_range(1..q);
            let rho = QLin::ratio(p, q);
            if genericity_check(&rho, system) == Genericity::Generic {
                return rho;
            }
        }
    }

    /// A generic point; in doubled systems both floors are equally likely
    /// over the doubled symbol.
    pub fn generic_point(&mut self, system: &Arc<SubshiftSystem>) -> SymbolicPoint {
        let rho = self.generic_rho(system);
        let ground = SymbolicPoint::ground(system.clone(), rho.clone()).expect("rho in [0,1)");
        let levels = system.levels_over(ground.cell().expect("generic point"));
        let level = levels[self.index(levels.len())];
        SymbolicPoint::new(system.clone(), rho, level).expect("level allowed over cell")
    }

    /// A generic point satisfying `accept`.
    pub fn generic_point_where<F>(&mut self, system: &Arc<SubshiftSystem>, accept: F) -> SymbolicPoint
    where
        F: Fn(&SymbolicPoint) -> bool,
    {
        loop {
            let p = self.generic_point(system);
            if accept(&p) {
                return p;
            }
        }
    }

    /// A generic point on the given level, drawn uniformly over the cells
    /// where that level exists.
    pub fn generic_point_on(&mut self, system: &Arc<SubshiftSystem>, level: Level) -> SymbolicPoint {
        loop {
            let rho = self.generic_rho(system);
            if let Ok(p) = SymbolicPoint::new(system.clone(), rho, level) {
                return p;
            }
        }
    }

    /// A height in `[0, g(x))`: `g(x)·p/q`.
    pub fn height(&mut self, g: &CeilingFunction, x: &SymbolicPoint) -> QLin {
        let q: i64 = self.rng.gen_range(1..=1000);
        let p: i64 = self.rng.gen_range(0..q);
        g.eval(x)
            .expect("generic point")
            .scale(&BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// A canonical suspension point over a generic base.
    pub fn suspension_point(&mut self, g: &CeilingFunction) -> SuspensionPoint {
        let x = self.generic_point(g.system());
        let s = self.height(g, &x);
        SuspensionPoint::new(x, s)
    }

    /// A rational in `[−bound, bound]` with denominator at most 1000.
    pub fn offset(&mut self, bound: i64) -> QLin {
        let q: i64 = self.rng.gen_range(1..=1000);
        let p: i64 = self.rng.gen_range(-bound * q..=bound * q);
        QLin::ratio(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{Partition, Symbol};

    #[test]
    fn same_seed_same_draws() {
        let a = (QLin::sqrt5() - QLin::one()).scale(&BigRational::new(1.into(), 2.into()));
        let p = Partition::from_cuts(&[Symbol(1), Symbol(0)], &[QLin::ratio(1, 2)]).unwrap();
        let sys = Arc::new(SubshiftSystem::plain(a, p).unwrap());
        let mut s1 = Sampler::new(7);
        let mut s2 = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(s1.generic_point(&sys), s2.generic_point(&sys));
            assert_eq!(s1.offset(50), s2.offset(50));
        }
        let u = Sampler::new(1).offset(50);
        assert!(u.abs() <= QLin::integer(50));
    }
}
