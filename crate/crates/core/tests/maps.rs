use std::collections::BTreeMap;
use std::sync::Arc;

use suspfactor::examples::{build, collapse_advance, ExampleBundle, ExampleParams};
use suspfactor::factormap::{
    check_commute, check_injective_pair, extract_pi_v, length_coincidence_scan, locality_witness,
    Code, Injectivity, TransferRule,
};
use suspfactor::sampling::Sampler;
use suspfactor::suspension::{Tile, TilePatch};
use suspfactor::{CeilingFunction, Level, QLin, SubshiftSystem, SuspensionPoint, Symbol, SymbolicPoint};

fn bundle(id: u8) -> ExampleBundle {
    build(id, &ExampleParams::default()).unwrap()
}

fn params() -> ExampleParams {
    ExampleParams::default()
}

fn ground(system: &Arc<SubshiftSystem>, rho: QLin) -> SymbolicPoint {
    SymbolicPoint::ground(system.clone(), rho).unwrap()
}

fn at(b: &ExampleBundle, rho: QLin, s: QLin) -> SuspensionPoint {
    SuspensionPoint::new(ground(b.source().system(), rho), s)
}

#[test]
fn example1_image_of_one_seventh() {
    let b = bundle(1);
    let image = b.code.apply(&at(&b, QLin::ratio(1, 7), QLin::zero())).unwrap();
    assert_eq!(image.base.rho(), &QLin::ratio(1, 7));
    assert_eq!(image.height, QLin::ratio(1, 7));
    let image = b.code.apply(&at(&b, QLin::ratio(1, 7), QLin::integer(2))).unwrap();
    assert_eq!(image.height, QLin::ratio(15, 7));
}

#[test]
fn example2_doubles_the_coordinate() {
    let b = bundle(2);
    let image = b.code.apply(&at(&b, QLin::ratio(1, 7), QLin::zero())).unwrap();
    assert_eq!(image.base.rho(), &QLin::ratio(2, 7));
    assert_eq!(image.height, QLin::ratio(1, 7));
    // the symbols of [0,1/4) … [3/4,1) go to 0, 1, 0, 1
    for (rho, label) in [((1, 8), 0), ((3, 8), 1), ((5, 8), 0), ((7, 8), 1)] {
        let x = ground(b.source().system(), QLin::ratio(rho.0, rho.1));
        let sp = SuspensionPoint::new(x, QLin::zero());
        assert_eq!(b.code.apply(&sp).unwrap().base.symbol().unwrap(), Symbol(label));
    }
}

#[test]
fn example2_antipodal_points_collide() {
    let b = bundle(2);
    let g = b.source();
    let x = ground(g.system(), QLin::ratio(1, 7));
    let y = ground(g.system(), QLin::ratio(9, 14));
    let a = g.canonical(&x, &QLin::ratio(1, 2)).unwrap();
    let c = SuspensionPoint::new(y, QLin::zero());
    assert_eq!(b.code.apply(&a).unwrap(), b.code.apply(&c).unwrap());
    let outcome = check_injective_pair(&b.code, &a, &c, 64).unwrap();
    assert!(matches!(outcome, Injectivity::Collapsed { image_shift: 0 }));
    assert!(!outcome.is_consistent());
}

#[test]
fn example1_identity_cases() {
    let b = bundle(1);
    let Code::Simple(m) = &b.code else { panic!("simple code") };
    let p = params();
    let x = ground(m.source.system(), QLin::ratio(1, 7));
    let c = m.check_identity(&x).unwrap();
    assert!(c.holds());
    assert_eq!(c.lhs, p.alpha);
    // ρ ∈ [1 − α, 1): both sides are α − 1
    let x = ground(m.source.system(), QLin::ratio(9, 10));
    let c = m.check_identity(&x).unwrap();
    assert!(c.holds());
    assert_eq!(c.lhs, &p.alpha - &QLin::one());

    let mut broken = m.clone();
    broken.t = TransferRule::Constant(QLin::zero());
    let c = broken.check_identity(&ground(m.source.system(), QLin::ratio(1, 7))).unwrap();
    assert!(!c.holds());
}

#[test]
fn example5_cohom_cases() {
    let b = bundle(5);
    let Code::General(m) = &b.code else { panic!("general code") };
    let p = params();
    let sys = m.source.system();

    let x0 = ground(sys, QLin::ratio(1, 2));
    assert_eq!(x0.symbol().unwrap(), Symbol(0));
    let c = m.check_cohom(&x0).unwrap();
    assert!(c.holds());
    assert_eq!(c.floor_index, 1);
    assert_eq!(collapse_advance(&x0).unwrap(), 1);

    let x1 = ground(sys, QLin::ratio(1, 7));
    assert_eq!(x1.symbol().unwrap(), Symbol(1));
    let c = m.check_cohom(&x1).unwrap();
    assert!(c.holds());
    assert_eq!(c.floor_index, 0);
    assert_eq!(c.increment.lhs, p.alpha);
    assert_eq!(m.source.eval(&x1).unwrap(), p.alpha);

    let upper = SymbolicPoint::new(sys.clone(), QLin::ratio(1, 7), Level::Upper).unwrap();
    let c = m.check_cohom(&upper).unwrap();
    assert!(c.holds());
    assert_eq!(c.floor_index, 1);

    let mut values: BTreeMap<_, _> = m.source.entries().clone();
    let key = (x1.cell().unwrap(), Level::Ground);
    let bumped = &values[&key] + &QLin::one();
    values.insert(key, bumped);
    let mut broken = m.clone();
    broken.source = CeilingFunction::new(sys.clone(), values).unwrap();
    assert!(!broken.check_cohom(&x1).unwrap().holds());
}

#[test]
fn example5_images_at_the_origin() {
    let b = bundle(5);
    let p = params();
    let sys = b.source().system();
    let r0 = QLin::ratio(1, 7);
    let img = b.code.apply(&SuspensionPoint::new(ground(sys, r0.clone()), QLin::zero())).unwrap();
    assert_eq!(img.base.rho(), &r0);
    assert_eq!(img.height, r0);

    let r0 = QLin::ratio(1, 2);
    let img = b.code.apply(&SuspensionPoint::new(ground(sys, r0.clone()), QLin::zero())).unwrap();
    assert_eq!(img.height, (&r0 + &p.alpha).frac());

    let x = ground(b.target().system(), QLin::ratio(1, 7));
    let sy = ground(sys, QLin::ratio(1, 7)).step().unwrap();
    let Code::General(m) = &b.code else { unreachable!() };
    assert_eq!(b.target().floor_index(&x, &m.transfer(&sy).unwrap()).unwrap(), 0);
}

#[test]
fn extraction_recovers_transfer() {
    let b = bundle(1);
    let x = ground(b.source().system(), QLin::ratio(2, 9));
    let (base, v) = extract_pi_v(&b.code, &x).unwrap();
    assert_eq!((base.rho(), base.level()), (x.rho(), Level::Ground));
    assert_eq!(v, QLin::ratio(2, 9));

    let b5 = bundle(5);
    let Code::General(m) = &b5.code else { unreachable!() };
    let y = ground(b5.source().system(), QLin::ratio(3, 11));
    let (base, v) = extract_pi_v(&b5.code, &y).unwrap();
    assert_eq!(base, m.pi(&y).unwrap());
    assert_eq!(v, m.transfer(&y).unwrap());
    assert!(m.check_cohom(&y).unwrap().holds());
}

#[test]
fn commutation_edge_cases() {
    let b = bundle(5);
    let y = ground(b.source().system(), QLin::ratio(1, 2));
    let s = QLin::ratio(1, 10);
    let sp = SuspensionPoint::new(y.clone(), s.clone());
    assert!(check_commute(&b.code, &sp, &QLin::zero()).unwrap().holds);
    // just past the top of the tile
    let u = b.source().eval(&y).unwrap() - s + QLin::ratio(1, 1000);
    let c = check_commute(&b.code, &sp, &u).unwrap();
    assert!(c.holds && c.crossed);
}

#[test]
fn injective_pair_trivial_case() {
    let b = bundle(1);
    let a = at(&b, QLin::ratio(1, 7), QLin::ratio(1, 3));
    assert_eq!(
        check_injective_pair(&b.code, &a, &a, 64).unwrap(),
        Injectivity::SourcesEquivalent { shift: 0 }
    );
}

#[test]
fn witnesses() {
    let mut sampler = Sampler::new(11);
    let w = locality_witness(&bundle(1).code, 1, 50, &mut sampler).unwrap().unwrap();
    assert!(w.image_gap.is_positive());
    assert_eq!(w.image_gap, (&w.rho_a - &w.rho_b).abs());
    assert!(locality_witness(&bundle(1).code, 20, 50, &mut sampler).unwrap().is_some());
    assert!(locality_witness(&bundle(4).code, 0, 50, &mut sampler).unwrap().is_none());
}

#[test]
fn scans() {
    let e = |id| bundle(id).fixtures;
    let f3 = e(3);
    assert!(length_coincidence_scan(&f3.source_lengths, &f3.target_lengths, 1).unwrap().is_empty());
    let f5 = e(5);
    let found = length_coincidence_scan(&f5.source_lengths, &f5.target_lengths, 12).unwrap();
    let eta2 = params().eta2;
    let i = f5.source_lengths.iter().position(|l| *l == eta2).unwrap();
    let j = f5.target_lengths.iter().position(|l| *l == eta2).unwrap();
    assert_eq!(found.len(), 12);
    assert!(found.iter().all(|c| c.uses_only(i, j)));
}

#[test]
fn split_of_a_short_patch() {
    let b = bundle(4);
    let Code::Split(code) = &b.code else { panic!("split code") };
    let patch = TilePatch {
        tiles: vec![
            Tile { label: Symbol(0), length: QLin::one(), left: QLin::zero() },
            Tile { label: Symbol(1), length: QLin::one(), left: QLin::one() },
        ],
    };
    let split = code.split_patch(&patch);
    let shape: Vec<_> = split.tiles.iter().map(|t| (t.label, t.length.clone())).collect();
    let half = QLin::ratio(1, 2);
    assert_eq!(
        shape,
        vec![(Symbol(0), QLin::one()), (Symbol(1), half.clone()), (Symbol(1), half)]
    );
    assert_eq!(split.total_length(), patch.total_length());
    assert_eq!(code.merge_patch(&split).unwrap(), patch);
}

#[test]
fn example4_patch_has_unit_tiles() {
    let b = bundle(4);
    let sp = at(&b, QLin::ratio(1, 7), QLin::zero());
    let patch = b.source().patch(&sp, &QLin::ratio(5, 2)).unwrap();
    assert!(patch.abuts());
    for t in &patch.tiles {
        assert_eq!(t.length, QLin::one());
        assert!(t.left.is_rational() && t.left.coeff(0).is_integer());
    }
}
