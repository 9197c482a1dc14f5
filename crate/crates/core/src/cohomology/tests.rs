use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bar::*;
use super::*;
use crate::abgroup::{homology_at, IntMatrix};
use crate::gmodule::{random_finite_module, random_module, random_short_exact};
use crate::group::{abelianization_oracle, FiniteGroup};

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

fn facs(c: &CohGroup) -> Vec<i64> {
    c.invariant_factors().iter().map(|x| i64::try_from(x).unwrap()).collect()
}

fn test_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(1).unwrap(),
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::cyclic(4).unwrap(),
        FiniteGroup::klein(),
        FiniteGroup::symmetric3(),
    ]
}

/// `H^even` and `H^odd` of a cyclic group from `σ - 1` and the norm alone.
fn cyclic_oracle(m: &GModule, even: bool) -> Vec<BigInt> {
    let g = m.group();
    let s = g.cyclic_generator().unwrap();
    let k = m.rank();
    let d = AbHom::new(
        m.underlying().clone(),
        m.underlying().clone(),
        m.action(s).matrix().sub(&IntMatrix::identity(k)),
    )
    .unwrap();
    let nm = m.norm_map();
    let h = if even { homology_at(&nm, &d) } else { homology_at(&d, &nm) };
    h.unwrap().group().orders().to_vec()
}

#[test]
fn bar_boundary_squares_to_zero() {
    for g in test_groups() {
        for r in 2..=4 {
            if g.order() == 6 && r == 4 {
                continue;
            }
            let dd = bar_boundary(&g, r - 1).unwrap().mul(&bar_boundary(&g, r).unwrap());
            assert!(dd.is_zero(), "d d != 0 for {g:?} at {r}");
        }
        let eps = augmentation(&g).mul(&bar_boundary(&g, 1).unwrap());
        assert!(eps.is_zero());
    }
    let s3 = FiniteGroup::symmetric3();
    let dd = bar_boundary(&s3, 3).unwrap().mul(&bar_boundary(&s3, 4).unwrap());
    assert!(dd.is_zero());
}

#[test]
fn bar_boundary_low_degree() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let d2 = bar_boundary(&g, 2).unwrap();
    // basis 1·(σ,σ) is index (0,1,1) = 3; d = σ(σ) - (1) + (σ)
    let col = d2.column(3);
    // C_1 basis h·(g) at h*2+g: σ(σ) = 3, 1·(1) = 0, 1·(σ) = 1
    assert_eq!(col, vec![b(-1), b(1), b(0), b(1)]);
    let d1 = bar_boundary(&g, 1).unwrap();
    // d(1·(σ)) = σ·() - ()
    assert_eq!(d1.column(1), vec![b(-1), b(1)]);
}

#[test]
fn homogeneous_comparison() {
    for g in test_groups() {
        for r in 1..=3 {
            let lhs = homogeneous_iso(&g, r - 1).unwrap().mul(&bar_boundary(&g, r).unwrap());
            let rhs = homogeneous_boundary(&g, r).unwrap().mul(&homogeneous_iso(&g, r).unwrap());
            assert_eq!(lhs, rhs);
        }
        for r in 0..=3 {
            let n = g.order();
            for idx in 0..tuple_count(n, r + 1) {
                let t = decode(idx, n, r + 1);
                assert_eq!(from_homogeneous(&g, &to_homogeneous(&g, &t)), t);
            }
        }
    }
    let z3 = FiniteGroup::cyclic(3).unwrap();
    assert_eq!(to_homogeneous(&z3, &[0, 1]), vec![0, 1]);
    assert_eq!(to_homogeneous(&z3, &[2]), vec![2]);
}

#[test]
fn contracting_homotopy_identity() {
    for g in test_groups() {
        let n = g.order();
        let eps = augmentation(&g);
        let lhs = homogeneous_boundary(&g, 1).unwrap().mul(&contracting_homotopy(&g, 0).unwrap());
        let lhs = lhs.add(&contracting_homotopy(&g, -1).unwrap().mul(&eps));
        assert_eq!(lhs, IntMatrix::identity(n));
        for r in 1..=3usize {
            let a = homogeneous_boundary(&g, r + 1).unwrap().mul(&contracting_homotopy(&g, r as isize).unwrap());
            let c = contracting_homotopy(&g, r as isize - 1).unwrap().mul(&homogeneous_boundary(&g, r).unwrap());
            assert_eq!(a.add(&c), IntMatrix::identity(tuple_count(n, r + 1)));
        }
    }
}

#[test]
fn cochain_complex_is_a_complex() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in test_groups() {
        let m = random_module(&g, &mut rng, 2, 6);
        for r in 0..3 {
            let d0 = cochain_differential(&m, r).unwrap();
            let d1 = cochain_differential(&m, r + 1).unwrap();
            assert!(d1.compose(&d0).unwrap().is_zero());
        }
        for r in 1..3 {
            let d0 = chain_differential(&m, r + 1).unwrap();
            let d1 = chain_differential(&m, r).unwrap();
            assert!(d1.compose(&d0).unwrap().is_zero());
        }
    }
}

#[test]
fn table_evaluation_matches_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = FiniteGroup::symmetric3();
    let m = random_module(&g, &mut rng, 2, 5);
    for r in 0..3 {
        let d = cochain_differential(&m, r).unwrap();
        let x: Vec<BigInt> = (0..d.source().ngens()).map(|i| b((i as i64 * 7 + 3) % 11 - 5)).collect();
        let c = Cochain::new(&m, r, x.clone()).unwrap();
        assert_eq!(c.coboundary().table(), d.apply_coords(c.table()).as_slice());
    }
    for r in 1..3 {
        let d = chain_differential(&m, r).unwrap();
        let x: Vec<BigInt> = (0..d.source().ngens()).map(|i| b((i as i64 * 5 + 1) % 9 - 4)).collect();
        let c = ChainElement::new(&m, r, x).unwrap();
        assert_eq!(c.boundary().table(), d.apply_coords(c.table()).as_slice());
    }
}

#[test]
fn integer_cohomology_examples() {
    for n in 1..=6 {
        let g = FiniteGroup::cyclic(n).unwrap();
        let z = GModule::integers(&g);
        assert_eq!(facs(&cohomology(&z, 0).unwrap()), vec![0]);
        assert!(cohomology(&z, 1).unwrap().is_trivial());
        assert_eq!(facs(&homology(&z, 0).unwrap()), vec![0]);
        let h1 = homology(&z, 1).unwrap();
        let t0 = tate(&z, 0).unwrap();
        if n == 1 {
            assert!(h1.is_trivial() && t0.is_trivial());
        } else {
            assert_eq!(facs(&h1), vec![n as i64]);
            assert_eq!(facs(&t0), vec![n as i64]);
        }
    }
    let s3 = FiniteGroup::symmetric3();
    let z = GModule::integers(&s3);
    assert_eq!(homology(&z, 1).unwrap().group(), &abelianization_oracle(&s3));
    assert_eq!(facs(&homology(&z, 1).unwrap()), vec![2]);
}

fn f9_units() -> GModule {
    // F_9^× ≅ Z/8 with Frobenius x -> x^3
    let g = FiniteGroup::cyclic(2).unwrap();
    GModule::new(&g, &FgAbGroup::of(&[8]), vec![IntMatrix::identity(1), IntMatrix::from_i64(&[vec![3]])]).unwrap()
}

#[test]
fn hilbert_90_small() {
    let m = f9_units();
    assert!(cohomology(&m, 1).unwrap().is_trivial());
    assert!(tate(&m, 0).unwrap().is_trivial());
    // ker(Nm) / im(σ - 1) with Nm = ×4, σ - 1 = ×2 on Z/8
    let d = AbHom::new(FgAbGroup::of(&[8]), FgAbGroup::of(&[8]), IntMatrix::from_i64(&[vec![2]])).unwrap();
    let nm = AbHom::new(FgAbGroup::of(&[8]), FgAbGroup::of(&[8]), IntMatrix::from_i64(&[vec![4]])).unwrap();
    assert!(homology_at(&d, &nm).unwrap().group().is_trivial());
}

#[test]
fn tate_of_induced_vanishes() {
    for g in test_groups() {
        let zg = GModule::group_ring(&g);
        for r in -3i32..=3 {
            if g.order() == 6 && r.abs() == 3 {
                continue;
            }
            assert!(tate(&zg, r).unwrap().is_trivial(), "{g:?} r={r}");
        }
    }
}

#[test]
fn degree_range_enforced() {
    let z = GModule::integers(&FiniteGroup::cyclic(2).unwrap());
    assert_eq!(tate(&z, 4).unwrap_err(), Error::DegreeOutOfRange(4));
    assert_eq!(tate(&z, -4).unwrap_err(), Error::DegreeOutOfRange(-4));
    assert!(matches!(cohomology(&z, 4), Err(Error::DegreeOutOfRange(4))));
}

#[test]
fn size_cap_reported() {
    let g = FiniteGroup::cyclic(64).unwrap();
    assert!(matches!(bar_boundary(&g, 4), Err(Error::SizeCap { .. })));
    // 64^4 entries per coordinate, two coordinates
    let z2 = GModule::trivial(&g, &FgAbGroup::of(&[0, 0]));
    assert!(matches!(tate(&z2, 3), Err(Error::SizeCap { .. })));
}

#[test]
fn cyclic_periodicity_against_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 2..=4 {
        let g = FiniteGroup::cyclic(n).unwrap();
        for _ in 0..3 {
            let m = random_module(&g, &mut rng, 2, 6);
            let even = cyclic_oracle(&m, true);
            let odd = cyclic_oracle(&m, false);
            for r in -3..=3 {
                let t = tate(&m, r).unwrap();
                let want = if r % 2 == 0 { &even } else { &odd };
                assert_eq!(&t.invariant_factors(), want, "n={n} r={r} {m:?}");
            }
        }
    }
}

#[test]
fn classify_and_lift_roundtrip() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let z = GModule::integers(&g);
    let h2 = tate(&z, 2).unwrap();
    assert_eq!(facs(&h2), vec![4]);
    for rep in h2.representatives() {
        let Rep::Cochain(c) = &rep else { panic!("cochains in degree 2") };
        assert!(c.is_cocycle());
        assert_eq!(h2.classify(&rep).unwrap().order(), b(4));
    }
    let not_cocycle = Cochain::from_fn(&z, 2, |t| vec![b(t[0] as i64)]).unwrap();
    assert!(!not_cocycle.is_cocycle());
    assert_eq!(h2.classify(&Rep::Cochain(not_cocycle)).unwrap_err(), Error::NotACycle);
}

#[test]
fn connecting_examples() {
    for n in 2..=5u64 {
        let g = FiniteGroup::cyclic(n as usize).unwrap();
        let z = GModule::integers(&g);
        let zn = GModule::trivial(&g, &FgAbGroup::of(&[n]));
        let f = GModuleHom::new(&z, &z, IntMatrix::from_i64(&[vec![n as i64]])).unwrap();
        let p = GModuleHom::new(&z, &zn, IntMatrix::from_i64(&[vec![1]])).unwrap();
        let se = ShortExact::new(f, p).unwrap();
        let d = connecting(&se, 1, Direction::Cohomology).unwrap();
        assert!(d.map.is_injective().unwrap());
        assert!(d.apply(&d.source.group().zero()).is_zero());
        // H^2(G, Z) ≅ Hom(G, Z/n) via δ
        assert!(d.is_isomorphism().unwrap());
    }
    for g in test_groups() {
        let aug = ShortExact::augmentation(&g);
        let d = connecting(&aug, -1, Direction::Tate).unwrap();
        assert!(d.is_isomorphism().unwrap());
    }
}

#[test]
fn homology_connecting_and_not_exact() {
    let g = FiniteGroup::cyclic(3).unwrap();
    let aug = ShortExact::augmentation(&g);
    // H_1(Z) -> H_0(I_G) is injective since Z[G] is induced
    let d = connecting(&aug, 1, Direction::Homology).unwrap();
    assert!(d.map.is_injective().unwrap());
    let z = GModule::integers(&g);
    let two = GModuleHom::new(&z, &z, IntMatrix::from_i64(&[vec![2]])).unwrap();
    assert!(matches!(ShortExact::new(two.clone(), two), Err(Error::NotExact(_))));
}

#[test]
fn dimension_shift_isomorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut cases = vec![GModule::integers(&FiniteGroup::cyclic(2).unwrap())];
    cases.push(random_module(&FiniteGroup::cyclic(3).unwrap(), &mut rng, 2, 4));
    cases.push(random_module(&FiniteGroup::klein(), &mut rng, 1, 4));
    for m in &cases {
        let (im, up) = dimension_shift(m, Shift::Up).unwrap();
        let (jm, down) = dimension_shift(m, Shift::Down).unwrap();
        for r in -2..=1 {
            let d = connecting(&up, r, Direction::Tate).unwrap();
            assert!(d.is_isomorphism().unwrap(), "up r={r}");
            assert_eq!(d.target.module(), &im);
            let d = connecting(&down, r, Direction::Tate).unwrap();
            assert!(d.is_isomorphism().unwrap(), "down r={r}");
            assert_eq!(d.source.module(), &jm);
        }
    }
    let z2 = GModule::integers(&FiniteGroup::cyclic(2).unwrap());
    let (im, _) = dimension_shift(&z2, Shift::Up).unwrap();
    assert_eq!(facs(&tate(&z2, 0).unwrap()), facs(&tate(&im, 1).unwrap()));
}

#[test]
fn long_exact_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for g in [FiniteGroup::cyclic(4).unwrap(), FiniteGroup::symmetric3()] {
        for _ in 0..2 {
            let (f, p) = random_short_exact(&g, &mut rng, 2, 6);
            let se = ShortExact::new(f, p).unwrap();
            let rep = long_exact_check(&se, -2, 1).unwrap();
            assert!(rep.all_exact(), "{:?}", rep.nodes);
        }
    }
}

fn z8_twisted(g: &FiniteGroup) -> GModule {
    let s = g.cyclic_generator().unwrap();
    GModule::from_generators(g, &FgAbGroup::of(&[8]), &[(s, IntMatrix::from_i64(&[vec![3]]))]).unwrap()
}

#[test]
fn restriction_corestriction() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let h = g.generated_by(&[2]);
    let m = z8_twisted(&g);
    for r in -2..=2 {
        let res = restriction(&m, &h, r).unwrap();
        let cor = corestriction(&m, &h, r).unwrap();
        let both = cor.map.compose(&res.map).unwrap();
        let idx = AbHom::identity(res.source.group()).scale(&b(h.index() as i64));
        assert!(both.equals(&idx), "r={r}");
    }
    for r in [-1, 0, 1, 2] {
        let id = restriction(&m, &g.whole(), r).unwrap();
        assert!(id.map.equals(&AbHom::identity(id.source.group())));
        let id = corestriction(&m, &g.whole(), r).unwrap();
        assert!(id.map.equals(&AbHom::identity(id.source.group())));
        let zero = restriction(&m, &g.trivial_subgroup(), r).unwrap();
        assert!(zero.target.is_trivial());
    }
    let s3 = FiniteGroup::symmetric3();
    let zs = GModule::group_ring(&s3).direct_sum(&GModule::trivial(&s3, &FgAbGroup::of(&[8]))).unwrap();
    for p in [2, 3] {
        let h = s3.sylow_subgroup(p);
        for r in 1..=2 {
            let res = restriction(&zs, &h, r).unwrap();
            let cor = corestriction(&zs, &h, r).unwrap();
            let idx = AbHom::identity(res.source.group()).scale(&b(h.index() as i64));
            assert!(cor.map.compose(&res.map).unwrap().equals(&idx));
        }
    }
}

#[test]
fn sylow_corestriction_hits_primary_part() {
    let s3 = FiniteGroup::symmetric3();
    let z = GModule::integers(&s3);
    for p in [2u64, 3] {
        let h = s3.sylow_subgroup(p as usize);
        let cor = corestriction(&z, &h, 0).unwrap();
        let img = cor.map.image().unwrap().order().unwrap();
        let whole = cor.target.order().unwrap();
        let mut pp = whole.clone();
        while &pp % p == b(0) {
            pp /= p;
        }
        assert_eq!(&whole / pp, img);
    }
}

#[test]
fn inflation_restriction() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let h = g.generated_by(&[2]);
    let cases = [z8_twisted(&g), GModule::group_ring(&g), GModule::integers(&g)];
    for m in &cases {
        let inf = inflation(m, &h, 1).unwrap();
        let res = restriction(m, &h, 1).unwrap();
        assert!(inf.map.is_injective().unwrap());
        let im = inf.map.image().unwrap().order();
        let (ker, _) = res.map.kernel().unwrap();
        assert_eq!(im, ker.order());
        assert!(res.map.compose(&inf.map).unwrap().is_zero());
    }
    let zg = GModule::group_ring(&g);
    assert!(tate(&zg, 1).unwrap().is_trivial());
    let id = inflation(&z8_twisted(&g), &g.trivial_subgroup(), 2).unwrap();
    assert!(id.is_isomorphism().unwrap());
    let s3 = FiniteGroup::symmetric3();
    assert_eq!(inflation(&GModule::integers(&s3), &s3.sylow_subgroup(2), 1).unwrap_err(), Error::NotNormal);
}

#[test]
fn herbrand_examples() {
    for n in 1..=6 {
        let g = FiniteGroup::cyclic(n).unwrap();
        let h = herbrand(&GModule::integers(&g)).unwrap();
        assert_eq!(h, BigRational::from_integer(b(n as i64)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = FiniteGroup::cyclic(4).unwrap();
    for _ in 0..4 {
        let m = random_finite_module(&g, &mut rng, 2, 8);
        assert_eq!(herbrand(&m).unwrap(), BigRational::from_integer(b(1)));
    }
    for _ in 0..3 {
        let (f, p) = random_short_exact(&g, &mut rng, 2, 6);
        let se = ShortExact::new(f, p).unwrap();
        let hb = herbrand(se.b()).unwrap();
        assert_eq!(hb, herbrand(se.a()).unwrap() * herbrand(se.c()).unwrap());
    }
    assert_eq!(herbrand(&GModule::integers(&FiniteGroup::klein())).unwrap_err(), Error::NotCyclic);
}

#[test]
fn cup_degree_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = FiniteGroup::cyclic(4).unwrap();
    for _ in 0..3 {
        let m = random_module(&g, &mut rng, 2, 6);
        let n = random_module(&g, &mut rng, 2, 6);
        let (hm, hn, hmn) = (tate(&m, 0).unwrap(), tate(&n, 0).unwrap(), tate(&m.tensor(&n).unwrap(), 0).unwrap());
        for x in hm.group().gens() {
            for y in hn.group().gens() {
                let c = cup(&Class::new(&hm, x.clone()).unwrap(), &Class::new(&hn, y.clone()).unwrap()).unwrap();
                let a = hm.lift_table(&x);
                let bb = hn.lift_table(&y);
                let t = crate::gmodule::tensor_elements(
                    &m.underlying().element(a).unwrap(),
                    &n.underlying().element(bb).unwrap(),
                );
                assert_eq!(c.value, hmn.classify_table(t.coords()).unwrap());
            }
        }
    }
    let z = GModule::integers(&g);
    let h1 = tate(&z, 1).unwrap();
    let h0 = tate(&z, 0).unwrap();
    let e = cup(&Class::new(&h0, h0.group().zero()).unwrap(), &Class::new(&h0, h0.group().gen(0)).unwrap()).unwrap();
    assert!(e.is_zero());
    let bad = cup(&Class::new(&h1, h1.group().zero()).unwrap(), &Class::new(&h1, h1.group().zero()).unwrap());
    assert_eq!(bad.unwrap_err(), Error::UnsupportedBidegree(1, 1));
}

/// `δ(a ⌣ [σ]) = -(a ⌣ δ[σ])` with δ from the augmentation sequence
/// (tensored with `M` on the left for the left side).
fn check_cup_delta(m: &GModule) {
    let g = m.group();
    let z = GModule::integers(g);
    let aug = ShortExact::augmentation(g);
    let maug = aug.tensor_left(m).unwrap();
    let h1 = tate(m, 1).unwrap();
    let hz = tate(&z, -2).unwrap();
    let hi = tate(aug.a(), -1).unwrap();
    let d_z = connecting_between(&aug, &hz, &hi).unwrap();
    let hm = tate(maug.c(), -1).unwrap();
    let hmi = tate(maug.a(), 0).unwrap();
    let d_m = connecting_between(&maug, &hm, &hmi).unwrap();
    for a in h1.group().gens() {
        let a = Class::new(&h1, a).unwrap();
        for s in hz.group().gens() {
            let sc = Class::new(&hz, s.clone()).unwrap();
            let left = cup(&a, &sc).unwrap();
            assert_eq!(left.group.module(), maug.c());
            let left = d_m.apply(&left.value);
            let right = cup(&a, &Class::new(&hi, d_z.apply(&s)).unwrap()).unwrap();
            assert_eq!(right.group.module(), maug.a());
            assert_eq!(left, right.value.neg());
        }
    }
}

#[test]
fn cup_delta_compatibility() {
    let g = FiniteGroup::cyclic(4).unwrap();
    check_cup_delta(&z8_twisted(&g));
    check_cup_delta(&GModule::trivial(&g, &FgAbGroup::of(&[4])));
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..3 {
        check_cup_delta(&random_module(&g, &mut rng, 2, 8));
    }
}

#[test]
fn splitting_module_basics() {
    let g = FiniteGroup::cyclic(3).unwrap();
    let c = GModule::integers(&g);
    let zero = Cochain::zero(&c, 2);
    let (cphi, se) = splitting_module(&c, &zero).unwrap();
    let (ig, _) = GModule::augmentation_ideal(&g);
    assert_eq!(cphi, c.direct_sum(&ig).unwrap());
    assert_eq!(se.c(), &ig);
    let bad = Cochain::from_fn(&c, 2, |t| vec![b(t[0] as i64)]).unwrap();
    assert_eq!(splitting_module(&c, &bad).unwrap_err(), Error::NotACocycle);

    // a generator of H^2(Z/3, Z)
    let h2 = tate(&c, 2).unwrap();
    let Rep::Cochain(phi) = h2.lift(&h2.group().gen(0)) else { panic!() };
    let (cphi, _) = splitting_module(&c, &phi).unwrap();
    let x = splitting_cochain(&c, &phi, &cphi).unwrap();
    let incl = GModuleHom::new(&c, &cphi, IntMatrix::from_i64(&[vec![1], vec![0], vec![0]])).unwrap();
    assert_eq!(x.coboundary(), phi.push(&incl).unwrap());
    assert!(tate(&cphi, 1).unwrap().is_trivial());
    assert!(tate(&cphi, 2).unwrap().is_trivial());
    let comp = tate_composite(&c, &phi).unwrap();
    assert!(comp.is_isomorphism().unwrap());
    for t in 0..3 {
        let chain = ChainElement::from_fn(&GModule::integers(&g), 1, |x| vec![b((x[0] == t) as i64)]).unwrap();
        let cls = comp.source.classify(&Rep::Chain(chain)).unwrap();
        let want = reciprocity_from_cocycle(&phi, g.inv(t)).unwrap();
        assert_eq!(comp.apply(&cls), want.value);
    }
}

#[test]
fn reciprocity_of_coboundary_is_trivial() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let m = z8_twisted(&g);
    let eta = Cochain::from_fn(&m, 1, |t| vec![b(t[0] as i64 * 3 + 1)]).unwrap();
    let phi = eta.coboundary();
    for s in g.elements() {
        assert!(reciprocity_from_cocycle(&phi, s).unwrap().is_zero());
    }
}

#[test]
fn cochain_json() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let z = GModule::integers(&g);
    let c = Cochain::from_fn(&z, 2, |t| vec![b((t[0] * t[1]) as i64)]).unwrap();
    let s = serde_json::to_string(&c).unwrap();
    assert!(s.contains(r#""table":{"0,0":["0"],"0,1":["0"],"1,0":["0"],"1,1":["1"]}"#), "{s}");
    let back: Cochain = serde_json::from_str(&s).unwrap();
    assert_eq!(back, c);
}
