use super::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).unwrap()
}

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn trivial_modules() {
    let m = GModule::integers(&z(4));
    assert!(m.is_trivial_action());
    let m5 = GModule::trivial(&FiniteGroup::symmetric3(), &FgAbGroup::of(&[5]));
    assert_eq!(m5.underlying(), &FgAbGroup::of(&[5]));
    let t = GModule::trivial(&FiniteGroup::trivial(), &FgAbGroup::of(&[3, 0]));
    assert_eq!(t.rank(), 2);
}

#[test]
fn group_ring_actions() {
    let zg = GModule::group_ring(&z(2));
    assert_eq!(zg.action(1).matrix(), &IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]));
    let s3 = FiniteGroup::symmetric3();
    let r = GModule::group_ring(&s3);
    for g in s3.elements() {
        let m = r.action(g).matrix();
        for i in 0..6 {
            assert_eq!(m.row(i).len(), 1);
            assert_eq!(m.row(i)[0].1, b(1));
        }
        // augmentation is invariant: column sums are 1
        let sums: Vec<BigInt> = m.transpose().to_dense().iter().map(|c| c.iter().sum()).collect();
        assert!(sums.iter().all(|s| *s == b(1)));
    }
}

#[test]
fn augmentation_ideal_facts() {
    let (ig, incl) = GModule::augmentation_ideal(&z(2));
    assert_eq!(ig.action(1).matrix(), &IntMatrix::from_i64(&[vec![-1]]));
    for n in 1..=6 {
        let g = z(n);
        let (ig, incl) = GModule::augmentation_ideal(&g);
        assert_eq!(ig.rank(), n - 1);
        let eps = IntMatrix::from_i64(&[vec![1; n]]);
        assert!(eps.mul(incl.map().matrix()).is_zero());
    }
    assert!(incl.is_equivariant());
    let (ig3, _) = GModule::augmentation_ideal(&FiniteGroup::symmetric3());
    ig3.check_axioms().unwrap();
}

#[test]
fn j_module_facts() {
    let (jg, proj) = GModule::j_module(&z(2));
    assert_eq!(jg.action(1).matrix(), &IntMatrix::from_i64(&[vec![-1]]));
    let mu = vec![b(1); 2];
    assert!(proj.map().apply_coords(&mu).iter().all(|x| x.is_zero()));
    let (j3, p3) = GModule::j_module(&FiniteGroup::symmetric3());
    assert_eq!(j3.rank(), 5);
    j3.check_axioms().unwrap();
    assert!(p3.is_equivariant());
    assert!(p3.map().apply_coords(&vec![b(1); 6]).iter().all(|x| x.is_zero()));
}

#[test]
fn exactness_of_standard_sequences() {
    for g in [z(3), z(4), FiniteGroup::symmetric3(), FiniteGroup::klein()] {
        let n = g.order();
        let (_, incl) = GModule::augmentation_ideal(&g);
        let eps = AbHom::new(FgAbGroup::free(n), FgAbGroup::free(1), IntMatrix::from_i64(&[vec![1; n]])).unwrap();
        assert!(incl.map().is_injective().unwrap());
        assert!(eps.is_surjective().unwrap());
        let (k, kincl) = eps.kernel().unwrap();
        assert_eq!(k, FgAbGroup::free(n - 1));
        // kernel of eps equals the image of I_G: same cokernel
        assert_eq!(incl.map().cokernel().unwrap().0, FgAbGroup::free(1));
        assert!(eps.compose(&kincl).unwrap().is_zero());

        let (_, proj) = GModule::j_module(&g);
        let mu = AbHom::new(FgAbGroup::free(1), FgAbGroup::free(n), IntMatrix::from_i64(&vec![vec![1]; n])).unwrap();
        assert!(mu.is_injective().unwrap());
        assert!(proj.map().is_surjective().unwrap());
        assert_eq!(proj.map().kernel().unwrap().0, FgAbGroup::free(1));
        // I_G + Z and Z[G] have the same invariants
        assert_eq!(FgAbGroup::free(n - 1).direct_sum(&FgAbGroup::free(1)), FgAbGroup::free(n));
    }
}

#[test]
fn tensor_examples() {
    let g = z(3);
    let a = GModule::trivial(&g, &FgAbGroup::of(&[4]));
    let c = GModule::trivial(&g, &FgAbGroup::of(&[6]));
    assert_eq!(a.tensor(&c).unwrap().underlying(), &FgAbGroup::of(&[2]));
    let (ig, _) = GModule::augmentation_ideal(&g);
    let t = ig.tensor(&GModule::integers(&g)).unwrap();
    assert_eq!(t, ig);
    let zg = GModule::group_ring(&g).tensor(&a).unwrap();
    zg.check_axioms().unwrap();
    assert_eq!(zg.underlying(), &FgAbGroup::of(&[4, 4, 4]));
    assert!(GModule::integers(&g).tensor(&GModule::integers(&z(2))).is_err());
}

#[test]
fn tensor_elements_match_layout() {
    let x = FgAbGroup::of(&[4, 0]).element_i64(&[3, 5]).unwrap();
    let y = FgAbGroup::of(&[6]).element_i64(&[5]).unwrap();
    let t = tensor_elements(&x, &y);
    assert_eq!(t.group().orders(), &[b(2), b(6)]);
    assert_eq!(t.coords(), &[b(1), b(1)]);
}

#[test]
fn coinduced_examples() {
    let g = z(4);
    let whole = g.whole();
    let m = GModule::trivial(&whole.as_group(), &FgAbGroup::of(&[0]));
    let co = GModule::coinduced(&whole, &m).unwrap();
    assert_eq!(co.rank(), 1);
    assert!(co.is_trivial_action());

    let one = g.trivial_subgroup();
    let m1 = GModule::integers(&one.as_group());
    let co = GModule::coinduced(&one, &m1).unwrap();
    assert_eq!(co.underlying(), &FgAbGroup::free(4));
    co.check_axioms().unwrap();
}

#[test]
fn induced_coinduced_isomorphism() {
    let s3 = FiniteGroup::symmetric3();
    let cases = vec![
        (z(2), z(2).trivial_subgroup()),
        (z(4), z(4).generated_by(&[2])),
        (z(6), z(6).generated_by(&[2])),
        (s3.clone(), s3.sylow_subgroup(3)),
        (s3.clone(), s3.sylow_subgroup(2)),
    ];
    for (_, h) in cases {
        for a in [FgAbGroup::of(&[0]), FgAbGroup::of(&[4])] {
            let m = GModule::trivial(&h.as_group(), &a);
            let iso = induced_coinduced_iso(&h, &m).unwrap();
            assert!(iso.is_equivariant());
            assert!(iso.is_isomorphism().unwrap());
            assert!(iso.map().matrix().is_unimodular());
        }
    }
    // G = Z/2, H = 1, M = Z: explicit 2x2 matrix
    let g = z(2);
    let h = g.trivial_subgroup();
    let iso = induced_coinduced_iso(&h, &GModule::integers(&h.as_group())).unwrap();
    // basis of the induced side is 1⊗m, σ⊗m; φ -> 1⊗φ(1) + σ⊗φ(σ)
    assert_eq!(iso.map().matrix(), &IntMatrix::identity(2));
}

#[test]
fn induced_coinduced_with_twisted_h_module() {
    let g = z(4);
    let h = g.generated_by(&[2]);
    let hg = h.as_group();
    let m = GModule::sign_twisted(&hg, &[1, -1]).unwrap();
    let iso = induced_coinduced_iso(&h, &m).unwrap();
    assert!(iso.is_isomorphism().unwrap());
}

#[test]
fn fixed_points_examples() {
    let g = z(2);
    let t = GModule::trivial(&g, &FgAbGroup::of(&[0, 6]));
    assert_eq!(t.fixed_points().unwrap().0, FgAbGroup::of(&[0, 6]));
    let (f, incl) = GModule::group_ring(&g).fixed_points().unwrap();
    assert_eq!(f, FgAbGroup::free(1));
    let col = incl.matrix().column(0);
    assert!(col == vec![b(1), b(1)] || col == vec![b(-1), b(-1)]);
    let (ig, _) = GModule::augmentation_ideal(&g);
    assert!(ig.fixed_points().unwrap().0.is_trivial());
}

#[test]
fn coinvariants_examples() {
    let g = z(2);
    let t = GModule::trivial(&g, &FgAbGroup::of(&[0, 6]));
    assert_eq!(t.coinvariants().unwrap().0, FgAbGroup::of(&[0, 6]));
    let (q, proj) = GModule::group_ring(&g).coinvariants().unwrap();
    assert_eq!(q, FgAbGroup::free(1));
    assert_eq!(proj.apply_coords(&[b(1), b(0)]), proj.apply_coords(&[b(0), b(1)]));
    let (jg, _) = GModule::j_module(&g);
    assert_eq!(jg.coinvariants().unwrap().0, FgAbGroup::of(&[2]));
}

#[test]
fn norm_examples() {
    for n in 1..=6 {
        let nm = GModule::integers(&z(n)).norm_map();
        assert_eq!(nm.matrix(), &IntMatrix::from_i64(&[vec![n as i64]]));
    }
    let s3 = FiniteGroup::symmetric3();
    let zg = GModule::group_ring(&s3);
    let nm = zg.norm_map();
    assert_eq!(nm.matrix(), &IntMatrix::from_i64(&vec![vec![1; 6]; 6]));
    assert_eq!(nm.image().unwrap(), FgAbGroup::free(1));
    for g in s3.elements() {
        assert!(nm.compose(zg.action(g)).unwrap().equals(&nm));
    }
}

#[test]
fn norms_are_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in [z(4), z(6), FiniteGroup::symmetric3()] {
        for _ in 0..5 {
            let m = random_module(&g, &mut rng, 3, 12);
            let nm = m.norm_map();
            let (_, incl) = m.fixed_points().unwrap();
            for x in m.underlying().gens() {
                assert!(incl.preimage(&nm.apply(&x)).is_some());
            }
            m.induced_norm().unwrap();
        }
    }
}

#[test]
fn random_modules_are_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for g in [z(2), z(4), z(6), FiniteGroup::symmetric3(), FiniteGroup::klein()] {
        for _ in 0..5 {
            let m = random_module(&g, &mut rng, 3, 12);
            assert!(m.rank() <= 3);
            m.check_axioms().unwrap();
            let f = random_finite_module(&g, &mut rng, 3, 12);
            assert!(f.underlying().is_finite());
        }
    }
}

#[test]
fn random_sequences_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in [z(4), FiniteGroup::symmetric3()] {
        for _ in 0..4 {
            let (f, p) = random_short_exact(&g, &mut rng, 3, 12);
            assert!(f.map().is_injective().unwrap());
            assert!(p.map().is_surjective().unwrap());
            assert!(p.compose(&f).unwrap().map().is_zero());
            let (_, kincl) = p.map().kernel().unwrap();
            for x in kincl.source().gens() {
                assert!(f.map().preimage(&kincl.apply(&x)).is_some());
            }
        }
    }
}

#[test]
fn rejects_bad_actions() {
    let g = z(2);
    let a = FgAbGroup::free(1);
    assert!(GModule::new(&g, &a, vec![IntMatrix::identity(1), IntMatrix::from_i64(&[vec![2]])]).is_err());
    assert!(GModule::new(&g, &a, vec![IntMatrix::identity(1)]).is_err());
    let z3 = z(3);
    assert!(GModule::from_generators(&z3, &a, &[(1, IntMatrix::from_i64(&[vec![-1]]))]).is_err());
}

#[test]
fn fixed_under_normal_subgroup() {
    let g = z(4);
    let h = g.generated_by(&[2]);
    let zg = GModule::group_ring(&g);
    let (mh, incl, proj) = zg.fixed_under(&h).unwrap();
    assert_eq!(mh.group().order(), 2);
    assert_eq!(mh.underlying(), &FgAbGroup::free(2));
    assert_eq!(incl.target(), zg.underlying());
    assert_eq!(proj.len(), 4);
}

#[test]
fn json_roundtrip() {
    let (ig, _) = GModule::augmentation_ideal(&z(3));
    let s = serde_json::to_string(&ig).unwrap();
    let back: GModule = serde_json::from_str(&s).unwrap();
    assert_eq!(back, ig);
    let zero = GModule::trivial(&z(2), &FgAbGroup::trivial());
    let back: GModule = serde_json::from_str(&serde_json::to_string(&zero).unwrap()).unwrap();
    assert_eq!(back.rank(), 0);
}
