use proptest::prelude::*;

use assoc2::algebra2::{
    check_algebra, check_derivation, check_homomorphism, compose_homomorphisms, hochschild_coboundary,
    HochschildCochain, Homomorphism2, HomotopyDerivation, TwoTermAlgebra,
};
use assoc2::cohom2::{
    d1_apply, d2_residual, is_coboundary, is_cocycle2, reduce_cocycle, second_cohomology, Cochain1, Cochain2,
    CochainDims,
};
use assoc2::deform2::{adjoint_dims, check_generates, PolyStructure};
use assoc2::exactlin::{format_rational, parse_rational, rat, Poly, RationalMatrix};
use assoc2::ext2::{build_extension, extract_cocycle, extract_representation};
use assoc2::fixtures;
use assoc2::io::FileValue;
use assoc2::random;
use assoc2::rep2::{adjoint_representation, Representation2};
use assoc2::xmod::{xmod_adjoint, xmod_d1, xmod_d2_residual, XCochainDims};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

fn algebra(which: usize, seed: u64) -> TwoTermAlgebra {
    let algs = fixtures::algebras();
    let g = algs[which % algs.len()].1.clone();
    if seed.is_multiple_of(2) {
        g
    } else {
        random::isomorph(&mut random::rng(seed), &g).unwrap().0
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rationals_print_and_parse(n in -1000i64..1000, d in 1i64..50) {
        let q = assoc2::exactlin::ratio(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn rank_plus_nullity(seed: u64, rows in 1usize..6, cols in 1usize..6) {
        let t = random::tensor(&mut random::rng(seed), &[rows, cols], 0.6);
        let m = RationalMatrix::from_entries(rows, cols, t.data().to_vec());
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|c| *c == rat(0)));
        }
    }

    #[test]
    fn solve_recovers_image(seed: u64, n in 1usize..5) {
        let mut rng = random::rng(seed);
        let t = random::tensor(&mut rng, &[n, n + 1], 0.7);
        let m = RationalMatrix::from_entries(n, n + 1, t.data().to_vec());
        let x: Vec<_> = (0..=n).map(|_| random::small_rational(&mut rng)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap();
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn poly_evaluation_is_a_ring_map(seed: u64) {
        let mut rng = random::rng(seed);
        let mut p = || Poly::from_coeffs((0..3).map(|_| random::small_rational(&mut rng)).collect());
        let (a, b) = (p(), p());
        let x = rat(seed as i64 % 7 - 3);
        prop_assert_eq!((a.clone() * b.clone()).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((a.clone() + b.clone()).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn hochschild_square_is_zero(seed: u64, which in 0usize..3, arity in 1usize..4) {
        let (_, a, m) = fixtures::hochschild_bimodules().swap_remove(which);
        let mut shape = vec![a.dim(); arity];
        shape.push(m.dim());
        let f = HochschildCochain { values: random::tensor(&mut random::rng(seed), &shape, 0.6) };
        let dd = hochschild_coboundary(&a, &m, &hochschild_coboundary(&a, &m, &f).unwrap()).unwrap();
        prop_assert!(dd.values.is_zero());
    }

    #[test]
    fn isomorphs_satisfy_the_axioms(which in 0usize..5, seed: u64) {
        let g = fixtures::algebras()[which].1.clone();
        let (h, [f0, f1, f2]) = random::isomorph(&mut random::rng(seed), &g).unwrap();
        prop_assert!(check_algebra(&h).unwrap().passed());
        let iso = Homomorphism2 { f0, f1, f2 };
        prop_assert!(check_homomorphism(&h, &g, &iso).unwrap().passed());
    }

    #[test]
    fn composites_of_homomorphisms(which in 0usize..5, seed: u64) {
        let g = fixtures::algebras()[which].1.clone();
        let mut rng = random::rng(seed);
        let (h, [a0, a1, a2]) = random::isomorph(&mut rng, &g).unwrap();
        let (k, [b0, b1, b2]) = random::isomorph(&mut rng, &h).unwrap();
        let first = Homomorphism2 { f0: b0, f1: b1, f2: b2 };
        let second = Homomorphism2 { f0: a0, f1: a1, f2: a2 };
        let comp = compose_homomorphisms(&second, &first).unwrap();
        prop_assert!(check_homomorphism(&k, &g, &comp).unwrap().passed());
    }

    #[test]
    fn cohomology_is_an_isomorphism_invariant(which in 0usize..5, seed: u64) {
        let g = fixtures::algebras()[which].1.clone();
        let (h, _) = random::isomorph(&mut random::rng(seed), &g).unwrap();
        let a = second_cohomology(&g, &adjoint_representation(&g)).unwrap();
        let b = second_cohomology(&h, &adjoint_representation(&h)).unwrap();
        prop_assert_eq!((a.dim_z2(), a.dim_b2()), (b.dim_z2(), b.dim_b2()));
    }

    #[test]
    fn coboundaries_are_cocycles_with_witnesses(which in 0usize..5, seed: u64) {
        let g = algebra(which, seed);
        let r = adjoint_representation(&g);
        let w = random::cochain1(&mut random::rng(seed), CochainDims::of(&g, &r));
        let c = d1_apply(&g, &r, &w).unwrap();
        prop_assert!(d2_residual(&g, &r, &c).unwrap().is_zero());
        let found = is_coboundary(&g, &r, &c).unwrap().unwrap();
        prop_assert_eq!(d1_apply(&g, &r, &found).unwrap(), c);
    }

    #[test]
    fn cocycle_iff_first_order_axioms(which in 0usize..5, seed: u64, density in 0.05f64..0.6) {
        let g = algebra(which, seed);
        let c = random::cochain2(&mut random::rng(seed), adjoint_dims(&g), density);
        let cocycle = is_cocycle2(&g, &adjoint_representation(&g), &c).unwrap();
        let verdict = check_generates(&PolyStructure::new(g, c, None).unwrap()).unwrap();
        prop_assert_eq!(cocycle, verdict.cocycle_ok);
    }

    #[test]
    fn one_cocycles_are_derivations(which in 0usize..5, seed: u64) {
        let g = algebra(which, seed);
        let r = adjoint_representation(&g);
        let w = random::cochain1(&mut random::rng(seed), CochainDims::of(&g, &r));
        let d = HomotopyDerivation { d0: w.phi.clone(), d1: w.phi1.clone(), d2: w.chi.clone() };
        let is_cocycle = d1_apply(&g, &r, &w).unwrap().is_zero();
        prop_assert_eq!(check_derivation(&g, &d).unwrap().passed(), is_cocycle);
    }

    #[test]
    fn reduction_reassembles(which in 0usize..5, seed: u64) {
        let g = algebra(which, seed);
        let r = adjoint_representation(&g);
        let h = second_cohomology(&g, &r).unwrap();
        let c = random::cocycle(&mut random::rng(seed), &h);
        let red = reduce_cocycle(&g, &r, &c).unwrap();
        let back = red.representative.add(&d1_apply(&g, &r, &red.correction).unwrap());
        prop_assert_eq!(back, c);
    }

    #[test]
    fn extensions_round_trip(which in 0usize..5, seed: u64, trivial: bool) {
        let g = algebra(which, seed);
        let r = if trivial {
            Representation2::trivial(&g, assoc2::algebra2::TwoTermComplex::zero(1, 2))
        } else {
            adjoint_representation(&g)
        };
        let h = second_cohomology(&g, &r).unwrap();
        let c = random::cocycle(&mut random::rng(seed), &h);
        let e = build_extension(&g, &r, &c).unwrap();
        prop_assert!(check_algebra(&e.total).unwrap().passed());
        prop_assert_eq!(extract_representation(&e).unwrap(), r);
        prop_assert_eq!(extract_cocycle(&e).unwrap(), c);
    }

    #[test]
    fn xmod_d2_after_d1(which in 0usize..2, seed: u64) {
        let x = fixtures::crossed_modules()[which].1.clone();
        let r = xmod_adjoint(&x);
        let w = random::xcochain1(&mut random::rng(seed), XCochainDims::of(&x, &r));
        let c = xmod_d1(&x, &r, &w).unwrap();
        prop_assert!(xmod_d2_residual(&x, &r, &c).unwrap().is_zero());
    }

    #[test]
    fn files_round_trip(which in 0usize..5, seed: u64) {
        let g = algebra(which, seed);
        prop_assert_eq!(TwoTermAlgebra::from_json(&g.to_json()).unwrap(), g.clone());
        let r = adjoint_representation(&g);
        prop_assert_eq!(Representation2::from_json(&r.to_json()).unwrap(), r.clone());
        let mut rng = random::rng(seed);
        let dims = CochainDims::of(&g, &r);
        let c = random::cochain2(&mut rng, dims, 0.5);
        prop_assert_eq!(Cochain2::from_json(&c.to_json()).unwrap(), c);
        let w = random::cochain1(&mut rng, dims);
        prop_assert_eq!(Cochain1::from_json(&w.to_json()).unwrap(), w);
    }
}
