mod common;

use latinpoly::groebner::{normal_form, reduce_basis, reduced_groebner_basis, Ideal, Monomial, OrderKind, Ring};
use latinpoly::lpp::{apply_isotopism, conjugate, is_lpp, is_reduced, least_zero, reduce_lpp, ROLE_PERMUTATIONS};
use latinpoly::pp::is_pp;
use latinpoly::{BiPoly, Elem, UniPoly};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::*;

fn order() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![2usize, 3, 4, 5, 7, 8, 9])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(q in order(), seed: u64) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let [a, b, c] = [(); 3].map(|_| random_elem(&f, &mut rng));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        prop_assert_eq!(f.pow(a, q as u64), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        }
    }

    #[test]
    fn interpolation_round_trips(q in order(), seed: u64) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let values: Vec<Elem> = (0..q).map(|_| random_elem(&f, &mut rng)).collect();
        prop_assert_eq!(UniPoly::interpolate(&f, &values).unwrap().values(&f), values);
        let table: Vec<Elem> = (0..q * q).map(|_| random_elem(&f, &mut rng)).collect();
        let p = BiPoly::interpolate(&f, &table).unwrap();
        prop_assert_eq!(p.table(&f), table);
        prop_assert_eq!(BiPoly::interpolate(&f, &p.table(&f)).unwrap(), p);
    }

    #[test]
    fn composition_matches_values(q in order(), seed: u64) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_pp(&f, &mut rng);
        let h = random_pp(&f, &mut rng);
        let gh = g.compose(&f, &h);
        prop_assert!(is_pp(&f, &gh));
        for a in f.elements() {
            prop_assert_eq!(gh.eval(&f, a), g.eval(&f, h.eval(&f, a)));
        }
        prop_assert_eq!(g.compose(&f, &g.inverse_pp(&f).unwrap()), UniPoly::identity(q));
    }

    #[test]
    fn isotopisms_act_on_lpps(q in order(), seed: u64) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_lpp(&f, &mut rng);
        let a = random_isotopism(q, &mut rng);
        let b = random_isotopism(q, &mut rng);
        let pa = apply_isotopism(&f, &p, &a).unwrap();
        prop_assert!(is_lpp(&f, &pa));
        prop_assert_eq!(apply_isotopism(&f, &pa, &b).unwrap(), apply_isotopism(&f, &p, &b.compose(&a)).unwrap());
        prop_assert_eq!(apply_isotopism(&f, &pa, &a.inverse()).unwrap(), p);
    }

    #[test]
    fn conjugation_is_an_s3_action(q in order(), seed: u64, s in 0usize..6, t in 0usize..6) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_lpp(&f, &mut rng);
        let (s, t) = (ROLE_PERMUTATIONS[s], ROLE_PERMUTATIONS[t]);
        let ps = conjugate(&f, &p, s).unwrap();
        prop_assert!(is_lpp(&f, &ps));
        prop_assert_eq!(conjugate(&f, &ps, t).unwrap(), conjugate(&f, &p, [s[t[0]], s[t[1]], s[t[2]]]).unwrap());
    }

    #[test]
    fn reduction_gives_reduced_isotopes(q in order(), seed: u64) {
        let f = gf(q);
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_lpp(&f, &mut rng);
        let (a, b) = least_zero(&f, &p).unwrap();
        let (r, iso) = reduce_lpp(&f, &p, a, b).unwrap();
        prop_assert!(is_reduced(&r));
        prop_assert_eq!(apply_isotopism(&f, &r, &iso).unwrap(), p);
    }
}

/// A small random ideal over GF(q) in three variables, with field equations
/// so that it is zero-dimensional.
fn random_ideal(rng: &mut StdRng) -> Ideal {
    let q = *[2usize, 3, 5].choose(rng).unwrap();
    let f = gf(q);
    let ring = Ring::new(f.clone(), ["a", "b", "c"].map(String::from).to_vec(), OrderKind::Lex).unwrap();
    let mut gens: Vec<_> = (0..3).map(|k| ring.field_equation(k)).collect();
    for _ in 0..rng.gen_range(1..=3) {
        let terms = (0..rng.gen_range(1..=4))
            .map(|_| {
                let c = f.elem(rng.gen_range(1..q)).unwrap();
                let e: Vec<u16> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                let e = Monomial::from_exponents(&e);
                (c, e)
            })
            .collect::<Vec<_>>();
        let p = terms.iter().fold(ring.constant(Elem::ZERO), |acc, (c, e)| {
            let m = ring.monomial(*e, *c);
            ring.add(&acc, &m)
        });
        gens.push(p);
    }
    gens.shuffle(rng);
    Ideal::new(ring, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_bases_are_canonical(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ideal = random_ideal(&mut rng);
        let gb = reduced_groebner_basis(&ideal, 100_000).unwrap();
        for g in &ideal.gens {
            prop_assert!(normal_form(&gb, g).is_zero());
        }

        prop_assert_eq!(&reduce_basis(&gb).polys, &gb.polys);
        let regen = reduced_groebner_basis(&Ideal::new(gb.ring.clone(), gb.polys.clone()), 100_000).unwrap();
        prop_assert_eq!(&regen.polys, &gb.polys);

        let mut shuffled = ideal.gens.clone();
        shuffled.shuffle(&mut rng);
        let other = reduced_groebner_basis(&Ideal::new(ideal.ring.clone(), shuffled), 100_000).unwrap();
        prop_assert_eq!(other.lines(), gb.lines());

        let deg = reduced_groebner_basis(&ideal.with_order(OrderKind::DegRevLex), 100_000).unwrap();
        let lex = Ideal::new(deg.ring.clone(), deg.polys.clone()).with_order(OrderKind::Lex);
        let back = reduced_groebner_basis(&lex, 100_000).unwrap();
        prop_assert_eq!(back.lines(), gb.lines());
    }
}
