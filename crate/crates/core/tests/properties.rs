use proptest::prelude::*;

use selfdual::codes::{dual, make_code, mu_map, mu_scale, ExponentVector, MuTarget};
use selfdual::cyclo::factor_xn_minus_a;
use selfdual::linalg::Matrix;
use selfdual::{make_field, oracle, Field, Poly, Shift};

const FIELDS: [(u64, u32); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (5, 2)];

fn field_strategy() -> impl Strategy<Value = Field> {
    (0..FIELDS.len()).prop_map(|i| make_field(FIELDS[i].0, FIELDS[i].1).unwrap())
}

fn poly_in(field: &Field, coeffs: &[u64]) -> Poly {
    let q = field.order();
    Poly::from_raw(field, coeffs.iter().map(|c| c % q).collect()).unwrap()
}

fn monic_in(field: &Field, coeffs: &[u64]) -> Poly {
    let q = field.order();
    let mut c: Vec<u64> = coeffs.iter().map(|c| c % q).collect();
    c[0] = c[0] % (q - 1) + 1;
    c.push(1);
    Poly::from_raw(field, c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(field in field_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let q = field.order();
        let [a, b, c] = [a, b, c].map(|x| field.element(x % q).unwrap());
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            prop_assert!(a.pow(q as i64 - 1).unwrap().is_one());
        }
        let p = field.p() as i64;
        prop_assert_eq!(a.add(&b).unwrap().pow(p).unwrap(), a.pow(p).unwrap().add(&b.pow(p).unwrap()).unwrap());
    }

    #[test]
    fn reciprocal_identities(field in field_strategy(),
                             f in prop::collection::vec(any::<u64>(), 1..10),
                             g in prop::collection::vec(any::<u64>(), 1..10)) {
        let (f, g) = (monic_in(&field, &f), monic_in(&field, &g));
        let (fs, gs) = (f.reciprocal().unwrap(), g.reciprocal().unwrap());
        prop_assert_eq!(fs.reciprocal().unwrap(), f.clone());
        prop_assert_eq!(f.mul(&g).unwrap().reciprocal().unwrap(), fs.mul(&gs).unwrap());
        prop_assert_eq!(fs.degree(), f.degree());
    }

    #[test]
    fn divmod_round_trip(field in field_strategy(),
                         a in prop::collection::vec(any::<u64>(), 0..16),
                         b in prop::collection::vec(any::<u64>(), 1..8)) {
        let a = poly_in(&field, &a);
        let b = monic_in(&field, &b);
        let (quot, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(quot.mul(&b).unwrap().add(&rem).unwrap(), a);
        prop_assert!(rem.degree().map_or(true, |d| d < b.degree().unwrap()));
    }

    #[test]
    fn parse_display_round_trip(field in field_strategy(), a in prop::collection::vec(any::<u64>(), 0..12)) {
        let a = poly_in(&field, &a);
        prop_assert_eq!(Poly::parse(&field, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn twisting_is_multiplicative(i in 0usize..3, m in prop::sample::select(vec![1usize, 3, 5, 7, 9]),
                                  plus in any::<bool>(),
                                  a in prop::collection::vec(any::<u64>(), 13),
                                  b in prop::collection::vec(any::<u64>(), 13)) {
        let (p, s) = [(5, 1), (3, 2), (13, 1)][i];
        let field = make_field(p, s).unwrap();
        let target = if plus { MuTarget::PlusGamma } else { MuTarget::MinusGamma };
        let (_, lambda) = mu_scale(&field, m, target).unwrap();
        let unity = Poly::x_pow_minus(&field, m, Shift::Cyclic);
        let twisted = Poly::x_pow_minus_elem(&lambda, m);
        let mu = |f: &Poly| mu_map(f, m, target).unwrap().rem(&twisted).unwrap();
        let (a, b) = (poly_in(&field, &a[..m]), poly_in(&field, &b[..m]));
        let prod = a.mul(&b).unwrap().rem(&unity).unwrap();
        prop_assert_eq!(mu(&prod), mu(&a).mul(&mu(&b)).unwrap().rem(&twisted).unwrap());
    }

    #[test]
    fn duals(field in field_strategy(), n in 1usize..16, negacyclic in any::<bool>(),
             picks in prop::collection::vec(any::<u64>(), 16)) {
        let shift = if negacyclic && field.p() != 2 { Shift::Negacyclic } else { Shift::Cyclic };
        let fz = factor_xn_minus_a(&field, n as u64, shift).unwrap();
        let exps = fz.factors().iter().zip(&picks).map(|(f, k)| k % (f.multiplicity + 1)).collect();
        let g = ExponentVector::new(&fz, exps).unwrap().generator(&fz);
        let code = make_code(&field, n, shift, &g).unwrap();
        let d = dual(&code).unwrap();
        prop_assert_eq!(code.dimension() + d.dimension(), n);
        let dd = dual(&d).unwrap();
        prop_assert_eq!(dd.generator(), code.generator());
        if code.dimension() > 0 && d.dimension() > 0 {
            let nullspace = oracle::nullspace_dual(&code).unwrap();
            let gd = selfdual::codes::generator_matrix(&d).unwrap();
            prop_assert!(nullspace.same_row_space(&gd));
        } else if code.dimension() == 0 {
            prop_assert!(Matrix::identity(&field, n).same_row_space(&selfdual::codes::generator_matrix(&d).unwrap()));
        }
    }

    #[test]
    fn divisor_lattice_size(field in field_strategy(), n in 1u64..30) {
        let fz = factor_xn_minus_a(&field, n, Shift::Cyclic).unwrap();
        let expected: u128 = fz.factors().iter().map(|f| f.multiplicity as u128 + 1).product();
        prop_assume!(expected <= 4096);
        let mut all = Vec::new();
        for d in oracle::all_divisors(&fz) {
            all.push(d.unwrap().1.coeffs_raw().to_vec());
        }
        all.sort();
        all.dedup();
        prop_assert_eq!(all.len() as u128, expected);
        prop_assert_eq!(fz.divisor_count().unwrap(), expected);
    }
}
