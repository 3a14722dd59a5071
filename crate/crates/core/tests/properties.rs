use ds_core::arith::{factorize, gcd, sqrt_mod};
use ds_core::descartes::{descartes_residual, is_primitive, parity_class, quintuple, CurvatureTriple};
use ds_core::forms::{auto_power, family_iterate, reduce_definite, reduce_indefinite, solve_pell_families, IntMatrix2, QuadForm};
use ds_core::geometry::QuadSurd;
use ds_core::arith::rat;
use proptest::prelude::*;

/// Moduli below 20000 for which `r` has a square root.
fn with_roots(r: i64) -> Vec<i64> {
    (1..20_000).filter(|&m| !sqrt_mod(r, m as u64).is_empty()).collect()
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..5_000_000) {
        let f = factorize(n);
        prop_assert!(f.is_valid());
        let prod: u64 = f.factors.iter().map(|&(p, e)| p.pow(e)).product();
        prop_assert_eq!(prod, n);
    }

    #[test]
    fn sqrt_mod_matches_brute_force(a in -50i64..50, m in 1u64..400) {
        let brute: Vec<u64> = (0..m)
            .filter(|&r| ((r * r) as i64 - a).rem_euclid(m as i64) == 0)
            .collect();
        prop_assert_eq!(sqrt_mod(a, m), brute);
    }

    #[test]
    fn ds_quintuples_satisfy_descartes(c1 in 1i64..300, c2 in 1i64..300, c3 in 1i64..300) {
        let t = CurvatureTriple::sorted(c1, c2, c3).unwrap();
        if let Some(q5) = quintuple(&t) {
            for cfg in q5.configurations() {
                prop_assert_eq!(descartes_residual(cfg), 0);
            }
            if is_primitive(&t) {
                prop_assert!(parity_class(&t).is_ok());
            }
        }
    }

    #[test]
    fn r_steps_preserve_discriminant_and_primitivity(a in -60i64..60, b in -60i64..60, c in -60i64..60, t in -9i64..9) {
        let f = QuadForm::new(a, b, c);
        let g = f.r_step(t);
        prop_assert_eq!(f.discriminant(), g.discriminant());
        prop_assert_eq!(f.is_primitive(), g.is_primitive());
    }

    #[test]
    fn indefinite_chains_reach_principal(m in prop::sample::select(with_roots(2)), pick in 0usize..64) {
        let roots = sqrt_mod(2, m as u64);
        let j = roots[pick % roots.len()] as i64;
        let f = QuadForm::new(-m, 2 * j, (j * j - 2) / -m);
        prop_assume!(f.is_primitive());
        let red = reduce_indefinite(&f).unwrap();
        prop_assert!(red.chain.iter().all(|g| g.discriminant() == 8 && g.is_primitive()));
        prop_assert_eq!(f.transform(&red.matrix), QuadForm::PRINCIPAL);
    }

    #[test]
    fn definite_chains_reach_reduced(a in prop::sample::select(with_roots(-2)), pick in 0usize..64) {
        let roots = sqrt_mod(-2, a as u64);
        let j = roots[pick % roots.len()] as i64;
        let f = QuadForm::new(a, 2 * j, (j * j + 2) / a);
        let red = reduce_definite(&f).unwrap();
        prop_assert!(red.chain.iter().all(|g| g.discriminant() == -8));
        prop_assert_eq!(f.transform(&red.matrix), red.end());
        prop_assert_eq!(red.end(), QuadForm::DEFINITE_REDUCED);
    }

    #[test]
    fn family_members_are_proper_solutions(k in -3000i64..-1, i in -6i64..6) {
        for fam in solve_pell_families(k) {
            let p = family_iterate(&fam, i);
            prop_assert_eq!((p.x as i128).pow(2) - 2 * (p.y as i128).pow(2), k as i128);
            prop_assert!(p.y > 0);
            prop_assert_eq!(gcd(p.x, p.y), 1);
            let next = family_iterate(&fam, i + 1);
            prop_assert_eq!(next.mapped(&IntMatrix2::AUTO_PRIME.inverse()), p);
            prop_assert!(next.x > p.x);
        }
    }

    #[test]
    fn auto_power_closed_form(n in -20i64..=20) {
        prop_assert_eq!(auto_power(n), IntMatrix2::AUTO_PRIME.pow(n));
        prop_assert_eq!(auto_power(n).det(), 1);
    }

    #[test]
    fn surd_field_laws(a in -20i128..20, b in -20i128..20, c in -20i128..20, d in 1i128..20, e in -20i128..20) {
        let x = QuadSurd::new(rat(a, 1), rat(b, 3), 7);
        let y = QuadSurd::new(rat(c, d), rat(e, 1), 7);
        prop_assert_eq!(x + y - y, x);
        if !y.is_zero() {
            prop_assert_eq!(x / y * y, x);
        }
        prop_assert_eq!((x * y).signum() as i64, (x.signum() * y.signum()) as i64);
        let approx = x.to_f64() * y.to_f64();
        prop_assert!(((x * y).to_f64() - approx).abs() < 1e-9 * (1.0 + approx.abs()));
    }
}
