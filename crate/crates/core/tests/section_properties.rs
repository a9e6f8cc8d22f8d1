use kostant_core::charpoly::{self, Polynomial};
use kostant_core::harness::{
    self, random_invariant_tuple, random_lie_element, random_matrix, substream_rng, SymbolicPolynomial,
};
use kostant_core::matrix::{self, Matrix};
use kostant_core::ring::{Fp2, GaussianRationals, InvolutiveRing, QuadraticFiniteField, TruncatedSeries};
use kostant_core::section::{self, InvariantTuple};

const SEED: u64 = 77;

/// Expands `$body` once per backend with `$r` bound to the ring.
macro_rules! for_each_backend {
    (|$r:ident| $body:block) => {{
        {
            let $r = QuadraticFiniteField::new(3, 2).unwrap();
            $body
        }
        {
            let $r = QuadraticFiniteField::new(7, 3).unwrap();
            $body
        }
        {
            let $r = TruncatedSeries::new(5, 2, 4).unwrap();
            $body
        }
        {
            let $r = GaussianRationals;
            $body
        }
    }};
}

fn conjugate<R: InvolutiveRing>(r: &R, a: &Matrix<R::El>) -> Matrix<R::El> {
    let (d, d_inv) = section::diag_alpha(r, &r.choose_alpha().unwrap(), a.n()).unwrap();
    matrix::mat_mul(r, &matrix::mat_mul(r, &d_inv, a).unwrap(), &d).unwrap()
}

#[test]
fn char_poly_conjugation_invariance_and_cayley_hamilton() {
    for_each_backend!(|r| {
        for n in 1..=5 {
            for i in 0..20 {
                let a = random_matrix(&r, n, &mut substream_rng(SEED, i));
                let chi = charpoly::char_poly(&r, &a);
                assert_eq!(charpoly::char_poly(&r, &conjugate(&r, &a)), chi);
                assert_eq!(charpoly::evaluate_at_matrix(&r, &chi, &a), matrix::zero(&r, n));
            }
        }
    });
}

#[test]
fn membership_paths_agree_and_lie_closure() {
    for_each_backend!(|r| {
        for n in 1..=5 {
            for i in 0..20 {
                let mut rng = substream_rng(SEED, i);
                // arbitrary matrices: both defect computations coincide
                let any = random_matrix(&r, n, &mut rng);
                assert!(matrix::in_unitary_lie_algebra(&r, &any).paths_agree);

                let x = random_lie_element(&r, n, &mut rng);
                let y = random_lie_element(&r, n, &mut rng);
                let c = r.random_fixed(&mut rng);
                for m in [
                    matrix::mat_add(&r, &x, &y).unwrap(),
                    matrix::scale(&r, &c, &x),
                    matrix::bracket(&r, &x, &y).unwrap(),
                ] {
                    assert!(matrix::in_unitary_lie_algebra(&r, &m).passed);
                }
            }
        }
    });
}

#[test]
fn oracle_matches_char_poly_under_substitution() {
    for n in 1..=harness::ORACLE_MAX_N {
        let coeffs: Vec<SymbolicPolynomial> = harness::symbolic_charpoly_oracle(n).unwrap().into_values().collect();
        for_each_backend!(|r| {
            for i in 0..50 {
                let mut rng = substream_rng(SEED + n as u64, i);
                let b: Vec<_> = (0..n).map(|_| r.random_element(&mut rng)).collect();
                let from_oracle: Vec<_> = coeffs.iter().map(|p| p.evaluate(&r, &b)).collect();
                let direct = charpoly::char_poly(&r, &section::model_matrix(&r, &b)).invariants();
                assert_eq!(from_oracle, direct);

                let a = random_invariant_tuple(&r, n, &mut rng);
                let solved = section::solve_b(&r, &a).unwrap();
                let reproduced: Vec<_> = coeffs.iter().map(|p| p.evaluate(&r, &solved)).collect();
                assert_eq!(reproduced, a.as_slice());
            }
        });
    }
}

#[test]
fn section_properties_up_to_six() {
    for_each_backend!(|r| {
        for n in 1..=6 {
            for i in 0..15 {
                let mut rng = substream_rng(SEED ^ 0xabc, i + 100 * n as u64);
                let a = random_invariant_tuple(&r, n, &mut rng);
                let s = section::build_section(&r, &a).unwrap();
                assert!(s.report.all_passed());
                assert!(section::matches_case_table(&r, &s.x, &s.b, &s.alpha).unwrap());
                assert!(s.b.iter().enumerate().all(|(k, bk)| r.has_parity(bk, k + 1)));
                assert_eq!(section::phi_n(&r, &s.x).unwrap(), a);
                assert!(charpoly::krylov_unit(&r, &s.x, &charpoly::unit_vector(&r, n, 0)).unwrap());

                // companion level: solve_b, model_matrix, char_poly is the identity on tuples
                let model = section::model_matrix(&r, &s.b);
                assert_eq!(
                    charpoly::char_poly(&r, &model),
                    Polynomial::from_invariants(&r, a.as_slice())
                );
                assert!(charpoly::krylov_unit(&r, &model, &charpoly::unit_vector(&r, n, 0)).unwrap());

                // a different valid alpha gives the same invariants
                let alt = r.neg(&s.alpha);
                let other = section::build_x(&r, &a, &alt).unwrap();
                assert!(other.report.all_passed());
                assert_eq!(charpoly::char_poly(&r, &other.x), charpoly::char_poly(&r, &s.x));
            }
        }
    });
}

#[test]
fn model_matrix_krylov_determinant_small() {
    // [e1 | M e1 | ...] is upper triangular with unit diagonal for the model matrix,
    // whatever b is, so its determinant is exactly 1.
    let r = GaussianRationals;
    for n in 1..=5 {
        let mut rng = substream_rng(SEED, n as u64);
        let b: Vec<_> = (0..n).map(|_| r.random_element(&mut rng)).collect();
        let m = section::model_matrix(&r, &b);
        let k = charpoly::krylov_matrix(&r, &m, &charpoly::unit_vector(&r, n, 0)).unwrap();
        let det = harness::laplace_determinant(
            &k.rows().map(|row| row.to_vec()).collect::<Vec<_>>(),
            &r.zero(),
            &|x, y| r.add(x, y),
            &|x, y| r.mul(x, y),
            &|x| r.neg(x),
        );
        assert_eq!(det, r.one());
        assert_eq!(charpoly::determinant(&r, &k), r.one());
    }
}

#[test]
fn phi_round_trip_over_samples() {
    let r = QuadraticFiniteField::new(5, 2).unwrap();
    for n in 1..=5 {
        for gamma in harness::sample_u_n(&r, n, 40, SEED) {
            let a = section::phi_n(&r, &gamma).unwrap();
            let s = section::build_section(&r, &a).unwrap();
            assert_eq!(charpoly::char_poly(&r, &s.x), charpoly::char_poly(&r, &gamma));
        }
    }
}

#[test]
fn worked_example_by_hand() {
    // det(xI - X) for X = [[w, 2w], [w, w]] over F3[w], w^2 = 2:
    // trace 2w, det w^2 - 2w^2 = -w^2 = -2 = 1, so chi = x^2 - 2w x + 1 = x^2 + w x + 1.
    let r = QuadraticFiniteField::new(3, 2).unwrap();
    let w = |y| Fp2::new(0, y);
    let a = InvariantTuple::new(&r, vec![w(1), r.one()]).unwrap();
    let s = section::build_x(&r, &a, &r.omega()).unwrap();
    assert_eq!(
        s.x,
        Matrix::from_rows(vec![vec![w(1), w(2)], vec![w(1), w(1)]]).unwrap()
    );
    assert_eq!(s.b, vec![w(2), r.one()]);
    assert_eq!(
        charpoly::char_poly(&r, &s.x).coeffs_low_to_high(),
        &[r.one(), w(1), r.one()]
    );
}
