use kostant_core::harness::substream_rng;
use kostant_core::ring::{GaussianRationals, InvolutiveRing, QuadraticFiniteField, TruncatedSeries};
use proptest::prelude::*;

fn check_laws<R: InvolutiveRing>(ring: &R, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = substream_rng(seed, 0);
    let x = ring.random_element(&mut rng);
    let y = ring.random_element(&mut rng);
    let z = ring.random_element(&mut rng);

    prop_assert_eq!(
        ring.sigma(&ring.mul(&x, &y)),
        ring.mul(&ring.sigma(&x), &ring.sigma(&y))
    );
    prop_assert_eq!(
        ring.sigma(&ring.add(&x, &y)),
        ring.add(&ring.sigma(&x), &ring.sigma(&y))
    );
    prop_assert_eq!(ring.sigma(&ring.sigma(&x)), x.clone());

    prop_assert_eq!(ring.mul(&ring.one(), &x), x.clone());
    prop_assert_eq!(ring.mul(&x, &y), ring.mul(&y, &x));
    prop_assert_eq!(
        ring.mul(&x, &ring.add(&y, &z)),
        ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z))
    );
    prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
    prop_assert_eq!(ring.sub(&x, &y), ring.add(&x, &ring.neg(&y)));

    let trace = ring.trace(&x);
    let norm = ring.norm(&x);
    prop_assert_eq!(ring.sigma(&trace), trace);
    prop_assert_eq!(ring.sigma(&norm), norm);

    if ring.is_unit(&x) {
        prop_assert_eq!(ring.mul(&x, &ring.invert(&x).unwrap()), ring.one());
    } else {
        prop_assert!(ring.invert(&x).is_err());
    }

    // the fixed subring is exactly the y-part-zero draws
    let f = ring.random_fixed(&mut rng);
    prop_assert_eq!(ring.sigma(&f), f);
    let t = ring.random_trace_zero(&mut rng);
    prop_assert!(ring.is_zero(&ring.trace(&t)));

    prop_assert_eq!(ring.decode(&ring.encode(&x)).unwrap(), x.clone());
    prop_assert!(ring.validate(&x).is_ok());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn finite_field_laws(seed in any::<u64>(), which in 0usize..4) {
        let (p, d) = [(3, 2), (5, 2), (7, 3), (13, 2)][which];
        check_laws(&QuadraticFiniteField::new(p, d).unwrap(), seed)?;
    }

    #[test]
    fn series_laws(seed in any::<u64>(), precision in 1usize..6) {
        check_laws(&TruncatedSeries::new(5, 2, precision).unwrap(), seed)?;
    }

    #[test]
    fn rational_laws(seed in any::<u64>()) {
        check_laws(&GaussianRationals, seed)?;
    }
}

#[test]
fn frobenius_has_order_two_on_every_element() {
    for (p, d) in [(3, 2), (5, 2), (7, 3)] {
        let r = QuadraticFiniteField::new(p, d).unwrap();
        let fixed: Vec<_> = r.elements().filter(|a| r.sigma(a) == *a).collect();
        assert_eq!(fixed.len() as u64, p);
        assert!(fixed.iter().all(|a| a.y == 0));
    }
}
