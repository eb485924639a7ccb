//! Property-level invariants: ring and involution axioms on sampled
//! elements, star duality of the verifiers, existence of the Moore-Penrose
//! inverse under the conjugate transpose, and re-verification of every
//! produced witness.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stardmp::finite::ZnRing;
use stardmp::matrix::{GaussianMatrixRing, Matrix};
use stardmp::ring::{
    verify_dual_pseudo_core_eqs, verify_pseudo_core_eqs, Involution, Inverses, StarRing,
};
use stardmp::scalar::GaussianRational;
use stardmp::suite::random_gaussian_matrix;

fn involution_axioms<C: StarRing>(ring: &C, x: &C::Elem, y: &C::Elem) {
    let sx = ring.star(x);
    assert!(ring.eq(&ring.star(&sx), x), "star is not involutive");
    assert!(
        ring.eq(
            &ring.star(&ring.add(x, y)),
            &ring.add(&ring.star(x), &ring.star(y))
        ),
        "star is not additive"
    );
    assert!(
        ring.eq(
            &ring.star(&ring.mul(x, y)),
            &ring.mul(&ring.star(y), &ring.star(x))
        ),
        "star is not an anti-automorphism"
    );
}

fn ring_axioms<C: StarRing>(ring: &C, x: &C::Elem, y: &C::Elem, z: &C::Elem) {
    assert!(ring.eq(
        &ring.mul(&ring.mul(x, y), z),
        &ring.mul(x, &ring.mul(y, z))
    ));
    assert!(ring.eq(
        &ring.mul(x, &ring.add(y, z)),
        &ring.add(&ring.mul(x, y), &ring.mul(x, z))
    ));
    assert!(ring.eq(
        &ring.mul(&ring.add(x, y), z),
        &ring.add(&ring.mul(x, z), &ring.mul(y, z))
    ));
    assert!(ring.eq(&ring.add(x, &ring.neg(x)), &ring.zero()));
    assert!(ring.eq(&ring.mul(x, &ring.one()), x));
    assert!(ring.eq(&ring.mul(&ring.one(), x), x));
}

/// Ring and involution axioms on 1000 samples per carrier.
#[test]
fn axioms_hold_on_a_thousand_samples_per_carrier() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for involution in [Involution::Transpose, Involution::ConjugateTranspose] {
        let ring = GaussianMatrixRing::new(3, involution).unwrap();
        for i in 0..1000 {
            let x = random_gaussian_matrix(&mut rng, 3, i % 2 == 0);
            let y = random_gaussian_matrix(&mut rng, 3, i % 3 == 0);
            let z = random_gaussian_matrix(&mut rng, 3, true);
            involution_axioms(&ring, &x, &y);
            ring_axioms(&ring, &x, &y, &z);
        }
    }
    let zn = ZnRing::new(24).unwrap();
    for i in 0..1000u64 {
        let (x, y, z) = (i * 7 % 24, i * 5 % 24, i % 24);
        involution_axioms(&zn, &x, &y);
        ring_axioms(&zn, &x, &y, &z);
    }
    let fp = stardmp::matrix::FpMatrixRing::new(3, 2).unwrap();
    for i in 0..1000u64 {
        use stardmp::finite::FiniteCarrier;
        let x = fp.element_at(i % fp.size());
        let y = fp.element_at((i * 37 + 5) % fp.size());
        let z = fp.element_at((i * 11 + 1) % fp.size());
        involution_axioms(&fp, &x, &y);
        ring_axioms(&fp, &x, &y, &z);
    }
}

/// Under the conjugate transpose the Hermitian form is definite on any
/// subspace of Q(i)^n, so the Moore-Penrose inverse exists for every
/// matrix; 1000 random samples.
#[test]
fn moore_penrose_always_exists_under_conjugate_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for n in 1..=4usize {
        let ring = GaussianMatrixRing::new(n, Involution::ConjugateTranspose).unwrap();
        for i in 0..250 {
            let a = random_gaussian_matrix(&mut rng, n, i % 2 == 0);
            let w = ring
                .moore_penrose(&a)
                .into_witness()
                .expect("Moore-Penrose inverse must exist under conjugate transpose");
            assert!(w.verified);
        }
    }
}

fn entry_strategy() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(rn, rd, im, id)| GaussianRational::from_parts(rn, rd, im, id))
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = Matrix<GaussianRational>> {
    proptest::collection::vec(entry_strategy(), n * n)
        .prop_map(move |entries| Matrix::new(n, n, entries))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The dual equations are exactly the star-mirror of the pseudo core
    /// equations.
    #[test]
    fn star_duality_of_the_verifiers(
        a in matrix_strategy(2),
        x in matrix_strategy(2),
        m in 1u32..=3,
        conjugate in any::<bool>(),
    ) {
        let involution = if conjugate {
            Involution::ConjugateTranspose
        } else {
            Involution::Transpose
        };
        let ring = GaussianMatrixRing::new(2, involution).unwrap();
        let dual = verify_dual_pseudo_core_eqs(&ring, &a, &x, m).unwrap();
        let mirrored =
            verify_pseudo_core_eqs(&ring, &ring.star(&a), &ring.star(&x), m).unwrap();
        prop_assert_eq!(dual, mirrored);
    }

    /// Entry grammar round-trip: parse(print(x)) = x.
    #[test]
    fn gaussian_entry_round_trip(e in entry_strategy()) {
        let printed = e.to_string();
        let reparsed: GaussianRational = printed.parse().unwrap();
        prop_assert_eq!(reparsed, e);
    }

    /// Every witness the matrix carrier produces re-verifies, and the dual
    /// pseudo core inverse is the star of the pseudo core inverse of the
    /// star.
    #[test]
    fn witnesses_reverify_and_dualize(a in matrix_strategy(3), conjugate in any::<bool>()) {
        let involution = if conjugate {
            Involution::ConjugateTranspose
        } else {
            Involution::Transpose
        };
        let ring = GaussianMatrixRing::new(3, involution).unwrap();
        let d = ring.drazin(&a);
        prop_assert!(d.verified);
        let pc_of_star = ring.pseudo_core(&ring.star(&a)).into_witness();
        let dual = ring.dual_pseudo_core(&a).into_witness();
        match (pc_of_star, dual) {
            (Some(p), Some(q)) => {
                prop_assert!(p.verified && q.verified);
                prop_assert_eq!(ring.star(&p.value), q.value);
                prop_assert_eq!(p.index, q.index);
            }
            (None, None) => {}
            (p, q) => prop_assert!(false, "duality existence mismatch: {:?} vs {:?}", p, q),
        }
    }

    /// Full-rank factorization reconstructs its input exactly.
    #[test]
    fn full_rank_factorization_reconstructs(a in matrix_strategy(3)) {
        use stardmp::matrix::full_rank_factorization;
        use stardmp::scalar::GaussianField;
        let f = GaussianField;
        match full_rank_factorization(&f, &a) {
            Some(frf) => {
                prop_assert_eq!(frf.left.mul(&f, &frf.right), a);
                prop_assert!(frf.rank >= 1);
            }
            None => prop_assert!(a.is_zero(&f)),
        }
    }

    /// The Drazin index is the rank stabilization point.
    #[test]
    fn drazin_index_is_rank_stabilization(a in matrix_strategy(3)) {
        use stardmp::matrix::rank;
        use stardmp::scalar::GaussianField;
        let ring = GaussianMatrixRing::new(3, Involution::ConjugateTranspose).unwrap();
        let m = ring.drazin(&a).index();
        let f = GaussianField;
        let rk = |k: u32| rank(&f, &a.pow(&f, k));
        prop_assert_eq!(rk(m), rk(m + 1));
        if m > 1 {
            prop_assert!(rk(m - 1) > rk(m));
        }
    }
}
