use quatlin_core::{
    compose, conjugation_form, equivalent, operator_matrix, reduce_involution_method,
    reduce_matrix_method, CanonicalForm, Method, Quaternion, TermList,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-9..=9) as f64,
        rng.gen_range(-9..=9) as f64,
        rng.gen_range(-9..=9) as f64,
        rng.gen_range(-9..=9) as f64,
    )
}

/// A parallel network: weighted sum of sandwiched conjugations, reduced
/// once as a flat term list and once through the form calculus.
#[test]
fn weighted_network_reduces_consistently() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let conj = conjugation_form();
    let mut flat = TermList::new();
    let mut calculus = CanonicalForm::ZERO;
    for _ in 0..8 {
        let (m, n) = (int_quat(&mut rng), int_quat(&mut rng));
        let w = rng.gen_range(-3..=3) as f64;
        // w · m q̄ n = Σ over conj terms of (w m c_left, c_right n)
        for &(cl, cr) in conj.to_terms().iter() {
            flat.push((m * cl).scale(w), cr * n);
        }
        let outer = CanonicalForm::sandwich(m, n);
        calculus = calculus + compose(&outer, &conj).scale(w);
    }
    let by_matrix = reduce_matrix_method(&flat);
    assert_eq!(by_matrix, reduce_involution_method(&flat));
    assert!(equivalent(&by_matrix, &calculus, 0.0));
}

/// Serial cascade: N compositions stay one 4-tuple and match iterated
/// application and the product of operator matrices.
#[test]
fn cascade_of_twenty() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let stages: Vec<CanonicalForm> = (0..20)
        .map(|_| {
            let t: TermList = (0..3)
                .map(|_| (int_quat(&mut rng), int_quat(&mut rng)))
                .collect();
            Method::Matrix.reduce(&t).scale(0.125)
        })
        .collect();
    let cascade = stages
        .iter()
        .fold(CanonicalForm::IDENTITY, |acc, f| compose(f, &acc));
    let matrix = stages
        .iter()
        .fold(quatlin_core::Matrix4::IDENTITY, |acc, f| {
            operator_matrix(f) * acc
        });
    assert!(operator_matrix(&cascade).approx_eq(&matrix, 1e-12));
    let q = Quaternion::new(0.5, -1.0, 2.0, 0.25);
    let iterated = stages.iter().fold(q, |x, f| f.evaluate(x));
    assert!(cascade.evaluate(q).approx_eq(iterated, 1e-12));
}

#[test]
fn values_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Quaternion>();
    assert_send_sync::<CanonicalForm>();
    assert_send_sync::<TermList>();
}
