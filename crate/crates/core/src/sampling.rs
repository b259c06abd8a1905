//! Seeded sampling of small rational objects for randomized identity checks.
//!
//! All randomized verification in this crate draws from a `ChaCha8Rng` with
//! an explicit seed so every report is reproducible bit for bit.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::multilinear::{AltForm, Mat};
use crate::scalar::{rat, Scalar};
use crate::spin::Spinor;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in [−3, 3] and denominator in [1, 4].
pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=4);
    rat(num, den)
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_form(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> AltForm {
    let mut f = AltForm::zero(n, degree);
    for key in AltForm::basis_tuples(n, degree) {
        let c = small_rational(rng);
        f = f.add(&AltForm::monomial(n, &key, c));
    }
    f
}

pub fn skew_matrix(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            let v = small_rational(rng);
            m.set(r, c, v.clone());
            m.set(c, r, -v);
        }
    }
    m
}

/// Unit rational spinor via the stereographic parametrisation of S⁷:
/// for t ∈ ℚ⁷ with s = |t|², the point ((1−s)/(1+s), 2t/(1+s)) has norm 1.
pub fn random_unit_spinor(rng: &mut ChaCha8Rng) -> Spinor {
    let t = random_vector(rng, 7);
    let s: Scalar = t.iter().map(|x| x * x).sum();
    let denom = &s + &rat(1, 1);
    let mut components = Vec::with_capacity(8);
    components.push((&rat(1, 1) - &s) / &denom);
    for x in &t {
        components.push(&(x * &rat(2, 1)) / &denom);
    }
    Spinor::new(components).expect("stereographic point is a unit spinor")
}
