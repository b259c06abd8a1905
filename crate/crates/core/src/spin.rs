//! The 8-dimensional real spinor representation of Cl(7).
//!
//! ℝ⁸ is identified with the octonions; ρ(eᵢ) is left multiplication by the
//! imaginary unit uᵢ. Alternativity gives ρ(eᵢ)² = −id and polarisation gives
//! the Clifford relations, and each ρ(eᵢ) is skew-symmetric, so ⟨X·σ, σ⟩ = 0
//! for every vector X. The octonion product is fixed once and for all by the
//! multiplication triples below and frozen by golden tests downstream.

use std::sync::OnceLock;

use num::Zero;
use thiserror::Error;

use crate::clifford::{CliffordElement, GENERATORS};
use crate::multilinear::Mat;
use crate::scalar::{int, Scalar};

/// Oriented triples (a,b,c) with u_a·u_b = u_c cyclically.
const FANO_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [2, 5, 7],
    [1, 7, 6],
    [3, 6, 5],
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpinError {
    #[error("spinor must have 8 components, got {0}")]
    WrongLength(usize),
    #[error("spinor must have unit norm, got norm-squared {0}")]
    NotUnit(String),
}

/// Element of the real spin representation ℝ⁸.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spinor {
    components: Vec<Scalar>,
}

impl Spinor {
    pub fn new(components: Vec<Scalar>) -> Result<Self, SpinError> {
        if components.len() != 8 {
            return Err(SpinError::WrongLength(components.len()));
        }
        Ok(Spinor { components })
    }

    /// The i-th standard basis spinor (0-based).
    pub fn standard(i: usize) -> Self {
        assert!(i < 8);
        let mut components = vec![Scalar::zero(); 8];
        components[i] = num::one();
        Spinor { components }
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    pub fn norm_sq(&self) -> Scalar {
        self.components.iter().map(|c| c * c).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq() == int(1)
    }

    pub fn inner(&self, other: &Spinor) -> Scalar {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Spinor) -> Spinor {
        Spinor {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Spinor) -> Spinor {
        Spinor {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Spinor {
        Spinor {
            components: self.components.iter().map(|c| c * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }
}

/// Octonion product table on the basis (u₀ = 1, u₁, …, u₇):
/// `table[i][j] = (sign, k)` means uᵢ·uⱼ = sign·u_k.
fn octonion_table() -> [[(i8, usize); 8]; 8] {
    let mut table = [[(0i8, 0usize); 8]; 8];
    for j in 0..8 {
        table[0][j] = (1, j);
        table[j][0] = (1, j);
    }
    for i in 1..8 {
        table[i][i] = (-1, 0);
    }
    for t in FANO_TRIPLES {
        for r in 0..3 {
            let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
            table[a][b] = (1, c);
            table[b][a] = (-1, c);
        }
    }
    table
}

/// ρ(eᵢ) as an 8×8 sign matrix (column j = coordinates of uᵢ·uⱼ).
fn rho_matrices() -> &'static [[[i8; 8]; 8]; 7] {
    static RHO: OnceLock<[[[i8; 8]; 8]; 7]> = OnceLock::new();
    RHO.get_or_init(|| {
        let table = octonion_table();
        let mut rho = [[[0i8; 8]; 8]; 7];
        for i in 1..=7 {
            for j in 0..8 {
                let (sign, k) = table[i][j];
                rho[i - 1][k][j] = sign;
            }
        }
        rho
    })
}

/// Applies ρ(eᵢ) to a spinor, 1-based generator index.
pub fn apply_generator(i: usize, s: &Spinor) -> Spinor {
    assert!((1..=GENERATORS).contains(&i));
    let rho = &rho_matrices()[i - 1];
    let mut out = vec![Scalar::zero(); 8];
    for (r, row) in rho.iter().enumerate() {
        for (c, &sign) in row.iter().enumerate() {
            match sign {
                0 => {}
                1 => out[r] += &s.components[c],
                _ => out[r] -= &s.components[c],
            }
        }
    }
    Spinor { components: out }
}

/// The representation map: applies a Clifford element to a spinor.
/// A monomial e_{i₁}…e_{i_k} (indices increasing) acts as
/// ρ(e_{i₁})∘…∘ρ(e_{i_k}).
pub fn spinor_rep(a: &CliffordElement, s: &Spinor) -> Spinor {
    let mut out = Spinor {
        components: vec![Scalar::zero(); 8],
    };
    for (mask, c) in a.terms() {
        let mut acc = s.clone();
        for i in (1..=GENERATORS).rev() {
            if mask & (1 << (i - 1)) != 0 {
                acc = apply_generator(i, &acc);
            }
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// ρ(X) for a vector X, as an exact 8×8 matrix.
pub fn vector_matrix(x: &[Scalar]) -> Mat {
    assert_eq!(x.len(), GENERATORS);
    let mut m = Mat::zeros(8, 8);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let rho = &rho_matrices()[i];
        for r in 0..8 {
            for c in 0..8 {
                match rho[r][c] {
                    0 => {}
                    1 => {
                        let v = m.get(r, c) + xi;
                        m.set(r, c, v);
                    }
                    _ => {
                        let v = m.get(r, c) - xi;
                        m.set(r, c, v);
                    }
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::basis_vector;
    use crate::sampling;

    #[test]
    fn generator_images_satisfy_clifford_relations() {
        for i in 1..=7 {
            for j in 1..=7 {
                let ei = vector_matrix(&basis_vector(7, i - 1));
                let ej = vector_matrix(&basis_vector(7, j - 1));
                let anti = &(&ei * &ej) + &(&ej * &ei);
                let expected = Mat::identity(8).scale(&if i == j { int(-2) } else { int(0) });
                assert_eq!(anti, expected);
            }
        }
    }

    #[test]
    fn generator_images_are_skew() {
        for i in 1..=7 {
            let m = vector_matrix(&basis_vector(7, i - 1));
            assert!(m.is_skew());
        }
    }

    #[test]
    fn vector_action_is_orthogonal_to_the_spinor() {
        let mut rng = sampling::rng(19);
        for _ in 0..10 {
            let x = sampling::random_vector(&mut rng, 7);
            let s = sampling::random_unit_spinor(&mut rng);
            let xs = spinor_rep(&CliffordElement::from_vector(&x), &s);
            assert!(xs.inner(&s).is_zero());
        }
    }

    #[test]
    fn identity_and_squares_act_as_expected() {
        let s = Spinor::standard(3);
        assert_eq!(spinor_rep(&CliffordElement::one(), &s), s);
        let e1e1 = CliffordElement::generator(1).mul(&CliffordElement::generator(1));
        assert_eq!(spinor_rep(&e1e1, &s), s.scale(&int(-1)));
    }

    #[test]
    fn representation_is_an_algebra_homomorphism() {
        // 100 seeded random pairs, compared against separate application.
        let mut rng = sampling::rng(29);
        let random_element = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut out = CliffordElement::zero();
            for _ in 0..5 {
                let mask = rand::Rng::gen_range(rng, 0u8..128);
                out = out.add(&CliffordElement::basis(mask).scale(&sampling::small_rational(rng)));
            }
            out
        };
        for _ in 0..100 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let s = sampling::random_unit_spinor(&mut rng);
            let joint = spinor_rep(&a.mul(&b), &s);
            let split = spinor_rep(&a, &spinor_rep(&b, &s));
            assert_eq!(joint, split);
        }
    }

    #[test]
    fn wedge_contraction_clifford_relation_under_rho() {
        // ρ(X∧ω)s = ρ(X)ρ(ω)s + ρ(X⌟ω)s for random X, 2-form ω, spinor s.
        let mut rng = sampling::rng(47);
        for _ in 0..10 {
            let x = sampling::random_vector(&mut rng, 7);
            let w = sampling::random_form(&mut rng, 7, 2);
            let s = sampling::random_unit_spinor(&mut rng);
            let xf = crate::multilinear::AltForm::from_vector(&x);
            let wedge = CliffordElement::from_form(&xf.wedge(&w).unwrap());
            let lhs = spinor_rep(&wedge, &s);
            let rhs = spinor_rep(
                &CliffordElement::from_vector(&x),
                &spinor_rep(&CliffordElement::from_form(&w), &s),
            )
            .add(&spinor_rep(&CliffordElement::from_form(&w.interior(&x)), &s));
            assert_eq!(lhs, rhs);
        }
    }
}
