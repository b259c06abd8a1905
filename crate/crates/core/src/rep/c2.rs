//! Irreducible characters of sp(2) ≅ so(5) in ε-coordinates: the Weyl
//! character formula as an exact ratio of alternants over the 8-element
//! hyperoctahedral Weyl group, dimensions, Casimir eigenvalues, and the
//! branching along the principal sp(1) embedding.

use super::laurent::LaurentCharacter;
use super::su2::{su2_decompose, Su2Decomposition};
use super::RepError;
use crate::scalar::{rat, Scalar};

/// Dominant weight (k, l) = kε₁ + lε₂ with k ≥ l ≥ 0; k belongs to the short
/// simple root direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct C2Weight {
    k: u32,
    l: u32,
}

impl C2Weight {
    pub fn new(k: u32, l: u32) -> Option<Self> {
        (k >= l).then_some(C2Weight { k, l })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }
}

/// The 8 signed permutations (w, det w) acting on exponent pairs.
fn weyl_group() -> [([[i64; 2]; 2], i64); 8] {
    let mut out = [([[0i64; 2]; 2], 0i64); 8];
    let mut idx = 0;
    for swap in [false, true] {
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                let m = if swap {
                    [[0, s1], [s2, 0]]
                } else {
                    [[s1, 0], [0, s2]]
                };
                let det = if swap { -s1 * s2 } else { s1 * s2 };
                out[idx] = (m, det);
                idx += 1;
            }
        }
    }
    out
}

/// Alternant A_μ = Σ_w det(w) x^{(wμ)₁} y^{(wμ)₂}.
fn alternant(mu: [i64; 2]) -> LaurentCharacter {
    let mut a = LaurentCharacter::zero(2);
    for (m, det) in weyl_group() {
        let e = [
            m[0][0] * mu[0] + m[0][1] * mu[1],
            m[1][0] * mu[0] + m[1][1] * mu[1],
        ];
        a.add_term(e, det);
    }
    a
}

/// Irreducible character of V(k,l) by the Weyl character formula: the exact
/// ratio of alternants A_{λ+ρ} / A_ρ with ρ = (2,1), divided term by term
/// and rejected if any remainder survives.
pub fn c2_char(w: C2Weight) -> Result<LaurentCharacter, RepError> {
    let mu = [w.k as i64 + 2, w.l as i64 + 1];
    let quotient = alternant(mu).divide_exact(&alternant([2, 1]))?;
    debug_assert_eq!(quotient.dimension() as u64, c2_dim(w));
    Ok(quotient)
}

/// dim V(k,l) = (k−l+1)(l+1)(k+l+3)(k+2)/6.
pub fn c2_dim(w: C2Weight) -> u64 {
    let (k, l) = (w.k as u64, w.l as u64);
    (k - l + 1) * (l + 1) * (k + l + 3) * (k + 2) / 6
}

/// Casimir eigenvalue (Killing-form normalisation) on V(k,l):
/// −(4k + k² + 2l + l²)/12.
pub fn c2_casimir(w: C2Weight) -> Scalar {
    let (k, l) = (w.k as i64, w.l as i64);
    rat(-(4 * k + k * k + 2 * l + l * l), 12)
}

/// Branches a C₂ character along the principal sp(1): substitutes
/// (x, y) ↦ (t³, t) — the standard 4-dimensional module restricts to Sym³E —
/// and decomposes the restriction.
pub fn principal_branch(c: &LaurentCharacter) -> Result<Su2Decomposition, RepError> {
    su2_decompose(&c.substitute_principal())
}

/// Frobenius-reciprocity multiplicity of V(k,l) in sections of the bundle
/// associated to an sp(1)-fibre: Σ_m mult_m(V(k,l)|) · mult_m(fibre).
pub fn hom_multiplicity(w: C2Weight, bundle: &Su2Decomposition) -> Result<u32, RepError> {
    let branch = principal_branch(&c2_char(w)?)?;
    Ok(branch
        .multiplicities()
        .iter()
        .map(|(k, m)| m * bundle.multiplicity(*k))
        .sum())
}
