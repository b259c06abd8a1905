//! Character calculus for sp(1) ≅ su(2) and sp(2) ≅ so(5): irreducible
//! characters, dimensions, Casimir eigenvalues, symmetric/exterior power
//! plethysms, branching along the principal embedding sp(1) → sp(2), and
//! Frobenius-reciprocity multiplicities.

mod c2;
mod laurent;
mod su2;

pub use c2::{c2_casimir, c2_char, c2_dim, hom_multiplicity, principal_branch, C2Weight};
pub use laurent::LaurentCharacter;
pub use su2::{alt_power, su2_char, su2_decompose, sym_power, Su2Decomposition};

use serde::Serialize;
use thiserror::Error;

use crate::scalar::format_scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("not a character: negative multiplicity {multiplicity} at weight {weight}")]
    NegativeMultiplicity { weight: i64, multiplicity: i64 },
    #[error("character is not Weyl-symmetric")]
    NotWeylSymmetric,
    #[error("plethysm recursion produced a non-integral coefficient")]
    NonIntegralPlethysm,
    #[error("alternant division left a remainder; input was not dominant-integral")]
    InexactAlternantDivision,
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
}

/// Branching table for one sp(2) weight, as emitted by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct BranchTable {
    pub weight: [u32; 2],
    pub dim: u64,
    pub casimir: String,
    pub branch: std::collections::BTreeMap<String, u32>,
}

/// Computes the branching table of V(k,l) along the principal embedding.
pub fn branch_table(w: C2Weight) -> Result<BranchTable, RepError> {
    let ch = c2_char(w)?;
    let branch = principal_branch(&ch)?;
    Ok(BranchTable {
        weight: [w.k(), w.l()],
        dim: c2_dim(w),
        casimir: format_scalar(&c2_casimir(w)),
        branch: branch
            .multiplicities()
            .iter()
            .map(|(k, m)| (k.to_string(), *m))
            .collect(),
    })
}

/// Outcome of the Killing-tensor existence certificate: the three
/// Frobenius multiplicities of V(1,1) against Sym²₀m, m and Sym³m for
/// m = Sym⁶E, valid exactly when they are (1, 0, 0).
#[derive(Debug, Clone, Serialize)]
pub struct KillingCertificate {
    pub weight: [u32; 2],
    pub multiplicity_in_sym2_traceless: u32,
    pub multiplicity_in_tangent: u32,
    pub multiplicity_in_sym3: u32,
    pub valid: bool,
    pub killing_space_dim: u64,
    pub conclusion: String,
    pub notes: Vec<String>,
}

/// Certifies the existence of the 5-dimensional space of trace-free Killing
/// 2-tensors: V(1,1) occurs once in sections of Sym²₀T, and the invariant
/// first-order operators into T- and Sym³-sections vanish on it.
pub fn killing_certificate() -> Result<KillingCertificate, RepError> {
    killing_certificate_for(C2Weight::new(1, 1).expect("1 ≥ 1"))
}

/// Same computation for an arbitrary weight; only (1,1) yields a valid
/// certificate.
pub fn killing_certificate_for(w: C2Weight) -> Result<KillingCertificate, RepError> {
    let m_fibre = su2_char(6);
    let sym2 = su2_decompose(&sym_power(&m_fibre, 2)?)?;
    let sym2_traceless = sym2.remove_trivial()?;
    let tangent = su2_decompose(&m_fibre)?;
    let sym3 = su2_decompose(&sym_power(&m_fibre, 3)?)?;

    let m1 = hom_multiplicity(w, &sym2_traceless)?;
    let m2 = hom_multiplicity(w, &tangent)?;
    let m3 = hom_multiplicity(w, &sym3)?;
    let valid = (m1, m2, m3) == (1, 0, 0);
    let dim = c2_dim(w);

    // trace removal only affects the trivial sp(1)-summand of Sym²m
    let m1_with_trace = hom_multiplicity(w, &sym2)?;
    let mut notes = vec![format!(
        "multiplicity against full Sym^2 m is {m1_with_trace}; trace removal only \
         subtracts the trivial summand"
    )];
    if !valid {
        notes.push("certificate invalid: multiplicities differ from (1, 0, 0)".into());
    }

    let conclusion = if valid {
        format!(
            "V({},{}) gives a {dim}-dimensional space of trace-free, divergence-free \
             Killing 2-tensors",
            w.k(),
            w.l()
        )
    } else {
        format!(
            "V({},{}) does not certify a Killing-tensor space",
            w.k(),
            w.l()
        )
    };

    Ok(KillingCertificate {
        weight: [w.k(), w.l()],
        multiplicity_in_sym2_traceless: m1,
        multiplicity_in_tangent: m2,
        multiplicity_in_sym3: m3,
        valid,
        killing_space_dim: dim,
        conclusion,
        notes,
    })
}
