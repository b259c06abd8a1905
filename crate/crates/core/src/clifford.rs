//! The real Clifford algebra Cl(7) with relations `eᵢeⱼ + eⱼeᵢ = −2δᵢⱼ`.
//!
//! Elements live on the 128 basis monomials `e_S`, S ⊆ {1..7}, encoded as
//! bitmasks (bit i−1 set means eᵢ occurs). Products of monomials are single
//! monomials up to sign, so multiplication reduces to a reordering-sign
//! computation.

use std::collections::BTreeMap;

use num::Zero;

use crate::multilinear::AltForm;
use crate::scalar::Scalar;

pub const GENERATORS: usize = 7;

/// Element of Cl(7), a rational combination of the 128 basis monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    coeffs: BTreeMap<u8, Scalar>,
}

/// Sign produced when concatenating monomials `e_S e_T` and rewriting to the
/// increasing monomial `e_{S△T}`: transpositions across the two blocks plus
/// one factor −1 per common index (`eᵢ² = −1`).
fn reorder_sign(s: u8, t: u8) -> i32 {
    let mut swaps = 0u32;
    for bit in 0..GENERATORS {
        if t & (1 << bit) != 0 {
            swaps += (s >> (bit + 1)).count_ones();
        }
    }
    swaps += (s & t).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl CliffordElement {
    pub fn zero() -> Self {
        CliffordElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        CliffordElement::basis(0)
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut out = CliffordElement::zero();
        out.add_term(0, c);
        out
    }

    /// Basis monomial `e_S` for a bitmask S over 7 generators.
    pub fn basis(mask: u8) -> Self {
        assert!(mask < 1 << GENERATORS);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mask, num::one());
        CliffordElement { coeffs }
    }

    /// The generator `eᵢ`, 1-based.
    pub fn generator(i: usize) -> Self {
        assert!((1..=GENERATORS).contains(&i));
        CliffordElement::basis(1 << (i - 1))
    }

    /// Degree-1 element with the given coordinates.
    pub fn from_vector(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), GENERATORS);
        let mut out = CliffordElement::zero();
        for (i, c) in v.iter().enumerate() {
            out.add_term(1 << i, c.clone());
        }
        out
    }

    /// Standard embedding of a form on ℝ⁷: the increasing monomial
    /// `e_{i₁}∧…∧e_{i_k}` maps to the Clifford monomial `e_{i₁}…e_{i_k}`.
    pub fn from_form(w: &AltForm) -> Self {
        assert_eq!(w.fibre_dim(), GENERATORS);
        let mut out = CliffordElement::zero();
        for (key, c) in w.terms() {
            let mask = key.iter().fold(0u8, |m, &i| m | (1 << (i - 1)));
            out.add_term(mask, c.clone());
        }
        out
    }

    fn add_term(&mut self, mask: u8, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(mask).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, mask: u8) -> Scalar {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &Scalar)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    /// Component of homogeneous degree k.
    pub fn grade(&self, k: u32) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in self.terms() {
            if m.count_ones() == k {
                out.add_term(m, c.clone());
            }
        }
        out
    }

    pub fn add(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CliffordElement) -> CliffordElement {
        self.add(&other.scale(&-num::one::<Scalar>()))
    }

    pub fn scale(&self, s: &Scalar) -> CliffordElement {
        let mut out = CliffordElement::zero();
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            out.coeffs.insert(m, c * s);
        }
        out
    }

    pub fn mul(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let sign = reorder_sign(ma, mb);
                let c = ca * cb;
                out.add_term(ma ^ mb, if sign < 0 { -c } else { c });
            }
        }
        out
    }
}

/// `clifford_mul(a, b)`, the algebra product.
pub fn clifford_mul(a: &CliffordElement, b: &CliffordElement) -> CliffordElement {
    a.mul(b)
}
