//! su(2) characters, highest-weight decomposition and the Newton-recursion
//! plethysms for symmetric and exterior powers.

use std::collections::BTreeMap;

use serde::Serialize;

use super::laurent::LaurentCharacter;
use super::RepError;

/// Character of Sym^k E: x^k + x^{k−2} + … + x^{−k}.
pub fn su2_char(k: u32) -> LaurentCharacter {
    let mut c = LaurentCharacter::zero(1);
    let k = k as i64;
    let mut e = k;
    while e >= -k {
        c.add_term([e, 0], 1);
        e -= 2;
    }
    c
}

/// Multiset of irreducible su(2) summands: weight k ↦ multiplicity of Sym^k E.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Su2Decomposition {
    multiplicities: BTreeMap<u32, u32>,
}

impl Su2Decomposition {
    pub fn from_multiplicities(multiplicities: BTreeMap<u32, u32>) -> Self {
        Su2Decomposition { multiplicities }
    }

    /// The single summand Sym^k E.
    pub fn irreducible(k: u32) -> Self {
        let mut m = BTreeMap::new();
        m.insert(k, 1);
        Su2Decomposition { multiplicities: m }
    }

    /// The trivial bundle.
    pub fn trivial() -> Self {
        Self::irreducible(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.multiplicities.get(&k).copied().unwrap_or(0)
    }

    pub fn total_dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(k, m)| (*k as u64 + 1) * *m as u64)
            .sum()
    }

    /// Removes one trivial summand (the trace part of Sym² of a fibre).
    pub fn remove_trivial(&self) -> Result<Self, RepError> {
        let mut m = self.multiplicities.clone();
        match m.get_mut(&0) {
            Some(v) if *v >= 1 => {
                *v -= 1;
                if *v == 0 {
                    m.remove(&0);
                }
                Ok(Su2Decomposition { multiplicities: m })
            }
            _ => Err(RepError::NegativeMultiplicity {
                weight: 0,
                multiplicity: -1,
            }),
        }
    }

    pub fn character(&self) -> LaurentCharacter {
        let mut c = LaurentCharacter::zero(1);
        for (&k, &m) in &self.multiplicities {
            c = c.add(&su2_char(k).scale(m as i64)).expect("rank 1");
        }
        c
    }
}

/// Decomposes a Weyl-symmetric rank-one character into irreducibles by
/// greedy highest-weight peeling. Negative multiplicities are rejected.
pub fn su2_decompose(c: &LaurentCharacter) -> Result<Su2Decomposition, RepError> {
    assert_eq!(c.num_vars(), 1);
    if !c.is_weyl_symmetric() {
        return Err(RepError::NotWeylSymmetric);
    }
    let mut rest = c.clone();
    let mut multiplicities = BTreeMap::new();
    while !rest.is_zero() {
        let (top, mult) = rest
            .terms()
            .max_by_key(|(e, _)| e[0])
            .expect("nonzero character has a top term");
        if top[0] < 0 || mult < 0 {
            return Err(RepError::NegativeMultiplicity {
                weight: top[0],
                multiplicity: mult,
            });
        }
        multiplicities.insert(top[0] as u32, mult as u32);
        rest = rest.sub(&su2_char(top[0] as u32).scale(mult))?;
    }
    let d = Su2Decomposition { multiplicities };
    debug_assert_eq!(d.total_dimension() as i64, c.dimension());
    Ok(d)
}

/// Symmetric power by the Newton recursion
/// `m·Sym^m(c) = Σ_{j=1..m} ψⱼ(c)·Sym^{m−j}(c)`.
pub fn sym_power(c: &LaurentCharacter, m: u32) -> Result<LaurentCharacter, RepError> {
    power_recursion(c, m, false)
}

/// Exterior power by the alternating Newton recursion
/// `m·Λ^m(c) = Σ_{j=1..m} (−1)^{j−1} ψⱼ(c)·Λ^{m−j}(c)`.
pub fn alt_power(c: &LaurentCharacter, m: u32) -> Result<LaurentCharacter, RepError> {
    power_recursion(c, m, true)
}

fn power_recursion(
    c: &LaurentCharacter,
    m: u32,
    alternating: bool,
) -> Result<LaurentCharacter, RepError> {
    let mut powers: Vec<LaurentCharacter> = vec![LaurentCharacter::one(c.num_vars())];
    for step in 1..=(m as i64) {
        let mut acc = LaurentCharacter::zero(c.num_vars());
        for j in 1..=step {
            let sign = if alternating && j % 2 == 0 { -1 } else { 1 };
            let term = c.adams(j).mul(&powers[(step - j) as usize])?.scale(sign);
            acc = acc.add(&term)?;
        }
        // divide by `step`, exactly
        let mut divided = LaurentCharacter::zero(c.num_vars());
        for (e, coeff) in acc.terms() {
            if coeff % step != 0 {
                return Err(RepError::NonIntegralPlethysm);
            }
            divided.add_term(e, coeff / step);
        }
        powers.push(divided);
    }
    Ok(powers.pop().expect("m-th power computed"))
}
