//! Finitely supported integer Laurent polynomials in one or two torus
//! variables, used as (virtual) characters.

use std::collections::BTreeMap;

use super::RepError;

/// Laurent polynomial with integer coefficients on ℤ (one variable) or ℤ²
/// (two variables). Exponent tuples always carry two slots; rank-one
/// characters keep the second slot at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentCharacter {
    num_vars: usize,
    coeffs: BTreeMap<[i64; 2], i64>,
}

impl LaurentCharacter {
    pub fn zero(num_vars: usize) -> Self {
        assert!(num_vars == 1 || num_vars == 2);
        LaurentCharacter {
            num_vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        let mut c = LaurentCharacter::zero(num_vars);
        c.add_term([0, 0], 1);
        c
    }

    pub fn monomial(num_vars: usize, exps: [i64; 2], coeff: i64) -> Self {
        assert!(num_vars == 1 || num_vars == 2);
        assert!(num_vars == 2 || exps[1] == 0);
        let mut c = LaurentCharacter::zero(num_vars);
        c.add_term(exps, coeff);
        c
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exps: [i64; 2]) -> i64 {
        self.coeffs.get(&exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([i64; 2], i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub(crate) fn add_term(&mut self, exps: [i64; 2], coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(exps).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RepError> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = LaurentCharacter::zero(self.num_vars);
        if s == 0 {
            return out;
        }
        for (e, c) in self.terms() {
            out.coeffs.insert(e, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RepError> {
        self.check_vars(other)?;
        let mut out = LaurentCharacter::zero(self.num_vars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1]], ca * cb);
            }
        }
        Ok(out)
    }

    /// Adams operation ψⱼ: substitutes each variable by its j-th power.
    pub fn adams(&self, j: i64) -> Self {
        let mut out = LaurentCharacter::zero(self.num_vars);
        for (e, c) in self.terms() {
            out.add_term([e[0] * j, e[1] * j], c);
        }
        out
    }

    /// Value at the identity element (all variables 1): the dimension for an
    /// actual character.
    pub fn dimension(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }

    /// Weyl symmetry: x ↦ x⁻¹ in rank one; all signed coordinate
    /// permutations in rank two.
    pub fn is_weyl_symmetric(&self) -> bool {
        match self.num_vars {
            1 => self
                .terms()
                .all(|(e, c)| self.coefficient([-e[0], 0]) == c),
            _ => {
                for (e, c) in self.terms() {
                    for (a, b) in [
                        (-e[0], e[1]),
                        (e[0], -e[1]),
                        (-e[0], -e[1]),
                        (e[1], e[0]),
                        (-e[1], e[0]),
                        (e[1], -e[0]),
                        (-e[1], -e[0]),
                    ] {
                        if self.coefficient([a, b]) != c {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Restriction along the principal torus: (x, y) ↦ (t³, t).
    pub fn substitute_principal(&self) -> Self {
        assert_eq!(self.num_vars, 2);
        let mut out = LaurentCharacter::zero(1);
        for (e, c) in self.terms() {
            out.add_term([3 * e[0] + e[1], 0], c);
        }
        out
    }

    /// Exact division, verified by multiplying back.
    ///
    /// Repeatedly cancels the lexicographically leading term of the running
    /// remainder against the leading term of the divisor. Lex order on the
    /// exponents is compatible with addition, so for a genuinely divisible
    /// input each step discovers one term of the quotient and the loop ends
    /// after exactly as many steps; a step cap catches indivisible inputs.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, RepError> {
        self.check_vars(divisor)?;
        let (d_lead_exp, d_lead_coeff) = divisor
            .coeffs
            .iter()
            .next_back()
            .map(|(e, c)| (*e, *c))
            .expect("divisor must be nonzero");
        let mut rem = self.clone();
        let mut quotient = LaurentCharacter::zero(self.num_vars);
        // a genuine quotient has support inside the exponent bounding box of
        // the dividend, so that area (plus slack) caps the step count
        let cap = {
            let (mut lo, mut hi) = ([i64::MAX; 2], [i64::MIN; 2]);
            for (e, _) in self.terms() {
                for i in 0..2 {
                    lo[i] = lo[i].min(e[i]);
                    hi[i] = hi[i].max(e[i]);
                }
            }
            if self.is_zero() {
                8
            } else {
                ((hi[0] - lo[0] + 1) * (hi[1] - lo[1] + 1)) as usize + 8
            }
        };
        for _ in 0..cap {
            let Some((e, c)) = rem.coeffs.iter().next_back().map(|(e, c)| (*e, *c)) else {
                return Ok(quotient); // remainder exhausted
            };
            if c % d_lead_coeff != 0 {
                break;
            }
            let q_exp = [e[0] - d_lead_exp[0], e[1] - d_lead_exp[1]];
            let q_coeff = c / d_lead_coeff;
            quotient.add_term(q_exp, q_coeff);
            let step = LaurentCharacter::monomial(self.num_vars, q_exp, q_coeff);
            rem = rem.sub(&step.mul(divisor)?)?;
        }
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(RepError::InexactAlternantDivision)
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), RepError> {
        if self.num_vars != other.num_vars {
            return Err(RepError::VariableMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_is_convolution() {
        let a = LaurentCharacter::monomial(1, [1, 0], 1);
        let ainv = LaurentCharacter::monomial(1, [-1, 0], 1);
        let c = a.add(&ainv).unwrap();
        let sq = c.mul(&c).unwrap();
        assert_eq!(sq.coefficient([2, 0]), 1);
        assert_eq!(sq.coefficient([0, 0]), 2);
        assert_eq!(sq.coefficient([-2, 0]), 1);
        assert_eq!(sq.dimension(), 4);
    }

    #[test]
    fn adams_scales_exponents() {
        let c = LaurentCharacter::monomial(2, [1, -2], 3);
        let a = c.adams(3);
        assert_eq!(a.coefficient([3, -6]), 3);
    }

    #[test]
    fn divide_exact_round_trips() {
        let d = {
            let mut b = LaurentCharacter::zero(2);
            b.add_term([1, 0], 1);
            b.add_term([-1, 0], -1);
            b.add_term([0, 1], -1);
            b.add_term([0, -1], 1);
            b
        };
        let f = {
            let mut f = LaurentCharacter::zero(2);
            f.add_term([2, 1], 1);
            f.add_term([0, 1], 1);
            f.add_term([-2, 1], 1);
            f.add_term([1, -1], 2);
            f.add_term([-1, -1], 2);
            f
        };
        let prod = f.mul(&d).unwrap();
        assert_eq!(prod.divide_exact(&d).unwrap(), f);
        // inexact division is reported
        let not_divisible = LaurentCharacter::monomial(2, [1, 0], 1);
        assert_eq!(
            not_divisible.divide_exact(&d),
            Err(RepError::InexactAlternantDivision)
        );
    }

    #[test]
    fn weyl_symmetry_detection() {
        let sym = LaurentCharacter::monomial(1, [2, 0], 1)
            .add(&LaurentCharacter::monomial(1, [-2, 0], 1))
            .unwrap();
        assert!(sym.is_weyl_symmetric());
        let asym = LaurentCharacter::monomial(1, [2, 0], 1);
        assert!(!asym.is_weyl_symmetric());
    }
}
