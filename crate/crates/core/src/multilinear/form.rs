//! Alternating forms with exact rational coefficients on increasing basis
//! monomials, plus wedge, Hodge star, interior product and the slotwise
//! derivation action of endomorphisms.

use std::collections::BTreeMap;

use num::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{Mat, MultilinearError};
use crate::scalar::{format_scalar, Scalar};

/// Alternating k-form on ℝⁿ. Coefficients are stored on strictly increasing
/// 1-based index tuples; absent tuples are zero. Only the zero form may carry
/// a degree larger than the fibre dimension (it arises as a degenerate wedge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltForm {
    fibre_dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, Scalar>,
}

/// All strictly increasing k-tuples from 1..=n, in lexicographic order.
pub(crate) fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, k: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=(n as u8) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Sorts an index tuple, returning the permutation sign, or `None` when an
/// index repeats.
fn sort_with_sign(idx: &[u8]) -> Option<(Vec<u8>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

impl AltForm {
    pub fn zero(fibre_dim: usize, degree: usize) -> Self {
        AltForm {
            fibre_dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Single basis monomial `c · e_{i₁}∧…∧e_{i_k}`; indices must be strictly
    /// increasing and within the fibre.
    pub fn monomial(fibre_dim: usize, indices: &[u8], c: Scalar) -> Self {
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        assert!(indices.iter().all(|&i| 1 <= i && i as usize <= fibre_dim));
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(indices.to_vec(), c);
        }
        AltForm {
            fibre_dim,
            degree: indices.len(),
            coeffs,
        }
    }

    /// Constant form of degree 0.
    pub fn constant(fibre_dim: usize, c: Scalar) -> Self {
        AltForm::monomial(fibre_dim, &[], c)
    }

    /// 1-form dual to a coordinate vector.
    pub fn from_vector(v: &[Scalar]) -> Self {
        let n = v.len();
        let mut f = AltForm::zero(n, 1);
        for (i, c) in v.iter().enumerate() {
            f.add_term(vec![(i + 1) as u8], c.clone());
        }
        f
    }

    /// Coordinates of a 1-form.
    pub fn to_vector(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1);
        (0..self.fibre_dim)
            .map(|i| self.coefficient(&[(i + 1) as u8]))
            .collect()
    }

    /// 2-form from a skew matrix `m[i][j] = ω(eᵢ₊₁, eⱼ₊₁)`.
    pub fn from_skew_mat(m: &Mat) -> Self {
        assert!(m.is_skew());
        let n = m.rows();
        let mut f = AltForm::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                f.add_term(vec![(i + 1) as u8, (j + 1) as u8], m.get(i, j).clone());
            }
        }
        f
    }

    /// Skew matrix of a 2-form.
    pub fn to_skew_mat(&self) -> Mat {
        assert_eq!(self.degree, 2);
        Mat::from_fn(self.fibre_dim, self.fibre_dim, |r, c| {
            self.eval(&[(r + 1) as u8, (c + 1) as u8])
        })
    }

    /// The endomorphism of a 2-form under the fixed `e∧f` convention:
    /// `g(ω_endo(v), w) = ω(v, w)`.
    pub fn to_endo(&self) -> Mat {
        assert_eq!(self.degree, 2);
        Mat::from_fn(self.fibre_dim, self.fibre_dim, |r, c| {
            self.eval(&[(c + 1) as u8, (r + 1) as u8])
        })
    }

    pub fn fibre_dim(&self) -> usize {
        self.fibre_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient on a strictly increasing tuple.
    pub fn coefficient(&self, idx: &[u8]) -> Scalar {
        self.coeffs.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Evaluates on an arbitrary index tuple (sorting with sign; repeated
    /// indices give zero).
    pub fn eval(&self, idx: &[u8]) -> Scalar {
        match sort_with_sign(idx) {
            None => Scalar::zero(),
            Some((key, sign)) => {
                let c = self.coefficient(&key);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    fn add_term(&mut self, key: Vec<u8>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &AltForm) -> AltForm {
        assert_eq!(self.fibre_dim, other.fibre_dim);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AltForm) -> AltForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AltForm {
        self.scale(&-num::one::<Scalar>())
    }

    pub fn scale(&self, s: &Scalar) -> AltForm {
        let mut out = AltForm::zero(self.fibre_dim, self.degree);
        if s.is_zero() {
            return out;
        }
        for (k, c) in self.terms() {
            out.coeffs.insert(k.clone(), c * s);
        }
        out
    }

    /// Wedge product. Bilinear, associative, graded-commutative. A degree
    /// overflow (k + l > n) yields the zero form of the formal degree.
    pub fn wedge(&self, other: &AltForm) -> Result<AltForm, MultilinearError> {
        if self.fibre_dim != other.fibre_dim {
            return Err(MultilinearError::DimensionMismatch {
                left: self.fibre_dim,
                right: other.fibre_dim,
            });
        }
        let degree = self.degree + other.degree;
        let mut out = AltForm::zero(self.fibre_dim, degree);
        if degree > self.fibre_dim {
            return Ok(out);
        }
        for (ka, ca) in self.terms() {
            for (kb, cb) in other.terms() {
                let mut joined = Vec::with_capacity(degree);
                joined.extend_from_slice(ka);
                joined.extend_from_slice(kb);
                if let Some((key, sign)) = sort_with_sign(&joined) {
                    let c = ca * cb;
                    out.add_term(key, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Hodge star for the orientation `e₁∧…∧e_n = +1` and orthonormal
    /// increasing monomials.
    pub fn hodge_star(&self) -> AltForm {
        assert!(self.degree <= self.fibre_dim);
        let n = self.fibre_dim;
        let mut out = AltForm::zero(n, n - self.degree);
        for (k, c) in self.terms() {
            let complement: Vec<u8> = (1..=(n as u8)).filter(|i| !k.contains(i)).collect();
            // sign of the permutation (k, complement) of (1..n)
            let mut joined = k.clone();
            joined.extend_from_slice(&complement);
            let (_, sign) = sort_with_sign(&joined).expect("complement is disjoint");
            out.add_term(complement, if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Interior product `X ⌟ ω`, an antiderivation of degree −1.
    pub fn interior(&self, x: &[Scalar]) -> AltForm {
        assert_eq!(x.len(), self.fibre_dim);
        assert!(self.degree >= 1);
        let mut out = AltForm::zero(self.fibre_dim, self.degree - 1);
        for (k, c) in self.terms() {
            for (pos, &i) in k.iter().enumerate() {
                let xi = &x[(i - 1) as usize];
                if xi.is_zero() {
                    continue;
                }
                let mut key = k.clone();
                key.remove(pos);
                let v = c * xi;
                out.add_term(key, if pos % 2 == 1 { -v } else { v });
            }
        }
        out
    }

    /// Inner product for which the increasing basis monomials are
    /// orthonormal.
    pub fn inner(&self, other: &AltForm) -> Scalar {
        assert_eq!(self.fibre_dim, other.fibre_dim);
        assert_eq!(self.degree, other.degree);
        let mut acc = Scalar::zero();
        for (k, c) in self.terms() {
            let oc = other.coefficient(k);
            if !oc.is_zero() {
                acc += c * &oc;
            }
        }
        acc
    }

    /// Coordinates with respect to the lexicographic monomial basis.
    pub fn coords(&self, basis: &[Vec<u8>]) -> Vec<Scalar> {
        basis.iter().map(|k| self.coefficient(k)).collect()
    }

    /// Lexicographic monomial basis of Λᵏℝⁿ as index tuples.
    pub fn basis_tuples(n: usize, k: usize) -> Vec<Vec<u8>> {
        increasing_tuples(n, k)
    }
}

/// Forms serialize as objects mapping index-tuple strings to scalar strings:
/// `{"1,2,3": "1", "1,4,5": "-1/2"}`.
impl Serialize for AltForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (key, c) in &self.coeffs {
            let key: Vec<String> = key.iter().map(|i| i.to_string()).collect();
            map.serialize_entry(&key.join(","), &format_scalar(c))?;
        }
        map.end()
    }
}

/// Slotwise derivation action of an endomorphism on a k-form:
/// `(A_*ω)(X₁,…,X_k) = Σⱼ ω(X₁,…,AXⱼ,…,X_k)`.
///
/// On 2-forms (viewed as skew 2-tensors) this agrees with
/// [`super::endo_act_tensor2`].
pub fn endo_act_form(a: &Mat, w: &AltForm) -> AltForm {
    let n = w.fibre_dim();
    let k = w.degree();
    assert_eq!(a.rows(), n);
    assert_eq!(a.cols(), n);
    let mut out = AltForm::zero(n, k);
    for tuple in increasing_tuples(n, k) {
        let mut acc = Scalar::zero();
        let mut slot = tuple.clone();
        for m in 0..k {
            let orig = tuple[m];
            for b in 1..=(n as u8) {
                let a_entry = a.get((b - 1) as usize, (orig - 1) as usize);
                if a_entry.is_zero() {
                    continue;
                }
                slot[m] = b;
                let val = w.eval(&slot);
                if !val.is_zero() {
                    acc += &val * a_entry;
                }
            }
            slot[m] = orig;
        }
        out.add_term(tuple, acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::{basis_vector, wedge2_as_endo};
    use crate::sampling;
    use crate::scalar::{int, rat};

    fn e(n: usize, i: u8) -> AltForm {
        AltForm::monomial(n, &[i], int(1))
    }

    #[test]
    fn wedge_basis_cases() {
        let n = 4;
        let w = e(n, 1).wedge(&e(n, 2)).unwrap();
        assert_eq!(w.coefficient(&[1, 2]), int(1));
        assert_eq!(w.len(), 1);
        assert!(e(n, 1).wedge(&e(n, 1)).unwrap().is_zero());
    }

    #[test]
    fn even_degree_forms_commute() {
        let n = 4;
        let a = e(n, 1).wedge(&e(n, 2)).unwrap();
        let b = e(n, 3).wedge(&e(n, 4)).unwrap();
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
    }

    #[test]
    fn wedge_dimension_mismatch_is_an_error() {
        let a = e(3, 1);
        let b = e(4, 1);
        assert_eq!(
            a.wedge(&b),
            Err(MultilinearError::DimensionMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn wedge_degree_overflow_is_zero() {
        let a = AltForm::monomial(3, &[1, 2], int(1));
        let b = AltForm::monomial(3, &[2, 3], int(1));
        let w = a.wedge(&b).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn graded_commutativity_on_random_forms() {
        let mut rng = sampling::rng(3);
        for (ka, kb) in [(1, 1), (1, 2), (2, 3), (2, 2)] {
            let a = sampling::random_form(&mut rng, 5, ka);
            let b = sampling::random_form(&mut rng, 5, kb);
            let lhs = a.wedge(&b).unwrap();
            let sign = if (ka * kb) % 2 == 1 { int(-1) } else { int(1) };
            let rhs = b.wedge(&a).unwrap().scale(&sign);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hodge_star_basis_blocks_in_dimension_7() {
        let phi = AltForm::monomial(7, &[1, 2, 3], int(1));
        let star = phi.hodge_star();
        assert_eq!(star.coefficient(&[4, 5, 6, 7]), int(1));
        assert_eq!(star.len(), 1);

        let one = AltForm::constant(7, int(1));
        let vol = one.hodge_star();
        assert_eq!(vol.coefficient(&[1, 2, 3, 4, 5, 6, 7]), int(1));
    }

    #[test]
    fn hodge_star_involution_sign() {
        // star∘star = (−1)^{k(n−k)} id; on 3-forms in ℝ⁷ the sign is +1.
        let mut rng = sampling::rng(9);
        let w = sampling::random_form(&mut rng, 7, 3);
        assert_eq!(w.hodge_star().hodge_star(), w);
        // degree 1 in ℝ⁴ has sign (−1)^{1·3} = −1
        let v = sampling::random_form(&mut rng, 4, 1);
        assert_eq!(v.hodge_star().hodge_star(), v.neg());
    }

    #[test]
    fn interior_basis_cases() {
        let w = AltForm::monomial(4, &[1, 2], int(1));
        let e1 = basis_vector(4, 0);
        let e3 = basis_vector(4, 2);
        assert_eq!(w.interior(&e1), e(4, 2));
        assert!(w.interior(&e3).is_zero());
        // antiderivation squares to zero
        let mut rng = sampling::rng(4);
        let x = sampling::random_vector(&mut rng, 4);
        let w3 = sampling::random_form(&mut rng, 4, 3);
        assert!(w3.interior(&x).interior(&x).is_zero());
    }

    // Independent dense-evaluation oracle: a form is the function it induces
    // on index tuples, wedge is the alternating sum over shuffles, interior
    // plugs the vector into the first slot.
    mod oracle {
        use super::*;

        pub fn eval_wedge(a: &AltForm, b: &AltForm, idx: &[u8]) -> Scalar {
            // (a∧b)(v_1..v_{k+l}) = Σ_{shuffles} sign · a(v_I) b(v_J)
            let k = a.degree();
            let l = b.degree();
            assert_eq!(idx.len(), k + l);
            let mut acc = Scalar::zero();
            for subset in increasing_tuples(k + l, k) {
                let positions: Vec<usize> = subset.iter().map(|&p| (p - 1) as usize).collect();
                let rest: Vec<usize> = (0..k + l).filter(|p| !positions.contains(p)).collect();
                let mut sign = 1i32;
                // permutation (positions, rest) of 0..k+l
                let seq: Vec<usize> = positions.iter().chain(rest.iter()).copied().collect();
                for i in 0..seq.len() {
                    for j in i + 1..seq.len() {
                        if seq[i] > seq[j] {
                            sign = -sign;
                        }
                    }
                }
                let ai: Vec<u8> = positions.iter().map(|&p| idx[p]).collect();
                let bi: Vec<u8> = rest.iter().map(|&p| idx[p]).collect();
                let term = a.eval(&ai) * b.eval(&bi);
                acc += if sign < 0 { -term } else { term };
            }
            acc
        }
    }

    #[test]
    fn wedge_matches_dense_shuffle_oracle() {
        let mut rng = sampling::rng(21);
        for (ka, kb) in [(1, 1), (1, 2), (2, 2)] {
            let a = sampling::random_form(&mut rng, 5, ka);
            let b = sampling::random_form(&mut rng, 5, kb);
            let w = a.wedge(&b).unwrap();
            for idx in increasing_tuples(5, ka + kb) {
                assert_eq!(w.eval(&idx), oracle::eval_wedge(&a, &b, &idx));
            }
        }
    }

    #[test]
    fn interior_leibniz_rule_against_expansion() {
        // X ⌟ (ξ∧a) = g(X,ξ)a − ξ∧(X⌟a) for a 1-form ξ, over a random sample.
        let mut rng = sampling::rng(31);
        for _ in 0..10 {
            let n = 5;
            let x = sampling::random_vector(&mut rng, n);
            let xi_vec = sampling::random_vector(&mut rng, n);
            let xi = AltForm::from_vector(&xi_vec);
            let a = sampling::random_form(&mut rng, n, 2);
            let lhs = xi.wedge(&a).unwrap().interior(&x);
            let g = crate::multilinear::dot(&x, &xi_vec);
            let rhs = a.scale(&g).sub(&xi.wedge(&a.interior(&x)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn clifford_compatible_anticommutation() {
        // X⌟(X♭∧a) + X♭∧(X⌟a) = g(X,X)·a
        let mut rng = sampling::rng(37);
        for degree in [1, 2, 3] {
            let n = 5;
            let x = sampling::random_vector(&mut rng, n);
            let xf = AltForm::from_vector(&x);
            let a = sampling::random_form(&mut rng, n, degree);
            let lhs = xf
                .wedge(&a)
                .unwrap()
                .interior(&x)
                .add(&xf.wedge(&a.interior(&x)).unwrap());
            let g = crate::multilinear::dot(&x, &x);
            assert_eq!(lhs, a.scale(&g));
        }
    }

    #[test]
    fn endo_act_form_agrees_with_tensor_action_on_2_forms() {
        let mut rng = sampling::rng(41);
        let n = 5;
        let a = sampling::skew_matrix(&mut rng, n);
        let w = sampling::random_form(&mut rng, n, 2);
        let via_form = endo_act_form(&a, &w);
        let via_tensor = crate::multilinear::endo_act_tensor2(&a, &w.to_skew_mat());
        assert_eq!(via_form.to_skew_mat(), via_tensor);
    }

    #[test]
    fn two_form_endo_convention_round_trip() {
        // e₁∧e₂ as a form turns into exactly wedge2_as_endo(e₁,e₂).
        let n = 4;
        let w = AltForm::monomial(n, &[1, 2], int(1));
        let endo = w.to_endo();
        assert_eq!(endo, wedge2_as_endo(&basis_vector(n, 0), &basis_vector(n, 1)));
        // and back
        let mut rng = sampling::rng(43);
        let v = sampling::random_form(&mut rng, n, 2);
        assert_eq!(AltForm::from_skew_mat(&v.to_skew_mat()), v);
        assert_eq!(v.to_endo().transpose(), v.to_skew_mat());
    }

    #[test]
    fn forms_serialize_as_index_tuple_maps() {
        let w = AltForm::monomial(7, &[1, 2, 3], int(1)).add(&AltForm::monomial(
            7,
            &[1, 4, 5],
            rat(-1, 2),
        ));
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"1,2,3":"1","1,4,5":"-1/2"}"#);
    }

    #[test]
    fn inner_product_is_orthonormal_on_monomials() {
        let a = AltForm::monomial(7, &[1, 2, 3], int(1));
        let b = AltForm::monomial(7, &[1, 2, 4], int(1));
        assert_eq!(a.inner(&a), int(1));
        assert_eq!(a.inner(&b), int(0));
        let c = a.scale(&rat(3, 2)).add(&b.scale(&rat(-1, 2)));
        assert_eq!(c.inner(&c), rat(10, 4));
    }
}
