//! Pointwise model of a Sasaki structure on ℝ^{2n+1} and the algebraic
//! curvature-difference identities on Φ-invariant horizontal tensors.
//!
//! The model fibre uses the standard complex structure on the horizontal
//! part: Φ(e_{2i−1}) = e_{2i}, Φ(e_{2i}) = −e_{2i−1}, Φ(ξ) = 0 with
//! ξ = e_{2n+1}, and dη(X,Y) = 2g(X, ΦY). "Basic" is modelled pointwise by
//! horizontality (ξ-contraction zero); the Lie-derivative half of the
//! condition has no pointwise meaning on a single fibre.

use serde::Serialize;

use num::Zero;
use thiserror::Error;

use crate::multilinear::{
    basis_vector, endo_act_tensor2, wedge2_as_endo, AltForm, Mat,
};
use crate::scalar::{format_scalar, int, Scalar};

#[derive(Debug, Error, PartialEq)]
pub enum SasakiError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

/// Single fibre of the standard Sasaki model on ℝ^{2n+1}.
#[derive(Debug, Clone)]
pub struct SasakiFibre {
    n: usize,
    dim: usize,
    phi: Mat,
    xi: Vec<Scalar>,
    eta: Vec<Scalar>,
    d_eta: AltForm,
}

/// Builds the standard model fibre for n ≥ 1.
pub fn build_fibre(n: usize) -> SasakiFibre {
    assert!(n >= 1);
    let dim = 2 * n + 1;
    let mut phi = Mat::zeros(dim, dim);
    for i in 0..n {
        // Φ(e_{2i+1}) = e_{2i+2}, Φ(e_{2i+2}) = −e_{2i+1} (1-based pairs)
        phi.set(2 * i + 1, 2 * i, int(1));
        phi.set(2 * i, 2 * i + 1, int(-1));
    }
    let xi = basis_vector(dim, dim - 1);
    let eta = xi.clone();
    // dη(X,Y) = 2 g(X, ΦY)
    let mut d_eta = AltForm::zero(dim, 2);
    for a in 0..dim {
        for b in (a + 1)..dim {
            let v = int(2) * phi.get(a, b).clone();
            if !v.is_zero() {
                d_eta = d_eta.add(&AltForm::monomial(dim, &[(a + 1) as u8, (b + 1) as u8], v));
            }
        }
    }
    SasakiFibre {
        n,
        dim,
        phi,
        xi,
        eta,
        d_eta,
    }
}

impl SasakiFibre {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn xi(&self) -> &[Scalar] {
        &self.xi
    }

    pub fn eta(&self) -> &[Scalar] {
        &self.eta
    }

    pub fn d_eta(&self) -> &AltForm {
        &self.d_eta
    }

    /// Checks the structure equations of the fibre.
    pub fn validate(&self) -> bool {
        let dim = self.dim;
        let phi2 = &self.phi * &self.phi;
        // Φ² = −id + η⊗ξ
        let mut expected = Mat::identity(dim).scale(&int(-1));
        expected.set(dim - 1, dim - 1, int(0));
        if phi2 != expected {
            return false;
        }
        // Φξ = 0, η(ξ) = 1
        if !self.phi.mul_vec(&self.xi).iter().all(Scalar::is_zero) {
            return false;
        }
        if crate::multilinear::dot(&self.eta, &self.xi) != int(1) {
            return false;
        }
        // g(ΦX, ΦY) = g(X,Y) − η(X)η(Y)
        let gram = &self.phi.transpose() * &self.phi;
        let mut metric_minus = Mat::identity(dim);
        metric_minus.set(dim - 1, dim - 1, int(0));
        if gram != metric_minus {
            return false;
        }
        // dη(X,Y) = 2g(X,ΦY) on all basis pairs
        for a in 0..dim {
            for b in 0..dim {
                let lhs = self.d_eta.eval(&[(a + 1) as u8, (b + 1) as u8]);
                let rhs = int(2) * self.phi.get(a, b).clone();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Horizontal projection X − η(X)ξ.
    pub fn horizontal(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = x.to_vec();
        out[self.dim - 1] = Scalar::zero();
        out
    }
}

/// 2-tensor on the fibre together with its derived classification flags.
#[derive(Debug, Clone, Serialize)]
pub struct TensorFlags {
    pub is_symmetric: bool,
    pub is_skew: bool,
    pub is_phi_invariant: bool,
    pub is_horizontal: bool,
    pub is_tracefree: bool,
    pub is_primitive: bool,
}

#[derive(Debug, Clone)]
pub struct BasicTensor2 {
    tensor: Mat,
    flags: TensorFlags,
}

impl BasicTensor2 {
    /// Classifies a 2-tensor with respect to the fibre structure.
    pub fn analyze(tensor: Mat, fibre: &SasakiFibre) -> Self {
        let dim = fibre.dim();
        assert_eq!(tensor.rows(), dim);
        let is_symmetric = tensor.is_symmetric();
        let is_skew = tensor.is_skew();
        // horizontal: ξ in either slot gives zero
        let is_horizontal = (0..dim).all(|i| {
            tensor.get(i, dim - 1).is_zero() && tensor.get(dim - 1, i).is_zero()
        });
        // Φ-invariant: h(ΦX, ΦY) = h(X,Y) on horizontal vectors
        let phi_t_h_phi = &(&fibre.phi().transpose() * &tensor) * fibre.phi();
        let is_phi_invariant = (0..dim - 1).all(|a| {
            (0..dim - 1).all(|b| phi_t_h_phi.get(a, b) == tensor.get(a, b))
        });
        let is_tracefree = tensor.trace().is_zero();
        let is_primitive = if is_skew {
            AltForm::from_skew_mat(&tensor).inner(fibre.d_eta()).is_zero()
        } else {
            false
        };
        BasicTensor2 {
            tensor,
            flags: TensorFlags {
                is_symmetric,
                is_skew,
                is_phi_invariant,
                is_horizontal,
                is_tracefree,
                is_primitive,
            },
        }
    }

    pub fn tensor(&self) -> &Mat {
        &self.tensor
    }

    pub fn flags(&self) -> &TensorFlags {
        &self.flags
    }
}

/// A_X = −η(X)Φ + ξ∧Φ(X), the difference tensor of the canonical connection.
pub fn a_tensor(x: &[Scalar], fibre: &SasakiFibre) -> Mat {
    let eta_x = crate::multilinear::dot(fibre.eta(), x);
    let phi_x = fibre.phi().mul_vec(x);
    let first = fibre.phi().scale(&-eta_x);
    let second = wedge2_as_endo(fibre.xi(), &phi_x);
    &first + &second
}

fn require(cond: bool, what: &str) -> Result<(), SasakiError> {
    if cond {
        Ok(())
    } else {
        Err(SasakiError::Precondition(what.to_string()))
    }
}

/// Evaluates the curvature-endomorphism difference
/// `q(R̄) − q(R) = −½ Σᵢⱼ (eᵢ∧eⱼ)_* ∘ (Φeᵢ∧Φeⱼ)_* + Σⱼ (ξ∧eⱼ)_* ∘ (ξ∧eⱼ)_*`
/// on a Φ-invariant horizontal tensor (trace-free when symmetric), summing
/// over the full orthonormal basis including ξ.
pub fn q_diff(h: &BasicTensor2, fibre: &SasakiFibre) -> Result<Mat, SasakiError> {
    let f = h.flags();
    require(f.is_phi_invariant, "tensor must be Φ-invariant")?;
    require(f.is_horizontal, "tensor must be horizontal")?;
    if f.is_symmetric {
        require(f.is_tracefree, "symmetric tensor must be trace-free")?;
    }
    let dim = fibre.dim();
    let mut acc = Mat::zeros(dim, dim);
    for i in 0..dim {
        let ei = basis_vector(dim, i);
        let phi_ei = fibre.phi().mul_vec(&ei);
        for j in 0..dim {
            let ej = basis_vector(dim, j);
            let phi_ej = fibre.phi().mul_vec(&ej);
            let a = wedge2_as_endo(&ei, &ej);
            let b = wedge2_as_endo(&phi_ei, &phi_ej);
            if b.is_zero() {
                continue;
            }
            acc = &acc + &endo_act_tensor2(&a, &endo_act_tensor2(&b, h.tensor()));
        }
    }
    let mut out = acc.scale(&crate::scalar::rat(-1, 2));
    for j in 0..dim {
        let a = wedge2_as_endo(fibre.xi(), &basis_vector(dim, j));
        if a.is_zero() {
            continue;
        }
        out = &out + &endo_act_tensor2(&a, &endo_act_tensor2(&a, h.tensor()));
    }
    Ok(out)
}

/// The algebraic summand Σᵢ (A_{eᵢ})_*(A_{eᵢ})_* of the rough-Laplacian
/// comparison, over the full basis. Equals −2·id on trace-free Φ-invariant
/// horizontal symmetric tensors.
pub fn rough_diff_algebraic(h: &BasicTensor2, fibre: &SasakiFibre) -> Result<Mat, SasakiError> {
    let f = h.flags();
    require(f.is_symmetric, "tensor must be symmetric")?;
    require(f.is_tracefree, "tensor must be trace-free")?;
    require(f.is_phi_invariant, "tensor must be Φ-invariant")?;
    require(f.is_horizontal, "tensor must be horizontal")?;
    let dim = fibre.dim();
    let mut acc = Mat::zeros(dim, dim);
    for i in 0..dim {
        let a = a_tensor(&basis_vector(dim, i), fibre);
        acc = &acc + &endo_act_tensor2(&a, &endo_act_tensor2(&a, h.tensor()));
    }
    Ok(acc)
}

/// h_α(X,Y) = α(X, ΦY) for a Φ-invariant horizontal 2-form α. The result is
/// symmetric and horizontal; it is trace-free exactly when α is primitive.
pub fn h_from_alpha(alpha: &BasicTensor2, fibre: &SasakiFibre) -> Result<BasicTensor2, SasakiError> {
    let f = alpha.flags();
    require(f.is_skew, "α must be a 2-form")?;
    require(f.is_phi_invariant, "α must be Φ-invariant")?;
    require(f.is_horizontal, "α must be horizontal")?;
    let h = alpha.tensor() * fibre.phi();
    if let Some((row, col)) = h.symmetry_witness() {
        return Err(SasakiError::Construction(format!(
            "h_α is not symmetric at ({row},{col}); α was not Φ-invariant"
        )));
    }
    Ok(BasicTensor2::analyze(h, fibre))
}

/// Ratio trace(h_α) / ⟨α, dη⟩ on a non-primitive test form (α = dη), fixing
/// the inner-product normalisation of the trace identity. Reported rather
/// than assumed.
pub fn trace_pairing_constant(fibre: &SasakiFibre) -> Scalar {
    let alpha = BasicTensor2::analyze(fibre.d_eta().to_skew_mat(), fibre);
    let h = h_from_alpha(&alpha, fibre).expect("dη is Φ-invariant and horizontal");
    let tr = h.tensor().trace();
    let pairing = AltForm::from_skew_mat(alpha.tensor()).inner(fibre.d_eta());
    tr / pairing
}

/// Spanning set of the primitive Φ-invariant horizontal 2-forms, in
/// lexicographic order: consecutive differences of the diagonal-pair forms
/// plus the cross-pair forms. Dimension n² − 1.
pub fn phi_invariant_primitive_two_forms(fibre: &SasakiFibre) -> Vec<AltForm> {
    let n = fibre.n();
    let dim = fibre.dim();
    let pair = |i: usize| ((2 * i + 1) as u8, (2 * i + 2) as u8);
    let mut out = Vec::new();
    for i in 0..n - 1 {
        let (a, b) = pair(i);
        let (c, d) = pair(i + 1);
        out.push(
            AltForm::monomial(dim, &[a, b], int(1)).sub(&AltForm::monomial(dim, &[c, d], int(1))),
        );
    }
    for w in phi_invariant_two_forms(fibre) {
        if w.inner(fibre.d_eta()).is_zero() && !out.contains(&w) {
            let diag = (0..n).any(|i| {
                let (a, b) = pair(i);
                w.len() == 1 && !w.coefficient(&[a, b]).is_zero()
            });
            if !diag {
                out.push(w);
            }
        }
    }
    out
}

/// Spanning set of the Φ-invariant horizontal 2-forms ((1,1)-forms), in
/// lexicographic order. Dimension n².
pub fn phi_invariant_two_forms(fibre: &SasakiFibre) -> Vec<AltForm> {
    let n = fibre.n();
    let dim = fibre.dim();
    let mut out = Vec::new();
    let pair = |i: usize| ((2 * i + 1) as u8, (2 * i + 2) as u8);
    for i in 0..n {
        let (a, b) = pair(i);
        out.push(AltForm::monomial(dim, &[a, b], int(1)));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (a1, a2) = pair(i);
            let (b1, b2) = pair(j);
            // e_{2i-1}∧e_{2j-1} + e_{2i}∧e_{2j}
            out.push(
                AltForm::monomial(dim, &[a1, b1], int(1))
                    .add(&AltForm::monomial(dim, &[a2, b2], int(1))),
            );
            // e_{2i-1}∧e_{2j} − e_{2i}∧e_{2j-1}
            out.push(
                AltForm::monomial(dim, &[a1, b2], int(1))
                    .sub(&AltForm::monomial(dim, &[a2, b1], int(1))),
            );
        }
    }
    out
}

/// Spanning set of the Φ-invariant horizontal trace-free symmetric
/// 2-tensors, in lexicographic order. Dimension n² − 1.
pub fn phi_invariant_tracefree_sym(fibre: &SasakiFibre) -> Vec<Mat> {
    let n = fibre.n();
    let dim = fibre.dim();
    let mut out = Vec::new();
    // consecutive differences of the hermitian diagonal blocks
    for i in 0..n - 1 {
        let mut m = Mat::zeros(dim, dim);
        m.set(2 * i, 2 * i, int(1));
        m.set(2 * i + 1, 2 * i + 1, int(1));
        m.set(2 * i + 2, 2 * i + 2, int(-1));
        m.set(2 * i + 3, 2 * i + 3, int(-1));
        out.push(m);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (a1, a2) = (2 * i, 2 * i + 1);
            let (b1, b2) = (2 * j, 2 * j + 1);
            let sym = |m: &mut Mat, r: usize, c: usize, v: i64| {
                let cur1 = m.get(r, c) + &int(v);
                m.set(r, c, cur1);
                let cur2 = m.get(c, r) + &int(v);
                m.set(c, r, cur2);
            };
            // e_{2i-1}⊙e_{2j-1} + e_{2i}⊙e_{2j}
            let mut m = Mat::zeros(dim, dim);
            sym(&mut m, a1, b1, 1);
            sym(&mut m, a2, b2, 1);
            out.push(m);
            // e_{2i-1}⊙e_{2j} − e_{2i}⊙e_{2j-1}
            let mut m = Mat::zeros(dim, dim);
            sym(&mut m, a1, b2, 1);
            sym(&mut m, a2, b1, -1);
            out.push(m);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SasakiCheck {
    pub lemma: String,
    pub class: String,
    pub dimension_n: usize,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SasakiReport {
    pub n: usize,
    pub checks: Vec<SasakiCheck>,
    pub trace_pairing_constant: String,
    pub pass: bool,
}

fn scalar_multiple_of(out: &Mat, h: &Mat) -> Option<Scalar> {
    for r in 0..h.rows() {
        for c in 0..h.cols() {
            if !h.get(r, c).is_zero() {
                let l = out.get(r, c) / h.get(r, c);
                return if out == &h.scale(&l) { Some(l) } else { None };
            }
        }
    }
    None
}

/// Runs every algebraic check of the fibre model for a given n, over exactly
/// enumerated spanning sets.
pub fn verify_fibre(n: usize) -> SasakiReport {
    let fibre = build_fibre(n);
    let mut checks = Vec::new();
    let mut push = |lemma: &str, class: &str, expected: String, got: String| {
        let pass = expected == got;
        checks.push(SasakiCheck {
            lemma: lemma.into(),
            class: class.into(),
            dimension_n: n,
            expected,
            got,
            pass,
        });
    };

    push(
        "sasaki_fibre_axioms",
        "structure tensors",
        "valid".into(),
        if fibre.validate() { "valid" } else { "invalid" }.into(),
    );

    // curvature difference: +2 on primitive Φ-invariant horizontal 2-forms
    let primitive_forms = phi_invariant_primitive_two_forms(&fibre);
    let forms_scalar = {
        let results = crate::exec::map_collect(&primitive_forms, |w| {
            let h = BasicTensor2::analyze(w.to_skew_mat(), &fibre);
            q_diff(&h, &fibre).ok().and_then(|out| {
                scalar_multiple_of(&out, h.tensor()).map(|l| format_scalar(&l))
            })
        });
        consolidate(results)
    };
    push(
        "curvature_difference_two_forms",
        "primitive phi-invariant horizontal 2-forms",
        "2".into(),
        forms_scalar,
    );

    // on the full (1,1) space the exact identity carries the primitivity
    // defect: q_diff(α) = 2α − ⟨α,dη⟩·dη
    let two_forms = phi_invariant_two_forms(&fibre);
    let defect_ok = {
        let results = crate::exec::map_collect(&two_forms, |w| {
            let h = BasicTensor2::analyze(w.to_skew_mat(), &fibre);
            let out = q_diff(&h, &fibre).ok()?;
            let pairing = w.inner(fibre.d_eta());
            let expected = w.scale(&int(2)).sub(&fibre.d_eta().scale(&pairing));
            Some(AltForm::from_skew_mat(&out) == expected)
        });
        results.into_iter().all(|r| r == Some(true))
    };
    push(
        "curvature_difference_two_form_defect",
        "all phi-invariant horizontal 2-forms",
        "q_diff(a) = 2a - <a,d_eta> d_eta".into(),
        if defect_ok {
            "q_diff(a) = 2a - <a,d_eta> d_eta"
        } else {
            "mismatch"
        }
        .into(),
    );

    // curvature difference: −2 on trace-free Φ-invariant horizontal symmetric tensors
    let sym_set = phi_invariant_tracefree_sym(&fibre);
    let sym_scalar = {
        let results = crate::exec::map_collect(&sym_set, |m| {
            let h = BasicTensor2::analyze(m.clone(), &fibre);
            q_diff(&h, &fibre).ok().and_then(|out| {
                scalar_multiple_of(&out, h.tensor()).map(|l| format_scalar(&l))
            })
        });
        consolidate(results)
    };
    push(
        "curvature_difference_sym_traceless",
        "phi-invariant horizontal trace-free symmetric",
        "-2".into(),
        sym_scalar,
    );

    // rough Laplacian comparison, algebraic summand: −2 on the same class
    let rough_scalar = {
        let results = crate::exec::map_collect(&sym_set, |m| {
            let h = BasicTensor2::analyze(m.clone(), &fibre);
            rough_diff_algebraic(&h, &fibre).ok().and_then(|out| {
                scalar_multiple_of(&out, h.tensor()).map(|l| format_scalar(&l))
            })
        });
        consolidate(results)
    };
    push(
        "rough_laplacian_difference_algebraic",
        "phi-invariant horizontal trace-free symmetric",
        "-2".into(),
        rough_scalar,
    );

    // the two vector-level identities, modulo ξ
    let dim = fibre.dim();
    let mod_xi_first = (0..dim).all(|k| {
        let x = basis_vector(dim, k);
        let mut acc = vec![Scalar::zero(); dim];
        for i in 0..dim {
            let ei = basis_vector(dim, i);
            let phi_ei = fibre.phi().mul_vec(&ei);
            for j in 0..dim {
                let ej = basis_vector(dim, j);
                let phi_ej = fibre.phi().mul_vec(&ej);
                let inner = wedge2_as_endo(&ei, &ej).mul_vec(&x);
                let outer = wedge2_as_endo(&phi_ei, &phi_ej).mul_vec(&inner);
                for (a, o) in acc.iter_mut().zip(outer) {
                    *a += o;
                }
            }
        }
        let acc: Vec<Scalar> = acc.iter().map(|v| v * &crate::scalar::rat(-1, 2)).collect();
        fibre.horizontal(&acc) == fibre.horizontal(&x)
    });
    push(
        "first_summand_on_vectors",
        "vectors mod xi",
        "X mod xi".into(),
        if mod_xi_first { "X mod xi" } else { "mismatch" }.into(),
    );

    let mod_xi_second = (0..dim).all(|k| {
        let x = basis_vector(dim, k);
        let mut acc = vec![Scalar::zero(); dim];
        for j in 0..dim {
            let a = wedge2_as_endo(fibre.xi(), &basis_vector(dim, j));
            let out = a.mul_vec(&a.mul_vec(&x));
            for (acc_v, o) in acc.iter_mut().zip(out) {
                *acc_v += o;
            }
        }
        let minus_x: Vec<Scalar> = x.iter().map(|v| -v.clone()).collect();
        fibre.horizontal(&acc) == fibre.horizontal(&minus_x)
    });
    push(
        "second_summand_on_vectors",
        "vectors mod xi",
        "-X mod xi".into(),
        if mod_xi_second { "-X mod xi" } else { "mismatch" }.into(),
    );

    // h_α on primitive forms: symmetric, horizontal, trace-free
    let primitive_ok = two_forms.iter().all(|w| {
        let alpha = BasicTensor2::analyze(w.to_skew_mat(), &fibre);
        if !alpha.flags().is_primitive {
            return true;
        }
        match h_from_alpha(&alpha, &fibre) {
            Ok(h) => {
                let f = h.flags();
                f.is_symmetric && f.is_horizontal && f.is_tracefree
            }
            Err(_) => false,
        }
    });
    push(
        "h_alpha_on_primitive_forms",
        "primitive phi-invariant horizontal 2-forms",
        "symmetric trace-free".into(),
        if primitive_ok {
            "symmetric trace-free"
        } else {
            "violation"
        }
        .into(),
    );

    // h_{dη} is proportional to the horizontal metric with nonzero trace
    let d_eta_line = {
        let alpha = BasicTensor2::analyze(fibre.d_eta().to_skew_mat(), &fibre);
        match h_from_alpha(&alpha, &fibre) {
            Ok(h) => {
                let mut horiz_metric = Mat::identity(dim);
                horiz_metric.set(dim - 1, dim - 1, int(0));
                match scalar_multiple_of(h.tensor(), &horiz_metric) {
                    Some(l) if !h.tensor().trace().is_zero() => {
                        format!("{} * horizontal metric", format_scalar(&l))
                    }
                    _ => "not proportional".into(),
                }
            }
            Err(e) => format!("error: {e}"),
        }
    };
    push(
        "h_alpha_on_d_eta",
        "non-primitive test form",
        "-2 * horizontal metric".into(),
        d_eta_line,
    );

    // involution up to sign: h ↦ h(·,Φ·) then back
    let involution_ok = sym_set.iter().all(|m| {
        let alpha_mat = m * fibre.phi();
        let alpha = BasicTensor2::analyze(alpha_mat, &fibre);
        match h_from_alpha(&alpha, &fibre) {
            Ok(h) => h.tensor() == &m.scale(&int(-1)),
            Err(_) => false,
        }
    });
    push(
        "alpha_h_involution",
        "phi-invariant horizontal class",
        "h_(alpha_h) = -h".into(),
        if involution_ok {
            "h_(alpha_h) = -h"
        } else {
            "mismatch"
        }
        .into(),
    );

    let trace_constant = trace_pairing_constant(&fibre);
    let pass = checks.iter().all(|c| c.pass);
    SasakiReport {
        n,
        checks,
        trace_pairing_constant: format_scalar(&trace_constant),
        pass,
    }
}

fn consolidate(results: Vec<Option<String>>) -> String {
    let mut uniq: Vec<String> = Vec::new();
    for r in results {
        match r {
            None => return "not a scalar multiple".into(),
            Some(s) => {
                if !uniq.contains(&s) {
                    uniq.push(s);
                }
            }
        }
    }
    match uniq.len() {
        0 => "empty class".into(),
        1 => uniq.pop().unwrap(),
        _ => format!("inconsistent: {}", uniq.join(", ")),
    }
}
