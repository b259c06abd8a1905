//! The G2 structure attached to a unit spinor: cross product P, associative
//! 3-form φ, coassociative 4-form ψ, the Λ²/Λ³ projectors, the exact identity
//! suite, and the S and so(7)-Casimir endomorphisms.
//!
//! The cross product is defined by solving `P(X,Y)·σ = X·Y·σ + g(X,Y)σ` in
//! the image of the injective map `v ↦ v·σ`. The orientation is validated by
//! the Λ² eigenvalue test `(T+2)(T−1) = 0` for `T(ω) = ∗(φ∧ω)`; if the test
//! fails with the opposite sign pattern the structure flips its orientation
//! instead of patching individual signs.

use serde::Serialize;

use num::Zero;
use thiserror::Error;

use crate::clifford::{CliffordElement, GENERATORS};
use crate::exec;
use crate::multilinear::{
    basis_vector, endo_act_form, endo_act_tensor2, kernel_basis, rank, solve_exact,
    wedge2_as_endo, AltForm, Mat, MultilinearError, SymTensor2,
};
use crate::sampling;
use crate::scalar::{format_scalar, int, rat, Scalar};
use crate::spin::{spinor_rep, Spinor};

#[derive(Debug, Error, PartialEq)]
pub enum G2Error {
    #[error("spinor is not a unit spinor (norm-squared {0})")]
    NotUnit(String),
    #[error("the map v ↦ v·σ is degenerate (rank {0} < 7)")]
    DegenerateSpinorAction(usize),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("structure validation failed: {0}")]
    StructureValidation(String),
    #[error("3-form is not in the 27-dimensional summand (β∧φ or β∧ψ nonzero)")]
    OutsideLambda27,
    #[error(transparent)]
    Multilinear(#[from] MultilinearError),
}

/// G2 structure derived from a unit spinor.
#[derive(Debug, Clone)]
pub struct G2Structure {
    sigma: Spinor,
    /// p[i][j] = P(eᵢ₊₁, eⱼ₊₁) as a coordinate vector.
    p: Vec<Vec<Vec<Scalar>>>,
    phi: AltForm,
    psi: AltForm,
    orientation: i8,
}

/// Builds the G2 structure of a unit spinor.
pub fn build_g2_structure(sigma: &Spinor) -> Result<G2Structure, G2Error> {
    if !sigma.is_unit() {
        return Err(G2Error::NotUnit(format_scalar(&sigma.norm_sq())));
    }
    let n = GENERATORS;
    // columns of the injection v ↦ v·σ
    let images: Vec<Spinor> = (0..n)
        .map(|j| spinor_rep(&CliffordElement::generator(j + 1), sigma))
        .collect();
    let m = Mat::from_fn(8, n, |r, c| images[c].components()[r].clone());
    let r = rank(&m);
    if r < n {
        return Err(G2Error::DegenerateSpinorAction(r));
    }

    let mut p = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // X·Y·σ + g(X,Y)σ for X = eᵢ₊₁, Y = eⱼ₊₁
            let mut rhs = spinor_rep(&CliffordElement::generator(i + 1), &images[j]);
            if i == j {
                rhs = rhs.add(sigma);
            }
            if !rhs.inner(sigma).is_zero() {
                return Err(G2Error::InternalConsistency(format!(
                    "P({},{})·σ has a component along σ",
                    i + 1,
                    j + 1
                )));
            }
            p[i][j] = solve_exact(&m, rhs.components()).map_err(|_| {
                G2Error::InternalConsistency(format!(
                    "P({},{})·σ is outside the image of v ↦ v·σ",
                    i + 1,
                    j + 1
                ))
            })?;
        }
    }

    // antisymmetry of P
    for i in 0..n {
        for j in 0..n {
            let neg: Vec<Scalar> = p[j][i].iter().map(|x| -x.clone()).collect();
            if p[i][j] != neg {
                return Err(G2Error::StructureValidation(format!(
                    "P({},{}) ≠ −P({},{})",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    // φ(X,Y,Z) = g(P(X,Y),Z), checked to be totally antisymmetric
    let mut phi = AltForm::zero(n, 3);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                phi = phi.add(&AltForm::monomial(
                    n,
                    &[(i + 1) as u8, (j + 1) as u8, (k + 1) as u8],
                    p[i][j][k].clone(),
                ));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if p[i][j][k] != phi.eval(&[(i + 1) as u8, (j + 1) as u8, (k + 1) as u8]) {
                    return Err(G2Error::StructureValidation(format!(
                        "g(P(e{},e{}),e{}) breaks total antisymmetry",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
    }

    // orientation via the Λ² eigenvalue test for T(ω) = ∗(φ∧ω)
    let basis2 = AltForm::basis_tuples(n, 2);
    let t_cols: Vec<Vec<Scalar>> = basis2
        .iter()
        .map(|key| {
            let w = AltForm::monomial(n, key, int(1));
            phi.wedge(&w).unwrap().hodge_star().coords(&basis2)
        })
        .collect();
    let t = Mat::from_cols(&t_cols);
    let id = Mat::identity(basis2.len());
    let annihilates = |a: &Scalar, b: &Scalar| {
        let fa = &t + &id.scale(a);
        let fb = &t + &id.scale(b);
        (&fa * &fb).is_zero()
    };
    let orientation = if annihilates(&int(2), &int(-1)) {
        1
    } else if annihilates(&int(-2), &int(1)) {
        -1
    } else {
        return Err(G2Error::StructureValidation(
            "∗(φ∧·) fails (T+2)(T−1) = 0 in both orientations".into(),
        ));
    };

    let psi = {
        let star = phi.hodge_star();
        if orientation < 0 {
            star.neg()
        } else {
            star
        }
    };

    Ok(G2Structure {
        sigma: sigma.clone(),
        p,
        phi,
        psi,
        orientation,
    })
}

/// The structure of the first standard basis spinor.
pub fn standard_structure() -> &'static G2Structure {
    use std::sync::OnceLock;
    static STANDARD: OnceLock<G2Structure> = OnceLock::new();
    STANDARD.get_or_init(|| build_g2_structure(&Spinor::standard(0)).expect("standard structure"))
}

impl G2Structure {
    pub fn sigma(&self) -> &Spinor {
        &self.sigma
    }

    pub fn phi(&self) -> &AltForm {
        &self.phi
    }

    pub fn psi(&self) -> &AltForm {
        &self.psi
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    /// Hodge star in this structure's orientation.
    pub fn star(&self, w: &AltForm) -> AltForm {
        let s = w.hodge_star();
        if self.orientation < 0 {
            s.neg()
        } else {
            s
        }
    }

    /// The cross product P(x, y).
    pub fn cross(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = GENERATORS;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, pk) in self.p[i][j].iter().enumerate() {
                    if !pk.is_zero() {
                        out[k] += &c * pk;
                    }
                }
            }
        }
        out
    }

    /// The skew endomorphism P_X = X⌟φ, i.e. v ↦ P(X, v).
    pub fn p_endo(&self, x: &[Scalar]) -> Mat {
        let n = GENERATORS;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.cross(x, &basis_vector(n, j)));
        }
        Mat::from_cols(&cols)
    }

    /// Splits a 2-form into its (Λ²₇, Λ²₁₄) components via T(ω) = ∗(φ∧ω):
    /// ω₇ = (ω − Tω)/3 and ω₁₄ = (Tω + 2ω)/3.
    pub fn project_lambda2(&self, w: &AltForm) -> (AltForm, AltForm) {
        assert_eq!(w.degree(), 2);
        let t = self.star(&self.phi.wedge(w).unwrap());
        let third = rat(1, 3);
        let w7 = w.sub(&t).scale(&third);
        let w14 = t.add(&w.scale(&int(2))).scale(&third);
        (w7, w14)
    }

    /// Splits a 3-form into its (Λ³₁, Λ³₇, Λ³₂₇) components.
    pub fn project_lambda3(&self, w: &AltForm) -> (AltForm, AltForm, AltForm) {
        assert_eq!(w.degree(), 3);
        let n = GENERATORS;
        let w1 = self.phi.scale(&(w.inner(&self.phi) / self.phi.inner(&self.phi)));
        // orthogonal projection onto span{ eᵢ ⌟ ψ }
        let gens: Vec<AltForm> = (0..n)
            .map(|i| self.psi.interior(&basis_vector(n, i)))
            .collect();
        let gram = Mat::from_fn(n, n, |r, c| gens[r].inner(&gens[c]));
        let rhs: Vec<Scalar> = gens.iter().map(|g| g.inner(w)).collect();
        let coeffs = solve_exact(&gram, &rhs).expect("Gram matrix of Λ³₇ generators is invertible");
        let mut w7 = AltForm::zero(n, 3);
        for (c, g) in coeffs.iter().zip(&gens) {
            w7 = w7.add(&g.scale(c));
        }
        let w27 = w.sub(&w1).sub(&w7);
        (w1, w7, w27)
    }

    /// Ranks of the Λ² and Λ³ projectors over the full monomial bases:
    /// `(7, 14)` and `(1, 7, 27)`.
    pub fn projector_ranks(&self) -> ((usize, usize), (usize, usize, usize)) {
        let n = GENERATORS;
        let basis2 = AltForm::basis_tuples(n, 2);
        let mut cols7 = Vec::new();
        let mut cols14 = Vec::new();
        for key in &basis2 {
            let (w7, w14) = self.project_lambda2(&AltForm::monomial(n, key, int(1)));
            cols7.push(w7.coords(&basis2));
            cols14.push(w14.coords(&basis2));
        }
        let basis3 = AltForm::basis_tuples(n, 3);
        let mut cols1 = Vec::new();
        let mut cols7b = Vec::new();
        let mut cols27 = Vec::new();
        for key in &basis3 {
            let (w1, w7, w27) = self.project_lambda3(&AltForm::monomial(n, key, int(1)));
            cols1.push(w1.coords(&basis3));
            cols7b.push(w7.coords(&basis3));
            cols27.push(w27.coords(&basis3));
        }
        (
            (rank(&Mat::from_cols(&cols7)), rank(&Mat::from_cols(&cols14))),
            (
                rank(&Mat::from_cols(&cols1)),
                rank(&Mat::from_cols(&cols7b)),
                rank(&Mat::from_cols(&cols27)),
            ),
        )
    }

    /// Dimensions of the kernels of `ω ↦ ω·σ` on Λ² and Λ³. Errors unless
    /// the kernels coincide, as subspaces, with Λ²₁₄ and Λ³₂₇.
    pub fn clifford_kernel_dims(&self) -> Result<(usize, usize), G2Error> {
        let n = GENERATORS;
        let check = |degree: usize, expected: usize| -> Result<usize, G2Error> {
            let basis = AltForm::basis_tuples(n, degree);
            let action = Mat::from_cols(
                &basis
                    .iter()
                    .map(|key| {
                        let c = CliffordElement::from_form(&AltForm::monomial(n, key, int(1)));
                        spinor_rep(&c, &self.sigma).components().to_vec()
                    })
                    .collect::<Vec<_>>(),
            );
            let kernel = kernel_basis(&action);
            let dim = kernel.len();
            // spanning columns of the matching projector image
            let mut span = kernel.clone();
            for key in &basis {
                let w = AltForm::monomial(n, key, int(1));
                let comp = match degree {
                    2 => self.project_lambda2(&w).1,
                    _ => self.project_lambda3(&w).2,
                };
                span.push(comp.coords(&basis));
            }
            let joint = rank(&Mat::from_cols(&span));
            if joint != dim {
                return Err(G2Error::StructureValidation(format!(
                    "degree-{degree} Clifford kernel (dim {dim}) differs from the \
                     {expected}-dimensional summand (joint rank {joint})"
                )));
            }
            Ok(dim)
        };
        let d2 = check(2, 14)?;
        let d3 = check(3, 27)?;
        Ok((d2, d3))
    }

    /// Dimension of the stabiliser {A ∈ so(7) : A_*φ = 0}.
    pub fn stabilizer_dim(&self) -> usize {
        let n = GENERATORS;
        let basis3 = AltForm::basis_tuples(n, 3);
        let mut cols = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let a = wedge2_as_endo(&basis_vector(n, i), &basis_vector(n, j));
                cols.push(endo_act_form(&a, &self.phi).coords(&basis3));
            }
        }
        kernel_basis(&Mat::from_cols(&cols)).len()
    }

    /// S = Σᵢ P_{eᵢ}∘P_{eᵢ} on vectors.
    pub fn s_on_vectors(&self) -> Mat {
        let n = GENERATORS;
        let mut acc = Mat::zeros(n, n);
        for i in 0..n {
            let pe = self.p_endo(&basis_vector(n, i));
            acc = &acc + &(&pe * &pe);
        }
        acc
    }

    /// S on 2-tensors, via the derivation action applied twice.
    pub fn s_on_tensor2(&self, h: &Mat) -> Mat {
        let n = GENERATORS;
        let mut acc = Mat::zeros(n, n);
        for i in 0..n {
            let pe = self.p_endo(&basis_vector(n, i));
            acc = &acc + &endo_act_tensor2(&pe, &endo_act_tensor2(&pe, h));
        }
        acc
    }

    /// S on k-forms, via the slotwise derivation action applied twice.
    pub fn s_on_form(&self, w: &AltForm) -> AltForm {
        let n = GENERATORS;
        let mut acc = AltForm::zero(n, w.degree());
        for i in 0..n {
            let pe = self.p_endo(&basis_vector(n, i));
            acc = acc.add(&endo_act_form(&pe, &endo_act_form(&pe, w)));
        }
        acc
    }

    /// i(h) = Σᵢ (h eᵢ)♭ ∧ (eᵢ⌟φ); maps the metric to 3φ and restricts to an
    /// isomorphism S²₀ → Λ³₂₇.
    pub fn i_map(&self, h: &SymTensor2) -> AltForm {
        let n = GENERATORS;
        assert_eq!(h.dim(), n);
        let mut acc = AltForm::zero(n, 3);
        for i in 0..n {
            let hei = AltForm::from_vector(&h.mat().col(i));
            let ei_phi = self.phi.interior(&basis_vector(n, i));
            acc = acc.add(&hei.wedge(&ei_phi).unwrap());
        }
        acc
    }

    /// Two-sided inverse of [`Self::i_map`] on the trace-free/Λ³₂₇ pair
    /// (normalised by j∘i = id on S²₀). The input must satisfy
    /// β∧φ = 0 = β∧ψ.
    pub fn j_map(&self, beta: &AltForm) -> Result<SymTensor2, G2Error> {
        assert_eq!(beta.degree(), 3);
        if !beta.wedge(&self.phi).unwrap().is_zero() || !beta.wedge(&self.psi).unwrap().is_zero() {
            return Err(G2Error::OutsideLambda27);
        }
        let basis3 = AltForm::basis_tuples(GENERATORS, 3);
        let tracefree = SymTensor2::tracefree_basis(GENERATORS);
        let m = Mat::from_cols(
            &tracefree
                .iter()
                .map(|t| self.i_map(t).coords(&basis3))
                .collect::<Vec<_>>(),
        );
        let x = solve_exact(&m, &beta.coords(&basis3))
            .map_err(|_| G2Error::OutsideLambda27)?;
        let n = GENERATORS;
        let mut acc = Mat::zeros(n, n);
        for (c, t) in x.iter().zip(&tracefree) {
            acc = &acc + &t.mat().scale(c);
        }
        Ok(SymTensor2::new(acc).expect("sum of symmetric tensors"))
    }
}

/// so(7) Casimir Σ_{i<j} (eᵢ∧eⱼ)_*(eᵢ∧eⱼ)_* on k-forms.
pub fn cas_so7_form(w: &AltForm) -> AltForm {
    assert_eq!(w.fibre_dim(), GENERATORS);
    let n = GENERATORS;
    let mut acc = AltForm::zero(n, w.degree());
    for i in 0..n {
        for j in (i + 1)..n {
            let a = wedge2_as_endo(&basis_vector(n, i), &basis_vector(n, j));
            acc = acc.add(&endo_act_form(&a, &endo_act_form(&a, w)));
        }
    }
    acc
}

/// so(7) Casimir on 2-tensors.
pub fn cas_so7_tensor2(h: &Mat) -> Mat {
    assert_eq!(h.rows(), GENERATORS);
    let n = GENERATORS;
    let mut acc = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let a = wedge2_as_endo(&basis_vector(n, i), &basis_vector(n, j));
            acc = &acc + &endo_act_tensor2(&a, &endo_act_tensor2(&a, h));
        }
    }
    acc
}

/// Verifies an operator acts as a scalar on every element of a form basis and
/// returns the scalar.
pub fn scalar_action_on_forms(
    basis: &[AltForm],
    op: impl Fn(&AltForm) -> AltForm,
) -> Option<Scalar> {
    let mut lambda: Option<Scalar> = None;
    for b in basis {
        let image = op(b);
        let candidate = match (lambda.as_ref(), b.terms().next()) {
            (Some(l), _) => l.clone(),
            (None, Some((key, c))) => image.coefficient(key) / c,
            (None, None) => continue,
        };
        if image != b.scale(&candidate) {
            return None;
        }
        lambda = Some(candidate);
    }
    lambda
}

/// Same as [`scalar_action_on_forms`] for 2-tensor bases.
pub fn scalar_action_on_tensors(basis: &[Mat], op: impl Fn(&Mat) -> Mat) -> Option<Scalar> {
    let mut lambda: Option<Scalar> = None;
    for b in basis {
        let image = op(b);
        let candidate = match lambda.as_ref() {
            Some(l) => l.clone(),
            None => {
                let mut found = None;
                'outer: for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        if !b.get(r, c).is_zero() {
                            found = Some(image.get(r, c) / b.get(r, c));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some(f) => f,
                    None => continue,
                }
            }
        };
        if image != b.scale(&candidate) {
            return None;
        }
        lambda = Some(candidate);
    }
    lambda
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

fn check(name: &str, anchor: &str, pass: bool, witness: Option<String>) -> IdentityCheck {
    IdentityCheck {
        name: name.into(),
        anchor: anchor.into(),
        pass,
        witness: if pass { None } else { witness },
    }
}

/// Runs the exact identity suite of the structure:
///
/// 1. Σᵢ P(eᵢ, P(eᵢ, X)) = −6X
/// 2. X⌟φ = −½ Σᵢ eᵢ∧P(eᵢ,X)
/// 3. ψ = −(1/6) Σᵢ (eᵢ⌟φ)∧(eᵢ⌟φ)
/// 4. X⌟ψ = −(1/3) Σᵢ P(eᵢ,X)∧(eᵢ⌟φ)
/// 5. (X⌟φ)·σ = 3X·σ
/// 6. φ·σ = −7σ
/// 7. (X⌟ψ)·σ = −4X·σ
///
/// Each vector identity is checked on the full basis; a failing identity
/// carries its first witness vector.
pub fn g2_identity_suite(g: &G2Structure) -> IdentityReport {
    let n = GENERATORS;
    let sigma = g.sigma();
    let mut checks = Vec::new();

    let per_basis = |mut f: Box<dyn FnMut(usize) -> bool>| -> (bool, Option<String>) {
        for i in 0..n {
            if !f(i) {
                return (false, Some(format!("X = e{}", i + 1)));
            }
        }
        (true, None)
    };

    let (pass, witness) = per_basis(Box::new(|i| {
        let x = basis_vector(n, i);
        let mut acc = vec![Scalar::zero(); n];
        for j in 0..n {
            let ej = basis_vector(n, j);
            let inner = g.cross(&ej, &x);
            let outer = g.cross(&ej, &inner);
            for (a, o) in acc.iter_mut().zip(outer) {
                *a += o;
            }
        }
        let expected: Vec<Scalar> = x.iter().map(|v| v * &int(-6)).collect();
        acc == expected
    }));
    checks.push(check(
        "cross_double_contraction",
        "sum_i P(e_i, P(e_i, X)) = -6 X",
        pass,
        witness,
    ));

    let (pass, witness) = per_basis(Box::new(|i| {
        let x = basis_vector(n, i);
        let mut acc = AltForm::zero(n, 2);
        for j in 0..n {
            let ej_form = AltForm::from_vector(&basis_vector(n, j));
            let pjx = AltForm::from_vector(&g.cross(&basis_vector(n, j), &x));
            acc = acc.add(&ej_form.wedge(&pjx).unwrap());
        }
        g.phi().interior(&x) == acc.scale(&rat(-1, 2))
    }));
    checks.push(check(
        "interior_phi_from_cross",
        "X .int. phi = -1/2 sum_i e_i ^ P(e_i, X)",
        pass,
        witness,
    ));

    let pass = {
        let mut acc = AltForm::zero(n, 4);
        for i in 0..n {
            let ei_phi = g.phi().interior(&basis_vector(n, i));
            acc = acc.add(&ei_phi.wedge(&ei_phi).unwrap());
        }
        *g.psi() == acc.scale(&rat(-1, 6))
    };
    checks.push(check(
        "psi_from_phi_contractions",
        "psi = -1/6 sum_i (e_i .int. phi) ^ (e_i .int. phi)",
        pass,
        None,
    ));

    let (pass, witness) = per_basis(Box::new(|i| {
        let x = basis_vector(n, i);
        let mut acc = AltForm::zero(n, 3);
        for j in 0..n {
            let pjx = AltForm::from_vector(&g.cross(&basis_vector(n, j), &x));
            let ej_phi = g.phi().interior(&basis_vector(n, j));
            acc = acc.add(&pjx.wedge(&ej_phi).unwrap());
        }
        g.psi().interior(&x) == acc.scale(&rat(-1, 3))
    }));
    checks.push(check(
        "interior_psi_from_cross",
        "X .int. psi = -1/3 sum_i P(e_i, X) ^ (e_i .int. phi)",
        pass,
        witness,
    ));

    let (pass, witness) = per_basis(Box::new(|i| {
        let x = basis_vector(n, i);
        let lhs = spinor_rep(&CliffordElement::from_form(&g.phi().interior(&x)), sigma);
        let rhs = spinor_rep(&CliffordElement::from_vector(&x), sigma).scale(&int(3));
        lhs == rhs
    }));
    checks.push(check(
        "lambda2_7_spinor_action",
        "(X .int. phi) . sigma = 3 X . sigma",
        pass,
        witness,
    ));

    let pass = {
        let lhs = spinor_rep(&CliffordElement::from_form(g.phi()), sigma);
        lhs == sigma.scale(&int(-7))
    };
    checks.push(check(
        "phi_spinor_eigenvalue",
        "phi . sigma = -7 sigma",
        pass,
        None,
    ));

    let (pass, witness) = per_basis(Box::new(|i| {
        let x = basis_vector(n, i);
        let lhs = spinor_rep(&CliffordElement::from_form(&g.psi().interior(&x)), sigma);
        let rhs = spinor_rep(&CliffordElement::from_vector(&x), sigma).scale(&int(-4));
        lhs == rhs
    }));
    checks.push(check(
        "lambda3_7_spinor_action",
        "(X .int. psi) . sigma = -4 X . sigma",
        pass,
        witness,
    ));

    let pass = checks.iter().all(|c| c.pass);
    IdentityReport { checks, pass }
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomSpinorResult {
    pub index: usize,
    pub spinor: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionRanks {
    pub lambda2_7: usize,
    pub lambda2_14: usize,
    pub lambda3_1: usize,
    pub lambda3_7: usize,
    pub lambda3_27: usize,
    pub clifford_kernel_lambda2: usize,
    pub clifford_kernel_lambda3: usize,
    pub kernels_match_summands: bool,
    pub stabilizer_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EndomorphismValues {
    pub s_on_vectors: String,
    pub s_on_sym2_traceless: String,
    pub s_on_metric: String,
    pub cas_lambda1: String,
    pub cas_lambda2: String,
    pub cas_lambda3: String,
    pub cas_sym2_traceless: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct G2VerifyReport {
    pub seed: u64,
    pub identity_suite: IdentityReport,
    pub random_spinors: Vec<RandomSpinorResult>,
    pub decomposition: DecompositionRanks,
    pub endomorphisms: EndomorphismValues,
    pub pass: bool,
}

/// Certified scalar values of S and Cas^{so(7)} on the tangent and trace-free
/// symmetric bundles, verified on full bases. Returns
/// `(S_T, S_Sym²₀, Cas_T, Cas_Sym²₀)`.
pub fn certified_endomorphism_scalars(g: &G2Structure) -> Option<(Scalar, Scalar, Scalar, Scalar)> {
    let n = GENERATORS;
    let s_t = {
        let s = g.s_on_vectors();
        let expected = |l: &Scalar| s == Mat::identity(n).scale(l);
        let l = s.get(0, 0).clone();
        if expected(&l) {
            Some(l)
        } else {
            None
        }
    }?;
    let sym0: Vec<Mat> = SymTensor2::tracefree_basis(n)
        .into_iter()
        .map(SymTensor2::into_mat)
        .collect();
    let s_sym = scalar_action_on_tensors(&sym0, |h| g.s_on_tensor2(h))?;
    let cas_t = {
        let basis1: Vec<AltForm> = AltForm::basis_tuples(n, 1)
            .iter()
            .map(|k| AltForm::monomial(n, k, int(1)))
            .collect();
        scalar_action_on_forms(&basis1, cas_so7_form)?
    };
    let cas_sym = scalar_action_on_tensors(&sym0, cas_so7_tensor2)?;
    Some((s_t, s_sym, cas_t, cas_sym))
}

/// Full verification run: identity suite on the default spinor and on seeded
/// random unit spinors, projector ranks, Clifford kernels, stabiliser
/// dimension and the certified S/Cas values.
pub fn verify_g2(seed: u64, random_spinors: usize) -> Result<G2VerifyReport, G2Error> {
    let g = build_g2_structure(&Spinor::standard(0))?;
    let identity_suite = g2_identity_suite(&g);

    let mut rng = sampling::rng(seed);
    let spinors: Vec<(usize, Spinor)> = (0..random_spinors)
        .map(|i| (i, sampling::random_unit_spinor(&mut rng)))
        .collect();
    let random_results: Vec<RandomSpinorResult> = exec::map_collect(&spinors, |(i, s)| {
        let pass = build_g2_structure(s)
            .map(|gs| g2_identity_suite(&gs).pass)
            .unwrap_or(false);
        RandomSpinorResult {
            index: *i,
            spinor: s.components().iter().map(format_scalar).collect(),
            pass,
        }
    });

    let ((r7, r14), (r1, r3_7, r27)) = g.projector_ranks();
    let (k2, k3, kernels_match) = match g.clifford_kernel_dims() {
        Ok((a, b)) => (a, b, true),
        Err(_) => (0, 0, false),
    };
    let decomposition = DecompositionRanks {
        lambda2_7: r7,
        lambda2_14: r14,
        lambda3_1: r1,
        lambda3_7: r3_7,
        lambda3_27: r27,
        clifford_kernel_lambda2: k2,
        clifford_kernel_lambda3: k3,
        kernels_match_summands: kernels_match,
        stabilizer_dim: g.stabilizer_dim(),
    };

    let n = GENERATORS;
    let sym0: Vec<Mat> = SymTensor2::tracefree_basis(n)
        .into_iter()
        .map(SymTensor2::into_mat)
        .collect();
    let forms = |k: usize| -> Vec<AltForm> {
        AltForm::basis_tuples(n, k)
            .iter()
            .map(|key| AltForm::monomial(n, key, int(1)))
            .collect()
    };
    let fmt = |x: Option<Scalar>| x.map(|v| format_scalar(&v)).unwrap_or_else(|| "not scalar".into());
    let s_vec_scalar = {
        let s = g.s_on_vectors();
        let l = s.get(0, 0).clone();
        if s == Mat::identity(n).scale(&l) {
            Some(l)
        } else {
            None
        }
    };
    let endomorphisms = EndomorphismValues {
        s_on_vectors: fmt(s_vec_scalar.clone()),
        s_on_sym2_traceless: fmt(scalar_action_on_tensors(&sym0, |h| g.s_on_tensor2(h))),
        s_on_metric: {
            // the derivation action of each skew P_{eᵢ} kills the metric
            let out = g.s_on_tensor2(&Mat::identity(n));
            fmt(scalar_action_on_tensors(&[Mat::identity(n)], |_| out.clone()))
        },
        cas_lambda1: fmt(scalar_action_on_forms(&forms(1), cas_so7_form)),
        cas_lambda2: fmt(scalar_action_on_forms(&forms(2), cas_so7_form)),
        cas_lambda3: fmt(scalar_action_on_forms(&forms(3), cas_so7_form)),
        cas_sym2_traceless: fmt(scalar_action_on_tensors(&sym0, cas_so7_tensor2)),
    };

    let expected_endos = endomorphisms.s_on_vectors == "-6"
        && endomorphisms.s_on_sym2_traceless == "-14"
        && endomorphisms.s_on_metric == "0"
        && endomorphisms.cas_lambda1 == "-6"
        && endomorphisms.cas_lambda2 == "-10"
        && endomorphisms.cas_lambda3 == "-12"
        && endomorphisms.cas_sym2_traceless == "-14";

    let pass = identity_suite.pass
        && random_results.iter().all(|r| r.pass)
        && (r7, r14) == (7, 14)
        && (r1, r3_7, r27) == (1, 7, 27)
        && kernels_match
        && (k2, k3) == (14, 27)
        && decomposition.stabilizer_dim == 14
        && expected_endos;

    Ok(G2VerifyReport {
        seed,
        identity_suite,
        random_spinors: random_results,
        decomposition,
        endomorphisms,
        pass,
    })
}
