//! The scalar-extended pairings b_k(x, y) = b(x, y) + k iota b(x, I_k y),
//! C-valued for k = -1 and Lorentz-valued for k = +1, each iota-symmetric
//! and iota-bilinear for the scalar action iota . x = I_k x.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Quad, Sign};
use crate::extended::ExtendedSpace;
use crate::{QuadMatrix, RatMatrix};

/// Gram data of b_k over the full real basis of E.
#[derive(Debug, Clone)]
pub struct TwistorForms {
    pub k: Sign,
    /// 2m x 2m Gram of b_k with entries in `Q[iota]`, `iota^2 = k`.
    pub gram: QuadMatrix,
}

/// Builds the Gram of b_k and verifies iota-symmetry and iota-bilinearity
/// on all basis pairs (as matrix identities in the real and imaginary
/// parts). These hold by construction, so a failure is an internal error.
pub fn bk_gram(space: &ExtendedSpace) -> Result<TwistorForms> {
    let k = space.k();
    let b = space.bgram();
    let ik = space.ik();
    let im_part = (b * ik).scale(&k.rational());

    // iota-symmetry: both parts symmetric.
    if !b.is_symmetric() || !im_part.is_symmetric() {
        return Err(Error::InvariantViolation(
            "b_k is not iota-symmetric".into(),
        ));
    }
    // iota-bilinearity b_k(I_k x, y) = iota b_k(x, y), on Grams:
    //   re: b(I_k x, y) = b(x, I_k y)     i.e. Ik^t B = B Ik = k * Im
    //   im: k b(I_k x, I_k y) = b(x, y)   i.e. Ik^t Im = B
    let lhs_re = &ik.transpose() * b;
    if lhs_re != im_part.scale(&k.rational()) {
        return Err(Error::InvariantViolation(
            "b_k is not iota-bilinear (real part)".into(),
        ));
    }
    let lhs_im = &ik.transpose() * &im_part;
    if lhs_im != *b {
        return Err(Error::InvariantViolation(
            "b_k is not iota-bilinear (imaginary part)".into(),
        ));
    }

    let n = space.dim();
    let gram = Matrix::from_fn(n, n, |r, c| {
        Quad::new(b[(r, c)].clone(), im_part[(r, c)].clone(), k)
    });
    Ok(TwistorForms { k, gram })
}

impl TwistorForms {
    /// b_k evaluated on coordinate columns of E.
    pub fn eval(&self, x: &RatMatrix, y: &RatMatrix) -> Quad {
        let n = self.gram.rows();
        let mut acc = Quad::zero();
        for r in 0..n {
            if x[(r, 0)].is_zero() {
                continue;
            }
            for c in 0..n {
                if y[(c, 0)].is_zero() {
                    continue;
                }
                let coeff = &x[(r, 0)] * &y[(c, 0)];
                acc = acc + self.gram[(r, c)].scale(&coeff);
            }
        }
        acc
    }
}

/// The m x m Gram of b_k on the tangent basis (e_1..e_m), which is an
/// iota-basis of (E, I_k): equals -i G for k = -1 and eps G for k = +1.
pub fn complex_basis_gram(space: &ExtendedSpace) -> QuadMatrix {
    let m = space.m();
    let k = space.k();
    let g = space.metric().gram();
    Matrix::from_fn(m, m, |r, c| {
        Quad::new(crate::exactla::rat(0), g[(r, c)].clone() * k.rational(), k)
    })
}

/// For k = +1: verifies the null-basis block identity
/// b_1(x e.u_a + ..., ...) = eps (e <x1,x2> + ebar <y1,y2>) by evaluating
/// b_1 on the rational vectors e.u_a = (u_a - I_1 u_a)/2 and
/// ebar.u_a = (u_a + I_1 u_a)/2 for all basis pairs (a, b).
pub fn null_basis_form_check(space: &ExtendedSpace) -> Result<()> {
    if space.k() != Sign::Plus {
        return Err(Error::InvariantViolation(
            "the null basis exists only for the Lorentz case k = +1".into(),
        ));
    }
    let forms = bk_gram(space)?;
    let m = space.m();
    let ik = space.ik();
    let g = space.metric().gram();
    let half = crate::exactla::frac(1, 2);
    let eps = Quad::eps();
    let e = Quad::null_e();
    let ebar = Quad::null_ebar();

    let mut e_vecs = Vec::with_capacity(m);
    let mut ebar_vecs = Vec::with_capacity(m);
    for a in 0..m {
        let u = Matrix::std_basis(2 * m, a);
        let iu = ik * &u;
        e_vecs.push((&u - &iu).scale(&half));
        ebar_vecs.push((&u + &iu).scale(&half));
    }
    for a in 0..m {
        for b in 0..m {
            let gab = &g[(a, b)];
            // b_1(e u_a, e u_b) = eps * e * <u_a, u_b>
            let got_ee = forms.eval(&e_vecs[a], &e_vecs[b]);
            let want_ee = eps.checked_mul(&e)?.scale(gab);
            // b_1(ebar u_a, ebar u_b) = eps * ebar * <u_a, u_b>
            let got_bb = forms.eval(&ebar_vecs[a], &ebar_vecs[b]);
            let want_bb = eps.checked_mul(&ebar)?.scale(gab);
            // cross terms vanish
            let got_eb = forms.eval(&e_vecs[a], &ebar_vecs[b]);
            if got_ee != want_ee || got_bb != want_bb || !got_eb.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "null-basis block form fails at pair ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(())
}
