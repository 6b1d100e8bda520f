//! Construction of the loop-diagonal elements: the remainder term R_m, the
//! elements a_m, and the bracket/zero-mode identities they rest on.
//!
//! Everything here is exact bookkeeping over the windowed completion: the
//! bracketed, braid-translated evaluation images on one side, and finite
//! tables of two-factor sum patterns on the other.

use thiserror::Error;

use crate::braid::{self, BraidError};
use crate::completion::{
    diagonal_patterns, diagonal_patterns_next, materialize, w_bracket, window_equal,
    CompletionError, EqReport, Evaluator, SumPattern, WindowedElement, YangianExpr, YangianGen,
};
use crate::loopalg::{LieElement, LoopAlgebra};
use crate::pbw::{multiply, Morphism, UEAElement};
use crate::scalar::{ParamPoint, Rational};

/// Errors from the Heisenberg construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeisenbergError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error("loop multiplicity must be at least 1, got {0}")]
    InvalidMultiplicity(i64),
    #[error("braid-computed translation image disagrees with its closed form at i={i}, m={m}")]
    FirstGroupMismatch { i: i64, m: i64 },
}

fn sign_pow(exp: i64) -> Rational {
    if exp.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The identity-matrix loop at degree m, as an enveloping-algebra element.
pub fn identity_loop_uea(alg: &LoopAlgebra, m: i64) -> UEAElement {
    crate::pbw::UEAElement::from_lie(&alg.identity_loop(m)).expect("no degree operator")
}

/// Closed form of `T_{w(i,m)}(x_{i-1}^+)`.
pub fn translated_raising_closed_form(alg: &LoopAlgebra, i: i64, m: i64) -> LieElement {
    let n = alg.n() as i64;
    let node = alg.cartan.node(i) as i64;
    let sign = sign_pow(m - 1);
    if node == 0 {
        alg.e_elem(1, n, m - 1).scale(&sign)
    } else {
        alg.e_elem(node + 1, node, m).scale(&sign)
    }
}

/// The finite remainder element R_m. The first group is computed by actually
/// running the braid words, then cross-checked against the closed form.
pub fn build_r(alg: &LoopAlgebra, m: i64) -> Result<UEAElement, HeisenbergError> {
    if m < 1 {
        return Err(HeisenbergError::InvalidMultiplicity(m));
    }
    let n = alg.n() as i64;
    let sign = sign_pow(m - 1);
    let mut out = UEAElement::zero();

    // first group: (-1)^{m-1} sum_i x_i^+ T_{w(i,m)}(x_{i-1}^+)
    for i in 0..n {
        let op = braid::translation_op(alg.n(), i, m)?;
        let translated = braid::apply_op_lie(alg, &op, &alg.x_plus(i - 1))?;
        if translated != translated_raising_closed_form(alg, i, m) {
            return Err(HeisenbergError::FirstGroupMismatch { i, m });
        }
        let left = UEAElement::from_lie(&alg.x_plus(i)).expect("no degree operator");
        let right = UEAElement::from_lie(&translated).expect("no degree operator");
        out = out.add(&multiply(&left, &right).scale(&sign));
    }

    // sum_{p=1}^{m-1} sum_{1 <= i <= j <= N-1} h_i(p) h_j(m-p)
    for p in 1..=(m - 1) {
        for i in 1..n {
            for j in i..n {
                let hi = UEAElement::from_lie(&alg.h_loop(i, p)).unwrap();
                let hj = UEAElement::from_lie(&alg.h_loop(j, m - p)).unwrap();
                out = out.add(&multiply(&hi, &hj));
            }
        }
    }

    // - sum_{p=-m+2}^{m-1} ( E[1,N](p-1)E[N,1](m-p+1)
    //                        + sum_{i=0}^{N-2} E[i+2,i+1](p)E[i+1,i+2](m-p) )
    for p in (-m + 2)..=(m - 1) {
        let a = UEAElement::from_lie(&alg.e_elem(1, n, p - 1)).unwrap();
        let b = UEAElement::from_lie(&alg.e_elem(n, 1, m - p + 1)).unwrap();
        out = out.sub(&multiply(&a, &b));
        for i in 0..=(n - 2) {
            let a = UEAElement::from_lie(&alg.e_elem(i + 2, i + 1, p)).unwrap();
            let b = UEAElement::from_lie(&alg.e_elem(i + 1, i + 2, m - p)).unwrap();
            out = out.sub(&multiply(&a, &b));
        }
    }

    // + sum_{p=-m+2}^{0} ( E[1,N-1](p-1)E[N-1,1](m-p+1) + E[2,N](p-1)E[N,2](m-p+1)
    //                      + sum_{i=0}^{N-3} E[i+3,i+1](p)E[i+1,i+3](m-p) )
    for p in (-m + 2)..=0 {
        let a = UEAElement::from_lie(&alg.e_elem(1, n - 1, p - 1)).unwrap();
        let b = UEAElement::from_lie(&alg.e_elem(n - 1, 1, m - p + 1)).unwrap();
        out = out.add(&multiply(&a, &b));
        let a = UEAElement::from_lie(&alg.e_elem(2, n, p - 1)).unwrap();
        let b = UEAElement::from_lie(&alg.e_elem(n, 2, m - p + 1)).unwrap();
        out = out.add(&multiply(&a, &b));
        for i in 0..=(n - 3) {
            let a = UEAElement::from_lie(&alg.e_elem(i + 3, i + 1, p)).unwrap();
            let b = UEAElement::from_lie(&alg.e_elem(i + 1, i + 3, m - p)).unwrap();
            out = out.add(&multiply(&a, &b));
        }
    }

    Ok(out)
}

/// The element whose evaluation image is the identity loop at degree m.
pub fn build_a(
    alg: &LoopAlgebra,
    params: &ParamPoint,
    m: i64,
) -> Result<YangianExpr, HeisenbergError> {
    if params.c_value.is_none() || params.eps2.is_zero() {
        return Err(HeisenbergError::Completion(
            CompletionError::DegenerateParameters("need the evaluation regime with eps2 != 0".into()),
        ));
    }
    let n = alg.n() as i64;
    let inv_eps2 = params.eps2.recip();
    if m == 0 {
        let c = params.c().clone();
        let constant = -(&c + &(&params.hbar_half() * &c.pow(2)));
        let mut parts: Vec<YangianExpr> =
            (0..n).map(YangianExpr::htilde).collect();
        parts.push(YangianExpr::Constant(constant));
        return Ok(YangianExpr::scale(inv_eps2, YangianExpr::Sum(parts)));
    }
    let mm = m.abs();
    let sign = sign_pow(mm - 1);
    let r = build_r(alg, mm)?;
    if m > 0 {
        let brackets: Vec<YangianExpr> = (0..n)
            .map(|i| {
                let op = braid::translation_op(alg.n(), i, mm)?;
                Ok(YangianExpr::bracket(
                    YangianExpr::x_plus(i, 0),
                    YangianExpr::braid(op, YangianExpr::x_plus(i - 1, 1)),
                ))
            })
            .collect::<Result<_, HeisenbergError>>()?;
        Ok(YangianExpr::scale(
            inv_eps2,
            YangianExpr::Sum(vec![
                YangianExpr::scale(sign, YangianExpr::Sum(brackets)),
                YangianExpr::scale(-&params.hbar, YangianExpr::Classical(r)),
            ]),
        ))
    } else {
        let brackets: Vec<YangianExpr> = (0..n)
            .map(|i| {
                let op = braid::translation_op(alg.n(), i, mm)?;
                Ok(YangianExpr::bracket(
                    YangianExpr::braid(op, YangianExpr::x_minus(i - 1, 1)),
                    YangianExpr::x_minus(i, 0),
                ))
            })
            .collect::<Result<_, HeisenbergError>>()?;
        let omega = Morphism::omega(*alg);
        let r_omega = omega
            .apply(&r)
            .map_err(|e| CompletionError::Algebra(e.to_string()))?;
        Ok(YangianExpr::scale(
            inv_eps2,
            YangianExpr::Sum(vec![
                YangianExpr::scale(sign, YangianExpr::Sum(brackets)),
                YangianExpr::scale(-&params.hbar, YangianExpr::Classical(r_omega)),
            ]),
        ))
    }
}

/// Offset of `p(i,k)` relative to the summation variable.
fn p_offset(n: i64, i: i64, k: i64, m: i64) -> i64 {
    if i == 0 {
        if k == 1 {
            m - 1
        } else if k == 2 {
            -m + 1
        } else if k < n {
            0
        } else {
            1
        }
    } else if i <= n - 2 {
        if k < i {
            0
        } else if k == i {
            1
        } else if k == i + 1 {
            m
        } else if k == i + 2 {
            -m + 2
        } else {
            1
        }
    } else {
        // i = n - 1
        if k == 1 {
            -m + 1
        } else if k <= n - 2 {
            0
        } else if k == n - 1 {
            1
        } else {
            m
        }
    }
}

fn q_offset(n: i64, i: i64, k: i64, m: i64) -> i64 {
    if i == 0 {
        p_offset(n, i, k, m) + 1
    } else {
        p_offset(n, i, k, m)
    }
}

/// The finite head `A_i` of the bracket identity, with numeric central charge.
pub fn braket_head(alg: &LoopAlgebra, params: &ParamPoint, i: i64, m: i64) -> UEAElement {
    let n = alg.n() as i64;
    let node = alg.cartan.node(i) as i64;
    let hbar_c = &params.hbar * params.c();
    let (base, coroot, extra_central_coroot) = if node == 0 {
        (
            &Rational::integer(n - 1) * &params.eps2,
            alg.h_minus_theta(m),
            false,
        )
    } else if node == 1 {
        (&Rational::integer(n) * &params.eps2, alg.h_loop(1, m), false)
    } else {
        (
            &Rational::integer(node - 1) * &params.eps2,
            alg.h_loop(node, m),
            true,
        )
    };
    let mut scalar = &(&Rational::one() + &base) + &(&Rational::integer(m - 1) * &hbar_c);
    if extra_central_coroot {
        scalar = &scalar + &hbar_c;
    }
    let mut out = UEAElement::from_lie(&coroot.scale(&scalar)).unwrap();
    if node == 0 {
        let e_nn = UEAElement::from_lie(&alg.e_elem(n, n, m)).unwrap();
        out = out.add(&e_nn.scale(&hbar_c));
    }
    out
}

/// The finite head and the two-factor pattern families of the bracket
/// identity at one (node, multiplicity).
pub struct BraketTables {
    /// `A_i` minus the finite diagonal tail.
    pub head: UEAElement,
    /// The `P` families (positive sign) and `Q` families (negative sign).
    pub patterns: Vec<SumPattern>,
}

/// Builds the displayed offset tables for one (node, multiplicity).
pub fn braket_tables(
    alg: &LoopAlgebra,
    params: &ParamPoint,
    i: i64,
    m: i64,
) -> Result<BraketTables, HeisenbergError> {
    if m < 1 {
        return Err(HeisenbergError::InvalidMultiplicity(m));
    }
    let n = alg.n() as i64;
    let node = alg.cartan.node(i) as i64;
    let hbar = params.hbar.clone();
    let mut head = braket_head(alg, params, i, m);
    for s in 0..=(m - 2) {
        let a = UEAElement::from_lie(&alg.e_elem(node, node, s + 1)).unwrap();
        let b = UEAElement::from_lie(&alg.e_elem(node + 1, node + 1, -s + m - 1)).unwrap();
        head = head.sub(&multiply(&a, &b).scale(&hbar));
    }
    let mut patterns = Vec::new();
    for k in 1..=n {
        let p = p_offset(n, node, k, m);
        patterns.push(SumPattern::new(alg, k, node, node, k, p, m - p).scaled(hbar.clone()));
        let q = q_offset(n, node, k, m);
        patterns.push(SumPattern::new(alg, k, node + 1, node + 1, k, q, m - q).scaled(-&hbar));
    }
    Ok(BraketTables { head, patterns })
}

/// Right-hand side of the bracket identity: the head plus the `P - Q`
/// pattern families minus the finite diagonal tail, all scaled by the
/// alternating sign.
pub fn braket_rhs(ev: &Evaluator, i: i64, m: i64) -> Result<WindowedElement, HeisenbergError> {
    let tables = braket_tables(&ev.alg, &ev.params, i, m)?;
    let materialized = materialize(&tables.patterns, &tables.head, ev.cutoff, ev.params.c())?;
    Ok(materialized.scale(&sign_pow(m - 1)))
}

/// Left-hand side of the bracket identity:
/// `[x_i^+, T_{w(i,m)} ev(x_{i-1,1}^+)]`.
pub fn braket_lhs(ev: &Evaluator, i: i64, m: i64) -> Result<WindowedElement, HeisenbergError> {
    if m < 1 {
        return Err(HeisenbergError::InvalidMultiplicity(m));
    }
    let expr = YangianExpr::bracket(
        YangianExpr::x_plus(i, 0),
        YangianExpr::braid(
            braid::translation_op(ev.alg.n(), i, m)?,
            YangianExpr::x_plus(i - 1, 1),
        ),
    );
    Ok(ev.ev_expr(&expr)?)
}

/// Compares both sides of the bracket identity at the required window.
pub fn check_braket(
    ev: &Evaluator,
    i: i64,
    m: i64,
    required_window: i64,
) -> Result<EqReport, HeisenbergError> {
    let lhs = braket_lhs(ev, i, m)?;
    let rhs = braket_rhs(ev, i, m)?;
    Ok(window_equal(&lhs, &rhs, required_window)?)
}

/// The summed twisted Cartan images against the scalar-plus-identity target.
pub fn check_zero_mode(ev: &Evaluator, required_window: i64) -> Result<EqReport, HeisenbergError> {
    let n = ev.alg.n() as i64;
    let mut lhs = WindowedElement::zero();
    for i in 0..n {
        lhs = lhs.add(&ev.ev_gen(YangianGen::HTilde { i })?);
    }
    let c = ev.params.c().clone();
    let mut rhs_body = identity_loop_uea(&ev.alg, 0).scale(&ev.params.eps2);
    let scalar = &c + &(&ev.params.hbar_half() * &c.pow(2));
    rhs_body = rhs_body.add(&UEAElement::scalar(scalar));
    Ok(window_equal(&lhs, &WindowedElement::exact(rhs_body), required_window)?)
}

/// Telescoping step behind the zero-mode identity: the node-(i+1) diagonal
/// family minus the node-i companion family collapses to one squared
/// diagonal generator.
pub fn check_telescoping(
    ev: &Evaluator,
    i: i64,
    required_window: i64,
) -> Result<EqReport, HeisenbergError> {
    let alg = &ev.alg;
    let next = alg.cartan.node(i + 1) as i64;
    let node = alg.cartan.node(i) as i64;
    let mut patterns = diagonal_patterns(alg, next, Rational::one());
    patterns.extend(diagonal_patterns_next(alg, node, -Rational::one()));
    let lhs = materialize(&patterns, &UEAElement::zero(), ev.cutoff, ev.params.c())?;
    let e = UEAElement::from_lie(&alg.e_elem(i + 1, i + 1, 0)).unwrap();
    let rhs = WindowedElement::exact(multiply(&e, &e));
    Ok(window_equal(&lhs, &rhs, required_window)?)
}

/// The summed-bracket identity: the evaluation of the signed bracket sum
/// equals `eps2 * identity-loop(m) + hbar * R_m`.
pub fn check_remainder(
    ev: &Evaluator,
    m: i64,
    required_window: i64,
) -> Result<EqReport, HeisenbergError> {
    if m < 1 {
        return Err(HeisenbergError::InvalidMultiplicity(m));
    }
    let n = ev.alg.n() as i64;
    let sign = sign_pow(m - 1);
    let mut lhs = WindowedElement::zero();
    for i in 0..n {
        let op = braid::translation_op(ev.alg.n(), i, m)?;
        let translated = braid::apply_op_windowed(
            &ev.alg,
            &op,
            &ev.ev_gen(YangianGen::XPlus { i: i - 1, r: 1 })?,
        )?;
        let translated = ev.respecialized(translated);
        let x = UEAElement::from_lie(&ev.alg.x_plus(i)).unwrap();
        lhs = lhs.add(&ev.respecialized(w_bracket(&x, &translated)));
    }
    lhs = lhs.scale(&sign);
    let r = build_r(&ev.alg, m)?;
    let rhs_body = identity_loop_uea(&ev.alg, m)
        .scale(&ev.params.eps2)
        .add(&r.scale(&ev.params.hbar));
    Ok(window_equal(&lhs, &WindowedElement::exact(rhs_body), required_window)?)
}

/// The headline identity: the evaluation of a_m is the identity loop at m.
pub fn check_diagonal_image(
    ev: &Evaluator,
    m: i64,
    required_window: i64,
) -> Result<EqReport, HeisenbergError> {
    let expr = build_a(&ev.alg, &ev.params, m)?;
    let lhs = ev.ev_expr(&expr)?;
    let rhs = WindowedElement::exact(identity_loop_uea(&ev.alg, m));
    Ok(window_equal(&lhs, &rhs, required_window)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::UEAElement;

    fn setup(n: usize, cutoff: i64) -> Evaluator {
        let alg = LoopAlgebra::new(n);
        let params =
            ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), n, true).unwrap();
        Evaluator::new(alg, params, cutoff).unwrap()
    }

    #[test]
    fn zero_mode_small_ranks() {
        for n in [3usize, 4] {
            let ev = setup(n, 6);
            let report = check_zero_mode(&ev, 3).unwrap();
            assert!(report.pass, "n={n}: {:?}", report.violations);
        }
    }

    #[test]
    fn zero_mode_requires_regime() {
        let alg = LoopAlgebra::new(3);
        let params =
            ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), 3, false).unwrap();
        assert!(Evaluator::new(alg, params, 6).is_err());
    }

    #[test]
    fn telescoping_families() {
        let ev = setup(4, 6);
        for i in 0..4 {
            let report = check_telescoping(&ev, i, 4).unwrap();
            assert!(report.pass, "i={i}: {:?}", report.violations);
        }
    }

    #[test]
    fn remainder_has_only_first_group_at_m_one() {
        let alg = LoopAlgebra::new(3);
        let r = build_r(&alg, 1).unwrap();
        let mut expected = UEAElement::zero();
        for i in 0..3 {
            let left = UEAElement::from_lie(&alg.x_plus(i)).unwrap();
            let right =
                UEAElement::from_lie(&translated_raising_closed_form(&alg, i, 1)).unwrap();
            expected = expected.add(&multiply(&left, &right));
        }
        assert_eq!(r, expected);
    }

    #[test]
    fn remainder_m2_contains_corner_products() {
        use crate::pbw::Monomial;
        let alg = LoopAlgebra::new(3);
        let r = build_r(&alg, 2).unwrap();
        // the subtracted group contributes E[1,3](p-1)E[3,1](2-p+1) for
        // p in {0,1}; at p = 0 the straightened two-factor part E[3,1](3)
        // E[1,3](-1) comes from nowhere else, with the group's minus sign
        let m = Monomial::from_factors(vec![alg.e(3, 1, 3), alg.e(1, 3, -1)]);
        assert_eq!(r.coeff(&m), -Rational::one());
        // at p = 1 the factors arrive already ordered
        let m = Monomial::from_factors(vec![alg.e(3, 1, 2), alg.e(1, 3, 0)]);
        assert_eq!(r.coeff(&m), -Rational::one());
    }

    #[test]
    fn braket_identity_base_case() {
        let ev = setup(3, 8);
        let report = check_braket(&ev, 1, 1, 2).unwrap();
        assert!(report.pass, "{:?}", report.violations);
    }

    #[test]
    fn braket_identity_affine_node() {
        let ev = setup(3, 8);
        let report = check_braket(&ev, 0, 2, 0).unwrap();
        assert!(report.pass, "{:?}", report.violations);
    }

    #[test]
    fn remainder_identity_small() {
        let ev = setup(3, 8);
        for m in 1..=2 {
            let report = check_remainder(&ev, m, 8 - 2 * m - 4).unwrap();
            assert!(report.pass, "m={m}: {:?}", report.violations);
        }
    }

    #[test]
    fn diagonal_image_all_modes() {
        let ev = setup(3, 8);
        for m in [-1i64, 0, 1] {
            let report = check_diagonal_image(&ev, m, 8 - 2 * m.abs() - 4).unwrap();
            assert!(report.pass, "m={m}: {:?}", report.violations);
        }
    }
}
