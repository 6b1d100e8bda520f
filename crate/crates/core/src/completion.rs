//! Window-tracked truncation model of the completed enveloping algebra, and
//! the evaluation images of the degree-one generators.
//!
//! A [`WindowedElement`] carries a body plus an integer window W: the body
//! agrees with the intended completion element on every monomial of span
//! <= W (span = largest |loop degree| among the factors). Operations compute
//! the output window conservatively; W < 0 means "no guarantee". Elements
//! known in full (finite sums) carry the [`EXACT_WINDOW`] sentinel.
//!
//! The numeric central charge is substituted here and only here: every body
//! produced by this module has its `c` exponents collapsed into scalars.

use std::fmt;

use thiserror::Error;

use crate::braid::{self, BraidError, BraidOp};
use crate::loopalg::{ChevalleyKind, LieElement, LoopAlgebra};
use crate::pbw::{
    self, commutator, multiply, normal_order, ExpAdError, Monomial, Morphism, UEAElement,
};
use crate::scalar::{ParamPoint, Rational};

/// Sentinel window for elements that are exactly known.
pub const EXACT_WINDOW: i64 = i64::MAX / 4;

/// Subtract a cost from a window, keeping exact elements exact.
pub fn shrink_window(window: i64, cost: i64) -> i64 {
    if window >= EXACT_WINDOW {
        EXACT_WINDOW
    } else {
        window - cost
    }
}

/// Errors from the completion model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("cutoff {cutoff} is too small; need at least {needed}")]
    CutoffTooSmall { cutoff: i64, needed: i64 },
    #[error("insufficient truncation: window {available} below required {required}")]
    InsufficientTruncation { available: i64, required: i64 },
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    #[error("bracket of two genuinely infinite elements is not modeled")]
    UnsupportedBracket,
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("{0}")]
    Algebra(String),
}

impl From<ExpAdError> for CompletionError {
    fn from(e: ExpAdError) -> Self {
        CompletionError::Algebra(e.to_string())
    }
}

/// Substitutes the numeric central charge for every `c` exponent.
pub fn specialize_central(u: &UEAElement, c_value: &Rational) -> UEAElement {
    let mut out = UEAElement::zero();
    for (m, coeff) in u.iter() {
        if m.c_power() == 0 {
            out.add_term(m.clone(), coeff.clone());
        } else {
            let scaled = coeff * &c_value.pow(m.c_power());
            let stripped = normal_order(m.factors()).scale(&scaled);
            out = out.add(&stripped);
        }
    }
    out
}

/// One two-factor summand family `coeff * sum_{s >= s_start}
/// E[r1,c1](s+p) * E[r2,c2](-s+q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPattern {
    pub r1: u32,
    pub c1: u32,
    pub r2: u32,
    pub c2: u32,
    pub p: i64,
    pub q: i64,
    pub s_start: i64,
    pub coeff: Rational,
}

impl SumPattern {
    pub fn new(alg: &LoopAlgebra, r1: i64, c1: i64, r2: i64, c2: i64, p: i64, q: i64) -> Self {
        SumPattern {
            r1: alg.index(r1),
            c1: alg.index(c1),
            r2: alg.index(r2),
            c2: alg.index(c2),
            p,
            q,
            s_start: 0,
            coeff: Rational::one(),
        }
    }

    pub fn scaled(mut self, coeff: Rational) -> Self {
        self.coeff = coeff;
        self
    }

    fn max_offset(&self) -> i64 {
        self.p.abs().max(self.q.abs()).max(self.s_start.abs())
    }
}

/// A truncated element together with its guaranteed-agreement window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowedElement {
    pub body: UEAElement,
    pub window: i64,
}

impl WindowedElement {
    pub fn new(body: UEAElement, window: i64) -> Self {
        WindowedElement { body, window }
    }

    /// A finite element known in full.
    pub fn exact(body: UEAElement) -> Self {
        WindowedElement {
            body,
            window: EXACT_WINDOW,
        }
    }

    pub fn zero() -> Self {
        WindowedElement::exact(UEAElement::zero())
    }

    pub fn is_exact(&self) -> bool {
        self.window >= EXACT_WINDOW
    }

    pub fn shrunk_window(&self, cost: i64) -> i64 {
        shrink_window(self.window, cost)
    }

    pub fn add(&self, other: &WindowedElement) -> WindowedElement {
        WindowedElement {
            body: self.body.add(&other.body),
            window: self.window.min(other.window),
        }
    }

    pub fn sub(&self, other: &WindowedElement) -> WindowedElement {
        WindowedElement {
            body: self.body.sub(&other.body),
            window: self.window.min(other.window),
        }
    }

    pub fn scale(&self, r: &Rational) -> WindowedElement {
        WindowedElement {
            body: self.body.scale(r),
            window: self.window,
        }
    }

    pub fn neg(&self) -> WindowedElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for WindowedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{} (exact)", self.body)
        } else {
            write!(f, "{} (window {})", self.body, self.window)
        }
    }
}

/// Materializes sum patterns at a cutoff on top of a finite part.
///
/// Every omitted `s > cutoff` summand must both lie beyond the window and be
/// already normal-ordered, so the cutoff has to cover `s_start` and the
/// crossover point `(q - p) / 2` of each pattern.
pub fn materialize(
    patterns: &[SumPattern],
    finite_part: &UEAElement,
    cutoff: i64,
    c_value: &Rational,
) -> Result<WindowedElement, CompletionError> {
    let mut window = cutoff;
    let mut body = finite_part.clone();
    for pat in patterns {
        if cutoff < pat.s_start {
            return Err(CompletionError::CutoffTooSmall {
                cutoff,
                needed: pat.s_start,
            });
        }
        let crossover = pat.q - pat.p;
        if 2 * (cutoff + 1) < crossover {
            return Err(CompletionError::CutoffTooSmall {
                cutoff,
                needed: crossover.div_euclid(2),
            });
        }
        window = window.min(cutoff - pat.max_offset());
        for s in pat.s_start..=cutoff {
            let word = [
                crate::loopalg::LoopGen::E {
                    row: pat.r1,
                    col: pat.c1,
                    deg: s + pat.p,
                },
                crate::loopalg::LoopGen::E {
                    row: pat.r2,
                    col: pat.c2,
                    deg: -s + pat.q,
                },
            ];
            body = body.add(&normal_order(&word).scale(&pat.coeff));
        }
    }
    Ok(WindowedElement::new(
        specialize_central(&body, c_value),
        window,
    ))
}

/// Bracket of a finite element with a windowed one; the window pays the
/// degree mass of the finite side.
pub fn w_bracket(x: &UEAElement, a: &WindowedElement) -> WindowedElement {
    WindowedElement {
        body: commutator(x, &a.body),
        window: a.shrunk_window(x.degree_mass()),
    }
}

/// Anticommutator of a finite element with a windowed one.
pub fn w_anticommutator(x: &UEAElement, a: &WindowedElement) -> WindowedElement {
    WindowedElement {
        body: pbw::anticommutator(x, &a.body),
        window: a.shrunk_window(x.degree_mass()),
    }
}

/// Product with a finite element on the chosen side.
pub fn w_multiply(x: &UEAElement, a: &WindowedElement, finite_on_left: bool) -> WindowedElement {
    let body = if finite_on_left {
        multiply(x, &a.body)
    } else {
        multiply(&a.body, x)
    };
    WindowedElement {
        body,
        window: a.shrunk_window(x.degree_mass()),
    }
}

/// Exponential adjoint on a windowed element; the window pays the observed
/// nilpotency depth times the degree reach of `x`.
pub fn w_exp_ad(
    x: &LieElement,
    a: &WindowedElement,
    max_steps: usize,
) -> Result<WindowedElement, CompletionError> {
    let (body, depth) = pbw::exp_ad_depth(x, &a.body, max_steps)?;
    let cost = depth as i64 * x.max_abs_degree();
    Ok(WindowedElement {
        body,
        window: a.shrunk_window(cost),
    })
}

/// Outcome of comparing two windowed elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqReport {
    pub pass: bool,
    pub compared_window: i64,
    /// In-window discrepancies; nonempty exactly when the check fails.
    pub violations: Vec<(Monomial, Rational)>,
    /// Out-of-window discrepancies, kept for diagnostics only.
    pub residual: Vec<(Monomial, Rational)>,
}

/// Compares two windowed elements on the common guaranteed region.
pub fn window_equal(
    a: &WindowedElement,
    b: &WindowedElement,
    required_window: i64,
) -> Result<EqReport, CompletionError> {
    let compared_window = a.window.min(b.window);
    if compared_window < required_window {
        return Err(CompletionError::InsufficientTruncation {
            available: compared_window,
            required: required_window,
        });
    }
    let diff = a.body.sub(&b.body);
    let mut violations = Vec::new();
    let mut residual = Vec::new();
    for (m, coeff) in diff.iter() {
        if m.span() <= compared_window {
            violations.push((m.clone(), coeff.clone()));
        } else {
            residual.push((m.clone(), coeff.clone()));
        }
    }
    Ok(EqReport {
        pass: violations.is_empty(),
        compared_window,
        violations,
        residual,
    })
}

/// A generator of degree at most one, as named in expression trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YangianGen {
    XPlus { i: i64, r: u8 },
    XMinus { i: i64, r: u8 },
    H { i: i64, r: u8 },
    HTilde { i: i64 },
}

impl fmt::Display for YangianGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YangianGen::XPlus { i, r } => write!(f, "x[{i},{r}]+"),
            YangianGen::XMinus { i, r } => write!(f, "x[{i},{r}]-"),
            YangianGen::H { i, r } => write!(f, "h[{i},{r}]"),
            YangianGen::HTilde { i } => write!(f, "ht[{i}]"),
        }
    }
}

/// Expression over degree-<=1 generators, evaluated only through the
/// evaluation map. `Classical` embeds a finite element of the degree-zero
/// subalgebra (on which evaluation is the identity); `Constant` is a scalar.
#[derive(Debug, Clone, PartialEq)]
pub enum YangianExpr {
    Gen(YangianGen),
    Bracket(Box<YangianExpr>, Box<YangianExpr>),
    Anticommutator(Box<YangianExpr>, Box<YangianExpr>),
    Sum(Vec<YangianExpr>),
    Scale(Rational, Box<YangianExpr>),
    BraidApplied(BraidOp, Box<YangianExpr>),
    OmegaApplied(Box<YangianExpr>),
    Classical(UEAElement),
    Constant(Rational),
}

impl YangianExpr {
    pub fn x_plus(i: i64, r: u8) -> Self {
        YangianExpr::Gen(YangianGen::XPlus { i, r })
    }

    pub fn x_minus(i: i64, r: u8) -> Self {
        YangianExpr::Gen(YangianGen::XMinus { i, r })
    }

    pub fn h(i: i64, r: u8) -> Self {
        YangianExpr::Gen(YangianGen::H { i, r })
    }

    pub fn htilde(i: i64) -> Self {
        YangianExpr::Gen(YangianGen::HTilde { i })
    }

    pub fn bracket(a: YangianExpr, b: YangianExpr) -> Self {
        YangianExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn anti(a: YangianExpr, b: YangianExpr) -> Self {
        YangianExpr::Anticommutator(Box::new(a), Box::new(b))
    }

    pub fn scale(r: Rational, e: YangianExpr) -> Self {
        YangianExpr::Scale(r, Box::new(e))
    }

    pub fn braid(op: BraidOp, e: YangianExpr) -> Self {
        YangianExpr::BraidApplied(op, Box::new(e))
    }

    pub fn omega(e: YangianExpr) -> Self {
        YangianExpr::OmegaApplied(Box::new(e))
    }

    /// Square of a generator expression, via the anticommutator.
    pub fn square(e: YangianExpr) -> Self {
        YangianExpr::scale(Rational::new(1, 2), YangianExpr::anti(e.clone(), e))
    }
}

/// Evaluation context: rank, parameter point and truncation cutoff.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub alg: LoopAlgebra,
    pub params: ParamPoint,
    pub cutoff: i64,
}

impl Evaluator {
    pub fn new(alg: LoopAlgebra, params: ParamPoint, cutoff: i64) -> Result<Self, CompletionError> {
        if params.c_value.is_none() {
            return Err(CompletionError::DegenerateParameters(
                "the evaluation map needs the central-charge regime".into(),
            ));
        }
        if params.n != alg.n() {
            return Err(CompletionError::DegenerateParameters(format!(
                "parameter rank {} does not match algebra rank {}",
                params.n,
                alg.n()
            )));
        }
        if cutoff < 2 {
            return Err(CompletionError::CutoffTooSmall {
                cutoff,
                needed: 2,
            });
        }
        Ok(Evaluator {
            alg,
            params,
            cutoff,
        })
    }

    fn c_value(&self) -> &Rational {
        self.params.c()
    }

    /// Collapse central exponents into the numeric central charge.
    pub fn specialize(&self, u: &UEAElement) -> UEAElement {
        specialize_central(u, self.c_value())
    }

    /// Straightening inside products can mint fresh central factors; collapse
    /// them without touching the window.
    pub fn respecialized(&self, w: WindowedElement) -> WindowedElement {
        WindowedElement {
            body: self.specialize(&w.body),
            window: w.window,
        }
    }

    fn lie_specialized(&self, a: &LieElement) -> UEAElement {
        self.specialize(&UEAElement::from_lie(a).expect("no degree operator here"))
    }

    fn chevalley_image(&self, i: i64, kind: ChevalleyKind) -> UEAElement {
        self.lie_specialized(&self.alg.chevalley(i, kind))
    }

    fn hbar(&self) -> &Rational {
        &self.params.hbar
    }

    /// `1 + k eps2` with `k = N` at the affine node and `k = i` otherwise.
    fn degree_one_scalar(&self, i: i64) -> Rational {
        let node = self.alg.cartan.node(i);
        let k = if node == 0 { self.alg.n() } else { node };
        &Rational::one() + &(&Rational::integer(k as i64) * &self.params.eps2)
    }

    /// Evaluation image of a single generator.
    pub fn ev_gen(&self, g: YangianGen) -> Result<WindowedElement, CompletionError> {
        let n = self.alg.n() as i64;
        match g {
            YangianGen::XPlus { i, r: 0 } => Ok(WindowedElement::exact(
                self.chevalley_image(i, ChevalleyKind::Plus),
            )),
            YangianGen::XMinus { i, r: 0 } => Ok(WindowedElement::exact(
                self.chevalley_image(i, ChevalleyKind::Minus),
            )),
            YangianGen::H { i, r: 0 } => Ok(WindowedElement::exact(
                self.chevalley_image(i, ChevalleyKind::Cartan),
            )),
            YangianGen::XPlus { i, r: 1 } => {
                let node = self.alg.cartan.node(i) as i64;
                let finite = self
                    .chevalley_image(i, ChevalleyKind::Plus)
                    .scale(&self.degree_one_scalar(i));
                let mut patterns = Vec::new();
                if node == 0 {
                    for k in 1..=n {
                        patterns.push(
                            SumPattern::new(&self.alg, k, 1, n, k, 1, 0)
                                .scaled(self.hbar().clone()),
                        );
                    }
                } else {
                    for k in 1..=node {
                        patterns.push(
                            SumPattern::new(&self.alg, k, node + 1, node, k, 0, 0)
                                .scaled(self.hbar().clone()),
                        );
                    }
                    for k in node + 1..=n {
                        patterns.push(
                            SumPattern::new(&self.alg, k, node + 1, node, k, 1, -1)
                                .scaled(self.hbar().clone()),
                        );
                    }
                }
                materialize(&patterns, &finite, self.cutoff, self.c_value())
            }
            YangianGen::XMinus { i, r: 1 } => {
                let node = self.alg.cartan.node(i) as i64;
                let finite = self
                    .chevalley_image(i, ChevalleyKind::Minus)
                    .scale(&self.degree_one_scalar(i));
                let mut patterns = Vec::new();
                if node == 0 {
                    for k in 1..=n {
                        patterns.push(
                            SumPattern::new(&self.alg, k, n, 1, k, 0, -1)
                                .scaled(self.hbar().clone()),
                        );
                    }
                } else {
                    for k in 1..=node {
                        patterns.push(
                            SumPattern::new(&self.alg, k, node, node + 1, k, 0, 0)
                                .scaled(self.hbar().clone()),
                        );
                    }
                    for k in node + 1..=n {
                        patterns.push(
                            SumPattern::new(&self.alg, k, node, node + 1, k, 1, -1)
                                .scaled(self.hbar().clone()),
                        );
                    }
                }
                materialize(&patterns, &finite, self.cutoff, self.c_value())
            }
            YangianGen::H { i, r: 1 } => {
                let node = self.alg.cartan.node(i) as i64;
                let mut finite = self
                    .chevalley_image(i, ChevalleyKind::Cartan)
                    .scale(&self.degree_one_scalar(i));
                if node == 0 {
                    // - hbar E[N,N] (E[1,1] - c)
                    let e_nn = self.lie_specialized(&self.alg.e_elem(n, n, 0));
                    let e_11_minus_c = {
                        let mut x = self.alg.e_elem(1, 1, 0);
                        x.add_term(crate::loopalg::LoopGen::Central, -Rational::one());
                        self.lie_specialized(&x)
                    };
                    finite =
                        finite.sub(&multiply(&e_nn, &e_11_minus_c).scale(self.hbar()));
                } else {
                    let e_ii = self.lie_specialized(&self.alg.e_elem(node, node, 0));
                    let e_jj = self.lie_specialized(&self.alg.e_elem(node + 1, node + 1, 0));
                    finite = finite.sub(&multiply(&e_ii, &e_jj).scale(self.hbar()));
                }
                let mut patterns = diagonal_patterns(&self.alg, node, self.hbar().clone());
                patterns.extend(diagonal_patterns_next(&self.alg, node, -self.hbar()));
                materialize(&patterns, &finite, self.cutoff, self.c_value())
            }
            YangianGen::HTilde { i } => {
                let h1 = self.ev_gen(YangianGen::H { i, r: 1 })?;
                let h0 = self.chevalley_image(i, ChevalleyKind::Cartan);
                let square = multiply(&h0, &h0);
                let correction = WindowedElement::exact(
                    square.scale(&-self.params.hbar_half()),
                );
                Ok(h1.add(&correction))
            }
            other => Err(CompletionError::UnsupportedGenerator(other.to_string())),
        }
    }

    /// Evaluates an expression tree, pushing braid and transpose nodes
    /// through the evaluation map.
    pub fn ev_expr(&self, e: &YangianExpr) -> Result<WindowedElement, CompletionError> {
        match e {
            YangianExpr::Gen(g) => self.ev_gen(*g),
            YangianExpr::Constant(r) => Ok(WindowedElement::exact(UEAElement::scalar(r.clone()))),
            YangianExpr::Classical(u) => Ok(WindowedElement::exact(self.specialize(u))),
            YangianExpr::Sum(parts) => {
                let mut acc = WindowedElement::zero();
                for p in parts {
                    acc = acc.add(&self.ev_expr(p)?);
                }
                Ok(acc)
            }
            YangianExpr::Scale(r, inner) => Ok(self.ev_expr(inner)?.scale(r)),
            YangianExpr::Bracket(l, r) => {
                let el = self.ev_expr(l)?;
                let er = self.ev_expr(r)?;
                let out = if el.is_exact() {
                    w_bracket(&el.body, &er)
                } else if er.is_exact() {
                    w_bracket(&er.body, &el).neg()
                } else {
                    return Err(CompletionError::UnsupportedBracket);
                };
                Ok(self.respecialized(out))
            }
            YangianExpr::Anticommutator(l, r) => {
                let el = self.ev_expr(l)?;
                let er = self.ev_expr(r)?;
                let out = if el.is_exact() {
                    w_anticommutator(&el.body, &er)
                } else if er.is_exact() {
                    w_anticommutator(&er.body, &el)
                } else {
                    return Err(CompletionError::UnsupportedBracket);
                };
                Ok(self.respecialized(out))
            }
            YangianExpr::BraidApplied(op, inner) => {
                let ev = self.ev_expr(inner)?;
                let image = braid::apply_op_windowed(&self.alg, op, &ev)?;
                Ok(WindowedElement {
                    body: self.specialize(&image.body),
                    window: image.window,
                })
            }
            YangianExpr::OmegaApplied(inner) => {
                let ev = self.ev_expr(inner)?;
                let omega = Morphism::omega(self.alg);
                let body = omega
                    .apply(&ev.body)
                    .map_err(|e| CompletionError::Algebra(e.to_string()))?;
                Ok(WindowedElement {
                    body: self.specialize(&body),
                    window: ev.window,
                })
            }
        }
    }
}

/// The patterns of `sum_s E[k,i](..) E[i,k](..)` attached to the diagonal
/// image at node i (taking i = N for the affine node).
pub fn diagonal_patterns(alg: &LoopAlgebra, node: i64, coeff: Rational) -> Vec<SumPattern> {
    let n = alg.n() as i64;
    let mut out = Vec::new();
    if node == 0 {
        for k in 1..=n {
            out.push(SumPattern::new(alg, k, n, n, k, 0, 0).scaled(coeff.clone()));
        }
    } else {
        for k in 1..=node {
            out.push(SumPattern::new(alg, k, node, node, k, 0, 0).scaled(coeff.clone()));
        }
        for k in node + 1..=n {
            out.push(SumPattern::new(alg, k, node, node, k, 1, -1).scaled(coeff.clone()));
        }
    }
    out
}

/// The companion patterns at node i+1 (the subtracted half of the diagonal
/// image; for the affine node these sit one loop degree up).
pub fn diagonal_patterns_next(alg: &LoopAlgebra, node: i64, coeff: Rational) -> Vec<SumPattern> {
    let n = alg.n() as i64;
    let mut out = Vec::new();
    if node == 0 {
        for k in 1..=n {
            out.push(SumPattern::new(alg, k, 1, 1, k, 1, -1).scaled(coeff.clone()));
        }
    } else {
        for k in 1..=node {
            out.push(SumPattern::new(alg, k, node + 1, node + 1, k, 0, 0).scaled(coeff.clone()));
        }
        for k in node + 1..=n {
            out.push(SumPattern::new(alg, k, node + 1, node + 1, k, 1, -1).scaled(coeff.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamPoint;

    fn setup(n: usize, cutoff: i64) -> Evaluator {
        let alg = LoopAlgebra::new(n);
        let params =
            ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), n, true).unwrap();
        Evaluator::new(alg, params, cutoff).unwrap()
    }

    #[test]
    fn materialize_counts_and_window() {
        let ev = setup(3, 5);
        let pat = SumPattern::new(&ev.alg, 1, 1, 2, 1, 1, 0);
        let got = materialize(&[pat], &UEAElement::zero(), 5, ev.params.c()).unwrap();
        assert_eq!(got.body.len(), 6);
        assert_eq!(got.window, 4);
    }

    #[test]
    fn materialize_finite_only_is_exact_to_cutoff() {
        let ev = setup(3, 7);
        let h1 = UEAElement::from_lie(&ev.alg.h(1)).unwrap();
        let got = materialize(&[], &h1, 7, ev.params.c()).unwrap();
        assert_eq!(got.body, h1);
        assert_eq!(got.window, 7);
    }

    #[test]
    fn materialize_zero_mode_family() {
        let ev = setup(4, 6);
        let pats = diagonal_patterns(&ev.alg, 0, Rational::one());
        let got = materialize(&pats, &UEAElement::zero(), 6, ev.params.c()).unwrap();
        // 7 values of s for each of the N columns
        assert_eq!(got.body.len(), 7 * 4);
        assert_eq!(got.window, 6);
    }

    #[test]
    fn cutoff_too_small() {
        let ev = setup(3, 5);
        let mut pat = SumPattern::new(&ev.alg, 1, 2, 2, 1, 0, 0);
        pat.s_start = 9;
        let err = materialize(&[pat], &UEAElement::zero(), 5, ev.params.c());
        assert!(matches!(
            err,
            Err(CompletionError::CutoffTooSmall { .. })
        ));
    }

    #[test]
    fn ev_degree_zero_is_exact() {
        let ev = setup(3, 4);
        let got = ev.ev_gen(YangianGen::XPlus { i: 1, r: 0 }).unwrap();
        assert!(got.is_exact());
        assert_eq!(
            got.body,
            UEAElement::from_lie(&ev.alg.e_elem(1, 2, 0)).unwrap()
        );
    }

    #[test]
    fn ev_affine_raising_generator() {
        let ev = setup(3, 4);
        let got = ev.ev_gen(YangianGen::XPlus { i: 0, r: 1 }).unwrap();
        assert_eq!(got.window, 3);
        // finite part (1 + 3 eps2) E[3,1](1) plus 3 patterns * 5 values of s
        let one_term = ev.alg.e(3, 1, 1);
        let finite_coeff = got.body.coeff(&Monomial::from_factors(vec![one_term]));
        let expected = &Rational::one() + &(&Rational::integer(3) * &ev.params.eps2);
        assert_eq!(finite_coeff, expected);
        assert_eq!(got.body.len(), 1 + 15);
    }

    #[test]
    fn ev_affine_cartan_has_central_correction() {
        let ev = setup(3, 4);
        let got = ev.ev_gen(YangianGen::H { i: 0, r: 1 }).unwrap();
        // coefficient of E[1,1](0)*E[3,3](0) is -hbar
        let m = Monomial::from_factors(vec![ev.alg.e(1, 1, 0), ev.alg.e(3, 3, 0)]);
        assert_eq!(got.body.coeff(&m), -&ev.params.hbar);
        // coefficient of the lone E[3,3](0): (1 + N eps2) + hbar * c
        let single = Monomial::from_factors(vec![ev.alg.e(3, 3, 0)]);
        let expected = &ev.degree_one_scalar(0) + &(&ev.params.hbar * ev.params.c());
        assert_eq!(got.body.coeff(&single), expected);
    }

    #[test]
    fn window_ops() {
        let ev = setup(3, 6);
        let a = ev.ev_gen(YangianGen::XPlus { i: 1, r: 1 }).unwrap();
        let sum = a.add(&WindowedElement::zero());
        assert_eq!(sum.window, a.window);
        assert_eq!(sum.body, a.body);
        let b = WindowedElement::new(a.body.clone(), 3);
        assert_eq!(a.add(&b).window, 3);
        let scaled = a.scale(&Rational::zero());
        assert!(scaled.body.is_zero());
        assert_eq!(scaled.window, a.window);
    }

    #[test]
    fn bracket_of_degree_zero_pair_is_cartan_image() {
        let ev = setup(3, 6);
        let expr = YangianExpr::bracket(YangianExpr::x_plus(1, 0), YangianExpr::x_minus(1, 0));
        let got = ev.ev_expr(&expr).unwrap();
        assert!(got.is_exact());
        assert_eq!(got.body, ev.chevalley_image(1, ChevalleyKind::Cartan));
    }

    #[test]
    fn degree_one_bracket_recovers_cartan_loop_image() {
        // [x_{1,0}^+, ev(x_{1,1}^-)] must window-match ev(h_{1,1})
        let ev = setup(3, 6);
        let lhs = ev
            .ev_expr(&YangianExpr::bracket(
                YangianExpr::x_plus(1, 0),
                YangianExpr::x_minus(1, 1),
            ))
            .unwrap();
        let rhs = ev.ev_gen(YangianGen::H { i: 1, r: 1 }).unwrap();
        let report = window_equal(&lhs, &rhs, 2).unwrap();
        assert!(report.pass, "violations: {:?}", report.violations);
    }

    #[test]
    fn window_equal_insufficient() {
        let a = WindowedElement::new(UEAElement::one(), 2);
        let b = WindowedElement::new(UEAElement::one(), 2);
        let err = window_equal(&a, &b, 4);
        assert!(matches!(
            err,
            Err(CompletionError::InsufficientTruncation {
                available: 2,
                required: 4
            })
        ));
    }

    #[test]
    fn braid_node_matches_direct_application() {
        // pushing a braid word through the evaluation of x_{0,1}^+ agrees with
        // applying the same word to the materialized image
        let ev = setup(3, 6);
        let op = BraidOp::from_word(braid::w_word(3, 1).unwrap());
        let via_expr = ev
            .ev_expr(&YangianExpr::braid(op.clone(), YangianExpr::x_plus(0, 1)))
            .unwrap();
        let direct = {
            let base = ev.ev_gen(YangianGen::XPlus { i: 0, r: 1 }).unwrap();
            let image = braid::apply_op_windowed(&ev.alg, &op, &base).unwrap();
            WindowedElement {
                body: ev.specialize(&image.body),
                window: image.window,
            }
        };
        let report = window_equal(&via_expr, &direct, 2).unwrap();
        assert!(report.pass);
        assert_eq!(via_expr.window, direct.window);
    }

    #[test]
    fn omega_node_swaps_raising_and_lowering_images() {
        let ev = setup(3, 6);
        let lhs = ev
            .ev_expr(&YangianExpr::omega(YangianExpr::x_plus(1, 1)))
            .unwrap();
        let rhs = ev.ev_gen(YangianGen::XMinus { i: 1, r: 1 }).unwrap();
        let report = window_equal(&lhs, &rhs, 2).unwrap();
        assert!(report.pass, "violations: {:?}", report.violations);
    }
}
