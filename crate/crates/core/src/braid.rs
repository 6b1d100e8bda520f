//! Braid operators `T_i = exp(ad x_i^+) exp(ad -x_i^-) exp(ad x_i^+)`, Weyl
//! words, and the translation-word operators used to reach loop degree m.
//!
//! A word `[i_1, ..., i_l]` acts as the composition `T_{i_1} ∘ ... ∘ T_{i_l}`,
//! rightmost letter first. Translation operators for node `i` are realized by
//! conjugating the node-1 word with the rotation map instead of deriving new
//! reduced words.
//!
//! Window bookkeeping for the completion model is operator-level: a composite
//! operator is probed on every matrix unit at two loop degrees, and the
//! largest observed |degree shift| is subtracted from the window. Matrix-part
//! shifts are degree-uniform (the bracket shifts all loop degrees alike), so
//! the two probes must agree; this is asserted.

use thiserror::Error;

use crate::completion::WindowedElement;
use crate::loopalg::{LieElement, LoopAlgebra, LoopGen, NotNilpotent};
use crate::pbw::{self, ExpAdError, UEAElement, DEFAULT_MAX_STEPS};

/// A word in the simple reflections, letters mod N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord(pub Vec<i64>);

impl WeylWord {
    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self * other` as group elements.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        WeylWord(letters)
    }

    pub fn repeat(&self, times: usize) -> WeylWord {
        let mut letters = Vec::with_capacity(self.0.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.0);
        }
        WeylWord(letters)
    }
}

/// A braid-word operator conjugated by a power of the rotation map:
/// `rho^{-e} ∘ T_word ∘ rho^{e}` where `e = rho_pre`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidOp {
    pub word: WeylWord,
    pub rho_pre: i64,
}

impl BraidOp {
    pub fn from_word(word: WeylWord) -> Self {
        BraidOp { word, rho_pre: 0 }
    }

    pub fn single(i: i64) -> Self {
        BraidOp::from_word(WeylWord(vec![i]))
    }
}

/// Errors from braid application.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error(transparent)]
    NotNilpotent(#[from] NotNilpotent),
    #[error("braid operators are not defined on the degree operator here")]
    DegreeOperator,
    #[error("translation multiplicity must be at least 1, got {0}")]
    InvalidMultiplicity(i64),
}

impl From<ExpAdError> for BraidError {
    fn from(e: ExpAdError) -> Self {
        match e {
            ExpAdError::NotNilpotent(n) => BraidError::NotNilpotent(n),
            ExpAdError::Degree(_) => BraidError::DegreeOperator,
        }
    }
}

/// `T_i` on a Lie element. The degree operator is allowed here: its image is
/// computed by the same exponential adjoints.
pub fn braid_t_lie(alg: &LoopAlgebra, i: i64, a: &LieElement) -> Result<LieElement, BraidError> {
    let xp = alg.x_plus(i);
    let xm_neg = alg.x_minus(i).neg();
    let a = alg.exp_ad(&xp, a, DEFAULT_MAX_STEPS)?;
    let a = alg.exp_ad(&xm_neg, &a, DEFAULT_MAX_STEPS)?;
    Ok(alg.exp_ad(&xp, &a, DEFAULT_MAX_STEPS)?)
}

/// `T_i` on an enveloping-algebra element.
pub fn braid_t(alg: &LoopAlgebra, i: i64, a: &UEAElement) -> Result<UEAElement, BraidError> {
    let xp = alg.x_plus(i);
    let xm_neg = alg.x_minus(i).neg();
    let a = pbw::exp_ad(&xp, a, DEFAULT_MAX_STEPS)?;
    let a = pbw::exp_ad(&xm_neg, &a, DEFAULT_MAX_STEPS)?;
    Ok(pbw::exp_ad(&xp, &a, DEFAULT_MAX_STEPS)?)
}

/// `T_i^{-1}`, in the `exp(ad x^-) exp(ad -x^+) exp(ad x^-)` form.
pub fn braid_t_inv_lie(
    alg: &LoopAlgebra,
    i: i64,
    a: &LieElement,
) -> Result<LieElement, BraidError> {
    let xm = alg.x_minus(i);
    let xp_neg = alg.x_plus(i).neg();
    let a = alg.exp_ad(&xm, a, DEFAULT_MAX_STEPS)?;
    let a = alg.exp_ad(&xp_neg, &a, DEFAULT_MAX_STEPS)?;
    Ok(alg.exp_ad(&xm, &a, DEFAULT_MAX_STEPS)?)
}

/// Word application on a Lie element, rightmost letter first.
pub fn apply_word_lie(
    alg: &LoopAlgebra,
    word: &WeylWord,
    a: &LieElement,
) -> Result<LieElement, BraidError> {
    let mut acc = a.clone();
    for &i in word.0.iter().rev() {
        acc = braid_t_lie(alg, i, &acc)?;
    }
    Ok(acc)
}

/// Word application on an enveloping-algebra element.
pub fn apply_word(
    alg: &LoopAlgebra,
    word: &WeylWord,
    a: &UEAElement,
) -> Result<UEAElement, BraidError> {
    let mut acc = a.clone();
    for &i in word.0.iter().rev() {
        acc = braid_t(alg, i, &acc)?;
    }
    Ok(acc)
}

fn rho_power_lie(alg: &LoopAlgebra, e: i64, a: &LieElement) -> Result<LieElement, BraidError> {
    let mut acc = a.clone();
    for _ in 0..e.unsigned_abs() {
        acc = if e >= 0 {
            alg.rho(&acc).map_err(|_| BraidError::DegreeOperator)?
        } else {
            alg.rho_inv(&acc).map_err(|_| BraidError::DegreeOperator)?
        };
    }
    Ok(acc)
}

fn rho_power(alg: &LoopAlgebra, e: i64, a: &UEAElement) -> Result<UEAElement, BraidError> {
    let kind = if e >= 0 {
        pbw::MorphismKind::Rho
    } else {
        pbw::MorphismKind::RhoInv
    };
    let m = pbw::Morphism::new(*alg, kind);
    let mut acc = a.clone();
    for _ in 0..e.unsigned_abs() {
        acc = m.apply(&acc).map_err(|_| BraidError::DegreeOperator)?;
    }
    Ok(acc)
}

/// Composite operator application on a Lie element.
pub fn apply_op_lie(
    alg: &LoopAlgebra,
    op: &BraidOp,
    a: &LieElement,
) -> Result<LieElement, BraidError> {
    let a = rho_power_lie(alg, op.rho_pre, a)?;
    let a = apply_word_lie(alg, &op.word, &a)?;
    rho_power_lie(alg, -op.rho_pre, &a)
}

/// Composite operator application on an enveloping-algebra element.
pub fn apply_op(
    alg: &LoopAlgebra,
    op: &BraidOp,
    a: &UEAElement,
) -> Result<UEAElement, BraidError> {
    let a = rho_power(alg, op.rho_pre, a)?;
    let a = apply_word(alg, &op.word, &a)?;
    rho_power(alg, -op.rho_pre, &a)
}

/// Largest |loop-degree shift| the composite operator inflicts on any matrix
/// unit; the window cost of applying it to a truncated element.
///
/// Probed at two base degrees; matrix-part shifts are degree-uniform, so the
/// probes must agree.
pub fn op_shift(alg: &LoopAlgebra, op: &BraidOp) -> Result<i64, BraidError> {
    let n = alg.n() as i64;
    let mut max_shift = 0i64;
    for row in 1..=n {
        for col in 1..=n {
            let mut shifts = [0i64, 0];
            for (slot, base) in [0i64, 1].into_iter().enumerate() {
                let image = apply_op_lie(alg, op, &alg.e_elem(row, col, base))?;
                shifts[slot] = image
                    .iter()
                    .filter(|(g, _)| matches!(g, LoopGen::E { .. }))
                    .map(|(g, _)| (g.loop_degree() - base).abs())
                    .max()
                    .unwrap_or(0);
            }
            assert_eq!(
                shifts[0], shifts[1],
                "degree shift of a braid word must not depend on the base degree"
            );
            max_shift = max_shift.max(shifts[0]);
        }
    }
    Ok(max_shift)
}

/// Composite operator on a windowed element, with the probe-derived cost.
pub fn apply_op_windowed(
    alg: &LoopAlgebra,
    op: &BraidOp,
    a: &WindowedElement,
) -> Result<WindowedElement, BraidError> {
    let shift = op_shift(alg, op)?;
    let body = apply_op(alg, op, &a.body)?;
    Ok(WindowedElement::new(body, a.shrunk_window(shift)))
}

/// `T_i` on a windowed element.
pub fn braid_t_windowed(
    alg: &LoopAlgebra,
    i: i64,
    a: &WindowedElement,
) -> Result<WindowedElement, BraidError> {
    apply_op_windowed(alg, &BraidOp::single(i), a)
}

/// The reduced word for the translation by the negated second simple root:
/// `[2, 3, ..., N-1, 0, 1, 0, N-1, ..., 3]`.
pub fn t_alpha2_word(n: usize) -> WeylWord {
    let n = n as i64;
    let mut letters: Vec<i64> = (2..n).collect();
    letters.push(0);
    letters.push(1);
    letters.push(0);
    letters.extend((3..n).rev());
    WeylWord(letters)
}

/// The word `w(1, m)`: m-1 copies of the translation word followed by
/// `[2, 3, ..., N-1]`.
pub fn w_word(n: usize, m: i64) -> Result<WeylWord, BraidError> {
    if m < 1 {
        return Err(BraidError::InvalidMultiplicity(m));
    }
    let tail = WeylWord((2..n as i64).collect());
    Ok(t_alpha2_word(n).repeat((m - 1) as usize).concat(&tail))
}

/// The operator `T_{w(i,m)}`, realized as `rho^{1-i} ∘ T_{w(1,m)} ∘ rho^{i-1}`.
pub fn translation_op(n: usize, i: i64, m: i64) -> Result<BraidOp, BraidError> {
    let alg = LoopAlgebra::new(n);
    let node = alg.cartan.node(i) as i64;
    Ok(BraidOp {
        word: w_word(n, m)?,
        rho_pre: node - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::multiply;
    use crate::scalar::Rational;

    fn uea(a: &LieElement) -> UEAElement {
        UEAElement::from_lie(a).unwrap()
    }

    #[test]
    fn braid_on_chevalley_generators() {
        let a = LoopAlgebra::new(4);
        assert_eq!(
            braid_t_lie(&a, 1, &a.h(2)).unwrap(),
            a.h(2).add(&a.h(1))
        );
        assert_eq!(
            braid_t_lie(&a, 1, &a.x_plus(1)).unwrap(),
            a.x_minus(1).neg()
        );
        assert_eq!(
            braid_t_lie(&a, 1, &a.e_elem(2, 2, 0)).unwrap(),
            a.e_elem(1, 1, 0)
        );
    }

    #[test]
    fn empty_word_is_identity() {
        let a = LoopAlgebra::new(3);
        let x = a.e_elem(1, 3, -2);
        assert_eq!(apply_word_lie(&a, &WeylWord::empty(), &x).unwrap(), x);
    }

    #[test]
    fn word_from_affine_node() {
        // T_0 T_1 (x_2^+) lands on the matrix unit E[N,3](1)
        let a = LoopAlgebra::new(4);
        let got = apply_word_lie(&a, &WeylWord(vec![0, 1]), &a.x_plus(2)).unwrap();
        assert_eq!(got, a.e_elem(4, 3, 1));
    }

    #[test]
    fn increasing_word_reaches_corner() {
        let a = LoopAlgebra::new(4);
        let word = WeylWord(vec![2, 3]);
        let got = apply_word_lie(&a, &word, &a.x_plus(0)).unwrap();
        assert_eq!(got, a.e_elem(2, 1, 1));
    }

    #[test]
    fn translation_word_layout() {
        assert_eq!(t_alpha2_word(4).0, vec![2, 3, 0, 1, 0, 3]);
        assert_eq!(t_alpha2_word(3).0, vec![2, 0, 1, 0]);
        assert_eq!(w_word(4, 1).unwrap().0, vec![2, 3]);
        assert_eq!(
            w_word(4, 2).unwrap().0,
            vec![2, 3, 0, 1, 0, 3, 2, 3]
        );
        assert!(w_word(4, 0).is_err());
    }

    #[test]
    fn classical_image_of_translated_generator() {
        // T_{w(1,m)}(x_0^+) = (-1)^{m-1} E[2,1](m)
        for n in [3usize, 4] {
            let a = LoopAlgebra::new(n);
            for m in 1..=3i64 {
                let op = translation_op(n, 1, m).unwrap();
                let got = apply_op_lie(&a, &op, &a.x_plus(0)).unwrap();
                let sign = if (m - 1) % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                assert_eq!(got, a.e_elem(2, 1, m).scale(&sign), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn translated_ops_for_other_nodes_via_rotation() {
        // T_{w(0,m)}(x_{N-1}^+) = (-1)^{m-1} E[1,N](m-1)
        let n = 4usize;
        let a = LoopAlgebra::new(n);
        for m in 1..=2i64 {
            let op = translation_op(n, 0, m).unwrap();
            let got = apply_op_lie(&a, &op, &a.x_plus(n as i64 - 1)).unwrap();
            let sign = if (m - 1) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            assert_eq!(got, a.e_elem(1, n as i64, m - 1).scale(&sign), "m={m}");
        }
    }

    #[test]
    fn op_shift_probe() {
        let a = LoopAlgebra::new(3);
        assert_eq!(op_shift(&a, &BraidOp::single(1)).unwrap(), 0);
        assert_eq!(op_shift(&a, &BraidOp::single(0)).unwrap(), 2);
        // T_i^4 = 1, so the composite shifts nothing at all
        let op = BraidOp::from_word(WeylWord(vec![0, 0, 0, 0]));
        assert_eq!(op_shift(&a, &op).unwrap(), 0);
    }

    #[test]
    fn braid_is_multiplicative_on_a_product() {
        let a = LoopAlgebra::new(3);
        let x = uea(&a.e_elem(1, 2, 1));
        let y = uea(&a.e_elem(3, 1, -1));
        let lhs = braid_t(&a, 0, &multiply(&x, &y)).unwrap();
        let rhs = multiply(
            &braid_t(&a, 0, &x).unwrap(),
            &braid_t(&a, 0, &y).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }
}
