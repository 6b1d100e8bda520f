//! The enveloping algebra of the loop extension: normal-ordered monomials,
//! products, adjoint derivations, exponential adjoints and multiplicative
//! extension of the transpose / rotation maps.
//!
//! Words are straightened into the fixed order (loop degree descending, then
//! row, then column) by adjacent swaps; every swap trades an inversion for
//! shorter words via the bracket, so straightening terminates. The central
//! element is kept as a commuting exponent on each monomial; the degree
//! operator is not allowed here.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::loopalg::{
    bracket_gens, DegreeOperatorUnsupported, LieElement, LoopAlgebra, LoopGen, NotNilpotent,
};
use crate::scalar::Rational;

/// A normal-ordered word of matrix-unit generators times a power of `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<LoopGen>,
    c_power: u32,
}

impl Ord for Monomial {
    /// Proper words sort lexicographically; purely central/scalar monomials
    /// sort last so they print at the tail of a sum.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.factors.is_empty(), &self.factors, self.c_power).cmp(&(
            other.factors.is_empty(),
            &other.factors,
            other.c_power,
        ))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn central_power(p: u32) -> Self {
        Monomial {
            factors: Vec::new(),
            c_power: p,
        }
    }

    /// Builds a monomial from an already normal-ordered word.
    pub fn from_factors(factors: Vec<LoopGen>) -> Self {
        let m = Monomial {
            factors,
            c_power: 0,
        };
        assert!(m.is_sorted(), "monomial out of normal order: {m}");
        m
    }

    pub fn factors(&self) -> &[LoopGen] {
        &self.factors
    }

    pub fn c_power(&self) -> u32 {
        self.c_power
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty() && self.c_power == 0
    }

    /// Largest |loop degree| among the factors.
    pub fn span(&self) -> i64 {
        self.factors
            .iter()
            .map(|g| g.loop_degree().abs())
            .max()
            .unwrap_or(0)
    }

    /// Sum of |loop degree| over the factors.
    pub fn degree_mass(&self) -> i64 {
        self.factors.iter().map(|g| g.loop_degree().abs()).sum()
    }

    fn is_sorted(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for g in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        if self.c_power > 0 {
            if !first {
                write!(f, "*")?;
            }
            if self.c_power == 1 {
                write!(f, "c")?;
            } else {
                write!(f, "c^{}", self.c_power)?;
            }
        }
        Ok(())
    }
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UEAElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl UEAElement {
    pub fn zero() -> Self {
        UEAElement::default()
    }

    pub fn one() -> Self {
        UEAElement::scalar(Rational::one())
    }

    pub fn scalar(r: Rational) -> Self {
        let mut out = UEAElement::zero();
        out.add_term(Monomial::unit(), r);
        out
    }

    /// Embeds a Lie element; fails on the degree operator.
    pub fn from_lie(a: &LieElement) -> Result<Self, DegreeOperatorUnsupported> {
        let mut out = UEAElement::zero();
        for (g, coeff) in a.iter() {
            match g {
                LoopGen::Degree => return Err(DegreeOperatorUnsupported),
                LoopGen::Central => out.add_term(Monomial::central_power(1), coeff.clone()),
                LoopGen::E { .. } => out.add_term(
                    Monomial {
                        factors: vec![*g],
                        c_power: 0,
                    },
                    coeff.clone(),
                ),
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(m.is_sorted(), "monomial out of normal order: {m}");
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (m, coeff) in other.iter() {
            out.add_term(m.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (m, coeff) in other.iter() {
            out.add_term(m.clone(), -coeff);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> UEAElement {
        if r.is_zero() {
            return UEAElement::zero();
        }
        let mut out = UEAElement::zero();
        for (m, coeff) in self.iter() {
            out.add_term(m.clone(), coeff * r);
        }
        out
    }

    pub fn neg(&self) -> UEAElement {
        self.scale(&-Rational::one())
    }

    /// Largest monomial span in the element.
    pub fn span(&self) -> i64 {
        self.terms.keys().map(Monomial::span).max().unwrap_or(0)
    }

    /// Largest per-monomial sum of |factor degrees|; the window cost of
    /// multiplying by this element.
    pub fn degree_mass(&self) -> i64 {
        self.terms
            .keys()
            .map(Monomial::degree_mass)
            .max()
            .unwrap_or(0)
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    /// Drops every monomial whose span exceeds `window`.
    pub fn truncate_to_span(&self, window: i64) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, coeff) in self.iter() {
            if m.span() <= window {
                out.add_term(m.clone(), coeff.clone());
            }
        }
        out
    }
}

impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() && !m.is_empty() {
                write!(f, "{m}")?;
            } else if m.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Straightens an arbitrary word of generators into canonical form.
///
/// `Central` factors are absorbed into the `c` exponent; `Degree` is not
/// supported in the enveloping algebra.
pub fn normal_order(word: &[LoopGen]) -> UEAElement {
    let mut factors = Vec::with_capacity(word.len());
    let mut c_power = 0u32;
    for g in word {
        match g {
            LoopGen::Central => c_power += 1,
            LoopGen::Degree => panic!("the degree operator has no normal form here"),
            LoopGen::E { .. } => factors.push(*g),
        }
    }
    let mut out = UEAElement::zero();
    let mut stack: Vec<(Vec<LoopGen>, u32, Rational)> = vec![(factors, c_power, Rational::one())];
    while let Some((w, cp, coeff)) = stack.pop() {
        match first_inversion(&w) {
            None => out.add_term(
                Monomial {
                    factors: w,
                    c_power: cp,
                },
                coeff,
            ),
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                for (g, bc) in bracket_gens(w[i], w[i + 1]).iter() {
                    let mut shorter: Vec<LoopGen> = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    let mut extra_c = 0;
                    match g {
                        LoopGen::Central => extra_c = 1,
                        LoopGen::E { .. } => shorter.push(*g),
                        LoopGen::Degree => unreachable!(),
                    }
                    shorter.extend_from_slice(&w[i + 2..]);
                    stack.push((shorter, cp + extra_c, &coeff * bc));
                }
                stack.push((swapped, cp, coeff));
            }
        }
    }
    out
}

fn first_inversion(w: &[LoopGen]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i].cmp(&w[i + 1]) == Ordering::Greater)
}

/// Product in the enveloping algebra: concatenate, then straighten.
pub fn multiply(a: &UEAElement, b: &UEAElement) -> UEAElement {
    let mut out = UEAElement::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let mut word: Vec<LoopGen> =
                Vec::with_capacity(ma.factors.len() + mb.factors.len());
            word.extend_from_slice(&ma.factors);
            word.extend_from_slice(&mb.factors);
            let scale = ca * cb;
            for (m, coeff) in normal_order(&word).iter() {
                let mut m = m.clone();
                m.c_power += ma.c_power + mb.c_power;
                out.add_term(m, coeff * &scale);
            }
        }
    }
    out
}

/// `ab + ba`.
pub fn anticommutator(a: &UEAElement, b: &UEAElement) -> UEAElement {
    multiply(a, b).add(&multiply(b, a))
}

/// `ab - ba`.
pub fn commutator(a: &UEAElement, b: &UEAElement) -> UEAElement {
    multiply(a, b).sub(&multiply(b, a))
}

/// Adjoint action of a Lie element, extended to monomials by the Leibniz
/// rule. The central part of `x` acts as zero; the degree operator is
/// rejected.
pub fn ad_action(
    x: &LieElement,
    a: &UEAElement,
) -> Result<UEAElement, DegreeOperatorUnsupported> {
    if x.involves_degree_operator() {
        return Err(DegreeOperatorUnsupported);
    }
    let mut out = UEAElement::zero();
    for (g, gc) in x.iter() {
        if matches!(g, LoopGen::Central) {
            continue;
        }
        for (m, mc) in a.iter() {
            let scale = gc * mc;
            for k in 0..m.factors.len() {
                for (r, rc) in bracket_gens(*g, m.factors[k]).iter() {
                    let mut word: Vec<LoopGen> = Vec::with_capacity(m.factors.len());
                    word.extend_from_slice(&m.factors[..k]);
                    let mut extra_c = 0;
                    match r {
                        LoopGen::Central => extra_c = 1,
                        LoopGen::E { .. } => word.push(*r),
                        LoopGen::Degree => unreachable!(),
                    }
                    word.extend_from_slice(&m.factors[k + 1..]);
                    let factor = rc * &scale;
                    for (res, res_c) in normal_order(&word).iter() {
                        let mut res = res.clone();
                        res.c_power += m.c_power + extra_c;
                        out.add_term(res, res_c * &factor);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Errors from [`exp_ad`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpAdError {
    #[error(transparent)]
    NotNilpotent(#[from] NotNilpotent),
    #[error(transparent)]
    Degree(#[from] DegreeOperatorUnsupported),
}

pub const DEFAULT_MAX_STEPS: usize = 16;

/// `exp(ad x)` on an enveloping-algebra element. Nilpotency is detected, not
/// assumed: the series must hit zero within `max_steps` applications.
pub fn exp_ad(
    x: &LieElement,
    a: &UEAElement,
    max_steps: usize,
) -> Result<UEAElement, ExpAdError> {
    let (result, _depth) = exp_ad_depth(x, a, max_steps)?;
    Ok(result)
}

/// Same as [`exp_ad`] but also reports the number of nonzero adjoint
/// applications (used for window bookkeeping).
pub fn exp_ad_depth(
    x: &LieElement,
    a: &UEAElement,
    max_steps: usize,
) -> Result<(UEAElement, usize), ExpAdError> {
    let mut total = a.clone();
    let mut term = a.clone();
    for step in 1..=max_steps {
        term = ad_action(x, &term)?.scale(&Rational::new(1, step as i64));
        if term.is_zero() {
            return Ok((total, step - 1));
        }
        total = total.add(&term);
    }
    Err(NotNilpotent { max_steps }.into())
}

/// Which closed-form (anti-)morphism to extend over the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    /// Transpose anti-automorphism `E[i,j](s) -> E[j,i](-s)`.
    Omega,
    /// Diagram rotation.
    Rho,
    /// Inverse diagram rotation.
    RhoInv,
}

/// Errors from applying a morphism.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Degree(#[from] DegreeOperatorUnsupported),
    #[error("generator images are not a Lie (anti-)morphism on [{a}, {b}]")]
    Inconsistent { a: LoopGen, b: LoopGen },
}

/// A Lie (anti-)morphism given on generators, extended multiplicatively.
///
/// The morphism law `spec([a,b]) = [spec(a), spec(b)]` (reversed for the
/// anti case) is validated lazily on the generator pairs that actually show
/// up in inputs, and each pair is checked once.
pub struct Morphism {
    alg: LoopAlgebra,
    kind: MorphismKind,
    checked: RefCell<BTreeSet<(LoopGen, LoopGen)>>,
}

impl Morphism {
    pub fn new(alg: LoopAlgebra, kind: MorphismKind) -> Self {
        Morphism {
            alg,
            kind,
            checked: RefCell::new(BTreeSet::new()),
        }
    }

    pub fn omega(alg: LoopAlgebra) -> Self {
        Morphism::new(alg, MorphismKind::Omega)
    }

    pub fn rho(alg: LoopAlgebra) -> Self {
        Morphism::new(alg, MorphismKind::Rho)
    }

    pub fn rho_inv(alg: LoopAlgebra) -> Self {
        Morphism::new(alg, MorphismKind::RhoInv)
    }

    pub fn is_anti(&self) -> bool {
        matches!(self.kind, MorphismKind::Omega)
    }

    pub fn gen_image(&self, g: LoopGen) -> Result<LieElement, DegreeOperatorUnsupported> {
        let elem = LieElement::generator(g);
        match self.kind {
            MorphismKind::Omega => self.alg.omega(&elem),
            MorphismKind::Rho => self.alg.rho(&elem),
            MorphismKind::RhoInv => self.alg.rho_inv(&elem),
        }
    }

    pub fn apply_lie(&self, a: &LieElement) -> Result<LieElement, DegreeOperatorUnsupported> {
        match self.kind {
            MorphismKind::Omega => self.alg.omega(a),
            MorphismKind::Rho => self.alg.rho(a),
            MorphismKind::RhoInv => self.alg.rho_inv(a),
        }
    }

    fn validate_pair(&self, a: LoopGen, b: LoopGen) -> Result<(), MorphismError> {
        let key = if a <= b { (a, b) } else { (b, a) };
        if self.checked.borrow().contains(&key) {
            return Ok(());
        }
        let img_a = self.gen_image(key.0)?;
        let img_b = self.gen_image(key.1)?;
        let lhs = self.apply_lie(&bracket_gens(key.0, key.1))?;
        let rhs = if self.is_anti() {
            self.alg.bracket(&img_b, &img_a)
        } else {
            self.alg.bracket(&img_a, &img_b)
        };
        if lhs != rhs {
            return Err(MorphismError::Inconsistent { a: key.0, b: key.1 });
        }
        self.checked.borrow_mut().insert(key);
        Ok(())
    }

    /// Monomial-wise application; the anti case reverses each word before
    /// re-straightening.
    pub fn apply(&self, a: &UEAElement) -> Result<UEAElement, MorphismError> {
        let mut out = UEAElement::zero();
        for (m, coeff) in a.iter() {
            for i in 0..m.factors.len() {
                for j in (i + 1)..m.factors.len() {
                    self.validate_pair(m.factors[i], m.factors[j])?;
                }
            }
            let mut images: Vec<LieElement> = Vec::with_capacity(m.factors.len());
            for g in &m.factors {
                images.push(self.gen_image(*g)?);
            }
            if self.is_anti() {
                images.reverse();
            }
            let mut acc = UEAElement::scalar(coeff.clone());
            for img in &images {
                let img = UEAElement::from_lie(img).expect("images never contain d");
                acc = multiply(&acc, &img);
            }
            // c maps to c under all three morphisms, so the exponent rides along
            if m.c_power > 0 {
                let mut shifted = UEAElement::zero();
                for (mm, cc) in acc.iter() {
                    let mut mm = mm.clone();
                    mm.c_power += m.c_power;
                    shifted.add_term(mm, cc.clone());
                }
                acc = shifted;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}
