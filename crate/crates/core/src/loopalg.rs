//! The loop extension of gl_N: matrix units `E[i,j](s)` with a central
//! element `c` and an optional degree operator `d`.
//!
//! Generators print as `E[i,j](s)`, `c`, `d`; elements print as sorted
//! `coeff*gen` sums so golden tests stay stable. Row/column indices live in
//! `1..=N` and every constructor canonicalizes mod N (index 0 means N).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Rational;

/// A basis generator of the loop algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopGen {
    /// Matrix unit at a loop degree: `E[row,col](deg)`.
    E { row: u32, col: u32, deg: i64 },
    /// The central element `c`.
    Central,
    /// The degree operator `d` with `[d, X(s)] = s X(s)`.
    Degree,
}

impl LoopGen {
    pub fn loop_degree(&self) -> i64 {
        match self {
            LoopGen::E { deg, .. } => *deg,
            _ => 0,
        }
    }

    /// Sort key realizing the fixed normal-ordering convention:
    /// loop degree descending, then row, then column; `c` and `d` last.
    fn order_key(&self) -> (u8, i64, u32, u32) {
        match *self {
            LoopGen::E { row, col, deg } => (0, -deg, row, col),
            LoopGen::Central => (1, 0, 0, 0),
            LoopGen::Degree => (2, 0, 0, 0),
        }
    }
}

impl Ord for LoopGen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for LoopGen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LoopGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopGen::E { row, col, deg } => write!(f, "E[{row},{col}]({deg})"),
            LoopGen::Central => write!(f, "c"),
            LoopGen::Degree => write!(f, "d"),
        }
    }
}

/// Error for maps that are not defined on the degree operator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the map is not defined on the degree operator d")]
pub struct DegreeOperatorUnsupported;

/// Error for exponential-adjoint series that fail to terminate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("adjoint action did not nilpotate within {max_steps} steps")]
pub struct NotNilpotent {
    pub max_steps: usize,
}

/// Finite rational-linear combination of [`LoopGen`]s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<LoopGen, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn generator(g: LoopGen) -> Self {
        let mut e = LieElement::zero();
        e.add_term(g, Rational::one());
        e
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

    pub fn coeff(&self, g: &LoopGen) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LoopGen, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, g: LoopGen, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(Rational::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, coeff) in other.iter() {
            out.add_term(*g, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, coeff) in other.iter() {
            out.add_term(*g, -coeff);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> LieElement {
        if r.is_zero() {
            return LieElement::zero();
        }
        let mut out = LieElement::zero();
        for (g, coeff) in self.iter() {
            out.add_term(*g, coeff * r);
        }
        out
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Rational::one())
    }

    pub fn involves_degree_operator(&self) -> bool {
        self.terms.contains_key(&LoopGen::Degree)
    }

    /// Largest |loop degree| among the generators (0 for the zero element).
    pub fn max_abs_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|g| g.loop_degree().abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (g, coeff)) in self.terms.iter().enumerate() {
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
            if mag.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{mag}*{g}")?;
            }
        }
        Ok(())
    }
}

/// Cartan and orientation integers for the cyclic rank-N diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanData {
    pub n: usize,
}

impl CartanData {
    /// Canonical representative of a node index in `0..n`.
    pub fn node(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    /// Cartan integer: 2 on the diagonal, -1 for neighbours mod N, else 0.
    pub fn a(&self, i: i64, j: i64) -> i64 {
        let (i, j) = (self.node(i), self.node(j));
        if i == j {
            2
        } else if self.adjacent(i as i64, j as i64) {
            -1
        } else {
            0
        }
    }

    /// Orientation integer: +1 when j = i-1, -1 when j = i+1, else 0.
    pub fn m(&self, i: i64, j: i64) -> i64 {
        let (i, j) = (self.node(i), self.node(j));
        if j == self.node(i as i64 - 1) {
            1
        } else if j == self.node(i as i64 + 1) {
            -1
        } else {
            0
        }
    }

    pub fn adjacent(&self, i: i64, j: i64) -> bool {
        let (i, j) = (self.node(i), self.node(j));
        i != j && (j == self.node(i as i64 + 1) || j == self.node(i as i64 - 1))
    }
}

/// Bracket of two basis generators. Indices are assumed canonical, so this
/// needs no rank: `[E[i,j](r), E[k,l](s)] = d_jk E[i,l](r+s) - d_li E[k,j](r+s)
/// + r d_{r+s,0} d_jk d_il c`, `c` central, `[d, X(s)] = s X(s)`.
pub fn bracket_gens(a: LoopGen, b: LoopGen) -> LieElement {
    let mut out = LieElement::zero();
    match (a, b) {
        (LoopGen::Central, _) | (_, LoopGen::Central) => {}
        (LoopGen::Degree, LoopGen::Degree) => {}
        (LoopGen::Degree, LoopGen::E { row, col, deg }) => {
            out.add_term(LoopGen::E { row, col, deg }, Rational::integer(deg));
        }
        (LoopGen::E { row, col, deg }, LoopGen::Degree) => {
            out.add_term(LoopGen::E { row, col, deg }, Rational::integer(-deg));
        }
        (
            LoopGen::E {
                row: i,
                col: j,
                deg: r,
            },
            LoopGen::E {
                row: k,
                col: l,
                deg: s,
            },
        ) => {
            if j == k {
                out.add_term(
                    LoopGen::E {
                        row: i,
                        col: l,
                        deg: r + s,
                    },
                    Rational::one(),
                );
            }
            if l == i {
                out.add_term(
                    LoopGen::E {
                        row: k,
                        col: j,
                        deg: r + s,
                    },
                    -Rational::one(),
                );
            }
            if r + s == 0 && j == k && i == l && r != 0 {
                out.add_term(LoopGen::Central, Rational::integer(r));
            }
        }
    }
    out
}

/// Which member of a Chevalley triple to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChevalleyKind {
    Plus,
    Minus,
    Cartan,
}

/// The loop extension of gl_N at a fixed rank, with its bracket and the
/// transpose / rotation maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopAlgebra {
    pub cartan: CartanData,
}

pub const DEFAULT_MAX_AD_STEPS: usize = 16;

impl LoopAlgebra {
    /// Rank must be at least 3.
    pub fn new(n: usize) -> Self {
        assert!(n >= 3, "rank must be at least 3, got {n}");
        LoopAlgebra {
            cartan: CartanData { n },
        }
    }

    pub fn n(&self) -> usize {
        self.cartan.n
    }

    /// Canonical matrix-unit index in `1..=N` (0 means N).
    pub fn index(&self, i: i64) -> u32 {
        let n = self.n() as i64;
        let r = i.rem_euclid(n);
        (if r == 0 { n } else { r }) as u32
    }

    pub fn e(&self, row: i64, col: i64, deg: i64) -> LoopGen {
        LoopGen::E {
            row: self.index(row),
            col: self.index(col),
            deg,
        }
    }

    pub fn e_elem(&self, row: i64, col: i64, deg: i64) -> LieElement {
        LieElement::generator(self.e(row, col, deg))
    }

    /// Bracket of two basis generators.
    pub fn bracket_gens(&self, a: LoopGen, b: LoopGen) -> LieElement {
        bracket_gens(a, b)
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (ga, ca) in a.iter() {
            for (gb, cb) in b.iter() {
                let prod = ca * cb;
                for (g, coeff) in bracket_gens(*ga, *gb).iter() {
                    out.add_term(*g, coeff * &prod);
                }
            }
        }
        out
    }

    /// The Chevalley generator `x_i^+`, `x_i^-` or `h_i` for a node `i` mod N.
    pub fn chevalley(&self, i: i64, kind: ChevalleyKind) -> LieElement {
        let n = self.n() as i64;
        let i = self.cartan.node(i) as i64;
        if i == 0 {
            match kind {
                ChevalleyKind::Plus => self.e_elem(n, 1, 1),
                ChevalleyKind::Minus => self.e_elem(1, n, -1),
                ChevalleyKind::Cartan => {
                    let mut h = self.e_elem(n, n, 0).sub(&self.e_elem(1, 1, 0));
                    h.add_term(LoopGen::Central, Rational::one());
                    h
                }
            }
        } else {
            match kind {
                ChevalleyKind::Plus => self.e_elem(i, i + 1, 0),
                ChevalleyKind::Minus => self.e_elem(i + 1, i, 0),
                ChevalleyKind::Cartan => self.e_elem(i, i, 0).sub(&self.e_elem(i + 1, i + 1, 0)),
            }
        }
    }

    pub fn x_plus(&self, i: i64) -> LieElement {
        self.chevalley(i, ChevalleyKind::Plus)
    }

    pub fn x_minus(&self, i: i64) -> LieElement {
        self.chevalley(i, ChevalleyKind::Minus)
    }

    pub fn h(&self, i: i64) -> LieElement {
        self.chevalley(i, ChevalleyKind::Cartan)
    }

    /// Coroot at a loop degree: `h_i(s)` for `i != 0`, and
    /// `E[N,N](s) - E[1,1](s) + d_{s,0} c` for the affine node.
    pub fn h_loop(&self, i: i64, s: i64) -> LieElement {
        let n = self.n() as i64;
        let i = self.cartan.node(i) as i64;
        if i == 0 {
            let mut h = self.e_elem(n, n, s).sub(&self.e_elem(1, 1, s));
            if s == 0 {
                h.add_term(LoopGen::Central, Rational::one());
            }
            h
        } else {
            self.e_elem(i, i, s).sub(&self.e_elem(i + 1, i + 1, s))
        }
    }

    /// `h_{-theta}(s) = E[N,N](s) - E[1,1](s)`.
    pub fn h_minus_theta(&self, s: i64) -> LieElement {
        let n = self.n() as i64;
        self.e_elem(n, n, s).sub(&self.e_elem(1, 1, s))
    }

    /// The identity-matrix loop element at a degree.
    pub fn identity_loop(&self, s: i64) -> LieElement {
        let mut out = LieElement::zero();
        for k in 1..=self.n() as i64 {
            out.add_term(self.e(k, k, s), Rational::one());
        }
        out
    }

    /// The transpose anti-involution: `E[i,j](s) -> E[j,i](-s)`, `c -> c`.
    pub fn omega(&self, a: &LieElement) -> Result<LieElement, DegreeOperatorUnsupported> {
        let mut out = LieElement::zero();
        for (g, coeff) in a.iter() {
            match *g {
                LoopGen::E { row, col, deg } => out.add_term(
                    LoopGen::E {
                        row: col,
                        col: row,
                        deg: -deg,
                    },
                    coeff.clone(),
                ),
                LoopGen::Central => out.add_term(LoopGen::Central, coeff.clone()),
                LoopGen::Degree => return Err(DegreeOperatorUnsupported),
            }
        }
        Ok(out)
    }

    fn rho_gen(&self, g: LoopGen, inverse: bool) -> Result<LieElement, DegreeOperatorUnsupported> {
        let n = self.n() as i64;
        let mut out = LieElement::zero();
        match g {
            LoopGen::Central => out.add_term(LoopGen::Central, Rational::one()),
            LoopGen::Degree => return Err(DegreeOperatorUnsupported),
            LoopGen::E { row, col, deg } => {
                let (i, j, s) = (row as i64, col as i64, deg);
                if !inverse {
                    let shift = i64::from(i == 1) - i64::from(j == 1);
                    out.add_term(self.e(i - 1, j - 1, s + shift), Rational::one());
                    if s == 0 && i == 1 && j == 1 {
                        out.add_term(LoopGen::Central, Rational::one());
                    }
                } else {
                    let shift = i64::from(j == n) - i64::from(i == n);
                    out.add_term(self.e(i + 1, j + 1, s + shift), Rational::one());
                    if s == 0 && i == n && j == n {
                        out.add_term(LoopGen::Central, -Rational::one());
                    }
                }
            }
        }
        Ok(out)
    }

    /// The diagram-rotation map:
    /// `E[i,j](s) -> E[i-1,j-1](s + d_{i,1} - d_{j,1}) + d_{s,0} d_{i,1} d_{j,1} c`.
    pub fn rho(&self, a: &LieElement) -> Result<LieElement, DegreeOperatorUnsupported> {
        let mut out = LieElement::zero();
        for (g, coeff) in a.iter() {
            for (h, hc) in self.rho_gen(*g, false)?.iter() {
                out.add_term(*h, hc * coeff);
            }
        }
        Ok(out)
    }

    /// Inverse of [`LoopAlgebra::rho`].
    pub fn rho_inv(&self, a: &LieElement) -> Result<LieElement, DegreeOperatorUnsupported> {
        let mut out = LieElement::zero();
        for (g, coeff) in a.iter() {
            for (h, hc) in self.rho_gen(*g, true)?.iter() {
                out.add_term(*h, hc * coeff);
            }
        }
        Ok(out)
    }

    /// `exp(ad x)` applied to a Lie element; errors if the series does not
    /// terminate within `max_steps` applications.
    pub fn exp_ad(
        &self,
        x: &LieElement,
        a: &LieElement,
        max_steps: usize,
    ) -> Result<LieElement, NotNilpotent> {
        let mut total = a.clone();
        let mut term = a.clone();
        for step in 1..=max_steps {
            term = self
                .bracket(x, &term)
                .scale(&Rational::new(1, step as i64));
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term);
        }
        Err(NotNilpotent {
            max_steps,
        })
    }
}

/// Error from parsing generators or elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {at}: {message}")]
pub struct ParseElementError {
    pub at: usize,
    pub message: String,
}

fn parse_err<T>(at: usize, message: impl Into<String>) -> Result<T, ParseElementError> {
    Err(ParseElementError {
        at,
        message: message.into(),
    })
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_i64(&mut self) -> Result<i64, ParseElementError> {
        let rest = self.rest();
        let mut len = 0;
        let bytes = rest.as_bytes();
        if len < bytes.len() && (bytes[len] == b'+' || bytes[len] == b'-') {
            len += 1;
        }
        let digits_start = len;
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len == digits_start {
            return parse_err(self.pos, "expected an integer");
        }
        let value = rest[..len]
            .parse::<i64>()
            .map_err(|e| ParseElementError {
                at: self.pos,
                message: format!("integer out of range: {e}"),
            })?;
        self.pos += len;
        Ok(value)
    }

    fn parse_rational(&mut self) -> Result<Rational, ParseElementError> {
        let start = self.pos;
        let num = self.parse_i64()?;
        if self.eat("/") {
            let den = self.parse_i64()?;
            if den == 0 {
                return parse_err(start, "zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::integer(num))
        }
    }

    fn parse_gen(&mut self) -> Result<LoopGen, ParseElementError> {
        if self.eat("E[") {
            let row = self.parse_i64()?;
            if !self.eat(",") {
                return parse_err(self.pos, "expected ',' in E[row,col]");
            }
            let col = self.parse_i64()?;
            if !self.eat("](") {
                return parse_err(self.pos, "expected '](' after indices");
            }
            let deg = self.parse_i64()?;
            if !self.eat(")") {
                return parse_err(self.pos, "expected ')' after degree");
            }
            if row < 1 || col < 1 {
                return parse_err(self.pos, "indices must be at least 1");
            }
            Ok(LoopGen::E {
                row: u32::try_from(row).map_err(|_| ParseElementError {
                    at: self.pos,
                    message: "row index out of range".into(),
                })?,
                col: u32::try_from(col).map_err(|_| ParseElementError {
                    at: self.pos,
                    message: "column index out of range".into(),
                })?,
                deg,
            })
        } else if self.eat("c") {
            Ok(LoopGen::Central)
        } else if self.eat("d") {
            Ok(LoopGen::Degree)
        } else {
            parse_err(self.pos, "expected a generator (E[i,j](s), c or d)")
        }
    }
}

impl FromStr for LoopGen {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        let g = cur.parse_gen()?;
        cur.skip_ws();
        if !cur.rest().is_empty() {
            return parse_err(cur.pos, "trailing input after generator");
        }
        Ok(g)
    }
}

impl FromStr for LieElement {
    type Err = ParseElementError;

    /// Parses sums like `5/6*E[1,1](0) - E[2,2](-1) + 2*c`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let mut out = LieElement::zero();
        cur.skip_ws();
        if cur.rest().is_empty() {
            return parse_err(0, "empty element");
        }
        if cur.eat("0") {
            cur.skip_ws();
            if cur.rest().is_empty() {
                return Ok(out);
            }
            return parse_err(cur.pos, "trailing input after 0");
        }
        let mut negate = cur.eat("-");
        if !negate {
            let _ = cur.eat("+");
        }
        loop {
            cur.skip_ws();
            let mut coeff = if cur.rest().starts_with(|ch: char| ch.is_ascii_digit()) {
                let r = cur.parse_rational()?;
                if !cur.eat("*") {
                    return parse_err(cur.pos, "expected '*' between coefficient and generator");
                }
                r
            } else {
                Rational::one()
            };
            if negate {
                coeff = -coeff;
            }
            let g = cur.parse_gen()?;
            out.add_term(g, coeff);
            cur.skip_ws();
            if cur.rest().is_empty() {
                return Ok(out);
            }
            negate = if cur.eat("+") {
                false
            } else if cur.eat("-") {
                true
            } else {
                return parse_err(cur.pos, "expected '+' or '-' between terms");
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> LoopAlgebra {
        LoopAlgebra::new(4)
    }

    #[test]
    fn bracket_with_central_term() {
        let a = alg();
        let lhs = a.bracket(&a.e_elem(1, 2, 1), &a.e_elem(2, 1, -1));
        let mut expected = a.e_elem(1, 1, 0).sub(&a.e_elem(2, 2, 0));
        expected.add_term(LoopGen::Central, Rational::one());
        assert_eq!(lhs, expected);
    }

    #[test]
    fn central_is_central_and_degree_grades() {
        let a = alg();
        let c = LieElement::generator(LoopGen::Central);
        assert!(a.bracket(&c, &a.e_elem(3, 1, 5)).is_zero());
        let d = LieElement::generator(LoopGen::Degree);
        assert_eq!(
            a.bracket(&d, &a.e_elem(2, 3, -2)),
            a.e_elem(2, 3, -2).scale(&Rational::integer(-2))
        );
    }

    #[test]
    fn chevalley_table() {
        let a = alg();
        assert_eq!(a.x_plus(0), a.e_elem(4, 1, 1));
        assert_eq!(a.x_minus(0), a.e_elem(1, 4, -1));
        assert_eq!(a.h(2), a.e_elem(2, 2, 0).sub(&a.e_elem(3, 3, 0)));
        let mut h0 = a.e_elem(4, 4, 0).sub(&a.e_elem(1, 1, 0));
        h0.add_term(LoopGen::Central, Rational::one());
        assert_eq!(a.h(0), h0);
    }

    #[test]
    fn omega_examples() {
        let a = alg();
        assert_eq!(a.omega(&a.e_elem(1, 3, 2)).unwrap(), a.e_elem(3, 1, -2));
        let c = LieElement::generator(LoopGen::Central);
        assert_eq!(a.omega(&c).unwrap(), c);
        // omega swaps the raising/lowering generators at the affine node
        assert_eq!(a.omega(&a.x_plus(0)).unwrap(), a.x_minus(0));
        assert!(a
            .omega(&LieElement::generator(LoopGen::Degree))
            .is_err());
    }

    #[test]
    fn rho_examples() {
        let a = alg();
        let mut expected = a.e_elem(4, 4, 0);
        expected.add_term(LoopGen::Central, Rational::one());
        assert_eq!(a.rho(&a.e_elem(1, 1, 0)).unwrap(), expected);
        assert_eq!(a.rho(&a.e_elem(2, 3, 5)).unwrap(), a.e_elem(1, 2, 5));
        assert_eq!(a.rho(&a.e_elem(1, 4, 0)).unwrap(), a.e_elem(4, 3, 1));
    }

    #[test]
    fn rho_inverse_round_trip() {
        let a = alg();
        for row in 1..=4 {
            for col in 1..=4 {
                for deg in [-2, 0, 3] {
                    let x = a.e_elem(row, col, deg);
                    assert_eq!(a.rho_inv(&a.rho(&x).unwrap()).unwrap(), x);
                    assert_eq!(a.rho(&a.rho_inv(&x).unwrap()).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn rho_on_chevalley_and_identity_loop() {
        let a = alg();
        for i in 0..4 {
            assert_eq!(a.rho(&a.x_plus(i)).unwrap(), a.x_plus(i - 1));
            assert_eq!(a.rho(&a.x_minus(i)).unwrap(), a.x_minus(i - 1));
            assert_eq!(a.rho(&a.h(i)).unwrap(), a.h(i - 1));
        }
        let mut expected = a.identity_loop(0);
        expected.add_term(LoopGen::Central, Rational::one());
        assert_eq!(a.rho(&a.identity_loop(0)).unwrap(), expected);
        assert_eq!(a.rho(&a.identity_loop(2)).unwrap(), a.identity_loop(2));
    }

    #[test]
    fn rho_nth_power_shifts_diagonal_by_central() {
        let a = alg();
        for i in 1..=4 {
            // off-diagonal and coroots are fixed by rho^N
            let mut x = a.e_elem(i, i + 1, 3);
            for _ in 0..4 {
                x = a.rho(&x).unwrap();
            }
            assert_eq!(x, a.e_elem(i, i + 1, 3));

            let mut diag = a.e_elem(i, i, 0);
            for _ in 0..4 {
                diag = a.rho(&diag).unwrap();
            }
            let mut expected = a.e_elem(i, i, 0);
            expected.add_term(LoopGen::Central, Rational::one());
            assert_eq!(diag, expected);
        }
    }

    #[test]
    fn exp_ad_on_sl2_triple() {
        let a = alg();
        // exp(ad x_1^+) fixes x_1^+ and sends x_1^- to x_1^- + h_1 - x_1^+
        let image = a
            .exp_ad(&a.x_plus(1), &a.x_minus(1), DEFAULT_MAX_AD_STEPS)
            .unwrap();
        let expected = a.x_minus(1).add(&a.h(1)).sub(&a.x_plus(1));
        assert_eq!(image, expected);
    }

    #[test]
    fn exp_ad_not_nilpotent_on_diagonal() {
        let a = alg();
        // ad(E[1,1](0)) on E[1,2](0) has eigenvalue 1, so the series never stops
        let err = a.exp_ad(&a.e_elem(1, 1, 0), &a.e_elem(1, 2, 0), 8);
        assert!(err.is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a = alg();
        let mut x = a.e_elem(1, 2, -1).scale(&Rational::new(5, 6));
        x.add_term(a.e(2, 2, 0), Rational::integer(-1));
        x.add_term(LoopGen::Central, Rational::new(2, 1));
        let text = x.to_string();
        assert_eq!(text, "-E[2,2](0) + 5/6*E[1,2](-1) + 2*c");
        assert_eq!(text.parse::<LieElement>().unwrap(), x);
        assert_eq!("0".parse::<LieElement>().unwrap(), LieElement::zero());
        assert!("E[1,2](0)+".parse::<LieElement>().is_err());
        assert!("E[0,2](0)".parse::<LieElement>().is_err());
    }

    #[test]
    fn cartan_data_cyclic() {
        let c = CartanData { n: 4 };
        assert_eq!(c.a(1, 1), 2);
        assert_eq!(c.a(0, 3), -1);
        assert_eq!(c.a(0, 2), 0);
        assert_eq!(c.m(1, 0), 1);
        assert_eq!(c.m(0, 1), -1);
        assert_eq!(c.m(0, 2), 0);
        assert_eq!(c.m(3, 0), -1);
    }
}
