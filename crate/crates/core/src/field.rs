//! Exact scalar fields.
//!
//! Two concrete fields implement [`Scalar`]: [`Rational`] (ℚ, with an `i64`
//! fast path that promotes to arbitrary precision on overflow) and
//! [`RationalFunction`] (ℚ(α), reduced quotients of dense polynomials).
//!
//! Text grammar: rationals render as `p/q` (or `p` when `q = 1`); rational
//! functions render as `(num)/(den)` with polynomials in descending degree in
//! the variable `a`, e.g. `(a^2 + 1)/(a - 1)`. [`Scalar::parse_text`] accepts
//! the same grammar plus general `+ - * / ^` expressions with parentheses.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised by scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Tag naming the field a value or algebra lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Q(a)")]
    RationalFunction,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::RationalFunction => write!(f, "Q(a)"),
        }
    }
}

/// An exact field element. Every algorithm in the crate is generic over this
/// trait; the arithmetic operators consume their operands while the `*_ref`
/// methods borrow them.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Which field this type implements.
    fn field() -> FieldTag;
    /// Embeds an integer.
    fn from_i64(v: i64) -> Self;
    /// Embeds a rational.
    fn from_rational(q: &Rational) -> Self;
    /// The generator α, if the field has one.
    fn variable() -> Option<Self>;
    /// The value as a rational constant, if it is one.
    fn to_rational(&self) -> Option<Rational>;
    /// Multiplicative inverse.
    fn try_inv(&self) -> Result<Self, FieldError>;
    /// `self + rhs` without consuming either operand.
    fn add_ref(&self, rhs: &Self) -> Self;
    /// `self - rhs` without consuming either operand.
    fn sub_ref(&self, rhs: &Self) -> Self;
    /// `self * rhs` without consuming either operand.
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Parses the textual grammar described in the module docs.
    fn parse_text(s: &str) -> Result<Self, FieldError> {
        parse_expression(s)
    }

    /// `self / rhs`, failing on a zero divisor.
    fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }
    /// `-self` without consuming the operand.
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    /// `self -= a * b`.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub_ref(&a.mul_ref(b));
    }
    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// A rational number in canonical form (coprime, positive denominator).
///
/// Values whose numerator and denominator fit in `i64` are stored inline;
/// anything larger is stored as a [`BigRational`]. The representation is
/// canonical, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    /// The integer `v`.
    pub fn integer(v: i64) -> Self {
        Rational::Small(Ratio::from_integer(v))
    }

    /// The fraction `num/den`.
    pub fn new(num: i64, den: i64) -> Result<Self, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// Converts from an arbitrary-precision rational, demoting when it fits.
    pub fn from_big(q: BigRational) -> Self {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(q),
        }
    }

    /// Arbitrary-precision copy of the value.
    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => b.clone(),
        }
    }

    /// Numerator of the canonical form.
    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.numer()),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    /// Denominator of the canonical form (always positive).
    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.denom()),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(r) if r.is_integer() => Some(*r.numer()),
            _ => None,
        }
    }

    /// True for integers.
    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_integer(),
            Rational::Big(b) => b.is_integer(),
        }
    }

    /// True for strictly negative values.
    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(r) => *r.numer() < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    fn binop(
        &self,
        rhs: &Self,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Self::from_big(big(&self.to_big(), &rhs.to_big()))
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Rational::Big(b) => {
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::integer(0)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(r) if r.numer().is_zero())
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::integer(1)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.add_ref(&rhs)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self.sub_ref(&rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.mul_ref(&rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Scalar for Rational {
    fn field() -> FieldTag {
        FieldTag::Rational
    }
    fn from_i64(v: i64) -> Self {
        Rational::integer(v)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn variable() -> Option<Self> {
        None
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Rational::Small(r) => Rational::Small(r.recip()),
            Rational::Big(b) => Self::from_big(b.recip()),
        })
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.binop(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        self.binop(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        self.binop(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
    fn neg_ref(&self) -> Self {
        match self {
            Rational::Small(r) if *r.numer() != i64::MIN => Rational::Small(-*r),
            _ => Self::from_big(-self.to_big()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rational::parse_text(&s).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Polynomials over ℚ
// ---------------------------------------------------------------------------

/// A dense univariate polynomial over ℚ in the variable `a`, coefficients
/// stored from degree 0 upward with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from low-to-high coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `a`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// Coefficients from degree 0 upward.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the degree is at most 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Divides by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().try_inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Polynomial sum.
    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero).add_ref(rhs.coeffs.get(i).unwrap_or(&zero)))
                .collect(),
        )
    }

    /// Polynomial difference.
    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    /// Polynomial product.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: returns `(q, r)` with `self = q·rhs + r`, `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Poly) -> Result<(Poly, Poly), FieldError> {
        let d = rhs.degree().ok_or(FieldError::DivisionByZero)?;
        let lead_inv = rhs.leading().try_inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].mul_ref(&lead_inv);
            if !c.is_zero() {
                for (k, b) in rhs.coeffs.iter().enumerate() {
                    rem[top - d + k].sub_mul_assign(&c, b);
                }
                quot[top - d] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = if negative { c.neg_ref() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let mono = match deg {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{deg}"),
            };
            if deg == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Rational functions ℚ(α)
// ---------------------------------------------------------------------------

/// An element of ℚ(α): a reduced quotient with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_rem(&g)?.0, den.div_rem(&g)?.0);
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.try_inv()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    /// Embeds a polynomial.
    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::constant(Rational::one()) }
    }

    /// Numerator of the canonical form.
    pub fn numer(&self) -> &Poly {
        &self.num
    }

    /// Denominator of the canonical form (monic).
    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// Evaluates at `α = x`; fails when `x` is a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational, FieldError> {
        self.num.eval(x).try_div(&self.den.eval(x))
    }

    fn den_is_one(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: Poly::default(), den: Poly::constant(Rational::one()) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_poly(Poly::constant(Rational::one()))
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Scalar for RationalFunction {
    fn field() -> FieldTag {
        FieldTag::RationalFunction
    }
    fn from_i64(v: i64) -> Self {
        RationalFunction::from_poly(Poly::constant(Rational::integer(v)))
    }
    fn from_rational(q: &Rational) -> Self {
        RationalFunction::from_poly(Poly::constant(q.clone()))
    }
    fn variable() -> Option<Self> {
        Some(RationalFunction::from_poly(Poly::x()))
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.den_is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }
    fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den_is_one() && rhs.den_is_one() {
            return RationalFunction::from_poly(self.num.mul(&rhs.num));
        }
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
    fn neg_ref(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Serialize for RationalFunction {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RationalFunction::parse_text(&s).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Num(digits.parse().map_err(|_| "bad integer".to_string())?));
            }
            'a' | 'α' => out.push(Token::Var),
            '+' => out.push(Token::Plus),
            '-' | '−' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            other => return Err(format!("unexpected character `{other}`")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr<S: Scalar>(&mut self) -> Result<S, String> {
        let mut acc = self.term::<S>()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc + self.term::<S>()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc - self.term::<S>()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<S: Scalar>(&mut self) -> Result<S, String> {
        let mut acc = self.unary::<S>()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary::<S>()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary::<S>()?;
                    acc = acc.try_div(&d).map_err(|e| e.to_string())?;
                }
                Some(Token::Num(_)) | Some(Token::Var) | Some(Token::LParen) => {
                    acc = acc * self.power::<S>()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary<S: Scalar>(&mut self) -> Result<S, String> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary::<S>()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary::<S>()
            }
            _ => self.power::<S>(),
        }
    }

    fn power<S: Scalar>(&mut self) -> Result<S, String> {
        let base = self.atom::<S>()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp = match self.next() {
                Some(Token::Num(n)) => n.to_u32().ok_or("exponent too large")?,
                _ => return Err("expected an integer exponent".into()),
            };
            let mut acc = S::one();
            for _ in 0..exp {
                acc = acc.mul_ref(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom<S: Scalar>(&mut self) -> Result<S, String> {
        match self.next() {
            Some(Token::Num(n)) => Ok(S::from_rational(&Rational::from_big(BigRational::from_integer(n)))),
            Some(Token::Var) => S::variable().ok_or_else(|| "the variable `a` is not available over Q".to_string()),
            Some(Token::LParen) => {
                let v = self.expr::<S>()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err("missing `)`".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

fn parse_expression<S: Scalar>(input: &str) -> Result<S, FieldError> {
    let err = |reason: String| FieldError::Parse { input: input.to_string(), reason };
    let tokens = tokenize(input).map_err(err)?;
    if tokens.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut p = Parser { tokens: &tokens, pos: 0 };
    let v = p.expr::<S>().map_err(err)?;
    if p.pos != tokens.len() {
        return Err(err("trailing input".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_canonical_and_display() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(2, -4).to_string(), "-1/2");
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(Rational::parse_text("-3/6").unwrap(), q(-1, 2));
        assert!(Rational::new(1, 0).is_err());
        assert_eq!(Rational::zero().try_inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let big = Rational::integer(i64::MAX).mul_ref(&Rational::integer(4));
        assert!(matches!(big, Rational::Big(_)));
        let back = big.try_div(&Rational::integer(4)).unwrap();
        assert_eq!(back, Rational::integer(i64::MAX));
        assert!(matches!(back, Rational::Small(_)));
    }

    #[test]
    fn sigma_sum_vanishes() {
        let a = RationalFunction::variable().unwrap();
        let one = RationalFunction::one();
        let s = (one.clone() + a.clone()) + (-one) + (-a);
        assert!(s.is_zero());
    }

    #[test]
    fn rational_function_reduces() {
        let f = RationalFunction::parse_text("(a^2 - 1)/(a - 1)").unwrap();
        assert_eq!(f.to_string(), "a + 1");
        let g = RationalFunction::parse_text("(a^2 + 1)/(a - 1)").unwrap();
        assert_eq!(g.to_string(), "(a^2 + 1)/(a - 1)");
        assert_eq!(RationalFunction::parse_text(&g.to_string()).unwrap(), g);
        let h = RationalFunction::parse_text("(2a)/(4a + 2)").unwrap();
        assert_eq!(h.to_string(), "(1/2*a)/(a + 1/2)");
        assert_eq!(RationalFunction::parse_text(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn variable_rejected_over_q() {
        assert!(Rational::parse_text("a + 1").is_err());
    }
}
