//! Ordinals below epsilon-zero in hereditary Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `w^e1*c1 + ... + w^ek*ck` with strictly
//! decreasing exponents `e1 > ... > ek` (themselves ordinals) and positive
//! coefficients. The representation is canonical, so derived equality is
//! ordinal equality.
//!
//! Text form: `ordinal := term ("+" term)*` with
//! `term := NAT | "w" | "w" "^" factor ("*" NAT)? | "w" "*" NAT` and
//! `factor := NAT | "(" ordinal ")"`. Input sums need not be in normal form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{parse_all, Cursor};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Term {
    exp: Ordinal,
    coef: u64,
}

/// Zero / successor / limit trichotomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalKind {
    Zero,
    Successor(Ordinal),
    Limit,
}

fn checked_coef(c: Option<u64>) -> u64 {
    c.expect("ordinal coefficient overflows u64")
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::finite(1)
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exp: Ordinal::zero(),
                    coef: n,
                }],
            }
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `w^exp`.
    pub fn omega_pow(exp: Ordinal) -> Self {
        Ordinal::monomial(exp, 1)
    }

    /// `w^exp * coef`; zero when `coef == 0`.
    pub fn monomial(exp: Ordinal, coef: u64) -> Self {
        if coef == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exp, coef }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs already in
    /// Cantor normal form.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self> {
        for pair in terms.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(Error::InvalidArgument(
                    "exponents must be strictly decreasing".into(),
                ));
            }
        }
        if terms.iter().any(|(_, c)| *c == 0) {
            return Err(Error::InvalidArgument("coefficients must be positive".into()));
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(exp, coef)| Term { exp, coef })
                .collect(),
        })
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Ordinal, u64)> + '_ {
        self.terms.iter().map(|t| (&t.exp, t.coef))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exp.is_zero() => Some(t.coef),
            _ => None,
        }
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn leading_coefficient(&self) -> Option<u64> {
        self.terms.first().map(|t| t.coef)
    }

    /// Least exponent in the normal form. A nonzero `b` is of the form
    /// `w^a * g` (g >= 1) exactly when this is `>= a`.
    pub fn trailing_exponent(&self) -> Option<&Ordinal> {
        self.terms.last().map(|t| &t.exp)
    }

    pub fn classify(&self) -> OrdinalKind {
        match self.terms.last() {
            None => OrdinalKind::Zero,
            Some(t) if t.exp.is_zero() => {
                let mut pred = self.clone();
                let last = pred.terms.last_mut().unwrap();
                last.coef -= 1;
                if last.coef == 0 {
                    pred.terms.pop();
                }
                OrdinalKind::Successor(pred)
            }
            Some(_) => OrdinalKind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.classify(), OrdinalKind::Limit)
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exp.is_zero())
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    pub fn predecessor(&self) -> Option<Ordinal> {
        match self.classify() {
            OrdinalKind::Successor(p) => Some(p),
            _ => None,
        }
    }

    /// Ordinal sum. Terms of `self` below the leading exponent of `rhs` are
    /// absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exp >= head.exp)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exp == head.exp {
                last.coef = checked_coef(last.coef.checked_add(head.coef));
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// Ordinal product, distributing `self` over the normal form of `rhs`.
    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = self.terms.first() else {
            return Ordinal::zero();
        };
        let mut out = Ordinal::zero();
        for t in &rhs.terms {
            let part = if t.exp.is_zero() {
                let mut p = self.clone();
                p.terms[0].coef = checked_coef(lead.coef.checked_mul(t.coef));
                p
            } else {
                Ordinal::monomial(lead.exp.add(&t.exp), t.coef)
            };
            out = out.add(&part);
        }
        out
    }

    /// `w^self`.
    pub fn exp_omega(&self) -> Ordinal {
        Ordinal::omega_pow(self.clone())
    }

    /// Unique `x` with `alpha + x == self`, for `self >= alpha`.
    fn left_sub(&self, alpha: &Ordinal) -> Ordinal {
        debug_assert!(*self >= *alpha);
        for (i, te) in self.terms.iter().enumerate() {
            let Some(ta) = alpha.terms.get(i) else {
                return Ordinal {
                    terms: self.terms[i..].to_vec(),
                };
            };
            if ta == te {
                continue;
            }
            let mut terms = self.terms[i..].to_vec();
            if ta.exp == te.exp {
                terms[0].coef -= ta.coef;
            }
            return Ordinal { terms };
        }
        Ordinal::zero()
    }

    /// Splits `self = w^alpha * q + r` with `r < w^alpha`.
    pub fn divmod(&self, alpha: &Ordinal) -> (Ordinal, Ordinal) {
        let split = self
            .terms
            .iter()
            .position(|t| t.exp < *alpha)
            .unwrap_or(self.terms.len());
        let q = Ordinal {
            terms: self.terms[..split]
                .iter()
                .map(|t| Term {
                    exp: t.exp.left_sub(alpha),
                    coef: t.coef,
                })
                .collect(),
        };
        let r = Ordinal {
            terms: self.terms[split..].to_vec(),
        };
        (q, r)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Ordinal> {
        let mut acc = parse_term(cur)?;
        while cur.eat('+') {
            acc = acc.add(&parse_term(cur)?);
        }
        Ok(acc)
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Ordinal> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => Ok(Ordinal::finite(cur.nat()?)),
        Some('w') | Some('ω') => {
            let omega = cur.peek().unwrap();
            cur.eat(omega);
            let exp = if cur.eat('^') {
                if cur.eat('(') {
                    let e = Ordinal::parse_from(cur)?;
                    cur.expect(')')?;
                    e
                } else if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
                    Ordinal::finite(cur.nat()?)
                } else {
                    return cur.error("expected a natural number or '(' after '^'");
                }
            } else {
                Ordinal::one()
            };
            let coef = if cur.eat('*') {
                let at = cur.pos();
                let c = cur.nat()?;
                if c == 0 {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "coefficient must be positive".into(),
                    });
                }
                c
            } else {
                1
            };
            Ok(Ordinal::monomial(exp, coef))
        }
        Some(c) => cur.error(format!("expected an ordinal term, found '{c}'")),
        None => cur.error("expected an ordinal term, found end of input"),
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.exp.cmp(&b.exp).then(a.coef.cmp(&b.coef)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(n)
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, Ordinal::parse_from)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match t.exp.as_finite() {
                Some(0) => write!(f, "{}", t.coef)?,
                Some(1) => write!(f, "w")?,
                Some(n) => write!(f, "w^{n}")?,
                None => write!(f, "w^({})", t.exp)?,
            }
            if !t.exp.is_zero() && t.coef > 1 {
                write!(f, "*{}", t.coef)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
