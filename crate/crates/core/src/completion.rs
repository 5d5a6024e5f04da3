//! The dense embedding `psi : C(X, Z) -> C(EX, Z)` for `X = w + 1`.
//!
//! `C(EX, Z)` is the group of bounded integer sequences; only its eventually
//! periodic subgroup is represented ([`EpSequence`]). It is closed under the
//! lattice-group operations and contains the image of `psi`, which is the
//! set of eventually constant sequences. The cokernel of `psi` models
//! `Div(R)/Inv(R)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lgroup::StepFunction;
use crate::ordinal::Ordinal;
use crate::periodic;
use crate::space::{Clopen, Point, Space};
use crate::text::{parse_all, Cursor};

/// Eventually periodic integer sequence `prefix, period, period, ...` in
/// canonical form (primitive period, minimal prefix).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpSequence {
    prefix: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl EpSequence {
    pub fn new(prefix: Vec<BigInt>, period: Vec<BigInt>) -> Result<EpSequence> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let (prefix, period) = periodic::canonicalize(prefix, period);
        Ok(EpSequence { prefix, period })
    }

    pub fn from_i64(prefix: &[i64], period: &[i64]) -> Result<EpSequence> {
        EpSequence::new(
            prefix.iter().map(|&v| v.into()).collect(),
            period.iter().map(|&v| v.into()).collect(),
        )
    }

    pub fn constant(k: impl Into<BigInt>) -> EpSequence {
        EpSequence {
            prefix: Vec::new(),
            period: vec![k.into()],
        }
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn eval(&self, k: usize) -> &BigInt {
        periodic::at(&self.prefix, &self.period, k)
    }

    /// Prefix followed by one period.
    pub fn window(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.prefix.iter().chain(&self.period)
    }

    pub fn is_eventually_constant(&self) -> bool {
        self.period.len() == 1
    }

    pub fn max_value(&self) -> &BigInt {
        self.window().max().expect("nonempty period")
    }

    pub fn min_value(&self) -> &BigInt {
        self.window().min().expect("nonempty period")
    }

    fn aligned_len(&self, other: &EpSequence) -> (usize, usize) {
        (
            self.prefix.len().max(other.prefix.len()),
            self.period.len().lcm(&other.period.len()),
        )
    }

    /// Pointwise `op` over a common prefix length and period.
    pub fn zip_with(&self, other: &EpSequence, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> EpSequence {
        let (pre, per) = self.aligned_len(other);
        let mut values: Vec<BigInt> = (0..pre + per).map(|k| op(self.eval(k), other.eval(k))).collect();
        let period = values.split_off(pre);
        EpSequence::new(values, period).expect("lcm of nonempty periods")
    }

    pub fn map(&self, op: impl Fn(&BigInt) -> BigInt) -> EpSequence {
        EpSequence::new(
            self.prefix.iter().map(&op).collect(),
            self.period.iter().map(&op).collect(),
        )
        .expect("nonempty period")
    }

    pub fn add(&self, other: &EpSequence) -> EpSequence {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &EpSequence) -> EpSequence {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> EpSequence {
        self.map(|v| -v)
    }

    pub fn scale(&self, n: impl Into<BigInt>) -> EpSequence {
        let n = n.into();
        self.map(|v| v * &n)
    }

    pub fn meet(&self, other: &EpSequence) -> EpSequence {
        self.zip_with(other, |a, b| a.min(b).clone())
    }

    pub fn join(&self, other: &EpSequence) -> EpSequence {
        self.zip_with(other, |a, b| a.max(b).clone())
    }

    pub fn leq(&self, other: &EpSequence) -> bool {
        let (pre, per) = self.aligned_len(other);
        (0..pre + per).all(|k| self.eval(k) <= other.eval(k))
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<EpSequence> {
        let prefix = if cur.eat_str("pre") {
            int_list(cur)?
        } else {
            Vec::new()
        };
        cur.expect_str("per")?;
        let at = cur.pos();
        let period = int_list(cur)?;
        if period.is_empty() {
            return Err(Error::Syntax {
                pos: at,
                msg: "period must be nonempty".into(),
            });
        }
        EpSequence::new(prefix, period)
    }
}

fn int_list(cur: &mut Cursor<'_>) -> Result<Vec<BigInt>> {
    cur.expect('[')?;
    let mut out = Vec::new();
    if cur.eat(']') {
        return Ok(out);
    }
    loop {
        out.push(cur.int()?);
        if cur.eat(']') {
            return Ok(out);
        }
        cur.expect(',')?;
    }
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for EpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            write!(f, "pre[{}]", join_ints(&self.prefix))?;
        }
        write!(f, "per[{}]", join_ints(&self.period))
    }
}

impl fmt::Debug for EpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EpSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, EpSequence::parse_from)
    }
}

/// The one infinite space the completion is modelled for.
pub fn omega_plus_one() -> Space {
    Space::ordinal(Ordinal::omega())
}

fn require_omega(space: &Space) -> Result<()> {
    if *space == omega_plus_one() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "completion is only modelled on ord(w) and finite spaces, not {space}"
        )))
    }
}

/// Samples `f` on the dense set of natural numbers.
pub fn psi(f: &StepFunction) -> Result<EpSequence> {
    require_omega(f.space())?;
    let omega = Point::Ord(Ordinal::omega());
    let (tail_piece, tail) = f
        .pieces()
        .iter()
        .find(|(c, _)| c.contains_unchecked(&omega))
        .expect("pieces cover the space");
    let start = tail_piece
        .intervals()
        .iter()
        .find(|(_, hi)| *hi == Ordinal::omega())
        .and_then(|(lo, _)| lo.as_finite())
        .expect("the interval holding w starts at a natural number");
    let prefix = (0..start)
        .map(|k| f.eval_unchecked(&Point::ord(k)))
        .collect();
    EpSequence::new(prefix, vec![tail.clone()])
}

/// On a finite space the cover is the space itself and `psi` is the identity.
pub fn psi_finite(f: &StepFunction) -> Result<StepFunction> {
    if f.space().is_finite() {
        Ok(f.clone())
    } else {
        Err(Error::Unsupported(format!("{} is not finite", f.space())))
    }
}

/// The preimage under `psi`, present iff `s` is eventually constant.
pub fn psi_inverse(s: &EpSequence) -> Option<StepFunction> {
    if !s.is_eventually_constant() {
        return None;
    }
    let space = omega_plus_one();
    let mut pieces: Vec<(Clopen, BigInt)> = s
        .prefix()
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let k = Ordinal::finite(k as u64);
            (Clopen::interval(k.clone(), k, &space).unwrap(), v.clone())
        })
        .collect();
    let start = Ordinal::finite(s.prefix().len() as u64);
    pieces.push((
        Clopen::interval(start, Ordinal::omega(), &space).unwrap(),
        s.period()[0].clone(),
    ));
    Some(StepFunction::new(&space, pieces).expect("prefix points and tail partition w+1"))
}

/// `g1, g2` in `C(X, Z)` with `0 < psi(g1) <= h <= psi(g2)`.
pub fn density_witnesses(h: &EpSequence) -> Result<(StepFunction, StepFunction)> {
    if h.min_value().is_negative() {
        return Err(Error::NegativeValue);
    }
    let Some(k) = (0..h.prefix().len() + h.period().len()).find(|&k| h.eval(k).is_positive()) else {
        return Err(Error::InvalidArgument("h must be nonzero".into()));
    };
    let space = omega_plus_one();
    let point = Ordinal::finite(k as u64);
    let g1 = StepFunction::indicator(&Clopen::interval(point.clone(), point, &space)?);
    let g2 = StepFunction::constant(&space, h.max_value().clone());
    Ok((g1, g2))
}

/// Exact quotient `s / n`, if every entry is divisible by `n`.
pub fn ep_divide(s: &EpSequence, n: &BigInt) -> Result<Option<EpSequence>> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(format!("divisor {n} must be positive")));
    }
    if s.window().any(|v| !v.is_multiple_of(n)) {
        return Ok(None);
    }
    Ok(Some(s.map(|v| v / n)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosetDivisibility {
    /// `n * f = g + e` with `e` eventually constant.
    Yes { f: EpSequence, e: EpSequence },
    /// `g(k1)` and `g(k2)` lie in the periodic tail with different residues
    /// mod `n`, so no eventually constant `e` makes `g + e` divisible.
    No { k1: usize, k2: usize },
}

/// Decides whether the coset `g + im(psi)` is divisible by `n` in the cokernel.
pub fn coset_n_divisible(g: &EpSequence, n: &BigInt) -> Result<CosetDivisibility> {
    if *n <= BigInt::one() {
        return Err(Error::InvalidArgument(format!("modulus {n} must exceed 1")));
    }
    let residue = |v: &BigInt| v.mod_floor(n);
    let r0 = residue(&g.period()[0]);
    let offset = g.prefix().len();
    if let Some(j) = g.period().iter().position(|v| residue(v) != r0) {
        return Ok(CosetDivisibility::No {
            k1: offset,
            k2: offset + j,
        });
    }
    let fix = |v: &BigInt| (-v).mod_floor(n);
    let e = EpSequence::new(g.prefix().iter().map(fix).collect(), vec![fix(&r0)])?;
    let f = ep_divide(&g.add(&e), n)?.expect("g + e is divisible entrywise");
    debug_assert_eq!(f.scale(n.clone()), g.add(&e));
    Ok(CosetDivisibility::Yes { f, e })
}

/// `Div = Inv` exactly when the space is extremally disconnected.
pub fn inv_equals_div(space: &Space) -> bool {
    space.is_extremally_disconnected().0
}
