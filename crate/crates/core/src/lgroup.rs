//! The lattice-ordered group `C(X, Z)` of integer step functions.
//!
//! A [`StepFunction`] stores one clopen piece per distinct value, sorted by
//! value. Binary operations work on the common refinement of the two
//! partitions and re-canonicalize, so derived equality is equality of
//! functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::space::{Clopen, Point, Space};
use crate::text::{parse_all, Cursor};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepFunction {
    space: Space,
    pieces: Vec<(Clopen, BigInt)>,
}

impl StepFunction {
    /// Builds a function from pieces that must partition `space`.
    pub fn new(space: &Space, pieces: Vec<(Clopen, BigInt)>) -> Result<StepFunction> {
        for (c, _) in &pieces {
            space.check_same(c.space())?;
        }
        let mut covered = Clopen::empty(space);
        for (c, _) in &pieces {
            let overlap = covered.intersect_unchecked(c);
            if !overlap.is_empty() {
                return Err(Error::NotPartition(format!("pieces overlap on {overlap}")));
            }
            covered = covered.union_unchecked(c);
        }
        let gap = covered.complement();
        if !gap.is_empty() {
            return Err(Error::NotPartition(format!("no value given on {gap}")));
        }
        Ok(StepFunction::canonical(space, pieces))
    }

    /// Groups pieces by value; assumes they already partition the space.
    fn canonical(space: &Space, pieces: Vec<(Clopen, BigInt)>) -> StepFunction {
        let mut by_value: BTreeMap<BigInt, Clopen> = BTreeMap::new();
        for (c, v) in pieces {
            if c.is_empty() {
                continue;
            }
            by_value
                .entry(v)
                .and_modify(|acc| *acc = acc.union_unchecked(&c))
                .or_insert(c);
        }
        StepFunction {
            space: space.clone(),
            pieces: by_value.into_iter().map(|(v, c)| (c, v)).collect(),
        }
    }

    pub fn constant(space: &Space, k: impl Into<BigInt>) -> StepFunction {
        StepFunction {
            space: space.clone(),
            pieces: vec![(Clopen::whole(space), k.into())],
        }
    }

    pub fn zero(space: &Space) -> StepFunction {
        StepFunction::constant(space, 0)
    }

    /// Indicator function of `a`.
    pub fn indicator(a: &Clopen) -> StepFunction {
        let space = a.space();
        StepFunction::canonical(
            space,
            vec![(a.clone(), BigInt::one()), (a.complement(), BigInt::zero())],
        )
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// `(clopen, value)` pairs sorted by value.
    pub fn pieces(&self) -> &[(Clopen, BigInt)] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].1.is_zero()
    }

    pub fn max_value(&self) -> &BigInt {
        &self.pieces.last().expect("nonempty partition").1
    }

    pub fn min_value(&self) -> &BigInt {
        &self.pieces.first().expect("nonempty partition").1
    }

    pub fn eval(&self, p: &Point) -> Result<BigInt> {
        self.space.check_point(p)?;
        Ok(self.eval_unchecked(p))
    }

    pub(crate) fn eval_unchecked(&self, p: &Point) -> BigInt {
        self.pieces
            .iter()
            .find(|(c, _)| c.contains_unchecked(p))
            .map(|(_, v)| v.clone())
            .expect("pieces cover the space")
    }

    /// Pointwise `op` on the common refinement.
    pub fn combine(&self, other: &StepFunction, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<StepFunction> {
        self.space.check_same(&other.space)?;
        Ok(StepFunction::canonical(&self.space, self.refine(other, op)))
    }

    fn refine<T>(&self, other: &StepFunction, op: impl Fn(&BigInt, &BigInt) -> T) -> Vec<(Clopen, T)> {
        let mut out = Vec::new();
        for (a, x) in &self.pieces {
            for (b, y) in &other.pieces {
                let c = a.intersect_unchecked(b);
                if !c.is_empty() {
                    out.push((c, op(x, y)));
                }
            }
        }
        out
    }

    pub fn map(&self, op: impl Fn(&BigInt) -> BigInt) -> StepFunction {
        StepFunction::canonical(
            &self.space,
            self.pieces.iter().map(|(c, v)| (c.clone(), op(v))).collect(),
        )
    }

    pub fn add(&self, other: &StepFunction) -> Result<StepFunction> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &StepFunction) -> Result<StepFunction> {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> StepFunction {
        self.map(|v| -v)
    }

    /// `n * f`.
    pub fn scale(&self, n: impl Into<BigInt>) -> StepFunction {
        let n = n.into();
        self.map(|v| v * &n)
    }

    pub fn meet(&self, other: &StepFunction) -> Result<StepFunction> {
        self.combine(other, |a, b| a.min(b).clone())
    }

    pub fn join(&self, other: &StepFunction) -> Result<StepFunction> {
        self.combine(other, |a, b| a.max(b).clone())
    }

    pub fn leq(&self, other: &StepFunction) -> Result<bool> {
        self.space.check_same(&other.space)?;
        Ok(self.refine(other, |a, b| a <= b).into_iter().all(|(_, ok)| ok))
    }

    pub fn is_nonneg(&self) -> bool {
        !self.min_value().is_negative()
    }

    /// `{p : f(p) != 0}`.
    pub fn support(&self) -> Clopen {
        self.pieces
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .fold(Clopen::empty(&self.space), |acc, (c, _)| acc.union_unchecked(c))
    }

    /// `{p : f(p) >= k}`.
    pub fn level_set(&self, k: &BigInt) -> Clopen {
        self.pieces
            .iter()
            .filter(|(_, v)| v >= k)
            .fold(Clopen::empty(&self.space), |acc, (c, _)| acc.union_unchecked(c))
    }

    /// Some `n >= 1` with `n * self` not below `g`, or `None` when
    /// `self <= 0` and no such `n` is owed.
    pub fn archimedean_witness(&self, g: &StepFunction) -> Result<Option<BigInt>> {
        self.space.check_same(&g.space)?;
        let Some((piece, _)) = self.pieces.iter().rev().find(|(_, v)| v.is_positive()) else {
            return Ok(None);
        };
        let p = piece.sample_point().expect("pieces are nonempty");
        let n: BigInt = g.eval_unchecked(&p) + 1;
        Ok(Some(n.max(BigInt::one())))
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>, space: &Space) -> Result<StepFunction> {
        let mut pieces = Vec::new();
        loop {
            let c = Clopen::parse_from(cur, space)?;
            cur.expect_str("->")?;
            pieces.push((c, cur.int()?));
            if !cur.eat(',') {
                break;
            }
        }
        StepFunction::new(space, pieces)
    }

    /// Parses `clopen->INT, ...` and validates the partition.
    pub fn parse(text: &str, space: &Space) -> Result<StepFunction> {
        parse_all(text, |cur| StepFunction::parse_from(cur, space))
    }
}

impl fmt::Display for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}->{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}
