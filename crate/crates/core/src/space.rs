//! Boolean spaces built from two generators: the compact ordinal space
//! `[0, lambda]` and one Cantor-set component.
//!
//! Clopen subsets are kept in a canonical form (maximal ordinal intervals
//! whose left ends are zero or successors, plus a reduced binary trie of
//! cylinders), so structural equality is set equality. Cantor-Bendixson
//! derivatives of the whole space have a closed form through
//! [`Ordinal::divmod`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::periodic;
use crate::text::{format_bits, parse_all, Cursor};

/// A compact Boolean space: `[0, lambda]`, a Cantor set, or their disjoint sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Space {
    ordinal_part: Option<Ordinal>,
    perfect: bool,
}

impl Space {
    pub fn new(ordinal_part: Option<Ordinal>, perfect: bool) -> Result<Space> {
        if ordinal_part.is_none() && !perfect {
            return Err(Error::InvalidArgument("a space needs at least one component".into()));
        }
        Ok(Space {
            ordinal_part,
            perfect,
        })
    }

    /// The ordinal space of all ordinals `<= top`.
    pub fn ordinal(top: Ordinal) -> Space {
        Space {
            ordinal_part: Some(top),
            perfect: false,
        }
    }

    pub fn cantor() -> Space {
        Space {
            ordinal_part: None,
            perfect: true,
        }
    }

    pub fn sum(top: Ordinal) -> Space {
        Space {
            ordinal_part: Some(top),
            perfect: true,
        }
    }

    /// `n` discrete points `0..n`.
    pub fn discrete(n: u64) -> Result<Space> {
        if n == 0 {
            return Err(Error::InvalidArgument("a space needs at least one point".into()));
        }
        Ok(Space::ordinal(Ordinal::finite(n - 1)))
    }

    pub fn ordinal_part(&self) -> Option<&Ordinal> {
        self.ordinal_part.as_ref()
    }

    pub fn has_perfect_part(&self) -> bool {
        self.perfect
    }

    pub fn is_finite(&self) -> bool {
        !self.perfect && self.ordinal_part.as_ref().is_some_and(Ordinal::is_finite)
    }

    /// All points of a finite space, in order.
    pub fn finite_points(&self) -> Option<Vec<Point>> {
        if self.perfect {
            return None;
        }
        let n = self.ordinal_part.as_ref()?.as_finite()?;
        Some((0..=n).map(|k| Point::Ord(Ordinal::finite(k))).collect())
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        match p {
            Point::Ord(b) => self.ordinal_part.as_ref().is_some_and(|top| b <= top),
            Point::Perfect(_) => self.perfect,
        }
    }

    pub(crate) fn check_point(&self, p: &Point) -> Result<()> {
        if self.contains_point(p) {
            Ok(())
        } else {
            Err(Error::PointOutOfRange(p.to_string()))
        }
    }

    pub(crate) fn check_same(&self, other: &Space) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(self.to_string(), other.to_string()))
        }
    }

    /// `{p}` is open.
    pub fn is_isolated(&self, p: &Point) -> bool {
        match p {
            Point::Ord(b) => !b.is_limit(),
            Point::Perfect(_) => false,
        }
    }

    /// Membership of `p` in the derived set `X^alpha`.
    ///
    /// Points of the Cantor component survive every stage. An ordinal point
    /// `b` survives to stage `alpha > 0` iff `b = w^alpha * g` with `g >= 1`.
    pub fn cb_member(&self, p: &Point, alpha: &Ordinal) -> bool {
        match p {
            Point::Perfect(_) => true,
            Point::Ord(b) => {
                alpha.is_zero() || b.trailing_exponent().is_some_and(|e| e >= alpha)
            }
        }
    }

    /// A space homeomorphic to `X^alpha`, or `None` when it is empty.
    pub fn derived_space(&self, alpha: &Ordinal) -> Option<Space> {
        if alpha.is_zero() {
            return Some(self.clone());
        }
        let ordinal_part = self.ordinal_part.as_ref().and_then(|top| {
            let (q, _) = top.divmod(alpha);
            match q.as_finite() {
                Some(0) => None,
                Some(n) => Some(Ordinal::finite(n - 1)),
                None => Some(q),
            }
        });
        Space::new(ordinal_part, self.perfect).ok()
    }

    /// Image of `p in X^alpha` under the homeomorphism onto
    /// [`derived_space`](Self::derived_space). `w^alpha * g` goes to `g - 1`
    /// for finite `g` and to `g` otherwise.
    pub fn derived_point(&self, p: &Point, alpha: &Ordinal) -> Option<Point> {
        if !self.contains_point(p) || !self.cb_member(p, alpha) {
            return None;
        }
        match p {
            Point::Perfect(_) => Some(p.clone()),
            Point::Ord(_) if alpha.is_zero() => Some(p.clone()),
            Point::Ord(b) => {
                let (g, _) = b.divmod(alpha);
                Some(Point::Ord(match g.as_finite() {
                    Some(n) => Ordinal::finite(n - 1),
                    None => g,
                }))
            }
        }
    }

    pub fn cb_rank(&self) -> CbRank {
        let final_stage = if self.perfect {
            FinalStage::Perfect
        } else {
            FinalStage::Empty
        };
        let Some(top) = &self.ordinal_part else {
            return CbRank {
                rank: Ordinal::zero(),
                final_stage,
                penultimate_count: None,
            };
        };
        let (rank, count) = match (top.leading_exponent(), top.leading_coefficient()) {
            (None, _) => (Ordinal::one(), 1),
            (Some(e), Some(c)) if e.is_zero() => (Ordinal::one(), c + 1),
            (Some(e), Some(c)) => (e.successor(), c),
            _ => unreachable!(),
        };
        CbRank {
            rank,
            final_stage,
            penultimate_count: Some(count),
        }
    }

    pub fn is_scattered(&self) -> bool {
        !self.perfect
    }

    /// Finite spaces are the only extremally disconnected ones here. For the
    /// others a regular closed, non-open set is returned.
    pub fn is_extremally_disconnected(&self) -> (bool, Option<NonExtremalWitness>) {
        if self.is_finite() {
            (true, None)
        } else if self.ordinal_part.as_ref().is_some_and(|t| !t.is_finite()) {
            (false, Some(NonExtremalWitness::OrdinalEvens))
        } else {
            (false, Some(NonExtremalWitness::CantorZeroRuns))
        }
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Space> {
        if cur.eat_str("cantor") {
            return Ok(Space::cantor());
        }
        let summed = cur.eat_str("sum(");
        cur.expect_str("ord(")?;
        let top = Ordinal::parse_from(cur)?;
        cur.expect(')')?;
        if summed {
            cur.expect(',')?;
            cur.expect_str("cantor")?;
            cur.expect(')')?;
            Ok(Space::sum(top))
        } else {
            Ok(Space::ordinal(top))
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ordinal_part, self.perfect) {
            (Some(top), false) => write!(f, "ord({top})"),
            (Some(top), true) => write!(f, "sum(ord({top}),cantor)"),
            (None, _) => write!(f, "cantor"),
        }
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, Space::parse_from)
    }
}

/// What is left once the derivative sequence stabilises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinalStage {
    Empty,
    Perfect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbRank {
    pub rank: Ordinal,
    pub final_stage: FinalStage,
    /// Size of the ordinal part of the last nonempty scattered stage.
    pub penultimate_count: Option<u64>,
}

/// Eventually periodic binary sequence, a point of the Cantor component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSeq {
    prefix: Vec<bool>,
    period: Vec<bool>,
}

impl BitSeq {
    pub fn new(prefix: Vec<bool>, period: Vec<bool>) -> Result<BitSeq> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let (prefix, period) = periodic::canonicalize(prefix, period);
        Ok(BitSeq { prefix, period })
    }

    pub fn zeros() -> BitSeq {
        BitSeq {
            prefix: Vec::new(),
            period: vec![false],
        }
    }

    pub fn prefix(&self) -> &[bool] {
        &self.prefix
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    pub fn bit(&self, k: usize) -> bool {
        *periodic::at(&self.prefix, &self.period, k)
    }

    /// Position of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        let window = self.prefix.len() + self.period.len();
        (0..window).find(|&k| self.bit(k))
    }
}

/// A point of a [`Space`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Ord(Ordinal),
    Perfect(BitSeq),
}

impl Point {
    pub fn ord(b: impl Into<Ordinal>) -> Point {
        Point::Ord(b.into())
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Point> {
        if cur.eat_str("pt(") {
            let prefix = cur.bits();
            cur.expect(',')?;
            let at = cur.pos();
            let period = cur.bits();
            if period.is_empty() {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "period must be a nonempty bit string".into(),
                });
            }
            cur.expect(')')?;
            Ok(Point::Perfect(BitSeq::new(prefix, period)?))
        } else {
            Ok(Point::Ord(Ordinal::parse_from(cur)?))
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Ord(b) => write!(f, "{b}"),
            Point::Perfect(s) => write!(f, "pt({},{})", format_bits(&s.prefix), format_bits(&s.period)),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, Point::parse_from)
    }
}

/// Reduced binary trie of cylinders: no `Split` has two equal leaf children.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Cyl {
    Empty,
    Full,
    Split(Box<Cyl>, Box<Cyl>),
}

impl Cyl {
    fn split(zero: Cyl, one: Cyl) -> Cyl {
        match (&zero, &one) {
            (Cyl::Empty, Cyl::Empty) => Cyl::Empty,
            (Cyl::Full, Cyl::Full) => Cyl::Full,
            _ => Cyl::Split(Box::new(zero), Box::new(one)),
        }
    }

    fn cylinder(bits: &[bool]) -> Cyl {
        match bits.split_first() {
            None => Cyl::Full,
            Some((&b, rest)) => {
                let inner = Cyl::cylinder(rest);
                if b {
                    Cyl::split(Cyl::Empty, inner)
                } else {
                    Cyl::split(inner, Cyl::Empty)
                }
            }
        }
    }

    fn union(&self, other: &Cyl) -> Cyl {
        match (self, other) {
            (Cyl::Full, _) | (_, Cyl::Full) => Cyl::Full,
            (Cyl::Empty, x) | (x, Cyl::Empty) => x.clone(),
            (Cyl::Split(a, b), Cyl::Split(c, d)) => Cyl::split(a.union(c), b.union(d)),
        }
    }

    fn intersect(&self, other: &Cyl) -> Cyl {
        match (self, other) {
            (Cyl::Empty, _) | (_, Cyl::Empty) => Cyl::Empty,
            (Cyl::Full, x) | (x, Cyl::Full) => x.clone(),
            (Cyl::Split(a, b), Cyl::Split(c, d)) => Cyl::split(a.intersect(c), b.intersect(d)),
        }
    }

    fn complement(&self) -> Cyl {
        match self {
            Cyl::Empty => Cyl::Full,
            Cyl::Full => Cyl::Empty,
            Cyl::Split(a, b) => Cyl::split(a.complement(), b.complement()),
        }
    }

    fn contains(&self, seq: &BitSeq) -> bool {
        let mut node = self;
        let mut k = 0;
        loop {
            match node {
                Cyl::Empty => return false,
                Cyl::Full => return true,
                Cyl::Split(zero, one) => {
                    node = if seq.bit(k) { one } else { zero };
                    k += 1;
                }
            }
        }
    }

    fn collect(&self, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        match self {
            Cyl::Empty => {}
            Cyl::Full => out.push(path.clone()),
            Cyl::Split(zero, one) => {
                path.push(false);
                zero.collect(path, out);
                path.pop();
                path.push(true);
                one.collect(path, out);
                path.pop();
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersect,
    Minus,
}

/// A clopen subset of a [`Space`] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clopen {
    space: Space,
    intervals: Vec<(Ordinal, Ordinal)>,
    cyl: Cyl,
}

impl Clopen {
    pub fn empty(space: &Space) -> Clopen {
        Clopen {
            space: space.clone(),
            intervals: Vec::new(),
            cyl: Cyl::Empty,
        }
    }

    pub fn whole(space: &Space) -> Clopen {
        Clopen {
            space: space.clone(),
            intervals: space
                .ordinal_part
                .iter()
                .map(|top| (Ordinal::zero(), top.clone()))
                .collect(),
            cyl: if space.perfect { Cyl::Full } else { Cyl::Empty },
        }
    }

    /// Validates raw intervals and cylinders and brings them to canonical form.
    pub fn normalize(
        raw_intervals: Vec<(Ordinal, Ordinal)>,
        raw_cylinders: Vec<Vec<bool>>,
        space: &Space,
    ) -> Result<Clopen> {
        if !raw_intervals.is_empty() && space.ordinal_part.is_none() {
            return Err(Error::MissingComponent("ordinal"));
        }
        if !raw_cylinders.is_empty() && !space.perfect {
            return Err(Error::MissingComponent("perfect"));
        }
        for (lo, hi) in &raw_intervals {
            if lo.is_limit() {
                return Err(Error::LimitIntervalStart {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            if lo > hi {
                return Err(Error::ReversedInterval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            let top = space.ordinal_part.as_ref().unwrap();
            if hi > top {
                return Err(Error::IntervalOutOfRange {
                    hi: hi.clone(),
                    top: top.clone(),
                });
            }
        }
        let cyl = raw_cylinders
            .iter()
            .fold(Cyl::Empty, |acc, bits| acc.union(&Cyl::cylinder(bits)));
        Ok(Clopen {
            space: space.clone(),
            intervals: merge_intervals(raw_intervals),
            cyl,
        })
    }

    pub fn interval(lo: Ordinal, hi: Ordinal, space: &Space) -> Result<Clopen> {
        Clopen::normalize(vec![(lo, hi)], Vec::new(), space)
    }

    pub fn cylinder(bits: Vec<bool>, space: &Space) -> Result<Clopen> {
        Clopen::normalize(Vec::new(), vec![bits], space)
    }

    /// The singleton `{p}` for an isolated ordinal point.
    pub fn singleton(p: &Point, space: &Space) -> Result<Clopen> {
        match p {
            Point::Ord(b) if space.is_isolated(p) => Clopen::interval(b.clone(), b.clone(), space),
            _ => Err(Error::InvalidArgument(format!("{{{p}}} is not clopen"))),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn intervals(&self) -> &[(Ordinal, Ordinal)] {
        &self.intervals
    }

    /// The cylinder antichain, in lexicographic order.
    pub fn cylinders(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        self.cyl.collect(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.cyl == Cyl::Empty
    }

    pub fn is_whole(&self) -> bool {
        *self == Clopen::whole(&self.space)
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        self.space.check_point(p)?;
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Point) -> bool {
        match p {
            Point::Ord(b) => {
                let idx = self.intervals.partition_point(|(_, hi)| hi < b);
                self.intervals.get(idx).is_some_and(|(lo, _)| lo <= b)
            }
            Point::Perfect(seq) => self.cyl.contains(seq),
        }
    }

    /// Some point of a nonempty clopen: the left end of the first interval,
    /// or the first cylinder continued by zeros.
    pub fn sample_point(&self) -> Option<Point> {
        if let Some((lo, _)) = self.intervals.first() {
            return Some(Point::Ord(lo.clone()));
        }
        let cyl = self.cylinders().into_iter().next()?;
        Some(Point::Perfect(BitSeq::new(cyl, vec![false]).unwrap()))
    }

    pub fn apply(&self, other: &Clopen, op: BoolOp) -> Result<Clopen> {
        self.space.check_same(&other.space)?;
        Ok(match op {
            BoolOp::Union => self.union_unchecked(other),
            BoolOp::Intersect => self.intersect_unchecked(other),
            BoolOp::Minus => self.intersect_unchecked(&other.complement()),
        })
    }

    pub fn union(&self, other: &Clopen) -> Result<Clopen> {
        self.apply(other, BoolOp::Union)
    }

    pub fn intersect(&self, other: &Clopen) -> Result<Clopen> {
        self.apply(other, BoolOp::Intersect)
    }

    pub fn minus(&self, other: &Clopen) -> Result<Clopen> {
        self.apply(other, BoolOp::Minus)
    }

    pub fn is_subset(&self, other: &Clopen) -> Result<bool> {
        Ok(self.minus(other)?.is_empty())
    }

    pub(crate) fn union_unchecked(&self, other: &Clopen) -> Clopen {
        let mut raw = self.intervals.clone();
        raw.extend(other.intervals.iter().cloned());
        Clopen {
            space: self.space.clone(),
            intervals: merge_intervals(raw),
            cyl: self.cyl.union(&other.cyl),
        }
    }

    pub(crate) fn intersect_unchecked(&self, other: &Clopen) -> Clopen {
        let (a, b) = (&self.intervals, &other.intervals);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let lo = (&a[i].0).max(&b[j].0);
            let hi = (&a[i].1).min(&b[j].1);
            if lo <= hi {
                out.push((lo.clone(), hi.clone()));
            }
            if a[i].1 < b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        Clopen {
            space: self.space.clone(),
            intervals: out,
            cyl: self.cyl.intersect(&other.cyl),
        }
    }

    pub fn complement(&self) -> Clopen {
        let mut out = Vec::new();
        if let Some(top) = &self.space.ordinal_part {
            let mut start = Some(Ordinal::zero());
            for (lo, hi) in &self.intervals {
                if let Some(s) = start.take() {
                    if s < *lo {
                        out.push((s, lo.predecessor().expect("interval starts are successors")));
                    }
                }
                if hi < top {
                    start = Some(hi.successor());
                }
            }
            if let Some(s) = start {
                out.push((s, top.clone()));
            }
        }
        Clopen {
            space: self.space.clone(),
            intervals: out,
            cyl: if self.space.perfect {
                self.cyl.complement()
            } else {
                Cyl::Empty
            },
        }
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>, space: &Space) -> Result<Clopen> {
        if cur.eat_str("{}") {
            return Ok(Clopen::empty(space));
        }
        let mut intervals = Vec::new();
        let mut cylinders = Vec::new();
        loop {
            if cur.eat('[') {
                let lo = Ordinal::parse_from(cur)?;
                cur.expect(',')?;
                let hi = Ordinal::parse_from(cur)?;
                cur.expect(']')?;
                intervals.push((lo, hi));
            } else if cur.eat_str("cyl(") {
                cylinders.push(cur.bits());
                cur.expect(')')?;
            } else {
                return cur.error("expected '[' or \"cyl(\"");
            }
            if !cur.eat(';') {
                break;
            }
        }
        Clopen::normalize(intervals, cylinders, space)
    }

    pub fn parse(text: &str, space: &Space) -> Result<Clopen> {
        parse_all(text, |cur| Clopen::parse_from(cur, space))
    }
}

fn merge_intervals(mut raw: Vec<(Ordinal, Ordinal)>) -> Vec<(Ordinal, Ordinal)> {
    raw.sort();
    let mut out: Vec<(Ordinal, Ordinal)> = Vec::with_capacity(raw.len());
    for (lo, hi) in raw {
        if let Some(last) = out.last_mut() {
            if lo <= last.1.successor() {
                if hi > last.1 {
                    last.1 = hi;
                }
                continue;
            }
        }
        out.push((lo, hi));
    }
    out
}

impl fmt::Display for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let mut items: Vec<String> = self
            .intervals
            .iter()
            .map(|(lo, hi)| format!("[{lo},{hi}]"))
            .collect();
        items.extend(self.cylinders().iter().map(|c| format!("cyl({})", format_bits(c))));
        write!(f, "{}", items.join(";"))
    }
}

impl fmt::Debug for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}

/// A regular closed set `V = cl(U)` that is not open, certifying that a
/// space is not extremally disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonExtremalWitness {
    /// `U = {2, 4, 6, ...}`, `V = U + {w}`.
    OrdinalEvens,
    /// `U = union of cyl(0^(2k) 1)`, `V = U + {000...}`.
    CantorZeroRuns,
}

impl NonExtremalWitness {
    pub fn describe(&self) -> &'static str {
        match self {
            NonExtremalWitness::OrdinalEvens => {
                "U = {2,4,6,...} is open; V = cl(U) = U + {w} is regular closed but not open at w"
            }
            NonExtremalWitness::CantorZeroRuns => {
                "U = union of cyl(0^(2k)1) is open; V = cl(U) = U + {pt(,0)} is regular closed but not open at pt(,0)"
            }
        }
    }

    pub fn in_open(&self, p: &Point) -> bool {
        match (self, p) {
            (NonExtremalWitness::OrdinalEvens, Point::Ord(b)) => {
                matches!(b.as_finite(), Some(n) if n > 0 && n % 2 == 0)
            }
            (NonExtremalWitness::CantorZeroRuns, Point::Perfect(s)) => {
                s.first_one().is_some_and(|k| k % 2 == 0)
            }
            _ => false,
        }
    }

    pub fn in_closure(&self, p: &Point) -> bool {
        self.in_open(p) || *p == self.limit_point()
    }

    /// The point where `V` fails to be open.
    pub fn limit_point(&self) -> Point {
        match self {
            NonExtremalWitness::OrdinalEvens => Point::Ord(Ordinal::omega()),
            NonExtremalWitness::CantorZeroRuns => Point::Perfect(BitSeq::zeros()),
        }
    }

    /// A point outside `V` inside the `depth`-th basic neighbourhood of the
    /// limit point (`[depth+1, w]` resp. `cyl(0^depth)`).
    pub fn escape_point(&self, depth: u64) -> Point {
        let odd = if depth.is_multiple_of(2) { depth + 1 } else { depth + 2 };
        match self {
            NonExtremalWitness::OrdinalEvens => Point::ord(odd),
            NonExtremalWitness::CantorZeroRuns => {
                let mut prefix = vec![false; odd as usize];
                prefix.push(true);
                Point::Perfect(BitSeq::new(prefix, vec![false]).unwrap())
            }
        }
    }

    /// The `depth`-th basic clopen neighbourhood of the limit point.
    pub fn neighbourhood(&self, depth: u64, space: &Space) -> Result<Clopen> {
        match self {
            NonExtremalWitness::OrdinalEvens => {
                Clopen::interval(Ordinal::finite(depth + 1), Ordinal::omega(), space)
            }
            NonExtremalWitness::CantorZeroRuns => Clopen::cylinder(vec![false; depth as usize], space),
        }
    }
}
