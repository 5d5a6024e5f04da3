//! Ideal theory read off the function model.
//!
//! Under `Inv(R) = C(X, Z)` an integral invertible ideal is a nonnegative
//! step function, and
//!
//! | ideal side            | function side            |
//! |-----------------------|--------------------------|
//! | `I * J`               | `f + g`                  |
//! | `I + J`               | `min(f, g)`              |
//! | `I ∩ J`               | `max(f, g)`              |
//! | `I ⊆ J`               | `f >= g`                 |
//! | `rad(I)`              | indicator of `supp f`    |
//! | `R`                   | `0`                      |
//! | `J(R)`                | `1`                      |
//!
//! Maximal ideals are points of the space; sharp ones are the isolated
//! points. Overrings `R_alpha` of the derivative tower have the derived sets
//! `X^alpha` as maximal spectra.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lgroup::StepFunction;
use crate::ordinal::Ordinal;
use crate::space::{Clopen, Point, Space};

/// Longest radical chain `factor` is willing to materialise.
pub const MAX_CHAIN_LEN: usize = 1 << 20;

/// An integral invertible ideal, i.e. a nonnegative step function.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal {
    f: StepFunction,
}

impl Ideal {
    pub fn new(f: StepFunction) -> Result<Ideal> {
        if !f.is_nonneg() {
            return Err(Error::NegativeValue);
        }
        Ok(Ideal { f })
    }

    pub fn unit(space: &Space) -> Ideal {
        Ideal {
            f: StepFunction::zero(space),
        }
    }

    pub fn jacobson(space: &Space) -> Ideal {
        Ideal {
            f: StepFunction::constant(space, 1),
        }
    }

    pub fn function(&self) -> &StepFunction {
        &self.f
    }

    pub fn into_function(self) -> StepFunction {
        self.f
    }

    pub fn space(&self) -> &Space {
        self.f.space()
    }

    pub fn is_unit(&self) -> bool {
        self.f.is_zero()
    }

    pub fn mul(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            f: self.f.add(&other.f)?,
        })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            f: self.f.meet(&other.f)?,
        })
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            f: self.f.join(&other.f)?,
        })
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Ideal) -> Result<bool> {
        other.f.leq(&self.f)
    }

    pub fn radical(&self) -> Ideal {
        Ideal {
            f: StepFunction::indicator(&self.f.support()),
        }
    }

    pub fn is_radical(&self) -> bool {
        *self == self.radical()
    }

    /// The descending chain of level sets `{f >= k}`, `k = 1..=max f`.
    pub fn factor(&self) -> Result<RadicalFactorization> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let top = self.f.max_value();
        let len = top
            .to_usize()
            .filter(|&n| n <= MAX_CHAIN_LEN)
            .ok_or_else(|| Error::TooLarge(top.to_string()))?;
        let chain = (1..=len)
            .map(|k| self.f.level_set(&BigInt::from(k)))
            .collect();
        Ok(RadicalFactorization { chain })
    }

    /// The irredundant decomposition `I = ∩ M^k` over a finite space.
    pub fn max_power_decomposition(&self) -> Result<Vec<(Point, BigInt)>> {
        let points = self
            .space()
            .finite_points()
            .ok_or_else(|| Error::Unsupported(format!("{} is infinite; the intersection of powers is not finite", self.space())))?;
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(points
            .into_iter()
            .map(|p| {
                let k = self.f.eval_unchecked(&p);
                (p, k)
            })
            .filter(|(_, k)| !k.is_zero())
            .collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.f, f)
    }
}

/// `I = J_1 J_2 ... J_n` with radical `J_k`, recorded as the clopen
/// supports `A_1 ⊇ A_2 ⊇ ... ⊇ A_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RadicalFactorization {
    chain: Vec<Clopen>,
}

impl RadicalFactorization {
    pub fn new(chain: Vec<Clopen>) -> Result<RadicalFactorization> {
        let Some(first) = chain.first() else {
            return Err(Error::InvalidChain("chain is empty".into()));
        };
        for (k, a) in chain.iter().enumerate() {
            first.space().check_same(a.space())?;
            if a.is_empty() {
                return Err(Error::InvalidChain(format!("member {} is empty", k + 1)));
            }
        }
        for (k, pair) in chain.windows(2).enumerate() {
            if !pair[1].is_subset(&pair[0])? {
                return Err(Error::InvalidChain(format!(
                    "member {} is not contained in member {}",
                    k + 2,
                    k + 1
                )));
            }
        }
        Ok(RadicalFactorization { chain })
    }

    pub fn chain(&self) -> &[Clopen] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn space(&self) -> &Space {
        self.chain[0].space()
    }

    /// Multiplies the radical ideals back together.
    pub fn product(&self) -> Ideal {
        let f = self
            .chain
            .iter()
            .map(StepFunction::indicator)
            .fold(StepFunction::zero(self.space()), |acc, chi| {
                acc.add(&chi).expect("chain members share a space")
            });
        Ideal { f }
    }
}

pub fn sp_factor(f: &StepFunction) -> Result<RadicalFactorization> {
    Ideal::new(f.clone())?.factor()
}

pub fn sp_product(chain: Vec<Clopen>) -> Result<Ideal> {
    Ok(RadicalFactorization::new(chain)?.product())
}

/// A maximal ideal is sharp iff it is an isolated point.
pub fn is_sharp(space: &Space, m: &Point) -> Result<bool> {
    space.check_point(m)?;
    Ok(space.is_isolated(m))
}

/// `Some(alpha)` iff the rank is `alpha + 1` with `X^(alpha+1)` empty.
pub fn sharp_degree(space: &Space) -> Option<Ordinal> {
    if !space.is_scattered() {
        return None;
    }
    let top = space.ordinal_part()?;
    Some(top.leading_exponent().cloned().unwrap_or_else(Ordinal::zero))
}

/// `Some(alpha)` iff the rank is `alpha` with `X^alpha` nonempty.
pub fn dull_degree(space: &Space) -> Option<Ordinal> {
    if space.is_scattered() {
        None
    } else {
        Some(space.cb_rank().rank)
    }
}

/// Maximal spectrum of the overring `R_alpha`.
pub fn overring_spectrum(space: &Space, alpha: &Ordinal) -> Option<Space> {
    space.derived_space(alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeKind {
    Sharp,
    Dull,
}

/// Size of `X^degree`, the last stage of the tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinalSize {
    Finite(u64),
    Perfect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub kind: DegreeKind,
    pub degree: Ordinal,
    pub rank: Ordinal,
    pub final_size: FinalSize,
}

pub fn degree_report(space: &Space) -> DegreeReport {
    let rank = space.cb_rank();
    match sharp_degree(space) {
        Some(degree) => DegreeReport {
            kind: DegreeKind::Sharp,
            degree,
            final_size: FinalSize::Finite(rank.penultimate_count.expect("scattered spaces have an ordinal part")),
            rank: rank.rank,
        },
        None => DegreeReport {
            kind: DegreeKind::Dull,
            degree: dull_degree(space).expect("non-scattered"),
            final_size: FinalSize::Perfect,
            rank: rank.rank,
        },
    }
}
