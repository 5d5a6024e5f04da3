//! Random generators shared by the property and acceptance suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sptopo::space::BitSeq;
use sptopo::{Clopen, EpSequence, Ordinal, Point, Space, StepFunction};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// Random ordinal; exponents are themselves random ordinals of lower depth.
pub fn ordinal(rng: &mut impl Rng, depth: u32) -> Ordinal {
    let n_terms = rng.gen_range(0..=3);
    let mut exps: Vec<Ordinal> = (0..n_terms)
        .map(|_| {
            if depth == 0 {
                Ordinal::finite(rng.gen_range(0..=3))
            } else {
                ordinal(rng, depth - 1)
            }
        })
        .collect();
    exps.sort();
    exps.dedup();
    exps.reverse();
    let terms = exps.into_iter().map(|e| (e, rng.gen_range(1..=4))).collect();
    Ordinal::from_terms(terms).unwrap()
}

/// Tops of ordinal spaces: mostly below `w^4`, occasionally `w^(w)`-sized.
pub fn top(rng: &mut impl Rng) -> Ordinal {
    if rng.gen_bool(0.15) {
        Ordinal::finite(rng.gen_range(0..6))
    } else {
        let depth = if rng.gen_bool(0.1) { 1 } else { 0 };
        ordinal(rng, depth)
    }
}

pub fn space(rng: &mut impl Rng) -> Space {
    match rng.gen_range(0..6) {
        0 => Space::cantor(),
        1 => Space::sum(top(rng)),
        _ => Space::ordinal(top(rng)),
    }
}

/// Points `<= top`, biased towards the interesting ones (limits, ends).
pub fn ordinal_point(rng: &mut impl Rng, top: &Ordinal) -> Ordinal {
    let terms: Vec<(Ordinal, u64)> = top.terms().map(|(e, c)| (e.clone(), c)).collect();
    for _ in 0..8 {
        let candidate = match rng.gen_range(0..4) {
            0 => ordinal(rng, 0),
            1 => {
                // truncate the normal form of top and lower the last coefficient
                let keep = rng.gen_range(0..=terms.len());
                let mut t = terms[..keep].to_vec();
                if let Some(last) = t.last_mut() {
                    last.1 = rng.gen_range(1..=last.1);
                }
                Ordinal::from_terms(t).unwrap()
            }
            2 => top.clone(),
            _ => {
                let keep = rng.gen_range(0..=terms.len());
                Ordinal::from_terms(terms[..keep].to_vec())
                    .unwrap()
                    .add(&Ordinal::finite(rng.gen_range(0..3)))
            }
        };
        if candidate <= *top {
            return candidate;
        }
    }
    Ordinal::zero()
}

pub fn bits(rng: &mut impl Rng, max_len: usize) -> Vec<bool> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_bool(0.5)).collect()
}

pub fn perfect_point(rng: &mut impl Rng) -> Point {
    let prefix = bits(rng, 5);
    let mut period = bits(rng, 2);
    period.push(rng.gen_bool(0.5));
    Point::Perfect(BitSeq::new(prefix, period).unwrap())
}

pub fn point(rng: &mut impl Rng, space: &Space) -> Point {
    match (space.ordinal_part(), space.has_perfect_part()) {
        (Some(top), true) if rng.gen_bool(0.5) => Point::Ord(ordinal_point(rng, top)),
        (Some(top), false) => Point::Ord(ordinal_point(rng, top)),
        _ => perfect_point(rng),
    }
}

fn not_limit(b: Ordinal) -> Ordinal {
    if b.is_limit() {
        b.successor()
    } else {
        b
    }
}

pub fn clopen(rng: &mut impl Rng, space: &Space) -> Clopen {
    let mut intervals = Vec::new();
    let mut cylinders = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        match space.ordinal_part() {
            Some(top) if !space.has_perfect_part() || rng.gen_bool(0.5) => {
                let a = not_limit(ordinal_point(rng, top));
                let b = ordinal_point(rng, top);
                if a <= b {
                    intervals.push((a, b));
                } else if a <= *top {
                    intervals.push((a.clone(), a));
                }
            }
            _ => {
                if space.has_perfect_part() {
                    cylinders.push(bits(rng, 4));
                }
            }
        }
    }
    Clopen::normalize(intervals, cylinders, space).unwrap()
}

pub fn step_function(rng: &mut impl Rng, space: &Space) -> StepFunction {
    let mut f = StepFunction::constant(space, rng.gen_range(-3..=3));
    for _ in 0..rng.gen_range(0..=3) {
        let chi = StepFunction::indicator(&clopen(rng, space));
        f = f.add(&chi.scale(rng.gen_range(-3..=3))).unwrap();
    }
    f
}

pub fn nonneg_step_function(rng: &mut impl Rng, space: &Space) -> StepFunction {
    let mut f = StepFunction::zero(space);
    for _ in 0..rng.gen_range(1..=4) {
        let chi = StepFunction::indicator(&clopen(rng, space));
        f = f.add(&chi.scale(rng.gen_range(0..=3))).unwrap();
    }
    f
}

pub fn int_vec(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<BigInt> {
    (0..len).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect()
}

pub fn ep_sequence(rng: &mut impl Rng, lo: i64, hi: i64) -> EpSequence {
    let pre = rng.gen_range(0..=4);
    let per = rng.gen_range(1..=4);
    EpSequence::new(int_vec(rng, pre, lo, hi), int_vec(rng, per, lo, hi)).unwrap()
}

/// A step function on `ord(w)`.
pub fn omega_function(rng: &mut impl Rng) -> StepFunction {
    step_function(rng, &Space::ordinal(Ordinal::omega()))
}

pub fn shuffled<T>(rng: &mut impl Rng, mut v: Vec<T>) -> Vec<T> {
    v.shuffle(rng);
    v
}

/// Pointwise agreement over prefix plus several periods of both sequences.
pub fn ep_agree(a: &EpSequence, b: &EpSequence) -> bool {
    let n = 2 * (a.prefix().len() + b.prefix().len() + a.period().len() * b.period().len()) + 2;
    (0..n).all(|k| a.eval(k) == b.eval(k))
}
