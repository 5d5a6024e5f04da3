//! Canonical form shared by eventually periodic words (bit sequences and
//! integer sequences).

/// Reduces `period` to its primitive root and strips the prefix until its
/// last entry breaks the periodic pattern.
pub(crate) fn canonicalize<T: Clone + PartialEq>(mut prefix: Vec<T>, mut period: Vec<T>) -> (Vec<T>, Vec<T>) {
    debug_assert!(!period.is_empty());
    let n = period.len();
    if let Some(d) = (1..n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i % d])) {
        period.truncate(d);
    }
    while !prefix.is_empty() && prefix.last() == period.last() {
        prefix.pop();
        period.rotate_right(1);
    }
    (prefix, period)
}

pub(crate) fn at<'a, T>(prefix: &'a [T], period: &'a [T], k: usize) -> &'a T {
    if k < prefix.len() {
        &prefix[k]
    } else {
        &period[(k - prefix.len()) % period.len()]
    }
}
