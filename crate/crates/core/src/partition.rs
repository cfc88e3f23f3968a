//! Partitions, their fundamental-weight coordinates and the domino families
//! `P^(2)`, `P^(1,1)` and their intersection.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so structural equality is equality of diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single column `(1^k)`, i.e. the fundamental weight `omega_k`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The rank `|p|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| self.parts[i] >= p)
    }

    /// Componentwise sum; this is the sum of the corresponding dominant weights.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_sorted((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Reverse of the part sequence padded with leading zeros to length `m`,
    /// so `rev[0] <= rev[1] <= ... <= rev[m-1]`.
    pub fn reversed_padded(&self, m: usize) -> Vec<u32> {
        assert!(self.len() <= m, "partition {self} longer than {m}");
        (0..m).map(|i| self.part(m - 1 - i)).collect()
    }

    /// Coordinates in the basis of fundamental weights: `a_i` is the number of
    /// columns of height `i`.
    pub fn fundamental_coords(&self) -> WeightVector {
        let mut coords = WeightVector::zero();
        for i in 0..self.len() {
            let a = self.part(i) - self.part(i + 1);
            coords.set(i + 1, a as i64);
        }
        coords
    }

    /// Inverse of [`Partition::fundamental_coords`]; `None` when some
    /// coordinate is negative.
    pub fn from_coords(w: &WeightVector) -> Option<Partition> {
        if !w.is_dominant() {
            return None;
        }
        let top = w.max_index();
        let mut parts = vec![0u32; top];
        let mut acc = 0i64;
        for i in (1..=top).rev() {
            acc += w.get(i);
            parts[i - 1] = acc as u32;
        }
        Some(Partition::from_sorted(parts))
    }

    pub fn classify(&self) -> PartitionClass {
        let coords = self.fundamental_coords();
        let in_p2 = coords.iter().all(|(_, a)| a % 2 == 0);
        let in_p11 = coords.iter().all(|(i, _)| i % 2 == 0);
        PartitionClass {
            in_p2,
            in_p11,
            in_boxplus: in_p2 && in_p11,
        }
    }

    /// Splits `p` as `p_boxplus + p_upper` with `p_boxplus` tileable by 2x2 squares:
    /// `p_boxplus = sum_i (a_2i - (a_2i mod 2)) omega_2i`.
    pub fn decompose_boxplus(&self) -> (Partition, Partition) {
        let coords = self.fundamental_coords();
        let mut lower = WeightVector::zero();
        let mut upper = WeightVector::zero();
        for (i, a) in coords.iter() {
            if i % 2 == 0 {
                lower.set(i, a - a % 2);
                upper.set(i, a % 2);
            } else {
                upper.set(i, a);
            }
        }
        (
            Partition::from_coords(&lower).expect("nonnegative"),
            Partition::from_coords(&upper).expect("nonnegative"),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"7,6,5,3,1"`. The empty partition is written `""`, `"0"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::MalformedPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionClass {
    pub in_p2: bool,
    pub in_p11: bool,
    pub in_boxplus: bool,
}

/// A finitely supported integer combination `sum_i a_i omega_i` (`i >= 1`).
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    coords: BTreeMap<usize, i64>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector::default()
    }

    /// Builds from a dense slice where `dense[k]` is the coefficient of `omega_{k+1}`.
    pub fn from_dense(dense: &[i64]) -> Self {
        let mut w = WeightVector::zero();
        for (k, &a) in dense.iter().enumerate() {
            w.set(k + 1, a);
        }
        w
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, a: i64) {
        assert!(i >= 1, "fundamental weights are indexed from 1");
        if a == 0 {
            self.coords.remove(&i);
        } else {
            self.coords.insert(i, a);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coords.iter().map(|(&i, &a)| (i, a))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.values().all(|&a| a >= 0)
    }

    pub fn max_index(&self) -> usize {
        self.coords.keys().next_back().copied().unwrap_or(0)
    }

    /// Number of boxes of the corresponding diagram: `sum_i i * a_i`.
    pub fn size(&self) -> i64 {
        self.iter().map(|(i, a)| i as i64 * a).sum()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for (i, a) in other.iter() {
            out.set(i, out.get(i) + a);
        }
        out
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for (i, a) in other.iter() {
            out.set(i, out.get(i) - a);
        }
        out
    }

    /// `self <= other` in the dominance-free order: `other - self` has
    /// nonnegative coordinates.
    pub fn le(&self, other: &WeightVector) -> bool {
        other.sub(self).is_dominant()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.iter().map(|(i, a)| format!("{a}*w{i}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, usize::MAX, n)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions_bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions of size at most `n` with at most `max_len` parts, by size then
/// reverse lexicographic order.
pub fn partitions_up_to(n: u32, max_len: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_bounded(k, max_len, k)).collect()
}

/// Partitions of `n` in `P^(1,1)_m`: at most `m` parts, each part repeated an
/// even number of times.
pub fn p11_partitions_of(n: u32, m: usize) -> Vec<Partition> {
    if n % 2 != 0 {
        return Vec::new();
    }
    partitions_bounded(n / 2, m / 2, n / 2)
        .into_iter()
        .map(|k| Partition::from_sorted(k.parts().iter().flat_map(|&p| [p, p]).collect()))
        .collect()
}

/// Partitions of `n` in `P^(2)_m`: at most `m` parts, all even.
pub fn p2_partitions_of(n: u32, m: usize) -> Vec<Partition> {
    if n % 2 != 0 {
        return Vec::new();
    }
    partitions_bounded(n / 2, m, n / 2)
        .into_iter()
        .map(|k| Partition::from_sorted(k.parts().iter().map(|&p| 2 * p).collect()))
        .collect()
}
