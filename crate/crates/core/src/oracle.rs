//! Independent ground truth: Lusztig's t-analogue of weight multiplicity as
//! an alternating sum over the Weyl group of the t-Kostant partition function.
//!
//! Weights are integer vectors in the coordinates `eps_1..eps_n`. Nothing
//! here touches tableaux.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    /// `gl_n`, roots `eps_i - eps_j`.
    A,
    /// `sp_2n`, roots `eps_i +- eps_j` and `2 eps_i`.
    C,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A => write!(f, "A"),
            RootKind::C => write!(f, "C"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootKind,
    n: usize,
    positive: Vec<Vec<i64>>,
    rho: Vec<i64>,
}

impl RootSystem {
    pub fn new(kind: RootKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("rank must be positive".into()));
        }
        let unit = |i: usize, c: i64| {
            let mut v = vec![0; n];
            v[i] = c;
            v
        };
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = unit(i, 1);
                v[j] = -1;
                positive.push(v);
                if kind == RootKind::C {
                    let mut v = unit(i, 1);
                    v[j] = 1;
                    positive.push(v);
                }
            }
            if kind == RootKind::C {
                positive.push(unit(i, 2));
            }
        }
        let rho = match kind {
            RootKind::A => (0..n).map(|i| (n - 1 - i) as i64).collect(),
            RootKind::C => (0..n).map(|i| (n - i) as i64).collect(),
        };
        Ok(RootSystem { kind, n, positive, rho })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// Coordinates of `beta` in the simple roots, or `None` outside the root lattice.
    pub fn simple_coords(&self, beta: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.n);
        let mut partial = 0;
        for (k, &b) in beta.iter().enumerate() {
            partial += b;
            if k + 1 < self.n {
                out.push(partial);
            }
        }
        match self.kind {
            RootKind::A => (partial == 0).then_some(out),
            RootKind::C => {
                if partial % 2 != 0 {
                    return None;
                }
                out.push(partial / 2);
                Some(out)
            }
        }
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.len() == self.n
            && w.windows(2).all(|p| p[0] >= p[1])
            && (self.kind == RootKind::A || w.last().is_none_or(|&x| x >= 0))
    }

    /// Every element of the Weyl group with its length.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..self.n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let sign_patterns = match self.kind {
                RootKind::A => 1,
                RootKind::C => 1usize << self.n,
            };
            for mask in 0..sign_patterns {
                let signs = (0..self.n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let mut w = WeylElement {
                    perm: p.to_vec(),
                    signs,
                    length: 0,
                };
                w.length = self.positive.iter().filter(|r| !is_positive(&w.apply(r))).count();
                out.push(w);
            }
        });
        out
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, visit);
        v.swap(k, i);
    }
}

/// A root is positive exactly when its first nonzero coordinate is.
fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// A signed permutation: `w(eps_i) = signs[i] * eps_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] * x;
        }
        out
    }

    pub fn sign(&self) -> i64 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Values of `P_t` on every lattice point of a box in simple-root coordinates.
struct PartitionTable {
    bounds: Vec<i64>,
    values: HashMap<Vec<i64>, Poly>,
}

impl PartitionTable {
    fn build(rs: &RootSystem, bounds: &[i64]) -> Self {
        let roots: Vec<Vec<i64>> = rs
            .positive
            .iter()
            .map(|r| rs.simple_coords(r).expect("roots lie in the root lattice"))
            .collect();
        let mut points = Vec::new();
        let mut cur = vec![0; bounds.len()];
        box_points(bounds, 0, &mut cur, &mut points);
        let mut values: HashMap<Vec<i64>, Poly> = HashMap::with_capacity(points.len());
        values.insert(vec![0; bounds.len()], Poly::one());
        let t = Poly::monomial(1, 1);
        // Unbounded knapsack over the roots; points are listed in
        // lexicographic order so `x - r` is always finished before `x`.
        for r in &roots {
            for x in &points {
                let prev: Vec<i64> = x.iter().zip(r).map(|(a, b)| a - b).collect();
                if prev.iter().any(|&c| c < 0) {
                    continue;
                }
                let Some(p) = values.get(&prev) else { continue };
                let add = &t * p;
                let entry = values.entry(x.clone()).or_insert_with(Poly::zero);
                *entry = &*entry + &add;
            }
        }
        PartitionTable {
            bounds: bounds.to_vec(),
            values,
        }
    }

    fn get(&self, coords: &[i64]) -> Poly {
        if coords.iter().zip(&self.bounds).any(|(c, b)| *c < 0 || c > b) {
            return Poly::zero();
        }
        self.values.get(coords).cloned().unwrap_or_else(Poly::zero)
    }
}

fn box_points(bounds: &[i64], k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == bounds.len() {
        out.push(cur.clone());
        return;
    }
    for v in 0..=bounds[k] {
        cur[k] = v;
        box_points(bounds, k + 1, cur, out);
    }
}

/// `P_t(beta) = sum over ways of writing beta as a sum of positive roots of
/// t^{number of roots}`.
pub fn t_kostant_partition(rs: &RootSystem, beta: &[i64]) -> Poly {
    match rs.simple_coords(beta) {
        Some(c) if beta.len() == rs.n && c.iter().all(|&x| x >= 0) => PartitionTable::build(rs, &c).get(&c),
        _ => Poly::zero(),
    }
}

/// `K_{lambda,mu}(t) = sum_w (-1)^{l(w)} P_t(w(lambda + rho) - (mu + rho))`.
pub fn lusztig_t_analogue(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Result<Poly> {
    if !rs.is_dominant(lambda) || !rs.is_dominant(mu) {
        return Err(Error::NonDominant(format!("{lambda:?}, {mu:?}")));
    }
    let top: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    let bounds = match rs.simple_coords(&top) {
        Some(c) if c.iter().all(|&x| x >= 0) => c,
        _ => return Ok(Poly::zero()),
    };
    let table = PartitionTable::build(rs, &bounds);
    let lr: Vec<i64> = lambda.iter().zip(&rs.rho).map(|(a, b)| a + b).collect();
    let mr: Vec<i64> = mu.iter().zip(&rs.rho).map(|(a, b)| a + b).collect();
    let mut out = Poly::zero();
    for w in rs.weyl_group() {
        let arg: Vec<i64> = w.apply(&lr).iter().zip(&mr).map(|(a, b)| a - b).collect();
        if let Some(c) = rs.simple_coords(&arg) {
            let p = table.get(&c);
            out = if w.sign() > 0 { &out + &p } else { &out - &p };
        }
    }
    if let Some((degree, coeff)) = out.first_negative() {
        return Err(Error::NegativeCoefficient { degree, coeff });
    }
    Ok(out)
}

fn padded(lambda: &Partition, n: usize) -> Result<Vec<i64>> {
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            shape: lambda.to_string(),
            limit: n,
        });
    }
    Ok((0..n).map(|i| lambda.part(i) as i64).collect())
}

/// `K^{C_n}_{lambda,0}(t)` from the alternating sum.
pub fn oracle_c(lambda: &Partition, n: usize) -> Result<Poly> {
    let rs = RootSystem::new(RootKind::C, n)?;
    lusztig_t_analogue(&rs, &padded(lambda, n)?, &vec![0; n])
}

/// `K^{A_{n-1}}_{lambda,0}(t)` in `gl_n` coordinates: the zero weight is
/// `(|lambda|/n, ..., |lambda|/n)`.
pub fn oracle_a(lambda: &Partition, n: usize) -> Result<Poly> {
    let rs = RootSystem::new(RootKind::A, n)?;
    let l = padded(lambda, n)?;
    if lambda.size() as usize % n != 0 {
        return Ok(Poly::zero());
    }
    let mu = vec![(lambda.size() as usize / n) as i64; n];
    lusztig_t_analogue(&rs, &l, &mu)
}
