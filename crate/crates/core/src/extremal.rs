//! Smallest and largest powers of `t` in `K^{C_n}_{lambda,0}(t)`, the
//! minimizing filling `sigma_min`, and brute-force checks on first rows.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::crystal::Tableau;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Column data of `lambda = sum_i a_i omega_{n+1-i}` and the derived
/// sequences used to locate the minimal power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStructure {
    pub n: usize,
    /// `a[i-1]` columns of height `n+1-i`.
    pub a: Vec<u32>,
    /// Prefix sums `s_1..s_n`.
    pub s: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    /// The indices `k_1 < ... < k_p` with `a_k` odd (1-based).
    pub odd_indices: Vec<usize>,
    pub blocks: Vec<Block>,
    /// Set when `p` is odd: the columns of height at most `n+1-k_p`.
    pub incomplete_from: Option<usize>,
    /// 0-based columns of `lambda` that are special, with their oddness.
    pub special_columns: Vec<SpecialColumn>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub k: usize,
    pub k_prime: usize,
    pub odd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialColumn {
    pub column: usize,
    pub height: usize,
    pub top: u8,
    pub odd: bool,
}

fn check_input(lambda: &Partition, n: usize) -> Result<()> {
    if n == 0 || 2 * n > 255 {
        return Err(Error::Precondition(format!("rank {n} is out of range")));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            shape: lambda.to_string(),
            limit: n,
        });
    }
    if lambda.size() % 2 != 0 {
        return Err(Error::OddRank(lambda.to_string()));
    }
    Ok(())
}

impl BlockStructure {
    pub fn new(lambda: &Partition, n: usize) -> Result<Self> {
        check_input(lambda, n)?;
        let a: Vec<u32> = (1..=n)
            .map(|i| lambda.part(n - i) - lambda.part(n + 1 - i))
            .collect();
        let s: Vec<u32> = a
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let b: Vec<u32> = (0..n)
            .map(|k| match (a[k] % 2, s[k] % 2) {
                (0, _) => a[k],
                (_, 1) => a[k] + 1,
                _ => a[k] - 1,
            })
            .collect();
        let odd_indices: Vec<usize> = (1..=n).filter(|&i| a[i - 1] % 2 == 1).collect();
        let mut c = b.clone();
        if let Some(&last) = odd_indices.last() {
            if s[last - 1] % 2 == 1 {
                c[last - 1] = a[last - 1];
            }
        }
        let blocks = odd_indices
            .chunks(2)
            .filter(|pair| pair.len() == 2)
            .map(|pair| Block {
                k: pair[0],
                k_prime: pair[1],
                odd: (pair[1] - pair[0]) % 2 == 1,
            })
            .collect();
        let incomplete_from = if odd_indices.len() % 2 == 1 {
            odd_indices.last().copied()
        } else {
            None
        };
        let mut out = BlockStructure {
            n,
            a,
            s,
            b,
            c,
            odd_indices,
            blocks,
            incomplete_from,
            special_columns: Vec::new(),
        };
        // A column is special exactly when its top entry in `sigma_min^row`
        // is below the largest value allowed for its height.
        let row = out.row();
        for (col, &top) in row.iter().enumerate() {
            let height = lambda.conjugate().part(col) as usize;
            let i = n + 1 - height;
            if (top as usize) < n + i {
                out.special_columns.push(SpecialColumn {
                    column: col,
                    height,
                    top,
                    odd: top as usize % 2 == height % 2,
                });
            }
        }
        Ok(out)
    }

    /// `sigma_min^row = ((n+1)^{c_1} (n+2)^{c_2} ... (2n)^{c_n})`.
    pub fn row(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (k, &ck) in self.c.iter().enumerate() {
            out.extend(std::iter::repeat((self.n + k + 1) as u8).take(ck as usize));
        }
        out
    }

    /// The upper bound `sigma_i <= n+k` for `s_{k-1} < i <= s_k`, per position.
    pub fn row_bounds(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (k, &ak) in self.a.iter().enumerate() {
            out.extend(std::iter::repeat((self.n + k + 1) as u8).take(ak as usize));
        }
        out
    }

    /// `p` and `n+1-k_p` both odd.
    pub fn has_exception(&self) -> bool {
        let p = self.odd_indices.len();
        p % 2 == 1 && (self.n + 1 - self.odd_indices[p - 1]) % 2 == 1
    }

    /// The block (by index into `blocks`) containing columns of height `n+1-i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.k <= i && i <= b.k_prime)
    }
}

/// `(1/2) sum_i (n+1-i) b_i`, asserted equal to
/// `|lambda|/2 + (1/2) sum_{a_i odd} (-1)^{s_i - 1} (n+1-i)`.
pub fn min_power(lambda: &Partition, n: usize) -> Result<u32> {
    let bs = BlockStructure::new(lambda, n)?;
    let first: u32 = (1..=n).map(|i| (n + 1 - i) as u32 * bs.b[i - 1]).sum::<u32>() / 2;
    let mut second = lambda.size() as i64;
    for &i in &bs.odd_indices {
        let sign = if bs.s[i - 1] % 2 == 1 { 1 } else { -1 };
        second += sign * (n + 1 - i) as i64;
    }
    assert_eq!(first as i64 * 2, second, "minimal power forms disagree for {lambda}");
    Ok(first)
}

/// `<lambda, rho^vee> = sum_i lambda_i (2n - 2i + 1) / 2`.
pub fn max_power(lambda: &Partition, n: usize) -> Result<u32> {
    check_input(lambda, n)?;
    Ok(rho_pairing(lambda, n))
}

pub(crate) fn rho_pairing(lambda: &Partition, n: usize) -> u32 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (2 * (n - i) - 1) as u32)
        .sum::<u32>()
        / 2
}

/// The filling `sigma_min` of `lambda`.
///
/// The first row is `sigma_min^row`. Columns other than the odd special ones
/// hold consecutive entries from the top. Odd special columns are then
/// filled from right to left: if the previous one ended in `2i-1`, the
/// current one must contain `2i` and skip `2i-1`. When `p` and `n+1-k_p` are
/// odd this rule also applies to the rightmost one, with `2i = n+k_p`.
pub fn sigma_min(lambda: &Partition, n: usize) -> Result<Tableau> {
    let bs = BlockStructure::new(lambda, n)?;
    let row = bs.row();
    let heights = lambda.conjugate();
    let mut columns: Vec<Vec<u8>> = row
        .iter()
        .enumerate()
        .map(|(col, &top)| (0..heights.part(col) as u8).map(|d| top + d).collect())
        .collect();
    let mut forced: Option<u8> = if bs.has_exception() {
        Some((n + bs.odd_indices.last().unwrap()) as u8)
    } else {
        None
    };
    for sc in bs.special_columns.iter().rev().filter(|sc| sc.odd) {
        let col = fill_special(sc.top, sc.height, forced);
        let last = *col.last().unwrap();
        forced = if last % 2 == 1 { Some(last + 1) } else { None };
        columns[sc.column] = col;
    }
    let mut rows = vec![Vec::new(); lambda.len()];
    for col in &columns {
        for (r, &x) in col.iter().enumerate() {
            rows[r].push(x);
        }
    }
    Tableau::new(rows, 2 * n)
}

/// Consecutive entries from `top`, avoiding `even - 1` and containing `even`
/// when a constraint is in force.
fn fill_special(top: u8, height: usize, forced: Option<u8>) -> Vec<u8> {
    let mut col: Vec<u8> = Vec::with_capacity(height);
    let mut x = top;
    while col.len() < height {
        if Some(x + 1) != forced || col.is_empty() {
            col.push(x);
        }
        x += 1;
    }
    if let Some(even) = forced {
        if !col.contains(&even) && *col.last().unwrap() < even {
            *col.last_mut().unwrap() = even;
        }
    }
    col
}

/// `ch_{C_n}` of a single weakly increasing row over `2..=2n`:
/// `sum_{i=2}^{2n} (2n+1-i) ceil(m_i / 2)`.
pub fn row_charge(row: &[u8], n: usize) -> u32 {
    let mut m = vec![0u32; 2 * n + 1];
    for &x in row {
        m[x as usize] += 1;
    }
    (2..=2 * n).map(|i| (2 * n + 1 - i) as u32 * m[i].div_ceil(2)).sum()
}

/// Whether `row` is weakly increasing, uses letters `2..=2n` and stays under
/// the bounds `sigma_i <= n+k`.
pub fn in_sigma(row: &[u8], bounds: &[u8], n: usize) -> bool {
    row.len() == bounds.len()
        && row.windows(2).all(|w| w[0] <= w[1])
        && row.iter().all(|&x| x >= 2 && x as usize <= 2 * n)
        && row.iter().zip(bounds).all(|(x, b)| x <= b)
}

/// Minimum of [`row_charge`] over all rows in `Sigma`, by exhaustive search.
///
/// The letter `1` is excluded: a `1` in the first row of a distinguished
/// tableau would be unbracketed for `f_1`, and admitting it makes the
/// all-ones row a spurious minimizer of charge 0.
pub fn min_row_charge_bruteforce(lambda: &Partition, n: usize) -> Result<u32> {
    let bs = BlockStructure::new(lambda, n)?;
    let bounds = bs.row_bounds();
    let mut best = u32::MAX;
    let mut row = Vec::with_capacity(bounds.len());
    search_rows(&bounds, 2, n, &mut row, &mut best);
    Ok(if bounds.is_empty() { 0 } else { best })
}

fn search_rows(bounds: &[u8], low: u8, n: usize, row: &mut Vec<u8>, best: &mut u32) {
    if row.len() == bounds.len() {
        *best = (*best).min(row_charge(row, n));
        return;
    }
    for x in low..=bounds[row.len()] {
        row.push(x);
        search_rows(bounds, x, n, row, best);
        row.pop();
    }
}

/// The moves `sigma -> sigma'` that stay in `Sigma`.
pub fn row_moves(row: &[u8], bounds: &[u8], n: usize) -> Vec<(u8, Vec<u8>)> {
    let mut m = vec![0u32; 2 * n + 2];
    for &x in row {
        m[x as usize] += 1;
    }
    let present: Vec<usize> = (1..=2 * n).filter(|&i| m[i] > 0).collect();
    let mut out = Vec::new();
    let mut push = |kind: u8, m: &[u32]| {
        let r: Vec<u8> = (1..=2 * n)
            .flat_map(|i| std::iter::repeat(i as u8).take(m[i] as usize))
            .collect();
        if in_sigma(&r, bounds, n) {
            out.push((kind, r));
        }
    };
    for &i in &present {
        if i < 2 * n && m[i] >= 2 {
            let mut mm = m.clone();
            mm[i] -= 2;
            mm[i + 1] += 2;
            push(1, &mm);
        }
        if i < 2 * n && m[i] % 2 == 1 {
            let mut mm = m.clone();
            mm[i] -= 1;
            mm[i + 1] += 1;
            push(2, &mm);
        }
    }
    for w in present.windows(2) {
        let (i, j) = (w[0], w[1]);
        if m[i] % 2 == 1 {
            let mut mm = m.clone();
            mm[j] -= 1;
            mm[i] += 1;
            push(3, &mm);
        }
        if m[i] % 2 == 0 && m[j] % 2 == 1 {
            let mut mm = m.clone();
            mm[i] -= 1;
            mm[j] += 1;
            push(4, &mm);
        }
    }
    out
}

/// Outcome of exploring every sequence of moves from a starting row.
#[derive(Clone, Debug, Serialize)]
pub struct MoveReport {
    pub start: Vec<u8>,
    pub target: Vec<u8>,
    pub visited: usize,
    pub moves_checked: usize,
    pub violations: Vec<String>,
    pub target_reached: bool,
}

impl MoveReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.target_reached
    }
}

/// Applies every legal move from every row reachable from `row`, checking
/// that the charge never increases (and is unchanged by move (4)), and that
/// `sigma_min^row` is reachable.
pub fn lattice_moves_check(row: &[u8], lambda: &Partition, n: usize) -> Result<MoveReport> {
    let bs = BlockStructure::new(lambda, n)?;
    let bounds = bs.row_bounds();
    if !in_sigma(row, &bounds, n) {
        return Err(Error::Precondition(format!("{row:?} is not an admissible first row")));
    }
    let target = bs.row();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut violations = Vec::new();
    let mut checked = 0;
    seen.insert(row.to_vec());
    queue.push_back(row.to_vec());
    while let Some(cur) = queue.pop_front() {
        let ch = row_charge(&cur, n);
        for (kind, next) in row_moves(&cur, &bounds, n) {
            checked += 1;
            let ch2 = row_charge(&next, n);
            if ch2 > ch || (kind == 4 && ch2 != ch) {
                violations.push(format!("move ({kind}) {cur:?} -> {next:?}: {ch} -> {ch2}"));
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(MoveReport {
        start: row.to_vec(),
        target_reached: seen.contains(&target),
        target,
        visited: seen.len(),
        moves_checked: checked,
        violations,
    })
}

/// Builds `lambda` from `a_i` columns of height `n+1-i`.
pub fn partition_from_columns(a: &[u32]) -> Partition {
    let n = a.len();
    let mut heights = Vec::new();
    for (k, &ak) in a.iter().enumerate() {
        heights.extend(std::iter::repeat((n - k) as u32).take(ak as usize));
    }
    Partition::new(heights).expect("column heights are decreasing").conjugate()
}

/// Minimal and maximal powers with the coefficients observed in a computed polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub lambda: Partition,
    pub rank: usize,
    pub min_power: u32,
    pub max_power: u32,
    pub min_coefficient: Option<i64>,
    pub max_coefficient: Option<i64>,
    pub sigma_min: Tableau,
}

pub fn extremal_report(lambda: &Partition, n: usize, with_coefficients: bool) -> Result<ExtremalReport> {
    let lo = min_power(lambda, n)?;
    let hi = max_power(lambda, n)?;
    let (min_coefficient, max_coefficient) = if with_coefficients {
        let p = crate::genexp::genexp_c(lambda, n)?;
        (Some(p.coeff(lo)), Some(p.coeff(hi)))
    } else {
        (None, None)
    };
    Ok(ExtremalReport {
        lambda: lambda.clone(),
        rank: n,
        min_power: lo,
        max_power: hi,
        min_coefficient,
        max_coefficient,
        sigma_min: sigma_min(lambda, n)?,
    })
}
