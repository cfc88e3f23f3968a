//! Skew tableaux, jeu de taquin, Littlewood-Richardson tableaux, companion
//! tableaux, the conjugation symmetry of LR coefficients and the
//! combinatorial R-matrix.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::crystal::{Tableau, TensorPair};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard filling of the skew shape `outer / inner`.
/// `rows[r]` lists the entries of the skew cells of row `r`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u8>>,
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u8>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let desc = format!("{outer}|{inner}|{rows:?}");
        let bad = || Error::MalformedTableau(desc.clone());
        if !outer.contains(&inner) || rows.len() > outer.len() {
            return Err(bad());
        }
        rows.resize(outer.len(), Vec::new());
        for (r, row) in rows.iter().enumerate() {
            if row.len() as u32 != outer.part(r) - inner.part(r) {
                return Err(bad());
            }
        }
        let s = SkewTableau { outer, inner, rows };
        if !s.is_semistandard() {
            return Err(bad());
        }
        Ok(s)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        SkewTableau {
            outer: t.shape().clone(),
            inner: Partition::empty(),
            rows: t.rows(),
        }
    }

    /// Parses `"outer|inner|rows"`, e.g. `"5,4,4,2|3,3,1|1,1/2/1,2,3/1,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::MalformedTableau(s.to_string());
        let mut it = s.split('|');
        let (Some(o), Some(i), Some(body), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        let outer: Partition = o.parse().map_err(|_| bad())?;
        let inner: Partition = i.parse().map_err(|_| bad())?;
        let rows = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split('/')
                .map(|row| {
                    if row.trim().is_empty() {
                        return Some(Vec::new());
                    }
                    row.split(',')
                        .map(|x| x.trim().parse::<u8>().ok().filter(|&v| v >= 1))
                        .collect::<Option<Vec<u8>>>()
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(bad)?
        };
        SkewTableau::new(outer, inner, rows).map_err(|_| bad())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entry at row `r`, column `c` of the full diagram, `None` outside the skew cells.
    pub fn get(&self, r: usize, c: usize) -> Option<u8> {
        let start = self.inner.part(r) as usize;
        if c < start {
            return None;
        }
        self.rows.get(r)?.get(c - start).copied()
    }

    fn is_semistandard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let start = self.inner.part(r) as usize;
            for (k, &x) in row.iter().enumerate() {
                if let Some(a) = self.get(r - 1, start + k) {
                    if a >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn max_entry(&self) -> u8 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `content[k]` counts the entries equal to `k+1`.
    pub fn content(&self) -> Vec<u32> {
        let mut content = vec![0u32; self.max_entry() as usize];
        for &x in self.rows.iter().flatten() {
            content[x as usize - 1] += 1;
        }
        content
    }

    /// The weight, when the content is a partition (always true for LR tableaux).
    pub fn weight(&self) -> Option<Partition> {
        Partition::new(self.content()).ok()
    }

    /// The Japanese reading of the skew cells.
    pub fn reading_word(&self) -> Vec<u8> {
        let mut word = Vec::new();
        for c in (0..self.outer.part(0) as usize).rev() {
            for r in 0..self.outer.len() {
                if let Some(x) = self.get(r, c) {
                    word.push(x);
                }
            }
        }
        word
    }

    pub fn is_lattice(&self) -> bool {
        is_lattice_word(&self.reading_word())
    }

    /// Semistandard (checked at construction) with a lattice Japanese reading.
    pub fn is_lr(&self) -> bool {
        self.is_lattice()
    }
}

pub fn is_lattice_word(word: &[u8]) -> bool {
    let mut counts = vec![0u32; word.iter().copied().max().unwrap_or(0) as usize + 1];
    for &x in word {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}|{}|{}", self.outer, self.inner, rows.join("/"))
    }
}

impl Serialize for SkewTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Rectification by jeu de taquin, always sliding into the lowest inner corner.
pub fn rectify(s: &SkewTableau, m: usize) -> Result<Tableau> {
    rectify_with(s, m, |corners| corners.len() - 1)
}

/// Rectification where `choose` picks which inner corner (listed top to
/// bottom) to slide into next.
pub fn rectify_with(s: &SkewTableau, m: usize, mut choose: impl FnMut(&[usize]) -> usize) -> Result<Tableau> {
    // Zero marks a cell of the inner shape not yet vacated.
    let mut grid: Vec<Vec<u8>> = (0..s.outer.len())
        .map(|r| {
            let mut row = vec![0u8; s.inner.part(r) as usize];
            row.extend(&s.rows[r]);
            row
        })
        .collect();
    let mut inner: Vec<usize> = (0..s.outer.len()).map(|r| s.inner.part(r) as usize).collect();
    loop {
        let corners: Vec<usize> = (0..inner.len())
            .filter(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r])
            .collect();
        if corners.is_empty() {
            break;
        }
        let r0 = corners[choose(&corners).min(corners.len() - 1)];
        let (mut r, mut c) = (r0, inner[r0] - 1);
        inner[r0] -= 1;
        loop {
            let below = grid.get(r + 1).and_then(|row| row.get(c)).copied().filter(|&x| x > 0);
            let right = grid[r].get(c + 1).copied();
            let next = match (below, right) {
                (None, None) => break,
                (Some(_), None) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (Some(b), Some(a)) => {
                    if b <= a {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            grid[r][c] = grid[next.0][next.1];
            (r, c) = next;
        }
        grid[r].pop();
    }
    while grid.last().is_some_and(|r| r.is_empty()) {
        grid.pop();
    }
    Tableau::new(grid, m)
}

/// LR tableaux of shape `outer / inner` with entries at most `max_letter`,
/// optionally of a prescribed weight, in canonical order.
pub fn enumerate_lr(
    outer: &Partition,
    inner: &Partition,
    weight: Option<&Partition>,
    max_letter: usize,
) -> Vec<SkewTableau> {
    enumerate_lr_restricted(outer, inner, weight, max_letter, &|_, _| true)
}

/// As [`enumerate_lr`], keeping only fillings where every letter `x` placed in
/// (0-based) row `r` satisfies `allowed(x, r)`.
pub fn enumerate_lr_restricted(
    outer: &Partition,
    inner: &Partition,
    weight: Option<&Partition>,
    max_letter: usize,
    allowed: &dyn Fn(u8, usize) -> bool,
) -> Vec<SkewTableau> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    if let Some(w) = weight {
        if w.size() + inner.size() != outer.size() || w.len() > max_letter {
            return Vec::new();
        }
    }
    // Cells in row-major order, each row filled right to left.
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = (0..outer.len()).map(|r| vec![0; outer.part(r) as usize]).collect();
    let mut counts = vec![0u32; max_letter + 2];
    let mut out = Vec::new();
    let ctx = LrSearch {
        outer,
        inner,
        weight,
        cells: &cells,
        max_letter,
        allowed,
    };
    ctx.fill(0, &mut grid, &mut counts, &mut out);
    out.sort();
    out
}

struct LrSearch<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    weight: Option<&'a Partition>,
    cells: &'a [(usize, usize)],
    max_letter: usize,
    allowed: &'a dyn Fn(u8, usize) -> bool,
}

impl LrSearch<'_> {
    fn fill(&self, k: usize, grid: &mut Vec<Vec<u8>>, counts: &mut Vec<u32>, out: &mut Vec<SkewTableau>) {
        if k == self.cells.len() {
            if let Some(w) = self.weight {
                if (1..=self.max_letter).any(|x| counts[x] != w.part(x - 1)) {
                    return;
                }
            }
            let rows = (0..self.outer.len())
                .map(|r| grid[r][self.inner.part(r) as usize..].to_vec())
                .collect();
            out.push(SkewTableau {
                outer: self.outer.clone(),
                inner: self.inner.clone(),
                rows,
            });
            return;
        }
        let (r, c) = self.cells[k];
        let hi = if c + 1 < self.outer.part(r) as usize {
            grid[r][c + 1] as usize
        } else {
            self.max_letter
        };
        let lo = if r > 0 && c >= self.inner.part(r - 1) as usize {
            grid[r - 1][c] as usize + 1
        } else {
            1
        };
        for x in lo..=hi.min(r + 1) {
            if x > 1 && counts[x] + 1 > counts[x - 1] || !(self.allowed)(x as u8, r) {
                continue;
            }
            if let Some(w) = self.weight {
                if counts[x] + 1 > w.part(x - 1) {
                    continue;
                }
            }
            counts[x] += 1;
            grid[r][c] = x as u8;
            self.fill(k + 1, grid, counts, out);
            counts[x] -= 1;
        }
        grid[r][c] = 0;
    }
}

/// `c_{lambda, delta}^{nu}` by counting LR tableaux of shape `nu / delta` and weight `lambda`.
pub fn lr_coefficient(lambda: &Partition, delta: &Partition, nu: &Partition) -> u64 {
    enumerate_lr(nu, delta, Some(lambda), lambda.len().max(1)).len() as u64
}

/// The companion tableau: row `k` lists the (1-based) row indices of `tau`
/// holding an entry `k`.
pub fn companion(tau: &SkewTableau, m: usize) -> Result<Tableau> {
    if !tau.is_lr() {
        return Err(Error::Precondition(format!("{tau} is not an LR tableau")));
    }
    let k = tau.max_entry() as usize;
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); k];
    for (r, row) in tau.rows.iter().enumerate() {
        for &x in row {
            rows[x as usize - 1].push(r as u8 + 1);
        }
    }
    Tableau::new(rows, m)
}

/// Inverse of [`companion`] for a fixed inner shape: row `j` of the skew
/// tableau holds the letters `k` such that `j` occurs in row `k` of `t`.
pub fn inverse_companion(t: &Tableau, inner: &Partition) -> Result<SkewTableau> {
    let height = t.cells().iter().copied().max().unwrap_or(0) as usize;
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); height.max(inner.len())];
    for (k, row) in t.rows().iter().enumerate() {
        for &j in row {
            rows[j as usize - 1].push(k as u8 + 1);
        }
    }
    let outer = Partition::new(
        (0..rows.len())
            .map(|j| inner.part(j) + rows[j].len() as u32)
            .collect(),
    )
    .map_err(|_| Error::MalformedTableau(format!("{t} does not sit on {inner}")))?;
    let s = SkewTableau::new(outer, inner.clone(), rows)?;
    if !s.is_lr() {
        return Err(Error::MalformedTableau(format!("{t} is not a companion tableau over {inner}")));
    }
    Ok(s)
}

/// The highest weight `nu` of `H_delta (x) t`, assuming it is highest.
pub fn lr_target(t: &Tableau, delta: &Partition) -> Option<Partition> {
    let content = t.content();
    let n = content.len().max(delta.len());
    Partition::new((0..n).map(|i| delta.part(i) + content.get(i).copied().unwrap_or(0)).collect()).ok()
}

/// The bijection `LR_{lambda,delta}^nu -> LR_{lambda',delta'}^{nu'}`:
/// evacuate in `B_m(lambda)`, transpose, then renumber each vertical strip
/// of letter `i` (read from northeast to southwest) as `rev_i + 1, rev_i + 2, ...`
/// where `rev` is `delta` reversed and padded with leading zeros to length `m`.
/// The result lives over the alphabet `nu_1`.
pub fn conjugation_symmetry(t: &Tableau, delta: &Partition) -> Result<Tableau> {
    let m = t.alphabet();
    if !t.lr_membership(delta)? {
        return Err(Error::Precondition(format!(
            "H_({delta}) (x) {t} is not a highest weight element"
        )));
    }
    let nu = lr_target(t, delta).expect("highest weight is dominant");
    let rev = delta.reversed_padded(m);
    let st = t.lusztig().transpose();
    let rows = st.rows();
    let mut out = rows.clone();
    for letter in 1..=m as u8 {
        let mut next = rev[letter as usize - 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == letter {
                    next += 1;
                    out[r][c] = next as u8;
                }
            }
        }
    }
    Tableau::new(out, (nu.part(0) as usize).max(1))
}

/// The combinatorial R-matrix on a highest weight element `H_lambda (x) t`:
/// returns `(delta, t_hat)` with `H_delta (x) t_hat` the image, where `delta`
/// is the shape of `t`. Computed as the commutor `xi(xi(c) (x) xi(b))`; for a
/// highest weight input this is the highest weight element of the component
/// of `S(t) (x) L_lambda`.
pub fn r_matrix_highest(lambda: &Partition, t: &Tableau) -> Result<(Partition, Tableau)> {
    let m = t.alphabet();
    if !t.lr_membership(lambda)? {
        return Err(Error::Precondition(format!(
            "H_({lambda}) (x) {t} is not a highest weight element"
        )));
    }
    let delta = t.shape().clone();
    let pair = TensorPair::new(t.lusztig(), Tableau::lowest(lambda, m)?)?;
    let (_, top) = pair.to_highest_weight();
    debug_assert_eq!(top.left, Tableau::highest(&delta, m)?);
    Ok((delta, top.right))
}

/// The commutor `b (x) c -> xi(xi(c) (x) xi(b))` on an arbitrary element.
/// Experimental: only the highest weight case is relied upon elsewhere.
pub fn commutor(b: &TensorPair) -> TensorPair {
    let swapped = TensorPair {
        left: b.right.lusztig(),
        right: b.left.lusztig(),
    };
    swapped.lusztig()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::enumerate_ssyt;
    use crate::partition::partitions_up_to;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str, m: usize) -> Tableau {
        Tableau::parse(s, m).unwrap()
    }

    fn worked_tau() -> SkewTableau {
        SkewTableau::parse("5,5,3,3,3|3,2,1,1|1,1/1,2,2/1,3/2,4/1,3,5").unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s = SkewTableau::parse("5,4,4,2|3,3,1|1,1/2/1,2,3/1,2").unwrap();
        assert_eq!(s.to_string(), "5,4,4,2|3,3,1|1,1/2/1,2,3/1,2");
        assert!(SkewTableau::parse("2|1|1,1").is_err());
        assert!(SkewTableau::parse("2,2|1|2/1,1").is_err());
        assert!(SkewTableau::parse("1|2|").is_err());
        let empty = SkewTableau::parse("2,1|2,1|").unwrap();
        assert!(empty.is_lr());
    }

    #[test]
    fn lr_examples() {
        assert!(worked_tau().is_lr());
        assert!(!SkewTableau::parse("2|1|2").unwrap().is_lr());
    }

    #[test]
    fn rectify_examples() {
        let straight = t("1,1,2/2,3", 3);
        assert_eq!(rectify(&SkewTableau::from_tableau(&straight), 3).unwrap(), straight);
        let one = SkewTableau::parse("2|1|1").unwrap();
        assert_eq!(rectify(&one, 1).unwrap(), t("1", 1));
        let tau = worked_tau();
        let w = tau.weight().unwrap();
        assert_eq!(rectify(&tau, 5).unwrap(), Tableau::highest(&w, 5).unwrap());
    }

    #[test]
    fn companion_examples() {
        let tau = worked_tau();
        let c = companion(&tau, 5).unwrap();
        assert_eq!(c, t("1,1,2,3,5/2,2,4/3,5/4/5", 5));
        assert_eq!(inverse_companion(&c, tau.inner()).unwrap(), tau);
        let h = Tableau::highest(&p("3,2,2"), 3).unwrap();
        assert_eq!(companion(&SkewTableau::from_tableau(&h), 3).unwrap(), h);
        // The skew tableau of shape (5,4,4,2)/(3,3,1) and content (4,3,1).
        let s = SkewTableau::parse("5,4,4,2|3,3,1|1,1/2/1,2,3/1,2").unwrap();
        assert!(s.is_lr());
        assert_eq!(companion(&s, 4).unwrap(), t("1,1,3,4/2,3,4/3", 4));
    }

    #[test]
    fn conjugation_symmetry_example() {
        let u = t("1,1,3,4/2,3,4/3", 4);
        let image = conjugation_symmetry(&u, &p("3,3,1")).unwrap();
        assert_eq!(image, t("1,2,4/2,4/3,5/4", 5));
        let back = conjugation_symmetry(&image, &p("3,2,2")).unwrap();
        assert_eq!(back.with_alphabet(4).unwrap(), u);
        let h = Tableau::highest(&p("3,1"), 3).unwrap();
        assert_eq!(
            conjugation_symmetry(&h, &Partition::empty()).unwrap(),
            Tableau::highest(&p("2,1,1"), 3).unwrap()
        );
        assert!(conjugation_symmetry(&t("2", 2), &Partition::empty()).is_err());
    }

    #[test]
    fn r_matrix_examples() {
        let lambda = p("2,1,1");
        let cases = [
            ("1,1,1/2,2,2/3,3,4/4,4,5/5,5/6,6", "1,1/2/5"),
            ("1,1,1,4/2,2,2,5/3,3/4,4/5,5/6,6", "1,3/4/5"),
            ("1,1,1,2/2,2,3,4/3,4,5/4,5,6/5/6", "1,5/5/6"),
        ];
        for (input, expected) in cases {
            let (delta, hat) = r_matrix_highest(&lambda, &t(input, 6)).unwrap();
            assert_eq!(&delta, t(input, 6).shape());
            assert_eq!(hat, t(expected, 6), "{input}");
        }
        assert!(r_matrix_highest(&p(""), &t("2", 2)).is_err());
    }

    #[test]
    fn lr_enumeration_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        let (lambda, delta, nu) = (p("4,3,1"), p("3,3,1"), p("5,4,4,2"));
        assert_eq!(lr_coefficient(&lambda, &delta, &nu), 2);
        assert_eq!(lr_crystal_count(&lambda, &delta, &nu), 2);
        assert_eq!(lr_coefficient(&p("3,1"), &p(""), &p("3,1")), 1);
    }

    /// `c_{lambda,delta}^nu` counted on the crystal side: tableaux of shape
    /// `lambda` with `H_delta (x) T` highest of weight `nu`.
    fn lr_crystal_count(lambda: &Partition, delta: &Partition, nu: &Partition) -> usize {
        let m = nu.len().max(delta.len()).max(lambda.len()).max(1);
        enumerate_ssyt(lambda, m)
            .unwrap()
            .filter(|u| u.lr_membership(delta).unwrap() && lr_target(u, delta).as_ref() == Some(nu))
            .count()
    }

    #[test]
    fn lr_counts_agree_with_crystal_side() {
        for nu in partitions_up_to(7, 7) {
            for delta in partitions_up_to(nu.size(), 7).into_iter().filter(|d| nu.contains(d)) {
                let rest = nu.size() - delta.size();
                for lambda in crate::partition::partitions_of(rest) {
                    let skew = lr_coefficient(&lambda, &delta, &nu) as usize;
                    assert_eq!(skew, lr_crystal_count(&lambda, &delta, &nu), "{lambda} {delta} {nu}");
                    let conj = lr_coefficient(&lambda.conjugate(), &delta.conjugate(), &nu.conjugate()) as usize;
                    assert_eq!(skew, conj);
                }
            }
        }
    }

    #[test]
    fn companions_roundtrip() {
        for nu in partitions_up_to(8, 8) {
            for mu in partitions_up_to(nu.size(), 8).into_iter().filter(|d| nu.contains(d)) {
                for tau in enumerate_lr(&nu, &mu, None, 8) {
                    let m = nu.len().max(1);
                    let c = companion(&tau, m).unwrap();
                    assert_eq!(inverse_companion(&c, &mu).unwrap(), tau);
                    assert!(c.lr_membership(&mu).unwrap());
                    assert_eq!(lr_target(&c, &mu).as_ref(), Some(&nu));
                    assert_eq!(rectify(&tau, m).unwrap(), Tableau::highest(&tau.weight().unwrap(), m).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugation_symmetry_round_trips() {
        for lambda in partitions_up_to(5, 5) {
            for delta in partitions_up_to(4, 5) {
                let m = lambda.len() + delta.len();
                if m == 0 {
                    continue;
                }
                for u in enumerate_ssyt(&lambda, m).unwrap() {
                    if !u.lr_membership(&delta).unwrap() {
                        continue;
                    }
                    let image = conjugation_symmetry(&u, &delta).unwrap();
                    let nu = lr_target(&u, &delta).unwrap();
                    assert_eq!(image.shape(), &lambda.conjugate());
                    assert!(image.lr_membership(&delta.conjugate()).unwrap());
                    assert_eq!(lr_target(&image, &delta.conjugate()), Some(nu.conjugate()));
                    let back = conjugation_symmetry(&image, &delta.conjugate()).unwrap();
                    assert_eq!(back.cells(), u.cells(), "{u} {delta}");
                    let wider = conjugation_symmetry(&u.with_alphabet(m + 1).unwrap(), &delta).unwrap();
                    assert_eq!(wider, image);
                }
            }
        }
    }

    #[test]
    fn r_matrix_preserves_weight_and_inverts() {
        for lambda in partitions_up_to(4, 4) {
            for delta in partitions_up_to(4, 4) {
                let m = (lambda.len() + delta.len()).max(1);
                for u in enumerate_ssyt(&delta, m).unwrap() {
                    if !u.lr_membership(&lambda).unwrap() {
                        continue;
                    }
                    let nu = lr_target(&u, &lambda).unwrap();
                    let (d, hat) = r_matrix_highest(&lambda, &u).unwrap();
                    assert_eq!(d, delta);
                    assert_eq!(hat.shape(), &lambda);
                    assert!(hat.lr_membership(&delta).unwrap());
                    assert_eq!(lr_target(&hat, &delta), Some(nu));
                    let (_, again) = r_matrix_highest(&delta, &hat).unwrap();
                    assert_eq!(again, u);
                    let generic = commutor(&TensorPair::new(Tableau::highest(&lambda, m).unwrap(), u.clone()).unwrap());
                    assert_eq!(generic.right, hat);
                }
            }
        }
    }

    fn evacuation_by_rotation(u: &Tableau) -> Tableau {
        // Rotate by 180 degrees, complement the entries, then rectify.
        let m = u.alphabet() as u8;
        let shape = u.shape();
        let width = shape.part(0);
        let outer = Partition::new(vec![width; shape.len()]).unwrap();
        let inner = Partition::new((0..shape.len()).rev().map(|r| width - shape.part(r)).collect()).unwrap();
        let rows = (0..shape.len())
            .rev()
            .map(|r| u.row(r).iter().rev().map(|&x| m + 1 - x).collect())
            .collect();
        rectify(&SkewTableau::new(outer, inner, rows).unwrap(), m as usize).unwrap()
    }

    #[test]
    fn lusztig_matches_jeu_de_taquin_evacuation() {
        for m in 1..=5 {
            for shape in partitions_up_to(6, m) {
                for u in enumerate_ssyt(&shape, m).unwrap() {
                    assert_eq!(u.lusztig(), evacuation_by_rotation(&u), "{u}");
                }
            }
        }
    }

    #[test]
    fn plactic_compatibility_of_operators() {
        for nu in partitions_up_to(5, 4) {
            for mu in partitions_up_to(nu.size(), 4).into_iter().filter(|d| nu.contains(d) && *d != nu) {
                let m = 4;
                let mut all = Vec::new();
                skew_fillings(&nu, &mu, m, &mut all);
                for s in all {
                    let r = rectify(&s, m).unwrap();
                    let word = s.reading_word();
                    for i in 1..m {
                        let ep_s = crate::crystal::word_eps_phi(&word, m);
                        let ep_r = r.eps_phi();
                        assert_eq!(ep_s.eps_at(i), ep_r.eps_at(i));
                        if let Some(pos) = crate::crystal::word_e_position(&word, i) {
                            let raised = raise_skew(&s, pos, i);
                            assert_eq!(rectify(&raised, m).unwrap(), r.e(i).unwrap().unwrap());
                        }
                    }
                }
            }
        }
    }

    fn raise_skew(s: &SkewTableau, pos: usize, i: usize) -> SkewTableau {
        let mut k = 0;
        let mut rows = s.rows.clone();
        for c in (0..s.outer.part(0) as usize).rev() {
            for r in 0..s.outer.len() {
                if s.get(r, c).is_some() {
                    if k == pos {
                        rows[r][c - s.inner.part(r) as usize] = i as u8;
                    }
                    k += 1;
                }
            }
        }
        SkewTableau::new(s.outer.clone(), s.inner.clone(), rows).unwrap()
    }

    fn skew_fillings(outer: &Partition, inner: &Partition, m: usize, out: &mut Vec<SkewTableau>) {
        let cells: Vec<(usize, usize)> = (0..outer.len())
            .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).map(move |c| (r, c)))
            .collect();
        let mut values = vec![1u8; cells.len()];
        loop {
            let mut rows: Vec<Vec<u8>> = vec![Vec::new(); outer.len()];
            for (k, &(r, _)) in cells.iter().enumerate() {
                rows[r].push(values[k]);
            }
            if let Ok(s) = SkewTableau::new(outer.clone(), inner.clone(), rows) {
                out.push(s);
            }
            let mut k = cells.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                if values[k] < m as u8 {
                    values[k] += 1;
                    break;
                }
                values[k] = 1;
            }
        }
    }

    fn random_skew(rng: &mut StdRng) -> SkewTableau {
        loop {
            let size = rng.gen_range(1..=8u32);
            let outers = crate::partition::partitions_of(size);
            let outer = outers[rng.gen_range(0..outers.len())].clone();
            let inners: Vec<Partition> = partitions_up_to(size, outer.len()).into_iter().filter(|d| outer.contains(d)).collect();
            let inner = inners[rng.gen_range(0..inners.len())].clone();
            let mut rows: Vec<Vec<u8>> = Vec::new();
            for r in 0..outer.len() {
                let mut row = Vec::new();
                for c in inner.part(r) as usize..outer.part(r) as usize {
                    let left = row.last().copied().unwrap_or(1);
                    let above = if r > 0 && c >= inner.part(r - 1) as usize {
                        rows[r - 1][c - inner.part(r - 1) as usize] + 1
                    } else {
                        1
                    };
                    let lo = left.max(above);
                    row.push(lo + rng.gen_range(0..2u8));
                }
                rows.push(row);
            }
            if let Ok(s) = SkewTableau::new(outer, inner, rows) {
                return s;
            }
        }
    }

    #[test]
    fn rectification_ignores_slide_order() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let s = random_skew(&mut rng);
            let m = s.max_entry().max(1) as usize;
            let a = rectify(&s, m).unwrap();
            let b = rectify_with(&s, m, |corners| rng.gen_range(0..corners.len())).unwrap();
            assert_eq!(a, b, "{s}");
        }
    }

    proptest! {
        #[test]
        fn skew_text_roundtrip(seed in 0u64..500) {
            let mut rng = StdRng::seed_from_u64(seed);
            let s = random_skew(&mut rng);
            prop_assert_eq!(SkewTableau::parse(&s.to_string()).unwrap(), s);
        }
    }
}
