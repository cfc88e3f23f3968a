//! Type A crystal structure on semistandard tableaux.
//!
//! Everything here reads a tableau through its Japanese (column) reading:
//! columns from right to left, each column from top to bottom. In that word
//! a letter `i` standing to the left of a letter `i+1` brackets with it.
//! The unbracketed letters form `(i+1)^eps i^phi`; `e_i` changes the rightmost
//! unbracketed `i+1` into `i` and `f_i` the leftmost unbracketed `i` into `i+1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, WeightVector};

/// Semistandard tableau of partition shape over the alphabet `1..=m`.
/// Cells are stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Partition,
    cells: Vec<u8>,
    alphabet: u8,
}

fn check_alphabet(m: usize) -> Result<u8> {
    if m == 0 || m > 255 {
        return Err(Error::AlphabetSize(m));
    }
    Ok(m as u8)
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>, m: usize) -> Result<Self> {
        let m = check_alphabet(m)?;
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::MalformedTableau(format!("{rows:?}")))?;
        let t = Tableau {
            shape,
            cells: rows.concat(),
            alphabet: m,
        };
        if !t.is_semistandard() {
            return Err(Error::MalformedTableau(t.to_string()));
        }
        Ok(t)
    }

    pub(crate) fn from_cells(shape: Partition, cells: Vec<u8>, m: u8) -> Self {
        debug_assert_eq!(cells.len(), shape.size() as usize);
        Tableau {
            shape,
            cells,
            alphabet: m,
        }
    }

    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let bad = || Error::MalformedTableau(s.to_string());
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Tableau::new(Vec::new(), m);
        }
        let rows = t
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<u8>().ok().filter(|&v| v >= 1))
                    .collect::<Option<Vec<u8>>>()
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        Tableau::new(rows, m).map_err(|e| match e {
            Error::AlphabetSize(_) => e,
            _ => bad(),
        })
    }

    /// The Yamanouchi tableau `H_shape`: row `k` filled with `k`.
    pub fn highest(shape: &Partition, m: usize) -> Result<Self> {
        let m = check_alphabet(m)?;
        if shape.len() > m as usize {
            return Err(too_tall(shape, m));
        }
        let cells = (0..shape.len())
            .flat_map(|r| std::iter::repeat(r as u8 + 1).take(shape.part(r) as usize))
            .collect();
        Ok(Tableau::from_cells(shape.clone(), cells, m))
    }

    /// The lowest-weight tableau: a column of height `h` holds `m-h+1..=m`.
    pub fn lowest(shape: &Partition, m: usize) -> Result<Self> {
        let m = check_alphabet(m)?;
        if shape.len() > m as usize {
            return Err(too_tall(shape, m));
        }
        let conj = shape.conjugate();
        let mut cells = Vec::with_capacity(shape.size() as usize);
        for r in 0..shape.len() {
            for c in 0..shape.part(r) as usize {
                let h = conj.part(c) as usize;
                cells.push((m as usize - h + r + 1) as u8);
            }
        }
        Ok(Tableau::from_cells(shape.clone(), cells, m))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet as usize
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    fn offset(&self, r: usize) -> usize {
        (0..r).map(|i| self.shape.part(i) as usize).sum()
    }

    pub fn row(&self, r: usize) -> &[u8] {
        let start = self.offset(r);
        &self.cells[start..start + self.shape.part(r) as usize]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.shape.len()).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entry at row `r`, column `c` (0-based).
    pub fn get(&self, r: usize, c: usize) -> Option<u8> {
        if c < self.shape.part(r) as usize {
            Some(self.cells[self.offset(r) + c])
        } else {
            None
        }
    }

    /// The same tableau viewed over another alphabet.
    pub fn with_alphabet(&self, m: usize) -> Result<Self> {
        let m = check_alphabet(m)?;
        if self.cells.iter().any(|&x| x > m) {
            return Err(Error::MalformedTableau(format!("{self} over alphabet {m}")));
        }
        Ok(Tableau {
            alphabet: m,
            ..self.clone()
        })
    }

    /// `content[k]` is the number of entries equal to `k+1`.
    pub fn content(&self) -> Vec<u32> {
        let mut content = vec![0u32; self.alphabet as usize];
        for &x in &self.cells {
            content[x as usize - 1] += 1;
        }
        content
    }

    /// The content, sorted into a partition when it is one.
    pub fn content_partition(&self) -> Option<Partition> {
        Partition::new(self.content()).ok()
    }

    pub fn is_semistandard(&self) -> bool {
        if self.cells.iter().any(|&x| x == 0 || x > self.alphabet) {
            return false;
        }
        for r in 0..self.shape.len() {
            let row = self.row(r);
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                let above = self.row(r - 1);
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return false;
                }
            }
        }
        true
    }

    /// Columns top to bottom, left to right.
    pub fn columns(&self) -> Vec<Vec<u8>> {
        let conj = self.shape.conjugate();
        (0..conj.len())
            .map(|c| (0..conj.part(c) as usize).map(|r| self.get(r, c).unwrap()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Tableau {
        let cols = self.columns();
        Tableau::from_cells(self.shape.conjugate(), cols.concat(), self.alphabet)
    }

    /// Flat cell indices in Japanese reading order.
    pub fn reading_order(shape: &Partition) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(shape.len());
        let mut acc = 0;
        for r in 0..shape.len() {
            offsets.push(acc);
            acc += shape.part(r) as usize;
        }
        let mut order = Vec::with_capacity(acc);
        for c in (0..shape.part(0) as usize).rev() {
            for (r, &off) in offsets.iter().enumerate() {
                if (shape.part(r) as usize) <= c {
                    break;
                }
                order.push(off + c);
            }
        }
        order
    }

    /// The Japanese (column) reading word.
    pub fn reading_word(&self) -> Vec<u8> {
        Tableau::reading_order(&self.shape)
            .into_iter()
            .map(|k| self.cells[k])
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.alphabet as usize {
            return Err(Error::IndexOutOfRange {
                index: i,
                alphabet: self.alphabet as usize,
            });
        }
        Ok(())
    }

    fn apply(&mut self, i: usize, raise: bool) -> bool {
        let order = Tableau::reading_order(&self.shape);
        let word: Vec<u8> = order.iter().map(|&k| self.cells[k]).collect();
        let pos = if raise { word_e_position(&word, i) } else { word_f_position(&word, i) };
        match pos {
            Some(p) => {
                let k = order[p];
                self.cells[k] = if raise { i as u8 } else { i as u8 + 1 };
                true
            }
            None => false,
        }
    }

    /// Applies `e_i` in place; returns `false` (leaving `self` untouched) when `e_i` kills it.
    pub fn raise(&mut self, i: usize) -> bool {
        self.apply(i, true)
    }

    /// Applies `f_i` in place; returns `false` when `f_i` kills it.
    pub fn lower(&mut self, i: usize) -> bool {
        self.apply(i, false)
    }

    pub fn e(&self, i: usize) -> Result<Option<Tableau>> {
        self.check_index(i)?;
        let mut t = self.clone();
        Ok(t.raise(i).then_some(t))
    }

    pub fn f(&self, i: usize) -> Result<Option<Tableau>> {
        self.check_index(i)?;
        let mut t = self.clone();
        Ok(t.lower(i).then_some(t))
    }

    pub fn eps_phi(&self) -> EpsPhi {
        word_eps_phi(&self.reading_word(), self.alphabet as usize)
    }

    /// Weight `phi - eps` in fundamental coordinates.
    pub fn weight(&self) -> WeightVector {
        self.eps_phi().weight()
    }

    pub fn is_highest(&self) -> bool {
        self.eps_phi().eps.iter().all(|&e| e == 0)
    }

    /// Greedy raising with the smallest applicable index first. Returns the
    /// indices in the order they were applied and the highest-weight tableau;
    /// `T = f_{a_1} ... f_{a_k} H` for the returned word `a_1..a_k`.
    pub fn to_highest_weight(&self) -> (Vec<usize>, Tableau) {
        let mut t = self.clone();
        let mut word = Vec::new();
        loop {
            let ep = t.eps_phi();
            match ep.eps.iter().position(|&e| e > 0) {
                Some(k) => {
                    t.raise(k + 1);
                    word.push(k + 1);
                }
                None => return (word, t),
            }
        }
    }

    /// Lowers along `f_{a_k}` first, `f_{a_1}` last; `None` if some step is killed.
    pub fn replay_lowering(&self, word: &[usize]) -> Option<Tableau> {
        let mut t = self.clone();
        for &i in word.iter().rev() {
            if !t.lower(i) {
                return None;
            }
        }
        Some(t)
    }

    /// The Lusztig involution (Schützenberger evacuation) on `B_m(shape)`.
    pub fn lusztig(&self) -> Tableau {
        let m = self.alphabet as usize;
        let (word, _) = self.to_highest_weight();
        let mut t = Tableau::lowest(&self.shape, m).expect("shape fits alphabet");
        for &a in word.iter().rev() {
            let ok = t.raise(m - a);
            debug_assert!(ok, "lowest-weight replay must not be killed");
        }
        t
    }

    /// Whether `H_delta (x) self` is highest weight, i.e. `eps_i <= delta_i - delta_{i+1}`.
    pub fn lr_membership(&self, delta: &Partition) -> Result<bool> {
        let m = self.alphabet as usize;
        if delta.len() > m {
            return Err(too_tall(delta, self.alphabet));
        }
        let ep = self.eps_phi();
        Ok(ep
            .eps
            .iter()
            .enumerate()
            .all(|(k, &e)| e <= delta.part(k) - delta.part(k + 1)))
    }

    /// Text form with barred letters: `2k-1` prints as `k`, `2k` as `k'`.
    pub fn to_barred_string(&self) -> String {
        let rows: Vec<String> = (0..self.shape.len())
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&x| {
                        let k = (x + 1) / 2;
                        if x % 2 == 0 {
                            format!("{k}'")
                        } else {
                            k.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        rows.join("/")
    }
}

fn too_tall(shape: &Partition, m: u8) -> Error {
    Error::TooManyParts {
        shape: shape.to_string(),
        limit: m as usize,
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.shape.len())
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// The statistics `eps_i`, `phi_i` for `i = 1..m-1`, stored at index `i-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsPhi {
    pub eps: Vec<u32>,
    pub phi: Vec<u32>,
}

impl EpsPhi {
    pub fn eps_at(&self, i: usize) -> u32 {
        self.eps.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn phi_at(&self, i: usize) -> u32 {
        self.phi.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn eps_vector(&self) -> WeightVector {
        WeightVector::from_dense(&self.eps.iter().map(|&e| e as i64).collect::<Vec<_>>())
    }

    pub fn phi_vector(&self) -> WeightVector {
        WeightVector::from_dense(&self.phi.iter().map(|&e| e as i64).collect::<Vec<_>>())
    }

    pub fn weight(&self) -> WeightVector {
        self.phi_vector().sub(&self.eps_vector())
    }
}

/// `eps_i`, `phi_i` of a word for all `i`, in one pass.
pub fn word_eps_phi(word: &[u8], m: usize) -> EpsPhi {
    let k = m.saturating_sub(1);
    let mut eps = vec![0u32; k];
    let mut open = vec![0u32; k + 1];
    for &x in word {
        let x = x as usize;
        if x >= 2 {
            if open[x - 1] > 0 {
                open[x - 1] -= 1;
            } else {
                eps[x - 2] += 1;
            }
        }
        if x <= k {
            open[x] += 1;
        }
    }
    EpsPhi {
        eps,
        phi: open[1..].to_vec(),
    }
}

/// Position of the letter `e_i` changes, if any.
pub fn word_e_position(word: &[u8], i: usize) -> Option<usize> {
    let (a, b) = (i as u8, i as u8 + 1);
    let mut open = 0u32;
    let mut last = None;
    for (p, &x) in word.iter().enumerate() {
        if x == a {
            open += 1;
        } else if x == b {
            if open > 0 {
                open -= 1;
            } else {
                last = Some(p);
            }
        }
    }
    last
}

/// Position of the letter `f_i` changes, if any.
pub fn word_f_position(word: &[u8], i: usize) -> Option<usize> {
    let (a, b) = (i as u8, i as u8 + 1);
    let mut stack: Vec<usize> = Vec::new();
    for (p, &x) in word.iter().enumerate() {
        if x == a {
            stack.push(p);
        } else if x == b {
            stack.pop();
        }
    }
    stack.first().copied()
}

/// An element `b1 (x) b2` of a tensor product of two tableau crystals; its
/// word is the concatenation of the two reading words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorPair {
    pub left: Tableau,
    pub right: Tableau,
}

impl TensorPair {
    pub fn new(left: Tableau, right: Tableau) -> Result<Self> {
        if left.alphabet != right.alphabet {
            return Err(Error::Precondition(format!(
                "tensor factors over alphabets {} and {}",
                left.alphabet, right.alphabet
            )));
        }
        Ok(TensorPair { left, right })
    }

    pub fn alphabet(&self) -> usize {
        self.left.alphabet as usize
    }

    pub fn word(&self) -> Vec<u8> {
        let mut w = self.left.reading_word();
        w.extend(self.right.reading_word());
        w
    }

    pub fn eps_phi(&self) -> EpsPhi {
        word_eps_phi(&self.word(), self.alphabet())
    }

    fn apply(&mut self, i: usize, raise: bool) -> bool {
        let word = self.word();
        let pos = if raise { word_e_position(&word, i) } else { word_f_position(&word, i) };
        let Some(p) = pos else { return false };
        let n1 = self.left.size();
        let (t, p) = if p < n1 { (&mut self.left, p) } else { (&mut self.right, p - n1) };
        let k = Tableau::reading_order(&t.shape)[p];
        t.cells[k] = if raise { i as u8 } else { i as u8 + 1 };
        true
    }

    pub fn raise(&mut self, i: usize) -> bool {
        self.apply(i, true)
    }

    pub fn lower(&mut self, i: usize) -> bool {
        self.apply(i, false)
    }

    pub fn to_highest_weight(&self) -> (Vec<usize>, TensorPair) {
        let mut b = self.clone();
        let mut word = Vec::new();
        loop {
            let ep = b.eps_phi();
            match ep.eps.iter().position(|&e| e > 0) {
                Some(k) => {
                    b.raise(k + 1);
                    word.push(k + 1);
                }
                None => return (word, b),
            }
        }
    }

    /// Lowest-weight element of the connected component, by greedy lowering.
    pub fn to_lowest_weight(&self) -> TensorPair {
        let mut b = self.clone();
        loop {
            let ep = b.eps_phi();
            match ep.phi.iter().position(|&e| e > 0) {
                Some(k) => {
                    b.lower(k + 1);
                }
                None => return b,
            }
        }
    }

    /// The Lusztig involution of the connected component containing `self`.
    pub fn lusztig(&self) -> TensorPair {
        let m = self.alphabet();
        let (word, _) = self.to_highest_weight();
        let mut b = self.to_lowest_weight();
        for &a in word.iter().rev() {
            let ok = b.raise(m - a);
            debug_assert!(ok, "lowest-weight replay must not be killed");
        }
        b
    }
}

/// `(eps_i, phi_i)` of `b1 (x) b2`.
pub fn tensor_eps_phi(b1: &Tableau, b2: &Tableau, i: usize) -> Result<(u32, u32)> {
    let pair = TensorPair::new(b1.clone(), b2.clone())?;
    b1.check_index(i)?;
    let ep = pair.eps_phi();
    Ok((ep.eps_at(i), ep.phi_at(i)))
}

/// Iterator over all semistandard tableaux of a shape over `1..=m`, in
/// lexicographic order of the row-major cell sequence.
pub struct SsytIter {
    shape: Partition,
    col_heights: Vec<usize>,
    rows: Vec<(usize, usize)>,
    cells: Vec<u8>,
    m: u8,
    done: bool,
}

impl SsytIter {
    fn above(&self, k: usize) -> Option<u8> {
        let (r, _) = self.rows[k];
        (r > 0).then(|| self.cells[k - self.shape.part(r - 1) as usize])
    }

    fn cap(&self, k: usize) -> u8 {
        let (r, c) = self.rows[k];
        self.m - (self.col_heights[c] - r - 1) as u8
    }

    fn advance(&mut self) -> bool {
        for k in (0..self.cells.len()).rev() {
            if self.cells[k] < self.cap(k) {
                self.cells[k] += 1;
                for j in k + 1..self.cells.len() {
                    let (_, c) = self.rows[j];
                    let left = if c > 0 { self.cells[j - 1] } else { 1 };
                    let above = self.above(j).map_or(1, |a| a + 1);
                    self.cells[j] = left.max(above);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let out = Tableau::from_cells(self.shape.clone(), self.cells.clone(), self.m);
        self.done = !self.advance();
        Some(out)
    }
}

pub fn enumerate_ssyt(shape: &Partition, m: usize) -> Result<SsytIter> {
    let start = Tableau::highest(shape, m)?;
    let conj = shape.conjugate();
    let rows = (0..shape.len())
        .flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c)))
        .collect();
    Ok(SsytIter {
        col_heights: (0..conj.len()).map(|c| conj.part(c) as usize).collect(),
        shape: shape.clone(),
        rows,
        cells: start.cells,
        m: m as u8,
        done: false,
    })
}

/// All tableaux of the given shape whose content is exactly `content`
/// (`content[k]` entries equal to `k+1`), built by stacking horizontal strips.
pub fn enumerate_with_content(shape: &Partition, content: &[u32], m: usize) -> Result<Vec<Tableau>> {
    let m8 = check_alphabet(m)?;
    if content.len() > m || content.iter().sum::<u32>() != shape.size() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut layers = Vec::new();
    strips(shape, content, &Partition::empty(), &mut layers, &mut |layers| {
        out.push(from_chain(shape, layers, m8));
    });
    out.sort();
    Ok(out)
}

/// Calls `visit` with every chain `empty = mu_0 < mu_1 < ... < mu_k = shape`
/// whose successive differences are horizontal strips of the sizes in `content`.
fn strips(
    shape: &Partition,
    content: &[u32],
    current: &Partition,
    layers: &mut Vec<Partition>,
    visit: &mut dyn FnMut(&[Partition]),
) {
    if layers.len() == content.len() {
        if current == shape {
            visit(layers);
        }
        return;
    }
    let size = content[layers.len()];
    for next in horizontal_strip_extensions(current, shape, size) {
        layers.push(next.clone());
        strips(shape, content, &next, layers, visit);
        layers.pop();
    }
}

/// All `mu` with `current <= mu <= bound` and `mu / current` a horizontal strip of `size` boxes.
pub(crate) fn horizontal_strip_extensions(current: &Partition, bound: &Partition, size: u32) -> Vec<Partition> {
    let rows = (current.len() + 1).min(bound.len());
    let caps: Vec<u32> = (0..rows)
        .map(|r| {
            let limit = if r == 0 { bound.part(0) } else { bound.part(r).min(current.part(r - 1)) };
            limit.saturating_sub(current.part(r))
        })
        .collect();
    let mut out = Vec::new();
    let mut add = vec![0u32; rows];
    fn rec(r: usize, left: u32, caps: &[u32], add: &mut Vec<u32>, current: &Partition, out: &mut Vec<Partition>) {
        if r == caps.len() {
            if left == 0 {
                let parts = (0..caps.len().max(current.len()))
                    .map(|i| current.part(i) + add.get(i).copied().unwrap_or(0))
                    .collect();
                out.push(Partition::from_sorted(parts));
            }
            return;
        }
        let rest: u32 = caps[r + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for x in lo..=caps[r].min(left) {
            add[r] = x;
            rec(r + 1, left - x, caps, add, current, out);
        }
        add[r] = 0;
    }
    rec(0, size, &caps, &mut add, current, &mut out);
    out
}

/// Builds the tableau whose `k`-th layer `layers[k] / layers[k-1]` holds the letter `k+1`.
pub(crate) fn from_chain(shape: &Partition, layers: &[Partition], m: u8) -> Tableau {
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.len()];
    let mut prev = Partition::empty();
    for (k, mu) in layers.iter().enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            for _ in prev.part(r)..mu.part(r) {
                row.push(k as u8 + 1);
            }
        }
        prev = mu.clone();
    }
    Tableau::from_cells(shape.clone(), rows.concat(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use proptest::prelude::*;

    fn t(s: &str, m: usize) -> Tableau {
        Tableau::parse(s, m).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn reading_words() {
        assert_eq!(t("3/4", 4).reading_word(), vec![3, 4]);
        assert_eq!(t("1,2/2", 3).reading_word(), vec![2, 1, 2]);
        assert_eq!(t("1,1/2,2", 2).reading_word(), vec![1, 2, 1, 2]);
    }

    #[test]
    fn operators_on_small_examples() {
        let col = t("3/4", 4);
        assert_eq!(col.e(3).unwrap(), None);
        assert_eq!(col.e(2).unwrap(), Some(t("2/4", 4)));
        let one = t("1", 2);
        let lowered = one.f(1).unwrap().unwrap();
        assert_eq!(lowered, t("2", 2));
        assert_eq!(lowered.e(1).unwrap(), Some(one));
        assert!(col.e(4).is_err());
        assert!(col.f(0).is_err());
    }

    #[test]
    fn eps_phi_examples() {
        let ep = t("3/4", 4).eps_phi();
        assert_eq!(ep.eps, vec![0, 1, 0]);
        assert_eq!(ep.phi, vec![0, 0, 0]);
        let ep = t("2", 3).eps_phi();
        assert_eq!(ep.eps, vec![1, 0]);
        assert_eq!(ep.phi, vec![0, 1]);
        for shape in partitions_up_to(7, 5) {
            assert!(Tableau::highest(&shape, 5).unwrap().is_highest());
        }
    }

    #[test]
    fn counts_match_hook_content() {
        assert_eq!(enumerate_ssyt(&p("1"), 3).unwrap().count(), 3);
        assert_eq!(enumerate_ssyt(&p("1,1"), 4).unwrap().count(), 6);
        assert_eq!(enumerate_ssyt(&p("2,1"), 3).unwrap().count(), 8);
        assert_eq!(enumerate_ssyt(&p(""), 3).unwrap().count(), 1);
        assert!(enumerate_ssyt(&p("1,1,1"), 2).is_err());
        for m in 1..=5 {
            for shape in partitions_up_to(6, m) {
                let list: Vec<Tableau> = enumerate_ssyt(&shape, m).unwrap().collect();
                assert_eq!(list.len() as u64, hook_content(&shape, m), "{shape} m={m}");
                assert!(list.windows(2).all(|w| w[0].cells < w[1].cells));
                assert!(list.iter().all(|x| x.is_semistandard()));
            }
        }
    }

    /// `s_shape(1^m)` by the hook-content formula.
    fn hook_content(shape: &Partition, m: usize) -> u64 {
        let conj = shape.conjugate();
        let (mut num, mut den) = (1u64, 1u64);
        for r in 0..shape.len() {
            for c in 0..shape.part(r) as usize {
                num *= (m as i64 + c as i64 - r as i64) as u64;
                den *= (shape.part(r) as usize - c + conj.part(c) as usize - r - 1) as u64;
            }
        }
        num / den
    }

    #[test]
    fn content_enumeration_matches_filter() {
        for shape in partitions_up_to(6, 3) {
            for t in enumerate_ssyt(&shape, 3).unwrap() {
                let c = t.content();
                let list = enumerate_with_content(&shape, &c, 3).unwrap();
                assert!(list.contains(&t));
                let expected = enumerate_ssyt(&shape, 3).unwrap().filter(|u| u.content() == c).count();
                assert_eq!(list.len(), expected);
            }
        }
    }

    #[test]
    fn highest_weight_paths() {
        let h = Tableau::highest(&p("3,1"), 4).unwrap();
        assert_eq!(h.to_highest_weight(), (vec![], h.clone()));
        let (word, top) = t("3", 3).to_highest_weight();
        assert_eq!(word, vec![2, 1]);
        assert_eq!(top, t("1", 3));
        for u in enumerate_ssyt(&p("2,1"), 4).unwrap() {
            let (word, top) = u.to_highest_weight();
            assert_eq!(top.replay_lowering(&word), Some(u));
        }
    }

    #[test]
    fn lusztig_examples() {
        let u = t("1,1,3,4/2,3,4/3", 4);
        assert_eq!(u.lusztig(), t("1,1,2,2/2,3,4/4", 4));
        for i in 1..=5 {
            assert_eq!(t(&i.to_string(), 5).lusztig(), t(&(6 - i).to_string(), 5));
        }
    }

    #[test]
    fn lr_membership_examples() {
        let u = t("1,1,3,4/2,3,4/3", 4);
        assert!(u.lr_membership(&p("3,3,1")).unwrap());
        let nu: Vec<u32> = u.content().iter().zip([3, 3, 1, 0]).map(|(c, d)| c + d).collect();
        assert_eq!(nu, vec![5, 4, 4, 2]);
        let col = t("3/4", 4);
        // eps(3,4) = omega_2, so H_(1,1) (x) (3,4) is highest of weight (1,1,1,1).
        assert!(col.lr_membership(&p("1,1")).unwrap());
        assert!(!col.lr_membership(&p("1")).unwrap());
        assert!(Tableau::highest(&p("2,1"), 4).unwrap().lr_membership(&p("")).unwrap());
    }

    #[test]
    fn tensor_rule() {
        let one = t("1", 2);
        assert_eq!(tensor_eps_phi(&one, &one, 1).unwrap(), (0, 2));
        let hd = Tableau::highest(&p("3,1"), 3).unwrap();
        let hl = Tableau::highest(&p("2,1"), 3).unwrap();
        for i in 1..3 {
            assert_eq!(tensor_eps_phi(&hd, &hl, i).unwrap().0, 0);
        }
        for b1 in enumerate_ssyt(&p("2"), 3).unwrap() {
            for b2 in enumerate_ssyt(&p("1,1"), 3).unwrap() {
                for i in 1..3 {
                    let (e, f) = tensor_eps_phi(&b1, &b2, i).unwrap();
                    let (e1, f1) = (b1.eps_phi().eps_at(i) as i64, b1.eps_phi().phi_at(i) as i64);
                    let (e2, f2) = (b2.eps_phi().eps_at(i) as i64, b2.eps_phi().phi_at(i) as i64);
                    assert_eq!(f as i64 - e as i64, f1 - e1 + f2 - e2);
                    // The usual max-rule for the concatenated word.
                    assert_eq!(e as i64, e1 + (e2 - f1).max(0));
                    assert_eq!(f as i64, f2 + (f1 - e2).max(0));
                }
            }
        }
    }

    fn all_small() -> Vec<Tableau> {
        let mut out = Vec::new();
        for m in 2..=5 {
            for shape in partitions_up_to(5, m) {
                out.extend(enumerate_ssyt(&shape, m).unwrap());
            }
        }
        out
    }

    #[test]
    fn operator_inverses_and_counts() {
        for u in all_small() {
            let ep = u.eps_phi();
            let content = u.content();
            for i in 1..u.alphabet() {
                if let Some(v) = u.e(i).unwrap() {
                    assert!(v.is_semistandard());
                    assert_eq!(v.f(i).unwrap().as_ref(), Some(&u));
                }
                if let Some(v) = u.f(i).unwrap() {
                    assert!(v.is_semistandard());
                    assert_eq!(v.e(i).unwrap().as_ref(), Some(&u));
                }
                assert_eq!(
                    ep.phi_at(i) as i64 - ep.eps_at(i) as i64,
                    content[i - 1] as i64 - content[i] as i64
                );
                let mut v = u.clone();
                let mut k = 0;
                while v.raise(i) {
                    k += 1;
                }
                assert_eq!(k, ep.eps_at(i));
            }
        }
    }

    #[test]
    fn lusztig_is_involution_swapping_statistics() {
        for u in all_small() {
            let s = u.lusztig();
            assert_eq!(s.lusztig(), u);
            let (a, b) = (u.eps_phi(), s.eps_phi());
            let m = u.alphabet();
            for i in 1..m {
                assert_eq!(b.eps_at(i), a.phi_at(m - i));
            }
        }
    }

    proptest! {
        #[test]
        fn parse_display_roundtrip(idx in 0usize..2000) {
            let all = all_small();
            let u = &all[idx % all.len()];
            prop_assert_eq!(&Tableau::parse(&u.to_string(), u.alphabet()).unwrap(), u);
        }
    }

    #[test]
    fn rejects_bad_text() {
        assert!(Tableau::parse("2,1", 3).is_err());
        assert!(Tableau::parse("1/1", 3).is_err());
        assert!(Tableau::parse("1,4", 3).is_err());
        assert!(Tableau::parse("1,a", 3).is_err());
        assert!(Tableau::parse("1", 300).is_err());
        assert_eq!(t("1,2/3", 4).to_barred_string(), "1,1'/2");
    }
}
