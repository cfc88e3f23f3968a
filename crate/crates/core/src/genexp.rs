//! Generalized exponents: zero-weight Lusztig t-analogues of types A and C
//! computed from crystal statistics, and the stable `C_inf`, `B_inf`, `D_inf`
//! series.
//!
//! Type C tableaux use the alphabet `1 < 1' < 2 < 2' < ... < n < n'`
//! encoded as `1..=2n` with `k -> 2k-1` and `k' -> 2k`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::branching::sundaram_tableaux;
use crate::crystal::{enumerate_ssyt, enumerate_with_content, from_chain, horizontal_strip_extensions, EpsPhi, Tableau};
use crate::error::{Error, Result};
use crate::lr::{companion, r_matrix_highest};
use crate::partition::{p2_partitions_of, Partition, WeightVector};
use crate::poly::{Monomial, MultiPoly, Poly, TruncatedSeries};

fn check_rank(lambda: &Partition, n: usize) -> Result<()> {
    if n == 0 || 2 * n > 255 {
        return Err(Error::Precondition(format!("rank {n} is out of range")));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            shape: lambda.to_string(),
            limit: n,
        });
    }
    Ok(())
}

/// Zero-weight vertices of `B(lambda)` for `gl_n`: tableaux of content
/// `(|lambda|/n, ..., |lambda|/n)`. Empty when `n` does not divide `|lambda|`.
pub fn zero_weight_a(lambda: &Partition, n: usize) -> Result<Vec<Tableau>> {
    check_rank(lambda, n)?;
    if lambda.size() as usize % n != 0 {
        return Ok(Vec::new());
    }
    let a = lambda.size() / n as u32;
    enumerate_with_content(lambda, &vec![a; n], n)
}

/// `K_{lambda,0}^{A_{n-1}}(t) = sum_b t^{sum_i i * eps_i(b)}` over zero-weight `b`.
pub fn genexp_a(lambda: &Partition, n: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for b in zero_weight_a(lambda, n)? {
        let ep = b.eps_phi();
        out.add_term(weighted(&ep.eps, |i| i as u32), 1);
    }
    Ok(out)
}

/// The same sum with the statistic `sum_i (n-i) * eps_i(b)`.
pub fn genexp_a_dual(lambda: &Partition, n: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for b in zero_weight_a(lambda, n)? {
        let ep = b.eps_phi();
        out.add_term(weighted(&ep.eps, |i| (n - i) as u32), 1);
    }
    Ok(out)
}

/// `sum_b prod_i t_i^{eps_i(b)}`.
pub fn genexp_a_multi(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for b in zero_weight_a(lambda, n)? {
        let ep = b.eps_phi();
        let mut exps = vec![0u32; n];
        for (k, &e) in ep.eps.iter().enumerate() {
            exps[k + 1] = e;
        }
        out.add_term(Monomial::new(exps), 1);
    }
    Ok(out)
}

/// `sum_i coeff(i) * v_i` for a vector stored at index `i-1`.
fn weighted(v: &[u32], coeff: impl Fn(usize) -> u32) -> u32 {
    v.iter().enumerate().map(|(k, &x)| coeff(k + 1) * x).sum()
}

/// A King tableau: semistandard over `1 < 1' < ... < n < n'` with every
/// entry of row `i` at least `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KingTableau(Tableau);

impl KingTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if t.alphabet() % 2 != 0 || !satisfies_flag(&t) {
            return Err(Error::MalformedTableau(format!("{t} is not a King tableau")));
        }
        Ok(KingTableau(t))
    }

    /// Parses the barred text form, e.g. `"1,1'/2"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::MalformedTableau(s.to_string());
        let t = s.trim();
        let rows = if t.is_empty() || t == "()" {
            Vec::new()
        } else {
            t.split('/')
                .map(|row| {
                    row.split(',')
                        .map(|x| {
                            let x = x.trim();
                            let (k, barred) = match x.strip_suffix('\'') {
                                Some(k) => (k, true),
                                None => (x, false),
                            };
                            let k: u8 = k.parse().ok().filter(|&k| k >= 1 && k as usize <= n)?;
                            Some(if barred { 2 * k } else { 2 * k - 1 })
                        })
                        .collect::<Option<Vec<u8>>>()
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(bad)?
        };
        KingTableau::new(Tableau::new(rows, 2 * n)?).map_err(|_| bad())
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.alphabet() / 2
    }

    pub fn is_zero_weight(&self) -> bool {
        let c = self.0.content();
        c.chunks(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for KingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_barred_string())
    }
}

impl Serialize for KingTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Row `i` (1-based) has all entries at least `2i - 1`.
pub fn satisfies_flag(b: &Tableau) -> bool {
    (0..b.shape().len()).all(|r| b.row(r)[0] as usize > 2 * r)
}

/// All zero-weight King tableaux of shape `lambda`, canonically ordered.
///
/// Letters `k, k'` may only occupy the first `k` rows, so the tableau is
/// built as a chain of horizontal strips, two equal strips per `k`.
pub fn enumerate_king_zero(lambda: &Partition, n: usize) -> Result<Vec<KingTableau>> {
    check_rank(lambda, n)?;
    if lambda.size() % 2 != 0 {
        return Ok(Vec::new());
    }
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    let mut layers = Vec::with_capacity(2 * n);
    king_pairs(lambda, &conj, n, 1, &Partition::empty(), &mut layers, &mut |layers| {
        out.push(KingTableau(from_chain(lambda, layers, 2 * n as u8)));
    });
    out.sort();
    Ok(out)
}

fn king_pairs(
    lambda: &Partition,
    conj: &Partition,
    n: usize,
    k: usize,
    current: &Partition,
    layers: &mut Vec<Partition>,
    visit: &mut dyn FnMut(&[Partition]),
) {
    if k > n {
        if current == lambda {
            visit(layers);
        }
        return;
    }
    let bound = Partition::from_sorted((0..k).map(|r| lambda.part(r)).collect());
    let remaining = (lambda.size() - current.size()) / 2;
    for c in 0..=remaining {
        for first in horizontal_strip_extensions(current, &bound, c) {
            for second in horizontal_strip_extensions(&first, &bound, c) {
                // Each column still has to be completed with letters above `k'`.
                let left = 2 * (n - k) as u32;
                let fits = (0..conj.len()).all(|j| conj.part(j) - second.conjugate().part(j) <= left);
                if !fits {
                    continue;
                }
                layers.push(first.clone());
                layers.push(second.clone());
                king_pairs(lambda, conj, n, k + 1, &second, layers, visit);
                layers.pop();
                layers.pop();
            }
        }
    }
}

/// The map `L`: relabel, then push each odd `sl_2` string to its lowest
/// element by applying `f_{2i-1}` as long as possible.
pub fn king_to_distinguished(t: &KingTableau) -> Result<Tableau> {
    if !t.is_zero_weight() {
        return Err(Error::Precondition(format!("{t} does not have weight zero")));
    }
    let mut b = t.0.clone();
    for i in (1..b.alphabet()).step_by(2) {
        while b.lower(i) {}
    }
    Ok(b)
}

/// Inverse of [`king_to_distinguished`]: a zero-weight tableau sits in the
/// middle of each odd string, so raise halfway back up.
pub fn distinguished_to_king(b: &Tableau) -> Result<KingTableau> {
    let mut t = b.clone();
    let ep = b.eps_phi();
    for i in (1..t.alphabet()).step_by(2) {
        for _ in 0..ep.eps_at(i) / 2 {
            t.raise(i);
        }
    }
    let k = KingTableau::new(t)?;
    if !k.is_zero_weight() {
        return Err(Error::Precondition(format!("{b} does not come from a zero-weight King tableau")));
    }
    Ok(k)
}

/// Conditions on `b` over the alphabet `2n`: (C1) `phi_i = 0` for odd `i`,
/// (C2) `eps_i` even for odd `i`, and with `flag` also (C3) row `i` entries
/// at least `2i - 1`.
pub fn is_distinguished_star(b: &Tableau, n: usize, flag: bool) -> bool {
    if b.alphabet() != 2 * n {
        return false;
    }
    let ep = b.eps_phi();
    let odd_ok = (1..2 * n).step_by(2).all(|i| ep.phi_at(i) == 0 && ep.eps_at(i) % 2 == 0);
    odd_ok && (!flag || satisfies_flag(b))
}

/// `ch_{C_n}(b) = sum_{i=1}^{2n-1} (2n - i) * ceil(eps_i(b) / 2)`.
pub fn charge_c(b: &Tableau, n: usize) -> u32 {
    charge_from_eps(&b.eps_phi(), n)
}

fn charge_from_eps(ep: &EpsPhi, n: usize) -> u32 {
    (1..2 * n).map(|i| (2 * n - i) as u32 * ep.eps_at(i).div_ceil(2)).sum()
}

/// The statistics attached to a distinguished tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishedProfile {
    #[serde(serialize_with = "weight_text")]
    pub mu_b: WeightVector,
    #[serde(serialize_with = "weight_text")]
    pub theta: WeightVector,
    pub charge: u32,
}

fn weight_text<S: Serializer>(w: &WeightVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// Finite rank form: `theta = eps*(b) + mu*_{b,n}` where `eps*_i = eps_{2n-i}`
/// and `mu*_{b,n} = sum_{i<n} (eps*_{2i} mod 2) omega_{2i}`; the charge is `|theta| / 2`.
pub fn profile_finite(b: &Tableau, n: usize) -> DistinguishedProfile {
    let ep = b.eps_phi();
    let mut eps_star = WeightVector::zero();
    for i in 1..2 * n {
        eps_star.set(i, ep.eps_at(2 * n - i) as i64);
    }
    let mut mu = WeightVector::zero();
    for i in 1..n {
        mu.set(2 * i, eps_star.get(2 * i) % 2);
    }
    let theta = eps_star.add(&mu);
    DistinguishedProfile {
        charge: (theta.size() / 2) as u32,
        mu_b: mu,
        theta,
    }
}

/// Stable form: `theta = phi(b) + mu_b` with `mu_b = sum_{i even} (phi_i mod 2) omega_i`.
pub fn profile_stable(b: &Tableau) -> DistinguishedProfile {
    let ep = b.eps_phi();
    let phi = ep.phi_vector();
    let mut mu = WeightVector::zero();
    for (i, a) in phi.iter() {
        if i % 2 == 0 {
            mu.set(i, a % 2);
        }
    }
    let theta = phi.add(&mu);
    DistinguishedProfile {
        charge: (theta.size() / 2) as u32,
        mu_b: mu,
        theta,
    }
}

/// A zero-weight King tableau together with its image under `L` and charge.
#[derive(Clone, Debug, Serialize)]
pub struct KingWitness {
    pub king: KingTableau,
    pub distinguished: Tableau,
    pub charge: u32,
}

/// Every zero-weight King tableau with its image and charge.
pub fn king_witnesses(lambda: &Partition, n: usize) -> Result<Vec<KingWitness>> {
    let mut out = Vec::new();
    for king in enumerate_king_zero(lambda, n)? {
        let b = king_to_distinguished(&king)?;
        let ep = b.eps_phi();
        let charge = charge_from_eps(&ep, n);
        let dual = profile_finite(&b, n).charge;
        assert_eq!(charge, dual, "charge forms disagree on {b}");
        out.push(KingWitness {
            king,
            distinguished: b,
            charge,
        });
    }
    Ok(out)
}

/// `K_{lambda,0}^{C_n}(t) = sum_{T in K^0} t^{ch(L(T))}`.
pub fn genexp_c(lambda: &Partition, n: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for w in king_witnesses(lambda, n)? {
        out.add_term(w.charge, 1);
    }
    Ok(out)
}

/// `sum_T prod_i t_{2n-i}^{ceil(eps_i(L(T))/2)}`.
pub fn genexp_c_multi(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for king in enumerate_king_zero(lambda, n)? {
        let ep = king_to_distinguished(&king)?.eps_phi();
        let mut exps = vec![0u32; 2 * n];
        for i in 1..2 * n {
            exps[2 * n - i] = ep.eps_at(i).div_ceil(2);
        }
        out.add_term(Monomial::new(exps), 1);
    }
    Ok(out)
}

/// The set `D*_2n(lambda)` with the flag, enumerated directly.
pub fn enumerate_dstar(lambda: &Partition, n: usize) -> Result<Vec<Tableau>> {
    check_rank(lambda, n)?;
    Ok(enumerate_ssyt(lambda, 2 * n)?
        .filter(|b| is_distinguished_star(b, n, true))
        .collect())
}

/// Result of the Sundaram route.
#[derive(Clone, Debug, Serialize)]
pub struct SundaramOutcome {
    pub poly: Poly,
    /// The distinct images `T_hat(tau)` that are distinguished.
    pub images: Vec<Tableau>,
    /// Images that fail the distinguished conditions and are therefore dropped.
    pub rejected: Vec<Tableau>,
    pub tableaux_seen: usize,
}

/// `K_{lambda,0}^{C_n}(t)` through Sundaram-LR tableaux: sweep `nu` in
/// `P^(2)_2n` with `|nu|/2 <= <lambda, rho^vee>`, map each Sundaram tableau
/// through its companion and the R-matrix, collect the distinct distinguished
/// images and sum `t^{|phi(b) + mu_{b,n}|/2}`, where
/// `mu_{b,n} = sum_{i<n} (phi_2i mod 2) omega_2i`.
pub fn genexp_c_sundaram(lambda: &Partition, n: usize) -> Result<SundaramOutcome> {
    check_rank(lambda, n)?;
    if lambda.size() % 2 != 0 {
        return Ok(SundaramOutcome {
            poly: Poly::zero(),
            images: Vec::new(),
            rejected: Vec::new(),
            tableaux_seen: 0,
        });
    }
    let top = crate::extremal::rho_pairing(lambda, n);
    let mut images = BTreeSet::new();
    let mut seen = 0;
    for half in (lambda.size() / 2)..=top {
        for nu in p2_partitions_of(2 * half, 2 * n) {
            if !nu.contains(lambda) {
                continue;
            }
            for tau in sundaram_tableaux(lambda, &nu, n)? {
                seen += 1;
                let comp = companion(&tau, 2 * n)?;
                let (_, hat) = r_matrix_highest(lambda, &comp)?;
                images.insert(hat);
            }
        }
    }
    let (good, bad): (Vec<Tableau>, Vec<Tableau>) = images.into_iter().partition(is_distinguished);
    let mut poly = Poly::zero();
    for b in &good {
        poly.add_term(sundaram_exponent(b, n), 1);
    }
    Ok(SundaramOutcome {
        poly,
        images: good,
        rejected: bad,
        tableaux_seen: seen,
    })
}

/// `eps_i = 0` and `phi_i` even for every odd `i`.
pub fn is_distinguished(b: &Tableau) -> bool {
    let ep = b.eps_phi();
    (1..b.alphabet()).step_by(2).all(|i| ep.eps_at(i) == 0 && ep.phi_at(i) % 2 == 0)
}

fn sundaram_exponent(b: &Tableau, n: usize) -> u32 {
    let ep = b.eps_phi();
    let mut total = 0;
    for i in 1..2 * n {
        let mut v = ep.phi_at(i);
        if i % 2 == 0 {
            v += v % 2;
        }
        total += i as u32 * v;
    }
    total / 2
}

/// `K_{lambda,0}^{C_inf}(t)` through degree `cutoff`.
///
/// A tableau whose largest entry is `M` has `phi_M >= 1`, hence exponent at
/// least `M/2`; entries above `2 * cutoff` therefore never contribute, and the
/// statistics of tableaux with entries at most `2 * cutoff` are computed
/// exactly over the alphabet `2 * cutoff + 1`.
pub fn stable_c(lambda: &Partition, cutoff: u32) -> Result<TruncatedSeries> {
    stable_c_with_alphabet(lambda, cutoff, 2 * cutoff as usize)
}

/// As [`stable_c`] but with entries bounded by `max_entry` (at least `2 * cutoff`).
pub fn stable_c_with_alphabet(lambda: &Partition, cutoff: u32, max_entry: usize) -> Result<TruncatedSeries> {
    let multi = stable_c_multi_with_alphabet(lambda, cutoff, max_entry)?;
    Ok(TruncatedSeries::new(&multi.specialize(), cutoff))
}

pub fn stable_c_multi(lambda: &Partition, cutoff: u32) -> Result<MultiPoly> {
    stable_c_multi_with_alphabet(lambda, cutoff, 2 * cutoff as usize)
}

fn stable_c_multi_with_alphabet(lambda: &Partition, cutoff: u32, max_entry: usize) -> Result<MultiPoly> {
    if max_entry < 2 * cutoff as usize {
        return Err(Error::Precondition(format!(
            "entries up to {} are needed for cutoff {cutoff}",
            2 * cutoff
        )));
    }
    let mut out = MultiPoly::zero();
    if lambda.size() % 2 != 0 || lambda.len() > max_entry {
        return Ok(out);
    }
    if lambda.is_empty() {
        return Ok(MultiPoly::one());
    }
    let m = max_entry + 1;
    for b in enumerate_ssyt(lambda, max_entry)? {
        let b = b.with_alphabet(m)?;
        let ep = b.eps_phi();
        if !(1..m).step_by(2).all(|i| ep.eps_at(i) == 0 && ep.phi_at(i) % 2 == 0) {
            continue;
        }
        let mut exps = vec![0u32; m];
        let mut degree = 0;
        for i in 1..m {
            let phi = ep.phi_at(i);
            let v = if i % 2 == 0 { phi + phi % 2 } else { phi };
            exps[i] = v / 2;
            degree += i as u32 * v / 2;
        }
        if degree <= cutoff {
            out.add_term(Monomial::new(exps), 1);
        }
    }
    Ok(out)
}

/// `K^{B_inf} = K^{D_inf} = K^{C_inf}` at the conjugate partition.
pub fn stable_b(lambda: &Partition, cutoff: u32) -> Result<TruncatedSeries> {
    stable_c(&lambda.conjugate(), cutoff)
}

pub fn stable_d(lambda: &Partition, cutoff: u32) -> Result<TruncatedSeries> {
    stable_b(lambda, cutoff)
}

/// `K^{C_{n+1}}_{lambda,0}(t) - K^{C_n}_{lambda,0}(t)`, which must have
/// non-negative coefficients.
pub fn growth_delta(lambda: &Partition, n: usize) -> Result<Poly> {
    let d = &genexp_c(lambda, n + 1)? - &genexp_c(lambda, n)?;
    if let Some((degree, coeff)) = d.first_negative() {
        return Err(Error::NegativeCoefficient { degree, coeff });
    }
    Ok(d)
}
