//! Exact sparse polynomials with integer coefficients, in one variable `t`
//! or in the variables `t_1, t_2, ...`, and truncated power series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in `t`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<u32, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, 1)
    }

    pub fn monomial(exp: u32, coeff: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.terms().map(|(e, c)| c * t.pow(e)).sum()
    }

    /// The first term with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(u32, i64)> {
        self.terms().find(|&(_, c)| c < 0)
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: u32) -> Poly {
        Poly::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: u32) -> Poly {
        Poly {
            terms: self.terms.range(..=n).map(|(&e, &c)| (e, c)).collect(),
        }
    }

    /// JSON form `{"coeffs": {"2": 1, "4": 2}}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wrapped<'a> {
            coeffs: &'a Poly,
        }
        serde_json::to_string(&Wrapped { coeffs: self }).expect("serializable")
    }

    /// Parses the JSON form; also accepts a bare coefficient map.
    pub fn from_json(s: &str) -> Result<Poly> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Form {
            Wrapped { coeffs: Poly },
            Bare(Poly),
        }
        match serde_json::from_str::<Form>(s) {
            Ok(Form::Wrapped { coeffs }) | Ok(Form::Bare(coeffs)) => Ok(coeffs),
            Err(_) => Err(Error::MalformedPolynomial(s.to_string())),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Splits `"t^2 - 3*t + 1"` into signed term strings.
fn signed_terms(s: &str) -> Option<Vec<(bool, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !cur.ends_with('^') {
            if i > 0 {
                if cur.is_empty() {
                    return None;
                }
                out.push((negative, std::mem::take(&mut cur)));
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return None;
    }
    out.push((negative, cur));
    Some(out)
}

/// Splits a term like `"3*t_2^2*t_4"` into its coefficient and its factors.
fn coeff_and_factors(term: &str) -> Option<(i64, Vec<&str>)> {
    let mut coeff = 1i64;
    let mut factors = Vec::new();
    for factor in term.split('*') {
        if factor.is_empty() {
            return None;
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            coeff = coeff.checked_mul(factor.parse().ok()?)?;
        } else {
            factors.push(factor);
        }
    }
    Some((coeff, factors))
}

/// Parses `"t"`, `"t^3"`, `"t_2"`, `"t_2^3"` into (variable index, exponent).
fn parse_power(factor: &str) -> Option<(usize, u32)> {
    let (base, exp) = match factor.split_once('^') {
        Some((b, e)) => (b, e.parse().ok()?),
        None => (factor, 1),
    };
    let var = match base.strip_prefix('t')? {
        "" => 0,
        rest => rest.strip_prefix('_')?.parse().ok().filter(|&i| i > 0)?,
    };
    Some((var, exp))
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPolynomial(s.to_string());
        if s.trim() == "0" {
            return Ok(Poly::zero());
        }
        let mut p = Poly::zero();
        for (negative, term) in signed_terms(s).ok_or_else(bad)? {
            let (coeff, factors) = coeff_and_factors(&term).ok_or_else(bad)?;
            let mut exp = 0;
            for f in factors {
                match parse_power(f) {
                    Some((0, e)) => exp += e,
                    _ => return Err(bad()),
                }
            }
            p.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(p)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Poly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from exponents to integer coefficients")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Poly, A::Error> {
                let mut p = Poly::zero();
                while let Some((k, v)) = access.next_entry::<String, i64>()? {
                    let e = k.parse::<u32>().map_err(serde::de::Error::custom)?;
                    p.add_term(e, v);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(PolyVisitor)
    }
}

/// A monomial `t^e0 * t_1^e1 * t_2^e2 ...`, stored as the exponent vector
/// indexed by variable subscript (index 0 is the plain variable `t`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

// Terms are listed by weighted degree first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weighted_degree(), &self.0).cmp(&(other.weighted_degree(), &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Total degree under `t_i -> t^i` (and `t -> t`).
    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| e * (i as u32).max(1))
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let var = if i == 0 { "t".to_string() } else { format!("t_{i}") };
                if e == 1 {
                    var
                } else {
                    format!("{var}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Polynomial in `t, t_1, t_2, ...` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::default(), 1);
        p
    }

    /// The single variable `t_i` (`t` when `i == 0`).
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::new(exps), 1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(m.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Substitutes `t_i -> t^i`.
    pub fn specialize(&self) -> Poly {
        Poly::from_terms(self.terms().map(|(m, c)| (m.weighted_degree(), c)))
    }

    /// Drops monomials of weighted degree above `n`.
    pub fn truncate_weighted(&self, n: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() <= n)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            let a = c.unsigned_abs();
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPolynomial(s.to_string());
        if s.trim() == "0" {
            return Ok(MultiPoly::zero());
        }
        let mut p = MultiPoly::zero();
        for (negative, term) in signed_terms(s).ok_or_else(bad)? {
            let (coeff, factors) = coeff_and_factors(&term).ok_or_else(bad)?;
            let mut exps: Vec<u32> = Vec::new();
            for f in factors {
                let (var, e) = parse_power(f).ok_or_else(bad)?;
                if exps.len() <= var {
                    exps.resize(var + 1, 0);
                }
                exps[var] += e;
            }
            p.add_term(Monomial::new(exps), if negative { -coeff } else { coeff });
        }
        Ok(p)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            map.serialize_entry(&m.to_string(), &c)?;
        }
        map.end()
    }
}

/// Power series in `t` known exactly up to and including `t^cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Poly,
    cutoff: u32,
}

impl TruncatedSeries {
    pub fn new(poly: &Poly, cutoff: u32) -> Self {
        TruncatedSeries {
            poly: poly.truncate(cutoff),
            cutoff,
        }
    }

    pub fn zero(cutoff: u32) -> Self {
        TruncatedSeries::new(&Poly::zero(), cutoff)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn coeff(&self, k: u32) -> Result<i64> {
        if k > self.cutoff {
            return Err(Error::CutoffExceeded {
                requested: k,
                cutoff: self.cutoff,
            });
        }
        Ok(self.poly.coeff(k))
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&(&self.poly + &other.poly), self.cutoff.min(other.cutoff))
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&(&self.poly * &other.poly), self.cutoff.min(other.cutoff))
    }

    /// Coefficientwise comparison through degree `degree`; errors when either
    /// operand is not known that far.
    pub fn agrees_through(&self, other: &TruncatedSeries, degree: u32) -> Result<bool> {
        let cutoff = self.cutoff.min(other.cutoff);
        if degree > cutoff {
            return Err(Error::CutoffExceeded {
                requested: degree,
                cutoff,
            });
        }
        Ok(self.poly.truncate(degree) == other.poly.truncate(degree))
    }

    /// Comparison through both cutoffs; they must coincide.
    pub fn try_eq(&self, other: &TruncatedSeries) -> Result<bool> {
        let degree = self.cutoff.max(other.cutoff);
        self.agrees_through(other, degree)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.poly, self.cutoff + 1)
    }
}

/// `prod_e 1/(1 - t^e)` through degree `cutoff`.
pub fn series_inverse_product(exponents: &[u32], cutoff: u32) -> Result<TruncatedSeries> {
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(Error::Precondition(
            "exponents must be a nonempty list of positive integers".into(),
        ));
    }
    let n = cutoff as usize;
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = 1;
    for &e in exponents {
        let e = e as usize;
        for k in e..=n {
            coeffs[k] += coeffs[k - e];
        }
    }
    let poly = Poly::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as u32, c)));
    Ok(TruncatedSeries::new(&poly, cutoff))
}
