//! Invariant sweeps run by `genexp verify <suite>`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::branching::{branching_sp, compare_rules};
use crate::error::{Error, Result};
use crate::extremal::{max_power, min_power, min_row_charge_bruteforce, sigma_min};
use crate::genexp::{
    charge_c, genexp_a, genexp_c, genexp_c_sundaram, growth_delta, is_distinguished_star, stable_c,
};
use crate::oracle::{oracle_a, oracle_c};
use crate::partition::{p2_partitions_of, partitions_up_to, Partition};
use crate::poly::{series_inverse_product, Poly, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleAgreement,
    RouteEquality,
    Stability,
    TheoremAc,
    Growth,
    Extremal,
    BranchingEquality,
    SeriesIdentity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleAgreement,
        Suite::RouteEquality,
        Suite::Stability,
        Suite::TheoremAc,
        Suite::Growth,
        Suite::Extremal,
        Suite::BranchingEquality,
        Suite::SeriesIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleAgreement => "oracle-agreement",
            Suite::RouteEquality => "route-equality",
            Suite::Stability => "stability",
            Suite::TheoremAc => "theorem-ac",
            Suite::Growth => "growth",
            Suite::Extremal => "extremal",
            Suite::BranchingEquality => "branching-equality",
            Suite::SeriesIdentity => "series-identity",
        }
    }

    pub fn bounds(self) -> &'static str {
        match self {
            Suite::OracleAgreement => "|lambda| <= 6; type C n <= 3, type A n <= 4",
            Suite::RouteEquality => "|lambda| <= 6, n <= 3",
            Suite::Stability => "|lambda| <= 6, cutoff 8, rank 8",
            Suite::TheoremAc => "n <= 6, p <= 3",
            Suite::Growth => "|lambda| <= 6, n = 2, 3",
            Suite::Extremal => "|lambda| <= 8, n <= 3",
            Suite::BranchingEquality => "|nu| <= 8, n <= 3",
            Suite::SeriesIdentity => "|lambda| <= 4, n = 2, degree 6",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub bounds: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

struct Sweep {
    cases: usize,
    failures: Vec<Failure>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            cases: 0,
            failures: Vec::new(),
        }
    }

    /// Records one case; an `Err` from the check is a failure, not an abort.
    fn check(&mut self, case: impl Into<String>, outcome: Result<Option<String>>) {
        self.cases += 1;
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => e.to_string(),
        };
        self.failures.push(Failure {
            case: case.into(),
            detail,
        });
    }
}

fn mismatch(what: &str, left: &impl fmt::Display, right: &impl fmt::Display) -> Option<String> {
    Some(format!("{what}: {left} != {right}"))
}

fn equal(what: &str, left: &Poly, right: &Poly) -> Option<String> {
    (left != right).then(|| mismatch(what, left, right).unwrap())
}

pub fn run_suite(suite: Suite) -> VerifyReport {
    let mut s = Sweep::new();
    match suite {
        Suite::OracleAgreement => {
            for n in 1..=3 {
                for lambda in partitions_up_to(6, n) {
                    s.check(format!("C {lambda} n={n}"), (|| {
                        Ok(equal("king vs oracle", &genexp_c(&lambda, n)?, &oracle_c(&lambda, n)?))
                    })());
                }
            }
            for n in 1..=4 {
                for lambda in partitions_up_to(6, n) {
                    s.check(format!("A {lambda} n={n}"), (|| {
                        Ok(equal("crystal vs oracle", &genexp_a(&lambda, n)?, &oracle_a(&lambda, n)?))
                    })());
                }
            }
        }
        Suite::RouteEquality => {
            for n in 1..=3 {
                for lambda in partitions_up_to(6, n) {
                    s.check(format!("{lambda} n={n}"), (|| {
                        let sund = genexp_c_sundaram(&lambda, n)?;
                        if !sund.rejected.is_empty() {
                            return Ok(Some(format!("{} images are not distinguished", sund.rejected.len())));
                        }
                        Ok(equal("sundaram vs king", &sund.poly, &genexp_c(&lambda, n)?))
                    })());
                }
            }
        }
        Suite::Stability => {
            let cutoff = 8;
            for lambda in partitions_up_to(6, 8) {
                s.check(format!("{lambda}"), (|| {
                    let finite = TruncatedSeries::new(&genexp_c(&lambda, 8)?, cutoff);
                    let stable = stable_c(&lambda, cutoff)?;
                    Ok((finite != stable).then(|| mismatch("rank 8 vs stable", &finite.poly(), &stable.poly()).unwrap()))
                })());
            }
        }
        Suite::TheoremAc => {
            for n in 2..=6 {
                for p in 1..=(n / 2).min(3) {
                    s.check(format!("n={n} p={p}"), theorem_ac_case(n, p));
                }
            }
        }
        Suite::Growth => {
            for n in 2..=3 {
                for lambda in partitions_up_to(6, n) {
                    s.check(format!("{lambda} n={n}"), growth_delta(&lambda, n).map(|_| None));
                }
            }
        }
        Suite::Extremal => {
            for n in 1..=3 {
                for lambda in partitions_up_to(8, n).into_iter().filter(|l| l.size() % 2 == 0) {
                    s.check(format!("{lambda} n={n}"), extremal_case(&lambda, n));
                }
            }
        }
        Suite::BranchingEquality => {
            for n in 1..=3 {
                for nu in partitions_up_to(8, 2 * n) {
                    for lambda in partitions_up_to(nu.size(), n).into_iter().filter(|l| nu.contains(l)) {
                        s.check(format!("{lambda} in {nu} n={n}"), branching_sp(&lambda, &nu, n).map(|_| None));
                    }
                }
            }
            let (lambda, nu) = (Partition::new(vec![2, 1, 1]).unwrap(), Partition::new(vec![5, 4, 3, 3, 3, 2]).unwrap());
            s.check("worked instance", (|| {
                let report = compare_rules(&lambda, &nu, 3)?;
                Ok((!report.counts_agree || report.total_sundaram != 1).then(|| format!("{report:?}")))
            })());
        }
        Suite::SeriesIdentity => {
            let (n, cutoff) = (2, 6);
            for lambda in partitions_up_to(4, n) {
                s.check(format!("{lambda} n={n}"), series_identity_case(&lambda, n, cutoff));
            }
        }
    }
    VerifyReport {
        suite,
        bounds: suite.bounds(),
        cases: s.cases,
        passed: s.failures.is_empty(),
        failures: s.failures,
    }
}

/// `K^{C_n}_{omega_2p,0}(t) = K^{A_{n-1}}_{gamma_p,0}(t^2)` with `gamma_p = (2^p, 1^{n-2p})`.
pub fn theorem_ac_case(n: usize, p: usize) -> Result<Option<String>> {
    let omega = Partition::column(2 * p);
    let mut gamma = vec![2; p];
    gamma.extend(std::iter::repeat(1).take(n - 2 * p));
    let gamma = Partition::new(gamma)?;
    let left = genexp_c(&omega, n)?;
    let right = genexp_a(&gamma, n)?.substitute_power(2);
    Ok(equal("type C vs type A at t^2", &left, &right))
}

pub fn extremal_case(lambda: &Partition, n: usize) -> Result<Option<String>> {
    let poly = genexp_c(lambda, n)?;
    let lo = min_power(lambda, n)?;
    let hi = max_power(lambda, n)?;
    if poly.lowest_degree() != Some(lo) {
        return Ok(Some(format!("lowest degree of {poly} is not {lo}")));
    }
    if poly.degree() != Some(hi) {
        return Ok(Some(format!("top degree of {poly} is not {hi}")));
    }
    if 2 * lo < lambda.size() {
        return Ok(Some(format!("minimal power {lo} is below |lambda|/2")));
    }
    let sigma = sigma_min(lambda, n)?;
    if !is_distinguished_star(&sigma, n, true) {
        return Ok(Some(format!("sigma_min {sigma} is not distinguished")));
    }
    if charge_c(&sigma, n) != lo {
        return Ok(Some(format!("sigma_min {sigma} has charge {}", charge_c(&sigma, n))));
    }
    let brute = min_row_charge_bruteforce(lambda, n)?;
    Ok((brute != lo).then(|| format!("row minimum {brute} differs from {lo}")))
}

/// `K^{C_n}_{lambda,0}(t) / prod_i (1 - t^{2i}) = sum_{nu in P^(2)_2n} t^{|nu|/2} c_nu^lambda(sp_2n)`.
pub fn series_identity_case(lambda: &Partition, n: usize, cutoff: u32) -> Result<Option<String>> {
    let evens: Vec<u32> = (1..=n as u32).map(|i| 2 * i).collect();
    let left = TruncatedSeries::new(&genexp_c(lambda, n)?, cutoff).mul(&series_inverse_product(&evens, cutoff)?);
    let mut right = Poly::zero();
    for half in 0..=cutoff {
        for nu in p2_partitions_of(2 * half, 2 * n) {
            if nu.contains(lambda) {
                right.add_term(half, branching_sp(lambda, &nu, n)? as i64);
            }
        }
    }
    let right = TruncatedSeries::new(&right, cutoff);
    Ok((!left.try_eq(&right)?).then(|| mismatch("series", &left.poly(), &right.poly()).unwrap()))
}
