//! Branching coefficients `c_nu^lambda(sp_2n)` from `gl_2n` to `sp_2n`,
//! counted by Sundaram-LR tableaux and by Kwon's flagged LR condition.
//!
//! Sundaram's row bound is read as: an odd letter `2i+1` may only occur in
//! rows `1..=n+i` (rows numbered from the top). Under this reading exactly one
//! of the three LR tableaux of shape `(5,4,3,3,3,2)/(2,1,1)` with weight in
//! `P^(1,1)_6` is admissible, matching the known coefficient 1.

use serde::Serialize;

use crate::crystal::{enumerate_with_content, Tableau};
use crate::error::{Error, Result};
use crate::genexp::satisfies_flag;
use crate::lr::{companion, enumerate_lr, enumerate_lr_restricted, r_matrix_highest, SkewTableau};
use crate::partition::{p11_partitions_of, Partition};

/// Human-readable statement of the row bound in force.
pub const SUNDARAM_ROW_BOUND: &str = "odd letter 2i+1 only in rows r <= n+i (rows counted from the top)";

/// Whether the odd letter `x` may sit in the 0-based row `r`.
pub fn sundaram_allows(x: u8, r: usize, n: usize) -> bool {
    x % 2 == 0 || r < n + (x as usize - 1) / 2
}

fn check_ranks(lambda: &Partition, nu: &Partition, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("rank must be positive".into()));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            shape: lambda.to_string(),
            limit: n,
        });
    }
    if nu.len() > 2 * n {
        return Err(Error::TooManyParts {
            shape: nu.to_string(),
            limit: 2 * n,
        });
    }
    Ok(())
}

/// The weights `delta` in `P^(1,1)_2n` that can occur in shape `nu / lambda`.
fn deltas(lambda: &Partition, nu: &Partition, n: usize) -> Vec<Partition> {
    if !nu.contains(lambda) {
        return Vec::new();
    }
    p11_partitions_of(nu.size() - lambda.size(), 2 * n)
        .into_iter()
        .filter(|d| nu.contains(d))
        .collect()
}

/// `c_{lambda,delta}^nu` counted on the crystal side: tableaux `b` of shape
/// `lambda` and content `nu - delta` with `eps(b) <= delta`.
pub fn lr_coefficient(lambda: &Partition, delta: &Partition, nu: &Partition) -> Result<u64> {
    if !nu.contains(delta) || nu.size() != lambda.size() + delta.size() {
        return Ok(0);
    }
    let m = nu.len().max(1);
    let content: Vec<u32> = (0..m).map(|i| nu.part(i) - delta.part(i)).collect();
    let mut count = 0;
    for b in enumerate_with_content(lambda, &content, m)? {
        if b.lr_membership(delta)? {
            count += 1;
        }
    }
    Ok(count)
}

/// All Sundaram-LR tableaux of shape `nu / lambda`: LR tableaux with entries
/// in `1..=2n`, weight in `P^(1,1)_2n`, and the odd-letter row bound.
pub fn sundaram_tableaux(lambda: &Partition, nu: &Partition, n: usize) -> Result<Vec<SkewTableau>> {
    check_ranks(lambda, nu, n)?;
    let allowed = |x: u8, r: usize| sundaram_allows(x, r, n);
    let mut out = Vec::new();
    for delta in deltas(lambda, nu, n) {
        out.extend(enumerate_lr_restricted(nu, lambda, Some(&delta), 2 * n, &allowed));
    }
    Ok(out)
}

/// Kwon's rule: for each `delta` in `P^(1,1)_2n`, the tableaux `S` in
/// `LR_{lambda',delta'}^{nu'}` whose first row `r_1 <= ... <= r_p` satisfies
/// `r_i > rev_{2i-1}`, with `rev` the reverse of `delta` padded to length `2n`.
pub fn kwon_tableaux(lambda: &Partition, nu: &Partition, n: usize) -> Result<Vec<(Partition, Tableau)>> {
    check_ranks(lambda, nu, n)?;
    let (lc, nc) = (lambda.conjugate(), nu.conjugate());
    let m = nc.len().max(1);
    let mut out = Vec::new();
    for delta in deltas(lambda, nu, n) {
        let dc = delta.conjugate();
        let rev = delta.reversed_padded(2 * n);
        for tau in enumerate_lr(&nc, &dc, Some(&lc), lc.len().max(1)) {
            let s = companion(&tau, m)?;
            let ok = s.row(0).iter().enumerate().all(|(i, &r)| r as u32 > rev[2 * i]);
            if ok {
                out.push((delta.clone(), s));
            }
        }
    }
    Ok(out)
}

/// Tableaux `b` in `LR_{lambda,delta}^nu` (`delta` in `P^(1,1)_2n`) whose
/// evacuation in `B_2n(lambda)` satisfies the flag condition: row `i`
/// entries at least `2i-1`.
pub fn kwon_via_c3_tableaux(lambda: &Partition, nu: &Partition, n: usize) -> Result<Vec<(Partition, Tableau)>> {
    check_ranks(lambda, nu, n)?;
    let mut out = Vec::new();
    for delta in deltas(lambda, nu, n) {
        for tau in enumerate_lr(nu, &delta, Some(lambda), lambda.len().max(1)) {
            let b = companion(&tau, 2 * n)?;
            if satisfies_flag(&b.lusztig()) {
                out.push((delta.clone(), b));
            }
        }
    }
    Ok(out)
}

pub fn kwon_via_c3(lambda: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    Ok(kwon_via_c3_tableaux(lambda, nu, n)?.len() as u64)
}

/// `c_nu^lambda(sp_2n)`, computed by all three rules; disagreement is an error.
pub fn branching_sp(lambda: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    let sundaram = sundaram_tableaux(lambda, nu, n)?.len();
    let kwon = kwon_tableaux(lambda, nu, n)?.len();
    let c3 = kwon_via_c3(lambda, nu, n)? as usize;
    if sundaram != kwon || kwon != c3 {
        return Err(Error::RuleMismatch {
            lambda: lambda.to_string(),
            nu: nu.to_string(),
            rank: n,
            sundaram,
            kwon,
            c3,
        });
    }
    Ok(sundaram as u64)
}

/// The branching coefficient from Sundaram's rule alone.
pub fn branching_sundaram(lambda: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    Ok(sundaram_tableaux(lambda, nu, n)?.len() as u64)
}

/// Adds `kappa` in `P^boxplus_2n` to a Sundaram-LR tableau: `kappa_i` letters
/// `i` are appended to row `i`, giving shape `(nu + kappa) / lambda` and
/// weight `delta + kappa`.
pub fn extend_by_boxplus(tau: &SkewTableau, kappa: &Partition, n: usize) -> Result<SkewTableau> {
    if !kappa.classify().in_boxplus || kappa.len() > 2 * n {
        return Err(Error::Precondition(format!("{kappa} is not in P^boxplus_{}", 2 * n)));
    }
    let outer = tau.outer().add(kappa);
    let rows = (0..outer.len())
        .map(|r| {
            let mut row = tau.rows().get(r).cloned().unwrap_or_default();
            row.extend(std::iter::repeat(r as u8 + 1).take(kappa.part(r) as usize));
            row
        })
        .collect();
    SkewTableau::new(outer, tau.inner().clone(), rows)
}

/// One LR tableau of shape `nu / lambda` pushed through companion, R-matrix
/// and evacuation.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionCase {
    pub tau: SkewTableau,
    pub sundaram: bool,
    pub companion: Tableau,
    pub r_matrix: Tableau,
    pub evacuated: Tableau,
    pub flag: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaRow {
    pub delta: Partition,
    pub sundaram: usize,
    pub kwon: usize,
    pub c3: usize,
    pub cases: Vec<CompositionCase>,
    /// Whether the composition maps the Sundaram tableaux exactly onto the
    /// flagged ones for this `delta`.
    pub bijective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub lambda: Partition,
    pub nu: Partition,
    pub rank: usize,
    pub rows: Vec<DeltaRow>,
    pub total_sundaram: usize,
    pub total_kwon: usize,
    pub total_c3: usize,
    pub counts_agree: bool,
    pub bijective: bool,
}

/// Runs every LR tableau of shape `nu / lambda` with weight in `P^(1,1)_2n`
/// through companion, R-matrix and evacuation, and tabulates which images are
/// flagged against which sources are Sundaram-admissible.
pub fn compare_rules(lambda: &Partition, nu: &Partition, n: usize) -> Result<BranchReport> {
    check_ranks(lambda, nu, n)?;
    let kwon = kwon_tableaux(lambda, nu, n)?;
    let mut rows = Vec::new();
    for delta in deltas(lambda, nu, n) {
        let mut cases = Vec::new();
        for tau in enumerate_lr(nu, lambda, Some(&delta), 2 * n) {
            let sundaram = tau
                .rows()
                .iter()
                .enumerate()
                .all(|(r, row)| row.iter().all(|&x| sundaram_allows(x, r, n)));
            let comp = companion(&tau, 2 * n)?;
            let (_, hat) = r_matrix_highest(lambda, &comp)?;
            let evacuated = hat.lusztig();
            let flag = satisfies_flag(&evacuated);
            cases.push(CompositionCase {
                tau,
                sundaram,
                companion: comp,
                r_matrix: hat,
                evacuated,
                flag,
            });
        }
        let row = DeltaRow {
            sundaram: cases.iter().filter(|c| c.sundaram).count(),
            kwon: kwon.iter().filter(|(d, _)| *d == delta).count(),
            c3: cases.iter().filter(|c| c.flag).count(),
            bijective: cases.iter().all(|c| c.sundaram == c.flag),
            delta,
            cases,
        };
        rows.push(row);
    }
    let total_sundaram = rows.iter().map(|r| r.sundaram).sum();
    let total_kwon = rows.iter().map(|r| r.kwon).sum();
    let total_c3 = rows.iter().map(|r| r.c3).sum();
    Ok(BranchReport {
        lambda: lambda.clone(),
        nu: nu.clone(),
        rank: n,
        bijective: rows.iter().all(|r| r.bijective),
        counts_agree: total_sundaram == total_kwon && total_kwon == total_c3,
        rows,
        total_sundaram,
        total_kwon,
        total_c3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str, m: usize) -> Tableau {
        Tableau::parse(s, m).unwrap()
    }

    #[test]
    fn lr_coefficient_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("3,1"), &p(""), &p("3,1")).unwrap(), 1);
        assert!(lr_coefficient(&p("4,3,1"), &p("3,3,1"), &p("5,4,4,2")).unwrap() >= 1);
        for nu in partitions_up_to(6, 6) {
            for delta in partitions_up_to(nu.size(), 6) {
                for lambda in crate::partition::partitions_of(nu.size().saturating_sub(delta.size())) {
                    assert_eq!(
                        lr_coefficient(&lambda, &delta, &nu).unwrap(),
                        crate::lr::lr_coefficient(&lambda, &delta, &nu),
                        "{lambda} {delta} {nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn worked_branching_instance() {
        let (lambda, nu) = (p("2,1,1"), p("5,4,3,3,3,2"));
        let sund = sundaram_tableaux(&lambda, &nu, 3).unwrap();
        assert_eq!(sund.len(), 1);
        assert_eq!(sund[0].to_string(), "5,4,3,3,3,2|2,1,1|1,1,1/2,2,2/3,3/3,4,4/4,5,5/6,6");
        assert_eq!(kwon_tableaux(&lambda, &nu, 3).unwrap().len(), 1);
        assert_eq!(kwon_via_c3(&lambda, &nu, 3).unwrap(), 1);
        assert_eq!(branching_sp(&lambda, &nu, 3).unwrap(), 1);

        let report = compare_rules(&lambda, &nu, 3).unwrap();
        let cases: Vec<&CompositionCase> = report.rows.iter().flat_map(|r| &r.cases).collect();
        assert_eq!(cases.len(), 3);
        let expected = [
            ("3,3,3,3,2,2", "1,1/2/5", "2,6/5/6", true),
            ("4,4,2,2,2,2", "1,3/4/5", "2,6/3/4", false),
            ("4,4,3,3,1,1", "1,5/5/6", "1,2/2/6", false),
        ];
        for (delta, hat, evac, ok) in expected {
            let row = report.rows.iter().find(|r| r.delta == p(delta)).unwrap();
            assert_eq!(row.cases.len(), 1);
            let c = &row.cases[0];
            assert_eq!(c.r_matrix, t(hat, 6));
            assert_eq!(c.evacuated, t(evac, 6));
            assert_eq!((c.sundaram, c.flag), (ok, ok));
        }
        assert!(report.bijective && report.counts_agree);
    }

    #[test]
    fn trivial_instances() {
        for n in 1..=3 {
            for lambda in partitions_up_to(4, n) {
                assert_eq!(branching_sp(&lambda, &lambda, n).unwrap(), 1);
            }
        }
        assert_eq!(branching_sp(&p("1,1"), &p("1,1"), 2).unwrap(), 1);
        assert!(branching_sp(&p("1,1,1"), &p("1,1,1"), 2).is_err());
        assert_eq!(branching_sp(&p("2"), &p("1"), 2).unwrap(), 0);
    }

    #[test]
    fn rules_agree_on_small_shapes() {
        for n in 1..=3 {
            for nu in partitions_up_to(8, 2 * n) {
                for lambda in partitions_up_to(nu.size(), n).into_iter().filter(|l| nu.contains(l)) {
                    let c = branching_sp(&lambda, &nu, n).unwrap();
                    if nu.len() <= n {
                        let stable: u64 = p11_partitions_of(nu.size() - lambda.size(), 2 * n)
                            .iter()
                            .map(|d| lr_coefficient(&lambda, d, &nu).unwrap())
                            .sum();
                        assert_eq!(c, stable, "{lambda} {nu} {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn boxplus_extension_keeps_admissibility() {
        let n = 2;
        for nu in partitions_up_to(6, 2 * n) {
            for lambda in partitions_up_to(nu.size(), n).into_iter().filter(|l| nu.contains(l)) {
                for tau in sundaram_tableaux(&lambda, &nu, n).unwrap() {
                    for kappa in [p("2,2"), p("4,4"), p("2,2,2,2"), p("4,4,2,2")] {
                        let ext = extend_by_boxplus(&tau, &kappa, n).unwrap();
                        assert!(ext.is_lr());
                        let big = sundaram_tableaux(&lambda, ext.outer(), n).unwrap();
                        assert!(big.contains(&ext), "{tau} + {kappa}");
                        assert_eq!(ext.weight().unwrap(), tau.weight().unwrap_or_default().add(&kappa));
                    }
                }
            }
        }
        assert!(extend_by_boxplus(&SkewTableau::parse("1|1|").unwrap(), &p("2"), 2).is_err());
    }
}
