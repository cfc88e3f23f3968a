use genexp::crystal::{enumerate_ssyt, Tableau};
use genexp::genexp::{
    distinguished_to_king, enumerate_king_zero, genexp_a, genexp_a_multi, genexp_c, genexp_c_multi,
    king_to_distinguished, zero_weight_a,
};
use genexp::lr::{companion, enumerate_lr, inverse_companion};
use genexp::oracle::{oracle_a, oracle_c};
use genexp::partition::Partition;
use genexp::poly::{Poly, TruncatedSeries};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..12, -5i64..=5), 0..6).prop_map(Poly::from_terms)
}

/// A shape, an alphabet size and one semistandard tableau of that shape.
fn tableau() -> impl Strategy<Value = Tableau> {
    (1usize..=4, partition(3, 4), any::<prop::sample::Index>()).prop_filter_map("shape too tall", |(m, shape, idx)| {
        if shape.len() > m {
            return None;
        }
        let all: Vec<Tableau> = enumerate_ssyt(&shape, m).ok()?.collect();
        Some(all[idx.index(all.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(lambda in partition(6, 9)) {
        let back: Partition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(&back, &lambda);
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn poly_round_trips(a in poly()) {
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a - &a).is_zero(), true);
        prop_assert_eq!((&a * &b).substitute_power(2), &a.substitute_power(2) * &b.substitute_power(2));
        prop_assert_eq!((&a * &b).eval(2), a.eval(2) * b.eval(2));
    }

    #[test]
    fn truncated_product_is_truncation_of_product(a in poly(), b in poly(), cutoff in 0u32..10) {
        let left = TruncatedSeries::new(&a, cutoff).mul(&TruncatedSeries::new(&b, cutoff));
        prop_assert_eq!(left, TruncatedSeries::new(&(&a * &b), cutoff));
    }

    #[test]
    fn raising_undoes_lowering(t in tableau()) {
        let m = t.alphabet();
        let ep = t.eps_phi();
        for i in 1..m {
            let mut u = t.clone();
            prop_assert_eq!(u.lower(i), ep.phi_at(i) > 0);
            if ep.phi_at(i) > 0 {
                prop_assert!(u.is_semistandard());
                let w = (t.content(), u.content());
                prop_assert_eq!(w.0[i - 1], w.1[i - 1] + 1);
                prop_assert_eq!(w.0[i] + 1, w.1[i]);
                prop_assert!(u.raise(i));
                prop_assert_eq!(&u, &t);
            }
            let mut v = t.clone();
            prop_assert_eq!(v.raise(i), ep.eps_at(i) > 0);
        }
    }

    #[test]
    fn lusztig_swaps_extremes(t in tableau()) {
        let s = t.lusztig();
        prop_assert_eq!(s.lusztig(), t.clone());
        prop_assert_eq!(s.shape(), t.shape());
        let (mut c, ct) = (s.content(), t.content());
        c.reverse();
        prop_assert_eq!(c, ct);
        prop_assert_eq!(s.is_highest(), t == Tableau::lowest(t.shape(), t.alphabet()).unwrap());
    }

    #[test]
    fn lr_companion_round_trip(nu in partition(3, 4), mu in partition(2, 3)) {
        prop_assume!(nu.contains(&mu));
        for tau in enumerate_lr(&nu, &mu, None, 3) {
            let c = companion(&tau, 3).unwrap();
            prop_assert_eq!(inverse_companion(&c, &mu).unwrap(), tau);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn type_c_counts_and_specialization(lambda in partition(3, 4), n in 1usize..=3) {
        prop_assume!(lambda.len() <= n && lambda.size() % 2 == 0);
        let poly = genexp_c(&lambda, n).unwrap();
        let king = enumerate_king_zero(&lambda, n).unwrap();
        prop_assert_eq!(poly.eval_one(), king.len() as i64);
        prop_assert!(poly.terms().all(|(_, c)| c > 0));
        prop_assert_eq!(genexp_c_multi(&lambda, n).unwrap().specialize(), poly.clone());
        prop_assert_eq!(oracle_c(&lambda, n).unwrap(), poly);
        for k in &king {
            let b = king_to_distinguished(k).unwrap();
            prop_assert_eq!(&distinguished_to_king(&b).unwrap(), k);
        }
    }

    #[test]
    fn type_a_counts_and_specialization(lambda in partition(4, 4), n in 1usize..=4) {
        prop_assume!(lambda.len() <= n && lambda.size() as usize % n == 0);
        let poly = genexp_a(&lambda, n).unwrap();
        prop_assert_eq!(poly.eval_one(), zero_weight_a(&lambda, n).unwrap().len() as i64);
        prop_assert_eq!(genexp_a_multi(&lambda, n).unwrap().specialize(), poly.clone());
        prop_assert_eq!(oracle_a(&lambda, n).unwrap(), poly);
    }
}
