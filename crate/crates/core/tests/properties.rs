//! Randomized structural properties complementing the exhaustive sweeps:
//! these push into larger alphabets and letter counts than full enumeration
//! can reach.

use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use minimaj::{
    from_tableaux, gaussian_binomial, maj_to_minimaj, minimaj_to_maj, to_tableaux,
    OrderedMultisetPartition, TPolynomial,
};

/// Random partition with up to five blocks of up to four distinct letters,
/// letters as large as twelve so the comma-separated text form is exercised.
fn partitions() -> impl Strategy<Value = OrderedMultisetPartition> {
    vec(btree_set(1u32..=12, 1..=4), 1..=5).prop_map(|blocks| {
        OrderedMultisetPartition::from_blocks(
            blocks.into_iter().map(|b| b.into_iter().collect()).collect(),
        )
        .expect("nonempty blocks of distinct letters are valid")
    })
}

fn small_polynomials() -> impl Strategy<Value = TPolynomial> {
    vec(-6i64..=6, 0..=5)
        .prop_map(|cs| TPolynomial::from_coeffs(cs.into_iter().map(Into::into).collect()))
}

proptest! {
    #[test]
    fn text_round_trips(p in partitions()) {
        let text = p.to_string();
        let back: OrderedMultisetPartition = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trips(p in partitions()) {
        let json = serde_json::to_string(&p).unwrap();
        let back: OrderedMultisetPartition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn minimaj_matches_minimum_over_orderings(p in partitions()) {
        prop_assert_eq!(p.minimaj(), p.minimaj_brute_force());
    }

    #[test]
    fn tableau_map_round_trips(p in partitions()) {
        let (key, tuple) = to_tableaux(&p);
        prop_assert_eq!(key.minimaj(), p.minimaj());
        prop_assert_eq!(tuple.weight(12).unwrap(), p.weight(12).unwrap());
        prop_assert_eq!(from_tableaux(&tuple).unwrap(), p);
    }

    #[test]
    fn statistic_exchange_swaps_statistics(p in partitions()) {
        let image = minimaj_to_maj(&p);
        prop_assert_eq!(image.major_index(), p.minimaj());
        prop_assert_eq!(image.weight(12).unwrap(), p.weight(12).unwrap());
        prop_assert_eq!(maj_to_minimaj(&image), p);
    }

    #[test]
    fn gaussian_binomials_are_symmetric((m, p) in (0usize..=8).prop_flat_map(|m| (Just(m), 0..=m))) {
        prop_assert_eq!(gaussian_binomial(m, p), gaussian_binomial(m, m - p));
    }

    #[test]
    fn polynomial_ring_laws(
        a in small_polynomials(),
        b in small_polynomials(),
        c in small_polynomials(),
    ) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            let product = &a * &b;
            prop_assert_eq!(product.divide_exact(&b), Some(a));
        }
    }
}
