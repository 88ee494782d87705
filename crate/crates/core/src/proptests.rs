//! Randomized checks of the main invariants.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bijection::{b0_forward, b0_inverse, decompose, recompose, ParticleConfig};
use crate::jdt::{rectify, rectify_with_rng, slide_cells, slide_into};
use crate::plinth::{agrees, order_of, plinth_of, plinth_volume};
use crate::qseries::{series_mul, QSeries};
use crate::schutzenberger::{delta, evacuate, rs_insert, skew_evacuate, Permutation};
use crate::shape::enumerate_skew_shapes;
use crate::tableau::random_syt;
use crate::{ReadingPartition, SkewShape, StandardTableau, Tableau};

fn shapes() -> Vec<SkewShape> {
    enumerate_skew_shapes(9, 5, 5).into_iter().filter(|s| s.size() >= 2).collect()
}

fn skew_syt() -> impl Strategy<Value = StandardTableau> {
    let all = shapes();
    (0..all.len(), any::<u64>()).prop_map(move |(i, seed)| {
        random_syt(&all[i], &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

fn straight_syt() -> impl Strategy<Value = StandardTableau> {
    skew_syt().prop_map(|q| rectify(&q))
}

fn reading_partition(n: usize) -> impl Strategy<Value = ReadingPartition> {
    prop::collection::vec(0u64..6, n).prop_map(|mut v| {
        v.sort_unstable();
        ReadingPartition::new(v).unwrap()
    })
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (1usize..=9).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn series(trunc: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i128..20, trunc + 1).prop_map(move |c| QSeries::from_coeffs(c, trunc))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn plinth_volume_is_maj_of_skew_evacuation(q in skew_syt()) {
        prop_assert_eq!(plinth_volume(&q), skew_evacuate(&q).unwrap().maj());
        prop_assert_eq!(plinth_of(&q).volume(), plinth_volume(&q));
    }

    #[test]
    fn plinth_agrees_and_orders_back(q in skew_syt()) {
        let p = plinth_of(&q);
        prop_assert!(p.is_ssyt());
        prop_assert!(agrees(&p, &q).unwrap());
        prop_assert_eq!(order_of(&p).unwrap(), q);
    }

    #[test]
    fn recompose_then_decompose((q, y) in skew_syt().prop_flat_map(|q| {
        let n = q.size();
        (Just(q), reading_partition(n))
    })) {
        let t = recompose(&q, &y).unwrap();
        prop_assert!(t.is_ssyt());
        prop_assert_eq!(t.volume(), plinth_volume(&q) + y.sum());
        let d = decompose(&t).unwrap();
        prop_assert_eq!(d.witness, q);
        prop_assert_eq!(d.diagram, y);
    }

    #[test]
    fn b0_round_trip(xi in prop::collection::vec(0u64..10, 0..8)) {
        let c = ParticleConfig { counts: xi };
        let y = b0_forward(&c);
        let weighted: u64 = c.counts.iter().enumerate().map(|(k, &x)| (k as u64 + 1) * x).sum();
        prop_assert_eq!(y.sum(), weighted);
        prop_assert_eq!(b0_inverse(&y), c);
    }

    #[test]
    fn evacuation_is_an_involution(q in straight_syt()) {
        let s = evacuate(&q).unwrap();
        prop_assert_eq!(s.shape(), q.shape());
        prop_assert_eq!(evacuate(&s).unwrap(), q.clone());
        let n = q.size() as u64;
        prop_assert_eq!(q.maj() + s.maj(), n * q.descent_set().len() as u64);
    }

    #[test]
    fn skew_evacuation_is_an_involution(q in skew_syt()) {
        let s = skew_evacuate(&q).unwrap();
        prop_assert_eq!(s.shape(), q.shape());
        prop_assert_eq!(skew_evacuate(&s).unwrap(), q);
    }

    #[test]
    fn slides_keep_descents(q in skew_syt()) {
        for (c, dir) in slide_cells(&q) {
            let r = slide_into(&q, c, dir).unwrap();
            prop_assert_eq!(r.descent_set(), q.descent_set());
        }
    }

    #[test]
    fn rectification_is_order_independent(q in skew_syt(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(rectify_with_rng(&q, &mut rng), rectify(&q));
    }

    #[test]
    fn delta_is_an_involution(q in skew_syt()) {
        let inner = SkewShape::straight(q.shape().canonical().inner().clone());
        let p = StandardTableau::row_order(inner);
        let (a, b) = delta(&p, &q).unwrap();
        let (p2, q2) = delta(&a, &b).unwrap();
        prop_assert_eq!(p2, p);
        prop_assert!(q2.shape().same_cells(q.shape()));
        prop_assert_eq!(q2.positions(), q.positions());
    }

    #[test]
    fn rs_descents_match(w in permutation()) {
        let r = rs_insert(&w);
        prop_assert_eq!(r.recording.descent_set(), w.descent_set());
        prop_assert_eq!(r.insertion.shape(), r.recording.shape());
    }

    #[test]
    fn series_product_commutes_and_associates(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(series_mul(&a, &b).unwrap(), series_mul(&b, &a).unwrap());
        let left = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
        let right = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tableau_text_round_trip(q in skew_syt()) {
        let text = q.to_string();
        let back: StandardTableau = text.parse().unwrap();
        prop_assert!(back.shape().same_cells(q.shape()));
        prop_assert_eq!(back.positions(), q.positions());
        let t: Tableau = plinth_of(&q);
        let again = Tableau::parse_for_shape(t.shape().clone(), &t.compact()).unwrap();
        prop_assert_eq!(again, t);
    }
}
