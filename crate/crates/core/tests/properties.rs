//! Property tests for the invariants of every module.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use timed_plactic::duration::d;
use timed_plactic::random;
use timed_plactic::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn config() -> ProptestConfig {
    let cases = std::env::var("PROPTEST_CASES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(96);
    ProptestConfig::with_cases(cases)
}

fn is_canonical(w: &TimedWord) -> bool {
    w.segments().iter().all(|s| s.duration.is_positive())
        && w.segments().windows(2).all(|p| p[0].letter != p[1].letter)
}

fn add(a: &[Duration], b: &[Duration]) -> Vec<Duration> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A random rational point in `[0, len]` on a grid of `1/60`.
fn cut_point(r: &mut ChaCha8Rng, len: &Duration) -> Duration {
    let t = Duration::from_ratio(r.gen_range(0..=60), 60);
    &t * len
}

/// Random K1 instance `(x, y, z)` with `x y z` a row, `l(y) = l(z)` and
/// `y` ending strictly below the start of `z`.
fn k1_instance(r: &mut ChaCha8Rng, n: usize) -> Option<(TimedWord, TimedWord, TimedWord)> {
    let row = random::row(r, n, 5, 4);
    let segs = row.segments();
    if segs.len() < 2 {
        return None;
    }
    let b = r.gen_range(1..segs.len());
    let boundary: Duration = segs[..b].iter().map(|s| &s.duration).sum();
    let room = boundary.min_of(&(&row.len() - &boundary)).clone();
    let s = &room * &Duration::from_ratio(r.gen_range(1..=4), 4);
    let lo = &boundary - &s;
    let x = row.slice(&Duration::zero(), &lo).unwrap();
    let y = row.slice(&lo, &boundary).unwrap();
    let z = row.slice(&boundary, &(&boundary + &s)).unwrap();
    if x.is_empty() {
        return None;
    }
    Some((x, y, z))
}

proptest! {
    #![proptest_config(config())]

    // ---- timed words ----

    #[test]
    fn words_are_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::word(&mut r, 4, 8, 5);
        let b = random::word(&mut r, 4, 8, 5);
        prop_assert!(is_canonical(&a));
        prop_assert!(is_canonical(&a.concat(&b).unwrap()));
        prop_assert!(is_canonical(&a.sharp()));
        prop_assert!(is_canonical(&a.restrict(2).unwrap()));
    }

    #[test]
    fn concat_is_an_associative_monoid(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (
            random::word(&mut r, 3, 5, 4),
            random::word(&mut r, 3, 5, 4),
            random::word(&mut r, 3, 5, 4),
        );
        let left = a.concat(&b).unwrap().concat(&c).unwrap();
        let right = a.concat(&b.concat(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let e = TimedWord::empty(3);
        prop_assert_eq!(e.concat(&a).unwrap(), a.clone());
        prop_assert_eq!(a.concat(&e).unwrap(), a.clone());
        prop_assert_eq!(a.concat(&b).unwrap().len(), a.len() + b.len());
    }

    #[test]
    fn weight_is_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::word(&mut r, 4, 6, 5);
        let b = random::word(&mut r, 4, 6, 5);
        prop_assert_eq!(a.concat(&b).unwrap().weight(), add(&a.weight(), &b.weight()));
        prop_assert_eq!(a.weight().iter().sum::<Duration>(), a.len());
    }

    #[test]
    fn sharp_is_an_involution(seed in any::<u64>()) {
        let a = random::word(&mut rng(seed), 5, 8, 6);
        prop_assert_eq!(a.sharp().sharp(), a.clone());
        prop_assert_eq!(a.sharp().len(), a.len());
    }

    #[test]
    fn subword_of_split_sets_concatenates(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::word(&mut r, 3, 6, 4);
        prop_assume!(!a.is_empty());
        let len = a.len();
        let mut cuts: Vec<Duration> = (0..4).map(|_| cut_point(&mut r, &len)).collect();
        cuts.sort();
        cuts.dedup();
        prop_assume!(cuts.len() == 4);
        let s1 = IntervalSet::new(vec![(cuts[0].clone(), cuts[1].clone())]).unwrap();
        let s2 = IntervalSet::new(vec![(cuts[2].clone(), cuts[3].clone())]).unwrap();
        let both = IntervalSet::new(vec![
            (cuts[0].clone(), cuts[1].clone()),
            (cuts[2].clone(), cuts[3].clone()),
        ]).unwrap();
        let joined = a.subword(&s1).unwrap().concat(&a.subword(&s2).unwrap()).unwrap();
        prop_assert_eq!(a.subword(&both).unwrap().len(), both.measure());
        prop_assert_eq!(a.subword(&both).unwrap(), joined);
    }

    #[test]
    fn restrict_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::word(&mut r, 5, 8, 4);
        let j = r.gen_range(1..=5);
        let k = r.gen_range(1..=j);
        prop_assert_eq!(a.restrict(j).unwrap().restrict(k).unwrap(), a.restrict(k).unwrap());
    }

    #[test]
    fn row_decomposition_is_maximal(seed in any::<u64>()) {
        let a = random::word(&mut rng(seed), 4, 10, 4);
        let rows = a.row_decomposition();
        prop_assert_eq!(TimedWord::concat_all(4, rows.iter()).unwrap(), a.clone());
        prop_assert!(rows.iter().all(|r| r.is_row() && !r.is_empty()));
        for pair in rows.windows(2) {
            prop_assert!(!pair[0].concat(&pair[1]).unwrap().is_row());
        }
    }

    // ---- tableaux ----

    #[test]
    fn reading_word_round_trip(seed in any::<u64>()) {
        let t = random::tableau(&mut rng(seed), 4, 8, 4);
        prop_assert_eq!(TimedTableau::from_reading_word(&t.reading_word()).unwrap(), t.clone());
        let shape = t.shape();
        prop_assert_eq!(shape.total(), t.reading_word().len());
        prop_assert_eq!(t.weight().iter().sum::<Duration>(), shape.total());
        prop_assert!(shape.parts().windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn restriction_shapes_interleave(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random::tableau(&mut r, 5, 9, 4);
        let k = r.gen_range(1..=5);
        let restricted = TimedTableau::from_reading_word(&t.reading_word().restrict(k).unwrap());
        prop_assert!(restricted.is_ok());
        let restricted = restricted.unwrap();
        prop_assert_eq!(&restricted, &t.restrict(k).unwrap());
        if k > 1 {
            let below = t.restrict(k - 1).unwrap();
            prop_assert!(interleaves(&restricted.shape(), &below.shape()));
        }
    }

    #[test]
    fn gt_patterns_are_a_bijection(seed in any::<u64>()) {
        let t = random::tableau(&mut rng(seed), 4, 8, 4);
        let g = t.to_gt();
        prop_assert!(GTPattern::new(g.rows().to_vec()).is_ok());
        prop_assert_eq!(g.shape(), t.shape());
        prop_assert_eq!(TimedTableau::from_gt(&g).unwrap(), t.clone());
        prop_assert_eq!(TimedTableau::from_gt(&g).unwrap().to_gt(), g);
    }

    // ---- insertion ----

    #[test]
    fn row_insertion_in_stages(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = random::row(&mut r, 4, 5, 4);
        let v = random::row(&mut r, 4, 5, 4);
        let cut = cut_point(&mut r, &v.len());
        let (v1, v2) = v.split_at(&cut).unwrap();
        let (b1, u1) = rins(&u, &v1).unwrap();
        let (b2, u2) = rins(&u1, &v2).unwrap();
        let (b, u_new) = rins(&u, &v).unwrap();
        prop_assert_eq!(b1.concat(&b2).unwrap(), b.clone());
        prop_assert_eq!(u2, u_new.clone());
        prop_assert!(b.is_row() && u_new.is_row());
        prop_assert_eq!(b.len() + u_new.len(), u.len() + v.len());
        prop_assert_eq!(add(&b.weight(), &u_new.weight()), add(&u.weight(), &v.weight()));
    }

    #[test]
    fn row_insertion_inverts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = random::row(&mut r, 4, 5, 4);
        let v = random::row(&mut r, 4, 5, 4);
        let (b, u_new) = rins(&u, &v).unwrap();
        prop_assert!(dominates(&u_new, &b).unwrap());
        prop_assert!(u_new.len() >= u.len().max(v.len()));
        let (u_back, v_back) = rins_inverse(&b, &u_new, &u.len()).unwrap();
        prop_assert_eq!(u_back, u);
        prop_assert_eq!(v_back, v);
    }

    #[test]
    fn insertion_keeps_tableaux_and_weights(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random::tableau(&mut r, 4, 8, 4);
        let v = random::row(&mut r, 4, 4, 4);
        let t2 = insert(&t, &v).unwrap();
        prop_assert_eq!(t2.weight(), add(&t.weight(), &v.weight()));
        prop_assert!(interleaves(&t2.shape(), &t.shape()));
        prop_assert_eq!(t2.shape().total(), t.shape().total() + v.len());
        for pair in t2.rows().windows(2) {
            prop_assert!(dominates(&pair[0], &pair[1]).unwrap());
        }
        for i in 0..t.num_rows() {
            if let Some(next) = t2.rows().get(i + 1) {
                prop_assert!(next.len() <= t.rows()[i].len());
            }
        }
    }

    #[test]
    fn pieri_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random::tableau(&mut r, 4, 8, 4);
        let v = random::row(&mut r, 4, 4, 4);
        let t2 = insert(&t, &v).unwrap();
        let (v_back, t_back) = delete(&t2, &t.shape()).unwrap();
        prop_assert_eq!(v_back, v);
        prop_assert_eq!(t_back, t);
    }

    #[test]
    fn deletion_for_any_interleaved_shape(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t2 = random::tableau(&mut r, 4, 8, 4);
        let mu = t2.shape();
        prop_assume!(mu.num_parts() > 0);
        let parts: Vec<Duration> = (0..mu.num_parts())
            .map(|i| {
                let hi = mu.part(i);
                let lo = mu.part(i + 1);
                let frac = Duration::from_ratio(r.gen_range(0..=4), 4);
                &lo + &(&frac * &(&hi - &lo))
            })
            .collect();
        let lam = RealPartition::new(parts).unwrap();
        let (v, t) = delete(&t2, &lam).unwrap();
        prop_assert_eq!(t.shape(), lam);
        prop_assert_eq!(insert(&t, &v).unwrap(), t2);
    }

    #[test]
    fn insertion_tableau_conserves_weight(seed in any::<u64>()) {
        let w = random::word(&mut rng(seed), 4, 9, 4);
        let p = insertion_tableau(&w);
        prop_assert_eq!(p.weight(), w.weight());
        prop_assert_eq!(insertion_tableau(&p.reading_word()), p);
    }

    // ---- Knuth moves ----

    #[test]
    fn traces_replay_and_moves_are_sound(seed in any::<u64>()) {
        let w = random::word(&mut rng(seed), 3, 6, 3);
        let p = insertion_tableau(&w);
        let (t, trace) = normalize_with_trace(&w);
        prop_assert_eq!(&t, &p);
        let mut current = w.clone();
        for mv in &trace {
            prop_assert!(!mv.is_degenerate());
            current = apply_move(&current, mv).unwrap();
            prop_assert_eq!(insertion_tableau(&current), p.clone());
        }
        prop_assert_eq!(current, p.reading_word());
    }

    #[test]
    fn moves_preserve_greene_invariants(seed in any::<u64>()) {
        let w = random::small_word(&mut rng(seed), 3, 10, 2);
        let (_, trace) = normalize_with_trace(&w);
        let before: Vec<Duration> = (1..=3).map(|k| greene_oracle(&w, k, 14).unwrap()).collect();
        let mut current = w.clone();
        for mv in &trace {
            current = apply_move(&current, mv).unwrap();
            let after: Vec<Duration> =
                (1..=3).map(|k| greene_oracle(&current, k, 14).unwrap()).collect();
            prop_assert_eq!(&after, &before);
        }
    }

    #[test]
    fn sharp_turns_k1_into_k2(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = 5;
        let instance = k1_instance(&mut r, n);
        prop_assume!(instance.is_some());
        let (x, y, z) = instance.unwrap();
        let a = random::word(&mut r, n, 3, 3);
        let b = random::word(&mut r, n, 3, 3);
        let before = TimedWord::concat_all(n, [&a, &x, &z, &y, &b]).unwrap();
        let k1 = KnuthMove::new(MoveKind::K1, Direction::Forward, a.len(), x.len(), y.len(), z.len());
        let after = apply_move(&before, &k1).unwrap();
        prop_assert_eq!(&after, &TimedWord::concat_all(n, [&a, &z, &x, &y, &b]).unwrap());
        let k2 = KnuthMove::new(MoveKind::K2, Direction::Forward, b.len(), z.len(), y.len(), x.len());
        prop_assert_eq!(apply_move(&before.sharp(), &k2).unwrap(), after.sharp());
    }

    #[test]
    fn equivalence_is_a_congruence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let v = random::word(&mut r, 3, 6, 3);
        let w = insertion_tableau(&v).reading_word();
        prop_assert!(equivalent(&v, &w).unwrap());
        let a = random::word(&mut r, 3, 4, 3);
        let b = random::word(&mut r, 3, 4, 3);
        let av_b = TimedWord::concat_all(3, [&a, &v, &b]).unwrap();
        let aw_b = TimedWord::concat_all(3, [&a, &w, &b]).unwrap();
        prop_assert!(equivalent(&av_b, &aw_b).unwrap());
    }

    #[test]
    fn inequivalent_words_are_separated(seed in any::<u64>()) {
        let mut r = rng(seed);
        let v = random::small_word(&mut r, 3, 6, 2);
        let w = random::small_word(&mut r, 3, 6, 2);
        prop_assume!(!equivalent(&v, &w).unwrap());
        let (pv, pw) = (insertion_tableau(&v), insertion_tableau(&w));
        if pv.shape() != pw.shape() {
            // empty context already separates them
            let separated = (1..=3).any(|k| greene_oracle(&v, k, 14).unwrap() != greene_oracle(&w, k, 14).unwrap());
            prop_assert!(separated);
        } else {
            // sampled contexts: a single appended letter or a prefix
            let mut separated = false;
            'search: for letter in 1..=3 {
                for units in 1..=3u64 {
                    let c = TimedWord::letter(3, letter, Duration::from_ratio(units, 2)).unwrap();
                    for (left, right) in [(&c, &TimedWord::empty(3)), (&TimedWord::empty(3), &c)] {
                        let cv = TimedWord::concat_all(3, [left, &v, right]).unwrap();
                        let cw = TimedWord::concat_all(3, [left, &w, right]).unwrap();
                        if (1..=3).any(|k| greene(&cv, k) != greene(&cw, k)) {
                            separated = true;
                            break 'search;
                        }
                    }
                }
            }
            prop_assert!(separated, "no sampled context separates {} and {}", v, w);
        }
    }

    // ---- Greene invariants ----

    #[test]
    fn greene_matches_oracle(seed in any::<u64>()) {
        let w = random::small_word(&mut rng(seed), 4, 12, 3);
        for k in 1..=3 {
            prop_assert_eq!(greene(&w, k), greene_oracle(&w, k, 14).unwrap());
        }
    }

    #[test]
    fn greene_saturates_and_is_sharp_invariant(seed in any::<u64>()) {
        let w = random::word(&mut rng(seed), 4, 8, 4);
        let rows = insertion_tableau(&w).num_rows();
        let values: Vec<Duration> = (1..=rows + 2).map(|k| greene(&w, k)).collect();
        prop_assert!(values.windows(2).all(|p| p[0] <= p[1]));
        prop_assert!(values[rows.max(1) - 1..].iter().all(|v| *v == w.len()));
        for k in 1..=3 {
            prop_assert_eq!(greene(&w, k), greene(&w.sharp(), k));
        }
    }

    #[test]
    fn greene_is_homogeneous(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random::word(&mut r, 4, 8, 4);
        let c = random::positive_duration(&mut r, 7);
        for k in 1..=3 {
            prop_assert_eq!(greene(&w.scale(&c), k), &c * &greene(&w, k));
        }
    }

    #[test]
    fn oracle_attains_row_sums_on_tableaux(seed in any::<u64>()) {
        let w = random::small_word(&mut rng(seed), 3, 12, 2);
        let t = insertion_tableau(&w);
        for k in 1..=3 {
            prop_assert_eq!(greene_oracle(&t.reading_word(), k, 14).unwrap(), t.shape().partial_sum(k));
        }
    }

    // ---- RSK ----

    #[test]
    fn rsk_algorithms_agree_and_invert(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, n) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let a = random::matrix(&mut r, m, n, 5, 0.3);
        let pair = rsk(&a);
        prop_assert_eq!(&rsk_recording(&a), &pair);
        prop_assert_eq!(&rsk_shadows(&a), &pair);
        prop_assert_eq!(pair.p.shape(), pair.q.shape());
        prop_assert_eq!(pair.p.weight(), a.col_sums());
        prop_assert_eq!(pair.q.weight(), a.row_sums());
        prop_assert_eq!(rsk_inverse(&pair.p, &pair.q).unwrap(), a.clone());
        let swapped = rsk(&a.transpose());
        prop_assert_eq!(swapped.p, pair.q);
        prop_assert_eq!(swapped.q, pair.p);
    }

    #[test]
    fn rsk_is_homogeneous(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, 3, 3, 4, 0.3);
        let c = random::positive_duration(&mut r, 9);
        let pair = rsk(&a);
        let scaled = rsk(&a.scale(&c));
        let scale_t = |t: &TimedTableau| {
            TimedTableau::from_rows(t.alphabet(), t.rows().iter().map(|r| r.scale(&c)).collect()).unwrap()
        };
        prop_assert_eq!(scaled.p, scale_t(&pair.p));
        prop_assert_eq!(scaled.q, scale_t(&pair.q));
    }

    #[test]
    fn integer_matrices_give_integer_tableaux(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random::integer_matrix(&mut r, 3, 4, 3);
        let pair = rsk(&a);
        for t in [&pair.p, &pair.q] {
            prop_assert!(t.rows().iter().flat_map(|r| r.segments()).all(|s| s.duration.is_integer()));
            prop_assert!(t.to_gt().rows().iter().flatten().all(Duration::is_integer));
        }
    }
}

#[test]
fn gt_partial_sums_match_chain_oracle_on_a_grid() {
    let mut r = rng(7);
    for _ in 0..40 {
        let a = random::integer_matrix(&mut r, 3, 3, 1);
        for j in 1..=3 {
            for k in 1..=3 {
                let (lhs, rhs) = gt_partial_sum_check(&a, j, k, 14).unwrap();
                assert_eq!(lhs, rhs, "{:?} j={} k={}", a, j, k);
                let (lhs, rhs) = gt_partial_sum_check_rows(&a, j, k, 14).unwrap();
                assert_eq!(lhs, rhs, "{:?} rows i={} k={}", a, j, k);
            }
        }
    }
    let half =
        NonNegMatrix::from_rows(vec![vec![d("0.5"), d("0")], vec![d("0.5"), d("0.5")]]).unwrap();
    assert_eq!(
        gt_partial_sum_check(&half, 2, 1, 14).unwrap(),
        (d("1.5"), d("1.5"))
    );
}
