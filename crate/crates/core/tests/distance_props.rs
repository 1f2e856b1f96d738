mod common;

use lzdist::distance::{
    batch_distance, compression_distance, compression_distance_with_context, pair_distance, DistanceMode,
    DistancePair,
};
use lzdist::lz77::lz_phrase_count;
use lzdist::text::SymbolText;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::random_string;

fn d(s: &str, t: &str) -> usize {
    compression_distance(&s.into(), &t.into()).unwrap().value
}

#[test]
fn self_and_empty_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let len = rng.random_range(1..300);
        let alphabet = [2, 4, 26][rng.random_range(0..3)];
        let s = random_string(&mut rng, len, alphabet);
        assert_eq!(d(&s, &s), 1, "{s}");
        assert_eq!(d(&s, ""), 0);
        assert_eq!(d("", &s), lz_phrase_count(&s.as_str().into()));
    }
}

#[test]
fn context_never_hurts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let gen = |rng: &mut ChaCha8Rng| {
            let len = rng.random_range(0..80);
            random_string(rng, len, 4)
        };
        let (k, s, t) = (gen(&mut rng), gen(&mut rng), gen(&mut rng));
        let plain = d(&s, &t);
        let ctx = compression_distance_with_context(&k.as_str().into(), &s.as_str().into(), &t.as_str().into())
            .unwrap()
            .value;
        assert!(ctx <= plain, "K={k} S={s} T={t}: {ctx} > {plain}");
    }
}

#[test]
fn swapping_halves_costs_at_most_two_phrases() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [64, 100, 257, 1000, 4096, 20_000] {
        let s = random_string(&mut rng, n, 26);
        let (a, b) = s.split_at(n / 2);
        assert!(d(&s, &format!("{b}{a}")) <= 2, "n={n}");
    }
}

#[test]
fn batch_matches_sequential_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pairs: Vec<DistancePair> = (0..100)
        .map(|_| {
            let (ls, lt, lk) = (rng.random_range(0..60), rng.random_range(0..60), rng.random_range(0..60));
            DistancePair::new(random_string(&mut rng, ls, 3).as_str(), random_string(&mut rng, lt, 3).as_str())
                .with_context(random_string(&mut rng, lk, 3).as_str())
        })
        .collect();
    for mode in [DistanceMode::Plain, DistanceMode::WithContext] {
        let batch: Vec<_> = batch_distance(&pairs, mode).into_iter().map(Result::unwrap).collect();
        let seq: Vec<_> = pairs.iter().map(|p| pair_distance(p, mode).unwrap()).collect();
        assert_eq!(batch, seq);
    }
}

#[test]
fn batch_is_stable_across_thread_counts() {
    let pairs: Vec<DistancePair> = (0..40)
        .map(|i| DistancePair::new("abcabcabd".repeat(i % 7).as_str(), "abdabc".repeat(i % 5).as_str()))
        .collect();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| batch_distance(&pairs, DistanceMode::Plain))
    };
    let one: Vec<_> = run(1).into_iter().map(Result::unwrap).collect();
    let many: Vec<_> = run(4).into_iter().map(Result::unwrap).collect();
    assert_eq!(one, many);
}

#[test]
fn non_ascii_is_byte_level() {
    // "é" is two bytes, neither seen in "e".
    assert_eq!(d("e", "é"), 2);
    assert_eq!(d("café", "café"), 1);
    let nfd = SymbolText::from("cafe\u{301}");
    assert_ne!(compression_distance(&"café".into(), &nfd).unwrap().value, 1);
}

proptest! {
    #[test]
    fn distance_is_bounded_by_target_complexity(s in "[ab]{0,40}", t in "[ab]{0,40}") {
        let v = d(&s, &t);
        prop_assert!(v <= lz_phrase_count(&t.as_str().into()));
        prop_assert_eq!(v == 0, t.is_empty());
    }

    #[test]
    fn result_parts_are_consistent(s in ".{0,30}", t in ".{0,30}") {
        let r = compression_distance(&s.as_str().into(), &t.as_str().into()).unwrap();
        prop_assert_eq!(r.value, r.lz_concat - r.lz_source);
        prop_assert_eq!(r.lz_source, lz_phrase_count(&s.as_str().into()) + 1);
    }
}
