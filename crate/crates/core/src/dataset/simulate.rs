//! Seeded generator of edit pairs with a known amount of editing work.
//!
//! Every record starts from a random lowercase text and applies a random
//! number of scripted operations drawn from the character/block operation
//! family: single-character edits, block moves, block duplications and block
//! deletions. The simulated effort is `α · (number of operations)` plus
//! Gaussian noise, with `α = 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::record::{EditRecord, Scenario};
use crate::error::{Error, Result};

/// Operation mix in percent: character edits, block moves, duplications, deletions.
pub const OP_MIX: [u32; 4] = [40, 30, 15, 15];

/// Seconds of simulated effort per scripted operation.
const SECONDS_PER_OP: f64 = 1.0;
const MAX_OPS: usize = 20;
const SOURCE_WORDS: std::ops::RangeInclusive<usize> = 60..=120;
const BLOCK_LEN: std::ops::RangeInclusive<usize> = 8..=40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    CharEdit,
    Move,
    Duplicate,
    Delete,
}

fn pick_op(rng: &mut impl Rng) -> Op {
    let roll = rng.random_range(0..100);
    let [a, b, c, _] = OP_MIX;
    if roll < a {
        Op::CharEdit
    } else if roll < a + b {
        Op::Move
    } else if roll < a + b + c {
        Op::Duplicate
    } else {
        Op::Delete
    }
}

fn random_letter(rng: &mut impl Rng) -> u8 {
    b'a' + rng.random_range(0..26u8)
}

fn random_text(rng: &mut impl Rng) -> Vec<u8> {
    let words = rng.random_range(SOURCE_WORDS);
    let mut out = Vec::new();
    for w in 0..words {
        if w > 0 {
            out.push(b' ');
        }
        for _ in 0..rng.random_range(2..=9) {
            out.push(random_letter(rng));
        }
    }
    out
}

/// Random `(start, len)` block inside a text of length `n`, `len` drawn from
/// `BLOCK_LEN` and shortened to fit.
fn random_block(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let len = rng.random_range(BLOCK_LEN).min(n / 2).max(1);
    let start = rng.random_range(0..=n - len);
    (start, len)
}

fn apply(op: Op, text: &mut Vec<u8>, rng: &mut impl Rng) {
    let n = text.len();
    match op {
        Op::CharEdit => {
            let kind = rng.random_range(0..3);
            match kind {
                0 if n > 0 => {
                    let at = rng.random_range(0..n);
                    let old = text[at];
                    let mut c = random_letter(rng);
                    while c == old {
                        c = random_letter(rng);
                    }
                    text[at] = c;
                }
                1 if n > 1 => {
                    let at = rng.random_range(0..n);
                    text.remove(at);
                }
                _ => {
                    let at = rng.random_range(0..=n);
                    let c = random_letter(rng);
                    text.insert(at, c);
                }
            }
        }
        Op::Move => {
            let (start, len) = random_block(rng, n);
            let block: Vec<u8> = text.drain(start..start + len).collect();
            let mut dest = rng.random_range(0..=text.len());
            if dest == start {
                dest = (dest + len) % (text.len() + 1);
            }
            text.splice(dest..dest, block);
        }
        Op::Duplicate => {
            let (start, len) = random_block(rng, n);
            let block = text[start..start + len].to_vec();
            let dest = rng.random_range(0..=n);
            text.splice(dest..dest, block);
        }
        Op::Delete => {
            let (start, len) = random_block(rng, n);
            text.drain(start..start + len);
        }
    }
}

/// Generates `n` records with `edit_time_s = ops + N(0, noise_sigma)`, clamped at 0.
///
/// Fully determined by `(n, noise_sigma, seed)`. Records carry the
/// `human` scenario label since they stand in for human post-edits.
pub fn simulate_effort_dataset(n: usize, noise_sigma: f64, seed: u64) -> Result<Vec<EditRecord>> {
    if n < 10 {
        return Err(Error::InvalidConfig(format!("need at least 10 records, got {n}")));
    }
    if !(noise_sigma >= 0.0 && noise_sigma.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "noise sigma must be a non-negative number, got {noise_sigma}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, noise_sigma).expect("validated sigma");
    let width = n.to_string().len();
    (0..n)
        .map(|i| {
            let source = random_text(&mut rng);
            let ops = rng.random_range(1..=MAX_OPS);
            let mut target = source.clone();
            for _ in 0..ops {
                let op = pick_op(&mut rng);
                apply(op, &mut target, &mut rng);
            }
            let jitter = if noise_sigma > 0.0 {
                noise.sample(&mut rng)
            } else {
                0.0
            };
            let mut rec = EditRecord::new(
                format!("sim-{i:0width$}"),
                String::from_utf8(source).expect("ascii"),
                String::from_utf8(target).expect("ascii"),
            );
            rec.edit_time_s = Some((SECONDS_PER_OP * ops as f64 + jitter).max(0.0));
            rec.scenario = Some(Scenario::Human);
            Ok(rec)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = simulate_effort_dataset(20, 0.5, 9).unwrap();
        let b = simulate_effort_dataset(20, 0.5, 9).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, simulate_effort_dataset(20, 0.5, 10).unwrap());
    }

    #[test]
    fn noiseless_time_is_integral_op_count() {
        for r in simulate_effort_dataset(50, 0.0, 1).unwrap() {
            let t = r.edit_time_s.unwrap();
            assert_eq!(t.fract(), 0.0);
            assert!((1.0..=MAX_OPS as f64).contains(&t));
        }
    }

    #[test]
    fn ids_are_unique_and_sorted() {
        let recs = simulate_effort_dataset(120, 0.1, 3).unwrap();
        let ids: Vec<&str> = recs.iter().map(|r| r.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn parameter_validation() {
        assert!(simulate_effort_dataset(9, 0.0, 0).is_err());
        assert!(simulate_effort_dataset(10, -1.0, 0).is_err());
        assert!(simulate_effort_dataset(10, f64::NAN, 0).is_err());
    }

    #[test]
    fn op_mix_sums_to_hundred() {
        assert_eq!(OP_MIX.iter().sum::<u32>(), 100);
    }
}
