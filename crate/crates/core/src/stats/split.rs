use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Seeded shuffle, then split into `(train, test)`.
///
/// The train side gets `round(train_fraction · n)` rows, clamped to
/// `1..=n − 1` so neither side is empty.
pub fn train_test_split<T: Clone>(rows: &[T], train_fraction: f64, seed: u64) -> Result<(Vec<T>, Vec<T>)> {
    if rows.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "split needs at least 2 rows, got {}",
            rows.len()
        )));
    }
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "train fraction {train_fraction} must lie strictly between 0 and 1"
        )));
    }
    let n = rows.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let n_train = ((train_fraction * n as f64).round() as usize).clamp(1, n - 1);
    let train = order[..n_train].iter().map(|&i| rows[i].clone()).collect();
    let test = order[n_train..].iter().map(|&i| rows[i].clone()).collect();
    Ok((train, test))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_partition() {
        let rows: Vec<u32> = (0..10).collect();
        let (train, test) = train_test_split(&rows, 0.8, 42).unwrap();
        assert_eq!((train.len(), test.len()), (8, 2));
        let mut all: Vec<u32> = train.iter().chain(&test).copied().collect();
        all.sort();
        assert_eq!(all, rows);
    }

    #[test]
    fn deterministic_per_seed() {
        let rows: Vec<u32> = (0..50).collect();
        assert_eq!(
            train_test_split(&rows, 0.8, 7).unwrap(),
            train_test_split(&rows, 0.8, 7).unwrap()
        );
        assert_ne!(
            train_test_split(&rows, 0.8, 7).unwrap(),
            train_test_split(&rows, 0.8, 8).unwrap()
        );
    }

    #[test]
    fn clamps_to_nonempty_sides() {
        let rows: Vec<u32> = (0..5).collect();
        let (train, test) = train_test_split(&rows, 0.9, 1).unwrap();
        assert_eq!((train.len(), test.len()), (4, 1));
        let (train, test) = train_test_split(&rows, 0.01, 1).unwrap();
        assert_eq!((train.len(), test.len()), (1, 4));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(train_test_split(&[1], 0.5, 0).is_err());
        assert!(train_test_split(&[1, 2], 1.0, 0).is_err());
        assert!(train_test_split(&[1, 2], 0.0, 0).is_err());
    }
}
