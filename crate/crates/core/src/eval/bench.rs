use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::compression_distance;
use crate::error::{Error, Result};
use crate::text::SymbolText;

pub const MIN_BENCH_SIZE: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    /// Combined length of source and target.
    pub size_bytes: usize,
    pub median_s: f64,
}

fn random_text(rng: &mut impl Rng, len: usize) -> SymbolText {
    let bytes: Vec<u8> = (0..len).map(|_| b'a' + rng.random_range(0..26u8)).collect();
    SymbolText::from_bytes(&bytes)
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

/// Median wall time of one compression distance between two random texts
/// whose lengths add up to each size.
pub fn bench(sizes: &[usize], repetitions: usize, seed: u64) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() || repetitions == 0 {
        return Err(Error::InvalidConfig("need at least one size and one repetition".into()));
    }
    if let Some(&s) = sizes.iter().find(|&&s| s < MIN_BENCH_SIZE) {
        return Err(Error::InvalidConfig(format!("size {s} is below {MIN_BENCH_SIZE} bytes")));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidConfig("sizes must be strictly ascending".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&size| {
            let s = random_text(&mut rng, size / 2);
            let t = random_text(&mut rng, size - size / 2);
            let mut times = (0..repetitions)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(compression_distance(&s, &t)?);
                    Ok(start.elapsed().as_secs_f64())
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(BenchRow {
                size_bytes: size,
                median_s: median(&mut times),
            })
        })
        .collect()
}

/// `size_bytes,median_s` with a header line.
pub fn write_bench_csv(rows: &[BenchRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["size_bytes", "median_s"])?;
    for r in rows {
        w.write_record([r.size_bytes.to_string(), format!("{:?}", r.median_s)])?;
    }
    w.flush().map_err(|e| Error::io("<bench output>", e))
}
