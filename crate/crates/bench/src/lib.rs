//! Deterministic input builders shared by the benchmarks.

use num_bigint::BigInt;
use seifert_core::numtheory::IntMatrix;
use seifert_core::SeifertInvariants;

/// SplitMix64; fixed seeds keep benchmark inputs reproducible.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> IntMatrix {
    let mut rng = SplitMix64(seed);
    let mut m = IntMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = BigInt::from((rng.next_u64() % 199) as i64 - 99);
        }
    }
    m
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A spread of normalized tuples across geometries and cone counts.
pub fn sample_tuples() -> Vec<SeifertInvariants> {
    let mut out = Vec::new();
    for n in 3..=6usize {
        for b in [-2i64, -1, 0] {
            let pairs: Vec<(i64, i64)> = (0..n as i64)
                .map(|k| {
                    let o = 5 + 2 * k;
                    let a = (1..o).find(|&a| gcd(a, o) == 1 && a * 3 > o).unwrap_or(1);
                    (a, o)
                })
                .collect();
            out.push(
                SeifertInvariants::new(0, b, pairs)
                    .expect("valid pairs")
                    .normalize(),
            );
        }
    }
    out
}
