//! Seeded curve generators. Coefficients are uniform in `[−20, 20]`; the
//! targeted generators force additive reduction at a given prime or a
//! given degree of the 2-division field.

use ecparity::curves::{from_ints, two_torsion_data};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct CurveGenerator {
    rng: ChaCha8Rng,
}

impl CurveGenerator {
    pub fn new(seed: u64) -> Self {
        CurveGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.rng.next_u64() % (hi - lo + 1) as u64) as i64
    }

    pub fn pick<T: Copy>(&mut self, xs: &[T]) -> T {
        xs[(self.rng.next_u64() % xs.len() as u64) as usize]
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Nonsingular `[a1, a2, a3, a4, a6]`.
    pub fn uniform(&mut self) -> [i64; 5] {
        loop {
            let a = core::array::from_fn(|_| self.int(-20, 20));
            if from_ints(a).is_ok() {
                return a;
            }
        }
    }

    /// Every coefficient divisible by `p` and `p² ∤ a6`, so the model
    /// reduces to `y² = x³` and Tate's algorithm stops at type II.
    pub fn additive_at(&mut self, p: i64) -> [i64; 5] {
        loop {
            let mut a: [i64; 5] = core::array::from_fn(|_| p * self.int(-6, 6));
            let u = self.int(-6, 6);
            if u % p == 0 {
                continue;
            }
            a[4] = p * u;
            if from_ints(a).is_ok() {
                return a;
            }
        }
    }

    /// A short model whose 2-division field has degree `d`, twisted by a
    /// random `t ∈ {±1, ±2, ±3, 6}`.
    pub fn with_d(&mut self, d: usize) -> [i64; 5] {
        loop {
            let (a, b, c) = match d {
                1 => {
                    let (e1, e2, e3) = (self.int(-6, 6), self.int(-6, 6), self.int(-6, 6));
                    (-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -e1 * e2 * e3)
                }
                2 => {
                    let (e, s, t) = (self.int(-6, 6), self.int(-6, 6), self.int(-6, 6));
                    (s - e, t - e * s, -e * t)
                }
                3 => {
                    // x³ − nx² − (n + 3)x − 1 has square discriminant.
                    let n = self.int(-4, 4);
                    (-n, -(n + 3), -1)
                }
                _ => (self.int(-8, 8), self.int(-8, 8), self.int(-8, 8)),
            };
            let t = self.pick(&[1, 1, -1, 2, 3, -2, 6, -3]);
            let a = [0, a * t, 0, b * t * t, c * t * t * t];
            let Ok(e) = from_ints(a) else { continue };
            if two_torsion_data(&e).map(|t| t.d) == Ok(d) {
                return a;
            }
        }
    }
}
