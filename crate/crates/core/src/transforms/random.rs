use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cubicmap::{CoeffTensor, Matrix2};
use crate::polyalg::{ratio, Rational};

pub const NUM_BOUND: i64 = 9;
pub const DEN_BOUND: i64 = 9;

/// Seed for trial `trial` of a run started with `base`; independent of how
/// trials are scheduled.
pub fn trial_seed(base: u64, trial: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = base ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Bounded random rationals, tensors and matrices.
pub struct TrialRng(ChaCha8Rng);

impl TrialRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.0.gen_range(-NUM_BOUND..=NUM_BOUND);
        let den = self.0.gen_range(1..=DEN_BOUND);
        ratio(num, den)
    }

    pub fn coeff_tensor(&mut self) -> CoeffTensor<Rational> {
        let mut row = || [(); 4].map(|_| self.rational());
        let first = row();
        CoeffTensor::from_independent([first, row()])
    }

    pub fn matrix(&mut self) -> Matrix2<Rational> {
        Matrix2::new(
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
        )
    }

    pub fn invertible_matrix(&mut self) -> Matrix2<Rational> {
        loop {
            let m = self.matrix();
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    /// A rank-one (or zero) matrix: one row is a multiple of the other.
    pub fn singular_matrix(&mut self) -> Matrix2<Rational> {
        let (a, b) = (self.rational(), self.rational());
        let c = self.rational();
        let (ca, cb) = (c.clone() * &a, c * &b);
        if self.0.gen_bool(0.5) {
            Matrix2::new(a, b, ca, cb)
        } else {
            Matrix2::new(ca, cb, a, b)
        }
    }
}
