//! Small deterministic RNG (splitmix64) so that every seeded run is
//! bit-reproducible across platforms, including no_std builds.

use num_complex::Complex64;
// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        let u = 1.0 - self.uniform(); // (0, 1]
        let v = self.uniform();
        (-2.0 * u.ln()).sqrt() * (core::f64::consts::TAU * v).cos()
    }

    /// Complex standard normal (unit variance in total).
    pub fn c_normal(&mut self) -> Complex64 {
        Complex64::new(self.normal(), self.normal()) * core::f64::consts::FRAC_1_SQRT_2
    }

    /// Uniform on the closed disk of the given radius.
    pub fn disk(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.uniform().sqrt();
        let theta = core::f64::consts::TAU * self.uniform();
        Complex64::new(r * theta.cos(), r * theta.sin())
    }

    /// A point of the polydisk, coordinatewise uniform on disks of `radius`.
    pub fn polydisk(&mut self, nvars: usize, radius: f64) -> alloc::vec::Vec<Complex64> {
        (0..nvars).map(|_| self.disk(radius)).collect()
    }

    /// Uniform on the unit circle.
    pub fn circle(&mut self) -> Complex64 {
        let theta = core::f64::consts::TAU * self.uniform();
        Complex64::new(theta.cos(), theta.sin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_seed() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn uniform_in_range() {
        let mut r = Rng::new(7);
        for _ in 0..1000 {
            let u = r.uniform();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn disk_points_inside() {
        let mut r = Rng::new(3);
        for _ in 0..1000 {
            assert!(r.disk(0.9).norm() <= 0.9 + 1e-12);
        }
    }
}
