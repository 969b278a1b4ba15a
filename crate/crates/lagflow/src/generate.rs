//! Seeded random inputs. Each trial draws from its own ChaCha stream
//! `(seed, trial)`, so batches are reproducible regardless of scheduling.

use lagflow_core::ratpoly::{int, rat};
use lagflow_core::{AlphaParam, Poly, Rational, XiParam};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Root numerators and denominators are bounded by this.
pub const ROOT_BOUND: i64 = 64;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Generator { rng }
    }

    /// Root `n/d` with `|n|, d ≤ 64`; `n ≥ 0` when `nonneg`.
    pub fn root(&mut self, nonneg: bool) -> Rational {
        let lo = if nonneg { 0 } else { -ROOT_BOUND };
        let n = self.rng.gen_range(lo..=ROOT_BOUND);
        let d = self.rng.gen_range(1..=ROOT_BOUND);
        rat(n, d)
    }

    /// Multiplicity in 1..=4, weighted toward 1–3.
    pub fn multiplicity(&mut self) -> u32 {
        match self.rng.gen_range(0..100) {
            0..=44 => 1,
            45..=74 => 2,
            75..=94 => 3,
            _ => 4,
        }
    }

    /// `lead · Π (x − r_i)^{m_i}` with total degree in `1..=max_degree`.
    pub fn real_rooted(&mut self, max_degree: usize, nonneg: bool) -> (Poly, Vec<(Rational, u32)>) {
        let target = self.rng.gen_range(1..=max_degree.max(1));
        let mut roots: Vec<(Rational, u32)> = Vec::new();
        let mut degree = 0;
        while degree < target {
            let m = self.multiplicity().min((target - degree) as u32);
            let r = self.root(nonneg);
            match roots.iter_mut().find(|(q, _)| *q == r) {
                Some(entry) => entry.1 += m,
                None => roots.push((r, m)),
            }
            degree += m as usize;
        }
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let lead = rat(sign * self.rng.gen_range(1..=9), self.rng.gen_range(1..=4));
        (Poly::from_roots(&roots, lead), roots)
    }

    /// α = n/d in `[0, 5]`, `d ≤ 16`.
    pub fn alpha(&mut self) -> AlphaParam {
        let d = self.rng.gen_range(1..=16);
        let n = self.rng.gen_range(0..=5 * d);
        AlphaParam::new(rat(n, d)).expect("nonnegative")
    }

    /// ξ = n/d in `(0, 5]`.
    pub fn positive_xi(&mut self) -> XiParam {
        let d = self.rng.gen_range(1..=16);
        let n = self.rng.gen_range(1..=5 * d);
        XiParam::new(rat(n, d))
    }

    /// Small signed rational, `|n| ≤ 20`, `d ≤ 12`.
    pub fn small(&mut self) -> Rational {
        rat(self.rng.gen_range(-20..=20), self.rng.gen_range(1..=12))
    }

    /// Dense polynomial of degree at most `max_degree` with small rational coefficients.
    pub fn poly(&mut self, max_degree: usize) -> Poly {
        let len = self.rng.gen_range(1..=max_degree + 1);
        let mut coeffs: Vec<Rational> = (0..len).map(|_| self.small()).collect();
        if coeffs.last().is_some_and(|c| *c == int(0)) {
            *coeffs.last_mut().expect("nonempty") = int(1);
        }
        Poly::new(coeffs)
    }
}
