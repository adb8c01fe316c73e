//! Shared generators and the dense state-vector oracle for integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

use seedgrow::code::{dressed_distance, CssSubsystemCode};
use seedgrow::conjoin::LegoBlock;
use seedgrow::css_network::CssCodeInput;
use seedgrow::gf2::{BinaryMatrix, BitVector, EchelonBasis, Pauli, PauliType, PauliWord};
use seedgrow::grow::GrowthConfig;

const EPS: f64 = 1e-9;

fn random_support(rng: &mut impl Rng, n: usize, lo: usize, hi: usize) -> BitVector {
    let w = rng.gen_range(lo..=hi.min(n));
    let mut qubits: Vec<usize> = (0..n).collect();
    qubits.shuffle(rng);
    BitVector::from_indices(n, qubits.into_iter().take(w))
}

fn random_rows(rng: &mut impl Rng, n: usize) -> BinaryMatrix {
    let count = rng.gen_range(1..=n / 2 + 1);
    let rows = (0..count).map(|_| random_support(rng, n, 2, 4)).collect();
    BinaryMatrix::from_rows(n, rows).unwrap()
}

/// A random seed with `n ≤ 10` and `1 ≤ k ≤ 2`, together with caps equal to
/// its own profile (at least 2) and its exact X and Z distances.
pub struct Seed {
    pub code: CssSubsystemCode,
    pub cfg: GrowthConfig,
    pub d_x: usize,
    pub d_z: usize,
}

pub fn random_seed(rng: &mut impl Rng) -> Seed {
    loop {
        let n = rng.gen_range(4..=10);
        let gx = random_rows(rng, n);
        let gz = random_rows(rng, n);
        let Ok(code) = CssSubsystemCode::from_gauge(gx, gz) else {
            continue;
        };
        if !(1..=2).contains(&code.k()) || !code.validate().is_valid() {
            continue;
        }
        let d_x = dressed_distance(&code, PauliType::X, n).expect("some logical exists");
        let d_z = dressed_distance(&code, PauliType::Z, n).expect("some logical exists");
        let p = code.weight_profile();
        let cfg = GrowthConfig::with_caps(p.w_x.max(2), p.w_z.max(2), p.q_x.max(2), p.q_z.max(2));
        return Seed { code, cfg, d_x, d_z };
    }
}

/// Random commuting CSS checks: `H_Z` rows are random combinations of the
/// kernel of `H_X`.
pub fn random_css(rng: &mut impl Rng, max_n: usize) -> CssCodeInput {
    let n = rng.gen_range(2..=max_n);
    let hx_rows = (0..rng.gen_range(0..=n / 2)).map(|_| random_support(rng, n, 1, n)).collect();
    let hx = BinaryMatrix::from_rows(n, hx_rows).unwrap();
    let ker = hx.kernel();
    let hz_rows = (0..rng.gen_range(0..=n / 2))
        .map(|_| {
            let mut v = BitVector::zeros(n);
            for r in ker.rows() {
                if rng.gen_bool(0.5) {
                    v.xor_assign(r);
                }
            }
            v
        })
        .collect();
    let hz = BinaryMatrix::from_rows(n, hz_rows).unwrap();
    CssCodeInput::new(hx, hz).expect("rows commute by construction")
}

/// Dense state on up to a handful of qubits; qubit `i` is bit `i` of the
/// amplitude index.
#[derive(Clone, Debug)]
pub struct StateVector {
    pub n: usize,
    pub amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(n: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    pub fn h(&mut self, q: usize) {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bit = 1 << q;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a, b) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = (a + b) * s;
                self.amps[i | bit] = (a - b) * s;
            }
        }
    }

    pub fn s(&mut self, q: usize) {
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i >> q & 1 == 1 {
                *a *= Complex64::i();
            }
        }
    }

    pub fn x(&mut self, q: usize) {
        let bit = 1 << q;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                self.amps.swap(i, i | bit);
            }
        }
    }

    pub fn cnot(&mut self, c: usize, t: usize) {
        let (cb, tb) = (1 << c, 1 << t);
        for i in 0..self.amps.len() {
            if i & cb != 0 && i & tb == 0 {
                self.amps.swap(i, i | tb);
            }
        }
    }

    pub fn random(rng: &mut impl Rng, n: usize, gates: usize) -> Self {
        let mut st = Self::zero(n);
        for _ in 0..gates {
            match rng.gen_range(0..4) {
                0 => st.h(rng.gen_range(0..n)),
                1 => st.s(rng.gen_range(0..n)),
                2 => st.x(rng.gen_range(0..n)),
                _ if n > 1 => {
                    let c = rng.gen_range(0..n);
                    let t = (c + rng.gen_range(1..n)) % n;
                    st.cnot(c, t);
                }
                _ => st.h(0),
            }
        }
        st
    }

    /// `⟨ψ|P|ψ⟩` with `Y` the usual Pauli matrix.
    pub fn expectation(&self, p: &[Pauli]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm() < EPS {
                continue;
            }
            // P|i⟩ = phase |j⟩
            let mut j = i;
            let mut phase = Complex64::new(1.0, 0.0);
            for (q, &op) in p.iter().enumerate() {
                let b = i >> q & 1 == 1;
                match op {
                    Pauli::I => {}
                    Pauli::X => j ^= 1 << q,
                    Pauli::Z => {
                        if b {
                            phase = -phase;
                        }
                    }
                    Pauli::Y => {
                        j ^= 1 << q;
                        phase *= if b { -Complex64::i() } else { Complex64::i() };
                    }
                }
            }
            acc += self.amps[j].conj() * phase * a;
        }
        acc
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Project legs `a` and `b` onto `|00⟩ + |11⟩` and drop them. `None` if
    /// the result vanishes.
    pub fn bell_trace(&self, a: usize, b: usize) -> Option<Self> {
        let rest: Vec<usize> = (0..self.n).filter(|&q| q != a && q != b).collect();
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << rest.len()];
        for (r, out) in amps.iter_mut().enumerate() {
            let mut base = 0;
            for (k, &q) in rest.iter().enumerate() {
                if r >> k & 1 == 1 {
                    base |= 1 << q;
                }
            }
            *out = self.amps[base] + self.amps[base | 1 << a | 1 << b];
        }
        let mut st = Self { n: rest.len(), amps };
        let norm = st.norm_sqr().sqrt();
        if norm < 1e-6 {
            return None;
        }
        for x in &mut st.amps {
            *x /= norm;
        }
        Some(st)
    }

    /// Stabilizer group found by trying every Pauli string.
    pub fn stabilizer_block(&self) -> LegoBlock {
        let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        let mut basis = EchelonBasis::new(2 * self.n);
        let mut gens = Vec::new();
        for code in 1..4usize.pow(self.n as u32) {
            let p: Vec<Pauli> = (0..self.n).map(|q| letters[code / 4usize.pow(q as u32) % 4]).collect();
            let e = self.expectation(&p);
            if (e.re.abs() - 1.0).abs() < 1e-6 {
                let w = PauliWord::from_paulis(&p, e.re < 0.0);
                if basis.insert(w.symplectic()) {
                    gens.push(w);
                }
            }
        }
        assert_eq!(gens.len(), self.n, "state is not a stabilizer state");
        LegoBlock::new(self.n, gens).expect("stabilizers of a state commute")
    }
}
