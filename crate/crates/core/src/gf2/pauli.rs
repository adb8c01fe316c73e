use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BitVector, Gf2Error};

/// Pure Pauli type used throughout the CSS machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliType {
    X,
    Z,
}

impl PauliType {
    pub fn dual(self) -> Self {
        match self {
            PauliType::X => PauliType::Z,
            PauliType::Z => PauliType::X,
        }
    }
}

impl fmt::Display for PauliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PauliType::X => "X",
            PauliType::Z => "Z",
        })
    }
}

impl FromStr for PauliType {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" | "X" => Ok(PauliType::X),
            "z" | "Z" => Ok(PauliType::Z),
            _ => Err(Gf2Error::BadPauliChar(s.chars().next().unwrap_or(' '))),
        }
    }
}

/// Single-qubit Pauli.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }
}

/// A Hermitian Pauli string `±P₀⊗P₁⊗…` in symplectic form.
///
/// Phases are restricted to ±1. Products use the convention `Y = iXZ`; the
/// product of two anticommuting words carries a factor of `±i` which
/// [`PauliWord::mul`] folds into the sign (`i → +1`, `-i → -1`). Use
/// [`PauliWord::checked_mul`] when that matters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliWord {
    x: BitVector,
    z: BitVector,
    negative: bool,
}

impl PauliWord {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            negative: false,
        }
    }

    pub fn new(x: BitVector, z: BitVector, negative: bool) -> Result<Self, Gf2Error> {
        if x.len() != z.len() {
            return Err(Gf2Error::LengthMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z, negative })
    }

    pub fn x_type(x: BitVector) -> Self {
        let n = x.len();
        Self {
            x,
            z: BitVector::zeros(n),
            negative: false,
        }
    }

    pub fn z_type(z: BitVector) -> Self {
        let n = z.len();
        Self {
            x: BitVector::zeros(n),
            z,
            negative: false,
        }
    }

    pub fn pure(kind: PauliType, bits: BitVector) -> Self {
        match kind {
            PauliType::X => Self::x_type(bits),
            PauliType::Z => Self::z_type(bits),
        }
    }

    pub fn from_paulis(paulis: &[Pauli], negative: bool) -> Self {
        let mut w = Self::identity(paulis.len());
        for (i, p) in paulis.iter().enumerate() {
            w.set(i, *p);
        }
        w.negative = negative;
        w
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &BitVector {
        &self.x
    }

    pub fn z(&self) -> &BitVector {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        out.negative = !out.negative;
        out
    }

    pub fn with_sign(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }

    pub fn get(&self, i: usize) -> Pauli {
        Pauli::from_bits(self.x.get(i), self.z.get(i))
    }

    pub fn set(&mut self, i: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(i, x);
        self.z.set(i, z);
    }

    /// Number of non-identity positions.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).weight()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// `⟨a.x, b.z⟩ + ⟨a.z, b.x⟩ mod 2`; true iff the words anticommute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool, Gf2Error> {
        if self.len() != other.len() {
            return Err(Gf2Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.anticommutes(other))
    }

    #[inline]
    pub(crate) fn anticommutes(&self, other: &Self) -> bool {
        (self.x.overlap(&other.z) + self.z.overlap(&other.x)) % 2 == 1
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !self.anticommutes(other)
    }

    // Exponent e with self·other = i^e · (X^x Z^z written back with Y = iXZ).
    fn product_phase(&self, other: &Self) -> (u32, BitVector, BitVector) {
        let x = self.x.xor(&other.x);
        let z = self.z.xor(&other.z);
        let a1 = self.x.overlap(&self.z) as i64;
        let a2 = other.x.overlap(&other.z) as i64;
        let a3 = x.overlap(&z) as i64;
        let swap = self.z.overlap(&other.x) as i64;
        let signs = 2 * (self.negative as i64 + other.negative as i64);
        let e = (a1 + a2 + 2 * swap + signs - a3).rem_euclid(4) as u32;
        (e, x, z)
    }

    /// Product with the sign convention described on the type.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "Pauli words must have equal length");
        let (e, x, z) = self.product_phase(other);
        Self {
            x,
            z,
            negative: e >= 2,
        }
    }

    /// Product, or `None` when the operands anticommute (the result would carry ±i).
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        let (e, x, z) = self.product_phase(other);
        (e % 2 == 0).then_some(Self {
            x,
            z,
            negative: e == 2,
        })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            x: self.x.concat(&other.x),
            z: self.z.concat(&other.z),
            negative: self.negative ^ other.negative,
        }
    }

    /// Restrict to the listed positions.
    pub fn select(&self, positions: &[usize]) -> Self {
        Self {
            x: self.x.select(positions),
            z: self.z.select(positions),
            negative: self.negative,
        }
    }

    pub fn remove_positions(&self, positions: &[usize]) -> Self {
        Self {
            x: self.x.remove_positions(positions),
            z: self.z.remove_positions(positions),
            negative: self.negative,
        }
    }

    /// Symplectic vector `(x | z)` of length 2n.
    pub fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for i in 0..self.len() {
            f.write_str(match self.get(i) {
                Pauli::I => "I",
                Pauli::X => "X",
                Pauli::Y => "Y",
                Pauli::Z => "Z",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliWord({self})")
    }
}

impl FromStr for PauliWord {
    type Err = Gf2Error;

    /// Parses `[+-]?[IXYZ]*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let paulis = body
            .chars()
            .map(|c| match c {
                'I' | '_' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Gf2Error::BadPauliChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_paulis(&paulis, negative))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PauliWord {
        s.parse().unwrap()
    }

    #[test]
    fn symplectic_examples() {
        assert!(p("XI").symplectic_product(&p("ZI")).unwrap());
        assert!(!p("XXXX").symplectic_product(&p("ZZII")).unwrap());
        assert!(!p("XYZ").symplectic_product(&p("XYZ")).unwrap());
        assert!(p("XX").symplectic_product(&p("ZZZ")).is_err());
    }

    #[test]
    fn single_qubit_products() {
        // Y = iXZ, so XZ = -iY, ZX = iY, XY = iZ, YY = I.
        assert_eq!(p("X").checked_mul(&p("Z")), None);
        assert_eq!(p("Y").mul(&p("Y")), p("I"));
        assert_eq!(p("-Y").mul(&p("Y")), p("-I"));
        assert_eq!(p("Z").mul(&p("X")), p("Y"));
        assert_eq!(p("X").mul(&p("Z")), p("-Y"));
    }

    #[test]
    fn bell_stabilizer_product() {
        // XX · ZZ = (XZ)⊗(XZ) = (-iY)⊗(-iY) = -YY
        assert_eq!(p("XX").checked_mul(&p("ZZ")).unwrap(), p("-YY"));
        assert_eq!(p("-YY").checked_mul(&p("XX")).unwrap(), p("ZZ"));
    }

    #[test]
    fn weight_counts_union() {
        assert_eq!(p("XIZY").weight(), 3);
    }

    fn arb_word(n: usize) -> impl Strategy<Value = PauliWord> {
        (
            proptest::collection::vec(0u8..4, n),
            any::<bool>(),
        )
            .prop_map(|(v, s)| {
                let ps: Vec<Pauli> = v
                    .into_iter()
                    .map(|c| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][c as usize])
                    .collect();
                PauliWord::from_paulis(&ps, s)
            })
    }

    fn triple() -> impl Strategy<Value = (PauliWord, PauliWord, PauliWord)> {
        (1usize..40).prop_flat_map(|n| (arb_word(n), arb_word(n), arb_word(n)))
    }

    proptest! {
        #[test]
        fn symplectic_product_is_bilinear((a, b, c) in triple()) {
            let ab = a.mul(&b);
            prop_assert_eq!(
                ab.symplectic_product(&c).unwrap(),
                a.symplectic_product(&c).unwrap() ^ b.symplectic_product(&c).unwrap()
            );
        }

        #[test]
        fn commuting_product_is_associative((a, b, c) in triple()) {
            if let (Some(ab), Some(bc)) = (a.checked_mul(&b), b.checked_mul(&c)) {
                if let (Some(l), Some(r)) = (ab.checked_mul(&c), a.checked_mul(&bc)) {
                    prop_assert_eq!(l, r);
                }
            }
        }

        #[test]
        fn square_is_identity((a, _b, _c) in triple()) {
            prop_assert_eq!(a.mul(&a), PauliWord::identity(a.len()));
        }
    }
}
