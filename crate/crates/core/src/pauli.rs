//! Weyl–Heisenberg displacement operators and the three-qubit Pauli group.
//!
//! The shift X and phase Z act on the standard basis as X|n⟩ = |n+1 mod d⟩
//! and Z|n⟩ = e^{2πin/d}|n⟩; displacements are D_{lα} = (−e^{iπ/d})^{lα} X^l Z^α.
//! Three-qubit Pauli operators are labeled by six bits, grouped as an
//! (x-power, z-power) pair per qubit. The phase (−i)^{x·z} is applied to the
//! second and third tensor factors only; the first factor is the bare
//! product σ_x^{m₁}σ_z^{m₂}. All uses downstream conjugate projectors, so
//! the resulting global phase never matters; see [`PauliLabel`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{tensor, ComplexMatrix};

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::new(0., 0.), Complex64::new(1., 0.)],
        vec![Complex64::new(1., 0.), Complex64::new(0., 0.)],
    ])
}

pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::new(0., 0.), Complex64::new(0., -1.)],
        vec![Complex64::new(0., 1.), Complex64::new(0., 0.)],
    ])
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::new(1., 0.), Complex64::new(0., 0.)],
        vec![Complex64::new(0., 0.), Complex64::new(-1., 0.)],
    ])
}

/// Label (l, α) of a Weyl–Heisenberg displacement in dimension d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WhLabel {
    d: usize,
    l: usize,
    alpha: usize,
}

impl WhLabel {
    pub fn new(d: usize, l: usize, alpha: usize) -> Self {
        assert!(d >= 2);
        Self {
            d,
            l: l % d,
            alpha: alpha % d,
        }
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn shift_power(&self) -> usize {
        self.l
    }

    pub fn phase_power(&self) -> usize {
        self.alpha
    }

    /// All d² labels in (l, α) lexicographic order.
    pub fn enumerate(d: usize) -> Vec<WhLabel> {
        let mut out = Vec::with_capacity(d * d);
        for l in 0..d {
            for alpha in 0..d {
                out.push(WhLabel::new(d, l, alpha));
            }
        }
        out
    }
}

/// Cyclic shift X in dimension d: X|n⟩ = |n+1 mod d⟩.
pub fn wh_shift(d: usize) -> ComplexMatrix {
    assert!(d >= 2);
    let mut m = ComplexMatrix::zeros(d, d);
    for n in 0..d {
        m.set((n + 1) % d, n, Complex64::new(1.0, 0.0));
    }
    m
}

/// Phase operator Z in dimension d: Z|n⟩ = e^{2πin/d}|n⟩.
pub fn wh_phase(d: usize) -> ComplexMatrix {
    assert!(d >= 2);
    let mut m = ComplexMatrix::zeros(d, d);
    for n in 0..d {
        let angle = 2.0 * PI * n as f64 / d as f64;
        m.set(n, n, Complex64::from_polar(1.0, angle));
    }
    m
}

/// Displacement operator D_{lα} = (−e^{iπ/d})^{lα} X^l Z^α.
pub fn displacement(label: WhLabel) -> ComplexMatrix {
    let d = label.d;
    let tau = -Complex64::from_polar(1.0, PI / d as f64);
    let phase = tau.powu((label.l * label.alpha) as u32);
    wh_shift(d)
        .pow(label.l)
        .mul(&wh_phase(d).pow(label.alpha))
        .scale(phase)
}

/// Six-bit label of a three-qubit Pauli operator.
///
/// Bits (m₁…m₆) group into (x, z) pairs, one per qubit; m₁ is the x-power
/// of qubit one. Labels serialize as the six-character bit string
/// m₁m₂m₃m₄m₅m₆ and order by its value as a binary integer, m₁ most
/// significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliLabel(u8);

impl PauliLabel {
    pub fn from_bits(m: [u8; 6]) -> Self {
        let mut v = 0u8;
        for &b in &m {
            assert!(b <= 1, "label bits must be 0 or 1");
            v = (v << 1) | b;
        }
        PauliLabel(v)
    }

    /// Label from its integer serialization (0..64).
    pub fn from_index(i: u8) -> Self {
        assert!(i < 64);
        PauliLabel(i)
    }

    pub fn index(&self) -> u8 {
        self.0
    }

    pub fn bits(&self) -> [u8; 6] {
        let mut m = [0u8; 6];
        for (k, bit) in m.iter_mut().enumerate() {
            *bit = (self.0 >> (5 - k)) & 1;
        }
        m
    }

    /// x-powers (m₁, m₃, m₅) as a 3-bit integer, qubit one most significant.
    pub fn x_bits(&self) -> u8 {
        let m = self.bits();
        (m[0] << 2) | (m[2] << 1) | m[4]
    }

    /// z-powers (m₂, m₄, m₆) as a 3-bit integer, qubit one most significant.
    pub fn z_bits(&self) -> u8 {
        let m = self.bits();
        (m[1] << 2) | (m[3] << 1) | m[5]
    }

    pub fn from_xz_bits(x: u8, z: u8) -> Self {
        assert!(x < 8 && z < 8);
        let m = [
            (x >> 2) & 1,
            (z >> 2) & 1,
            (x >> 1) & 1,
            (z >> 1) & 1,
            x & 1,
            z & 1,
        ];
        Self::from_bits(m)
    }

    pub fn xor(&self, other: &Self) -> Self {
        PauliLabel(self.0 ^ other.0)
    }

    pub fn enumerate() -> impl Iterator<Item = PauliLabel> {
        (0..64u8).map(PauliLabel)
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for PauliLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() != 6 || !s.is_ascii() {
            return Err(Error::InvalidLabel(format!(
                "expected six bits, got {:?}",
                s
            )));
        }
        let mut m = [0u8; 6];
        for (k, ch) in s.bytes().enumerate() {
            m[k] = match ch {
                b'0' => 0,
                b'1' => 1,
                _ => {
                    return Err(Error::InvalidLabel(format!(
                        "expected six bits, got {:?}",
                        s
                    )))
                }
            };
        }
        Ok(PauliLabel::from_bits(m))
    }
}

/// Single-qubit factor σ_x^x σ_z^z with phase (−i)^{xz} when `phased`.
fn qubit_factor(x: u8, z: u8, phased: bool) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(2);
    if x == 1 {
        m = m.mul(&sigma_x());
    }
    if z == 1 {
        m = m.mul(&sigma_z());
    }
    if phased && x == 1 && z == 1 {
        m = m.scale(Complex64::new(0.0, -1.0));
    }
    m
}

/// Realize a six-bit label as an 8×8 operator:
/// σ_x^{m₁}σ_z^{m₂} ⊗ (−i)^{m₃m₄}σ_x^{m₃}σ_z^{m₄} ⊗ (−i)^{m₅m₆}σ_x^{m₅}σ_z^{m₆}.
pub fn three_qubit_pauli(label: PauliLabel) -> ComplexMatrix {
    let m = label.bits();
    let f1 = qubit_factor(m[0], m[1], false);
    let f2 = qubit_factor(m[2], m[3], true);
    let f3 = qubit_factor(m[4], m[5], true);
    tensor(&tensor(&f1, &f2), &f3)
}

/// Antisymmetry of the realized operator: true iff m₁m₂ + m₃m₄ + m₅m₆ is odd,
/// i.e. the tensor product carries an odd number of σ_y-type factors.
pub fn is_antisymmetric(label: PauliLabel) -> bool {
    let m = label.bits();
    (m[0] * m[1] + m[2] * m[3] + m[4] * m[5]) % 2 == 1
}

/// Count of antisymmetric labels; equals 28 = 9·3 + 1.
pub fn antisymmetric_count() -> usize {
    PauliLabel::enumerate()
        .filter(|l| is_antisymmetric(*l))
        .count()
}

/// Check σ_x⊗σ_x⊗σ_x = −(σ_x⊗σ_z⊗σ_z)(σ_z⊗σ_x⊗σ_z)(σ_z⊗σ_z⊗σ_x) entrywise.
pub fn verify_ghz_identity() -> bool {
    let xxx = tensor(&tensor(&sigma_x(), &sigma_x()), &sigma_x());
    let a = tensor(&tensor(&sigma_x(), &sigma_z()), &sigma_z());
    let b = tensor(&tensor(&sigma_z(), &sigma_x()), &sigma_z());
    let c = tensor(&tensor(&sigma_z(), &sigma_z()), &sigma_x());
    let rhs = a.mul(&b).mul(&c).scale(Complex64::new(-1.0, 0.0));
    xxx.approx_eq(&rhs, 1e-14)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hs_inner;

    #[test]
    fn shift_and_phase_match_paulis_at_d2() {
        assert!(wh_shift(2).approx_eq(&sigma_x(), 0.0));
        assert!(wh_phase(2).approx_eq(&sigma_z(), 1e-15));
    }

    #[test]
    fn order_d_operators() {
        let x = wh_shift(3);
        let z = wh_phase(3);
        let i3 = ComplexMatrix::identity(3);
        assert!(x.pow(3).approx_eq(&i3, 1e-14));
        assert!(z.pow(3).approx_eq(&i3, 1e-14));
    }

    #[test]
    fn weyl_commutation_d3() {
        // ZX = ω XZ with ω = e^{2πi/3}, by direct 3×3 multiplication
        let x = wh_shift(3);
        let z = wh_phase(3);
        let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let left = z.mul(&x);
        let right = x.mul(&z).scale(omega);
        assert!(left.approx_eq(&right, 1e-14));
    }

    #[test]
    fn displacement_identity_and_minus_sigma_y() {
        let i3 = ComplexMatrix::identity(3);
        assert!(displacement(WhLabel::new(3, 0, 0)).approx_eq(&i3, 0.0));
        // (d=2, l=1, α=1): −i·XZ = −σ_y, computed entrywise
        let d11 = displacement(WhLabel::new(2, 1, 1));
        let minus_y = sigma_y().scale(Complex64::new(-1.0, 0.0));
        assert!(d11.approx_eq(&minus_y, 1e-14));
    }

    #[test]
    fn displacements_unitary() {
        for d in [2usize, 3, 5] {
            for label in WhLabel::enumerate(d) {
                let u = displacement(label);
                assert!(
                    u.dagger()
                        .mul(&u)
                        .approx_eq(&ComplexMatrix::identity(d), 1e-12),
                    "D_{{{},{}}} not unitary at d={}",
                    label.shift_power(),
                    label.phase_power(),
                    d
                );
            }
        }
    }

    #[test]
    fn displacement_composition_up_to_phase() {
        // D_{lα} D_{mβ} ∝ D_{l+m, α+β} with unimodular factor, all 81 pairs at d=3
        let d = 3;
        for a in WhLabel::enumerate(d) {
            for b in WhLabel::enumerate(d) {
                let prod = displacement(a).mul(&displacement(b));
                let target = displacement(WhLabel::new(
                    d,
                    a.shift_power() + b.shift_power(),
                    a.phase_power() + b.phase_power(),
                ));
                // find the phase from the largest entry of the target
                let mut phase = None;
                'outer: for i in 0..d {
                    for j in 0..d {
                        if target.get(i, j).norm() > 0.5 {
                            phase = Some(prod.get(i, j) / target.get(i, j));
                            break 'outer;
                        }
                    }
                }
                let phase = phase.expect("target has a large entry");
                assert!((phase.norm() - 1.0).abs() < 1e-12, "phase not unimodular");
                assert!(prod.approx_eq(&target.scale(phase), 1e-12));
            }
        }
    }

    #[test]
    fn label_bit_layout() {
        let l = PauliLabel::from_bits([1, 1, 0, 0, 0, 0]);
        assert_eq!(l.index(), 0b110000);
        assert_eq!(l.x_bits(), 0b100);
        assert_eq!(l.z_bits(), 0b100);
        assert_eq!(l.to_string(), "110000");
        assert_eq!("110000".parse::<PauliLabel>().unwrap(), l);
        assert_eq!(PauliLabel::from_xz_bits(0b100, 0b100), l);
        assert!("11000".parse::<PauliLabel>().is_err());
        assert!("11000x".parse::<PauliLabel>().is_err());
        assert!("1100002".parse::<PauliLabel>().is_err());
    }

    #[test]
    fn all_zero_label_is_identity() {
        let m = three_qubit_pauli(PauliLabel::from_index(0));
        assert!(m.approx_eq(&ComplexMatrix::identity(8), 0.0));
    }

    #[test]
    fn xxx_label() {
        let l = PauliLabel::from_bits([1, 0, 1, 0, 1, 0]);
        let xxx = tensor(&tensor(&sigma_x(), &sigma_x()), &sigma_x());
        assert!(three_qubit_pauli(l).approx_eq(&xxx, 0.0));
    }

    #[test]
    fn first_factor_phase_convention() {
        // (1,1,0,0,0,0): bare σ_xσ_z = −iσ_y on qubit one, no (−i) correction
        let l = PauliLabel::from_bits([1, 1, 0, 0, 0, 0]);
        let xz = sigma_x().mul(&sigma_z());
        let expect = tensor(
            &tensor(&xz, &ComplexMatrix::identity(2)),
            &ComplexMatrix::identity(2),
        );
        assert!(three_qubit_pauli(l).approx_eq(&expect, 1e-15));
        // while (0,0,1,1,0,0) picks up the (−i)^{m₃m₄} factor
        let l2 = PauliLabel::from_bits([0, 0, 1, 1, 0, 0]);
        let y2 = tensor(
            &tensor(
                &ComplexMatrix::identity(2),
                &xz.scale(Complex64::new(0.0, -1.0)),
            ),
            &ComplexMatrix::identity(2),
        );
        assert!(three_qubit_pauli(l2).approx_eq(&y2, 1e-15));
    }

    #[test]
    fn antisymmetry_formula_matches_transpose_test() {
        let mut count = 0;
        for label in PauliLabel::enumerate() {
            let m = three_qubit_pauli(label);
            let by_transpose = m.antisymmetric_deviation() < 1e-12;
            assert_eq!(
                is_antisymmetric(label),
                by_transpose,
                "transpose test disagrees at label {}",
                label
            );
            if by_transpose {
                count += 1;
            }
        }
        assert_eq!(count, 28);
        assert_eq!(antisymmetric_count(), 28);
    }

    #[test]
    fn antisymmetry_examples() {
        assert!(!is_antisymmetric(PauliLabel::from_index(0)));
        assert!(is_antisymmetric(PauliLabel::from_bits([1, 1, 0, 0, 0, 0])));
    }

    #[test]
    fn pauli_operators_unitary_and_orthogonal() {
        let ops: Vec<ComplexMatrix> = PauliLabel::enumerate().map(three_qubit_pauli).collect();
        let i8 = ComplexMatrix::identity(8);
        for u in &ops {
            assert!(u.dagger().mul(u).approx_eq(&i8, 1e-12));
        }
        for (i, a) in ops.iter().enumerate() {
            for (j, b) in ops.iter().enumerate() {
                let v = hs_inner(a, b).unwrap();
                let expect = if i == j { 8.0 } else { 0.0 };
                assert!(
                    (v.norm() - expect).abs() < 1e-10,
                    "labels {} and {} not HS-orthogonal",
                    i,
                    j
                );
            }
        }
    }

    #[test]
    fn label_composition_is_xor_up_to_phase() {
        let ops: Vec<ComplexMatrix> = PauliLabel::enumerate().map(three_qubit_pauli).collect();
        for a in 0..64usize {
            for b in 0..64usize {
                let prod = ops[a].mul(&ops[b]);
                let target = &ops[a ^ b];
                // tr(T† P)/8 is the proportionality factor; must be unimodular
                let phase = hs_inner(target, &prod).unwrap() / 8.0;
                assert!(
                    (phase.norm() - 1.0).abs() < 1e-10,
                    "labels {} · {} do not land on the XOR label",
                    a,
                    b
                );
                assert!(prod.approx_eq(&target.scale(phase), 1e-10));
            }
        }
    }

    #[test]
    fn ghz_identity_holds_and_sign_matters() {
        assert!(verify_ghz_identity());
        // with the minus sign dropped the equality fails
        let xxx = tensor(&tensor(&sigma_x(), &sigma_x()), &sigma_x());
        let a = tensor(&tensor(&sigma_x(), &sigma_z()), &sigma_z());
        let b = tensor(&tensor(&sigma_z(), &sigma_x()), &sigma_z());
        let c = tensor(&tensor(&sigma_z(), &sigma_z()), &sigma_x());
        let rhs = a.mul(&b).mul(&c);
        assert!(!xxx.approx_eq(&rhs, 1e-14));
    }

    #[test]
    fn ghz_right_side_by_independent_multiplication() {
        // second multiplication route: naive triple-loop product
        fn naive_mul(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
            let n = a.rows();
            let mut out = ComplexMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for k in 0..n {
                        acc += a.get(i, k) * b.get(k, j);
                    }
                    out.set(i, j, acc);
                }
            }
            out
        }
        let a = tensor(&tensor(&sigma_x(), &sigma_z()), &sigma_z());
        let b = tensor(&tensor(&sigma_z(), &sigma_x()), &sigma_z());
        let c = tensor(&tensor(&sigma_z(), &sigma_z()), &sigma_x());
        let fast = a.mul(&b).mul(&c);
        let slow = naive_mul(&naive_mul(&a, &b), &c);
        assert!(fast.approx_eq(&slow, 1e-13));
    }
}
