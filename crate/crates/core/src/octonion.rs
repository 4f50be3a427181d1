//! Octonion unit multiplication and the Fano plane.
//!
//! Units are indexed 0..8 with 0 the real unit; for distinct imaginary
//! units the product index is the XOR of the factor indices, with the sign
//! read off the Cayley–Graves table. Fano lines are numbered by their dual
//! point: line a is the set of points p with p·a ≡ 0 (mod 2), which makes
//! the anti-flag ↔ antisymmetric-label correspondence a plain parity test.

use crate::error::{Error, Result};
use crate::pauli::PauliLabel;

/// Sign of e_i e_j for imaginary units (indices 1..8); the diagonal entries
/// stand for e_i² = −1. Row i, column j of the Cayley–Graves table.
const CAYLEY_GRAVES_SIGN: [[i8; 8]; 8] = [
    // index 0 row/column unused (real unit handled separately)
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 1, -1, 1, -1, -1, 1],
    [0, -1, -1, 1, 1, 1, -1, -1],
    [0, 1, -1, -1, 1, -1, 1, -1],
    [0, -1, -1, -1, -1, 1, 1, 1],
    [0, 1, -1, 1, -1, -1, -1, 1],
    [0, 1, 1, -1, -1, 1, -1, -1],
    [0, -1, 1, 1, -1, -1, 1, -1],
];

/// A signed octonion unit ±1, ±e₁ … ±e₇.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctonionUnit {
    index: u8,
    sign: i8,
}

impl OctonionUnit {
    pub fn new(index: u8, sign: i8) -> Self {
        assert!(index < 8);
        assert!(sign == 1 || sign == -1);
        Self { index, sign }
    }

    pub fn positive(index: u8) -> Self {
        Self::new(index, 1)
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_real(&self) -> bool {
        self.index == 0
    }
}

impl std::fmt::Display for OctonionUnit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        if self.index == 0 {
            write!(f, "{}1", s)
        } else {
            write!(f, "{}e{}", s, self.index)
        }
    }
}

/// Product of two octonion units by table lookup; for distinct imaginary
/// units the result index is index(a) XOR index(b).
pub fn octonion_mul(a: OctonionUnit, b: OctonionUnit) -> OctonionUnit {
    let sign = a.sign * b.sign;
    if a.index == 0 {
        return OctonionUnit::new(b.index, sign);
    }
    if b.index == 0 {
        return OctonionUnit::new(a.index, sign);
    }
    if a.index == b.index {
        // e_i² = −1
        return OctonionUnit::new(0, -sign);
    }
    let table_sign = CAYLEY_GRAVES_SIGN[a.index as usize][b.index as usize];
    OctonionUnit::new(a.index ^ b.index, sign * table_sign)
}

/// Sign of e_i e_j for distinct imaginary indices.
pub fn cayley_graves_sign(i: u8, j: u8) -> i8 {
    assert!((1..8).contains(&i) && (1..8).contains(&j) && i != j);
    CAYLEY_GRAVES_SIGN[i as usize][j as usize]
}

/// One Fano line: three points plus the dual index a with
/// line = {p : p·a ≡ 0 (mod 2)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanoLine {
    pub points: [u8; 3],
    pub dual_index: u8,
}

impl FanoLine {
    pub fn contains(&self, point: u8) -> bool {
        self.points.contains(&point)
    }
}

/// The Fano plane on points 1..8, lines in the order
/// (e₁e₂e₃), (e₁e₄e₅), (e₁e₇e₆), (e₂e₄e₆), (e₂e₅e₇), (e₃e₄e₇), (e₃e₆e₅).
#[derive(Debug, Clone)]
pub struct FanoPlane {
    lines: Vec<FanoLine>,
}

/// Binary dot product of two 3-bit indices.
pub fn bit_dot(p: u8, q: u8) -> u8 {
    ((p & q).count_ones() % 2) as u8
}

pub fn fano_plane() -> FanoPlane {
    let listed: [[u8; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 7, 6],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 6, 5],
    ];
    let lines = listed
        .iter()
        .map(|&points| {
            let dual = (1..8u8)
                .find(|&a| points.iter().all(|&p| bit_dot(p, a) == 0))
                .expect("every Fano line is an orthocomplement");
            FanoLine {
                points,
                dual_index: dual,
            }
        })
        .collect();
    FanoPlane { lines }
}

impl FanoPlane {
    pub fn lines(&self) -> &[FanoLine] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &FanoLine {
        &self.lines[i]
    }

    pub fn line_by_dual(&self, a: u8) -> Option<&FanoLine> {
        self.lines.iter().find(|l| l.dual_index == a)
    }

    /// 7×7 incidence matrix M, rows in listed line order: M[i][j] = 1 iff
    /// line i contains point j+1.
    pub fn incidence_matrix(&self) -> [[u8; 7]; 7] {
        let mut m = [[0u8; 7]; 7];
        for (i, line) in self.lines.iter().enumerate() {
            for &p in &line.points {
                m[i][(p - 1) as usize] = 1;
            }
        }
        m
    }

    /// Lines through a given point, as listed-order indices.
    pub fn lines_through(&self, point: u8) -> Vec<usize> {
        self.lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.contains(point))
            .map(|(i, _)| i)
            .collect()
    }

    /// Points not on the given line, ascending.
    pub fn off_line_points(&self, line: &FanoLine) -> Vec<u8> {
        (1..8u8).filter(|&p| !line.contains(p)).collect()
    }
}

/// Anti-flag (line, point off the line) → six-bit Pauli label with x-bits
/// the point index and z-bits the line's dual index. The label is
/// antisymmetric exactly.
pub fn antiflag_to_pauli(line: &FanoLine, point: u8) -> Result<PauliLabel> {
    assert!((1..8).contains(&point));
    let label = PauliLabel::from_xz_bits(point, line.dual_index);
    if line.contains(point) {
        // incident pairs land on symmetric labels and are rejected here
        return Err(Error::FlagNotAntiflag {
            line: line.dual_index as usize,
            point: point as usize,
        });
    }
    Ok(label)
}

/// Label → pair of unit octonions via the 3-bit x and z halves, with index
/// 0 the real unit.
pub fn hoggar_label_to_octonions(label: PauliLabel) -> (OctonionUnit, OctonionUnit) {
    (
        OctonionUnit::positive(label.x_bits()),
        OctonionUnit::positive(label.z_bits()),
    )
}
