//! Equiangular line systems: 7 and 28 lines in R⁷ from the Fano plane and
//! octonion signs, the icosahedron's 6 lines in R³, the trine in R², and
//! the Gerzon/Welch bound values.
//!
//! The R⁷ sets live in integer arithmetic and the R³ set in Q(√5), so
//! equiangularity here is checked exactly, with no tolerance. Floats only
//! appear at export.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::golden::{GoldenMatrix, GoldenScalar, RealVector};
use crate::octonion::{cayley_graves_sign, fano_plane, FanoPlane};
use crate::prob::Field;

/// A set of equiangular lines: vectors (two per line when antipodal pairs
/// are present) and the common |cosine|, exact in Q(√5).
#[derive(Debug, Clone)]
pub struct LineSet {
    pub ambient_dim: usize,
    pub vectors: Vec<RealVector>,
    pub cosine: GoldenScalar,
}

impl LineSet {
    /// Number of lines: vectors counted up to sign.
    pub fn line_count(&self) -> usize {
        self.line_classes().len()
    }

    /// Indices of vectors grouped into ± classes.
    pub fn line_classes(&self) -> Vec<Vec<usize>> {
        let n = self.vectors.len();
        let mut class = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class[i] = id;
            let mut members = vec![i];
            for j in (i + 1)..n {
                if class[j] == usize::MAX
                    && (self.vectors[i] == self.vectors[j]
                        || self.vectors[i].is_exact_negation_of(&self.vectors[j]))
                {
                    class[j] = id;
                    members.push(j);
                }
            }
            classes.push(members);
        }
        classes
    }

    /// Exact equiangularity across distinct lines: ⟨u,v⟩² = cos²·|u|²·|v|²
    /// for every cross-class pair. `None` when any vector is float-mode.
    pub fn exact_equiangularity(&self) -> Option<bool> {
        if !self.vectors.iter().all(RealVector::is_exact) {
            return None;
        }
        let classes = self.line_classes();
        let cos2 = self.cosine.square();
        for (a, ca) in classes.iter().enumerate() {
            for cb in classes.iter().skip(a + 1) {
                let u = &self.vectors[ca[0]];
                let v = &self.vectors[cb[0]];
                let inner = u.exact_dot(v).unwrap();
                let nu = u.exact_dot(u).unwrap();
                let nv = v.exact_dot(v).unwrap();
                if inner.square() != cos2.clone() * nu * nv {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    /// max | |⟨u,v⟩|/(|u||v|) − cos | over cross-class pairs, in floats.
    pub fn float_equiangularity_deviation(&self) -> f64 {
        let classes = self.line_classes();
        let cos = self.cosine.to_f64();
        let mut dev = 0.0f64;
        for (a, ca) in classes.iter().enumerate() {
            for cb in classes.iter().skip(a + 1) {
                let u = self.vectors[ca[0]].to_floats();
                let v = self.vectors[cb[0]].to_floats();
                let inner: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
                let nu: f64 = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                let nv: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                dev = dev.max((inner.abs() / (nu * nv) - cos).abs());
            }
        }
        dev
    }

    /// JSON document: ambient dimension, mode, common cosine as an exact
    /// (a, b) pair for a + b√5, and the vectors (exact entries as rational
    /// pairs, float entries as numbers).
    pub fn to_json(&self) -> String {
        fn rational_str(r: &BigRational) -> String {
            format!("{}/{}", r.numer(), r.denom())
        }
        let cosine = serde_json::json!([
            rational_str(self.cosine.rational_part()),
            rational_str(self.cosine.sqrt5_part()),
        ]);
        let vectors: Vec<serde_json::Value> = self
            .vectors
            .iter()
            .map(|v| match v {
                RealVector::Exact(entries) => serde_json::Value::Array(
                    entries
                        .iter()
                        .map(|g| {
                            serde_json::json!([
                                rational_str(g.rational_part()),
                                rational_str(g.sqrt5_part())
                            ])
                        })
                        .collect(),
                ),
                RealVector::Float(entries) => serde_json::Value::Array(
                    entries.iter().map(|&x| serde_json::json!(x)).collect(),
                ),
            })
            .collect();
        let doc = serde_json::json!({
            "ambient_dim": self.ambient_dim,
            "mode": if self.vectors.iter().all(RealVector::is_exact) { "exact" } else { "float" },
            "cosine": cosine,
            "vectors": vectors,
        });
        serde_json::to_string_pretty(&doc).expect("line-set serialization is infallible")
    }

    /// Plain CSV of float entries, one vector per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            let row: Vec<String> = v.to_floats().iter().map(|x| format!("{}", x)).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// The rows of the Fano incidence matrix as 7 equiangular lines in R⁷,
/// norm² = 3, pairwise inner product 1, cosine 1/3.
pub fn fano_lines_r7() -> LineSet {
    let plane = fano_plane();
    let m = plane.incidence_matrix();
    let vectors = m
        .iter()
        .map(|row| RealVector::exact_integers(&row.iter().map(|&b| b as i64).collect::<Vec<_>>()))
        .collect();
    LineSet {
        ambient_dim: 7,
        vectors,
        cosine: GoldenScalar::from_ratio(1, 3),
    }
}

/// One anti-flag tag: a Fano line (listed index and dual index) with a
/// point off the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Antiflag {
    pub line_listed: usize,
    pub line_dual: u8,
    pub point: u8,
}

/// The 28 equiangular lines in R⁷ from anti-flags: each Fano line's
/// incidence row, signed at point q by the Cayley–Graves sign of e_q e_p
/// for each off-line point p.
pub fn antiflag_lines_28() -> (LineSet, Vec<Antiflag>) {
    let plane = fano_plane();
    let mut vectors = Vec::with_capacity(28);
    let mut tags = Vec::with_capacity(28);
    for (li, line) in plane.lines().iter().enumerate() {
        for p in plane.off_line_points(line) {
            let mut entries = [0i64; 7];
            for &q in &line.points {
                entries[(q - 1) as usize] = cayley_graves_sign(q, p) as i64;
            }
            vectors.push(RealVector::exact_integers(&entries));
            tags.push(Antiflag {
                line_listed: li,
                line_dual: line.dual_index,
                point: p,
            });
        }
    }
    (
        LineSet {
            ambient_dim: 7,
            vectors,
            cosine: GoldenScalar::from_ratio(1, 3),
        },
        tags,
    )
}

/// One generator tag for the 28-line SO(8) construction: a Fano point,
/// optionally with one of the three lines through it marked by a sign flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct So8Tag {
    pub point: u8,
    pub flipped_line: Option<usize>,
}

/// The 28 equiangular lines in R⁷ from points: each point's
/// lines-through-point indicator vector plus its three single-entry sign
/// flips.
pub fn so8_lines_28() -> (LineSet, Vec<So8Tag>) {
    let plane = fano_plane();
    let mut vectors = Vec::with_capacity(28);
    let mut tags = Vec::with_capacity(28);
    for p in 1..8u8 {
        let through = plane.lines_through(p);
        let mut base = [0i64; 7];
        for &li in &through {
            base[li] = 1;
        }
        vectors.push(RealVector::exact_integers(&base));
        tags.push(So8Tag {
            point: p,
            flipped_line: None,
        });
        for &li in &through {
            let mut flipped = base;
            flipped[li] = -1;
            vectors.push(RealVector::exact_integers(&flipped));
            tags.push(So8Tag {
                point: p,
                flipped_line: Some(li),
            });
        }
    }
    (
        LineSet {
            ambient_dim: 7,
            vectors,
            cosine: GoldenScalar::from_ratio(1, 3),
        },
        tags,
    )
}

/// The real shift and phase operators in dimension 3: X cyclic, Z = diag(1, −1, 1).
pub fn real_wh_ops() -> (GoldenMatrix, GoldenMatrix) {
    let x = GoldenMatrix::from_integer_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let z = GoldenMatrix::from_integer_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
    (x, z)
}

/// Closure of {X, −Z} under multiplication: the 12-element tetrahedral
/// group, every element orthogonal with determinant 1, exactly.
pub fn tetrahedral_group() -> Result<Vec<GoldenMatrix>> {
    let (x, z) = real_wh_ops();
    let generators = [x, z.neg()];
    let mut elements = vec![GoldenMatrix::identity(3)];
    let mut frontier = vec![GoldenMatrix::identity(3)];
    while let Some(m) = frontier.pop() {
        for g in &generators {
            let next = m.mul(g);
            if !elements.contains(&next) {
                if elements.len() >= 24 {
                    return Err(Error::ClosureOverflow(24));
                }
                elements.push(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(elements)
}

/// The golden ratio as the positive root of y² − y − 1, exact.
pub fn golden_fiducial() -> GoldenScalar {
    GoldenScalar::phi()
}

/// Orbit of (0, 1, φ) under the tetrahedral group with global sign
/// freedom: the 12 icosahedron vertices, 6 antipodal line classes,
/// cosine² = 1/5 exactly.
pub fn icosahedron_orbit() -> Result<LineSet> {
    let group = tetrahedral_group()?;
    let v = vec![
        GoldenScalar::zero(),
        GoldenScalar::one(),
        GoldenScalar::phi(),
    ];
    let mut orbit: Vec<Vec<GoldenScalar>> = Vec::new();
    for g in &group {
        let image = g.apply(&v);
        for candidate in [image.clone(), image.iter().map(|e| -e.clone()).collect()] {
            if !orbit.contains(&candidate) {
                orbit.push(candidate);
            }
        }
    }
    // 1/√5 = (1/5)√5 lies in the field
    let cosine = GoldenScalar::sqrt5() * GoldenScalar::from_ratio(1, 5);
    Ok(LineSet {
        ambient_dim: 3,
        vectors: orbit.into_iter().map(RealVector::Exact).collect(),
        cosine,
    })
}

/// Three coplanar unit vectors at mutual 120°, |cos| = 1/2. The entries
/// involve √3, so this set is float-mode.
pub fn trine_r2() -> LineSet {
    let h = 3f64.sqrt() / 2.0;
    LineSet {
        ambient_dim: 2,
        vectors: vec![
            RealVector::Float(vec![1.0, 0.0]),
            RealVector::Float(vec![-0.5, h]),
            RealVector::Float(vec![-0.5, -h]),
        ],
        cosine: GoldenScalar::from_ratio(1, 2),
    }
}

/// Scalar field for the Gerzon bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GerzonField {
    Real,
    Complex,
    /// The octonionic 3-space; the bound is only defined at d = 3.
    Octonionic3,
}

/// Maximum number of equiangular lines: d(d+1)/2 real, d² complex,
/// 27 for the octonionic 3-space.
pub fn gerzon_bound(d: usize, field: GerzonField) -> Result<usize> {
    match field {
        GerzonField::Real => Ok(d * (d + 1) / 2),
        GerzonField::Complex => Ok(d * d),
        GerzonField::Octonionic3 => {
            if d == 3 {
                Ok(27)
            } else {
                Err(Error::OctonionicDimension(d))
            }
        }
    }
}

/// Common |cosine| when the Gerzon bound is attained:
/// 1/√(d+1) complex, 1/√(d+2) real.
pub fn welch_angle(d: usize, field: Field) -> f64 {
    match field {
        Field::Complex => 1.0 / ((d as f64 + 1.0).sqrt()),
        Field::Real => 1.0 / ((d as f64 + 2.0).sqrt()),
    }
}

/// Expose the shared Fano plane for reports.
pub fn fano() -> FanoPlane {
    fano_plane()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::antiflag_to_pauli;
    use crate::pauli::{is_antisymmetric, PauliLabel};

    #[test]
    fn fano_seven_lines() {
        let set = fano_lines_r7();
        assert_eq!(set.line_count(), 7);
        assert_eq!(set.exact_equiangularity(), Some(true));
        // norm² = 3, pairwise inner = 1
        for (i, u) in set.vectors.iter().enumerate() {
            assert_eq!(u.exact_dot(u).unwrap(), GoldenScalar::from_integer(3));
            for v in set.vectors.iter().skip(i + 1) {
                assert_eq!(u.exact_dot(v).unwrap(), GoldenScalar::one());
            }
        }
    }

    #[test]
    fn antiflag_28_exact() {
        let (set, tags) = antiflag_lines_28();
        assert_eq!(set.vectors.len(), 28);
        assert_eq!(set.line_count(), 28);
        assert_eq!(tags.len(), 28);
        assert_eq!(set.exact_equiangularity(), Some(true));
        assert_eq!(
            set.line_count(),
            gerzon_bound(7, GerzonField::Real).unwrap()
        );
    }

    #[test]
    fn antiflag_first_line_sign_matrix() {
        // line (e₁,e₂,e₃) multiplied by e₄,e₅,e₆,e₇: (+++), (−+−), (−−+), (+−−)
        let (set, tags) = antiflag_lines_28();
        let expect: [[i64; 7]; 4] = [
            [1, 1, 1, 0, 0, 0, 0],
            [-1, 1, -1, 0, 0, 0, 0],
            [-1, -1, 1, 0, 0, 0, 0],
            [1, -1, -1, 0, 0, 0, 0],
        ];
        for (k, row) in expect.iter().enumerate() {
            assert_eq!(tags[k].line_listed, 0);
            assert_eq!(tags[k].point, 4 + k as u8);
            assert_eq!(set.vectors[k], RealVector::exact_integers(row));
        }
    }

    #[test]
    fn antiflag_same_line_overlap_magnitude_one() {
        // two terms cancel, leaving |inner| = 1
        let (set, tags) = antiflag_lines_28();
        for i in 0..28 {
            for j in (i + 1)..28 {
                if tags[i].line_listed != tags[j].line_listed {
                    continue;
                }
                let inner = set.vectors[i].exact_dot(&set.vectors[j]).unwrap();
                assert_eq!(inner.abs(), GoldenScalar::one());
            }
        }
    }

    #[test]
    fn antiflag_tags_match_pauli_bijection() {
        let (_, tags) = antiflag_lines_28();
        let plane = fano_plane();
        let mut labels: Vec<PauliLabel> = tags
            .iter()
            .map(|t| antiflag_to_pauli(plane.line(t.line_listed), t.point).unwrap())
            .collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), 28);
        assert!(labels.iter().all(|l| is_antisymmetric(*l)));
    }

    #[test]
    fn so8_28_exact() {
        let (set, tags) = so8_lines_28();
        assert_eq!(set.vectors.len(), 28);
        assert_eq!(set.line_count(), 28);
        assert_eq!(set.exact_equiangularity(), Some(true));
        // displayed examples for point 1: base and one flip
        assert_eq!(
            set.vectors[0],
            RealVector::exact_integers(&[1, 1, 1, 0, 0, 0, 0])
        );
        assert_eq!(
            tags[0],
            So8Tag {
                point: 1,
                flipped_line: None
            }
        );
        assert_eq!(
            set.vectors[2],
            RealVector::exact_integers(&[1, -1, 1, 0, 0, 0, 0])
        );
        // same-point pairs: 1 − 1 + 1 = 1
        let inner = set.vectors[0].exact_dot(&set.vectors[2]).unwrap();
        assert_eq!(inner, GoldenScalar::one());
    }

    #[test]
    fn real_wh_relations() {
        let (x, z) = real_wh_ops();
        let i3 = GoldenMatrix::identity(3);
        assert_eq!(x.mul(&x).mul(&x), i3);
        assert_eq!(z.mul(&z), i3);
        let zx = z.mul(&x);
        assert_eq!(zx.mul(&zx).mul(&zx), i3.neg());
        // (−Z)² = X³ = (−ZX)³ = I
        let nz = z.neg();
        assert_eq!(nz.mul(&nz), i3);
        let nzx = zx.neg();
        assert_eq!(nzx.mul(&nzx).mul(&nzx), i3);
    }

    #[test]
    fn tetrahedral_group_has_order_12() {
        let group = tetrahedral_group().unwrap();
        assert_eq!(group.len(), 12);
        assert!(group.contains(&GoldenMatrix::identity(3)));
        for g in &group {
            assert!(g.is_orthogonal());
            assert_eq!(g.determinant(), GoldenScalar::one());
        }
    }

    #[test]
    fn icosahedron_vertices_and_angles() {
        let set = icosahedron_orbit().unwrap();
        assert_eq!(set.vectors.len(), 12);
        assert_eq!(set.line_count(), 6);
        assert_eq!(set.exact_equiangularity(), Some(true));
        assert_eq!(
            set.line_count(),
            gerzon_bound(3, GerzonField::Real).unwrap()
        );

        // the vector set is exactly (0,±1,±φ) and cyclic shifts
        let phi = GoldenScalar::phi();
        let one = GoldenScalar::one();
        let zero = GoldenScalar::zero();
        let mut expected: Vec<Vec<GoldenScalar>> = Vec::new();
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let a = if s1 > 0 { one.clone() } else { -one.clone() };
            let b = if s2 > 0 { phi.clone() } else { -phi.clone() };
            expected.push(vec![zero.clone(), a.clone(), b.clone()]);
            expected.push(vec![a.clone(), b.clone(), zero.clone()]);
            expected.push(vec![b.clone(), zero.clone(), a.clone()]);
        }
        for v in &set.vectors {
            match v {
                RealVector::Exact(entries) => {
                    assert!(expected.contains(entries), "unexpected vertex");
                }
                RealVector::Float(_) => panic!("icosahedron must be exact"),
            }
        }

        // cross-line inner products are ±φ, exactly
        let classes = set.line_classes();
        for (a, ca) in classes.iter().enumerate() {
            for cb in classes.iter().skip(a + 1) {
                let inner = set.vectors[ca[0]].exact_dot(&set.vectors[cb[0]]).unwrap();
                assert_eq!(inner.abs(), phi);
            }
        }

        // cosine² = 1/5 exactly
        assert_eq!(set.cosine.square(), GoldenScalar::from_ratio(1, 5));
    }

    #[test]
    fn golden_fiducial_conditions() {
        let y = golden_fiducial();
        // y² − y − 1 = 0
        assert!((y.square() - y.clone() - GoldenScalar::one()).is_zero());
        // ⟨Zv, v⟩ = ⟨X²v, v⟩ for v = (0, 1, y): −1 + y² = y
        let (x, z) = real_wh_ops();
        let v = vec![GoldenScalar::zero(), GoldenScalar::one(), y.clone()];
        let zv = z.apply(&v);
        let x2v = x.mul(&x).apply(&v);
        let dot = |u: &[GoldenScalar], w: &[GoldenScalar]| {
            let mut acc = GoldenScalar::zero();
            for (a, b) in u.iter().zip(w) {
                acc = acc + a.clone() * b.clone();
            }
            acc
        };
        assert_eq!(dot(&zv, &v), dot(&x2v, &v));
        // y⁻¹ = y − 1
        assert_eq!(y.inverse(), y - GoldenScalar::one());
    }

    #[test]
    fn trine_properties() {
        let set = trine_r2();
        assert_eq!(set.line_count(), 3);
        assert_eq!(
            set.line_count(),
            gerzon_bound(2, GerzonField::Real).unwrap()
        );
        assert!(set.float_equiangularity_deviation() < 1e-15);
        // sum of the 3 rank-1 projectors = (3/2) I, numerically
        let mut sum = [[0.0f64; 2]; 2];
        for v in &set.vectors {
            let f = v.to_floats();
            for i in 0..2 {
                for j in 0..2 {
                    sum[i][j] += f[i] * f[j];
                }
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { 1.5 } else { 0.0 };
                assert!((sum[i][j] - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn bound_values() {
        assert_eq!(gerzon_bound(7, GerzonField::Real).unwrap(), 28);
        assert_eq!(gerzon_bound(8, GerzonField::Complex).unwrap(), 64);
        assert_eq!(gerzon_bound(3, GerzonField::Octonionic3).unwrap(), 27);
        assert_eq!(gerzon_bound(23, GerzonField::Real).unwrap(), 276);
        assert!(gerzon_bound(4, GerzonField::Octonionic3).is_err());
    }

    #[test]
    fn welch_values() {
        assert!((welch_angle(3, Field::Complex) - 0.5).abs() < 1e-15);
        // matches the icosahedron cosine 1/√5
        assert!((welch_angle(3, Field::Real) - 1.0 / 5f64.sqrt()).abs() < 1e-15);
        // matches the Fano-line cosine 1/3
        assert!((welch_angle(7, Field::Real) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn line_set_exports() {
        let set = fano_lines_r7();
        let json = set.to_json();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["ambient_dim"], 7);
        assert_eq!(doc["mode"], "exact");
        assert_eq!(doc["vectors"].as_array().unwrap().len(), 7);
        let csv = set.to_csv();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().next().unwrap().starts_with("1,1,1,0"));
    }
}
