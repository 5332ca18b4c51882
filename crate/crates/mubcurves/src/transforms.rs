//! Local Clifford action on phase space.
//!
//! A quarter-turn rotation about z, x or y on one qubit permutes that qubit's
//! Pauli letters, which acts on the expansion bits (a_j, b_j) of a phase-space
//! point as an invertible linear map. Six such maps exist per qubit; words of
//! rotation letters compose left to right. Phases play no role here: the maps
//! track operator labels, and classes are phase-free label sets.

use std::fmt;

use crate::gf::Field;
use crate::phasespace::{assemble_bundle, curve_from_point_set, Bundle, Curve, Point};
use crate::Error;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Axis {
    Z,
    X,
    Y,
}

/// A quarter turn about an axis on a single qubit.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct LocalRotation {
    pub qubit: usize,
    pub axis: Axis,
}

const WORDS: [&str; 6] = ["1", "z", "x", "y", "zx", "xz"];

// Row-major 2x2 matrices over GF(2) acting on the column (a_j, b_j).
const MATS: [[[u8; 2]; 2]; 6] = [
    [[1, 0], [0, 1]], // 1
    [[1, 1], [0, 1]], // z: (a, b) -> (a + b, b)
    [[1, 0], [1, 1]], // x: (a, b) -> (a, a + b)
    [[0, 1], [1, 0]], // y: (a, b) -> (b, a)
    [[1, 1], [1, 0]], // zx: z then x
    [[0, 1], [1, 1]], // xz: x then z
];

/// One of the six invertible maps of a single qubit's index pair, named by
/// its shortest rotation word.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexMap(u8);

impl IndexMap {
    pub const IDENTITY: IndexMap = IndexMap(0);

    pub fn all() -> impl Iterator<Item = IndexMap> {
        (0..6).map(IndexMap)
    }

    pub fn from_axis(axis: Axis) -> IndexMap {
        match axis {
            Axis::Z => IndexMap(1),
            Axis::X => IndexMap(2),
            Axis::Y => IndexMap(3),
        }
    }

    pub fn word(&self) -> &'static str {
        WORDS[self.0 as usize]
    }

    pub fn matrix(&self) -> [[u8; 2]; 2] {
        MATS[self.0 as usize]
    }

    pub fn apply_bits(&self, a: u8, b: u8) -> (u8, u8) {
        let m = self.matrix();
        ((m[0][0] & a) ^ (m[0][1] & b), (m[1][0] & a) ^ (m[1][1] & b))
    }

    /// The map doing `self` first and `then` second.
    pub fn then(&self, then: IndexMap) -> IndexMap {
        let s = self.matrix();
        let t = then.matrix();
        let mut m = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = (t[i][0] & s[0][j]) ^ (t[i][1] & s[1][j]);
            }
        }
        IndexMap(
            (0..6)
                .find(|&k| MATS[k as usize] == m)
                .expect("GL(2, 2) is closed"),
        )
    }

    pub fn inverse(&self) -> IndexMap {
        IndexMap::all()
            .find(|m| self.then(*m) == IndexMap::IDENTITY)
            .expect("every map has an inverse")
    }

    /// Parses a rotation word: "1" alone, or a sequence of the letters z, x,
    /// y applied left to right.
    pub fn parse(word: &str) -> Result<IndexMap, Error> {
        let bad = || Error::BadTransformationWord {
            word: word.to_string(),
        };
        if word == "1" {
            return Ok(IndexMap::IDENTITY);
        }
        if word.is_empty() {
            return Err(bad());
        }
        let mut acc = IndexMap::IDENTITY;
        for ch in word.chars() {
            let step = match ch {
                'z' => IndexMap(1),
                'x' => IndexMap(2),
                'y' => IndexMap(3),
                _ => return Err(bad()),
            };
            acc = acc.then(step);
        }
        Ok(acc)
    }
}

/// A tuple of per-qubit index maps, one for each qubit, written "w0@w1@...".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalClifford {
    maps: Vec<IndexMap>,
}

impl fmt::Display for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<&str> = self.maps.iter().map(|m| m.word()).collect();
        write!(f, "{}", words.join("@"))
    }
}

impl LocalClifford {
    pub fn identity(qubits: usize) -> LocalClifford {
        LocalClifford {
            maps: vec![IndexMap::IDENTITY; qubits],
        }
    }

    pub fn new(maps: Vec<IndexMap>) -> LocalClifford {
        LocalClifford { maps }
    }

    pub fn maps(&self) -> &[IndexMap] {
        &self.maps
    }

    pub fn qubits(&self) -> usize {
        self.maps.len()
    }

    pub fn parse(s: &str, qubits: usize) -> Result<LocalClifford, Error> {
        let maps: Vec<IndexMap> = s
            .split('@')
            .map(IndexMap::parse)
            .collect::<Result<_, _>>()?;
        if maps.len() != qubits {
            return Err(Error::BadTransformationWord {
                word: s.to_string(),
            });
        }
        Ok(LocalClifford { maps })
    }

    pub fn from_rotations(
        qubits: usize,
        rotations: &[LocalRotation],
    ) -> Result<LocalClifford, Error> {
        let mut lc = LocalClifford::identity(qubits);
        for r in rotations {
            if r.qubit >= qubits {
                return Err(Error::QubitOutOfRange {
                    qubit: r.qubit,
                    n: qubits,
                });
            }
            lc.maps[r.qubit] = lc.maps[r.qubit].then(IndexMap::from_axis(r.axis));
        }
        Ok(lc)
    }

    pub fn then(&self, other: &LocalClifford) -> Result<LocalClifford, Error> {
        if self.qubits() != other.qubits() {
            return Err(Error::SizeMismatch {
                left: self.qubits(),
                right: other.qubits(),
            });
        }
        Ok(LocalClifford {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.then(*b))
                .collect(),
        })
    }

    pub fn inverse(&self) -> LocalClifford {
        LocalClifford {
            maps: self.maps.iter().map(|m| m.inverse()).collect(),
        }
    }

    /// Applies the per-qubit maps to packed expansion-bit indices.
    pub fn apply_indices(&self, a: u16, b: u16) -> (u16, u16) {
        let mut na = 0u16;
        let mut nb = 0u16;
        for (j, m) in self.maps.iter().enumerate() {
            let (ra, rb) = m.apply_bits((a >> j & 1) as u8, (b >> j & 1) as u8);
            na |= u16::from(ra) << j;
            nb |= u16::from(rb) << j;
        }
        (na, nb)
    }

    /// Applies the maps to a phase-space point through field arithmetic: the
    /// qubit-j content of alpha is theta_j * tr(alpha * theta_j), which the
    /// map redistributes between the two coordinates.
    pub fn apply_to_point(&self, field: &Field, p: Point) -> Result<Point, Error> {
        if self.qubits() != field.degree() as usize {
            return Err(Error::SizeMismatch {
                left: self.qubits(),
                right: field.degree() as usize,
            });
        }
        let mut alpha = p.alpha;
        let mut beta = p.beta;
        for (j, m) in self.maps.iter().enumerate() {
            let theta = field.basis()[j];
            let ta = field.trace(field.mul(p.alpha, theta));
            let tb = field.trace(field.mul(p.beta, theta));
            let (na, nb) = m.apply_bits(ta, tb);
            if na != ta {
                alpha = field.add(alpha, theta);
            }
            if nb != tb {
                beta = field.add(beta, theta);
            }
        }
        Ok(Point::new(alpha, beta))
    }

    pub fn apply_to_curve(&self, field: &Field, curve: &Curve) -> Result<Curve, Error> {
        let points: Vec<Point> = curve
            .points()
            .iter()
            .map(|p| self.apply_to_point(field, *p))
            .collect::<Result<_, _>>()?;
        curve_from_point_set(field, &points)
    }

    /// Transports a whole bundle; local rotations preserve commutativity and
    /// intersection structure, so the image is again a bundle. Table labels
    /// are recomputed from the image; if none applies, the source label is
    /// carried over.
    pub fn apply_to_bundle(&self, field: &Field, bundle: &Bundle) -> Result<Bundle, Error> {
        let curves: Vec<Curve> = bundle
            .curves()
            .iter()
            .map(|c| self.apply_to_curve(field, c))
            .collect::<Result<_, _>>()?;
        assemble_bundle(field, curves, bundle.label().to_string())
    }
}

/// Searches the 6^n per-qubit map tuples for one sending `src` onto `dst` as
/// a set of point sets, returning the lexicographically least match in the
/// enumeration order 1 < z < x < y < zx < xz, qubit 0 most significant.
pub fn find_transformation(
    field: &Field,
    src: &Bundle,
    dst: &Bundle,
) -> Result<Option<LocalClifford>, Error> {
    let n = field.degree() as usize;
    let dst_sets: std::collections::BTreeSet<Vec<Point>> =
        dst.curves().iter().map(|c| c.points().to_vec()).collect();
    let total = 6usize.pow(n as u32);
    for code in 0..total {
        let mut digits = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            digits.push(c % 6);
            c /= 6;
        }
        digits.reverse(); // qubit 0 most significant
        let lc = LocalClifford {
            maps: digits.into_iter().map(|d| IndexMap(d as u8)).collect(),
        };
        let mut matched = true;
        for curve in src.curves() {
            let mut image: Vec<Point> = curve
                .points()
                .iter()
                .map(|p| lc.apply_to_point(field, *p))
                .collect::<Result<_, _>>()?;
            image.sort();
            if !dst_sets.contains(&image) {
                matched = false;
                break;
            }
        }
        if matched {
            return Ok(Some(lc));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElement;
    use crate::phasespace::{enumerate_bundles, ray};

    fn gf4() -> Field {
        Field::new(2).unwrap()
    }

    fn fe(f: &Field, v: u16) -> FieldElement {
        f.element(v).unwrap()
    }

    #[test]
    fn maps_form_the_full_linear_group() {
        let mut seen: Vec<[[u8; 2]; 2]> = IndexMap::all().map(|m| m.matrix()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
        for m in IndexMap::all() {
            assert_eq!(m.then(m.inverse()), IndexMap::IDENTITY);
        }
        // z and x are involutions on labels, zx has order three.
        let z = IndexMap::parse("z").unwrap();
        let x = IndexMap::parse("x").unwrap();
        let zx = IndexMap::parse("zx").unwrap();
        assert_eq!(z.then(z), IndexMap::IDENTITY);
        assert_eq!(x.then(x), IndexMap::IDENTITY);
        assert_eq!(zx.then(zx).then(zx), IndexMap::IDENTITY);
        assert_eq!(zx.then(zx), IndexMap::parse("xz").unwrap());
    }

    #[test]
    fn words_parse_to_canonical_forms() {
        assert_eq!(IndexMap::parse("zzz").unwrap().word(), "z");
        assert_eq!(IndexMap::parse("zx").unwrap().word(), "zx");
        assert_eq!(IndexMap::parse("xz").unwrap().word(), "xz");
        assert_eq!(IndexMap::parse("yy").unwrap().word(), "1");
        assert!(IndexMap::parse("q").is_err());
        assert!(IndexMap::parse("").is_err());
        assert!(LocalClifford::parse("z@x@y", 2).is_err());
        let lc = LocalClifford::parse("y@z", 2).unwrap();
        assert_eq!(lc.to_string(), "y@z");
    }

    #[test]
    fn field_route_matches_index_route() {
        let f = gf4();
        for m0 in IndexMap::all() {
            for m1 in IndexMap::all() {
                let lc = LocalClifford::new(vec![m0, m1]);
                for alpha in f.elements() {
                    for beta in f.elements() {
                        let p = Point::new(alpha, beta);
                        let via_field = lc.apply_to_point(&f, p).unwrap();
                        let a = bits_to_u16(&f.expand(alpha));
                        let b = bits_to_u16(&f.expand(beta));
                        let (na, nb) = lc.apply_indices(a, b);
                        let via_bits = Point::new(
                            f.combine(&u16_to_bits(na, 2)).unwrap(),
                            f.combine(&u16_to_bits(nb, 2)).unwrap(),
                        );
                        assert_eq!(via_field, via_bits);
                    }
                }
            }
        }
    }

    fn bits_to_u16(bits: &[u8]) -> u16 {
        bits.iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u16::from(b) << i))
    }

    fn u16_to_bits(v: u16, n: usize) -> Vec<u8> {
        (0..n).map(|i| (v >> i & 1) as u8).collect()
    }

    #[test]
    fn x_on_both_qubits_shears_the_horizontal_ray() {
        let f = gf4();
        let horizontal = ray(&f, fe(&f, 1), fe(&f, 0)).unwrap();
        let lc = LocalClifford::parse("x@x", 2).unwrap();
        let image = lc.apply_to_curve(&f, &horizontal).unwrap();
        let diagonal = ray(&f, fe(&f, 1), fe(&f, 1)).unwrap();
        assert_eq!(image, diagonal);
        // y on both qubits swaps the axes outright.
        let swap = LocalClifford::parse("y@y", 2).unwrap();
        let vertical = ray(&f, fe(&f, 0), fe(&f, 1)).unwrap();
        assert_eq!(swap.apply_to_curve(&f, &horizontal).unwrap(), vertical);
    }

    #[test]
    fn rotations_compose_per_qubit() {
        let lc = LocalClifford::from_rotations(
            2,
            &[
                LocalRotation {
                    qubit: 0,
                    axis: Axis::Z,
                },
                LocalRotation {
                    qubit: 0,
                    axis: Axis::X,
                },
                LocalRotation {
                    qubit: 1,
                    axis: Axis::Y,
                },
            ],
        )
        .unwrap();
        assert_eq!(lc.to_string(), "zx@y");
        assert!(LocalClifford::from_rotations(
            1,
            &[LocalRotation {
                qubit: 3,
                axis: Axis::Z
            }]
        )
        .is_err());
    }

    #[test]
    fn bundle_transport_finds_table_relatives() {
        let f = gf4();
        let bundles = enumerate_bundles(&f).unwrap();
        let by_label = |l: &str| bundles.iter().find(|b| b.label() == l).unwrap();
        let t1 = by_label("table1");
        let t2 = by_label("table2");
        let w = find_transformation(&f, t1, t2).unwrap().unwrap();
        let image = w.apply_to_bundle(&f, t1).unwrap();
        assert_eq!(image.label(), "table2");
        // The identity is the lex-least self map of the ray bundle.
        let selfw = find_transformation(&f, t1, t1).unwrap().unwrap();
        assert_eq!(selfw.to_string(), "1@1");
    }

    #[test]
    fn inverse_transport_restores_the_source() {
        let f = gf4();
        let bundles = enumerate_bundles(&f).unwrap();
        let t4 = bundles.iter().find(|b| b.label() == "table4").unwrap();
        let w = LocalClifford::parse("zx@y", 2).unwrap();
        let image = w.apply_to_bundle(&f, t4).unwrap();
        let back = w.inverse().apply_to_bundle(&f, &image).unwrap();
        assert_eq!(back.label(), "table4");
        for (a, b) in back.curves().iter().zip(t4.curves()) {
            assert_eq!(a, b);
        }
    }
}
