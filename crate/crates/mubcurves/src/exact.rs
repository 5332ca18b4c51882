//! Exact complex scalars and small dense matrices.
//!
//! Scalars are complex numbers with rational components. Everything the
//! pipeline produces keeps power-of-two denominators, so equality checks and
//! overlap computations are exact.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rat = Ratio<i64>;
pub type Cq = Complex<Rat>;

pub fn cq(re: i64, im: i64) -> Cq {
    Complex::new(Ratio::from_integer(re), Ratio::from_integer(im))
}

/// i^k for k taken mod 4.
pub fn i_pow(k: u8) -> Cq {
    match k % 4 {
        0 => cq(1, 0),
        1 => cq(0, 1),
        2 => cq(-1, 0),
        _ => cq(0, -1),
    }
}

/// Dense square matrix over [`Cq`], sized for operator oracles (dim <= 16).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMat {
    dim: usize,
    data: Vec<Cq>,
}

impl CMat {
    pub fn zeros(dim: usize) -> CMat {
        CMat {
            dim,
            data: vec![Cq::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> CMat {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Cq::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[Cq]]) -> CMat {
        let dim = rows.len();
        let mut m = CMat::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            m.data[i * dim..(i + 1) * dim].clone_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Cq {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cq) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = CMat::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.data[k * d + j];
                    if !b.is_zero() {
                        out.data[i * d + j] += *a * *b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += *b;
        }
        out
    }

    pub fn scale(&self, s: &Cq) -> CMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= *s;
        }
        out
    }

    pub fn kron(&self, other: &CMat) -> CMat {
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let mut out = CMat::zeros(d);
        for i in 0..da {
            for j in 0..da {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        out.data[(i * db + k) * d + (j * db + l)] = *a * *other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMat {
        let d = self.dim;
        let mut out = CMat::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Cq> {
        (0..self.dim).map(|i| *self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == CMat::identity(self.dim)
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.dagger()
    }
}

/// <u|v> with the left argument conjugated.
pub fn inner(u: &[Cq], v: &[Cq]) -> Cq {
    u.iter()
        .zip(v)
        .fold(Cq::zero(), |acc, (a, b)| acc + a.conj() * b)
}

pub fn norm_sqr(v: &[Cq]) -> Rat {
    v.iter().map(|a| a.norm_sqr()).sum()
}

/// Renders a vector as integer (re, im) pairs over one common denominator,
/// which for pipeline outputs is always a power of two.
pub fn common_denominator_form(v: &[Cq]) -> (i64, Vec<[i64; 2]>) {
    let mut den: i64 = 1;
    for a in v {
        den = num_integer::lcm(den, *a.re.denom());
        den = num_integer::lcm(den, *a.im.denom());
    }
    let pairs = v
        .iter()
        .map(|a| {
            [
                a.re.numer() * (den / a.re.denom()),
                a.im.numer() * (den / a.im.denom()),
            ]
        })
        .collect();
    (den, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sx() -> CMat {
        CMat::from_rows(&[&[cq(0, 0), cq(1, 0)], &[cq(1, 0), cq(0, 0)]])
    }

    fn sz() -> CMat {
        CMat::from_rows(&[&[cq(1, 0), cq(0, 0)], &[cq(0, 0), cq(-1, 0)]])
    }

    #[test]
    fn pauli_matrix_relations() {
        let zx = sz().mul(&sx());
        // sz * sx = i * sy
        let sy = CMat::from_rows(&[&[cq(0, 0), cq(0, -1)], &[cq(0, 1), cq(0, 0)]]);
        assert_eq!(zx, sy.scale(&cq(0, 1)));
        assert!(sz().mul(&sz()).is_identity());
        assert!(!zx.is_hermitian());
        assert!(sy.is_hermitian());
    }

    #[test]
    fn kron_shapes_and_values() {
        let m = sz().kron(&sx());
        assert_eq!(m.dim(), 4);
        assert_eq!(*m.get(0, 1), cq(1, 0));
        assert_eq!(*m.get(3, 2), cq(-1, 0));
        assert_eq!(*m.get(0, 0), cq(0, 0));
    }

    #[test]
    fn inner_product_conjugates_left() {
        let u = vec![cq(0, 1), cq(1, 0)];
        let v = vec![cq(1, 0), cq(0, 0)];
        assert_eq!(inner(&u, &v), cq(0, -1));
        assert_eq!(norm_sqr(&u), Rat::from_integer(2));
    }

    #[test]
    fn common_denominator() {
        let half = Ratio::new(1i64, 2);
        let quarter = Ratio::new(1i64, 4);
        let v = vec![
            Complex::new(half, Ratio::from_integer(0)),
            Complex::new(quarter, -quarter),
        ];
        let (den, pairs) = common_denominator_form(&v);
        assert_eq!(den, 4);
        assert_eq!(pairs, vec![[2, 0], [1, -1]]);
    }
}
