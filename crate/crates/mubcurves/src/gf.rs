//! Exact arithmetic in the binary fields GF(2^n) for 1 <= n <= 8.
//!
//! Elements are polynomials over Z_2 of degree below n, encoded as integers
//! with bit i holding the coefficient of x^i. Addition is XOR; multiplication
//! is carry-less polynomial multiplication reduced modulo a fixed irreducible
//! polynomial. Each [`Field`] also carries a distinguished ordered basis used
//! for coordinate expansion. By default this is the self-dual basis, for which
//! `tr(theta_i * theta_j) = delta_ij` and the expansion coefficients of x are
//! simply `a_i = tr(x * theta_i)`; qubit factorizations downstream rely on it.

use serde::Serialize;

use crate::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 8;

/// Canonical irreducible modulus per degree (index = degree).
const DEFAULT_MODULI: [u32; MAX_DEGREE as usize + 1] = [
    0,
    0b11,          // x + 1
    0b111,         // x^2 + x + 1
    0b1011,        // x^3 + x + 1
    0b1_0011,      // x^4 + x + 1
    0b10_0101,     // x^5 + x^2 + 1
    0b100_0011,    // x^6 + x + 1
    0b1000_0011,   // x^7 + x + 1
    0b1_0001_1011, // x^8 + x^4 + x^3 + x + 1
];

/// An element of GF(2^n), valid only relative to the [`Field`] that made it.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding (bit i = coefficient of x^i).
    pub fn val(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32 // -1 convention unused: callers guard p != 0
}

fn poly_mul(a: u32, b: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 != 0 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

fn poly_rem(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Checks irreducibility over Z_2 by trial division: an irreducible factor of
/// a reducible degree-n polynomial has degree at most n/2, so testing every
/// divisor up to that bound is exhaustive. Returns the first factor found.
pub fn irreducibility_check(modulus: u32, n: u32) -> Result<(), u32> {
    for deg in 1..=(n / 2) {
        for low in 0..(1u32 << deg) {
            let g = (1 << deg) | low;
            if poly_rem(modulus, g) == 0 {
                return Err(g);
            }
        }
    }
    Ok(())
}

/// GF(2^n) with a fixed modulus and a distinguished expansion basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    n: u32,
    modulus: u32,
    basis: Vec<FieldElement>,
    self_dual: bool,
    // Row i gives the bitmask m with a_i = parity(m & x) for expansion.
    expand_rows: Vec<u16>,
}

impl Field {
    /// Field with the canonical modulus and the self-dual expansion basis.
    pub fn new(n: u32) -> Result<Field, Error> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { n });
        }
        Self::with_modulus(n, DEFAULT_MODULI[n as usize])
    }

    /// Same, but with a caller-supplied irreducible modulus of degree n.
    pub fn with_modulus(n: u32, modulus: u32) -> Result<Field, Error> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { n });
        }
        if modulus >> n != 1 {
            return Err(Error::WrongModulusDegree { n, modulus });
        }
        if let Err(factor) = irreducibility_check(modulus, n) {
            return Err(Error::ReducibleModulus { modulus, factor });
        }
        let mut field = Field {
            n,
            modulus,
            basis: Vec::new(),
            self_dual: true,
            expand_rows: Vec::new(),
        };
        let basis = find_self_dual_basis(&field);
        field.basis = basis;
        field.self_dual = true;
        field.expand_rows = field.solve_expansion_rows()?;
        Ok(field)
    }

    /// Field with an arbitrary expansion basis (independent elements). The
    /// self-dual flag is computed from the Gram matrix; displacement
    /// factorization refuses to run when it is false.
    pub fn with_basis(n: u32, modulus: u32, basis: Vec<FieldElement>) -> Result<Field, Error> {
        let mut field = Self::with_modulus(n, modulus)?;
        if basis.len() != n as usize {
            return Err(Error::CoefficientCount {
                expected: n as usize,
                got: basis.len(),
            });
        }
        field.self_dual = (0..basis.len()).all(|i| {
            (0..basis.len()).all(|j| {
                let want = u8::from(i == j);
                field.trace(field.mul(basis[i], basis[j])) == want
            })
        });
        field.basis = basis;
        field.expand_rows = field.solve_expansion_rows()?;
        Ok(field)
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Field size d = 2^n.
    pub fn order(&self) -> u32 {
        1 << self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn basis_is_self_dual(&self) -> bool {
        self.self_dual
    }

    pub fn element(&self, val: u16) -> Result<FieldElement, Error> {
        if u32::from(val) >= self.order() {
            Err(Error::ValueOutOfRange {
                val,
                order: self.order(),
            })
        } else {
            Ok(FieldElement(val))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order() as u16).map(FieldElement)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(x.0 ^ y.0)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(poly_rem(poly_mul(x.0 as u32, y.0 as u32), self.modulus) as u16)
    }

    pub fn pow(&self, x: FieldElement, mut k: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while k != 0 {
            if k & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, Error> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, u64::from(self.order()) - 2))
    }

    /// Frobenius map x -> x^2 (an additive field automorphism).
    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    /// Absolute trace tr(x) = sum of x^(2^k) for k < n; always lands in {0, 1}.
    pub fn trace(&self, x: FieldElement) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut t = x;
        for _ in 0..self.n {
            acc = self.add(acc, t);
            t = self.frobenius(t);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    /// Additive character chi(x) = (-1)^tr(x), the only values a binary field
    /// character takes.
    pub fn character(&self, x: FieldElement) -> i8 {
        if self.trace(x) == 0 {
            1
        } else {
            -1
        }
    }

    /// Coordinates of x in the expansion basis, one bit per basis element.
    pub fn expand(&self, x: FieldElement) -> Vec<u8> {
        self.expand_rows
            .iter()
            .map(|&row| ((row & x.0).count_ones() & 1) as u8)
            .collect()
    }

    /// Inverse of [`Field::expand`].
    pub fn combine(&self, coords: &[u8]) -> Result<FieldElement, Error> {
        if coords.len() != self.n as usize {
            return Err(Error::CoefficientCount {
                expected: self.n as usize,
                got: coords.len(),
            });
        }
        let mut acc = FieldElement::ZERO;
        for (c, theta) in coords.iter().zip(&self.basis) {
            if c & 1 != 0 {
                acc = self.add(acc, *theta);
            }
        }
        Ok(acc)
    }

    /// Display form: sigma-power notation at n = 2 (0, 1, s, s2), decimal
    /// otherwise.
    pub fn display(&self, x: FieldElement) -> String {
        if self.n == 2 {
            match x.0 {
                0 => "0".into(),
                1 => "1".into(),
                2 => "s".into(),
                _ => "s2".into(),
            }
        } else {
            x.0.to_string()
        }
    }

    /// Modulus rendered as a polynomial in x.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for i in (0..=self.n).rev() {
            if self.modulus >> i & 1 != 0 {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                });
            }
        }
        terms.join(" + ")
    }

    // Inverts the basis matrix (columns = basis elements as bit vectors) so
    // expansion is a single masked-parity per coordinate.
    fn solve_expansion_rows(&self) -> Result<Vec<u16>, Error> {
        let n = self.n as usize;
        // rows[i] = (basis matrix row i | identity row i), eliminated in place.
        let mut rows: Vec<u32> = (0..n)
            .map(|i| {
                let mut r = 0u32;
                for (j, theta) in self.basis.iter().enumerate() {
                    r |= u32::from(theta.0 >> i & 1) << j;
                }
                r | (1 << (n + i))
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| rows[r] >> col & 1 != 0)
                .ok_or(Error::DependentBasis)?;
            rows.swap(col, pivot);
            for r in 0..n {
                if r != col && rows[r] >> col & 1 != 0 {
                    rows[r] ^= rows[col];
                }
            }
        }
        // After elimination the augmented block holds the inverse; row i of it
        // is the parity mask giving coordinate a_i = parity(mask_i & x).
        let mask = (1u32 << n) - 1;
        Ok(rows.iter().map(|row| ((row >> n) & mask) as u16).collect())
    }
}

/// Lexicographically smallest ordered basis with `tr(theta_i theta_j) = delta_ij`,
/// found by depth-first search over ascending candidates. The n = 2 basis is
/// pinned to (sigma, sigma^2), which the search also yields; the pin keeps the
/// qubit labeling independent of search details.
pub fn find_self_dual_basis(field: &Field) -> Vec<FieldElement> {
    if field.n == 2 {
        return vec![FieldElement(2), FieldElement(3)];
    }
    let n = field.n as usize;
    let order = field.order() as u16;
    let mut chosen: Vec<FieldElement> = Vec::with_capacity(n);
    fn dfs(field: &Field, order: u16, chosen: &mut Vec<FieldElement>, n: usize) -> bool {
        if chosen.len() == n {
            return true;
        }
        for v in 1..order {
            let cand = FieldElement(v);
            if field.trace(field.mul(cand, cand)) != 1 {
                continue;
            }
            if chosen
                .iter()
                .any(|&prev| field.trace(field.mul(cand, prev)) != 0)
            {
                continue;
            }
            chosen.push(cand);
            if dfs(field, order, chosen, n) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let found = dfs(field, order, &mut chosen, n);
    assert!(found, "self-dual basis exists for every binary field");
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2).unwrap()
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for n in 1..=MAX_DEGREE {
            let field = Field::new(n).unwrap();
            assert_eq!(field.modulus(), DEFAULT_MODULI[n as usize]);
            assert!(irreducibility_check(field.modulus(), n).is_ok());
        }
    }

    #[test]
    fn degree_bounds_rejected() {
        assert!(matches!(
            Field::new(0),
            Err(Error::DegreeOutOfRange { n: 0 })
        ));
        assert!(matches!(
            Field::new(9),
            Err(Error::DegreeOutOfRange { n: 9 })
        ));
    }

    #[test]
    fn reducible_modulus_reports_factor() {
        // x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1)
        match Field::with_modulus(3, 0b1111) {
            Err(Error::ReducibleModulus { factor, .. }) => assert_eq!(factor, 0b11),
            other => panic!("expected reducible modulus, got {other:?}"),
        }
        assert!(Field::with_modulus(3, 0b1011).is_ok());
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = gf4();
        let s = FieldElement(2);
        let s2 = FieldElement(3);
        assert_eq!(f.mul(s, s), s2); // sigma^2 = sigma + 1
        assert_eq!(f.mul(s, s2), FieldElement::ONE); // sigma^3 = 1
        assert_eq!(f.mul(s2, s2), s); // sigma^4 = sigma
        assert_eq!(f.add(s, s), FieldElement::ZERO);
    }

    #[test]
    fn gf4_trace_and_character() {
        let f = gf4();
        assert_eq!(f.trace(FieldElement::ZERO), 0);
        assert_eq!(f.trace(FieldElement::ONE), 0);
        assert_eq!(f.trace(FieldElement(2)), 1);
        assert_eq!(f.trace(FieldElement(3)), 1);
        assert_eq!(f.character(FieldElement::ONE), 1);
        assert_eq!(f.character(FieldElement(2)), -1);
    }

    #[test]
    fn trace_is_additive_and_balanced() {
        for n in 1..=MAX_DEGREE {
            let f = Field::new(n).unwrap();
            let zeros = f.elements().filter(|&x| f.trace(x) == 0).count();
            assert_eq!(zeros as u32, f.order() / 2, "n={n}");
            for x in f.elements() {
                assert_eq!(f.trace(x), f.trace(f.frobenius(x)), "n={n}");
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_degrees() {
        for n in 1..=4 {
            let f = Field::new(n).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in f.elements() {
                        assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
                }
            }
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            gf4().inv(FieldElement::ZERO),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gf4_self_dual_basis_is_sigma_pair() {
        let f = gf4();
        assert_eq!(f.basis(), &[FieldElement(2), FieldElement(3)]);
        assert!(f.basis_is_self_dual());
    }

    #[test]
    fn self_dual_gram_identity_all_degrees() {
        for n in 1..=MAX_DEGREE {
            let f = Field::new(n).unwrap();
            let basis = f.basis();
            assert_eq!(basis.len(), n as usize);
            for (i, &ti) in basis.iter().enumerate() {
                for (j, &tj) in basis.iter().enumerate() {
                    assert_eq!(f.trace(f.mul(ti, tj)), u8::from(i == j), "n={n}");
                }
            }
        }
    }

    #[test]
    fn expansion_matches_trace_form_and_round_trips() {
        for n in [1, 2, 3, 4, 8] {
            let f = Field::new(n).unwrap();
            for x in f.elements() {
                let coords = f.expand(x);
                for (i, &theta) in f.basis().iter().enumerate() {
                    assert_eq!(coords[i], f.trace(f.mul(x, theta)));
                }
                assert_eq!(f.combine(&coords).unwrap(), x);
            }
        }
    }

    #[test]
    fn gf4_expansion_values() {
        let f = gf4();
        assert_eq!(f.expand(FieldElement(2)), vec![1, 0]);
        assert_eq!(f.expand(FieldElement(3)), vec![0, 1]);
        assert_eq!(f.expand(FieldElement::ONE), vec![1, 1]);
    }

    #[test]
    fn polynomial_basis_is_not_self_dual_at_n2() {
        let f = Field::with_basis(2, 0b111, vec![FieldElement(1), FieldElement(2)]).unwrap();
        assert!(!f.basis_is_self_dual());
        // Expansion still round-trips through the general linear solve.
        for x in f.elements() {
            assert_eq!(f.combine(&f.expand(x)).unwrap(), x);
        }
    }

    #[test]
    fn dependent_basis_rejected() {
        assert!(matches!(
            Field::with_basis(2, 0b111, vec![FieldElement(3), FieldElement(3)]),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn element_range_checked() {
        let f = gf4();
        assert!(f.element(3).is_ok());
        assert!(matches!(
            f.element(4),
            Err(Error::ValueOutOfRange { val: 4, order: 4 })
        ));
    }

    #[test]
    fn display_uses_sigma_powers_at_n2() {
        let f = gf4();
        let shown: Vec<String> = f.elements().map(|x| f.display(x)).collect();
        assert_eq!(shown, ["0", "1", "s", "s2"]);
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.display(FieldElement(5)), "5");
    }

    #[test]
    fn modulus_rendering() {
        assert_eq!(gf4().modulus_string(), "x^2 + x + 1");
        assert_eq!(Field::new(3).unwrap().modulus_string(), "x^3 + x + 1");
    }
}
