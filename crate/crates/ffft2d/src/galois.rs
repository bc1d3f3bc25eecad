//! Arithmetic in GF(2^lambda) with log/antilog tables.
//!
//! The extension degree is chosen from the code dimensions: lambda is the
//! smallest integer such that lcm(n, m) divides 2^lambda - 1, so the field
//! contains n-th and m-th roots of unity. The modulus is the lexicographically
//! smallest primitive polynomial of that degree.

use crate::error::{Error, Result};

/// Upper bound on the extension degree; tables have 2^lambda entries.
pub const DEFAULT_LAMBDA_BOUND: u32 = 24;

/// An element of GF(2^lambda) in polynomial-basis representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(2^lambda) arithmetic context: primitive polynomial plus log/antilog tables.
#[derive(Debug, Clone)]
pub struct Field {
    lambda: u32,
    primitive_poly: u64,
    /// log_table[x] = discrete log of x base alpha, for nonzero x.
    log_table: Vec<u32>,
    /// antilog_table[k] = alpha^k, for 0 <= k < 2^lambda - 1.
    antilog_table: Vec<u32>,
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Carry-less polynomial multiplication modulo `poly` (degree `lambda`).
fn poly_mulmod(mut a: u64, mut b: u64, poly: u64, lambda: u32) -> u64 {
    let high = 1u64 << lambda;
    let mut acc = 0u64;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & high != 0 {
            a ^= poly;
        }
    }
    acc
}

fn poly_powmod(base: u64, mut exp: u64, poly: u64, lambda: u32) -> u64 {
    let mut acc = 1u64;
    let mut b = base;
    while exp != 0 {
        if exp & 1 != 0 {
            acc = poly_mulmod(acc, b, poly, lambda);
        }
        b = poly_mulmod(b, b, poly, lambda);
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff `x` has multiplicative order 2^lambda - 1 modulo `poly`.
/// When it does, every nonzero residue is a power of x, so the quotient ring
/// is a field and `poly` is a primitive polynomial.
fn is_primitive(poly: u64, lambda: u32) -> bool {
    let ord = (1u64 << lambda) - 1;
    if poly_powmod(2, ord, poly, lambda) != 1 {
        return false;
    }
    prime_factors(ord)
        .into_iter()
        .all(|q| poly_powmod(2, ord / q, poly, lambda) != 1)
}

/// Lexicographically smallest primitive polynomial of degree `lambda`.
pub fn smallest_primitive_poly(lambda: u32) -> u64 {
    if lambda == 1 {
        return 0b11; // x + 1
    }
    let base = 1u64 << lambda;
    // constant term must be 1, otherwise x divides the polynomial
    let mut p = base + 1;
    while p < 2 * base {
        if is_primitive(p, lambda) {
            return p;
        }
        p += 2;
    }
    unreachable!("a primitive polynomial of degree {lambda} always exists");
}

impl Field {
    /// Builds the field for an n x m code: smallest lambda with
    /// lcm(n, m) | 2^lambda - 1. When lcm(n,m)+1 is a power of two this
    /// gives 2^lambda = lcm(n,m) + 1.
    pub fn build(n: usize, m: usize) -> Result<Field> {
        Self::build_bounded(n, m, DEFAULT_LAMBDA_BOUND)
    }

    pub fn build_bounded(n: usize, m: usize, bound: u32) -> Result<Field> {
        if n % 2 == 0 {
            return Err(Error::EvenDimension(n));
        }
        if m % 2 == 0 {
            return Err(Error::EvenDimension(m));
        }
        let l = lcm(n as u64, m as u64);
        let lambda = (1..=bound)
            .find(|&lam| ((1u64 << lam) - 1) % l == 0)
            .ok_or(Error::LambdaTooLarge { lcm: l, bound })?;
        Ok(Self::with_lambda(lambda))
    }

    /// Builds GF(2^lambda) with the default modulus for that degree.
    pub fn with_lambda(lambda: u32) -> Field {
        let poly = smallest_primitive_poly(lambda);
        let size = 1usize << lambda;
        let ord = size - 1;
        let mut log_table = vec![0u32; size];
        let mut antilog_table = vec![0u32; ord];
        let mut x = 1u64;
        for k in 0..ord {
            antilog_table[k] = x as u32;
            log_table[x as usize] = k as u32;
            x <<= 1;
            if x & (size as u64) != 0 {
                x ^= poly;
            }
        }
        Field {
            lambda,
            primitive_poly: poly,
            log_table,
            antilog_table,
        }
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn primitive_poly(&self) -> u64 {
        self.primitive_poly
    }

    /// Order of the multiplicative group, 2^lambda - 1.
    pub fn order(&self) -> usize {
        self.antilog_table.len()
    }

    /// The primitive element alpha.
    pub fn alpha(&self) -> FieldElement {
        self.antilog(1)
    }

    /// alpha^k, with k reduced mod 2^lambda - 1 (negative k allowed).
    pub fn antilog(&self, k: i64) -> FieldElement {
        let ord = self.order() as i64;
        FieldElement(self.antilog_table[k.rem_euclid(ord) as usize])
    }

    /// Discrete log base alpha of a nonzero element.
    pub fn log(&self, a: FieldElement) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(self.log_table[a.0 as usize])
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let la = self.log_table[a.0 as usize] as usize;
        let lb = self.log_table[b.0 as usize] as usize;
        FieldElement(self.antilog_table[(la + lb) % self.order()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivideByZero);
        }
        let la = self.log_table[a.0 as usize] as i64;
        Ok(self.antilog(-la))
    }

    /// a^k with negative exponents via reduction mod 2^lambda - 1.
    pub fn pow(&self, a: FieldElement, k: i64) -> FieldElement {
        if a.is_zero() {
            // 0^0 = 1 by convention, 0^k = 0 otherwise
            return if k == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let la = self.log_table[a.0 as usize] as i64;
        self.antilog(la * k % self.order() as i64)
    }

    /// True iff a lies in the subfield GF(2^d), i.e. a^(2^d) = a.
    pub fn in_subfield(&self, a: FieldElement, d: u32) -> Result<bool> {
        if d == 0 || self.lambda % d != 0 {
            return Err(Error::NotADivisor {
                d,
                lambda: self.lambda,
            });
        }
        Ok(self.pow(a, 1i64 << d) == a)
    }

    /// A deterministic GF(2)-basis of the subfield GF(2^d) inside this field:
    /// {1, sigma, ..., sigma^(d-1)} where sigma = alpha^((2^lambda-1)/(2^d-1))
    /// generates the subfield's multiplicative group.
    pub fn subfield_basis(&self, d: u32) -> Result<Vec<FieldElement>> {
        if d == 0 || self.lambda % d != 0 {
            return Err(Error::NotADivisor {
                d,
                lambda: self.lambda,
            });
        }
        let sub_ord = (1i64 << d) - 1;
        let sigma = self.antilog(self.order() as i64 / sub_ord);
        Ok((0..d as i64).map(|i| self.pow(sigma, i)).collect())
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Result<usize> {
        let la = self.log(a)? as usize;
        Ok(self.order() / gcd(self.order() as u64, la as u64) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_field_3x5_gives_lambda_4() {
        let f = Field::build(3, 5).unwrap();
        assert_eq!(f.lambda(), 4);
        assert_eq!(f.primitive_poly(), 0b10011); // x^4 + x + 1
    }

    #[test]
    fn build_field_degenerate_1x1() {
        let f = Field::build(1, 1).unwrap();
        assert_eq!(f.lambda(), 1);
    }

    #[test]
    fn build_field_3x7_gives_lambda_6() {
        // lcm = 21; brute-force scan: smallest lambda with 21 | 2^lambda - 1
        let l = lcm(3, 7);
        let expect = (1u32..=24)
            .find(|&lam| ((1u64 << lam) - 1) % l == 0)
            .unwrap();
        assert_eq!(expect, 6);
        assert_eq!(Field::build(3, 7).unwrap().lambda(), 6);
    }

    #[test]
    fn even_dimension_rejected() {
        assert!(matches!(Field::build(4, 5), Err(Error::EvenDimension(4))));
        assert!(matches!(Field::build(3, 6), Err(Error::EvenDimension(6))));
    }

    #[test]
    fn add_is_characteristic_two() {
        let f = Field::build(3, 5).unwrap();
        for v in 0..16u32 {
            let x = FieldElement(v);
            assert_eq!(f.add(x, x), FieldElement::ZERO);
            assert_eq!(f.add(x, FieldElement::ZERO), x);
        }
        // table-derived: alpha^1 + alpha^2 in GF(16) with x^4+x+1
        let a1 = f.antilog(1);
        let a2 = f.antilog(2);
        assert_eq!(f.add(a1, a2), f.antilog(5));
    }

    #[test]
    fn mul_inv_pow_axioms() {
        let f = Field::build(3, 5).unwrap();
        let a = f.antilog(7);
        assert_eq!(f.mul(a, FieldElement::ZERO), FieldElement::ZERO);
        for v in 1..16u32 {
            let x = FieldElement(v);
            assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
        }
        assert_eq!(f.pow(f.alpha(), f.order() as i64), FieldElement::ONE);
        assert!(matches!(f.inv(FieldElement::ZERO), Err(Error::DivideByZero)));
    }

    #[test]
    fn negative_exponents() {
        let f = Field::build(3, 5).unwrap();
        let a = f.antilog(6);
        assert_eq!(f.mul(f.pow(a, -3), f.pow(a, 3)), FieldElement::ONE);
    }

    #[test]
    fn subfield_membership() {
        let f = Field::build(3, 5).unwrap();
        assert!(f.in_subfield(FieldElement::ZERO, 2).unwrap());
        assert!(f.in_subfield(f.alpha(), 4).unwrap());
        // alpha^5 has order 3, so it lies in GF(4)
        let a5 = f.antilog(5);
        assert_eq!(f.element_order(a5).unwrap(), 3);
        assert!(f.in_subfield(a5, 2).unwrap());
        assert!(!f.in_subfield(f.alpha(), 2).unwrap());
        assert!(matches!(
            f.in_subfield(f.alpha(), 3),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn subfield_has_2_pow_d_members() {
        let f = Field::build(3, 5).unwrap();
        for d in [1u32, 2, 4] {
            let count = (0..16u32)
                .filter(|&v| f.in_subfield(FieldElement(v), d).unwrap())
                .count();
            assert_eq!(count, 1 << d, "GF(2^{d}) member count");
        }
    }

    #[test]
    fn subfield_basis_is_independent() {
        let f = Field::build(3, 5).unwrap();
        let basis = f.subfield_basis(2).unwrap();
        assert_eq!(basis.len(), 2);
        // all 4 GF(2)-combinations distinct and inside GF(4)
        let mut seen = std::collections::BTreeSet::new();
        for bits in 0..4u32 {
            let mut acc = FieldElement::ZERO;
            for (i, &b) in basis.iter().enumerate() {
                if bits >> i & 1 != 0 {
                    acc = f.add(acc, b);
                }
            }
            assert!(f.in_subfield(acc, 2).unwrap());
            seen.insert(acc);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn antilog_table_invariants() {
        let f = Field::build(3, 5).unwrap();
        for v in 1..16u32 {
            let x = FieldElement(v);
            assert_eq!(f.antilog(f.log(x).unwrap() as i64), x);
        }
        // periodicity
        assert_eq!(f.antilog(3), f.antilog(3 + f.order() as i64));
        // alpha generates all nonzero elements
        let all: std::collections::BTreeSet<_> =
            (0..f.order() as i64).map(|k| f.antilog(k)).collect();
        assert_eq!(all.len(), f.order());
    }

    #[test]
    fn smallest_primitive_polys_low_degrees() {
        assert_eq!(smallest_primitive_poly(1), 0b11);
        assert_eq!(smallest_primitive_poly(2), 0b111);
        assert_eq!(smallest_primitive_poly(3), 0b1011);
        assert_eq!(smallest_primitive_poly(4), 0b10011);
        assert_eq!(smallest_primitive_poly(8), 0x11D);
    }
}
