use std::fmt;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};

/// An element of GF(p^k), stored as its coefficient vector read as a
/// base-`p` integer: `c0 + c1*p + ... + c_{k-1}*p^(k-1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn raw(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Irreducible moduli for the extension fields we support, as coefficient
/// lists from the constant term up (monic). These are the Conway
/// polynomials, so `x` is a primitive element in each.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (5, 2, &[2, 4, 1]),
];

pub const MAX_PRIME_FIELD: u64 = 1 << 16;

/// GF(p^k) with fixed modulus and log/antilog tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    k: u32,
    size: u32,
    modulus: Vec<u32>,
    primitive: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::UnsupportedField { p, k });
        }
        let modulus: Vec<u32> = if k == 1 {
            if p >= MAX_PRIME_FIELD {
                return Err(Error::UnsupportedField { p, k });
            }
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|&&(mp, mk, _)| mp as u64 == p && mk == k)
                .map(|&(_, _, m)| m.to_vec())
                .ok_or(Error::UnsupportedField { p, k })?
        };
        let p = p as u32;
        let mut field =
            Field { p, k, size: p.pow(k), modulus, primitive: FieldElement::ONE, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    /// Field of `q` elements, `q` a prime power.
    pub fn of_size(q: u64) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or(Error::UnsupportedField { p: q, k: 1 })?;
        Field::new(p, k)
    }

    fn build_tables(&mut self) {
        let order = self.size - 1;
        let start = if self.k == 1 { 2.min(self.size - 1) } else { self.p };
        for candidate in start..self.size.max(start + 1) {
            let g = FieldElement(candidate % self.size);
            let mut exp = Vec::with_capacity(order as usize);
            let mut x = FieldElement::ONE;
            for _ in 0..order {
                exp.push(x.0);
                x = self.poly_mul(x, g);
                if x == FieldElement::ONE {
                    break;
                }
            }
            if exp.len() == order as usize {
                let mut log = vec![0; self.size as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.primitive = g;
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        // GF(2): the only nonzero element is 1
        self.primitive = FieldElement::ONE;
        self.exp = vec![1];
        self.log = vec![0, 0];
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Monic modulus coefficients from the constant term up.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(FieldElement)
    }

    pub fn from_raw(&self, raw: u32) -> Result<FieldElement> {
        if raw >= self.size {
            return Err(Error::Precondition(format!("{raw} is not an element of {self}")));
        }
        Ok(FieldElement(raw))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Precondition(format!("coefficients {coeffs:?} invalid for {self}")));
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)))
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let mut raw = a.0;
        (0..self.k)
            .map(|_| {
                let c = raw % self.p;
                raw /= self.p;
                c
            })
            .collect()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.size - 1;
        let e = (self.log[a.0 as usize] + self.log[b.0 as usize]) % n;
        FieldElement(self.exp[e as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        let n = self.size - 1;
        Some(FieldElement(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let n = (self.size - 1) as i64;
        let l = (self.log[a.0 as usize] as i64 * e).rem_euclid(n);
        FieldElement(self.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let n = (self.size - 1) as u64;
        Some(n / crate::arith::gcd(n, self.log[a.0 as usize] as u64))
    }

    /// `x -> x^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as i64)
    }

    /// Schoolbook multiplication modulo the defining polynomial; used to
    /// build the tables and as an independent check on them.
    pub fn poly_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p as u64;
        let k = self.k as usize;
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (k..2 * k).rev() {
            let lead = prod[d];
            if lead == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (p - lead) * m as u64) % p;
            }
        }
        let coeffs: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    /// Renders an element: an integer in prime fields, a coefficient tuple otherwise.
    pub fn display(&self, a: FieldElement) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let parts: Vec<String> = self.coefficients(a).iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &[(u64, u32)] = &[(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (5, 2)];

    #[test]
    fn sizes() {
        assert_eq!(Field::new(7, 1).unwrap().size(), 7);
        assert_eq!(Field::new(2, 5).unwrap().size(), 32);
        assert_eq!(Field::new(2, 1).unwrap().size(), 2);
        assert!(matches!(Field::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(Field::new(7, 3), Err(Error::UnsupportedField { .. })));
        assert!(Field::new(65521, 1).is_ok());
        assert!(Field::new(65537, 1).is_err());
    }

    #[test]
    fn table_moduli_are_irreducible_and_primitive() {
        for &(p, k) in TABLE {
            let f = Field::new(p, k).unwrap();
            // x has order p^k - 1, so every nonzero residue is a unit and the
            // modulus is irreducible
            assert_eq!(f.primitive_element().raw(), p as u32, "{f}");
            let x = f.primitive_element();
            assert_eq!(f.element_order(x), Some(f.size() as u64 - 1));
        }
    }

    #[test]
    fn gf9_primitive_order() {
        let f = Field::new(3, 2).unwrap();
        let g = f.primitive_element();
        let mut x = g;
        let mut n = 1;
        while x != f.one() {
            x = f.mul(x, g);
            n += 1;
        }
        assert_eq!(n, 8);
    }

    #[test]
    fn tables_agree_with_polynomial_multiplication() {
        for &(p, k) in TABLE.iter().chain(&[(7, 1), (13, 1)]) {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.poly_mul(a, b), "{f}");
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                assert_eq!(f.add(a, f.neg(a)), f.zero());
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for &(p, k) in TABLE.iter().chain(&[(31, 1)]) {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = f.frobenius(f.add(a, b));
                    let rhs = f.add(f.frobenius(a), f.frobenius(b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn coefficient_round_trip() {
        let f = Field::new(5, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coefficients(&f.coefficients(a)).unwrap(), a);
        }
        assert!(f.from_coefficients(&[5]).is_err());
        assert_eq!(f.display(f.from_coefficients(&[3, 1]).unwrap()), "(3,1)");
    }
}
