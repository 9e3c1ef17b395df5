use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::is_prime;

/// Default bound on the field order accepted by [`FiniteField::new`].
pub const DEFAULT_MAX_ORDER: u64 = 256;

/// Hard ceiling for [`FiniteField::with_max_order`]; the arithmetic tables
/// are `order^2` entries each.
pub const HARD_MAX_ORDER: u64 = 1024;

/// An element of a [`FiniteField`], stored as the integer `sum c_i p^i` of its
/// polynomial-basis coefficients (low degree first).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// The finite field `F_{p^m}` in a polynomial basis, with full addition and
/// multiplication tables.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    order: u32,
    /// Monic, low degree first, length `m + 1`.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// `F_{p^m}` with the canonical modulus, order at most [`DEFAULT_MAX_ORDER`].
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_max_order(p, m, DEFAULT_MAX_ORDER)
    }

    pub fn with_max_order(p: u64, m: u32, max_order: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let max = max_order.min(HARD_MAX_ORDER);
        let order = (1..=m).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&v| v <= max));
        let order = match order {
            Some(o) if m >= 1 => o,
            _ if m == 0 => return Err(Error::BadRange("extension degree must be >= 1".into())),
            _ => return Err(Error::DegreeTooLarge { p, m, max }),
        };
        let p = p as u32;
        let modulus = canonical_modulus(p, m);
        Ok(Self::build(p, m, order as u32, modulus))
    }

    /// `F_order`, where `order` must be a prime power within the default bound.
    pub fn of_order(order: u64) -> Result<Self> {
        let (p, m) = crate::exactnum::require_prime_power(order)?;
        Self::new(p, m)
    }

    fn build(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Self {
        let q = order as usize;
        let to_poly = |x: usize| {
            let mut v = vec![0u32; m as usize];
            let mut x = x as u32;
            for c in v.iter_mut() {
                *c = x % p;
                x /= p;
            }
            v
        };
        let from_poly = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16;
        let polys: Vec<Vec<u32>> = (0..q).map(to_poly).collect();

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = polys[a].iter().zip(&polys[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = from_poly(&s);
                mul[a * q + b] = from_poly(&poly_mulmod(&polys[a], &polys[b], &modulus, p));
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16
                }
            })
            .collect();
        FiniteField {
            p,
            m,
            order,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Elements in their fixed enumeration order (by integer encoding).
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order as u16).map(FieldElem)
    }

    pub fn elem(&self, index: u64) -> FieldElem {
        assert!(index < self.order as u64, "element index out of range");
        FieldElem(index as u16)
    }

    /// Element with the given polynomial coefficients (low degree first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElem {
        assert!(coeffs.len() <= self.m as usize);
        let v = coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c % self.p);
        FieldElem(v as u16)
    }

    pub fn coeffs(&self, x: FieldElem) -> Vec<u32> {
        let mut v = vec![0u32; self.m as usize];
        let mut r = x.0 as u32;
        for c in v.iter_mut() {
            *c = r % self.p;
            r /= self.p;
        }
        v
    }

    /// The image of an integer under `Z -> F_p -> F_{p^m}`.
    pub fn from_int(&self, x: i64) -> FieldElem {
        FieldElem(x.rem_euclid(self.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.index() * self.order as usize + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.index() * self.order as usize + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.index()])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (!a.is_zero()).then(|| FieldElem(self.inv[a.index()]))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The subfield order `q` with `q^2 = Q`, if the field has even degree.
    pub fn hermitian_subfield_order(&self) -> Option<u64> {
        self.m.is_multiple_of(2).then(|| (self.p as u64).pow(self.m / 2))
    }

    /// The Frobenius map `x -> x^q`, where `q` must satisfy `q^2 = Q`.
    pub fn frobenius(&self, x: FieldElem, q: u64) -> Result<FieldElem> {
        if self.hermitian_subfield_order() != Some(q) {
            return Err(Error::BadSubfieldOrder { q, order: self.order() });
        }
        Ok(self.pow(x, q))
    }

    /// Quadratic character: `+1` on nonzero squares, `-1` on non-squares, `0` on
    /// zero. Computed as `x^((Q-1)/2)`.
    pub fn quadratic_character(&self, x: FieldElem) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic(self.order()));
        }
        if x.is_zero() {
            return Ok(0);
        }
        let r = self.pow(x, (self.order as u64 - 1) / 2);
        if r == FieldElem::ONE {
            Ok(1)
        } else {
            debug_assert_eq!(r, self.neg(FieldElem::ONE));
            Ok(-1)
        }
    }
}

/// Product of two polynomials over `F_p` reduced modulo a monic `modulus`.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (j, &mc) in modulus.iter().enumerate() {
                let idx = d - m + j;
                prod[idx] = (prod[idx] + p * p - c * mc % p) % p;
            }
        }
    }
    prod.truncate(m);
    prod.resize(m, 0);
    prod
}

/// Remainder of `a` modulo a monic `b` over `F_p`; both low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - db;
            for (j, &bc) in b[..db].iter().enumerate() {
                r[shift + j] = (r[shift + j] + p * p - lead * bc % p) % p;
            }
        }
    }
    r
}

/// Monic polynomials of degree `d`, low degree first, in lexicographic order of
/// their coefficient vectors compared from the constant term upwards.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d);
    (0..count).map(move |mut idx| {
        let mut v = vec![0u32; d as usize + 1];
        for c in v[..d as usize].iter_mut().rev() {
            *c = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        v[d as usize] = 1;
        v
    })
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|f| poly_rem(poly, &f, p).iter().any(|&c| c != 0)))
}

/// The lexicographically smallest monic irreducible polynomial of degree `m`.
pub fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists for every degree")
}
