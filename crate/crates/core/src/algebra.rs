//! Finite-field arithmetic and the projective/symplectic machinery behind
//! the algebraic graph constructions.
//!
//! Fields `GF(p^e)` are represented as residue polynomials modulo a fixed
//! monic irreducible. Elements are plain value types; every operation takes
//! the parent field explicitly, so there is no global state and everything
//! is safe to use from parallel sweeps.

use crate::error::{Error, Result};

/// Deterministic Miller–Rabin, exact for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // This witness set decides primality for every n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Writes `q = p^e` with `p` prime, if possible.
pub fn as_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut f = 2u64;
    while f * f <= q {
        if q % f == 0 {
            p = f;
            break;
        }
        f += 1;
    }
    if !is_prime(p) {
        return None;
    }
    let mut e = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// The set `{x² mod p : x = 1..p−1}` for a prime `p ≡ 1 (mod 4)`.
///
/// The congruence condition makes −1 a residue, so the set is closed under
/// negation and the Paley construction stays undirected.
pub fn quadratic_residues(p: u64) -> Result<std::collections::BTreeSet<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::NotPaley(p));
    }
    Ok((1..p).map(|x| mul_mod(x, x, p)).collect())
}

/// An element of `GF(p^e)`: residue polynomial coefficients, degree < e,
/// each coefficient in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// `GF(p^e)` with a fixed monic irreducible modulus.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    e: u32,
    /// Coefficients of the modulus minus its monic leading term:
    /// `modulus = x^e + Σ modulus_low[i] x^i`.
    modulus_low: Vec<u64>,
}

impl FiniteField {
    /// Builds `GF(p^e)` with the lexicographically smallest monic
    /// irreducible modulus (coefficients compared from the constant term
    /// upward). For `e = 1` the modulus is `x`, i.e. plain `GF(p)`.
    pub fn new(p: u64, e: u32) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(e >= 1, "extension degree must be positive");
        let q = p.checked_pow(e).filter(|&q| q <= 1 << 16);
        let q = q.ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{e} exceeds the supported 2^16"))
        })?;
        let _ = q;
        let modulus_low = if e == 1 {
            vec![0]
        } else {
            find_irreducible(p, e).expect("an irreducible polynomial of every degree exists")
        };
        let field = FiniteField { p, e, modulus_low };
        field.spot_check_multiplicative_order();
        Ok(field)
    }

    /// A handful of fixed nonzero elements must satisfy `x^(q-1) = 1`.
    fn spot_check_multiplicative_order(&self) {
        let q = self.order();
        for idx in 1..q.min(9) {
            let x = self.element(idx);
            assert!(
                self.pow(&x, q - 1) == self.one(),
                "multiplicative group of GF({}^{}) has wrong order",
                self.p,
                self.e
            );
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    /// Field order `q = p^e`.
    pub fn order(&self) -> u64 {
        self.p.pow(self.e)
    }

    /// Modulus coefficients `[c_0, ..., c_{e-1}, 1]` including the monic term.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus_low.clone();
        m.push(1);
        m
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.e as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The element with base-`p` digit expansion `idx`; indices `0..q`
    /// enumerate the field in the canonical order used everywhere.
    pub fn element(&self, mut idx: u64) -> FieldElement {
        assert!(idx < self.order(), "element index out of range");
        let mut coeffs = vec![0u64; self.e as usize];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let e = self.e as usize;
        // schoolbook product, then reduce x^(e+i) via the modulus
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus_low.iter().enumerate() {
                // x^i = -modulus_low * x^(i-e)
                prod[i - e + j] = (prod[i - e + j] + c * (self.p - m) % self.p) % self.p;
            }
        }
        prod.truncate(e);
        FieldElement { coeffs: prod }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `x^(q-2)`.
    pub fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "zero has no inverse");
        self.pow(a, self.order() - 2)
    }

    /// Symplectic bilinear form `Σ_i (u_{2i} v_{2i+1} − u_{2i+1} v_{2i})`
    /// over pairs of coordinates; alternating and antisymmetric.
    pub fn symplectic_form(&self, u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement> {
        if u.len() != v.len() {
            return Err(Error::InvalidParameter(format!(
                "symplectic form needs equal lengths, got {} and {}",
                u.len(),
                v.len()
            )));
        }
        if u.len() % 2 != 0 || u.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "symplectic form needs a positive even dimension, got {}",
                u.len()
            )));
        }
        let mut acc = self.zero();
        for i in 0..u.len() / 2 {
            let a = self.mul(&u[2 * i], &v[2 * i + 1]);
            let b = self.mul(&u[2 * i + 1], &v[2 * i]);
            acc = self.add(&acc, &self.sub(&a, &b));
        }
        Ok(acc)
    }
}

/// Searches monic polynomials of degree `e` in lexicographic coefficient
/// order (constant term first) and returns the low coefficients of the
/// first irreducible one.
fn find_irreducible(p: u64, e: u32) -> Option<Vec<u64>> {
    let e = e as usize;
    let total = p.pow(e as u32);
    for idx in 0..total {
        let mut low = vec![0u64; e];
        // lexicographic order with the constant coefficient most significant
        let mut rest = idx;
        for c in low.iter_mut().rev() {
            *c = rest % p;
            rest /= p;
        }
        if is_irreducible(p, &low) {
            return Some(low);
        }
    }
    None
}

/// Trial division of `x^e + low` by every monic polynomial of degree
/// `1..=e/2` over `GF(p)`.
fn is_irreducible(p: u64, low: &[u64]) -> bool {
    let e = low.len();
    let mut poly = low.to_vec();
    poly.push(1);
    if e >= 1 && low[0] == 0 {
        return false; // divisible by x
    }
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut rest = idx;
            for c in div.iter_mut().take(d) {
                *c = rest % p;
                rest /= p;
            }
            div[d] = 1;
            if poly_rem_is_zero(p, &poly, &div) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u64, poly: &[u64], div: &[u64]) -> bool {
    let mut rem = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let offset = rem.len() - 1 - d;
            for (i, &c) in div.iter().enumerate() {
                rem[offset + i] = (rem[offset + i] + lead * (p - c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// A point of `PG(dim−1, q)`: nonzero coordinate vector normalized so the
/// first nonzero coordinate is 1. Two vectors name the same point exactly
/// when their normalized forms agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    /// Normalizes an arbitrary nonzero vector.
    pub fn normalize(field: &FiniteField, coords: &[FieldElement]) -> ProjectivePoint {
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("projective point needs a nonzero vector");
        let scale = field.inv(&coords[pivot]);
        ProjectivePoint {
            coords: coords.iter().map(|c| field.mul(c, &scale)).collect(),
        }
    }
}

/// All `(q^dim − 1)/(q − 1)` projective points in ascending lexicographic
/// order of their normalized coordinates (element indices compared
/// coordinate by coordinate).
pub fn projective_points(field: &FiniteField, dim: usize) -> Result<Vec<ProjectivePoint>> {
    assert!(dim >= 2, "projective enumeration needs dimension at least 2");
    let q = field.order() as u128;
    let count = (q.pow(dim as u32) - 1) / (q - 1);
    if count > 1 << 24 {
        return Err(Error::TooLarge(count, 1 << 24));
    }
    let mut points = Vec::with_capacity(count as usize);
    // ascending lex order = pivot in the last position first
    for pivot in (0..dim).rev() {
        let free = dim - 1 - pivot;
        let total = (field.order() as u128).pow(free as u32) as u64;
        for idx in 0..total {
            let mut coords = vec![field.zero(); dim];
            coords[pivot] = field.one();
            let mut rest = idx;
            // vary the last coordinate fastest
            for slot in (pivot + 1..dim).rev() {
                coords[slot] = field.element(rest % field.order());
                rest /= field.order();
            }
            points.push(ProjectivePoint { coords });
        }
    }
    debug_assert_eq!(points.len() as u128, count);
    Ok(points)
}
