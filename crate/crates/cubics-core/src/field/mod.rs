//! Exact field arithmetic: prime fields `F_p`, extensions `GF(p^m)` with an
//! explicit modulus polynomial, tower embeddings `GF(q) -> GF(q^e)`, and
//! arbitrary-precision rationals.
//!
//! Finite-field elements are polynomials of degree `< m` over `F_p`, always
//! reduced modulo the modulus; rationals are kept in lowest terms. Equality
//! of representations is equality of elements.

pub mod poly;
pub mod table;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Default cap on `q^e` for exhaustive enumerations.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

#[derive(Debug)]
enum CtxInner {
    Finite {
        p: u64,
        m: usize,
        /// Monic modulus, coefficients constant-first, length `m + 1`.
        modulus: Vec<u64>,
        enum_cap: u64,
    },
    Rational,
}

/// A field: `GF(p^m)` with a fixed modulus polynomial, or `Q`.
///
/// Cheap to clone (shared handle). Two contexts are equal when they
/// describe the same field with the same modulus.
#[derive(Debug, Clone)]
pub struct FieldCtx(Arc<CtxInner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (
                CtxInner::Finite { p: p1, m: m1, modulus: f1, .. },
                CtxInner::Finite { p: p2, m: m2, modulus: f2, .. },
            ) => p1 == p2 && m1 == m2 && f1 == f2,
            (CtxInner::Rational, CtxInner::Rational) => true,
            _ => false,
        }
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// The rational field `Q`.
    pub fn rational() -> Self {
        FieldCtx(Arc::new(CtxInner::Rational))
    }

    /// Builds `GF(p^m)`. When `modulus` is `None` the deterministically
    /// first irreducible monic polynomial is chosen (coefficient tuples
    /// compared leading-coefficient first), so `GF(4)` is always
    /// `F_2[w]/(w^2+w+1)`.
    ///
    /// `modulus` is given constant-coefficient first, with or without the
    /// leading 1 (length `m` or `m + 1`).
    pub fn finite(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(m >= 1, "extension degree must be >= 1");
        if m > 1 {
            // Extensions are validated by exhaustive factor search, so the
            // field itself must be enumerable.
            let q = checked_pow(p, m as u32).ok_or(Error::CapExceeded {
                needed: (p as u128).pow(m as u32),
                cap: DEFAULT_ENUM_CAP,
            })?;
            if q > DEFAULT_ENUM_CAP {
                return Err(Error::CapExceeded { needed: q as u128, cap: DEFAULT_ENUM_CAP });
            }
        }
        let modulus = match modulus {
            Some(coeffs) => {
                let mut v: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
                if v.len() == m {
                    v.push(1);
                }
                if v.len() != m + 1 || v[m] != 1 {
                    return Err(Error::ReducibleModulus);
                }
                if m > 1 && !is_irreducible(p, &v) {
                    return Err(Error::ReducibleModulus);
                }
                v
            }
            None => first_irreducible(p, m),
        };
        Ok(FieldCtx(Arc::new(CtxInner::Finite { p, m, modulus, enum_cap: DEFAULT_ENUM_CAP })))
    }

    /// Same field with a different enumeration cap.
    pub fn with_enum_cap(&self, cap: u64) -> Self {
        match &*self.0 {
            CtxInner::Finite { p, m, modulus, .. } => FieldCtx(Arc::new(CtxInner::Finite {
                p: *p,
                m: *m,
                modulus: modulus.clone(),
                enum_cap: cap,
            })),
            CtxInner::Rational => self.clone(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(&*self.0, CtxInner::Rational)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rational()
    }

    /// Characteristic `p`, or 0 for `Q`.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            CtxInner::Finite { p, .. } => *p,
            CtxInner::Rational => 0,
        }
    }

    /// Extension degree `m` over the prime field (1 for `Q` by convention).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            CtxInner::Finite { m, .. } => *m,
            CtxInner::Rational => 1,
        }
    }

    /// Field size `q = p^m` for finite contexts.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            CtxInner::Finite { p, m, .. } => checked_pow(*p, *m as u32),
            CtxInner::Rational => None,
        }
    }

    /// Modulus coefficients, constant first, length `m + 1`.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            CtxInner::Finite { modulus, .. } => Some(modulus),
            CtxInner::Rational => None,
        }
    }

    pub fn enum_cap(&self) -> u64 {
        match &*self.0 {
            CtxInner::Finite { enum_cap, .. } => *enum_cap,
            CtxInner::Rational => DEFAULT_ENUM_CAP,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match &*self.0 {
            CtxInner::Finite { m, .. } => {
                FieldElement { ctx: self.clone(), repr: Repr::Finite(vec![0; *m]) }
            }
            CtxInner::Rational => {
                FieldElement { ctx: self.clone(), repr: Repr::Rational(BigRational::zero()) }
            }
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    /// Embeds a signed integer (reduces mod p in finite contexts).
    pub fn from_integer(&self, n: i64) -> FieldElement {
        match &*self.0 {
            CtxInner::Finite { p, m, .. } => {
                let mut c = vec![0u64; *m];
                c[0] = n.rem_euclid(*p as i64) as u64;
                FieldElement { ctx: self.clone(), repr: Repr::Finite(c) }
            }
            CtxInner::Rational => FieldElement {
                ctx: self.clone(),
                repr: Repr::Rational(BigRational::from_integer(BigInt::from(n))),
            },
        }
    }

    /// The exact rational `n / d`.
    pub fn from_ratio(&self, n: i64, d: i64) -> Result<FieldElement> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        match &*self.0 {
            CtxInner::Rational => Ok(FieldElement {
                ctx: self.clone(),
                repr: Repr::Rational(BigRational::new(BigInt::from(n), BigInt::from(d))),
            }),
            CtxInner::Finite { .. } => self.from_integer(n).checked_div(&self.from_integer(d)),
        }
    }

    /// Element with the given polynomial coefficients (constant first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        match &*self.0 {
            CtxInner::Finite { p, m, .. } => {
                if coeffs.len() > *m {
                    return Err(Error::BadFieldLiteral(String::from("degree too large")));
                }
                let mut c = vec![0u64; *m];
                for (i, &x) in coeffs.iter().enumerate() {
                    c[i] = x % p;
                }
                Ok(FieldElement { ctx: self.clone(), repr: Repr::Finite(c) })
            }
            CtxInner::Rational => Err(Error::RationalCtx),
        }
    }

    /// The extension generator `w` (errors for prime fields and `Q`).
    pub fn generator(&self) -> Result<FieldElement> {
        match &*self.0 {
            CtxInner::Finite { m, .. } if *m >= 2 => self.from_coeffs(&[0, 1]),
            CtxInner::Finite { .. } => {
                Err(Error::BadFieldLiteral(String::from("w is not defined in a prime field")))
            }
            CtxInner::Rational => Err(Error::RationalCtx),
        }
    }

    /// The element with the given enumeration index (base-p digit vector,
    /// constant coefficient least significant). Indices run `0..q`.
    pub fn element_from_index(&self, index: u64) -> Result<FieldElement> {
        match &*self.0 {
            CtxInner::Finite { p, m, .. } => {
                let mut c = vec![0u64; *m];
                let mut k = index;
                for digit in c.iter_mut() {
                    *digit = k % p;
                    k /= p;
                }
                assert_eq!(k, 0, "element index out of range");
                Ok(FieldElement { ctx: self.clone(), repr: Repr::Finite(c) })
            }
            CtxInner::Rational => Err(Error::RationalCtx),
        }
    }

    /// Inverse of `element_from_index`.
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        match (&*self.0, &a.repr) {
            (CtxInner::Finite { p, .. }, Repr::Finite(c)) => {
                let mut k = 0u64;
                for &digit in c.iter().rev() {
                    k = k * p + digit;
                }
                k
            }
            _ => panic!("index_of requires a finite field element"),
        }
    }

    /// All field elements in canonical enumeration order.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        let q = self.order().ok_or(Error::RationalCtx)?;
        if q > self.enum_cap() {
            return Err(Error::CapExceeded { needed: q as u128, cap: self.enum_cap() });
        }
        (0..q).map(|k| self.element_from_index(k)).collect()
    }

    /// Short display form, e.g. `GF(4)` or `Q`.
    pub fn name(&self) -> String {
        use alloc::format;
        match &*self.0 {
            CtxInner::Finite { p, m, .. } => {
                if *m == 1 {
                    format!("GF({p})")
                } else {
                    format!("GF({p}^{m})")
                }
            }
            CtxInner::Rational => String::from("Q"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Coefficients of a polynomial of degree `< m`, constant first,
    /// length exactly `m`, each reduced mod `p`.
    Finite(Vec<u64>),
    /// Reduced fraction, positive denominator (kept canonical by
    /// `num-rational`).
    Rational(BigRational),
}

/// An element of a [`FieldCtx`]. Immutable value; canonical representation,
/// so derived equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: FieldCtx,
    repr: Repr,
}

impl FieldElement {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Finite(c) => c.iter().all(|&x| x == 0),
            Repr::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Finite(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
            Repr::Rational(r) => r.is_one(),
        }
    }

    /// Coefficient vector over `F_p` (constant first), for finite elements.
    pub fn coeffs(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Finite(c) => Some(c),
            Repr::Rational(_) => None,
        }
    }

    pub fn rational_value(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Finite(_) => None,
        }
    }

    fn ctx_finite(&self) -> (u64, usize, &[u64]) {
        match &*self.ctx.0 {
            CtxInner::Finite { p, m, modulus, .. } => (*p, *m, modulus),
            CtxInner::Rational => unreachable!("finite op on rational element"),
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        assert!(self.ctx == other.ctx, "field context mismatch");
        match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => {
                let (p, _, _) = self.ctx_finite();
                let c = a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect();
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Finite(c) }
            }
            (Repr::Rational(a), Repr::Rational(b)) => {
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Rational(a + b) }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match &self.repr {
            Repr::Finite(a) => {
                let (p, _, _) = self.ctx_finite();
                let c = a.iter().map(|&x| (p - x) % p).collect();
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Finite(c) }
            }
            Repr::Rational(a) => {
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Rational(-a) }
            }
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        assert!(self.ctx == other.ctx, "field context mismatch");
        match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => {
                let (p, m, modulus) = self.ctx_finite();
                let mut prod = vec![0u64; 2 * m - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = addmul(prod[i + j], x, y, p);
                    }
                }
                reduce_mod_modulus(&mut prod, modulus, p);
                prod.truncate(m);
                prod.resize(m, 0);
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Finite(prod) }
            }
            (Repr::Rational(a), Repr::Rational(b)) => {
                FieldElement { ctx: self.ctx.clone(), repr: Repr::Rational(a * b) }
            }
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr {
            Repr::Rational(a) => Ok(FieldElement {
                ctx: self.ctx.clone(),
                repr: Repr::Rational(a.recip()),
            }),
            Repr::Finite(a) => {
                let (p, m, modulus) = self.ctx_finite();
                if m == 1 {
                    let inv = mod_inverse(a[0], p);
                    return Ok(FieldElement { ctx: self.ctx.clone(), repr: Repr::Finite(vec![inv]) });
                }
                // Extended Euclid in F_p[x] against the modulus.
                let mut r0: Vec<u64> = modulus.to_vec();
                let mut r1: Vec<u64> = a.clone();
                trim(&mut r1);
                let mut s0: Vec<u64> = vec![];
                let mut s1: Vec<u64> = vec![1];
                while !r1.is_empty() {
                    let (qt, rem) = poly_divrem(&r0, &r1, p);
                    let s2 = poly_sub(&s0, &poly_mul(&qt, &s1, p), p);
                    r0 = r1;
                    r1 = rem;
                    s0 = s1;
                    s1 = s2;
                }
                // r0 = gcd, a nonzero constant since the modulus is irreducible.
                debug_assert_eq!(r0.len(), 1);
                let scale = mod_inverse(r0[0], p);
                let mut c: Vec<u64> = s0.iter().map(|&x| mulmod(x, scale, p)).collect();
                c.resize(m, 0);
                Ok(FieldElement { ctx: self.ctx.clone(), repr: Repr::Finite(c) })
            }
        }
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.ctx != other.ctx {
            return Err(Error::CtxMismatch);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^times)`; finite fields only. `times` may be any integer, the
    /// Frobenius has order `m`.
    pub fn frobenius(&self, times: u64) -> Result<FieldElement> {
        match &*self.ctx.0 {
            CtxInner::Rational => Err(Error::RationalCtx),
            CtxInner::Finite { p, m, .. } => {
                let t = times % (*m as u64);
                if t == 0 {
                    return Ok(self.clone());
                }
                // p^t <= q, which fits u64 whenever m >= 2; m == 1 has t == 0.
                let e = checked_pow(*p, t as u32).expect("p^t overflow");
                Ok(self.pow(e))
            }
        }
    }
}

/// Canonical total order: by enumeration index for finite elements, by
/// value for rationals. Only meaningful within one context.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => {
                a.iter().rev().cmp(b.iter().rev())
            }
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Finite(_), Repr::Rational(_)) => Ordering::Less,
            (Repr::Rational(_), Repr::Finite(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElement {
    /// Prime fields print as integers, extensions as polynomials in `w`
    /// (descending powers), rationals as `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Finite(c) => {
                if self.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, &coeff) in c.iter().enumerate().rev() {
                    if coeff == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{coeff}")?,
                        1 => {
                            if coeff == 1 {
                                write!(f, "w")?
                            } else {
                                write!(f, "{coeff}*w")?
                            }
                        }
                        _ => {
                            if coeff == 1 {
                                write!(f, "w^{k}")?
                            } else {
                                write!(f, "{coeff}*w^{k}")?
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// The spec-level checked arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic: verifies the contexts match and that division is by
/// a nonzero element.
pub fn arithmetic(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.ctx != b.ctx {
        return Err(Error::CtxMismatch);
    }
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.checked_div(b),
    }
}

/// A ring embedding `GF(q) -> GF(q^e)`, stored as the image of the source
/// generator. Verified at construction: the image is a root of the source
/// modulus, which makes the induced map a homomorphism.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: FieldCtx,
    target: FieldCtx,
    /// Images of the source basis 1, w, w^2, ..., w^(m-1) in the target.
    basis_images: Vec<FieldElement>,
}

impl Embedding {
    /// Identity embedding of a finite field into itself.
    pub fn identity(ctx: &FieldCtx) -> Self {
        let m = ctx.degree();
        let w = if m >= 2 { ctx.generator().unwrap() } else { ctx.one() };
        let mut basis_images = Vec::with_capacity(m);
        let mut acc = ctx.one();
        for _ in 0..m {
            basis_images.push(acc.clone());
            acc = acc.mul(&w);
        }
        Embedding { source: ctx.clone(), target: ctx.clone(), basis_images }
    }

    /// Builds the canonical embedding by locating the first root (in
    /// enumeration order) of the source modulus inside the target.
    pub fn new(source: &FieldCtx, target: &FieldCtx) -> Result<Self> {
        let (p, m) = (source.characteristic(), source.degree());
        let (tp, tm) = (target.characteristic(), target.degree());
        if p == 0 || tp == 0 {
            return Err(Error::RationalCtx);
        }
        assert_eq!(p, tp, "embedding requires equal characteristic");
        assert!(tm % m == 0, "no embedding: source degree does not divide target degree");
        if source == target {
            return Ok(Embedding::identity(source));
        }
        if m == 1 {
            // Prime subfield embeds canonically.
            let mut e = Embedding::identity(target);
            e.source = source.clone();
            e.basis_images.truncate(1);
            return Ok(e);
        }
        let q_t = target.order().ok_or(Error::RationalCtx)? as u128;
        if q_t > target.enum_cap() as u128 {
            return Err(Error::CapExceeded { needed: q_t, cap: target.enum_cap() });
        }
        let modulus = source.modulus().unwrap();
        let img = find_modulus_root(modulus, target)?;
        let mut basis_images = Vec::with_capacity(m);
        let mut acc = target.one();
        for _ in 0..m {
            basis_images.push(acc.clone());
            acc = acc.mul(&img);
        }
        Ok(Embedding { source: source.clone(), target: target.clone(), basis_images })
    }

    pub fn source(&self) -> &FieldCtx {
        &self.source
    }

    pub fn target(&self) -> &FieldCtx {
        &self.target
    }

    /// Image of the source generator.
    pub fn generator_image(&self) -> &FieldElement {
        self.basis_images.get(1).unwrap_or(&self.basis_images[0])
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(*a.ctx() == self.source, "embedding applied to foreign element");
        let coeffs = a.coeffs().expect("finite element");
        let mut acc = self.target.zero();
        for (c, img) in coeffs.iter().zip(&self.basis_images) {
            if *c != 0 {
                acc = acc.add(&img.mul(&self.target.from_integer(*c as i64)));
            }
        }
        acc
    }
}

/// Canonical extension `GF(q^e)` of a finite field, together with the
/// embedding. For `q = p^m` the result is `GF(p^(m*e))` with the
/// deterministic default modulus, so independently constructed extensions
/// agree.
pub fn extension(ctx: &FieldCtx, e: usize) -> Result<(FieldCtx, Embedding)> {
    let p = ctx.characteristic();
    if p == 0 {
        return Err(Error::RationalCtx);
    }
    if e == 1 {
        return Ok((ctx.clone(), Embedding::identity(ctx)));
    }
    let m = ctx.degree();
    let q_e = (ctx.order().unwrap() as u128).pow(e as u32);
    if q_e > ctx.enum_cap() as u128 {
        return Err(Error::CapExceeded { needed: q_e, cap: ctx.enum_cap() });
    }
    let target = FieldCtx::finite(p, m * e, None)?.with_enum_cap(ctx.enum_cap());
    let emb = Embedding::new(ctx, &target)?;
    Ok((target, emb))
}

/// First root of `modulus` (a polynomial over F_p, constant first) in the
/// target field, scanning elements in enumeration order.
fn find_modulus_root(modulus: &[u64], target: &FieldCtx) -> Result<FieldElement> {
    let q = target.order().ok_or(Error::RationalCtx)?;
    let coeffs: Vec<FieldElement> =
        modulus.iter().map(|&c| target.from_integer(c as i64)).collect();
    for k in 0..q {
        let x = target.element_from_index(k)?;
        // Horner evaluation.
        let mut acc = target.zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(&x).add(c);
        }
        if acc.is_zero() {
            return Ok(x);
        }
    }
    unreachable!("an irreducible polynomial of degree d splits in GF(p^(d*k))")
}

// ---- small modular helpers ----

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addmul(acc: u64, a: u64, b: u64, p: u64) -> u64 {
    ((acc as u128 + a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a != 0.
    debug_assert!(a % p != 0);
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == sp {
            return true;
        }
        if n % sp == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        r += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---- dense F_p[x] helpers (coefficients constant-first, no trailing zeros) ----

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addmul(out[i + j], x, y, p);
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

/// Division with remainder in F_p[x]; `b` nonzero.
fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem: Vec<u64> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = mod_inverse(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let factor = mulmod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = factor;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = (rem[shift + i] + p - mulmod(factor, bc, p)) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Reduces `v` (constant-first) modulo the monic `modulus` in place.
fn reduce_mod_modulus(v: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let m = modulus.len() - 1;
    while v.len() > m {
        let lead = *v.last().unwrap();
        let shift = v.len() - 1 - m;
        if lead != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                v[shift + i] = (v[shift + i] + p - mulmod(lead, mc, p)) % p;
            }
        }
        v.pop();
    }
}

/// Irreducibility over F_p by exhaustive trial division (degrees are tiny).
fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let m = modulus.len() - 1;
    if modulus[0] == 0 {
        return m == 1;
    }
    for d in 1..=m / 2 {
        // All monic divisor candidates of degree d.
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut cand = vec![0u64; d + 1];
            let mut t = k;
            for c in cand.iter_mut().take(d) {
                *c = t % p;
                t /= p;
            }
            cand[d] = 1;
            let (_, rem) = poly_divrem(modulus, &cand, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

/// First irreducible monic polynomial of degree `m` over `F_p`, comparing
/// non-leading coefficient tuples `(c_{m-1}, ..., c_0)` lexicographically.
fn first_irreducible(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        // x itself; prime fields never consult the modulus.
        return vec![0, 1];
    }
    let count = p.pow(m as u32);
    for k in 0..count {
        let mut cand = vec![0u64; m + 1];
        let mut t = k;
        // Leading-significant digit order: k's high digits set high-degree
        // coefficients.
        for i in 0..m {
            cand[m - 1 - i] = {
                let digit = t / p.pow((m - 1 - i) as u32) % p;
                digit
            };
            let _ = t;
        }
        // Rebuild cleanly: digit i (from most significant) -> coeff m-1-i.
        let mut digits = vec![0u64; m];
        t = k;
        for i in (0..m).rev() {
            digits[i] = t % p;
            t /= p;
        }
        for i in 0..m {
            cand[m - 1 - i] = digits[i];
        }
        cand[m] = 1;
        if is_irreducible(p, &cand) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_default_modulus() {
        let gf4 = FieldCtx::finite(2, 2, None).unwrap();
        assert_eq!(gf4.modulus().unwrap(), &[1, 1, 1]);
        let w = gf4.generator().unwrap();
        // w * w = w + 1 because w^2 + w + 1 = 0.
        let w2 = w.mul(&w);
        assert_eq!(w2, gf4.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn reducible_modulus_rejected() {
        // (w+1)^2 = w^2 + 1 over F_2.
        assert_eq!(FieldCtx::finite(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus));
    }

    #[test]
    fn not_prime_rejected() {
        assert_eq!(FieldCtx::finite(6, 1, None), Err(Error::NotPrime(6)));
        assert!(FieldCtx::finite(3, 1, None).is_ok());
    }

    #[test]
    fn gf8_default_modulus_is_conventional() {
        let gf8 = FieldCtx::finite(2, 3, None).unwrap();
        // w^3 + w + 1 precedes w^3 + w^2 + 1 in the chosen order.
        assert_eq!(gf8.modulus().unwrap(), &[1, 1, 0, 1]);
    }

    #[test]
    fn prime_field_division() {
        let f5 = FieldCtx::finite(5, 1, None).unwrap();
        let three = f5.from_integer(3);
        let two = f5.from_integer(2);
        assert_eq!(three.checked_div(&two).unwrap(), f5.from_integer(4));
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldCtx::rational();
        let a = q.from_ratio(1, 17).unwrap();
        let b = q.from_ratio(4, 17).unwrap();
        assert_eq!(a.add(&b), q.from_ratio(5, 17).unwrap());
        assert_eq!(arithmetic(&a, &b, ArithOp::Add).unwrap(), q.from_ratio(5, 17).unwrap());
    }

    #[test]
    fn ctx_mismatch_detected() {
        let f2 = FieldCtx::finite(2, 1, None).unwrap();
        let f3 = FieldCtx::finite(3, 1, None).unwrap();
        let r = arithmetic(&f2.one(), &f3.one(), ArithOp::Add);
        assert_eq!(r, Err(Error::CtxMismatch));
    }

    #[test]
    fn division_by_zero() {
        let f5 = FieldCtx::finite(5, 1, None).unwrap();
        assert_eq!(f5.one().checked_div(&f5.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_on_gf4() {
        let gf4 = FieldCtx::finite(2, 2, None).unwrap();
        let w = gf4.generator().unwrap();
        let w_plus_1 = gf4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(w.frobenius(1).unwrap(), w_plus_1);
        assert_eq!(w.frobenius(2).unwrap(), w);
        let f5 = FieldCtx::finite(5, 1, None).unwrap();
        let three = f5.from_integer(3);
        assert_eq!(three.frobenius(1).unwrap(), three);
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, m) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)] {
            let f = FieldCtx::finite(p, m, None).unwrap();
            let q = f.order().unwrap();
            let elems = f.elements().unwrap();
            for a in &elems {
                // a^q = a
                assert_eq!(a.pow(q), *a, "a^q = a fails in GF({q})");
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
                for b in &elems {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &elems {
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                        assert_eq!(a.add(&b.add(c)), a.add(b).add(c));
                        assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_fixes_subfield() {
        let gf4 = FieldCtx::finite(2, 2, None).unwrap();
        let (gf16, emb) = extension(&gf4, 2).unwrap();
        assert_eq!(gf16.order(), Some(16));
        // Homomorphism on a sample: (a+b)^phi = a^phi + b^phi, (ab)^phi = ...
        let elems = gf4.elements().unwrap();
        for a in &elems {
            for b in &elems {
                assert_eq!(emb.apply(&a.add(b)), emb.apply(a).add(&emb.apply(b)));
                assert_eq!(emb.apply(&a.mul(b)), emb.apply(a).mul(&emb.apply(b)));
            }
            // frobenius^m of the source fixes embedded elements
            let img = emb.apply(a);
            assert_eq!(img.frobenius(2).unwrap(), img);
        }
    }

    #[test]
    fn element_ordering_and_index() {
        let gf9 = FieldCtx::finite(3, 2, None).unwrap();
        let elems = gf9.elements().unwrap();
        assert_eq!(elems.len(), 9);
        for (k, e) in elems.iter().enumerate() {
            assert_eq!(gf9.index_of(e), k as u64);
        }
        let mut sorted = elems.clone();
        sorted.sort();
        assert_eq!(sorted, elems);
    }

    #[test]
    fn element_display() {
        let gf4 = FieldCtx::finite(2, 2, None).unwrap();
        use alloc::string::ToString;
        assert_eq!(gf4.generator().unwrap().to_string(), "w");
        assert_eq!(gf4.from_coeffs(&[1, 1]).unwrap().to_string(), "w+1");
        let q = FieldCtx::rational();
        assert_eq!(q.from_ratio(-3, 6).unwrap().to_string(), "-1/2");
    }
}
