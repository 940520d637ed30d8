//! Exact coefficient arithmetic.
//!
//! Three coefficient domains are supported, all with exact arithmetic and
//! canonical representations:
//!
//! * [`CoeffDomain::Rationals`] — arbitrary-precision rationals, always in
//!   lowest terms with positive denominator.
//! * [`CoeffDomain::PrimeField`] — integers modulo a prime `p`, residues
//!   canonically in `[0, p)`.
//! * [`CoeffDomain::NumberField`] — a simple extension `Q[w]/(m(w))` for a
//!   monic irreducible `m` of degree 2 or 3; elements are stored as
//!   coefficient vectors of length `deg m` in the power basis
//!   `1, w, ..., w^{deg m - 1}`.
//!
//! Elements carry their domain, and arithmetic between elements of
//! different domains panics (it is a programming error, not a data error).
//! Division by zero panics in the operator form; [`FieldElement::inv`] and
//! [`FieldElement::div_checked`] return errors instead.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A monic irreducible polynomial over the rationals, defining a number
/// field. Coefficients are little-endian and include the leading 1.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct MinimalPolynomial {
    coeffs: Vec<BigRational>,
}

impl MinimalPolynomial {
    /// Extension degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Little-endian coefficients, including the leading 1.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// A coefficient domain. Cheap to clone; number fields share their minimal
/// polynomial behind an `Arc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Rationals,
    PrimeField(u64),
    NumberField(Arc<MinimalPolynomial>),
}

impl CoeffDomain {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        CoeffDomain::Rationals
    }

    /// The prime field `F_p`. Fails if `p` is not prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoeffDomain::PrimeField(p))
    }

    /// A number field `Q[w]/(m(w))`. `min_poly` is the little-endian
    /// coefficient list of `m`, which must be monic of degree 2 or 3 and
    /// irreducible over the rationals (for these degrees, irreducible means
    /// no rational root).
    pub fn number_field(min_poly: Vec<BigRational>) -> Result<Self> {
        let degree = min_poly.len().saturating_sub(1);
        if !(2..=3).contains(&degree) || !min_poly.last().unwrap().is_one() {
            return Err(Error::UnsupportedExtensionDegree(degree));
        }
        if let Some(root) = rational_root(&min_poly) {
            return Err(Error::ReducibleMinimalPolynomial(format_rational(&root)));
        }
        Ok(CoeffDomain::NumberField(Arc::new(MinimalPolynomial {
            coeffs: min_poly,
        })))
    }

    /// The cyclotomic field `Q(w)` with `w^2 + w + 1 = 0`, i.e. `w` a
    /// primitive cube root of unity.
    pub fn qw() -> Self {
        let one = BigRational::one();
        CoeffDomain::number_field(vec![one.clone(), one.clone(), one]).unwrap()
    }

    /// Short human-readable name used in error messages and file headers.
    pub fn name(&self) -> String {
        match self {
            CoeffDomain::Rationals => "Q".into(),
            CoeffDomain::PrimeField(p) => format!("Fp {p}"),
            CoeffDomain::NumberField(m) if *self == CoeffDomain::qw() => {
                let _ = m;
                "Qw".into()
            }
            CoeffDomain::NumberField(m) => format!("Q[w]/(deg {})", m.degree()),
        }
    }

    /// Characteristic of the field (0 except for prime fields).
    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffDomain::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        let value = match self {
            CoeffDomain::Rationals => Value::Rational(BigRational::zero()),
            CoeffDomain::PrimeField(_) => Value::Residue(0),
            CoeffDomain::NumberField(m) => {
                Value::Extension(vec![BigRational::zero(); m.degree()])
            }
        };
        FieldElement {
            domain: self.clone(),
            value,
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let value = match self {
            CoeffDomain::Rationals => Value::Rational(BigRational::from(BigInt::from(n))),
            CoeffDomain::PrimeField(p) => Value::Residue(n.rem_euclid(*p as i64) as u64),
            CoeffDomain::NumberField(m) => {
                let mut v = vec![BigRational::zero(); m.degree()];
                v[0] = BigRational::from(BigInt::from(n));
                Value::Extension(v)
            }
        };
        FieldElement {
            domain: self.clone(),
            value,
        }
    }

    /// Embed a rational number. Fails for a prime field when the
    /// denominator is divisible by the characteristic.
    pub fn from_rational(&self, r: BigRational) -> Result<FieldElement> {
        let value = match self {
            CoeffDomain::Rationals => Value::Rational(r),
            CoeffDomain::PrimeField(p) => {
                let num = residue_of_bigint(r.numer(), *p);
                let den = residue_of_bigint(r.denom(), *p);
                if den == 0 {
                    return Err(Error::UnrepresentableElement(format!(
                        "denominator of {} vanishes modulo {p}",
                        format_rational(&r)
                    )));
                }
                Value::Residue(mul_mod(num, inv_mod(den, *p), *p))
            }
            CoeffDomain::NumberField(m) => {
                let mut v = vec![BigRational::zero(); m.degree()];
                v[0] = r;
                Value::Extension(v)
            }
        };
        Ok(FieldElement {
            domain: self.clone(),
            value,
        })
    }

    /// The extension generator `w`. Fails for non-extension domains.
    pub fn generator(&self) -> Result<FieldElement> {
        match self {
            CoeffDomain::NumberField(m) => {
                let mut v = vec![BigRational::zero(); m.degree()];
                v[1] = BigRational::one();
                Ok(FieldElement {
                    domain: self.clone(),
                    value: Value::Extension(v),
                })
            }
            _ => Err(Error::InvalidInput(format!(
                "domain {} has no extension generator",
                self.name()
            ))),
        }
    }

    /// Reduce an arbitrary-length polynomial expression in the generator
    /// (little-endian rational coefficients) to the canonical
    /// degree-`< deg m` form.
    pub fn element_from_generator_poly(&self, coeffs: &[BigRational]) -> Result<FieldElement> {
        match self {
            CoeffDomain::NumberField(m) => {
                let mut v = coeffs.to_vec();
                reduce_by_min_poly(&mut v, &m.coeffs);
                v.resize(m.degree(), BigRational::zero());
                Ok(FieldElement {
                    domain: self.clone(),
                    value: Value::Extension(v),
                })
            }
            _ => Err(Error::InvalidInput(format!(
                "domain {} is not an extension field",
                self.name()
            ))),
        }
    }

    /// Degree of the field over its prime field / base (1 unless an
    /// extension).
    pub fn extension_degree(&self) -> usize {
        match self {
            CoeffDomain::NumberField(m) => m.degree(),
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    Extension(Vec<BigRational>),
}

/// An element of a [`CoeffDomain`]. Always in canonical form: rationals in
/// lowest terms, residues in `[0, p)`, extension elements as fixed-length
/// power-basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    domain: CoeffDomain,
    value: Value,
}

impl FieldElement {
    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Extension(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
            Value::Extension(v) => v[0].is_one() && v[1..].iter().all(Zero::is_zero),
        }
    }

    /// The underlying rational for `Rationals` elements.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// The residue for prime-field elements.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Residue(r) => Some(*r),
            _ => None,
        }
    }

    /// Power-basis coordinates for extension elements.
    pub fn as_extension(&self) -> Option<&[BigRational]> {
        match &self.value {
            Value::Extension(v) => Some(v),
            _ => None,
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rational(r) => Value::Rational(r.recip()),
            Value::Residue(r) => {
                let p = self.domain.characteristic();
                Value::Residue(inv_mod(*r, p))
            }
            Value::Extension(v) => {
                let m = match &self.domain {
                    CoeffDomain::NumberField(m) => m,
                    _ => unreachable!(),
                };
                Value::Extension(extension_inverse(v, &m.coeffs))
            }
        };
        Ok(FieldElement {
            domain: self.domain.clone(),
            value,
        })
    }

    /// Checked division. Errors on a zero divisor.
    pub fn div_checked(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.domain.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the printed form needs no parentheses as a polynomial
    /// coefficient (single symbol, no interior sign).
    pub fn display_atomic(&self) -> bool {
        match &self.value {
            Value::Rational(r) => !r.is_negative(),
            Value::Residue(_) => true,
            Value::Extension(v) => {
                let nonzero = v.iter().filter(|c| !c.is_zero()).count();
                match nonzero {
                    0 => true,
                    1 => {
                        let (i, c) = v.iter().enumerate().find(|(_, c)| !c.is_zero()).unwrap();
                        !c.is_negative() && (i == 0 || c.is_one())
                    }
                    _ => false,
                }
            }
        }
    }

    fn require_same_domain(&self, other: &FieldElement) {
        if self.domain != other.domain {
            panic!(
                "coefficient domain mismatch: {} vs {}",
                self.domain.name(),
                other.domain.name()
            );
        }
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.require_same_domain(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.domain.characteristic();
                Value::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            (Value::Extension(a), Value::Extension(b)) => {
                Value::Extension(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        };
        FieldElement {
            domain: self.domain.clone(),
            value,
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let value = match &self.value {
            Value::Rational(r) => Value::Rational(-r),
            Value::Residue(r) => {
                let p = self.domain.characteristic();
                Value::Residue(if *r == 0 { 0 } else { p - *r })
            }
            Value::Extension(v) => Value::Extension(v.iter().map(|c| -c).collect()),
        };
        FieldElement {
            domain: self.domain.clone(),
            value,
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.require_same_domain(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(mul_mod(*a, *b, self.domain.characteristic()))
            }
            (Value::Extension(a), Value::Extension(b)) => {
                let m = match &self.domain {
                    CoeffDomain::NumberField(m) => m,
                    _ => unreachable!(),
                };
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                reduce_by_min_poly(&mut prod, &m.coeffs);
                prod.resize(m.degree(), BigRational::zero());
                Value::Extension(prod)
            }
            _ => unreachable!(),
        };
        FieldElement {
            domain: self.domain.clone(),
            value,
        }
    }
}

impl std::ops::Div for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.div_checked(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(r) => write!(f, "{}", format_rational(r)),
            Value::Residue(r) => write!(f, "{r}"),
            Value::Extension(v) => write!(f, "{}", format_generator_poly(v)),
        }
    }
}

/// Render a rational without a denominator when integral.
pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_generator_poly(v: &[BigRational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign_negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else if sign_negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if i > 0 && abs.is_one() {
            String::new()
        } else {
            format_rational(&abs)
        };
        let var_part = match i {
            0 => String::new(),
            1 => "w".into(),
            _ => format!("w^{i}"),
        };
        match (coeff_part.is_empty(), var_part.is_empty()) {
            (true, _) => out.push_str(&var_part),
            (_, true) => out.push_str(&coeff_part),
            _ => {
                out.push_str(&coeff_part);
                out.push('*');
                out.push_str(&var_part);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// In-place reduction of a little-endian coefficient vector by a monic
/// minimal polynomial.
fn reduce_by_min_poly(v: &mut Vec<BigRational>, m: &[BigRational]) {
    let d = m.len() - 1;
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - d;
        for (j, mj) in m[..d].iter().enumerate() {
            if !mj.is_zero() {
                let t = &top * mj;
                v[shift + j] -= t;
            }
        }
    }
    while v.len() < d {
        v.push(BigRational::zero());
    }
}

/// Inverse in `Q[t]/(m)` by the extended Euclidean algorithm on univariate
/// rational polynomials.
fn extension_inverse(v: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    // Bezout coefficients for gcd(v, m) = 1: s*v + t*m = g, inverse = s/g.
    let mut r0: Vec<BigRational> = trim(m.to_vec());
    let mut r1: Vec<BigRational> = trim(v.to_vec());
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, rem) = uni_divmod(&r0, &r1);
        let s_next = uni_sub(&s0, &uni_mul(&q, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = trim(s_next);
    }
    // r0 is a nonzero constant multiple of the gcd, which is 1.
    debug_assert_eq!(r0.len(), 1, "minimal polynomial must be irreducible");
    let g = r0[0].clone();
    let mut inv: Vec<BigRational> = s0.iter().map(|c| c / &g).collect();
    reduce_by_min_poly(&mut inv, m);
    let d = m.len() - 1;
    inv.resize(d, BigRational::zero());
    inv
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn uni_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let shift = rem.len() - b.len();
        let q = &top / lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &q * bj;
            rem[shift + j] -= t;
        }
        quot[shift] = q;
        rem.pop();
    }
    (trim(quot), trim(rem))
}

fn uni_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn uni_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// Rational root of a rational-coefficient polynomial, if any. Used as the
/// irreducibility test for degrees 2 and 3.
fn rational_root(coeffs: &[BigRational]) -> Option<BigRational> {
    // Clear denominators to a primitive integer polynomial.
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let a0 = ints.first()?.clone();
    let an = ints.last()?.clone();
    if a0.is_zero() {
        return Some(BigRational::zero());
    }
    let eval = |x: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    };
    for p in divisors(&a0.abs()) {
        for q in divisors(&an.abs()) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                if eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![];
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if &dd > n {
            break;
        }
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn residue_of_bigint(n: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero residue");
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin primality test, valid for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
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
