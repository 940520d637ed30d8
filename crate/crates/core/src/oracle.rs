//! Independent linear-algebra engine for fat point computations.
//!
//! A form of degree `d` lies in the ideal of a fat point scheme exactly
//! when all its partial derivatives of order below each point's
//! multiplicity vanish at that point. Working over a field of
//! characteristic zero (or larger than `d`), iterating the Euler relation
//! shows the derivatives indexed by multi-indices that avoid the point's
//! pivot coordinate already imply the rest, so each point of multiplicity
//! `m` contributes exactly `C(m-1+N, N)` condition rows in projective
//! `N`-space. The dimension of the degree-`d` piece is the corank of the
//! resulting conditions matrix.
//!
//! Everything here is certified without trusting any single modular
//! image:
//!
//! * ranks computed modulo a prime only ever undershoot the true rank, so
//!   a full-rank modular image **proves** full rank in characteristic 0;
//! * kernel dimensions are certified by reconstructing candidate kernel
//!   vectors from modular images (CRT plus rational reconstruction) and
//!   verifying `M v = 0` in exact arithmetic - the modular data only
//!   guides the search, the exact verification is the proof;
//! * span membership over the rationals or a number field is decided by
//!   an exactly verified solution vector (member) or an exactly verified
//!   annihilating functional (non-member).
//!
//! Number-field scalars are handled by restriction of scalars to the
//! rationals, so no special treatment of primes in the extension is
//! needed anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::coeffs::{is_prime_u64, CoeffDomain, FieldElement};
use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::schemes::FatPointScheme;

/// Maximum number of primes tried before giving up on reconstruction.
const PRIME_CAP: usize = 25;

// ---------------------------------------------------------------------
// Dense linear algebra modulo a word-sized prime.
// ---------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Row-major matrix over F_p.
struct PMat {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PMat {
    fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = inv_mod(self.at(row, col), p);
            for c in col..self.cols {
                let v = mul_mod(self.at(row, c), inv, p);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = (self.at(r, c) + p - mul_mod(factor, self.at(row, c), p)) % p;
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Canonical kernel basis from a matrix already in RREF: one vector
    /// per free column, carrying 1 there and 0 at the other free columns.
    fn kernel_basis(&self, pivots: &[usize]) -> Vec<Vec<u64>> {
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u64; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    let coeff = self.at(r, fc);
                    v[pc] = (p - coeff) % p;
                }
                v
            })
            .collect()
    }
}

/// Deterministic stream of large word-sized primes, largest first.
fn prime_stream() -> impl Iterator<Item = u64> {
    ((0u64..).map(|k| ((1u64 << 62) - 1).wrapping_sub(2 * k))).filter(|&n| is_prime_u64(n))
}

fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Reduce a rational matrix mod p; `None` if a denominator vanishes.
fn reduce_rows_mod_p(rows: &[Vec<BigRational>], cols: usize, p: u64) -> Option<PMat> {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        for entry in row {
            let den = bigint_mod_u64(entry.denom(), p);
            if den == 0 {
                return None;
            }
            let num = bigint_mod_u64(entry.numer(), p);
            data.push(mul_mod(num, inv_mod(den, p), p));
        }
    }
    Some(PMat {
        p,
        rows: rows.len(),
        cols,
        data,
    })
}

// ---------------------------------------------------------------------
// CRT accumulation and rational reconstruction.
// ---------------------------------------------------------------------

/// Residues of a vector modulo a growing modulus.
struct CrtVector {
    residues: Vec<BigInt>,
    modulus: BigInt,
}

impl CrtVector {
    fn new(first: &[u64], p: u64) -> CrtVector {
        CrtVector {
            residues: first.iter().map(|&r| BigInt::from(r)).collect(),
            modulus: BigInt::from(p),
        }
    }

    fn absorb(&mut self, next: &[u64], p: u64) {
        let p_big = BigInt::from(p);
        let m_mod_p = bigint_mod_u64(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (acc, &r) in self.residues.iter_mut().zip(next) {
            let acc_mod_p = bigint_mod_u64(acc, p);
            let diff = (r + p - acc_mod_p) % p;
            let t = mul_mod(diff, m_inv, p);
            *acc += &self.modulus * BigInt::from(t);
        }
        self.modulus *= p_big;
    }

    fn reconstruct(&self) -> Option<Vec<BigRational>> {
        self.residues
            .iter()
            .map(|r| rational_reconstruction(r, &self.modulus))
            .collect()
    }
}

/// Recover r/s from its residue modulo m when |r|, s <= sqrt(m/2)
/// (half-extended Euclidean algorithm).
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u8).sqrt();
    let mut r0 = m.clone();
    let mut r1 = u.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::from(1);
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (mut num, mut den) = (r1, t1);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if den > bound || num.gcd(&den) != BigInt::from(1) {
        return None;
    }
    Some(BigRational::new(num, den))
}

// ---------------------------------------------------------------------
// Certified kernel of a rational matrix.
// ---------------------------------------------------------------------

/// Exact kernel dimension and basis of a rational matrix, certified by
/// verifying reconstructed kernel vectors in exact arithmetic. The
/// returned basis is the canonical one with identity structure on the
/// free columns, so the vectors are independent by construction and the
/// dimension claim needs no further argument.
fn certified_kernel(rows: &[Vec<BigRational>], cols: usize) -> Result<(usize, Vec<Vec<BigRational>>)> {
    if rows.is_empty() || cols == 0 {
        let id: Vec<Vec<BigRational>> = (0..cols)
            .map(|i| {
                let mut v = vec![BigRational::zero(); cols];
                v[i] = BigRational::from(BigInt::from(1));
                v
            })
            .collect();
        return Ok((cols, id));
    }

    let mut primes = prime_stream();
    let mut best: Option<(Vec<usize>, Vec<CrtVector>)> = None;
    let mut used = 0;

    while used < PRIME_CAP {
        let p = primes.next().expect("prime stream is infinite");
        used += 1;
        let Some(mut pm) = reduce_rows_mod_p(rows, cols, p) else {
            continue;
        };
        let pivots = pm.rref();
        let rank = pivots.len();
        if rank == cols {
            // Full column rank mod p proves full column rank exactly.
            return Ok((0, Vec::new()));
        }
        let kernel = pm.kernel_basis(&pivots);
        match &mut best {
            None => {
                let crt = kernel.iter().map(|v| CrtVector::new(v, p)).collect();
                best = Some((pivots, crt));
            }
            Some((best_pivots, crt)) => {
                use std::cmp::Ordering;
                match pivots.len().cmp(&best_pivots.len()) {
                    Ordering::Greater => {
                        // Higher rank is closer to the truth; restart.
                        let crt_new = kernel.iter().map(|v| CrtVector::new(v, p)).collect();
                        best = Some((pivots, crt_new));
                    }
                    Ordering::Less => continue,
                    Ordering::Equal => {
                        if pivots != *best_pivots {
                            continue;
                        }
                        for (acc, v) in crt.iter_mut().zip(&kernel) {
                            acc.absorb(v, p);
                        }
                    }
                }
            }
        }

        let (_, crt) = best.as_ref().unwrap();
        let candidates: Option<Vec<Vec<BigRational>>> =
            crt.iter().map(CrtVector::reconstruct).collect();
        if let Some(basis) = candidates {
            if basis
                .iter()
                .all(|v| rows.iter().all(|row| dot(row, v).is_zero()))
            {
                return Ok((basis.len(), basis));
            }
        }
    }
    Err(Error::CapExceeded {
        context: "kernel reconstruction".to_string(),
        cap: PRIME_CAP,
    })
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

// ---------------------------------------------------------------------
// Restriction of scalars: field rows -> rational rows.
// ---------------------------------------------------------------------

/// Extension degree as a rational vector space (1 for Q itself).
fn rational_extension_degree(domain: &CoeffDomain) -> usize {
    domain.extension_degree().max(1)
}

/// Coordinates of a field element in the power basis, padded to length e.
fn element_coords(x: &FieldElement, e: usize) -> Vec<BigRational> {
    if e == 1 {
        vec![x.as_rational().expect("rational scalar").clone()]
    } else {
        let mut coords = x.as_extension().expect("extension scalar").to_vec();
        coords.resize(e, BigRational::zero());
        coords
    }
}

/// Expand one row over the field into `e` rational rows of length
/// `e * cols` (restriction of scalars: each entry becomes the matrix of
/// multiplication by that entry in the power basis).
fn restrict_row(
    row: &[FieldElement],
    domain: &CoeffDomain,
    e: usize,
) -> Vec<Vec<BigRational>> {
    if e == 1 {
        return vec![row
            .iter()
            .map(|x| x.as_rational().expect("rational scalar").clone())
            .collect()];
    }
    let gen = domain.generator().expect("extension has a generator");
    let mut out = vec![Vec::with_capacity(row.len() * e); e];
    for entry in row {
        // Column block: for t in 0..e the coordinates of entry * w^t.
        let mut shifted = entry.clone();
        let mut block: Vec<Vec<BigRational>> = Vec::with_capacity(e);
        for t in 0..e {
            if t > 0 {
                shifted = &shifted * &gen;
            }
            block.push(element_coords(&shifted, e));
        }
        for (s, target) in out.iter_mut().enumerate() {
            for column in block.iter() {
                target.push(column[s].clone());
            }
        }
    }
    out
}

/// Plain coordinate expansion of a field vector into a rational vector
/// of length `e * cols`.
fn coord_expand(row: &[FieldElement], e: usize) -> Vec<BigRational> {
    row.iter().flat_map(|x| element_coords(x, e)).collect()
}

/// Coordinate expansions of `w^t * row` for `t` in `0..e`. Their
/// rational span inside the coordinate model of `K^cols` is exactly the
/// rational span of the field line through `row`, which reduces
/// field-span questions to rational-span questions.
fn scaled_expansions(
    row: &[FieldElement],
    domain: &CoeffDomain,
    e: usize,
) -> Vec<Vec<BigRational>> {
    if e == 1 {
        return vec![coord_expand(row, 1)];
    }
    let gen = domain.generator().expect("extension has a generator");
    let mut out = Vec::with_capacity(e);
    let mut current: Vec<FieldElement> = row.to_vec();
    for t in 0..e {
        if t > 0 {
            for x in current.iter_mut() {
                *x = &*x * &gen;
            }
        }
        out.push(coord_expand(&current, e));
    }
    out
}

/// Reassemble a rational vector of length `e * cols` into field elements.
fn gather_field_vector(
    v: &[BigRational],
    domain: &CoeffDomain,
    e: usize,
    cols: usize,
) -> Result<Vec<FieldElement>> {
    let mut out = Vec::with_capacity(cols);
    for j in 0..cols {
        if e == 1 {
            out.push(domain.from_rational(v[j].clone())?);
        } else {
            let coords: Vec<BigRational> = (0..e).map(|t| v[e * j + t].clone()).collect();
            out.push(domain.element_from_generator_poly(&coords)?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Conditions matrices for fat point schemes.
// ---------------------------------------------------------------------

fn characteristic_guard(domain: &CoeffDomain, degree: u32) -> Result<()> {
    let ch = domain.characteristic();
    if ch != 0 && ch <= degree as u64 {
        return Err(Error::CharacteristicTooSmall(
            ch,
            format!("derivative conditions in degree {degree} need characteristic 0 or > {degree}"),
        ));
    }
    Ok(())
}

/// Multi-indices of total order <= bound in the coordinates other than
/// `pivot`, returned as full-length exponent vectors with 0 at `pivot`.
fn pivot_free_multi_indices(num_vars: usize, pivot: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for order in 0..=bound {
        for m in monomials_of_degree(num_vars - 1, order) {
            let mut full = Vec::with_capacity(num_vars);
            let mut it = m.exponents().iter();
            for i in 0..num_vars {
                if i == pivot {
                    full.push(0);
                } else {
                    full.push(*it.next().unwrap());
                }
            }
            out.push(full);
        }
    }
    out
}

/// Falling factorial b (b-1) ... (b-k+1) as a small integer.
fn falling_factorial(b: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for t in 0..k {
        acc *= (b - t) as i64;
    }
    acc
}

/// One condition row per pivot-free multi-index per point; columns are
/// `monomials_of_degree(num_vars, d)` in their canonical order.
fn conditions_rows(
    scheme: &FatPointScheme,
    d: u32,
) -> Result<(Vec<Vec<FieldElement>>, Vec<Monomial>)> {
    let domain = scheme.domain();
    characteristic_guard(domain, d)?;
    let num_vars = scheme.num_vars();
    let monos = monomials_of_degree(num_vars, d);
    let mut rows = Vec::new();
    for (point, mult) in scheme.points() {
        let coords = point.coords();
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point");
        // Powers of each coordinate up to d.
        let pows: Vec<Vec<FieldElement>> = coords
            .iter()
            .map(|c| {
                let mut table = Vec::with_capacity(d as usize + 1);
                table.push(domain.one());
                for _ in 0..d {
                    table.push(&table[table.len() - 1] * c);
                }
                table
            })
            .collect();
        for mu in pivot_free_multi_indices(num_vars, pivot, mult - 1) {
            let mut row = Vec::with_capacity(monos.len());
            for beta in &monos {
                let be = beta.exponents();
                if (0..num_vars).any(|i| be[i] < mu[i]) {
                    row.push(domain.zero());
                    continue;
                }
                let mut ff: i64 = 1;
                for i in 0..num_vars {
                    ff *= falling_factorial(be[i], mu[i]);
                }
                let mut entry = domain.from_i64(ff);
                for i in 0..num_vars {
                    if i == pivot {
                        continue;
                    }
                    let e = (be[i] - mu[i]) as usize;
                    if e > 0 && !entry.is_zero() {
                        entry = &entry * &pows[i][e];
                    }
                }
                row.push(entry);
            }
            rows.push(row);
        }
    }
    Ok((rows, monos))
}

// ---------------------------------------------------------------------
// Public queries.
// ---------------------------------------------------------------------

/// Dimension of the degree-`d` piece of the scheme's defining ideal,
/// computed from derivative conditions alone (no Gröbner bases).
pub fn symbolic_piece_dim(scheme: &FatPointScheme, d: u32) -> Result<usize> {
    let (rows, monos) = conditions_rows(scheme, d)?;
    let cols = monos.len();
    match scheme.domain().characteristic() {
        0 => {
            let e = rational_extension_degree(scheme.domain());
            let qrows: Vec<Vec<BigRational>> = rows
                .iter()
                .flat_map(|r| restrict_row(r, scheme.domain(), e))
                .collect();
            let (dim_q, _) = certified_kernel(&qrows, e * cols)?;
            debug_assert_eq!(dim_q % e, 0);
            Ok(dim_q / e)
        }
        p => {
            let mut pm = residue_matrix(&rows, cols, p);
            let rank = pm.rref().len();
            Ok(cols - rank)
        }
    }
}

/// Basis of the degree-`d` piece of the scheme's defining ideal, as
/// polynomials normalized to leading coefficient 1 in the canonical
/// monomial listing. Every element is verified against the derivative
/// conditions in exact arithmetic before being returned.
pub fn symbolic_piece_basis(scheme: &FatPointScheme, d: u32) -> Result<Vec<Polynomial>> {
    let (rows, monos) = conditions_rows(scheme, d)?;
    let cols = monos.len();
    let domain = scheme.domain();
    let vectors: Vec<Vec<FieldElement>> = match domain.characteristic() {
        0 => {
            let e = rational_extension_degree(domain);
            let qrows: Vec<Vec<BigRational>> = rows
                .iter()
                .flat_map(|r| restrict_row(r, domain, e))
                .collect();
            let (_, qbasis) = certified_kernel(&qrows, e * cols)?;
            let field_vecs: Vec<Vec<FieldElement>> = qbasis
                .iter()
                .map(|v| gather_field_vector(v, domain, e, cols))
                .collect::<Result<_>>()?;
            field_basis(field_vecs)
        }
        p => {
            let mut pm = residue_matrix(&rows, cols, p);
            let pivots = pm.rref();
            pm.kernel_basis(&pivots)
                .into_iter()
                .map(|v| v.into_iter().map(|r| domain.from_i64(r as i64)).collect())
                .collect()
        }
    };
    let polys: Vec<Polynomial> = vectors
        .iter()
        .map(|v| {
            let terms = monos
                .iter()
                .cloned()
                .zip(v.iter().cloned())
                .filter(|(_, c)| !c.is_zero());
            Polynomial::from_terms(domain, scheme.num_vars(), terms)
        })
        .collect();
    for f in &polys {
        debug_assert!(symbolic_piece_contains(scheme, f).unwrap_or(false));
    }
    Ok(polys)
}

/// Exact generators of the scheme's defining ideal up to and including
/// degree `max_degree`: the concatenation of the certified bases of all
/// graded pieces. Every minimal generator of a saturated homogeneous
/// ideal occurs in degree at most its regularity, so passing the
/// regularity yields a (redundant but complete) generating set without
/// ever running Buchberger on the intersection.
pub fn symbolic_generators_up_to(
    scheme: &FatPointScheme,
    max_degree: u32,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(symbolic_piece_basis(scheme, d)?);
    }
    Ok(out)
}

fn residue_matrix(rows: &[Vec<FieldElement>], cols: usize, p: u64) -> PMat {
    let data: Vec<u64> = rows
        .iter()
        .flat_map(|r| r.iter().map(|x| x.as_residue().expect("prime field scalar")))
        .collect();
    PMat {
        p,
        rows: rows.len(),
        cols,
        data,
    }
}

/// Extract a maximal independent subset structure from spanning vectors
/// over the field: returns an echelonized basis of their span.
fn field_basis(vectors: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    let mut basis: Vec<Vec<FieldElement>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in vectors {
        for (b, &pc) in basis.iter().zip(&pivots) {
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pc].inv().expect("nonzero pivot");
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            basis.push(v);
            pivots.push(pc);
        }
    }
    basis
}

/// Does `f` satisfy every vanishing condition of the scheme? Decided by
/// direct evaluation of the derivatives, exactly.
pub fn symbolic_piece_contains(scheme: &FatPointScheme, f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let d = f.homogeneous_degree().ok_or_else(|| {
        Error::NotHomogeneous("derivative conditions apply to homogeneous forms".into())
    })?;
    characteristic_guard(scheme.domain(), d)?;
    for (point, mult) in scheme.points() {
        let pivot = point
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point");
        for mu in pivot_free_multi_indices(scheme.num_vars(), pivot, mult - 1) {
            if !f.evaluate_derivative(point.coords(), &mu).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least degree with a nonzero piece, scanning up to `cap`; `None` if
/// every piece through degree `cap` is zero.
pub fn alpha_by_conditions(scheme: &FatPointScheme, cap: u32) -> Result<Option<u32>> {
    for d in 1..=cap {
        if symbolic_piece_dim(scheme, d)? > 0 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Is `f` in the linear span of `polys` over the coefficient field?
/// Decided with exact certificates in both directions: a verified
/// coefficient vector for membership, or a verified annihilating
/// functional for non-membership.
pub fn span_membership(polys: &[Polynomial], f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let domain = f.domain().clone();
    for g in polys {
        assert_eq!(g.domain(), &domain, "span over mixed domains");
        assert_eq!(g.num_vars(), f.num_vars(), "span over mixed variable counts");
    }
    // Canonical column list: union of supports.
    let mut monos: Vec<Monomial> = Vec::new();
    for g in polys.iter().chain(std::iter::once(f)) {
        for (m, _) in g.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    monos.sort();
    let to_vec = |g: &Polynomial| -> Vec<FieldElement> {
        monos
            .iter()
            .map(|m| g.coefficient(m).cloned().unwrap_or_else(|| domain.zero()))
            .collect()
    };
    let rows: Vec<Vec<FieldElement>> = polys.iter().map(to_vec).collect();
    let target = to_vec(f);

    match domain.characteristic() {
        0 => span_membership_char0(&rows, &target, &domain, monos.len()),
        p => {
            // Over F_p Gaussian elimination is already exact.
            let mut fb = field_basis_residues(&rows, p, monos.len());
            let pivots = fb.rref();
            let t: Vec<u64> = target
                .iter()
                .map(|x| x.as_residue().expect("prime field scalar"))
                .collect();
            Ok(reduces_to_zero(&fb, &pivots, &t))
        }
    }
}

fn field_basis_residues(rows: &[Vec<FieldElement>], p: u64, cols: usize) -> PMat {
    residue_matrix(rows, cols, p)
}

fn reduces_to_zero(rref: &PMat, pivots: &[usize], v: &[u64]) -> bool {
    let p = rref.p;
    let mut work = v.to_vec();
    for (r, &pc) in pivots.iter().enumerate() {
        let factor = work[pc];
        if factor == 0 {
            continue;
        }
        for c in 0..rref.cols {
            work[c] = (work[c] + p - mul_mod(factor, rref.at(r, c), p)) % p;
        }
    }
    work.iter().all(|&x| x == 0)
}

fn span_membership_char0(
    rows: &[Vec<FieldElement>],
    target: &[FieldElement],
    domain: &CoeffDomain,
    cols: usize,
) -> Result<bool> {
    let e = rational_extension_degree(domain);
    // Membership in the field span of the rows is membership in the
    // rational span of the coordinate expansions of all w^t-multiples.
    let qrows: Vec<Vec<BigRational>> = rows
        .iter()
        .flat_map(|r| scaled_expansions(r, domain, e))
        .collect();
    let qtarget: Vec<BigRational> = coord_expand(target, e);
    let qcols = e * cols;

    if qrows.is_empty() {
        return Ok(qtarget.iter().all(BigRational::is_zero));
    }

    let mut primes = prime_stream();
    let mut used = 0;
    // Accumulated residues keyed by the pivot set that produced them;
    // entries from primes that disagree on pivots are not mixed.
    let mut sol_acc: Option<(Vec<usize>, CrtVector)> = None;
    let mut fun_acc: Option<(Vec<usize>, CrtVector)> = None;

    while used < PRIME_CAP {
        let p = primes.next().expect("prime stream is infinite");
        used += 1;

        // Transposed system [A^T | b]: columns of A index the candidate
        // combination coefficients.
        let mut aug_rows: Vec<Vec<BigRational>> = Vec::with_capacity(qcols);
        for c in 0..qcols {
            let mut row: Vec<BigRational> = qrows.iter().map(|r| r[c].clone()).collect();
            row.push(qtarget[c].clone());
            aug_rows.push(row);
        }
        let Some(mut aug) = reduce_rows_mod_p(&aug_rows, qrows.len() + 1, p) else {
            continue;
        };
        let pivots = aug.rref();
        let consistent = !pivots.contains(&qrows.len());

        if consistent {
            // Canonical solution: free variables 0.
            let mut x = vec![0u64; qrows.len()];
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = aug.at(r, qrows.len());
            }
            match &mut sol_acc {
                Some((piv, acc)) if *piv == pivots => acc.absorb(&x, p),
                _ => sol_acc = Some((pivots.clone(), CrtVector::new(&x, p))),
            }
            let (_, acc) = sol_acc.as_ref().unwrap();
            if let Some(sol) = acc.reconstruct() {
                let exact = (0..qcols).all(|c| {
                    let mut acc = BigRational::zero();
                    for (xi, row) in sol.iter().zip(qrows.iter()) {
                        if !xi.is_zero() {
                            acc += xi * &row[c];
                        }
                    }
                    acc == qtarget[c]
                });
                if exact {
                    return Ok(true);
                }
            }
        } else {
            // Hunt for a kernel functional of the row matrix that does
            // not annihilate the target.
            let Some(mut am) = reduce_rows_mod_p(&qrows, qcols, p) else {
                continue;
            };
            let apivots = am.rref();
            let tmod: Vec<u64> = qtarget
                .iter()
                .map(|x| {
                    let den = bigint_mod_u64(x.denom(), p);
                    let num = bigint_mod_u64(x.numer(), p);
                    mul_mod(num, inv_mod(den, p), p)
                })
                .collect();
            let hit = |lam: &[u64]| -> u64 {
                let mut acc = 0u64;
                for (l, t) in lam.iter().zip(&tmod) {
                    acc = (acc + mul_mod(*l, *t, p)) % p;
                }
                acc
            };
            let lam = am
                .kernel_basis(&apivots)
                .into_iter()
                .find(|lam| hit(lam) != 0);
            if let Some(lam) = lam {
                // Normalize so λ·target = 1, making residues canonical
                // for a fixed pivot set.
                let scale = inv_mod(hit(&lam), p);
                let lam: Vec<u64> = lam.iter().map(|&l| mul_mod(l, scale, p)).collect();
                match &mut fun_acc {
                    Some((piv, acc)) if *piv == apivots => acc.absorb(&lam, p),
                    _ => fun_acc = Some((apivots.clone(), CrtVector::new(&lam, p))),
                }
                let (_, acc) = fun_acc.as_ref().unwrap();
                if let Some(fun) = acc.reconstruct() {
                    let annihilates = qrows.iter().all(|row| dot(row, &fun).is_zero());
                    let hits = !dot(&qtarget, &fun).is_zero();
                    if annihilates && hits {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Err(Error::CapExceeded {
        context: "span membership reconstruction".to_string(),
        cap: PRIME_CAP,
    })
}

/// All products of `k` polynomials drawn from the given graded pieces
/// (with repetition) whose degrees sum to `total`. Pieces are given as
/// `(degree, basis)` pairs.
pub fn products_of_pieces(
    pieces: &[(u32, Vec<Polynomial>)],
    k: usize,
    total: u32,
) -> Vec<Polynomial> {
    // Flatten to (degree, poly) items; choose nondecreasing index tuples.
    let items: Vec<(u32, &Polynomial)> = pieces
        .iter()
        .flat_map(|(d, basis)| basis.iter().map(move |f| (*d, f)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(k);
    fn recurse(
        items: &[(u32, &Polynomial)],
        k: usize,
        remaining: u32,
        start: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Polynomial>,
    ) {
        if stack.len() == k {
            if remaining == 0 {
                let mut prod: Option<Polynomial> = None;
                for &i in stack.iter() {
                    prod = Some(match prod {
                        None => items[i].1.clone(),
                        Some(acc) => &acc * items[i].1,
                    });
                }
                out.push(prod.expect("k >= 1"));
            }
            return;
        }
        for i in start..items.len() {
            if items[i].0 > remaining {
                continue;
            }
            stack.push(i);
            recurse(items, k, remaining - items[i].0, i, stack, out);
            stack.pop();
        }
    }
    recurse(&items, k, total, 0, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::schemes::ProjectivePoint;
    use num_integer::binomial;

    fn q() -> CoeffDomain {
        CoeffDomain::rationals()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &q(), 3).unwrap()
    }

    fn pt(coords: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_integers(&q(), coords).unwrap()
    }

    fn scheme(points: &[(&[i64], u32)]) -> FatPointScheme {
        FatPointScheme::new(
            &q(),
            3,
            points.iter().map(|(c, m)| (pt(c), *m)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rational_reconstruction_roundtrip() {
        let m = BigInt::from(1000003) * BigInt::from(999983);
        for (num, den) in [(1i64, 3i64), (-22, 7), (355, 113), (0, 1), (12345, 1)] {
            let r = BigRational::new(BigInt::from(num), BigInt::from(den));
            // Build the residue num * den^{-1} mod m via extended gcd.
            let residue = {
                let e = BigInt::from(den).extended_gcd(&m);
                assert_eq!(e.gcd, BigInt::from(1));
                (BigInt::from(num) * e.x).mod_floor(&m)
            };
            let back = rational_reconstruction(&residue, &m).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn single_point_dimensions() {
        let s = scheme(&[(&[1, 2, 3], 1)]);
        // One simple point: codimension 1 in every positive degree.
        for d in 1..=4u32 {
            let expect = binomial(d as usize + 2, 2) - 1;
            assert_eq!(symbolic_piece_dim(&s, d).unwrap(), expect);
        }
    }

    #[test]
    fn double_point_dimensions() {
        let s = scheme(&[(&[1, 2, 3], 2)]);
        // A double point imposes 3 conditions: dim = C(d+2,2) - 3 once
        // that is nonnegative.
        assert_eq!(symbolic_piece_dim(&s, 1).unwrap(), 0);
        assert_eq!(symbolic_piece_dim(&s, 2).unwrap(), 3);
        assert_eq!(symbolic_piece_dim(&s, 3).unwrap(), 7);
    }

    #[test]
    fn dependent_conditions_detected_exactly() {
        // Two double points: the double line through them shows up in
        // degree 2 even though naive condition counting says 6 - 6 = 0.
        let s = scheme(&[(&[1, 0, 0], 2), (&[0, 1, 0], 2)]);
        assert_eq!(symbolic_piece_dim(&s, 2).unwrap(), 1);
        let basis = symbolic_piece_basis(&s, 2).unwrap();
        assert_eq!(basis.len(), 1);
        // The unique conic is the line z = 0 doubled.
        assert_eq!(basis[0], p("z^2"));
    }

    #[test]
    fn triangle_alpha_and_membership() {
        let simple = scheme(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        assert_eq!(alpha_by_conditions(&simple, 6).unwrap(), Some(2));
        let double = scheme(&[(&[1, 0, 0], 2), (&[0, 1, 0], 2), (&[0, 0, 1], 2)]);
        assert_eq!(alpha_by_conditions(&double, 6).unwrap(), Some(3));
        assert!(symbolic_piece_contains(&double, &p("x*y*z")).unwrap());
        assert!(!symbolic_piece_contains(&double, &p("x*y^2")).unwrap());
        assert!(!symbolic_piece_contains(&simple, &p("x^2")).unwrap());
    }

    #[test]
    fn piece_basis_matches_dimension() {
        let s = scheme(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        let basis = symbolic_piece_basis(&s, 2).unwrap();
        assert_eq!(basis.len(), symbolic_piece_dim(&s, 2).unwrap());
        assert_eq!(basis.len(), 3);
        for f in &basis {
            assert!(symbolic_piece_contains(&s, f).unwrap());
        }
    }

    #[test]
    fn span_membership_over_q() {
        assert!(span_membership(&[p("x^2"), p("x*y")], &p("x^2 - 3*x*y")).unwrap());
        assert!(!span_membership(&[p("x^2"), p("x*y")], &p("y^2")).unwrap());
        assert!(span_membership(&[], &Polynomial::zero(&q(), 3)).unwrap());
        assert!(!span_membership(&[], &p("x")).unwrap());
        // Fractions exercise the reconstruction path.
        assert!(span_membership(
            &[p("1/3*x^2 + y^2"), p("x*y - 1/7*y^2")],
            &p("x^2 + 3*y^2 + 14*x*y - 2*y^2")
        )
        .unwrap());
    }

    #[test]
    fn span_membership_over_extension() {
        let k = CoeffDomain::qw();
        let f = |s: &str| parse_polynomial(s, &k, 3).unwrap();
        assert!(span_membership(&[f("x")], &f("w*x")).unwrap());
        assert!(!span_membership(&[f("x")], &f("x + y")).unwrap());
        // w*x is not in the rational span of x alone, but is in the
        // field span; membership is over the field.
        assert!(span_membership(&[f("x"), f("y")], &f("(w + 1)*x - w^2*y")).unwrap());
        assert!(!span_membership(&[f("x - w*y")], &f("x - y")).unwrap());
    }

    #[test]
    fn span_membership_mod_p() {
        let k = CoeffDomain::prime_field(101).unwrap();
        let f = |s: &str| parse_polynomial(s, &k, 3).unwrap();
        assert!(span_membership(&[f("x"), f("y")], &f("13*x + 88*y")).unwrap());
        assert!(!span_membership(&[f("x")], &f("y")).unwrap());
    }

    #[test]
    fn prime_field_dimensions_match_rational_ones() {
        let kp = CoeffDomain::prime_field(65537).unwrap();
        let mk = |coords: &[i64], m: u32| {
            (ProjectivePoint::from_integers(&kp, coords).unwrap(), m)
        };
        let sp = FatPointScheme::new(
            &kp,
            3,
            vec![mk(&[1, 0, 0], 2), mk(&[0, 1, 0], 2), mk(&[0, 0, 1], 2)],
        )
        .unwrap();
        let sq = scheme(&[(&[1, 0, 0], 2), (&[0, 1, 0], 2), (&[0, 0, 1], 2)]);
        for d in 1..=5 {
            assert_eq!(
                symbolic_piece_dim(&sp, d).unwrap(),
                symbolic_piece_dim(&sq, d).unwrap()
            );
        }
    }

    #[test]
    fn characteristic_guard_rejects_small_primes() {
        let kp = CoeffDomain::prime_field(5).unwrap();
        let pt = ProjectivePoint::from_integers(&kp, &[1, 1, 1]).unwrap();
        let s = FatPointScheme::new(&kp, 3, vec![(pt, 2)]).unwrap();
        assert!(symbolic_piece_dim(&s, 7).is_err());
        assert!(symbolic_piece_dim(&s, 4).is_ok());
    }

    #[test]
    fn products_enumeration() {
        let pieces = vec![
            (1u32, vec![p("x"), p("y")]),
            (2u32, vec![p("z^2")]),
        ];
        // Degree-3 products of two factors: x*z^2, y*z^2 (degrees 1+2)
        // and nothing from 1+1 (wrong total) - but 1+1+? no, k = 2.
        let prods = products_of_pieces(&pieces, 2, 3);
        assert_eq!(prods.len(), 2);
        assert!(prods.contains(&p("x*z^2")));
        assert!(prods.contains(&p("y*z^2")));
        // Degree-2 products of two factors from the degree-1 piece:
        // x^2, x*y, y^2.
        let prods2 = products_of_pieces(&pieces, 2, 2);
        assert_eq!(prods2.len(), 3);
        assert!(prods2.contains(&p("x*y")));
    }

    #[test]
    fn extension_scheme_dimensions() {
        // A single simple point with extension coordinates.
        let k = CoeffDomain::qw();
        let w = k.generator().unwrap();
        let point =
            ProjectivePoint::new(&k, vec![k.one(), w.clone(), &w * &w]).unwrap();
        let s = FatPointScheme::new(&k, 3, vec![(point, 1)]).unwrap();
        assert_eq!(symbolic_piece_dim(&s, 1).unwrap(), 2);
        assert_eq!(symbolic_piece_dim(&s, 2).unwrap(), 5);
        let basis = symbolic_piece_basis(&s, 1).unwrap();
        assert_eq!(basis.len(), 2);
        for f in &basis {
            assert!(symbolic_piece_contains(&s, f).unwrap());
        }
    }
}
