//! Cyclic and negacyclic codes as ideals of `F[x]/(x^n - a)`: construction,
//! duals, self-duality, and enumeration of the self-dual ones from the
//! reciprocal pairing of the factors of `x^n - a`.

use crate::arith;
use crate::cyclo::{factor_xn_minus_a, Factorization};
use crate::error::{Error, Result};
use crate::gf::{solve_x2_plus_1, Field, FieldElement};
use crate::linalg::Matrix;
use crate::poly::{Poly, Shift};

/// Largest list `enumerate_selfdual` will materialize.
pub const ENUMERATION_LIMIT: u128 = 1 << 20;

/// Counts up to this size are checked against an explicit enumeration.
pub const CROSS_CHECK_LIMIT: u128 = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicCode {
    field: Field,
    n: usize,
    shift: Shift,
    generator: Poly,
}

impl ConstacyclicCode {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> Shift {
        self.shift
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.n - self.generator.degree().expect("generator is nonzero")
    }

    /// `x^n - a`.
    pub fn modulus(&self) -> Poly {
        Poly::x_pow_minus(&self.field, self.n, self.shift)
    }

    /// `(x^n - a) / g`.
    pub fn check_polynomial(&self) -> Poly {
        self.modulus()
            .div_exact(&self.generator)
            .expect("same field")
            .expect("generator divides the modulus")
    }
}

pub fn make_code(field: &Field, n: usize, shift: Shift, generator: &Poly) -> Result<ConstacyclicCode> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    if generator.field() != field {
        return Err(Error::FieldMismatch);
    }
    if !generator.is_monic() {
        return Err(Error::InvalidInput(format!("generator {generator} is not monic")));
    }
    if !generator.divides(&Poly::x_pow_minus(field, n, shift))? {
        return Err(Error::NotADivisor);
    }
    Ok(ConstacyclicCode { field: field.clone(), n, shift, generator: generator.clone() })
}

/// Rows are the coefficient vectors of `x^i g(x)`, `0 <= i < k`.
pub fn generator_matrix(code: &ConstacyclicCode) -> Result<Matrix> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::EmptyCode);
    }
    let mut g = Matrix::zeros(&code.field, k, code.n);
    for i in 0..k {
        for (j, &c) in code.generator.coeffs_raw().iter().enumerate() {
            g.set_raw(i, i + j, c);
        }
    }
    Ok(g)
}

/// The code generated by the monic reciprocal of `(x^n - a) / g`.
pub fn dual(code: &ConstacyclicCode) -> Result<ConstacyclicCode> {
    let generator = code.check_polynomial().reciprocal()?;
    make_code(&code.field, code.n, code.shift, &generator)
}

pub fn is_self_dual(code: &ConstacyclicCode) -> Result<bool> {
    if 2 * code.dimension() != code.n {
        return Ok(false);
    }
    Ok(dual(code)?.generator == code.generator)
}

/// Exponents `k_i` of a monic divisor `prod f_i^{k_i}` of a factored target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    exponents: Vec<u64>,
}

impl ExponentVector {
    pub fn new(fz: &Factorization, exponents: Vec<u64>) -> Result<ExponentVector> {
        if exponents.len() != fz.factors().len() {
            return Err(Error::InvalidInput(format!(
                "{} exponents for {} factors",
                exponents.len(),
                fz.factors().len()
            )));
        }
        if let Some((i, e)) =
            exponents.iter().zip(fz.factors()).position(|(&e, f)| e > f.multiplicity).map(|i| (i, exponents[i]))
        {
            return Err(Error::InvalidInput(format!("exponent {e} of factor {i} exceeds its multiplicity")));
        }
        Ok(ExponentVector { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn degree(&self, fz: &Factorization) -> usize {
        self.exponents
            .iter()
            .zip(fz.factors())
            .map(|(&e, f)| e as usize * f.poly.degree().unwrap_or(0))
            .sum()
    }

    pub fn generator(&self, fz: &Factorization) -> Poly {
        self.exponents.iter().zip(fz.factors()).fold(Poly::one(fz.field()), |acc, (&e, f)| {
            acc.mul(&f.poly.pow(e)).expect("factors share the field")
        })
    }
}

/// Number of self-dual codes: zero if some self-reciprocal factor has odd
/// multiplicity, otherwise `prod (multiplicity + 1)` over reciprocal pairs.
pub fn count_from_pairing(fz: &Factorization) -> Result<u128> {
    let factors = fz.factors();
    if fz.pairing().self_reciprocal.iter().any(|&i| factors[i].multiplicity % 2 == 1) {
        return Ok(0);
    }
    fz.pairing().pairs.iter().try_fold(1u128, |acc, &(i, _)| {
        acc.checked_mul(factors[i].multiplicity as u128 + 1).ok_or(Error::CountOverflow)
    })
}

/// Exponent vectors solving `A = B^*`, ordered lexicographically by the
/// exponents of the first member of each reciprocal pair.
pub fn selfdual_exponent_vectors(fz: &Factorization) -> Result<Vec<ExponentVector>> {
    let count = count_from_pairing(fz)?;
    if count > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge { count, limit: ENUMERATION_LIMIT });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let factors = fz.factors();
    let mut base = vec![0u64; factors.len()];
    for &i in &fz.pairing().self_reciprocal {
        base[i] = factors[i].multiplicity / 2;
    }
    let pairs = &fz.pairing().pairs;
    let mut out = Vec::with_capacity(count as usize);
    let mut b = vec![0u64; pairs.len()];
    loop {
        let mut exps = base.clone();
        for (&(i, j), &bj) in pairs.iter().zip(&b) {
            exps[i] = bj;
            exps[j] = factors[j].multiplicity - bj;
        }
        out.push(ExponentVector { exponents: exps });
        let Some(pos) = (0..pairs.len()).rev().find(|&k| b[k] < factors[pairs[k].0].multiplicity) else {
            break;
        };
        b[pos] += 1;
        for slot in &mut b[pos + 1..] {
            *slot = 0;
        }
    }
    Ok(out)
}

/// All self-dual codes of length `n` in `F[x]/(x^n - a)`, each verified
/// with [`is_self_dual`].
pub fn enumerate_selfdual(field: &Field, n: usize, shift: Shift) -> Result<Vec<Poly>> {
    let fz = factor_xn_minus_a(field, n as u64, shift)?;
    selfdual_exponent_vectors(&fz)?
        .iter()
        .map(|v| {
            let g = v.generator(&fz);
            let code = make_code(field, n, shift, &g)?;
            if !is_self_dual(&code)? {
                return Err(Error::InvariantViolation(format!("{g} solves A = B* but is not self-dual")));
            }
            Ok(g)
        })
        .collect()
}

/// Number of self-dual codes of length `n` in `F[x]/(x^n - a)`.
pub fn count_selfdual(field: &Field, n: usize, shift: Shift) -> Result<u128> {
    let fz = factor_xn_minus_a(field, n as u64, shift)?;
    let count = count_from_pairing(&fz)?;
    if count <= CROSS_CHECK_LIMIT {
        let listed = enumerate_selfdual(field, n, shift)?.len() as u128;
        if listed != count {
            return Err(Error::InvariantViolation(format!(
                "count formula gives {count} but enumeration lists {listed}"
            )));
        }
    }
    Ok(count)
}

pub fn enumerate_selfdual_negacyclic(field: &Field, n: usize) -> Result<Vec<Poly>> {
    if field.p() == 2 {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    enumerate_selfdual(field, n, Shift::Negacyclic)
}

/// `(p^r + 1)^t` when no factor of `x^n + 1` is self-reciprocal, else 0.
pub fn count_selfdual_negacyclic(field: &Field, n: usize) -> Result<u128> {
    if field.p() == 2 {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    let fz = factor_xn_minus_a(field, n as u64, Shift::Negacyclic)?;
    let formula = if fz.self_reciprocal_count() > 0 {
        0
    } else {
        let (_, r) = arith::strip_prime_power(n as u64, field.p());
        let base = (field.p() as u128).checked_pow(r).and_then(|v| v.checked_add(1)).ok_or(Error::CountOverflow)?;
        base.checked_pow(fz.pair_count() as u32).ok_or(Error::CountOverflow)?
    };
    let general = count_selfdual(field, n, Shift::Negacyclic)?;
    if general != formula {
        return Err(Error::InvariantViolation(format!(
            "closed form gives {formula} but the pairing count is {general}"
        )));
    }
    Ok(formula)
}

/// `x^n - 1` with `n = 2 m p^r`, `m` odd, factored and paired by the
/// involution `f(x) -> f(-x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicStructure {
    pub factorization: Factorization,
    pub m: u64,
    pub r: u32,
    /// `(i, j)` with `factors[j]` the monic associate of `factors[i](-x)`.
    pub involution: Vec<(usize, usize)>,
}

impl CyclicStructure {
    /// Every generator is `prod f_i^{alpha_i} f_i(-x)^{beta_i}` with exponents
    /// in `[0, p^r]`; this is the number of such choices.
    pub fn template_size(&self) -> Option<u128> {
        self.factorization.divisor_count()
    }
}

pub fn cyclic_divisor_structure(field: &Field, n: usize) -> Result<CyclicStructure> {
    let p = field.p();
    if p == 2 {
        return Err(Error::ShapeMismatch("characteristic must be odd".into()));
    }
    let (core, r) = arith::strip_prime_power(n as u64, p);
    if n == 0 || core % 4 != 2 {
        return Err(Error::ShapeMismatch(format!("{n} is not 2 m p^r with m odd")));
    }
    let fz = factor_xn_minus_a(field, n as u64, Shift::Cyclic)?;
    let factors = fz.factors();
    let mut involution = Vec::new();
    let mut seen = vec![false; factors.len()];
    for i in 0..factors.len() {
        if seen[i] {
            continue;
        }
        let image = factors[i].poly.negate_variable()?;
        let j = (0..factors.len())
            .find(|&j| !seen[j] && j != i && factors[j].poly == image)
            .ok_or_else(|| {
                Error::InvariantViolation(format!("{}(-x) is not a distinct factor", factors[i].poly))
            })?;
        seen[i] = true;
        seen[j] = true;
        involution.push((i, j));
    }
    Ok(CyclicStructure { factorization: fz, m: core / 2, r, involution })
}

/// Target ring of the map `F[x]/(x^m - 1) -> F[x]/(x^m - lambda)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MuTarget {
    /// `lambda = gamma`.
    MinusGamma,
    /// `lambda = -gamma`.
    PlusGamma,
}

/// An ideal of `F[x]/(x^m - lambda)` given by its monic generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedIdeal {
    pub m: usize,
    pub lambda: FieldElement,
    pub generator: Poly,
}

impl TwistedIdeal {
    pub fn modulus(&self) -> Poly {
        Poly::x_pow_minus_elem(&self.lambda, self.m)
    }

    pub fn dimension(&self) -> usize {
        self.m - self.generator.degree().expect("generator is nonzero")
    }
}

/// The constant `c` with `mu(f) = f(c x)` and the target constant `lambda`.
pub fn mu_scale(field: &Field, m: usize, target: MuTarget) -> Result<(FieldElement, FieldElement)> {
    if m % 2 == 0 {
        return Err(Error::HypothesisUnmet(format!("m = {m} is even")));
    }
    let gamma = solve_x2_plus_1(field)?.ok_or(Error::NoSquareRootOfMinusOne)?;
    let one_mod_four = m % 4 == 1;
    let (c, lambda) = match target {
        MuTarget::MinusGamma => (if one_mod_four { gamma.neg() } else { gamma.clone() }, gamma),
        MuTarget::PlusGamma => (if one_mod_four { gamma.clone() } else { gamma.neg() }, gamma.neg()),
    };
    Ok((c, lambda))
}

/// `mu(f) = f(c x)` on residues modulo `x^m - 1`.
pub fn mu_map(f: &Poly, m: usize, target: MuTarget) -> Result<Poly> {
    let (c, _) = mu_scale(f.field(), m, target)?;
    f.rem(&Poly::x_pow_minus(f.field(), m, Shift::Cyclic))?.scale_substitute(&c)
}

/// Image of a cyclic code of odd length `m` under `mu`.
pub fn mu_transport(code: &ConstacyclicCode, target: MuTarget) -> Result<TwistedIdeal> {
    if code.shift != Shift::Cyclic {
        return Err(Error::HypothesisUnmet("source code must be cyclic".into()));
    }
    let m = code.n;
    if arith::gcd(m as u64, code.field.p()) != 1 {
        return Err(Error::HypothesisUnmet(format!("gcd({m}, p) != 1")));
    }
    let (c, lambda) = mu_scale(&code.field, m, target)?;
    let generator = code.generator.scale_substitute(&c)?.monic();
    let ideal = TwistedIdeal { m, lambda, generator };
    if !ideal.generator.divides(&ideal.modulus())? {
        return Err(Error::InvariantViolation(format!(
            "{} does not divide {}",
            ideal.generator,
            ideal.modulus()
        )));
    }
    Ok(ideal)
}
