//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low degree first with no trailing zeros; the zero
//! polynomial has no coefficients. The textual form is
//! `c0 + c1*x + ... + ck*x^k`, zero terms omitted, coefficients written as
//! integers over prime fields and as bracketed tuples `[a0,a1,...]` over
//! extension fields.

use std::fmt;

use num_bigint::BigUint;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// The shift constant `a` of `x^n - a`: `+1` (cyclic) or `-1` (negacyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shift {
    Cyclic,
    Negacyclic,
}

impl Shift {
    pub fn constant(self) -> i64 {
        match self {
            Shift::Cyclic => 1,
            Shift::Negacyclic => -1,
        }
    }

    pub fn from_constant(a: i64) -> Result<Shift> {
        match a {
            1 => Ok(Shift::Cyclic),
            -1 => Ok(Shift::Negacyclic),
            _ => Err(Error::InvalidInput(format!("shift constant must be 1 or -1, got {a}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Poly {
    /// Builds a polynomial from coefficient encodings, low degree first.
    pub fn from_raw(field: &Field, coeffs: Vec<u64>) -> Result<Poly> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= field.order()) {
            return Err(Error::InvalidInput(format!("coefficient {bad} outside {field}")));
        }
        Ok(Poly::from_raw_unchecked(field, coeffs))
    }

    pub(crate) fn from_raw_unchecked(field: &Field, mut coeffs: Vec<u64>) -> Poly {
        trim(&mut coeffs);
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_raw_unchecked(field, coeffs.iter().map(FieldElement::enc).collect()))
    }

    /// Coefficients taken in the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        let raw = coeffs.iter().map(|&c| field.from_int(c).enc()).collect();
        Poly::from_raw_unchecked(field, raw)
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    pub fn constant(c: &FieldElement) -> Poly {
        Poly::from_raw_unchecked(c.field(), vec![c.enc()])
    }

    /// `x^n - a` for the given shift constant.
    pub fn x_pow_minus(field: &Field, n: usize, shift: Shift) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add_raw(coeffs[0], field.from_int(-shift.constant()).enc());
        Poly::from_raw_unchecked(field, coeffs)
    }

    /// `x^n - c` for an arbitrary constant.
    pub fn x_pow_minus_elem(c: &FieldElement, n: usize) -> Poly {
        let field = c.field();
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add_raw(coeffs[0], field.neg_raw(c.enc()));
        Poly::from_raw_unchecked(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeffs_raw(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let enc = self.coeffs.get(i).copied().unwrap_or(0);
        self.field.element(enc).expect("stored coefficients are reduced")
    }

    pub fn leading(&self) -> FieldElement {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u64>) -> Poly {
        Poly::from_raw_unchecked(&self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Ok(self.with(out))
    }

    pub fn neg(&self) -> Poly {
        self.with(self.coeffs.iter().map(|&c| self.field.neg_raw(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.with(mul_raw(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Poly> {
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.with(self.coeffs.iter().map(|&a| self.field.mul_raw(a, c.enc())).collect()))
    }

    /// Quotient and remainder with `deg(r) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = divmod_raw(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None | Some(&1) => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv_raw(lead);
                self.with(self.coeffs.iter().map(|&c| self.field.mul_raw(c, inv)).collect())
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.coeffs.clone(), other.coeffs.clone());
        while !b.is_empty() {
            let (_, r) = divmod_raw(&self.field, &a, &b);
            a = std::mem::replace(&mut b, r);
        }
        Ok(self.with(a).monic())
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.with(mul_raw(&self.field, &result.coeffs, &base.coeffs));
            }
            e >>= 1;
            if e > 0 {
                base = self.with(mul_raw(&self.field, &base.coeffs, &base.coeffs));
            }
        }
        result
    }

    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.mul(other)?.rem(modulus)
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, e: &BigUint, modulus: &Poly) -> Result<Poly> {
        self.check(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let m = &modulus.coeffs;
        let mut result = divmod_raw(f, &[1], m).1;
        let base = divmod_raw(f, &self.coeffs, m).1;
        for i in (0..e.bits()).rev() {
            result = divmod_raw(f, &mul_raw(f, &result, &result), m).1;
            if e.bit(i) {
                result = divmod_raw(f, &mul_raw(f, &result, &base), m).1;
            }
        }
        Ok(self.with(result))
    }

    pub fn eval(&self, at: &FieldElement) -> Result<FieldElement> {
        if at.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add_raw(f.mul_raw(acc, at.enc()), c));
        f.element(v)
    }

    /// Monic reciprocal: the monic associate of `x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        match self.coeffs.first() {
            None => Err(Error::InvalidInput("reciprocal of the zero polynomial".into())),
            Some(0) => Err(Error::ZeroConstantTerm),
            Some(_) => {
                let mut rev = self.coeffs.clone();
                rev.reverse();
                Ok(self.with(rev).monic())
            }
        }
    }

    /// Whether the polynomial equals its monic reciprocal.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == self.monic())
    }

    /// `f(c x)`: coefficient `i` multiplied by `c^i`.
    pub fn scale_substitute(&self, c: &FieldElement) -> Result<Poly> {
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Err(Error::InvalidScale);
        }
        let f = &self.field;
        let mut power = 1;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(f.mul_raw(a, power));
            power = f.mul_raw(power, c.enc());
        }
        Ok(self.with(out))
    }

    /// Monic associate of `f(-x)`.
    pub fn negate_variable(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        let f = &self.field;
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { f.neg_raw(c) } else { c })
            .collect();
        Ok(self.with(out).monic())
    }

    /// Rabin's test: `x^(q^d) = x mod f` and `gcd(x^(q^(d/l)) - x, f) = 1`
    /// for every prime `l | d`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            None | Some(0) => {
                return Err(Error::InvalidDegree("irreducibility of a constant".into()))
            }
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        if self.coeffs[0] == 0 {
            return Ok(false);
        }
        let f = self.monic();
        let field = &self.field;
        let m = &f.coeffs;
        let x = Poly::x(field);
        let xq = x.powmod(&BigUint::from(field.order()), &f)?;
        // linear factors first; this settles most reducible candidates
        if !xq.sub(&x)?.gcd(&f)?.is_one() {
            return Ok(false);
        }
        // Frobenius as a matrix: row i holds x^(q i) mod f
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
        rows.push(vec![1]);
        for i in 1..d {
            let next = divmod_raw(field, &mul_raw(field, &rows[i - 1], &xq.coeffs), m).1;
            rows.push(next);
        }
        let frobenius = |h: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; d];
            for (i, &c) in h.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, &r) in rows[i].iter().enumerate() {
                    out[j] = field.add_raw(out[j], field.mul_raw(c, r));
                }
            }
            out
        };
        // frob[i] = x^(q^i) mod f
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        frob.push(xq);
        for i in 2..=d {
            let h = self.with(frobenius(&frob[i - 1].coeffs));
            if 2 * i <= d && !h.sub(&x)?.gcd(&f)?.is_one() {
                return Ok(false);
            }
            frob.push(h);
        }
        if frob[d] != x {
            return Ok(false);
        }
        for l in arith::prime_factors(d as u64) {
            if !frob[d / l as usize].sub(&x)?.gcd(&f)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses the textual form produced by `Display`.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = Poly::zero(field);
        for term in compact.split('+') {
            let (coeff, rest) = if term.starts_with('x') {
                (field.one(), term)
            } else if term.starts_with('[') {
                let close = term
                    .find(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed bracket in `{term}`")))?;
                let digits = term[1..close]
                    .split(',')
                    .map(|d| d.parse::<u64>().map_err(|_| Error::Parse(format!("bad digit in `{term}`"))))
                    .collect::<Result<Vec<_>>>()?;
                let c = field.from_coeffs(&digits).map_err(|e| Error::Parse(e.to_string()))?;
                (c, &term[close + 1..])
            } else {
                let end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
                let v: u64 = term[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad term `{term}`")))?;
                if v >= field.p() {
                    return Err(Error::Parse(format!("coefficient {v} not reduced mod {}", field.p())));
                }
                (field.from_int(v as i64), &term[end..])
            };
            let rest = rest.strip_prefix('*').unwrap_or(rest);
            let degree = if rest.is_empty() {
                if term.ends_with('*') {
                    return Err(Error::Parse(format!("dangling `*` in `{term}`")));
                }
                0
            } else if rest == "x" {
                1
            } else if let Some(e) = rest.strip_prefix("x^") {
                e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
            } else {
                return Err(Error::Parse(format!("bad term `{term}`")));
            };
            let mut coeffs = vec![0; degree + 1];
            coeffs[degree] = coeff.enc();
            acc = acc.add(&Poly::from_raw_unchecked(field, coeffs))?;
        }
        Ok(acc)
    }
}

pub(crate) fn mul_raw(field: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = field.add_raw(out[i + j], field.mul_raw(x, y));
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn divmod_raw(field: &Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = field.inv_raw(*b.last().expect("nonzero divisor"));
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let top = *r.last().unwrap();
        let shift = r.len() - b.len();
        let c = field.mul_raw(top, lead_inv);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = field.sub_raw(r[shift + i], field.mul_raw(c, bi));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`,
/// comparing coefficient tuples `(c_0, ..., c_{d-1})` by encoding.
pub fn smallest_irreducible(field: &Field, d: usize) -> Result<Poly> {
    if d == 0 {
        return Err(Error::InvalidDegree("irreducible of degree 0".into()));
    }
    let q = field.order();
    let mut tuple = vec![0u64; d];
    if d >= 2 {
        tuple[0] = 1;
    }
    loop {
        let mut coeffs = tuple.clone();
        coeffs.push(1);
        let candidate = Poly::from_raw_unchecked(field, coeffs);
        if candidate.is_irreducible()? {
            return Ok(candidate);
        }
        let mut i = d - 1;
        loop {
            tuple[i] += 1;
            if tuple[i] < q {
                break;
            }
            tuple[i] = 0;
            if i == 0 {
                return Err(Error::InvariantViolation(format!(
                    "no irreducible polynomial of degree {d} over {field}"
                )));
            }
            i -= 1;
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = self.field.element(c).expect("reduced coefficient");
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*x")?,
                _ => write!(f, "{coeff}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn f(p: u64, s: u32) -> Field {
        make_field(p, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f3 = f(3, 1);
        let prod = Poly::from_ints(&f3, &[1, 1]).mul(&Poly::from_ints(&f3, &[2, 1])).unwrap();
        assert_eq!(prod, Poly::from_ints(&f3, &[2, 0, 1]));
        for a in f3.elements() {
            let lhs = prod.eval(&a).unwrap();
            let rhs = a.mul(&a).unwrap().add(&f3.from_int(2)).unwrap();
            assert_eq!(lhs, rhs);
        }

        let g = Poly::from_ints(&f3, &[2, 0, 2]);
        assert_eq!(g.gcd(&Poly::zero(&f3)).unwrap(), Poly::from_ints(&f3, &[1, 0, 1]));

        let f2 = f(2, 1);
        let x6 = Poly::x_pow_minus(&f2, 6, Shift::Cyclic);
        let x3 = Poly::x_pow_minus(&f2, 3, Shift::Cyclic);
        let (q, r) = x6.divmod(&x3).unwrap();
        assert_eq!(q, x3);
        assert!(r.is_zero());
        assert_eq!(x6.divmod(&Poly::zero(&f2)), Err(Error::DivisionByZero));
        assert_eq!(x6.add(&Poly::one(&f3)), Err(Error::FieldMismatch));
    }

    #[test]
    fn reciprocal_examples() {
        let f5 = f(5, 1);
        let x_minus_2 = Poly::from_ints(&f5, &[-2, 1]);
        assert_eq!(x_minus_2.reciprocal().unwrap(), Poly::from_ints(&f5, &[2, 1]));
        assert!(!x_minus_2.is_self_reciprocal().unwrap());

        let f2 = f(2, 1);
        let x3 = Poly::x_pow_minus(&f2, 3, Shift::Cyclic);
        assert_eq!(x3.reciprocal().unwrap(), x3);

        assert!(Poly::from_ints(&f5, &[1, 1]).is_self_reciprocal().unwrap());
        assert!(Poly::from_ints(&f(3, 1), &[1, 0, 1]).is_self_reciprocal().unwrap());
        assert_eq!(Poly::x(&f5).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn reciprocal_of_linear_factor_over_gamma() {
        // (x - g)^* = -g (x + g) with g^2 = -1
        let f5 = f(5, 1);
        let gamma = f5.from_int(2);
        let lin = Poly::from_elements(&f5, &[gamma.neg(), f5.one()]).unwrap();
        let mut rev = lin.coeffs_raw().to_vec();
        rev.reverse();
        let raw_rev = Poly::from_raw(&f5, rev).unwrap();
        let expected = Poly::from_elements(&f5, &[gamma.clone(), f5.one()])
            .unwrap()
            .scale(&gamma.neg())
            .unwrap();
        assert_eq!(raw_rev, expected);
    }

    #[test]
    fn substitutions() {
        let f5 = f(5, 1);
        let p = Poly::from_ints(&f5, &[-1, 1]);
        assert_eq!(p.scale_substitute(&f5.one()).unwrap(), p);
        let g = f5.from_int(2);
        let img = p.scale_substitute(&g).unwrap();
        assert_eq!(img, Poly::from_ints(&f5, &[-1, 2]));
        assert_eq!(img.monic(), Poly::from_ints(&f5, &[2, 1]));
        let back = img.scale_substitute(&g.inv().unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.scale_substitute(&f5.zero()), Err(Error::InvalidScale));

        let f3 = f(3, 1);
        assert_eq!(
            Poly::from_ints(&f3, &[-1, 1]).negate_variable().unwrap(),
            Poly::from_ints(&f3, &[1, 1])
        );
        let even = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(even.negate_variable().unwrap(), even);
        assert_eq!(
            Poly::from_ints(&f5, &[1, 1, 1]).negate_variable().unwrap(),
            Poly::from_ints(&f5, &[1, 4, 1])
        );
    }

    #[test]
    fn irreducibility() {
        assert!(Poly::from_ints(&f(3, 1), &[1, 0, 1]).is_irreducible().unwrap());
        assert!(!Poly::from_ints(&f(5, 1), &[1, 0, 1]).is_irreducible().unwrap());
        assert!(Poly::from_ints(&f(7, 1), &[4, 1]).is_irreducible().unwrap());
        assert!(Poly::one(&f(7, 1)).is_irreducible().is_err());
        // x^4 + x + 1 irreducible over F_2; x^4 + x^2 + 1 = (x^2+x+1)^2 is not
        assert!(Poly::from_ints(&f(2, 1), &[1, 1, 0, 0, 1]).is_irreducible().unwrap());
        assert!(!Poly::from_ints(&f(2, 1), &[1, 0, 1, 0, 1]).is_irreducible().unwrap());
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(&f(2, 1), 3).unwrap(), Poly::from_ints(&f(2, 1), &[1, 0, 1, 1]));
        assert_eq!(smallest_irreducible(&f(5, 1), 1).unwrap(), Poly::x(&f(5, 1)));
    }

    #[test]
    fn text_format() {
        let f9 = f(3, 2);
        let p = Poly::from_raw(&f9, vec![1, 0, 3]).unwrap();
        assert_eq!(p.to_string(), "[1,0] + [0,1]*x^2");
        assert_eq!(Poly::parse(&f9, &p.to_string()).unwrap(), p);
        let f5 = f(5, 1);
        let q = Poly::from_ints(&f5, &[3, 1, 0, 4]);
        assert_eq!(q.to_string(), "3 + 1*x + 4*x^3");
        assert_eq!(Poly::parse(&f5, "3 + x + 4*x^3").unwrap(), q);
        assert_eq!(Poly::parse(&f5, "0").unwrap(), Poly::zero(&f5));
        assert!(Poly::parse(&f5, "7*x").is_err());
        assert!(Poly::parse(&f5, "2*y").is_err());
        assert!(Poly::parse(&f5, "").is_err());
    }
}
