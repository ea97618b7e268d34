//! Brute-force ground truth: exhaustive divisor scans checked with generator
//! matrices, and duals computed as null spaces. Nothing here consults the
//! reciprocal pairing used by the structural predicates.

use crate::arith;
use crate::codes::{generator_matrix, ConstacyclicCode, ExponentVector};
use crate::cyclo::{factor_xn_minus_a, Factorization};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::poly::{Poly, Shift};

/// Longest length the oracle accepts.
pub const MAX_LENGTH: usize = 512;

/// Most candidate generators (divisors of degree `n/2`) the oracle will scan.
pub const MAX_CANDIDATES: u128 = 1_000_000;

/// Visits every monic divisor of a factored target once, in lexicographic
/// order of exponent vectors (first factor most significant).
pub struct DivisorIterator<'a> {
    factorization: &'a Factorization,
    cursor: Option<Vec<u64>>,
}

pub fn all_divisors(fz: &Factorization) -> DivisorIterator<'_> {
    DivisorIterator { factorization: fz, cursor: Some(vec![0; fz.factors().len()]) }
}

impl Iterator for DivisorIterator<'_> {
    type Item = Result<(ExponentVector, Poly)>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.cursor.take()?;
        let fz = self.factorization;
        let factors = fz.factors();
        let mut next = current.clone();
        if let Some(pos) = (0..next.len()).rev().find(|&k| next[k] < factors[k].multiplicity) {
            next[pos] += 1;
            for slot in &mut next[pos + 1..] {
                *slot = 0;
            }
            self.cursor = Some(next);
        }
        let item = ExponentVector::new(fz, current).and_then(|v| {
            let g = v.generator(fz);
            if g.divides(fz.target())? {
                Ok((v, g))
            } else {
                Err(Error::InvariantViolation(format!("{g} does not divide {}", fz.target())))
            }
        });
        Some(item)
    }
}

/// Number of exponent vectors whose divisor has degree exactly `target`.
pub fn divisors_of_degree(fz: &Factorization, target: usize) -> u128 {
    let mut ways = vec![0u128; target + 1];
    ways[0] = 1;
    for f in fz.factors() {
        let d = f.poly.degree().unwrap_or(0);
        let mut next = vec![0u128; target + 1];
        for (deg, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for e in 0..=f.multiplicity as usize {
                let nd = deg + e * d;
                if nd > target {
                    break;
                }
                next[nd] = next[nd].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[target]
}

/// Whether the code generated by `g` is self-orthogonal, i.e. `G G^T = 0`
/// for its generator matrix `G`. The rows of `G` are non-wrapping shifts of
/// `g`, so entry `(i, j)` depends only on `j - i` and each distinct entry is
/// computed once, stopping at the first nonzero one.
fn literal_self_orthogonal(field: &Field, n: usize, g: &Poly) -> bool {
    let k = n - g.degree().expect("nonzero");
    let c = g.coeffs_raw();
    (0..k.min(c.len())).all(|d| {
        let entry = c[..c.len() - d]
            .iter()
            .zip(&c[d..])
            .fold(0, |acc, (&x, &y)| field.add_raw(acc, field.mul_raw(x, y)));
        entry == 0
    })
}

/// Every monic divisor `g` of `x^n - a` with `deg g = n/2` whose generator
/// matrix satisfies `G G^T = 0`, in divisor enumeration order.
pub fn oracle_selfdual_search(field: &Field, n: usize, shift: Shift) -> Result<Vec<Poly>> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    if n > MAX_LENGTH {
        return Err(Error::OracleRangeExceeded(format!("length {n} exceeds {MAX_LENGTH}")));
    }
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let fz = factor_xn_minus_a(field, n as u64, shift)?;
    let half = n / 2;
    let candidates = divisors_of_degree(&fz, half);
    if candidates > MAX_CANDIDATES {
        return Err(Error::OracleRangeExceeded(format!(
            "{candidates} divisors of degree {half} exceed {MAX_CANDIDATES}"
        )));
    }
    let mut search = Search {
        field,
        n,
        fz: &fz,
        degrees: fz.factors().iter().map(|f| f.poly.degree().unwrap_or(0)).collect(),
        found: Vec::new(),
    };
    let remaining: Vec<usize> = {
        let mut tail = vec![0; search.degrees.len() + 1];
        for i in (0..search.degrees.len()).rev() {
            tail[i] = tail[i + 1] + search.degrees[i] * fz.factors()[i].multiplicity as usize;
        }
        tail
    };
    search.descend(0, Poly::one(field), 0, &remaining);
    for g in &search.found {
        if !g.divides(fz.target())? {
            return Err(Error::InvariantViolation(format!("{g} does not divide {}", fz.target())));
        }
    }
    Ok(search.found)
}

struct Search<'a> {
    field: &'a Field,
    n: usize,
    fz: &'a Factorization,
    degrees: Vec<usize>,
    found: Vec<Poly>,
}

impl Search<'_> {
    fn descend(&mut self, index: usize, partial: Poly, degree: usize, remaining: &[usize]) {
        let half = self.n / 2;
        if index == self.degrees.len() {
            if degree == half && literal_self_orthogonal(self.field, self.n, &partial) {
                self.found.push(partial);
            }
            return;
        }
        let factor = &self.fz.factors()[index];
        let d = self.degrees[index];
        let mut current = partial;
        for e in 0..=factor.multiplicity as usize {
            let deg = degree + e * d;
            if deg > half {
                break;
            }
            if deg + remaining[index + 1] >= half {
                self.descend(index + 1, current.clone(), deg, remaining);
            }
            if e < factor.multiplicity as usize {
                current = current.mul(&factor.poly).expect("same field");
            }
        }
    }
}

/// Basis of the null space of the generator matrix, i.e. the dual code
/// computed from the inner-product definition.
pub fn nullspace_dual(code: &ConstacyclicCode) -> Result<Matrix> {
    Ok(generator_matrix(code)?.nullspace())
}

/// `ord_m(q)` by walking powers one step at a time.
pub fn brute_mult_order(q: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let q = q % m;
    let mut x = q;
    for k in 1..=m {
        if x == 1 {
            return Some(k);
        }
        x = arith::mul_mod(x, q, m);
    }
    None
}

/// Whether the orbit of `i` under multiplication by `q` mod `m` contains `-i`.
pub fn brute_orbit_contains_negation(q: u64, m: u64, i: u64) -> bool {
    let target = (m - i % m) % m;
    let mut x = i % m;
    for _ in 0..m {
        if x == target {
            return true;
        }
        x = arith::mul_mod(x, q, m);
    }
    false
}

/// Whether `x^2 = -1` has a solution, by scanning every element.
pub fn brute_has_sqrt_minus_one(field: &Field) -> Result<bool> {
    if field.order() > 1 << 16 {
        return Err(Error::OracleRangeExceeded(format!("{field} is too large to scan")));
    }
    let minus_one = field.neg_raw(1);
    Ok((0..field.order()).any(|x| field.mul_raw(x, x) == minus_one))
}

/// Whether `f` equals the monic associate of its coefficient reversal,
/// computed without the polynomial reciprocal routine.
pub fn brute_is_palindromic_up_to_scalar(f: &Poly) -> bool {
    let field = f.field();
    let c = f.coeffs_raw();
    if c.is_empty() || c[0] == 0 {
        return false;
    }
    let lead = *c.last().expect("nonempty");
    let scale = field.mul_raw(c[0], field.inv_raw(lead));
    c.iter().zip(c.iter().rev()).all(|(&a, &b)| a == field.mul_raw(scale, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{dual, make_code};
    use crate::gf::make_field;

    #[test]
    fn divisor_counts() {
        let f5 = make_field(5, 1).unwrap();
        let fz = factor_xn_minus_a(&f5, 2, Shift::Negacyclic).unwrap();
        let all: Vec<Poly> = all_divisors(&fz).map(|r| r.unwrap().1).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], Poly::one(&f5));
        assert_eq!(all[3], Poly::from_ints(&f5, &[1, 0, 1]));

        let f2 = make_field(2, 1).unwrap();
        let fz = factor_xn_minus_a(&f2, 6, Shift::Cyclic).unwrap();
        assert_eq!(all_divisors(&fz).count(), 9);
        assert_eq!(divisors_of_degree(&fz, 3), 1);

        let fz = factor_xn_minus_a(&f5, 10, Shift::Negacyclic).unwrap();
        assert_eq!(all_divisors(&fz).count(), 36);
        assert_eq!(divisors_of_degree(&fz, 5), 6);
    }

    #[test]
    fn search_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(
            oracle_selfdual_search(&f2, 6, Shift::Cyclic).unwrap(),
            vec![Poly::from_ints(&f2, &[1, 0, 0, 1])]
        );
        let f3 = make_field(3, 1).unwrap();
        assert!(oracle_selfdual_search(&f3, 6, Shift::Negacyclic).unwrap().is_empty());
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(oracle_selfdual_search(&f5, 10, Shift::Negacyclic).unwrap().len(), 6);
        assert!(matches!(
            oracle_selfdual_search(&f5, 520, Shift::Negacyclic),
            Err(Error::OracleRangeExceeded(_))
        ));
    }

    #[test]
    fn brute_number_theory() {
        assert_eq!(brute_mult_order(5, 7), Some(6));
        assert_eq!(brute_mult_order(2, 17), Some(8));
        assert_eq!(brute_mult_order(3, 6), None);
        assert!(brute_orbit_contains_negation(5, 7, 1));
        assert!(!brute_orbit_contains_negation(2, 7, 1));
        assert!(brute_has_sqrt_minus_one(&make_field(5, 1).unwrap()).unwrap());
        assert!(!brute_has_sqrt_minus_one(&make_field(3, 1).unwrap()).unwrap());
        assert!(brute_has_sqrt_minus_one(&make_field(3, 2).unwrap()).unwrap());
        let f3 = make_field(3, 1).unwrap();
        assert!(brute_is_palindromic_up_to_scalar(&Poly::from_ints(&f3, &[1, 0, 1])));
        assert!(brute_is_palindromic_up_to_scalar(&Poly::from_ints(&f3, &[2, 0, 1])));
        assert!(!brute_is_palindromic_up_to_scalar(&Poly::from_ints(&f3, &[1, 1, 0, 1])));
    }

    #[test]
    fn nullspace_examples() {
        let f3 = make_field(3, 1).unwrap();
        let id = make_code(&f3, 4, Shift::Negacyclic, &Poly::one(&f3)).unwrap();
        assert_eq!(nullspace_dual(&id).unwrap().rows(), 0);

        let f2 = make_field(2, 1).unwrap();
        let c = make_code(&f2, 6, Shift::Cyclic, &Poly::from_ints(&f2, &[1, 0, 0, 1])).unwrap();
        let ns = nullspace_dual(&c).unwrap();
        assert!(ns.same_row_space(&generator_matrix(&c).unwrap()));
        assert!(ns.same_row_space(&generator_matrix(&dual(&c).unwrap()).unwrap()));
    }
}
