//! Multiplicative orders, `q`-cyclotomic cosets, minimal polynomials and the
//! coset-driven factorizations of `x^m - 1`, `x^m + 1` and `x^n - a`.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::arith;
use crate::error::{Error, Result};
use crate::ext::{self, roots_of_unity};
use crate::gf::Field;
use crate::poly::{Poly, Shift};

type FieldKey = (u64, u32, Vec<u64>);

static FACTORIZATIONS: LazyLock<Mutex<HashMap<(FieldKey, u64, Shift), Factorization>>> =
    LazyLock::new(Default::default);

/// Drops every memoized factorization, splitting field and root of unity.
pub fn clear_caches() {
    FACTORIZATIONS.lock().unwrap().clear();
    ext::clear_caches();
}

/// Smallest `k >= 1` with `q^k = 1 (mod m)`; `ord_1(q) = 1`.
pub fn mult_order(q: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if m == 1 {
        return Ok(1);
    }
    if arith::gcd(q % m, m) != 1 {
        return Err(Error::NotCoprime { q, m });
    }
    let base = q % m;
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = arith::mul_mod(x, base, m);
        k += 1;
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetDomain {
    All,
    /// Odd residues modulo an even modulus; indexes the roots of `x^(m/2) + 1`.
    OddResidues,
}

/// A `q`-cyclotomic coset modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    modulus: u64,
    members: Vec<u64>,
}

impl Coset {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    /// Sorted members.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.members.binary_search(&(i % self.modulus)).is_ok()
    }

    /// Whether the coset is closed under negation modulo `modulus`.
    pub fn is_self_paired(&self) -> bool {
        self.contains((self.modulus - self.representative()) % self.modulus)
    }
}

/// All cosets of `q` partitioning `Z_m` (or its odd residues), sorted by
/// representative.
pub fn cosets(q: u64, m: u64, domain: CosetDomain) -> Result<Vec<Coset>> {
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if m > 1 && arith::gcd(q % m, m) != 1 {
        return Err(Error::NotCoprime { q, m });
    }
    if domain == CosetDomain::OddResidues && m % 2 == 1 {
        return Err(Error::InvalidInput(format!("odd residues need an even modulus, got {m}")));
    }
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start as usize] || (domain == CosetDomain::OddResidues && start % 2 == 0) {
            continue;
        }
        let mut members = vec![];
        let mut i = start;
        while !seen[i as usize] {
            seen[i as usize] = true;
            members.push(i);
            i = arith::mul_mod(i, q, m);
        }
        members.sort_unstable();
        out.push(Coset { modulus: m, members });
    }
    Ok(out)
}

/// Partition of a coset list into self-paired cosets and mirror pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CosetPairing {
    pub self_paired: Vec<usize>,
    pub mirror_pairs: Vec<(usize, usize)>,
}

pub fn coset_pairing(cs: &[Coset]) -> CosetPairing {
    let mut pairing = CosetPairing::default();
    let mut done = vec![false; cs.len()];
    for (i, c) in cs.iter().enumerate() {
        if done[i] {
            continue;
        }
        done[i] = true;
        if c.is_self_paired() {
            pairing.self_paired.push(i);
            continue;
        }
        let neg = (c.modulus - c.representative()) % c.modulus;
        if let Some(j) = cs.iter().position(|d| d.contains(neg)) {
            done[j] = true;
            pairing.mirror_pairs.push((i, j));
        }
    }
    pairing
}

/// `prod_{j in c} (x - alpha^j)` for the canonical primitive `root_order`-th
/// root of unity `alpha`, checked to have coefficients in `field`.
pub fn minimal_poly(c: &Coset, field: &Field, root_order: u64) -> Result<Poly> {
    if c.modulus != root_order {
        return Err(Error::InvalidInput(format!(
            "coset modulus {} differs from root order {root_order}",
            c.modulus
        )));
    }
    let roots = roots_of_unity(field, root_order)?;
    let ext = &roots.ext;
    // coefficients over the extension, low degree first
    let mut acc = vec![ext.one()];
    for &j in &c.members {
        let root = &roots.powers[j as usize];
        let mut next = vec![ext.constant(0); acc.len() + 1];
        for (k, a) in acc.iter().enumerate() {
            next[k + 1] = a.clone();
        }
        for (k, a) in acc.iter().enumerate() {
            let t = ext.mul(a, root);
            next[k] = ext.sub(&next[k], &t);
        }
        acc = next;
    }
    let coeffs = acc
        .iter()
        .map(|a| ext.as_base(a))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| {
            Error::InvariantViolation(format!(
                "minimal polynomial of coset {:?} mod {root_order} escapes {field}",
                c.members
            ))
        })?;
    Poly::from_raw(ext.base(), coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: u64,
}

/// Split of factor indices into self-reciprocal singletons (the `g_i`) and
/// reciprocal pairs `(h_j, h_j^*)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReciprocalPairing {
    pub self_reciprocal: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

/// Complete factorization of `x^n - a` into monic irreducibles, ordered by
/// coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    field: Field,
    target: Poly,
    factors: Vec<Factor>,
    pairing: ReciprocalPairing,
    cosets: Vec<Coset>,
}

impl Factorization {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn target(&self) -> &Poly {
        &self.target
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn pairing(&self) -> &ReciprocalPairing {
        &self.pairing
    }

    /// The coset behind each factor, index-aligned with `factors()`.
    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// Number of self-reciprocal factors.
    pub fn self_reciprocal_count(&self) -> usize {
        self.pairing.self_reciprocal.len()
    }

    /// Number of reciprocal pairs.
    pub fn pair_count(&self) -> usize {
        self.pairing.pairs.len()
    }

    pub fn product(&self) -> Poly {
        self.factors.iter().fold(Poly::one(&self.field), |acc, f| {
            acc.mul(&f.poly.pow(f.multiplicity)).expect("factors share the field")
        })
    }

    /// `prod (multiplicity + 1)`, the number of monic divisors of the target.
    pub fn divisor_count(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.multiplicity as u128 + 1))
    }

    /// Self-reciprocal factor label (`g1`, ...) or pair label (`h1`, `h1*`).
    pub fn label(&self, index: usize) -> String {
        if let Some(pos) = self.pairing.self_reciprocal.iter().position(|&i| i == index) {
            return format!("g{}", pos + 1);
        }
        for (j, &(a, b)) in self.pairing.pairs.iter().enumerate() {
            if a == index {
                return format!("h{}", j + 1);
            }
            if b == index {
                return format!("h{}*", j + 1);
            }
        }
        String::from("?")
    }
}

fn pair_by_reciprocal(factors: &[Factor]) -> Result<ReciprocalPairing> {
    let mut pairing = ReciprocalPairing::default();
    let mut done = vec![false; factors.len()];
    for i in 0..factors.len() {
        if done[i] {
            continue;
        }
        done[i] = true;
        let rec = factors[i].poly.reciprocal()?;
        if rec == factors[i].poly {
            pairing.self_reciprocal.push(i);
            continue;
        }
        let j = (i + 1..factors.len())
            .find(|&j| !done[j] && factors[j].poly == rec)
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "reciprocal of {} is not among the factors",
                    factors[i].poly
                ))
            })?;
        done[j] = true;
        pairing.pairs.push((i, j));
    }
    Ok(pairing)
}

/// Factors the square-free `x^m - 1` (`Shift::Cyclic`) or `x^m + 1`
/// (`Shift::Negacyclic`); requires `gcd(m, p) = 1`.
pub fn factor_unity(field: &Field, m: u64, shift: Shift) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    let p = field.p();
    if m % p == 0 {
        return Err(Error::WildRamification { order: m, p });
    }
    let (root_order, domain) = match shift {
        Shift::Cyclic => (m, CosetDomain::All),
        Shift::Negacyclic => (2 * m, CosetDomain::OddResidues),
    };
    if root_order % p == 0 {
        return Err(Error::WildRamification { order: root_order, p });
    }
    let cs = cosets(field.order(), root_order, domain)?;
    let factors = cs
        .iter()
        .map(|c| Ok(Factor { poly: minimal_poly(c, field, root_order)?, multiplicity: 1 }))
        .collect::<Result<Vec<_>>>()?;
    let pairing = pair_by_reciprocal(&factors)?;
    let fz = Factorization {
        field: field.clone(),
        target: Poly::x_pow_minus(field, m as usize, shift),
        factors,
        pairing,
        cosets: cs,
    };
    if fz.product() != fz.target {
        return Err(Error::InvariantViolation(format!(
            "factors of x^{m} - ({}) do not reconstruct it over {field}",
            shift.constant()
        )));
    }
    Ok(fz)
}

/// Factors `x^n - a` as `(x^eta - a)^(p^r)` with `n = eta p^r`.
pub fn factor_xn_minus_a(field: &Field, n: u64, shift: Shift) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    if shift == Shift::Negacyclic && field.p() == 2 {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    let key = (field.key(), n, shift);
    if let Some(fz) = FACTORIZATIONS.lock().unwrap().get(&key) {
        return Ok(fz.clone());
    }
    let (core, r) = arith::strip_prime_power(n, field.p());
    let mult = field.p().pow(r);
    let mut fz = factor_unity(field, core, shift)?;
    for f in &mut fz.factors {
        f.multiplicity = mult;
    }
    fz.target = Poly::x_pow_minus(field, n as usize, shift);
    FACTORIZATIONS.lock().unwrap().entry(key).or_insert(fz.clone());
    Ok(fz)
}
