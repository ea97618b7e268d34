//! Splitting fields `F_{q^d} = F_q[y]/(h(y))` built on top of a base field,
//! and canonical primitive roots of unity inside them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigUint;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::smallest_irreducible;

type FieldKey = (u64, u32, Vec<u64>);

static EXTENSIONS: LazyLock<Mutex<HashMap<(FieldKey, usize), Arc<Extension>>>> =
    LazyLock::new(Default::default);
static ROOTS: LazyLock<Mutex<HashMap<(FieldKey, u64), Arc<RootsOfUnity>>>> =
    LazyLock::new(Default::default);

pub(crate) fn clear_caches() {
    EXTENSIONS.lock().unwrap().clear();
    ROOTS.lock().unwrap().clear();
}

/// Elements are coefficient vectors of length `degree` over the base field.
pub(crate) struct Extension {
    base: Field,
    /// Monic, length `degree + 1`.
    modulus: Vec<u64>,
    degree: usize,
}

pub(crate) type ExtElem = Vec<u64>;

impl Extension {
    pub fn get(base: &Field, degree: usize) -> Result<Arc<Extension>> {
        let key = (base.key(), degree);
        if let Some(e) = EXTENSIONS.lock().unwrap().get(&key) {
            return Ok(e.clone());
        }
        let modulus = smallest_irreducible(base, degree)?.coeffs_raw().to_vec();
        let ext = Arc::new(Extension { base: base.clone(), modulus, degree });
        EXTENSIONS.lock().unwrap().entry(key).or_insert(ext.clone());
        Ok(ext)
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn one(&self) -> ExtElem {
        let mut v = vec![0; self.degree];
        v[0] = 1;
        v
    }

    pub fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// The element whose base-`q` digits are those of `index`.
    pub fn from_index(&self, mut index: u64) -> ExtElem {
        let q = self.base.order();
        let mut v = vec![0; self.degree];
        for slot in v.iter_mut() {
            *slot = index % q;
            index /= q;
        }
        v
    }

    /// Embeds a base-field encoding as a constant.
    pub fn constant(&self, c: u64) -> ExtElem {
        let mut v = vec![0; self.degree];
        v[0] = c;
        v
    }

    /// Base-field encoding of `a` if it lies in the base field.
    pub fn as_base(&self, a: &[u64]) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub_raw(x, y)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> ExtElem {
        let f = &self.base;
        let d = self.degree;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = f.add_raw(prod[i + j], f.mul_raw(x, y));
                }
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &h) in self.modulus[..d].iter().enumerate() {
                if h != 0 {
                    prod[k - d + j] = f.sub_raw(prod[k - d + j], f.mul_raw(c, h));
                }
            }
        }
        prod.truncate(d);
        prod
    }

    pub fn pow(&self, a: &[u64], e: &BigUint) -> ExtElem {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    /// Orders elements by their integer encoding `sum a_i q^i`.
    pub fn cmp_encoding(&self, a: &[u64], b: &[u64]) -> Ordering {
        a.iter().rev().cmp(b.iter().rev())
    }
}

/// A canonical primitive `order`-th root of unity `alpha` and all its powers.
pub(crate) struct RootsOfUnity {
    pub ext: Arc<Extension>,
    /// `powers[j] = alpha^j` for `0 <= j < order`.
    pub powers: Vec<ExtElem>,
}

/// The primitive `order`-th root of unity of smallest encoding in the
/// splitting field `F_{q^d}`, `d = ord_order(q)`.
pub(crate) fn roots_of_unity(field: &Field, order: u64) -> Result<Arc<RootsOfUnity>> {
    if order == 0 || arith::gcd(order, field.p()) != 1 {
        return Err(Error::WildRamification { order, p: field.p() });
    }
    let key = (field.key(), order);
    if let Some(r) = ROOTS.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let d = crate::cyclo::mult_order(field.order(), order)? as usize;
    let ext = Extension::get(field, d)?;
    let big_q = BigUint::from(field.order()).pow(d as u32);
    let exponent = (big_q - 1u32) / order;
    let primes = arith::prime_factors(order);

    let mut beta = None;
    for index in 1.. {
        let g = ext.from_index(index);
        if g.iter().all(|&c| c == 0) {
            continue;
        }
        let candidate = ext.pow(&g, &exponent);
        let primitive = primes
            .iter()
            .all(|&l| !ext.is_one(&ext.pow(&candidate, &BigUint::from(order / l))));
        if primitive {
            beta = Some(candidate);
            break;
        }
        if index > 1_000_000 {
            break;
        }
    }
    let beta = beta.ok_or_else(|| {
        Error::InvariantViolation(format!("no primitive {order}-th root of unity found"))
    })?;

    let mut beta_powers = Vec::with_capacity(order as usize);
    let mut x = ext.one();
    for _ in 0..order {
        beta_powers.push(x.clone());
        x = ext.mul(&x, &beta);
    }
    if !ext.is_one(&x) {
        return Err(Error::InvariantViolation("root of unity has wrong order".into()));
    }
    let best = (1..order.max(2))
        .filter(|&k| arith::gcd(k, order) == 1)
        .min_by(|&a, &b| ext.cmp_encoding(&beta_powers[a as usize % order as usize], &beta_powers[b as usize % order as usize]))
        .unwrap_or(1);
    let powers = (0..order)
        .map(|j| beta_powers[((best as u128 * j as u128) % order as u128) as usize].clone())
        .collect();
    let roots = Arc::new(RootsOfUnity { ext, powers });
    ROOTS.lock().unwrap().entry(key).or_insert(roots.clone());
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn primitive_roots_have_exact_order() {
        for (p, s, n) in [(2, 1, 7), (3, 2, 20), (5, 1, 12), (2, 2, 17), (13, 1, 97)] {
            let field = make_field(p, s).unwrap();
            let roots = roots_of_unity(&field, n).unwrap();
            let ext = &roots.ext;
            assert_eq!(roots.powers.len(), n as usize);
            assert!(ext.is_one(&roots.powers[0]));
            for j in 1..n as usize {
                assert!(!ext.is_one(&roots.powers[j]), "alpha^{j} = 1 for n = {n}");
            }
            let alpha = &roots.powers[1 % n as usize];
            assert!(ext.is_one(&ext.pow(alpha, &BigUint::from(n))));
        }
    }

    #[test]
    fn canonical_root_is_smallest_primitive() {
        let field = make_field(3, 2).unwrap();
        let roots = roots_of_unity(&field, 4).unwrap();
        // F_9 already contains the 4th roots of unity; the primitive ones are
        // the square roots of -1, [0,1] (enc 3) and [0,2] (enc 6)
        assert_eq!(roots.ext.as_base(&roots.powers[1]), Some(3));
    }

    #[test]
    fn wild_orders_rejected() {
        let field = make_field(3, 1).unwrap();
        assert!(matches!(roots_of_unity(&field, 6), Err(Error::WildRamification { .. })));
    }
}
