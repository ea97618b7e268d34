//! Executable forms of the structural statements about self-dual negacyclic
//! and cyclic codes, and a harness that evaluates every built-in instance
//! against the engine and the brute-force oracle.
//!
//! Stated outcomes are data: a verdict records what the statement claims,
//! what the predicate computes, and what the oracle finds, and is never
//! reconciled after the fact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::codes::{count_selfdual, count_selfdual_negacyclic, cyclic_divisor_structure, make_code, mu_map, mu_transport, MuTarget};
use crate::cyclo::{coset_pairing, cosets, factor_unity, factor_xn_minus_a, minimal_poly, mult_order, CosetDomain};
use crate::error::{Error, Result};
use crate::gf::{is_quadratic_residue, make_field, solve_x2_plus_1, Field};
use crate::oracle;
use crate::poly::{Poly, Shift};

pub const EXISTS: &str = "exists";
pub const NONE: &str = "none";
pub const HOLDS: &str = "holds";
pub const FAILS: &str = "fails";

// ---------------------------------------------------------------------------
// Predicates

/// Outcome of the factorization criterion with the pairing as evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm1Evidence {
    pub exists: bool,
    /// Number of self-reciprocal factors of `x^n + 1`.
    pub self_reciprocal: usize,
    /// Number of reciprocal pairs.
    pub pairs: usize,
    /// Common multiplicity `p^r`.
    pub multiplicity: u64,
}

/// Self-dual negacyclic codes of length `n` exist iff no irreducible factor
/// of `x^n + 1` is self-reciprocal.
pub fn thm1_exists_selfdual(field: &Field, n: usize) -> Result<Thm1Evidence> {
    if field.p() == 2 {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    let fz = factor_xn_minus_a(field, n as u64, Shift::Negacyclic)?;
    Ok(Thm1Evidence {
        exists: fz.self_reciprocal_count() == 0,
        self_reciprocal: fz.self_reciprocal_count(),
        pairs: fz.pair_count(),
        multiplicity: fz.factors().first().map_or(1, |f| f.multiplicity),
    })
}

/// The order criterion for length `2 m p^r`, as stated: false when `-1` has
/// no square root, otherwise whether `ord_m(q)` is odd.
pub fn thm3_exists_selfdual_via_order(field: &Field, m: u64, _r: u32) -> Result<bool> {
    let p = field.p();
    if p == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    if m % 2 == 0 {
        return Err(Error::ShapeMismatch(format!("m = {m} must be odd")));
    }
    if arith::gcd(m, p) != 1 {
        return Err(Error::NotCoprime { q: p, m });
    }
    if solve_x2_plus_1(field)?.is_none() {
        return Ok(false);
    }
    Ok(mult_order(field.order(), m)? % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma6Result {
    pub order: u64,
    /// 4 when `q = 1 mod 4`, else 2.
    pub required_divisor: u64,
    pub holds: bool,
    /// Whether `ord_q(p) = q - 1`, the intermediate step of the usual argument.
    pub order_is_q_minus_1: bool,
}

/// For distinct odd primes with `p` a non-residue mod `q`: `4 | ord_q(p)`
/// when `q = 1 mod 4` and `2 | ord_q(p)` when `q = 3 mod 4`.
pub fn lemma6_order_congruence(p: u64, q: u64) -> Result<Lemma6Result> {
    if p == q || p % 2 == 0 || q % 2 == 0 || !arith::is_prime(p) || !arith::is_prime(q) {
        return Err(Error::HypothesisUnmet(format!("{p} and {q} must be distinct odd primes")));
    }
    if is_quadratic_residue(p as i64, q)? {
        return Err(Error::HypothesisUnmet(format!("{p} is a quadratic residue mod {q}")));
    }
    let order = mult_order(p, q)?;
    let required_divisor = if q % 4 == 1 { 4 } else { 2 };
    Ok(Lemma6Result {
        order,
        required_divisor,
        holds: order % required_divisor == 0,
        order_is_q_minus_1: order == q - 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor1Instance {
    pub p: u64,
    pub s: u32,
    pub q: u64,
    pub alpha: u32,
    pub n: u64,
}

/// Lengths `2 p q^alpha` over `F_p` and `F_{p^2}` claimed to carry no
/// self-dual negacyclic code.
pub fn cor1_no_selfdual_lengths(p: u64, q: u64, alpha_max: u32) -> Result<Vec<Cor1Instance>> {
    let hyp = |msg: &str| Err(Error::HypothesisUnmet(format!("({p}, {q}): {msg}")));
    if p == q || !arith::is_prime(p) || !arith::is_prime(q) || p == 2 || q == 2 {
        return hyp("need distinct odd primes");
    }
    if p % 4 != 1 || q % 4 != 1 {
        return hyp("need p = q = 1 mod 4");
    }
    if is_quadratic_residue(p as i64, q)? {
        return hyp("p is a quadratic residue mod q");
    }
    let mut out = Vec::new();
    for alpha in 1..=alpha_max {
        let n = q
            .checked_pow(alpha)
            .and_then(|v| v.checked_mul(2 * p))
            .ok_or_else(|| Error::InvalidInput("length overflows".into()))?;
        for s in [1, 2] {
            out.push(Cor1Instance { p, s, q, alpha, n });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderTower {
    pub p: u64,
    pub k: u32,
    pub e: u64,
    /// `orders[l] = ord_p(2^(2^l))` for `0 <= l <= k`.
    pub orders: Vec<u64>,
    pub holds: bool,
}

/// `ord_p(2) = 2^k e` with `e` odd, and `ord_p(2^(2^l)) = 2^(k-l) e`.
pub fn prop2_order_tower(p: u64) -> Result<OrderTower> {
    if !arith::is_prime(p) || p % 8 != 1 {
        return Err(Error::HypothesisUnmet(format!("{p} is not a prime = 1 mod 8")));
    }
    let ord = mult_order(2, p)?;
    let k = ord.trailing_zeros();
    let e = ord >> k;
    let mut orders = Vec::with_capacity(k as usize + 1);
    let mut base = 2 % p;
    for _ in 0..=k {
        orders.push(mult_order(base, p)?);
        base = arith::mul_mod(base, base, p);
    }
    let holds = orders.iter().enumerate().all(|(l, &o)| o == (1u64 << (k as usize - l)) * e);
    Ok(OrderTower { p, k, e, orders, holds })
}

/// Which case of the characteristic-two uniqueness statement `(p, s)` falls
/// under, if any.
pub fn cor2_case(p: u64, s: u32) -> Option<&'static str> {
    if p == 2 || !arith::is_prime(p) || s == 0 {
        return None;
    }
    match p % 8 {
        3 if s % 2 == 1 => Some("i"),
        5 if s % 2 == 1 || s % 4 == 2 => Some("ii"),
        1 => {
            let ord = mult_order(2, p).ok()?;
            let k = ord.trailing_zeros();
            let l = s.trailing_zeros();
            (s.is_power_of_two() && l > 0 && l < k).then_some("iii")
        }
        _ => None,
    }
}

/// The claimed unique self-dual cyclic generator `(x^(p^alpha) + 1)^(2^(r-1))`
/// of length `2^r p^alpha` over `F_{2^s}`, or `None` outside the cases.
pub fn cor2_char2_unique_cyclic(p: u64, alpha: u32, r: u32, s: u32) -> Result<Option<Poly>> {
    if r == 0 || alpha == 0 || cor2_case(p, s).is_none() {
        return Ok(None);
    }
    let field = make_field(2, s)?;
    let pa = p.checked_pow(alpha).ok_or_else(|| Error::InvalidInput("p^alpha overflows".into()))?;
    let base = Poly::x_pow_minus(&field, pa as usize, Shift::Negacyclic);
    Ok(Some(base.pow(1 << (r - 1))))
}

// ---------------------------------------------------------------------------
// Verdicts

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    RefutedByOracle,
    OracleSkipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::RefutedByOracle => "refuted-by-oracle",
            Status::OracleSkipped => "oracle-skipped",
        }
    }

    fn judge(paper: &str, engine: &str, oracle: Option<&str>) -> Status {
        match oracle {
            None => Status::OracleSkipped,
            Some(o) if o == paper && o == engine => Status::Confirmed,
            Some(_) => Status::RefutedByOracle,
        }
    }
}

/// Parameters of a claim instance; absent fields do not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
}

impl Instance {
    fn field(p: u64, s: u32) -> Instance {
        Instance { p: Some(p), s: Some(s), ..Instance::default() }
    }

    fn negacyclic(p: u64, s: u32, n: u64) -> Instance {
        let (core, r) = arith::strip_prime_power(n, p);
        let m = (core % 2 == 0).then_some(core / 2);
        Instance { a: Some(-1), m, n: Some(n), r: Some(r), ..Instance::field(p, s) }
    }

    fn sweep(range: impl Into<String>) -> Instance {
        Instance { range: Some(range.into()), ..Instance::default() }
    }
}

/// Fields are declared in alphabetical order so the serialized form is
/// stable under a round trip through a generic JSON value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub engine_outcome: String,
    pub evidence: BTreeMap<String, String>,
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_outcome: Option<String>,
    pub paper_outcome: String,
    pub status: Status,
}

impl ClaimVerdict {
    fn new(
        claim_id: impl Into<String>,
        instance: Instance,
        paper: impl Into<String>,
        engine: impl Into<String>,
        oracle: Option<String>,
    ) -> ClaimVerdict {
        let paper = paper.into();
        let engine = engine.into();
        let status = Status::judge(&paper, &engine, oracle.as_deref());
        ClaimVerdict {
            claim_id: claim_id.into(),
            engine_outcome: engine,
            evidence: BTreeMap::new(),
            instance,
            note: None,
            oracle_outcome: oracle,
            paper_outcome: paper,
            status,
        }
    }

    fn failed(claim_id: impl Into<String>, instance: Instance, paper: impl Into<String>, err: &Error) -> ClaimVerdict {
        ClaimVerdict::new(claim_id, instance, paper, format!("error: {err}"), None)
    }

    fn with(mut self, key: &str, value: impl ToString) -> ClaimVerdict {
        self.evidence.insert(key.to_string(), value.to_string());
        self
    }

    fn noted(mut self, note: impl Into<String>) -> ClaimVerdict {
        self.note = Some(note.into());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimsConfig {
    /// Longest length in the per-length sweeps.
    pub max_n: usize,
    /// Largest odd modulus in the coset sweeps.
    pub max_m: u64,
}

impl Default for ClaimsConfig {
    fn default() -> Self {
        ClaimsConfig { max_n: 40, max_m: 99 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimsReport {
    /// Sorted by `claim_id`.
    pub verdicts: Vec<ClaimVerdict>,
    /// Instances where the factorization criterion and the oracle disagree.
    pub mismatches: Vec<String>,
}

impl ClaimsReport {
    pub fn to_json_lines(&self) -> String {
        self.verdicts.iter().map(|v| v.to_json_line() + "\n").collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn get(&self, claim_id: &str) -> Option<&ClaimVerdict> {
        self.verdicts.iter().find(|v| v.claim_id == claim_id)
    }
}

/// Aligned text table of the verdicts.
pub fn render_table(verdicts: &[ClaimVerdict]) -> String {
    let rows: Vec<[String; 5]> = verdicts
        .iter()
        .map(|v| {
            [
                v.claim_id.clone(),
                v.status.as_str().to_string(),
                v.paper_outcome.clone(),
                v.engine_outcome.clone(),
                v.oracle_outcome.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    let header = ["claim_id", "status", "paper", "engine", "oracle"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).expect("write to string");
    }
    out
}

type Evaluated = (ClaimVerdict, Option<String>);
type Task = Box<dyn FnOnce() -> Vec<Evaluated> + Send>;

fn plain(v: ClaimVerdict) -> Vec<Evaluated> {
    vec![(v, None)]
}

fn yes_no(b: bool) -> &'static str {
    if b {
        EXISTS
    } else {
        NONE
    }
}

fn field_name(p: u64, s: u32) -> String {
    format!("F{}", p.pow(s))
}

/// Oracle list for `x^n + 1`, or `None` when out of range.
fn oracle_negacyclic(field: &Field, n: usize) -> Option<Vec<Poly>> {
    oracle::oracle_selfdual_search(field, n, Shift::Negacyclic).ok()
}

/// Which existence predicate supplies the engine outcome.
#[derive(Clone, Copy)]
enum Engine {
    Thm1,
    Thm3,
}

/// Existence of a self-dual negacyclic code of length `n` over `F_{p^s}`.
fn existence_claim(id: String, p: u64, s: u32, n: u64, paper: bool, engine: Engine) -> Evaluated {
    let instance = Instance::negacyclic(p, s, n);
    let paper = yes_no(paper);
    let run = || -> Result<Evaluated> {
        let field = make_field(p, s)?;
        let thm1 = thm1_exists_selfdual(&field, n as usize)?;
        let (core, r) = arith::strip_prime_power(n, p);
        let thm3 = if core % 4 == 2 { Some(thm3_exists_selfdual_via_order(&field, core / 2, r)?) } else { None };
        let engine_outcome = match engine {
            Engine::Thm1 => thm1.exists,
            Engine::Thm3 => thm3.ok_or_else(|| Error::ShapeMismatch(format!("{n} is not oddly even")))?,
        };
        let oracle_list = oracle_negacyclic(&field, n as usize);
        let oracle_outcome = oracle_list.as_ref().map(|l| yes_no(!l.is_empty()).to_string());
        let mut v = ClaimVerdict::new(id.clone(), instance.clone(), paper, yes_no(engine_outcome), oracle_outcome)
            .with("thm1", yes_no(thm1.exists))
            .with("pairing", format!("s={},t={}", thm1.self_reciprocal, thm1.pairs))
            .with("count", count_selfdual_negacyclic(&field, n as usize)?);
        if let Some(t3) = thm3 {
            v = v.with("thm3", yes_no(t3)).with("ord_m(q)", mult_order(field.order(), core / 2)?);
        }
        if let Some(list) = &oracle_list {
            v = v.with("oracle_count", list.len());
        }
        let mismatch = oracle_list
            .filter(|l| l.is_empty() == thm1.exists)
            .map(|l| format!("{id}: thm1 says {}, oracle found {} codes", yes_no(thm1.exists), l.len()));
        Ok((v, mismatch))
    };
    run().unwrap_or_else(|e| (ClaimVerdict::failed(id.clone(), instance.clone(), paper, &e), None))
}

/// Number of self-dual negacyclic codes, with the oracle count.
fn count_claim(id: &str, p: u64, s: u32, n: u64, paper: u128, note: &str) -> Evaluated {
    let instance = Instance::negacyclic(p, s, n);
    let paper = format!("count={paper}");
    let run = || -> Result<Evaluated> {
        let field = make_field(p, s)?;
        let thm1 = thm1_exists_selfdual(&field, n as usize)?;
        let count = count_selfdual_negacyclic(&field, n as usize)?;
        let oracle_list = oracle_negacyclic(&field, n as usize);
        let v = ClaimVerdict::new(
            id,
            instance.clone(),
            paper.clone(),
            format!("count={count}"),
            oracle_list.as_ref().map(|l| format!("count={}", l.len())),
        )
        .with("thm1", yes_no(thm1.exists))
        .with("pairing", format!("s={},t={}", thm1.self_reciprocal, thm1.pairs))
        .noted(note);
        let mismatch = oracle_list
            .filter(|l| l.is_empty() == thm1.exists)
            .map(|l| format!("{id}: thm1 says {}, oracle found {} codes", yes_no(thm1.exists), l.len()));
        Ok((v, mismatch))
    };
    run().unwrap_or_else(|e| (ClaimVerdict::failed(id, instance.clone(), paper.clone(), &e), None))
}

/// Negacyclic codes of length `2 p^r` are generated by `(x - g)^i (x + g)^j`
/// with `0 <= i, j <= p^r`.
fn example1_claim(p: u64, s: u32, n: u64) -> Vec<Evaluated> {
    let id = format!("example-1-{}-n{n}", field_name(p, s));
    let instance = Instance::negacyclic(p, s, n);
    let (_, r) = arith::strip_prime_power(n, p);
    let expected = (p.pow(r) + 1).pow(2);
    let paper = format!("ideals={expected}");
    let run = || -> Result<ClaimVerdict> {
        let field = make_field(p, s)?;
        let gamma = solve_x2_plus_1(&field)?.ok_or(Error::NoSquareRootOfMinusOne)?;
        let fz = factor_xn_minus_a(&field, n, Shift::Negacyclic)?;
        let linear: Vec<Poly> = [gamma.neg(), gamma.clone()]
            .iter()
            .map(|c| Poly::from_elements(&field, &[c.clone(), field.one()]))
            .collect::<Result<_>>()?;
        let shape = fz.factors().len() == 2 && fz.factors().iter().all(|f| linear.contains(&f.poly));
        let engine = match (shape, fz.divisor_count()) {
            (true, Some(c)) => format!("ideals={c}"),
            _ => FAILS.to_string(),
        };
        let oracle = oracle::all_divisors(&fz).filter(|d| d.is_ok()).count();
        Ok(ClaimVerdict::new(id.clone(), instance.clone(), paper.clone(), engine, Some(format!("ideals={oracle}")))
            .with("gamma", gamma)
            .noted("the generator family is printed as (x-g)^i(x+g^j); read as (x-g)^i(x+g)^j"))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), paper.clone(), &e)))
}

/// The factors of `x^(2m) + 1` are the monic `f(g x)` and `f(-g x)` for the
/// factors `f` of `x^m - 1`, so every negacyclic code of length `2 m p^r`
/// is generated by a product of their powers with exponents at most `p^r`.
fn thm2_claim(p: u64, s: u32, m: u64, r: u32) -> Vec<Evaluated> {
    let n = 2 * m * p.pow(r);
    let id = format!("thm2-{}-m{m}-r{r}", field_name(p, s));
    let instance = Instance::negacyclic(p, s, n);
    let run = || -> Result<ClaimVerdict> {
        let field = make_field(p, s)?;
        let base = factor_unity(&field, m, Shift::Cyclic)?;
        let mut images = Vec::new();
        for f in base.factors() {
            let code = make_code(&field, m as usize, Shift::Cyclic, &f.poly)?;
            for target in [MuTarget::MinusGamma, MuTarget::PlusGamma] {
                images.push(mu_transport(&code, target)?.generator);
            }
        }
        let fz = factor_xn_minus_a(&field, n, Shift::Negacyclic)?;
        let mut actual: Vec<Poly> = fz.factors().iter().map(|f| f.poly.clone()).collect();
        let key = |a: &Poly| a.coeffs_raw().to_vec();
        images.sort_by_key(key);
        actual.sort_by_key(key);
        let engine = if images == actual { HOLDS } else { FAILS };
        let expected = (p.pow(r) as u128 + 1).pow(images.len() as u32);
        let scanned = oracle::all_divisors(&fz).filter(|d| d.is_ok()).count() as u128;
        let oracle = if scanned == expected { HOLDS } else { FAILS };
        Ok(ClaimVerdict::new(id.clone(), instance.clone(), HOLDS, engine, Some(oracle.to_string()))
            .with("factors", images.len())
            .with("divisors", scanned)
            .noted("exponents range over [0, p^r]; the statement bounds them by p^s"))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), HOLDS, &e)))
}

/// Cyclic codes of length `2 m p^r`: `x^n - 1 = prod (f_i(x) f_i(-x))^(p^r)`.
fn prop1_claim(p: u64, s: u32, n: u64) -> Vec<Evaluated> {
    let id = format!("prop1-{}-n{n}", field_name(p, s));
    let instance = Instance { a: Some(1), n: Some(n), ..Instance::field(p, s) };
    let run = || -> Result<ClaimVerdict> {
        let field = make_field(p, s)?;
        let st = cyclic_divisor_structure(&field, n as usize)?;
        let base = factor_unity(&field, st.m, Shift::Cyclic)?;
        let mut expected: Vec<Poly> = Vec::new();
        for f in base.factors() {
            expected.push(f.poly.clone());
            expected.push(f.poly.negate_variable()?);
        }
        let mut actual: Vec<Poly> = st.factorization.factors().iter().map(|f| f.poly.clone()).collect();
        let key = |a: &Poly| a.coeffs_raw().to_vec();
        expected.sort_by_key(key);
        actual.sort_by_key(key);
        let engine = if expected == actual && st.involution.len() == base.factors().len() { HOLDS } else { FAILS };
        let template = (p.pow(st.r) as u128 + 1).pow(2 * base.factors().len() as u32);
        let scanned = oracle::all_divisors(&st.factorization).filter(|d| d.is_ok()).count() as u128;
        let oracle = if scanned == template { HOLDS } else { FAILS };
        Ok(ClaimVerdict::new(id.clone(), instance.clone(), HOLDS, engine, Some(oracle.to_string()))
            .with("k", base.factors().len())
            .with("codes", scanned))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), HOLDS, &e)))
}

/// Self-dual cyclic codes do not exist in odd characteristic.
fn cyclic_odd_char_claim(p: u64, s: u32, max_n: usize) -> Vec<Evaluated> {
    let id = format!("cyclic-selfdual-odd-char-{}", field_name(p, s));
    let instance = Instance { a: Some(1), range: Some(format!("n<={max_n}")), ..Instance::field(p, s) };
    let run = || -> Result<ClaimVerdict> {
        let field = make_field(p, s)?;
        let mut engine_total = 0u128;
        let mut oracle_total = 0usize;
        let mut skipped = Vec::new();
        for n in 1..=max_n {
            engine_total += count_selfdual(&field, n, Shift::Cyclic)?;
            match oracle::oracle_selfdual_search(&field, n, Shift::Cyclic) {
                Ok(l) => oracle_total += l.len(),
                Err(Error::OracleRangeExceeded(_)) => skipped.push(n.to_string()),
                Err(e) => return Err(e),
            }
        }
        let oracle = skipped.is_empty().then(|| yes_no(oracle_total > 0).to_string());
        let mut v = ClaimVerdict::new(id.clone(), instance.clone(), NONE, yes_no(engine_total > 0), oracle)
            .with("oracle_codes_found", oracle_total);
        if !skipped.is_empty() {
            v = v.with("oracle_skipped_lengths", skipped.join(","));
        }
        Ok(v)
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), NONE, &e)))
}

fn lemma2_sweep() -> Vec<Evaluated> {
    let id = "lemma2-sweep";
    let instance = Instance::sweep("odd p<100, s<=4");
    let run = || -> Result<ClaimVerdict> {
        let mut engine_ok = true;
        let mut oracle_ok = true;
        let mut checked = 0;
        let mut scanned = 0;
        for p in (3..100).filter(|&p| arith::is_prime(p)) {
            for s in 1..=4u32 {
                let field = make_field(p, s)?;
                let stated = p % 4 == 1 || s % 2 == 0;
                let gamma = solve_x2_plus_1(&field)?;
                if let Some(g) = &gamma {
                    engine_ok &= g.mul(g)? == field.from_int(-1);
                }
                engine_ok &= gamma.is_some() == stated;
                checked += 1;
                if let Ok(found) = oracle::brute_has_sqrt_minus_one(&field) {
                    oracle_ok &= found == stated;
                    scanned += 1;
                }
            }
        }
        let f3 = make_field(3, 1)?;
        engine_ok &= Poly::from_ints(&f3, &[1, 0, 1]).is_irreducible()?;
        Ok(ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .with("fields", checked)
        .with("oracle_scanned_fields", scanned))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

/// Number of monic divisors of `x^m - lambda`, from the factors of
/// `x^(4m) - 1` that divide it.
fn twisted_divisor_count(field: &Field, m: usize, lambda: &crate::gf::FieldElement) -> Result<u128> {
    let target = Poly::x_pow_minus_elem(lambda, m);
    let big = factor_xn_minus_a(field, 4 * m as u64, Shift::Cyclic)?;
    let mut count = 1u128;
    let mut degree = 0;
    for f in big.factors() {
        if f.poly.divides(&target)? {
            count *= 2;
            degree += f.poly.degree().unwrap_or(0);
        }
    }
    if degree != m {
        return Err(Error::InvariantViolation(format!("x^{m} - {lambda} is not square-free over {field}")));
    }
    Ok(count)
}

fn lemma3_claim() -> Vec<Evaluated> {
    let id = "lemma3-mu";
    let instance = Instance::sweep("q in {5,9,13,25}, m in {1,3,5,7} coprime to q");
    let run = || -> Result<ClaimVerdict> {
        let mut engine_ok = true;
        let mut oracle_ok = true;
        for (p, s) in [(5, 1), (3, 2), (13, 1), (5, 2)] {
            let field = make_field(p, s)?;
            for m in [1usize, 3, 5, 7].into_iter().filter(|&m| m as u64 % p != 0) {
                let fz = factor_xn_minus_a(&field, m as u64, Shift::Cyclic)?;
                for target in [MuTarget::MinusGamma, MuTarget::PlusGamma] {
                    for d in oracle::all_divisors(&fz) {
                        let (_, g) = d?;
                        let code = make_code(&field, m, Shift::Cyclic, &g)?;
                        let img = mu_transport(&code, target)?;
                        engine_ok &= img.dimension() == code.dimension();
                    }
                    let modulus = crate::codes::mu_scale(&field, m, target)?.1;
                    let tw = Poly::x_pow_minus_elem(&modulus, m);
                    let a = Poly::x(&field).pow(m as u64 - 1).add(&Poly::one(&field))?;
                    let b = Poly::from_ints(&field, &[2, 1]);
                    let unity = Poly::x_pow_minus(&field, m, Shift::Cyclic);
                    let lhs = mu_map(&a.mul(&b)?.rem(&unity)?, m, target)?.rem(&tw)?;
                    let rhs = mu_map(&a, m, target)?.mul(&mu_map(&b, m, target)?)?.rem(&tw)?;
                    engine_ok &= lhs == rhs;
                    let lattice = twisted_divisor_count(&field, m, &modulus)?;
                    oracle_ok &= Some(lattice) == fz.divisor_count();
                }
            }
        }
        Ok(ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .noted("both maps (to x^m - g and to x^m + g) are treated as part of the statement"))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

const SWEEP_QS: [u64; 8] = [2, 3, 4, 5, 7, 9, 11, 13];

fn field_of_order(q: u64) -> Result<Field> {
    for p in 2..=q {
        if q % p == 0 {
            let mut s = 0;
            let mut t = q;
            while t % p == 0 {
                t /= p;
                s += 1;
            }
            if t != 1 {
                break;
            }
            return make_field(p, s);
        }
    }
    Err(Error::InvalidInput(format!("{q} is not a prime power")))
}

fn lemma4_sweep(max_m: u64) -> Vec<Evaluated> {
    let id = "lemma4-sweep";
    let instance = Instance::sweep(format!("odd m<={max_m}, q in {SWEEP_QS:?}"));
    let run = || -> Result<ClaimVerdict> {
        let mut engine_ok = true;
        let mut oracle_ok = true;
        let mut count = 0;
        for q in SWEEP_QS {
            let field = field_of_order(q)?;
            for m in (1..=max_m).step_by(2).filter(|&m| arith::gcd(m, q) == 1) {
                let cs = cosets(q, m, CosetDomain::All)?;
                let pairing = coset_pairing(&cs);
                for (i, c) in cs.iter().enumerate() {
                    let f = minimal_poly(c, &field, m)?;
                    let self_rec = f.is_self_reciprocal()?;
                    engine_ok &= pairing.self_paired.contains(&i) == self_rec;
                    oracle_ok &= oracle::brute_orbit_contains_negation(q, m, c.representative())
                        == oracle::brute_is_palindromic_up_to_scalar(&f);
                    count += 1;
                }
            }
        }
        Ok(ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .with("cosets", count))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

/// Parity of ord_m(q) against self-negating cosets, with the zero class allowed (literal), and
/// restricted to nonzero classes.
fn lemma5_sweeps(max_m: u64) -> Vec<Evaluated> {
    let range = format!("odd m<={max_m}, q in {SWEEP_QS:?}");
    let run = || -> Result<(bool, bool, bool, bool, Option<(u64, u64)>)> {
        let (mut lit_engine, mut lit_oracle, mut nz_engine, mut nz_oracle) = (true, true, true, true);
        let mut counterexample = None;
        for q in SWEEP_QS {
            for m in (1..=max_m).step_by(2).filter(|&m| arith::gcd(m, q) == 1) {
                let even = mult_order(q, m)? % 2 == 0;
                let cs = cosets(q, m, CosetDomain::All)?;
                let pairing = coset_pairing(&cs);
                let any = !pairing.self_paired.is_empty();
                let nonzero = pairing.self_paired.iter().any(|&i| cs[i].representative() != 0);
                if even != any && counterexample.is_none() {
                    counterexample = Some((q, m));
                }
                lit_engine &= even == any;
                nz_engine &= even == nonzero;

                let brute_even = oracle::brute_mult_order(q, m).map_or(false, |o| o % 2 == 0);
                let brute_any = (0..m).any(|i| oracle::brute_orbit_contains_negation(q, m, i));
                let brute_nonzero = (1..m).any(|i| oracle::brute_orbit_contains_negation(q, m, i));
                lit_oracle &= brute_even == brute_any;
                nz_oracle &= brute_even == brute_nonzero;
            }
        }
        Ok((lit_engine, lit_oracle, nz_engine, nz_oracle, counterexample))
    };
    let outcome = |b: bool| if b { HOLDS } else { FAILS };
    match run() {
        Ok((le, lo, ne, no, cx)) => {
            let mut literal = ClaimVerdict::new(
                "lemma5-literal",
                Instance::sweep(range.clone()),
                HOLDS,
                outcome(le),
                Some(outcome(lo).to_string()),
            )
            .noted("the class of 0 always equals its negation, so the literal equivalence fails whenever ord_m(q) is odd");
            if let Some((q, m)) = cx {
                literal = literal.with("counterexample", format!("q={q}, m={m}"));
            }
            let nonzero = ClaimVerdict::new(
                "lemma5-nonzero",
                Instance::sweep(range),
                HOLDS,
                outcome(ne),
                Some(outcome(no).to_string()),
            )
            .noted("reading restricted to classes of nonzero residues");
            vec![(literal, None), (nonzero, None)]
        }
        Err(e) => vec![
            (ClaimVerdict::failed("lemma5-literal", Instance::sweep(range.clone()), HOLDS, &e), None),
            (ClaimVerdict::failed("lemma5-nonzero", Instance::sweep(range), HOLDS, &e), None),
        ],
    }
}

fn lemma6_instance(p: u64, q: u64) -> Vec<Evaluated> {
    let id = format!("lemma6-{p}-{q}");
    let instance = Instance { p: Some(p), q: Some(q), ..Instance::default() };
    let run = || -> Result<ClaimVerdict> {
        let res = lemma6_order_congruence(p, q)?;
        let brute = oracle::brute_mult_order(p, q).ok_or(Error::NotCoprime { q: p, m: q })?;
        Ok(ClaimVerdict::new(
            id.clone(),
            instance.clone(),
            HOLDS,
            if res.holds { HOLDS } else { FAILS },
            Some(if brute % res.required_divisor == 0 { HOLDS } else { FAILS }.to_string()),
        )
        .with("ord_q(p)", res.order)
        .with("divisor", res.required_divisor))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), HOLDS, &e)))
}

fn lemma6_sweep() -> Vec<Evaluated> {
    let id = "lemma6-sweep";
    let instance = Instance::sweep("odd primes p, q <= 60, p non-residue mod q");
    let run = || -> Result<ClaimVerdict> {
        let primes: Vec<u64> = (3..=60).filter(|&p| arith::is_prime(p)).collect();
        let (mut engine_ok, mut oracle_ok) = (true, true);
        let (mut pairs, mut shortcut_fails) = (0, 0);
        for &p in &primes {
            for &q in &primes {
                if p == q || is_quadratic_residue(p as i64, q)? {
                    continue;
                }
                let res = lemma6_order_congruence(p, q)?;
                engine_ok &= res.holds;
                let brute = oracle::brute_mult_order(p, q).unwrap_or(0);
                oracle_ok &= brute != 0 && brute % res.required_divisor == 0;
                pairs += 1;
                if !res.order_is_q_minus_1 {
                    shortcut_fails += 1;
                }
            }
        }
        let mut v = ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .with("pairs", pairs)
        .with("pairs_with_order_below_q_minus_1", shortcut_fails);
        if shortcut_fails > 0 {
            v = v.noted("the congruences hold, but ord_q(p) = q - 1 is not implied by p being a non-residue");
        }
        Ok(v)
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

fn lemma7_sweep() -> Vec<Evaluated> {
    let id = "lemma7-sweep";
    let qs = [2u64, 3, 5, 7, 9, 11, 13];
    let instance = Instance::sweep(format!("n<=200, q in {qs:?}"));
    let run = || -> Result<ClaimVerdict> {
        let (mut engine_ok, mut oracle_ok) = (true, true);
        let mut checked = 0;
        for q in qs {
            for n in (1..=200u64).filter(|&n| arith::gcd(n, q) == 1) {
                let r = mult_order(q, n)?;
                let r2 = mult_order(q * q, n)?;
                let want = if r % 2 == 0 { r / 2 } else { r };
                engine_ok &= r2 == want;
                let br = oracle::brute_mult_order(q, n).unwrap_or(0);
                let br2 = oracle::brute_mult_order(q * q % n.max(1), n).unwrap_or(0);
                oracle_ok &= br2 == if br % 2 == 0 { br / 2 } else { br };
                checked += 1;
            }
        }
        Ok(ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .with("pairs", checked))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

fn brute_tower(p: u64) -> Option<bool> {
    let ord = oracle::brute_mult_order(2, p)?;
    let k = ord.trailing_zeros();
    let e = ord >> k;
    let mut base = 2 % p;
    for l in 0..=k {
        if oracle::brute_mult_order(base, p)? != (1u64 << (k - l)) * e {
            return Some(false);
        }
        base = base * base % p;
    }
    Some(true)
}

fn prop2_instance(p: u64) -> Vec<Evaluated> {
    let id = format!("prop2-{p}");
    let instance = Instance { p: Some(p), ..Instance::default() };
    let run = || -> Result<ClaimVerdict> {
        let t = prop2_order_tower(p)?;
        let oracle = brute_tower(p).map(|b| if b { HOLDS } else { FAILS }.to_string());
        let tower: Vec<String> = t.orders.iter().map(u64::to_string).collect();
        let mut v = ClaimVerdict::new(id.clone(), instance.clone(), HOLDS, if t.holds { HOLDS } else { FAILS }, oracle)
            .with("k", t.k)
            .with("e", t.e)
            .with("tower", tower.join(","));
        if t.k == 0 {
            v = v.noted("ord_p(2) is odd here, so the tower is the single value l = 0 (the argument assumes k > 0)");
        }
        Ok(v)
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), HOLDS, &e)))
}

fn prop2_sweep() -> Vec<Evaluated> {
    let id = "prop2-sweep";
    let instance = Instance::sweep("primes p = 1 mod 8, p <= 200");
    let run = || -> Result<ClaimVerdict> {
        let primes: Vec<u64> = (2..=200).filter(|&p| p % 8 == 1 && arith::is_prime(p)).collect();
        let (mut engine_ok, mut oracle_ok) = (true, true);
        let mut odd_orders = Vec::new();
        for &p in &primes {
            let t = prop2_order_tower(p)?;
            engine_ok &= t.holds;
            oracle_ok &= brute_tower(p) == Some(true);
            if t.k == 0 {
                odd_orders.push(p.to_string());
            }
        }
        Ok(ClaimVerdict::new(
            id,
            instance.clone(),
            HOLDS,
            if engine_ok { HOLDS } else { FAILS },
            Some(if oracle_ok { HOLDS } else { FAILS }.to_string()),
        )
        .with("primes", primes.len())
        .with("primes_with_odd_ord_2", odd_orders.join(",")))
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id, instance.clone(), HOLDS, &e)))
}

/// Uniqueness of the self-dual cyclic code of length `2^r p^alpha` over
/// `F_{2^s}`.
fn cor2_claim(id: String, p: u64, alpha: u32, r: u32, s: u32, note: Option<&str>) -> Vec<Evaluated> {
    let n = (1u64 << r) * p.pow(alpha);
    let instance = Instance {
        a: Some(1),
        alpha: Some(alpha),
        n: Some(n),
        p: Some(p),
        r: Some(r),
        s: Some(s),
        ..Instance::default()
    };
    let run = || -> Result<ClaimVerdict> {
        let claimed = cor2_char2_unique_cyclic(p, alpha, r, s)?
            .ok_or_else(|| Error::HypothesisUnmet(format!("(p={p}, s={s}) is not covered")))?;
        let field = make_field(2, s)?;
        let describe = |list: &[Poly]| match list {
            [g] => format!("unique g={g}"),
            _ => format!("count={}", list.len()),
        };
        let paper = format!("unique g={claimed}");
        let engine_list = crate::codes::enumerate_selfdual(&field, n as usize, Shift::Cyclic)?;
        let engine = if engine_list == [claimed.clone()] { paper.clone() } else { describe(&engine_list) };
        let oracle = oracle::oracle_selfdual_search(&field, n as usize, Shift::Cyclic)
            .ok()
            .map(|l| describe(&l));
        let mut v = ClaimVerdict::new(id.clone(), instance.clone(), paper, engine, oracle)
            .with("case", cor2_case(p, s).unwrap_or("-"));
        if let Some(n) = note {
            v = v.noted(n);
        }
        Ok(v)
    };
    plain(run().unwrap_or_else(|e| ClaimVerdict::failed(id.clone(), instance.clone(), "unique", &e)))
}

fn claim_tasks(config: &ClaimsConfig) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let max_n = config.max_n;
    let max_m = config.max_m;

    // Lengths 2 p^r (m = 1)
    tasks.push(Box::new(|| {
        vec![count_claim("example-2i", 5, 1, 10, 6, "exponent bound is p^r; the length is 2p^r")]
    }));
    for (p, s, n) in [(5u64, 1u32, 2u64), (5, 1, 50), (3, 2, 6), (13, 1, 26), (5, 2, 10), (17, 1, 34)] {
        tasks.push(Box::new(move || {
            let (_, r) = arith::strip_prime_power(n, p);
            let id = format!("example-2i-{}-n{n}", field_name(p, s));
            vec![count_claim(&id, p, s, n, p.pow(r) as u128 + 1, "exponent bound is p^r")]
        }));
    }
    tasks.push(Box::new(|| vec![existence_claim("example-2ii".into(), 3, 1, 6, false, Engine::Thm1)]));
    for (p, s, n) in [(3u64, 1u32, 18u64), (7, 1, 14), (3, 3, 6), (11, 1, 22)] {
        tasks.push(Box::new(move || {
            let id = format!("example-2ii-{}-n{n}", field_name(p, s));
            vec![existence_claim(id, p, s, n, false, Engine::Thm1)]
        }));
    }
    for (p, s, n) in [(5u64, 1u32, 10u64), (3, 2, 6), (13, 1, 26), (5, 1, 2)] {
        tasks.push(Box::new(move || example1_claim(p, s, n)));
    }

    // The order criterion and its worked examples
    for (id, p, s, n, paper) in [
        ("example-70-F5", 5u64, 1u32, 70u64, false),
        ("example-30-F9", 3, 2, 30, false),
        ("example-126-F9", 3, 2, 126, true),
    ] {
        tasks.push(Box::new(move || vec![existence_claim(id.into(), p, s, n, paper, Engine::Thm3)]));
    }
    for (p, q, alpha_max) in [(5u64, 13u64, 2u32), (5, 17, 1)] {
        tasks.push(Box::new(move || match cor1_no_selfdual_lengths(p, q, alpha_max) {
            Ok(list) => list
                .into_iter()
                .map(|c| {
                    let id = format!("cor1-{}-{}", c.n, field_name(c.p, c.s));
                    let (mut v, mm) = existence_claim(id, c.p, c.s, c.n, false, Engine::Thm3);
                    v.instance.q = Some(c.q);
                    v.instance.alpha = Some(c.alpha);
                    (v, mm)
                })
                .collect(),
            Err(e) => plain(ClaimVerdict::failed(format!("cor1-{p}-{q}"), Instance::default(), NONE, &e)),
        }));
    }
    for (p, s) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (5, 2)] {
        tasks.push(Box::new(move || {
            let q = p.pow(s);
            let mut out = Vec::new();
            for r in 0..3u32 {
                for m in (1..).step_by(2) {
                    let n = 2 * m * p.pow(r);
                    if n as usize > max_n {
                        break;
                    }
                    if m % p == 0 {
                        continue;
                    }
                    let field = match make_field(p, s) {
                        Ok(f) => f,
                        Err(_) => continue,
                    };
                    let stated = thm3_exists_selfdual_via_order(&field, m, r).unwrap_or(false);
                    out.push(existence_claim(format!("thm3-F{q}-m{m}-r{r}"), p, s, n, stated, Engine::Thm3));
                }
            }
            out
        }));
    }

    // The factorization criterion, every length
    for (p, s) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2)] {
        tasks.push(Box::new(move || {
            (1..=max_n as u64)
                .map(|n| {
                    let id = format!("thm1-{}-n{n:03}", field_name(p, s));
                    let stated = make_field(p, s)
                        .and_then(|f| thm1_exists_selfdual(&f, n as usize))
                        .map_or(false, |t| t.exists);
                    existence_claim(id, p, s, n, stated, Engine::Thm1)
                })
                .collect()
        }));
    }

    // Generator shapes
    for (p, s, m, r) in [(5u64, 1u32, 1u64, 1u32), (5, 1, 3, 0), (5, 1, 7, 1), (3, 2, 5, 1), (3, 2, 7, 0), (13, 1, 3, 0), (5, 2, 3, 1)] {
        tasks.push(Box::new(move || thm2_claim(p, s, m, r)));
    }
    for (p, s, n) in [(3u64, 1u32, 2u64), (5, 1, 10), (3, 1, 30), (7, 1, 14), (3, 2, 6), (5, 1, 6)] {
        tasks.push(Box::new(move || prop1_claim(p, s, n)));
    }
    for (p, s) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2)] {
        tasks.push(Box::new(move || cyclic_odd_char_claim(p, s, max_n)));
    }

    // Number theory
    tasks.push(Box::new(|| lemma2_sweep()));
    tasks.push(Box::new(|| lemma3_claim()));
    tasks.push(Box::new(move || lemma4_sweep(max_m)));
    tasks.push(Box::new(move || lemma5_sweeps(max_m)));
    for (p, q) in [(5u64, 13u64), (5, 7)] {
        tasks.push(Box::new(move || lemma6_instance(p, q)));
    }
    tasks.push(Box::new(|| lemma6_sweep()));
    tasks.push(Box::new(|| lemma7_sweep()));
    for p in [17u64, 41, 73] {
        tasks.push(Box::new(move || prop2_instance(p)));
    }
    tasks.push(Box::new(|| prop2_sweep()));

    // Characteristic two
    for (p, alpha, r, s) in [(3u64, 1u32, 1u32, 1u32), (3, 1, 2, 1), (3, 2, 1, 1), (5, 1, 1, 2), (17, 1, 1, 2), (17, 1, 1, 4)] {
        tasks.push(Box::new(move || {
            cor2_claim(format!("cor2-p{p}-a{alpha}-r{r}-s{s}"), p, alpha, r, s, None)
        }));
    }
    let scaled: [(&str, u64, u32, u32, u32, Option<&str>); 6] = [
        ("example-iv-i-F32-n6", 3, 1, 1, 5, None),
        ("example-iv-i-F32-n12", 3, 1, 2, 5, None),
        ("example-iv-ii-F64-n10", 5, 1, 1, 6, None),
        ("example-iv-ii-F64-n20", 5, 1, 2, 6, None),
        ("example-iv-iii-F4-n34", 17, 1, 1, 2, Some("the example names l = 2 but the field F_{2^2}; s = 2 is l = 1")),
        ("example-iv-iii-F16-n34", 17, 1, 1, 4, Some("s = 4 is the field matching l = 2")),
    ];
    for (id, p, alpha, r, s, note) in scaled {
        tasks.push(Box::new(move || cor2_claim(id.to_string(), p, alpha, r, s, note)));
    }
    tasks
}

/// Evaluates every built-in claim instance in parallel; the result is sorted
/// by `claim_id` and independent of scheduling.
pub fn run_claims_report(config: &ClaimsConfig) -> ClaimsReport {
    let evaluated: Vec<Evaluated> = claim_tasks(config).into_par_iter().flat_map_iter(|t| t()).collect();
    let mut verdicts = Vec::with_capacity(evaluated.len());
    let mut mismatches = Vec::new();
    for (v, mm) in evaluated {
        verdicts.push(v);
        mismatches.extend(mm);
    }
    verdicts.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    mismatches.sort();
    ClaimsReport { verdicts, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, s: u32) -> Field {
        make_field(p, s).unwrap()
    }

    #[test]
    fn thm1_examples() {
        assert!(!thm1_exists_selfdual(&f(3, 1), 6).unwrap().exists);
        let e = thm1_exists_selfdual(&f(5, 1), 10).unwrap();
        assert!(e.exists);
        assert_eq!((e.self_reciprocal, e.pairs, e.multiplicity), (0, 1, 5));
        let oracle = oracle::oracle_selfdual_search(&f(3, 2), 30, Shift::Negacyclic).unwrap();
        assert_eq!(thm1_exists_selfdual(&f(3, 2), 30).unwrap().exists, !oracle.is_empty());
        assert_eq!(thm1_exists_selfdual(&f(2, 1), 6), Err(Error::NegacyclicTrivialInCharTwo));
    }

    #[test]
    fn thm3_examples() {
        assert!(!thm3_exists_selfdual_via_order(&f(5, 1), 7, 1).unwrap());
        assert!(thm3_exists_selfdual_via_order(&f(3, 2), 7, 2).unwrap());
        assert!(!thm3_exists_selfdual_via_order(&f(3, 2), 5, 1).unwrap());
        assert!(!thm3_exists_selfdual_via_order(&f(3, 1), 5, 1).unwrap());
        assert!(matches!(thm3_exists_selfdual_via_order(&f(5, 1), 4, 0), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn lemma6_examples() {
        let r = lemma6_order_congruence(5, 13).unwrap();
        assert_eq!((r.order, r.required_divisor, r.holds), (4, 4, true));
        assert!(!r.order_is_q_minus_1);
        let r = lemma6_order_congruence(5, 7).unwrap();
        assert_eq!((r.order, r.required_divisor, r.holds), (6, 2, true));
        assert!(matches!(lemma6_order_congruence(2, 17), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn cor1_examples() {
        let l = cor1_no_selfdual_lengths(5, 13, 1).unwrap();
        assert_eq!(l.iter().map(|c| (c.n, c.s)).collect::<Vec<_>>(), vec![(130, 1), (130, 2)]);
        assert_eq!(cor1_no_selfdual_lengths(5, 17, 1).unwrap()[0].n, 170);
        assert!(cor1_no_selfdual_lengths(5, 13, 2).unwrap().iter().any(|c| c.n == 1690));
        assert!(matches!(cor1_no_selfdual_lengths(5, 11, 1), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn prop2_examples() {
        let t = prop2_order_tower(17).unwrap();
        assert_eq!((t.k, t.e), (3, 1));
        assert_eq!(t.orders, vec![8, 4, 2, 1]);
        assert!(t.holds);
        let t = prop2_order_tower(73).unwrap();
        assert_eq!((t.k, t.e, t.orders.clone()), (0, 9, vec![9]));
        let t = prop2_order_tower(41).unwrap();
        assert_eq!((t.k, t.e, t.orders.clone()), (2, 5, vec![20, 10, 5]));
        assert!(matches!(prop2_order_tower(13), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn cor2_examples() {
        let f2 = f(2, 1);
        assert_eq!(cor2_char2_unique_cyclic(3, 1, 1, 1).unwrap(), Some(Poly::from_ints(&f2, &[1, 0, 0, 1])));
        let f32 = f(2, 5);
        let g = cor2_char2_unique_cyclic(3, 2, 2, 5).unwrap().unwrap();
        assert_eq!(g, Poly::x_pow_minus(&f32, 9, Shift::Negacyclic).pow(2));
        let f16 = f(2, 4);
        assert_eq!(
            cor2_char2_unique_cyclic(17, 1, 1, 4).unwrap(),
            Some(Poly::x_pow_minus(&f16, 17, Shift::Negacyclic))
        );
        assert_eq!(cor2_char2_unique_cyclic(7, 1, 1, 1).unwrap(), None);
        assert_eq!(cor2_case(17, 8), None);
        assert_eq!(cor2_case(5, 6), Some("ii"));
    }

    #[test]
    fn verdict_status_rules() {
        assert_eq!(Status::judge("none", "none", Some("none")), Status::Confirmed);
        assert_eq!(Status::judge("none", "none", Some("exists")), Status::RefutedByOracle);
        assert_eq!(Status::judge("none", "exists", None), Status::OracleSkipped);
        let v = ClaimVerdict::new("x", Instance::default(), "a", "a", Some("a".into()));
        let json = v.to_json_line();
        let back: ClaimVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), json);
    }

    #[test]
    fn table_is_aligned() {
        let vs = vec![
            ClaimVerdict::new("a", Instance::default(), "x", "x", Some("x".into())),
            ClaimVerdict::new("long-claim", Instance::default(), "exists", "none", None),
        ];
        let t = render_table(&vs);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("claim_id    status"));
        assert!(lines[2].contains("oracle-skipped"));
    }
}
