//! C ABI for the `selfdual` library.
//!
//! Every fallible function returns an [`SdStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`sd_last_error`] on the same thread. Fields and factorizations are
//! opaque handles released with their `_free` functions; strings returned
//! by the library are released with [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use selfdual::claims::{run_claims_report, ClaimsConfig};
use selfdual::codes::{count_selfdual, enumerate_selfdual};
use selfdual::cyclo::{factor_xn_minus_a, mult_order, Factorization};
use selfdual::{make_field, Error, Field, Shift};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CharacteristicTwo = 3,
    InvariantViolation = 4,
    OutOfRange = 5,
    HypothesisUnmet = 6,
    Panic = 7,
}

/// A finite field `F_{p^s}`.
pub struct SdField {
    field: Field,
}

/// The factorization of `x^n - a` into monic irreducibles.
pub struct SdFactorization {
    factorization: Factorization,
    polys: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::NegacyclicTrivialInCharTwo | Error::CharacteristicTwoUnsupported => SdStatus::CharacteristicTwo,
        Error::InvariantViolation(_) => SdStatus::InvariantViolation,
        Error::FieldTooLarge { .. }
        | Error::OracleRangeExceeded(_)
        | Error::EnumerationTooLarge { .. }
        | Error::CountOverflow => SdStatus::OutOfRange,
        Error::HypothesisUnmet(_)
        | Error::NoSquareRootOfMinusOne
        | Error::ShapeMismatch(_)
        | Error::NotCoprime { .. } => SdStatus::HypothesisUnmet,
        _ => SdStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), SdStatus>) -> SdStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            SdStatus::Panic
        }
    }
}

fn fail(e: Error) -> SdStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> SdStatus {
    set_last_error(&format!("{what} is null"));
    SdStatus::NullPointer
}

fn shift_of(field: &Field, constant: i64) -> Result<Shift, SdStatus> {
    let shift = Shift::from_constant(constant).map_err(fail)?;
    if field.p() == 2 && shift == Shift::Negacyclic {
        return Err(fail(Error::NegacyclicTrivialInCharTwo));
    }
    Ok(shift)
}

fn length(n: u64) -> Result<usize, SdStatus> {
    if n == 0 {
        return Err(fail(Error::InvalidInput("length must be positive".into())));
    }
    usize::try_from(n).map_err(|_| fail(Error::InvalidInput("length too large".into())))
}

fn into_c_string(s: String) -> Result<*mut c_char, SdStatus> {
    CString::new(s).map(CString::into_raw).map_err(|_| fail(Error::InvalidInput("interior NUL".into())))
}

/// # Safety
/// `p` must be null or a pointer obtained from this library and not yet freed.
unsafe fn field_ref<'a>(p: *const SdField) -> Result<&'a Field, SdStatus> {
    p.as_ref().map(|f| &f.field).ok_or_else(|| null("field"))
}

/// Creates the field `F_{p^s}`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn sd_field_new(p: u64, s: u32, out: *mut *mut SdField) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let field = make_field(p, s).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdField { field }));
        Ok(())
    })
}

/// Releases a field handle; null is ignored.
///
/// # Safety
/// `field` must be null or a handle from [`sd_field_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_field_free(field: *mut SdField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements of the field, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_field_order(field: *const SdField) -> u64 {
    field.as_ref().map_or(0, |f| f.field.order())
}

/// Factors `x^n - constant` for `constant` in {1, -1}.
///
/// # Safety
/// `field` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_factor(
    field: *const SdField,
    n: u64,
    constant: i64,
    out: *mut *mut SdFactorization,
) -> SdStatus {
    guard(|| {
        let field = field_ref(field)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let shift = shift_of(field, constant)?;
        length(n)?;
        let factorization = factor_xn_minus_a(field, n, shift).map_err(fail)?;
        let polys = factorization
            .factors()
            .iter()
            .map(|f| CString::new(f.poly.to_string()).expect("no NUL in polynomial text"))
            .collect();
        *out = Box::into_raw(Box::new(SdFactorization { factorization, polys }));
        Ok(())
    })
}

/// Releases a factorization handle; null is ignored.
///
/// # Safety
/// `fz` must be null or a handle from [`sd_factor`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_factorization_free(fz: *mut SdFactorization) {
    if !fz.is_null() {
        drop(Box::from_raw(fz));
    }
}

/// Number of distinct irreducible factors, or 0 for a null handle.
///
/// # Safety
/// `fz` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_factorization_len(fz: *const SdFactorization) -> usize {
    fz.as_ref().map_or(0, |f| f.polys.len())
}

/// Number of self-reciprocal factors and of reciprocal pairs.
///
/// # Safety
/// `fz` must be a live handle; `self_reciprocal` and `pairs` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_factorization_pairing(
    fz: *const SdFactorization,
    self_reciprocal: *mut usize,
    pairs: *mut usize,
) -> SdStatus {
    guard(|| {
        let fz = fz.as_ref().ok_or_else(|| null("factorization"))?;
        if self_reciprocal.is_null() || pairs.is_null() {
            return Err(null("out"));
        }
        *self_reciprocal = fz.factorization.self_reciprocal_count();
        *pairs = fz.factorization.pair_count();
        Ok(())
    })
}

/// Factor `index` in textual form and its multiplicity. The string is owned
/// by the handle and valid until it is freed.
///
/// # Safety
/// `fz` must be a live handle; `poly` and `multiplicity` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_factorization_factor(
    fz: *const SdFactorization,
    index: usize,
    poly: *mut *const c_char,
    multiplicity: *mut u64,
) -> SdStatus {
    guard(|| {
        let fz = fz.as_ref().ok_or_else(|| null("factorization"))?;
        if poly.is_null() || multiplicity.is_null() {
            return Err(null("out"));
        }
        let text = fz
            .polys
            .get(index)
            .ok_or_else(|| fail(Error::InvalidInput(format!("factor index {index} out of range"))))?;
        *poly = text.as_ptr();
        *multiplicity = fz.factorization.factors()[index].multiplicity;
        Ok(())
    })
}

/// Whether a self-dual code of length `n` exists in `F[x]/(x^n - constant)`.
///
/// # Safety
/// `field` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_exists_selfdual(field: *const SdField, n: u64, constant: i64, out: *mut bool) -> SdStatus {
    let mut count = 0u64;
    let status = sd_count_selfdual(field, n, constant, &mut count);
    if status == SdStatus::Ok || status == SdStatus::OutOfRange {
        if out.is_null() {
            return null("out");
        }
        // An overflowing count is still a positive one.
        *out = status == SdStatus::OutOfRange || count > 0;
        set_last_error("");
        return SdStatus::Ok;
    }
    status
}

/// Number of self-dual codes; `OutOfRange` when it exceeds 64 bits.
///
/// # Safety
/// `field` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_count_selfdual(field: *const SdField, n: u64, constant: i64, out: *mut u64) -> SdStatus {
    guard(|| {
        let field = field_ref(field)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let shift = shift_of(field, constant)?;
        let count = count_selfdual(field, length(n)?, shift).map_err(fail)?;
        *out = u64::try_from(count).map_err(|_| fail(Error::CountOverflow))?;
        Ok(())
    })
}

/// Generators of all self-dual codes as a JSON array of strings. Release
/// the result with [`sd_string_free`].
///
/// # Safety
/// `field` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_enumerate_selfdual(
    field: *const SdField,
    n: u64,
    constant: i64,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let field = field_ref(field)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let shift = shift_of(field, constant)?;
        let list: Vec<String> =
            enumerate_selfdual(field, length(n)?, shift).map_err(fail)?.iter().map(ToString::to_string).collect();
        *out = into_c_string(serde_json::to_string(&list).expect("strings serialize"))?;
        Ok(())
    })
}

/// Multiplicative order of `q` modulo `m`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_mult_order(q: u64, m: u64, out: *mut u64) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = mult_order(q, m).map_err(fail)?;
        Ok(())
    })
}

/// The claims report as JSON lines. Release with [`sd_string_free`].
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sd_claims_json(max_n: usize, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report = run_claims_report(&ClaimsConfig { max_n, ..ClaimsConfig::default() });
        *out = into_c_string(report.to_json_lines())?;
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string allocated by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
