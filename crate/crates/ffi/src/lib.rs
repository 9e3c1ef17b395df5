//! C ABI over `hullcount`.
//!
//! Every fallible function returns an [`HcStatus`] and writes its result
//! through an out-pointer. Big integers and rationals cross the boundary as
//! NUL-terminated decimal strings (`"123"`, `"64/225"`) owned by the caller
//! and released with [`hc_string_free`]. Fields and spectra are opaque
//! handles with paired `_free` functions. After a non-`Ok` status,
//! [`hc_last_error`] describes the failure on the calling thread. Form
//! arguments are `uint32_t` values of [`HcForm`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hullcount::algebra::{FieldElem, FiniteField, FormKind, MatrixGF};
use hullcount::eaqecc::{ebits_from_check_matrix, gjg_map, wilde_brun_map, EaqeccParams};
use hullcount::exactnum::format_rat;
use hullcount::oracle::{closed_form_count, hull_spectrum, oracle_field, HullSpectrum, OracleConfig};
use hullcount::ratios::ratio_report;
use hullcount::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    WorkLimitExceeded = 4,
    Unsupported = 5,
    Panic = 6,
}

/// Form selector, passed to functions as a `uint32_t`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcForm {
    Euclidean = 0,
    Hermitian = 1,
    Symplectic = 2,
}

fn form_of(code: u32) -> Result<FormKind, (HcStatus, String)> {
    match code {
        c if c == HcForm::Euclidean as u32 => Ok(FormKind::Euclidean),
        c if c == HcForm::Hermitian as u32 => Ok(FormKind::Hermitian),
        c if c == HcForm::Symplectic as u32 => Ok(FormKind::Symplectic),
        other => Err((HcStatus::InvalidArgument, format!("unknown form code {other}"))),
    }
}

/// Parameters `[[n, k, d; c]]_q` of an entanglement-assisted code. The
/// distance is not tracked across the ABI.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HcEaqecc {
    pub n: u32,
    pub k_logical: u32,
    pub c: u32,
    pub q: u64,
}

impl From<EaqeccParams> for HcEaqecc {
    fn from(p: EaqeccParams) -> Self {
        HcEaqecc {
            n: p.n,
            k_logical: p.k_logical,
            c: p.c,
            q: p.q,
        }
    }
}

/// Opaque finite field.
pub struct HcField {
    inner: Arc<FiniteField>,
}

/// Opaque exhaustive hull spectrum.
pub struct HcSpectrum {
    inner: HullSpectrum,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> HcStatus {
    match err {
        Error::WorkLimitExceeded { .. } => HcStatus::WorkLimitExceeded,
        Error::BadRange(_) | Error::BadIndex { .. } | Error::OutOfValidRange(_) | Error::ParityViolation(_) => {
            HcStatus::OutOfRange
        }
        Error::UnsupportedField(_) | Error::EvenCharacteristic(_) => HcStatus::Unsupported,
        _ => HcStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (HcStatus, String)>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            HcStatus::Panic
        }
    }
}

fn lift(e: Error) -> (HcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (HcStatus, String) {
    (HcStatus::NullPointer, "null pointer argument".into())
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (HcStatus, String)> {
    let c = CString::new(s).map_err(|_| (HcStatus::Panic, "interior NUL".to_string()))?;
    // SAFETY: caller guarantees `out` is valid; checked non-null by callers.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `F_{p^m}` with the canonical modulus.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_field_new(p: u64, m: u32, out: *mut *mut HcField) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let field = FiniteField::new(p, m).map_err(lift)?;
        *out = Box::into_raw(Box::new(HcField { inner: Arc::new(field) }));
        Ok(())
    })
}

/// # Safety
/// `field` must come from [`hc_field_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hc_field_free(field: *mut HcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Field order, or 0 for NULL.
///
/// # Safety
/// `field` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_field_order(field: *const HcField) -> u64 {
    field.as_ref().map_or(0, |f| f.inner.order())
}

/// Applies a binary field operation (`op`: 0 add, 1 subtract, 2 multiply) to
/// elements given by their integer encodings.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_field_op(field: *const HcField, op: u32, x: u16, y: u16, out: *mut u16) -> HcStatus {
    guard(|| {
        let f = &field.as_ref().ok_or_else(null)?.inner;
        if out.is_null() {
            return Err(null());
        }
        if x as u64 >= f.order() || y as u64 >= f.order() {
            return Err((
                HcStatus::OutOfRange,
                format!("element out of range for F_{}", f.order()),
            ));
        }
        let (a, b) = (FieldElem(x), FieldElem(y));
        let r = match op {
            0 => f.add(a, b),
            1 => f.sub(a, b),
            2 => f.mul(a, b),
            _ => return Err((HcStatus::InvalidArgument, format!("unknown operation {op}"))),
        };
        *out = r.0;
        Ok(())
    })
}

/// Multiplicative inverse; `OutOfRange` for zero.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_field_inv(field: *const HcField, x: u16, out: *mut u16) -> HcStatus {
    guard(|| {
        let f = &field.as_ref().ok_or_else(null)?.inner;
        if out.is_null() {
            return Err(null());
        }
        if x as u64 >= f.order() {
            return Err((
                HcStatus::OutOfRange,
                format!("element out of range for F_{}", f.order()),
            ));
        }
        let inv = f
            .inv(FieldElem(x))
            .ok_or_else(|| (HcStatus::OutOfRange, "zero has no inverse".to_string()))?;
        *out = inv.0;
        Ok(())
    })
}

/// Closed-form count of codes with hull dimension `l`, as a decimal string.
/// For the symplectic form `n` is the ambient length `2n`. The Euclidean form
/// has no closed form and yields `Unsupported`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_count(form: u32, n: u32, k: u32, l: u32, q: u64, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        hullcount::exactnum::require_prime_power(q).map_err(lift)?;
        let count = closed_form_count(form_of(form)?, n, k, l, q)
            .map_err(lift)?
            .ok_or_else(|| {
                (
                    HcStatus::Unsupported,
                    "no closed form for the Euclidean hull".to_string(),
                )
            })?;
        write_string(out, count.to_string())
    })
}

/// Ratio factor `alpha` for the step from `l`, as `"num/den"`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_alpha(form: u32, n: u32, k: u32, l: u32, q: u64, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let report = ratio_report(form_of(form)?, n, k, l, q).map_err(lift)?;
        write_string(out, format_rat(&report.alpha))
    })
}

/// Enumerates every `[n, k]` code for the given form and records its hull
/// dimension. `work_limit = 0` uses the default budget.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_spectrum_compute(
    form: u32,
    n: u32,
    k: u32,
    q: u64,
    work_limit: u64,
    out: *mut *mut HcSpectrum,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let form = form_of(form)?;
        let field = oracle_field(form, q).map_err(lift)?;
        let mut cfg = OracleConfig::from_env();
        if work_limit > 0 {
            cfg.work_limit = work_limit as u128;
        }
        let inner = hull_spectrum(&field, n as usize, k as usize, form, &cfg).map_err(lift)?;
        *out = Box::into_raw(Box::new(HcSpectrum { inner }));
        Ok(())
    })
}

/// Number of codes with hull dimension `l` (zero when absent).
///
/// # Safety
/// `spectrum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_spectrum_count(spectrum: *const HcSpectrum, l: u32, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let s = spectrum.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        write_string(out, s.inner.get(l).to_string())
    })
}

/// Total number of codes enumerated.
///
/// # Safety
/// `spectrum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_spectrum_total(spectrum: *const HcSpectrum, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let s = spectrum.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        write_string(out, s.inner.total().to_string())
    })
}

/// # Safety
/// `spectrum` must come from [`hc_spectrum_compute`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hc_spectrum_free(spectrum: *mut HcSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Both entanglement-assisted codes from a Hermitian `[n, k]` code with hull
/// dimension `l`.
///
/// # Safety
/// `code` and `dual` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hc_gjg_map(
    n: u32,
    k: u32,
    l: u32,
    q: u64,
    code: *mut HcEaqecc,
    dual: *mut HcEaqecc,
) -> HcStatus {
    guard(|| {
        if code.is_null() || dual.is_null() {
            return Err(null());
        }
        let (a, b) = gjg_map(n, k, l, q, None, None).map_err(lift)?;
        *code = a.into();
        *dual = b.into();
        Ok(())
    })
}

/// The entanglement-assisted code from a symplectic `[2n, k]` code with hull
/// dimension `l`; `ambient` is `2n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_wilde_brun_map(ambient: u32, k: u32, l: u32, q: u64, out: *mut HcEaqecc) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = wilde_brun_map(ambient, k, l, q, None).map_err(lift)?.into();
        Ok(())
    })
}

/// Ebits required by a binary check matrix `[H_Z | H_X]` given row-major as
/// `rows * cols` bytes, each 0 or 1.
///
/// # Safety
/// `data` must point to `rows * cols` readable bytes and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn hc_ebits(rows: usize, cols: usize, data: *const u8, out: *mut u32) -> HcStatus {
    guard(|| {
        if data.is_null() || out.is_null() {
            return Err(null());
        }
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| (HcStatus::InvalidArgument, "matrix too large".to_string()))?;
        let bytes = std::slice::from_raw_parts(data, len);
        if let Some(b) = bytes.iter().find(|&&b| b > 1) {
            return Err((HcStatus::InvalidArgument, format!("entry {b} is not binary")));
        }
        let field = Arc::new(FiniteField::new(2, 1).map_err(lift)?);
        let elems = bytes.iter().map(|&b| FieldElem(b as u16)).collect();
        let h = MatrixGF::from_elems(field, rows, cols, elems).map_err(lift)?;
        *out = ebits_from_check_matrix(&h).map_err(lift)?;
        Ok(())
    })
}

/// Reads a NUL-terminated string produced by this library into Rust.
///
/// # Safety
/// `s` must be NULL or a valid C string.
pub unsafe fn read_c_string(s: *const c_char) -> Option<String> {
    if s.is_null() {
        None
    } else {
        Some(CStr::from_ptr(s).to_string_lossy().into_owned())
    }
}
