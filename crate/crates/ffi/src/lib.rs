//! C ABI over the `genexp` library.
//!
//! Every entry point returns a [`GenexpStatus`]; results come back through
//! out-pointers. Polynomials are opaque [`GenexpPoly`] handles released with
//! [`genexp_poly_free`]. On failure, [`genexp_last_error`] describes the error
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use genexp::branching::branching_sp;
use genexp::cli::MAX_CUTOFF;
use genexp::extremal::{max_power, min_power};
use genexp::genexp::{genexp_a, genexp_c, stable_b, stable_c};
use genexp::oracle::{oracle_a, oracle_c};
use genexp::partition::Partition;
use genexp::poly::Poly;
use genexp::Error;
use libc::{c_char, size_t};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenexpStatus {
    Ok = 0,
    NullPointer = 1,
    MalformedInput = 2,
    Incompatible = 3,
    CutoffExceeded = 4,
    OutOfRange = 5,
    Internal = 6,
    Panic = 7,
}

/// A polynomial in `t` with integer coefficients; series carry a cutoff.
pub struct GenexpPoly {
    poly: Poly,
    cutoff: Option<u32>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> GenexpStatus {
    match e {
        Error::MalformedPartition(_) | Error::MalformedTableau(_) | Error::MalformedPolynomial(_) => {
            GenexpStatus::MalformedInput
        }
        Error::CutoffExceeded { .. } => GenexpStatus::CutoffExceeded,
        Error::RuleMismatch { .. } | Error::NegativeCoefficient { .. } => GenexpStatus::Internal,
        _ => GenexpStatus::Incompatible,
    }
}

struct Fail(GenexpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail> + UnwindSafe) -> GenexpStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => GenexpStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GenexpStatus::Panic
        }
    }
}

unsafe fn partition_arg(s: *const c_char, what: &str) -> Result<Partition, Fail> {
    if s.is_null() {
        return Err(Fail(GenexpStatus::NullPointer, format!("{what} is null")));
    }
    let text = CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(GenexpStatus::MalformedInput, format!("{what} is not UTF-8")))?;
    Ok(text.parse::<Partition>()?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(GenexpStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn boxed(poly: Poly, cutoff: Option<u32>) -> *mut GenexpPoly {
    Box::into_raw(Box::new(GenexpPoly { poly, cutoff }))
}

type PolyFn = fn(&Partition, usize) -> Result<(Poly, Option<u32>), Fail>;

unsafe fn poly_job(lambda: *const c_char, param: size_t, out: *mut *mut GenexpPoly, f: PolyFn) -> GenexpStatus {
    guard(move || {
        if out.is_null() {
            return Err(Fail(GenexpStatus::NullPointer, "output pointer is null".into()));
        }
        let lambda = partition_arg(lambda, "lambda")?;
        let (poly, cutoff) = f(&lambda, param)?;
        write_out(out, boxed(poly, cutoff))
    })
}

/// Type `C_n` generalized exponent of `lambda` (comma-separated parts).
///
/// # Safety
/// `lambda` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn genexp_c_poly(lambda: *const c_char, rank: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, rank, out, |l, n| Ok((genexp_c(l, n)?, None)))
}

/// Type `A_{n-1}` generalized exponent.
///
/// # Safety
/// As [`genexp_c_poly`].
#[no_mangle]
pub unsafe extern "C" fn genexp_a_poly(lambda: *const c_char, rank: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, rank, out, |l, n| Ok((genexp_a(l, n)?, None)))
}

/// Type `C_n` value from the Weyl-group alternating sum.
///
/// # Safety
/// As [`genexp_c_poly`].
#[no_mangle]
pub unsafe extern "C" fn genexp_oracle_c(lambda: *const c_char, rank: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, rank, out, |l, n| Ok((oracle_c(l, n)?, None)))
}

/// Type `A_{n-1}` value from the Weyl-group alternating sum.
///
/// # Safety
/// As [`genexp_c_poly`].
#[no_mangle]
pub unsafe extern "C" fn genexp_oracle_a(lambda: *const c_char, rank: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, rank, out, |l, n| Ok((oracle_a(l, n)?, None)))
}

fn cutoff_arg(cutoff: usize) -> Result<u32, Fail> {
    match u32::try_from(cutoff) {
        Ok(c) if c <= MAX_CUTOFF => Ok(c),
        _ => Err(Fail(
            GenexpStatus::CutoffExceeded,
            format!("cutoff {cutoff} exceeds the supported maximum {MAX_CUTOFF}"),
        )),
    }
}

/// Stable type C series, exact through `t^cutoff`.
///
/// # Safety
/// As [`genexp_c_poly`].
#[no_mangle]
pub unsafe extern "C" fn genexp_stable_c(lambda: *const c_char, cutoff: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, cutoff, out, |l, n| {
        let s = stable_c(l, cutoff_arg(n)?)?;
        Ok((s.poly().clone(), Some(s.cutoff())))
    })
}

/// Stable type B series, exact through `t^cutoff`.
///
/// # Safety
/// As [`genexp_c_poly`].
#[no_mangle]
pub unsafe extern "C" fn genexp_stable_b(lambda: *const c_char, cutoff: size_t, out: *mut *mut GenexpPoly) -> GenexpStatus {
    poly_job(lambda, cutoff, out, |l, n| {
        let s = stable_b(l, cutoff_arg(n)?)?;
        Ok((s.poly().clone(), Some(s.cutoff())))
    })
}

/// Lowest power of `t` in the type C generalized exponent.
///
/// # Safety
/// `lambda` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn genexp_min_power(lambda: *const c_char, rank: size_t, out: *mut u32) -> GenexpStatus {
    guard(move || {
        let lambda = partition_arg(lambda, "lambda")?;
        write_out(out, min_power(&lambda, rank)?)
    })
}

/// Highest power of `t` in the type C generalized exponent.
///
/// # Safety
/// As [`genexp_min_power`].
#[no_mangle]
pub unsafe extern "C" fn genexp_max_power(lambda: *const c_char, rank: size_t, out: *mut u32) -> GenexpStatus {
    guard(move || {
        let lambda = partition_arg(lambda, "lambda")?;
        write_out(out, max_power(&lambda, rank)?)
    })
}

/// Multiplicity of the `sp_{2n}` module `lambda` in the `gl_{2n}` module `nu`.
///
/// # Safety
/// `lambda` and `nu` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn genexp_branching(
    lambda: *const c_char,
    nu: *const c_char,
    rank: size_t,
    out: *mut u64,
) -> GenexpStatus {
    guard(move || {
        let lambda = partition_arg(lambda, "lambda")?;
        let nu = partition_arg(nu, "nu")?;
        write_out(out, branching_sp(&lambda, &nu, rank)?)
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_num_terms(p: *const GenexpPoly) -> size_t {
    p.as_ref().map_or(0, |p| p.poly.terms().count())
}

/// The `index`-th term in increasing degree.
///
/// # Safety
/// `p` must be a live handle; `exponent` and `coefficient` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_term(
    p: *const GenexpPoly,
    index: size_t,
    exponent: *mut u32,
    coefficient: *mut i64,
) -> GenexpStatus {
    guard(move || {
        let p = p
            .as_ref()
            .ok_or_else(|| Fail(GenexpStatus::NullPointer, "poly is null".into()))?;
        let (e, c) = p
            .poly
            .terms()
            .nth(index)
            .ok_or_else(|| Fail(GenexpStatus::OutOfRange, format!("term {index} out of range")))?;
        write_out(exponent, e)?;
        write_out(coefficient, c)
    })
}

/// Coefficient of `t^exponent`; zero for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_coeff(p: *const GenexpPoly, exponent: u32) -> i64 {
    p.as_ref().map_or(0, |p| p.poly.coeff(exponent))
}

/// Value at `t = 1`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_eval_one(p: *const GenexpPoly) -> i64 {
    p.as_ref().map_or(0, |p| p.poly.eval_one())
}

/// Cutoff of a series, or -1 for an exact polynomial.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_cutoff(p: *const GenexpPoly) -> i64 {
    p.as_ref().and_then(|p| p.cutoff).map_or(-1, i64::from)
}

/// Text form such as `t^2 + t^4`; free with [`genexp_string_free`].
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_to_string(p: *const GenexpPoly) -> *mut c_char {
    match p.as_ref() {
        Some(p) => CString::new(p.poly.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn genexp_poly_free(p: *mut GenexpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn genexp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn genexp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn genexp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
