//! C ABI for `leibniz-core`.
//!
//! Handles (`LzSieve`, `LzFunction`) are opaque and owned by the caller once
//! returned; release them with the matching `*_free`. Strings returned
//! through `char **out` parameters are heap-allocated and must be released
//! with `lz_string_free`. Every entry point returns an `LzStatus`; on a
//! non-`LZ_STATUS_OK` status, `lz_last_error` describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use leibniz::dirichlet::{write_jsonl_row, write_tsv_header, write_tsv_row};
use leibniz::fnspec::{build, parse};
use leibniz::numtheory::{build_sieve, factorize, Natural};
use leibniz::verify::{self, Identity, Outcome, Sweep};
use leibniz::{ArithFunction, Error, PrimeSieve};

/// Result codes shared by every function in this library.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    EvalError = 5,
    /// A sweep ran and found a counterexample.
    Fail = 6,
    Overflow = 7,
    Panic = 8,
}

/// Output format for `lz_tabulate`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzFormat {
    Tsv = 0,
    Jsonl = 1,
}

/// Smallest-prime-factor sieve shared by evaluations.
pub struct LzSieve(PrimeSieve);

/// A parsed and built arithmetic function.
pub struct LzFunction(ArithFunction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(LzStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.root() {
            Error::Parse(_) | Error::UnknownIdentifier(_) | Error::Construction(_) => LzStatus::ParseError,
            Error::Domain(_) | Error::MissingArgument(_) | Error::Precondition(_) | Error::Table(_) => {
                LzStatus::DomainError
            }
            _ => LzStatus::EvalError,
        };
        Failure(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<LzStatus, Failure>) -> LzStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LzStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(LzStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LzStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, name: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, name).map(Some)
    }
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(LzStatus::NullPointer, format!("{name} is null")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LzStatus::NullPointer, "out is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(LzStatus::EvalError, "output contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn parse_fn(spec: &str) -> Result<ArithFunction, Failure> {
    let expr = parse(spec).map_err(|e| Failure(LzStatus::ParseError, e.to_string()))?;
    Ok(build(&expr)?)
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn lz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a sieve covering `2..=limit` (`limit >= 2`).
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lz_sieve_new(limit: usize, out: *mut *mut LzSieve) -> LzStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(LzStatus::NullPointer, "out is null".into()));
        }
        let sieve = build_sieve(limit)?;
        *out = Box::into_raw(Box::new(LzSieve(sieve)));
        Ok(LzStatus::Ok)
    })
}

/// # Safety
/// `sieve` must come from `lz_sieve_new` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn lz_sieve_free(sieve: *mut LzSieve) {
    if !sieve.is_null() {
        drop(Box::from_raw(sieve));
    }
}

/// Parses a function expression such as `"conv(D, N)"`. On a syntax error
/// the byte offset is stored in `error_position` when it is non-NULL.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_function_parse(
    spec: *const c_char,
    out: *mut *mut LzFunction,
    error_position: *mut usize,
) -> LzStatus {
    guard(|| {
        let spec = str_arg(spec, "spec")?;
        if out.is_null() {
            return Err(Failure(LzStatus::NullPointer, "out is null".into()));
        }
        let expr = match parse(spec) {
            Ok(e) => e,
            Err(e) => {
                if !error_position.is_null() {
                    *error_position = e.position;
                }
                return Err(Failure(LzStatus::ParseError, e.to_string()));
            }
        };
        let f = build(&expr)?;
        *out = Box::into_raw(Box::new(LzFunction(f)));
        Ok(LzStatus::Ok)
    })
}

/// # Safety
/// `f` must come from `lz_function_parse` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn lz_function_free(f: *mut LzFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Evaluates `f` at the decimal positive integer `n`. The value is written
/// as `a` or `a/b` in lowest terms.
///
/// # Safety
/// Pointers must be valid; `n` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn lz_function_eval(
    f: *const LzFunction,
    sieve: *const LzSieve,
    n: *const c_char,
    out: *mut *mut c_char,
) -> LzStatus {
    guard(|| {
        let f = ref_arg(f, "f")?;
        let sieve = ref_arg(sieve, "sieve")?;
        let n: Natural = str_arg(n, "n")?.parse()?;
        let value = f.0.eval(&n, &sieve.0)?;
        write_string(out, value.to_string())?;
        Ok(LzStatus::Ok)
    })
}

/// Arithmetic derivative of `n >= 1` as a 64-bit integer. Returns
/// `LZ_STATUS_OVERFLOW` when the value does not fit.
///
/// # Safety
/// `sieve` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lz_arithmetic_derivative(
    sieve: *const LzSieve,
    n: u64,
    out: *mut u64,
) -> LzStatus {
    guard(|| {
        let sieve = ref_arg(sieve, "sieve")?;
        if out.is_null() {
            return Err(Failure(LzStatus::NullPointer, "out is null".into()));
        }
        let n = Natural::try_from(n)?;
        let d = leibniz::arith::arithmetic_derivative(&n, &sieve.0);
        *out = u64::try_from(d).map_err(|e| Failure(LzStatus::Overflow, format!("D({n}) = {} overflows u64", e.into_original())))?;
        Ok(LzStatus::Ok)
    })
}

/// Tabulates `f` on `from..=to` in the given format.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lz_tabulate(
    f: *const LzFunction,
    sieve: *const LzSieve,
    from: u64,
    to: u64,
    format: LzFormat,
    out: *mut *mut c_char,
) -> LzStatus {
    guard(|| {
        let f = ref_arg(f, "f")?;
        let sieve = ref_arg(sieve, "sieve")?;
        if from == 0 || from > to {
            return Err(Failure(LzStatus::DomainError, format!("need 1 <= from <= to, got {from}..{to}")));
        }
        let mut buf = Vec::new();
        if format == LzFormat::Tsv {
            write_tsv_header(&mut buf)?;
        }
        for n in from..=to {
            let nat = Natural::try_from(n)?;
            let v = f.0.eval_factored(&factorize(&nat, &sieve.0), &sieve.0)?;
            match format {
                LzFormat::Tsv => write_tsv_row(&mut buf, n, &v)?,
                LzFormat::Jsonl => write_jsonl_row(&mut buf, n, &v)?,
            }
        }
        write_string(out, String::from_utf8(buf).expect("ascii output"))?;
        Ok(LzStatus::Ok)
    })
}

/// Sweeps an identity (`"leibniz"`, `"schwab"`, `"gen-schwab"`, `"cor33"`,
/// `"square-conv"`, `"tau"`, `"distributivity"`). `fn_spec`, `h_spec`, `u_spec`
/// and `v_spec` may be NULL; missing tables are random from `seed`. A `limit`
/// of 0 selects the default. The report line is written to `report`.
/// Returns `LZ_STATUS_OK` on PASS and `LZ_STATUS_FAIL` on FAIL.
///
/// # Safety
/// Pointers must be valid or NULL where allowed.
#[no_mangle]
pub unsafe extern "C" fn lz_verify(
    identity: *const c_char,
    fn_spec: *const c_char,
    h_spec: *const c_char,
    u_spec: *const c_char,
    v_spec: *const c_char,
    limit: u64,
    seed: u64,
    sieve: *const LzSieve,
    report: *mut *mut c_char,
) -> LzStatus {
    guard(|| {
        let identity: Identity = str_arg(identity, "identity")?.parse()?;
        let sieve = ref_arg(sieve, "sieve")?;
        let mut sweep = Sweep::new(identity);
        sweep.seed = seed;
        sweep.limit = (limit > 0).then_some(limit);
        sweep.f = opt_str_arg(fn_spec, "fn_spec")?.map(parse_fn).transpose()?;
        sweep.h = opt_str_arg(h_spec, "h_spec")?.map(parse_fn).transpose()?;
        let table_limit = usize::try_from(sweep.limit())
            .map_err(|_| Failure(LzStatus::DomainError, "limit too large".into()))?;
        for (spec, slot, name) in [(u_spec, &mut sweep.u, "u_spec"), (v_spec, &mut sweep.v, "v_spec")] {
            if let Some(s) = opt_str_arg(spec, name)? {
                *slot = Some(leibniz::dirichlet::tabulate(&parse_fn(s)?, table_limit, &sieve.0)?);
            }
        }
        let r = verify::run(&sweep, &sieve.0)?;
        write_string(report, r.to_string())?;
        Ok(match r.outcome {
            Outcome::Pass => LzStatus::Ok,
            Outcome::Fail { .. } => LzStatus::Fail,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
        lz_string_free(p);
        s
    }

    unsafe fn last_error() -> String {
        CStr::from_ptr(lz_last_error()).to_str().unwrap().to_owned()
    }

    #[test]
    fn evaluate_through_handles() {
        unsafe {
            let mut sieve = ptr::null_mut();
            assert_eq!(lz_sieve_new(1000, &mut sieve), LzStatus::Ok);
            let mut f = ptr::null_mut();
            assert_eq!(lz_function_parse(cstr("ld").as_ptr(), &mut f, ptr::null_mut()), LzStatus::Ok);
            let mut out = ptr::null_mut();
            assert_eq!(lz_function_eval(f, sieve, cstr("6").as_ptr(), &mut out), LzStatus::Ok);
            assert_eq!(take(out), "5/6");
            assert!(lz_last_error().is_null());

            assert_eq!(lz_function_eval(f, sieve, cstr("0").as_ptr(), &mut out), LzStatus::DomainError);
            assert!(last_error().contains("positive integers"));

            let mut d = 0u64;
            assert_eq!(lz_arithmetic_derivative(sieve, 8, &mut d), LzStatus::Ok);
            assert_eq!(d, 12);
            assert_eq!(lz_arithmetic_derivative(sieve, 1 << 63, &mut d), LzStatus::Overflow);

            assert_eq!(lz_tabulate(f, sieve, 1, 3, LzFormat::Tsv, &mut out), LzStatus::Ok);
            assert_eq!(take(out), "n\tvalue\n1\t0\n2\t1/2\n3\t1/3\n");
            assert_eq!(lz_tabulate(f, sieve, 2, 2, LzFormat::Jsonl, &mut out), LzStatus::Ok);
            assert_eq!(take(out), "{\"n\": 2, \"num\": \"1\", \"den\": \"2\"}\n");

            lz_function_free(f);
            lz_sieve_free(sieve);
        }
    }

    #[test]
    fn parse_errors_report_position() {
        unsafe {
            let mut f = ptr::null_mut();
            let mut pos = usize::MAX;
            assert_eq!(lz_function_parse(cstr("cadd{4: 1}").as_ptr(), &mut f, &mut pos), LzStatus::ParseError);
            assert_eq!(pos, 5);
            assert!(f.is_null());
            assert_eq!(lz_function_parse(cstr("nope").as_ptr(), &mut f, &mut pos), LzStatus::ParseError);
            assert_eq!(lz_function_parse(ptr::null(), &mut f, &mut pos), LzStatus::NullPointer);
            let mut sieve = ptr::null_mut();
            assert_eq!(lz_sieve_new(1, &mut sieve), LzStatus::DomainError);
        }
    }

    #[test]
    fn verify_pass_and_fail() {
        unsafe {
            let mut sieve = ptr::null_mut();
            assert_eq!(lz_sieve_new(10_000, &mut sieve), LzStatus::Ok);
            let mut report = ptr::null_mut();
            let status = lz_verify(
                cstr("tau").as_ptr(), cstr("D").as_ptr(), cstr("N").as_ptr(),
                ptr::null(), ptr::null(), 1000, 0, sieve, &mut report,
            );
            assert_eq!(status, LzStatus::Ok);
            assert_eq!(take(report), "PASS tau checks=1000 limit=1000 seed=0");

            let status = lz_verify(
                cstr("leibniz").as_ptr(), cstr("D").as_ptr(), cstr("E").as_ptr(),
                ptr::null(), ptr::null(), 10, 0, sieve, &mut report,
            );
            assert_eq!(status, LzStatus::Fail);
            assert_eq!(take(report), "FAIL leibniz at (2,2): lhs=4 rhs=2");

            let status = lz_verify(
                cstr("cor33").as_ptr(), ptr::null(), ptr::null(),
                cstr("E").as_ptr(), cstr("E").as_ptr(), 0, 3, sieve, &mut report,
            );
            assert_eq!(status, LzStatus::Ok);
            assert_eq!(take(report), "PASS cor33 checks=500 limit=500 seed=3");

            let status = lz_verify(
                cstr("bogus").as_ptr(), ptr::null(), ptr::null(), ptr::null(), ptr::null(),
                0, 0, sieve, &mut report,
            );
            assert_eq!(status, LzStatus::DomainError);
            lz_sieve_free(sieve);
        }
    }
}
