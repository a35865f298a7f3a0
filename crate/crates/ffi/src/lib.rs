//! C ABI over `chowcheck`: opaque handles, status codes and a per-thread
//! error message. Strings returned to the caller are freed with
//! [`chow_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chowcheck::cli::{parse_config, report_json, ConfigEcho};
use chowcheck::exactpoly::{
    arith, ArithOp, CoefficientRing, Ctx, PolyError, Polynomial, VariableContext,
};
use chowcheck::paperchecks::{CheckConfig, CheckError, Registry, Report};
use chowcheck::presented::RingPresentation;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    ContextMismatch = 4,
    UnknownCheck = 5,
    OutOfRange = 6,
    InvalidArgument = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowArithOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
}

/// Variables plus a coefficient ring.
pub struct ChowContext {
    ctx: Ctx,
    ring: CoefficientRing,
}

pub struct ChowPolynomial {
    poly: Polynomial,
}

pub struct ChowReport {
    report: Report,
    config: CheckConfig,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(ChowStatus, String);

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        let status = match e {
            PolyError::Parse { .. } => ChowStatus::Parse,
            PolyError::ContextMismatch | PolyError::RingMismatch { .. } => {
                ChowStatus::ContextMismatch
            }
            _ => ChowStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        let status = match e {
            CheckError::UnknownCheck(_) => ChowStatus::UnknownCheck,
            CheckError::OutOfRange { .. } => ChowStatus::OutOfRange,
            CheckError::Internal(_) => ChowStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ChowStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ChowStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside chowcheck");
            ChowStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(ChowStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ChowStatus::InvalidUtf8, "string is not UTF-8".into()))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Failure(ChowStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_box<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn chow_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chow_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a context over `Z` (`modulus == 0`) or `Z/modulus`.
///
/// # Safety
/// `names` points to `count` valid strings; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_context_new(
    names: *const *const c_char,
    count: usize,
    modulus: u64,
    out: *mut *mut ChowContext,
) -> ChowStatus {
    guard(|| {
        if names.is_null() && count > 0 {
            return Err(null());
        }
        let mut vars = Vec::with_capacity(count);
        for i in 0..count {
            vars.push(read_str(*names.add(i))?.to_string());
        }
        let ctx = VariableContext::new(vars)?;
        let ring = if modulus == 0 {
            CoefficientRing::Integers
        } else {
            CoefficientRing::integers_mod(modulus)?
        };
        write_box(out, ChowContext { ctx, ring })
    })
}

/// # Safety
/// `ctx` is null or was returned by [`chow_context_new`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chow_context_free(ctx: *mut ChowContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// # Safety
/// `ctx` is a live context, `text` a valid string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_poly_parse(
    ctx: *const ChowContext,
    text: *const c_char,
    out: *mut *mut ChowPolynomial,
) -> ChowStatus {
    guard(|| {
        let c = ctx.as_ref().ok_or_else(null)?;
        let poly = Polynomial::parse(&c.ctx, &c.ring, read_str(text)?)?;
        write_box(out, ChowPolynomial { poly })
    })
}

/// # Safety
/// `a`, `b` are live polynomials; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_poly_arith(
    a: *const ChowPolynomial,
    b: *const ChowPolynomial,
    op: ChowArithOp,
    out: *mut *mut ChowPolynomial,
) -> ChowStatus {
    guard(|| {
        let (a, b) = (a.as_ref().ok_or_else(null)?, b.as_ref().ok_or_else(null)?);
        let op = match op {
            ChowArithOp::Add => ArithOp::Add,
            ChowArithOp::Sub => ArithOp::Sub,
            ChowArithOp::Mul => ArithOp::Mul,
        };
        let poly = arith(&a.poly, &b.poly, op)?;
        write_box(out, ChowPolynomial { poly })
    })
}

/// # Safety
/// `p` is a live polynomial; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_poly_is_zero(p: *const ChowPolynomial, out: *mut bool) -> ChowStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = p.poly.is_zero();
        Ok(())
    })
}

/// Canonical text; free with [`chow_string_free`].
///
/// # Safety
/// `p` is a live polynomial; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_poly_to_string(
    p: *const ChowPolynomial,
    out: *mut *mut c_char,
) -> ChowStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        write_string(out, p.poly.to_string())
    })
}

/// # Safety
/// `p` is null or a polynomial from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chow_poly_free(p: *mut ChowPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub extern "C" fn chow_check_count() -> usize {
    Registry::standard().list_checks().len()
}

/// Name of the check at `index` in registry order.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_check_name(index: usize, out: *mut *mut c_char) -> ChowStatus {
    guard(|| {
        let specs = Registry::standard().list_checks();
        let spec = specs.get(index).ok_or_else(|| {
            Failure(
                ChowStatus::InvalidArgument,
                format!("index {index} out of range"),
            )
        })?;
        write_string(out, spec.name.to_string())
    })
}

fn config_for(max_degree: i32) -> CheckConfig {
    CheckConfig {
        max_degree: u32::try_from(max_degree).ok(),
        ..CheckConfig::default()
    }
}

/// Runs one check; a negative `max_degree` keeps the defaults.
///
/// # Safety
/// `name` is a valid string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_run_check(
    name: *const c_char,
    max_degree: i32,
    out: *mut *mut ChowReport,
) -> ChowStatus {
    guard(|| {
        let name = read_str(name)?;
        let config = config_for(max_degree);
        let report = Registry::standard().run_selected(&[name], &config)?;
        write_box(out, ChowReport { report, config })
    })
}

/// Runs every check; a negative `max_degree` keeps the defaults.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_run_all(max_degree: i32, out: *mut *mut ChowReport) -> ChowStatus {
    guard(|| {
        let config = config_for(max_degree);
        let registry = Registry::standard();
        let names: Vec<&str> = registry.list_checks().iter().map(|s| s.name).collect();
        let report = registry.run_selected(&names, &config)?;
        write_box(out, ChowReport { report, config })
    })
}

/// Pass, fail and error counts.
///
/// # Safety
/// `r` is a live report; the out pointers are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_report_counts(
    r: *const ChowReport,
    pass: *mut usize,
    fail: *mut usize,
    error: *mut usize,
) -> ChowStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        let (p, f, e) = (
            pass.as_mut().ok_or_else(null)?,
            fail.as_mut().ok_or_else(null)?,
            error.as_mut().ok_or_else(null)?,
        );
        *p = r.report.summary.pass;
        *f = r.report.summary.fail;
        *e = r.report.summary.error;
        Ok(())
    })
}

/// The report in the CLI's JSON layout; free with [`chow_string_free`].
///
/// # Safety
/// `r` is a live report; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_report_json(
    r: *const ChowReport,
    out: *mut *mut c_char,
) -> ChowStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        let echo = ConfigEcho {
            max_degree: r.config.max_degree,
            per_check: r.config.per_check.clone(),
            format: "json".into(),
            config: None,
        };
        write_string(out, report_json(&r.report, &echo))
    })
}

/// # Safety
/// `r` is null or a report from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chow_report_free(r: *mut ChowReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Graded components `0..=max_degree`, one line each. `spec` is
/// `builtin:Rstar` or config text holding exactly one `[presentation]`.
///
/// # Safety
/// `spec` is a valid string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chow_hilbert(
    spec: *const c_char,
    max_degree: u32,
    out: *mut *mut c_char,
) -> ChowStatus {
    guard(|| {
        let spec = read_str(spec)?;
        let p = if spec.trim() == "builtin:Rstar" {
            RingPresentation::rstar()
        } else {
            let mut cfg =
                parse_config(spec).map_err(|e| Failure(ChowStatus::Parse, e.to_string()))?;
            if cfg.presentations.len() != 1 {
                return Err(Failure(
                    ChowStatus::InvalidArgument,
                    format!(
                        "expected one presentation, found {}",
                        cfg.presentations.len()
                    ),
                ));
            }
            cfg.presentations.remove(0)
        };
        let rows = p
            .hilbert_table(max_degree)
            .map_err(|e| Failure(ChowStatus::Internal, e.to_string()))?;
        write_string(out, rows.iter().map(|r| format!("{r}\n")).collect())
    })
}
