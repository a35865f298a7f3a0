use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use chowcheck_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { chow_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(chow_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn context(names: &[&str], modulus: u64) -> *mut ChowContext {
    let owned: Vec<CString> = names.iter().map(|n| CString::new(*n).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut ctx = ptr::null_mut();
    let st = unsafe { chow_context_new(ptrs.as_ptr(), ptrs.len(), modulus, &mut ctx) };
    assert_eq!(st, ChowStatus::Ok);
    ctx
}

fn parse(ctx: *const ChowContext, text: &str) -> (ChowStatus, *mut ChowPolynomial) {
    let t = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    let st = unsafe { chow_poly_parse(ctx, t.as_ptr(), &mut p) };
    (st, p)
}

#[test]
fn polynomial_round_trip() {
    let ctx = context(&["x1", "x2"], 0);
    let (_, a) = parse(ctx, "x1 + x2");
    let (_, b) = parse(ctx, "x1 - x2");
    let mut prod = ptr::null_mut();
    assert_eq!(
        unsafe { chow_poly_arith(a, b, ChowArithOp::Mul, &mut prod) },
        ChowStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chow_poly_to_string(prod, &mut s) }, ChowStatus::Ok);
    assert_eq!(take(s), "x1^2 - x2^2");
    let mut zero = true;
    assert_eq!(
        unsafe { chow_poly_is_zero(prod, &mut zero) },
        ChowStatus::Ok
    );
    assert!(!zero);
    unsafe {
        chow_poly_free(a);
        chow_poly_free(b);
        chow_poly_free(prod);
        chow_context_free(ctx);
    }
}

#[test]
fn modular_context() {
    let ctx = context(&["alpha", "beta"], 3);
    let (_, a) = parse(ctx, "(alpha + beta)^2");
    let mut s = ptr::null_mut();
    unsafe { chow_poly_to_string(a, &mut s) };
    assert_eq!(take(s), "alpha^2 - alpha*beta + beta^2");
    unsafe {
        chow_poly_free(a);
        chow_context_free(ctx);
    }
}

#[test]
fn errors_are_reported() {
    let ctx = context(&["x"], 0);
    let (st, p) = parse(ctx, "x + * 2");
    assert_eq!(st, ChowStatus::Parse);
    assert!(p.is_null());
    assert!(!last_error().is_empty());
    let other = context(&["y"], 0);
    let (_, a) = parse(ctx, "x");
    let (_, b) = parse(other, "y");
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { chow_poly_arith(a, b, ChowArithOp::Add, &mut out) },
        ChowStatus::ContextMismatch
    );
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { chow_poly_to_string(ptr::null(), &mut text) },
        ChowStatus::NullPointer
    );
    let (st, _) = parse(ctx, "x");
    assert_eq!(st, ChowStatus::Ok);
    assert!(last_error().is_empty());
    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { chow_context_new(ptr::null(), 0, 1, &mut bad) },
        ChowStatus::InvalidArgument
    );
    unsafe {
        chow_poly_free(a);
        chow_poly_free(b);
        chow_context_free(ctx);
        chow_context_free(other);
        chow_poly_free(ptr::null_mut());
        chow_string_free(ptr::null_mut());
    }
}

#[test]
fn checks_through_the_abi() {
    assert_eq!(chow_check_count(), 18);
    let mut name = ptr::null_mut();
    assert_eq!(unsafe { chow_check_name(0, &mut name) }, ChowStatus::Ok);
    assert_eq!(take(name), "gamma-invariance");
    assert_eq!(
        unsafe { chow_check_name(99, &mut name) },
        ChowStatus::InvalidArgument
    );

    let n = CString::new("point-class").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { chow_run_check(n.as_ptr(), -1, &mut r) },
        ChowStatus::Ok
    );
    let (mut p, mut f, mut e) = (0, 0, 0);
    assert_eq!(
        unsafe { chow_report_counts(r, &mut p, &mut f, &mut e) },
        ChowStatus::Ok
    );
    assert_eq!((p, f, e), (1, 0, 0));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { chow_report_json(r, &mut json) }, ChowStatus::Ok);
    let json = take(json);
    assert!(json.contains("\"point_class\": \"ell^2 + ell*u1 + u2*u3\""));
    unsafe { chow_report_free(r) };

    let bogus = CString::new("bogus").unwrap();
    assert_eq!(
        unsafe { chow_run_check(bogus.as_ptr(), -1, &mut r) },
        ChowStatus::UnknownCheck
    );
    let gen = CString::new("gamma-generation").unwrap();
    assert_eq!(
        unsafe { chow_run_check(gen.as_ptr(), 500, &mut r) },
        ChowStatus::OutOfRange
    );

    assert_eq!(unsafe { chow_run_all(4, &mut r) }, ChowStatus::Ok);
    assert_eq!(
        unsafe { chow_report_counts(r, &mut p, &mut f, &mut e) },
        ChowStatus::Ok
    );
    assert_eq!(p + f + e, 18);
    unsafe { chow_report_free(r) };
}

#[test]
fn hilbert_tables() {
    let spec = CString::new("builtin:Rstar").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { chow_hilbert(spec.as_ptr(), 4, &mut out) },
        ChowStatus::Ok
    );
    assert_eq!(take(out).lines().last(), Some("4: Z ⊕ Z/3"));
    let text = CString::new("[presentation P]\ngenerators = a:1\nrelation = 2*a^2\n").unwrap();
    assert_eq!(
        unsafe { chow_hilbert(text.as_ptr(), 2, &mut out) },
        ChowStatus::Ok
    );
    assert_eq!(take(out), "0: Z\n1: Z\n2: Z/2\n");
    let junk = CString::new("[nonsense]").unwrap();
    assert_eq!(
        unsafe { chow_hilbert(junk.as_ptr(), 2, &mut out) },
        ChowStatus::Parse
    );
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/chowcheck.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "chow_poly_parse",
        "chow_run_all",
        "chow_report_json",
        "chow_last_error",
        "CHOW_STATUS_OK",
    ] {
        assert!(text.contains(f), "{f}");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"chowcheck.h\"\nint main(void) { return CHOW_STATUS_OK; }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
    else {
        eprintln!("no C compiler; header syntax not checked");
        return;
    };
    assert!(status.success());
}

#[test]
fn linked_c_program() {
    // target/<profile>/deps/api-* -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let libdir = exe.parent().and_then(Path::parent).unwrap().to_path_buf();
    if !libdir.join("libchowcheck_ffi.so").exists() {
        eprintln!("shared library not built; skipping");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "chowcheck.h"

int main(void) {
    const char *names[] = {"x1", "x2", "x3"};
    ChowContext *ctx = NULL;
    ChowPolynomial *g = NULL, *sq = NULL;
    char *text = NULL;
    if (chow_context_new(names, 3, 0, &ctx) != CHOW_STATUS_OK) return 10;
    if (chow_poly_parse(ctx, "(x1+x2+x3)^2 - 3*(x1*x2+x1*x3+x2*x3)", &g) != CHOW_STATUS_OK) return 11;
    if (chow_poly_arith(g, g, CHOW_ARITH_OP_MUL, &sq) != CHOW_STATUS_OK) return 12;
    chow_poly_to_string(g, &text);
    printf("%s\n", text);
    chow_string_free(text);
    if (chow_poly_parse(ctx, "x4", &g) != CHOW_STATUS_PARSE) return 13;
    printf("%s\n", chow_last_error());
    chow_poly_free(g);
    chow_poly_free(sq);
    chow_context_free(ctx);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("main");
    let Ok(status) = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg("-L")
        .arg(&libdir)
        .args(["-lchowcheck_ffi", "-o"])
        .arg(&bin)
        .status()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.success());
    let out = Command::new(&bin)
        .env("LD_LIBRARY_PATH", &libdir)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("x1^2 - x1*x2 - x1*x3 + x2^2 - x2*x3 + x3^2")
    );
    assert!(lines.next().is_some_and(|l| !l.is_empty()));
}
