use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use genexp::genexp::genexp_c;
use genexp::partition::Partition;
use genexp_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = genexp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

/// Reads all terms back through the C interface.
unsafe fn terms(p: *const GenexpPoly) -> Vec<(u32, i64)> {
    (0..genexp_poly_num_terms(p))
        .map(|i| {
            let (mut e, mut c) = (0u32, 0i64);
            assert_eq!(genexp_poly_term(p, i, &mut e, &mut c), GenexpStatus::Ok);
            (e, c)
        })
        .collect()
}

#[test]
fn poly_handles_match_the_library() {
    for (lambda, n) in [("1,1", 3), ("2", 4), ("2,2", 2), ("3,1", 3), ("2,2,2", 3)] {
        let mut p = ptr::null_mut();
        unsafe {
            assert_eq!(genexp_c_poly(cs(lambda).as_ptr(), n, &mut p), GenexpStatus::Ok);
            let expected = genexp_c(&lambda.parse::<Partition>().unwrap(), n).unwrap();
            assert_eq!(terms(p), expected.terms().collect::<Vec<_>>());
            let mut q = ptr::null_mut();
            assert_eq!(genexp_oracle_c(cs(lambda).as_ptr(), n, &mut q), GenexpStatus::Ok);
            assert_eq!(terms(q), terms(p));
            assert_eq!(genexp_poly_cutoff(p), -1);
            genexp_poly_free(p);
            genexp_poly_free(q);
        }
    }
}

#[test]
fn type_a_and_series() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(genexp_a_poly(cs("2,1").as_ptr(), 3, &mut p), GenexpStatus::Ok);
        assert_eq!(terms(p), [(1, 1), (2, 1)]);
        let mut q = ptr::null_mut();
        assert_eq!(genexp_oracle_a(cs("2,1").as_ptr(), 3, &mut q), GenexpStatus::Ok);
        assert_eq!(terms(q), terms(p));
        genexp_poly_free(p);
        genexp_poly_free(q);

        assert_eq!(genexp_stable_c(cs("1,1").as_ptr(), 8, &mut p), GenexpStatus::Ok);
        assert_eq!(terms(p), [(2, 1), (4, 1), (6, 1), (8, 1)]);
        assert_eq!(genexp_poly_cutoff(p), 8);
        let s = genexp_poly_to_string(p);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "t^2 + t^4 + t^6 + t^8");
        genexp_string_free(s);
        genexp_poly_free(p);

        assert_eq!(genexp_stable_b(cs("2").as_ptr(), 6, &mut p), GenexpStatus::Ok);
        let mut q = ptr::null_mut();
        assert_eq!(genexp_stable_c(cs("1,1").as_ptr(), 6, &mut q), GenexpStatus::Ok);
        assert_eq!(terms(p), terms(q));
        genexp_poly_free(p);
        genexp_poly_free(q);
    }
}

#[test]
fn scalar_queries() {
    unsafe {
        let (mut lo, mut hi, mut count) = (0u32, 0u32, 0u64);
        assert_eq!(genexp_min_power(cs("4,3,1,1,1").as_ptr(), 5, &mut lo), GenexpStatus::Ok);
        assert_eq!(genexp_max_power(cs("2").as_ptr(), 3, &mut hi), GenexpStatus::Ok);
        assert_eq!(hi, 5);
        let poly = genexp_c(&"4,3,1,1,1".parse().unwrap(), 5).unwrap();
        assert_eq!(poly.lowest_degree(), Some(lo));
        assert_eq!(
            genexp_branching(cs("2,1,1").as_ptr(), cs("5,4,3,3,3,2").as_ptr(), 3, &mut count),
            GenexpStatus::Ok
        );
        assert_eq!(count, 1);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(genexp_c_poly(cs("1,x").as_ptr(), 2, &mut p), GenexpStatus::MalformedInput);
        assert!(p.is_null());
        assert_eq!(genexp_c_poly(cs("1,1,1").as_ptr(), 2, &mut p), GenexpStatus::Incompatible);
        assert!(last_error().contains("1,1,1"));
        assert_eq!(genexp_c_poly(ptr::null(), 2, &mut p), GenexpStatus::NullPointer);
        assert_eq!(genexp_c_poly(cs("1,1").as_ptr(), 2, ptr::null_mut()), GenexpStatus::NullPointer);
        assert_eq!(genexp_stable_c(cs("1,1").as_ptr(), 1000, &mut p), GenexpStatus::CutoffExceeded);
        let mut lo = 0u32;
        assert_eq!(genexp_min_power(cs("3").as_ptr(), 2, &mut lo), GenexpStatus::Incompatible);

        assert_eq!(genexp_c_poly(cs("2").as_ptr(), 2, &mut p), GenexpStatus::Ok);
        let (mut e, mut c) = (0u32, 0i64);
        assert_eq!(genexp_poly_term(p, 9, &mut e, &mut c), GenexpStatus::OutOfRange);
        assert_eq!(genexp_poly_term(ptr::null(), 0, &mut e, &mut c), GenexpStatus::NullPointer);
        genexp_poly_free(p);

        assert_eq!(genexp_poly_num_terms(ptr::null()), 0);
        assert_eq!(genexp_poly_coeff(ptr::null(), 1), 0);
        assert!(genexp_poly_to_string(ptr::null()).is_null());
        genexp_poly_free(ptr::null_mut());
        genexp_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(genexp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// `target/<profile>`, found from the running test binary in `deps/`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = profile_dir().join("libgenexp_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
