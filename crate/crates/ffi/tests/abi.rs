use std::ffi::{CStr, CString};
use std::ptr;

use homleibniz_ffi::*;

fn corpus(name: &str) -> *mut HlAlgebra {
    let n = CString::new(name).unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { hl_algebra_corpus(n.as_ptr(), &mut a) }, HlStatus::Ok);
    assert!(!a.is_null());
    a
}

fn last_error() -> String {
    let p = hl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn sl2v1_through_the_abi() {
    let a = corpus("sl2v1");
    unsafe {
        let mut dim = 0;
        assert_eq!(hl_algebra_dim(a, &mut dim), HlStatus::Ok);
        assert_eq!(dim, 5);
        let mut flags = 0;
        assert_eq!(hl_algebra_validate(a, &mut flags), HlStatus::Ok);
        assert_eq!(flags, HL_HOM_LEIBNIZ | HL_REGULAR);
        let mut roots = 0;
        assert_eq!(hl_algebra_root_count(a, &mut roots), HlStatus::Ok);
        assert_eq!(roots, 4);
        let mut classes = 0;
        assert_eq!(hl_algebra_class_count(a, &mut classes), HlStatus::Ok);
        assert_eq!(classes, 1);
        let mut v = HlVerdict::Inconclusive;
        assert_eq!(hl_algebra_simplicity(a, &mut v), HlStatus::Ok);
        assert_eq!(v, HlVerdict::Simple);
        hl_algebra_free(a);
    }
}

#[test]
fn d6_has_two_classes_and_is_not_simple() {
    let a = corpus("d6");
    unsafe {
        let mut classes = 0;
        assert_eq!(hl_algebra_class_count(a, &mut classes), HlStatus::Ok);
        assert_eq!(classes, 2);
        let mut v = HlVerdict::Simple;
        assert_eq!(hl_algebra_simplicity(a, &mut v), HlStatus::Ok);
        assert_eq!(v, HlVerdict::NotSimple);
        hl_algebra_free(a);
    }
}

#[test]
fn report_json_is_owned_and_parses() {
    let a = corpus("sl2");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hl_algebra_report_json(a, &mut s), HlStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        hl_string_free(s);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        hl_algebra_free(a);
    }
}

#[test]
fn from_json_roundtrip() {
    let src = CString::new(homleibniz::corpus::source("a0").unwrap()).unwrap();
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(hl_algebra_from_json(src.as_ptr(), &mut a), HlStatus::Ok);
        let mut dim = 0;
        assert_eq!(hl_algebra_dim(a, &mut dim), HlStatus::Ok);
        assert_eq!(dim, 2);
        hl_algebra_free(a);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(hl_algebra_from_json(ptr::null(), &mut a), HlStatus::NullPointer);
        let bad = CString::new("{ not json").unwrap();
        assert_eq!(hl_algebra_from_json(bad.as_ptr(), &mut a), HlStatus::Parse);
        assert!(last_error().contains("line 1"));
        let missing = CString::new("/nonexistent/algebra.json").unwrap();
        assert_eq!(hl_algebra_load_file(missing.as_ptr(), &mut a), HlStatus::Io);
        let unknown = CString::new("nope").unwrap();
        assert_ne!(hl_algebra_corpus(unknown.as_ptr(), &mut a), HlStatus::Ok);
        assert!(a.is_null());

        let mut dim = 0;
        assert_eq!(hl_algebra_dim(ptr::null(), &mut dim), HlStatus::NullPointer);
        let lb2 = corpus("lb2");
        assert_eq!(hl_algebra_dim(lb2, ptr::null_mut()), HlStatus::NullPointer);
        let mut roots = 0;
        assert_eq!(hl_algebra_root_count(lb2, &mut roots), HlStatus::Math);
        assert!(last_error().contains("HNotMaximal"));
        hl_algebra_free(lb2);
        hl_algebra_free(ptr::null_mut());
        hl_string_free(ptr::null_mut());
    }
}

#[test]
fn status_names() {
    let name = |s| unsafe { CStr::from_ptr(hl_status_name(s)) }.to_str().unwrap();
    assert_eq!(name(HlStatus::Ok), "ok");
    assert_eq!(name(HlStatus::Math), "mathematical error");
}

#[test]
fn header_declares_every_function() {
    let header = include_str!("../include/homleibniz.h");
    for f in [
        "hl_algebra_from_json",
        "hl_algebra_load_file",
        "hl_algebra_corpus",
        "hl_algebra_free",
        "hl_algebra_dim",
        "hl_algebra_validate",
        "hl_algebra_root_count",
        "hl_algebra_class_count",
        "hl_algebra_simplicity",
        "hl_algebra_report_json",
        "hl_string_free",
        "hl_last_error_message",
        "hl_status_name",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct HlAlgebra HlAlgebra;"));
    assert!(header.contains("HL_STATUS_MATH = 5"));
}
