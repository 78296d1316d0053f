use std::ffi::{c_char, CStr, CString};
use std::ptr;

use braidknot_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    braidknot_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(braidknot_last_error())
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn parse(text: &str) -> *mut BraidknotBraid {
    let mut h = ptr::null_mut();
    assert_eq!(
        braidknot_braid_parse(c(text).as_ptr(), &mut h),
        BraidknotStatus::Ok
    );
    h
}

#[test]
fn trefoil_round_trip() {
    unsafe {
        let h = parse("2:  1 1\t1");
        let mut n = 0usize;
        assert_eq!(braidknot_braid_strands(h, &mut n), BraidknotStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(braidknot_braid_components(h, &mut n), BraidknotStatus::Ok);
        assert_eq!(n, 1);
        let mut s = ptr::null_mut();
        assert_eq!(braidknot_braid_to_string(h, &mut s), BraidknotStatus::Ok);
        assert_eq!(take(s), "2: 1 1 1");
        assert_eq!(braidknot_alexander(h, &mut s), BraidknotStatus::Ok);
        assert_eq!(take(s), "1 - 1*t + 1*t^2");
        assert_eq!(braidknot_jones(h, &mut s), BraidknotStatus::Ok);
        assert_eq!(take(s), "1*t + 1*t^3 - 1*t^4");
        assert_eq!(
            braidknot_fingerprint_json(h, 1, &mut s),
            BraidknotStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["components"], 1);
        braidknot_braid_free(h);
    }
}

#[test]
fn build_and_compare() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(
            braidknot_braid_build(c("klink 5,2 2,2").as_ptr(), 0, &mut a),
            BraidknotStatus::Ok
        );
        let mut b = ptr::null_mut();
        assert_eq!(
            braidknot_braid_build(c("torus 2 7").as_ptr(), 0, &mut b),
            BraidknotStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            braidknot_check_equivalent(a, b, 1, &mut s),
            BraidknotStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["status"], "consistent");
        braidknot_braid_free(a);
        braidknot_braid_free(b);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            braidknot_braid_parse(c("3: 5").as_ptr(), &mut h),
            BraidknotStatus::Parse
        );
        assert!(h.is_null());
        assert!(last_error().contains("out of range"));
        assert_eq!(
            braidknot_braid_parse(ptr::null(), &mut h),
            BraidknotStatus::NullPointer
        );
        assert_eq!(
            braidknot_braid_build(c("ttk 2 5 1 1").as_ptr(), 0, &mut h),
            BraidknotStatus::InvalidArgument
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            braidknot_braid_parse(bad.as_ptr() as *const c_char, &mut h),
            BraidknotStatus::InvalidUtf8
        );

        let big = parse("12: 1 2 3 4 5 6 7 8 9 10 11");
        let mut s = ptr::null_mut();
        assert_eq!(braidknot_jones(big, &mut s), BraidknotStatus::ResourceLimit);
        assert!(s.is_null());
        assert_eq!(braidknot_alexander(big, &mut s), BraidknotStatus::Ok);
        assert_eq!(take(s), "1");
        assert_eq!(last_error(), "");
        braidknot_braid_free(big);

        assert_eq!(
            braidknot_alexander(ptr::null(), &mut s),
            BraidknotStatus::NullPointer
        );
        braidknot_braid_free(ptr::null_mut());
        braidknot_string_free(ptr::null_mut());
    }
}

#[test]
fn suites() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            braidknot_verify_suite(c("toruslemma").as_ptr(), c("5,2,1").as_ptr(), &mut s),
            BraidknotStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["suite"], "toruslemma");
        assert_eq!(v["cases"].as_array().unwrap().len(), 2);

        assert_eq!(
            braidknot_verify_suite(c("theorem5").as_ptr(), c("2,1").as_ptr(), &mut s),
            BraidknotStatus::Mismatch
        );
        assert!(!s.is_null());
        drop(take(s));

        s = ptr::null_mut();
        assert_eq!(
            braidknot_verify_suite(c("nope").as_ptr(), ptr::null(), &mut s),
            BraidknotStatus::InvalidArgument
        );
        assert!(s.is_null());
        assert!(last_error().contains("unknown suite"));
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/braidknot.h");
    let source = include_str!("../src/lib.rs");
    let exported: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 12);
    for name in exported {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct BraidknotBraid BraidknotBraid;"));
    assert!(header.contains("BRAIDKNOT_STATUS_RESOURCE_LIMIT = 5"));
}
