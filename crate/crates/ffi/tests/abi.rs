//! Calls through the exported functions, and a C program linked against the static library.

use affcat_ffi::*;
use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn permutation_round_trip() {
    unsafe {
        let mut p: *mut AffcatPerm = ptr::null_mut();
        assert_eq!(affcat_perm_from_word(3, cs("rho s1").as_ptr(), &mut p), AffcatStatus::Ok);
        assert_eq!(affcat_perm_length(p), 1);
        assert_eq!(affcat_perm_rho_power(p), 1);
        let mut buf = [0i64; 2];
        let mut len = 0usize;
        assert_eq!(affcat_perm_window(p, buf.as_mut_ptr(), 2, &mut len), AffcatStatus::BufferTooSmall);
        assert_eq!(len, 3);
        let mut q: *mut AffcatPerm = ptr::null_mut();
        assert_eq!(affcat_perm_compose(p, p, &mut q), AffcatStatus::Ok);
        assert_eq!(affcat_perm_rho_power(q), 2);
        affcat_perm_free(p);
        affcat_perm_free(q);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut p: *mut AffcatPerm = ptr::null_mut();
        assert_eq!(affcat_perm_from_word(3, cs("s7").as_ptr(), &mut p), AffcatStatus::Parse);
        assert!(p.is_null());
        let msg = CStr::from_ptr(affcat_last_error_message()).to_str().unwrap();
        assert!(msg.contains("syntax error"), "{}", msg);
        assert_eq!(affcat_perm_from_word(3, ptr::null(), &mut p), AffcatStatus::NullPointer);
        let mut rep: *mut AffcatReport = ptr::null_mut();
        assert_eq!(affcat_verify(cs("schur").as_ptr(), 4, 4, &mut rep), AffcatStatus::InvalidParams);
        assert_eq!(affcat_verify(cs("nope").as_ptr(), 3, 4, &mut rep), AffcatStatus::Unknown);
    }
}

#[test]
fn hecke_and_kl() {
    unsafe {
        let mut w: *mut AffcatPerm = ptr::null_mut();
        assert_eq!(affcat_perm_from_word(3, cs("s1 s2").as_ptr(), &mut w), AffcatStatus::Ok);
        let mut c: *mut AffcatHecke = ptr::null_mut();
        assert_eq!(affcat_hecke_kl(w, 4, &mut c), AffcatStatus::Ok);
        let mut cb: *mut AffcatHecke = ptr::null_mut();
        assert_eq!(affcat_hecke_bar(c, &mut cb), AffcatStatus::Ok);
        let mut eq = false;
        assert_eq!(affcat_hecke_equal(c, cb, &mut eq), AffcatStatus::Ok);
        assert!(eq);
        let mut prod: *mut AffcatHecke = ptr::null_mut();
        let mut b1: *mut AffcatHecke = ptr::null_mut();
        let mut b2: *mut AffcatHecke = ptr::null_mut();
        affcat_hecke_parse(3, cs("b[1]").as_ptr(), &mut b1);
        affcat_hecke_parse(3, cs("b[2]").as_ptr(), &mut b2);
        assert_eq!(affcat_hecke_mul(b1, b2, &mut prod), AffcatStatus::Ok);
        let s = affcat_hecke_to_string(prod);
        assert!(!CStr::from_ptr(s).to_str().unwrap().is_empty());
        affcat_string_free(s);
        assert_eq!(affcat_hecke_kl(w, 1, &mut c), AffcatStatus::BudgetExceeded);
        for h in [c, cb, prod, b1, b2] {
            affcat_hecke_free(h);
        }
        affcat_perm_free(w);
    }
}

#[test]
fn report_lines() {
    unsafe {
        let mut rep: *mut AffcatReport = ptr::null_mut();
        assert_eq!(affcat_verify(cs("weyl").as_ptr(), 3, 4, &mut rep), AffcatStatus::Ok);
        assert!(affcat_report_len(rep) > 0);
        assert_eq!(affcat_report_failures(rep), 0);
        let l = affcat_report_line(rep, 0);
        assert!(CStr::from_ptr(l).to_str().unwrap().ends_with("PASS"));
        affcat_string_free(l);
        assert!(affcat_report_line(rep, usize::MAX).is_null());
        affcat_report_free(rep);
        let mut ok = false;
        assert_eq!(affcat_shifted_elementary(5, 2, -1, &mut ok), AffcatStatus::Ok);
        assert!(ok);
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libaffcat_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let out = std::env::temp_dir().join(format!("affcat_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).contains("T["));
}
