use std::ffi::{c_char, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use selfdual_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sd_last_error()).to_string_lossy().into_owned() }
}

fn field(p: u64, s: u32) -> *mut SdField {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { sd_field_new(p, s, &mut f) }, SdStatus::Ok);
    f
}

#[test]
fn field_lifecycle() {
    let f = field(3, 2);
    assert_eq!(unsafe { sd_field_order(f) }, 9);
    unsafe { sd_field_free(f) };
    unsafe { sd_field_free(ptr::null_mut()) };
    assert_eq!(unsafe { sd_field_order(ptr::null()) }, 0);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sd_field_new(6, 1, &mut out) }, SdStatus::InvalidArgument);
    assert!(out.is_null());
    assert!(last_error().contains("not prime"));
    assert_eq!(unsafe { sd_field_new(3, 1, ptr::null_mut()) }, SdStatus::NullPointer);
}

#[test]
fn factorization_handle() {
    let f = field(3, 1);
    let mut fz = ptr::null_mut();
    assert_eq!(unsafe { sd_factor(f, 6, -1, &mut fz) }, SdStatus::Ok);
    assert_eq!(unsafe { sd_factorization_len(fz) }, 1);
    let (mut sr, mut pairs) = (0usize, 0usize);
    assert_eq!(unsafe { sd_factorization_pairing(fz, &mut sr, &mut pairs) }, SdStatus::Ok);
    assert_eq!((sr, pairs), (1, 0));
    let mut poly: *const c_char = ptr::null();
    let mut mult = 0u64;
    assert_eq!(unsafe { sd_factorization_factor(fz, 0, &mut poly, &mut mult) }, SdStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(poly) }.to_str().unwrap(), "1 + 1*x^2");
    assert_eq!(mult, 3);
    assert_eq!(unsafe { sd_factorization_factor(fz, 1, &mut poly, &mut mult) }, SdStatus::InvalidArgument);
    unsafe { sd_factorization_free(fz) };
    assert_eq!(unsafe { sd_factor(f, 6, 2, &mut fz) }, SdStatus::InvalidArgument);
    unsafe { sd_field_free(f) };
}

#[test]
fn classification_calls() {
    let f5 = field(5, 1);
    let mut count = 0u64;
    assert_eq!(unsafe { sd_count_selfdual(f5, 10, -1, &mut count) }, SdStatus::Ok);
    assert_eq!(count, 6);
    let mut exists = true;
    assert_eq!(unsafe { sd_exists_selfdual(f5, 7, -1, &mut exists) }, SdStatus::Ok);
    assert!(!exists);
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { sd_enumerate_selfdual(f5, 10, -1, &mut json) }, SdStatus::Ok);
    let list: Vec<String> = serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(list.len(), 6);
    unsafe { sd_string_free(json) };
    assert_eq!(unsafe { sd_count_selfdual(f5, 0, -1, &mut count) }, SdStatus::InvalidArgument);
    unsafe { sd_field_free(f5) };

    let f2 = field(2, 1);
    assert_eq!(unsafe { sd_count_selfdual(f2, 6, 1, &mut count) }, SdStatus::Ok);
    assert_eq!(count, 1);
    assert_eq!(unsafe { sd_count_selfdual(f2, 6, -1, &mut count) }, SdStatus::CharacteristicTwo);
    unsafe { sd_field_free(f2) };
    assert_eq!(unsafe { sd_count_selfdual(ptr::null(), 6, 1, &mut count) }, SdStatus::NullPointer);
}

#[test]
fn number_theory_and_claims() {
    let mut order = 0u64;
    assert_eq!(unsafe { sd_mult_order(5, 7, &mut order) }, SdStatus::Ok);
    assert_eq!(order, 6);
    assert_eq!(unsafe { sd_mult_order(3, 6, &mut order) }, SdStatus::HypothesisUnmet);

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { sd_claims_json(12, &mut json) }, SdStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { sd_string_free(json) };
    let ids: Vec<String> = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["claim_id"].as_str().unwrap().to_owned())
        .collect();
    assert!(ids.iter().any(|i| i == "example-70-F5"));
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_is_current_and_c_program_links() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(manifest.join("include/selfdual.h")).unwrap();
    for name in ["sd_field_new", "sd_factor", "sd_count_selfdual", "sd_last_error", "SD_STATUS_OUT_OF_RANGE"] {
        assert!(header.contains(name), "{name} missing from header");
    }

    let lib = target_dir().join("libselfdual_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
