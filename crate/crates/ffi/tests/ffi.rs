use std::ffi::{CStr, CString};
use std::ptr;

use eppo_ffi::*;

fn load(source: &str) -> *mut EppoGroup {
    let s = CString::new(source).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { eppo_group_from_source(s.as_ptr(), &mut g) }, EppoStatus::Ok, "{source}");
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(eppo_last_error_message()) }.to_string_lossy().into_owned()
}

fn spectrum(g: *const EppoGroup) -> Vec<u64> {
    let mut len = 0;
    assert_eq!(unsafe { eppo_spectrum(g, 0, ptr::null_mut(), 0, &mut len) }, EppoStatus::BufferTooSmall);
    let mut buf = vec![0u64; len];
    assert_eq!(unsafe { eppo_spectrum(g, 0, buf.as_mut_ptr(), buf.len(), &mut len) }, EppoStatus::Ok);
    buf
}

#[test]
fn a5_from_catalog() {
    let g = load("catalog:A5");
    let mut order = 0;
    assert_eq!(unsafe { eppo_group_order(g, &mut order) }, EppoStatus::Ok);
    assert_eq!(order, 60);
    let mut degree = 0;
    assert_eq!(unsafe { eppo_group_degree(g, &mut degree) }, EppoStatus::Ok);
    assert_eq!(degree, 5);
    let mut verdict = EppoVerdict::NotEppo;
    let mut witness = 99;
    assert_eq!(unsafe { eppo_is_eppo(g, 0, 0, 0, &mut verdict, &mut witness) }, EppoStatus::Ok);
    assert_eq!((verdict, witness), (EppoVerdict::Eppo, 0));
    assert_eq!(spectrum(g), [1, 2, 3, 5]);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { eppo_classify(g, 0, 0, 0, &mut report) }, EppoStatus::Ok);
    let text = unsafe { CStr::from_ptr(report) }.to_string_lossy().into_owned();
    assert!(text.contains("classification.verdict: a5-recognized"), "{text}");
    unsafe {
        eppo_string_free(report);
        eppo_group_free(g);
    }
}

#[test]
fn text_groups_and_witnesses() {
    let text = CString::new("degree 6\n(1 2 3 4 5 6)\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { eppo_group_from_text(text.as_ptr(), &mut g) }, EppoStatus::Ok);
    let mut verdict = EppoVerdict::Eppo;
    let mut witness = 0;
    assert_eq!(unsafe { eppo_is_eppo(g, 0, 0, 0, &mut verdict, &mut witness) }, EppoStatus::Ok);
    assert_eq!((verdict, witness), (EppoVerdict::NotEppo, 6));
    assert_eq!(spectrum(g), [1, 2, 3, 6]);
    unsafe { eppo_group_free(g) };

    let g = load("metacyclic p=7 a=1 q=3 b=1");
    assert_eq!(spectrum(g), [1, 3, 7]);
    unsafe { eppo_group_free(g) };
}

#[test]
fn sampling_and_thresholds() {
    let g = load("catalog:Sz32");
    let mut verdict = EppoVerdict::Eppo;
    assert_eq!(unsafe { eppo_is_eppo(g, 0, 0, 0, &mut verdict, ptr::null_mut()) }, EppoStatus::ThresholdExceeded);
    assert!(last_error().contains("threshold"));
    assert_eq!(unsafe { eppo_is_eppo(g, 0, 2000, 5, &mut verdict, ptr::null_mut()) }, EppoStatus::Ok);
    assert_eq!(verdict, EppoVerdict::SampledConsistent);
    let mut buf = [0u64; 16];
    let mut len = 0;
    assert_eq!(unsafe { eppo_spectrum_sampled(g, 2000, 5, buf.as_mut_ptr(), buf.len(), &mut len) }, EppoStatus::Ok);
    assert!(buf[..len].iter().all(|o| [1, 2, 4, 5, 25, 31, 41].contains(o)));
    unsafe { eppo_group_free(g) };
}

#[test]
fn errors() {
    let mut g = ptr::null_mut();
    let bad = CString::new("catalog:J1").unwrap();
    assert_eq!(unsafe { eppo_group_from_source(bad.as_ptr(), &mut g) }, EppoStatus::InvalidSource);
    assert!(g.is_null());
    assert!(last_error().contains("J1"));
    let bad = CString::new("degree 3\n(1 5)\n").unwrap();
    assert_eq!(unsafe { eppo_group_from_text(bad.as_ptr(), &mut g) }, EppoStatus::Parse);
    assert_eq!(unsafe { eppo_group_from_text(ptr::null(), &mut g) }, EppoStatus::NullPointer);
    let missing = CString::new("file:/nonexistent/group.txt").unwrap();
    assert_eq!(unsafe { eppo_group_from_source(missing.as_ptr(), &mut g) }, EppoStatus::Io);
    let mut order = 0;
    assert_eq!(unsafe { eppo_group_order(ptr::null(), &mut order) }, EppoStatus::NullPointer);
    unsafe { eppo_group_free(ptr::null_mut()) };
    unsafe { eppo_string_free(ptr::null_mut()) };
}

#[test]
fn extension_constraints() {
    let mut ok = false;
    let sz8 = CString::new("Sz(8)").unwrap();
    assert_eq!(unsafe { eppo_extension_constraint(sz8.as_ptr(), 12, &mut ok) }, EppoStatus::Ok);
    assert!(ok);
    assert_eq!(unsafe { eppo_extension_constraint(sz8.as_ptr(), 13, &mut ok) }, EppoStatus::Ok);
    assert!(!ok);
    assert_eq!(unsafe { eppo_extension_constraint(sz8.as_ptr(), 0, &mut ok) }, EppoStatus::InvalidArgument);
    let other = CString::new("PSL2(7)").unwrap();
    assert_eq!(unsafe { eppo_extension_constraint(other.as_ptr(), 4, &mut ok) }, EppoStatus::InvalidArgument);
    let version = unsafe { CStr::from_ptr(eppo_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/eppo.h")).unwrap();
    for name in [
        "typedef struct EppoGroup EppoGroup;",
        "EPPO_STATUS_BUFFER_TOO_SMALL = 8",
        "EPPO_VERDICT_SAMPLED_CONSISTENT = 2",
        "eppo_group_from_source(",
        "eppo_group_from_text(",
        "eppo_group_free(",
        "eppo_is_eppo(",
        "eppo_spectrum(",
        "eppo_spectrum_sampled(",
        "eppo_classify(",
        "eppo_string_free(",
        "eppo_extension_constraint(",
        "eppo_last_error_message(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
