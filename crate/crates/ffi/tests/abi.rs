use std::ffi::{CStr, CString};
use std::ptr;

use mcbrick_ffi::*;

fn from_g6(s: &str) -> *mut McGraph {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { mc_graph_from_graph6(text.as_ptr(), &mut g) }, McStatus::Ok);
    assert!(!g.is_null());
    g
}

fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<*mut McGraph, McStatus> {
    let flat: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    match unsafe { mc_graph_from_edges(n, flat.as_ptr(), edges.len(), &mut g) } {
        McStatus::Ok => Ok(g),
        s => Err(s),
    }
}

fn flag(f: unsafe extern "C" fn(*const McGraph, *mut bool) -> McStatus, g: *const McGraph) -> bool {
    let mut out = false;
    assert_eq!(unsafe { f(g, &mut out) }, McStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mc_last_error()) }.to_string_lossy().into_owned()
}

const K4: &[(u32, u32)] = &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const CBAR6: &[(u32, u32)] = &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];

#[test]
fn counts_and_graph6_round_trip() {
    let g = from_edges(4, K4).unwrap();
    let (mut n, mut m) = (0usize, 0usize);
    unsafe {
        assert_eq!(mc_graph_vertex_count(g, &mut n), McStatus::Ok);
        assert_eq!(mc_graph_edge_count(g, &mut m), McStatus::Ok);
    }
    assert_eq!((n, m), (4, 6));
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mc_graph_to_graph6(g, &mut s) }, McStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    assert_eq!(text, "C~");
    unsafe {
        mc_string_free(s);
        mc_graph_free(g);
    }
}

#[test]
fn predicates_on_landmarks() {
    let k4 = from_edges(4, K4).unwrap();
    let cbar6 = from_edges(6, CBAR6).unwrap();
    let petersen = from_g6("IheA@GUAo");
    let k33 = from_g6("EFz_");

    assert!(flag(mc_is_matching_covered, k4));
    assert!(flag(mc_is_brick, k4));
    assert!(!flag(mc_is_triladder, k4));

    assert!(flag(mc_is_brick, cbar6));
    assert!(flag(mc_is_triladder, cbar6));
    assert!(flag(mc_is_near_bipartite, cbar6));
    assert!(flag(mc_has_k4_decomposition, cbar6));

    assert!(flag(mc_is_brick, petersen));
    assert!(!flag(mc_is_near_bipartite, petersen));
    assert!(!flag(mc_has_k4_decomposition, petersen));

    assert!(flag(mc_is_matching_covered, k33));
    assert!(!flag(mc_is_brick, k33));
    assert!(flag(mc_is_brace, k33));

    for g in [k4, cbar6, petersen, k33] {
        unsafe { mc_graph_free(g) };
    }
}

#[test]
fn removable_edges_report_required_length() {
    let g = from_g6("IheA@GUAo");
    let mut len = 0usize;
    let status = unsafe { mc_removable_edges(g, ptr::null_mut(), 0, &mut len) };
    assert_eq!(status, McStatus::BufferTooSmall);
    assert_eq!(len, 15);
    let mut ids = vec![u32::MAX; len];
    assert_eq!(unsafe { mc_removable_edges(g, ids.as_mut_ptr(), ids.len(), &mut len) }, McStatus::Ok);
    assert_eq!(ids, (0..15).collect::<Vec<u32>>());
    unsafe { mc_graph_free(g) };
}

#[test]
fn removable_doubletons_of_cbar6() {
    let g = from_edges(6, CBAR6).unwrap();
    let mut len = 0usize;
    let mut pairs = vec![0u32; 2 * 8];
    assert_eq!(unsafe { mc_removable_doubletons(g, pairs.as_mut_ptr(), 8, &mut len) }, McStatus::Ok);
    assert!(len > 0);
    for p in pairs[..2 * len].chunks(2) {
        assert_ne!(p[0], p[1]);
        assert!(p[0] < 9 && p[1] < 9);
    }
    let mut short = 0usize;
    let status = unsafe { mc_removable_doubletons(g, pairs.as_mut_ptr(), len - 1, &mut short) };
    assert_eq!(status, McStatus::BufferTooSmall);
    assert_eq!(short, len);
    unsafe { mc_graph_free(g) };
}

#[test]
fn not_matching_covered_is_reported() {
    // a path on four vertices has a perfect matching but is not matching covered
    let g = from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!flag(mc_is_matching_covered, g));
    let mut len = 0usize;
    let status = unsafe { mc_removable_edges(g, ptr::null_mut(), 0, &mut len) };
    assert_eq!(status, McStatus::NotMatchingCovered);
    assert!(!last_error().is_empty());
    unsafe { mc_graph_free(g) };
}

#[test]
fn analyze_json_is_parseable() {
    let g = from_edges(6, CBAR6).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mc_analyze_json(g, &mut s) }, McStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["brick"], true);
    unsafe {
        mc_string_free(s);
        mc_graph_free(g);
    }
}

#[test]
fn errors_and_null_pointers() {
    assert_eq!(from_edges(3, &[(0, 0)]).unwrap_err(), McStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(from_edges(2, &[(0, 5)]).unwrap_err(), McStatus::InvalidArgument);
    assert_eq!(from_edges(65, &[]).unwrap_err(), McStatus::TooLarge);

    let bad = CString::new("not graph6 \u{7f}").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { mc_graph_from_graph6(bad.as_ptr(), &mut g) }, McStatus::Parse);
    assert_eq!(unsafe { mc_graph_from_graph6(ptr::null(), &mut g) }, McStatus::NullPointer);

    let mut out = false;
    assert_eq!(unsafe { mc_is_brick(ptr::null(), &mut out) }, McStatus::NullPointer);
    let k4 = from_edges(4, K4).unwrap();
    assert_eq!(unsafe { mc_is_brick(k4, ptr::null_mut()) }, McStatus::NullPointer);
    unsafe {
        mc_graph_free(k4);
        mc_graph_free(ptr::null_mut());
        mc_string_free(ptr::null_mut());
    }
}

#[test]
fn status_messages_are_static() {
    for s in [McStatus::Ok, McStatus::Parse, McStatus::BufferTooSmall, McStatus::Panic] {
        let msg = unsafe { CStr::from_ptr(mc_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}
