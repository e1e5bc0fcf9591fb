use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use contracta_ffi::*;

fn last_error() -> String {
    let p = contracta_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn from_g6(s: &str) -> *mut ContractaGraph {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { contracta_graph_from_graph6(text.as_ptr(), &mut g) };
    assert_eq!(status, ContractaStatus::Ok, "{}", last_error());
    g
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { contracta_string_free(p) };
    s
}

fn wheel(n: usize) -> Vec<usize> {
    let rim = n - 1;
    let mut flat = Vec::new();
    for i in 0..rim {
        flat.extend([i, (i + 1) % rim, i, rim]);
    }
    flat
}

#[test]
fn parse_and_query() {
    // Petersen graph.
    let g = from_g6("IheA@GUAo");
    unsafe {
        assert_eq!(contracta_graph_order(g), 10);
        assert_eq!(contracta_graph_size(g), 15);
        let mut k = 0;
        assert_eq!(contracta_vertex_connectivity(g, &mut k), ContractaStatus::Ok);
        assert_eq!(k, 3);
        let mut json = ptr::null_mut();
        assert_eq!(contracta_classify_json(g, &mut json), ContractaStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["kappa"], 3);
        assert_eq!(v["nonEdgeCount"], 30);
        assert_eq!(v["contractible"].as_array().unwrap().len(), 0);
        contracta_graph_free(g);
    }
}

#[test]
fn edges_and_contractibility() {
    let flat = wheel(6);
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(contracta_graph_from_edges(6, flat.as_ptr(), flat.len() / 2, &mut g), ContractaStatus::Ok);
        let mut yes = true;
        // Rim vertices two apart: their common neighbors form a 3-cut with the hub.
        assert_eq!(contracta_is_contractible(g, 0, 2, &mut yes), ContractaStatus::Ok);
        assert!(!yes);
        assert_eq!(contracta_is_contractible(g, 0, 1, &mut yes), ContractaStatus::InvalidArgument);
        assert!(last_error().contains("not a non-edge"));
        contracta_graph_free(g);
    }
}

#[test]
fn canonical_strings_agree_across_relabelings() {
    let a = wheel(7);
    let b: Vec<usize> = a.iter().map(|&v| (v + 3) % 7).collect();
    unsafe {
        let (mut g, mut h) = (ptr::null_mut(), ptr::null_mut());
        contracta_graph_from_edges(7, a.as_ptr(), a.len() / 2, &mut g);
        contracta_graph_from_edges(7, b.as_ptr(), b.len() / 2, &mut h);
        let (mut s, mut t) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(contracta_canonical_graph6(g, &mut s), ContractaStatus::Ok);
        assert_eq!(contracta_canonical_graph6(h, &mut t), ContractaStatus::Ok);
        assert_eq!(take_string(s), take_string(t));
        let mut iso = false;
        assert_eq!(contracta_are_isomorphic(g, h, &mut iso), ContractaStatus::Ok);
        assert!(iso);
        contracta_graph_free(g);
        contracta_graph_free(h);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("D~").unwrap();
    unsafe {
        assert_eq!(contracta_graph_from_graph6(bad.as_ptr(), &mut g), ContractaStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().contains("parse"));

        assert_eq!(contracta_graph_from_graph6(ptr::null(), &mut g), ContractaStatus::NullPointer);
        let loops = [1usize, 1];
        assert_eq!(contracta_graph_from_edges(3, loops.as_ptr(), 1, &mut g), ContractaStatus::InvalidArgument);
        assert_eq!(contracta_graph_from_edges(3, ptr::null(), 2, &mut g), ContractaStatus::NullPointer);

        let invalid = [0xffu8, 0];
        let r = contracta_graph_from_graph6(invalid.as_ptr().cast(), &mut g);
        assert_eq!(r, ContractaStatus::InvalidUtf8);

        // A 4-cycle is only 2-connected.
        let c4 = [0usize, 1, 1, 2, 2, 3, 3, 0];
        contracta_graph_from_edges(4, c4.as_ptr(), 4, &mut g);
        let mut out = false;
        assert_eq!(contracta_is_contractible(g, 0, 2, &mut out), ContractaStatus::LowConnectivity);
        let mut k = 0;
        assert_eq!(contracta_vertex_connectivity(g, ptr::null_mut()), ContractaStatus::NullPointer);
        assert_eq!(contracta_vertex_connectivity(g, &mut k), ContractaStatus::Ok);
        assert_eq!(k, 2);
        contracta_graph_free(g);

        assert_eq!(contracta_graph_order(ptr::null()), 0);
        contracta_graph_free(ptr::null_mut());
        contracta_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(contracta_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
