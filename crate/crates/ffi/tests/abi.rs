use std::ffi::{CStr, CString};
use std::ptr;

use signdom_ffi::*;

fn graph_from_edge_list(text: &str) -> Result<*mut SdGraph, SdStatus> {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    match unsafe { sd_graph_from_edge_list(c.as_ptr(), &mut g) } {
        SdStatus::Ok => Ok(g),
        s => Err(s),
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sd_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn parse_and_inspect() {
    let g = graph_from_edge_list("0 1\n1 2\n2 0\n").unwrap();
    unsafe {
        assert_eq!(sd_graph_order(g), 3);
        assert_eq!(sd_graph_size(g), 3);
        assert!(sd_graph_is_connected(g));
        let mut p = SdDegreeProfile::default();
        assert_eq!(sd_graph_degree_profile(g, &mut p), SdStatus::Ok);
        assert_eq!((p.n, p.m, p.min_degree, p.max_degree, p.even_count), (3, 3, 2, 2, 3));

        let mut s = ptr::null_mut();
        assert_eq!(sd_graph_serialize(g, true, &mut s), SdStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        sd_string_free(s);
        sd_graph_free(g);
    }
}

#[test]
fn parse_errors_map_to_codes() {
    assert_eq!(graph_from_edge_list("0 1\n0 1"), Err(SdStatus::Validation));
    assert!(last_error().contains("duplicate"));
    assert_eq!(graph_from_edge_list("0 x"), Err(SdStatus::Parse));
    let dimacs = CString::new("p edge 2 1\ne 1 3").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sd_graph_from_dimacs(dimacs.as_ptr(), &mut g) }, SdStatus::Parse);
    assert!(g.is_null());
    assert_eq!(unsafe { sd_graph_from_edge_list(ptr::null(), &mut g) }, SdStatus::NullPointer);
}

#[test]
fn solve_sun_gadget() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_graph_sun(3, &mut g), SdStatus::Ok);
        let mut r = SdSolveResult::default();
        let mut witness = vec![0i8; 12];
        let status = sd_solve(g, 12, SdMode::Nonneg, SdAlgorithm::Bnb, 0, 1, &mut r, witness.as_mut_ptr());
        assert_eq!(status, SdStatus::Ok);
        assert_eq!(r.optimum, 0);
        assert_eq!(r.satisfied_count, 12);

        let (mut w, mut sat) = (0i64, 0usize);
        assert_eq!(
            sd_evaluate(g, witness.as_ptr(), 12, SdMode::Nonneg, &mut w, &mut sat),
            SdStatus::Ok
        );
        assert_eq!((w, sat), (0, 12));
        sd_graph_free(g);
    }
}

#[test]
fn solve_errors() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_graph_cycle(25, &mut g), SdStatus::Ok);
        let mut r = SdSolveResult::default();
        let s = sd_solve(g, 25, SdMode::Signed, SdAlgorithm::Brute, 0, 1, &mut r, ptr::null_mut());
        assert_eq!(s, SdStatus::BruteForceCap);
        let s = sd_solve(g, 0, SdMode::Signed, SdAlgorithm::Bnb, 0, 1, &mut r, ptr::null_mut());
        assert_eq!(s, SdStatus::KOutOfRange);
        let s = sd_solve(g, 25, SdMode::Signed, SdAlgorithm::Bnb, 0, 1, &mut r, ptr::null_mut());
        assert_eq!(s, SdStatus::Ok);
        assert_eq!(r.optimum, 9);
        let bad = [1i8, 0, 1];
        let (mut w, mut sat) = (0i64, 0usize);
        assert_eq!(sd_evaluate(g, bad.as_ptr(), 3, SdMode::Nonneg, &mut w, &mut sat), SdStatus::Parameter);
        sd_graph_free(g);
        assert_eq!(
            sd_solve(ptr::null(), 1, SdMode::Nonneg, SdAlgorithm::Auto, 0, 1, &mut r, ptr::null_mut()),
            SdStatus::NullPointer
        );
    }
}

#[test]
fn bounds_through_abi() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_graph_sun(2, &mut g), SdStatus::Ok);
        let mut b = SdBoundValue::default();
        assert_eq!(sd_bound(g, 8, SdBound::PriorDeltaceil, &mut b), SdStatus::Ok);
        assert_eq!((b.numerator, b.denominator, b.ceil), (-8, 7, -1));
        assert_eq!(sd_bound(g, 8, SdBound::Nn1, &mut b), SdStatus::Ok);
        assert_eq!((b.numerator, b.applicable), (0, true));
        assert_eq!(sd_bound(g, 8, SdBound::Regular, &mut b), SdStatus::Parameter);

        let mut json = ptr::null_mut();
        assert_eq!(sd_bound_report_json(g, 8, &mut json), SdStatus::Ok);
        let v: &str = CStr::from_ptr(json).to_str().unwrap();
        assert!(v.contains("\"bound.prior_halfn.raw\":\"-8\""));
        sd_string_free(json);
        sd_graph_free(g);
    }
}

#[test]
fn generators_through_abi() {
    unsafe {
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(sd_graph_gnp(10, 0.5, 42, &mut a), SdStatus::Ok);
        assert_eq!(sd_graph_gnp(10, 0.5, 42, &mut b), SdStatus::Ok);
        let (mut sa, mut sb) = (ptr::null_mut(), ptr::null_mut());
        sd_graph_serialize(a, false, &mut sa);
        sd_graph_serialize(b, false, &mut sb);
        assert_eq!(CStr::from_ptr(sa), CStr::from_ptr(sb));
        sd_string_free(sa);
        sd_string_free(sb);
        sd_graph_free(a);
        sd_graph_free(b);

        let offsets = [1usize, 4];
        let mut c = ptr::null_mut();
        assert_eq!(sd_graph_circulant(8, offsets.as_ptr(), 2, &mut c), SdStatus::Ok);
        assert_eq!(sd_graph_size(c), 12);
        sd_graph_free(c);
        assert_eq!(sd_graph_circulant(8, ptr::null(), 0, &mut c), SdStatus::Parameter);

        let pairs = [0usize, 1, 1, 2];
        assert_eq!(sd_graph_from_edges(4, pairs.as_ptr(), 2, &mut c), SdStatus::Ok);
        assert_eq!(sd_graph_order(c), 4);
        assert!(!sd_graph_is_connected(c));
        sd_graph_free(c);
        assert_eq!(sd_graph_sun(1, &mut c), SdStatus::Parameter);
        sd_graph_free(ptr::null_mut());
    }
}
