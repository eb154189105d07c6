use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;
use tga_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(s: *mut c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { tga_string_free(s) };
    v
}

fn last_error() -> String {
    let p = tga_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

struct Handle(*mut TgaGraph);

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { tga_graph_free(self.0) };
    }
}

fn parse(text: &str) -> Handle {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tga_graph_parse(c(text).as_ptr(), &mut g) }, TgaStatus::Ok);
    Handle(g)
}

const G_LOOPS: &str = "x1 x1\nx2 x2\nx3 x3\nx1 x4\nx2 x4\nx3 x4\n";

#[test]
fn graph_round_trip() {
    let g = parse(G_LOOPS);
    let mut n = 0usize;
    assert_eq!(unsafe { tga_graph_vertex_count(g.0, &mut n) }, TgaStatus::Ok);
    assert_eq!(n, 4);
    assert!(tga_last_error().is_null());

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tga_minimal_generators(g.0, &mut out) }, TgaStatus::Ok);
    let v = take(out);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn membership_and_decomposition() {
    let g = parse("a b\nb c\nc d\nd a\n");
    let mut member = true;
    let mut report = ptr::null_mut();
    let st = unsafe { tga_is_member(g.0, c("a=1,c=1").as_ptr(), &mut member, &mut report) };
    assert_eq!(st, TgaStatus::Ok);
    assert!(!member);
    assert_eq!(take(report)["certificate"]["kind"], "cone");

    let st = unsafe { tga_is_member(g.0, c("a=1,b=1").as_ptr(), &mut member, ptr::null_mut()) };
    assert_eq!(st, TgaStatus::Ok);
    assert!(member);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tga_decompose(g.0, c("a=1,b=1,c=1,d=1").as_ptr(), &mut out) }, TgaStatus::Ok);
    assert_eq!(take(out)["edges"], 2);

    assert_eq!(unsafe { tga_decompose(g.0, c("a=1,c=1").as_ptr(), &mut out) }, TgaStatus::Invalid);
    assert!(last_error().contains("not in the normalized semigroup"));
}

#[test]
fn word_equality() {
    let g = parse(G_LOOPS);
    let mut equal = false;
    let mut report = ptr::null_mut();
    let st = unsafe {
        tga_equal_words(g.0, c("e:x1-x4 p:(x2|x3)").as_ptr(), c("e:x2-x4 p:(x1|x3)").as_ptr(), &mut equal, &mut report)
    };
    assert_eq!(st, TgaStatus::Ok);
    assert!(equal);
    assert_eq!(take(report)["moves"], 1);

    let st = unsafe { tga_equal_words(g.0, c("e:x1-x4").as_ptr(), c("e:x2-x4").as_ptr(), &mut equal, ptr::null_mut()) };
    assert_eq!(st, TgaStatus::Ok);
    assert!(!equal);
}

#[test]
fn admissible_subgraphs() {
    let g = parse("a b\nb c\nc d\nd a\n");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tga_enumerate_admissible(g.0, 20, &mut out) }, TgaStatus::Ok);
    assert_eq!(take(out)["count"], 10);
    assert_eq!(unsafe { tga_enumerate_admissible(g.0, 3, &mut out) }, TgaStatus::Invalid);
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tga_graph_parse(ptr::null(), &mut g) }, TgaStatus::Null);
    assert!(last_error().contains("null"));
    assert_eq!(unsafe { tga_graph_parse(c("a b c d e").as_ptr(), &mut g) }, TgaStatus::Parse);
    let bad = [0xffu8, 0xfe, 0];
    assert_eq!(unsafe { tga_graph_parse(bad.as_ptr().cast(), &mut g) }, TgaStatus::Utf8);

    let h = parse("a b\n");
    let mut n = 0usize;
    assert_eq!(unsafe { tga_graph_vertex_count(ptr::null(), &mut n) }, TgaStatus::Null);
    assert_eq!(unsafe { tga_graph_vertex_count(h.0, ptr::null_mut()) }, TgaStatus::Null);
    let mut member = false;
    let st = unsafe { tga_is_member(h.0, c("q=1").as_ptr(), &mut member, ptr::null_mut()) };
    assert_eq!(st, TgaStatus::Parse);
    assert!(last_error().contains('q'));

    unsafe {
        tga_graph_free(ptr::null_mut());
        tga_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = include_str!("../include/tga.h");
    for name in [
        "tga_graph_parse",
        "tga_graph_free",
        "tga_graph_vertex_count",
        "tga_minimal_generators",
        "tga_is_member",
        "tga_decompose",
        "tga_equal_words",
        "tga_enumerate_admissible",
        "tga_string_free",
        "tga_last_error",
        "TGA_STATUS_INTERNAL = 5",
        "typedef struct TgaGraph TgaGraph;",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
