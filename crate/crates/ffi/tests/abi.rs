use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use braid_gbase_ffi::*;

fn word(text: &str, strands: usize) -> *mut BgWord {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bg_word_parse(c.as_ptr(), strands, &mut out) }, BgStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bg_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn normal_form_through_handles() {
    unsafe {
        let w = word("1", 2);
        assert_eq!(bg_word_len(w), 1);
        let mut g = ptr::null_mut();
        assert_eq!(bg_process_word(w, &mut g), BgStatus::Ok);
        assert_eq!(bg_gbase_len(g), 6);
        let mut s = ptr::null_mut();
        assert_eq!(bg_gbase_format(g, &mut s), BgStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "(-1,0) (2,0) (-1,0) (2,1) (1,0) (-1,0)");

        let mut parsed = ptr::null_mut();
        assert_eq!(bg_gbase_parse(s, 2, &mut parsed), BgStatus::Ok);
        let mut same = false;
        assert_eq!(bg_gbase_equal(g, parsed, &mut same), BgStatus::Ok);
        assert!(same);

        bg_string_free(s);
        bg_gbase_free(parsed);
        bg_gbase_free(g);
        bg_word_free(w);
    }
}

#[test]
fn equality_queries() {
    unsafe {
        let (a, b, c) = (word("1 2 1", 3), word("2 1 2", 3), word("1 2", 3));
        let mut out = false;
        assert_eq!(bg_words_equal(a, b, &mut out), BgStatus::Ok);
        assert!(out);
        assert_eq!(bg_oracle_equal(a, c, 0, &mut out), BgStatus::Ok);
        assert!(!out);
        let inv = word("-1 -2 -1 2 1 2", 3);
        assert_eq!(bg_is_identity(inv, &mut out), BgStatus::Ok);
        assert!(out);
        let mut s = ptr::null_mut();
        assert_eq!(bg_word_format(a, &mut s), BgStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "1 2 1");
        bg_string_free(s);
        for h in [a, b, c, inv] {
            bg_word_free(h);
        }
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut w = ptr::null_mut();
        let bad = CString::new("1 x").unwrap();
        assert_eq!(bg_word_parse(bad.as_ptr(), 3, &mut w), BgStatus::MalformedWord);
        assert!(last_error().contains('x'));
        let high = CString::new("3").unwrap();
        assert_eq!(bg_word_parse(high.as_ptr(), 3, &mut w), BgStatus::MalformedWord);
        assert_eq!(bg_word_parse(high.as_ptr(), 0, &mut w), BgStatus::OutOfRange);
        assert_eq!(bg_word_parse(ptr::null(), 3, &mut w), BgStatus::NullPointer);
        assert!(w.is_null());

        let mut g = ptr::null_mut();
        let broken = CString::new("(-1,0) (1,0)").unwrap();
        assert_eq!(bg_gbase_parse(broken.as_ptr(), 1, &mut g), BgStatus::InvalidGBase);
        let junk = CString::new("(1,7)").unwrap();
        assert_eq!(bg_gbase_parse(junk.as_ptr(), 1, &mut g), BgStatus::MalformedGBase);

        let (a, b) = (word("1", 2), word("1", 3));
        let mut out = false;
        assert_eq!(bg_words_equal(a, b, &mut out), BgStatus::StrandMismatch);
        assert_eq!(bg_words_equal(a, a, ptr::null_mut()), BgStatus::NullPointer);
        let long = word(&"1 -2 ".repeat(20), 3);
        let e = word("", 3);
        assert_eq!(bg_oracle_equal(long, e, 10, &mut out), BgStatus::ResourceExceeded);
        for h in [a, b, long, e] {
            bg_word_free(h);
        }
        bg_word_free(ptr::null_mut());
        bg_gbase_free(ptr::null_mut());
        bg_string_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut w = ptr::null_mut();
        let bad = CString::new("q").unwrap();
        assert_eq!(bg_word_parse(bad.as_ptr(), 2, &mut w), BgStatus::MalformedWord);
    }
    std::thread::spawn(|| assert!(bg_last_error().is_null())).join().unwrap();
}

/// Compiles a small C program against the generated header and static library.
#[test]
fn c_program_links_against_header() {
    let Some(cc) = which_cc() else { return };
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = manifest.join("../../target").join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let lib = target.join("libbraid_gbase_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("braid-gbase-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "braid_gbase.h"
int main(void) {
    BgWord *a = NULL, *b = NULL;
    bool eq = false;
    if (bg_word_parse("1 2 1", 3, &a) != BG_STATUS_OK) return 10;
    if (bg_word_parse("2 1 2", 3, &b) != BG_STATUS_OK) return 11;
    if (bg_words_equal(a, b, &eq) != BG_STATUS_OK || !eq) return 12;
    BgWord *bad = NULL;
    if (bg_word_parse("4", 3, &bad) != BG_STATUS_MALFORMED_WORD) return 13;
    if (bg_last_error() == NULL) return 14;
    bg_word_free(a);
    bg_word_free(b);
    puts("ok");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("smoke");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
    std::fs::remove_dir_all(&dir).ok();
}

fn which_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
}
