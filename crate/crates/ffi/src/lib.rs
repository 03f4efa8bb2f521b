//! C ABI for the braid word problem solver.
//!
//! Words and g-bases cross the boundary as opaque handles. Every fallible
//! call returns a [`BgStatus`]; on failure a message for the calling thread
//! can be read with [`bg_last_error`]. Strings returned by the library are
//! released with [`bg_string_free`], handles with their own `_free` call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use braid_gbase::{ArtinOracle, BraidWord, Error, GBaseWord};

/// Opaque braid word.
pub struct BgWord(BraidWord);

/// Opaque g-base link list.
pub struct BgGBase(GBaseWord);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedWord = 3,
    MalformedGBase = 4,
    InvalidGBase = 5,
    OutOfRange = 6,
    StrandMismatch = 7,
    ResourceExceeded = 8,
    Internal = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> BgStatus {
    match e {
        Error::MalformedWord { .. } => BgStatus::MalformedWord,
        Error::MalformedGBase { .. } => BgStatus::MalformedGBase,
        Error::InvalidGBase(_) => BgStatus::InvalidGBase,
        Error::StrandCount(_) | Error::GeneratorOutOfRange { .. } | Error::FreeGeneratorOutOfRange { .. } => {
            BgStatus::OutOfRange
        }
        Error::StrandMismatch { .. } => BgStatus::StrandMismatch,
        Error::ResourceExceeded { .. } => BgStatus::ResourceExceeded,
        Error::Internal(_) => BgStatus::Internal,
    }
}

struct Failure(BgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `body`, turning errors and panics into a status plus message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BgStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BgStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside braid-gbase".into());
            BgStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(BgStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BgStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_word_parse(text: *const c_char, strands: usize, out: *mut *mut BgWord) -> BgStatus {
    guard(|| {
        let w = BraidWord::parse(read_text(text, "word text")?, strands)?;
        write_out(out, Box::into_raw(Box::new(BgWord(w))))
    })
}

/// # Safety
/// `word` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bg_word_free(word: *mut BgWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_word_format(word: *const BgWord, out: *mut *mut c_char) -> BgStatus {
    guard(|| {
        let w = borrow(word, "word")?;
        write_out(out, into_c_string(w.0.to_string()))
    })
}

/// Number of letters, or 0 for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bg_word_len(word: *const BgWord) -> usize {
    word.as_ref().map_or(0, |w| w.0.len())
}

/// Acts with `word` on the standard g-base and returns the reduced list.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_process_word(word: *const BgWord, out: *mut *mut BgGBase) -> BgStatus {
    guard(|| {
        let g = braid_gbase::normal_form(&borrow(word, "word")?.0)?;
        write_out(out, Box::into_raw(Box::new(BgGBase(g))))
    })
}

/// Parses a link list such as `"(-1,0) (1,0) (-1,0)"` and checks its structure.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_gbase_parse(text: *const c_char, strands: usize, out: *mut *mut BgGBase) -> BgStatus {
    guard(|| {
        let g = GBaseWord::parse(read_text(text, "g-base text")?, strands)?;
        write_out(out, Box::into_raw(Box::new(BgGBase(g))))
    })
}

/// # Safety
/// `gbase` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bg_gbase_free(gbase: *mut BgGBase) {
    if !gbase.is_null() {
        drop(Box::from_raw(gbase));
    }
}

/// # Safety
/// `gbase` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_gbase_format(gbase: *const BgGBase, out: *mut *mut c_char) -> BgStatus {
    guard(|| {
        let g = borrow(gbase, "g-base")?;
        write_out(out, into_c_string(g.0.to_string()))
    })
}

/// Number of links, or 0 for NULL.
///
/// # Safety
/// `gbase` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bg_gbase_len(gbase: *const BgGBase) -> usize {
    gbase.as_ref().map_or(0, |g| g.0.len())
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_gbase_equal(a: *const BgGBase, b: *const BgGBase, out: *mut bool) -> BgStatus {
    guard(|| {
        let (a, b) = (borrow(a, "first g-base")?, borrow(b, "second g-base")?);
        write_out(out, a.0 == b.0)
    })
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_words_equal(a: *const BgWord, b: *const BgWord, out: *mut bool) -> BgStatus {
    guard(|| {
        let equal = braid_gbase::words_equal(&borrow(a, "first word")?.0, &borrow(b, "second word")?.0)?;
        write_out(out, equal)
    })
}

/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_is_identity(word: *const BgWord, out: *mut bool) -> BgStatus {
    guard(|| {
        let identity = braid_gbase::is_identity(&borrow(word, "word")?.0)?;
        write_out(out, identity)
    })
}

/// Equality through the Artin action. A `syllable_limit` of 0 selects the default.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_oracle_equal(
    a: *const BgWord,
    b: *const BgWord,
    syllable_limit: usize,
    out: *mut bool,
) -> BgStatus {
    guard(|| {
        let oracle = match syllable_limit {
            0 => ArtinOracle::default(),
            limit => ArtinOracle::new(limit),
        };
        let equal = oracle.equal(&borrow(a, "first word")?.0, &borrow(b, "second word")?.0)?;
        write_out(out, equal)
    })
}
