//! C ABI for braidknot.
//!
//! Braids are opaque `BraidknotBraid` handles. Every fallible call returns a
//! `BraidknotStatus`; on failure `braidknot_last_error` describes the cause.
//! Strings handed out by the library must be released with
//! `braidknot_string_free`, handles with `braidknot_braid_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use braidknot::braid::BraidWord;
use braidknot::families::{FamilySpec, Validation};
use braidknot::invariants::{self, fingerprint, InvariantError, JonesError, Level, Limits};
use braidknot::verify::{self, parse_params, run_suite, RunOptions, SuiteId, VerifyError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidknotStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ResourceLimit = 5,
    /// A suite ran but some case had an unexpected verdict.
    Mismatch = 6,
    Internal = 7,
}

/// Opaque braid word.
pub struct BraidknotBraid {
    word: BraidWord,
}

const ERROR_CAPACITY: usize = 512;

thread_local! {
    // fixed buffer so pointers from braidknot_last_error never dangle
    static LAST_ERROR: RefCell<[u8; ERROR_CAPACITY]> = const { RefCell::new([0; ERROR_CAPACITY]) };
}

struct Failure(BraidknotStatus, String);

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let status = match e {
            InvariantError::Jones(
                JonesError::TooManyStrands { .. } | JonesError::TooManyCrossings { .. },
            ) => BraidknotStatus::ResourceLimit,
            InvariantError::Jones(JonesError::SupportCheck { .. })
            | InvariantError::Alexander(_) => BraidknotStatus::Internal,
            _ => BraidknotStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Invariant(e) => e.into(),
            other => Failure(BraidknotStatus::InvalidArgument, other.to_string()),
        }
    }
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut buf = e.borrow_mut();
        let mut len = msg.len().min(ERROR_CAPACITY - 1);
        while !msg.is_char_boundary(len) {
            len -= 1;
        }
        buf[..len].copy_from_slice(&msg.as_bytes()[..len]);
        for b in &mut buf[..len] {
            if *b == 0 {
                *b = b' ';
            }
        }
        buf[len] = 0;
    });
}

fn guard(f: impl FnOnce() -> Result<BraidknotStatus, Failure>) -> BraidknotStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BraidknotStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            BraidknotStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BraidknotStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn braid_ref<'a>(p: *const BraidknotBraid) -> Result<&'a BraidWord, Failure> {
    p.as_ref()
        .map(|b| &b.word)
        .ok_or_else(|| Failure(BraidknotStatus::NullPointer, "null braid handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            BraidknotStatus::NullPointer,
            "null output pointer".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c =
        CString::new(s).map_err(|_| Failure(BraidknotStatus::Internal, "NUL in output".into()))?;
    write_out(out, c.into_raw())
}

fn limits() -> Result<Limits, Failure> {
    Limits::from_env().map_err(|e| Failure(BraidknotStatus::InvalidArgument, e.to_string()))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(BraidknotStatus::Internal, e.to_string()))
}

/// Parses `n: e1 e2 ...` into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_parse(
    text: *const c_char,
    out: *mut *mut BraidknotBraid,
) -> BraidknotStatus {
    guard(|| {
        let word = BraidWord::parse(read_str(text)?)
            .map_err(|e| Failure(BraidknotStatus::Parse, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(BraidknotBraid { word })))?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Builds a family braid from a spec such as `ttk 8 3 7 -1` or
/// `klink 3,2 2,1`. `relaxed` nonzero skips the families' standing
/// hypotheses.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_build(
    spec: *const c_char,
    relaxed: i32,
    out: *mut *mut BraidknotBraid,
) -> BraidknotStatus {
    guard(|| {
        let family = FamilySpec::parse(read_str(spec)?)
            .map_err(|e| Failure(BraidknotStatus::Parse, e.to_string()))?;
        let mode = if relaxed != 0 {
            Validation::Relaxed
        } else {
            Validation::Strict
        };
        let word = family
            .braid(mode)
            .map_err(|e| Failure(BraidknotStatus::InvalidArgument, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(BraidknotBraid { word })))?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `braid` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_free(braid: *mut BraidknotBraid) {
    if !braid.is_null() {
        drop(Box::from_raw(braid));
    }
}

/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_strands(
    braid: *const BraidknotBraid,
    out: *mut usize,
) -> BraidknotStatus {
    guard(|| {
        write_out(out, braid_ref(braid)?.strands())?;
        Ok(BraidknotStatus::Ok)
    })
}

/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_components(
    braid: *const BraidknotBraid,
    out: *mut usize,
) -> BraidknotStatus {
    guard(|| {
        write_out(out, braid_ref(braid)?.component_count())?;
        Ok(BraidknotStatus::Ok)
    })
}

/// The word in `n: e1 e2 ...` form.
///
/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_braid_to_string(
    braid: *const BraidknotBraid,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        write_string(out, braid_ref(braid)?.to_string())?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Normalized Alexander polynomial, rendered as text.
///
/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_alexander(
    braid: *const BraidknotBraid,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        let a = invariants::alexander(braid_ref(braid)?).map_err(InvariantError::from)?;
        write_string(out, a.to_string())?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Jones polynomial, rendered as text. Subject to the environment limits.
///
/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_jones(
    braid: *const BraidknotBraid,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        let v = invariants::jones(braid_ref(braid)?, &limits()?).map_err(InvariantError::from)?;
        write_string(out, v.to_string())?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Invariant fingerprint as JSON. `full` nonzero includes Jones when within
/// limits.
///
/// # Safety
/// `braid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_fingerprint_json(
    braid: *const BraidknotBraid,
    full: i32,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        let level = if full != 0 {
            Level::Full
        } else {
            Level::AlexanderOnly
        };
        let f = fingerprint(braid_ref(braid)?, level, &limits()?)?;
        write_string(out, json(&f)?)?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Compares two closures; the verdict is written as JSON.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_check_equivalent(
    a: *const BraidknotBraid,
    b: *const BraidknotBraid,
    full: i32,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        let level = if full != 0 {
            Level::Full
        } else {
            Level::AlexanderOnly
        };
        let v = verify::check_equivalent(braid_ref(a)?, braid_ref(b)?, level, &limits()?);
        write_string(out, json(&v)?)?;
        Ok(BraidknotStatus::Ok)
    })
}

/// Runs a suite and writes its report as JSON. `params` may be null for the
/// suite defaults, or hold tuples like `"5,2,1;7,3,1"`. Returns
/// `Mismatch` (with the report written) when a case had an unexpected
/// verdict.
///
/// # Safety
/// `suite` must be a NUL-terminated string, `params` null or one, and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braidknot_verify_suite(
    suite: *const c_char,
    params: *const c_char,
    out: *mut *mut c_char,
) -> BraidknotStatus {
    guard(|| {
        let id: SuiteId = read_str(suite)?.parse()?;
        let params = if params.is_null() {
            Vec::new()
        } else {
            parse_params(read_str(params)?)?
        };
        let opts = RunOptions {
            limits: limits()?,
            timings: false,
        };
        let report = run_suite(id, &params, &opts)?;
        write_string(out, json(&report)?)?;
        Ok(if report.all_expected() {
            BraidknotStatus::Ok
        } else {
            set_error("a suite case returned an unexpected verdict");
            BraidknotStatus::Mismatch
        })
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn braidknot_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string
/// after a successful call. The pointer stays valid for the thread's
/// lifetime; its contents change with each call. Messages are truncated to
/// 511 bytes.
#[no_mangle]
pub extern "C" fn braidknot_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr() as *const c_char)
}
