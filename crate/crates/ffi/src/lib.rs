//! C ABI for `permlip`.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`PermlipStatus`]; results come back
//!   through out-pointers that are written only on success.
//! * After a non-OK status, [`permlip_last_error`] describes the failure.
//!   The message belongs to the library and stays valid until the next call
//!   on the same thread.
//! * Counts are exact decimal strings because they outgrow 64 bits. Strings
//!   returned through out-pointers must be released with
//!   [`permlip_string_free`].
//! * Growth profiles are opaque [`PermlipProfile`] handles released with
//!   [`permlip_profile_free`].
//! * Panics never cross the boundary; they surface as
//!   [`PermlipStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use permlip::asymptotics::AsymptoticEstimate;
use permlip::engine::{self, Engine};
use permlip::perm::{avoids_132, in_class};
use permlip::probe::{build_profile, GrowthProfile};
use permlip::{BruteForce, ConstraintSpec, Error, Permutation};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermlipStatus {
    Ok = 0,
    /// Bad `n`, `m`, engine, tolerance or permutation.
    InvalidArgument = 1,
    /// Brute force was asked for `n` above the enumeration ceiling.
    CeilingExceeded = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// The requested value does not exist (for example no growth estimate).
    Unavailable = 4,
    /// A numerical routine failed (no dominant root, overflow, ...).
    Numeric = 5,
    /// Internal error; the library caught a panic.
    Panic = 6,
}

/// Counting engine selector, passed as its integer value.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermlipEngine {
    Brute = 0,
    Closed = 1,
    Recurrence = 2,
    Gf = 3,
}

/// Opaque growth profile for one adjacency bound.
pub struct PermlipProfile {
    inner: GrowthProfile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let msg = CString::new(bytes).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> PermlipStatus {
    match e {
        Error::CeilingExceeded { .. } => PermlipStatus::CeilingExceeded,
        Error::NoDominantRoot(_)
        | Error::InvalidRecurrence(_)
        | Error::InvalidGf(_)
        | Error::Overflow(_) => PermlipStatus::Numeric,
        _ => PermlipStatus::InvalidArgument,
    }
}

struct Failure(PermlipStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PermlipStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PermlipStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            PermlipStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            PermlipStatus::Panic
        }
    }
}

fn engine_of(code: u32) -> Result<Engine, Failure> {
    match code {
        0 => Ok(Engine::Brute),
        1 => Ok(Engine::Closed),
        2 => Ok(Engine::Recurrence),
        3 => Ok(Engine::Gf),
        _ => Err(Failure(
            PermlipStatus::InvalidArgument,
            format!("unknown engine code {code}"),
        )),
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// # Safety
/// `word` must point to `len` readable `u32`s (or be null with `len == 0`).
unsafe fn permutation_from(word: *const u32, len: usize) -> Result<Permutation, Failure> {
    let slice = if len == 0 {
        &[][..]
    } else if word.is_null() {
        return Err(null("word"));
    } else {
        std::slice::from_raw_parts(word, len)
    };
    Ok(Permutation::new(slice.to_vec())?)
}

/// Message for the last failed call on this thread; empty after success.
/// Never null. Do not free.
#[no_mangle]
pub extern "C" fn permlip_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn permlip_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn permlip_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Writes the decimal string of `A_n^(m)` computed by `engine` (a
/// [`PermlipEngine`] value) to `*out`. Brute force honours the
/// `PERMLIP_CEILING` environment variable.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn permlip_count(
    n: usize,
    m: u32,
    engine: u32,
    out: *mut *mut c_char,
) -> PermlipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let engine = engine_of(engine)?;
        let bf = BruteForce::from_env()?;
        let value = engine::count(engine, n, m, &bf)?;
        *out = into_c_string(value.to_string());
        Ok(())
    })
}

/// Sets `*out` to whether the permutation `word[0..len]` (one-line
/// notation over `1..=len`) avoids 132.
///
/// # Safety
/// `word` must point to `len` readable `u32`s; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_avoids_132(
    word: *const u32,
    len: usize,
    out: *mut bool,
) -> PermlipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = permutation_from(word, len)?;
        *out = avoids_132(&p);
        Ok(())
    })
}

/// Sets `*out` to whether `word[0..len]` avoids 132 and has every pair of
/// adjacent entries differing by at most `m`.
///
/// # Safety
/// `word` must point to `len` readable `u32`s; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_in_class(
    word: *const u32,
    len: usize,
    m: u32,
    out: *mut bool,
) -> PermlipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = ConstraintSpec::new(m)?;
        let p = permutation_from(word, len)?;
        *out = in_class(&p, c);
        Ok(())
    })
}

/// Dominant singularity `rho`, growth constant `alpha = 1/rho` and
/// amplitude `C` for `m = 2`, computed to `tolerance` (in `(0, 1e-6)`).
/// Any output pointer may be null to skip it.
///
/// # Safety
/// Non-null pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_asymptotics(
    tolerance: f64,
    rho: *mut f64,
    alpha: *mut f64,
    amplitude: *mut f64,
) -> PermlipStatus {
    guard(|| {
        let est = AsymptoticEstimate::compute(tolerance)?;
        for (dst, v) in [
            (rho, est.rho),
            (alpha, est.alpha),
            (amplitude, est.amplitude),
        ] {
            if !dst.is_null() {
                *dst = v;
            }
        }
        Ok(())
    })
}

/// Builds the growth profile of `A^(m)` for `n = 1..=n_max` by brute force
/// and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_build(
    m: u32,
    n_max: usize,
    out: *mut *mut PermlipProfile,
) -> PermlipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let bf = BruteForce::from_env()?;
        let inner = build_profile(m, n_max, &bf)?;
        *out = Box::into_raw(Box::new(PermlipProfile { inner }));
        Ok(())
    })
}

/// Releases a profile. Null is a no-op.
///
/// # Safety
/// `profile` must come from [`permlip_profile_build`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_free(profile: *mut PermlipProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Number of terms in the profile (its `n_max`), or 0 for null.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_len(profile: *const PermlipProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.inner.terms.len())
}

/// Writes the decimal string of `A_n^(m)`, `1 <= n <= len`, to `*out`.
///
/// # Safety
/// `profile` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_term(
    profile: *const PermlipProfile,
    n: usize,
    out: *mut *mut c_char,
) -> PermlipStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let terms = &p.inner.terms;
        let term = n.checked_sub(1).and_then(|i| terms.get(i)).ok_or_else(|| {
            Failure(
                PermlipStatus::InvalidArgument,
                format!("n = {n} outside 1..={}", terms.len()),
            )
        })?;
        *out = into_c_string(term.to_string());
        Ok(())
    })
}

/// Growth-constant estimate. `*low_confidence` (if non-null) is set to true
/// when the estimate is a ratio of consecutive terms rather than the root
/// of a fitted recurrence. Returns `UNAVAILABLE` when there is no estimate.
///
/// # Safety
/// `profile` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_alpha(
    profile: *const PermlipProfile,
    alpha: *mut f64,
    low_confidence: *mut bool,
) -> PermlipStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if alpha.is_null() {
            return Err(null("alpha"));
        }
        let estimate = p
            .inner
            .alpha_estimate
            .ok_or_else(|| Failure(PermlipStatus::Unavailable, "no growth estimate".into()))?;
        *alpha = estimate;
        if !low_confidence.is_null() {
            *low_confidence = p.inner.low_confidence;
        }
        Ok(())
    })
}

/// Writes the profile as JSON to `*out` (counts as decimal strings).
///
/// # Safety
/// `profile` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permlip_profile_to_json(
    profile: *const PermlipProfile,
    out: *mut *mut c_char,
) -> PermlipStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(p.inner.to_json());
        Ok(())
    })
}
