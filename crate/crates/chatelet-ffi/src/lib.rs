//! C ABI over the chatelet library: opaque polynomial handles, status
//! codes, and string-based big-integer arguments. All returned strings
//! must be released with `chatelet_string_free`.

use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use chatelet::constructor::enumerate_family;
use chatelet::harness::solution_jsonl_line;
use chatelet::oracle::{is_sum_two_squares, Obstruction};
use chatelet::ring::CubicPoly;
use chatelet::transfer::certify_transfer;
use chatelet::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ChateletStatus {
    Ok = 0,
    /// The cubic has an integer root.
    Reducible = 1,
    /// One of the parity conditions fails.
    ParityViolation = 2,
    /// Arguments violate a precondition (null pointer, bad number, ...).
    InvalidArgument = 3,
    /// Factorization budget exhausted.
    EffortExceeded = 4,
    /// Internal invariant failure.
    Internal = 5,
}

/// Opaque handle to a validated cubic polynomial.
pub struct ChateletPoly {
    inner: CubicPoly,
}

fn status_of(err: &Error) -> ChateletStatus {
    match err {
        Error::Reducible(_) => ChateletStatus::Reducible,
        Error::ParityViolation(_) => ChateletStatus::ParityViolation,
        Error::EffortExceeded { .. } | Error::EffortExceededAt(_) => ChateletStatus::EffortExceeded,
        Error::InvalidArgument(_) => ChateletStatus::InvalidArgument,
        _ => ChateletStatus::Internal,
    }
}

unsafe fn parse_bigint(ptr: *const c_char) -> Option<BigInt> {
    if ptr.is_null() {
        return None;
    }
    let s = CStr::from_ptr(ptr).to_str().ok()?;
    BigInt::from_str(s.trim()).ok()
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Validates the monic cubic x³ + a2·x² + a1·x + a0 (including the parity
/// conditions when `relaxed` is 0) and returns an opaque handle through
/// `out`. The handle must be released with `chatelet_poly_free`.
#[no_mangle]
pub unsafe extern "C" fn chatelet_poly_new(
    a2: *const c_char,
    a1: *const c_char,
    a0: *const c_char,
    relaxed: c_int,
    out: *mut *mut ChateletPoly,
) -> ChateletStatus {
    if out.is_null() {
        return ChateletStatus::InvalidArgument;
    }
    let (Some(a2), Some(a1), Some(a0)) = (parse_bigint(a2), parse_bigint(a1), parse_bigint(a0))
    else {
        return ChateletStatus::InvalidArgument;
    };
    let result = if relaxed != 0 {
        CubicPoly::new_relaxed(a2, a1, a0)
    } else {
        CubicPoly::new(a2, a1, a0)
    };
    match result {
        Ok(p) => {
            *out = Box::into_raw(Box::new(ChateletPoly { inner: p }));
            ChateletStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a polynomial handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn chatelet_poly_free(poly: *mut ChateletPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Tests whether the decimal integer `n` is a sum of two squares.
/// On success sets `member`, and fills `detail` with either the witness
/// "a,b" (a² + b² = n) or the obstruction ("negative" or "p^e").
#[no_mangle]
pub unsafe extern "C" fn chatelet_two_squares(
    n: *const c_char,
    member: *mut c_int,
    detail: *mut *mut c_char,
) -> ChateletStatus {
    if member.is_null() || detail.is_null() {
        return ChateletStatus::InvalidArgument;
    }
    let Some(n) = parse_bigint(n) else {
        return ChateletStatus::InvalidArgument;
    };
    match is_sum_two_squares(&n) {
        Ok(cert) => {
            *member = cert.member as c_int;
            let text = if let Some(w) = cert.witness {
                format!("{},{}", w.re, w.im)
            } else {
                match cert.obstruction {
                    Some(Obstruction::Negative) => "negative".to_string(),
                    Some(Obstruction::Prime { p, exp }) => format!("{p}^{exp}"),
                    None => String::new(),
                }
            };
            *detail = to_c_string(text);
            ChateletStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Enumerates the solution family for the window (X, c = c_num/c_den) and
/// returns it as JSON-lines (one certified solution per line, the same
/// schema the CLI emits). `out` must be freed with `chatelet_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chatelet_enumerate(
    poly: *const ChateletPoly,
    x: *const c_char,
    c_num: *const c_char,
    c_den: *const c_char,
    out: *mut *mut c_char,
) -> ChateletStatus {
    if poly.is_null() || out.is_null() {
        return ChateletStatus::InvalidArgument;
    }
    let (Some(x), Some(num), Some(den)) = (parse_bigint(x), parse_bigint(c_num), parse_bigint(c_den))
    else {
        return ChateletStatus::InvalidArgument;
    };
    if den == BigInt::from(0) {
        return ChateletStatus::InvalidArgument;
    }
    let c = BigRational::new(num, den);
    if c <= BigRational::new(BigInt::from(0), BigInt::one()) {
        return ChateletStatus::InvalidArgument;
    }
    let p = &(*poly).inner;
    let solutions = match enumerate_family(p, &x, &c) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let mut text = String::new();
    for s in &solutions {
        let uv = match certify_transfer(p, s) {
            Ok(uv) => uv,
            Err(e) => return status_of(&e),
        };
        text.push_str(&solution_jsonl_line(s, &uv));
        text.push('\n');
    }
    *out = to_c_string(text);
    ChateletStatus::Ok
}

/// Releases a string allocated by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn chatelet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(ptr: *mut c_char) -> String {
        let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
        chatelet_string_free(ptr);
        s
    }

    #[test]
    fn poly_lifecycle_and_errors() {
        unsafe {
            let mut handle: *mut ChateletPoly = std::ptr::null_mut();
            let st = chatelet_poly_new(
                cstr("1").as_ptr(),
                cstr("1").as_ptr(),
                cstr("2").as_ptr(),
                0,
                &mut handle,
            );
            assert!(st == ChateletStatus::Ok);
            chatelet_poly_free(handle);

            let st = chatelet_poly_new(
                cstr("0").as_ptr(),
                cstr("0").as_ptr(),
                cstr("-8").as_ptr(),
                0,
                &mut handle,
            );
            assert!(st == ChateletStatus::Reducible);

            let st = chatelet_poly_new(
                cstr("0").as_ptr(),
                cstr("0").as_ptr(),
                cstr("16").as_ptr(),
                0,
                &mut handle,
            );
            assert!(st == ChateletStatus::ParityViolation);

            let st = chatelet_poly_new(
                cstr("x").as_ptr(),
                cstr("0").as_ptr(),
                cstr("1").as_ptr(),
                0,
                &mut handle,
            );
            assert!(st == ChateletStatus::InvalidArgument);
        }
    }

    #[test]
    fn two_squares_certificates() {
        unsafe {
            let mut member: c_int = -1;
            let mut detail: *mut c_char = std::ptr::null_mut();
            let st = chatelet_two_squares(cstr("746").as_ptr(), &mut member, &mut detail);
            assert!(st == ChateletStatus::Ok);
            assert_eq!(member, 1);
            assert_eq!(take_string(detail), "11,25");

            let st = chatelet_two_squares(cstr("3").as_ptr(), &mut member, &mut detail);
            assert!(st == ChateletStatus::Ok);
            assert_eq!(member, 0);
            assert_eq!(take_string(detail), "3^1");

            let st = chatelet_two_squares(cstr("-5").as_ptr(), &mut member, &mut detail);
            assert!(st == ChateletStatus::Ok);
            assert_eq!(member, 0);
            assert_eq!(take_string(detail), "negative");
        }
    }

    #[test]
    fn enumerate_matches_library() {
        unsafe {
            let mut handle: *mut ChateletPoly = std::ptr::null_mut();
            let st = chatelet_poly_new(
                cstr("1").as_ptr(),
                cstr("1").as_ptr(),
                cstr("2").as_ptr(),
                0,
                &mut handle,
            );
            assert!(st == ChateletStatus::Ok);
            let mut out: *mut c_char = std::ptr::null_mut();
            let st = chatelet_enumerate(
                handle,
                cstr("1000000").as_ptr(),
                cstr("1").as_ptr(),
                cstr("1").as_ptr(),
                &mut out,
            );
            assert!(st == ChateletStatus::Ok);
            let text = take_string(out);
            assert_eq!(text.lines().count(), 5);
            assert!(text.lines().all(|l| l.starts_with("{\"n\":\"")));
            chatelet_poly_free(handle);
        }
    }
}
