//! C ABI over the charbasis library.
//!
//! Conventions: the context is an opaque handle created and destroyed by
//! the library; every function returns a status code; results travel as
//! NUL-terminated JSON strings written to an out-parameter and released
//! with `charbasis_string_free`. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use charbasis::engine::{
    build_b_lambda, lambda_membership, restrict_basic_set_to_alt, verify_basic_set_alt,
    verify_basic_set_sym, verify_block_isometries, verify_c_empty_basic_set,
    verify_char_ring_basis, verify_theorem_main, Bounds, CEmptyVariant,
};
use charbasis::report::{sort_reports, VerificationReport};
use charbasis::symmetric::{character_table_bounded, two_blocks};
use charbasis::{two_core_and_quotient, Error, Partition};

/// Status codes; nonzero values describe the failure class.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CharbasisStatus {
    Ok = 0,
    InternalError = 1,
    ResourceLimit = 2,
    VerificationFailed = 3,
    InvalidArgument = 4,
    NullPointer = 5,
}

/// Opaque configuration handle.
pub struct CharbasisContext {
    bounds: Bounds,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let cleaned = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(cleaned).expect("no interior NUL"));
    });
}

fn status_for(err: &Error) -> CharbasisStatus {
    match err {
        Error::ResourceBound { .. } => CharbasisStatus::ResourceLimit,
        Error::InvalidPartition(_)
        | Error::UnknownClass(_)
        | Error::SizeMismatch { .. }
        | Error::NotSelfConjugate(_)
        | Error::NotTwoCore(_) => CharbasisStatus::InvalidArgument,
        _ => CharbasisStatus::InternalError,
    }
}

/// Shared scaffolding: NULL checks, panic containment, string hand-off.
fn with_output(
    out_json: *mut *mut c_char,
    body: impl FnOnce() -> Result<(serde_json::Value, CharbasisStatus), Error>,
) -> CharbasisStatus {
    if out_json.is_null() {
        set_last_error("output pointer is NULL");
        return CharbasisStatus::NullPointer;
    }
    let result = catch_unwind(AssertUnwindSafe(body));
    match result {
        Ok(Ok((value, status))) => {
            let text = serde_json::to_string(&value).expect("json serializes");
            let cstring = CString::new(text).expect("json has no interior NUL");
            unsafe {
                *out_json = cstring.into_raw();
            }
            status
        }
        Ok(Err(err)) => {
            set_last_error(&err.to_string());
            unsafe {
                *out_json = ptr::null_mut();
            }
            status_for(&err)
        }
        Err(_) => {
            set_last_error("internal panic");
            unsafe {
                *out_json = ptr::null_mut();
            }
            CharbasisStatus::InternalError
        }
    }
}

unsafe fn parse_str<'a>(ptr: *const c_char) -> Result<&'a str, CharbasisStatus> {
    if ptr.is_null() {
        set_last_error("string argument is NULL");
        return Err(CharbasisStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error("string argument is not UTF-8");
        CharbasisStatus::InvalidArgument
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn charbasis_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Most recent error message on this thread, or NULL. Owned by the caller;
/// release with `charbasis_string_free`.
#[no_mangle]
pub extern "C" fn charbasis_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Creates a context with the default resource bounds.
#[no_mangle]
pub extern "C" fn charbasis_context_new() -> *mut CharbasisContext {
    Box::into_raw(Box::new(CharbasisContext {
        bounds: Bounds::default(),
    }))
}

/// Destroys a context. NULL is tolerated.
///
/// # Safety
/// `ctx` must be NULL or a pointer obtained from `charbasis_context_new`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn charbasis_context_free(ctx: *mut CharbasisContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Overrides the resource bounds: `n_max` governs symmetric and alternating
/// checks, `w_max` the mixed wreath check.
///
/// # Safety
/// `ctx` must be a live pointer from `charbasis_context_new`.
#[no_mangle]
pub unsafe extern "C" fn charbasis_context_set_bounds(
    ctx: *mut CharbasisContext,
    n_max: u32,
    w_max: u32,
) -> CharbasisStatus {
    let Some(ctx) = ctx.as_mut() else {
        set_last_error("context is NULL");
        return CharbasisStatus::NullPointer;
    };
    ctx.bounds.n_max = n_max as usize;
    ctx.bounds.alt_n_max = n_max as usize;
    ctx.bounds.mixed_w_max = w_max as usize;
    CharbasisStatus::Ok
}

fn context_bounds(ctx: *const CharbasisContext) -> Bounds {
    if ctx.is_null() {
        Bounds::default()
    } else {
        unsafe { (*ctx).bounds }
    }
}

/// Writes the exact character table of the group ("sn" or "an") on `n`
/// letters as JSON.
///
/// # Safety
/// `group` must be a NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charbasis_table_json(
    ctx: *const CharbasisContext,
    group: *const c_char,
    n: u32,
    out_json: *mut *mut c_char,
) -> CharbasisStatus {
    let group = match parse_str(group) {
        Ok(g) => g.to_string(),
        Err(status) => return status,
    };
    let bounds = context_bounds(ctx);
    with_output(out_json, move || {
        if group == "an" && n < 2 {
            return Err(Error::InvalidPartition(
                "alternating tables need n >= 2".into(),
            ));
        }
        let table = character_table_bounded(n as usize, bounds.n_max)?;
        let value = match group.as_str() {
            "sn" => table.to_json(),
            "an" => charbasis::alternating::alt_table_json(&table)?,
            other => {
                return Err(Error::UnknownClass(format!("group {other}")));
            }
        };
        Ok((value, CharbasisStatus::Ok))
    })
}

/// Writes the basic-set listing for "sn" or "an" as JSON.
///
/// # Safety
/// `group` must be a NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charbasis_basic_set_json(
    _ctx: *const CharbasisContext,
    group: *const c_char,
    n: u32,
    out_json: *mut *mut c_char,
) -> CharbasisStatus {
    let group = match parse_str(group) {
        Ok(g) => g.to_string(),
        Err(status) => return status,
    };
    with_output(out_json, move || {
        let n = n as usize;
        let b_lambda = build_b_lambda(n);
        let value = match group.as_str() {
            "sn" => {
                let members: Vec<serde_json::Value> = b_lambda
                    .iter()
                    .map(|lam| {
                        let m = lambda_membership(&two_core_and_quotient(lam).quotient);
                        serde_json::json!({
                            "lambda": lam.text(),
                            "parts": lam,
                            "quotient": [m.quotient.0, m.quotient.1],
                        })
                    })
                    .collect();
                serde_json::json!({
                    "schema": charbasis::SCHEMA_VERSION,
                    "group": "sn",
                    "n": n,
                    "count": members.len(),
                    "members": members,
                })
            }
            "an" => {
                let labels: Vec<String> = restrict_basic_set_to_alt(&b_lambda)
                    .iter()
                    .map(|l| l.text())
                    .collect();
                serde_json::json!({
                    "schema": charbasis::SCHEMA_VERSION,
                    "group": "an",
                    "n": n,
                    "count": labels.len(),
                    "members": labels,
                })
            }
            other => {
                return Err(Error::UnknownClass(format!("group {other}")));
            }
        };
        Ok((value, CharbasisStatus::Ok))
    })
}

/// Writes the 2-block structure of the symmetric group on `n` letters.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charbasis_blocks_json(
    n: u32,
    out_json: *mut *mut c_char,
) -> CharbasisStatus {
    with_output(out_json, move || {
        let blocks = two_blocks(n as usize);
        Ok((
            serde_json::json!({
                "schema": charbasis::SCHEMA_VERSION,
                "n": n,
                "blocks": blocks,
            }),
            CharbasisStatus::Ok,
        ))
    })
}

/// Writes the 2-core, 2-quotient and membership data of one partition,
/// given in "4+2+1" or "[4,2,1]" form.
///
/// # Safety
/// `partition` must be a NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charbasis_quotient_json(
    partition: *const c_char,
    out_json: *mut *mut c_char,
) -> CharbasisStatus {
    let text = match parse_str(partition) {
        Ok(t) => t.to_string(),
        Err(status) => return status,
    };
    with_output(out_json, move || {
        let lam: Partition = text.parse()?;
        let data = two_core_and_quotient(&lam);
        let membership = lambda_membership(&data.quotient);
        Ok((
            serde_json::json!({
                "schema": charbasis::SCHEMA_VERSION,
                "partition": lam,
                "core": data.core,
                "quotient": [data.quotient.0, data.quotient.1],
                "weight": data.weight,
                "member": membership.member,
            }),
            CharbasisStatus::Ok,
        ))
    })
}

/// Runs one verification claim ("sn", "an", "base", "isometry", "wreath",
/// or "main") at one parameter value and writes the certificates. Returns
/// `VERIFICATION_FAILED` when a certificate reports failure; the JSON is
/// still written in that case.
///
/// # Safety
/// `claim` must be a NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charbasis_verify_json(
    ctx: *const CharbasisContext,
    claim: *const c_char,
    parameter: u32,
    out_json: *mut *mut c_char,
) -> CharbasisStatus {
    let claim = match parse_str(claim) {
        Ok(c) => c.to_string(),
        Err(status) => return status,
    };
    let bounds = context_bounds(ctx);
    with_output(out_json, move || {
        let p = parameter as usize;
        let mut reports: Vec<VerificationReport> = match claim.as_str() {
            "sn" => vec![verify_basic_set_sym(p, &bounds)?],
            "an" => vec![verify_basic_set_alt(p, &bounds)?],
            "base" => vec![verify_char_ring_basis(p, &bounds)?],
            "isometry" => verify_block_isometries(p, &bounds)?,
            "wreath" => vec![
                verify_c_empty_basic_set(p, CEmptyVariant::BEmpty, &bounds)?,
                verify_c_empty_basic_set(p, CEmptyVariant::Mixed, &bounds)?,
            ],
            "main" => verify_theorem_main(p, &bounds)?,
            other => {
                return Err(Error::UnknownClass(format!("claim {other}")));
            }
        };
        sort_reports(&mut reports);
        let status = if reports.iter().all(|r| r.passed) {
            CharbasisStatus::Ok
        } else {
            CharbasisStatus::VerificationFailed
        };
        Ok((
            serde_json::json!({
                "schema": charbasis::SCHEMA_VERSION,
                "reports": reports,
            }),
            status,
        ))
    })
}

/// Releases a string returned by this library. NULL is tolerated.
///
/// # Safety
/// `s` must be NULL or a pointer produced by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn charbasis_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
