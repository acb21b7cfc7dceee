//! C ABI for the `eppo` library.
//!
//! Groups are opaque handles created by `eppo_group_from_*` and released
//! with `eppo_group_free`. Every fallible call returns an [`EppoStatus`];
//! on failure `eppo_last_error_message` describes the error for the calling
//! thread. Strings returned to the caller are freed with `eppo_string_free`.
//! A handle must not be used from two threads at once.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eppo::catalog::Fixture;
use eppo::criteria::{is_eppo_exhaustive, is_eppo_sampled, spectrum, spectrum_sampled, Status};
use eppo::perm::format::parse_group;
use eppo::records::Records;
use eppo::source::{self, LoadedGroup};
use eppo::structure::{classify, extension_constraint, SimpleId};
use eppo::{Error, Limits};

/// Opaque group handle.
pub struct EppoGroup {
    inner: LoadedGroup,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EppoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSource = 4,
    ThresholdExceeded = 5,
    Io = 6,
    InvalidArgument = 7,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EppoVerdict {
    Eppo = 0,
    NotEppo = 1,
    /// Sampled elements all had prime power order; not a proof.
    SampledConsistent = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> EppoStatus {
    match e {
        Error::Parse { .. } => EppoStatus::Parse,
        Error::Source(_) | Error::UnknownCatalog(_) => EppoStatus::InvalidSource,
        Error::ThresholdExceeded { .. } => EppoStatus::ThresholdExceeded,
        Error::Io { .. } => EppoStatus::Io,
        _ => EppoStatus::InvalidArgument,
    }
}

struct Failure(EppoStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EppoStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> EppoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            EppoStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal error");
            EppoStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(EppoStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn group<'a>(g: *const EppoGroup) -> Result<&'a LoadedGroup, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("group"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn limits(threshold: u64) -> Limits {
    let mut l = Limits::default();
    if threshold > 0 {
        l.enumeration = threshold;
    }
    l
}

unsafe fn hand_out(g: LoadedGroup, out: *mut *mut EppoGroup) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(EppoGroup { inner: g })));
    Ok(())
}

/// Parses a permutation group in the text format: a `degree N` line, then
/// one generator per line in 1-based cycle notation.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_group_from_text(text: *const c_char, out: *mut *mut EppoGroup) -> EppoStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        hand_out(LoadedGroup::from_perm("text", parse_group(text)?), out)
    })
}

/// Loads `file:<path>`, `catalog:<name>` or a constructor spec such as
/// `metacyclic p=7 a=1 q=3 b=1`.
///
/// # Safety
/// `source` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_group_from_source(source: *const c_char, out: *mut *mut EppoGroup) -> EppoStatus {
    guard(|| {
        let s = read_str(source, "source")?;
        hand_out(source::load(s)?, out)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `group` must come from `eppo_group_from_*` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eppo_group_free(group: *mut EppoGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_group_order(group: *const EppoGroup, out: *mut u64) -> EppoStatus {
    guard(|| write_out(out, self::group(group)?.order(), "out"))
}

/// Number of points the group acts on (the order, for constructed groups).
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_group_degree(group: *const EppoGroup, out: *mut u64) -> EppoStatus {
    guard(|| {
        let g = self::group(group)?;
        write_out(out, g.perm()?.degree() as u64, "out")
    })
}

/// Decides whether every element has prime power order. Groups above
/// `threshold` (0 selects the default) are sampled with `samples` random
/// elements; `samples = 0` refuses them. `witness_order` may be null; it
/// receives the composite order found, or 0.
///
/// # Safety
/// `group` must be a live handle; `verdict` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_is_eppo(
    group: *const EppoGroup,
    threshold: u64,
    samples: u64,
    seed: u64,
    verdict: *mut EppoVerdict,
    witness_order: *mut u64,
) -> EppoStatus {
    guard(|| {
        let g = self::group(group)?;
        let limits = limits(threshold);
        let perm = g.perm()?;
        let v = if g.order() > limits.enumeration {
            if samples == 0 {
                return Err(Error::ThresholdExceeded { order: g.order(), threshold: limits.enumeration }.into());
            }
            is_eppo_sampled(perm, samples, seed)
        } else {
            is_eppo_exhaustive(perm, &limits)?
        };
        let value = match v.status {
            Status::Eppo => EppoVerdict::Eppo,
            Status::NotEppo => EppoVerdict::NotEppo,
            Status::SampledConsistent => EppoVerdict::SampledConsistent,
        };
        write_out(verdict, value, "verdict")?;
        if !witness_order.is_null() {
            witness_order.write(v.witness.and_then(|w| w.composite_order()).unwrap_or(0));
        }
        Ok(())
    })
}

unsafe fn copy_orders(orders: &[u64], buf: *mut u64, capacity: usize, len: *mut usize) -> Result<(), Failure> {
    write_out(len, orders.len(), "len")?;
    if orders.len() > capacity {
        return Err(Failure(EppoStatus::BufferTooSmall, format!("{} orders, capacity {capacity}", orders.len())));
    }
    if !orders.is_empty() {
        if buf.is_null() {
            return Err(null("orders"));
        }
        ptr::copy_nonoverlapping(orders.as_ptr(), buf, orders.len());
    }
    Ok(())
}

/// Writes the sorted element orders into `orders` and their count into
/// `len`. When `capacity` is too small, only `len` is written and
/// `BufferTooSmall` returned.
///
/// # Safety
/// `orders` must have room for `capacity` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn eppo_spectrum(
    group: *const EppoGroup,
    threshold: u64,
    orders: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> EppoStatus {
    guard(|| {
        let g = self::group(group)?;
        let s = spectrum(g.perm()?, &limits(threshold))?;
        let v: Vec<u64> = s.orders.into_iter().collect();
        copy_orders(&v, orders, capacity, len)
    })
}

/// Orders seen among `samples` random elements drawn with `seed`; a subset
/// of the spectrum.
///
/// # Safety
/// As for `eppo_spectrum`.
#[no_mangle]
pub unsafe extern "C" fn eppo_spectrum_sampled(
    group: *const EppoGroup,
    samples: u64,
    seed: u64,
    orders: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> EppoStatus {
    guard(|| {
        let g = self::group(group)?;
        let s = spectrum_sampled(g.perm()?, samples, seed);
        let v: Vec<u64> = s.orders.into_iter().collect();
        copy_orders(&v, orders, capacity, len)
    })
}

/// Classification report as `key: value` lines. The string is owned by the
/// caller and released with `eppo_string_free`.
///
/// # Safety
/// `group` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_classify(
    group: *const EppoGroup,
    threshold: u64,
    samples: u64,
    seed: u64,
    report: *mut *mut c_char,
) -> EppoStatus {
    guard(|| {
        let g = self::group(group)?;
        let limits = limits(threshold);
        if g.order() > limits.enumeration && samples == 0 {
            return Err(Error::ThresholdExceeded { order: g.order(), threshold: limits.enumeration }.into());
        }
        let record = classify(g.perm()?, &limits, samples, seed, &Fixture::bundled())?;
        let mut out = Records::new();
        record.write(&mut out, "classification");
        out.push("classification.seed", seed);
        let text = CString::new(out.to_string()).map_err(|_| Failure(EppoStatus::Internal, "nul in report".into()))?;
        write_out(report, text.into_raw(), "report")
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eppo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether a normal 2-subgroup of order `2^exponent` is arithmetically
/// allowed below the named simple quotient (`PSL2(5)`, `PSL2(8)`,
/// `PSL2(17)`, `Sz(8)`, `Sz(32)`). `exponent` ranges over 1 to 127.
///
/// # Safety
/// `simple` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eppo_extension_constraint(simple: *const c_char, exponent: u32, out: *mut bool) -> EppoStatus {
    guard(|| {
        let name = read_str(simple, "simple")?;
        let id: SimpleId = name.parse().map_err(|e: Error| Failure(EppoStatus::InvalidArgument, e.to_string()))?;
        if !(1..=127).contains(&exponent) {
            return Err(Failure(EppoStatus::InvalidArgument, format!("exponent {exponent} outside 1..=127")));
        }
        write_out(out, extension_constraint(id, 1u128 << exponent)?, "out")
    })
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn eppo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn eppo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
