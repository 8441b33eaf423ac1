//! C ABI for `orddiv`.
//!
//! Every object crosses the boundary as an opaque handle created by an
//! `orddiv_*` constructor and released by the matching `*_free`. Fallible
//! calls return an [`OrddivStatus`]; on failure the message is available
//! from [`orddiv_last_error_message`] on the same thread. Strings returned
//! as `char *` are owned by the caller and released with
//! [`orddiv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orddiv::conjecture::test_conjecture;
use orddiv::existence::{exists_bijection, ExistenceCertificate};
use orddiv::maps::{dihedral_paper_map, product_paper_map};
use orddiv::{ComparisonMode, Error, GroupSpec, LinearMapSpec, OrderSpectrum, VerificationReport};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrddivStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    Domain = 5,
    Resource = 6,
    OutOfRange = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrddivMode {
    Divides = 0,
    DividedBy = 1,
    Geq = 2,
    Leq = 3,
}

impl From<OrddivMode> for ComparisonMode {
    fn from(m: OrddivMode) -> Self {
        match m {
            OrddivMode::Divides => ComparisonMode::Divides,
            OrddivMode::DividedBy => ComparisonMode::DividedBy,
            OrddivMode::Geq => ComparisonMode::Geq,
            OrddivMode::Leq => ComparisonMode::Leq,
        }
    }
}

pub struct OrddivGroup(GroupSpec);
pub struct OrddivSpectrum(OrderSpectrum);
pub struct OrddivMap(LinearMapSpec);
pub struct OrddivReport(VerificationReport);
pub struct OrddivCertificate(ExistenceCertificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: OrddivStatus, msg: impl Into<String>) -> OrddivStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> OrddivStatus {
    let status = match e {
        Error::Domain(_) => OrddivStatus::Domain,
        Error::Precondition(_) => OrddivStatus::Precondition,
        Error::Resource { .. } => OrddivStatus::Resource,
        Error::Parse { .. } => OrddivStatus::Parse,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), OrddivStatus>) -> OrddivStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            OrddivStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(OrddivStatus::Panic, "internal panic"),
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, OrddivStatus> {
    p.as_ref().ok_or_else(|| fail(OrddivStatus::NullPointer, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), OrddivStatus> {
    if out.is_null() {
        return Err(fail(OrddivStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the most recent failing call on this thread; empty after a
/// successful call. Valid until the next `orddiv_*` call on this thread.
#[no_mangle]
pub extern "C" fn orddiv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orddiv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a descriptor such as `Z6`, `D8`, `Q12` or `Z3xZ6`.
///
/// # Safety
/// `descriptor` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_parse(descriptor: *const c_char, out: *mut *mut OrddivGroup) -> OrddivStatus {
    guard(|| {
        let text = deref(descriptor)?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(OrddivStatus::InvalidUtf8, "descriptor is not UTF-8"))?;
        let g: GroupSpec = text.parse().map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivGroup(g))))
    })
}

/// # Safety
/// `g` must be null or a live handle from `orddiv_group_parse`.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_free(g: *mut OrddivGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_order(g: *const OrddivGroup, out: *mut u64) -> OrddivStatus {
    guard(|| write_out(out, deref(g)?.0.order()))
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_is_cyclic(g: *const OrddivGroup, out: *mut bool) -> OrddivStatus {
    guard(|| write_out(out, deref(g)?.0.is_cyclic().is_some()))
}

/// Canonical descriptor; free with `orddiv_string_free`. Null if `g` is null.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_descriptor(g: *const OrddivGroup) -> *mut c_char {
    match g.as_ref() {
        Some(g) => to_c_string(g.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_group_spectrum(g: *const OrddivGroup, out: *mut *mut OrddivSpectrum) -> OrddivStatus {
    guard(|| {
        let s = deref(g)?.0.order_spectrum().map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivSpectrum(s))))
    })
}

/// Number of distinct element orders. 0 if `s` is null.
///
/// # Safety
/// `s` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_spectrum_len(s: *const OrddivSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.0.entries().len())
}

/// Entry `index` in ascending order of element order.
///
/// # Safety
/// `s` must be a live spectrum handle; `order` and `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_spectrum_entry(
    s: *const OrddivSpectrum,
    index: usize,
    order: *mut u64,
    count: *mut u64,
) -> OrddivStatus {
    guard(|| {
        let &(d, c) = deref(s)?
            .0
            .entries()
            .get(index)
            .ok_or_else(|| fail(OrddivStatus::OutOfRange, format!("spectrum has no entry {index}")))?;
        write_out(order, d)?;
        write_out(count, c)
    })
}

/// # Safety
/// `s` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_spectrum_free(s: *mut OrddivSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// `f(s^a r^b) = k a + 2 b` on `D_2n -> Z_2n`; `k` must be odd.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_map_dihedral(n: u64, k: i64, out: *mut *mut OrddivMap) -> OrddivStatus {
    guard(|| {
        let map = dihedral_paper_map(n, k).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivMap(map))))
    })
}

/// `f((a, b)) = m k a + p b` on `Z_p x Z_kp -> Z_kp^2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_map_product(p: u64, k: u64, m: i64, out: *mut *mut OrddivMap) -> OrddivStatus {
    guard(|| {
        let map = product_paper_map(p, k, m).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivMap(map))))
    })
}

/// Arbitrary linear map `coeff_a * first + coeff_b * second` from a dihedral
/// or two-factor product group onto the cyclic group of the same order.
///
/// # Safety
/// `domain` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_map_linear(
    domain: *const OrddivGroup,
    coeff_a: i64,
    coeff_b: i64,
    out: *mut *mut OrddivMap,
) -> OrddivStatus {
    guard(|| {
        let g = deref(domain)?.0.clone();
        let map = LinearMapSpec::new(g, coeff_a, coeff_b).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivMap(map))))
    })
}

/// # Safety
/// `map` must be null or a live map handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_map_free(map: *mut OrddivMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// # Safety
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_map_verify(
    map: *const OrddivMap,
    mode: OrddivMode,
    out: *mut *mut OrddivReport,
) -> OrddivStatus {
    guard(|| {
        let report = deref(map)?.0.verify(mode.into()).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivReport(report))))
    })
}

/// False if `r` is null.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_verdict(r: *const OrddivReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.verdict)
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_bijective(r: *const OrddivReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.bijective)
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_row_count(r: *const OrddivReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.rows.len())
}

/// Row `index` in canonical element order.
///
/// # Safety
/// `r` must be a live report handle; all output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_row(
    r: *const OrddivReport,
    index: usize,
    domain_order: *mut u64,
    image: *mut u64,
    image_order: *mut u64,
    holds: *mut bool,
) -> OrddivStatus {
    guard(|| {
        let row = deref(r)?
            .0
            .rows
            .get(index)
            .ok_or_else(|| fail(OrddivStatus::OutOfRange, format!("report has no row {index}")))?;
        write_out(domain_order, row.domain_order)?;
        write_out(image, row.image)?;
        write_out(image_order, row.image_order)?;
        write_out(holds, row.holds)
    })
}

/// Report as JSON (same document as the CLI's `--format json`); free with
/// `orddiv_string_free`. Null if `r` is null.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_to_json(r: *const OrddivReport) -> *mut c_char {
    match r.as_ref() {
        Some(r) => to_c_string(orddiv::render::render_verification(
            &r.0,
            orddiv::render::OutputFormat::Json,
        )),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_report_free(r: *mut OrddivReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Existence certificate for a bijection `source -> target` respecting `mode`.
///
/// # Safety
/// `source` and `target` must be live group handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_exists(
    source: *const OrddivGroup,
    target: *const OrddivGroup,
    mode: OrddivMode,
    out: *mut *mut OrddivCertificate,
) -> OrddivStatus {
    guard(|| {
        let src = deref(source)?.0.order_spectrum().map_err(from_error)?;
        let dst = deref(target)?.0.order_spectrum().map_err(from_error)?;
        let cert = exists_bijection(&src, &dst, mode.into()).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(OrddivCertificate(cert))))
    })
}

/// # Safety
/// `c` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_certificate_feasible(c: *const OrddivCertificate) -> bool {
    c.as_ref().is_some_and(|c| c.0.feasible)
}

/// Certificate as JSON; free with `orddiv_string_free`. Null if `c` is null.
///
/// # Safety
/// `c` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_certificate_to_json(c: *const OrddivCertificate) -> *mut c_char {
    match c.as_ref() {
        Some(c) => to_c_string(orddiv::render::to_json(&c.0)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `c` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn orddiv_certificate_free(c: *mut OrddivCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Exhaustive swapped-coefficient search on `D_2n -> Z_2n`.
///
/// # Safety
/// All output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn orddiv_conjecture_test(
    n: u64,
    holds: *mut bool,
    valid_pairs: *mut u64,
    counterexamples: *mut u64,
) -> OrddivStatus {
    guard(|| {
        let r = test_conjecture(n).map_err(from_error)?;
        write_out(holds, r.conjecture_holds)?;
        write_out(valid_pairs, r.valid_pairs.len() as u64)?;
        write_out(counterexamples, r.counterexamples.len() as u64)
    })
}
