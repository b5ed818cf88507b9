//! C ABI for `revsynth`.
//!
//! Objects are exposed as opaque handles created by `rs_*_parse`,
//! `rs_*_from_*` or synthesis calls and released with the matching
//! `rs_*_free`. Every fallible call returns an [`RsStatus`]; on failure a
//! message is available from [`rs_last_error_message`] on the same thread.
//! Strings returned through `char **` outputs are owned by the caller and
//! must be released with [`rs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use revsynth::analysis::{check_induction_inequality, count_one_gate_functions, lower_bound_toffoli};
use revsynth::boolfn::{parse_tt, serialize_tt, Permutation, TruthTable};
use revsynth::circuit::{map_to_toffoli, parse_circuit, serialize_circuit, Circuit, MappingMethod};
use revsynth::embedding::{
    embed_decode, embed_encode, halfv_enumerate, halfv_recognize, halfv_to_circuit, parse_halfv,
    serialize_halfv, HalfVCircuit,
};
use revsynth::synthesis::{default_order, synth_to_toffoli, synth_young};
use revsynth::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    LengthMismatch = 3,
    OutputOverflow = 4,
    IndexOutOfRange = 5,
    BadVariable = 6,
    TooManyVariables = 7,
    NotReversible = 8,
    SizeMismatch = 9,
    Syntax = 10,
    LineIndexOutOfRange = 11,
    DuplicateControl = 12,
    InvalidGate = 13,
    UnsupportedN = 14,
    UnsupportedSize = 15,
    NotRealizable = 16,
    ArityMismatch = 17,
    Panic = 99,
}

impl From<&Error> for RsStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::LengthMismatch { .. } => Self::LengthMismatch,
            Error::OutputOverflow { .. } => Self::OutputOverflow,
            Error::IndexOutOfRange { .. } => Self::IndexOutOfRange,
            Error::BadVariable { .. } => Self::BadVariable,
            Error::TooManyVariables { .. } => Self::TooManyVariables,
            Error::NotReversible => Self::NotReversible,
            Error::SizeMismatch { .. } => Self::SizeMismatch,
            Error::Syntax { .. } => Self::Syntax,
            Error::LineIndexOutOfRange { .. } => Self::LineIndexOutOfRange,
            Error::DuplicateControl { .. } => Self::DuplicateControl,
            Error::InvalidGate { .. } => Self::InvalidGate,
            Error::UnsupportedN { .. } => Self::UnsupportedN,
            Error::UnsupportedSize { .. } => Self::UnsupportedSize,
            Error::NotRealizable { .. } => Self::NotRealizable,
            Error::ArityMismatch { .. } => Self::ArityMismatch,
        }
    }
}

/// Gate-to-Toffoli mapping method.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsMethod {
    /// Positive-polarity Reed-Muller; MCT gates only.
    Pprm = 0,
    /// Greedy ESOP; mixed-polarity gates.
    Esop = 1,
}

impl From<RsMethod> for MappingMethod {
    fn from(m: RsMethod) -> Self {
        match m {
            RsMethod::Pprm => MappingMethod::Pprm,
            RsMethod::Esop => MappingMethod::EsopGreedy,
        }
    }
}

/// Lower bound on the Toffoli gate count of the worst `n`-line function.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct RsBoundReport {
    pub n: usize,
    pub lower_bound: u64,
    /// The bound was decided with exact integer arithmetic.
    pub exact: bool,
    /// The interval route could not separate two candidates; the smaller one is reported.
    pub widened: bool,
    /// `n == 1`, where the counting argument carries no information.
    pub degenerate: bool,
}

/// Location of the first gate a permutation fails to match in half-V recognition.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct RsWitness {
    pub gate: usize,
    pub first: u32,
    pub second: u32,
}

/// Opaque truth table.
pub struct RsTruthTable(TruthTable);
/// Opaque reversible function.
pub struct RsPermutation(Permutation);
/// Opaque circuit.
pub struct RsCircuit(Circuit);
/// Opaque half-V circuit.
pub struct RsHalfV(HalfVCircuit);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

struct Failure(RsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(RsStatus::from(&e), e.to_string())
    }
}

type FfiResult = Result<(), Failure>;

fn null(what: &str) -> Failure {
    Failure(RsStatus::NullPointer, format!("null pointer: {what}"))
}

fn guard(body: impl FnOnce() -> FfiResult) -> RsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            RsStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            RsStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(RsStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> FfiResult {
    put(out, Box::into_raw(Box::new(value)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult {
    let c = CString::new(s).map_err(|e| Failure(RsStatus::InvalidUtf8, e.to_string()))?;
    put(out, c.into_raw())
}

unsafe fn order_slice(order: *const usize, len: usize, n: usize) -> Result<Vec<usize>, Failure> {
    if len == 0 {
        return Ok(default_order(n));
    }
    if order.is_null() {
        return Err(null("order"));
    }
    Ok(std::slice::from_raw_parts(order, len).to_vec())
}

unsafe fn free_box<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message describing the last failure on this thread, or an empty string.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------- truth tables

/// Parses `.tt` text.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_tt_parse(src: *const c_char, out: *mut *mut RsTruthTable) -> RsStatus {
    guard(|| put_box(out, RsTruthTable(parse_tt(text(src)?)?)))
}

/// Writes `.tt` text for `tt` into `*out`.
///
/// # Safety
/// `tt` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_tt_serialize(tt: *const RsTruthTable, out: *mut *mut c_char) -> RsStatus {
    guard(|| put_string(out, serialize_tt(&borrow(tt, "tt")?.0)))
}

/// # Safety
/// `tt` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_tt_shape(
    tt: *const RsTruthTable,
    n_inputs: *mut usize,
    n_outputs: *mut usize,
) -> RsStatus {
    guard(|| {
        let tt = &borrow(tt, "tt")?.0;
        put(n_inputs, tt.n_inputs())?;
        put(n_outputs, tt.n_outputs())
    })
}

/// Evaluates `tt` on one input word.
///
/// # Safety
/// `tt` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_tt_evaluate(tt: *const RsTruthTable, input: u32, out: *mut u32) -> RsStatus {
    guard(|| put(out, borrow(tt, "tt")?.0.evaluate(input)?))
}

/// # Safety
/// `tt` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_tt_free(tt: *mut RsTruthTable) {
    free_box(tt)
}

// ---------------------------------------------------------------- permutations

/// Builds a permutation of `{0..2^n}` from `len` images.
///
/// # Safety
/// `map` must point at `len` readable words; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_from_map(
    n: usize,
    map: *const u32,
    len: usize,
    out: *mut *mut RsPermutation,
) -> RsStatus {
    guard(|| {
        if map.is_null() {
            return Err(null("map"));
        }
        let images = std::slice::from_raw_parts(map, len).to_vec();
        put_box(out, RsPermutation(Permutation::from_map(n, images)?))
    })
}

/// Converts a reversible truth table.
///
/// # Safety
/// `tt` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_from_tt(tt: *const RsTruthTable, out: *mut *mut RsPermutation) -> RsStatus {
    guard(|| put_box(out, RsPermutation(Permutation::from_truth_table(&borrow(tt, "tt")?.0)?)))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_to_tt(p: *const RsPermutation, out: *mut *mut RsTruthTable) -> RsStatus {
    guard(|| put_box(out, RsTruthTable(borrow(p, "perm")?.0.to_truth_table())))
}

/// Number of variables of `p`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_n(p: *const RsPermutation, out: *mut usize) -> RsStatus {
    guard(|| put(out, borrow(p, "perm")?.0.n()))
}

/// Copies the `2^n` images of `p` into `buf`, which holds `len` words.
///
/// # Safety
/// `p` must be a live handle; `buf` must point at `len` writable words.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_get_map(p: *const RsPermutation, buf: *mut u32, len: usize) -> RsStatus {
    guard(|| {
        let map = borrow(p, "perm")?.0.map();
        if len != map.len() {
            return Err(Error::LengthMismatch { expected: map.len(), actual: len }.into());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        std::slice::from_raw_parts_mut(buf, len).copy_from_slice(map);
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_perm_free(p: *mut RsPermutation) {
    free_box(p)
}

// ---------------------------------------------------------------- circuits

/// Parses `.rc` text.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_parse(src: *const c_char, out: *mut *mut RsCircuit) -> RsStatus {
    guard(|| put_box(out, RsCircuit(parse_circuit(text(src)?)?)))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_serialize(c: *const RsCircuit, out: *mut *mut c_char) -> RsStatus {
    guard(|| put_string(out, serialize_circuit(&borrow(c, "circuit")?.0)))
}

/// # Safety
/// `c` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_shape(c: *const RsCircuit, lines: *mut usize, gates: *mut usize) -> RsStatus {
    guard(|| {
        let c = &borrow(c, "circuit")?.0;
        put(lines, c.lines())?;
        put(gates, c.gate_count())
    })
}

/// Runs `c` on one input state (line 1 is the most significant bit).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_simulate(c: *const RsCircuit, input: u32, out: *mut u32) -> RsStatus {
    guard(|| {
        let c = &borrow(c, "circuit")?.0;
        let limit = 1u64 << c.lines();
        if u64::from(input) >= limit {
            return Err(Error::IndexOutOfRange { index: input.into(), limit }.into());
        }
        put(out, c.simulate(input))
    })
}

/// The permutation computed by `c`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_perm(c: *const RsCircuit, out: *mut *mut RsPermutation) -> RsStatus {
    guard(|| put_box(out, RsPermutation(borrow(c, "circuit")?.0.perm())))
}

/// Replaces every single-target gate by a Toffoli cascade.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_map(c: *const RsCircuit, method: RsMethod, out: *mut *mut RsCircuit) -> RsStatus {
    guard(|| put_box(out, RsCircuit(map_to_toffoli(&borrow(c, "circuit")?.0, method.into())?)))
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_circuit_free(c: *mut RsCircuit) {
    free_box(c)
}

// ---------------------------------------------------------------- synthesis

/// Synthesizes `p` into at most `2n - 1` single-target gates. `order` lists
/// the variables 1..n in processing order; pass `order_len == 0` for 1..n.
///
/// # Safety
/// `p` must be a live handle; `order` must point at `order_len` words;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_synth_young(
    p: *const RsPermutation,
    order: *const usize,
    order_len: usize,
    out: *mut *mut RsCircuit,
) -> RsStatus {
    guard(|| {
        let p = &borrow(p, "perm")?.0;
        let order = order_slice(order, order_len, p.n())?;
        put_box(out, RsCircuit(synth_young(p, &order)?))
    })
}

/// As [`rs_synth_young`], followed by Toffoli mapping.
///
/// # Safety
/// Same as [`rs_synth_young`].
#[no_mangle]
pub unsafe extern "C" fn rs_synth_to_toffoli(
    p: *const RsPermutation,
    order: *const usize,
    order_len: usize,
    method: RsMethod,
    out: *mut *mut RsCircuit,
) -> RsStatus {
    guard(|| {
        let p = &borrow(p, "perm")?.0;
        let order = order_slice(order, order_len, p.n())?;
        put_box(out, RsCircuit(synth_to_toffoli(p, &order, method.into())?))
    })
}

// ---------------------------------------------------------------- analysis

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_lower_bound_toffoli(n: usize, out: *mut RsBoundReport) -> RsStatus {
    guard(|| {
        let r = lower_bound_toffoli(n)?;
        put(
            out,
            RsBoundReport {
                n: r.n,
                lower_bound: r.lower_bound,
                exact: r.exact,
                widened: r.widened,
                degenerate: r.degenerate,
            },
        )
    })
}

/// Whether `log2((2^n)!) >= n * 2^(n-1)` holds.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_check_induction(n: usize, out: *mut bool) -> RsStatus {
    guard(|| put(out, check_induction_inequality(n)?))
}

/// Number of distinct functions realized by one MCT gate on `n` lines.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_count_one_gate_functions(n: usize, out: *mut usize) -> RsStatus {
    guard(|| put(out, count_one_gate_functions(n)?))
}

// ---------------------------------------------------------------- half-V

/// Distinct functions computed by half-V circuits with `n` gates on `k` lines.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_enumerate(n: usize, k: usize, out: *mut u64) -> RsStatus {
    guard(|| put(out, halfv_enumerate(n, k)?))
}

/// Recovers the control functions of a half-V circuit with `n` gates that
/// computes `p`. On `NotRealizable` the failing gate and a witness pair are
/// written to `witness` when it is not null.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable; `witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_recognize(
    p: *const RsPermutation,
    n: usize,
    out: *mut *mut RsHalfV,
    witness: *mut RsWitness,
) -> RsStatus {
    guard(|| match halfv_recognize(&borrow(p, "perm")?.0, n) {
        Ok(h) => put_box(out, RsHalfV(h)),
        Err(e) => {
            if let (Error::NotRealizable { gate, witness: (first, second) }, false) = (&e, witness.is_null()) {
                witness.write(RsWitness { gate: *gate, first: *first, second: *second });
            }
            Err(e.into())
        }
    })
}

/// Embeds a function with `k - 1` inputs into a half-V circuit on `k` lines.
///
/// # Safety
/// `tt` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_encode(tt: *const RsTruthTable, k: usize, out: *mut *mut RsHalfV) -> RsStatus {
    guard(|| put_box(out, RsHalfV(embed_encode(&borrow(tt, "tt")?.0, k)?)))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_decode(h: *const RsHalfV, out: *mut *mut RsTruthTable) -> RsStatus {
    guard(|| put_box(out, RsTruthTable(embed_decode(&borrow(h, "halfv")?.0))))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_to_circuit(h: *const RsHalfV, out: *mut *mut RsCircuit) -> RsStatus {
    guard(|| put_box(out, RsCircuit(halfv_to_circuit(&borrow(h, "halfv")?.0))))
}

/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_parse(src: *const c_char, out: *mut *mut RsHalfV) -> RsStatus {
    guard(|| put_box(out, RsHalfV(parse_halfv(text(src)?)?)))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_serialize(h: *const RsHalfV, out: *mut *mut c_char) -> RsStatus {
    guard(|| put_string(out, serialize_halfv(&borrow(h, "halfv")?.0)))
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_halfv_free(h: *mut RsHalfV) {
    free_box(h)
}
