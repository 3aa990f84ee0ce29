//! C ABI for the tripartite-ppt entanglement detector.
//!
//! States are opaque handles created by the `tpp_state_*` constructors
//! and released with `tpp_state_free`. Matrix payloads cross the boundary
//! as row-major `[re, im]` interleaved doubles (128 for 8x8, 32 for 4x4).
//! Every function returns a `TppStatus`; outputs are written through
//! pointers only on `TPP_STATUS_OK`. The generated header lives at
//! `include/tripartite_ppt.h`.

use std::ffi::{c_char, CStr, CString};

use tripartite_ppt::criterion::{entanglement_criterion, reduce, ReductionKind, DEFAULT_TOLERANCE};
use tripartite_ppt::io::{state_from_file, MatrixFile};
use tripartite_ppt::linalg::{DensityMatrix4, DensityMatrix8, SquareMatrix};
use tripartite_ppt::states;
use tripartite_ppt::Error;

/// Status code returned by every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TppStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A scalar argument was out of range (mixing parameter, slot,
    /// ensemble size, reduction kind).
    InvalidArgument = 2,
    /// The supplied matrix is not a density matrix.
    InvalidState = 3,
    /// Malformed JSON or matrix-file contents.
    ParseError = 4,
    /// A string argument was not valid UTF-8.
    Utf8Error = 5,
}

/// Opaque handle to a validated three-qubit density matrix.
pub struct TppState {
    inner: DensityMatrix8,
}

/// Reduction selector, in the same order as the six report slots.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TppReductionKind {
    Ab = 0,
    Ac = 1,
    Bc = 2,
    ABc = 3,
    BCa = 4,
    CAb = 5,
}

impl TppReductionKind {
    fn to_kind(self) -> ReductionKind {
        match self {
            TppReductionKind::Ab => ReductionKind::AB,
            TppReductionKind::Ac => ReductionKind::AC,
            TppReductionKind::Bc => ReductionKind::BC,
            TppReductionKind::ABc => ReductionKind::A_BC,
            TppReductionKind::BCa => ReductionKind::B_CA,
            TppReductionKind::CAb => ReductionKind::C_AB,
        }
    }
}

/// Criterion output: per-reduction minimum partial-transpose eigenvalues
/// (slot order ab, ac, bc, a-bc, b-ca, c-ab), the verdict, and a bitmask
/// of the witnessing slots.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TppReport {
    pub tolerance: f64,
    /// 1 when entangled, 0 when inconclusive.
    pub entangled: i32,
    /// Bit `i` set when reduction slot `i` certifies entanglement.
    pub witness_mask: u32,
    pub min_pt_eigenvalues: [f64; 6],
}

fn status_for(err: &Error) -> TppStatus {
    match err {
        Error::ParamOutOfRange(_) | Error::InvalidSlot(_) | Error::InvalidInput(_) => {
            TppStatus::InvalidArgument
        }
        Error::NotDensityMatrix(_)
        | Error::LemmaViolation(_)
        | Error::NonHermitian { .. }
        | Error::NotNormalized { .. } => TppStatus::InvalidState,
        Error::Io(_) | Error::Parse(_) => TppStatus::ParseError,
    }
}

fn emit_state(state: DensityMatrix8, out: *mut *mut TppState) -> TppStatus {
    if out.is_null() {
        return TppStatus::NullPointer;
    }
    let boxed = Box::new(TppState { inner: state });
    unsafe { *out = Box::into_raw(boxed) };
    TppStatus::Ok
}

fn emit_result(result: Result<DensityMatrix8, Error>, out: *mut *mut TppState) -> TppStatus {
    match result {
        Ok(state) => emit_state(state, out),
        Err(err) => status_for(&err),
    }
}

/// Static version string of the underlying crate.
#[no_mangle]
pub extern "C" fn tpp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a state handle. Null is accepted and ignored.
///
/// # Safety
/// `state` must be a pointer returned by one of the `tpp_state_*`
/// constructors, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_free(state: *mut TppState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// The GHZ state.
#[no_mangle]
pub extern "C" fn tpp_state_ghz(out: *mut *mut TppState) -> TppStatus {
    emit_state(states::ghz(), out)
}

/// The Werner-type family with mixing parameter `x` in [0, 1].
#[no_mangle]
pub extern "C" fn tpp_state_werner(x: f64, out: *mut *mut TppState) -> TppStatus {
    emit_result(states::werner_embedded(x), out)
}

/// The bound-entangled state built on an unextendible product basis.
#[no_mangle]
pub extern "C" fn tpp_state_upb(out: *mut *mut TppState) -> TppStatus {
    emit_state(states::upb_state(), out)
}

/// Mixture of pair-entangled states with the given pair weights
/// (non-negative, summing to 1).
#[no_mangle]
pub extern "C" fn tpp_state_molecule(
    p_ab: f64,
    p_bc: f64,
    p_ac: f64,
    out: *mut *mut TppState,
) -> TppStatus {
    match states::MoleculeParams::new(p_ab, p_bc, p_ac) {
        Ok(p) => emit_state(states::molecule_state(&p), out),
        Err(err) => status_for(&err),
    }
}

/// Seeded random density matrix.
#[no_mangle]
pub extern "C" fn tpp_state_random(seed: u64, out: *mut *mut TppState) -> TppStatus {
    emit_state(states::random_density(seed), out)
}

/// Seeded random separable mixture of `k` product states, `k` in 1..=64.
#[no_mangle]
pub extern "C" fn tpp_state_separable(seed: u64, k: u32, out: *mut *mut TppState) -> TppStatus {
    emit_result(states::random_separable(seed, k as usize).map(|(_, m)| m), out)
}

fn matrix_from_interleaved(entries: &[f64], dim: usize) -> Result<SquareMatrix, Error> {
    let complex: Vec<tripartite_ppt::Complex64> = entries
        .chunks_exact(2)
        .map(|p| tripartite_ppt::Complex64::new(p[0], p[1]))
        .collect();
    SquareMatrix::from_entries(dim, complex)
}

/// Builds a state from 128 row-major `[re, im]` interleaved doubles.
/// The matrix must validate as a density matrix.
///
/// # Safety
/// `entries` must point to at least 128 readable doubles.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_from_dense(
    entries: *const f64,
    out: *mut *mut TppState,
) -> TppStatus {
    if entries.is_null() {
        return TppStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(entries, 128);
    let result = matrix_from_interleaved(slice, 8).and_then(DensityMatrix8::new);
    emit_result(result, out)
}

/// Embeds a 4x4 density matrix (32 interleaved doubles) through one of
/// the six slots (1..=6).
///
/// # Safety
/// `entries` must point to at least 32 readable doubles.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_embed(
    slot: u32,
    entries: *const f64,
    out: *mut *mut TppState,
) -> TppStatus {
    if entries.is_null() {
        return TppStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(entries, 32);
    let result = matrix_from_interleaved(slice, 4)
        .and_then(DensityMatrix4::new)
        .and_then(|r| states::embed_bipartite(&r, slot as usize));
    emit_result(result, out)
}

/// Parses a state from the JSON matrix-file format.
///
/// # Safety
/// `json` must be a valid null-terminated C string.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_from_json(
    json: *const c_char,
    out: *mut *mut TppState,
) -> TppStatus {
    if json.is_null() {
        return TppStatus::NullPointer;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(_) => return TppStatus::Utf8Error,
    };
    let result = MatrixFile::from_json(text).and_then(|f| state_from_file(&f));
    emit_result(result, out)
}

/// Serializes a state to the JSON matrix-file format. The returned string
/// must be released with `tpp_string_free`.
///
/// # Safety
/// `state` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_to_json(
    state: *const TppState,
    out_json: *mut *mut c_char,
) -> TppStatus {
    if state.is_null() || out_json.is_null() {
        return TppStatus::NullPointer;
    }
    let file = MatrixFile::from_matrix((*state).inner.matrix(), None);
    let text = CString::new(file.to_json()).expect("JSON has no interior NUL");
    *out_json = text.into_raw();
    TppStatus::Ok
}

/// Releases a string returned by `tpp_state_to_json`.
///
/// # Safety
/// `s` must be a pointer returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tpp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Copies the 8x8 matrix into 128 `[re, im]` interleaved doubles.
///
/// # Safety
/// `state` must be a live handle; `out` must point to at least 128
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn tpp_state_entries(state: *const TppState, out: *mut f64) -> TppStatus {
    if state.is_null() || out.is_null() {
        return TppStatus::NullPointer;
    }
    let m = (*state).inner.matrix();
    let dst = std::slice::from_raw_parts_mut(out, 128);
    for r in 0..8 {
        for c in 0..8 {
            let z = m.get(r, c);
            dst[2 * (r * 8 + c)] = z.re;
            dst[2 * (r * 8 + c) + 1] = z.im;
        }
    }
    TppStatus::Ok
}

/// Computes one reduction and writes it as 32 `[re, im]` interleaved
/// doubles.
///
/// # Safety
/// `state` must be a live handle; `out` must point to at least 32
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn tpp_reduce(
    state: *const TppState,
    kind: TppReductionKind,
    out: *mut f64,
) -> TppStatus {
    if state.is_null() || out.is_null() {
        return TppStatus::NullPointer;
    }
    let reduction = match reduce(&(*state).inner, kind.to_kind()) {
        Ok(r) => r,
        Err(err) => return status_for(&err),
    };
    let m = reduction.matrix();
    let dst = std::slice::from_raw_parts_mut(out, 32);
    for r in 0..4 {
        for c in 0..4 {
            let z = m.get(r, c);
            dst[2 * (r * 4 + c)] = z.re;
            dst[2 * (r * 4 + c) + 1] = z.im;
        }
    }
    TppStatus::Ok
}

/// Runs the entanglement criterion. Pass a negative `tol` to use the
/// default threshold (1e-10).
///
/// # Safety
/// `state` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpp_check(
    state: *const TppState,
    tol: f64,
    out: *mut TppReport,
) -> TppStatus {
    if state.is_null() || out.is_null() {
        return TppStatus::NullPointer;
    }
    if tol.is_nan() {
        return TppStatus::InvalidArgument;
    }
    let tol = if tol < 0.0 { DEFAULT_TOLERANCE } else { tol };
    let report = entanglement_criterion(&(*state).inner, tol);
    let mut minima = [0.0; 6];
    let mut mask = 0u32;
    for (i, entry) in report.reductions.iter().enumerate() {
        minima[i] = entry.min_pt_eigenvalue;
        if entry.min_pt_eigenvalue < -tol {
            mask |= 1 << i;
        }
    }
    *out = TppReport {
        tolerance: tol,
        entangled: i32::from(report.is_entangled()),
        witness_mask: mask,
        min_pt_eigenvalues: minima,
    };
    TppStatus::Ok
}
