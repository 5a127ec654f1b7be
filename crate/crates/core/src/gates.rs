//! Gate kinds, gate applications, and their canonical unitary matrices.
//!
//! The kind enumeration doubles as the counter-profile column order: column
//! `k` of a counter profile counts occurrences of `GateKind::from_index(k)`.

use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use thiserror::Error;

/// Number of distinct gate kinds (and counter-profile columns).
pub const GATE_KIND_COUNT: usize = 33;

/// The supported gate vocabulary.
///
/// Discriminants fix the counter column order; the first ten kinds also
/// serve directly as context-profile gate codes (see [`GateKind::profile_code`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum GateKind {
    H = 0,
    S,
    T,
    X,
    Y,
    Z,
    Sdg,
    Tdg,
    Rx,
    Ry,
    CPhase,
    Cu1,
    Swap,
    Rz,
    U1,
    U2,
    U3,
    Cx,
    Cz,
    Cy,
    Ch,
    Crx,
    Cry,
    Crz,
    Cu3,
    Ccx,
    Cswap,
    Id,
    Sx,
    Sxdg,
    Measure,
    Reset,
    Barrier,
}

use GateKind::*;

/// All kinds in counter column order.
pub const ALL_KINDS: [GateKind; GATE_KIND_COUNT] = [
    H, S, T, X, Y, Z, Sdg, Tdg, Rx, Ry, CPhase, Cu1, Swap, Rz, U1, U2, U3, Cx, Cz, Cy, Ch, Crx,
    Cry, Crz, Cu3, Ccx, Cswap, Id, Sx, Sxdg, Measure, Reset, Barrier,
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GateError {
    #[error("gate {0} expects {1} parameter(s), got {2}")]
    ParamMismatch(&'static str, usize, usize),
    #[error("gate {0} expects {1} qubit(s), got {2}")]
    QubitCountMismatch(&'static str, usize, usize),
    #[error("gate {0} has duplicate qubit operands")]
    DuplicateQubit(&'static str),
    #[error("gate {0} has a non-finite angle parameter")]
    NonFiniteParam(&'static str),
}

impl GateKind {
    /// Position in the counter column order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<GateKind> {
        ALL_KINDS.get(i).copied()
    }

    /// Gate code used in context-profile records.
    ///
    /// The first ten kinds map to codes 0..=9; every later kind is shifted up
    /// by one so the two-qubit family starts at 11 (code 10 stays reserved).
    /// This keeps H at code 0 while CPhase serializes as 11, CU1 as 12 and
    /// SWAP as 13, matching the 1-based counter column of those kinds.
    pub fn profile_code(self) -> u8 {
        let i = self.index() as u8;
        if i < 10 {
            i
        } else {
            i + 1
        }
    }

    pub fn from_profile_code(code: u8) -> Option<GateKind> {
        match code {
            0..=9 => GateKind::from_index(code as usize),
            10 => None,
            _ => GateKind::from_index(code as usize - 1),
        }
    }

    /// Number of qubit operands.
    pub fn arity(self) -> usize {
        match self {
            CPhase | Cu1 | Swap | Cx | Cz | Cy | Ch | Crx | Cry | Crz | Cu3 => 2,
            Ccx | Cswap => 3,
            _ => 1,
        }
    }

    /// Number of angle parameters.
    pub fn param_count(self) -> usize {
        match self {
            Rx | Ry | Rz | U1 | CPhase | Cu1 | Crx | Cry | Crz => 1,
            U2 => 2,
            U3 | Cu3 => 3,
            _ => 0,
        }
    }

    /// Number of leading control operands (controls precede the target).
    pub fn control_count(self) -> usize {
        match self {
            CPhase | Cu1 | Cx | Cz | Cy | Ch | Crx | Cry | Crz | Cu3 | Cswap => 1,
            Ccx => 2,
            _ => 0,
        }
    }

    /// Canonical OpenQASM name.
    pub fn name(self) -> &'static str {
        match self {
            H => "h",
            S => "s",
            T => "t",
            X => "x",
            Y => "y",
            Z => "z",
            Sdg => "sdg",
            Tdg => "tdg",
            Rx => "rx",
            Ry => "ry",
            CPhase => "cp",
            Cu1 => "cu1",
            Swap => "swap",
            Rz => "rz",
            U1 => "u1",
            U2 => "u2",
            U3 => "u3",
            Cx => "cx",
            Cz => "cz",
            Cy => "cy",
            Ch => "ch",
            Crx => "crx",
            Cry => "cry",
            Crz => "crz",
            Cu3 => "cu3",
            Ccx => "ccx",
            Cswap => "cswap",
            Id => "id",
            Sx => "sx",
            Sxdg => "sxdg",
            Measure => "measure",
            Reset => "reset",
            Barrier => "barrier",
        }
    }

    /// Resolve an OpenQASM gate name. Accepts the builtin uppercase spellings
    /// `CX` and `U` alongside the qelib1 names, plus `cphase` and `u` aliases.
    pub fn from_name(name: &str) -> Option<GateKind> {
        let kind = match name {
            "h" => H,
            "s" => S,
            "t" => T,
            "x" => X,
            "y" => Y,
            "z" => Z,
            "sdg" => Sdg,
            "tdg" => Tdg,
            "rx" => Rx,
            "ry" => Ry,
            "cp" | "cphase" => CPhase,
            "cu1" => Cu1,
            "swap" => Swap,
            "rz" => Rz,
            "u1" => U1,
            "u2" => U2,
            "u3" | "u" | "U" => U3,
            "cx" | "CX" => Cx,
            "cz" => Cz,
            "cy" => Cy,
            "ch" => Ch,
            "crx" => Crx,
            "cry" => Cry,
            "crz" => Crz,
            "cu3" => Cu3,
            "ccx" => Ccx,
            "cswap" => Cswap,
            "id" => Id,
            "sx" => Sx,
            "sxdg" => Sxdg,
            "measure" => Measure,
            "reset" => Reset,
            "barrier" => Barrier,
            _ => return None,
        };
        Some(kind)
    }

    /// True for the seventeen one-qubit unitary kinds (excludes measure,
    /// reset and barrier).
    pub fn is_single_qubit_unitary(self) -> bool {
        self.arity() == 1 && !matches!(self, Measure | Reset | Barrier)
    }

    pub fn is_unitary(self) -> bool {
        !matches!(self, Measure | Reset | Barrier)
    }
}

/// One gate application: a kind, its qubit operands (controls first, in
/// OpenQASM operand order) and its angle parameters in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
    pub params: Vec<f64>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>, params: Vec<f64>) -> Result<Gate, GateError> {
        if qubits.len() != kind.arity() {
            return Err(GateError::QubitCountMismatch(
                kind.name(),
                kind.arity(),
                qubits.len(),
            ));
        }
        if params.len() != kind.param_count() {
            return Err(GateError::ParamMismatch(
                kind.name(),
                kind.param_count(),
                params.len(),
            ));
        }
        if params.iter().any(|p| !p.is_finite()) {
            return Err(GateError::NonFiniteParam(kind.name()));
        }
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(GateError::DuplicateQubit(kind.name()));
            }
        }
        Ok(Gate {
            kind,
            qubits,
            params,
        })
    }

    /// Attribution qubit for counter profiling: the target (last operand)
    /// for everything except SWAP, which is attributed to its first operand.
    pub fn attribution_qubit(&self) -> usize {
        match self.kind {
            Swap => self.qubits[0],
            _ => *self.qubits.last().unwrap(),
        }
    }

    pub fn h(q: usize) -> Gate {
        Gate::new(H, vec![q], vec![]).unwrap()
    }
    pub fn s(q: usize) -> Gate {
        Gate::new(S, vec![q], vec![]).unwrap()
    }
    pub fn t(q: usize) -> Gate {
        Gate::new(T, vec![q], vec![]).unwrap()
    }
    pub fn x(q: usize) -> Gate {
        Gate::new(X, vec![q], vec![]).unwrap()
    }
    pub fn y(q: usize) -> Gate {
        Gate::new(Y, vec![q], vec![]).unwrap()
    }
    pub fn z(q: usize) -> Gate {
        Gate::new(Z, vec![q], vec![]).unwrap()
    }
    pub fn sdg(q: usize) -> Gate {
        Gate::new(Sdg, vec![q], vec![]).unwrap()
    }
    pub fn tdg(q: usize) -> Gate {
        Gate::new(Tdg, vec![q], vec![]).unwrap()
    }
    pub fn rx(q: usize, theta: f64) -> Gate {
        Gate::new(Rx, vec![q], vec![theta]).unwrap()
    }
    pub fn ry(q: usize, theta: f64) -> Gate {
        Gate::new(Ry, vec![q], vec![theta]).unwrap()
    }
    pub fn rz(q: usize, theta: f64) -> Gate {
        Gate::new(Rz, vec![q], vec![theta]).unwrap()
    }
    pub fn u1(q: usize, lambda: f64) -> Gate {
        Gate::new(U1, vec![q], vec![lambda]).unwrap()
    }
    pub fn u3(q: usize, theta: f64, phi: f64, lambda: f64) -> Gate {
        Gate::new(U3, vec![q], vec![theta, phi, lambda]).unwrap()
    }
    pub fn cx(c: usize, t: usize) -> Gate {
        Gate::new(Cx, vec![c, t], vec![]).unwrap()
    }
    pub fn cz(c: usize, t: usize) -> Gate {
        Gate::new(Cz, vec![c, t], vec![]).unwrap()
    }
    pub fn cp(c: usize, t: usize, theta: f64) -> Gate {
        Gate::new(CPhase, vec![c, t], vec![theta]).unwrap()
    }
    pub fn swap(a: usize, b: usize) -> Gate {
        Gate::new(Swap, vec![a, b], vec![]).unwrap()
    }
    pub fn ccx(c1: usize, c2: usize, t: usize) -> Gate {
        Gate::new(Ccx, vec![c1, c2, t], vec![]).unwrap()
    }
    pub fn measure(q: usize) -> Gate {
        Gate::new(Measure, vec![q], vec![]).unwrap()
    }
    pub fn barrier(q: usize) -> Gate {
        Gate::new(Barrier, vec![q], vec![]).unwrap()
    }
}

pub type Matrix2 = [[Complex64; 2]; 2];

/// A dense square unitary over the gate's own operand space, row-major.
/// Sub-index bit `i` corresponds to operand `i` (first operand = least
/// significant bit).
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    pub dim: usize,
    elems: Vec<Complex64>,
}

impl Unitary {
    pub fn identity(dim: usize) -> Unitary {
        let mut u = Unitary {
            dim,
            elems: vec![Complex64::new(0.0, 0.0); dim * dim],
        };
        for i in 0..dim {
            u.elems[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        u
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Unitary {
        let dim = rows.len();
        let mut elems = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim);
            elems.extend_from_slice(r);
        }
        Unitary { dim, elems }
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.elems[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.elems[row * self.dim + col] = v;
    }

    /// Max-norm of U†U − I.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for r in 0..n {
            for c in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(k, r).conj() * self.get(k, c);
                }
                let expect = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((acc - expect).norm());
            }
        }
        worst
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cis(theta: f64) -> Complex64 {
    Complex64::new(theta.cos(), theta.sin())
}

pub fn mat_h() -> Matrix2 {
    let s = FRAC_1_SQRT_2;
    [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
}

pub fn mat_x() -> Matrix2 {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn mat_y() -> Matrix2 {
    [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]
}

pub fn mat_z() -> Matrix2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
}

/// diag(1, e^{i lambda}) — the phase-gate family (u1/cp/cu1, and s/t/z at
/// fixed angles).
pub fn mat_phase(lambda: f64) -> Matrix2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), cis(lambda)]]
}

pub fn mat_rx(theta: f64) -> Matrix2 {
    let (co, si) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [[c(co, 0.0), c(0.0, -si)], [c(0.0, -si), c(co, 0.0)]]
}

pub fn mat_ry(theta: f64) -> Matrix2 {
    let (co, si) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [[c(co, 0.0), c(-si, 0.0)], [c(si, 0.0), c(co, 0.0)]]
}

pub fn mat_rz(theta: f64) -> Matrix2 {
    [
        [cis(-theta / 2.0), c(0.0, 0.0)],
        [c(0.0, 0.0), cis(theta / 2.0)],
    ]
}

pub fn mat_u2(phi: f64, lambda: f64) -> Matrix2 {
    let s = FRAC_1_SQRT_2;
    [
        [c(s, 0.0), -cis(lambda) * s],
        [cis(phi) * s, cis(phi + lambda) * s],
    ]
}

pub fn mat_u3(theta: f64, phi: f64, lambda: f64) -> Matrix2 {
    let (co, si) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [
        [c(co, 0.0), -cis(lambda) * si],
        [cis(phi) * si, cis(phi + lambda) * co],
    ]
}

pub fn mat_sx() -> Matrix2 {
    [
        [c(0.5, 0.5), c(0.5, -0.5)],
        [c(0.5, -0.5), c(0.5, 0.5)],
    ]
}

pub fn mat_sxdg() -> Matrix2 {
    [
        [c(0.5, -0.5), c(0.5, 0.5)],
        [c(0.5, 0.5), c(0.5, -0.5)],
    ]
}

pub fn mat_id() -> Matrix2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

/// The 2x2 matrix a kind applies to its target qubit once all controls are
/// satisfied. None for SWAP-class kinds and the non-unitary pseudo-gates.
pub fn payload_matrix(kind: GateKind, params: &[f64]) -> Option<Matrix2> {
    let m = match kind {
        H | Ch => mat_h(),
        S => mat_phase(std::f64::consts::FRAC_PI_2),
        T => mat_phase(FRAC_PI_4),
        X | Cx => mat_x(),
        Y | Cy => mat_y(),
        Z | Cz => mat_z(),
        Sdg => mat_phase(-std::f64::consts::FRAC_PI_2),
        Tdg => mat_phase(-FRAC_PI_4),
        Rx | Crx => mat_rx(params[0]),
        Ry | Cry => mat_ry(params[0]),
        Rz | Crz => mat_rz(params[0]),
        U1 | CPhase | Cu1 => mat_phase(params[0]),
        U2 => mat_u2(params[0], params[1]),
        U3 | Cu3 => mat_u3(params[0], params[1], params[2]),
        Id => mat_id(),
        Sx => mat_sx(),
        Sxdg => mat_sxdg(),
        Ccx => mat_x(),
        Swap | Cswap | Measure | Reset | Barrier => return None,
    };
    Some(m)
}

/// Full matrix over the kind's operand space (2x2, 4x4 or 8x8).
///
/// Controls occupy the low sub-index bits in operand order; MEASURE, RESET,
/// BARRIER and ID all map to the identity so that every kind yields a
/// unitary.
pub fn gate_matrix(kind: GateKind, params: &[f64]) -> Result<Unitary, GateError> {
    if params.len() != kind.param_count() {
        return Err(GateError::ParamMismatch(
            kind.name(),
            kind.param_count(),
            params.len(),
        ));
    }
    let dim = 1usize << kind.arity();
    let u = match kind {
        Swap => {
            let mut u = Unitary::identity(4);
            u.set(1, 1, c(0.0, 0.0));
            u.set(2, 2, c(0.0, 0.0));
            u.set(1, 2, c(1.0, 0.0));
            u.set(2, 1, c(1.0, 0.0));
            u
        }
        Cswap => {
            // control = bit 0; swap bits 1 and 2 when it is set
            let mut u = Unitary::identity(8);
            u.set(3, 3, c(0.0, 0.0));
            u.set(5, 5, c(0.0, 0.0));
            u.set(3, 5, c(1.0, 0.0));
            u.set(5, 3, c(1.0, 0.0));
            u
        }
        Measure | Reset | Barrier => Unitary::identity(dim),
        _ => {
            let m = payload_matrix(kind, params).expect("payload for matrix kind");
            let ctrls = kind.control_count();
            let ctrl_mask = (1usize << ctrls) - 1;
            let target_bit = 1usize << ctrls;
            let mut u = Unitary::identity(dim);
            for base in 0..dim {
                // rows where all controls are set and the target bit is 0
                if base & ctrl_mask == ctrl_mask && base & target_bit == 0 {
                    let hi = base | target_bit;
                    u.set(base, base, m[0][0]);
                    u.set(base, hi, m[0][1]);
                    u.set(hi, base, m[1][0]);
                    u.set(hi, hi, m[1][1]);
                }
            }
            u
        }
    };
    Ok(u)
}

/// 2x2 matrix product `a * b`.
pub fn mat2_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for col in 0..2 {
            out[r][col] = a[r][0] * b[0][col] + a[r][1] * b[1][col];
        }
    }
    out
}

/// True when `u` equals the identity up to a global phase, within `tol`.
pub fn mat2_is_identity_up_to_phase(u: &Matrix2, tol: f64) -> bool {
    u[0][1].norm() <= tol && u[1][0].norm() <= tol && (u[0][0] - u[1][1]).norm() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sample_params(kind: GateKind) -> Vec<f64> {
        (0..kind.param_count()).map(|i| 0.37 + 0.71 * i as f64).collect()
    }

    #[test]
    fn kind_table_positions() {
        // 1-based columns 1..3 and 11..13
        assert_eq!(GateKind::from_index(0), Some(H));
        assert_eq!(GateKind::from_index(1), Some(S));
        assert_eq!(GateKind::from_index(2), Some(T));
        assert_eq!(GateKind::from_index(10), Some(CPhase));
        assert_eq!(GateKind::from_index(11), Some(Cu1));
        assert_eq!(GateKind::from_index(12), Some(Swap));
        assert_eq!(ALL_KINDS.len(), 33);
    }

    #[test]
    fn profile_codes() {
        assert_eq!(H.profile_code(), 0);
        assert_eq!(Ry.profile_code(), 9);
        assert_eq!(CPhase.profile_code(), 11);
        assert_eq!(Cu1.profile_code(), 12);
        assert_eq!(Swap.profile_code(), 13);
        assert_eq!(GateKind::from_profile_code(10), None);
        for k in ALL_KINDS {
            assert_eq!(GateKind::from_profile_code(k.profile_code()), Some(k));
        }
    }

    #[test]
    fn arity_and_params_fixed_per_kind() {
        assert_eq!(CPhase.arity(), 2);
        assert_eq!(CPhase.param_count(), 1);
        assert_eq!(Ccx.arity(), 3);
        assert_eq!(U3.param_count(), 3);
        assert_eq!(Ccx.control_count(), 2);
        assert_eq!(Cswap.control_count(), 1);
    }

    #[test]
    fn all_matrices_unitary() {
        for kind in ALL_KINDS {
            let u = gate_matrix(kind, &sample_params(kind)).unwrap();
            assert!(
                u.unitarity_defect() < 1e-12,
                "{} defect {}",
                kind.name(),
                u.unitarity_defect()
            );
        }
    }

    #[test]
    fn hadamard_matrix() {
        let u = gate_matrix(H, &[]).unwrap();
        let s = FRAC_1_SQRT_2;
        assert!((u.get(0, 0).re - s).abs() < 1e-15);
        assert!((u.get(1, 1).re + s).abs() < 1e-15);
    }

    #[test]
    fn t_matrix_is_diag_phase() {
        let u = gate_matrix(T, &[]).unwrap();
        assert_eq!(u.get(0, 0), Complex64::new(1.0, 0.0));
        assert!((u.get(1, 1) - cis(PI / 4.0)).norm() < 1e-15);
    }

    #[test]
    fn cphase_pi_is_cz() {
        let u = gate_matrix(CPhase, &[PI]).unwrap();
        for i in 0..3 {
            assert!((u.get(i, i) - c(1.0, 0.0)).norm() < 1e-15);
        }
        assert!((u.get(3, 3) - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cx_maps_control_lsb() {
        // first operand (control) is sub-index bit 0: |c=1,t=0> -> |c=1,t=1>
        let u = gate_matrix(Cx, &[]).unwrap();
        assert_eq!(u.get(3, 1), c(1.0, 0.0));
        assert_eq!(u.get(1, 3), c(1.0, 0.0));
        assert_eq!(u.get(0, 0), c(1.0, 0.0));
        assert_eq!(u.get(2, 2), c(1.0, 0.0));
        assert_eq!(u.get(1, 1), c(0.0, 0.0));
    }

    #[test]
    fn param_mismatch_rejected() {
        assert!(matches!(
            gate_matrix(Rx, &[]),
            Err(GateError::ParamMismatch(..))
        ));
        assert!(Gate::new(Cx, vec![0, 0], vec![]).is_err());
        assert!(Gate::new(Rz, vec![0], vec![f64::NAN]).is_err());
    }
}
