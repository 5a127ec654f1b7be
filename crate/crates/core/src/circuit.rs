//! The circuit container: an ordered gate list over a fixed qubit register.

use crate::gates::{Gate, GateKind};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("qubit index {0} out of range for {1}-qubit circuit")]
    QubitOutOfRange(usize, usize),
    #[error("measure/reset must form a trailing suffix (violated at gate {0})")]
    MeasureNotSuffix(usize),
    #[error("output permutation must be a bijection over 0..{0}")]
    BadPermutation(usize),
}

/// An ordered list of gate applications over `num_qubits` logical qubits.
///
/// `output_perm`, when present, records that the circuit's outputs are
/// wire-permuted: the content of logical qubit `q` ends up on wire
/// `output_perm[q]`. The relayout pass attaches it; consumers un-permute
/// final states through it.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub num_qubits: usize,
    pub gates: Vec<Gate>,
    pub output_perm: Option<Vec<usize>>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Circuit {
        Circuit {
            num_qubits,
            gates: Vec::new(),
            output_perm: None,
        }
    }

    pub fn with_gates(num_qubits: usize, gates: Vec<Gate>) -> Circuit {
        Circuit {
            num_qubits,
            gates,
            output_perm: None,
        }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// Gate count excluding barriers (the number profilers account for).
    pub fn profiled_gate_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| g.kind != GateKind::Barrier)
            .count()
    }

    pub fn has_measure(&self) -> bool {
        self.gates.iter().any(|g| g.kind == GateKind::Measure)
    }

    /// Check index bounds, the measure/reset suffix rule and the output
    /// permutation shape.
    pub fn validate(&self) -> Result<(), CircuitError> {
        let mut suffix = false;
        for (i, g) in self.gates.iter().enumerate() {
            for &q in &g.qubits {
                if q >= self.num_qubits {
                    return Err(CircuitError::QubitOutOfRange(q, self.num_qubits));
                }
            }
            let is_terminal = matches!(g.kind, GateKind::Measure | GateKind::Reset);
            if suffix && !is_terminal {
                return Err(CircuitError::MeasureNotSuffix(i));
            }
            suffix |= is_terminal;
        }
        if let Some(perm) = &self.output_perm {
            if !is_permutation(perm, self.num_qubits) {
                return Err(CircuitError::BadPermutation(self.num_qubits));
            }
        }
        Ok(())
    }

    /// Structural equality with an absolute tolerance on angle parameters.
    /// Emitted angle text carries 16 significant digits, so re-parsing can
    /// move a parameter by a few ulps.
    pub fn structurally_equal(&self, other: &Circuit, param_tol: f64) -> bool {
        if self.num_qubits != other.num_qubits || self.gates.len() != other.gates.len() {
            return false;
        }
        if self.output_perm != other.output_perm {
            return false;
        }
        self.gates.iter().zip(&other.gates).all(|(a, b)| {
            a.kind == b.kind
                && a.qubits == b.qubits
                && a.params.len() == b.params.len()
                && a.params
                    .iter()
                    .zip(&b.params)
                    .all(|(x, y)| (x - y).abs() <= param_tol)
        })
    }
}

pub fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// Send logical basis index `j` through a qubit permutation: bit `q` of `j`
/// becomes bit `perm[q]` of the result.
pub fn permute_index(j: usize, perm: &[usize]) -> usize {
    let mut out = 0usize;
    for (q, &p) in perm.iter().enumerate() {
        if j >> q & 1 == 1 {
            out |= 1 << p;
        }
    }
    out
}

/// Inverse of a permutation given as a logical→position map.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (q, &p) in perm.iter().enumerate() {
        inv[p] = q;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::Gate;

    #[test]
    fn validate_bounds() {
        let c = Circuit::with_gates(1, vec![Gate::h(1)]);
        assert!(matches!(
            c.validate(),
            Err(CircuitError::QubitOutOfRange(1, 1))
        ));
    }

    #[test]
    fn measure_suffix_rule() {
        let ok = Circuit::with_gates(2, vec![Gate::h(0), Gate::measure(0), Gate::measure(1)]);
        assert!(ok.validate().is_ok());
        let bad = Circuit::with_gates(2, vec![Gate::measure(0), Gate::h(1)]);
        assert!(matches!(
            bad.validate(),
            Err(CircuitError::MeasureNotSuffix(1))
        ));
    }

    #[test]
    fn index_permutation() {
        // q0 -> bit 2, q1 -> bit 0, q2 -> bit 1
        let perm = vec![2, 0, 1];
        assert_eq!(permute_index(0b001, &perm), 0b100);
        assert_eq!(permute_index(0b110, &perm), 0b011);
        let inv = invert_permutation(&perm);
        for j in 0..8 {
            assert_eq!(permute_index(permute_index(j, &perm), &inv), j);
        }
    }
}
