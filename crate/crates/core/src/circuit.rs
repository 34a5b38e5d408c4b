//! Gate-level circuit representation, exact metrics, peephole cancellation
//! and QASM-style emission.

use std::fmt::Write as _;

use crate::{real, Real};

/// Basic gate set. `Gy` is the fixed Y-basis change satisfying
/// `Gy * Z * Gy^dag = Y` (concretely `S * H`, see the verifier).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate<F> {
    H(usize),
    Gy(usize),
    GyDag(usize),
    Rz(usize, F),
    /// (control, target)
    Cnot(usize, usize),
    Swap(usize, usize),
}

impl<F> Gate<F> {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q) | Gate::Gy(q) | Gate::GyDag(q) | Gate::Rz(q, _) => (q, None),
            Gate::Cnot(a, b) | Gate::Swap(a, b) => (a, Some(b)),
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot(..) | Gate::Swap(..))
    }
}

/// Gate counts of a circuit; SWAPs are accounted as 3 CNOTs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub cnot: usize,
    pub single: usize,
    pub total: usize,
}

/// Ordered gate list over logical or physical qubits. `qubit_map`, when
/// present, records the net wire permutation produced by SWAP insertion:
/// the occupant starting on wire `w` ends on wire `qubit_map[w]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<F> {
    pub n_qubits: usize,
    pub gates: Vec<Gate<F>>,
    pub qubit_map: Option<Vec<usize>>,
}

impl<F: Real> Circuit<F> {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new(), qubit_map: None }
    }

    pub fn push(&mut self, gate: Gate<F>) {
        debug_assert!({
            let (a, b) = gate.qubits();
            a < self.n_qubits && b.map_or(true, |b| b < self.n_qubits)
        });
        self.gates.push(gate);
    }

    pub fn counts(&self) -> Counts {
        let mut cnot = 0;
        let mut single = 0;
        for g in &self.gates {
            match g {
                Gate::Cnot(..) => cnot += 1,
                Gate::Swap(..) => cnot += 3,
                _ => single += 1,
            }
        }
        Counts { cnot, single, total: cnot + single }
    }

    pub fn swap_count(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::Swap(..))).count()
    }

    /// ASAP-scheduled depth; SWAP occupies 3 levels on both wires.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.n_qubits];
        for g in &self.gates {
            let cost = if matches!(g, Gate::Swap(..)) { 3 } else { 1 };
            match g.qubits() {
                (a, Some(b)) => {
                    let t = level[a].max(level[b]) + cost;
                    level[a] = t;
                    level[b] = t;
                }
                (a, None) => level[a] += cost,
            }
        }
        level.into_iter().max().unwrap_or(0)
    }

    /// Net wire permutation realized by the SWAP gates of this circuit.
    pub fn replay_swap_permutation(&self) -> Vec<usize> {
        // occupant[w] = index of the wire whose initial occupant now sits on w
        let mut occupant: Vec<usize> = (0..self.n_qubits).collect();
        for g in &self.gates {
            if let Gate::Swap(a, b) = *g {
                occupant.swap(a, b);
            }
        }
        let mut perm = vec![0usize; self.n_qubits];
        for (wire, &orig) in occupant.iter().enumerate() {
            perm[orig] = wire;
        }
        perm
    }

    /// OpenQASM-2-style listing. `Gy` is emitted as its `h; s` decomposition
    /// with a comment tag, `GyDag` as `sdg; h`.
    pub fn emit_qasm(&self) -> String {
        let mut out = String::new();
        out.push_str("OPENQASM 2.0;\n");
        out.push_str("include \"qelib1.inc\";\n");
        let _ = writeln!(out, "qreg q[{}];", self.n_qubits);
        for g in &self.gates {
            match g {
                Gate::H(q) => {
                    let _ = writeln!(out, "h q[{q}];");
                }
                Gate::Gy(q) => {
                    let _ = writeln!(out, "// gy q[{q}]");
                    let _ = writeln!(out, "h q[{q}];");
                    let _ = writeln!(out, "s q[{q}];");
                }
                Gate::GyDag(q) => {
                    let _ = writeln!(out, "// gy_dag q[{q}]");
                    let _ = writeln!(out, "sdg q[{q}];");
                    let _ = writeln!(out, "h q[{q}];");
                }
                Gate::Rz(q, angle) => {
                    let _ = writeln!(out, "rz({angle}) q[{q}];");
                }
                Gate::Cnot(c, t) => {
                    let _ = writeln!(out, "cx q[{c}],q[{t}];");
                }
                Gate::Swap(a, b) => {
                    let _ = writeln!(out, "swap q[{a}],q[{b}];");
                }
            }
        }
        out
    }
}

/// Removes adjacent self-inverse pairs (CNOT/CNOT, H/H, Gy/GyDag in either
/// order) and merges adjacent RZ gates on the same qubit, where adjacency
/// means no intervening gate touches any involved wire. Runs to fixpoint.
pub fn peephole_cancel<F: Real>(c: &Circuit<F>) -> Circuit<F> {
    let mut kept: Vec<Option<Gate<F>>> = Vec::with_capacity(c.gates.len());
    // per-wire index of the latest kept gate touching it
    let mut top: Vec<Option<usize>> = vec![None; c.n_qubits];

    let two_pi = F::PI() * real::<F>(2.0);
    let tol = real::<F>(1e-12);

    for &gate in &c.gates {
        match gate {
            Gate::H(q) => {
                if let Some(i) = top[q] {
                    if kept[i] == Some(Gate::H(q)) {
                        kept[i] = None;
                        top[q] = prev_on_wire(&kept, i, q);
                        continue;
                    }
                }
                push_gate(&mut kept, &mut top, gate);
            }
            Gate::Gy(q) | Gate::GyDag(q) => {
                let inverse = match gate {
                    Gate::Gy(_) => Gate::GyDag(q),
                    _ => Gate::Gy(q),
                };
                if let Some(i) = top[q] {
                    if kept[i] == Some(inverse) {
                        kept[i] = None;
                        top[q] = prev_on_wire(&kept, i, q);
                        continue;
                    }
                }
                push_gate(&mut kept, &mut top, gate);
            }
            Gate::Rz(q, angle) => {
                if let Some(i) = top[q] {
                    if let Some(Gate::Rz(_, prev)) = kept[i] {
                        let sum = prev + angle;
                        let r = ((sum % two_pi) + two_pi) % two_pi;
                        if r.min((two_pi - r).abs()) < tol {
                            kept[i] = None;
                            top[q] = prev_on_wire(&kept, i, q);
                        } else {
                            kept[i] = Some(Gate::Rz(q, sum));
                        }
                        continue;
                    }
                }
                push_gate(&mut kept, &mut top, gate);
            }
            Gate::Cnot(a, b) | Gate::Swap(a, b) => {
                if let (Some(i), Some(j)) = (top[a], top[b]) {
                    if i == j && kept[i] == Some(gate) {
                        kept[i] = None;
                        top[a] = prev_on_wire(&kept, i, a);
                        top[b] = prev_on_wire(&kept, i, b);
                        continue;
                    }
                }
                push_gate(&mut kept, &mut top, gate);
            }
        }
    }

    Circuit {
        n_qubits: c.n_qubits,
        gates: kept.into_iter().flatten().collect(),
        qubit_map: c.qubit_map.clone(),
    }
}

fn push_gate<F: Real>(kept: &mut Vec<Option<Gate<F>>>, top: &mut [Option<usize>], gate: Gate<F>) {
    let idx = kept.len();
    kept.push(Some(gate));
    let (a, b) = gate.qubits();
    top[a] = Some(idx);
    if let Some(b) = b {
        top[b] = Some(idx);
    }
}

fn prev_on_wire<F: Real>(kept: &[Option<Gate<F>>], from: usize, wire: usize) -> Option<usize> {
    kept[..from].iter().enumerate().rev().find_map(|(i, g)| {
        g.as_ref().and_then(|g| {
            let (a, b) = g.qubits();
            (a == wire || b == Some(wire)).then_some(i)
        })
    })
}
