//! Brute-force dense unitary oracle. Small circuits are multiplied out
//! exactly and compared, up to global phase, against the ordered product of
//! Pauli-string exponentials they are supposed to realize.

use num_complex::Complex;

use crate::circuit::{Circuit, Gate};
use crate::pauli::{apply_string_basis, PauliString};
use crate::{real, Error, Real, Result};

/// Cap on the gate-level oracle.
pub const UNITARY_MAX_QUBITS: usize = 10;

/// Dense complex matrix over `2^n` dimensions, column-major.
#[derive(Debug, Clone)]
pub struct Dense<F> {
    n_qubits: usize,
    dim: usize,
    data: Vec<Complex<F>>,
}

impl<F: Real> Dense<F> {
    pub fn zeros(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        Self { n_qubits, dim, data: vec![Complex::new(F::zero(), F::zero()); dim * dim] }
    }

    pub fn identity(n_qubits: usize) -> Self {
        let mut m = Self::zeros(n_qubits);
        for i in 0..m.dim {
            m.data[i * m.dim + i] = Complex::new(F::one(), F::zero());
        }
        m
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<F> {
        self.data[col * self.dim + row]
    }

    #[inline]
    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut Complex<F> {
        &mut self.data[col * self.dim + row]
    }

    fn column_mut(&mut self, col: usize) -> &mut [Complex<F>] {
        &mut self.data[col * self.dim..(col + 1) * self.dim]
    }

    /// Left-multiplies by a single-qubit gate on `qubit`.
    fn apply_1q(&mut self, qubit: usize, g: [[Complex<F>; 2]; 2]) {
        let bit = 1usize << qubit;
        let dim = self.dim;
        for col in 0..dim {
            let v = self.column_mut(col);
            for r0 in 0..dim {
                if r0 & bit == 0 {
                    let r1 = r0 | bit;
                    let a = v[r0];
                    let b = v[r1];
                    v[r0] = g[0][0] * a + g[0][1] * b;
                    v[r1] = g[1][0] * a + g[1][1] * b;
                }
            }
        }
    }

    fn apply_cnot(&mut self, control: usize, target: usize) {
        let cbit = 1usize << control;
        let tbit = 1usize << target;
        let dim = self.dim;
        for col in 0..dim {
            let v = self.column_mut(col);
            for r in 0..dim {
                if r & cbit != 0 && r & tbit == 0 {
                    v.swap(r, r | tbit);
                }
            }
        }
    }

    fn apply_swap(&mut self, a: usize, b: usize) {
        let abit = 1usize << a;
        let bbit = 1usize << b;
        let dim = self.dim;
        for col in 0..dim {
            let v = self.column_mut(col);
            for r in 0..dim {
                if r & abit != 0 && r & bbit == 0 {
                    v.swap(r, (r & !abit) | bbit);
                }
            }
        }
    }

    fn apply_rz(&mut self, qubit: usize, angle: F) {
        let half = angle / real::<F>(2.0);
        let neg = Complex::from_polar(F::one(), -half);
        let pos = Complex::from_polar(F::one(), half);
        let bit = 1usize << qubit;
        let dim = self.dim;
        for col in 0..dim {
            let v = self.column_mut(col);
            for (r, entry) in v.iter_mut().enumerate() {
                *entry = *entry * if r & bit == 0 { neg } else { pos };
            }
        }
    }

    /// Left-multiplies by `exp(-i * angle/2 * P)` using `P^2 = I`:
    /// `cos(angle/2) I - i sin(angle/2) P`.
    pub fn apply_string_exp(&mut self, p: &PauliString, angle: F) {
        let half = angle / real::<F>(2.0);
        let cos = Complex::new(half.cos(), F::zero());
        let misin = Complex::new(F::zero(), -half.sin());
        let dim = self.dim;
        let mut scratch = vec![Complex::new(F::zero(), F::zero()); dim];
        for col in 0..dim {
            let v = self.column_mut(col);
            for r in 0..dim {
                // (P v)[r] = phase(r ^ mask) * v[r ^ mask]
                let (src, phase) = apply_string_basis::<F>(p, r);
                scratch[src] = misin * phase * v[r];
            }
            for r in 0..dim {
                v[r] = cos * v[r] + scratch[r];
            }
        }
    }

    /// Largest entry deviation from `U U^dag = I`.
    pub fn unitarity_deviation(&self) -> F {
        let dim = self.dim;
        let mut worst = F::zero();
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = Complex::new(F::zero(), F::zero());
                for k in 0..dim {
                    acc = acc + self.get(r, k) * self.get(c, k).conj();
                }
                let expect = if r == c { F::one() } else { F::zero() };
                let d = (acc - Complex::new(expect, F::zero())).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }
}

/// The fixed Y-basis change gate: `GY = S * H`, which satisfies
/// `GY * Z * GY^dag = Y`.
pub(crate) fn gy_matrix<F: Real>() -> [[Complex<F>; 2]; 2] {
    let s = real::<F>(std::f64::consts::FRAC_1_SQRT_2);
    let re = |x: F| Complex::new(x, F::zero());
    let im = |x: F| Complex::new(F::zero(), x);
    [[re(s), re(s)], [im(s), im(-s)]]
}

pub(crate) fn gy_dag_matrix<F: Real>() -> [[Complex<F>; 2]; 2] {
    let g = gy_matrix::<F>();
    [[g[0][0].conj(), g[1][0].conj()], [g[0][1].conj(), g[1][1].conj()]]
}

fn h_matrix<F: Real>() -> [[Complex<F>; 2]; 2] {
    let s = real::<F>(std::f64::consts::FRAC_1_SQRT_2);
    let re = |x: F| Complex::new(x, F::zero());
    [[re(s), re(s)], [re(s), re(-s)]]
}

/// Ordered product of the circuit's gate matrices.
pub fn circuit_unitary<F: Real>(c: &Circuit<F>) -> Result<Dense<F>> {
    if c.n_qubits > UNITARY_MAX_QUBITS {
        return Err(Error::SizeCap { n: c.n_qubits, max: UNITARY_MAX_QUBITS });
    }
    let mut u = Dense::identity(c.n_qubits);
    for gate in &c.gates {
        match *gate {
            Gate::H(q) => u.apply_1q(q, h_matrix()),
            Gate::Gy(q) => u.apply_1q(q, gy_matrix()),
            Gate::GyDag(q) => u.apply_1q(q, gy_dag_matrix()),
            Gate::Rz(q, angle) => u.apply_rz(q, angle),
            Gate::Cnot(ctl, tgt) => u.apply_cnot(ctl, tgt),
            Gate::Swap(a, b) => u.apply_swap(a, b),
        }
    }
    Ok(u)
}

/// `exp(-i * angle/2 * P)` as a dense matrix.
pub fn string_exponential<F: Real>(p: &PauliString, angle: F) -> Result<Dense<F>> {
    if p.len() > UNITARY_MAX_QUBITS {
        return Err(Error::SizeCap { n: p.len(), max: UNITARY_MAX_QUBITS });
    }
    let mut u = Dense::identity(p.len());
    u.apply_string_exp(p, angle);
    Ok(u)
}

/// Maximum entry difference between two matrices after aligning a global
/// phase on the largest-magnitude reference entry.
pub fn max_deviation_up_to_phase<F: Real>(got: &Dense<F>, want: &Dense<F>) -> F {
    let dim = want.dim();
    let mut best = (F::zero(), 0usize, 0usize);
    for r in 0..dim {
        for c in 0..dim {
            let m = want.get(r, c).norm();
            if m > best.0 {
                best = (m, r, c);
            }
        }
    }
    let (_, r0, c0) = best;
    // unit phase of got/want at the reference entry
    let ratio = got.get(r0, c0) * want.get(r0, c0).conj();
    let phase = if ratio.norm() > real::<F>(1e-12) {
        ratio / Complex::new(ratio.norm(), F::zero())
    } else {
        Complex::new(F::one(), F::zero())
    };
    let mut worst = F::zero();
    for r in 0..dim {
        for c in 0..dim {
            let d = (got.get(r, c) * phase.conj() - want.get(r, c)).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Checks that a circuit realizes the ordered product of string exponentials
/// it claims to emit, modulo the recorded final wire permutation and a global
/// phase. `emitted` lists `(string, angle)` pairs in emission order, with
/// strings expressed on circuit wires at their initial positions.
pub fn check_equivalence<F: Real>(
    c: &Circuit<F>,
    emitted: &[(PauliString, F)],
    perm: Option<&[usize]>,
) -> Result<F> {
    let u = circuit_unitary(c)?;
    let dim = u.dim();

    // W = Perm^-1 * U, where Perm maps bit w to bit perm[w].
    let mut w = Dense::zeros(c.n_qubits);
    match perm {
        Some(p) => {
            for col in 0..dim {
                for row in 0..dim {
                    let mut src = 0usize;
                    for (bit, &dst) in p.iter().enumerate() {
                        if row >> bit & 1 == 1 {
                            src |= 1 << dst;
                        }
                    }
                    *w.get_mut(row, col) = u.get(src, col);
                }
            }
        }
        None => w = u,
    }

    let mut v = Dense::identity(c.n_qubits);
    for (s, angle) in emitted {
        if s.len() != c.n_qubits {
            return Err(Error::LengthMismatch { expected: c.n_qubits, got: s.len() });
        }
        v.apply_string_exp(s, *angle);
    }
    Ok(max_deviation_up_to_phase(&w, &v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;

    #[test]
    fn empty_circuit_is_identity() {
        let c: Circuit<f64> = Circuit::new(2);
        let u = circuit_unitary(&c).unwrap();
        for r in 0..4 {
            for col in 0..4 {
                let want = if r == col { 1.0 } else { 0.0 };
                assert!((u.get(r, col) - Complex::new(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn hadamard_matrix() {
        let mut c: Circuit<f64> = Circuit::new(1);
        c.gates.push(Gate::H(0));
        let u = circuit_unitary(&c).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((u.get(0, 0).re - s).abs() < 1e-15);
        assert!((u.get(1, 1).re + s).abs() < 1e-15);
    }

    #[test]
    fn cnot_is_self_inverse() {
        let mut c: Circuit<f64> = Circuit::new(2);
        c.gates.push(Gate::Cnot(0, 1));
        c.gates.push(Gate::Cnot(0, 1));
        let u = circuit_unitary(&c).unwrap();
        let id = Dense::identity(2);
        assert!(max_deviation_up_to_phase(&u, &id) < 1e-15);
    }

    #[test]
    fn gy_conjugates_z_to_y() {
        let mut gz: Circuit<f64> = Circuit::new(1);
        gz.gates.push(Gate::GyDag(0));
        gz.gates.push(Gate::Rz(0, 1.0));
        gz.gates.push(Gate::Gy(0));
        // GY * exp(-i t Z/2) * GY^dag applied as circuit order GyDag, Rz, Gy
        // equals exp(-i t Y/2).
        let u = circuit_unitary(&gz).unwrap();
        let want = string_exponential(&"Y".parse().unwrap(), 1.0).unwrap();
        assert!(max_deviation_up_to_phase(&u, &want) < 1e-12);
    }

    #[test]
    fn string_exponential_angles() {
        let z: PauliString = "Z".parse().unwrap();
        let u = string_exponential(&z, 0.0).unwrap();
        assert!(max_deviation_up_to_phase(&u, &Dense::identity(1)) < 1e-15);

        let theta = 0.7;
        let u = string_exponential(&z, theta).unwrap();
        assert!((u.get(0, 0) - Complex::from_polar(1.0, -theta / 2.0)).norm() < 1e-15);
        assert!((u.get(1, 1) - Complex::from_polar(1.0, theta / 2.0)).norm() < 1e-15);

        // angle 2*pi is -I, a pure global phase.
        let xx: PauliString = "XX".parse().unwrap();
        let u = string_exponential(&xx, 2.0 * std::f64::consts::PI).unwrap();
        for r in 0..4 {
            assert!((u.get(r, r) + Complex::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn rz_circuit_matches_z_exponential() {
        let mut c: Circuit<f64> = Circuit::new(1);
        c.gates.push(Gate::Rz(0, 0.37));
        let dev = check_equivalence(&c, &[("Z".parse().unwrap(), 0.37)], None).unwrap();
        assert!(dev < 1e-15);
    }

    #[test]
    fn swap_with_permutation_is_identity() {
        let mut c: Circuit<f64> = Circuit::new(2);
        c.gates.push(Gate::Swap(0, 1));
        // occupant of wire 0 ends on wire 1 and vice versa
        let dev = check_equivalence(&c, &[], Some(&[1, 0])).unwrap();
        assert!(dev < 1e-15);
    }

    #[test]
    fn corruption_is_detected() {
        let mut c: Circuit<f64> = Circuit::new(2);
        c.gates.push(Gate::Cnot(0, 1));
        // claims identity but applies a CNOT
        let dev = check_equivalence(&c, &[], None).unwrap();
        assert!(dev > 0.5);
    }
}
