//! Pauli IR data model: axes, strings, weighted blocks and whole programs,
//! plus the exact Hamiltonian-matrix semantics used by the verifier.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::verify::Dense;
use crate::{real, Error, Real, Result};

/// Single-qubit Pauli axis. The derived order `X < Y < Z < I` is the
/// lexicographic order used by every scheduling pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
    I,
}

impl PauliAxis {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Self::I),
            'X' => Some(Self::X),
            'Y' => Some(Self::Y),
            'Z' => Some(Self::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::I
    }
}

/// Fixed-length word over `{I, X, Y, Z}`; index `i` addresses qubit `i`.
/// The textual form is written high-qubit-first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    axes: Vec<PauliAxis>,
}

impl PauliString {
    pub fn new(axes: Vec<PauliAxis>) -> Self {
        Self { axes }
    }

    /// All-identity string on `n` qubits.
    pub fn identity(n: usize) -> Self {
        Self { axes: vec![PauliAxis::I; n] }
    }

    /// Builds a string from `(qubit, axis)` pairs, identity elsewhere.
    pub fn from_support(n: usize, support: &[(usize, PauliAxis)]) -> Self {
        let mut axes = vec![PauliAxis::I; n];
        for &(q, a) in support {
            axes[q] = a;
        }
        Self { axes }
    }

    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn axis(&self, qubit: usize) -> PauliAxis {
        self.axes[qubit]
    }

    pub fn axes(&self) -> &[PauliAxis] {
        &self.axes
    }

    /// Qubits carrying a non-identity axis.
    pub fn support(&self) -> BTreeSet<usize> {
        self.axes
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_identity())
            .map(|(q, _)| q)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.axes.iter().filter(|a| !a.is_identity()).count()
    }

    /// Total lexicographic order: walk qubits `n-1` down to `0` under
    /// `X < Y < Z < I`. Errors on length mismatch.
    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(self.lex_ord(other))
    }

    /// Infallible variant used by the schedulers, where equal lengths are a
    /// program invariant.
    pub(crate) fn lex_ord(&self, other: &Self) -> Ordering {
        for (a, b) in self.axes.iter().rev().zip(other.axes.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.axes.iter().rev() {
            write!(f, "{}", a.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut axes = Vec::with_capacity(s.len());
        for (col, c) in s.chars().enumerate() {
            let a = PauliAxis::from_char(c).ok_or(Error::Parse {
                line: 0,
                col: col + 1,
                msg: format!("unknown axis character `{c}`"),
            })?;
            axes.push(a);
        }
        axes.reverse();
        Ok(Self { axes })
    }
}

/// Rotation parameter of a block: a literal value or a named symbol bound at
/// compile time.
#[derive(Debug, Clone, PartialEq)]
pub enum Parameter<F> {
    Literal(F),
    Symbol(String),
}

/// Name-to-value table for symbolic parameters.
pub type Bindings<F> = BTreeMap<String, F>;

impl<F: Real> Parameter<F> {
    pub fn resolve(&self, bindings: &Bindings<F>) -> Result<F> {
        match self {
            Self::Literal(v) => Ok(*v),
            Self::Symbol(name) => {
                bindings.get(name).copied().ok_or_else(|| Error::UnboundSymbol(name.clone()))
            }
        }
    }
}

/// A Pauli string with its real coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedString<F> {
    pub string: PauliString,
    pub weight: F,
}

/// Group of weighted strings sharing one rotation parameter. Blocks are the
/// scheduling unit: no pass ever separates the strings of a block.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliBlock<F> {
    pub strings: Vec<WeightedString<F>>,
    pub parameter: Parameter<F>,
}

impl<F: Real> PauliBlock<F> {
    pub fn new(strings: Vec<WeightedString<F>>, parameter: Parameter<F>) -> Self {
        Self { strings, parameter }
    }

    /// Union of the supports of all strings.
    pub fn active_qubits(&self) -> BTreeSet<usize> {
        let mut acc = BTreeSet::new();
        for ws in &self.strings {
            acc.extend(ws.string.support());
        }
        acc
    }

    /// Intersection of the supports of all strings.
    pub fn core_qubits(&self) -> BTreeSet<usize> {
        let mut iter = self.strings.iter();
        let mut acc = match iter.next() {
            Some(ws) => ws.string.support(),
            None => return BTreeSet::new(),
        };
        for ws in iter {
            let sup = ws.string.support();
            acc.retain(|q| sup.contains(q));
        }
        acc
    }

    pub fn active_length(&self) -> usize {
        self.active_qubits().len()
    }
}

/// An ordered list of blocks over a fixed qubit count. The semantics is the
/// weighted Hamiltonian sum, so block order is irrelevant semantically and
/// free for the scheduler.
#[derive(Debug, Clone, PartialEq)]
pub struct Program<F> {
    pub n_qubits: usize,
    pub blocks: Vec<PauliBlock<F>>,
}

impl<F: Real> Program<F> {
    pub fn new(n_qubits: usize, blocks: Vec<PauliBlock<F>>) -> Result<Self> {
        let p = Self { n_qubits, blocks };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for block in &self.blocks {
            for ws in &block.strings {
                if ws.string.len() != self.n_qubits {
                    return Err(Error::LengthMismatch {
                        expected: self.n_qubits,
                        got: ws.string.len(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn n_strings(&self) -> usize {
        self.blocks.iter().map(|b| b.strings.len()).sum()
    }
}

/// Cap on the dense-matrix oracle.
pub const ORACLE_MAX_QUBITS: usize = 12;

/// Dense Hermitian matrix of the program semantics:
/// sum over blocks of `parameter * sum over strings of weight * (s_{n-1} (x) ... (x) s_0)`.
pub fn hamiltonian_matrix<F: Real>(p: &Program<F>, bindings: &Bindings<F>) -> Result<Dense<F>> {
    if p.n_qubits > ORACLE_MAX_QUBITS {
        return Err(Error::SizeCap { n: p.n_qubits, max: ORACLE_MAX_QUBITS });
    }
    p.validate()?;
    let dim = 1usize << p.n_qubits;
    let mut h = Dense::zeros(p.n_qubits);
    for block in &p.blocks {
        let param = block.parameter.resolve(bindings)?;
        for ws in &block.strings {
            let coeff = Complex::new(param * ws.weight, F::zero());
            // The string operator is a signed permutation: P|b> = phase |b ^ mask>.
            for col in 0..dim {
                let (row, phase) = apply_string_basis(&ws.string, col);
                let entry = h.get_mut(row, col);
                *entry = *entry + coeff * phase;
            }
        }
    }
    debug_assert!(hermitian_deviation(&h) < real::<F>(1e-12));
    Ok(h)
}

/// Applies the tensor-product Pauli operator to a computational basis state,
/// returning the image index and the accumulated phase.
pub(crate) fn apply_string_basis<F: Real>(s: &PauliString, basis: usize) -> (usize, Complex<F>) {
    let one = Complex::new(F::one(), F::zero());
    let i = Complex::new(F::zero(), F::one());
    let mut out = basis;
    let mut phase = one;
    for (q, axis) in s.axes().iter().enumerate() {
        let bit = (basis >> q) & 1;
        match axis {
            PauliAxis::I => {}
            PauliAxis::X => out ^= 1 << q,
            PauliAxis::Y => {
                out ^= 1 << q;
                // Y|0> = i|1>, Y|1> = -i|0>
                phase = phase * if bit == 0 { i } else { -i };
            }
            PauliAxis::Z => {
                if bit == 1 {
                    phase = -phase;
                }
            }
        }
    }
    (out, phase)
}

pub(crate) fn hermitian_deviation<F: Real>(m: &Dense<F>) -> F {
    let dim = m.dim();
    let mut worst = F::zero();
    for r in 0..dim {
        for c in 0..dim {
            let d = (m.get(r, c) - m.get(c, r).conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}
