//! Benchmark program generators: nearest-neighbour lattice models, random
//! Hamiltonians and QAOA MaxCut ansatzes.

use log::warn;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pauli::{Parameter, PauliAxis, PauliBlock, PauliString, Program, WeightedString};
use crate::{real, Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeModel {
    Ising,
    Heisenberg,
}

/// Nearest-neighbour lattice over 1 to 3 dimensions, row-major indexing.
#[derive(Debug, Clone)]
pub struct LatticeSpec {
    pub dims: Vec<usize>,
    pub model: LatticeModel,
}

#[derive(Debug, Clone)]
pub enum GraphSpec {
    Regular { n: usize, degree: usize, seed: u64 },
    Random { n: usize, edge_prob: f64, seed: u64 },
}

fn lattice_edges(dims: &[usize]) -> Vec<(usize, usize)> {
    let strides: Vec<usize> = {
        let mut s = vec![1usize; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * dims[i + 1];
        }
        s
    };
    let n: usize = dims.iter().product();
    let mut edges = Vec::new();
    for site in 0..n {
        let mut coords = Vec::with_capacity(dims.len());
        let mut rest = site;
        for &s in &strides {
            coords.push(rest / s);
            rest %= s;
        }
        // per site, emit the fastest-varying axis first
        for axis in (0..dims.len()).rev() {
            if coords[axis] + 1 < dims[axis] {
                edges.push((site, site + strides[axis]));
            }
        }
    }
    edges
}

/// One block per lattice edge: Ising blocks hold a single ZZ string,
/// Heisenberg blocks hold XX, YY and ZZ sharing the edge parameter.
pub fn gen_lattice<F: Real>(spec: &LatticeSpec) -> Result<Program<F>> {
    if spec.dims.is_empty() || spec.dims.len() > 3 {
        return Err(Error::InvalidSpec("lattice needs 1 to 3 dimensions".into()));
    }
    let n: usize = spec.dims.iter().product();
    if n < 2 {
        return Err(Error::InvalidSpec("lattice needs at least 2 sites".into()));
    }
    let axes: &[PauliAxis] = match spec.model {
        LatticeModel::Ising => &[PauliAxis::Z],
        LatticeModel::Heisenberg => &[PauliAxis::X, PauliAxis::Y, PauliAxis::Z],
    };
    let blocks = lattice_edges(&spec.dims)
        .into_iter()
        .map(|(a, b)| {
            let strings = axes
                .iter()
                .map(|&ax| WeightedString {
                    string: PauliString::from_support(n, &[(a, ax), (b, ax)]),
                    weight: F::one(),
                })
                .collect();
            PauliBlock::new(strings, Parameter::Literal(F::one()))
        })
        .collect();
    Program::new(n, blocks)
}

/// `5 n^2` single-string blocks; each string picks a uniform size `m` in
/// `1..=n`, `m` distinct qubits, uniform axes from `{X,Y,Z}` and a uniform
/// weight in `[-1, 1]`. Deterministic in the seed.
pub fn gen_random_hamiltonian<F: Real>(n: usize, seed: u64) -> Result<Program<F>> {
    if n == 0 {
        return Err(Error::InvalidSpec("need at least one qubit".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axes = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];
    let blocks = (0..5 * n * n)
        .map(|_| {
            let m = rng.gen_range(1..=n);
            let mut qubits: Vec<usize> = (0..n).collect();
            qubits.shuffle(&mut rng);
            let support: Vec<(usize, PauliAxis)> =
                qubits[..m].iter().map(|&q| (q, axes[rng.gen_range(0..3)])).collect();
            let weight = real::<F>(rng.gen_range(-1.0..=1.0));
            PauliBlock::new(
                vec![WeightedString { string: PauliString::from_support(n, &support), weight }],
                Parameter::Literal(F::one()),
            )
        })
        .collect();
    Program::new(n, blocks)
}

fn regular_graph(n: usize, degree: usize, seed: u64) -> Result<Vec<(usize, usize)>> {
    if n * degree % 2 != 0 {
        return Err(Error::InvalidSpec(format!(
            "no {degree}-regular graph on {n} nodes: odd stub count"
        )));
    }
    if degree >= n {
        return Err(Error::InvalidSpec("regular degree must be below the node count".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // pairing model with rejection of loops and parallel edges
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
        stubs.shuffle(&mut rng);
        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(n * degree / 2);
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || !seen.insert((a, b)) {
                continue 'attempt;
            }
            edges.push((a, b));
        }
        edges.sort_unstable();
        return Ok(edges);
    }
    Err(Error::InvalidSpec("regular graph sampling did not converge".into()))
}

fn random_graph(n: usize, p: f64, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Single block with symbolic parameter `gamma`, one ZZ string per edge.
pub fn gen_qaoa_maxcut<F: Real>(spec: &GraphSpec) -> Result<Program<F>> {
    let (n, edges) = match *spec {
        GraphSpec::Regular { n, degree, seed } => (n, regular_graph(n, degree, seed)?),
        GraphSpec::Random { n, edge_prob, seed } => {
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(Error::InvalidSpec("edge probability must lie in [0,1]".into()));
            }
            (n, random_graph(n, edge_prob, seed))
        }
    };
    if edges.is_empty() {
        warn!("generated graph has no edges; the ansatz block is empty");
    }
    let strings = edges
        .iter()
        .map(|&(a, b)| WeightedString {
            string: PauliString::from_support(n, &[(a, PauliAxis::Z), (b, PauliAxis::Z)]),
            weight: F::one(),
        })
        .collect();
    Program::new(n, vec![PauliBlock::new(strings, Parameter::Symbol("gamma".into()))])
}

/// Naive-synthesis counts of a program: each weight-k string costs
/// `2(k-1)` CNOTs and `1 + 2(#X + #Y)` single-qubit gates.
pub fn naive_counts<F: Real>(p: &Program<F>) -> (usize, usize) {
    let mut cnot = 0;
    let mut single = 0;
    for block in &p.blocks {
        for ws in &block.strings {
            let k = ws.string.weight();
            if k == 0 {
                continue;
            }
            cnot += 2 * (k - 1);
            let basis = ws
                .string
                .axes()
                .iter()
                .filter(|a| matches!(a, PauliAxis::X | PauliAxis::Y))
                .count();
            single += 1 + 2 * basis;
        }
    }
    (cnot, single)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ising_chain_counts() {
        let p: Program<f64> =
            gen_lattice(&LatticeSpec { dims: vec![30], model: LatticeModel::Ising }).unwrap();
        assert_eq!(p.n_qubits, 30);
        assert_eq!(p.n_strings(), 29);
        assert_eq!(naive_counts(&p), (58, 29));
    }

    #[test]
    fn grid_edge_count_matches_enumeration() {
        let p: Program<f64> =
            gen_lattice(&LatticeSpec { dims: vec![6, 5], model: LatticeModel::Ising }).unwrap();
        // 6 rows x 5 cols: 6*4 horizontal + 5*5 vertical
        assert_eq!(p.n_strings(), 49);
        let mut expected = 0;
        for r in 0..6 {
            for c in 0..5 {
                if c + 1 < 5 {
                    expected += 1;
                }
                if r + 1 < 6 {
                    expected += 1;
                }
                let _ = (r, c);
            }
        }
        assert_eq!(expected, 49);
    }

    #[test]
    fn heisenberg_blocks_share_edges() {
        let p: Program<f64> =
            gen_lattice(&LatticeSpec { dims: vec![5, 3, 2], model: LatticeModel::Heisenberg })
                .unwrap();
        assert_eq!(p.blocks.len(), 59);
        assert_eq!(p.n_strings(), 177);
        assert_eq!(naive_counts(&p), (354, 649));
        for b in &p.blocks {
            assert_eq!(b.strings.len(), 3);
            assert_eq!(b.active_length(), 2);
            assert_eq!(b.core_qubits().len(), 2);
        }
    }

    #[test]
    fn random_hamiltonian_is_seed_deterministic() {
        let a: Program<f64> = gen_random_hamiltonian(6, 3).unwrap();
        let b: Program<f64> = gen_random_hamiltonian(6, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n_strings(), 180);
        let c: Program<f64> = gen_random_hamiltonian(6, 4).unwrap();
        assert_ne!(a, c);

        let single: Program<f64> = gen_random_hamiltonian(1, 0).unwrap();
        assert_eq!(single.n_strings(), 5);
        for b in &single.blocks {
            assert_eq!(b.strings[0].string.weight(), 1);
        }
    }

    #[test]
    fn qaoa_generators() {
        let p: Program<f64> =
            gen_qaoa_maxcut(&GraphSpec::Regular { n: 20, degree: 4, seed: 0 }).unwrap();
        assert_eq!(p.blocks.len(), 1);
        assert_eq!(p.n_strings(), 40);
        assert_eq!(naive_counts(&p), (80, 40));
        assert_eq!(p.blocks[0].parameter, Parameter::Symbol("gamma".into()));

        assert!(gen_qaoa_maxcut::<f64>(&GraphSpec::Regular { n: 5, degree: 3, seed: 0 }).is_err());

        let empty: Program<f64> =
            gen_qaoa_maxcut(&GraphSpec::Random { n: 4, edge_prob: 0.0, seed: 0 }).unwrap();
        assert_eq!(empty.n_strings(), 0);
    }
}
