//! Coupling-constrained device models: coupling graph, per-edge two-qubit
//! error rates, built-in topologies and error-aware shortest paths.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Deserialize;

use crate::{real, Error, Real, Result};

const DEFAULT_EDGE_ERROR: f64 = 0.01;

/// Coupling graph with error annotations. The graph must be connected and
/// every error rate finite and below 1.
#[derive(Debug, Clone)]
pub struct DeviceModel<F> {
    pub n_physical: usize,
    edges: Vec<(usize, usize, F)>,
    adjacency: Vec<Vec<(usize, F)>>,
    pub single_error: Option<Vec<F>>,
}

#[derive(Deserialize)]
struct RawEdge {
    a: usize,
    b: usize,
    #[serde(default)]
    error: Option<f64>,
}

#[derive(Deserialize)]
struct RawDevice {
    qubits: usize,
    edges: Vec<RawEdge>,
    #[serde(default)]
    single_error: Option<Vec<f64>>,
}

impl<F: Real> DeviceModel<F> {
    pub fn new(n_physical: usize, edge_list: Vec<(usize, usize, F)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n_physical];
        for &(a, b, e) in &edge_list {
            if a >= n_physical || b >= n_physical || a == b {
                return Err(Error::InvalidDevice(format!("bad edge ({a},{b})")));
            }
            if !(e >= F::zero() && e < F::one()) {
                return Err(Error::InvalidDevice(format!("edge ({a},{b}) error out of range")));
            }
            adjacency[a].push((b, e));
            adjacency[b].push((a, e));
        }
        for adj in &mut adjacency {
            adj.sort_by(|x, y| x.0.cmp(&y.0));
        }
        let d = Self { n_physical, edges: edge_list, adjacency, single_error: None };
        if !d.is_connected() {
            return Err(Error::InvalidDevice("coupling graph is not connected".into()));
        }
        Ok(d)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDevice =
            serde_json::from_str(text).map_err(|e| Error::InvalidDevice(e.to_string()))?;
        let edges = raw
            .edges
            .into_iter()
            .map(|e| (e.a, e.b, real(e.error.unwrap_or(DEFAULT_EDGE_ERROR))))
            .collect();
        let mut d = Self::new(raw.qubits, edges)?;
        if let Some(se) = raw.single_error {
            if se.len() != raw.qubits {
                return Err(Error::InvalidDevice("single_error length mismatch".into()));
            }
            d.single_error = Some(se.into_iter().map(real).collect());
        }
        Ok(d)
    }

    /// Built-in topologies: `linear:<n>`, `grid:<r>x<c>`, `manhattan65`.
    pub fn builtin(name: &str) -> Result<Self> {
        if let Some(n) = name.strip_prefix("linear:") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidDevice(format!("bad linear size `{n}`")))?;
            if n < 1 {
                return Err(Error::InvalidDevice("linear device needs at least 1 qubit".into()));
            }
            let err = real(DEFAULT_EDGE_ERROR);
            return Self::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1, err)).collect());
        }
        if let Some(dims) = name.strip_prefix("grid:") {
            let (r, c) = dims
                .split_once('x')
                .ok_or_else(|| Error::InvalidDevice(format!("bad grid spec `{dims}`")))?;
            let rows: usize =
                r.parse().map_err(|_| Error::InvalidDevice(format!("bad grid rows `{r}`")))?;
            let cols: usize =
                c.parse().map_err(|_| Error::InvalidDevice(format!("bad grid cols `{c}`")))?;
            if rows == 0 || cols == 0 {
                return Err(Error::InvalidDevice("grid dimensions must be positive".into()));
            }
            let err = real(DEFAULT_EDGE_ERROR);
            let mut edges = Vec::new();
            for row in 0..rows {
                for col in 0..cols {
                    let q = row * cols + col;
                    if col + 1 < cols {
                        edges.push((q, q + 1, err));
                    }
                    if row + 1 < rows {
                        edges.push((q, q + cols, err));
                    }
                }
            }
            return Self::new(rows * cols, edges);
        }
        if name == "manhattan65" {
            return Self::from_json(include_str!("../data/manhattan65.json"));
        }
        Err(Error::InvalidDevice(format!("unknown builtin device `{name}`")))
    }

    pub fn edges(&self) -> &[(usize, usize, F)] {
        &self.edges
    }

    pub fn neighbors(&self, q: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[q].iter().map(|&(n, _)| n)
    }

    pub fn degree(&self, q: usize) -> usize {
        self.adjacency[q].len()
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].iter().any(|&(n, _)| n == b)
    }

    fn is_connected(&self) -> bool {
        if self.n_physical == 0 {
            return false;
        }
        let mut seen = vec![false; self.n_physical];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(q) = stack.pop() {
            for n in self.neighbors(q) {
                if !seen[n] {
                    seen[n] = true;
                    count += 1;
                    stack.push(n);
                }
            }
        }
        count == self.n_physical
    }

    /// Dijkstra cost of an edge: `-ln(1 - error)`, so path cost maximizes
    /// the product of success probabilities.
    fn edge_cost(&self, a: usize, b: usize) -> F {
        let e = self.adjacency[a]
            .iter()
            .find(|&&(n, _)| n == b)
            .map(|&(_, e)| e)
            .expect("edge exists");
        -(F::one() - e).ln()
    }

    /// Lowest-error path between two physical qubits; ties broken toward the
    /// lexicographically smallest vertex sequence. `a == b` yields `[a]`.
    pub fn cheapest_path(&self, a: usize, b: usize) -> Vec<usize> {
        self.cheapest_path_to_set(a, &[b])
    }

    /// Lowest-error path from `a` to the nearest of `targets`.
    pub fn cheapest_path_to_set(&self, a: usize, targets: &[usize]) -> Vec<usize> {
        if targets.contains(&a) {
            return vec![a];
        }
        #[derive(PartialEq)]
        struct Entry<F>(F, Vec<usize>);
        impl<F: PartialOrd> Eq for Entry<F> {}
        impl<F: PartialOrd> PartialOrd for Entry<F> {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl<F: PartialOrd> Ord for Entry<F> {
            fn cmp(&self, other: &Self) -> Ordering {
                // reversed: BinaryHeap is a max-heap
                other
                    .0
                    .partial_cmp(&self.0)
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| other.1.cmp(&self.1))
            }
        }

        let mut heap = BinaryHeap::new();
        let mut done = vec![false; self.n_physical];
        heap.push(Entry(F::zero(), vec![a]));
        while let Some(Entry(cost, path)) = heap.pop() {
            let last = *path.last().unwrap();
            if targets.contains(&last) {
                return path;
            }
            if done[last] {
                continue;
            }
            done[last] = true;
            for &(n, _) in &self.adjacency[last] {
                if !done[n] {
                    let mut p = path.clone();
                    p.push(n);
                    heap.push(Entry(cost + self.edge_cost(last, n), p));
                }
            }
        }
        unreachable!("device graph is connected");
    }

    /// Hop distance between two physical qubits.
    pub fn hop_distance(&self, a: usize, b: usize) -> usize {
        if a == b {
            return 0;
        }
        let mut dist = vec![usize::MAX; self.n_physical];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(q) = queue.pop_front() {
            for n in self.neighbors(q) {
                if dist[n] == usize::MAX {
                    dist[n] = dist[q] + 1;
                    if n == b {
                        return dist[n];
                    }
                    queue.push_back(n);
                }
            }
        }
        unreachable!("device graph is connected");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let d: DeviceModel<f64> = DeviceModel::builtin("linear:5").unwrap();
        assert_eq!(d.n_physical, 5);
        assert_eq!(d.edges().len(), 4);

        let d: DeviceModel<f64> = DeviceModel::builtin("grid:2x3").unwrap();
        assert_eq!(d.n_physical, 6);
        assert_eq!(d.edges().len(), 7);

        let d: DeviceModel<f64> = DeviceModel::builtin("manhattan65").unwrap();
        assert_eq!(d.n_physical, 65);
        assert_eq!(d.edges().len(), 72);
        assert!(DeviceModel::<f64>::builtin("ring:4").is_err());
    }

    #[test]
    fn uniform_errors_give_hop_shortest_paths() {
        let d: DeviceModel<f64> = DeviceModel::builtin("grid:2x3").unwrap();
        // 0 1 2
        // 3 4 5
        let p = d.cheapest_path(0, 5);
        assert_eq!(p.len(), 4);
        assert_eq!(p[0], 0);
        assert_eq!(*p.last().unwrap(), 5);
        // lexicographic tie-break picks 0-1-2-5 over 0-1-4-5 and 0-3-4-5
        assert_eq!(p, vec![0, 1, 2, 5]);
        assert_eq!(d.cheapest_path(3, 3), vec![3]);
    }

    #[test]
    fn high_error_edge_forces_a_detour() {
        let d: DeviceModel<f64> =
            DeviceModel::new(3, vec![(0, 2, 0.5), (0, 1, 0.01), (1, 2, 0.01)]).unwrap();
        assert_eq!(d.cheapest_path(0, 2), vec![0, 1, 2]);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"qubits":3,"edges":[{"a":0,"b":1,"error":0.02},{"a":1,"b":2}]}"#;
        let d: DeviceModel<f64> = DeviceModel::from_json(text).unwrap();
        assert_eq!(d.n_physical, 3);
        assert!(d.are_adjacent(0, 1));
        assert!(!d.are_adjacent(0, 2));

        let bad = r#"{"qubits":4,"edges":[{"a":0,"b":1}]}"#;
        assert!(DeviceModel::<f64>::from_json(bad).is_err());
    }
}
