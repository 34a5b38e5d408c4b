//! Block scheduling passes: gate-count-oriented lexicographic ordering and
//! depth-oriented layer packing.

use std::collections::BTreeSet;

use log::warn;

use crate::pauli::{PauliBlock, PauliString, Program};
use crate::Real;

/// One scheduling layer: a main block plus padded blocks whose active qubits
/// are disjoint from the main block's. Padded blocks may overlap one another;
/// the depth-oriented scheduler happens to emit pairwise-disjoint pads, but
/// hand-built schedules (and the SC pass) only rely on main-disjointness.
#[derive(Debug, Clone)]
pub struct Layer<F> {
    pub main: PauliBlock<F>,
    pub padded: Vec<PauliBlock<F>>,
}

impl<F: Real> Layer<F> {
    pub fn solo(main: PauliBlock<F>) -> Self {
        Self { main, padded: Vec::new() }
    }

    /// Blocks in emission order: main first, then pads.
    pub fn blocks(&self) -> impl Iterator<Item = &PauliBlock<F>> {
        std::iter::once(&self.main).chain(self.padded.iter())
    }

    pub fn validate(&self) -> bool {
        let main_active = self.main.active_qubits();
        self.padded.iter().all(|b| b.active_qubits().is_disjoint(&main_active))
    }
}

/// Ordered layers; the gate-count-oriented output is the degenerate
/// one-block-per-layer case.
#[derive(Debug, Clone)]
pub struct Schedule<F> {
    pub n_qubits: usize,
    pub layers: Vec<Layer<F>>,
}

impl<F: Real> Schedule<F> {
    pub fn blocks(&self) -> impl Iterator<Item = &PauliBlock<F>> {
        self.layers.iter().flat_map(|l| l.blocks())
    }

    pub fn n_blocks(&self) -> usize {
        self.layers.iter().map(|l| 1 + l.padded.len()).sum()
    }
}

/// Closed-form depth estimate of a block's naive synthesis: per string a
/// CNOT ladder down and up plus the central RZ, plus two basis layers when
/// any X or Y axis is present. Empty and all-identity blocks estimate to 0.
pub fn estimate_depth<F: Real>(block: &PauliBlock<F>) -> usize {
    block
        .strings
        .iter()
        .map(|ws| {
            let k = ws.string.weight();
            if k == 0 {
                return 0;
            }
            let basis = ws
                .string
                .axes()
                .iter()
                .any(|a| matches!(a, crate::pauli::PauliAxis::X | crate::pauli::PauliAxis::Y));
            2 * (k - 1) + 1 + if basis { 2 } else { 0 }
        })
        .sum()
}

/// Number of positions where `tail` and the first string of `block` carry
/// the same non-identity axis.
pub fn overlap<F: Real>(tail: &PauliString, block: &PauliBlock<F>) -> usize {
    let Some(first) = block.strings.first() else { return 0 };
    string_overlap(tail, &first.string)
}

pub(crate) fn string_overlap(a: &PauliString, b: &PauliString) -> usize {
    a.axes()
        .iter()
        .zip(b.axes())
        .filter(|(x, y)| !x.is_identity() && *x == *y)
        .count()
}

/// Sorts strings within each block lexicographically and drops blocks whose
/// active set is empty (they synthesize to global phase only).
fn normalized_blocks<F: Real>(p: &Program<F>) -> Vec<PauliBlock<F>> {
    let mut out = Vec::with_capacity(p.blocks.len());
    for block in &p.blocks {
        if block.active_qubits().is_empty() {
            warn!("dropping block with empty active set ({} strings)", block.strings.len());
            continue;
        }
        let mut b = block.clone();
        b.strings.sort_by(|x, y| x.string.lex_ord(&y.string));
        out.push(b);
    }
    out
}

/// Gate-count-oriented scheduling: lexicographic order of blocks keyed by
/// each block's first post-sort string, one block per layer.
pub fn gco_schedule<F: Real>(p: &Program<F>) -> Schedule<F> {
    let mut blocks = normalized_blocks(p);
    blocks.sort_by(|a, b| a.strings[0].string.lex_ord(&b.strings[0].string));
    Schedule { n_qubits: p.n_qubits, layers: blocks.into_iter().map(Layer::solo).collect() }
}

/// Depth-oriented scheduling. Blocks are sorted by active length descending
/// (ties lexicographic); each layer takes the remaining block with maximal
/// overlap against the last string emitted by the previous layer, then packs
/// it with later blocks whose active qubits are disjoint from everything in
/// the layer and whose depth estimate does not exceed the main block's.
pub fn do_schedule<F: Real>(p: &Program<F>) -> Schedule<F> {
    let blocks = normalized_blocks(p);
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| {
        let la = blocks[a].active_length();
        let lb = blocks[b].active_length();
        lb.cmp(&la).then_with(|| blocks[a].strings[0].string.lex_ord(&blocks[b].strings[0].string))
    });

    let mut remaining = order;
    let mut layers: Vec<Layer<F>> = Vec::new();
    let mut tail: Option<PauliString> = None;

    while !remaining.is_empty() {
        let pick = match &tail {
            None => 0,
            Some(t) => {
                let mut best = (0usize, 0usize);
                let mut found = false;
                for (pos, &i) in remaining.iter().enumerate() {
                    let ov = overlap(t, &blocks[i]);
                    if !found || ov > best.1 {
                        best = (pos, ov);
                        found = true;
                    }
                }
                best.0
            }
        };
        let main_idx = remaining.remove(pick);
        let main = blocks[main_idx].clone();
        let main_depth = estimate_depth(&main);
        let mut used: BTreeSet<usize> = main.active_qubits();
        let mut padded = Vec::new();

        remaining.retain(|&i| {
            let act = blocks[i].active_qubits();
            if act.is_disjoint(&used) && estimate_depth(&blocks[i]) <= main_depth {
                used.extend(act);
                padded.push(blocks[i].clone());
                false
            } else {
                true
            }
        });

        let last_block = padded.last().unwrap_or(&main);
        tail = Some(last_block.strings.last().expect("non-empty block").string.clone());
        layers.push(Layer { main, padded });
    }

    Schedule { n_qubits: p.n_qubits, layers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{Bindings, Parameter, WeightedString};

    fn block(strings: &[&str]) -> PauliBlock<f64> {
        PauliBlock::new(
            strings
                .iter()
                .map(|s| WeightedString { string: s.parse().unwrap(), weight: 1.0 })
                .collect(),
            Parameter::Literal(1.0),
        )
    }

    fn program(strings: &[&str]) -> Program<f64> {
        let n = strings[0].len();
        Program::new(n, strings.iter().map(|s| block(&[s])).collect()).unwrap()
    }

    #[test]
    fn estimate_depth_formula() {
        assert_eq!(estimate_depth(&block(&["ZZ"])), 3);
        assert_eq!(estimate_depth(&block(&["XX"])), 5);
        assert_eq!(estimate_depth(&block(&["XX", "YY", "ZZ"])), 13);
        let empty: PauliBlock<f64> = PauliBlock::new(vec![], Parameter::Literal(1.0));
        assert_eq!(estimate_depth(&empty), 0);
    }

    #[test]
    fn overlap_counts_matching_axes() {
        let tail: PauliString = "ZZI".parse().unwrap();
        assert_eq!(overlap(&tail, &block(&["ZZY"])), 2);
        assert_eq!(overlap(&tail, &block(&["IXI"])), 0);
        let p: PauliString = "XYZ".parse().unwrap();
        assert_eq!(overlap(&p, &block(&["XYZ"])), 3);
    }

    #[test]
    fn gco_orders_blocks_lexicographically() {
        let p = program(&["ZII", "XII", "YII"]);
        let s = gco_schedule(&p);
        let firsts: Vec<String> =
            s.layers.iter().map(|l| l.main.strings[0].string.to_string()).collect();
        assert_eq!(firsts, vec!["XII", "YII", "ZII"]);
    }

    #[test]
    fn gco_is_stable_on_equal_keys() {
        let mut b1 = block(&["ZZI"]);
        b1.strings[0].weight = 1.0;
        let mut b2 = block(&["ZZI"]);
        b2.strings[0].weight = 2.0;
        let p = Program::new(3, vec![b1, b2]).unwrap();
        let s = gco_schedule(&p);
        assert_eq!(s.layers[0].main.strings[0].weight, 1.0);
        assert_eq!(s.layers[1].main.strings[0].weight, 2.0);
    }

    #[test]
    fn do_schedule_single_block() {
        let p = program(&["ZZ"]);
        let s = do_schedule(&p);
        assert_eq!(s.layers.len(), 1);
        assert!(s.layers[0].padded.is_empty());
    }

    #[test]
    fn do_schedule_no_padding_when_all_blocks_share_a_qubit() {
        let p = program(&["ZZI", "ZIZ", "IZZ"]);
        // every pair of blocks intersects, so layers stay singletons
        let s = do_schedule(&p);
        assert_eq!(s.layers.len(), 3);
        assert!(s.layers.iter().all(|l| l.padded.is_empty()));
    }

    /// Ten-block walkthrough: sorted order (3,1,8,2,4,9,7,6,5) and layers
    /// [3], [1|4,9], [2|7,6], [8|5].
    #[test]
    fn do_schedule_walkthrough() {
        let names = [
            ("b1", "YIIIIZZZ"),
            ("b2", "ZZXIXIII"),
            ("b3", "XIZZIIIZ"),
            ("b4", "IXXIIIII"),
            ("b5", "IIIIIIXY"),
            ("b6", "IIIIIXIX"),
            ("b7", "IIIYIIZI"),
            ("b8", "ZXIYIXII"),
            ("b9", "IIIXXIII"),
        ];
        let p = program(&names.map(|(_, s)| s));
        let s = do_schedule(&p);
        let tag = |b: &PauliBlock<f64>| {
            let text = b.strings[0].string.to_string();
            names.iter().find(|(_, s)| *s == text).unwrap().0
        };
        let layout: Vec<(String, Vec<String>)> = s
            .layers
            .iter()
            .map(|l| {
                (tag(&l.main).to_string(), l.padded.iter().map(|b| tag(b).to_string()).collect())
            })
            .collect();
        assert_eq!(
            layout,
            vec![
                ("b3".to_string(), vec![]),
                ("b1".to_string(), vec!["b4".to_string(), "b9".to_string()]),
                ("b2".to_string(), vec!["b7".to_string(), "b6".to_string()]),
                ("b8".to_string(), vec!["b5".to_string()]),
            ]
        );
        for layer in &s.layers {
            assert!(layer.validate());
            let budget = estimate_depth(&layer.main);
            for pad in &layer.padded {
                assert!(estimate_depth(pad) <= budget);
            }
        }
    }

    #[test]
    fn schedules_preserve_block_multiset_and_semantics() {
        let p = program(&["ZZII", "IZZI", "IIZZ", "XXII", "IIXX"]);
        for sched in [gco_schedule(&p), do_schedule(&p)] {
            assert_eq!(sched.n_blocks(), p.blocks.len());
            let flat = Program::new(p.n_qubits, sched.blocks().cloned().collect()).unwrap();
            let b = Bindings::new();
            let h0 = crate::pauli::hamiltonian_matrix(&p, &b).unwrap();
            let h1 = crate::pauli::hamiltonian_matrix(&flat, &b).unwrap();
            for r in 0..h0.dim() {
                for c in 0..h0.dim() {
                    assert!((h0.get(r, c) - h1.get(r, c)).norm() < 1e-12);
                }
            }
        }
    }
}
