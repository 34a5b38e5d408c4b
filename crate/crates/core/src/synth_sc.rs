//! Synthesis for the connectivity-constrained backend: dense initial
//! mapping, per-block tree embedding over core qubits, error-aware SWAP
//! routing, parallel small-block placement and remain-set cleanup.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::circuit::{peephole_cancel, Circuit, Gate};
use crate::device::DeviceModel;
use crate::pauli::{Bindings, PauliAxis, PauliBlock, PauliString};
use crate::schedule::Schedule;
use crate::synth_ft::CompileOutput;
use crate::{Error, Real, Result};

/// Injective logical-to-physical placement, partial onto the device.
#[derive(Debug, Clone)]
pub struct Mapping {
    log_to_phys: Vec<usize>,
    phys_to_log: Vec<Option<usize>>,
}

impl Mapping {
    pub fn new(log_to_phys: Vec<usize>, n_physical: usize) -> Self {
        let mut phys_to_log = vec![None; n_physical];
        for (l, &p) in log_to_phys.iter().enumerate() {
            assert!(phys_to_log[p].is_none(), "mapping must be injective");
            phys_to_log[p] = Some(l);
        }
        Self { log_to_phys, phys_to_log }
    }

    pub fn phys(&self, logical: usize) -> usize {
        self.log_to_phys[logical]
    }

    pub fn logical_at(&self, phys: usize) -> Option<usize> {
        self.phys_to_log[phys]
    }

    pub fn n_logical(&self) -> usize {
        self.log_to_phys.len()
    }

    pub fn n_physical(&self) -> usize {
        self.phys_to_log.len()
    }

    /// Exchanges the occupants of two physical qubits (either may be empty).
    pub fn swap_phys(&mut self, a: usize, b: usize) {
        let la = self.phys_to_log[a];
        let lb = self.phys_to_log[b];
        self.phys_to_log[a] = lb;
        self.phys_to_log[b] = la;
        if let Some(l) = la {
            self.log_to_phys[l] = b;
        }
        if let Some(l) = lb {
            self.log_to_phys[l] = a;
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.log_to_phys
    }
}

/// Physical-qubit tree with parent links, hosting a block's active qubits.
#[derive(Debug, Clone)]
pub struct EmbeddedTree {
    pub root: usize,
    /// parent physical qubit per tree node; the root maps to itself
    pub parent: BTreeMap<usize, usize>,
}

impl EmbeddedTree {
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.parent.keys().copied()
    }

    pub fn contains(&self, phys: usize) -> bool {
        self.parent.contains_key(&phys)
    }

    fn depth_of(&self, mut q: usize) -> usize {
        let mut d = 0;
        while q != self.root {
            q = self.parent[&q];
            d += 1;
        }
        d
    }

    /// Non-root nodes ordered deepest-first (ties: lower index), the walk
    /// order of the string synthesizer.
    pub fn walk_order(&self) -> Vec<usize> {
        let mut nodes: Vec<usize> = self.nodes().filter(|&q| q != self.root).collect();
        nodes.sort_by_key(|&q| (usize::MAX - self.depth_of(q), q));
        nodes
    }
}

/// Greedy densification: seed at the max-degree physical qubit, repeatedly
/// add the unchosen qubit with the most edges into the chosen set (ties:
/// higher total degree, then lower index), then assign logical indices in
/// BFS order over the chosen subgraph from its lowest-index node.
pub fn initial_mapping<F: Real>(d: &DeviceModel<F>, n: usize) -> Result<Mapping> {
    if n > d.n_physical {
        return Err(Error::DeviceTooSmall { logical: n, physical: d.n_physical });
    }
    let mut chosen = vec![false; d.n_physical];
    let seed = (0..d.n_physical).max_by_key(|&q| (d.degree(q), usize::MAX - q)).unwrap();
    chosen[seed] = true;
    for _ in 1..n {
        let next = (0..d.n_physical)
            .filter(|&q| !chosen[q])
            .max_by_key(|&q| {
                let into = d.neighbors(q).filter(|&m| chosen[m]).count();
                (into, d.degree(q), usize::MAX - q)
            })
            .unwrap();
        chosen[next] = true;
    }

    let start = (0..d.n_physical).find(|&q| chosen[q]).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; d.n_physical];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(q) = queue.pop_front() {
        order.push(q);
        for m in d.neighbors(q) {
            if chosen[m] && !seen[m] {
                seen[m] = true;
                queue.push_back(m);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "chosen subgraph is connected by construction");
    Ok(Mapping::new(order, d.n_physical))
}

/// Connected components of a set of physical qubits under the device graph.
fn components<F: Real>(d: &DeviceModel<F>, nodes: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in nodes {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(q) = stack.pop() {
            comp.insert(q);
            for m in d.neighbors(q) {
                if nodes.contains(&m) && !seen.contains(&m) {
                    seen.insert(m);
                    stack.push(m);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Embeds a block into the device: picks a root among the core qubits (the
/// one whose mapped neighbourhood has the largest connected component within
/// the core; ties prefer the previous core, then the lower logical index),
/// SWAPs every active qubit into one connected component around the root,
/// and returns the induced tree, the SWAP gates and the updated mapping.
pub fn build_block_tree<F: Real>(
    block: &PauliBlock<F>,
    mapping: &Mapping,
    d: &DeviceModel<F>,
    prev_core: &BTreeSet<usize>,
) -> (EmbeddedTree, Vec<Gate<F>>, Mapping) {
    let mut m = mapping.clone();
    let active = block.active_qubits();
    let core = block.core_qubits();
    let root_candidates = if core.is_empty() { &active } else { &core };

    let cand_phys: BTreeSet<usize> = root_candidates.iter().map(|&q| m.phys(q)).collect();
    let comps = components(d, &cand_phys);
    let comp_len = |p: usize| comps.iter().find(|c| c.contains(&p)).map_or(0, |c| c.len());
    let root_logical = root_candidates
        .iter()
        .copied()
        .max_by_key(|&q| (comp_len(m.phys(q)), prev_core.contains(&q), usize::MAX - q))
        .expect("active set is non-empty");

    // pull stray active qubits toward the root's component
    let mut swaps = Vec::new();
    loop {
        let root_phys = m.phys(root_logical);
        let active_phys: BTreeSet<usize> = active.iter().map(|&q| m.phys(q)).collect();
        let comps = components(d, &active_phys);
        if comps.len() <= 1 {
            break;
        }
        let home: Vec<usize> =
            comps.iter().find(|c| c.contains(&root_phys)).unwrap().iter().copied().collect();
        // nearest stray qubit first; ties toward the lower logical index
        let (_, path) = active
            .iter()
            .filter(|&&q| !home.contains(&m.phys(q)))
            .map(|&q| (q, d.cheapest_path_to_set(m.phys(q), &home)))
            .min_by(|(qa, pa), (qb, pb)| pa.len().cmp(&pb.len()).then(qa.cmp(qb)))
            .expect("some active qubit is outside the root component");
        for win in path.windows(2).take(path.len().saturating_sub(2)) {
            swaps.push(Gate::Swap(win[0], win[1]));
            m.swap_phys(win[0], win[1]);
        }
    }

    // induced tree: BFS from the root over the active component
    let root_phys = m.phys(root_logical);
    let active_phys: BTreeSet<usize> = active.iter().map(|&q| m.phys(q)).collect();
    let mut parent = BTreeMap::from([(root_phys, root_phys)]);
    let mut queue = VecDeque::from([root_phys]);
    while let Some(q) = queue.pop_front() {
        for n in d.neighbors(q) {
            if active_phys.contains(&n) && !parent.contains_key(&n) {
                parent.insert(n, q);
                queue.push_back(n);
            }
        }
    }
    debug_assert_eq!(parent.len(), active_phys.len());
    (EmbeddedTree { root: root_phys, parent }, swaps, m)
}

/// Synthesizes every string of a block on an embedded tree. Qubits that are
/// active in the current string but sit under an inactive parent are first
/// SWAPped up the tree (these mapping changes persist); the remaining
/// contiguous actives then get the CNOT walk, the central RZ and the
/// mirrored right half.
pub fn sc_synthesize_block<F: Real>(
    block: &PauliBlock<F>,
    tree: &EmbeddedTree,
    mapping: &mut Mapping,
    bindings: &Bindings<F>,
    circuit: &mut Circuit<F>,
) -> Result<()> {
    let param = block.parameter.resolve(bindings)?;
    let walk = tree.walk_order();
    for ws in &block.strings {
        let support = ws.string.support();
        if support.is_empty() {
            continue;
        }
        for &q in &support {
            if !tree.contains(mapping.phys(q)) {
                return Err(Error::PlanMismatch(format!(
                    "active qubit {q} is outside the embedded tree"
                )));
            }
        }
        let active = |m: &Mapping, p: usize| -> bool {
            m.logical_at(p).is_some_and(|l| !ws.string.axis(l).is_identity())
        };

        // route actives up through inactive parents until they are contiguous
        loop {
            let next = walk
                .iter()
                .copied()
                .find(|&n| active(mapping, n) && !active(mapping, tree.parent[&n]));
            match next {
                Some(n) => {
                    let p = tree.parent[&n];
                    circuit.push(Gate::Swap(n, p));
                    mapping.swap_phys(n, p);
                }
                None => break,
            }
        }

        for &q in &support {
            match ws.string.axis(q) {
                PauliAxis::X => circuit.push(Gate::H(mapping.phys(q))),
                PauliAxis::Y => circuit.push(Gate::GyDag(mapping.phys(q))),
                _ => {}
            }
        }
        let mut cnots = Vec::new();
        for &n in &walk {
            if active(mapping, n) {
                let p = tree.parent[&n];
                debug_assert!(active(mapping, p), "routing left an inactive parent");
                circuit.push(Gate::Cnot(n, p));
                cnots.push((n, p));
            }
        }
        debug_assert!(active(mapping, tree.root), "parity accumulates on the root");
        circuit.push(Gate::Rz(tree.root, param * ws.weight));
        for &(n, p) in cnots.iter().rev() {
            circuit.push(Gate::Cnot(n, p));
        }
        for &q in &support {
            match ws.string.axis(q) {
                PauliAxis::X => circuit.push(Gate::H(mapping.phys(q))),
                PauliAxis::Y => circuit.push(Gate::Gy(mapping.phys(q))),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Attempts a small block in parallel with the layer's main block. Fails
/// (returning `None`) if any SWAP it needs touches a main-tree qubit.
fn try_parallel_block<F: Real>(
    block: &PauliBlock<F>,
    mapping: &Mapping,
    d: &DeviceModel<F>,
    main_tree: &EmbeddedTree,
    bindings: &Bindings<F>,
) -> Result<Option<(Circuit<F>, Mapping)>> {
    let (tree, swaps, mut m) = build_block_tree(block, mapping, d, &BTreeSet::new());
    let mut c = Circuit::new(d.n_physical);
    for g in swaps {
        c.push(g);
    }
    sc_synthesize_block(block, &tree, &mut m, bindings, &mut c)?;
    for g in &c.gates {
        if let Gate::Swap(a, b) = g {
            if main_tree.contains(*a) || main_tree.contains(*b) {
                return Ok(None);
            }
        }
    }
    Ok(Some((c, m)))
}

/// Lifts a block's strings to physical wires at the positions its logical
/// qubits held under the initial mapping. Commuting every SWAP leftwards
/// relabels each gate back to exactly these wires, so the circuit equals the
/// net swap permutation times the ordered product of these exponentials.
fn lift_block<F: Real>(
    block: &PauliBlock<F>,
    m0: &Mapping,
    bindings: &Bindings<F>,
) -> Result<Vec<(PauliString, F)>> {
    let param = block.parameter.resolve(bindings)?;
    Ok(block
        .strings
        .iter()
        .filter(|ws| !ws.string.support().is_empty())
        .map(|ws| {
            let pairs: Vec<(usize, PauliAxis)> =
                ws.string.support().iter().map(|&q| (m0.phys(q), ws.string.axis(q))).collect();
            (PauliString::from_support(m0.n_physical(), &pairs), param * ws.weight)
        })
        .collect())
}

/// Sum of pairwise hop distances between a block's mapped active qubits.
fn cumulative_distance<F: Real>(b: &PauliBlock<F>, m: &Mapping, d: &DeviceModel<F>) -> usize {
    let phys: Vec<usize> = b.active_qubits().iter().map(|&q| m.phys(q)).collect();
    let mut total = 0;
    for i in 0..phys.len() {
        for j in i + 1..phys.len() {
            total += d.hop_distance(phys[i], phys[j]);
        }
    }
    total
}

/// Compiles a schedule onto the device. Per layer, the main block is
/// embedded and synthesized; padded blocks run in parallel when their
/// routing leaves the main tree alone, otherwise they join the remain set,
/// which is drained in order of cumulative mapped distance.
pub fn sc_synthesize<F: Real>(
    s: &Schedule<F>,
    d: &DeviceModel<F>,
    bindings: &Bindings<F>,
) -> Result<CompileOutput<F>> {
    if s.n_qubits > d.n_physical {
        return Err(Error::DeviceTooSmall { logical: s.n_qubits, physical: d.n_physical });
    }
    let m0 = initial_mapping(d, s.n_qubits)?;
    let mut mapping = m0.clone();
    let mut circuit = Circuit::new(d.n_physical);
    let mut emitted: Vec<(PauliString, F)> = Vec::new();
    let mut remain: Vec<PauliBlock<F>> = Vec::new();
    let mut prev_core: BTreeSet<usize> = BTreeSet::new();

    let emit_main = |block: &PauliBlock<F>,
                         mapping: &mut Mapping,
                         circuit: &mut Circuit<F>,
                         emitted: &mut Vec<(PauliString, F)>,
                         prev_core: &BTreeSet<usize>|
     -> Result<EmbeddedTree> {
        let (tree, swaps, new_m) = build_block_tree(block, mapping, d, prev_core);
        for g in swaps {
            circuit.push(g);
        }
        *mapping = new_m;
        sc_synthesize_block(block, &tree, mapping, bindings, circuit)?;
        emitted.extend(lift_block(block, &m0, bindings)?);
        Ok(tree)
    };

    for layer in &s.layers {
        let tree = emit_main(&layer.main, &mut mapping, &mut circuit, &mut emitted, &prev_core)?;
        prev_core = layer.main.core_qubits();
        for pad in &layer.padded {
            match try_parallel_block(pad, &mapping, d, &tree, bindings)? {
                Some((gates, new_m)) => {
                    for g in gates.gates {
                        circuit.push(g);
                    }
                    emitted.extend(lift_block(pad, &m0, bindings)?);
                    mapping = new_m;
                }
                None => remain.push(pad.clone()),
            }
        }
    }

    while !remain.is_empty() {
        remain.sort_by_key(|b| cumulative_distance(b, &mapping, d));
        let block = remain.remove(0);
        emit_main(&block, &mut mapping, &mut circuit, &mut emitted, &prev_core)?;
        prev_core = block.core_qubits();
    }

    let mut out = peephole_cancel(&circuit);
    out.qubit_map = Some(out.replay_swap_permutation());
    validate_coupling(&out, d)?;
    Ok(CompileOutput { circuit: out, emitted })
}

/// Hard check: every two-qubit gate acts on a device edge.
pub fn validate_coupling<F: Real>(c: &Circuit<F>, d: &DeviceModel<F>) -> Result<()> {
    for g in &c.gates {
        if let (a, Some(b)) = g.qubits() {
            if !d.are_adjacent(a, b) {
                return Err(Error::InvalidDevice(format!(
                    "gate on ({a},{b}) is not a device edge"
                )));
            }
        }
    }
    Ok(())
}

/// Baseline router: logical wires start at their identity positions; before
/// each illegal two-qubit gate, the first operand is SWAPped along the
/// cheapest path until the endpoints are adjacent.
pub fn naive_route<F: Real>(c: &Circuit<F>, d: &DeviceModel<F>) -> Result<Circuit<F>> {
    if c.n_qubits > d.n_physical {
        return Err(Error::DeviceTooSmall { logical: c.n_qubits, physical: d.n_physical });
    }
    let mut mapping = Mapping::new((0..c.n_qubits).collect(), d.n_physical);
    let mut out = Circuit::new(d.n_physical);
    for g in &c.gates {
        match *g {
            Gate::H(q) => out.push(Gate::H(mapping.phys(q))),
            Gate::Gy(q) => out.push(Gate::Gy(mapping.phys(q))),
            Gate::GyDag(q) => out.push(Gate::GyDag(mapping.phys(q))),
            Gate::Rz(q, angle) => out.push(Gate::Rz(mapping.phys(q), angle)),
            Gate::Cnot(ctl, tgt) | Gate::Swap(ctl, tgt) => {
                let path = d.cheapest_path(mapping.phys(ctl), mapping.phys(tgt));
                for win in path.windows(2).take(path.len().saturating_sub(2)) {
                    out.push(Gate::Swap(win[0], win[1]));
                    mapping.swap_phys(win[0], win[1]);
                }
                let (a, b) = (mapping.phys(ctl), mapping.phys(tgt));
                match *g {
                    Gate::Cnot(..) => out.push(Gate::Cnot(a, b)),
                    _ => {
                        out.push(Gate::Swap(a, b));
                        mapping.swap_phys(a, b);
                    }
                }
            }
        }
    }
    out.qubit_map = Some(out.replay_swap_permutation());
    validate_coupling(&out, d)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{Parameter, Program, WeightedString};
    use crate::schedule::Layer;
    use crate::verify::check_equivalence;

    fn ws(s: &str, w: f64) -> WeightedString<f64> {
        WeightedString { string: s.parse().unwrap(), weight: w }
    }

    fn block(strings: &[&str]) -> PauliBlock<f64> {
        PauliBlock::new(strings.iter().map(|s| ws(s, 1.0)).collect(), Parameter::Literal(1.0))
    }

    #[test]
    fn initial_mapping_prefers_dense_subsets() {
        // unique connected 5-subset of a line
        let d: DeviceModel<f64> = DeviceModel::builtin("linear:5").unwrap();
        let m = initial_mapping(&d, 5).unwrap();
        assert_eq!(m.as_slice(), &[0, 1, 2, 3, 4]);

        // 2x3 grid: the densest 4-subset is a 2x2 square
        let d: DeviceModel<f64> = DeviceModel::builtin("grid:2x3").unwrap();
        let m = initial_mapping(&d, 4).unwrap();
        let chosen: BTreeSet<usize> = m.as_slice().iter().copied().collect();
        assert_eq!(chosen, BTreeSet::from([0, 1, 3, 4]));

        assert!(initial_mapping(&d, 7).is_err());
    }

    /// Device: line p0-p1-p2-p3-p4-p5-p6 with a spur p5-p7; hand-set mapping
    /// mirrors the two-layer walkthrough of the routing example.
    fn walkthrough() -> (DeviceModel<f64>, Mapping) {
        let err = 0.01;
        let d = DeviceModel::new(
            8,
            vec![
                (0, 1, err),
                (1, 2, err),
                (2, 3, err),
                (3, 4, err),
                (4, 5, err),
                (5, 6, err),
                (5, 7, err),
            ],
        )
        .unwrap();
        // q0@p2 q1@p0 q2@p5 q3@p6 q4@p4 q5@p3 q6@p1 q7@p7
        let m = Mapping::new(vec![2, 0, 5, 6, 4, 3, 1, 7], 8);
        (d, m)
    }

    #[test]
    fn block_tree_embedding_walkthrough() {
        let (d, m) = walkthrough();
        // block 3: active {2,3,4,5,6}, core {2,3,4,5}
        let b3 = block(&["IZZZZZII", "IIZZZZII"]);
        assert_eq!(b3.core_qubits(), BTreeSet::from([2, 3, 4, 5]));
        let (tree, swaps, m1) = build_block_tree(&b3, &m, &d, &BTreeSet::new());
        // one SWAP moves q6 next to the mapped core, displacing q0
        assert_eq!(swaps, vec![Gate::Swap(1, 2)]);
        assert_eq!(m1.phys(6), 2);
        assert_eq!(m1.phys(0), 1);
        assert_eq!(tree.root, 5); // q2 keeps the root
        let nodes: BTreeSet<usize> = tree.nodes().collect();
        assert_eq!(nodes, BTreeSet::from([2, 3, 4, 5, 6]));

        // block 4 after block 3: core {2,4,6}; q2/q4 form the size-2
        // component, so q2 roots and one SWAP q6<->q5 connects
        let b4 = block(&["IZIZIZII"]);
        let (tree4, swaps4, m2) = build_block_tree(&b4, &m1, &d, &b3.core_qubits());
        assert_eq!(tree4.root, 5);
        assert_eq!(swaps4, vec![Gate::Swap(2, 3)]);
        assert_eq!(m2.logical_at(3), Some(6));
        assert_eq!(m2.logical_at(2), Some(5));
    }

    #[test]
    fn already_connected_block_needs_no_swaps() {
        let (d, m) = walkthrough();
        let b = block(&["IIZZZZII"]); // q2..q5 at p3..p6
        let (_, swaps, _) = build_block_tree(&b, &m, &d, &BTreeSet::new());
        assert!(swaps.is_empty());
    }

    #[test]
    fn two_layer_walkthrough_defers_the_crossing_block() {
        let (d, _) = walkthrough();
        let b1 = block(&["ZIIIIIIZ"]); // q0,q7
        let b2 = block(&["IIIIIIZZ"]); // q0,q1
        let b3 = block(&["IZZZZZII", "IIZZZZII"]);
        let b4 = block(&["IZIZIZII"]);
        let sched = Schedule {
            n_qubits: 8,
            layers: vec![
                Layer { main: b3, padded: vec![b2, b1] },
                Layer { main: b4, padded: vec![] },
            ],
        };
        let out = sc_synthesize(&sched, &d, &Bindings::new()).unwrap();
        validate_coupling(&out.circuit, &d).unwrap();
        let dev =
            check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())
                .unwrap();
        assert!(dev < 1e-9, "deviation {dev}");
    }

    #[test]
    fn fully_connected_device_never_swaps() {
        let err = 0.01;
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b, err));
            }
        }
        let d = DeviceModel::new(4, edges).unwrap();
        let p = Program::new(
            4,
            vec![block(&["ZZII"]), block(&["IXXI"]), block(&["ZIIZ", "YIIY"])],
        )
        .unwrap();
        let sched = crate::schedule::do_schedule(&p);
        let out = sc_synthesize(&sched, &d, &Bindings::new()).unwrap();
        assert_eq!(out.circuit.swap_count(), 0);
        let dev =
            check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())
                .unwrap();
        assert!(dev < 1e-9);
    }

    #[test]
    fn string_walk_swaps_through_inactive_middle() {
        // ZIZ on a 3-chain: middle inactive, one SWAP then the 2-qubit pattern
        let d: DeviceModel<f64> = DeviceModel::builtin("linear:3").unwrap();
        let p = Program::new(3, vec![block(&["ZIZ"])]).unwrap();
        let sched = crate::schedule::gco_schedule(&p);
        let out = sc_synthesize(&sched, &d, &Bindings::new()).unwrap();
        assert_eq!(out.circuit.swap_count(), 1);
        let dev =
            check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())
                .unwrap();
        assert!(dev < 1e-9, "deviation {dev}");
    }

    #[test]
    fn mixed_block_mapping_persists_and_verifies() {
        // strings with different supports force in-string routing swaps
        let d: DeviceModel<f64> = DeviceModel::builtin("linear:4").unwrap();
        let b = block(&["ZIIZ", "ZZZZ", "ZIZI"]);
        let p = Program::new(4, vec![b]).unwrap();
        let sched = crate::schedule::gco_schedule(&p);
        let out = sc_synthesize(&sched, &d, &Bindings::new()).unwrap();
        validate_coupling(&out.circuit, &d).unwrap();
        let dev =
            check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())
                .unwrap();
        assert!(dev < 1e-9, "deviation {dev}");
    }

    #[test]
    fn naive_route_examples() {
        // fully connected: unchanged
        let err = 0.01;
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in a + 1..3 {
                edges.push((a, b, err));
            }
        }
        let d = DeviceModel::new(3, edges).unwrap();
        let mut c: Circuit<f64> = Circuit::new(3);
        c.push(Gate::Cnot(0, 2));
        let routed = naive_route(&c, &d).unwrap();
        assert_eq!(routed.swap_count(), 0);

        // distance d needs d-1 swaps on a line
        for n in 3..6 {
            let d: DeviceModel<f64> = DeviceModel::builtin(&format!("linear:{n}")).unwrap();
            let mut c: Circuit<f64> = Circuit::new(n);
            c.push(Gate::Cnot(0, n - 1));
            let routed = naive_route(&c, &d).unwrap();
            assert_eq!(routed.swap_count(), n - 2);
            validate_coupling(&routed, &d).unwrap();
        }
    }
}
