//! Synthesis for the all-to-all backend. Every Pauli string becomes a basis
//! layer, a CNOT tree into a root, a central RZ and the mirrored right half;
//! the pass picks tree shapes so that shared-operator runs of neighbouring
//! strings meet as identical gate prefixes and cancel in the peephole.

use std::collections::BTreeSet;

use crate::circuit::{peephole_cancel, Circuit, Gate};
use crate::pauli::{Bindings, PauliAxis, PauliBlock, PauliString};
use crate::schedule::{string_overlap, Layer, Schedule};
use crate::{Error, Real, Result};

/// CNOT tree over the support of a string: `(child, parent)` edges emitted
/// leaves-to-root, with the central rotation on `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePlan {
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
}

impl TreePlan {
    /// Ascending chain into the highest support qubit; this is the naive
    /// shape used when no cancellation is available.
    pub fn chain(support: &BTreeSet<usize>) -> Result<Self> {
        let nodes: Vec<usize> = support.iter().copied().collect();
        if nodes.is_empty() {
            return Err(Error::EmptySupport);
        }
        let edges = nodes.windows(2).map(|w| (w[0], w[1])).collect();
        Ok(Self { edges, root: *nodes.last().unwrap() })
    }

    /// Tree whose leaf-side prefix consists of the given ascending runs, so
    /// a neighbouring string synthesized with the same runs cancels against
    /// it. Later runs attach to the first run's top; leftover support qubits
    /// chain into the root.
    pub fn with_run_prefix(support: &BTreeSet<usize>, runs: &[Vec<usize>]) -> Result<Self> {
        let runs: Vec<&Vec<usize>> = runs.iter().filter(|r| !r.is_empty()).collect();
        if runs.is_empty() {
            return Self::chain(support);
        }
        let mut edges = Vec::new();
        let mut covered = BTreeSet::new();
        for run in &runs {
            edges.extend(run.windows(2).map(|w| (w[0], w[1])));
            covered.extend(run.iter().copied());
        }
        let anchor = *runs[0].last().unwrap();
        for run in runs.iter().skip(1) {
            edges.push((*run.last().unwrap(), anchor));
        }
        let rest: Vec<usize> = support.difference(&covered).copied().collect();
        edges.extend(rest.windows(2).map(|w| (w[0], w[1])));
        if let Some(&last) = rest.last() {
            edges.push((last, anchor));
        }
        Ok(Self { edges, root: anchor })
    }

    /// Random spanning tree with a random children-first emission order;
    /// used by the tree-freedom checks.
    pub fn random<R: rand::Rng>(support: &BTreeSet<usize>, rng: &mut R) -> Result<Self> {
        use rand::seq::SliceRandom;
        let mut nodes: Vec<usize> = support.iter().copied().collect();
        if nodes.is_empty() {
            return Err(Error::EmptySupport);
        }
        nodes.shuffle(rng);
        let root = nodes[0];
        let mut pending: Vec<(usize, usize)> =
            (1..nodes.len()).map(|i| (nodes[i], nodes[rng.gen_range(0..i)])).collect();
        let mut edges = Vec::with_capacity(pending.len());
        while !pending.is_empty() {
            // an edge is ready once nothing still feeds into its child
            let ready: Vec<usize> = pending
                .iter()
                .enumerate()
                .filter(|(_, &(c, _))| !pending.iter().any(|&(_, p)| p == c))
                .map(|(i, _)| i)
                .collect();
            let pick = *ready.choose(rng).expect("acyclic by construction");
            edges.push(pending.swap_remove(pick));
        }
        Ok(Self { edges, root })
    }

    pub fn validate(&self, support: &BTreeSet<usize>) -> Result<()> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        if self.edges.len() + 1 != support.len() {
            return Err(Error::PlanMismatch(format!(
                "{} edges cannot span {} qubits",
                self.edges.len(),
                support.len()
            )));
        }
        if !support.contains(&self.root) {
            return Err(Error::PlanMismatch("root outside support".into()));
        }
        let mut seen_child = BTreeSet::new();
        for (i, &(c, p)) in self.edges.iter().enumerate() {
            if !support.contains(&c) || !support.contains(&p) {
                return Err(Error::PlanMismatch(format!("edge ({c},{p}) leaves the support")));
            }
            if c == self.root || !seen_child.insert(c) {
                return Err(Error::PlanMismatch(format!("qubit {c} is not a unique child")));
            }
            // children-first: everything feeding into c must already be out
            if self.edges[i + 1..].iter().any(|&(_, p2)| p2 == c) {
                return Err(Error::PlanMismatch(format!(
                    "edge into {c} appears after ({c},{p})"
                )));
            }
        }
        Ok(())
    }
}

/// Emits `exp(-i * angle/2 * P)` under the given tree plan.
pub fn synth_string<F: Real>(p: &PauliString, angle: F, plan: &TreePlan) -> Result<Circuit<F>> {
    let support = p.support();
    plan.validate(&support)?;
    let mut c = Circuit::new(p.len());
    emit_string(&mut c, p, angle, plan);
    Ok(c)
}

fn emit_string<F: Real>(c: &mut Circuit<F>, p: &PauliString, angle: F, plan: &TreePlan) {
    let support = p.support();
    for &q in &support {
        match p.axis(q) {
            PauliAxis::X => c.push(Gate::H(q)),
            PauliAxis::Y => c.push(Gate::GyDag(q)),
            _ => {}
        }
    }
    for &(child, parent) in &plan.edges {
        c.push(Gate::Cnot(child, parent));
    }
    c.push(Gate::Rz(plan.root, angle));
    for &(child, parent) in plan.edges.iter().rev() {
        c.push(Gate::Cnot(child, parent));
    }
    for &q in &support {
        match p.axis(q) {
            PauliAxis::X => c.push(Gate::H(q)),
            PauliAxis::Y => c.push(Gate::Gy(q)),
            _ => {}
        }
    }
}

/// Compiled circuit together with the `(string, angle)` sequence it realizes,
/// in emission order, for the brute-force equivalence check.
#[derive(Debug, Clone)]
pub struct CompileOutput<F> {
    pub circuit: Circuit<F>,
    pub emitted: Vec<(PauliString, F)>,
}

/// Qubits where both strings carry the same non-identity axis.
fn shared_qubits(a: &PauliString, b: &PauliString) -> Vec<usize> {
    a.axes()
        .iter()
        .zip(b.axes())
        .enumerate()
        .filter(|(_, (x, y))| !x.is_identity() && *x == *y)
        .map(|(q, _)| q)
        .collect()
}

/// Shared-operator runs between a boundary string and the first strings of a
/// layer's blocks, claimed in block order so runs never overlap.
fn junction_runs<F: Real>(prev: &PauliString, layer: &Layer<F>) -> Vec<(usize, Vec<usize>)> {
    let mut claimed = BTreeSet::new();
    let mut runs = Vec::new();
    for (pos, block) in layer.blocks().enumerate() {
        let Some(first) = block.strings.first() else { continue };
        let run: Vec<usize> = shared_qubits(prev, &first.string)
            .into_iter()
            .filter(|q| !claimed.contains(q))
            .collect();
        if !run.is_empty() {
            claimed.extend(run.iter().copied());
            runs.push((pos, run));
        }
    }
    runs
}

fn layer_last_string<F: Real>(layer: &Layer<F>) -> &PauliString {
    let block = layer.padded.last().unwrap_or(&layer.main);
    &block.strings.last().expect("blocks are non-empty").string
}

/// Boundary overlap of two layers: total size of the shared-operator runs
/// between the first layer's last string and the second layer's leading
/// strings.
pub fn layer_overlap<F: Real>(a: &Layer<F>, b: &Layer<F>) -> usize {
    junction_runs(layer_last_string(a), b).iter().map(|(_, r)| r.len()).sum()
}

/// Greedy pairing of neighbouring layers by boundary overlap. Returns the
/// pairs in selection order plus leftover layer indices.
pub fn pair_layers<F: Real>(s: &Schedule<F>) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut live: Vec<usize> = (0..s.layers.len()).collect();
    let mut pairs = Vec::new();
    while live.len() >= 2 {
        let mut best_pos = 0;
        let mut best_ov = 0;
        let mut found = false;
        for pos in 0..live.len() - 1 {
            let ov = layer_overlap(&s.layers[live[pos]], &s.layers[live[pos + 1]]);
            if !found || ov > best_ov {
                best_pos = pos;
                best_ov = ov;
                found = true;
            }
        }
        let a = live.remove(best_pos);
        let b = live.remove(best_pos);
        pairs.push((a, b));
    }
    (pairs, live)
}

/// Greedy max-overlap matching of a block's strings; ties to the lower index
/// pair. Returns pair index tuples and the leftover lone indices.
fn pair_strings(strings: &[&PauliString], free: &[usize]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut unpaired: Vec<usize> = free.to_vec();
    let mut pairs = Vec::new();
    while unpaired.len() >= 2 {
        let mut best = (0usize, 1usize, 0usize);
        let mut found = false;
        for i in 0..unpaired.len() {
            for j in i + 1..unpaired.len() {
                let ov = string_overlap(strings[unpaired[i]], strings[unpaired[j]]);
                if !found || ov > best.2 {
                    best = (i, j, ov);
                    found = true;
                }
            }
        }
        let (i, j, _) = best;
        let b = unpaired.remove(j);
        let a = unpaired.remove(i);
        pairs.push((a, b));
    }
    (pairs, unpaired)
}

/// Longest prefix of `plan`'s edges whose endpoints carry identical
/// non-identity axes in both strings; those CNOTs meet as mirror images at
/// the junction and cancel.
fn compatible_prefix(plan: &TreePlan, a: &PauliString, b: &PauliString) -> Vec<(usize, usize)> {
    let mut prefix = Vec::new();
    for &(c, p) in &plan.edges {
        let ok = [c, p].iter().all(|&q| {
            let ax = a.axis(q);
            !ax.is_identity() && ax == b.axis(q)
        });
        if ok {
            prefix.push((c, p));
        } else {
            break;
        }
    }
    prefix
}

/// Completes a forest of prefix edges into a spanning tree of `support`.
fn plan_from_prefix(support: &BTreeSet<usize>, prefix: Vec<(usize, usize)>) -> Result<TreePlan> {
    if prefix.is_empty() {
        return TreePlan::chain(support);
    }
    let mut edges = prefix.clone();
    let children: BTreeSet<usize> = prefix.iter().map(|e| e.0).collect();
    let mut covered: BTreeSet<usize> = children.clone();
    covered.extend(prefix.iter().map(|e| e.1));
    let roots: Vec<usize> = covered.iter().copied().filter(|q| !children.contains(q)).collect();
    let anchor = roots[0];
    for &r in roots.iter().skip(1) {
        edges.push((r, anchor));
    }
    let rest: Vec<usize> = support.difference(&covered).copied().collect();
    edges.extend(rest.windows(2).map(|w| (w[0], w[1])));
    if let Some(&last) = rest.last() {
        edges.push((last, anchor));
    }
    Ok(TreePlan { edges, root: anchor })
}

/// Per-string synthesis jobs of one block, in emission order.
fn block_jobs<F: Real>(
    block: &PauliBlock<F>,
    junction_in: Option<&[usize]>,
    junction_out_runs: Option<&[Vec<usize>]>,
) -> Result<Vec<(usize, TreePlan)>> {
    let strings: Vec<&PauliString> = block.strings.iter().map(|ws| &ws.string).collect();
    let last = strings.len() - 1;
    let mut held_first = None;
    let mut held_last = None;
    let mut free: Vec<usize> = (0..strings.len()).collect();
    if junction_in.is_some() {
        held_first = Some(0);
        free.retain(|&i| i != 0);
    }
    if junction_out_runs.is_some() && Some(last) != held_first {
        held_last = Some(last);
        free.retain(|&i| i != last);
    }

    let (pairs, lones) = pair_strings(&strings, &free);
    let mut units: Vec<Vec<usize>> =
        pairs.into_iter().map(|(a, b)| vec![a, b]).chain(lones.into_iter().map(|i| vec![i])).collect();
    units.sort_by_key(|u| *u.iter().min().unwrap());

    let mut seq: Vec<usize> = Vec::new();
    if let Some(i) = held_first {
        seq.push(i);
    }
    seq.extend(units.iter().flatten());
    if let Some(i) = held_last {
        seq.push(i);
    }

    // first pass: junction strings and pair members get their plans
    let mut plans: Vec<Option<TreePlan>> = vec![None; strings.len()];
    if let Some(run) = junction_in {
        let sup = strings[0].support();
        plans[0] = Some(TreePlan::with_run_prefix(&sup, &[run.to_vec()])?);
    }
    if let (Some(i), Some(runs)) = (held_last, junction_out_runs) {
        let sup = strings[i].support();
        plans[i] = Some(TreePlan::with_run_prefix(&sup, runs)?);
    } else if let (Some(0), Some(runs)) = (held_first, junction_out_runs) {
        // single-string block at both boundaries keeps its outgoing plan
        let sup = strings[0].support();
        plans[0] = Some(TreePlan::with_run_prefix(&sup, runs)?);
    }
    for unit in &units {
        if let [a, b] = unit[..] {
            let shared = shared_qubits(strings[a], strings[b]);
            plans[a] = Some(TreePlan::with_run_prefix(&strings[a].support(), &[shared.clone()])?);
            plans[b] = Some(TreePlan::with_run_prefix(&strings[b].support(), &[shared])?);
        }
    }

    // second pass: lone strings adopt the more-overlapping neighbour's plan
    for unit in &units {
        let [i] = unit[..] else { continue };
        let pos = seq.iter().position(|&x| x == i).unwrap();
        let prev = pos.checked_sub(1).map(|p| seq[p]);
        let next = seq.get(pos + 1).copied();
        let ov = |j: Option<usize>| j.map_or(0, |j| string_overlap(strings[i], strings[j]));
        let (ov_prev, ov_next) = (ov(prev), ov(next));
        let support = strings[i].support();
        let plan = if ov_prev == 0 && ov_next == 0 {
            TreePlan::chain(&support)?
        } else if ov_prev >= ov_next {
            let j = prev.unwrap();
            match &plans[j] {
                Some(p) => plan_from_prefix(&support, compatible_prefix(p, strings[i], strings[j]))?,
                None => TreePlan::chain(&support)?,
            }
        } else {
            let j = next.unwrap();
            match &plans[j] {
                Some(p) => plan_from_prefix(&support, compatible_prefix(p, strings[i], strings[j]))?,
                None => TreePlan::chain(&support)?,
            }
        };
        plans[i] = Some(plan);
    }

    Ok(seq
        .into_iter()
        .map(|i| {
            let plan = plans[i].take().unwrap_or_else(|| {
                TreePlan::chain(&strings[i].support()).expect("non-empty support")
            });
            (i, plan)
        })
        .collect())
}

struct Emitter<F> {
    circuit: Circuit<F>,
    emitted: Vec<(PauliString, F)>,
}

impl<F: Real> Emitter<F> {
    fn emit_layer(
        &mut self,
        layer: &Layer<F>,
        bindings: &Bindings<F>,
        junction_in: Option<&[(usize, Vec<usize>)]>,
        junction_out: Option<&[Vec<usize>]>,
    ) -> Result<()> {
        let n_blocks = 1 + layer.padded.len();
        for (pos, block) in layer.blocks().enumerate() {
            if block.strings.is_empty() {
                continue;
            }
            let param = block.parameter.resolve(bindings)?;
            let run_in = junction_in
                .and_then(|runs| runs.iter().find(|(p, _)| *p == pos))
                .map(|(_, r)| r.as_slice());
            let out = if pos + 1 == n_blocks { junction_out } else { None };
            for (idx, plan) in block_jobs(block, run_in, out)? {
                let ws = &block.strings[idx];
                if ws.string.support().is_empty() {
                    continue;
                }
                let angle = param * ws.weight;
                emit_string(&mut self.circuit, &ws.string, angle, &plan);
                self.emitted.push((ws.string.clone(), angle));
            }
        }
        Ok(())
    }
}

/// Lowers a schedule to an all-to-all circuit, pairing layers and aligning
/// tree plans at every junction, then running the peephole.
pub fn ft_synthesize<F: Real>(s: &Schedule<F>, bindings: &Bindings<F>) -> Result<CompileOutput<F>> {
    let (pairs, leftovers) = pair_layers(s);
    let mut em = Emitter { circuit: Circuit::new(s.n_qubits), emitted: Vec::new() };
    for &(a, b) in &pairs {
        let runs = junction_runs(layer_last_string(&s.layers[a]), &s.layers[b]);
        let out_runs: Vec<Vec<usize>> = runs.iter().map(|(_, r)| r.clone()).collect();
        em.emit_layer(&s.layers[a], bindings, None, Some(&out_runs))?;
        em.emit_layer(&s.layers[b], bindings, Some(&runs), None)?;
    }
    for &i in &leftovers {
        em.emit_layer(&s.layers[i], bindings, None, None)?;
    }
    Ok(CompileOutput { circuit: peephole_cancel(&em.circuit), emitted: em.emitted })
}

/// Chain-tree synthesis with no cancellation pass; the Table-style baseline.
pub fn naive_synthesize<F: Real>(
    s: &Schedule<F>,
    bindings: &Bindings<F>,
) -> Result<CompileOutput<F>> {
    let mut circuit = Circuit::new(s.n_qubits);
    let mut emitted = Vec::new();
    for block in s.blocks() {
        let param = block.parameter.resolve(bindings)?;
        for ws in &block.strings {
            let support = ws.string.support();
            if support.is_empty() {
                continue;
            }
            let plan = TreePlan::chain(&support)?;
            let angle = param * ws.weight;
            emit_string(&mut circuit, &ws.string, angle, &plan);
            emitted.push((ws.string.clone(), angle));
        }
    }
    Ok(CompileOutput { circuit, emitted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{Parameter, Program, WeightedString};
    use crate::schedule::{do_schedule, gco_schedule};
    use crate::verify::{check_equivalence, circuit_unitary, max_deviation_up_to_phase};

    fn ws(s: &str, w: f64) -> WeightedString<f64> {
        WeightedString { string: s.parse().unwrap(), weight: w }
    }

    fn single_block_program(strings: &[&str]) -> Program<f64> {
        let n = strings[0].len();
        Program::new(
            n,
            strings
                .iter()
                .map(|s| PauliBlock::new(vec![ws(s, 1.0)], Parameter::Literal(1.0)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn chain_plan_matches_fig2_shape() {
        // Y Z I X Z over q4..q0: chain rooted at q4
        let p: PauliString = "YZIXZ".parse().unwrap();
        let plan = TreePlan::chain(&p.support()).unwrap();
        assert_eq!(plan.root, 4);
        assert_eq!(plan.edges, vec![(0, 1), (1, 3), (3, 4)]);
        let c = synth_string(&p, 0.5, &plan).unwrap();
        let counts = c.counts();
        assert_eq!(counts.cnot, 6);
        let h = c.gates.iter().filter(|g| matches!(g, Gate::H(1))).count();
        assert_eq!(h, 2);
        let gy = c
            .gates
            .iter()
            .filter(|g| matches!(g, Gate::Gy(4) | Gate::GyDag(4)))
            .count();
        assert_eq!(gy, 2);
        let rz = c.gates.iter().filter(|g| matches!(g, Gate::Rz(..))).count();
        assert_eq!(rz, 1);
    }

    #[test]
    fn single_z_is_a_lone_rz() {
        let p: PauliString = "Z".parse().unwrap();
        let plan = TreePlan::chain(&p.support()).unwrap();
        let c = synth_string(&p, 0.3, &plan).unwrap();
        assert_eq!(c.gates, vec![Gate::Rz(0, 0.3)]);
    }

    #[test]
    fn any_valid_plan_gives_the_same_unitary() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let p: PauliString = "YZIXZI".parse().unwrap();
        let want = crate::verify::string_exponential(&p, 0.83).unwrap();
        for _ in 0..12 {
            let plan = TreePlan::random(&p.support(), &mut rng).unwrap();
            plan.validate(&p.support()).unwrap();
            let c = synth_string(&p, 0.83, &plan).unwrap();
            let u = circuit_unitary(&c).unwrap();
            assert!(max_deviation_up_to_phase(&u, &want) < 1e-10);
        }
    }

    #[test]
    fn plan_validation_rejects_bad_shapes() {
        let sup: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        assert!(TreePlan { edges: vec![(0, 1)], root: 2 }.validate(&sup).is_err());
        assert!(TreePlan { edges: vec![(0, 1), (0, 2)], root: 2 }.validate(&sup).is_err());
        assert!(TreePlan { edges: vec![(1, 2), (0, 1)], root: 2 }.validate(&sup).is_err());
        assert!(TreePlan { edges: vec![(0, 1), (1, 2)], root: 2 }.validate(&sup).is_ok());
    }

    #[test]
    fn fig9_layer_pairing() {
        // five layers; layers 3 and 4 share six operators, layers 1 and 2 two
        let mk = |s: &str| PauliBlock::new(vec![ws(s, 1.0)], Parameter::Literal(1.0));
        let layers = vec![
            Layer::solo(mk("IIIIIXXI")),
            Layer::solo(mk("IIIIIXXZ")),
            Layer::solo(mk("IYXXYXXI")),
            Layer { main: mk("IIIIYXXX"), padded: vec![mk("YYXXIIII")] },
            Layer::solo(mk("ZZIIIIII")),
        ];
        let s = Schedule { n_qubits: 8, layers };
        assert_eq!(layer_overlap(&s.layers[2], &s.layers[3]), 6);
        assert_eq!(layer_overlap(&s.layers[0], &s.layers[1]), 2);
        let (pairs, leftover) = pair_layers(&s);
        assert_eq!(pairs, vec![(2, 3), (0, 1)]);
        assert_eq!(leftover, vec![4]);
    }

    #[test]
    fn zzy_then_zzi_cancels_two_cnots() {
        let p = single_block_program(&["ZZY", "ZZI"]);
        let sched = gco_schedule(&p);
        let bindings = Bindings::new();
        let naive = naive_synthesize(&sched, &bindings).unwrap();
        let opt = ft_synthesize(&sched, &bindings).unwrap();
        assert!(opt.circuit.counts().cnot + 2 <= naive.circuit.counts().cnot);
        let dev = check_equivalence(&opt.circuit, &opt.emitted, None).unwrap();
        assert!(dev < 1e-9, "deviation {dev}");
    }

    #[test]
    fn single_string_block_matches_direct_synthesis() {
        let p = single_block_program(&["XZY"]);
        let sched = do_schedule(&p);
        let out = ft_synthesize(&sched, &Bindings::new()).unwrap();
        let plan = TreePlan::chain(&"XZY".parse::<PauliString>().unwrap().support()).unwrap();
        let direct = synth_string(&"XZY".parse().unwrap(), 1.0, &plan).unwrap();
        let direct = peephole_cancel(&direct);
        assert_eq!(out.circuit.counts(), direct.counts());
        let dev = check_equivalence(&out.circuit, &out.emitted, None).unwrap();
        assert!(dev < 1e-9);
    }

    #[test]
    fn multi_string_blocks_preserve_semantics() {
        let blocks = vec![
            PauliBlock::new(vec![ws("ZZII", 0.5), ws("XXII", -0.25), ws("ZIZI", 1.0)], Parameter::Literal(0.7)),
            PauliBlock::new(vec![ws("IIZZ", 1.0), ws("IIXX", 0.5)], Parameter::Literal(1.1)),
            PauliBlock::new(vec![ws("IYYI", 0.8)], Parameter::Literal(0.4)),
        ];
        let p = Program::new(4, blocks).unwrap();
        for sched in [gco_schedule(&p), do_schedule(&p)] {
            let out = ft_synthesize(&sched, &Bindings::new()).unwrap();
            let dev = check_equivalence(&out.circuit, &out.emitted, None).unwrap();
            assert!(dev < 1e-9, "deviation {dev}");
        }
    }

    #[test]
    fn ft_never_beats_naive_counts_in_reverse() {
        let p = single_block_program(&["ZZIII", "ZZZII", "IIZZZ", "IIIZZ", "XXIII"]);
        for sched in [gco_schedule(&p), do_schedule(&p)] {
            let naive = naive_synthesize(&sched, &Bindings::new()).unwrap();
            let opt = ft_synthesize(&sched, &Bindings::new()).unwrap();
            assert!(opt.circuit.counts().total <= naive.circuit.counts().total);
        }
    }
}
