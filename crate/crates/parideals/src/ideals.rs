//! Brute-force enumeration of the ideal poset F_I.
//!
//! An ideal is a subset Φ ⊆ Δ⁺∖Δ_I closed under adding any β ∈ Δ⁺ ∪ Δ_I
//! whenever the sum is again a positive root. Equivalently Φ is an up-set
//! of the step graph on Δ⁺∖Δ_I, so we enumerate up-sets of its strongly
//! connected condensation: the search space is Catalan-sized instead of
//! 2^|Δ⁺|. Everything downstream (closed-form counts, the affine Weyl
//! bijection, alcove geometry) is checked against this module.

use crate::rootsys::{Root, RootSystem};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("seed meets the Levi root set Δ_I")]
    SeedIntersectsLevi,
}

/// A subset I ⊆ Π of simple roots, as a bitmask over 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parabolic(u32);

impl Parabolic {
    pub fn empty() -> Self {
        Parabolic(0)
    }

    pub fn full(rank: usize) -> Self {
        let mut p = Parabolic(0);
        for i in 1..=rank {
            p.insert(i);
        }
        p
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut p = Parabolic(0);
        for &i in indices {
            p.insert(i);
        }
        p
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i >= 1 && i < 32);
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < 32 && self.0 & (1 << i) != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &Parabolic) -> bool {
        self.0 & !other.0 == 0
    }

    /// All 2^rank subsets in subset-lexicographic (mask) order.
    pub fn all_subsets(rank: usize) -> Vec<Parabolic> {
        (0..1u32 << rank).map(|m| Parabolic(m << 1)).collect()
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let s: Vec<String> = self.indices().iter().map(|i| format!("a{i}")).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Set of positive roots, as a bitset over the fixed positive-root order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet(u128);

impl RootSet {
    pub fn empty() -> Self {
        RootSet(0)
    }

    pub fn singleton(idx: usize) -> Self {
        RootSet(1u128 << idx)
    }

    pub fn insert(&mut self, idx: usize) {
        self.0 |= 1u128 << idx;
    }

    pub fn remove(&mut self, idx: usize) {
        self.0 &= !(1u128 << idx);
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0 & (1u128 << idx) != 0
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersect(&self, other: &RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: &RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..128).filter(|&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// An ad-nilpotent ideal Φ ∈ F_I, stored as a positive-root bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: RootSet,
}

impl Ideal {
    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a Root> {
        self.members.iter().map(|i| rs.positive_root(i)).collect()
    }

    pub fn contains_root(&self, rs: &RootSystem, r: &Root) -> bool {
        rs.root_index(r).is_some_and(|i| self.members.contains(i))
    }
}

/// Δ_I = ZI ∩ Δ, both signs.
pub fn delta_i(rs: &RootSystem, i_set: &Parabolic) -> Vec<Root> {
    let mut out = Vec::new();
    for idx in delta_i_pos(rs, i_set).iter() {
        let r = rs.positive_root(idx);
        out.push(r.clone());
        out.push(r.negated());
    }
    out
}

/// Positive part Δ_I ∩ Δ⁺ as a bitset: roots supported on I.
pub fn delta_i_pos(rs: &RootSystem, i_set: &Parabolic) -> RootSet {
    let mut set = RootSet::empty();
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        if r.support().iter().all(|&s| i_set.contains(s)) {
            set.insert(idx);
        }
    }
    set
}

/// Step graph on Δ⁺∖Δ_I: an edge x → x+β for every β ∈ Δ⁺ ∪ Δ_I with
/// x+β ∈ Δ⁺. Targets never land in Δ_I, so the node set is closed.
struct StepGraph {
    nodes: Vec<usize>,
    node_pos: HashMap<usize, usize>,
    succs: Vec<Vec<usize>>,
}

fn step_graph(rs: &RootSystem, i_set: &Parabolic) -> StepGraph {
    let levi_pos = delta_i_pos(rs, i_set);
    let nodes: Vec<usize> = (0..rs.num_positive_roots())
        .filter(|&i| !levi_pos.contains(i))
        .collect();
    let node_pos: HashMap<usize, usize> =
        nodes.iter().enumerate().map(|(p, &i)| (i, p)).collect();

    let mut steps: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.coeffs().to_vec())
        .collect();
    for idx in levi_pos.iter() {
        steps.push(rs.positive_root(idx).negated().coeffs().to_vec());
    }

    let succs = nodes
        .iter()
        .map(|&i| {
            let base = rs.positive_root(i);
            let mut out = Vec::new();
            for step in &steps {
                let sum: Vec<i64> = base.coeffs().iter().zip(step).map(|(a, b)| a + b).collect();
                if let Some(j) = rs.index_of_coeffs(&sum) {
                    if let Some(&p) = node_pos.get(&j) {
                        if p != node_pos[&i] {
                            out.push(p);
                        }
                    }
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();

    StepGraph {
        nodes,
        node_pos,
        succs,
    }
}

/// F_I closure of a seed: least superset closed under the step relation.
pub fn close(rs: &RootSystem, i_set: &Parabolic, seed: &RootSet) -> Result<Ideal, IdealError> {
    let levi_pos = delta_i_pos(rs, i_set);
    if !seed.intersect(&levi_pos).is_empty() {
        return Err(IdealError::SeedIntersectsLevi);
    }
    let graph = step_graph(rs, i_set);
    let mut members = *seed;
    let mut stack: Vec<usize> = seed.iter().collect();
    while let Some(root_idx) = stack.pop() {
        let p = graph.node_pos[&root_idx];
        for &q in &graph.succs[p] {
            let j = graph.nodes[q];
            if !members.contains(j) {
                members.insert(j);
                stack.push(j);
            }
        }
    }
    Ok(Ideal { members })
}

/// Independent re-verification of both ideal invariants, straight from the
/// definition (no step graph, no closure).
pub fn is_valid_ideal(rs: &RootSystem, i_set: &Parabolic, ideal: &Ideal) -> bool {
    let levi_pos = delta_i_pos(rs, i_set);
    if !ideal.members.intersect(&levi_pos).is_empty() {
        return false;
    }
    let mut betas: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.coeffs().to_vec())
        .collect();
    for idx in levi_pos.iter() {
        betas.push(rs.positive_root(idx).negated().coeffs().to_vec());
    }
    for a_idx in ideal.members.iter() {
        let a = rs.positive_root(a_idx);
        for beta in &betas {
            let sum: Vec<i64> = a.coeffs().iter().zip(beta).map(|(x, y)| x + y).collect();
            if sum.iter().all(|&c| c >= 0) && sum.iter().any(|&c| c > 0) {
                if let Ok(r) = rs.root_from_coeffs(&sum) {
                    if r.is_positive() {
                        match rs.root_index(&r) {
                            Some(j) if ideal.members.contains(j) => {}
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}

/// Tarjan SCC on the step graph; returns the component id of every node
/// position.
fn condense(succs: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = succs.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0usize;
    let mut next_comp = 0usize;

    // iterative Tarjan
    enum Frame {
        Enter(usize),
        Resume(usize, usize),
    }
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut call = vec![Frame::Enter(start)];
        while let Some(frame) = call.pop() {
            match frame {
                Frame::Enter(v) => {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push(Frame::Resume(v, 0));
                }
                Frame::Resume(v, mut i) => {
                    let mut descended = false;
                    while i < succs[v].len() {
                        let w = succs[v][i];
                        i += 1;
                        if index[w] == usize::MAX {
                            call.push(Frame::Resume(v, i));
                            call.push(Frame::Enter(w));
                            descended = true;
                            break;
                        } else if on_stack[w] {
                            low[v] = low[v].min(index[w]);
                        }
                    }
                    if descended {
                        continue;
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if w == v {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                    if let Some(Frame::Resume(parent, _)) = call.last() {
                        let lv = low[v];
                        low[*parent] = low[*parent].min(lv);
                    }
                }
            }
        }
    }
    (comp, next_comp)
}

/// All of F_I, deduplicated, sorted by (cardinality, member indices).
pub fn enumerate_ideals(rs: &RootSystem, i_set: &Parabolic) -> Vec<Ideal> {
    let graph = step_graph(rs, i_set);
    let n = graph.nodes.len();
    if n == 0 {
        return vec![Ideal {
            members: RootSet::empty(),
        }];
    }
    let (comp, num_comps) = condense(&graph.succs);
    let mut comp_members: Vec<RootSet> = vec![RootSet::empty(); num_comps];
    for (pos, &root_idx) in graph.nodes.iter().enumerate() {
        comp_members[comp[pos]].insert(root_idx);
    }
    let mut comp_succs: Vec<Vec<usize>> = vec![Vec::new(); num_comps];
    for (pos, succs) in graph.succs.iter().enumerate() {
        for &q in succs {
            if comp[pos] != comp[q] {
                comp_succs[comp[pos]].push(comp[q]);
            }
        }
    }
    for s in &mut comp_succs {
        s.sort_unstable();
        s.dedup();
    }

    // topological order with successors first, so each component can be
    // admitted only once all its successors are in
    let order = topo_order(&comp_succs);
    let mut included = vec![false; num_comps];
    let mut out = Vec::new();
    let mut current = RootSet::empty();

    fn rec(
        k: usize,
        order: &[usize],
        comp_succs: &[Vec<usize>],
        comp_members: &[RootSet],
        included: &mut [bool],
        current: &mut RootSet,
        out: &mut Vec<Ideal>,
    ) {
        if k == order.len() {
            out.push(Ideal { members: *current });
            return;
        }
        let c = order[k];
        // exclude c
        rec(k + 1, order, comp_succs, comp_members, included, current, out);
        // include c only when every successor is already in
        if comp_succs[c].iter().all(|&s| included[s]) {
            included[c] = true;
            let saved = *current;
            *current = current.union(&comp_members[c]);
            rec(k + 1, order, comp_succs, comp_members, included, current, out);
            *current = saved;
            included[c] = false;
        }
    }
    rec(
        0,
        &order,
        &comp_succs,
        &comp_members,
        &mut included,
        &mut current,
        &mut out,
    );

    out.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.members.indices().cmp(&b.members.indices()))
    });
    out.dedup();
    out
}

/// Topological order of a DAG such that all successors of a node appear
/// before it.
fn topo_order(succs: &[Vec<usize>]) -> Vec<usize> {
    let n = succs.len();
    let mut state = vec![0u8; n]; // 0 new, 1 visiting, 2 done
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < succs[v].len() {
                let w = succs[v][*i];
                *i += 1;
                if state[w] == 0 {
                    state[w] = 1;
                    stack.push((w, 0));
                }
            } else {
                state[v] = 2;
                order.push(v);
                stack.pop();
            }
        }
    }
    order
}

/// Root-level abelian criterion: no two members (repeats allowed) sum to a
/// root.
pub fn is_abelian(rs: &RootSystem, ideal: &Ideal) -> bool {
    let members: Vec<&Root> = ideal.roots(rs);
    for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            let sum: Vec<i64> = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
            if rs.is_root(&sum) {
                return false;
            }
        }
    }
    true
}

/// Φ_min = {β ∈ Φ; β−α ∉ Φ for all α ∈ Δ⁺}: the antichain of generators.
pub fn minimal_roots(rs: &RootSystem, i_set: &Parabolic, ideal: &Ideal) -> RootSet {
    let mut min = RootSet::empty();
    'outer: for b_idx in ideal.members.iter() {
        let b = rs.positive_root(b_idx);
        for a in rs.positive_roots() {
            let diff: Vec<i64> = b.coeffs().iter().zip(a.coeffs()).map(|(x, y)| x - y).collect();
            if let Some(j) = rs
                .root_from_coeffs(&diff)
                .ok()
                .filter(|r| r.is_positive())
                .and_then(|r| rs.root_index(&r))
            {
                if ideal.members.contains(j) {
                    continue 'outer;
                }
            }
        }
        min.insert(b_idx);
    }
    debug_assert_eq!(close(rs, i_set, &min).map(|i| i.members), Ok(ideal.members));
    min
}

/// Partition of Δ⁺∖Δ_I into ∼_I classes, via union-find over single
/// ±η steps, η ∈ I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimClasses {
    /// Classes as sorted positive-root index lists, ordered by minimum.
    pub classes: Vec<Vec<usize>>,
}

impl SimClasses {
    pub fn class_of(&self, idx: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&idx))
    }
}

pub fn sim_classes(rs: &RootSystem, i_set: &Parabolic) -> SimClasses {
    let levi_pos = delta_i_pos(rs, i_set);
    let nodes: Vec<usize> = (0..rs.num_positive_roots())
        .filter(|&i| !levi_pos.contains(i))
        .collect();
    let pos: HashMap<usize, usize> = nodes.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &i in &nodes {
        let base = rs.positive_root(i);
        for eta in i_set.indices() {
            let step = rs.simple_root(eta);
            let sum: Vec<i64> = base
                .coeffs()
                .iter()
                .zip(step.coeffs())
                .map(|(a, b)| a + b)
                .collect();
            if let Ok(r) = rs.root_from_coeffs(&sum) {
                if let Some(j) = rs.root_index(&r) {
                    if let (Some(&p), Some(&q)) = (pos.get(&i), pos.get(&j)) {
                        let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                        if rp != rq {
                            parent[rp] = rq;
                        }
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for (p, &i) in nodes.iter().enumerate() {
        groups.entry(find(&mut parent, p)).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| c[0]);
    SimClasses { classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystemType};

    fn rs(f: Family, l: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(f, l).unwrap()).unwrap()
    }

    fn par(ix: &[usize]) -> Parabolic {
        Parabolic::from_indices(ix)
    }

    fn idx(rs: &RootSystem, coeffs: &[i64]) -> usize {
        rs.root_index(&rs.root_from_coeffs(coeffs).unwrap()).unwrap()
    }

    #[test]
    fn delta_i_examples() {
        let a3 = rs(Family::A, 3);
        assert!(delta_i(&a3, &Parabolic::empty()).is_empty());
        assert_eq!(delta_i(&a3, &Parabolic::full(3)).len(), 12); // all of Δ
        let d = delta_i(&a3, &par(&[1, 2]));
        assert_eq!(d.len(), 6); // ±α1, ±α2, ±(α1+α2)
        let mut coeffs: Vec<Vec<i64>> = d.iter().map(|r| r.coeffs().to_vec()).collect();
        coeffs.sort();
        assert!(coeffs.contains(&vec![1, 1, 0]));
        assert!(coeffs.contains(&vec![-1, -1, 0]));
    }

    #[test]
    fn close_examples() {
        let b2 = rs(Family::B, 2);
        let i1 = par(&[1]);
        assert_eq!(
            close(&b2, &i1, &RootSet::empty()).unwrap().size(),
            0
        );
        // seed {θ} closes to itself
        let th = RootSet::singleton(idx(&b2, &[1, 2]));
        assert_eq!(close(&b2, &i1, &th).unwrap().members(), &th);
        // seed {α1+α2}: the step −α1 ∈ Δ_I forces α2 in as well, so the
        // closure is the whole ∼_I class plus everything above it
        let seed = RootSet::singleton(idx(&b2, &[1, 1]));
        let closed = close(&b2, &i1, &seed).unwrap();
        assert_eq!(
            closed.members().indices(),
            vec![idx(&b2, &[0, 1]), idx(&b2, &[1, 1]), idx(&b2, &[1, 2])]
        );
        // seeding from the Levi part is rejected
        let bad = RootSet::singleton(idx(&b2, &[1, 0]));
        assert_eq!(close(&b2, &i1, &bad), Err(IdealError::SeedIntersectsLevi));
    }

    #[test]
    fn enumerate_small_counts() {
        let a2 = rs(Family::A, 2);
        assert_eq!(enumerate_ideals(&a2, &Parabolic::empty()).len(), 5); // C_3
        assert_eq!(enumerate_ideals(&a2, &Parabolic::full(2)).len(), 1);

        let f4 = rs(Family::F, 4);
        assert_eq!(enumerate_ideals(&f4, &Parabolic::empty()).len(), 105);
        assert_eq!(enumerate_ideals(&f4, &Parabolic::full(4)).len(), 1);
    }

    #[test]
    fn enumerated_ideals_are_valid_and_sorted() {
        for (f, l) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let r = rs(f, l);
            for i_set in Parabolic::all_subsets(l) {
                let ideals = enumerate_ideals(&r, &i_set);
                for id in &ideals {
                    assert!(is_valid_ideal(&r, &i_set, id), "{f}{l} I={i_set}");
                }
                for w in ideals.windows(2) {
                    let ka = (w[0].size(), w[0].members().indices());
                    let kb = (w[1].size(), w[1].members().indices());
                    assert!(ka < kb, "deterministic order violated");
                }
            }
        }
    }

    #[test]
    fn parabolic_ideals_are_borel_ideals() {
        for (f, l) in [(Family::B, 3), (Family::G, 2)] {
            let r = rs(f, l);
            let borel: Vec<RootSet> = enumerate_ideals(&r, &Parabolic::empty())
                .into_iter()
                .map(|i| *i.members())
                .collect();
            for i_set in Parabolic::all_subsets(l) {
                for id in enumerate_ideals(&r, &i_set) {
                    assert!(borel.contains(id.members()));
                }
            }
        }
    }

    #[test]
    fn abelian_examples() {
        let b3 = rs(Family::B, 3);
        let empty = close(&b3, &Parabolic::empty(), &RootSet::empty()).unwrap();
        assert!(is_abelian(&b3, &empty));
        let th = Ideal {
            members: RootSet::singleton(idx(&b3, &[1, 2, 2])),
        };
        assert!(is_abelian(&b3, &th));
        // B3, I={α1}: exactly 3 abelian ideals
        let count = enumerate_ideals(&b3, &par(&[1]))
            .iter()
            .filter(|i| is_abelian(&b3, i))
            .count();
        assert_eq!(count, 3);
    }

    #[test]
    fn minimal_roots_examples() {
        let b2 = rs(Family::B, 2);
        let i1 = par(&[1]);
        let empty = close(&b2, &i1, &RootSet::empty()).unwrap();
        assert!(minimal_roots(&b2, &i1, &empty).is_empty());
        let seed = RootSet::singleton(idx(&b2, &[1, 1]));
        let phi = close(&b2, &i1, &seed).unwrap();
        // Φ = {α2, α1+α2, α1+2α2}; its unique generator is α2
        assert_eq!(
            minimal_roots(&b2, &i1, &phi),
            RootSet::singleton(idx(&b2, &[0, 1]))
        );
        // regression: Φ = {α1+2α2} is a valid ideal of p_{α1} with Φ_min = Φ
        let th_set = RootSet::singleton(idx(&b2, &[1, 2]));
        let th_ideal = Ideal { members: th_set };
        assert!(is_valid_ideal(&b2, &i1, &th_ideal));
        assert_eq!(minimal_roots(&b2, &i1, &th_ideal), th_set);
    }

    #[test]
    fn sim_class_examples() {
        let a2 = rs(Family::A, 2);
        // I = ∅: singletons
        let sc = sim_classes(&a2, &Parabolic::empty());
        assert_eq!(sc.classes.len(), 3);
        assert!(sc.classes.iter().all(|c| c.len() == 1));
        // A2, I = {α1}: single class {α2, α1+α2}
        let sc = sim_classes(&a2, &par(&[1]));
        assert_eq!(sc.classes.len(), 1);
        assert_eq!(
            sc.classes[0],
            vec![idx(&a2, &[0, 1]), idx(&a2, &[1, 1])]
        );
        // A5, I={α2,α3}: class count equals the staircase box count
        let a5 = rs(Family::A, 5);
        let sc = sim_classes(&a5, &par(&[2, 3]));
        assert_eq!(sc.classes.len(), 6); // boxes of [3,2,1]
    }

    #[test]
    fn sim_classes_match_step_graph_components() {
        // the ∼_I classes coincide with the strongly connected components
        // of the full step graph at small rank
        for (f, l) in [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
            let r = rs(f, l);
            for i_set in Parabolic::all_subsets(l) {
                let graph = step_graph(&r, &i_set);
                let (comp, num) = condense(&graph.succs);
                let mut scc: Vec<Vec<usize>> = vec![Vec::new(); num];
                for (p, &i) in graph.nodes.iter().enumerate() {
                    scc[comp[p]].push(i);
                }
                for c in &mut scc {
                    c.sort_unstable();
                }
                scc.sort_by_key(|c| c[0]);
                scc.retain(|c| !c.is_empty());
                let sim = sim_classes(&r, &i_set);
                assert_eq!(scc, sim.classes, "{f}{l} I={i_set}");
            }
        }
    }

    #[test]
    fn antichain_bound_small() {
        for (f, l) in [(Family::A, 4), (Family::B, 3), (Family::D, 4)] {
            let r = rs(f, l);
            for i_set in Parabolic::all_subsets(l) {
                let bound = l - i_set.cardinality();
                for id in enumerate_ideals(&r, &i_set) {
                    assert!(minimal_roots(&r, &i_set, &id).len() <= bound);
                }
            }
        }
    }
}
