//! The affine Weyl group in its W_aff realization: elements are pairs
//! (v, τ) ∈ W × Q∨ acting on V by x ↦ v(x+τ) and on affine roots β+kδ by
//! (β, k) ↦ (v(β), k − (β,τ)). δ is never materialized; the integer level
//! k carries it.
//!
//! The module provides inversion sets N(w), the ideal ↦ element map w_Φ
//! with its inverse reconstruction from inversions, the Borel-/I-
//! compatibility tests, and the coroot-lattice domains D and D̃.

use crate::ideals::{Ideal, Parabolic};
use crate::ratlin;
use crate::rootsys::{Root, RootSystem};
use crate::Rat;
use num::{ToPrimitive, Zero};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error("simple reflection index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("the given set is not the inversion set of any element")]
    NotAnInversionSet,
    #[error("element is not Borel-compatible")]
    NotBorelCompatible,
}

/// A real affine root β + kδ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRoot {
    pub finite: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i64) -> Self {
        AffineRoot { finite, level }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }
}

impl PartialOrd for AffineRoot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineRoot {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.level
            .cmp(&other.level)
            .then_with(|| self.finite.coeffs().cmp(other.finite.coeffs()))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            0 => write!(f, "{}", self.finite),
            k => write!(f, "{}+{}d", self.finite, k),
        }
    }
}

/// Set of positive affine roots; N(w) for some w when produced by
/// [`inversions`] or [`l_phi`].
pub type InversionSet = BTreeSet<AffineRoot>;

pub type Matrix = Vec<Vec<i64>>;

pub fn identity_matrix(l: usize) -> Matrix {
    (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let l = a.len();
    let mut out = vec![vec![0i64; l]; l];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..l).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_apply(m: &Matrix, x: &[i64]) -> Vec<i64> {
    (0..m.len())
        .map(|i| (0..m.len()).map(|j| m[i][j] * x[j]).sum())
        .collect()
}

fn mat_apply_rat(m: &Matrix, x: &[Rat]) -> Vec<Rat> {
    (0..m.len())
        .map(|i| {
            let mut acc = ratlin::zero();
            for (j, xj) in x.iter().enumerate() {
                if m[i][j] != 0 {
                    acc += ratlin::from_i64(m[i][j]) * xj;
                }
            }
            acc
        })
        .collect()
}

/// An element w = v·t_τ of the affine Weyl group. The finite part v is
/// stored as its action matrix on simple-root coordinates, together with
/// its inverse; the translation τ lies in the coroot lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeylElement {
    linear: Matrix,
    linear_inv: Matrix,
    trans: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            linear: identity_matrix(rank),
            linear_inv: identity_matrix(rank),
            trans: vec![0; rank],
        }
    }

    /// Assemble v·t_τ from a Weyl matrix and a coroot-lattice vector.
    pub fn new(rs: &RootSystem, linear: Matrix, trans: Vec<i64>) -> Self {
        assert!(rs.in_coroot_lattice(&trans), "τ must lie in Q∨");
        let rat: Vec<Vec<Rat>> = linear
            .iter()
            .map(|row| row.iter().map(|&v| ratlin::from_i64(v)).collect())
            .collect();
        let inv = ratlin::inverse(&rat).expect("Weyl matrices are invertible");
        let linear_inv: Matrix = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        assert!(v.is_integer());
                        v.numer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        AffineWeylElement {
            linear,
            linear_inv,
            trans,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&c| c == 0) && self.linear == identity_matrix(self.linear.len())
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn trans(&self) -> &[i64] {
        &self.trans
    }

    /// Group law: (v1,τ1)(v2,τ2) = (v1v2, τ2 + v2⁻¹(τ1)).
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let linear = mat_mul(&self.linear, &other.linear);
        let linear_inv = mat_mul(&other.linear_inv, &self.linear_inv);
        let pulled = mat_apply(&other.linear_inv, &self.trans);
        let trans = other
            .trans
            .iter()
            .zip(&pulled)
            .map(|(a, b)| a + b)
            .collect();
        AffineWeylElement {
            linear,
            linear_inv,
            trans,
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let trans = mat_apply(&self.linear, &self.trans)
            .into_iter()
            .map(|c| -c)
            .collect();
        AffineWeylElement {
            linear: self.linear_inv.clone(),
            linear_inv: self.linear.clone(),
            trans,
        }
    }

    /// Action on V: x ↦ v(x + τ).
    pub fn act_vec(&self, x: &[Rat]) -> Vec<Rat> {
        let shifted: Vec<Rat> = x
            .iter()
            .zip(&self.trans)
            .map(|(xi, &t)| xi + ratlin::from_i64(t))
            .collect();
        mat_apply_rat(&self.linear, &shifted)
    }

    /// Action on affine roots: (β, k) ↦ (v(β), k − (β, τ)).
    pub fn act_affine_root(&self, rs: &RootSystem, ar: &AffineRoot) -> AffineRoot {
        let pairing = rs.pairing_int(ar.finite.coeffs(), &self.trans);
        assert!(pairing.is_integer(), "root paired with Q∨ is integral");
        let level = ar.level - pairing.numer().to_i64().unwrap();
        let coeffs = mat_apply(&self.linear, ar.finite.coeffs());
        let finite = rs.root_from_coeffs(&coeffs).expect("W permutes Δ");
        AffineRoot { finite, level }
    }
}

/// The i-th simple affine root: α_0 = −θ+δ for i = 0, α_i otherwise.
pub fn simple_affine_root(rs: &RootSystem, i: usize) -> Result<AffineRoot, AffineError> {
    let l = rs.rank();
    if i > l {
        return Err(AffineError::IndexOutOfRange(i));
    }
    Ok(if i == 0 {
        AffineRoot::new(rs.highest_root().negated(), 1)
    } else {
        AffineRoot::new(rs.simple_root(i), 0)
    })
}

/// Index in Π̂ of a simple affine root, if it is one.
pub fn simple_affine_index(rs: &RootSystem, ar: &AffineRoot) -> Option<usize> {
    match ar.level {
        0 => {
            let c = ar.finite.coeffs();
            let i = (1..=rs.rank()).find(|&i| c[i - 1] == 1)?;
            (c.iter().map(|x| x.abs()).sum::<i64>() == 1).then_some(i)
        }
        1 => (ar.finite.coeffs() == rs.highest_root().negated().coeffs()).then_some(0),
        _ => None,
    }
}

/// s_{α_i} for i ≥ 1, and the affine reflection s_{α_0} = (s_θ, −θ∨)
/// fixing the wall H_{θ,1}.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<AffineWeylElement, AffineError> {
    let l = rs.rank();
    if i > l {
        return Err(AffineError::IndexOutOfRange(i));
    }
    if i == 0 {
        let theta = rs.highest_root().clone();
        let theta_cov = rs.coroot_int(&theta).expect("θ is a root");
        let mut m = identity_matrix(l);
        for j in 1..=l {
            let pairing = rs.pair_with_coroot(rs.simple_root(j).coeffs(), &theta);
            for (row, mrow) in m.iter_mut().enumerate() {
                mrow[j - 1] -= pairing * theta.coeffs()[row];
            }
        }
        let trans: Vec<i64> = theta_cov.iter().map(|&c| -c).collect();
        let m_inv = m.clone(); // reflections are involutive
        Ok(AffineWeylElement {
            linear: m,
            linear_inv: m_inv,
            trans,
        })
    } else {
        let mut m = identity_matrix(l);
        for j in 1..=l {
            m[i - 1][j - 1] -= rs.cartan(j, i);
        }
        Ok(AffineWeylElement {
            linear: m.clone(),
            linear_inv: m,
            trans: vec![0; l],
        })
    }
}

/// Product s_{i_1} ∘ s_{i_2} ∘ ⋯ over Π̂ indices.
pub fn element_from_word(rs: &RootSystem, word: &[usize]) -> Result<AffineWeylElement, AffineError> {
    let mut w = AffineWeylElement::identity(rs.rank());
    for &i in word {
        w = w.compose(&simple_reflection(rs, i)?);
    }
    Ok(w)
}

/// A reduced word for w by greedy descent: repeatedly strip the smallest
/// simple affine root lying in N(w).
pub fn reduced_word(rs: &RootSystem, w: &AffineWeylElement) -> Vec<usize> {
    let l = rs.rank();
    let mut word = Vec::new();
    let mut cur = w.clone();
    let cap = 100_000;
    while !cur.is_identity() {
        let inv = cur.inverse();
        let i = (0..=l)
            .find(|&i| {
                let ar = simple_affine_root(rs, i).expect("index in range");
                !inv.act_affine_root(rs, &ar).is_positive()
            })
            .expect("a nonidentity element has a simple inversion");
        word.push(i);
        cur = simple_reflection(rs, i).expect("in range").compose(&cur);
        assert!(word.len() < cap, "descent failed to terminate");
    }
    word
}

/// N(w) = {β ∈ Δ̂⁺ : w⁻¹(β) < 0}, via the word formula
/// N(w) = {s_{β_1}⋯s_{β_{p−1}}(β_p)}.
pub fn inversions(rs: &RootSystem, w: &AffineWeylElement) -> InversionSet {
    let word = reduced_word(rs, w);
    let mut out = InversionSet::new();
    let mut prefix = AffineWeylElement::identity(rs.rank());
    for &i in &word {
        let s = simple_reflection(rs, i).expect("in range");
        let ar = simple_affine_root(rs, i).expect("in range");
        out.insert(prefix.act_affine_root(rs, &ar));
        prefix = prefix.compose(&s);
    }
    debug_assert_eq!(out.len(), word.len(), "|N(w)| = ℓ(w)");
    out
}

/// Length ℓ(w) = |N(w)|.
pub fn length(rs: &RootSystem, w: &AffineWeylElement) -> usize {
    reduced_word(rs, w).len()
}

/// Unique element with the given inversion set: peel simple roots off L,
/// replacing L by s_β(L∖{β}).
pub fn element_from_inversions(
    rs: &RootSystem,
    inversion_set: &InversionSet,
) -> Result<AffineWeylElement, AffineError> {
    let mut remaining: Vec<AffineRoot> = inversion_set.iter().cloned().collect();
    let mut word = Vec::new();
    while !remaining.is_empty() {
        let idx = (0..=rs.rank())
            .find(|&i| {
                let ar = simple_affine_root(rs, i).expect("in range");
                remaining.contains(&ar)
            })
            .ok_or(AffineError::NotAnInversionSet)?;
        let ar = simple_affine_root(rs, idx).expect("in range");
        let s = simple_reflection(rs, idx).expect("in range");
        let mut next = Vec::with_capacity(remaining.len() - 1);
        for b in remaining.into_iter().filter(|b| *b != ar) {
            let image = s.act_affine_root(rs, &b);
            if !image.is_positive() {
                return Err(AffineError::NotAnInversionSet);
            }
            next.push(image);
        }
        remaining = next;
        word.push(idx);
    }
    element_from_word(rs, &word)
}

/// L_Φ = ∪_{k≥1} (−Φ^k + kδ) where Φ^k = (Φ^{k−1}+Φ) ∩ Δ.
pub fn l_phi(rs: &RootSystem, ideal: &Ideal) -> InversionSet {
    let base: Vec<&Root> = ideal.roots(rs);
    let mut out = InversionSet::new();
    let mut layer: Vec<usize> = ideal.members().indices();
    let mut k = 1i64;
    while !layer.is_empty() {
        for &idx in &layer {
            out.insert(AffineRoot::new(rs.positive_root(idx).negated(), k));
        }
        let mut next = BTreeSet::new();
        for &idx in &layer {
            let a = rs.positive_root(idx);
            for b in &base {
                let sum: Vec<i64> =
                    a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
                if let Some(j) = rs.index_of_coeffs(&sum) {
                    next.insert(j);
                }
            }
        }
        layer = next.into_iter().collect();
        k += 1;
    }
    out
}

/// The element w_Φ with N(w_Φ) = L_Φ.
pub fn w_phi(rs: &RootSystem, ideal: &Ideal) -> AffineWeylElement {
    element_from_inversions(rs, &l_phi(rs, ideal))
        .expect("L_Φ is an inversion set for every ideal")
}

/// Φ_w = {α ∈ Δ : −α+δ ∈ N(w)}.
pub fn phi_w(rs: &RootSystem, w: &AffineWeylElement) -> Vec<Root> {
    let mut out: Vec<Root> = inversions(rs, w)
        .iter()
        .filter(|ar| ar.level == 1)
        .map(|ar| ar.finite.negated())
        .collect();
    out.sort();
    out
}

/// Borel compatibility: w⁻¹(α) > 0 for all α ∈ Π, and every simple
/// affine root sent negative lands on β − δ with β ∈ Δ⁺.
pub fn is_borel_compatible(rs: &RootSystem, w: &AffineWeylElement) -> bool {
    let inv = w.inverse();
    for i in 1..=rs.rank() {
        let ar = simple_affine_root(rs, i).expect("in range");
        if !inv.act_affine_root(rs, &ar).is_positive() {
            return false;
        }
    }
    for i in 0..=rs.rank() {
        let ar = simple_affine_root(rs, i).expect("in range");
        let image = w.act_affine_root(rs, &ar);
        if !image.is_positive() && !(image.level == -1 && image.finite.is_positive()) {
            return false;
        }
    }
    true
}

/// Condition (e): w⁻¹(α) ∈ Π̂ for all α ∈ I.
pub fn is_i_compatible(
    rs: &RootSystem,
    w: &AffineWeylElement,
    i_set: &Parabolic,
) -> Result<bool, AffineError> {
    if !is_borel_compatible(rs, w) {
        return Err(AffineError::NotBorelCompatible);
    }
    let inv = w.inverse();
    for i in i_set.indices() {
        let ar = AffineRoot::new(rs.simple_root(i), 0);
        if simple_affine_index(rs, &inv.act_affine_root(rs, &ar)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// I_w = {α ∈ Π : w⁻¹(α) ∈ Π̂}, the maximal I for which w is
/// I-compatible.
pub fn i_w(rs: &RootSystem, w: &AffineWeylElement) -> Result<Parabolic, AffineError> {
    if !is_borel_compatible(rs, w) {
        return Err(AffineError::NotBorelCompatible);
    }
    let inv = w.inverse();
    let mut out = Parabolic::empty();
    for i in 1..=rs.rank() {
        let ar = AffineRoot::new(rs.simple_root(i), 0);
        if simple_affine_index(rs, &inv.act_affine_root(rs, &ar)).is_some() {
            out.insert(i);
        }
    }
    Ok(out)
}

/// Π̂ indices of w⁻¹(I), for I-compatible w.
pub fn inverse_image_nodes(
    rs: &RootSystem,
    w: &AffineWeylElement,
    i_set: &Parabolic,
) -> Result<Vec<usize>, AffineError> {
    if !is_i_compatible(rs, w, i_set)? {
        return Err(AffineError::NotBorelCompatible);
    }
    let inv = w.inverse();
    let mut out: Vec<usize> = i_set
        .indices()
        .iter()
        .map(|&i| {
            let ar = AffineRoot::new(rs.simple_root(i), 0);
            simple_affine_index(rs, &inv.act_affine_root(rs, &ar)).expect("I-compatible")
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// D_τ = {α ∈ Π : (α,τ) = 0}, plus −θ when (θ,τ) = −1.
pub fn d_tau(rs: &RootSystem, tau: &[i64]) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=rs.rank() {
        if rs.pairing_int(rs.simple_root(i).coeffs(), tau).is_zero() {
            out.push(rs.simple_root(i));
        }
    }
    let theta = rs.highest_root();
    if rs.pairing_int(theta.coeffs(), tau) == ratlin::from_i64(-1) {
        out.push(theta.negated());
    }
    out
}

/// D = {τ ∈ Q∨ : (τ,α_j) ≤ 1 for all j, (τ,θ) ≥ −2}.
pub fn in_d(rs: &RootSystem, tau: &[i64]) -> bool {
    if !rs.in_coroot_lattice(tau) {
        return false;
    }
    for j in 1..=rs.rank() {
        if rs.pairing_int(tau, rs.simple_root(j).coeffs()) > ratlin::from_i64(1) {
            return false;
        }
    }
    rs.pairing_int(tau, rs.highest_root().coeffs()) >= ratlin::from_i64(-2)
}

/// D̃ membership: v·t_τ maps the open alcove into the open chamber.
/// Tested on the closed vertex images; openness follows because the
/// image is full-dimensional.
pub fn in_d_tilde(rs: &RootSystem, tau: &[i64], v: &Matrix) -> bool {
    let l = rs.rank();
    let w = AffineWeylElement::new(rs, v.clone(), tau.to_vec());
    for j in 0..=l {
        let vertex = alcove_vertex(rs, j);
        let image = w.act_vec(&vertex);
        for i in 1..=l {
            let alpha: Vec<Rat> = (1..=l)
                .map(|k| ratlin::from_i64(i64::from(k == i)))
                .collect();
            if rs.pairing(&alpha, &image) < ratlin::zero() {
                return false;
            }
        }
    }
    true
}

/// ω̄_j = ω_j/n_j for j ≥ 1, and ω̄_0 = 0: the vertices of the closed
/// fundamental alcove.
pub fn alcove_vertex(rs: &RootSystem, j: usize) -> Vec<Rat> {
    if j == 0 {
        return vec![ratlin::zero(); rs.rank()];
    }
    let nj = ratlin::from_i64(rs.mark(j));
    rs.fundamental_coweight(j).iter().map(|c| c / &nj).collect()
}

/// The finite Weyl group as action matrices, by breadth-first closure
/// over the simple reflections; deterministic discovery order.
pub fn weyl_group(rs: &RootSystem) -> Vec<Matrix> {
    let l = rs.rank();
    let gens: Vec<Matrix> = (1..=l)
        .map(|i| simple_reflection(rs, i).expect("in range").linear)
        .collect();
    let id = identity_matrix(l);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = mat_mul(&m, g);
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    order
}

/// Coroot-lattice points of D, by scanning a coordinate box of the given
/// radius in the coroot basis. The box must be large enough to cover D;
/// callers validate coverage through the counts they check.
pub fn d_lattice_points(rs: &RootSystem, radius: i64) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let coroots: Vec<Vec<i64>> = (1..=l)
        .map(|i| rs.coroot_int(&rs.simple_root(i)).expect("simple root"))
        .collect();
    let mut out = Vec::new();
    let mut coords = vec![-radius; l];
    loop {
        let tau: Vec<i64> = (0..l)
            .map(|r| (0..l).map(|i| coords[i] * coroots[i][r]).sum())
            .collect();
        if in_d(rs, &tau) {
            out.push(tau);
        }
        let mut pos = 0;
        loop {
            if pos == l {
                out.sort();
                out.dedup();
                return out;
            }
            coords[pos] += 1;
            if coords[pos] <= radius {
                break;
            }
            coords[pos] = -radius;
            pos += 1;
        }
    }
}
