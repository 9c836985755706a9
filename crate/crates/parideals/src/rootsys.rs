//! Finite irreducible root systems of types A–G with an exact rational
//! bilinear form.
//!
//! Simple roots are numbered 1..=l following the classical tables: types
//! A–D are chains (D forks at the end, with α_{l-1} and α_l both attached
//! to α_{l-2}), F4 is 1—2⇒3—4 with the double edge between nodes 2 and 3,
//! and G2 has α1 short. The form is normalized so that long roots have
//! squared length 2, which keeps every Gram entry rational.
//!
//! Coefficient vectors are stored 0-based: `coeffs[i-1]` is the
//! coefficient of α_i.

use crate::ratlin;
use crate::Rat;
use num::Zero;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("rank {rank} is not valid for type {family:?}")]
    InvalidRank { family: Family, rank: usize },
    #[error("vector is not a root of this system")]
    NotARoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.trim() {
            "A" | "a" => Some(Family::A),
            "B" | "b" => Some(Family::B),
            "C" | "c" => Some(Family::C),
            "D" | "d" => Some(Family::D),
            "E" | "e" => Some(Family::E),
            "F" | "f" => Some(Family::F),
            "G" | "g" => Some(Family::G),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(RootError::InvalidRank { family, rank })
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, as an integer coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient of α_i, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Indices i with nonzero coefficient, 1-based.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.0.len()).filter(|&i| self.coeff(i) != 0).collect()
    }

    fn add(&self, other: &Root) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&c| c == 0) {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", idx + 1)?;
        }
        Ok(())
    }
}

/// Immutable root datum: Cartan matrix, Gram form, the full list of
/// positive roots, highest root marks and fundamental coweights.
pub struct RootSystem {
    rtype: RootSystemType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rat>>,
    positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    highest_root: Root,
    marks: Vec<i64>,
    coweights: Vec<Vec<Rat>>,
    /// 2/(α_i,α_i) for every simple root: α_i∨ = ratio_i · α_i, an integer.
    coroot_ratio: Vec<i64>,
}

impl RootSystem {
    pub fn build(rtype: RootSystemType) -> Result<RootSystem, RootError> {
        // revalidate in case the type was constructed by hand
        RootSystemType::new(rtype.family, rtype.rank)?;
        let l = rtype.rank;
        let cartan = cartan_matrix(rtype);
        let d = length_halves(rtype);
        let mut gram = vec![vec![ratlin::zero(); l]; l];
        for i in 0..l {
            for j in 0..l {
                gram[i][j] = ratlin::from_i64(cartan[i][j]) * &d[j];
            }
        }
        for i in 0..l {
            for j in 0..l {
                assert_eq!(gram[i][j], gram[j][i], "gram must be symmetric");
            }
        }

        let positive_roots = generate_positive_roots(l, &cartan);
        assert!(
            positive_roots.len() <= 128,
            "positive root count exceeds bitset width"
        );
        let mut index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            index.insert(r.0.clone(), k);
        }

        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty root system")
            .clone();
        // θ dominates every positive root coefficientwise.
        for r in &positive_roots {
            for i in 1..=l {
                assert!(highest_root.coeff(i) >= r.coeff(i), "highest root not maximal");
            }
        }
        let marks = highest_root.0.clone();

        let coweights = ratlin::inverse(&gram).expect("gram is nondegenerate");
        let coweights: Vec<Vec<Rat>> = (0..l)
            .map(|i| (0..l).map(|j| coweights[j][i].clone()).collect())
            .collect();

        let coroot_ratio: Vec<i64> = d
            .iter()
            .map(|di| {
                let r = di.recip();
                assert!(r.is_integer());
                num::ToPrimitive::to_i64(r.numer()).unwrap()
            })
            .collect();

        Ok(RootSystem {
            rtype,
            cartan,
            gram,
            positive_roots,
            index,
            highest_root,
            marks,
            coweights,
            coroot_ratio,
        })
    }

    pub fn rtype(&self) -> RootSystemType {
        self.rtype
    }

    pub fn rank(&self) -> usize {
        self.rtype.rank
    }

    /// Cartan integer ⟨α_i, α_j∨⟩, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Gram entry (α_i, α_j), 1-based.
    pub fn gram(&self, i: usize, j: usize) -> &Rat {
        &self.gram[i - 1][j - 1]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_root(&self, idx: usize) -> &Root {
        &self.positive_roots[idx]
    }

    /// Index of a positive root in the fixed (height, lex) order.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    /// Same lookup, keyed directly by a coefficient vector.
    pub fn index_of_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    pub fn root_from_coeffs(&self, coeffs: &[i64]) -> Result<Root, RootError> {
        if self.is_root(coeffs) {
            Ok(Root(coeffs.to_vec()))
        } else {
            Err(RootError::NotARoot)
        }
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    /// Marks n_1..n_l (coefficients of θ); `mark(0)` is n_0 = 1.
    pub fn mark(&self, i: usize) -> i64 {
        if i == 0 {
            1
        } else {
            self.marks[i - 1]
        }
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Fundamental coweight ω_i with (ω_i, α_j) = δ_ij, 1-based.
    pub fn fundamental_coweight(&self, i: usize) -> &[Rat] {
        &self.coweights[i - 1]
    }

    pub fn sum_root(&self, a: &Root, b: &Root) -> Result<Option<Root>, RootError> {
        if !self.is_root(a.coeffs()) || !self.is_root(b.coeffs()) {
            return Err(RootError::NotARoot);
        }
        let sum = a.add(b);
        if self.is_root(&sum) {
            Ok(Some(Root(sum)))
        } else {
            Ok(None)
        }
    }

    /// Exact value of the bilinear form on rational vectors in simple-root
    /// coordinates.
    pub fn pairing(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = ratlin::zero();
        for i in 0..self.rank() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                if y[j].is_zero() {
                    continue;
                }
                acc += &x[i] * &self.gram[i][j] * &y[j];
            }
        }
        acc
    }

    pub fn pairing_int(&self, x: &[i64], y: &[i64]) -> Rat {
        let xr = to_rat_vec(x);
        let yr = to_rat_vec(y);
        self.pairing(&xr, &yr)
    }

    /// (α, α) for a root.
    pub fn norm_sq(&self, a: &Root) -> Rat {
        self.pairing_int(a.coeffs(), a.coeffs())
    }

    /// α∨ = 2α/(α,α) as a rational vector.
    pub fn coroot(&self, a: &Root) -> Result<Vec<Rat>, RootError> {
        Ok(to_rat_vec(&self.coroot_int(a)?))
    }

    /// α∨ in simple-root coordinates; always an integer vector.
    pub fn coroot_int(&self, a: &Root) -> Result<Vec<i64>, RootError> {
        if !self.is_root(a.coeffs()) {
            return Err(RootError::NotARoot);
        }
        let nsq = self.norm_sq(a);
        let scale = Rat::from_integer(2.into()) / nsq;
        let mut out = Vec::with_capacity(self.rank());
        for &c in a.coeffs() {
            let v = &scale * ratlin::from_i64(c);
            assert!(v.is_integer(), "coroot has integer simple-root coordinates");
            out.push(num::ToPrimitive::to_i64(v.numer()).unwrap());
        }
        Ok(out)
    }

    /// ⟨x, α∨⟩ for integer x, as an exact integer.
    pub fn pair_with_coroot(&self, x: &[i64], a: &Root) -> i64 {
        let cor = self.coroot_int(a).expect("valid root");
        let v = self.pairing_int(x, &cor);
        assert!(v.is_integer());
        num::ToPrimitive::to_i64(v.numer()).unwrap()
    }

    /// s_α(x) = x − 2(α,x)/(α,α) α on rational vectors.
    pub fn reflect(&self, a: &Root, x: &[Rat]) -> Result<Vec<Rat>, RootError> {
        let cor = self.coroot(a)?;
        let factor = self.pairing(x, &cor);
        Ok(x.iter()
            .zip(a.coeffs())
            .map(|(xi, &ai)| xi - &factor * ratlin::from_i64(ai))
            .collect())
    }

    pub fn reflect_root(&self, a: &Root, b: &Root) -> Result<Root, RootError> {
        if !self.is_root(b.coeffs()) {
            return Err(RootError::NotARoot);
        }
        let factor = self.pair_with_coroot(b.coeffs(), a);
        let coeffs: Vec<i64> = b
            .coeffs()
            .iter()
            .zip(a.coeffs())
            .map(|(&bi, &ai)| bi - factor * ai)
            .collect();
        debug_assert!(self.is_root(&coeffs));
        Ok(Root(coeffs))
    }

    /// Membership in the coroot lattice Q∨ = ⊕ Z·α_i∨.
    pub fn in_coroot_lattice(&self, v: &[i64]) -> bool {
        v.iter()
            .zip(&self.coroot_ratio)
            .all(|(&c, &m)| c % m == 0)
    }

    /// Dynkin adjacency of simple roots, 1-based.
    pub fn dynkin_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan(i, j) != 0
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.rtype)
    }
}

fn to_rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&c| ratlin::from_i64(c)).collect()
}

/// Cartan matrix C[i][j] = ⟨α_{i+1}, α_{j+1}∨⟩ (0-based storage).
fn cartan_matrix(rtype: RootSystemType) -> Vec<Vec<i64>> {
    let l = rtype.rank;
    let mut c = vec![vec![0i64; l]; l];
    for i in 0..l {
        c[i][i] = 2;
    }
    fn chain(c: &mut [Vec<i64>], i: usize, j: usize) {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    }
    match rtype.family {
        Family::A => {
            for i in 1..l {
                chain(&mut c, i, i + 1);
            }
        }
        Family::B => {
            for i in 1..l - 1 {
                chain(&mut c, i, i + 1);
            }
            // α_l short: ⟨α_{l-1}, α_l∨⟩ = −2
            c[l - 2][l - 1] = -2;
            c[l - 1][l - 2] = -1;
        }
        Family::C => {
            for i in 1..l - 1 {
                chain(&mut c, i, i + 1);
            }
            // α_l long: ⟨α_l, α_{l-1}∨⟩ = −2
            c[l - 2][l - 1] = -1;
            c[l - 1][l - 2] = -2;
        }
        Family::D => {
            // chain 1—⋯—(l−2)—(l−1), with α_l also attached to α_{l-2}
            for i in 1..l - 1 {
                chain(&mut c, i, i + 1);
            }
            chain(&mut c, l - 2, l);
        }
        Family::E => {
            // chain 1—3—4—5—6(—7—8), node 2 attached to node 4
            chain(&mut c, 1, 3);
            chain(&mut c, 3, 4);
            chain(&mut c, 4, 5);
            chain(&mut c, 5, 6);
            if l >= 7 {
                chain(&mut c, 6, 7);
            }
            if l >= 8 {
                chain(&mut c, 7, 8);
            }
            chain(&mut c, 2, 4);
        }
        Family::F => {
            // numbering of the computer-algebra tables this build
            // reproduces: the physical chain long—long⇒short—short
            // carries labels 2, 4, 3, 1
            chain(&mut c, 1, 3);
            chain(&mut c, 2, 4);
            // double edge 4 ⇒ 3, α3 short
            c[3][2] = -2;
            c[2][3] = -1;
        }
        Family::G => {
            // α1 short, α2 long
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// d_i = (α_i, α_i)/2, with long roots normalized to d = 1.
fn length_halves(rtype: RootSystemType) -> Vec<Rat> {
    let l = rtype.rank;
    let one = ratlin::one;
    let half = || ratlin::ratio(1, 2);
    match rtype.family {
        Family::A | Family::D | Family::E => vec![one(); l],
        Family::B => {
            let mut d = vec![one(); l];
            d[l - 1] = half();
            d
        }
        Family::C => {
            let mut d = vec![half(); l];
            d[l - 1] = one();
            d
        }
        Family::F => vec![half(), one(), half(), one()],
        Family::G => vec![ratlin::ratio(1, 3), one()],
    }
}

/// Generate Δ⁺ by root strings, graded by height, then sort
/// (height, lexicographic).
fn generate_positive_roots(l: usize, cartan: &[Vec<i64>]) -> Vec<Root> {
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..l {
        let mut v = vec![0i64; l];
        v[i] = 1;
        known.insert(v.clone(), ());
        frontier.push(v);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..l {
                // p = depth of the α_i-string below β
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(cartan).map(|(&bj, row)| bj * row[i]).sum();
                if p - pairing >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Root> = known.into_keys().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then(a.0.cmp(&b.0)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, l: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(f, l).unwrap()).unwrap()
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(RootSystemType::new(Family::B, 1).is_err());
        assert!(RootSystemType::new(Family::D, 2).is_err());
        assert!(RootSystemType::new(Family::E, 5).is_err());
        assert!(RootSystemType::new(Family::F, 3).is_err());
        assert!(RootSystemType::new(Family::G, 3).is_err());
        assert!(RootSystemType::new(Family::A, 1).is_ok());
    }

    #[test]
    fn positive_root_counts() {
        // classical counts: A: l(l+1)/2, B/C: l², D: l(l−1), F4: 24, G2: 6
        for l in 1..=8 {
            assert_eq!(rs(Family::A, l).num_positive_roots(), l * (l + 1) / 2);
        }
        for l in 2..=8 {
            assert_eq!(rs(Family::B, l).num_positive_roots(), l * l);
            assert_eq!(rs(Family::C, l).num_positive_roots(), l * l);
        }
        for l in 3..=8 {
            assert_eq!(rs(Family::D, l).num_positive_roots(), l * (l - 1));
        }
        assert_eq!(rs(Family::E, 6).num_positive_roots(), 36);
        assert_eq!(rs(Family::E, 7).num_positive_roots(), 63);
        assert_eq!(rs(Family::E, 8).num_positive_roots(), 120);
        assert_eq!(rs(Family::F, 4).num_positive_roots(), 24);
        assert_eq!(rs(Family::G, 2).num_positive_roots(), 6);
    }

    #[test]
    fn a2_marks_and_theta() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.highest_root().coeffs(), &[1, 1]);
        assert_eq!(a2.marks(), &[1, 1]);
    }

    #[test]
    fn g2_marks() {
        let g2 = rs(Family::G, 2);
        let mut m = g2.marks().to_vec();
        m.sort();
        assert_eq!(m, vec![2, 3]);
        // α1 short under this numbering
        assert_eq!(g2.marks(), &[3, 2]);
    }

    #[test]
    fn known_highest_roots() {
        assert_eq!(rs(Family::B, 4).marks(), &[1, 2, 2, 2]);
        assert_eq!(rs(Family::C, 4).marks(), &[2, 2, 2, 1]);
        assert_eq!(rs(Family::D, 5).marks(), &[1, 2, 2, 1, 1]);
        // F4 marks under this numbering; the chain reads 2—4⇒3—1, so the
        // classical (2,3,4,2) along the chain lands as (2,2,4,3)
        assert_eq!(rs(Family::F, 4).marks(), &[2, 2, 4, 3]);
        assert_eq!(rs(Family::E, 6).marks(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(rs(Family::E, 8).marks(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn gram_is_positive_definite() {
        for (f, l) in [
            (Family::A, 5),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let r = rs(f, l);
            // leading principal minors all positive
            for k in 1..=l {
                let minor: Vec<Vec<Rat>> = (0..k)
                    .map(|i| (0..k).map(|j| r.gram(i + 1, j + 1).clone()).collect())
                    .collect();
                assert!(ratlin::det(&minor) > ratlin::zero(), "{f}{l} minor {k}");
            }
        }
    }

    #[test]
    fn theta_norm_is_two() {
        for (f, l) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
            (Family::E, 6),
        ] {
            let r = rs(f, l);
            assert_eq!(r.norm_sq(r.highest_root()), ratlin::from_i64(2), "{f}{l}");
        }
    }

    #[test]
    fn sum_root_examples() {
        let a2 = rs(Family::A, 2);
        let s = a2
            .sum_root(&a2.simple_root(1), &a2.simple_root(2))
            .unwrap()
            .unwrap();
        assert_eq!(s.coeffs(), &[1, 1]);
        // θ + α1 exceeds the highest root
        assert_eq!(
            a2.sum_root(a2.highest_root(), &a2.simple_root(1)).unwrap(),
            None
        );

        // B2: α2 + (α1+α2) = α1+2α2, read off the generated table
        let b2 = rs(Family::B, 2);
        let a1a2 = b2.root_from_coeffs(&[1, 1]).unwrap();
        let s = b2.sum_root(&b2.simple_root(2), &a1a2).unwrap().unwrap();
        assert_eq!(s.coeffs(), &[1, 2]);

        let bad = Root(vec![5, 5]);
        assert_eq!(
            a2.sum_root(&bad, &a2.simple_root(1)),
            Err(RootError::NotARoot)
        );
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(*a2.gram(1, 2), ratlin::from_i64(-1));
        let theta = a2.highest_root();
        assert_eq!(a2.norm_sq(theta), ratlin::from_i64(2));
        // (ω_i, α_j) = δ_ij
        for (f, l) in [(Family::B, 3), (Family::F, 4), (Family::G, 2)] {
            let r = rs(f, l);
            for i in 1..=l {
                for j in 1..=l {
                    let om = r.fundamental_coweight(i);
                    let aj: Vec<Rat> = (1..=l)
                        .map(|k| ratlin::from_i64(if k == j { 1 } else { 0 }))
                        .collect();
                    let expect = ratlin::from_i64(if i == j { 1 } else { 0 });
                    assert_eq!(r.pairing(om, &aj), expect);
                }
            }
        }
    }

    #[test]
    fn coroot_examples() {
        let b2 = rs(Family::B, 2);
        // long root maps to itself
        let theta = b2.highest_root();
        assert_eq!(b2.coroot_int(theta).unwrap(), theta.coeffs());
        // short α2 has α2∨ = 2α2
        assert_eq!(b2.coroot_int(&b2.simple_root(2)).unwrap(), vec![0, 2]);
        // (α∨, α) = 2 always
        for r in b2.positive_roots() {
            let cor = b2.coroot_int(r).unwrap();
            assert_eq!(b2.pairing_int(&cor, r.coeffs()), ratlin::from_i64(2));
        }
    }

    #[test]
    fn reflect_examples() {
        let a2 = rs(Family::A, 2);
        let a1 = a2.simple_root(1);
        // s_α(α) = −α
        assert_eq!(
            a2.reflect_root(&a1, &a1).unwrap().coeffs(),
            a1.negated().coeffs()
        );
        // A2: s_{α1}(α2) = α1+α2
        assert_eq!(
            a2.reflect_root(&a1, &a2.simple_root(2)).unwrap().coeffs(),
            &[1, 1]
        );
        // orthogonal vectors are fixed; pairing preserved
        let g2 = rs(Family::G, 2);
        for a in g2.positive_roots() {
            for b in g2.positive_roots() {
                let ra = g2.reflect_root(a, b).unwrap();
                assert_eq!(g2.norm_sq(&ra), g2.norm_sq(b));
                if g2.pairing_int(a.coeffs(), b.coeffs()).is_zero() {
                    assert_eq!(ra.coeffs(), b.coeffs());
                }
            }
        }
    }

    #[test]
    fn simple_reflection_permutes_other_positives() {
        for (f, l) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
            let r = rs(f, l);
            for i in 1..=l {
                let ai = r.simple_root(i);
                for b in r.positive_roots() {
                    let img = r.reflect_root(&ai, b).unwrap();
                    if b.coeffs() == ai.coeffs() {
                        assert!(!img.is_positive());
                    } else {
                        assert!(img.is_positive(), "{f}{l} s_{i} on {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn closure_under_root_sums() {
        // sum_root agrees with table membership for all pairs
        let f4 = rs(Family::F, 4);
        for a in f4.positive_roots() {
            for b in f4.positive_roots() {
                let sum: Vec<i64> = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
                let expected = f4.is_root(&sum);
                assert_eq!(f4.sum_root(a, b).unwrap().is_some(), expected);
            }
        }
    }

    #[test]
    fn height_sums_match_exponents() {
        // Σ_{β>0} ht(β) = Σ_e e(e+1)/2 over the exponents of the Weyl group
        fn expect(exps: &[i64]) -> i64 {
            exps.iter().map(|e| e * (e + 1) / 2).sum()
        }
        let cases: Vec<(Family, usize, Vec<i64>)> = vec![
            (Family::A, 5, (1..=5).collect()),
            (Family::B, 4, vec![1, 3, 5, 7]),
            (Family::C, 5, vec![1, 3, 5, 7, 9]),
            (Family::D, 5, vec![1, 3, 5, 7, 4]),
            (Family::E, 6, vec![1, 4, 5, 7, 8, 11]),
            (Family::E, 7, vec![1, 5, 7, 9, 11, 13, 17]),
            (Family::E, 8, vec![1, 7, 11, 13, 17, 19, 23, 29]),
            (Family::F, 4, vec![1, 5, 7, 11]),
            (Family::G, 2, vec![1, 5]),
        ];
        for (f, l, exps) in cases {
            let r = rs(f, l);
            let total: i64 = r.positive_roots().iter().map(|b| b.height()).sum();
            assert_eq!(total, expect(&exps), "{f}{l}");
        }
    }

    #[test]
    fn coroot_lattice_membership() {
        let b2 = rs(Family::B, 2);
        // α2∨ = 2α2 ∈ Q∨, α2 itself is not
        assert!(b2.in_coroot_lattice(&[0, 2]));
        assert!(!b2.in_coroot_lattice(&[0, 1]));
        assert!(b2.in_coroot_lattice(&[1, 0]));
    }
}
