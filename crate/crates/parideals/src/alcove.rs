//! Exact alcove geometry: images of the fundamental alcove, the 2A
//! criterion for abelian ideals, face detection on hyperplanes, squared
//! face volumes via Gram determinants, distances to wall intersections,
//! and the census pairing abelian ideals with the faces they tile.
//!
//! Every quantity is an exact rational; volumes are handled only in
//! squared form so that no square root is ever taken.

use crate::affweyl::{
    alcove_vertex, inverse_image_nodes, is_i_compatible, w_phi, AffineError, AffineWeylElement,
};
use crate::ideals::{enumerate_ideals, is_abelian, Ideal, Parabolic};
use crate::ratlin;
use crate::rootsys::RootSystem;
use crate::Rat;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlcoveError {
    #[error("face vertices are affinely dependent")]
    DegenerateFace,
    #[error("the requested wall intersection is empty")]
    EmptySubspace,
    #[error("affine Weyl error: {0}")]
    Affine(#[from] AffineError),
}

/// Image of the closed fundamental alcove under an element: the l+1
/// vertex images v(ω̄_j + τ), indexed by Π̂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveImage {
    pub vertices: Vec<Vec<Rat>>,
}

pub fn alcove_image(rs: &RootSystem, w: &AffineWeylElement) -> AlcoveImage {
    let vertices = (0..=rs.rank())
        .map(|j| w.act_vec(&alcove_vertex(rs, j)))
        .collect();
    AlcoveImage { vertices }
}

fn simple_functional(rs: &RootSystem, i: usize, p: &[Rat]) -> Rat {
    let mut acc = ratlin::zero();
    for (j, pj) in p.iter().enumerate() {
        if !pj.is_zero() {
            acc += rs.gram(i, j + 1) * pj;
        }
    }
    acc
}

fn theta_functional(rs: &RootSystem, p: &[Rat]) -> Rat {
    let theta = rs.highest_root();
    let mut acc = ratlin::zero();
    for i in 1..=rs.rank() {
        if theta.coeff(i) != 0 {
            acc += ratlin::from_i64(theta.coeff(i)) * simple_functional(rs, i, p);
        }
    }
    acc
}

/// w̄(A) ⊆ 2A: all vertex images satisfy (α_i, p) ≥ 0 and (θ, p) ≤ 2.
/// The closed vertex test suffices because the image is full-dimensional.
pub fn in_2a(rs: &RootSystem, w: &AffineWeylElement) -> bool {
    let image = alcove_image(rs, w);
    for p in &image.vertices {
        for i in 1..=rs.rank() {
            if simple_functional(rs, i, p) < ratlin::zero() {
                return false;
            }
        }
        if theta_functional(rs, p) > ratlin::from_i64(2) {
            return false;
        }
    }
    true
}

/// Whether w̄(Ā) ∩ H_α is an (l−1)-face of the image: some facet of Ā
/// (all vertices but one) maps into the wall H_{α,0}.
pub fn face_on_hyperplane(rs: &RootSystem, w: &AffineWeylElement, alpha: usize) -> bool {
    let image = alcove_image(rs, w);
    let on_wall: Vec<bool> = image
        .vertices
        .iter()
        .map(|p| simple_functional(rs, alpha, p).is_zero())
        .collect();
    // affine independence forbids all l+1 vertices lying in one wall
    debug_assert!(on_wall.iter().any(|&b| !b));
    (0..on_wall.len()).any(|skip| (0..on_wall.len()).all(|j| j == skip || on_wall[j]))
}

/// A face F_J = Ā ∩ H_J (scale 1) or F′_J = 2Ā ∩ H_J (scale 2),
/// J ⊆ Π̂ given as a bitmask over node indices 0..=l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceSpec {
    pub nodes: u32,
    pub scale: u8,
}

impl FaceSpec {
    pub fn new(nodes: &[usize], scale: u8) -> Self {
        assert!(scale == 1 || scale == 2);
        let mut mask = 0u32;
        for &n in nodes {
            mask |= 1 << n;
        }
        FaceSpec { nodes: mask, scale }
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes & (1 << node) != 0
    }

    pub fn node_indices(&self, l: usize) -> Vec<usize> {
        (0..=l).filter(|&n| self.contains(n)).collect()
    }
}

/// Squared k-volume of the simplex with the given vertices:
/// det(Gram of edge vectors) / (k!)². A single point has squared
/// 0-volume 1.
fn simplex_volume_sq(rs: &RootSystem, vertices: &[Vec<Rat>]) -> Result<Rat, AlcoveError> {
    let k = vertices.len() - 1;
    if k == 0 {
        return Ok(ratlin::one());
    }
    let edges: Vec<Vec<Rat>> = vertices[1..]
        .iter()
        .map(|v| {
            v.iter()
                .zip(&vertices[0])
                .map(|(a, b)| a - b)
                .collect::<Vec<Rat>>()
        })
        .collect();
    let mut gram = vec![vec![ratlin::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = rs.pairing(&edges[i], &edges[j]);
        }
    }
    let det = ratlin::det(&gram);
    if det.is_zero() {
        return Err(AlcoveError::DegenerateFace);
    }
    let mut kfact = Rat::one();
    for m in 1..=k as i64 {
        kfact *= ratlin::from_i64(m);
    }
    Ok(det / (&kfact * &kfact))
}

/// Squared (l−♯J)-volume of F_J or F′_J.
pub fn face_volume_sq(rs: &RootSystem, face: &FaceSpec) -> Result<Rat, AlcoveError> {
    let l = rs.rank();
    let scale = ratlin::from_i64(face.scale as i64);
    let vertices: Vec<Vec<Rat>> = (0..=l)
        .filter(|&j| !face.contains(j))
        .map(|j| {
            alcove_vertex(rs, j)
                .into_iter()
                .map(|c| c * &scale)
                .collect()
        })
        .collect();
    if vertices.is_empty() {
        return Err(AlcoveError::DegenerateFace);
    }
    simplex_volume_sq(rs, &vertices)
}

/// Squared distance from a point to H_J = ∩_{j∈J} H_{α_j}, where
/// H_{α_0} = H_{θ,1} and H_{α_i} = {(α_i, x) = 0}. Exact rational via a
/// normal-equation solve in the Gram metric.
pub fn distance_sq(rs: &RootSystem, point: &[Rat], nodes: &[usize]) -> Result<Rat, AlcoveError> {
    let l = rs.rank();
    // constraint rows: x ↦ (α_i, x) as covectors in simple-root coords
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for &n in nodes {
        if n == 0 {
            let theta = rs.highest_root();
            let row: Vec<Rat> = (1..=l)
                .map(|j| {
                    let mut acc = ratlin::zero();
                    for i in 1..=l {
                        if theta.coeff(i) != 0 {
                            acc += ratlin::from_i64(theta.coeff(i)) * rs.gram(i, j);
                        }
                    }
                    acc
                })
                .collect();
            rows.push(row);
            rhs.push(ratlin::one());
        } else {
            rows.push((1..=l).map(|j| rs.gram(n, j).clone()).collect());
            rhs.push(ratlin::zero());
        }
    }
    let base = ratlin::solve_any(&rows, &rhs).ok_or(AlcoveError::EmptySubspace)?;
    let directions = ratlin::null_space(&rows, l);

    // least squares in the (.,.) metric: minimize ‖point − base − Σ c_i u_i‖²
    let diff: Vec<Rat> = point.iter().zip(&base).map(|(p, b)| p - b).collect();
    let m = directions.len();
    let residual = if m == 0 {
        diff
    } else {
        let mut normal = vec![vec![ratlin::zero(); m]; m];
        let mut target = vec![ratlin::zero(); m];
        for i in 0..m {
            for j in 0..m {
                normal[i][j] = rs.pairing(&directions[i], &directions[j]);
            }
            target[i] = rs.pairing(&directions[i], &diff);
        }
        let coeff = ratlin::solve_any(&normal, &target).expect("Gram form is definite");
        let mut res = diff;
        for (c, dir) in coeff.iter().zip(&directions) {
            for (r, d) in res.iter_mut().zip(dir) {
                *r -= c * d;
            }
        }
        res
    };
    Ok(rs.pairing(&residual, &residual))
}

/// n_J = ∏_{j ∈ J} n_j over Π̂ nodes (n_0 = 1); 1 for J = ∅.
pub fn n_product(rs: &RootSystem, nodes: &[usize]) -> i64 {
    nodes.iter().map(|&n| rs.mark(n)).product()
}

/// One abelian ideal of p_I together with its affine Weyl element, the
/// node set w⁻¹(I) ⊆ Π̂, and the face w̄(Ā) ∩ H_I it contributes.
#[derive(Debug, Clone)]
pub struct AbelianFace {
    pub ideal: Ideal,
    pub element: AffineWeylElement,
    pub inverse_nodes: Vec<usize>,
    pub face_vertices: Vec<Vec<Rat>>,
}

/// The abelian ideals of p_I with their alcove faces inside F′_I.
/// Asserts the bijection data: every element is I-compatible and in 2A,
/// the faces are pairwise distinct, each face lies in F′_I ∩ H_I.
pub fn abelian_alcove_census(rs: &RootSystem, i_set: &Parabolic) -> Vec<AbelianFace> {
    let l = rs.rank();
    let mut out = Vec::new();
    for ideal in enumerate_ideals(rs, i_set) {
        if !is_abelian(rs, &ideal) {
            continue;
        }
        let w = w_phi(rs, &ideal);
        assert_eq!(is_i_compatible(rs, &w, i_set), Ok(true));
        assert!(in_2a(rs, &w), "abelian ideals map into 2A");
        let nodes = inverse_image_nodes(rs, &w, i_set).expect("I-compatible");
        let image = alcove_image(rs, &w);
        let face_vertices: Vec<Vec<Rat>> = (0..=l)
            .filter(|j| !nodes.contains(j))
            .map(|j| image.vertices[j].clone())
            .collect();
        // the face lies in H_I and in the closure of F′_I
        for p in &face_vertices {
            for i in i_set.indices() {
                assert!(simple_functional(rs, i, p).is_zero());
            }
            for i in 1..=l {
                assert!(simple_functional(rs, i, p) >= ratlin::zero());
            }
            assert!(theta_functional(rs, p) <= ratlin::from_i64(2));
        }
        out.push(AbelianFace {
            ideal,
            element: w,
            inverse_nodes: nodes,
            face_vertices,
        });
    }
    // distinct ideals produce distinct faces
    for (i, a) in out.iter().enumerate() {
        for b in &out[i + 1..] {
            let mut va = a.face_vertices.clone();
            let mut vb = b.face_vertices.clone();
            va.sort();
            vb.sort();
            assert_ne!(va, vb, "faces of distinct abelian ideals must differ");
        }
    }
    out
}

/// Σ_{w ∈ Ab_I} n_{w⁻¹(I)}, the weighted count the volume identity pins
/// to n_I · 2^{l−♯I}.
pub fn weighted_abelian_sum(rs: &RootSystem, i_set: &Parabolic) -> i64 {
    abelian_alcove_census(rs, i_set)
        .iter()
        .map(|f| n_product(rs, &f.inverse_nodes))
        .sum()
}
