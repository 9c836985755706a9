//! Diagram combinatorics: staircase and shifted shapes, northwest-flushed
//! subdiagram counting, the closed-form counts they satisfy, and the
//! synthesis of the shape attached to a pair (classical type, I).
//!
//! A shape is a list of row intervals. NW-flushedness means that selecting
//! a box selects every box of the shape weakly north and weakly west of
//! it, so a subdiagram is a prefix of each row subject to a compatibility
//! condition between consecutive rows. Added boxes sit immediately left of
//! their row (or form a new single-box bottom row), so they just extend
//! the row intervals. Counting is a per-row DP; the type-D column-reversal
//! variant is counted by explicit enumeration.

use crate::census;
use crate::ideals::{Ideal, Parabolic};
use crate::rootsys::{Family, RootSystem};
use num::{BigUint, One, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed shape: {0}")]
    MalformedShape(String),
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error("shape synthesis requires a classical type")]
    NotClassical,
    #[error("the explicit box bijection requires type A")]
    NotTypeA,
}

/// A diagram shape. Row r (1-based) occupies columns
/// offset_r+1 ..= offset_r+length_r; added boxes attach one column to the
/// left of their row. Column indices may reach 0 via added boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramShape {
    rows: Vec<(i64, i64)>,
    added_boxes: Vec<(usize, i64)>,
    reversal_columns: Option<(i64, i64)>,
}

impl DiagramShape {
    pub fn new(rows: Vec<(i64, i64)>) -> Self {
        DiagramShape {
            rows,
            added_boxes: Vec::new(),
            reversal_columns: None,
        }
    }

    /// Left-flushed staircase [n, n−1, …, 1].
    pub fn staircase(n: i64) -> Self {
        Self::new((0..n).map(|i| (0, n - i)).collect())
    }

    /// Shifted diagram T_{p,q} of shape [p+q−1, p+q−3, …, p−q+1]; row i
    /// occupies columns i ..= p+q−i.
    pub fn shifted_t(p: i64, q: i64) -> Result<Self, DiagramError> {
        if q < 0 || q > p {
            return Err(DiagramError::InvalidArgs(format!("T_{{{p},{q}}}")));
        }
        Ok(Self::new((1..=q).map(|i| (i - 1, p + q + 1 - 2 * i)).collect()))
    }

    /// T′_{p,q}: q left-flushed rows [p, p−1, …, p−q+1].
    pub fn t_prime(p: i64, q: i64) -> Result<Self, DiagramError> {
        if q < 0 || q > p {
            return Err(DiagramError::InvalidArgs(format!("T'_{{{p},{q}}}")));
        }
        Ok(Self::new((1..=q).map(|i| (0, p + 1 - i)).collect()))
    }

    /// Shifted staircase R_p: row i occupies columns i ..= p.
    pub fn shifted_r(p: i64) -> Self {
        Self::new((1..=p).map(|i| (i - 1, p + 1 - i)).collect())
    }

    /// T_{p,q}(l_1,…,l_s): T_{p,q} with boxes (l_i, l_i−1) added.
    pub fn t_with_boxes(p: i64, q: i64, ls: &[i64]) -> Result<Self, DiagramError> {
        let mut shape = Self::shifted_t(p, q)?;
        shape.add_boxes(ls, q + 1)?;
        Ok(shape)
    }

    /// R_p(l_1,…,l_s): R_p with boxes (l_i, l_i−1) added.
    pub fn r_with_boxes(p: i64, ls: &[i64]) -> Result<Self, DiagramError> {
        let mut shape = Self::shifted_r(p);
        shape.add_boxes(ls, p + 1)?;
        Ok(shape)
    }

    fn add_boxes(&mut self, ls: &[i64], max: i64) -> Result<(), DiagramError> {
        for w in ls.windows(2) {
            if w[0] >= w[1] {
                return Err(DiagramError::InvalidArgs(
                    "added-box rows must be strictly increasing".into(),
                ));
            }
        }
        for &l in ls {
            if l < 1 || l > max {
                return Err(DiagramError::InvalidArgs(format!(
                    "added box row {l} out of range 1..={max}"
                )));
            }
            self.added_boxes.push((l as usize, l - 1));
        }
        Ok(())
    }

    /// Mark the shape as counted together with its •-variants, obtained by
    /// exchanging columns c and c+1.
    pub fn with_reversal(mut self, c: i64) -> Self {
        self.reversal_columns = Some((c, c + 1));
        self
    }

    pub fn reversal_columns(&self) -> Option<(i64, i64)> {
        self.reversal_columns
    }

    pub fn num_rows(&self) -> usize {
        self.effective().map(|r| r.len()).unwrap_or(0)
    }

    /// Row intervals (first_col, last_col) with added boxes merged in.
    /// Fails when the result is not a valid nw-countable shape.
    pub fn effective(&self) -> Result<Vec<(i64, i64)>, DiagramError> {
        let mut rows: Vec<(i64, i64)> = self
            .rows
            .iter()
            .map(|&(off, len)| (off + 1, off + len))
            .collect();
        for &(r, c) in &self.added_boxes {
            if r == rows.len() + 1 {
                rows.push((c, c));
            } else if r <= rows.len() {
                if rows[r - 1].0 - 1 != c {
                    return Err(DiagramError::MalformedShape(format!(
                        "added box ({r},{c}) is not adjacent to its row"
                    )));
                }
                rows[r - 1].0 = c;
            } else {
                return Err(DiagramError::MalformedShape(format!(
                    "added box ({r},{c}) beyond the shape"
                )));
            }
        }
        for &(a, b) in &rows {
            if a > b {
                return Err(DiagramError::MalformedShape("empty row".into()));
            }
        }
        for w in rows.windows(2) {
            if w[0].0 > w[1].0 || w[0].1 < w[1].1 {
                return Err(DiagramError::MalformedShape(
                    "row intervals must nest left-down".into(),
                ));
            }
        }
        Ok(rows)
    }

    pub fn boxes(&self) -> Result<Vec<(usize, i64)>, DiagramError> {
        let rows = self.effective()?;
        let mut out = Vec::new();
        for (r, &(a, b)) in rows.iter().enumerate() {
            for c in a..=b {
                out.push((r + 1, c));
            }
        }
        Ok(out)
    }

    pub fn contains_box(&self, b: (usize, i64)) -> bool {
        self.effective()
            .map(|rows| {
                b.0 >= 1 && b.0 <= rows.len() && rows[b.0 - 1].0 <= b.1 && b.1 <= rows[b.0 - 1].1
            })
            .unwrap_or(false)
    }

    /// Compact text form: `rows=off:len,off:len;boxes=r:c;rev=c`.
    pub fn serialize_compact(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|(o, l)| format!("{o}:{l}")).collect();
        let mut s = format!("rows={}", rows.join(","));
        if !self.added_boxes.is_empty() {
            let boxes: Vec<String> = self
                .added_boxes
                .iter()
                .map(|(r, c)| format!("{r}:{c}"))
                .collect();
            s.push_str(&format!(";boxes={}", boxes.join(",")));
        }
        if let Some((c, _)) = self.reversal_columns {
            s.push_str(&format!(";rev={c}"));
        }
        s
    }

    pub fn parse_compact(s: &str) -> Result<Self, DiagramError> {
        let mut rows = Vec::new();
        let mut added_boxes = Vec::new();
        let mut reversal_columns = None;
        for part in s.split(';') {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| DiagramError::MalformedShape(format!("bad field {part}")))?;
            match key {
                "rows" => {
                    for pair in val.split(',').filter(|p| !p.is_empty()) {
                        let (o, l) = pair.split_once(':').ok_or_else(|| {
                            DiagramError::MalformedShape(format!("bad row {pair}"))
                        })?;
                        let off = o
                            .parse()
                            .map_err(|_| DiagramError::MalformedShape(format!("bad offset {o}")))?;
                        let len = l
                            .parse()
                            .map_err(|_| DiagramError::MalformedShape(format!("bad length {l}")))?;
                        rows.push((off, len));
                    }
                }
                "boxes" => {
                    for pair in val.split(',') {
                        let (r, c) = pair.split_once(':').ok_or_else(|| {
                            DiagramError::MalformedShape(format!("bad box {pair}"))
                        })?;
                        let row = r
                            .parse()
                            .map_err(|_| DiagramError::MalformedShape(format!("bad box row {r}")))?;
                        let col = c
                            .parse()
                            .map_err(|_| DiagramError::MalformedShape(format!("bad box col {c}")))?;
                        added_boxes.push((row, col));
                    }
                }
                "rev" => {
                    let c: i64 = val.parse().map_err(|_| {
                        DiagramError::MalformedShape(format!("bad reversal column {val}"))
                    })?;
                    reversal_columns = Some((c, c + 1));
                }
                _ => {
                    return Err(DiagramError::MalformedShape(format!("unknown field {key}")));
                }
            }
        }
        Ok(DiagramShape {
            rows,
            added_boxes,
            reversal_columns,
        })
    }
}

/// A northwest-flushed subdiagram, as the number of boxes selected in each
/// row (a prefix of the row, counting any added box).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NWDiagram {
    pub counts: Vec<i64>,
}

impl NWDiagram {
    pub fn empty(shape: &DiagramShape) -> Self {
        NWDiagram {
            counts: vec![0; shape.num_rows()],
        }
    }

    pub fn num_boxes(&self) -> i64 {
        self.counts.iter().sum()
    }

    /// Rightmost selected column of row h (1-based), 0 when the row is
    /// empty or absent.
    pub fn tau(&self, shape: &DiagramShape, h: usize) -> i64 {
        let rows = shape.effective().expect("valid shape");
        if h > self.counts.len() || self.counts[h - 1] == 0 {
            return 0;
        }
        rows[h - 1].0 + self.counts[h - 1] - 1
    }

    pub fn boxes(&self, shape: &DiagramShape) -> BTreeSet<(usize, i64)> {
        let rows = shape.effective().expect("valid shape");
        let mut out = BTreeSet::new();
        for (r, &c) in self.counts.iter().enumerate() {
            for k in 0..c {
                out.insert((r + 1, rows[r].0 + k));
            }
        }
        out
    }
}

fn row_compatible(prev: (i64, i64), prev_count: i64, cur: (i64, i64), cur_count: i64) -> bool {
    if cur_count == 0 {
        return true;
    }
    let rightmost = cur.0 + cur_count - 1;
    let needed = rightmost.min(prev.1) - prev.0 + 1;
    needed <= prev_count
}

/// Number of nw-diagrams of the shape (including the empty one). When the
/// shape carries reversal columns, the •-variants are counted as well.
pub fn nw_count(shape: &DiagramShape) -> Result<BigUint, DiagramError> {
    let rows = shape.effective()?;
    if shape.reversal_columns.is_some() {
        return nw_count_with_reversal(shape);
    }
    if rows.is_empty() {
        return Ok(BigUint::one());
    }
    // dp over (row, boxes in row)
    let mut prev: Vec<BigUint> = (0..=(rows[0].1 - rows[0].0 + 1))
        .map(|_| BigUint::one())
        .collect();
    for r in 1..rows.len() {
        let width = rows[r].1 - rows[r].0 + 1;
        let mut cur = vec![BigUint::zero(); (width + 1) as usize];
        for (c, slot) in cur.iter_mut().enumerate() {
            for (pc, val) in prev.iter().enumerate() {
                if row_compatible(rows[r - 1], pc as i64, rows[r], c as i64) {
                    *slot += val;
                }
            }
        }
        prev = cur;
    }
    Ok(prev.iter().sum())
}

/// All nw-diagrams, in lexicographic order of their row-count vectors.
pub fn enumerate_nw(shape: &DiagramShape) -> Result<Vec<NWDiagram>, DiagramError> {
    let rows = shape.effective()?;
    let mut out = Vec::new();
    let mut counts = vec![0i64; rows.len()];
    fn rec(rows: &[(i64, i64)], k: usize, counts: &mut Vec<i64>, out: &mut Vec<NWDiagram>) {
        if k == rows.len() {
            out.push(NWDiagram {
                counts: counts.clone(),
            });
            return;
        }
        let width = rows[k].1 - rows[k].0 + 1;
        for c in 0..=width {
            if k == 0 || row_compatible(rows[k - 1], counts[k - 1], rows[k], c) {
                counts[k] = c;
                rec(rows, k + 1, counts, out);
            }
        }
        counts[k] = 0;
    }
    rec(&rows, 0, &mut counts, &mut out);
    Ok(out)
}

/// Generic nw-flushedness of an arbitrary box set within a shape.
pub fn is_nw(shape: &DiagramShape, boxes: &BTreeSet<(usize, i64)>) -> bool {
    let Ok(all) = shape.boxes() else {
        return false;
    };
    for &(r, c) in boxes {
        if !shape.contains_box((r, c)) {
            return false;
        }
        for &(r2, c2) in &all {
            if r2 <= r && c2 <= c && !boxes.contains(&(r2, c2)) {
                return false;
            }
        }
    }
    true
}

/// Image of a box set under the column exchange of the shape's reversal
/// pair. `None` when the image leaves the shape.
pub fn bullet_image(
    shape: &DiagramShape,
    boxes: &BTreeSet<(usize, i64)>,
) -> Option<BTreeSet<(usize, i64)>> {
    let (c1, c2) = shape.reversal_columns?;
    let mut out = BTreeSet::new();
    for &(r, c) in boxes {
        let swapped = if c == c1 {
            c2
        } else if c == c2 {
            c1
        } else {
            c
        };
        if !shape.contains_box((r, swapped)) {
            return None;
        }
        out.insert((r, swapped));
    }
    Some(out)
}

fn nw_count_with_reversal(shape: &DiagramShape) -> Result<BigUint, DiagramError> {
    let plain = enumerate_nw(shape)?;
    let mut total = BigUint::from(plain.len());
    for d in &plain {
        let boxes = d.boxes(shape);
        if let Some(img) = bullet_image(shape, &boxes) {
            if img != boxes && !is_nw(shape, &img) {
                total += BigUint::one();
            }
        }
    }
    Ok(total)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Binomial coefficient, 0 outside the usual range.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    exact_div(num, &den)
}

/// Catalan number C_n = binom(2n, n)/(n+1).
pub fn catalan(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    exact_div(binomial(2 * n, n), &BigUint::from((n + 1) as u64))
}

pub(crate) fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num::Integer::div_rem(&num, den);
    assert!(r.is_zero(), "nonexact division in a counting formula");
    q
}

/// Closed form for the nw-diagrams of T′_{p,q}:
/// (p+q+1)!(p−q+2)/(q!(p+2)!). By convention the value is 0 for q = −1,
/// consistent with the recurrence T′_{p,q} − T′_{p−1,q} = T′_{p,q−1}.
pub fn t_prime_formula(p: i64, q: i64) -> Result<BigUint, DiagramError> {
    if q == -1 {
        return Ok(BigUint::zero());
    }
    if q == 0 {
        // zero rows regardless of p
        return Ok(BigUint::one());
    }
    // q = p+1 is allowed: the last row is empty and the value equals
    // T'_{p,p}
    if p < 0 || q < 0 || q > p + 1 {
        return Err(DiagramError::InvalidArgs(format!("T'_{{{p},{q}}}")));
    }
    let num = factorial((p + q + 1) as u64) * BigUint::from((p - q + 2) as u64);
    let den = factorial(q as u64) * factorial((p + 2) as u64);
    Ok(exact_div(num, &den))
}

/// Closed form for the nw-diagrams of T_{p,q}(l_1,…,l_s):
/// binom(p+q, p) + Σ_j T′_{p+q−l_j, l_j−1}.
pub fn t_boxes_formula(p: i64, q: i64, ls: &[i64]) -> Result<BigUint, DiagramError> {
    if q < 0 || q > p {
        return Err(DiagramError::InvalidArgs(format!("T_{{{p},{q}}}")));
    }
    check_ls(ls, q + 1)?;
    let mut total = binomial(p + q, p);
    for &lj in ls {
        total += t_prime_formula(p + q - lj, lj - 1)?;
    }
    Ok(total)
}

/// Closed form for the nw-diagrams of R_p(l_1,…,l_s):
/// 2^p + Σ_j binom(p, l_j−1).
pub fn r_boxes_formula(p: i64, ls: &[i64]) -> Result<BigUint, DiagramError> {
    if p < 0 {
        return Err(DiagramError::InvalidArgs(format!("R_{{{p}}}")));
    }
    check_ls(ls, p + 1)?;
    let mut total = BigUint::one() << (p as u64);
    for &lj in ls {
        total += binomial(p, lj - 1);
    }
    Ok(total)
}

fn check_ls(ls: &[i64], max: i64) -> Result<(), DiagramError> {
    for w in ls.windows(2) {
        if w[0] >= w[1] {
            return Err(DiagramError::InvalidArgs("l_j must strictly increase".into()));
        }
    }
    if let (Some(&first), Some(&last)) = (ls.first(), ls.last()) {
        if first < 1 || last > max {
            return Err(DiagramError::InvalidArgs(format!("l_j out of range 1..={max}")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeFamily {
    /// Left-flushed staircase [n, …, 1] (type A).
    Staircase,
    /// Shifted T_{p,q}, possibly with added boxes (types B, C, D).
    T,
}

/// Shape parameters of the diagram attached to (classical type, I).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeParams {
    pub family: ShapeFamily,
    pub p: i64,
    pub q: i64,
    pub l_list: Vec<i64>,
    /// Lower column of the exchanged pair, for type D with
    /// {α_{l−1}, α_l} ∩ I = ∅.
    pub reversal_column: Option<i64>,
}

impl ShapeParams {
    pub fn build(&self) -> Result<DiagramShape, DiagramError> {
        let shape = match self.family {
            ShapeFamily::Staircase => DiagramShape::staircase(self.p),
            ShapeFamily::T => DiagramShape::t_with_boxes(self.p, self.q, &self.l_list)?,
        };
        Ok(match self.reversal_column {
            Some(c) => shape.with_reversal(c),
            None => shape,
        })
    }
}

/// Shape of T_X^I for classical X, with the l_j computed from the
/// connected components of I (for type D, α_{l−1} and α_l count as
/// linked when both lie in I).
pub fn shape_of(rs: &RootSystem, i_set: &Parabolic) -> Result<ShapeParams, DiagramError> {
    let l = rs.rank() as i64;
    let r = i_set.cardinality() as i64;
    let family = rs.rtype().family;
    match family {
        Family::A => Ok(ShapeParams {
            family: ShapeFamily::Staircase,
            p: l - r,
            q: l - r,
            l_list: vec![],
            reversal_column: None,
        }),
        Family::C => {
            let (p, q) = if i_set.contains(l as usize) {
                (l - r + 1, l - r)
            } else {
                (l - r, l - r)
            };
            Ok(ShapeParams {
                family: ShapeFamily::T,
                p,
                q,
                l_list: vec![],
                reversal_column: None,
            })
        }
        Family::B => {
            let comps = census::ComponentDecomposition::decompose(rs, i_set);
            let mut ls = comps.l_values(rs);
            if i_set.contains(l as usize) {
                ls.pop(); // the component containing α_l is last
            }
            Ok(ShapeParams {
                family: ShapeFamily::T,
                p: l - r,
                q: l - r,
                l_list: ls,
                reversal_column: None,
            })
        }
        Family::D => {
            let comps = census::ComponentDecomposition::decompose(rs, i_set);
            let t = [l - 1, l]
                .iter()
                .filter(|&&i| i_set.contains(i as usize))
                .count();
            let mut ls = comps.l_values(rs);
            if t == 2 {
                ls.pop(); // the merged fork component is last
                Ok(ShapeParams {
                    family: ShapeFamily::T,
                    p: l - r,
                    q: l - r,
                    l_list: ls,
                    reversal_column: None,
                })
            } else {
                // The exchanged pair straddles the middle of T_{l−r,l−r−1}.
                // In absolute column coordinates (added boxes at l_i−1,
                // possibly 0) it is (l−r−1, l−r) whether or not α_1 ∈ I;
                // the two stated cases differ only by where column
                // numbering starts.
                let reversal_column = if t == 0 { Some(l - r - 1) } else { None };
                Ok(ShapeParams {
                    family: ShapeFamily::T,
                    p: l - r,
                    q: l - r - 1,
                    l_list: ls,
                    reversal_column,
                })
            }
        }
        _ => Err(DiagramError::NotClassical),
    }
}

/// Explicit box-level bijection for type A: the nw-diagram of the classes
/// of Φ inside the contracted staircase.
///
/// Boxes of the contracted staircase are indexed by pairs (u, v) over the
/// non-I simple roots i_1 < … < i_m: the class of the interval root
/// α_{i_u}+⋯+α_{i_v} sits in row u, column m−v+1.
pub fn type_a_bijection(
    rs: &RootSystem,
    i_set: &Parabolic,
    ideal: &Ideal,
) -> Result<NWDiagram, DiagramError> {
    if rs.rtype().family != Family::A {
        return Err(DiagramError::NotTypeA);
    }
    let l = rs.rank();
    let non_i: Vec<usize> = (1..=l).filter(|&i| !i_set.contains(i)).collect();
    let m = non_i.len();
    let mut counts = vec![0i64; m];
    for u in 0..m {
        for v in u..m {
            // representative root α_{i_u} + ⋯ + α_{i_v}
            let mut coeffs = vec![0i64; l];
            for c in coeffs.iter_mut().take(non_i[v]).skip(non_i[u] - 1) {
                *c = 1;
            }
            let idx = rs
                .index_of_coeffs(&coeffs)
                .expect("interval roots exist in type A");
            if ideal.members().contains(idx) {
                counts[u] += 1;
            }
        }
    }
    // membership is class-wise constant for a valid ideal, so each row is
    // selected as a suffix in v, i.e. a prefix of columns
    let diagram = NWDiagram { counts };
    debug_assert!({
        let shape = DiagramShape::staircase(m as i64);
        is_nw(&shape, &diagram.boxes(&shape))
    });
    Ok(diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{close, enumerate_ideals, RootSet};
    use crate::rootsys::RootSystemType;

    fn rs(f: Family, l: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(f, l).unwrap()).unwrap()
    }

    fn count(shape: &DiagramShape) -> u64 {
        num::ToPrimitive::to_u64(&nw_count(shape).unwrap()).unwrap()
    }

    #[test]
    fn basic_counts() {
        // T'_{p,1} is a row of p boxes: p+1 subdiagrams
        for p in 1..=8 {
            assert_eq!(count(&DiagramShape::t_prime(p, 1).unwrap()), (p + 1) as u64);
        }
        // staircase [l, …, 1] counts C_{l+1}
        for l in 0..=8 {
            let expect = num::ToPrimitive::to_u64(&catalan(l + 1)).unwrap();
            assert_eq!(count(&DiagramShape::staircase(l)), expect);
        }
        // T_{p,q} counts binom(p+q, p)
        for p in 0..=7 {
            for q in 0..=p {
                let expect = num::ToPrimitive::to_u64(&binomial(p + q, p)).unwrap();
                assert_eq!(count(&DiagramShape::shifted_t(p, q).unwrap()), expect);
            }
        }
        // R_p counts 2^p
        for p in 0..=8 {
            assert_eq!(count(&DiagramShape::shifted_r(p)), 1u64 << p);
        }
    }

    #[test]
    fn worked_figures() {
        // T'_{3,2} has 9 nw-diagrams
        assert_eq!(count(&DiagramShape::t_prime(3, 2).unwrap()), 9);
        assert_eq!(t_prime_formula(3, 2).unwrap(), BigUint::from(9u32));
        // R_4(3) = 2^4 + C(4,2) = 22
        assert_eq!(count(&DiagramShape::r_with_boxes(4, &[3]).unwrap()), 22);
        assert_eq!(r_boxes_formula(4, &[3]).unwrap(), BigUint::from(22u32));
        // T_{5,4}(2,4) = binom(9,4) + T'_{7,1} + T'_{5,3} = 126 + 8 + 48
        assert_eq!(count(&DiagramShape::t_with_boxes(5, 4, &[2, 4]).unwrap()), 182);
        assert_eq!(t_boxes_formula(5, 4, &[2, 4]).unwrap(), BigUint::from(182u32));
    }

    #[test]
    fn dp_matches_explicit_enumeration() {
        let shapes = vec![
            DiagramShape::staircase(4),
            DiagramShape::shifted_t(5, 3).unwrap(),
            DiagramShape::t_prime(5, 4).unwrap(),
            DiagramShape::t_with_boxes(4, 4, &[1, 3, 5]).unwrap(),
            DiagramShape::r_with_boxes(5, &[2, 6]).unwrap(),
        ];
        for shape in shapes {
            let listed = enumerate_nw(&shape).unwrap();
            assert_eq!(BigUint::from(listed.len()), nw_count(&shape).unwrap());
            // every enumerated diagram really is nw-flushed
            for d in &listed {
                assert!(is_nw(&shape, &d.boxes(&shape)));
            }
            // and they are pairwise distinct
            let set: BTreeSet<_> = listed.iter().map(|d| d.counts.clone()).collect();
            assert_eq!(set.len(), listed.len());
        }
    }

    #[test]
    fn formula_sweeps() {
        for p in 0..=8 {
            for q in 0..=p {
                assert_eq!(
                    t_prime_formula(p, q).unwrap(),
                    nw_count(&DiagramShape::t_prime(p, q).unwrap()).unwrap(),
                    "T'_{{{p},{q}}}"
                );
            }
        }
        for p in 0..=6 {
            for q in 0..=p {
                for l1 in 1..=q + 1 {
                    assert_eq!(
                        t_boxes_formula(p, q, &[l1]).unwrap(),
                        nw_count(&DiagramShape::t_with_boxes(p, q, &[l1]).unwrap()).unwrap()
                    );
                    for l2 in l1 + 1..=q + 1 {
                        assert_eq!(
                            t_boxes_formula(p, q, &[l1, l2]).unwrap(),
                            nw_count(&DiagramShape::t_with_boxes(p, q, &[l1, l2]).unwrap())
                                .unwrap()
                        );
                    }
                }
            }
        }
        for p in 0..=8 {
            for l1 in 1..=p + 1 {
                assert_eq!(
                    r_boxes_formula(p, &[l1]).unwrap(),
                    nw_count(&DiagramShape::r_with_boxes(p, &[l1]).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn shape_of_examples() {
        // A5, I={α2,α3} → staircase [3,2,1]
        let a5 = rs(Family::A, 5);
        let params = shape_of(&a5, &Parabolic::from_indices(&[2, 3])).unwrap();
        assert_eq!(params.family, ShapeFamily::Staircase);
        assert_eq!(params.p, 3);

        // B5, I={α2,α3,α5} → T_{2,2}(2)
        let b5 = rs(Family::B, 5);
        let params = shape_of(&b5, &Parabolic::from_indices(&[2, 3, 5])).unwrap();
        assert_eq!((params.p, params.q), (2, 2));
        assert_eq!(params.l_list, vec![2]);

        // D5, I={α2,α4,α5} → T_{2,2}(2), the fork pair acting as one block
        let d5 = rs(Family::D, 5);
        let params = shape_of(&d5, &Parabolic::from_indices(&[2, 4, 5])).unwrap();
        assert_eq!((params.p, params.q), (2, 2));
        assert_eq!(params.l_list, vec![2]);
        assert_eq!(params.reversal_column, None);

        // D5 Borel: T_{5,4} with reversal at columns (4,5)
        let params = shape_of(&d5, &Parabolic::empty()).unwrap();
        assert_eq!((params.p, params.q), (5, 4));
        assert_eq!(params.reversal_column, Some(4));

        assert_eq!(
            shape_of(&rs(Family::F, 4), &Parabolic::empty()),
            Err(DiagramError::NotClassical)
        );
    }

    #[test]
    fn shape_counts_match_ideal_counts() {
        // the computational content of the diagram bijections
        for (f, lmin, lmax) in [
            (Family::A, 1, 5),
            (Family::B, 2, 5),
            (Family::C, 2, 5),
            (Family::D, 3, 5),
        ] {
            for l in lmin..=lmax {
                let r = rs(f, l);
                for i_set in Parabolic::all_subsets(l) {
                    let shape = shape_of(&r, &i_set).unwrap().build().unwrap();
                    let ideals = enumerate_ideals(&r, &i_set);
                    assert_eq!(
                        nw_count(&shape).unwrap(),
                        BigUint::from(ideals.len()),
                        "{f}{l} I={i_set}"
                    );
                }
            }
        }
    }

    #[test]
    fn type_a_bijection_examples() {
        let a4 = rs(Family::A, 4);
        for i_set in Parabolic::all_subsets(4) {
            let m = 4 - i_set.cardinality();
            let shape = DiagramShape::staircase(m as i64);
            let ideals = enumerate_ideals(&a4, &i_set);
            let mut images = BTreeSet::new();
            for id in &ideals {
                let d = type_a_bijection(&a4, &i_set, id).unwrap();
                assert!(is_nw(&shape, &d.boxes(&shape)));
                images.insert(d.counts.clone());
            }
            // injective onto all nw-diagrams
            assert_eq!(BigUint::from(images.len()), nw_count(&shape).unwrap());
        }
        // Φ = ∅ → empty diagram; Φ = {θ} → single box
        let empty = close(&a4, &Parabolic::empty(), &RootSet::empty()).unwrap();
        assert_eq!(
            type_a_bijection(&a4, &Parabolic::empty(), &empty)
                .unwrap()
                .num_boxes(),
            0
        );
        let theta_idx = a4.root_index(a4.highest_root()).unwrap();
        let th = close(&a4, &Parabolic::empty(), &RootSet::singleton(theta_idx)).unwrap();
        let d = type_a_bijection(&a4, &Parabolic::empty(), &th).unwrap();
        assert_eq!(d.counts, vec![1, 0, 0, 0]);
        // wrong type is rejected
        let b3 = rs(Family::B, 3);
        let id = close(&b3, &Parabolic::empty(), &RootSet::empty()).unwrap();
        assert_eq!(
            type_a_bijection(&b3, &Parabolic::empty(), &id),
            Err(DiagramError::NotTypeA)
        );
    }

    #[test]
    fn added_box_monotonicity() {
        // removing an added box never increases the count
        for p in 2..=5 {
            for q in 1..=p {
                for l1 in 1..=q + 1 {
                    let with = count(&DiagramShape::t_with_boxes(p, q, &[l1]).unwrap());
                    let without = count(&DiagramShape::shifted_t(p, q).unwrap());
                    assert!(without <= with);
                }
            }
        }
    }

    #[test]
    fn compact_roundtrip() {
        let shapes = vec![
            DiagramShape::staircase(3),
            DiagramShape::t_with_boxes(4, 3, &[2]).unwrap(),
            DiagramShape::t_with_boxes(5, 4, &[1, 3])
                .unwrap()
                .with_reversal(4),
        ];
        // golden compact forms, pinned
        let expected = [
            "rows=0:3,0:2,0:1",
            "rows=0:6,1:4,2:2;boxes=2:1",
            "rows=0:8,1:6,2:4,3:2;boxes=1:0,3:2;rev=4",
        ];
        for (shape, gold) in shapes.iter().zip(expected) {
            assert_eq!(shape.serialize_compact(), gold);
            assert_eq!(&DiagramShape::parse_compact(gold).unwrap(), shape);
        }
    }

    #[test]
    fn malformed_shapes_rejected() {
        assert!(DiagramShape::shifted_t(2, 3).is_err());
        assert!(DiagramShape::t_with_boxes(3, 2, &[2, 2]).is_err());
        assert!(DiagramShape::t_with_boxes(3, 2, &[4]).is_err());
        assert!(t_prime_formula(2, 4).is_err());
        assert_eq!(t_prime_formula(4, -1).unwrap(), BigUint::zero());
        assert_eq!(t_prime_formula(4, 0).unwrap(), BigUint::one());
        // q = p+1 appends an empty row: same count as q = p
        assert_eq!(t_prime_formula(2, 3).unwrap(), t_prime_formula(2, 2).unwrap());
    }
}
