//! Dynkin pyramids, the nilpotent element they determine, and the ξ-basis
//! of the centralizer in `gl(m|n)`.
//!
//! The vector space `V` has basis `e^a v_i` (`0 ≤ a < λ_i`), ordered with all
//! even parts first, then all odd parts, each part in canonical order and each
//! chain by increasing `a`. The box `e^a v_i` sits in row `i` at column
//! `λ_i − 1 − 2a`, so `e` moves every box to its left neighbour and
//! `h = −col` on each box.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::Scalar;
use crate::matrixalg::partition::SuperPartition;
use crate::superalg::Parity;

/// One box of a Dynkin pyramid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidBox {
    /// Box number in the pyramid numbering, 1-based.
    pub number: usize,
    /// Part index `i` (0-based), which is also the row counted from the bottom.
    pub part: usize,
    /// Exponent `a` of `e^a v_i`.
    pub power: usize,
    /// Horizontal coordinate of the box centre.
    pub col: i64,
    pub parity: Parity,
    /// Coordinate index of `e^a v_i` in `V`.
    pub vindex: usize,
}

/// Box counts of one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ColumnCount {
    /// Even boxes `r_i`.
    pub even: usize,
    /// Odd boxes `s_i`.
    pub odd: usize,
}

impl ColumnCount {
    /// All boxes `c_i = r_i + s_i`.
    pub fn total(&self) -> usize {
        self.even + self.odd
    }
}

/// The Dynkin pyramid of shape λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinPyramid {
    partition: SuperPartition,
    boxes: Vec<PyramidBox>,
    chain_start: Vec<usize>,
}

impl DynkinPyramid {
    /// Lays out the boxes of `partition`.
    ///
    /// Boxes are numbered column by column from left to right and, inside a
    /// column, from the top row down.
    pub fn new(partition: &SuperPartition) -> Self {
        let r = partition.len();
        let mut chain_start = vec![0; r];
        let mut next = 0;
        for parity in [Parity::Even, Parity::Odd] {
            for i in 0..r {
                if partition.parity(i) == parity {
                    chain_start[i] = next;
                    next += partition.size(i);
                }
            }
        }
        let mut boxes = Vec::with_capacity(next);
        for i in 0..r {
            let l = partition.size(i);
            for a in 0..l {
                boxes.push(PyramidBox {
                    number: 0,
                    part: i,
                    power: a,
                    col: l as i64 - 1 - 2 * a as i64,
                    parity: partition.parity(i),
                    vindex: chain_start[i] + a,
                });
            }
        }
        boxes.sort_by_key(|b| (b.col, std::cmp::Reverse(b.part)));
        for (t, b) in boxes.iter_mut().enumerate() {
            b.number = t + 1;
        }
        DynkinPyramid { partition: partition.clone(), boxes, chain_start }
    }

    /// The underlying partition.
    pub fn partition(&self) -> &SuperPartition {
        &self.partition
    }

    /// Boxes in pyramid-numbering order.
    pub fn boxes(&self) -> &[PyramidBox] {
        &self.boxes
    }

    /// `dim V = m + n`.
    pub fn dim_v(&self) -> usize {
        self.boxes.len()
    }

    /// Even dimension `m` of `V`.
    pub fn m(&self) -> usize {
        self.partition.m()
    }

    /// Index of `e^a v_i` in `V`.
    pub fn vindex(&self, part: usize, power: usize) -> usize {
        debug_assert!(power < self.partition.size(part));
        self.chain_start[part] + power
    }

    /// Parity of the `V` coordinate `v`.
    pub fn v_parity(&self, v: usize) -> Parity {
        if v < self.m() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Per-column box counts, keyed by the integer column coordinate.
    /// Empty columns strictly inside the occupied range are included.
    pub fn columns(&self) -> BTreeMap<i64, ColumnCount> {
        let l1 = self.partition.largest() as i64;
        let mut out: BTreeMap<i64, ColumnCount> = (-(l1 - 1)..=(l1 - 1)).map(|c| (c, ColumnCount::default())).collect();
        for b in &self.boxes {
            let c = out.entry(b.col).or_default();
            match b.parity {
                Parity::Even => c.even += 1,
                Parity::Odd => c.odd += 1,
            }
        }
        out
    }

    /// Number of boxes in column `col`.
    pub fn column_count(&self, col: i64) -> ColumnCount {
        self.columns().get(&col).copied().unwrap_or_default()
    }

    /// `Σ c_i² + Σ c_i c_{i+1}` over geometric columns, which is `dim gl(m|n)^e`.
    pub fn column_dim_gl(&self) -> usize {
        let cols = self.columns();
        let sq: usize = cols.values().map(|c| c.total() * c.total()).sum();
        let adj: usize = cols.iter().map(|(k, c)| c.total() * cols.get(&(k + 1)).map_or(0, |d| d.total())).sum();
        sq + adj
    }

    /// ASCII picture, top row first, one character per column coordinate.
    pub fn render_ascii(&self) -> String {
        let l1 = self.partition.largest() as i64;
        let width = (2 * l1 - 1) as usize;
        let mut lines = Vec::new();
        for i in (0..self.partition.len()).rev() {
            let mut line = vec![' '; width];
            for b in self.boxes.iter().filter(|b| b.part == i) {
                line[(b.col + l1 - 1) as usize] = if b.parity.is_odd() { '1' } else { '0' };
            }
            lines.push(line.into_iter().collect::<String>().trim_end().to_string());
        }
        lines.join("\n")
    }

    fn matrix<S: Scalar>(&self, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Vec<S> {
        let d = self.dim_v();
        let mut m = vec![S::zero(); d * d];
        for (r, c, x) in entries {
            m[r * d + c] = x;
        }
        m
    }

    /// The nilpotent `e` as a flattened `(m+n)²` matrix.
    pub fn e_matrix<S: Scalar>(&self) -> Vec<S> {
        let p = &self.partition;
        self.matrix((0..p.len()).flat_map(|i| {
            (0..p.size(i).saturating_sub(1)).map(move |a| (self.vindex(i, a + 1), self.vindex(i, a), S::one()))
        }))
    }

    /// The semisimple `h = Σ −col(b) E_bb`.
    pub fn h_matrix<S: Scalar>(&self) -> Vec<S> {
        self.matrix(self.boxes.iter().map(|b| (b.vindex, b.vindex, S::from_i64(-b.col))))
    }

    /// The completion `f` with `f e^a v_i = a(λ_i − a) e^{a−1} v_i`.
    pub fn f_matrix<S: Scalar>(&self) -> Vec<S> {
        let p = &self.partition;
        self.matrix((0..p.len()).flat_map(|i| {
            let l = p.size(i) as i64;
            (1..p.size(i)).map(move |a| (self.vindex(i, a - 1), self.vindex(i, a), S::from_i64(a as i64 * (l - a as i64))))
        }))
    }

    /// Matrix of `e^k` (`e^0` is the identity).
    pub fn e_power_matrix<S: Scalar>(&self, k: usize) -> Vec<S> {
        let p = &self.partition;
        self.matrix((0..p.len()).flat_map(|i| {
            let l = p.size(i);
            (0..l.saturating_sub(k)).map(move |a| (self.vindex(i, a + k), self.vindex(i, a), S::one()))
        }))
    }

    /// Whether `ξ_i^{j,k}` exists: `max(λ_j − λ_i, 0) ≤ k ≤ λ_j − 1`.
    pub fn xi_exists(&self, i: usize, j: usize, k: usize) -> bool {
        let (li, lj) = (self.partition.size(i), self.partition.size(j));
        k < lj && k + li >= lj
    }

    /// The map `e^a v_i ↦ e^{a+k} v_j` as a flattened matrix.
    pub fn xi_matrix<S: Scalar>(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let (li, lj) = (self.partition.size(i), self.partition.size(j));
        self.matrix((0..li).filter(move |a| a + k < lj).map(move |a| (self.vindex(j, a + k), self.vindex(i, a), S::one())))
    }

    /// The ξ-basis of `gl(m|n)^e`.
    pub fn xi_basis(&self) -> Vec<XiElement> {
        let p = &self.partition;
        let r = p.len();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let (li, lj) = (p.size(i), p.size(j));
                for k in lj.saturating_sub(li)..lj {
                    out.push(XiElement {
                        i,
                        j,
                        k,
                        parity: p.parity(i).add(p.parity(j)),
                        grade: li as i64 - lj as i64 + 2 * k as i64,
                    });
                }
            }
        }
        out
    }

    /// The centralizer dimension formulas for `gl`, `sl` and `psl`.
    pub fn dim_formulas(&self) -> DimFormulas {
        let p = self.partition.even_parts();
        let q = self.partition.odd_parts();
        let (m, n) = (self.partition.m(), self.partition.n());
        let weighted = |v: &[usize]| -> usize { v.iter().enumerate().map(|(i, x)| 2 * i * x).sum() };
        let even = (m + weighted(&p)) + (n + weighted(&q));
        let odd: usize = 2 * p.iter().flat_map(|a| q.iter().map(move |b| (*a).min(*b))).sum::<usize>();
        let dim_gl_e = even + odd;
        DimFormulas {
            dim_gl_e_even: even,
            dim_gl_e_odd: odd,
            dim_gl_e,
            dim_sl_e: dim_gl_e - 1,
            dim_psl_e: (self.column_dim_gl() as i64) - 2,
        }
    }
}

/// A ξ-basis element `ξ_i^{j,k}` of `gl(m|n)^e` (indices 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiElement {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub parity: Parity,
    /// The ad-h eigenvalue `λ_i − λ_j + 2k`.
    pub grade: i64,
}

/// Centralizer dimensions predicted from the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimFormulas {
    /// `m + 2Σ(i−1)p_i + n + 2Σ(j−1)q_j`.
    pub dim_gl_e_even: usize,
    /// `2 Σ min(p_i, q_j)`.
    pub dim_gl_e_odd: usize,
    pub dim_gl_e: usize,
    /// `dim gl^e − 1`.
    pub dim_sl_e: usize,
    /// `Σ c_i² + Σ c_i c_{i+1} − 2`, meaningful for `(n|n)`.
    pub dim_psl_e: i64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pyr(s: &str) -> DynkinPyramid {
        DynkinPyramid::new(&s.parse().unwrap())
    }

    #[test]
    fn two_two_geometry() {
        let p = pyr("2|2");
        let cols = p.columns();
        assert_eq!(cols[&-1].total(), 2);
        assert_eq!(cols[&1].total(), 2);
        assert_eq!(cols[&0].total(), 0);
        let order: Vec<(usize, usize)> = p.boxes().iter().map(|b| (b.part, b.power)).collect();
        assert_eq!(order, vec![(1, 1), (0, 1), (1, 0), (0, 0)]);
        assert_eq!(p.dim_formulas().dim_gl_e, 8);
        assert_eq!(p.dim_formulas().dim_psl_e, 6);
    }

    #[test]
    fn mixed_geometry() {
        let p = pyr("2,1|");
        let c: Vec<usize> = p.columns().values().map(|c| c.total()).collect();
        assert_eq!(c, vec![1, 1, 1]);
        assert_eq!(pyr("2,1|2,1").dim_formulas().dim_psl_e, 18);
        assert_eq!(pyr("1,1|1,1").dim_formulas().dim_psl_e, 14);
    }

    #[test]
    fn xi_counts_match_formula() {
        for s in ["2|2", "3,1|2", "3|3,1,1", "2,2,1|1"] {
            let p = pyr(s);
            assert_eq!(p.xi_basis().len(), p.dim_formulas().dim_gl_e, "{s}");
            assert_eq!(p.column_dim_gl(), p.dim_formulas().dim_gl_e, "{s}");
        }
    }

    #[test]
    fn ascii_rendering() {
        assert_eq!(pyr("3|2").render_ascii(), " 1 1\n0 0 0");
    }
}
