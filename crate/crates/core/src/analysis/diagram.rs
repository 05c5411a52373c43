//! Type-A labelled Dynkin diagrams read off a Dynkin pyramid, their 2-free
//! cores, and the column statistics `r_i, s_i, c_i, k, τ, σ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::matrixalg::{ColumnCount, DynkinPyramid};

/// Colour of a simple-root node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    /// Even simple root.
    White,
    /// Odd isotropic simple root.
    Grey,
}

/// One node `α_t = ε_t − ε_{t+1}` of a labelled diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramNode {
    /// Node number `t` (1-based), joining boxes `t` and `t+1`.
    pub index: usize,
    pub kind: NodeKind,
    pub label: i64,
}

/// A labelled Dynkin diagram, possibly with nodes removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledDiagram {
    pub nodes: Vec<DiagramNode>,
}

impl LabelledDiagram {
    /// Labels in node order.
    pub fn labels(&self) -> Vec<i64> {
        self.nodes.iter().map(|n| n.label).collect()
    }

    /// `n₂(Δ)`, the number of nodes labelled 2.
    pub fn n2(&self) -> usize {
        self.nodes.iter().filter(|n| n.label == 2).count()
    }

    /// `Σ a_i`.
    pub fn label_sum(&self) -> i64 {
        self.nodes.iter().map(|n| n.label).sum()
    }

    /// Whether some label equals 1.
    pub fn has_label_one(&self) -> bool {
        self.nodes.iter().any(|n| n.label == 1)
    }

    /// The 2-free core: all label-2 nodes removed.
    pub fn two_free_core(&self) -> LabelledDiagram {
        LabelledDiagram { nodes: self.nodes.iter().filter(|n| n.label != 2).copied().collect() }
    }

    /// Compact text such as `0* 2* 0*` (grey nodes starred).
    pub fn render(&self) -> String {
        self.nodes
            .iter()
            .map(|n| format!("{}{}", n.label, if n.kind == NodeKind::Grey { "*" } else { "" }))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The diagram of the pyramid: node `t` is labelled `col(t+1) − col(t)` and is
/// grey when boxes `t` and `t+1` have different parities.
pub fn labelled_diagram(pyr: &DynkinPyramid) -> LabelledDiagram {
    let b = pyr.boxes();
    let nodes = (0..b.len().saturating_sub(1))
        .map(|t| DiagramNode {
            index: t + 1,
            kind: if b[t].parity == b[t + 1].parity { NodeKind::White } else { NodeKind::Grey },
            label: b[t + 1].col - b[t].col,
        })
        .collect();
    LabelledDiagram { nodes }
}

/// Maximal runs of consecutive boxes (0-based positions in pyramid order)
/// joined by nodes with label different from 2.
pub fn core_blocks(pyr: &DynkinPyramid) -> Vec<Vec<usize>> {
    let d = labelled_diagram(pyr);
    let mut blocks = vec![vec![0]];
    for n in &d.nodes {
        if n.label == 2 {
            blocks.push(vec![n.index]);
        } else {
            blocks.last_mut().expect("nonempty").push(n.index);
        }
    }
    blocks
}

/// Column statistics of a pyramid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidStats {
    /// `(r_i, s_i)` per integer column between `−λ_1 + 1` and `λ_1 − 1`.
    pub columns: BTreeMap<i64, ColumnCount>,
    /// Least `k > 0` with column `k` empty.
    pub k: i64,
    /// Number of columns with `r_i = s_i ≠ 0`, over `|i| > k` when some label is 1
    /// and over all columns otherwise.
    pub tau: usize,
    /// `1` when `Σ_{|i|<k} r_i = Σ_{|i|<k} s_i`, else `0`.
    pub sigma: usize,
    /// `r_i = s_i` for every column.
    pub balanced: bool,
}

/// Computes `r_i, s_i, k, τ, σ` for a type-A pyramid.
pub fn pyramid_stats(pyr: &DynkinPyramid) -> PyramidStats {
    let columns = pyr.columns();
    let count = |c: i64| columns.get(&c).copied().unwrap_or_default();
    let mut k = 1;
    while count(k).total() != 0 {
        k += 1;
    }
    let has_one = labelled_diagram(pyr).has_label_one();
    let tau = columns
        .iter()
        .filter(|(i, c)| (!has_one || i.abs() > k) && c.even == c.odd && c.even != 0)
        .count();
    let (r_in, s_in) = columns
        .iter()
        .filter(|(i, _)| i.abs() < k)
        .fold((0, 0), |(r, s), (_, c)| (r + c.even, s + c.odd));
    let balanced = columns.values().all(|c| c.even == c.odd);
    PyramidStats { columns, k, tau, sigma: usize::from(r_in == s_in), balanced }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pyr(s: &str) -> DynkinPyramid {
        DynkinPyramid::new(&s.parse().unwrap())
    }

    #[test]
    fn two_two_labels() {
        let d = labelled_diagram(&pyr("2|2"));
        assert_eq!(d.labels(), vec![0, 2, 0]);
        assert!(d.nodes.iter().all(|n| n.kind == NodeKind::Grey));
        assert_eq!(d.n2(), 1);
        assert_eq!(d.two_free_core().labels(), vec![0, 0]);
        assert_eq!(core_blocks(&pyr("2|2")), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn zero_orbit_labels() {
        let d = labelled_diagram(&pyr("1,1|1"));
        assert_eq!(d.labels(), vec![0, 0]);
        assert_eq!(d.n2(), 0);
    }

    #[test]
    fn labels_lie_in_zero_one_two() {
        for s in ["3,1|2", "4|2,1,1", "3,2,1|3", "2,2|3,1"] {
            let d = labelled_diagram(&pyr(s));
            assert!(d.labels().iter().all(|a| (0..=2).contains(a)), "{s}: {:?}", d.labels());
        }
    }

    #[test]
    fn stats_of_two_two() {
        let st = pyramid_stats(&pyr("2|2"));
        assert_eq!(st.columns[&-1], ColumnCount { even: 1, odd: 1 });
        assert_eq!(st.columns[&1], ColumnCount { even: 1, odd: 1 });
        assert_eq!(st.k, 2);
        assert_eq!(st.tau, 2);
        assert!(st.balanced);
    }

    #[test]
    fn stats_with_central_block() {
        // columns −1, 0, 1 occupied; k = 2; three even and three odd boxes inside
        let st = pyramid_stats(&pyr("2,1|1,1,1"));
        assert_eq!(st.k, 2);
        assert_eq!(st.tau, 0);
        assert_eq!(st.sigma, 1);
    }
}
