//! Reachability, strong reachability and the Panyushev property of nilpotent
//! elements, with the per-orbit report and its renderings.

pub mod diagram;
pub mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Subspace;
use crate::matrixalg::{DynkinPyramid, MatrixAlgebra, MatrixFamily, NilpotentData, SuperPartition};
use crate::superalg::{GradedDecomposition, SuperAlgebra};

pub use diagram::{core_blocks, labelled_diagram, pyramid_stats, DiagramNode, LabelledDiagram, NodeKind, PyramidStats};

/// Everything computed for one nilpotent `e` with neutral element `h`.
#[derive(Clone)]
pub struct OrbitAnalysis<S> {
    pub centralizer: Subspace<S>,
    pub derived: Subspace<S>,
    pub graded: GradedDecomposition<S>,
    pub center: Option<Subspace<S>>,
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev_generated: bool,
    pub panyushev_layerwise: bool,
    /// `e ∈ [g^e(1), g^e(1)]`.
    pub e_in_derived_g1: bool,
}

impl<S: Scalar> std::fmt::Debug for OrbitAnalysis<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrbitAnalysis")
            .field("dim_centralizer", &self.centralizer.dim())
            .field("dim_derived", &self.derived.dim())
            .field("graded_dims", &self.graded.dims())
            .field("reachable", &self.reachable)
            .field("strongly_reachable", &self.strongly_reachable)
            .field("panyushev_generated", &self.panyushev_generated)
            .field("panyushev_layerwise", &self.panyushev_layerwise)
            .finish()
    }
}

/// Runs every check on `(e, h)` in `g`; the center of `g^e` only when asked.
pub fn analyze<S: Scalar>(g: &SuperAlgebra<S>, e: &[S], h: &[S], with_center: bool) -> Result<OrbitAnalysis<S>> {
    let centralizer = g.centralizer(e)?;
    let derived = g.derived_of_subalgebra(&centralizer)?;
    let graded = graded_centralizer(g, &centralizer, h)?;
    let reachable = derived.contains(e)?;
    let strongly_reachable = derived.dim() == centralizer.dim();
    let (panyushev_generated, panyushev_layerwise) = panyushev_from(g, &graded)?;
    let g1 = graded.piece(1);
    let e_in_derived_g1 = g.bracket_span(&g1, &g1)?.contains(e)?;
    let center = if with_center { Some(g.center_of(&centralizer)?) } else { None };
    Ok(OrbitAnalysis {
        centralizer,
        derived,
        graded,
        center,
        reachable,
        strongly_reachable,
        panyushev_generated,
        panyushev_layerwise,
        e_in_derived_g1,
    })
}

/// `ad h`-grading of `g^e`; negative grades are rejected.
fn graded_centralizer<S: Scalar>(g: &SuperAlgebra<S>, ge: &Subspace<S>, h: &[S]) -> Result<GradedDecomposition<S>> {
    let graded = g.grade_decompose(ge, h)?;
    if let Some(j) = graded.min_grade().filter(|&j| j < 0) {
        return Err(Error::Construction(format!("g^e has a nonzero piece in degree {j}")));
    }
    Ok(graded)
}

/// `e ∈ [g^e, g^e]`.
pub fn is_reachable<S: Scalar>(g: &SuperAlgebra<S>, e: &[S]) -> Result<bool> {
    let ge = g.centralizer(e)?;
    g.derived_of_subalgebra(&ge)?.contains(e)
}

/// `[g^e, g^e] = g^e`.
pub fn is_strongly_reachable<S: Scalar>(g: &SuperAlgebra<S>, e: &[S]) -> Result<bool> {
    let ge = g.centralizer(e)?;
    Ok(g.derived_of_subalgebra(&ge)?.dim() == ge.dim())
}

/// The generated and layerwise forms of the Panyushev property.
pub fn satisfies_panyushev<S: Scalar>(g: &SuperAlgebra<S>, e: &[S], h: &[S]) -> Result<(bool, bool)> {
    let ge = g.centralizer(e)?;
    panyushev_from(g, &graded_centralizer(g, &ge, h)?)
}

fn panyushev_from<S: Scalar>(g: &SuperAlgebra<S>, graded: &GradedDecomposition<S>) -> Result<(bool, bool)> {
    let positive = graded.at_least(1);
    let g1 = graded.piece(1);
    let generated = g.generated_subalgebra(&g1)?.dim() == positive.dim();
    let mut layerwise = true;
    let top = graded.max_grade().unwrap_or(0);
    for j in 1..top {
        let next = graded.piece(j + 1);
        if next.is_zero() {
            continue;
        }
        if !g.bracket_span(&g1, &graded.piece(j))?.equals(&next)? {
            layerwise = false;
            break;
        }
    }
    Ok((generated, layerwise))
}

/// `λ_i − λ_{i+1} ∈ {0, 1}` for consecutive parts and `λ_{r+s} = 1`.
pub fn reachability_criterion(p: &SuperPartition) -> bool {
    let s = p.sizes();
    s.windows(2).all(|w| w[0] - w[1] <= 1) && s.last() == Some(&1)
}

/// `z(g^e)`.
pub fn center_of_centralizer<S: Scalar>(g: &SuperAlgebra<S>, e: &[S]) -> Result<Subspace<S>> {
    g.center_of(&g.centralizer(e)?)
}

/// `span{e, e², …, e^{λ₁−1}}` pushed into a matrix algebra.
pub fn e_power_span<S: Scalar>(alg: &MatrixAlgebra<S>, pyr: &DynkinPyramid) -> Result<Subspace<S>> {
    let mats: Vec<Vec<S>> = (1..pyr.partition().largest()).map(|k| pyr.e_power_matrix(k)).collect();
    alg.subspace_from_matrices(&mats)
}

/// Dimensions recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDims {
    pub g: usize,
    pub ge: usize,
    pub derived: usize,
    pub center: Option<usize>,
}

/// Boolean outcomes recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFlags {
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev_generated: bool,
    pub panyushev_layerwise: bool,
    pub e_in_derived_g1: bool,
    /// The partition criterion, for type A and osp.
    pub criterion: Option<bool>,
}

/// Diagram data recorded in a type-A report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub labels: Vec<i64>,
    pub kinds: Vec<NodeKind>,
    pub n2: usize,
    pub label_sum: i64,
    pub label_sum_even: bool,
}

impl DiagramReport {
    pub fn from_diagram(d: &LabelledDiagram) -> Self {
        DiagramReport {
            labels: d.labels(),
            kinds: d.nodes.iter().map(|n| n.kind).collect(),
            n2: d.n2(),
            label_sum: d.label_sum(),
            label_sum_even: d.label_sum() % 2 == 0,
        }
    }
}

/// The full record of one analyzed orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub algebra_name: String,
    pub orbit_label: Option<String>,
    pub partition: Option<String>,
    pub e: String,
    pub h: String,
    pub dims: ReportDims,
    pub graded_dims: BTreeMap<i64, usize>,
    pub flags: ReportFlags,
    pub diagram: Option<DiagramReport>,
}

impl OrbitReport {
    /// Builds the report from a finished analysis.
    pub fn new<S: Scalar>(g: &SuperAlgebra<S>, e: &[S], h: &[S], a: &OrbitAnalysis<S>) -> Self {
        OrbitReport {
            algebra_name: g.name().to_string(),
            orbit_label: None,
            partition: None,
            e: g.format(e),
            h: g.format(h),
            dims: ReportDims {
                g: g.dim(),
                ge: a.centralizer.dim(),
                derived: a.derived.dim(),
                center: a.center.as_ref().map(|c| c.dim()),
            },
            graded_dims: a.graded.dims(),
            flags: ReportFlags {
                reachable: a.reachable,
                strongly_reachable: a.strongly_reachable,
                panyushev_generated: a.panyushev_generated,
                panyushev_layerwise: a.panyushev_layerwise,
                e_in_derived_g1: a.e_in_derived_g1,
                criterion: None,
            },
            diagram: None,
        }
    }

    /// Pretty JSON with stable field order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// A markdown rendering.
    pub fn to_markdown(&self) -> String {
        let mut s = format!("## {}: {}\n\n", self.algebra_name, self.label());
        s.push_str("| quantity | value |\n|---|---|\n");
        let mut row = |k: &str, v: String| s.push_str(&format!("| {k} | {v} |\n"));
        row("e", format!("`{}`", self.e));
        row("h", format!("`{}`", self.h));
        row("dim g", self.dims.g.to_string());
        row("dim g^e", self.dims.ge.to_string());
        row("dim [g^e,g^e]", self.dims.derived.to_string());
        if let Some(c) = self.dims.center {
            row("dim z(g^e)", c.to_string());
        }
        row("graded dims", graded_text(&self.graded_dims));
        row("reachable", mark(self.flags.reachable));
        row("strongly reachable", mark(self.flags.strongly_reachable));
        row("Panyushev (generated)", mark(self.flags.panyushev_generated));
        row("Panyushev (layerwise)", mark(self.flags.panyushev_layerwise));
        row("e in [g^e(1),g^e(1)]", mark(self.flags.e_in_derived_g1));
        if let Some(c) = self.flags.criterion {
            row("partition criterion", mark(c));
        }
        if let Some(d) = &self.diagram {
            row("labels", format!("{:?}", d.labels));
            row("n2", d.n2.to_string());
            row("sum of labels", d.label_sum.to_string());
        }
        s
    }

    /// A plain-text rendering.
    pub fn to_ascii(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut s = format!("{} {}\n", self.algebra_name, self.label());
        s.push_str(&format!("  e = {}\n  h = {}\n", self.e, self.h));
        s.push_str(&format!(
            "  dim g = {}, dim g^e = {}, dim [g^e,g^e] = {}",
            self.dims.g, self.dims.ge, self.dims.derived
        ));
        if let Some(c) = self.dims.center {
            s.push_str(&format!(", dim z(g^e) = {c}"));
        }
        s.push_str(&format!("\n  graded dims: {}\n", graded_text(&self.graded_dims)));
        s.push_str(&format!(
            "  reachable: {}\n  strongly reachable: {}\n  Panyushev (generated): {}\n  Panyushev (layerwise): {}\n  e in [g^e(1),g^e(1)]: {}\n",
            yn(self.flags.reachable),
            yn(self.flags.strongly_reachable),
            yn(self.flags.panyushev_generated),
            yn(self.flags.panyushev_layerwise),
            yn(self.flags.e_in_derived_g1)
        ));
        if let Some(c) = self.flags.criterion {
            s.push_str(&format!("  partition criterion: {}\n", yn(c)));
        }
        if let Some(d) = &self.diagram {
            s.push_str(&format!("  labels: {:?} (n2 = {})\n", d.labels, d.n2));
        }
        s
    }

    fn label(&self) -> String {
        match (&self.orbit_label, &self.partition) {
            (Some(l), _) => format!("e = {l}"),
            (None, Some(p)) => format!("λ = ({p})"),
            (None, None) => "e".to_string(),
        }
    }
}

fn mark(b: bool) -> String {
    if b { "✓" } else { "✗" }.to_string()
}

fn graded_text(d: &BTreeMap<i64, usize>) -> String {
    d.iter().map(|(j, n)| format!("{j}:{n}")).collect::<Vec<_>>().join(" ")
}

/// Analyzes the orbit of a partition inside a matrix algebra.
pub fn analyze_partition<S: Scalar>(alg: &MatrixAlgebra<S>, p: &SuperPartition, with_center: bool) -> Result<OrbitReport> {
    let nd = NilpotentData::new(alg, p)?;
    let a = analyze(alg.algebra(), &nd.e, &nd.h, with_center)?;
    let mut r = OrbitReport::new(alg.algebra(), &nd.e, &nd.h, &a);
    r.partition = Some(p.to_string());
    r.flags.criterion = Some(reachability_criterion(p));
    if alg.family() != MatrixFamily::Osp {
        r.diagram = Some(DiagramReport::from_diagram(&labelled_diagram(&nd.pyramid)));
    }
    Ok(r)
}

/// One row of a classification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub orbit: String,
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev: bool,
}

impl From<&OrbitReport> for TableRow {
    fn from(r: &OrbitReport) -> Self {
        TableRow {
            orbit: r.orbit_label.clone().or_else(|| r.partition.clone()).unwrap_or_default(),
            reachable: r.flags.reachable,
            strongly_reachable: r.flags.strongly_reachable,
            panyushev: r.flags.panyushev_generated,
        }
    }
}

/// A markdown classification table with one check column per property.
pub fn markdown_table(title: &str, rows: &[TableRow]) -> String {
    let tick = |b: bool| if b { "✓" } else { " " };
    let mut s = format!("### {title}\n\n| e | reachable | strongly reachable | Panyushev |\n|---|:---:|:---:|:---:|\n");
    for r in rows {
        s.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.orbit,
            tick(r.reachable),
            tick(r.strongly_reachable),
            tick(r.panyushev)
        ));
    }
    s
}
