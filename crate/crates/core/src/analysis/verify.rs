//! Exhaustive sweeps over partitions and the checks run on them.
//!
//! Every check compares a brute-force computation against a closed-form
//! prediction and reports disagreements as counterexamples.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    analyze, analyze_partition, core_blocks, e_power_span, labelled_diagram, pyramid_stats, OrbitReport,
};
use crate::error::{Error, Result};
use crate::field::{Rational, Scalar};
use crate::linalg::Subspace;
use crate::matrixalg::osp::{build_osp_for, osp_decomposition};
use crate::matrixalg::{build_gl, build_osp, build_psl, build_sl, MatrixAlgebra, MatrixFamily, NilpotentData, SuperPartition};
use crate::superalg::SuperAlgebra;

/// The claims that can be checked by a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// Brute-force reachability equals the partition criterion.
    Theorem1,
    /// Reachable, generated, layerwise and `e ∈ [g^e(1), g^e(1)]` agree.
    Theorem2,
    /// Centralizer dimensions of `gl`, `sl`, `psl` match the formulas.
    Dims,
    /// `dim psl^e = Σc_i² + Σc_i c_{i+1} − 2 = dim sl^e − 1`.
    DimPsl,
    /// `z(psl^e) = span{e, …, e^{λ₁−1}}`.
    Center,
    /// Center dimensions of `psl^e` against diagram data.
    Theorem4,
    /// 2-free core relations for `psl`.
    Theorem5,
    /// The `[g^e, g^e]` decomposition for `osp`.
    OspDerived,
    /// Super Jacobi identity of the matrix constructions.
    Jacobi,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::Dims,
        Claim::DimPsl,
        Claim::Center,
        Claim::Theorem4,
        Claim::Theorem5,
        Claim::OspDerived,
        Claim::Jacobi,
    ];

    /// Command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Dims => "dims",
            Claim::DimPsl => "dim-psl",
            Claim::Center => "center",
            Claim::Theorem4 => "theorem4",
            Claim::Theorem5 => "theorem5",
            Claim::OspDerived => "osp-derived",
            Claim::Jacobi => "jacobi",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownLabel(format!("unknown claim `{s}`; expected one of: {}", claim_names())))
    }
}

fn claim_names() -> String {
    Claim::ALL.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}

/// Size bounds per family; `None` skips the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRange {
    /// `gl(m|n)` with `m + n ≤ bound`.
    pub gl: Option<usize>,
    /// `sl(m|n)` with `m + n ≤ bound`.
    pub sl: Option<usize>,
    /// `psl(n|n)` with `n ≤ bound`.
    pub psl: Option<usize>,
    /// `osp(m|2n)` with `m + 2n ≤ bound`.
    pub osp: Option<usize>,
}

impl Default for SweepRange {
    fn default() -> Self {
        SweepRange { gl: Some(8), sl: Some(8), psl: Some(4), osp: Some(9) }
    }
}

impl SweepRange {
    /// A range covering one family only.
    pub fn only(family: MatrixFamily, bound: usize) -> Self {
        let mut r = SweepRange { gl: None, sl: None, psl: None, osp: None };
        match family {
            MatrixFamily::Gl => r.gl = Some(bound),
            MatrixFamily::Sl => r.sl = Some(bound),
            MatrixFamily::Psl => r.psl = Some(bound),
            MatrixFamily::Osp => r.osp = Some(bound),
        }
        r
    }
}

impl fmt::Display for SweepRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(b) = self.gl {
            parts.push(format!("gl m+n<={b}"));
        }
        if let Some(b) = self.sl {
            parts.push(format!("sl m+n<={b}"));
        }
        if let Some(b) = self.psl {
            parts.push(format!("psl n<={b}"));
        }
        if let Some(b) = self.osp {
            parts.push(format!("osp m+2n<={b}"));
        }
        f.write_str(&parts.join(", "))
    }
}

/// One failed instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
}

/// Per-instance outcome of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceLine {
    pub instance: String,
    pub holds: bool,
    pub data: String,
}

/// Outcome of one claim over a range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub claim: String,
    pub range: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
    pub lines: Vec<InstanceLine>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    fn from_lines(claim: &str, range: String, lines: Vec<InstanceLine>, start: Instant) -> Self {
        let counterexamples = lines
            .iter()
            .filter(|l| !l.holds)
            .map(|l| Counterexample { instance: l.instance.clone(), detail: l.data.clone() })
            .collect();
        VerifyReport {
            claim: claim.to_string(),
            range,
            instances: lines.len(),
            counterexamples,
            lines,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }

    /// True when no counterexample was found.
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One-paragraph summary.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {} instances ({}), {} counterexamples, {} ms\n",
            self.claim,
            self.instances,
            self.range,
            self.counterexamples.len(),
            self.elapsed_ms
        );
        for c in &self.counterexamples {
            s.push_str(&format!("  {}: {}\n", c.instance, c.detail));
        }
        s
    }
}

fn line(instance: String, holds: bool, data: String) -> InstanceLine {
    InstanceLine { instance, holds, data }
}

/// The type-A algebras of a family in range, as `(m, n)`.
fn type_a_shapes(family: MatrixFamily, bound: usize) -> Vec<(usize, usize)> {
    match family {
        MatrixFamily::Psl => (2..=bound).map(|n| (n, n)).collect(),
        MatrixFamily::Osp => {
            let mut v = Vec::new();
            for n in 1..=bound / 2 {
                for m in 1..=bound.saturating_sub(2 * n) {
                    v.push((m, n));
                }
            }
            v
        }
        _ => {
            let mut v = Vec::new();
            for total in 2..=bound {
                for m in 1..total {
                    let n = total - m;
                    if family == MatrixFamily::Gl || m != n {
                        v.push((m, n));
                    }
                }
            }
            v
        }
    }
}

fn build(family: MatrixFamily, m: usize, n: usize) -> Result<MatrixAlgebra<Rational>> {
    match family {
        MatrixFamily::Gl => build_gl(m, n),
        MatrixFamily::Sl => build_sl(m, n),
        MatrixFamily::Psl => build_psl(n),
        MatrixFamily::Osp => build_osp(m, n),
    }
}

/// An analyzed orbit from a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepItem {
    pub instance: String,
    pub report: OrbitReport,
}

/// Analyzes every orbit of `sl` (`m ≠ n`), `psl` and `osp` in range.
pub fn orbit_sweep(range: &SweepRange) -> Result<Vec<SweepItem>> {
    let mut out = Vec::new();
    for (family, bound) in [(MatrixFamily::Sl, range.sl), (MatrixFamily::Psl, range.psl), (MatrixFamily::Osp, range.osp)] {
        if let Some(b) = bound {
            out.extend(family_sweep(family, b)?);
        }
    }
    Ok(out)
}

/// Analyzes every orbit of every algebra of one family up to `bound`.
pub fn family_sweep(family: MatrixFamily, bound: usize) -> Result<Vec<SweepItem>> {
    let nested: Vec<Vec<SweepItem>> = type_a_shapes(family, bound)
        .par_iter()
        .map(|&(m, n)| -> Result<Vec<SweepItem>> {
            if family == MatrixFamily::Osp {
                SuperPartition::all_osp(m, n)
                    .par_iter()
                    .map(|p| {
                        let alg = build_osp_for::<Rational>(p)?;
                        let report = analyze_partition(&alg, p, false)?;
                        Ok(SweepItem { instance: format!("{} λ=({p})", alg.algebra().name()), report })
                    })
                    .collect()
            } else {
                let alg = build(family, m, n)?;
                SuperPartition::all(m, n)
                    .par_iter()
                    .map(|p| {
                        let report = analyze_partition(&alg, p, false)?;
                        Ok(SweepItem { instance: format!("{} λ=({p})", alg.algebra().name()), report })
                    })
                    .collect()
            }
        })
        .collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// Reachability-criterion lines from a sweep.
pub fn check_theorem1(items: &[SweepItem], range: &SweepRange) -> VerifyReport {
    let start = Instant::now();
    let lines = items
        .iter()
        .map(|it| {
            let f = &it.report.flags;
            let crit = f.criterion.unwrap_or(false);
            line(it.instance.clone(), f.reachable == crit, format!("reachable={} criterion={}", f.reachable, crit))
        })
        .collect();
    VerifyReport::from_lines(Claim::Theorem1.name(), range.to_string(), lines, start)
}

/// Reachability and Panyushev agreement lines from a sweep.
pub fn check_theorem2(items: &[SweepItem], range: &SweepRange) -> VerifyReport {
    let start = Instant::now();
    let lines = items
        .iter()
        .map(|it| {
            let r = &it.report;
            let f = &r.flags;
            let agree = f.reachable == f.panyushev_generated
                && f.reachable == f.panyushev_layerwise
                && f.reachable == f.e_in_derived_g1;
            let lattice = (!f.strongly_reachable || f.reachable) && (!f.panyushev_generated || f.reachable);
            let graded_total: usize = r.graded_dims.values().sum();
            let grading = graded_total == r.dims.ge && r.graded_dims.keys().all(|&j| j >= 0);
            line(
                it.instance.clone(),
                agree && lattice && grading,
                format!(
                    "reachable={} generated={} layerwise={} e_in_[g1,g1]={} strong={} graded_total={}/{}",
                    f.reachable,
                    f.panyushev_generated,
                    f.panyushev_layerwise,
                    f.e_in_derived_g1,
                    f.strongly_reachable,
                    graded_total,
                    r.dims.ge
                ),
            )
        })
        .collect();
    VerifyReport::from_lines(Claim::Theorem2.name(), range.to_string(), lines, start)
}

fn even_subspace<S: Scalar>(g: &SuperAlgebra<S>) -> Result<Subspace<S>> {
    let v: Vec<Vec<S>> = (0..g.dim()).filter(|&i| !g.parity(i).is_odd()).map(|i| g.basis_vector(i)).collect();
    g.span(&v)
}

/// Centralizer dimensions against the closed formulas.
pub fn check_dims(range: &SweepRange, psl_only: bool) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut groups: Vec<(MatrixFamily, usize, usize)> = Vec::new();
    if !psl_only {
        for (family, bound) in [(MatrixFamily::Gl, range.gl), (MatrixFamily::Sl, range.sl)] {
            if let Some(b) = bound {
                let shapes = type_a_shapes(MatrixFamily::Gl, b);
                groups.extend(shapes.into_iter().map(|(m, n)| (family, m, n)));
            }
        }
    }
    if let Some(b) = range.psl {
        groups.extend(type_a_shapes(MatrixFamily::Psl, b).into_iter().map(|(m, n)| (MatrixFamily::Psl, m, n)));
    }
    let nested: Vec<Vec<InstanceLine>> = groups
        .par_iter()
        .map(|&(family, m, n)| -> Result<Vec<InstanceLine>> {
            let alg = build(family, m, n)?;
            let sl = if family == MatrixFamily::Psl { Some(build_sl::<Rational>(n, n)?) } else { None };
            let g = alg.algebra();
            let even = even_subspace(g)?;
            SuperPartition::all(m, n)
                .iter()
                .map(|p| {
                    let nd = NilpotentData::new(&alg, p)?;
                    let ge = g.centralizer(&nd.e)?;
                    let f = nd.pyramid.dim_formulas();
                    let name = format!("{} λ=({p})", g.name());
                    Ok(match family {
                        MatrixFamily::Gl => {
                            let ev = ge.intersect(&even)?.dim();
                            let od = ge.dim() - ev;
                            let ok = ev == f.dim_gl_e_even && od == f.dim_gl_e_odd && ge.dim() == nd.pyramid.column_dim_gl();
                            line(
                                name,
                                ok,
                                format!(
                                    "even {ev} vs {}, odd {od} vs {}, total {} vs Σc²+Σcc {}",
                                    f.dim_gl_e_even,
                                    f.dim_gl_e_odd,
                                    ge.dim(),
                                    nd.pyramid.column_dim_gl()
                                ),
                            )
                        }
                        MatrixFamily::Sl => {
                            line(name, ge.dim() == f.dim_sl_e, format!("dim {} vs dim gl^e − 1 = {}", ge.dim(), f.dim_sl_e))
                        }
                        _ => {
                            let sl = sl.as_ref().expect("psl has sl");
                            let sl_nd = NilpotentData::new(sl, p)?;
                            let sl_dim = sl.algebra().centralizer(&sl_nd.e)?.dim();
                            let ok = ge.dim() as i64 == f.dim_psl_e && ge.dim() + 1 == sl_dim;
                            line(
                                name,
                                ok,
                                format!("dim {} vs Σc²+Σcc−2 = {}, dim sl^e = {}", ge.dim(), f.dim_psl_e, sl_dim),
                            )
                        }
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let claim = if psl_only { Claim::DimPsl } else { Claim::Dims };
    Ok(VerifyReport::from_lines(claim.name(), range.to_string(), nested.into_iter().flatten().collect(), start))
}

/// Centers and 2-free core data for one `psl(n|n)` orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PslRecord {
    pub instance: String,
    pub lambda1: usize,
    pub labels: Vec<i64>,
    pub n2: usize,
    pub label_sum: i64,
    pub has_label_one: bool,
    pub balanced: bool,
    pub k: i64,
    pub tau: usize,
    pub sigma: usize,
    pub dim_ge: usize,
    pub dim_center: usize,
    pub center_is_e_powers: bool,
    pub dim_e_powers: usize,
    pub dim_center_gh: usize,
    pub dim_g0: usize,
    pub dim_g0_e0: usize,
    pub dim_center_g0_e0: usize,
}

/// `g₀` (generated by the root vectors of the 2-free core) and `e₀`.
pub fn two_free_core_data<S: Scalar>(alg: &MatrixAlgebra<S>, nd: &NilpotentData<S>) -> Result<(Subspace<S>, Vec<S>)> {
    let pyr = &nd.pyramid;
    let d = pyr.dim_v();
    let boxes = pyr.boxes();
    let unit = |a: usize, b: usize| -> Vec<S> {
        let mut v = vec![S::zero(); d * d];
        v[a * d + b] = S::one();
        v
    };
    let mut gens = Vec::new();
    for n in labelled_diagram(pyr).nodes.iter().filter(|n| n.label != 2) {
        let (a, b) = (boxes[n.index - 1].vindex, boxes[n.index].vindex);
        gens.push(unit(a, b));
        gens.push(unit(b, a));
    }
    let g = alg.algebra();
    let g0 = g.generated_subalgebra(&alg.subspace_from_matrices(&gens)?)?;
    let mut block_of = vec![0; d];
    for (t, block) in core_blocks(pyr).iter().enumerate() {
        for &pos in block {
            block_of[boxes[pos].vindex] = t;
        }
    }
    let p = pyr.partition();
    let mut e0 = vec![S::zero(); d * d];
    for i in 0..p.len() {
        for a in 0..p.size(i).saturating_sub(1) {
            let (src, dst) = (pyr.vindex(i, a), pyr.vindex(i, a + 1));
            if block_of[src] == block_of[dst] {
                e0[dst * d + src] = S::one();
            }
        }
    }
    Ok((g0, alg.to_algebra(&e0)?))
}

/// Computes a [`PslRecord`] for every partition of `(n|n)`, `2 ≤ n ≤ bound`.
pub fn psl_sweep(bound: usize) -> Result<Vec<PslRecord>> {
    let nested: Vec<Vec<PslRecord>> = (2..=bound)
        .into_par_iter()
        .map(|n| -> Result<Vec<PslRecord>> {
            let alg = build_psl::<Rational>(n)?;
            SuperPartition::all(n, n).par_iter().map(|p| psl_record(&alg, p)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn psl_record(alg: &MatrixAlgebra<Rational>, p: &SuperPartition) -> Result<PslRecord> {
    let g = alg.algebra();
    let nd = NilpotentData::new(alg, p)?;
    let a = analyze(g, &nd.e, &nd.h, true)?;
    let z = a.center.expect("center requested");
    let powers = e_power_span(alg, &nd.pyramid)?;
    let zh = g.center_of(&g.centralizer(&nd.h)?)?;
    let (g0, e0) = two_free_core_data(alg, &nd)?;
    let g0e0 = g.centralizer_within(&g0, &e0)?;
    let z0 = g.center_of(&g0e0)?;
    let d = labelled_diagram(&nd.pyramid);
    let st = pyramid_stats(&nd.pyramid);
    Ok(PslRecord {
        instance: format!("{} λ=({p})", g.name()),
        lambda1: p.largest(),
        labels: d.labels(),
        n2: d.n2(),
        label_sum: d.label_sum(),
        has_label_one: d.has_label_one(),
        balanced: st.balanced,
        k: st.k,
        tau: st.tau,
        sigma: st.sigma,
        dim_ge: a.centralizer.dim(),
        dim_center: z.dim(),
        center_is_e_powers: z.equals(&powers)?,
        dim_e_powers: powers.dim(),
        dim_center_gh: zh.dim(),
        dim_g0: g0.dim(),
        dim_g0_e0: g0e0.dim(),
        dim_center_g0_e0: z0.dim(),
    })
}

/// `z(g^e) = span{e, …, e^{λ₁−1}}` with dimension `λ₁ − 1`.
pub fn check_center(records: &[PslRecord], range: &SweepRange) -> VerifyReport {
    let start = Instant::now();
    let lines = records
        .iter()
        .map(|r| {
            let ok = r.center_is_e_powers && r.dim_center == r.lambda1 - 1;
            line(
                r.instance.clone(),
                ok,
                format!("dim z = {}, λ₁−1 = {}, equal to e-power span: {}", r.dim_center, r.lambda1 - 1, r.center_is_e_powers),
            )
        })
        .collect();
    VerifyReport::from_lines(Claim::Center.name(), range.to_string(), lines, start)
}

/// Center dimensions of `psl^e` and `psl^h` against diagram data.
pub fn check_theorem4(records: &[PslRecord], range: &SweepRange) -> VerifyReport {
    let start = Instant::now();
    let lines = records
        .iter()
        .map(|r| {
            let half_sum = 2 * r.dim_center as i64 == r.label_sum;
            let mut ok = half_sum;
            let mut data = format!("dim z = {}, Σa = {}", r.dim_center, r.label_sum);
            if !r.has_label_one {
                let l1 = r.lambda1;
                let zh = if r.balanced { l1 - 1 } else { l1 - 2 };
                ok &= r.dim_center == r.n2 && r.n2 == l1 - 1 && r.dim_center_gh == zh;
                data.push_str(&format!(
                    ", n₂ = {}, λ₁−1 = {}, dim z(g^h) = {} (expected {zh})",
                    r.n2,
                    l1 - 1,
                    r.dim_center_gh
                ));
            }
            line(r.instance.clone(), ok, data)
        })
        .collect();
    VerifyReport::from_lines(Claim::Theorem4.name(), range.to_string(), lines, start)
}

/// Predicted `dim z(g^e) − dim z(g₀^{e₀})`.
pub fn predicted_center_gap(r: &PslRecord) -> i64 {
    let (n2, tau, sigma) = (r.n2 as i64, r.tau as i64, r.sigma as i64);
    if !r.has_label_one {
        if r.balanced {
            0
        } else {
            n2 - tau
        }
    } else if r.balanced && sigma == 1 {
        n2 - tau
    } else {
        n2 - sigma - tau
    }
}

/// `dim g^e − dim g₀^{e₀} = n₂` and the τ/σ-corrected center gap.
pub fn check_theorem5(records: &[PslRecord], range: &SweepRange) -> VerifyReport {
    let start = Instant::now();
    let lines = records
        .iter()
        .map(|r| {
            let gap = r.dim_ge as i64 - r.dim_g0_e0 as i64;
            let zgap = r.dim_center as i64 - r.dim_center_g0_e0 as i64;
            let want = predicted_center_gap(r);
            line(
                r.instance.clone(),
                gap == r.n2 as i64 && zgap == want,
                format!(
                    "dim g^e − dim g₀^e₀ = {gap} (n₂ = {}), dim z gap = {zgap} (predicted {want}; τ={}, σ={}, k={})",
                    r.n2, r.tau, r.sigma, r.k
                ),
            )
        })
        .collect();
    VerifyReport::from_lines(Claim::Theorem5.name(), range.to_string(), lines, start)
}

/// The `[g^e, g^e]` decomposition for every `osp` orbit in range.
pub fn check_osp_derived(range: &SweepRange) -> Result<VerifyReport> {
    let start = Instant::now();
    let shapes = range.osp.map(|b| type_a_shapes(MatrixFamily::Osp, b)).unwrap_or_default();
    let parts: Vec<SuperPartition> = shapes.iter().flat_map(|&(m, n)| SuperPartition::all_osp(m, n)).collect();
    let lines = parts
        .par_iter()
        .map(|p| -> Result<InstanceLine> {
            let alg = build_osp_for::<Rational>(p)?;
            let g = alg.algebra();
            let nd = NilpotentData::new(&alg, p)?;
            let ge = g.centralizer(&nd.e)?;
            let derived = g.derived_of_subalgebra(&ge)?;
            let dec = osp_decomposition(&alg)?;
            let n2n2 = g.bracket_span(&dec.n2, &dec.n2)?;
            let pieces = [dec.n1.clone(), dec.n2_plus.clone(), dec.frak_n1.clone(), dec.frak_n0.intersect(&n2n2)?];
            let mut rhs = Subspace::zero(g.dim());
            for s in &pieces {
                rhs = rhs.sum(s)?;
            }
            let direct = pieces.iter().map(|s| s.dim()).sum::<usize>() == rhs.dim();
            let nn_zero = g.bracket_span(&dec.frak_n, &dec.frak_n)?.is_zero();
            let n1n1 = g.bracket_span(&dec.n1, &dec.n1)?.is_subspace_of(&dec.frak_n)?;
            let equal = rhs.equals(&derived)?;
            Ok(line(
                format!("{} λ=({p})", g.name()),
                equal && direct && nn_zero && n1n1,
                format!(
                    "dim [g^e,g^e] = {}, decomposition dim = {} (direct: {direct}), [𝔑,𝔑]=0: {nn_zero}, [N₁,N₁]⊆𝔑: {n1n1}",
                    derived.dim(),
                    rhs.dim()
                ),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::from_lines(Claim::OspDerived.name(), range.to_string(), lines, start))
}

/// Super Jacobi identity for every matrix construction in range.
pub fn check_jacobi(range: &SweepRange) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut groups: Vec<(MatrixFamily, usize, usize)> = Vec::new();
    for (family, bound) in [
        (MatrixFamily::Gl, range.gl),
        (MatrixFamily::Sl, range.sl),
        (MatrixFamily::Psl, range.psl),
        (MatrixFamily::Osp, range.osp),
    ] {
        if let Some(b) = bound {
            let shape_family = if family == MatrixFamily::Sl { MatrixFamily::Gl } else { family };
            groups.extend(type_a_shapes(shape_family, b).into_iter().map(|(m, n)| (family, m, n)));
        }
    }
    let lines = groups
        .par_iter()
        .map(|&(family, m, n)| -> Result<InstanceLine> {
            let alg = build(family, m, n)?;
            Ok(jacobi_line(alg.algebra()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::from_lines(Claim::Jacobi.name(), range.to_string(), lines, start))
}

/// One Jacobi report line for an arbitrary algebra.
pub fn jacobi_line<S: Scalar>(g: &SuperAlgebra<S>) -> InstanceLine {
    let bad = g.check_super_jacobi();
    let data = match bad.first() {
        None => format!("dim {}, 0 violations", g.dim()),
        Some(&(i, j, k)) => {
            let names = g.basis_names();
            format!("dim {}, {} violations, first ({}, {}, {})", g.dim(), bad.len(), names[i], names[j], names[k])
        }
    };
    line(g.name().to_string(), bad.is_empty(), data)
}

/// Jacobi report for a single algebra.
pub fn jacobi_report<S: Scalar>(g: &SuperAlgebra<S>) -> VerifyReport {
    let start = Instant::now();
    VerifyReport::from_lines(Claim::Jacobi.name(), g.name().to_string(), vec![jacobi_line(g)], start)
}

/// Runs one claim over a range.
pub fn verify(claim: Claim, range: &SweepRange) -> Result<VerifyReport> {
    match claim {
        Claim::Theorem1 => Ok(check_theorem1(&orbit_sweep(range)?, range)),
        Claim::Theorem2 => Ok(check_theorem2(&orbit_sweep(range)?, range)),
        Claim::Dims => check_dims(range, false),
        Claim::DimPsl => check_dims(range, true),
        Claim::Center => Ok(check_center(&psl_sweep(range.psl.unwrap_or(0))?, range)),
        Claim::Theorem4 => Ok(check_theorem4(&psl_sweep(range.psl.unwrap_or(0))?, range)),
        Claim::Theorem5 => Ok(check_theorem5(&psl_sweep(range.psl.unwrap_or(0))?, range)),
        Claim::OspDerived => check_osp_derived(range),
        Claim::Jacobi => check_jacobi(range),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("theorem9".parse::<Claim>().is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(type_a_shapes(MatrixFamily::Sl, 4), vec![(1, 2), (2, 1), (1, 3), (3, 1)]);
        assert_eq!(type_a_shapes(MatrixFamily::Psl, 3), vec![(2, 2), (3, 3)]);
        assert_eq!(type_a_shapes(MatrixFamily::Osp, 5), vec![(1, 1), (2, 1), (3, 1), (1, 2)]);
    }

    #[test]
    fn small_sweeps() {
        let range = SweepRange { gl: Some(4), sl: Some(4), psl: Some(2), osp: Some(5) };
        let items = orbit_sweep(&range).unwrap();
        for r in [check_dims(&range, false).unwrap(), check_osp_derived(&range).unwrap()] {
            assert!(r.holds(), "{}", r.summary());
        }
        // reachable by brute force although the criterion fails
        for r in [check_theorem1(&items, &range), check_theorem2(&items, &range)] {
            let found: Vec<&str> = r.counterexamples.iter().map(|c| c.instance.as_str()).collect();
            assert_eq!(found.len(), 2, "{}", r.summary());
            assert!(found.iter().any(|i| i.starts_with("psl(2|2)")), "{}", r.summary());
            assert!(found.iter().any(|i| i.starts_with("osp(3|2)")), "{}", r.summary());
        }
    }
}
