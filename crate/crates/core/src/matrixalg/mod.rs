//! Matrix Lie superalgebras `gl(m|n)`, `sl(m|n)`, `psl(n|n)` and `osp(m|2n)`,
//! together with the nilpotent elements determined by super-partitions.
//!
//! Each algebra is a subspace of `gl(m|n)` (flattened `(m+n)²` matrices, even
//! coordinates first) presented as a [`SuperAlgebra`] on the RREF basis of
//! that subspace; `psl(n|n)` is the quotient of `sl(n|n)` by the identity.

pub mod osp;
pub mod partition;
pub mod pyramid;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, Subspace};
use crate::superalg::{format_combination, Parity, Projection, SuperAlgebra};

pub use osp::{OspDecomposition, OspForm};
pub use partition::{integer_partitions, Part, SuperPartition};
pub use pyramid::{ColumnCount, DimFormulas, DynkinPyramid, PyramidBox, XiElement};

/// Which matrix family an algebra belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixFamily {
    Gl,
    Sl,
    Psl,
    Osp,
}

impl MatrixFamily {
    /// Lower-case family name.
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixFamily::Gl => "gl",
            MatrixFamily::Sl => "sl",
            MatrixFamily::Psl => "psl",
            MatrixFamily::Osp => "osp",
        }
    }
}

/// Parity of the `V` coordinate `a` in `gl(m|n)`.
fn v_parity(m: usize, a: usize) -> Parity {
    if a < m {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Parity of the matrix unit `E_{ab}`.
pub fn unit_parity(m: usize, a: usize, b: usize) -> Parity {
    v_parity(m, a).add(v_parity(m, b))
}

/// Names `E(a,b)` (1-based) of the matrix units of `gl(m|n)`.
pub fn gl_unit_names(dim_v: usize) -> Vec<String> {
    (0..dim_v * dim_v).map(|t| format!("E({},{})", t / dim_v + 1, t % dim_v + 1)).collect()
}

/// The supercommutator `xy − (−1)^{|x||y|} yx`, extended bilinearly.
pub fn supercommutator<S: Scalar>(m: usize, dim_v: usize, x: &[S], y: &[S]) -> Vec<S> {
    let d = dim_v;
    let nx: Vec<(usize, &S)> = x.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    let ny: Vec<(usize, &S)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    let mut out = vec![S::zero(); d * d];
    for &(s, xv) in &nx {
        let (a, b) = (s / d, s % d);
        let px = unit_parity(m, a, b);
        for &(t, yv) in &ny {
            let (c, dd) = (t / d, t % d);
            let xy = xv.mul_ref(yv);
            // E_ab E_cd = δ_bc E_ad
            if b == c {
                out[a * d + dd] = out[a * d + dd].add_ref(&xy);
            }
            // E_cd E_ab = δ_da E_cb
            if dd == a {
                let flips = Parity::sign_flips(px, unit_parity(m, c, dd));
                let idx = c * d + b;
                out[idx] = if flips { out[idx].add_ref(&xy) } else { out[idx].sub_ref(&xy) };
            }
        }
    }
    out
}

/// Ordinary matrix product of flattened square matrices.
pub fn matmul<S: Scalar>(dim_v: usize, x: &[S], y: &[S]) -> Vec<S> {
    let d = dim_v;
    let mut out = vec![S::zero(); d * d];
    for i in 0..d {
        for k in 0..d {
            let a = &x[i * d + k];
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                let b = &y[k * d + j];
                if !b.is_zero() {
                    out[i * d + j].add_mul_assign(a, b);
                }
            }
        }
    }
    out
}

/// A matrix-realized Lie superalgebra.
#[derive(Clone)]
pub struct MatrixAlgebra<S> {
    family: MatrixFamily,
    m: usize,
    n: usize,
    algebra: SuperAlgebra<S>,
    /// Span in `gl(m|n)` coordinates; for `psl` this is the span of `sl`.
    span: Subspace<S>,
    quotient: Option<Projection<S>>,
    form: Option<OspForm>,
}

impl<S: Scalar> MatrixAlgebra<S> {
    /// Presents a bracket-closed, graded subspace of `gl(m|n)` as an algebra.
    pub(crate) fn from_span(family: MatrixFamily, name: String, m: usize, n: usize, span: Subspace<S>) -> Result<Self> {
        let d = m + n;
        let gl_names = gl_unit_names(d);
        let basis = span.basis().to_vec();
        let mut parity = Vec::with_capacity(basis.len());
        for b in &basis {
            let p = span_vector_parity(m, d, b)
                .ok_or_else(|| Error::Construction(format!("basis vector {} is not homogeneous", format_combination(&gl_names, b))))?;
            parity.push(p);
        }
        let names = basis.iter().map(|b| format_combination(&gl_names, b)).collect();
        let algebra = SuperAlgebra::new(name, names, parity, |i, j| {
            let c = supercommutator(m, d, &basis[i], &basis[j]);
            span.coords(&c)?.ok_or_else(|| Error::NotClosed { witness: format_combination(&gl_names, &c) })
        })?;
        Ok(MatrixAlgebra { family, m, n, algebra, span, quotient: None, form: None })
    }

    /// The abstract algebra.
    pub fn algebra(&self) -> &SuperAlgebra<S> {
        &self.algebra
    }

    /// Matrix family.
    pub fn family(&self) -> MatrixFamily {
        self.family
    }

    /// Even dimension of `V`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Odd dimension of `V`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim V`.
    pub fn dim_v(&self) -> usize {
        self.m + self.n
    }

    /// The invariant form, for `osp`.
    pub fn form(&self) -> Option<&OspForm> {
        self.form.as_ref()
    }

    /// The span in `gl` coordinates (of `sl(n|n)` for `psl`).
    pub fn matrix_span(&self) -> &Subspace<S> {
        &self.span
    }

    /// The quotient map `sl(n|n) → psl(n|n)` in algebra coordinates.
    pub fn projection(&self) -> Option<&Projection<S>> {
        self.quotient.as_ref()
    }

    /// Coordinates of a matrix in this algebra (its image, for `psl`).
    pub fn to_algebra(&self, mat: &[S]) -> Result<Vec<S>> {
        let d = self.dim_v();
        if mat.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: mat.len() });
        }
        let coords = self.span.coords(mat)?.ok_or_else(|| {
            Error::Construction(format!(
                "matrix {} is not in {}",
                format_combination(&gl_unit_names(d), mat),
                self.algebra.name()
            ))
        })?;
        match &self.quotient {
            Some(p) => p.project(&coords),
            None => Ok(coords),
        }
    }

    /// A matrix representing an algebra element (the complement lift, for `psl`).
    pub fn to_matrix(&self, v: &[S]) -> Result<Vec<S>> {
        let coords = match &self.quotient {
            Some(p) => p.lift(v)?,
            None => v.to_vec(),
        };
        self.span.combine(&coords)
    }

    /// Whether a matrix lies in the algebra (in `sl(n|n)`, for `psl`).
    pub fn contains_matrix(&self, mat: &[S]) -> Result<bool> {
        self.span.contains(mat)
    }

    /// Image in this algebra of a subspace of matrices.
    pub fn subspace_from_matrices(&self, mats: &[Vec<S>]) -> Result<Subspace<S>> {
        let mut out = Subspace::zero(self.algebra.dim());
        for m in mats {
            out.insert(&self.to_algebra(m)?)?;
        }
        Ok(out)
    }
}

impl<S: Scalar> std::fmt::Debug for MatrixAlgebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatrixAlgebra({:?})", self.algebra)
    }
}

fn span_vector_parity<S: Scalar>(m: usize, d: usize, v: &[S]) -> Option<Parity> {
    let mut p = None;
    for (t, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let q = unit_parity(m, t / d, t % d);
        match p {
            None => p = Some(q),
            Some(r) if r != q => return None,
            _ => {}
        }
    }
    p
}

/// `gl(m|n)`.
pub fn build_gl<S: Scalar>(m: usize, n: usize) -> Result<MatrixAlgebra<S>> {
    let d = m + n;
    if d == 0 {
        return Err(Error::InvalidAlgebra("gl(0|0) is empty".into()));
    }
    MatrixAlgebra::from_span(MatrixFamily::Gl, format!("gl({m}|{n})"), m, n, Subspace::full(d * d))
}

/// Supertrace-zero matrices spanning `sl(m|n)`.
fn sl_span<S: Scalar>(m: usize, n: usize) -> Result<Subspace<S>> {
    let d = m + n;
    let mut vecs = Vec::with_capacity(d * d - 1);
    for a in 0..d {
        for b in 0..d {
            if a != b {
                let mut v = vec![S::zero(); d * d];
                v[a * d + b] = S::one();
                vecs.push(v);
            }
        }
    }
    for a in 1..d {
        let mut v = vec![S::zero(); d * d];
        v[0] = S::one();
        // str(E_00 ∓ E_aa) = 0
        v[a * d + a] = if v_parity(m, a) == v_parity(m, 0) { S::one().neg_ref() } else { S::one() };
        vecs.push(v);
    }
    Subspace::span(d * d, &vecs)
}

/// `sl(m|n)`.
pub fn build_sl<S: Scalar>(m: usize, n: usize) -> Result<MatrixAlgebra<S>> {
    let d = m + n;
    if d < 2 {
        return Err(Error::InvalidAlgebra(format!("sl({m}|{n}) is zero")));
    }
    MatrixAlgebra::from_span(MatrixFamily::Sl, format!("sl({m}|{n})"), m, n, sl_span(m, n)?)
}

/// `psl(n|n) = sl(n|n)/⟨I⟩`, for `n ≥ 2`.
pub fn build_psl<S: Scalar>(n: usize) -> Result<MatrixAlgebra<S>> {
    if n < 2 {
        return Err(Error::InvalidAlgebra(format!("psl({n}|{n}) requires n ≥ 2")));
    }
    let sl = build_sl::<S>(n, n)?;
    let d = 2 * n;
    let identity: Vec<S> = (0..d * d).map(|t| if t / d == t % d { S::one() } else { S::zero() }).collect();
    let centre = sl.to_algebra(&identity)?;
    let ideal = sl.algebra.span(&[centre])?;
    let (algebra, proj) = sl.algebra.quotient(&ideal, format!("psl({n}|{n})"))?;
    Ok(MatrixAlgebra {
        family: MatrixFamily::Psl,
        m: n,
        n,
        algebra,
        span: sl.span,
        quotient: Some(proj),
        form: None,
    })
}

/// `osp(m|2n)` preserving the form attached to the trivial partition.
pub fn build_osp<S: Scalar>(m: usize, n: usize) -> Result<MatrixAlgebra<S>> {
    osp::build_osp_for(&SuperPartition::trivial(m, 2 * n)?)
}

/// Builds the type-A algebra of a family for a partition of `(m|n)`.
pub fn build_type_a<S: Scalar>(family: MatrixFamily, m: usize, n: usize) -> Result<MatrixAlgebra<S>> {
    match family {
        MatrixFamily::Gl => build_gl(m, n),
        MatrixFamily::Sl => build_sl(m, n),
        MatrixFamily::Psl => {
            if m != n {
                return Err(Error::InvalidAlgebra(format!("psl needs m = n, got ({m}|{n})")));
            }
            build_psl(n)
        }
        MatrixFamily::Osp => Err(Error::InvalidAlgebra("osp algebras depend on the partition; use osp::build_osp_for".into())),
    }
}

/// An sl(2)-triple determined by a Dynkin pyramid, in algebra coordinates.
#[derive(Clone, Debug)]
pub struct NilpotentData<S> {
    pub partition: SuperPartition,
    pub pyramid: DynkinPyramid,
    pub e: Vec<S>,
    pub h: Vec<S>,
    pub f: Vec<S>,
}

impl<S: Scalar> NilpotentData<S> {
    /// Builds `e, h, f` from the pyramid of `partition` inside `alg` and
    /// checks the sl(2) relations.
    pub fn new(alg: &MatrixAlgebra<S>, partition: &SuperPartition) -> Result<Self> {
        if partition.m() != alg.m || partition.n() != alg.n {
            return Err(Error::InvalidPartition(format!(
                "{partition} is a partition of ({}|{}), not of ({}|{})",
                partition.m(),
                partition.n(),
                alg.m,
                alg.n
            )));
        }
        if alg.family == MatrixFamily::Osp {
            partition.require_osp()?;
            if alg.form.as_ref().map(|f| f.partition() != partition).unwrap_or(true) {
                return Err(Error::InvalidAlgebra(format!("osp algebra was not built for the partition {partition}")));
            }
        }
        let pyramid = DynkinPyramid::new(partition);
        let e = alg.to_algebra(&pyramid.e_matrix())?;
        let h = alg.to_algebra(&pyramid.h_matrix())?;
        let f = alg.to_algebra(&pyramid.f_matrix())?;
        let g = &alg.algebra;
        let two = S::from_i64(2);
        let check = |lhs: Vec<S>, rhs: Vec<S>, what: &str| -> Result<()> {
            if lhs != rhs {
                return Err(Error::Construction(format!("sl(2) relation {what} fails for {partition}")));
            }
            Ok(())
        };
        check(g.bracket(&h, &e)?, e.iter().map(|x| two.mul_ref(x)).collect(), "[h,e] = 2e")?;
        check(g.bracket(&h, &f)?, f.iter().map(|x| two.mul_ref(x).neg_ref()).collect(), "[h,f] = -2f")?;
        check(g.bracket(&e, &f)?, h.clone(), "[e,f] = h")?;
        Ok(NilpotentData { partition: partition.clone(), pyramid, e, h, f })
    }

    /// Whether `e` is zero in the algebra.
    pub fn is_zero_orbit(&self) -> bool {
        is_zero_vec(&self.e)
    }
}
