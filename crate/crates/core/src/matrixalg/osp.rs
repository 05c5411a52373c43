//! `osp(m|2n)` realized on the pyramid basis of `V`, the involution `i ↦ i*`,
//! the signs `θ_i` and `ε_{i,j,k}`, and the decomposition of `g^e` into
//! `𝔑₀ ⊕ 𝔑₁ ⊕ N₁ ⊕ N₂⁻ ⊕ N₂⁺`.
//!
//! The form is `⟨e^a v_i, e^b v_j⟩ = (−1)^a θ_i δ_{j,i*} δ_{a+b, λ_i−1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Subspace;
use crate::matrixalg::partition::SuperPartition;
use crate::matrixalg::pyramid::DynkinPyramid;
use crate::matrixalg::{unit_parity, MatrixAlgebra, MatrixFamily};
use crate::superalg::Parity;

/// The invariant form attached to an orthosymplectic partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OspForm {
    partition: SuperPartition,
    involution: Vec<usize>,
    theta: Vec<i64>,
}

fn self_paired(size: usize, parity: Parity) -> bool {
    match parity {
        Parity::Even => size % 2 == 1,
        Parity::Odd => size.is_multiple_of(2),
    }
}

impl OspForm {
    /// Pairs equal parts and fixes the signs `θ_i`.
    ///
    /// Self-paired parts get `θ = 1`; in a pair `(i, i+1)` the first gets
    /// `θ = 1` and the second the sign making the form supersymmetric.
    pub fn new(partition: &SuperPartition) -> Result<Self> {
        partition.require_osp()?;
        let r = partition.len();
        let mut involution: Vec<usize> = (0..r).collect();
        let mut theta = vec![1i64; r];
        let mut i = 0;
        while i < r {
            let (l, p) = (partition.size(i), partition.parity(i));
            if self_paired(l, p) {
                i += 1;
                continue;
            }
            let j = i + 1;
            if j >= r || partition.size(j) != l || partition.parity(j) != p {
                return Err(Error::InvalidPartition(format!("part {l} of parity {p} in {partition} has no partner")));
            }
            involution[i] = j;
            involution[j] = i;
            // even parts: θ_{i*} = (−1)^{λ−1}; odd parts: θ_{i*} = (−1)^λ
            let exp = if p.is_odd() { l } else { l - 1 };
            theta[j] = if exp % 2 == 0 { 1 } else { -1 };
            i += 2;
        }
        Ok(OspForm { partition: partition.clone(), involution, theta })
    }

    /// The partition the form was built for.
    pub fn partition(&self) -> &SuperPartition {
        &self.partition
    }

    /// `i*` for each part (0-based).
    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    /// `θ_i` for each part.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// `i*`.
    pub fn star(&self, i: usize) -> usize {
        self.involution[i]
    }

    /// Gram matrix `G[u][w] = ⟨u, w⟩` on the basis of `V`.
    pub fn gram<S: Scalar>(&self, pyr: &DynkinPyramid) -> Vec<S> {
        let d = pyr.dim_v();
        let mut g = vec![S::zero(); d * d];
        for i in 0..self.partition.len() {
            let l = self.partition.size(i);
            let j = self.star(i);
            for a in 0..l {
                let b = l - 1 - a;
                let sign = if a % 2 == 0 { self.theta[i] } else { -self.theta[i] };
                g[pyr.vindex(i, a) * d + pyr.vindex(j, b)] = S::from_i64(sign);
            }
        }
        g
    }

    /// `ε_{i,j,k} = (−1)^{λ_j − k − x̄ī} θ_j θ_i` with `x̄` the parity of `ξ_i^{j,·}`.
    pub fn epsilon(&self, i: usize, j: usize, k: usize) -> Result<i64> {
        let r = self.partition.len();
        if i >= r || j >= r {
            return Err(Error::InvalidPartition(format!("part index out of range: ({i}, {j})")));
        }
        let (li, lj) = (self.partition.size(i), self.partition.size(j));
        if k >= li.min(lj) {
            return Err(Error::InvalidPartition(format!("k = {k} out of range for parts {li}, {lj}")));
        }
        let pi = self.partition.parity(i);
        let x = pi.add(self.partition.parity(j));
        let xi = (x.bit() * pi.bit()) as usize;
        let exp = (lj + 2 * xi) - k - xi;
        let s = if exp.is_multiple_of(2) { 1 } else { -1 };
        Ok(s * self.theta[i] * self.theta[j])
    }
}

/// Whether `x` preserves the form: `⟨xu, w⟩ + (−1)^{|x||u|} ⟨u, xw⟩ = 0`
/// for each homogeneous component of `x`.
pub fn preserves_form<S: Scalar>(pyr: &DynkinPyramid, gram: &[S], x: &[S]) -> bool {
    let d = pyr.dim_v();
    let m = pyr.m();
    for px in [Parity::Even, Parity::Odd] {
        let comp: Vec<S> = x
            .iter()
            .enumerate()
            .map(|(t, v)| if unit_parity(m, t / d, t % d) == px { v.clone() } else { S::zero() })
            .collect();
        for u in 0..d {
            let flips = Parity::sign_flips(px, pyr.v_parity(u));
            for w in 0..d {
                let mut acc = S::zero();
                for r in 0..d {
                    // ⟨xu, w⟩ = Σ_r x[r][u] G[r][w]
                    acc.add_mul_assign(&comp[r * d + u], &gram[r * d + w]);
                    // ⟨u, xw⟩ = Σ_r G[u][r] x[r][w]
                    let t = gram[u * d + r].mul_ref(&comp[r * d + w]);
                    acc = if flips { acc.sub_ref(&t) } else { acc.add_ref(&t) };
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// `osp` preserving the form of `partition`, built as the span of
/// `R_{a,b}(x) = a⟨b, x⟩ − (−1)^{|a||b|} b⟨a, x⟩`.
pub fn build_osp_for<S: Scalar>(partition: &SuperPartition) -> Result<MatrixAlgebra<S>> {
    let form = OspForm::new(partition)?;
    let pyr = DynkinPyramid::new(partition);
    let gram: Vec<S> = form.gram(&pyr);
    let d = pyr.dim_v();
    let (m, n2) = (partition.m(), partition.n());
    let mut span = Subspace::zero(d * d);
    for a in 0..d {
        for b in a..d {
            let flips = Parity::sign_flips(pyr.v_parity(a), pyr.v_parity(b));
            let mut r = vec![S::zero(); d * d];
            for c in 0..d {
                // R(v_c) = a⟨b, c⟩ ∓ b⟨a, c⟩
                r[a * d + c] = r[a * d + c].add_ref(&gram[b * d + c]);
                let t = &gram[a * d + c];
                r[b * d + c] = if flips { r[b * d + c].add_ref(t) } else { r[b * d + c].sub_ref(t) };
            }
            span.insert(&r)?;
        }
    }
    let n = n2 / 2;
    let expected = m * m.saturating_sub(1) / 2 + n * (2 * n + 1) + 2 * m * n;
    if span.dim() != expected {
        return Err(Error::Construction(format!("osp({m}|{n2}) has dimension {}, expected {expected}", span.dim())));
    }
    for b in span.basis() {
        if !preserves_form(&pyr, &gram, b) {
            return Err(Error::Construction(format!("osp({m}|{n2}) basis vector fails form invariance")));
        }
    }
    let mut alg = MatrixAlgebra::from_span(MatrixFamily::Osp, format!("osp({m}|{n2})"), m, n2, span)?;
    alg.form = Some(form);
    Ok(alg)
}

/// The subspaces of `g^e` used to describe `[g^e, g^e]` in `osp`.
#[derive(Debug, Clone)]
pub struct OspDecomposition<S> {
    /// `𝔑 = Span(H)`.
    pub frak_n: Subspace<S>,
    pub frak_n0: Subspace<S>,
    pub frak_n1: Subspace<S>,
    pub n1: Subspace<S>,
    pub n2: Subspace<S>,
    pub n2_minus: Subspace<S>,
    pub n2_plus: Subspace<S>,
    /// Number of listed spanning elements `|H| + |N₍₁₎| + |N₍₂₎|`.
    pub listed: usize,
}

/// Which `N₍₂₎` triples `(i, i+1, λ_{i+1}−1)` form `N₍₂₎⁻`.
pub fn n2_minus_indices(form: &OspForm) -> Vec<usize> {
    let p = &form.partition;
    let r = p.len();
    let size = |t: isize| -> usize {
        if t < 0 {
            usize::MAX
        } else if t as usize >= r {
            0
        } else {
            p.size(t as usize)
        }
    };
    (0..r.saturating_sub(1))
        .filter(|&i| {
            let ii = i as isize;
            form.star(i) == i
                && form.star(i + 1) == i + 1
                && size(ii - 1) > size(ii)
                && size(ii) >= size(ii + 1)
                && size(ii + 1) > size(ii + 2)
        })
        .collect()
}

/// `ξ_i^{j,λ_j−1−k} + ε ξ_{j*}^{i*,λ_i−1−k}` as a matrix, with `ε` supplied.
pub fn combination_matrix<S: Scalar>(form: &OspForm, pyr: &DynkinPyramid, i: usize, j: usize, k: usize, eps: i64) -> Vec<S> {
    let p = &form.partition;
    let (li, lj) = (p.size(i), p.size(j));
    let a: Vec<S> = pyr.xi_matrix(i, j, lj - 1 - k);
    let b: Vec<S> = pyr.xi_matrix(form.star(j), form.star(i), li - 1 - k);
    let e = S::from_i64(eps);
    a.iter().zip(&b).map(|(x, y)| x.add_ref(&e.mul_ref(y))).collect()
}

/// Builds every piece of the decomposition inside `alg`.
///
/// Each spanning element is pushed through [`MatrixAlgebra::to_algebra`], so
/// an element outside `osp` is reported as an error.
pub fn osp_decomposition<S: Scalar>(alg: &MatrixAlgebra<S>) -> Result<OspDecomposition<S>> {
    let form = alg.form().ok_or_else(|| Error::InvalidAlgebra(format!("{} has no invariant form", alg.algebra().name())))?;
    let p = form.partition().clone();
    let pyr = DynkinPyramid::new(&p);
    let r = p.len();
    let dim = alg.algebra().dim();
    let to = |mat: Vec<S>| alg.to_algebra(&mat);
    let add = |a: &Vec<S>, b: &Vec<S>, s: i64| -> Vec<S> {
        let s = S::from_i64(s);
        a.iter().zip(b).map(|(x, y)| x.add_ref(&s.mul_ref(y))).collect()
    };
    let mut frak_n = Subspace::zero(dim);
    let mut frak_n0 = Subspace::zero(dim);
    let mut frak_n1 = Subspace::zero(dim);
    let mut n1 = Subspace::zero(dim);
    let mut n2 = Subspace::zero(dim);
    let mut n2_minus = Subspace::zero(dim);
    let mut n2_plus = Subspace::zero(dim);
    let mut listed = 0;
    let minus = n2_minus_indices(form);
    for i in 0..r {
        let l = p.size(i);
        let is = form.star(i);
        for k in 0..l {
            let pw = l - 1 - k;
            let even_gap = (l - k) % 2 == 0;
            let xi_ii: Vec<S> = pyr.xi_matrix(i, i, pw);
            if is == i {
                if even_gap {
                    let v = to(xi_ii)?;
                    frak_n.insert(&v)?;
                    frak_n0.insert(&v)?;
                    listed += 1;
                }
            } else {
                let xi_ss: Vec<S> = pyr.xi_matrix(is, is, pw);
                let eps = form.epsilon(i, i, k)?;
                frak_n.insert(&to(add(&xi_ii, &xi_ss, eps))?)?;
                listed += 1;
                if even_gap {
                    frak_n0.insert(&to(add(&xi_ii, &xi_ss, 1))?)?;
                } else {
                    frak_n1.insert(&to(add(&xi_ii, &xi_ss, -1))?)?;
                    n1.insert(&to(pyr.xi_matrix(i, is, pw))?)?;
                    listed += 1;
                }
            }
        }
        for j in (i + 1)..r {
            if j == is {
                continue;
            }
            let lj = p.size(j);
            for k in 0..l.min(lj) {
                let eps = form.epsilon(i, j, k)?;
                let v = to(combination_matrix(form, &pyr, i, j, k, eps))?;
                n2.insert(&v)?;
                listed += 1;
                if j == i + 1 && k == lj - 1 && minus.contains(&i) {
                    n2_minus.insert(&v)?;
                } else {
                    n2_plus.insert(&v)?;
                }
            }
        }
    }
    Ok(OspDecomposition { frak_n, frak_n0, frak_n1, n1, n2, n2_minus, n2_plus, listed })
}
