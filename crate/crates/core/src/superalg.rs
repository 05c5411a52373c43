//! Lie superalgebras presented by a parity-tagged basis and structure constants.
//!
//! A [`SuperAlgebra`] stores `[b_i, b_j]` for `i ≤ j` as sparse coordinate
//! vectors; the remaining brackets follow from super skew-symmetry
//! `[b_j, b_i] = −(−1)^{|i||j|} [b_i, b_j]`. Elements are dense coordinate
//! vectors of length `dim`. All queries return [`Subspace`]s of the
//! coordinate space.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::linalg::{is_zero_vec, unit, Matrix, Subspace};

/// ℤ/2 grading of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "0")]
    Even,
    #[serde(rename = "1")]
    Odd,
}

impl Parity {
    /// Parity of the sum of degrees.
    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True for odd elements.
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(−1)^{|a||b|}` is negative exactly when both are odd.
    pub fn sign_flips(a: Parity, b: Parity) -> bool {
        a.is_odd() && b.is_odd()
    }

    /// `0` or `1`.
    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Sparse coordinate vector: `(index, nonzero coefficient)` pairs.
pub type SparseVec<S> = Vec<(usize, S)>;

fn sparse<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Direct sum of ad-h eigenspaces, keyed by integer eigenvalue.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedDecomposition<S> {
    ambient: usize,
    pieces: BTreeMap<i64, Subspace<S>>,
}

impl<S: Scalar> GradedDecomposition<S> {
    /// Nonzero pieces by grade.
    pub fn pieces(&self) -> &BTreeMap<i64, Subspace<S>> {
        &self.pieces
    }

    /// The piece of grade `j` (zero if absent).
    pub fn piece(&self, j: i64) -> Subspace<S> {
        self.pieces.get(&j).cloned().unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    /// Dimension of every nonzero piece.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.pieces.iter().map(|(j, s)| (*j, s.dim())).collect()
    }

    /// Largest grade carrying a nonzero piece.
    pub fn max_grade(&self) -> Option<i64> {
        self.pieces.keys().next_back().copied()
    }

    /// Smallest grade carrying a nonzero piece.
    pub fn min_grade(&self) -> Option<i64> {
        self.pieces.keys().next().copied()
    }

    /// Sum of the pieces of grade `≥ j`.
    pub fn at_least(&self, j: i64) -> Subspace<S> {
        let mut s = Subspace::zero(self.ambient);
        for (_, p) in self.pieces.range(j..) {
            s = s.sum(p).expect("pieces share the ambient space");
        }
        s
    }
}

/// The natural projection onto a quotient algebra.
#[derive(Clone)]
pub struct Projection<S> {
    ideal: Subspace<S>,
    keep: Vec<usize>,
}

impl<S: Scalar> Projection<S> {
    /// Image of an element of the parent algebra.
    pub fn project(&self, v: &[S]) -> Result<Vec<S>> {
        let r = self.ideal.reduce(v)?;
        Ok(self.keep.iter().map(|&c| r[c].clone()).collect())
    }

    /// The representative of a quotient element on the complement basis.
    pub fn lift(&self, w: &[S]) -> Result<Vec<S>> {
        if w.len() != self.keep.len() {
            return Err(Error::DimensionMismatch { expected: self.keep.len(), found: w.len() });
        }
        let mut v = vec![S::zero(); self.ideal.ambient_dim()];
        for (&c, x) in self.keep.iter().zip(w) {
            v[c] = x.clone();
        }
        Ok(v)
    }

    /// Image of a subspace.
    pub fn project_subspace(&self, s: &Subspace<S>) -> Result<Subspace<S>> {
        let mut out = Subspace::zero(self.keep.len());
        for r in s.basis() {
            out.insert(&self.project(r)?)?;
        }
        Ok(out)
    }

    /// The ideal being factored out.
    pub fn ideal(&self) -> &Subspace<S> {
        &self.ideal
    }

    /// Parent indices of the complement basis.
    pub fn kept_indices(&self) -> &[usize] {
        &self.keep
    }
}

/// A finite-dimensional Lie superalgebra over the field `S`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperAlgebra<S> {
    name: String,
    names: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec<S>>,
}

fn tri(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j);
    i * (2 * dim - i + 1) / 2 + (j - i)
}

impl<S: Scalar> SuperAlgebra<S> {
    /// Builds an algebra from a basis-bracket callback, evaluated for `i ≤ j`.
    ///
    /// Checks parity compatibility of every bracket and `[b, b] = 0` for even `b`.
    pub fn new<F>(name: impl Into<String>, names: Vec<String>, parity: Vec<Parity>, mut bracket: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<Vec<S>>,
    {
        let dim = parity.len();
        if names.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: names.len() });
        }
        let mut table = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in i..dim {
                let v = bracket(i, j)?;
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                let sv = sparse(&v);
                let p = parity[i].add(parity[j]);
                if let Some((k, _)) = sv.iter().find(|(k, _)| parity[*k] != p) {
                    return Err(Error::Construction(format!(
                        "[{}, {}] has a component on {} of the wrong parity",
                        names[i], names[j], names[*k]
                    )));
                }
                if i == j && !parity[i].is_odd() && !sv.is_empty() {
                    return Err(Error::Construction(format!("[{0}, {0}] must vanish for even {0}", names[i])));
                }
                table.push(sv);
            }
        }
        Ok(SuperAlgebra { name: name.into(), names, parity, table })
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Renames the algebra.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Basis element names.
    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Parity of each basis element.
    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    /// Parity of basis element `i`.
    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    /// Field the structure constants live in.
    pub fn field(&self) -> FieldTag {
        S::field()
    }

    /// Index of the basis element called `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The `i`-th basis vector.
    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        unit(self.dim(), i)
    }

    /// The zero element.
    pub fn zero_vector(&self) -> Vec<S> {
        vec![S::zero(); self.dim()]
    }

    /// Parity of `v` if it is homogeneous and nonzero.
    pub fn parity_of(&self, v: &[S]) -> Option<Parity> {
        let mut p = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match p {
                None => p = Some(self.parity[i]),
                Some(q) if q != self.parity[i] => return None,
                _ => {}
            }
        }
        p
    }

    /// `[b_i, b_j]` as a sign flag (true means negate) and a sparse vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> (bool, &SparseVec<S>) {
        let d = self.dim();
        if i <= j {
            (false, &self.table[tri(d, i, j)])
        } else {
            let flips = Parity::sign_flips(self.parity[i], self.parity[j]);
            (!flips, &self.table[tri(d, j, i)])
        }
    }

    /// `[b_i, b_j]` as a dense vector.
    pub fn basis_bracket_dense(&self, i: usize, j: usize) -> Vec<S> {
        let mut out = self.zero_vector();
        let (neg, sv) = self.basis_bracket(i, j);
        for (k, c) in sv {
            out[*k] = if neg { c.neg_ref() } else { c.clone() };
        }
        out
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    /// The bracket `[x, y]`, extended bilinearly from the structure constants.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let ny: Vec<(usize, &S)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &ny {
                let (neg, sv) = self.basis_bracket(i, j);
                if sv.is_empty() {
                    continue;
                }
                let mut ab = a.mul_ref(b);
                if neg {
                    ab = ab.neg_ref();
                }
                for (k, c) in sv {
                    out[*k].add_mul_assign(&ab, c);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x` in the basis (column `j` is `[x, b_j]`).
    pub fn ad_matrix(&self, x: &[S]) -> Result<Matrix<S>> {
        self.check_len(x)?;
        let d = self.dim();
        let mut m = Matrix::<S>::zeros(d, d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                let (neg, sv) = self.basis_bracket(i, j);
                for (k, c) in sv {
                    let mut v = a.mul_ref(c);
                    if neg {
                        v = v.neg_ref();
                    }
                    let cur = m.get(*k, j).add_ref(&v);
                    m.set(*k, j, cur);
                }
            }
        }
        Ok(m)
    }

    /// True when `ad x` is a nilpotent operator.
    pub fn is_ad_nilpotent(&self, x: &[S]) -> Result<bool> {
        let m = self.ad_matrix(x)?;
        let mut p = m.clone();
        for _ in 0..self.dim() {
            if p.to_rows().iter().all(|r| is_zero_vec(r)) {
                return Ok(true);
            }
            p = p.mul(&m)?;
        }
        Ok(p.to_rows().iter().all(|r| is_zero_vec(r)))
    }

    /// The full coordinate space as a subspace.
    pub fn whole(&self) -> Subspace<S> {
        Subspace::full(self.dim())
    }

    /// The span of `vectors` in this algebra.
    pub fn span(&self, vectors: &[Vec<S>]) -> Result<Subspace<S>> {
        Subspace::span(self.dim(), vectors)
    }

    /// Centralizer `{x : [e, x] = 0}`, the kernel of `ad e`.
    pub fn centralizer(&self, e: &[S]) -> Result<Subspace<S>> {
        Ok(self.ad_matrix(e)?.kernel())
    }

    /// `{s ∈ S : [x, s] = 0}`.
    pub fn centralizer_within(&self, s: &Subspace<S>, x: &[S]) -> Result<Subspace<S>> {
        let cols: Vec<Vec<S>> = s.basis().iter().map(|b| self.bracket(x, b)).collect::<Result<_>>()?;
        let k = Matrix::from_columns(self.dim(), &cols)?.kernel();
        let mut out = Subspace::zero(self.dim());
        for c in k.basis() {
            out.insert(&s.combine(c)?)?;
        }
        Ok(out)
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}`.
    pub fn bracket_span(&self, a: &Subspace<S>, b: &Subspace<S>) -> Result<Subspace<S>> {
        let mut out = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                out.insert(&self.bracket(x, y)?)?;
                if out.dim() == self.dim() {
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    /// `span{[u, v] : u, v ∈ basis(S)}`.
    ///
    /// Loops over unordered basis pairs and stops once the span fills the
    /// whole algebra.
    pub fn derived_subspace(&self, s: &Subspace<S>) -> Result<Subspace<S>> {
        self.derived_with_cap(s, self.dim())
    }

    /// `[S, S]` for a subalgebra `S`, stopping once it fills `S`.
    ///
    /// The early exit is sound only when `S` is bracket-closed (so `[S,S] ⊆ S`);
    /// centralizers are.
    pub fn derived_of_subalgebra(&self, s: &Subspace<S>) -> Result<Subspace<S>> {
        self.derived_with_cap(s, s.dim())
    }

    fn derived_with_cap(&self, s: &Subspace<S>, cap: usize) -> Result<Subspace<S>> {
        let b = s.basis();
        let mut out = Subspace::zero(self.dim());
        for i in 0..b.len() {
            for j in i..b.len() {
                let v = self.bracket(&b[i], &b[j])?;
                if !is_zero_vec(&v) {
                    out.insert(&v)?;
                    if out.dim() >= cap {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The smallest subalgebra containing `S`.
    ///
    /// Maintains a list of independent generators; every newly accepted
    /// vector is bracketed against all accepted ones until nothing new appears.
    pub fn generated_subalgebra(&self, s: &Subspace<S>) -> Result<Subspace<S>> {
        let mut span = Subspace::zero(self.dim());
        let mut accepted: Vec<Vec<S>> = Vec::new();
        let mut queue: Vec<Vec<S>> = s.basis().to_vec();
        while let Some(v) = queue.pop() {
            if !span.insert(&v)? {
                continue;
            }
            for w in accepted.iter() {
                let c = self.bracket(&v, w)?;
                if !is_zero_vec(&c) && !span.contains(&c)? {
                    queue.push(c);
                }
            }
            let c = self.bracket(&v, &v)?;
            if !is_zero_vec(&c) && !span.contains(&c)? {
                queue.push(c);
            }
            accepted.push(v);
        }
        Ok(span)
    }

    /// A pair of basis vectors of `S` whose bracket leaves `S`, if any.
    pub fn closure_witness(&self, s: &Subspace<S>) -> Result<Option<(usize, usize)>> {
        let b = s.basis();
        for i in 0..b.len() {
            for j in i..b.len() {
                if !s.contains(&self.bracket(&b[i], &b[j])?)? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// The center `{x ∈ S : [x, S] = 0}` of a subalgebra `S`.
    pub fn center_of(&self, s: &Subspace<S>) -> Result<Subspace<S>> {
        let b = s.basis();
        let k = b.len();
        let d = self.dim();
        // rows indexed by (j, coordinate), columns by the basis element i
        let mut m = Matrix::<S>::zeros(k * d, k);
        for i in 0..k {
            for j in i..k {
                let c = self.bracket(&b[i], &b[j])?;
                if !s.contains(&c)? {
                    return Err(Error::NotClosed { witness: format!("[{}, {}]", self.format(&b[i]), self.format(&b[j])) });
                }
                // [b_j, b_i] = ±[b_i, b_j]
                let flip = match (self.parity_of(&b[i]), self.parity_of(&b[j])) {
                    (Some(p), Some(q)) => !Parity::sign_flips(p, q),
                    _ => true,
                };
                for (t, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    m.set(j * d + t, i, x.clone());
                    if i != j {
                        m.set(i * d + t, j, if flip { x.neg_ref() } else { x.clone() });
                    }
                }
                if i != j && (self.parity_of(&b[i]).is_none() || self.parity_of(&b[j]).is_none()) {
                    let c2 = self.bracket(&b[j], &b[i])?;
                    for (t, x) in c2.iter().enumerate() {
                        m.set(i * d + t, j, x.clone());
                    }
                }
            }
        }
        let ker = m.kernel();
        let mut out = Subspace::zero(d);
        for c in ker.basis() {
            out.insert(&s.combine(c)?)?;
        }
        Ok(out)
    }

    /// Splits `S` into eigenspaces of `ad h`.
    ///
    /// Computes `ad h` on `S` in its canonical coordinates, then the kernel of
    /// `ad h − j` for `j = 0, 1, −1, 2, −2, …` until the pieces exhaust `S`.
    pub fn grade_decompose(&self, s: &Subspace<S>, h: &[S]) -> Result<GradedDecomposition<S>> {
        let k = s.dim();
        let mut cols = Vec::with_capacity(k);
        for b in s.basis() {
            let img = self.bracket(h, b)?;
            match s.coords(&img)? {
                Some(c) => cols.push(c),
                None => return Err(Error::NotStable { witness: self.format(b) }),
            }
        }
        let m = Matrix::from_columns(k, &cols)?;
        let mut pieces = BTreeMap::new();
        let mut found = 0;
        let bound = 2 * self.dim() as i64 + 2;
        let mut j: i64 = 0;
        while found < k {
            if j.abs() > bound {
                return Err(Error::NotSemisimple);
            }
            let mut shifted = m.clone();
            for i in 0..k {
                let v = shifted.get(i, i).sub_ref(&S::from_i64(j));
                shifted.set(i, i, v);
            }
            let ker = shifted.kernel();
            if !ker.is_zero() {
                found += ker.dim();
                let mut piece = Subspace::zero(self.dim());
                for c in ker.basis() {
                    piece.insert(&s.combine(c)?)?;
                }
                pieces.insert(j, piece);
            }
            j = if j > 0 { -j } else { -j + 1 };
        }
        if found != k {
            return Err(Error::NotSemisimple);
        }
        Ok(GradedDecomposition { ambient: self.dim(), pieces })
    }

    /// Quotient by an ideal, on the complement basis of non-pivot indices.
    pub fn quotient(&self, ideal: &Subspace<S>, name: impl Into<String>) -> Result<(SuperAlgebra<S>, Projection<S>)> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: ideal.ambient_dim() });
        }
        for u in ideal.basis() {
            for i in 0..self.dim() {
                let c = self.bracket(&self.basis_vector(i), u)?;
                if !ideal.contains(&c)? {
                    return Err(Error::NotIdeal { witness: format!("[{}, {}]", self.names[i], self.format(u)) });
                }
            }
        }
        let pivots = ideal.pivots();
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !pivots.contains(c)).collect();
        let proj = Projection { ideal: ideal.clone(), keep: keep.clone() };
        let names = keep.iter().map(|&c| self.names[c].clone()).collect();
        let parity = keep.iter().map(|&c| self.parity[c]).collect();
        let q = SuperAlgebra::new(name, names, parity, |a, b| proj.project(&self.basis_bracket_dense(keep[a], keep[b])))?;
        Ok((q, proj))
    }

    /// The super Jacobi defect on basis triples `i ≤ j ≤ k`.
    ///
    /// Returns every triple where
    /// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]] ≠ 0`.
    pub fn check_super_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    if !self.jacobi_defect(i, j, k).iter().all(|x| x.is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let p = &self.parity;
        let mut out = self.zero_vector();
        let mut term = |a: usize, b: usize, c: usize, neg: bool| {
            let (n1, inner) = self.basis_bracket(b, c);
            for (m, coef) in inner {
                let (n2, outer) = self.basis_bracket(a, *m);
                for (t, x) in outer {
                    let mut v = coef.mul_ref(x);
                    if n1 ^ n2 ^ neg {
                        v = v.neg_ref();
                    }
                    out[*t] = out[*t].add_ref(&v);
                }
            }
        };
        term(i, j, k, Parity::sign_flips(p[i], p[k]));
        term(j, k, i, Parity::sign_flips(p[j], p[i]));
        term(k, i, j, Parity::sign_flips(p[k], p[j]));
        out
    }

    /// Human-readable rendering of an element as a linear combination.
    pub fn format(&self, v: &[S]) -> String {
        format_combination(&self.names, v)
    }

    /// Serializable description of the algebra.
    pub fn to_document(&self) -> AlgebraDocument {
        let d = self.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i..d {
                let sv = &self.table[tri(d, i, j)];
                if !sv.is_empty() {
                    brackets.push(BracketEntry {
                        i,
                        j,
                        value: sv.iter().map(|(k, c)| (*k, c.to_string())).collect(),
                    });
                }
            }
        }
        AlgebraDocument {
            name: self.name.clone(),
            field: S::field(),
            basis: self.names.iter().zip(&self.parity).map(|(n, p)| BasisEntry { name: n.clone(), parity: *p }).collect(),
            brackets,
        }
    }

    /// JSON text of [`Self::to_document`].
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    /// Rebuilds an algebra from a document, revalidating parities.
    pub fn from_document(doc: &AlgebraDocument) -> Result<Self> {
        if doc.field != S::field() {
            return Err(Error::Construction(format!("document is over {}, expected {}", doc.field, S::field())));
        }
        let d = doc.basis.len();
        let mut dense: BTreeMap<(usize, usize), Vec<S>> = BTreeMap::new();
        for e in &doc.brackets {
            if e.i > e.j || e.j >= d {
                return Err(Error::Construction(format!("bad bracket index ({}, {})", e.i, e.j)));
            }
            let mut v = vec![S::zero(); d];
            for (k, c) in &e.value {
                if *k >= d {
                    return Err(Error::Construction(format!("bad coordinate index {k}")));
                }
                v[*k] = S::parse_text(c)?;
            }
            dense.insert((e.i, e.j), v);
        }
        let names = doc.basis.iter().map(|b| b.name.clone()).collect();
        let parity = doc.basis.iter().map(|b| b.parity).collect();
        SuperAlgebra::new(doc.name.clone(), names, parity, |i, j| Ok(dense.remove(&(i, j)).unwrap_or_else(|| vec![S::zero(); d])))
    }

    /// Parses JSON produced by [`Self::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDocument =
            serde_json::from_str(text).map_err(|e| Error::Construction(format!("invalid algebra JSON: {e}")))?;
        Self::from_document(&doc)
    }

    /// Overwrites one stored structure constant (used to build negative controls).
    pub fn with_perturbed_constant(&self, i: usize, j: usize, k: usize, delta: S) -> Self {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let mut out = self.clone();
        let d = self.dim();
        let mut dense = vec![S::zero(); d];
        for (t, c) in &out.table[tri(d, i, j)] {
            dense[*t] = c.clone();
        }
        dense[k] = dense[k].add_ref(&delta);
        out.table[tri(d, i, j)] = sparse(&dense);
        out
    }
}

impl<S: Scalar> fmt::Debug for GradedDecomposition<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedDecomposition({:?})", self.dims())
    }
}

impl<S: Scalar> fmt::Debug for Projection<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Projection(keep {:?})", self.keep)
    }
}

impl<S: Scalar> fmt::Debug for SuperAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({}, dim {} over {})", self.name, self.dim(), S::field())
    }
}

/// Renders `Σ v_i name_i` with unit coefficients elided.
pub fn format_combination<S: Scalar>(names: &[String], v: &[S]) -> String {
    let mut out = String::new();
    for (x, n) in v.iter().zip(names) {
        if x.is_zero() {
            continue;
        }
        let s = x.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
            _ => (false, s),
        };
        let needs_parens = body.contains(' ');
        let coef = if body == "1" {
            String::new()
        } else if needs_parens {
            format!("({body})*")
        } else {
            format!("{body}*")
        };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coef);
        if n.contains(' ') {
            out.push_str(&format!("({n})"));
        } else {
            out.push_str(n);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// One basis element in an [`AlgebraDocument`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub parity: Parity,
}

/// One nonzero bracket `[b_i, b_j]`, `i ≤ j`, in an [`AlgebraDocument`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<(usize, String)>,
}

/// Serialized form of a [`SuperAlgebra`]; scalars use the field text grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub field: FieldTag,
    pub basis: Vec<BasisEntry>,
    pub brackets: Vec<BracketEntry>,
}

/// The Lie algebra sl(2) on the basis `E, H, F`.
pub fn sl2<S: Scalar>() -> SuperAlgebra<S> {
    let names = vec!["E".to_string(), "H".to_string(), "F".to_string()];
    let z = |v: [i64; 3]| v.iter().map(|&x| S::from_i64(x)).collect::<Vec<S>>();
    SuperAlgebra::new("sl(2)", names, vec![Parity::Even; 3], |i, j| {
        Ok(match (i, j) {
            (0, 1) => z([-2, 0, 0]),
            (0, 2) => z([0, 1, 0]),
            (1, 2) => z([0, 0, -2]),
            _ => z([0, 0, 0]),
        })
    })
    .expect("sl(2) table is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn tri_indexing_is_dense() {
        let d = 5;
        let mut seen = Vec::new();
        for i in 0..d {
            for j in i..d {
                seen.push(tri(d, i, j));
            }
        }
        assert_eq!(seen, (0..d * (d + 1) / 2).collect::<Vec<_>>());
    }

    #[test]
    fn sl2_relations() {
        let g = sl2::<Rational>();
        let e = g.basis_vector(0);
        let f = g.basis_vector(2);
        assert_eq!(g.bracket(&e, &f).unwrap(), g.basis_vector(1));
        assert!(g.check_super_jacobi().is_empty());
        let all = g.generated_subalgebra(&g.span(&[e, f]).unwrap()).unwrap();
        assert_eq!(all.dim(), 3);
    }

    #[test]
    fn json_round_trip() {
        let g = sl2::<Rational>();
        let back = SuperAlgebra::<Rational>::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }
}
