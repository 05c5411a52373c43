//! Recovers the odd–odd bracket `S²(g₁̄) → g₀̄` from `g₀̄`-equivariance and a
//! few prescribed values, then assembles the full superalgebra.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::superalg::{Parity, SuperAlgebra};

/// A prescribed value `[u, v] = value` with `u, v ∈ g₁̄` and `value ∈ g₀̄`.
#[derive(Clone, Debug)]
pub struct Anchor<S> {
    pub u: Vec<S>,
    pub v: Vec<S>,
    pub value: Vec<S>,
}

/// Input of the equivariant solver.
#[derive(Clone)]
pub struct EquivariantBracketProblem<S> {
    /// The even part as a Lie algebra.
    pub even: SuperAlgebra<S>,
    /// Names of the odd basis vectors.
    pub odd_names: Vec<String>,
    /// One matrix per even basis element; column `j` is `x · u_j`.
    pub action: Vec<Matrix<S>>,
    pub anchors: Vec<Anchor<S>>,
}

/// The solved symmetric bracket on the odd part.
#[derive(Clone, Debug)]
pub struct OddBracket<S> {
    odd_dim: usize,
    values: Vec<Vec<S>>,
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * (2 * n - a + 1) / 2 + (b - a)
}

impl<S: Scalar> OddBracket<S> {
    /// `[u_a, u_b]` in even coordinates.
    pub fn get(&self, a: usize, b: usize) -> &[S] {
        &self.values[pair_index(self.odd_dim, a, b)]
    }
}

impl<S: Scalar> EquivariantBracketProblem<S> {
    /// Dimension of `g₀̄`.
    pub fn even_dim(&self) -> usize {
        self.even.dim()
    }

    /// Dimension of `g₁̄`.
    pub fn odd_dim(&self) -> usize {
        self.odd_names.len()
    }

    /// Checks `action([x, y]) = [action(x), action(y)]` on basis pairs.
    pub fn check_action(&self) -> Result<()> {
        let n0 = self.even_dim();
        if self.action.len() != n0 {
            return Err(Error::DimensionMismatch { expected: n0, found: self.action.len() });
        }
        for i in 0..n0 {
            for j in i + 1..n0 {
                let c = self.even.basis_bracket_dense(i, j);
                let lhs = combine(&self.action, &c, self.odd_dim());
                let ab = self.action[i].mul(&self.action[j])?;
                let ba = self.action[j].mul(&self.action[i])?;
                for r in 0..self.odd_dim() {
                    for s in 0..self.odd_dim() {
                        if lhs.get(r, s).clone() != ab.get(r, s).sub_ref(ba.get(r, s)) {
                            return Err(Error::Solver(format!(
                                "action is not a representation on [{}, {}]",
                                self.even.basis_names()[i],
                                self.even.basis_names()[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Even basis elements acting diagonally on both parts, with the
    /// eigenvalues of every even and odd basis vector.
    fn weights(&self) -> (Vec<Vec<S>>, Vec<Vec<S>>) {
        let n0 = self.even_dim();
        let n1 = self.odd_dim();
        let toral: Vec<usize> = (0..n0)
            .filter(|&t| {
                (0..n0).all(|k| {
                    let c = self.even.basis_bracket_dense(t, k);
                    c.iter().enumerate().all(|(m, x)| m == k || x.is_zero())
                }) && (0..n1).all(|r| (0..n1).all(|s| r == s || self.action[t].get(r, s).is_zero()))
            })
            .collect();
        let even = (0..n0)
            .map(|k| toral.iter().map(|&t| self.even.basis_bracket_dense(t, k)[k].clone()).collect())
            .collect();
        let odd = (0..n1).map(|a| toral.iter().map(|&t| self.action[t].get(a, a).clone()).collect()).collect();
        (even, odd)
    }
}

fn combine<S: Scalar>(mats: &[Matrix<S>], c: &[S], n: usize) -> Matrix<S> {
    let mut out = Matrix::<S>::zeros(n, n);
    for (m, x) in mats.iter().zip(c) {
        if x.is_zero() {
            continue;
        }
        for r in 0..n {
            for s in 0..n {
                let v = m.get(r, s);
                if !v.is_zero() {
                    let mut cur = out.get(r, s).clone();
                    cur.add_mul_assign(x, v);
                    out.set(r, s, cur);
                }
            }
        }
    }
    out
}

/// Sparse row echelon form: every stored row has its pivot as least variable
/// with coefficient one.
struct Echelon<S> {
    rows: BTreeMap<usize, (BTreeMap<usize, S>, S)>,
}

impl<S: Scalar> Echelon<S> {
    fn insert(&mut self, mut row: BTreeMap<usize, S>, mut rhs: S) -> Result<()> {
        row.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        loop {
            let next = row.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let c = row.remove(&p).expect("present");
            let (prow, prhs) = &self.rows[&p];
            for (k, v) in prow.iter().filter(|(k, _)| **k != p) {
                let e = row.entry(*k).or_insert_with(S::zero);
                e.sub_mul_assign(&c, v);
                if e.is_zero() {
                    row.remove(k);
                }
            }
            rhs.sub_mul_assign(&c, prhs);
            cursor = p + 1;
        }
        let Some((&p, lead)) = row.iter().next() else {
            if rhs.is_zero() {
                return Ok(());
            }
            return Err(Error::Solver("anchors are inconsistent with equivariance".into()));
        };
        let inv = lead.try_inv()?;
        let row = row.into_iter().map(|(k, v)| (k, v.mul_ref(&inv))).collect();
        self.rows.insert(p, (row, rhs.mul_ref(&inv)));
        Ok(())
    }

    /// Particular solution (free variables zero) and one kernel vector per
    /// free variable.
    fn affine_solution(&self, nvars: usize) -> (Vec<S>, Vec<(usize, Vec<S>)>) {
        let back = |free: Option<usize>| {
            let mut x = vec![S::zero(); nvars];
            if let Some(f) = free {
                x[f] = S::one();
            }
            for (&p, (row, rhs)) in self.rows.iter().rev() {
                let mut v = if free.is_some() { S::zero() } else { rhs.clone() };
                for (k, c) in row.iter().filter(|(k, _)| **k != p) {
                    v.sub_mul_assign(c, &x[*k]);
                }
                x[p] = v;
            }
            x
        };
        let kernel = (0..nvars).filter(|k| !self.rows.contains_key(k)).map(|f| (f, back(Some(f)))).collect();
        (back(None), kernel)
    }
}

/// Solves for the unique symmetric, `g₀̄`-equivariant odd bracket matching
/// every anchor. Parameters the anchors leave free are fixed by the super
/// Jacobi identity on odd triples, which is linear in them.
///
/// Unknowns are restricted to weight-compatible components for the even
/// basis elements acting diagonally; the equivariance equations themselves
/// are imposed for every even basis element.
pub fn solve_odd_bracket<S: Scalar>(p: &EquivariantBracketProblem<S>) -> Result<OddBracket<S>> {
    p.check_action()?;
    let n0 = p.even_dim();
    let n1 = p.odd_dim();
    let (w_even, w_odd) = p.weights();
    let mut vars: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n1 * (n1 + 1) / 2];
    let mut nvars = 0;
    for a in 0..n1 {
        for b in a..n1 {
            let target: Vec<S> = w_odd[a].iter().zip(&w_odd[b]).map(|(x, y)| x.add_ref(y)).collect();
            for k in 0..n0 {
                if w_even[k] == target {
                    vars[pair_index(n1, a, b)].push((k, nvars));
                    nvars += 1;
                }
            }
        }
    }
    let var = |a: usize, b: usize, k: usize| vars[pair_index(n1, a, b)].iter().find(|(kk, _)| *kk == k).map(|x| x.1);
    let mut ech = Echelon { rows: BTreeMap::new() };
    let ad: Vec<Vec<Vec<S>>> = (0..n0).map(|x| (0..n0).map(|k| p.even.basis_bracket_dense(x, k)).collect()).collect();
    for x in 0..n0 {
        let act = &p.action[x];
        let nonzero_in_col: Vec<Vec<(usize, S)>> = (0..n1)
            .map(|c| (0..n1).filter(|&r| !act.get(r, c).is_zero()).map(|r| (r, act.get(r, c).clone())).collect())
            .collect();
        for a in 0..n1 {
            for b in a..n1 {
                let mut eqs: HashMap<usize, BTreeMap<usize, S>> = HashMap::new();
                let mut add = |m: usize, v: usize, c: &S| {
                    let e = eqs.entry(m).or_default().entry(v).or_insert_with(S::zero);
                    *e = e.add_ref(c);
                };
                for &(k, v) in &vars[pair_index(n1, a, b)] {
                    for (m, c) in ad[x][k].iter().enumerate() {
                        if !c.is_zero() {
                            add(m, v, c);
                        }
                    }
                }
                for (first, other) in [(a, b), (b, a)] {
                    for (c, coef) in &nonzero_in_col[first] {
                        for &(k, v) in &vars[pair_index(n1, *c, other)] {
                            add(k, v, &coef.neg_ref());
                        }
                    }
                }
                let mut keys: Vec<usize> = eqs.keys().copied().collect();
                keys.sort_unstable();
                for m in keys {
                    let row = eqs.remove(&m).expect("present");
                    ech.insert(row, S::zero())?;
                }
            }
        }
    }
    for anchor in &p.anchors {
        if anchor.u.len() != n1 || anchor.v.len() != n1 || anchor.value.len() != n0 {
            return Err(Error::DimensionMismatch { expected: n1, found: anchor.u.len() });
        }
        let mut rows: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); n0];
        for (a, ua) in anchor.u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in anchor.v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = ua.mul_ref(vb);
                for &(k, v) in &vars[pair_index(n1, a, b)] {
                    let e = rows[k].entry(v).or_insert_with(S::zero);
                    *e = e.add_ref(&c);
                }
            }
        }
        for (k, row) in rows.into_iter().enumerate() {
            ech.insert(row, anchor.value[k].clone())?;
        }
    }
    let (mut x, kernel) = ech.affine_solution(nvars);
    if !kernel.is_empty() {
        let t = jacobi_parameters(p, &vars, &x, &kernel)?;
        for ((_, n), tf) in kernel.iter().zip(&t) {
            for (xi, ni) in x.iter_mut().zip(n) {
                xi.add_mul_assign(tf, ni);
            }
        }
    }
    let mut values = vec![vec![S::zero(); n0]; n1 * (n1 + 1) / 2];
    for a in 0..n1 {
        for b in a..n1 {
            for k in 0..n0 {
                if let Some(v) = var(a, b, k) {
                    values[pair_index(n1, a, b)][k] = x[v].clone();
                }
            }
        }
    }
    Ok(OddBracket { odd_dim: n1, values })
}

/// Solves `Σ_cyc [u_a, [u_b, u_c]] = 0` for the free parameters `t` of
/// `x + Σ t_f n_f`.
fn jacobi_parameters<S: Scalar>(
    p: &EquivariantBracketProblem<S>,
    vars: &[Vec<(usize, usize)>],
    x: &[S],
    kernel: &[(usize, Vec<S>)],
) -> Result<Vec<S>> {
    let n1 = p.odd_dim();
    let nf = kernel.len();
    // [u_a, [u_b, u_c]] = −action([u_b, u_c]) u_a, component r
    let term = |sol: &[S], a: usize, b: usize, c: usize, out: &mut Vec<S>| {
        for &(k, v) in &vars[pair_index(n1, b, c)] {
            let coef = &sol[v];
            if coef.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.sub_mul_assign(coef, p.action[k].get(r, a));
            }
        }
    };
    let mut ech = Echelon { rows: BTreeMap::new() };
    for a in 0..n1 {
        for b in a..n1 {
            for c in b..n1 {
                let cyclic = |sol: &[S]| {
                    let mut out = vec![S::zero(); n1];
                    term(sol, a, b, c, &mut out);
                    term(sol, b, c, a, &mut out);
                    term(sol, c, a, b, &mut out);
                    out
                };
                let base = cyclic(x);
                let cols: Vec<Vec<S>> = kernel.iter().map(|(_, n)| cyclic(n)).collect();
                for r in 0..n1 {
                    let row: BTreeMap<usize, S> = (0..nf).map(|f| (f, cols[f][r].clone())).collect();
                    ech.insert(row, base[r].neg_ref()).map_err(|_| {
                        Error::Solver("no bracket satisfying the anchors obeys the Jacobi identity".into())
                    })?;
                }
            }
        }
    }
    if ech.rows.len() != nf {
        return Err(Error::Solver(format!(
            "{} free parameters remain after the anchors and the Jacobi identity",
            nf - ech.rows.len()
        )));
    }
    Ok(ech.affine_solution(nf).0)
}

/// The superalgebra `g₀̄ ⊕ g₁̄` with even basis first.
pub fn assemble<S: Scalar>(
    name: &str,
    p: &EquivariantBracketProblem<S>,
    odd: &OddBracket<S>,
) -> Result<SuperAlgebra<S>> {
    let n0 = p.even_dim();
    let n1 = p.odd_dim();
    let mut names: Vec<String> = p.even.basis_names().to_vec();
    names.extend(p.odd_names.iter().cloned());
    let parity: Vec<Parity> = (0..n0 + n1).map(|i| if i < n0 { Parity::Even } else { Parity::Odd }).collect();
    SuperAlgebra::new(name, names, parity, |i, j| {
        let mut out = vec![S::zero(); n0 + n1];
        match (i < n0, j < n0) {
            (true, true) => out[..n0].clone_from_slice(&p.even.basis_bracket_dense(i, j)),
            (true, false) => {
                for r in 0..n1 {
                    out[n0 + r] = p.action[i].get(r, j - n0).clone();
                }
            }
            _ => out[..n0].clone_from_slice(odd.get(i - n0, j - n0)),
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::superalg::sl2;

    fn q(v: i64) -> Rational {
        Rational::integer(v)
    }

    /// osp(1|2): sl(2) acting on `V₂`, normalised by `[v1, v1] = 2E`.
    fn osp12(anchors: Vec<Anchor<Rational>>) -> Result<OddBracket<Rational>> {
        let even = sl2::<Rational>();
        let mats = [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]];
        let action = mats
            .iter()
            .map(|m| Matrix::from_rows(2, m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap())
            .collect();
        let p = EquivariantBracketProblem { even, odd_names: vec!["v1".into(), "v-1".into()], action, anchors };
        solve_odd_bracket(&p)
    }

    #[test]
    fn osp_one_two() {
        let anchor = Anchor { u: vec![q(1), q(0)], v: vec![q(1), q(0)], value: vec![q(2), q(0), q(0)] };
        let sol = osp12(vec![anchor]).unwrap();
        assert_eq!(sol.get(0, 0), &[q(2), q(0), q(0)]);
        assert_eq!(sol.get(1, 1), &[q(0), q(0), q(-2)]);
        assert_eq!(sol.get(0, 1), &[q(0), q(-1), q(0)]);
    }

    #[test]
    fn missing_anchor_leaves_a_parameter() {
        // Jacobi is homogeneous, so the overall scale stays free
        assert!(matches!(osp12(vec![]), Err(Error::Solver(_))));
    }

    #[test]
    fn inconsistent_anchor_is_rejected() {
        let anchor = Anchor { u: vec![q(1), q(0)], v: vec![q(1), q(0)], value: vec![q(0), q(1), q(0)] };
        assert!(matches!(osp12(vec![anchor]), Err(Error::Solver(_))));
    }
}
