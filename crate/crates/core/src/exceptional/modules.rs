//! Matrix realisations of the even parts and their odd modules: sl(2) on
//! `V₂`, `G₂ ⊂ gl(7)`, `so(7)` on `V₇` and on the spinor module `V₈`.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Coordinates, Matrix};

/// A Lie algebra given by a basis of square matrices acting on a module.
#[derive(Clone, Debug)]
pub struct MatrixRepresentation<S> {
    /// Dimension of the module.
    pub dim: usize,
    /// Names of the module basis vectors.
    pub vector_names: Vec<String>,
    /// Names of the Lie algebra basis elements.
    pub names: Vec<String>,
    /// Row-major `dim × dim` matrices, one per basis element.
    pub matrices: Vec<Vec<S>>,
}

/// `xy − yx` for row-major `d × d` matrices.
pub fn commutator<S: Scalar>(d: usize, x: &[S], y: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); d * d];
    for i in 0..d {
        for k in 0..d {
            let a = &x[i * d + k];
            let b = &y[i * d + k];
            for j in 0..d {
                out[i * d + j].add_mul_assign(a, &y[k * d + j]);
                out[i * d + j].sub_mul_assign(b, &x[k * d + j]);
            }
        }
    }
    out
}

fn matrix_from_entries<S: Scalar>(d: usize, entries: &[(usize, usize, i64)]) -> Vec<S> {
    let mut m = vec![S::zero(); d * d];
    for &(r, c, v) in entries {
        m[r * d + c] = S::from_i64(v);
    }
    m
}

impl<S: Scalar> MatrixRepresentation<S> {
    /// Number of Lie algebra basis elements.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    /// Whether the basis is empty.
    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Structure constants: entry `[i][j]` holds the coordinates of `[b_i, b_j]`.
    ///
    /// Fails when the basis is dependent or not closed under the commutator.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<S>>>> {
        let coords = Coordinates::new(self.dim * self.dim, &self.matrices)?;
        let n = self.len();
        let mut out = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = commutator(self.dim, &self.matrices[i], &self.matrices[j]);
                out[i][j] = coords.coords(&c)?.ok_or_else(|| {
                    Error::Construction(format!("[{}, {}] leaves the span", self.names[i], self.names[j]))
                })?;
            }
        }
        Ok(out)
    }

    /// The matrix of the basis element called `name`.
    pub fn get(&self, name: &str) -> Option<&[S]> {
        self.names.iter().position(|n| n == name).map(|i| self.matrices[i].as_slice())
    }
}

/// sl(2) on `⟨v1, v-1⟩` with basis `E, H, F`, each name followed by `suffix`.
pub fn sl2_rep<S: Scalar>(suffix: &str) -> MatrixRepresentation<S> {
    MatrixRepresentation {
        dim: 2,
        vector_names: vec!["v1".into(), "v-1".into()],
        names: ["E", "H", "F"].iter().map(|n| format!("{n}{suffix}")).collect(),
        matrices: vec![
            matrix_from_entries(2, &[(0, 1, 1)]),
            matrix_from_entries(2, &[(0, 0, 1), (1, 1, -1)]),
            matrix_from_entries(2, &[(1, 0, 1)]),
        ],
    }
}

/// Names of the basis `e3, e2, e1, e0, e-1, e-2, e-3` of the seven-dimensional module.
pub fn seven_names() -> Vec<String> {
    (-3..=3).rev().map(|k| format!("e{k}")).collect()
}

fn seven_index(k: i64) -> usize {
    (3 - k) as usize
}

/// `G₂ ⊂ gl(7)` with basis `h1, h2, x1..x6, y1..y6`.
pub fn g2_rep<S: Scalar>() -> Result<MatrixRepresentation<S>> {
    let d = 7;
    let diag = |v: [i64; 7]| {
        let e: Vec<(usize, usize, i64)> = v.iter().enumerate().map(|(i, &x)| (i, i, x)).collect();
        matrix_from_entries::<S>(d, &e)
    };
    // 1-based (row, column) entries
    let m = |e: &[(usize, usize, i64)]| {
        let z: Vec<(usize, usize, i64)> = e.iter().map(|&(r, c, v)| (r - 1, c - 1, v)).collect();
        matrix_from_entries::<S>(d, &z)
    };
    let h1 = diag([1, -1, 2, 0, -2, 1, -1]);
    let h2 = diag([0, 1, -1, 0, 1, -1, 0]);
    let x1 = m(&[(1, 2, -1), (3, 4, 1), (4, 5, -2), (6, 7, 1)]);
    let x2 = m(&[(2, 3, 1), (5, 6, -1)]);
    let y1 = m(&[(2, 1, -1), (4, 3, 2), (5, 4, -1), (7, 6, 1)]);
    let y2 = m(&[(3, 2, 1), (6, 5, -1)]);
    let chain = |a: &[S], b: &[S]| {
        let c3 = commutator(d, a, b);
        let c4 = commutator(d, a, &c3);
        let c5 = commutator(d, a, &c4);
        let c6 = commutator(d, &c5, b);
        [c3, c4, c5, c6]
    };
    let [x3, x4, x5, x6] = chain(&x1, &x2);
    let [y3, y4, y5, y6] = chain(&y1, &y2);
    let matrices = vec![h1, h2, x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6];
    let mut names = vec!["h1".to_string(), "h2".to_string()];
    names.extend((1..=6).map(|i| format!("x{i}")));
    names.extend((1..=6).map(|i| format!("y{i}")));
    let rep = MatrixRepresentation { dim: d, vector_names: seven_names(), names, matrices };
    rep.structure_constants()?;
    Ok(rep)
}

/// Name of `R_{e_a, e_b}`, where index 0 stands for `e0`.
pub fn r_name(a: i64, b: i64) -> String {
    format!("R(e{a},e{b})")
}

/// The pairs `(a, b)` indexing the basis of so(7): Cartan elements first.
pub fn so7_pairs() -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = (1..=3).map(|a| (a, -a)).collect();
    for a in 1..=3 {
        for b in 1..=3 {
            if a != b {
                out.push((a, -b));
            }
        }
    }
    for a in 1..=3 {
        for b in a + 1..=3 {
            out.push((a, b));
        }
    }
    for a in 1..=3 {
        for b in a + 1..=3 {
            out.push((-a, -b));
        }
    }
    out.extend((1..=3).map(|a| (a, 0)));
    out.extend((1..=3).map(|a| (-a, 0)));
    out
}

/// `R_{e_a,e_b} = E_{a,−b} − E_{b,−a}` and `R_{e_a,e_0} = 2E_{a,0} − E_{0,−a}`,
/// where `E_{i,j}` maps `e_j` to `e_i`.
pub fn r_matrix<S: Scalar>(a: i64, b: i64) -> Vec<S> {
    let u = |i: i64, j: i64, v: i64| (seven_index(i), seven_index(j), v);
    let e = if b == 0 { vec![u(a, 0, 2), u(0, -a, -1)] } else { vec![u(a, -b, 1), u(b, -a, -1)] };
    matrix_from_entries(7, &e)
}

/// so(7) on `V₇` with the basis of [`so7_pairs`].
pub fn so7_rep<S: Scalar>() -> Result<MatrixRepresentation<S>> {
    let pairs = so7_pairs();
    let rep = MatrixRepresentation {
        dim: 7,
        vector_names: seven_names(),
        names: pairs.iter().map(|&(a, b)| r_name(a, b)).collect(),
        matrices: pairs.iter().map(|&(a, b)| r_matrix(a, b)).collect(),
    };
    rep.structure_constants()?;
    Ok(rep)
}

/// Subsets of `{1,2,3}` in the order `∅, 1, 2, 3, 12, 13, 23, 123`.
pub fn spinor_subsets() -> Vec<Vec<i64>> {
    vec![vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
}

/// Names `s, e1s, …, e1e2e3s` of the spinor basis.
pub fn spinor_names() -> Vec<String> {
    spinor_subsets()
        .iter()
        .map(|t| t.iter().map(|i| format!("e{i}")).collect::<String>() + "s")
        .collect()
}

/// Clifford generators on `Λ⟨e1,e2,e3⟩·s`: `e_i` wedges, `e_{−i}` contracts,
/// `e_0` acts by `(−1)^degree`. Returned in the order of [`seven_names`].
pub fn clifford_generators<S: Scalar>() -> Vec<Vec<S>> {
    let subsets = spinor_subsets();
    let index = |t: &[i64]| subsets.iter().position(|u| u == t).expect("subset");
    (-3..=3)
        .rev()
        .map(|k: i64| {
            let mut m = vec![S::zero(); 64];
            for (c, t) in subsets.iter().enumerate() {
                let i = k.abs();
                let sign = if t.iter().filter(|&&j| j < i).count() % 2 == 0 { 1 } else { -1 };
                let (row, val) = match k.signum() {
                    0 => (Some(c), if t.len() % 2 == 0 { 1 } else { -1 }),
                    1 if !t.contains(&i) => {
                        let mut u = t.clone();
                        u.push(i);
                        u.sort_unstable();
                        (Some(index(&u)), sign)
                    }
                    -1 if t.contains(&i) => {
                        let u: Vec<i64> = t.iter().copied().filter(|&j| j != i).collect();
                        (Some(index(&u)), sign)
                    }
                    _ => (None, 0),
                };
                if let Some(r) = row {
                    m[r * 8 + c] = S::from_i64(val);
                }
            }
            m
        })
        .collect()
}

/// The spin action of one so(7) matrix: the trace-free `X` with
/// `[X, γ(z)] = γ(Rz)` for every basis vector `z`.
fn spin_image<S: Scalar>(gamma: &[Vec<S>], r: &[S]) -> Result<Vec<S>> {
    let n = 8;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (b, g) in gamma.iter().enumerate() {
        let mut target = vec![S::zero(); n * n];
        for (a, ga) in gamma.iter().enumerate() {
            let c = &r[a * 7 + b];
            if !c.is_zero() {
                for (t, x) in target.iter_mut().zip(ga) {
                    t.add_mul_assign(c, x);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![S::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] = row[i * n + k].add_ref(&g[k * n + j]);
                    row[k * n + j] = row[k * n + j].sub_ref(&g[i * n + k]);
                }
                rows.push(row);
                rhs.push(target[i * n + j].clone());
            }
        }
    }
    let mut trace = vec![S::zero(); n * n];
    for i in 0..n {
        trace[i * n + i] = S::one();
    }
    rows.push(trace);
    rhs.push(S::zero());
    Matrix::from_rows(n * n, rows)?
        .solve(&rhs)?
        .ok_or_else(|| Error::Construction("no spin intertwiner for an so(7) element".into()))
}

/// so(7) acting on the eight-dimensional spinor module, with the same basis
/// names as [`so7_rep`]. Fails when the result is not a homomorphism.
pub fn spin7_rep<S: Scalar>() -> Result<MatrixRepresentation<S>> {
    let so7 = so7_rep::<S>()?;
    let gamma = clifford_generators::<S>();
    let matrices = so7.matrices.iter().map(|r| spin_image(&gamma, r)).collect::<Result<Vec<_>>>()?;
    let spin = MatrixRepresentation { dim: 8, vector_names: spinor_names(), names: so7.names.clone(), matrices };
    let c7 = so7.structure_constants()?;
    let c8 = spin.structure_constants()?;
    if c7 != c8 {
        return Err(Error::Construction("spin action is not a homomorphism".into()));
    }
    Ok(spin)
}

/// Kronecker-sum action of one factor's matrix on a tensor product of modules.
pub fn tensor_action<S: Scalar>(dims: &[usize], factor: usize, m: &[S]) -> Matrix<S> {
    let total: usize = dims.iter().product();
    let inner: usize = dims[factor + 1..].iter().product();
    let d = dims[factor];
    let mut out = Matrix::zeros(total, total);
    for col in 0..total {
        let k = (col / inner) % d;
        for r in 0..d {
            let v = &m[r * d + k];
            if v.is_zero() {
                continue;
            }
            let row = col - k * inner + r * inner;
            out.set(row, col, v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::integer(v)
    }

    #[test]
    fn g2_has_dimension_fourteen() {
        let g2 = g2_rep::<Rational>().unwrap();
        assert_eq!(g2.len(), 14);
    }

    #[test]
    fn root_vectors_are_h_eigenvectors() {
        // eigenvalue of ad(diag d) on a matrix unit E_rc is d_r − d_c
        let g2 = g2_rep::<Rational>().unwrap();
        let h1 = g2.get("h1").unwrap();
        for name in ["x1", "x2", "y1", "y2"] {
            let x = g2.get(name).unwrap();
            let mut eig = None;
            for r in 0..7 {
                for c in 0..7 {
                    if x[r * 7 + c] != q(0) {
                        let v = h1[r * 7 + r].clone() - h1[c * 7 + c].clone();
                        assert!(eig.is_none() || eig.as_ref() == Some(&v));
                        eig = Some(v);
                    }
                }
            }
            let eig = eig.unwrap();
            let scaled: Vec<Rational> = x.iter().map(|v| v.clone() * eig.clone()).collect();
            assert_eq!(commutator(7, h1, x), scaled, "{name}");
        }
    }

    #[test]
    fn so7_and_spin() {
        let so7 = so7_rep::<Rational>().unwrap();
        assert_eq!(so7.len(), 21);
        let spin = spin7_rep::<Rational>().unwrap();
        // Cartan elements act diagonally with eigenvalues ±1/2
        for i in 0..3 {
            let m = &spin.matrices[i];
            for r in 0..8 {
                for c in 0..8 {
                    if r != c {
                        assert_eq!(m[r * 8 + c], q(0));
                    } else {
                        assert!(m[r * 8 + r] == Rational::new(1, 2).unwrap() || m[r * 8 + r] == Rational::new(-1, 2).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn clifford_relations() {
        let g = clifford_generators::<Rational>();
        let anti = |a: &[Rational], b: &[Rational]| {
            let mut out = vec![q(0); 64];
            for i in 0..8 {
                for k in 0..8 {
                    for j in 0..8 {
                        out[i * 8 + j] = out[i * 8 + j].clone() + a[i * 8 + k].clone() * b[k * 8 + j].clone()
                            + b[i * 8 + k].clone() * a[k * 8 + j].clone();
                    }
                }
            }
            out
        };
        let id: Vec<Rational> = (0..64).map(|k| if k % 9 == 0 { q(1) } else { q(0) }).collect();
        let two_id: Vec<Rational> = id.iter().map(|x| x.clone() * q(2)).collect();
        assert_eq!(anti(&g[3], &g[3]), two_id);
        assert_eq!(anti(&g[0], &g[6]), id);
        assert_eq!(anti(&g[0], &g[0]), vec![q(0); 64]);
    }

    #[test]
    fn kronecker_sum_is_a_homomorphism() {
        let sl = sl2_rep::<Rational>("");
        let dims = [2, 2];
        let e = tensor_action(&dims, 1, &sl.matrices[0]);
        let f = tensor_action(&dims, 1, &sl.matrices[2]);
        let h = tensor_action(&dims, 1, &sl.matrices[1]);
        let ef = e.mul(&f).unwrap();
        let fe = f.mul(&e).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(ef.get(i, j).clone() - fe.get(i, j).clone(), h.get(i, j).clone());
            }
        }
    }
}
