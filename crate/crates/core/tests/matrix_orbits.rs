use superorbit::analysis::{analyze_partition, center_of_centralizer, reachability_criterion};
use superorbit::matrixalg::osp::build_osp_for;
use superorbit::matrixalg::{build_gl, build_psl, build_sl, NilpotentData, SuperPartition};
use superorbit::Rational;

fn part(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

type Mat = Vec<Vec<i64>>;

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn units(n: usize, entries: &[(usize, usize)]) -> Mat {
    let mut m = vec![vec![0; n]; n];
    for &(i, j) in entries {
        m[i][j] = 1;
    }
    m
}

/// Odd `x, y` commuting with `e` and with `xy + yx = e`, given as matrix units on
/// `u_0 … u_{p−1} | w_0 … w_{q−1}` where `e` shifts `u_{k+1} ↦ u_k`, `w_{k+1} ↦ w_k`.
fn odd_witness(p: usize, q: usize) {
    let n = p + q;
    let e_entries: Vec<(usize, usize)> =
        (0..p - 1).map(|k| (k, k + 1)).chain((0..q - 1).map(|k| (p + k, p + k + 1))).collect();
    let e = units(n, &e_entries);
    let x = units(n, &(0..q).map(|k| (k, p + k)).collect::<Vec<_>>());
    let y = units(n, &(1..p).filter(|&j| j <= q).map(|j| (p + j - 1, j)).collect::<Vec<_>>());
    let zero = vec![vec![0; n]; n];
    assert_eq!(sub(&mul(&e, &x), &mul(&x, &e)), zero);
    assert_eq!(sub(&mul(&e, &y), &mul(&y, &e)), zero);
    let anti = add(&mul(&x, &y), &mul(&y, &x));
    assert_eq!(anti, e, "xy + yx for ({p}|{q})");
}

#[test]
fn single_block_pairs_are_reachable() {
    odd_witness(3, 2);
    odd_witness(2, 2);
    odd_witness(2, 1);
}

#[test]
fn sl_three_two_disagrees_with_criterion() {
    let p = part("3|2");
    let r = analyze_partition(&build_sl::<Rational>(3, 2).unwrap(), &p, false).unwrap();
    assert!(r.flags.reachable);
    assert!(!reachability_criterion(&p));
}

#[test]
fn psl_two_two_disagrees_with_criterion() {
    let p = part("2|2");
    let r = analyze_partition(&build_psl::<Rational>(2).unwrap(), &p, false).unwrap();
    assert!(r.flags.reachable);
    assert!(!reachability_criterion(&p));
}

#[test]
fn sl_two_one() {
    let p = part("2|1");
    let r = analyze_partition(&build_sl::<Rational>(2, 1).unwrap(), &p, false).unwrap();
    assert!(r.flags.reachable);
    assert_eq!(r.flags.criterion, Some(true));
}

/// `Σ_{i,j} min(λ_i, λ_j)`, split by the parity of the block pair.
fn gl_centralizer_dims(p: &SuperPartition) -> (usize, usize) {
    let (mut even, mut odd) = (0, 0);
    for a in p.parts() {
        for b in p.parts() {
            let d = a.size.min(b.size);
            if a.parity == b.parity {
                even += d;
            } else {
                odd += d;
            }
        }
    }
    (even, odd)
}

#[test]
fn gl_centralizer_dimensions() {
    for (m, n) in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2)] {
        let alg = build_gl::<Rational>(m, n).unwrap();
        for p in SuperPartition::all(m, n) {
            let nd = NilpotentData::new(&alg, &p).unwrap();
            let ge = alg.algebra().centralizer(&nd.e).unwrap();
            let odd = ge.basis().iter().filter(|v| alg.algebra().parity_of(v) == Some(superorbit::Parity::Odd)).count();
            let (de, dodd) = gl_centralizer_dims(&p);
            assert_eq!(ge.dim(), de + dodd, "{p}");
            assert_eq!(odd, dodd, "{p}");
        }
    }
}

#[test]
fn psl_center_is_spanned_by_powers() {
    for n in 2..=3 {
        let alg = build_psl::<Rational>(n).unwrap();
        for p in SuperPartition::all(n, n) {
            let nd = NilpotentData::new(&alg, &p).unwrap();
            let z = center_of_centralizer(alg.algebra(), &nd.e).unwrap();
            assert_eq!(z.dim(), p.largest() - 1, "{p}");
        }
    }
}

#[test]
fn osp_constructions_satisfy_jacobi() {
    for s in ["3|2", "1,1,1|2", "1|2", "1|1,1", "2,2,1|2"] {
        let alg = build_osp_for::<Rational>(&part(s)).unwrap();
        assert!(alg.algebra().check_super_jacobi().is_empty(), "{s}");
    }
}

#[test]
fn osp_rejects_invalid_partition() {
    assert!(build_osp_for::<Rational>(&part("2|2")).is_err());
}
