//! Expected values shared by the integration tests.
#![allow(dead_code)]

use superorbit::exceptional::ExceptionalKind;

/// `(ascii label, reachable, strongly reachable, Panyushev)` per printed table row.
pub fn expected_table(kind: ExceptionalKind) -> Vec<(&'static str, bool, bool, bool)> {
    match kind {
        ExceptionalKind::D21 => vec![
            ("0", true, true, true),
            ("E1", true, true, true),
            ("E2", true, true, true),
            ("E3", true, true, true),
            ("E1+E2", false, false, false),
            ("E1+E3", false, false, false),
            ("E2+E3", false, false, false),
            ("E1+E2+E3", true, false, true),
        ],
        ExceptionalKind::G3 => vec![
            ("E+(x1+x2)", false, false, false),
            ("E+x2", true, true, true),
            ("E+x1", true, false, false),
            ("E+(x2+x5)", true, false, true),
            ("E", true, true, true),
            ("x1+x2", false, false, false),
            ("x2", true, true, true),
            ("x1", true, true, false),
            ("x2+x5", false, false, false),
            ("0", true, true, true),
        ],
        ExceptionalKind::F4 => vec![
            ("E+(R(e1,e-2)+R(e2,e-3)+R(e3,e0))", false, false, false),
            ("E+(R(e1,e-2)+R(e2,e0))", false, false, false),
            ("E+(R(e1,e-3)+R(e2,e3))", true, false, true),
            ("E+(R(e1,e0)+R(e2,e3))", true, false, true),
            ("E+R(e1,e0)", false, false, false),
            ("E+R(e1,e2)", true, true, true),
            ("E", true, true, true),
            ("R(e1,e-2)+R(e2,e-3)+R(e3,e0)", false, false, false),
            ("R(e1,e-2)+R(e2,e0)", false, false, false),
            ("R(e1,e-3)+R(e2,e3)", false, false, false),
            ("R(e1,e0)+R(e2,e3)", true, true, true),
            ("R(e1,e0)", true, true, true),
            ("R(e1,e2)", true, true, true),
            ("0", true, true, true),
        ],
    }
}

/// Partitions where brute force finds `e` reachable but the partition criterion says otherwise.
pub const CRITERION_MISMATCHES: [&str; 24] = [
    "sl(2|3) λ=(2|3)",
    "sl(3|2) λ=(3|2)",
    "sl(3|4) λ=(3|4)",
    "sl(3|4) λ=(3|3,1)",
    "sl(4|3) λ=(4|3)",
    "sl(4|3) λ=(3,1|3)",
    "sl(3|5) λ=(3|4,1)",
    "sl(3|5) λ=(3|3,1,1)",
    "sl(5|3) λ=(4,1|3)",
    "sl(5|3) λ=(3,1,1|3)",
    "psl(2|2) λ=(2|2)",
    "psl(3|3) λ=(3|3)",
    "psl(4|4) λ=(4|4)",
    "psl(4|4) λ=(4|3,1)",
    "psl(4|4) λ=(3,1|4)",
    "psl(4|4) λ=(3,1|3,1)",
    "psl(4|4) λ=(2,2|2,2)",
    "osp(3|2) λ=(3|2)",
    "osp(3|4) λ=(3|4)",
    "osp(4|4) λ=(3,1|4)",
    "osp(4|4) λ=(2,2|2,2)",
    "osp(5|4) λ=(5|4)",
    "osp(5|4) λ=(3,1,1|4)",
    "osp(3|6) λ=(3|4,1,1)",
];

/// `psl(n|n)` partitions where the 2-free core relations fail.
pub const CORE_MISMATCHES: [&str; 28] = [
    "psl(2|2) λ=(2|1,1)",
    "psl(2|2) λ=(1,1|2)",
    "psl(3|3) λ=(3|2,1)",
    "psl(3|3) λ=(3|1,1,1)",
    "psl(3|3) λ=(2,1|3)",
    "psl(3|3) λ=(2,1|1,1,1)",
    "psl(3|3) λ=(1,1,1|3)",
    "psl(3|3) λ=(1,1,1|2,1)",
    "psl(4|4) λ=(4|3,1)",
    "psl(4|4) λ=(4|2,2)",
    "psl(4|4) λ=(4|2,1,1)",
    "psl(4|4) λ=(4|1,1,1,1)",
    "psl(4|4) λ=(3,1|4)",
    "psl(4|4) λ=(3,1|2,2)",
    "psl(4|4) λ=(3,1|2,1,1)",
    "psl(4|4) λ=(3,1|1,1,1,1)",
    "psl(4|4) λ=(2,2|4)",
    "psl(4|4) λ=(2,2|3,1)",
    "psl(4|4) λ=(2,2|2,1,1)",
    "psl(4|4) λ=(2,2|1,1,1,1)",
    "psl(4|4) λ=(2,1,1|4)",
    "psl(4|4) λ=(2,1,1|3,1)",
    "psl(4|4) λ=(2,1,1|2,2)",
    "psl(4|4) λ=(2,1,1|1,1,1,1)",
    "psl(4|4) λ=(1,1,1,1|4)",
    "psl(4|4) λ=(1,1,1,1|3,1)",
    "psl(4|4) λ=(1,1,1,1|2,2)",
    "psl(4|4) λ=(1,1,1,1|2,1,1)",
];

/// Printed commutators that differ from the constructed algebras, with the computed value.
pub const COMMUTATOR_MISMATCHES: [(ExceptionalKind, &str, &str); 5] = [
    (ExceptionalKind::D21, "[v1v1v-1, v1v-1v1] = 2σ1 E1", "(-2*a - 2)*E1"),
    (ExceptionalKind::F4, "[x, y] = R(e1,e-3) + R(e2,e3) - 6E", "3/2*E + R(e1,e-3) + R(e2,e3)"),
    (ExceptionalKind::F4, "[v1e2s, v1e1e3s] = 6E", "-3/2*E"),
    (ExceptionalKind::F4, "[v1e1s, v1e2e3s] = -6E", "3/2*E"),
    (ExceptionalKind::F4, "[R(e-3,e0), R(e3,e0)] = R(e3,e-3)", "2*R(e3,e-3)"),
];
