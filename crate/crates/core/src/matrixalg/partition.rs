//! Super-partitions `(p | q)` and their canonical ordering.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superalg::Parity;

/// One part of a super-partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub size: usize,
    pub parity: Parity,
}

/// A partition of `(m|n)` with parts ordered by weakly decreasing size,
/// even parts before odd parts of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperPartition {
    parts: Vec<Part>,
}

fn canonical_key(p: &Part) -> (std::cmp::Reverse<usize>, Parity) {
    (std::cmp::Reverse(p.size), p.parity)
}

impl SuperPartition {
    /// Builds a partition from even parts `p` and odd parts `q` in any order.
    pub fn new(p: &[usize], q: &[usize]) -> Result<Self> {
        if p.iter().chain(q).any(|&x| x == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        let mut parts: Vec<Part> = p
            .iter()
            .map(|&size| Part { size, parity: Parity::Even })
            .chain(q.iter().map(|&size| Part { size, parity: Parity::Odd }))
            .collect();
        if parts.is_empty() {
            return Err(Error::InvalidPartition("partition has no parts".into()));
        }
        parts.sort_by_key(canonical_key);
        Ok(SuperPartition { parts })
    }

    /// The parts `λ_1 ≥ … ≥ λ_{r+s}` with their parities.
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Number of parts `r + s`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false: partitions have at least one part.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Size of part `i` (0-based).
    pub fn size(&self, i: usize) -> usize {
        self.parts[i].size
    }

    /// Parity of part `i` (0-based).
    pub fn parity(&self, i: usize) -> Parity {
        self.parts[i].parity
    }

    /// Part sizes in canonical order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.size).collect()
    }

    /// Even parts, decreasing.
    pub fn even_parts(&self) -> Vec<usize> {
        self.parts.iter().filter(|p| !p.parity.is_odd()).map(|p| p.size).collect()
    }

    /// Odd parts, decreasing.
    pub fn odd_parts(&self) -> Vec<usize> {
        self.parts.iter().filter(|p| p.parity.is_odd()).map(|p| p.size).collect()
    }

    /// Sum of the even parts.
    pub fn m(&self) -> usize {
        self.even_parts().iter().sum()
    }

    /// Sum of the odd parts.
    pub fn n(&self) -> usize {
        self.odd_parts().iter().sum()
    }

    /// Largest part `λ_1`.
    pub fn largest(&self) -> usize {
        self.parts[0].size
    }

    /// True when every part equals one (the zero orbit).
    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|p| p.size == 1)
    }

    /// The partition `(1^m | 1^n)`.
    pub fn trivial(m: usize, n: usize) -> Result<Self> {
        SuperPartition::new(&vec![1; m], &vec![1; n])
    }

    /// Orthosymplectic validity: even sizes have even multiplicity among the
    /// even parts, odd sizes have even multiplicity among the odd parts.
    pub fn is_osp_valid(&self) -> bool {
        self.osp_violation().is_none()
    }

    fn osp_violation(&self) -> Option<String> {
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            let mult = j - i;
            let must_pair = match p.parity {
                Parity::Even => p.size.is_multiple_of(2),
                Parity::Odd => p.size % 2 == 1,
            };
            if must_pair && mult % 2 == 1 {
                return Some(format!("part {} of parity {} has odd multiplicity {}", p.size, p.parity, mult));
            }
            i = j;
        }
        None
    }

    /// Errors unless [`Self::is_osp_valid`].
    pub fn require_osp(&self) -> Result<()> {
        match self.osp_violation() {
            None => Ok(()),
            Some(msg) => Err(Error::InvalidPartition(format!("{self} is not an orthosymplectic partition: {msg}"))),
        }
    }

    /// Every super-partition of `(m|n)`, in a deterministic order.
    pub fn all(m: usize, n: usize) -> Vec<SuperPartition> {
        let mut out = Vec::new();
        for p in integer_partitions(m) {
            for q in integer_partitions(n) {
                if let Ok(sp) = SuperPartition::new(&p, &q) {
                    out.push(sp);
                }
            }
        }
        out
    }

    /// Every orthosymplectic partition of `(m|2n)`.
    pub fn all_osp(m: usize, n: usize) -> Vec<SuperPartition> {
        SuperPartition::all(m, 2 * n).into_iter().filter(|p| p.is_osp_valid()).collect()
    }
}

/// Partitions of `n` into positive parts, decreasing, in reverse lexicographic order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(self.even_parts()), join(self.odd_parts()))
    }
}

impl FromStr for SuperPartition {
    type Err = Error;

    /// Parses `"p1,p2,...|q1,q2,..."`; either side may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidPartition(format!("`{s}`: {why}"));
        let (left, right) = s.split_once('|').ok_or_else(|| bad("expected `p1,p2,...|q1,q2,...`"))?;
        let side = |t: &str| -> Result<Vec<usize>> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad(&format!("`{}` is not a positive integer", x.trim()))))
                .collect()
        };
        SuperPartition::new(&side(left)?, &side(right)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_puts_even_first_on_ties() {
        let p: SuperPartition = "2,3|3,1".parse().unwrap();
        let v: Vec<(usize, Parity)> = p.parts().iter().map(|x| (x.size, x.parity)).collect();
        assert_eq!(v, vec![(3, Parity::Even), (3, Parity::Odd), (2, Parity::Even), (1, Parity::Odd)]);
        assert_eq!(p.to_string(), "3,2|3,1");
        assert_eq!((p.m(), p.n()), (5, 4));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(integer_partitions(5).len(), 7);
        assert_eq!(integer_partitions(0), vec![Vec::<usize>::new()]);
        assert_eq!(SuperPartition::all(2, 2).len(), 4);
    }

    #[test]
    fn osp_validity() {
        assert!("3|2,2".parse::<SuperPartition>().unwrap().is_osp_valid());
        assert!(!"2|2".parse::<SuperPartition>().unwrap().is_osp_valid());
        assert!(!"1|1".parse::<SuperPartition>().unwrap().is_osp_valid());
        assert!("2,2|1,1".parse::<SuperPartition>().unwrap().is_osp_valid());
    }

    #[test]
    fn parse_errors() {
        assert!("3,2".parse::<SuperPartition>().is_err());
        assert!("3,x|1".parse::<SuperPartition>().is_err());
        assert!("|".parse::<SuperPartition>().is_err());
        assert!("0|1".parse::<SuperPartition>().is_err());
    }
}
