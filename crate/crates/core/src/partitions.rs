//! Integer partitions: the index set for the Schur basis and for the
//! simple objects of every category built downstream.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty sequence is the unique partition of 0. Canonical form is
/// enforced at construction; non-monotone or zero parts are rejected
/// rather than sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(CoreError::NonMonotonePartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row (n); the empty partition for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column (1,...,1) with n ones.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    /// Hook (n-k, 1^k) of size n, for 0 <= k < n.
    pub fn hook(n: u32, k: u32) -> Self {
        debug_assert!(k < n);
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part, padding with zeros past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transposed Young diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Self::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            out.push(self.parts.iter().take_while(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts: out }
    }

    /// Containment of Young diagrams: true iff other_i <= self_i for all i.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Reverse-lexicographic comparison: (n) first, (1^n) last within a degree.
    /// Partitions of different sizes compare by size first.
    pub fn revlex_cmp(&self, other: &Partition) -> Ordering {
        match self.size().cmp(&other.size()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let n = self.len().max(other.len());
        for i in 0..n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => {}
                // bigger leading part comes earlier
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Text form: "3,1" for (3,1), "0" for the empty partition.
    pub fn to_text(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse the text form. "" and "0" both denote the empty partition.
    pub fn parse_text(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v).map_err(|_| CoreError::PartitionParse(s.to_string())),
            Err(_) => Err(CoreError::PartitionParse(s.to_string())),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = CoreError;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
/// This order is the indexing contract for every matrix built downstream.
pub fn generate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_rec(n, n, &mut stack, &mut out);
    out
}

fn gen_rec(n: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    let top = max.min(n);
    for first in (1..=top).rev() {
        stack.push(first);
        gen_rec(n - first, first, stack, out);
        stack.pop();
    }
}

/// All k-tuples of partitions of total size n, in the canonical order used
/// for tensor-power bases: first leg degree ascending, then the first leg
/// in reverse-lexicographic order, then the remaining legs recursively.
pub fn generate_tuples(k: usize, n: u32) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for d in 0..=n {
        for lam in generate_partitions(d) {
            for rest in generate_tuples(k - 1, n - d) {
                let mut t = Vec::with_capacity(k);
                t.push(lam.clone());
                t.extend(rest);
                out.push(t);
            }
        }
    }
    out
}
