//! The ring of symmetric functions over the integers in the Schur basis:
//! Littlewood-Richardson multiplication, the coproduct, the Hall inner
//! product, the distinguished elements e_n / h_n / p_n, and the raising
//! and skewing operators they generate.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CoreError, Result};
use crate::partitions::{generate_partitions, Partition};

/// A finitely supported integer combination of tuples of partitions: an
/// element of the `arity`-fold tensor power of the symmetric-function ring,
/// graded by total size. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SymTensor {
    arity: usize,
    coeffs: BTreeMap<Vec<Partition>, BigInt>,
}

impl SymTensor {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        SymTensor { arity, coeffs: BTreeMap::new() }
    }

    /// The basis element s_lambda (arity 1).
    pub fn schur(lam: Partition) -> Self {
        let mut t = Self::zero(1);
        t.coeffs.insert(vec![lam], BigInt::one());
        t
    }

    /// The unit: s of the empty partition.
    pub fn unit() -> Self {
        Self::schur(Partition::empty())
    }

    /// A pure basis tensor with coefficient 1.
    pub fn pure(index: Vec<Partition>) -> Self {
        assert!(!index.is_empty());
        let mut t = Self::zero(index.len());
        t.coeffs.insert(index, BigInt::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, index: &[Partition]) -> BigInt {
        self.coeffs.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, index: Vec<Partition>, coeff: BigInt) {
        assert_eq!(index.len(), self.arity, "term arity mismatch");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(index) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymTensor) -> Result<SymTensor> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch { expected: self.arity, got: other.arity });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymTensor) -> Result<SymTensor> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch { expected: self.arity, got: other.arity });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> SymTensor {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = Self::zero(self.arity);
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v * c);
        }
        out
    }

    /// Total degree of a tuple: the sum of the sizes of its components.
    pub fn index_degree(index: &[Partition]) -> u32 {
        index.iter().map(|p| p.size()).sum()
    }

    /// The homogeneous part of total degree n. Exact and idempotent.
    pub fn homogeneous_part(&self, n: u32) -> SymTensor {
        let mut out = Self::zero(self.arity);
        for (k, v) in &self.coeffs {
            if Self::index_degree(k) == n {
                out.coeffs.insert(k.clone(), v.clone());
            }
        }
        out
    }

    /// Drop all terms of total degree greater than d.
    pub fn truncate(&self, d: u32) -> SymTensor {
        let mut out = Self::zero(self.arity);
        for (k, v) in &self.coeffs {
            if Self::index_degree(k) <= d {
                out.coeffs.insert(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| Self::index_degree(k)).max()
    }

    /// Tensor product, concatenating index tuples.
    pub fn tensor(&self, other: &SymTensor) -> SymTensor {
        let mut out = Self::zero(self.arity + other.arity);
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &other.coeffs {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                out.add_term(k, va * vb);
            }
        }
        out
    }

    /// Render as e.g. "(2) + (1,1)" or "2·(1)⊗(1) − (0)⊗(2,1)".
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<Partition>> = self.coeffs.keys().collect();
        keys.sort_by(|a, b| {
            SymTensor::index_degree(a)
                .cmp(&SymTensor::index_degree(b))
                .then_with(|| {
                    for (x, y) in a.iter().zip(b.iter()) {
                        let c = x.revlex_cmp(y);
                        if c != std::cmp::Ordering::Equal {
                            return c;
                        }
                    }
                    std::cmp::Ordering::Equal
                })
        });
        let mut out = String::new();
        for (i, k) in keys.iter().enumerate() {
            let c = &self.coeffs[*k];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push_str("− ");
                }
            } else if c.is_negative() {
                out.push_str(" − ");
            } else {
                out.push_str(" + ");
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}·"));
            }
            let legs: Vec<String> = k.iter().map(|p| format!("({})", p.to_text())).collect();
            out.push_str(&legs.join("⊗"));
        }
        out
    }
}

impl fmt::Debug for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---------------------------------------------------------------------------
// JSON form: {"arity": k, "terms": [{"index": [[3,1],[2]], "coeff": -2}, ...]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: Vec<Vec<u32>>,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct SymTensorJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymTensor {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .coeffs
            .iter()
            .map(|(k, v)| {
                let coeff = match i64::try_from(v.clone()) {
                    Ok(n) => serde_json::Value::from(n),
                    Err(_) => serde_json::Value::from(v.to_string()),
                };
                TermJson {
                    index: k.iter().map(|p| p.parts().to_vec()).collect(),
                    coeff,
                }
            })
            .collect();
        SymTensorJson { arity: self.arity, terms }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SymTensor {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SymTensorJson::deserialize(de)?;
        if raw.arity == 0 {
            return Err(D::Error::custom("arity must be positive"));
        }
        let mut t = SymTensor::zero(raw.arity);
        for term in raw.terms {
            if term.index.len() != raw.arity {
                return Err(D::Error::custom("term index arity mismatch"));
            }
            let mut idx = Vec::with_capacity(raw.arity);
            for legs in term.index {
                idx.push(Partition::new(legs).map_err(D::Error::custom)?);
            }
            let coeff: BigInt = match &term.coeff {
                serde_json::Value::Number(n) => {
                    if let Some(i) = n.as_i64() {
                        BigInt::from(i)
                    } else {
                        return Err(D::Error::custom("coefficient out of i64 range; use a string"));
                    }
                }
                serde_json::Value::String(s) => {
                    s.parse::<BigInt>().map_err(|e| D::Error::custom(e.to_string()))?
                }
                _ => return Err(D::Error::custom("coefficient must be a number or string")),
            };
            t.add_term(idx, coeff);
        }
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule
// ---------------------------------------------------------------------------

static LR_MEMO: RwLock<Option<HashMap<(Partition, Partition, Partition), u64>>> =
    RwLock::new(None);

/// The Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of
/// column-strict, row-weak skew tableaux of shape lambda/mu and content nu
/// whose reverse reading word is a lattice word. Returns 0 when the degrees
/// do not match or mu is not contained in lambda.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lam.size() || !lam.contains(mu) || !lam.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return if lam == mu { 1 } else { 0 };
    }
    // c^lam_{mu,nu} is symmetric in (mu, nu); normalize the memo key.
    let (a, b) = if mu.parts() <= nu.parts() {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    let key = (lam.clone(), a, b);
    if let Some(map) = LR_MEMO.read().unwrap().as_ref() {
        if let Some(&v) = map.get(&key) {
            return v;
        }
    }
    let v = lr_count(lam, mu, nu);
    let mut guard = LR_MEMO.write().unwrap();
    guard.get_or_insert_with(HashMap::new).insert(key, v);
    v
}

fn lr_count(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // within each row right to left. Filling in this order makes the lattice
    // condition incrementally checkable.
    let rows = lam.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = mu.part(r) as usize;
        let hi = lam.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let width = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; nu.len() + 1];
    let mut total = 0u64;
    fill(&mut grid, &mut counts, &cells, 0, lam, mu, nu, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill(
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    cells: &[(usize, usize)],
    pos: usize,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    total: &mut u64,
) {
    if pos == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[pos];
    for v in 1..=nu.len() as u32 {
        let vi = v as usize;
        if counts[vi] >= nu.part(vi - 1) {
            continue;
        }
        // lattice: after placing v, #v must not exceed #(v-1)
        if v > 1 && counts[vi] >= counts[vi - 1] {
            continue;
        }
        // row-weak: the cell to the right was filled earlier
        if c + 1 < lam.part(r) as usize && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
            continue;
        }
        // column-strict against the cell above, when it lies in the skew shape
        if r > 0 && c >= mu.part(r - 1) as usize && c < lam.part(r - 1) as usize {
            if v <= grid[r - 1][c] {
                continue;
            }
        }
        grid[r][c] = v;
        counts[vi] += 1;
        fill(grid, counts, cells, pos + 1, lam, mu, nu, total);
        counts[vi] -= 1;
        grid[r][c] = 0;
    }
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

/// Product in the Schur basis: bilinear extension of
/// s_mu · s_nu = sum over lambda of c^lambda_{mu,nu} s_lambda.
pub fn multiply(f: &SymTensor, g: &SymTensor) -> Result<SymTensor> {
    if f.arity() != 1 {
        return Err(CoreError::ArityMismatch { expected: 1, got: f.arity() });
    }
    if g.arity() != 1 {
        return Err(CoreError::ArityMismatch { expected: 1, got: g.arity() });
    }
    let mut out = SymTensor::zero(1);
    for (ka, va) in f.terms() {
        for (kb, vb) in g.terms() {
            let mu = &ka[0];
            let nu = &kb[0];
            let c = va * vb;
            for lam in generate_partitions(mu.size() + nu.size()) {
                let m = lr_coefficient(&lam, mu, nu);
                if m != 0 {
                    out.add_term(vec![lam], &c * BigInt::from(m));
                }
            }
        }
    }
    Ok(out)
}

/// Product of a list of Schur generators, folded left to right.
pub fn schur_product(factors: &[Partition]) -> SymTensor {
    let mut acc = SymTensor::unit();
    for p in factors {
        acc = multiply(&acc, &SymTensor::schur(p.clone())).expect("arity 1");
    }
    acc
}

/// Coefficient of one Schur generator in a product of Schur generators:
/// the iterated expansion multiplicity.
pub fn product_coefficient(target: &Partition, factors: &[Partition]) -> u64 {
    let total: u32 = factors.iter().map(|f| f.size()).sum();
    if target.size() != total {
        return 0;
    }
    let prod = schur_product(factors);
    u64::try_from(prod.coefficient(std::slice::from_ref(target))).unwrap_or(0)
}

/// Coproduct: Delta(s_lambda) = sum c^lambda_{mu,nu} s_mu ⊗ s_nu,
/// extended linearly. Adjoint to `multiply` under the Hall pairing.
pub fn coproduct(f: &SymTensor) -> Result<SymTensor> {
    if f.arity() != 1 {
        return Err(CoreError::ArityMismatch { expected: 1, got: f.arity() });
    }
    let mut out = SymTensor::zero(2);
    for (k, v) in f.terms() {
        let lam = &k[0];
        let n = lam.size();
        for a in 0..=n {
            for mu in generate_partitions(a) {
                if !lam.contains(&mu) {
                    continue;
                }
                for nu in generate_partitions(n - a) {
                    let c = lr_coefficient(lam, &mu, &nu);
                    if c != 0 {
                        out.add_term(vec![mu.clone(), nu], v * BigInt::from(c));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Hall inner product, extended componentwise to tensors: the pure tuples
/// form an orthonormal basis.
pub fn inner(f: &SymTensor, g: &SymTensor) -> Result<BigInt> {
    if f.arity() != g.arity() {
        return Err(CoreError::ArityMismatch { expected: f.arity(), got: g.arity() });
    }
    let (small, large) = if f.num_terms() <= g.num_terms() { (f, g) } else { (g, f) };
    let mut acc = BigInt::zero();
    for (k, v) in small.terms() {
        let w = large.coefficient(k);
        if !w.is_zero() {
            acc += v * w;
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Elementary,
    Homogeneous,
    PowerSum,
}

/// e_n = s_{(1^n)}, h_n = s_{(n)}, and the power sum by its hook expansion
/// p_n = sum_{k=0}^{n-1} (-1)^k s_{(n-k,1^k)}. Requires n >= 1.
pub fn basis_element(kind: BasisKind, n: u32) -> Result<SymTensor> {
    if n == 0 {
        return Err(CoreError::ZeroDegreeBasis);
    }
    Ok(match kind {
        BasisKind::Elementary => SymTensor::schur(Partition::column(n)),
        BasisKind::Homogeneous => SymTensor::schur(Partition::row(n)),
        BasisKind::PowerSum => {
            let mut t = SymTensor::zero(1);
            for k in 0..n {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                t.add_term(vec![Partition::hook(n, k)], sign);
            }
            t
        }
    })
}

/// Multiplication operator: op_m(x, y) = x · y.
pub fn op_m(x: &SymTensor, y: &SymTensor) -> Result<SymTensor> {
    multiply(x, y)
}

/// Skewing operator, the adjoint of op_m: pairs the first coproduct leg of
/// y against x and returns the second leg.
pub fn op_delta(x: &SymTensor, y: &SymTensor) -> Result<SymTensor> {
    if x.arity() != 1 {
        return Err(CoreError::ArityMismatch { expected: 1, got: x.arity() });
    }
    let cop = coproduct(y)?;
    let mut out = SymTensor::zero(1);
    for (k, v) in cop.terms() {
        let c = x.coefficient(&k[..1]);
        if !c.is_zero() {
            out.add_term(vec![k[1].clone()], v * c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2]), &p(&[2])), 0); // degree mismatch
        // degree mismatch again: |mu| + |nu| = 2 but |lambda| = 3
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2, 1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        // the classical first multiplicity-2 case
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn multiply_examples() {
        let s1 = SymTensor::schur(p(&[1]));
        let got = multiply(&s1, &s1).unwrap();
        let mut want = SymTensor::zero(1);
        want.add_term(vec![p(&[2])], BigInt::one());
        want.add_term(vec![p(&[1, 1])], BigInt::one());
        assert_eq!(got, want);

        let f = multiply(&SymTensor::schur(p(&[2])), &SymTensor::schur(p(&[1, 1]))).unwrap();
        let mut want = SymTensor::zero(1);
        want.add_term(vec![p(&[3, 1])], BigInt::one());
        want.add_term(vec![p(&[2, 1, 1])], BigInt::one());
        assert_eq!(f, want);

        // unit element
        let any = multiply(&SymTensor::unit(), &f).unwrap();
        assert_eq!(any, f);
    }

    #[test]
    fn coproduct_examples() {
        let got = coproduct(&SymTensor::unit()).unwrap();
        assert_eq!(got, SymTensor::pure(vec![Partition::empty(), Partition::empty()]));

        let got = coproduct(&SymTensor::schur(p(&[2]))).unwrap();
        let mut want = SymTensor::zero(2);
        want.add_term(vec![p(&[2]), Partition::empty()], BigInt::one());
        want.add_term(vec![p(&[1]), p(&[1])], BigInt::one());
        want.add_term(vec![Partition::empty(), p(&[2])], BigInt::one());
        assert_eq!(got, want);

        let got = coproduct(&SymTensor::schur(p(&[1, 1]))).unwrap();
        let mut want = SymTensor::zero(2);
        want.add_term(vec![p(&[1, 1]), Partition::empty()], BigInt::one());
        want.add_term(vec![p(&[1]), p(&[1])], BigInt::one());
        want.add_term(vec![Partition::empty(), p(&[1, 1])], BigInt::one());
        assert_eq!(got, want);
    }

    #[test]
    fn inner_examples() {
        let s21 = SymTensor::schur(p(&[2, 1]));
        assert_eq!(inner(&s21, &s21).unwrap(), BigInt::one());
        let s2 = SymTensor::schur(p(&[2]));
        let s11 = SymTensor::schur(p(&[1, 1]));
        assert_eq!(inner(&s2, &s11).unwrap(), BigInt::zero());
        let p2 = basis_element(BasisKind::PowerSum, 2).unwrap();
        assert_eq!(inner(&p2, &p2).unwrap(), BigInt::from(2));
        assert!(inner(&s2, &coproduct(&s2).unwrap()).is_err());
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis_element(BasisKind::Elementary, 3).unwrap(),
            SymTensor::schur(p(&[1, 1, 1]))
        );
        let p2 = basis_element(BasisKind::PowerSum, 2).unwrap();
        let mut want = SymTensor::zero(1);
        want.add_term(vec![p(&[2])], BigInt::one());
        want.add_term(vec![p(&[1, 1])], -BigInt::one());
        assert_eq!(p2, want);
        let p3 = basis_element(BasisKind::PowerSum, 3).unwrap();
        let mut want = SymTensor::zero(1);
        want.add_term(vec![p(&[3])], BigInt::one());
        want.add_term(vec![p(&[2, 1])], -BigInt::one());
        want.add_term(vec![p(&[1, 1, 1])], BigInt::one());
        assert_eq!(p3, want);
        assert!(basis_element(BasisKind::PowerSum, 0).is_err());
    }

    #[test]
    fn op_delta_examples() {
        let s1 = SymTensor::schur(p(&[1]));
        let s2 = SymTensor::schur(p(&[2]));
        assert_eq!(op_delta(&s1, &s2).unwrap(), s1);

        // counit behaviour on degree 0
        let x = multiply(&s1, &s1).unwrap();
        let got = op_delta(&x, &SymTensor::unit()).unwrap();
        assert!(got.is_zero());
        let got = op_delta(&SymTensor::unit(), &SymTensor::unit()).unwrap();
        assert_eq!(got, SymTensor::unit());

        let p2 = basis_element(BasisKind::PowerSum, 2).unwrap();
        let got = op_delta(&p2, &p2).unwrap();
        assert_eq!(got, SymTensor::unit().scale(&BigInt::from(2)));
    }

    #[test]
    fn adjointness_on_small_degrees() {
        // <m(a ⊗ b), c> = <a ⊗ b, Delta(c)> for Schur a, b, c with |a|+|b| = |c| <= 5
        for n in 0..=5u32 {
            for a in 0..=n {
                for mu in generate_partitions(a) {
                    for nu in generate_partitions(n - a) {
                        let ab = SymTensor::pure(vec![mu.clone(), nu.clone()]);
                        let prod =
                            multiply(&SymTensor::schur(mu.clone()), &SymTensor::schur(nu.clone()))
                                .unwrap();
                        for lam in generate_partitions(n) {
                            let c = SymTensor::schur(lam.clone());
                            let lhs = inner(&prod, &c).unwrap();
                            let rhs = inner(&ab, &coproduct(&c).unwrap()).unwrap();
                            assert_eq!(lhs, rhs, "mu={mu:?} nu={nu:?} lam={lam:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primitivity_of_power_sums() {
        for n in 1..=8u32 {
            let pn = basis_element(BasisKind::PowerSum, n).unwrap();
            let cop = coproduct(&pn).unwrap();
            let expect = pn
                .tensor(&SymTensor::unit())
                .add(&SymTensor::unit().tensor(&pn))
                .unwrap();
            assert_eq!(cop, expect, "p_{n} is primitive");
        }
    }

    #[test]
    fn op_adjointness() {
        // <op_m(x,a), b> = <a, op_delta(x,b)> on a small sweep
        for xs in 1..=3u32 {
            for x in generate_partitions(xs) {
                let xt = SymTensor::schur(x);
                for asz in 0..=2u32 {
                    for a in generate_partitions(asz) {
                        let at = SymTensor::schur(a);
                        for b in generate_partitions(asz + xs) {
                            let bt = SymTensor::schur(b);
                            let lhs = inner(&op_m(&xt, &at).unwrap(), &bt).unwrap();
                            let rhs = inner(&at, &op_delta(&xt, &bt).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let p2 = basis_element(BasisKind::PowerSum, 2).unwrap();
        let s = serde_json::to_string(&p2).unwrap();
        let back: SymTensor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p2);
        let t: SymTensor =
            serde_json::from_str(r#"{"arity":2,"terms":[{"index":[[3,1],[2]],"coeff":-2}]}"#)
                .unwrap();
        assert_eq!(t.coefficient(&[p(&[3, 1]), p(&[2])]), BigInt::from(-2));
    }

    #[test]
    fn render_form() {
        let s1 = SymTensor::schur(p(&[1]));
        let prod = multiply(&s1, &s1).unwrap();
        assert_eq!(prod.render(), "(2) + (1,1)");
    }
}
