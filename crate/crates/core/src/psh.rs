//! Abstract framework for positive self-adjoint Hopf algebras over the
//! integers: graded based modules with multiplication structure constants,
//! the comultiplication derived by adjointness, axiom checking, tensor
//! products, primitive elements, and finite-set pullbacks.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{CoreError, Result};
use crate::linalg::{kernel_basis, IntMat};
use crate::partitions::{generate_partitions, Partition};
use crate::report::Report;
use crate::symfunc::lr_coefficient;

/// A basis label: a tuple of partitions. The flagship instance uses
/// 1-tuples; k-fold tensor powers use k-tuples.
pub type Label = Vec<Partition>;

/// (degree, index within that degree's ordered basis).
pub type BasisId = (u32, u32);

pub fn label_text(label: &Label) -> String {
    label
        .iter()
        .map(|p| p.to_text())
        .collect::<Vec<_>>()
        .join("|")
}

/// A graded based ring over the integers, given by per-degree ordered bases
/// and a multiplication structure-constant table. The comultiplication is
/// never stored: it is always derived from the multiplication by
/// adjointness with respect to the orthonormal basis.
pub struct PshAlgebra {
    name: String,
    arity: usize,
    max_degree: u32,
    basis: Vec<Vec<Label>>,
    index: HashMap<Label, BasisId>,
    mult: HashMap<(BasisId, BasisId), Vec<(BasisId, BigInt)>>,
    // transpose of `mult`: for each c, the pairs (a, b) with <ab, c> != 0
    delta: HashMap<BasisId, Vec<((BasisId, BasisId), BigInt)>>,
}

impl PshAlgebra {
    /// The symmetric-function ring in the Schur basis, truncated at
    /// total degree `max_degree`.
    pub fn lambda(max_degree: u32) -> Self {
        let basis: Vec<Vec<Label>> = (0..=max_degree)
            .map(|n| generate_partitions(n).into_iter().map(|p| vec![p]).collect())
            .collect();
        let mut alg = Self::from_basis("Lambda".to_string(), 1, max_degree, basis);
        let mut table = Vec::new();
        for da in 0..=max_degree {
            for db in 0..=(max_degree - da) {
                for (ia, a) in alg.basis[da as usize].iter().enumerate() {
                    for (ib, b) in alg.basis[db as usize].iter().enumerate() {
                        let mut terms = Vec::new();
                        for lam in generate_partitions(da + db) {
                            let c = lr_coefficient(&lam, &a[0], &b[0]);
                            if c != 0 {
                                let cid = alg.index[&vec![lam]];
                                terms.push((cid, BigInt::from(c)));
                            }
                        }
                        table.push((((da, ia as u32), (db, ib as u32)), terms));
                    }
                }
            }
        }
        for (k, v) in table {
            alg.mult.insert(k, v);
        }
        alg.rebuild_delta();
        alg
    }

    fn from_basis(name: String, arity: usize, max_degree: u32, basis: Vec<Vec<Label>>) -> Self {
        let mut index = HashMap::new();
        for (d, labels) in basis.iter().enumerate() {
            for (i, l) in labels.iter().enumerate() {
                index.insert(l.clone(), (d as u32, i as u32));
            }
        }
        PshAlgebra {
            name,
            arity,
            max_degree,
            basis,
            index,
            mult: HashMap::new(),
            delta: HashMap::new(),
        }
    }

    fn rebuild_delta(&mut self) {
        self.delta.clear();
        for ((a, b), terms) in &self.mult {
            for (c, coeff) in terms {
                self.delta
                    .entry(*c)
                    .or_default()
                    .push(((*a, *b), coeff.clone()));
            }
        }
        for v in self.delta.values_mut() {
            v.sort_by_key(|((a, b), _)| (*a, *b));
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn basis(&self, degree: u32) -> &[Label] {
        &self.basis[degree as usize]
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.basis[degree as usize].len()
    }

    pub fn label(&self, id: BasisId) -> &Label {
        &self.basis[id.0 as usize][id.1 as usize]
    }

    pub fn id_of(&self, label: &Label) -> Option<BasisId> {
        self.index.get(label).copied()
    }

    /// The unique degree-0 basis id (checked by the connectedness axiom).
    pub fn unit_id(&self) -> BasisId {
        (0, 0)
    }

    /// Structure constants of the product of two basis elements; empty when
    /// the result degree exceeds the truncation bound.
    pub fn product(&self, a: BasisId, b: BasisId) -> &[(BasisId, BigInt)] {
        static EMPTY: Vec<(BasisId, BigInt)> = Vec::new();
        self.mult.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&EMPTY)
    }

    /// Coproduct of a basis element as an arity-2 tensor over this algebra,
    /// derived from the multiplication by adjointness.
    pub fn coproduct_of(&self, c: BasisId) -> PshTensor {
        let mut out = PshTensor::zero(2);
        if let Some(terms) = self.delta.get(&c) {
            for ((a, b), coeff) in terms {
                out.add_term(vec![*a, *b], coeff.clone());
            }
        }
        out
    }

    /// Negate one structure constant. Produces an invalid algebra on
    /// purpose; used by the fault-injection suite.
    pub fn negate_constant(&mut self, a: BasisId, b: BasisId, c: BasisId) -> bool {
        let mut hit = false;
        if let Some(terms) = self.mult.get_mut(&(a, b)) {
            for (cid, coeff) in terms.iter_mut() {
                if *cid == c {
                    *coeff = -coeff.clone();
                    hit = true;
                }
            }
        }
        if hit {
            self.rebuild_delta();
        }
        hit
    }

    /// Tensor product of two instances: labels are concatenated tuples,
    /// multiplication is componentwise, degrees add. Truncated at
    /// min(max_degree) of the factors.
    pub fn tensor(a: &PshAlgebra, b: &PshAlgebra) -> PshAlgebra {
        let d = a.max_degree.min(b.max_degree);
        let arity = a.arity + b.arity;
        let mut basis: Vec<Vec<Label>> = Vec::with_capacity(d as usize + 1);
        for n in 0..=d {
            let mut labels = Vec::new();
            for da in 0..=n {
                for la in a.basis(da) {
                    for lb in b.basis(n - da) {
                        let mut l = la.clone();
                        l.extend(lb.iter().cloned());
                        labels.push(l);
                    }
                }
            }
            basis.push(labels);
        }
        let name = format!("{}({})x{}", a.name, a.arity, b.name);
        let mut alg = Self::from_basis(name, arity, d, basis);

        // componentwise products, no sign (commutative setting)
        let mut table: Vec<((BasisId, BasisId), Vec<(BasisId, BigInt)>)> = Vec::new();
        for d1 in 0..=d {
            for d2 in 0..=(d - d1) {
                for (i1, l1) in alg.basis[d1 as usize].iter().enumerate() {
                    let a1 = a.index[&l1[..a.arity].to_vec()];
                    let b1 = b.index[&l1[a.arity..].to_vec()];
                    for (i2, l2) in alg.basis[d2 as usize].iter().enumerate() {
                        let a2 = a.index[&l2[..a.arity].to_vec()];
                        let b2 = b.index[&l2[a.arity..].to_vec()];
                        let mut terms = Vec::new();
                        for (ca, va) in a.product(a1, a2) {
                            for (cb, vb) in b.product(b1, b2) {
                                let mut l = a.label(*ca).clone();
                                l.extend(b.label(*cb).iter().cloned());
                                let cid = alg.index[&l];
                                terms.push((cid, va * vb));
                            }
                        }
                        terms.sort_by_key(|(c, _)| *c);
                        table.push((((d1, i1 as u32), (d2, i2 as u32)), terms));
                    }
                }
            }
        }
        for (k, v) in table {
            alg.mult.insert(k, v);
        }
        alg.rebuild_delta();
        alg
    }

    /// k-fold tensor power of the symmetric-function ring, folded from the
    /// right so the basis order agrees with `generate_tuples`.
    pub fn lambda_power(k: usize, max_degree: u32) -> PshAlgebra {
        assert!(k >= 1);
        if k == 1 {
            return Self::lambda(max_degree);
        }
        let rest = Self::lambda_power(k - 1, max_degree);
        let first = Self::lambda(max_degree);
        let mut alg = Self::tensor(&first, &rest);
        alg.name = format!("Lambda^{k}");
        alg
    }
}

// ---------------------------------------------------------------------------
// Tensors over a PshAlgebra
// ---------------------------------------------------------------------------

/// A finitely supported integer combination of tuples of basis ids: an
/// element of the S-fold tensor power of the algebra, for |S| = arity.
/// Arity 0 is allowed and denotes the ground ring (a single empty tuple).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PshTensor {
    arity: usize,
    coeffs: BTreeMap<Vec<BasisId>, BigInt>,
}

impl PshTensor {
    pub fn zero(arity: usize) -> Self {
        PshTensor { arity, coeffs: BTreeMap::new() }
    }

    pub fn pure(index: Vec<BasisId>) -> Self {
        let mut t = Self::zero(index.len());
        t.coeffs.insert(index, BigInt::one());
        t
    }

    /// The empty tensor product: the unit of the ground ring.
    pub fn scalar_one() -> Self {
        Self::pure(vec![])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BasisId>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, index: &[BasisId]) -> BigInt {
        self.coeffs.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, index: Vec<BasisId>, coeff: BigInt) {
        assert_eq!(index.len(), self.arity);
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

    pub fn add(&self, other: &PshTensor) -> PshTensor {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn inner(&self, other: &PshTensor) -> Result<BigInt> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch { expected: self.arity, got: other.arity });
        }
        let mut acc = BigInt::zero();
        for (k, v) in &self.coeffs {
            let w = other.coefficient(k);
            if !w.is_zero() {
                acc += v * w;
            }
        }
        Ok(acc)
    }

    pub fn render(&self, alg: &PshAlgebra) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(if v.is_negative() { " − " } else { " + " });
            } else if v.is_negative() {
                out.push_str("− ");
            }
            let mag = v.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}·"));
            }
            let legs: Vec<String> = k.iter().map(|id| label_text(alg.label(*id))).collect();
            out.push_str(&format!("[{}]", legs.join(" ⊗ ")));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Maps of finite sets and the induced multiplication maps
// ---------------------------------------------------------------------------

/// A total map of finite sets {0..source-1} -> {0..target-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMap {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl SetMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        for &v in &values {
            if v >= target {
                return Err(CoreError::SetMapRange { value: v, target });
            }
        }
        Ok(SetMap { source: values.len(), target, values })
    }

    pub fn identity(n: usize) -> Self {
        SetMap { source: n, target: n, values: (0..n).collect() }
    }

    /// The unique map S -> [1].
    pub fn collapse(source: usize) -> Self {
        SetMap { source, target: 1, values: vec![0; source] }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// self ∘ other.
    pub fn compose(&self, other: &SetMap) -> Result<SetMap> {
        if other.target != self.source {
            return Err(CoreError::EndpointMismatch(format!(
                "composing map with target {} into map with source {}",
                other.target, self.source
            )));
        }
        Ok(SetMap {
            source: other.source,
            target: self.target,
            values: other.values.iter().map(|&i| self.values[i]).collect(),
        })
    }

    pub fn fiber(&self, t: usize) -> Vec<usize> {
        (0..self.source).filter(|&s| self.values[s] == t).collect()
    }
}

/// A map of pointed finite sets; value 0 denotes the basepoint, values
/// 1..=target denote the real points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMap {
    pub target: usize,
    pub values: Vec<usize>,
}

impl PointedMap {
    /// Interpret as an honest map of finite sets. Fails when any real point
    /// is sent to the basepoint, i.e. when the map is not active.
    pub fn to_active(&self) -> Result<SetMap> {
        let mut values = Vec::with_capacity(self.values.len());
        for (i, &v) in self.values.iter().enumerate() {
            if v == 0 {
                return Err(CoreError::NonActiveMap(format!(
                    "point {} maps to the basepoint",
                    i + 1
                )));
            }
            if v > self.target {
                return Err(CoreError::SetMapRange { value: v, target: self.target });
            }
            values.push(v - 1);
        }
        SetMap::new(self.target, values)
    }
}

/// The multiplication map A^{⊗S} -> A^{⊗T} induced by a map of finite sets:
/// each target point receives the product of its preimage legs, in
/// increasing source order; an empty preimage contributes the unit.
pub fn m_a(map: &SetMap, x: &PshTensor, alg: &PshAlgebra) -> Result<PshTensor> {
    if x.arity() != map.source() {
        return Err(CoreError::ArityMismatch { expected: map.source(), got: x.arity() });
    }
    let fibers: Vec<Vec<usize>> = (0..map.target()).map(|t| map.fiber(t)).collect();
    let mut out = PshTensor::zero(map.target());
    for (key, coeff) in x.terms() {
        // per-target-point products as small linear combinations
        let mut legs: Vec<Vec<(BasisId, BigInt)>> = Vec::with_capacity(map.target());
        for fiber in &fibers {
            let mut acc: Vec<(BasisId, BigInt)> = vec![(alg.unit_id(), BigInt::one())];
            for &s in fiber {
                let mut next: Vec<(BasisId, BigInt)> = Vec::new();
                for (id, c) in &acc {
                    for (pid, pc) in alg.product(*id, key[s]) {
                        match next.iter_mut().find(|(q, _)| q == pid) {
                            Some((_, qc)) => *qc += c * pc,
                            None => next.push((*pid, c * pc)),
                        }
                    }
                }
                acc = next;
            }
            legs.push(acc);
        }
        // distribute the tensor product of the legs
        let mut partial: Vec<(Vec<BasisId>, BigInt)> = vec![(Vec::new(), coeff.clone())];
        for leg in &legs {
            let mut next = Vec::with_capacity(partial.len() * leg.len());
            for (ids, c) in &partial {
                for (id, lc) in leg {
                    let mut ids2 = ids.clone();
                    ids2.push(*id);
                    next.push((ids2, c * lc));
                }
            }
            partial = next;
        }
        for (ids, c) in partial {
            out.add_term(ids, c);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

/// Check the defining axioms on all basis tuples of total degree <= d:
/// positivity of the structure constants, self-adjointness of the derived
/// comultiplication, the Hopf compatibility (the commuting mate of the
/// multiplication square over the Cartesian square [4] -> [2] -> [1]), and
/// connectedness of degree 0.
pub fn check_psh_axioms(alg: &PshAlgebra, d: u32) -> Report {
    let mut report = Report::new(format!("PSH axioms for {} at degree {}", alg.name(), d));
    assert!(d <= alg.max_degree());

    // (i) positivity
    let mut bad = None;
    'pos: for da in 0..=d {
        for db in 0..=(d - da) {
            for ia in 0..alg.dim(da) as u32 {
                for ib in 0..alg.dim(db) as u32 {
                    for (c, v) in alg.product((da, ia), (db, ib)) {
                        if v.is_negative() {
                            bad = Some(((da, ia), (db, ib), *c, v.clone()));
                            break 'pos;
                        }
                    }
                }
            }
        }
    }
    match bad {
        None => report.pass("positivity", "all structure constants nonnegative"),
        Some((a, b, c, v)) => report.fail(
            "positivity",
            format!(
                "<{} · {}, {}> = {}",
                label_text(alg.label(a)),
                label_text(alg.label(b)),
                label_text(alg.label(c)),
                v
            ),
        ),
    }

    // (ii) self-adjointness of the derived comultiplication
    let mut ok = true;
    let mut detail = String::from("<m(a⊗b), c> = <a⊗b, Δc> on all triples");
    'adj: for dc in 0..=d {
        for ic in 0..alg.dim(dc) as u32 {
            let cop = alg.coproduct_of((dc, ic));
            for (ab, v) in cop.terms() {
                if v.is_negative() {
                    ok = false;
                    detail = format!(
                        "Δ{} has negative coefficient {}",
                        label_text(alg.label((dc, ic))),
                        v
                    );
                    break 'adj;
                }
                let direct = alg
                    .product(ab[0], ab[1])
                    .iter()
                    .find(|(c, _)| *c == (dc, ic))
                    .map(|(_, w)| w.clone())
                    .unwrap_or_else(BigInt::zero);
                if direct != *v {
                    ok = false;
                    detail = format!(
                        "adjointness fails at Δ{} term {}⊗{}",
                        label_text(alg.label((dc, ic))),
                        label_text(alg.label(ab[0])),
                        label_text(alg.label(ab[1]))
                    );
                    break 'adj;
                }
            }
        }
    }
    report.push("self-adjointness", ok, detail);

    // (iii) Hopf axiom: Δ(f·g) = Δ(f)·Δ(g), the commuting mate of the
    // multiplication square over the Cartesian square [4] -> [2] -> [1]
    let mut ok = true;
    let mut detail = String::from("Δ(f·g) = Δ(f)·Δ(g) on all pairs");
    'hopf: for df in 0..=d {
        for dg in 0..=(d - df) {
            for if_ in 0..alg.dim(df) as u32 {
                for ig in 0..alg.dim(dg) as u32 {
                    let f = (df, if_);
                    let g = (dg, ig);
                    // left side: coproduct of the product
                    let mut lhs = PshTensor::zero(2);
                    for (c, v) in alg.product(f, g) {
                        let cop = alg.coproduct_of(*c);
                        for (k, w) in cop.terms() {
                            lhs.add_term(k.clone(), v * w);
                        }
                    }
                    // right side: product of the coproducts, legs (1,3)(2,4)
                    let copf = alg.coproduct_of(f);
                    let copg = alg.coproduct_of(g);
                    let mut rhs = PshTensor::zero(2);
                    for (kf, vf) in copf.terms() {
                        for (kg, vg) in copg.terms() {
                            let c = vf * vg;
                            for (p1, w1) in alg.product(kf[0], kg[0]) {
                                for (p2, w2) in alg.product(kf[1], kg[1]) {
                                    rhs.add_term(vec![*p1, *p2], &c * (w1 * w2));
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        ok = false;
                        detail = format!(
                            "fails at f = {}, g = {}",
                            label_text(alg.label(f)),
                            label_text(alg.label(g))
                        );
                        break 'hopf;
                    }
                }
            }
        }
    }
    report.push("hopf-compatibility", ok, detail);

    // (iv) connectedness: degree 0 is spanned by the unit and the unit
    // multiplies as the identity
    let mut ok = alg.dim(0) == 1;
    let mut detail = String::from("degree-0 component has rank 1; unit acts as identity");
    if !ok {
        detail = format!("degree-0 component has rank {}", alg.dim(0));
    } else {
        let e = alg.unit_id();
        'unit: for dx in 0..=d {
            for ix in 0..alg.dim(dx) as u32 {
                let x = (dx, ix);
                let left = alg.product(e, x);
                let right = alg.product(x, e);
                let expect = vec![(x, BigInt::one())];
                if left != expect.as_slice() || right != expect.as_slice() {
                    ok = false;
                    detail = format!("unit fails on {}", label_text(alg.label(x)));
                    break 'unit;
                }
            }
        }
    }
    report.push("connectedness", ok, detail);

    report
}

/// Integer basis of the space of primitive elements in degree n: the kernel
/// of the reduced coproduct, computed by unimodular column reduction.
pub fn primitives(alg: &PshAlgebra, n: u32) -> Vec<Vec<BigInt>> {
    assert!(n >= 1 && n <= alg.max_degree());
    let cols = alg.dim(n);
    // rows: pairs (a, b) with 0 < |a| < n, |a| + |b| = n
    let mut row_index: HashMap<(BasisId, BasisId), usize> = HashMap::new();
    let mut rows = 0usize;
    for da in 1..n {
        for ia in 0..alg.dim(da) as u32 {
            for ib in 0..alg.dim(n - da) as u32 {
                row_index.insert(((da, ia), (n - da, ib)), rows);
                rows += 1;
            }
        }
    }
    let mut m = IntMat::zero(rows, cols);
    for ic in 0..cols as u32 {
        let cop = alg.coproduct_of((n, ic));
        for (k, v) in cop.terms() {
            if let Some(&r) = row_index.get(&(k[0], k[1])) {
                m[(r, ic as usize)] = v.clone();
            }
        }
    }
    kernel_basis(&m)
}

pub fn primitive_rank(alg: &PshAlgebra, n: u32) -> usize {
    primitives(alg, n).len()
}

// ---------------------------------------------------------------------------
// Finite-set pullbacks
// ---------------------------------------------------------------------------

/// Fiber product of f: B -> D and g: C -> D. Returns the projections
/// (p: T -> B, q: T -> C); T enumerates the pairs (b, c) with f(b) = g(c),
/// ordered by c ascending and then b ascending.
pub fn pullback_square(f: &SetMap, g: &SetMap) -> Result<(SetMap, SetMap)> {
    if f.target() != g.target() {
        return Err(CoreError::EndpointMismatch(format!(
            "pullback legs have targets {} and {}",
            f.target(),
            g.target()
        )));
    }
    let mut to_b = Vec::new();
    let mut to_c = Vec::new();
    for c in 0..g.source() {
        for b in 0..f.source() {
            if f.apply(b) == g.apply(c) {
                to_b.push(b);
                to_c.push(c);
            }
        }
    }
    Ok((SetMap::new(f.source(), to_b)?, SetMap::new(g.source(), to_c)?))
}

/// Completed Cartesian square for a corner of tuples of finite sets with
/// active structure maps into a common one-point-indexed base: for each
/// pair (k, j) the fiber product B_j ×_D C_k with both projections.
/// Errors on non-active input.
pub fn pullback_active_square(
    lefts: &[PointedMap],
    rights: &[PointedMap],
) -> Result<Vec<Vec<(SetMap, SetMap)>>> {
    let lefts: Vec<SetMap> = lefts.iter().map(|m| m.to_active()).collect::<Result<_>>()?;
    let rights: Vec<SetMap> = rights.iter().map(|m| m.to_active()).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(rights.len());
    for g in &rights {
        let mut row = Vec::with_capacity(lefts.len());
        for f in &lefts {
            row.push(pullback_square(f, g)?);
        }
        out.push(row);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Sparse matrices of m_a on truncated tensor-power bases, and the
// 1-categorical Beck-Chevalley check for Cartesian squares
// ---------------------------------------------------------------------------

/// Basis tuples of the k-fold tensor power up to total degree d, in the
/// canonical order (first leg degree ascending, then indices).
pub fn tensor_power_basis(alg: &PshAlgebra, k: usize, d: u32) -> Vec<Vec<BasisId>> {
    fn rec(alg: &PshAlgebra, k: usize, d: u32, out: &mut Vec<Vec<BasisId>>, stack: &mut Vec<BasisId>) {
        if k == 0 {
            out.push(stack.clone());
            return;
        }
        for deg in 0..=d {
            for i in 0..alg.dim(deg) as u32 {
                stack.push((deg, i));
                rec(alg, k - 1, d - deg, out, stack);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(alg, k, d, &mut out, &mut stack);
    out
}

/// Sparse column-major integer matrix.
pub struct SparseMat {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMat {
    pub fn transpose(&self) -> SparseMat {
        let mut cols = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        SparseMat { rows: self.cols.len(), cols }
    }

    /// self * other
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let mut cols = Vec::with_capacity(other.cols.len());
        for ocol in &other.cols {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, v) in ocol {
                for (r, w) in &self.cols[*k] {
                    let e = acc.entry(*r).or_insert_with(BigInt::zero);
                    *e += v * w;
                }
            }
            cols.push(
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        SparseMat { rows: self.rows, cols }
    }

    pub fn eq(&self, other: &SparseMat) -> bool {
        if self.rows != other.rows || self.cols.len() != other.cols.len() {
            return false;
        }
        for (a, b) in self.cols.iter().zip(other.cols.iter()) {
            let am: BTreeMap<_, _> = a.iter().cloned().collect();
            let bm: BTreeMap<_, _> = b.iter().cloned().collect();
            if am != bm {
                return false;
            }
        }
        true
    }
}

/// Matrix of m_a on the truncated tensor-power bases.
pub fn m_a_matrix(alg: &PshAlgebra, map: &SetMap, d: u32) -> Result<SparseMat> {
    let src = tensor_power_basis(alg, map.source(), d);
    let tgt = tensor_power_basis(alg, map.target(), d);
    let tgt_index: HashMap<Vec<BasisId>, usize> =
        tgt.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
    let mut cols = Vec::with_capacity(src.len());
    for key in &src {
        let x = PshTensor::pure(key.clone());
        let y = m_a(map, &x, alg)?;
        let mut col = Vec::new();
        for (k, v) in y.terms() {
            if let Some(&r) = tgt_index.get(k) {
                col.push((r, v.clone()));
            }
        }
        col.sort_by_key(|(r, _)| *r);
        cols.push(col);
    }
    Ok(SparseMat { rows: tgt.len(), cols })
}

/// A Cartesian square of finite sets: p, q are the projections from the
/// fiber product, f, g the structure maps, with f∘p = g∘q.
pub struct CartesianSquare {
    pub p: SetMap, // T -> B
    pub q: SetMap, // T -> C
    pub f: SetMap, // B -> D
    pub g: SetMap, // C -> D
}

impl CartesianSquare {
    pub fn from_corner(f: &SetMap, g: &SetMap) -> Result<Self> {
        let (p, q) = pullback_square(f, g)?;
        Ok(CartesianSquare { p, q, f: f.clone(), g: g.clone() })
    }
}

/// The 1-categorical Beck-Chevalley condition for the image of a Cartesian
/// square under m: replacing one parallel pair of sides by adjoints
/// (matrix transposes) must commute: (m_g)^T ∘ m_f = m_q ∘ (m_p)^T.
pub fn check_bc_1cat(alg: &PshAlgebra, sq: &CartesianSquare, d: u32) -> Result<bool> {
    let mf = m_a_matrix(alg, &sq.f, d)?;
    let mg = m_a_matrix(alg, &sq.g, d)?;
    let mp = m_a_matrix(alg, &sq.p, d)?;
    let mq = m_a_matrix(alg, &sq.q, d)?;
    let lhs = mg.transpose().mul(&mf);
    let rhs = mq.mul(&mp.transpose());
    Ok(lhs.eq(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{basis_element, BasisKind};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_axioms_small() {
        let alg = PshAlgebra::lambda(5);
        let report = check_psh_axioms(&alg, 5);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn tensor_axioms_small() {
        let alg = PshAlgebra::lambda_power(2, 4);
        let report = check_psh_axioms(&alg, 4);
        assert!(report.passed(), "{}", report.render_text());
        // degree-2 basis of the double tensor has 5 elements
        assert_eq!(alg.dim(2), 5);
        // unit ⊗ unit is the unit
        assert_eq!(alg.label(alg.unit_id()), &vec![Partition::empty(), Partition::empty()]);
    }

    #[test]
    fn negated_constant_caught() {
        let mut alg = PshAlgebra::lambda(4);
        let a = alg.id_of(&vec![p(&[1])]).unwrap();
        let c = alg.id_of(&vec![p(&[2])]).unwrap();
        assert!(alg.negate_constant(a, a, c));
        let report = check_psh_axioms(&alg, 4);
        assert!(!report.passed());
        let first = report.first_failure().unwrap();
        assert_eq!(first.name, "positivity");
        assert!(first.details.contains('1'), "witness triple: {}", first.details);
    }

    #[test]
    fn m_a_examples() {
        let alg = PshAlgebra::lambda(4);
        let s1 = alg.id_of(&vec![p(&[1])]).unwrap();
        // identity map leaves tensors unchanged
        let x = PshTensor::pure(vec![s1, s1]);
        let y = m_a(&SetMap::identity(2), &x, &alg).unwrap();
        assert_eq!(x, y);
        // the unique map [2] -> [1] multiplies
        let y = m_a(&SetMap::collapse(2), &x, &alg).unwrap();
        let s2 = alg.id_of(&vec![p(&[2])]).unwrap();
        let s11 = alg.id_of(&vec![p(&[1, 1])]).unwrap();
        let mut want = PshTensor::zero(1);
        want.add_term(vec![s2], BigInt::one());
        want.add_term(vec![s11], BigInt::one());
        assert_eq!(y, want);
        // empty source produces the pure unit tensor
        let y = m_a(&SetMap::collapse(0), &PshTensor::scalar_one(), &alg).unwrap();
        assert_eq!(y, PshTensor::pure(vec![alg.unit_id()]));
    }

    #[test]
    fn m_a_functorial() {
        let alg = PshAlgebra::lambda(4);
        // all composable pairs with sets of size <= 2, on pure tensors of degree <= 4
        let maps_of = |s: usize, t: usize| -> Vec<SetMap> {
            let mut out = Vec::new();
            let mut v = vec![0usize; s];
            loop {
                out.push(SetMap::new(t, v.clone()).unwrap());
                let mut i = 0;
                loop {
                    if i == s {
                        return out;
                    }
                    v[i] += 1;
                    if v[i] < t {
                        break;
                    }
                    v[i] = 0;
                    i += 1;
                }
            }
        };
        let basis = tensor_power_basis(&alg, 2, 4);
        for r in 1..=2usize {
            for s in 1..=2usize {
                for t in 1..=2usize {
                    for b in maps_of(r, s) {
                        for a in maps_of(s, t) {
                            let ab = a.compose(&b).unwrap();
                            for key in tensor_power_basis(&alg, r, 4).iter().take(12) {
                                let x = PshTensor::pure(key.clone());
                                let lhs = m_a(&ab, &x, &alg).unwrap();
                                let rhs = m_a(&a, &m_a(&b, &x, &alg).unwrap(), &alg).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
        let _ = basis;
    }

    #[test]
    fn primitives_of_lambda() {
        let alg = PshAlgebra::lambda(6);
        // degree 1: everything is primitive
        assert_eq!(primitive_rank(&alg, 1), 1);
        // degree 3: rank 1, spanned by the power sum up to sign
        let prims = primitives(&alg, 3);
        assert_eq!(prims.len(), 1);
        let p3 = basis_element(BasisKind::PowerSum, 3).unwrap();
        let basis = alg.basis(3);
        let v = &prims[0];
        let as_coeffs: Vec<BigInt> = basis
            .iter()
            .map(|l| p3.coefficient(std::slice::from_ref(&l[0])))
            .collect();
        let same = v == &as_coeffs || v.iter().zip(&as_coeffs).all(|(a, b)| *a == -b);
        assert!(same, "kernel generator is ±p_3");
        for n in 1..=6 {
            assert_eq!(primitive_rank(&alg, n), 1);
        }
    }

    #[test]
    fn primitives_of_tensor_square() {
        let alg = PshAlgebra::lambda_power(2, 4);
        assert_eq!(primitive_rank(&alg, 2), 2);
    }

    #[test]
    fn pullback_examples() {
        // corner [2] -> [1] <- [2]
        let f = SetMap::collapse(2);
        let g = SetMap::collapse(2);
        let (p, q) = pullback_square(&f, &g).unwrap();
        assert_eq!(p.values(), &[0, 1, 0, 1]);
        assert_eq!(q.values(), &[0, 0, 1, 1]);
        // pullback along identity
        let idm = SetMap::identity(3);
        let h = SetMap::new(3, vec![2, 0]).unwrap();
        let (p, q) = pullback_square(&idm, &h).unwrap();
        assert_eq!(p.source(), 2);
        assert_eq!(q.values(), &[0, 1]);
        // corner [3] -> [2] <- [2] with maps (1,1,2) and id
        let f = SetMap::new(2, vec![0, 0, 1]).unwrap();
        let g = SetMap::identity(2);
        let (p, _q) = pullback_square(&f, &g).unwrap();
        assert_eq!(p.source(), 3);
    }

    #[test]
    fn pullback_rejects_non_active() {
        let bad = PointedMap { target: 2, values: vec![1, 0] };
        let good = PointedMap { target: 2, values: vec![1, 2] };
        let err = pullback_active_square(&[bad], &[good.clone()]);
        assert!(matches!(err, Err(CoreError::NonActiveMap(_))));
        let ok = pullback_active_square(&[good.clone()], &[good]).unwrap();
        assert_eq!(ok.len(), 1);
    }

    #[test]
    fn bc_1cat_on_hopf_square() {
        let alg = PshAlgebra::lambda(5);
        let sq = CartesianSquare::from_corner(&SetMap::collapse(2), &SetMap::collapse(2)).unwrap();
        assert!(check_bc_1cat(&alg, &sq, 5).unwrap());
    }
}
