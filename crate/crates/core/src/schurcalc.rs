//! Exact realization of the Schur-functor calculus behind the based
//! model: irreducible polynomial modules inside tensor powers of the
//! standard module, Littlewood-Richardson multiplicity spaces as
//! highest-weight vector spaces, iterated chain bases, and the recoupling
//! matrices relating two fiber groupings of the same multi-factor
//! expansion.
//!
//! The canonical 2-morphisms filling strictly commuting composition
//! squares are not positional: regrouping tensor slots acts on
//! multiplicity spaces by honest linear maps (already a sign on
//! antisymmetric components for a single swap). This module computes that
//! data exactly over the rationals and caches it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partitions::{generate_partitions, Partition};
use crate::symfunc::lr_coefficient;
use crate::twovect::RatMat;

/// A word of letters, one per ambient slot; `u8::MAX` marks a slot not
/// owned by the vector (used while assembling products on disjoint slot
/// sets).
pub type Word = Vec<u8>;
/// Sparse rational vector on words.
pub type Vecq = BTreeMap<Word, BigRational>;

const FREE: u8 = u8::MAX;

fn vec_add_scaled(acc: &mut Vecq, v: &Vecq, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let e = acc.entry(k.clone()).or_insert_with(BigRational::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Lowering operator on the given slots: one letter i becomes i+1 per
/// summand (Leibniz rule).
fn lower(v: &Vecq, slots: &[usize], i: u8) -> Vecq {
    let mut out = Vecq::new();
    for (k, c) in v {
        for &s in slots {
            if k[s] == i {
                let mut k2 = k.clone();
                k2[s] = i + 1;
                *out.entry(k2).or_insert_with(BigRational::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Raising operator on the given slots: one letter i+1 becomes i.
fn raise(v: &Vecq, slots: &[usize], i: u8) -> Vecq {
    let mut out = Vecq::new();
    for (k, c) in v {
        for &s in slots {
            if k[s] == i + 1 {
                let mut k2 = k.clone();
                k2[s] = i;
                *out.entry(k2).or_insert_with(BigRational::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn word_content(k: &Word, letters: usize) -> Vec<u8> {
    let mut c = vec![0u8; letters];
    for &x in k {
        if x != FREE {
            c[x as usize] += 1;
        }
    }
    c
}

// ---------------------------------------------------------------------------
// Echelon structure over sparse vectors
// ---------------------------------------------------------------------------

struct Echelon {
    rows: Vec<Vecq>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduce v against the rows; returns the residual and the
    /// coefficients used per row.
    fn reduce(&self, v: &Vecq) -> (Vecq, Vec<BigRational>) {
        let mut r = v.clone();
        let mut coeffs = vec![BigRational::zero(); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            let pivot = row.keys().next().expect("nonempty row");
            if let Some(c) = r.get(pivot).cloned() {
                let pv = row.get(pivot).unwrap();
                let f = c / pv;
                let neg = -f.clone();
                vec_add_scaled(&mut r, row, &neg);
                coeffs[i] = f;
            }
        }
        (r, coeffs)
    }

    fn insert(&mut self, r: Vecq) {
        debug_assert!(!r.is_empty());
        self.rows.push(r);
    }
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

enum Deriv {
    Hw,
    Lower { f: u8, from: usize, reduce: Vec<(usize, BigRational)> },
}

/// An irreducible polynomial module realized inside the tensor power of
/// the standard module with `letters` basis letters, with a weight-graded
/// echelonized basis and a derivation of every basis vector from the
/// highest-weight vector by lowering operators.
pub struct Module {
    pub shape: Partition,
    pub letters: usize,
    pub slots: usize,
    basis: Vec<Vecq>,
    contents: Vec<Vec<u8>>,
    by_content: HashMap<Vec<u8>, Vec<usize>>,
    lead: HashMap<Word, usize>,
    deriv: Vec<Deriv>,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_vector(&self, i: usize) -> &Vecq {
        &self.basis[i]
    }

    pub fn content(&self, i: usize) -> &[u8] {
        &self.contents[i]
    }

    pub fn indices_of_content(&self, c: &[u8]) -> &[usize] {
        self.by_content.get(c).map(|v| v.as_slice()).unwrap_or(&[])
    }

    fn index_by_lead(&self, w: &[u8]) -> usize {
        *self
            .lead
            .get(w)
            .unwrap_or_else(|| panic!("no basis vector of {:?} with leading word {w:?}", self.shape))
    }
}

fn permutation_sign(p: &[u8]) -> i64 {
    let mut sign = 1i64;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Highest-weight vector: one antisymmetrized column per column of the
/// diagram, columns laid out left to right in the slot word.
fn highest_weight_vector(shape: &Partition) -> Vecq {
    let conj = shape.conjugate();
    let mut out: Vecq = BTreeMap::new();
    out.insert(Vec::new(), BigRational::one());
    for c in 0..conj.len() {
        let len = conj.part(c) as usize;
        let mut col: Vecq = BTreeMap::new();
        let mut perm: Vec<u8> = (0..len as u8).collect();
        loop {
            col.insert(
                perm.clone(),
                BigRational::from_integer(permutation_sign(&perm).into()),
            );
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let mut next: Vecq = BTreeMap::new();
        for (k1, c1) in &out {
            for (k2, c2) in &col {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                next.insert(k, c1 * c2);
            }
        }
        out = next;
    }
    out
}

fn build_module(shape: &Partition, letters: usize) -> Module {
    let slots = shape.size() as usize;
    let all_slots: Vec<usize> = (0..slots).collect();
    let hw = highest_weight_vector(shape);
    let mut basis = vec![hw.clone()];
    let mut contents = vec![word_content(hw.keys().next().unwrap(), letters)];
    let mut deriv = vec![Deriv::Hw];
    let mut echelons: HashMap<Vec<u8>, Echelon> = HashMap::new();
    let mut members: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    {
        let e = echelons.entry(contents[0].clone()).or_insert_with(Echelon::new);
        e.insert(hw);
        members.insert(contents[0].clone(), vec![0]);
    }

    let mut frontier = 0usize;
    while frontier < basis.len() {
        for i in 0..letters.saturating_sub(1) as u8 {
            let w = lower(&basis[frontier], &all_slots, i);
            if w.is_empty() {
                continue;
            }
            let c = word_content(w.keys().next().unwrap(), letters);
            let mem = members.entry(c.clone()).or_default();
            let e = echelons.entry(c.clone()).or_insert_with(Echelon::new);
            let (r, coeffs) = e.reduce(&w);
            if r.is_empty() {
                continue;
            }
            let reduce: Vec<(usize, BigRational)> = coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(row, c)| (mem[row], c))
                .collect();
            e.insert(r.clone());
            basis.push(r);
            contents.push(c);
            deriv.push(Deriv::Lower { f: i, from: frontier, reduce });
            mem.push(basis.len() - 1);
        }
        frontier += 1;
    }

    let mut by_content: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    let mut lead = HashMap::new();
    for (i, c) in contents.iter().enumerate() {
        by_content.entry(c.clone()).or_default().push(i);
        lead.insert(basis[i].keys().next().unwrap().clone(), i);
    }
    Module { shape: shape.clone(), letters, slots, basis, contents, by_content, lead, deriv }
}

type ModuleKey = (Partition, usize);
static MODULES: OnceLock<Mutex<HashMap<ModuleKey, Arc<Module>>>> = OnceLock::new();

pub fn module(shape: &Partition, letters: usize) -> Arc<Module> {
    let lock = MODULES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = lock.lock().unwrap().get(&(shape.clone(), letters)) {
        return m.clone();
    }
    let m = Arc::new(build_module(shape, letters));
    lock.lock().unwrap().insert((shape.clone(), letters), m.clone());
    m
}

/// Equivariant transport: the module map determined by an image of the
/// highest-weight vector, evaluated on arbitrary basis vectors through
/// their lowering derivations. The image lives on an ambient word space;
/// `slots` are the ambient positions the map writes to.
struct Transport<'a> {
    module: &'a Module,
    hw_image: Vecq,
    slots: Vec<usize>,
    cache: HashMap<usize, Vecq>,
}

impl<'a> Transport<'a> {
    fn new(module: &'a Module, hw_image: Vecq, slots: Vec<usize>) -> Self {
        Transport { module, hw_image, slots, cache: HashMap::new() }
    }

    fn image(&mut self, k: usize) -> Vecq {
        if let Some(v) = self.cache.get(&k) {
            return v.clone();
        }
        let out = match &self.module.deriv[k] {
            Deriv::Hw => self.hw_image.clone(),
            Deriv::Lower { f, from, reduce } => {
                let (f, from, reduce) = (*f, *from, reduce.clone());
                let base = self.image(from);
                let mut out = lower(&base, &self.slots.clone(), f);
                for (l, c) in &reduce {
                    let img = self.image(*l);
                    let neg = -c.clone();
                    vec_add_scaled(&mut out, &img, &neg);
                }
                out
            }
        };
        self.cache.insert(k, out.clone());
        out
    }
}

/// Place a standalone module vector onto the given ambient slots; all
/// other slots read FREE.
fn place_vector(v: &Vecq, slots: &[usize], ambient: usize) -> Vecq {
    let mut out = Vecq::new();
    for (k, c) in v {
        let mut key = vec![FREE; ambient];
        for (pos, &s) in slots.iter().enumerate() {
            key[s] = k[pos];
        }
        out.insert(key, c.clone());
    }
    out
}

/// Product of vectors on disjoint slot sets of a common ambient.
fn merge_product(a: &Vecq, b: &Vecq) -> Vecq {
    let mut out = Vecq::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut k = ka.clone();
            for (i, &x) in kb.iter().enumerate() {
                if x != FREE {
                    debug_assert_eq!(k[i], FREE, "overlapping slots in product");
                    k[i] = x;
                }
            }
            let e = out.entry(k).or_insert_with(BigRational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

// ---------------------------------------------------------------------------
// Pair multiplicity spaces
// ---------------------------------------------------------------------------

/// Ordered basis of the multiplicity space of `target` in the product of
/// two modules, realized as highest-weight vectors on standalone slots
/// (first factor then second). The dimension always equals the tableau
/// count, which is asserted.
pub struct PairFamily {
    pub vectors: Vec<Vecq>,
}

type PairKey = (Partition, Partition, Partition, usize);
static PAIRS: OnceLock<Mutex<HashMap<PairKey, Arc<PairFamily>>>> = OnceLock::new();

pub fn pair_family(
    target: &Partition,
    a: &Partition,
    b: &Partition,
    letters: usize,
) -> Arc<PairFamily> {
    let lock = PAIRS.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (target.clone(), a.clone(), b.clone(), letters);
    if let Some(f) = lock.lock().unwrap().get(&key) {
        return f.clone();
    }
    let fam = Arc::new(build_pair_family(target, a, b, letters));
    lock.lock().unwrap().insert(key, fam.clone());
    fam
}

fn target_content(target: &Partition, letters: usize) -> Vec<u8> {
    let mut tc = vec![0u8; letters];
    for (i, p) in target.parts().iter().enumerate() {
        tc[i] = *p as u8;
    }
    tc
}

fn build_pair_family(target: &Partition, a: &Partition, b: &Partition, letters: usize) -> PairFamily {
    let expect = lr_coefficient(target, a, b) as usize;
    if expect == 0 {
        return PairFamily { vectors: vec![] };
    }
    let ma = module(a, letters);
    let mb = module(b, letters);
    let na = a.size() as usize;
    let ambient = na + b.size() as usize;
    let slots_a: Vec<usize> = (0..na).collect();
    let slots_b: Vec<usize> = (na..ambient).collect();
    let all: Vec<usize> = (0..ambient).collect();
    let tc = target_content(target, letters);

    // candidate basis of the weight subspace: products of weight vectors
    let mut candidates: Vec<Vecq> = Vec::new();
    for ia in 0..ma.dim() {
        let ca = ma.content(ia);
        let mut rest = tc.clone();
        let mut ok = true;
        for (i, v) in ca.iter().enumerate() {
            if rest[i] < *v {
                ok = false;
                break;
            }
            rest[i] -= *v;
        }
        if !ok {
            continue;
        }
        for &ib in mb.indices_of_content(&rest) {
            let va = place_vector(ma.basis_vector(ia), &slots_a, ambient);
            let vb = place_vector(mb.basis_vector(ib), &slots_b, ambient);
            candidates.push(merge_product(&va, &vb));
        }
    }

    // kernel of the raising operators on the candidate span
    let rows = target.len();
    let kernel = kernel_of_raising(&candidates, &all, rows, letters);
    assert_eq!(
        kernel.len(),
        expect,
        "multiplicity space dimension disagrees with the tableau count for {target:?} in {a:?} x {b:?}"
    );
    PairFamily { vectors: kernel }
}

/// Kernel of all relevant raising operators on the span of the given
/// linearly independent candidates, returned as explicit vectors in a
/// deterministic order.
fn kernel_of_raising(
    candidates: &[Vecq],
    slots: &[usize],
    target_rows: usize,
    _letters: usize,
) -> Vec<Vecq> {
    let ops: Vec<u8> = (0..target_rows.saturating_sub(1) as u8).collect();
    let mut stacked: Vec<(Vecq, Vec<BigRational>)> = Vec::new(); // (image row, combo)
    let mut kernel = Vec::new();
    let mut check = Echelon::new();
    for (ci, v) in candidates.iter().enumerate() {
        // stack the images of all raising operators into one sparse vector
        // by tagging the word with the operator index in an extra slot
        let mut img = Vecq::new();
        for (oi, &i) in ops.iter().enumerate() {
            let r = raise(v, slots, i);
            for (k, c) in r {
                let mut key = k;
                key.push(oi as u8);
                img.insert(key, c);
            }
        }
        let mut combo = vec![BigRational::zero(); candidates.len()];
        combo[ci] = BigRational::one();
        for (row, rc) in &stacked {
            let pivot = row.keys().next().unwrap();
            if let Some(c) = img.get(pivot).cloned() {
                let pv = row.get(pivot).unwrap();
                let f = c / pv;
                let neg = -f.clone();
                vec_add_scaled(&mut img, row, &neg);
                for (k, x) in rc.iter().enumerate() {
                    combo[k] -= &f * x;
                }
            }
        }
        if img.is_empty() {
            let mut vec = Vecq::new();
            for (k, c) in combo.iter().enumerate() {
                if !c.is_zero() {
                    vec_add_scaled(&mut vec, &candidates[k], c);
                }
            }
            if !vec.is_empty() {
                let (r, _) = check.reduce(&vec);
                if !r.is_empty() {
                    check.insert(r);
                    kernel.push(vec);
                }
            }
        } else {
            stacked.push((img, combo));
        }
    }
    kernel
}

// ---------------------------------------------------------------------------
// Chain families
// ---------------------------------------------------------------------------

fn slot_blocks(factors: &[Partition]) -> Vec<Vec<usize>> {
    let mut blocks = Vec::with_capacity(factors.len());
    let mut off = 0usize;
    for f in factors {
        let m = f.size() as usize;
        blocks.push((off..off + m).collect());
        off += m;
    }
    blocks
}

/// Decompose a vector in a product of standalone modules placed on the
/// given ambient slot blocks into the product basis, by leading-word
/// elimination. Exact and deterministic.
fn decompose_multi(
    v: &Vecq,
    modules: &[Arc<Module>],
    blocks: &[Vec<usize>],
) -> Vec<(Vec<usize>, BigRational)> {
    let mut rest = v.clone();
    let mut out = Vec::new();
    let mut guard = 0usize;
    while let Some(k) = rest.keys().next().cloned() {
        guard += 1;
        assert!(guard <= 2_000_000, "module decomposition does not terminate");
        let mut indices = Vec::with_capacity(modules.len());
        let mut lead = BigRational::one();
        for (m, block) in modules.iter().zip(blocks.iter()) {
            let sub: Word = block.iter().map(|&s| k[s]).collect();
            let i = m.index_by_lead(&sub);
            lead *= m.basis_vector(i).values().next().unwrap();
            indices.push(i);
        }
        let coeff = rest.get(&k).unwrap() / &lead;
        let mut prod: Option<Vecq> = None;
        for (gi, &bi) in indices.iter().enumerate() {
            let placed = place_vector(modules[gi].basis_vector(bi), &blocks[gi], k.len());
            prod = Some(match prod {
                None => placed,
                Some(p) => merge_product(&p, &placed),
            });
        }
        let neg = -coeff.clone();
        vec_add_scaled(&mut rest, &prod.unwrap(), &neg);
        out.push((indices, coeff));
    }
    out
}

/// The reference chain family of a multi-factor expansion: the left-nested
/// binary chain. Vectors are highest-weight realizations on the given
/// ambient slot blocks; order: intermediate shape ascending in generation
/// order, then the pair index, then the inner chain recursively.
fn reference_chain_at(
    target: &Partition,
    factors: &[Partition],
    blocks: &[Vec<usize>],
    ambient: usize,
    letters: usize,
) -> Vec<Vecq> {
    assert_eq!(factors.len(), blocks.len());
    match factors.len() {
        0 => {
            if target.is_empty() {
                let mut v = Vecq::new();
                v.insert(vec![FREE; ambient], BigRational::one());
                vec![v]
            } else {
                vec![]
            }
        }
        1 => {
            if target == &factors[0] {
                let m = module(&factors[0], letters);
                vec![place_vector(m.basis_vector(0), &blocks[0], ambient)]
            } else {
                vec![]
            }
        }
        _ => {
            let (last, init) = factors.split_last().unwrap();
            let (last_block, init_blocks) = blocks.split_last().unwrap();
            let init_total: u32 = init.iter().map(|f| f.size()).sum();
            let init_slots: Vec<usize> = init_blocks.iter().flatten().copied().collect();
            let mut out = Vec::new();
            for rho in generate_partitions(init_total) {
                if lr_coefficient(target, &rho, last) == 0 {
                    continue;
                }
                let inner = reference_chain_at(&rho, init, init_blocks, ambient, letters);
                if inner.is_empty() {
                    continue;
                }
                let pair = pair_family(target, &rho, last, letters);
                for pair_vec in &pair.vectors {
                    for inner_vec in &inner {
                        out.push(compose_pair(
                            pair_vec, &rho, inner_vec, &init_slots, last, last_block, ambient,
                            letters,
                        ));
                    }
                }
            }
            out
        }
    }
}

/// Compose an outer pair vector in S^rho ⊗ S^last with an inner chain
/// realizing rho: transport the rho module through the inner vector and
/// place the last factor on its block.
#[allow(clippy::too_many_arguments)]
fn compose_pair(
    pair_vec: &Vecq,
    rho: &Partition,
    inner_vec: &Vecq,
    inner_slots: &[usize],
    last: &Partition,
    last_block: &[usize],
    ambient: usize,
    letters: usize,
) -> Vecq {
    let m_rho = module(rho, letters);
    let m_last = module(last, letters);
    let nr = rho.size() as usize;
    let pair_blocks = vec![(0..nr).collect::<Vec<_>>(), (nr..nr + last.size() as usize).collect()];
    let modules = vec![m_rho.clone(), m_last.clone()];
    let decomp = decompose_multi(pair_vec, &modules, &pair_blocks);
    let mut transport = Transport::new(&m_rho, inner_vec.clone(), inner_slots.to_vec());
    let mut out = Vecq::new();
    for (indices, c) in decomp {
        let rimg = transport.image(indices[0]);
        let limg = place_vector(m_last.basis_vector(indices[1]), last_block, ambient);
        let prod = merge_product(&rimg, &limg);
        vec_add_scaled(&mut out, &prod, &c);
    }
    out
}

/// An ordered grouping of factor positions: groups in order, members in
/// increasing position order.
pub type Grouping = Vec<Vec<usize>>;

/// Chain label: (intermediate shape per group, outer chain index, inner
/// chain index per group).
pub type ChainLabel = (Vec<Partition>, usize, Vec<usize>);

pub struct ChainFamily {
    pub labels: Vec<ChainLabel>,
    pub vectors: Vec<Vecq>,
    pub rank: HashMap<ChainLabel, usize>,
}

fn profile_candidates(totals: &[u32]) -> Vec<Vec<Partition>> {
    if totals.is_empty() {
        return vec![vec![]];
    }
    let rest = profile_candidates(&totals[1..]);
    let mut out = Vec::new();
    for p in generate_partitions(totals[0]) {
        for r in &rest {
            let mut v = vec![p.clone()];
            v.extend(r.iter().cloned());
            out.push(v);
        }
    }
    out
}

/// The grouped chain family: expand each group by the reference chain of its
/// members, then expand the target over the group shapes by the reference
/// chain, transported through the group realizations.
pub fn grouped_chain(
    target: &Partition,
    factors: &[Partition],
    grouping: &Grouping,
    letters: usize,
) -> ChainFamily {
    let blocks = slot_blocks(factors);
    let ambient: usize = factors.iter().map(|f| f.size() as usize).sum();

    let mut labels = Vec::new();
    let mut vectors = Vec::new();

    let group_totals: Vec<u32> = grouping
        .iter()
        .map(|g| g.iter().map(|&i| factors[i].size()).sum())
        .collect();
    for profile in profile_candidates(&group_totals) {
        let mut inner_families: Vec<Vec<Vecq>> = Vec::with_capacity(grouping.len());
        let mut ok = true;
        for (gi, group) in grouping.iter().enumerate() {
            let group_factors: Vec<Partition> = group.iter().map(|&i| factors[i].clone()).collect();
            let group_blocks: Vec<Vec<usize>> = group.iter().map(|&i| blocks[i].clone()).collect();
            let fam =
                reference_chain_at(&profile[gi], &group_factors, &group_blocks, ambient, letters);
            if fam.is_empty() {
                ok = false;
                break;
            }
            inner_families.push(fam);
        }
        if !ok {
            continue;
        }
        let profile_blocks = slot_blocks(&profile);
        let profile_ambient: usize = profile.iter().map(|p| p.size() as usize).sum();
        let outer =
            reference_chain_at(target, &profile, &profile_blocks, profile_ambient, letters);
        if outer.is_empty() {
            continue;
        }
        let group_slotsets: Vec<Vec<usize>> = grouping
            .iter()
            .map(|g| {
                let mut s: Vec<usize> = g.iter().flat_map(|&i| blocks[i].clone()).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let profile_modules: Vec<Arc<Module>> =
            profile.iter().map(|p| module(p, letters)).collect();

        for (oi, outer_vec) in outer.iter().enumerate() {
            let decomp = decompose_multi(outer_vec, &profile_modules, &profile_blocks);
            let mut inner_choice = vec![0usize; grouping.len()];
            loop {
                // transports for the current inner choice
                let mut transports: Vec<Transport> = profile_modules
                    .iter()
                    .enumerate()
                    .map(|(gi, m)| {
                        Transport::new(
                            m,
                            inner_families[gi][inner_choice[gi]].clone(),
                            group_slotsets[gi].clone(),
                        )
                    })
                    .collect();
                let mut v = Vecq::new();
                for (indices, c) in &decomp {
                    let mut prod: Option<Vecq> = None;
                    for (gi, &bi) in indices.iter().enumerate() {
                        let img = transports[gi].image(bi);
                        prod = Some(match prod {
                            None => img,
                            Some(p) => merge_product(&p, &img),
                        });
                    }
                    let prod = prod.unwrap_or_else(|| {
                        let mut v = Vecq::new();
                        v.insert(vec![FREE; ambient], BigRational::one());
                        v
                    });
                    vec_add_scaled(&mut v, &prod, c);
                }
                labels.push((profile.clone(), oi, inner_choice.clone()));
                vectors.push(v);

                let mut pos = 0usize;
                loop {
                    if pos == grouping.len() {
                        break;
                    }
                    inner_choice[pos] += 1;
                    if inner_choice[pos] < inner_families[pos].len() {
                        break;
                    }
                    inner_choice[pos] = 0;
                    pos += 1;
                }
                if pos == grouping.len() {
                    break;
                }
            }
        }
    }
    let rank = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    ChainFamily { labels, vectors, rank }
}

// ---------------------------------------------------------------------------
// Recoupling
// ---------------------------------------------------------------------------

/// Recoupling between two groupings of the same expansion: `matrix`
/// expresses each source-grouping chain vector in the target-grouping
/// chain basis (column j holds the coordinates of source vector j).
pub struct Recoupling {
    pub src: ChainFamily,
    pub tgt: ChainFamily,
    pub matrix: RatMat,
}

type RecoupleKey = (Partition, Vec<Partition>, Grouping, Grouping, usize);
static RECOUPLINGS: OnceLock<Mutex<HashMap<RecoupleKey, Arc<Recoupling>>>> = OnceLock::new();

pub fn recouple(
    target: &Partition,
    factors: &[Partition],
    g_src: &Grouping,
    g_tgt: &Grouping,
    letters: usize,
) -> Arc<Recoupling> {
    let lock = RECOUPLINGS.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (target.clone(), factors.to_vec(), g_src.clone(), g_tgt.clone(), letters);
    if let Some(r) = lock.lock().unwrap().get(&key) {
        return r.clone();
    }
    let src = grouped_chain(target, factors, g_src, letters);
    let tgt = grouped_chain(target, factors, g_tgt, letters);
    assert_eq!(
        src.vectors.len(),
        tgt.vectors.len(),
        "chain families of unequal dimension for {target:?} over {factors:?}"
    );
    let matrix = if src.vectors.is_empty() {
        RatMat::zero(0, 0)
    } else {
        solve_change_of_basis(&tgt.vectors, &src.vectors)
    };
    let r = Arc::new(Recoupling { src, tgt, matrix });
    lock.lock().unwrap().insert(key, r.clone());
    r
}

/// Solve B · R = A, where the columns of A and B span the same space.
fn solve_change_of_basis(b: &[Vecq], a: &[Vecq]) -> RatMat {
    let n = b.len();
    let mut ech: Vec<(Vecq, Vec<BigRational>)> = Vec::new();
    for (i, v) in b.iter().enumerate() {
        let mut r = v.clone();
        let mut combo = vec![BigRational::zero(); n];
        combo[i] = BigRational::one();
        for (row, rc) in &ech {
            let pivot = row.keys().next().unwrap();
            if let Some(c) = r.get(pivot).cloned() {
                let pv = row.get(pivot).unwrap();
                let f = c / pv;
                let neg = -f.clone();
                vec_add_scaled(&mut r, row, &neg);
                for (k, x) in rc.iter().enumerate() {
                    combo[k] = &combo[k] - &(&f * x);
                }
            }
        }
        assert!(!r.is_empty(), "chain family is linearly dependent");
        ech.push((r, combo));
    }
    let mut out = RatMat::zero(n, n);
    for (j, v) in a.iter().enumerate() {
        let mut r = v.clone();
        let mut coeffs = vec![BigRational::zero(); n];
        for (row, rc) in &ech {
            let pivot = row.keys().next().unwrap();
            if let Some(c) = r.get(pivot).cloned() {
                let pv = row.get(pivot).unwrap();
                let f = c / pv;
                let neg = -f.clone();
                vec_add_scaled(&mut r, row, &neg);
                for (k, x) in rc.iter().enumerate() {
                    coeffs[k] = &coeffs[k] + &(&f * x);
                }
            }
        }
        assert!(r.is_empty(), "chain vector does not lie in the span of the target family");
        for (i, c) in coeffs.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twovect::ratio;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn module_dimensions() {
        assert_eq!(module(&p(&[1]), 3).dim(), 3);
        assert_eq!(module(&p(&[2]), 3).dim(), 6);
        assert_eq!(module(&p(&[1, 1]), 3).dim(), 3);
        assert_eq!(module(&p(&[2, 1]), 3).dim(), 8);
        assert_eq!(module(&p(&[1, 1, 1]), 3).dim(), 1);
        assert_eq!(module(&Partition::empty(), 3).dim(), 1);
    }

    #[test]
    fn pair_dimensions_match_tableau_counts() {
        for n in 2..=4u32 {
            for lam in generate_partitions(n) {
                for a in 0..=n {
                    for mu in generate_partitions(a) {
                        for nu in generate_partitions(n - a) {
                            let fam = pair_family(&lam, &mu, &nu, n as usize);
                            assert_eq!(
                                fam.vectors.len() as u64,
                                lr_coefficient(&lam, &mu, &nu),
                                "{lam:?} in {mu:?} x {nu:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn swap_recoupling_signs() {
        let factors = vec![p(&[1]), p(&[1])];
        let g12: Grouping = vec![vec![0], vec![1]];
        let g21: Grouping = vec![vec![1], vec![0]];
        let r_sym = recouple(&p(&[2]), &factors, &g12, &g21, 2);
        assert_eq!(r_sym.matrix.get(0, 0), &ratio(1));
        let r_alt = recouple(&p(&[1, 1]), &factors, &g12, &g21, 2);
        assert_eq!(r_alt.matrix.get(0, 0), &ratio(-1));
    }

    #[test]
    fn recoupling_same_grouping_is_identity() {
        let factors = vec![p(&[1]), p(&[2])];
        let g: Grouping = vec![vec![0], vec![1]];
        let r = recouple(&p(&[2, 1]), &factors, &g, &g, 3);
        assert_eq!(r.matrix.rows(), 1);
        assert_eq!(r.matrix.get(0, 0), &ratio(1));
    }

    #[test]
    fn recoupling_invertible_on_multiplicity_two() {
        let factors = vec![p(&[2, 1]), p(&[2, 1])];
        let g12: Grouping = vec![vec![0], vec![1]];
        let g21: Grouping = vec![vec![1], vec![0]];
        let r = recouple(&p(&[3, 2, 1]), &factors, &g12, &g21, 6);
        assert_eq!(r.matrix.rows(), 2);
        assert!(r.matrix.is_invertible());
    }

    #[test]
    fn associativity_recoupling_invertible() {
        // three boxes regrouped: ((1)(1))(1) versus (1)((1)(1))
        let factors = vec![p(&[1]), p(&[1]), p(&[1])];
        let g_left: Grouping = vec![vec![0, 1], vec![2]];
        let g_right: Grouping = vec![vec![0], vec![1, 2]];
        for lam in generate_partitions(3) {
            let r = recouple(&lam, &factors, &g_left, &g_right, 3);
            let d = r.matrix.rows();
            if d > 0 {
                assert!(r.matrix.is_invertible(), "at {lam:?}");
            }
        }
    }
}
