//! A fully explicit, finite, based model of graded 2-vector spaces.
//!
//! Objects are finite lists of simple labels with degrees; 1-morphisms are
//! multiplicity matrices over the naturals; 2-morphisms are blockwise
//! rational matrices. Composite 1-morphisms are always handled as *words*
//! of atoms with one global enumeration rule for their multiplicity
//! spaces: paths through a word are ordered lexicographically by the
//! outermost intermediate simple, then the outermost factor index, then
//! recursively through the prefix. Under this rule unitors and the
//! associators of composition are literally identities, and 2-morphisms
//! whiskered into a word are computed by `word_two_mor` against the same
//! enumeration. Transpose adjunctions carry explicit diagonal units and
//! counits; mates and Beck-Chevalley checks are built from those.

mod cube;
mod matrix;
pub mod sampling;

pub use cube::{check_cube_commutes, cube_mate, Cube, MateDirection};
pub use matrix::{ratio, ratio_frac, NatMat, RatMat};

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{CoreError, Result};

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simple {
    pub label: String,
    pub degree: u32,
}

/// An object of the model: an ordered list of simples with degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasedCat {
    pub simples: Vec<Simple>,
}

impl BasedCat {
    pub fn new(simples: Vec<Simple>) -> Arc<Self> {
        Arc::new(BasedCat { simples })
    }

    /// n simples, all in degree 0; labels "0".."n-1".
    pub fn ungraded(n: usize) -> Arc<Self> {
        Self::new(
            (0..n)
                .map(|i| Simple { label: i.to_string(), degree: 0 })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.simples.len()
    }
}

// ---------------------------------------------------------------------------
// 1-morphisms
// ---------------------------------------------------------------------------

/// A 1-morphism: a multiplicity matrix indexed (target simple, source
/// simple).
#[derive(Clone, Serialize)]
pub struct OneMor {
    pub source: Arc<BasedCat>,
    pub target: Arc<BasedCat>,
    pub mult: NatMat,
}

impl PartialEq for OneMor {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.mult == other.mult
    }
}
impl Eq for OneMor {}

impl std::fmt::Debug for OneMor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OneMor {}x{} {:?}",
            self.target.dim(),
            self.source.dim(),
            self.mult
        )
    }
}

impl OneMor {
    pub fn new(source: Arc<BasedCat>, target: Arc<BasedCat>, mult: NatMat) -> Result<Self> {
        if mult.rows() != target.dim() || mult.cols() != source.dim() {
            return Err(CoreError::BlockShapeMismatch(format!(
                "multiplicity matrix is {}x{} but categories have {} and {} simples",
                mult.rows(),
                mult.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(OneMor { source, target, mult })
    }

    pub fn identity(cat: &Arc<BasedCat>) -> Self {
        OneMor {
            source: cat.clone(),
            target: cat.clone(),
            mult: NatMat::identity(cat.dim()),
        }
    }

    pub fn transpose(&self) -> OneMor {
        OneMor {
            source: self.target.clone(),
            target: self.source.clone(),
            mult: self.mult.transpose(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.mult == NatMat::identity(self.source.dim())
    }

    /// Degree shifts realized by nonzero entries: (min, max) of
    /// deg(target simple) - deg(source simple). None for the zero map.
    pub fn degree_window(&self) -> Option<(i64, i64)> {
        let mut window: Option<(i64, i64)> = None;
        for t in 0..self.target.dim() {
            for s in 0..self.source.dim() {
                if self.mult.get(t, s) != 0 {
                    let d = self.target.simples[t].degree as i64
                        - self.source.simples[s].degree as i64;
                    window = Some(match window {
                        None => (d, d),
                        Some((lo, hi)) => (lo.min(d), hi.max(d)),
                    });
                }
            }
        }
        window
    }

    /// Sum of 1-morphisms with the same endpoints, scaled by a multiplicity.
    pub fn scaled_add(&self, c: u64, other: &OneMor) -> Result<OneMor> {
        if self.source != other.source || self.target != other.target {
            return Err(CoreError::EndpointMismatch("sum of 1-morphisms".into()));
        }
        Ok(OneMor {
            source: self.source.clone(),
            target: self.target.clone(),
            mult: self.mult.scaled_add(c, &other.mult),
        })
    }
}

/// Composite g∘f (f applied first).
pub fn compose1(g: &OneMor, f: &OneMor) -> Result<OneMor> {
    if f.target != g.source {
        return Err(CoreError::EndpointMismatch(
            "compose1: target of the first factor differs from source of the second".into(),
        ));
    }
    Ok(OneMor {
        source: f.source.clone(),
        target: g.target.clone(),
        mult: g.mult.mul(&f.mult),
    })
}

/// Composite of a word of 1-morphisms; word[0] is applied first. The empty
/// word is the identity at `at`.
pub fn compose_word(at: &Arc<BasedCat>, word: &[&OneMor]) -> Result<OneMor> {
    let mut acc = OneMor::identity(at);
    for w in word {
        acc = compose1(w, &acc)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Canonical path enumeration
// ---------------------------------------------------------------------------

/// A path through a word of 1-morphisms: boundary simples (including the
/// endpoints) and one factor index per atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub bounds: Vec<u32>,
    pub factors: Vec<u32>,
}

/// All paths through `word` from source simple `s` to target simple `t`,
/// in canonical order: outermost boundary ascending, outermost factor
/// ascending, then the prefix recursively.
pub fn enumerate_paths(word: &[&OneMor], s: usize, t: usize) -> Vec<Path> {
    let n = word.len();
    if n == 0 {
        return if s == t {
            vec![Path { bounds: vec![s as u32], factors: vec![] }]
        } else {
            vec![]
        };
    }
    let last = word[n - 1];
    let mut out = Vec::new();
    for j in 0..last.source.dim() {
        let m = last.mult.get(t, j);
        if m == 0 {
            continue;
        }
        let subs = enumerate_paths(&word[..n - 1], s, j);
        if subs.is_empty() {
            continue;
        }
        for a in 0..m {
            for sub in &subs {
                let mut bounds = sub.bounds.clone();
                bounds.push(t as u32);
                let mut factors = sub.factors.clone();
                factors.push(a as u32);
                out.push(Path { bounds, factors });
            }
        }
    }
    out
}

fn rank_map(word: &[&OneMor], s: usize, t: usize) -> HashMap<Path, usize> {
    enumerate_paths(word, s, t)
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect()
}

// ---------------------------------------------------------------------------
// 2-morphisms
// ---------------------------------------------------------------------------

/// A 2-morphism between parallel 1-morphisms: for each (target simple,
/// source simple) a rational block of shape
/// target.mult[t,s] × source.mult[t,s].
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TwoMor {
    pub source: OneMor,
    pub target: OneMor,
    blocks: Vec<RatMat>,
}

impl std::fmt::Debug for TwoMor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TwoMor with {} blocks", self.blocks.len())
    }
}

impl TwoMor {
    pub fn new(source: OneMor, target: OneMor, blocks: Vec<RatMat>) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(CoreError::EndpointMismatch(
                "2-morphism endpoints disagree".into(),
            ));
        }
        let nt = source.target.dim();
        let ns = source.source.dim();
        if blocks.len() != nt * ns {
            return Err(CoreError::BlockShapeMismatch(format!(
                "expected {} blocks, got {}",
                nt * ns,
                blocks.len()
            )));
        }
        for t in 0..nt {
            for s in 0..ns {
                let b = &blocks[t * ns + s];
                let want_rows = target.mult.get(t, s) as usize;
                let want_cols = source.mult.get(t, s) as usize;
                if b.rows() != want_rows || b.cols() != want_cols {
                    return Err(CoreError::BlockShapeMismatch(format!(
                        "block ({t},{s}) is {}x{}, expected {}x{}",
                        b.rows(),
                        b.cols(),
                        want_rows,
                        want_cols
                    )));
                }
            }
        }
        Ok(TwoMor { source, target, blocks })
    }

    pub fn identity(f: &OneMor) -> Self {
        let nt = f.target.dim();
        let ns = f.source.dim();
        let blocks = (0..nt * ns)
            .map(|i| {
                let (t, s) = (i / ns, i % ns);
                RatMat::identity(f.mult.get(t, s) as usize)
            })
            .collect();
        TwoMor { source: f.clone(), target: f.clone(), blocks }
    }

    /// The identity-shaped 2-morphism between possibly different matrices:
    /// ones on the overlapping diagonal of each block. Coincides with the
    /// identity when the matrices agree; used to represent a structural
    /// identification chosen positionally.
    pub fn positional(source: &OneMor, target: &OneMor) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(CoreError::EndpointMismatch(
                "positional 2-morphism endpoints disagree".into(),
            ));
        }
        let nt = source.target.dim();
        let ns = source.source.dim();
        let blocks = (0..nt * ns)
            .map(|i| {
                let (t, s) = (i / ns, i % ns);
                RatMat::partial_identity(
                    target.mult.get(t, s) as usize,
                    source.mult.get(t, s) as usize,
                )
            })
            .collect();
        Ok(TwoMor { source: source.clone(), target: target.clone(), blocks })
    }

    pub fn block(&self, t: usize, s: usize) -> &RatMat {
        &self.blocks[t * self.source.source.dim() + s]
    }

    pub fn blocks(&self) -> &[RatMat] {
        &self.blocks
    }

    pub fn neg(&self) -> TwoMor {
        TwoMor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.neg()).collect(),
        }
    }

    /// Blockwise equality of the underlying linear data.
    pub fn same_blocks(&self, other: &TwoMor) -> bool {
        self.blocks == other.blocks
    }
}

/// Vertical composition b∘a, requiring a.target == b.source exactly.
pub fn vcompose(b: &TwoMor, a: &TwoMor) -> Result<TwoMor> {
    if a.target != b.source {
        return Err(CoreError::EndpointMismatch(
            "vertical composition: middle 1-morphisms differ".into(),
        ));
    }
    let ns = a.source.source.dim();
    let nt = a.source.target.dim();
    let mut blocks = Vec::with_capacity(ns * nt);
    for t in 0..nt {
        for s in 0..ns {
            blocks.push(b.block(t, s).mul(a.block(t, s)));
        }
    }
    TwoMor::new(a.source.clone(), b.target.clone(), blocks)
}

// ---------------------------------------------------------------------------
// Whiskering along words
// ---------------------------------------------------------------------------

/// One aligned segment of a 2-morphism between words: either an identity
/// stretch (same atoms on both sides) or a face whose source and target
/// are the composites of the given atom words.
pub enum Seg<'a> {
    Id(Vec<&'a OneMor>),
    Face {
        face: &'a TwoMor,
        src: Vec<&'a OneMor>,
        tgt: Vec<&'a OneMor>,
    },
}

impl<'a> Seg<'a> {
    fn in_cat(&self) -> &Arc<BasedCat> {
        match self {
            Seg::Id(atoms) => &atoms.first().expect("identity segment is nonempty").source,
            Seg::Face { face, .. } => &face.source.source,
        }
    }

    fn out_cat(&self) -> &Arc<BasedCat> {
        match self {
            Seg::Id(atoms) => &atoms.last().expect("identity segment is nonempty").target,
            Seg::Face { face, .. } => &face.source.target,
        }
    }

    fn src_atoms(&self) -> &[&'a OneMor] {
        match self {
            Seg::Id(atoms) => atoms,
            Seg::Face { src, .. } => src,
        }
    }

    fn tgt_atoms(&self) -> &[&'a OneMor] {
        match self {
            Seg::Id(atoms) => atoms,
            Seg::Face { tgt, .. } => tgt,
        }
    }
}

/// Assemble a 2-morphism between canonical word composites from aligned
/// segments: identity stretches contribute Kronecker deltas, face segments
/// contribute their blocks re-indexed through the canonical enumeration of
/// their own words. Source and target paths interact only when they agree
/// on every segment joint.
pub fn word_two_mor(segs: &[Seg]) -> Result<TwoMor> {
    if segs.is_empty() {
        return Err(CoreError::EndpointMismatch("empty segment list".into()));
    }
    // validate the chain and the face contracts
    for w in segs.windows(2) {
        if w[0].out_cat() != w[1].in_cat() {
            return Err(CoreError::EndpointMismatch(
                "segments do not chain".into(),
            ));
        }
    }
    for seg in segs {
        if let Seg::Face { face, src, tgt } = seg {
            let src_c = compose_word(&face.source.source, src)?;
            let tgt_c = compose_word(&face.source.source, tgt)?;
            if src_c != face.source || tgt_c != face.target {
                return Err(CoreError::BlockShapeMismatch(
                    "face does not match its declared source/target words".into(),
                ));
            }
        }
    }

    let source_cat = segs[0].in_cat().clone();
    let target_cat = segs[segs.len() - 1].out_cat().clone();

    let src_word: Vec<&OneMor> = segs.iter().flat_map(|s| s.src_atoms().iter().copied()).collect();
    let tgt_word: Vec<&OneMor> = segs.iter().flat_map(|s| s.tgt_atoms().iter().copied()).collect();
    let source = compose_word(&source_cat, &src_word)?;
    let target = compose_word(&source_cat, &tgt_word)?;

    // atom offsets of the segment boundaries in each word
    let mut src_off = vec![0usize];
    let mut tgt_off = vec![0usize];
    for seg in segs {
        src_off.push(src_off.last().unwrap() + seg.src_atoms().len());
        tgt_off.push(tgt_off.last().unwrap() + seg.tgt_atoms().len());
    }

    // rank maps for face sub-words, memoized per (segment, endpoint pair)
    let mut face_ranks: HashMap<(usize, bool, usize, usize), Arc<HashMap<Path, usize>>> =
        HashMap::new();

    let ns = source_cat.dim();
    let nt = target_cat.dim();
    let mut blocks = Vec::with_capacity(ns * nt);
    for t in 0..nt {
        for s in 0..ns {
            let sdim = source.mult.get(t, s) as usize;
            let tdim = target.mult.get(t, s) as usize;
            if sdim == 0 || tdim == 0 {
                blocks.push(RatMat::zero(tdim, sdim));
                continue;
            }
            let spaths = enumerate_paths(&src_word, s, t);
            let tpaths = enumerate_paths(&tgt_word, s, t);
            debug_assert_eq!(spaths.len(), sdim);
            debug_assert_eq!(tpaths.len(), tdim);
            let mut block = RatMat::zero(tdim, sdim);
            for (ti, tp) in tpaths.iter().enumerate() {
                for (si, sp) in spaths.iter().enumerate() {
                    // joints must agree between the two paths
                    let mut joint_ok = true;
                    for k in 1..segs.len() {
                        if sp.bounds[src_off[k]] != tp.bounds[tgt_off[k]] {
                            joint_ok = false;
                            break;
                        }
                    }
                    if !joint_ok {
                        continue;
                    }
                    let mut entry = ratio(1);
                    for (k, seg) in segs.iter().enumerate() {
                        let sin = sp.bounds[src_off[k]] as usize;
                        let sout = sp.bounds[src_off[k + 1]] as usize;
                        match seg {
                            Seg::Id(_) => {
                                let same = sp.bounds[src_off[k]..=src_off[k + 1]]
                                    == tp.bounds[tgt_off[k]..=tgt_off[k + 1]]
                                    && sp.factors[src_off[k]..src_off[k + 1]]
                                        == tp.factors[tgt_off[k]..tgt_off[k + 1]];
                                if !same {
                                    entry = ratio(0);
                                    break;
                                }
                            }
                            Seg::Face { face, src, tgt } => {
                                let srank = face_ranks
                                    .entry((k, false, sout, sin))
                                    .or_insert_with(|| Arc::new(rank_map(src, sin, sout)))
                                    .clone();
                                let trank = face_ranks
                                    .entry((k, true, sout, sin))
                                    .or_insert_with(|| Arc::new(rank_map(tgt, sin, sout)))
                                    .clone();
                                let sub_s = Path {
                                    bounds: sp.bounds[src_off[k]..=src_off[k + 1]].to_vec(),
                                    factors: sp.factors[src_off[k]..src_off[k + 1]].to_vec(),
                                };
                                let sub_t = Path {
                                    bounds: tp.bounds[tgt_off[k]..=tgt_off[k + 1]].to_vec(),
                                    factors: tp.factors[tgt_off[k]..tgt_off[k + 1]].to_vec(),
                                };
                                let (Some(&sr), Some(&tr)) = (srank.get(&sub_s), trank.get(&sub_t))
                                else {
                                    entry = ratio(0);
                                    break;
                                };
                                let v = face.block(sout, sin).get(tr, sr);
                                if num_traits::Zero::is_zero(v) {
                                    entry = ratio(0);
                                    break;
                                }
                                entry *= v.clone();
                            }
                        }
                    }
                    if !num_traits::Zero::is_zero(&entry) {
                        block.set(ti, si, entry);
                    }
                }
            }
            blocks.push(block);
        }
    }
    TwoMor::new(source, target, blocks)
}

/// Horizontal composite of two 2-morphisms treated as single atoms:
/// hcompose(b, a) is "b after a".
pub fn hcompose(b: &TwoMor, a: &TwoMor) -> Result<TwoMor> {
    word_two_mor(&[
        Seg::Face { face: a, src: vec![&a.source], tgt: vec![&a.target] },
        Seg::Face { face: b, src: vec![&b.source], tgt: vec![&b.target] },
    ])
}

/// Post-compose with a 1-morphism: h∘a as a 2-morphism h∘src(a) ⇒ h∘tgt(a).
pub fn whisker_left(h: &OneMor, a: &TwoMor) -> Result<TwoMor> {
    word_two_mor(&[
        Seg::Face { face: a, src: vec![&a.source], tgt: vec![&a.target] },
        Seg::Id(vec![h]),
    ])
}

/// Pre-compose with a 1-morphism: a∘g.
pub fn whisker_right(a: &TwoMor, g: &OneMor) -> Result<TwoMor> {
    word_two_mor(&[
        Seg::Id(vec![g]),
        Seg::Face { face: a, src: vec![&a.source], tgt: vec![&a.target] },
    ])
}

// ---------------------------------------------------------------------------
// Transpose adjunctions
// ---------------------------------------------------------------------------

/// Unit of (w ⊣ wᵀ) for the composite w of `word`: the diagonal
/// coevaluation Id ⇒ wᵀ∘w, expressed against the word w ++ [wᵀ].
pub fn word_unit(at: &Arc<BasedCat>, word: &[&OneMor]) -> Result<TwoMor> {
    let w = compose_word(at, word)?;
    let wt = w.transpose();
    diag_face(at, word, &wt, DiagKind::Unit)
}

/// Counit of (w ⊣ wᵀ): the evaluation w∘wᵀ ⇒ Id against [wᵀ] ++ w.
pub fn word_counit(at: &Arc<BasedCat>, word: &[&OneMor]) -> Result<TwoMor> {
    let w = compose_word(at, word)?;
    let wt = w.transpose();
    diag_face(at, word, &wt, DiagKind::Counit)
}

/// Unit of (wᵀ ⊣ w): Id ⇒ w∘wᵀ against [wᵀ] ++ w.
pub fn word_unit_op(at: &Arc<BasedCat>, word: &[&OneMor]) -> Result<TwoMor> {
    let w = compose_word(at, word)?;
    let wt = w.transpose();
    diag_face(at, word, &wt, DiagKind::UnitOp)
}

/// Counit of (wᵀ ⊣ w): wᵀ∘w ⇒ Id against w ++ [wᵀ].
pub fn word_counit_op(at: &Arc<BasedCat>, word: &[&OneMor]) -> Result<TwoMor> {
    let w = compose_word(at, word)?;
    let wt = w.transpose();
    diag_face(at, word, &wt, DiagKind::CounitOp)
}

enum DiagKind {
    Unit,     // Id_A ⇒ wᵀ∘w      word ++ [wᵀ]
    Counit,   // w∘wᵀ ⇒ Id_B      [wᵀ] ++ word
    UnitOp,   // Id_B ⇒ w∘wᵀ      [wᵀ] ++ word
    CounitOp, // wᵀ∘w ⇒ Id_A      word ++ [wᵀ]
}

/// Shared construction of the four diagonal faces: the transpose factor
/// index is identified with the canonical rank of the path it mirrors.
fn diag_face(
    at: &Arc<BasedCat>,
    word: &[&OneMor],
    wt: &OneMor,
    kind: DiagKind,
) -> Result<TwoMor> {
    let a_cat = at.clone();
    let b_cat = wt.source.clone(); // target category of w

    // the long word and the object category of the face
    let (long, obj_cat): (Vec<&OneMor>, Arc<BasedCat>) = match kind {
        DiagKind::Unit | DiagKind::CounitOp => {
            let mut v: Vec<&OneMor> = word.to_vec();
            v.push(wt);
            (v, a_cat.clone())
        }
        DiagKind::Counit | DiagKind::UnitOp => {
            let mut v: Vec<&OneMor> = vec![wt];
            v.extend_from_slice(word);
            (v, b_cat.clone())
        }
    };
    let long_c = compose_word(&obj_cat, &long)?;
    let id = OneMor::identity(&obj_cat);

    let n = obj_cat.dim();
    let mut blocks = Vec::with_capacity(n * n);
    // rank maps for the inner word per (start, end) simple pair
    let mut ranks: HashMap<(usize, usize), HashMap<Path, usize>> = HashMap::new();

    let is_unit = matches!(kind, DiagKind::Unit | DiagKind::UnitOp);
    for t in 0..n {
        for s in 0..n {
            let (rows, cols) = if is_unit {
                (long_c.mult.get(t, s) as usize, if t == s { 1 } else { 0 })
            } else {
                (if t == s { 1 } else { 0 }, long_c.mult.get(t, s) as usize)
            };
            let mut block = RatMat::zero(rows, cols);
            if t == s && rows * cols > 0 {
                let paths = enumerate_paths(&long, s, t);
                for (pi, p) in paths.iter().enumerate() {
                    // split off the transpose step and the mirrored word path
                    let (inner, tfac, j0, j1) = match kind {
                        DiagKind::Unit | DiagKind::CounitOp => {
                            let m = word.len();
                            let inner = Path {
                                bounds: p.bounds[..=m].to_vec(),
                                factors: p.factors[..m].to_vec(),
                            };
                            // wᵀ step: from bounds[m] to t; its factor indexes
                            // w's space from t to bounds[m]... w maps A→B, the
                            // inner path runs s → i in B; the transpose runs
                            // i → s with factor over w.mult[i, s].
                            (inner, p.factors[m], p.bounds[0] as usize, p.bounds[m] as usize)
                        }
                        DiagKind::Counit | DiagKind::UnitOp => {
                            let inner = Path {
                                bounds: p.bounds[1..].to_vec(),
                                factors: p.factors[1..].to_vec(),
                            };
                            // wᵀ is the first step: from s to bounds[1]
                            (inner, p.factors[0], p.bounds[1] as usize, p.bounds[0] as usize)
                        }
                    };
                    // the mirrored word path runs j0 → j1 through `word`
                    let rank = ranks
                        .entry((j0, j1))
                        .or_insert_with(|| rank_map(word, j0, j1));
                    if let Some(&r) = rank.get(&inner) {
                        if r as u32 == tfac {
                            if is_unit {
                                block.set(pi, 0, ratio(1));
                            } else {
                                block.set(0, pi, ratio(1));
                            }
                        }
                    }
                }
            }
            blocks.push(block);
        }
    }

    match kind {
        DiagKind::Unit | DiagKind::UnitOp => TwoMor::new(id, long_c, blocks),
        DiagKind::Counit | DiagKind::CounitOp => TwoMor::new(long_c, id, blocks),
    }
}

/// The transpose adjunction for a single 1-morphism: F ⊣ Fᵀ with the
/// diagonal unit and counit.
pub struct Adjunction {
    pub left: OneMor,
    pub right: OneMor,
    pub unit: TwoMor,
    pub counit: TwoMor,
}

pub fn transpose_adjunction(f: &OneMor) -> Adjunction {
    let unit = word_unit(&f.source, &[f]).expect("unit construction");
    let counit = word_counit(&f.source, &[f]).expect("counit construction");
    Adjunction { left: f.clone(), right: f.transpose(), unit, counit }
}

/// Check both triangle identities of the transpose adjunction of a
/// 1-morphism, exactly.
pub fn triangle_identities_hold(f: &OneMor) -> Result<bool> {
    let adj = transpose_adjunction(f);
    let ft = &adj.right;
    let step1 = word_two_mor(&[
        Seg::Face { face: &adj.unit, src: vec![], tgt: vec![f, ft] },
        Seg::Id(vec![f]),
    ])?;
    let step2 = word_two_mor(&[
        Seg::Id(vec![f]),
        Seg::Face { face: &adj.counit, src: vec![ft, f], tgt: vec![] },
    ])?;
    let first = vcompose(&step2, &step1)?.same_blocks(&TwoMor::identity(f));
    let step1 = word_two_mor(&[
        Seg::Id(vec![ft]),
        Seg::Face { face: &adj.unit, src: vec![], tgt: vec![f, ft] },
    ])?;
    let step2 = word_two_mor(&[
        Seg::Face { face: &adj.counit, src: vec![ft, f], tgt: vec![] },
        Seg::Id(vec![ft]),
    ])?;
    let second = vcompose(&step2, &step1)?.same_blocks(&TwoMor::identity(ft));
    Ok(first && second)
}

// ---------------------------------------------------------------------------
// Quintets and mates
// ---------------------------------------------------------------------------

/// A square of 1-morphism words with a 2-morphism between the two
/// composites:
///
/// ```text
///        g
///    A ────→ B
///  f │    α   │ h        α : h∘g ⇒ i∘f
///    ↓        ↓
///    C ────→ D
///        i
/// ```
///
/// Each side is a word of atoms; `alpha` runs between the canonical
/// composites of g ++ h and f ++ i.
#[derive(Clone, Serialize)]
pub struct Quintet {
    pub f: Vec<OneMor>,
    pub g: Vec<OneMor>,
    pub h: Vec<OneMor>,
    pub i: Vec<OneMor>,
    pub alpha: TwoMor,
}

impl Quintet {
    pub fn new(
        f: Vec<OneMor>,
        g: Vec<OneMor>,
        h: Vec<OneMor>,
        i: Vec<OneMor>,
        alpha: TwoMor,
    ) -> Result<Self> {
        let a_cat = alpha.source.source.clone();
        let gh: Vec<&OneMor> = g.iter().chain(h.iter()).collect();
        let fi: Vec<&OneMor> = f.iter().chain(i.iter()).collect();
        let top = compose_word(&a_cat, &gh)?;
        let bot = compose_word(&a_cat, &fi)?;
        if alpha.source != top {
            return Err(CoreError::EndpointMismatch(
                "quintet: alpha source is not the composite of g and h".into(),
            ));
        }
        if alpha.target != bot {
            return Err(CoreError::EndpointMismatch(
                "quintet: alpha target is not the composite of f and i".into(),
            ));
        }
        Ok(Quintet { f, g, h, i, alpha })
    }

    /// Quintet with atomic sides.
    pub fn from_atoms(f: OneMor, g: OneMor, h: OneMor, i: OneMor, alpha: TwoMor) -> Result<Self> {
        Self::new(vec![f], vec![g], vec![h], vec![i], alpha)
    }

    fn source_cat(&self) -> Arc<BasedCat> {
        self.alpha.source.source.clone()
    }
}

/// Right mate: replace the verticals f, h by their transposes using the
/// diagonal adjunction data. The resulting 2-morphism is the three-step
/// composite g∘fᵀ ⇒ hᵀ∘h∘g∘fᵀ ⇒ hᵀ∘i∘f∘fᵀ ⇒ hᵀ∘i.
pub fn right_mate(q: &Quintet) -> Result<Quintet> {
    let a_cat = q.source_cat();
    let f_atoms: Vec<&OneMor> = q.f.iter().collect();
    let h_atoms: Vec<&OneMor> = q.h.iter().collect();
    let b_cat = q
        .g
        .last()
        .map(|m| m.target.clone())
        .unwrap_or_else(|| a_cat.clone());

    let f_mat = compose_word(&a_cat, &f_atoms)?;
    let h_mat = compose_word(&b_cat, &h_atoms)?;
    let f_r = f_mat.transpose();
    let h_r = h_mat.transpose();

    let unit_h = word_unit(&b_cat, &h_atoms)?; // Id_B ⇒ h.word ++ [h_r]
    let counit_f = word_counit(&a_cat, &f_atoms)?; // [f_r] ++ f.word ⇒ Id_C

    let g_refs: Vec<&OneMor> = q.g.iter().collect();
    let i_refs: Vec<&OneMor> = q.i.iter().collect();

    // step 1: insert h∘hᵀ after g
    let mut seg1: Vec<Seg> = vec![Seg::Id(vec![&f_r])];
    if !g_refs.is_empty() {
        seg1.push(Seg::Id(g_refs.clone()));
    }
    let mut unit_tgt: Vec<&OneMor> = h_atoms.clone();
    unit_tgt.push(&h_r);
    seg1.push(Seg::Face { face: &unit_h, src: vec![], tgt: unit_tgt });
    let step1 = word_two_mor(&seg1)?;

    // step 2: whisker alpha
    let gh: Vec<&OneMor> = g_refs.iter().chain(h_atoms.iter()).copied().collect();
    let fi: Vec<&OneMor> = f_atoms.iter().chain(i_refs.iter()).copied().collect();
    let step2 = word_two_mor(&[
        Seg::Id(vec![&f_r]),
        Seg::Face { face: &q.alpha, src: gh, tgt: fi },
        Seg::Id(vec![&h_r]),
    ])?;

    // step 3: remove f∘fᵀ at the front
    let mut counit_src: Vec<&OneMor> = vec![&f_r];
    counit_src.extend(f_atoms.iter().copied());
    let mut seg3: Vec<Seg> = vec![Seg::Face { face: &counit_f, src: counit_src, tgt: vec![] }];
    if !i_refs.is_empty() {
        seg3.push(Seg::Id(i_refs.clone()));
    }
    seg3.push(Seg::Id(vec![&h_r]));
    let step3 = word_two_mor(&seg3)?;

    let alpha_r = vcompose(&step3, &vcompose(&step2, &step1)?)?;
    Quintet::new(q.i.clone(), vec![f_r], q.g.clone(), vec![h_r], alpha_r)
}

/// Left mate: replace the horizontals g, i by their transposes. The
/// composite is iᵀ∘h ⇒ iᵀ∘i∘f∘gᵀ... assembled dually to `right_mate`:
/// insert g∘gᵀ in front, whisker alpha, remove iᵀ∘i at the back.
pub fn left_mate(q: &Quintet) -> Result<Quintet> {
    let a_cat = q.source_cat();
    let c_cat = q
        .f
        .last()
        .map(|m| m.target.clone())
        .unwrap_or_else(|| a_cat.clone());

    let g_atoms: Vec<&OneMor> = q.g.iter().collect();
    let i_atoms: Vec<&OneMor> = q.i.iter().collect();
    let g_mat = compose_word(&a_cat, &g_atoms)?;
    let i_mat = compose_word(&c_cat, &i_atoms)?;
    let g_l = g_mat.transpose();
    let i_l = i_mat.transpose();

    let unit_g = word_unit_op(&a_cat, &g_atoms)?; // Id_B ⇒ [g_l] ++ g.word
    let counit_i = word_counit_op(&c_cat, &i_atoms)?; // i.word ++ [i_l] ⇒ Id_C

    let f_refs: Vec<&OneMor> = q.f.iter().collect();
    let h_refs: Vec<&OneMor> = q.h.iter().collect();

    // step 1: insert g∘gᵀ in front of h
    let mut unit_tgt: Vec<&OneMor> = vec![&g_l];
    unit_tgt.extend(g_atoms.iter().copied());
    let mut seg1: Vec<Seg> = vec![Seg::Face { face: &unit_g, src: vec![], tgt: unit_tgt }];
    if !h_refs.is_empty() {
        seg1.push(Seg::Id(h_refs.clone()));
    }
    seg1.push(Seg::Id(vec![&i_l]));
    let step1 = word_two_mor(&seg1)?;

    // step 2: whisker alpha
    let gh: Vec<&OneMor> = g_atoms.iter().chain(h_refs.iter()).copied().collect();
    let fi: Vec<&OneMor> = f_refs.iter().chain(i_atoms.iter()).copied().collect();
    let step2 = word_two_mor(&[
        Seg::Id(vec![&g_l]),
        Seg::Face { face: &q.alpha, src: gh, tgt: fi },
        Seg::Id(vec![&i_l]),
    ])?;

    // step 3: remove i∘iᵀ at the back
    let mut counit_src: Vec<&OneMor> = i_atoms.clone();
    counit_src.push(&i_l);
    let mut seg3: Vec<Seg> = vec![Seg::Id(vec![&g_l])];
    if !f_refs.is_empty() {
        seg3.push(Seg::Id(f_refs.clone()));
    }
    seg3.push(Seg::Face { face: &counit_i, src: counit_src, tgt: vec![] });
    let step3 = word_two_mor(&seg3)?;

    let alpha_l = vcompose(&step3, &vcompose(&step2, &step1)?)?;
    Quintet::new(vec![g_l], q.h.clone(), vec![i_l], q.f.clone(), alpha_l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MateSide {
    Left,
    Right,
}

/// Per-block audit entry for a Beck-Chevalley check.
#[derive(Clone, Debug, Serialize)]
pub struct BcBlock {
    pub target: String,
    pub source: String,
    pub rows: usize,
    pub cols: usize,
    pub det: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BcOutcome {
    pub ok: bool,
    pub witness: Option<String>,
    pub blocks: Vec<BcBlock>,
}

/// Beck-Chevalley check: compute the requested mate and test every block
/// for invertibility (square shape, nonzero determinant). Returns the
/// first failing block as a witness.
pub fn check_bc(q: &Quintet, side: MateSide) -> Result<BcOutcome> {
    let mate = match side {
        MateSide::Left => left_mate(q)?,
        MateSide::Right => right_mate(q)?,
    };
    let alpha = &mate.alpha;
    let src_cat = &alpha.source.source;
    let tgt_cat = &alpha.source.target;
    let mut ok = true;
    let mut witness = None;
    let mut blocks = Vec::new();
    for t in 0..tgt_cat.dim() {
        for s in 0..src_cat.dim() {
            let b = alpha.block(t, s);
            if b.rows() == 0 && b.cols() == 0 {
                continue;
            }
            let det = b.det().map(|d| d.to_string());
            let invertible = b.rows() == b.cols() && b.is_invertible();
            blocks.push(BcBlock {
                target: tgt_cat.simples[t].label.clone(),
                source: src_cat.simples[s].label.clone(),
                rows: b.rows(),
                cols: b.cols(),
                det: det.clone(),
            });
            if !invertible && ok {
                ok = false;
                witness = Some(format!(
                    "block at ({}, {}) is {}x{} with det {}",
                    tgt_cat.simples[t].label,
                    src_cat.simples[s].label,
                    b.rows(),
                    b.cols(),
                    det.unwrap_or_else(|| "undefined".into())
                ));
            }
        }
    }
    Ok(BcOutcome { ok, witness, blocks })
}

#[cfg(test)]
mod tests;
