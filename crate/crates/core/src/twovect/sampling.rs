//! Seeded random generators for the property suites: small objects,
//! 1-morphisms with bounded entries, 2-morphisms with small rational
//! blocks, quintets and commuting cubes. Deterministic for a fixed seed.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ratio_frac, BasedCat, NatMat, OneMor, Quintet, RatMat, TwoMor};
use crate::error::Result;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_cat(rng: &mut ChaCha8Rng, max_simples: usize) -> Arc<BasedCat> {
    let n = rng.gen_range(1..=max_simples);
    BasedCat::ungraded(n)
}

/// Multiplicity matrix with entries in 0..=max_entry.
pub fn random_one_mor(
    rng: &mut ChaCha8Rng,
    source: &Arc<BasedCat>,
    target: &Arc<BasedCat>,
    max_entry: u64,
) -> OneMor {
    let mult = NatMat::from_fn(target.dim(), source.dim(), |_, _| rng.gen_range(0..=max_entry));
    OneMor::new(source.clone(), target.clone(), mult).expect("shapes agree")
}

/// Rational with numerator in [-3, 3] and denominator in {1, 2, 3}.
fn small_rational(rng: &mut ChaCha8Rng) -> num_rational::BigRational {
    ratio_frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// A random 2-morphism between two parallel 1-morphisms.
pub fn random_two_mor(rng: &mut ChaCha8Rng, source: &OneMor, target: &OneMor) -> TwoMor {
    let ns = source.source.dim();
    let nt = source.target.dim();
    let mut blocks = Vec::with_capacity(ns * nt);
    for t in 0..nt {
        for s in 0..ns {
            let rows = target.mult.get(t, s) as usize;
            let cols = source.mult.get(t, s) as usize;
            blocks.push(RatMat::from_fn(rows, cols, |_, _| small_rational(rng)));
        }
    }
    TwoMor::new(source.clone(), target.clone(), blocks).expect("shapes agree")
}

/// A random quintet with atomic sides: four compatible 1-morphisms with
/// entries bounded by `max_entry` and a random filling 2-morphism.
pub fn random_quintet(rng: &mut ChaCha8Rng, max_simples: usize, max_entry: u64) -> Result<Quintet> {
    let a = random_cat(rng, max_simples);
    let b = random_cat(rng, max_simples);
    let c = random_cat(rng, max_simples);
    let d = random_cat(rng, max_simples);
    let g = random_one_mor(rng, &a, &b, max_entry);
    let h = random_one_mor(rng, &b, &d, max_entry);
    let f = random_one_mor(rng, &a, &c, max_entry);
    let i = random_one_mor(rng, &c, &d, max_entry);
    let top = super::compose_word(&a, &[&g, &h])?;
    let bot = super::compose_word(&a, &[&f, &i])?;
    let alpha = random_two_mor(rng, &top, &bot);
    Quintet::from_atoms(f, g, h, i, alpha)
}

/// A random commuting cube: three edge directions with identity-filled
/// front faces obtained by transporting a random square. Construction:
/// take a random quintet for the xy square at z=0, reuse its data at z=1,
/// and make the z edges identities; all z-involving faces are identities,
/// so both hexagon paths reduce to the same whiskered face and the cube
/// commutes by construction.
pub fn random_commuting_cube(
    rng: &mut ChaCha8Rng,
    max_simples: usize,
    max_entry: u64,
) -> Result<super::Cube> {
    let q = random_quintet(rng, max_simples, max_entry)?;
    let a = q.alpha.source.source.clone();
    let b = q.g[0].target.clone();
    let c = q.f[0].target.clone();
    let d = q.alpha.source.target.clone();
    let x00 = q.g[0].clone(); // A -> B
    let y10 = q.h[0].clone(); // B -> D
    let y00 = q.f[0].clone(); // A -> C
    let x10 = q.i[0].clone(); // C -> D
    let ida = OneMor::identity(&a);
    let idb = OneMor::identity(&b);
    let idc = OneMor::identity(&c);
    let idd = OneMor::identity(&d);

    let xy = q.alpha.clone();
    let cats = vec![
        a.clone(),
        b.clone(),
        c.clone(),
        d.clone(),
        a.clone(),
        b.clone(),
        c.clone(),
        d.clone(),
    ];
    let x_edges = vec![vec![x00.clone(), x00.clone()], vec![x10.clone(), x10.clone()]];
    let y_edges = vec![vec![y00.clone(), y00.clone()], vec![y10.clone(), y10.clone()]];
    let z_edges = vec![vec![ida, idc], vec![idb, idd]];
    // xz faces: x then id ⇒ id then x, the positional identity
    let xz0 = TwoMor::identity(&x00);
    let xz1 = TwoMor::identity(&x10);
    let yz0 = TwoMor::identity(&y00);
    let yz1 = TwoMor::identity(&y10);
    super::Cube::new(
        cats,
        x_edges,
        y_edges,
        z_edges,
        vec![xy.clone(), xy],
        vec![xz0, xz1],
        vec![yz0, yz1],
    )
}
