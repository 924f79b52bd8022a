//! Commutative cubes in the based model: a cube is eight objects, twelve
//! 1-morphism edges oriented along three ordered coordinates, and six
//! 2-morphism faces oriented lexicographically. Commutativity is the
//! equality of the two hexagon paths between the extreme edge words, and
//! mating a cube replaces all edges of one coordinate by adjoints.

use std::sync::Arc;

use serde::Serialize;

use super::{
    compose_word, left_mate, right_mate, vcompose, word_two_mor, BasedCat, OneMor, Quintet, Seg,
    TwoMor,
};
use crate::error::{CoreError, Result};

/// Oriented cube with coordinates x < y < z. Vertex (a,b,c) is stored at
/// index a + 2b + 4c. Edge arrays are indexed by the two fixed
/// coordinates: `x_edges[y][z]`, `y_edges[x][z]`, `z_edges[x][y]`. A face
/// spanning coordinates u < v is a 2-morphism from "u then v" to "v then
/// u"; face arrays are indexed by the remaining coordinate.
#[derive(Clone, Serialize)]
pub struct Cube {
    pub cats: Vec<Arc<BasedCat>>,
    pub x_edges: Vec<Vec<OneMor>>,
    pub y_edges: Vec<Vec<OneMor>>,
    pub z_edges: Vec<Vec<OneMor>>,
    pub xy_faces: Vec<TwoMor>,
    pub xz_faces: Vec<TwoMor>,
    pub yz_faces: Vec<TwoMor>,
}

impl Cube {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        cats: Vec<Arc<BasedCat>>,
        x_edges: Vec<Vec<OneMor>>,
        y_edges: Vec<Vec<OneMor>>,
        z_edges: Vec<Vec<OneMor>>,
        xy_faces: Vec<TwoMor>,
        xz_faces: Vec<TwoMor>,
        yz_faces: Vec<TwoMor>,
    ) -> Result<Self> {
        let cube = Cube { cats, x_edges, y_edges, z_edges, xy_faces, xz_faces, yz_faces };
        cube.validate()?;
        Ok(cube)
    }

    fn vertex(&self, a: usize, b: usize, c: usize) -> &Arc<BasedCat> {
        &self.cats[a + 2 * b + 4 * c]
    }

    fn validate(&self) -> Result<()> {
        if self.cats.len() != 8 {
            return Err(CoreError::MalformedCube("need 8 vertex objects".into()));
        }
        let dims_ok = self.x_edges.len() == 2
            && self.y_edges.len() == 2
            && self.z_edges.len() == 2
            && self.x_edges.iter().all(|v| v.len() == 2)
            && self.y_edges.iter().all(|v| v.len() == 2)
            && self.z_edges.iter().all(|v| v.len() == 2)
            && self.xy_faces.len() == 2
            && self.xz_faces.len() == 2
            && self.yz_faces.len() == 2;
        if !dims_ok {
            return Err(CoreError::MalformedCube("edge or face arrays misshapen".into()));
        }
        for b in 0..2 {
            for c in 0..2 {
                let e = &self.x_edges[b][c];
                if &e.source != self.vertex(0, b, c) || &e.target != self.vertex(1, b, c) {
                    return Err(CoreError::MalformedCube(format!("x edge at y={b}, z={c}")));
                }
            }
        }
        for a in 0..2 {
            for c in 0..2 {
                let e = &self.y_edges[a][c];
                if &e.source != self.vertex(a, 0, c) || &e.target != self.vertex(a, 1, c) {
                    return Err(CoreError::MalformedCube(format!("y edge at x={a}, z={c}")));
                }
            }
        }
        for a in 0..2 {
            for b in 0..2 {
                let e = &self.z_edges[a][b];
                if &e.source != self.vertex(a, b, 0) || &e.target != self.vertex(a, b, 1) {
                    return Err(CoreError::MalformedCube(format!("z edge at x={a}, y={b}")));
                }
            }
        }
        // face boundary words
        for c in 0..2 {
            let face = &self.xy_faces[c];
            let at = self.vertex(0, 0, c);
            let src = compose_word(at, &[&self.x_edges[0][c], &self.y_edges[1][c]])?;
            let tgt = compose_word(at, &[&self.y_edges[0][c], &self.x_edges[1][c]])?;
            if face.source != src || face.target != tgt {
                return Err(CoreError::MalformedCube(format!("xy face at z={c}")));
            }
        }
        for b in 0..2 {
            let face = &self.xz_faces[b];
            let at = self.vertex(0, b, 0);
            let src = compose_word(at, &[&self.x_edges[b][0], &self.z_edges[1][b]])?;
            let tgt = compose_word(at, &[&self.z_edges[0][b], &self.x_edges[b][1]])?;
            if face.source != src || face.target != tgt {
                return Err(CoreError::MalformedCube(format!("xz face at y={b}")));
            }
        }
        for a in 0..2 {
            let face = &self.yz_faces[a];
            let at = self.vertex(a, 0, 0);
            let src = compose_word(at, &[&self.y_edges[a][0], &self.z_edges[a][1]])?;
            let tgt = compose_word(at, &[&self.z_edges[a][0], &self.y_edges[a][1]])?;
            if face.source != src || face.target != tgt {
                return Err(CoreError::MalformedCube(format!("yz face at x={a}")));
            }
        }
        Ok(())
    }

    /// Cube with all edges the identity and all faces identities.
    pub fn all_identity(cat: &Arc<BasedCat>) -> Self {
        let id = OneMor::identity(cat);
        let idf = TwoMor::identity(&id);
        Cube {
            cats: vec![cat.clone(); 8],
            x_edges: vec![vec![id.clone(), id.clone()], vec![id.clone(), id.clone()]],
            y_edges: vec![vec![id.clone(), id.clone()], vec![id.clone(), id.clone()]],
            z_edges: vec![vec![id.clone(), id.clone()], vec![id.clone(), id.clone()]],
            xy_faces: vec![idf.clone(), idf.clone()],
            xz_faces: vec![idf.clone(), idf.clone()],
            yz_faces: vec![idf.clone(), idf],
        }
    }
}

/// Compare the two hexagon paths between the composites "x then y then z"
/// and "z then y then x": each arrow is one face whiskered by the
/// remaining edge, and the cube commutes when the two vertical composites
/// agree blockwise.
pub fn check_cube_commutes(cube: &Cube) -> Result<bool> {
    let x00 = &cube.x_edges[0][0];
    let x10 = &cube.x_edges[1][0];
    let x01 = &cube.x_edges[0][1];
    let x11 = &cube.x_edges[1][1];
    let y00 = &cube.y_edges[0][0];
    let y10 = &cube.y_edges[1][0];
    let y01 = &cube.y_edges[0][1];
    let y11 = &cube.y_edges[1][1];
    let z00 = &cube.z_edges[0][0];
    let z10 = &cube.z_edges[1][0];
    let z01 = &cube.z_edges[0][1];
    let z11 = &cube.z_edges[1][1];

    // path xyz → yxz → yzx → zyx
    let arrow1 = word_two_mor(&[
        Seg::Face { face: &cube.xy_faces[0], src: vec![x00, y10], tgt: vec![y00, x10] },
        Seg::Id(vec![z11]),
    ])?;
    let arrow2 = word_two_mor(&[
        Seg::Id(vec![y00]),
        Seg::Face { face: &cube.xz_faces[1], src: vec![x10, z11], tgt: vec![z01, x11] },
    ])?;
    let arrow3 = word_two_mor(&[
        Seg::Face { face: &cube.yz_faces[0], src: vec![y00, z01], tgt: vec![z00, y01] },
        Seg::Id(vec![x11]),
    ])?;
    let path1 = vcompose(&arrow3, &vcompose(&arrow2, &arrow1)?)?;

    // path xyz → xzy → zxy → zyx
    let arrow4 = word_two_mor(&[
        Seg::Id(vec![x00]),
        Seg::Face { face: &cube.yz_faces[1], src: vec![y10, z11], tgt: vec![z10, y11] },
    ])?;
    let arrow5 = word_two_mor(&[
        Seg::Face { face: &cube.xz_faces[0], src: vec![x00, z10], tgt: vec![z00, x01] },
        Seg::Id(vec![y11]),
    ])?;
    let arrow6 = word_two_mor(&[
        Seg::Id(vec![z00]),
        Seg::Face { face: &cube.xy_faces[1], src: vec![x01, y11], tgt: vec![y01, x11] },
    ])?;
    let path2 = vcompose(&arrow6, &vcompose(&arrow5, &arrow4)?)?;

    Ok(path1.same_blocks(&path2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MateDirection {
    /// Replace all x-direction edges by their transposes (left adjoints);
    /// the result is oriented by the old coordinates y < z < x̄.
    Left,
    /// Replace all z-direction edges by their transposes (right adjoints);
    /// the result is oriented by the old coordinates z̄ < x < y.
    Right,
}

/// Mate of a cube: all faces touching the mated coordinate are replaced by
/// their mates, the rest carry over, and the coordinates are relabelled to
/// the stated ordering. Commutativity of the output is checked by the
/// caller, not assumed.
pub fn cube_mate(cube: &Cube, dir: MateDirection) -> Result<Cube> {
    match dir {
        MateDirection::Left => {
            // new (a, b, c) = old (x = 1 - c, y = a, z = b)
            let mut cats = Vec::with_capacity(8);
            for c in 0..2 {
                for b in 0..2 {
                    for a in 0..2 {
                        cats.push(cube.vertex(1 - c, a, b).clone());
                    }
                }
            }
            let x_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|b| (0..2).map(|c| cube.y_edges[1 - c][b].clone()).collect())
                .collect();
            let y_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|a| (0..2).map(|c| cube.z_edges[1 - c][a].clone()).collect())
                .collect();
            let z_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|a| (0..2).map(|b| cube.x_edges[a][b].transpose()).collect())
                .collect();
            let xy_faces: Vec<TwoMor> = (0..2)
                .map(|c| cube.yz_faces[1 - c].clone())
                .collect();
            let mut xz_faces = Vec::with_capacity(2);
            for b in 0..2 {
                let q = Quintet::from_atoms(
                    cube.y_edges[0][b].clone(),
                    cube.x_edges[0][b].clone(),
                    cube.y_edges[1][b].clone(),
                    cube.x_edges[1][b].clone(),
                    cube.xy_faces[b].clone(),
                )?;
                xz_faces.push(left_mate(&q)?.alpha);
            }
            let mut yz_faces = Vec::with_capacity(2);
            for a in 0..2 {
                let q = Quintet::from_atoms(
                    cube.z_edges[0][a].clone(),
                    cube.x_edges[a][0].clone(),
                    cube.z_edges[1][a].clone(),
                    cube.x_edges[a][1].clone(),
                    cube.xz_faces[a].clone(),
                )?;
                yz_faces.push(left_mate(&q)?.alpha);
            }
            Cube::new(cats, x_edges, y_edges, z_edges, xy_faces, xz_faces, yz_faces)
        }
        MateDirection::Right => {
            // new (a, b, c) = old (x = b, y = c, z = 1 - a)
            let mut cats = Vec::with_capacity(8);
            for c in 0..2 {
                for b in 0..2 {
                    for a in 0..2 {
                        cats.push(cube.vertex(b, c, 1 - a).clone());
                    }
                }
            }
            let x_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|b| (0..2).map(|c| cube.z_edges[b][c].transpose()).collect())
                .collect();
            let y_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|a| (0..2).map(|c| cube.x_edges[c][1 - a].clone()).collect())
                .collect();
            let z_edges: Vec<Vec<OneMor>> = (0..2)
                .map(|a| (0..2).map(|b| cube.y_edges[b][1 - a].clone()).collect())
                .collect();
            let mut xy_faces = Vec::with_capacity(2);
            for c in 0..2 {
                let q = Quintet::from_atoms(
                    cube.z_edges[0][c].clone(),
                    cube.x_edges[c][0].clone(),
                    cube.z_edges[1][c].clone(),
                    cube.x_edges[c][1].clone(),
                    cube.xz_faces[c].clone(),
                )?;
                xy_faces.push(right_mate(&q)?.alpha);
            }
            let mut xz_faces = Vec::with_capacity(2);
            for b in 0..2 {
                let q = Quintet::from_atoms(
                    cube.z_edges[b][0].clone(),
                    cube.y_edges[b][0].clone(),
                    cube.z_edges[b][1].clone(),
                    cube.y_edges[b][1].clone(),
                    cube.yz_faces[b].clone(),
                )?;
                xz_faces.push(right_mate(&q)?.alpha);
            }
            let yz_faces: Vec<TwoMor> = (0..2)
                .map(|a| cube.xy_faces[1 - a].clone())
                .collect();
            Cube::new(cats, x_edges, y_edges, z_edges, xy_faces, xz_faces, yz_faces)
        }
    }
}
