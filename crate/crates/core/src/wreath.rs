//! Wreath-product instances at the K-level: ingest a finite-group
//! character table, build the tensor power of the symmetric-function ring
//! indexed by the irreducibles, and verify the decomposition shadow:
//! the axioms hold and the primitive space has rank |Irr G| in every
//! degree, with the degree-1 primitives labelled by the irreducibles.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::partitions::Partition;
use crate::psh::{check_psh_axioms, primitive_rank, Label, PshAlgebra};
use crate::report::Report;

/// A finite-group character table over the integers. Complex-valued
/// tables are accepted in count-only mode (no `characters` field): the
/// construction downstream depends only on the set of irreducibles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTable {
    pub name: String,
    pub class_sizes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<Vec<i64>>>,
}

impl CharacterTable {
    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn irr_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// Validate the table: a square matrix, positive degrees in the first
    /// column, and exact row orthogonality under the class-size-weighted
    /// pairing. Count-only tables validate trivially.
    pub fn validate(&self) -> Result<()> {
        if self.class_sizes.is_empty() || self.class_sizes.iter().any(|&c| c == 0) {
            return Err(CoreError::InvalidCharacterTable(
                "class sizes must be positive and nonempty".into(),
            ));
        }
        let Some(chars) = &self.characters else {
            return Ok(());
        };
        let k = self.class_sizes.len();
        if chars.len() != k || chars.iter().any(|row| row.len() != k) {
            return Err(CoreError::InvalidCharacterTable(format!(
                "expected a {k}x{k} character matrix"
            )));
        }
        if chars.iter().any(|row| row[0] <= 0) {
            return Err(CoreError::InvalidCharacterTable(
                "identity-class column must be positive".into(),
            ));
        }
        let order = self.group_order() as i64;
        for i in 0..k {
            for j in i..k {
                let pairing: i64 = (0..k)
                    .map(|c| self.class_sizes[c] as i64 * chars[i][c] * chars[j][c])
                    .sum();
                let expect = if i == j { order } else { 0 };
                if pairing != expect {
                    return Err(CoreError::InvalidCharacterTable(format!(
                        "row orthogonality fails for rows {i} and {j}: pairing {pairing}, expected {expect}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Parse and validate a character table from its JSON document.
pub fn load_character_table(doc: &str) -> Result<CharacterTable> {
    let table: CharacterTable = serde_json::from_str(doc)?;
    table.validate()?;
    Ok(table)
}

/// Bundled fixtures: the trivial group, the two cyclic groups used by the
/// suite (order 3 in count-only mode), and the symmetric group on three
/// letters.
pub fn bundled_table(name: &str) -> Option<CharacterTable> {
    let doc = match name {
        "trivial" => include_str!("../fixtures/trivial.json"),
        "z2" => include_str!("../fixtures/z2.json"),
        "z3" => include_str!("../fixtures/z3.json"),
        "s3" => include_str!("../fixtures/s3.json"),
        _ => return None,
    };
    Some(load_character_table(doc).expect("bundled tables are valid"))
}

pub fn bundled_names() -> &'static [&'static str] {
    &["trivial", "z2", "z3", "s3"]
}

/// The K-level model of the equivariant instance: the |Irr G|-fold tensor
/// power of the symmetric-function ring, truncated at the given degree.
pub fn build_pg(table: &CharacterTable, max_degree: u32) -> Result<PshAlgebra> {
    table.validate()?;
    let mut alg = PshAlgebra::lambda_power(table.irr_count(), max_degree);
    alg.set_name(format!("K(P_{})", table.name));
    Ok(alg)
}

/// The degree-1 basis label carrying the class of the ρ-th irreducible:
/// the tuple with a single box in slot ρ.
pub fn irreducible_label(table: &CharacterTable, rho: usize) -> Label {
    let k = table.irr_count();
    assert!(rho < k);
    let mut label = vec![Partition::empty(); k];
    label[rho] = Partition::row(1);
    label
}

/// Verify the decomposition shadow for a table: the axioms pass, the
/// primitive space has rank |Irr G| in every degree 1..=d, and in degree
/// 1 the primitive basis is exactly the irreducible labels.
pub fn verify_decomposition(table: &CharacterTable, d: u32) -> Result<Report> {
    let mut report = Report::new(format!(
        "wreath decomposition shadow for {} at degree {}",
        table.name, d
    ));
    let alg = build_pg(table, d)?;
    let axioms = check_psh_axioms(&alg, d);
    let axioms_pass = axioms.passed();
    report.push(
        "psh-axioms",
        axioms_pass,
        axioms
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.details))
            .unwrap_or_else(|| "all axioms pass".into()),
    );

    let want = table.irr_count();
    for n in 1..=d {
        let rank = primitive_rank(&alg, n);
        report.push(
            format!("primitive-rank degree {n}"),
            rank == want,
            format!("rank {rank}, expected {want}"),
        );
    }

    // degree 1: every basis element is primitive and the basis is the set
    // of irreducible labels
    let deg1: Vec<Label> = alg.basis(1).to_vec();
    let mut labels: Vec<Label> = (0..want).map(|r| irreducible_label(table, r)).collect();
    labels.sort();
    let mut got = deg1.clone();
    got.sort();
    report.push(
        "degree-1 primitives are the irreducibles",
        got == labels && primitive_rank(&alg, 1) == want,
        format!("{} degree-1 classes", deg1.len()),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_are_valid() {
        for name in bundled_names() {
            let t = bundled_table(name).unwrap();
            assert!(t.validate().is_ok(), "{name}");
        }
        let t = bundled_table("trivial").unwrap();
        assert_eq!(t.irr_count(), 1);
        let t = bundled_table("z2").unwrap();
        assert_eq!(t.irr_count(), 2);
        assert_eq!(t.group_order(), 2);
        let t = bundled_table("s3").unwrap();
        assert_eq!(t.irr_count(), 3);
        assert_eq!(t.group_order(), 6);
        // z3 ships in count-only mode
        let t = bundled_table("z3").unwrap();
        assert!(t.characters.is_none());
        assert_eq!(t.irr_count(), 3);
    }

    #[test]
    fn orthogonality_failure_is_reported() {
        let doc = r#"{"name":"bad","class_sizes":[1,1],"characters":[[1,1],[1,1]]}"#;
        let err = load_character_table(doc).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("rows 0 and 1"), "{msg}");
    }

    #[test]
    fn build_pg_shapes() {
        let trivial = bundled_table("trivial").unwrap();
        let alg = build_pg(&trivial, 4).unwrap();
        assert_eq!(alg.arity(), 1);
        let z2 = bundled_table("z2").unwrap();
        let alg = build_pg(&z2, 4).unwrap();
        assert_eq!(alg.dim(1), 2);
        let s3 = bundled_table("s3").unwrap();
        let alg = build_pg(&s3, 3).unwrap();
        // degree-2 basis: 2 partitions of 2 in each of 3 slots, plus a
        // box in each of the 3 slot pairs
        assert_eq!(alg.dim(2), 9);
    }

    #[test]
    fn decomposition_small() {
        let z2 = bundled_table("z2").unwrap();
        let report = verify_decomposition(&z2, 3).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
