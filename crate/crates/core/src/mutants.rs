//! Fault injection for the verification suites. Each function produces a
//! deliberately wrong variant of a core construction; the suites must
//! catch every one with a concrete witness. These exist so the test
//! harness can demonstrate that the checks have teeth.

use num_bigint::BigInt;

use crate::heisenberg::HeisElement;
use crate::partitions::Partition;
use crate::psh::PshAlgebra;
use crate::symfunc::{coproduct, multiply, op_delta, SymTensor};

/// The truncated symmetric-function ring with one structure constant
/// negated: <s_(1)·s_(1), s_(2)> becomes -1. Positivity must fail on it.
pub fn lambda_with_negated_constant(max_degree: u32) -> PshAlgebra {
    let mut alg = PshAlgebra::lambda(max_degree);
    let s1 = alg.id_of(&vec![Partition::new(vec![1]).unwrap()]).unwrap();
    let s2 = alg.id_of(&vec![Partition::new(vec![2]).unwrap()]).unwrap();
    let hit = alg.negate_constant(s1, s1, s2);
    assert!(hit, "mutant target constant exists");
    alg
}

/// A wrong straightening rule: one coproduct leg is written into both
/// places, a classical transcription slip in Sweedler bookkeeping
/// ((x⊗y)(z⊗w) = Σ (x·Δ_{y_(2)}(z)) ⊗ (w·y_(2)) instead of pairing the
/// complementary leg y_(1) on the right). Note that swapping y_(1) and
/// y_(2) wholesale is invisible here because the coproduct is
/// cocommutative; reusing one leg is the faithful build error.
pub fn heis_product_swapped_legs(u: &HeisElement, v: &HeisElement) -> HeisElement {
    let mut out = SymTensor::zero(2);
    for (ku, cu) in u.tensor().terms() {
        let x = SymTensor::schur(ku[0].clone());
        let cop_y = coproduct(&SymTensor::schur(ku[1].clone())).expect("arity 1");
        for (kv, cv) in v.tensor().terms() {
            let z = SymTensor::schur(kv[0].clone());
            let w = SymTensor::schur(kv[1].clone());
            let c = cu * cv;
            for (legs, cy) in cop_y.terms() {
                let y2 = SymTensor::schur(legs[1].clone());
                let skewed = op_delta(&y2, &z).expect("arity 1");
                if skewed.is_zero() {
                    continue;
                }
                let left = multiply(&x, &skewed).expect("arity 1");
                // wrong: y_(2) again instead of y_(1)
                let right = multiply(&w, &y2).expect("arity 1");
                for (kl, cl) in left.terms() {
                    for (kr, cr) in right.terms() {
                        out.add_term(vec![kl[0].clone(), kr[0].clone()], &c * cy * cl * cr);
                    }
                }
            }
        }
    }
    HeisElement::from_tensor(out).expect("arity 2")
}

/// Bump one entry of an integer matrix by one. Used to perturb a single
/// structure constant of a based-model 1-morphism.
pub fn perturb_entry(mat: &mut crate::twovect::NatMat, row: usize, col: usize) {
    let v = mat.get(row, col);
    mat.set(row, col, v + 1);
}

/// A scalar helper for tests that need an explicit nonzero integer.
pub fn one() -> BigInt {
    BigInt::from(1)
}
