//! Independent oracles for the test suites. Everything here is a second,
//! deliberately naive code path: Schur polynomials expanded as explicit
//! monomial maps in finitely many variables, with change of basis by
//! leading-monomial elimination, plus small brute-force character-table
//! constructions. Nothing in this module calls the tableau-counting rule
//! or the based model it is checking.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use pshcat_core::partitions::Partition;

/// A polynomial in n variables as a map from exponent vectors to integer
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            let k = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = k {
                self.terms.remove(&k);
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = Poly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }
}

/// The Schur polynomial of a shape in `vars` variables, by direct
/// enumeration of column-strict tableaux. Memoized.
pub fn schur_poly(lam: &Partition, vars: usize) -> Poly {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, usize), Poly>>> = OnceLock::new();
    let lock = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = lock.lock().unwrap().get(&(lam.clone(), vars)) {
        return p.clone();
    }
    let mut out = Poly::zero(vars);
    let rows = lam.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lam.part(r) as usize])
        .collect();
    fill_tableau(&mut grid, lam, 0, 0, vars as u32, &mut out);
    lock.lock().unwrap().insert((lam.clone(), vars), out.clone());
    out
}

fn fill_tableau(
    grid: &mut Vec<Vec<u32>>,
    lam: &Partition,
    r: usize,
    c: usize,
    vars: u32,
    out: &mut Poly,
) {
    if r == lam.len() {
        let mut exp = vec![0u32; vars as usize];
        for row in grid.iter() {
            for &v in row {
                exp[(v - 1) as usize] += 1;
            }
        }
        out.add_term(exp, BigInt::from(1));
        return;
    }
    if c == lam.part(r) as usize {
        fill_tableau(grid, lam, r + 1, 0, vars, out);
        return;
    }
    let min_left = if c > 0 { grid[r][c - 1] } else { 1 };
    let min_above = if r > 0 && c < lam.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
    for v in min_left.max(min_above)..=vars {
        grid[r][c] = v;
        fill_tableau(grid, lam, r, c + 1, vars, out);
        grid[r][c] = 0;
    }
}

/// The power-sum polynomial x_1^k + ... + x_n^k.
pub fn power_sum_poly(k: u32, vars: usize) -> Poly {
    let mut out = Poly::zero(vars);
    for i in 0..vars {
        let mut exp = vec![0u32; vars];
        exp[i] = k;
        out.add_term(exp, BigInt::from(1));
    }
    out
}

/// Express a symmetric polynomial in the Schur basis by triangular
/// elimination against the leading monomials: the lexicographically
/// largest exponent vector of a symmetric polynomial is weakly decreasing
/// and is the leading term of exactly one Schur polynomial.
pub fn to_schur_basis(mut p: Poly) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    while let Some((exp, coeff)) = p.terms.iter().next_back().map(|(k, v)| (k.clone(), v.clone()))
    {
        let mut parts = exp.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let lam = Partition::new(parts).expect(
            "leading monomial of a symmetric polynomial has weakly decreasing exponents",
        );
        let s = schur_poly(&lam, p.vars);
        for (e, c) in &s.terms {
            p.add_term(e.clone(), -(c * &coeff));
        }
        out.insert(lam, coeff);
    }
    out
}

/// The structure constants of the product of two Schur generators, via
/// the polynomial route: expand, multiply, eliminate.
pub fn product_in_schur_basis(
    mu: &Partition,
    nu: &Partition,
    vars: usize,
) -> BTreeMap<Partition, BigInt> {
    let p = schur_poly(mu, vars).mul(&schur_poly(nu, vars));
    to_schur_basis(p)
}

// ---------------------------------------------------------------------------
// Small character-table oracles
// ---------------------------------------------------------------------------

/// The character table of the two-element group by enumerating the
/// homomorphisms to {1, -1}.
pub fn z2_table_by_enumeration() -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    for image in [1i64, -1] {
        rows.push(vec![1, image]);
    }
    rows
}

/// The character table of the symmetric group on three letters, from the
/// permutation representation: the trivial and sign characters are the
/// degree-one homomorphisms, and the standard character is the fixed-point
/// count minus one, computed per cycle type.
pub fn s3_table_by_permutation_rep() -> Vec<Vec<i64>> {
    // class representatives by cycle type: e, (12), (123)
    let classes: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 2, 0]];
    let fixed = |p: &[usize]| p.iter().enumerate().filter(|(i, &v)| *i == v).count() as i64;
    let sign = |p: &[usize]| {
        let mut s = 1i64;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] > p[j] {
                    s = -s;
                }
            }
        }
        s
    };
    let trivial: Vec<i64> = classes.iter().map(|_| 1).collect();
    let sgn: Vec<i64> = classes.iter().map(|p| sign(p)).collect();
    let standard: Vec<i64> = classes.iter().map(|p| fixed(p) - 1).collect();
    vec![trivial, sgn, standard]
}
