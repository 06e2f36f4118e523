//! Semistandard tableaux and Schur polynomials: tableau sums, the principal
//! specialisation through the bialternant, MacMahon's box formula as a
//! specialised Schur function, and Stanley's self-complementary identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::partition::Partition;
use crate::plane::{BoxDims, PlanePartition};
use crate::poly::QPolynomial;
use crate::qseries::{box_gf, class_formula};
use crate::symmetry::{enumerate_class, SymmetryClass, Weight};

/// Rows weakly increase, columns strictly increase, entries positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if lens.contains(&0) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Partition::new(lens)
            .map_err(|_| Error::InvalidTableau("row lengths are not a partition".into()))?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 {
                    return Err(Error::InvalidTableau(format!("cell ({i},{j}) is zero")));
                }
                if j > 0 && row[j - 1] > x {
                    return Err(Error::InvalidTableau(format!(
                        "row {i} decreases at column {j}"
                    )));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return Err(Error::InvalidTableau(format!(
                        "column {j} does not increase at row {i}"
                    )));
                }
            }
        }
        Ok(SemistandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of entries equal to `k`, for `k = 1..=n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A polynomial in `x_1..x_n` with integer coefficients; zero terms are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultivariatePolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultivariatePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    /// `x_i` for `i` in `1..=nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.nvars);
        let entry = self.terms.entry(exponents).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Exchanges `x_i` and `x_j` (1-indexed).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Substitutes `x_i = q^i`.
    pub fn principal_specialization(&self) -> QPolynomial {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let d: usize = e.iter().enumerate().map(|(i, &k)| (i + 1) * k as usize).sum();
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += c;
        }
        QPolynomial::new(coeffs)
    }

    /// Substitutes `x_i = 1`.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn add(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn mul(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultivariatePolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            let mag = c.magnitude();
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// All tableaux of the shape with entries in `1..=n`, filled row by row with
/// the smallest admissible entries first.
pub fn enumerate_ssyt(shape: &Partition, n: u32) -> std::vec::IntoIter<SemistandardTableau> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        n: u32,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if k == cells.len() {
            out.push(SemistandardTableau {
                shape: Partition::new(rows.iter().map(|r| r.len() as u32).collect()).unwrap(),
                rows: rows.clone(),
            });
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        // leave room for the strictly increasing column below
        let below = rows.iter().skip(i + 1).filter(|r| r.len() > j).count() as u32;
        let lo = lo_row.max(lo_col);
        if n < below {
            return;
        }
        for x in lo..=n - below {
            rows[i][j] = x;
            rec(k + 1, cells, rows, n, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, &mut rows, n, &mut out);
    out.into_iter()
}

/// `Σ_T ∏ x_i^{#entries i in T}` over tableaux with entries in `1..=n`.
pub fn schur_sum(shape: &Partition, n: usize) -> MultivariatePolynomial {
    let mut p = MultivariatePolynomial::zero(n);
    for t in enumerate_ssyt(shape, n as u32) {
        p.add_term(t.content(n), BigInt::one());
    }
    p
}

/// `s_λ(q, q^2, ..., q^n)` as the ratio of `det(q^{i(λ_j + n - j)})` and
/// `det(q^{i(n - j)})`, divided exactly.
pub fn schur_principal_bialternant(shape: &Partition, n: usize) -> Result<QPolynomial> {
    if shape.len() > n {
        return Err(Error::InvalidParams(format!(
            "shape {shape} has more than {n} rows"
        )));
    }
    let matrix = |exps: &dyn Fn(usize) -> usize| -> Vec<Vec<QPolynomial>> {
        (1..=n)
            .map(|i| (1..=n).map(|j| QPolynomial::monomial(BigInt::one(), i * exps(j))).collect())
            .collect()
    };
    let num = determinant(&matrix(&|j| shape.part(j - 1) as usize + n - j));
    let den = determinant(&matrix(&|j| n - j));
    num.div_exact(&den)
}

/// Number of tableaux of the shape with entries in `1..=m`, read off the
/// bialternant at `q = 1`.
pub fn ssyt_count(shape: &Partition, m: usize) -> BigInt {
    if shape.len() > m {
        return BigInt::zero();
    }
    schur_principal_bialternant(shape, m)
        .expect("bialternant is a polynomial")
        .at_one()
}

/// `s_{(b^a)}(q, ..., q^{a+c}) = q^{b * binom(a+1, 2)} * box_gf(a, b, c)`.
pub fn verify_mmschur(dims: BoxDims) -> bool {
    let shape = Partition::rectangle(dims.a, dims.b as u32);
    let n = dims.a + dims.c as usize;
    let lhs = match schur_principal_bialternant(&shape, n) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let rhs = box_gf(dims).shift(dims.b * dims.a * (dims.a + 1) / 2);
    lhs == rhs
}

/// Rotates the pile by 180 degrees and adds `i` to row `i`.
pub fn pp_box_to_ssyt(pp: &PlanePartition, dims: BoxDims) -> Result<SemistandardTableau> {
    let p = pp.padded(dims)?;
    let (a, b) = (dims.a, dims.b);
    let rows = (0..a)
        .map(|i| (0..b).map(|j| p.get(a - 1 - i, b - 1 - j) + i as u32 + 1).collect())
        .collect();
    SemistandardTableau::new(rows)
}

pub fn ssyt_to_pp_box(t: &SemistandardTableau, dims: BoxDims) -> Result<PlanePartition> {
    let (a, b) = (dims.a, dims.b);
    if *t.shape() != Partition::rectangle(a, b as u32) {
        return Err(Error::InvalidTableau(format!(
            "shape {} is not {b}^{a}",
            t.shape()
        )));
    }
    let top = a as u32 + dims.c;
    if t.max_entry() > top {
        return Err(Error::InvalidTableau(format!("entry exceeds {top}")));
    }
    let mut cells = vec![0; a * b];
    for i in 0..a {
        for j in 0..b {
            let v = t.get(a - 1 - i, b - 1 - j);
            let shift = (a - i) as u32;
            if v < shift {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} in row {} is below {shift}",
                    a - i
                )));
            }
            cells[i * b + j] = v - shift;
        }
    }
    PlanePartition::from_grid(a, b, cells)
}

/// Shapes `(b1+δ1, ..., b1+δ_{a1}, b1-δ_{a1}, ..., b1-δ1)` with
/// `b1 >= δ1 >= ... >= δ_{a1} >= 0`, zero parts dropped.
pub fn sc_shapes(a1: u32, b1: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut delta = Vec::with_capacity(a1 as usize);
    fn rec(a1: u32, b1: u32, cap: u32, delta: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if delta.len() == a1 as usize {
            let mut parts: Vec<u32> = delta.iter().map(|d| b1 + d).collect();
            parts.extend(delta.iter().rev().map(|d| b1 - d));
            out.push(Partition::from_padded(&parts).expect("parts are weakly decreasing"));
            return;
        }
        for d in (0..=cap).rev() {
            delta.push(d);
            rec(a1, b1, d, delta, out);
            delta.pop();
        }
    }
    rec(a1, b1, b1, &mut delta, &mut out);
    out
}

/// Self-complementary plane partitions in `2a1 x 2b1 x 2c1`: the tableau
/// count over [`sc_shapes`], the product formula, and direct enumeration.
pub fn verify_sc_sum(a1: u32, b1: u32, c1: u32) -> bool {
    let m = (a1 + c1) as usize;
    let tableau_total: BigInt = sc_shapes(a1, b1).iter().map(|l| ssyt_count(l, m)).sum();
    let dims = match BoxDims::new(2 * a1 as usize, 2 * b1 as usize, 2 * c1) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let cls = SymmetryClass::new(5).expect("class 5 exists");
    let formula = match class_formula(cls, dims, Weight::Size) {
        Ok(v) => v.count(),
        Err(_) => return false,
    };
    let counted = BigInt::from(enumerate_class(cls, dims).count());
    tableau_total == formula && formula == counted
}

/// `Σ_λ s_λ(x_1..x_m) = s_{(b1^a1)}(x_1..x_m)^2` over [`sc_shapes`].
pub fn verify_s2(a1: u32, b1: u32, m: usize) -> bool {
    let lhs = sc_shapes(a1, b1)
        .iter()
        .fold(MultivariatePolynomial::zero(m), |acc, l| &acc + &schur_sum(l, m));
    let s = schur_sum(&Partition::rectangle(a1 as usize, b1), m);
    lhs == &s * &s
}
