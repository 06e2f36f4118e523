//! Closed product formulas: MacMahon's box formula, the generating function
//! for all plane partitions, and the formulas for the ten symmetry classes.
//!
//! Every `q`-product is a ratio of factors `(1 - q^x)`; it is expanded by
//! multiplying the numerator and dividing out each denominator factor exactly,
//! so a mis-transcribed exponent surfaces as a nonzero remainder instead of a
//! silently wrong series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::plane::BoxDims;
use crate::poly::QPolynomial;
use crate::symmetry::{SymmetryClass, Weight};

/// `∏ (1 - q^x) / ∏ (1 - q^y)` over the two exponent multisets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RatioProduct {
    pub numerator: Vec<usize>,
    pub denominator: Vec<usize>,
}

impl RatioProduct {
    pub fn new(numerator: Vec<usize>, denominator: Vec<usize>) -> Self {
        RatioProduct {
            numerator,
            denominator,
        }
    }

    pub fn push(&mut self, num: usize, den: usize) {
        self.numerator.push(num);
        self.denominator.push(den);
    }

    /// Removes exponents common to both sides.
    pub fn cancelled(&self) -> RatioProduct {
        let mut num = self.numerator.clone();
        let mut den = Vec::new();
        for &d in &self.denominator {
            match num.iter().position(|&n| n == d) {
                Some(p) => {
                    num.swap_remove(p);
                }
                None => den.push(d),
            }
        }
        num.sort_unstable();
        den.sort_unstable();
        RatioProduct::new(num, den)
    }

    /// Value at `q -> 1`: `∏ x / ∏ y`, computed exactly.
    pub fn limit_at_one(&self) -> BigRational {
        let num: BigInt = self.numerator.iter().map(|&x| BigInt::from(x)).product();
        let den: BigInt = self.denominator.iter().map(|&y| BigInt::from(y)).product();
        BigRational::new(num, den)
    }
}

pub fn ratio_to_polynomial(r: &RatioProduct) -> Result<QPolynomial> {
    let r = r.cancelled();
    if r.numerator.contains(&0) || r.denominator.contains(&0) {
        return Err(Error::NonPolynomialQuotient {
            divisor: "1 - q^0".into(),
        });
    }
    let mut acc = QPolynomial::one();
    for &x in &r.numerator {
        acc = &acc * &QPolynomial::one_minus_q_pow(x);
    }
    for &y in &r.denominator {
        acc = acc.div_exact(&QPolynomial::one_minus_q_pow(y))?;
    }
    Ok(acc)
}

fn box_ratio(a: usize, b: usize, c: usize) -> RatioProduct {
    let mut r = RatioProduct::default();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                r.push(i + j + k - 1, i + j + k - 2);
            }
        }
    }
    r
}

/// `Σ q^{|π|}` over plane partitions in the box, as a product.
pub fn box_gf(dims: BoxDims) -> QPolynomial {
    ratio_to_polynomial(&box_ratio(dims.a, dims.b, dims.c as usize))
        .expect("the box product is a polynomial")
}

/// Number of plane partitions in an `a x b x c` box; any side may be zero.
pub fn n1(a: usize, b: usize, c: usize) -> BigInt {
    let v = box_ratio(a, b, c).limit_at_one();
    assert!(v.is_integer(), "box count is integral");
    v.to_integer()
}

pub fn box_count(dims: BoxDims) -> BigInt {
    n1(dims.a, dims.b, dims.c as usize)
}

/// `∏_{i>=1} (1 - q^i)^{-i}` truncated at degree `n`.
pub fn all_pp_series(n: usize) -> QPolynomial {
    let mut s = QPolynomial::one();
    for i in 1..=n {
        for _ in 0..i {
            s = s.mul_geometric_truncated(i, n);
        }
    }
    s
}

/// Symmetric plane partitions in `a x a x c`, weighted by size.
pub fn symmetric_gf(a: usize, c: usize) -> QPolynomial {
    let mut r = RatioProduct::default();
    for i in 1..=a {
        r.push(c + 2 * i - 1, 2 * i - 1);
    }
    for i in 1..=a {
        for j in i + 1..=a {
            r.push(2 * (c + i + j - 1), 2 * (i + j - 1));
        }
    }
    ratio_to_polynomial(&r).expect("symmetric product is a polynomial")
}

/// Symmetric plane partitions in `a x a x c`, weighted by `|π|_0`.
pub fn symmetric_half_gf(a: usize, c: usize) -> QPolynomial {
    let mut r = RatioProduct::default();
    for i in 1..=a {
        for j in i..=a {
            r.push(c + i + j - 1, i + j - 1);
        }
    }
    ratio_to_polynomial(&r).expect("half-weight product is a polynomial")
}

/// Index triples of the last product of the cyclically symmetric formula:
/// `1 <= i < j <= a` and `i < k <= a`.
fn cyclic_triples(a: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=a).flat_map(move |i| {
        (i + 1..=a).flat_map(move |j| (i + 1..=a).map(move |k| (i, j, k)))
    })
}

/// Cyclically symmetric plane partitions in `a x a x a`, weighted by size.
pub fn cyclic_gf(a: usize) -> QPolynomial {
    let mut r = RatioProduct::default();
    for i in 1..=a {
        r.push(3 * i - 1, 3 * i - 2);
    }
    for i in 1..=a {
        for j in i + 1..=a {
            r.push(3 * (2 * i + j - 1), 3 * (2 * i + j - 2));
        }
    }
    for (i, j, k) in cyclic_triples(a) {
        r.push(3 * (i + j + k - 1), 3 * (i + j + k - 2));
    }
    ratio_to_polynomial(&r).expect("cyclic product is a polynomial")
}

/// Totally symmetric plane partitions in `a x a x a`, weighted by the number
/// of cube orbits ([`Weight::Orbit`]).
pub fn totally_symmetric_gf(a: usize) -> QPolynomial {
    let mut r = RatioProduct::default();
    for i in 1..=a {
        for j in i..=a {
            for k in j..=a {
                r.push(i + j + k - 1, i + j + k - 2);
            }
        }
    }
    ratio_to_polynomial(&r).expect("totally symmetric product is a polynomial")
}

fn invalid(class: u8, msg: impl Into<String>) -> Error {
    Error::InvalidDims {
        class,
        msg: msg.into(),
    }
}

/// Self-complementary plane partitions in the box (sides in any order).
pub fn sc_count(dims: BoxDims) -> Result<BigInt> {
    let mut sides = [dims.a, dims.b, dims.c as usize];
    // odd sides first
    sides.sort_by_key(|s| s % 2 == 0);
    let odd = sides.iter().filter(|s| *s % 2 == 1).count();
    let h = |s: usize| s / 2;
    match odd {
        0 => Ok(n1(h(sides[0]), h(sides[1]), h(sides[2])).pow(2)),
        1 => {
            let (a, b, c) = (h(sides[0]), h(sides[1]), h(sides[2]));
            Ok(n1(a, b, c) * n1(a + 1, b, c))
        }
        2 => {
            let (a, b, c) = (h(sides[0]), h(sides[1]), h(sides[2]));
            Ok(n1(a + 1, b, c) * n1(a, b + 1, c))
        }
        _ => Err(invalid(5, format!("{dims} has odd volume"))),
    }
}

/// Transpose-complementary plane partitions in an `a x a x 2c` box.
pub fn tc_count(a: usize, c: usize) -> BigInt {
    let mut v = BigRational::from_integer(crate::arith::binomial((c + a - 1) as u64, (a - 1) as u64));
    for i in 1..=a.saturating_sub(2) {
        for j in i..=a - 2 {
            v *= BigRational::new(BigInt::from(2 * c + i + j + 1), BigInt::from(i + j + 1));
        }
    }
    assert!(v.is_integer());
    v.to_integer()
}

/// Symmetric self-complementary plane partitions in the box.
pub fn ssc_count(dims: BoxDims) -> Result<BigInt> {
    if dims.a != dims.b || !dims.c.is_multiple_of(2) {
        return Err(invalid(7, format!("{dims} is not of the form n x n x 2c")));
    }
    let (n, c) = (dims.a, dims.c as usize / 2);
    Ok(if n % 2 == 0 {
        n1(n / 2, n / 2, c)
    } else {
        n1(n / 2 + 1, n / 2, c)
    })
}

/// Cyclically symmetric transpose-complementary plane partitions in `2a x 2a x 2a`.
pub fn cstc_count(a: usize) -> BigInt {
    let mut v = BigRational::one();
    for i in 0..a as u64 {
        let num = BigInt::from(3 * i + 1) * factorial(6 * i) * factorial(2 * i);
        let den = factorial(4 * i) * factorial(4 * i + 1);
        v *= BigRational::new(num, den);
    }
    assert!(v.is_integer());
    v.to_integer()
}

/// Cyclically symmetric self-complementary plane partitions in `2a x 2a x 2a`.
pub fn cssc_count(a: usize) -> BigInt {
    let mut v = BigRational::one();
    for i in 0..a as u64 {
        let r = BigRational::new(factorial(3 * i + 1), factorial(a as u64 + i));
        v *= &r * &r;
    }
    assert!(v.is_integer());
    v.to_integer()
}

/// Totally symmetric self-complementary plane partitions in `2a x 2a x 2a`;
/// also the number of `a x a` alternating sign matrices.
pub fn tsscpp_count(a: usize) -> BigInt {
    let mut v = BigRational::one();
    for i in 0..a as u64 {
        v *= BigRational::new(factorial(3 * i + 1), factorial(a as u64 + i));
    }
    assert!(v.is_integer());
    v.to_integer()
}

/// Output of [`class_formula`]: a generating function or a plain count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaValue {
    Poly(QPolynomial),
    Count(BigInt),
}

impl FormulaValue {
    /// Number of objects (`q = 1` for generating functions).
    pub fn count(&self) -> BigInt {
        match self {
            FormulaValue::Poly(p) => p.at_one(),
            FormulaValue::Count(n) => n.clone(),
        }
    }

    pub fn as_poly(&self) -> Option<&QPolynomial> {
        match self {
            FormulaValue::Poly(p) => Some(p),
            FormulaValue::Count(_) => None,
        }
    }
}

/// The product formula for `cls` evaluated for the box `dims`.
///
/// Classes 1-4 give generating functions: class 1 and 3 weighted by size,
/// class 2 by size or `|π|_0`, class 4 by cube orbits. Classes 5-10 give
/// counts. Boxes outside a class's domain are rejected with `InvalidDims`.
pub fn class_formula(cls: SymmetryClass, dims: BoxDims, weight: Weight) -> Result<FormulaValue> {
    let id = cls.id();
    let (a, b, c) = (dims.a, dims.b, dims.c as usize);
    let cube_side = || {
        if a == b && b == c {
            Ok(a)
        } else {
            Err(invalid(id, format!("{dims} is not a cube")))
        }
    };
    let even_cube_half = || {
        let s = cube_side()?;
        if s % 2 == 0 {
            Ok(s / 2)
        } else {
            Err(invalid(id, format!("{dims} does not have even side")))
        }
    };
    let square = || {
        if a == b {
            Ok(())
        } else {
            Err(invalid(id, format!("{dims} needs a = b")))
        }
    };
    let bad_weight = || Error::InvalidWeight {
        class: id,
        weight: format!("{weight:?}"),
    };
    let value = match id {
        1 => match weight {
            Weight::Size => FormulaValue::Poly(box_gf(dims)),
            _ => return Err(bad_weight()),
        },
        2 => {
            square()?;
            match weight {
                Weight::Size => FormulaValue::Poly(symmetric_gf(a, c)),
                Weight::HalfSize => FormulaValue::Poly(symmetric_half_gf(a, c)),
                Weight::Orbit => return Err(bad_weight()),
            }
        }
        3 => match weight {
            Weight::Size => FormulaValue::Poly(cyclic_gf(cube_side()?)),
            _ => return Err(bad_weight()),
        },
        4 => match weight {
            Weight::Orbit => FormulaValue::Poly(totally_symmetric_gf(cube_side()?)),
            _ => return Err(bad_weight()),
        },
        5 => FormulaValue::Count(sc_count(dims)?),
        6 => {
            square()?;
            if c % 2 != 0 {
                return Err(invalid(id, format!("{dims} needs an even height")));
            }
            FormulaValue::Count(tc_count(a, c / 2))
        }
        7 => FormulaValue::Count(ssc_count(dims)?),
        8 => FormulaValue::Count(cstc_count(even_cube_half()?)),
        9 => FormulaValue::Count(cssc_count(even_cube_half()?)),
        _ => FormulaValue::Count(tsscpp_count(even_cube_half()?)),
    };
    Ok(value)
}

/// `N9(2a,2a,2a) = N10(2a,2a,2a)^2` from the two product formulas.
pub fn verify_c9c10(a: usize) -> bool {
    cssc_count(a) == tsscpp_count(a).pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::enumerate_box;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    fn bx(a: usize, b: usize, c: u32) -> BoxDims {
        BoxDims::new(a, b, c).unwrap()
    }

    #[test]
    fn ratio_examples() {
        let r = RatioProduct::new(vec![2, 3], vec![1, 2]);
        assert_eq!(ratio_to_polynomial(&r).unwrap(), p(&[1, 1, 1]));
        let r = RatioProduct::new(vec![1], vec![1]);
        assert_eq!(ratio_to_polynomial(&r).unwrap(), p(&[1]));
        assert_eq!(
            ratio_to_polynomial(&box_ratio(1, 1, 2)).unwrap(),
            p(&[1, 1, 1])
        );
        let bad = RatioProduct::new(vec![3], vec![2]);
        assert!(matches!(
            ratio_to_polynomial(&bad),
            Err(Error::NonPolynomialQuotient { .. })
        ));
    }

    #[test]
    fn ratio_quotient_reproduces_numerator() {
        let r = box_ratio(2, 2, 3).cancelled();
        let quot = ratio_to_polynomial(&r).unwrap();
        let den = r
            .denominator
            .iter()
            .fold(QPolynomial::one(), |acc, &y| &acc * &QPolynomial::one_minus_q_pow(y));
        let num = r
            .numerator
            .iter()
            .fold(QPolynomial::one(), |acc, &x| &acc * &QPolynomial::one_minus_q_pow(x));
        assert_eq!(&quot * &den, num);
    }

    #[test]
    fn box_examples() {
        assert_eq!(box_gf(bx(1, 1, 1)), p(&[1, 1]));
        assert_eq!(box_gf(bx(2, 2, 2)).at_one(), 20.into());
        assert_eq!(box_gf(bx(1, 1, 2)), p(&[1, 1, 1]));
        assert_eq!(box_count(bx(1, 1, 1)), 2.into());
        assert_eq!(box_count(bx(2, 2, 2)), 20.into());
        assert_eq!(box_count(bx(3, 3, 3)), 980.into());
        assert_eq!(n1(0, 3, 3), 1.into());
    }

    #[test]
    fn box_gf_at_one_is_box_count() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 0..=4 {
                    let d = bx(a, b, c);
                    assert_eq!(box_gf(d).at_one(), box_count(d));
                }
            }
        }
    }

    #[test]
    fn box_gf_symmetric_under_permutations() {
        for a in 1..=3usize {
            for b in 1..=3usize {
                for c in 1..=3usize {
                    let g = box_gf(bx(a, b, c as u32));
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(box_gf(bx(x, y, z as u32)), g);
                    }
                }
            }
        }
    }

    #[test]
    fn all_pp_series_examples() {
        assert_eq!(all_pp_series(0), p(&[1]));
        assert_eq!(all_pp_series(2), p(&[1, 1, 3]));
        assert_eq!(all_pp_series(3).coeff(3), 6.into());
        // MacMahon numbers
        assert_eq!(
            all_pp_series(10),
            p(&[1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500])
        );
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(tsscpp_count(3), 7.into());
        assert_eq!(tsscpp_count(4), 42.into());
        assert_eq!(sc_count(bx(2, 2, 2)).unwrap(), 4.into());
        assert_eq!(sc_count(bx(2, 3, 3)).unwrap(), sc_count(bx(3, 3, 2)).unwrap());
        assert!(sc_count(bx(3, 3, 3)).is_err());
        assert_eq!(cssc_count(2), 4.into());
        assert_eq!(cstc_count(1), 1.into());
        assert_eq!(cstc_count(2), 2.into());
        assert_eq!(cstc_count(3), 11.into());
        assert_eq!(tc_count(2, 1), 2.into());
        assert_eq!(tc_count(1, 5), 1.into());
        assert_eq!(ssc_count(bx(2, 2, 2)).unwrap(), 2.into());
        assert!(ssc_count(bx(2, 2, 3)).is_err());
    }

    /// Letting `k` run over all of `1..=a` in the last product of the
    /// cyclically symmetric formula gives the wrong count already at `a = 2`.
    #[test]
    fn cyclic_full_k_range_disagrees_with_enumeration() {
        let full_range = |a: usize| {
            let mut r = RatioProduct::default();
            for i in 1..=a {
                r.push(3 * i - 1, 3 * i - 2);
                for j in i + 1..=a {
                    r.push(3 * (2 * i + j - 1), 3 * (2 * i + j - 2));
                    for k in 1..=a {
                        r.push(3 * (i + j + k - 1), 3 * (i + j + k - 2));
                    }
                }
            }
            r.limit_at_one()
        };
        let cls = SymmetryClass::new(3).unwrap();
        for a in 2..=3 {
            let counted = crate::symmetry::enumerate_class(cls, BoxDims::cube(a).unwrap()).count();
            assert_ne!(full_range(a), BigRational::from_integer(counted.into()));
            assert_eq!(cyclic_gf(a).at_one(), BigInt::from(counted));
        }
    }

    /// The literal product `(3i+1)! (6i)! (2i)! / ((4i+1)! (4i)!)` does not
    /// count cyclically symmetric transpose-complementary plane partitions;
    /// the first factor must be `3i+1`.
    #[test]
    fn cstc_factorial_reading_disagrees_with_enumeration() {
        let literal = |a: u64| -> BigRational {
            (0..a)
                .map(|i| {
                    BigRational::new(
                        factorial(3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                        factorial(4 * i + 1) * factorial(4 * i),
                    )
                })
                .product()
        };
        assert_eq!(literal(2), BigRational::from_integer(12.into()));
        let cls = SymmetryClass::new(8).unwrap();
        let counted = crate::symmetry::enumerate_class(cls, bx(4, 4, 4)).count();
        assert_eq!(counted, 2);
        assert_eq!(cstc_count(2), BigInt::from(counted));
    }

    #[test]
    fn class_formula_validation() {
        let c = |id| SymmetryClass::new(id).unwrap();
        assert!(class_formula(c(2), bx(2, 3, 2), Weight::Size).is_err());
        assert!(class_formula(c(3), bx(2, 2, 3), Weight::Size).is_err());
        assert!(class_formula(c(10), bx(3, 3, 3), Weight::Size).is_err());
        assert!(class_formula(c(6), bx(2, 2, 3), Weight::Size).is_err());
        assert!(matches!(
            class_formula(c(4), bx(2, 2, 2), Weight::HalfSize),
            Err(Error::InvalidWeight { class: 4, .. })
        ));
        assert_eq!(
            class_formula(c(10), bx(6, 6, 6), Weight::Size).unwrap().count(),
            7.into()
        );
        assert_eq!(
            class_formula(c(8), bx(4, 4, 4), Weight::Size).unwrap().count(),
            2.into()
        );
        assert_eq!(
            class_formula(c(5), bx(2, 2, 2), Weight::Size).unwrap().count(),
            4.into()
        );
        assert_eq!(
            class_formula(c(2), bx(1, 1, 1), Weight::Size).unwrap(),
            FormulaValue::Poly(p(&[1, 1]))
        );
    }

    #[test]
    fn c9c10_factorisation() {
        assert!(verify_c9c10(1));
        assert!(verify_c9c10(2));
        assert!(verify_c9c10(3));
        assert_eq!(cssc_count(3), 49.into());
    }

    #[test]
    fn box_gf_matches_brute_force_small() {
        let d = bx(2, 2, 2);
        let mut hist = vec![0i64; 9];
        for pp in enumerate_box(d) {
            hist[pp.size() as usize] += 1;
        }
        assert_eq!(box_gf(d), p(&hist));
    }
}
