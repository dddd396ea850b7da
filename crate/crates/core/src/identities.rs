//! Weight functions, alternating moments and the identities they satisfy.
//!
//! A weight `f(k, l)` with `f(k, l) = f(k + 1, l - 1) + f(k, l - 1)` gives a
//! weighted census sum that depends only on `n` (and the dimension). All values
//! here are exact: integers are `i128`/`BigInt`, weights are `BigRational`, and
//! the two trigonometric weights are read from period-6 integer tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::census::CensusTable;
use crate::error::{Error, Result};
use crate::linalg;

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn binomial_i128(n: i64, k: i64) -> i128 {
    i128::try_from(binomial(n, k)).expect("binomial fits in i128")
}

/// Fibonacci numbers on all integers, with `Fib(-n) = (-1)^(n+1) Fib(n)`.
pub fn fib(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && m % 2 == 0 {
        -a
    } else {
        a
    }
}

/// `2 cos(m pi / 3)`.
pub fn two_cos_third(m: i64) -> i64 {
    [2, 1, -1, -2, -1, 1][m.rem_euclid(6) as usize]
}

/// `(2 / sqrt 3) sin(m pi / 3)`.
pub fn scaled_sin_third(m: i64) -> i64 {
    [0, 1, 1, 0, -1, -1][m.rem_euclid(6) as usize]
}

fn sign(exponent: i64) -> i128 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn pow(x: &BigRational, e: i64) -> BigRational {
    num_traits::pow::pow(x.clone(), e as usize)
}

/// The moment kernel `m_r(k)`: 1 for `r = 0`, `(k / r) C(k - r - 1, r - 1)` for
/// `r >= 1` and `k >= 2r`, zero otherwise.
pub fn moment_kernel(r: usize, k: i64) -> i128 {
    if r == 0 {
        return 1;
    }
    let r = r as i64;
    if k < 2 * r {
        return 0;
    }
    let numer = k as i128 * binomial_i128(k - r - 1, r - 1);
    debug_assert_eq!(numer % r as i128, 0);
    numer / r as i128
}

/// A weight function on `(k, l)`.
#[derive(Debug, Clone)]
pub enum Weight {
    /// `2^l`
    PowersOfTwo,
    /// `C(l, m - k)`
    Binomial { m: usize },
    /// `Fib(k + 2l)`
    Fibonacci,
    /// `(-1)^(k+l) Fib(k - l)`
    AlternatingFibonacci,
    /// `2 cos((2k + l) pi / 3)`
    ChebyshevCos,
    /// `(2 / sqrt 3) sin((2k + l) pi / 3)`
    ChebyshevSin,
    /// `x^k (1 + x)^l`, with `0^0 = 1`
    Polynomial { x: BigRational },
    /// Kernel of the mixed moment sum `F_r` in dimension `dim`.
    MixedMoment { r: usize, dim: usize },
    /// `sum_i C(l, i) f(k + i, 0)` from user-supplied values `f(k, 0)`.
    BaseRow { base: BTreeMap<i64, BigRational> },
    /// Linear combination of other weights.
    Combination(Vec<(BigRational, WeightSpec)>),
    /// Arbitrary function; it has no closed form and need not satisfy the recurrence.
    Custom(fn(i64, i64) -> BigRational),
}

/// Whether a weight comes from the built-in catalogue or from user data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    Catalogue,
    UserBaseRow,
    Derived,
}

/// A named weight function.
#[derive(Debug, Clone)]
pub struct WeightSpec {
    pub name: String,
    pub weight: Weight,
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl WeightSpec {
    pub fn new(name: impl Into<String>, weight: Weight) -> Self {
        WeightSpec { name: name.into(), weight }
    }

    pub fn powers_of_two() -> Self {
        Self::new("pow2", Weight::PowersOfTwo)
    }

    pub fn binomial(m: usize) -> Self {
        Self::new(format!("binomial(m={m})"), Weight::Binomial { m })
    }

    pub fn fibonacci() -> Self {
        Self::new("fib", Weight::Fibonacci)
    }

    pub fn alternating_fibonacci() -> Self {
        Self::new("altfib", Weight::AlternatingFibonacci)
    }

    pub fn chebyshev_cos() -> Self {
        Self::new("cheb-cos", Weight::ChebyshevCos)
    }

    pub fn chebyshev_sin() -> Self {
        Self::new("cheb-sin", Weight::ChebyshevSin)
    }

    pub fn polynomial(x: BigRational) -> Self {
        Self::new(format!("poly(x={x})"), Weight::Polynomial { x })
    }

    pub fn mixed_moment(r: usize, dim: usize) -> Self {
        Self::new(format!("mixed(r={r})"), Weight::MixedMoment { r, dim })
    }

    /// A weight given by its base row `f(k, 0)`, extended by the binomial
    /// expansion so that the recurrence holds by construction.
    pub fn from_base_row(name: impl Into<String>, base: BTreeMap<i64, BigRational>) -> Self {
        Self::new(name, Weight::BaseRow { base })
    }

    pub fn combination(name: impl Into<String>, terms: Vec<(BigRational, WeightSpec)>) -> Self {
        Self::new(name, Weight::Combination(terms))
    }

    /// Looks up a catalogue weight by name. `param` is `m` for `binomial` and
    /// `x` for `poly`.
    pub fn from_name(name: &str, param: Option<&BigRational>) -> Result<Self> {
        let need = || Error::BadParam(format!("weight `{name}` needs a parameter"));
        match name {
            "pow2" => Ok(Self::powers_of_two()),
            "fib" => Ok(Self::fibonacci()),
            "altfib" => Ok(Self::alternating_fibonacci()),
            "cheb-cos" => Ok(Self::chebyshev_cos()),
            "cheb-sin" => Ok(Self::chebyshev_sin()),
            "binomial" => {
                let m = param.ok_or_else(need)?;
                if !m.is_integer() || m.is_negative() {
                    return Err(Error::BadParam(format!("binomial needs a non-negative integer m, got {m}")));
                }
                let m = usize::try_from(m.to_integer()).map_err(|_| Error::BadParam(format!("m = {m} too large")))?;
                Ok(Self::binomial(m))
            }
            "poly" => Ok(Self::polynomial(param.ok_or_else(need)?.clone())),
            other => Err(Error::UnknownIdentity(other.to_string())),
        }
    }

    pub fn kind(&self) -> WeightKind {
        match self.weight {
            Weight::BaseRow { .. } => WeightKind::UserBaseRow,
            Weight::MixedMoment { .. } | Weight::Combination(_) | Weight::Custom(_) => WeightKind::Derived,
            _ => WeightKind::Catalogue,
        }
    }

    /// `f(k, l)`.
    pub fn eval(&self, k: i64, l: i64) -> Result<BigRational> {
        let v = match &self.weight {
            Weight::PowersOfTwo => pow(&int(2), l),
            Weight::Binomial { m } => int(binomial(l, *m as i64 - k)),
            Weight::Fibonacci => int(fib(k + 2 * l)),
            Weight::AlternatingFibonacci => int(fib(k - l) * sign(k + l)),
            Weight::ChebyshevCos => int(two_cos_third(2 * k + l)),
            Weight::ChebyshevSin => int(scaled_sin_third(2 * k + l)),
            Weight::Polynomial { x } => pow(x, k) * pow(&(x + int(1)), l),
            Weight::MixedMoment { r, dim } => {
                let r = *r as i64;
                if l > r {
                    BigRational::zero()
                } else {
                    int(sign(k - l + 1 + *dim as i64) * moment_kernel((r - l) as usize, k - l))
                }
            }
            Weight::BaseRow { base } => expand_base_row(base, k, l)?,
            Weight::Combination(terms) => {
                let mut acc = BigRational::zero();
                for (c, w) in terms {
                    acc += c * w.eval(k, l)?;
                }
                acc
            }
            Weight::Custom(f) => f(k, l),
        };
        Ok(v)
    }
}

/// Every catalogue weight for point sets of size `n` in dimension `dim`:
/// powers of two, all binomial weights with `dim < m <= n`, both Fibonacci
/// weights, both trigonometric weights, and polynomials at
/// `x in {-2, -1, 1/2, 1, 2}`.
pub fn catalogue(n: usize, dim: usize) -> Vec<WeightSpec> {
    let mut out = vec![WeightSpec::powers_of_two()];
    out.extend(((dim + 1)..=n).map(WeightSpec::binomial));
    out.push(WeightSpec::fibonacci());
    out.push(WeightSpec::alternating_fibonacci());
    out.push(WeightSpec::chebyshev_cos());
    out.push(WeightSpec::chebyshev_sin());
    for (p, q) in [(-2, 1), (-1, 1), (1, 2), (1, 1), (2, 1)] {
        out.push(WeightSpec::polynomial(BigRational::new(p.into(), q.into())));
    }
    out
}

/// `f(k, l) = sum_{i=0}^{l} C(l, i) f(k + i, 0)`.
pub fn expand_base_row(base: &BTreeMap<i64, BigRational>, k: i64, l: i64) -> Result<BigRational> {
    if l < 0 {
        return Err(Error::BadParam(format!("negative interior count {l}")));
    }
    let mut acc = BigRational::zero();
    for i in 0..=l {
        let v = base.get(&(k + i)).ok_or(Error::RangeExceeded(k + i))?;
        acc += int(binomial(l, i)) * v;
    }
    Ok(acc)
}

/// True iff `f(k, l) = f(k + 1, l - 1) + f(k, l - 1)` on `3 <= k <= kmax`,
/// `1 <= l <= lmax`.
pub fn check_recurrence(w: &WeightSpec, kmax: i64, lmax: i64) -> Result<bool> {
    for k in 3..=kmax {
        for l in 1..=lmax {
            if w.eval(k, l)? != w.eval(k + 1, l - 1)? + w.eval(k, l - 1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum_{k, l} f(k, l) X[k, l]`.
pub fn weighted_sum(table: &CensusTable, w: &WeightSpec) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (k, l, c) in table.entries() {
        acc += w.eval(k as i64, l as i64)? * int(c);
    }
    Ok(acc)
}

/// `P_x = sum_{k, l} x^k (1 + x)^l X[k, l]`.
pub fn poly_sum(table: &CensusTable, x: &BigRational) -> BigRational {
    weighted_sum(table, &WeightSpec::polynomial(x.clone())).expect("polynomial weight is total")
}

fn head_sum(n: usize, dim: usize, f: impl Fn(i64) -> BigRational) -> BigRational {
    (0..=dim as i64).map(|k| int(binomial(n as i64, k)) * f(k)).sum()
}

/// Value of the weighted sum for any set of `n` points in general position in
/// dimension `dim`.
pub fn closed_form(w: &WeightSpec, n: usize, dim: usize) -> Result<BigRational> {
    let nn = n as i64;
    let v = match &w.weight {
        Weight::PowersOfTwo => pow(&int(2), nn) - head_sum(n, dim, |_| int(1)),
        Weight::Binomial { m } => {
            if *m <= dim || *m > n {
                return Err(Error::BadParam(format!("binomial weight needs {} <= m <= {n}, got m = {m}", dim + 1)));
            }
            int(binomial(nn, *m as i64))
        }
        Weight::Fibonacci => int(fib(2 * nn)) - head_sum(n, dim, |k| int(fib(k))),
        Weight::AlternatingFibonacci => -int(fib(nn)) + head_sum(n, dim, |k| int(fib(k) * sign(k + 1))),
        Weight::ChebyshevCos => int(two_cos_third(nn)) - head_sum(n, dim, |k| int(two_cos_third(2 * k))),
        Weight::ChebyshevSin => int(scaled_sin_third(nn)) - head_sum(n, dim, |k| int(scaled_sin_third(2 * k))),
        Weight::Polynomial { x } => pow(&(x + int(1)), nn) - head_sum(n, dim, |k| pow(x, k)),
        Weight::MixedMoment { r, .. } => int(mixed_moment_expected(n, dim, *r)?),
        Weight::BaseRow { base } => {
            let mut acc = BigRational::zero();
            for k in (dim as i64 + 1)..=nn {
                let v = base.get(&k).ok_or(Error::RangeExceeded(k))?;
                acc += int(binomial(nn, k)) * v;
            }
            acc
        }
        Weight::Combination(terms) => {
            let mut acc = BigRational::zero();
            for (c, t) in terms {
                acc += c * closed_form(t, n, dim)?;
            }
            acc
        }
        Weight::Custom(_) => return Err(Error::UnknownIdentity(w.name.clone())),
    };
    Ok(v)
}

/// Closed form of a catalogue weight looked up by name.
pub fn expected_closed_form(name: &str, n: usize, dim: usize, param: Option<&BigRational>) -> Result<BigRational> {
    closed_form(&WeightSpec::from_name(name, param)?, n, dim)
}

/// `M_r = sum_k (-1)^(k+d+1) m_r(k) X[k, 0]`.
pub fn moment(table: &CensusTable, r: usize) -> i128 {
    table
        .entries()
        .filter(|&(_, l, _)| l == 0)
        .map(|(k, _, c)| sign(k as i64 + table.dim as i64 + 1) * moment_kernel(r, k as i64) * c as i128)
        .sum()
}

/// `F_r = sum_k sum_{l <= r} (-1)^(k-l+1+d) m_{r-l}(k-l) X[k, l]`, for any `r`.
pub fn mixed_moment_sum_any(table: &CensusTable, r: usize) -> i128 {
    table
        .entries()
        .filter(|&(_, l, _)| l <= r)
        .map(|(k, l, c)| {
            let (k, l) = (k as i64, l as i64);
            sign(k - l + 1 + table.dim as i64) * moment_kernel(r - l as usize, k - l) * c as i128
        })
        .sum()
}

/// [`mixed_moment_sum_any`] restricted to the range `r <= 2` where its value is
/// known to depend only on `n`.
pub fn mixed_moment_sum(table: &CensusTable, r: usize) -> Result<i128> {
    if r > 2 {
        return Err(Error::BadR(r));
    }
    Ok(mixed_moment_sum_any(table, r))
}

/// Value of `F_r` for `n` points in dimension `dim`, `r <= 2`.
pub fn mixed_moment_expected(n: usize, dim: usize, r: usize) -> Result<i128> {
    let d = dim as i64;
    let c = |k: i64| binomial_i128(n as i64, k);
    let v = match r {
        0 => (0..=d).map(|k| sign(d - k) * c(k)).sum(),
        1 => (0..=d).map(|k| sign(d - k) * k as i128 * c(k)).sum(),
        2 => (0..=d).map(|k| sign(d + k) * (k as i128 * (k as i128 - 3) / 2) * c(k)).sum(),
        _ => return Err(Error::BadR(r)),
    };
    Ok(v)
}

/// `M_0` for any set: `sum_{k=0}^{d} (-1)^(d-k) C(n, k)`; in the plane `C(n,2) - n + 1`.
pub fn m0_expected(n: usize, dim: usize) -> i128 {
    mixed_moment_expected(n, dim, 0).expect("r = 0")
}

/// `M_1` for any set: `sum_{k=0}^{d} (-1)^(d-k) k C(n, k) + (n - h)`; in the plane `2 C(n,2) - h`.
pub fn m1_expected(n: usize, h: usize, dim: usize) -> i128 {
    mixed_moment_expected(n, dim, 1).expect("r = 1") + (n - h) as i128
}

/// Checks that `xs` are `count` distinct nonzero values.
fn check_points(xs: &[BigRational], count: usize) -> Result<()> {
    if xs.len() != count {
        return Err(Error::BadVectorLength { expected: count, got: xs.len() });
    }
    for (i, x) in xs.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::ZeroX);
        }
        if xs[..i].contains(x) {
            return Err(Error::RepeatedX(x.to_string()));
        }
    }
    Ok(())
}

fn empty_columns(n: usize, dim: usize, xs: &[BigRational]) -> Vec<Vec<BigRational>> {
    xs.iter().map(|x| ((dim as i64 + 1)..=n as i64).map(|k| pow(x, k)).collect()).collect()
}

/// Exact rank of the `P_x` equations restricted to the `X[k, 0]` columns,
/// for `n - dim` distinct nonzero values of `x`.
pub fn vandermonde_rank(n: usize, dim: usize, xs: &[BigRational]) -> Result<usize> {
    if n <= dim {
        return Err(Error::BadN { n, reason: format!("need more than {dim} points") });
    }
    check_points(xs, n - dim)?;
    Ok(linalg::rank(&empty_columns(n, dim, xs)))
}

/// Rank of the full coefficient matrix whose rows are the weights and whose
/// columns are all `(k, l)` with `dim < k`, `k + l <= n`.
pub fn weight_matrix_rank(n: usize, dim: usize, weights: &[WeightSpec]) -> Result<usize> {
    let mut rows = Vec::with_capacity(weights.len());
    for w in weights {
        let mut row = Vec::new();
        for k in (dim + 1)..=n {
            for l in 0..=(n - k) {
                row.push(w.eval(k as i64, l as i64)?);
            }
        }
        rows.push(row);
    }
    Ok(linalg::rank(&rows))
}

/// Coefficients `c_j` with `f(k, 0) = sum_j c_j x_j^k` for `dim < k <= n`, so
/// that `sum_j c_j P_{x_j}(S) = F_w(S)` for every set of `n` points.
pub fn decompose_weight(w: &WeightSpec, n: usize, dim: usize, xs: &[BigRational]) -> Result<Vec<BigRational>> {
    if n <= dim {
        return Err(Error::BadN { n, reason: format!("need more than {dim} points") });
    }
    check_points(xs, n - dim)?;
    let ks: Vec<i64> = ((dim as i64 + 1)..=n as i64).collect();
    let a: Vec<Vec<BigRational>> = ks.iter().map(|&k| xs.iter().map(|x| pow(x, k)).collect()).collect();
    let mut b = Vec::with_capacity(ks.len());
    for &k in &ks {
        b.push(w.eval(k, 0)?);
    }
    linalg::solve(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn convex_table(n: usize, dim: usize) -> CensusTable {
        let mut t = CensusTable::new(n, n, dim);
        for k in (dim + 1)..=n {
            t.add(k, 0, u64::try_from(binomial(n as i64, k as i64)).unwrap());
        }
        t
    }

    fn triangle_plus_interior() -> CensusTable {
        let mut t = CensusTable::new(4, 3, 2);
        t.add(3, 0, 3);
        t.add(3, 1, 1);
        t
    }

    #[test]
    fn fibonacci_on_all_integers() {
        let small: Vec<i64> = (-8..=8).map(|i| i64::try_from(fib(i)).unwrap()).collect();
        assert_eq!(small, vec![-21, 13, -8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13, 21]);
        for i in -30..30 {
            assert_eq!(fib(i), fib(i - 1) + fib(i - 2));
        }
    }

    #[test]
    fn trig_tables_match_floating_point() {
        let third = std::f64::consts::PI / 3.0;
        for m in -12..12 {
            let c = 2.0 * (m as f64 * third).cos();
            let s = 2.0 / 3f64.sqrt() * (m as f64 * third).sin();
            assert!((c - two_cos_third(m) as f64).abs() < 1e-9);
            assert!((s - scaled_sin_third(m) as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn moment_kernel_values() {
        for k in 2..20 {
            assert_eq!(moment_kernel(1, k), k as i128);
        }
        for k in 4..20 {
            assert_eq!(moment_kernel(2, k), (k * (k - 3) / 2) as i128);
        }
        assert_eq!(moment_kernel(3, 5), 0);
        assert_eq!(moment_kernel(3, 6), 2);
        for k in 3..40 {
            assert_eq!(moment_kernel(2, k + 2) - moment_kernel(2, k + 1), moment_kernel(1, k));
            assert_eq!(moment_kernel(3, k + 2) - moment_kernel(3, k + 1), moment_kernel(2, k));
        }
    }

    #[test]
    fn recurrence_examples() {
        assert!(check_recurrence(&WeightSpec::powers_of_two(), 12, 10).unwrap());
        assert!(check_recurrence(&WeightSpec::fibonacci(), 12, 10).unwrap());
        let kl = WeightSpec::new("k*l", Weight::Custom(|k, l| int(k * l)));
        assert!(!check_recurrence(&kl, 3, 1).unwrap());
        assert!(closed_form(&kl, 5, 2).is_err());
        let empty_row = WeightSpec::from_base_row("empty", BTreeMap::new());
        assert_eq!(check_recurrence(&empty_row, 3, 1).unwrap_err(), Error::RangeExceeded(3));
        for w in catalogue(10, 2) {
            assert!(check_recurrence(&w, 14, 10).unwrap(), "{w}");
        }
        for r in 0..=2 {
            assert!(check_recurrence(&WeightSpec::mixed_moment(r, 2), 14, 6).unwrap());
        }
    }

    #[test]
    fn closed_forms_planar() {
        let dim = 2;
        assert_eq!(closed_form(&WeightSpec::powers_of_two(), 5, dim).unwrap(), int(16));
        assert_eq!(expected_closed_form("binomial", 6, dim, Some(&int(4))).unwrap(), int(15));
        assert_eq!(expected_closed_form("poly", 4, dim, Some(&int(-1))).unwrap(), int(-3));
        assert_eq!(closed_form(&WeightSpec::fibonacci(), 5, dim).unwrap(), int(40));
        assert!(matches!(expected_closed_form("binomial", 6, dim, Some(&int(2))), Err(Error::BadParam(_))));
        assert!(matches!(expected_closed_form("nope", 6, dim, None), Err(Error::UnknownIdentity(_))));
        // literal planar right-hand sides
        for n in 3..30i64 {
            let c2 = int(binomial(n, 2));
            let nn = int(n);
            let got = |w: WeightSpec| closed_form(&w, n as usize, dim).unwrap();
            assert_eq!(got(WeightSpec::powers_of_two()), pow(&int(2), n) - q(n * n, 2) - q(n, 2) - int(1));
            assert_eq!(got(WeightSpec::fibonacci()), int(fib(2 * n)) - &nn - &c2);
            assert_eq!(got(WeightSpec::alternating_fibonacci()), -int(fib(n)) + &nn - &c2);
            assert_eq!(got(WeightSpec::chebyshev_cos()), &c2 + &nn - int(2) + int(two_cos_third(n)));
            assert_eq!(got(WeightSpec::chebyshev_sin()), &c2 - &nn + int(scaled_sin_third(n)));
            let x = q(3, 7);
            let p = pow(&(&x + int(1)), n) - int(1) - &x * &nn - &x * &x * &c2;
            assert_eq!(got(WeightSpec::polynomial(x)), p);
        }
    }

    #[test]
    fn closed_forms_match_convex_position() {
        for dim in [2, 3] {
            for n in (dim + 1)..16 {
                let t = convex_table(n, dim);
                for w in catalogue(n, dim) {
                    assert_eq!(weighted_sum(&t, &w).unwrap(), closed_form(&w, n, dim).unwrap(), "{w} n={n} d={dim}");
                }
                for r in 0..=2 {
                    assert_eq!(mixed_moment_sum(&t, r).unwrap(), mixed_moment_expected(n, dim, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        let t = convex_table(5, 2);
        assert_eq!(weighted_sum(&t, &WeightSpec::powers_of_two()).unwrap(), int(16));
        assert_eq!(weighted_sum(&t, &WeightSpec::fibonacci()).unwrap(), int(40));
        assert_eq!(poly_sum(&t, &int(2)), int(192));
        let t = triangle_plus_interior();
        assert_eq!(weighted_sum(&t, &WeightSpec::powers_of_two()).unwrap(), int(5));
        assert_eq!(poly_sum(&t, &int(1)), int(5));
        assert_eq!(poly_sum(&t, &int(-1)), int(-(6 - 4 + 1)));
    }

    #[test]
    fn expand_base_row_examples() {
        let x = q(5, 3);
        let base: BTreeMap<i64, BigRational> = (0..20).map(|k| (k, pow(&x, k))).collect();
        for k in 3..8 {
            for l in 0..8 {
                assert_eq!(expand_base_row(&base, k, l).unwrap(), pow(&x, k) * pow(&(&x + int(1)), l));
            }
        }
        let ones: BTreeMap<i64, BigRational> = (0..20).map(|k| (k, int(1))).collect();
        assert_eq!(expand_base_row(&ones, 3, 5).unwrap(), int(32));
        let fibs: BTreeMap<i64, BigRational> = (0..20).map(|k| (k, int(fib(k)))).collect();
        assert_eq!(expand_base_row(&fibs, 3, 2).unwrap(), int(13));
        assert_eq!(expand_base_row(&fibs, 18, 3).unwrap_err(), Error::RangeExceeded(20));
        let w = WeightSpec::from_base_row("fib-row", fibs);
        assert_eq!(w.kind(), WeightKind::UserBaseRow);
        assert!(check_recurrence(&w, 10, 6).unwrap());
    }

    #[test]
    fn moment_examples() {
        let t = convex_table(4, 2);
        assert_eq!(moment(&t, 0), 3);
        assert_eq!(moment(&t, 1), 2 * 6 - 4);
        assert_eq!(moment(&t, 2), -2);
        let t = triangle_plus_interior();
        assert_eq!(moment(&t, 0), 3);
        assert_eq!(moment(&t, 1), 9);
        assert_eq!(m1_expected(4, 3, 2), 9);
    }

    #[test]
    fn mixed_moment_examples() {
        let t = triangle_plus_interior();
        assert_eq!(mixed_moment_sum(&t, 2).unwrap(), -2);
        assert_eq!(mixed_moment_sum(&t, 0).unwrap(), moment(&t, 0));
        let t = convex_table(5, 2);
        assert_eq!(mixed_moment_sum(&t, 1).unwrap(), 15);
        assert_eq!(mixed_moment_sum(&t, 3).unwrap_err(), Error::BadR(3));
        assert_eq!(mixed_moment_expected(4, 3, 0).unwrap(), 1);
        assert_eq!(mixed_moment_expected(5, 3, 1).unwrap(), 15);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(vandermonde_rank(5, 2, &[int(1), int(2), int(3)]).unwrap(), 3);
        assert_eq!(vandermonde_rank(4, 2, &[int(1), int(-2)]).unwrap(), 2);
        assert_eq!(vandermonde_rank(4, 2, &[int(1), int(1)]).unwrap_err(), Error::RepeatedX("1".into()));
        assert_eq!(vandermonde_rank(4, 2, &[int(1), int(0)]).unwrap_err(), Error::ZeroX);
        assert!(matches!(vandermonde_rank(5, 2, &[int(1)]), Err(Error::BadVectorLength { .. })));
        let ws: Vec<WeightSpec> = (1..=8).map(|x| WeightSpec::polynomial(int(x))).collect();
        assert_eq!(weight_matrix_rank(8, 2, &ws).unwrap(), 6);
    }

    #[test]
    fn decomposition_examples() {
        let xs = vec![int(1), int(2), int(3)];
        let c = decompose_weight(&WeightSpec::polynomial(int(2)), 5, 2, &xs).unwrap();
        assert_eq!(c, vec![int(0), int(1), int(0)]);
        let a = decompose_weight(&WeightSpec::powers_of_two(), 5, 2, &xs).unwrap();
        let b = decompose_weight(&WeightSpec::fibonacci(), 5, 2, &xs).unwrap();
        let combo = WeightSpec::combination(
            "2*pow2-3*fib",
            vec![(int(2), WeightSpec::powers_of_two()), (int(-3), WeightSpec::fibonacci())],
        );
        let c = decompose_weight(&combo, 5, 2, &xs).unwrap();
        let expected: Vec<BigRational> = a.iter().zip(&b).map(|(a, b)| int(2) * a - int(3) * b).collect();
        assert_eq!(c, expected);
    }
}
