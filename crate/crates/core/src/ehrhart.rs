//! Delta-vectors from counts, exact-rational quasi-polynomial interpolation,
//! series-numerator assembly by two routes (binomial transform of counts and
//! interleaving of the delta-vector of the doubled polytope), reciprocity of
//! the odd constituent, Eulerian polynomials, and the complete-graph closed
//! forms.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::count::{count_auto, CountRequest, Kind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::poly::{binomial, IntPolynomial, RatPolynomial};

/// The delta-vector `(delta_0, ..., delta_{d-1})` of a `d`-dimensional
/// context: `delta_0 = 1` and every entry nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        match entries.first() {
            Some(first) if first.is_one() => {}
            _ => {
                return Err(Error::domain(
                    "a delta-vector starts with delta_0 = 1".to_string(),
                ))
            }
        }
        if let Some(neg) = entries.iter().position(|e| e.is_negative()) {
            return Err(Error::domain(format!(
                "delta-vector entry {neg} is negative"
            )));
        }
        Ok(DeltaVector { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        DeltaVector::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// The dimension context `d` (the vector length).
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.entries.clone())
    }

    /// The chain `delta_0 <= delta_{d-1} <= delta_1 <= delta_{d-2} <= ...`,
    /// read off by interleaving the two ends inward.
    pub fn is_alternatingly_increasing(&self) -> bool {
        let d = self.entries.len();
        let mut prev: Option<&BigInt> = None;
        for t in 0..d {
            let idx = if t % 2 == 0 { t / 2 } else { d - (t + 1) / 2 };
            let cur = &self.entries[idx];
            if prev.is_some_and(|p| p > cur) {
                return false;
            }
            prev = Some(cur);
        }
        true
    }
}

/// Extracts `(delta_0, ..., delta_{d-1})` from the counts
/// `i(P, 0), ..., i(P, d-1)` of a lattice polytope whose numerator has
/// degree `d - 1`, as the binomial transform
/// `delta_k = sum_j (-1)^j C(d+1, j) counts[k - j]`.
///
/// A negative entry means the counts are not the counts of such a polytope.
pub fn delta_from_counts(counts: &[BigInt], d: usize) -> Result<DeltaVector> {
    match counts.first() {
        Some(first) if first.is_one() => {}
        _ => return Err(Error::domain("counts must begin with i(P, 0) = 1".to_string())),
    }
    if counts.len() < d {
        return Err(Error::domain(format!(
            "need counts for dilations 0..{}, got {}",
            d - 1,
            counts.len()
        )));
    }
    let mut entries = Vec::with_capacity(d);
    for k in 0..d {
        let mut delta = BigInt::zero();
        for j in 0..=k {
            let term = binomial(d + 1, j) * &counts[k - j];
            if j % 2 == 0 {
                delta += term;
            } else {
                delta -= term;
            }
        }
        if delta.is_negative() {
            return Err(Error::inconsistent(format!(
                "delta_{k} is negative; the input counts are not Ehrhart counts of dimension {d}"
            )));
        }
        entries.push(delta);
    }
    DeltaVector::new(entries)
}

/// Lagrange interpolation through `points.len()` distinct nodes; the result
/// has degree at most `points.len() - 1`, with exact rational coefficients.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RatPolynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::domain(format!("duplicate interpolation node {xi}")));
            }
        }
    }
    let mut acc = RatPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPolynomial::new(vec![BigRational::one()]);
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = &basis * &RatPolynomial::new(vec![-xj.clone(), BigRational::one()]);
            denom *= xi - xj;
        }
        let scale = yi / denom;
        let scaled =
            RatPolynomial::new(basis.coeffs().iter().map(|c| c * &scale).collect());
        acc = &acc + &scaled;
    }
    Ok(acc)
}

/// The period-2 quasi-polynomial of the fractional polytope: two exact
/// polynomials of degree `d` in the dilation, one per parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub even: RatPolynomial,
    pub odd: RatPolynomial,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: i64) -> BigRational {
        if n % 2 == 0 {
            self.even.eval_at_int(n)
        } else {
            self.odd.eval_at_int(n)
        }
    }
}

fn frac_count(g: &Graph, n: u64, limits: &Limits) -> Result<BigInt> {
    count_auto(&CountRequest { kind: Kind::Frac, graph: g, n }, limits)
}

fn p_count(g: &Graph, n: u64, limits: &Limits) -> Result<BigInt> {
    count_auto(&CountRequest { kind: Kind::P, graph: g, n }, limits)
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Interpolates the even constituent at dilations `0, 2, ..., 2d` and the
/// odd constituent at `1, 3, ..., 2d + 1`.
pub fn quasi_polynomial(g: &Graph, limits: &Limits) -> Result<QuasiPolynomial> {
    let d = g.vertex_count() as i64;
    let mut even = Vec::with_capacity(d as usize + 1);
    let mut odd = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let ne = 2 * k;
        let no = 2 * k + 1;
        even.push((
            rational(ne),
            BigRational::from_integer(frac_count(g, ne as u64, limits)?),
        ));
        odd.push((
            rational(no),
            BigRational::from_integer(frac_count(g, no as u64, limits)?),
        ));
    }
    Ok(QuasiPolynomial {
        even: interpolate(&even)?,
        odd: interpolate(&odd)?,
    })
}

/// Numerator of the Ehrhart series over `(1 - t^2)^(d+1)`, straight from the
/// counts: `g_j = sum_k (-1)^k C(d+1, k) i(FRAC, j - 2k)` for
/// `j = 0..2d-1`. Errors if any coefficient is negative or the degree is not
/// exactly `2d - 1`, which would mean the counts are inconsistent.
pub fn series_numerator_direct(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    let d = g.vertex_count();
    let counts: Vec<BigInt> = (0..2 * d as u64)
        .map(|n| frac_count(g, n, limits))
        .collect::<Result<_>>()?;
    let mut coeffs = Vec::with_capacity(2 * d);
    for j in 0..2 * d {
        let mut c = BigInt::zero();
        let mut k = 0;
        while 2 * k <= j {
            let term = binomial(d + 1, k) * &counts[j - 2 * k];
            if k % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
            k += 1;
        }
        if c.is_negative() {
            return Err(Error::inconsistent(format!(
                "series numerator coefficient {j} is negative"
            )));
        }
        coeffs.push(c);
    }
    let poly = IntPolynomial::new(coeffs);
    if poly.degree() != Some(2 * d - 1) {
        return Err(Error::inconsistent(format!(
            "series numerator has degree {:?}, expected {}",
            poly.degree(),
            2 * d - 1
        )));
    }
    Ok(poly)
}

/// Numerator assembled from the delta-vector of the doubled polytope by
/// interleaving the two ends:
/// `(delta_0, delta_{d-1}, delta_1, delta_{d-2}, ..., delta_{d-1}, delta_0)`.
pub fn series_numerator_theorem(delta: &DeltaVector) -> Result<IntPolynomial> {
    let d = delta.dim();
    if d < 2 {
        return Err(Error::domain(
            "interleaving needs a delta-vector of length at least 2".to_string(),
        ));
    }
    let entries = delta.entries();
    let mut coeffs = Vec::with_capacity(2 * d);
    for j in 0..2 * d {
        let idx = if j % 2 == 0 { j / 2 } else { d - (j + 1) / 2 };
        coeffs.push(entries[idx].clone());
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The Eulerian polynomial `A_k(t)`, with `A_0 = 1` and coefficients from
/// the recurrence `A(k, i) = (i+1) A(k-1, i) + (k-i) A(k-1, i-1)`.
pub fn eulerian(k: usize) -> IntPolynomial {
    IntPolynomial::new(eulerian_row(k))
}

fn eulerian_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=k {
        let mut next = vec![BigInt::zero(); n.max(1)];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if i < row.len() {
                v += BigInt::from(i + 1) * &row[i];
            }
            if i >= 1 && i - 1 < row.len() {
                v += BigInt::from(n - i) * &row[i - 1];
            }
            *slot = v;
        }
        row = next;
    }
    row
}

/// `A(k, i)` with the out-of-range convention `A(k, i) = 0`.
fn eulerian_number(table: &[Vec<BigInt>], k: usize, i: usize) -> BigInt {
    table[k].get(i).cloned().unwrap_or_else(BigInt::zero)
}

fn eulerian_table(up_to: usize) -> Vec<Vec<BigInt>> {
    (0..=up_to).map(eulerian_row).collect()
}

/// Closed-form delta-vector for the complete graph: `delta_0 = 1` and
/// `delta_i = A(d, i) + d A(d-1, i-1)`.
pub fn complete_graph_delta(d: usize) -> Result<DeltaVector> {
    if d < 2 {
        return Err(Error::domain(format!("complete graph needs d >= 2, got {d}")));
    }
    let table = eulerian_table(d);
    let mut entries = vec![BigInt::one()];
    for i in 1..d {
        let a = eulerian_number(&table, d, i);
        let b = if i >= 1 {
            eulerian_number(&table, d - 1, i - 1)
        } else {
            BigInt::zero()
        };
        entries.push(a + BigInt::from(d) * b);
    }
    DeltaVector::new(entries)
}

/// Closed-form series numerator for the complete graph: `b_0 = 1` and
/// `b_i = A(d, floor(i/2)) + d A(d-1, floor((i-1)/2))`.
pub fn complete_graph_numerator(d: usize) -> Result<IntPolynomial> {
    if d < 2 {
        return Err(Error::domain(format!("complete graph needs d >= 2, got {d}")));
    }
    let table = eulerian_table(d);
    let mut coeffs = vec![BigInt::one()];
    for i in 1..2 * d {
        let a = eulerian_number(&table, d, i / 2);
        let b = eulerian_number(&table, d - 1, (i - 1) / 2);
        coeffs.push(a + BigInt::from(d) * b);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The Ehrhart polynomial of the doubled polytope, interpolated from its
/// counts at dilations `0..=d`.
pub fn ehrhart_polynomial_p(g: &Graph, limits: &Limits) -> Result<RatPolynomial> {
    let d = g.vertex_count() as i64;
    let points = (0..=d)
        .map(|n| {
            Ok((
                rational(n),
                BigRational::from_integer(p_count(g, n as u64, limits)?),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// The delta-vector of the doubled polytope, from its counts at dilations
/// `0..d-1`.
pub fn delta_of_p(g: &Graph, limits: &Limits) -> Result<DeltaVector> {
    let d = g.vertex_count();
    let counts: Vec<BigInt> = (0..d as u64)
        .map(|n| p_count(g, n, limits))
        .collect::<Result<_>>()?;
    delta_from_counts(&counts, d)
}

/// One reciprocity instance: the odd constituent at `2k + 1` against the
/// sign-twisted even constituent at `-2k - 4` and the sign-twisted count
/// polynomial of the doubled polytope at `-k - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityCheck {
    pub k: u32,
    pub odd_value: BigRational,
    pub even_reflected: BigRational,
    pub p_reflected: BigRational,
}

impl ReciprocityCheck {
    pub fn holds(&self) -> bool {
        self.odd_value == self.even_reflected && self.odd_value == self.p_reflected
    }
}

/// Evaluates the reciprocity identity exactly for `k = 0..=k_max`.
pub fn reciprocity_report(
    g: &Graph,
    k_max: u32,
    limits: &Limits,
) -> Result<Vec<ReciprocityCheck>> {
    let d = g.vertex_count();
    let quasi = quasi_polynomial(g, limits)?;
    let p_poly = ehrhart_polynomial_p(g, limits)?;
    let sign = if d % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    Ok((0..=k_max)
        .map(|k| {
            let kk = k as i64;
            ReciprocityCheck {
                k,
                odd_value: quasi.odd.eval_at_int(2 * kk + 1),
                even_reflected: &sign * quasi.even.eval_at_int(-2 * kk - 4),
                p_reflected: &sign * p_poly.eval_at_int(-kk - 2),
            }
        })
        .collect())
}

/// True iff the reciprocity identity holds at this `k`.
pub fn reciprocity_check(g: &Graph, k: u32, limits: &Limits) -> Result<bool> {
    Ok(reciprocity_report(g, k, limits)?
        .last()
        .expect("k_max >= 0 yields at least one check")
        .holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn big_vec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn delta_from_counts_examples() {
        let d = delta_from_counts(&big_vec(&[1, 6]), 2).unwrap();
        assert_eq!(d.entries(), big_vec(&[1, 3]).as_slice());

        let d = delta_from_counts(&big_vec(&[1, 11, 42]), 3).unwrap();
        assert_eq!(d.entries(), big_vec(&[1, 7, 4]).as_slice());

        let d = delta_from_counts(&big_vec(&[1, 1]), 1).unwrap();
        assert_eq!(d.entries(), big_vec(&[1]).as_slice());
    }

    #[test]
    fn delta_from_counts_rejects_bad_input() {
        assert!(delta_from_counts(&big_vec(&[2, 6]), 2).is_err());
        assert!(delta_from_counts(&big_vec(&[1]), 2).is_err());
        // counts all 1 in dimension 2 are not Ehrhart counts: delta_1 < 0
        assert!(matches!(
            delta_from_counts(&big_vec(&[1, 1]), 2),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn interpolation_examples() {
        let pts: Vec<_> = [(0, 1), (1, 3), (2, 6)]
            .iter()
            .map(|&(x, y)| (rational(x), rational(y)))
            .collect();
        let p = interpolate(&pts).unwrap();
        // (n+1)(n+2)/2
        for n in 0..8 {
            assert_eq!(p.eval_at_int(n), rational((n + 1) * (n + 2) / 2));
        }

        let constant = interpolate(&[(rational(0), rational(1))]).unwrap();
        assert_eq!(constant.degree(), Some(0).filter(|_| !constant.is_zero()));
        assert_eq!(constant.eval_at_int(17), rational(1));

        assert!(interpolate(&[
            (rational(1), rational(2)),
            (rational(1), rational(3))
        ])
        .is_err());
    }

    #[test]
    fn quasi_polynomial_k2_parts_agree() {
        let k2 = Graph::family("complete:2").unwrap();
        let q = quasi_polynomial(&k2, &limits()).unwrap();
        assert_eq!(q.even, q.odd);
        for n in 0..6 {
            assert_eq!(q.eval(n), rational((n + 1) * (n + 2) / 2));
        }
    }

    #[test]
    fn quasi_polynomial_c3_values() {
        let c3 = Graph::family("cycle:3").unwrap();
        let q = quasi_polynomial(&c3, &limits()).unwrap();
        assert_eq!(q.eval(2), rational(11));
        assert_eq!(q.eval(1), rational(4));
    }

    #[test]
    fn numerator_direct_examples() {
        let c3 = Graph::family("cycle:3").unwrap();
        assert_eq!(
            series_numerator_direct(&c3, &limits()).unwrap(),
            IntPolynomial::from_i64(&[1, 4, 7, 7, 4, 1])
        );
        let k2 = Graph::family("complete:2").unwrap();
        assert_eq!(
            series_numerator_direct(&k2, &limits()).unwrap(),
            IntPolynomial::from_i64(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn numerator_theorem_examples() {
        let d = DeltaVector::from_i64(&[1, 7, 4]).unwrap();
        assert_eq!(
            series_numerator_theorem(&d).unwrap(),
            IntPolynomial::from_i64(&[1, 4, 7, 7, 4, 1])
        );
        let d = DeltaVector::from_i64(&[1, 3]).unwrap();
        assert_eq!(
            series_numerator_theorem(&d).unwrap(),
            IntPolynomial::from_i64(&[1, 3, 3, 1])
        );
        let single = DeltaVector::from_i64(&[1]).unwrap();
        assert!(series_numerator_theorem(&single).is_err());
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian(0), IntPolynomial::from_i64(&[1]));
        assert_eq!(eulerian(1), IntPolynomial::from_i64(&[1]));
        assert_eq!(eulerian(3), IntPolynomial::from_i64(&[1, 4, 1]));
        assert_eq!(eulerian(4), IntPolynomial::from_i64(&[1, 11, 11, 1]));
    }

    #[test]
    fn eulerian_matches_descent_brute_force() {
        for k in 1..=6usize {
            let mut hist = vec![BigInt::zero(); k];
            for perm in (1..=k).permutations(k) {
                let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
                hist[descents] += 1;
            }
            assert_eq!(eulerian(k), IntPolynomial::new(hist), "k = {k}");
        }
    }

    #[test]
    fn eulerian_symmetric_unimodal_up_to_10() {
        for k in 1..=10 {
            let a = eulerian(k);
            assert!(a.is_symmetric() && a.is_unimodal(), "k = {k}");
        }
    }

    #[test]
    fn complete_graph_closed_forms() {
        assert_eq!(
            complete_graph_delta(2).unwrap(),
            DeltaVector::from_i64(&[1, 3]).unwrap()
        );
        assert_eq!(
            complete_graph_delta(3).unwrap(),
            DeltaVector::from_i64(&[1, 7, 4]).unwrap()
        );
        assert_eq!(
            complete_graph_numerator(3).unwrap(),
            IntPolynomial::from_i64(&[1, 4, 7, 7, 4, 1])
        );
        assert!(complete_graph_delta(1).is_err());
    }

    #[test]
    fn delta_of_p_matches_closed_form() {
        for d in 2..=5usize {
            let g = Graph::family(&format!("complete:{d}")).unwrap();
            assert_eq!(
                delta_of_p(&g, &limits()).unwrap(),
                complete_graph_delta(d).unwrap(),
                "d = {d}"
            );
        }
    }

    #[test]
    fn reciprocity_examples() {
        let c3 = Graph::family("cycle:3").unwrap();
        assert!(reciprocity_check(&c3, 0, &limits()).unwrap());

        let k2 = Graph::family("complete:2").unwrap();
        assert!(reciprocity_check(&k2, 1, &limits()).unwrap());

        let c5 = Graph::family("cycle:5").unwrap();
        let report = reciprocity_report(&c5, 0, &limits()).unwrap();
        assert_eq!(report[0].odd_value, rational(11));
        assert!(report[0].holds());
    }

    #[test]
    fn alternatingly_increasing_examples() {
        assert!(DeltaVector::from_i64(&[1, 7, 4])
            .unwrap()
            .is_alternatingly_increasing());
        assert!(!DeltaVector::from_i64(&[1, 0, 2])
            .unwrap()
            .is_alternatingly_increasing());
        assert!(DeltaVector::from_i64(&[1, 51, 206, 131, 11])
            .unwrap()
            .is_alternatingly_increasing());
    }

    proptest! {
        /// Interpolation reproduces any small rational polynomial sampled at
        /// enough integer nodes.
        #[test]
        fn interpolation_round_trip(
            coeffs in proptest::collection::vec((-20i64..=20, 1i64..=6), 1..5)
        ) {
            let poly = RatPolynomial::new(
                coeffs
                    .iter()
                    .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                    .collect(),
            );
            let nodes: Vec<_> = (0..coeffs.len() as i64)
                .map(|n| (rational(n), poly.eval_at_int(n)))
                .collect();
            let back = interpolate(&nodes).unwrap();
            prop_assert_eq!(back, poly);
        }
    }
}
