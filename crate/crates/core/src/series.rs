//! Graded dimension bookkeeping and the dimension-series calculus:
//! the multigraded Witt formula, PBW (universal enveloping) series, and
//! dimensions of the free Lie algebra on a graded module.
//!
//! Series are truncated multivariate polynomials, cut by *total* degree;
//! every operation takes the cutoff explicitly so results are reproducible.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lyndon::{multidegrees_up_to, MultiDegree};
use crate::rational::Rational;

/// Graded dimensions: multidegree -> dimension, zero entries implicit,
/// covering every multidegree of total degree <= cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    nletters: usize,
    cutoff: u32,
    dims: BTreeMap<MultiDegree, u64>,
}

impl GradedDims {
    pub fn new(nletters: usize, cutoff: u32) -> Self {
        GradedDims { nletters, cutoff, dims: BTreeMap::new() }
    }

    pub fn nletters(&self) -> usize {
        self.nletters
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn get(&self, alpha: &MultiDegree) -> u64 {
        self.dims.get(alpha).copied().unwrap_or(0)
    }

    pub fn set(&mut self, alpha: MultiDegree, dim: u64) {
        debug_assert_eq!(alpha.len(), self.nletters);
        debug_assert!(alpha.total() <= self.cutoff);
        if dim == 0 {
            self.dims.remove(&alpha);
        } else {
            self.dims.insert(alpha, dim);
        }
    }

    /// Nonzero entries in (total degree, lex) order.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, u64)> {
        self.dims.iter().map(|(a, &d)| (a, d))
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Sum of dimensions over all multidegrees of the given total degree.
    pub fn total_at(&self, n: u32) -> u64 {
        self.dims
            .iter()
            .filter(|(a, _)| a.total() == n)
            .map(|(_, &d)| d)
            .sum()
    }

    /// Push dimensions through a slot permutation: entry at `alpha` moves to
    /// the multidegree beta with `beta[perm[k]] = alpha[k]`.
    pub fn permute(&self, perm: &[usize]) -> GradedDims {
        assert_eq!(perm.len(), self.nletters);
        let mut out = GradedDims::new(self.nletters, self.cutoff);
        for (alpha, d) in self.iter() {
            let mut counts = vec![0u32; self.nletters];
            for (k, &c) in alpha.counts().iter().enumerate() {
                counts[perm[k]] = c;
            }
            out.set(MultiDegree::new(counts), d);
        }
        out
    }

    /// Reinterpret over a larger alphabet, padding zero slots on the right.
    pub fn embed_prefix(&self, nletters: usize) -> GradedDims {
        assert!(nletters >= self.nletters);
        let mut out = GradedDims::new(nletters, self.cutoff);
        for (alpha, d) in self.iter() {
            let mut counts = alpha.counts().to_vec();
            counts.resize(nletters, 0);
            out.set(MultiDegree::new(counts), d);
        }
        out
    }

    /// Multidegrees where the two tables disagree, up to total degree
    /// `cutoff`, in (total, lex) order.
    pub fn mismatches(&self, other: &GradedDims, cutoff: u32) -> Vec<(MultiDegree, u64, u64)> {
        assert_eq!(self.nletters, other.nletters);
        let mut out = Vec::new();
        for alpha in multidegrees_up_to(self.nletters, cutoff) {
            let (a, b) = (self.get(&alpha), other.get(&alpha));
            if a != b {
                out.push((alpha, a, b));
            }
        }
        out
    }
}

impl Serialize for GradedDims {
    /// A list of `{"degree": [..], "dim": n}` records in (total, lex) order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            degree: &'a MultiDegree,
            dim: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.dims.len()))?;
        for (degree, dim) in self.iter() {
            seq.serialize_element(&Record { degree, dim })?;
        }
        seq.end()
    }
}

fn moebius(mut d: u32) -> i64 {
    debug_assert!(d >= 1);
    let mut primes = 0;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if d > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multinomial coefficient n! / prod(parts!), with n = sum(parts).
fn multinomial(parts: &[u32]) -> i128 {
    let mut result: i128 = 1;
    let mut n: u32 = 0;
    for &part in parts {
        for i in 1..=part {
            n += 1;
            result = result * i128::from(n) / i128::from(i);
        }
    }
    result
}

/// The multigraded Witt formula: the dimension of the free Lie algebra
/// component of multidegree `alpha`,
/// (1/|a|) * sum over d | gcd(a) of mu(d) * (|a|/d)! / prod((a_i/d)!).
pub fn witt_dim(alpha: &MultiDegree) -> u64 {
    assert!(!alpha.is_zero(), "witt_dim needs a nonzero multidegree");
    let g = alpha
        .counts()
        .iter()
        .copied()
        .filter(|&c| c > 0)
        .fold(0, gcd);
    let n = alpha.total();
    let mut sum: i128 = 0;
    for d in 1..=g {
        if g % d != 0 {
            continue;
        }
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let parts: Vec<u32> = alpha.counts().iter().map(|&c| c / d).collect();
        sum += i128::from(mu) * multinomial(&parts);
    }
    debug_assert!(sum >= 0 && sum % i128::from(n) == 0);
    u64::try_from(sum / i128::from(n)).expect("Witt dimension fits in u64")
}

/// Free Lie algebra dimensions over `nletters` generators up to the cutoff.
pub fn free_lie_dims(nletters: usize, cutoff: u32) -> GradedDims {
    let mut out = GradedDims::new(nletters, cutoff);
    for alpha in multidegrees_up_to(nletters, cutoff) {
        out.set(alpha.clone(), witt_dim(&alpha));
    }
    out
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * u128::from(n - k + i) / u128::from(i);
    }
    u64::try_from(result).expect("series coefficient fits in u64")
}

/// Coefficients of the PBW product prod over alpha of (1 - t^alpha)^(-g_alpha),
/// truncated at the total-degree cutoff. The entry at the zero multidegree
/// is 1. These are the graded dimensions of the universal enveloping algebra
/// of an algebra with dimensions `g`.
pub fn pbw_series(g: &GradedDims, cutoff: u32) -> GradedDims {
    assert!(
        g.iter().all(|(a, _)| !a.is_zero()),
        "pbw_series input may not have support at degree zero"
    );
    let nletters = g.nletters();
    let mut result: BTreeMap<MultiDegree, u64> = BTreeMap::new();
    result.insert(MultiDegree::zero(nletters), 1);
    for (alpha, d) in g.iter() {
        if alpha.total() > cutoff {
            continue;
        }
        // (1 - t^a)^(-d) = sum over j of C(d-1+j, j) t^(ja)
        let mut factor: Vec<(MultiDegree, u64)> = Vec::new();
        let mut j = 0u32;
        while j * alpha.total() <= cutoff {
            factor.push((alpha.scale(j), binomial_u64(d + u64::from(j) - 1, u64::from(j))));
            j += 1;
        }
        result = mul_truncated(&result, &factor, cutoff);
    }
    let mut out = GradedDims::new(nletters, cutoff);
    for (alpha, d) in result {
        out.set(alpha, d);
    }
    out
}

fn mul_truncated(
    a: &BTreeMap<MultiDegree, u64>,
    b: &[(MultiDegree, u64)],
    cutoff: u32,
) -> BTreeMap<MultiDegree, u64> {
    let mut out = BTreeMap::new();
    for (da, ca) in a {
        for (db, cb) in b {
            let d = da.add(db);
            if d.total() > cutoff {
                continue;
            }
            *out.entry(d).or_insert(0u64) += ca * cb;
        }
    }
    out
}

/// Product of two truncated PBW-style series (both including their degree-zero
/// constant term), truncated at the cutoff.
pub fn mul_series(a: &GradedDims, b: &GradedDims, cutoff: u32) -> GradedDims {
    assert_eq!(a.nletters(), b.nletters());
    let mut out = GradedDims::new(a.nletters(), cutoff);
    let mut acc: BTreeMap<MultiDegree, u64> = BTreeMap::new();
    for (da, ca) in a.iter() {
        for (db, cb) in b.iter() {
            let d = da.add(db);
            if d.total() > cutoff {
                continue;
            }
            *acc.entry(d).or_insert(0) += ca * cb;
        }
    }
    for (d, c) in acc {
        out.set(d, c);
    }
    out
}

/// Dimensions of the free Lie algebra on a graded module with dimensions `n`:
/// the unique family l with prod (1 - t^b)^(l_b) = 1 - sum n_g t^g.
///
/// Solved by taking logarithms and inducting on total degree; the solution
/// is an integer by construction, so a non-integral or negative value is
/// reported as [`Error::NonIntegralDimension`] rather than rounded.
pub fn free_lie_on_module(n: &GradedDims, cutoff: u32) -> Result<GradedDims> {
    assert!(
        n.iter().all(|(a, _)| !a.is_zero()),
        "module dimensions may not have support at degree zero"
    );
    let nletters = n.nletters();

    // rhs = sum over m >= 1 of (sum n_g t^g)^m / m, truncated
    let s: BTreeMap<MultiDegree, Rational> = n
        .iter()
        .filter(|(a, _)| a.total() <= cutoff)
        .map(|(a, d)| (a.clone(), Rational::from_int(d as i64)))
        .collect();
    let mut rhs: BTreeMap<MultiDegree, Rational> = BTreeMap::new();
    let mut power = s.clone(); // s^m
    let mut m = 1u32;
    loop {
        if power.is_empty() {
            break;
        }
        let inv_m = Rational::from_int(i64::from(m)).recip().expect("m >= 1");
        for (d, c) in &power {
            let entry = rhs.entry(d.clone()).or_insert_with(Rational::zero);
            *entry += &(c * &inv_m);
        }
        // every term of s has total degree >= 1, so powers beyond the
        // cutoff vanish entirely
        if m >= cutoff {
            break;
        }
        let mut next: BTreeMap<MultiDegree, Rational> = BTreeMap::new();
        for (da, ca) in &power {
            for (db, cb) in &s {
                let d = da.add(db);
                if d.total() > cutoff {
                    continue;
                }
                let entry = next.entry(d).or_insert_with(Rational::zero);
                *entry += &(ca * cb);
            }
        }
        power = next;
        m += 1;
    }

    // solve sum over k >= 1 of l_{b/k} / k = rhs_b by induction on |b|
    let mut out = GradedDims::new(nletters, cutoff);
    for beta in multidegrees_up_to(nletters, cutoff) {
        let mut value = rhs.get(&beta).cloned().unwrap_or_else(Rational::zero);
        let mut k = 2u32;
        while u32::from(beta.total()) >= k {
            if let Some(delta) = beta.try_div(k) {
                let l = out.get(&delta);
                if l > 0 {
                    let term = Rational::from_int(l as i64)
                        .checked_div(&Rational::from_int(i64::from(k)))
                        .expect("k >= 2");
                    value -= &term;
                }
            }
            k += 1;
        }
        if value.is_zero() {
            continue;
        }
        match value.to_integer() {
            Some(i) if !value.is_negative() => {
                let dim = u64::try_from(i).map_err(|_| Error::NonIntegralDimension {
                    degree: format!("{beta:?}"),
                    value: value.to_string(),
                })?;
                out.set(beta, dim);
            }
            _ => {
                return Err(Error::NonIntegralDimension {
                    degree: format!("{beta:?}"),
                    value: value.to_string(),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::lyndon_words_of_multidegree;

    fn md(counts: &[u32]) -> MultiDegree {
        MultiDegree::new(counts.to_vec())
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dim(&md(&[1, 0])), 1);
        assert_eq!(witt_dim(&md(&[2, 1])), 1);
        assert_eq!(witt_dim(&md(&[2, 2])), 1);
        assert_eq!(witt_dim(&md(&[2, 0])), 0);
        // total-degree-5 sum over two letters
        let total: u64 = multidegrees_up_to(2, 5)
            .into_iter()
            .filter(|a| a.total() == 5)
            .map(|a| witt_dim(&a))
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn witt_counts_lyndon_words() {
        for k in [2usize, 3] {
            for alpha in multidegrees_up_to(k, 8) {
                assert_eq!(
                    witt_dim(&alpha) as usize,
                    lyndon_words_of_multidegree(&alpha).len(),
                    "alpha={alpha:?}"
                );
            }
        }
    }

    #[test]
    fn moebius_small() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u32 + 1), e, "mu({})", i + 1);
        }
    }

    #[test]
    fn pbw_of_one_generator_is_polynomial_algebra() {
        let mut g = GradedDims::new(1, 6);
        g.set(md(&[1]), 1);
        let u = pbw_series(&g, 6);
        for n in 0..=6 {
            assert_eq!(u.get(&md(&[n])), 1);
        }
    }

    #[test]
    fn pbw_of_free_lie_is_tensor_algebra() {
        for k in [2usize, 3] {
            let g = free_lie_dims(k, 6);
            let u = pbw_series(&g, 6);
            for n in 1..=6u32 {
                assert_eq!(u.total_at(n), (k as u64).pow(n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn pbw_of_zero_is_constant_one() {
        let g = GradedDims::new(2, 5);
        let u = pbw_series(&g, 5);
        assert_eq!(u.get(&MultiDegree::zero(2)), 1);
        assert_eq!(u.iter().count(), 1);
    }

    #[test]
    fn free_lie_on_single_generator() {
        let mut n = GradedDims::new(1, 6);
        n.set(md(&[1]), 1);
        let l = free_lie_on_module(&n, 6).unwrap();
        assert_eq!(l, {
            let mut e = GradedDims::new(1, 6);
            e.set(md(&[1]), 1);
            e
        });
    }

    #[test]
    fn free_lie_on_two_degree_one_generators_gives_witt() {
        let mut n = GradedDims::new(1, 5);
        n.set(md(&[1]), 2);
        let l = free_lie_on_module(&n, 5).unwrap();
        let expect = [2u64, 1, 2, 3, 6];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(l.get(&md(&[i as u32 + 1])), e, "degree {}", i + 1);
        }
    }

    #[test]
    fn free_lie_on_module_matches_relabeled_witt() {
        // generators u at (0,1) and v at (1,1); component (p,q) of the free
        // Lie algebra pulls back to the (u,v)-multidegree (q-p, p)
        let mut n = GradedDims::new(2, 6);
        n.set(md(&[0, 1]), 1);
        n.set(md(&[1, 1]), 1);
        let l = free_lie_on_module(&n, 6).unwrap();
        for alpha in multidegrees_up_to(2, 6) {
            let (p, q) = (alpha.get(0), alpha.get(1));
            let expect = if q >= p && q >= 1 {
                let uv = md(&[q - p, p]);
                if uv.is_zero() {
                    0
                } else {
                    witt_dim(&uv)
                }
            } else {
                0
            };
            assert_eq!(l.get(&alpha), expect, "alpha={alpha:?}");
        }
        assert_eq!(l.get(&md(&[1, 2])), 1);
        assert_eq!(l.get(&md(&[2, 2])), 0);
    }

    #[test]
    fn graded_dims_serialization_order() {
        let mut g = GradedDims::new(2, 3);
        g.set(md(&[2, 0]), 5);
        g.set(md(&[0, 1]), 7);
        g.set(md(&[1, 1]), 1);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"[{"degree":[0,1],"dim":7},{"degree":[1,1],"dim":1},{"degree":[2,0],"dim":5}]"#
        );
    }

    #[test]
    fn series_product() {
        // (sum t^n) * (sum t^n) = sum (n+1) t^n in one variable
        let mut g = GradedDims::new(1, 5);
        g.set(md(&[1]), 1);
        let u = pbw_series(&g, 5);
        let sq = mul_series(&u, &u, 5);
        for n in 0..=5u32 {
            assert_eq!(sq.get(&md(&[n])), u64::from(n) + 1);
        }
    }
}
