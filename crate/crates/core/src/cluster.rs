//! Cluster variables of the Kronecker cluster algebra (`x_k x_{k+2} = x_{k+1}² + 1`)
//! and of the affine `A_2` algebra (`x_m x_{m+3} = x_{m+1} x_{m+2} + 1`), the
//! Caldero-Chapoton map and its stratified variant, and the bases `z_n`, `u_n`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::invariants::{euler_char_table, smooth_part_euler, stratum_euler_exact};
use crate::kron::{DimVector, RepDescriptor};
use crate::laurent::LaurentPoly;
use crate::poly::binomial;

/// Largest `|k|` for which cluster variables are tabulated.
pub const INDEX_BOUND: i64 = 20;

fn check_index(k: i64) -> Result<()> {
    if k.abs() > INDEX_BOUND {
        Err(Error::IndexBound { index: k, bound: INDEX_BOUND })
    } else {
        Ok(())
    }
}

/// Values `x_{lo}..=x_{hi}` of an exchange recurrence of order `seeds.len()`,
/// generated from `x_1, …, x_r` forwards and backwards by exact division.
struct Table {
    lo: i64,
    values: Vec<LaurentPoly>,
}

impl Table {
    fn build(
        lo: i64,
        hi: i64,
        r: usize,
        exchange: impl Fn(&[LaurentPoly]) -> LaurentPoly,
    ) -> Table {
        let seeds: Vec<LaurentPoly> = (1..=r).map(|i| LaurentPoly::var(r, i)).collect();
        let mut map: BTreeMap<i64, LaurentPoly> =
            seeds.iter().cloned().enumerate().map(|(i, p)| (i as i64 + 1, p)).collect();
        let r = r as i64;
        // forward: x_{k+r} = exchange(x_{k+1}..x_{k+r-1}) / x_k
        for k in 1..=hi - r {
            let mid: Vec<_> = (k + 1..k + r).map(|j| map[&j].clone()).collect();
            let next = exchange(&mid)
                .exact_div(&map[&k])
                .expect("cluster variables are Laurent polynomials");
            map.insert(k + r, next);
        }
        // backward: x_k = exchange(x_{k+1}..x_{k+r-1}) / x_{k+r}
        for k in (lo..1).rev() {
            let mid: Vec<_> = (k + 1..k + r).map(|j| map[&j].clone()).collect();
            let prev = exchange(&mid)
                .exact_div(&map[&(k + r)])
                .expect("cluster variables are Laurent polynomials");
            map.insert(k, prev);
        }
        Table { lo, values: map.into_values().collect() }
    }

    fn get(&self, k: i64) -> LaurentPoly {
        self.values[(k - self.lo) as usize].clone()
    }
}

fn a11_table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        Table::build(-INDEX_BOUND, INDEX_BOUND, 2, |mid| {
            &(&mid[0] * &mid[0]) + &LaurentPoly::one(2)
        })
    })
}

fn a21_table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        Table::build(-INDEX_BOUND, INDEX_BOUND, 3, |mid| {
            &(&mid[0] * &mid[1]) + &LaurentPoly::one(3)
        })
    })
}

/// `x_k` of the Kronecker cluster algebra in the initial cluster `{x_1, x_2}`.
pub fn cluster_var_a11(k: i64) -> Result<LaurentPoly> {
    check_index(k)?;
    Ok(a11_table().get(k))
}

/// `x_m` of the affine `A_2` cluster algebra in the initial cluster `{x_1, x_2, x_3}`.
pub fn cluster_var_a21(m: i64) -> Result<LaurentPoly> {
    check_index(m)?;
    Ok(a21_table().get(m))
}

/// Dimension vector and Euler characteristics feeding the Caldero-Chapoton map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CCInput {
    d: Vec<usize>,
    chi: BTreeMap<Vec<usize>, u64>,
}

impl CCInput {
    pub fn new(d: Vec<usize>, chi: BTreeMap<Vec<usize>, u64>) -> Result<Self> {
        if !(2..=3).contains(&d.len()) {
            return Err(Error::InvalidDescriptor(format!(
                "dimension vector needs 2 or 3 components, got {}",
                d.len()
            )));
        }
        for e in chi.keys() {
            if e.len() != d.len() || e.iter().zip(&d).any(|(a, b)| a > b) {
                return Err(Error::OutOfRange {
                    e: (e.first().copied().unwrap_or(0), e.get(1).copied().unwrap_or(0)),
                    context: format!("CC input with d = {d:?}"),
                });
            }
        }
        let chi = chi.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(CCInput { d, chi })
    }

    fn kronecker(d: DimVector, chi: impl Fn(DimVector) -> u64) -> Self {
        let chi = d
            .sub_vectors()
            .map(|e| (vec![e.d1, e.d2], chi(e)))
            .filter(|(_, c)| *c != 0)
            .collect();
        CCInput { d: vec![d.d1, d.d2], chi }
    }

    /// Full Euler characteristics `χ(Gr_e(M))` of a Kronecker representation.
    pub fn from_rep(m: &RepDescriptor) -> Self {
        let table = euler_char_table(m);
        CCInput::kronecker(m.dim(), |e| table.get(&e).copied().unwrap_or(0))
    }

    /// `χ` of the smooth loci of `Gr_e(R_n)`.
    pub fn smooth_regular(n: usize) -> Self {
        CCInput::kronecker(DimVector::delta(n), |e| smooth_part_euler(n, e))
    }

    /// `χ` of `{N : dim Ext¹(N, R_n/N) = k}` inside `Gr_e(R_n)`.
    pub fn regular_stratum(n: usize, k: usize) -> Self {
        CCInput::kronecker(DimVector::delta(n), |e| stratum_euler_exact(n, e, k))
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn chi(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.chi
    }
}

/// `Σ_e χ(e) x1^{2(d2-e2)} x2^{2e1} / (x1^{d1} x2^{d2})`.
pub fn cc_map_a11(input: &CCInput) -> Result<LaurentPoly> {
    let [d1, d2] = input.d[..] else {
        return Err(Error::InvalidDescriptor("expected a 2-component dimension vector".into()));
    };
    let (d1, d2) = (d1 as i64, d2 as i64);
    let mut out = LaurentPoly::zero(2);
    for (e, &c) in &input.chi {
        let (e1, e2) = (e[0] as i64, e[1] as i64);
        out = &out + &LaurentPoly::monomial(2, vec![2 * (d2 - e2) - d1, 2 * e1 - d2], c);
    }
    Ok(out)
}

/// `Σ_e χ(e) x1^{d2+d3-e2-e3} x2^{d3-e3+e1} x3^{e1+e2} / (x1^{d1} x2^{d2} x3^{d3})`.
pub fn cc_map_a21(input: &CCInput) -> Result<LaurentPoly> {
    let [d1, d2, d3] = input.d[..] else {
        return Err(Error::InvalidDescriptor("expected a 3-component dimension vector".into()));
    };
    let (d1, d2, d3) = (d1 as i64, d2 as i64, d3 as i64);
    let mut out = LaurentPoly::zero(3);
    for (e, &c) in &input.chi {
        let (e1, e2, e3) = (e[0] as i64, e[1] as i64, e[2] as i64);
        let exps = vec![d2 + d3 - e2 - e3 - d1, d3 - e3 + e1 - d2, e1 + e2 - d3];
        out = &out + &LaurentPoly::monomial(3, exps, c);
    }
    Ok(out)
}

/// `s_n = CC(R_n)`; `s_0 = 1` and `s_n = 0` for negative `n`.
pub fn s_n(n: i64) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero(2);
    }
    let m = RepDescriptor::new(if n == 0 {
        Vec::new()
    } else {
        vec![crate::kron::Indecomposable::regular(n as usize)]
    });
    cc_map_a11(&CCInput::from_rep(&m)).expect("Kronecker input")
}

fn chebyshev(first: LaurentPoly, n: usize) -> LaurentPoly {
    let nv = first.nvars();
    let mut prev = LaurentPoly::constant(nv, 2);
    let mut cur = first.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&first * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `z_1 = x_0 x_3 - x_1 x_2`, `z_{n+1} = z_1 z_n - z_{n-1}` with `z_0 = 2`.
pub fn z_n_recurrence(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::IndexBound { index: 0, bound: INDEX_BOUND });
    }
    check_index(n as i64)?;
    let z1 = &(&cluster_var_a11(0)? * &cluster_var_a11(3)?)
        - &(&cluster_var_a11(1)? * &cluster_var_a11(2)?);
    Ok(chebyshev(z1, n))
}

/// `z_n` as the Caldero-Chapoton sum over smooth loci of `Gr_e(R_n)`.
pub fn z_n_geometric(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::IndexBound { index: 0, bound: INDEX_BOUND });
    }
    cc_map_a11(&CCInput::smooth_regular(n))
}

/// `CC^{(k)}(R_n)`: the Caldero-Chapoton sum restricted to `dim Ext¹(N, R_n/N) = k`.
pub fn cc_k_map(n: usize, k: usize) -> Result<LaurentPoly> {
    cc_map_a11(&CCInput::regular_stratum(n, k))
}

/// `w = (x1 + x3)/x2` and `z = (x1 x2 + x2 x3 + 1)/(x1 x3)`.
pub fn wz_vars() -> (LaurentPoly, LaurentPoly) {
    let x = |i| LaurentPoly::var(3, i);
    let w = (&x(1) + &x(3)).exact_div(&x(2)).expect("monomial divisor");
    let z = (&(&(&x(1) * &x(2)) + &(&x(2) * &x(3))) + &LaurentPoly::one(3))
        .exact_div(&(&x(1) * &x(3)))
        .expect("monomial divisor");
    (w, z)
}

/// `u_1 = zw - 2`, `u_{n+1} = u_1 u_n - u_{n-1}` with `u_0 = 2`.
pub fn u_n_recurrence(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::IndexBound { index: 0, bound: INDEX_BOUND });
    }
    check_index(n as i64)?;
    let (w, z) = wz_vars();
    let u1 = &(&z * &w) - &LaurentPoly::constant(3, 2);
    Ok(chebyshev(u1, n))
}

/// Euler characteristics of the smooth loci of `Gr_{(e1,e2,e3)}(R_{n,2})`,
/// `C(e3-e1, e2-e1) · χ(Gr_{(e1,e3)}(R_n)^{Sm})`.
pub fn smooth_euler_a21(n: usize) -> CCInput {
    let mut chi = BTreeMap::new();
    for e1 in 0..=n {
        for e3 in e1..=n {
            let base = smooth_part_euler(n, DimVector::new(e1, e3));
            if base == 0 {
                continue;
            }
            for e2 in e1..=e3 {
                let fiber = binomial((e3 - e1) as i64, (e2 - e1) as i64);
                chi.insert(vec![e1, e2, e3], fiber * base);
            }
        }
    }
    CCInput { d: vec![n, n, n], chi }
}

/// `u_n` as the Caldero-Chapoton sum over smooth loci of `Gr_e(R_{n,2})`.
pub fn u_n_geometric(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::IndexBound { index: 0, bound: INDEX_BOUND });
    }
    cc_map_a21(&smooth_euler_a21(n))
}

/// Images of the initial variables when re-expressed in the cluster
/// `{x_k, x_{k+1}}` (Kronecker) or `{x_k, x_{k+1}, x_{k+2}}` (affine `A_2`).
///
/// The exchange relations are shift invariant, so `x_i` in the cluster starting
/// at `x_k` is the initial-cluster expression of `x_{i-k+1}`.
pub fn cluster_substitution(nvars: usize, k: i64) -> Result<Vec<LaurentPoly>> {
    (1..=nvars as i64)
        .map(|i| match nvars {
            2 => cluster_var_a11(i - k + 1),
            3 => cluster_var_a21(i - k + 1),
            _ => Err(Error::InvalidDescriptor(format!("no cluster algebra in {nvars} variables"))),
        })
        .collect()
}

/// Whether `p` has nonnegative coefficients after rewriting in the given cluster.
pub fn positivity_check(p: &LaurentPoly, images: &[LaurentPoly]) -> Result<bool> {
    Ok(p.substitute(images)?.is_nonnegative())
}

/// `p` rewritten in the cluster starting at `x_k`.
pub fn in_cluster(p: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
    p.substitute(&cluster_substitution(p.nvars(), k)?)
}

pub fn coefficient_sum(p: &LaurentPoly) -> BigInt {
    p.terms().map(|(_, c)| c.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kron::Indecomposable;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn kronecker_variables() {
        assert_eq!(cluster_var_a11(1).unwrap(), lp("x1", 2));
        assert_eq!(cluster_var_a11(3).unwrap().to_string(), "x1^-1 + x1^-1*x2^2");
        assert_eq!(cluster_var_a11(0).unwrap(), lp("x1^2*x2^-1 + x2^-1", 2));
        let xm1 = lp("x1^3*x2^-2 + 2*x1*x2^-2 + x1^-1*x2^-2 + x1^-1", 2);
        assert_eq!(cluster_var_a11(-1).unwrap(), xm1);
        assert!(matches!(cluster_var_a11(21), Err(Error::IndexBound { .. })));
    }

    #[test]
    fn exchange_relation_holds() {
        for k in -INDEX_BOUND..=INDEX_BOUND - 2 {
            let a = cluster_var_a11(k).unwrap();
            let b = cluster_var_a11(k + 1).unwrap();
            let c = cluster_var_a11(k + 2).unwrap();
            assert_eq!(&a * &c, &(&b * &b) + &LaurentPoly::one(2), "k = {k}");
        }
        for m in -INDEX_BOUND..=INDEX_BOUND - 3 {
            let v: Vec<_> = (0..4).map(|i| cluster_var_a21(m + i).unwrap()).collect();
            assert_eq!(&v[0] * &v[3], &(&v[1] * &v[2]) + &LaurentPoly::one(3), "m = {m}");
        }
    }

    #[test]
    fn affine_a2_variables() {
        assert_eq!(cluster_var_a21(4).unwrap(), lp("x1^-1*x2*x3 + x1^-1", 3));
        assert_eq!(cluster_var_a21(0).unwrap(), lp("x1*x2*x3^-1 + x3^-1", 3));
    }

    #[test]
    fn cc_of_small_modules() {
        let zero = CCInput::from_rep(&RepDescriptor::zero());
        assert_eq!(cc_map_a11(&zero).unwrap(), LaurentPoly::one(2));
        let p0 = CCInput::from_rep(&Indecomposable::preprojective(0).into());
        assert_eq!(cc_map_a11(&p0).unwrap(), cluster_var_a11(0).unwrap());
        let p1 = CCInput::from_rep(&Indecomposable::preprojective(1).into());
        assert_eq!(cc_map_a11(&p1).unwrap(), cluster_var_a11(-1).unwrap());
        assert!(cc_map_a21(&p1).is_err());
    }

    #[test]
    fn z_and_s() {
        assert_eq!(s_n(0), LaurentPoly::one(2));
        assert_eq!(s_n(1), lp("x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1", 2));
        assert_eq!(z_n_recurrence(1).unwrap(), s_n(1));
        let z2 = lp("x1^2*x2^-2 + 2*x2^-2 + x1^-2*x2^-2 + 2*x1^-2 + x1^-2*x2^2", 2);
        assert_eq!(z_n_recurrence(2).unwrap(), z2);
        assert_eq!(&s_n(2) - &s_n(0), z2);
        assert_eq!(z_n_geometric(2).unwrap(), z2);
    }

    #[test]
    fn stratified_cc() {
        assert_eq!(cc_k_map(1, 0).unwrap(), z_n_recurrence(1).unwrap());
        assert_eq!(cc_k_map(2, 1).unwrap(), LaurentPoly::one(2));
        for n in 1..=4 {
            let total = (0..=n).fold(LaurentPoly::zero(2), |acc, k| &acc + &cc_k_map(n, k).unwrap());
            assert_eq!(total, s_n(n as i64));
        }
    }

    #[test]
    fn u_values() {
        let (w, z) = wz_vars();
        assert_eq!(w.term_count(), 2);
        assert_eq!(z.term_count(), 3);
        let u1 = u_n_recurrence(1).unwrap();
        let two = LaurentPoly::constant(3, 2);
        assert_eq!(u_n_recurrence(2).unwrap(), &(&u1 * &u1) - &two);
        let three_u1 = u1.scale(&BigInt::from(3));
        assert_eq!(u_n_recurrence(3).unwrap(), &u1.pow(3) - &three_u1);
        assert_eq!(u_n_geometric(1).unwrap(), u1);
    }

    #[test]
    fn substitution_into_other_clusters() {
        let z1 = z_n_recurrence(1).unwrap();
        let same = in_cluster(&z1, 1).unwrap();
        assert_eq!(same, z1);
        let z2 = z_n_recurrence(2).unwrap();
        assert!(positivity_check(&z2, &cluster_substitution(2, 2).unwrap()).unwrap());
        // x_3² x_4 in {x_1, x_2}
        let mono = &cluster_var_a11(3).unwrap().pow(2) * &cluster_var_a11(4).unwrap();
        assert!(mono.is_nonnegative());
        // a cluster variable re-expressed in its own cluster is a coordinate
        let x5 = cluster_var_a11(5).unwrap();
        assert_eq!(in_cluster(&x5, 4).unwrap(), lp("x2", 2));
        assert!(positivity_check(&lp("x1 - x2", 2), &cluster_substitution(2, 0).unwrap()).is_ok());
    }
}
