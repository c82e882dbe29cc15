use num_bigint::BigUint;
use proptest::prelude::*;

use qgrass::cluster::{
    cc_map_a11, cluster_substitution, cluster_var_a11, positivity_check, s_n, z_n_recurrence, CCInput,
};
use qgrass::fq::{count_points, FqMatrixRep};
use qgrass::invariants::{
    dual_e, euler_char, poincare, poincare_from_cells, poincare_regular, stratum_euler_exact,
    strata, GrassId,
};
use qgrass::kron::{ext_dim, k_invariant};
use qgrass::quiver::{enumerate_fixed_points, quotient_quiver, FixedPoint};
use qgrass::{DimVector, Indecomposable, LaurentPoly, RepDescriptor};

#[test]
fn cells_reproduce_poincare_for_preprojectives_and_preinjectives() {
    for n in 0..=5 {
        for m in [Indecomposable::preprojective(n), Indecomposable::preinjective(n)] {
            for e in m.dim().sub_vectors() {
                let cells = poincare_from_cells(m, e).unwrap();
                assert_eq!(cells, poincare(&GrassId::new(m, e)), "{m} {e}");
            }
        }
    }
}

#[test]
fn preinjective_grassmannians_are_preprojective_ones() {
    for n in 0..=8usize {
        let (i, p) = (Indecomposable::preinjective(n), Indecomposable::preprojective(n));
        for e in i.dim().sub_vectors() {
            let partner = DimVector::new(n - e.d2, n + 1 - e.d1);
            assert_eq!(
                poincare(&GrassId::new(i, e)),
                poincare(&GrassId::new(p, partner)),
                "I_{n}, e = {e}"
            );
        }
    }
}

#[test]
fn exact_strata_telescope_and_match_fixed_points() {
    for n in 1..=7 {
        let m = Indecomposable::regular(n);
        for e in DimVector::delta(n).sub_vectors().filter(|e| e.d1 <= e.d2) {
            let layers = strata(n, e);
            let total: u64 = (0..layers.len()).map(|k| stratum_euler_exact(n, e, k)).sum();
            assert_eq!(total, euler_char(&GrassId::new(m, e)));
            let mut by_k = vec![0u64; layers.len() + 1];
            for fp in enumerate_fixed_points(m, e) {
                let quotient = quotient_quiver(m, &fp).unwrap().descriptor().unwrap();
                let k = k_invariant(&fp.descriptor(), &quotient).unwrap();
                assert_eq!(
                    k,
                    ext_dim(&fp.descriptor(), &quotient),
                    "K-invariant equals dim Ext^1(N, M/N) at {fp}"
                );
                by_k[k] += 1;
            }
            for (k, count) in by_k.iter().enumerate() {
                assert_eq!(*count, stratum_euler_exact(n, e, k), "R_{n}, e = {e}, k = {k}");
            }
        }
    }
}

#[test]
fn quotient_by_a_preprojective_string() {
    for n in 1..=8 {
        let m = Indecomposable::regular(n);
        for k in 1..=n {
            for r in 0..=n - k {
                let fp = FixedPoint::from_sets(m, (k..k + r).collect(), (k..=k + r).collect()).unwrap();
                let quotient = quotient_quiver(m, &fp).unwrap().descriptor().unwrap();
                let mut expected = vec![Indecomposable::preinjective(n - k - r)];
                if k > 1 {
                    expected.push(Indecomposable::regular(k - 1));
                }
                assert_eq!(quotient, RepDescriptor::new(expected), "R_{n} / {k}(P_{r})");
            }
        }
    }
}

#[test]
fn caldero_chapoton_of_rigid_indecomposables_are_cluster_variables() {
    for n in 0..=8usize {
        let cc = |m: Indecomposable| cc_map_a11(&CCInput::from_rep(&m.into())).unwrap();
        assert_eq!(cc(Indecomposable::preprojective(n)), cluster_var_a11(-(n as i64)).unwrap());
        assert_eq!(cc(Indecomposable::preinjective(n)), cluster_var_a11(n as i64 + 3).unwrap());
    }
}

#[test]
fn point_counts_respect_duality() {
    for n in 1..=4 {
        for q in [2u32, 3] {
            let rep = FqMatrixRep::from_indecomposable(Indecomposable::regular(n), q).unwrap();
            for e in DimVector::delta(n).sub_vectors() {
                let d = dual_e(n, e).unwrap();
                assert_eq!(count_points(&rep, e).unwrap(), count_points(&rep, d).unwrap());
            }
        }
    }
}

#[test]
fn point_counts_over_larger_fields() {
    for n in 0..=2 {
        for m in [
            Indecomposable::preprojective(n),
            Indecomposable::preinjective(n),
            Indecomposable::regular(n + 1),
        ] {
            for q in [5u32, 7] {
                let rep = FqMatrixRep::from_indecomposable(m, q).unwrap();
                for e in m.dim().sub_vectors() {
                    let expected: BigUint = poincare(&GrassId::new(m, e)).eval(q as u64);
                    assert_eq!(count_points(&rep, e).unwrap(), expected, "{m} {e} q={q}");
                }
            }
        }
    }
}

fn rigid_indecomposables(max_rank: usize) -> Vec<Indecomposable> {
    (0..=max_rank)
        .flat_map(|n| [Indecomposable::preprojective(n), Indecomposable::preinjective(n)])
        .collect()
}

#[test]
fn caldero_chapoton_is_multiplicative_on_ext_orthogonal_sums() {
    let cc = |d: &RepDescriptor| cc_map_a11(&CCInput::from_rep(d)).unwrap();
    let mut checked = 0;
    for a in rigid_indecomposables(4) {
        for b in rigid_indecomposables(4) {
            if a.rank() + b.rank() > 4 {
                continue;
            }
            let (da, db): (RepDescriptor, RepDescriptor) = (a.into(), b.into());
            if ext_dim(&da, &db) != 0 || ext_dim(&db, &da) != 0 {
                continue;
            }
            let sum = da.direct_sum(&db);
            assert_eq!(cc(&sum), &cc(&da) * &cc(&db), "{a} + {b}");
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn regular_sums_follow_the_chebyshev_product() {
    let r1: RepDescriptor = "R1+R1".parse().unwrap();
    let cc = cc_map_a11(&CCInput::from_rep(&r1)).unwrap();
    assert_eq!(cc, &s_n(1) * &s_n(1));
    assert_eq!(&s_n(1) * &s_n(1), &s_n(2) + &s_n(0));
}

#[test]
fn z_n_positive_in_many_clusters() {
    for n in 1..=3 {
        let z = z_n_recurrence(n).unwrap();
        for k in -3..=5 {
            let images = cluster_substitution(2, k).unwrap();
            assert!(positivity_check(&z, &images).unwrap(), "z_{n} at x_{k}");
        }
    }
}

#[test]
fn closed_form_poincare_special_values() {
    for n in 1..=8 {
        assert_eq!(poincare_regular(n, DimVector::new(n, n)).coeffs(), &[1]);
        assert_eq!(poincare_regular(n, DimVector::new(0, 0)).coeffs(), &[1]);
    }
}

fn laurent_strategy(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -4i64..=4), 0..6).prop_map(
        move |terms| {
            terms.into_iter().fold(LaurentPoly::zero(nvars), |acc, (e, c)| {
                &acc + &LaurentPoly::monomial(nvars, e, c)
            })
        },
    )
}

proptest! {
    #[test]
    fn laurent_text_round_trips(p in laurent_strategy(3)) {
        let back = LaurentPoly::parse(&p.to_string(), 3).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn laurent_division_inverts_multiplication(a in laurent_strategy(2), b in laurent_strategy(2)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }
}
