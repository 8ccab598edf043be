//! First-kind equations and the two-sided minimization problems.

mod common;

use common::*;
use proptest::prelude::*;
use tropolocate_core::minimax::{minimize_identity, minimize_two_sided, two_sided_objective};
use tropolocate_core::solvers::{first_kind_residual, solve_first_kind};
use tropolocate_core::{TropMatrix, TropVector, Tropical};

fn rect_matrix(m: usize, n: usize) -> impl Strategy<Value = TropMatrix> {
    proptest::collection::vec(proptest::collection::vec(finite_value(), n), m)
        .prop_map(|rows| TropMatrix::from_rows(&rows).unwrap())
}

proptest! {
    #[test]
    fn residual_is_a_lower_bound(a in rect_matrix(3, 2), d in regular_vector(3), xs in proptest::collection::vec(regular_vector(2), 20)) {
        let delta = first_kind_residual(&a, &d).unwrap();
        prop_assert!(delta >= Tropical::ONE);
        for x in xs {
            let rho = a.mul_vec(&x).unwrap().rho(&d).unwrap();
            prop_assert!(rho.value() >= delta.value() - TOL);
        }
        let res = solve_first_kind(&a, &d, TOL).unwrap();
        let attained = a.mul_vec(&res.best_x).unwrap().rho(&d).unwrap();
        prop_assert!(attained.approx_eq(delta, TOL));
    }

    #[test]
    fn residual_formula_identity(a in rect_matrix(3, 3), d in regular_vector(3)) {
        // Δ² = (A(d⁻A)⁻)⁻ d, assembled from primitives.
        let x0 = d.pseudo_inverse().unwrap().mul_matrix(&a).unwrap().pseudo_inverse().unwrap();
        let sq = a.mul_vec(&x0).unwrap().pseudo_inverse().unwrap().dot(&d).unwrap();
        let delta = first_kind_residual(&a, &d).unwrap();
        prop_assert!((2.0 * delta.value() - sq.value()).abs() <= TOL);
    }

    #[test]
    fn solvable_when_rhs_is_in_the_image(a in rect_matrix(3, 2), u in regular_vector(2)) {
        let d = a.mul_vec(&u).unwrap();
        let res = solve_first_kind(&a, &d, TOL).unwrap();
        prop_assert!(res.solvable);
        prop_assert!(a.mul_vec(&res.best_x).unwrap().approx_eq(&d, TOL));
        prop_assert!(u.approx_le(&res.best_x, TOL));
    }

    #[test]
    fn two_sided_lower_bound_and_attainment(a in rect_matrix(3, 4), b in regular_vector(3), c in regular_vector(3), xs in proptest::collection::vec(regular_vector(4), 20)) {
        let res = minimize_two_sided(&a, &b, &c).unwrap();
        let at_min = two_sided_objective(&a, &b, &c, &res.minimizer).unwrap();
        prop_assert!(at_min.approx_eq(res.delta, TOL));
        prop_assert!(res.image_in_box(&a, &res.minimizer, TOL).unwrap());
        for x in xs {
            prop_assert!(two_sided_objective(&a, &b, &c, &x).unwrap().value() >= res.delta.value() - TOL);
        }
        // Δ² ≥ c⁻b
        let cb = c.pseudo_inverse().unwrap().dot(&b).unwrap();
        prop_assert!(2.0 * res.delta.value() >= cb.value() - TOL);
        // Δ² recomputed from primitives.
        let x0 = c.pseudo_inverse().unwrap().mul_matrix(&a).unwrap().pseudo_inverse().unwrap();
        let sq = a.mul_vec(&x0).unwrap().pseudo_inverse().unwrap().dot(&b).unwrap();
        prop_assert!((2.0 * res.delta.value() - sq.value()).abs() <= TOL);
    }

    /// If `A ⊗ u = b` then `Δ⁻¹u` is optimal.
    #[test]
    fn exact_preimage_scaled_down_is_optimal(a in rect_matrix(3, 3), u in regular_vector(3), c in regular_vector(3)) {
        let b = a.mul_vec(&u).unwrap();
        let res = minimize_two_sided(&a, &b, &c).unwrap();
        let x = u.scale(res.delta.inv());
        prop_assert!(two_sided_objective(&a, &b, &c, &x).unwrap().approx_eq(res.delta, TOL));
    }

    #[test]
    fn identity_box_is_attained(b in regular_vector(3), c in regular_vector(3), ts in proptest::collection::vec(proptest::collection::vec(0.0f64..=1.0, 3), 10)) {
        let res = minimize_identity(&b, &c).unwrap();
        prop_assert!(res.lower.approx_le(&res.upper, TOL));
        let i = TropMatrix::identity(3).unwrap();
        for t in ts {
            let x: Vec<f64> = (0..3).map(|k| {
                let (l, u) = (res.lower.get(k).value(), res.upper.get(k).value());
                l + t[k] * (u - l)
            }).collect();
            let x = TropVector::from_f64s(&x).unwrap();
            prop_assert!(two_sided_objective(&i, &b, &c, &x).unwrap().approx_eq(res.delta, 1e-9));
        }
        let two = minimize_two_sided(&i, &b, &c).unwrap();
        prop_assert!(two.delta.approx_eq(res.delta, TOL));
        prop_assert!(res.lower.approx_le(&two.minimizer, TOL) && two.minimizer.approx_le(&res.upper, TOL));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Every integer grid solution of `A ⊗ x = d` lies below the maximum
    /// solution.
    #[test]
    fn maximum_solution_dominates_grid_solutions(
        rows in (2usize..=3).prop_flat_map(|n| int_matrix(n, -3, 3)),
        u in proptest::collection::vec(-3i32..=3, 3),
    ) {
        let n = rows.len();
        let a = TropMatrix::from_rows(&rows).unwrap();
        let u: Vec<f64> = u[..n].iter().map(|&k| f64::from(k)).collect();
        let d = a.mul_vec(&TropVector::from_f64s(&u).unwrap()).unwrap();
        let res = solve_first_kind(&a, &d, TOL).unwrap();
        prop_assert!(res.solvable);
        let mut found = 0;
        for x in integer_grid(n, -8, 8) {
            let x = TropVector::from_f64s(&x).unwrap();
            if a.mul_vec(&x).unwrap().approx_eq(&d, TOL) {
                found += 1;
                prop_assert!(x.approx_le(&res.best_x, TOL), "{:?} exceeds {:?}", x, res.best_x);
            }
        }
        prop_assert!(found >= 1);
    }
}
