//! Conversions between solutions and quasigroups, twists, and dual solutions.
//!
//! * [`to_hom_quasigroup`] sends a left non-degenerate `(X, r, α)` to
//!   `(X, ·, α)` with `x·y = λ_x⁻¹(y)`.
//! * [`to_hom_quadratic_set`] goes back: `λ_x = σ_x⁻¹` and
//!   `ρ_y(x) = σ_x⁻¹(y)·x`.
//!
//! The two are mutually inverse on left non-degenerate involutive
//! Hom-quadratic sets and left Hom-quasigroups.

use crate::error::{Error, Result};
use crate::finite::{FiniteMap, Powers, SquareTable};
use crate::quadset::{
    HomQuadraticSet, QuadraticSet, is_hom_compatible, is_hybe_solution, is_involutive, is_left_nondegenerate,
    is_nondegenerate, is_ybe_solution,
};
use crate::quasigroup::{HomQuasigroup, LeftQuasigroup, dual_op, is_delta_bijective};
use crate::report::{CheckReport, Clause, Verdict, check, first_failure};

/// `x·y = λ_x⁻¹(y)`, keeping `α`.
///
/// Fails with [`Error::DegenerateRow`] naming the first non-bijective `λ_x`,
/// and with [`Error::NotEndomorphism`] when `α` does not intertwine the `λ_x`
/// (equivalently, is not an endomorphism of the resulting operation).
pub fn to_hom_quasigroup(h: &HomQuadraticSet) -> Result<HomQuasigroup> {
    let table = h.base().lambda_inverses()?;
    HomQuasigroup::new(LeftQuasigroup::from_table_unchecked(table), h.alpha().clone())
}

/// `λ_x = σ_x⁻¹`, `ρ_y(x) = σ_x⁻¹(y)·x`, keeping `α`. The result is always
/// left non-degenerate and involutive.
pub fn to_hom_quadratic_set(h: &HomQuasigroup) -> HomQuadraticSet {
    let lam = h
        .base()
        .table()
        .row_inverses()
        .expect("rows of a left quasigroup are bijective");
    let n = h.n();
    let rho = SquareTable::from_fn(n, |y, x| h.mul(lam.get(x, y), x)).expect("in range");
    let q = QuadraticSet::new(lam, rho).expect("same size");
    HomQuadraticSet::new(q, h.alpha().clone()).expect("same size")
}

/// Checks `S(G(h)) == h`; not applicable when `h` cannot be converted.
pub fn round_trip_solution(h: &HomQuadraticSet) -> CheckReport {
    const NAME: &str = "round-trip-solution";
    let back = match to_hom_quasigroup(h) {
        Ok(g) => to_hom_quadratic_set(&g),
        Err(e) => return CheckReport::not_applicable(NAME, e.to_string()),
    };
    let (q, b) = (h.base(), back.base());
    check(
        NAME,
        h.n(),
        &[
            Clause::new("lambda", 2, |t| q.lam(t[0], t[1]) == b.lam(t[0], t[1])),
            Clause::new("rho", 2, |t| q.rho(t[0], t[1]) == b.rho(t[0], t[1])),
            Clause::new("alpha", 1, |t| h.alpha().apply(t[0]) == back.alpha().apply(t[0])),
        ],
    )
}

/// Checks `G(S(h)) == h`; not applicable when `α` is not an endomorphism.
pub fn round_trip_quasigroup(h: &HomQuasigroup) -> CheckReport {
    const NAME: &str = "round-trip-quasigroup";
    let back = match to_hom_quasigroup(&to_hom_quadratic_set(h)) {
        Ok(g) => g,
        Err(e) => return CheckReport::not_applicable(NAME, e.to_string()),
    };
    check(
        NAME,
        h.n(),
        &[
            Clause::new("op", 2, |t| h.mul(t[0], t[1]) == back.mul(t[0], t[1])),
            Clause::new("alpha", 1, |t| h.a(t[0]) == back.a(t[0])),
        ],
    )
}

/// `x·'y = α(x)·y`, keeping `α`. When `α` is an endomorphism of `h` it is
/// one of the twist as well.
pub fn twist(h: &HomQuasigroup) -> HomQuasigroup {
    let n = h.n();
    let table = SquareTable::from_fn(n, |x, y| h.mul(h.a(x), y)).expect("in range");
    HomQuasigroup::new_unchecked(LeftQuasigroup::from_table_unchecked(table), h.alpha().clone())
}

fn require_lndi_hom(h: &HomQuadraticSet) -> Result<()> {
    let q = h.base();
    q.lambda_inverses()?;
    if let Some(w) = is_involutive(q).witness() {
        return Err(Error::NotInvolutive {
            x: w.elements[0],
            y: w.elements[1],
        });
    }
    if let Some(w) = is_hom_compatible(h).witness() {
        return Err(Error::NotHomCompatible {
            x: w.elements[0],
            y: w.elements[1],
        });
    }
    Ok(())
}

/// Closed form of the twisted solution,
/// `r'(x, y) = (λ_{α(x)}(y), λ⁻¹_{λ_{α²(x)}α(y)}(x))`.
pub fn twisted_closed_form(h: &HomQuadraticSet) -> Result<QuadraticSet> {
    let q = h.base();
    let li = q.lambda_inverses()?;
    let a = |x| h.alpha().apply(x);
    QuadraticSet::from_fn(h.n(), |x, y| (q.lam(a(x), y), li.get(q.lam(a(a(x)), a(y)), x)))
}

/// The twist of a left non-degenerate involutive Hom-quadratic set,
/// computed as `S(T(G(h)))`.
///
/// The result is compared with [`twisted_closed_form`], and, when `h` is a
/// HYBE solution, with `r'(x, y) = (λ_{α(x)}(y), ρ_{α(y)}(x))`. A mismatch
/// is reported as [`Error::RouteMismatch`].
pub fn twist_solution(h: &HomQuadraticSet) -> Result<HomQuadraticSet> {
    require_lndi_hom(h)?;
    let composed = to_hom_quadratic_set(&twist(&to_hom_quasigroup(h)?));
    let closed = twisted_closed_form(h)?;
    if *composed.base() != closed {
        return Err(Error::RouteMismatch(
            "twisted solution differs from its closed form".into(),
        ));
    }
    if is_hybe_solution(h).holds() {
        let q = h.base();
        let a = |x| h.alpha().apply(x);
        let short = QuadraticSet::from_fn(h.n(), |x, y| (q.lam(a(x), y), q.rho(a(y), x)))?;
        if *composed.base() != short {
            return Err(Error::RouteMismatch(
                "twisted HYBE solution differs from (lambda_a(x)(y), rho_a(y)(x))".into(),
            ));
        }
    }
    Ok(composed)
}

/// `r° = τrτ`, i.e. `r°(x, y) = (ρ_x(y), λ_y(x))`, for a non-degenerate
/// involutive HYBE solution.
///
/// The result is checked to be a non-degenerate involutive HYBE solution and
/// to coincide with the solution of the dual Hom-cycle set `(X, ∘, α)`.
pub fn dual_solution(h: &HomQuadraticSet) -> Result<HomQuadraticSet> {
    let g = to_hom_quasigroup(h)?;
    if let Some(w) = is_involutive(h.base()).witness() {
        return Err(Error::NotInvolutive {
            x: w.elements[0],
            y: w.elements[1],
        });
    }
    if let Some(w) = is_hybe_solution(h).witness() {
        return Err(Error::Domain(format!(
            "not a HYBE solution: clause {} fails at {:?}",
            w.clause, w.elements
        )));
    }
    if let Some(w) = is_delta_bijective(g.base()).witness() {
        let e = &w.elements;
        return Err(Error::DeltaCollision {
            first: (e[0], e[1]),
            second: (e[2], e[3]),
        });
    }
    let flipped = HomQuadraticSet::new(h.base().flipped(), h.alpha().clone())?;
    let q = h.base();
    let f = flipped.base();
    let component_form = (0..h.n()).all(|x| (0..h.n()).all(|y| f.r(x, y) == (q.rho(x, y), q.lam(y, x))));
    if !component_form {
        return Err(Error::RouteMismatch(
            "tau r tau differs from (rho_x(y), lambda_y(x))".into(),
        ));
    }
    for rep in [is_nondegenerate(f), is_involutive(f), is_hybe_solution(&flipped)] {
        if !rep.holds() {
            return Err(Error::RouteMismatch(format!("dual solution fails {}", rep.name)));
        }
    }
    let dual_cycle = HomQuasigroup::new(dual_op(g.base())?, h.alpha().clone())?;
    if to_hom_quadratic_set(&dual_cycle) != flipped {
        return Err(Error::RouteMismatch(
            "dual solution differs from the solution of the dual operation".into(),
        ));
    }
    Ok(flipped)
}

/// Compares `r(α^{i+2}×α^j) = (1×α²)r(α^i×α^j)` (main verdict) with
/// `λ_{α^{i+2}(x)}α^j = λ_{α^i(x)}α^j` (route `lambda-form`) for a left
/// non-degenerate involutive Hom-quadratic set and `0 ≤ j − i ≤ 2`.
pub fn shift_identity(h: &HomQuadraticSet, i: usize, j: usize) -> Result<CheckReport> {
    if j < i || j - i > 2 {
        return Err(Error::Domain(format!(
            "shift identity needs 0 <= j - i <= 2, got i = {i}, j = {j}"
        )));
    }
    require_lndi_hom(h)?;
    let powers = Powers::new(h.alpha());
    let (ai, ai2, aj, a2) = (powers.get(i), powers.get(i + 2), powers.get(j), powers.get(2));
    let q = h.base();
    let pair = [Clause::new("pair-form", 2, |t| {
        let (x, y) = (t[0], t[1]);
        let (u, v) = q.r(ai.apply(x), aj.apply(y));
        q.r(ai2.apply(x), aj.apply(y)) == (u, a2.apply(v))
    })];
    let lambda = [Clause::new("lambda-form", 2, |t| {
        let (x, y) = (t[0], t[1]);
        q.lam(ai2.apply(x), aj.apply(y)) == q.lam(ai.apply(x), aj.apply(y))
    })];
    let n = h.n();
    Ok(check(&format!("shift-identity({i},{j})"), n, &pair)
        .with_route("lambda-form", Verdict::from_witness(first_failure(n, &lambda))))
}

/// A Hom-quadratic set restricted to the image of its `α`, with the image
/// relabeled as `0..k`. `labels[i]` is the original element behind label `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageRestriction {
    pub solution: HomQuadraticSet,
    pub labels: Vec<usize>,
}

/// Restricts `r` and `α` to `α(X)`. Fails if `α(X)` is not `r`-invariant,
/// which cannot happen for Hom-compatible `α`.
pub fn restrict_to_image(h: &HomQuadraticSet) -> Result<ImageRestriction> {
    let labels = h.alpha().image();
    let q = h.base().restrict(&labels)?;
    let alpha = h.alpha().restrict(&labels)?;
    Ok(ImageRestriction {
        solution: HomQuadraticSet::new(q, alpha)?,
        labels,
    })
}

/// On a (restricted) Hom-quadratic set: the YBE braid relation together with
/// `r(α²×id) = (id×α²)r`.
pub fn ybe_with_alpha_square_shift(h: &HomQuadraticSet) -> CheckReport {
    let ybe = is_ybe_solution(h.base());
    if !ybe.holds() {
        return CheckReport::new("ybe-alpha-square-shift", ybe.verdict);
    }
    let q = h.base();
    let a2 = h.alpha().power(2);
    check(
        "ybe-alpha-square-shift",
        h.n(),
        &[Clause::new("alpha-square-shift", 2, |t| {
            let (u, v) = q.r(t[0], t[1]);
            q.r(a2.apply(t[0]), t[1]) == (u, a2.apply(v))
        })],
    )
}

/// `r(α³×α) = (α×α³)r` on all of `X`.
pub fn alpha_cube_shift(h: &HomQuadraticSet) -> CheckReport {
    let q = h.base();
    let a = h.alpha();
    let a3 = a.power(3);
    check(
        "alpha-cube-shift",
        h.n(),
        &[Clause::new("alpha-cube-shift", 2, |t| {
            let (u, v) = q.r(t[0], t[1]);
            q.r(a3.apply(t[0]), a.apply(t[1])) == (a.apply(u), a3.apply(v))
        })],
    )
}

pub fn is_lndi(h: &HomQuadraticSet) -> bool {
    is_left_nondegenerate(h.base()).holds() && is_involutive(h.base()).holds()
}

/// Convenience: `α = id` on `n` points.
pub fn identity_alpha(n: usize) -> FiniteMap {
    FiniteMap::identity(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_4order, example_matrix, permutation_solution, trivial_solution};
    use crate::quasigroup::is_hom_cycle_set;

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_solution_is_right_zero() {
        let t = trivial_solution(3, &map(&[0, 0, 1])).unwrap();
        let g = to_hom_quasigroup(&t).unwrap();
        assert_eq!(*g.base(), LeftQuasigroup::right_zero(3).unwrap());
        assert_eq!(to_hom_quadratic_set(&g), t);
    }

    #[test]
    fn g_inverts_lambda_rows() {
        let f = map(&[1, 0]);
        let h = permutation_solution(&f, &f, &FiniteMap::identity(2)).unwrap();
        let g = to_hom_quasigroup(&h).unwrap();
        assert_eq!(g.base().table().to_rows(), vec![vec![1, 0], vec![1, 0]]);
    }

    #[test]
    fn g_reports_degenerate_row() {
        let q = QuadraticSet::from_fn(3, |x, y| (if x == 2 { 0 } else { y }, x)).unwrap();
        let err = to_hom_quasigroup(&HomQuadraticSet::plain(q)).unwrap_err();
        assert!(matches!(err, Error::DegenerateRow { row: 2, .. }));
    }

    #[test]
    fn four_order_round_trip() {
        let four = example_4order();
        let s = to_hom_quadratic_set(&four);
        assert_eq!(to_hom_quasigroup(&s).unwrap(), four);
        assert!(round_trip_solution(&s).holds());
        assert!(round_trip_quasigroup(&four).holds());
        // λ_x fixes 0 for every x, the shape of a θ-solution with θ = 0
        assert!((0..4).all(|x| s.base().lam(x, 0) == 0));
    }

    #[test]
    fn singleton_conversion() {
        let one = HomQuasigroup::plain(LeftQuasigroup::right_zero(1).unwrap());
        let s = to_hom_quadratic_set(&one);
        assert_eq!(s.base().r(0, 0), (0, 0));
    }

    #[test]
    fn twist_with_identity_alpha_is_noop() {
        let four = example_4order();
        let plain = HomQuasigroup::plain(four.base().clone());
        assert_eq!(twist(&plain), plain);
    }

    #[test]
    fn twist_of_four_order_example_is_right_zero() {
        let t = twist(&example_4order());
        assert_eq!(*t.base(), LeftQuasigroup::right_zero(4).unwrap());
        assert!(is_delta_bijective(t.base()).holds());
    }

    #[test]
    fn twist_solution_formulas() {
        let t = trivial_solution(2, &map(&[1, 0])).unwrap();
        let tw = twist_solution(&t).unwrap();
        // λ'_x = λ_{α(x)} = id, so r'(x, y) = (y, ·)
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(tw.base().r(x, y).0, y);
            }
        }
        assert_eq!(*tw.base(), twisted_closed_form(&t).unwrap());

        let four = to_hom_quadratic_set(&example_4order());
        let plain = HomQuadraticSet::plain(four.base().clone());
        assert_eq!(twist_solution(&plain).unwrap(), plain);
    }

    #[test]
    fn twist_solution_rejects_degenerate_input() {
        let q = QuadraticSet::from_fn(2, |x, y| (x, y)).unwrap();
        assert!(twist_solution(&HomQuadraticSet::plain(q)).is_err());
    }

    #[test]
    fn twist_chain_over_gf3() {
        let (orig, tw) = example_matrix(3).unwrap();
        let s_orig = to_hom_quadratic_set(&orig);
        let s_tw = twist_solution(&s_orig).unwrap();
        assert_eq!(s_tw, to_hom_quadratic_set(&tw));
        assert!(is_hybe_solution(&s_tw).holds());
        // twisting once more lands back on a non-solution
        let back = twist_solution(&s_tw).unwrap();
        assert_eq!(back, s_orig);
        assert!(!is_hybe_solution(&back).holds());
    }

    #[test]
    fn dual_of_trivial_solution_is_itself() {
        let t = trivial_solution(3, &map(&[0, 2, 1])).unwrap();
        assert_eq!(dual_solution(&t).unwrap(), t);
    }

    #[test]
    fn dual_of_four_order_is_degenerate() {
        let s = to_hom_quadratic_set(&example_4order());
        assert_eq!(
            dual_solution(&s),
            Err(Error::DeltaCollision {
                first: (2, 3),
                second: (1, 1)
            })
        );
    }

    #[test]
    fn dual_over_gf3() {
        let (_, tw) = example_matrix(3).unwrap();
        assert!(is_hom_cycle_set(&tw).holds());
        let s = to_hom_quadratic_set(&tw);
        let d = dual_solution(&s).unwrap();
        assert_eq!(dual_solution(&d).unwrap(), s);
    }

    #[test]
    fn shift_identity_examples() {
        let s = to_hom_quadratic_set(&example_4order());
        let rep = shift_identity(&s, 0, 1).unwrap();
        assert!(rep.holds() && rep.routes_agree());
        let t = trivial_solution(3, &FiniteMap::identity(3)).unwrap();
        for i in 0..3 {
            for j in i..=i + 2 {
                assert!(shift_identity(&t, i, j).unwrap().holds());
            }
        }
        assert!(shift_identity(&t, 2, 1).is_err());
        assert!(shift_identity(&t, 0, 3).is_err());
    }

    #[test]
    fn image_restriction_relabels() {
        let s = to_hom_quadratic_set(&example_4order());
        let r = restrict_to_image(&s).unwrap();
        assert_eq!(r.labels, vec![0]);
        assert_eq!(r.solution.n(), 1);
        assert!(ybe_with_alpha_square_shift(&r.solution).holds());
    }
}
