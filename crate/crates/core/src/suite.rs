//! Brute-force verification of the structural theorems on every left
//! Hom-quasigroup of small order.
//!
//! Each theorem is a hypothesis and a conclusion evaluated on one structure
//! `H = (X, ·, α)` and its solution `S(H)`. A structure on which the
//! hypothesis holds is an instance; an instance whose conclusion fails is a
//! counterexample and is kept verbatim (up to [`MAX_COUNTEREXAMPLES`] per
//! theorem).

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{EnumerationFilter, all_maps, check_order, enumerate_hom_quasigroups};
use crate::error::Result;
use crate::finite::FiniteMap;
use crate::functors::{
    alpha_cube_shift, dual_solution, restrict_to_image, shift_identity, to_hom_quadratic_set, to_hom_quasigroup, twist,
    twist_solution, ybe_with_alpha_square_shift,
};
use crate::quadset::{
    HomQuadraticSet, QuadraticSet, alpha_square_identities, is_hybe_solution, is_nondegenerate, is_ybe_solution,
    lndi_hybe_direct, lndi_hybe_five_conditions, lndi_hybe_six_conditions,
};
use crate::quasigroup::{
    HomQuasigroup, alpha_square_law, alpha_square_shift, dual_op, hom_cycle_axiom_reports, is_cycle_set,
    is_delta_bijective, is_hom_cycle_set, is_im_cycle_set, square_map, twisted_square_map,
};

pub const MAX_COUNTEREXAMPLES: usize = 3;

/// Name and statement of every theorem in the suite, in report order.
pub const THEOREMS: [(&str, &str); 22] = [
    ("conversion-round-trip", "G(S(H)) = H and S(G(S(H))) = S(H)"),
    (
        "ybe-iff-cycle-set",
        "(X, ·) is a cycle set iff S(H) satisfies the braid relation",
    ),
    (
        "hom-cycle-set-iff-lndi-hybe",
        "H is a Hom-cycle set iff S(H) is a HYBE solution",
    ),
    (
        "hybe-characterizations-agree",
        "direct braid, component clauses, six conditions and five conditions agree on S(H)",
    ),
    (
        "two-equation-characterization",
        "the three Hom-cycle axioms hold iff the square law and the mixed identity hold",
    ),
    (
        "axioms-equivalent-under-alpha-square",
        "under the square law the three axioms are equivalent and (xα²(y))α(z) = (xy)α(z)",
    ),
    (
        "alpha-square-identities",
        "for a HYBE solution, λ_xα = λ_{α²(x)}α and λ_xα² = α²λ_x",
    ),
    (
        "shift-identity-equivalence",
        "for 0 <= i <= 2 and 0 <= j - i <= 2 the pair and λ forms of the shift identity agree",
    ),
    (
        "shift-identity-base-case",
        "for a HYBE solution, r(α²×α) = (1×α²)r(1×α)",
    ),
    (
        "twisted-solution-formulas",
        "S(T(H)) matches both closed forms of the twisted solution",
    ),
    (
        "nondegeneracy-transfer",
        "a Hom-cycle set is Δ-bijective iff its solution is non-degenerate",
    ),
    ("square-map-bijective", "Δ-bijective implies x ↦ x·x is bijective"),
    (
        "dual-hom-cycle-set",
        "the dual of a non-degenerate Hom-cycle set is a non-degenerate Hom-cycle set with solution τrτ",
    ),
    (
        "im-cycle-iff-twist-hom-cycle",
        "H is an im-cycle set iff T(H) is a Hom-cycle set",
    ),
    (
        "twist-of-cycle-set-with-cube-law",
        "a cycle set with α³(x)α(y) = α(x)α(y) twists to a Hom-cycle set",
    ),
    (
        "twist-of-hom-cycle-is-im-cycle",
        "the twist of a Hom-cycle set is an im-cycle set",
    ),
    (
        "twist-preserves-nondegeneracy",
        "the twist of a non-degenerate Hom-cycle set is non-degenerate",
    ),
    (
        "twisted-square-map-bijective",
        "for a non-degenerate Hom-cycle set, x ↦ α(x)x is bijective",
    ),
    (
        "singleton-image-twist-nondegenerate",
        "if α(X) is a single point, T(H) is non-degenerate",
    ),
    (
        "twist-restricted-ybe",
        "for a HYBE solution, the twist restricted to α(X) satisfies the braid relation and r'(α²×1) = (1×α²)r'",
    ),
    (
        "twist-hybe-criterion",
        "the twist is a HYBE solution iff r on α(X) satisfies the braid relation and r(α²×1) = (1×α²)r",
    ),
    (
        "twist-hybe-sufficient",
        "a YBE solution with r(α³×α) = (α×α³)r twists to a HYBE solution",
    ),
];

/// Extra theorem evaluated on `r = id` over all maps `α`, not on
/// Hom-quasigroups.
pub const IDENTITY_R_THEOREM: (&str, &str) = (
    "identity-r-hybe-iff-idempotent",
    "r(x, y) = (x, y) is a HYBE solution iff α² = α",
);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub op: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremResult {
    pub name: String,
    pub statement: String,
    /// Instances per order `1..=n`.
    pub instances_by_order: Vec<usize>,
    pub instances: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremResult {
    pub fn holds(&self) -> bool {
        self.passed == self.instances
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniverseSize {
    pub n: usize,
    pub hom_quasigroups: usize,
    pub hom_cycle_sets: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_order: usize,
    pub universe: Vec<UniverseSize>,
    pub theorems: Vec<TheoremResult>,
    pub all_pass: bool,
}

impl SuiteReport {
    pub fn theorem(&self, name: &str) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| t.name == name)
    }
}

/// `None`: hypothesis false. `Some(Ok)`: conclusion holds. `Some(Err)`:
/// counterexample with a description.
type Outcome = Option<std::result::Result<(), String>>;

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    Some(if cond { Ok(()) } else { Err(detail()) })
}

fn iff(a: bool, b: bool, what: &str) -> Outcome {
    expect(a == b, || format!("{what}: left side {a}, right side {b}"))
}

fn hybe(h: &HomQuadraticSet) -> bool {
    is_hybe_solution(h).holds()
}

/// Evaluates every theorem of [`THEOREMS`] on one structure.
fn evaluate(h: &HomQuasigroup) -> Vec<Outcome> {
    let s = to_hom_quadratic_set(h);
    let hcs = is_hom_cycle_set(h).holds();
    let s_hybe = hybe(&s);
    let nondeg = is_delta_bijective(h.base()).holds();
    let t = twist(h);
    let tw = twist_solution(&s);
    let alpha = h.alpha();
    let mut out = Vec::with_capacity(THEOREMS.len());

    // conversion-round-trip
    out.push(match to_hom_quasigroup(&s) {
        Ok(g) => expect(g == *h && to_hom_quadratic_set(&g) == s, || "round trip differs".into()),
        Err(e) => Some(Err(format!("G failed on S(H): {e}"))),
    });
    // ybe-iff-cycle-set
    out.push(iff(
        is_cycle_set(h.base()).holds(),
        is_ybe_solution(s.base()).holds(),
        "cycle set vs braid",
    ));
    // hom-cycle-set-iff-lndi-hybe
    out.push(iff(hcs, s_hybe, "Hom-cycle set vs HYBE"));
    // hybe-characterizations-agree
    out.push({
        let hy = is_hybe_solution(&s);
        let direct = lndi_hybe_direct(&s);
        let six = lndi_hybe_six_conditions(&s);
        let five = lndi_hybe_five_conditions(&s);
        let verdicts = [hy.holds(), direct.holds(), six.holds(), five.holds()];
        let ok = verdicts.iter().all(|&v| v == verdicts[0])
            && hy.routes_agree()
            && six.routes_agree()
            && five.routes_agree();
        expect(ok, || format!("verdicts (braid, direct, six, five) = {verdicts:?}"))
    });
    // two-equation-characterization
    out.push({
        let rep = is_hom_cycle_set(h);
        expect(rep.routes_agree(), || format!("{:?}", rep.routes))
    });
    // axioms-equivalent-under-alpha-square
    out.push(if alpha_square_law(h).holds() {
        let axioms = hom_cycle_axiom_reports(h).map(|r| r.holds());
        let shift = alpha_square_shift(h).holds();
        expect(axioms.iter().all(|&a| a == axioms[0]) && shift, || {
            format!("axioms {axioms:?}, derived identity {shift}")
        })
    } else {
        None
    });
    // alpha-square-identities
    out.push(s_hybe.then(|| {
        let rep = alpha_square_identities(&s);
        if rep.holds() {
            Ok(())
        } else {
            Err(format!("{:?}", rep.verdict))
        }
    }));
    // shift-identity-equivalence
    out.push({
        let mut bad = None;
        'outer: for i in 0..=2 {
            for j in i..=i + 2 {
                match shift_identity(&s, i, j) {
                    Ok(rep) if rep.routes_agree() => {}
                    Ok(rep) => {
                        bad = Some(format!("i = {i}, j = {j}: {:?} vs {:?}", rep.verdict, rep.routes));
                        break 'outer;
                    }
                    Err(e) => {
                        bad = Some(format!("i = {i}, j = {j}: {e}"));
                        break 'outer;
                    }
                }
            }
        }
        Some(bad.map_or(Ok(()), Err))
    });
    // shift-identity-base-case
    out.push(s_hybe.then(|| match shift_identity(&s, 0, 1) {
        Ok(rep) if rep.holds() => Ok(()),
        Ok(rep) => Err(format!("{:?}", rep.verdict)),
        Err(e) => Err(e.to_string()),
    }));
    // twisted-solution-formulas
    out.push(match &tw {
        Ok(r) => expect(*r == to_hom_quadratic_set(&t), || {
            "S(T(H)) differs from STG(S(H))".into()
        }),
        Err(e) => Some(Err(e.to_string())),
    });
    // nondegeneracy-transfer
    out.push(hcs.then(|| {
        iff(
            nondeg,
            is_nondegenerate(s.base()).holds(),
            "Δ-bijective vs non-degenerate",
        )
        .unwrap()
    }));
    // square-map-bijective
    out.push(nondeg.then(|| {
        if square_map(h.base()).is_bijective() {
            Ok(())
        } else {
            Err("square map not bijective".into())
        }
    }));
    // dual-hom-cycle-set
    out.push((hcs && nondeg).then(|| {
        let dual = dual_op(h.base()).map_err(|e| e.to_string())?;
        let dual = HomQuasigroup::new(dual, alpha.clone()).map_err(|e| e.to_string())?;
        if !is_hom_cycle_set(&dual).holds() || !is_delta_bijective(dual.base()).holds() {
            return Err("dual is not a non-degenerate Hom-cycle set".into());
        }
        let flipped = dual_solution(&s).map_err(|e| e.to_string())?;
        if flipped != to_hom_quadratic_set(&dual) {
            return Err("S of the dual differs from τrτ".into());
        }
        Ok(())
    }));
    // im-cycle-iff-twist-hom-cycle
    out.push(iff(
        is_im_cycle_set(h).holds(),
        is_hom_cycle_set(&t).holds(),
        "im-cycle vs twisted Hom-cycle",
    ));
    // twist-of-cycle-set-with-cube-law
    let a3 = alpha.power(3);
    let cube_law = (0..h.n()).all(|x| (0..h.n()).all(|y| h.mul(a3.apply(x), h.a(y)) == h.mul(h.a(x), h.a(y))));
    out.push((is_cycle_set(h.base()).holds() && cube_law).then(|| {
        if is_hom_cycle_set(&t).holds() {
            Ok(())
        } else {
            Err("twist is not a Hom-cycle set".into())
        }
    }));
    // twist-of-hom-cycle-is-im-cycle
    out.push(hcs.then(|| {
        if is_im_cycle_set(&t).holds() {
            Ok(())
        } else {
            Err("twist is not im-cycle".into())
        }
    }));
    // twist-preserves-nondegeneracy
    out.push((hcs && nondeg).then(|| {
        if is_delta_bijective(t.base()).holds() {
            Ok(())
        } else {
            Err("twist is degenerate".into())
        }
    }));
    // twisted-square-map-bijective
    out.push((hcs && nondeg).then(|| {
        if twisted_square_map(h).is_bijective() {
            Ok(())
        } else {
            Err("x ↦ α(x)x not bijective".into())
        }
    }));
    // singleton-image-twist-nondegenerate
    out.push(alpha.is_constant().then(|| {
        if is_delta_bijective(t.base()).holds() {
            Ok(())
        } else {
            Err("twist is degenerate".into())
        }
    }));
    // twist-restricted-ybe
    out.push(s_hybe.then(|| {
        let tw = tw.as_ref().map_err(|e| e.to_string())?;
        let restricted = restrict_to_image(tw).map_err(|e| e.to_string())?;
        let rep = ybe_with_alpha_square_shift(&restricted.solution);
        if rep.holds() {
            Ok(())
        } else {
            Err(format!("on α(X) = {:?}: {:?}", restricted.labels, rep.verdict))
        }
    }));
    // twist-hybe-criterion
    out.push(match (&tw, &restrict_to_image(&s)) {
        (Ok(tw), Ok(restricted)) => iff(
            hybe(tw),
            ybe_with_alpha_square_shift(&restricted.solution).holds(),
            "twist HYBE vs braid and square shift on α(X)",
        ),
        (Err(e), _) | (_, Err(e)) => Some(Err(e.to_string())),
    });
    // twist-hybe-sufficient
    out.push(
        (is_ybe_solution(s.base()).holds() && alpha_cube_shift(&s).holds()).then(|| {
            let tw = tw.as_ref().map_err(|e| e.to_string())?;
            if hybe(tw) {
                Ok(())
            } else {
                Err("twist is not a HYBE solution".into())
            }
        }),
    );
    debug_assert_eq!(out.len(), THEOREMS.len());
    out
}

fn evaluate_identity_r(alpha: &FiniteMap) -> Outcome {
    let n = alpha.len();
    let q = QuadraticSet::from_fn(n, |x, y| (x, y)).expect("in range");
    let h = HomQuadraticSet::new(q, alpha.clone()).expect("same size");
    iff(hybe(&h), alpha.power(2) == *alpha, "HYBE vs idempotent")
}

fn fresh(name: &str, statement: &str, n: usize) -> TheoremResult {
    TheoremResult {
        name: name.into(),
        statement: statement.into(),
        instances_by_order: vec![0; n],
        instances: 0,
        passed: 0,
        counterexamples: Vec::new(),
    }
}

fn record(t: &mut TheoremResult, k: usize, outcome: &Outcome, example: impl FnOnce(String) -> Counterexample) {
    let Some(result) = outcome else { return };
    t.instances += 1;
    t.instances_by_order[k - 1] += 1;
    match result {
        Ok(()) => t.passed += 1,
        Err(detail) => {
            if t.counterexamples.len() < MAX_COUNTEREXAMPLES {
                t.counterexamples.push(example(detail.clone()));
            }
        }
    }
}

/// Runs every theorem on every left Hom-quasigroup of order `1..=n`.
/// The report is the same for every `jobs`.
pub fn verify_theorem_suite(n: usize, jobs: Option<usize>) -> Result<SuiteReport> {
    check_order(n)?;
    let mut theorems: Vec<TheoremResult> = THEOREMS.iter().map(|(a, b)| fresh(a, b, n)).collect();
    let mut identity_r = fresh(IDENTITY_R_THEOREM.0, IDENTITY_R_THEOREM.1, n);
    let mut universe = Vec::new();
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            b = b.num_threads(j.max(1));
        }
        b.build()
            .map_err(|e| crate::error::Error::Domain(format!("cannot start worker pool: {e}")))?
    };
    for k in 1..=n {
        let all = enumerate_hom_quasigroups(k, &EnumerationFilter::all(), jobs)?;
        let outcomes: Vec<Vec<Outcome>> = pool.install(|| all.par_iter().map(evaluate).collect());
        let mut hom_cycle_sets = 0;
        for (h, row) in all.iter().zip(&outcomes) {
            // the correspondence theorem is an iff, so count Hom-cycle sets directly
            hom_cycle_sets += usize::from(is_hom_cycle_set(h).holds());
            for (t, outcome) in theorems.iter_mut().zip(row) {
                record(t, k, outcome, |detail| Counterexample {
                    n: k,
                    op: h.base().table().to_rows(),
                    alpha: h.alpha().as_slice().to_vec(),
                    detail,
                });
            }
        }
        for alpha in all_maps(k) {
            record(&mut identity_r, k, &evaluate_identity_r(&alpha), |detail| {
                Counterexample {
                    n: k,
                    op: vec![],
                    alpha: alpha.as_slice().to_vec(),
                    detail,
                }
            });
        }
        universe.push(UniverseSize {
            n: k,
            hom_quasigroups: all.len(),
            hom_cycle_sets,
        });
    }
    theorems.push(identity_r);
    let all_pass = theorems.iter().all(TheoremResult::holds);
    Ok(SuiteReport {
        max_order: n,
        universe,
        theorems,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_passes() {
        let rep = verify_theorem_suite(2, Some(2)).unwrap();
        assert!(rep.all_pass, "{rep:#?}");
        assert_eq!(rep.theorems.len(), THEOREMS.len() + 1);
        assert_eq!(rep.universe[1].hom_quasigroups, 10);
        assert_eq!(rep.universe[1].hom_cycle_sets, 6);
        // every structure is an instance of an unconditional theorem
        assert_eq!(rep.theorem("conversion-round-trip").unwrap().instances, 11);
    }

    #[test]
    fn identity_r_law_counts_idempotents() {
        let rep = verify_theorem_suite(2, None).unwrap();
        let t = rep.theorem("identity-r-hybe-iff-idempotent").unwrap();
        assert_eq!(t.instances_by_order, vec![1, 4]);
        assert!(t.holds());
    }

    #[test]
    fn a_false_statement_is_reported() {
        // sanity check for the harness: the twist of an arbitrary structure is
        // not always a Hom-cycle set
        let all = enumerate_hom_quasigroups(2, &EnumerationFilter::all(), None).unwrap();
        assert!(all.iter().any(|h| !is_hom_cycle_set(&twist(h)).holds()));
    }
}
