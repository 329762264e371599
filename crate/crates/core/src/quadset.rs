//! Quadratic sets `(X, r)` and Hom-quadratic sets `(X, r, α)`.
//!
//! A map `r : X × X → X × X` is written `r(x, y) = (λ_x(y), ρ_y(x))` and
//! stored as two square tables:
//!
//! * `lam[x][y] = λ_x(y)`
//! * `rho[y][x] = ρ_y(x)`
//!
//! Note that both tables are indexed by the *subscript first*. For `ρ` this
//! is the transpose of the position in which `x` appears in `r(x, y)`.
//!
//! Every predicate is total: it returns a [`CheckReport`] instead of
//! failing, and clauses that need `λ_x⁻¹` report a failure of the
//! bijectivity clause (or not-applicable) when some `λ_x` is not a bijection.

use crate::error::{Error, Result};
use crate::finite::{FiniteMap, PairMap, SquareTable, check_same_size};
use crate::report::{CheckReport, Clause, Verdict, Witness, check, first_failure};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSet {
    lam: SquareTable,
    rho: SquareTable,
}

impl QuadraticSet {
    /// `lam[x][y] = λ_x(y)` and `rho[y][x] = ρ_y(x)`.
    pub fn new(lam: SquareTable, rho: SquareTable) -> Result<Self> {
        check_same_size(lam.n(), rho.n())?;
        Ok(QuadraticSet { lam, rho })
    }

    pub fn from_rows(lam: Vec<Vec<usize>>, rho: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(SquareTable::new(lam)?, SquareTable::new(rho)?)
    }

    /// Builds `(X, r)` from `r` given as a function on pairs.
    pub fn from_fn(n: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let lam = SquareTable::from_fn(n, |x, y| r(x, y).0)?;
        let rho = SquareTable::from_fn(n, |y, x| r(x, y).1)?;
        Ok(QuadraticSet { lam, rho })
    }

    pub fn from_pair_map(r: &PairMap) -> Self {
        Self::from_fn(r.n(), |x, y| r.apply(x, y)).expect("pair map values are in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.lam.n()
    }

    /// `λ_x(y)`.
    #[inline]
    pub fn lam(&self, x: usize, y: usize) -> usize {
        self.lam.get(x, y)
    }

    /// `ρ_y(x)`.
    #[inline]
    pub fn rho(&self, y: usize, x: usize) -> usize {
        self.rho.get(y, x)
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lam(x, y), self.rho(y, x))
    }

    pub fn lam_table(&self) -> &SquareTable {
        &self.lam
    }

    pub fn rho_table(&self) -> &SquareTable {
        &self.rho
    }

    pub fn lam_map(&self, x: usize) -> FiniteMap {
        self.lam.row_map(x)
    }

    pub fn rho_map(&self, y: usize) -> FiniteMap {
        self.rho.row_map(y)
    }

    pub fn to_pair_map(&self) -> PairMap {
        PairMap::from_fn(self.n(), |x, y| self.r(x, y)).expect("values are in range")
    }

    /// `inv[x][y] = λ_x⁻¹(y)`, or the first non-bijective `λ_x`.
    pub fn lambda_inverses(&self) -> Result<SquareTable> {
        self.lam.row_inverses()
    }

    /// Restriction to an `r`-invariant subset, relabeled as `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Result<QuadraticSet> {
        Ok(QuadraticSet {
            lam: self.lam.restrict(subset)?,
            rho: self.rho.restrict(subset)?,
        })
    }

    /// `τ r τ`, i.e. `(x, y) ↦ (ρ_x(y), λ_y(x))`. In table form this swaps
    /// the two tables.
    pub fn flipped(&self) -> QuadraticSet {
        QuadraticSet {
            lam: self.rho.clone(),
            rho: self.lam.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomQuadraticSet {
    base: QuadraticSet,
    alpha: FiniteMap,
}

impl HomQuadraticSet {
    /// Any `α` of the right size is accepted; compatibility with `r` is a
    /// predicate ([`is_hom_compatible`]), not a construction invariant.
    pub fn new(base: QuadraticSet, alpha: FiniteMap) -> Result<Self> {
        check_same_size(base.n(), alpha.len())?;
        Ok(HomQuadraticSet { base, alpha })
    }

    /// `(X, r, id)`.
    pub fn plain(base: QuadraticSet) -> Self {
        let alpha = FiniteMap::identity(base.n());
        HomQuadraticSet { base, alpha }
    }

    pub fn base(&self) -> &QuadraticSet {
        &self.base
    }

    pub fn alpha(&self) -> &FiniteMap {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn into_parts(self) -> (QuadraticSet, FiniteMap) {
        (self.base, self.alpha)
    }
}

/// `r(x, y)` with range checking.
pub fn r_apply(q: &QuadraticSet, x: usize, y: usize) -> Result<(usize, usize)> {
    let n = q.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::OutOfRange { value: v, n });
        }
    }
    Ok(q.r(x, y))
}

/// `αλ_x = λ_{α(x)}α` and `αρ_x = ρ_{α(x)}α`, cross-checked against
/// `r(α×α) = (α×α)r` on pairs.
pub fn is_hom_compatible(h: &HomQuadraticSet) -> CheckReport {
    let q = &h.base;
    let a = |x: usize| h.alpha.apply(x);
    let n = q.n();
    let main = [
        Clause::new("alpha-lambda", 2, |t| {
            let (x, y) = (t[0], t[1]);
            a(q.lam(x, y)) == q.lam(a(x), a(y))
        }),
        Clause::new("alpha-rho", 2, |t| {
            let (x, y) = (t[0], t[1]);
            a(q.rho(x, y)) == q.rho(a(x), a(y))
        }),
    ];
    let pairs = [hom_compatible_pair_clause(h)];
    check("hom-compatible", n, &main).with_route("pair-map", verdict(n, &pairs))
}

fn hom_compatible_pair_clause(h: &HomQuadraticSet) -> Clause<'_> {
    Clause::new("hom-compatible", 2, move |t| {
        let a = |x: usize| h.alpha.apply(x);
        let (x, y) = (t[0], t[1]);
        let (u, v) = h.base.r(x, y);
        h.base.r(a(x), a(y)) == (a(u), a(v))
    })
}

/// `r ∘ r = id`, cross-checked against the pair of identities
/// `λ_{λ_x(y)} ρ_y(x) = x` and `ρ_{ρ_x(y)} λ_y(x) = x`.
pub fn is_involutive(q: &QuadraticSet) -> CheckReport {
    let n = q.n();
    let main = [Clause::new("r-squared", 2, |t| {
        let (u, v) = q.r(t[0], t[1]);
        q.r(u, v) == (t[0], t[1])
    })];
    let identities = [
        Clause::new("lambda-rho", 2, |t| {
            let (x, y) = (t[0], t[1]);
            q.lam(q.lam(x, y), q.rho(y, x)) == x
        }),
        Clause::new("rho-lambda", 2, |t| {
            let (x, y) = (t[0], t[1]);
            q.rho(q.rho(x, y), q.lam(y, x)) == x
        }),
    ];
    check("involutive", n, &main).with_route("component-identities", verdict(n, &identities))
}

fn rows_bijective_report(name: &str, clause: &str, table: &SquareTable) -> CheckReport {
    let v = match table.first_degenerate_row() {
        None => Verdict::Holds,
        Some((x, y1, y2)) => Verdict::Fails {
            witness: Witness {
                clause: clause.to_string(),
                elements: vec![x, y1, y2],
            },
        },
    };
    CheckReport::new(name, v)
}

/// Every `λ_x` is a bijection. A witness `[x, y1, y2]` has `λ_x(y1) = λ_x(y2)`.
pub fn is_left_nondegenerate(q: &QuadraticSet) -> CheckReport {
    rows_bijective_report("left-nondegenerate", "lambda-bijective", &q.lam)
}

/// Every `ρ_y` is a bijection. A witness `[y, x1, x2]` has `ρ_y(x1) = ρ_y(x2)`.
pub fn is_right_nondegenerate(q: &QuadraticSet) -> CheckReport {
    rows_bijective_report("right-nondegenerate", "rho-bijective", &q.rho)
}

pub fn is_nondegenerate(q: &QuadraticSet) -> CheckReport {
    let left = is_left_nondegenerate(q);
    if !left.holds() {
        return CheckReport::new("nondegenerate", left.verdict);
    }
    CheckReport::new("nondegenerate", is_right_nondegenerate(q).verdict)
}

/// `ρ_y(x) = λ_{λ_x(y)}⁻¹(x)` for left non-degenerate `r`; equivalent to
/// involutivity under that hypothesis.
pub fn involutivity_rho_formula(q: &QuadraticSet) -> CheckReport {
    const NAME: &str = "rho-formula";
    let Ok(li) = q.lambda_inverses() else {
        return CheckReport::not_applicable(NAME, "some lambda_x is not bijective");
    };
    let clauses = [rho_formula_clause(q, &li, "rho-formula")];
    check(NAME, q.n(), &clauses).with_route("involutive", is_involutive(q).verdict)
}

fn rho_formula_clause<'a>(q: &'a QuadraticSet, li: &'a SquareTable, label: &'static str) -> Clause<'a> {
    Clause::new(label, 2, move |t| {
        let (x, y) = (t[0], t[1]);
        q.rho(y, x) == li.get(q.lam(x, y), x)
    })
}

/// The braid relation `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on all
/// triples, cross-checked against its three component identities.
pub fn is_ybe_solution(q: &QuadraticSet) -> CheckReport {
    let n = q.n();
    let id = FiniteMap::identity(n);
    let main = [Clause::new("braid", 3, |t| {
        braid_lhs(q, &id, t[0], t[1], t[2]) == braid_rhs(q, &id, t[0], t[1], t[2])
    })];
    let l = |x, y| q.lam(x, y);
    let p = |y, x| q.rho(y, x);
    let components = [
        Clause::new("first", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            l(l(x, y), l(p(y, x), z)) == l(x, l(y, z))
        }),
        Clause::new("second", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            p(l(p(y, x), z), l(x, y)) == l(p(l(y, z), x), p(z, y))
        }),
        Clause::new("third", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            p(z, p(y, x)) == p(p(z, y), p(l(y, z), x))
        }),
    ];
    check("ybe", n, &main).with_route("component-identities", verdict(n, &components))
}

/// `(α×r)(r×α)(α×r)` applied to `(x, y, z)`. With `α = id` this is the
/// left side of the ordinary braid relation.
fn braid_lhs(q: &QuadraticSet, a: &FiniteMap, x: usize, y: usize, z: usize) -> [usize; 3] {
    let a = |v| a.apply(v);
    let (u1, v1, w1) = {
        let (b, c) = q.r(y, z);
        (a(x), b, c)
    };
    let (u2, v2, w2) = {
        let (b, c) = q.r(u1, v1);
        (b, c, a(w1))
    };
    let (b, c) = q.r(v2, w2);
    [a(u2), b, c]
}

/// `(r×α)(α×r)(r×α)` applied to `(x, y, z)`.
fn braid_rhs(q: &QuadraticSet, a: &FiniteMap, x: usize, y: usize, z: usize) -> [usize; 3] {
    let a = |v| a.apply(v);
    let (u1, v1, w1) = {
        let (b, c) = q.r(x, y);
        (b, c, a(z))
    };
    let (u2, v2, w2) = {
        let (b, c) = q.r(v1, w1);
        (a(u1), b, c)
    };
    let (b, c) = q.r(u2, v2);
    [b, c, a(w2)]
}

/// Hom-compatibility together with `(α×r)(r×α)(α×r) = (r×α)(α×r)(r×α)`,
/// cross-checked against the four component conditions.
pub fn is_hybe_solution(h: &HomQuadraticSet) -> CheckReport {
    let q = &h.base;
    let n = q.n();
    let alpha = &h.alpha;
    let main = [
        hom_compatible_pair_clause(h),
        Clause::new("mixed-braid", 3, |t| {
            braid_lhs(q, alpha, t[0], t[1], t[2]) == braid_rhs(q, alpha, t[0], t[1], t[2])
        }),
    ];
    let a = |x: usize| alpha.apply(x);
    let l = |x, y| q.lam(x, y);
    let p = |y, x| q.rho(y, x);
    let components = [
        Clause::new("cond1-lambda", 2, |t| a(l(t[0], t[1])) == l(a(t[0]), a(t[1]))),
        Clause::new("cond1-rho", 2, |t| a(p(t[0], t[1])) == p(a(t[0]), a(t[1]))),
        Clause::new("cond2", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(l(a(x), l(y, z))) == l(a(l(x, y)), l(p(y, x), a(z)))
        }),
        Clause::new("cond3", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            p(l(p(y, x), a(z)), a(l(x, y))) == l(p(l(y, z), a(x)), a(p(z, y)))
        }),
        Clause::new("cond4", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(p(a(y), p(x, z))) == p(a(p(y, x)), p(l(x, y), a(z)))
        }),
    ];
    check("hybe", n, &main).with_route("component-identities", verdict(n, &components))
}

fn verdict(n: usize, clauses: &[Clause<'_>]) -> Verdict {
    Verdict::from_witness(first_failure(n, clauses))
}

/// Verdict of the conjunction "HYBE solution, left non-degenerate,
/// involutive", taking the first failing part.
pub fn lndi_hybe_direct(h: &HomQuadraticSet) -> Verdict {
    for report in [
        is_left_nondegenerate(&h.base),
        is_involutive(&h.base),
        is_hybe_solution(h),
    ] {
        if !report.holds() {
            return report.verdict;
        }
    }
    Verdict::Holds
}

fn lambda_bijective_failure(err: Error) -> Verdict {
    match err {
        Error::DegenerateRow { row, y1, y2, .. } => Verdict::Fails {
            witness: Witness {
                clause: "cond1".into(),
                elements: vec![row, y1, y2],
            },
        },
        other => unreachable!("row inverses only fail on degenerate rows: {other}"),
    }
}

/// Six-condition characterization of left non-degenerate involutive HYBE
/// solutions:
///
/// 1. `λ_x` is bijective;
/// 2. `ρ_y(x) = λ_{λ_x(y)}⁻¹(x)`;
/// 3. `αλ_x = λ_{α(x)}α`;
/// 4. `αλ_{α(x)}λ_{λ_x⁻¹(y)} = λ_{α(y)}λ_{λ_y⁻¹(x)}α`;
/// 5. `αλ_xλ_{λ_{α(x)}⁻¹(y)} = λ_{α(y)}λ_{λ_y⁻¹α(x)}α`;
/// 6. `αλ_xλ_{λ_{α(x)}⁻¹α(y)} = λ_yλ_{λ_{α(y)}⁻¹α(x)}α`.
///
/// Clause labels are `cond1` .. `cond6`. The direct route (HYBE, left
/// non-degenerate, involutive) is attached for comparison.
pub fn lndi_hybe_six_conditions(h: &HomQuadraticSet) -> CheckReport {
    const NAME: &str = "lndi-hybe-six";
    let direct = lndi_hybe_direct(h);
    let q = &h.base;
    let li = match q.lambda_inverses() {
        Ok(li) => li,
        Err(e) => return CheckReport::new(NAME, lambda_bijective_failure(e)).with_route("direct", direct),
    };
    let a = |x: usize| h.alpha.apply(x);
    let l = |x, y| q.lam(x, y);
    let li = |x, y| li.get(x, y);
    let clauses = [
        Clause::new("cond2", 2, |t| q.rho(t[1], t[0]) == li(l(t[0], t[1]), t[0])),
        Clause::new("cond3", 2, |t| a(l(t[0], t[1])) == l(a(t[0]), a(t[1]))),
        Clause::new("cond4", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(l(a(x), l(li(x, y), z))) == l(a(y), l(li(y, x), a(z)))
        }),
        Clause::new("cond5", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(l(x, l(li(a(x), y), z))) == l(a(y), l(li(y, a(x)), a(z)))
        }),
        Clause::new("cond6", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(l(x, l(li(a(x), a(y)), z))) == l(y, l(li(a(y), a(x)), a(z)))
        }),
    ];
    check(NAME, q.n(), &clauses).with_route("direct", direct)
}

/// Five-condition characterization: conditions 1–3 and 5 as in
/// [`lndi_hybe_six_conditions`], with condition 4 replaced by
/// `λ_xα = αλ_{α(x)}`.
pub fn lndi_hybe_five_conditions(h: &HomQuadraticSet) -> CheckReport {
    const NAME: &str = "lndi-hybe-five";
    let direct = lndi_hybe_direct(h);
    let q = &h.base;
    let li = match q.lambda_inverses() {
        Ok(li) => li,
        Err(e) => return CheckReport::new(NAME, lambda_bijective_failure(e)).with_route("direct", direct),
    };
    let a = |x: usize| h.alpha.apply(x);
    let l = |x, y| q.lam(x, y);
    let li = |x, y| li.get(x, y);
    let clauses = [
        Clause::new("cond2", 2, |t| q.rho(t[1], t[0]) == li(l(t[0], t[1]), t[0])),
        Clause::new("cond3", 2, |t| a(l(t[0], t[1])) == l(a(t[0]), a(t[1]))),
        Clause::new("cond4", 2, |t| l(t[0], a(t[1])) == a(l(a(t[0]), t[1]))),
        Clause::new("cond5", 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(l(x, l(li(a(x), y), z))) == l(a(y), l(li(y, a(x)), a(z)))
        }),
    ];
    check(NAME, q.n(), &clauses).with_route("direct", direct)
}

/// On left non-degenerate involutive HYBE solutions: `λ_xα = λ_{α²(x)}α`
/// and `λ_xα² = α²λ_x`. Not applicable when the five conditions fail.
pub fn alpha_square_identities(h: &HomQuadraticSet) -> CheckReport {
    const NAME: &str = "alpha-square-identities";
    if !lndi_hybe_five_conditions(h).holds() {
        return CheckReport::not_applicable(NAME, "not a left non-degenerate involutive HYBE solution");
    }
    let q = &h.base;
    let a = |x: usize| h.alpha.apply(x);
    let clauses = [
        Clause::new("lambda-alpha", 2, |t| {
            q.lam(t[0], a(t[1])) == q.lam(a(a(t[0])), a(t[1]))
        }),
        Clause::new("lambda-alpha-squared", 2, |t| {
            q.lam(t[0], a(a(t[1]))) == a(a(q.lam(t[0], t[1])))
        }),
    ];
    check(NAME, q.n(), &clauses)
}

/// Whether `f : X → X'` is a morphism of Hom-quadratic sets:
/// `fλ_x = λ'_{f(x)}f`, `fρ_x = ρ'_{f(x)}f` and `fα = α'f`.
///
/// The `pair-map` route checks `(f×f)r = r'(f×f)` directly. When both sides
/// are left non-degenerate and involutive, the routes `lambda-only`
/// (`fλ_x = λ'_{f(x)}f`) and `lambda-inverse` (`fλ_x⁻¹ = λ'_{f(x)}⁻¹f`),
/// each together with `fα = α'f`, are attached as well.
pub fn is_morphism(f: &FiniteMap, h1: &HomQuadraticSet, h2: &HomQuadraticSet) -> Result<CheckReport> {
    check_same_size(h1.n(), f.len())?;
    let n2 = h2.n();
    if let Some(&value) = f.as_slice().iter().find(|&&v| v >= n2) {
        return Err(Error::OutOfRange { value, n: n2 });
    }
    let (q1, q2) = (&h1.base, &h2.base);
    let f = |x: usize| f.apply(x);
    let alpha = || {
        Clause::new("alpha-intertwine", 1, |t: &[usize]| {
            f(h1.alpha.apply(t[0])) == h2.alpha.apply(f(t[0]))
        })
    };
    let lambda = || {
        Clause::new("lambda-intertwine", 2, |t: &[usize]| {
            f(q1.lam(t[0], t[1])) == q2.lam(f(t[0]), f(t[1]))
        })
    };
    let main = [
        lambda(),
        Clause::new("rho-intertwine", 2, |t| {
            f(q1.rho(t[0], t[1])) == q2.rho(f(t[0]), f(t[1]))
        }),
        alpha(),
    ];
    let n1 = h1.n();
    let pair = [
        Clause::new("pair-map", 2, |t| {
            let (u, v) = q1.r(t[0], t[1]);
            q2.r(f(t[0]), f(t[1])) == (f(u), f(v))
        }),
        alpha(),
    ];
    let mut report = check("morphism", n1, &main).with_route("pair-map", verdict(n1, &pair));
    let lndi = |q: &QuadraticSet| is_left_nondegenerate(q).holds() && is_involutive(q).holds();
    if lndi(q1) && lndi(q2) {
        let li1 = q1.lambda_inverses()?;
        let li2 = q2.lambda_inverses()?;
        let only = [lambda(), alpha()];
        let inverse = [
            Clause::new("lambda-inverse-intertwine", 2, |t| {
                f(li1.get(t[0], t[1])) == li2.get(f(t[0]), f(t[1]))
            }),
            alpha(),
        ];
        report = report
            .with_route("lambda-only", verdict(n1, &only))
            .with_route("lambda-inverse", verdict(n1, &inverse));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{permutation_solution, theta_solution, trivial_solution};
    use crate::finite::SquareTable;

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    fn identity_r(n: usize, alpha: &[usize]) -> HomQuadraticSet {
        let q = QuadraticSet::from_fn(n, |x, y| (x, y)).unwrap();
        HomQuadraticSet::new(q, map(alpha)).unwrap()
    }

    #[test]
    fn r_apply_examples() {
        let t = trivial_solution(2, &FiniteMap::identity(2)).unwrap();
        assert_eq!(r_apply(t.base(), 0, 1).unwrap(), (1, 0));
        let id = identity_r(2, &[0, 1]);
        assert_eq!(r_apply(id.base(), 0, 1).unwrap(), (0, 1));
        let one = trivial_solution(1, &FiniteMap::identity(1)).unwrap();
        assert_eq!(r_apply(one.base(), 0, 0).unwrap(), (0, 0));
        assert!(r_apply(one.base(), 1, 0).is_err());
    }

    #[test]
    fn rho_is_indexed_by_subscript() {
        // r(x, y) = (x + y mod 3, 2x + y mod 3): ρ_y(x) sits at rho[y][x]
        let q = QuadraticSet::from_fn(3, |x, y| ((x + y) % 3, (2 * x + y) % 3)).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.r(x, y), ((x + y) % 3, (2 * x + y) % 3));
                assert_eq!(q.rho_table().get(y, x), (2 * x + y) % 3);
            }
        }
    }

    #[test]
    fn hom_compatibility_examples() {
        for alpha in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let t = trivial_solution(2, &map(&alpha)).unwrap();
            let rep = is_hom_compatible(&t);
            assert!(rep.holds());
            assert!(rep.routes_agree());
        }
        let f = map(&[1, 0]);
        let h = permutation_solution(&f, &f, &map(&[0, 1])).unwrap();
        assert!(is_hom_compatible(&h).holds());

        // α ≡ 0 with f the swap: αf(y) = 0 but fα(y) = 1 for every y, so the
        // least failing pair is (0, 0).
        let h = permutation_solution(&f, &f, &map(&[0, 0])).unwrap();
        let rep = is_hom_compatible(&h);
        assert!(rep.routes_agree());
        let w = rep.witness().unwrap();
        assert_eq!(w.clause, "alpha-lambda");
        assert_eq!(w.elements, vec![0, 0]);
    }

    #[test]
    fn involutive_examples() {
        for n in 1..=4 {
            let rep = is_involutive(trivial_solution(n, &FiniteMap::identity(n)).unwrap().base());
            assert!(rep.holds() && rep.routes_agree());
        }
        let f = map(&[1, 0]);
        let h = permutation_solution(&f, &f, &FiniteMap::identity(2)).unwrap();
        assert!(is_involutive(h.base()).holds());
        assert!(is_involutive(identity_r(3, &[0, 1, 2]).base()).holds());
    }

    #[test]
    fn nondegeneracy_examples() {
        let t = trivial_solution(3, &FiniteMap::identity(3)).unwrap();
        assert!(is_left_nondegenerate(t.base()).holds());
        assert!(is_right_nondegenerate(t.base()).holds());
        let id = identity_r(2, &[0, 1]);
        assert!(!is_left_nondegenerate(id.base()).holds());
        assert!(!is_right_nondegenerate(id.base()).holds());
        // λ_0 = const 0 collides at y = 0, 1
        assert_eq!(
            is_left_nondegenerate(id.base()).witness().unwrap().elements,
            vec![0, 0, 1]
        );
        let th = theta_solution(2, &SquareTable::new(vec![vec![0, 1], vec![0, 1]]).unwrap()).unwrap();
        assert!(is_left_nondegenerate(th.base()).holds());
    }

    #[test]
    fn rho_formula_examples() {
        let t = trivial_solution(3, &FiniteMap::identity(3)).unwrap();
        let rep = involutivity_rho_formula(t.base());
        assert!(rep.holds() && rep.routes_agree());
        let rep = involutivity_rho_formula(identity_r(2, &[0, 1]).base());
        assert!(!rep.is_applicable());
    }

    #[test]
    fn hybe_examples_identity_map() {
        // r = id is a HYBE solution exactly when α is idempotent
        for alpha in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let h = identity_r(2, &alpha);
            let rep = is_hybe_solution(&h);
            assert!(rep.routes_agree());
            assert_eq!(rep.holds(), map(&alpha).is_idempotent(), "{alpha:?}");
        }
    }

    #[test]
    fn hybe_with_identity_alpha_is_ybe() {
        let f = map(&[1, 2, 0]);
        let g = f.inverse().unwrap();
        let h = permutation_solution(&f, &g, &FiniteMap::identity(3)).unwrap();
        let ybe = is_ybe_solution(h.base());
        let hybe = is_hybe_solution(&h);
        assert!(ybe.holds() && hybe.holds());
        assert!(ybe.routes_agree() && hybe.routes_agree());
    }

    #[test]
    fn characterizations_on_theta_solution() {
        let rows = SquareTable::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let h = theta_solution(2, &rows).unwrap();
        for rep in [lndi_hybe_five_conditions(&h), lndi_hybe_six_conditions(&h)] {
            assert!(rep.holds(), "{rep:?}");
            assert!(rep.routes_agree());
        }
        assert!(alpha_square_identities(&h).holds());
    }

    #[test]
    fn degenerate_lambda_fails_first_condition() {
        let h = identity_r(2, &[0, 0]);
        for rep in [lndi_hybe_five_conditions(&h), lndi_hybe_six_conditions(&h)] {
            let w = rep.witness().unwrap();
            assert_eq!(w.clause, "cond1");
            assert!(rep.routes_agree());
        }
        assert!(!alpha_square_identities(&h).is_applicable());
    }

    #[test]
    fn non_involutive_fails_second_condition() {
        // λ_x = id, ρ_y = const 0: left non-degenerate but r² ≠ id
        let q = QuadraticSet::from_fn(3, |_, y| (y, 0)).unwrap();
        let h = HomQuadraticSet::plain(q);
        let rep = lndi_hybe_five_conditions(&h);
        assert_eq!(rep.witness().unwrap().clause, "cond2");
        assert!(rep.routes_agree());
    }

    #[test]
    fn witnesses_reproduce_failures() {
        // swap of f and g that do not commute
        let f = map(&[1, 2, 0]);
        let g = map(&[0, 2, 1]);
        let h = permutation_solution(&f, &g, &FiniteMap::identity(3)).unwrap();
        let rep = is_ybe_solution(h.base());
        assert!(!rep.holds() && rep.routes_agree());
        let t = &rep.witness().unwrap().elements;
        let id = FiniteMap::identity(3);
        assert_ne!(
            braid_lhs(h.base(), &id, t[0], t[1], t[2]),
            braid_rhs(h.base(), &id, t[0], t[1], t[2])
        );
    }

    #[test]
    fn morphism_examples() {
        let t = trivial_solution(2, &FiniteMap::identity(2)).unwrap();
        let rep = is_morphism(&FiniteMap::identity(2), &t, &t).unwrap();
        assert!(rep.holds() && rep.routes_agree());
        assert_eq!(rep.routes.len(), 3);

        let swap = map(&[1, 0]);
        let p = permutation_solution(&swap, &swap, &FiniteMap::identity(2)).unwrap();
        let rep = is_morphism(&FiniteMap::identity(2), &t, &p).unwrap();
        assert!(!rep.holds() && rep.routes_agree());

        assert!(is_morphism(&FiniteMap::identity(3), &t, &p).is_err());
        let bad = FiniteMap::with_codomain(vec![0, 5], 6).unwrap();
        assert!(is_morphism(&bad, &t, &p).is_err());
    }
}
