//! Left quasigroups, left Hom-quasigroups, (Hom-)cycle sets, im-cycle sets,
//! Δ-bijectivity and the dual operation.
//!
//! `op[x][y] = x·y`; row `x` is the left multiplication `σ_x`.

use crate::error::{Error, Result};
use crate::finite::{FiniteMap, PairMap, SquareTable, check_same_size};
use crate::report::{CheckReport, Clause, Verdict, Witness, check, first_failure};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftQuasigroup {
    op: SquareTable,
}

impl LeftQuasigroup {
    /// Rejects tables with a row that is not a permutation.
    pub fn new(op: SquareTable) -> Result<Self> {
        if let Some((row, y1, y2)) = op.first_degenerate_row() {
            return Err(Error::DegenerateRow {
                row,
                y1,
                y2,
                image: op.get(row, y1),
            });
        }
        Ok(LeftQuasigroup { op })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(SquareTable::new(rows)?)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(SquareTable::from_fn(n, f)?)
    }

    pub(crate) fn from_table_unchecked(op: SquareTable) -> Self {
        debug_assert!(op.rows_bijective());
        LeftQuasigroup { op }
    }

    /// The groupoid `x·y = y`.
    pub fn right_zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, y| y)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.op.n()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.op.get(x, y)
    }

    pub fn table(&self) -> &SquareTable {
        &self.op
    }

    /// Left multiplication `σ_x`.
    pub fn sigma(&self, x: usize) -> FiniteMap {
        self.op.row_map(x)
    }

    /// `Δ(x, y) = (x·y, y·x)`.
    pub fn delta(&self) -> PairMap {
        PairMap::from_fn(self.n(), |x, y| (self.mul(x, y), self.mul(y, x))).expect("in range")
    }

    /// Restriction to a subset closed under the operation.
    pub fn restrict(&self, subset: &[usize]) -> Result<LeftQuasigroup> {
        Self::new(self.op.restrict(subset)?)
    }
}

/// A left quasigroup with a self-map `α`, normally an endomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomQuasigroup {
    base: LeftQuasigroup,
    alpha: FiniteMap,
}

impl HomQuasigroup {
    /// Checked constructor: `α` must be an endomorphism of `base`.
    pub fn new(base: LeftQuasigroup, alpha: FiniteMap) -> Result<Self> {
        check_same_size(base.n(), alpha.len())?;
        let h = HomQuasigroup { base, alpha };
        if let Some(w) = is_endomorphism_witness(&h.alpha, &h.base) {
            return Err(Error::NotEndomorphism {
                x: w.elements[0],
                y: w.elements[1],
            });
        }
        Ok(h)
    }

    /// No endomorphism check; [`is_endomorphism`] can be re-run at any time.
    pub fn new_unchecked(base: LeftQuasigroup, alpha: FiniteMap) -> Self {
        assert_eq!(base.n(), alpha.len(), "size mismatch");
        HomQuasigroup { base, alpha }
    }

    /// `(X, id)`.
    pub fn plain(base: LeftQuasigroup) -> Self {
        let alpha = FiniteMap::identity(base.n());
        HomQuasigroup { base, alpha }
    }

    pub fn base(&self) -> &LeftQuasigroup {
        &self.base
    }

    pub fn alpha(&self) -> &FiniteMap {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.base.mul(x, y)
    }

    #[inline]
    pub fn a(&self, x: usize) -> usize {
        self.alpha.apply(x)
    }

    pub fn into_parts(self) -> (LeftQuasigroup, FiniteMap) {
        (self.base, self.alpha)
    }
}

fn is_endomorphism_witness(alpha: &FiniteMap, x: &LeftQuasigroup) -> Option<Witness> {
    let a = |v| alpha.apply(v);
    first_failure(
        x.n(),
        &[Clause::new("endomorphism", 2, |t| {
            a(x.mul(t[0], t[1])) == x.mul(a(t[0]), a(t[1]))
        })],
    )
}

/// `α(x·y) = α(x)·α(y)` for all `x, y`.
pub fn is_endomorphism(alpha: &FiniteMap, x: &LeftQuasigroup) -> Result<CheckReport> {
    check_same_size(x.n(), alpha.len())?;
    Ok(CheckReport::new(
        "endomorphism",
        Verdict::from_witness(is_endomorphism_witness(alpha, x)),
    ))
}

/// `(xy)(xz) = (yx)(yz)` for all `x, y, z`.
pub fn is_cycle_set(x: &LeftQuasigroup) -> CheckReport {
    let m = |a, b| x.mul(a, b);
    check(
        "cycle-set",
        x.n(),
        &[Clause::new("cycle", 3, |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            m(m(a, b), m(a, c)) == m(m(b, a), m(b, c))
        })],
    )
}

fn hom_cycle_axioms(h: &HomQuasigroup) -> [Clause<'_>; 3] {
    let m = |x, y| h.mul(x, y);
    let a = |x| h.a(x);
    [
        Clause::new("axiom1", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(m(m(x, y), m(a(x), z))) == m(m(y, x), m(a(y), a(z)))
        }),
        Clause::new("axiom2", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(m(m(a(x), y), m(x, z))) == m(m(y, a(x)), m(a(y), a(z)))
        }),
        Clause::new("axiom3", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a(m(m(a(x), a(y)), m(x, z))) == m(m(a(y), a(x)), m(y, a(z)))
        }),
    ]
}

fn alpha_square_clause(h: &HomQuasigroup) -> Clause<'_> {
    Clause::new("alpha-square", 2, move |t| {
        h.mul(h.a(h.a(t[0])), h.a(t[1])) == h.mul(t[0], h.a(t[1]))
    })
}

fn mixed_clause(h: &HomQuasigroup) -> Clause<'_> {
    let m = |x, y| h.mul(x, y);
    let a = |x| h.a(x);
    Clause::new("mixed", 3, move |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        m(m(x, a(y)), m(a(x), a(z))) == m(m(y, a(x)), m(a(y), a(z)))
    })
}

/// The three defining axioms of a Hom-cycle set:
///
/// * `α((xy)(α(x)z)) = (yx)(α(y)α(z))`
/// * `α((α(x)y)(xz)) = (yα(x))(α(y)α(z))`
/// * `α((α(x)α(y))(xz)) = (α(y)α(x))(yα(z))`
///
/// The `two-equations` route evaluates the equivalent pair
/// `α²(x)α(y) = xα(y)` and `(xα(y))(α(x)α(z)) = (yα(x))(α(y)α(z))`, which
/// characterizes Hom-cycle sets among left Hom-quasigroups.
pub fn is_hom_cycle_set(h: &HomQuasigroup) -> CheckReport {
    let n = h.n();
    let two = [alpha_square_clause(h), mixed_clause(h)];
    check("hom-cycle-set", n, &hom_cycle_axioms(h))
        .with_route("two-equations", Verdict::from_witness(first_failure(n, &two)))
}

/// Each defining axiom checked on its own, in order.
pub fn hom_cycle_axiom_reports(h: &HomQuasigroup) -> [CheckReport; 3] {
    let n = h.n();
    hom_cycle_axioms(h).map(|c| {
        let name = c.label;
        check(name, n, std::slice::from_ref(&c))
    })
}

/// `α²(x)α(y) = xα(y)`.
pub fn alpha_square_law(h: &HomQuasigroup) -> CheckReport {
    check("alpha-square", h.n(), &[alpha_square_clause(h)])
}

/// `(xα²(y))α(z) = (xy)α(z)`, a consequence of [`alpha_square_law`].
pub fn alpha_square_shift(h: &HomQuasigroup) -> CheckReport {
    let m = |x, y| h.mul(x, y);
    let a = |x| h.a(x);
    check(
        "alpha-square-shift",
        h.n(),
        &[Clause::new("shift", 3, |t| {
            m(m(t[0], a(a(t[1]))), a(t[2])) == m(m(t[0], t[1]), a(t[2]))
        })],
    )
}

/// `α³(x)α(y) = α(x)α(y)` and
/// `(α(x)α(y))(α(x)α(z)) = (α(y)α(x))(α(y)α(z))`.
///
/// The `image-cycle-set` route restricts the operation to `α(X)`, checks
/// that it is a cycle set there, and adds the first identity.
pub fn is_im_cycle_set(h: &HomQuasigroup) -> CheckReport {
    let n = h.n();
    let m = |x, y| h.mul(x, y);
    let a = |x| h.a(x);
    let cube = || {
        Clause::new("alpha-cube", 2, move |t: &[usize]| {
            m(a(a(a(t[0]))), a(t[1])) == m(a(t[0]), a(t[1]))
        })
    };
    let clauses = [
        cube(),
        Clause::new("image-cycle", 3, |t| {
            let (x, y, z) = (a(t[0]), a(t[1]), a(t[2]));
            m(m(x, y), m(x, z)) == m(m(y, x), m(y, z))
        }),
    ];
    let route = match h.base.restrict(&h.alpha.image()) {
        Err(e) => Verdict::NotApplicable {
            reason: format!("alpha(X) is not a left subquasigroup: {e}"),
        },
        Ok(sub) => {
            let cycle = is_cycle_set(&sub);
            if cycle.holds() {
                Verdict::from_witness(first_failure(n, &[cube()]))
            } else {
                cycle.verdict
            }
        }
    };
    check("im-cycle-set", n, &clauses).with_route("image-cycle-set", route)
}

fn delta_witness(x: &LeftQuasigroup) -> Option<((usize, usize), (usize, usize))> {
    x.delta().collision().map(|(earlier, later)| (later, earlier))
}

/// Whether `Δ(x, y) = (xy, yx)` is a bijection. The witness is the collision
/// at the least image value, later pair first: `[x2, y2, x1, y1]` with
/// `Δ(x2, y2) = Δ(x1, y1)`.
pub fn is_delta_bijective(x: &LeftQuasigroup) -> CheckReport {
    let v = match delta_witness(x) {
        None => Verdict::Holds,
        Some((later, earlier)) => Verdict::Fails {
            witness: Witness {
                clause: "delta-injective".into(),
                elements: vec![later.0, later.1, earlier.0, earlier.1],
            },
        },
    };
    CheckReport::new("delta-bijective", v)
}

/// The dual operation `∘`, defined by `Δ⁻¹(x, y) = (x∘y, y∘x)`, as a table.
///
/// Both `(x·y)∘(y·x) = x` and `(x∘y)·(y∘x) = x` are verified on the result.
pub fn dual_table(x: &LeftQuasigroup) -> Result<SquareTable> {
    if let Some((later, earlier)) = delta_witness(x) {
        return Err(Error::DeltaCollision {
            first: later,
            second: earlier,
        });
    }
    let n = x.n();
    let mut dual = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            dual[x.mul(a, b) * n + x.mul(b, a)] = a;
        }
    }
    let dual = SquareTable::from_flat_unchecked(n, dual);
    let d = |a, b| dual.get(a, b);
    let m = |a, b| x.mul(a, b);
    for a in 0..n {
        for b in 0..n {
            if d(m(a, b), m(b, a)) != a || m(d(a, b), d(b, a)) != a {
                return Err(Error::RouteMismatch(format!(
                    "dual operation identities fail at ({a}, {b})"
                )));
            }
        }
    }
    Ok(dual)
}

/// The dual operation as a left quasigroup. Fails with a Δ-collision when
/// `x` is degenerate, and with a domain error if the dual has a row that is
/// not a permutation.
pub fn dual_op(x: &LeftQuasigroup) -> Result<LeftQuasigroup> {
    let table = dual_table(x)?;
    LeftQuasigroup::new(table).map_err(|e| Error::Domain(format!("dual operation is not a left quasigroup: {e}")))
}

/// `q(x) = x·x`.
pub fn square_map(x: &LeftQuasigroup) -> FiniteMap {
    FiniteMap::from_vec_unchecked((0..x.n()).map(|v| x.mul(v, v)).collect())
}

/// `q'(x) = α(x)·x`, the square map of the twist.
pub fn twisted_square_map(h: &HomQuasigroup) -> FiniteMap {
    FiniteMap::from_vec_unchecked((0..h.n()).map(|v| h.mul(h.a(v), v)).collect())
}

/// Square-free means the square map is the identity.
pub fn is_square_free(x: &LeftQuasigroup) -> CheckReport {
    check(
        "square-free",
        x.n(),
        &[Clause::new("square", 1, |t| x.mul(t[0], t[0]) == t[0])],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_4order, right_zero_hom_cycle_set};

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    fn not_cycle() -> LeftQuasigroup {
        LeftQuasigroup::from_rows(vec![vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]]).unwrap()
    }

    /// Plain triple loop, independent of the clause machinery.
    fn first_cycle_failure(x: &LeftQuasigroup) -> Option<Vec<usize>> {
        let n = x.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = x.mul(x.mul(a, b), x.mul(a, c));
                    let rhs = x.mul(x.mul(b, a), x.mul(b, c));
                    if lhs != rhs {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    #[test]
    fn rejects_degenerate_rows() {
        let err = LeftQuasigroup::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::DegenerateRow { row: 1, .. }));
    }

    #[test]
    fn checked_constructor_enforces_endomorphism() {
        // x·y = y+1 mod 3; α ≡ 0 fails: α(0·0)=0 but α(0)·α(0)=1
        let x = LeftQuasigroup::from_fn(3, |_, y| (y + 1) % 3).unwrap();
        assert_eq!(
            HomQuasigroup::new(x.clone(), map(&[0, 0, 0])),
            Err(Error::NotEndomorphism { x: 0, y: 0 })
        );
        let h = HomQuasigroup::new_unchecked(x, map(&[0, 0, 0]));
        assert!(!is_endomorphism(h.alpha(), h.base()).unwrap().holds());
    }

    #[test]
    fn endomorphism_examples() {
        let four = example_4order();
        assert!(is_endomorphism(&FiniteMap::identity(4), four.base()).unwrap().holds());
        assert!(is_endomorphism(four.alpha(), four.base()).unwrap().holds());
        let rz = LeftQuasigroup::right_zero(2).unwrap();
        assert!(is_endomorphism(&map(&[1, 0]), &rz).unwrap().holds());
        assert!(is_endomorphism(&map(&[0]), &rz).is_err());
    }

    #[test]
    fn cycle_set_examples() {
        for n in 1..=4 {
            assert!(is_cycle_set(&LeftQuasigroup::right_zero(n).unwrap()).holds());
        }
        let x = not_cycle();
        let rep = is_cycle_set(&x);
        assert!(!rep.holds());
        assert_eq!(Some(rep.witness().unwrap().elements.clone()), first_cycle_failure(&x));
        // (0·2)(0·0) = 0·1 = 2 but (2·0)(2·0) = 0·0 = 1
        assert_eq!(rep.witness().unwrap().elements, vec![0, 2, 0]);
    }

    #[test]
    fn hom_cycle_set_examples() {
        let rz = LeftQuasigroup::right_zero(3).unwrap();
        let rep = is_hom_cycle_set(&HomQuasigroup::plain(rz));
        assert!(rep.holds() && rep.routes_agree());
        let four = example_4order();
        let rep = is_hom_cycle_set(&four);
        assert!(rep.holds() && rep.routes_agree());
        let rep = is_hom_cycle_set(&HomQuasigroup::plain(not_cycle()));
        assert!(!rep.holds() && rep.routes_agree());
    }

    #[test]
    fn im_cycle_set_examples() {
        let four = example_4order();
        let rep = is_im_cycle_set(&four);
        assert!(rep.holds() && rep.routes_agree());
        for x in [not_cycle(), LeftQuasigroup::right_zero(3).unwrap()] {
            let h = HomQuasigroup::plain(x.clone());
            assert_eq!(is_im_cycle_set(&h).holds(), is_cycle_set(&x).holds());
        }
    }

    #[test]
    fn delta_examples() {
        let rep = is_delta_bijective(example_4order().base());
        assert_eq!(rep.witness().unwrap().elements, vec![2, 3, 1, 1]);
        let rz = LeftQuasigroup::right_zero(2).unwrap();
        assert!(is_delta_bijective(&rz).holds());
        assert_eq!(dual_op(&rz).unwrap(), rz);
        assert_eq!(
            dual_op(example_4order().base()),
            Err(Error::DeltaCollision {
                first: (2, 3),
                second: (1, 1)
            })
        );
    }

    #[test]
    fn square_maps_of_four_order_example() {
        let four = example_4order();
        assert!(square_map(four.base()).is_identity());
        assert!(is_square_free(four.base()).holds());
        let q2 = twisted_square_map(&four);
        assert!(q2.is_identity() && q2.is_bijective());
    }

    #[test]
    fn right_zero_structures_are_hom_cycle_sets() {
        let h = right_zero_hom_cycle_set(3, &map(&[0, 0, 0])).unwrap();
        assert!(is_hom_cycle_set(&h).holds());
        assert_eq!(hom_cycle_axiom_reports(&h).map(|r| r.holds()), [true; 3]);
    }
}
