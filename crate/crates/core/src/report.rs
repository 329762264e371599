//! Structured verdicts for universally quantified predicates.

use serde::Serialize;

/// The failing instance of a clause: which clause, and at which elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Verdict::NotApplicable { .. })
    }

    pub fn from_witness(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(witness) => Verdict::Fails { witness },
        }
    }
}

/// An independent evaluation of the same property, kept next to the main
/// verdict so callers can confirm that equivalent characterizations agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Route {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<Route>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        CheckReport {
            name: name.into(),
            verdict,
            routes: Vec::new(),
        }
    }

    pub fn not_applicable(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(name, Verdict::NotApplicable { reason: reason.into() })
    }

    pub fn with_route(mut self, name: impl Into<String>, verdict: Verdict) -> Self {
        self.routes.push(Route {
            name: name.into(),
            verdict,
        });
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn is_applicable(&self) -> bool {
        self.verdict.is_applicable()
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn route(&self, name: &str) -> Option<&Route> {
        self.routes.iter().find(|r| r.name == name)
    }

    /// Every applicable route reaches the same truth value as the main verdict.
    pub fn routes_agree(&self) -> bool {
        self.is_applicable()
            && self
                .routes
                .iter()
                .filter(|r| r.verdict.is_applicable())
                .all(|r| r.verdict.holds() == self.holds())
    }
}

type Predicate<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

/// One universally quantified identity over `arity` carrier elements.
pub(crate) struct Clause<'a> {
    pub label: &'static str,
    pub arity: usize,
    eval: Predicate<'a>,
}

impl<'a> Clause<'a> {
    pub fn new(label: &'static str, arity: usize, eval: impl Fn(&[usize]) -> bool + 'a) -> Self {
        Clause {
            label,
            arity,
            eval: Box::new(eval),
        }
    }

    pub fn holds_at(&self, t: &[usize]) -> bool {
        (self.eval)(t)
    }
}

/// Evaluates clauses in order; within a clause, tuples run in lexicographic
/// order. Returns the first failure, which is therefore the least failing
/// tuple of the first failing clause.
pub(crate) fn first_failure(n: usize, clauses: &[Clause<'_>]) -> Option<Witness> {
    for clause in clauses {
        if let Some(t) = first_failing_tuple(n, clause.arity, |t| clause.holds_at(t)) {
            return Some(Witness {
                clause: clause.label.to_string(),
                elements: t,
            });
        }
    }
    None
}

pub(crate) fn check(name: &str, n: usize, clauses: &[Clause<'_>]) -> CheckReport {
    CheckReport::new(name, Verdict::from_witness(first_failure(n, clauses)))
}

pub(crate) fn first_failing_tuple(
    n: usize,
    arity: usize,
    mut holds: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let mut t = vec![0; arity];
    loop {
        if !holds(&t) {
            return Some(t);
        }
        // odometer increment, last coordinate fastest
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_scanned_lexicographically() {
        let mut seen = Vec::new();
        first_failing_tuple(2, 2, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(
            first_failing_tuple(3, 3, |t| t != [1, 2, 0] && t != [2, 0, 0]),
            Some(vec![1, 2, 0])
        );
    }

    #[test]
    fn nullary_clause_is_evaluated_once() {
        let mut calls = 0;
        assert_eq!(
            first_failing_tuple(5, 0, |_| {
                calls += 1;
                true
            }),
            None
        );
        assert_eq!(calls, 1);
    }

    #[test]
    fn witness_names_the_first_failing_clause() {
        let clauses = [
            Clause::new("a", 1, |t| t[0] != 7),
            Clause::new("b", 2, |t| t[0] + t[1] < 3),
            Clause::new("c", 1, |_| false),
        ];
        let w = first_failure(3, &clauses).unwrap();
        assert_eq!(w.clause, "b");
        assert_eq!(w.elements, vec![1, 2]);
        assert!(!clauses[1].holds_at(&w.elements));
    }

    #[test]
    fn route_agreement() {
        let r = CheckReport::new("p", Verdict::Holds)
            .with_route("q", Verdict::Holds)
            .with_route("skip", Verdict::NotApplicable { reason: "x".into() });
        assert!(r.routes_agree());
        let r = r.with_route(
            "bad",
            Verdict::Fails {
                witness: Witness {
                    clause: "c".into(),
                    elements: vec![],
                },
            },
        );
        assert!(!r.routes_agree());
    }
}
