//! Exhaustive generation of small left Hom-quasigroups and LNDI solutions,
//! with isomorphism reduction by full relabeling minimization.
//!
//! Rows are chosen in lexicographic order of permutations, with partial
//! tables pruned against the α-free filters. `α` is chosen innermost, one
//! value at a time, and only endomorphisms survive. The first row splits the
//! search across worker threads; results are merged in first-row order, so
//! output never depends on scheduling.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::{FiniteMap, SquareTable};
use crate::quadset::{HomQuadraticSet, QuadraticSet, is_hybe_solution};
use crate::quasigroup::{
    HomQuasigroup, LeftQuasigroup, is_cycle_set, is_delta_bijective, is_hom_cycle_set, is_im_cycle_set, is_square_free,
};

/// Default largest order accepted by the enumerators.
pub const DEFAULT_MAX_ORDER: usize = 4;
/// Ceiling for `HOMBAX_MAX_N`.
pub const HARD_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    CycleSet,
    HomCycleSet,
    ImCycleSet,
    NonDegenerate,
    SquareFree,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::CycleSet,
        Property::HomCycleSet,
        Property::ImCycleSet,
        Property::NonDegenerate,
        Property::SquareFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::CycleSet => "cycle-set",
            Property::HomCycleSet => "hom-cycle-set",
            Property::ImCycleSet => "im-cycle-set",
            Property::NonDegenerate => "non-degenerate",
            Property::SquareFree => "square-free",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn holds(self, h: &HomQuasigroup) -> bool {
        match self {
            Property::CycleSet => is_cycle_set(h.base()).holds(),
            Property::HomCycleSet => is_hom_cycle_set(h).holds(),
            Property::ImCycleSet => is_im_cycle_set(h).holds(),
            Property::NonDegenerate => is_delta_bijective(h.base()).holds(),
            Property::SquareFree => is_square_free(h.base()).holds(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaClass {
    #[default]
    Any,
    #[serde(rename = "id")]
    Identity,
    Constant,
    Bijective,
}

impl AlphaClass {
    pub fn name(self) -> &'static str {
        match self {
            AlphaClass::Any => "any",
            AlphaClass::Identity => "id",
            AlphaClass::Constant => "constant",
            AlphaClass::Bijective => "bijective",
        }
    }

    pub fn parse(s: &str) -> Option<AlphaClass> {
        [
            AlphaClass::Any,
            AlphaClass::Identity,
            AlphaClass::Constant,
            AlphaClass::Bijective,
        ]
        .into_iter()
        .find(|a| a.name() == s)
    }

    pub fn admits(self, alpha: &FiniteMap) -> bool {
        match self {
            AlphaClass::Any => true,
            AlphaClass::Identity => alpha.is_identity(),
            AlphaClass::Constant => alpha.is_constant(),
            AlphaClass::Bijective => alpha.is_bijective(),
        }
    }

    /// Whether `value` may be `α(i)` given `α(0..i)`.
    fn admits_prefix(self, prefix: &[usize], i: usize, value: usize) -> bool {
        match self {
            AlphaClass::Any => true,
            AlphaClass::Identity => value == i,
            AlphaClass::Constant => prefix.first().is_none_or(|&c| c == value),
            AlphaClass::Bijective => !prefix.contains(&value),
        }
    }
}

/// A conjunction of properties and an α-class.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct EnumerationFilter {
    pub properties: Vec<Property>,
    pub alpha: AlphaClass,
}

impl EnumerationFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Property) -> Self {
        if !self.properties.contains(&p) {
            self.properties.push(p);
            self.properties.sort();
        }
        self
    }

    pub fn alpha(mut self, a: AlphaClass) -> Self {
        self.alpha = a;
        self
    }

    pub fn accepts(&self, h: &HomQuasigroup) -> bool {
        self.alpha.admits(h.alpha()) && self.properties.iter().all(|p| p.holds(h))
    }

    fn needs(&self, p: Property) -> bool {
        self.properties.contains(&p)
    }

    /// Whether the cycle axiom on the operation itself is implied.
    fn prunes_cycle(&self) -> bool {
        self.needs(Property::CycleSet)
            || (self.alpha == AlphaClass::Identity
                && (self.needs(Property::HomCycleSet) || self.needs(Property::ImCycleSet)))
    }
}

/// The largest order the enumerators accept: `HOMBAX_MAX_N` if set (and at
/// most [`HARD_MAX_ORDER`]), else [`DEFAULT_MAX_ORDER`].
pub fn max_order() -> usize {
    std::env::var("HOMBAX_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_ORDER, |v| v.min(HARD_MAX_ORDER))
}

/// Refuses `n = 0` and orders above [`max_order`], quoting the size of the
/// raw search space `(n!)^n · n^n`.
pub fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let cap = max_order();
    if n > cap {
        let fact: u128 = (1..=n as u128).product();
        let estimate = fact
            .checked_pow(n as u32)
            .and_then(|t| t.checked_mul((n as u128).checked_pow(n as u32)?))
            .map_or_else(|| "more than 2^128".to_string(), |v| v.to_string());
        return Err(Error::OverCap { n, cap, estimate });
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

struct Search<'a> {
    n: usize,
    filter: &'a EnumerationFilter,
    perms: &'a [Vec<usize>],
}

impl Search<'_> {
    /// Checks the α-free constraints that become decidable once rows
    /// `0..=k` are fixed.
    fn partial_ok(&self, rows: &[&[usize]], k: usize) -> bool {
        let m = |x: usize, y: usize| rows[x][y];
        if self.filter.needs(Property::SquareFree) && m(k, k) != k {
            return false;
        }
        if self.filter.needs(Property::NonDegenerate) {
            let mut seen = vec![false; self.n * self.n];
            for x in 0..=k {
                for y in 0..=k {
                    let slot = m(x, y) * self.n + m(y, x);
                    if seen[slot] {
                        return false;
                    }
                    seen[slot] = true;
                }
            }
        }
        if self.filter.prunes_cycle() {
            for x in 0..=k {
                for y in 0..=k {
                    let (xy, yx) = (m(x, y), m(y, x));
                    if xy > k || yx > k {
                        continue;
                    }
                    if (0..self.n).any(|z| m(xy, m(x, z)) != m(yx, m(y, z))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rows(&self, first: usize, emit: &mut dyn FnMut(HomQuasigroup)) {
        let mut chosen = vec![first];
        self.extend(&mut chosen, emit);
    }

    fn extend(&self, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(HomQuasigroup)) {
        let rows: Vec<&[usize]> = chosen.iter().map(|&i| self.perms[i].as_slice()).collect();
        if !self.partial_ok(&rows, chosen.len() - 1) {
            return;
        }
        if chosen.len() == self.n {
            let data: Vec<usize> = rows.concat();
            let base = LeftQuasigroup::from_table_unchecked(SquareTable::from_flat_unchecked(self.n, data));
            self.alphas(&base, emit);
            return;
        }
        for i in 0..self.perms.len() {
            chosen.push(i);
            self.extend(chosen, emit);
            chosen.pop();
        }
    }

    fn alphas(&self, base: &LeftQuasigroup, emit: &mut dyn FnMut(HomQuasigroup)) {
        let mut alpha = Vec::with_capacity(self.n);
        self.extend_alpha(base, &mut alpha, emit);
    }

    fn extend_alpha(&self, base: &LeftQuasigroup, alpha: &mut Vec<usize>, emit: &mut dyn FnMut(HomQuasigroup)) {
        let i = alpha.len();
        if i == self.n {
            let h = HomQuasigroup::new_unchecked(base.clone(), FiniteMap::from_vec_unchecked(alpha.clone()));
            if self.filter.accepts(&h) {
                emit(h);
            }
            return;
        }
        for v in 0..self.n {
            if !self.filter.alpha.admits_prefix(alpha, i, v) {
                continue;
            }
            alpha.push(v);
            if endomorphism_prefix_ok(base, alpha) {
                self.extend_alpha(base, alpha, emit);
            }
            alpha.pop();
        }
    }
}

/// `α(x·y) = α(x)·α(y)` for every instance decidable from `α(0..=i)`,
/// where `i` is the last assigned point.
fn endomorphism_prefix_ok(base: &LeftQuasigroup, alpha: &[usize]) -> bool {
    let i = alpha.len() - 1;
    for x in 0..=i {
        for y in 0..=i {
            if x != i && y != i {
                continue;
            }
            let xy = base.mul(x, y);
            if xy <= i && alpha[xy] != base.mul(alpha[x], alpha[y]) {
                return false;
            }
        }
    }
    // instances where x·y = i with x, y < i
    for x in 0..i {
        for y in 0..i {
            if base.mul(x, y) == i && alpha[i] != base.mul(alpha[x], alpha[y]) {
                return false;
            }
        }
    }
    true
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))
}

/// Runs `visit` on every structure passing `filter`, one call per first row,
/// in parallel, and returns the per-first-row results in first-row order.
fn per_first_row<T: Send>(
    n: usize,
    filter: &EnumerationFilter,
    jobs: Option<usize>,
    visit: impl Fn(&mut dyn FnMut(&mut dyn FnMut(HomQuasigroup))) -> T + Sync,
) -> Result<Vec<T>> {
    check_order(n)?;
    let perms = permutations(n);
    let search = Search {
        n,
        filter,
        perms: &perms,
    };
    let run = || {
        (0..perms.len())
            .into_par_iter()
            .map(|first| visit(&mut |emit| search.rows(first, emit)))
            .collect()
    };
    Ok(pool(jobs)?.install(run))
}

/// Every left Hom-quasigroup of order `n` (rows are permutations, `α` an
/// endomorphism) passing `filter`, in generation order.
pub fn enumerate_hom_quasigroups(
    n: usize,
    filter: &EnumerationFilter,
    jobs: Option<usize>,
) -> Result<Vec<HomQuasigroup>> {
    let chunks = per_first_row(n, filter, jobs, |drive| {
        let mut out = Vec::new();
        drive(&mut |h| out.push(h));
        out
    })?;
    Ok(chunks.into_iter().flatten().collect())
}

/// The lexicographically least `(table, α)` over all simultaneous
/// relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey {
    pub table: Vec<usize>,
    pub alpha: Vec<usize>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn to_hom_quasigroup(&self) -> HomQuasigroup {
        let n = self.n();
        HomQuasigroup::new_unchecked(
            LeftQuasigroup::from_table_unchecked(SquareTable::from_flat_unchecked(n, self.table.clone())),
            FiniteMap::from_vec_unchecked(self.alpha.clone()),
        )
    }
}

/// `table'[π x][π y] = π(op[x][y])`, `α'[π x] = π(α x)`.
pub fn relabel(h: &HomQuasigroup, pi: &[usize]) -> HomQuasigroup {
    let n = h.n();
    let mut table = vec![0; n * n];
    let mut alpha = vec![0; n];
    for x in 0..n {
        alpha[pi[x]] = pi[h.a(x)];
        for y in 0..n {
            table[pi[x] * n + pi[y]] = pi[h.mul(x, y)];
        }
    }
    HomQuasigroup::new_unchecked(
        LeftQuasigroup::from_table_unchecked(SquareTable::from_flat_unchecked(n, table)),
        FiniteMap::from_vec_unchecked(alpha),
    )
}

fn key_under(h: &HomQuasigroup, pi: &[usize], table: &mut [usize], alpha: &mut [usize]) {
    let n = h.n();
    for x in 0..n {
        alpha[pi[x]] = pi[h.a(x)];
        for y in 0..n {
            table[pi[x] * n + pi[y]] = pi[h.mul(x, y)];
        }
    }
}

/// The canonical key of `h` and the order of its automorphism group.
pub fn canonical_form_with_automorphisms(h: &HomQuasigroup) -> (CanonicalKey, usize) {
    let n = h.n();
    let mut best = CanonicalKey {
        table: vec![usize::MAX; n * n],
        alpha: vec![usize::MAX; n],
    };
    let mut ties = 0;
    let (mut table, mut alpha) = (vec![0; n * n], vec![0; n]);
    for pi in (0..n).permutations(n) {
        key_under(h, &pi, &mut table, &mut alpha);
        match (table.as_slice(), alpha.as_slice()).cmp(&(best.table.as_slice(), best.alpha.as_slice())) {
            std::cmp::Ordering::Less => {
                best.table.copy_from_slice(&table);
                best.alpha.copy_from_slice(&alpha);
                ties = 1;
            }
            std::cmp::Ordering::Equal => ties += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    (best, ties)
}

pub fn canonical_form(h: &HomQuasigroup) -> CanonicalKey {
    canonical_form_with_automorphisms(h).0
}

/// One isomorphism class: its canonical representative, how many labeled
/// structures it accounts for, and its automorphism group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub key: CanonicalKey,
    pub raw: usize,
    pub automorphisms: usize,
}

/// Isomorphism classes of the structures passing `filter`, in ascending key
/// order.
pub fn iso_classes(n: usize, filter: &EnumerationFilter, jobs: Option<usize>) -> Result<Vec<IsoClass>> {
    let chunks = per_first_row(n, filter, jobs, |drive| {
        let mut local: BTreeMap<CanonicalKey, (usize, usize)> = BTreeMap::new();
        drive(&mut |h| {
            let (key, aut) = canonical_form_with_automorphisms(&h);
            local.entry(key).or_insert((0, aut)).0 += 1;
        });
        local
    })?;
    let mut merged: BTreeMap<CanonicalKey, (usize, usize)> = BTreeMap::new();
    for chunk in chunks {
        for (k, (raw, aut)) in chunk {
            merged.entry(k).or_insert((0, aut)).0 += raw;
        }
    }
    Ok(merged
        .into_iter()
        .map(|(key, (raw, automorphisms))| IsoClass {
            key,
            raw,
            automorphisms,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub n: usize,
    pub filter: EnumerationFilter,
    pub raw: usize,
    pub iso_classes: usize,
}

pub fn count_up_to_iso(n: usize, filter: &EnumerationFilter, jobs: Option<usize>) -> Result<CountTable> {
    let classes = iso_classes(n, filter, jobs)?;
    Ok(CountTable {
        n,
        filter: filter.clone(),
        raw: classes.iter().map(|c| c.raw).sum(),
        iso_classes: classes.len(),
    })
}

/// Every left non-degenerate involutive quadratic set of order `n`: all
/// tables of bijective `λ_x`, with `ρ_y(x) = λ⁻¹_{λ_x(y)}(x)`.
pub fn lndi_quadratic_sets(n: usize) -> Result<Vec<QuadraticSet>> {
    check_order(n)?;
    let perms = permutations(n);
    let inverses: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            inv
        })
        .collect();
    let mut out = Vec::new();
    for choice in (0..n).map(|_| 0..perms.len()).multi_cartesian_product() {
        let lam = SquareTable::from_flat_unchecked(n, choice.iter().flat_map(|&i| perms[i].iter().copied()).collect());
        let rho = SquareTable::from_fn(n, |y, x| inverses[choice[lam.get(x, y)]][x]).expect("in range");
        out.push(QuadraticSet::new(lam, rho).expect("same size"));
    }
    Ok(out)
}

/// Every map `{0..n-1} → {0..n-1}` in lexicographic order.
pub fn all_maps(n: usize) -> Vec<FiniteMap> {
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(FiniteMap::from_vec_unchecked)
        .collect()
}

/// Every LNDI HYBE solution of order `n` whose `α` lies in `class`.
pub fn lndi_hybe_solutions(n: usize, class: AlphaClass, jobs: Option<usize>) -> Result<Vec<HomQuadraticSet>> {
    let bases = lndi_quadratic_sets(n)?;
    let alphas: Vec<FiniteMap> = all_maps(n).into_iter().filter(|a| class.admits(a)).collect();
    let run = || {
        bases
            .par_iter()
            .map(|q| {
                alphas
                    .iter()
                    .map(|a| HomQuadraticSet::new(q.clone(), a.clone()).expect("same size"))
                    .filter(|h| is_hybe_solution(h).holds())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    Ok(pool(jobs)?.install(run).into_iter().flatten().collect())
}

/// The lexicographically least `(λ, ρ, α)` over simultaneous relabelings
/// of a Hom-quadratic set, as one flat vector.
pub fn canonical_solution_key(h: &HomQuadraticSet) -> Vec<usize> {
    let n = h.n();
    let q = h.base();
    let mut best: Option<Vec<usize>> = None;
    let mut cur = vec![0; 2 * n * n + n];
    for pi in (0..n).permutations(n) {
        for x in 0..n {
            for y in 0..n {
                cur[pi[x] * n + pi[y]] = pi[q.lam(x, y)];
                cur[n * n + pi[y] * n + pi[x]] = pi[q.rho(y, x)];
            }
            cur[2 * n * n + pi[x]] = pi[h.alpha().apply(x)];
        }
        if best.as_ref().is_none_or(|b| cur < *b) {
            best = Some(cur.clone());
        }
    }
    best.unwrap_or_default()
}
