//! Brute-force oracles written straight from the definitions, on plain
//! vectors, without going through the library's predicates.

#![allow(dead_code)]

use rand::Rng;
use rand::seq::SliceRandom;

pub type Table = Vec<Vec<usize>>;

pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![usize::MAX; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| v < p.len() && !std::mem::replace(&mut seen[v], true))
}

/// `r(x, y) = (lam[x][y], rho[y][x])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub lam: Table,
    pub rho: Table,
    pub alpha: Vec<usize>,
}

impl Solution {
    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lam[x][y], self.rho[y][x])
    }

    pub fn from_r(n: usize, alpha: Vec<usize>, r: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut lam = vec![vec![0; n]; n];
        let mut rho = vec![vec![0; n]; n];
        for (x, y) in pairs(n) {
            let (u, v) = r(x, y);
            lam[x][y] = u;
            rho[y][x] = v;
        }
        Solution { lam, rho, alpha }
    }
}

/// `r(α×α) = (α×α)r` and `(α×r)(r×α)(α×r) = (r×α)(α×r)(r×α)`.
pub fn hybe(s: &Solution) -> bool {
    let a = |v: usize| s.alpha[v];
    let compatible = pairs(s.n()).all(|(x, y)| {
        let (u, v) = s.r(a(x), a(y));
        let (p, q) = s.r(x, y);
        (u, v) == (a(p), a(q))
    });
    compatible && braid(s.n(), |x, y| s.r(x, y), a)
}

/// The mixed braid relation for an arbitrary `r` and `α`.
pub fn braid(n: usize, r: impl Fn(usize, usize) -> (usize, usize), a: impl Fn(usize) -> usize) -> bool {
    let a_r = |t: [usize; 3]| {
        let (u, v) = r(t[1], t[2]);
        [a(t[0]), u, v]
    };
    let r_a = |t: [usize; 3]| {
        let (u, v) = r(t[0], t[1]);
        [u, v, a(t[2])]
    };
    triples(n).all(|(x, y, z)| a_r(r_a(a_r([x, y, z]))) == r_a(a_r(r_a([x, y, z]))))
}

pub fn involutive(s: &Solution) -> bool {
    pairs(s.n()).all(|(x, y)| {
        let (u, v) = s.r(x, y);
        s.r(u, v) == (x, y)
    })
}

pub fn left_nondegenerate(s: &Solution) -> bool {
    s.lam.iter().all(|row| is_permutation(row))
}

pub fn right_nondegenerate(s: &Solution) -> bool {
    s.rho.iter().all(|row| is_permutation(row))
}

/// `α(x·y) = α(x)·α(y)`.
pub fn endomorphism(op: &Table, alpha: &[usize]) -> bool {
    pairs(op.len()).all(|(x, y)| alpha[op[x][y]] == op[alpha[x]][alpha[y]])
}

pub fn left_quasigroup(op: &Table) -> bool {
    op.iter().all(|row| is_permutation(row))
}

/// The three defining identities of a Hom-cycle set.
pub fn hom_cycle_set(op: &Table, alpha: &[usize]) -> bool {
    let m = |x: usize, y: usize| op[x][y];
    let a = |x: usize| alpha[x];
    left_quasigroup(op)
        && endomorphism(op, alpha)
        && triples(op.len()).all(|(x, y, z)| {
            a(m(m(x, y), m(a(x), z))) == m(m(y, x), m(a(y), a(z)))
                && a(m(m(a(x), y), m(x, z))) == m(m(y, a(x)), m(a(y), a(z)))
                && a(m(m(a(x), a(y)), m(x, z))) == m(m(a(y), a(x)), m(y, a(z)))
        })
}

/// `(xy)(xz) = (yx)(yz)`.
pub fn cycle_set(op: &Table) -> bool {
    left_quasigroup(op) && triples(op.len()).all(|(x, y, z)| op[op[x][y]][op[x][z]] == op[op[y][x]][op[y][z]])
}

/// `α³(x)α(y) = α(x)α(y)` and the cycle identity on `α(X)`.
pub fn im_cycle_set(op: &Table, alpha: &[usize]) -> bool {
    let m = |x: usize, y: usize| op[x][y];
    let a = |x: usize| alpha[x];
    left_quasigroup(op)
        && endomorphism(op, alpha)
        && pairs(op.len()).all(|(x, y)| m(a(a(a(x))), a(y)) == m(a(x), a(y)))
        && triples(op.len()).all(|(x, y, z)| {
            let (x, y, z) = (a(x), a(y), a(z));
            m(m(x, y), m(x, z)) == m(m(y, x), m(y, z))
        })
}

/// `(x, y) ↦ (xy, yx)` is a bijection.
pub fn delta_bijective(op: &Table) -> bool {
    let n = op.len();
    let mut seen = vec![false; n * n];
    pairs(n).all(|(x, y)| !std::mem::replace(&mut seen[op[x][y] * n + op[y][x]], true))
}

pub fn image(alpha: &[usize]) -> Vec<usize> {
    let mut v = alpha.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// `x·'y = α(x)·y`.
pub fn twist(op: &Table, alpha: &[usize]) -> Table {
    (0..op.len()).map(|x| op[alpha[x]].clone()).collect()
}

/// `x·y = λ_x⁻¹(y)`.
pub fn to_op(s: &Solution) -> Option<Table> {
    left_nondegenerate(s).then(|| s.lam.iter().map(|row| invert(row)).collect())
}

/// `λ_x = σ_x⁻¹`, `ρ_y(x) = σ_x⁻¹(y)·x`.
pub fn to_solution(op: &Table, alpha: &[usize]) -> Solution {
    let n = op.len();
    let inv: Table = op.iter().map(|row| invert(row)).collect();
    Solution::from_r(n, alpha.to_vec(), |x, y| {
        let u = inv[x][y];
        (u, op[u][x])
    })
}

/// `τrτ`.
pub fn flip(s: &Solution) -> Solution {
    Solution::from_r(s.n(), s.alpha.clone(), |x, y| {
        let (u, v) = s.r(y, x);
        (v, u)
    })
}

/// A random left non-degenerate involutive quadratic set: random bijective
/// `λ_x` and `ρ_y(x) = λ⁻¹_{λ_x(y)}(x)`.
pub fn random_lndi(n: usize, rng: &mut impl Rng) -> (Table, Table) {
    let lam: Table = (0..n)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let inv: Table = lam.iter().map(|row| invert(row)).collect();
    let mut rho = vec![vec![0; n]; n];
    for (x, y) in pairs(n) {
        rho[y][x] = inv[lam[x][y]][x];
    }
    (lam, rho)
}

pub fn random_map(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..n)).collect()
}

/// A map commuting with every `λ_x` in the sense `αλ_x = λ_{α(x)}α`, found
/// by rejection sampling; `None` if none turned up.
pub fn random_compatible_map(lam: &Table, rng: &mut impl Rng, tries: usize) -> Option<Vec<usize>> {
    let n = lam.len();
    (0..tries)
        .map(|_| random_map(n, rng))
        .find(|a| pairs(n).all(|(x, y)| a[lam[x][y]] == lam[a[x]][a[y]]))
}

/// Every map of `{0..n-1}` to itself.
pub fn maps(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every permutation of `{0..n-1}`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    maps(n).into_iter().filter(|p| is_permutation(p)).collect()
}

/// Lex-least relabeled `(op, α)` under all permutations.
pub fn canonical(op: &Table, alpha: &[usize]) -> (Table, Vec<usize>) {
    let n = op.len();
    permutations(n)
        .into_iter()
        .map(|pi| {
            let mut t = vec![vec![0; n]; n];
            let mut a = vec![0; n];
            for (x, y) in pairs(n) {
                t[pi[x]][pi[y]] = pi[op[x][y]];
            }
            for x in 0..n {
                a[pi[x]] = pi[alpha[x]];
            }
            (t, a)
        })
        .min()
        .expect("at least one permutation")
}
