//! Concrete families of solutions and Hom-cycle sets.
//!
//! Linear structures live on `(Z_m)^d`. A tuple `(x_0, .., x_{d-1})` is
//! stored as the index `x_0 + x_1·m + .. + x_{d-1}·m^{d-1}`, and matrices act
//! on column tuples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{FiniteMap, SquareTable, check_same_size};
use crate::functors::twist;
use crate::quadset::{HomQuadraticSet, QuadraticSet};
use crate::quasigroup::{HomQuasigroup, LeftQuasigroup, is_endomorphism, is_hom_cycle_set};
use crate::report::{CheckReport, Verdict, Witness};

/// Largest carrier a linear structure may materialize.
pub const MAX_LINEAR_CARRIER: usize = 4096;

/// `λ_x = id`, `ρ_y = id`: `r(x, y) = (y, x)`.
pub fn trivial_solution(n: usize, alpha: &FiniteMap) -> Result<HomQuadraticSet> {
    check_same_size(n, alpha.len())?;
    let q = QuadraticSet::from_fn(n, |x, y| (y, x))?;
    HomQuadraticSet::new(q, alpha.clone())
}

/// `r(x, y) = (f(y), g(x))`.
pub fn permutation_solution(f: &FiniteMap, g: &FiniteMap, alpha: &FiniteMap) -> Result<HomQuadraticSet> {
    let n = f.len();
    check_same_size(n, g.len())?;
    check_same_size(n, alpha.len())?;
    let q = QuadraticSet::from_fn(n, |x, y| (f.apply(y), g.apply(x)))?;
    HomQuadraticSet::new(q, alpha.clone())
}

/// The solution with `α ≡ 0` built from bijective `λ_x` that all fix `0`,
/// with `ρ_y(x) = λ⁻¹_{λ_x(y)}(x)`.
pub fn theta_solution(n: usize, lam_rows: &SquareTable) -> Result<HomQuadraticSet> {
    check_same_size(n, lam_rows.n())?;
    let inv = lam_rows.row_inverses()?;
    if let Some(x) = (0..n).find(|&x| lam_rows.get(x, 0) != 0) {
        return Err(Error::Domain(format!("lambda_{x} does not fix 0")));
    }
    let rho = SquareTable::from_fn(n, |y, x| inv.get(lam_rows.get(x, y), x))?;
    let q = QuadraticSet::new(lam_rows.clone(), rho)?;
    HomQuadraticSet::new(q, FiniteMap::constant(n, 0)?)
}

/// `x·y = y` with the given `α`.
pub fn right_zero_hom_cycle_set(n: usize, alpha: &FiniteMap) -> Result<HomQuasigroup> {
    check_same_size(n, alpha.len())?;
    Ok(HomQuasigroup::new_unchecked(
        LeftQuasigroup::right_zero(n)?,
        alpha.clone(),
    ))
}

/// The order-4 square-free Hom-cycle set with constant `α` whose `Δ` is not
/// bijective.
pub fn example_4order() -> HomQuasigroup {
    let base = LeftQuasigroup::from_rows(vec![
        vec![0, 1, 2, 3],
        vec![0, 1, 2, 3],
        vec![0, 3, 2, 1],
        vec![0, 2, 1, 3],
    ])
    .expect("rows are permutations");
    HomQuasigroup::new(base, FiniteMap::constant(4, 0).expect("n > 0")).expect("alpha is an endomorphism")
}

/// `x·y = φ(x) + ψ(y)` with linear `α` on `(Z_m)^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSpec {
    pub m: u64,
    pub d: usize,
    pub phi: Vec<Vec<i64>>,
    pub psi: Vec<Vec<i64>>,
    pub alpha: Vec<Vec<i64>>,
}

type Matrix = Vec<Vec<i64>>;

fn reduce(a: &Matrix, m: i64) -> Matrix {
    a.iter()
        .map(|row| row.iter().map(|v| v.rem_euclid(m)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, m: i64) -> Matrix {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum::<i64>().rem_euclid(m))
                .collect()
        })
        .collect()
}

fn mat_sub(a: &Matrix, b: &Matrix, m: i64) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x - y).rem_euclid(m)).collect())
        .collect()
}

fn identity_matrix(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
}

/// Determinant mod `m` by cofactor expansion along the first row.
fn det_mod(a: &Matrix, m: i64) -> i64 {
    let d = a.len();
    if d == 1 {
        return a[0][0].rem_euclid(m);
    }
    let mut total = 0i64;
    for j in 0..d {
        let minor: Matrix = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total = (total + sign * a[0][j] * det_mod(&minor, m)).rem_euclid(m);
    }
    total
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

impl LinearSpec {
    pub fn new(m: u64, phi: Matrix, psi: Matrix, alpha: Matrix) -> Result<Self> {
        let spec = LinearSpec {
            m,
            d: phi.len(),
            phi,
            psi,
            alpha,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks shapes, the modulus, and the carrier size.
    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::Domain(format!("modulus must be at least 2, got {}", self.m)));
        }
        if self.d == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        for (name, mat) in [("phi", &self.phi), ("psi", &self.psi), ("alpha", &self.alpha)] {
            if mat.len() != self.d || mat.iter().any(|row| row.len() != self.d) {
                return Err(Error::Domain(format!("{name} must be a {0}x{0} matrix", self.d)));
            }
        }
        self.carrier_size().map(|_| ())
    }

    /// `m^d`, bounded by [`MAX_LINEAR_CARRIER`].
    pub fn carrier_size(&self) -> Result<usize> {
        let m = usize::try_from(self.m).unwrap_or(usize::MAX);
        let mut n: usize = 1;
        for _ in 0..self.d {
            n = n.checked_mul(m).filter(|&v| v <= MAX_LINEAR_CARRIER).ok_or_else(|| {
                Error::Domain(format!(
                    "carrier {}^{} exceeds the limit of {MAX_LINEAR_CARRIER} elements",
                    self.m, self.d
                ))
            })?;
        }
        Ok(n)
    }

    fn modulus(&self) -> i64 {
        self.m as i64
    }

    pub fn encode(&self, v: &[i64]) -> usize {
        let m = self.modulus();
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.m as usize + c.rem_euclid(m) as usize)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<i64> {
        let m = self.m as usize;
        (0..self.d)
            .map(|_| {
                let c = idx % m;
                idx /= m;
                c as i64
            })
            .collect()
    }

    fn act(&self, a: &Matrix, v: &[i64]) -> Vec<i64> {
        a.iter()
            .map(|row| row.iter().zip(v).map(|(p, q)| p * q).sum::<i64>())
            .collect()
    }

    /// The four matrix conditions, each as a boolean, in order.
    pub fn conditions(&self) -> [bool; 4] {
        let m = self.modulus();
        let (phi, psi, al) = (reduce(&self.phi, m), reduce(&self.psi, m), reduce(&self.alpha, m));
        let c1 = gcd(det_mod(&psi, m), m) == 1;
        let c2 = mat_mul(&phi, &al, m) == mat_mul(&al, &phi, m) && mat_mul(&psi, &al, m) == mat_mul(&al, &psi, m);
        let c3 = mat_mul(&phi, &mat_mul(&al, &al, m), m) == phi;
        let lhs = mat_mul(&phi, &phi, m);
        let rhs = mat_sub(
            &mat_mul(&mat_mul(&phi, &psi, m), &al, m),
            &mat_mul(&mat_mul(&psi, &phi, m), &al, m),
            m,
        );
        [c1, c2, c3, lhs == rhs]
    }

    pub fn psi_invertible(&self) -> bool {
        let m = self.modulus();
        gcd(det_mod(&reduce(&self.psi, m), m), m) == 1
    }
}

/// Materializes `x·y = φ(x) + ψ(y)` and `α`.
///
/// The report's main verdict is the conjunction of the matrix conditions
/// `ψ` invertible, `φα = αφ` and `ψα = αψ`, `φα² = φ`, `φ² = φψα − ψφα`
/// (clauses `cond1`..`cond4`). The route `table` evaluates the same property
/// on the materialized table: `α` is an endomorphism and the axioms of a
/// Hom-cycle set hold.
pub fn linear_structure(spec: &LinearSpec) -> Result<(HomQuasigroup, CheckReport)> {
    spec.validate()?;
    if !spec.psi_invertible() {
        return Err(Error::Domain(format!("psi is singular mod {}", spec.m)));
    }
    let n = spec.carrier_size()?;
    let m = spec.modulus();
    let phi_x: Vec<Vec<i64>> = (0..n).map(|x| spec.act(&spec.phi, &spec.decode(x))).collect();
    let psi_y: Vec<Vec<i64>> = (0..n).map(|y| spec.act(&spec.psi, &spec.decode(y))).collect();
    let mut data = Vec::with_capacity(n * n);
    for px in &phi_x {
        for py in &psi_y {
            let sum: Vec<i64> = px.iter().zip(py).map(|(a, b)| (a + b).rem_euclid(m)).collect();
            data.push(spec.encode(&sum));
        }
    }
    let table = SquareTable::from_flat_unchecked(n, data);
    let alpha = FiniteMap::from_fn(n, |x| spec.encode(&spec.act(&spec.alpha, &spec.decode(x))))?;
    let base = LeftQuasigroup::new(table)?;
    let h = HomQuasigroup::new_unchecked(base, alpha);

    let labels = ["cond1", "cond2", "cond3", "cond4"];
    let matrix = match spec.conditions().iter().position(|c| !c) {
        None => Verdict::Holds,
        Some(i) => Verdict::Fails {
            witness: Witness {
                clause: labels[i].to_string(),
                elements: vec![],
            },
        },
    };
    let endo = is_endomorphism(h.alpha(), h.base())?;
    let table_verdict = if endo.holds() {
        is_hom_cycle_set(&h).verdict
    } else {
        endo.verdict
    };
    let report = CheckReport::new("linear-hom-cycle-set", matrix).with_route("table", table_verdict);
    Ok((h, report))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The matrices `φ`, `ψ`, `α` on `(Z_p)^3` for which `x·y = φ(x) + ψ(y)`
/// is a cycle set with `α²(x)·y = x·y` but not a Hom-cycle set.
pub fn matrix_spec(p: u64) -> Result<LinearSpec> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Domain(format!("expected an odd prime, got {p}")));
    }
    LinearSpec::new(
        p,
        vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]],
        vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]],
        vec![vec![-1, 0, 1], vec![0, -1, 0], vec![0, 0, -1]],
    )
}

/// The structure of [`matrix_spec`] together with its twist. The first is
/// not a Hom-cycle set, the second is, and twisting the second gives back
/// the first.
pub fn example_matrix(p: u64) -> Result<(HomQuasigroup, HomQuasigroup)> {
    let (orig, _) = linear_structure(&matrix_spec(p)?)?;
    let tw = twist(&orig);
    Ok((orig, tw))
}

/// Replaces `α` in a linear spec by the identity matrix.
pub fn with_identity_alpha(spec: &LinearSpec) -> LinearSpec {
    LinearSpec {
        alpha: identity_matrix(spec.d),
        ..spec.clone()
    }
}
