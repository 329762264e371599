//! Finite carriers `{0, .., n-1}`, total self-maps, Cayley-style square
//! tables, and maps on pairs.
//!
//! Everything here is immutable once built. Bijectivity is recomputed on
//! demand rather than cached.

use crate::error::{Error, Result};

/// A total map `{0..n-1} -> {0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMap {
    table: Vec<usize>,
}

impl FiniteMap {
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if let Some(&value) = table.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, n });
        }
        Ok(FiniteMap { table })
    }

    /// Builds a map whose values may live in a different carrier of size
    /// `codomain`. Used for morphisms between structures of different order.
    pub fn with_codomain(table: Vec<usize>, codomain: usize) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if let Some(&value) = table.iter().find(|&&v| v >= codomain) {
            return Err(Error::OutOfRange { value, n: codomain });
        }
        Ok(FiniteMap { table })
    }

    pub(crate) fn from_vec_unchecked(table: Vec<usize>) -> Self {
        debug_assert!(!table.is_empty());
        FiniteMap { table }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "carrier must be non-empty");
        FiniteMap {
            table: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if value >= n {
            return Err(Error::OutOfRange { value, n });
        }
        Ok(FiniteMap { table: vec![value; n] })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.table
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.table
    }

    /// `self ∘ g`, i.e. `x ↦ self(g(x))`.
    pub fn compose(&self, g: &FiniteMap) -> Result<FiniteMap> {
        check_same_size(self.len(), g.len())?;
        Ok(FiniteMap {
            table: g.table.iter().map(|&y| self.table[y]).collect(),
        })
    }

    /// First pair `x1 < x2` with equal images, scanning `x2` in ascending order.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut seen = vec![usize::MAX; self.len().max(self.table.iter().max().map_or(0, |m| m + 1))];
        for (x, &y) in self.table.iter().enumerate() {
            if seen[y] != usize::MAX {
                return Some((seen[y], x));
            }
            seen[y] = x;
        }
        None
    }

    pub fn is_bijective(&self) -> bool {
        self.collision().is_none()
    }

    pub fn inverse(&self) -> Result<FiniteMap> {
        if let Some((x1, x2)) = self.collision() {
            return Err(Error::NotInvertible {
                x1,
                x2,
                image: self.table[x1],
            });
        }
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        Ok(FiniteMap { table: inv })
    }

    pub fn commutes(&self, g: &FiniteMap) -> Result<bool> {
        check_same_size(self.len(), g.len())?;
        Ok((0..self.len()).all(|x| self.table[g.table[x]] == g.table[self.table[x]]))
    }

    /// The image `{f(x)}` in ascending order.
    pub fn image(&self) -> Vec<usize> {
        let mut hit = vec![false; self.len()];
        for &y in &self.table {
            if y < hit.len() {
                hit[y] = true;
            }
        }
        let mut out: Vec<usize> = (0..self.len()).filter(|&y| hit[y]).collect();
        // values beyond the domain size only occur for maps built with a codomain
        let mut extra: Vec<usize> = self.table.iter().copied().filter(|&y| y >= hit.len()).collect();
        extra.sort_unstable();
        extra.dedup();
        out.extend(extra);
        out
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_idempotent(&self) -> bool {
        self.table.iter().all(|&y| self.table[y] == y)
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&y| y == self.table[0])
    }

    pub fn power(&self, k: usize) -> FiniteMap {
        Powers::new(self).get(k).clone()
    }

    /// Restricts the map to `subset` (ascending, distinct) and relabels the
    /// subset as `0..subset.len()`. Fails if the subset is not invariant.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteMap> {
        let index = relabeling(self.len(), subset)?;
        let table = subset
            .iter()
            .map(|&x| {
                let y = self.table[x];
                index[y].ok_or_else(|| Error::Domain(format!("subset is not invariant: {x} maps to {y} outside it")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteMap { table })
    }
}

/// Iterated powers `f^0, f^1, ...` stored up to the first repetition, so any
/// exponent can be answered from the tail-plus-cycle structure.
#[derive(Debug, Clone)]
pub struct Powers {
    seq: Vec<FiniteMap>,
    tail: usize,
    period: usize,
}

impl Powers {
    pub fn new(f: &FiniteMap) -> Self {
        let mut seq = vec![FiniteMap::identity(f.len())];
        loop {
            let next = f.compose(seq.last().unwrap()).expect("same size");
            if let Some(pos) = seq.iter().position(|p| *p == next) {
                let period = seq.len() - pos;
                return Powers { seq, tail: pos, period };
            }
            seq.push(next);
        }
    }

    pub fn get(&self, k: usize) -> &FiniteMap {
        if k < self.seq.len() {
            &self.seq[k]
        } else {
            &self.seq[self.tail + (k - self.tail) % self.period]
        }
    }
}

/// `n x n` table of carrier elements, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareTable {
    n: usize,
    data: Vec<usize>,
}

impl SquareTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for v in row {
                if v >= n {
                    return Err(Error::OutOfRange { value: v, n });
                }
                data.push(v);
            }
        }
        Ok(SquareTable { n, data })
    }

    pub fn from_flat(n: usize, data: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if data.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        if let Some(&value) = data.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, n });
        }
        Ok(SquareTable { n, data })
    }

    pub(crate) fn from_flat_unchecked(n: usize, data: Vec<usize>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        SquareTable { n, data }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                data.push(f(x, y));
            }
        }
        Self::from_flat(n, data)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.data[x * self.n..(x + 1) * self.n]
    }

    pub fn row_map(&self, x: usize) -> FiniteMap {
        FiniteMap::from_vec_unchecked(self.row(x).to_vec())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.data.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn as_flat(&self) -> &[usize] {
        &self.data
    }

    /// First row that is not a permutation, with the colliding columns.
    pub fn first_degenerate_row(&self) -> Option<(usize, usize, usize)> {
        (0..self.n).find_map(|x| {
            FiniteMap::from_vec_unchecked(self.row(x).to_vec())
                .collision()
                .map(|(y1, y2)| (x, y1, y2))
        })
    }

    pub fn rows_bijective(&self) -> bool {
        self.first_degenerate_row().is_none()
    }

    /// Table whose row `x` is the inverse of row `x`. Fails on the first
    /// non-bijective row.
    pub fn row_inverses(&self) -> Result<SquareTable> {
        let n = self.n;
        let mut data = vec![0; n * n];
        for x in 0..n {
            let mut seen = vec![usize::MAX; n];
            for y in 0..n {
                let v = self.get(x, y);
                if seen[v] != usize::MAX {
                    return Err(Error::DegenerateRow {
                        row: x,
                        y1: seen[v],
                        y2: y,
                        image: v,
                    });
                }
                seen[v] = y;
                data[x * n + v] = y;
            }
        }
        Ok(SquareTable { n, data })
    }

    pub fn transpose(&self) -> SquareTable {
        let n = self.n;
        let mut data = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                data[y * n + x] = self.get(x, y);
            }
        }
        SquareTable { n, data }
    }

    /// Restriction to an invariant subset, relabeled to `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Result<SquareTable> {
        let index = relabeling(self.n, subset)?;
        let k = subset.len();
        let mut data = Vec::with_capacity(k * k);
        for &a in subset {
            for &b in subset {
                let v = self.get(a, b);
                data.push(
                    index[v]
                        .ok_or_else(|| Error::Domain(format!("subset is not closed: {a}*{b} = {v} lies outside it")))?,
                );
            }
        }
        Ok(SquareTable { n: k, data })
    }
}

/// A total map on pairs, `(x, y) ↦ out[x * n + y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairMap {
    n: usize,
    out: Vec<(usize, usize)>,
}

impl PairMap {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut out = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = f(x, y);
                if a >= n || b >= n {
                    return Err(Error::OutOfRange { value: a.max(b), n });
                }
                out.push((a, b));
            }
        }
        Ok(PairMap { n, out })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |x, y| (x, y))
    }

    /// The flip `τ(x, y) = (y, x)`.
    pub fn swap(n: usize) -> Result<Self> {
        Self::from_fn(n, |x, y| (y, x))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.out[x * self.n + y]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PairMap) -> Result<PairMap> {
        check_same_size(self.n, other.n)?;
        Ok(PairMap {
            n: self.n,
            out: other.out.iter().map(|&(a, b)| self.apply(a, b)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.out.iter().enumerate().all(|(i, &p)| p == (i / n, i % n))
    }

    /// First pair, in lexicographic order, where the two maps differ.
    pub fn first_difference(&self, other: &PairMap) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        let n = self.n;
        self.out
            .iter()
            .zip(&other.out)
            .position(|(a, b)| a != b)
            .map(|i| (i / n, i % n))
    }

    /// The collision at the least image value in lexicographic order, as its
    /// two least preimages `(earlier, later)`.
    pub fn collision(&self) -> Option<((usize, usize), (usize, usize))> {
        let n = self.n;
        let mut first = vec![usize::MAX; n * n];
        let mut second = vec![usize::MAX; n * n];
        for (i, &(a, b)) in self.out.iter().enumerate() {
            let slot = a * n + b;
            if first[slot] == usize::MAX {
                first[slot] = i;
            } else if second[slot] == usize::MAX {
                second[slot] = i;
            }
        }
        let slot = second.iter().position(|&j| j != usize::MAX)?;
        let (i, j) = (first[slot], second[slot]);
        Some(((i / n, i % n), (j / n, j % n)))
    }
}

pub(crate) fn check_same_size(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::SizeMismatch { expected, found })
    }
}

/// Maps each element of `subset` to its position; `None` for non-members.
pub(crate) fn relabeling(n: usize, subset: &[usize]) -> Result<Vec<Option<usize>>> {
    if subset.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut index = vec![None; n];
    for (i, &x) in subset.iter().enumerate() {
        if x >= n {
            return Err(Error::OutOfRange { value: x, n });
        }
        if index[x].is_some() {
            return Err(Error::Domain(format!("subset lists {x} twice")));
        }
        index[x] = Some(i);
    }
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    fn all_maps(n: usize) -> Vec<FiniteMap> {
        (0..n)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(FiniteMap::new)
            .collect::<Result<_>>()
            .unwrap()
    }

    #[test]
    fn compose_examples() {
        let id3 = FiniteMap::identity(3);
        assert_eq!(id3.compose(&id3).unwrap(), id3);
        assert_eq!(map(&[1, 0]).compose(&map(&[1, 0])).unwrap(), map(&[0, 1]));
        let zero = map(&[0, 0, 0, 0]);
        for g in all_maps(4) {
            assert_eq!(zero.compose(&g).unwrap(), zero);
        }
    }

    #[test]
    fn compose_size_mismatch() {
        assert_eq!(
            map(&[0]).compose(&map(&[0, 1])),
            Err(Error::SizeMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(map(&[1, 2, 0]).inverse().unwrap(), map(&[2, 0, 1]));
        assert_eq!(FiniteMap::identity(5).inverse().unwrap(), FiniteMap::identity(5));
        assert_eq!(
            map(&[0, 0]).inverse(),
            Err(Error::NotInvertible { x1: 0, x2: 1, image: 0 })
        );
    }

    #[test]
    fn commute_examples() {
        assert!(map(&[1, 0]).commutes(&map(&[1, 0])).unwrap());
        // f(g(0)) = f(0) = 1 but g(f(0)) = g(1) = 2
        assert!(!map(&[1, 0, 2]).commutes(&map(&[0, 2, 1])).unwrap());
        for g in all_maps(3) {
            assert!(FiniteMap::identity(3).commutes(&g).unwrap());
        }
    }

    #[test]
    fn image_examples() {
        assert_eq!(map(&[0, 0, 0, 0]).image(), vec![0]);
        assert_eq!(FiniteMap::identity(3).image(), vec![0, 1, 2]);
        assert_eq!(map(&[1, 1, 2]).image(), vec![1, 2]);
    }

    #[test]
    fn map_laws_exhaustive() {
        for n in 1..=3 {
            let maps = all_maps(n);
            for f in &maps {
                if f.is_bijective() {
                    let inv = f.inverse().unwrap();
                    assert_eq!(inv.inverse().unwrap(), *f);
                    assert!(f.compose(&inv).unwrap().is_identity());
                    assert!(inv.compose(f).unwrap().is_identity());
                }
                for g in &maps {
                    let fg = f.compose(g).unwrap();
                    let img = f.image();
                    assert!(fg.image().iter().all(|y| img.contains(y)));
                    for h in &maps {
                        assert_eq!(fg.compose(h).unwrap(), f.compose(&g.compose(h).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn powers_follow_tail_and_cycle() {
        // 0 -> 1 -> 2 -> 3 -> 2: tail 2, period 2
        let f = map(&[1, 2, 3, 2]);
        let mut naive = FiniteMap::identity(4);
        let powers = Powers::new(&f);
        for k in 0..20 {
            assert_eq!(*powers.get(k), naive, "k = {k}");
            naive = f.compose(&naive).unwrap();
        }
    }

    #[test]
    fn singleton_carrier() {
        let f = map(&[0]);
        assert!(f.is_identity());
        assert!(f.is_bijective());
        assert_eq!(f.image(), vec![0]);
    }

    #[test]
    fn table_validation() {
        assert!(SquareTable::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(SquareTable::new(vec![vec![0, 2], vec![1, 0]]).is_err());
        let t = SquareTable::new(vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(t.first_degenerate_row(), Some((1, 0, 1)));
        assert!(matches!(t.row_inverses(), Err(Error::DegenerateRow { row: 1, .. })));
    }

    #[test]
    fn pair_map_swap_is_involution() {
        let t = PairMap::swap(3).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        assert!(t.collision().is_none());
    }

    #[test]
    fn pair_map_collision_uses_least_image() {
        // (0,1) and (1,0) both go to (1,1); (0,0) and (1,1) both go to (0,0)
        let p = PairMap::from_fn(2, |x, y| if x == y { (0, 0) } else { (1, 1) }).unwrap();
        assert_eq!(p.collision(), Some(((0, 0), (1, 1))));
    }
}
