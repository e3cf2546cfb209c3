//! Reduced root systems of simple Lie algebras, built from Cartan matrices.
//!
//! Simple roots are numbered as in Bourbaki's tables (1-based in the public
//! API). The Cartan matrix is stored as `a[i][j] = ⟨α_i, α_j^∨⟩`, so row `i`
//! is the simple root `α_i` written in fundamental-weight coordinates and the
//! dual root system has the transposed matrix.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::domain("type", format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::domain("rank", format!("{family}_{rank} is not a simple type")));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan(&self) -> CartanMatrix {
        let l = self.rank;
        // squared lengths of the simple roots, and the Dynkin edges (0-based)
        let chain: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
        let (norms, edges): (Vec<i64>, Vec<(usize, usize)>) = match self.family {
            Family::A => (vec![2; l], chain),
            Family::B => {
                let mut n = vec![4; l];
                n[l - 1] = 2;
                (n, chain)
            }
            Family::C => {
                let mut n = vec![2; l];
                n[l - 1] = 4;
                (n, chain)
            }
            Family::D => {
                let mut e: Vec<_> = (1..l - 1).map(|i| (i - 1, i)).collect();
                e.push((l - 3, l - 1));
                (vec![2; l], e)
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..l).map(|i| (i - 1, i)));
                (vec![2; l], e)
            }
            Family::F => (vec![4, 4, 2, 2], chain),
            Family::G => (vec![2, 6], chain),
        };
        CartanMatrix::from_diagram(&norms, &edges)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// `a[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let l = rows.len();
        if rows.iter().any(|r| r.len() != l) {
            return Err(Error::domain("cartan", "matrix is not square"));
        }
        for (i, r) in rows.iter().enumerate() {
            if r[i] != 2 {
                return Err(Error::domain("cartan", format!("diagonal entry {i} is not 2")));
            }
            for (j, &v) in r.iter().enumerate() {
                if i != j && (v > 0 || (v == 0) != (rows[j][i] == 0)) {
                    return Err(Error::domain("cartan", format!("bad off-diagonal entry ({i},{j})")));
                }
            }
        }
        Ok(CartanMatrix(rows))
    }

    fn from_diagram(norms: &[i64], edges: &[(usize, usize)]) -> Self {
        let l = norms.len();
        let mut gram = vec![vec![0i64; l]; l];
        for i in 0..l {
            gram[i][i] = norms[i];
        }
        for &(i, j) in edges {
            let v = -norms[i].max(norms[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let rows = (0..l)
            .map(|i| (0..l).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        CartanMatrix(rows)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> CartanMatrix {
        let l = self.rank();
        CartanMatrix((0..l).map(|i| (0..l).map(|j| self.0[j][i]).collect()).collect())
    }

    /// Principal submatrix on the given (0-based) nodes.
    pub fn restrict(&self, nodes: &[usize]) -> CartanMatrix {
        CartanMatrix(
            nodes
                .iter()
                .map(|&i| nodes.iter().map(|&j| self.0[i][j]).collect())
                .collect(),
        )
    }

    /// Connected components of the Dynkin diagram on `nodes`, each sorted.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            left.remove(&start);
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let nbrs: Vec<usize> = left.iter().copied().filter(|&y| self.0[x][y] != 0).collect();
                for y in nbrs {
                    left.remove(&y);
                    comp.push(y);
                    queue.push_back(y);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `⟨α, α_j^∨⟩` for `α` given in simple-root coordinates.
    fn pairing(&self, coeffs: &[i64], j: usize) -> i64 {
        coeffs.iter().zip(&self.0).map(|(c, row)| c * row[j]).sum()
    }

    /// Positive roots by height induction with the root-string criterion:
    /// `α + α_j` is a root iff `p - ⟨α, α_j^∨⟩ > 0`, where `p` is the largest
    /// `k` with `α - kα_j` a root.
    pub fn positive_roots(&self) -> Vec<Root> {
        let l = self.rank();
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut layer: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut e = vec![0; l];
                e[i] = 1;
                e
            })
            .collect();
        while !layer.is_empty() {
            for r in &layer {
                known.insert(r.clone());
            }
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for alpha in &layer {
                for j in 0..l {
                    let mut p = 0;
                    let mut probe = alpha.clone();
                    loop {
                        probe[j] -= 1;
                        if !known.contains(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    if p - self.pairing(alpha, j) > 0 {
                        let mut up = alpha.clone();
                        up[j] += 1;
                        next.insert(up);
                    }
                }
            }
            all.append(&mut layer);
            layer = next.into_iter().collect();
        }
        let mut roots: Vec<Root> = all.into_iter().map(Root::new).collect();
        roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| a.coeffs.cmp(&b.coeffs)));
        roots
    }
}

/// A positive root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    coeffs: Vec<i64>,
    height: i64,
}

impl Root {
    fn new(coeffs: Vec<i64>) -> Self {
        let height = coeffs.iter().sum();
        Root { coeffs, height }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of the 1-based simple root `α_i`.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn height(&self) -> i64 {
        self.height
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
}

/// Degrees of basic invariant polynomials, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSet(Vec<u32>);

impl DegreeSet {
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable();
        DegreeSet(degrees)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }
}

pub fn build(t: LieType) -> RootSystem {
    let cartan = t.cartan();
    let positive_roots = cartan.positive_roots();
    RootSystem {
        lie_type: t,
        cartan,
        positive_roots,
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(build(LieType::new(family, rank)?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.rank() {
            return Err(Error::domain(
                "node",
                format!("node {i} out of range 1..={} for {}", self.rank(), self.lie_type),
            ));
        }
        Ok(())
    }
}

fn histogram_of(roots: &[Root]) -> BTreeMap<u32, u32> {
    let mut h = BTreeMap::new();
    for r in roots {
        *h.entry(r.height as u32).or_insert(0) += 1;
    }
    h
}

/// `N_j = #{α > 0 : ht(α) = j}`.
pub fn height_histogram(r: &RootSystem) -> BTreeMap<u32, u32> {
    histogram_of(&r.positive_roots)
}

/// Reads degrees off the height histogram: `(N_1 >= N_2 >= …)` is the
/// partition conjugate to `(d_i - 1)`.
fn degrees_from_roots(roots: &[Root], rank: usize) -> Result<DegreeSet> {
    let hist = histogram_of(roots);
    let counts: Vec<u32> = (1..=hist.keys().next_back().copied().unwrap_or(0))
        .map(|j| hist.get(&j).copied().unwrap_or(0))
        .collect();
    if counts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!("height histogram {counts:?} is not a partition")));
    }
    if counts.first().copied().unwrap_or(0) as usize != rank {
        return Err(Error::Internal(format!(
            "{} roots of height one for rank {rank}",
            counts.first().copied().unwrap_or(0)
        )));
    }
    let degrees = (1..=rank as u32)
        .map(|i| counts.iter().filter(|&&c| c >= i).count() as u32 + 1)
        .collect();
    Ok(DegreeSet::new(degrees))
}

pub fn degrees(r: &RootSystem) -> Result<DegreeSet> {
    degrees_from_roots(&r.positive_roots, r.rank())
}

/// 1-based nodes `i` with `c_i(α) <= 1` for every positive root.
pub fn cominuscule_nodes(r: &RootSystem) -> BTreeSet<usize> {
    (1..=r.rank())
        .filter(|&i| r.positive_roots.iter().all(|a| a.coeff(i) <= 1))
        .collect()
}

/// Degrees of the Levi subgroup obtained by deleting node `i`: the degrees of
/// each remaining Dynkin component, padded with `1`s up to the full rank.
pub fn levi_degrees(r: &RootSystem, i: usize) -> Result<DegreeSet> {
    r.check_node(i)?;
    let rest: Vec<usize> = (0..r.rank()).filter(|&x| x != i - 1).collect();
    let mut out = Vec::with_capacity(r.rank());
    for comp in r.cartan.components(&rest) {
        let sub = r.cartan.restrict(&comp);
        out.extend_from_slice(degrees_from_roots(&sub.positive_roots(), comp.len())?.as_slice());
    }
    out.resize(r.rank(), 1);
    Ok(DegreeSet::new(out))
}

/// A weight of a minuscule orbit, in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitWeight {
    pub weight: Vec<i64>,
    pub depth: i64,
}

/// Solves `Aᵀ c = v` exactly.
fn solve_transposed(a: &CartanMatrix, v: &[i64]) -> Result<Vec<Rational64>> {
    let l = a.rank();
    let mut m: Vec<Vec<Rational64>> = (0..l)
        .map(|row| {
            let mut r: Vec<Rational64> = (0..l).map(|col| Rational64::from(a.entry(col, row))).collect();
            r.push(Rational64::from(v[row]));
            r
        })
        .collect();
    for col in 0..l {
        let pivot = (col..l)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..l {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[l]).collect())
}

/// Weyl orbit of the fundamental weight dual to a cominuscule node, in the
/// dual root system, with each weight's depth below the highest weight.
pub fn weyl_orbit_minuscule(r: &RootSystem, i: usize) -> Result<Vec<OrbitWeight>> {
    r.check_node(i)?;
    if !cominuscule_nodes(r).contains(&i) {
        return Err(Error::domain(
            "node",
            format!("node {i} of {} is not cominuscule", r.lie_type),
        ));
    }
    let dual = r.cartan.transpose();
    let l = dual.rank();
    let mut highest = vec![0i64; l];
    highest[i - 1] = 1;
    let mut seen: HashSet<Vec<i64>> = HashSet::from([highest.clone()]);
    let mut orbit = vec![highest.clone()];
    let mut queue = VecDeque::from([highest.clone()]);
    while let Some(mu) = queue.pop_front() {
        for j in 0..l {
            if mu[j] == 0 {
                continue;
            }
            let next: Vec<i64> = mu.iter().zip(&dual.rows()[j]).map(|(m, a)| m - mu[j] * a).collect();
            if seen.insert(next.clone()) {
                orbit.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out = Vec::with_capacity(orbit.len());
    for mu in orbit {
        let diff: Vec<i64> = highest.iter().zip(&mu).map(|(a, b)| a - b).collect();
        let c = solve_transposed(&dual, &diff)?;
        if c.iter().any(|x| !x.is_integer() || x.is_negative()) {
            return Err(Error::Internal(format!(
                "weight {mu:?} is not below the highest weight by a nonnegative integer combination"
            )));
        }
        let depth = c.iter().fold(Rational64::zero(), |acc, x| acc + x);
        debug_assert!(depth.denom().is_one());
        out.push(OrbitWeight {
            weight: mu,
            depth: depth.to_integer(),
        });
    }
    out.sort_by(|a, b| a.depth.cmp(&b.depth).then_with(|| b.weight.cmp(&a.weight)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, l: usize) -> RootSystem {
        RootSystem::new(f, l).unwrap()
    }

    fn coeffs(r: &RootSystem) -> Vec<Vec<i64>> {
        r.positive_roots().iter().map(|a| a.coeffs().to_vec()).collect()
    }

    #[test]
    fn invalid_types() {
        assert!(LieType::new(Family::A, 0).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 3).is_err());
        assert!("Q".parse::<Family>().is_err());
    }

    #[test]
    fn small_root_lists() {
        assert_eq!(coeffs(&rs(Family::A, 2)), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let c2 = rs(Family::C, 2);
        assert_eq!(coeffs(&c2), vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
        let heights: Vec<i64> = c2.positive_roots().iter().map(Root::height).collect();
        assert_eq!(heights, vec![1, 1, 2, 3]);
        let g2 = rs(Family::G, 2);
        let heights: Vec<i64> = g2.positive_roots().iter().map(Root::height).collect();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(g2.positive_roots().last().unwrap().coeffs(), &[3, 2]);
    }

    #[test]
    fn cartan_conventions() {
        assert_eq!(rs(Family::C, 2).cartan().rows(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs(Family::B, 2).cartan().rows(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs(Family::G, 2).cartan().rows(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs(Family::B, 3).cartan().transpose(), rs(Family::C, 3).cartan().clone());
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn histograms_and_degrees() {
        let h = |f, l| height_histogram(&rs(f, l)).into_iter().collect::<Vec<_>>();
        assert_eq!(h(Family::A, 2), vec![(1, 2), (2, 1)]);
        assert_eq!(h(Family::C, 2), vec![(1, 2), (2, 1), (3, 1)]);
        assert_eq!(h(Family::G, 2), vec![(1, 2), (2, 1), (3, 1), (4, 1), (5, 1)]);
        let d = |f, l| degrees(&rs(f, l)).unwrap().as_slice().to_vec();
        assert_eq!(d(Family::A, 2), vec![2, 3]);
        assert_eq!(d(Family::G, 2), vec![2, 6]);
        assert_eq!(d(Family::C, 2), vec![2, 4]);
    }

    #[test]
    fn cominuscule_examples() {
        let set = |f, l| cominuscule_nodes(&rs(f, l)).into_iter().collect::<Vec<_>>();
        assert_eq!(set(Family::A, 3), vec![1, 2, 3]);
        assert_eq!(set(Family::G, 2), Vec::<usize>::new());
        assert_eq!(set(Family::C, 2), vec![2]);
        assert_eq!(set(Family::B, 3), vec![1]);
        assert_eq!(set(Family::D, 5), vec![1, 4, 5]);
        assert_eq!(set(Family::E, 6), vec![1, 6]);
        assert_eq!(set(Family::E, 7), vec![7]);
    }

    #[test]
    fn levi_examples() {
        let lv = |f, l, i| levi_degrees(&rs(f, l), i).unwrap().as_slice().to_vec();
        assert_eq!(lv(Family::C, 2, 2), vec![1, 2]);
        assert_eq!(lv(Family::A, 3, 2), vec![1, 2, 2]);
        assert_eq!(lv(Family::A, 2, 1), vec![1, 2]);
        assert_eq!(lv(Family::A, 1, 1), vec![1]);
        assert_eq!(lv(Family::E, 7, 7), vec![1, 2, 5, 6, 8, 9, 12]);
        assert!(levi_degrees(&rs(Family::A, 2), 3).is_err());
    }

    #[test]
    fn orbit_examples() {
        let depths = |f, l, i| {
            weyl_orbit_minuscule(&rs(f, l), i)
                .unwrap()
                .into_iter()
                .map(|w| w.depth)
                .collect::<Vec<_>>()
        };
        assert_eq!(depths(Family::C, 2, 2), vec![0, 1, 2, 3]);
        assert_eq!(depths(Family::A, 2, 1), vec![0, 1, 2]);
        assert_eq!(depths(Family::A, 1, 1), vec![0, 1]);
        assert_eq!(depths(Family::E, 7, 7).len(), 56);
        assert!(matches!(
            weyl_orbit_minuscule(&rs(Family::G, 2), 1),
            Err(Error::Domain { .. })
        ));
        assert!(weyl_orbit_minuscule(&rs(Family::C, 2), 1).is_err());
    }
}
