//! Hecke modifications of chains at a single point, and the count of points
//! where the upward flow of a very stable chain meets a generic Hitchin fibre.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chain::{ChainHiggsBundle, Divisor, Point, Verdict};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Removes the point `pt` from the zeros of `b_i`: `L_j ↦ L_j(-pt)` for `j >= i`.
pub fn hecke_remove_zero(c: &ChainHiggsBundle, i: usize, pt: &Point) -> Result<ChainHiggsBundle> {
    let n = c.rank();
    if i < 1 || i >= n {
        return Err(Error::domain("i", format!("need 1 <= i <= {}, got {i}", n as i64 - 1)));
    }
    if !c.is_stable() {
        return Err(Error::domain("chain", "hecke removal needs a stable chain"));
    }
    let delta = c.zero_divisor(i).expect("index checked");
    if delta.multiplicity(pt) < 1 {
        return Err(Error::domain("point", format!("{pt} is not a zero of b_{i}")));
    }
    let degrees = c
        .degrees()
        .iter()
        .enumerate()
        .map(|(j, &l)| if j >= i { l - 1 } else { l })
        .collect();
    let mut zeros = c.zeros().to_vec();
    zeros[i - 1].add(pt, -1);
    let out = ChainHiggsBundle::new(c.genus(), degrees, c.delta0().clone(), zeros)?;
    if !out.is_stable() {
        return Err(Error::Internal(format!(
            "removing {pt} from b_{i} produced an unstable chain"
        )));
    }
    Ok(out)
}

/// Hecke transform at the `k`-dimensional invariant subspace over a point
/// where `b` does not vanish: `L_j ↦ L_j(-pt)` for `j < n-k`, and
/// `b_{n-k}` acquires a simple zero at `pt`.
///
/// `δ_0` moves with `L_0`, so it loses one copy of `pt`.
pub fn hecke_add_zero(c: &ChainHiggsBundle, k: usize, pt: &Point) -> Result<ChainHiggsBundle> {
    let n = c.rank();
    if k < 1 || k >= n {
        return Err(Error::domain("k", format!("need 1 <= k <= {}, got {k}", n as i64 - 1)));
    }
    if !c.is_stable() {
        return Err(Error::domain("chain", "hecke addition needs a stable chain"));
    }
    if c.total_zero_divisor().multiplicity(pt) != 0 {
        return Err(Error::domain("point", format!("b already vanishes at {pt}")));
    }
    let cut = n - k;
    let degrees = c
        .degrees()
        .iter()
        .enumerate()
        .map(|(j, &l)| if j < cut { l - 1 } else { l })
        .collect();
    let mut zeros = c.zeros().to_vec();
    zeros[cut - 1].add(pt, 1);
    let mut delta0 = c.delta0().clone();
    delta0.add(pt, -1);
    let out = ChainHiggsBundle::new(c.genus(), degrees, delta0, zeros)?;
    if !out.is_stable() {
        return Err(Error::UnstableResult {
            point: pt.to_string(),
            k,
        });
    }
    Ok(out)
}

/// The chain `E(-pt)`: every degree lowered by one, `δ_0` loses `pt`.
pub fn global_twist(c: &ChainHiggsBundle, pt: &Point) -> Result<ChainHiggsBundle> {
    let mut delta0 = c.delta0().clone();
    delta0.add(pt, -1);
    ChainHiggsBundle::new(
        c.genus(),
        c.degrees().iter().map(|l| l - 1).collect(),
        delta0,
        c.zeros().to_vec(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HeckeOp {
    Remove,
    Add,
}

/// One single-point move. For `Remove` the index is the slot `i` of `b_i`;
/// for `Add` it is the dimension `k` of the invariant subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeMove {
    pub op: HeckeOp,
    #[serde(rename = "i_or_k")]
    pub index: usize,
    pub point: Point,
}

impl HeckeMove {
    pub fn apply(&self, c: &ChainHiggsBundle) -> Result<ChainHiggsBundle> {
        match self.op {
            HeckeOp::Remove => hecke_remove_zero(c, self.index, &self.point),
            HeckeOp::Add => hecke_add_zero(c, self.index, &self.point),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub step: usize,
    #[serde(rename = "move")]
    pub mv: HeckeMove,
    pub degrees: Vec<i64>,
    pub stable: bool,
    pub very_stable: bool,
}

/// Applies moves in order, stopping at the first failure.
pub fn apply_moves(
    c: &ChainHiggsBundle,
    moves: &[HeckeMove],
) -> Result<(ChainHiggsBundle, Vec<StepReport>)> {
    let mut cur = c.clone();
    let mut steps = Vec::with_capacity(moves.len());
    for (step, mv) in moves.iter().enumerate() {
        cur = mv.apply(&cur)?;
        steps.push(StepReport {
            step: step + 1,
            mv: mv.clone(),
            degrees: cur.degrees().to_vec(),
            stable: cur.is_stable(),
            very_stable: cur.is_very_stable(),
        });
    }
    Ok((cur, steps))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * (n - j) / (j + 1))
}

fn require_very_stable(c: &ChainHiggsBundle) -> Result<()> {
    match c.classify() {
        Verdict::VeryStable => Ok(()),
        v => Err(Error::domain(
            "chain",
            format!("not very stable ({})", v.reason().unwrap_or_default()),
        )),
    }
}

/// `∏_i C(n, i)^{m_i}`.
pub fn intersection_count(c: &ChainHiggsBundle) -> Result<BigInt> {
    require_very_stable(c)?;
    let n = c.rank() as u64;
    Ok(c
        .m_vector()
        .iter()
        .enumerate()
        .map(|(idx, &m)| num_traits::pow(binomial(n, idx as u64 + 1), m as usize))
        .product())
}

/// Sheets chosen over one zero of `b_slot`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheetChoice {
    pub slot: usize,
    pub point: Point,
    pub sheets: Vec<usize>,
}

pub type Assignment = Vec<SheetChoice>;

/// Streams every choice of an `(n-i)`-element subset of the sheets
/// `{1..n}` over each zero of each `b_i`.
#[derive(Debug, Clone)]
pub struct IntersectionEnumerator {
    zeros: Vec<(usize, Point)>,
    // subsets[i - 1] lists the (n-i)-subsets used by zeros of b_i
    subsets: Vec<Vec<Vec<usize>>>,
    odometer: Vec<usize>,
    started: bool,
    finished: bool,
}

impl IntersectionEnumerator {
    pub fn new(c: &ChainHiggsBundle, cap: u64) -> Result<Self> {
        let total = intersection_count(c)?;
        if total > BigInt::from(cap) {
            return Err(Error::Resource {
                what: "intersection enumeration",
                size: total.to_string(),
                cap,
            });
        }
        let n = c.rank();
        let subsets = (1..n)
            .map(|i| (1..=n).combinations(n - i).collect::<Vec<_>>())
            .collect();
        let zeros: Vec<(usize, Point)> = c
            .zeros()
            .iter()
            .enumerate()
            .flat_map(|(idx, d): (usize, &Divisor)| {
                d.iter().map(move |(p, _)| (idx + 1, p.clone()))
            })
            .collect();
        Ok(IntersectionEnumerator {
            odometer: vec![0; zeros.len()],
            zeros,
            subsets,
            started: false,
            finished: false,
        })
    }

    /// Advances and returns the current choice as subset indices per zero.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.odometer);
        }
        for pos in (0..self.odometer.len()).rev() {
            let radix = self.subsets[self.zeros[pos].0 - 1].len();
            self.odometer[pos] += 1;
            if self.odometer[pos] < radix {
                return Some(&self.odometer);
            }
            self.odometer[pos] = 0;
        }
        self.finished = true;
        None
    }

    pub fn decode(&self, indices: &[usize]) -> Assignment {
        self.zeros
            .iter()
            .zip(indices)
            .map(|((slot, point), &ix)| SheetChoice {
                slot: *slot,
                point: point.clone(),
                sheets: self.subsets[slot - 1][ix].clone(),
            })
            .collect()
    }
}

impl Iterator for IntersectionEnumerator {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        let idx = self.advance()?.to_vec();
        Some(self.decode(&idx))
    }
}

/// Collects every assignment; refuses when the product exceeds `cap`.
pub fn intersection_enumerate(c: &ChainHiggsBundle, cap: u64) -> Result<Vec<Assignment>> {
    Ok(IntersectionEnumerator::new(c, cap)?.collect())
}
