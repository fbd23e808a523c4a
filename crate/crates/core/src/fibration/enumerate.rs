//! Fibre configurations that can hold a prescribed set of (−2)-chains.
//!
//! Every required chain must sit inside a single fibre as an induced path of
//! (−2)-components joined by simple intersections, and distinct chains must be
//! disjoint and mutually non-adjacent (they are exceptional over distinct
//! singular points).
//!
//! An optional multisection `E` of degree `d` meets one end of the last
//! required chain transversally and misses the other chains. For every fibre
//! `F = Σ m_i C_i` this leaves `Σ m_i (E·C_i) = d` with `E·C_i ≥ 0` unknown
//! on the free components, which must have a solution.

use std::fmt;

use serde::Serialize;

use super::catalog::{DualGraph, KodairaFiberType};
use crate::error::FibrationError;
use crate::singularity::ExceptionalChain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fiber {
    pub kind: KodairaFiberType,
    pub multiplicity: u32,
}

impl Fiber {
    pub fn new(kind: KodairaFiberType) -> Self {
        Fiber {
            kind,
            multiplicity: 1,
        }
    }

    pub fn with_multiplicity(kind: KodairaFiberType, multiplicity: u32) -> Self {
        Fiber { kind, multiplicity }
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity > 1 {
            write!(f, "{}", self.multiplicity)?;
        }
        self.kind.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Multisection {
    pub degree: u32,
    pub self_square: i64,
}

/// Where a required chain sits: fibre index and the components in chain
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainPlacement {
    pub chain: usize,
    pub fiber: usize,
    pub components: Vec<usize>,
}

/// An intersection number of the multisection with a fibre component that
/// every solution shares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForcedIncidence {
    pub fiber: usize,
    pub component: usize,
    pub intersection: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberConfiguration {
    pub fibers: Vec<Fiber>,
    pub chain_assignment: Vec<ChainPlacement>,
    pub multisection_incidence: Vec<ForcedIncidence>,
}

impl FiberConfiguration {
    /// A configuration given by its fibres alone.
    pub fn from_fibers(fibers: Vec<Fiber>) -> Self {
        FiberConfiguration {
            fibers,
            chain_assignment: Vec::new(),
            multisection_incidence: Vec::new(),
        }
    }

    pub fn total_euler(&self) -> u32 {
        self.fibers.iter().map(|f| f.kind.euler()).sum()
    }

    pub fn rank_used(&self) -> u32 {
        self.fibers.iter().map(|f| f.kind.rank_contribution()).sum()
    }

    /// `2 + Σ (components − 1)`: fibre components, fibre class and a
    /// horizontal class.
    pub fn picard_lower_bound(&self) -> u32 {
        2 + self.rank_used()
    }

    pub fn kinds(&self) -> Vec<KodairaFiberType> {
        self.fibers.iter().map(|f| f.kind).collect()
    }
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.fibers.iter().map(ToString::to_string).collect();
        f.write_str(&names.join(" + "))
    }
}

/// Multisets of singular fibre types, in canonical order, with the given
/// Euler sum and rank at most `budget`.
fn fiber_multisets(target: u32, budget: u32) -> Vec<Vec<KodairaFiberType>> {
    let types = KodairaFiberType::singular_types(target, budget);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        types: &[KodairaFiberType],
        start: usize,
        euler: u32,
        budget: u32,
        cur: &mut Vec<KodairaFiberType>,
        out: &mut Vec<Vec<KodairaFiberType>>,
    ) {
        if euler == 0 {
            out.push(cur.clone());
            return;
        }
        for (k, t) in types.iter().enumerate().skip(start) {
            if t.euler() <= euler && t.rank_contribution() <= budget {
                cur.push(*t);
                rec(
                    types,
                    k,
                    euler - t.euler(),
                    budget - t.rank_contribution(),
                    cur,
                    out,
                );
                cur.pop();
            }
        }
    }
    rec(&types, 0, target, budget, &mut cur, &mut out);
    out
}

/// Induced simple paths of `len` (−2)-components, in both orientations.
pub(crate) fn chain_embeddings(graph: &DualGraph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if !graph.minus_two_components || len == 0 {
        return out;
    }
    let mut path = Vec::with_capacity(len);
    fn extend(graph: &DualGraph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == len {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("nonempty");
        for next in 0..graph.len() {
            if path.contains(&next) || graph.intersection(last, next) != 1 {
                continue;
            }
            let earlier = &path[..path.len() - 1];
            if earlier.iter().any(|&v| graph.intersection(v, next) != 0) {
                continue;
            }
            path.push(next);
            extend(graph, len, path, out);
            path.pop();
        }
    }
    for start in 0..graph.len() {
        path.push(start);
        extend(graph, len, &mut path, &mut out);
        path.pop();
    }
    out
}

/// Nonnegative solutions of `Σ mults[i]·x_i = total`, as vectors.
fn coin_solutions(mults: &[u32], total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0; mults.len()];
    fn rec(mults: &[u32], k: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == mults.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=rest / mults[k] {
            cur[k] = x;
            rec(mults, k + 1, rest - x * mults[k], cur, out);
        }
        cur[k] = 0;
    }
    rec(mults, 0, total, &mut cur, &mut out);
    out
}

struct Placer<'a> {
    graphs: Vec<DualGraph>,
    lengths: &'a [usize],
    multisection: Option<Multisection>,
}

impl Placer<'_> {
    /// First assignment (in search order) satisfying all constraints.
    fn place(
        &self,
        k: usize,
        used: &mut [Vec<bool>],
        acc: &mut Vec<ChainPlacement>,
    ) -> Option<(Vec<ChainPlacement>, Vec<ForcedIncidence>)> {
        if k == self.lengths.len() {
            return self
                .multisection_check(acc)
                .map(|forced| (acc.clone(), forced));
        }
        for (f, graph) in self.graphs.iter().enumerate() {
            for emb in chain_embeddings(graph, self.lengths[k]) {
                let last = k + 1 == self.lengths.len();
                if !last && emb.first() > emb.last() {
                    continue;
                }
                let clash = emb
                    .iter()
                    .any(|&v| used[f][v] || graph.neighbours(v).any(|w| used[f][w]));
                if clash {
                    continue;
                }
                for &v in &emb {
                    used[f][v] = true;
                }
                acc.push(ChainPlacement {
                    chain: k,
                    fiber: f,
                    components: emb.clone(),
                });
                let found = self.place(k + 1, used, acc);
                acc.pop();
                for &v in &emb {
                    used[f][v] = false;
                }
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn multisection_check(&self, placements: &[ChainPlacement]) -> Option<Vec<ForcedIncidence>> {
        let Some(ms) = self.multisection else {
            return Some(Vec::new());
        };
        let attached = placements
            .last()
            .map(|p| (p.fiber, *p.components.last().expect("nonempty")));
        let mut forced = Vec::new();
        for (f, graph) in self.graphs.iter().enumerate() {
            let in_chain: Vec<bool> = (0..graph.len())
                .map(|v| {
                    placements
                        .iter()
                        .any(|p| p.fiber == f && p.components.contains(&v))
                })
                .collect();
            let mut rest = ms.degree as i64;
            if let Some((af, av)) = attached {
                if af == f {
                    rest -= graph.multiplicities[av] as i64;
                }
            }
            if rest < 0 {
                return None;
            }
            let free: Vec<usize> = (0..graph.len()).filter(|&v| !in_chain[v]).collect();
            let mults: Vec<u32> = free.iter().map(|&v| graph.multiplicities[v]).collect();
            let sols = coin_solutions(&mults, rest as u32);
            let first = sols.first()?;
            for (i, &v) in free.iter().enumerate() {
                if sols.iter().all(|s| s[i] == first[i]) {
                    forced.push(ForcedIncidence {
                        fiber: f,
                        component: v,
                        intersection: first[i],
                    });
                }
            }
        }
        Some(forced)
    }
}

/// Every configuration of singular fibres with Euler sum `target_euler` and
/// `Σ (components − 1) ≤ rank_budget` that holds the required chains.
pub fn enumerate_configurations(
    target_euler: u32,
    rank_budget: u32,
    required_chains: &[ExceptionalChain],
    multisection: Option<Multisection>,
) -> Result<Vec<FiberConfiguration>, FibrationError> {
    if target_euler == 0 {
        return Err(FibrationError::NonPositiveEuler);
    }
    for c in required_chains {
        if c.self_intersections().iter().any(|&b| b != -2) {
            return Err(FibrationError::InvalidChain(c.to_string()));
        }
    }
    let lengths: Vec<usize> = required_chains.iter().map(ExceptionalChain::len).collect();
    let mut out = Vec::new();
    for kinds in fiber_multisets(target_euler, rank_budget) {
        let placer = Placer {
            graphs: kinds.iter().map(KodairaFiberType::dual_graph).collect(),
            lengths: &lengths,
            multisection,
        };
        let mut used: Vec<Vec<bool>> = placer.graphs.iter().map(|g| vec![false; g.len()]).collect();
        let mut acc = Vec::new();
        if let Some((chain_assignment, forced)) = placer.place(0, &mut used, &mut acc) {
            out.push(FiberConfiguration {
                fibers: kinds.into_iter().map(Fiber::new).collect(),
                chain_assignment,
                multisection_incidence: forced,
            });
        }
    }
    Ok(out)
}
