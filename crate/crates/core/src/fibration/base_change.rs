//! Transport of fibres along a cyclic triple cover of an elliptic surface
//! that is branched only at cusps (points of type `1/3(1,2)`).
//!
//! If the general fibre stays connected, the base is unchanged and each fibre
//! is replaced by its preimage:
//!
//! * unramified, connected: an `I_n` fibre becomes `I_{3n}`; other types have
//!   no connected unramified triple cover;
//! * ramified at `k` cusps, each obtained by contracting an `A_2` chain of the
//!   fibre: the image fibre has Euler number `e − 3k + k`, so the preimage has
//!   `3(e − 3k) + k = 3e − 8k`. Only the case where a single component
//!   survives the contraction is handled; the preimage is then `I_{3e−8k}`.
//!
//! If the general fibre splits, the base map has degree 3 and Riemann–Hurwitz
//! on P¹ forces exactly two branch points. Fibres that do not split lie over
//! branch points.

use std::fmt;

use serde::Serialize;

use super::catalog::KodairaFiberType;
use super::enumerate::{Fiber, FiberConfiguration};
use super::hurwitz_branch_count;
use crate::error::FibrationError;

/// Behaviour of one fibre under the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberCover {
    /// Three disjoint copies.
    Split,
    /// A connected unramified triple cover.
    Unsplit,
    /// Ramified at `cusps` branch points lying on the fibre.
    Ramified { cusps: u32 },
}

impl fmt::Display for FiberCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberCover::Split => f.write_str("split"),
            FiberCover::Unsplit => f.write_str("unsplit"),
            FiberCover::Ramified { cusps } => write!(f, "ramified:{cusps}"),
        }
    }
}

impl std::str::FromStr for FiberCover {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || crate::error::ParseError::new("fibre cover", s);
        match s.trim() {
            "split" => Ok(FiberCover::Split),
            "unsplit" => Ok(FiberCover::Unsplit),
            other => {
                let k = other.strip_prefix("ramified:").ok_or_else(err)?;
                Ok(FiberCover::Ramified {
                    cusps: k.trim().parse().map_err(|_| err())?,
                })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneralFiber {
    Connected,
    /// The base map has degree 3; `extra_branch_points` counts branch points
    /// under fibres not listed in the configuration (smooth or multiple
    /// fibres).
    Split {
        extra_branch_points: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberImage {
    pub source: Fiber,
    pub cover: FiberCover,
    pub images: Vec<Fiber>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseChangeResult {
    pub fiber_images: Vec<FiberImage>,
    pub branch_points_used: u32,
    pub total_euler: u32,
    /// `2 + Σ (components − 1)` over the output fibres.
    pub picard_lower_bound: u32,
}

impl BaseChangeResult {
    pub fn output_fibers(&self) -> Vec<Fiber> {
        self.fiber_images
            .iter()
            .flat_map(|i| i.images.iter().copied())
            .filter(|f| f.kind != KodairaFiberType::I(0) || f.multiplicity > 1)
            .collect()
    }
}

fn transport(index: usize, fiber: Fiber, cover: FiberCover) -> Result<Vec<Fiber>, FibrationError> {
    let same = |kind| Fiber::with_multiplicity(kind, fiber.multiplicity);
    match cover {
        FiberCover::Split => Ok(vec![fiber; 3]),
        FiberCover::Unsplit => match fiber.kind {
            KodairaFiberType::I(n) => Ok(vec![same(KodairaFiberType::I(3 * n))]),
            _ => Err(FibrationError::NoTripleCover {
                index,
                fiber: fiber.kind.to_string(),
            }),
        },
        FiberCover::Ramified { cusps } => {
            let unsupported = || FibrationError::UnsupportedTransport {
                index,
                fiber: fiber.kind.to_string(),
                cusps: cusps as usize,
            };
            let graph = fiber.kind.dual_graph();
            if cusps == 0 || !graph.minus_two_components {
                return Err(unsupported());
            }
            let remaining = fiber.kind.component_count() as i64 - 2 * cusps as i64;
            let euler = 3 * fiber.kind.euler() as i64 - 8 * cusps as i64;
            if remaining != 1 || euler < 0 {
                return Err(unsupported());
            }
            Ok(vec![same(KodairaFiberType::I(euler as u32))])
        }
    }
}

pub fn base_change_degree3(
    config: &FiberConfiguration,
    plan: &[FiberCover],
    general: GeneralFiber,
) -> Result<BaseChangeResult, FibrationError> {
    if plan.len() != config.fibers.len() {
        return Err(FibrationError::PlanLength {
            expected: config.fibers.len(),
            found: plan.len(),
        });
    }
    let branch_points_used = match general {
        GeneralFiber::Connected => {
            if let Some(i) = plan.iter().position(|c| *c == FiberCover::Split) {
                return Err(FibrationError::InconsistentSplit(i));
            }
            0
        }
        GeneralFiber::Split {
            extra_branch_points,
        } => {
            let expected = hurwitz_branch_count(3, 0, 0)?;
            let found = plan.iter().filter(|c| **c != FiberCover::Split).count() as u32
                + extra_branch_points;
            if found != expected {
                return Err(FibrationError::BranchCountMismatch {
                    expected: expected as i64,
                    found: found as i64,
                });
            }
            found
        }
    };

    let mut fiber_images = Vec::with_capacity(plan.len());
    for (index, (&fiber, &cover)) in config.fibers.iter().zip(plan).enumerate() {
        fiber_images.push(FiberImage {
            source: fiber,
            cover,
            images: transport(index, fiber, cover)?,
        });
    }
    let all: Vec<&Fiber> = fiber_images.iter().flat_map(|i| &i.images).collect();
    let total_euler = all.iter().map(|f| f.kind.euler()).sum();
    let picard_lower_bound = 2 + all.iter().map(|f| f.kind.rank_contribution()).sum::<u32>();
    Ok(BaseChangeResult {
        fiber_images,
        branch_points_used,
        total_euler,
        picard_lower_bound,
    })
}
