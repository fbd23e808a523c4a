//! Kodaira's singular fibres of relatively minimal elliptic fibrations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaFiberType {
    /// `I_0` is the smooth fibre, `I_1` the nodal curve, `I_n` a cycle.
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

/// Dual graph of a fibre: components with multiplicities and their
/// intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub multiplicities: Vec<u32>,
    /// `(i, j, C_i·C_j)` with `i < j`.
    pub edges: Vec<(usize, usize, u32)>,
    /// Whether the components are smooth rational (−2)-curves.
    pub minus_two_components: bool,
}

impl DualGraph {
    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn intersection(&self, i: usize, j: usize) -> u32 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map_or(0, |&(_, _, m)| m)
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b, _)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    fn path(mults: &[u32]) -> Self {
        let edges = (1..mults.len()).map(|i| (i - 1, i, 1)).collect();
        DualGraph {
            multiplicities: mults.to_vec(),
            edges,
            minus_two_components: true,
        }
    }

    /// Appends a path of components with the given multiplicities, attached
    /// to `at`.
    fn attach_arm(&mut self, at: usize, mults: &[u32]) {
        let mut prev = at;
        for &m in mults {
            let idx = self.multiplicities.len();
            self.multiplicities.push(m);
            self.edges.push((prev.min(idx), prev.max(idx), 1));
            prev = idx;
        }
    }
}

impl KodairaFiberType {
    pub fn euler(&self) -> u32 {
        match *self {
            KodairaFiberType::I(n) => n,
            KodairaFiberType::IStar(n) => n + 6,
            KodairaFiberType::II => 2,
            KodairaFiberType::III => 3,
            KodairaFiberType::IV => 4,
            KodairaFiberType::IVStar => 8,
            KodairaFiberType::IIIStar => 9,
            KodairaFiberType::IIStar => 10,
        }
    }

    pub fn component_count(&self) -> u32 {
        match *self {
            KodairaFiberType::I(0) => 1,
            KodairaFiberType::I(n) => n,
            KodairaFiberType::IStar(n) => n + 5,
            KodairaFiberType::II => 1,
            KodairaFiberType::III => 2,
            KodairaFiberType::IV => 3,
            KodairaFiberType::IVStar => 7,
            KodairaFiberType::IIIStar => 8,
            KodairaFiberType::IIStar => 9,
        }
    }

    /// Contribution `components − 1` to the Picard rank.
    pub fn rank_contribution(&self) -> u32 {
        self.component_count() - 1
    }

    /// Only fibres of type `I_n` occur as multiple fibres.
    pub fn allows_multiple(&self) -> bool {
        matches!(self, KodairaFiberType::I(_))
    }

    pub fn dual_graph(&self) -> DualGraph {
        match *self {
            KodairaFiberType::I(n) if n <= 1 => DualGraph {
                multiplicities: vec![1],
                edges: vec![],
                minus_two_components: false,
            },
            KodairaFiberType::II => DualGraph {
                multiplicities: vec![1],
                edges: vec![],
                minus_two_components: false,
            },
            KodairaFiberType::I(2) => DualGraph {
                multiplicities: vec![1, 1],
                edges: vec![(0, 1, 2)],
                minus_two_components: true,
            },
            KodairaFiberType::III => DualGraph {
                multiplicities: vec![1, 1],
                edges: vec![(0, 1, 2)],
                minus_two_components: true,
            },
            KodairaFiberType::I(n) => {
                let mut g = DualGraph::path(&vec![1; n as usize]);
                g.edges.push((0, n as usize - 1, 1));
                g
            }
            KodairaFiberType::IV => DualGraph {
                multiplicities: vec![1, 1, 1],
                edges: vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)],
                minus_two_components: true,
            },
            KodairaFiberType::IStar(n) => {
                let mut g = DualGraph::path(&vec![2; n as usize + 1]);
                g.attach_arm(0, &[1]);
                g.attach_arm(0, &[1]);
                g.attach_arm(n as usize, &[1]);
                g.attach_arm(n as usize, &[1]);
                g
            }
            KodairaFiberType::IVStar => {
                let mut g = DualGraph::path(&[3]);
                for _ in 0..3 {
                    g.attach_arm(0, &[2, 1]);
                }
                g
            }
            KodairaFiberType::IIIStar => {
                let mut g = DualGraph::path(&[1, 2, 3, 4, 3, 2, 1]);
                g.attach_arm(3, &[2]);
                g
            }
            KodairaFiberType::IIStar => {
                let mut g = DualGraph::path(&[6]);
                g.attach_arm(0, &[3]);
                g.attach_arm(0, &[4, 2]);
                g.attach_arm(0, &[5, 4, 3, 2, 1]);
                g
            }
        }
    }

    /// All types with Euler number at most `max_euler` and rank contribution
    /// at most `max_rank`, excluding the smooth fibre.
    pub fn singular_types(max_euler: u32, max_rank: u32) -> Vec<KodairaFiberType> {
        let mut out: Vec<KodairaFiberType> = (1..=max_euler).map(KodairaFiberType::I).collect();
        out.extend((0..=max_euler.saturating_sub(6)).map(KodairaFiberType::IStar));
        out.extend([
            KodairaFiberType::II,
            KodairaFiberType::III,
            KodairaFiberType::IV,
            KodairaFiberType::IVStar,
            KodairaFiberType::IIIStar,
            KodairaFiberType::IIStar,
        ]);
        out.retain(|t| t.euler() <= max_euler && t.rank_contribution() <= max_rank);
        out.sort();
        out
    }

    fn family_rank(&self) -> u8 {
        match self {
            KodairaFiberType::IIStar => 0,
            KodairaFiberType::IIIStar => 1,
            KodairaFiberType::IVStar => 2,
            KodairaFiberType::IStar(_) => 3,
            KodairaFiberType::IV => 4,
            KodairaFiberType::III => 5,
            KodairaFiberType::II => 6,
            KodairaFiberType::I(_) => 7,
        }
    }
}

/// Canonical order: decreasing Euler number, then starred before unstarred
/// types.
impl Ord for KodairaFiberType {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .euler()
            .cmp(&self.euler())
            .then(self.family_rank().cmp(&other.family_rank()))
    }
}

impl PartialOrd for KodairaFiberType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KodairaFiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaFiberType::I(n) => write!(f, "I{n}"),
            KodairaFiberType::IStar(n) => write!(f, "I{n}*"),
            KodairaFiberType::II => f.write_str("II"),
            KodairaFiberType::III => f.write_str("III"),
            KodairaFiberType::IV => f.write_str("IV"),
            KodairaFiberType::IVStar => f.write_str("IV*"),
            KodairaFiberType::IIIStar => f.write_str("III*"),
            KodairaFiberType::IIStar => f.write_str("II*"),
        }
    }
}

impl FromStr for KodairaFiberType {
    type Err = ParseError;

    /// Accepts `I3`, `I_3`, `I0*`, `I_2^*`, `IV*`, `IV^*`, ...
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let err = || ParseError::new("Kodaira fibre type", s);
        let t: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '^' | ' '))
            .collect();
        let (body, star) = match t.strip_suffix('*') {
            Some(b) => (b, true),
            None => (t.as_str(), false),
        };
        let named = match body {
            "II" => Some(KodairaFiberType::II),
            "III" => Some(KodairaFiberType::III),
            "IV" => Some(KodairaFiberType::IV),
            _ => None,
        };
        if let Some(kind) = named {
            return Ok(match (kind, star) {
                (k, false) => k,
                (KodairaFiberType::II, true) => KodairaFiberType::IIStar,
                (KodairaFiberType::III, true) => KodairaFiberType::IIIStar,
                (_, true) => KodairaFiberType::IVStar,
            });
        }
        let n: u32 = body
            .strip_prefix('I')
            .ok_or_else(err)?
            .parse()
            .map_err(|_| err())?;
        Ok(if star {
            KodairaFiberType::IStar(n)
        } else {
            KodairaFiberType::I(n)
        })
    }
}

impl Serialize for KodairaFiberType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small() -> Vec<KodairaFiberType> {
        let mut v = KodairaFiberType::singular_types(20, 20);
        v.push(KodairaFiberType::I(0));
        v
    }

    #[test]
    fn euler_and_components() {
        for t in all_small() {
            let g = t.dual_graph();
            assert_eq!(g.len() as u32, t.component_count(), "{t}");
            let expected = match t {
                KodairaFiberType::I(0) => 0,
                KodairaFiberType::I(n) => n,
                _ => t.component_count() + 1,
            };
            assert_eq!(t.euler(), expected, "{t}");
        }
    }

    /// The fibre class `F = Σ m_i C_i` has `F·C_i = 0` for every component.
    #[test]
    fn fibre_class_is_isotropic() {
        for t in all_small() {
            let g = t.dual_graph();
            if !g.minus_two_components {
                continue;
            }
            for i in 0..g.len() {
                let mut dot = -2 * g.multiplicities[i] as i64;
                for j in 0..g.len() {
                    if j != i {
                        dot += g.intersection(i, j) as i64 * g.multiplicities[j] as i64;
                    }
                }
                assert_eq!(dot, 0, "{t} component {i}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "I0", "I1", "I9", "I0*", "I3*", "II", "III", "IV", "IV*", "III*", "II*",
        ] {
            let t: KodairaFiberType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!(
            "I_3".parse::<KodairaFiberType>().unwrap(),
            KodairaFiberType::I(3)
        );
        assert_eq!(
            "IV^*".parse::<KodairaFiberType>().unwrap(),
            KodairaFiberType::IVStar
        );
        assert!("V".parse::<KodairaFiberType>().is_err());
    }

    #[test]
    fn multiple_only_for_i_n() {
        assert!(KodairaFiberType::I(0).allows_multiple());
        assert!(KodairaFiberType::I(3).allows_multiple());
        assert!(!KodairaFiberType::IVStar.allows_multiple());
        assert!(!KodairaFiberType::IStar(0).allows_multiple());
    }

    #[test]
    fn canonical_order() {
        let mut v = [
            KodairaFiberType::I(1),
            KodairaFiberType::IV,
            KodairaFiberType::IVStar,
            KodairaFiberType::I(3),
            KodairaFiberType::I(4),
        ];
        v.sort();
        let names: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["IV*", "IV", "I4", "I3", "I1"]);
    }
}
