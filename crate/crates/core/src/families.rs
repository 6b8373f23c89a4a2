//! Named graph families and their closed-form invariant values.
//!
//! Vertex numbering per kind:
//! - `Path(n)`: `0-1-...-(n-1)`; `Cycle(n)` adds `(n-1)-0`.
//! - `Star(n)` is `K_{1,n}` with center `0`.
//! - `CompleteBipartite(m, n)`: parts `0..m` and `m..m+n`.
//! - `JoinK2(n)` / `JoinK2bar(n)`: `0` and `1` are joined to every other
//!   vertex, adjacent to each other only in `JoinK2`.
//! - `CoronaOf(H)`: vertex `v < |H|` is the pendant of vertex `|H| + v`,
//!   which plays the role of `v` in `H`.
//! - `SimpleDiademOf(C)` / `DiademOf(C)`: the corona `C` plus a new last
//!   vertex attached to the lowest-numbered support of `C` that is not a
//!   leaf (and, for diadems, also to that support's leaf).

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::corona::corona_k1;
use crate::graph::{named, Graph, GraphError};
use crate::structure::corona_pairing;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    JoinK2(usize),
    JoinK2bar(usize),
    CoronaOf(Box<FamilySpec>),
    SimpleDiademOf(Box<FamilySpec>),
    DiademOf(Box<FamilySpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {0}")]
    BadParameters(String),
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
    #[error("diadem base {0} is not a corona with a non-leaf support")]
    NotCoronaBase(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FamilySpec {
    fn check(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) => n >= 1,
            FamilySpec::Cycle(n) => n >= 3,
            FamilySpec::CompleteBipartite(m, n) => 1 <= m && m <= n,
            FamilySpec::JoinK2(n) | FamilySpec::JoinK2bar(n) => n >= 3,
            FamilySpec::CoronaOf(ref b)
            | FamilySpec::SimpleDiademOf(ref b)
            | FamilySpec::DiademOf(ref b) => return b.check(),
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::BadParameters(self.to_string()))
        }
    }

    /// Builds the graph with the numbering documented at module level.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.check()?;
        let g = match self {
            FamilySpec::Path(n) => named::path(*n),
            FamilySpec::Cycle(n) => named::cycle(*n),
            FamilySpec::Complete(n) => named::complete(*n),
            FamilySpec::Star(n) => named::star(*n),
            FamilySpec::CompleteBipartite(m, n) => named::complete_bipartite(*m, *n),
            FamilySpec::JoinK2(n) | FamilySpec::JoinK2bar(n) => {
                let n = *n;
                let mut edges: Vec<(usize, usize)> =
                    (2..n).flat_map(|v| [(0, v), (1, v)]).collect();
                if matches!(self, FamilySpec::JoinK2(_)) {
                    edges.push((0, 1));
                }
                Graph::from_edge_list(n, &edges)?
            }
            FamilySpec::CoronaOf(base) => {
                let h = base.build()?;
                corona_k1(&h)
                    .map_err(|_| FamilyError::BadParameters(self.to_string()))?
                    .graph
            }
            FamilySpec::SimpleDiademOf(base) | FamilySpec::DiademOf(base) => {
                let c = base.build()?;
                let simple = matches!(self, FamilySpec::SimpleDiademOf(_));
                attach_new_vertex(&c, simple)
                    .ok_or_else(|| FamilyError::NotCoronaBase(base.to_string()))??
            }
        };
        Ok(g)
    }

    /// The closed-form values known for this family, with their guards.
    pub fn expected(&self) -> ExpectedInvariants {
        let mut e = ExpectedInvariants::default();
        match *self {
            FamilySpec::Complete(n) if n != 2 => {
                e = ExpectedInvariants::all(1);
            }
            FamilySpec::Complete(_) => {}
            FamilySpec::Path(n) => {
                e.gamma = Some(n.div_ceil(3));
                if n >= 5 {
                    e.gamma_cer = Some(n.div_ceil(3));
                    e.upper_gamma_cer = Some((n - 1) / 2);
                    e.upper_gamma = Some((n - 1) / 2 + 1);
                }
            }
            FamilySpec::Cycle(n) => {
                e.gamma = Some(n.div_ceil(3));
                e.gamma_cer = Some(n.div_ceil(3));
                e.upper_gamma = Some(n / 2);
                e.upper_gamma_cer = Some(n / 2);
            }
            FamilySpec::Star(n) | FamilySpec::CompleteBipartite(1, n) => {
                e.upper_gamma = Some(n);
                if n >= 2 {
                    e.gamma = Some(1);
                    e.gamma_cer = Some(1);
                    e.upper_gamma_cer = Some(1);
                }
            }
            FamilySpec::CompleteBipartite(_, n) => {
                e.gamma = Some(2);
                e.gamma_cer = Some(2);
                e.upper_gamma = Some(n);
                e.upper_gamma_cer = Some(n);
            }
            FamilySpec::JoinK2(n) | FamilySpec::JoinK2bar(n) => {
                e.upper_gamma_cer = Some(n - 2);
            }
            FamilySpec::CoronaOf(ref base) => {
                if let Ok(h) = base.build() {
                    let n = 2 * h.order();
                    e.gamma = Some(h.order());
                    e.gamma_cer = Some(n);
                    e.upper_gamma_cer = Some(n);
                }
            }
            FamilySpec::SimpleDiademOf(_) | FamilySpec::DiademOf(_) => {
                if let Ok(g) = self.build() {
                    if g.is_connected() {
                        e.upper_gamma_cer = Some(g.order() - 2);
                    }
                }
            }
        }
        e
    }

    /// Short name used in CLI syntax.
    pub fn keyword(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::CompleteBipartite(..) => "kbip",
            FamilySpec::JoinK2(_) => "joink2",
            FamilySpec::JoinK2bar(_) => "joink2bar",
            FamilySpec::CoronaOf(_) => "corona",
            FamilySpec::SimpleDiademOf(_) => "sdiadem",
            FamilySpec::DiademOf(_) => "diadem",
        }
    }
}

fn attach_new_vertex(c: &Graph, simple: bool) -> Option<Result<Graph, FamilyError>> {
    let pairs = corona_pairing(c)?;
    let leaves = c.leaves();
    // lowest non-leaf core with its pendant
    let &(support, leaf) = pairs
        .iter()
        .filter(|&&(s, _)| !leaves.contains(s))
        .min_by_key(|&&(s, _)| s)?;
    let x = c.order();
    let mut edges: Vec<(usize, usize)> = c.edges().collect();
    edges.push((support, x));
    if !simple {
        edges.push((leaf, x));
    }
    Some(Graph::from_edge_list(x + 1, &edges).map_err(FamilyError::from))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.keyword();
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::JoinK2(n)
            | FamilySpec::JoinK2bar(n) => write!(f, "{kw}:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "{kw}:{m},{n}"),
            FamilySpec::CoronaOf(b) | FamilySpec::SimpleDiademOf(b) | FamilySpec::DiademOf(b) => {
                write!(f, "{kw}:{b}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `path:5`, `cycle:8`, `complete:4`, `star:3`, `kbip:2,3`,
    /// `joink2:5`, `joink2bar:5`, and the wrappers `corona:<spec>`,
    /// `sdiadem:<spec>`, `diadem:<spec>`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let err = || FamilyError::Parse(s.to_string());
        let s = s.trim();
        let (kw, rest) = s.split_once(':').ok_or_else(err)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| err());
        let spec = match kw.trim() {
            "path" => FamilySpec::Path(num(rest)?),
            "cycle" => FamilySpec::Cycle(num(rest)?),
            "complete" => FamilySpec::Complete(num(rest)?),
            "star" => FamilySpec::Star(num(rest)?),
            "kbip" => {
                let (m, n) = rest.split_once(',').ok_or_else(err)?;
                FamilySpec::CompleteBipartite(num(m)?, num(n)?)
            }
            "joink2" => FamilySpec::JoinK2(num(rest)?),
            "joink2bar" => FamilySpec::JoinK2bar(num(rest)?),
            "corona" => FamilySpec::CoronaOf(Box::new(rest.parse()?)),
            "sdiadem" | "simple-diadem" => FamilySpec::SimpleDiademOf(Box::new(rest.parse()?)),
            "diadem" => FamilySpec::DiademOf(Box::new(rest.parse()?)),
            _ => return Err(err()),
        };
        Ok(spec)
    }
}

/// Closed-form values; `None` where no formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExpectedInvariants {
    pub gamma: Option<usize>,
    pub gamma_cer: Option<usize>,
    pub upper_gamma: Option<usize>,
    pub upper_gamma_cer: Option<usize>,
}

impl ExpectedInvariants {
    fn all(v: usize) -> Self {
        ExpectedInvariants {
            gamma: Some(v),
            gamma_cer: Some(v),
            upper_gamma: Some(v),
            upper_gamma_cer: Some(v),
        }
    }

    pub fn get(&self, kind: crate::domination::InvariantKind) -> Option<usize> {
        use crate::domination::InvariantKind::*;
        match kind {
            Gamma => self.gamma,
            GammaCer => self.gamma_cer,
            UpperGamma => self.upper_gamma,
            UpperGammaCer => self.upper_gamma_cer,
        }
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.build()
}

pub fn expected(spec: &FamilySpec) -> ExpectedInvariants {
    spec.expected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{classify_structure, StructureKind};

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "path:5",
            "cycle:8",
            "kbip:2,3",
            "corona:path:3",
            "diadem:corona:complete:2",
            "sdiadem:corona:cycle:4",
            "joink2bar:6",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("kbip:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn builds() {
        assert_eq!(spec("path:5").build().unwrap(), named::path(5));
        assert_eq!(
            spec("kbip:2,3").build().unwrap(),
            named::complete_bipartite(2, 3)
        );
        let sd = spec("sdiadem:corona:complete:2").build().unwrap();
        assert_eq!(sd.order(), 5);
        // P4 from the corona of K2 is 0-2-3-1; the new vertex 4 hangs off 2
        let edges: Vec<_> = sd.edges().collect();
        assert_eq!(edges, [(0, 2), (1, 3), (2, 3), (2, 4)]);
        assert_eq!(classify_structure(&sd).kind, StructureKind::SimpleDiadem);
        let d = spec("diadem:corona:complete:2").build().unwrap();
        assert_eq!(classify_structure(&d).kind, StructureKind::Diadem);
    }

    #[test]
    fn bad_parameters() {
        assert!(spec("cycle:2").build().is_err());
        assert!(spec("kbip:3,2").build().is_err());
        assert!(spec("joink2:2").build().is_err());
        assert!(spec("path:0").build().is_err());
        // K2 is a corona but has no non-leaf support
        assert!(matches!(
            spec("sdiadem:corona:complete:1").build(),
            Err(FamilyError::NotCoronaBase(_))
        ));
        assert!(matches!(
            spec("diadem:cycle:4").build(),
            Err(FamilyError::NotCoronaBase(_))
        ));
    }

    #[test]
    fn expected_examples() {
        let c8 = spec("cycle:8").expected();
        assert_eq!(c8.gamma, Some(3));
        assert_eq!(c8.gamma_cer, Some(3));
        assert_eq!(c8.upper_gamma, Some(4));
        assert_eq!(c8.upper_gamma_cer, Some(4));
        let s6 = spec("star:6").expected();
        assert_eq!(s6, ExpectedInvariants {
            gamma: Some(1),
            gamma_cer: Some(1),
            upper_gamma: Some(6),
            upper_gamma_cer: Some(1),
        });
        let k2 = spec("complete:2").expected();
        assert_eq!(k2, ExpectedInvariants::default());
        let p7 = spec("path:7").expected();
        assert_eq!(p7.upper_gamma, Some(4));
        assert_eq!(p7.upper_gamma_cer, Some(3));
    }
}
