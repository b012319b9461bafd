//! Target graphs `H` and `F`, with the textual mini-language
//! `K<r>`, `C<l>`, `Kbar<r>`, `K<r>-e`, `P<m>`, `K<a>,<b>`, `g6:<code>`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Clique(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Any small graph. Disconnected patterns are accepted; the only one in
    /// use is the independent triple.
    Explicit(Graph),
}

impl Pattern {
    pub fn validate(&self) -> Result<()> {
        match self {
            Pattern::Clique(r) if *r == 0 => Err(Error::InvalidPattern("K0".into())),
            Pattern::Cycle(l) if *l < 3 => Err(Error::InvalidPattern(format!("C{l}: cycles need length >= 3"))),
            Pattern::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                Err(Error::InvalidPattern(format!("K{a},{b}")))
            }
            Pattern::Explicit(g) if g.n() == 0 => Err(Error::InvalidPattern("empty explicit pattern".into())),
            _ if self.order() > crate::graph::MAX_VERTICES => Err(Error::TooManyVertices(self.order())),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Pattern::Clique(r) => *r,
            Pattern::Cycle(l) => *l,
            Pattern::CompleteBipartite(a, b) => a + b,
            Pattern::Explicit(g) => g.n(),
        }
    }

    /// The pattern as a labeled graph. Cycles are `0-1-...-(l-1)-0`,
    /// complete bipartite graphs have parts `0..a` and `a..a+b`.
    pub fn graph(&self) -> Graph {
        match self {
            Pattern::Clique(r) => Graph::complete(*r),
            Pattern::Cycle(l) => Graph::cycle(*l),
            Pattern::CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
            Pattern::Explicit(g) => g.clone(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Pattern::Clique(r) => r * r.saturating_sub(1) / 2,
            Pattern::Cycle(l) => *l,
            Pattern::CompleteBipartite(a, b) => a * b,
            Pattern::Explicit(g) => g.edge_count(),
        }
    }

    /// `K<r> - e`: the clique with edge `{r-2, r-1}` removed.
    pub fn clique_minus_edge(r: usize) -> Result<Pattern> {
        if r < 2 {
            return Err(Error::InvalidPattern(format!("K{r}-e")));
        }
        let mut g = Graph::complete(r);
        g.remove_edge(r - 2, r - 1);
        Ok(Pattern::Explicit(g))
    }

    pub fn independent_set(r: usize) -> Pattern {
        Pattern::Explicit(Graph::empty(r))
    }

    pub fn path(m: usize) -> Pattern {
        Pattern::Explicit(Graph::path(m))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Clique(r) => write!(f, "K{r}"),
            Pattern::Cycle(l) => write!(f, "C{l}"),
            Pattern::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Pattern::Explicit(g) => write!(f, "g6:{}", to_graph6(g)),
        }
    }
}

fn parse_count(s: &str, whole: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::InvalidPattern(format!("cannot parse {whole:?}")))
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        let s = s.trim();
        let p = if let Some(code) = s.strip_prefix("g6:") {
            Pattern::Explicit(from_graph6(code)?)
        } else if let Some(rest) = s.strip_prefix("Kbar") {
            Pattern::independent_set(parse_count(rest, s)?)
        } else if let Some(rest) = s.strip_prefix('K') {
            if let Some(r) = rest.strip_suffix("-e") {
                Pattern::clique_minus_edge(parse_count(r, s)?)?
            } else if let Some((a, b)) = rest.split_once(',') {
                Pattern::CompleteBipartite(parse_count(a, s)?, parse_count(b, s)?)
            } else {
                Pattern::Clique(parse_count(rest, s)?)
            }
        } else if let Some(rest) = s.strip_prefix('C') {
            Pattern::Cycle(parse_count(rest, s)?)
        } else if let Some(rest) = s.strip_prefix('P') {
            Pattern::path(parse_count(rest, s)?)
        } else {
            return Err(Error::InvalidPattern(format!(
                "{s:?}: expected K<r>, C<l>, Kbar<r>, K<r>-e, P<m>, K<a>,<b> or g6:<code>"
            )));
        };
        p.validate()?;
        Ok(p)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Pattern, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for (text, p) in [
            ("K4", Pattern::Clique(4)),
            ("C6", Pattern::Cycle(6)),
            ("K2,3", Pattern::CompleteBipartite(2, 3)),
        ] {
            let parsed: Pattern = text.parse().unwrap();
            assert_eq!(parsed, p);
            assert_eq!(parsed.to_string(), text);
        }
        let kbar: Pattern = "Kbar3".parse().unwrap();
        assert_eq!(kbar.graph(), Graph::empty(3));
        let k4e: Pattern = "K4-e".parse().unwrap();
        assert_eq!(k4e.edge_count(), 5);
        let round: Pattern = k4e.to_string().parse().unwrap();
        assert_eq!(round, k4e);
        let p3: Pattern = "P3".parse().unwrap();
        assert_eq!(p3.graph().edge_count(), 2);
    }

    #[test]
    fn rejects_invalid() {
        assert!("C2".parse::<Pattern>().is_err());
        assert!("K0".parse::<Pattern>().is_err());
        assert!("X5".parse::<Pattern>().is_err());
        assert!("K".parse::<Pattern>().is_err());
        assert!("K0,3".parse::<Pattern>().is_err());
    }
}
