use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Wheel `W_d` on `d` vertices: hub 1 joined to the cycle `2, ..., d`.
/// Spokes come first, then the rim.
pub fn wheel(d: usize) -> Graph {
    assert!(d >= 4, "a wheel needs at least 4 vertices");
    let mut edges: Vec<(usize, usize)> = (2..=d).map(|k| (1, k)).collect();
    edges.extend((2..d).map(|k| (k, k + 1)));
    edges.push((2, d));
    Graph::new(d, edges).expect("valid wheel")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|k| (k, k + 1)).collect();
    edges.push((1, n));
    Graph::new(n, edges).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    assert!(n >= 2);
    Graph::new(n, (1..n).map(|k| (k, k + 1))).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    Graph::new(n, edges).expect("valid complete graph")
}

/// `K_{p,q}` with parts `1..=p` and `p+1..=p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    complete_multipartite(&[p, q])
}

/// Complete multipartite graph with consecutive blocks of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut block = Vec::with_capacity(n + 1);
    block.push(usize::MAX);
    for (b, &s) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat(b).take(s));
    }
    let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    let edges: Vec<_> = edges.filter(|&(i, j)| block[i] != block[j]).collect();
    Graph::new(n, edges).expect("valid multipartite graph")
}

/// Named graph families: `wheel:d`, `cycle:n`, `path:n`, `complete:n`,
/// `kbip:p:q`, `multipartite:a:b:...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Wheel(usize),
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    pub fn graph(&self) -> Graph {
        match self {
            Family::Wheel(d) => wheel(*d),
            Family::Cycle(n) => cycle(*n),
            Family::Path(n) => path(*n),
            Family::Complete(n) => complete(*n),
            Family::CompleteBipartite(p, q) => complete_bipartite(*p, *q),
            Family::CompleteMultipartite(s) => complete_multipartite(s),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let args: Vec<usize> = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad family parameter {p:?}")))
            })
            .collect::<Result<_>>()?;
        let bad = || Error::Invalid(format!("bad family specification {s:?}"));
        let one = |min: usize| match args[..] {
            [n] if n >= min => Ok(n),
            _ => Err(bad()),
        };
        Ok(match name {
            "wheel" => Family::Wheel(one(4)?),
            "cycle" => Family::Cycle(one(3)?),
            "path" => Family::Path(one(2)?),
            "complete" => Family::Complete(one(2)?),
            "kbip" => match args[..] {
                [p, q] if p >= 1 && q >= 1 => Family::CompleteBipartite(p, q),
                _ => return Err(bad()),
            },
            "multipartite" if args.len() >= 2 && args.iter().all(|&a| a >= 1) => {
                Family::CompleteMultipartite(args)
            }
            _ => return Err(bad()),
        })
    }
}
