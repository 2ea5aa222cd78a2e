//! Plain-text instance and solution files.
//!
//! Instance format (0-based decimal indices, `#` starts a comment line):
//!
//! ```text
//! V n
//! C x y        (optional, n lines)
//! E m
//! u v cost     (m lines)
//! H r
//! s v1 … vs    (r lines)
//! K k          (optional budget)
//! ```
//!
//! A solution file is one line `F s` followed by s edge indices. Writing is
//! canonical and `parse ∘ write` is the identity.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{EdgeCosts, Graph, Habitat, Instance, Solution};
use crate::planar::Coordinates;

/// Content lines of a file with their 1-based line numbers; comments and
/// blank lines stripped.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|&(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { items, next: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.next).copied()
    }

    fn take(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.peek() {
            Some(item) => {
                self.next += 1;
                Ok(item)
            }
            None => {
                let line = self.items.last().map_or(1, |&(n, _)| n + 1);
                Err(Error::Parse {
                    line,
                    message: format!("unexpected end of file, expected {what}"),
                })
            }
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some((line, text)) => Err(Error::Parse {
                line,
                message: format!("trailing content: {text:?}"),
            }),
        }
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected {what}, got {token:?}"),
    })
}

/// Splits a tagged line `TAG a b …` and checks the tag.
fn tagged<'a>(line: usize, text: &'a str, tag: &str) -> Result<Vec<&'a str>> {
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(tag) {
        return Err(Error::Parse {
            line,
            message: format!("expected `{tag} …`, got {text:?}"),
        });
    }
    Ok(tokens.collect())
}

/// Parses an instance (and the optional coordinate block) from text.
pub fn parse_instance_str(text: &str) -> Result<(Instance, Option<Coordinates>)> {
    let mut lines = Lines::new(text);

    let (ln, l) = lines.take("`V n`")?;
    let args = tagged(ln, l, "V")?;
    let [n] = args.as_slice() else {
        return Err(Error::Parse {
            line: ln,
            message: "`V` takes exactly one count".into(),
        });
    };
    let n: usize = parse_number(n, ln, "a vertex count")?;

    let coords = if lines
        .peek()
        .is_some_and(|(_, l)| l.starts_with("C ") || l == "C")
    {
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, l) = lines.take("`C x y`")?;
            let args = tagged(ln, l, "C")?;
            let [x, y] = args.as_slice() else {
                return Err(Error::Parse {
                    line: ln,
                    message: "`C` takes two coordinates".into(),
                });
            };
            pts.push((
                parse_number(x, ln, "a coordinate")?,
                parse_number(y, ln, "a coordinate")?,
            ));
        }
        Some(Coordinates::new(pts)?)
    } else {
        None
    };

    let (ln, l) = lines.take("`E m`")?;
    let args = tagged(ln, l, "E")?;
    let [m] = args.as_slice() else {
        return Err(Error::Parse {
            line: ln,
            message: "`E` takes exactly one count".into(),
        });
    };
    let m: usize = parse_number(m, ln, "an edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut costs = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines.take("`u v cost`")?;
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [u, v, c] = tokens.as_slice() else {
            return Err(Error::Parse {
                line: ln,
                message: format!("expected `u v cost`, got {l:?}"),
            });
        };
        edges.push((
            parse_number(u, ln, "a vertex index")?,
            parse_number(v, ln, "a vertex index")?,
        ));
        costs.push(parse_number::<u64>(c, ln, "an edge cost")?);
    }
    let graph = Graph::new(n, edges)?;
    let costs = EdgeCosts::new(costs, &graph)?;

    let (ln, l) = lines.take("`H r`")?;
    let args = tagged(ln, l, "H")?;
    let [r] = args.as_slice() else {
        return Err(Error::Parse {
            line: ln,
            message: "`H` takes exactly one count".into(),
        });
    };
    let r: usize = parse_number(r, ln, "a habitat count")?;
    let mut habitats = Vec::with_capacity(r);
    for _ in 0..r {
        let (ln, l) = lines.take("`s v1 … vs`")?;
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let Some((s, rest)) = tokens.split_first() else {
            return Err(Error::Parse {
                line: ln,
                message: "empty habitat line".into(),
            });
        };
        let s: usize = parse_number(s, ln, "a habitat size")?;
        if rest.len() != s {
            return Err(Error::Parse {
                line: ln,
                message: format!("habitat announces {s} vertices but lists {}", rest.len()),
            });
        }
        let vertices = rest
            .iter()
            .map(|t| parse_number::<usize>(t, ln, "a vertex index"))
            .collect::<Result<Vec<_>>>()?;
        habitats.push(Habitat::new(vertices, &graph)?);
    }

    let budget = match lines.peek() {
        Some((ln, l)) if l.starts_with('K') => {
            lines.take("`K k`")?;
            let args = tagged(ln, l, "K")?;
            let [k] = args.as_slice() else {
                return Err(Error::Parse {
                    line: ln,
                    message: "`K` takes exactly one budget".into(),
                });
            };
            Some(parse_number::<u64>(k, ln, "a budget")?)
        }
        _ => None,
    };
    lines.finish()?;
    Ok((Instance::new(graph, costs, habitats, budget), coords))
}

/// Canonical text form of an instance.
pub fn write_instance_string(inst: &Instance, coords: Option<&Coordinates>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "V {}", inst.graph.vertex_count());
    if let Some(coords) = coords {
        for &(x, y) in coords.as_slice() {
            let _ = writeln!(out, "C {x} {y}");
        }
    }
    let _ = writeln!(out, "E {}", inst.graph.edge_count());
    for (e, &(u, v)) in inst.graph.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", inst.costs.get(e));
    }
    let _ = writeln!(out, "H {}", inst.habitats.len());
    for h in &inst.habitats {
        let _ = write!(out, "{}", h.len());
        for &v in h.vertices() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    if let Some(k) = inst.budget {
        let _ = writeln!(out, "K {k}");
    }
    out
}

pub fn parse_instance(path: impl AsRef<Path>) -> Result<(Instance, Option<Coordinates>)> {
    parse_instance_str(&std::fs::read_to_string(path)?)
}

pub fn write_instance(
    path: impl AsRef<Path>,
    inst: &Instance,
    coords: Option<&Coordinates>,
) -> Result<()> {
    Ok(std::fs::write(path, write_instance_string(inst, coords))?)
}

/// Parses a solution file against its instance (costs are recomputed).
pub fn parse_solution_str(text: &str, inst: &Instance) -> Result<Solution> {
    let mut lines = Lines::new(text);
    let (ln, l) = lines.take("`F s`")?;
    let args = tagged(ln, l, "F")?;
    let [s] = args.as_slice() else {
        return Err(Error::Parse {
            line: ln,
            message: "`F` takes exactly one count".into(),
        });
    };
    let s: usize = parse_number(s, ln, "an edge count")?;
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < s {
        let (ln, l) = lines.take("an edge index")?;
        for token in l.split_whitespace() {
            let e: usize = parse_number(token, ln, "an edge index")?;
            if e >= inst.graph.edge_count() {
                return Err(Error::InvalidEdge {
                    index: e,
                    count: inst.graph.edge_count(),
                });
            }
            if !edges.insert(e) {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("duplicate edge index {e}"),
                });
            }
        }
    }
    if edges.len() != s {
        return Err(Error::Parse {
            line: 1,
            message: format!("solution announces {s} edges but lists {}", edges.len()),
        });
    }
    lines.finish()?;
    Ok(Solution::from_edges(edges, &inst.costs))
}

/// Canonical text form of a solution: `F s` then one edge index per line.
pub fn write_solution_string(sol: &Solution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "F {}", sol.edge_indices.len());
    for &e in &sol.edge_indices {
        let _ = writeln!(out, "{e}");
    }
    out
}

pub fn parse_solution(path: impl AsRef<Path>, inst: &Instance) -> Result<Solution> {
    parse_solution_str(&std::fs::read_to_string(path)?, inst)
}

pub fn write_solution(path: impl AsRef<Path>, sol: &Solution) -> Result<()> {
    Ok(std::fs::write(path, write_solution_string(sol))?)
}
