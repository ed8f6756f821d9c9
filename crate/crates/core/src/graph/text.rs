//! Line-oriented text formats.
//!
//! All of them start with a header line `n m` followed by exactly `m` edge
//! lines. Blank lines and lines starting with `#` are ignored.
//!
//! * edge list: `u v`
//! * orientation: `u v`, meaning the arc `u -> v`
//! * weighted orientation: `u v w`, arc `u -> v` with weight `w`
//! * weighted edge list: `u v w`, undirected edge with weight `w`
//!
//! Weights are integers, decimals or `p/q` rationals.

use super::{orient, Graph, OrientedGraph, WeightedOrientedGraph};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

struct Record {
    line: usize,
    u: usize,
    v: usize,
    weight: Option<Rational>,
}

fn parse_records(text: &str, weighted: bool) -> Result<(usize, Vec<Record>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_count = |s: &str, what: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line: hline,
            reason: format!("invalid {what} {s:?}"),
        })
    };
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            reason: format!("header must be `n m`, found {header:?}"),
        });
    }
    let n = parse_count(fields[0], "vertex count")?;
    let m = parse_count(fields[1], "edge count")?;

    let expected = if weighted { 3 } else { 2 };
    let mut records = Vec::with_capacity(m);
    for (line, body) in lines {
        if records.len() == m {
            return Err(Error::Parse {
                line,
                reason: format!("more than the declared {m} edge lines"),
            });
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != expected {
            return Err(Error::Parse {
                line,
                reason: format!("expected {expected} fields, found {}", fields.len()),
            });
        }
        let vertex = |s: &str| -> Result<usize> {
            let v = s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                reason: format!("invalid vertex {s:?}"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            Ok(v)
        };
        let u = vertex(fields[0])?;
        let v = vertex(fields[1])?;
        if u == v {
            return Err(Error::Parse {
                line,
                reason: format!("loop at vertex {u}"),
            });
        }
        let weight = if weighted {
            Some(parse_rational(fields[2]).map_err(|e| Error::Parse {
                line,
                reason: e.to_string(),
            })?)
        } else {
            None
        };
        records.push(Record { line, u, v, weight });
    }
    if records.len() != m {
        return Err(Error::Parse {
            line: hline,
            reason: format!("declared {m} edges, found {}", records.len()),
        });
    }
    check_duplicates(&records)?;
    Ok((n, records))
}

fn check_duplicates(records: &[Record]) -> Result<()> {
    let mut keys: Vec<((usize, usize), usize)> = records
        .iter()
        .map(|r| ((r.u.min(r.v), r.u.max(r.v)), r.line))
        .collect();
    keys.sort_unstable();
    for w in keys.windows(2) {
        if w[0].0 == w[1].0 {
            let (u, v) = w[0].0;
            return Err(Error::Parse {
                line: w[1].1,
                reason: format!("duplicate edge {{{u}, {v}}}"),
            });
        }
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, records) = parse_records(text, false)?;
    Graph::new(n, records.iter().map(|r| (r.u, r.v)))
}

pub fn parse_orientation(text: &str) -> Result<OrientedGraph> {
    let (n, records) = parse_records(text, false)?;
    let g = Graph::new(n, records.iter().map(|r| (r.u, r.v)))?;
    let arcs: Vec<(usize, usize)> = records.iter().map(|r| (r.u, r.v)).collect();
    orient(&g, &arcs)
}

pub fn parse_weighted_orientation(text: &str) -> Result<WeightedOrientedGraph> {
    let (n, records) = parse_records(text, true)?;
    let g = Graph::new(n, records.iter().map(|r| (r.u, r.v)))?;
    let arcs: Vec<(usize, usize)> = records.iter().map(|r| (r.u, r.v)).collect();
    let og = orient(&g, &arcs)?;
    let mut weights = vec![Rational::default(); g.size()];
    for r in &records {
        let e = g.edge_index(r.u, r.v).expect("edge was just inserted");
        weights[e] = r.weight.clone().expect("weighted record");
    }
    WeightedOrientedGraph::new(og, weights)
}

/// Undirected weighted edge list; weights are returned in canonical edge order.
pub fn parse_weighted_edge_list(text: &str) -> Result<(Graph, Vec<Rational>)> {
    let (n, records) = parse_records(text, true)?;
    let g = Graph::new(n, records.iter().map(|r| (r.u, r.v)))?;
    let mut weights = vec![Rational::default(); g.size()];
    for r in &records {
        let e = g.edge_index(r.u, r.v).expect("edge was just inserted");
        weights[e] = r.weight.clone().expect("weighted record");
    }
    Ok((g, weights))
}
