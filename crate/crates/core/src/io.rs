//! Line-oriented text formats.
//!
//! All three share the same layout: a magic line with a version, a size
//! line, then one record per line. Lines starting with `#` are comments and
//! blank lines are skipped.
//!
//! ```text
//! l3g 1          g1 1           pts 1
//! 5 2            4 3            3
//! 0 1 2          0 1            0 0
//! 0 3 4          1 2            2 0
//!                2 3            1 1/2
//! ```

use std::fmt::Write as _;

use crate::geometry::{parse_rational, GaussianRational, PointSet};
use crate::{Error, Result, SimpleGraph, TripleSystem};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-comment line as `(1-based line number, fields)`.
    fn next_record(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t.split_whitespace().collect()));
        }
        None
    }

    fn expect_record(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next_record().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn header(&mut self, magic: &str) -> Result<()> {
        let (line, f) = self.expect_record("header")?;
        if f.len() != 2 || f[0] != magic {
            return Err(Error::Parse {
                line,
                message: format!("expected header `{magic} 1`"),
            });
        }
        if f[1] != "1" {
            return Err(Error::Parse {
                line,
                message: format!("unsupported {magic} version {}", f[1]),
            });
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_record() {
            None => Ok(()),
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "more records than declared".into(),
            }),
        }
    }
}

fn parse_usizes(line: usize, fields: &[&str], count: usize) -> Result<Vec<usize>> {
    if fields.len() != count {
        return Err(Error::Parse {
            line,
            message: format!("expected {count} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: {f:?}"),
            })
        })
        .collect()
}

fn with_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| Error::Parse {
        line,
        message: e.to_string(),
    }
}

pub fn parse_l3g(text: &str) -> Result<TripleSystem> {
    let mut lines = Lines::new(text);
    lines.header("l3g")?;
    let (line, f) = lines.expect_record("`n m`")?;
    let nm = parse_usizes(line, &f, 2)?;
    let mut edges = Vec::with_capacity(nm[1]);
    for _ in 0..nm[1] {
        let (line, f) = lines.expect_record("an edge")?;
        let e = parse_usizes(line, &f, 3)?;
        // Validate each edge early so errors carry a line number.
        TripleSystem::new(nm[0], [[e[0], e[1], e[2]]]).map_err(with_line(line))?;
        edges.push([e[0], e[1], e[2]]);
    }
    lines.finish()?;
    TripleSystem::new(nm[0], edges)
}

pub fn emit_l3g(h: &TripleSystem) -> String {
    let mut out = format!("l3g 1\n{} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        writeln!(out, "{} {} {}", e[0], e[1], e[2]).expect("writing to a String");
    }
    out
}

pub fn parse_g1(text: &str) -> Result<SimpleGraph> {
    let mut lines = Lines::new(text);
    lines.header("g1")?;
    let (line, f) = lines.expect_record("`n m`")?;
    let nm = parse_usizes(line, &f, 2)?;
    let mut edges = Vec::with_capacity(nm[1]);
    for _ in 0..nm[1] {
        let (line, f) = lines.expect_record("an edge")?;
        let e = parse_usizes(line, &f, 2)?;
        SimpleGraph::new(nm[0], [(e[0], e[1])]).map_err(with_line(line))?;
        edges.push((e[0], e[1]));
    }
    lines.finish()?;
    SimpleGraph::new(nm[0], edges)
}

pub fn emit_g1(g: &SimpleGraph) -> String {
    let mut out = format!("g1 1\n{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_pts(text: &str) -> Result<PointSet> {
    let mut lines = Lines::new(text);
    lines.header("pts")?;
    let (line, f) = lines.expect_record("`n`")?;
    let n = parse_usizes(line, &f, 1)?[0];
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, f) = lines.expect_record("a point")?;
        if f.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 2 fields, found {}", f.len()),
            });
        }
        let re = parse_rational(f[0]).map_err(with_line(line))?;
        let im = parse_rational(f[1]).map_err(with_line(line))?;
        points.push(GaussianRational::new(re, im));
    }
    lines.finish()?;
    PointSet::new(points)
}

pub fn emit_pts(s: &PointSet) -> String {
    let mut out = format!("pts 1\n{}\n", s.len());
    for p in s.points() {
        writeln!(out, "{p}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l3g_round_trip_and_comments() {
        let text = "# two edges\nl3g 1\n5 2\n0 3 4\n\n2 1 0\n";
        let h = parse_l3g(text).unwrap();
        assert_eq!(emit_l3g(&h), "l3g 1\n5 2\n0 1 2\n0 3 4\n");
        assert_eq!(parse_l3g(&emit_l3g(&h)).unwrap(), h);
    }

    #[test]
    fn l3g_errors_carry_lines() {
        assert!(matches!(parse_l3g("l3g 2\n1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_l3g("l3g 1\n3 1\n0 1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_l3g("l3g 1\n3 1\n0 1 x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_l3g("l3g 1\n3 2\n0 1 2\n").is_err());
        assert!(parse_l3g("l3g 1\n3 1\n0 1 2\n0 1 2\n").is_err());
    }

    #[test]
    fn g1_round_trip() {
        let g = parse_g1("g1 1\n4 3\n1 0\n2 1\n3 2\n").unwrap();
        assert_eq!(emit_g1(&g), "g1 1\n4 3\n0 1\n1 2\n2 3\n");
        assert!(parse_g1("g1 1\n2 1\n1 1\n").is_err());
    }

    #[test]
    fn pts_round_trip() {
        let s = parse_pts("pts 1\n3\n0 0\n4/2 0\n1 -1/2\n").unwrap();
        assert_eq!(emit_pts(&s), "pts 1\n3\n0 0\n2 0\n1 -1/2\n");
        assert!(parse_pts("pts 1\n2\n0 0\n0 0\n").is_err());
        assert!(parse_pts("pts 1\n1\n1/0 0\n").is_err());
    }
}
