//! Text, JSON and DOT encodings of edge-colored complete graphs.
//!
//! `.gcol` layout: a header line `n k`, then `n - 1` lines where line `i`
//! (1-based) lists the colors of the edges `(i, j)` for `j = i+1..n`,
//! separated by single spaces. Every line ends in `\n`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredCompleteGraph};

pub fn to_gcol(g: &EdgeColoredCompleteGraph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(g.colors().len() * 3 + 16);
    writeln!(out, "{} {}", n, g.palette_size()).unwrap();
    let mut idx = 0;
    for i in 0..n.saturating_sub(1) {
        let row = &g.colors()[idx..idx + (n - i - 1)];
        idx += row.len();
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{c}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected an integer, found {tok:?}"),
    })
}

pub fn from_gcol(text: &str) -> Result<EdgeColoredCompleteGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse {
            line: 1,
            msg: "header must be `n k`".into(),
        });
    }
    let n: usize = parse_num(head[0], 1)?;
    let k: u8 = parse_num(head[1], 1)?;
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            msg: "n must be at least 1".into(),
        });
    }
    let mut colors = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n - 1 {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: i + 2,
            msg: format!("missing row {} of {}", i + 1, n - 1),
        })?;
        let before = colors.len();
        for tok in line.split_whitespace() {
            colors.push(parse_num::<Color>(tok, line_no)?);
        }
        if colors.len() - before != n - i - 1 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {} colors, found {}", n - i - 1, colors.len() - before),
            });
        }
    }
    if let Some((line_no, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: line_no,
            msg: "unexpected content after the last row".into(),
        });
    }
    EdgeColoredCompleteGraph::new(n, k, colors)
}

pub fn read_gcol(path: impl AsRef<Path>) -> Result<EdgeColoredCompleteGraph> {
    from_gcol(&fs::read_to_string(path)?)
}

pub fn write_gcol(path: impl AsRef<Path>, g: &EdgeColoredCompleteGraph) -> Result<()> {
    fs::write(path, to_gcol(g))?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    k: u8,
    colors: Vec<Color>,
}

pub fn to_json(g: &EdgeColoredCompleteGraph) -> String {
    serde_json::to_string(&JsonGraph {
        n: g.order(),
        k: g.palette_size(),
        colors: g.colors().to_vec(),
    })
    .expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<EdgeColoredCompleteGraph> {
    let j: JsonGraph = serde_json::from_str(text)?;
    EdgeColoredCompleteGraph::new(j.n, j.k, j.colors)
}

const PENS: [&str; 12] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray40", "navy", "olive",
];

/// Graphviz rendering with one pen color per palette color; palettes larger
/// than the named pens fall back to evenly spaced HSV hues.
pub fn to_dot(g: &EdgeColoredCompleteGraph) -> String {
    let k = g.palette_size() as usize;
    let pen = |c: Color| -> String {
        let c = c as usize;
        if k <= PENS.len() {
            format!("\"{}\"", PENS[c - 1])
        } else {
            format!("\"{:.3} 0.85 0.85\"", (c - 1) as f64 / k as f64)
        }
    };
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for i in 0..g.order() {
        for j in i + 1..g.order() {
            let c = g.color(i, j);
            writeln!(out, "  {i} -- {j} [color={}, label=\"{c}\"];", pen(c)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
