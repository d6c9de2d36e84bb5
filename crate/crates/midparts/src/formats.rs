//! File formats: the edge-list tree format, DOT export with middle
//! parts annotated, and JSON report serialization.
//!
//! Edge-list format: `#` starts a comment line; the first data line is
//! the order `n`; a rooted file adds a line `root R` before the edges;
//! every following line is one edge `u v` with `0 <= u,v < n`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::tree_core::{MiddleReport, RootedTree, Tree, TreeError};
use crate::verify::VerificationReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected the vertex count, got {got:?}")]
    BadOrder { line: usize, got: String },
    #[error("line {line}: malformed edge {got:?}")]
    BadEdge { line: usize, got: String },
    #[error("line {line}: malformed root line {got:?}")]
    BadRoot { line: usize, got: String },
    #[error("line {line}: root {root} out of range")]
    RootRange { line: usize, root: usize },
    #[error("line {line}: {source}")]
    Tree { line: usize, source: TreeError },
    #[error("file is empty")]
    Empty,
}

/// A parsed edge-list file: the tree plus the optional root.
#[derive(Debug, Clone)]
pub struct ParsedTree {
    pub tree: Tree,
    pub root: Option<usize>,
}

impl ParsedTree {
    pub fn rooted(&self) -> Option<RootedTree> {
        self.root.map(|r| RootedTree::new(self.tree.clone(), r).expect("validated root"))
    }
}

/// Parses one tree in edge-list format. Errors carry the offending
/// line number.
pub fn parse_edge_list(text: &str) -> Result<ParsedTree, ParseError> {
    let mut n: Option<(usize, usize)> = None; // (value, line)
    let mut root: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if n.is_none() {
            let value = content
                .parse::<usize>()
                .map_err(|_| ParseError::BadOrder { line, got: content.to_string() })?;
            n = Some((value, line));
            continue;
        }
        if let Some(rest) = content.strip_prefix("root") {
            if root.is_some() || !edges.is_empty() {
                return Err(ParseError::BadRoot { line, got: content.to_string() });
            }
            let value = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| ParseError::BadRoot { line, got: content.to_string() })?;
            root = Some((value, line));
            continue;
        }
        let mut it = content.split_whitespace();
        let parse_vertex = |s: Option<&str>| {
            s.and_then(|x| x.parse::<usize>().ok())
                .ok_or(ParseError::BadEdge { line, got: content.to_string() })
        };
        let u = parse_vertex(it.next())?;
        let v = parse_vertex(it.next())?;
        if it.next().is_some() {
            return Err(ParseError::BadEdge { line, got: content.to_string() });
        }
        edges.push((u, v));
        edge_lines.push(line);
    }
    let (n, n_line) = n.ok_or(ParseError::Empty)?;
    let tree = Tree::build(n, &edges).map_err(|e| {
        let line = match &e {
            TreeError::VertexOutOfRange { edge, .. }
            | TreeError::SelfLoop { edge, .. }
            | TreeError::DuplicateEdge { edge, .. } => edge_lines[edge - 1],
            _ => n_line,
        };
        ParseError::Tree { line, source: e }
    })?;
    if let Some((r, line)) = root {
        if r >= tree.n() {
            return Err(ParseError::RootRange { line, root: r });
        }
    }
    Ok(ParsedTree { tree, root: root.map(|(r, _)| r) })
}

/// Writes a tree in edge-list format, with optional leading comments.
pub fn write_edge_list(tree: &Tree, root: Option<usize>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{}", tree.n());
    if let Some(r) = root {
        let _ = writeln!(out, "root {r}");
    }
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT export with middle-part membership encoded as node attributes
/// (`middle="center+core"` style) and a fill color per primary set.
pub fn to_dot(tree: &Tree, report: &MiddleReport, root: Option<usize>) -> String {
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for v in 0..tree.n() {
        let mut memberships = Vec::new();
        if report.center.contains(&v) {
            memberships.push("center");
        }
        if report.centroid.contains(&v) {
            memberships.push("centroid");
        }
        if report.core.contains(&v) {
            memberships.push("core");
        }
        let mut attrs = vec![format!("label=\"{v}\"")];
        if root == Some(v) {
            attrs.push("shape=doublecircle".to_string());
        }
        if !memberships.is_empty() {
            attrs.push(format!("middle=\"{}\"", memberships.join("+")));
            let color = match memberships[0] {
                "center" => "lightblue",
                "centroid" => "palegreen",
                _ => "salmon",
            };
            attrs.push(format!("style=filled, fillcolor={color}"));
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Serializes reports as a JSON array; all counts are decimal strings.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Serializes a minimization outcome; the count is a decimal string.
pub fn optimal_to_json(result: &crate::verify::OptimalResult) -> String {
    let value = serde_json::json!({
        "n": result.n,
        "h": result.h,
        "min": result.min.to_string(),
        "profiles": result.profiles.iter().map(|p| p.ks.clone()).collect::<Vec<_>>(),
        "trees": result.trees,
        "agreement": result.agreement,
    });
    serde_json::to_string_pretty(&value).expect("result serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::middle_report;

    const FIG2: &str = "# demo tree\n9\n0 1\n1 2\n2 3\n3 4\n4 5\n0 6\n0 7\n0 8\n";

    #[test]
    fn parse_and_write_round_trip() {
        let parsed = parse_edge_list(FIG2).unwrap();
        assert_eq!(parsed.tree.n(), 9);
        assert_eq!(parsed.root, None);
        let text = write_edge_list(&parsed.tree, None, &["demo tree".into()]);
        let again = parse_edge_list(&text).unwrap();
        let sorted = |t: &Tree| {
            let mut e = t.edges().to_vec();
            e.sort_unstable();
            e
        };
        assert_eq!(sorted(&again.tree), sorted(&parsed.tree));
    }

    #[test]
    fn rooted_files() {
        let text = "4\nroot 2\n0 1\n1 2\n2 3\n";
        let parsed = parse_edge_list(text).unwrap();
        assert_eq!(parsed.root, Some(2));
        let rt = parsed.rooted().unwrap();
        assert_eq!(rt.height(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_edge_list("4\n0 1\n1 9\n2 3\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: edge 2: vertex 9 out of range");
        let err = parse_edge_list("4\n0 1\n2 3\n").unwrap_err();
        assert!(err.to_string().contains("need exactly 3 edges"));
        let err = parse_edge_list("4\nroot 7\n0 1\n1 2\n2 3\n").unwrap_err();
        assert_eq!(err, ParseError::RootRange { line: 2, root: 7 });
        let err = parse_edge_list("x\n").unwrap_err();
        assert!(matches!(err, ParseError::BadOrder { line: 1, .. }));
        assert_eq!(parse_edge_list("# nothing\n").unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn dot_encodes_memberships() {
        let parsed = parse_edge_list(FIG2).unwrap();
        let report = middle_report(&parsed.tree);
        let dot = to_dot(&parsed.tree, &report, None);
        assert!(dot.contains("2 [label=\"2\", middle=\"center\""));
        assert!(dot.contains("1 [label=\"1\", middle=\"centroid\""));
        assert!(dot.contains("0 [label=\"0\", middle=\"core\""));
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn json_reports_use_decimal_strings() {
        let mut report = VerificationReport::new("demo");
        report.extremum = Some("12345678901234567890".to_string());
        let json = reports_to_json(&[report]);
        assert!(json.contains("\"12345678901234567890\""));
    }
}
