//! Simple undirected graphs: construction, text formats, degree statistics.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..order()`.
///
/// Neighbor lists are kept sorted; the constructor rejects self-loops and
/// repeated edges, so adjacency is always symmetric and simple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Every endpoint must be `< order`.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); order];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            if !sets[u].insert(v) {
                return Err(Error::Validation(format!("duplicate edge ({u}, {v})")));
            }
            sets[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            edge_count,
        })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    /// Open neighborhood N(v), sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}, sorted ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let nbrs = &self.adjacency[v];
        let split = nbrs.partition_point(|&u| u < v);
        out.extend_from_slice(&nbrs[..split]);
        out.push(v);
        out.extend_from_slice(&nbrs[split..]);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Every vertex has even degree.
    pub fn is_even(&self) -> bool {
        self.adjacency.iter().all(|nbrs| nbrs.len() % 2 == 0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self.adjacency.iter().map(Vec::len).collect())
    }

    /// Edge-list text: a `# n=<order> m=<size>` comment followed by one
    /// `u v` line per edge, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={} m={}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DIMACS `p edge` text with 1-based ids, edges sorted.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

/// Order, size, extreme degrees and parity counts of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Ascending degree sequence d_1 ≤ … ≤ d_n.
    pub degrees_sorted: Vec<usize>,
    pub even_count: usize,
    pub odd_count: usize,
}

impl DegreeProfile {
    /// Builds a profile from an arbitrary (unsorted) degree list.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        let n = degrees.len();
        let sum: usize = degrees.iter().sum();
        let even_count = degrees.iter().filter(|&&d| d % 2 == 0).count();
        DegreeProfile {
            n,
            m: sum / 2,
            min_degree: degrees.first().copied().unwrap_or(0),
            max_degree: degrees.last().copied().unwrap_or(0),
            degrees_sorted: degrees,
            even_count,
            odd_count: n - even_count,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree
    }

    /// Σ_{i=1..k} ⌈(d_i + 1)/2⌉ over the k smallest degrees.
    pub fn half_closed_sum(&self, k: usize) -> usize {
        self.degrees_sorted[..k].iter().map(|&d| (d + 2) / 2).sum()
    }
}

fn parse_id(token: &str, line_no: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Parse {
        line: line_no,
        message: format!("expected a nonnegative integer, found `{token}`"),
    })
}

/// Parses whitespace-separated `u v` lines with 0-based ids. `#` starts a
/// comment. The order is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_order(text, None)
}

/// Like [`parse_edge_list`], but `order` (when given) fixes the vertex count
/// so trailing isolated vertices can be expressed. It must cover every id.
pub fn parse_edge_list_with_order(text: &str, order: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v`, found {} tokens", tokens.len()),
            });
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let implied = max_id.map_or(0, |m| m + 1);
    let order = match order {
        Some(o) if o < implied => {
            return Err(Error::Validation(format!(
                "order {o} is smaller than the largest vertex id {}",
                implied - 1
            )))
        }
        Some(o) => o,
        None => implied,
    };
    Graph::from_edges(order, edges)
}

/// Parses DIMACS `p edge n m` text with `e u v` lines (1-based ids).
/// `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "duplicate `p` header".into(),
                    });
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected `p edge <n> <m>`".into(),
                    });
                }
                header = Some((parse_id(tokens[2], line_no)?, parse_id(tokens[3], line_no)?));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "edge line before `p edge` header".into(),
                    });
                };
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected `e <u> <v>`".into(),
                    });
                }
                let u = parse_id(tokens[1], line_no)?;
                let v = parse_id(tokens[2], line_no)?;
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex id {id} outside 1..={n}"),
                        });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown line type `{other}`"),
                })
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Validation(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

/// Picks DIMACS when the first meaningful line is a `p` or `c` line,
/// edge-list otherwise.
pub fn parse_auto(text: &str, order: Option<usize>) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p") | Some("c") => {
            let g = parse_dimacs(text)?;
            match order {
                Some(o) if o != g.order() => Err(Error::Validation(format!(
                    "order override {o} conflicts with DIMACS header {}",
                    g.order()
                ))),
                _ => Ok(g),
            }
        }
        _ => parse_edge_list_with_order(text, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn edge_list_duplicate_rejected() {
        assert!(matches!(parse_edge_list("0 1\n0 1"), Err(Error::Validation(_))));
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(Error::Validation(_))));
    }

    #[test]
    fn edge_list_self_loop_rejected() {
        assert!(matches!(parse_edge_list("2 2"), Err(Error::Validation(_))));
    }

    #[test]
    fn edge_list_comment_and_max_id() {
        let g = parse_edge_list("# c\n0 3").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 1);
        assert_eq!(g.degree(1), 0);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn edge_list_blank_and_empty() {
        let g = parse_edge_list("\n\n# nothing here\n").unwrap();
        assert_eq!(g.order(), 0);
    }

    #[test]
    fn edge_list_malformed_reports_line() {
        match parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("0 1 2") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_list_order_override() {
        let g = parse_edge_list_with_order("0 1", Some(5)).unwrap();
        assert_eq!(g.order(), 5);
        assert!(parse_edge_list_with_order("0 4", Some(3)).is_err());
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 3 1").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("e 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("c only a comment"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p edge 3 2\ne 1 2"), Err(Error::Validation(_))));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 0 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dimacs_isolated() {
        let g = parse_dimacs("p edge 4 0").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn serialization_is_canonical() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.to_edge_list(), "# n=4 m=3\n0 1\n0 2\n2 3\n");
        assert_eq!(g.to_dimacs(), "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n");
    }

    #[test]
    fn auto_detection() {
        let g = parse_auto("c hi\np edge 3 1\ne 1 3\n", None).unwrap();
        assert_eq!(g.order(), 3);
        let g = parse_auto("# x\n0 1\n", Some(3)).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = Graph::from_edges(4, [(0, 2), (2, 3), (1, 2)]).unwrap();
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(0), vec![0, 2]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn half_closed_sum_prefix() {
        let p = DegreeProfile::new(vec![4, 2, 2, 4, 2, 4]);
        assert_eq!(p.degrees_sorted, vec![2, 2, 2, 4, 4, 4]);
        assert_eq!(p.half_closed_sum(3), 6);
        assert_eq!(p.half_closed_sum(6), 15);
    }
}
