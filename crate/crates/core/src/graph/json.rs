//! Adjacency-list JSON: `{"n": 5, "edges": [[0,1],[1,2]]}`.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn from_json(text: &str) -> Result<Graph> {
    let raw: EdgeList = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::new(raw.n, &edges)
}

pub fn to_json(g: &Graph) -> String {
    let raw = EdgeList {
        n: g.order(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serialises")
}

/// Reads one graph given either as JSON (first non-space byte `{`) or as a
/// graph6 line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        from_json(t)
    } else {
        super::graph6::decode(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::new(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let s = to_json(&g);
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        assert_eq!(from_json(&s).unwrap(), g);
        assert_eq!(parse_graph(&s).unwrap(), g);
        assert_eq!(parse_graph("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn rejects() {
        assert!(matches!(from_json("{\"n\":2}"), Err(Error::Parse(_))));
        assert!(matches!(
            from_json(r#"{"n":2,"edges":[[0,2]]}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
    }
}
