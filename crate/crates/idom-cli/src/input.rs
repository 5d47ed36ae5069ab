//! Graph input in the two supported text forms.

use idom::codec::{from_edge_list, from_graph6, CodecError};
use idom::SubcubicGraph;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g6" => Ok(InputFormat::Graph6),
            "edges" => Ok(InputFormat::EdgeList),
            other => Err(format!("unknown format '{other}' (expected g6 or edges)")),
        }
    }
}

/// Parses one graph from raw text. Graph6 input is the first nonempty
/// line; edge-list input is the whole text (order first, one edge per
/// line).
pub fn parse_graph(text: &str, format: InputFormat) -> Result<SubcubicGraph, CodecError> {
    match format {
        InputFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or(CodecError::Empty)?;
            from_graph6(line)
        }
        InputFormat::EdgeList => from_edge_list(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_formats() {
        let g = parse_graph("\nDFw\n", InputFormat::Graph6).unwrap();
        assert_eq!(g.n(), 5);
        let listed = parse_graph("3\n0 1\n1 2\n", InputFormat::EdgeList).unwrap();
        assert_eq!(listed.edge_count(), 2);
        assert!(parse_graph("", InputFormat::Graph6).is_err());
        assert!(parse_graph("DFw~~~", InputFormat::Graph6).is_err());
        assert_eq!("g6".parse::<InputFormat>(), Ok(InputFormat::Graph6));
        assert!("dot".parse::<InputFormat>().is_err());
    }
}
