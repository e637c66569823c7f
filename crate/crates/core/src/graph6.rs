//! The short graph6 format (orders 0..=62 in the header byte; this crate
//! requires order >= 1).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some((&first, payload)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {:#04x} at position {pos} is outside 63..=126", bytes[pos])));
    }
    if first == 126 {
        return Err(Error::Graph6("long-format header (order > 62) is not supported".into()));
    }
    let order = (first - 63) as usize;
    if order == 0 {
        return Err(Error::Graph6("order 0 graphs are not representable".into()));
    }
    let bits = order * (order - 1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(Error::Graph6(format!(
            "truncated payload: expected {expected} bytes for order {order}, got {}",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(Error::Graph6(format!(
            "malformed: {} trailing bytes after payload for order {order}",
            payload.len() - expected
        )));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(order, edges)
}

/// Encodes `g` in the short graph6 format, without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let e3 = parse_graph6("B?").unwrap();
        assert_eq!((e3.order(), e3.size()), (3, 0));
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), k3);
    }

    #[test]
    fn reference_encoding_of_five_vertex_graph() {
        // A-C, A-E, B-D, D-E with A..E = 0..4 encodes as "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6(m)) if m.contains("trailing")));
        assert!(matches!(parse_graph6("A!"), Err(Error::Graph6(m)) if m.contains("outside")));
        assert!(matches!(parse_graph6("~?@?"), Err(Error::Graph6(m)) if m.contains("long-format")));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6(_))));
    }

    #[test]
    fn order_limit() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(to_graph6(&g), Err(Error::OrderTooLarge(63)));
        let g = Graph::from_edges(62, (0..61).map(|i| (i, i + 1))).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }
}
