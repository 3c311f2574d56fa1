//! graph6 encoding of simple undirected graphs.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, otherwise byte 126 followed by
//! three 6-bit big-endian groups of `n`, each plus 63. The upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` follows, six bits per byte, most
//! significant bit first, zero padded, each byte plus 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";
pub const MAX_ORDER: usize = 258_047;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::Graph6(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = match body {
        [] => return Err(Error::Graph6("truncated: empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6(format!("order exceeds {MAX_ORDER}"))),
        [126, a, b, c, rest @ ..] => {
            let n = [a, b, c]
                .iter()
                .fold(0usize, |acc, &&x| acc << 6 | (x - 63) as usize);
            (n, rest)
        }
        [126, ..] => return Err(Error::Graph6("truncated order field".into())),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() < need {
        return Err(Error::Graph6(format!(
            "truncated: {n} vertices need {need} data bytes, found {}",
            rest.len()
        )));
    }
    if rest.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after the adjacency data",
            rest.len() - need
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
        assert_eq!(to_graph6(&g).unwrap(), "D??");
    }

    #[test]
    fn k2_is_a_underscore() {
        // n = 2 -> 'A'; single bit x(0,1)=1 -> 0b100000 + 63 = '_'
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A ").is_err());
        assert!(parse_graph6("A_?").is_err());
        assert!(parse_graph6("~~??????").is_err());
        assert!(parse_graph6("~?").is_err());
        // n = 2 has one data bit; 'A' sets a padding bit
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_order_header() {
        let g = Graph::empty(63);
        let s = to_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
