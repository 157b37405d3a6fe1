//! graph6 text encoding: order byte(s), then the upper triangle of the
//! adjacency matrix column by column, six bits per printable character.

use std::io::BufRead;

use super::{bit, Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend_from_slice(&[126, 63, 63 + (n >> 6) as u8, 63 + (n & 63) as u8]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let bad = |msg: &str| Error::Graph6(format!("{msg}: {line:?}"));
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::OrderOutOfRange(MAX_ORDER + 1));
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let bits = n * (n - 1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} adjacency bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && (body[body.len() - 1] - 63) & ((1u8 << (6 - bits % 6)) - 1) != 0 {
        return Err(bad("non-zero padding bits"));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Reads one graph per non-empty line.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() {
            out.push(from_graph6(line)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, generalized_mycielski};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&cycle(5).unwrap()), "Dhc");
        // Petersen graph, outer 5-cycle then inner pentagram.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(to_graph6(&petersen), "IheA@GUAo");
    }

    #[test]
    fn decode_known() {
        assert_eq!(from_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), complete(3).unwrap());
        assert_eq!(from_graph6("J?AKagjXfo?").unwrap().order(), 11);
        assert_eq!(
            from_graph6(&to_graph6(&generalized_mycielski(2).unwrap())).unwrap(),
            generalized_mycielski(2).unwrap()
        );
    }

    #[test]
    fn malformed_lines() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("B").is_err());
        assert!(from_graph6("Bww").is_err());
        assert!(from_graph6("B\x10").is_err());
        // Padding bits must be zero: K3 uses three bits.
        assert!(from_graph6("Bx").is_err());
        assert_eq!(from_graph6("?"), Err(Error::OrderOutOfRange(0)));
        // Order 65 in long form.
        let mut long = vec![126u8, 63, 64, 64];
        long.extend(std::iter::repeat(63u8).take((65 * 64 / 2usize).div_ceil(6)));
        assert_eq!(
            from_graph6(std::str::from_utf8(&long).unwrap()),
            Err(Error::OrderOutOfRange(65))
        );
    }

    #[test]
    fn long_form_orders() {
        for n in [62usize, 63, 64] {
            let g = cycle(n).unwrap();
            let s = to_graph6(&g);
            if n > 62 {
                assert!(s.starts_with('~'));
            }
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut state = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 3 == 0 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
