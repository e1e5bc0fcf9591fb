//! graph6 encoding and graph6/sparse6 decoding.
//!
//! Both formats pack 6 bits per printable byte (value + 63). graph6 lists the
//! upper triangle column by column; sparse6 (leading `:`) is an edge stream.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER6: &[u8] = b">>graph6<<";
const HEADER_S6: &[u8] = b">>sparse6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Standard graph6 bytes of `g` under its current labeling, no header, no newline.
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    out
}

pub fn emit_graph6_string(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}

fn check_printable(bytes: &[u8], base: usize) -> Result<()> {
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    Ok(())
}

/// Decodes the order prefix; returns `(n, bytes consumed)`.
fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let six = |k: usize| -> Result<usize> {
        match bytes.get(k) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - BIAS) as usize),
            Some(&b) => Err(err(base + k, format!("byte 0x{b:02x} outside graph6 range"))),
            None => Err(err(base + k, "truncated length header")),
        }
    };
    match bytes.first() {
        None => Err(err(base, "empty input")),
        Some(&b'~') => {
            if bytes.get(1) == Some(&b'~') {
                let mut n = 0;
                for k in 2..8 {
                    n = (n << 6) | six(k)?;
                }
                Ok((n, 8))
            } else {
                let mut n = 0;
                for k in 1..4 {
                    n = (n << 6) | six(k)?;
                }
                Ok((n, 4))
            }
        }
        Some(_) => Ok((six(0)?, 1)),
    }
}

/// Decodes one graph6 line. A `>>graph6<<` header and a trailing newline are
/// tolerated.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (body, base) = strip(text, HEADER6);
    check_printable(body, base)?;
    let (n, used) = decode_order(body, base)?;
    let data = &body[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if data.len() < need {
        return Err(err(base + body.len(), format!("expected {need} edge bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(err(base + used + need, "trailing bytes after graph6 body"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[need - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + used + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Decodes one sparse6 line (leading `:`). Multi-edges collapse; loops are
/// rejected since graphs here are simple.
pub fn parse_sparse6(text: &[u8]) -> Result<Graph> {
    let (body, base) = strip(text, HEADER_S6);
    match body.first() {
        Some(b':') => {}
        Some(b';') => return Err(err(base, "incremental sparse6 is not supported")),
        _ => return Err(err(base, "sparse6 must start with ':'")),
    }
    let body = &body[1..];
    let base = base + 1;
    check_printable(body, base)?;
    let (n, used) = decode_order(body, base)?;
    let data = &body[used..];
    let mut k = 0;
    while k < 64 && (1usize << k) < n {
        k += 1;
    }
    let mut g = Graph::empty(n);
    let total = data.len() * 6;
    let bit = |pos: usize| (data[pos / 6] - BIAS) >> (5 - pos % 6) & 1;
    let mut pos = 0;
    let mut v = 0usize;
    while pos < total {
        let b = bit(pos);
        pos += 1;
        if pos + k > total {
            break;
        }
        let mut x = 0usize;
        for _ in 0..k {
            x = (x << 1) | bit(pos) as usize;
            pos += 1;
        }
        if b == 1 {
            v += 1;
        }
        if x > v {
            v = x;
        } else if v < n {
            if x == v {
                return Err(err(base + used + (pos - 1) / 6, format!("loop at vertex {v}")));
            }
            g.add_edge(x, v);
        }
    }
    Ok(g)
}

/// Parses a line in either format.
pub fn parse_line(text: &[u8]) -> Result<Graph> {
    let (body, _) = strip(text, b"");
    if body.starts_with(b":") || body.starts_with(b";") || body.starts_with(HEADER_S6) {
        parse_sparse6(text)
    } else {
        parse_graph6(text)
    }
}

fn strip<'a>(text: &'a [u8], header: &[u8]) -> (&'a [u8], usize) {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &text[..end];
    if !header.is_empty() && body.starts_with(header) {
        (&body[header.len()..], header.len())
    } else {
        (body, 0)
    }
}
