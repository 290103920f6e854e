//! Text format: `labels k`, then one `lab i j A|N budget|inf` line per
//! ordered label pair, with 1-based label indices. Blank lines and lines
//! starting with `#` are ignored.

use crate::{Adj, Encoding, EncodingError, Ln};

fn err(line: usize, msg: impl Into<String>) -> EncodingError {
    EncodingError::Parse { line, msg: msg.into() }
}

pub fn parse_encoding(text: &str) -> Result<Encoding, EncodingError> {
    let mut enc: Option<Encoding> = None;
    let mut seen = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let tok: Vec<&str> = s.split_whitespace().collect();
        match tok[0] {
            "labels" => {
                if enc.is_some() {
                    return Err(err(line, "repeated labels line"));
                }
                let [_, k] = tok[..] else {
                    return Err(err(line, "expected `labels k`"));
                };
                let k: usize = k.parse().map_err(|_| err(line, format!("bad label count {k:?}")))?;
                if k == 0 {
                    return Err(err(line, "an encoding needs at least one label"));
                }
                enc = Some(Encoding::new(k));
                seen = vec![false; k * k];
            }
            "lab" => {
                let Some(e) = enc.as_mut() else {
                    return Err(err(line, "`lab` before `labels`"));
                };
                let [_, i, j, a, b] = tok[..] else {
                    return Err(err(line, "expected `lab i j A|N budget|inf`"));
                };
                let k = e.k();
                let index = |s: &str| -> Result<usize, EncodingError> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=k).contains(&x) => Ok(x - 1),
                        _ => Err(err(line, format!("label index {s:?} not in 1..={k}"))),
                    }
                };
                let (i, j) = (index(i)?, index(j)?);
                let adj = match a {
                    "A" => Adj::A,
                    "N" => Adj::N,
                    _ => return Err(err(line, format!("expected A or N, got {a:?}"))),
                };
                let ln = if b == "inf" {
                    Ln::Inf
                } else {
                    Ln::Finite(b.parse().map_err(|_| err(line, format!("bad budget {b:?}")))?)
                };
                if std::mem::replace(&mut seen[i * k + j], true) {
                    return Err(err(line, format!("pair ({}, {}) given twice", i + 1, j + 1)));
                }
                e.set(i, j, adj, ln);
            }
            other => return Err(err(line, format!("unknown directive {other:?}"))),
        }
    }
    let Some(enc) = enc else {
        return Err(err(0, "missing `labels` line"));
    };
    if let Some(p) = seen.iter().position(|&s| !s) {
        let k = enc.k();
        return Err(err(0, format!("pair ({}, {}) missing", p / k + 1, p % k + 1)));
    }
    Ok(enc)
}

pub fn write_encoding(enc: &Encoding) -> String {
    let k = enc.k();
    let mut out = format!("labels {k}\n");
    for i in 0..k {
        for j in 0..k {
            let a = match enc.l(i, j) {
                Adj::A => "A",
                Adj::N => "N",
            };
            let b = match enc.ln(i, j) {
                Ln::Finite(b) => b.to_string(),
                Ln::Inf => "inf".to_string(),
            };
            out.push_str(&format!("lab {} {} {a} {b}\n", i + 1, j + 1));
        }
    }
    out
}
