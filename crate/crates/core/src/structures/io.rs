//! Structure files `{"n": 3, "statements": [[1, 2, []], [1, 3, [2]]]}` (1-based)
//! and line-oriented catalogs.

use std::fmt::Write as _;

use serde_json::Value;

use super::{CIStatement, CIStructure};
use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_GROUND};

fn as_element(v: &Value, n: usize) -> Result<usize> {
    let e = v
        .as_u64()
        .ok_or_else(|| Error::MalformedStatement(format!("{v} is not a positive integer")))?;
    if e == 0 || e as usize > n {
        return Err(Error::MalformedStatement(format!(
            "element {e} outside 1..={n}"
        )));
    }
    Ok(e as usize - 1)
}

fn parse_triple(v: &Value, n: usize) -> Result<CIStatement> {
    let parts = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::MalformedStatement(format!("{v} is not a triple [i, j, [K]]")))?;
    let i = as_element(&parts[0], n)?;
    let j = as_element(&parts[1], n)?;
    let cond_list = parts[2]
        .as_array()
        .ok_or_else(|| Error::MalformedStatement(format!("{} is not a list", parts[2])))?;
    let mut cond = VarSet::EMPTY;
    for k in cond_list {
        let k = as_element(k, n)?;
        if cond.contains(k) {
            return Err(Error::MalformedStatement(format!(
                "element {} repeated in conditioning set",
                k + 1
            )));
        }
        cond = cond.with(k);
    }
    CIStatement::new(i, j, cond)
}

fn parse_statements(v: &Value, n: usize) -> Result<CIStructure> {
    let list = v
        .as_array()
        .ok_or_else(|| Error::Parse("\"statements\" must be a list".into()))?;
    let stmts = list
        .iter()
        .map(|t| parse_triple(t, n))
        .collect::<Result<Vec<_>>>()?;
    CIStructure::from_statements(n, stmts)
}

fn parse_object(v: &Value) -> Result<CIStructure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("structure must be a JSON object".into()))?;
    if let Some(key) = obj.keys().find(|k| *k != "n" && *k != "statements") {
        return Err(Error::Parse(format!("unknown field '{key}'")));
    }
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer field \"n\"".into()))? as usize;
    if n > MAX_GROUND {
        return Err(Error::Parse(format!("n = {n} exceeds {MAX_GROUND}")));
    }
    let stmts = obj
        .get("statements")
        .ok_or_else(|| Error::Parse("missing field \"statements\"".into()))?;
    parse_statements(stmts, n)
}

pub fn read_structure(text: &str) -> Result<CIStructure> {
    parse_object(&serde_json::from_str(text)?)
}

/// One statement per line, sorted, with `i < j`.
pub fn write_structure(s: &CIStructure) -> String {
    let mut out = format!("{{\n  \"n\": {},\n  \"statements\": [", s.ground_size());
    for (k, st) in s.statements().enumerate() {
        let sep = if k == 0 { "" } else { "," };
        let cond: Vec<String> = st.cond.iter().map(|e| (e + 1).to_string()).collect();
        let _ = write!(
            out,
            "{sep}\n    [{}, {}, [{}]]",
            st.i + 1,
            st.j + 1,
            cond.join(", ")
        );
    }
    if !s.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

/// Reads a catalog: one structure per line, either a full structure object or
/// a bare list of triples. Bare lists need `n`, taken from an `n=<int>`
/// directive line or from `default_n`. Blank lines and `#` comments are skipped.
/// Errors carry the 1-based line number.
pub fn read_catalog(text: &str, default_n: Option<usize>) -> Result<Vec<CIStructure>> {
    let mut n = default_n;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |e: Error| Error::Parse(format!("line {}: {e}", lineno + 1));
        if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
            let value = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| at(Error::Parse(format!("bad directive '{line}'"))))?;
            n = Some(value);
            continue;
        }
        let value: Value = serde_json::from_str(line).map_err(|e| at(e.into()))?;
        let s = if value.is_object() {
            parse_object(&value)
        } else {
            let n = n.ok_or_else(|| {
                at(Error::Parse(
                    "bare statement list before any n=<int> directive".into(),
                ))
            })?;
            parse_statements(&value, n)
        }
        .map_err(at)?;
        out.push(s);
    }
    Ok(out)
}
