//! Network files.
//!
//! JSON: `{"n": 3, "edges": [[0, 1, 0.2], [1, 2, "0.95"]]}` with zero-based
//! indices; weights may be numbers or decimal strings and omitted entries
//! are zero. A `.csv` extension selects an edge list with header `i,j,w`,
//! where `n` is one more than the largest index seen.
//!
//! Parsing rejects malformed entries (negative or non-finite weights,
//! out-of-range or repeated edges). Model assumptions such as the row-sum
//! bound are left to [`super::validate`].

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::Network;
use crate::error::{Error, Result};

/// On-disk form written by [`save`].
#[derive(Debug, Serialize, Deserialize)]
pub struct NetworkFile {
    pub n: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

impl From<&Network> for NetworkFile {
    fn from(net: &Network) -> Self {
        Self {
            n: net.n(),
            edges: net.edges().collect(),
        }
    }
}

impl Serialize for Network {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NetworkFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Network {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let file = NetworkFile::deserialize(d)?;
        let mut net = Network::empty(file.n);
        for (i, j, w) in file.edges {
            if i >= file.n || j >= file.n || !(w >= 0.0 && w.is_finite()) {
                return Err(D::Error::custom(format!("bad edge ({i}, {j}, {w})")));
            }
            net.set(i, j, w);
        }
        Ok(net)
    }
}

pub fn to_json_string(net: &Network) -> String {
    serde_json::to_string_pretty(&NetworkFile::from(net)).expect("network serializes")
}

pub fn save(net: &Network, path: impl AsRef<Path>) -> Result<()> {
    let mut text = to_json_string(net);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<Network> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let is_csv = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        parse_csv(&text, path)
    } else {
        parse_json(&text, path)
    }
}

struct Builder {
    path: PathBuf,
    entries: Vec<(usize, usize, f64)>,
    seen: HashSet<(usize, usize)>,
}

impl Builder {
    fn new(path: &Path) -> Self {
        Self {
            path: path.to_path_buf(),
            entries: Vec::new(),
            seen: HashSet::new(),
        }
    }

    fn err(&self, message: String) -> Error {
        Error::Parse {
            path: self.path.clone(),
            message,
        }
    }

    fn push(&mut self, at: &str, i: usize, j: usize, w: f64) -> Result<()> {
        if !w.is_finite() {
            return Err(self.err(format!("{at}: weight {w} is not finite")));
        }
        if w < 0.0 {
            return Err(self.err(format!("{at}: negative weight {w}")));
        }
        if !self.seen.insert((i, j)) {
            return Err(self.err(format!("{at}: duplicate edge ({i}, {j})")));
        }
        self.entries.push((i, j, w));
        Ok(())
    }

    fn finish(self, n: usize) -> Result<Network> {
        let mut net = Network::empty(n);
        for &(i, j, w) in &self.entries {
            if i >= n || j >= n {
                return Err(self.err(format!("edge ({i}, {j}) out of range for n = {n}")));
            }
            net.set(i, j, w);
        }
        Ok(net)
    }
}

fn parse_weight(v: &Value) -> Option<f64> {
    match v {
        Value::Number(x) => x.as_f64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn parse_json(text: &str, path: &Path) -> Result<Network> {
    let mut b = Builder::new(path);
    let root: Value = serde_json::from_str(text).map_err(|e| b.err(e.to_string()))?;
    let obj = root
        .as_object()
        .ok_or_else(|| b.err("top level must be an object with fields `n` and `edges`".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| b.err("field `n` must be a nonnegative integer".into()))?
        as usize;
    let edges = match obj.get("edges") {
        None => &[][..],
        Some(Value::Array(a)) => a.as_slice(),
        Some(_) => return Err(b.err("field `edges` must be an array".into())),
    };
    for (k, e) in edges.iter().enumerate() {
        let at = format!("edges[{k}]");
        let triple = e
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| b.err(format!("{at}: expected [i, j, w]")))?;
        let idx = |v: &Value, name: &str| {
            v.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| b.err(format!("{at}: `{name}` must be a nonnegative integer")))
        };
        let i = idx(&triple[0], "i")?;
        let j = idx(&triple[1], "j")?;
        let w = parse_weight(&triple[2])
            .ok_or_else(|| b.err(format!("{at}: `w` must be a number or decimal string")))?;
        b.push(&at, i, j, w)?;
    }
    b.finish(n)
}

fn parse_csv(text: &str, path: &Path) -> Result<Network> {
    let mut b = Builder::new(path);
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| b.err(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["i", "j", "w"] {
        return Err(b.err(format!(
            "line 1: expected header `i,j,w`, found `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut n = 0;
    for rec in reader.records() {
        let rec = rec.map_err(|e| b.err(e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let at = format!("line {line}");
        let field = |k: usize, name: &str| {
            rec.get(k)
                .ok_or_else(|| b.err(format!("{at}: missing field `{name}`")))
        };
        let i: usize = field(0, "i")?
            .parse()
            .map_err(|_| b.err(format!("{at}: `i` must be a nonnegative integer")))?;
        let j: usize = field(1, "j")?
            .parse()
            .map_err(|_| b.err(format!("{at}: `j` must be a nonnegative integer")))?;
        let w: f64 = field(2, "w")?
            .parse()
            .map_err(|_| b.err(format!("{at}: `w` is not a number")))?;
        b.push(&at, i, j, w)?;
        n = n.max(i + 1).max(j + 1);
    }
    b.finish(n)
}
