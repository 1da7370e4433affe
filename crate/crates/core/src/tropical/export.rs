//! JSON and Graphviz renderings of enhanced covers.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HurwitzError, Result};
use crate::perms::SignSplitting;
use crate::tropical::cover::{Colour, Endpoint, EnhancedCover, KeyEdge};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(HurwitzError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonEnd {
    Inf(String),
    Vertex(usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct JsonEdge {
    from: JsonEnd,
    to: JsonEnd,
    weight: usize,
    colour: Option<Colour>,
    dotted_pair: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct JsonCover {
    degree: usize,
    genus: i64,
    pairs: Vec<[usize; 2]>,
    edges: Vec<JsonEdge>,
    splitting: Option<String>,
}

fn to_json_end(e: Endpoint) -> JsonEnd {
    match e {
        Endpoint::NegInf => JsonEnd::Inf("-inf".into()),
        Endpoint::PosInf => JsonEnd::Inf("+inf".into()),
        Endpoint::Vertex(v) => JsonEnd::Vertex(v),
    }
}

fn from_json_end(e: &JsonEnd, vertices: usize) -> Result<Endpoint> {
    match e {
        JsonEnd::Inf(s) if s == "-inf" => Ok(Endpoint::NegInf),
        JsonEnd::Inf(s) if s == "+inf" => Ok(Endpoint::PosInf),
        JsonEnd::Vertex(v) if *v < vertices => Ok(Endpoint::Vertex(*v)),
        other => Err(HurwitzError::MalformedCover(format!("bad endpoint {other:?}"))),
    }
}

/// Renders `cover` in the requested format. `splitting` is recorded when
/// given.
pub fn export(cover: &EnhancedCover, splitting: Option<&SignSplitting>, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(cover, splitting),
        Format::Dot => Ok(to_dot(cover)),
    }
}

pub fn to_json(cover: &EnhancedCover, splitting: Option<&SignSplitting>) -> Result<String> {
    serde_json::to_string_pretty(&document(cover, splitting)).map_err(|e| HurwitzError::MalformedCover(e.to_string()))
}

/// Several covers: a JSON array of documents, or one digraph per cover.
pub fn export_all<'a>(
    covers: impl IntoIterator<Item = &'a EnhancedCover>,
    splitting: Option<&SignSplitting>,
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => {
            let docs: Vec<JsonCover> = covers.into_iter().map(|c| document(c, splitting)).collect();
            serde_json::to_string_pretty(&docs).map_err(|e| HurwitzError::MalformedCover(e.to_string()))
        }
        Format::Dot => Ok(covers.into_iter().map(to_dot).collect()),
    }
}

fn document(cover: &EnhancedCover, splitting: Option<&SignSplitting>) -> JsonCover {
    let c = &cover.cover;
    let edges = c
        .edges
        .iter()
        .enumerate()
        .map(|(k, e)| JsonEdge {
            from: to_json_end(e.from),
            to: to_json_end(e.to),
            weight: e.weight,
            colour: cover.real.colours.get(k).copied().flatten(),
            dotted_pair: cover.real.dotted.iter().position(|p| p.contains(&k)),
        })
        .collect();
    JsonCover {
        degree: c.degree,
        genus: c.genus(),
        pairs: (0..c.pairs).map(|i| [2 * i, 2 * i + 1]).collect(),
        edges,
        splitting: splitting.map(|s| s.to_string()),
    }
}

/// Parses the JSON rendering back. Edge order need not be canonical.
pub fn from_json(text: &str) -> Result<(EnhancedCover, Option<SignSplitting>)> {
    let doc: JsonCover = serde_json::from_str(text).map_err(|e| HurwitzError::MalformedCover(e.to_string()))?;
    parse_document(doc)
}

/// Parses the array written by [`export_all`].
pub fn from_json_all(text: &str) -> Result<Vec<(EnhancedCover, Option<SignSplitting>)>> {
    let docs: Vec<JsonCover> = serde_json::from_str(text).map_err(|e| HurwitzError::MalformedCover(e.to_string()))?;
    docs.into_iter().map(parse_document).collect()
}

fn parse_document(doc: JsonCover) -> Result<(EnhancedCover, Option<SignSplitting>)> {
    for (i, p) in doc.pairs.iter().enumerate() {
        if *p != [2 * i, 2 * i + 1] {
            return Err(HurwitzError::MalformedCover(format!("pair {i} is {p:?}")));
        }
    }
    let vertices = 2 * doc.pairs.len();
    let mut counts = std::collections::BTreeMap::<usize, usize>::new();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        if let Some(p) = e.dotted_pair {
            *counts.entry(p).or_default() += 1;
        }
        edges.push(KeyEdge {
            from: from_json_end(&e.from, vertices)?,
            to: from_json_end(&e.to, vertices)?,
            weight: e.weight,
            colour: e.colour,
            dotted: e.dotted_pair.is_some(),
        });
    }
    if let Some((p, _)) = counts.iter().find(|(_, n)| **n != 2) {
        return Err(HurwitzError::MalformedCover(format!(
            "dotted pair {p} does not have two edges"
        )));
    }
    let cover = EnhancedCover::from_key_edges(doc.degree, doc.pairs.len(), edges)?;
    let splitting = doc.splitting.as_deref().map(str::parse).transpose()?;
    Ok((cover, splitting))
}

pub fn to_dot(cover: &EnhancedCover) -> String {
    let c = &cover.cover;
    let mut s = String::new();
    let _ = writeln!(s, "digraph cover {{");
    let _ = writeln!(s, "  rankdir=LR;");
    let _ = writeln!(s, "  node [shape=point];");
    for i in 0..c.pairs {
        let _ = writeln!(
            s,
            "  subgraph cluster_{i} {{ label=\"pair {i}\"; v{} v{}; }}",
            2 * i,
            2 * i + 1
        );
    }
    for (k, e) in c.edges.iter().enumerate() {
        let name = |p: Endpoint, side: &str| match p {
            Endpoint::Vertex(v) => format!("v{v}"),
            _ => format!("{side}{k}"),
        };
        let (a, b) = (name(e.from, "l"), name(e.to, "r"));
        if !e.from.is_inner() {
            let _ = writeln!(s, "  {a} [shape=none, label=\"\"];");
        }
        if !e.to.is_inner() {
            let _ = writeln!(s, "  {b} [shape=none, label=\"\"];");
        }
        let mut attrs = vec![format!("label=\"{}\"", e.weight)];
        match cover.real.colours.get(k).copied().flatten() {
            Some(col) => attrs.push(format!("color={}", col.name())),
            None if e.weight % 2 == 1 => attrs.push("color=black, penwidth=2".into()),
            None => {}
        }
        if cover.is_dotted(k) {
            attrs.push("style=dotted".into());
        }
        let _ = writeln!(s, "  {a} -> {b} [{}];", attrs.join(", "));
    }
    s.push_str("}\n");
    s
}
