use std::path::Path;

use cutplex::{Complex, Error, Family, Graph, Result};

/// A graph argument: family DSL string or a path to the text format.
pub struct GraphInput {
    pub spec: String,
    pub graph: Graph,
    pub family: Option<Family>,
}

pub fn load_graph(arg: &str) -> Result<GraphInput> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        return Ok(GraphInput { spec: arg.to_string(), graph: Graph::from_text(&text)?, family: None });
    }
    let family: Family = arg.parse()?;
    let graph = family.build()?;
    Ok(GraphInput { spec: family.to_string(), graph, family: Some(family) })
}

pub fn load_complex(arg: &str) -> Result<Complex> {
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
    Complex::from_json(&value)
}

/// Comma-separated 1-based vertex numbers, returned 0-based.
pub fn parse_order(list: &str, n: usize) -> Result<Vec<usize>> {
    list.split(',')
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad vertex `{t}` in order")))?;
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            Ok(v - 1)
        })
        .collect()
}
