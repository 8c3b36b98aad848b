//! Graph inputs: a graph file, or a short spec such as `k33`, `c6`,
//! `grid2x3` or `chain:2`.

use std::path::Path;

use kpfaff_core::graphs::{construct_family, Family, Graph};

use crate::report::CliError;

/// Parses a graph spec:
///
/// - `k<n>`: complete graph `K_n` (one digit), `k<m><n>`: `K_{m,n}` (two digits)
/// - `c<n>`: cycle, `p<n>`: path, `grid<r>x<c>`: grid
/// - `<family>:<param>`: a named family, e.g. `chain:2`, `knn:3`
pub fn parse_graph_spec(spec: &str) -> Result<Graph, CliError> {
    let bad = || CliError::Usage(format!("unrecognised graph spec '{spec}'"));
    let s = spec.trim().to_ascii_lowercase();
    if let Some((tag, param)) = s.split_once(':') {
        let param: usize = param.parse().map_err(|_| bad())?;
        return Ok(construct_family(Family::from_tag(tag, param)?)?);
    }
    let number = |t: &str| t.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = s.strip_prefix("grid") {
        let (r, c) = rest.split_once('x').ok_or_else(bad)?;
        return Ok(Graph::grid(number(r)?, number(c)?)?);
    }
    if let Some(rest) = s.strip_prefix('k') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return match rest.len() {
                1 => Ok(Graph::complete(number(rest)?)),
                2 => Ok(Graph::complete_bipartite(number(&rest[..1])?, number(&rest[1..])?)),
                _ => Err(bad()),
            };
        }
    }
    if let Some(rest) = s.strip_prefix('c') {
        return Ok(Graph::cycle(number(rest)?)?);
    }
    if let Some(rest) = s.strip_prefix('p') {
        return Ok(Graph::path(number(rest)?)?);
    }
    Err(bad())
}

pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    text.parse::<Graph>().map_err(CliError::from)
}

/// Exactly one of a graph file and a spec.
pub fn load_graph(file: Option<&Path>, spec: Option<&str>) -> Result<Graph, CliError> {
    match (file, spec) {
        (Some(path), None) => read_graph_file(path),
        (None, Some(spec)) => parse_graph_spec(spec),
        _ => Err(CliError::Usage("give either a graph file or --family".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_graph_spec("k33").unwrap(), Graph::complete_bipartite(3, 3));
        assert_eq!(parse_graph_spec("K4").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph_spec("c4").unwrap(), Graph::cycle(4).unwrap());
        assert_eq!(parse_graph_spec("grid2x3").unwrap(), Graph::grid(2, 3).unwrap());
        assert_eq!(parse_graph_spec("chain:1").unwrap().edge_count(), 9);
        assert!(parse_graph_spec("k333").is_err());
        assert!(parse_graph_spec("petersen").is_err());
        assert!(parse_graph_spec("chain:x").is_err());
    }
}
