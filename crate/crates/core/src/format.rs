//! Line-oriented graph files, corpus manifests and corpus writing.
//!
//! Graph file:
//! ```text
//! c comment
//! p split <n> <m>
//! k <v>          optional clique-side hint, one per line
//! e <u> <v>
//! ```

use crate::gen::{generate, GenError, GenKind, GenSpec};
use crate::graph::{build_graph, Graph, Vertex};
use crate::split::{split_partition, NotSplit, SplitPartition};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    NotSplit(#[from] NotSplit),
    #[error("clique hints do not give a split partition")]
    BadHint,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Gen(#[from] GenError),
}

fn perr(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// vertices given on `k` lines
    pub clique_hint: Vec<Vertex>,
    pub comments: Vec<String>,
}

impl GraphFile {
    /// Partition from the hints when present, recognised otherwise.
    pub fn partition(&self) -> Result<SplitPartition, FormatError> {
        if self.clique_hint.is_empty() {
            return Ok(split_partition(&self.graph)?);
        }
        let indep: Vec<Vertex> = self.graph.vertices().filter(|v| !self.clique_hint.contains(v)).collect();
        let p = SplitPartition::from_sets(self.graph.n(), &self.clique_hint, &indep);
        if p.check(&self.graph) {
            Ok(p)
        } else {
            Err(FormatError::BadHint)
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut hint = Vec::new();
    let mut comments = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        let mut it = t.split_whitespace();
        let tag = it.next().unwrap();
        let rest: Vec<&str> = it.collect();
        if tag == "c" {
            comments.push(t[1..].trim().to_string());
            continue;
        }
        let num = |s: &str| -> Result<i64, FormatError> { s.parse::<i64>().map_err(|_| perr(line, format!("bad number {s:?}"))) };
        let vertex = |s: &str| -> Result<Vertex, FormatError> {
            let x = num(s)?;
            let n = header.map(|h| h.0).unwrap_or(0) as i64;
            if x < 1 || x > n {
                return Err(perr(line, "vertex out of range"));
            }
            Ok(x as Vertex)
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(perr(line, "duplicate header"));
                }
                if rest.len() != 3 || rest[0] != "split" {
                    return Err(perr(line, "expected `p split <n> <m>`"));
                }
                let (n, m) = (num(rest[1])?, num(rest[2])?);
                if n < 1 || m < 0 {
                    return Err(perr(line, "n must be positive and m non-negative"));
                }
                header = Some((n as usize, m as usize));
            }
            "k" | "e" if header.is_none() => return Err(perr(line, "data before `p` header")),
            "k" => {
                if rest.len() != 1 {
                    return Err(perr(line, "expected `k <v>`"));
                }
                hint.push(vertex(rest[0])?);
            }
            "e" => {
                if rest.len() != 2 {
                    return Err(perr(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (vertex(rest[0])?, vertex(rest[1])?);
                if u == v {
                    return Err(perr(line, "self-loop"));
                }
                edges.push((u.min(v), u.max(v)));
            }
            other => return Err(perr(line, format!("unknown line tag {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing `p split <n> <m>` header"))?;
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != m {
        return Err(perr(0, format!("header says {m} edges, found {}", edges.len())));
    }
    hint.sort_unstable();
    hint.dedup();
    let graph = build_graph(n, &edges).map_err(|e| perr(0, e.to_string()))?;
    Ok(GraphFile { graph, clique_hint: hint, comments })
}

pub fn render_graph(g: &Graph, clique: Option<&[Vertex]>, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        writeln!(s, "c {c}").unwrap();
    }
    writeln!(s, "p split {} {}", g.n(), g.m()).unwrap();
    for &k in clique.unwrap_or(&[]) {
        writeln!(s, "k {k}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn read_graph(path: &Path) -> Result<GraphFile, FormatError> {
    parse_graph(&fs::read_to_string(path)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub file: String,
    pub seed: u64,
    pub kind: GenKind,
    /// "YES" for planted instances, "unknown" otherwise
    pub expected: String,
    /// planted path or cycle, as `path ...` / `cycle ...`
    pub planted: Option<(bool, Vec<Vertex>)>,
}

impl ManifestEntry {
    pub fn to_line(&self) -> String {
        let mut s = format!("instance {} seed {} kind {} expected {}", self.file, self.seed, self.kind, self.expected);
        if let Some((cycle, seq)) = &self.planted {
            s.push_str(if *cycle { " cycle" } else { " path" });
            for x in seq {
                write!(s, " {x}").unwrap();
            }
        }
        s
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>, FormatError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t: Vec<&str> = raw.split_whitespace().collect();
        if t.is_empty() {
            continue;
        }
        let shape_ok = t.len() >= 8 && t[0] == "instance" && t[2] == "seed" && t[4] == "kind" && t[6] == "expected";
        if !shape_ok {
            return Err(perr(line, "expected `instance <file> seed <s> kind <k> expected <v>`"));
        }
        let seed = t[3].parse().map_err(|_| perr(line, "bad seed"))?;
        let kind = t[5].parse().map_err(|_| perr(line, "bad kind"))?;
        let planted = match t.get(8) {
            None => None,
            Some(&w @ ("path" | "cycle")) => {
                let seq: Result<Vec<Vertex>, _> = t[9..].iter().map(|x| x.parse()).collect();
                Some((w == "cycle", seq.map_err(|_| perr(line, "bad planted vertex"))?))
            }
            Some(_) => return Err(perr(line, "unexpected trailing fields")),
        };
        out.push(ManifestEntry { file: t[1].to_string(), seed, kind, expected: t[7].to_string(), planted });
    }
    Ok(out)
}

pub fn instance_file_name(spec: &GenSpec) -> String {
    format!("{}_{}_{}_{}.graph", spec.kind.name().to_ascii_lowercase(), spec.nk, spec.ni, spec.seed)
}

/// Generates every spec into `dir`, writing `manifest.txt` alongside.
pub fn write_corpus(specs: &[GenSpec], dir: &Path) -> Result<Vec<ManifestEntry>, FormatError> {
    fs::create_dir_all(dir)?;
    let mut entries = Vec::with_capacity(specs.len());
    for spec in specs {
        let gd = generate(spec)?;
        let file = instance_file_name(spec);
        let comments = vec![format!("kind {} nk {} ni {} seed {}", spec.kind, spec.nk, spec.ni, spec.seed)];
        fs::write(dir.join(&file), render_graph(&gd.graph, Some(&gd.partition.clique), &comments))?;
        entries.push(ManifestEntry {
            file,
            seed: spec.seed,
            kind: spec.kind,
            expected: if gd.planted.is_some() { "YES".into() } else { "unknown".into() },
            planted: gd.planted.map(|p| (p.cycle, p.sequence)),
        });
    }
    let text: String = entries.iter().map(|e| e.to_line() + "\n").collect();
    fs::write(dir.join("manifest.txt"), text)?;
    Ok(entries)
}

/// Graph files of a corpus directory: the manifest order when present, sorted names otherwise.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, FormatError> {
    let manifest = dir.join("manifest.txt");
    if manifest.exists() {
        return Ok(parse_manifest(&fs::read_to_string(manifest)?)?.into_iter().map(|e| dir.join(e.file)).collect());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_graph("c x\np split 5 1\ne 0 5\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: vertex out of range");
        let err = parse_graph("p split 2 1\nx 1 2\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: unknown line tag \"x\"");
        assert!(parse_graph("p split 3 2\ne 1 2\ne 2 1\n").is_err());
    }

    #[test]
    fn render_round_trips() {
        let g = build_graph(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let f = parse_graph(&render_graph(&g, Some(&[1, 2, 3]), &["hello".into()])).unwrap();
        assert_eq!(f.graph, g);
        assert_eq!(f.clique_hint, vec![1, 2, 3]);
        assert_eq!(f.comments, vec!["hello".to_string()]);
        assert_eq!(f.partition().unwrap().independent, vec![4]);
    }

    #[test]
    fn manifest_round_trips() {
        let e = ManifestEntry {
            file: "a.graph".into(),
            seed: 7,
            kind: GenKind::PlantedHc,
            expected: "YES".into(),
            planted: Some((true, vec![1, 2, 3])),
        };
        assert_eq!(e.to_line(), "instance a.graph seed 7 kind PLANTED_HC expected YES cycle 1 2 3");
        assert_eq!(parse_manifest(&e.to_line()).unwrap(), vec![e]);
    }
}
