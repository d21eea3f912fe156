//! Certificates: Hamiltonian paths or checkable refutations.

use crate::graph::{components_after_removal, is_connected, Graph, Vertex};
use crate::split::split_partition;
use crate::structure::{structure_report, PieceKind};
use serde::Serialize;
use std::fmt::{self, Write as _};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    CutSet(Vec<Vertex>),
    TooManyDegreeOne(Vec<Vertex>),
    /// I-K paths and short cycles of H, each forcing a path endpoint.
    TooManyIKPaths(Vec<Vec<Vertex>>),
    ShortIIPath(Vec<Vertex>),
    /// smallest vertex of each component
    Disconnected(Vec<Vertex>),
    Exhaustive,
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::CutSet(_) => "CutSet",
            Witness::TooManyDegreeOne(_) => "TooManyDegreeOne",
            Witness::TooManyIKPaths(_) => "TooManyIKPaths",
            Witness::ShortIIPath(_) => "ShortIIPath",
            Witness::Disconnected(_) => "Disconnected",
            Witness::Exhaustive => "Exhaustive",
        }
    }

    fn payload(&self) -> String {
        let join = |v: &[Vertex]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Witness::CutSet(v)
            | Witness::TooManyDegreeOne(v)
            | Witness::ShortIIPath(v)
            | Witness::Disconnected(v) => join(v),
            Witness::TooManyIKPaths(ps) => ps.iter().map(|p| join(p)).collect::<Vec<_>>().join(" | "),
            Witness::Exhaustive => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceRecord {
    pub claim: String,
    pub case: String,
}

impl TraceRecord {
    pub fn new(claim: impl Into<String>, case: impl Into<String>) -> Self {
        TraceRecord { claim: claim.into(), case: case.into() }
    }
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.claim, self.case)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub path: Vec<Vertex>,
    pub witness: Option<Witness>,
    pub trace: Vec<TraceRecord>,
}

impl Certificate {
    pub fn yes(path: Vec<Vertex>, trace: Vec<TraceRecord>) -> Self {
        Certificate { verdict: Verdict::Yes, path, witness: None, trace }
    }

    pub fn no(witness: Witness, trace: Vec<TraceRecord>) -> Self {
        Certificate { verdict: Verdict::No, path: Vec::new(), witness: Some(witness), trace }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let v = match self.verdict {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
        };
        writeln!(s, "verdict {v}").unwrap();
        if self.verdict == Verdict::Yes {
            let p: Vec<String> = self.path.iter().map(|x| x.to_string()).collect();
            writeln!(s, "path {}", p.join(" ")).unwrap();
        }
        if let Some(w) = &self.witness {
            let payload = w.payload();
            if payload.is_empty() {
                writeln!(s, "witness {}", w.kind()).unwrap();
            } else {
                writeln!(s, "witness {} {}", w.kind(), payload).unwrap();
            }
        }
        for t in &self.trace {
            writeln!(s, "trace {t}").unwrap();
        }
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct W<'a> {
            kind: &'a str,
            payload: serde_json::Value,
        }
        #[derive(Serialize)]
        struct J<'a> {
            verdict: Verdict,
            #[serde(skip_serializing_if = "Option::is_none")]
            path: Option<&'a [Vertex]>,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<W<'a>>,
            trace: Vec<String>,
        }
        let witness = self.witness.as_ref().map(|w| W {
            kind: w.kind(),
            payload: match w {
                Witness::TooManyIKPaths(ps) => serde_json::json!(ps),
                Witness::Exhaustive => serde_json::Value::Null,
                Witness::CutSet(v)
                | Witness::TooManyDegreeOne(v)
                | Witness::ShortIIPath(v)
                | Witness::Disconnected(v) => serde_json::json!(v),
            },
        });
        let j = J {
            verdict: self.verdict,
            path: (self.verdict == Verdict::Yes).then_some(&self.path[..]),
            witness,
            trace: self.trace.iter().map(|t| t.to_string()).collect(),
        };
        serde_json::to_string(&j).expect("certificate serializes")
    }

    pub fn parse_text(text: &str) -> Result<Certificate, ParseCertError> {
        let mut verdict = None;
        let mut path = Vec::new();
        let mut witness = None;
        let mut trace = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let err = |msg: &str| ParseCertError { line: lineno, msg: msg.to_string() };
            let (tag, rest) = line.split_once(' ').unwrap_or((line, ""));
            let nums = |s: &str| -> Result<Vec<Vertex>, ParseCertError> {
                s.split_whitespace().map(|t| t.parse::<Vertex>().map_err(|_| err("bad vertex id"))).collect()
            };
            match tag {
                "verdict" => {
                    verdict = Some(match rest.trim() {
                        "YES" => Verdict::Yes,
                        "NO" => Verdict::No,
                        _ => return Err(err("verdict must be YES or NO")),
                    })
                }
                "path" => path = nums(rest)?,
                "witness" => {
                    let (kind, payload) = rest.split_once(' ').unwrap_or((rest, ""));
                    witness = Some(match kind {
                        "CutSet" => Witness::CutSet(nums(payload)?),
                        "TooManyDegreeOne" => Witness::TooManyDegreeOne(nums(payload)?),
                        "ShortIIPath" => Witness::ShortIIPath(nums(payload)?),
                        "Disconnected" => Witness::Disconnected(nums(payload)?),
                        "TooManyIKPaths" => {
                            Witness::TooManyIKPaths(payload.split('|').map(nums).collect::<Result<_, _>>()?)
                        }
                        "Exhaustive" => Witness::Exhaustive,
                        _ => return Err(err("unknown witness kind")),
                    })
                }
                "trace" => {
                    let (c, k) = rest.trim().split_once(':').ok_or_else(|| err("trace needs claim:case"))?;
                    trace.push(TraceRecord::new(c, k));
                }
                _ => return Err(err("unknown line tag")),
            }
        }
        let verdict = verdict.ok_or(ParseCertError { line: 0, msg: "missing verdict line".into() })?;
        Ok(Certificate { verdict, path, witness, trace })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseCertError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidCertificate {
    #[error("NotAPermutation")]
    NotAPermutation,
    #[error("NotAdjacent {0} {1}")]
    NotAdjacent(Vertex, Vertex),
    #[error("MissingWitness")]
    MissingWitness,
    #[error("WitnessRejected {0}")]
    WitnessRejected(&'static str),
}

pub fn validate_certificate(g: &Graph, c: &Certificate) -> Result<(), InvalidCertificate> {
    match c.verdict {
        Verdict::Yes => validate_path(g, &c.path),
        Verdict::No => {
            let w = c.witness.as_ref().ok_or(InvalidCertificate::MissingWitness)?;
            validate_witness(g, w, c)
        }
    }
}

pub fn validate_path(g: &Graph, path: &[Vertex]) -> Result<(), InvalidCertificate> {
    if path.len() != g.n() {
        return Err(InvalidCertificate::NotAPermutation);
    }
    let mut seen = vec![false; g.n() + 1];
    for &v in path {
        if !g.contains(v) || seen[v as usize] {
            return Err(InvalidCertificate::NotAPermutation);
        }
        seen[v as usize] = true;
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(InvalidCertificate::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(())
}

fn validate_witness(g: &Graph, w: &Witness, c: &Certificate) -> Result<(), InvalidCertificate> {
    let reject = |why| Err(InvalidCertificate::WitnessRejected(why));
    match w {
        Witness::Disconnected(_) => {
            if is_connected(g) {
                return reject("graph is connected");
            }
        }
        Witness::CutSet(s) => {
            if s.iter().any(|&v| !g.contains(v)) {
                return reject("cut set vertex out of range");
            }
            let mut d = s.clone();
            d.sort_unstable();
            d.dedup();
            if components_after_removal(g, &d) <= d.len() + 1 {
                return reject("components do not exceed |S|+1");
            }
        }
        Witness::TooManyDegreeOne(vs) => {
            let mut d = vs.clone();
            d.sort_unstable();
            d.dedup();
            if g.n() <= 2 || d.len() < 3 || d.iter().any(|&v| !g.contains(v) || g.degree(v) != 1) {
                return reject("need three distinct degree-one vertices");
            }
        }
        Witness::ShortIIPath(piece) => {
            let Ok(p) = split_partition(g) else { return reject("graph is not split") };
            let Ok(r) = structure_report(g, &p) else { return reject("H is not a path/cycle union") };
            let found = r
                .pieces
                .iter()
                .any(|x| x.kind == PieceKind::IIPath && x.is_short && x.vertices == *piece);
            if !found {
                return reject("no such short I-I path");
            }
        }
        Witness::TooManyIKPaths(pieces) => {
            let Ok(p) = split_partition(g) else { return reject("graph is not split") };
            let Ok(r) = structure_report(g, &p) else { return reject("H is not a path/cycle union") };
            let forcing = r.endpoint_forcing();
            let mut listed: Vec<&Vec<Vertex>> = pieces.iter().collect();
            listed.sort();
            listed.dedup();
            if listed.len() < 3 || listed.len() != pieces.len() {
                return reject("need three distinct endpoint-forcing pieces");
            }
            if !listed.iter().all(|l| forcing.iter().any(|f| &&f.vertices == l)) {
                return reject("listed piece is not an I-K path or short cycle");
            }
        }
        Witness::Exhaustive => {
            if !c.trace.iter().any(|t| t.claim == crate::solver::small_i::TRACE_CLAIM) {
                return reject("exhaustive refutations come only from the small-I search");
            }
            let Ok(p) = split_partition(g) else { return reject("graph is not split") };
            match crate::solver::small_i::search(g, &p, crate::solver::small_i::Mode::Path) {
                Ok(None) => {}
                Ok(Some(_)) => return reject("a Hamiltonian path exists"),
                Err(_) => return reject("independent side too large to re-check"),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn text_round_trip() {
        let c = Certificate::no(
            Witness::TooManyIKPaths(vec![vec![5, 1], vec![6, 2], vec![7, 3]]),
            vec![TraceRecord::new("Theorem4", "TooManyIKPaths")],
        );
        let t = c.to_text();
        assert_eq!(Certificate::parse_text(&t).unwrap(), c);
        let y = Certificate::yes(vec![3, 2, 1], vec![]);
        assert_eq!(Certificate::parse_text(&y.to_text()).unwrap(), y);
        assert!(y.to_json().contains("\"path\":[3,2,1]"));
    }

    #[test]
    fn path_validation() {
        let p3 = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(validate_certificate(&p3, &Certificate::yes(vec![1, 2, 3], vec![])).is_ok());
        assert_eq!(
            validate_certificate(&p3, &Certificate::yes(vec![1, 2, 2], vec![])),
            Err(InvalidCertificate::NotAPermutation)
        );
        assert_eq!(
            validate_certificate(&p3, &Certificate::yes(vec![2, 1, 3], vec![])),
            Err(InvalidCertificate::NotAdjacent(1, 3))
        );
    }

    #[test]
    fn cut_set_validation() {
        let trio = build_graph(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(validate_certificate(&trio, &Certificate::no(Witness::CutSet(vec![1]), vec![])).is_ok());
        assert!(validate_certificate(&trio, &Certificate::no(Witness::CutSet(vec![2]), vec![])).is_err());
    }
}
