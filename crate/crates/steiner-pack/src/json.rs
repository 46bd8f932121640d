//! JSON documents. Field order in each struct is the key order on output.

use serde::{Deserialize, Serialize};
use steiner_pack_core::extremal::{ExtremalReport, Violation};
use steiner_pack_core::families::{ClosedForm, Family, FamilySpec};
use steiner_pack_core::steiner::ConnectivityProfile;
use steiner_pack_core::{Edge, Mode, PackingCertificate, TreeCertificate, VertexSet};

use crate::graph6;

pub const SCHEMA: &str = "steiner-pack/1";

/// Top-level document shared by every command.
#[derive(Serialize)]
pub struct Envelope<'a, C: Serialize, R: Serialize> {
    pub schema: &'static str,
    pub command: &'static str,
    pub config: &'a C,
    pub result: R,
}

pub fn mode_str(mode: Mode) -> &'static str {
    mode.as_str()
}

pub fn parse_mode(s: &str) -> Option<Mode> {
    match s {
        "vertex" | "kappa" | "internally-disjoint" => Some(Mode::Vertex),
        "edge" | "lambda" | "edge-disjoint" => Some(Mode::Edge),
        _ => None,
    }
}

fn members(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub mode: String,
    pub terminals: Vec<usize>,
    pub trees: Vec<TreeJson>,
}

impl From<&PackingCertificate> for CertificateJson {
    fn from(c: &PackingCertificate) -> Self {
        CertificateJson {
            mode: c.mode.as_str().to_string(),
            terminals: members(c.terminals),
            trees: c.trees.iter().map(|t| TreeJson { edges: t.edges.iter().map(|e| [e.u(), e.v()]).collect() }).collect(),
        }
    }
}

impl CertificateJson {
    /// Back to the core type, for revalidation.
    pub fn to_core(&self) -> Result<PackingCertificate, String> {
        let mode = parse_mode(&self.mode).ok_or_else(|| format!("unknown mode {:?}", self.mode))?;
        if self.terminals.iter().any(|&v| v >= 64) {
            return Err("terminal out of range".into());
        }
        let terminals: VertexSet = self.terminals.iter().copied().collect();
        let trees = self
            .trees
            .iter()
            .map(|t| {
                let edges = t.edges.iter().map(|&[u, v]| Edge::new(u, v)).collect::<Result<Vec<_>, _>>();
                edges.map(|e| TreeCertificate::new(e, terminals)).map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PackingCertificate::new(mode, terminals, trees))
    }
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub k: usize,
    pub mode: &'static str,
    pub min_value: usize,
    pub max_value: usize,
    pub argmin_set: Vec<usize>,
    pub argmax_set: Vec<usize>,
    pub min_certificate: CertificateJson,
    pub max_certificate: CertificateJson,
}

impl From<&ConnectivityProfile> for ProfileJson {
    fn from(p: &ConnectivityProfile) -> Self {
        ProfileJson {
            k: p.k,
            mode: p.mode.as_str(),
            min_value: p.min_value,
            max_value: p.max_value,
            argmin_set: members(p.argmin_set),
            argmax_set: members(p.argmax_set),
            min_certificate: (&p.min_certificate).into(),
            max_certificate: (&p.max_certificate).into(),
        }
    }
}

/// `kappa(S)` or `lambda(S)` for one terminal set.
#[derive(Serialize)]
pub struct LocalJson {
    pub parameter: &'static str,
    pub terminals: Vec<usize>,
    pub value: usize,
    pub certificate: CertificateJson,
}

#[derive(Serialize)]
pub struct ClosedFormJson {
    pub value: usize,
    pub regime: &'static str,
}

impl From<ClosedForm> for ClosedFormJson {
    fn from(c: ClosedForm) -> Self {
        ClosedFormJson { value: c.value, regime: c.regime }
    }
}

#[derive(Serialize)]
pub struct LowerBoundJson {
    pub label: &'static str,
    pub lower_bound: usize,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub mode: &'static str,
    pub status: &'static str,
    pub brute_value: usize,
    pub formula_value: Option<usize>,
    pub formula_regime: Option<&'static str>,
    pub formula_agrees: bool,
    pub characterization_match: Option<bool>,
    pub graphs_scanned: usize,
    pub witnesses: Vec<String>,
}

impl From<&ExtremalReport> for ReportJson {
    fn from(r: &ExtremalReport) -> Self {
        ReportJson {
            n: r.n,
            k: r.k,
            l: r.l,
            mode: r.mode.as_str(),
            status: "complete",
            brute_value: r.brute_value,
            formula_value: r.formula_value,
            formula_regime: r.formula_regime,
            formula_agrees: r.formula_agrees(),
            characterization_match: r.characterization_match,
            graphs_scanned: r.graphs_scanned,
            witnesses: r.witnesses.iter().map(|g| graph6::write(g).unwrap_or_default()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub graph: String,
    pub supergraph: Option<String>,
    pub k: usize,
    pub rule: &'static str,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            graph: graph6::write(&v.graph).unwrap_or_default(),
            supergraph: v.supergraph.as_ref().map(|g| graph6::write(g).unwrap_or_default()),
            k: v.k,
            rule: v.rule,
        }
    }
}

/// Serialized [`FamilySpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpecJson {
    pub family: String,
    pub n: usize,
    pub l: usize,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub m: Vec<[usize; 2]>,
    #[serde(default)]
    pub attach: Vec<Vec<usize>>,
}

impl From<&FamilySpec> for FamilySpecJson {
    fn from(s: &FamilySpec) -> Self {
        FamilySpecJson {
            family: s.family.as_str().to_string(),
            n: s.n,
            l: s.l,
            k: s.k,
            m: s.m.iter().map(|e| [e.u(), e.v()]).collect(),
            attach: s.attach.iter().map(|a| members(*a)).collect(),
        }
    }
}

impl FamilySpecJson {
    pub fn to_core(&self) -> Result<FamilySpec, String> {
        let family = Family::parse(&self.family).ok_or_else(|| format!("unknown family {:?}", self.family))?;
        let m = self.m.iter().map(|&[u, v]| Edge::new(u, v)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        if self.attach.iter().flatten().any(|&v| v >= 64) {
            return Err("attachment vertex out of range".into());
        }
        let attach = self.attach.iter().map(|a| a.iter().copied().collect()).collect();
        Ok(FamilySpec { family, n: self.n, l: self.l, k: self.k, m, attach })
    }
}
