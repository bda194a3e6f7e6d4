//! Pushout certificates for the reduction to `C_K`.
//!
//! A certificate records the recursion that writes `K` as an iterated
//! pushout of full subcomplexes, splitting at a non-dominating vertex until
//! every piece has a complete 1-skeleton. Complexes are stored explicitly
//! by their facets in the original vertex labels, so a certificate can be
//! checked without access to the complex that produced it.
//!
//! [`certificate_verify`] works on plain sets of vertex lists and shares no
//! code with the builder.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{FullSubcomplex, SimplicialComplex};

/// A complex written out by facets in original labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexRecord {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexRecord {
    fn from_full(sub: &FullSubcomplex) -> Self {
        ComplexRecord {
            vertices: sub.labels.clone(),
            facets: sub.parent_facets().iter().map(|f| f.to_vec()).collect(),
        }
    }

    fn empty() -> Self {
        ComplexRecord {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum LeafRule {
    SingleVertex,
    Simplex,
    CompleteOneSkeleton,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Certificate {
    Leaf {
        complex: ComplexRecord,
        rule: LeafRule,
    },
    Node {
        complex: ComplexRecord,
        vertex: u32,
        /// `K_{N(v)}`, empty when `v` is isolated.
        link: ComplexRecord,
        /// Certificate for `K_{v ∪ N(v)}`.
        star: Box<Certificate>,
        /// Certificate for `K_{V ∖ v}`.
        deletion: Box<Certificate>,
    },
}

impl Certificate {
    pub fn complex(&self) -> &ComplexRecord {
        match self {
            Certificate::Leaf { complex, .. } | Certificate::Node { complex, .. } => complex,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 1,
            Certificate::Node { star, deletion, .. } => star.leaf_count() + deletion.leaf_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 1,
            Certificate::Node { star, deletion, .. } => 1 + star.node_count() + deletion.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 0,
            Certificate::Node { star, deletion, .. } => 1 + star.depth().max(deletion.depth()),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&ComplexRecord> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self];
        while let Some(c) = stack.pop() {
            match c {
                Certificate::Leaf { complex, .. } => out.push(complex),
                Certificate::Node { star, deletion, .. } => {
                    stack.push(deletion);
                    stack.push(star);
                }
            }
        }
        out
    }
}

pub fn certificate_build(complex: &SimplicialComplex) -> Certificate {
    build(&FullSubcomplex::whole(complex.clone()))
}

fn build(sub: &FullSubcomplex) -> Certificate {
    let k = &sub.complex;
    let record = ComplexRecord::from_full(sub);
    if k.vertex_count() == 1 {
        return Certificate::Leaf {
            complex: record,
            rule: LeafRule::SingleVertex,
        };
    }
    if k.is_simplex() {
        return Certificate::Leaf {
            complex: record,
            rule: LeafRule::Simplex,
        };
    }
    let adjacency = k.adjacency();
    let all = k.vertex_set();
    let Some(v) = all.iter().find(|&v| adjacency[v as usize - 1] != all.without(v)) else {
        return Certificate::Leaf {
            complex: record,
            rule: LeafRule::CompleteOneSkeleton,
        };
    };
    let square = k.pushout_step(v).expect("v is not dominating");
    let lift = |side: &FullSubcomplex| FullSubcomplex {
        complex: side.complex.clone(),
        labels: side.labels.iter().map(|&i| sub.labels[i as usize - 1]).collect(),
    };
    let link = square
        .intersection
        .as_ref()
        .map_or_else(ComplexRecord::empty, |l| ComplexRecord::from_full(&lift(l)));
    Certificate::Node {
        complex: record,
        vertex: sub.labels[v as usize - 1],
        link,
        star: Box::new(build(&lift(&square.star_side))),
        deletion: Box::new(build(&lift(&square.deletion_side))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum DiagnosticKind {
    MalformedComplex { detail: String },
    VertexNotInComplex,
    DominatingVertex,
    LinkMismatch,
    StarMismatch,
    DeletionMismatch,
    IntersectionMismatch,
    UnionMismatch,
    NotSmaller,
    IncompleteLeaf,
    LeafRuleMismatch,
    RootMismatch,
}

/// A failed check at one node; `path` lists the branches taken from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagnostic {
    pub path: String,
    pub kind: DiagnosticKind,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.path, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Verification {
    pub ok: bool,
    pub nodes_checked: usize,
    pub diagnostics: Vec<Diagnostic>,
}

impl Verification {
    pub fn has(&self, kind: &DiagnosticKind) -> bool {
        self.diagnostics.iter().any(|d| &d.kind == kind)
    }
}

type FaceSet = BTreeSet<Vec<u32>>;

/// All nonempty faces, with their vertices sorted.
fn faces_of(record: &ComplexRecord) -> FaceSet {
    let mut out = FaceSet::new();
    for facet in &record.facets {
        let mut f = facet.clone();
        f.sort_unstable();
        f.dedup();
        let n = f.len();
        for mask in 1u64..(1u64 << n) {
            out.insert((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    out
}

fn restrict(faces: &FaceSet, to: &BTreeSet<u32>) -> FaceSet {
    faces
        .iter()
        .filter(|f| f.iter().all(|v| to.contains(v)))
        .cloned()
        .collect()
}

fn check_record(record: &ComplexRecord) -> Result<(BTreeSet<u32>, FaceSet), String> {
    let vertices: BTreeSet<u32> = record.vertices.iter().copied().collect();
    if vertices.len() != record.vertices.len() {
        return Err(String::from("repeated vertex"));
    }
    if record.facets.iter().any(Vec::is_empty) {
        return Err(String::from("empty facet"));
    }
    let faces = faces_of(record);
    let covered: BTreeSet<u32> = faces.iter().flatten().copied().collect();
    if covered != vertices {
        return Err(format!("facets cover {covered:?}, vertex list is {vertices:?}"));
    }
    Ok((vertices, faces))
}

fn is_edge(faces: &FaceSet, a: u32, b: u32) -> bool {
    let e = if a < b { alloc::vec![a, b] } else { alloc::vec![b, a] };
    faces.contains(&e)
}

/// Checks every node of the tree: the chosen vertex is in the complex and
/// not dominating, the link, star and deletion are the full subcomplexes
/// they claim to be, their intersection is the link and their union is the
/// whole complex, children are smaller, and leaves have complete
/// 1-skeleta.
pub fn certificate_verify(cert: &Certificate) -> Verification {
    let mut v = Verification {
        ok: true,
        nodes_checked: 0,
        diagnostics: Vec::new(),
    };
    verify_node(cert, String::from("root"), &mut v);
    v.ok = v.diagnostics.is_empty();
    v
}

/// [`certificate_verify`], plus a check that the root is `complex`.
pub fn certificate_verify_for(complex: &SimplicialComplex, cert: &Certificate) -> Verification {
    let mut v = certificate_verify(cert);
    let expected = ComplexRecord {
        vertices: (1..=complex.vertex_count() as u32).collect(),
        facets: complex.facets().iter().map(|f| f.to_vec()).collect(),
    };
    let same = match (check_record(&expected), check_record(cert.complex())) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    if !same {
        v.diagnostics.push(Diagnostic {
            path: String::from("root"),
            kind: DiagnosticKind::RootMismatch,
        });
        v.ok = false;
    }
    v
}

fn verify_node(cert: &Certificate, path: String, out: &mut Verification) {
    out.nodes_checked += 1;
    let mut report = |kind| {
        out.diagnostics.push(Diagnostic {
            path: path.clone(),
            kind,
        })
    };
    let (vertices, faces) = match check_record(cert.complex()) {
        Ok(x) => x,
        Err(detail) => {
            report(DiagnosticKind::MalformedComplex { detail });
            return;
        }
    };
    match cert {
        Certificate::Leaf { rule, .. } => {
            let complete = vertices
                .iter()
                .all(|&a| vertices.iter().all(|&b| a == b || is_edge(&faces, a, b)));
            if !complete {
                report(DiagnosticKind::IncompleteLeaf);
            }
            let rule_holds = match rule {
                LeafRule::SingleVertex => vertices.len() == 1,
                LeafRule::Simplex => faces.contains(&vertices.iter().copied().collect::<Vec<u32>>()),
                LeafRule::CompleteOneSkeleton => true,
            };
            if !rule_holds {
                report(DiagnosticKind::LeafRuleMismatch);
            }
        }
        Certificate::Node {
            vertex,
            link,
            star,
            deletion,
            ..
        } => {
            let v = *vertex;
            if !vertices.contains(&v) {
                report(DiagnosticKind::VertexNotInComplex);
                return;
            }
            let neighbours: BTreeSet<u32> = vertices
                .iter()
                .copied()
                .filter(|&u| u != v && is_edge(&faces, u, v))
                .collect();
            if neighbours.len() + 1 == vertices.len() {
                report(DiagnosticKind::DominatingVertex);
            }
            let mut star_set = neighbours.clone();
            star_set.insert(v);
            let mut deletion_set = vertices.clone();
            deletion_set.remove(&v);

            let parts = [
                (link, &neighbours, DiagnosticKind::LinkMismatch),
                (star.complex(), &star_set, DiagnosticKind::StarMismatch),
                (deletion.complex(), &deletion_set, DiagnosticKind::DeletionMismatch),
            ];
            let mut sets: Vec<FaceSet> = Vec::new();
            for (record, expected_vertices, kind) in parts {
                let got = if record.vertices.is_empty() && record.facets.is_empty() {
                    Some((BTreeSet::new(), FaceSet::new()))
                } else {
                    check_record(record).ok()
                };
                let expected_faces = restrict(&faces, expected_vertices);
                match got {
                    Some((vs, fs)) => {
                        if &vs != expected_vertices || fs != expected_faces {
                            report(kind);
                        }
                        sets.push(fs);
                    }
                    None => {
                        report(kind);
                        sets.push(FaceSet::new());
                    }
                }
            }
            let intersection: FaceSet = sets[1].intersection(&sets[2]).cloned().collect();
            if intersection != sets[0] {
                report(DiagnosticKind::IntersectionMismatch);
            }
            let union: FaceSet = sets[1].union(&sets[2]).cloned().collect();
            if union != faces {
                report(DiagnosticKind::UnionMismatch);
            }
            if star.complex().vertices.len() >= vertices.len() || deletion.complex().vertices.len() >= vertices.len() {
                report(DiagnosticKind::NotSmaller);
            }
            verify_node(star, format!("{path}/star"), out);
            verify_node(deletion, format!("{path}/deletion"), out);
        }
    }
}
