//! The five subcommands as pure functions from an [`Input`] to a [`Report`].

use std::collections::BTreeSet;

use serde::Serialize;
use sha2::{Digest, Sha256};
use zkloop_core::certificate::{certificate_build, certificate_verify_for, Certificate, Verification};
use zkloop_core::classifier::{
    classify_with_assertions, loop_catalog, Classification, LoopCatalog, Verdict, WedgeCatalog,
};
use zkloop_core::complex::MissingFaces;
use zkloop_core::homology::reduced_homology;
use zkloop_core::localization::{deficits, prime_exclusion, PrimeExclusionReport, BOUNDARY_CONVENTION};
use zkloop_core::loops::{poincare_series, LoopFactorCatalog, PoincareSeries, Ring};
use zkloop_core::members::survey;
use zkloop_core::splitting::zk_homology;
use zkloop_core::{HomologyProfile, VertexSubset};

use crate::document::Input;

pub const TOOL: &str = "zkloop";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub max_degree: u32,
    pub field: Option<u64>,
    pub verify: bool,
    /// A tree to check instead of building one.
    pub tree: Option<Certificate>,
    pub embed_certificate: bool,
    /// `--i-assert-golod` was given.
    pub golod_confirmed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub input: InputEcho,
    /// False iff a verification failed.
    pub ok: bool,
    pub notes: Vec<String>,
    pub result: ReportBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub name: String,
    pub sha256: String,
    pub vertex_count: usize,
    pub facet_count: usize,
    /// Members whose rational Golodness was asserted, if confirmed.
    pub golod_assert: Vec<VertexSubset>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ReportBody {
    Homology(HomologyResult),
    Classify(Box<ClassifyResult>),
    Primes(PrimesResult),
    LoopFactors(LoopFactorsResult),
    Certificate(CertificateResult),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeView {
    pub degree: usize,
    pub betti: usize,
    /// `(p, r)` for each `Z/p^r` summand.
    pub torsion: Vec<(u64, u32)>,
}

pub fn profile_view(h: &HomologyProfile) -> Vec<DegreeView> {
    h.iter()
        .filter(|(_, g)| !g.is_zero())
        .map(|(degree, g)| DegreeView {
            degree,
            betti: g.betti,
            torsion: g.torsion.iter().map(|pp| (pp.prime, pp.exponent)).collect(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberHomology {
    pub subset: VertexSubset,
    pub dimension: usize,
    pub neighbourliness: usize,
    pub homology: Vec<DegreeView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyResult {
    pub complex: Vec<DegreeView>,
    pub moment_angle: Vec<DegreeView>,
    pub minimal_missing_faces: MissingFaces,
    pub members: Vec<MemberHomology>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateSummary {
    pub leaves: usize,
    pub nodes: usize,
    pub depth: usize,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Certificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyResult {
    pub verdict: &'static str,
    pub classification: Classification,
    pub certificate: CertificateSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimesResult {
    pub boundary_convention: &'static str,
    pub excluded_primes: BTreeSet<u64>,
    pub deficits: Vec<(VertexSubset, usize)>,
    pub report: PrimeExclusionReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesEntry {
    /// The member of `C_K`, or `None` for `ΩZ_K` itself.
    pub scope: Option<VertexSubset>,
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<PoincareSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopFactorsResult {
    pub max_degree: u32,
    pub catalog: LoopCatalog,
    pub series: Vec<SeriesEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateResult {
    /// `built` or `supplied`.
    pub source: &'static str,
    pub leaves: usize,
    pub depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    pub tree: Certificate,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn asserted(input: &Input, options: &Options) -> BTreeSet<VertexSubset> {
    if options.golod_confirmed {
        input.asserted.clone()
    } else {
        BTreeSet::new()
    }
}

fn report(
    input: &Input,
    raw: &[u8],
    command: Vec<String>,
    options: &Options,
    ok: bool,
    notes: Vec<String>,
    result: ReportBody,
) -> Report {
    let mut notes = notes;
    let golod_assert: Vec<VertexSubset> = asserted(input, options).into_iter().collect();
    if !golod_assert.is_empty() {
        let listed: Vec<String> = golod_assert.iter().map(ToString::to_string).collect();
        notes.push(format!(
            "rational Golodness of {} is asserted by the document author (confirmed with --i-assert-golod), not verified",
            listed.join(", ")
        ));
    }
    Report {
        tool: TOOL,
        version: VERSION,
        command,
        input: InputEcho {
            name: input.document.name.clone(),
            sha256: sha256_hex(raw),
            vertex_count: input.complex.vertex_count(),
            facet_count: input.complex.facets().len(),
            golod_assert,
        },
        ok,
        notes,
        result,
    }
}

pub fn homology(input: &Input, raw: &[u8], command: Vec<String>, options: &Options) -> zkloop_core::Result<Report> {
    let k = &input.complex;
    let members = survey(k)
        .into_iter()
        .map(|m| MemberHomology {
            subset: m.subset,
            dimension: m.dimension,
            neighbourliness: m.neighbourliness.k,
            homology: profile_view(&m.homology),
        })
        .collect();
    let body = HomologyResult {
        complex: profile_view(&reduced_homology(k)),
        moment_angle: profile_view(&zk_homology(k)?),
        minimal_missing_faces: k.minimal_missing_faces(),
        members,
    };
    Ok(report(
        input,
        raw,
        command,
        options,
        true,
        Vec::new(),
        ReportBody::Homology(body),
    ))
}

fn localized_note(excluded: &BTreeSet<u64>) -> String {
    if excluded.is_empty() {
        return String::from("no primes need to be inverted");
    }
    let primes: Vec<String> = excluded.iter().map(ToString::to_string).collect();
    format!(
        "the localized decomposition holds after inverting {{{}}}; consequences for homotopy exponents and Steenrod operations are not computed",
        primes.join(",")
    )
}

pub fn classify(input: &Input, raw: &[u8], command: Vec<String>, options: &Options) -> zkloop_core::Result<Report> {
    let classification = classify_with_assertions(&input.complex, &asserted(input, options));
    let tree = certificate_build(&input.complex);
    let verification = certificate_verify_for(&input.complex, &tree);
    let mut notes = Vec::new();
    if let Verdict::LocalizedProductP { report } = &classification.verdict {
        notes.push(localized_note(&report.excluded_primes()));
    }
    let certificate = CertificateSummary {
        leaves: tree.leaf_count(),
        nodes: tree.node_count(),
        depth: tree.depth(),
        verified: verification.ok,
        tree: options.embed_certificate.then_some(tree),
    };
    let ok = verification.ok;
    let body = ClassifyResult {
        verdict: classification.verdict.name(),
        classification,
        certificate,
    };
    Ok(report(
        input,
        raw,
        command,
        options,
        ok,
        notes,
        ReportBody::Classify(Box::new(body)),
    ))
}

pub fn primes(input: &Input, raw: &[u8], command: Vec<String>, options: &Options) -> zkloop_core::Result<Report> {
    let r = prime_exclusion(&input.complex, &asserted(input, options));
    let mut notes = Vec::new();
    if r.verdict_ok {
        notes.push(localized_note(&r.excluded_primes()));
    } else {
        let failing: Vec<String> = r.failing_members().map(|s| s.to_string()).collect();
        notes.push(format!(
            "rational Golodness is not established for {}",
            failing.join(", ")
        ));
    }
    let body = PrimesResult {
        boundary_convention: BOUNDARY_CONVENTION,
        excluded_primes: r.excluded_primes(),
        deficits: deficits(&input.complex),
        report: r,
    };
    Ok(report(
        input,
        raw,
        command,
        options,
        true,
        notes,
        ReportBody::Primes(body),
    ))
}

pub fn ring_name(ring: Ring) -> String {
    match ring {
        Ring::Rational => String::from("Q"),
        Ring::Prime(p) => format!("F_{p}"),
    }
}

fn series_for(
    scope: Option<VertexSubset>,
    catalog: &LoopFactorCatalog,
    rings: &[Ring],
    cutoff: u32,
) -> Vec<SeriesEntry> {
    rings
        .iter()
        .map(|&ring| {
            let (series, error) = match poincare_series(catalog, ring, cutoff) {
                Ok(s) => (Some(s), None),
                Err(e) => (None, Some(e.to_string())),
            };
            SeriesEntry {
                scope,
                ring: ring_name(ring),
                series,
                error,
            }
        })
        .collect()
}

pub fn loop_factors(input: &Input, raw: &[u8], command: Vec<String>, options: &Options) -> zkloop_core::Result<Report> {
    let cutoff = options.max_degree;
    let mut rings = vec![Ring::Rational];
    if let Some(p) = options.field {
        let ring = Ring::Prime(p);
        ring.validate()?;
        rings.push(ring);
    }
    let catalog = loop_catalog(&input.complex, cutoff)?;
    let mut series = Vec::new();
    let mut notes = Vec::new();
    match &catalog {
        LoopCatalog::Global { catalog, .. } => series.extend(series_for(None, catalog, &rings, cutoff)),
        LoopCatalog::PerSubcomplex { members } => {
            notes.push(String::from(
                "the unstable wedge of Z_K does not resolve; factors are listed for each member of C_K, not for ΩZ_K itself",
            ));
            for (subset, entry) in members {
                if let WedgeCatalog::Converted { catalog, .. } = entry {
                    if catalog.is_empty() {
                        continue;
                    }
                    series.extend(series_for(Some(*subset), catalog, &rings, cutoff));
                }
            }
        }
    }
    let body = LoopFactorsResult {
        max_degree: cutoff,
        catalog,
        series,
    };
    Ok(report(
        input,
        raw,
        command,
        options,
        true,
        notes,
        ReportBody::LoopFactors(body),
    ))
}

pub fn certificate(input: &Input, raw: &[u8], command: Vec<String>, options: &Options) -> zkloop_core::Result<Report> {
    let (tree, source) = match &options.tree {
        Some(t) => (t.clone(), "supplied"),
        None => (certificate_build(&input.complex), "built"),
    };
    let verification =
        (options.verify || options.tree.is_some()).then(|| certificate_verify_for(&input.complex, &tree));
    let ok = verification.as_ref().map_or(true, |v| v.ok);
    let body = CertificateResult {
        source,
        leaves: tree.leaf_count(),
        depth: tree.depth(),
        verification,
        tree,
    };
    Ok(report(
        input,
        raw,
        command,
        options,
        ok,
        Vec::new(),
        ReportBody::Certificate(body),
    ))
}
