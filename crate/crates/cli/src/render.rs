//! Plain-text rendering of reports.

use std::fmt::Write;

use zkloop_core::certificate::{Certificate, ComplexRecord};
use zkloop_core::classifier::{LoopCatalog, WedgeCatalog};
use zkloop_core::localization::GolodStatus;
use zkloop_core::loops::LoopFactorCatalog;
use zkloop_core::splitting::WedgeDecomposition;

use crate::commands::{DegreeView, Report, ReportBody};

pub fn homology_line(groups: &[DegreeView]) -> String {
    if groups.is_empty() {
        return String::from("0");
    }
    let parts: Vec<String> = groups
        .iter()
        .map(|g| {
            let mut summands = Vec::new();
            match g.betti {
                0 => {}
                1 => summands.push(String::from("Z")),
                b => summands.push(format!("Z^{b}")),
            }
            for &(p, r) in &g.torsion {
                summands.push(if r == 1 { format!("Z/{p}") } else { format!("Z/{p}^{r}") });
            }
            format!("H{} = {}", g.degree, summands.join(" + "))
        })
        .collect();
    parts.join(", ")
}

fn record(c: &ComplexRecord) -> String {
    let facets: Vec<String> = c
        .facets
        .iter()
        .map(|f| {
            format!(
                "{{{}}}",
                f.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("[{}]", facets.join(" "))
}

fn tree(out: &mut String, c: &Certificate, indent: usize) {
    let pad = "  ".repeat(indent);
    match c {
        Certificate::Leaf { complex, rule } => {
            let _ = writeln!(out, "{pad}leaf {} ({rule:?})", record(complex));
        }
        Certificate::Node {
            complex,
            vertex,
            link,
            star,
            deletion,
        } => {
            let _ = writeln!(out, "{pad}split {} at {vertex}, link {}", record(complex), record(link));
            tree(out, star, indent + 1);
            tree(out, deletion, indent + 1);
        }
    }
}

fn wedge(out: &mut String, w: &WedgeDecomposition) {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.summands.len() {
        let run = w.summands[i..].iter().take_while(|s| **s == w.summands[i]).count();
        parts.push(if run == 1 {
            w.summands[i].to_string()
        } else {
            format!("{run}×{}", w.summands[i])
        });
        i += run;
    }
    let _ = writeln!(
        out,
        "  wedge: {}",
        if parts.is_empty() {
            String::from("*")
        } else {
            parts.join(" ∨ ")
        }
    );
}

fn catalog(out: &mut String, c: &LoopFactorCatalog) {
    if c.is_empty() {
        let _ = writeln!(out, "  no factors through degree {}", c.cutoff());
    }
    for (factor, n) in c.entries() {
        let _ = writeln!(out, "  {factor} ×{n}");
    }
}

pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}: {}", report.tool, report.version, report.command.join(" "));
    let _ = writeln!(
        out,
        "input {} ({} vertices, {} facets), sha256 {}",
        report.input.name, report.input.vertex_count, report.input.facet_count, report.input.sha256
    );
    match &report.result {
        ReportBody::Homology(h) => {
            let _ = writeln!(out, "K: {}", homology_line(&h.complex));
            let _ = writeln!(out, "Z_K: {}", homology_line(&h.moment_angle));
            let missing: Vec<String> = h.minimal_missing_faces.faces.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "minimal missing faces: {} (pairwise disjoint: {})",
                missing.join(" "),
                h.minimal_missing_faces.rationally_elliptic
            );
            let _ = writeln!(out, "C_K members: {}", h.members.len());
            for m in &h.members {
                let _ = writeln!(
                    out,
                    "  {} dim {} {}-neighbourly: {}",
                    m.subset,
                    m.dimension,
                    m.neighbourliness,
                    homology_line(&m.homology)
                );
            }
        }
        ReportBody::Classify(c) => {
            let _ = writeln!(out, "verdict: {}", c.verdict);
            let fired: Vec<String> = c.classification.fired.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "rules fired: {}",
                if fired.is_empty() {
                    String::from("none")
                } else {
                    fired.join(", ")
                }
            );
            for r in &c.classification.reasons {
                let _ = writeln!(out, "  {} fails {}: {}", r.subset, r.rule, r.detail);
            }
            let e = &c.classification.exclusion;
            let excluded: Vec<String> = e.excluded_primes().iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "M = {}, excluded primes {{{}}}, gate passed: {}",
                e.m,
                excluded.join(","),
                e.verdict_ok
            );
            let cert = &c.certificate;
            let _ = writeln!(
                out,
                "certificate: {} leaves, depth {}, verified: {}",
                cert.leaves, cert.depth, cert.verified
            );
            if let Some(t) = &cert.tree {
                tree(&mut out, t, 1);
            }
        }
        ReportBody::Primes(p) => {
            let r = &p.report;
            let threshold: Vec<String> = r.threshold_primes.iter().map(ToString::to_string).collect();
            let torsion: Vec<String> = r.torsion_primes.iter().map(ToString::to_string).collect();
            let excluded: Vec<String> = p.excluded_primes.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "M = {}", r.m);
            let _ = writeln!(out, "threshold primes: {{{}}}", threshold.join(","));
            let _ = writeln!(out, "torsion primes: {{{}}}", torsion.join(","));
            let _ = writeln!(out, "excluded primes: {{{}}}", excluded.join(","));
            let _ = writeln!(out, "gate passed: {}", r.verdict_ok);
            let by_neighbourliness = r
                .golod_status
                .values()
                .filter(|&&s| s == GolodStatus::YesByNeighbourliness)
                .count();
            let _ = writeln!(
                out,
                "golod gate: {by_neighbourliness} of {} members by neighbourliness",
                r.golod_status.len()
            );
            for (subset, status) in r
                .golod_status
                .iter()
                .filter(|(_, &s)| s != GolodStatus::YesByNeighbourliness)
            {
                let _ = writeln!(out, "  {subset}: {status:?}");
            }
            let _ = writeln!(out, "convention: {}", p.boundary_convention);
        }
        ReportBody::LoopFactors(l) => {
            let _ = writeln!(out, "max degree: {}", l.max_degree);
            match &l.catalog {
                LoopCatalog::Global { wedge: w, catalog: c } => {
                    wedge(&mut out, w);
                    catalog(&mut out, c);
                }
                LoopCatalog::PerSubcomplex { members } => {
                    let trivial = |e: &WedgeCatalog| matches!(e, WedgeCatalog::Converted { wedge, .. } if wedge.summands.is_empty());
                    let skipped = members.iter().filter(|(_, e)| trivial(e)).count();
                    let _ = writeln!(out, "{skipped} members with contractible Z_{{K_I}} omitted");
                    for (subset, entry) in members.iter().filter(|(_, e)| !trivial(e)) {
                        let _ = writeln!(out, "member {subset}:");
                        match entry {
                            WedgeCatalog::Converted { wedge: w, catalog: c } => {
                                wedge(&mut out, w);
                                catalog(&mut out, c);
                            }
                            WedgeCatalog::Unresolved { wedge: w } => {
                                wedge(&mut out, w);
                                let _ = writeln!(out, "  unresolved summands; no catalog");
                            }
                            WedgeCatalog::NoSplitting { required, actual } => {
                                let _ = writeln!(out, "  {actual}-neighbourly, {required} needed; no splitting");
                            }
                        }
                    }
                }
            }
            for s in &l.series {
                let scope = s.scope.map_or_else(|| String::from("ΩZ_K"), |i| format!("member {i}"));
                match (&s.series, &s.error) {
                    (Some(series), _) => {
                        let _ = writeln!(out, "series over {} for {scope}: {series}", s.ring);
                    }
                    (None, Some(e)) => {
                        let _ = writeln!(out, "series over {} for {scope}: unavailable ({e})", s.ring);
                    }
                    (None, None) => {}
                }
            }
        }
        ReportBody::Certificate(c) => {
            let _ = writeln!(out, "tree ({}): {} leaves, depth {}", c.source, c.leaves, c.depth);
            tree(&mut out, &c.tree, 1);
            if let Some(v) = &c.verification {
                let _ = writeln!(out, "verified: {} ({} nodes checked)", v.ok, v.nodes_checked);
                for d in &v.diagnostics {
                    let _ = writeln!(out, "  {d}");
                }
            }
        }
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
