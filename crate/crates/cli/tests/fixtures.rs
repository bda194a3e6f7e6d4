//! The shipped fixture files match the in-crate corpus and round-trip.
//!
//! Set `ZKLOOP_BLESS=1` to rewrite the files from the corpus.

use std::path::PathBuf;

use zkloop_cli::{parse, ComplexDocument};
use zkloop_core::fixtures::corpus;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn corpus_files_match_and_round_trip() {
    let bless = std::env::var_os("ZKLOOP_BLESS").is_some();
    for (name, complex) in corpus() {
        let path = fixture_dir().join(format!("{name}.json"));
        let expected = ComplexDocument::from_complex(&name, &complex);
        if bless {
            std::fs::write(&path, expected.to_json()).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let input = parse(&text, true).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(input.document, expected, "{name}");
        assert_eq!(input.complex, complex, "{name}");
        let rendered = input.document.to_json();
        assert_eq!(rendered, text, "{name} is not in canonical form");
        assert_eq!(parse(&rendered, true).unwrap().document, input.document);
    }
}

#[test]
fn every_file_is_in_the_corpus() {
    let names: Vec<String> = corpus().into_iter().map(|(n, _)| n).collect();
    for entry in std::fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        assert!(
            names.contains(&stem),
            "{} is not generated from the corpus",
            path.display()
        );
    }
}
