//! Replays the checked-in fuzz corpus through the same entry points the fuzz
//! targets drive, so the seeds stay valid under `cargo test`.

use std::fs;
use std::path::PathBuf;

use glhat::kacmoody::{parse_matrix_fixture, realization_from_fixture};
use glhat::scalar::Rational;
use glhat::{LieElement, LoopGen};
use glhat_cli::config::{parse_config_file, resolve};

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target)
}

fn corpus_texts(target: &str) -> Vec<(String, String)> {
    let dir = corpus_dir(target);
    let mut out = Vec::new();
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("missing corpus {dir:?}: {e}")) {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let text = fs::read_to_string(&path).unwrap();
        out.push((name, text));
    }
    assert!(!out.is_empty(), "empty corpus for {target}");
    out.sort();
    out
}

#[test]
fn rational_corpus() {
    for (name, text) in corpus_texts("rational") {
        if let Ok(value) = text.parse::<Rational>() {
            let reparsed = value.to_string().parse::<Rational>().unwrap();
            assert_eq!(value, reparsed, "{name}");
        }
    }
}

#[test]
fn element_corpus() {
    for (name, text) in corpus_texts("element") {
        let _ = text.parse::<LoopGen>();
        if let Ok(elem) = text.parse::<LieElement>() {
            let reparsed = elem.to_string().parse::<LieElement>().unwrap();
            assert_eq!(elem, reparsed, "{name}");
        }
    }
}

#[test]
fn config_corpus() {
    for (_, text) in corpus_texts("config") {
        if let Ok(settings) = parse_config_file(&text) {
            let _ = resolve(&settings);
        }
    }
}

#[test]
fn fixture_corpus() {
    for (_, text) in corpus_texts("fixture") {
        let _ = parse_matrix_fixture(&text);
        let _ = realization_from_fixture("corpus", &text);
    }
}
