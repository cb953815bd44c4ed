//! Runs the checked-in fuzz seed corpora through the same assertions as
//! the fuzz targets, so the seeds stay green on stable toolchains where
//! the fuzzer itself is not built.

use lct_core::corpus;
use lct_core::dualgraph::{self, DualGraph};
use lct_core::polynomial::Polynomial;
use lct_core::weights::Weight;
use std::path::Path;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out = Vec::new();
    for entry in std::fs::read_dir(&dir).unwrap_or_else(|e| panic!("{dir:?}: {e}")) {
        let path = entry.unwrap().path();
        out.push((
            path.file_name().unwrap().to_string_lossy().into_owned(),
            std::fs::read(&path).unwrap(),
        ));
    }
    out.sort();
    assert!(!out.is_empty(), "no seeds in {dir:?}");
    out
}

#[test]
fn parse_polynomial_seeds() {
    for (name, data) in seeds("parse_polynomial") {
        let Ok(text) = std::str::from_utf8(&data) else {
            continue;
        };
        let (vars, body) = match text.strip_prefix("vars: ") {
            Some(rest) => match rest.split_once('\n') {
                Some(pair) => pair,
                None => continue,
            },
            None => ("xyz", text),
        };
        if let Ok(p) = Polynomial::parse(body, vars) {
            let printed = p.to_string();
            let reparsed = Polynomial::parse(&printed, vars)
                .unwrap_or_else(|e| panic!("{name}: {printed:?} failed to reparse: {e}"));
            assert_eq!(reparsed, p, "{name}: round trip of {printed:?}");
        }
    }
}

#[test]
fn parse_weight_seeds() {
    for (name, data) in seeds("parse_weight") {
        let Ok(text) = std::str::from_utf8(&data) else {
            continue;
        };
        if let Ok(w) = Weight::parse(text) {
            assert!(w.entries().iter().all(|&e| e > 0), "{name}");
            let gcd = w
                .entries()
                .iter()
                .fold(0u32, |acc, &e| num::integer::gcd(acc, e));
            assert_eq!(gcd, 1, "{name}: weight {w} is not primitive");
        }
    }
}

#[test]
fn load_graph_seeds() {
    for (name, data) in seeds("load_graph") {
        let Ok(text) = std::str::from_utf8(&data) else {
            continue;
        };
        let Ok(graph) = DualGraph::from_json(text) else {
            continue;
        };
        let canonical = graph.to_json();
        let reloaded = DualGraph::from_json(&canonical)
            .unwrap_or_else(|e| panic!("{name}: canonical JSON failed to reload: {e}"));
        assert_eq!(reloaded.vertices(), graph.vertices(), "{name}");
        assert_eq!(reloaded.edges(), graph.edges(), "{name}");
        if graph.vertices().len() > 12 {
            continue;
        }
        let _ = dualgraph::fundamental_cycle(&graph);
        let _ = dualgraph::elliptic_invariants(&graph);
        if let Ok(system) = dualgraph::discrepancy_system(&graph) {
            dualgraph::klt_verdict(&system);
        }
    }
}

#[test]
fn load_corpus_seeds() {
    for (name, data) in seeds("load_corpus") {
        let Ok(text) = std::str::from_utf8(&data) else {
            continue;
        };
        let Ok(rows) = corpus::load(text) else {
            continue;
        };
        if rows.len() > 4 {
            continue;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.f.len() <= 200 && row.ell.len() <= 200 {
                corpus::verify_row(i, row);
            }
        }
        let _ = name;
    }
}
