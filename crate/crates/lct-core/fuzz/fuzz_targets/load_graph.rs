//! Drives the JSON decoder and, on small accepted graphs, the whole
//! pipeline: canonical round trip, fundamental cycle, invariants, and the
//! boundary system. Domain errors are fine; panics are not.

#![no_main]

use lct_core::dualgraph::{self, DualGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(graph) = DualGraph::from_json(text) else {
        return;
    };
    let canonical = graph.to_json();
    let reloaded = DualGraph::from_json(&canonical).expect("canonical JSON reloads");
    assert_eq!(reloaded.vertices(), graph.vertices());
    assert_eq!(reloaded.edges(), graph.edges());
    if graph.vertices().len() > 12 {
        return;
    }
    let _ = dualgraph::fundamental_cycle(&graph);
    let _ = dualgraph::elliptic_invariants(&graph);
    if let Ok(system) = dualgraph::discrepancy_system(&graph) {
        dualgraph::klt_verdict(&system);
    }
});
