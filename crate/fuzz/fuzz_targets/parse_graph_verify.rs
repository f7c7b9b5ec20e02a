#![no_main]

use libfuzzer_sys::fuzz_target;
use lgg_core::{graph, io};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = io::read_graph(text) else {
        return;
    };
    let g = &file.graph;
    if g.vertex_count() > 200 || g.edge_count() > 2000 {
        return;
    }
    // The per-vertex and per-edge verifiers must agree.
    assert_eq!(graph::verify(g), graph::verify_direct(g));
});
