#![no_main]

use libfuzzer_sys::fuzz_target;
use lgg_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = io::read_graph(text) {
        let written = io::write_graph(&file);
        let again = io::read_graph(&written).expect("re-read");
        assert_eq!(again.graph, file.graph);
        assert_eq!(io::write_graph(&again), written);
    }
});
