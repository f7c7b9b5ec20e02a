#![no_main]

use libfuzzer_sys::fuzz_target;
use lgg_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ps) = io::parse_points(text, 1e-9) {
        // Anything accepted must survive a write and re-read unchanged.
        let again = io::parse_points(&io::write_points(&ps), 1e-9).expect("re-read");
        assert_eq!(again, ps);
    }
});
