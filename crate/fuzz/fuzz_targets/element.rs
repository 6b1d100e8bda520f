#![no_main]

use libfuzzer_sys::fuzz_target;
use glhat::{LieElement, LoopGen};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // Neither parser may panic; accepted elements must round-trip.
        let _ = text.parse::<LoopGen>();
        if let Ok(elem) = text.parse::<LieElement>() {
            let reprinted = elem.to_string();
            let reparsed = reprinted.parse::<LieElement>().expect("canonical form parses");
            assert_eq!(elem, reparsed);
        }
    }
});
