#![no_main]

use libfuzzer_sys::fuzz_target;
use glhat::kacmoody::{parse_matrix_fixture, realization_from_fixture};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_matrix_fixture(text);
        // building a realization validates the algebra; it must reject bad
        // fixtures with an error, not a panic
        let _ = realization_from_fixture("fuzz", text);
    }
});
