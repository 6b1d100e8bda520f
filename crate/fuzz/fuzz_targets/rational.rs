#![no_main]

use libfuzzer_sys::fuzz_target;
use glhat::scalar::Rational;

fuzz_target!(|data: &[u8]| {
    // The rational parser must never panic, and printing must round-trip.
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(value) = text.parse::<Rational>() {
            let reprinted = value.to_string();
            let reparsed = reprinted.parse::<Rational>().expect("canonical form parses");
            assert_eq!(value, reparsed);
        }
    }
});
