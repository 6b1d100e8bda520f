#![no_main]

use libfuzzer_sys::fuzz_target;
use glhat_cli::config::{parse_config_file, resolve};

fuzz_target!(|data: &[u8]| {
    // Settings files are untrusted input: parsing and resolution must only
    // ever return a clean ConfigInvalid, never panic.
    if let Ok(text) = std::str::from_utf8(data) {
        if text.contains("g2-fixture") {
            return; // do not touch the filesystem while fuzzing
        }
        if let Ok(settings) = parse_config_file(text) {
            let _ = resolve(&settings);
        }
    }
});
