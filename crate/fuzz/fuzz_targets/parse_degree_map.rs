#![no_main]

use libfuzzer_sys::fuzz_target;
use repstab::fim_plus::{parse_degree_map, FimGeneratorSpec};

fuzz_target!(|data: &[u8]| {
    if let Ok(input) = std::str::from_utf8(data) {
        if let Ok(map) = parse_degree_map(input) {
            // Accepted input must round-trip through the canonical form.
            let spec = FimGeneratorSpec::new(map);
            let reparsed: FimGeneratorSpec = spec
                .to_string()
                .parse()
                .expect("canonical form re-parses");
            assert_eq!(spec, reparsed);
        }
    }
});
