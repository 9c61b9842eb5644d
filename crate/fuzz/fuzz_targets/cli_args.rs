#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;
use repstab_cli::Cli;

fuzz_target!(|data: &[u8]| {
    if let Ok(input) = std::str::from_utf8(data) {
        // One argument per line; parsing must never panic.
        let args = input.split('\n');
        let _ = Cli::try_parse_from(args);
    }
});
