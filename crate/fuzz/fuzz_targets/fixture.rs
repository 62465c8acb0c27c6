#![no_main]

use libfuzzer_sys::fuzz_target;
use toric_nash::fixtures::parse_fixture;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_fixture("fuzz.json", text) {
        assert_eq!(f.names.len(), f.generators.len());
    }
});
