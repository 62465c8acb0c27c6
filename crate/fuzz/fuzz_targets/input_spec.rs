#![no_main]

use libfuzzer_sys::fuzz_target;
use toric_nash::input::InputSpec;
use toric_nash::semigroup::validate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = InputSpec::from_json(text) else {
        return;
    };
    let small =
        spec.generators.len() <= 8 && spec.generators.iter().flatten().all(|c| c.abs() <= 16);
    if let (true, Ok(gens)) = (small, spec.generator_set()) {
        if let Ok(vs) = validate(&gens) {
            let names = spec.variable_names(&vs);
            assert_eq!(names.len(), vs.nvars());
            assert_eq!(vs.l() + vs.m() + vs.n(), vs.nvars());
        }
    }
});
