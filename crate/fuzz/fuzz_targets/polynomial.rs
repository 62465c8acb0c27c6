#![no_main]

use libfuzzer_sys::fuzz_target;
use toric_nash::algebra::parse::{parse_binomial, parse_monomial, parse_polynomial};
use toric_nash::algebra::VariableNames;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let names = VariableNames::custom(["x", "y", "z", "w", "t"].map(String::from).to_vec());
    if let Ok(p) = parse_polynomial(text, &names) {
        let again =
            parse_polynomial(&p.render(&names), &names).expect("rendered polynomials parse");
        assert_eq!(again, p);
    }
    if let Ok(b) = parse_binomial(text, &names) {
        let again = parse_binomial(&b.render(&names), &names).expect("rendered binomials parse");
        assert_eq!(again, b);
    }
    let _ = parse_monomial(text, &names);
});
