#![no_main]

use involutive::{Monomial, VariableContext};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let ctx = VariableContext::new(["x", "y", "z", "t"]).unwrap();
    if let Ok(m) = Monomial::parse(text, &ctx) {
        let rendered = m.display(&ctx).to_string();
        assert_eq!(Monomial::parse(&rendered, &ctx).unwrap(), m);
    }
});
