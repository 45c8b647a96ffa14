#![no_main]

use involutive::{MonomialOrdering, Polynomial, VariableContext};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let ctx = VariableContext::new(["x", "y", "z", "t"]).unwrap();
    for order in MonomialOrdering::ALL {
        if let Ok(p) = Polynomial::parse(text, &ctx, order) {
            let rendered = p.display(&ctx).to_string();
            assert_eq!(Polynomial::parse(&rendered, &ctx, order).unwrap(), p);
        }
    }
});
