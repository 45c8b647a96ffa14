#![no_main]

use involutive::ProblemFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(problem) = ProblemFile::parse(&text) {
        let rendered = problem.render();
        let again = ProblemFile::parse(&rendered).unwrap();
        assert_eq!(again.polynomials(), problem.polynomials());
        let _ = problem.monomials();
    }
});
