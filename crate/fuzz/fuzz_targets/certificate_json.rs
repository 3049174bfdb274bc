#![no_main]

use crosskit_lemma::PipelineCertificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(c) = serde_json::from_str::<PipelineCertificate>(text) else { return };
    let back: PipelineCertificate = serde_json::from_str(&c.to_json()).expect("serialized certificates parse");
    assert_eq!(back, c);
    let _ = c.failures();
});
