#![no_main]

use crosskit_map::{decode, encode};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(d) = decode(data) else { return };
    let report = d.validate();
    let text = encode(&d);
    let again = decode(text.as_bytes()).expect("encoded drawings decode");
    assert_eq!(encode(&again), text);
    assert_eq!(again.validate().passed(), report.passed());
    assert_eq!(again.crossings_total(), d.crossings_total());
});
