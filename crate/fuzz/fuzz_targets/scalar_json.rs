#![no_main]
use libfuzzer_sys::fuzz_target;
use gvcenter_core::scalars::{Cyclotomic, RootOfUnity};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = serde_json::from_str::<RootOfUnity>(s) {
        let back: RootOfUnity = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
    if let Ok(c) = serde_json::from_str::<Cyclotomic>(s) {
        let back: Cyclotomic = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
});
