#![no_main]
use libfuzzer_sys::fuzz_target;
use gvcenter_core::config::GroupSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(spec) = GroupSpec::from_json(s) else { return };
    if let Ok(g) = spec.build(32) {
        assert!(g.order() <= 32);
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }
});
