#![no_main]
use libfuzzer_sys::fuzz_target;
use gvcenter_core::config::SessionConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(mut cfg) = SessionConfig::from_json(s) else { return };
    cfg.caps.group_order = cfg.caps.group_order.min(32);
    cfg.caps.conductor = cfg.caps.conductor.min(64);
    if let Ok(session) = cfg.validate() {
        assert!(session.category.verify_pivotality().is_ok());
    }
});
