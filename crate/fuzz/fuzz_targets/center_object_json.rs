#![no_main]
use std::sync::{Arc, OnceLock};

use libfuzzer_sys::fuzz_target;
use gvcenter_core::center::{CenterObject, CenterObjectRepr};
use gvcenter_core::cocycles::ThreeCocycle;
use gvcenter_core::groups::GroupHom;
use gvcenter_core::pointed::PointedCategory;

fn category() -> Arc<PointedCategory> {
    static CAT: OnceLock<Arc<PointedCategory>> = OnceLock::new();
    CAT.get_or_init(|| {
        let lambda = ThreeCocycle::cyclic(3, 1);
        let d = GroupHom::trivial(lambda.group().clone());
        Arc::new(PointedCategory::new(lambda, d).unwrap())
    })
    .clone()
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(repr) = serde_json::from_str::<CenterObjectRepr>(s) else { return };
    if repr.graded_dims.values().any(|&d| d > 8) {
        return;
    }
    if let Ok(obj) = CenterObject::from_repr(category(), &repr) {
        obj.verify_half_braiding().unwrap();
        let again = CenterObject::from_repr(category(), &obj.to_repr()).unwrap();
        assert_eq!(again.dims(), obj.dims());
    }
});
