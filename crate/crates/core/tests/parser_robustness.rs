//! Replays the fuzz corpus through the parser entry points, plus mutated
//! seeds, checking that malformed input is rejected without panicking.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use proptest::prelude::*;

use gvcenter_core::center::{CenterObject, CenterObjectRepr};
use gvcenter_core::cocycles::ThreeCocycle;
use gvcenter_core::config::{GroupSpec, SessionConfig};
use gvcenter_core::groups::GroupHom;
use gvcenter_core::pointed::PointedCategory;
use gvcenter_core::scalars::{Cyclotomic, RootOfUnity};

fn corpus(target: &str) -> Vec<String> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fuzz", "corpus", target].iter().collect();
    let mut files: Vec<PathBuf> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files.iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

fn config_json(s: &str) -> bool {
    let Ok(mut cfg) = SessionConfig::from_json(s) else { return false };
    cfg.caps.group_order = cfg.caps.group_order.min(32);
    cfg.caps.conductor = cfg.caps.conductor.min(64);
    match cfg.validate() {
        Ok(session) => {
            assert!(session.category.verify_pivotality().is_ok());
            true
        }
        Err(_) => false,
    }
}

fn scalar_json(s: &str) -> bool {
    let mut parsed = false;
    if let Ok(r) = serde_json::from_str::<RootOfUnity>(s) {
        let back: RootOfUnity = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        parsed = true;
    }
    if let Ok(c) = serde_json::from_str::<Cyclotomic>(s) {
        let back: Cyclotomic = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        parsed = true;
    }
    parsed
}

fn category() -> Arc<PointedCategory> {
    let lambda = ThreeCocycle::cyclic(3, 1);
    let d = GroupHom::trivial(lambda.group().clone());
    Arc::new(PointedCategory::new(lambda, d).unwrap())
}

fn center_object_json(cat: &Arc<PointedCategory>, s: &str) -> bool {
    let Ok(repr) = serde_json::from_str::<CenterObjectRepr>(s) else { return false };
    if repr.graded_dims.values().any(|&d| d > 8) {
        return false;
    }
    match CenterObject::from_repr(cat.clone(), &repr) {
        Ok(obj) => {
            obj.verify_half_braiding().unwrap();
            let again = CenterObject::from_repr(cat.clone(), &obj.to_repr()).unwrap();
            assert_eq!(again.dims(), obj.dims());
            true
        }
        Err(_) => false,
    }
}

fn group_config(s: &str) -> bool {
    let Ok(spec) = GroupSpec::from_json(s) else { return false };
    match spec.build(32) {
        Ok(g) => {
            assert!(g.order() <= 32);
            for a in g.elements() {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
            }
            true
        }
        Err(_) => false,
    }
}

#[test]
fn corpus_seeds_are_accepted() {
    let cat = category();
    for s in corpus("config_json") {
        assert!(config_json(&s), "{s}");
    }
    for s in corpus("scalar_json") {
        assert!(scalar_json(&s), "{s}");
    }
    for s in corpus("center_object_json") {
        assert!(center_object_json(&cat, &s), "{s}");
    }
    for s in corpus("group_config") {
        assert!(group_config(&s), "{s}");
    }
}

#[test]
fn hostile_inputs_are_rejected() {
    assert!(!group_config(r#"{"type":"perm","degree":18446744073709551615,"generators":[[0]]}"#));
    assert!(group_config(r#"{"type":"perm","degree":18446744073709551615,"generators":[]}"#));
    assert!(!group_config(r#"{"type":"cyclic","n":18446744073709551615}"#));
    assert!(!group_config(r#"{"type":"cayley","table":[[0,1],[0,1]]}"#));
    assert!(!group_config(r#"{"type":"cayley","table":[]}"#));
    let mut deep = String::from(r#"{"type":"cyclic","n":2}"#);
    for _ in 0..40 {
        deep = format!(r#"{{"type":"product","factors":[{deep}]}}"#);
    }
    assert!(!group_config(&deep));
    assert!(!scalar_json(r#"{"conductor":18446744073709551615,"coeffs":[]}"#));
    assert!(!scalar_json(r#"{"order":18446744073709551615,"exponent":1}"#));
    assert!(!config_json(r#"{"group":{"type":"cyclic","n":2},"lambda":{"type":"table","order":18446744073709551615,"entries":[]}}"#));
    assert!(!config_json(r#"{"group":{"type":"cyclic","n":2},"d":[{"order":9223372036854775807,"exponent":5}]}"#));
}

fn mutate(seed: &str, ops: &[(usize, u8, u8)]) -> String {
    let mut bytes = seed.as_bytes().to_vec();
    for &(pos, kind, byte) in ops {
        if bytes.is_empty() {
            break;
        }
        let i = pos % bytes.len();
        match kind % 4 {
            0 => bytes[i] = byte,
            1 => {
                bytes.remove(i);
            }
            2 => bytes.insert(i, byte),
            _ => {
                if bytes[i].is_ascii_digit() {
                    bytes[i] = b'0' + (bytes[i] - b'0' + byte % 10) % 10;
                }
            }
        }
    }
    String::from_utf8_lossy(&bytes).into_owned()
}

fn ops() -> impl Strategy<Value = Vec<(usize, u8, u8)>> {
    prop::collection::vec((any::<usize>(), any::<u8>(), prop::sample::select(b"0123456789[]{},:\"-9ae ".to_vec())), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mutated_configs_never_panic(which in any::<prop::sample::Index>(), ops in ops()) {
        let seeds = corpus("config_json");
        config_json(&mutate(which.get(&seeds), &ops));
    }

    #[test]
    fn mutated_scalars_never_panic(which in any::<prop::sample::Index>(), ops in ops()) {
        let seeds = corpus("scalar_json");
        scalar_json(&mutate(which.get(&seeds), &ops));
    }

    #[test]
    fn mutated_center_objects_never_panic(which in any::<prop::sample::Index>(), ops in ops()) {
        let seeds = corpus("center_object_json");
        center_object_json(&category(), &mutate(which.get(&seeds), &ops));
    }

    #[test]
    fn mutated_group_configs_never_panic(which in any::<prop::sample::Index>(), ops in ops()) {
        let seeds = corpus("group_config");
        group_config(&mutate(which.get(&seeds), &ops));
    }
}
