mod common;

use gvcenter_core::center::{simples, CenterObject};
use gvcenter_core::gvduality::{gv_dual, theta_scalar, GvStructure};

use common::*;

#[test]
fn simples_verify_and_are_schur() {
    for cat in supported_family() {
        let list = simples(&cat).unwrap();
        let objects: Vec<&CenterObject> = list.iter().filter_map(|s| s.object.as_ref()).collect();
        for (i, a) in objects.iter().enumerate() {
            a.verify_half_braiding().unwrap_or_else(|e| panic!("{}: {e}", describe(&cat)));
            for (j, b) in objects.iter().enumerate() {
                assert_eq!(a.hom_dim(b).unwrap(), usize::from(i == j), "{}", describe(&cat));
            }
        }
        let total: u64 = list.iter().map(|s| s.dim * s.dim).sum();
        let n = cat.group().order() as u64;
        assert_eq!(total, n * n, "{}", describe(&cat));
    }
}

#[test]
fn tensor_and_dual_verify() {
    for cat in supported_family() {
        let list = simples(&cat).unwrap();
        let objects: Vec<&CenterObject> = list.iter().filter_map(|s| s.object.as_ref()).collect();
        let unit = CenterObject::unit(cat.clone());
        for a in &objects {
            let dual = a.rigid_dual();
            dual.verify_half_braiding().unwrap_or_else(|e| panic!("dual {}: {e}", describe(&cat)));
            assert_eq!(dual.tensor(a).unwrap().hom_dim(&unit).unwrap(), 1, "{}", describe(&cat));
            assert_eq!(a.tensor(&dual).unwrap().hom_dim(&unit).unwrap(), 1, "{}", describe(&cat));
            for b in objects.iter().take(6) {
                a.tensor(b).unwrap().verify_half_braiding().unwrap_or_else(|e| panic!("tensor {}: {e}", describe(&cat)));
            }
        }
    }
}

#[test]
fn balancing_is_monoidal() {
    for cat in supported_family() {
        let list = simples(&cat).unwrap();
        let objects: Vec<&CenterObject> = list.iter().filter_map(|s| s.object.as_ref()).collect();
        for a in &objects {
            for b in &objects {
                let ab = a.tensor(b).unwrap();
                let lhs = ab.balancing();
                let rhs = a.double_braiding(b).unwrap().compose(&a.tensor_morphisms(b, &a.balancing(), &b.balancing()));
                assert_eq!(lhs, rhs, "{}", describe(&cat));
            }
        }
    }
}

#[test]
fn ribbon_holds() {
    for cat in supported_family() {
        let gv = GvStructure::new(&cat).unwrap();
        let report = gv.verify_ribbon();
        assert!(report.passed(), "{}: {:?}", describe(&cat), report);
        for s in &gv.simples {
            if let Some(obj) = &s.object {
                assert_eq!(theta_scalar(obj), Some(s.theta));
                gv_dual(obj).verify_half_braiding().unwrap();
            }
        }
    }
}

#[test]
fn sphericity_consistent() {
    for cat in supported_family() {
        let gv = GvStructure::new(&cat).unwrap();
        let r = gv.sphericity_report().unwrap_or_else(|e| panic!("{}: {e}", describe(&cat)));
        let d2 = cat.d().values().iter().all(|v| v.pow(2).is_one());
        assert_eq!(r.dualizing_is_unit, d2, "{}", describe(&cat));
    }
}
