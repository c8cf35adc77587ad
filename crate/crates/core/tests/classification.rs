mod common;

use gvcenter_core::classify::{
    aut_tensor_id, caut_tensor_id, exactness_check, muger_data, ribbon_gv_extensions, BalancedBraidedData,
};
use gvcenter_core::groups::FiniteGroup;
use gvcenter_core::gvduality::GvStructure;

use common::*;

#[test]
fn every_center_has_a_unique_ribbon_extension() {
    for cat in supported_family() {
        let data = BalancedBraidedData::from_center(&cat).unwrap();
        let report = ribbon_gv_extensions(&data);
        assert_eq!(report.transparent, vec![data.labels[0].clone()], "{}", describe(&cat));
        assert_eq!(report.extension_candidates.len(), 1, "{}", describe(&cat));
        assert!(report.uniqueness_certified, "{}", describe(&cat));
    }
}

#[test]
fn symmetric_controls_are_not_certified() {
    for (group, count) in [(FiniteGroup::cyclic(2), 2), (FiniteGroup::cyclic(3), 3), (klein(), 4)] {
        let data = BalancedBraidedData::symmetric_vect(&group).unwrap();
        let report = ribbon_gv_extensions(&data);
        assert_eq!(report.extension_candidates.len(), count);
        assert!(!report.uniqueness_certified);
        assert_eq!(muger_data(&data).picard_order, count);
    }
}

#[test]
fn exactness_on_pointed_centers() {
    for cat in supported_family().into_iter().filter(|c| c.group().is_abelian()) {
        let data = BalancedBraidedData::from_center(&cat).unwrap();
        let check = exactness_check(&data).unwrap();
        let n = cat.group().order();
        assert_eq!(check.aut_order, n * n, "{}", describe(&cat));
        assert!(check.kernel_is_caut, "{}", describe(&cat));
        assert!(check.quotient_cyclic, "{}", describe(&cat));
        assert_eq!(check.aut_order, check.caut_order * check.image_order, "{}", describe(&cat));
        // the image is generated by χ ↦ χ(K), trivial exactly when K ≅ I
        let spherical = GvStructure::new(&cat).unwrap().sphericity_report().unwrap().spherical();
        assert_eq!(check.image_order == 1, spherical, "{}", describe(&cat));
    }
}

#[test]
fn caut_is_a_subgroup_of_aut() {
    for cat in [cyclic(4, 0, 1), cyclic(3, 1, 1), with_character_klein()] {
        let data = BalancedBraidedData::from_center(&cat).unwrap();
        let aut = aut_tensor_id(&data).unwrap();
        let caut = caut_tensor_id(&data).unwrap();
        assert_eq!(aut.order() % caut.order(), 0);
        for a in &caut.elements {
            for b in &caut.elements {
                assert!(caut.elements.contains(&a.combine(b, 1)));
            }
        }
    }
}

fn with_character_klein() -> std::sync::Arc<gvcenter_core::pointed::PointedCategory> {
    all_pivotal(klein()).pop().unwrap()
}

#[test]
fn muger_data_of_s3_center() {
    let data = BalancedBraidedData::from_center(&untwisted(s3())).unwrap();
    let m = muger_data(&data);
    assert_eq!(m.transparent.len(), 1);
    assert_eq!(m.picard_order, 1);
    assert_eq!(data.labels.len(), 8);
}
