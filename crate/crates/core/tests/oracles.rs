mod common;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use gvcenter_core::blocks::{abelian_closed_form, block_dim, Blocks, FusionRing};
use gvcenter_core::center::simples;
use gvcenter_core::groups::FiniteGroup;

use common::*;

#[test]
fn fusion_blocks_match_brute_force_tensor_powers() {
    for n in [2usize, 3] {
        for k in 0..n as i64 {
            let cat = cyclic(n, 0, k);
            for genus in 0..=2u32 {
                let fast = block_dim(&cat, genus as u64, 32).unwrap();
                let slow = brute_force_block(&cat, genus);
                assert_eq!(fast, BigUint::from(slow), "{} g={genus}", describe(&cat));
            }
        }
    }
}

#[test]
fn brute_force_twisted_z2() {
    let cat = cyclic(2, 1, 0);
    for genus in 0..=2u32 {
        assert_eq!(block_dim(&cat, genus as u64, 32).unwrap(), BigUint::from(brute_force_block(&cat, genus)));
    }
}

#[test]
fn s3_genus_two_verlinde() {
    let cat = untwisted(s3());
    let list = simples(&cat).unwrap();
    let dims: Vec<u64> = list.iter().map(|s| s.dim).collect();
    assert_eq!(verlinde(&dims, 6, 2), BigUint::from(116u32));
    assert_eq!(block_dim(&cat, 2, 32).unwrap(), BigUint::from(116u32));
    let blocks = Blocks::new(&cat, &list).unwrap();
    for genus in 1..=5u32 {
        assert_eq!(blocks.dim(genus as u64), verlinde(&dims, 6, genus), "g={genus}");
    }
}

#[test]
fn verlinde_on_abelian_spherical_inputs() {
    for cat in [cyclic(2, 0, 0), cyclic(2, 0, 1), cyclic(3, 0, 0), cyclic(4, 0, 2), untwisted(klein())] {
        let n = cat.group().order() as u64;
        let list = simples(&cat).unwrap();
        let dims: Vec<u64> = list.iter().map(|s| s.dim).collect();
        let blocks = Blocks::new(&cat, &list).unwrap();
        for genus in 1..=4u32 {
            assert_eq!(blocks.dim(genus as u64), verlinde(&dims, n, genus), "{} g={genus}", describe(&cat));
        }
    }
}

#[test]
fn closed_form_for_small_cyclic_groups() {
    for n in [2usize, 3] {
        for k in 0..n as i64 {
            let cat = cyclic(n, 0, k);
            let list = simples(&cat).unwrap();
            let blocks = Blocks::new(&cat, &list).unwrap();
            for genus in 0..=6 {
                assert_eq!(blocks.dim(genus), abelian_closed_form(&cat, genus).unwrap(), "{} g={genus}", describe(&cat));
            }
        }
    }
}

#[test]
fn torus_block_counts_simples() {
    let mut inputs = vec![cyclic(2, 1, 0), untwisted(s3())];
    inputs.extend(all_pivotal(FiniteGroup::cyclic(2)));
    inputs.extend(all_pivotal(FiniteGroup::cyclic(3)));
    inputs.extend(all_pivotal(klein()));
    for cat in inputs {
        let count = simples(&cat).unwrap().len();
        assert_eq!(block_dim(&cat, 1, 32).unwrap(), BigUint::from(count), "{}", describe(&cat));
    }
}

#[test]
fn explicit_and_character_fusion_agree() {
    for cat in supported_family() {
        let list = simples(&cat).unwrap();
        if !cat.lambda().is_trivial() || list.iter().any(|s| s.object.is_none()) {
            continue;
        }
        let explicit = FusionRing::from_objects(&list).unwrap();
        let characters = FusionRing::from_characters(&list).unwrap();
        assert_eq!(explicit, characters, "{}", describe(&cat));
    }
}

#[test]
fn character_fusion_is_a_fusion_ring() {
    let cat = untwisted(s3());
    let list = simples(&cat).unwrap();
    let ring = FusionRing::from_characters(&list).unwrap();
    assert!(ring.is_commutative());
    assert!(ring.is_associative());
    for s in 0..ring.rank() {
        for t in 0..ring.rank() {
            let total: u64 = (0..ring.rank()).map(|u| ring.structure[s][t][u] * list[u].dim).sum();
            assert_eq!(total, list[s].dim * list[t].dim);
            assert_eq!(ring.structure[s][t][ring.unit], u64::from(ring.dual[s] == t));
        }
    }
    // s⊗s = I ⊕ sign ⊕ (a two-dimensional simple) for each two-dimensional s
    let sign = (0..list.len()).find(|&s| s != ring.unit && list[s].dim == 1).unwrap();
    for s in (0..list.len()).filter(|&s| list[s].dim == 2) {
        let row = &ring.structure[s][s];
        assert_eq!(row.iter().sum::<u64>(), 3, "{}", list[s].label);
        assert_eq!((row[ring.unit], row[sign]), (1, 1), "{}", list[s].label);
    }
}

#[test]
fn block_dims_fit_in_u64_for_small_genus() {
    let cat = untwisted(s3());
    let d = block_dim(&cat, 10, 32).unwrap();
    assert!(d.to_u64().is_some());
}

