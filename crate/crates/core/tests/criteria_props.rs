//! Criterion-level properties: firing records re-audit against the data,
//! the general criterion is monotone under enlarging the nonempty set,
//! and the fast criterion implies the cumulative winding inequalities.

mod common;

use std::collections::BTreeSet;

use common::*;
use mixedtori::config::AnalysisConfig;
use mixedtori::criteria::{
    count_criterion, fast_criterion, general_criterion, general_criterion_with_set,
    resolve_quantity,
};
use mixedtori::multiplicity::MsMethod;
use mixedtori::newton::{newton_boundary, support};
use mixedtori::winding::{multiplicity_table, winding_profile, MultiplicityTable, WindingProfile};
use mixedtori::MixedPolynomial;
use rand::Rng;

fn fixture_data(text: &str) -> (MultiplicityTable, WindingProfile) {
    let cfg = AnalysisConfig::default();
    let p = MixedPolynomial::parse(text).unwrap();
    let b = newton_boundary(&support(&p)).unwrap();
    let tab = multiplicity_table(&p, &b, &cfg).unwrap();
    let prof = winding_profile(&tab);
    (tab, prof)
}

/// Synthetic table with the structural zeroes at the extremes; contents
/// otherwise random.
fn random_table(
    rng: &mut rand_chacha::ChaCha8Rng,
    n_faces: usize,
) -> (MultiplicityTable, WindingProfile) {
    let nv = n_faces + 1;
    let mut ms_t: Vec<i64> = (0..nv).map(|_| rng.gen_range(-4..=4)).collect();
    let mut ms_phi: Vec<i64> = (0..nv).map(|_| rng.gen_range(-4..=4)).collect();
    ms_t[0] = 0;
    ms_phi[nv - 1] = 0;
    let tab = MultiplicityTable {
        ms_t,
        ms_phi,
        t_angles: vec![Vec::new(); nv],
        phi_angles: vec![Vec::new(); nv],
        method_t: vec![MsMethod::Factorization; nv],
        method_phi: vec![MsMethod::Factorization; nv],
    };
    let prof = winding_profile(&tab);
    (tab, prof)
}

fn fired_union(
    tab: &MultiplicityTable,
    prof: &WindingProfile,
    set: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    general_criterion_with_set(tab, prof, set)
        .into_iter()
        .flat_map(|o| o.essential_tori)
        .collect()
}

#[test]
fn firing_records_audit_against_the_data() {
    let mut sources: Vec<(MultiplicityTable, WindingProfile)> =
        FIXTURES.iter().map(|t| fixture_data(t)).collect();
    let mut rng = rng(0xBEEF);
    for n in 2..=5 {
        for _ in 0..50 {
            sources.push(random_table(&mut rng, n));
        }
    }
    for (tab, prof) in &sources {
        let mut outcomes = vec![fast_criterion(tab), count_criterion(prof)];
        outcomes.extend(general_criterion(tab, prof));
        for out in outcomes.iter().filter(|o| o.fired) {
            assert!(
                !out.evidence.is_empty(),
                "{:?} fired without evidence",
                out.id
            );
            for e in &out.evidence {
                assert!(e.holds(), "{:?}: recorded inequality fails", out.id);
                assert_eq!(
                    resolve_quantity(tab, prof, &e.quantity),
                    Some(e.value),
                    "{:?}: {} does not resolve to {}",
                    out.id,
                    e.quantity,
                    e.value
                );
            }
        }
    }
}

#[test]
fn general_criterion_is_monotone_under_enlarging_the_set() {
    let mut sources: Vec<(MultiplicityTable, WindingProfile)> =
        FIXTURES.iter().map(|t| fixture_data(t)).collect();
    let mut rng = rng(0x30303);
    for n in 2..=5 {
        for _ in 0..100 {
            sources.push(random_table(&mut rng, n));
        }
    }
    for (tab, prof) in &sources {
        let n = prof.face_count();
        let certified = &prof.certified_nonempty;
        let baseline = fired_union(tab, prof, certified);
        let complement: Vec<usize> = (1..=n).filter(|i| !certified.contains(i)).collect();
        // All supersets of the certified set within 1..=N.
        for mask in 0u32..(1 << complement.len()) {
            let mut set = certified.clone();
            for (bit, &idx) in complement.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    set.insert(idx);
                }
            }
            let enlarged = fired_union(tab, prof, &set);
            assert!(
                baseline.is_subset(&enlarged),
                "enlarging {certified:?} to {set:?} lost tori: {baseline:?} -> {enlarged:?}\n\
                 ms_t = {:?}, ms_phi = {:?}",
                tab.ms_t,
                tab.ms_phi
            );
        }
    }
}

#[test]
fn fast_criterion_implies_cumulative_winding_inequalities() {
    let mut sources: Vec<(MultiplicityTable, WindingProfile)> =
        FIXTURES.iter().map(|t| fixture_data(t)).collect();
    let mut rng = rng(0xFA57);
    for n in 2..=5 {
        for _ in 0..100 {
            sources.push(random_table(&mut rng, n));
        }
    }
    for (tab, prof) in &sources {
        let out = fast_criterion(tab);
        for &i in &out.essential_tori {
            // w(L₁∪…∪Lᵢ) = ms_t[i] and w'(L_{i+1}∪…∪L_N) = ms_phi[i].
            assert_eq!(prof.w_in[i - 1], tab.ms_t[i]);
            assert_eq!(prof.w_out[i], tab.ms_phi[i]);
            assert!(prof.w_in[i - 1].abs() > 1);
            assert!(prof.w_out[i].abs() > 1);
        }
    }
}
