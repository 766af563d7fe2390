use tbh_core::algebra::{self, Generator, RelationPair, Word, DEFAULT_TOLERANCE};
use tbh_core::bratteli::build_diagram;
use tbh_core::numerics::{Matrix, Rational};
use tbh_core::partitions::{enum_pk, tableaux, HeckeParams, Partition};
use tbh_core::seminormal::*;

fn sweep(a: usize, b: usize, p: usize, q: usize, kmax: usize) {
    for k in 0..=kmax {
        let hp = HeckeParams::new(a, b, p, q, k).unwrap();
        let diagram = build_diagram(&hp);
        for m in build_all(&hp, Backend::ApproxSqrt).unwrap() {
            let ctx = format!("({a},{b},{p},{q}) k={k} λ={}", m.lambda());
            let paths = diagram.paths_to(m.lambda(), k + 1).unwrap().len();
            assert_eq!(m.dim(), paths, "{ctx}");
            let crit = check_criteria(&m).unwrap();
            assert!(crit.all_pass(), "{ctx}: {:?}", crit.criteria);
            let rel = check_full_relations(&m, DEFAULT_TOLERANCE).unwrap();
            assert!(rel.all_pass(), "{ctx}: {:?}", rel.failures());
            let spec = check_spectra(&m, DEFAULT_TOLERANCE).unwrap();
            assert!(spec.all_pass(), "{ctx}: {:?}", spec.failures());
            let cert = check_simplicity(&m).unwrap();
            assert_eq!(cert.witnesses.len(), m.dim());
            assert!(cert.witnesses.iter().all(|w| w.moves.iter().all(|&j| j < k.max(1))));
        }
    }
}

#[test]
fn unit_parameters_up_to_rank_three() {
    sweep(1, 1, 1, 1, 3);
}

#[test]
fn mixed_parameters_up_to_rank_two() {
    sweep(2, 1, 2, 1, 2);
    sweep(2, 1, 1, 1, 3);
    sweep(3, 2, 2, 1, 2);
}

#[test]
fn self_complementary_first_box() {
    // a + p = b + q makes B = 0, so c_T(1) = 0 can occur.
    let hp = HeckeParams::new(1, 2, 2, 1, 2).unwrap();
    assert!(hp.big_b().is_zero());
    let mut hit = false;
    for m in build_all(&hp, Backend::ApproxSqrt).unwrap() {
        for r in &m.table.rows {
            if r.contents[1].is_zero() {
                hit = true;
                assert!(r.tableau.apply_s0(&hp).is_none());
            }
        }
        assert!(check_full_relations(&m, DEFAULT_TOLERANCE).unwrap().all_pass());
        assert!(check_criteria(&m).unwrap().all_pass());
    }
    assert!(hit);
}

#[test]
fn square_two_by_two() {
    let hp = HeckeParams::new(1, 1, 1, 1, 2).unwrap();
    let m = build_module(&Partition::from_slice(&[2, 2]), &hp, Backend::ApproxSqrt).unwrap();
    let rep = check_criteria(&m).unwrap();
    assert!(rep.all_pass());
    for item in ["1-diag-t", "2-diag-x", "3-commutation", "4-involution", "5-quadratic", "6-braid"] {
        assert!(rep.criteria.iter().any(|c| c.item == item && c.pass));
    }
}

#[test]
fn t_matrices_are_involutions_and_w_commute() {
    let hp = HeckeParams::new(2, 1, 1, 1, 3).unwrap();
    for m in build_all(&hp, Backend::ApproxSqrt).unwrap() {
        let id = Matrix::identity(m.dim());
        for i in 1..3 {
            let t = m.matrix(&Generator::T(i)).unwrap();
            assert!(t.mul(t).unwrap().mat_eq(&id).unwrap());
        }
        for i in 0..=3 {
            let wi = m.matrix(&Generator::W(i)).unwrap();
            assert!(wi.is_exact());
            for j in 0..=3 {
                let wj = m.matrix(&Generator::W(j)).unwrap();
                assert!(wi.mul(wj).unwrap().mat_eq(&wj.mul(wi).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn corrupted_twist_relation_fails() {
    let hp = HeckeParams::new(1, 1, 1, 1, 3).unwrap();
    let catalog: Vec<RelationPair> = algebra::relations_hk_ext_short(&hp)
        .into_iter()
        .map(|mut r| {
            if r.tag == "twist-tw" {
                r.rhs = Word::gen(Generator::W(r.name.as_bytes()[2] as usize - b'0' as usize + 1))
                    * Word::gen(Generator::T(r.name.as_bytes()[2] as usize - b'0' as usize));
            }
            r
        })
        .collect();
    let mut any_fail = false;
    for m in build_all(&hp, Backend::ApproxSqrt).unwrap() {
        let rep = algebra::check_relations(&catalog, &m.assignment().unwrap(), DEFAULT_TOLERANCE).unwrap();
        any_fail |= rep.failures().iter().any(|f| f.family == "twist-tw");
    }
    assert!(any_fail);
}

#[test]
fn content_lists_are_distinct() {
    let hp = HeckeParams::new(3, 2, 2, 1, 3).unwrap();
    for lam in enum_pk(&hp, 3) {
        let ts = tableaux(&lam, &hp).unwrap();
        let mut lists: Vec<Vec<Rational>> = ts.iter().map(|t| t.contents(&hp)[1..].to_vec()).collect();
        lists.sort();
        lists.dedup();
        assert_eq!(lists.len(), ts.len());
    }
}

/// Whenever s_i, s_{i+1} both act nontrivially, the orbit holds six
/// tableaux whose contents at (i, i+1, i+2) run over the permutations of
/// one triple.
#[test]
fn length_three_content_orbits() {
    let hp = HeckeParams::new(2, 1, 1, 1, 3).unwrap();
    let mut seen = 0;
    for lam in enum_pk(&hp, 3) {
        for t in tableaux(&lam, &hp).unwrap() {
            let mut orbit = vec![t.clone()];
            let mut frontier = vec![t.clone()];
            while let Some(u) = frontier.pop() {
                for j in [1, 2] {
                    if let Some(v) = u.apply_si(j) {
                        if !orbit.contains(&v) {
                            orbit.push(v.clone());
                            frontier.push(v);
                        }
                    }
                }
            }
            if orbit.len() == 6 {
                seen += 1;
                let c = t.contents(&hp);
                let mut base = vec![c[1].clone(), c[2].clone(), c[3].clone()];
                base.sort();
                for u in &orbit {
                    let cu = u.contents(&hp);
                    let mut trip = vec![cu[1].clone(), cu[2].clone(), cu[3].clone()];
                    trip.sort();
                    assert_eq!(trip, base);
                    assert_eq!(cu[0], c[0]);
                }
            }
        }
    }
    assert!(seen > 0);
}

/// Orbits of ⟨s_0, s_1⟩ of size eight: first contents range over {±A, ±B}.
#[test]
fn length_four_content_orbits() {
    let mut seen = 0;
    for (a, b, p, q) in [(3, 2, 2, 1), (2, 2, 2, 2), (3, 1, 3, 1), (4, 2, 3, 2), (3, 3, 2, 2)] {
    let hp = HeckeParams::new(a, b, p, q, 2).unwrap();
    for lam in enum_pk(&hp, 2) {
        for t in tableaux(&lam, &hp).unwrap() {
            let mut orbit = vec![t.clone()];
            let mut frontier = vec![t.clone()];
            while let Some(u) = frontier.pop() {
                for j in [0, 1] {
                    if let Some(v) = u.apply(j, &hp) {
                        if !orbit.contains(&v) {
                            orbit.push(v.clone());
                            frontier.push(v);
                        }
                    }
                }
            }
            if orbit.len() == 8 {
                seen += 1;
                let c = t.contents(&hp);
                let (x, y) = (c[1].clone(), c[2].clone());
                let allowed = [x.clone(), -x.clone(), y.clone(), -y.clone()];
                let mut firsts: Vec<Rational> = orbit.iter().map(|u| u.contents(&hp)[1].clone()).collect();
                firsts.sort();
                firsts.dedup();
                assert_eq!(firsts.len(), 4);
                assert!(firsts.iter().all(|f| allowed.contains(f)));
            }
        }
    }
    }
    assert!(seen > 0);
}

#[test]
fn json_dump_round_trips_through_serde() {
    let hp = HeckeParams::new(1, 1, 1, 1, 2).unwrap();
    let m = build_module(&Partition::from_slice(&[2, 2]), &hp, Backend::ApproxSqrt).unwrap();
    let v = m.to_json();
    let text = serde_json::to_string(&v).unwrap();
    assert!(text.contains("\"w_0\""));
    assert_eq!(v["basis"].as_array().unwrap().len(), m.dim());
}
