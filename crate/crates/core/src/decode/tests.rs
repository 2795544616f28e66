use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::codes::omec_code;
use crate::gint::GaussPrime;
use crate::ring::PrimeContext;
use crate::selfdual::catalog;

const B: u64 = u64::MAX;

fn ctx(a: u64, b: u64) -> Arc<PrimeContext> {
    PrimeContext::shared(GaussPrime::new(a, b).unwrap()).unwrap()
}

fn small_code() -> LinearCode {
    LinearCode::from_parity_check(ctx(1, 4), vec![vec![1, 5, 8, 6], vec![1, 14, 9, 7]]).unwrap()
}

fn ten_five() -> LinearCode {
    catalog()[0].code().unwrap()
}

#[test]
fn syndromes_of_worked_examples() {
    assert_eq!(syndrome(&small_code(), &[2, 9, 12, 1]).unwrap(), vec![13, 5]);
    let c = ten_five();
    assert_eq!(syndrome(&c, &[1, 2, 0, 1, 11, 2, 1, 9, 12, 8]).unwrap(), vec![4, 10, 0, 6, 5]);
    let word = c.encode(&[3, 0, 7, 1, 12]);
    assert!(syndrome(&c, &word).unwrap().iter().all(|&x| x == 0));
    assert!(matches!(syndrome(&c, &[1, 2]), Err(Error::LengthMismatch { expected: 10, actual: 2 })));
}

#[test]
fn five_equally_near_leaders() {
    let code = small_code();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    assert_eq!(t.len(), 289);
    assert_eq!(t.leader(&[13, 5]).unwrap(), &[8, 1, 0, 0]);
    assert_eq!(t.leader_weight(&[13, 5]).unwrap(), 3);
    assert_eq!(t.minimal_count(&[13, 5]).unwrap(), 5);
    let r = [2, 9, 12, 1];
    let d = t.decode(&r).unwrap();
    assert!(d.ambiguous);
    assert_eq!(d.codeword, vec![11, 8, 12, 1]);
    let listed: BTreeSet<Vector> = t.list_leaders(&r).unwrap().into_iter().collect();
    let expected: BTreeSet<Vector> = [
        vec![8, 1, 0, 0],
        vec![0, 1, 4, 13],
        vec![0, 9, 13, 0],
        vec![0, 0, 5, 4],
        vec![1, 0, 13, 13],
    ]
    .into_iter()
    .collect();
    assert_eq!(listed, expected);
    let candidates: BTreeSet<Vector> = listed.iter().map(|u| fp::sub_vec(&r, u, 17)).collect();
    for s in [[11, 8, 12, 1], [2, 8, 8, 5], [2, 0, 16, 1], [2, 9, 7, 14], [1, 9, 16, 5]] {
        assert!(candidates.contains(&s.to_vec()));
        assert!(code.contains(&s));
    }
}

#[test]
fn worked_example_on_self_dual_code() {
    let code = ten_five();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    assert_eq!(t.correction_radius(), 3);
    let sent = vec![0, 0, 0, 1, 11, 2, 1, 9, 12, 8];
    assert!(code.contains(&sent));
    let d = t.decode(&[1, 2, 0, 1, 11, 2, 1, 9, 12, 8]).unwrap();
    assert_eq!(d.error, vec![1, 2, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(d.codeword, sent);
    assert_eq!(d.error_weight, 3);
    assert!(!d.ambiguous);
    let d = t.decode(&[1, 1, 1, 1, 11, 2, 1, 9, 12, 8]).unwrap();
    assert_eq!(d.error, vec![1, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(fp::hamming(&d.error), 3);
    assert_eq!(d.codeword, sent);
    assert!(!d.ambiguous);
    let d = t.decode(&sent).unwrap();
    assert_eq!(d.codeword, sent);
    assert!(d.error.iter().all(|&x| x == 0));
}

#[test]
fn omec_table_holds_single_unit_errors() {
    let c = ctx(2, 3);
    let code = omec_code(c.clone()).unwrap();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    assert_eq!(t.len(), 13);
    let mut singles = 0;
    for (s, leader, w, unique) in t.entries() {
        assert!(unique);
        if s == [0] {
            assert_eq!(w, 0);
            assert!(leader.iter().all(|&x| x == 0));
        } else {
            assert_eq!(w, 1);
            assert_eq!(fp::hamming(leader), 1);
            singles += 1;
        }
    }
    assert_eq!(singles, 12);
}

/// Brute force over every vector: leader weights are minimal and the tie
/// counts are exact.
#[test]
fn leaders_are_minimal_by_brute_force() {
    for (code, metric) in [
        (small_code(), Metric::Mannheim),
        (small_code(), Metric::Hamming),
        (omec_code(ctx(1, 4)).unwrap(), Metric::Mannheim),
    ] {
        let t = SyndromeTable::build(&code, metric, B).unwrap();
        let p = code.p();
        let mut best: HashMap<Vector, (u32, u32)> = HashMap::new();
        for i in 0..(p as u64).pow(code.n() as u32) {
            let v = fp::index_to_vec(i, code.n(), p);
            let w = metric.weight_of(code.ctx(), &v);
            let e = best.entry(syndrome(&code, &v).unwrap()).or_insert((u32::MAX, 0));
            if w < e.0 {
                *e = (w, 1);
            } else if w == e.0 {
                e.1 += 1;
            }
        }
        assert_eq!(best.len(), t.len());
        for (s, leader, w, _) in t.entries() {
            assert_eq!(syndrome(&code, leader).unwrap(), s);
            assert_eq!(metric.weight_of(code.ctx(), leader), w);
            assert_eq!(best[&s], (w, t.minimal_count(&s).unwrap()));
        }
    }
}

#[test]
fn corrects_everything_within_radius_exhaustively() {
    let code = small_code();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    let radius = t.correction_radius();
    assert!(radius >= 1);
    let sent = code.encode(&[5, 11]);
    for i in 0..17u64.pow(4) {
        let e = fp::index_to_vec(i, 4, 17);
        if Metric::Mannheim.weight_of(code.ctx(), &e) > radius {
            continue;
        }
        let d = t.decode(&fp::add_vec(&sent, &e, 17)).unwrap();
        assert_eq!(d.codeword, sent);
        assert!(!d.ambiguous);
    }
}

fn random_error(code: &LinearCode, rng: &mut ChaCha8Rng, max_weight: u32) -> Vector {
    loop {
        let e: Vector = (0..code.n())
            .map(|_| if rng.gen_bool(0.3) { rng.gen_range(1..code.p()) } else { 0 })
            .collect();
        if Metric::Mannheim.weight_of(code.ctx(), &e) <= max_weight {
            return e;
        }
    }
}

#[test]
fn sampled_correction_on_catalog_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for entry in catalog().iter().take(2) {
        let code = entry.code().unwrap();
        let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
        assert_eq!(t.min_distance(), entry.d_pi);
        for _ in 0..2_000 {
            let msg: Vector = (0..code.k()).map(|_| rng.gen_range(0..code.p())).collect();
            let sent = code.encode(&msg);
            let e = random_error(&code, &mut rng, t.correction_radius());
            let d = t.decode(&fp::add_vec(&sent, &e, code.p())).unwrap();
            assert_eq!(d.codeword, sent);
            assert_eq!(d.error, e);
            assert!(!d.ambiguous);
        }
    }
}

#[test]
fn exhaustive_search_agrees_with_table() {
    let code = ten_five();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let e = random_error(&code, &mut rng, 3);
        let nn = decode_nn(&code, &e, Metric::Mannheim, B).unwrap();
        assert_eq!(nn.codeword, t.decode(&e).unwrap().codeword);
        assert_eq!(nn.ties, 1);
    }
    let w = code.encode(&[1, 2, 3, 4, 5]);
    let nn = decode_nn(&code, &w, Metric::Hamming, B).unwrap();
    assert_eq!((nn.codeword, nn.distance), (w, 0));
}

#[test]
fn nearest_reports_ties() {
    let code = small_code();
    let nn = decode_nn(&code, &[2, 9, 12, 1], Metric::Mannheim, B).unwrap();
    assert_eq!(nn.distance, 3);
    assert_eq!(nn.ties, 5);
    assert_eq!(nn.codeword, vec![1, 9, 16, 5]);
}

#[test]
fn mannheim_table_beats_hamming_table() {
    let code = ten_five();
    let m = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    let h = SyndromeTable::build(&code, Metric::Hamming, B).unwrap();
    assert_eq!(h.correction_radius(), 2);
    let cmp = compare_tables(&m, &h, 3).unwrap();
    assert_eq!(cmp.mannheim_corrected, cmp.patterns);
    assert!(cmp.hamming_corrected < cmp.mannheim_corrected);
    let e = cmp.witness.unwrap();
    assert_eq!(Metric::Mannheim.weight_of(code.ctx(), &e), 3);
    assert_eq!(fp::hamming(&e), 3);
    let sent = code.encode(&[4, 0, 9, 1, 2]);
    let r = fp::add_vec(&sent, &e, 13);
    assert_eq!(m.decode(&r).unwrap().codeword, sent);
    assert_ne!(h.decode(&r).unwrap().codeword, sent);
}

#[test]
fn perfect_code_fast_path() {
    let c = ctx(2, 5);
    let code = omec_code(c.clone()).unwrap();
    assert_eq!((code.n(), code.k()), (7, 6));
    let sent = code.encode(&[1, 2, 3, 4, 5, 6]);
    let d = decode_perfect(&code, &sent, B).unwrap();
    assert_eq!(d.codeword, sent);
    let mut cases = 0;
    for j in 0..7 {
        for u in c.units() {
            let mut e = vec![0; 7];
            e[j] = u;
            let d = decode_perfect(&code, &fp::add_vec(&sent, &e, 29), B).unwrap();
            assert_eq!(d.codeword, sent);
            assert_eq!(d.error, e);
            cases += 1;
        }
    }
    assert_eq!(cases, 28);
    // Two errors land in another codeword's ball without any warning.
    let mut e = vec![0; 7];
    e[0] = 1;
    e[1] = 1;
    let r = fp::add_vec(&sent, &e, 29);
    let d = decode_perfect(&code, &r, B).unwrap();
    assert_ne!(d.codeword, sent);
    assert!(code.contains(&d.codeword));
    assert_eq!(d.error_weight, 1);
    assert!(matches!(decode_perfect(&ten_five(), &[0; 10], B), Err(Error::NotPerfect(_))));
}

#[test]
fn binary_export_round_trips() {
    let code = small_code();
    let t = SyndromeTable::build(&code, Metric::Mannheim, B).unwrap();
    let bytes = t.to_bytes();
    assert_eq!(&bytes[..12], &[17, 0, 0, 0, 4, 0, 0, 0, 2, 0, 0, 0]);
    assert_eq!(bytes.len(), 12 + 289 * 4 * 2);
    let (p, n, k, leaders) = read_binary(&bytes).unwrap();
    assert_eq!((p, n, k), (17, 4, 2));
    for ((_, leader, _, _), back) in t.entries().zip(&leaders) {
        assert_eq!(leader, back.as_slice());
    }
    assert!(read_binary(&bytes[..100]).is_err());
}

#[test]
fn table_respects_budget() {
    let err = SyndromeTable::build(&ten_five(), Metric::Mannheim, 1000).unwrap_err();
    assert!(err.is_budget());
}
