//! Cross-module workflows through the public API.

use kpfaff_core::bipartite::bipartite_pf_det_check;
use kpfaff_core::graphs::{construct_family, delete_edges, enumerate_perfect_matchings, Family, Graph};
use kpfaff_core::pfaffian::{find_pfaffian_orientation, pm_polynomial, Orientation};
use kpfaff_core::pfnum::{
    exact_pfaffian_number, monotonicity_check, verify_certificate, KPfaffianCertificate,
};
use kpfaff_core::polyalg::rational;
use kpfaff_core::Limits;

#[test]
fn k33_certificate_survives_every_single_edge_deletion() {
    let limits = Limits::default();
    let k33 = Graph::complete_bipartite(3, 3);
    let exact = exact_pfaffian_number(&k33, &limits).unwrap();
    for e in 0..k33.edge_count() {
        assert!(monotonicity_check(&k33, &exact.certificate, &[e], &limits).unwrap());
        // K33 minus an edge is planar, hence Pfaffian
        let sub = delete_edges(&k33, &[e]).unwrap().graph;
        assert_eq!(exact_pfaffian_number(&sub, &limits).unwrap().k, 1);
    }
}

#[test]
fn certificate_text_survives_a_graph_file_round_trip() {
    let limits = Limits::default();
    let k33 = Graph::complete_bipartite(3, 3);
    let reread: Graph = k33.to_string().parse().unwrap();
    let exact = exact_pfaffian_number(&k33, &limits).unwrap();
    let cert = KPfaffianCertificate::parse(&reread, &exact.certificate.to_string()).unwrap();
    assert!(verify_certificate(&reread, &cert, &limits).unwrap());
}

#[test]
fn chain_block_orientations_satisfy_the_pf_det_identity() {
    let limits = Limits::default();
    let chain = construct_family(Family::Chain(1)).unwrap();
    for mask in [0u64, 1, 0b1_0101_0101, 0b1_1111_1111] {
        let d = Orientation::from_mask(&chain, mask).unwrap();
        assert!(bipartite_pf_det_check(&d, &limits).unwrap());
    }
}

#[test]
fn pfaffian_orientation_gives_a_one_term_certificate() {
    let limits = Limits::default();
    let grid = Graph::grid(2, 4).unwrap();
    let d = find_pfaffian_orientation(&grid, &limits).unwrap().unwrap();
    let pm = pm_polynomial(&grid, &limits).unwrap();
    let count = enumerate_perfect_matchings(&grid, limits.matchings).unwrap().len();
    assert_eq!(pm.len(), count);
    let plus = KPfaffianCertificate::new(vec![d.clone()], vec![rational(1)]).unwrap();
    let minus = KPfaffianCertificate::new(vec![d], vec![rational(-1)]).unwrap();
    let ok_plus = verify_certificate(&grid, &plus, &limits).unwrap();
    let ok_minus = verify_certificate(&grid, &minus, &limits).unwrap();
    assert!(ok_plus != ok_minus);
}
