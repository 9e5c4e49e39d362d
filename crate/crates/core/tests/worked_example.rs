mod common;

use syzlift::betti::{betti_minimal_from_nonminimal, betti_nonminimal, BettiTable};
use syzlift::hilbert::IntPoly;
use syzlift::io::{format_resolution, stats_report};
use syzlift::{resolve, LiftAlgorithm, Reorder, ResolveOptions};

use common::worked_example;

const RESOLUTION: &str = "ring 32003 w,x,y,z lp
minimal true
module 0 0
module 1 2 2 2
module 2 3 3
map 1 1x3
";

#[test]
fn every_algorithm_gives_the_same_resolution() {
    let (ring, polys) = worked_example();
    let mut texts = Vec::new();
    for alg in LiftAlgorithm::ALL {
        let opts = ResolveOptions {
            algorithm: alg,
            ..Default::default()
        };
        let res = resolve(&ring, &polys, &[0], &opts).unwrap();
        assert!(res.is_complex() && res.is_minimal(), "{alg}");
        texts.push(format_resolution(&res));
    }
    assert!(texts.windows(2).all(|w| w[0] == w[1]));
    assert!(texts[0].starts_with(RESOLUTION), "{}", texts[0]);
    assert!(texts[0].contains("map 2 3x2\ncol 0\n0 -y+z\n1 x+z\n2 x+3*z\ncol 1\n0 -y\n1 z\n2 w+x+2*z\nend\n"));
}

#[test]
fn betti_tables_and_hilbert_numerator() {
    let (ring, polys) = worked_example();
    let res = resolve(&ring, &polys, &[0], &ResolveOptions::default()).unwrap();
    let t = betti_nonminimal(&res).unwrap();
    assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]));
    assert_eq!(betti_minimal_from_nonminimal(&res).unwrap(), t);
    assert_eq!(t.euler_polynomial(), IntPoly::from_coeffs(&[1, 0, -3, 2]));
    common::check_hilbert(&res, &t, &t).unwrap();
}

#[test]
fn statistics() {
    let (ring, polys) = worked_example();
    let res = resolve(&ring, &polys, &[0], &ResolveOptions::default()).unwrap();
    assert_eq!(res.tail_terms(), 11);
    assert_eq!(res.tail_entries(), 6);
    assert!((res.q_sparse() - 11.0 / 6.0).abs() < 1e-12);
    let report = stats_report(&res, false);
    assert!(report.contains("terms=11\n"));
    assert!(report.contains("entries=6\n"));
    assert!(report.contains("q_sparse=1.833333\n"));
}

#[test]
fn reorder_modes_agree_up_to_table() {
    let (ring, polys) = worked_example();
    let tables: Vec<BettiTable> = [Reorder::NegDegRevLex, Reorder::None]
        .into_iter()
        .map(|reorder| {
            let opts = ResolveOptions {
                reorder,
                ..Default::default()
            };
            betti_nonminimal(&resolve(&ring, &polys, &[0], &opts).unwrap()).unwrap()
        })
        .collect();
    assert_eq!(tables[0], tables[1]);
}

#[test]
fn truncated_resolution() {
    let (ring, polys) = worked_example();
    let opts = ResolveOptions {
        max_length: Some(1),
        ..Default::default()
    };
    let res = resolve(&ring, &polys, &[0], &opts).unwrap();
    assert_eq!(res.length(), 1);
    assert_eq!(res.rank(1), 3);
}
