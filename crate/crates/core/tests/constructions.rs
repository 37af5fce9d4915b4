use maxdist::constructions::{rectangle_candidate, RectangleOptions};
use maxdist::energy::energy;

#[test]
fn rectangle_lengths_and_coverage() {
    for (r, expected) in [(0.01, 5.915359945228), (0.005, 5.957654845858)] {
        let res = rectangle_candidate(2.0, 1.0, r, RectangleOptions::default()).unwrap();
        println!("r={r} length={:.12} miss={:e}", res.length(), res.length() - (6.0 - 8.5 * r));
        assert!((res.length() - expected).abs() < 1e-8, "{}", res.length());
        let m = res.m.clone().unwrap();
        let e = energy(&m.sample(1e-3 * r).unwrap(), &res.network);
        println!("energy/r = {}", e.value / r);
        assert!(res.audit(None).unwrap());
    }
}

#[test]
fn check_suite_passes_on_constructions() {
    use maxdist::constructions::*;
    use maxdist::regularity::{check_suite, Location};
    let c = rectangle_candidate(2.0, 1.0, 0.01, RectangleOptions::default()).unwrap();
    let m = c.m.clone().unwrap();
    let rep = check_suite(&c.network, &m, 0.01, 1e-5, 1e-6).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    assert!(rep.checks.iter().any(|c| c.name == "leaf_collinearity"));
    // leaves facing a corner of the rectangle have no known condition
    assert_eq!(rep.unknown.len(), 4);
    for l in &rep.unknown {
        let Location::Vertex(v) = l else { panic!("{l:?}") };
        assert_eq!(c.network.degrees()[*v], 1);
    }

    let circle = maxdist::mset::CompactSetModel::circle(maxdist::geometry::Point::ORIGIN, 1.0).unwrap();
    let h = horseshoe(&circle, 0.2, HorseshoeOptions::default()).unwrap();
    let rep = check_suite(&h.network, &circle, 0.2, 2e-4, 1e-6).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    assert!(rep.unknown.is_empty());
}
