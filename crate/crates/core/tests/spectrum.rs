use scn_core::cube_spectrum::{
    orthogonality_report, verify_eigenvector, weighted_eigenvalue_sum, CharacterVector, DistanceGraph,
};
use scn_core::krawtchouk::KrawtchoukTable;
use scn_core::{Int, Limits};

#[test]
fn eigen_equation_for_every_distance_up_to_eight() {
    let l = Limits::default();
    for d in 1..=8 {
        let table = KrawtchoukTable::<Int>::new(d).unwrap();
        for j in 1..=d {
            let g = DistanceGraph::new(d, j, &l).unwrap();
            for x in 0..=d {
                let chi = CharacterVector::representative(d, x).unwrap();
                let value = verify_eigenvector::<Int>(&g, &chi).unwrap();
                assert_eq!(&value, table.get(j, x).unwrap());
            }
        }
    }
}

#[test]
fn trace_and_multiplicity_bookkeeping() {
    for d in 1..=12u32 {
        let total: u64 = (0..=d).map(|x| scn_core::exact::binomial::<u64>(d.into(), x.into()).unwrap()).sum();
        assert_eq!(total, 1 << d);
        for j in 1..=d {
            assert_eq!(weighted_eigenvalue_sum::<Int>(d, j).unwrap(), Int::from(0));
        }
    }
}

#[test]
fn orthogonality_graph_up_to_five() {
    let l = Limits::default();
    for n in 1..=5u32 {
        let r = orthogonality_report::<Int>(n, &l).unwrap();
        assert!(r.sets_agree());
        let vertices: Int = r.spaces.iter().map(|s| s.multiplicity.clone()).sum();
        assert_eq!(vertices, Int::from(1u64 << (2 * n)));
        // zero eigenvalues sit exactly at odd subset sizes
        for s in &r.spaces {
            assert_eq!(s.eigenvalue == Int::from(0), s.size % 2 == 1, "N={n} x={}", s.size);
        }
    }
}
