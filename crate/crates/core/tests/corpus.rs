use dehn::corpus;
use dehn::{checkerboard, dehn_count_bruteforce, dehn_structure, structure_count, trace_regions, ColoringKind};
use num_bigint::BigUint;

#[test]
fn corpus_shapes() {
    let expect = [
        ("unknot", 0, 2, 1),
        ("kink", 1, 3, 1),
        ("unlink2", 0, 3, 2),
        ("hopf", 2, 4, 2),
        ("trefoil", 3, 5, 1),
        ("figure8", 4, 6, 1),
        ("trefoil#trefoil", 6, 8, 1),
        ("T(2,4)", 4, 6, 2),
    ];
    for ((name, d), (ename, crossings, regions, comps)) in corpus::diagrams().into_iter().zip(expect) {
        assert_eq!(name, ename);
        let rm = trace_regions(&d).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(d.crossing_count(), crossings, "{name}");
        assert_eq!(rm.region_count(), regions, "{name}");
        assert_eq!(d.link_components(), comps, "{name}");
    }
    let k = dehn::parse_diagram(corpus::TREFOIL_KINKED).unwrap();
    assert_eq!(trace_regions(&k).unwrap().region_count(), 6);
    assert_eq!(k.link_components(), 1);
}

#[test]
fn corpus_factors() {
    let expect: [(&str, &[u64]); 8] = [
        ("unknot", &[0]),
        ("kink", &[0]),
        ("unlink2", &[0, 0]),
        ("hopf", &[0, 2]),
        ("trefoil", &[0, 3]),
        ("figure8", &[0, 5]),
        ("trefoil#trefoil", &[0, 3, 3]),
        ("T(2,4)", &[0, 4]),
    ];
    for ((name, d), (_, phi)) in corpus::diagrams().into_iter().zip(expect) {
        let rm = trace_regions(&d).unwrap();
        let (a, b) = checkerboard(&rm).unwrap();
        for s in [a, b] {
            let r = dehn_structure(&rm, &s);
            let essential: Vec<BigUint> = r.phi.iter().filter(|f| **f != BigUint::from(1u8)).cloned().collect();
            let want: Vec<BigUint> = phi.iter().map(|&v| BigUint::from(v)).collect();
            assert_eq!(essential, want, "{name} shading {}", s.index());
            for m in 2..=5u64 {
                assert_eq!(
                    dehn_count_bruteforce(&rm, m, 8).unwrap(),
                    structure_count(&r, &BigUint::from(m), ColoringKind::Dehn),
                    "{name} shading {} mod {m}",
                    s.index()
                );
            }
        }
    }
}
