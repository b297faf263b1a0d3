use itertools::Itertools;
use nccr_core::cohomology::{
    complex_restrict, nonvanishing_supports, primitive_collections, reduced_homology, ForbiddenCones, RayVerdict,
};
use nccr_core::exact::rat;
use nccr_core::fixtures;
use nccr_core::geometry::{DivisorClass, Fan};
use nccr_core::BigInt;

fn small_fans() -> Vec<Fan> {
    vec![
        fixtures::projective_plane(),
        fixtures::product_of_lines(),
        fixtures::hirzebruch_one(),
        fixtures::projective_space_three(),
        fixtures::weighted_plane(),
    ]
}

fn free_window(rank: usize, radius: i64) -> Vec<Vec<BigInt>> {
    (0..rank).map(|_| -radius..=radius).multi_cartesian_product().map(|v| v.into_iter().map(BigInt::from).collect()).collect()
}

#[test]
fn primitive_collections_are_minimal() {
    for fan in small_fans() {
        for pc in primitive_collections(&fan) {
            assert!(!fan.spans_cone(&pc));
            for k in 0..pc.len() {
                let mut sub = pc.clone();
                sub.remove(k);
                assert!(fan.spans_cone(&sub));
            }
        }
    }
}

#[test]
fn homology_supports_are_unions_of_primitive_collections() {
    for fan in small_fans() {
        let pcs = primitive_collections(&fan);
        for size in 0..=fan.ray_count() {
            for s in (0..fan.ray_count()).combinations(size) {
                if reduced_homology(&complex_restrict(&fan, &s)).is_zero() {
                    continue;
                }
                let covered: Vec<usize> =
                    pcs.iter().filter(|pc| pc.iter().all(|r| s.contains(r))).flatten().copied().sorted().dedup().collect();
                assert_eq!(covered, s, "support {s:?} is not a union of primitive collections");
            }
        }
        assert_eq!(nonvanishing_supports(&fan, true), nonvanishing_supports(&fan, false));
    }
}

#[test]
fn serre_duality_on_smooth_surfaces() {
    for fan in [fixtures::projective_plane(), fixtures::product_of_lines()] {
        let cones = ForbiddenCones::new(&fan);
        let g = cones.group();
        let canonical = g.neg(&g.divisor_class(&vec![BigInt::from(1); fan.ray_count()]).unwrap());
        for free in free_window(g.rank(), 4) {
            let c = DivisorClass { free, torsion: vec![] };
            let dual = g.sub(&canonical, &c);
            let a = cones.cohomology_dims(&c).unwrap();
            let mut b = cones.cohomology_dims(&dual).unwrap();
            b.reverse();
            assert_eq!(a, b, "{c:?}");
        }
    }
}

#[test]
fn ray_verdict_implies_integer_points() {
    for fan in [fixtures::projective_plane(), fixtures::product_of_lines(), fixtures::hirzebruch_one()] {
        let cones = ForbiddenCones::new(&fan);
        let g = cones.group();
        let d = g.divisor_class(&vec![BigInt::from(1); fan.ray_count()]).unwrap();
        for free in free_window(g.rank(), 3) {
            let c = DivisorClass { free, torsion: vec![] };
            match cones.ray_acyclic(&c, &d, &rat(1, 1)).unwrap() {
                RayVerdict::Acyclic => {
                    for k in 1..=3 {
                        let moved = g.add(&c, &g.scale(&d, &BigInt::from(k)));
                        assert!(cones.is_acyclic(&moved).unwrap().is_acyclic(), "{c:?} + {k} d");
                    }
                }
                RayVerdict::Forbidden { l, .. } => assert!(l >= rat(1, 1)),
            }
        }
    }
}

#[test]
fn acyclicity_matches_counts_in_a_window() {
    for fan in small_fans() {
        let cones = ForbiddenCones::new(&fan);
        let g = cones.group();
        for free in free_window(g.rank(), 3) {
            for t in g.torsion_residues() {
                let c = g.class(free.clone(), t).unwrap();
                let dims = cones.cohomology_dims(&c).unwrap();
                assert_eq!(cones.is_acyclic(&c).unwrap().is_acyclic(), dims[1..].iter().all(|&x| x == 0), "{c:?}");
            }
        }
    }
}
