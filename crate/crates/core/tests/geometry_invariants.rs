use std::collections::BTreeSet;

use nccr_core::exact::{dot_int, snf, IntMatrix};
use nccr_core::fixtures;
use nccr_core::geometry::{lattice_equivalent, ClassGroup, Fan, LatticePolytope};
use nccr_core::BigInt;
use num_traits::{One, Signed, Zero};

fn corpus() -> Vec<LatticePolytope> {
    vec![
        fixtures::square(),
        fixtures::quad(),
        fixtures::bipyramid(),
        fixtures::pyramid(),
        fixtures::reflexive_triangle(),
        LatticePolytope::from_i64(2, &[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]).unwrap(),
        LatticePolytope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]).unwrap(),
    ]
}

fn corpus_fans() -> Vec<Fan> {
    vec![
        fixtures::projective_plane(),
        fixtures::product_of_lines(),
        fixtures::hirzebruch_one(),
        fixtures::projective_space_three(),
        fixtures::weighted_plane(),
    ]
}

#[test]
fn facets_recover_the_vertices() {
    for p in corpus() {
        let facets = p.facets().unwrap();
        let touched: BTreeSet<usize> = facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        assert_eq!(touched, (0..p.vertex_count()).collect());
        for f in &facets {
            for (i, v) in p.vertices().iter().enumerate() {
                let h = dot_int(&f.normal, v);
                assert!(h <= f.offset);
                assert_eq!(h == f.offset, f.vertices.contains(&i));
            }
            // each facet is cut out by dim-many affinely independent vertices
            assert!(f.vertices.len() >= p.ambient_dim());
        }
        // every vertex is the unique maximizer of some facet-normal sum
        for i in 0..p.vertex_count() {
            let on: Vec<&_> = facets.iter().filter(|f| f.vertices.contains(&i)).collect();
            let common: BTreeSet<usize> = on
                .iter()
                .map(|f| f.vertices.iter().copied().collect::<BTreeSet<_>>())
                .reduce(|a, b| a.intersection(&b).copied().collect())
                .unwrap();
            assert_eq!(common, BTreeSet::from([i]));
        }
    }
}

#[test]
fn cone_over_is_gorenstein_at_height_one() {
    for p in corpus() {
        let mut e = vec![BigInt::zero(); p.ambient_dim() + 1];
        e[p.ambient_dim()] = BigInt::one();
        assert_eq!(p.cone_over().is_gorenstein(), Some(e));
    }
}

#[test]
fn face_fans_are_complete() {
    for p in corpus() {
        if p.contains_origin_in_interior().unwrap() {
            let fan = p.face_fan().unwrap();
            assert!(fan.verify().complete, "{p:?}");
        }
    }
}

#[test]
fn principal_divisors_are_zero() {
    for fan in corpus_fans() {
        let group = ClassGroup::of_fan(&fan);
        for j in 0..fan.ambient_dim() {
            let div: Vec<BigInt> = fan.rays().iter().map(|r| r[j].clone()).collect();
            assert_eq!(group.divisor_class(&div).unwrap(), group.zero());
        }
        assert_eq!(group.rank(), fan.ray_count() - fan.ambient_dim());
    }
}

#[test]
fn multiplicity_is_the_sublattice_index() {
    for fan in corpus_fans() {
        for (k, cone) in fan.max_cones().iter().enumerate() {
            let rows: Vec<Vec<BigInt>> = cone.iter().map(|&i| fan.rays()[i].clone()).collect();
            let (s, _, _) = snf(&IntMatrix::from_rows(&rows, fan.ambient_dim()).unwrap());
            let index: BigInt = (0..rows.len()).map(|i| s[(i, i)].clone()).product();
            let m = fan.multiplicity(k).unwrap();
            assert_eq!(m, index);
            assert_eq!(m.is_one(), index.abs().is_one());
        }
    }
    assert_eq!(fixtures::weighted_plane().total_multiplicity().unwrap(), BigInt::from(4));
}

#[test]
fn wedge_contains_the_base() {
    for p in corpus() {
        for k in 0..p.facets().unwrap().len() {
            let w = p.wedge(k).unwrap();
            assert_eq!(w.dim(), p.dim() + 1);
            let base: BTreeSet<Vec<BigInt>> = p
                .vertices()
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.push(BigInt::zero());
                    v
                })
                .collect();
            let n = p.ambient_dim();
            let floor = w.facets().unwrap().into_iter().find(|f| {
                f.normal[..n].iter().all(Zero::is_zero) && f.normal[n] == -BigInt::one() && f.offset.is_zero()
            });
            let floor = floor.expect("y >= 0 is a facet");
            let on: BTreeSet<Vec<BigInt>> = floor.vertices.iter().map(|&i| w.vertices()[i].clone()).collect();
            assert_eq!(on, base);
        }
    }
}

#[test]
fn lattice_equivalence_is_reflexive_and_symmetric() {
    let shear = |p: &LatticePolytope| {
        let moved: Vec<Vec<BigInt>> = p
            .vertices()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w[0] = &v[0] + BigInt::from(2) * &v[1] + BigInt::from(3);
                w[1] = &v[1] - BigInt::one();
                w
            })
            .collect();
        LatticePolytope::new(p.ambient_dim(), moved).unwrap()
    };
    for p in corpus() {
        let m = lattice_equivalent(&p, &p, 12).unwrap().expect("reflexive");
        assert!(m.matrix.det().abs().is_one());
        let q = shear(&p);
        let there = lattice_equivalent(&p, &q, 12).unwrap().expect("shear is unimodular");
        let back = lattice_equivalent(&q, &p, 12).unwrap().expect("symmetric");
        for (map, from, to) in [(&there, &p, &q), (&back, &q, &p)] {
            assert!(map.matrix.det().abs().is_one());
            let image: BTreeSet<Vec<BigInt>> = from.vertices().iter().map(|v| map.apply(v)).collect();
            let target: BTreeSet<Vec<BigInt>> = to.vertices().iter().cloned().collect();
            assert_eq!(image, target);
        }
    }
    let big = LatticePolytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]).unwrap();
    assert!(lattice_equivalent(&fixtures::square(), &big, 12).unwrap().is_none());
}
