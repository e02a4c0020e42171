mod common;

use common::*;
use schemeforge_core::catalog::{stabilizer_action, Preset};
use schemeforge_core::classify::{classify, Instance};
use schemeforge_core::exactlin::{int, ExactMatrix, SparseVec};
use schemeforge_core::permcore::{coset_action, point_stabilizer, Caps, PermGroup, Permutation};
use schemeforge_core::schemes::{Origin, Scheme};
use schemeforge_core::terwilliger::{
    centralizer_basis, diamond_pairs, is_diamond, peirce_block, t0_basis, t1_basis, t_algebra,
    wedderburn_check, BlockShape, TerwilligerSpaces, WedderburnReport,
};

fn small_instances() -> Vec<Instance> {
    let mut v: Vec<Instance> = [
        "cyclic-5",
        "s3-regular",
        "dihedral-4",
        "dihedral-7",
        "affine-8-3",
        "affine-8-5",
        "affine-8-7",
    ]
    .into_iter()
    .map(preset)
    .collect();
    v.extend(random_corpus(10).into_iter().filter(|i| i.scheme.n() <= 12));
    v
}

#[test]
fn dimensions_match_dense_oracles() {
    for inst in small_instances() {
        let s = &inst.scheme;
        let g = inst.group.as_ref().unwrap();
        for v in [0, s.n() - 1] {
            let sp = TerwilligerSpaces::compute(s, Some(g), v).unwrap();
            assert_eq!(sp.t0.dim(), t0_dim(s, v), "{} T0 at {v}", inst.name);
            assert_eq!(sp.t.dim(), t_dim(s, v), "{} T at {v}", inst.name);
            assert_eq!(
                sp.t_tilde.as_ref().unwrap().dim(),
                centralizer_dim(g, v),
                "{} T~ at {v}",
                inst.name
            );
            sp.check_inclusions().unwrap();
        }
    }
}

#[test]
fn t1_is_t_on_every_small_instance() {
    for inst in small_instances() {
        let t1 = t1_basis(&inst.scheme, 0).unwrap();
        let t = t_algebra(&inst.scheme, 0).unwrap();
        assert_eq!(t1.dim(), t.dim(), "{}", inst.name);
    }
}

#[test]
fn monomials_vanish_exactly_when_intersection_number_does() {
    for inst in small_instances() {
        let s = &inst.scheme;
        let r = s.rank();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let zero = monomial_mod(s, i, j, k, 0).iter().all(|&x| x == 0);
                    assert_eq!(
                        zero,
                        intersection_number(s, i, j, k) == 0,
                        "{} ({i},{j},{k})",
                        inst.name
                    );
                }
            }
        }
    }
}

#[test]
fn centralizer_commutes_with_stabilizer() {
    for name in ["a5-cosets", "dihedral-6", "affine-8-3"] {
        let inst = preset(name);
        let g = inst.group.as_ref().unwrap();
        let n = g.degree();
        let c = centralizer_basis(g, 0).unwrap();
        let stab = point_stabilizer(g, 0).unwrap();
        for m in c.basis.matrices(n) {
            for h in stab.generators() {
                let p = ExactMatrix::from_fn(n, n, |a, b| int(i64::from(h.apply(a) == b)));
                let lhs = schemeforge_core::exactlin::mat_mul(&p, &m).unwrap();
                let rhs = schemeforge_core::exactlin::mat_mul(&m, &p).unwrap();
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}

#[test]
fn suborbit_count_matches_orbit_count() {
    let inst = preset("a5-cosets");
    let c = centralizer_basis(inst.group.as_ref().unwrap(), 0).unwrap();
    assert_eq!(c.orbit_count, 452);
    assert_eq!(c.suborbits.total, 452);
    // Suborbits of size 1 keep all of G_v (16 orbits); those of size 2
    // leave the trivial group (30 orbits).
    let mut terms = c.suborbits.terms.clone();
    terms.sort_unstable();
    assert_eq!(terms, [vec![16; 2], vec![30; 14]].concat());
}

#[test]
fn diamond_pairs_match_configuration_oracle() {
    let mut instances = small_instances();
    instances.push(preset("a5-cosets"));
    instances.push(preset("frobenius56"));
    for inst in instances {
        let found: Vec<(usize, usize)> = diamond_pairs(&inst.scheme)
            .unwrap()
            .iter()
            .map(|p| (p.i, p.k))
            .collect();
        let oracle: Vec<(usize, usize)> = diamond_oracle(&inst.scheme, 0).into_iter().collect();
        assert_eq!(found, oracle, "{}", inst.name);
    }
}

#[test]
fn diamond_witness_is_a_configuration() {
    let inst = preset("a5-cosets");
    let s = &inst.scheme;
    for p in diamond_pairs(s).unwrap() {
        let w = p.witness;
        assert_eq!(color_at(s, w.v, w.y1), p.i);
        assert_eq!(color_at(s, w.v, w.y2), p.i);
        assert_eq!(color_at(s, w.v, w.u), p.k);
        assert_eq!(color_at(s, w.v, w.z), p.k);
        for y in [w.y1, w.y2] {
            for u in [w.u, w.z] {
                assert_eq!(color_at(s, y, u), p.j);
            }
        }
        assert_eq!(intersection_number(s, p.i, p.j, p.k), 2);
    }
}

#[test]
fn diamond_pairs_need_quasi_thin() {
    let inst = preset("symmetric-4");
    assert!(diamond_pairs(&inst.scheme).is_err());
}

#[test]
fn diamond_blocks_are_all_ones_in_t0() {
    let inst = preset("a5-cosets");
    let s = &inst.scheme;
    let sp = TerwilligerSpaces::compute(s, inst.group.as_ref(), 0).unwrap();
    for p in diamond_pairs(s).unwrap() {
        let b = peirce_block(&sp.t0, s, p.i, p.k, 0).unwrap();
        assert_eq!((b.rows, b.cols, b.dim), (2, 2, 1));
        assert_eq!(b.shapes, Some(vec![BlockShape::AllOnes]));
        let bt = peirce_block(sp.t_tilde.as_ref().unwrap(), s, p.i, p.k, 0).unwrap();
        assert_eq!(bt.dim, 2);
    }
}

#[test]
fn non_diamond_valency_two_blocks_are_identity_and_anti_identity() {
    for name in ["a5-cosets", "frobenius56", "dihedral-9"] {
        let inst = preset(name);
        let s = &inst.scheme;
        let t0 = t0_basis(s, 0).unwrap();
        for i in 0..s.rank() {
            for k in 0..s.rank() {
                if s.valence(i) != 2 || s.valence(k) != 2 || is_diamond(s, i, k) {
                    continue;
                }
                let b = peirce_block(&t0, s, i, k, 0).unwrap();
                assert_eq!(b.dim, 2, "{name} ({i},{k})");
                let mut shapes = b.shapes.unwrap();
                shapes.sort_by_key(|x| format!("{x:?}"));
                assert_eq!(
                    shapes,
                    [BlockShape::AntiIdentity, BlockShape::Identity],
                    "{name} ({i},{k})"
                );
            }
        }
    }
}

// With mixed valences the block is 1×2 or 2×1, so the {I₂, J₂ − I₂} basis
// cannot occur; its dimension is the number of middle classes, equal in T⁰
// and T̃ for non-diamond pairs.
#[test]
fn non_diamond_mixed_valency_blocks_follow_the_count() {
    for name in ["a5-cosets", "frobenius56", "dihedral-6"] {
        let inst = preset(name);
        let s = &inst.scheme;
        let sp = TerwilligerSpaces::compute(s, inst.group.as_ref(), 0).unwrap();
        let tt = sp.t_tilde.as_ref().unwrap();
        for i in 0..s.rank() {
            for k in 0..s.rank() {
                if s.valence(i) == s.valence(k) || is_diamond(s, i, k) {
                    continue;
                }
                let b0 = peirce_block(&sp.t0, s, i, k, 0).unwrap();
                let bt = peirce_block(tt, s, i, k, 0).unwrap();
                let count = (0..s.rank())
                    .filter(|&j| intersection_number(s, i, j, k) != 0)
                    .count();
                assert_eq!(b0.dim, count);
                assert_eq!(b0.dim, bt.dim, "{name} ({i},{k})");
                assert!(b0.shapes.is_none());
            }
        }
    }
}

#[test]
fn peirce_block_checks_indices() {
    let inst = preset("dihedral-5");
    let t0 = t0_basis(&inst.scheme, 0).unwrap();
    assert!(peirce_block(&t0, &inst.scheme, 0, 99, 0).is_err());
}

#[test]
fn wedderburn_dihedral_five() {
    let inst = preset("dihedral-5");
    let g = inst.group.as_ref().unwrap();
    let r = wedderburn_check(&inst.scheme, g, 0, 13, true).unwrap();
    assert_eq!(
        r,
        WedderburnReport::Checked {
            s: 2,
            t: 1,
            predicted: 13,
            actual: 13,
            holds: true
        }
    );
}

#[test]
fn wedderburn_not_applicable_to_thin_schemes() {
    let inst = preset("cyclic-6");
    let r = wedderburn_check(&inst.scheme, inst.group.as_ref().unwrap(), 0, 36, true).unwrap();
    assert!(matches!(r, WedderburnReport::NotApplicable { .. }));
    assert_eq!(t_algebra(&inst.scheme, 0).unwrap().dim(), 36);
}

// D6 has two classes of reflections: through opposite vertices (two fixed
// vertices) and through opposite edge midpoints (none). Both coset actions
// give t = 2, since the stabilizer always fixes its own coset and the coset
// of the central rotation times it.
#[test]
fn wedderburn_dihedral_six_both_reflection_classes() {
    let caps = Caps::default();
    let d6 = Preset::Dihedral(6).group(&caps).unwrap();
    let vertex = Permutation::new((0..6).map(|i| (6 - i) % 6).collect()).unwrap();
    let edge = Permutation::new((0..6).map(|i| (7 - i) % 6).collect()).unwrap();
    assert_eq!(vertex.fixed_points().len(), 2);
    assert_eq!(edge.fixed_points().len(), 0);
    for reflection in [vertex, edge] {
        let g = coset_action(&d6, &[reflection], &caps)
            .unwrap()
            .into_image();
        let inst = Instance::from_group("d6", g).unwrap();
        let r = classify(&inst).unwrap();
        assert_eq!(r.dims.t, 20);
        assert_eq!(
            r.wedderburn,
            Some(WedderburnReport::Checked {
                s: 2,
                t: 2,
                predicted: 20,
                actual: 20,
                holds: true
            })
        );
    }
}

#[test]
fn wedderburn_holds_on_random_triply_transitive_instances() {
    let mut checked = 0;
    for inst in random_corpus(24) {
        let r = classify(&inst).unwrap();
        if r.brute.all_equal == Some(true) {
            assert_eq!(
                r.wedderburn.as_ref().and_then(WedderburnReport::holds),
                Some(true),
                "{}",
                r.name
            );
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn spaces_without_group_omit_t_tilde() {
    let inst = preset("dihedral-5");
    let s = Scheme::from_color_matrix(5, inst.scheme.color_matrix(), Origin::Ingested).unwrap();
    let sp = TerwilligerSpaces::compute(&s, None, 0).unwrap();
    assert!(sp.t_tilde.is_none());
    assert_eq!(sp.dims().t, 13);
}

#[test]
fn non_automorphism_group_is_rejected() {
    let inst = preset("dihedral-5");
    let caps = Caps::default();
    let s5 = Preset::Symmetric(5).group(&caps).unwrap();
    assert!(TerwilligerSpaces::compute(&inst.scheme, Some(&s5), 0).is_err());
}

#[test]
fn base_point_out_of_range() {
    let inst = preset("cyclic-4");
    assert!(t0_basis(&inst.scheme, 4).is_err());
    assert!(t_algebra(&inst.scheme, 4).is_err());
}

#[test]
fn stabilizer_action_of_natural_dihedral_is_itself() {
    let caps = Caps::default();
    let g = Preset::Dihedral(7).group(&caps).unwrap();
    let h: PermGroup = stabilizer_action(&g, 0, &caps).unwrap();
    assert_eq!((h.degree(), h.order()), (7, 14));
}

#[test]
fn sparse_monomial_agrees_with_dense() {
    let inst = preset("affine-8-3");
    let s = &inst.scheme;
    let r = s.rank();
    for (i, j, k) in [(0, 0, 0), (1, 2, 1), (r - 1, 1, 2)] {
        let sparse: SparseVec = schemeforge_core::terwilliger::monomial(s, i, j, k, 0);
        let dense = monomial_mod(s, i, j, k, 0);
        let ones: Vec<usize> = dense
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 1)
            .map(|(p, _)| p)
            .collect();
        assert_eq!(sparse.indices().collect::<Vec<_>>(), ones);
    }
}
