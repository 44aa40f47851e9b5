mod common;

use lieob::cohomology::{self, binomial, LieModule};
use lieob::maps::{self, is_derivation_on};
use lieob::obstruction::{classify_obstruction, split_check, TrivialReason};
use lieob::registry;
use lieob::sampling::{self, AutomorphismSampler, Family};
use lieob::{Element, Execution, LieAlgebra, LinearMap, Rational, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;

fn builtins() -> Vec<(String, LieAlgebra)> {
    registry::all()
}

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| lieob::rational::frac(p, q))
}

fn element(n: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(small(), n).prop_map(Element::new)
}

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = LinearMap> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|row| row.into_iter().map(lieob::rational::int).collect())
                .collect();
            LinearMap::from_rows(rows, c).unwrap()
        })
    })
}

fn algebra_index() -> impl Strategy<Value = usize> {
    0..builtins().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_agrees_with_oracle(m in int_matrix(7, 7)) {
        let rows = m.row_vectors();
        prop_assert_eq!(m.rank(), common::rank(&rows));
        let ns = m.null_space();
        prop_assert_eq!(ns.len(), common::nullity(&rows, m.cols()));
        for v in &ns {
            prop_assert!(m.apply(v).unwrap().iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in int_matrix(6, 6)) {
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(p, p2);
    }

    #[test]
    fn bracket_is_antisymmetric(idx in algebra_index(), seed in any::<u64>()) {
        let (_, g) = &builtins()[idx];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = g.dim();
        let x = Element::new((0..n).map(|_| sampling::small_rational(&mut rng)).collect());
        let y = Element::new((0..n).map(|_| sampling::small_rational(&mut rng)).collect());
        let a = g.bracket(&x, &y).unwrap();
        let b = g.bracket(&y, &x).unwrap();
        prop_assert!((&a + &b).is_zero());
    }

    #[test]
    fn bracket_is_bilinear(x in element(4), y in element(4), z in element(4), c in small()) {
        let g = registry::sum_center_sl2();
        let lhs = g.bracket(&(&x.scale(&c) + &y), &z).unwrap();
        let rhs = &g.bracket(&x, &z).unwrap().scale(&c) + &g.bracket(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_matches_bracket(x in element(3), y in element(3)) {
        for g in [registry::sl2(), registry::so3(), registry::heisenberg3()] {
            let ad = g.ad(&x).unwrap();
            prop_assert_eq!(ad.apply(y.coords()).unwrap(), g.bracket(&x, &y).unwrap().into_coords());
        }
    }

    #[test]
    fn quotient_projection_is_homomorphism(x in element(4), y in element(4)) {
        for g in [registry::sum_center_sl2(), registry::sum_center2_aff1()] {
            for ideal in [g.center(), g.derived_subalgebra()] {
                let q = g.quotient(&ideal).unwrap();
                let lhs = q.projection.apply(g.bracket(&x, &y).unwrap().coords()).unwrap();
                let px = q.projection.apply(x.coords()).unwrap();
                let py = q.projection.apply(y.coords()).unwrap();
                prop_assert_eq!(lhs, q.algebra.bracket_coords(&px, &py).unwrap());
                prop_assert!(q.algebra.verify_jacobi().passed());
            }
        }
    }

    #[test]
    fn derivations_hold_on_random_pairs(x in element(4), y in element(4)) {
        for g in [registry::sum_center_sl2(), registry::sum_center2_aff1()] {
            for d in maps::derivation_space(&g) {
                prop_assert!(is_derivation_on(&g, &d, x.coords(), y.coords()).unwrap());
            }
        }
    }

    #[test]
    fn exp_ad_inverse(t in small(), s in small(), z in small()) {
        let g = registry::sum_center_sl2();
        for sigma in [Element::new(vec![z.clone(), t.clone(), lieob::rational::zero(), lieob::rational::zero()]),
                      Element::new(vec![z.clone(), lieob::rational::zero(), s.clone(), lieob::rational::zero()])] {
            let a = maps::exp_ad(&g, &sigma).unwrap();
            let b = maps::exp_ad(&g, &-&sigma).unwrap();
            prop_assert_eq!(&a * &b, LinearMap::identity(4));
            prop_assert!(maps::is_automorphism(&g, &a).unwrap().holds());
        }
        let h = registry::heisenberg3();
        let sigma = Element::new(vec![t.clone(), s.clone(), z.clone()]);
        let a = maps::exp_ad(&h, &sigma).unwrap();
        prop_assert_eq!(&a * &maps::exp_ad(&h, &-&sigma).unwrap(), LinearMap::identity(3));
    }

    #[test]
    fn classification_invariant_under_basis_change(idx in algebra_index(), seed in any::<u64>()) {
        let (_, g) = &builtins()[idx];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = sampling::random_invertible(&mut rng, g.dim());
        let h = g.change_basis(&p).unwrap();
        prop_assert!(h.verify_jacobi().passed());
        let (a, b) = (classify_obstruction(g).unwrap(), classify_obstruction(&h).unwrap());
        prop_assert_eq!(a.is_trivial(), b.is_trivial());
        prop_assert_eq!(a.reason(), b.reason());
    }
}

#[test]
fn center_is_kernel_of_ad() {
    for (name, g) in builtins() {
        let z = g.center();
        assert_eq!(z.dim(), common::center_dim(&g), "{name}");
        for v in z.basis_vectors() {
            let v = Element::new(v);
            assert!(g.ad(&v).unwrap().is_zero(), "{name}");
            for i in 0..g.dim() {
                assert!(g.bracket(&v, &Element::basis(g.dim(), i)).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn derived_is_ideal() {
    for (name, g) in builtins() {
        let d = g.derived_subalgebra();
        assert_eq!(d.dim(), common::derived_dim(&g), "{name}");
        assert!(g.is_ideal(&d), "{name}");
    }
}

#[test]
fn direct_sum_center_and_derived() {
    let all = builtins();
    for (na, a) in &all {
        for (nb, b) in &all {
            if a.dim() + b.dim() > 8 {
                continue;
            }
            let s = a.direct_sum(b).unwrap();
            assert!(s.verify_jacobi().passed());
            let n = a.dim();
            let embed = |sub: &Subspace, offset: usize| -> Vec<Vec<Rational>> {
                sub.basis_vectors()
                    .into_iter()
                    .map(|v| {
                        let mut w = vec![lieob::rational::zero(); s.dim()];
                        for (k, c) in v.into_iter().enumerate() {
                            w[offset + k] = c;
                        }
                        w
                    })
                    .collect()
            };
            let mut zc = embed(&a.center(), 0);
            zc.extend(embed(&b.center(), n));
            assert_eq!(s.center(), Subspace::span(s.dim(), &zc).unwrap(), "{na}+{nb}");
            let mut dc = embed(&a.derived_subalgebra(), 0);
            dc.extend(embed(&b.derived_subalgebra(), n));
            assert_eq!(s.derived_subalgebra(), Subspace::span(s.dim(), &dc).unwrap(), "{na}+{nb}");

            let (va, vb) = (classify_obstruction(a).unwrap(), classify_obstruction(b).unwrap());
            if va.is_trivial() && vb.is_trivial() {
                assert!(classify_obstruction(&s).unwrap().is_trivial(), "{na}+{nb}");
            }
        }
    }
}

#[test]
fn inner_derivations_lie_in_derivations() {
    for (name, g) in builtins() {
        let n = g.dim();
        let ders: Vec<Vec<Rational>> = maps::derivation_space(&g)
            .iter()
            .map(|d| d.entries().to_vec())
            .collect();
        let der_span = Subspace::span(n * n, &ders).unwrap();
        assert!(maps::inner_derivations(&g).is_subspace_of(&der_span), "{name}");
        assert_eq!(maps::inner_derivations(&g).dim(), n - g.center().dim(), "{name}");
    }
}

#[test]
fn split_check_covers_centerless_and_abelian() {
    for (name, g) in builtins() {
        let verdict = classify_obstruction(&g).unwrap();
        if matches!(verdict.reason(), Some(TrivialReason::Centerless | TrivialReason::Abelian)) {
            let s = split_check(&g).unwrap();
            let split = s.split().unwrap_or_else(|| panic!("{name} should split"));
            match verdict.reason().unwrap() {
                TrivialReason::Centerless => assert_eq!(split.complement_part(), &Subspace::full(g.dim())),
                _ => assert!(split.complement_part().is_zero()),
            }
        }
    }
}

#[test]
fn center_preserved_and_induced_functorial() {
    for name in ["heisenberg3", "sum_center_sl2", "sum_center2_aff1", "aff1", "sl2"] {
        let g = registry::get(name).unwrap();
        let split = split_check(&g).unwrap().split().cloned();
        let sampler = AutomorphismSampler::new(g.clone(), split, Family::for_builtin(name)).unwrap();
        let samples = sampler.samples(99, 30, Execution::default()).unwrap();
        let z = g.center();
        for pair in samples.windows(2) {
            let (phi, psi) = (&pair[0].map, &pair[1].map);
            assert_eq!(z.image(phi).unwrap(), z, "{name}");
            let lhs = maps::induced_quotient_automorphism(&g, &(phi * psi)).unwrap();
            let rhs = &maps::induced_quotient_automorphism(&g, phi).unwrap()
                * &maps::induced_quotient_automorphism(&g, psi).unwrap();
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

#[test]
fn block_reassembly_roundtrip() {
    let g = registry::sum_center2_aff1();
    let split = split_check(&g).unwrap().split().cloned().unwrap();
    let sampler = AutomorphismSampler::new(g, Some(split.clone()), Family::Center2Aff1).unwrap();
    for s in sampler.samples(5, 40, Execution::default()).unwrap() {
        let r = maps::block_decompose(&split, &s.map).unwrap();
        assert_eq!(split.assemble(&r.blocks).unwrap(), s.map);
    }
}

#[test]
fn euler_characteristic_and_invariants() {
    for (name, g) in builtins() {
        let z = g.center().dim();
        for module in [LieModule::trivial(g.clone()), LieModule::adjoint(g.clone())] {
            let b = cohomology::betti_numbers(&module);
            let chi: i64 = b
                .iter()
                .enumerate()
                .map(|(k, &h)| if k % 2 == 0 { h as i64 } else { -(h as i64) })
                .sum();
            let chains: i64 = (0..=g.dim())
                .map(|k| {
                    let c = (binomial(g.dim(), k) * module.module_dim()) as i64;
                    if k % 2 == 0 { c } else { -c }
                })
                .sum();
            assert_eq!(chi, chains, "{name}");
            assert_eq!(chi, 0, "{name}");
        }
        assert_eq!(cohomology::cohomology_dim(&LieModule::adjoint(g.clone()), 0).unwrap(), z, "{name}");
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let g = registry::sum_center_sl2().direct_sum(&registry::so3()).unwrap();
    assert_eq!(
        maps::derivation_space_with(&g, Execution::Sequential),
        maps::derivation_space_with(&g, Execution::Parallel)
    );
    assert_eq!(g.verify_jacobi_with(Execution::Sequential), g.verify_jacobi_with(Execution::Parallel));
    let m = LieModule::adjoint(registry::sl2());
    for k in 0..=3 {
        assert_eq!(
            cohomology::ce_differential_with(&m, k, Execution::Sequential).unwrap(),
            cohomology::ce_differential_with(&m, k, Execution::Parallel).unwrap()
        );
    }
}
