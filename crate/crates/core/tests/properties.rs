use std::collections::BTreeMap;

use proptest::prelude::*;

use nsalg::algebra::generators_up_to;
use nsalg::analysis::{claim_step, descend_at, finite_simple_check, singular_vectors, verma_for_level, Verdict};
use nsalg::grading::{Degree, ExpVec, OddExpVec};
use nsalg::linalg::Matrix;
use nsalg::module::{
    extend_b1, extend_b2, induce, verma, whittaker_bmodule, BModuleSpec, IndVector, Over, WhittakerData,
};
use nsalg::pbw::normal_order_with;
use nsalg::rational::{int, q};
use nsalg::{
    antisymmetry_residual, bracket, jacobi_residual, normal_order, Element, Generator, HalfInt, Monomial,
    Parity, Rational,
};

fn generator(bound: i64) -> impl Strategy<Value = Generator> {
    (-bound..=bound).prop_map(|twice| {
        if twice % 2 == 0 {
            Generator::l(twice / 2)
        } else {
            Generator::g(twice)
        }
    })
}

fn word(bound: i64, max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop_oneof![9 => generator(bound), 1 => Just(Generator::C)], 0..=max_len)
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn canonical(mut w: Vec<Generator>) -> Monomial {
    w.sort();
    w.dedup_by(|a, b| a == b && a.parity() == Parity::Odd);
    let c = w.iter().filter(|g| g.is_central()).count() as u32;
    w.retain(|g| !g.is_central());
    Monomial::from_canonical(w, c)
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((word(6, 3), small_rational()), 1..=3).prop_map(|terms| {
        Element::from_terms(terms.into_iter().map(|(w, c)| (canonical(w), c)))
    })
}

fn exp_vec() -> impl Strategy<Value = ExpVec> {
    prop::collection::btree_map(1u32..=5, 1u32..=3, 0..=3).prop_map(ExpVec::from_entries)
}

fn odd_exp_vec() -> impl Strategy<Value = OddExpVec> {
    prop::collection::btree_set(1u32..=5, 0..=3).prop_map(|s| OddExpVec::from_positions(s).unwrap())
}

fn degree() -> impl Strategy<Value = Degree> {
    (exp_vec(), odd_exp_vec()).prop_map(|(e, o)| Degree::new(e, o))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn super_antisymmetry(x in generator(40), y in generator(40)) {
        prop_assert!(antisymmetry_residual(x, y).is_zero());
    }

    #[test]
    fn super_jacobi(x in generator(40), y in generator(40), z in generator(40)) {
        prop_assert!(jacobi_residual(x, y, z).is_zero());
    }

    #[test]
    fn bracket_preserves_grade_and_parity(x in generator(20), y in generator(20)) {
        let e = bracket(x, y);
        for (m, _) in e.terms() {
            prop_assert_eq!(m.grade(), x.grade() + y.grade());
            prop_assert_eq!(m.parity(), x.parity().add(y.parity()));
        }
    }

    #[test]
    fn straightening_is_confluent(w in word(8, 5), choices in prop::collection::vec(any::<usize>(), 64)) {
        let mut i = 0;
        let picked = normal_order_with(&w, &mut |_: &[Generator], pos: &[usize]| {
            i += 1;
            pos[choices[i % choices.len()] % pos.len()]
        });
        prop_assert_eq!(picked, normal_order(&w));
    }

    #[test]
    fn normal_form_is_canonical_and_idempotent(w in word(8, 5)) {
        let e = normal_order(&w);
        for (m, _) in e.terms() {
            prop_assert_eq!(normal_order(&m.word()), Element::monomial(m.clone(), int(1)));
        }
        let text = e.to_string();
        prop_assert_eq!(text.parse::<Element>().unwrap(), e);
    }

    #[test]
    fn multiplication_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
    }

    #[test]
    fn principal_order_is_total(a in degree(), b in degree(), c in degree()) {
        prop_assert_eq!(a.principal_cmp(&b), b.principal_cmp(&a).reverse());
        prop_assert_eq!(a.principal_cmp(&b).is_eq(), a == b);
        if a.principal_cmp(&b).is_le() && b.principal_cmp(&c).is_le() {
            prop_assert!(a.principal_cmp(&c).is_le());
        }
    }

    #[test]
    fn rev_lex_is_total(a in exp_vec(), b in exp_vec()) {
        prop_assert_eq!(a.rev_lex_cmp(&b), b.rev_lex_cmp(&a).reverse());
        prop_assert_eq!(a.rev_lex_cmp(&b).is_eq(), a == b);
    }

    #[test]
    fn prime_removes_the_lowest_position(v in exp_vec()) {
        prop_assume!(!v.is_zero());
        let low = v.lowest().unwrap();
        let p = v.prime().unwrap();
        prop_assert_eq!(p.weight() + low as u64, v.weight());
        prop_assert_eq!(p.get(low) + 1, v.get(low));
    }

    #[test]
    fn claim_step_prediction_is_lower(d in degree(), t in 1u32..=3) {
        prop_assume!(!d.is_zero());
        let (g, predicted) = claim_step(&d, t).unwrap();
        prop_assert!(predicted.principal_cmp(&d).is_lt());
        prop_assert!(g.grade() > HalfInt::ZERO);
    }
}

fn whittaker_k0() -> nsalg::module::InducedModule {
    let psi = WhittakerData::new(0, int(1)).with(1, int(1)).with(2, int(1));
    induce(&whittaker_bmodule(&psi).unwrap(), int(1), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn descent_traces_strictly_decrease(i in 0usize..1000, coeffs in prop::collection::vec(-3i64..=3, 4)) {
        let m = whittaker_k0();
        let key = &m.basis()[i % m.dim()];
        let mut v = IndVector::basis(key.clone());
        // homogeneous combination with other keys of the same degree
        for (k, c) in m.basis().iter().filter(|k| k.degree() == key.degree()).zip(&coeffs) {
            v.add_term(k.clone(), int(*c));
        }
        prop_assume!(!v.is_zero());
        let tr = descend_at(&v, &m, 2).unwrap();
        let mut last = v.deg().unwrap();
        for s in &tr.steps {
            prop_assert!(s.degree.principal_cmp(&last).is_lt());
            last = s.degree.clone();
        }
        prop_assert!(last.is_zero());
    }

    #[test]
    fn module_axiom_on_verma(x in generator(8), y in generator(8), i in 0usize..1000, h in small_rational(), ell in small_rational()) {
        let m = verma(h, ell, 4);
        let v = IndVector::basis(m.basis()[i % m.dim()].clone());
        let lhs = (|| {
            let xy = m.try_act_gen(x, &m.try_act_gen(y, &v)?)?;
            let yx = m.try_act_gen(y, &m.try_act_gen(x, &v)?)?;
            let sign = Rational::from_integer(Parity::sign(x.parity(), y.parity()).into());
            Some(&xy - &yx.scale(&sign))
        })();
        if let (Some(l), Ok(r)) = (lhs, m.act(&bracket(x, y), &v)) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn module_axiom_on_whittaker(x in generator(8), y in generator(8), i in 0usize..1000) {
        let m = whittaker_k0();
        let v = IndVector::basis(m.basis()[i % m.dim()].clone());
        let lhs = (|| {
            let xy = m.try_act_gen(x, &m.try_act_gen(y, &v)?)?;
            let yx = m.try_act_gen(y, &m.try_act_gen(x, &v)?)?;
            let sign = Rational::from_integer(Parity::sign(x.parity(), y.parity()).into());
            Some(&xy - &yx.scale(&sign))
        })();
        if let (Some(l), Ok(r)) = (lhs, m.act(&bracket(x, y), &v)) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn high_generators_act_as_zero(i in 0usize..1000, extra in 1i64..=4, odd in any::<bool>()) {
        // restricted: x_i v = 0 once i exceeds the weight of v plus t
        let m = whittaker_k0();
        let key = m.basis()[i % m.dim()].clone();
        let bound = key.weight() as i64 + m.t() as i64;
        let g = if odd { Generator::g(2 * (bound + extra) - 1) } else { Generator::l(bound + extra) };
        let image = m.act_gen(g, &IndVector::basis(key)).unwrap();
        prop_assert!(image.is_zero());
    }

    #[test]
    fn extensions_of_admissible_modules_are_valid(
        a in small_rational(),
        levels in prop::collection::vec(0i64..=2, 1..=3),
        entries in prop::collection::vec(-3i64..=3, 9),
        c2 in -2i64..=2,
    ) {
        let n = levels.len();
        let mut l0 = Matrix::zeros(n, n);
        let mut l1 = Matrix::zeros(n, n);
        for i in 0..n {
            l0[(i, i)] = &a - int(levels[i]);
            for j in 0..n {
                if levels[i] == levels[j] + 1 {
                    l1[(i, j)] = int(entries[3 * i + j]);
                }
            }
        }
        let l2 = l1.mul(&l1).scale(&int(c2));
        let s1 = extend_b1(&l0, &l1).unwrap();
        prop_assert!(s1.validate().is_valid());
        let s2 = extend_b2(&l0, &l1, &l2).unwrap();
        prop_assert!(s2.validate().is_valid());
        let g1 = s2.matrix(Generator::g(1));
        let g3 = s2.matrix(Generator::g(3));
        prop_assert_eq!(g1.mul(&g3).add(&g3.mul(&g1)), s2.matrix(Generator::l(2)).scale(&int(2)));
    }

    #[test]
    fn block_triangular_specs_are_never_simple(
        n in 2usize..=4,
        r in 1usize..=3,
        entries in prop::collection::vec(-4i64..=4, 16),
        seed in any::<u64>(),
    ) {
        // L0 preserves the span of the first r coordinates
        let r = r.min(n - 1);
        let mut l0 = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if !(i >= r && j < r) {
                    l0[(i, j)] = int(entries[4 * i + j]);
                }
            }
        }
        let spec = BModuleSpec::new(
            Over::Borel,
            0,
            vec![Parity::Even; n],
            BTreeMap::from([(Generator::l(0), l0.clone())]),
        )
        .unwrap();
        prop_assert_ne!(finite_simple_check(&spec, 16, seed).verdict, Verdict::Simple);
        // the same subspace plus its odd partner stays invariant after extension
        let ext = extend_b1(&l0, &Matrix::zeros(n, n)).unwrap();
        prop_assert_ne!(finite_simple_check(&ext, 16, seed).verdict, Verdict::Simple);
    }

    #[test]
    fn singular_vectors_are_annihilated(h in small_rational(), ell in small_rational(), twice in 1i64..=4) {
        let level = HalfInt::from_twice(twice);
        let m = verma_for_level(h.clone(), ell.clone(), level).unwrap();
        for v in singular_vectors(h, ell, level).unwrap() {
            for g in [Generator::l(1), Generator::g(1), Generator::l(2), Generator::g(3)] {
                prop_assert!(m.act_gen(g, &v).unwrap().is_zero());
            }
        }
    }
}

/// Partitions of `n` into parts, and into distinct parts, by direct recursion.
fn count_pairs(n: u32) -> usize {
    fn parts(n: u32, max: u32, distinct: bool) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n))
            .map(|p| parts(n - p, if distinct { p - 1 } else { p }, distinct))
            .sum()
    }
    (0..=n).map(|a| parts(a, a, false) * parts(n - a, n - a, true)).sum()
}

#[test]
fn verma_dimensions_match_partition_counts() {
    for cap in 0..=6u32 {
        let expected: usize = (0..=cap).map(count_pairs).sum();
        assert_eq!(verma(int(1), int(1), cap).dim(), expected, "cap {cap}");
    }
}

#[test]
fn whittaker_dimensions_count_free_words() {
    // k = 0: the free part is the powers of L(0), each adding one to the weight
    let psi = WhittakerData::new(0, int(1)).with(1, int(1));
    let spec = whittaker_bmodule(&psi).unwrap();
    for cap in 0..=4u32 {
        let expected: usize = (0..=cap).map(|n| 2 * count_pairs(n) * (cap - n + 1) as usize).sum();
        assert_eq!(induce(&spec, int(1), cap).dim(), expected, "cap {cap}");
    }
}

#[test]
fn generator_lists_are_sorted_and_complete() {
    let g = generators_up_to(6);
    assert_eq!(g.len(), 13);
    assert!(g.windows(2).all(|w| w[0] < w[1]));
}
