//! Randomized irreducibility test for finite-dimensional super modules.
//!
//! A graded module `V = V0 + V1` over the algebra `A = A0 + A1` generated by
//! the action matrices is graded-simple iff each nonzero `V_p` is a simple
//! `A0`-module and `A1` maps each nonzero part nontrivially. The `A0` parts
//! are tested with Norton's criterion on random elements.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Parity;
use crate::linalg::{EchelonSpan, Matrix, SparseVec};
use crate::module::BModuleSpec;
use crate::rational::{int, Rational};

use super::report::{SimplicityReport, Verdict, Witness};

pub const DEFAULT_BUDGET: usize = 64;

fn to_sparse(v: &[Rational]) -> SparseVec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn to_dense(v: &SparseVec<usize>, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Span of the orbit of `start` under the algebra generated by `gens`.
pub(crate) fn spin(gens: &[Matrix], start: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut span = EchelonSpan::new();
    let mut queue: Vec<Vec<Rational>> = Vec::new();
    for v in start {
        if span.insert(&to_sparse(v)).is_some() {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let image = g.apply(&v);
            if span.insert(&to_sparse(&image)).is_some() {
                queue.push(image);
            }
        }
        if span.dim() == n {
            break;
        }
    }
    span.basis().map(|r| to_dense(r, n)).collect()
}

fn restrict(m: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            out[(i, j)] = m[(r, c)].clone();
        }
    }
    out
}

fn embed(v: &[Rational], idx: &[usize], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (x, &i) in v.iter().zip(idx) {
        out[i] = x.clone();
    }
    out
}

enum PartOutcome {
    Simple,
    /// A vector of the part generating a proper `A0`-submodule.
    Reducible(Vec<Rational>),
    Inconclusive,
}

/// Norton's test for the `A0`-module given by `gens` on a space of dim `n`.
fn norton(gens: &[Matrix], n: usize, budget: usize, rng: &mut ChaCha8Rng) -> PartOutcome {
    if n <= 1 {
        return PartOutcome::Simple;
    }
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if spin(gens, &[e.clone()], n).len() < n {
            return PartOutcome::Reducible(e);
        }
    }
    if gens.is_empty() {
        return PartOutcome::Reducible(unit(n, 0));
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    for _ in 0..budget {
        let theta = random_element(gens, n, rng);
        for lambda in theta.rational_eigenvalues() {
            let shifted = theta.sub(&Matrix::scalar(n, &lambda));
            let kernel = shifted.kernel();
            let mut all_full = true;
            for x in &kernel {
                if spin(gens, &[x.clone()], n).len() < n {
                    return PartOutcome::Reducible(x.clone());
                }
            }
            if kernel.len() != 1 {
                all_full = false;
            }
            let dual = shifted.transpose().kernel();
            let Some(y) = dual.first() else { continue };
            let dual_span = spin(&transposed, &[y.clone()], n);
            if dual_span.len() < n {
                // annihilator of an invariant subspace of the dual
                let ann = Matrix::from_rows(dual_span).expect("rectangular").kernel();
                return PartOutcome::Reducible(ann[0].clone());
            }
            if all_full {
                return PartOutcome::Simple;
            }
        }
    }
    PartOutcome::Inconclusive
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n];
    e[i] = Rational::one();
    e
}

/// Random combination of words of length at most 3 in `gens`.
fn random_element(gens: &[Matrix], n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for _ in 0..3 {
        let len = rng.gen_range(1..=3);
        let mut w = Matrix::identity(n);
        for _ in 0..len {
            w = gens[rng.gen_range(0..gens.len())].mul(&w);
        }
        let c = int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
        out = out.add(&w.scale(&c));
    }
    out
}

/// Graded simplicity of a finite spec over the algebra its matrices
/// generate, with a seeded random budget.
pub fn finite_simple_check(spec: &BModuleSpec, budget: usize, seed: u64) -> SimplicityReport {
    let n = spec.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Matrix> = spec
        .defined_generators()
        .into_iter()
        .map(|g| spec.matrix(g))
        .filter(|m| !m.is_zero())
        .collect();
    let odd: Vec<Matrix> = spec
        .defined_generators()
        .into_iter()
        .filter(|g| g.parity().is_odd())
        .map(|g| spec.matrix(g))
        .filter(|m| !m.is_zero())
        .collect();
    let even: Vec<Matrix> = spec
        .defined_generators()
        .into_iter()
        .filter(|g| !g.parity().is_odd())
        .map(|g| spec.matrix(g))
        .filter(|m| !m.is_zero())
        .collect();
    let reducible = |x: Vec<Rational>| {
        let span = spin(&all, &[x.clone()], n);
        SimplicityReport::new(Verdict::Reducible, "finite-norton")
            .with_witness(Witness::finite(spec, x, span))
            .with_seed(seed)
    };
    let parts: Vec<Vec<usize>> = [Parity::Even, Parity::Odd]
        .iter()
        .map(|&p| (0..n).filter(|&i| spec.parity()[i] == p).collect())
        .collect();
    // A1 must move each nonzero part when both are present
    if parts.iter().all(|p| !p.is_empty()) {
        for (p, q) in [(0, 1), (1, 0)] {
            let moves = odd.iter().any(|g| !restrict(g, &parts[q], &parts[p]).is_zero());
            if !moves {
                return reducible(unit(n, parts[p][0]));
            }
        }
    }
    let mut inconclusive = false;
    for idx in parts.iter().filter(|p| !p.is_empty()) {
        let mut a0: Vec<Matrix> = even.iter().map(|g| restrict(g, idx, idx)).collect();
        for g in &odd {
            for h in &odd {
                a0.push(restrict(&g.mul(h), idx, idx));
            }
        }
        a0.retain(|m| !m.is_zero());
        match norton(&a0, idx.len(), budget, &mut rng) {
            PartOutcome::Simple => {}
            PartOutcome::Reducible(x) => return reducible(embed(&x, idx, n)),
            PartOutcome::Inconclusive => inconclusive = true,
        }
    }
    let verdict = if inconclusive {
        Verdict::Inconclusive
    } else {
        Verdict::Simple
    };
    SimplicityReport::new(verdict, "finite-norton").with_seed(seed)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::module::{extend_b1, whittaker_bmodule, Over, WhittakerData};

    #[test]
    fn trivial_one_dim_is_simple() {
        let s = BModuleSpec::new(Over::Borel, 0, vec![Parity::Even], BTreeMap::new()).unwrap();
        assert_eq!(finite_simple_check(&s, 8, 0).verdict, Verdict::Simple);
    }

    #[test]
    fn zero_action_two_dim_is_reducible() {
        let s = BModuleSpec::new(Over::Borel, 0, vec![Parity::Even; 2], BTreeMap::new()).unwrap();
        let r = finite_simple_check(&s, 8, 0);
        assert_eq!(r.verdict, Verdict::Reducible);
        assert_eq!(r.witness.unwrap().text, "v0");
    }

    #[test]
    fn a_psi_over_m1() {
        let psi = WhittakerData::new(1, int(0)).with(3, int(1));
        let s = whittaker_bmodule(&psi).unwrap();
        assert_eq!(finite_simple_check(&s, 16, 3).verdict, Verdict::Simple);
        let psi = WhittakerData::new(1, int(0)).with(2, int(7));
        let r = finite_simple_check(&whittaker_bmodule(&psi).unwrap(), 16, 3);
        assert_eq!(r.verdict, Verdict::Reducible);
        assert_eq!(r.witness.unwrap().text, "u");
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn hidden_invariant_subspace_is_found() {
        // U = diag(0, 1), e01, conjugated so no basis line is invariant
        let p = mat(&[&[1, 1], &[1, 2]]);
        let p_inv = mat(&[&[2, -1], &[-1, 1]]);
        let conj = |m: &Matrix| p.mul(m).mul(&p_inv);
        let s = extend_b1(&conj(&mat(&[&[0, 0], &[0, 1]])), &conj(&mat(&[&[0, 1], &[0, 0]]))).unwrap();
        assert!(s.validate().is_valid(), "{}", s.validate());
        let r = finite_simple_check(&s, 16, 9);
        assert_eq!(r.verdict, Verdict::Reducible);
        let w = r.witness.unwrap();
        assert!(w.dim() < s.dim());
        let span: Vec<Vec<Rational>> = w
            .span
            .iter()
            .map(|x| match x {
                crate::analysis::WitnessVector::Finite(x) => x.clone(),
                _ => unreachable!(),
            })
            .collect();
        let base_rank = Matrix::from_rows(span.clone()).unwrap().rank();
        for g in s.defined_generators() {
            let mut rows = span.clone();
            rows.extend(span.iter().map(|x| s.matrix(g).apply(x)));
            assert_eq!(Matrix::from_rows(rows).unwrap().rank(), base_rank, "{g}");
        }
    }

    #[test]
    fn full_matrix_algebra_is_simple() {
        let gens = vec![mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]), mat(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(norton(&gens, 3, 32, &mut rng), PartOutcome::Simple));
    }
}
