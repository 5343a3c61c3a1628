//! Singular vectors in Verma modules at low levels.

use std::collections::BTreeMap;

use crate::algebra::{Generator, HalfInt};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{verma, IndKey, IndVector, InducedModule};
use crate::rational::Rational;

/// `G_{1/2}` and `G_{3/2}` generate `N_+`, so a vector killed by both is
/// singular.
pub fn raising() -> [Generator; 2] {
    [Generator::g(1), Generator::g(3)]
}

/// Basis vectors of `L_0`-offset exactly `level`, in basis order.
pub fn level_basis(m: &InducedModule, level: &Rational) -> Vec<IndKey> {
    m.basis()
        .iter()
        .filter(|k| &m.l0_offset(k) == level)
        .cloned()
        .collect()
}

/// Matrix of `(G_{1/2}, G_{3/2})` from the level to the two levels below,
/// with columns indexed by [`level_basis`] and rows by the target bases
/// (the `G_{1/2}` block first).
pub fn pairing_matrix(m: &InducedModule, level: &Rational) -> Result<Matrix> {
    let cols = level_basis(m, level);
    let mut row_index: BTreeMap<(usize, IndKey), usize> = BTreeMap::new();
    for (b, g) in raising().iter().enumerate() {
        let target = level - g.index().to_rational();
        for k in level_basis(m, &target) {
            let n = row_index.len();
            row_index.insert((b, k), n);
        }
    }
    let mut out = Matrix::zeros(row_index.len(), cols.len());
    for (j, key) in cols.iter().enumerate() {
        let v = IndVector::basis(key.clone());
        for (b, &g) in raising().iter().enumerate() {
            for (k, c) in m.act_gen(g, &v)?.terms() {
                let i = row_index
                    .get(&(b, k.clone()))
                    .ok_or_else(|| Error::Domain(format!("{g} leaves the level basis")))?;
                out[(*i, j)] = c.clone();
            }
        }
    }
    Ok(out)
}

/// Singular vectors of offset `level` inside `m`.
pub fn singular_vectors_in(m: &InducedModule, level: &Rational) -> Result<Vec<IndVector>> {
    let cols = level_basis(m, level);
    let pairing = pairing_matrix(m, level)?;
    Ok(pairing
        .kernel()
        .into_iter()
        .map(|x| IndVector::from_terms(cols.iter().cloned().zip(x)))
        .collect())
}

/// The Verma module realized deep enough to contain a full level.
pub fn verma_for_level(h: Rational, ell: Rational, level: HalfInt) -> Result<InducedModule> {
    if !(1..=4).contains(&level.twice()) {
        return Err(Error::Domain(format!("level must be 1/2, 1, 3/2 or 2, got {level}")));
    }
    Ok(verma(h, ell, level.twice() as u32))
}

/// Basis of singular vectors of `M(h, l)` at `level` (one of `1/2, 1, 3/2, 2`).
pub fn singular_vectors(h: Rational, ell: Rational, level: HalfInt) -> Result<Vec<IndVector>> {
    let m = verma_for_level(h, ell, level)?;
    singular_vectors_in(&m, &level.to_rational())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn half(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn level_half() {
        let m = verma_for_level(int(0), int(3), half(1)).unwrap();
        let v = singular_vectors_in(&m, &q(1, 2)).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(m.format_vector(&v[0]), "G(-1/2)⊗v");
        assert!(singular_vectors(int(1), int(3), half(1)).unwrap().is_empty());
    }

    #[test]
    fn level_one_never() {
        for h in [int(0), q(1, 2), int(-3)] {
            assert!(singular_vectors(h, int(1), half(2)).unwrap().is_empty());
        }
    }

    #[test]
    fn level_three_halves_pairing_is_square() {
        let m = verma_for_level(q(1, 3), int(2), half(3)).unwrap();
        let p = pairing_matrix(&m, &q(3, 2)).unwrap();
        assert_eq!((p.rows(), p.cols()), (2, 2));
    }

    #[test]
    fn bad_level() {
        assert!(singular_vectors(int(0), int(0), half(5)).is_err());
        assert!(singular_vectors(int(0), int(0), half(0)).is_err());
    }
}
