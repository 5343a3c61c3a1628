//! Level conditions on base modules.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{BModuleSpec, IndKey, IndVector, InducedModule, WhittakerData};
use crate::module::check_homomorphism;

/// Result of checking conditions (a) and (b) at the level `t` of a spec.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LevelConditions {
    /// `L_t` acts injectively (always false at `t = 0`).
    pub a: bool,
    /// `L_i` acts as zero for `i > t`.
    pub b: bool,
    pub t: u32,
    /// `t = 0`: the module is of highest-weight type.
    pub highest_weight: bool,
}

pub fn check_conditions_ab(spec: &BModuleSpec) -> LevelConditions {
    let t = spec.t();
    if t == 0 {
        return LevelConditions {
            a: false,
            b: true,
            t,
            highest_weight: true,
        };
    }
    let lt = spec.matrix(Generator::l(t as i64));
    LevelConditions {
        a: lt.rank() == spec.dim(),
        b: true,
        t,
        highest_weight: false,
    }
}

/// The first odd generator `G_{j-1/2}`, `j > t`, acting nonzero on the spec,
/// where `t` is the largest level with `L_t` nonzero.
pub fn gv_violation(spec: &BModuleSpec) -> Option<Generator> {
    let t = (1..=spec.t())
        .rev()
        .find(|&i| !spec.matrix(Generator::l(i as i64)).is_zero())
        .unwrap_or(0);
    spec.defined_generators().into_iter().find(|g| {
        g.parity().is_odd() && g.index().twice() > 2 * t as i64 && !spec.matrix(*g).is_zero()
    })
}

pub fn check_gv_vanishing(spec: &BModuleSpec) -> bool {
    gv_violation(spec).is_none()
}

/// Whether the matrix of a defined generator is nilpotent.
pub fn local_nilpotency_check(spec: &BModuleSpec, g: Generator) -> Result<bool> {
    if !spec.is_defined(g) {
        return Err(Error::Precondition(format!("{g} is not a defined generator")));
    }
    Ok(spec.matrix(g).pow(spec.dim() as u32).is_zero())
}

/// Closed form: `psi_k(L_{2k+1}) != 0` or `psi_k(L_{2k+2}) != 0`.
pub fn whittaker_simplicity_criterion(psi: &WhittakerData) -> Result<bool> {
    if !check_homomorphism(psi) {
        return Err(Error::Homomorphism("psi fails the homomorphism check".into()));
    }
    let k = psi.k as i64;
    Ok(!psi.value(2 * k + 1).is_zero() || !psi.value(2 * k + 2).is_zero())
}

/// The realized part of `1 (x) V` inside an induced module, with the action
/// of `b`-generators that keep it inside the cap.
#[derive(Clone, Debug)]
pub struct BaseSlice {
    pub keys: Vec<IndKey>,
    index: BTreeMap<IndKey, usize>,
}

impl BaseSlice {
    pub fn of(m: &InducedModule) -> Self {
        let keys: Vec<IndKey> = m.basis().iter().filter(|k| k.in_base()).cloned().collect();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        BaseSlice { keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    /// Matrix of `g` on the slice, or `None` if some image leaves it.
    pub fn matrix(&self, m: &InducedModule, g: Generator) -> Option<Matrix> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (j, key) in self.keys.iter().enumerate() {
            let image = m.try_act_gen(g, &IndVector::basis(key.clone()))?;
            for (k, c) in image.terms() {
                let i = *self.index.get(k)?;
                out[(i, j)] = c.clone();
            }
        }
        Some(out)
    }
}

/// Conditions (a), (b) and odd vanishing evaluated on the realized base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceConditions {
    /// Largest `t <= spec.t` with `L_t` nonzero on the slice.
    pub t: u32,
    pub injective: bool,
    pub gv_violation: Option<Generator>,
}

impl SliceConditions {
    pub fn holds(&self) -> bool {
        self.t >= 1 && self.injective && self.gv_violation.is_none()
    }
}

pub fn slice_conditions(m: &InducedModule, slice: &BaseSlice) -> SliceConditions {
    let top = m.t();
    let nonzero = |g: Generator| match slice.matrix(m, g) {
        Some(mat) => !mat.is_zero(),
        None => true,
    };
    let t = (1..=top)
        .rev()
        .find(|&i| nonzero(Generator::l(i as i64)))
        .unwrap_or(0);
    let injective = t >= 1
        && slice
            .matrix(m, Generator::l(t as i64))
            .map(|mat| mat.rank() == slice.dim())
            .unwrap_or(false);
    let gv_violation = (t as i64 + 1..=top as i64 + 1)
        .map(|j| Generator::g(2 * j - 1))
        .find(|&g| nonzero(g));
    SliceConditions {
        t,
        injective,
        gv_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{extend_b1, whittaker_bmodule};
    use crate::rational::int;

    #[test]
    fn conditions_on_whittaker_specs() {
        let psi = WhittakerData::new(0, int(1)).with(2, int(1));
        let c = check_conditions_ab(&whittaker_bmodule(&psi).unwrap());
        assert!(c.a && c.b);
        assert_eq!(c.t, 2);
        let psi = WhittakerData::new(1, int(1)).with(2, int(5));
        let c = check_conditions_ab(&whittaker_bmodule(&psi).unwrap());
        assert!(!c.a);
        assert_eq!(c.t, 4);
    }

    #[test]
    fn zero_module_fails_a() {
        let s = BModuleSpec::new(
            crate::module::Over::Borel,
            1,
            vec![crate::algebra::Parity::Even],
            BTreeMap::new(),
        )
        .unwrap();
        assert!(!check_conditions_ab(&s).a);
        assert!(check_gv_vanishing(&s));
        assert!(check_conditions_ab(&BModuleSpec::highest_weight(int(1))).highest_weight);
    }

    #[test]
    fn gv_violation_is_named() {
        // L_1 = 0 but G_{1/2} acts nonzero: G_{1/2} is above the effective level 0
        let z = Matrix::zeros(1, 1);
        let s = extend_b1(&Matrix::scalar(1, &int(3)), &z).unwrap();
        assert_eq!(gv_violation(&s), Some(Generator::g(1)));
    }

    #[test]
    fn nilpotency() {
        let psi = WhittakerData::new(0, int(1)).with(1, int(1));
        let a = whittaker_bmodule(&psi).unwrap();
        assert!(!local_nilpotency_check(&a, Generator::l(1)).unwrap());
        let s = extend_b1(&Matrix::scalar(1, &int(3)), &Matrix::zeros(1, 1)).unwrap();
        assert!(local_nilpotency_check(&s, Generator::g(1)).unwrap());
        assert!(local_nilpotency_check(&s, Generator::l(1)).unwrap());
        assert!(local_nilpotency_check(&s, Generator::l(5)).is_err());
    }

    #[test]
    fn criterion() {
        let psi = WhittakerData::new(1, int(0)).with(3, int(1));
        assert!(whittaker_simplicity_criterion(&psi).unwrap());
        let psi = WhittakerData::new(1, int(0)).with(2, int(7));
        assert!(!whittaker_simplicity_criterion(&psi).unwrap());
        let psi = WhittakerData::new(0, int(0)).with(1, int(1));
        assert!(whittaker_simplicity_criterion(&psi).unwrap());
    }
}
