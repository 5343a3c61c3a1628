//! Characters of the positive subalgebras and the two-dimensional modules
//! `A_psi` they define.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{bracket_terms, Generator, Kind, Parity};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::spec::{BModuleSpec, Over};
use crate::rational::{format_rational, int, parse_rational, Rational};

/// A character `psi_k` of `p^(k)` (zero on odd generators) plus the
/// central charge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WhittakerData {
    pub k: u32,
    /// `psi_k(L_j)` keyed by `j`; missing entries are zero.
    pub values: BTreeMap<i64, Rational>,
    pub ell: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
struct WhittakerFile {
    k: u32,
    values: BTreeMap<String, String>,
    ell: String,
}

impl WhittakerData {
    pub fn new(k: u32, ell: Rational) -> Self {
        WhittakerData {
            k,
            values: BTreeMap::new(),
            ell,
        }
    }

    /// Sets `psi(L_j) = value`.
    pub fn with(mut self, j: i64, value: Rational) -> Self {
        self.set(j, value);
        self
    }

    pub fn set(&mut self, j: i64, value: Rational) {
        if value.is_zero() {
            self.values.remove(&j);
        } else {
            self.values.insert(j, value);
        }
    }

    pub fn value(&self, j: i64) -> Rational {
        self.values.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    /// The window `L_{k+1}, ..., L_{2k+2}` on which `psi_k` may be nonzero.
    pub fn window(&self) -> std::ops::RangeInclusive<i64> {
        let k = self.k as i64;
        k + 1..=2 * k + 2
    }

    /// `psi` extended by zero to an arbitrary generator.
    pub fn psi(&self, g: Generator) -> Rational {
        match g.kind() {
            Kind::L => self.value(g.index().as_int()),
            _ => Rational::zero(),
        }
    }

    pub fn to_json(&self) -> String {
        let file = WhittakerFile {
            k: self.k,
            values: self
                .window()
                .map(|j| (format!("L{j}"), format_rational(&self.value(j))))
                .chain(
                    self.values
                        .iter()
                        .filter(|(j, _)| !self.window().contains(j))
                        .map(|(j, v)| (format!("L{j}"), format_rational(v))),
                )
                .collect(),
            ell: format_rational(&self.ell),
        };
        serde_json::to_string(&file).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: WhittakerFile = serde_json::from_str(s)?;
        let mut data = WhittakerData::new(file.k, parse_rational(&file.ell)?);
        for (key, value) in &file.values {
            let g = Generator::from_file_key(key)?;
            let j = match g.kind() {
                Kind::L => g.index().as_int(),
                _ => {
                    return Err(Error::Format(format!(
                        "psi is only stored on L generators, got `{key}`"
                    )))
                }
            };
            data.set(j, parse_rational(value)?);
        }
        Ok(data)
    }
}

/// Whether `psi` (extended by zero) kills `[p^(k), p^(k)]`.
///
/// Pairs are taken from `p^(k)` up to the largest grade on which `psi` is
/// stored, which covers every bracket `psi` could see.
pub fn check_homomorphism(psi: &WhittakerData) -> bool {
    let k = psi.k as i64;
    if psi.values.keys().any(|&j| j <= k) {
        return false;
    }
    let top = psi.values.keys().copied().max().unwrap_or(0).max(2 * k + 2);
    // p^(k): L_m and G_{m+1/2} with m > k
    let mut gens = Vec::new();
    for m in k + 1..=top {
        gens.push(Generator::l(m));
        gens.push(Generator::g(2 * m + 1));
    }
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i..] {
            let value: Rational = bracket_terms(x, y)
                .into_iter()
                .map(|(g, c)| psi.psi(g) * c)
                .sum();
            if !value.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The two-dimensional `m^(k)`-module `A_psi_k = Cw + Cu` with
/// `x w = psi(x) w` on `p^(k)`, `G_{k+1/2} w = u`, at level `t = 2k + 2`.
pub fn whittaker_bmodule(psi: &WhittakerData) -> Result<BModuleSpec> {
    if !check_homomorphism(psi) {
        return Err(Error::Homomorphism(format!(
            "psi must vanish outside L{}..L{} for k = {}",
            psi.k + 1,
            2 * psi.k + 2,
            psi.k
        )));
    }
    let k = psi.k as i64;
    let t = 2 * psi.k + 2;
    let mut action = BTreeMap::new();
    for m in psi.window() {
        action.insert(Generator::l(m), Matrix::scalar(2, &psi.value(m)));
    }
    // G_{k+1/2}: w -> u, u -> psi(L_{2k+1}) w
    let mut lead = Matrix::zeros(2, 2);
    lead[(1, 0)] = int(1);
    lead[(0, 1)] = psi.value(2 * k + 1);
    action.insert(Generator::g(2 * k + 1), lead);
    // G_s for s >= k+3/2: w -> 0, u -> 2 psi(L_{s+k+1/2}) w
    for m in k + 2..=2 * k + 2 {
        let mut g = Matrix::zeros(2, 2);
        g[(0, 1)] = int(2) * psi.value(m + k);
        action.insert(Generator::g(2 * m - 1), g);
    }
    BModuleSpec::new(Over::Nilpotent(psi.k), t, vec![Parity::Even, Parity::Odd], action)?
        .with_names(vec!["w".into(), "u".into()])
}
