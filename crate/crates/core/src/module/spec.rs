//! Finite-dimensional modules over the truncated Borel quotients `b^(t)`
//! (and over `m^(k) / m^(t)`), given by explicit rational matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{bracket_terms, Generator, Parity, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{format_rational, parse_rational, q, Rational};

/// The algebra a [`BModuleSpec`] is a module over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Over {
    /// `b^(t) = b / m^(t)`: generators `L_0..L_t`, `G_{1/2}..G_{t-1/2}`.
    Borel,
    /// `m^(k) / m^(t)`: generators `L_{k+1}..L_t`, `G_{k+1/2}..G_{t-1/2}`.
    Nilpotent(u32),
}

impl Over {
    pub fn subalgebra(self) -> Subalgebra {
        match self {
            Over::Borel => Subalgebra::B,
            Over::Nilpotent(k) => Subalgebra::M(k),
        }
    }
}

impl fmt::Display for Over {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Over::Borel => f.write_str("b"),
            Over::Nilpotent(k) => write!(f, "m{k}"),
        }
    }
}

/// A finite-dimensional module over `b^(t)` (or `m^(k)/m^(t)`).
///
/// Generators without a stored matrix act as zero, which encodes both the
/// quotient by `m^(t)` and generators the user left out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BModuleSpec {
    over: Over,
    t: u32,
    dim: usize,
    parity: Vec<Parity>,
    action: BTreeMap<Generator, Matrix>,
    names: Option<Vec<String>>,
}

/// One violated relation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub left: String,
    pub right: String,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether some violation names the pair `(x, y)` in either order.
    pub fn names_pair(&self, x: Generator, y: Generator) -> bool {
        let (x, y) = (x.to_string(), y.to_string());
        self.violations
            .iter()
            .any(|v| (v.left == x && v.right == y) || (v.left == y && v.right == x))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "violation ({}, {}): {}", v.left, v.right, v.message)?;
        }
        Ok(())
    }
}

impl BModuleSpec {
    /// Builds a spec and checks shapes; relations are checked by
    /// [`validate`](Self::validate).
    pub fn new(
        over: Over,
        t: u32,
        parity: Vec<Parity>,
        action: BTreeMap<Generator, Matrix>,
    ) -> Result<Self> {
        let dim = parity.len();
        if dim == 0 {
            return Err(Error::Format("dimension must be positive".into()));
        }
        if let Over::Nilpotent(k) = over {
            if k > t {
                return Err(Error::Format(format!("m{k} spec needs t >= {k}, got t = {t}")));
            }
        }
        let spec = BModuleSpec {
            over,
            t,
            dim,
            parity,
            action: BTreeMap::new(),
            names: None,
        };
        let defined = spec.defined_generators();
        let mut stored = BTreeMap::new();
        for (g, m) in action {
            if !defined.contains(&g) {
                return Err(Error::Format(format!(
                    "{g} is not a generator of {over} at level t = {t}"
                )));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Format(format!(
                    "matrix for {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_zero() {
                stored.insert(g, m);
            }
        }
        Ok(BModuleSpec {
            action: stored,
            ..spec
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Format("one name per basis vector required".into()));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn over(&self) -> Over {
        self.over
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn basis_name(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None if self.dim == 1 => "v".to_string(),
            None => format!("v{i}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Generators that may carry a nonzero matrix.
    pub fn defined_generators(&self) -> Vec<Generator> {
        let t = self.t as i64;
        let (lowest_l, lowest_g) = match self.over {
            Over::Borel => (0, 1),
            Over::Nilpotent(k) => (k as i64 + 1, k as i64 + 1),
        };
        // G_{m-1/2} and L_m with m <= t
        let mut out: Vec<Generator> = (lowest_g..=t).map(|m| Generator::g(2 * m - 1)).collect();
        out.extend((lowest_l..=t).map(Generator::l));
        out
    }

    pub fn is_defined(&self, g: Generator) -> bool {
        self.defined_generators().contains(&g)
    }

    /// Action matrix of `g`; zero for generators outside the defined set.
    pub fn matrix(&self, g: Generator) -> Matrix {
        self.action
            .get(&g)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub(crate) fn stored_matrix(&self, g: Generator) -> Option<&Matrix> {
        self.action.get(&g)
    }

    /// Projection of `[x, y]` onto the quotient, as a matrix.
    fn bracket_matrix(&self, x: Generator, y: Generator) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (g, c) in bracket_terms(x, y) {
            if !g.is_central() && self.is_defined(g) {
                out = out.add(&self.matrix(g).scale(&c));
            }
        }
        out
    }

    /// Checks bracket and parity compatibility of all defined generators.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let gens = self.defined_generators();
        for (i, &x) in gens.iter().enumerate() {
            let mx = self.matrix(x);
            // parity: even blocks preserve, odd blocks swap the parity splitting
            for r in 0..self.dim {
                for c in 0..self.dim {
                    if mx[(r, c)].is_zero() {
                        continue;
                    }
                    let shifted = self.parity[c].add(x.parity());
                    if shifted != self.parity[r] {
                        report.violations.push(Violation {
                            left: x.to_string(),
                            right: x.to_string(),
                            message: format!(
                                "entry ({r}, {c}) maps a {} vector to a {} one",
                                self.parity[c], self.parity[r]
                            ),
                        });
                        break;
                    }
                }
            }
            for &y in &gens[i..] {
                let my = self.matrix(y);
                let sign = Rational::from_integer(Parity::sign(x.parity(), y.parity()).into());
                let lhs = mx.mul(&my).sub(&my.mul(&mx).scale(&sign));
                let rhs = self.bracket_matrix(x, y);
                if lhs != rhs {
                    report.violations.push(Violation {
                        left: x.to_string(),
                        right: y.to_string(),
                        message: format!("super-commutator is {lhs}, bracket acts as {rhs}"),
                    });
                }
            }
        }
        report
    }

    /// One-dimensional even module with `L_0` acting by `h` and everything
    /// else by zero (`t = 0`).
    pub fn highest_weight(h: Rational) -> Self {
        let action = BTreeMap::from([(Generator::l(0), Matrix::scalar(1, &h))]);
        BModuleSpec::new(Over::Borel, 0, vec![Parity::Even], action).expect("valid shape")
    }

    pub fn to_file(&self) -> SpecFile {
        SpecFile {
            over: match self.over {
                Over::Borel => None,
                o => Some(o.to_string()),
            },
            t: self.t,
            dim: self.dim,
            parity: self.parity.iter().map(ToString::to_string).collect(),
            action: self
                .action
                .iter()
                .map(|(g, m)| {
                    let rows = m
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(format_rational).collect())
                        .collect();
                    (g.file_key(), rows)
                })
                .collect(),
            names: self.names.clone(),
        }
    }

    pub fn from_file(file: &SpecFile) -> Result<Self> {
        let over = match file.over.as_deref() {
            None | Some("b") => Over::Borel,
            Some(s) => match s.strip_prefix('m').and_then(|k| k.parse().ok()) {
                Some(k) => Over::Nilpotent(k),
                None => return Err(Error::Format(format!("unknown algebra `{s}`"))),
            },
        };
        let parity = file
            .parity
            .iter()
            .map(|p| match p.as_str() {
                "even" => Ok(Parity::Even),
                "odd" => Ok(Parity::Odd),
                other => Err(Error::Format(format!("parity must be even/odd, got `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parity.len() != file.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} parities given",
                file.dim,
                parity.len()
            )));
        }
        let mut action = BTreeMap::new();
        for (key, rows) in &file.action {
            let g = Generator::from_file_key(key)?;
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|x| parse_rational(x)).collect())
                .collect::<std::result::Result<Vec<Vec<Rational>>, _>>()?;
            let m = Matrix::from_rows(rows)
                .ok_or_else(|| Error::Format(format!("ragged matrix for {key}")))?;
            action.insert(g, m);
        }
        let spec = BModuleSpec::new(over, file.t, parity, action)?;
        match &file.names {
            Some(n) => spec.with_names(n.clone()),
            None => Ok(spec),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: SpecFile = serde_json::from_str(s)?;
        BModuleSpec::from_file(&file)
    }
}

/// On-disk form of a [`BModuleSpec`]; rationals are strings `p/q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<String>,
    pub t: u32,
    pub dim: usize,
    pub parity: Vec<String>,
    pub action: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

fn check_square(m: &Matrix, dim: usize, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::Format(format!("{what} must be {dim}x{dim}")));
    }
    Ok(())
}

fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    let n = a.rows();
    let mut out = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = a[(i, j)].clone();
            out[(i, j + n)] = b[(i, j)].clone();
            out[(i + n, j)] = c[(i, j)].clone();
            out[(i + n, j + n)] = d[(i, j)].clone();
        }
    }
    out
}

/// `U + G_{1/2}U` for an even `b^(1)_0`-module `U` given by `L_0`, `L_1`.
///
/// The odd half carries `G_{1/2}(0, u) = (L_1 u, 0)`, `L_1(0, u) = (0, L_1 u)`
/// and `L_0(0, u) = (0, L_0 u - u/2)`.
pub fn extend_b1(l0: &Matrix, l1: &Matrix) -> Result<BModuleSpec> {
    let n = l0.rows();
    check_square(l0, n, "L0")?;
    check_square(l1, n, "L1")?;
    if l0.mul(l1).sub(&l1.mul(l0)) != l1.scale(&-Rational::one()) {
        return Err(Error::Precondition("[L0, L1] = -L1 fails on U".into()));
    }
    let zero = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    let l0_odd = l0.sub(&Matrix::scalar(n, &q(1, 2)));
    let action = BTreeMap::from([
        (Generator::l(0), block(l0, &zero, &zero, &l0_odd)),
        (Generator::l(1), block(l1, &zero, &zero, l1)),
        (Generator::g(1), block(&zero, l1, &id, &zero)),
    ]);
    let mut parity = vec![Parity::Even; n];
    parity.extend(vec![Parity::Odd; n]);
    BModuleSpec::new(Over::Borel, 1, parity, action)
}

/// `U + G_{1/2}U` for an even `b^(2)_0`-module `U` given by `L_0, L_1, L_2`,
/// with `G_{3/2}U = 0`.
pub fn extend_b2(l0: &Matrix, l1: &Matrix, l2: &Matrix) -> Result<BModuleSpec> {
    let n = l0.rows();
    check_square(l0, n, "L0")?;
    check_square(l1, n, "L1")?;
    check_square(l2, n, "L2")?;
    let comm = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
    if comm(l0, l1) != l1.scale(&-Rational::one()) {
        return Err(Error::Precondition("[L0, L1] = -L1 fails on U".into()));
    }
    if comm(l0, l2) != l2.scale(&q(-2, 1)) {
        return Err(Error::Precondition("[L0, L2] = -2 L2 fails on U".into()));
    }
    if !comm(l1, l2).is_zero() {
        return Err(Error::Precondition("[L1, L2] = -L3 = 0 fails on U".into()));
    }
    let base = extend_b1(l0, l1)?;
    let zero = Matrix::zeros(n, n);
    let mut action = base.action.clone();
    action.insert(Generator::l(2), block(l2, &zero, &zero, l2));
    action.insert(Generator::g(3), block(&zero, &l2.scale(&q(2, 1)), &zero, &zero));
    BModuleSpec::new(Over::Borel, 2, base.parity.clone(), action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn defined_generator_sets() {
        let s = BModuleSpec::highest_weight(int(3));
        assert_eq!(s.defined_generators(), vec![Generator::l(0)]);
        let b2 = BModuleSpec::new(Over::Borel, 2, vec![Parity::Even], BTreeMap::new()).unwrap();
        assert_eq!(
            b2.defined_generators(),
            vec![Generator::g(1), Generator::g(3), Generator::l(0), Generator::l(1), Generator::l(2)]
        );
        let m1 = BModuleSpec::new(Over::Nilpotent(1), 4, vec![Parity::Even], BTreeMap::new())
            .unwrap();
        assert_eq!(
            m1.defined_generators(),
            vec![
                Generator::g(3),
                Generator::g(5),
                Generator::g(7),
                Generator::l(2),
                Generator::l(3),
                Generator::l(4)
            ]
        );
    }

    #[test]
    fn one_dim_highest_weight_is_valid() {
        assert!(BModuleSpec::highest_weight(q(5, 3)).validate().is_valid());
    }

    #[test]
    fn broken_relation_is_named() {
        let action = BTreeMap::from([
            (Generator::l(0), mat(&[&[1, 0], &[0, 2]])),
            (Generator::l(1), mat(&[&[0, 0], &[1, 0]])),
        ]);
        // [L0, L1] = L1 here instead of -L1
        let s = BModuleSpec::new(Over::Borel, 1, vec![Parity::Even; 2], action).unwrap();
        let r = s.validate();
        assert!(!r.is_valid());
        assert!(r.names_pair(Generator::l(0), Generator::l(1)));
    }

    #[test]
    fn parity_violation_is_reported() {
        let action = BTreeMap::from([(Generator::g(1), mat(&[&[0, 1], &[0, 0]]))]);
        let s = BModuleSpec::new(Over::Borel, 1, vec![Parity::Even; 2], action).unwrap();
        assert!(!s.validate().is_valid());
    }

    #[test]
    fn shape_errors() {
        let action = BTreeMap::from([(Generator::l(0), mat(&[&[1, 0], &[0, 2]]))]);
        assert!(matches!(
            BModuleSpec::new(Over::Borel, 0, vec![Parity::Even], action),
            Err(Error::Format(_))
        ));
        let action = BTreeMap::from([(Generator::l(3), mat(&[&[1]]))]);
        assert!(matches!(
            BModuleSpec::new(Over::Borel, 2, vec![Parity::Even], action),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn extend_b1_one_dim() {
        let s = extend_b1(&mat(&[&[7]]), &mat(&[&[0]])).unwrap();
        assert!(s.validate().is_valid());
        assert_eq!(s.parity(), &[Parity::Even, Parity::Odd]);
        let g = s.matrix(Generator::g(1));
        assert!(g.mul(&g).is_zero());
    }

    #[test]
    fn extend_b1_two_dim() {
        let l0 = mat(&[&[3, 0], &[0, 4]]);
        let l1 = mat(&[&[0, 1], &[0, 0]]);
        let s = extend_b1(&l0, &l1).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.validate().is_valid(), "{}", s.validate());
        assert!(matches!(extend_b1(&l0, &l1.transpose()), Err(Error::Precondition(_))));
    }

    #[test]
    fn extend_b2_one_dim() {
        let s = extend_b2(&mat(&[&[2]]), &mat(&[&[0]]), &mat(&[&[0]])).unwrap();
        assert!(s.validate().is_valid());
        // a 1-dim U with L1 or L2 nonzero cannot satisfy [L0, Li] = -i Li
        assert!(extend_b2(&mat(&[&[2]]), &mat(&[&[1]]), &mat(&[&[0]])).is_err());
        let g1 = s.matrix(Generator::g(1));
        let g3 = s.matrix(Generator::g(3));
        assert!(g3.mul(&g3).is_zero());
        assert_eq!(g1.mul(&g3).add(&g3.mul(&g1)), s.matrix(Generator::l(2)).scale(&int(2)));
    }

    #[test]
    fn json_round_trip() {
        let s = extend_b1(&mat(&[&[3, 0], &[0, 4]]), &mat(&[&[0, 1], &[0, 0]])).unwrap();
        let text = s.to_json();
        assert_eq!(BModuleSpec::from_json(&text).unwrap(), s);
        let bad = r#"{"t":1,"dim":2,"parity":["even","odd"],"action":{"L0":[["1"]]}}"#;
        assert!(matches!(BModuleSpec::from_json(bad), Err(Error::Format(_))));
    }
}
