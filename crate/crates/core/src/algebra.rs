//! Generators and the structural bracket of the Neveu-Schwarz superalgebra.
//!
//! Even generators `L(n)` carry integer indices, odd generators `G(r)` carry
//! indices in `Z + 1/2`, and `c` is central. Indices of both kinds share the
//! [`HalfInt`] representation, which stores twice the index.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::pbw::Element;
use crate::rational::{parse_rational, Rational};

/// A number in `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }

    /// Integer value; only meaningful when [`is_integral`](Self::is_integral).
    pub const fn as_int(self) -> i64 {
        self.twice / 2
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    pub const fn is_positive(self) -> bool {
        self.twice > 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_rational(s)?;
        let doubled = r * Rational::from_integer(BigInt::from(2));
        if !doubled.is_integer() {
            return Err(ParseError::new(s, "index must lie in (1/2)Z"));
        }
        let twice: i64 = doubled
            .to_integer()
            .try_into()
            .map_err(|_| ParseError::new(s, "index out of range"))?;
        Ok(HalfInt::from_twice(twice))
    }
}

/// Z/2 grading.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The Koszul sign `(-1)^{|a||b|}`.
    pub fn sign(a: Parity, b: Parity) -> i32 {
        if a.is_odd() && b.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Generator kinds, ordered so that derived comparisons put `G` before `L`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    G,
    L,
    C,
}

/// A basis element `L_n`, `G_r` or `c`.
///
/// The derived order (kind, then index) is the canonical PBW factor order:
/// every `G` precedes every `L`, indices ascend, and `c` comes last.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    kind: Kind,
    index: HalfInt,
}

impl Generator {
    pub const C: Generator = Generator {
        kind: Kind::C,
        index: HalfInt::ZERO,
    };

    pub fn l(n: i64) -> Generator {
        Generator {
            kind: Kind::L,
            index: HalfInt::from_int(n),
        }
    }

    /// `G_r` with `r = twice / 2`; `twice` must be odd.
    pub fn g(twice: i64) -> Generator {
        assert!(twice % 2 != 0, "G index must be half-odd, got {twice}/2");
        Generator {
            kind: Kind::G,
            index: HalfInt::from_twice(twice),
        }
    }

    /// Builds a generator of the given kind with index `index`; returns
    /// `None` when the index has the wrong integrality for the kind.
    pub fn new(kind: Kind, index: HalfInt) -> Option<Generator> {
        match kind {
            Kind::L if index.is_integral() => Some(Generator { kind, index }),
            Kind::G if !index.is_integral() => Some(Generator { kind, index }),
            Kind::C => Some(Generator::C),
            _ => None,
        }
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn index(self) -> HalfInt {
        self.index
    }

    pub fn is_central(self) -> bool {
        self.kind == Kind::C
    }

    pub fn parity(self) -> Parity {
        match self.kind {
            Kind::G => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Eigenvalue of `ad L_0`.
    pub fn grade(self) -> HalfInt {
        match self.kind {
            Kind::C => HalfInt::ZERO,
            _ => self.index,
        }
    }

    /// Position of a negative generator in the exponent vectors indexing
    /// `U(N_-)`: `L_{-n}` sits at `n`, `G_{-k+1/2}` at `k`.
    pub fn negative_position(self) -> Option<u32> {
        match self.kind {
            Kind::L if self.index.is_negative() => Some((-self.index.as_int()) as u32),
            Kind::G if self.index.is_negative() => Some(((1 - self.index.twice()) / 2) as u32),
            _ => None,
        }
    }

    /// Inverse of [`negative_position`](Self::negative_position) for `L`.
    pub fn l_at(position: u32) -> Generator {
        Generator::l(-(position as i64))
    }

    /// Inverse of [`negative_position`](Self::negative_position) for `G`.
    pub fn g_at(position: u32) -> Generator {
        Generator::g(1 - 2 * position as i64)
    }

    /// Short key used in module spec files: `L0`, `G1/2`, `c`.
    pub fn file_key(self) -> String {
        match self.kind {
            Kind::L => format!("L{}", self.index),
            Kind::G => format!("G{}", self.index),
            Kind::C => "c".to_string(),
        }
    }

    pub fn from_file_key(s: &str) -> Result<Generator, ParseError> {
        let s = s.trim();
        if s == "c" {
            return Ok(Generator::C);
        }
        let (kind, rest) = match s.chars().next() {
            Some('L') => (Kind::L, &s[1..]),
            Some('G') => (Kind::G, &s[1..]),
            _ => return Err(ParseError::new(s, "expected generator key like L2 or G3/2")),
        };
        let rest = rest.trim_start_matches('(').trim_end_matches(')');
        let index: HalfInt = rest.parse()?;
        Generator::new(kind, index)
            .ok_or_else(|| ParseError::new(s, "L needs an integer index, G a half-odd one"))
    }

    pub fn in_subalgebra(self, tag: Subalgebra) -> bool {
        membership(self, tag)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::L => write!(f, "L({})", self.index),
            Kind::G => write!(f, "G({})", self.index),
            Kind::C => f.write_str("c"),
        }
    }
}

impl FromStr for Generator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "c" {
            return Ok(Generator::C);
        }
        let kind = match t.chars().next() {
            Some('L') => Kind::L,
            Some('G') => Kind::G,
            _ => return Err(ParseError::new(s, "expected L(n), G(p/2) or c")),
        };
        let inner = t[1..]
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(s, "expected parenthesised index"))?;
        let index: HalfInt = inner.parse()?;
        Generator::new(kind, index)
            .ok_or_else(|| ParseError::new(s, "L needs an integer index, G a half-odd one"))
    }
}

/// Named subalgebras of the Neveu-Schwarz algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Subalgebra {
    /// The whole algebra.
    N,
    NPlus,
    NMinus,
    /// `C L_0 + C c`.
    NZero,
    /// `L_i (i >= 0)` and `G_{i-1/2} (i >= 1)`.
    B,
    /// `L_m, G_{m-1/2}` for `m > t`.
    M(u32),
    /// `L_m, G_{m+1/2}` for `m > t`.
    P(u32),
}

impl fmt::Display for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subalgebra::N => f.write_str("N"),
            Subalgebra::NPlus => f.write_str("N+"),
            Subalgebra::NMinus => f.write_str("N-"),
            Subalgebra::NZero => f.write_str("N0"),
            Subalgebra::B => f.write_str("b"),
            Subalgebra::M(t) => write!(f, "m{t}"),
            Subalgebra::P(t) => write!(f, "p{t}"),
        }
    }
}

/// Whether `g` lies in the subalgebra named by `tag`.
pub fn membership(g: Generator, tag: Subalgebra) -> bool {
    let twice = g.index.twice();
    match (tag, g.kind) {
        (Subalgebra::N, _) => true,
        (_, Kind::C) => tag == Subalgebra::NZero,
        (Subalgebra::NPlus, _) => twice > 0,
        (Subalgebra::NMinus, _) => twice < 0,
        (Subalgebra::NZero, Kind::L) => twice == 0,
        (Subalgebra::NZero, Kind::G) => false,
        (Subalgebra::B, _) => twice >= 0,
        // L_m, m > t; G_{m-1/2}, m > t  <=>  2r = 2m - 1 > 2t - 1
        (Subalgebra::M(t), Kind::L) => twice > 2 * t as i64,
        (Subalgebra::M(t), Kind::G) => twice + 1 > 2 * t as i64,
        // L_m, m > t; G_{m+1/2}, m > t  <=>  2r = 2m + 1 > 2t + 1
        (Subalgebra::P(t), Kind::L) => twice > 2 * t as i64,
        (Subalgebra::P(t), Kind::G) => twice - 1 > 2 * t as i64,
    }
}

/// The super-bracket `[x, y]` as a list of `(generator, coefficient)` pairs
/// with nonzero coefficients; central terms use [`Generator::C`].
pub fn bracket_terms(x: Generator, y: Generator) -> Vec<(Generator, Rational)> {
    let mut out = Vec::with_capacity(2);
    if x.is_central() || y.is_central() {
        return out;
    }
    let twelve = Rational::from_integer(BigInt::from(12));
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    match (x.kind, y.kind) {
        (Kind::L, Kind::L) => {
            let m = x.index.as_int();
            let n = y.index.as_int();
            if m != n {
                out.push((Generator::l(m + n), Rational::from_integer(BigInt::from(m - n))));
            }
            if m == -n {
                let coeff = Rational::from_integer(BigInt::from(m * m * m - m)) / twelve;
                if !coeff.is_zero() {
                    out.push((Generator::C, coeff));
                }
            }
        }
        (Kind::L, Kind::G) => {
            // (m/2 - r) G_{m+r}
            let coeff = x.index.to_rational() * &half - y.index.to_rational();
            if !coeff.is_zero() {
                out.push((Generator::g(x.index.twice() + y.index.twice()), coeff));
            }
        }
        (Kind::G, Kind::L) => {
            // [G_r, L_m] = -[L_m, G_r]
            for (g, c) in bracket_terms(y, x) {
                out.push((g, -c));
            }
        }
        (Kind::G, Kind::G) => {
            let sum = x.index + y.index;
            out.push((Generator::l(sum.as_int()), Rational::from_integer(BigInt::from(2))));
            if sum.twice() == 0 {
                let r = x.index.to_rational();
                let coeff = (&r * &r - Rational::new(BigInt::one(), BigInt::from(4)))
                    / Rational::from_integer(BigInt::from(3));
                if !coeff.is_zero() {
                    out.push((Generator::C, coeff));
                }
            }
        }
        _ => unreachable!("central generators handled above"),
    }
    out
}

/// The super-bracket `[x, y]` as a normal-ordered element.
pub fn bracket(x: Generator, y: Generator) -> Element {
    Element::from_terms(
        bracket_terms(x, y)
            .into_iter()
            .map(|(g, c)| (crate::pbw::Monomial::from_generator(g), c)),
    )
}

type Linear = BTreeMap<Generator, Rational>;

fn bracket_linear(x: Generator, y: &Linear) -> Linear {
    let mut out = Linear::new();
    for (g, c) in y {
        for (h, d) in bracket_terms(x, *g) {
            *out.entry(h).or_insert_with(Rational::zero) += d * c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn to_element(v: Linear) -> Element {
    Element::from_terms(
        v.into_iter()
            .map(|(g, c)| (crate::pbw::Monomial::from_generator(g), c)),
    )
}

/// `[x, y] + (-1)^{|x||y|} [y, x]`, zero for a super Lie bracket.
pub fn antisymmetry_residual(x: Generator, y: Generator) -> Element {
    let sign = Rational::from_integer(Parity::sign(x.parity(), y.parity()).into());
    let mut out: Linear = bracket_terms(x, y).into_iter().collect();
    for (g, c) in bracket_terms(y, x) {
        *out.entry(g).or_insert_with(Rational::zero) += c * &sign;
    }
    out.retain(|_, c| !c.is_zero());
    to_element(out)
}

/// The cyclic super-Jacobi sum
/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
pub fn jacobi_residual(x: Generator, y: Generator, z: Generator) -> Element {
    let mut out = Linear::new();
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let sign = Rational::from_integer(Parity::sign(a.parity(), c.parity()).into());
        let inner: Linear = bracket_terms(b, c).into_iter().collect();
        for (g, d) in bracket_linear(a, &inner) {
            *out.entry(g).or_insert_with(Rational::zero) += d * &sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    to_element(out)
}

/// All non-central generators with `|2 * index| <= bound`, in canonical order.
pub fn generators_up_to(bound: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for twice in -bound..=bound {
        if twice % 2 == 0 {
            out.push(Generator::l(twice / 2));
        } else {
            out.push(Generator::g(twice));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn terms(x: Generator, y: Generator) -> Vec<(Generator, Rational)> {
        bracket_terms(x, y)
    }

    #[test]
    fn virasoro_central_term() {
        assert_eq!(
            terms(Generator::l(2), Generator::l(-2)),
            vec![(Generator::l(0), q(4, 1)), (Generator::C, q(1, 2))]
        );
        assert!(terms(Generator::l(0), Generator::l(0)).is_empty());
    }

    #[test]
    fn odd_brackets() {
        assert_eq!(terms(Generator::g(1), Generator::g(1)), vec![(Generator::l(1), q(2, 1))]);
        assert!(terms(Generator::l(1), Generator::g(1)).is_empty());
        assert_eq!(
            terms(Generator::g(3), Generator::g(-3)),
            vec![(Generator::l(0), q(2, 1)), (Generator::C, q(2, 3))]
        );
        // [G_{1/2}, L_1] = -[L_1, G_{1/2}] = 0, and [G_{-1/2}, L_1] = -(1/2 + 1/2) G_{1/2}
        assert_eq!(terms(Generator::g(-1), Generator::l(1)), vec![(Generator::g(1), q(-1, 1))]);
    }

    #[test]
    fn membership_examples() {
        assert!(membership(Generator::g(5), Subalgebra::M(2)));
        assert!(!membership(Generator::g(3), Subalgebra::M(2)));
        assert!(!membership(Generator::l(0), Subalgebra::NPlus));
        assert!(!membership(Generator::g(1), Subalgebra::P(0)));
        assert!(membership(Generator::g(3), Subalgebra::P(0)));
        assert!(membership(Generator::l(1), Subalgebra::P(0)));
        assert!(membership(Generator::C, Subalgebra::NZero));
        assert!(!membership(Generator::C, Subalgebra::B));
        assert!(membership(Generator::g(1), Subalgebra::B));
        assert!(!membership(Generator::g(-1), Subalgebra::B));
        assert!(membership(Generator::l(3), Subalgebra::M(2)));
        assert!(!membership(Generator::l(2), Subalgebra::M(2)));
    }

    #[test]
    fn positions_round_trip() {
        assert_eq!(Generator::g(-1).negative_position(), Some(1));
        assert_eq!(Generator::g(-3).negative_position(), Some(2));
        assert_eq!(Generator::l(-2).negative_position(), Some(2));
        assert_eq!(Generator::g_at(3), Generator::g(-5));
        assert_eq!(Generator::l_at(4), Generator::l(-4));
        assert_eq!(Generator::l(0).negative_position(), None);
    }

    #[test]
    fn parse_and_display() {
        for s in ["L(-3)", "G(3/2)", "G(-1/2)", "c", "L(0)"] {
            let g: Generator = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("L(1/2)".parse::<Generator>().is_err());
        assert!("G(1)".parse::<Generator>().is_err());
        assert_eq!(Generator::from_file_key("G3/2").unwrap(), Generator::g(3));
        assert_eq!(Generator::g(-3).file_key(), "G-3/2");
        assert_eq!(Generator::from_file_key("L12").unwrap(), Generator::l(12));
    }

    #[test]
    fn canonical_factor_order() {
        let mut v = vec![Generator::l(-1), Generator::g(1), Generator::l(-2), Generator::g(-3)];
        v.sort();
        assert_eq!(
            v,
            vec![Generator::g(-3), Generator::g(1), Generator::l(-2), Generator::l(-1)]
        );
    }
}
