//! PBW monomials in `U(N)` and the straightening rewrite system.
//!
//! A canonical monomial lists its non-central factors in the order of
//! [`Generator`]'s `Ord` (every `G` before every `L`, ascending indices),
//! with no repeated odd factor; powers of `c` are tracked separately.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{bracket_terms, Generator, Kind, Parity};
use crate::error::{Error, ParseError, Result};
use crate::rational::{format_abs, parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    factors: Vec<Generator>,
    c_power: u32,
}

impl Monomial {
    pub fn identity() -> Self {
        Monomial::default()
    }

    pub fn from_generator(g: Generator) -> Self {
        if g.is_central() {
            Monomial {
                factors: Vec::new(),
                c_power: 1,
            }
        } else {
            Monomial {
                factors: vec![g],
                c_power: 0,
            }
        }
    }

    /// Wraps an already canonical factor list.
    ///
    /// Panics if the factors are out of order, contain `c`, or repeat an odd
    /// generator; use [`normal_order`] for arbitrary words.
    pub fn from_canonical(factors: Vec<Generator>, c_power: u32) -> Self {
        assert!(is_canonical(&factors), "factors not in canonical order");
        Monomial { factors, c_power }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn c_power(&self) -> u32 {
        self.c_power
    }

    /// Number of factors, counting `c` with multiplicity.
    pub fn len(&self) -> usize {
        self.factors.len() + self.c_power as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn parity(&self) -> Parity {
        let odd = self.factors.iter().filter(|g| g.parity().is_odd()).count();
        if odd % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Sum of factor grades.
    pub fn grade(&self) -> crate::algebra::HalfInt {
        self.factors
            .iter()
            .fold(crate::algebra::HalfInt::ZERO, |acc, g| acc + g.grade())
    }

    /// The factor word including `c` factors at the end.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = self.factors.clone();
        w.extend(std::iter::repeat(Generator::C).take(self.c_power as usize));
        w
    }
}

impl Ord for Monomial {
    // Longer monomials first, then factor lists lexicographically, then c-power.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .factors
            .len()
            .cmp(&self.factors.len())
            .then_with(|| self.factors.cmp(&other.factors))
            .then_with(|| self.c_power.cmp(&other.c_power))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        write_word(f, &self.factors)?;
        match self.c_power {
            0 => Ok(()),
            1 => f.write_str("c"),
            p => write!(f, "c^{p}"),
        }
    }
}

/// Writes a factor word, grouping runs of equal factors as `X^n`.
pub(crate) fn write_word(f: &mut impl fmt::Write, factors: &[Generator]) -> fmt::Result {
    let mut i = 0;
    while i < factors.len() {
        let g = factors[i];
        let mut j = i + 1;
        while j < factors.len() && factors[j] == g {
            j += 1;
        }
        write!(f, "{g}")?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

fn is_canonical(factors: &[Generator]) -> bool {
    factors.iter().all(|g| !g.is_central())
        && factors
            .windows(2)
            .all(|w| w[0] < w[1] || (w[0] == w[1] && w[0].kind() == Kind::L))
}

/// Positions `i` where the pair `(w[i], w[i+1])` must be rewritten.
fn reducible_positions(word: &[Generator]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1] || (w[0] == w[1] && w[0].kind() == Kind::G))
        .map(|(i, _)| i)
        .collect()
}

/// A finite rational combination of canonical monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::monomial(Monomial::identity(), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn generator(g: Generator) -> Self {
        Element::monomial(Monomial::from_generator(g), Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut e = Element::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    /// `Some(p)` when every term has parity `p`; the zero element is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    /// Multiplication in `U(N)`.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut prod = Element::monomial(ma.clone(), ca * cb);
                for &g in mb.word().iter() {
                    prod = prod.times_generator(g);
                }
                for (m, c) in prod.terms {
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    fn times_generator(&self, g: Generator) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            if g.is_central() {
                out.add_term(
                    Monomial {
                        factors: m.factors.clone(),
                        c_power: m.c_power + 1,
                    },
                    c.clone(),
                );
                continue;
            }
            for (p, d) in right_times(&m.factors, g).iter() {
                out.add_term(
                    Monomial {
                        factors: p.factors.clone(),
                        c_power: p.c_power + m.c_power,
                    },
                    d * c,
                );
            }
        }
        out
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs_one = c == &Rational::one() || c == &-Rational::one();
            if m.is_empty() {
                f.write_str(&format_abs(c))?;
            } else if abs_one {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_abs(c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Element {
    type Err = ParseError;

    /// Parses sums of terms `coef*word`, `word` or `coef`, where a word is a
    /// product of `L(n)`, `G(p/2)`, `c`, each optionally raised to `^k`.
    /// Words need not be canonical; the result is normal-ordered.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut out = Element::zero();
        for (sign, term) in split_terms(s)? {
            let (coef, word) = match term.split_once('*') {
                Some((c, w)) => (parse_rational(c)?, parse_word(w)?),
                None if term.contains(|ch: char| ch == 'L' || ch == 'G' || ch == 'c') => {
                    (Rational::one(), parse_word(term)?)
                }
                None => (parse_rational(term)?, Vec::new()),
            };
            let value = normal_order(&word).scale(&(coef * Rational::from_integer(sign.into())));
            out = &out + &value;
        }
        Ok(out)
    }
}

pub(crate) fn split_terms(s: &str) -> std::result::Result<Vec<(i32, &str)>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let piece = s[start..i].trim();
                if piece.is_empty() {
                    // leading or repeated sign
                    if b == b'-' {
                        sign = -sign;
                    }
                } else {
                    out.push((sign, piece));
                    sign = if b == b'-' { -1 } else { 1 };
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    let piece = s[start..].trim();
    if piece.is_empty() {
        return Err(ParseError::new(s, "dangling operator or empty input"));
    }
    out.push((sign, piece));
    Ok(out)
}

/// Parses a product of generators such as `G(-1/2)L(-1)^2c`.
pub fn parse_word(s: &str) -> std::result::Result<Vec<Generator>, ParseError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let (g, tail) = if let Some(tail) = rest.strip_prefix('c') {
            (Generator::C, tail)
        } else if rest.starts_with('L') || rest.starts_with('G') {
            let close = rest
                .find(')')
                .ok_or_else(|| ParseError::new(s, "unclosed generator"))?;
            (rest[..=close].parse::<Generator>()?, &rest[close + 1..])
        } else {
            return Err(ParseError::new(s, "expected L(n), G(p/2) or c"));
        };
        let (power, tail) = match tail.strip_prefix('^') {
            Some(p) => {
                let end = p.find(|c: char| !c.is_ascii_digit()).unwrap_or(p.len());
                let n: usize = p[..end]
                    .parse()
                    .map_err(|_| ParseError::new(s, "bad exponent"))?;
                (n, &p[end..])
            }
            None => (1, tail),
        };
        out.extend(std::iter::repeat(g).take(power));
        rest = tail;
    }
    Ok(out)
}

/// Picks which reducible adjacent pair to rewrite next.
pub trait Strategy {
    /// `positions` is non-empty; returns one of its entries.
    fn choose(&mut self, word: &[Generator], positions: &[usize]) -> usize;
}

/// Always rewrites the leftmost reducible pair.
pub struct Leftmost;

impl Strategy for Leftmost {
    fn choose(&mut self, _word: &[Generator], positions: &[usize]) -> usize {
        positions[0]
    }
}

impl<F: FnMut(&[Generator], &[usize]) -> usize> Strategy for F {
    fn choose(&mut self, word: &[Generator], positions: &[usize]) -> usize {
        self(word, positions)
    }
}

type Expansion = Rc<Vec<(Monomial, Rational)>>;

thread_local! {
    static RIGHT_TIMES: RefCell<HashMap<(Vec<Generator>, Generator), Expansion>> =
        RefCell::new(HashMap::new());
}

const RIGHT_TIMES_LIMIT: usize = 1 << 20;

/// Expansion of `factors * g` for canonical `factors` and non-central `g`.
fn right_times(factors: &[Generator], g: Generator) -> Expansion {
    let key = (factors.to_vec(), g);
    if let Some(hit) = RIGHT_TIMES.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let result = Rc::new(right_times_uncached(factors, g).terms.into_iter().collect::<Vec<_>>());
    RIGHT_TIMES.with(|c| {
        let mut cache = c.borrow_mut();
        if cache.len() >= RIGHT_TIMES_LIMIT {
            cache.clear();
        }
        cache.insert(key, result.clone());
    });
    result
}

fn right_times_uncached(factors: &[Generator], g: Generator) -> Element {
    let Some((&x, rest)) = factors.split_last() else {
        return Element::generator(g);
    };
    if x < g || (x == g && x.kind() == Kind::L) {
        let mut f = factors.to_vec();
        f.push(g);
        return Element::monomial(Monomial { factors: f, c_power: 0 }, Rational::one());
    }
    let head = Element::monomial(
        Monomial {
            factors: rest.to_vec(),
            c_power: 0,
        },
        Rational::one(),
    );
    if x == g {
        // G_r G_r = L_{2r}
        return head.times_generator(Generator::l(x.index().twice()));
    }
    let sign = Rational::from_integer(Parity::sign(x.parity(), g.parity()).into());
    let mut out = head.times_generator(g).times_generator(x).scale(&sign);
    for (h, d) in bracket_terms(x, g) {
        for (m, c) in head.times_generator(h).terms {
            out.add_term(m, c * &d);
        }
    }
    out
}

/// Canonical PBW expansion of the product of `word`'s factors.
pub fn normal_order(word: &[Generator]) -> Element {
    word.iter().fold(Element::one(), |acc, &g| acc.times_generator(g))
}

/// [`normal_order`] with an explicit rewrite strategy. The result does not
/// depend on the strategy.
pub fn normal_order_with(word: &[Generator], strategy: &mut dyn Strategy) -> Element {
    let mut pending: BTreeMap<(Vec<Generator>, u32), Rational> = BTreeMap::new();
    let c_power = word.iter().filter(|g| g.is_central()).count() as u32;
    let stripped: Vec<Generator> = word.iter().copied().filter(|g| !g.is_central()).collect();
    pending.insert((stripped, c_power), Rational::one());

    let mut out = Element::zero();
    while let Some(((w, cp), coef)) = pending.pop_first() {
        if coef.is_zero() {
            continue;
        }
        let positions = reducible_positions(&w);
        if positions.is_empty() {
            out.add_term(Monomial { factors: w, c_power: cp }, coef);
            continue;
        }
        let p = strategy.choose(&w, &positions);
        debug_assert!(positions.contains(&p));
        let (x, y) = (w[p], w[p + 1]);
        let mut push = |word: Vec<Generator>, cp: u32, c: Rational| {
            let entry = pending.entry((word, cp)).or_insert_with(Rational::zero);
            *entry += c;
        };
        if x == y {
            // G_r G_r = (1/2)[G_r, G_r] = L_{2r}; no central term since r != 0
            let mut nw = w[..p].to_vec();
            nw.push(Generator::l(x.index().twice()));
            nw.extend_from_slice(&w[p + 2..]);
            push(nw, cp, coef);
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        let sign = Parity::sign(x.parity(), y.parity());
        push(swapped, cp, coef.clone() * Rational::from_integer(sign.into()));
        for (g, c) in bracket_terms(x, y) {
            let mut nw = w[..p].to_vec();
            let mut ncp = cp;
            if g.is_central() {
                ncp += 1;
            } else {
                nw.push(g);
            }
            nw.extend_from_slice(&w[p + 2..]);
            push(nw, ncp, c * &coef);
        }
    }
    out
}

/// Multiplication in `U(N)`.
pub fn mul(a: &Element, b: &Element) -> Element {
    a.mul(b)
}

/// Super-commutator `ab - (-1)^{|a||b|} ba` of parity-homogeneous elements.
pub fn ad(x: &Element, y: &Element) -> Result<Element> {
    let px = x
        .parity()
        .ok_or_else(|| Error::Parity(format!("`{x}` is not parity-homogeneous")))?;
    let py = y
        .parity()
        .ok_or_else(|| Error::Parity(format!("`{y}` is not parity-homogeneous")))?;
    let sign = Rational::from_integer(Parity::sign(px, py).into());
    Ok(&x.mul(y) - &y.mul(x).scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn one_swap() {
        let e = normal_order(&[Generator::l(1), Generator::l(-1)]);
        assert_eq!(e.to_string(), "L(-1)L(1) + 2*L(0)");
    }

    #[test]
    fn odd_square() {
        assert_eq!(normal_order(&[Generator::g(1), Generator::g(1)]), el("L(1)"));
        assert_eq!(normal_order(&[Generator::g(-1), Generator::g(-1)]), el("L(-1)"));
    }

    #[test]
    fn central_factor_is_tracked_separately() {
        let e = normal_order(&[Generator::l(5), Generator::C]);
        assert_eq!(e.len(), 1);
        let (m, c) = e.terms().next().unwrap();
        assert_eq!(m.c_power(), 1);
        assert_eq!(m.factors(), &[Generator::l(5)]);
        assert_eq!(c, &q(1, 1));
        assert_eq!(e.to_string(), "L(5)c");
    }

    #[test]
    fn commutator_via_mul() {
        let a = el("L(1)");
        let b = el("L(-1)");
        assert_eq!(&a.mul(&b) - &b.mul(&a), el("2*L(0)"));
        let x = el("3*G(-1/2)L(2) - L(0)");
        assert_eq!(Element::one().mul(&x), x);
        assert_eq!(x.mul(&Element::one()), x);
    }

    #[test]
    fn ad_examples() {
        assert!(ad(&el("L(1)"), &el("G(1/2)")).unwrap().is_zero());
        assert_eq!(ad(&el("G(1/2)"), &el("G(3/2)")).unwrap(), el("2*L(2)"));
        assert!(ad(&el("c"), &el("L(-3)")).unwrap().is_zero());
        assert!(matches!(ad(&el("L(1) + G(1/2)"), &el("L(0)")), Err(Error::Parity(_))));
    }

    #[test]
    fn text_round_trip() {
        let e = el("1/2*L(-2)c + 2*G(-1/2)L(-1)");
        assert_eq!(e.to_string(), "2*G(-1/2)L(-1) + 1/2*L(-2)c");
        assert_eq!(el(&e.to_string()), e);
        let f = el("-L(-1)^2 + 3 - c^2");
        assert_eq!(f.to_string(), "-L(-1)^2 + 3 - c^2");
        assert_eq!(el(&f.to_string()), f);
        assert_eq!(el("0"), Element::zero());
        assert_eq!(Element::zero().to_string(), "0");
        assert!("L(1) +".parse::<Element>().is_err());
        assert!("X(1)".parse::<Element>().is_err());
    }

    #[test]
    fn non_canonical_input_is_straightened() {
        assert_eq!(el("L(1)L(-1)"), el("L(-1)L(1) + 2*L(0)"));
    }
}
