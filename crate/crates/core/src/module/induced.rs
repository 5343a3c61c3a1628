//! Degree-truncated induced modules `Ind_l(V) = U(N) (x)_{U(P)} V / (c - l)`.
//!
//! `P` is `b` for ordinary specs and `m^(k)` for Whittaker data. In the
//! second case the free part of `b` (`L_0..L_k`, `G_{1/2}..G_{k-1/2}`) is
//! carried inside the [`VKey`] of each basis vector, so the induced module
//! is `U(N_-) (x) V` with `V = U(b) (x)_{U(m^(k))} A`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{bracket_terms, Generator, Kind, Parity, Subalgebra};
use crate::error::{Error, ParseError, Result};
use crate::grading::{degrees_up_to, Degree, ExpVec, OddExpVec};
use crate::linalg::{sparse_add, SparseVec};
use crate::module::spec::{BModuleSpec, Over};
use crate::pbw::{parse_word, split_terms, write_word, Element};
use crate::rational::{format_abs, parse_rational, q, Rational};

/// A basis vector of the base `V`: a canonical word in the free part of
/// `b` applied to a basis vector of the finite spec.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VKey {
    pub word: Vec<Generator>,
    pub index: usize,
}

impl VKey {
    pub fn base(index: usize) -> Self {
        VKey {
            word: Vec::new(),
            index,
        }
    }
}

impl Ord for VKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.index.cmp(&other.index))
    }
}

impl PartialOrd for VKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Basis vector `G^k L^i (x) x` of an induced module.
///
/// Ordered by the principal order on `(i, k)`, then by the base vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndKey {
    pub odd: OddExpVec,
    pub even: ExpVec,
    pub v: VKey,
}

impl IndKey {
    pub fn base(index: usize) -> Self {
        IndKey {
            odd: OddExpVec::zero(),
            even: ExpVec::zero(),
            v: VKey::base(index),
        }
    }

    pub fn degree(&self) -> Degree {
        Degree::new(self.even.clone(), self.odd.clone())
    }

    /// `w(i) + w(k)` plus the length of the free `b`-word.
    pub fn weight(&self) -> u64 {
        self.even.weight() + self.odd.weight() + self.v.word.len() as u64
    }

    pub fn in_base(&self) -> bool {
        self.odd.is_zero() && self.even.is_zero()
    }

    /// The `N_-` word `G^k L^i` in canonical order.
    pub fn lower_word(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = self.odd.positions().rev().map(Generator::g_at).collect();
        for (p, n) in self.even.iter().rev() {
            out.extend(std::iter::repeat(Generator::l_at(p)).take(n as usize));
        }
        out
    }

    fn full_word(&self) -> Vec<Generator> {
        let mut w = self.lower_word();
        w.extend_from_slice(&self.v.word);
        w
    }

    fn from_word(word: &[Generator], index: usize) -> Self {
        let split = word
            .iter()
            .position(|g| !g.grade().is_negative())
            .unwrap_or(word.len());
        let mut even = ExpVec::zero();
        let mut odd = ExpVec::zero();
        for g in &word[..split] {
            let p = g.negative_position().expect("negative generator");
            match g.kind() {
                Kind::L => even.add(p, 1),
                _ => odd.add(p, 1),
            }
        }
        IndKey {
            odd: OddExpVec::try_from_exp(odd).expect("canonical word"),
            even,
            v: VKey {
                word: word[split..].to_vec(),
                index,
            },
        }
    }
}

impl Ord for IndKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .principal_cmp(&other.degree())
            .then_with(|| self.v.cmp(&other.v))
    }
}

impl PartialOrd for IndKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite combination of induced basis vectors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IndVector {
    terms: BTreeMap<IndKey, Rational>,
}

impl IndVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: IndKey) -> Self {
        IndVector {
            terms: BTreeMap::from([(key, Rational::one())]),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (IndKey, Rational)>) -> Self {
        let mut v = IndVector::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, key: IndKey, c: Rational) {
        sparse_add(&mut self.terms, &key, &c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndKey, &Rational)> {
        self.terms.iter()
    }

    pub fn as_sparse(&self) -> &SparseVec<IndKey> {
        &self.terms
    }

    pub fn from_sparse(terms: SparseVec<IndKey>) -> Self {
        IndVector { terms }
    }

    pub fn coefficient(&self, key: &IndKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> IndVector {
        if c.is_zero() {
            return IndVector::zero();
        }
        IndVector {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// `deg(v)`: the principal-largest degree in the support.
    pub fn deg(&self) -> Option<Degree> {
        self.terms.keys().next_back().map(IndKey::degree)
    }

    /// Distinct degrees in the support, ascending.
    pub fn supp(&self) -> Vec<Degree> {
        let mut out: Vec<Degree> = Vec::new();
        for k in self.terms.keys() {
            let d = k.degree();
            if out.last() != Some(&d) {
                out.push(d);
            }
        }
        out
    }

    /// Whether every term has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        self.supp().len() <= 1
    }

    /// The part lying in `1 (x) V`.
    pub fn base_part(&self) -> IndVector {
        IndVector {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.in_base())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(IndKey::weight).max().unwrap_or(0)
    }
}

impl std::ops::Add for &IndVector {
    type Output = IndVector;
    fn add(self, rhs: &IndVector) -> IndVector {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &IndVector {
    type Output = IndVector;
    fn sub(self, rhs: &IndVector) -> IndVector {
        self + &rhs.scale(&-Rational::one())
    }
}

type Word = (Vec<Generator>, usize);
type Cache = HashMap<(Generator, Word), Arc<SparseVec<Word>>>;

/// A degree-truncated realization of `Ind_l(V)`.
#[derive(Debug)]
pub struct InducedModule {
    base: BModuleSpec,
    ell: Rational,
    cap: u32,
    free_b: Vec<Generator>,
    basis: Vec<IndKey>,
    cache: Mutex<Cache>,
}

impl Clone for InducedModule {
    fn clone(&self) -> Self {
        InducedModule {
            base: self.base.clone(),
            ell: self.ell.clone(),
            cap: self.cap,
            free_b: self.free_b.clone(),
            basis: self.basis.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

/// Canonical words of exactly `len` letters over `gens` (sorted), with no
/// repeated odd letter.
fn canonical_words(gens: &[Generator], len: usize) -> Vec<Vec<Generator>> {
    fn rec(gens: &[Generator], start: usize, len: usize, cur: &mut Vec<Generator>, out: &mut Vec<Vec<Generator>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..gens.len() {
            let g = gens[i];
            cur.push(g);
            let next = if g.parity().is_odd() { i + 1 } else { i };
            rec(gens, next, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, len, &mut Vec::new(), &mut out);
    out
}

impl InducedModule {
    /// Induces from `base` with `c` acting by `ell`, keeping basis vectors
    /// of total weight at most `cap`.
    pub fn new(base: BModuleSpec, ell: Rational, cap: u32) -> Self {
        let free_b: Vec<Generator> = match base.over() {
            Over::Borel => Vec::new(),
            Over::Nilpotent(k) => {
                let k = k as i64;
                let mut g: Vec<Generator> = (1..=k).map(|m| Generator::g(2 * m - 1)).collect();
                g.extend((0..=k).map(Generator::l));
                g
            }
        };
        let mut basis = Vec::new();
        for d in degrees_up_to(cap as u64) {
            let room = cap as u64 - d.weight();
            let mut vkeys = Vec::new();
            let max_len = if free_b.is_empty() { 0 } else { room as usize };
            for len in 0..=max_len {
                for word in canonical_words(&free_b, len) {
                    for index in 0..base.dim() {
                        vkeys.push(VKey {
                            word: word.clone(),
                            index,
                        });
                    }
                }
            }
            vkeys.sort();
            basis.extend(vkeys.into_iter().map(|v| IndKey {
                odd: d.odd.clone(),
                even: d.even.clone(),
                v,
            }));
        }
        InducedModule {
            base,
            ell,
            cap,
            free_b,
            basis,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn base(&self) -> &BModuleSpec {
        &self.base
    }

    pub fn ell(&self) -> &Rational {
        &self.ell
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Level `t` of the base spec.
    pub fn t(&self) -> u32 {
        self.base.t()
    }

    /// Generators of `b` acting freely on the base (empty unless the base is
    /// an `m^(k)`-module).
    pub fn free_b(&self) -> &[Generator] {
        &self.free_b
    }

    /// The inducing subalgebra `P`.
    pub fn inducing(&self) -> Subalgebra {
        self.base.over().subalgebra()
    }

    /// Basis keys in ascending principal order, then base order.
    pub fn basis(&self) -> &[IndKey] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity_of(&self, key: &IndKey) -> Parity {
        let odd_letters = key.odd.len() + key.v.word.iter().filter(|g| g.parity().is_odd()).count();
        let p = self.base.parity()[key.v.index];
        if odd_letters % 2 == 1 {
            p.flip()
        } else {
            p
        }
    }

    /// Homogeneous parity of `v`, if any.
    pub fn parity(&self, v: &IndVector) -> Option<Parity> {
        let mut ps = v.terms().map(|(k, _)| self.parity_of(k));
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    /// `L_0`-eigenvalue offset of a basis vector when the base is an
    /// `L_0`-eigenspace: `w(i) + sum (p - 1/2) k_p`, minus the grade of the
    /// free `b`-word.
    pub fn l0_offset(&self, key: &IndKey) -> Rational {
        key.full_word()
            .iter()
            .map(|g| -g.grade().to_rational())
            .sum()
    }

    fn is_free(&self, g: Generator) -> bool {
        g.grade().is_negative() || self.free_b.contains(&g)
    }

    fn rank(&self, g: Generator) -> (bool, Generator) {
        (!g.grade().is_negative(), g)
    }

    /// `g * (word (x) e_a)` as a combination of canonical words.
    fn apply(&self, g: Generator, word: &[Generator], a: usize) -> Arc<SparseVec<Word>> {
        let key = (g, (word.to_vec(), a));
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let out = Arc::new(self.apply_uncached(g, word, a));
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    fn apply_uncached(&self, g: Generator, word: &[Generator], a: usize) -> SparseVec<Word> {
        let mut out = SparseVec::new();
        if g.is_central() {
            sparse_add(&mut out, &(word.to_vec(), a), &self.ell);
            return out;
        }
        let Some((&w1, rest)) = word.split_first() else {
            if self.is_free(g) {
                out.insert((vec![g], a), Rational::one());
            } else if let Some(m) = self.base.stored_matrix(g) {
                for (j, c) in m.column(a).iter().enumerate() {
                    sparse_add(&mut out, &(Vec::new(), j), c);
                }
            }
            return out;
        };
        if self.is_free(g) {
            let prepend = match self.rank(g).cmp(&self.rank(w1)) {
                Ordering::Less => true,
                Ordering::Equal => !g.parity().is_odd(),
                Ordering::Greater => false,
            };
            if prepend {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(g);
                w.extend_from_slice(word);
                out.insert((w, a), Rational::one());
                return out;
            }
            if g == w1 {
                // G_r G_r = L_{2r}
                let square = Generator::l(g.index().twice());
                return (*self.apply(square, rest, a)).clone();
            }
        }
        // g w1 rest = (-1)^{|g||w1|} w1 (g rest) + [g, w1] rest
        let sign = Rational::from_integer(Parity::sign(g.parity(), w1.parity()).into());
        let inner = self.apply(g, rest, a);
        for ((w, b), c) in inner.iter() {
            let coeff = &sign * c;
            for (k, c2) in self.apply(w1, w, *b).iter() {
                sparse_add(&mut out, k, &(&coeff * c2));
            }
        }
        for (h, c) in bracket_terms(g, w1) {
            if h.is_central() {
                sparse_add(&mut out, &(rest.to_vec(), a), &(&c * &self.ell));
            } else {
                for (k, c2) in self.apply(h, rest, a).iter() {
                    sparse_add(&mut out, k, &(&c * c2));
                }
            }
        }
        out
    }

    /// Action of a generator on a basis vector, ignoring the cap.
    fn act_key_unchecked(&self, g: Generator, key: &IndKey) -> SparseVec<IndKey> {
        let word = key.full_word();
        self.apply(g, &word, key.v.index)
            .iter()
            .map(|((w, a), c)| (IndKey::from_word(w, *a), c.clone()))
            .collect()
    }

    /// `g . v`, failing if a result term leaves the cap.
    pub fn act_gen(&self, g: Generator, v: &IndVector) -> Result<IndVector> {
        let mut out = IndVector::zero();
        for (key, c) in v.terms() {
            let image = self.act_key_unchecked(g, key);
            if image.keys().any(|k| k.weight() > self.cap as u64) {
                return Err(Error::TruncationOverflow {
                    generator: g,
                    term: self.format_key(key),
                    cap: self.cap,
                });
            }
            for (k, x) in image {
                out.add_term(k, x * c);
            }
        }
        Ok(out)
    }

    /// `g . v`, or `None` when the result leaves the cap.
    pub fn try_act_gen(&self, g: Generator, v: &IndVector) -> Option<IndVector> {
        self.act_gen(g, v).ok()
    }

    /// `x . v` for an element of `U(N)`; factors act right to left and every
    /// intermediate vector must stay within the cap.
    pub fn act(&self, x: &Element, v: &IndVector) -> Result<IndVector> {
        let mut out = IndVector::zero();
        for (m, c) in x.terms() {
            let mut cur = v.clone();
            for &g in m.word().iter().rev() {
                cur = self.act_gen(g, &cur).map_err(|e| match e {
                    Error::TruncationOverflow { generator, cap, .. } => Error::TruncationOverflow {
                        generator,
                        term: format!("{m} on {}", self.format_vector(v)),
                        cap,
                    },
                    e => e,
                })?;
                if cur.is_zero() {
                    break;
                }
            }
            out = &out + &cur.scale(c);
        }
        Ok(out)
    }

    /// `1 (x) e_index`.
    pub fn base_vector(&self, index: usize) -> IndVector {
        IndVector::basis(IndKey::base(index))
    }

    pub fn format_key(&self, key: &IndKey) -> String {
        let mut s = String::new();
        let lower = key.lower_word();
        if lower.is_empty() {
            s.push('1');
        } else {
            write_word(&mut s, &lower).expect("string write");
        }
        s.push('⊗');
        write_word(&mut s, &key.v.word).expect("string write");
        s.push_str(&self.base.basis_name(key.v.index));
        s
    }

    /// Terms in basis order, coefficients `±1` omitted.
    pub fn format_vector(&self, v: &IndVector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (k, c)) in v.terms().enumerate() {
            let neg = c < &Rational::zero();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !(c == &Rational::one() || c == &-Rational::one()) {
                let _ = write!(s, "{}*", format_abs(c));
            }
            s.push_str(&self.format_key(k));
        }
        s
    }

    /// Parses `coef*word⊗[b-word]name` terms (`#` may replace `⊗`); the
    /// `N_-` word need not be canonical and is applied by the action.
    pub fn parse_vector(&self, s: &str) -> Result<IndVector> {
        let names: Vec<String> = (0..self.base.dim()).map(|i| self.base.basis_name(i)).collect();
        let mut out = IndVector::zero();
        let text = s.replace('#', "⊗");
        for (sign, term) in split_terms(&text)? {
            let (coef, body) = match term.split_once('*') {
                Some((c, b)) => (parse_rational(c)?, b),
                None => (Rational::one(), term),
            };
            let (lower, upper) = body
                .split_once('⊗')
                .ok_or_else(|| ParseError::new(term, "expected word⊗vector"))?;
            let upper = upper.trim();
            let (index, name) = names
                .iter()
                .enumerate()
                .filter(|(_, n)| upper.ends_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .ok_or_else(|| ParseError::new(term, "unknown base vector"))?;
            let b_word = parse_word_or_empty(&upper[..upper.len() - name.len()], term)?;
            let lower = parse_word(lower.trim())?;
            let mut v = self.base_vector(index);
            for &g in b_word.iter().chain(lower.iter()).rev() {
                v = self.act_gen(g, &v)?;
            }
            out = &out + &v.scale(&(coef * Rational::from_integer(sign.into())));
        }
        Ok(out)
    }

    /// Generators that can act nontrivially within the cap: grades in
    /// `[-cap, cap + t + 1]`.
    pub fn relevant_generators(&self) -> Vec<Generator> {
        let lo = -(self.cap as i64);
        let hi = (self.cap + self.t() + 1) as i64;
        let mut out = Vec::new();
        for twice in 2 * lo..=2 * hi {
            if twice % 2 == 0 {
                out.push(Generator::l(twice / 2));
            } else {
                out.push(Generator::g(twice));
            }
        }
        out.sort();
        out
    }
}

fn parse_word_or_empty(s: &str, term: &str) -> std::result::Result<Vec<Generator>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    parse_word(s).map_err(|_| ParseError::new(term, "malformed b-word"))
}

/// The Verma module `M(h, l)` truncated at `cap`.
pub fn verma(h: Rational, ell: Rational, cap: u32) -> InducedModule {
    InducedModule::new(BModuleSpec::highest_weight(h), ell, cap)
}

/// `Ind_l(V)` truncated at `cap`.
pub fn induce(spec: &BModuleSpec, ell: Rational, cap: u32) -> InducedModule {
    InducedModule::new(spec.clone(), ell, cap)
}

/// Basis keys grouped by `L_0` offset, for highest-weight bases.
pub fn keys_by_offset(m: &InducedModule) -> BTreeMap<Rational, Vec<IndKey>> {
    let mut out: BTreeMap<Rational, Vec<IndKey>> = BTreeMap::new();
    for k in m.basis() {
        out.entry(m.l0_offset(k)).or_default().push(k.clone());
    }
    out
}

/// Largest `L_0` offset `o` such that every basis vector of offset `<= o`
/// is realized within the cap (each odd factor has weight at most twice its
/// offset).
pub fn complete_offset(m: &InducedModule) -> Rational {
    q(m.cap() as i64, 2)
}

impl fmt::Display for IndKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lower = self.lower_word();
        if lower.is_empty() {
            f.write_str("1")?;
        } else {
            write_word(f, &lower)?;
        }
        f.write_str("⊗")?;
        write_word(f, &self.v.word)?;
        write!(f, "e{}", self.v.index)
    }
}

/// Keys of a vector, for set-style comparisons in tests and reports.
pub fn support_keys(v: &IndVector) -> BTreeSet<IndKey> {
    v.terms().map(|(k, _)| k.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::whittaker::{whittaker_bmodule, WhittakerData};
    use crate::rational::int;

    fn gen(s: &str) -> Generator {
        s.parse().unwrap()
    }

    #[test]
    fn verma_small_bases() {
        let m = verma(int(0), int(0), 0);
        assert_eq!(m.dim(), 1);
        let m = verma(int(0), int(0), 1);
        let shown: Vec<String> = m.basis().iter().map(|k| m.format_key(k)).collect();
        assert_eq!(shown, vec!["1⊗v", "L(-1)⊗v", "G(-1/2)⊗v"]);
        assert_eq!(verma(int(0), int(0), 2).dim(), 7);
    }

    #[test]
    fn verma_actions() {
        let h = q(2, 3);
        let m = verma(h.clone(), q(1, 2), 3);
        let v = m.base_vector(0);
        assert!(m.act_gen(gen("L(1)"), &v).unwrap().is_zero());
        let gv = m.act_gen(gen("G(-1/2)"), &v).unwrap();
        let l0 = m.act_gen(gen("L(0)"), &gv).unwrap();
        assert_eq!(l0, gv.scale(&(h.clone() + q(1, 2))));
        assert_eq!(m.act_gen(Generator::C, &gv).unwrap(), gv.scale(&q(1, 2)));
        // L_1 L_{-1} v = 2 h v
        let lv = m.act_gen(gen("L(-1)"), &v).unwrap();
        assert_eq!(m.act_gen(gen("L(1)"), &lv).unwrap(), v.scale(&(int(2) * h)));
    }

    #[test]
    fn overflow_is_an_error() {
        let m = verma(int(1), int(0), 1);
        let lv = m.act_gen(gen("L(-1)"), &m.base_vector(0)).unwrap();
        assert!(matches!(
            m.act_gen(gen("L(-1)"), &lv),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn parse_and_format_round_trip() {
        let m = verma(int(1), int(0), 3);
        let v = m.parse_vector("2*G(-1/2)L(-1)⊗v - 1⊗v + L(-1)G(-1/2)#v").unwrap();
        let back = m.parse_vector(&m.format_vector(&v)).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn whittaker_k1_bases_carry_free_words() {
        let psi = WhittakerData::new(1, int(1)).with(3, int(1));
        let m = induce(&whittaker_bmodule(&psi).unwrap(), int(1), 1);
        let shown: Vec<String> = m.basis().iter().map(|k| m.format_key(k)).collect();
        assert_eq!(
            shown,
            vec![
                "1⊗w", "1⊗u", "1⊗G(1/2)w", "1⊗G(1/2)u", "1⊗L(0)w", "1⊗L(0)u", "1⊗L(1)w",
                "1⊗L(1)u", "L(-1)⊗w", "L(-1)⊗u", "G(-1/2)⊗w", "G(-1/2)⊗u"
            ]
        );
        // G_{3/2} w = u, G_{3/2} u = psi(L_3) w
        let w = m.base_vector(0);
        let u = m.act_gen(gen("G(3/2)"), &w).unwrap();
        assert_eq!(u, m.base_vector(1));
        assert_eq!(m.act_gen(gen("G(3/2)"), &u).unwrap(), w);
        // L_2 (L_1 w) = L_1 L_2 w + L_3 w = L_3 w = w
        let l1w = m.act_gen(gen("L(1)"), &w).unwrap();
        assert_eq!(m.act_gen(gen("L(2)"), &l1w).unwrap(), w);
    }
}
