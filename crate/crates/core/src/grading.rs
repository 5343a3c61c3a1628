//! Exponent vectors indexing `U(N_-)` and the orders used to define degree.
//!
//! A basis word `G^k L^i` of `U(N_-)` is indexed by an [`OddExpVec`] `k`
//! (position `p` stands for `G_{-p+1/2}`) and an [`ExpVec`] `i` (position `p`
//! stands for `L_{-p}`). Vectors are stored sparsely by position.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Finitely supported vector of nonnegative integers indexed by positions `1, 2, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct ExpVec {
    entries: BTreeMap<u32, u32>,
}

impl ExpVec {
    pub fn zero() -> Self {
        ExpVec::default()
    }

    /// The unit vector at `position` (1-based).
    pub fn unit(position: u32) -> Self {
        ExpVec::from_entries([(position, 1)])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v = ExpVec::zero();
        for (p, n) in entries {
            v.add(p, n);
        }
        v
    }

    pub fn get(&self, position: u32) -> u32 {
        self.entries.get(&position).copied().unwrap_or(0)
    }

    pub fn add(&mut self, position: u32, n: u32) {
        assert!(position >= 1, "positions start at 1");
        if n > 0 {
            *self.entries.entry(position).or_insert(0) += n;
        }
    }

    /// Decrements `position`; panics if the entry is already zero.
    pub fn remove_one(&mut self, position: u32) {
        let e = self
            .entries
            .get_mut(&position)
            .expect("entry must be nonzero");
        *e -= 1;
        if *e == 0 {
            self.entries.remove(&position);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero `(position, value)` pairs in ascending position order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&p, &n)| (p, n))
    }

    /// `sum_k k * i_k`.
    pub fn weight(&self) -> u64 {
        self.iter().map(|(p, n)| p as u64 * n as u64).sum()
    }

    /// Total number of factors `sum_k i_k`.
    pub fn size(&self) -> u64 {
        self.iter().map(|(_, n)| n as u64).sum()
    }

    /// Smallest position with a nonzero entry.
    pub fn lowest(&self) -> Option<u32> {
        self.entries.keys().next().copied()
    }

    /// Subtracts one at the lowest nonzero position.
    pub fn prime(&self) -> Result<ExpVec> {
        let p = self
            .lowest()
            .ok_or_else(|| Error::Domain("prime of the zero vector".into()))?;
        let mut out = self.clone();
        out.remove_one(p);
        Ok(out)
    }

    /// Reverse-lexicographic comparison: the first position (counting from
    /// 1) where the entries differ decides.
    pub fn rev_lex_cmp(&self, other: &ExpVec) -> Ordering {
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // the other vector is nonzero at a position where this one is zero
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(pa, na)), Some(&(pb, nb))) => match pa.cmp(pb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match na.cmp(nb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}:{n}")?;
        }
        f.write_str("}")
    }
}

/// An [`ExpVec`] whose entries are all 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct OddExpVec(ExpVec);

impl OddExpVec {
    pub fn zero() -> Self {
        OddExpVec::default()
    }

    pub fn unit(position: u32) -> Self {
        OddExpVec(ExpVec::unit(position))
    }

    /// The 0/1 vector supported on `positions`; fails on repeats.
    pub fn from_positions(positions: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v = ExpVec::zero();
        for p in positions {
            if v.get(p) != 0 {
                return Err(Error::Domain(format!("odd exponent at position {p} exceeds 1")));
            }
            v.add(p, 1);
        }
        Ok(OddExpVec(v))
    }

    pub fn try_from_exp(v: ExpVec) -> Result<Self> {
        if v.iter().any(|(_, n)| n > 1) {
            return Err(Error::Domain(format!("{v} has an entry above 1")));
        }
        Ok(OddExpVec(v))
    }

    pub fn as_exp(&self) -> &ExpVec {
        &self.0
    }

    pub fn contains(&self, position: u32) -> bool {
        self.0.get(position) == 1
    }

    pub fn positions(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.0.iter().map(|(p, _)| p)
    }

    pub fn weight(&self) -> u64 {
        self.0.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn lowest(&self) -> Option<u32> {
        self.0.lowest()
    }

    pub fn prime(&self) -> Result<OddExpVec> {
        self.0.prime().map(OddExpVec)
    }

    pub fn len(&self) -> usize {
        self.0.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn rev_lex_cmp(&self, other: &OddExpVec) -> Ordering {
        self.0.rev_lex_cmp(&other.0)
    }
}

impl fmt::Display for OddExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn weight(v: &ExpVec) -> u64 {
    v.weight()
}

pub fn prime(v: &ExpVec) -> Result<ExpVec> {
    v.prime()
}

pub fn rev_lex_less(a: &ExpVec, b: &ExpVec) -> bool {
    a.rev_lex_cmp(b) == Ordering::Less
}

/// An element `(i, k)` of `M x M_1`: the exponents of a basis word `G^k L^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Degree {
    pub even: ExpVec,
    pub odd: OddExpVec,
}

impl Degree {
    pub fn new(even: ExpVec, odd: OddExpVec) -> Self {
        Degree { even, odd }
    }

    pub fn zero() -> Self {
        Degree::default()
    }

    /// `w(i) + w(k)`.
    pub fn weight(&self) -> u64 {
        self.even.weight() + self.odd.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Three-way principal comparison: total weight, then the odd part
    /// reverse-lexicographically, then the even part.
    pub fn principal_cmp(&self, other: &Degree) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.odd.rev_lex_cmp(&other.odd))
            .then_with(|| self.even.rev_lex_cmp(&other.even))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.even, self.odd)
    }
}

pub fn principal_less(a: &Degree, b: &Degree) -> bool {
    a.principal_cmp(b) == Ordering::Less
}

/// All exponent vectors of weight exactly `w`, i.e. partitions of `w`.
pub fn exp_vecs_of_weight(w: u64) -> Vec<ExpVec> {
    fn rec(remaining: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<ExpVec>) {
        if remaining == 0 {
            out.push(ExpVec::from_entries(cur.iter().map(|&p| (p as u32, 1))));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// All 0/1 exponent vectors of weight exactly `w` (partitions into distinct parts).
pub fn odd_exp_vecs_of_weight(w: u64) -> Vec<OddExpVec> {
    fn rec(remaining: u64, max_part: u64, cur: &mut Vec<u32>, out: &mut Vec<OddExpVec>) {
        if remaining == 0 {
            out.push(OddExpVec::from_positions(cur.iter().copied()).expect("distinct parts"));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            cur.push(part as u32);
            rec(remaining - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// All degrees of total weight at most `cap`, in ascending principal order.
pub fn degrees_up_to(cap: u64) -> Vec<Degree> {
    let mut out = Vec::new();
    for total in 0..=cap {
        for wk in 0..=total {
            for k in odd_exp_vecs_of_weight(wk) {
                for i in exp_vecs_of_weight(total - wk) {
                    out.push(Degree::new(i, k.clone()));
                }
            }
        }
    }
    out.sort_by(Degree::principal_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(entries: &[(u32, u32)]) -> ExpVec {
        ExpVec::from_entries(entries.iter().copied())
    }

    #[test]
    fn weights() {
        assert_eq!(ExpVec::unit(3).weight(), 3);
        assert_eq!(ExpVec::zero().weight(), 0);
        assert_eq!(e(&[(1, 1), (2, 2)]).weight(), 5);
    }

    #[test]
    fn primes() {
        assert_eq!(e(&[(1, 1), (2, 1)]).prime().unwrap(), ExpVec::unit(2));
        assert_eq!(e(&[(3, 2)]).prime().unwrap(), ExpVec::unit(3));
        assert_eq!(ExpVec::unit(5).prime().unwrap(), ExpVec::zero());
        assert!(matches!(ExpVec::zero().prime(), Err(Error::Domain(_))));
    }

    #[test]
    fn rev_lex() {
        assert!(rev_lex_less(&ExpVec::unit(2), &ExpVec::unit(1)));
        let v = e(&[(1, 2), (4, 1)]);
        assert!(!rev_lex_less(&v, &v));
        assert!(rev_lex_less(&e(&[(1, 1), (2, 1)]), &e(&[(1, 2)])));
        assert!(rev_lex_less(&ExpVec::zero(), &ExpVec::unit(7)));
    }

    #[test]
    fn principal() {
        let a = Degree::new(ExpVec::unit(1), OddExpVec::zero());
        let b = Degree::new(ExpVec::zero(), OddExpVec::unit(1));
        assert!(principal_less(&a, &b));
        assert!(principal_less(&Degree::zero(), &a));
        assert!(!principal_less(&a, &a));
        assert_eq!(a.principal_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn display_format() {
        assert_eq!(e(&[(1, 2), (3, 1)]).to_string(), "{1:2, 3:1}");
        assert_eq!(ExpVec::zero().to_string(), "{}");
    }

    #[test]
    fn odd_rejects_repeats() {
        assert!(OddExpVec::from_positions([1, 1]).is_err());
        assert!(OddExpVec::try_from_exp(e(&[(2, 2)])).is_err());
    }
}
