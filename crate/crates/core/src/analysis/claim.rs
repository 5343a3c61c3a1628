//! The degree-lowering reduction on induced modules.

use crate::algebra::{Generator, HalfInt};
use crate::error::{Error, Result};
use crate::grading::{Degree, OddExpVec};
use crate::module::{IndVector, InducedModule};

use super::conditions::{slice_conditions, BaseSlice};
use super::report::{ReductionStep, ReductionTrace};

/// The generator applied to a vector of degree `d` at level `t`, and the
/// degree it is predicted to produce.
pub fn claim_step(d: &Degree, t: u32) -> Result<(Generator, Degree)> {
    let t = t as i64;
    if let Some(k_hat) = d.odd.lowest() {
        let g = Generator::g(2 * (k_hat as i64 + t) - 1);
        return Ok((g, Degree::new(d.even.clone(), d.odd.prime()?)));
    }
    let i_hat = d
        .even
        .lowest()
        .ok_or_else(|| Error::Domain("degree (0, 0) has no reduction step".into()))?;
    let g = Generator::l(i_hat as i64 + t);
    Ok((g, Degree::new(d.even.prime()?, OddExpVec::zero())))
}

/// Reduces `v` to `1 (x) V` at the level found on the base slice.
pub fn claim_reduce(v: &IndVector, m: &InducedModule) -> Result<ReductionTrace> {
    let cond = slice_conditions(m, &BaseSlice::of(m));
    if cond.t == 0 || !cond.injective {
        return Err(Error::Precondition(format!(
            "conditions (a), (b) need t >= 1 with L_t injective; found t = {}",
            cond.t
        )));
    }
    claim_reduce_at(v, m, cond.t)
}

/// How each reduction step is checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionMode {
    /// The degree must equal the predicted `(i, k')` or `(i', 0)`.
    Exact,
    /// The result must be nonzero with strictly smaller degree. When the
    /// predicted generator fails, other raising generators are tried in
    /// grade order.
    Descending,
}

/// Reduces `v` using level `t`, checking every predicted degree.
pub fn claim_reduce_at(v: &IndVector, m: &InducedModule, t: u32) -> Result<ReductionTrace> {
    reduce_with(v, m, t, ReductionMode::Exact)
}

/// Reduces `v` with the same generators, only requiring strict descent.
pub fn descend_at(v: &IndVector, m: &InducedModule, t: u32) -> Result<ReductionTrace> {
    reduce_with(v, m, t, ReductionMode::Descending)
}

pub fn reduce_with(
    v: &IndVector,
    m: &InducedModule,
    t: u32,
    mode: ReductionMode,
) -> Result<ReductionTrace> {
    if v.is_zero() {
        return Err(Error::Precondition("cannot reduce the zero vector".into()));
    }
    let mut cur = v.clone();
    let mut steps = Vec::new();
    let mut last = cur.deg().expect("nonzero");
    while !last.is_zero() {
        let (g, predicted) = claim_step(&last, t)?;
        let next = m.act_gen(g, &cur)?;
        let actual = next.deg();
        let (g, next, actual) = match mode {
            ReductionMode::Exact if actual.as_ref() == Some(&predicted) => (g, next, actual),
            ReductionMode::Descending if descends(&actual, &last) => (g, next, actual),
            ReductionMode::Descending => {
                let fallback = m
                    .relevant_generators()
                    .into_iter()
                    .filter(|h| *h != g && h.grade() > HalfInt::ZERO)
                    .find_map(|h| {
                        let alt = m.try_act_gen(h, &cur)?;
                        let d = alt.deg();
                        descends(&d, &last).then_some((h, alt, d))
                    });
                match fallback {
                    Some(found) => found,
                    None => return Err(violation(steps.len() + 1, g, &last, &predicted, actual, mode)),
                }
            }
            _ => return Err(violation(steps.len() + 1, g, &last, &predicted, actual, mode)),
        };
        let d = actual.expect("checked");
        steps.push(ReductionStep {
            generator: g,
            degree: d.clone(),
        });
        cur = next;
        last = d;
    }
    Ok(ReductionTrace {
        steps,
        terminal: cur,
    })
}

fn descends(actual: &Option<Degree>, last: &Degree) -> bool {
    actual.as_ref().is_some_and(|d| d.principal_cmp(last).is_lt())
}

fn violation(
    step: usize,
    generator: Generator,
    last: &Degree,
    predicted: &Degree,
    actual: Option<Degree>,
    mode: ReductionMode,
) -> Error {
    let predicted = match mode {
        ReductionMode::Exact => predicted.to_string(),
        ReductionMode::Descending => format!("below {last}"),
    };
    Error::ClaimViolation {
        step,
        generator,
        predicted,
        actual: actual.map_or_else(|| "zero vector".to_string(), |d| d.to_string()),
    }
}
