//! Simplicity probes on truncated induced modules.

use num_traits::Zero;

use crate::algebra::Generator;
use crate::error::Error;
use crate::linalg::{EchelonSpan, SparseVec};
use crate::module::{IndKey, IndVector, InducedModule, Over};
use crate::rational::q;

use super::claim::{claim_reduce_at, descend_at};
use super::conditions::{slice_conditions, BaseSlice};
use super::finite::{finite_simple_check, DEFAULT_BUDGET};
use super::report::{SimplicityReport, Verdict, Witness, WitnessVector};
use super::singular::singular_vectors_in;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeOptions {
    pub seed: u64,
    /// Random elements for the finite test, and spin candidates.
    pub budget: usize,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Closure of a set of vectors under generator actions that stay in the cap.
#[derive(Clone, Debug)]
pub struct Spin {
    pub span: EchelonSpan<IndKey>,
    /// Vectors whose images were all taken; they span `span`.
    pub generators: Vec<IndVector>,
}

impl Spin {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn contains(&self, v: &IndVector) -> bool {
        self.span.contains(v.as_sparse())
    }
}

/// Spins `start` under `gens`, stopping early once `stop` holds for a newly
/// added echelon row.
pub fn spin_within_cap(
    m: &InducedModule,
    start: &[IndVector],
    gens: &[Generator],
    stop: impl Fn(&SparseVec<IndKey>) -> bool,
) -> Spin {
    let mut span = EchelonSpan::new();
    let mut queue = Vec::new();
    let mut generators = Vec::new();
    for v in start {
        if let Some(row) = span.insert(v.as_sparse()) {
            if stop(&row) {
                return Spin {
                    span,
                    generators: vec![v.clone()],
                };
            }
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for &g in gens {
            let Some(image) = m.try_act_gen(g, &v) else { continue };
            if let Some(row) = span.insert(image.as_sparse()) {
                if stop(&row) {
                    generators.push(v);
                    return Spin { span, generators };
                }
                queue.push(image);
            }
        }
        generators.push(v);
        if span.dim() == m.dim() {
            generators.extend(queue);
            break;
        }
    }
    Spin { span, generators }
}

/// Generators used for spinning: all relevant ones except `c`.
pub fn spin_generators(m: &InducedModule) -> Vec<Generator> {
    m.relevant_generators()
}

/// Whether the span of `vectors` is closed under every generator action that
/// stays within the cap.
pub fn verify_invariant(m: &InducedModule, vectors: &[IndVector]) -> bool {
    let mut span = EchelonSpan::new();
    for v in vectors {
        span.insert(v.as_sparse());
    }
    let gens = spin_generators(m);
    vectors.iter().all(|v| {
        gens.iter().all(|&g| match m.try_act_gen(g, v) {
            Some(image) => span.contains(image.as_sparse()),
            None => true,
        })
    })
}

fn misses_base(m: &InducedModule, spin: &Spin) -> bool {
    m.basis()
        .iter()
        .filter(|k| k.in_base())
        .any(|k| !spin.contains(&IndVector::basis(k.clone())))
}

fn induced_witness(m: &InducedModule, generator: IndVector) -> Witness {
    let spin = spin_within_cap(m, &[generator.clone()], &spin_generators(m), |_| false);
    Witness::induced(m, generator, spin.generators)
}

/// Probes simplicity of `m` within its cap.
///
/// * If the realized base satisfies conditions (a), (b) at some `t >= 1`
///   with odd vanishing above `t`, every basis vector is reduced to
///   `1 (x) V` and the base is tested for simplicity.
/// * If the base is a one-dimensional highest-weight module, singular
///   vectors are searched on every level realized completely.
/// * Otherwise basis vectors are spun within the cap, lowest total weight
///   first; a closure missing part of `1 (x) V` is reported as a
///   reducibility witness.
pub fn simplicity_probe(m: &InducedModule, opts: &ProbeOptions) -> SimplicityReport {
    let slice = BaseSlice::of(m);
    let cond = slice_conditions(m, &slice);
    if cond.holds() {
        return claim_path(m, &slice, cond.t, opts);
    }
    let base = m.base();
    if cond.t == 0 && base.dim() == 1 && base.over() == Over::Borel {
        return highest_weight_path(m);
    }
    let why = if let Some(g) = cond.gv_violation {
        format!("{g} acts nonzero above level {}", cond.t)
    } else {
        format!("L({}) is not injective on the base", cond.t)
    };
    spin_path(m, opts).note(why)
}

fn claim_path(m: &InducedModule, slice: &BaseSlice, t: u32, opts: &ProbeOptions) -> SimplicityReport {
    let mut terminals = Vec::new();
    let mut off_prediction = 0usize;
    for key in m.basis() {
        let v = IndVector::basis(key.clone());
        let reduced = match claim_reduce_at(&v, m, t) {
            Err(Error::ClaimViolation { .. }) => {
                off_prediction += 1;
                descend_at(&v, m, t)
            }
            other => other,
        };
        match reduced {
            Ok(tr) => terminals.push(tr.terminal),
            Err(e @ Error::ClaimViolation { .. }) | Err(e @ Error::TruncationOverflow { .. }) => {
                return SimplicityReport::new(Verdict::Inconclusive, "claim-reduction")
                    .with_level(t)
                    .note(format!("{} on {}", e, m.format_key(key)));
            }
            Err(e) => {
                return SimplicityReport::new(Verdict::Inconclusive, "claim-reduction")
                    .with_level(t)
                    .note(e.to_string())
            }
        }
    }
    let finite = finite_simple_check(m.base(), opts.budget, opts.seed);
    let report = claim_report(m, slice, t, opts, finite, terminals);
    if off_prediction > 0 {
        report.note(format!(
            "{off_prediction} basis vectors left the predicted degree but still descended"
        ))
    } else {
        report
    }
}

fn claim_report(
    m: &InducedModule,
    slice: &BaseSlice,
    t: u32,
    opts: &ProbeOptions,
    finite: SimplicityReport,
    terminals: Vec<IndVector>,
) -> SimplicityReport {
    match finite.verdict {
        Verdict::Reducible => {
            let w = finite.witness.expect("reducible has witness");
            let WitnessVector::Finite(x) = &w.generator else {
                unreachable!("finite witness")
            };
            let generator = IndVector::from_terms(
                x.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (IndKey::base(i), c.clone())),
            );
            SimplicityReport::new(Verdict::Reducible, "claim-reduction")
                .with_level(t)
                .with_seed(opts.seed)
                .with_witness(induced_witness(m, generator))
                .note(format!("base has invariant subspace generated by {}", w.text))
        }
        Verdict::Inconclusive => SimplicityReport::new(Verdict::Inconclusive, "claim-reduction")
            .with_level(t)
            .with_seed(opts.seed)
            .note("finite base test exhausted its budget"),
        _ => {
            if !m.free_b().is_empty() {
                let p_gens: Vec<Generator> = m.base().defined_generators();
                let start = slice.keys.iter().map(|k| IndVector::basis(k.clone()));
                for x in start.chain(terminals.into_iter()) {
                    let s = spin_within_cap(m, &[x.clone()], &p_gens, |row| {
                        row.keys().next_back().is_some_and(|k| k.v.word.is_empty())
                    });
                    let reached = s
                        .span
                        .basis()
                        .any(|row| row.keys().next_back().is_some_and(|k| k.v.word.is_empty()));
                    if !reached {
                        return SimplicityReport::new(Verdict::Inconclusive, "claim-reduction")
                            .with_level(t)
                            .with_seed(opts.seed)
                            .note(format!("{} does not reach the finite base", m.format_vector(&x)));
                    }
                }
            }
            SimplicityReport::new(Verdict::SimpleWithinCap, "claim-reduction")
                .with_level(t)
                .with_seed(opts.seed)
        }
    }
}

fn highest_weight_path(m: &InducedModule) -> SimplicityReport {
    let top = q(m.cap() as i64, 2);
    let mut level = q(1, 2);
    while level <= top {
        match singular_vectors_in(m, &level) {
            Ok(found) if !found.is_empty() => {
                return SimplicityReport::new(Verdict::Reducible, "singular-vectors")
                    .with_level(0)
                    .with_witness(induced_witness(m, found[0].clone()))
                    .note(format!("singular vector at L0-offset {}", crate::rational::format_rational(&level)));
            }
            Ok(_) => {}
            Err(e) => {
                return SimplicityReport::new(Verdict::Inconclusive, "singular-vectors").note(e.to_string())
            }
        }
        level += q(1, 2);
    }
    SimplicityReport::new(Verdict::SimpleWithinCap, "singular-vectors")
        .with_level(0)
        .note(format!(
            "no singular vectors up to L0-offset {}",
            crate::rational::format_rational(&top)
        ))
}

fn spin_path(m: &InducedModule, opts: &ProbeOptions) -> SimplicityReport {
    let gens = spin_generators(m);
    // low total weight first: their closures are least affected by the cap
    let mut candidates: Vec<(u64, &IndKey)> = m.basis().iter().map(|k| (k.weight(), k)).collect();
    candidates.sort();
    for (_, key) in candidates.into_iter().take(opts.budget) {
        let v = IndVector::basis(key.clone());
        let spin = spin_within_cap(m, &[v.clone()], &gens, |_| false);
        if misses_base(m, &spin) {
            return SimplicityReport::new(Verdict::Reducible, "spin-within-cap")
                .with_seed(opts.seed)
                .with_witness(Witness::induced(m, v, spin.generators));
        }
    }
    SimplicityReport::new(Verdict::Inconclusive, "spin-within-cap")
        .with_seed(opts.seed)
        .note("every spun vector reaches all of the base within the cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{induce, verma, whittaker_bmodule, WhittakerData};
    use crate::rational::int;

    fn whittaker(k: u32, vals: &[(i64, i64)], cap: u32) -> InducedModule {
        let mut psi = WhittakerData::new(k, int(1));
        for &(j, v) in vals {
            psi.set(j, int(v));
        }
        induce(&whittaker_bmodule(&psi).unwrap(), int(1), cap)
    }

    #[test]
    fn verma_h0_has_g_witness() {
        let m = verma(int(0), int(1), 3);
        let r = simplicity_probe(&m, &ProbeOptions::default());
        assert_eq!(r.verdict, Verdict::Reducible);
        assert_eq!(r.witness.as_ref().unwrap().text, "G(-1/2)⊗v");
        let span: Vec<IndVector> = r.witness.unwrap().induced_span().into_iter().cloned().collect();
        assert!(verify_invariant(&m, &span));
    }

    #[test]
    fn generic_verma_is_simple_within_cap() {
        let m = verma(q(1, 3), int(1), 3);
        assert_eq!(simplicity_probe(&m, &ProbeOptions::default()).verdict, Verdict::SimpleWithinCap);
    }

    #[test]
    fn nondegenerate_whittaker_is_simple_within_cap() {
        let m = whittaker(0, &[(1, 1), (2, 1)], 3);
        let r = simplicity_probe(&m, &ProbeOptions::default());
        assert_eq!(r.verdict, Verdict::SimpleWithinCap, "{r}");
    }

    #[test]
    fn degenerate_k1_is_reducible_on_u() {
        let m = whittaker(1, &[(2, 7)], 2);
        let r = simplicity_probe(&m, &ProbeOptions::default());
        assert_eq!(r.verdict, Verdict::Reducible, "{r}");
        let w = r.witness.unwrap();
        let span: Vec<IndVector> = w.induced_span().into_iter().cloned().collect();
        assert!(verify_invariant(&m, &span));
        let s = spin_within_cap(&m, &span, &[], |_| false);
        assert!(s.contains(&m.base_vector(1)));
        assert!(!s.contains(&m.base_vector(0)));
    }

    #[test]
    fn zero_psi_k0_is_reducible() {
        let m = whittaker(0, &[], 2);
        let r = simplicity_probe(&m, &ProbeOptions::default());
        assert_eq!(r.verdict, Verdict::Reducible, "{r}");
        assert_eq!(r.witness.unwrap().text, "1⊗u");
    }
}
