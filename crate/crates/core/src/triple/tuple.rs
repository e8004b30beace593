use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Field, KthRoot, Result};

/// Whether `a_i a_j + 1 = 0` counts as a valid (zero) witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessPolicy {
    /// Zero witnesses are rejected; the default for every construction here.
    #[default]
    RejectZero,
    /// Accepts `t_ij = 0`; only the classical two-parameter family needs it.
    AllowZero,
}

/// Distinct nonzero elements with a `power`-th root witness for every pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerTuple<F> {
    pub elements: Vec<F>,
    pub power: u32,
    /// `((i, j), t_ij)` for `i < j`, in lexicographic order.
    pub witnesses: Vec<((usize, usize), F)>,
}

impl<F: Field> PowerTuple<F> {
    pub fn witness(&self, i: usize, j: usize) -> Option<&F> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.witnesses.iter().find(|(ij, _)| *ij == key).map(|(_, t)| t)
    }

    /// Recomputes every `t_ij^k = a_i a_j + 1`.
    pub fn recheck(&self) -> bool {
        self.witnesses.iter().all(|((i, j), t)| {
            t.pow(self.power) == self.elements[*i].clone() * &self.elements[*j] + F::one()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    NotAPower,
    ZeroWitness,
}

/// A pair whose `a_i a_j + 1` is not acceptable.
#[derive(Debug, Clone, PartialEq)]
pub struct PairFailure<F> {
    pub i: usize,
    pub j: usize,
    /// The value `a_i a_j + 1`.
    pub value: F,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<F> {
    Verified(PowerTuple<F>),
    Failed(Vec<PairFailure<F>>),
}

impl<F> Verdict<F> {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified(_))
    }

    pub fn tuple(self) -> Option<PowerTuple<F>> {
        match self {
            Verdict::Verified(t) => Some(t),
            Verdict::Failed(_) => None,
        }
    }
}

pub fn verify_tuple<F: Field + KthRoot>(elements: &[F], k: u32) -> Result<Verdict<F>> {
    verify_tuple_with(elements, k, WitnessPolicy::RejectZero)
}

/// Checks every pair and reports all offenders rather than stopping at the
/// first.
pub fn verify_tuple_with<F: Field + KthRoot>(elements: &[F], k: u32, policy: WitnessPolicy) -> Result<Verdict<F>> {
    if k < 2 {
        return Err(Error::Precondition(format!("power must be at least 2, got {k}")));
    }
    for (i, a) in elements.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::Degenerate(format!("element {i} is zero")));
        }
        if let Some(j) = elements[..i].iter().position(|b| b == a) {
            return Err(Error::Degenerate(format!("elements {j} and {i} are equal ({a})")));
        }
    }
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let value = elements[i].clone() * &elements[j] + F::one();
            if value.is_zero() && policy == WitnessPolicy::RejectZero {
                failures.push(PairFailure { i, j, value, kind: FailureKind::ZeroWitness });
                continue;
            }
            match value.kth_root(k) {
                Some(t) => witnesses.push(((i, j), t)),
                None => failures.push(PairFailure { i, j, value, kind: FailureKind::NotAPower }),
            }
        }
    }
    if failures.is_empty() {
        Ok(Verdict::Verified(PowerTuple { elements: elements.to_vec(), power: k, witnesses }))
    } else {
        Ok(Verdict::Failed(failures))
    }
}
