use std::collections::BTreeSet;

use serde::Serialize;

use super::linkage::linkage_graph;
use super::spec::MoisSpec;
use crate::error::Result;
use crate::scalar::Scalar;

/// A witness of reducibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reduction {
    /// `β = 1`, `α = -pl`: the span of `v_w`, `w ≠ excluded`, is a submodule
    /// and is the unique irreducible subquotient.
    DropLine { excluded: i64 },
    /// `β = 0`, `α = -pl`: `ℂ v_line` is a submodule; the irreducible
    /// subquotient is the quotient by it.
    QuotientByLine { line: i64 },
    /// The listed components are closed under every generator.
    ComponentUnion { components: BTreeSet<usize> },
}

impl Reduction {
    /// Membership predicate of the invariant subspace on weight indices.
    /// `w` must already be a basis index of the module.
    pub fn contains(&self, p: crate::algebra::GapParam, w: i64) -> bool {
        match self {
            Reduction::DropLine { excluded } => w != *excluded,
            Reduction::QuotientByLine { line } => w == *line,
            Reduction::ComponentUnion { components } => components.contains(&p.residue(w)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    Reducible { reduction: Reduction },
}

impl Verdict {
    pub fn is_reducible(&self) -> bool {
        matches!(self, Verdict::Reducible { .. })
    }
}

/// Decides reducibility of `V(α, β, F)`.
///
/// With one component (`F = 0`) the module is `V_0(α, β)`, reducible exactly
/// when `α ∈ pℤ` and `β ∈ {0, 1}`. With several components, a linkage graph
/// that is not strongly connected has a closed proper union of components;
/// otherwise the module is irreducible.
pub fn classify_reducibility(spec: &MoisSpec) -> Result<Verdict> {
    spec.ensure_valid()?;
    let p = spec.p();
    if spec.f.is_zero() {
        let Some(alpha) = spec.alpha.to_i64() else {
            return Ok(Verdict::Irreducible);
        };
        if !p.divides(alpha) {
            return Ok(Verdict::Irreducible);
        }
        // the weight index w with α + w = 0
        let w = -alpha;
        let reduction = if spec.beta == Scalar::one() {
            Reduction::DropLine { excluded: w }
        } else if spec.beta.is_zero() {
            Reduction::QuotientByLine { line: w }
        } else {
            return Ok(Verdict::Irreducible);
        };
        return Ok(Verdict::Reducible { reduction });
    }
    let graph = linkage_graph(&spec.f);
    match graph.closed_proper_subset() {
        Some(components) => Ok(Verdict::Reducible { reduction: Reduction::ComponentUnion { components } }),
        None => Ok(Verdict::Irreducible),
    }
}
