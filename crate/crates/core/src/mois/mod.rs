//! Modules of intermediate series `V(α, β, F)` and the 𝔤(0)-modules they
//! are assembled from.
//!
//! A module here has a basis `v_w` indexed by integers `w` (weight `α + w`),
//! and every generator sends a basis vector to a multiple of one basis
//! vector. [`WeightModule`] captures that shape, so the window checks in
//! this file serve both [`MoisSpec`] and [`VirModule`].

mod fmatrix;
mod iso;
mod linkage;
mod reducibility;
mod spec;
mod vir_module;

pub use fmatrix::{
    complete_row_from_first, validate_f, Condition, ConditionReport, FMatrix, ValidationReport, Witness,
};
pub use iso::{iso_test, IsoWitness};
pub use linkage::{linkage_graph, LinkEdge, LinkageGraph};
pub use reducibility::{classify_reducibility, Reduction, Verdict};
pub use spec::{mois_act, MoisSpec};
pub use vir_module::{gz_component_act, VirKind, VirModule};

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use serde::Serialize;

use crate::algebra::{bracket, AlgebraElement, GapParam, Generator};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

/// Coordinates in the basis `v_w`; the key is the weight index `w`.
pub type WeightVector = SparseVec<i64>;

pub trait WeightModule {
    fn gap(&self) -> GapParam;

    /// Whether `v_w` is a basis vector of the module.
    fn has_index(&self, w: i64) -> bool;

    /// Generators that act on the module, restricted to `|index| ≤ n`.
    fn window_generators(&self, n: i64) -> Vec<Generator>;

    /// `g · v_w` as `(target index, coefficient)`, or `None` when it is zero.
    fn act_basis(&self, g: Generator, w: i64) -> Result<Option<(i64, Scalar)>>;

    fn window_basis(&self, n: i64) -> Vec<i64> {
        (-n..=n).filter(|&w| self.has_index(w)).collect()
    }

    fn act(&self, g: Generator, v: &WeightVector) -> Result<WeightVector> {
        v.try_map_linear(|&w| {
            Ok(match self.act_basis(g, w)? {
                Some((t, c)) => WeightVector::term(t, c),
                None => WeightVector::zero(),
            })
        })
    }

    fn act_element(&self, x: &AlgebraElement, v: &WeightVector) -> Result<WeightVector> {
        x.p().ensure_same(self.gap())?;
        let mut out = WeightVector::zero();
        for (g, c) in x.terms() {
            out.add_scaled(&c, &self.act(g, v)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomViolation {
    pub x: Generator,
    pub y: Generator,
    pub w: i64,
    pub bracket_side: Vec<(i64, Scalar)>,
    pub commutator_side: Vec<(i64, Scalar)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleAxiomReport {
    pub window: i64,
    pub checks: usize,
    pub violations: Vec<AxiomViolation>,
}

impl ModuleAxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pairs(v: &WeightVector) -> Vec<(i64, Scalar)> {
    v.iter().map(|(k, c)| (*k, c.clone())).collect()
}

/// `g · v_w` in machine-word rationals: `None` when zero, `Some(None)` when
/// the coefficient does not fit.
type SmallImage = Option<Option<(i64, Ratio<i128>)>>;

/// `g · v_w` for every window generator and every basis index the checks can
/// reach, so that each is evaluated once.
struct ActionTable {
    table: HashMap<(Generator, i64), SmallImage>,
}

impl ActionTable {
    fn new<M: WeightModule + ?Sized>(module: &M, gens: &[Generator], reach: i64) -> Result<Self> {
        let mut table = HashMap::new();
        for w in module.window_basis(reach) {
            for &g in gens {
                let image = module.act_basis(g, w)?.map(|(t, c)| c.to_small().map(|c| (t, c)));
                table.insert((g, w), image);
            }
        }
        Ok(ActionTable { table })
    }

    /// Whether `[x,y] v_w = x(y v_w) - y(x v_w)` is confirmed by word-size
    /// arithmetic. `false` means undecided: a lookup missed, a value did not
    /// fit, an operation overflowed, or the two sides differ.
    fn confirms(&self, xy: &[(Generator, Ratio<i128>)], x: Generator, y: Generator, w: i64) -> bool {
        let get = |g: Generator, w: i64| -> Option<Option<(i64, Ratio<i128>)>> {
            match self.table.get(&(g, w))? {
                None => Some(None),
                Some(None) => None,
                Some(Some(image)) => Some(Some(*image)),
            }
        };
        let mut target = None;
        let mut total = Ratio::<i128>::zero();
        let mut push = |t: i64, c: Ratio<i128>| -> Option<()> {
            if *target.get_or_insert(t) != t {
                return None;
            }
            total = total.checked_add(&c)?;
            Some(())
        };
        let mut run = || -> Option<()> {
            for (g, c) in xy {
                if let Some((t, k)) = get(*g, w)? {
                    push(t, c.checked_mul(&k)?)?;
                }
            }
            for (first, second, negate) in [(y, x, true), (x, y, false)] {
                let Some((t1, k1)) = get(first, w)? else {
                    continue;
                };
                if let Some((t2, k2)) = get(second, t1)? {
                    let c = k1.checked_mul(&k2)?;
                    push(t2, if negate { -c } else { c })?;
                }
            }
            Some(())
        };
        run().is_some() && total.is_zero()
    }
}

/// `[x,y] v_w = x(y v_w) - y(x v_w)` for every pair of window generators and
/// every basis vector with `|w| ≤ n`.
pub fn check_module_axioms<M: WeightModule + ?Sized>(module: &M, n: i64) -> Result<ModuleAxiomReport> {
    let p = module.gap();
    let gens = module.window_generators(n);
    let basis = module.window_basis(n);
    let table = ActionTable::new(module, &module.window_generators(2 * n), 2 * n)?;
    let mut violations = Vec::new();
    let mut checks = 0;
    for &x in &gens {
        for &y in &gens {
            let xy = bracket(&AlgebraElement::generator(p, x), &AlgebraElement::generator(p, y))?;
            let small: Option<Vec<(Generator, Ratio<i128>)>> =
                xy.terms().map(|(g, c)| c.to_small().map(|c| (g, c))).collect();
            for &w in &basis {
                checks += 1;
                if small.as_ref().is_some_and(|xy| table.confirms(xy, x, y, w)) {
                    continue;
                }
                let v = WeightVector::basis(w);
                let lhs = module.act_element(&xy, &v)?;
                let rhs = module.act(x, &module.act(y, &v)?)?.sub(&module.act(y, &module.act(x, &v)?)?);
                if lhs != rhs {
                    violations.push(AxiomViolation {
                        x,
                        y,
                        w,
                        bracket_side: pairs(&lhs),
                        commutator_side: pairs(&rhs),
                    });
                }
            }
        }
    }
    Ok(ModuleAxiomReport { window: n, checks, violations })
}

/// A generator that carries a subspace basis vector outside the subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Escape {
    pub generator: Generator,
    pub from: i64,
    pub to: i64,
}

/// First generator/basis pair in the window whose image leaves the span of
/// `{v_w : in_subspace(w)}`.
pub fn find_escape<M, P>(module: &M, in_subspace: P, n: i64) -> Result<Option<Escape>>
where
    M: WeightModule + ?Sized,
    P: Fn(i64) -> bool,
{
    let gens = module.window_generators(n);
    for w in module.window_basis(n).into_iter().filter(|&w| in_subspace(w)) {
        for &g in &gens {
            if let Some((t, _)) = module.act_basis(g, w)? {
                if !in_subspace(t) {
                    return Ok(Some(Escape { generator: g, from: w, to: t }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether the span of `{v_w : in_subspace(w)}` is closed under every window
/// generator, tested on its basis vectors with `|w| ≤ n`.
pub fn submodule_window_check<M, P>(module: &M, in_subspace: P, n: i64) -> Result<bool>
where
    M: WeightModule + ?Sized,
    P: Fn(i64) -> bool,
{
    Ok(find_escape(module, in_subspace, n)?.is_none())
}
