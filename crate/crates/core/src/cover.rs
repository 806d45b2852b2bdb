//! The tensor space 𝔤″⊗M over a module of intermediate series `M`, its
//! `A𝔤′`-action, the projection `π`, the subspace `J`, and the operators
//! `ω_{m,n}`.
//!
//! A tensor `Σ c · L_s ⊗ v_w` is stored with key `(s, w)`; every `s` lies
//! outside `pℤ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Generator, Standard, StructureConstants};
use crate::error::{Error, Result};
use crate::mois::{mois_act, MoisSpec, WeightModule, WeightVector};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

pub type TensorVector = SparseVec<(i64, i64)>;

/// Generators of `A𝔤′` acting on 𝔤″⊗M: `L_k`, and `t^n` with `n ∈ pℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverGenerator {
    L(i64),
    T(i64),
}

impl fmt::Display for CoverGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverGenerator::L(k) => write!(f, "L_{k}"),
            CoverGenerator::T(n) => write!(f, "t^{n}"),
        }
    }
}

/// Checks that every `s ∉ pℤ` and every `v_w` is a basis vector of `spec`.
pub fn check_tensor(spec: &MoisSpec, t: &TensorVector) -> Result<()> {
    let p = spec.p();
    for &(s, w) in t.keys() {
        if p.divides(s) {
            return Err(Error::Input(format!("L_{s} ⊗ v_{w}: s must lie outside {p}ℤ")));
        }
        if !spec.has_index(w) {
            return Err(Error::Input(format!("L_{s} ⊗ v_{w}: v_{w} is not a basis vector of M")));
        }
    }
    Ok(())
}

/// `g · T`, with
///
/// ```text
/// t^n (L_s ⊗ w) = L_{s+n} ⊗ w
/// L_k (L_s ⊗ w) = [L_k, L_s] ⊗ w + L_s ⊗ L_k w
/// ```
///
/// Central terms of the bracket act as zero on `M` and are dropped.
pub fn tensor_act(spec: &MoisSpec, g: CoverGenerator, t: &TensorVector) -> Result<TensorVector> {
    check_tensor(spec, t)?;
    let p = spec.p();
    match g {
        CoverGenerator::T(n) => {
            if !p.divides(n) {
                return Err(Error::Input(format!("t^{n} requires n ∈ {p}ℤ")));
            }
            Ok(t.iter().map(|(&(s, w), c)| ((s + n, w), c.clone())).collect())
        }
        CoverGenerator::L(k) => t.try_map_linear(|&(s, w)| {
            let mut out = TensorVector::zero();
            let comm = Standard.bracket_generators(p, Generator::L(k), Generator::L(s));
            for (&idx, c) in comm.l_part() {
                out.add_term((idx, w), c.clone());
            }
            if let Some((target, c)) = spec.act_basis(Generator::L(k), w)? {
                out.add_term((s, target), c);
            }
            Ok(out)
        }),
    }
}

/// `π(L_s ⊗ w) = L_s w`.
pub fn pi_map(spec: &MoisSpec, t: &TensorVector) -> Result<WeightVector> {
    check_tensor(spec, t)?;
    let mut out = WeightVector::zero();
    for (&(s, w), c) in t {
        out.add_scaled(c, &mois_act(spec, Generator::L(s), &WeightVector::basis(w))?);
    }
    Ok(out)
}

fn shifted_image(spec: &MoisSpec, t: &TensorVector, n: i64) -> Result<WeightVector> {
    let shifted = tensor_act(spec, CoverGenerator::T(n), t)?;
    pi_map(spec, &shifted)
}

/// `T ∈ J` iff `Σ_s L_{s+n} w_s = 0` for every `n ∈ pℤ`.
///
/// The coefficient of `L_{s+n}` on `v_w` depends only on residues, so the
/// condition does not depend on `n`; `n = 0` decides it and `n = ±p` are
/// checked as well.
pub fn j_membership(spec: &MoisSpec, t: &TensorVector) -> Result<bool> {
    let p = spec.p().as_i64();
    for n in [0, p, -p] {
        if !shifted_image(spec, t, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ω_{m,n} = Σ_{i=0}^{l} (-1)^i C(l, i) L_{m-in} L_{in}`, with `L_{in}`
/// applied first.
pub fn omega_apply(spec: &MoisSpec, m: i64, n: i64, l: u32, v: &WeightVector) -> Result<WeightVector> {
    let p = spec.p();
    if !p.divides(m) || !p.divides(n) {
        return Err(Error::Input(format!("ω_{{{m},{n}}} needs m, n ∈ {p}ℤ")));
    }
    spec.check_vector(v)?;
    let mut out = WeightVector::zero();
    let mut binom = Scalar::one();
    for i in 0..=i64::from(l) {
        let inner = spec.act(Generator::L(i * n), v)?;
        let outer = spec.act(Generator::L(m - i * n), &inner)?;
        let sign = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        out.add_scaled(&(sign * &binom), &outer);
        binom = binom * Scalar::from_int(i64::from(l) - i) / Scalar::from_int(i + 1);
    }
    Ok(out)
}

/// Smallest `l ≤ l_max` with `ω_{m,n}` zero on every basis vector `|w| ≤ window`.
pub fn omega_min_l(spec: &MoisSpec, m: i64, n: i64, window: i64, l_max: u32) -> Result<Option<u32>> {
    let basis = spec.window_basis(window);
    for l in 0..=l_max {
        let mut kills = true;
        for &w in &basis {
            if !omega_apply(spec, m, n, l, &WeightVector::basis(w))?.is_zero() {
                kills = false;
                break;
            }
        }
        if kills {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    s: i64,
    w: i64,
    coeff: Scalar,
}

/// A tensor together with the module it lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorInput {
    pub spec: MoisSpec,
    pub terms: TensorVector,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorInputJson {
    spec: MoisSpec,
    terms: Vec<TermJson>,
}

impl Serialize for TensorInput {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(&(s, w), c)| TermJson { s, w, coeff: c.clone() }).collect();
        TensorInputJson { spec: self.spec.clone(), terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorInput {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TensorInputJson::deserialize(deserializer)?;
        let terms = raw.terms.into_iter().map(|t| ((t.s, t.w), t.coeff)).collect();
        Ok(TensorInput { spec: raw.spec, terms })
    }
}
