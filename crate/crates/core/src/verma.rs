//! Verma modules `M(λ) = U(𝔤_-) v_λ` over the gap-p Virasoro algebra.
//!
//! Vectors are expanded in the PBW basis `L_{-m_1} ⋯ L_{-m_r} v_λ` with
//! `m_1 ≥ … ≥ m_r ≥ 1`. Generators act by straightening: a generator is
//! commuted rightwards past each factor using `xy = yx + [x, y]` until it
//! either reaches the vacuum or can be placed in canonical position.

use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraElement, GapParam, Generator, Standard, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

/// `λ`: the values of `L_0` and of the central elements on `v_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeight {
    p: GapParam,
    h: Scalar,
    c: Vec<Scalar>,
}

impl HighestWeight {
    /// `c[i] = λ(C_i)`. Since `C_i = C_{p-i}`, the values must agree.
    pub fn new(p: GapParam, h: Scalar, c: Vec<Scalar>) -> Result<Self> {
        let n = p.as_usize();
        if c.len() != n {
            return Err(Error::Input(format!("λ needs {n} central values, got {}", c.len())));
        }
        if let Some(i) = (1..n).find(|&i| c[i] != c[n - i]) {
            return Err(Error::Input(format!(
                "λ(C_{i}) = {} differs from λ(C_{}) = {}, but C_{i} = C_{} in the algebra",
                c[i],
                n - i,
                c[n - i],
                n - i
            )));
        }
        Ok(HighestWeight { p, h, c })
    }

    pub fn zero(p: GapParam) -> Self {
        HighestWeight { p, h: Scalar::zero(), c: vec![Scalar::zero(); p.as_usize()] }
    }

    pub fn p(&self) -> GapParam {
        self.p
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    pub fn central(&self, i: usize) -> &Scalar {
        &self.c[i % self.p.as_usize()]
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.c.iter().all(Scalar::is_zero)
    }

    /// `λ` on the central part of an element (its `L` part is ignored).
    fn eval_central(&self, x: &AlgebraElement) -> Scalar {
        x.c_part().iter().zip(&self.c).map(|(a, b)| a * b).sum()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HighestWeightJson {
    p: GapParam,
    h: Scalar,
    #[serde(rename = "C")]
    c: Vec<Scalar>,
}

impl Serialize for HighestWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HighestWeightJson { p: self.p, h: self.h.clone(), c: self.c.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = HighestWeightJson::deserialize(deserializer)?;
        HighestWeight::new(raw.p, raw.h, raw.c).map_err(D::Error::custom)
    }
}

/// `L_{-m_1} ⋯ L_{-m_r}` with `m_1 ≥ … ≥ m_r ≥ 1`; empty is the vacuum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial(Vec<i64>);

impl PbwMonomial {
    pub fn vacuum() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&m| m < 1) {
            return Err(Error::Input(format!("PBW parts must be positive: {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PbwMonomial(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn depth(&self) -> i64 {
        self.0.iter().sum()
    }

    fn prepend(&self, m: i64) -> Self {
        debug_assert!(self.0.first().is_none_or(|&first| m >= first));
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.0);
        PbwMonomial(parts)
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("v");
        }
        for m in &self.0 {
            write!(f, "L_{{-{m}}}")?;
        }
        f.write_str("v")
    }
}

impl Serialize for PbwMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

pub type VermaVector = SparseVec<PbwMonomial>;

/// Serializes a Verma vector as `[{"monomial": [parts], "coeff": "a/b"}, ...]`.
pub struct VermaVectorJson<'a>(pub &'a VermaVector);

impl Serialize for VermaVectorJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Record<'a>(&'a PbwMonomial, &'a Scalar);
        impl Serialize for Record<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("Record", 2)?;
                st.serialize_field("monomial", self.0)?;
                st.serialize_field("coeff", self.1)?;
                st.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (m, c) in self.0.iter().rev() {
            seq.serialize_element(&Record(m, c))?;
        }
        seq.end()
    }
}

/// All partitions of `n` as PBW monomials, in decreasing lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for `n = 4`.
pub fn pbw_basis(n: usize) -> Vec<PbwMonomial> {
    fn rec(remaining: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<PbwMonomial>) {
        if remaining == 0 {
            out.push(PbwMonomial(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as i64, n as i64, &mut Vec::new(), &mut out);
    out
}

fn apply_l(lambda: &HighestWeight, k: i64, mono: &PbwMonomial) -> VermaVector {
    let parts = mono.parts();
    let Some((&m1, rest)) = parts.split_first() else {
        return match k {
            k if k > 0 => VermaVector::zero(),
            0 => VermaVector::term(PbwMonomial::vacuum(), lambda.h.clone()),
            k => VermaVector::basis(PbwMonomial(vec![-k])),
        };
    };
    if k < 0 && -k >= m1 {
        return VermaVector::basis(mono.prepend(-k));
    }
    let rest = PbwMonomial(rest.to_vec());
    // L_k L_{-m1} R = L_{-m1} (L_k R) + [L_k, L_{-m1}] R
    let moved = apply_l(lambda, k, &rest).map_linear(|u| apply_l(lambda, -m1, u));
    let comm = Standard.bracket_generators(lambda.p, Generator::L(k), Generator::L(-m1));
    let mut out = moved;
    for (idx, c) in comm.l_part() {
        out.add_scaled(c, &apply_l(lambda, *idx, &rest));
    }
    let central = lambda.eval_central(&comm);
    out.add_term(rest, central);
    out
}

/// `g · v` in `M(λ)`.
pub fn verma_act(lambda: &HighestWeight, g: Generator, v: &VermaVector) -> Result<VermaVector> {
    match g {
        Generator::C(i) => {
            if i >= lambda.p.as_usize() {
                return Err(Error::Input(format!("C_{i} does not exist for p = {}", lambda.p)));
            }
            Ok(v.scaled(lambda.central(i)))
        }
        Generator::L(k) => Ok(v.map_linear(|m| apply_l(lambda, k, m))),
    }
}

/// Action of an arbitrary algebra element.
pub fn verma_act_element(lambda: &HighestWeight, x: &AlgebraElement, v: &VermaVector) -> Result<VermaVector> {
    x.p().ensure_same(lambda.p)?;
    let mut out = VermaVector::zero();
    for (g, c) in x.terms() {
        out.add_scaled(&c, &verma_act(lambda, g, v)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaVerdict {
    /// `I(λ) = {1 ≤ i ≤ p-1 : λ(C_i) = 0}`.
    pub i_set: Vec<usize>,
    /// `λ = 0`: the maximal submodule is everything above the vacuum.
    pub lambda_zero: bool,
    pub irreducible: bool,
}

/// `M(λ)` is irreducible exactly when `I(λ)` is empty.
pub fn verma_verdict(lambda: &HighestWeight) -> VermaVerdict {
    let i_set: Vec<usize> = (1..lambda.p.as_usize()).filter(|&i| lambda.c[i].is_zero()).collect();
    let lambda_zero = lambda.is_zero();
    let irreducible = i_set.is_empty() && !lambda_zero;
    VermaVerdict { i_set, lambda_zero, irreducible }
}

/// Basis of the vectors of depth `d` killed by every `L_k`, `k > 0`: the
/// kernel of `v ↦ (L_1 v, …, L_d v)` on the depth-`d` piece.
pub fn singular_vectors(lambda: &HighestWeight, depth: usize) -> Result<Vec<VermaVector>> {
    if depth == 0 {
        return Err(Error::Input("singular vectors live at depth ≥ 1".into()));
    }
    let source = pbw_basis(depth);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for k in 1..=depth {
        let target = pbw_basis(depth - k);
        let images: Vec<VermaVector> = source.iter().map(|m| apply_l(lambda, k as i64, m)).collect();
        for t in &target {
            rows.push(images.iter().map(|img| img.get(t)).collect());
        }
    }
    let matrix = Matrix::from_rows(rows);
    Ok(matrix.kernel().into_iter().map(|coeffs| source.iter().cloned().zip(coeffs).collect()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct VermaAxiomViolation {
    pub x: Generator,
    pub y: Generator,
    pub monomial: Vec<i64>,
}

/// `[x, y] v = x(y v) - y(x v)` for generators with `|index| ≤ window` and
/// every PBW monomial of depth at most `max_depth`.
pub fn check_verma_axioms(lambda: &HighestWeight, window: i64, max_depth: usize) -> Result<Vec<VermaAxiomViolation>> {
    let p = lambda.p;
    let gens = crate::algebra::window_generators(p, window);
    let basis: Vec<PbwMonomial> = (0..=max_depth).flat_map(pbw_basis).collect();
    let mut violations = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let xy = Standard.bracket_generators(p, x, y);
            for m in &basis {
                let v = VermaVector::basis(m.clone());
                let lhs = verma_act_element(lambda, &xy, &v)?;
                let rhs = verma_act(lambda, x, &verma_act(lambda, y, &v)?)?.sub(&verma_act(
                    lambda,
                    y,
                    &verma_act(lambda, x, &v)?,
                )?);
                if lhs != rhs {
                    violations.push(VermaAxiomViolation { x, y, monomial: m.parts().to_vec() });
                }
            }
        }
    }
    Ok(violations)
}
