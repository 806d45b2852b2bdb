use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::fmatrix::{validate_f, FMatrix};
use super::{WeightModule, WeightVector};
use crate::algebra::{GapParam, Generator};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The data `(α, β, F)` of a module of intermediate series:
///
/// ```text
/// L_m v_w = (α + w + mβ) v_{w+m}     m ∈ pℤ
/// L_s v_w = f[s̄][w̄] v_{w+s}          s ∉ pℤ
/// C_i v_w = 0
/// ```
///
/// on the basis `{v_w : w̄ ∈ o(F)}` (`{v_w : w ∈ pℤ}` when `F = 0`).
///
/// Parsing does not validate `F`; use [`MoisSpec::new`] or
/// [`MoisSpec::ensure_valid`] where conditions (I)–(III) are required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoisSpec {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub f: FMatrix,
}

impl MoisSpec {
    pub fn new(alpha: Scalar, beta: Scalar, f: FMatrix) -> Result<Self> {
        let spec = MoisSpec { alpha, beta, f };
        spec.ensure_valid()?;
        Ok(spec)
    }

    pub fn new_unchecked(alpha: Scalar, beta: Scalar, f: FMatrix) -> Self {
        MoisSpec { alpha, beta, f }
    }

    pub fn p(&self) -> GapParam {
        self.f.p()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate_f(&self.f);
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::Input(format!(
                "F violates condition {}",
                serde_json::to_value(c.condition).map(|v| v.to_string()).unwrap_or_default()
            ))),
        }
    }

    pub fn check_vector(&self, v: &WeightVector) -> Result<()> {
        match v.keys().find(|&&w| !self.has_index(w)) {
            None => Ok(()),
            Some(w) => Err(Error::Input(format!("v_{w} is not a basis vector of this module"))),
        }
    }

    fn act_basis_unchecked(&self, g: Generator, w: i64) -> Option<(i64, Scalar)> {
        let p = self.p();
        let coeff = match g {
            Generator::C(_) => return None,
            Generator::L(m) if p.divides(m) => {
                &self.alpha + &Scalar::from_int(w) + &(&Scalar::from_int(m) * &self.beta)
            }
            Generator::L(s) => self.f.entry(s, w).clone(),
        };
        let target = w + g.degree();
        (!coeff.is_zero()).then_some((target, coeff))
    }
}

impl WeightModule for MoisSpec {
    fn gap(&self) -> GapParam {
        self.p()
    }

    fn has_index(&self, w: i64) -> bool {
        self.f.components().contains(&self.p().residue(w))
    }

    fn window_generators(&self, n: i64) -> Vec<Generator> {
        crate::algebra::window_generators(self.p(), n)
    }

    fn act_basis(&self, g: Generator, w: i64) -> Result<Option<(i64, Scalar)>> {
        if let Generator::C(i) = g {
            if i >= self.p().as_usize() {
                return Err(Error::Input(format!("C_{i} does not exist for p = {}", self.p())));
            }
        }
        Ok(self.act_basis_unchecked(g, w))
    }
}

/// `g · v` in `V(α, β, F)`.
pub fn mois_act(spec: &MoisSpec, g: Generator, v: &WeightVector) -> Result<WeightVector> {
    spec.check_vector(v)?;
    spec.act(g, v)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoisSpecJson {
    p: GapParam,
    #[serde(default)]
    alpha: Scalar,
    #[serde(default)]
    beta: Scalar,
    #[serde(rename = "F")]
    f: Vec<Vec<Scalar>>,
}

impl Serialize for MoisSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MoisSpecJson { p: self.p(), alpha: self.alpha.clone(), beta: self.beta.clone(), f: self.f.rows().to_vec() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MoisSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MoisSpecJson::deserialize(deserializer)?;
        let f = FMatrix::from_rows(raw.p, raw.f).map_err(D::Error::custom)?;
        Ok(MoisSpec::new_unchecked(raw.alpha, raw.beta, f))
    }
}
