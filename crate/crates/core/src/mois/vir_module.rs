//! The three families of 𝔤(0)-modules `A_j(a)`, `B_j(a)`, `V_j(α, β)` with
//! basis `{v_{j+pk} : k ∈ ℤ}`. Only `L_m` with `m ∈ pℤ` and `C_0` act.

use serde::{Deserialize, Serialize};

use super::{WeightModule, WeightVector};
use crate::algebra::{GapParam, Generator};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum VirKind {
    A { a: Scalar },
    B { a: Scalar },
    V { alpha: Scalar, beta: Scalar },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirModule {
    pub p: GapParam,
    pub j: usize,
    #[serde(flatten)]
    pub kind: VirKind,
}

impl VirModule {
    pub fn new(p: GapParam, j: usize, kind: VirKind) -> Result<Self> {
        if j >= p.as_usize() {
            return Err(Error::Input(format!("residue {j} must be below p = {p}")));
        }
        Ok(VirModule { p, j, kind })
    }
}

impl WeightModule for VirModule {
    fn gap(&self) -> GapParam {
        self.p
    }

    fn has_index(&self, w: i64) -> bool {
        self.p.residue(w) == self.j
    }

    fn window_generators(&self, n: i64) -> Vec<Generator> {
        let pp = self.p.as_i64();
        let mut gens: Vec<Generator> = (-(n / pp)..=n / pp).map(|k| Generator::L(k * pp)).collect();
        gens.push(Generator::C(0));
        gens
    }

    fn act_basis(&self, g: Generator, w: i64) -> Result<Option<(i64, Scalar)>> {
        let m = match g {
            Generator::C(0) => return Ok(None),
            Generator::C(i) => return Err(Error::Input(format!("C_{i} is not in 𝔤(0)"))),
            Generator::L(m) if self.p.divides(m) => m,
            Generator::L(m) => return Err(Error::Input(format!("L_{m} is not in 𝔤(0) for p = {}", self.p))),
        };
        if !self.has_index(w) {
            return Err(Error::Input(format!("v_{w} is not a basis vector of a residue-{} module", self.j)));
        }
        let j = self.j as i64;
        // pk, the offset of w within the residue class
        let pk = w - j;
        let (target, coeff) = match &self.kind {
            VirKind::A { a } => {
                if pk != 0 {
                    (w + m, Scalar::from_int(m + pk))
                } else {
                    (j + m, Scalar::from_int(m) * (Scalar::from_int(m) + a))
                }
            }
            VirKind::B { a } => {
                if m + pk != 0 {
                    (w + m, Scalar::from_int(pk))
                } else {
                    (j, -(Scalar::from_int(m) * (Scalar::from_int(m) + a)))
                }
            }
            VirKind::V { alpha, beta } => (w + m, alpha + &Scalar::from_int(w) + &(Scalar::from_int(m) * beta)),
        };
        Ok((!coeff.is_zero()).then_some((target, coeff)))
    }
}

/// `L_m · v_w` on a 𝔤(0)-module; `m` must lie in `pℤ`.
pub fn gz_component_act(module: &VirModule, g: Generator, w: i64) -> Result<WeightVector> {
    module.act(g, &WeightVector::basis(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mois::{check_module_axioms, submodule_window_check};

    fn gp(p: i64) -> GapParam {
        GapParam::new(p).unwrap()
    }

    #[test]
    fn formulas_on_small_cases() {
        let a = Scalar::ratio(1, 5);
        let am = VirModule::new(gp(2), 0, VirKind::A { a: a.clone() }).unwrap();
        let expect = Scalar::from_int(2) * (Scalar::from_int(2) + &a);
        assert_eq!(gz_component_act(&am, Generator::L(2), 0).unwrap(), WeightVector::term(2, expect.clone()));

        let bm = VirModule::new(gp(2), 0, VirKind::B { a }).unwrap();
        assert_eq!(gz_component_act(&bm, Generator::L(2), -2).unwrap(), WeightVector::term(0, -expect));

        let (alpha, beta) = (Scalar::ratio(2, 3), Scalar::ratio(-1, 7));
        let vm = VirModule::new(gp(2), 0, VirKind::V { alpha: alpha.clone(), beta: beta.clone() }).unwrap();
        let coeff = &alpha + &(Scalar::from_int(2) * &beta);
        assert_eq!(gz_component_act(&vm, Generator::L(2), 0).unwrap(), WeightVector::term(2, coeff));
    }

    #[test]
    fn rejects_linking_generators() {
        let vm = VirModule::new(gp(3), 1, VirKind::V { alpha: Scalar::zero(), beta: Scalar::zero() }).unwrap();
        assert!(gz_component_act(&vm, Generator::L(1), 1).is_err());
        assert!(gz_component_act(&vm, Generator::L(3), 0).is_err());
        assert!(VirModule::new(gp(3), 3, VirKind::A { a: Scalar::zero() }).is_err());
    }

    #[test]
    fn families_are_modules() {
        let a = Scalar::ratio(3, 11);
        for j in 0..3 {
            for kind in [
                VirKind::A { a: a.clone() },
                VirKind::B { a: a.clone() },
                VirKind::V { alpha: Scalar::ratio(1, 2), beta: Scalar::ratio(5, 3) },
            ] {
                let m = VirModule::new(gp(3), j, kind).unwrap();
                let rep = check_module_axioms(&m, 15).unwrap();
                assert!(rep.passed(), "{m:?}: {:?}", rep.violations.first());
            }
        }
    }

    #[test]
    fn a_type_drops_the_zero_line() {
        let m = VirModule::new(gp(2), 0, VirKind::A { a: Scalar::ratio(7, 2) }).unwrap();
        assert!(submodule_window_check(&m, |w| w != 0, 20).unwrap());
        let b = VirModule::new(gp(2), 0, VirKind::B { a: Scalar::ratio(7, 2) }).unwrap();
        assert!(submodule_window_check(&b, |w| w == 0, 20).unwrap());
    }
}
