//! Isomorphism of modules of intermediate series by gauge propagation.
//!
//! `V(α, β, F) ≅ V(α', β', F')` through `v_w ↦ d_{w̄} v'_{w-k}` with
//! `k = α' - α ∈ ℤ`, `β' = β`, and
//!
//! ```text
//! F'[s][l - k] = F[s][l] · d_{s+l} / d_l      for all s, l (residues mod p)
//! ```
//!
//! The gauge `d` is fixed to 1 at the smallest component and propagated
//! along linkage edges in breadth-first order; every constraint is then
//! checked, which also covers consistency around cycles.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::spec::MoisSpec;
use crate::error::Result;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub k: i64,
    pub d: Vec<Scalar>,
}

impl IsoWitness {
    pub fn identity(p: usize) -> Self {
        IsoWitness { k: 0, d: vec![Scalar::one(); p] }
    }

    /// Image of `v_w`: `(index, coefficient)` in the target module.
    pub fn map_basis(&self, w: i64) -> (i64, Scalar) {
        let p = self.d.len() as i64;
        (w - self.k, self.d[w.rem_euclid(p) as usize].clone())
    }

    /// Witness of the inverse isomorphism.
    pub fn inverse(&self) -> IsoWitness {
        let p = self.d.len() as i64;
        let d = (0..p)
            .map(|u| self.d[(u + self.k).rem_euclid(p) as usize].recip().expect("gauge entries are nonzero"))
            .collect();
        IsoWitness { k: -self.k, d }
    }

    /// Witness of `next ∘ self`.
    pub fn then(&self, next: &IsoWitness) -> IsoWitness {
        let p = self.d.len() as i64;
        let d = (0..p).map(|l| &self.d[l as usize] * &next.d[(l - self.k).rem_euclid(p) as usize]).collect();
        IsoWitness { k: self.k + next.k, d }
    }

    /// Checks every defining constraint of an isomorphism `a → b`.
    pub fn verify(&self, a: &MoisSpec, b: &MoisSpec) -> bool {
        let p = a.p();
        if p != b.p() || self.d.len() != p.as_usize() || self.d.iter().any(Scalar::is_zero) {
            return false;
        }
        if b.beta != a.beta || &b.alpha - &a.alpha != Scalar::from_int(self.k) {
            return false;
        }
        let shifted: std::collections::BTreeSet<usize> =
            a.f.components().iter().map(|&l| p.residue(l as i64 - self.k)).collect();
        if shifted != b.f.components() {
            return false;
        }
        let n = p.as_usize();
        (1..n).all(|s| {
            (0..n).all(|l| {
                let target = b.f.get(s, p.residue(l as i64 - self.k));
                let image = a.f.get(s, l) * &self.d[(s + l) % n] / &self.d[l];
                *target == image
            })
        })
    }
}

/// Returns an isomorphism witness `a → b`, or `None` if the modules are not
/// isomorphic. Both specs must satisfy conditions (I)–(III).
pub fn iso_test(a: &MoisSpec, b: &MoisSpec) -> Result<Option<IsoWitness>> {
    a.p().ensure_same(b.p())?;
    a.ensure_valid()?;
    b.ensure_valid()?;
    let p = a.p();
    let n = p.as_usize();

    if a.beta != b.beta {
        return Ok(None);
    }
    let Some(k) = (&b.alpha - &a.alpha).to_i64() else {
        return Ok(None);
    };

    let target = |s: usize, l: usize| b.f.get(s, p.residue(l as i64 - k));
    let mut d: BTreeMap<usize, Scalar> = BTreeMap::new();
    for &root in &a.f.components() {
        if d.contains_key(&root) {
            continue;
        }
        d.insert(root, Scalar::one());
        let mut queue = VecDeque::from([root]);
        while let Some(l) = queue.pop_front() {
            let dl = d[&l].clone();
            // neighbours through edges in either direction, smallest residue first
            let mut next: BTreeMap<usize, Scalar> = BTreeMap::new();
            for s in 1..n {
                let out = (l + s) % n;
                let f = a.f.get(s, l);
                if !f.is_zero() {
                    let t = target(s, l);
                    if t.is_zero() {
                        return Ok(None);
                    }
                    next.entry(out).or_insert_with(|| &dl * t / f);
                }
                let src = (l + n - s) % n;
                let f = a.f.get(s, src);
                if !f.is_zero() {
                    let t = target(s, src);
                    if t.is_zero() {
                        return Ok(None);
                    }
                    next.entry(src).or_insert_with(|| &dl * f / t);
                }
            }
            for (j, v) in next {
                if let std::collections::btree_map::Entry::Vacant(e) = d.entry(j) {
                    e.insert(v);
                    queue.push_back(j);
                }
            }
        }
    }
    let witness = IsoWitness { k, d: (0..n).map(|j| d.get(&j).cloned().unwrap_or_else(Scalar::one)).collect() };
    Ok(witness.verify(a, b).then_some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GapParam;
    use crate::mois::FMatrix;

    fn p2(alpha: Scalar, f: [Scalar; 2]) -> MoisSpec {
        let p = GapParam::new(2).unwrap();
        let f = FMatrix::from_rows(p, vec![f.to_vec()]).unwrap();
        MoisSpec::new(alpha, Scalar::ratio(1, 3), f).unwrap()
    }

    #[test]
    fn gauge_rescaling() {
        let a = p2(Scalar::zero(), [Scalar::one(), Scalar::one()]);
        let b = p2(Scalar::zero(), [Scalar::from_int(2), Scalar::ratio(1, 2)]);
        let w = iso_test(&a, &b).unwrap().unwrap();
        assert_eq!(w, IsoWitness { k: 0, d: vec![Scalar::one(), Scalar::from_int(2)] });
    }

    #[test]
    fn cycle_product_obstruction() {
        let a = p2(Scalar::zero(), [Scalar::one(), Scalar::one()]);
        let c = p2(Scalar::zero(), [Scalar::from_int(2), Scalar::from_int(3)]);
        assert_eq!(iso_test(&a, &c).unwrap(), None);
    }

    #[test]
    fn identity_witness() {
        let a = p2(Scalar::ratio(2, 7), [Scalar::from_int(5), Scalar::from_int(-3)]);
        assert_eq!(iso_test(&a, &a).unwrap(), Some(IsoWitness::identity(2)));
    }

    #[test]
    fn shift_by_one_swaps_columns() {
        // α' = α + 1 moves column l to l - 1
        let a = p2(Scalar::zero(), [Scalar::from_int(2), Scalar::from_int(3)]);
        let b = p2(Scalar::one(), [Scalar::from_int(3), Scalar::from_int(2)]);
        let w = iso_test(&a, &b).unwrap().unwrap();
        assert_eq!(w.k, 1);
        assert!(w.verify(&a, &b));
        assert_eq!(iso_test(&b, &a).unwrap().map(|w| w.k), Some(-1));
    }

    #[test]
    fn non_integer_shift_or_beta_mismatch() {
        let a = p2(Scalar::zero(), [Scalar::one(), Scalar::one()]);
        let b = p2(Scalar::ratio(1, 2), [Scalar::one(), Scalar::one()]);
        assert_eq!(iso_test(&a, &b).unwrap(), None);
        let mut c = a.clone();
        c.beta = Scalar::from_int(5);
        assert_eq!(iso_test(&a, &c).unwrap(), None);
    }

    #[test]
    fn single_component_needs_shift_in_p_z() {
        let p = GapParam::new(3).unwrap();
        let a = MoisSpec::new(Scalar::zero(), Scalar::from_int(2), FMatrix::zero(p)).unwrap();
        let b = MoisSpec::new(Scalar::from_int(1), Scalar::from_int(2), FMatrix::zero(p)).unwrap();
        let c = MoisSpec::new(Scalar::from_int(3), Scalar::from_int(2), FMatrix::zero(p)).unwrap();
        assert_eq!(iso_test(&a, &b).unwrap(), None);
        assert_eq!(iso_test(&a, &c).unwrap().map(|w| w.k), Some(3));
    }
}
