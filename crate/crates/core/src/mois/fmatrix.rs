//! The `(p-1) × p` matrix `F` and the three conditions it must satisfy.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::GapParam;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Entries `f[s][j]` for `1 ≤ s ≤ p-1`, `0 ≤ j ≤ p-1`. Row `s` gives the
/// action of every `L_n` with `n ≡ s (mod p)` on the component of residue `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    p: GapParam,
    rows: Vec<Vec<Scalar>>,
}

impl FMatrix {
    pub fn zero(p: GapParam) -> Self {
        let n = p.as_usize();
        FMatrix { p, rows: vec![vec![Scalar::zero(); n]; n - 1] }
    }

    /// Rows are listed for `s = 1..p-1`, columns for `j = 0..p-1`.
    pub fn from_rows(p: GapParam, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = p.as_usize();
        if rows.len() != n - 1 || rows.iter().any(|r| r.len() != n) {
            let got = match rows.iter().map(Vec::len).collect::<BTreeSet<_>>().len() {
                0 => "0 rows".to_string(),
                1 => format!("{}x{}", rows.len(), rows[0].len()),
                _ => format!("{} ragged rows", rows.len()),
            };
            return Err(Error::Dimension { rows: n - 1, cols: n, got });
        }
        Ok(FMatrix { p, rows })
    }

    pub fn from_ints(p: GapParam, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(p, rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    /// Builds a matrix from its nonzero entries `(s, j, value)`.
    pub fn from_entries(p: GapParam, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut f = Self::zero(p);
        for (s, j, v) in entries {
            f.set(*s, *j, v.clone())?;
        }
        Ok(f)
    }

    pub fn p(&self) -> GapParam {
        self.p
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// `f[s][j]` for `1 ≤ s < p`, `0 ≤ j < p`.
    pub fn get(&self, s: usize, j: usize) -> &Scalar {
        &self.rows[s - 1][j]
    }

    /// `f[s̄][j̄]` for arbitrary integers; `s` must not be divisible by `p`.
    pub fn entry(&self, s: i64, j: i64) -> &Scalar {
        self.get(self.p.residue(s), self.p.residue(j))
    }

    pub fn set(&mut self, s: usize, j: usize, v: Scalar) -> Result<()> {
        let n = self.p.as_usize();
        if s == 0 || s >= n || j >= n {
            return Err(Error::Input(format!("entry ({s},{j}) outside a {}x{n} matrix", n - 1)));
        }
        self.rows[s - 1][j] = v;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    /// `o(F)`: residues whose column has a nonzero entry.
    pub fn active_columns(&self) -> BTreeSet<usize> {
        (0..self.p.as_usize()).filter(|&j| self.rows.iter().any(|r| !r[j].is_zero())).collect()
    }

    /// Residues carrying a component of the module: `o(F)`, or `{0}` for `F = 0`.
    pub fn components(&self) -> BTreeSet<usize> {
        if self.is_zero() {
            BTreeSet::from([0])
        } else {
            self.active_columns()
        }
    }

    /// Cyclic column shift `σ^k`: column `j` moves to `j + k (mod p)`.
    pub fn sigma(&self, k: i64) -> FMatrix {
        let n = self.p.as_usize();
        let mut out = Self::zero(self.p);
        for (r, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = self.p.residue(j as i64 + k);
                debug_assert!(target < n);
                out.rows[r][target] = v.clone();
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        validate_f(self)
    }
}

/// Which of the three conditions a check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    #[serde(rename = "I")]
    ZeroActive,
    #[serde(rename = "II")]
    TargetsActive,
    #[serde(rename = "III")]
    Commutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Column 0 is zero while some other column is not.
    ZeroColumnEmpty,
    /// `f[s][j] ≠ 0` but column `(s + j) mod p` is entirely zero.
    InactiveTarget { s: usize, j: usize, target: usize },
    /// `f[r][i+s] f[s][i] ≠ f[s][i+r] f[r][i]`.
    Commutation { r: usize, s: usize, i: usize, lhs: Scalar, rhs: Scalar },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub holds: bool,
    /// Set for the zero matrix, where conditions (I) and (II) do not apply.
    pub waived: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub p: GapParam,
    /// `F = 0`: the single-component module `V_0(α, β)`.
    pub degenerate: bool,
    pub conditions: Vec<ConditionReport>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn condition(&self, c: Condition) -> &ConditionReport {
        self.conditions.iter().find(|r| r.condition == c).expect("all conditions reported")
    }

    /// The first failing condition's witness, if any.
    pub fn first_failure(&self) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

/// Checks conditions (I)–(III), reporting the first witness of each failure.
///
/// Condition (III) is symmetric in `(r, s)`, so only `s < r` is scanned, in
/// lexicographic order of `(r, s, i)`.
pub fn validate_f(f: &FMatrix) -> ValidationReport {
    let p = f.p;
    let n = p.as_usize();
    let degenerate = f.is_zero();
    let active = f.active_columns();

    let cond_i = if degenerate {
        ConditionReport { condition: Condition::ZeroActive, holds: true, waived: true, witness: None }
    } else {
        let holds = active.contains(&0);
        ConditionReport {
            condition: Condition::ZeroActive,
            holds,
            waived: false,
            witness: (!holds).then_some(Witness::ZeroColumnEmpty),
        }
    };

    let cond_ii = if degenerate {
        ConditionReport { condition: Condition::TargetsActive, holds: true, waived: true, witness: None }
    } else {
        let witness = (1..n)
            .flat_map(|s| (0..n).map(move |j| (s, j)))
            .find(|&(s, j)| !f.get(s, j).is_zero() && !active.contains(&((s + j) % n)))
            .map(|(s, j)| Witness::InactiveTarget { s, j, target: (s + j) % n });
        ConditionReport { condition: Condition::TargetsActive, holds: witness.is_none(), waived: false, witness }
    };

    let mut witness = None;
    'scan: for r in 1..n {
        for s in 1..r {
            for i in 0..n {
                let lhs = f.get(r, (i + s) % n) * f.get(s, i);
                let rhs = f.get(s, (i + r) % n) * f.get(r, i);
                if lhs != rhs {
                    witness = Some(Witness::Commutation { r, s, i, lhs, rhs });
                    break 'scan;
                }
            }
        }
    }
    let cond_iii =
        ConditionReport { condition: Condition::Commutation, holds: witness.is_none(), waived: false, witness };

    ValidationReport { p, degenerate, conditions: vec![cond_i, cond_ii, cond_iii] }
}

/// Fills row `r` from `f[r][0] = seed` so that condition (III) holds against
/// row 1, which must be entirely nonzero. Uses the `s = 1` instance of (III):
/// `f[r][i+1] = f[1][i+r] f[r][i] / f[1][i]`.
pub fn complete_row_from_first(f: &FMatrix, r: usize, seed: Scalar) -> Result<FMatrix> {
    let n = f.p.as_usize();
    if r < 2 || r >= n {
        return Err(Error::Input(format!("row {r} cannot be completed from row 1 (p = {n})")));
    }
    if (0..n).any(|j| f.get(1, j).is_zero()) {
        return Err(Error::Input("row 1 must be entirely nonzero".into()));
    }
    let mut out = f.clone();
    out.set(r, 0, seed)?;
    for i in 0..n - 1 {
        let next = f.get(1, (i + r) % n) * out.get(r, i) / f.get(1, i);
        out.set(r, i + 1, next)?;
    }
    Ok(out)
}
