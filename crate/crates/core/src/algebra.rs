//! The gap-p Virasoro algebra: generators, elements, the bracket, and
//! exhaustive window checks of the Lie axioms.
//!
//! Basis: `L_m` for every integer `m`, plus central elements. The bracket
//! depends on whether indices lie in `pℤ`:
//!
//! * `[L_m, L_n] = (n-m) L_{m+n} + δ_{m+n,0} ((m/p)^3 - m/p)/12 · C_0` for `m, n ∈ pℤ`
//! * `[L_m, L_r] = r L_{m+r}` for `m ∈ pℤ`, `r ∉ pℤ`
//! * `[L_r, L_s] = δ_{r+s,0} r C_{r̄}` for `r, s ∉ pℤ`
//!
//! The last rule is only antisymmetric (and only satisfies Jacobi) when
//! `C_i` and `C_{p-i}` are the same element, so central generators are
//! stored on the slot `min(i, p-i)`. Slots above `p/2` are always zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

/// The gap `p ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapParam(u32);

impl GapParam {
    pub fn new(p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::GapTooSmall(p));
        }
        u32::try_from(p).map(GapParam).map_err(|_| Error::Input(format!("gap parameter {p} is too large")))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        i64::from(self.0)
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// `n̄`, the residue in `0..p`.
    pub fn residue(self, n: i64) -> usize {
        n.rem_euclid(self.as_i64()) as usize
    }

    pub fn divides(self, n: i64) -> bool {
        n.rem_euclid(self.as_i64()) == 0
    }

    /// The storage slot of `C_i`: `C_i` and `C_{p-i}` coincide.
    pub fn central_slot(self, i: usize) -> usize {
        let i = i % self.as_usize();
        i.min(self.as_usize() - i)
    }

    pub fn ensure_same(self, other: GapParam) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GapMismatch { left: self.0, right: other.0 })
        }
    }
}

impl fmt::Display for GapParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for GapParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.0)
    }
}

impl<'de> Deserialize<'de> for GapParam {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let p = i64::deserialize(deserializer)?;
        GapParam::new(p).map_err(D::Error::custom)
    }
}

/// A basis element of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    L(i64),
    C(usize),
}

impl Generator {
    /// Degree in the ℤ-gradation; central elements have degree 0.
    pub fn degree(self) -> i64 {
        match self {
            Generator::L(m) => m,
            Generator::C(_) => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(m) => write!(f, "L_{m}"),
            Generator::C(i) => write!(f, "C_{i}"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `Σ a_m L_m + Σ c_i C_i` with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    p: GapParam,
    l_part: SparseVec<i64>,
    c_part: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn zero(p: GapParam) -> Self {
        AlgebraElement { p, l_part: SparseVec::zero(), c_part: vec![Scalar::zero(); p.as_usize()] }
    }

    pub fn l(p: GapParam, m: i64) -> Self {
        Self::term(p, Generator::L(m), Scalar::one())
    }

    pub fn c(p: GapParam, i: usize) -> Self {
        Self::term(p, Generator::C(i), Scalar::one())
    }

    pub fn generator(p: GapParam, g: Generator) -> Self {
        Self::term(p, g, Scalar::one())
    }

    pub fn term(p: GapParam, g: Generator, coeff: Scalar) -> Self {
        let mut x = Self::zero(p);
        x.add_term(g, coeff);
        x
    }

    pub fn p(&self) -> GapParam {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.l_part.is_zero() && self.c_part.iter().all(Scalar::is_zero)
    }

    pub fn l_part(&self) -> &SparseVec<i64> {
        &self.l_part
    }

    pub fn c_part(&self) -> &[Scalar] {
        &self.c_part
    }

    pub fn l_coeff(&self, m: i64) -> Scalar {
        self.l_part.get(&m)
    }

    pub fn c_coeff(&self, i: usize) -> Scalar {
        self.c_part[self.p.central_slot(i)].clone()
    }

    pub fn add_term(&mut self, g: Generator, coeff: Scalar) {
        match g {
            Generator::L(m) => self.l_part.add_term(m, coeff),
            Generator::C(i) => {
                let slot = self.p.central_slot(i);
                self.c_part[slot] += &coeff;
            }
        }
    }

    /// `self += factor * other`; both must share `p`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &AlgebraElement) -> Result<()> {
        self.p.ensure_same(other.p)?;
        self.l_part.add_scaled(factor, &other.l_part);
        for (mine, theirs) in self.c_part.iter_mut().zip(&other.c_part) {
            *mine += &(factor * theirs);
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        AlgebraElement {
            p: self.p,
            l_part: self.l_part.scaled(factor),
            c_part: self.c_part.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &AlgebraElement) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other)?;
        Ok(out)
    }

    /// Nonzero `(generator, coefficient)` pairs, `L` terms first.
    pub fn terms(&self) -> impl Iterator<Item = (Generator, Scalar)> + '_ {
        let ls = self.l_part.iter().map(|(m, c)| (Generator::L(*m), c.clone()));
        let cs =
            self.c_part.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (Generator::C(i), c.clone()));
        ls.chain(cs)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})·{g}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct LPartJson<'a>(&'a SparseVec<i64>);

impl Serialize for LPartJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (m, c) in self.0 {
            map.serialize_entry(&m.to_string(), c)?;
        }
        map.end()
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("L", &LPartJson(&self.l_part))?;
        map.serialize_entry("C", &self.c_part)?;
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraElementJson {
    p: GapParam,
    #[serde(rename = "L", default)]
    l: BTreeMap<String, Scalar>,
    #[serde(rename = "C", default)]
    c: Option<Vec<Scalar>>,
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = AlgebraElementJson::deserialize(deserializer)?;
        let mut x = AlgebraElement::zero(raw.p);
        for (k, c) in raw.l {
            let m: i64 = k.trim().parse().map_err(|_| D::Error::custom(format!("bad L index {k:?}")))?;
            x.add_term(Generator::L(m), c);
        }
        if let Some(cs) = raw.c {
            if cs.len() != raw.p.as_usize() {
                return Err(D::Error::custom(format!("C must have exactly p = {} entries, got {}", raw.p, cs.len())));
            }
            for (i, c) in cs.into_iter().enumerate() {
                x.add_term(Generator::C(i), c);
            }
        }
        Ok(x)
    }
}

/// Bracket of two basis elements. Implementations other than [`Standard`]
/// exist to check that the axiom checkers catch altered constants.
pub trait StructureConstants {
    fn bracket_generators(&self, p: GapParam, x: Generator, y: Generator) -> AlgebraElement;
}

/// The structure constants of the gap-p Virasoro algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

/// `((m/p)^3 - m/p)/12`, with `m ∈ pℤ`.
pub fn virasoro_central_coefficient(p: GapParam, m: i64) -> Scalar {
    debug_assert!(p.divides(m));
    let q = Scalar::from_int(m / p.as_i64());
    (q.pow(3) - q) / Scalar::from_int(12)
}

impl StructureConstants for Standard {
    fn bracket_generators(&self, p: GapParam, x: Generator, y: Generator) -> AlgebraElement {
        let (m, n) = match (x, y) {
            (Generator::L(m), Generator::L(n)) => (m, n),
            _ => return AlgebraElement::zero(p),
        };
        let mut out = AlgebraElement::zero(p);
        match (p.divides(m), p.divides(n)) {
            (true, true) => {
                out.add_term(Generator::L(m + n), Scalar::from_int(n - m));
                if m + n == 0 {
                    out.add_term(Generator::C(0), virasoro_central_coefficient(p, m));
                }
            }
            (true, false) => out.add_term(Generator::L(m + n), Scalar::from_int(n)),
            (false, true) => out.add_term(Generator::L(m + n), Scalar::from_int(-m)),
            (false, false) => {
                if m + n == 0 {
                    out.add_term(Generator::C(p.residue(m)), Scalar::from_int(m));
                }
            }
        }
        out
    }
}

/// Bilinear extension of `rules` to arbitrary elements.
pub fn bracket_with<R: StructureConstants + ?Sized>(
    rules: &R,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement> {
    x.p.ensure_same(y.p)?;
    let p = x.p;
    let mut out = AlgebraElement::zero(p);
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let b = rules.bracket_generators(p, gx, gy);
            out.add_scaled(&(&cx * &cy), &b)?;
        }
    }
    Ok(out)
}

pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    bracket_with(&Standard, x, y)
}

/// `L_{-N..=N}` followed by every central generator.
pub fn window_generators(p: GapParam, n: i64) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (-n..=n).map(Generator::L).collect();
    gens.extend((0..p.as_usize()).map(Generator::C));
    gens
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum LieViolation {
    Antisymmetry { x: Generator, y: Generator, residual: AlgebraElement },
    Jacobi { x: Generator, y: Generator, z: Generator, residual: AlgebraElement },
}

#[derive(Clone, Debug, Serialize)]
pub struct LieReport {
    pub p: GapParam,
    pub window: i64,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub violations: Vec<LieViolation>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_lie_axioms(p: GapParam, window: i64) -> LieReport {
    check_lie_axioms_with(&Standard, p, window)
}

/// Antisymmetry on all generator pairs and Jacobi on all generator triples
/// of the window. Every failing tuple is reported.
pub fn check_lie_axioms_with<R: StructureConstants + ?Sized>(rules: &R, p: GapParam, window: i64) -> LieReport {
    let gens = window_generators(p, window);
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    let mut triples_checked = 0;

    let mut table: BTreeMap<(Generator, Generator), AlgebraElement> = BTreeMap::new();
    for &x in &gens {
        for &y in &gens {
            table.insert((x, y), rules.bracket_generators(p, x, y));
        }
    }

    for &x in &gens {
        for &y in &gens {
            pairs_checked += 1;
            let residual = table[&(x, y)].checked_add(&table[&(y, x)]).expect("same p");
            if !residual.is_zero() {
                violations.push(LieViolation::Antisymmetry { x, y, residual });
            }
        }
    }

    // [x,[y,z]] is computed from the generator bracket of x with each term of
    // [y,z]; indices there may leave the window, which is fine.
    let nested = |x: Generator, inner: &AlgebraElement| -> AlgebraElement {
        let mut out = AlgebraElement::zero(p);
        for (g, c) in inner.terms() {
            let b = rules.bracket_generators(p, x, g);
            out.add_scaled(&c, &b).expect("same p");
        }
        out
    };

    for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                triples_checked += 1;
                let mut residual = nested(x, &table[&(y, z)]);
                residual.add_scaled(&Scalar::one(), &nested(y, &table[&(z, x)])).expect("same p");
                residual.add_scaled(&Scalar::one(), &nested(z, &table[&(x, y)])).expect("same p");
                if !residual.is_zero() {
                    violations.push(LieViolation::Jacobi { x, y, z, residual });
                }
            }
        }
    }

    LieReport { p, window, pairs_checked, triples_checked, violations }
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingViolation {
    pub i: i64,
    pub j: i64,
    pub image_of_bracket: AlgebraElement,
    pub bracket_of_images: AlgebraElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    pub p: GapParam,
    pub window: i64,
    pub pairs_checked: usize,
    pub violations: Vec<EmbeddingViolation>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Image of the Virasoro bracket `[x_i, x_j] = (j-i) x_{i+j} + δ_{i+j,0} (i^3-i)/12 K`
/// under `x_i ↦ L_{pi}/p`, `K ↦ C_0/p²`.
pub fn virasoro_bracket_image(p: GapParam, i: i64, j: i64) -> AlgebraElement {
    let pp = p.as_i64();
    let mut out = AlgebraElement::zero(p);
    out.add_term(Generator::L(pp * (i + j)), Scalar::ratio(j - i, pp));
    if i + j == 0 {
        let k = Scalar::ratio(i * i * i - i, 12) / Scalar::from_int(pp * pp);
        out.add_term(Generator::C(0), k);
    }
    out
}

pub fn vir_embedding_check(p: GapParam, window: i64) -> EmbeddingReport {
    let pp = p.as_i64();
    let inv_p = Scalar::ratio(1, pp);
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for i in -window..=window {
        for j in -window..=window {
            pairs_checked += 1;
            let lhs = virasoro_bracket_image(p, i, j);
            let xi = AlgebraElement::term(p, Generator::L(pp * i), inv_p.clone());
            let xj = AlgebraElement::term(p, Generator::L(pp * j), inv_p.clone());
            let rhs = bracket(&xi, &xj).expect("same p");
            if lhs != rhs {
                violations.push(EmbeddingViolation { i, j, image_of_bracket: lhs, bracket_of_images: rhs });
            }
        }
    }
    EmbeddingReport { p, window, pairs_checked, violations }
}
