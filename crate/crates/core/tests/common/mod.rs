//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use gapvir::cover::TensorVector;
use gapvir::mois::{complete_row_from_first, FMatrix, MoisSpec, WeightModule};
use gapvir::{GapParam, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn gp(p: i64) -> GapParam {
    GapParam::new(p).unwrap()
}

/// A small rational `a/b`, `|a| ≤ 9`, `1 ≤ b ≤ 5`.
pub fn scalar(rng: &mut StdRng) -> Scalar {
    Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn nonzero(rng: &mut StdRng) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Row 1 entirely nonzero; every other row completed from a seed that is
/// zero about a third of the time.
pub fn full_row_f(rng: &mut StdRng, p: GapParam) -> FMatrix {
    let n = p.as_usize();
    let mut f = FMatrix::zero(p);
    for j in 0..n {
        f.set(1, j, nonzero(rng)).unwrap();
    }
    for r in 2..n {
        let seed = if rng.gen_range(0..3) == 0 { Scalar::zero() } else { nonzero(rng) };
        f = complete_row_from_first(&f, r, seed).unwrap();
    }
    f
}

/// A single nonzero row `s`, supported on the multiples of `gcd(s, p)`.
pub fn single_row_f(rng: &mut StdRng, p: GapParam) -> FMatrix {
    let n = p.as_usize();
    let s = rng.gen_range(1..n);
    let g = gcd(s, n);
    let mut f = FMatrix::zero(p);
    for j in (0..n).step_by(g) {
        f.set(s, j, nonzero(rng)).unwrap();
    }
    f
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn random_f(rng: &mut StdRng, p: GapParam) -> FMatrix {
    match rng.gen_range(0..4) {
        0 => FMatrix::zero(p),
        1 => single_row_f(rng, p),
        _ => full_row_f(rng, p),
    }
}

pub fn random_spec(rng: &mut StdRng, p: GapParam) -> MoisSpec {
    let f = random_f(rng, p);
    MoisSpec::new(scalar(rng), scalar(rng), f).expect("generated F is valid")
}

/// `(k, d)` such that the gauge image of `spec` is isomorphic to it. The
/// shift must land on a component so that the image still has `0 ∈ o(F)`.
pub fn random_gauge(rng: &mut StdRng, spec: &MoisSpec) -> (i64, Vec<Scalar>) {
    let p = spec.p().as_i64();
    let comps: Vec<usize> = spec.f.components().into_iter().collect();
    let k = comps[rng.gen_range(0..comps.len())] as i64 + p * rng.gen_range(-2..=2);
    let d = (0..p).map(|_| nonzero(rng)).collect();
    (k, d)
}

/// `V(α + k, β, F')` with `F'[s][l-k] = F[s][l] d_{s+l} / d_l`.
pub fn gauge_image(spec: &MoisSpec, k: i64, d: &[Scalar]) -> MoisSpec {
    let p = spec.p();
    let n = p.as_usize();
    let mut f = FMatrix::zero(p);
    for s in 1..n {
        for l in 0..n {
            let v = spec.f.get(s, l) * &d[(s + l) % n] / &d[l];
            f.set(s, p.residue(l as i64 - k), v).unwrap();
        }
    }
    MoisSpec::new(&spec.alpha + &Scalar::from_int(k), spec.beta.clone(), f).unwrap()
}

/// Up to `terms` tensor terms `L_s ⊗ v_w` with `s ∉ pℤ`, `|s|, |w| ≤ window`.
pub fn random_tensor(rng: &mut StdRng, spec: &MoisSpec, window: i64, terms: usize) -> TensorVector {
    let p = spec.p();
    let basis = spec.window_basis(window);
    let mut t = TensorVector::zero();
    for _ in 0..terms {
        let s = loop {
            let s = rng.gen_range(-window..=window);
            if !p.divides(s) {
                break s;
            }
        };
        let w = basis[rng.gen_range(0..basis.len())];
        t.add_term((s, w), nonzero(rng));
    }
    t
}

/// A random element of `J`: sums of `L_s ⊗ v_w - L_{s+pk} ⊗ v_{w-pk}` and of
/// single terms `L_s ⊗ v_w` with `f[s̄][w̄] = 0`.
pub fn random_j_element(rng: &mut StdRng, spec: &MoisSpec, window: i64, terms: usize) -> TensorVector {
    let p = spec.p();
    let pp = p.as_i64();
    let basis = spec.window_basis(window);
    let mut t = TensorVector::zero();
    for _ in 0..terms {
        let s = loop {
            let s = rng.gen_range(-window..=window);
            if !p.divides(s) {
                break s;
            }
        };
        let w = basis[rng.gen_range(0..basis.len())];
        let c = nonzero(rng);
        if spec.f.entry(s, w).is_zero() {
            t.add_term((s, w), c);
        } else {
            let k = pp * rng.gen_range(-2..=2);
            t.add_term((s, w), c.clone());
            t.add_term((s + k, w - k), -c);
        }
    }
    t
}
