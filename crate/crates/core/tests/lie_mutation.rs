//! The axiom checker must notice altered structure constants.

use gapvir::algebra::{
    check_lie_axioms_with, window_generators, AlgebraElement, LieViolation, Standard, StructureConstants,
};
use gapvir::{GapParam, Generator, Scalar};

/// `Standard`, except that one coefficient of `[x, y]` (and the matching one
/// of `[y, x]`) is shifted by `delta`.
struct Mutated {
    x: Generator,
    y: Generator,
    target: Generator,
    delta: Scalar,
}

impl StructureConstants for Mutated {
    fn bracket_generators(&self, p: GapParam, a: Generator, b: Generator) -> AlgebraElement {
        let mut out = Standard.bracket_generators(p, a, b);
        if (a, b) == (self.x, self.y) {
            out.add_term(self.target, self.delta.clone());
        } else if (a, b) == (self.y, self.x) {
            out.add_term(self.target, -self.delta.clone());
        }
        out
    }
}

/// `[L_m, L_n] = (n + m) L_{m+n}` on `pℤ`: the sign slip of the Witt rule.
struct WrongSign;

impl StructureConstants for WrongSign {
    fn bracket_generators(&self, p: GapParam, a: Generator, b: Generator) -> AlgebraElement {
        match (a, b) {
            (Generator::L(m), Generator::L(n)) if p.divides(m) && p.divides(n) => {
                AlgebraElement::term(p, Generator::L(m + n), Scalar::from_int(n + m))
            }
            _ => Standard.bracket_generators(p, a, b),
        }
    }
}

#[test]
fn every_single_constant_mutation_is_caught() {
    for p in [2, 3] {
        let p = GapParam::new(p).unwrap();
        let small = window_generators(p, p.as_i64() + 1);
        let mut mutations = 0;
        for &x in &small {
            for &y in &small {
                if x >= y {
                    continue;
                }
                let bracket = Standard.bracket_generators(p, x, y);
                for (target, _) in bracket.terms() {
                    let rules = Mutated { x, y, target, delta: Scalar::ratio(1, 3) };
                    let report = check_lie_axioms_with(&rules, p, 3 * p.as_i64() + 2);
                    assert!(!report.passed(), "p = {p}: [{x}, {y}] shifted on {target} went unnoticed");
                    mutations += 1;
                }
            }
        }
        assert!(mutations > 10);
    }
}

#[test]
fn one_sided_mutation_breaks_antisymmetry() {
    struct OneSided;
    impl StructureConstants for OneSided {
        fn bracket_generators(&self, p: GapParam, a: Generator, b: Generator) -> AlgebraElement {
            let mut out = Standard.bracket_generators(p, a, b);
            if (a, b) == (Generator::L(1), Generator::L(2)) {
                out.add_term(Generator::L(3), Scalar::one());
            }
            out
        }
    }
    let report = check_lie_axioms_with(&OneSided, GapParam::new(3).unwrap(), 4);
    assert!(report
        .violations
        .iter()
        .any(|v| matches!(v, LieViolation::Antisymmetry { x: Generator::L(1), y: Generator::L(2), .. })));
}

#[test]
fn wrong_sign_witt_rule_is_caught() {
    for p in [2, 3, 5] {
        let p = GapParam::new(p).unwrap();
        let pp = p.as_i64();
        let report = check_lie_axioms_with(&WrongSign, p, 2 * pp);
        assert!(report.violations.iter().any(|v| matches!(
            v,
            LieViolation::Antisymmetry { x: Generator::L(a), y: Generator::L(b), .. } if (*a, *b) == (pp, 2 * pp)
        )));
    }
}

/// With `C_i` and `C_{p-i}` kept apart, `[L_r, L_{-r}] = r C_{r̄}` is not
/// antisymmetric for `p ≥ 3`: the two orders land on different slots.
#[test]
fn unfolded_heisenberg_cocycle_is_not_antisymmetric() {
    let p = 3i64;
    // coordinates on C_0..C_{p-1}, kept separate
    let literal = |r: i64, s: i64| -> Vec<i64> {
        let mut c = vec![0; p as usize];
        if r + s == 0 {
            c[r.rem_euclid(p) as usize] += r;
        }
        c
    };
    let sum: Vec<i64> = literal(1, -1).iter().zip(literal(-1, 1)).map(|(a, b)| a + b).collect();
    assert_eq!(sum, vec![0, 1, -1]);

    let gp = GapParam::new(p).unwrap();
    let folded = Standard
        .bracket_generators(gp, Generator::L(1), Generator::L(-1))
        .checked_add(&Standard.bracket_generators(gp, Generator::L(-1), Generator::L(1)))
        .unwrap();
    assert!(folded.is_zero());
}
