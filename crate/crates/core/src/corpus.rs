//! The five worked examples of small-p matrices, with their documented
//! verdicts. All carry `α = 1/2`, `β = 2/3`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::mois::{linkage_graph, validate_f, MoisSpec, Witness};

pub const EX1: &str = include_str!("../fixtures/ex1.json");
pub const EX2: &str = include_str!("../fixtures/ex2.json");
pub const EX3: &str = include_str!("../fixtures/ex3.json");
pub const EX4: &str = include_str!("../fixtures/ex4.json");
pub const EX5: &str = include_str!("../fixtures/ex5.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "expect", rename_all = "snake_case")]
pub enum Expected {
    /// Valid, with exactly these linkage edges `(from, to)`.
    Valid { edges: Vec<(usize, usize)>, strongly_connected: bool },
    /// Rejected by condition (III) at `(r, s, i)`.
    Invalid { r: usize, s: usize, i: usize },
}

#[derive(Clone, Debug)]
pub struct Example {
    pub number: u8,
    pub spec: MoisSpec,
    pub expected: Expected,
}

fn full_cycle_edges(p: usize, steps: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = steps.iter().flat_map(|&s| (0..p).map(move |j| (j, (j + s) % p))).collect();
    out.sort_unstable();
    out
}

pub fn examples() -> Result<Vec<Example>> {
    let parse = |text: &str| -> Result<MoisSpec> { Ok(serde_json::from_str(text)?) };
    Ok(vec![
        Example {
            number: 1,
            spec: parse(EX1)?,
            expected: Expected::Valid { edges: vec![(0, 1), (1, 2), (2, 0)], strongly_connected: true },
        },
        Example {
            number: 2,
            spec: parse(EX2)?,
            expected: Expected::Valid { edges: vec![(0, 2), (2, 0)], strongly_connected: true },
        },
        Example {
            number: 3,
            spec: parse(EX3)?,
            expected: Expected::Valid { edges: full_cycle_edges(5, &[1, 2]), strongly_connected: true },
        },
        Example { number: 4, spec: parse(EX4)?, expected: Expected::Invalid { r: 2, s: 1, i: 0 } },
        Example {
            number: 5,
            spec: parse(EX5)?,
            expected: Expected::Valid { edges: vec![(0, 8), (4, 0), (8, 4)], strongly_connected: true },
        },
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub number: u8,
    pub valid: bool,
    pub edges: Vec<(usize, usize)>,
    pub strongly_connected: bool,
    pub witness: Option<Witness>,
    pub matches: bool,
}

/// Recomputes validity and linkage and compares them with the expectation.
pub fn check_example(ex: &Example) -> ExampleOutcome {
    let report = validate_f(&ex.spec.f);
    let valid = report.is_valid();
    let witness = report.first_failure().and_then(|c| c.witness.clone());
    let graph = linkage_graph(&ex.spec.f);
    let edges: Vec<(usize, usize)> =
        graph.edges.iter().map(|e| (e.from, e.to)).collect::<BTreeSet<_>>().into_iter().collect();
    let matches = match &ex.expected {
        Expected::Valid { edges: want, strongly_connected } => {
            valid && &edges == want && graph.strongly_connected == *strongly_connected
        }
        Expected::Invalid { r, s, i } => {
            matches!(&witness, Some(Witness::Commutation { r: wr, s: ws, i: wi, .. }) if (wr, ws, wi) == (r, s, i))
        }
    };
    ExampleOutcome { number: ex.number, valid, edges, strongly_connected: graph.strongly_connected, witness, matches }
}
