#![allow(dead_code)]

use proptest::prelude::*;
use qgame_core::tensor::su2_from_angles;
use qgame_core::{LocalUnitary, Matrix2, OperatorPair, PureState, StrategyAssignment, C64};

pub fn angle() -> impl Strategy<Value = f64> {
    -10.0f64..10.0
}

pub fn su2() -> impl Strategy<Value = LocalUnitary> {
    (angle(), angle(), angle()).prop_map(|(a, b, g)| su2_from_angles(a, b, g))
}

pub fn complex() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| C64::new(re, im))
}

/// Random normalized state on `n` qubits.
pub fn state(n: usize) -> impl Strategy<Value = PureState> {
    prop::collection::vec(complex(), 1 << n)
        .prop_filter("nonzero", |v| {
            v.iter().map(|a| a.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|v| PureState::normalized(v).unwrap())
}

pub fn assignment(n: usize) -> impl Strategy<Value = StrategyAssignment> {
    prop::collection::vec((su2(), su2()), n).prop_map(|pairs| {
        StrategyAssignment::new(
            pairs
                .into_iter()
                .map(|(a, b)| OperatorPair::new(a, b))
                .collect(),
        )
        .unwrap()
    })
}

pub fn phase(t: f64) -> C64 {
    C64::from_polar(1.0, t)
}

pub fn scaled(m: &Matrix2, s: C64) -> Matrix2 {
    m.scale(s)
}

use qgame_core::states::{bell_claim_operators, dicke22_operators, eisert_operators};
use qgame_core::tensor::project_to_su2;
use qgame_core::{make_state, StateKind};

pub struct Fixture {
    pub name: String,
    pub state: PureState,
    pub assignment: StrategyAssignment,
}

fn fixture(name: impl Into<String>, state: PureState, assignment: StrategyAssignment) -> Fixture {
    Fixture {
        name: name.into(),
        state,
        assignment,
    }
}

/// Configurations known to be distinguishable, N <= 5.
pub fn passing_fixtures() -> Vec<Fixture> {
    let mut out = vec![
        fixture(
            "bell",
            make_state(StateKind::Bell, 2).unwrap(),
            bell_claim_operators(),
        ),
        fixture(
            "dicke(2,1)",
            make_state(StateKind::Dicke { m: 1 }, 2).unwrap(),
            bell_claim_operators(),
        ),
        fixture(
            "dicke(4,2)",
            make_state(StateKind::Dicke { m: 2 }, 4).unwrap(),
            dicke22_operators(),
        ),
    ];
    for n in [3, 5] {
        out.push(fixture(
            format!("ghz({n})"),
            make_state(StateKind::Ghz, n).unwrap(),
            eisert_operators(n),
        ));
    }
    for n in [2, 4] {
        out.push(fixture(
            format!("ghz_like_i({n})"),
            make_state(StateKind::GhzLikeI, n).unwrap(),
            eisert_operators(n),
        ));
    }
    for n in 1..=4 {
        out.push(fixture(
            format!("product_zero({n})"),
            make_state(StateKind::ProductZero, n).unwrap(),
            eisert_operators(n),
        ));
    }
    out
}

/// Configurations that fail the Gram test, the spectral test, or both.
pub fn failing_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 3..=5 {
        out.push(fixture(
            format!("w({n})"),
            make_state(StateKind::W, n).unwrap(),
            eisert_operators(n),
        ));
    }
    for n in [2, 4] {
        out.push(fixture(
            format!("ghz({n})"),
            make_state(StateKind::Ghz, n).unwrap(),
            eisert_operators(n),
        ));
    }
    for n in [3, 5] {
        out.push(fixture(
            format!("ghz_like_i({n})"),
            make_state(StateKind::GhzLikeI, n).unwrap(),
            eisert_operators(n),
        ));
    }
    let x = project_to_su2(&Matrix2::pauli_x()).unwrap();
    let mut pairs = eisert_operators(3).pairs().to_vec();
    pairs[0] = OperatorPair::new(LocalUnitary::identity(), x);
    out.push(fixture(
        "ghz(3) with sigma_x",
        make_state(StateKind::Ghz, 3).unwrap(),
        StrategyAssignment::new(pairs).unwrap(),
    ));
    let h = project_to_su2(&Matrix2::hadamard()).unwrap();
    out.push(fixture(
        "bell with hadamard",
        make_state(StateKind::Bell, 2).unwrap(),
        StrategyAssignment::uniform(2, OperatorPair::new(LocalUnitary::identity(), h)).unwrap(),
    ));
    out.push(fixture(
        "bell with a generic pair",
        make_state(StateKind::Bell, 2).unwrap(),
        StrategyAssignment::uniform(
            2,
            OperatorPair::new(LocalUnitary::identity(), su2_from_angles(0.3, 0.2, 0.4)),
        )
        .unwrap(),
    ));
    out
}
