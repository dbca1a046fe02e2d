use num_bigint::BigUint;
use serde::Serialize;

use crate::diagram::{is_perfect_square, Sign};
use crate::error::{Error, Result};

/// Weight patterns a cycle in a positive diagram can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CycleShape {
    /// All weights 1.
    TypeA,
    /// Triangle with weights 2, 2, 1.
    TypeB,
    /// Square with weights 2, 1, 2, 1 in cyclic order.
    TypeC,
    NotPositiveShape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SignStatus {
    /// Product of the edge signs is `-1`.
    SignOk,
    SignBad,
}

/// A cycle diagram: weights and signs of its edges in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedCycle {
    pub weights: Vec<u64>,
    pub signs: Vec<Sign>,
}

pub fn cycle_shape(weights: &[u64]) -> CycleShape {
    if weights.iter().all(|&w| w == 1) {
        return CycleShape::TypeA;
    }
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    if sorted == [1, 2, 2] {
        return CycleShape::TypeB;
    }
    if weights.len() == 4 && sorted == [1, 1, 2, 2] && weights[0] == weights[2] {
        return CycleShape::TypeC;
    }
    CycleShape::NotPositiveShape
}

pub fn classify_cycle_diagram(z: &SignedCycle) -> Result<(CycleShape, SignStatus)> {
    let p = z.weights.len();
    if p < 3 {
        return Err(Error::MalformedCycle {
            reason: format!("a cycle needs at least 3 edges, got {}", p),
        });
    }
    if z.signs.len() != p {
        return Err(Error::MalformedCycle {
            reason: format!("{} weights but {} signs", p, z.signs.len()),
        });
    }
    if z.weights.contains(&0) {
        return Err(Error::MalformedCycle {
            reason: "edge weights must be positive".into(),
        });
    }
    let product = z.weights.iter().fold(BigUint::from(1u32), |acc, &w| acc * w);
    if !is_perfect_square(&product) {
        return Err(Error::MalformedCycle {
            reason: format!("weight product {} is not a perfect square", product),
        });
    }
    let sign = z.signs.iter().fold(Sign::Plus, |acc, &s| acc * s);
    let status = if sign == Sign::Minus {
        SignStatus::SignOk
    } else {
        SignStatus::SignBad
    };
    Ok((cycle_shape(&z.weights), status))
}
