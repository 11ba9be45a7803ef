//! Markov numbers from the Markov-equation tree, independent of any
//! continuant computation.
//!
//! The tree is indexed by the Stern–Brocot tree on `[0, 1]`: `0/1 ↦ 1`,
//! `1/1 ↦ 2`, and the mediant of an adjacent pair with values `(a, b)` gets
//! `3ab - d`, where `d` is the value that completed the triple `(a, b, d)`
//! one level up.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleNode {
    pub left: (u32, u32),
    pub right: (u32, u32),
    #[serde(with = "crate::serde_decimal")]
    pub left_value: BigUint,
    #[serde(with = "crate::serde_decimal")]
    pub right_value: BigUint,
    #[serde(with = "crate::serde_decimal")]
    pub excluded_value: BigUint,
}

impl TripleNode {
    fn root() -> Self {
        TripleNode {
            left: (0, 1),
            right: (1, 1),
            left_value: BigUint::from(1u32),
            right_value: BigUint::from(2u32),
            excluded_value: BigUint::from(1u32),
        }
    }

    pub fn mediant(&self) -> (u32, u32) {
        (self.left.0 + self.right.0, self.left.1 + self.right.1)
    }

    pub fn mediant_value(&self) -> BigUint {
        BigUint::from(3u32) * &self.left_value * &self.right_value - &self.excluded_value
    }

    /// `a² + b² + c² = 3abc` for `(a, b, c) = (left, right, mediant)`.
    pub fn satisfies_markov_equation(&self) -> bool {
        let (a, b, c) = (&self.left_value, &self.right_value, self.mediant_value());
        a * a + b * b + &c * &c == BigUint::from(3u32) * a * b * &c
    }

    fn left_child(&self) -> Self {
        TripleNode {
            left: self.left,
            right: self.mediant(),
            left_value: self.left_value.clone(),
            right_value: self.mediant_value(),
            excluded_value: self.right_value.clone(),
        }
    }

    fn right_child(&self) -> Self {
        TripleNode {
            left: self.mediant(),
            right: self.right,
            left_value: self.mediant_value(),
            right_value: self.right_value.clone(),
            excluded_value: self.left_value.clone(),
        }
    }
}

/// The Markov number at the reduced fraction `p/q`, `0 <= p <= q`.
pub fn triple_tree_oracle(p: u32, q: u32) -> Result<BigUint> {
    triple_tree_path(p, q).map(|(value, _)| value)
}

/// The oracle value together with every tree node visited on the way down.
pub fn triple_tree_path(p: u32, q: u32) -> Result<(BigUint, Vec<TripleNode>)> {
    if q == 0 || p > q {
        return Err(Error::IndexOutOfRange {
            p: p.into(),
            q: q.into(),
        });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotReduced { p, q });
    }
    match (p, q) {
        (0, 1) => return Ok((BigUint::from(1u32), Vec::new())),
        (1, 1) => return Ok((BigUint::from(2u32), Vec::new())),
        _ => {}
    }
    let mut node = TripleNode::root();
    let mut path = Vec::new();
    loop {
        let (mp, mq) = node.mediant();
        let (target, med) = (u64::from(p) * u64::from(mq), u64::from(mp) * u64::from(q));
        if target == med {
            let value = node.mediant_value();
            path.push(node);
            return Ok((value, path));
        }
        let next = if target < med {
            node.left_child()
        } else {
            node.right_child()
        };
        path.push(node);
        node = next;
    }
}

/// Every tree node whose mediant has denominator at most `max_q`, in
/// depth-first order. Each reduced `p/q` in `(0, 1)` with `q <= max_q`
/// appears as exactly one mediant.
pub fn triple_tree(max_q: u32) -> Vec<TripleNode> {
    let mut out = Vec::new();
    let mut stack = vec![TripleNode::root()];
    while let Some(node) = stack.pop() {
        if node.mediant().1 > max_q {
            continue;
        }
        stack.push(node.right_child());
        stack.push(node.left_child());
        out.push(node);
    }
    out
}
