use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{
    closed_form_mu, designated_m, orbit, period_composition, require_torus, EpsPowers, OrbitReport,
};
use crate::augment::Augmentation;
use crate::error::{Error, Result};

/// Evidence that the degree-0 monodromy of the `(p, q)` torus knot has order
/// `p + q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub p: u32,
    pub q: u32,
    /// `ε∘μ^{p+q} = ε` on every crossing.
    pub eps_stable: bool,
    /// Smallest `k ≥ 1` with `ε∘μᵏ = ε`, searched up to `p + q`.
    pub eps_first_return: Option<usize>,
    /// The designated orbit; its 0-1-sequence has minimal period `p + q`.
    pub orbit: OrbitReport,
    pub lower_bound: bool,
    /// One period of holonomies equals the closed form as polynomials;
    /// None when the word is above `max_symbolic`.
    pub period_chain_check: Option<bool>,
    pub order: Option<u32>,
}

impl OrderCertificate {
    pub fn certified(&self) -> bool {
        self.order == Some(self.p + self.q)
    }
}

pub fn certify_order(p: u32, q: u32, max_symbolic: usize) -> Result<OrderCertificate> {
    if p < 2 || q < 2 {
        return Err(Error::Precondition(format!("need p, q >= 2, got ({p}, {q})")));
    }
    let gcd = p.gcd(&q);
    if gcd != 1 {
        return Err(Error::NotCoprime { p, q, gcd });
    }
    let b = require_torus(p, q)?;
    let x = Augmentation::construct(&b)?;
    let total = (p + q) as usize;
    let powers = EpsPowers::new(p, q, &x, total)?;
    let eps_stable = powers.at(total) == powers.at(0);

    let m = designated_m(p, q).expect("coprime p, q >= 2 always have a designated orbit");
    let orbit = orbit(p, q, m)?;
    let lower_bound = orbit.minimal_period == total && orbit.consistent();

    let period_chain_check = if b.len() <= max_symbolic {
        Some(period_composition(p, q)? == closed_form_mu(p, q)?)
    } else {
        None
    };

    let order = (eps_stable && lower_bound && period_chain_check != Some(false)).then_some(p + q);
    Ok(OrderCertificate {
        p,
        q,
        eps_stable,
        eps_first_return: powers.first_return(),
        orbit,
        lower_bound,
        period_chain_check,
        order,
    })
}
