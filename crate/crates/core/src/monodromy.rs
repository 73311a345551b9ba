//! Monodromy eigenvalues of an ideal from its resolution graph.
//!
//! For each point `e` of the exceptional set of the blow-up of the ideal
//! over the origin, `Z_e(t) = prod (1 - t^N_j)^chi(E_j° ∩ φ⁻¹(e))`; the
//! eigenvalues are the zeros and poles of these products. Points are taken on
//! the normalised model: each Rees component contributes its generic point
//! and each maximal connected set of contracted fiber components one point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::ResolutionGraph;

/// Formal product `prod (1 - t^N)^a` with nonzero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CyclotomicProduct {
    exponents: BTreeMap<BigInt, i64>,
}

impl CyclotomicProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn multiply(&mut self, n: BigInt, a: i64) {
        let e = self.exponents.entry(n.clone()).or_default();
        *e += a;
        if *e == 0 {
            self.exponents.remove(&n);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<BigInt, i64> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Orders `m` of the roots of unity that are zeros or poles.
    pub fn root_orders(&self) -> BTreeSet<BigInt> {
        let mut out = BTreeSet::new();
        for n in self.exponents.keys() {
            for m in divisors(n) {
                if out.contains(&m) {
                    continue;
                }
                let order: i64 = self
                    .exponents
                    .iter()
                    .filter(|(k, _)| k.is_multiple_of(&m))
                    .map(|(_, a)| a)
                    .sum();
                if order != 0 {
                    out.insert(m);
                }
            }
        }
        out
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (n, a) in &self.exponents {
            if n.is_one() {
                write!(f, "(1-t)^{a}")?;
            } else {
                write!(f, "(1-t^{n})^{a}")?;
            }
        }
        Ok(())
    }
}

/// Positive divisors in increasing order, via trial-division factorisation.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut rest = n.abs();
    if rest.is_zero() {
        return Vec::new();
    }
    let mut out = vec![BigInt::one()];
    let push_prime_power = |p: &BigInt, e: u32, out: &mut Vec<BigInt>| {
        let base = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * &pk));
        }
    };
    let two = BigInt::from(2);
    let mut p = two.clone();
    while &p * &p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            push_prime_power(&p, e, &mut out);
        }
        p += if p == two { 1 } else { 2 };
    }
    if !rest.is_one() {
        push_prime_power(&rest, 1, &mut out);
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FiberPoint {
    /// A general point of a Rees component.
    GenericOnRees(usize),
    /// The image of a maximal connected set of contracted fiber components.
    ContractedChain(BTreeSet<usize>),
    /// The fiber is the origin itself (no exceptional curves).
    Origin,
}

pub fn fiber_points(g: &ResolutionGraph) -> Vec<FiberPoint> {
    let fiber = g.fiber_ids();
    if fiber.is_empty() {
        return vec![FiberPoint::Origin];
    }
    let mut points = Vec::new();
    let mut contracted: BTreeSet<usize> = BTreeSet::new();
    for &id in &fiber {
        let c = g.component(id).expect("fiber id exists");
        if c.is_rees() {
            points.push(FiberPoint::GenericOnRees(id));
        } else {
            contracted.insert(id);
        }
    }
    while let Some(&start) = contracted.iter().next() {
        let mut chain = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(id) = stack.pop() {
            if !contracted.remove(&id) {
                continue;
            }
            chain.insert(id);
            stack.extend(g.neighbors(id).map(|(j, _)| j).filter(|j| contracted.contains(j)));
        }
        points.push(FiberPoint::ContractedChain(chain));
    }
    points.sort();
    points
}

pub fn local_zeta_at(g: &ResolutionGraph, point: &FiberPoint) -> CyclotomicProduct {
    let mut z = CyclotomicProduct::new();
    match point {
        FiberPoint::GenericOnRees(id) => {
            // degree onto the image taken as 1
            z.multiply(g.component(*id).expect("known id").n.clone(), 1);
        }
        FiberPoint::ContractedChain(ids) => {
            for &id in ids {
                let c = g.component(id).expect("known id");
                if c.in_s() {
                    z.multiply(c.n.clone(), g.chi_open(id).expect("known id"));
                }
            }
        }
        FiberPoint::Origin => {
            let strata = g.fiber_strata();
            for (&id, &chi) in &strata.singles {
                z.multiply(g.component(id).expect("known id").n.clone(), chi);
            }
        }
    }
    z
}

/// Orders of the roots of unity occurring as eigenvalues of monodromy at
/// points over the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueOrders {
    orders: BTreeSet<BigInt>,
}

impl EigenvalueOrders {
    pub fn orders(&self) -> &BTreeSet<BigInt> {
        &self.orders
    }

    pub fn contains(&self, m: &BigInt) -> bool {
        self.orders.contains(m)
    }

    /// Whether `d` divides the order of some eigenvalue.
    pub fn divides_some_order(&self, d: &BigInt) -> bool {
        !d.is_zero() && self.orders.iter().any(|m| m.is_multiple_of(d))
    }
}

impl fmt::Display for EigenvalueOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Eigenvalue orders over all fiber points.
///
/// Order 1 is always present (degree-zero cohomology). When no component is
/// Rees the ideal is principal, `(f)` with `f = prod f_i^m_i`, and its Milnor
/// fiber has `gcd(m_i)` components permuted cyclically by the monodromy; those
/// roots of unity are added since the alternating zeta product can cancel them.
pub fn eigenvalue_orders(g: &ResolutionGraph) -> EigenvalueOrders {
    let mut orders: BTreeSet<BigInt> = fiber_points(g)
        .iter()
        .flat_map(|p| local_zeta_at(g, p).root_orders())
        .collect();
    if !g.components().iter().any(|c| c.is_rees()) {
        let gcd = g
            .components()
            .iter()
            .filter(|c| c.in_s() && !c.compact)
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c.n));
        orders.extend(divisors(&gcd));
    }
    orders.insert(BigInt::one());
    EigenvalueOrders { orders }
}
