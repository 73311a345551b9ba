//! Toric log-principalisation of a monomial ideal.
//!
//! The fan is the normal fan of the Newton polygon refined to a smooth fan.
//! A general member of the ideal is Newton-nondegenerate, so the same fan
//! resolves it: its strict transform meets the exceptional curve of an
//! edge normal in `lattice_length` smooth transverse branches.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Component, ComponentKind, Edge, ResolutionGraph};
use crate::ideal::{newton_polygon, support_value, MonomialIdeal};
use crate::lattice::{smooth_subdivide, Cone2, Ray};

/// Upper bound on the number of branch records a graph may carry.
pub const MAX_BRANCHES: u64 = 1 << 20;

/// Rays of the smooth fan from `(1,0)` to `(0,1)`, both included.
pub fn smooth_fan(ideal: &MonomialIdeal) -> Vec<Ray> {
    let np = newton_polygon(ideal);
    let mut coarse: Vec<Ray> = np.compact_edges.iter().map(|e| e.normal.clone()).collect();
    coarse.sort_by(|a, b| a.angular_cmp(b));
    coarse.dedup();
    coarse.insert(0, Ray::x_axis());
    coarse.push(Ray::y_axis());

    let mut fan = vec![coarse[0].clone()];
    for pair in coarse.windows(2) {
        let cone = Cone2::new(pair[0].clone(), pair[1].clone()).expect("edge normals lie strictly inside the quadrant");
        fan.extend(smooth_subdivide(&cone));
        fan.push(pair[1].clone());
    }
    fan
}

pub fn principalise(ideal: &MonomialIdeal) -> Result<ResolutionGraph> {
    let np = newton_polygon(ideal);
    let fan = smooth_fan(ideal);
    let interior = &fan[1..fan.len() - 1];

    let mut components = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    for (i, ray) in interior.iter().enumerate() {
        let att = match np.compact_edges.iter().find(|e| &e.normal == ray) {
            Some(e) => e
                .lattice_length
                .to_u64()
                .filter(|&n| n <= MAX_BRANCHES)
                .ok_or(Error::TooLarge("number of branches"))?,
            None => 0,
        };
        components.push(Component {
            id: i + 1,
            kind: ComponentKind::Exceptional { ray: Some(ray.clone()) },
            n: support_value(&np, ray),
            nu: ray.p() + ray.q(),
            att,
            compact: true,
            in_fiber: true,
        });
        chain.push(i + 1);
    }

    let mut next = interior.len() + 1;
    let h = ideal.h();
    for (kind, n) in [(ComponentKind::AxisX, &h.a), (ComponentKind::AxisY, &h.b)] {
        if n.is_zero() {
            continue;
        }
        let axis = Component {
            id: next,
            kind: kind.clone(),
            n: n.clone(),
            nu: BigInt::from(1),
            att: 0,
            compact: false,
            in_fiber: false,
        };
        if kind == ComponentKind::AxisX {
            chain.insert(0, next);
        } else {
            chain.push(next);
        }
        components.push(axis);
        next += 1;
    }

    let edges = chain
        .windows(2)
        .map(|w| Edge {
            a: w[0].min(w[1]),
            b: w[0].max(w[1]),
            mult: 1,
        })
        .collect();

    let hosts: Vec<(usize, u64)> = components
        .iter()
        .filter(|c| c.att > 0)
        .map(|c| (c.id, c.att))
        .collect();
    for (host, att) in hosts {
        for _ in 0..att {
            components.push(Component {
                id: next,
                kind: ComponentKind::Branch { host },
                n: BigInt::from(1),
                nu: BigInt::from(1),
                att: 0,
                compact: false,
                in_fiber: false,
            });
            next += 1;
        }
    }
    ResolutionGraph::new(components, edges, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::parse_ideal;

    fn data(g: &ResolutionGraph) -> Vec<(i64, i64)> {
        g.exceptional()
            .map(|c| ((&c.n).try_into().unwrap(), (&c.nu).try_into().unwrap()))
            .collect()
    }

    fn graph(s: &str) -> ResolutionGraph {
        principalise(&parse_ideal(s).unwrap()).unwrap()
    }

    #[test]
    fn example_ideal_chain() {
        let g = graph("x^2*y^4, x^34, y^6");
        assert_eq!(
            data(&g),
            vec![(6, 2), (10, 3), (14, 4), (18, 5), (22, 6), (26, 7), (30, 8), (34, 9)]
        );
        let rees: Vec<usize> = g.exceptional().filter(|c| c.is_rees()).map(|c| c.id).collect();
        assert_eq!(rees, vec![1, 8]);
        assert_eq!(g.component(1).unwrap().att, 2);
        assert_eq!(g.component(8).unwrap().att, 4);
        assert_eq!(g.edges().len(), 7);
        assert_eq!(g.components().len(), 14);
    }

    #[test]
    fn cusp_ideal_chain() {
        let g = graph("x^2, y^3");
        assert_eq!(data(&g), vec![(3, 3), (6, 5), (2, 2)]);
        let rays: Vec<String> = g
            .exceptional()
            .map(|c| match &c.kind {
                ComponentKind::Exceptional { ray: Some(r) } => r.to_string(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(rays, vec!["(2,1)", "(3,2)", "(1,1)"]);
        let att: Vec<u64> = g.exceptional().map(|c| c.att).collect();
        assert_eq!(att, vec![0, 1, 0]);
        assert_eq!(g.chi_open(2).unwrap(), 0);
        assert_eq!(g.chi_open(1).unwrap(), 1);
    }

    #[test]
    fn principal_ideals() {
        let g = graph("x^5");
        assert_eq!(g.exceptional().count(), 0);
        assert_eq!(g.components().len(), 1);
        assert_eq!(g.components()[0].kind, ComponentKind::AxisX);
        assert_eq!(g.components()[0].n, BigInt::from(5));
        assert_eq!(g.fiber_strata().single(1), 1);

        let g = graph("x^2*y^3");
        assert_eq!(g.components().len(), 2);
        let s = g.fiber_strata();
        assert_eq!((s.single(1), s.single(2), s.pair(1, 2)), (0, 0, 1));
    }

    #[test]
    fn chi_open_on_example() {
        let g = graph("x^2*y^4, x^34, y^6");
        assert_eq!(g.chi_open(2).unwrap(), 0);
        assert_eq!(g.chi_open(7).unwrap(), 0);
        assert_eq!(g.chi_open(1).unwrap(), 1);
        assert_eq!(g.chi_open(99), Err(Error::UnknownId(99)));
        assert_eq!(g.k_prime(1).unwrap(), 3);
        assert_eq!(g.k_prime(8).unwrap(), 5);
    }

    #[test]
    fn fiber_strata_on_example() {
        let g = graph("x^2*y^4, x^34, y^6");
        let s = g.fiber_strata();
        assert_eq!(s.single(1), 1);
        assert_eq!(s.single(8), 1);
        for i in 2..=7 {
            assert_eq!(s.single(i), 0);
        }
        assert_eq!(s.pairs.len(), 7);
        assert!(s.pairs.values().all(|&v| v == 1));
        assert_eq!(s.total(), 9);
    }

    #[test]
    fn axes_join_the_chain() {
        // x^2 * (x^2, y): AxisX -- E(1,1) -- E(1,2)
        let g = graph("x^4, x^2*y");
        assert_eq!(data(&g), vec![(3, 2), (4, 3)]);
        let axis = g.components().iter().find(|c| c.kind == ComponentKind::AxisX).unwrap();
        assert_eq!(axis.n, BigInt::from(2));
        assert_eq!(g.edge_mult(axis.id, 1), 1);
        assert_eq!(g.k(1).unwrap(), 2);
        assert_eq!(g.fiber_strata().single(axis.id), 0);
        assert_eq!(g.fiber_strata().total(), 3);
    }
}
