//! Resolution by explicit point blow-ups in affine charts, written without
//! the fan machinery of the library, plus a term-by-term zeta evaluator.

use std::collections::BTreeSet;

use idealzeta::{ComponentKind, ResolutionGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    X,
    Y,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub label: Label,
    pub n: i64,
    pub nu: i64,
    pub att: i64,
    pub ray: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartResolution {
    /// X, then exceptional curves in chain order, then Y.
    pub nodes: Vec<Node>,
    /// Pairs of indices into `nodes` of curves meeting over the origin.
    pub meets: Vec<(usize, usize)>,
}

impl ChartResolution {
    pub fn exceptional(&self) -> Vec<&Node> {
        self.nodes.iter().filter(|n| n.label == Label::E).collect()
    }

    /// Curves with positive multiplicity (axes of multiplicity 0 are dropped).
    pub fn support(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].n > 0).collect()
    }
}

/// Resolves the monomial ideal with exponent pairs `gens` by repeatedly
/// blowing up the chart origins where the pulled-back ideal is not principal.
pub fn chart_blowup_resolve(gens: &[(i64, i64)]) -> ChartResolution {
    let min_a = gens.iter().map(|g| g.0).min().unwrap();
    let min_b = gens.iter().map(|g| g.1).min().unwrap();
    let x = Node { label: Label::X, n: min_a, nu: 1, att: 0, ray: (1, 0) };
    let y = Node { label: Label::Y, n: min_b, nu: 1, att: 0, ray: (0, 1) };
    let mut exc = Vec::new();
    let mut order = Vec::new();
    let mut meets = Vec::new();
    // indices: 0 = X, usize::MAX = Y, exceptional k -> k + 1 before renumbering
    resolve_point(&x, 0, &y, usize::MAX, gens.to_vec(), &mut exc, &mut order, &mut meets);
    let count = exc.len();
    let mut rank = vec![0; count];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r + 1;
    }
    let mut nodes = vec![x];
    nodes.extend(order.iter().map(|&i| exc[i].clone()));
    nodes.push(y);
    let map = |i: usize| if i == 0 { 0 } else if i == usize::MAX { count + 1 } else { rank[i - 1] };
    let mut out_meets: Vec<(usize, usize)> = meets.into_iter().map(|(a, b)| {
        let (a, b) = (map(a), map(b));
        (a.min(b), a.max(b))
    }).collect();
    out_meets.sort();
    ChartResolution { nodes, meets: out_meets }
}

#[allow(clippy::too_many_arguments)]
fn resolve_point(
    u: &Node,
    ui: usize,
    v: &Node,
    vi: usize,
    gens: Vec<(i64, i64)>,
    exc: &mut Vec<Node>,
    order: &mut Vec<usize>,
    meets: &mut Vec<(usize, usize)>,
) {
    let min_a = gens.iter().map(|g| g.0).min().unwrap();
    let min_b = gens.iter().map(|g| g.1).min().unwrap();
    if gens.contains(&(min_a, min_b)) {
        meets.push((ui, vi));
        return;
    }
    // chart 1: (u, v) = (u, u v'), exceptional curve is u = 0
    let chart1: Vec<(i64, i64)> = gens.iter().map(|&(a, b)| (a + b, b)).collect();
    // chart 2: (u, v) = (u' v, v), exceptional curve is v = 0
    let chart2: Vec<(i64, i64)> = gens.iter().map(|&(a, b)| (a, a + b)).collect();
    let n = chart1.iter().map(|g| g.0).min().unwrap();
    let bs: Vec<i64> = chart1.iter().filter(|g| g.0 == n).map(|g| g.1).collect();
    let att = bs.iter().max().unwrap() - bs.iter().min().unwrap();
    let node = Node {
        label: Label::E,
        n,
        nu: u.nu + v.nu,
        att,
        ray: (u.ray.0 + v.ray.0, u.ray.1 + v.ray.1),
    };
    exc.push(node.clone());
    let ei = exc.len();
    resolve_point(u, ui, &node, ei, chart2, exc, order, meets);
    order.push(ei - 1);
    resolve_point(&node, ei, v, vi, chart1, exc, order, meets);
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Compares a library graph with the chart resolution: exceptional data in
/// id order, axes, intersections and branch records.
pub fn graphs_equal(g: &ResolutionGraph, o: &ChartResolution) -> Result<(), String> {
    let exc: Vec<_> = g.exceptional().collect();
    let oexc = o.exceptional();
    if exc.len() != oexc.len() {
        return Err(format!("{} exceptional curves, oracle has {}", exc.len(), oexc.len()));
    }
    for (k, (c, n)) in exc.iter().zip(&oexc).enumerate() {
        if c.id != k + 1 {
            return Err(format!("exceptional ids not 1..n: {}", c.id));
        }
        let ray = match &c.kind {
            ComponentKind::Exceptional { ray: Some(r) } => (r.p().clone(), r.q().clone()),
            other => return Err(format!("E_{} has kind {other:?}", c.id)),
        };
        if (c.n.clone(), c.nu.clone(), c.att as i64, ray.clone()) != (big(n.n), big(n.nu), n.att, (big(n.ray.0), big(n.ray.1))) {
            return Err(format!(
                "E_{}: (N, nu, att, ray) = ({}, {}, {}, {:?}), oracle {:?}",
                c.id, c.n, c.nu, c.att, ray, n
            ));
        }
        if !(c.compact && c.in_fiber) {
            return Err(format!("E_{} must be compact and in the fiber", c.id));
        }
        if g.branches_of(c.id).count() as i64 != n.att {
            return Err(format!("E_{} has the wrong number of branch records", c.id));
        }
    }
    // map oracle node index -> library id
    let mut ids = vec![None; o.nodes.len()];
    for (k, c) in exc.iter().enumerate() {
        ids[k + 1] = Some(c.id);
    }
    for (idx, kind) in [(0, ComponentKind::AxisX), (o.nodes.len() - 1, ComponentKind::AxisY)] {
        let found: Vec<_> = g.components().iter().filter(|c| c.kind == kind).collect();
        let want = o.nodes[idx].n;
        match (found.as_slice(), want) {
            ([], 0) => {}
            ([c], w) if w > 0 && c.n == big(w) && c.nu == BigInt::one() => ids[idx] = Some(c.id),
            _ => return Err(format!("axis {kind:?}: library {found:?}, oracle N = {want}")),
        }
    }
    let lib_edges: BTreeSet<(usize, usize, u64)> = g.edges().iter().map(|e| (e.a.min(e.b), e.a.max(e.b), e.mult)).collect();
    let oracle_edges: BTreeSet<(usize, usize, u64)> = o
        .meets
        .iter()
        .filter_map(|&(a, b)| Some((ids[a]?, ids[b]?)))
        .map(|(a, b)| (a.min(b), a.max(b), 1))
        .collect();
    if lib_edges != oracle_edges {
        return Err(format!("edges {lib_edges:?}, oracle {oracle_edges:?}"));
    }
    let total: i64 = o.support().len() as i64 + oexc.iter().map(|n| n.att).sum::<i64>();
    if g.components().len() as i64 != total {
        return Err(format!("{} components, oracle expects {total}", g.components().len()));
    }
    Ok(())
}

/// `Z_top^(d)` at the rational point `s`, summed stratum by stratum over the
/// chart resolution.
pub fn zeta_term_by_term(o: &ChartResolution, d: i64, s: &BigRational) -> BigRational {
    let term = |node: &Node| BigRational::one() / (BigRational::from_integer(big(node.n)) * s + BigRational::from_integer(big(node.nu)));
    let divisible = |node: &Node| node.n > 0 && node.n % d == 0;
    let support = o.support();
    let in_s = |i: usize| o.nodes[i].n > 0;
    let mut total = BigRational::zero();
    let exc_idx: Vec<usize> = (0..o.nodes.len()).filter(|&i| o.nodes[i].label == Label::E).collect();
    if exc_idx.is_empty() {
        // the fiber is the origin; it lies on every curve of the support
        match support.as_slice() {
            [a] if divisible(&o.nodes[*a]) => total += term(&o.nodes[*a]),
            [a, b] if divisible(&o.nodes[*a]) && divisible(&o.nodes[*b]) => {
                total += term(&o.nodes[*a]) * term(&o.nodes[*b])
            }
            _ => {}
        }
        return total;
    }
    for &i in &exc_idx {
        let k = o.meets.iter().filter(|&&(a, b)| (a == i && in_s(b)) || (b == i && in_s(a))).count() as i64;
        if divisible(&o.nodes[i]) {
            total += term(&o.nodes[i]) * BigRational::from_integer(big(2 - k));
        }
    }
    for &(a, b) in &o.meets {
        if in_s(a) && in_s(b) && divisible(&o.nodes[a]) && divisible(&o.nodes[b]) {
            total += term(&o.nodes[a]) * term(&o.nodes[b]);
        }
    }
    total
}
