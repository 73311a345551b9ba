//! Resolution graphs: the components of a log-principalisation with their
//! numerical data, intersection points, and the strict transform of a
//! general element of the ideal.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::Ray;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    /// Compact exceptional curve; native graphs record the fan ray.
    Exceptional { ray: Option<Ray> },
    /// Strict transform of `{x = 0}`.
    AxisX,
    /// Strict transform of `{y = 0}`.
    AxisY,
    /// Strict transform of some other curve in the zero locus of the ideal
    /// (only in imported graphs).
    Support,
    /// One branch of the strict transform of a general element, meeting `host`.
    Branch { host: usize },
}

impl ComponentKind {
    pub fn is_exceptional(&self) -> bool {
        matches!(self, ComponentKind::Exceptional { .. })
    }

    pub fn is_branch(&self) -> bool {
        matches!(self, ComponentKind::Branch { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    pub kind: ComponentKind,
    /// Multiplicity in the pulled-back ideal (for branches: in the general element).
    pub n: BigInt,
    pub nu: BigInt,
    /// Number of branches of the general element meeting this component.
    pub att: u64,
    pub compact: bool,
    pub in_fiber: bool,
}

impl Component {
    /// Member of the support `S` of the pulled-back ideal.
    pub fn in_s(&self) -> bool {
        !self.kind.is_branch() && self.n.is_positive()
    }

    /// Member of the support `T` of the total transform of a general element.
    pub fn in_t(&self) -> bool {
        self.kind.is_branch() || self.in_s()
    }

    /// Not contracted by the map to the blow-up of the ideal.
    pub fn is_rees(&self) -> bool {
        self.kind.is_exceptional() && self.att > 0
    }

    pub fn label(&self) -> String {
        match &self.kind {
            ComponentKind::Exceptional { .. } => format!("E_{}", self.id),
            ComponentKind::AxisX => "X".into(),
            ComponentKind::AxisY => "Y".into(),
            ComponentKind::Support => format!("C_{}", self.id),
            ComponentKind::Branch { host } => format!("B_{}/E_{}", self.id, host),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Number of intersection points.
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGraph {
    components: Vec<Component>,
    edges: Vec<Edge>,
    empty_stratum_chi: i64,
    index: BTreeMap<usize, usize>,
}

/// The nonzero values `chi(E_I° ∩ fiber)` for `I ⊂ S` with `|I| ≤ 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiberStrata {
    pub empty: i64,
    pub singles: BTreeMap<usize, i64>,
    pub pairs: BTreeMap<(usize, usize), i64>,
}

impl FiberStrata {
    pub fn single(&self, id: usize) -> i64 {
        self.singles.get(&id).copied().unwrap_or(0)
    }

    pub fn pair(&self, a: usize, b: usize) -> i64 {
        self.pairs.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Euler characteristic of the whole fiber.
    pub fn total(&self) -> i64 {
        self.empty + self.singles.values().sum::<i64>() + self.pairs.values().sum::<i64>()
    }
}

impl ResolutionGraph {
    /// Builds and validates a graph. Paths in validation errors refer to
    /// positions in the given vectors.
    pub fn new(mut components: Vec<Component>, edges: Vec<Edge>, empty_stratum_chi: i64) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::validation("components", "at least one component is required"));
        }
        let mut index = BTreeMap::new();
        for (i, c) in components.iter().enumerate() {
            let path = |f: &str| format!("components[{i}].{f}");
            if index.insert(c.id, i).is_some() {
                return Err(Error::validation(path("id"), format!("duplicate id {}", c.id)));
            }
            if c.n.is_negative() {
                return Err(Error::validation(path("N"), "multiplicity must be nonnegative"));
            }
            if !c.nu.is_positive() {
                return Err(Error::validation(path("nu"), "nu must be positive"));
            }
            match &c.kind {
                ComponentKind::Exceptional { ray } => {
                    if !c.compact {
                        return Err(Error::validation(path("compact"), "exceptional components are compact"));
                    }
                    if !c.n.is_positive() {
                        return Err(Error::validation(path("N"), "exceptional components have N >= 1"));
                    }
                    if let Some(r) = ray {
                        if !r.in_first_quadrant() || c.nu != r.p() + r.q() {
                            return Err(Error::validation(path("ray"), "ray must be a first-quadrant vector with p + q = nu"));
                        }
                    }
                }
                kind => {
                    if c.att > 0 {
                        return Err(Error::validation(path("att"), "only exceptional components carry branches"));
                    }
                    if c.compact || c.in_fiber {
                        return Err(Error::validation(path("compact"), "non-exceptional components are non-compact and outside the fiber"));
                    }
                    if matches!(kind, ComponentKind::AxisX | ComponentKind::AxisY) && !c.nu.is_one() {
                        return Err(Error::validation(path("nu"), "axes have nu = 1"));
                    }
                    if kind.is_branch() && !(c.n.is_one() && c.nu.is_one()) {
                        return Err(Error::validation(path("N"), "branches have N = nu = 1"));
                    }
                }
            }
        }
        let mut hosted: BTreeMap<usize, u64> = BTreeMap::new();
        for (i, c) in components.iter().enumerate() {
            if let ComponentKind::Branch { host } = c.kind {
                match index.get(&host).map(|&j| &components[j]) {
                    Some(h) if h.kind.is_exceptional() => *hosted.entry(host).or_default() += 1,
                    _ => {
                        return Err(Error::validation(
                            format!("components[{i}].host"),
                            format!("host {host} is not an exceptional component"),
                        ))
                    }
                }
            }
        }
        for (i, c) in components.iter().enumerate() {
            if c.kind.is_exceptional() && hosted.get(&c.id).copied().unwrap_or(0) != c.att {
                return Err(Error::validation(
                    format!("components[{i}].att"),
                    "att must equal the number of branch records hosted on the component",
                ));
            }
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let path = |f: &str| format!("edges[{i}].{f}");
            for (f, id) in [("a", e.a), ("b", e.b)] {
                match index.get(&id) {
                    None => return Err(Error::validation(path(f), format!("unknown component id {id}"))),
                    Some(&j) if components[j].kind.is_branch() => {
                        return Err(Error::validation(path(f), "branches attach through their host field"))
                    }
                    _ => {}
                }
            }
            if e.a == e.b {
                return Err(Error::validation(path("b"), "self-intersection edges are not allowed"));
            }
            if e.mult == 0 {
                return Err(Error::validation(path("mult"), "multiplicity must be positive"));
            }
            let (a, b) = (e.a.min(e.b), e.a.max(e.b));
            if !seen.insert((a, b)) {
                return Err(Error::validation(path("b"), "duplicate edge"));
            }
            normalized.push(Edge { a, b, mult: e.mult });
        }
        normalized.sort();
        components.sort_by_key(|c| c.id);
        let index = components.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
        let g = Self {
            components,
            edges: normalized,
            empty_stratum_chi,
            index,
        };
        if g.fiber_ids().is_empty() {
            let s: Vec<usize> = g.s_ids().collect();
            let ok = match s.as_slice() {
                [] | [_] => true,
                [a, b] => g.edge_mult(*a, *b) > 0,
                _ => false,
            };
            if !ok {
                return Err(Error::validation(
                    "components",
                    "without fiber components the fiber is one point, which lies on at most two adjacent components of S",
                ));
            }
        }
        Ok(g)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn empty_stratum_chi(&self) -> i64 {
        self.empty_stratum_chi
    }

    pub fn component(&self, id: usize) -> Result<&Component> {
        self.index
            .get(&id)
            .map(|&i| &self.components[i])
            .ok_or(Error::UnknownId(id))
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind.is_exceptional())
    }

    pub fn s_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.iter().filter(|c| c.in_s()).map(|c| c.id)
    }

    pub fn fiber_ids(&self) -> BTreeSet<usize> {
        self.components.iter().filter(|c| c.in_fiber).map(|c| c.id).collect()
    }

    pub fn branches_of(&self, host: usize) -> impl Iterator<Item = &Component> {
        self.components
            .iter()
            .filter(move |c| c.kind == ComponentKind::Branch { host })
    }

    /// Neighbours along edges with intersection multiplicities; branches excluded.
    pub fn neighbors(&self, id: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == id {
                Some((e.b, e.mult))
            } else if e.b == id {
                Some((e.a, e.mult))
            } else {
                None
            }
        })
    }

    pub fn edge_mult(&self, a: usize, b: usize) -> u64 {
        let key = (a.min(b), a.max(b));
        self.edges
            .iter()
            .find(|e| (e.a, e.b) == key)
            .map_or(0, |e| e.mult)
    }

    fn c(&self, id: usize) -> &Component {
        &self.components[self.index[&id]]
    }

    /// Intersection points with other components of `S`.
    pub fn k(&self, id: usize) -> Result<u64> {
        let c = self.component(id)?;
        if let ComponentKind::Branch { host } = c.kind {
            return Ok(u64::from(self.c(host).in_s()));
        }
        Ok(self
            .neighbors(id)
            .filter(|&(j, _)| self.c(j).in_s())
            .map(|(_, m)| m)
            .sum())
    }

    /// Intersection points with other components of the total transform of
    /// a general element.
    pub fn k_prime(&self, id: usize) -> Result<u64> {
        let c = self.component(id)?;
        if let ComponentKind::Branch { .. } = c.kind {
            return Ok(1);
        }
        Ok(self
            .neighbors(id)
            .filter(|&(j, _)| self.c(j).in_t())
            .map(|(_, m)| m)
            .sum::<u64>()
            + c.att)
    }

    /// Euler characteristic of `E_i°`, the component minus its intersections
    /// with the other components of `S`.
    pub fn chi_open(&self, id: usize) -> Result<i64> {
        let c = self.component(id)?;
        let base = if c.compact { 2 } else { 1 };
        Ok(base - self.k(id)? as i64)
    }

    /// Euler characteristics of the strata `E_I° ∩ ψ⁻¹(0)`.
    ///
    /// Without fiber components the fiber is a single point lying on every
    /// component of `S` (at most two).
    pub fn fiber_strata(&self) -> FiberStrata {
        let mut strata = FiberStrata {
            empty: self.empty_stratum_chi,
            ..Default::default()
        };
        let fiber = self.fiber_ids();
        if fiber.is_empty() {
            let s: Vec<usize> = self.s_ids().collect();
            match s.as_slice() {
                [a] => {
                    strata.singles.insert(*a, 1);
                }
                [a, b] => {
                    strata.pairs.insert((*a, *b), 1);
                }
                _ => {}
            }
            return strata;
        }
        for &id in &fiber {
            let chi = self.chi_open(id).expect("fiber id exists");
            if chi != 0 && self.c(id).in_s() {
                strata.singles.insert(id, chi);
            }
        }
        for e in &self.edges {
            let (a, b) = (self.c(e.a), self.c(e.b));
            if a.in_s() && b.in_s() && (a.in_fiber || b.in_fiber) {
                strata.pairs.insert((e.a, e.b), e.mult as i64);
            }
        }
        strata
    }

    fn next_id(&self) -> usize {
        self.components.last().map_or(1, |c| c.id + 1)
    }

    fn with_new_exceptional(&self, n: BigInt, nu: BigInt, ray: Option<Ray>, edges: Vec<Edge>) -> Result<Self> {
        let mut components = self.components.clone();
        components.push(Component {
            id: self.next_id(),
            kind: ComponentKind::Exceptional { ray },
            n,
            nu,
            att: 0,
            compact: true,
            in_fiber: true,
        });
        Self::new(components, edges, self.empty_stratum_chi)
    }

    /// Blows up one intersection point of `a` and `b` lying over the origin.
    pub fn blow_up_intersection(&self, a: usize, b: usize) -> Result<Self> {
        let (ca, cb) = (self.component(a)?, self.component(b)?);
        let mult = self.edge_mult(a, b);
        if mult == 0 {
            return Err(Error::validation("edges", format!("components {a} and {b} do not meet")));
        }
        if !(ca.in_fiber || cb.in_fiber || self.fiber_ids().is_empty()) {
            return Err(Error::validation("edges", "the intersection point is not over the origin"));
        }
        let ray = match (&ca.kind, &cb.kind) {
            (ComponentKind::Exceptional { ray: Some(r) }, ComponentKind::Exceptional { ray: Some(s) }) => Some(r.add(s)?),
            _ => None,
        };
        let new = self.next_id();
        let key = (a.min(b), a.max(b));
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                if (e.a, e.b) != key {
                    Some(*e)
                } else if e.mult > 1 {
                    Some(Edge { mult: e.mult - 1, ..*e })
                } else {
                    None
                }
            })
            .collect();
        edges.push(Edge { a, b: new, mult: 1 });
        edges.push(Edge { a: b, b: new, mult: 1 });
        self.with_new_exceptional(&ca.n + &cb.n, &ca.nu + &cb.nu, ray, edges)
    }

    /// Blows up a point of `id` over the origin that lies on no other
    /// component and on no branch.
    pub fn blow_up_free_point(&self, id: usize) -> Result<Self> {
        let c = self.component(id)?;
        let origin_only_on_c = self.fiber_ids().is_empty() && c.in_s() && self.s_ids().count() == 1;
        if !(c.in_fiber || origin_only_on_c) {
            return Err(Error::validation("components", format!("component {id} has no free point over the origin")));
        }
        let mut edges = self.edges.clone();
        edges.push(Edge {
            a: id,
            b: self.next_id(),
            mult: 1,
        });
        self.with_new_exceptional(c.n.clone(), &c.nu + 1, None, edges)
    }
}
