//! Holomorphy checker, lemma validators and the randomized corpus driver.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;
use crate::ideal::{Monomial, MonomialIdeal};
use crate::monodromy::{eigenvalue_orders, EigenvalueOrders};
use crate::principalize::principalise;
use crate::zeta::{topological_zeta, RationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotApplicable,
    ZeroConfirmed,
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::ZeroConfirmed => "ZERO_CONFIRMED",
            Verdict::Violation => "VIOLATION",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub d: u64,
    pub verdict: Verdict,
    /// Exceptional components with `d | N`.
    pub divisible_ids: Vec<usize>,
    /// Every divisible component has `χ(E°) = 0` and no two of them meet.
    pub structure_ok: bool,
    pub chi_ok: bool,
    pub disjoint: bool,
    pub zeta: RationalFunction,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let divisible = if self.divisible_ids.is_empty() {
            "none".to_string()
        } else {
            self.divisible_ids.iter().map(|i| format!("E_{i}")).collect::<Vec<_>>().join(", ")
        };
        let chi = if self.chi_ok { "chi=0" } else { "chi!=0" };
        let disjoint = if self.disjoint { "disjoint" } else { "intersecting" };
        match self.verdict {
            Verdict::NotApplicable => write!(f, "d={}: {} ({} divides an eigenvalue order)", self.d, self.verdict, self.d),
            Verdict::ZeroConfirmed => write!(f, "d={}: {} (divisible: {divisible}; {chi}; {disjoint})", self.d, self.verdict),
            Verdict::Violation => write!(
                f,
                "d={}: {} (zeta={}; divisible: {divisible}; {chi}; {disjoint})",
                self.d, self.verdict, self.zeta
            ),
        }
    }
}

/// Checks the holomorphy conjecture for one `d`.
pub fn check(g: &ResolutionGraph, d: u64) -> Result<CheckReport> {
    check_with_orders(g, d, &eigenvalue_orders(g))
}

pub fn check_with_orders(g: &ResolutionGraph, d: u64, orders: &EigenvalueOrders) -> Result<CheckReport> {
    let zeta = topological_zeta(g, d)?;
    let dd = BigInt::from(d);
    let divisible_ids: Vec<usize> = g
        .exceptional()
        .filter(|c| (&c.n % &dd).is_zero())
        .map(|c| c.id)
        .collect();
    let mut chi_ok = true;
    for &i in &divisible_ids {
        chi_ok &= g.chi_open(i)? == 0;
    }
    let disjoint = divisible_ids
        .iter()
        .enumerate()
        .all(|(k, &a)| divisible_ids[k + 1..].iter().all(|&b| g.edge_mult(a, b) == 0));
    let structure_ok = chi_ok && disjoint;
    let verdict = if orders.divides_some_order(&dd) {
        Verdict::NotApplicable
    } else if zeta.is_zero() && structure_ok {
        Verdict::ZeroConfirmed
    } else {
        Verdict::Violation
    };
    Ok(CheckReport {
        d,
        verdict,
        divisible_ids,
        structure_ok,
        chi_ok,
        disjoint,
        zeta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceEntry {
    pub id: usize,
    /// Sum of `N` over the neighbours in the total transform of a general element.
    pub lhs: BigInt,
    pub modulus: BigInt,
    pub ok: bool,
}

/// For every exceptional `E_i`, whether `N_i` divides the sum of the
/// multiplicities of the components it meets.
pub fn validate_congruence(g: &ResolutionGraph) -> Vec<CongruenceEntry> {
    g.exceptional()
        .map(|c| {
            let mut lhs = BigInt::from(c.att);
            for (j, mult) in g.neighbors(c.id) {
                lhs += &g.component(j).expect("neighbour exists").n * mult;
            }
            let ok = (&lhs % &c.n).is_zero();
            CongruenceEntry {
                id: c.id,
                lhs,
                modulus: c.n.clone(),
                ok,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathReport {
    pub start: usize,
    /// `E_0 = start, E_1, ..., E_r`.
    pub path: Vec<usize>,
    pub k_prime_end: u64,
    /// All curves on the path are exceptional and `k_j' = k_j = 2` for `0 < j < r`.
    pub interior_ok: bool,
    /// `k_r' >= 3`.
    pub branch_ok: bool,
    /// `N_0` divides every `N_j`.
    pub divides_ok: bool,
    /// `N_0 < N_1 < ... < N_r`.
    pub increasing_ok: bool,
}

impl PathReport {
    pub fn ok(&self) -> bool {
        self.interior_ok && self.branch_ok && self.divides_ok && self.increasing_ok
    }
}

/// Walks from a chain end `E_i` (`k_i' = 1`) to the first curve with `k' >= 3`.
pub fn validate_path(g: &ResolutionGraph, i: usize) -> Result<PathReport> {
    let start = g.component(i)?;
    let k0 = g.k_prime(i)?;
    if !start.kind.is_exceptional() || k0 != 1 {
        return Err(Error::NotAnEnd { id: i, k_prime: k0 });
    }
    let mut path = vec![i];
    let mut prev: Option<usize> = None;
    let mut cur = i;
    let mut interior_ok = true;
    let k_end = loop {
        if cur != i {
            let kp = g.k_prime(cur)?;
            if kp >= 3 {
                break kp;
            }
            interior_ok &= g.component(cur)?.kind.is_exceptional() && kp == 2 && g.k(cur)? == 2;
        }
        let next = g
            .neighbors(cur)
            .map(|(j, _)| j)
            .find(|&j| Some(j) != prev && g.component(j).is_ok_and(|c| c.in_s()));
        match next {
            Some(j) if path.len() <= g.components().len() => {
                prev = Some(cur);
                cur = j;
                path.push(j);
            }
            _ => return Err(Error::NoBranchPoint(i)),
        }
    };
    let end = g.component(cur)?;
    let ns: Vec<&BigInt> = path.iter().map(|&j| &g.component(j).expect("on path").n).collect();
    Ok(PathReport {
        start: i,
        path,
        k_prime_end: k_end,
        interior_ok,
        branch_ok: end.kind.is_exceptional() && k_end >= 3,
        divides_ok: ns.iter().all(|n| (*n % ns[0]).is_zero()),
        increasing_ok: ns.windows(2).all(|w| w[0] < w[1]),
    })
}

/// Exceptional components that are chain ends (`k' = 1`).
pub fn chain_ends(g: &ResolutionGraph) -> Vec<usize> {
    g.exceptional()
        .filter(|c| g.k_prime(c.id) == Ok(1))
        .map(|c| c.id)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropK3Report {
    /// `(id, N_id divides some eigenvalue order)` for exceptional components with `k >= 3`.
    pub entries: Vec<(usize, bool)>,
    /// If `d` divides no eigenvalue order, no component with `d | N` has `k >= 3`.
    pub contrapositive_ok: bool,
}

impl PropK3Report {
    pub fn ok(&self) -> bool {
        self.contrapositive_ok && self.entries.iter().all(|&(_, ok)| ok)
    }
}

pub fn validate_prop_k3(g: &ResolutionGraph, d: u64) -> Result<PropK3Report> {
    if d == 0 {
        return Err(Error::InvalidD);
    }
    let orders = eigenvalue_orders(g);
    let dd = BigInt::from(d);
    let mut entries = Vec::new();
    let mut contrapositive_ok = true;
    let applicable = !orders.divides_some_order(&dd);
    for c in g.exceptional() {
        if g.k(c.id)? >= 3 {
            entries.push((c.id, orders.divides_some_order(&c.n)));
            if applicable && (&c.n % &dd).is_zero() {
                contrapositive_ok = false;
            }
        }
    }
    Ok(PropK3Report {
        entries,
        contrapositive_ok,
    })
}

/// All blow-ups of a point over the origin that the graph supports: every
/// intersection point and one free point on each eligible component.
pub fn blow_up_choices(g: &ResolutionGraph) -> Vec<BlowUp> {
    let fiber_empty = g.fiber_ids().is_empty();
    let mut out: Vec<BlowUp> = g
        .edges()
        .iter()
        .filter(|e| {
            let (a, b) = (g.component(e.a).expect("edge end"), g.component(e.b).expect("edge end"));
            a.in_fiber || b.in_fiber || fiber_empty
        })
        .map(|e| BlowUp::Intersection(e.a, e.b))
        .collect();
    if fiber_empty {
        let s: Vec<usize> = g.s_ids().collect();
        if let [only] = s.as_slice() {
            out.push(BlowUp::FreePoint(*only));
        }
    } else {
        out.extend(g.fiber_ids().into_iter().map(BlowUp::FreePoint));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlowUp {
    Intersection(usize, usize),
    FreePoint(usize),
}

impl BlowUp {
    pub fn apply(&self, g: &ResolutionGraph) -> Result<ResolutionGraph> {
        match *self {
            BlowUp::Intersection(a, b) => g.blow_up_intersection(a, b),
            BlowUp::FreePoint(id) => g.blow_up_free_point(id),
        }
    }
}

/// Random monomial ideals: 2 to 5 generators with exponents at most
/// `max_exp`; half of them contain a pure power of each variable.
pub fn random_ideals(count: usize, max_exp: u64, seed: u64) -> Result<Vec<(MonomialIdeal, u64)>> {
    if count == 0 {
        return Err(Error::InvalidCount { name: "count", min: 1 });
    }
    if max_exp < 2 {
        return Err(Error::InvalidCount { name: "max_exp", min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(2..=5usize);
        let mut gens = Vec::with_capacity(n);
        if rng.gen_bool(0.5) {
            gens.push(Monomial::new(rng.gen_range(1..=max_exp), 0u64));
            gens.push(Monomial::new(0u64, rng.gen_range(1..=max_exp)));
        }
        while gens.len() < n {
            let (a, b) = (rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
            if a + b > 0 {
                gens.push(Monomial::new(a, b));
            }
        }
        let ideal = MonomialIdeal::from_generators(gens).expect("no generator is 1");
        out.push((ideal, rng.gen()));
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdealOutcome {
    pub ideal: String,
    pub not_applicable: u64,
    pub zero_confirmed: u64,
    pub violations: u64,
    pub congruence_checks: u64,
    pub congruence_failures: u64,
    pub blowup_failures: u64,
    pub paths_checked: u64,
    pub paths_without_branch_point: u64,
    pub path_failures: u64,
    /// First failed check, if any.
    pub failure: Option<String>,
}

impl IdealOutcome {
    fn fail(&mut self, reason: String) {
        self.failure.get_or_insert(reason);
    }
}

/// Runs every check on one ideal. `blowup_seed` picks the extra blow-up.
pub fn evaluate_ideal(ideal: &MonomialIdeal, d_max: u64, blowup_seed: u64) -> Result<IdealOutcome> {
    let g = principalise(ideal)?;
    let mut out = IdealOutcome {
        ideal: ideal.to_string(),
        ..Default::default()
    };
    for e in validate_congruence(&g) {
        out.congruence_checks += 1;
        if !e.ok {
            out.congruence_failures += 1;
            out.fail(format!("congruence fails at E_{}: {} mod {}", e.id, e.lhs, e.modulus));
        }
    }
    for i in chain_ends(&g) {
        match validate_path(&g, i) {
            Ok(p) => {
                out.paths_checked += 1;
                if !p.ok() {
                    out.path_failures += 1;
                    out.fail(format!("path conditions fail from E_{i}"));
                }
            }
            Err(Error::NoBranchPoint(_)) => out.paths_without_branch_point += 1,
            Err(e) => return Err(e),
        }
    }
    let orders = eigenvalue_orders(&g);
    let choices = blow_up_choices(&g);
    let blown = if choices.is_empty() {
        None
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(blowup_seed);
        let b = choices[rng.gen_range(0..choices.len())];
        Some((b, b.apply(&g)?))
    };
    if let Some((b, h)) = &blown {
        if eigenvalue_orders(h) != orders {
            out.blowup_failures += 1;
            out.fail(format!("eigenvalue orders change under {b:?}"));
        }
    }
    for d in 1..=d_max {
        let report = check_with_orders(&g, d, &orders)?;
        match report.verdict {
            Verdict::NotApplicable => out.not_applicable += 1,
            Verdict::ZeroConfirmed => out.zero_confirmed += 1,
            Verdict::Violation => {
                out.violations += 1;
                out.fail(report.to_string());
            }
        }
        if let Some((b, h)) = &blown {
            if topological_zeta(h, d)? != report.zeta {
                out.blowup_failures += 1;
                out.fail(format!("Z_top^({d}) changes under {b:?}"));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FuzzViolation {
    pub ideal: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub count: usize,
    pub max_exp: u64,
    pub d_max: u64,
    pub ideals_evaluated: usize,
    pub not_applicable: u64,
    pub zero_confirmed: u64,
    pub violations: u64,
    pub congruence_checks: u64,
    pub congruence_failures: u64,
    pub blowups: u64,
    pub blowup_failures: u64,
    pub paths_checked: u64,
    pub paths_without_branch_point: u64,
    pub path_failures: u64,
    pub first_violation: Option<FuzzViolation>,
}

impl FuzzSummary {
    pub fn is_clean(&self) -> bool {
        self.first_violation.is_none()
    }

    fn absorb(&mut self, o: &IdealOutcome) {
        self.ideals_evaluated += 1;
        self.not_applicable += o.not_applicable;
        self.zero_confirmed += o.zero_confirmed;
        self.violations += o.violations;
        self.congruence_checks += o.congruence_checks;
        self.congruence_failures += o.congruence_failures;
        self.blowups += 1;
        self.blowup_failures += o.blowup_failures;
        self.paths_checked += o.paths_checked;
        self.paths_without_branch_point += o.paths_without_branch_point;
        self.path_failures += o.path_failures;
        if let Some(reason) = &o.failure {
            self.first_violation = Some(FuzzViolation {
                ideal: o.ideal.clone(),
                reason: reason.clone(),
            });
        }
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "seed {}: {} of {} ideals (exponents <= {}), d = 1..{}",
            self.seed, self.ideals_evaluated, self.count, self.max_exp, self.d_max
        )?;
        writeln!(f, "{:<28}{:>10}{:>10}", "check", "count", "failed")?;
        let rows = [
            ("ZERO_CONFIRMED", self.zero_confirmed, 0),
            ("NOT_APPLICABLE", self.not_applicable, 0),
            ("VIOLATION", self.violations, self.violations),
            ("congruence", self.congruence_checks, self.congruence_failures),
            ("blow-up invariance", self.blowups, self.blowup_failures),
            ("path lemma", self.paths_checked, self.path_failures),
            ("path without branch point", self.paths_without_branch_point, 0),
        ];
        for (name, count, failed) in rows {
            writeln!(f, "{name:<28}{count:>10}{failed:>10}")?;
        }
        match &self.first_violation {
            None => write!(f, "no violations"),
            Some(v) => write!(f, "violation on ideal \"{}\": {}", v.ideal, v.reason),
        }
    }
}

/// Evaluates a seeded stream of random ideals, in parallel, stopping the
/// summary at the first failing ideal.
pub fn fuzz_corpus(count: usize, max_exp: u64, d_max: u64, seed: u64) -> Result<FuzzSummary> {
    if d_max < 2 {
        return Err(Error::InvalidCount { name: "d_max", min: 2 });
    }
    let ideals = random_ideals(count, max_exp, seed)?;
    let outcomes: Vec<IdealOutcome> = ideals
        .par_iter()
        .map(|(ideal, s)| evaluate_ideal(ideal, d_max, *s))
        .collect::<Result<_>>()?;
    let mut summary = FuzzSummary {
        seed,
        count,
        max_exp,
        d_max,
        ..Default::default()
    };
    for o in &outcomes {
        summary.absorb(o);
        if o.failure.is_some() {
            break;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphio::import_graph;
    use crate::ideal::parse_ideal;

    const WORKED: &str = "x^2*y^4, x^34, y^6";

    fn graph(s: &str) -> ResolutionGraph {
        principalise(&parse_ideal(s).unwrap()).unwrap()
    }

    #[test]
    fn worked_check() {
        let g = graph(WORKED);
        let r = check(&g, 5).unwrap();
        assert_eq!(r.verdict, Verdict::ZeroConfirmed);
        assert_eq!(r.divisible_ids, vec![2, 7]);
        assert!(r.structure_ok && r.zeta.is_zero());
        assert_eq!(r.to_string(), "d=5: ZERO_CONFIRMED (divisible: E_2, E_7; chi=0; disjoint)");
        assert_eq!(check(&g, 2).unwrap().verdict, Verdict::NotApplicable);
    }

    #[test]
    fn cusp_check() {
        let g = graph("x^2, y^3");
        let r = check(&g, 4).unwrap();
        assert_eq!(r.verdict, Verdict::ZeroConfirmed);
        assert!(r.divisible_ids.is_empty());
        assert_eq!(r.to_string(), "d=4: ZERO_CONFIRMED (divisible: none; chi=0; disjoint)");
        assert_eq!(check(&g, 0), Err(Error::InvalidD));
    }

    #[test]
    fn congruence_values() {
        let entries = validate_congruence(&graph(WORKED));
        assert_eq!(entries.len(), 8);
        assert!(entries.iter().all(|e| e.ok));
        assert_eq!((entries[0].lhs.clone(), entries[0].modulus.clone()), (12.into(), 6.into()));
        assert_eq!((entries[7].lhs.clone(), entries[7].modulus.clone()), (34.into(), 34.into()));
        let cusp = validate_congruence(&graph("x^2, y^3"));
        assert_eq!((cusp[1].lhs.clone(), cusp[1].modulus.clone()), (6.into(), 6.into()));
    }

    #[test]
    fn paths() {
        let g = graph("x^2, y^3");
        let ns = |p: &PathReport| -> Vec<(BigInt, BigInt)> {
            p.path.iter().map(|&j| (g.component(j).unwrap().n.clone(), g.component(j).unwrap().nu.clone())).collect()
        };
        let p = validate_path(&g, 1).unwrap();
        assert_eq!(ns(&p), vec![(3.into(), 3.into()), (6.into(), 5.into())]);
        assert!(p.ok());
        assert_eq!(p.k_prime_end, 3);
        let p = validate_path(&g, 3).unwrap();
        assert_eq!(ns(&p), vec![(2.into(), 2.into()), (6.into(), 5.into())]);
        assert!(p.ok());
        assert_eq!(validate_path(&graph(WORKED), 1), Err(Error::NotAnEnd { id: 1, k_prime: 3 }));
        assert_eq!(chain_ends(&g), vec![1, 3]);
    }

    #[test]
    fn no_branch_point_on_principal_chain() {
        let g = graph("x^6").blow_up_free_point(1).unwrap();
        let end = g.exceptional().next().unwrap().id;
        assert_eq!(validate_path(&g, end), Err(Error::NoBranchPoint(end)));
    }

    #[test]
    fn prop_k3_vacuous_on_native_graphs() {
        let r = validate_prop_k3(&graph(WORKED), 5).unwrap();
        assert!(r.entries.is_empty() && r.contrapositive_ok);
    }

    const BRANCHED: &str = r#"{
      "components": [
        {"id": 1, "kind": "exceptional", "N": 4, "nu": 2, "att": 0, "compact": true, "in_fiber": true},
        {"id": 2, "kind": "support", "N": 2, "nu": 1, "att": 0, "compact": false, "in_fiber": false},
        {"id": 3, "kind": "support", "N": 1, "nu": 1, "att": 0, "compact": false, "in_fiber": false},
        {"id": 4, "kind": "support", "N": 1, "nu": 1, "att": 0, "compact": false, "in_fiber": false}
      ],
      "edges": [{"a": 1, "b": 2, "mult": 1}, {"a": 1, "b": 3, "mult": 1}, {"a": 1, "b": 4, "mult": 1}]
    }"#;

    #[test]
    fn prop_k3_on_imported_branched_graph() {
        let g = import_graph(BRANCHED).unwrap();
        assert_eq!(g.k(1).unwrap(), 3);
        let orders = eigenvalue_orders(&g);
        assert_eq!(orders.to_string(), "1 2 4");
        let r = validate_prop_k3(&g, 3).unwrap();
        assert_eq!(r.entries, vec![(1, true)]);
        assert!(r.ok());
        assert!(validate_congruence(&g).iter().all(|e| e.ok));
        assert_eq!(check(&g, 3).unwrap().verdict, Verdict::ZeroConfirmed);
    }

    #[test]
    fn violation_is_a_verdict() {
        let text = r#"{
          "components": [
            {"id": 1, "kind": "exceptional", "N": 2, "nu": 2, "att": 0, "compact": true, "in_fiber": true},
            {"id": 2, "kind": "exceptional", "N": 2, "nu": 3, "att": 0, "compact": true, "in_fiber": true},
            {"id": 3, "kind": "support", "N": 1, "nu": 1, "att": 0, "compact": false, "in_fiber": false},
            {"id": 4, "kind": "support", "N": 1, "nu": 1, "att": 0, "compact": false, "in_fiber": false}
          ],
          "edges": [{"a": 1, "b": 2, "mult": 1}, {"a": 1, "b": 3, "mult": 1}, {"a": 2, "b": 4, "mult": 1}]
        }"#;
        let g = import_graph(text).unwrap();
        assert!(!validate_congruence(&g)[0].ok);
        let r = check(&g, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Violation);
        assert!(r.to_string().starts_with("d=2: VIOLATION (zeta="));
    }

    #[test]
    fn fuzz_errors_and_determinism() {
        assert_eq!(fuzz_corpus(0, 10, 10, 1), Err(Error::InvalidCount { name: "count", min: 1 }));
        assert_eq!(fuzz_corpus(3, 1, 10, 1), Err(Error::InvalidCount { name: "max_exp", min: 2 }));
        assert_eq!(fuzz_corpus(3, 10, 1, 1), Err(Error::InvalidCount { name: "d_max", min: 2 }));
        let a = fuzz_corpus(20, 12, 12, 7).unwrap();
        assert_eq!(a, fuzz_corpus(20, 12, 12, 7).unwrap());
        assert!(a.is_clean(), "{a}");
        assert_eq!(a.ideals_evaluated, 20);
        assert_eq!(a.not_applicable + a.zero_confirmed, 20 * 12);
    }

    #[test]
    fn worked_ideal_evaluates_cleanly() {
        let o = evaluate_ideal(&parse_ideal(WORKED).unwrap(), 60, 0).unwrap();
        assert_eq!(o.failure, None);
        assert_eq!(o.congruence_checks, 8);
        assert_eq!(o.paths_checked + o.paths_without_branch_point, 0);
    }
}
