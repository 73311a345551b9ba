//! JSON graph documents and DOT rendering.
//!
//! Document layout, with keys in this order:
//!
//! ```text
//! {
//!   "components": [
//!     {"id": 1, "kind": "exceptional", "ray": [1, 1], "N": 6, "nu": 2,
//!      "att": 2, "compact": true, "in_fiber": true},
//!     {"id": 9, "kind": "branch", "host": 1, "N": 1, "nu": 1,
//!      "att": 0, "compact": false, "in_fiber": false}
//!   ],
//!   "edges": [{"a": 1, "b": 2, "mult": 1}],
//!   "empty_stratum_chi": 0
//! }
//! ```
//!
//! `kind` is one of `exceptional`, `axis_x`, `axis_y`, `support`, `branch`.
//! `ray` is optional and only allowed on exceptional components; `host` is
//! required on branches and forbidden elsewhere. Integers in `ray`, `N` and
//! `nu` have arbitrary precision. Rees flags are not stored: an exceptional
//! component is Rees exactly when `att > 0`. A `genus` key is reserved; any
//! nonzero value is rejected. Output documents may carry the optional
//! fields `d`, `zeta`, `orders` and `verdict`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::graph::{Component, ComponentKind, Edge, ResolutionGraph};
use crate::lattice::Ray;

/// Arbitrary-precision integer carried as a plain JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n: Number = self.0.to_string().parse().expect("integers are valid JSON numbers");
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = Number::deserialize(d)?;
        n.to_string()
            .parse()
            .map(JsonInt)
            .map_err(|_| serde::de::Error::custom(format!("expected an integer, found {n}")))
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        JsonInt(v.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindTag {
    Exceptional,
    AxisX,
    AxisY,
    Support,
    Branch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub id: usize,
    pub kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray: Option<[JsonInt; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<usize>,
    #[serde(rename = "N")]
    pub n: JsonInt,
    pub nu: JsonInt,
    pub att: u64,
    pub compact: bool,
    pub in_fiber: bool,
    #[serde(default, skip_serializing)]
    pub genus: Option<JsonInt>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub a: usize,
    pub b: usize,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub components: Vec<ComponentRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub empty_stratum_chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl GraphDocument {
    pub fn from_graph(g: &ResolutionGraph) -> Self {
        let components = g
            .components()
            .iter()
            .map(|c| {
                let (kind, ray, host) = match &c.kind {
                    ComponentKind::Exceptional { ray } => (
                        KindTag::Exceptional,
                        ray.as_ref().map(|r| [JsonInt::from(r.p()), JsonInt::from(r.q())]),
                        None,
                    ),
                    ComponentKind::AxisX => (KindTag::AxisX, None, None),
                    ComponentKind::AxisY => (KindTag::AxisY, None, None),
                    ComponentKind::Support => (KindTag::Support, None, None),
                    ComponentKind::Branch { host } => (KindTag::Branch, None, Some(*host)),
                };
                ComponentRecord {
                    id: c.id,
                    kind,
                    ray,
                    host,
                    n: JsonInt::from(&c.n),
                    nu: JsonInt::from(&c.nu),
                    att: c.att,
                    compact: c.compact,
                    in_fiber: c.in_fiber,
                    genus: None,
                }
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                a: e.a,
                b: e.b,
                mult: e.mult,
            })
            .collect();
        Self {
            components,
            edges,
            empty_stratum_chi: g.empty_stratum_chi(),
            d: None,
            zeta: None,
            orders: None,
            verdict: None,
        }
    }

    pub fn to_graph(&self) -> Result<ResolutionGraph> {
        let mut components = Vec::with_capacity(self.components.len());
        for (i, r) in self.components.iter().enumerate() {
            let path = |f: &str| format!("components[{i}].{f}");
            if let Some(g) = &r.genus {
                if g.0 != BigInt::from(0) {
                    return Err(Error::validation(path("genus"), "only rational components are supported"));
                }
            }
            if r.ray.is_some() && r.kind != KindTag::Exceptional {
                return Err(Error::validation(path("ray"), "only exceptional components carry a ray"));
            }
            if r.host.is_some() != (r.kind == KindTag::Branch) {
                return Err(Error::validation(path("host"), "branches, and only branches, have a host"));
            }
            let kind = match r.kind {
                KindTag::Exceptional => ComponentKind::Exceptional {
                    ray: match &r.ray {
                        None => None,
                        Some([p, q]) => {
                            let ray = Ray::new(p.0.clone(), q.0.clone())
                                .map_err(|e| Error::validation(path("ray"), e.to_string()))?;
                            if ray.p() != &p.0 {
                                return Err(Error::validation(path("ray"), "ray must be primitive"));
                            }
                            Some(ray)
                        }
                    },
                },
                KindTag::AxisX => ComponentKind::AxisX,
                KindTag::AxisY => ComponentKind::AxisY,
                KindTag::Support => ComponentKind::Support,
                KindTag::Branch => ComponentKind::Branch {
                    host: r.host.expect("checked above"),
                },
            };
            components.push(Component {
                id: r.id,
                kind,
                n: r.n.0.clone(),
                nu: r.nu.0.clone(),
                att: r.att,
                compact: r.compact,
                in_fiber: r.in_fiber,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                a: e.a,
                b: e.b,
                mult: e.mult,
            })
            .collect();
        ResolutionGraph::new(components, edges, self.empty_stratum_chi)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::validation(if path == "." { "$".into() } else { path }, e.into_inner().to_string())
        })
    }
}

pub fn export_graph(g: &ResolutionGraph) -> String {
    GraphDocument::from_graph(g).to_json()
}

pub fn import_graph(text: &str) -> Result<ResolutionGraph> {
    GraphDocument::from_json(text)?.to_graph()
}

/// Graphviz rendering: Rees components double-circled, branches as boxes.
pub fn to_dot(g: &ResolutionGraph) -> String {
    let mut out = String::from("graph resolution {\n  node [shape=circle];\n");
    for c in g.components() {
        let (label, shape) = match &c.kind {
            ComponentKind::Exceptional { .. } => (
                format!("{}({},{})", c.label(), c.n, c.nu),
                if c.is_rees() { "doublecircle" } else { "circle" },
            ),
            ComponentKind::Branch { .. } => (format!("B_{}", c.id), "box"),
            _ => (format!("{}({},{})", c.label(), c.n, c.nu), "plaintext"),
        };
        let _ = writeln!(out, "  n{} [label=\"{label}\", shape={shape}];", c.id);
    }
    for e in g.edges() {
        if e.mult > 1 {
            let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.a, e.b, e.mult);
        } else {
            let _ = writeln!(out, "  n{} -- n{};", e.a, e.b);
        }
    }
    for c in g.components() {
        if let ComponentKind::Branch { host } = c.kind {
            let _ = writeln!(out, "  n{host} -- n{} [style=dashed];", c.id);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::parse_ideal;
    use crate::principalize::principalise;

    fn graph(s: &str) -> ResolutionGraph {
        principalise(&parse_ideal(s).unwrap()).unwrap()
    }

    fn count(dot: &str, needle: &str) -> usize {
        dot.lines().filter(|l| l.contains(needle)).count()
    }

    #[test]
    fn export_example() {
        let doc = GraphDocument::from_graph(&graph("x^2*y^4, x^34, y^6"));
        assert_eq!(doc.components.iter().filter(|c| c.kind == KindTag::Exceptional).count(), 8);
        assert_eq!(doc.components.iter().filter(|c| c.kind == KindTag::Branch).count(), 6);
        assert_eq!(doc.edges.len(), 7);
        let json = doc.to_json();
        assert!(json.contains("\"N\": 34"));
        assert!(json.find("\"id\"").unwrap() < json.find("\"kind\"").unwrap());
    }

    #[test]
    fn round_trip() {
        for s in ["x^2*y^4, x^34, y^6", "x^5", "x^2*y^3", "x^4, x^2*y", "x^3*y, x*y^7"] {
            let g = graph(s);
            assert_eq!(import_graph(&export_graph(&g)).unwrap(), g, "{s}");
        }
        let doc = GraphDocument::from_graph(&graph("x^5"));
        assert_eq!((doc.components.len(), doc.edges.len()), (1, 0));
    }

    #[test]
    fn hand_written_chain_matches_native() {
        let text = r#"{
          "components": [
            {"id": 1, "kind": "exceptional", "N": 3, "nu": 3, "att": 0, "compact": true, "in_fiber": true},
            {"id": 2, "kind": "exceptional", "N": 6, "nu": 5, "att": 1, "compact": true, "in_fiber": true},
            {"id": 3, "kind": "exceptional", "N": 2, "nu": 2, "att": 0, "compact": true, "in_fiber": true},
            {"id": 4, "kind": "branch", "host": 2, "N": 1, "nu": 1, "att": 0, "compact": false, "in_fiber": false}
          ],
          "edges": [{"a": 1, "b": 2, "mult": 1}, {"a": 2, "b": 3, "mult": 1}]
        }"#;
        let g = import_graph(text).unwrap();
        let native = graph("x^2, y^3");
        let data = |g: &ResolutionGraph| -> Vec<_> {
            g.components().iter().map(|c| (c.n.clone(), c.nu.clone(), c.att, c.is_rees())).collect()
        };
        assert_eq!(data(&g), data(&native));
        assert_eq!(g.edges(), native.edges());
        let dot = to_dot(&g);
        assert_eq!(count(&dot, "label="), 4);
        assert_eq!(count(&dot, " -- "), 3);
    }

    #[test]
    fn dot_counts() {
        let dot = to_dot(&graph("x^2*y^4, x^34, y^6"));
        assert_eq!(count(&dot, "shape=") - 1, 14);
        assert_eq!(count(&dot, " -- "), 13);
        assert_eq!(count(&dot, "doublecircle"), 2);
        assert!(dot.contains("label=\"E_1(6,2)\""));
        let dot = to_dot(&graph("x^2*y^3"));
        assert_eq!((count(&dot, "label="), count(&dot, " -- ")), (2, 1));
    }

    fn err_path(text: &str) -> String {
        match import_graph(text) {
            Err(Error::Validation { path, .. }) => path,
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    const EXC: &str = r#""kind": "exceptional", "N": 2, "nu": 2, "att": 0, "compact": true, "in_fiber": true"#;

    #[test]
    fn validation_errors() {
        assert_eq!(err_path(r#"{"components": [], "edges": []}"#), "components");
        assert_eq!(
            err_path(&format!(r#"{{"components": [{{"id": 1, {EXC}}}], "edges": [{{"a": 1, "b": 7, "mult": 1}}]}}"#)),
            "edges[0].b"
        );
        assert_eq!(
            err_path(&format!(r#"{{"components": [{{"id": 1, {EXC}}}], "edges": [{{"a": 1, "b": 1, "mult": 1}}]}}"#)),
            "edges[0].b"
        );
        assert_eq!(
            err_path(r#"{"components": [{"id": 1, "kind": "exceptional", "N": -2, "nu": 2, "att": 0, "compact": true, "in_fiber": true}], "edges": []}"#),
            "components[0].N"
        );
        assert_eq!(
            err_path(r#"{"components": [{"id": 1, "kind": "axis_x", "N": 2, "nu": 1, "att": 1, "compact": false, "in_fiber": false}], "edges": []}"#),
            "components[0].att"
        );
        assert_eq!(
            err_path(r#"{"components": [{"id": 1, "kind": "exceptional", "N": 2, "nu": 2, "att": 0, "compact": true}], "edges": []}"#),
            "components[0]"
        );
        assert_eq!(
            err_path(&format!(r#"{{"components": [{{"id": 1, "genus": 1, {EXC}}}], "edges": []}}"#)),
            "components[0].genus"
        );
        assert_eq!(
            err_path(&format!(r#"{{"components": [{{"id": 1, "colour": 1, {EXC}}}], "edges": []}}"#)),
            "components[0].colour"
        );
        assert_eq!(
            err_path(r#"{"components": [{"id": 1, "kind": "exceptional", "N": 2.5, "nu": 2, "att": 0, "compact": true, "in_fiber": true}], "edges": []}"#),
            "components[0].N"
        );
    }

    #[test]
    fn big_integers_survive() {
        let text = r#"{"components": [{"id": 1, "kind": "axis_x", "N": 123456789012345678901234567890, "nu": 1, "att": 0, "compact": false, "in_fiber": false}], "edges": []}"#;
        let g = import_graph(text).unwrap();
        assert_eq!(g.components()[0].n.to_string(), "123456789012345678901234567890");
        assert!(export_graph(&g).contains("\"N\": 123456789012345678901234567890"));
    }
}
