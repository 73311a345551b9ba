//! Textual monomial ideals in `x`, `y`, their monomial factor and their
//! Newton polygon.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{primitive, LatticeVector, Ray};

/// Exponent vector `(a, b)` of the monomial `x^a y^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub a: BigInt,
    pub b: BigInt,
}

impl Monomial {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Value of the linear form `p*a + q*b`.
    pub fn pair(&self, r: &Ray) -> BigInt {
        r.p() * &self.a + r.q() * &self.b
    }

    fn sub(&self, other: &Monomial) -> Monomial {
        Monomial::new(&self.a - &other.a, &self.b - &other.b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(f: &mut fmt::Formatter<'_>, var: char, e: &BigInt) -> fmt::Result {
            if e == &BigInt::from(1) {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "1"),
            (false, true) => factor(f, 'x', &self.a),
            (true, false) => factor(f, 'y', &self.b),
            (false, false) => {
                factor(f, 'x', &self.a)?;
                write!(f, "*")?;
                factor(f, 'y', &self.b)
            }
        }
    }
}

/// A monomial ideal `I = (h) * I'` with `I'` generated by `reduced`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
    h: Monomial,
    reduced: Vec<Monomial>,
    finitely_supported: bool,
    coefficients_ignored: bool,
}

impl MonomialIdeal {
    pub fn from_generators(generators: Vec<Monomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Parse {
                position: 1,
                message: "expected at least one generator".into(),
            });
        }
        if generators.iter().any(|m| m.a.is_negative() || m.b.is_negative()) {
            return Err(Error::Parse {
                position: 1,
                message: "negative exponent".into(),
            });
        }
        let h = Monomial::new(
            generators.iter().map(|m| &m.a).min().unwrap().clone(),
            generators.iter().map(|m| &m.b).min().unwrap().clone(),
        );
        let mut sorted: Vec<Monomial> = generators.iter().map(|m| m.sub(&h)).collect();
        sorted.sort();
        sorted.dedup();
        // sorted by a, then b: keep a staircase with strictly decreasing b
        let mut reduced: Vec<Monomial> = Vec::new();
        for m in sorted {
            if reduced.last().is_none_or(|last| m.b < last.b) {
                reduced.push(m);
            }
        }
        if h.is_one() && reduced.iter().any(Monomial::is_one) {
            return Err(Error::UnitIdeal);
        }
        let finitely_supported = reduced.first().is_some_and(|m| m.a.is_zero())
            && reduced.last().is_some_and(|m| m.b.is_zero());
        Ok(Self {
            generators,
            h,
            reduced,
            finitely_supported,
            coefficients_ignored: false,
        })
    }

    /// Generators as written, in input order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn h(&self) -> &Monomial {
        &self.h
    }

    /// Minimal generators of `I / (h)`, sorted by increasing x-exponent.
    pub fn reduced_generators(&self) -> &[Monomial] {
        &self.reduced
    }

    /// Minimal generators of `I` itself.
    pub fn minimal_generators(&self) -> Vec<Monomial> {
        self.reduced
            .iter()
            .map(|m| Monomial::new(&m.a + &self.h.a, &m.b + &self.h.b))
            .collect()
    }

    pub fn is_finitely_supported(&self) -> bool {
        self.finitely_supported
    }

    /// True when `I = (h)`.
    pub fn is_principal(&self) -> bool {
        self.reduced.len() == 1
    }

    pub fn coefficients_ignored(&self) -> bool {
        self.coefficients_ignored
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    /// term := [sign] [integer ['*']] factor ('*' factor)*  |  [sign] integer
    fn term(&mut self) -> Result<(Monomial, bool)> {
        let mut coefficient = false;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
            coefficient = true;
        }
        let mut m = Monomial::new(0, 0);
        let mut need_factor = true;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.integer()?;
            if c.is_zero() {
                self.pos -= 1;
                return self.err("zero coefficient");
            }
            coefficient = coefficient || c != BigInt::from(1);
            need_factor = false;
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    need_factor = true;
                }
                Some(b'x') | Some(b'y') => need_factor = true,
                _ => {
                    coefficient = true;
                }
            }
        }
        if need_factor {
            self.factor(&mut m)?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                self.factor(&mut m)?;
            }
        }
        Ok((m, coefficient))
    }

    fn factor(&mut self, m: &mut Monomial) -> Result<()> {
        let var = match self.peek() {
            Some(c @ (b'x' | b'y')) => c,
            Some(c) => return self.err(format!("unexpected '{}', expected x or y", c as char)),
            None => return self.err("unexpected end of input, expected x or y"),
        };
        self.pos += 1;
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            BigInt::from(1)
        };
        if var == b'x' {
            m.a += e;
        } else {
            m.b += e;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of monomial generators.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut generators = Vec::new();
    let mut coefficients_ignored = false;
    loop {
        let start = p.pos;
        let (m, coefficient) = p.term()?;
        let mut terms = 1;
        while matches!(p.peek(), Some(b'+') | Some(b'-')) {
            p.term()?;
            terms += 1;
        }
        if terms > 1 {
            return Err(Error::UnsupportedIdeal {
                index: generators.len() + 1,
                text: text[start..p.pos].trim().to_string(),
            });
        }
        coefficients_ignored |= coefficient;
        generators.push(m);
        match p.peek() {
            Some(b',') => p.pos += 1,
            None => break,
            Some(c) => return p.err(format!("unexpected '{}'", c as char)),
        }
    }
    let mut ideal = MonomialIdeal::from_generators(generators)?;
    ideal.coefficients_ignored = coefficients_ignored;
    Ok(ideal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactEdge {
    /// Primitive inner normal.
    pub normal: Ray,
    pub lattice_length: BigInt,
    pub start: Monomial,
    pub end: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// From the y-axis side to the x-axis side.
    pub vertices: Vec<Monomial>,
    pub compact_edges: Vec<CompactEdge>,
}

pub fn newton_polygon(ideal: &MonomialIdeal) -> NewtonPolygon {
    let mut vertices: Vec<Monomial> = Vec::new();
    for m in ideal.minimal_generators() {
        while vertices.len() >= 2 {
            let p = &vertices[vertices.len() - 2];
            let q = &vertices[vertices.len() - 1];
            let turn = (&q.a - &p.a) * (&m.b - &q.b) - (&q.b - &p.b) * (&m.a - &q.a);
            if turn.is_positive() {
                break;
            }
            vertices.pop();
        }
        vertices.push(m);
    }
    let compact_edges = vertices
        .windows(2)
        .map(|w| {
            let da = &w[1].a - &w[0].a;
            let db = &w[0].b - &w[1].b;
            let lattice_length = da.gcd(&db);
            let normal = primitive(&LatticeVector { p: db, q: da }).expect("distinct vertices");
            CompactEdge {
                normal,
                lattice_length,
                start: w[0].clone(),
                end: w[1].clone(),
            }
        })
        .collect();
    NewtonPolygon {
        vertices,
        compact_edges,
    }
}

/// `min p*a + q*b` over the exponents of the ideal.
pub fn support_value(np: &NewtonPolygon, r: &Ray) -> BigInt {
    np.vertices
        .iter()
        .map(|m| m.pair(r))
        .min()
        .expect("a Newton polygon has at least one vertex")
}
