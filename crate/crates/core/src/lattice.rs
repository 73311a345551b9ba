//! Exact plane lattice geometry: primitive rays, determinants and the
//! minimal unimodular subdivision of a two-dimensional rational cone.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub p: BigInt,
    pub q: BigInt,
}

impl LatticeVector {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Self {
            p: p.into(),
            q: q.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        &self.p * &other.p + &self.q * &other.q
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A primitive, nonzero lattice vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray(LatticeVector);

impl Ray {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        primitive(&LatticeVector::new(p, q))
    }

    pub fn x_axis() -> Self {
        Ray(LatticeVector::new(1, 0))
    }

    pub fn y_axis() -> Self {
        Ray(LatticeVector::new(0, 1))
    }

    pub fn p(&self) -> &BigInt {
        &self.0.p
    }

    pub fn q(&self) -> &BigInt {
        &self.0.q
    }

    pub fn vector(&self) -> &LatticeVector {
        &self.0
    }

    pub fn in_first_quadrant(&self) -> bool {
        !self.0.p.is_negative() && !self.0.q.is_negative()
    }

    /// Angular order for rays of the closed first quadrant, starting at (1,0).
    pub fn angular_cmp(&self, other: &Ray) -> Ordering {
        det(other.vector(), self.vector()).cmp(&BigInt::zero())
    }

    /// Sum of two rays, made primitive. The sum of two rays spanning a
    /// unimodular cone is already primitive.
    pub fn add(&self, other: &Ray) -> Result<Ray> {
        primitive(&LatticeVector {
            p: &self.0.p + &other.0.p,
            q: &self.0.q + &other.0.q,
        })
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Strictly convex cone spanned by two first-quadrant rays, `u` before `v`
/// counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone2 {
    u: Ray,
    v: Ray,
}

impl Cone2 {
    pub fn new(u: Ray, v: Ray) -> Result<Self> {
        if !u.in_first_quadrant() || !v.in_first_quadrant() || !det(u.vector(), v.vector()).is_positive() {
            return Err(Error::DegenerateCone);
        }
        Ok(Self { u, v })
    }

    pub fn u(&self) -> &Ray {
        &self.u
    }

    pub fn v(&self) -> &Ray {
        &self.v
    }

    pub fn det(&self) -> BigInt {
        det(self.u.vector(), self.v.vector())
    }
}

pub fn primitive(v: &LatticeVector) -> Result<Ray> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.p.gcd(&v.q);
    Ok(Ray(LatticeVector {
        p: &v.p / &g,
        q: &v.q / &g,
    }))
}

pub fn det(u: &LatticeVector, v: &LatticeVector) -> BigInt {
    &u.p * &v.q - &u.q * &v.p
}

/// A lattice vector `w` with `det(u, w) = 1`.
fn unimodular_complement(u: &Ray) -> LatticeVector {
    let e = u.p().extended_gcd(u.q());
    debug_assert!(e.gcd.is_one());
    // x*p + y*q = 1  =>  det((p,q), (-y, x)) = 1
    LatticeVector { p: -e.y, q: e.x }
}

/// Interior rays of the minimal smooth subdivision of `cone`, in
/// counterclockwise order.
///
/// Walks the Hirzebruch–Jung chain: in a basis `(u, u')` with `det(u, u') = 1`
/// the far ray reads `v = a*u + n*u'`, and the next boundary point of the
/// hull of nonzero lattice points is `ceil(a/n)*u + u'`.
pub fn smooth_subdivide(cone: &Cone2) -> Vec<Ray> {
    let mut rays = Vec::new();
    let v = cone.v.vector();
    let mut u = cone.u.clone();
    loop {
        let n = det(u.vector(), v);
        if n.is_one() {
            break;
        }
        let comp = unimodular_complement(&u);
        let a = det(v, &comp);
        let c = a.div_ceil(&n);
        let w = Ray(LatticeVector {
            p: &c * u.p() + &comp.p,
            q: &c * u.q() + &comp.q,
        });
        rays.push(w.clone());
        u = w;
    }
    rays
}
