//! Exact one-variable rational functions and the local topological zeta
//! function `Z_top^(d)` of a resolution graph.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;
use crate::poly::Poly;

/// `numerator / denominator`, coprime, with joint integer content 1 and a
/// positive leading coefficient in the denominator. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Normalises content and sign of an already coprime pair.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        Self {
            num: num.div_scalar(&c),
            den: den.div_scalar(&c),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_coprime(p, Poly::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &self.num * &other.den + &other.num * &self.den;
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, s: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(s) / d)
    }

    /// Poles with their orders, in increasing order.
    pub fn poles(&self) -> Result<Vec<(BigRational, u32)>> {
        let roots = rational_roots(&self.den)?;
        Ok(roots
            .into_iter()
            .map(|(r, _, m)| (r, m))
            .collect())
    }

    /// Denominator as `c * prod (a s + b)^m`.
    pub fn factored(&self) -> Result<String> {
        let roots = rational_roots(&self.den)?;
        let mut rest = self.den.clone();
        let mut factors = Vec::new();
        for (_, f, m) in &roots {
            for _ in 0..*m {
                rest = rest.div_exact(f).expect("root factor divides");
            }
            let s = format!("({f})");
            factors.push(if *m > 1 { format!("{s}^{m}") } else { s });
        }
        let c = rest.coeffs().first().cloned().unwrap_or_else(BigInt::one);
        let mut den = String::new();
        if !c.is_one() || factors.is_empty() {
            den.push_str(&c.to_string());
        }
        den.push_str(&factors.join(""));
        if self.den == Poly::one() {
            return Ok(self.num.to_string());
        }
        let num = paren_if(&self.num);
        if factors.len() + usize::from(!c.is_one()) > 1 || (factors.len() == 1 && !c.is_one()) {
            Ok(format!("{num}/({den})"))
        } else {
            Ok(format!("{num}/{den}"))
        }
    }

    pub fn latex(&self) -> String {
        if self.den == Poly::one() {
            return self.num.to_string();
        }
        format!("\\frac{{{}}}{{{}}}", self.num, self.den)
    }
}

fn paren_if(p: &Poly) -> String {
    if p.term_count() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            return write!(f, "{}", self.num);
        }
        let den = if self.den.degree() == Some(0) {
            self.den.to_string()
        } else {
            format!("({})", self.den)
        };
        write!(f, "{}/{}", paren_if(&self.num), den)
    }
}

/// Sturm successor `-rem(a, b)` scaled by a positive constant.
fn sturm_next(a: &Poly, b: &Poly) -> Poly {
    let delta = a.degree().unwrap() - b.degree().unwrap();
    let lc = b.leading().unwrap();
    let mut r = Poly::new(a.coeffs().to_vec());
    let dd = b.degree().unwrap();
    // pseudo-remainder with lc^(delta+1)
    while let Some(dr) = r.degree() {
        if dr < dd {
            break;
        }
        let c = r.leading().unwrap().clone();
        let mut shifted = vec![BigInt::zero(); dr - dd];
        shifted.extend(b.coeffs().iter().map(|x| x * &c));
        r = r.scale(lc) - Poly::new(shifted);
    }
    let negative_factor = lc.is_negative() && (delta + 1) % 2 == 1;
    let r = if negative_factor { r } else { -r };
    let g = r.content();
    if g.is_zero() {
        r
    } else {
        r.div_scalar(&g)
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while chain.last().unwrap().degree().unwrap_or(0) > 0 {
        let n = chain.len();
        let next = sturm_next(&chain[n - 2], &chain[n - 1]);
        if next.is_zero() {
            break;
        }
        chain.push(next);
    }
    chain
}

fn variations(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Rational number with the least denominator in `[lo, hi]`.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let c = lo.ceil();
    if &c <= hi {
        // smallest |integer| in range
        if !lo.is_positive() && !hi.is_negative() {
            return BigRational::zero();
        }
        return if lo.is_positive() { c } else { hi.floor() };
    }
    let n = lo.floor();
    let inner = simplest_between(&(hi - &n).recip(), &(lo - &n).recip());
    n + inner.recip()
}

/// Distinct rational roots of `p` with their primitive linear factors and
/// multiplicities. Fails when some root is not rational.
fn rational_roots(p: &Poly) -> Result<Vec<(BigRational, Poly, u32)>> {
    let nonlinear = || Error::NonLinearDenominator(p.to_string());
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let prim = p.primitive_part();
    let mut sqf = prim
        .div_exact(&prim.gcd(&prim.derivative()))
        .expect("gcd divides")
        .primitive_part();
    let mut found = Vec::new();
    while sqf.degree().unwrap_or(0) > 0 {
        let chain = sturm_chain(&sqf);
        let lc = sqf.leading().unwrap().abs();
        let bound = sqf
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.abs(), lc.clone()))
            .max()
            .unwrap()
            .ceil()
            + BigRational::from_integer(BigInt::from(2));
        let (mut lo, mut hi) = (-bound.clone(), bound);
        let total = variations(&chain, &lo) - variations(&chain, &hi);
        if total < sqf.degree().unwrap() {
            return Err(nonlinear());
        }
        let resolution = BigRational::new(BigInt::one(), &lc * &lc);
        let root = loop {
            let count = variations(&chain, &lo) - variations(&chain, &hi);
            if count == 1 && &hi - &lo < resolution {
                let r = simplest_between(&lo, &hi);
                if !sqf.eval(&r).is_zero() {
                    return Err(nonlinear());
                }
                break r;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            if sqf.eval(&mid).is_zero() {
                break mid;
            }
            if variations(&chain, &lo) > variations(&chain, &mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        };
        let factor = Poly::linear(root.denom().clone(), -root.numer().clone());
        sqf = sqf.div_linear(&factor.coeffs()[1], &factor.coeffs()[0]).ok_or_else(nonlinear)?;
        let mut m = 0;
        let mut rest = prim.clone();
        while let Some(q) = rest.div_linear(&factor.coeffs()[1], &factor.coeffs()[0]) {
            rest = q;
            m += 1;
        }
        found.push((root, factor, m));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found)
}

/// `Z_top^(d)`: sum over `I ⊂ S` with `d | N_i` for all `i ∈ I` of
/// `chi(E_I° ∩ fiber) * prod 1/(N_i s + nu_i)`.
///
/// Terms are accumulated over the common denominator of all factors with
/// `d | N_i`; the only possible common factors are those linear factors.
pub fn topological_zeta(g: &ResolutionGraph, d: u64) -> Result<RationalFunction> {
    if d == 0 {
        return Err(Error::InvalidD);
    }
    let d = BigInt::from(d);
    let strata = g.fiber_strata();
    let mut factors: BTreeMap<usize, (BigInt, BigInt)> = BTreeMap::new();
    for c in g.components().iter().filter(|c| c.in_s()) {
        if c.n.is_multiple_of(&d) {
            factors.insert(c.id, (c.n.clone(), c.nu.clone()));
        }
    }
    let full = factors
        .values()
        .fold(Poly::one(), |acc, (n, nu)| &acc * &Poly::linear(n.clone(), nu.clone()));
    let without = |ids: &[usize]| -> Poly {
        ids.iter().fold(full.clone(), |acc, id| {
            let (n, nu) = &factors[id];
            acc.div_linear(n, nu).expect("factor of the product")
        })
    };
    let mut num = full.scale(&BigInt::from(strata.empty));
    for (&id, &chi) in &strata.singles {
        if factors.contains_key(&id) {
            num = num + without(&[id]).scale(&BigInt::from(chi));
        }
    }
    for (&(a, b), &chi) in &strata.pairs {
        if factors.contains_key(&a) && factors.contains_key(&b) {
            num = num + without(&[a, b]).scale(&BigInt::from(chi));
        }
    }

    // cancel common linear factors
    let mut constant = BigInt::one();
    let mut linear: BTreeMap<(BigInt, BigInt), u32> = BTreeMap::new();
    for (n, nu) in factors.values() {
        let g = n.gcd(nu);
        constant *= &g;
        *linear.entry((n / &g, nu / &g)).or_default() += 1;
    }
    let mut den = Poly::constant(constant);
    for ((a, b), m) in linear {
        let mut left = m;
        while left > 0 {
            match num.div_linear(&a, &b) {
                Some(q) if !num.is_zero() => {
                    num = q;
                    left -= 1;
                }
                _ => break,
            }
        }
        for _ in 0..left {
            den = &den * &Poly::linear(a.clone(), b.clone());
        }
    }
    Ok(RationalFunction::from_coprime(num, den))
}
