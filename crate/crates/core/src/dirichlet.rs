//! The Dirichlet polynomial P_G(s) = Σ a_n / n^s.

use crate::arith::{divisors, factorize, prime_power};
use crate::config::Caps;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::lattice::{subgroup_lattice, SubgroupLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact coefficient map `n -> a_n`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletPolynomial {
    order: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

/// The factor `1 - c / q^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub c: BigInt,
    pub q: u64,
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_negative() {
            write!(f, "(1+{}/{}^s)", -&self.c, self.q)
        } else {
            write!(f, "(1-{}/{}^s)", self.c, self.q)
        }
    }
}

pub fn dirichlet_polynomial(g: &FiniteGroup, caps: &Caps) -> Result<DirichletPolynomial> {
    Ok(DirichletPolynomial::from_lattice(&subgroup_lattice(g, caps)?))
}

impl DirichletPolynomial {
    /// `a_n = Σ_{|G:H| = n} μ_G(H)`.
    pub fn from_lattice(lat: &SubgroupLattice) -> Self {
        let n = lat.group_order() as u64;
        let mut coeffs: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (i, h) in lat.subgroups().iter().enumerate() {
            let m = lat.mobius(i);
            if m != 0 {
                *coeffs.entry(n / h.order() as u64).or_default() += m;
            }
        }
        Self::new(n, coeffs)
    }

    pub fn new(order: u64, mut coeffs: BTreeMap<u64, BigInt>) -> Self {
        coeffs.retain(|_, v| !v.is_zero());
        DirichletPolynomial { order, coeffs }
    }

    /// The constant polynomial 1 attached to a group of the given order.
    pub fn one(order: u64) -> Self {
        Self::new(order, BTreeMap::from([(1, BigInt::one())]))
    }

    /// `∏ (1 - c_i / q_i^s)`.
    pub fn from_factors(order: u64, factors: &[LinearFactor]) -> Self {
        factors.iter().fold(Self::one(order), |acc, f| acc.mul(&Self::linear(order, f)))
    }

    fn linear(order: u64, f: &LinearFactor) -> Self {
        let mut m = BTreeMap::from([(1, BigInt::one())]);
        *m.entry(f.q).or_default() -= &f.c;
        Self::new(order, m)
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, n: u64) -> BigInt {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                *m.entry(a * b).or_default() += x * y;
            }
        }
        Self::new(self.order, m)
    }

    /// P(t) as an exact rational.
    pub fn eval(&self, t: u32) -> BigRational {
        self.coeffs
            .iter()
            .map(|(n, a)| BigRational::new(a.clone(), BigInt::from(*n).pow(t)))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// |G|^t P(t) = Σ a_n (|G|/n)^t, which equals φ_G(t).
    pub fn phi_at(&self, t: u32) -> BigInt {
        self.coeffs.iter().map(|(n, a)| a * BigInt::from(self.order / n).pow(t)).sum()
    }

    /// The terms whose index is a power of `p` (including `a_1`), as a
    /// polynomial in `x = p^{-s}`.
    fn p_part(&self, p: u64) -> Vec<BigInt> {
        let mut poly = Vec::new();
        for (n, a) in &self.coeffs {
            let k = if *n == 1 {
                0
            } else {
                match prime_power(*n) {
                    Some((q, k)) if q == p => k as usize,
                    _ => continue,
                }
            };
            if poly.len() <= k {
                poly.resize(k + 1, BigInt::zero());
            }
            poly[k] = a.clone();
        }
        poly
    }

    fn from_p_poly(order: u64, p: u64, poly: &[BigInt]) -> Self {
        let mut m = BTreeMap::new();
        for (k, a) in poly.iter().enumerate() {
            m.insert(p.pow(k as u32), a.clone());
        }
        Self::new(order, m)
    }

    /// Whether P equals the product of its prime-power parts.
    pub fn splits_over_primes(&self) -> bool {
        let prod = factorize(self.order)
            .iter()
            .map(|&(p, _)| Self::from_p_poly(self.order, p, &self.p_part(p)))
            .fold(Self::one(self.order), |acc, x| acc.mul(&x));
        prod == *self
    }

    /// Writes P as a product of factors `1 - p^e / (p^k)^s`. Each prime part
    /// is factored separately by a depth-first search that always peels a
    /// factor at the lowest remaining degree, trying small `p^e` first.
    pub fn product_form(&self) -> Result<Vec<LinearFactor>> {
        if !self.splits_over_primes() {
            return Err(GroupError::NoProductForm("P is not the product of its prime-power parts".into()));
        }
        let mut out = Vec::new();
        for (p, _) in factorize(self.order) {
            let poly = self.p_part(p);
            let fs = factor_p_poly(p, &poly)
                .ok_or_else(|| GroupError::NoProductForm(format!("the {p}-part has no factorisation")))?;
            out.extend(fs.into_iter().map(|(e, k)| LinearFactor { c: BigInt::from(p).pow(e), q: p.pow(k) }));
        }
        Ok(out)
    }

    /// Product form as text, or the expanded form if none exists.
    pub fn display_product(&self) -> String {
        match self.product_form() {
            Ok(fs) if fs.is_empty() => "1".into(),
            Ok(fs) => fs.iter().map(|f| f.to_string()).collect(),
            Err(_) => self.to_string(),
        }
    }

    /// Whether P = ∏_p Q_{p,δ_p} with Q_{p,δ} = ∏_{0≤i<δ} (1 - p^i/p^s).
    /// On success returns the pairs `(p, δ_p)`.
    pub fn q_factorisation(&self) -> Option<Vec<(u64, u32)>> {
        if !self.splits_over_primes() {
            return None;
        }
        let mut out = Vec::new();
        for (p, _) in factorize(self.order) {
            let poly = self.p_part(p);
            let delta = (poly.len() - 1) as u32;
            let q = q_poly(p, delta);
            if q != poly {
                return None;
            }
            out.push((p, delta));
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(n, a)| (n.to_string(), json_int(a)))
            .collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| GroupError::Parse(format!("dirichlet polynomial: {m}"));
        let order = v.get("order").and_then(|o| o.as_u64()).ok_or_else(|| bad("missing order"))?;
        let obj = v.get("coeffs").and_then(|c| c.as_object()).ok_or_else(|| bad("missing coeffs"))?;
        let mut coeffs = BTreeMap::new();
        for (k, a) in obj {
            let n: u64 = k.parse().map_err(|_| bad("bad index"))?;
            let a: BigInt = match a {
                serde_json::Value::Number(x) => x.to_string().parse().map_err(|_| bad("bad coefficient"))?,
                serde_json::Value::String(s) => s.parse().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("bad coefficient")),
            };
            coeffs.insert(n, a);
        }
        Ok(Self::new(order, coeffs))
    }
}

fn json_int(a: &BigInt) -> serde_json::Value {
    match i64::try_from(a) {
        Ok(x) => x.into(),
        Err(_) => a.to_string().into(),
    }
}

impl fmt::Display for DirichletPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in &self.coeffs {
            let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = a.abs();
            if *n == 1 {
                write!(f, "{sign}{mag}")?;
            } else {
                write!(f, "{sign}{mag}/{n}^s")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficients of Q_{p,δ} as a polynomial in `p^{-s}`.
pub fn q_poly(p: u64, delta: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for i in 0..delta {
        let c = BigInt::from(p).pow(i);
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k] += a;
            next[k + 1] -= a * &c;
        }
        poly = next;
    }
    poly
}

/// Q_{p,δ} as a Dirichlet polynomial for a group of the given order.
pub fn q_polynomial(order: u64, p: u64, delta: u32) -> DirichletPolynomial {
    DirichletPolynomial::from_p_poly(order, p, &q_poly(p, delta))
}

fn trim(poly: &mut Vec<BigInt>) {
    while poly.len() > 1 && poly.last().is_some_and(|a| a.is_zero()) {
        poly.pop();
    }
}

/// Exact division of `poly` by `1 - c x^k`, if the remainder vanishes.
fn divide(poly: &[BigInt], c: &BigInt, k: usize) -> Option<Vec<BigInt>> {
    let deg = poly.len() - 1;
    if deg < k {
        return None;
    }
    let mut q = vec![BigInt::zero(); deg - k + 1];
    for i in 0..q.len() {
        let prev = if i >= k { &q[i - k] * c } else { BigInt::zero() };
        q[i] = &poly[i] + prev;
    }
    for i in q.len()..=deg {
        let carried = if i >= k { -(c * &q[i - k]) } else { BigInt::zero() };
        if poly[i] != carried {
            return None;
        }
    }
    let mut q = q;
    trim(&mut q);
    Some(q)
}

/// Factors a polynomial with constant term 1 into `(1 - p^e x^k)` pieces,
/// returned as `(e, k)` pairs.
fn factor_p_poly(p: u64, poly: &[BigInt]) -> Option<Vec<(u32, u32)>> {
    let mut poly = poly.to_vec();
    trim(&mut poly);
    if poly.len() == 1 {
        return if poly[0].is_one() { Some(Vec::new()) } else { None };
    }
    let k = (1..poly.len()).find(|&i| !poly[i].is_zero())?;
    let target = -poly[k].clone();
    if !target.is_positive() {
        return None;
    }
    let mut e = 0u32;
    loop {
        let c = BigInt::from(p).pow(e);
        if c > target {
            return None;
        }
        if let Some(q) = divide(&poly, &c, k) {
            if let Some(mut rest) = factor_p_poly(p, &q) {
                rest.insert(0, (e, k as u32));
                return Some(rest);
            }
        }
        e += 1;
    }
}

/// Number of maximal subgroups of index `n` (a prime power `p^k`) read off
/// P alone: the sum of `c` over the factors `1 - c/n^s` of the `p`-part in
/// [`DirichletPolynomial::product_form`]'s factorisation. When the `p`-part
/// has no such factorisation only `k = 1` is answerable, as `-a_p`.
pub fn count_maximal_of_index(poly: &DirichletPolynomial, n: u64) -> Result<u64> {
    let (p, k) = prime_power(n).ok_or(GroupError::NotPrimePower(n))?;
    let part = poly.p_part(p);
    if let Some(fs) = factor_p_poly(p, &part) {
        let c: u64 = fs.iter().filter(|&&(_, kk)| kk == k).map(|&(e, _)| p.pow(e)).sum();
        return Ok(c);
    }
    if k == 1 {
        let a = poly.coeff(p);
        return u64::try_from(-a).map_err(|_| GroupError::NoProductForm(format!("a_{p} is positive")));
    }
    Err(GroupError::NoProductForm(format!("the {p}-part has no factorisation")))
}

/// Indices of P that divide the group order, the unknowns in P recovery.
pub fn divisor_support(order: u64) -> Vec<u64> {
    divisors(order)
}
