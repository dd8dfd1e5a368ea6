//! Normalized cochains `G^k -> Z/N` with trivial action, the bar
//! differential, cocycle and coboundary decisions, cup products of cyclic
//! coordinates, and the obstruction cocycle `gamma_{omega,z}`.
//!
//! A cochain is stored densely over all `k`-tuples, indexed by
//! `g_1*n^(k-1) + ... + g_k` for a group of order `n`. Values at tuples that
//! contain the identity are always zero.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{gcd, Element, FiniteGroup, Subgroup};
use crate::linalg::{solve_mod, Equation};

pub const MAX_DEGREE: usize = 3;
/// Largest group order for which degree-3 cochains are stored.
pub const DEGREE3_ORDER_LIMIT: usize = 128;
/// Largest group order for which degree-2 cochains are stored.
pub const DEGREE2_ORDER_LIMIT: usize = 512;

fn storage_check(degree: usize, order: usize) -> Result<()> {
    let ok = match degree {
        0 | 1 => true,
        2 => order <= DEGREE2_ORDER_LIMIT,
        3 => order <= DEGREE3_ORDER_LIMIT,
        _ => return Err(Error::Degree(degree)),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::CochainTooLarge { degree, order })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: Arc<FiniteGroup>,
    degree: usize,
    modulus: u64,
    values: Vec<u64>,
}

/// Decodes a dense index into a `k`-tuple.
fn decode(mut index: usize, n: usize, k: usize) -> [Element; 4] {
    let mut t = [0; 4];
    for slot in t[..k].iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    t
}

fn encode(tuple: &[Element], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * n + g)
}

#[inline]
fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    add_mod(a, m - b % m, m)
}

/// `(delta f)(t)` for a dense, not necessarily normalized, `k`-cochain.
fn delta_at(group: &FiniteGroup, k: usize, modulus: u64, f: &[u64], t: &[Element]) -> u64 {
    let n = group.order();
    let mut buf = [0; 4];
    let mut acc = f[encode(&t[1..], n)];
    for i in 0..k {
        for (j, slot) in buf[..k].iter_mut().enumerate() {
            *slot = match j.cmp(&i) {
                std::cmp::Ordering::Less => t[j],
                std::cmp::Ordering::Equal => group.mul(t[i], t[i + 1]),
                std::cmp::Ordering::Greater => t[j + 1],
            };
        }
        let v = f[encode(&buf[..k], n)];
        acc = if i % 2 == 0 { sub_mod(acc, v, modulus) } else { add_mod(acc, v, modulus) };
    }
    let last = f[encode(&t[..k], n)];
    if k % 2 == 0 {
        sub_mod(acc, last, modulus)
    } else {
        add_mod(acc, last, modulus)
    }
}

/// Dense coboundary of a dense `k`-cochain (normalized or not).
fn raw_coboundary(group: &FiniteGroup, k: usize, modulus: u64, f: &[u64]) -> Vec<u64> {
    let n = group.order();
    let len = n.pow(k as u32 + 1);
    (0..len)
        .into_par_iter()
        .map(|idx| delta_at(group, k, modulus, f, &decode(idx, n, k + 1)[..k + 1]))
        .collect()
}

impl Cochain {
    pub fn zero(group: Arc<FiniteGroup>, degree: usize, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        storage_check(degree, group.order())?;
        let len = group.order().pow(degree as u32);
        Ok(Cochain { group, degree, modulus, values: vec![0; len] })
    }

    /// Tabulates `f` on all tuples; `f` must vanish whenever an argument is
    /// the identity.
    pub fn from_fn(
        group: Arc<FiniteGroup>,
        degree: usize,
        modulus: u64,
        mut f: impl FnMut(&[Element]) -> i64,
    ) -> Result<Self> {
        let mut c = Self::zero(group, degree, modulus)?;
        let n = c.group.order();
        for idx in 0..c.values.len() {
            let t = decode(idx, n, degree);
            let v = f(&t[..degree]).rem_euclid(modulus as i64) as u64;
            c.values[idx] = v;
        }
        c.check_normalized()?;
        Ok(c)
    }

    /// Builds a cochain from dense values (any integers, reduced mod `N`).
    pub fn from_dense(group: Arc<FiniteGroup>, degree: usize, modulus: u64, values: Vec<u64>) -> Result<Self> {
        let mut c = Self::zero(group, degree, modulus)?;
        if values.len() != c.values.len() {
            return Err(Error::InvalidTable(format!(
                "expected {} cochain values, got {}",
                c.values.len(),
                values.len()
            )));
        }
        c.values = values.into_iter().map(|v| v % modulus).collect();
        c.check_normalized()?;
        Ok(c)
    }

    fn check_normalized(&self) -> Result<()> {
        let n = self.group.order();
        for (idx, &v) in self.values.iter().enumerate() {
            let t = decode(idx, n, self.degree);
            if v != 0 && t[..self.degree].contains(&0) {
                return Err(Error::NotNormalized(t[..self.degree].to_vec()));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Dense values in tuple-index order.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, tuple: &[Element]) -> u64 {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values[encode(tuple, self.group.order())]
    }

    /// Nonzero entries in tuple-index order.
    pub fn support(&self) -> impl Iterator<Item = (Vec<Element>, u64)> + '_ {
        let n = self.group.order();
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(idx, &v)| (decode(idx, n, self.degree)[..self.degree].to_vec(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.degree != other.degree {
            return Err(Error::Degree(other.degree));
        }
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| add_mod(a, b, m)).collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| sub_mod(a, b, m)).collect();
        Ok(Cochain { values, ..self.clone() })
    }

    /// Reinterprets values in `Z/M` through `Z/N -> Z/M`, `a -> a*M/N`.
    pub fn rescale(&self, modulus: u64) -> Result<Cochain> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if modulus % self.modulus != 0 {
            return Err(Error::ModulusMismatch(self.modulus, modulus));
        }
        let k = modulus / self.modulus;
        Ok(Cochain {
            values: self.values.iter().map(|&v| v * k).collect(),
            modulus,
            ..self.clone()
        })
    }

    /// Restriction along a subgroup embedding.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Cochain> {
        let k = self.degree;
        let mut out = Cochain::zero(sub.group.clone(), k, self.modulus)?;
        let n = sub.group.order();
        let mut buf = [0; 4];
        for idx in 0..out.values.len() {
            let t = decode(idx, n, k);
            for (slot, &g) in buf.iter_mut().zip(&t[..k]) {
                *slot = sub.embedding[g];
            }
            out.values[idx] = self.value(&buf[..k]);
        }
        Ok(out)
    }

    /// Transport along a bijection `old index -> new index` of the group.
    pub fn relabel(&self, group: Arc<FiniteGroup>, mapping: &[Element]) -> Result<Cochain> {
        let k = self.degree;
        let mut out = Cochain::zero(group, k, self.modulus)?;
        let n = self.group.order();
        let mut buf = [0; 4];
        for (idx, &v) in self.values.iter().enumerate() {
            let t = decode(idx, n, k);
            for (slot, &g) in buf.iter_mut().zip(&t[..k]) {
                *slot = mapping[g];
            }
            out.values[encode(&buf[..k], n)] = v;
        }
        Ok(out)
    }
}

/// The bar differential `delta: C^k -> C^(k+1)` with trivial action.
pub fn coboundary(f: &Cochain) -> Result<Cochain> {
    let k = f.degree;
    if k >= MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    storage_check(k + 1, f.group.order())?;
    let values = raw_coboundary(&f.group, k, f.modulus, &f.values);
    Ok(Cochain { group: f.group.clone(), degree: k + 1, modulus: f.modulus, values })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub holds: bool,
    /// First tuple (in index order) where the coboundary is nonzero, with its
    /// value there.
    pub certificate: Option<(Vec<Element>, u64)>,
}

/// Checks `delta f = 0` on every tuple of non-identity elements (tuples
/// containing the identity vanish for normalized `f`).
pub fn is_cocycle(f: &Cochain) -> CocycleCheck {
    let k = f.degree;
    let n = f.group.order();
    // Trivial action makes every 0-cochain a cocycle.
    if n == 1 || k == 0 {
        return CocycleCheck { holds: true, certificate: None };
    }
    let inner = (n - 1).pow(k as u32);
    let found = (1..n).into_par_iter().find_map_first(|g1| {
        let mut t = [0; 4];
        t[0] = g1;
        for rest in 0..inner {
            let mut r = rest;
            for slot in t[1..=k].iter_mut().rev() {
                *slot = 1 + r % (n - 1);
                r /= n - 1;
            }
            let v = delta_at(&f.group, k, f.modulus, &f.values, &t[..=k]);
            if v != 0 {
                return Some((t[..=k].to_vec(), v));
            }
        }
        None
    });
    CocycleCheck { holds: found.is_none(), certificate: found }
}

/// Fails with the first violating tuple unless `f` is a cocycle.
pub fn require_cocycle(f: &Cochain) -> Result<()> {
    match is_cocycle(f).certificate {
        None => Ok(()),
        Some((tuple, value)) => Err(Error::NotCocycle { tuple, value }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClassVerdict {
    pub is_cocycle: bool,
    pub is_coboundary: bool,
    /// Normalized `(k-1)`-cochain with `delta(witness) = f`.
    pub witness: Option<Cochain>,
    pub failure_certificate: Option<Vec<Element>>,
}

/// Full verdict for any cochain of degree 1 to 3: cocycle status with a
/// certificate, and for cocycles a coboundary decision with a witness.
pub fn classify(f: &Cochain) -> Result<CohomologyClassVerdict> {
    let check = is_cocycle(f);
    if !check.holds {
        return Ok(CohomologyClassVerdict {
            is_cocycle: false,
            is_coboundary: false,
            witness: None,
            failure_certificate: check.certificate.map(|(t, _)| t),
        });
    }
    let witness = solve_coboundary(f)?;
    Ok(CohomologyClassVerdict {
        is_cocycle: true,
        is_coboundary: witness.is_some(),
        witness,
        failure_certificate: None,
    })
}

/// Decides whether the cocycle `f` is a coboundary. Non-cocycles are
/// rejected with their certificate.
pub fn is_coboundary(f: &Cochain) -> Result<CohomologyClassVerdict> {
    require_cocycle(f)?;
    let witness = solve_coboundary(f)?;
    Ok(CohomologyClassVerdict {
        is_cocycle: true,
        is_coboundary: witness.is_some(),
        witness,
        failure_certificate: None,
    })
}

/// Solves `delta(phi) = f` over Z/N for a normalized `phi`, whose unknowns
/// are its values on `(k-1)`-tuples of non-identity elements.
fn solve_coboundary(f: &Cochain) -> Result<Option<Cochain>> {
    let k = f.degree;
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    let n = f.group.order();
    let group = &f.group;
    let km1 = k - 1;
    if n == 1 {
        return Ok(Some(Cochain::zero(group.clone(), km1, f.modulus)?));
    }
    let m = n - 1;
    let unknowns = m.pow(km1 as u32);
    // Column of a normalized (k-1)-tuple, or None if it contains the identity.
    let column = |t: &[Element]| -> Option<usize> {
        t.iter().try_fold(0, |acc, &g| (g != 0).then(|| acc * m + (g - 1)))
    };
    let modulus = f.modulus as i64;
    let equations = (0..m.pow(k as u32)).map(|row| {
        let mut t = [0; 4];
        let mut r = row;
        for slot in t[..k].iter_mut().rev() {
            *slot = 1 + r % m;
            r /= m;
        }
        let t = &t[..k];
        let mut terms = Vec::with_capacity(k + 1);
        let mut buf = [0; 4];
        if let Some(c) = column(&t[1..]) {
            terms.push((c, 1));
        }
        for i in 0..km1 {
            for (j, slot) in buf[..km1].iter_mut().enumerate() {
                *slot = match j.cmp(&i) {
                    std::cmp::Ordering::Less => t[j],
                    std::cmp::Ordering::Equal => group.mul(t[i], t[i + 1]),
                    std::cmp::Ordering::Greater => t[j + 1],
                };
            }
            if let Some(c) = column(&buf[..km1]) {
                terms.push((c, if i % 2 == 0 { -1 } else { 1 }));
            }
        }
        if let Some(c) = column(&t[..km1]) {
            terms.push((c, if km1 % 2 == 0 { -1 } else { 1 }));
        }
        Equation { terms, rhs: f.value(t) as i64 % modulus }
    });
    let Some(solution) = solve_mod(equations, unknowns, f.modulus)? else {
        return Ok(None);
    };
    let mut phi = Cochain::zero(group.clone(), km1, f.modulus)?;
    for (col, &v) in solution.iter().enumerate() {
        let mut t = [0; 4];
        let mut r = col;
        for slot in t[..km1].iter_mut().rev() {
            *slot = 1 + r % m;
            r /= m;
        }
        phi.values[encode(&t[..km1], n)] = v;
    }
    debug_assert_eq!(coboundary(&phi).ok().as_ref(), Some(f));
    Ok(Some(phi))
}

/// Result of normalizing an arbitrary cocycle.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub cochain: Cochain,
    /// Whether the input differed from its normalized form.
    pub adjusted: bool,
    /// Dense, possibly unnormalized `(k-1)`-cochain `phi` with
    /// `normalized = input - delta(phi)`.
    pub correction: Vec<u64>,
}

/// Normalizes a dense cocycle of degree 1 to 3 by subtracting an explicit
/// coboundary. Inputs that are not cocycles are rejected.
pub fn normalize(group: Arc<FiniteGroup>, degree: usize, modulus: u64, raw: &[u64]) -> Result<Normalization> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::Degree(degree));
    }
    storage_check(degree, group.order())?;
    let n = group.order();
    let len = n.pow(degree as u32);
    if raw.len() != len {
        return Err(Error::InvalidTable(format!("expected {len} cochain values, got {}", raw.len())));
    }
    let raw: Vec<u64> = raw.iter().map(|&v| v % modulus).collect();
    // Cocycle check on all tuples, identity included.
    let total = n.pow(degree as u32 + 1);
    let bad = (0..total).into_par_iter().find_first(|&idx| {
        delta_at(&group, degree, modulus, &raw, &decode(idx, n, degree + 1)[..=degree]) != 0
    });
    if let Some(idx) = bad {
        let t = decode(idx, n, degree + 1)[..=degree].to_vec();
        let value = delta_at(&group, degree, modulus, &raw, &t);
        return Err(Error::NotCocycle { tuple: t, value });
    }
    let correction: Vec<u64> = match degree {
        // A 1-cocycle is a homomorphism, so f(e) = 0 already.
        1 => vec![0],
        // f(g,e) = f(e,h) = f(e,e) for a 2-cocycle; delta(const c) = c.
        2 => vec![raw[0]; n],
        _ => {
            // u(g,h) = f(e,g,h) removes the identity in the first slot; the
            // remaining defect t(a) = f'(a,e,e) is absorbed by psi(a,e) = -t(a).
            let u: Vec<u64> = raw[..n * n].to_vec();
            let du = raw_coboundary(&group, 2, modulus, &u);
            let mut phi = u;
            for a in 0..n {
                let idx = encode(&[a, 0, 0], n);
                let t = sub_mod(raw[idx], du[idx], modulus);
                let slot = encode(&[a, 0], n);
                phi[slot] = sub_mod(phi[slot], t, modulus);
            }
            phi
        }
    };
    let values: Vec<u64> = if degree == 1 {
        raw.clone()
    } else {
        let d = raw_coboundary(&group, degree - 1, modulus, &correction);
        raw.iter().zip(&d).map(|(&a, &b)| sub_mod(a, b, modulus)).collect()
    };
    let adjusted = values != raw;
    let cochain = Cochain::from_dense(group, degree, modulus, values)?;
    Ok(Normalization { cochain, adjusted, correction })
}

/// `omega(x,y,z) = (N/d) * x_i * y_j * z_k` on a product of cyclic groups,
/// where `x_i` is the `i`-th coordinate and `d` the gcd of the three factor
/// orders (the coordinate product is only defined modulo `d`).
pub fn cup3(group: &Arc<FiniteGroup>, i: usize, j: usize, k: usize, modulus: u64) -> Result<Cochain> {
    let factors = group.cyclic_factors().ok_or(Error::NotCyclicProduct)?.to_vec();
    for &idx in &[i, j, k] {
        if idx >= factors.len() {
            return Err(Error::FactorIndex { index: idx, count: factors.len() });
        }
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if modulus % factors[idx] as u64 != 0 {
            return Err(Error::ModulusNotDivisible { modulus, order: factors[idx] });
        }
    }
    let d = gcd(gcd(factors[i] as u64, factors[j] as u64), factors[k] as u64);
    let scale = (modulus / d) as i64;
    let coords: Vec<Vec<usize>> = (0..group.order()).map(|g| group.coordinates(g).unwrap()).collect();
    Cochain::from_fn(group.clone(), 3, modulus, |t| {
        let p = (coords[t[0]][i] * coords[t[1]][j] * coords[t[2]][k]) as u64 % d;
        scale * p as i64
    })
}

/// `gamma(g,h) = omega(g,h,z) - omega(g,z,h) + omega(z,g,h)` for a central
/// `z`, after checking that `omega` is a 3-cocycle.
pub fn gamma(omega: &Cochain, z: Element) -> Result<Cochain> {
    if omega.degree != 3 {
        return Err(Error::Degree(omega.degree));
    }
    omega.group.check_element(z)?;
    if !omega.group.is_central(z) {
        return Err(Error::NotCentral(z));
    }
    require_cocycle(omega)?;
    gamma_unchecked(omega, z)
}

/// [`gamma`] without the cocycle and centrality checks.
pub fn gamma_unchecked(omega: &Cochain, z: Element) -> Result<Cochain> {
    let m = omega.modulus;
    let n = omega.group.order();
    let mut out = Cochain::zero(omega.group.clone(), 2, m)?;
    for g in 0..n {
        for h in 0..n {
            let v = add_mod(
                sub_mod(omega.value(&[g, h, z]), omega.value(&[g, z, h]), m),
                omega.value(&[z, g, h]),
                m,
            );
            out.values[g * n + h] = v;
        }
    }
    Ok(out)
}
