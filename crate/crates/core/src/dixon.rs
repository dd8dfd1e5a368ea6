//! Character degrees by Dixon's method: simultaneous eigenvectors of the
//! class-multiplication matrices over a prime field `F_p` with
//! `p = 1 (mod exponent)`, so every central character value lies in `F_p`.
//!
//! A central element `c` of order `M` restricts the search to irreducibles on
//! which `c` acts by a fixed primitive `M`-th root `zeta`. Central character
//! vectors `v_i = h_i chi(g_i) / chi(1)` then satisfy
//! `v[class(c g_i)] = zeta * v_i`, so they live in a space with one
//! coordinate per orbit of length `M` of `c` acting on classes.

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

const PRIME_LIMIT: u64 = 1 << 31;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = 1 (mod exponent)` with `p > 2 sqrt(order)`.
pub fn dixon_prime(exponent: u64, order: u64) -> Result<u64> {
    let mut p = exponent + 1;
    while p < PRIME_LIMIT {
        if p * p > 4 * order && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::NoPrime(exponent))
}

pub fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Degrees (ascending) of the irreducible characters of `group`.
pub fn character_degrees(group: &FiniteGroup) -> Result<Vec<usize>> {
    degrees_with_central_character(group, group.identity(), 1)
}

/// Degrees (ascending) of the irreducible characters on which the central
/// element `c` of order `m` acts by a primitive `m`-th root of unity.
///
/// Galois conjugation permutes the primitive roots and preserves degrees, so
/// the result does not depend on which root is chosen.
pub fn degrees_with_central_character(group: &FiniteGroup, c: Element, m: usize) -> Result<Vec<usize>> {
    if !group.is_central(c) || group.element_order(c) != m {
        return Err(Error::Character(format!("element {c} is not central of order {m}")));
    }
    let order = group.order() as u64;
    let p = dixon_prime(group.exponent(), order)?;
    let zeta = pow_mod(primitive_root(p), (p - 1) / m as u64, p);
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let sizes: Vec<u64> = classes.class_sizes.iter().map(|&h| h as u64).collect();

    // Orbits of length m of multiplication by c on classes.
    let shift: Vec<usize> = (0..r).map(|i| classes.class_of[group.mul(c, classes.representatives[i])]).collect();
    let mut coord: Vec<Option<(usize, u64)>> = vec![None; r]; // class -> (orbit, zeta exponent)
    let mut orbit_reps = Vec::new();
    let mut seen = vec![false; r];
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut k = shift[start];
        while k != start {
            seen[k] = true;
            cycle.push(k);
            k = shift[k];
        }
        if cycle.len() == m {
            let id = orbit_reps.len();
            orbit_reps.push(start);
            for (e, &cls) in cycle.iter().enumerate() {
                coord[cls] = Some((id, e as u64));
            }
        }
    }
    let dim = orbit_reps.len();
    let zeta_pow: Vec<u64> = (0..m as u64).map(|e| pow_mod(zeta, e, p)).collect();

    // Reduced class matrix B_j: (B_j u)_a = sum_k c_{j,r_a,k} v_k.
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut b = vec![vec![0u64; dim]; dim];
        let mut counts = vec![0u64; r];
        for (a, &ra) in orbit_reps.iter().enumerate() {
            let g = classes.representatives[ra];
            counts.iter_mut().for_each(|x| *x = 0);
            for &x in classes.members(j) {
                counts[classes.class_of[group.mul(x, g)]] += 1;
            }
            for (k, &cnt) in counts.iter().enumerate() {
                if cnt == 0 {
                    continue;
                }
                if let Some((s, e)) = coord[k] {
                    let structure = sizes[ra] * cnt / sizes[k];
                    b[a][s] = (b[a][s] + mul_mod(structure % p, zeta_pow[e as usize], p)) % p;
                }
            }
        }
        b
    };

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity_basis(dim)];
    for j in 0..r {
        if spaces.iter().all(|s| s.len() <= 1) {
            break;
        }
        let b = class_matrix(j);
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() <= 1 {
                next.push(space);
            } else {
                next.extend(split(&space, &b, p)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Character("class matrices failed to separate characters".into()));
    }

    let inverse_class: Vec<usize> =
        (0..r).map(|i| classes.class_of[group.inv(classes.representatives[i])]).collect();
    let bound = (order as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(spaces.len());
    for space in &spaces {
        let u = &space[0];
        let expand = |i: usize| coord[i].map_or(0, |(s, e)| mul_mod(u[s], zeta_pow[e as usize], p));
        let v0 = expand(classes.class_of[group.identity()]);
        if v0 == 0 {
            return Err(Error::Character("eigenvector vanishes at the identity".into()));
        }
        let scale = inv_mod(v0, p);
        let mut norm = 0u64;
        for i in 0..r {
            let vi = mul_mod(expand(i), scale, p);
            let vi_inv = mul_mod(expand(inverse_class[i]), scale, p);
            let term = mul_mod(mul_mod(vi, vi_inv, p), inv_mod(sizes[i] % p, p), p);
            norm = (norm + term) % p;
        }
        if norm == 0 {
            return Err(Error::Character("degenerate character norm".into()));
        }
        let d2 = mul_mod(order % p, inv_mod(norm, p), p);
        let d = (1..=bound)
            .find(|&d| d * d <= order && (d * d) % p == d2)
            .ok_or_else(|| Error::Character("no integral degree".into()))?;
        degrees.push(d as usize);
    }
    degrees.sort_unstable();
    let total: usize = degrees.iter().map(|d| d * d).sum();
    if total * m != group.order() {
        return Err(Error::Character(format!(
            "degree squares sum to {total}, expected {}",
            group.order() / m
        )));
    }
    Ok(degrees)
}

fn identity_basis(dim: usize) -> Vec<Vec<u64>> {
    (0..dim)
        .map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            e
        })
        .collect()
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `b` restricted to it.
fn split(space: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let s = space.len();
    let pivots: Vec<usize> = space.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    // restricted[x][y]: coordinate x of b * space[y].
    let mut restricted = vec![vec![0u64; s]; s];
    for (y, vec) in space.iter().enumerate() {
        let image: Vec<u64> = b
            .iter()
            .map(|row| row.iter().zip(vec).fold(0, |acc, (&a, &v)| (acc + mul_mod(a, v, p)) % p))
            .collect();
        for (x, &piv) in pivots.iter().enumerate() {
            restricted[x][y] = image[piv];
        }
    }
    let roots = roots_of(&charpoly(restricted.clone(), p), p);
    if roots.len() == 1 {
        return Ok(vec![space.to_vec()]);
    }
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let mut shifted = restricted.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        let kernel = kernel_basis(shifted, p);
        total += kernel.len();
        let vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u64; space[0].len()];
                for (c, row) in coeffs.iter().zip(space) {
                    if *c != 0 {
                        for (slot, &x) in v.iter_mut().zip(row) {
                            *slot = (*slot + mul_mod(*c, x, p)) % p;
                        }
                    }
                }
                v
            })
            .collect();
        out.push(rref(vectors, p));
    }
    if total != s {
        return Err(Error::Character("class matrix is not diagonalizable over F_p".into()));
    }
    Ok(out)
}

/// Characteristic polynomial (coefficients from the constant term up) via
/// reduction to upper Hessenberg form.
fn charpoly(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let Some(i) = (k + 1..n).find(|&i| a[i][k] != 0) else { continue };
        if i != k + 1 {
            a.swap(i, k + 1);
            for row in a.iter_mut() {
                row.swap(i, k + 1);
            }
        }
        let inv = inv_mod(a[k + 1][k], p);
        for r in k + 2..n {
            let u = mul_mod(a[r][k], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let sub = mul_mod(u, a[k + 1][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
            for row in a.iter_mut() {
                let add = mul_mod(u, row[r], p);
                row[k + 1] = (row[k + 1] + add) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - mul_mod(a[m - 1][m - 1], c, p)) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, a[i][i - 1], p);
            let coeff = mul_mod(t, a[i - 1][m - 1], p);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = (next[d] + p - mul_mod(coeff, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Distinct roots in `F_p`, ascending, of a polynomial that splits over `F_p`.
fn roots_of(poly: &[u64], p: u64) -> Vec<u64> {
    let mut rest = poly.to_vec();
    let mut roots = Vec::new();
    let mut x = 0;
    while rest.len() > 1 && x < p {
        let mut divided = false;
        loop {
            // Synthetic division by (X - x).
            let deg = rest.len() - 1;
            let mut quotient = vec![0u64; deg];
            let mut carry = 0u64;
            for d in (0..=deg).rev() {
                let v = (rest[d] + mul_mod(carry, x, p)) % p;
                if d == 0 {
                    carry = v;
                } else {
                    quotient[d - 1] = v;
                    carry = v;
                }
            }
            if carry != 0 || deg == 0 {
                break;
            }
            rest = quotient;
            divided = true;
            if rest.len() <= 1 {
                break;
            }
        }
        if divided {
            roots.push(x);
        }
        x += 1;
    }
    roots
}

/// Row-reduced echelon form of a list of vectors, zero rows dropped.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, i);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..cols {
                    let sub = mul_mod(f, rows[rank][k], p);
                    rows[i][k] = (rows[i][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Basis of the right kernel of a square matrix.
fn kernel_basis(a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let reduced = rref(a, p);
    let pivots: Vec<usize> = reduced.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &piv) in reduced.iter().zip(&pivots) {
                v[piv] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}
