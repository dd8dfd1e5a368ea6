//! Integer and modular linear algebra: Smith normal form invariants and
//! solving `A x = b (mod N)`.
//!
//! Modular solving works on integer lifts of the residues and only ever
//! applies unimodular row and column operations (determinant 1 over Z), so it
//! is correct for composite moduli where naive Gaussian elimination is not.

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix: the nonzero
/// diagonal entries of its Smith normal form, all positive.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    row_axpy(&mut a, i, t, -q)?;
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut() {
                        let v = row[t].checked_mul(q).ok_or(Error::Overflow)?;
                        row[j] = row[j].checked_sub(v).ok_or(Error::Overflow)?;
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // Enforce divisibility of the remaining block by the pivot.
                let p = a[t][t];
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => row_axpy(&mut a, t, i, 1)?,
                    None => break,
                }
            }
            if let Some((pi, pj)) = smallest_nonzero_cross(&a, t) {
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
        }
        diag.push(i64::try_from(a[t][t].abs()).map_err(|_| Error::Overflow)?);
    }
    Ok(diag)
}

fn row_axpy(a: &mut [Vec<i128>], dst: usize, src: usize, factor: i128) -> Result<()> {
    for j in 0..a[dst].len() {
        let v = a[src][j].checked_mul(factor).ok_or(Error::Overflow)?;
        a[dst][j] = a[dst][j].checked_add(v).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn smallest_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.map_or(true, |(b, _, _)| x.abs() < b) {
                best = Some((x.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smallest nonzero entry in row `t` and column `t` at or after the pivot.
fn smallest_nonzero_cross(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        let x = row[t];
        if x != 0 && best.map_or(true, |(b, _, _)| x.abs() < b) {
            best = Some((x.abs(), i, t));
        }
    }
    for (j, &x) in a[t].iter().enumerate().skip(t) {
        if x != 0 && best.map_or(true, |(b, _, _)| x.abs() < b) {
            best = Some((x.abs(), t, j));
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Extended gcd on nonnegative integers: `(g, s, t)` with `s*a + t*b = g`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// A sparse linear equation `sum coeff * x[col] = rhs (mod N)`.
#[derive(Clone, Debug, Default)]
pub struct Equation {
    pub terms: Vec<(usize, i64)>,
    pub rhs: i64,
}

/// Solves a linear system over Z/N. Returns `None` when it has no solution.
///
/// Equations are streamed into an echelon basis (at most `unknowns` rows)
/// with unimodular gcd combinations, then the basis is diagonalized with
/// tracked column operations and the diagonal congruences are solved one by
/// one. Free variables are set to zero.
pub fn solve_mod(
    equations: impl IntoIterator<Item = Equation>,
    unknowns: usize,
    modulus: u64,
) -> Result<Option<Vec<u64>>> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let n = modulus as i128;
    let reduce = |x: i128| x.rem_euclid(n);

    // Phase 1: echelon basis, pivots[c] has leading column c.
    let mut pivots: Vec<Option<(Vec<i128>, i128)>> = vec![None; unknowns];
    for eq in equations {
        let mut row = vec![0i128; unknowns];
        for &(col, coeff) in &eq.terms {
            row[col] = reduce(row[col] + coeff as i128);
        }
        let mut rhs = reduce(eq.rhs as i128);
        let mut placed = false;
        for c in 0..unknowns {
            if row[c] == 0 {
                continue;
            }
            match &mut pivots[c] {
                None => {
                    pivots[c] = Some((row.clone(), rhs));
                    placed = true;
                    break;
                }
                Some((prow, prhs)) => {
                    let (a, b) = (prow[c], row[c]);
                    let (g, s, t) = ext_gcd(a, b);
                    let (ag, bg) = (a / g, b / g);
                    for j in c..unknowns {
                        let (p, r) = (prow[j], row[j]);
                        prow[j] = reduce(s * p + t * r);
                        row[j] = reduce(ag * r - bg * p);
                    }
                    let (p, r) = (*prhs, rhs);
                    *prhs = reduce(s * p + t * r);
                    rhs = reduce(ag * r - bg * p);
                }
            }
        }
        if !placed && rhs != 0 {
            return Ok(None);
        }
    }

    // Phase 2: diagonalize the echelon rows, tracking column operations.
    let (mut mat, mut rhs): (Vec<Vec<i128>>, Vec<i128>) = pivots.into_iter().flatten().unzip();
    let rows = mat.len();
    let mut cols: Vec<Vec<i128>> = (0..unknowns)
        .map(|i| {
            let mut e = vec![0; unknowns];
            e[i] = 1;
            e
        })
        .collect(); // cols[j] is column j of the transform V (x = V y)
    let mut diag = Vec::new();
    for t in 0..rows.min(unknowns) {
        let pos = (t..rows)
            .flat_map(|i| (t..unknowns).map(move |j| (i, j)))
            .find(|&(i, j)| mat[i][j] != 0);
        let Some((pi, pj)) = pos else { break };
        mat.swap(t, pi);
        rhs.swap(t, pi);
        for row in mat.iter_mut() {
            row.swap(t, pj);
        }
        cols.swap(t, pj);
        // Non-divisible entries trigger a gcd step, which strictly lowers the
        // pivot; divisible ones are cleared without touching column `t`.
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if mat[i][t] == 0 {
                    continue;
                }
                let (a, b) = (mat[t][t], mat[i][t]);
                if b % a == 0 {
                    let q = b / a;
                    for j in t..unknowns {
                        mat[i][j] = reduce(mat[i][j] - q * mat[t][j]);
                    }
                    rhs[i] = reduce(rhs[i] - q * rhs[t]);
                    continue;
                }
                changed = true;
                let (g, s, u) = ext_gcd(a, b);
                let (ag, bg) = (a / g, b / g);
                for j in t..unknowns {
                    let (p, r) = (mat[t][j], mat[i][j]);
                    mat[t][j] = reduce(s * p + u * r);
                    mat[i][j] = reduce(ag * r - bg * p);
                }
                let (p, r) = (rhs[t], rhs[i]);
                rhs[t] = reduce(s * p + u * r);
                rhs[i] = reduce(ag * r - bg * p);
            }
            for j in t + 1..unknowns {
                if mat[t][j] == 0 {
                    continue;
                }
                let (a, b) = (mat[t][t], mat[t][j]);
                if b % a == 0 {
                    let q = b / a;
                    for row in mat.iter_mut() {
                        row[j] = reduce(row[j] - q * row[t]);
                    }
                    for k in 0..unknowns {
                        cols[j][k] = reduce(cols[j][k] - q * cols[t][k]);
                    }
                    continue;
                }
                changed = true;
                let (g, s, u) = ext_gcd(a, b);
                let (ag, bg) = (a / g, b / g);
                for row in mat.iter_mut() {
                    let (p, r) = (row[t], row[j]);
                    row[t] = reduce(s * p + u * r);
                    row[j] = reduce(ag * r - bg * p);
                }
                let (ct, cj) = (cols[t].clone(), cols[j].clone());
                for k in 0..unknowns {
                    cols[t][k] = reduce(s * ct[k] + u * cj[k]);
                    cols[j][k] = reduce(ag * cj[k] - bg * ct[k]);
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(mat[t][t]);
    }
    for &r in rhs.iter().skip(diag.len()) {
        if r != 0 {
            return Ok(None);
        }
    }

    // Phase 3: d_t y_t = c_t (mod N), then x = V y.
    let mut y = vec![0i128; unknowns];
    for (t, &d) in diag.iter().enumerate() {
        let c = rhs[t];
        let (g, _, _) = ext_gcd(d, n);
        if c % g != 0 {
            return Ok(None);
        }
        let m = n / g;
        let inv = mod_inverse((d / g).rem_euclid(m), m);
        y[t] = ((c / g) % m * inv).rem_euclid(m);
    }
    let mut x = vec![0u64; unknowns];
    for (j, col) in cols.iter().enumerate() {
        if y[j] == 0 {
            continue;
        }
        for k in 0..unknowns {
            x[k] = reduce(x[k] as i128 + col[k] * y[j]) as u64;
        }
    }
    Ok(Some(x))
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let (_, s, _) = ext_gcd(a, m);
    s.rem_euclid(m)
}

/// Invariant factors of a finite abelian group (all greater than 1, each
/// dividing the next), from the Smith form of its relation lattice on a
/// greedy generating set.
pub fn abelian_invariants(group: &FiniteGroup) -> Result<Vec<u64>> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let gens = group.greedy_generators();
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    // Coefficient vectors along a spanning tree; every non-tree edge yields a
    // relation, and these generate the relation lattice.
    let mut coeffs: Vec<Option<Vec<i64>>> = vec![None; group.order()];
    coeffs[0] = Some(vec![0; k]);
    let mut queue = std::collections::VecDeque::from([0 as Element]);
    let mut relations = Vec::new();
    while let Some(x) = queue.pop_front() {
        let cx = coeffs[x].clone().unwrap();
        for (i, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            let mut step = cx.clone();
            step[i] += 1;
            match &coeffs[y] {
                None => {
                    coeffs[y] = Some(step);
                    queue.push_back(y);
                }
                Some(cy) => {
                    let rel: Vec<i64> = step.iter().zip(cy).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|&v| v != 0) {
                        relations.push(rel);
                    }
                }
            }
        }
    }
    let invariants = smith_invariants(&relations)?;
    Ok(invariants.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect())
}

/// Invariant factors of `Hom(A, Z/N)` for `A` with the given invariant
/// factors: one `Z/gcd(d, N)` per factor, trivial ones dropped.
pub fn dual_invariants(invariants: &[u64], modulus: u64) -> Vec<u64> {
    invariants
        .iter()
        .map(|&d| crate::group::gcd(d, modulus))
        .filter(|&d| d > 1)
        .collect()
}
