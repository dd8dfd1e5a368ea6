//! Direct enumeration of half-braidings on `m * y_i` with monomial matrices.
//!
//! An object supported on the class `C` with multiplicity `m` in each degree
//! carries maps `beta_h^g : V_g -> V_{h^-1 g h}` with `beta_e = 1` and
//! `beta_{h1 h2}^g = c(g,h1,h2) * beta_{h2}^{g1} * beta_{h1}^g`, where
//! `g1 = h1^-1 g h1`, `g2 = h2^-1 g1 h2` and
//! `c = -omega(g,h1,h2) + omega(h1,g1,h2) - omega(h1,h2,g2)`.
//! Every such system is equivalent to one with monomial entries in
//! `mu_M`, `M = N * exp(G)`, and to one with `beta = 1` on a spanning tree
//! of the conjugation graph of `C`. Two systems normalized this way are
//! isomorphic iff their loops at the base point are conjugate, which for
//! completely reducible data is detected by the traces of `beta_x^{g0}`,
//! `x` in the centralizer of the base point `g0`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use zcenter_core::cohomology::Cochain;
use zcenter_core::FiniteGroup;

use super::naive_generators;

/// Monomial `m x m` matrix with `m <= 2`: row `r` has `zeta_M^exps[r]` in
/// column `perm[r]`. Unused slots stay at `perm = r, exps = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Mono {
    perm: [u8; 2],
    exps: [u32; 2],
}

const IDENTITY: Mono = Mono { perm: [0, 1], exps: [0, 0] };

struct Ctx<'a> {
    group: &'a FiniteGroup,
    omega: &'a Cochain,
    m: usize,
    big: u32,
    scale: u32,
}

impl Ctx<'_> {
    /// `A * B`.
    fn mul(&self, a: &Mono, b: &Mono) -> Mono {
        let mut c = IDENTITY;
        for r in 0..self.m {
            let k = a.perm[r] as usize;
            c.perm[r] = b.perm[k];
            c.exps[r] = (a.exps[r] + b.exps[k]) % self.big;
        }
        c
    }

    fn scalar(&self, a: &Mono, v: u64) -> Mono {
        let mut c = *a;
        let add = (v as u32 * self.scale) % self.big;
        for r in 0..self.m {
            c.exps[r] = (c.exps[r] + add) % self.big;
        }
        c
    }

    fn conj(&self, g: usize, h: usize) -> usize {
        self.group.mul(self.group.mul(self.group.inv(h), g), h)
    }

    fn twist(&self, g: usize, h1: usize, h2: usize) -> u64 {
        let n = self.omega.modulus();
        let g1 = self.conj(g, h1);
        let g2 = self.conj(g1, h2);
        let w = |a, b, c| self.omega.value(&[a, b, c]);
        (2 * n - w(g, h1, h2) + w(h1, g1, h2) - w(h1, h2, g2)) % n
    }

    /// `c(g,h1,h2) * beta_{h2}^{g1} * beta_{h1}^g`.
    fn compose(&self, g: usize, h1: usize, h2: usize, b2: &Mono, b1: &Mono) -> Mono {
        self.scalar(&self.mul(b2, b1), self.twist(g, h1, h2))
    }

    fn candidates(&self) -> Vec<Mono> {
        let mut out = Vec::new();
        if self.m == 1 {
            for e in 0..self.big {
                out.push(Mono { perm: [0, 1], exps: [e, 0] });
            }
        } else {
            for perm in [[0, 1], [1, 0]] {
                for e0 in 0..self.big {
                    for e1 in 0..self.big {
                        out.push(Mono { perm, exps: [e0, e1] });
                    }
                }
            }
        }
        out
    }
}

struct ClassSearch<'a> {
    ctx: Ctx<'a>,
    members: Vec<usize>,
    local: HashMap<usize, usize>,
    gens: Vec<usize>,
    /// `edges[g][s]` is `beta_{gens[s]}^{members[g]}` once assigned.
    edges: Vec<Vec<Option<Mono>>>,
    free: Vec<(usize, usize)>,
    invariants: BTreeSet<Vec<i64>>,
    cyclotomic: Vec<i64>,
}

impl ClassSearch<'_> {
    /// Propagates the assigned edges to `beta_h^g` for all reachable `h`,
    /// or reports a contradiction.
    fn closure(&self) -> Option<Vec<Vec<Option<Mono>>>> {
        let n = self.ctx.group.order();
        let k = self.members.len();
        let mut table = vec![vec![None; k]; n];
        let mut queue = VecDeque::new();
        for gi in 0..k {
            table[0][gi] = Some(IDENTITY);
            queue.push_back((0, gi));
        }
        while let Some((h, gi)) = queue.pop_front() {
            let bh = table[h][gi].unwrap();
            let g = self.members[gi];
            let gh = self.local[&self.ctx.conj(g, h)];
            for (si, &s) in self.gens.iter().enumerate() {
                let Some(bs) = self.edges[gh][si] else { continue };
                let value = self.ctx.compose(g, h, s, &bs, &bh);
                let hs = self.ctx.group.mul(h, s);
                match table[hs][gi] {
                    None => {
                        table[hs][gi] = Some(value);
                        queue.push_back((hs, gi));
                    }
                    Some(old) if old != value => return None,
                    Some(_) => {}
                }
            }
        }
        Some(table)
    }

    fn verify(&self, table: &[Vec<Mono>]) -> bool {
        let group = self.ctx.group;
        let n = group.order();
        (0..self.members.len()).all(|gi| {
            let g = self.members[gi];
            (0..n).all(|h1| {
                let g1 = self.local[&self.ctx.conj(g, h1)];
                (0..n).all(|h2| {
                    let expected = self.ctx.compose(g, h1, h2, &table[h2][g1], &table[h1][gi]);
                    table[group.mul(h1, h2)][gi] == expected
                })
            })
        })
    }

    /// Traces of the loops `beta_x^{g0}`, reduced modulo `Phi_M`.
    fn invariant(&self, table: &[Vec<Mono>]) -> Vec<i64> {
        let group = self.ctx.group;
        let g0 = self.members[0];
        let big = self.ctx.big as usize;
        let mut out = Vec::new();
        for x in (0..group.order()).filter(|&x| group.mul(x, g0) == group.mul(g0, x)) {
            let b = &table[x][0];
            let mut trace = vec![0i64; big];
            for r in 0..self.ctx.m {
                if b.perm[r] as usize == r {
                    trace[b.exps[r] as usize] += 1;
                }
            }
            out.extend(reduce_mod(trace, &self.cyclotomic));
        }
        out
    }

    fn search(&mut self, depth: usize, candidates: &[Mono]) {
        let Some(table) = self.closure() else { return };
        if depth == self.free.len() {
            let table: Vec<Vec<Mono>> = table
                .into_iter()
                .map(|row| row.into_iter().map(|b| b.expect("tree reaches every pair")).collect())
                .collect();
            assert!(self.verify(&table), "closure produced an invalid half-braiding");
            let inv = self.invariant(&table);
            self.invariants.insert(inv);
            return;
        }
        let (g, s) = self.free[depth];
        for c in candidates {
            self.edges[g][s] = Some(*c);
            self.search(depth + 1, candidates);
        }
        self.edges[g][s] = None;
    }
}

/// Number of isomorphism classes of half-braidings on `m * y_class`,
/// `m` in `1..=2`.
pub fn count_half_braidings(omega: &Cochain, class: usize, m: usize) -> usize {
    assert!((1..=2).contains(&m));
    let group = omega.group().as_ref();
    let exp = group.exponent() as u32;
    let n = omega.modulus() as u32;
    let ctx = Ctx { group, omega, m, big: n * exp, scale: exp };
    let classes = group.conjugacy_classes();
    let mut members = classes.members(class).to_vec();
    members.sort_unstable();
    let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let gens = naive_generators(group);

    // Spanning tree of the conjugation graph, rooted at the smallest member.
    let k = members.len();
    let mut edges = vec![vec![None; gens.len()]; k];
    let mut free = Vec::new();
    let mut visited = vec![false; k];
    visited[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(gi) = queue.pop_front() {
        for (si, &s) in gens.iter().enumerate() {
            let t = local[&ctx.conj(members[gi], s)];
            if visited[t] {
                free.push((gi, si));
            } else {
                visited[t] = true;
                edges[gi][si] = Some(IDENTITY);
                queue.push_back(t);
            }
        }
    }

    let cyclotomic = cyclotomic(ctx.big as usize);
    let candidates = ctx.candidates();
    let mut search = ClassSearch { ctx, members, local, gens, edges, free, invariants: BTreeSet::new(), cyclotomic };
    search.search(0, &candidates);
    search.invariants.len()
}

/// Coefficients of the cyclotomic polynomial `Phi_n`, constant term first.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        p = divide_exact(&p, &cyclotomic(d));
    }
    p
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dd];
        quot[i] = q;
        for (j, &c) in den.iter().enumerate() {
            rem[i + j] -= q * c;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Remainder of `p` modulo the monic polynomial `phi`, padded to `deg phi`.
fn reduce_mod(mut p: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let d = phi.len() - 1;
    for i in (d..p.len()).rev() {
        let q = p[i];
        if q != 0 {
            for (j, &c) in phi.iter().enumerate() {
                p[i - d + j] -= q * c;
            }
        }
    }
    p.truncate(d);
    p.resize(d, 0);
    p
}
