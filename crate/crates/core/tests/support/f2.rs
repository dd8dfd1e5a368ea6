//! Normalized 3-cocycles with values in `Z/2`, one per orbit of
//! `Aut(G)` acting on `H^3(G, Z/2)`, by plain linear algebra over `F_2`.

use std::collections::HashSet;
use std::sync::Arc;

use zcenter_core::cohomology::Cochain;
use zcenter_core::FiniteGroup;

use super::brute_force_homs;

type Bits = Vec<u64>;

fn zeros(len: usize) -> Bits {
    vec![0; len.div_ceil(64)]
}

fn get(v: &Bits, i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

fn flip(v: &mut Bits, i: usize) {
    v[i / 64] ^= 1 << (i % 64);
}

fn xor(a: &mut Bits, b: &Bits) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn lowest(v: &Bits) -> Option<usize> {
    v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Fully reduced echelon basis; every stored vector has a distinct pivot that
/// no other stored vector contains.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Bits)>,
}

impl Echelon {
    fn reduce(&self, v: &mut Bits) {
        for (p, row) in &self.rows {
            if get(v, *p) {
                xor(v, row);
            }
        }
    }

    /// Returns whether `v` was independent.
    fn insert(&mut self, mut v: Bits) -> bool {
        self.reduce(&mut v);
        let Some(p) = lowest(&v) else { return false };
        for (_, row) in &mut self.rows {
            if get(row, p) {
                xor(row, &v);
            }
        }
        self.rows.push((p, v));
        true
    }
}

struct Layout {
    n: usize,
}

impl Layout {
    /// Index of a tuple of non-identity elements.
    fn index(&self, t: &[usize]) -> Option<usize> {
        let m = self.n - 1;
        let mut i = 0;
        for &x in t {
            if x == 0 {
                return None;
            }
            i = i * m + (x - 1);
        }
        Some(i)
    }

    fn len(&self, degree: u32) -> usize {
        (self.n - 1).pow(degree)
    }

    fn tuples(&self, degree: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..degree {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..self.n).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

pub struct OrbitReps {
    /// `dim H^3(G, Z/2)` over `F_2`.
    pub dimension: usize,
    /// One cocycle per orbit, the zero class first.
    pub cocycles: Vec<Cochain>,
}

/// Orbit representatives of `H^3(G, Z/2)` under automorphisms.
pub fn cocycle_orbit_representatives(group: &Arc<FiniteGroup>) -> OrbitReps {
    let n = group.order();
    let lay = Layout { n };
    if n == 1 {
        return OrbitReps { dimension: 0, cocycles: vec![Cochain::zero(group.clone(), 3, 2).unwrap()] };
    }
    let len3 = lay.len(3);
    let mul = |a: usize, b: usize| group.mul(a, b);

    // Coboundaries of the basis 2-cochains.
    let mut boundaries = Echelon::default();
    for t in lay.tuples(2) {
        let (x, y) = (t[0], t[1]);
        let mut v = zeros(len3);
        for s in lay.tuples(3) {
            let (a, b, c) = (s[0], s[1], s[2]);
            let hits = [(b, c), (mul(a, b), c), (a, mul(b, c)), (a, b)]
                .iter()
                .filter(|&&p| p == (x, y))
                .count();
            if hits % 2 == 1 {
                flip(&mut v, lay.index(&s).unwrap());
            }
        }
        boundaries.insert(v);
    }

    // Cocycle equations, one per 4-tuple, in echelon form over the 3-cochain
    // coordinates.
    let mut equations = Echelon::default();
    for s in lay.tuples(4) {
        let (a, b, c, d) = (s[0], s[1], s[2], s[3]);
        let mut v = zeros(len3);
        for t in [[b, c, d], [mul(a, b), c, d], [a, mul(b, c), d], [a, b, mul(c, d)], [a, b, c]] {
            if let Some(i) = lay.index(&t) {
                flip(&mut v, i);
            }
        }
        equations.insert(v);
    }
    // Kernel basis: one vector per free coordinate.
    let pivots: HashSet<usize> = equations.rows.iter().map(|(p, _)| *p).collect();
    let mut cocycles = Vec::new();
    for free in (0..len3).filter(|i| !pivots.contains(i)) {
        let mut v = zeros(len3);
        flip(&mut v, free);
        for (p, row) in &equations.rows {
            if get(row, free) {
                flip(&mut v, *p);
            }
        }
        cocycles.push(v);
    }

    // Complement of the coboundaries inside the cocycles.
    let mut span = Echelon { rows: boundaries.rows.clone() };
    let mut complement = Vec::new();
    for z in cocycles {
        let mut r = z.clone();
        boundaries.reduce(&mut r);
        if span.insert(z) {
            complement.push(r);
        }
    }

    let autos: Vec<Vec<usize>> = brute_force_homs(group, group)
        .into_iter()
        .filter(|m| {
            let mut seen = vec![false; n];
            m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
        .collect();
    let triples = lay.tuples(3);
    let canonical = |mut v: Bits| {
        boundaries.reduce(&mut v);
        v
    };
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1 << complement.len()) {
        let mut v = zeros(len3);
        for (bit, c) in complement.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                xor(&mut v, c);
            }
        }
        let v = canonical(v);
        if seen.contains(&v) {
            continue;
        }
        for alpha in &autos {
            let mut w = zeros(len3);
            for t in &triples {
                let image = [alpha[t[0]], alpha[t[1]], alpha[t[2]]];
                if get(&v, lay.index(&image).unwrap()) {
                    flip(&mut w, lay.index(t).unwrap());
                }
            }
            seen.insert(canonical(w));
        }
        let omega = Cochain::from_fn(group.clone(), 3, 2, |t| {
            lay.index(t).map_or(0, |i| i64::from(get(&v, i)))
        })
        .unwrap();
        reps.push(omega);
    }
    OrbitReps { dimension: complement.len(), cocycles: reps }
}
