//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's search or solving routines; only group tables and cochain
//! values are read from it.
#![allow(dead_code)]

pub mod f2;
pub mod half_braiding;

use std::collections::VecDeque;
use std::sync::Arc;

use zcenter_core::FiniteGroup;

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

pub fn product(orders: &[usize]) -> Arc<FiniteGroup> {
    let mut g = FiniteGroup::cyclic(orders[0]).unwrap();
    for &n in &orders[1..] {
        g = FiniteGroup::direct_product(&g, &FiniteGroup::cyclic(n).unwrap()).unwrap();
    }
    let label = orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x");
    Arc::new(g.with_label(label))
}

/// Dihedral group of order `2n`; `r^a s^b` has index `a + n*b`.
pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    let rows: Vec<Vec<usize>> = (0..2 * n)
        .map(|x| {
            let (a, b) = (x % n, x / n);
            (0..2 * n)
                .map(|y| {
                    let (c, d) = (y % n, y / n);
                    let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                    rot + n * ((b + d) % 2)
                })
                .collect()
        })
        .collect();
    Arc::new(FiniteGroup::from_table(&rows, Some(format!("D{}", 2 * n))).unwrap())
}

/// Quaternion group; `+1, +i, +j, +k, -1, -i, -j, -k` in that order.
pub fn quaternion() -> Arc<FiniteGroup> {
    // unit products as (sign flip, unit) for units 1, i, j, k.
    let units = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = units[x % 4][y % 4];
                    u + 4 * ((s + x / 4 + y / 4) % 2)
                })
                .collect()
        })
        .collect();
    Arc::new(FiniteGroup::from_table(&rows, Some("Q8".into())).unwrap())
}

fn named(g: FiniteGroup, label: &str) -> Arc<FiniteGroup> {
    Arc::new(g.with_label(label))
}

/// One group of each isomorphism type of order at most 8.
pub fn groups_up_to_8() -> Vec<Arc<FiniteGroup>> {
    vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        product(&[2, 2]),
        cyclic(5),
        cyclic(6),
        named(FiniteGroup::symmetric(3).unwrap(), "S3"),
        cyclic(7),
        cyclic(8),
        product(&[4, 2]),
        product(&[2, 2, 2]),
        dihedral(4),
        quaternion(),
    ]
}

/// A spread of groups of order at most 24, abelian and not.
pub fn groups_up_to_24() -> Vec<Arc<FiniteGroup>> {
    let mut out = groups_up_to_8();
    out.extend([
        product(&[3, 3]),
        dihedral(5),
        named(FiniteGroup::alternating(4).unwrap(), "A4"),
        product(&[2, 6]),
        dihedral(6),
        named(FiniteGroup::symmetric(4).unwrap(), "S4"),
        product(&[2, 2, 2, 2]),
    ]);
    out
}

/// Elements in increasing order, each added when it is not in the subgroup
/// generated by the earlier ones.
pub fn naive_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    for x in 0..g.order() {
        if inside[x] {
            continue;
        }
        gens.push(x);
        // Close under right multiplication by all generators.
        let mut queue: VecDeque<usize> = (0..g.order()).filter(|&y| inside[y]).collect();
        while let Some(y) = queue.pop_front() {
            for &s in &gens {
                let z = g.mul(y, s);
                if !inside[z] {
                    inside[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

/// Every homomorphism `g -> h` as an image vector, found by trying all
/// tuples of generator images, extending along words, and checking the whole
/// table. Sorted.
pub fn brute_force_homs(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = naive_generators(g);
    let k = gens.len();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; k];
    loop {
        if let Some(map) = extend_words(g, h, &gens, &tuple) {
            let ok = (0..g.order())
                .all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])));
            if ok {
                out.push(map);
            }
        }
        // Odometer increment.
        let mut i = 0;
        while i < k {
            tuple[i] += 1;
            if tuple[i] < h.order() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out.sort();
    out
}

fn extend_words(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push_back(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}

/// Conjugacy classes by brute force: `x ~ y` iff `y = h x h^-1` for some `h`.
pub fn brute_force_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class);
    }
    out
}

/// Writes a line to the real stdout, bypassing the test harness capture.
pub fn emit(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}
