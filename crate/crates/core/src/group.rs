//! Finite groups given by full multiplication tables.
//!
//! Element indices are fixed by construction and are part of the external
//! contract, because cocycle files refer to elements by index:
//!
//! * `C<n>`: element `a` is the residue `a mod n`.
//! * `A x B`: the pair `(a, b)` has index `a * |B| + b` (row-major), so a
//!   product of cyclic groups uses mixed radix with the first factor most
//!   significant.
//! * `S<m>`, `A<m>`: permutations in lexicographic order of their one-line
//!   notation, composed right to left: `(s * t)(i) = s(t(i))`.
//!
//! The identity is always index 0.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::hom::GroupHom;

pub type Element = usize;

/// Largest supported group order (the order of S(7)).
pub const MAX_ORDER: usize = 5040;
/// Largest permutation degree accepted by [`FiniteGroup::symmetric`].
pub const MAX_PERMUTATION_DEGREE: usize = 7;
/// Associativity is checked on all triples up to this order, sampled above.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
const ASSOCIATIVITY_SAMPLES: usize = 200_000;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<Element>,
    label: Option<String>,
    cyclic_factors: Option<Vec<usize>>,
    classes: OnceLock<ConjugacyClasses>,
}

/// Orbit partition of a group under conjugation.
///
/// Classes are numbered in increasing order of their representative, which
/// is the smallest element index in the class; class 0 is `{identity}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<Element>,
    pub class_sizes: Vec<usize>,
    members: Vec<Vec<Element>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Elements of class `i`, in increasing order.
    pub fn members(&self, i: usize) -> &[Element] {
        &self.members[i]
    }
}

/// A subgroup realized as a group in its own right.
///
/// Element `i` of `group` corresponds to `embedding[i]` in the ambient group;
/// `embedding` is increasing, so the identity stays at index 0.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    pub embedding: Vec<Element>,
    position: HashMap<Element, usize>,
}

impl Subgroup {
    pub fn index_of(&self, ambient: Element) -> Option<usize> {
        self.position.get(&ambient).copied()
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("label", &self.label)
            .field("cyclic_factors", &self.cyclic_factors)
            .finish_non_exhaustive()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a trusted product function. Only the cheap table
    /// invariants are debug-checked.
    pub(crate) fn from_fn(order: usize, mut mul: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: MAX_ORDER });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                debug_assert!(c < order);
                table.push(c as u16);
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }
        if inverse.contains(&usize::MAX) {
            return Err(Error::InvalidTable("some element has no inverse".into()));
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            label: None,
            cyclic_factors: None,
            classes: OnceLock::new(),
        })
    }

    /// Builds a group from explicit table rows whose identity is index 0, and
    /// runs every table check (associativity on all triples up to order 512).
    pub fn from_table(rows: &[Vec<usize>], label: Option<String>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: MAX_ORDER });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(Error::ElementIndex { index: bad, order });
            }
        }
        for g in 0..order {
            if rows[0][g] != g || rows[g][0] != g {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        let mut group = Self::from_fn(order, |a, b| rows[a][b])?;
        group.label = label;
        group.validate()?;
        Ok(group)
    }

    /// Like [`from_table`](Self::from_table) but accepts an identity at any
    /// index. The identity is swapped into index 0; the applied relabeling
    /// (old index -> new index) is returned when one was needed.
    pub fn from_table_relabeled(
        rows: &[Vec<usize>],
        label: Option<String>,
    ) -> Result<(Self, Option<Vec<Element>>)> {
        let order = rows.len();
        let identity = (0..order).find(|&e| {
            rows[e].len() == order && rows[e].iter().enumerate().all(|(g, &x)| x == g)
        });
        let Some(identity) = identity else {
            return Err(Error::InvalidTable("no identity row".into()));
        };
        if identity == 0 {
            return Ok((Self::from_table(rows, label)?, None));
        }
        let relabel = |x: usize| -> usize {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut swapped = vec![Vec::new(); order];
        for (old, row) in rows.iter().enumerate() {
            let mut new_row = vec![0; row.len()];
            for (b, &c) in row.iter().enumerate() {
                if b >= order || c >= order {
                    return Err(Error::ElementIndex { index: b.max(c), order });
                }
                new_row[relabel(b)] = relabel(c);
            }
            swapped[relabel(old)] = new_row;
        }
        let mapping = (0..order).map(relabel).collect();
        Ok((Self::from_table(&swapped, label)?, Some(mapping)))
    }

    /// Checks the Latin-square, identity, inverse and associativity invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] == a {
                    return Err(Error::InvalidTable(format!("row {a} repeats element {c}")));
                }
                seen[c] = a;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let c = self.mul(a, b);
                if seen[c] == b {
                    return Err(Error::InvalidTable(format!("column {b} repeats element {c}")));
                }
                seen[c] = b;
            }
        }
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
            if self.mul(g, self.inverse[g]) != 0 || self.mul(self.inverse[g], g) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse for {g}")));
            }
        }
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15_u64 ^ n as u64;
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let a = (splitmix(&mut state) % n as u64) as usize;
                let b = (splitmix(&mut state) % n as u64) as usize;
                let c = (splitmix(&mut state) % n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
        Ok(())
    }

    /// The cyclic group Z/n.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut g = Self::from_fn(n, |a, b| (a + b) % n)?;
        g.label = Some(format!("C{n}"));
        g.cyclic_factors = Some(vec![n]);
        Ok(g)
    }

    /// Direct product with row-major indices `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let nb = b.order;
        let order = a.order * nb;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: MAX_ORDER });
        }
        let mut g = Self::from_fn(order, |x, y| {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            a.mul(xa, ya) * nb + b.mul(xb, yb)
        })?;
        g.label = match (&a.label, &b.label) {
            (Some(la), Some(lb)) => Some(format!("{la}x{lb}")),
            _ => None,
        };
        g.cyclic_factors = match (&a.cyclic_factors, &b.cyclic_factors) {
            (Some(fa), Some(fb)) => Some(fa.iter().chain(fb).copied().collect()),
            _ => None,
        };
        Ok(g)
    }

    /// The symmetric group S(m).
    pub fn symmetric(m: usize) -> Result<Self> {
        let mut g = Self::permutation_group(m, false)?;
        g.label = Some(format!("S{m}"));
        Ok(g)
    }

    /// The alternating group A(m).
    pub fn alternating(m: usize) -> Result<Self> {
        let mut g = Self::permutation_group(m, true)?;
        g.label = Some(format!("A{m}"));
        Ok(g)
    }

    fn permutation_group(m: usize, even_only: bool) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder);
        }
        if m > MAX_PERMUTATION_DEGREE {
            return Err(Error::DegreeTooLarge { degree: m, max: MAX_PERMUTATION_DEGREE });
        }
        let perms: Vec<Vec<u8>> = lexicographic_permutations(m)
            .into_iter()
            .filter(|p| !even_only || permutation_is_even(p))
            .collect();
        let index: HashMap<&[u8], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut scratch = vec![0u8; m];
        Self::from_fn(perms.len(), |a, b| {
            let (s, t) = (&perms[a], &perms[b]);
            for i in 0..m {
                scratch[i] = s[t[i] as usize];
            }
            index[scratch.as_slice()]
        })
    }

    /// The same group with a different label.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Element {
        0
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Orders of the cyclic factors, when the group was built as a product of
    /// cyclic groups.
    pub fn cyclic_factors(&self) -> Option<&[usize]> {
        self.cyclic_factors.as_deref()
    }

    pub fn check_element(&self, g: Element) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementIndex { index: g, order: self.order })
        }
    }

    /// Coordinates of `g` in a product of cyclic groups (first factor first).
    pub fn coordinates(&self, g: Element) -> Option<Vec<usize>> {
        let factors = self.cyclic_factors.as_ref()?;
        let mut coords = vec![0; factors.len()];
        let mut rest = g;
        for (slot, &n) in coords.iter_mut().zip(factors).rev() {
            *slot = rest % n;
            rest /= n;
        }
        Some(coords)
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn from_coordinates(&self, coords: &[usize]) -> Option<Element> {
        let factors = self.cyclic_factors.as_ref()?;
        if coords.len() != factors.len() {
            return None;
        }
        let mut g = 0;
        for (&c, &n) in coords.iter().zip(factors) {
            g = g * n + c % n;
        }
        Some(g)
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conjugate(&self, g: Element, h: Element) -> Element {
        self.mul(self.mul(h, g), self.inverse[h])
    }

    pub fn pow(&self, g: Element, n: u64) -> Element {
        let mut result = 0;
        let mut base = g;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        result
    }

    pub fn element_order(&self, g: Element) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, g| lcm(acc, self.element_order(g) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![usize::MAX; n];
            let mut representatives = Vec::new();
            let mut members = Vec::new();
            for g in 0..n {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let idx = representatives.len();
                representatives.push(g);
                let mut orbit = Vec::new();
                for h in 0..n {
                    let c = self.conjugate(g, h);
                    if class_of[c] == usize::MAX {
                        class_of[c] = idx;
                        orbit.push(c);
                    }
                }
                orbit.sort_unstable();
                members.push(orbit);
            }
            let class_sizes = members.iter().map(Vec::len).collect();
            ConjugacyClasses { class_of, representatives, class_sizes, members }
        })
    }

    /// `{h : hs = sh for all s in set}`, in increasing order.
    pub fn centralizer(&self, set: &[Element]) -> Vec<Element> {
        (0..self.order)
            .filter(|&h| set.iter().all(|&s| self.mul(h, s) == self.mul(s, h)))
            .collect()
    }

    pub fn center(&self) -> Vec<Element> {
        let all: Vec<Element> = (0..self.order).collect();
        self.centralizer(&all)
    }

    pub fn is_central(&self, z: Element) -> bool {
        (0..self.order).all(|h| self.mul(h, z) == self.mul(z, h))
    }

    /// The subgroup generated by `gens`, in increasing order.
    pub fn generated_subgroup(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut out = vec![0];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Closure of all commutators `g h g^-1 h^-1`.
    pub fn commutator_subgroup(&self) -> Vec<Element> {
        let mut commutators: Vec<Element> = Vec::new();
        let mut seen = vec![false; self.order];
        for g in 0..self.order {
            for h in 0..self.order {
                let c = self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)));
                if !seen[c] {
                    seen[c] = true;
                    commutators.push(c);
                }
            }
        }
        self.generated_subgroup(&commutators)
    }

    /// Checks closure under products and inverses.
    pub fn is_subgroup(&self, elements: &[Element]) -> bool {
        let mut member = vec![false; self.order];
        for &g in elements {
            if g >= self.order {
                return false;
            }
            member[g] = true;
        }
        member[0]
            && elements.iter().all(|&a| {
                member[self.inv(a)] && elements.iter().all(|&b| member[self.mul(a, b)])
            })
    }

    /// Returns a witness `(conjugator, element)` when the subgroup is not
    /// normal.
    pub fn normality_witness(&self, subgroup: &[Element]) -> Option<(Element, Element)> {
        let mut member = vec![false; self.order];
        subgroup.iter().for_each(|&g| member[g] = true);
        for h in 0..self.order {
            for &n in subgroup {
                if !member[self.conjugate(n, h)] {
                    return Some((h, n));
                }
            }
        }
        None
    }

    /// Realizes a subgroup as a standalone group.
    pub fn subgroup(&self, elements: &[Element]) -> Result<Subgroup> {
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if !self.is_subgroup(&embedding) {
            return Err(Error::NotSubgroup(format!("{} elements not closed", embedding.len())));
        }
        let position: HashMap<Element, usize> =
            embedding.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let group = Self::from_fn(embedding.len(), |a, b| {
            position[&self.mul(embedding[a], embedding[b])]
        })?;
        Ok(Subgroup { group: Arc::new(group), embedding, position })
    }

    /// The quotient by a normal subgroup, with cosets numbered by their
    /// smallest element, together with the projection.
    pub fn quotient(self: &Arc<Self>, normal: &[Element]) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotSubgroup("quotient by a non-subgroup".into()));
        }
        if let Some((conjugator, element)) = self.normality_witness(normal) {
            return Err(Error::NotNormal { conjugator, element });
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &n in normal {
                coset_of[self.mul(g, n)] = idx;
            }
        }
        let mut quotient =
            Self::from_fn(reps.len(), |a, b| coset_of[self.mul(reps[a], reps[b])])?;
        if let Some(label) = &self.label {
            quotient.label = Some(format!("{label}/N{}", normal.len()));
        }
        let quotient = Arc::new(quotient);
        let projection = GroupHom::new(self.clone(), quotient.clone(), coset_of)?;
        Ok((quotient, projection))
    }

    /// The abelianization `G / [G, G]` with its projection.
    pub fn abelianization(self: &Arc<Self>) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        let commutator = self.commutator_subgroup();
        self.quotient(&commutator)
    }

    /// A short generating sequence found greedily: each step adds the lowest
    /// element that maximizes the generated subgroup.
    pub fn greedy_generators(&self) -> Vec<Element> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.order {
            let mut in_current = vec![false; self.order];
            current.iter().for_each(|&g| in_current[g] = true);
            let mut best: Option<(usize, Element, Vec<Element>)> = None;
            for x in 0..self.order {
                if in_current[x] {
                    continue;
                }
                let mut candidate = gens.clone();
                candidate.push(x);
                let span = self.generated_subgroup(&candidate);
                if best.as_ref().map_or(true, |(size, _, _)| span.len() > *size) {
                    best = Some((span.len(), x, span));
                    if best.as_ref().unwrap().0 == self.order {
                        break;
                    }
                }
            }
            let (_, x, span) = best.expect("a proper subgroup misses some element");
            gens.push(x);
            current = span;
        }
        gens
    }
}

fn lexicographic_permutations(m: usize) -> Vec<Vec<u8>> {
    let mut p: Vec<u8> = (0..m as u8).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p.clone());
    }
    out
}

fn permutation_is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
