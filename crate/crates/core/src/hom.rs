//! Group homomorphisms, their enumeration, and conjugacy classes of
//! homomorphisms.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// Source groups above this order are not enumerated.
pub const ENUMERATION_ORDER_LIMIT: usize = 512;
/// Longest generating sequence the backtracking search accepts.
pub const GENERATOR_BOUND: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<Element>,
}

impl GroupHom {
    /// Builds a homomorphism, checking `images[g*h] = images[g]*images[h]` on
    /// the full table.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::HomMismatch);
        }
        for &y in &images {
            target.check_element(y)?;
        }
        if images[source.identity()] != target.identity() {
            return Err(Error::NotHomomorphism(0, 0));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: (0..group.order()).collect(),
        }
    }

    /// The constant (trivial) homomorphism.
    pub fn constant(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.identity(); source.order()],
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn image(&self, g: Element) -> Element {
        self.images[g]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// The image subgroup, in increasing order.
    pub fn image_set(&self) -> Vec<Element> {
        let mut set = self.images.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    pub fn kernel(&self) -> Vec<Element> {
        (0..self.source.order()).filter(|&g| self.images[g] == self.target.identity()).collect()
    }

    /// `g -> h * self(g) * h^-1`.
    pub fn conjugated_by(&self, h: Element) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|&y| self.target.conjugate(y, h)).collect(),
        }
    }
}

/// All homomorphisms `g -> h`, in lexicographic order of the images of the
/// greedy generating sequence of `g`.
///
/// The search assigns generator images one at a time (only elements whose
/// order divides the generator's order), extends the partial map over the
/// subgroup generated so far, and prunes on the first inconsistency.
pub fn enumerate_homomorphisms(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>> {
    if g.order() > ENUMERATION_ORDER_LIMIT {
        return Err(Error::EnumerationTooLarge { order: g.order(), limit: ENUMERATION_ORDER_LIMIT });
    }
    let gens = g.greedy_generators();
    if gens.len() > GENERATOR_BOUND {
        return Err(Error::GeneratorBound { bound: GENERATOR_BOUND, found: gens.len() });
    }
    let target_orders: Vec<usize> = (0..h.order()).map(|y| h.element_order(y)).collect();
    let candidates: Vec<Vec<Element>> = gens
        .iter()
        .map(|&s| {
            let n = g.element_order(s);
            (0..h.order()).filter(|&y| n % target_orders[y] == 0).collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images, &mut out)?;
    Ok(out)
}

fn search(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    gens: &[Element],
    candidates: &[Vec<Element>],
    images: &mut Vec<Element>,
    out: &mut Vec<GroupHom>,
) -> Result<()> {
    let level = images.len();
    if level == gens.len() {
        let map = extend(g, h, gens, images).expect("checked at the previous level");
        out.push(GroupHom::new(g.clone(), h.clone(), map)?);
        return Ok(());
    }
    for &y in &candidates[level] {
        images.push(y);
        if extend(g, h, &gens[..=level], images).is_some() {
            search(g, h, gens, candidates, images, out)?;
        }
        images.pop();
    }
    Ok(())
}

/// Extends generator images over the generated subgroup by breadth-first
/// search on right multiplication. Unreached elements stay `usize::MAX`.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[Element], images: &[Element]) -> Option<Vec<Element>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = h.identity();
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

/// Partition of `Hom(g, h)` into orbits under conjugation by `h`.
///
/// Classes are ordered by their first member in enumeration order, and the
/// members of each class keep enumeration order.
pub fn rep_classes(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<Vec<Vec<GroupHom>>> {
    let homs = enumerate_homomorphisms(g, h)?;
    let position: HashMap<&[Element], usize> =
        homs.iter().enumerate().map(|(i, a)| (a.images(), i)).collect();
    let mut class_of = vec![usize::MAX; homs.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..homs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut members = Vec::new();
        for c in 0..h.order() {
            let conj = homs[i].conjugated_by(c);
            let j = position[conj.images()];
            if class_of[j] == usize::MAX {
                class_of[j] = idx;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(classes
        .into_iter()
        .map(|members| members.into_iter().map(|j| homs[j].clone()).collect())
        .collect())
}
