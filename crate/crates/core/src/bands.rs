//! Conjugacy-type endomorphisms and centralizers of homomorphisms in the
//! 2-category of finite groups.
//!
//! An endomorphism `alpha` has conjugacy type `n` when `alpha(g)` is conjugate
//! to `g^n` for every `g`. Since `g^n` only depends on `n` modulo the
//! exponent, types are residues modulo the exponent.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::group::{lcm, Element, FiniteGroup};
use crate::hom::{enumerate_homomorphisms, GroupHom};

/// Automorphisms of `alpha` as a 1-morphism: the centralizer of its image.
pub fn centralizer_of_hom(alpha: &GroupHom) -> Vec<Element> {
    alpha.target().centralizer(&alpha.image_set())
}

/// `class_of[g^n]`, for `n` in `0..exponent` and every `g`.
struct PowerClasses {
    table: Vec<Vec<usize>>,
}

impl PowerClasses {
    fn new(group: &FiniteGroup) -> Self {
        let classes = group.conjugacy_classes();
        let exp = group.exponent() as usize;
        let table = (0..exp)
            .map(|n| (0..group.order()).map(|g| classes.class_of[group.pow(g, n as u64)]).collect())
            .collect();
        PowerClasses { table }
    }

    fn matches(&self, class_of: &[usize], alpha: &GroupHom, n: usize) -> bool {
        alpha.images().iter().enumerate().all(|(g, &a)| class_of[a] == self.table[n][g])
    }
}

/// Whether the endomorphism `alpha` has conjugacy type `n`.
pub fn is_conjugacy_type(alpha: &GroupHom, n: u64) -> bool {
    let group = alpha.source();
    let classes = group.conjugacy_classes();
    (0..group.order()).all(|g| classes.class_of[alpha.image(g)] == classes.class_of[group.pow(g, n)])
}

#[derive(Clone, Debug)]
pub struct ConjugacyTypeResult {
    pub group: Arc<FiniteGroup>,
    pub exponent: u64,
    pub types: BTreeSet<u64>,
    /// First endomorphism, in enumeration order, of each type.
    pub witnesses: BTreeMap<u64, GroupHom>,
}

/// All conjugacy types realized by endomorphisms of `group`.
pub fn conjugacy_types(group: &Arc<FiniteGroup>) -> Result<ConjugacyTypeResult> {
    let endos = enumerate_homomorphisms(group, group)?;
    let powers = PowerClasses::new(group);
    let exp = group.exponent();
    let class_of = &group.conjugacy_classes().class_of;
    let per_hom: Vec<Vec<u64>> = endos
        .par_iter()
        .map(|alpha| (0..exp).filter(|&n| powers.matches(class_of, alpha, n as usize)).collect())
        .collect();
    let mut witnesses = BTreeMap::new();
    for (alpha, types) in endos.iter().zip(per_hom) {
        for n in types {
            witnesses.entry(n).or_insert_with(|| alpha.clone());
        }
    }
    Ok(ConjugacyTypeResult {
        group: group.clone(),
        exponent: exp,
        types: witnesses.keys().copied().collect(),
        witnesses,
    })
}

/// Residues modulo the lcm of the exponents that are conjugacy types of
/// every group in the universe. This bounds the center of the band category
/// restricted to the universe from above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandFamilies {
    pub modulus: u64,
    pub residues: BTreeSet<u64>,
}

pub fn band_center_families(universe: &[Arc<FiniteGroup>]) -> Result<BandFamilies> {
    let results: Vec<ConjugacyTypeResult> =
        universe.par_iter().map(conjugacy_types).collect::<Result<_>>()?;
    let modulus = results.iter().fold(1, |acc, r| lcm(acc, r.exponent));
    let residues = (0..modulus)
        .filter(|&n| results.iter().all(|r| r.types.contains(&(n % r.exponent))))
        .collect();
    Ok(BandFamilies { modulus, residues })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn centralizers_of_special_homs() {
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        assert_eq!(centralizer_of_hom(&GroupHom::constant(&s3, &s3)).len(), 6);
        assert_eq!(centralizer_of_hom(&GroupHom::identity(&s3)), s3.center());
        // Sign-type map onto {e, (12)}: odd permutations go to index 2.
        let t = 2;
        let even = s3.commutator_subgroup();
        let images: Vec<Element> = (0..6).map(|g| if even.contains(&g) { 0 } else { t }).collect();
        let sign = GroupHom::new(s3.clone(), s3.clone(), images).unwrap();
        assert_eq!(centralizer_of_hom(&sign), s3.centralizer(&[t]));
        assert_eq!(centralizer_of_hom(&sign).len(), 2);
    }

    #[test]
    fn small_type_sets() {
        let trivial = arc(FiniteGroup::cyclic(1).unwrap());
        assert_eq!(conjugacy_types(&trivial).unwrap().types, BTreeSet::from([0]));
        let c3 = arc(FiniteGroup::cyclic(3).unwrap());
        assert_eq!(conjugacy_types(&c3).unwrap().types, BTreeSet::from([0, 1, 2]));
        let fam = band_center_families(&[arc(FiniteGroup::cyclic(2).unwrap())]).unwrap();
        assert_eq!(fam.residues, BTreeSet::from([0, 1]));
        let fam = band_center_families(&[arc(FiniteGroup::cyclic(6).unwrap())]).unwrap();
        assert_eq!(fam.residues, (0..6).collect());
    }

    #[test]
    fn witnesses_satisfy_definition() {
        let s4 = arc(FiniteGroup::symmetric(4).unwrap());
        let result = conjugacy_types(&s4).unwrap();
        for (&n, alpha) in &result.witnesses {
            assert!(is_conjugacy_type(alpha, n));
        }
        assert!(result.types.contains(&0) && result.types.contains(&1));
    }
}
