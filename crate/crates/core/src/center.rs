//! Drinfeld-center invariants of the pointed fusion category `Vec_G^omega`.
//!
//! Simple objects are the `X_g`; isomorphism classes of objects form the free
//! commutative monoid on them, and its central elements are the sums
//! `sum_i a_i y_i` over conjugacy class sums `y_i`. Such an element lifts to
//! a central object exactly when each `a_i` is the dimension of some
//! representation of the twisted centralizer algebra
//! `K^{gamma_i} C_G(g_i)` with `gamma_i = gamma_{omega, g_i}` restricted to
//! the centralizer, and the lifts are counted by tuples of such
//! representations.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{gamma_unchecked, is_coboundary, require_cocycle, Cochain, CohomologyClassVerdict};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup};
use crate::linalg::{abelian_invariants, dual_invariants};
use crate::twisted::{count_reps_of_dim, IrrepProfile, TwistedGroupAlgebra};

/// Per-class twist data: the centralizer of the representative and the
/// restricted obstruction cocycle on it.
#[derive(Clone, Debug)]
pub struct ClassTwist {
    pub class: usize,
    pub representative: Element,
    pub centralizer: Subgroup,
    pub gamma: Cochain,
}

#[derive(Debug)]
pub struct PointedCategory {
    omega: Cochain,
    twists: OnceLock<Vec<ClassTwist>>,
    profiles: Vec<OnceLock<IrrepProfile>>,
    verdicts: Vec<OnceLock<CohomologyClassVerdict>>,
}

/// Multiplicities `a_i` of the class sums `y_i`, indexed by class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralObjectSpec {
    pub multiplicities: Vec<usize>,
}

impl CentralObjectSpec {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        CentralObjectSpec { multiplicities }
    }

    /// `a * y_class`.
    pub fn unit(class_count: usize, class: usize, a: usize) -> Self {
        let mut multiplicities = vec![0; class_count];
        multiplicities[class] = a;
        CentralObjectSpec { multiplicities }
    }
}

impl PointedCategory {
    /// Validates that `omega` is a normalized 3-cocycle.
    pub fn new(omega: Cochain) -> Result<Self> {
        if omega.degree() != 3 {
            return Err(Error::Degree(omega.degree()));
        }
        require_cocycle(&omega)?;
        let classes = omega.group().conjugacy_classes().len();
        Ok(PointedCategory {
            omega,
            twists: OnceLock::new(),
            profiles: (0..classes).map(|_| OnceLock::new()).collect(),
            verdicts: (0..classes).map(|_| OnceLock::new()).collect(),
        })
    }

    /// `Vec_G` with the trivial associator.
    pub fn untwisted(group: Arc<FiniteGroup>, modulus: u64) -> Result<Self> {
        Self::new(Cochain::zero(group, 3, modulus)?)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.omega.group()
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn modulus(&self) -> u64 {
        self.omega.modulus()
    }

    pub fn class_count(&self) -> usize {
        self.profiles.len()
    }

    pub fn twists(&self) -> Result<&[ClassTwist]> {
        if let Some(t) = self.twists.get() {
            return Ok(t);
        }
        let group = self.group();
        let classes = group.conjugacy_classes();
        let computed: Result<Vec<ClassTwist>> = (0..classes.len())
            .into_par_iter()
            .map(|class| {
                let g = classes.representatives[class];
                let centralizer = group.subgroup(&group.centralizer(&[g]))?;
                let local = self.omega.restrict(&centralizer)?;
                let z = centralizer.index_of(g).expect("g centralizes itself");
                let gamma = gamma_unchecked(&local, z)?;
                Ok(ClassTwist { class, representative: g, centralizer, gamma })
            })
            .collect();
        let _ = self.twists.set(computed?);
        Ok(self.twists.get().unwrap())
    }

    fn check_class(&self, class: usize) -> Result<()> {
        if class >= self.class_count() {
            return Err(Error::ClassIndex { index: class, count: self.class_count() });
        }
        Ok(())
    }

    /// Irreducible dimensions of `K^{gamma_i} C_G(g_i)`.
    pub fn profile(&self, class: usize) -> Result<&IrrepProfile> {
        self.check_class(class)?;
        if let Some(p) = self.profiles[class].get() {
            return Ok(p);
        }
        let twist = &self.twists()?[class];
        let profile = TwistedGroupAlgebra::new_unchecked(twist.gamma.clone()).irrep_profile()?;
        let _ = self.profiles[class].set(profile);
        Ok(self.profiles[class].get().unwrap())
    }

    fn verdict(&self, class: usize) -> Result<&CohomologyClassVerdict> {
        self.check_class(class)?;
        if let Some(v) = self.verdicts[class].get() {
            return Ok(v);
        }
        let verdict = is_coboundary(&self.twists()?[class].gamma)?;
        let _ = self.verdicts[class].set(verdict);
        Ok(self.verdicts[class].get().unwrap())
    }
}

/// The class sums `y_i` as unit specs, in class order.
pub fn e2_00_basis(category: &PointedCategory) -> Vec<CentralObjectSpec> {
    let n = category.class_count();
    (0..n).map(|i| CentralObjectSpec::unit(n, i, 1)).collect()
}

#[derive(Clone, Debug)]
pub struct Obstruction<'a> {
    pub twist: &'a ClassTwist,
    pub verdict: &'a CohomologyClassVerdict,
}

impl Obstruction<'_> {
    /// The obstruction vanishes when `gamma_i` is a coboundary on the
    /// centralizer.
    pub fn vanishes(&self) -> bool {
        self.verdict.is_coboundary
    }
}

pub fn obstruction(category: &PointedCategory, class: usize) -> Result<Obstruction<'_>> {
    let verdict = category.verdict(class)?;
    Ok(Obstruction { twist: &category.twists()?[class], verdict })
}

/// Number of central structures on `sum_i a_i y_i`, up to isomorphism.
pub fn lift_count(category: &PointedCategory, spec: &CentralObjectSpec) -> Result<u128> {
    let n = category.class_count();
    if spec.multiplicities.len() != n {
        return Err(Error::SpecLength { got: spec.multiplicities.len(), expected: n });
    }
    let mut total: u128 = 1;
    for (class, &a) in spec.multiplicities.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let count = count_reps_of_dim(category.profile(class)?, a)?;
        total = total.checked_mul(count).ok_or(Error::Overflow)?;
        if total == 0 {
            break;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelChar {
    pub invariant_factors: Vec<u64>,
}

impl KernelChar {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

/// Characters `Hom(G, Z/N) = Hom(G^ab, Z/N)` of the universal grading group.
pub fn kernel_of_characteristic(category: &PointedCategory) -> Result<KernelChar> {
    let (ab, _) = category.group().abelianization()?;
    let invariants = abelian_invariants(&ab)?;
    Ok(KernelChar { invariant_factors: dual_invariants(&invariants, category.modulus()) })
}

/// Number of simple central objects: one per irreducible of each twisted
/// centralizer algebra.
pub fn count_simple_central_objects(category: &PointedCategory) -> Result<usize> {
    (0..category.class_count()).map(|i| Ok(category.profile(i)?.regular_class_count)).sum()
}

/// A page term given by a description and a rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageTerm {
    pub description: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSum {
    pub class: usize,
    pub representative: Element,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EPages {
    pub e1_00: PageTerm,
    pub e1_01: PageTerm,
    pub e1_10: PageTerm,
    pub e1_11: PageTerm,
    pub e1_21: PageTerm,
    pub e2_00: Vec<ClassSum>,
    pub e2_01: PageTerm,
    pub e2_11: KernelChar,
    pub universal_grading: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionEntry {
    pub class: usize,
    pub representative: Element,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftEntry {
    pub spec: CentralObjectSpec,
    pub count: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub group: String,
    pub modulus: u64,
    pub e_pages: EPages,
    pub obstructions: Vec<ObstructionEntry>,
    pub kernel_char: KernelChar,
    pub lifts: Vec<LiftEntry>,
    pub simple_central_objects: usize,
}

fn term(description: &str, rank: usize) -> PageTerm {
    PageTerm { description: description.to_string(), rank }
}

/// The first and second page terms.
pub fn e_page_report(category: &PointedCategory) -> Result<EPages> {
    let group = category.group();
    let n = group.order();
    let classes = group.conjugacy_classes();
    Ok(EPages {
        e1_00: term("free commutative monoid on the simple objects X_g", n),
        e1_01: term("K^x", 1),
        e1_10: term("translation functors X_h -> X_gh, one permutation matrix per simple", n),
        e1_11: term("(K^x)^n, one scalar per simple object", n),
        e1_21: term("product of Aut(X_g (x) X_h) = K^x over pairs of simples", n * n),
        e2_00: (0..classes.len())
            .map(|i| ClassSum { class: i, representative: classes.representatives[i], size: classes.class_sizes[i] })
            .collect(),
        e2_01: term("K^x", 1),
        e2_11: kernel_of_characteristic(category)?,
        universal_grading: "U = G".to_string(),
    })
}

/// Full report. Lifts are listed for `specs`, or for the unit spec of every
/// class when `specs` is empty.
pub fn center_report(category: &PointedCategory, specs: &[CentralObjectSpec]) -> Result<CenterReport> {
    let n = category.class_count();
    // Warm the per-class caches in parallel; assembly below is in class order.
    (0..n).into_par_iter().try_for_each(|i| -> Result<()> {
        category.verdict(i)?;
        category.profile(i)?;
        Ok(())
    })?;
    let obstructions = (0..n)
        .map(|i| {
            let o = obstruction(category, i)?;
            Ok(ObstructionEntry { class: i, representative: o.twist.representative, vanishes: o.vanishes() })
        })
        .collect::<Result<Vec<_>>>()?;
    let default_specs;
    let specs = if specs.is_empty() {
        default_specs = e2_00_basis(category);
        &default_specs[..]
    } else {
        specs
    };
    let lifts = specs
        .iter()
        .map(|s| Ok(LiftEntry { spec: s.clone(), count: lift_count(category, s)? }))
        .collect::<Result<Vec<_>>>()?;
    let e_pages = e_page_report(category)?;
    Ok(CenterReport {
        group: category.group().label().unwrap_or("G").to_string(),
        modulus: category.modulus(),
        kernel_char: e_pages.e2_11.clone(),
        e_pages,
        obstructions,
        lifts,
        simple_central_objects: count_simple_central_objects(category)?,
    })
}
