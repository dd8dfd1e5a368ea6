//! Twisted group algebras `K^gamma G` (basis `u_g`, `u_g u_h = zeta^gamma(g,h) u_gh`)
//! and the dimensions of their irreducible representations.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::{require_cocycle, Cochain};
use crate::dixon::degrees_with_central_character;
use crate::error::{Error, Result};
use crate::group::{gcd, Element, FiniteGroup};

/// Largest central extension built by the general path.
pub const EXTENSION_ORDER_LIMIT: usize = 4096;

#[derive(Clone, Debug)]
pub struct TwistedGroupAlgebra {
    gamma: Cochain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMethod {
    AbelianFastPath,
    CentralExtension,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepProfile {
    /// Ascending.
    pub dimensions: Vec<usize>,
    pub regular_class_count: usize,
    pub method: ProfileMethod,
}

impl TwistedGroupAlgebra {
    /// Checks that `gamma` is a normalized 2-cocycle.
    pub fn new(gamma: Cochain) -> Result<Self> {
        if gamma.degree() != 2 {
            return Err(Error::Degree(gamma.degree()));
        }
        require_cocycle(&gamma)?;
        Ok(TwistedGroupAlgebra { gamma })
    }

    /// The untwisted group algebra.
    pub fn untwisted(group: Arc<FiniteGroup>) -> Result<Self> {
        Ok(TwistedGroupAlgebra { gamma: Cochain::zero(group, 2, 1)? })
    }

    pub(crate) fn new_unchecked(gamma: Cochain) -> Self {
        TwistedGroupAlgebra { gamma }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.gamma.group()
    }

    pub fn gamma(&self) -> &Cochain {
        &self.gamma
    }

    /// Whether `g` is gamma-regular: `gamma(g,x) = gamma(x,g)` for every `x`
    /// commuting with `g`.
    pub fn is_regular(&self, g: Element) -> bool {
        let group = self.group();
        (0..group.order())
            .filter(|&x| group.mul(g, x) == group.mul(x, g))
            .all(|x| self.gamma.value(&[g, x]) == self.gamma.value(&[x, g]))
    }

    /// Indices of the conjugacy classes of gamma-regular elements, ascending.
    pub fn regular_classes(&self) -> Vec<usize> {
        let classes = self.group().conjugacy_classes();
        (0..classes.len()).filter(|&i| self.is_regular(classes.representatives[i])).collect()
    }

    /// Irreducible dimensions, by the abelian fast path when the group is
    /// abelian and by the central extension otherwise.
    pub fn irrep_profile(&self) -> Result<IrrepProfile> {
        if self.group().is_abelian() {
            if let Ok(profile) = self.irrep_profile_with(ProfileMethod::AbelianFastPath) {
                return Ok(profile);
            }
        }
        self.irrep_profile_with(ProfileMethod::CentralExtension)
    }

    pub fn irrep_profile_with(&self, method: ProfileMethod) -> Result<IrrepProfile> {
        let regular = self.regular_classes().len();
        let dimensions = match method {
            ProfileMethod::AbelianFastPath => self.fast_path_dimensions()?,
            ProfileMethod::CentralExtension => self.extension_dimensions()?,
        };
        if dimensions.len() != regular {
            return Err(Error::Character(format!(
                "{} irreducibles but {regular} regular classes",
                dimensions.len()
            )));
        }
        Ok(IrrepProfile { dimensions, regular_class_count: regular, method })
    }

    /// Abelian `G`: the regular elements form a subgroup `R`, and every
    /// irreducible has dimension `sqrt(|G|/|R|)`.
    fn fast_path_dimensions(&self) -> Result<Vec<usize>> {
        let group = self.group();
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let radical = (0..group.order()).filter(|&g| self.is_regular(g)).count();
        let ratio = group.order() / radical;
        let d = (ratio as f64).sqrt().round() as usize;
        if d * d != ratio || ratio * radical != group.order() {
            return Err(Error::Character(format!("|G|/|R| = {ratio} is not a square")));
        }
        Ok(vec![d; radical])
    }

    /// Degrees of the irreducibles of `Z/M x_gamma G` on which the central
    /// `Z/M` acts faithfully, where `Z/M` is the subgroup of `Z/N` generated
    /// by the values of gamma.
    fn extension_dimensions(&self) -> Result<Vec<usize>> {
        let (ext, m) = self.central_extension()?;
        let c = if m == 1 { 0 } else { self.group().order() };
        degrees_with_central_character(&ext, c, m)
    }

    /// `Z/M x_gamma G` with elements `(a, g)` at index `a*|G| + g` and product
    /// `(a,g)(b,h) = (a + b + gamma(g,h), gh)`.
    pub fn central_extension(&self) -> Result<(FiniteGroup, usize)> {
        let group = self.group();
        let n = self.gamma.modulus();
        let step = self.gamma.values().iter().fold(n, |acc, &v| gcd(acc, v));
        let m = (n / step) as usize;
        let order = m * group.order();
        if order > EXTENSION_ORDER_LIMIT {
            return Err(Error::ExtensionTooLarge { order, limit: EXTENSION_ORDER_LIMIT });
        }
        let size = group.order();
        let ext = FiniteGroup::from_fn(order, |x, y| {
            let (a, g) = (x / size, x % size);
            let (b, h) = (y / size, y % size);
            let twist = (self.gamma.value(&[g, h]) / step) as usize;
            ((a + b + twist) % m) * size + group.mul(g, h)
        })?;
        Ok((ext, m))
    }
}

/// Number of isomorphism classes of `m`-dimensional representations: the
/// multisets of irreducibles whose dimensions add up to `m`.
pub fn count_reps_of_dim(profile: &IrrepProfile, m: usize) -> Result<u128> {
    let mut ways = vec![0u128; m + 1];
    ways[0] = 1;
    for &d in &profile.dimensions {
        for s in d..=m {
            ways[s] = ways[s].checked_add(ways[s - d]).ok_or(Error::Overflow)?;
        }
    }
    Ok(ways[m])
}
