//! Group and cocycle specs, and their JSON file formats.
//!
//! Group files: `{"order": n, "table": [[...], ...], "label": "..."}` with
//! 0-based indices; a non-zero identity index is swapped into 0 and the
//! relabeling reported. Cocycle files: `{"modulus": N, "degree": k,
//! "entries": [[g_1, ..., g_k, v], ...]}` with omitted tuples zero.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::center::CentralObjectSpec;
use crate::cohomology::{cup3, normalize, Cochain, Normalization};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Arc<FiniteGroup>,
    /// `old index -> new index`, when the file's identity was not index 0.
    pub relabeling: Option<Vec<Element>>,
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct CocycleFile {
    modulus: u64,
    degree: usize,
    entries: Vec<Vec<u64>>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| Error::Json { path: path.to_path_buf(), source })
}

/// Parses `C<n>`, `S<m>`, `A<m>`, products of these joined by `x`, or
/// `file:<path>`.
pub fn parse_group_spec(spec: &str) -> Result<LoadedGroup> {
    if let Some(path) = spec.strip_prefix("file:") {
        return load_group_file(Path::new(path));
    }
    let bad = || Error::GroupSpec(spec.to_string());
    let mut product: Option<FiniteGroup> = None;
    for factor in spec.split('x') {
        let (kind, digits) = factor.split_at(factor.len().min(1));
        let n: usize = digits.parse().map_err(|_| bad())?;
        let g = match kind {
            "C" => FiniteGroup::cyclic(n)?,
            "S" if n >= 1 => FiniteGroup::symmetric(n)?,
            "A" if n >= 1 => FiniteGroup::alternating(n)?,
            _ => return Err(bad()),
        };
        product = Some(match product {
            None => g,
            Some(acc) => FiniteGroup::direct_product(&acc, &g)?,
        });
    }
    let group = product.ok_or_else(bad)?.with_label(spec);
    Ok(LoadedGroup { group: Arc::new(group), relabeling: None })
}

pub fn load_group_file(path: &Path) -> Result<LoadedGroup> {
    let file: GroupFile = parse_json(path, &read(path)?)?;
    if file.table.len() != file.order {
        return Err(Error::InvalidTable(format!(
            "order is {} but the table has {} rows",
            file.order,
            file.table.len()
        )));
    }
    let label = file.label.or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()));
    let (group, relabeling) = FiniteGroup::from_table_relabeled(&file.table, label)?;
    Ok(LoadedGroup { group: Arc::new(group), relabeling })
}

pub fn group_to_json(group: &FiniteGroup) -> String {
    let n = group.order();
    let file = GroupFile {
        order: n,
        table: (0..n).map(|a| (0..n).map(|b| group.mul(a, b)).collect()).collect(),
        label: group.label().map(str::to_string),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

#[derive(Clone, Debug)]
pub struct LoadedCocycle {
    pub cochain: Cochain,
    /// Present when the input had to be normalized.
    pub normalization: Option<Normalization>,
}

/// Parses `zero`, `cup:i,j,k[:N]` or `file:<path>` against a loaded group.
/// `zero` is the degree-3 zero cocycle with modulus 1, and `cup` defaults to
/// `N = exponent(G)`.
pub fn parse_cocycle_spec(spec: &str, group: &LoadedGroup) -> Result<LoadedCocycle> {
    if let Some(path) = spec.strip_prefix("file:") {
        return load_cocycle_file(Path::new(path), group);
    }
    if spec == "zero" {
        let cochain = Cochain::zero(group.group.clone(), 3, 1)?;
        return Ok(LoadedCocycle { cochain, normalization: None });
    }
    let bad = || Error::CocycleSpec(spec.to_string());
    let body = spec.strip_prefix("cup:").ok_or_else(bad)?;
    let (indices, modulus) = match body.split_once(':') {
        Some((idx, m)) => (idx, Some(m.parse::<u64>().map_err(|_| bad())?)),
        None => (body, None),
    };
    let idx: Vec<usize> = indices.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
    let [i, j, k] = idx[..] else { return Err(bad()) };
    let modulus = modulus.unwrap_or_else(|| group.group.exponent());
    let cochain = cup3(&group.group, i, j, k, modulus)?;
    Ok(LoadedCocycle { cochain, normalization: None })
}

pub fn load_cocycle_file(path: &Path, group: &LoadedGroup) -> Result<LoadedCocycle> {
    let file: CocycleFile = parse_json(path, &read(path)?)?;
    let g = &group.group;
    let n = g.order();
    let k = file.degree;
    if k == 0 || k > crate::cohomology::MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    if file.modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    // Storage limits are enforced before allocating the dense table.
    Cochain::zero(g.clone(), k, 1)?;
    let mut raw = vec![0u64; n.pow(k as u32)];
    for entry in &file.entries {
        if entry.len() != k + 1 {
            return Err(Error::InvalidTable(format!(
                "cocycle entry {entry:?} should have {} numbers",
                k + 1
            )));
        }
        let mut index = 0;
        for &x in &entry[..k] {
            let x = x as usize;
            if x >= n {
                return Err(Error::ElementIndex { index: x, order: n });
            }
            let x = group.relabeling.as_ref().map_or(x, |m| m[x]);
            index = index * n + x;
        }
        raw[index] = entry[k] % file.modulus;
    }
    let norm = normalize(g.clone(), k, file.modulus, &raw)?;
    if norm.adjusted {
        Ok(LoadedCocycle { cochain: norm.cochain.clone(), normalization: Some(norm) })
    } else {
        Ok(LoadedCocycle { cochain: norm.cochain, normalization: None })
    }
}

/// Sparse cocycle file contents, entries in tuple order.
pub fn cocycle_to_json(cochain: &Cochain) -> String {
    let file = CocycleFile {
        modulus: cochain.modulus(),
        degree: cochain.degree(),
        entries: cochain
            .support()
            .map(|(t, v)| t.into_iter().map(|g| g as u64).chain([v]).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Parses `class:multiplicity,...`; absent classes have multiplicity 0.
pub fn parse_spec_vector(spec: &str, class_count: usize) -> Result<CentralObjectSpec> {
    let mut multiplicities = vec![0; class_count];
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Error::SpecVector(format!("{item:?} is not of the form class:multiplicity"));
        let (class, mult) = item.split_once(':').ok_or_else(bad)?;
        let class: usize = class.trim().parse().map_err(|_| bad())?;
        let mult: usize = mult.trim().parse().map_err(|_| bad())?;
        if class >= class_count {
            return Err(Error::ClassIndex { index: class, count: class_count });
        }
        multiplicities[class] = mult;
    }
    Ok(CentralObjectSpec::new(multiplicities))
}

/// Comma-separated group specs. File specs may not contain commas.
pub fn parse_universe(spec: &str) -> Result<Vec<Arc<FiniteGroup>>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_group_spec(s).map(|g| g.group))
        .collect()
}
