use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::crystal::{GroupSpec, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// Largest holonomy group `expand_holonomy` will build.
pub const HOLONOMY_CAP: usize = 1 << 16;

/// Coset representatives of `Λ\Γ` for a crystallographic group with
/// translation lattice exactly ℤⁿ: one element per linear part, identity first.
///
/// Closure and cocycle consistency hold by construction; torsion is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    dim: usize,
    elements: Vec<IsometryElement>,
}

impl CosetTable {
    /// Breadth-first closure of `generators` modulo ℤⁿ.
    pub fn expand(generators: &[IsometryElement], dim: usize) -> Result<Self> {
        for g in generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        let identity = IsometryElement::identity(dim);
        let mut index: BTreeMap<SignedPermutation, usize> = BTreeMap::new();
        index.insert(identity.linear().clone(), 0);
        let mut elements = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let prod = elements[i].compose(g)?;
                match index.get(prod.linear()) {
                    Some(&j) => {
                        if elements[j].translation() != prod.translation() {
                            return Err(cocycle_error(&elements[j], &prod));
                        }
                    }
                    None => {
                        if elements.len() == HOLONOMY_CAP {
                            return Err(Error::HolonomyTooLarge { cap: HOLONOMY_CAP });
                        }
                        index.insert(prod.linear().clone(), elements.len());
                        queue.push_back(elements.len());
                        elements.push(prod);
                    }
                }
            }
        }
        Ok(CosetTable { dim, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[IsometryElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn find(&self, linear: &SignedPermutation) -> Option<&IsometryElement> {
        self.elements.iter().find(|e| e.linear() == linear)
    }

    /// Checks every pairwise product against the table, `O(|F|²)`.
    pub fn verify_products(&self) -> Result<()> {
        let index: BTreeMap<&SignedPermutation, &IsometryElement> =
            self.elements.iter().map(|e| (e.linear(), e)).collect();
        for a in &self.elements {
            for b in &self.elements {
                let prod = a.compose(b)?;
                match index.get(prod.linear()) {
                    None => return Err(Error::NotClosed(prod.to_string())),
                    Some(rep) if rep.translation() != prod.translation() => {
                        return Err(cocycle_error(rep, &prod))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    /// A non-identity representative whose coset `γΛ` contains an element of
    /// finite order, if any.
    ///
    /// For `γ = B L_b` with `B` of order `m`, `(γL_λ)^m = L_{S(b+λ)}` where
    /// `S = Σ_{i<m} Bⁱ`, so the coset has torsion iff `S b ∈ S ℤⁿ`. On a cycle
    /// of `B` with sign product `−1` the block of `S` vanishes; on a cycle with
    /// sign product `+1` it has rank one along the weight vector `w`, and the
    /// condition reduces to `⟨w, b⟩ ∈ ℤ` on that cycle.
    pub fn torsion_witness(&self) -> Option<&IsometryElement> {
        self.elements.iter().skip(1).find(|g| {
            g.linear()
                .cycles()
                .iter()
                .filter(|c| c.sign == 1)
                .all(|c| {
                    let alpha = c
                        .indices
                        .iter()
                        .zip(&c.weights)
                        .fold(Rational4::ZERO, |acc, (&k, &w)| {
                            acc + g.translation()[k].scale(w as i64)
                        });
                    alpha.is_integer()
                })
        })
    }
}

fn cocycle_error(existing: &IsometryElement, found: &IsometryElement) -> Error {
    let fmt_t = |e: &IsometryElement| {
        e.translation()
            .iter()
            .map(Rational4::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    Error::CocycleInconsistent {
        linear: existing.linear().to_string(),
        first: format!("({})", fmt_t(existing)),
        second: format!("({})", fmt_t(found)),
    }
}

/// True iff no coset `γΛ` with `γ ≠ 1` contains an element of finite order.
pub fn is_torsion_free(table: &CosetTable) -> bool {
    table.torsion_witness().is_none()
}

/// A validated Bieberbach group with translation lattice ℤⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BieberbachGroup {
    name: Option<String>,
    generators: Vec<IsometryElement>,
    cosets: CosetTable,
}

impl BieberbachGroup {
    pub fn from_generators(dim: usize, generators: Vec<IsometryElement>) -> Result<Self> {
        let cosets = CosetTable::expand(&generators, dim)?;
        if let Some(w) = cosets.torsion_witness() {
            return Err(Error::Torsion(w.to_string()));
        }
        Ok(BieberbachGroup {
            name: None,
            generators,
            cosets,
        })
    }

    /// The lattice ℤⁿ itself.
    pub fn torus(dim: usize) -> Self {
        BieberbachGroup {
            name: Some(format!("torus/{dim}")),
            generators: Vec::new(),
            cosets: CosetTable {
                dim,
                elements: vec![IsometryElement::identity(dim)],
            },
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or the canonical key when the group is anonymous.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| canonical_key(self))
    }

    pub fn dim(&self) -> usize {
        self.cosets.dim
    }

    pub fn generators(&self) -> &[IsometryElement] {
        &self.generators
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.cosets
    }

    pub fn elements(&self) -> &[IsometryElement] {
        &self.cosets.elements
    }

    /// `|F|`.
    pub fn holonomy_order(&self) -> usize {
        self.cosets.order()
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::from_group(self)
    }
}

/// Closes `generators` into a group, rejecting cocycle conflicts and torsion.
pub fn expand_holonomy(generators: &[IsometryElement], dim: usize) -> Result<BieberbachGroup> {
    BieberbachGroup::from_generators(dim, generators.to_vec())
}

/// Isomorphism type of the holonomy group `F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HolonomyClass {
    /// `ℤ₂ᵏ`; `k = 0` is the trivial group.
    ElementaryAbelian2 { rank: u32 },
    Cyclic { order: usize },
    Abelian { elementary_divisors: Vec<usize> },
    NonAbelian { order: usize },
    /// Not `ℤ₂ᵏ` and too large to classify further.
    Other { order: usize },
}

impl HolonomyClass {
    pub fn elementary_abelian_rank(&self) -> Option<u32> {
        match self {
            HolonomyClass::ElementaryAbelian2 { rank } => Some(*rank),
            _ => None,
        }
    }
}

impl fmt::Display for HolonomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomyClass::ElementaryAbelian2 { rank: 0 } => f.write_str("trivial"),
            HolonomyClass::ElementaryAbelian2 { rank: 1 } => f.write_str("Z2"),
            HolonomyClass::ElementaryAbelian2 { rank } => write!(f, "Z2^{rank}"),
            HolonomyClass::Cyclic { order } => write!(f, "Z{order}"),
            HolonomyClass::Abelian {
                elementary_divisors,
            } => {
                let parts: Vec<String> =
                    elementary_divisors.iter().map(|d| format!("Z{d}")).collect();
                f.write_str(&parts.join(" x "))
            }
            HolonomyClass::NonAbelian { order } => write!(f, "non-abelian of order {order}"),
            HolonomyClass::Other { order } => write!(f, "order {order}"),
        }
    }
}

const CLASSIFY_LIMIT: usize = 16;

pub fn classify_holonomy(table: &CosetTable) -> HolonomyClass {
    let linear: Vec<&SignedPermutation> = table.elements.iter().map(|e| e.linear()).collect();
    let order = linear.len();
    let orders: Vec<usize> = linear.iter().map(|b| b.order()).collect();
    if orders.iter().all(|&o| o <= 2) {
        // exponent 2 forces abelian, so |F| is a power of two
        return HolonomyClass::ElementaryAbelian2 {
            rank: order.trailing_zeros(),
        };
    }
    if order > CLASSIFY_LIMIT {
        return HolonomyClass::Other { order };
    }
    if orders.contains(&order) {
        return HolonomyClass::Cyclic { order };
    }
    let commutes = linear.iter().all(|a| {
        linear
            .iter()
            .all(|b| a.compose(b).ok() == b.compose(a).ok())
    });
    if !commutes {
        return HolonomyClass::NonAbelian { order };
    }
    HolonomyClass::Abelian {
        elementary_divisors: elementary_divisors(order, &orders),
    }
}

/// Elementary divisors of a finite abelian group from its element orders.
///
/// For a prime `p`, `#{x : x^{p^j} = 1} / #{x : x^{p^{j-1}} = 1} = p^{r_j}`
/// where `r_j` counts cyclic factors of order at least `p^j`.
fn elementary_divisors(order: usize, orders: &[usize]) -> Vec<usize> {
    let mut divisors = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while rest > 1 {
        if rest % p != 0 {
            p += 1;
            continue;
        }
        let mut part = 1;
        while rest % p == 0 {
            rest /= p;
            part *= p;
        }
        let mut ranks = Vec::new();
        let mut prev = 1usize;
        let mut pj = 1usize;
        while pj < part {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj % o == 0).count();
            let mut ratio = count / prev;
            let mut r = 0;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            ranks.push(r);
            prev = count;
        }
        for (j, &r) in ranks.iter().enumerate() {
            let next = ranks.get(j + 1).copied().unwrap_or(0);
            for _ in next..r {
                divisors.push(p.pow(j as u32 + 1));
            }
        }
    }
    divisors.sort_unstable_by(|a, b| b.cmp(a));
    divisors
}

/// Every linear part is a diagonal sign matrix and every translation lies in ½ℤⁿ.
pub fn is_diagonal_type(table: &CosetTable) -> bool {
    table.elements.iter().all(|e| {
        e.linear().is_diagonal() && e.translation().iter().all(|t| t.is_half_integer())
    })
}

pub fn is_orientable(table: &CosetTable) -> bool {
    table.elements.iter().all(|e| e.linear().determinant() == 1)
}

/// Deterministic text built from the sorted representative set.
pub fn canonical_key(group: &BieberbachGroup) -> String {
    table_key(group.cosets())
}

pub fn table_key(table: &CosetTable) -> String {
    let mut reps: Vec<&IsometryElement> = table.elements.iter().collect();
    reps.sort_by(|a, b| a.linear().cmp(b.linear()));
    let body: Vec<String> = reps.iter().map(|e| e.to_string()).collect();
    format!("n={};{}", table.dim, body.join(";"))
}

/// Outcome of validating user-supplied generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub name: Option<String>,
    pub dim: usize,
    pub accepted: bool,
    pub closure: bool,
    pub cocycle_consistent: bool,
    pub torsion_free: bool,
    pub holonomy_order: Option<usize>,
    pub holonomy: Option<HolonomyClass>,
    pub holonomy_type: Option<String>,
    pub elementary_abelian_rank: Option<u32>,
    pub diagonal_type: Option<bool>,
    pub orientable: Option<bool>,
    pub torsion_witness: Option<String>,
    pub error: Option<String>,
}

impl ValidationReport {
    fn rejected(spec: &GroupSpec, error: &Error) -> Self {
        ValidationReport {
            name: spec.name.clone(),
            dim: spec.dim,
            accepted: false,
            closure: false,
            cocycle_consistent: false,
            torsion_free: false,
            holonomy_order: None,
            holonomy: None,
            holonomy_type: None,
            elementary_abelian_rank: None,
            diagonal_type: None,
            orientable: None,
            torsion_witness: None,
            error: Some(error.to_string()),
        }
    }
}

/// Runs every structural check and reports the flags instead of failing.
pub fn validate(spec: &GroupSpec) -> ValidationReport {
    let generators = match spec.generator_elements() {
        Ok(g) => g,
        Err(e) => return ValidationReport::rejected(spec, &e),
    };
    let table = match CosetTable::expand(&generators, spec.dim) {
        Ok(t) => t,
        Err(e) => {
            let mut report = ValidationReport::rejected(spec, &e);
            // a cocycle conflict means the products closed up but disagree mod ℤⁿ
            report.closure = matches!(e, Error::CocycleInconsistent { .. });
            return report;
        }
    };
    let (closure, cocycle_consistent, error) = match table.verify_products() {
        Ok(()) => (true, true, None),
        Err(e @ Error::NotClosed(_)) => (false, false, Some(e.to_string())),
        Err(e) => (true, false, Some(e.to_string())),
    };
    let witness = table.torsion_witness().map(|w| w.to_string());
    let torsion_free = witness.is_none();
    let class = classify_holonomy(&table);
    ValidationReport {
        name: spec.name.clone(),
        dim: spec.dim,
        accepted: closure && cocycle_consistent && torsion_free,
        closure,
        cocycle_consistent,
        torsion_free,
        holonomy_order: Some(table.order()),
        holonomy_type: Some(class.to_string()),
        elementary_abelian_rank: class.elementary_abelian_rank(),
        holonomy: Some(class),
        diagonal_type: Some(is_diagonal_type(&table)),
        orientable: Some(is_orientable(&table)),
        error: error.or_else(|| {
            witness
                .as_ref()
                .map(|w| Error::Torsion(w.clone()).to_string())
        }),
        torsion_witness: witness,
    }
}
