//! Chromatic Schultz polynomials computed from the defining pair sums.
//!
//! The sum runs over unordered vertex pairs including `u = v`: a diagonal
//! pair contributes `2ζ(u)` (sum kernel) or `ζ(u)²` (product kernel) at
//! degree 0, every other pair contributes once at degree `d(u, v)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use crate::colouring::Direction;
use crate::colouring::{self, canonical_family_colouring, first_conflict, Colouring, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{distances, generate, FamilySpec, Graph};
use crate::polynomial::Polynomial;

/// Pair weight: `ζ(u) + ζ(v)` or `ζ(u) · ζ(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kernel {
    Sum,
    Product,
}

impl Kernel {
    fn weight(self, a: u32, b: u32) -> Result<i64> {
        let (a, b) = (i64::from(a), i64::from(b));
        match self {
            Kernel::Sum => a.checked_add(b),
            Kernel::Product => a.checked_mul(b),
        }
        .ok_or(Error::IntegerOverflow)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Variant {
    pub kernel: Kernel,
    pub direction: Direction,
}

impl Variant {
    pub const SUM_MINUS: Variant = Variant { kernel: Kernel::Sum, direction: Direction::Minus };
    pub const SUM_PLUS: Variant = Variant { kernel: Kernel::Sum, direction: Direction::Plus };
    pub const PROD_MINUS: Variant = Variant { kernel: Kernel::Product, direction: Direction::Minus };
    pub const PROD_PLUS: Variant = Variant { kernel: Kernel::Product, direction: Direction::Plus };

    pub const ALL: [Variant; 4] = [
        Variant::SUM_MINUS,
        Variant::SUM_PLUS,
        Variant::PROD_MINUS,
        Variant::PROD_PLUS,
    ];

    pub fn as_str(&self) -> &'static str {
        match (self.kernel, self.direction) {
            (Kernel::Sum, Direction::Minus) => "sum-minus",
            (Kernel::Sum, Direction::Plus) => "sum-plus",
            (Kernel::Product, Direction::Minus) => "prod-minus",
            (Kernel::Product, Direction::Plus) => "prod-plus",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown variant {s:?}")))
    }
}

impl From<Variant> for String {
    fn from(v: Variant) -> Self {
        v.as_str().to_owned()
    }
}

impl TryFrom<String> for Variant {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn chromatic_schultz(g: &Graph, c: &Colouring, kernel: Kernel) -> Result<Polynomial> {
    if let Some((u, v)) = first_conflict(g, c)? {
        return Err(Error::ImproperColouring(u, v));
    }
    let d = distances(g);
    let zeta = c.zeta();
    let mut p = Polynomial::zero();
    for u in 0..g.vertex_count() {
        let row = d.row(u);
        for v in u..g.vertex_count() {
            p.add_term_in_place(kernel.weight(zeta[u], zeta[v])?, row[v] as usize)?;
        }
    }
    Ok(p)
}

/// The variant polynomial of an arbitrary graph, using the searched χ⁻ or
/// χ⁺ colouring.
pub fn variant_polynomial(g: &Graph, variant: Variant, limits: &SearchLimits) -> Result<Polynomial> {
    let c = colouring::optimal_colouring_with(g, variant.direction, limits)?;
    chromatic_schultz(g, &c, variant.kernel)
}

/// The variant polynomial of a family graph, using its canonical colouring
/// (no search, so any size works).
pub fn family_variant_polynomial(spec: FamilySpec, variant: Variant) -> Result<Polynomial> {
    let g = generate(spec)?;
    let c = canonical_family_colouring(spec, variant.direction)?;
    chromatic_schultz(&g, &c, variant.kernel)
}
