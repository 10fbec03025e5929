//! Published closed forms for the chromatic Schultz polynomials of paths,
//! cycles, complete graphs and complete bipartite graphs.
//!
//! Each formula is expanded exactly as stated: summation limits are floored
//! when they are fractional, geometric quotients `(1 − x^m)/(1 − x)` become
//! `1 + x + … + x^(m−1)`, and nothing is corrected when the result
//! disagrees with the pair-sum definition. Comparing the two is the job of
//! [`crate::verify`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::polynomial::Polynomial;
use crate::schultz::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    PathSigmaMinus,
    PathSigmaPlus,
    CycleSigmaMinus,
    CycleSigmaPlus,
    CompleteSigma,
    BicliqueSigmaMinus,
    BicliqueSigmaPlus,
    PathModMinus,
    PathModPlus,
    CycleModMinus,
    CycleModPlus,
    BicliqueModMinus,
    BicliqueModPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
        }
    }

    pub fn of(spec: &FamilySpec) -> FamilyKind {
        match spec {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
        }
    }
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::PathSigmaMinus,
        TheoremId::PathSigmaPlus,
        TheoremId::CycleSigmaMinus,
        TheoremId::CycleSigmaPlus,
        TheoremId::CompleteSigma,
        TheoremId::BicliqueSigmaMinus,
        TheoremId::BicliqueSigmaPlus,
        TheoremId::PathModMinus,
        TheoremId::PathModPlus,
        TheoremId::CycleModMinus,
        TheoremId::CycleModPlus,
        TheoremId::BicliqueModMinus,
        TheoremId::BicliqueModPlus,
    ];

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            PathSigmaMinus => "path-sigma-minus",
            PathSigmaPlus => "path-sigma-plus",
            CycleSigmaMinus => "cycle-sigma-minus",
            CycleSigmaPlus => "cycle-sigma-plus",
            CompleteSigma => "complete-sigma",
            BicliqueSigmaMinus => "biclique-sigma-minus",
            BicliqueSigmaPlus => "biclique-sigma-plus",
            PathModMinus => "path-mod-minus",
            PathModPlus => "path-mod-plus",
            CycleModMinus => "cycle-mod-minus",
            CycleModPlus => "cycle-mod-plus",
            BicliqueModMinus => "biclique-mod-minus",
            BicliqueModPlus => "biclique-mod-plus",
        }
    }

    pub fn family(self) -> FamilyKind {
        use TheoremId::*;
        match self {
            PathSigmaMinus | PathSigmaPlus | PathModMinus | PathModPlus => FamilyKind::Path,
            CycleSigmaMinus | CycleSigmaPlus | CycleModMinus | CycleModPlus => FamilyKind::Cycle,
            CompleteSigma => FamilyKind::Complete,
            BicliqueSigmaMinus | BicliqueSigmaPlus | BicliqueModMinus | BicliqueModPlus => {
                FamilyKind::CompleteBipartite
            }
        }
    }

    /// The polynomial variant the theorem describes. The complete-graph
    /// formula is stated for both directions; minus is used.
    pub fn variant(self) -> Variant {
        use TheoremId::*;
        match self {
            PathSigmaMinus | CycleSigmaMinus | CompleteSigma | BicliqueSigmaMinus => Variant::SUM_MINUS,
            PathSigmaPlus | CycleSigmaPlus | BicliqueSigmaPlus => Variant::SUM_PLUS,
            PathModMinus | CycleModMinus | BicliqueModMinus => Variant::PROD_MINUS,
            PathModPlus | CycleModPlus | BicliqueModPlus => Variant::PROD_PLUS,
        }
    }

    /// Smallest `n` the theorem is stated for (paths, cycles, complete graphs).
    pub fn min_n(self) -> usize {
        match self.family() {
            FamilyKind::Path | FamilyKind::CompleteBipartite => 1,
            FamilyKind::Cycle => 3,
            FamilyKind::Complete => 2,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown theorem {s:?}")))
    }
}

/// Coefficient accumulator with checked arithmetic.
struct Terms {
    theorem: TheoremId,
    n: usize,
    poly: Polynomial,
}

impl Terms {
    fn new(theorem: TheoremId, n: usize) -> Self {
        Terms { theorem, n, poly: Polynomial::zero() }
    }

    fn add(&mut self, degree: usize, coeff: i128) -> Result<()> {
        let c = i64::try_from(coeff).map_err(|_| Error::IntegerOverflow)?;
        self.poly.add_term_in_place(c, degree)
    }

    fn half(&self, numerator: i128) -> Result<i128> {
        if numerator % 2 != 0 {
            return Err(Error::NonIntegerCoefficient {
                theorem: self.theorem.as_str(),
                n: self.n,
                numerator: i64::try_from(numerator).map_err(|_| Error::IntegerOverflow)?,
                denominator: 2,
            });
        }
        Ok(numerator / 2)
    }

    fn finish(self) -> Polynomial {
        self.poly
    }
}

/// Expands the closed form `id` for the family instance `spec`.
pub fn closed_form(id: TheoremId, spec: FamilySpec) -> Result<Polynomial> {
    let spec = spec.validated()?;
    let found = FamilyKind::of(&spec);
    if found != id.family() {
        return Err(Error::WrongFamily {
            theorem: id.as_str(),
            expected: id.family().name(),
            found: found.name(),
        });
    }
    match spec {
        FamilySpec::Path { n } => path_form(id, n),
        FamilySpec::Cycle { n } => cycle_form(id, n),
        FamilySpec::Complete { n } => complete_form(id, n),
        FamilySpec::CompleteBipartite { a, b } => biclique_form(id, a, b),
    }
}

fn path_form(id: TheoremId, n: usize) -> Result<Polynomial> {
    let mut t = Terms::new(id, n);
    let nn = n as i128;
    let odd = n % 2 == 1;
    let upper = (n - 1) / 2;
    match id {
        TheoremId::PathSigmaMinus | TheoremId::PathSigmaPlus if odd => {
            let shift = if id == TheoremId::PathSigmaMinus { -1 } else { 1 };
            for i in 0..=upper {
                let ii = i as i128;
                t.add(2 * i + 1, 3 * nn - 6 * ii - 3)?;
                t.add(2 * i, 3 * nn - 6 * ii + shift)?;
            }
        }
        TheoremId::PathSigmaMinus | TheoremId::PathSigmaPlus => {
            for i in 0..=n {
                t.add(i, 3 * (nn - i as i128))?;
            }
        }
        TheoremId::PathModMinus | TheoremId::PathModPlus => {
            let shift = match (odd, id) {
                (false, _) => 0,
                (true, TheoremId::PathModMinus) => -3,
                (true, _) => 3,
            };
            for i in 0..=upper {
                let ii = i as i128;
                t.add(2 * i + 1, 2 * nn - 4 * ii - 2)?;
                let c = t.half(5 * nn - 10 * ii + shift)?;
                t.add(2 * i, c)?;
            }
        }
        _ => unreachable!("family checked by caller"),
    }
    Ok(t.finish())
}

fn cycle_form(id: TheoremId, n: usize) -> Result<Polynomial> {
    let mut t = Terms::new(id, n);
    let nn = n as i128;
    let even = n.is_multiple_of(2);
    match id {
        TheoremId::CycleSigmaMinus | TheoremId::CycleSigmaPlus => {
            // c · (1 − x^m) / (1 − x)
            let (c, m) = match (even, id) {
                (true, _) => (3 * nn, (n + 2) / 2),
                (false, TheoremId::CycleSigmaMinus) => (3 * (nn + 1), (n + 3) / 2),
                (false, _) => (5 * nn - 3, (n + 3) / 2),
            };
            for degree in 0..m {
                t.add(degree, c)?;
            }
        }
        TheoremId::CycleModMinus | TheoremId::CycleModPlus if even => {
            let constant = t.half(5 * nn)?;
            for i in 0..=n / 2 {
                t.add(2 * i + 1, 2 * nn)?;
                t.add(2 * i, constant)?;
            }
        }
        TheoremId::CycleModMinus => {
            let c = t.half(5 * nn + 17)?;
            t.add(0, c)?;
            // The x-term of the summand at i = 0 supplies the degree-1 coefficient.
            t.add(1, 2 * nn + 10)?;
            for i in 1..=(n - 1) / 2 {
                let ii = i as i128;
                t.add(2 * i + 1, 2 * nn + 9 * ii + 10)?;
                let c = t.half(5 * nn - 18 * ii + 13)?;
                t.add(2 * i, c)?;
            }
        }
        TheoremId::CycleModPlus => {
            let c = t.half(13 * nn - 11)?;
            t.add(0, c)?;
            t.add(1, 6 * nn - 7)?;
            for i in 1..=(n - 1) / 2 {
                let ii = i as i128;
                t.add(2 * i + 1, 6 * nn + ii - 7)?;
                let c = t.half(13 * nn - 2 * ii - 15)?;
                t.add(2 * i, c)?;
            }
        }
        _ => unreachable!("family checked by caller"),
    }
    Ok(t.finish())
}

fn complete_form(id: TheoremId, n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::BadParams(format!("{id} is stated for n >= 2, got n = {n}")));
    }
    let mut t = Terms::new(id, n);
    let nn = n as i128;
    t.add(0, nn * nn + nn)?;
    t.add(1, 2 * nn * nn - nn - 3)?;
    Ok(t.finish())
}

fn biclique_form(id: TheoremId, a: usize, b: usize) -> Result<Polynomial> {
    let mut t = Terms::new(id, a + b);
    let (a, b) = (a as i128, b as i128);
    let (pa, pb) = (a * (a - 1), b * (b - 1));
    let [c0, c1, c2] = match id {
        TheoremId::BicliqueSigmaMinus => [2 * a + 4 * b, 3 * a * b, pa + 2 * pb],
        TheoremId::BicliqueSigmaPlus => [4 * a + 2 * b, 3 * a * b, 2 * pa + pb],
        TheoremId::BicliqueModMinus => [a + 4 * b, 2 * a * b, t.half(pa)? + 2 * pb],
        TheoremId::BicliqueModPlus => [4 * a + b, 2 * a * b, 2 * pa + t.half(pb)?],
        _ => unreachable!("family checked by caller"),
    };
    t.add(0, c0)?;
    t.add(1, c1)?;
    t.add(2, c2)?;
    Ok(t.finish())
}
