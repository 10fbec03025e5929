//! Proper vertex colourings, the exact chromatic number, and χ⁻ / χ⁺
//! colourings.
//!
//! A χ⁻-colouring is a proper colouring with exactly χ(G) colours whose
//! class-size vector `(θ(c_1), …, θ(c_χ))` is lexicographically maximal.
//! Among colourings with that profile the lexicographically smallest
//! ζ-vector (in vertex order) is returned. The χ⁺-colouring is its mirror
//! image `ζ ↦ χ + 1 − ζ`: it maximises `(θ(c_χ), …, θ(c_1))` and is the
//! lexicographically largest ζ-vector with that profile.
//!
//! All searches are exponential in the worst case and are capped by
//! [`SearchLimits`]. Family graphs should use
//! [`canonical_family_colouring`], which is `O(n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};

pub const DEFAULT_SEARCH_LIMIT: usize = 24;
pub const DEFAULT_ENUMERATE_LIMIT: usize = 12;
pub const SEARCH_LIMIT_ENV: &str = "SCHULTZ_SEARCH_LIMIT";

/// Vertex caps for the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cap for chromatic number and χ⁻ / χ⁺ search.
    pub search: usize,
    /// Cap for exhaustive enumeration of optimal colourings.
    pub enumerate: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            search: DEFAULT_SEARCH_LIMIT,
            enumerate: DEFAULT_ENUMERATE_LIMIT,
        }
    }
}

impl SearchLimits {
    /// Defaults, with the search cap taken from `SCHULTZ_SEARCH_LIMIT` when
    /// it is set to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = SearchLimits::default();
        if let Some(v) = std::env::var(SEARCH_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.search = v;
        }
        limits
    }

    fn check(limit: usize, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if n > limit {
            Err(Error::TooLarge { n, limit })
        } else {
            Ok(())
        }
    }
}

/// Which end of the colour range is favoured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Minus,
    Plus,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Minus => "minus",
            Direction::Plus => "plus",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(Direction::Minus),
            "plus" => Ok(Direction::Plus),
            _ => Err(Error::BadParams(format!("unknown direction {s:?}"))),
        }
    }
}

/// A total colour assignment `ζ: V → {1..k}` in which every colour is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColouringJson")]
pub struct Colouring {
    zeta: Vec<u32>,
    k: u32,
}

#[derive(Deserialize)]
struct ColouringJson {
    zeta: Vec<u32>,
    k: u32,
}

impl TryFrom<ColouringJson> for Colouring {
    type Error = Error;

    fn try_from(raw: ColouringJson) -> Result<Self> {
        let c = Colouring::new(raw.zeta)?;
        if c.k != raw.k {
            return Err(Error::InvalidColouring(format!(
                "k = {} but the colours used are 1..={}",
                raw.k, c.k
            )));
        }
        Ok(c)
    }
}

impl Colouring {
    /// `k` is taken as the largest colour; every colour `1..=k` must occur.
    pub fn new(zeta: Vec<u32>) -> Result<Colouring> {
        if zeta.contains(&0) {
            return Err(Error::InvalidColouring("colour 0 is not allowed".into()));
        }
        let k = zeta.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k as usize];
        for &c in &zeta {
            used[c as usize - 1] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidColouring(format!(
                "colour {} of 1..={k} is unused",
                missing + 1
            )));
        }
        Ok(Colouring { zeta, k })
    }

    pub fn zeta(&self) -> &[u32] {
        &self.zeta
    }

    pub fn colour_count(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.zeta.len()
    }

    /// `ζ ↦ k + 1 − ζ`.
    pub fn mirrored(&self) -> Colouring {
        Colouring {
            zeta: self.zeta.iter().map(|&c| self.k + 1 - c).collect(),
            k: self.k,
        }
    }
}

/// Class sizes `(θ(c_1), …, θ(c_k))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourClassProfile {
    pub theta: Vec<usize>,
}

pub fn colour_profile(c: &Colouring) -> ColourClassProfile {
    let mut theta = vec![0; c.k as usize];
    for &z in &c.zeta {
        theta[z as usize - 1] += 1;
    }
    ColourClassProfile { theta }
}

pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(first_conflict(g, c)?.is_none())
}

/// The first monochromatic edge, if any.
pub(crate) fn first_conflict(g: &Graph, c: &Colouring) -> Result<Option<(usize, usize)>> {
    if c.vertex_count() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            found: c.vertex_count(),
        });
    }
    Ok(g
        .edges()
        .iter()
        .copied()
        .find(|&(u, v)| c.zeta[u] == c.zeta[v]))
}

/// Backtracking over vertices in a fixed order. Colours `1..=targets.len()`
/// must end with exactly the target counts; the remaining colours up to `k`
/// are interchangeable and are introduced in increasing order.
struct Dfs<'a> {
    g: &'a Graph,
    order: &'a [usize],
    k: usize,
    targets: &'a [usize],
    require_free_used: bool,
    colour: Vec<u32>,
    counts: Vec<usize>,
}

impl<'a> Dfs<'a> {
    fn new(
        g: &'a Graph,
        order: &'a [usize],
        k: usize,
        targets: &'a [usize],
        require_free_used: bool,
    ) -> Self {
        Dfs {
            g,
            order,
            k,
            targets,
            require_free_used,
            colour: vec![0; g.vertex_count()],
            counts: vec![0; k + 1],
        }
    }

    /// Calls `visit` on each solution until it returns `true`; returns
    /// whether the search was stopped.
    fn run(&mut self, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
        self.step(0, 0, visit)
    }

    fn step(&mut self, idx: usize, free_used: usize, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
        let fixed = self.targets.len();
        let mut deficit: usize = self
            .targets
            .iter()
            .enumerate()
            .map(|(i, &t)| t - self.counts[i + 1])
            .sum();
        if self.require_free_used {
            deficit += self.k - fixed - free_used;
        }
        if deficit > self.order.len() - idx {
            return false;
        }
        if idx == self.order.len() {
            return visit(&self.colour);
        }
        let v = self.order[idx];
        let highest = self.k.min(fixed + free_used + 1);
        for c in 1..=highest {
            if c <= fixed && self.counts[c] >= self.targets[c - 1] {
                continue;
            }
            let c32 = c as u32;
            if self.g.neighbours(v).iter().any(|&w| self.colour[w] == c32) {
                continue;
            }
            self.colour[v] = c32;
            self.counts[c] += 1;
            let next_free = if c == fixed + free_used + 1 { free_used + 1 } else { free_used };
            if self.step(idx + 1, next_free, visit) {
                return true;
            }
            self.counts[c] -= 1;
        }
        self.colour[v] = 0;
        false
    }
}

fn greedy_clique_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = 1;
    for seed in 0..n {
        let mut clique = vec![seed];
        for &v in &by_degree {
            if v != seed && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn greedy_colour_count(g: &Graph, order: &[usize]) -> usize {
    let mut colour = vec![0usize; g.vertex_count()];
    let mut used = 0;
    for &v in order {
        let c = (1..)
            .find(|&c| g.neighbours(v).iter().all(|&w| colour[w] != c))
            .expect("some colour is always free");
        colour[v] = c;
        used = used.max(c);
    }
    used
}

fn colourable(g: &Graph, order: &[usize], k: usize) -> bool {
    Dfs::new(g, order, k, &[], false).run(&mut |_| true)
}

fn chromatic_number_unchecked(g: &Graph) -> usize {
    let order = g.bfs_order();
    let lower = greedy_clique_size(g);
    let upper = greedy_colour_count(g, &order);
    (lower..upper)
        .find(|&k| colourable(g, &order, k))
        .unwrap_or(upper)
}

/// Lexicographically maximal class-size vector over proper `k`-colourings
/// that use every colour. Level by level: the largest feasible `θ(c_j)`
/// given the already fixed `θ(c_1..c_{j-1})`.
fn lex_max_profile(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let order = g.bfs_order();
    let mut profile: Vec<usize> = Vec::with_capacity(k);
    for j in 0..k {
        let placed: usize = profile.iter().sum();
        let rest = n - placed;
        let colours_left = k - j;
        // The optimum is non-increasing; the largest remaining class holds at
        // least its share of the rest.
        let upper = profile.last().copied().unwrap_or(n).min(rest - (colours_left - 1));
        let lower = rest.div_ceil(colours_left);
        let theta = (lower..=upper)
            .rev()
            .find(|&t| {
                let mut targets = profile.clone();
                targets.push(t);
                Dfs::new(g, &order, k, &targets, true).run(&mut |_| true)
            })
            .expect("a feasible prefix always extends");
        profile.push(theta);
    }
    profile
}

fn identity_order(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).collect()
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &SearchLimits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    SearchLimits::check(limits.search, g)?;
    Ok(chromatic_number_unchecked(g))
}

pub fn chi_minus_colouring(g: &Graph) -> Result<Colouring> {
    chi_minus_colouring_with(g, &SearchLimits::default())
}

pub fn chi_minus_colouring_with(g: &Graph, limits: &SearchLimits) -> Result<Colouring> {
    SearchLimits::check(limits.search, g)?;
    let k = chromatic_number_unchecked(g);
    let profile = lex_max_profile(g, k);
    let order = identity_order(g);
    let mut found = None;
    Dfs::new(g, &order, k, &profile, false).run(&mut |zeta| {
        found = Some(zeta.to_vec());
        true
    });
    Colouring::new(found.expect("the optimal profile is attained"))
}

pub fn chi_plus_colouring(g: &Graph) -> Result<Colouring> {
    chi_plus_colouring_with(g, &SearchLimits::default())
}

pub fn chi_plus_colouring_with(g: &Graph, limits: &SearchLimits) -> Result<Colouring> {
    Ok(chi_minus_colouring_with(g, limits)?.mirrored())
}

pub fn optimal_colouring_with(g: &Graph, direction: Direction, limits: &SearchLimits) -> Result<Colouring> {
    match direction {
        Direction::Minus => chi_minus_colouring_with(g, limits),
        Direction::Plus => chi_plus_colouring_with(g, limits),
    }
}

/// Every proper χ-colouring attaining the lexicographically maximal
/// profile, in ascending ζ order.
pub fn enumerate_optimal_colourings(g: &Graph) -> Result<Vec<Colouring>> {
    enumerate_optimal_colourings_with(g, &SearchLimits::default())
}

pub fn enumerate_optimal_colourings_with(g: &Graph, limits: &SearchLimits) -> Result<Vec<Colouring>> {
    SearchLimits::check(limits.enumerate, g)?;
    let k = chromatic_number_unchecked(g);
    let profile = lex_max_profile(g, k);
    let order = identity_order(g);
    let mut all = Vec::new();
    Dfs::new(g, &order, k, &profile, false).run(&mut |zeta| {
        all.push(zeta.to_vec());
        false
    });
    all.into_iter().map(Colouring::new).collect()
}

/// The explicit colourings used for the family theorems, built directly.
///
/// Minus: paths and even cycles alternate `1, 2` from vertex 0; odd cycles
/// alternate `1, 2` and give the last vertex colour 3; complete graphs use
/// `1..=n`; complete bipartite graphs give the larger part colour 1.
/// Plus is the mirror image of minus.
pub fn canonical_family_colouring(spec: FamilySpec, direction: Direction) -> Result<Colouring> {
    let spec = spec.validated()?;
    let alternating = |n: usize| -> Vec<u32> { (0..n).map(|i| (i % 2) as u32 + 1).collect() };
    let zeta = match spec {
        FamilySpec::Path { n } => alternating(n),
        FamilySpec::Cycle { n } if n % 2 == 0 => alternating(n),
        FamilySpec::Cycle { n } => {
            let mut z = alternating(n);
            z[n - 1] = 3;
            z
        }
        FamilySpec::Complete { n } => (1..=n as u32).collect(),
        FamilySpec::CompleteBipartite { a, b } => {
            std::iter::repeat_n(1, a).chain(std::iter::repeat_n(2, b)).collect()
        }
    };
    let minus = Colouring::new(zeta)?;
    Ok(match direction {
        Direction::Minus => minus,
        Direction::Plus => minus.mirrored(),
    })
}
