//! Finite-difference Schrödinger eigensolver used as ground truth.
//!
//! `H = −½ d²/dx² + V(x)` on `[−L, L]` with Dirichlet ends and three-point
//! central differences on an odd number of nodes (x = 0 is a node). For
//! even potentials the matrix commutes with reflection and splits exactly
//! into an even and an odd block; both blocks are solved and their levels
//! merged, which keeps near-degenerate double-well doublets apart. Each run
//! repeats the solve on a grid with twice the spacing to estimate the
//! discretization error.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::{PI, SQRT_2};

use libm::sqrt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SymTridiagonal;
use crate::potential::EvenPolynomialPotential;
use crate::table::{EnergyTable, Parity, Provenance};

/// Anything that can be sampled on the grid.
pub trait Potential {
    fn value(&self, x: f64) -> f64;

    /// `true` only when `V(x) == V(−x)` holds on every symmetric grid.
    fn is_even(&self) -> bool {
        false
    }
}

impl Potential for EvenPolynomialPotential {
    fn value(&self, x: f64) -> f64 {
        self.evaluate(x)
    }

    fn is_even(&self) -> bool {
        true
    }
}

impl<P: Potential + ?Sized> Potential for &P {
    fn value(&self, x: f64) -> f64 {
        (**self).value(x)
    }

    fn is_even(&self) -> bool {
        (**self).is_even()
    }
}

/// A closure-backed potential.
pub struct FnPotential<F> {
    f: F,
    even: bool,
}

impl<F: Fn(f64) -> f64> FnPotential<F> {
    pub fn new(f: F) -> Self {
        Self { f, even: false }
    }

    /// Declares the closure reflection-symmetric.
    pub fn even(f: F) -> Self {
        Self { f, even: true }
    }
}

impl<F: Fn(f64) -> f64> Potential for FnPotential<F> {
    fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    fn is_even(&self) -> bool {
        self.even
    }
}

/// Tabulated `(x, V)` pairs with linear interpolation; constant outside the
/// table.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    xs: Vec<f64>,
    vs: Vec<f64>,
    even: bool,
}

impl Tabulated {
    pub fn new(xs: Vec<f64>, vs: Vec<f64>) -> Result<Self> {
        if xs.len() != vs.len() {
            return Err(Error::InvalidTable("x and V columns differ in length"));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidTable("need at least two rows"));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidTable("x must be strictly increasing"));
        }
        if xs.iter().chain(&vs).any(|v| !v.is_finite()) {
            return Err(Error::InvalidTable("non-finite entry"));
        }
        let n = xs.len();
        let scale = xs[n - 1].abs().max(xs[0].abs());
        let even = (0..n).all(|i| {
            let j = n - 1 - i;
            (xs[i] + xs[j]).abs() <= 1e-12 * scale && vs[i] == vs[j]
        });
        Ok(Self { xs, vs, even })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

impl Potential for Tabulated {
    fn value(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.vs[0];
        }
        if x >= self.xs[n - 1] {
            return self.vs[n - 1];
        }
        let i = self.xs.partition_point(|&xi| xi <= x) - 1;
        let t = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        self.vs[i] + t * (self.vs[i + 1] - self.vs[i])
    }

    fn is_even(&self) -> bool {
        self.even
    }
}

/// Default bound on the eigenvector mass in the outer tail region.
pub const DEFAULT_TAIL_MASS_LIMIT: f64 = 1e-8;
/// The tail region is `|x| > (1 − fraction)·L`.
pub const DEFAULT_TAIL_FRACTION: f64 = 0.1;
/// Relative convergence estimate above which a level is flagged.
pub const DEFAULT_CONVERGENCE_TOLERANCE: f64 = 5e-3;
/// Grid points per shortest local de Broglie wavelength chosen by
/// [`default_grid_for`].
pub const DEFAULT_POINTS_PER_WAVELENGTH: f64 = 100.0;
/// Energy headroom above the highest requested level used to size the box.
pub const ENERGY_HEADROOM: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct GridSpec {
    pub half_width: f64,
    /// Total nodes including the two Dirichlet ends; odd.
    pub points: usize,
    pub count: usize,
    pub tail_mass_limit: f64,
    pub tail_fraction: f64,
    pub convergence_tolerance: f64,
}

impl GridSpec {
    pub fn new(half_width: f64, points: usize, count: usize) -> Result<Self> {
        let spec = Self {
            half_width,
            points,
            count,
            tail_mass_limit: DEFAULT_TAIL_MASS_LIMIT,
            tail_fraction: DEFAULT_TAIL_FRACTION,
            convergence_tolerance: DEFAULT_CONVERGENCE_TOLERANCE,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.half_width > 0.0 && self.half_width.is_finite()) {
            return Err(Error::InvalidGrid("half-width must be positive"));
        }
        if self.points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(
                "point count must be odd so that x = 0 is a node",
            ));
        }
        if self.points < 101 {
            return Err(Error::InvalidGrid("need at least 101 points"));
        }
        if self.count == 0 || self.count * 4 >= self.points {
            return Err(Error::InvalidGrid(
                "level count must satisfy 0 < count < points/4",
            ));
        }
        if !(self.tail_fraction > 0.0 && self.tail_fraction < 1.0) {
            return Err(Error::InvalidGrid("tail fraction must lie in (0, 1)"));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        nodes(self.half_width, self.points)
    }

    /// Grid with (about) twice the spacing, still odd and centred.
    pub fn coarsened(&self) -> usize {
        ((self.points - 1) / 4) * 2 + 1
    }
}

fn nodes(half_width: f64, points: usize) -> Vec<f64> {
    let centre = (points - 1) / 2;
    let h = 2.0 * half_width / (points - 1) as f64;
    (0..points)
        .map(|i| (i as f64 - centre as f64) * h)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct OracleResult {
    /// Non-decreasing; exact doublets may coincide.
    pub energies: Vec<f64>,
    pub parities: Vec<Parity>,
    /// `|E(M) − E(coarse)|` per level.
    pub convergence_estimate: Vec<f64>,
    pub converged: Vec<bool>,
    pub tail_mass: Vec<f64>,
    pub grid: GridSpec,
}

impl OracleResult {
    /// Lowest `count` levels of one parity.
    pub fn of_parity(&self, parity: Parity) -> Vec<f64> {
        self.energies
            .iter()
            .zip(&self.parities)
            .filter(|(_, &p)| p == parity)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Convergence estimates of the levels returned by [`Self::of_parity`].
    pub fn estimates_of_parity(&self, parity: Parity) -> Vec<f64> {
        self.convergence_estimate
            .iter()
            .zip(&self.parities)
            .filter(|(_, &p)| p == parity)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn to_table(&self) -> EnergyTable {
        let mut t = EnergyTable::new("grid oracle");
        for (i, (&e, &p)) in self.energies.iter().zip(&self.parities).enumerate() {
            t.push(i as u32, p, e, Provenance::GridOracle);
        }
        t
    }
}

struct Level {
    energy: f64,
    parity: Parity,
    vector: Option<Vec<f64>>,
}

/// Lowest `count` levels of a sector (or of the full grid when `sector` is
/// `None`), optionally with normalized full-grid eigenvectors.
fn solve_block<P: Potential + ?Sized>(
    pot: &P,
    half_width: f64,
    points: usize,
    count: usize,
    sector: Option<Parity>,
    vectors: bool,
) -> Vec<Level> {
    let h = 2.0 * half_width / (points - 1) as f64;
    let kinetic = 1.0 / (h * h);
    let centre = (points - 1) / 2;
    let xs = nodes(half_width, points);

    // interior nodes of the block, as indices into `xs`
    let idx: Vec<usize> = match sector {
        Some(Parity::Even) => (centre..points - 1).collect(),
        Some(Parity::Odd) => (centre + 1..points - 1).collect(),
        None => (1..points - 1).collect(),
    };
    let diag: Vec<f64> = idx.iter().map(|&i| kinetic + pot.value(xs[i])).collect();
    let mut off = vec![-0.5 * kinetic; idx.len() - 1];
    if sector == Some(Parity::Even) {
        // ψ(−h) = ψ(h) doubles the coupling out of x = 0; symmetrized.
        off[0] = -kinetic / SQRT_2;
    }
    let t = SymTridiagonal::new(diag, off);
    t.lowest_eigenvalues(count)
        .into_iter()
        .map(|energy| {
            let vector = vectors.then(|| {
                let phi = t.eigenvector(energy);
                let mut psi = vec![0.0; points];
                for (m, &i) in idx.iter().enumerate() {
                    psi[i] = phi[m];
                }
                match sector {
                    Some(Parity::Even) => {
                        psi[centre] *= SQRT_2;
                        for m in 1..centre {
                            psi[centre - m] = psi[centre + m];
                        }
                    }
                    Some(Parity::Odd) => {
                        for m in 1..centre {
                            psi[centre - m] = -psi[centre + m];
                        }
                    }
                    None => {}
                }
                let norm = sqrt(psi.iter().map(|v| v * v).sum::<f64>());
                psi.iter_mut().for_each(|v| *v /= norm);
                psi
            });
            Level {
                energy,
                parity: sector.unwrap_or(Parity::Even),
                vector,
            }
        })
        .collect()
}

/// Levels of both sectors (even potential) or of the full grid, merged in
/// ascending energy, with the per-level coarse-grid partner energy.
fn solve_all<P: Potential + ?Sized>(
    pot: &P,
    grid: &GridSpec,
    points: usize,
    vectors: bool,
) -> Vec<Level> {
    let mut levels = if pot.is_even() {
        let mut even = solve_block(
            pot,
            grid.half_width,
            points,
            grid.count,
            Some(Parity::Even),
            vectors,
        );
        even.extend(solve_block(
            pot,
            grid.half_width,
            points,
            grid.count,
            Some(Parity::Odd),
            vectors,
        ));
        even
    } else {
        solve_block(pot, grid.half_width, points, grid.count, None, vectors)
    };
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy).then(a.parity.cmp(&b.parity)));
    levels.truncate(grid.count);
    levels
}

/// Lowest `grid.count` eigenvalues of the discretized Hamiltonian.
pub fn grid_spectrum<P: Potential + ?Sized>(pot: &P, grid: &GridSpec) -> Result<OracleResult> {
    grid.validate()?;
    let xs = grid.nodes();
    let fine = solve_all(pot, grid, grid.points, true);
    let coarse_grid = GridSpec {
        points: grid.coarsened(),
        ..*grid
    };
    let coarse = if coarse_grid.validate().is_ok() {
        Some(solve_all(pot, &coarse_grid, coarse_grid.points, false))
    } else {
        None
    };

    let tail_start = (1.0 - grid.tail_fraction) * grid.half_width;
    let mut result = OracleResult {
        energies: Vec::with_capacity(fine.len()),
        parities: Vec::with_capacity(fine.len()),
        convergence_estimate: Vec::with_capacity(fine.len()),
        converged: Vec::with_capacity(fine.len()),
        tail_mass: Vec::with_capacity(fine.len()),
        grid: *grid,
    };
    // per-parity ordinal, to pair fine and coarse levels sector by sector
    let mut seen = [0usize; 2];
    for (level_index, level) in fine.iter().enumerate() {
        let psi = level.vector.as_ref().expect("fine solve keeps vectors");
        let parity = classify_parity(&xs, psi)?;
        let tail: f64 = xs
            .iter()
            .zip(psi)
            .filter(|(x, _)| x.abs() > tail_start)
            .map(|(_, v)| v * v)
            .sum();
        if tail > grid.tail_mass_limit {
            return Err(Error::DomainTooSmall {
                level: level_index,
                mass: tail,
                limit: grid.tail_mass_limit,
                suggested_half_width: 1.5 * grid.half_width,
            });
        }
        let partner = coarse.as_ref().and_then(|c| {
            if pot.is_even() {
                let slot = level.parity.r() as usize;
                c.iter()
                    .filter(|l| l.parity == level.parity)
                    .nth(seen[slot])
            } else {
                c.get(level_index)
            }
        });
        seen[level.parity.r() as usize] += 1;
        let estimate = partner.map_or(f64::INFINITY, |c| (level.energy - c.energy).abs());
        result.energies.push(level.energy);
        result
            .parities
            .push(if pot.is_even() { level.parity } else { parity });
        result.convergence_estimate.push(estimate);
        result
            .converged
            .push(estimate <= grid.convergence_tolerance * level.energy.abs().max(1.0));
        result.tail_mass.push(tail);
    }
    Ok(result)
}

/// Parity of a grid function on a grid symmetric about zero.
///
/// Compares `ψ(x)` with `ψ(−x)` weighted by amplitude; when that overlap is
/// inconclusive the number of sign changes decides.
pub fn classify_parity(xs: &[f64], psi: &[f64]) -> Result<Parity> {
    let n = xs.len();
    if n != psi.len() || n.is_multiple_of(2) || n == 0 {
        return Err(Error::AsymmetricGrid);
    }
    let scale = xs
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    if (0..n).any(|i| (xs[i] + xs[n - 1 - i]).abs() > 1e-9 * scale) {
        return Err(Error::AsymmetricGrid);
    }
    let norm: f64 = psi.iter().map(|v| v * v).sum();
    let overlap: f64 = (0..n).map(|i| psi[i] * psi[n - 1 - i]).sum::<f64>() / norm;
    if overlap > 1e-6 {
        return Ok(Parity::Even);
    }
    if overlap < -1e-6 {
        return Ok(Parity::Odd);
    }
    let peak = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let significant: Vec<f64> = psi
        .iter()
        .copied()
        .filter(|v| v.abs() > 1e-8 * peak)
        .collect();
    let nodes = significant
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count();
    Ok(Parity::from_r(nodes as u32))
}

/// Chooses a box and resolution for the lowest `count` levels of a
/// confining even polynomial.
///
/// The highest requested level is estimated semiclassically
/// (`∮p dx = 2π(count − ½)`). L covers the turning point of that energy plus
/// [`ENERGY_HEADROOM`] and at least 23 e-folds of WKB decay past the
/// level's own turning point, then is enlarged so that this region ends
/// where the tail check starts. The spacing puts
/// [`DEFAULT_POINTS_PER_WAVELENGTH`] nodes on the shortest local wavelength.
pub fn default_grid_for(pot: &EvenPolynomialPotential, count: usize) -> Result<GridSpec> {
    match pot.leading() {
        Some((p, c)) if c > 0.0 && p >= 2 => {}
        _ => return Err(Error::UnboundedBelow),
    }
    if count == 0 {
        return Err(Error::InvalidGrid("level count must be positive"));
    }
    let reach = monotone_radius(pot);
    let v_floor = (0..=4000)
        .map(|i| pot.evaluate(reach * i as f64 / 4000.0))
        .fold(f64::INFINITY, f64::min);

    let target = count as f64 - 0.5;
    let mut hi = v_floor + 1.0;
    while action(pot, hi, reach) < target {
        hi = v_floor + 2.0 * (hi - v_floor);
    }
    let (mut lo, mut e_max) = (v_floor, hi);
    for _ in 0..100 {
        let mid = 0.5 * (lo + e_max);
        if action(pot, mid, reach) < target {
            lo = mid;
        } else {
            e_max = mid;
        }
    }

    let e_top = e_max + ENERGY_HEADROOM;
    let l_energy = turning_point(pot, e_top, reach);
    let x_turn = turning_point(pot, e_max, reach);
    let decay_target = 23.03; // ln 1e10
    let mut l_decay = x_turn;
    let mut decay = 0.0;
    let step = (x_turn.max(1e-3)) * 1e-3;
    while decay < decay_target {
        let mid = l_decay + 0.5 * step;
        decay += sqrt((2.0 * (pot.evaluate(mid) - e_max)).max(0.0)) * step;
        l_decay += step;
    }
    let half_width = l_energy.max(l_decay) / (1.0 - DEFAULT_TAIL_FRACTION);

    let k_max = sqrt(2.0 * (e_top - v_floor));
    let h = 2.0 * PI / k_max / DEFAULT_POINTS_PER_WAVELENGTH;
    let mut points = 2 * libm::ceil(half_width / h) as usize + 1;
    // keep (points − 1)/2 even so the coarse grid is an exact 2h subgrid
    if !(points - 1).is_multiple_of(4) {
        points += 2;
    }
    points = points.max(101).max(4 * count + 5);
    if !(points - 1).is_multiple_of(4) {
        points += 2;
    }
    GridSpec::new(half_width, points, count)
}

/// Radius beyond which V is increasing (bound on the critical points).
fn monotone_radius(pot: &EvenPolynomialPotential) -> f64 {
    let (lead_p, lead_c) = pot.leading().expect("checked by caller");
    let bound = pot
        .coeffs
        .iter()
        .filter(|(&p, _)| p < lead_p)
        .map(|(&p, &c)| (p as f64 * c).abs() / (lead_p as f64 * lead_c))
        .fold(0.0f64, f64::max);
    1.0 + bound
}

/// Outermost x with V(x) = e.
fn turning_point(pot: &EvenPolynomialPotential, e: f64, reach: f64) -> f64 {
    let mut hi = reach.max(1e-3);
    while pot.evaluate(hi) < e {
        hi *= 2.0;
    }
    // last crossing: scan inward from `hi` for the outermost allowed point
    let samples = 4000;
    let mut lo = 0.0;
    for i in (0..samples).rev() {
        let x = hi * i as f64 / samples as f64;
        if pot.evaluate(x) <= e {
            lo = x;
            break;
        }
    }
    let mut hi_b = lo + hi / samples as f64;
    let mut lo_b = lo;
    for _ in 0..100 {
        let mid = 0.5 * (lo_b + hi_b);
        if pot.evaluate(mid) <= e {
            lo_b = mid;
        } else {
            hi_b = mid;
        }
    }
    0.5 * (lo_b + hi_b)
}

/// `(1/π)∫ √(2(E − V))₊ dx` over the whole line.
fn action(pot: &EvenPolynomialPotential, e: f64, reach: f64) -> f64 {
    let x_max = turning_point(pot, e, reach);
    let samples = 4000;
    let h = x_max / samples as f64;
    let half: f64 = (0..samples)
        .map(|i| {
            let x = (i as f64 + 0.5) * h;
            sqrt((2.0 * (e - pot.evaluate(x))).max(0.0))
        })
        .sum::<f64>()
        * h;
    2.0 * half / PI
}
