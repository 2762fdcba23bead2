//! Test domains and knot generation.
//!
//! Geometry is built in `f64` and converted to the working scalar with
//! [`KnotSet::cast`], so every precision sees exactly the same knots.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{BkmError, Result};
use crate::point::Point;
use crate::scalar::Real;

/// Coincidence tolerance for boundary knots.
pub const DUPLICATE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BcKind {
    Dirichlet,
    Neumann,
}

impl Default for BcKind {
    fn default() -> Self {
        BcKind::Dirichlet
    }
}

/// Named piece of a domain boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryComponent {
    XMin,
    XMax,
    YMin,
    YMax,
    ZMin,
    ZMax,
    /// Ellipse hole or peanut cavity.
    Hole,
}

/// Boundary condition kind for each boundary component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BcAssignment {
    pub x_min: BcKind,
    pub x_max: BcKind,
    pub y_min: BcKind,
    pub y_max: BcKind,
    pub z_min: BcKind,
    pub z_max: BcKind,
    pub hole: BcKind,
}

impl BcAssignment {
    pub fn all(kind: BcKind) -> Self {
        BcAssignment { x_min: kind, x_max: kind, y_min: kind, y_max: kind, z_min: kind, z_max: kind, hole: kind }
    }

    pub fn kind_of(&self, component: BoundaryComponent) -> BcKind {
        match component {
            BoundaryComponent::XMin => self.x_min,
            BoundaryComponent::XMax => self.x_max,
            BoundaryComponent::YMin => self.y_min,
            BoundaryComponent::YMax => self.y_max,
            BoundaryComponent::ZMin => self.z_min,
            BoundaryComponent::ZMax => self.z_max,
            BoundaryComponent::Hole => self.hole,
        }
    }
}

/// Star-shaped radial profile `R(θ)` of an axisymmetric cavity.
pub trait RadialProfile {
    fn radius(&self, theta: f64) -> f64;
    fn radius_derivative(&self, theta: f64) -> f64;
}

/// `R(θ) = sqrt(cos 2θ + sqrt(c − sin² 2θ))`, with `c = 1.1` by default.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PeanutProfile {
    pub offset: f64,
}

impl Default for PeanutProfile {
    fn default() -> Self {
        PeanutProfile { offset: 1.1 }
    }
}

impl RadialProfile for PeanutProfile {
    fn radius(&self, theta: f64) -> f64 {
        let s2 = (2.0 * theta).sin();
        ((2.0 * theta).cos() + (self.offset - s2 * s2).sqrt()).sqrt()
    }

    fn radius_derivative(&self, theta: f64) -> f64 {
        let (s2, c2) = (2.0 * theta).sin_cos();
        let inner = (self.offset - s2 * s2).sqrt();
        (-2.0 * s2 - 2.0 * s2 * c2 / inner) / (2.0 * self.radius(theta))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DomainSpec {
    #[serde(rename = "rect2d_with_ellipse_hole")]
    Rect2DWithEllipseHole {
        lower: [f64; 2],
        upper: [f64; 2],
        center: [f64; 2],
        semi_axes: [f64; 2],
        #[serde(default)]
        bc: BcAssignment,
    },
    #[serde(rename = "cube3d_with_peanut_cavity")]
    Cube3DWithPeanutCavity {
        lower: [f64; 3],
        upper: [f64; 3],
        center: [f64; 3],
        scale: f64,
        #[serde(default)]
        profile: PeanutProfile,
        #[serde(default)]
        bc: BcAssignment,
    },
    #[serde(rename = "rect2d")]
    Rect2D {
        lower: [f64; 2],
        upper: [f64; 2],
        #[serde(default)]
        bc: BcAssignment,
    },
    #[serde(rename = "cube3d")]
    Cube3D {
        lower: [f64; 3],
        upper: [f64; 3],
        #[serde(default)]
        bc: BcAssignment,
    },
}

impl DomainSpec {
    /// `[0,2]²` with an axis-aligned elliptical hole at `(1,1)`, semi-axes
    /// 0.5 and 0.3, Neumann on the hole.
    pub fn default_2d() -> Self {
        DomainSpec::Rect2DWithEllipseHole {
            lower: [0.0, 0.0],
            upper: [2.0, 2.0],
            center: [1.0, 1.0],
            semi_axes: [0.5, 0.3],
            bc: BcAssignment { hole: BcKind::Neumann, ..BcAssignment::default() },
        }
    }

    /// `[0,2]³` with a peanut cavity at `(1,1,1)` of scale 0.35, Neumann on
    /// the `x = 0` face.
    pub fn default_3d() -> Self {
        DomainSpec::Cube3DWithPeanutCavity {
            lower: [0.0; 3],
            upper: [2.0; 3],
            center: [1.0; 3],
            scale: 0.35,
            profile: PeanutProfile::default(),
            bc: BcAssignment { x_min: BcKind::Neumann, ..BcAssignment::default() },
        }
    }

    pub fn unit_square() -> Self {
        DomainSpec::Rect2D { lower: [0.0, 0.0], upper: [1.0, 1.0], bc: BcAssignment::default() }
    }

    pub fn dim(&self) -> usize {
        match self {
            DomainSpec::Rect2DWithEllipseHole { .. } | DomainSpec::Rect2D { .. } => 2,
            DomainSpec::Cube3DWithPeanutCavity { .. } | DomainSpec::Cube3D { .. } => 3,
        }
    }

    pub fn bc(&self) -> &BcAssignment {
        match self {
            DomainSpec::Rect2DWithEllipseHole { bc, .. }
            | DomainSpec::Cube3DWithPeanutCavity { bc, .. }
            | DomainSpec::Rect2D { bc, .. }
            | DomainSpec::Cube3D { bc, .. } => bc,
        }
    }

    pub fn has_hole(&self) -> bool {
        matches!(self, DomainSpec::Rect2DWithEllipseHole { .. } | DomainSpec::Cube3DWithPeanutCavity { .. })
    }

    fn bounds(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            DomainSpec::Rect2DWithEllipseHole { lower, upper, .. } | DomainSpec::Rect2D { lower, upper, .. } => {
                (lower.to_vec(), upper.to_vec())
            }
            DomainSpec::Cube3DWithPeanutCavity { lower, upper, .. } | DomainSpec::Cube3D { lower, upper, .. } => {
                (lower.to_vec(), upper.to_vec())
            }
        }
    }

    /// Checks extents and that the hole lies strictly inside the outer box.
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.bounds();
        for (a, b) in lo.iter().zip(&hi) {
            if !(a.is_finite() && b.is_finite() && a < b) {
                return Err(BkmError::InvalidParameter(format!("empty or non-finite extent [{a}, {b}]")));
            }
        }
        match self {
            DomainSpec::Rect2DWithEllipseHole { center, semi_axes, .. } => {
                for axis in 0..2 {
                    let (c, r) = (center[axis], semi_axes[axis]);
                    if !(r > 0.0 && c - r > lo[axis] && c + r < hi[axis]) {
                        return Err(BkmError::InvalidParameter("ellipse hole must lie strictly inside the rectangle".into()));
                    }
                }
            }
            DomainSpec::Cube3DWithPeanutCavity { center, scale, profile, .. } => {
                if !(*scale > 0.0 && profile.offset > 1.0) {
                    return Err(BkmError::InvalidParameter("peanut needs scale > 0 and profile offset > 1".into()));
                }
                let reach = scale * max_profile_radius(profile);
                for axis in 0..3 {
                    if !(center[axis] - reach > lo[axis] && center[axis] + reach < hi[axis]) {
                        return Err(BkmError::InvalidParameter("peanut cavity must lie strictly inside the cube".into()));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }
}

fn max_profile_radius(profile: &impl RadialProfile) -> f64 {
    (0..=720).map(|i| profile.radius(PI * i as f64 / 720.0)).fold(0.0, f64::max) * 1.001
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryKnot<T> {
    pub position: Point<T>,
    /// Unit normal pointing out of the solution domain.
    pub normal: Point<T>,
    pub bc_kind: BcKind,
    pub bc_value: T,
    pub component: BoundaryComponent,
}

impl<T: Real> BoundaryKnot<T> {
    pub fn cast<U: Real>(&self) -> BoundaryKnot<U> {
        BoundaryKnot {
            position: Point::from_f64(&self.position.to_f64()),
            normal: Point::from_f64(&self.normal.to_f64()),
            bc_kind: self.bc_kind,
            bc_value: U::lit(self.bc_value.as_f64()),
            component: self.component,
        }
    }
}

/// Boundary, interior and evaluation knots of one problem instance.
///
/// The boundary list is kept in Dirichlet-then-Neumann order.
#[derive(Clone, Debug, PartialEq)]
pub struct KnotSet<T> {
    boundary: Vec<BoundaryKnot<T>>,
    pub interior: Vec<Point<T>>,
    pub evaluation: Vec<Point<T>>,
}

impl<T: Real> KnotSet<T> {
    pub fn new(mut boundary: Vec<BoundaryKnot<T>>, interior: Vec<Point<T>>, evaluation: Vec<Point<T>>) -> Self {
        boundary.sort_by_key(|k| k.bc_kind);
        KnotSet { boundary, interior, evaluation }
    }

    pub fn boundary(&self) -> &[BoundaryKnot<T>] {
        &self.boundary
    }

    /// Mutable access to the prescribed values; positions and kinds stay fixed.
    pub fn set_bc_values(&mut self, mut value: impl FnMut(&BoundaryKnot<T>) -> T) {
        for knot in &mut self.boundary {
            knot.bc_value = value(knot);
        }
    }

    pub fn dirichlet_count(&self) -> usize {
        self.boundary.iter().filter(|k| k.bc_kind == BcKind::Dirichlet).count()
    }

    pub fn neumann_count(&self) -> usize {
        self.boundary.len() - self.dirichlet_count()
    }

    pub fn dim(&self) -> usize {
        self.boundary.first().map(|k| k.position.dim()).unwrap_or(0)
    }

    pub fn cast<U: Real>(&self) -> KnotSet<U> {
        let conv = |p: &Point<T>| Point::from_f64(&p.to_f64());
        KnotSet {
            boundary: self.boundary.iter().map(BoundaryKnot::cast).collect(),
            interior: self.interior.iter().map(conv).collect(),
            evaluation: self.evaluation.iter().map(conv).collect(),
        }
    }
}

/// Point on the peanut surface for local angles `theta ∈ [0, π)`, `phi ∈ [0, 2π)`.
pub fn peanut_surface(theta: f64, phi: f64, scale: f64, center: [f64; 3], profile: &impl RadialProfile) -> Point<f64> {
    let r = scale * profile.radius(theta);
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Point::new3(center[0] + r * ct, center[1] + r * st * cp, center[2] + r * st * sp)
}

/// Unit normal of the peanut surface pointing into the cavity.
pub fn peanut_inward_normal(theta: f64, phi: f64, profile: &impl RadialProfile) -> Point<f64> {
    let r = profile.radius(theta);
    let dr = profile.radius_derivative(theta);
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let radial = Point::new3(ct, st * cp, st * sp);
    let t_theta = Point::new3(dr * ct - r * st, (dr * st + r * ct) * cp, (dr * st + r * ct) * sp);
    let t_phi = Point::new3(0.0, -r * st * sp, r * st * cp);
    let n = match t_theta.cross(&t_phi).normalized() {
        Some(n) if t_theta.cross(&t_phi).norm() > 1e-12 => n,
        // on the axis the surface is locally a cap orthogonal to it
        _ => radial,
    };
    if n.dot(&radial) > 0.0 {
        -n
    } else {
        n
    }
}

/// Splits a total boundary budget into `[outer, hole]` counts.
///
/// In 2-D the split follows perimeter; in 3-D the outer faces receive the
/// largest `6k²` not exceeding 80% of the budget and the cavity the rest.
pub fn split_boundary_count(domain: &DomainSpec, total: usize) -> Result<Vec<usize>> {
    let too_few = || BkmError::InvalidParameter(format!("{total} boundary knots is too few for this domain"));
    match domain {
        DomainSpec::Rect2D { .. } => {
            if total < 4 {
                return Err(too_few());
            }
            Ok(vec![total])
        }
        DomainSpec::Cube3D { .. } => {
            let k = ((total / 6) as f64).sqrt().round() as usize;
            if k == 0 || 6 * k * k != total {
                return Err(BkmError::InvalidParameter(format!("cube boundary needs 6k² knots, got {total}")));
            }
            Ok(vec![total])
        }
        DomainSpec::Rect2DWithEllipseHole { lower, upper, semi_axes, .. } => {
            if total < 8 {
                return Err(too_few());
            }
            let outer_perimeter = 2.0 * (upper[0] - lower[0] + upper[1] - lower[1]);
            let hole_perimeter = ellipse_perimeter(semi_axes[0], semi_axes[1]);
            let outer = (total as f64 * outer_perimeter / (outer_perimeter + hole_perimeter)).round() as usize;
            let outer = outer.clamp(4, total - 4);
            Ok(vec![outer, total - outer])
        }
        DomainSpec::Cube3DWithPeanutCavity { .. } => {
            let k = (0.8 * total as f64 / 6.0).sqrt().floor() as usize;
            if k == 0 || total < 6 * k * k + 4 {
                return Err(too_few());
            }
            Ok(vec![6 * k * k, total - 6 * k * k])
        }
    }
}

fn ellipse_perimeter(a: f64, b: f64) -> f64 {
    PI * (3.0 * (a + b) - ((3.0 * a + b) * (a + 3.0 * b)).sqrt())
}

/// Generates boundary knots with per-component counts as produced by
/// [`split_boundary_count`]. Values are left at zero.
pub fn boundary_knots(domain: &DomainSpec, counts: &[usize], seed: u64) -> Result<Vec<BoundaryKnot<f64>>> {
    domain.validate()?;
    let expected = if domain.has_hole() { 2 } else { 1 };
    if counts.len() != expected {
        return Err(BkmError::DimensionMismatch { expected, found: counts.len() });
    }
    if let Some(&c) = counts.iter().find(|&&c| c < 4) {
        return Err(BkmError::InvalidParameter(format!("each boundary component needs at least 4 knots, got {c}")));
    }
    let bc = domain.bc();
    let mut knots = Vec::with_capacity(counts.iter().sum());
    match domain {
        DomainSpec::Rect2D { lower, upper, .. } => rectangle_knots(*lower, *upper, counts[0], bc, &mut knots),
        DomainSpec::Rect2DWithEllipseHole { lower, upper, center, semi_axes, .. } => {
            rectangle_knots(*lower, *upper, counts[0], bc, &mut knots);
            ellipse_knots(*center, *semi_axes, counts[1], bc.hole, &mut knots);
        }
        DomainSpec::Cube3D { lower, upper, .. } => cube_knots(*lower, *upper, counts[0], bc, &mut knots)?,
        DomainSpec::Cube3DWithPeanutCavity { lower, upper, center, scale, profile, .. } => {
            cube_knots(*lower, *upper, counts[0], bc, &mut knots)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..counts[1] {
                let theta = rng.gen_range(0.0..PI);
                let phi = rng.gen_range(0.0..2.0 * PI);
                knots.push(BoundaryKnot {
                    position: peanut_surface(theta, phi, *scale, *center, profile),
                    normal: peanut_inward_normal(theta, phi, profile),
                    bc_kind: bc.hole,
                    bc_value: 0.0,
                    component: BoundaryComponent::Hole,
                });
            }
        }
    }
    check_distinct(knots.iter().map(|k| &k.position))?;
    Ok(knots)
}

/// Fails with [`BkmError::DuplicateKnot`] if two points coincide.
pub fn check_distinct<'a, T: Real>(points: impl IntoIterator<Item = &'a Point<T>>) -> Result<()> {
    let points: Vec<&Point<T>> = points.into_iter().collect();
    let tol = T::lit(DUPLICATE_TOLERANCE);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].distance(points[j]) <= tol {
                return Err(BkmError::DuplicateKnot { first: i, second: j });
            }
        }
    }
    Ok(())
}

/// Splits `count` over weights by the largest-remainder rule.
fn apportion(count: usize, weights: &[f64]) -> Vec<usize> {
    let total: f64 = weights.iter().sum();
    let quotas: Vec<f64> = weights.iter().map(|w| count as f64 * w / total).collect();
    let mut shares: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| (quotas[b] - quotas[b].floor()).total_cmp(&(quotas[a] - quotas[a].floor())).then(a.cmp(&b)));
    let missing = count - shares.iter().sum::<usize>();
    for &i in order.iter().take(missing) {
        shares[i] += 1;
    }
    shares
}

fn rectangle_knots(lower: [f64; 2], upper: [f64; 2], count: usize, bc: &BcAssignment, out: &mut Vec<BoundaryKnot<f64>>) {
    let (w, h) = (upper[0] - lower[0], upper[1] - lower[1]);
    // counterclockwise from the lower-left corner: (start, direction, outward normal, component)
    let edges = [
        ([lower[0], lower[1]], [w, 0.0], [0.0, -1.0], BoundaryComponent::YMin),
        ([upper[0], lower[1]], [0.0, h], [1.0, 0.0], BoundaryComponent::XMax),
        ([upper[0], upper[1]], [-w, 0.0], [0.0, 1.0], BoundaryComponent::YMax),
        ([lower[0], upper[1]], [0.0, -h], [-1.0, 0.0], BoundaryComponent::XMin),
    ];
    let shares = apportion(count, &[w, h, w, h]);
    for ((start, dir, normal, component), n) in edges.into_iter().zip(shares) {
        for i in 0..n {
            let s = (i as f64 + 0.5) / n as f64;
            out.push(BoundaryKnot {
                position: Point::new2(start[0] + s * dir[0], start[1] + s * dir[1]),
                normal: Point::new2(normal[0], normal[1]),
                bc_kind: bc.kind_of(component),
                bc_value: 0.0,
                component,
            });
        }
    }
}

fn ellipse_knots(center: [f64; 2], semi_axes: [f64; 2], count: usize, kind: BcKind, out: &mut Vec<BoundaryKnot<f64>>) {
    let [a, b] = semi_axes;
    for i in 0..count {
        let t = 2.0 * PI * i as f64 / count as f64;
        let (s, c) = t.sin_cos();
        let outward = Point::new2(c / a, s / b).normalized().expect("nonzero ellipse gradient");
        out.push(BoundaryKnot {
            position: Point::new2(center[0] + a * c, center[1] + b * s),
            normal: -outward,
            bc_kind: kind,
            bc_value: 0.0,
            component: BoundaryComponent::Hole,
        });
    }
}

fn cube_knots(lower: [f64; 3], upper: [f64; 3], count: usize, bc: &BcAssignment, out: &mut Vec<BoundaryKnot<f64>>) -> Result<()> {
    let k = ((count / 6) as f64).sqrt().round() as usize;
    if k == 0 || 6 * k * k != count {
        return Err(BkmError::InvalidParameter(format!("cube boundary needs 6k² knots, got {count}")));
    }
    let faces = [
        (0, false, BoundaryComponent::XMin),
        (0, true, BoundaryComponent::XMax),
        (1, false, BoundaryComponent::YMin),
        (1, true, BoundaryComponent::YMax),
        (2, false, BoundaryComponent::ZMin),
        (2, true, BoundaryComponent::ZMax),
    ];
    for (axis, upper_face, component) in faces {
        let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
        let mut normal = [0.0; 3];
        normal[axis] = if upper_face { 1.0 } else { -1.0 };
        for i in 0..k {
            for j in 0..k {
                let mut p = [0.0; 3];
                p[axis] = if upper_face { upper[axis] } else { lower[axis] };
                p[u] = lower[u] + (upper[u] - lower[u]) * (i as f64 + 0.5) / k as f64;
                p[v] = lower[v] + (upper[v] - lower[v]) * (j as f64 + 0.5) / k as f64;
                out.push(BoundaryKnot {
                    position: Point::new3(p[0], p[1], p[2]),
                    normal: Point::new3(normal[0], normal[1], normal[2]),
                    bc_kind: bc.kind_of(component),
                    bc_value: 0.0,
                    component,
                });
            }
        }
    }
    Ok(())
}

/// True iff `p` lies strictly inside the outer shape and strictly outside
/// the hole or cavity.
pub fn point_in_domain(domain: &DomainSpec, p: &Point<f64>) -> bool {
    let (lo, hi) = domain.bounds();
    if p.dim() != lo.len() || !p.is_finite() {
        return false;
    }
    if p.coords().iter().zip(lo.iter().zip(&hi)).any(|(x, (a, b))| x <= a || x >= b) {
        return false;
    }
    match domain {
        DomainSpec::Rect2DWithEllipseHole { center, semi_axes, .. } => {
            let u = (p.x() - center[0]) / semi_axes[0];
            let v = (p.y() - center[1]) / semi_axes[1];
            u * u + v * v > 1.0
        }
        DomainSpec::Cube3DWithPeanutCavity { center, scale, profile, .. } => {
            let d = *p - Point::new3(center[0], center[1], center[2]);
            let rho = d.norm();
            if rho == 0.0 {
                return false;
            }
            let theta = (d.x() / rho).clamp(-1.0, 1.0).acos();
            rho > scale * profile.radius(theta)
        }
        _ => true,
    }
}

/// Deterministic interior points from a filtered cell-centred grid.
pub fn interior_knots(domain: &DomainSpec, count: usize) -> Result<Vec<Point<f64>>> {
    grid_points(domain, count)
}

/// Same construction as [`interior_knots`]; kept separate so the two sets
/// can diverge without touching callers.
pub fn evaluation_knots(domain: &DomainSpec, count: usize) -> Result<Vec<Point<f64>>> {
    grid_points(domain, count)
}

fn grid_points(domain: &DomainSpec, count: usize) -> Result<Vec<Point<f64>>> {
    domain.validate()?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let dim = domain.dim();
    let (lo, hi) = domain.bounds();
    let max_k = if dim == 2 { 2048 } else { 160 };
    let mut k = ((count as f64).powf(1.0 / dim as f64).ceil() as usize).max(2);
    let mut available = 0;
    while k <= max_k {
        let cell = |axis: usize, i: usize| lo[axis] + (hi[axis] - lo[axis]) * (i as f64 + 0.5) / k as f64;
        let mut pts = Vec::new();
        if dim == 2 {
            for j in 0..k {
                for i in 0..k {
                    pts.push(Point::new2(cell(0, i), cell(1, j)));
                }
            }
        } else {
            for l in 0..k {
                for j in 0..k {
                    for i in 0..k {
                        pts.push(Point::new3(cell(0, i), cell(1, j), cell(2, l)));
                    }
                }
            }
        }
        pts.retain(|p| point_in_domain(domain, p));
        available = pts.len();
        if pts.len() >= count {
            let len = pts.len();
            return Ok((0..count).map(|i| pts[i * len / count]).collect());
        }
        k += 1;
    }
    Err(BkmError::InsufficientPoints { requested: count, available })
}
