//! Meridian geometry of a compound shell of revolution.
//!
//! The shell is generated by rotating a planar chain of line and circular-arc
//! segments in the (r, z) half-plane about the z axis. The chain starts at
//! the bottom pole (r = 0) and proceeds upward; the liquid occupies the
//! region to the left of the oriented chain, so the outward normal (out of
//! the liquid) is the tangent rotated by -90 degrees. The liquid is bounded
//! by the wetted part of the chain, the planar free surface at the fill
//! level, and the axis of revolution (which carries no boundary condition).

use thiserror::Error;

/// Chain connectivity snap tolerance for user input, in meters.
pub const SNAP_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("segment {index} does not start where segment {} ends (gap {gap:.3e} m)", index - 1)]
    Disconnected { index: usize, gap: f64 },
    #[error("chain must start on the axis of revolution (r = 0), got r = {0:.3e}")]
    NotAtAxis(f64),
    #[error("segment {index}: {reason}")]
    BadSegment { index: usize, reason: String },
    #[error("meridian must contain at least one segment")]
    Empty,
    #[error("fill level {fill} is at or below the shell bottom (z = {bottom})")]
    FillBelowBottom { fill: f64, bottom: f64 },
    #[error("fill level {fill} never crosses the shell wall (top rim z = {top})")]
    FillAboveTop { fill: f64, top: f64 },
    #[error("free surface is degenerate: fill level {fill} meets the shell at r = {r:.3e}")]
    DegenerateSurface { fill: f64, r: f64 },
    #[error("negative radial coordinate r = {0:.3e} off the axis")]
    NegativeRadius(f64),
}

/// A point of the meridian half-plane; r >= 0 always.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeridianPoint {
    pub r: f64,
    pub z: f64,
}

impl MeridianPoint {
    pub fn new(r: f64, z: f64) -> Self {
        Self { r, z }
    }

    pub fn dist(&self, other: &MeridianPoint) -> f64 {
        ((self.r - other.r).powi(2) + (self.z - other.z).powi(2)).sqrt()
    }
}

/// Local differential data of the shell surface along the meridian.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceFrame {
    pub point: MeridianPoint,
    /// Unit tangent along increasing arclength.
    pub tangent: [f64; 2],
    /// Unit outward normal (out of the liquid domain).
    pub normal: [f64; 2],
    /// Angle between the outward normal and the +z axis; cos(theta) = n_z.
    pub theta: f64,
    /// Signed curvature kappa_n such that n . (M' - M)/|M' - M|^2 -> kappa_n/2
    /// along the curve; zero on lines, -(n.u)/R on arcs (u from center to point).
    pub normal_curvature: f64,
}

/// Underlying curve of a segment or sub-segment, parameterized by a fraction
/// s in [0, 1] proportional to arclength.
#[derive(Debug, Clone, Copy)]
pub enum CurveGeom {
    Line { p0: MeridianPoint, p1: MeridianPoint },
    /// Circular arc: center, radius, start angle, signed sweep.
    Arc { center: MeridianPoint, radius: f64, a0: f64, sweep: f64 },
}

impl CurveGeom {
    pub fn length(&self) -> f64 {
        match *self {
            CurveGeom::Line { p0, p1 } => p0.dist(&p1),
            CurveGeom::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    pub fn point(&self, s: f64) -> MeridianPoint {
        match *self {
            CurveGeom::Line { p0, p1 } => MeridianPoint {
                r: p0.r + s * (p1.r - p0.r),
                z: p0.z + s * (p1.z - p0.z),
            },
            CurveGeom::Arc { center, radius, a0, sweep } => {
                let a = a0 + s * sweep;
                MeridianPoint { r: center.r + radius * a.cos(), z: center.z + radius * a.sin() }
            }
        }
    }

    pub fn tangent(&self, s: f64) -> [f64; 2] {
        match *self {
            CurveGeom::Line { p0, p1 } => {
                let len = p0.dist(&p1);
                [(p1.r - p0.r) / len, (p1.z - p0.z) / len]
            }
            CurveGeom::Arc { a0, sweep, .. } => {
                let a = a0 + s * sweep;
                let sgn = sweep.signum();
                [-a.sin() * sgn, a.cos() * sgn]
            }
        }
    }

    pub fn frame(&self, s: f64) -> SurfaceFrame {
        let point = self.point(s);
        let tangent = self.tangent(s);
        let normal = [tangent[1], -tangent[0]];
        let theta = normal[0].atan2(normal[1]).rem_euclid(2.0 * std::f64::consts::PI);
        let normal_curvature = match *self {
            CurveGeom::Line { .. } => 0.0,
            CurveGeom::Arc { center, radius, .. } => {
                let u = [(point.r - center.r) / radius, (point.z - center.z) / radius];
                -(normal[0] * u[0] + normal[1] * u[1]) / radius
            }
        };
        SurfaceFrame { point, tangent, normal, theta, normal_curvature }
    }

    /// Restriction to the fraction range [s0, s1].
    pub fn subcurve(&self, s0: f64, s1: f64) -> CurveGeom {
        match *self {
            CurveGeom::Line { .. } => CurveGeom::Line { p0: self.point(s0), p1: self.point(s1) },
            CurveGeom::Arc { center, radius, a0, sweep } => CurveGeom::Arc {
                center,
                radius,
                a0: a0 + s0 * sweep,
                sweep: (s1 - s0) * sweep,
            },
        }
    }

    /// Smallest s in (0, 1] where z(s) crosses `level` going upward, if any.
    fn upward_crossing(&self, level: f64) -> Option<f64> {
        match *self {
            CurveGeom::Line { p0, p1 } => {
                if p1.z <= p0.z || p1.z < level || p0.z > level {
                    return None;
                }
                let s = (level - p0.z) / (p1.z - p0.z);
                (s > 0.0).then_some(s.min(1.0))
            }
            CurveGeom::Arc { center, radius, a0, sweep } => {
                // march in angle; arcs here are short (< 2 pi), a fine scan
                // bracketing plus bisection is robust for every shape
                let n = 512;
                let mut prev = self.point(0.0).z;
                for i in 1..=n {
                    let s = i as f64 / n as f64;
                    let cur = self.point(s).z;
                    if prev < level && cur >= level {
                        let (mut lo, mut hi) = ((i - 1) as f64 / n as f64, s);
                        for _ in 0..80 {
                            let mid = 0.5 * (lo + hi);
                            if self.point(mid).z >= level {
                                hi = mid;
                            } else {
                                lo = mid;
                            }
                        }
                        let _ = (center, radius, a0, sweep);
                        return Some(0.5 * (lo + hi));
                    }
                    prev = cur;
                }
                None
            }
        }
    }

    fn min_r(&self) -> f64 {
        match *self {
            CurveGeom::Line { p0, p1 } => p0.r.min(p1.r),
            CurveGeom::Arc { .. } => {
                (0..=64)
                    .map(|i| self.point(i as f64 / 64.0).r)
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Input description of one meridian segment.
#[derive(Debug, Clone)]
pub struct SegmentSpec {
    pub name: String,
    pub kind: SegmentSpecKind,
}

#[derive(Debug, Clone)]
pub enum SegmentSpecKind {
    Line { start: MeridianPoint, end: MeridianPoint },
    /// Signed radius: positive sweeps counterclockwise from start to end,
    /// negative clockwise. |radius| must match the center distance.
    Arc { start: MeridianPoint, end: MeridianPoint, center: MeridianPoint, radius: f64 },
}

impl SegmentSpecKind {
    fn start(&self) -> MeridianPoint {
        match *self {
            SegmentSpecKind::Line { start, .. } | SegmentSpecKind::Arc { start, .. } => start,
        }
    }
}

/// One segment of the built meridian chain.
#[derive(Debug, Clone)]
pub struct Segment {
    pub index: usize,
    pub name: String,
    pub geom: CurveGeom,
}

impl Segment {
    pub fn start(&self) -> MeridianPoint {
        self.geom.point(0.0)
    }
    pub fn end(&self) -> MeridianPoint {
        self.geom.point(1.0)
    }
    pub fn length(&self) -> f64 {
        self.geom.length()
    }
}

/// The generating curve of the shell plus the liquid fill data.
#[derive(Debug, Clone)]
pub struct Meridian {
    pub segments: Vec<Segment>,
    pub fill_level: f64,
    /// Interior angle of the liquid domain at the node between segments
    /// i and i+1, in (0, 2 pi]; 2 pi marks an internal edge.
    pub junction_angles: Vec<f64>,
    /// (segment index, fraction) where the chain crosses the fill level.
    wet_cut: (usize, f64),
    /// Radius of the planar free surface.
    pub sigma_radius: f64,
}

/// Interior angle of the liquid domain at a node, from the incoming and
/// outgoing unit tangents of the adjacent pieces. Result in (0, 2 pi].
pub fn interior_angle(t_in: [f64; 2], t_out: [f64; 2]) -> f64 {
    let back = [-t_in[0], -t_in[1]];
    let a1 = back[1].atan2(back[0]);
    let a2 = t_out[1].atan2(t_out[0]);
    let mut a = a1 - a2;
    while a <= 0.0 {
        a += 2.0 * std::f64::consts::PI;
    }
    while a > 2.0 * std::f64::consts::PI {
        a -= 2.0 * std::f64::consts::PI;
    }
    a
}

impl Meridian {
    /// Builds the meridian chain, snaps it connected, computes junction
    /// angles and locates the wetted part and free surface.
    pub fn build(specs: &[SegmentSpec], fill_level: f64) -> Result<Meridian, GeometryError> {
        if specs.is_empty() {
            return Err(GeometryError::Empty);
        }
        let first_start = specs[0].kind.start();
        if first_start.r.abs() > SNAP_TOL {
            return Err(GeometryError::NotAtAxis(first_start.r));
        }
        let mut segments: Vec<Segment> = Vec::with_capacity(specs.len());
        let mut cursor = MeridianPoint::new(0.0, first_start.z);
        for (index, spec) in specs.iter().enumerate() {
            let gap = spec.kind.start().dist(&cursor);
            if gap > SNAP_TOL {
                return Err(GeometryError::Disconnected { index, gap });
            }
            let geom = match spec.kind {
                SegmentSpecKind::Line { end, .. } => {
                    if cursor.dist(&end) <= SNAP_TOL {
                        return Err(GeometryError::BadSegment {
                            index,
                            reason: "zero-length segment".into(),
                        });
                    }
                    CurveGeom::Line { p0: cursor, p1: end }
                }
                SegmentSpecKind::Arc { end, center, radius, .. } => {
                    if radius == 0.0 {
                        return Err(GeometryError::BadSegment {
                            index,
                            reason: "arc radius must be nonzero".into(),
                        });
                    }
                    let r_start = cursor.dist(&center);
                    let r_end = end.dist(&center);
                    if (r_start - radius.abs()).abs() > 1e-6 * radius.abs().max(1.0)
                        || (r_end - radius.abs()).abs() > 1e-6 * radius.abs().max(1.0)
                    {
                        return Err(GeometryError::BadSegment {
                            index,
                            reason: format!(
                                "arc endpoints are not on the circle: |start-c|={r_start:.9}, |end-c|={r_end:.9}, |radius|={:.9}",
                                radius.abs()
                            ),
                        });
                    }
                    let a0 = (cursor.z - center.z).atan2(cursor.r - center.r);
                    let a1 = (end.z - center.z).atan2(end.r - center.r);
                    let two_pi = 2.0 * std::f64::consts::PI;
                    let sweep = if radius > 0.0 {
                        let mut d = a1 - a0;
                        while d <= 0.0 {
                            d += two_pi;
                        }
                        d
                    } else {
                        let mut d = a1 - a0;
                        while d >= 0.0 {
                            d -= two_pi;
                        }
                        d
                    };
                    if sweep.abs() >= two_pi {
                        return Err(GeometryError::BadSegment {
                            index,
                            reason: "arc sweep must be smaller than a full turn".into(),
                        });
                    }
                    CurveGeom::Arc { center, radius: radius.abs(), a0, sweep }
                }
            };
            if geom.min_r() < -SNAP_TOL {
                return Err(GeometryError::NegativeRadius(geom.min_r()));
            }
            cursor = geom.point(1.0);
            segments.push(Segment { index, name: spec.name.clone(), geom });
        }

        let junction_angles: Vec<f64> = segments
            .windows(2)
            .map(|w| interior_angle(w[0].geom.tangent(1.0), w[1].geom.tangent(0.0)))
            .collect();

        let bottom_z = segments[0].start().z;
        if fill_level <= bottom_z + SNAP_TOL {
            return Err(GeometryError::FillBelowBottom { fill: fill_level, bottom: bottom_z });
        }
        let mut wet_cut = None;
        for (i, seg) in segments.iter().enumerate() {
            if let Some(s) = seg.geom.upward_crossing(fill_level) {
                wet_cut = Some((i, s));
                break;
            }
        }
        let wet_cut = wet_cut.ok_or(GeometryError::FillAboveTop {
            fill: fill_level,
            top: segments.last().unwrap().end().z,
        })?;
        let contact = segments[wet_cut.0].geom.point(wet_cut.1);
        if contact.r <= SNAP_TOL {
            return Err(GeometryError::DegenerateSurface { fill: fill_level, r: contact.r });
        }

        Ok(Meridian {
            segments,
            fill_level,
            junction_angles,
            wet_cut,
            sigma_radius: contact.r,
        })
    }

    /// Frame of segment `segment_index` at the canonical parameter t in [-1, 1].
    pub fn frame_at(&self, segment_index: usize, t: f64) -> SurfaceFrame {
        assert!(segment_index < self.segments.len(), "segment index out of range");
        assert!(t.abs() <= 1.0, "parameter outside [-1, 1]");
        self.segments[segment_index].geom.frame(0.5 * (t + 1.0))
    }

    /// Area of the planar free surface disk.
    pub fn free_surface_area(&self) -> f64 {
        std::f64::consts::PI * self.sigma_radius * self.sigma_radius
    }

    pub fn total_length(&self) -> f64 {
        self.segments.iter().map(Segment::length).sum()
    }

    /// Ordered decomposition of the liquid boundary: the wetted pieces of the
    /// chain followed by the free-surface radius, oriented so the liquid stays
    /// on the left (free surface runs from the contact point to the axis).
    pub fn wetted_curve(&self) -> WettedCurve {
        let (cut_seg, cut_s) = self.wet_cut;
        let mut pieces = Vec::new();
        for seg in &self.segments[..cut_seg] {
            pieces.push(BoundaryPiece {
                shell: Some((seg.index, 0.0, 1.0)),
                name: seg.name.clone(),
                geom: seg.geom,
            });
        }
        if cut_s > 1e-12 {
            let seg = &self.segments[cut_seg];
            pieces.push(BoundaryPiece {
                shell: Some((seg.index, 0.0, cut_s)),
                name: seg.name.clone(),
                geom: seg.geom.subcurve(0.0, cut_s),
            });
        }
        let contact = MeridianPoint::new(self.sigma_radius, self.fill_level);
        let axis = MeridianPoint::new(0.0, self.fill_level);
        pieces.push(BoundaryPiece {
            shell: None,
            name: "free-surface".into(),
            geom: CurveGeom::Line { p0: contact, p1: axis },
        });
        let angles = pieces
            .windows(2)
            .map(|w| interior_angle(w[0].geom.tangent(1.0), w[1].geom.tangent(0.0)))
            .collect();
        WettedCurve { pieces, junction_angles: angles }
    }
}

/// One piece of the liquid boundary.
#[derive(Debug, Clone)]
pub struct BoundaryPiece {
    /// For shell pieces: (segment index, fraction range of that segment).
    /// None for the free surface.
    pub shell: Option<(usize, f64, f64)>,
    pub name: String,
    pub geom: CurveGeom,
}

impl BoundaryPiece {
    pub fn is_free_surface(&self) -> bool {
        self.shell.is_none()
    }

    /// Frame at canonical parameter t in [-1, 1].
    pub fn frame(&self, t: f64) -> SurfaceFrame {
        self.geom.frame(0.5 * (t + 1.0))
    }

    pub fn length(&self) -> f64 {
        self.geom.length()
    }
}

/// The boundary of the liquid domain: wetted shell pieces plus free surface.
#[derive(Debug, Clone)]
pub struct WettedCurve {
    pub pieces: Vec<BoundaryPiece>,
    /// Interior angles at the nodes between consecutive pieces.
    pub junction_angles: Vec<f64>,
}

impl WettedCurve {
    /// Wetted shell area (free surface excluded), 2 pi int r ds.
    pub fn wetted_area(&self, gauss: &(Vec<f64>, Vec<f64>)) -> f64 {
        let mut total = 0.0;
        for piece in self.pieces.iter().filter(|p| !p.is_free_surface()) {
            let half = 0.5 * piece.length();
            let mut acc = 0.0;
            for (&x, &w) in gauss.0.iter().zip(gauss.1.iter()) {
                acc += w * piece.frame(x).point.r;
            }
            total += acc * half * 2.0 * std::f64::consts::PI;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn line(name: &str, a: (f64, f64), b: (f64, f64)) -> SegmentSpec {
        SegmentSpec {
            name: name.into(),
            kind: SegmentSpecKind::Line {
                start: MeridianPoint::new(a.0, a.1),
                end: MeridianPoint::new(b.0, b.1),
            },
        }
    }

    /// The benchmark tank: flat bottom, cylinder, cone, spherical cap.
    pub fn benchmark_tank() -> Vec<SegmentSpec> {
        vec![
            line("bottom", (0.0, 0.0), (1.0, 0.0)),
            line("cylinder", (1.0, 0.0), (1.0, 2.0)),
            line("cone", (1.0, 2.0), (1.0, 4.0)),
            SegmentSpec {
                name: "sphere".into(),
                kind: SegmentSpecKind::Arc {
                    start: MeridianPoint::new(1.0, 4.0),
                    end: MeridianPoint::new(0.0, 5.0),
                    center: MeridianPoint::new(0.0, 4.0),
                    radius: 1.0,
                },
            },
        ]
    }

    #[test]
    fn benchmark_tank_builds_with_wetted_parts() {
        let m = Meridian::build(&benchmark_tank(), 4.0).unwrap();
        assert_eq!(m.segments.len(), 4);
        assert_relative_eq!(m.sigma_radius, 1.0, epsilon = 1e-12);
        let wc = m.wetted_curve();
        // bottom, cylinder, cone fully wetted; sphere dry; plus free surface
        assert_eq!(wc.pieces.len(), 4);
        assert!(wc.pieces[3].is_free_surface());
        assert_eq!(wc.pieces[2].shell, Some((2, 0.0, 1.0)));
    }

    #[test]
    fn collinear_junction_is_pi_and_right_angle_is_half_pi() {
        let m = Meridian::build(
            &[
                line("bottom", (0.0, 0.0), (1.0, 0.0)),
                line("wall", (1.0, 0.0), (1.0, 1.0)),
                line("wall2", (1.0, 1.0), (1.0, 2.0)),
            ],
            1.5,
        )
        .unwrap();
        assert_relative_eq!(m.junction_angles[0], PI / 2.0, epsilon = 1e-12);
        assert_relative_eq!(m.junction_angles[1], PI, epsilon = 1e-12);
    }

    #[test]
    fn splitting_a_segment_preserves_other_angles() {
        let whole = Meridian::build(
            &[line("bottom", (0.0, 0.0), (1.0, 0.0)), line("wall", (1.0, 0.0), (1.0, 2.0))],
            1.0,
        )
        .unwrap();
        let split = Meridian::build(
            &[
                line("bottom", (0.0, 0.0), (1.0, 0.0)),
                line("wall-a", (1.0, 0.0), (1.0, 1.3)),
                line("wall-b", (1.0, 1.3), (1.0, 2.0)),
            ],
            1.0,
        )
        .unwrap();
        assert_relative_eq!(split.junction_angles[0], whole.junction_angles[0], epsilon = 1e-12);
        assert_relative_eq!(split.junction_angles[1], PI, epsilon = 1e-12);
    }

    #[test]
    fn frames_on_cylinder_bottom_and_sphere() {
        let m = Meridian::build(&benchmark_tank(), 4.0).unwrap();
        let wall = m.frame_at(1, 0.31);
        assert_relative_eq!(wall.normal[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(wall.normal[1], 0.0, epsilon = 1e-14);
        assert_relative_eq!(wall.theta, PI / 2.0, epsilon = 1e-14);
        let bottom = m.frame_at(0, -0.5);
        assert_relative_eq!(bottom.normal[0], 0.0, epsilon = 1e-14);
        assert_relative_eq!(bottom.normal[1], -1.0, epsilon = 1e-14);
        assert_relative_eq!(bottom.theta, PI, epsilon = 1e-14);
        let cap = m.frame_at(3, 0.0);
        let n = cap.normal;
        let u = [(cap.point.r - 0.0), (cap.point.z - 4.0)];
        assert_relative_eq!((n[0] * n[0] + n[1] * n[1]).sqrt(), 1.0, epsilon = 1e-14);
        assert_relative_eq!(n[0], u[0], epsilon = 1e-12);
        assert_relative_eq!(n[1], u[1], epsilon = 1e-12);
        assert_relative_eq!(cap.normal_curvature, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn free_surface_area_cases() {
        let m = Meridian::build(
            &[line("bottom", (0.0, 0.0), (1.0, 0.0)), line("wall", (1.0, 0.0), (1.0, 2.0))],
            1.0,
        )
        .unwrap();
        assert_relative_eq!(m.free_surface_area(), PI, epsilon = 1e-12);

        // fill inside a narrowing cone: radius by similar triangles
        let m2 = Meridian::build(
            &[
                line("bottom", (0.0, 0.0), (2.0, 0.0)),
                line("cone", (2.0, 0.0), (0.5, 3.0)),
            ],
            2.0,
        )
        .unwrap();
        let r_expect = 2.0 + (0.5 - 2.0) * (2.0 / 3.0);
        assert_relative_eq!(m2.free_surface_area(), PI * r_expect * r_expect, epsilon = 1e-10);
    }

    #[test]
    fn degenerate_and_out_of_range_fills_error() {
        let cone_to_apex = vec![
            line("bottom", (0.0, 0.0), (2.0, 0.0)),
            line("cone", (2.0, 0.0), (0.0, 3.0)),
        ];
        assert!(matches!(
            Meridian::build(&cone_to_apex, 3.0),
            Err(GeometryError::DegenerateSurface { .. })
        ));
        let tank = benchmark_tank();
        assert!(matches!(
            Meridian::build(&tank, -1.0),
            Err(GeometryError::FillBelowBottom { .. })
        ));
        assert!(matches!(
            Meridian::build(&tank, 9.0),
            Err(GeometryError::FillAboveTop { .. })
        ));
    }

    #[test]
    fn disconnected_chain_errors() {
        let specs = vec![
            line("bottom", (0.0, 0.0), (1.0, 0.0)),
            line("wall", (1.0, 0.5), (1.0, 2.0)),
        ];
        assert!(matches!(
            Meridian::build(&specs, 1.0),
            Err(GeometryError::Disconnected { index: 1, .. })
        ));
    }

    #[test]
    fn arclength_additivity_and_normal_orientation() {
        let m = Meridian::build(&benchmark_tank(), 4.0).unwrap();
        let expect = 1.0 + 2.0 + 2.0 + PI / 2.0;
        assert_relative_eq!(m.total_length(), expect, epsilon = 1e-12);
        // outward normal points away from an interior reference point
        let interior = MeridianPoint::new(0.3, 1.0);
        for seg in 0..4 {
            for &t in &[-0.9, -0.3, 0.4, 0.8] {
                let f = m.frame_at(seg, t);
                let d = [f.point.r - interior.r, f.point.z - interior.z];
                assert!(f.normal[0] * d[0] + f.normal[1] * d[1] > 0.0);
            }
        }
    }

    #[test]
    fn wetted_curve_ends_with_free_surface_toward_axis() {
        let m = Meridian::build(
            &[line("bottom", (0.0, 0.0), (1.0, 0.0)), line("wall", (1.0, 0.0), (1.0, 2.0))],
            1.0,
        )
        .unwrap();
        let wc = m.wetted_curve();
        assert_eq!(wc.pieces.len(), 3);
        let sigma = wc.pieces.last().unwrap();
        assert!(sigma.is_free_surface());
        let f = sigma.frame(0.0);
        assert_relative_eq!(f.normal[1], 1.0, epsilon = 1e-14);
        assert_relative_eq!(f.theta, 0.0, epsilon = 1e-14);
        // wall meets the free surface at a right angle
        assert_relative_eq!(wc.junction_angles[1], PI / 2.0, epsilon = 1e-12);
    }
}
