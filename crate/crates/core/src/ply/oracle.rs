//! Two ply estimators independent of the sweep: an exhaustive candidate-point
//! search and uniform random sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{DiskIndex, PlyDiskSet, PlyError, PlyMethod, PlyReport, Tolerance};
use crate::geometry::{normalize_angle, Point};

/// Relative nudge sizes. The tolerance band grows with the coordinates, so
/// tiny disks far from the origin need large nudges.
const NUDGES: [f64; 7] = [1e-9, 1e-7, 1e-5, 1e-3, 1e-2, 5e-2, 2e-1];

/// Maximum depth over a finite candidate set: every center, every pairwise
/// circle intersection point nudged toward either or both centers, and the
/// midpoint of every arc between consecutive intersection points, nudged
/// toward the circle's center.
pub fn candidate_ply(disks: &PlyDiskSet, tol: f64) -> Result<PlyReport, PlyError> {
    let t = Tolerance::check(tol)?;
    let ds = &disks.disks;
    if ds.is_empty() {
        return Err(PlyError::Empty);
    }
    let index = DiskIndex::new(ds);
    let adj = index.neighbours(t);
    let mut best = (0, ds[0].center);
    let mut consider = |q: Point| {
        let depth = index.depth(q, t);
        if depth > best.0 {
            best = (depth, q);
        }
    };

    for d in ds {
        consider(d.center);
    }
    let mut angles = Vec::new();
    for (i, a) in ds.iter().enumerate() {
        angles.clear();
        for &j in &adj[i] {
            let b = &ds[j];
            let d = a.center.dist(b.center);
            if d == 0.0 || d >= a.radius + b.radius || d <= (a.radius - b.radius).abs() {
                continue;
            }
            // Intersection points from the radical line.
            let x = (d + (a.radius - b.radius) / d * (a.radius + b.radius)) / 2.0;
            let y = ((a.radius - x) * (a.radius + x)).max(0.0).sqrt();
            let u = (b.center - a.center) * (1.0 / d);
            let base = u.angle();
            let dtheta = y.atan2(x);
            for p in [a.center + u * x + u.perp() * y, a.center + u * x - u.perp() * y] {
                let (ta, tb) = ((a.center - p).unit(), (b.center - p).unit());
                for eta in NUDGES {
                    let r = a.radius.min(b.radius) * eta;
                    consider(p + ta * r);
                    consider(p + tb * r);
                    consider(p + (ta + tb) * r);
                }
            }
            angles.push(normalize_angle(base + dtheta));
            angles.push(normalize_angle(base - dtheta));
        }
        angles.sort_by(f64::total_cmp);
        if angles.is_empty() {
            angles.push(0.0);
        }
        for k in 0..angles.len() {
            let next = angles.get(k + 1).copied().unwrap_or(angles[0] + std::f64::consts::TAU);
            let mid = (angles[k] + next) / 2.0;
            for eta in NUDGES {
                consider(a.center + Point::polar(mid) * (a.radius * (1.0 - eta)));
            }
        }
    }
    Ok(PlyReport {
        ply: best.0,
        witness: best.1,
        method: PlyMethod::CandidateOracle,
        tolerance: tol,
    })
}

/// Maximum depth over `samples` uniform points in the bounding box of the
/// disks. A lower bound on the ply; may be 0 if every sample misses.
pub fn sample_ply(disks: &PlyDiskSet, samples: usize, seed: u64, tol: f64) -> Result<PlyReport, PlyError> {
    let t = Tolerance::check(tol)?;
    let Some((lo, hi)) = disks.bounds() else {
        return Err(PlyError::Empty);
    };
    let index = DiskIndex::new(&disks.disks);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (0, lo);
    for _ in 0..samples {
        let q = Point::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        let depth = index.depth(q, t);
        if depth > best.0 {
            best = (depth, q);
        }
    }
    Ok(PlyReport {
        ply: best.0,
        witness: best.1,
        method: PlyMethod::Sampling,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ply::tests::line;
    use crate::ply::{depth_at_point, exact_ply, ply_disks, PlyDisk, DEFAULT_TOL};
    use proptest::prelude::*;

    fn disk(x: f64, y: f64, r: f64) -> PlyDisk {
        PlyDisk { id: 0, center: Point::new(x, y), radius: r }
    }

    #[test]
    fn small_cases() {
        let s = PlyDiskSet::new(vec![disk(0.0, 0.0, 1.0), disk(5.0, 0.0, 1.0)]);
        assert_eq!(candidate_ply(&s, DEFAULT_TOL).unwrap().ply, 1);
        let h = 3f64.sqrt() / 2.0;
        let s = PlyDiskSet::new(vec![disk(0.0, 0.0, 1.0), disk(1.0, 0.0, 1.0), disk(0.5, h, 1.0)]);
        let r = candidate_ply(&s, DEFAULT_TOL).unwrap();
        assert_eq!(r.ply, 3);
        assert_eq!(depth_at_point(&s, Point::new(0.5, h / 3.0), DEFAULT_TOL), 3);
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = ply_disks(&line(&[0.0, 1.0, 3.0, 4.0])).unwrap();
        let a = sample_ply(&s, 100_000, 7, DEFAULT_TOL).unwrap();
        let b = sample_ply(&s, 100_000, 7, DEFAULT_TOL).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.ply, 2);
        let one = PlyDiskSet::new(vec![disk(3.0, 4.0, 2.0)]);
        assert_eq!(sample_ply(&one, 1000, 99, DEFAULT_TOL).unwrap().ply, 1);
    }

    fn disk_set() -> impl Strategy<Value = PlyDiskSet> {
        prop::collection::vec((0.0..10.0f64, 0.0..10.0f64, 0.2..4.0f64), 1..=25).prop_map(|v| {
            PlyDiskSet::new(
                v.into_iter()
                    .enumerate()
                    .map(|(i, (x, y, r))| PlyDisk { id: i as u64, center: Point::new(x, y), radius: r })
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn exact_methods_agree(s in disk_set(), seed in any::<u64>()) {
            let e = exact_ply(&s, DEFAULT_TOL).unwrap();
            let c = candidate_ply(&s, DEFAULT_TOL).unwrap();
            prop_assert_eq!(e.ply, c.ply);
            prop_assert_eq!(depth_at_point(&s, e.witness, DEFAULT_TOL), e.ply);
            prop_assert!(e.ply >= 1 && e.ply <= s.len());
            let smp = sample_ply(&s, 2000, seed, DEFAULT_TOL).unwrap();
            prop_assert!(smp.ply <= e.ply);
        }

        #[test]
        fn adding_a_disk_never_lowers_ply(s in disk_set(), x in 0.0..10.0f64, y in 0.0..10.0f64, r in 0.2..4.0f64) {
            let before = exact_ply(&s, DEFAULT_TOL).unwrap().ply;
            let mut more = s.clone();
            more.disks.push(disk(x, y, r));
            prop_assert!(exact_ply(&more, DEFAULT_TOL).unwrap().ply >= before);
        }
    }
}
