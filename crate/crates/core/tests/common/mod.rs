#![allow(dead_code)]

use diskcover::sectors::sector_representatives;
use diskcover::{Execution, HLine, Point, Rect, Tolerance, UnitDisk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Points below `y = 0`, unit disks centered above it; every point gets a
/// covering disk.
pub fn line_separable(seed: u64, n: usize, m: usize) -> (Vec<Point>, Vec<UnitDisk>, HLine) {
    let mut r = rng(seed);
    let width = 0.6 * n.max(m) as f64;
    let points: Vec<Point> = (0..n)
        .map(|_| Point::new(r.gen_range(0.0..width), r.gen_range(-0.85..-0.01)))
        .collect();
    let mut disks: Vec<UnitDisk> = Vec::new();
    for p in points.iter().take(m.min(n)) {
        // a center above the line within distance 1 of p
        loop {
            let c = Point::new(p.x + r.gen_range(-0.9..0.9), r.gen_range(0.01..0.99));
            if c.dist(p) < 0.999 {
                disks.push(UnitDisk::unit(c.x, c.y));
                break;
            }
        }
    }
    while disks.len() < m {
        disks.push(UnitDisk::unit(r.gen_range(-0.5..width + 0.5), r.gen_range(0.01..0.99)));
    }
    let tol = Tolerance::default();
    for p in &points {
        if !disks.iter().any(|d| d.contains(p, tol)) {
            disks.push(UnitDisk::unit(p.x, (p.y + 0.9).max(0.01)));
        }
    }
    (points, disks, HLine::new(0.0))
}

/// Points in a box with unit disks centered at jittered points, each point
/// guaranteed a covering disk.
pub fn uniform(seed: u64, n: usize, m: usize, side: f64) -> (Vec<Point>, Vec<UnitDisk>) {
    let mut r = rng(seed);
    let points: Vec<Point> = (0..n)
        .map(|_| Point::new(r.gen_range(0.0..side), r.gen_range(0.0..side)))
        .collect();
    let mut disks: Vec<UnitDisk> = (0..m)
        .map(|_| UnitDisk::unit(r.gen_range(0.0..side), r.gen_range(0.0..side)))
        .collect();
    let tol = Tolerance::default();
    for p in &points {
        if !disks.iter().any(|d| d.contains(p, tol)) {
            let a: f64 = r.gen_range(0.0..std::f64::consts::TAU);
            let s: f64 = r.gen_range(0.0..0.95);
            disks.push(UnitDisk::unit(p.x + s * a.cos(), p.y + s * a.sin()));
        }
    }
    (points, disks)
}

/// A rectangle covered by jittered grid disks of the given radius, with a few
/// random extras. Retries until the union covers the rectangle.
pub fn covered_rect(seed: u64, width: f64, height: f64, radius: f64, extras: usize) -> (Rect, Vec<UnitDisk>) {
    let mut r = rng(seed);
    let rect = Rect::new(0.0, 0.0, width, height).unwrap();
    let step = radius * std::f64::consts::SQRT_2 * 0.95;
    let tol = Tolerance::default();
    loop {
        let mut disks = Vec::new();
        let (nx, ny) = ((width / step).ceil() as usize, (height / step).ceil() as usize);
        for i in 0..nx {
            for j in 0..ny {
                let jitter = 0.04 * step;
                let c = Point::new(
                    (i as f64 + 0.5) * width / nx as f64 + r.gen_range(-jitter..jitter),
                    (j as f64 + 0.5) * height / ny as f64 + r.gen_range(-jitter..jitter),
                );
                disks.push(UnitDisk::with_radius(c, radius));
            }
        }
        for _ in 0..extras {
            let c = Point::new(r.gen_range(-0.5..width + 0.5), r.gen_range(-0.5..height + 0.5));
            disks.push(UnitDisk::with_radius(c, radius));
        }
        let reps = sector_representatives(&rect, &disks, tol, Execution::Sequential);
        if reps.iter().all(|s| !s.signature.is_empty()) {
            return (rect, disks);
        }
    }
}
