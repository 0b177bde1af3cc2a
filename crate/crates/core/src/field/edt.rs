use super::{DistanceField, ObstacleBoundarySet};
use crate::grid::Grid;

/// Exact squared Euclidean distance transform (Meijster, Roerdink and
/// Hesselink), integer arithmetic throughout. Returns `None` for an empty set.
pub fn exact_sq_edt(omega: &ObstacleBoundarySet) -> Option<Grid<u64>> {
    let (w, h) = (omega.width(), omega.height());
    if omega.is_empty() {
        return None;
    }
    // Larger than any in-image distance.
    let inf = (w + h) as i64;

    // Phase 1: vertical distance to the nearest set pixel in each column.
    let mut g = vec![0i64; w * h];
    for u in 0..w {
        let hit = |v: usize| omega.contains(u, v);
        g[u] = if hit(0) { 0 } else { inf };
        for v in 1..h {
            g[v * w + u] = if hit(v) { 0 } else { (g[(v - 1) * w + u] + 1).min(inf) };
        }
        for v in (0..h - 1).rev() {
            let below = g[(v + 1) * w + u];
            if below < g[v * w + u] {
                g[v * w + u] = below + 1;
            }
        }
    }

    // Phase 2: lower envelope of parabolas along each row.
    let mut out = Grid::filled(w, h, 0u64);
    let mut s = vec![0i64; w];
    let mut t = vec![0i64; w];
    for v in 0..h {
        let row = &g[v * w..(v + 1) * w];
        let f = |x: i64, i: i64| (x - i) * (x - i) + row[i as usize] * row[i as usize];
        let sep = |i: i64, k: i64| {
            (k * k - i * i + row[k as usize] * row[k as usize] - row[i as usize] * row[i as usize])
                .div_euclid(2 * (k - i))
        };
        let mut q: usize = 0;
        s[0] = 0;
        t[0] = 0;
        for k in 1..w as i64 {
            while f(t[q], s[q]) > f(t[q], k) {
                if q == 0 {
                    break;
                }
                q -= 1;
            }
            if f(t[q], s[q]) > f(t[q], k) {
                // q == 0 and the new parabola dominates everywhere so far.
                s[0] = k;
                continue;
            }
            let x = 1 + sep(s[q], k);
            if x < w as i64 {
                q += 1;
                s[q] = k;
                t[q] = x;
            }
        }
        for x in (0..w as i64).rev() {
            out.set(x as usize, v, f(x, s[q]) as u64);
            if q > 0 && x == t[q] {
                q -= 1;
            }
        }
    }
    Some(out)
}

/// Exact Euclidean distance from every pixel to the nearest pixel of
/// `omega`. An empty set yields the finite sentinel `width + height`
/// everywhere.
pub fn exact_edt(omega: &ObstacleBoundarySet) -> DistanceField {
    match exact_sq_edt(omega) {
        Some(sq) => sq.map(|&d| (d as f64).sqrt()),
        None => Grid::filled(omega.width(), omega.height(), (omega.width() + omega.height()) as f64),
    }
}
