use serde::{Deserialize, Serialize};

use super::{BilliardConfig, OrbitError};
use crate::geometry::{Ellipse, Point, Polygon};
use crate::scalar::Real;

/// Acceptance threshold on the squared bisection error.
pub const DEFAULT_SEED_TOL: f64 = 1e-18;

const MAX_ITERATIONS: usize = 500;
const STEP_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedMethod {
    /// No free parameters: symmetry alone fixes the orbit.
    Symmetry,
    GaussNewton,
    NelderMead,
}

/// Converged seed orbit with `P₁ = (a, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedOrbit<T> {
    /// Eccentric angles of all vertices.
    pub angles: Vec<T>,
    pub polygon: Polygon<T>,
    /// Final `ℰ = Σ (nᵢ·bᵢ)²`.
    pub energy: T,
    pub iterations: usize,
    pub method: SeedMethod,
}

/// Number of free eccentric angles once `P₁ = (a, 0)` and the axis
/// reflections are imposed.
fn free_count(n: usize) -> usize {
    if n % 2 == 1 {
        n / 2
    } else {
        // free j satisfy 2 <= j < n/4 + 1
        n.div_ceil(4) - 1
    }
}

/// Full list of eccentric angles from the free ones.
///
/// Odd `N`: `t₁ = 0`, `t_{N+2−j} = 2πk − t_j`. Even `N` adds the reflection
/// in the minor axis: `t_{N/2+1} = πk`, `t_{N/2+2−j} = πk − t_j`.
pub fn symmetric_angles<T: Real>(free: &[T], n: usize, k: usize) -> Vec<T> {
    debug_assert_eq!(free.len(), free_count(n));
    let pi_k = T::PI() * T::of_usize(k);
    let mut t = vec![T::zero(); n + 1]; // 1-based
    if n % 2 == 1 {
        for (i, &x) in free.iter().enumerate() {
            t[i + 2] = x;
        }
    } else {
        let h = n / 2;
        for j in 2..=h {
            let mirror = h + 2 - j;
            t[j] = if j - 2 < free.len() {
                free[j - 2]
            } else if j == mirror {
                pi_k * T::half()
            } else {
                pi_k - t[mirror]
            };
        }
        t[h + 1] = pi_k;
    }
    let upper = n.div_ceil(2);
    for j in 2..=upper {
        t[n + 2 - j] = T::two() * pi_k - t[j];
    }
    t.remove(0);
    t
}

fn vertices<T: Real>(e: &Ellipse<T>, angles: &[T]) -> Vec<Point<T>> {
    angles.iter().map(|&t| e.point_at(t)).collect()
}

/// `nᵢ · (u_in + u_out)/|u_in + u_out|` with `u_in`, `u_out` the unit
/// travel directions into and out of `Pᵢ`. This is the component of the
/// external bisector along the normal, which vanishes exactly at a
/// reflection.
fn residuals<T: Real>(e: &Ellipse<T>, angles: &[T], out: &mut Vec<T>) {
    let p = vertices(e, angles);
    let n = p.len();
    out.clear();
    for i in 0..n {
        let prev = p[(i + n - 1) % n];
        let next = p[(i + 1) % n];
        let r = match ((p[i] - prev).normalized(), (next - p[i]).normalized()) {
            (Some(u_in), Some(u_out)) => match (u_in + u_out).normalized() {
                Some(bis) => e.unit_normal(p[i]).dot(bis),
                None => T::one(),
            },
            _ => T::one(),
        };
        out.push(r);
    }
}

fn energy_of<T: Real>(e: &Ellipse<T>, free: &[T], n: usize, k: usize, buf: &mut Vec<T>) -> T {
    residuals(e, &symmetric_angles(free, n, k), buf);
    buf.iter().fold(T::zero(), |acc, &r| acc + r * r)
}

/// Least-squares solution of the bisection condition ("every bisector is a
/// normal") over the symmetry-reduced eccentric angles.
///
/// Damped Gauss–Newton with a central-difference Jacobian; a Nelder–Mead
/// simplex takes over when damping cannot reduce ℰ. Iteration continues past
/// `tol` until the step falls below 1e−13 so the caustic derived from the
/// seed is accurate to round-off.
pub fn solve_seed_orbit<T: Real>(
    config: &BilliardConfig<T>,
    tol: T,
) -> Result<SeedOrbit<T>, OrbitError> {
    let (n, k) = (config.n(), config.rotation());
    let e = config.billiard();
    let m = free_count(n);
    let tau_k = T::TAU() * T::of_usize(k);
    let mut x: Vec<T> = (0..m)
        .map(|i| tau_k * T::of_usize(i + 1) / T::of_usize(n))
        .collect();
    let mut buf = Vec::with_capacity(n);
    let mut energy = energy_of(&e, &x, n, k, &mut buf);
    let mut method = SeedMethod::Symmetry;
    let mut iterations = 0;

    if m > 0 {
        method = SeedMethod::GaussNewton;
        let (e_gn, it, stalled) = gauss_newton(&e, &mut x, n, k, energy);
        energy = e_gn;
        iterations = it;
        if stalled && !(energy < tol) {
            method = SeedMethod::NelderMead;
            energy = nelder_mead(&e, &mut x, n, k);
            let (e_gn, it, _) = gauss_newton(&e, &mut x, n, k, energy);
            energy = e_gn;
            iterations += it;
        }
    }

    if !(energy < tol) {
        return Err(OrbitError::SolverDidNotConverge {
            energy: energy.as_f64(),
            iterations,
        });
    }
    let angles = symmetric_angles(&x, n, k);
    let polygon = Polygon::new(vertices(&e, &angles))?;
    Ok(SeedOrbit {
        angles,
        polygon,
        energy,
        iterations,
        method,
    })
}

/// Returns (final energy, iterations, stalled).
fn gauss_newton<T: Real>(
    e: &Ellipse<T>,
    x: &mut [T],
    n: usize,
    k: usize,
    mut energy: T,
) -> (T, usize, bool) {
    let m = x.len();
    let h = T::epsilon().cbrt();
    let mut r = Vec::with_capacity(n);
    let mut rp = Vec::with_capacity(n);
    let mut rm = Vec::with_capacity(n);
    let mut jac = vec![vec![T::zero(); m]; n];
    let mut mu = T::zero();
    let mut xt = x.to_vec();

    for it in 0..MAX_ITERATIONS {
        if energy == T::zero() {
            return (energy, it, false);
        }
        residuals(e, &symmetric_angles(x, n, k), &mut r);
        for c in 0..m {
            xt.copy_from_slice(x);
            xt[c] = x[c] + h;
            residuals(e, &symmetric_angles(&xt, n, k), &mut rp);
            xt[c] = x[c] - h;
            residuals(e, &symmetric_angles(&xt, n, k), &mut rm);
            for i in 0..n {
                jac[i][c] = (rp[i] - rm[i]) / (T::two() * h);
            }
        }
        // normal equations
        let mut jtj = vec![vec![T::zero(); m]; m];
        let mut jtr = vec![T::zero(); m];
        for i in 0..n {
            for p in 0..m {
                jtr[p] += jac[i][p] * r[i];
                for q in 0..m {
                    jtj[p][q] += jac[i][p] * jac[i][q];
                }
            }
        }
        let scale = (0..m).fold(T::zero(), |acc, p| acc.max(jtj[p][p]));

        let mut accepted = None;
        for _ in 0..30 {
            let mut lhs = jtj.clone();
            for (p, row) in lhs.iter_mut().enumerate() {
                row[p] += mu * scale;
            }
            let rhs: Vec<T> = jtr.iter().map(|&v| -v).collect();
            let Some(delta) = solve_linear(lhs, rhs) else {
                mu = if mu == T::zero() {
                    T::lit(1e-10)
                } else {
                    mu * T::lit(10.0)
                };
                continue;
            };
            for p in 0..m {
                xt[p] = x[p] + delta[p];
            }
            let trial = energy_of(e, &xt, n, k, &mut rp);
            if trial <= energy {
                accepted = Some((delta, trial));
                mu *= T::lit(0.1);
                if mu < T::lit(1e-14) {
                    mu = T::zero();
                }
                break;
            }
            mu = if mu == T::zero() {
                T::lit(1e-10)
            } else {
                mu * T::lit(10.0)
            };
        }
        let Some((delta, trial)) = accepted else {
            return (energy, it + 1, true);
        };
        x.copy_from_slice(&xt);
        let step = delta.iter().fold(T::zero(), |acc, d| acc.max(d.abs()));
        let improved = trial < energy;
        energy = trial;
        if step < T::tol_floor(STEP_TOL) || !improved {
            return (energy, it + 1, false);
        }
    }
    (energy, MAX_ITERATIONS, true)
}

/// Gaussian elimination with partial pivoting; `None` when singular.
#[allow(clippy::needless_range_loop)]
fn solve_linear<T: Real>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let m = b.len();
    for col in 0..m {
        let piv = (col..m).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if !(a[piv][col].abs() > T::zero()) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..m {
            let f = a[row][col] / a[col][col];
            for c in col..m {
                let v = a[col][c];
                a[row][c] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![T::zero(); m];
    for row in (0..m).rev() {
        let mut s = b[row];
        for c in row + 1..m {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

fn nelder_mead<T: Real>(e: &Ellipse<T>, x: &mut [T], n: usize, k: usize) -> T {
    let m = x.len();
    let mut buf = Vec::with_capacity(n);
    let mut f = |p: &[T]| energy_of(e, p, n, k, &mut buf);
    let step = T::PI() / T::of_usize(4 * n);
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(m + 1);
    simplex.push((x.to_vec(), f(x)));
    for i in 0..m {
        let mut p = x.to_vec();
        p[i] += step;
        let v = f(&p);
        simplex.push((p, v));
    }
    let cmp = |a: &(Vec<T>, T), b: &(Vec<T>, T)| {
        a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal)
    };
    for _ in 0..4000 {
        simplex.sort_by(cmp);
        let spread = simplex[m].1 - simplex[0].1;
        if spread <= T::epsilon() * simplex[0].1.max(T::min_positive_value()) {
            break;
        }
        let mut centroid = vec![T::zero(); m];
        for (p, _) in &simplex[..m] {
            for i in 0..m {
                centroid[i] += p[i] / T::of_usize(m);
            }
        }
        let along = |s: T| -> Vec<T> {
            (0..m)
                .map(|i| centroid[i] + (simplex[m].0[i] - centroid[i]) * s)
                .collect()
        };
        let xr = along(-T::one());
        let fr = f(&xr);
        if fr < simplex[0].1 {
            let xe = along(-T::two());
            let fe = f(&xe);
            simplex[m] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[m - 1].1 {
            simplex[m] = (xr, fr);
        } else {
            let xc = along(T::half());
            let fc = f(&xc);
            if fc < simplex[m].1 {
                simplex[m] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for (p, v) in simplex.iter_mut().skip(1) {
                    for i in 0..m {
                        p[i] = best[i] + (p[i] - best[i]) * T::half();
                    }
                    *v = f(p);
                }
            }
        }
    }
    simplex.sort_by(cmp);
    x.copy_from_slice(&simplex[0].0);
    simplex[0].1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::caustic_by_closure;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn free_parameter_counts() {
        let counts: Vec<usize> = (3..=12).map(free_count).collect();
        assert_eq!(counts, vec![1, 0, 2, 1, 3, 1, 4, 2, 5, 2]);
    }

    #[test]
    fn symmetric_fill_is_axis_symmetric() {
        let t = symmetric_angles(&[0.7], 6, 1);
        assert_eq!(t.len(), 6);
        assert_relative_eq!(t[0], 0.0);
        assert_relative_eq!(t[1], 0.7);
        assert_relative_eq!(t[2], PI - 0.7);
        assert_relative_eq!(t[3], PI);
        assert_relative_eq!(t[4], PI + 0.7);
        assert_relative_eq!(t[5], 2.0 * PI - 0.7);

        let t = symmetric_angles::<f64>(&[], 4, 1);
        assert_relative_eq!(t[1], PI / 2.0);
        assert_relative_eq!(t[3], 1.5 * PI);

        let t = symmetric_angles(&[0.4, 1.1], 5, 1);
        assert_relative_eq!(t[3], 2.0 * PI - 1.1);
        assert_relative_eq!(t[4], 2.0 * PI - 0.4);
    }

    #[test]
    fn rhombus_by_symmetry() {
        let cfg = BilliardConfig::new(2.0, 1.0, 4).unwrap();
        let s = solve_seed_orbit(&cfg, DEFAULT_SEED_TOL).unwrap();
        assert_eq!(s.method, SeedMethod::Symmetry);
        let v = s.polygon.vertices();
        let want = [(2.0, 0.0), (0.0, 1.0), (-2.0, 0.0), (0.0, -1.0)];
        for (p, (x, y)) in v.iter().zip(want) {
            assert_relative_eq!(p.x, x, epsilon = 1e-15);
            assert_relative_eq!(p.y, y, epsilon = 1e-15);
        }
    }

    #[test]
    fn triangle_matches_closure_oracle() {
        let cfg = BilliardConfig::new(2.0, 1.0, 3).unwrap();
        let s = solve_seed_orbit(&cfg, DEFAULT_SEED_TOL).unwrap();
        assert!(s.energy < 1e-18);
        let e = cfg.billiard();
        let v = s.polygon.vertices();
        let k = crate::orbit::caustic_from_segment(&e, v[0], v[1]).unwrap();
        let oracle = caustic_by_closure(&cfg).unwrap();
        assert_relative_eq!(k.a(), oracle.a(), epsilon = 1e-10);
        assert_relative_eq!(k.a(), 1.7370341836426595, epsilon = 1e-12);
    }

    #[test]
    fn near_circle_triangle_is_equilateral() {
        let cfg = BilliardConfig::new(1.0 + 1e-8, 1.0, 3).unwrap();
        let s = solve_seed_orbit(&cfg, DEFAULT_SEED_TOL).unwrap();
        assert_relative_eq!(s.angles[1], 2.0 * PI / 3.0, epsilon = 1e-6);
        assert_relative_eq!(s.angles[2], 4.0 * PI / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn nelder_mead_reaches_the_same_minimum() {
        let cfg = BilliardConfig::new(1.5, 1.0, 5).unwrap();
        let e = cfg.billiard();
        let mut x = vec![1.2, 2.6];
        let en = nelder_mead(&e, &mut x, 5, 1);
        assert!(en < 1e-20, "{en}");
        let gn = solve_seed_orbit(&cfg, DEFAULT_SEED_TOL).unwrap();
        assert_relative_eq!(x[0], gn.angles[1], epsilon = 1e-8);
        assert_relative_eq!(x[1], gn.angles[2], epsilon = 1e-8);
    }

    #[test]
    fn higher_rotation_number() {
        let cfg = BilliardConfig::with_rotation(1.25, 1.0, 5, 2).unwrap();
        let oracle = caustic_by_closure(&cfg).unwrap();
        let s = solve_seed_orbit(&cfg, DEFAULT_SEED_TOL).unwrap();
        let v = s.polygon.vertices();
        let k = crate::orbit::caustic_from_segment(&cfg.billiard(), v[0], v[1]).unwrap();
        assert_relative_eq!(k.a(), oracle.a(), epsilon = 1e-10);
    }

    #[test]
    fn linear_solver() {
        let x = solve_linear(vec![vec![2.0, 1.0], vec![1.0, 3.0]], vec![3.0, 5.0]).unwrap();
        assert_relative_eq!(x[0], 0.8, epsilon = 1e-15);
        assert_relative_eq!(x[1], 1.4, epsilon = 1e-15);
        assert!(solve_linear(vec![vec![1.0, 2.0], vec![2.0, 4.0]], vec![1.0, 1.0]).is_none());
    }
}
