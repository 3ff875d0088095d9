//! Nelder–Mead simplex descent with dimension-adapted coefficients
//! (Gao & Han) and simplex restarts around the incumbent.

#[derive(Debug, Clone)]
pub struct SimplexOptions {
    /// Edge length of the initial (and every restarted) simplex, per coordinate.
    pub initial_step: f64,
    /// Stop a descent when the spread of simplex values falls below this.
    pub f_tol: f64,
    /// Stop a descent when the simplex diameter falls below this.
    pub x_tol: f64,
    pub max_evals: usize,
    /// Restart the simplex around the best point until a restart gains less than `f_tol`.
    pub max_restarts: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.1,
            f_tol: 1e-14,
            x_tol: 1e-11,
            max_evals: 200_000,
            max_restarts: 30,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evals: usize,
}

/// Minimize `f` from `x0`. Non-finite values are treated as `+∞`, which lets
/// callers encode infeasibility.
pub fn minimize<F>(mut f: F, x0: &[f64], opts: &SimplexOptions) -> SimplexResult
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };

    let nf = n as f64;
    let (alpha, gamma, rho, sigma) = if n >= 2 {
        (1.0, 1.0 + 2.0 / nf, 0.75 - 1.0 / (2.0 * nf), 1.0 - 1.0 / nf)
    } else {
        (1.0, 2.0, 0.5, 0.5)
    };

    let mut best_x = x0.to_vec();
    let mut best_v = eval(&best_x, &mut evals);
    let mut step = opts.initial_step;

    for _ in 0..=opts.max_restarts {
        let start_v = best_v;
        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        let mut values: Vec<f64> = Vec::with_capacity(n + 1);
        simplex.push(best_x.clone());
        values.push(best_v);
        for i in 0..n {
            let mut v = best_x.clone();
            v[i] += step;
            let fv = eval(&v, &mut evals);
            simplex.push(v);
            values.push(fv);
        }

        loop {
            let mut order: Vec<usize> = (0..=n).collect();
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
            simplex = order.iter().map(|&i| simplex[i].clone()).collect();
            values = order.iter().map(|&i| values[i]).collect();

            let spread = values[n] - values[0];
            let diameter = simplex[1..]
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(&simplex[0])
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if (spread.is_finite() && spread <= opts.f_tol)
                || diameter <= opts.x_tol
                || evals >= opts.max_evals
            {
                break;
            }

            let mut centroid = vec![0.0; n];
            for v in &simplex[..n] {
                for (c, x) in centroid.iter_mut().zip(v) {
                    *c += x / nf;
                }
            }
            let along = |t: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(&simplex[n])
                    .map(|(c, w)| c + t * (c - w))
                    .collect()
            };

            let xr = along(alpha);
            let fr = eval(&xr, &mut evals);
            if fr < values[0] {
                let xe = along(gamma);
                let fe = eval(&xe, &mut evals);
                if fe < fr {
                    simplex[n] = xe;
                    values[n] = fe;
                } else {
                    simplex[n] = xr;
                    values[n] = fr;
                }
                continue;
            }
            if fr < values[n - 1] {
                simplex[n] = xr;
                values[n] = fr;
                continue;
            }
            let (xc, fc) = if fr < values[n] {
                let xc = along(rho * alpha);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            } else {
                let xc = along(-rho);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            };
            if fc < values[n].min(fr) {
                simplex[n] = xc;
                values[n] = fc;
                continue;
            }
            for i in 1..=n {
                let shrunk: Vec<f64> = simplex[0]
                    .iter()
                    .zip(&simplex[i])
                    .map(|(b, x)| b + sigma * (x - b))
                    .collect();
                values[i] = eval(&shrunk, &mut evals);
                simplex[i] = shrunk;
            }
        }

        let (i_best, &v) = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1).then(a.0.cmp(&b.0)))
            .expect("simplex is non-empty");
        if v < best_v {
            best_v = v;
            best_x = simplex[i_best].clone();
        }
        if evals >= opts.max_evals {
            break;
        }
        if start_v - best_v <= opts.f_tol && step <= opts.x_tol * 1e3 {
            break;
        }
        // Shrink the restart simplex while progress stalls.
        if start_v - best_v <= opts.f_tol {
            step *= 0.1;
        }
    }

    SimplexResult {
        x: best_x,
        value: best_v,
        evals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let r = minimize(f, &[-1.2, 1.0], &SimplexOptions::default());
        assert!(
            (r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6,
            "{r:?}"
        );
    }

    #[test]
    fn quadratic_in_ten_dimensions() {
        let f = |x: &[f64]| {
            x.iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * (v - 0.5).powi(2))
                .sum()
        };
        let r = minimize(f, &[0.0; 10], &SimplexOptions::default());
        assert!(r.x.iter().all(|v| (v - 0.5).abs() < 1e-6), "{r:?}");
    }

    #[test]
    fn infeasible_region_is_avoided() {
        let f = |x: &[f64]| {
            if x[0] < 0.0 {
                f64::NAN
            } else {
                (x[0] - 0.0).powi(2) + (x[1] - 2.0).powi(2)
            }
        };
        let r = minimize(f, &[1.0, 1.0], &SimplexOptions::default());
        assert!(r.value < 1e-10 && r.x[0] >= 0.0);
    }
}
