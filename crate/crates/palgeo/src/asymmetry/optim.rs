//! Small fixed-dimension Nelder-Mead used for local refinement.

pub(crate) struct NelderMead {
    pub max_evals: usize,
    pub ftol: f64,
}

pub(crate) struct NmOutcome<const D: usize> {
    pub point: [f64; D],
    pub value: f64,
    pub evals: usize,
    pub converged: bool,
}

impl NelderMead {
    /// Minimizes `f` from `start`, with per-coordinate initial simplex
    /// offsets `scale`. Standard reflect/expand/contract/shrink moves.
    pub fn minimize<const D: usize>(
        &self,
        mut f: impl FnMut(&[f64; D]) -> f64,
        start: [f64; D],
        scale: [f64; D],
    ) -> NmOutcome<D> {
        let mut evals = 0usize;
        let mut eval = |x: &[f64; D], evals: &mut usize| {
            *evals += 1;
            f(x)
        };

        let mut simplex: Vec<[f64; D]> = Vec::with_capacity(D + 1);
        simplex.push(start);
        for d in 0..D {
            let mut v = start;
            v[d] += if scale[d] != 0.0 { scale[d] } else { 1e-3 };
            simplex.push(v);
        }
        let mut values: Vec<f64> = simplex.iter().map(|x| eval(x, &mut evals)).collect();

        let mut converged = false;
        while evals < self.max_evals {
            // order ascending by value
            let mut idx: Vec<usize> = (0..=D).collect();
            idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
            let reorder: Vec<[f64; D]> = idx.iter().map(|&i| simplex[i]).collect();
            let revals: Vec<f64> = idx.iter().map(|&i| values[i]).collect();
            simplex = reorder;
            values = revals;

            let spread = values[D] - values[0];
            if spread <= self.ftol * values[0].abs().max(1.0) * 1e0 || spread <= self.ftol {
                converged = true;
                break;
            }

            // centroid of all but worst
            let mut cen = [0.0; D];
            for v in simplex.iter().take(D) {
                for d in 0..D {
                    cen[d] += v[d];
                }
            }
            for c in cen.iter_mut() {
                *c /= D as f64;
            }

            let lerp = |a: &[f64; D], b: &[f64; D], t: f64| {
                let mut out = [0.0; D];
                for d in 0..D {
                    out[d] = a[d] + t * (b[d] - a[d]);
                }
                out
            };

            let reflected = lerp(&cen, &simplex[D], -1.0);
            let fr = eval(&reflected, &mut evals);
            if fr < values[0] {
                let expanded = lerp(&cen, &simplex[D], -2.0);
                let fe = eval(&expanded, &mut evals);
                if fe < fr {
                    simplex[D] = expanded;
                    values[D] = fe;
                } else {
                    simplex[D] = reflected;
                    values[D] = fr;
                }
            } else if fr < values[D - 1] {
                simplex[D] = reflected;
                values[D] = fr;
            } else {
                let contracted = if fr < values[D] {
                    lerp(&cen, &simplex[D], -0.5)
                } else {
                    lerp(&cen, &simplex[D], 0.5)
                };
                let fc = eval(&contracted, &mut evals);
                if fc < values[D].min(fr) {
                    simplex[D] = contracted;
                    values[D] = fc;
                } else {
                    // shrink toward best
                    for i in 1..=D {
                        simplex[i] = lerp(&simplex[0], &simplex[i], 0.5);
                        values[i] = eval(&simplex[i], &mut evals);
                    }
                }
            }
        }

        let mut best = 0;
        for i in 1..=D {
            if values[i] < values[best] {
                best = i;
            }
        }
        NmOutcome {
            point: simplex[best],
            value: values[best],
            evals,
            converged,
        }
    }
}
