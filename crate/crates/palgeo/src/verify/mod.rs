//! Inequality suites over single bodies and corpora, the sharpness
//! study on the isosceles family, and empirical constant scans.

pub mod constants;

use crate::asymmetry::{alpha, fraenkel, AsymmetryResult, OptimizerConfig};
use crate::deficit::{profile, refined_eta_lower_bound, DeficitProfile};
use crate::distance::hausdorff;
use crate::error::{Error, Result};
use crate::indisk::chebyshev_indisk;
use crate::polygon::ConvexPolygon;
use crate::shapes::{self, CorpusKind};
use crate::triangle::{
    aligned_equilateral, body_triangle_hausdorff_bound, circumscribed_triangle,
    disk_triangle_hausdorff, equilateral, triangle_metrics, EquilateralPlacement,
};
use rayon::prelude::*;
use serde::Serialize;

/// Relative tolerance of closed-form rows.
const TOL_CLOSED: f64 = 1e-9;
/// Relative tolerance of rows involving optimizer output.
const TOL_ASYM: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

/// One verified inequality: passes iff `slack >= -tolerance`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
}

impl CheckRow {
    fn ge(name: &str, lhs: f64, rhs: f64, tol_rel: f64) -> CheckRow {
        let tolerance = tol_rel * lhs.abs().max(rhs.abs()).max(1.0);
        let slack = lhs - rhs;
        CheckRow {
            name: name.to_string(),
            lhs,
            rhs,
            slack,
            tolerance,
            status: if slack >= -tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        }
    }

    fn eq(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> CheckRow {
        let slack = -(lhs - rhs).abs();
        CheckRow {
            name: name.to_string(),
            lhs,
            rhs,
            slack,
            tolerance,
            status: if slack >= -tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        }
    }

    fn skipped(name: &str, reason: &str) -> CheckRow {
        CheckRow {
            name: name.to_string(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: 0.0,
            tolerance: 0.0,
            status: CheckStatus::Skipped(reason.to_string()),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// All checks of one body.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub body_id: String,
    pub checks: Vec<CheckRow>,
    pub tolerance_used: f64,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        !self.checks.iter().any(|c| c.failed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|c| c.failed())
    }
}

/// Full per-body analysis: deficit profile, asymmetries, bounds, and the
/// check report assembled from them.
#[derive(Clone, Debug, Serialize)]
pub struct BodyAnalysis {
    pub id: String,
    pub body: ConvexPolygon,
    pub profile: DeficitProfile,
    pub alpha: AsymmetryResult,
    pub fraenkel: AsymmetryResult,
    pub beta: f64,
    pub asymmetry_upper_bound: Option<f64>,
    pub refined_eta_bound: Option<f64>,
    pub report: CheckReport,
}

/// Runs every applicable inequality on one body.
pub fn check_all(k: &ConvexPolygon, cfg: &OptimizerConfig) -> CheckReport {
    analyze_body("body", k, cfg).report
}

/// Like [`check_all`] but retains all measured quantities.
pub fn analyze_body(id: &str, k: &ConvexPolygon, cfg: &OptimizerConfig) -> BodyAnalysis {
    let prof = profile(k).expect("valid body has a profile");
    let w = prof.width;
    let r = prof.inradius;
    let deficit = prof.pal_deficit;
    let eta = prof.eta;

    let a = alpha(k, cfg);
    let f = fraenkel(k, cfg);
    let beta_cons = (a.value - a.certificate_gap).min(constants::DISK_ALPHA);

    let mut checks: Vec<CheckRow> = Vec::with_capacity(20);
    checks.push(CheckRow::ge("pal", deficit, 0.0, TOL_CLOSED));
    checks.push(CheckRow::ge("teo1", deficit, constants::c1() * eta, TOL_CLOSED));
    checks.push(CheckRow::ge("teo_rw_upper", 0.5, r / w, TOL_CLOSED));
    checks.push(CheckRow::ge("teo_rw_lower", r / w, 1.0 / 3.0, TOL_CLOSED));
    checks.push(CheckRow::ge(
        "lowerphi",
        prof.area / (w * w),
        prof.phi_bound,
        TOL_CLOSED,
    ));
    checks.push(CheckRow::ge(
        "lowerpsi",
        prof.area / (w * w),
        prof.psi_bound,
        TOL_CLOSED,
    ));
    checks.push(CheckRow::ge(
        "psi_ge_phi",
        prof.psi_bound,
        prof.phi_bound,
        TOL_CLOSED,
    ));
    checks.push(CheckRow::ge("m_ge_w_minus_r", prof.m, w - r, TOL_CLOSED));

    // circumscribed-triangle rows need an acute contact triple away from
    // the diametral boundary r/w = 1/2
    let disk = chebyshev_indisk(k);
    let near_boundary = r / w >= 0.5 - 1e-9;
    let t_k = if near_boundary {
        None
    } else {
        circumscribed_triangle(k, &disk).ok()
    };
    let skip_reason = if near_boundary {
        "r/w at the diametral boundary"
    } else {
        "no acute contact triple"
    };

    let mut upper_bound = None;
    let mut refined_bound = None;
    match &t_k {
        Some(t) => {
            let m = triangle_metrics(t).expect("tangent triangle");
            let refined = refined_eta_lower_bound(k).expect("triangle exists");
            refined_bound = Some(refined);
            checks.push(CheckRow::ge("ratio_rw2better", eta, refined, TOL_CLOSED));
            checks.push(CheckRow::ge("ratio_rw2better_nonneg", refined, 0.0, TOL_CLOSED));

            let d_kt = hausdorff(k, t);
            let convex_bound = body_triangle_hausdorff_bound(&m, w);
            checks.push(CheckRow::ge("lem_convex", convex_bound, d_kt, TOL_CLOSED));

            // aligned equilateral of the body width against T_K
            match aligned_equilateral(t, w) {
                Ok(e) => {
                    let d_te = hausdorff(t, &e);
                    let tri_bound = 3f64.sqrt() * m.width / m.angles[2].tan() - w;
                    checks.push(CheckRow::ge("lem_triangle", tri_bound, d_te, TOL_CLOSED));
                }
                Err(_) => checks.push(CheckRow::skipped("lem_triangle", "width exceeds T_K")),
            }

            let bound = (m.sides[0] - m.sides[2]) / w
                + m.sides[2] * (m.width - w) / (w * m.width)
                + (3f64.sqrt() / m.angles[2].tan()) * (m.width / w)
                - 1.0;
            upper_bound = Some(bound);
            checks.push(CheckRow::ge("asy_convex", bound, a.value, TOL_ASYM));
        }
        None => {
            for name in [
                "ratio_rw2better",
                "ratio_rw2better_nonneg",
                "lem_convex",
                "lem_triangle",
                "asy_convex",
            ] {
                checks.push(CheckRow::skipped(name, skip_reason));
            }
        }
    }

    // disk closed form applies when the body is a disk stand-in
    if prof.m - r <= 2e-3 * r {
        let e = equilateral(&EquilateralPlacement::new(disk.center, 0.0, w));
        let measured = hausdorff(k, &e);
        let formula = disk_triangle_hausdorff(r, w);
        checks.push(CheckRow::eq(
            "tbdist",
            measured,
            formula,
            2e-3 * w + (prof.m - r),
        ));
    } else {
        checks.push(CheckRow::skipped("tbdist", "not a disk stand-in"));
    }

    // quantitative rows; the optimizer reports upper bounds, so the
    // certificate gap is subtracted on the asymmetry side
    let a_cons = a.value - a.certificate_gap;
    let f_cons = f.value - f.certificate_gap;
    checks.push(CheckRow::ge("teo2", deficit, constants::c2() * a_cons, TOL_ASYM));
    checks.push(CheckRow::ge("teo3", deficit, constants::c3() * f_cons, TOL_ASYM));
    checks.push(CheckRow::ge(
        "r_omega_quant",
        eta,
        constants::c4() * beta_cons,
        TOL_ASYM,
    ));
    checks.push(CheckRow::ge(
        "equiv_upper",
        constants::equivalence_upper() * a.value,
        f_cons,
        TOL_ASYM,
    ));
    checks.push(CheckRow::ge(
        "equiv_lower",
        f.value,
        a_cons / (25.0 * 5f64.sqrt()),
        TOL_ASYM,
    ));

    let beta_value = a.value.min(constants::DISK_ALPHA);
    BodyAnalysis {
        id: id.to_string(),
        body: k.clone(),
        profile: prof,
        alpha: a,
        fraenkel: f,
        beta: beta_value,
        asymmetry_upper_bound: upper_bound,
        refined_eta_bound: refined_bound,
        report: CheckReport {
            body_id: id.to_string(),
            checks,
            tolerance_used: TOL_CLOSED,
        },
    }
}

/// Corpus description for verification runs.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub n: usize,
    pub seed: u64,
}

/// Analyzes every body of a corpus, in parallel, order-stable by id.
pub fn corpus_analyze(spec: &CorpusSpec, cfg: &OptimizerConfig) -> Vec<BodyAnalysis> {
    let bodies = shapes::corpus(spec.kind, spec.n, spec.seed);
    bodies
        .par_iter()
        .map(|(id, k)| analyze_body(id, k, cfg))
        .collect()
}

/// Check reports for a corpus (see [`corpus_analyze`]).
pub fn corpus_verify(spec: &CorpusSpec, cfg: &OptimizerConfig) -> Vec<CheckReport> {
    corpus_analyze(spec, cfg).into_iter().map(|a| a.report).collect()
}

/// The mixed corpus used by the acceptance suites: `n_random` random
/// hulls plus all named families.
pub fn standard_corpus(n_random: usize, seed: u64) -> Vec<(String, ConvexPolygon)> {
    let mut out = shapes::corpus(CorpusKind::Random, n_random, seed);
    out.extend(shapes::corpus(CorpusKind::RegularNgons, 62, seed));
    out.extend(shapes::corpus(CorpusKind::Rectangles, 50, seed.wrapping_add(1)));
    out.extend(shapes::corpus(CorpusKind::Triangles, 50, seed.wrapping_add(2)));
    out.extend(shapes::corpus(CorpusKind::Isosceles, 20, seed.wrapping_add(3)));
    out
}

/// Analyzes an explicit list of bodies in parallel.
pub fn analyze_many(
    bodies: &[(String, ConvexPolygon)],
    cfg: &OptimizerConfig,
) -> Vec<BodyAnalysis> {
    bodies
        .par_iter()
        .map(|(id, k)| analyze_body(id, k, cfg))
        .collect()
}

// ---------------------------------------------------------------------
// sharpness study

/// Measured decay of the deficit, `eta`, and both asymmetries along the
/// isosceles family, with fitted log-log exponents.
#[derive(Clone, Debug, Serialize)]
pub struct SharpnessReport {
    pub epsilons: Vec<f64>,
    pub deficits: Vec<f64>,
    pub etas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub fraenkels: Vec<f64>,
    /// deficit / eta per member; tends to `2 sqrt3`.
    pub ratios_eta: Vec<f64>,
    /// deficit / alpha per member; tends to 1.
    pub ratios_alpha: Vec<f64>,
    pub ratios_fraenkel: Vec<f64>,
    /// Log-log slopes of (eta, alpha, fraenkel) against the deficit.
    pub fitted_exponents: (f64, f64, f64),
    /// deficit / eta at the smallest family parameter.
    pub limit_eta_ratio: f64,
}

/// Runs the sharpness study for a strictly decreasing list of family
/// parameters in `(0, 0.2]`.
pub fn sharpness_study(eps_list: &[f64], cfg: &OptimizerConfig) -> Result<SharpnessReport> {
    if eps_list.is_empty() {
        return Err(Error::Domain("empty parameter list".into()));
    }
    for w in eps_list.windows(2) {
        if w[1] >= w[0] {
            return Err(Error::Domain("parameters must be strictly decreasing".into()));
        }
    }
    if eps_list.iter().any(|&e| !(e > 0.0 && e <= 0.2)) {
        return Err(Error::Domain("parameters must lie in (0, 0.2]".into()));
    }

    let rows: Vec<(f64, f64, f64, f64)> = eps_list
        .par_iter()
        .map(|&eps| {
            let k = shapes::isosceles_family(eps).expect("validated eps");
            let prof = profile(&k).expect("triangle profile");
            let a = alpha(&k, cfg).value;
            let f = fraenkel(&k, cfg).value;
            (prof.pal_deficit, prof.eta, a, f)
        })
        .collect();

    let deficits: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let etas: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let alphas: Vec<f64> = rows.iter().map(|r| r.2).collect();
    let fraenkels: Vec<f64> = rows.iter().map(|r| r.3).collect();

    let slope = |ys: &[f64]| -> f64 {
        let xs: Vec<f64> = deficits.iter().map(|d| d.ln()).collect();
        let ls: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ls.iter().sum::<f64>() / n;
        let cov: f64 = xs.iter().zip(&ls).map(|(x, y)| (x - mx) * (y - my)).sum();
        let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        cov / var
    };

    let ratios_eta: Vec<f64> = deficits.iter().zip(&etas).map(|(d, e)| d / e).collect();
    let ratios_alpha: Vec<f64> = deficits.iter().zip(&alphas).map(|(d, a)| d / a).collect();
    let ratios_fraenkel: Vec<f64> = deficits.iter().zip(&fraenkels).map(|(d, f)| d / f).collect();

    Ok(SharpnessReport {
        fitted_exponents: (slope(&etas), slope(&alphas), slope(&fraenkels)),
        limit_eta_ratio: *ratios_eta.last().expect("nonempty"),
        epsilons: eps_list.to_vec(),
        deficits,
        etas,
        alphas,
        fraenkels,
        ratios_eta,
        ratios_alpha,
        ratios_fraenkel,
    })
}

// ---------------------------------------------------------------------
// constant scan

/// Empirical infima of the deficit/asymmetry ratios over a corpus.
/// Bodies whose denominator is below `10 * tol_opt` are excluded.
#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub corpus: String,
    pub seed: u64,
    pub n: usize,
    pub excluded: usize,
    pub infimum_deficit_over_eta: Option<f64>,
    pub infimum_deficit_over_alpha: Option<f64>,
    pub infimum_deficit_over_fraenkel: Option<f64>,
    pub infimum_eta_over_beta: Option<f64>,
    pub constant_c1: f64,
    pub constant_c2: f64,
    pub constant_c3: f64,
    pub constant_c4: f64,
}

impl ScanSummary {
    /// True when every measured infimum sits above its explicit constant.
    pub fn above_constants(&self) -> bool {
        self.infimum_deficit_over_eta.map_or(true, |v| v >= self.constant_c1)
            && self.infimum_deficit_over_alpha.map_or(true, |v| v >= self.constant_c2)
            && self
                .infimum_deficit_over_fraenkel
                .map_or(true, |v| v >= self.constant_c3)
            && self.infimum_eta_over_beta.map_or(true, |v| v >= self.constant_c4)
    }
}

pub fn constant_scan(spec: &CorpusSpec, cfg: &OptimizerConfig) -> ScanSummary {
    let analyses = corpus_analyze(spec, cfg);
    scan_from_analyses(&analyses, spec, cfg)
}

/// Scan over precomputed analyses (avoids re-running the optimizer).
pub fn scan_from_analyses(
    analyses: &[BodyAnalysis],
    spec: &CorpusSpec,
    cfg: &OptimizerConfig,
) -> ScanSummary {
    let floor = 10.0 * cfg.tol_opt;
    let mut excluded = 0usize;
    let mut inf_eta: Option<f64> = None;
    let mut inf_alpha: Option<f64> = None;
    let mut inf_fraenkel: Option<f64> = None;
    let mut inf_beta: Option<f64> = None;
    let fold = |slot: &mut Option<f64>, v: f64| {
        *slot = Some(slot.map_or(v, |cur| cur.min(v)));
    };
    for a in analyses {
        let d = a.profile.pal_deficit;
        let mut any = false;
        if a.profile.eta >= floor {
            fold(&mut inf_eta, d / a.profile.eta);
            any = true;
        }
        if a.alpha.value >= floor {
            fold(&mut inf_alpha, d / a.alpha.value);
            any = true;
        }
        if a.fraenkel.value >= floor {
            fold(&mut inf_fraenkel, d / a.fraenkel.value);
            any = true;
        }
        if a.beta >= floor {
            fold(&mut inf_beta, a.profile.eta / a.beta);
            any = true;
        }
        if !any {
            excluded += 1;
        }
    }
    ScanSummary {
        corpus: spec.kind.name().to_string(),
        seed: spec.seed,
        n: spec.n,
        excluded,
        infimum_deficit_over_eta: inf_eta,
        infimum_deficit_over_alpha: inf_alpha,
        infimum_deficit_over_fraenkel: inf_fraenkel,
        infimum_eta_over_beta: inf_beta,
        constant_c1: constants::c1(),
        constant_c2: constants::c2(),
        constant_c3: constants::c3(),
        constant_c4: constants::c4(),
    }
}

// ---------------------------------------------------------------------
// artifacts

/// Failure record for the JSON summary.
#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub body_id: String,
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// JSON summary of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub corpus: String,
    pub seed: u64,
    pub n: usize,
    pub bodies: usize,
    pub checks: usize,
    pub failures: Vec<FailureRecord>,
    pub empirical_infima: InfimaRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfimaRecord {
    pub deficit_over_eta: Option<f64>,
    pub deficit_over_alpha: Option<f64>,
    pub deficit_over_fraenkel: Option<f64>,
    pub eta_over_beta: Option<f64>,
}

pub fn summarize(analyses: &[BodyAnalysis], spec: &CorpusSpec, cfg: &OptimizerConfig) -> VerifySummary {
    let scan = scan_from_analyses(analyses, spec, cfg);
    let failures: Vec<FailureRecord> = analyses
        .iter()
        .flat_map(|a| {
            a.report.failures().map(|c| FailureRecord {
                body_id: a.id.clone(),
                check: c.name.clone(),
                lhs: c.lhs,
                rhs: c.rhs,
                slack: c.slack,
            })
        })
        .collect();
    VerifySummary {
        corpus: spec.kind.name().to_string(),
        seed: spec.seed,
        n: spec.n,
        bodies: analyses.len(),
        checks: analyses.iter().map(|a| a.report.checks.len()).sum(),
        failures,
        empirical_infima: InfimaRecord {
            deficit_over_eta: scan.infimum_deficit_over_eta,
            deficit_over_alpha: scan.infimum_deficit_over_alpha,
            deficit_over_fraenkel: scan.infimum_deficit_over_fraenkel,
            eta_over_beta: scan.infimum_eta_over_beta,
        },
    }
}

/// One CSV row per check: `body_id,check,lhs,rhs,slack,status`.
pub fn checks_csv(reports: &[CheckReport]) -> String {
    use crate::report::f17;
    let mut out = String::from("body_id,check,lhs,rhs,slack,status\n");
    for r in reports {
        for c in &r.checks {
            let status = match &c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Skipped(_) => "skip",
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.body_id,
                c.name,
                f17(c.lhs),
                f17(c.rhs),
                f17(c.slack),
                status
            ));
        }
    }
    out
}

/// Writes failing bodies as polygon JSON reproducers; returns the paths.
pub fn dump_failures(
    analyses: &[BodyAnalysis],
    dir: &std::path::Path,
) -> Result<Vec<std::path::PathBuf>> {
    let mut paths = Vec::new();
    for a in analyses {
        if !a.report.all_pass() {
            let path = dir.join(format!("{}.reproducer.json", a.id));
            shapes::to_file(&a.body, &path)?;
            paths.push(path);
        }
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deficit::INV_SQRT3;

    fn quick_cfg() -> OptimizerConfig {
        OptimizerConfig {
            theta_samples: 45,
            translation_grid: 13,
            refine_iterations: 120,
            tol_opt: 1e-9,
        }
    }

    #[test]
    fn equilateral_all_pass_with_zero_deficit() {
        let e = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let a = analyze_body("equilateral", &e, &quick_cfg());
        assert!(a.report.all_pass(), "failures: {:?}", a.report.failures().collect::<Vec<_>>());
        assert!(a.profile.pal_deficit.abs() < 1e-11);
        let teo1 = a.report.checks.iter().find(|c| c.name == "teo1").unwrap();
        assert!(teo1.lhs.abs() < 1e-11 && teo1.rhs.abs() < 1e-11);
    }

    #[test]
    fn disk_standin_rows() {
        let d = shapes::regular_ngon(256, 0.5).unwrap();
        let a = analyze_body("disk", &d, &quick_cfg());
        assert!(a.report.all_pass(), "failures: {:?}", a.report.failures().collect::<Vec<_>>());
        let teo1 = a.report.checks.iter().find(|c| c.name == "teo1").unwrap();
        assert!((teo1.lhs - (std::f64::consts::FRAC_PI_4 - INV_SQRT3)).abs() < 1e-3);
        assert!((teo1.rhs - constants::c1() / 6.0).abs() < 1e-3);
        // tbdist row is active for the stand-in
        let tb = a.report.checks.iter().find(|c| c.name == "tbdist").unwrap();
        assert_eq!(tb.status, CheckStatus::Pass);
        // circumscribed-triangle rows are skipped at the boundary
        let rw = a.report.checks.iter().find(|c| c.name == "ratio_rw2better").unwrap();
        assert!(matches!(rw.status, CheckStatus::Skipped(_)));
    }

    #[test]
    fn family_member_passes() {
        let k = shapes::isosceles_family(0.01).unwrap();
        let a = analyze_body("keps", &k, &quick_cfg());
        assert!(a.report.all_pass(), "failures: {:?}", a.report.failures().collect::<Vec<_>>());
        let teo2 = a.report.checks.iter().find(|c| c.name == "teo2").unwrap();
        assert!((teo2.lhs - 0.01).abs() < 1e-10);
    }

    #[test]
    fn small_random_corpus_passes() {
        let spec = CorpusSpec {
            kind: CorpusKind::Random,
            n: 12,
            seed: 7,
        };
        let analyses = corpus_analyze(&spec, &quick_cfg());
        assert_eq!(analyses.len(), 12);
        for a in &analyses {
            assert!(
                a.report.all_pass(),
                "body {} failures: {:?}",
                a.id,
                a.report.failures().collect::<Vec<_>>()
            );
        }
        // summaries and CSV are well formed
        let summary = summarize(&analyses, &spec, &quick_cfg());
        assert!(summary.failures.is_empty());
        let reports: Vec<CheckReport> = analyses.iter().map(|a| a.report.clone()).collect();
        let csv = checks_csv(&reports);
        assert!(csv.starts_with("body_id,check,lhs,rhs,slack,status\n"));
        assert!(csv.lines().count() > 12);
    }

    #[test]
    fn sharpness_validation() {
        assert!(sharpness_study(&[], &quick_cfg()).is_err());
        assert!(sharpness_study(&[0.1, 0.1], &quick_cfg()).is_err());
        assert!(sharpness_study(&[0.3, 0.1], &quick_cfg()).is_err());
        assert!(sharpness_study(&[0.1, -0.05], &quick_cfg()).is_err());
    }

    #[test]
    fn sharpness_small_run() {
        let r = sharpness_study(&[0.1, 0.05, 0.02], &quick_cfg()).unwrap();
        for (d, e) in r.deficits.iter().zip(&r.epsilons) {
            assert!((d - e).abs() < 1e-12);
        }
        let (exp_eta, exp_alpha, exp_fraenkel) = r.fitted_exponents;
        assert!((exp_eta - 1.0).abs() < 0.1, "eta exponent {exp_eta}");
        assert!((exp_alpha - 1.0).abs() < 0.1, "alpha exponent {exp_alpha}");
        assert!((exp_fraenkel - 1.0).abs() < 0.1);
    }
}
