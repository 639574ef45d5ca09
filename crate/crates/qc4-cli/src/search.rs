//! Search harness over the mixing polynomial ν: fixed defining sets give
//! the generator pair, trials draw or enumerate ν, and survivors of the
//! dual-containment checks get distance bounds and quantum parameters.
//!
//! Output is a pure function of the configuration: per-trial RNG streams
//! derive from (seed, trial index), the distance budget counts enumeration
//! work rather than wall time, and merging is order-stable. Worker count
//! changes scheduling only.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use qc4::cosets::DefiningSet;
use qc4::cyclic::CyclicCode;
use qc4::distance::{low_weight_search, min_distance_bz, Budget};
use qc4::error::{Error, Result};
use qc4::gf4::Gf4;
use qc4::poly::{format_coeff_string, Poly};
use qc4::qc2::{build_qc_code, Qc2Spec};
use qc4::quantum::hermitian_construction;

use crate::dossier::CodeDossier;

/// Nominal enumeration throughput used to convert the configured seconds
/// into a deterministic work allowance.
pub const NOMINAL_LEAVES_PER_SEC: f64 = 50_000_000.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum NuMode {
    /// Uniform over all 4ⁿ ring elements.
    RandomDense,
    /// At most `max_terms` nonzero coefficients.
    RandomSparse { max_terms: usize },
    /// Trial t uses the t-th polynomial of degree ≤ `max_degree` in counter
    /// order; trials beyond the space are skipped.
    Exhaustive { max_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    /// Coset representatives of the defining set behind g₁.
    pub t1: Vec<usize>,
    /// Coset representatives of the defining set behind g₂.
    pub t2: Vec<usize>,
    pub nu_mode: NuMode,
    pub trials: u64,
    pub seed: u64,
    /// Distance allowance per surviving candidate, in nominal seconds;
    /// converted to a deterministic work budget.
    pub distance_budget_secs: f64,
    /// Discard candidates whose quick upper bound falls below this weight.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_distance: Option<u32>,
    /// Worker threads; defaults to the number of cores. Scheduling plumbing
    /// only, so it is accepted on input but never echoed into results.
    #[serde(skip_serializing, default)]
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub trials: u64,
    pub rejected_symbolic: u64,
    pub rejected_by_target: u64,
    pub duplicates: u64,
    pub accepted: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub summary: SearchSummary,
    pub dossiers: Vec<CodeDossier>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(splitmix64(seed ^ trial.wrapping_mul(0xa076_1d64_78bd_642f)))
}

fn draw_nu(mode: &NuMode, n: usize, seed: u64, trial: u64) -> Option<Poly> {
    match mode {
        NuMode::RandomDense => {
            let mut rng = trial_rng(seed, trial);
            Some(Poly::from_coeffs((0..n).map(|_| rng.gen()).collect()))
        }
        NuMode::RandomSparse { max_terms } => {
            let mut rng = trial_rng(seed, trial);
            let terms = rng.gen_range(1..=(*max_terms).max(1));
            let mut coeffs = vec![Gf4::ZERO; n];
            for _ in 0..terms {
                let pos = rng.gen_range(0..n);
                coeffs[pos] = Gf4::NONZERO[rng.gen_range(0..3)];
            }
            Some(Poly::from_coeffs(coeffs))
        }
        NuMode::Exhaustive { max_degree } => {
            let width = (max_degree + 1).min(n);
            // 4^width candidates; widths ≥ 32 exceed u64 and never run out
            if width < 32 && trial >= 4u64.pow(width as u32) {
                return None;
            }
            let mut coeffs = Vec::with_capacity(width);
            let mut t = trial;
            for _ in 0..width {
                coeffs.push(Gf4::new((t % 4) as u8).expect("digit"));
                t /= 4;
            }
            Some(Poly::from_coeffs(coeffs))
        }
    }
}

enum TrialOutcome {
    RejectedSymbolic,
    RejectedByTarget,
    Skipped,
    Accepted(Box<CodeDossier>),
}

fn run_trial(
    cfg: &SearchConfig,
    g1: &Poly,
    g2: &Poly,
    work_budget: u64,
    trial: u64,
) -> Result<TrialOutcome> {
    let Some(nu) = draw_nu(&cfg.nu_mode, cfg.n, cfg.seed, trial) else {
        return Ok(TrialOutcome::Skipped);
    };
    let spec = Qc2Spec::new(cfg.n, g1, g2, &nu)?;
    let mut dossier = CodeDossier::build(spec.clone())?;
    if !dossier.checks.symbolic.holds {
        return Ok(TrialOutcome::RejectedSymbolic);
    }
    if !dossier.checks.verdicts_agree {
        return Err(Error::Invariant(format!(
            "dual-containment routes disagree for nu = {}",
            format_coeff_string(&nu)
        )));
    }

    let code = build_qc_code(&spec)?;
    if let Some(target) = cfg.min_distance {
        if target > 1 {
            let isd_seed = splitmix64(cfg.seed ^ 0x15d0).wrapping_add(trial);
            if low_weight_search(&code, target - 1, 40, isd_seed)?.is_some() {
                return Ok(TrialOutcome::RejectedByTarget);
            }
        }
    }

    let distance = min_distance_bz(&code, Budget::WorkUnits { limit: work_budget })?
        .normalized_for_determinism();
    if let Some(target) = cfg.min_distance {
        if distance.bound.upper() < target {
            return Ok(TrialOutcome::RejectedByTarget);
        }
    }
    if distance.exact().is_some() && dossier.checks.dual_containing {
        let n = code.length();
        let k = code.dimension();
        if 2 * k >= n {
            let label = format!(
                "qc[{}] g1={} g2={} nu={}",
                n,
                format_coeff_string(spec.g1()),
                format_coeff_string(spec.g2()),
                format_coeff_string(&nu)
            );
            dossier.quantum =
                Some(hermitian_construction(&code, true, &distance, &label)?);
        }
    }
    dossier.classical.distance = Some(distance);
    Ok(TrialOutcome::Accepted(Box::new(dossier)))
}

/// Runs the configured number of trials and returns accepted dossiers in
/// trial order, first occurrence per distinct ν.
pub fn search_nu(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let t1 = DefiningSet::from_reps(cfg.n, &cfg.t1)?;
    let t2 = DefiningSet::from_reps(cfg.n, &cfg.t2)?;
    for (name, t) in [("t1", &t1), ("t2", &t2)] {
        if !t.is_dual_containing() {
            return Err(Error::Contract(format!(
                "defining set {name} (reps {:?}) is not dual-containing: \
                 it meets its own -2 multiple, so no nu can make the construction work",
                t.reps()
            )));
        }
    }
    let g1 = CyclicCode::from_defining_set(&t1)?.gen_poly().clone();
    let g2 = CyclicCode::from_defining_set(&t2)?.gen_poly().clone();
    let work_budget = (cfg.distance_budget_secs * NOMINAL_LEAVES_PER_SEC).max(1.0) as u64;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::Contract(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<TrialOutcome>> = pool.install(|| {
        (0..cfg.trials)
            .into_par_iter()
            .map(|trial| run_trial(cfg, &g1, &g2, work_budget, trial))
            .collect()
    });

    let mut summary = SearchSummary {
        trials: cfg.trials,
        ..SearchSummary::default()
    };
    let mut seen = std::collections::HashSet::new();
    let mut dossiers = Vec::new();
    for outcome in outcomes {
        match outcome? {
            TrialOutcome::RejectedSymbolic => summary.rejected_symbolic += 1,
            TrialOutcome::RejectedByTarget => summary.rejected_by_target += 1,
            TrialOutcome::Skipped => {}
            TrialOutcome::Accepted(dossier) => {
                let key = format_coeff_string(dossier.spec.nu());
                if seen.insert(key) {
                    summary.accepted += 1;
                    dossiers.push(dossier.normalized_for_determinism());
                } else {
                    summary.duplicates += 1;
                }
            }
        }
    }
    Ok(SearchOutcome {
        config: cfg.clone(),
        summary,
        dossiers,
    })
}
