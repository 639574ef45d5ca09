//! Persistence of per-code results: spec, dimensions, verdicts, distances,
//! and derived quantum parameters, as one JSON file per code. Loading
//! re-derives every cheap verdict and refuses files that no longer agree
//! with what the spec produces.

use std::path::Path;

use serde::{Deserialize, Serialize};

use qc4::distance::DistanceResult;
use qc4::error::{Error, Result};
use qc4::qc2::{
    build_qc_code, dual_containing_matrix, dual_containing_symbolic, dual_qc_code,
    DualContainingVerdict, Qc2Spec,
};
use qc4::quantum::QuantumParams;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub length: usize,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distance: Option<DistanceResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChecksSummary {
    pub symbolic: DualContainingVerdict,
    pub matrix_oracle: bool,
    /// The two routes must agree; recorded so a stored file can be audited.
    pub verdicts_agree: bool,
    /// Final user-facing verdict. The matrix oracle wins on disagreement.
    pub dual_containing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeDossier {
    pub spec: Qc2Spec,
    pub classical: CodeSummary,
    pub dual: CodeSummary,
    pub checks: ChecksSummary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub quantum: Option<QuantumParams>,
}

fn compute_checks(spec: &Qc2Spec) -> Result<(ChecksSummary, CodeSummary, CodeSummary)> {
    let code = build_qc_code(spec)?;
    let dual = dual_qc_code(spec)?;
    let symbolic = dual_containing_symbolic(spec)?;
    let matrix_oracle = dual.dimension() == 2 * spec.n() - code.dimension()
        && dual_containing_matrix(&code, &dual)?;
    let checks = ChecksSummary {
        symbolic,
        matrix_oracle,
        verdicts_agree: symbolic.holds == matrix_oracle,
        dual_containing: matrix_oracle,
    };
    let classical = CodeSummary {
        length: code.length(),
        dimension: code.dimension(),
        distance: None,
    };
    let dual_summary = CodeSummary {
        length: dual.length(),
        dimension: dual.dimension(),
        distance: None,
    };
    Ok((checks, classical, dual_summary))
}

impl CodeDossier {
    /// Builds a fresh dossier: dimensions and verdicts, no distances yet.
    pub fn build(spec: Qc2Spec) -> Result<CodeDossier> {
        let (checks, classical, dual) = compute_checks(&spec)?;
        Ok(CodeDossier {
            spec,
            classical,
            dual,
            checks,
            quantum: None,
        })
    }

    /// Recomputes everything derivable from the spec and compares it with
    /// the stored fields; any drift makes the file unusable.
    pub fn revalidate(&self) -> Result<()> {
        let (checks, classical, dual) = compute_checks(&self.spec)?;
        if checks != self.checks {
            return Err(Error::Contract(
                "stored verdicts disagree with recomputation".into(),
            ));
        }
        if classical.length != self.classical.length
            || classical.dimension != self.classical.dimension
            || dual.length != self.dual.length
            || dual.dimension != self.dual.dimension
        {
            return Err(Error::Contract(
                "stored dimensions disagree with recomputation".into(),
            ));
        }
        if let Some(d) = &self.classical.distance {
            if d.bound.lower() > d.bound.upper() {
                return Err(Error::Contract("distance bounds are inverted".into()));
            }
        }
        if let Some(q) = &self.quantum {
            if !self.checks.dual_containing {
                return Err(Error::Contract(
                    "quantum parameters stored without a dual-containing verdict".into(),
                ));
            }
            let n = self.classical.length;
            let k = self.classical.dimension;
            if q.n as usize != n || (q.k as usize) != 2 * k - n {
                return Err(Error::Contract(format!(
                    "quantum parameters [[{}, {}]] do not match the [{}, {}] classical code",
                    q.n, q.k, n, k
                )));
            }
            match self.classical.distance.as_ref().and_then(|d| d.exact()) {
                Some(d) if d == q.d => {}
                _ => {
                    return Err(Error::Contract(
                        "quantum distance is not backed by an exact classical distance".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut json = serde_json::to_string_pretty(self)
            .map_err(|e| Error::Contract(format!("serialization failed: {e}")))?;
        json.push('\n');
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<CodeDossier> {
        let text = std::fs::read_to_string(path)?;
        let dossier: CodeDossier = serde_json::from_str(&text).map_err(|e| Error::Parse {
            position: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        dossier.revalidate()?;
        Ok(dossier)
    }

    /// Clears volatile timing everywhere so serialized output is repeatable.
    pub fn normalized_for_determinism(mut self) -> CodeDossier {
        self.classical.distance = self
            .classical
            .distance
            .map(DistanceResult::normalized_for_determinism);
        self.dual.distance = self
            .dual
            .distance
            .map(DistanceResult::normalized_for_determinism);
        self
    }
}
