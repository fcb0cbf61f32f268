//! JSON wire formats.
//!
//! Matrices travel as `{ "dim": n, "re": [...], "im": [...] }` with row-major
//! entries; states add `dimA`, `dimB` and `label`. Matrix entries keep full
//! precision so exported states re-validate on import. Reported scalars are
//! rounded to 12 significant digits.

use serde::{Deserialize, Serialize};

use choimap_core::detection::{DetectionReport, PositivityVerdict};
use choimap_core::maps::PositivityConditions;
use choimap_core::{BipartiteState, ComplexMatrix, MapParams};

use crate::output::round_sig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixJson {
            dim: m.dim(),
            re: m.re(),
            im: m.im(),
        }
    }
}

impl TryFrom<&MatrixJson> for ComplexMatrix {
    type Error = choimap_core::Error;

    fn try_from(m: &MatrixJson) -> Result<Self, Self::Error> {
        ComplexMatrix::from_parts(m.dim, &m.re, &m.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    #[serde(flatten)]
    pub matrix: MatrixJson,
    #[serde(rename = "dimA")]
    pub dim_a: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    pub label: String,
}

impl From<&BipartiteState> for StateJson {
    fn from(s: &BipartiteState) -> Self {
        StateJson {
            matrix: s.matrix().into(),
            dim_a: s.dim_a(),
            dim_b: s.dim_b(),
            label: s.label().to_owned(),
        }
    }
}

impl TryFrom<&StateJson> for BipartiteState {
    type Error = choimap_core::Error;

    fn try_from(s: &StateJson) -> Result<Self, Self::Error> {
        let m = ComplexMatrix::try_from(&s.matrix)?;
        BipartiteState::new(s.dim_a, s.dim_b, m, s.label.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<&MapParams> for MapJson {
    fn from(p: &MapParams) -> Self {
        let [w, x, y, z] = p.as_array();
        MapJson { w, x, y, z }
    }
}

impl TryFrom<MapJson> for MapParams {
    type Error = choimap_core::Error;

    fn try_from(m: MapJson) -> Result<Self, Self::Error> {
        MapParams::new(m.w, m.x, m.y, m.z)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub state: String,
    pub map: MapJson,
    pub min_eig: f64,
    pub lambda: Option<f64>,
    pub ppt: bool,
    pub class: String,
    #[serde(default)]
    pub boundary: bool,
}

impl From<&DetectionReport> for ReportJson {
    fn from(r: &DetectionReport) -> Self {
        ReportJson {
            state: r.state_label.clone(),
            map: (&r.map).into(),
            min_eig: round_sig(r.min_eig_mapped),
            lambda: r.lambda_analytic.map(round_sig),
            ppt: r.ppt,
            class: r.classification.as_str().to_owned(),
            boundary: r.boundary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionsJson {
    pub w_ge_1: bool,
    pub y_ge_1: bool,
    pub xz_ge_1: bool,
}

impl From<PositivityConditions> for ConditionsJson {
    fn from(c: PositivityConditions) -> Self {
        ConditionsJson {
            w_ge_1: c.w_at_least_one,
            y_ge_1: c.y_at_least_one,
            xz_ge_1: c.xz_at_least_one,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub map: MapJson,
    pub samples: usize,
    pub min_observed: f64,
    pub counterexample: Option<MatrixJson>,
    pub conditions_met: ConditionsJson,
}

impl From<&PositivityVerdict> for VerdictJson {
    fn from(v: &PositivityVerdict) -> Self {
        VerdictJson {
            map: (&v.map).into(),
            samples: v.samples,
            min_observed: round_sig(v.min_observed),
            counterexample: v.counterexample.as_ref().map(MatrixJson::from),
            conditions_met: v.conditions.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PptJson {
    pub state: StateJson,
    pub ppt: bool,
    pub min_eig_pt: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use choimap_core::detection::detect;
    use choimap_core::states::{build_rho_beta_gamma, build_sigma_b, HorodeckiParams, RhoFamilyParams};
    use choimap_core::Tolerance;

    #[test]
    fn report_schema_fields() {
        let state = build_rho_beta_gamma(RhoFamilyParams::new(2.0, 4.0).unwrap());
        let report = detect(&state, &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        let value = serde_json::to_value(ReportJson::from(&report)).unwrap();
        let obj = value.as_object().unwrap();
        for key in ["state", "map", "min_eig", "lambda", "ppt", "class"] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(obj["class"], "PPT_ENTANGLED_DETECTED");
        assert_eq!(obj["map"]["w"], 2.0);
        assert_eq!(obj["lambda"].as_f64().unwrap(), -0.0147058823529);
        let back: ReportJson = serde_json::from_value(value).unwrap();
        assert_eq!(back, ReportJson::from(&report));
    }

    #[test]
    fn lambda_is_null_for_other_states() {
        let state = build_sigma_b(HorodeckiParams::new(0.5).unwrap());
        let report = detect(&state, &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        let value = serde_json::to_value(ReportJson::from(&report)).unwrap();
        assert!(value["lambda"].is_null());
    }

    #[test]
    fn state_json_round_trip() {
        let state = build_sigma_b(HorodeckiParams::new(0.3).unwrap());
        let text = serde_json::to_string(&StateJson::from(&state)).unwrap();
        assert!(text.contains("\"dimA\":2") && text.contains("\"dimB\":4"));
        let parsed: StateJson = serde_json::from_str(&text).unwrap();
        let rebuilt = BipartiteState::try_from(&parsed).unwrap();
        assert_eq!(rebuilt.matrix(), state.matrix());
    }

    #[test]
    fn malformed_matrix_is_rejected() {
        let m = MatrixJson {
            dim: 2,
            re: vec![1.0, 0.0, 0.0],
            im: vec![0.0; 4],
        };
        assert!(ComplexMatrix::try_from(&m).is_err());
        let bad = MapJson {
            w: -1.0,
            x: 0.0,
            y: 0.0,
            z: 0.0,
        };
        assert!(MapParams::try_from(bad).is_err());
    }
}
