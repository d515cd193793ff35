// SPDX-License-Identifier: Apache-2.0

//! JSON file formats for root systems and models.

use serde::{Deserialize, Serialize};

use crate::apartment::{Apartment, WallFamily};
use crate::error::{Error, Result};
use crate::masure::{Gluing, ModelSpec};
use crate::rational::{serde_qmat, Matrix};
use crate::root_system::{validate_gcm, RootGeneratingSystem};

/// `{"gcm", "dim", "roots", "coroots", "lambda"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub gcm: Vec<Vec<i64>>,
    pub dim: usize,
    #[serde(with = "serde_qmat")]
    pub roots: Matrix,
    #[serde(with = "serde_qmat")]
    pub coroots: Matrix,
    #[serde(default)]
    pub lambda: WallFamily,
}

impl SystemFile {
    pub fn from_apartment(ap: &Apartment) -> Self {
        let s = &ap.system;
        SystemFile {
            gcm: s.gcm().entries().to_vec(),
            dim: s.dim(),
            roots: s.roots().clone(),
            coroots: s.coroots().clone(),
            lambda: ap.walls.clone(),
        }
    }

    pub fn to_apartment(&self) -> Result<Apartment> {
        let gcm = validate_gcm(&self.gcm)?;
        for v in self.roots.iter().chain(&self.coroots) {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
            }
        }
        let system = RootGeneratingSystem::new(gcm, self.roots.clone(), self.coroots.clone())?;
        Ok(Apartment { system, walls: self.lambda.clone() })
    }
}

/// `{"system", "charts", "gluings"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub system: SystemFile,
    pub charts: usize,
    pub gluings: Vec<Gluing>,
}

impl ModelFile {
    pub fn from_spec(spec: &ModelSpec) -> Self {
        ModelFile {
            system: SystemFile::from_apartment(&spec.apartment),
            charts: spec.charts,
            gluings: spec.gluings.clone(),
        }
    }

    pub fn to_spec(&self) -> Result<ModelSpec> {
        Ok(ModelSpec { apartment: self.system.to_apartment()?, charts: self.charts, gluings: self.gluings.clone() })
    }
}

pub fn parse_system(json: &str) -> Result<Apartment> {
    serde_json::from_str::<SystemFile>(json).map_err(|e| Error::Parse(e.to_string()))?.to_apartment()
}

pub fn parse_model(json: &str) -> Result<ModelSpec> {
    serde_json::from_str::<ModelFile>(json).map_err(|e| Error::Parse(e.to_string()))?.to_spec()
}

pub fn system_to_json(ap: &Apartment) -> String {
    serde_json::to_string_pretty(&SystemFile::from_apartment(ap)).expect("serializable")
}

pub fn model_to_json(spec: &ModelSpec) -> String {
    serde_json::to_string_pretty(&ModelFile::from_spec(spec)).expect("serializable")
}
