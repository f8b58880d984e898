use serde::{Deserialize, Serialize};

use gysin_core::exact::Rational;
use gysin_core::geometry::{GeometricArrangement, Graph};
use gysin_core::matroid::Arrangement;

use crate::CliError;

/// A central arrangement: `{"kind":"central","dim":3,"normals":[["1","0","0"],...]}`.
/// Entries are rational strings such as `"-3/2"`; plain integers are accepted too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ArrangementInput {
    Central { dim: usize, normals: Vec<Vec<Entry>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Entry::Int(n) => Ok(Rational::from_int(*n)),
            Entry::Text(s) => s
                .parse()
                .map_err(|e| CliError::Parse(format!("normals: {}", e))),
        }
    }
}

fn rational_rows(rows: &[Vec<Entry>]) -> Result<Vec<Vec<Rational>>, CliError> {
    rows.iter()
        .map(|r| r.iter().map(Entry::to_rational).collect())
        .collect()
}

impl ArrangementInput {
    pub fn build(&self) -> Result<Arrangement, CliError> {
        let ArrangementInput::Central { dim, normals } = self;
        Ok(Arrangement::from_vectors(*dim, &rational_rows(normals)?)?)
    }
}

/// Geometry for the Gysin model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeometryInput {
    /// `Y^V` for a curve of the given genus, diagonals from the graph edges.
    Curvepower { genus: usize, graph: Graph },
    /// Hyperplanes in `P^dim`, given by covectors of length `dim + 1`.
    Projective { dim: usize, normals: Vec<Vec<Entry>> },
    /// The blown-up plane from the blow-up demo.
    BlowupDemo {
        #[serde(default)]
        side: BlowupSide,
    },
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlowupSide {
    #[default]
    Base,
    Blown,
}

impl GeometryInput {
    pub fn build(&self) -> Result<GeometricArrangement, CliError> {
        Ok(match self {
            GeometryInput::Curvepower { genus, graph } => GeometricArrangement::curve_power(*genus, graph)?,
            GeometryInput::Projective { dim, normals } => {
                GeometricArrangement::projective(*dim, &rational_rows(normals)?)?
            }
            GeometryInput::BlowupDemo { side } => {
                let d = gysin_core::geometry::blown_up_surface();
                match side {
                    BlowupSide::Base => d.base,
                    BlowupSide::Blown => d.blown,
                }
            }
        })
    }
}

/// Parses JSON, reporting the line and column of the first error.
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Parse(format!(
            "{} input, line {} column {}: {}",
            what,
            e.line(),
            e.column(),
            e
        ))
    })
}
