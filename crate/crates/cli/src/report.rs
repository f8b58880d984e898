use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use gysin_core::confspace::{chromatic_polynomial, evaluate, BlochModel, ComparisonReport};
use gysin_core::geometry::{GeometricArrangement, Graph};
use gysin_core::matroid::{Arrangement, LabelSet};
use gysin_core::model::{blowup_map, BettiTable, GysinModel, QuasiIsoRow};
use gysin_core::orlik_solomon::OsAlgebra;

use crate::checks::Outcome;
use crate::CliError;

/// Models larger than this skip the α/β comparison in `config`.
pub const COMPARISON_LIMIT: usize = 1500;

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

/// `1 + 3t + 2t²`
pub fn polynomial_text(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{}t", c),
            (k, 1) => format!("t{}", superscript(k)),
            (k, c) => format!("{}t{}", c, superscript(k)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn one_based(s: LabelSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn set_text(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatReport {
    /// Hyperplanes containing the flat, numbered from 1.
    pub members: Vec<usize>,
    pub codim: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsReport {
    pub hyperplanes: usize,
    pub poincare: Vec<usize>,
    pub poincare_text: String,
    pub flats: Vec<FlatReport>,
    pub circuits: Vec<Vec<usize>>,
}

pub fn os_report(arr: &Arrangement, cap: usize) -> Result<OsReport, CliError> {
    let os = OsAlgebra::new(arr.clone());
    if os.total_dim() > cap {
        return Err(CliError::Cap {
            dim: os.total_dim(),
            cap,
        });
    }
    let poincare = os.poincare_polynomial();
    Ok(OsReport {
        hyperplanes: arr.len(),
        poincare_text: polynomial_text(&poincare),
        poincare,
        flats: arr
            .flats()
            .iter()
            .map(|(f, flat)| FlatReport {
                members: one_based(flat.members),
                codim: flat.codim,
                dim: os.flat_dim(f),
            })
            .collect(),
        circuits: arr.circuits().iter().map(|&c| one_based(c)).collect(),
    })
}

impl OsReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "hyperplanes: {}", self.hyperplanes).unwrap();
        writeln!(s, "Poincaré polynomial: {}", self.poincare_text).unwrap();
        writeln!(s, "flats:").unwrap();
        writeln!(s, "  {:>5}  {:>6}  members", "codim", "dim A").unwrap();
        for f in &self.flats {
            writeln!(s, "  {:>5}  {:>6}  {}", f.codim, f.dim, set_text(&f.members)).unwrap();
        }
        let circuits: Vec<String> = self.circuits.iter().map(|c| set_text(c)).collect();
        writeln!(s, "circuits: {}", if circuits.is_empty() { "none".into() } else { circuits.join(" ") }).unwrap();
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub model_dim: usize,
    #[serde(flatten)]
    pub table: BettiTable,
}

pub fn betti_report(geom: GeometricArrangement, cap: usize) -> Result<BettiReport, CliError> {
    let m = GysinModel::with_cap(geom, cap)?;
    Ok(BettiReport {
        model_dim: m.total_dim(),
        table: m.weight_betti(),
    })
}

/// Rows `n`, columns weights `q`; dots where the model vanishes.
pub fn betti_grid(t: &BettiTable) -> String {
    let max_q = t.betti.iter().map(|e| e.q).max().unwrap_or(0);
    let mut s = String::new();
    write!(s, "  {:>3} |", "n\\q").unwrap();
    for q in 0..=max_q {
        write!(s, " {:>4}", q).unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "  {}", "-".repeat(5 + 5 * (max_q + 1))).unwrap();
    for n in 0..t.totals.len() {
        write!(s, "  {:>3} |", n).unwrap();
        for q in 0..=max_q {
            match t.betti.iter().find(|e| e.n == n && e.q == q) {
                Some(e) => write!(s, " {:>4}", e.dim).unwrap(),
                None => write!(s, " {:>4}", ".").unwrap(),
            }
        }
        writeln!(s).unwrap();
    }
    let totals: Vec<String> = t.totals.iter().map(|x| x.to_string()).collect();
    writeln!(s, "Betti numbers: ({})", totals.join(", ")).unwrap();
    writeln!(s, "Euler characteristic: {}", t.euler).unwrap();
    s
}

impl BettiReport {
    pub fn text(&self) -> String {
        format!(
            "model dimension: {}\nweight-graded Betti numbers dim gr^W_q H^n:\n{}",
            self.model_dim,
            betti_grid(&self.table)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCheck {
    /// Coefficients, constant term first.
    pub polynomial: Vec<i64>,
    pub at: i64,
    pub predicted: i64,
    pub euler: i64,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub genus: usize,
    pub graph: Graph,
    pub model_dim: usize,
    pub betti: BettiTable,
    pub chromatic_check: ChromaticCheck,
    pub comparison: Option<ComparisonReport>,
    pub comparison_note: Option<String>,
}

pub fn config_report(genus: usize, graph: &Graph, cap: usize, compare: bool) -> Result<ConfigReport, CliError> {
    let geom = GeometricArrangement::curve_power(genus, graph)?;
    let m = GysinModel::with_cap(geom.clone(), cap)?;
    let betti = m.weight_betti();
    let polynomial = chromatic_polynomial(graph);
    let at = 2 - 2 * genus as i64;
    let predicted = evaluate(&polynomial, at);
    let (comparison, comparison_note) = if !compare {
        (None, Some("skipped on request".to_string()))
    } else if m.total_dim() > COMPARISON_LIMIT {
        (
            None,
            Some(format!(
                "skipped: model dimension {} above {}",
                m.total_dim(),
                COMPARISON_LIMIT
            )),
        )
    } else {
        let n = BlochModel::from_geometry(geom, cap)?;
        (Some(n.verify_comparison(&m, m.total_dim() <= 80)?), None)
    };
    Ok(ConfigReport {
        genus,
        graph: graph.clone(),
        model_dim: m.total_dim(),
        chromatic_check: ChromaticCheck {
            polynomial,
            at,
            predicted,
            euler: betti.euler,
            matches: predicted == betti.euler,
        },
        betti,
        comparison,
        comparison_note,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl ConfigReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let edges: Vec<String> = self.graph.edges().iter().map(|(a, b)| format!("{}-{}", a, b)).collect();
        writeln!(
            s,
            "curve of genus {}, {} points, edges [{}]",
            self.genus,
            self.graph.vertex_count(),
            edges.join(" ")
        )
        .unwrap();
        writeln!(s, "model dimension: {}", self.model_dim).unwrap();
        s.push_str(&betti_grid(&self.betti));
        let c = &self.chromatic_check;
        let coeffs: Vec<String> = c.polynomial.iter().map(|x| x.to_string()).collect();
        writeln!(
            s,
            "chromatic polynomial [{}] at {} = {}, Euler characteristic {}: {}",
            coeffs.join(", "),
            c.at,
            c.predicted,
            c.euler,
            if c.matches { "match" } else { "MISMATCH" }
        )
        .unwrap();
        match (&self.comparison, &self.comparison_note) {
            (Some(r), _) => writeln!(
                s,
                "alpha/beta: inverse {}, chain maps {}, multiplicative {}",
                yes(r.inverse),
                yes(r.alpha_chain && r.beta_chain),
                yes(r.multiplicative)
            )
            .unwrap(),
            (None, Some(note)) => writeln!(s, "alpha/beta: {}", note).unwrap(),
            (None, None) => {}
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightComplex {
    pub q: usize,
    /// `(n, dim M_q^n)` for the nonzero terms of the base model.
    pub base: Vec<[usize; 2]>,
    pub blown: Vec<[usize; 2]>,
    pub base_acyclic: bool,
    pub blown_acyclic: bool,
    pub quasi_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapTerm {
    pub coeff: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapColumn {
    pub q: usize,
    pub n: usize,
    pub source: String,
    pub image: Vec<MapTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupReport {
    pub weights: Vec<WeightComplex>,
    pub map: Vec<MapColumn>,
    pub chain_map: bool,
    pub quasi_iso: Vec<QuasiIsoRow>,
    pub all_iso: bool,
}

pub fn blowup_report() -> Result<BlowupReport, CliError> {
    let b = blowup_map()?;
    let qi = b.base.verify_quasi_iso(&b.blown, &b.map)?;
    let mut weights: Vec<usize> = qi.rows.iter().map(|r| r.q).collect();
    weights.dedup();
    let nonzero = |m: &GysinModel, q: usize| -> Vec<[usize; 2]> {
        (0..=q)
            .filter(|&n| m.dim(q, n) > 0)
            .map(|n| [n, m.dim(q, n)])
            .collect()
    };
    let weights = weights
        .into_iter()
        .map(|q| {
            let rows: Vec<&QuasiIsoRow> = qi.rows.iter().filter(|r| r.q == q).collect();
            WeightComplex {
                q,
                base: nonzero(&b.base, q),
                blown: nonzero(&b.blown, q),
                base_acyclic: rows.iter().all(|r| r.source_dim == 0),
                blown_acyclic: rows.iter().all(|r| r.target_dim == 0),
                quasi_iso: rows.iter().all(|r| r.iso),
            }
        })
        .collect();
    let mut map = Vec::new();
    for col in 0..b.base.total_dim() {
        let img = b.map.apply(&b.base.basis_element(col))?;
        let (q, n) = b.base.bidegree(col);
        map.push(MapColumn {
            q,
            n,
            source: b.base.describe(col),
            image: img
                .iter()
                .map(|(r, c)| MapTerm {
                    coeff: c.to_string(),
                    target: b.blown.describe(r),
                })
                .collect(),
        });
    }
    Ok(BlowupReport {
        weights,
        map,
        chain_map: true,
        all_iso: qi.all_iso,
        quasi_iso: qi.rows,
    })
}

fn complex_text(terms: &[[usize; 2]]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|[_, d]| if *d == 1 { "Q".to_string() } else { format!("Q{}", superscript(*d)) })
        .collect::<Vec<_>>()
        .join("→")
}

impl BlowupReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "three concurrent lines in P² (base) and the blow-up of their common point").unwrap();
        for w in &self.weights {
            write!(s, "q={}: {} vs {}", w.q, complex_text(&w.base), complex_text(&w.blown)).unwrap();
            if w.base_acyclic || w.blown_acyclic {
                let a = |b: bool| if b { "acyclic" } else { "not acyclic" };
                write!(s, ", {} / {}", a(w.base_acyclic), a(w.blown_acyclic)).unwrap();
            }
            writeln!(s, ", quasi-iso: {}", yes(w.quasi_iso)).unwrap();
        }
        writeln!(s, "M(π):").unwrap();
        for c in &self.map {
            let image: Vec<String> = c
                .image
                .iter()
                .map(|t| format!("{}·({})", t.coeff, t.target))
                .collect();
            let image = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
            writeln!(s, "  (q={}, n={}) {} ↦ {}", c.q, c.n, c.source, image).unwrap();
        }
        writeln!(s, "d∘M(π) = M(π)∘d: {}", if self.chain_map { "pass" } else { "FAIL" }).unwrap();
        writeln!(s, "cohomology (q, n): base dim, blown-up dim, rank of induced map").unwrap();
        for r in &self.quasi_iso {
            writeln!(
                s,
                "  ({}, {}): {}, {}, {}{}",
                r.q,
                r.n,
                r.source_dim,
                r.target_dim,
                r.induced_rank,
                if r.iso { "" } else { "  NOT ISO" }
            )
            .unwrap();
        }
        writeln!(s, "quasi-isomorphism: {}", yes(self.all_iso)).unwrap();
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub outcomes: Vec<Outcome>,
    pub passed: usize,
    pub failed: usize,
}

impl SelfcheckReport {
    pub fn new(outcomes: Vec<Outcome>) -> Self {
        let passed = outcomes.iter().filter(|o| o.passed).count();
        SelfcheckReport {
            failed: outcomes.len() - passed,
            passed,
            outcomes,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let mut checks: Vec<&str> = Vec::new();
        for o in &self.outcomes {
            if !checks.contains(&o.check.as_str()) {
                checks.push(&o.check);
            }
        }
        writeln!(s, "{:<24} {:>6} {:>6}", "check", "pass", "fail").unwrap();
        for c in checks {
            let (p, f) = self.outcomes.iter().filter(|o| o.check == c).fold((0, 0), |(p, f), o| {
                if o.passed {
                    (p + 1, f)
                } else {
                    (p, f + 1)
                }
            });
            writeln!(s, "{:<24} {:>6} {:>6}", c, p, f).unwrap();
        }
        for o in self.outcomes.iter().filter(|o| !o.passed) {
            writeln!(s, "FAIL {} [{}]: {}", o.check, o.instance, o.detail).unwrap();
        }
        writeln!(
            s,
            "{}: {} passed, {} failed",
            if self.ok() { "all checks passed" } else { "self-check failed" },
            self.passed,
            self.failed
        )
        .unwrap();
        s
    }
}
