//! Machine-readable output records. Every numeric field is a string (exact
//! rationals as `p/q` or integer text, decimals rendered by interval
//! refinement), so nothing loses precision in transit.

use serde::{Deserialize, Serialize};

use ntpack::algorithms::AnalysisResult;
use ntpack::rational::render_rat_short;
use ntpack::{Ledger, Poly, RatMatrix};

pub fn matrix_grid(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| render_rat_short(m.at(r, c))).collect())
        .collect()
}

/// Coefficients lowest degree first, as exact strings.
pub fn poly_coeffs(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(render_rat_short).collect()
}

/// Integer coefficients of the canonical primitive form, lowest first.
pub fn poly_int_coeffs(p: &Poly) -> Vec<String> {
    p.primitive_integer_coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect()
}

#[derive(Serialize, Deserialize)]
pub struct StretchFactorRecord {
    pub min_poly: Vec<String>,
    pub isolating_interval: [String; 2],
    pub decimal: String,
}

#[derive(Serialize, Deserialize)]
pub struct FoliationRecord {
    /// Entry polynomials in the stretch factor, coefficients lowest first.
    pub entries: Vec<Vec<String>>,
    pub decimals: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct OutputRecord {
    pub word: String,
    pub ledger: String,
    pub strategy: String,
    pub iterations: String,
    pub cell: String,
    pub d_matrix: Vec<Vec<String>>,
    pub char_poly: Vec<String>,
    pub stretch_factor: StretchFactorRecord,
    pub foliation: FoliationRecord,
    pub timing_ms: String,
}

impl OutputRecord {
    pub fn from_analysis(
        word: &str,
        ledger: &Ledger,
        result: &AnalysisResult,
        digits: usize,
        timing_ms: u128,
    ) -> ntpack::Result<Self> {
        let chi = ntpack::char_poly(&result.sink_package.d_matrix)?;
        let narrow = result
            .stretch_factor
            .refine(&ntpack::rational::rat(1, 1_000_000_000));
        let (lo, hi) = narrow.interval();
        Ok(OutputRecord {
            word: word.to_string(),
            ledger: ledger.name.clone(),
            strategy: result.strategy.label().to_string(),
            iterations: result.iterations_used.to_string(),
            cell: ledger.cell(result.sink_package.cell).name.clone(),
            d_matrix: matrix_grid(&result.sink_package.d_matrix),
            char_poly: poly_coeffs(&chi),
            stretch_factor: StretchFactorRecord {
                min_poly: poly_int_coeffs(result.stretch_factor.defining_poly()),
                isolating_interval: [
                    ntpack::rational::render_rat(lo),
                    ntpack::rational::render_rat(hi),
                ],
                decimal: result.stretch_factor.to_decimal(digits),
            },
            foliation: FoliationRecord {
                entries: result.foliation.entries().iter().map(poly_coeffs).collect(),
                decimals: result.foliation.decimal_entries(digits),
            },
            timing_ms: timing_ms.to_string(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ledger:         {}\n", self.ledger));
        out.push_str(&format!("word:           {}\n", self.word));
        out.push_str(&format!(
            "strategy:       {} (iterations: {})\n",
            self.strategy, self.iterations
        ));
        out.push_str(&format!("sink cell:      {}\n", self.cell));
        out.push_str(&format!("D matrix:       {}\n", grid_text(&self.d_matrix)));
        out.push_str(&format!(
            "char poly:      [{}] (coefficients, lowest degree first)\n",
            self.char_poly.join(", ")
        ));
        out.push_str(&format!(
            "min poly:       [{}]\n",
            self.stretch_factor.min_poly.join(", ")
        ));
        out.push_str(&format!(
            "stretch factor: {}\n",
            self.stretch_factor.decimal
        ));
        out.push_str(&format!(
            "interval:       [{}, {}]\n",
            self.stretch_factor.isolating_interval[0], self.stretch_factor.isolating_interval[1]
        ));
        let entries: Vec<String> = self
            .foliation
            .entries
            .iter()
            .map(|e| format!("[{}]", e.join(", ")))
            .collect();
        out.push_str(&format!("foliation:      {}\n", entries.join(" , ")));
        out.push_str(&format!(
            "  (decimals):   ({})\n",
            self.foliation.decimals.join(", ")
        ));
        out.push_str(&format!("time:           {} ms\n", self.timing_ms));
        out
    }
}

pub fn grid_text(grid: &[Vec<String>]) -> String {
    let rows: Vec<String> = grid.iter().map(|r| format!("[{}]", r.join(","))).collect();
    format!("[{}]", rows.join(","))
}
