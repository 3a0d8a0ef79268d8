//! Per-code reports and the distance tables.

use crate::bounds::{bch_bound, default_search, theorem_bound, BchCertificate};
use crate::codes::{BinaryCyclicCode, CodeId, Family};
use crate::cosets::CosetTable;
use crate::distance::{min_distance, DistanceOptions, DistanceResult};
use crate::error::Result;
use crate::gf2m::FieldSpec;
use serde::Serialize;
use std::fmt;

/// Largest `m` for which generator polynomials are built.
pub const GENERATOR_MAX_M: u32 = 16;
/// Largest `m` for which distances are attempted.
pub const DISTANCE_MAX_M: u32 = 14;

/// Parameters and bounds of one code, flat so it serializes to a CSV row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub family: Family,
    pub m: u32,
    pub h: Option<u32>,
    pub parity: u8,
    pub n: u64,
    pub k: u64,
    pub d_lower_bch: u64,
    pub bch_witness_multiplier: u64,
    pub bch_run_start: u64,
    pub d_theorem: Option<u64>,
    pub d_exact: Option<u32>,
    pub d_upper: Option<u32>,
    pub distance_work: Option<u64>,
    pub generator_hex: Option<String>,
    pub generator: Option<String>,
}

impl CodeReport {
    /// Builds the report; `distance` enables the minimum-distance search.
    pub fn build(id: CodeId, distance: Option<&DistanceOptions>) -> Result<Self> {
        id.validate()?;
        let table = CosetTable::new(id.m)?;
        Self::build_with(id, &table, distance)
    }

    pub fn build_with(id: CodeId, table: &CosetTable, distance: Option<&DistanceOptions>) -> Result<Self> {
        let m = id.m;
        let set = id.defining_set(table)?;
        let n = table.n();
        let k = n - set.size();
        let cert: BchCertificate = bch_bound(&set, &default_search(m))?;
        let mut report = CodeReport {
            family: id.family,
            m,
            h: id.h,
            parity: id.parity,
            n,
            k,
            d_lower_bch: cert.implied_bound,
            bch_witness_multiplier: cert.multiplier,
            bch_run_start: cert.run_start,
            d_theorem: theorem_bound(id.family, m, id.h, id.parity),
            d_exact: None,
            d_upper: None,
            distance_work: None,
            generator_hex: None,
            generator: None,
        };
        if m > GENERATOR_MAX_M {
            return Ok(report);
        }
        let field = FieldSpec::new(m)?;
        let code = BinaryCyclicCode::build(&field, &set)?;
        report.generator_hex = Some(code.generator().to_hex());
        report.generator = Some(code.generator().to_monomials());
        if let Some(opts) = distance.filter(|_| m <= DISTANCE_MAX_M) {
            let mut opts = opts.clone();
            let seed = cert.implied_bound.min(u32::MAX as u64) as u32;
            opts.known_lower_bound = Some(opts.known_lower_bound.map_or(seed, |b| b.max(seed)));
            let r: DistanceResult = min_distance(&code, &opts)?;
            report.d_exact = r.exact();
            report.d_upper = Some(r.upper);
            report.distance_work = Some(r.work);
        }
        Ok(report)
    }

    /// Best known lower bound: the exact distance, else the BCH bound.
    pub fn lower(&self) -> u64 {
        self.d_exact.map_or(self.d_lower_bch, |d| d as u64)
    }

    /// Distance cell: the exact value, or the lower bound marked `≥`.
    pub fn cell(&self) -> DistanceCell {
        DistanceCell { exact: self.d_exact.map(|d| d as u64), lower: self.d_lower_bch }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceCell {
    pub exact: Option<u64>,
    pub lower: u64,
}

impl fmt::Display for DistanceCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(d) => write!(f, "{d}"),
            None => write!(f, "≥{}", self.lower),
        }
    }
}

/// One row of a distance table: the parity-1 code and the parity-0 code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: u32,
    pub h: Option<u32>,
    pub dim1: u64,
    pub d1: String,
    pub dim0: u64,
    pub d0: String,
    #[serde(skip)]
    pub reports: [CodeReport; 2],
}

/// Largest `h` listed for the trinomial family at even `m`.
pub fn listed_h(m: u32) -> u32 {
    match m {
        0..=10 => 2,
        11..=14 => 4,
        15..=18 => 6,
        19..=24 => 8,
        _ => 10,
    }
    .min(crate::cosets::max_h(m))
}

/// Codes of one table, as (m, h, [parity 1, parity 0]) entries, even `m` only.
pub fn table_ids(which: u8, max_m: u32) -> Vec<(u32, Option<u32>, [CodeId; 2])> {
    let mut out = Vec::new();
    for m in (4..=max_m.min(26)).step_by(2) {
        if which == 1 {
            out.push((m, None, [CodeId::s(m, 1), CodeId::s(m, 0)]));
        } else {
            for h in 1..=listed_h(m) {
                out.push((m, Some(h), [CodeId::d(m, h, 1), CodeId::d(m, h, 0)]));
            }
        }
    }
    out
}

/// Rows of table `which` (1: inverse family, 2: trinomial family).
pub fn table_rows(which: u8, max_m: u32, distance: Option<&DistanceOptions>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut table: Option<CosetTable> = None;
    for (m, h, [id1, id0]) in table_ids(which, max_m) {
        if table.as_ref().map(|t| t.m()) != Some(m) {
            table = Some(CosetTable::new(m)?);
        }
        let t = table.as_ref().expect("set above");
        let r1 = CodeReport::build_with(id1, t, distance)?;
        let r0 = CodeReport::build_with(id0, t, distance)?;
        rows.push(TableRow {
            m,
            h,
            dim1: r1.k,
            d1: r1.cell().to_string(),
            dim0: r0.k,
            d0: r0.cell().to_string(),
            reports: [r1, r0],
        });
    }
    Ok(rows)
}
