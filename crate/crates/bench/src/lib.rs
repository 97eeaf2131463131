//! Inputs shared by the criterion benchmarks in `benches/`.

use tymod_core::battery::parse_sweep_line;
use tymod_core::TyData;

/// Metric groups of growing size, as sweep lines.
pub const CASES: &[&str] = &[
    "Z2|1/2|+",
    "Z4|1/4|+",
    "Z2xZ2|0,1/2;1/2,0|+",
    "Z3xZ3|0,1/3;1/3,0|+",
    "Z4xZ4|0,1/4;1/4,0|+",
    "Z2xZ2xZ2xZ2|0,1/2,0,0;1/2,0,0,0;0,0,0,1/2;0,0,1/2,0|+",
];

pub fn case(line: &str) -> TyData {
    parse_sweep_line(line).expect("valid case").expect("not a comment")
}
