//! Bicharacters, alternating forms and bilinear cocycles on finite abelian
//! groups, plus the two scalar solvers the classification needs: the
//! symmetric coboundary solver and the Gauss-sum sign.

mod bichar;
mod coboundary;
mod gauss;

pub use bichar::{
    alt_form, alternating_forms, lagrangians, standard_cocycle, AlternatingForm, Bicharacter,
    BilinearCocycle, PhaseMatrix,
};
pub use coboundary::{solve_coboundary, solve_coboundary_bilinear, CochainTable, NuFunction};
pub use gauss::{gauss_sign, gauss_sum, Sign, GAUSS_TOLERANCE};

use crate::abelian::FinAbGroup;
use crate::error::{ParseError, Result};
use crate::phase::PhaseExp;

/// Parses `0,1/2;1/2,0`: rows separated by `;`, entries by `,`.
pub fn parse_matrix(spec: &str) -> std::result::Result<PhaseMatrix, ParseError> {
    let t = spec.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.parse::<PhaseExp>()
                        .map_err(|_| ParseError::Matrix(format!("bad entry `{}`", e.trim())))
                })
                .collect()
        })
        .collect()
}

pub fn render_matrix(m: &PhaseMatrix) -> String {
    m.iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// Parses and validates a bicharacter on `g`.
pub fn parse_bicharacter(spec: &str, g: &FinAbGroup) -> Result<Bicharacter> {
    let m = parse_matrix(spec)?;
    Bicharacter::new(g.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_text_format() {
        let m = parse_matrix("0,1/2;1/2,0").unwrap();
        assert_eq!(m[0][1], PhaseExp::HALF);
        assert_eq!(render_matrix(&m), "0,1/2;1/2,0");
        assert!(parse_matrix("0,x").is_err());
        assert_eq!(render_matrix(&parse_matrix("-1/4").unwrap()), "3/4");
    }
}
