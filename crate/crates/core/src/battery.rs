//! The fixed test battery of metric groups, sweep-line parsing and random
//! nondegenerate symmetric bicharacters.

use rand::Rng;

use crate::abelian::{parse_group, FinAbGroup};
use crate::error::{Error, ParseError, Result};
use crate::forms::{parse_bicharacter, Bicharacter, Sign};
use crate::phase::PhaseExp;
use crate::tycat::TyData;

/// Every nondegenerate symmetric bicharacter on the battery groups, both
/// signs of `τ`, in sweep format.
pub const BATTERY_SWEEP: &str = include_str!("../data/battery.sweep");

/// `Z2, Z3, Z4, Z5, Z6, Z8, Z9, Z2xZ2, Z2xZ4, Z3xZ3`.
pub fn battery_groups() -> Vec<FinAbGroup> {
    [&[2u64][..], &[3], &[4], &[5], &[6], &[8], &[9], &[2, 2], &[2, 4], &[3, 3]]
        .iter()
        .map(|o| FinAbGroup::new(o.to_vec()).expect("valid orders"))
        .collect()
}

/// Parses one `group|chi|tau` line. Blank lines and `#` comments give `None`.
pub fn parse_sweep_line(line: &str) -> Result<Option<TyData>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let parts: Vec<&str> = body.split('|').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(ParseError::Matrix(format!(
            "expected `group|chi|tau`, got `{body}`"
        ))));
    }
    let g = parse_group(parts[0])?;
    let chi = parse_bicharacter(parts[1], &g)?;
    let tau: Sign = parts[2].parse()?;
    TyData::new(chi, tau).map(Some)
}

/// The battery as `TyData` values, in file order.
pub fn battery() -> Vec<TyData> {
    BATTERY_SWEEP
        .lines()
        .filter_map(|l| parse_sweep_line(l).expect("battery file is valid"))
        .collect()
}

/// Battery entries with `τ = +` only; σ, `s` and class counts per sign do
/// not depend on `τ`.
pub fn battery_metrics() -> Vec<TyData> {
    battery().into_iter().filter(|t| t.tau() == Sign::Plus).collect()
}

/// All factor lists `m_1 <= m_2 <= …` with product at most `max_order`.
pub fn groups_up_to(max_order: u64) -> Vec<FinAbGroup> {
    fn rec(min: u64, left: u64, cur: &mut Vec<u64>, out: &mut Vec<FinAbGroup>) {
        if !cur.is_empty() {
            out.push(FinAbGroup::new(cur.clone()).expect("orders at least 2"));
        }
        let mut m = min;
        while m <= left {
            cur.push(m);
            rec(m, left / m, cur, out);
            cur.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    rec(2, max_order, &mut Vec::new(), &mut out);
    out
}

/// Uniformly random well-defined symmetric matrix on `g`.
pub fn random_symmetric(g: &FinAbGroup, rng: &mut impl Rng) -> Bicharacter {
    let o = g.orders();
    let mut m = vec![vec![PhaseExp::ZERO; o.len()]; o.len()];
    for (i, &oi) in o.iter().enumerate() {
        for (j, &oj) in o.iter().enumerate().skip(i) {
            let d = num_integer::gcd(oi, oj);
            let v = PhaseExp::new(rng.gen_range(0..d) as i64, d);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    Bicharacter::new(g.clone(), m).expect("entries respect both orders")
}

/// Random nondegenerate symmetric bicharacter on a random nontrivial group
/// of order at most `max_order`, with a random sign of `τ`.
pub fn random_metric(max_order: u64, rng: &mut impl Rng) -> TyData {
    let groups = groups_up_to(max_order);
    let g = &groups[rng.gen_range(0..groups.len())];
    loop {
        let chi = random_symmetric(g, rng);
        if chi.is_nondegenerate() {
            let tau = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            return TyData::new(chi, tau).expect("checked nondegenerate");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn battery_parses() {
        let b = battery();
        assert_eq!(b.len(), 94);
        let groups: std::collections::BTreeSet<_> = b.iter().map(|t| t.group().clone()).collect();
        assert_eq!(groups.len(), battery_groups().len());
    }

    #[test]
    fn sweep_lines() {
        assert!(parse_sweep_line("# comment").unwrap().is_none());
        assert!(parse_sweep_line("   ").unwrap().is_none());
        let t = parse_sweep_line("Z4|1/4|- # trailing").unwrap().unwrap();
        assert_eq!(t.tau(), Sign::Minus);
        assert!(parse_sweep_line("Z2|0|+").is_err());
        assert!(parse_sweep_line("Z2|1/2").is_err());
    }

    #[test]
    fn small_groups() {
        let gs = groups_up_to(16);
        assert!(gs.iter().all(|g| g.order() <= 16));
        // 2,3,...,16 cyclic plus non-cyclic lists
        assert!(gs.contains(&FinAbGroup::new(vec![2, 2, 2, 2]).unwrap()));
        assert!(gs.contains(&FinAbGroup::new(vec![4, 4]).unwrap()));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let t = random_metric(16, &mut rng);
            assert!(t.chi().is_nondegenerate() && t.chi().is_symmetric());
        }
    }
}
