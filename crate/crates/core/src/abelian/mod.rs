//! Finite abelian groups, homomorphisms, subgroups and characters.

pub mod dual;
mod group;
mod hom;
mod parse;
pub mod snf;
mod subgroup;

pub use group::{Element, FinAbGroup};
pub use hom::{Hom, Solution};
pub use parse::{parse_element, parse_elements, parse_group};
pub use subgroup::{enumerate_subgroups, quotient, Quotient, Subgroup, DEFAULT_BUDGET};

/// `f(x) = t`: lexicographically least preimage and the kernel.
pub fn solve_hom(f: &Hom, t: &Element) -> Solution {
    f.solve(t)
}
