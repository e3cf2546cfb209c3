//! Exact integer polynomials, cyclotomic-type products and truncated series.
//!
//! Everything a multiplicity computation touches lives here: quantum integers
//! and binomials, characters `∏ (1 - t^k)^{e_k}` kept in factored form, and
//! the long division that decides whether such a character is a polynomial.

mod factored;
mod poly;
mod series;

pub use factored::{Expansion, FactoredChar};
pub use poly::{divides, qbinom, qint, IntPoly};
pub use series::{series_expand, TruncatedSeries};

/// Multiplies out `f`; see [`FactoredChar::expand`].
pub fn expand(f: &FactoredChar) -> Expansion {
    f.expand()
}

/// See [`IntPoly::is_palindromic_monic`].
pub fn is_palindromic_monic(p: &IntPoly) -> crate::Result<bool> {
    p.is_palindromic_monic()
}
