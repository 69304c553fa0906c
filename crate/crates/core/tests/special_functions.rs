//! Chi-square CDF against high-precision reference values (40-digit
//! arithmetic, rounded to 17 significant digits).

use arasent_core::eval::special::{chi_square_cdf, chi_square_sf, gamma_p, gamma_q, ln_gamma};

#[path = "oracles/chi_square_grid.rs"]
mod reference;
use reference::GRID;

#[test]
fn cdf_grid_matches_reference() {
    assert!(GRID.len() >= 50);
    for &(df, x, expected) in GRID {
        let got = chi_square_cdf(x, df);
        assert!((got - expected).abs() < 1e-8, "df {df} x {x}: {got} vs {expected}");
        let sf = chi_square_sf(x, df);
        assert!((sf - (1.0 - expected)).abs() < 1e-8, "sf df {df} x {x}");
    }
}

#[test]
fn incomplete_gamma_grid_is_consistent() {
    for &(df, x, expected) in GRID {
        assert!((gamma_p(df / 2.0, x / 2.0) - expected).abs() < 1e-8);
        assert!((gamma_q(df / 2.0, x / 2.0) + expected - 1.0).abs() < 1e-8);
    }
}

#[test]
fn five_percent_critical_values() {
    for (df, crit) in [(1.0, 3.841458820694124), (2.0, 5.991464547107979), (4.0, 9.487729036781154)] {
        assert!((chi_square_sf(crit, df) - 0.05).abs() < 1e-9, "df {df}");
    }
}

#[test]
fn ln_gamma_reference() {
    assert!((ln_gamma(0.1) - 2.252_712_651_734_206).abs() < 1e-12);
    assert!((chi_square_sf(20.0, 1.0) - 7.744_216_431_044_084e-6).abs() < 1e-15);
}
