//! Confusion matrices with macro-F1 derived by exact fraction arithmetic and
//! Pearson statistics whose upper-tail probabilities were evaluated at 40
//! digits.

#![allow(dead_code, clippy::excessive_precision)]

pub struct MetricCase {
    pub counts: &'static [&'static [u64]],
    pub macro_f1: f64,
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

pub const CASES: &[MetricCase] = &[
    // F1 = (16/21 + 14/19) / 2 = 299/399, statistic 500/99
    MetricCase { counts: &[&[8, 2], &[3, 7]], macro_f1: 299.0 / 399.0, statistic: 500.0 / 99.0, df: 1, p_value: 0.024618761380815178 },
    // perfect diagonal: statistic N, p = erfc(sqrt(10))
    MetricCase { counts: &[&[10, 0], &[0, 10]], macro_f1: 1.0, statistic: 20.0, df: 1, p_value: 7.7442164310440840e-6 },
    MetricCase {
        counts: &[&[12, 3, 1], &[2, 9, 4], &[1, 2, 6]],
        macro_f1: 2989.0 / 4495.0,
        statistic: 130469.0 / 5940.0,
        df: 4,
        p_value: 0.00020370991071842684,
    },
    MetricCase {
        counts: &[&[20, 5, 3, 2], &[4, 18, 6, 1], &[2, 3, 15, 4], &[1, 2, 3, 6]],
        macro_f1: 1531.0 / 2550.0,
        statistic: 457896485.0 / 6840288.0,
        df: 9,
        p_value: 6.0393482192549837e-11,
    },
    // independent rows
    MetricCase { counts: &[&[5, 5], &[5, 5]], macro_f1: 0.5, statistic: 0.0, df: 1, p_value: 1.0 },
];
