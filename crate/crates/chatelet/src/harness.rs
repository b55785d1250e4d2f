//! Batch-run reporting: multiplicity statistics, density report rows with
//! fixed CSV columns, log-log slope fitting, and JSON-lines emission.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::constructor::Solution;
use crate::error::Result;
use crate::ring::GaussianInteger;

/// Per-n representation counts over an emitted family.
#[derive(Clone, Debug, Default)]
pub struct MultiplicityStats {
    /// n → number of (ω₁, ω₂) pairs representing it.
    pub per_n: BTreeMap<BigInt, u64>,
    /// multiplicity value → how many n attain it.
    pub histogram: BTreeMap<u64, u64>,
    pub max: u64,
}

impl MultiplicityStats {
    pub fn from_solutions(solutions: &[Solution]) -> Self {
        let mut per_n: BTreeMap<BigInt, u64> = BTreeMap::new();
        for s in solutions {
            *per_n.entry(s.n.clone()).or_insert(0) += 1;
        }
        let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
        for &m in per_n.values() {
            *histogram.entry(m).or_insert(0) += 1;
        }
        let max = per_n.values().copied().max().unwrap_or(0);
        MultiplicityStats {
            per_n,
            histogram,
            max,
        }
    }

    pub fn total(&self) -> u64 {
        self.per_n.values().sum()
    }

    pub fn distinct(&self) -> u64 {
        self.per_n.len() as u64
    }
}

/// One row of the density report. Optional fields stay empty in the CSV.
#[derive(Clone, Debug)]
pub struct DensityRow {
    pub poly: String,
    pub x: BigInt,
    pub c: BigRational,
    pub count_b: Option<u64>,
    pub constructive_total: u64,
    pub constructive_distinct: u64,
    pub max_multiplicity: u64,
    pub max_height_ratio: f64,
    pub slope: Option<f64>,
}

pub const CSV_HEADER: &str =
    "poly,X,c,count_B,constructive_total,constructive_distinct,max_multiplicity,max_height_ratio,slope";

fn format_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl DensityRow {
    pub fn to_csv(&self) -> String {
        let count_b = self.count_b.map(|v| v.to_string()).unwrap_or_default();
        let slope = self.slope.map(|v| format!("{v:.6}")).unwrap_or_default();
        format!(
            "\"{}\",{},{},{},{},{},{},{:.6},{}",
            self.poly,
            self.x,
            format_rational(&self.c),
            count_b,
            self.constructive_total,
            self.constructive_distinct,
            self.max_multiplicity,
            self.max_height_ratio,
            slope
        )
    }
}

/// Least-squares slope of y against x, with the residual sum of squares.
pub fn fit_slope(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let rss: f64 = points
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
        .sum();
    (slope, rss)
}

/// Max over the family of M_θ(ωᵢ)/X^{1/2}; reported, never asserted.
pub fn max_height_ratio(solutions: &[Solution], x: &BigInt) -> f64 {
    let sqrt_x = x.to_f64().unwrap_or(f64::MAX).sqrt();
    solutions
        .iter()
        .map(|s| {
            let h = s.omega1.height().max(s.omega2.height());
            h.to_f64().unwrap_or(f64::MAX) / sqrt_x
        })
        .fold(0.0, f64::max)
}

/// One JSON-lines record. All numbers are decimal strings so downstream
/// tools never hit native integer limits.
pub fn solution_jsonl_line(s: &Solution, uv: &GaussianInteger) -> String {
    let triple = |t: &crate::ring::ThetaElem| {
        format!("[\"{}\",\"{}\",\"{}\"]", t.c0, t.c1, t.c2)
    };
    let mut line = String::new();
    write!(
        line,
        "{{\"n\":\"{}\",\"alpha\":\"{}\",\"beta\":\"{}\",\"v1\":\"{}\",\"omega1\":{},\"omega2\":{},\"u\":\"{}\",\"v\":\"{}\"}}",
        s.n,
        s.alpha,
        s.beta,
        s.v1,
        triple(&s.omega1),
        triple(&s.omega2),
        uv.re,
        uv.im
    )
    .expect("write to string");
    line
}

/// Writes content atomically: temp file in the same directory, then rename.
pub fn atomic_write(path: &Path, content: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// The displayed identity (x²+8)³ + 17 = (x³+10x)² + (2x²+23)², checked
/// pointwise over a range and symbolically by coefficient comparison.
pub mod identity {
    use crate::ring::IntPoly;
    use num_bigint::BigInt;

    fn int_poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Left side (x²+8)³ + 17 as an integer polynomial.
    pub fn lhs_poly() -> IntPoly {
        let base = int_poly(&[8, 0, 1]);
        let cube = base.mul(&base).mul(&base);
        cube.add(&int_poly(&[17]))
    }

    /// Right side (x³+10x)² + (2x²+23)².
    pub fn rhs_poly() -> IntPoly {
        let q1 = int_poly(&[0, 10, 0, 1]);
        let q2 = int_poly(&[23, 0, 2]);
        q1.mul(&q1).add(&q2.mul(&q2))
    }

    /// Pointwise check; returns the first mismatching x if any.
    pub fn pointwise_mismatch(range: std::ops::RangeInclusive<i64>) -> Option<i64> {
        let l = lhs_poly();
        let r = rhs_poly();
        range.into_iter().find(|&x| {
            let xb = BigInt::from(x);
            l.eval(&xb) != r.eval(&xb)
        })
    }

    pub fn symbolic_match() -> bool {
        lhs_poly() == rhs_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::{complete, enumerate_family};
    use crate::ring::CubicPoly;
    use num_traits::Zero;

    #[test]
    fn identity_holds_symbolically_and_pointwise() {
        assert!(identity::symbolic_match());
        assert_eq!(identity::pointwise_mismatch(-1000..=1000), None);
        // spot values from the displayed identity
        let l = identity::lhs_poly();
        assert_eq!(l.eval(&BigInt::from(1)), BigInt::from(746));
        assert_eq!(l.eval(&BigInt::from(0)), BigInt::from(529));
    }

    #[test]
    fn multiplicity_stats_partition_the_stream() {
        let p = CubicPoly::new(1, 1, 2).unwrap();
        let x = BigInt::from(10u64.pow(10));
        let c = BigRational::one();
        let sols = enumerate_family(&p, &x, &c).unwrap();
        let stats = MultiplicityStats::from_solutions(&sols);
        assert_eq!(stats.total(), sols.len() as u64);
        assert!(stats.distinct() <= stats.total());
        assert!(stats.max * stats.distinct() >= stats.total());
        let hist_total: u64 = stats
            .histogram
            .iter()
            .map(|(mult, count)| mult * count)
            .sum();
        assert_eq!(hist_total, stats.total());
    }

    #[test]
    fn csv_row_formatting() {
        let row = DensityRow {
            poly: "1,1,2".into(),
            x: BigInt::from(1000000),
            c: BigRational::one(),
            count_b: Some(42),
            constructive_total: 7,
            constructive_distinct: 5,
            max_multiplicity: 2,
            max_height_ratio: 0.25,
            slope: None,
        };
        assert_eq!(
            row.to_csv(),
            "\"1,1,2\",1000000,1,42,7,5,2,0.250000,"
        );
    }

    #[test]
    fn jsonl_schema_matches_contract() {
        let p = CubicPoly::new(1, 1, 2).unwrap();
        let s = complete(&p, &BigInt::from(2), &BigInt::from(1), &BigInt::from(1)).unwrap();
        let uv = crate::transfer::certify_transfer(&p, &s).unwrap();
        let line = solution_jsonl_line(&s, &uv);
        assert!(line.starts_with("{\"n\":\"71\",\"alpha\":\"2\",\"beta\":\"1\",\"v1\":\"1\""));
        assert!(line.contains("\"omega1\":[\"8\",\"1\",\"1\"]"));
        assert!(line.contains("\"omega2\":[\"-3\",\"1\",\"2\"]"));
    }

    #[test]
    fn slope_of_exact_power_law() {
        let pts: Vec<(f64, f64)> = (1..=5)
            .map(|k| {
                let x = 10f64.powi(k);
                (x.ln(), (2.0 * x.powf(1.0 / 3.0)).ln())
            })
            .collect();
        let (slope, rss) = fit_slope(&pts);
        assert!((slope - 1.0 / 3.0).abs() < 1e-12);
        assert!(rss < 1e-18);
    }

    #[test]
    fn atomic_write_creates_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.jsonl");
        atomic_write(&path, "hello\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "hello\n");
        assert!(!path.with_extension("tmp").exists());
    }

    #[test]
    fn height_ratio_zero_for_empty_family() {
        assert!(max_height_ratio(&[], &BigInt::from(100)).is_zero());
    }
}
