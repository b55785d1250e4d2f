//! Batch experiment CLI: validate a cubic, enumerate and certify the
//! solution family, brute-force count sums of two squares, fit the
//! log-log growth slope, and check the displayed square identity.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use chatelet::constructor::{
    alpha_range, enumerate_alpha_slice, vc_cardinality, vc_meets_lower_bound, Solution,
};
use chatelet::harness::{
    atomic_write, fit_slope, max_height_ratio, solution_jsonl_line, DensityRow,
    MultiplicityStats, CSV_HEADER,
};
use chatelet::oracle::{count_b, is_sum_two_squares, Obstruction};
use chatelet::ring::CubicPoly;
use chatelet::transfer::certify_transfer;
use chatelet::Error;

const EXIT_VERIFY: u8 = 1;
const EXIT_REDUCIBLE: u8 = 2;
const EXIT_PARITY: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "chatelet", version, about = "integer points on y^2 + z^2 = p(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the monic cubic: irreducibility, parity, root interval.
    Check {
        /// Coefficients a2,a1,a0 of x^3 + a2 x^2 + a1 x + a0
        #[arg(long)]
        poly: String,
    },
    /// Enumerate and certify the solution family for a window (X, c).
    Construct {
        #[arg(long)]
        poly: String,
        /// Window bound X
        #[arg(long)]
        limit: String,
        /// Window constant c (integer or num/den), 0 < c <= 4
        #[arg(long, default_value = "1")]
        c: String,
        /// Worker count for the alpha-sliced enumeration
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Write the JSON-lines stream here instead of stdout
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Only oracle-check solutions with |n| at most this bound
        #[arg(long, default_value_t = 1_000_000_000)]
        cutoff: u64,
    },
    /// Brute-force count of n in [1, X] with p(n) a sum of two squares.
    Count {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Density report over an X grid with a fitted log-log slope.
    Fit {
        #[arg(long)]
        poly: String,
        /// Comma-separated X values (at least 3)
        #[arg(long)]
        grid: String,
        #[arg(long, default_value = "1")]
        c: String,
        /// Brute-force counting only for X at most this bound
        #[arg(long, default_value_t = 1_000_000)]
        cutoff: u64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check the identity (x^2+8)^3 + 17 = (x^3+10x)^2 + (2x^2+23)^2.
    VerifyIdentity,
    /// Decide whether an integer is a sum of two squares, with evidence.
    Oracle {
        /// Decimal integer
        n: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Check { poly } => cmd_check(&poly),
        Command::Construct {
            poly,
            limit,
            c,
            shards,
            emit,
            cutoff,
        } => cmd_construct(&poly, &limit, &c, shards, emit.as_deref(), cutoff),
        Command::Count {
            poly,
            limit,
            shards,
        } => cmd_count(&poly, limit, shards),
        Command::Fit {
            poly,
            grid,
            c,
            cutoff,
            emit,
        } => cmd_fit(&poly, &grid, &c, cutoff, emit.as_deref()),
        Command::VerifyIdentity => cmd_verify_identity(),
        Command::Oracle { n } => cmd_oracle(&n),
    };
    ExitCode::from(code)
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn parse_coeffs(s: &str) -> Option<(BigInt, BigInt, BigInt)> {
    let parts: Vec<_> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    let mut it = parts.iter().map(|p| BigInt::from_str(p).ok());
    Some((it.next()??, it.next()??, it.next()??))
}

/// Strict polynomial parse for commands that need the full parity class.
fn parse_poly(s: &str) -> Result<CubicPoly, u8> {
    let Some((a2, a1, a0)) = parse_coeffs(s) else {
        return Err(usage(&format!("--poly expects a2,a1,a0 integers, got {s:?}")));
    };
    match CubicPoly::new(a2, a1, a0) {
        Ok(p) => Ok(p),
        Err(Error::Reducible(root)) => {
            eprintln!("error: polynomial is reducible (integer root {root})");
            Err(EXIT_REDUCIBLE)
        }
        Err(Error::ParityViolation(msg)) => {
            eprintln!("error: parity condition violated: {msg}");
            Err(EXIT_PARITY)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(EXIT_USAGE)
        }
    }
}

/// Rational argument: "3" or "3/4".
fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let num = BigInt::from_str(n.trim()).ok()?;
            let den = BigInt::from_str(d.trim()).ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => Some(BigRational::from(BigInt::from_str(s.trim()).ok()?)),
    }
}

fn parse_window_c(s: &str) -> Result<BigRational, u8> {
    let Some(c) = parse_rational(s) else {
        return Err(usage(&format!("--c expects a rational like 1 or 1/2, got {s:?}")));
    };
    if !c.is_positive() || c > BigRational::from(BigInt::from(4)) {
        return Err(usage(&format!("--c must satisfy 0 < c <= 4, got {s}")));
    }
    Ok(c)
}

fn poly_descriptor(p: &CubicPoly) -> String {
    format!("{},{},{}", p.a2, p.a1, p.a0)
}

fn cmd_check(poly: &str) -> u8 {
    let Some((a2, a1, a0)) = parse_coeffs(poly) else {
        return usage(&format!("--poly expects a2,a1,a0 integers, got {poly:?}"));
    };
    let p = match CubicPoly::new_relaxed(a2, a1, a0) {
        Ok(p) => p,
        Err(Error::Reducible(root)) => {
            println!("irreducible: no (integer root {root})");
            return EXIT_REDUCIBLE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    println!("polynomial: {p}");
    println!("irreducible: yes");
    println!(
        "parity a2^2 - a1 even: {}",
        if p.sq_parity_even() { "yes" } else { "no" }
    );
    println!(
        "parity a1*a2 - a0 odd: {}",
        if p.cross_parity_odd() { "yes" } else { "no" }
    );
    let (lo, hi) = p.theta_interval();
    println!(
        "theta in ({lo}, {hi}) ~ ({:.9}, {:.9})",
        lo.to_f64().unwrap_or(f64::NAN),
        hi.to_f64().unwrap_or(f64::NAN)
    );
    if p.has_family_parity() {
        println!("constructive family: applies");
        0
    } else {
        println!("constructive family: does not apply");
        EXIT_PARITY
    }
}

/// Enumerates the family sharded over alpha slices; merge order is fixed
/// by alpha index, so the result is independent of the shard count.
fn enumerate_sharded(
    p: &CubicPoly,
    x: &BigInt,
    c: &BigRational,
    shards: usize,
) -> chatelet::Result<Vec<Solution>> {
    let alphas = alpha_range(x, c);
    let shards = shards.max(1).min(alphas.len().max(1));
    let slices: Vec<chatelet::Result<Vec<(usize, Vec<Solution>)>>> =
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for s in 0..shards {
                let alphas = &alphas;
                let p = p.clone();
                let x = x.clone();
                let c = c.clone();
                handles.push(scope.spawn(move || {
                    let mut out = Vec::new();
                    for (i, alpha) in alphas.iter().enumerate() {
                        if i % shards == s {
                            out.push((i, enumerate_alpha_slice(&p, alpha, &x, &c)?));
                        }
                    }
                    Ok(out)
                }));
            }
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
    let mut indexed = Vec::new();
    for slice in slices {
        indexed.extend(slice?);
    }
    indexed.sort_by_key(|(i, _)| *i);
    Ok(indexed.into_iter().flat_map(|(_, sols)| sols).collect())
}

fn distinct_in_unit_window(stats: &MultiplicityStats, x: &BigInt) -> u64 {
    stats
        .per_n
        .keys()
        .filter(|n| n.is_positive() && *n <= x)
        .count() as u64
}

fn cmd_construct(
    poly: &str,
    limit: &str,
    c: &str,
    shards: usize,
    emit: Option<&std::path::Path>,
    cutoff: u64,
) -> u8 {
    let p = match parse_poly(poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let Ok(x) = BigInt::from_str(limit.trim()) else {
        return usage(&format!("--limit expects an integer, got {limit:?}"));
    };
    if x.is_negative() {
        return usage("--limit must be nonnegative");
    }
    let c = match parse_window_c(c) {
        Ok(c) => c,
        Err(code) => return code,
    };

    let solutions = match enumerate_sharded(&p, &x, &c, shards) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFY;
        }
    };

    // window cardinality lower bound for every (alpha, beta) visited
    let pairs: BTreeSet<(BigInt, BigInt)> = solutions
        .iter()
        .map(|s| (s.alpha.clone(), s.beta.clone()))
        .collect();
    for (alpha, beta) in &pairs {
        let count = match vc_cardinality(alpha, beta, &x, &c) {
            Ok(n) => n,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFY;
            }
        };
        if !vc_meets_lower_bound(alpha, &count, &x, &c) {
            eprintln!(
                "error: progression count {count} below the window bound at (alpha, beta) = ({alpha}, {beta})"
            );
            return EXIT_VERIFY;
        }
    }

    // certify every solution; the oracle double-check runs where p(n)
    // stays inside the factorization comfort zone
    let oracle_bound = BigInt::from(cutoff);
    let mut lines = String::new();
    let mut oracle_checked = 0u64;
    let mut oracle_skipped = 0u64;
    for s in &solutions {
        let uv = match certify_transfer(&p, s) {
            Ok(uv) => uv,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFY;
            }
        };
        if s.n.abs() <= oracle_bound {
            match is_sum_two_squares(&p.eval(&s.n)) {
                Ok(cert) if cert.member => oracle_checked += 1,
                Ok(_) => {
                    eprintln!(
                        "error: oracle disagrees with the transfer certificate at n = {}",
                        s.n
                    );
                    return EXIT_VERIFY;
                }
                Err(Error::EffortExceeded { .. }) => oracle_skipped += 1,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_VERIFY;
                }
            }
        }
        lines.push_str(&solution_jsonl_line(s, &uv));
        lines.push('\n');
    }

    if let Some(path) = emit {
        if let Err(e) = atomic_write(path, &lines) {
            eprintln!("error: {e}");
            return EXIT_VERIFY;
        }
    } else {
        print!("{lines}");
    }

    let stats = MultiplicityStats::from_solutions(&solutions);
    let in_unit_window = distinct_in_unit_window(&stats, &x);
    let in_abs_window = stats.per_n.keys().filter(|n| n.abs() <= x).count();
    eprintln!(
        "solutions: {} total, {} distinct n ({} with 1 <= n <= X, {} with |n| <= X); oracle confirmed {}, skipped {}",
        stats.total(),
        stats.distinct(),
        in_unit_window,
        in_abs_window,
        oracle_checked,
        oracle_skipped
    );

    let heights = max_height_ratio(&solutions, &x);
    let row = DensityRow {
        poly: poly_descriptor(&p),
        x,
        c,
        count_b: None,
        constructive_total: stats.total(),
        constructive_distinct: in_unit_window,
        max_multiplicity: stats.max,
        max_height_ratio: heights,
        slope: None,
    };
    println!("{CSV_HEADER}");
    println!("{}", row.to_csv());
    0
}

fn cmd_count(poly: &str, limit: u64, shards: usize) -> u8 {
    let p = match parse_poly(poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if limit < 1 {
        return usage("--limit must be at least 1");
    }
    let count = match count_b(&p, limit, shards.max(1)) {
        Ok(n) => n,
        Err(Error::EffortExceededAt(n)) => {
            eprintln!("error: factorization budget exhausted at n = {n}");
            return EXIT_VERIFY;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFY;
        }
    };
    println!("count_B = {count}");
    let row = DensityRow {
        poly: poly_descriptor(&p),
        x: BigInt::from(limit),
        c: BigRational::one(),
        count_b: Some(count),
        constructive_total: 0,
        constructive_distinct: 0,
        max_multiplicity: 0,
        max_height_ratio: 0.0,
        slope: None,
    };
    println!("{CSV_HEADER}");
    println!("{}", row.to_csv());
    0
}

fn cmd_fit(poly: &str, grid: &str, c: &str, cutoff: u64, emit: Option<&std::path::Path>) -> u8 {
    let p = match parse_poly(poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let c = match parse_window_c(c) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let mut xs = Vec::new();
    for part in grid.split(',') {
        match BigInt::from_str(part.trim()) {
            Ok(x) if !x.is_negative() => xs.push(x),
            _ => return usage(&format!("--grid expects nonnegative integers, got {part:?}")),
        }
    }
    if xs.len() < 3 {
        return usage("--grid needs at least 3 points");
    }
    xs.sort();

    let mut rows = Vec::new();
    let mut points = Vec::new();
    for x in &xs {
        let solutions = match enumerate_sharded(&p, x, &c, 1) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFY;
            }
        };
        let stats = MultiplicityStats::from_solutions(&solutions);
        let distinct = distinct_in_unit_window(&stats, x);
        let brute = match x.to_u64() {
            Some(xu) if xu >= 1 && xu <= cutoff => match count_b(&p, xu, 4) {
                Ok(n) => Some(n),
                Err(Error::EffortExceededAt(n)) => {
                    eprintln!("error: factorization budget exhausted at n = {n}");
                    return EXIT_VERIFY;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_VERIFY;
                }
            },
            _ => None,
        };
        if let Some(b) = brute {
            if distinct > b {
                eprintln!(
                    "error: constructive distinct count {distinct} exceeds count_B = {b} at X = {x}"
                );
                return EXIT_VERIFY;
            }
        }
        if distinct >= 1 {
            points.push((
                x.to_f64().unwrap_or(f64::MAX).ln(),
                (distinct as f64).ln(),
            ));
        }
        rows.push(DensityRow {
            poly: poly_descriptor(&p),
            x: x.clone(),
            c: c.clone(),
            count_b: brute,
            constructive_total: stats.total(),
            constructive_distinct: distinct,
            max_multiplicity: stats.max,
            max_height_ratio: max_height_ratio(&solutions, x),
            slope: None,
        });
    }

    let slope = if points.len() >= 2 {
        let (slope, rss) = fit_slope(&points);
        eprintln!("slope = {slope:.6} (rss = {rss:.6}, points = {})", points.len());
        Some(slope)
    } else {
        eprintln!("slope unavailable: fewer than 2 grid points with nonzero counts");
        None
    };
    for row in &mut rows {
        row.slope = slope;
    }

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    if let Some(path) = emit {
        if let Err(e) = atomic_write(path, &csv) {
            eprintln!("error: {e}");
            return EXIT_VERIFY;
        }
    } else {
        print!("{csv}");
    }
    0
}

fn cmd_verify_identity() -> u8 {
    use chatelet::harness::identity;
    if !identity::symbolic_match() {
        eprintln!(
            "error: coefficient mismatch: lhs = {:?}, rhs = {:?}",
            identity::lhs_poly().coeffs(),
            identity::rhs_poly().coeffs()
        );
        return EXIT_VERIFY;
    }
    println!("symbolic: (x^2+8)^3 + 17 = (x^3+10x)^2 + (2x^2+23)^2");
    if let Some(x) = identity::pointwise_mismatch(-1000..=1000) {
        eprintln!("error: pointwise mismatch at x = {x}");
        return EXIT_VERIFY;
    }
    println!("pointwise: equal for all x in [-1000, 1000]");
    0
}

fn cmd_oracle(n: &str) -> u8 {
    let Ok(n) = BigInt::from_str(n.trim()) else {
        return usage(&format!("oracle expects a decimal integer, got {n:?}"));
    };
    match is_sum_two_squares(&n) {
        Ok(cert) => {
            if let Some(w) = cert.witness {
                println!("yes ({},{})", w.re, w.im);
            } else {
                match cert.obstruction {
                    Some(Obstruction::Negative) => println!("no (negative)"),
                    Some(Obstruction::Prime { p, exp }) => println!("no ({p}^{exp})"),
                    None => println!("no"),
                }
            }
            0
        }
        Err(Error::EffortExceeded { remaining, .. }) => {
            eprintln!("error: factorization budget exhausted on cofactor {remaining}");
            EXIT_VERIFY
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_VERIFY
        }
    }
}
