//! Command-line front end: argument parsing, dispatch to the modules and report printing.
//!
//! Verification commands print one line per case, `SUITE CASE-ID PASS|FAIL [witness]`, sorted by
//! case id, and exit nonzero iff some case fails. With `--format kv` each line is a
//! `suite=.. case=.. status=.. witness=..` record instead.

use crate::arith::parse::parse_poly;
use crate::error::{Error, Result};
use crate::hecke::{kl_basis, parse_hecke, KlTable};
use crate::report::{sorted, Outcome};
use crate::rouquier::{braid_complex, euler_class, verify_d2};
use crate::schur::{self, find_difference, parse_element, parse_tensor};
use crate::singular::{self, bubble_value_n, Orientation};
use crate::soergel::{self, apply_morphism, BimElement, MorphismExpr, SoergelObject};
use crate::suites::{self, SuiteParams};
use crate::weyl::{parse_word, AffinePermutation, GlWeight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "affcat", version, about = "Exact checks for affine Hecke and q-Schur algebras and their Soergel categorifications")]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Report format for verification output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extended affine Weyl group.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Extended affine Hecke algebra.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Affine q-Schur algebra on tensor space.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Extended Soergel bimodules.
    #[command(subcommand)]
    Soergel(SoergelCmd),
    /// Rouquier complexes.
    #[command(subcommand)]
    Rouquier(RouquierCmd),
    /// Singular Soergel bimodule formulas.
    #[command(subcommand)]
    Singular(SingularCmd),
    /// Run a verification suite: weyl, hecke, schur, soergel, rouquier, singular or all.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct RankArg {
    #[arg(long, default_value_t = 3)]
    pub r: usize,
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// Window and normal form `rho^k s_i1 ... s_il` of a word such as `rho s1 t2`.
    Nf {
        #[command(flatten)]
        rank: RankArg,
        word: String,
    },
    /// Action on a level-zero weight `k1,..,kr;m` or on a polynomial in `y, x1..xr`.
    Act {
        #[command(flatten)]
        rank: RankArg,
        word: String,
        #[arg(long, conflicts_with = "poly")]
        weight: Option<String>,
        #[arg(long)]
        poly: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HeckeCmd {
    /// Product of two elements such as `T[s1 rho] + q^2*T[e]`.
    Mul {
        #[command(flatten)]
        rank: RankArg,
        a: String,
        b: String,
    },
    /// The KL element `T_rho^k C'_w` of a word.
    Kl {
        #[command(flatten)]
        rank: RankArg,
        word: String,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
    },
}

#[derive(Args, Debug)]
pub struct SchurArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
}

#[derive(Subcommand, Debug)]
pub enum SchurCmd {
    /// Action of an element such as `E1 E-4 1[(1,1,1,0)]` on a tensor such as `(1,2,3) - q*(2,2,3)`.
    Act {
        #[command(flatten)]
        nr: SchurArgs,
        element: String,
        tensor: String,
    },
    /// Whether two elements act identically on all pure tensors within the window.
    Equal {
        #[command(flatten)]
        nr: SchurArgs,
        a: String,
        b: String,
        /// Window size; defaults to `n + 2L + 2` for word length `L`.
        #[arg(long)]
        window: Option<i64>,
    },
    /// Hecke relations for the images of the embedding and agreement of the displayed forms.
    SigmaVerify {
        #[command(flatten)]
        nr: SchurArgs,
    },
    /// All defining relations against the tensor-space oracle.
    PresentationSweep {
        #[command(flatten)]
        nr: SchurArgs,
        /// Extra window added to the default.
        #[arg(long, default_value_t = 0)]
        window: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SoergelCmd {
    /// Check one relation (with `--colors`) or sweep all relations and the degree audit.
    Check {
        #[command(flatten)]
        rank: RankArg,
        relation: Option<String>,
        #[arg(long, value_delimiter = ',')]
        colors: Vec<usize>,
    },
    /// Apply a morphism such as `vcomp(enddot(2), startdot(2))` to `1` (or to `--slots`) in its source.
    Eval {
        #[command(flatten)]
        rank: RankArg,
        morphism: String,
        /// Polynomials for the tensor slots of a pure input, separated by `;`.
        #[arg(long)]
        slots: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    #[command(flatten)]
    pub rank: RankArg,
    /// Braid word such as `s1 s2^-1 rho`.
    pub word: Option<String>,
    /// Without a word, sweep all words up to this length.
    #[arg(long, default_value_t = 4)]
    pub max_length: usize,
}

#[derive(Subcommand, Debug)]
pub enum RouquierCmd {
    /// Terms and differentials of the complex of a braid word.
    Build(BraidArgs),
    /// `d^2 = 0` for one word or all words up to `--max-length`.
    D2(BraidArgs),
    /// Euler class in the Hecke algebra.
    Euler(BraidArgs),
}

#[derive(Subcommand, Debug)]
pub enum SingularCmd {
    /// The shifted elementary identity for one `(n, k)`, both shifts.
    Lemma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Color-`n` bubbles in region `lambda`, both orientations, with up to `--max-dots` dots.
    Bubbles {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        max_dots: u32,
    },
    /// Both paths around the triangle for every `box_i`, and the `n`-bubble image.
    Triangle {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// `rho`-twist isomorphisms of the partial-invariant ring of a block composition.
    Twist {
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: String,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Extra window added to the default oracle window.
    #[arg(long, default_value_t = 0)]
    pub window: i64,
    #[arg(long, default_value_t = 4)]
    pub max_length: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

/// Runs a parsed command, writing to `out`; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    if let Some(j) = cli.jobs {
        // The pool can only be built once per process; later calls keep the first setting.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let fmt = cli.format;
    match cli.command {
        Command::Weyl(c) => weyl(c, out),
        Command::Hecke(c) => hecke(c, out),
        Command::Schur(c) => schur_cmd(c, fmt, out),
        Command::Soergel(c) => soergel_cmd(c, fmt, out),
        Command::Rouquier(c) => rouquier(c, fmt, out),
        Command::Singular(c) => singular_cmd(c, fmt, out),
        Command::Verify(v) => {
            let p = SuiteParams { r: v.r, n: v.n, window_extra: v.window, max_length: v.max_length, seed: v.seed };
            let t = Instant::now();
            let res = suites::run_suite(&v.suite, &p)?;
            let failures = res.iter().filter(|o| !o.pass).count();
            let _ = writeln!(std::io::stderr(), "{} cases, {} failures, {:.2}s", res.len(), failures, t.elapsed().as_secs_f64());
            let code = report("", split_suite(res), fmt, out)?;
            Ok(code)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParams(format!("output error: {}", e))
}

/// Case ids from [`suites::run_suite`] start with the suite name; keep it as the suite column.
fn split_suite(res: Vec<Outcome>) -> Vec<(String, Outcome)> {
    res.into_iter()
        .map(|o| match o.id.split_once(' ') {
            Some((s, rest)) => (s.to_string(), Outcome { id: rest.to_string(), ..o }),
            None => (String::new(), o),
        })
        .collect()
}

/// Prints rows as report lines and returns 1 iff some case failed.
fn report(default_suite: &str, rows: Vec<(String, Outcome)>, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let mut failed = false;
    for (suite, o) in rows {
        let suite = if suite.is_empty() { default_suite } else { &suite };
        failed |= !o.pass;
        let line = match fmt {
            Format::Text => format!("{} {}", suite, o),
            Format::Kv => format!(
                "suite={} case={:?} status={} witness={:?}",
                suite,
                o.id,
                if o.pass { "PASS" } else { "FAIL" },
                o.witness.unwrap_or_default()
            ),
        };
        writeln!(out, "{}", line).map_err(io)?;
    }
    Ok(failed as i32)
}

fn report_suite(suite: &str, res: Vec<Outcome>, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    report(suite, sorted(res).into_iter().map(|o| (String::new(), o)).collect(), fmt, out)
}

fn weyl(c: WeylCmd, out: &mut dyn Write) -> Result<i32> {
    match c {
        WeylCmd::Nf { rank, word } => {
            let w = AffinePermutation::from_word(rank.r, &parse_word(rank.r, &word)?)?;
            let (k, s) = w.normal_form();
            let s: Vec<String> = s.iter().map(|i| format!("s{}", i)).collect();
            writeln!(out, "window {}", w).map_err(io)?;
            writeln!(out, "normal form rho^{} {}", k, s.join(" ")).map_err(io)?;
            writeln!(out, "length {}", w.length()).map_err(io)?;
        }
        WeylCmd::Act { rank, word, weight, poly } => {
            let r = rank.r;
            let w = AffinePermutation::from_word(r, &parse_word(r, &word)?)?;
            if let Some(p) = poly {
                writeln!(out, "{}", w.act_poly(&parse_poly(r, &p)?)).map_err(io)?;
            } else {
                let wt = parse_weight(r, weight.as_deref().unwrap_or(""))?;
                let g = w.act_weight(&wt);
                let k: Vec<String> = g.kappa.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{};{}", k.join(","), g.m).map_err(io)?;
            }
        }
    }
    Ok(0)
}

/// Parses `k1,..,kr;m`.
pub fn parse_weight(r: usize, s: &str) -> Result<GlWeight> {
    let (k, m) = s.split_once(';').ok_or_else(|| Error::Parse { pos: 0, msg: "expected 'k1,..,kr;m'".into() })?;
    let kappa = k
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{}'", x) }))
        .collect::<Result<Vec<_>>>()?;
    if kappa.len() != r {
        return Err(Error::RankMismatch(kappa.len(), r));
    }
    let m = m.trim().parse().map_err(|_| Error::Parse { pos: k.len() + 1, msg: format!("bad integer '{}'", m) })?;
    Ok(GlWeight::new(kappa, m))
}

fn hecke(c: HeckeCmd, out: &mut dyn Write) -> Result<i32> {
    let mut table = KlTable::new();
    match c {
        HeckeCmd::Mul { rank, a, b } => {
            let x = parse_hecke(rank.r, &a, &mut table)?;
            let y = parse_hecke(rank.r, &b, &mut table)?;
            writeln!(out, "{}", x.mul(&y)?).map_err(io)?;
        }
        HeckeCmd::Kl { rank, word, max_length } => {
            let w = AffinePermutation::from_word(rank.r, &parse_word(rank.r, &word)?)?;
            writeln!(out, "{}", kl_basis(&w, max_length, &mut table)?).map_err(io)?;
        }
    }
    Ok(0)
}

fn check_nr(n: usize, r: usize) -> Result<()> {
    if r < 3 || n <= r {
        return Err(Error::InvalidParams(format!("need 3 <= r < n, got r = {}, n = {}", r, n)));
    }
    Ok(())
}

fn schur_cmd(c: SchurCmd, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    match c {
        SchurCmd::Act { nr, element, tensor } => {
            let x = parse_element(nr.n, &element)?;
            let v = parse_tensor(nr.r, &tensor)?;
            writeln!(out, "{}", schur::act(&x, &v)?).map_err(io)?;
            Ok(0)
        }
        SchurCmd::Equal { nr, a, b, window } => {
            let x = parse_element(nr.n, &a)?;
            let y = parse_element(nr.n, &b)?;
            let w = window.unwrap_or_else(|| schur::default_window(nr.n, &x, &y));
            match find_difference(&x, &y, nr.r, w) {
                None => {
                    writeln!(out, "equal (window {})", w).map_err(io)?;
                    Ok(0)
                }
                Some(t) => {
                    writeln!(out, "different on tensor {:?} (window {})", t, w).map_err(io)?;
                    Ok(1)
                }
            }
        }
        SchurCmd::SigmaVerify { nr } => {
            check_nr(nr.n, nr.r)?;
            report_suite("schur", suites::sigma_suite(nr.n, nr.r)?, fmt, out)
        }
        SchurCmd::PresentationSweep { nr, window } => {
            check_nr(nr.n, nr.r)?;
            report_suite("schur", suites::schur_suite(nr.n, nr.r, window), fmt, out)
        }
    }
}

fn soergel_cmd(c: SoergelCmd, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    match c {
        SoergelCmd::Check { rank, relation: Some(id), colors } => {
            report_suite("soergel", vec![soergel::check_relation(rank.r, &id, &colors)?], fmt, out)
        }
        SoergelCmd::Check { rank, relation: None, .. } => report_suite("soergel", suites::soergel_suite(rank.r), fmt, out),
        SoergelCmd::Eval { rank, morphism, slots } => {
            let r = rank.r;
            let m = MorphismExpr::parse(&morphism)?;
            let src = SoergelObject::new(m.source(r)?, 0);
            let e = match slots {
                None => BimElement::one(r, src),
                Some(s) => {
                    let polys = s.split(';').map(|p| parse_poly(r, p)).collect::<Result<Vec<_>>>()?;
                    BimElement::from_pure(r, src, &polys)
                }
            };
            let img = apply_morphism(r, &m, &e)?;
            writeln!(out, "{}", img).map_err(io)?;
            Ok(0)
        }
    }
}

fn rouquier(c: RouquierCmd, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let word = |a: &BraidArgs| -> Result<Vec<_>> {
        match &a.word {
            Some(w) => parse_word(a.rank.r, w),
            None => Err(Error::InvalidParams("a braid word is required".into())),
        }
    };
    match c {
        RouquierCmd::Build(a) => {
            let c = braid_complex(a.rank.r, &word(&a)?)?;
            write!(out, "{}", c).map_err(io)?;
            Ok(0)
        }
        RouquierCmd::Euler(a) => {
            let c = braid_complex(a.rank.r, &word(&a)?)?;
            writeln!(out, "{}", euler_class(&c)?).map_err(io)?;
            Ok(0)
        }
        RouquierCmd::D2(a) if a.word.is_some() => {
            let c = braid_complex(a.rank.r, &word(&a)?)?;
            report_suite("rouquier", verify_d2(&c), fmt, out)
        }
        RouquierCmd::D2(a) => {
            let all = suites::rouquier_suite(a.rank.r, a.max_length)?;
            report_suite("rouquier", all.into_iter().filter(|o| o.id.starts_with("d2")).collect(), fmt, out)
        }
    }
}

fn singular_cmd(c: SingularCmd, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    match c {
        SingularCmd::Lemma { n, k } => {
            let mut res = Vec::new();
            for s in [1i64, -1] {
                let id = format!("lemma n={} k={} s={:+}", n, k, s);
                res.push(if singular::shifted_elementary_identity(n, k, s)? {
                    Outcome::pass(id)
                } else {
                    Outcome::fail(id, "identity fails")
                });
            }
            report_suite("singular", res, fmt, out)
        }
        SingularCmd::Bubbles { lambda, max_dots } => {
            let n = lambda.len();
            for o in [Orientation::Clockwise, Orientation::CounterClockwise] {
                for m in 0..=max_dots {
                    let v = bubble_value_n(n, &lambda, o, m)?;
                    writeln!(out, "{} m={} {}", o, m, v).map_err(io)?;
                }
            }
            Ok(0)
        }
        SingularCmd::Triangle { r, n } => {
            check_nr(n, r)?;
            let mut res = Vec::new();
            for i in 1..=r {
                res.extend(singular::triangle_check(r, n, i)?);
            }
            let rel = singular::end_ring_relation(r, n)?;
            res.push(Outcome::from_witness("end-ring relation", (!rel.is_zero()).then(|| rel.to_string())));
            report_suite("singular", res, fmt, out)
        }
        SingularCmd::Twist { blocks } => report_suite("singular", singular::twist_ring_check(&blocks)?, fmt, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("affcat").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn weyl_normal_form() {
        let (code, s) = run_args(&["weyl", "nf", "--r", "3", "t1"]);
        assert_eq!(code, 0);
        assert!(s.contains("normal form rho^1 s2 s1"), "{}", s);
    }

    #[test]
    fn weyl_act_weight() {
        let (_, s) = run_args(&["weyl", "act", "--r", "3", "rho", "--weight", "2,-1,4;7"]);
        assert_eq!(s.trim(), "4,2,-1;3");
    }

    #[test]
    fn hecke_mul_quadratic() {
        let (_, s) = run_args(&["hecke", "mul", "--r", "3", "b[1]", "b[1]"]);
        let (_, t) = run_args(&["hecke", "mul", "--r", "3", "q + q^-1", "b[1]"]);
        assert_eq!(s, t);
    }

    #[test]
    fn singular_commands() {
        let (code, s) = run_args(&["singular", "lemma", "--n", "4", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(s.lines().count(), 2);
        assert!(s.lines().all(|l| l.starts_with("singular lemma") && l.contains(" PASS")));
        let (code, _) = run_args(&["singular", "triangle", "--r", "3", "--n", "4"]);
        assert_eq!(code, 0);
        let (code, _) = run_args(&["singular", "twist", "--blocks", "2,1"]);
        assert_eq!(code, 0);
        let (_, s) = run_args(&["singular", "bubbles", "--lambda", "1,1,1,0", "--max-dots", "1"]);
        assert!(s.contains("ccw m=1 -y + x1"), "{}", s);
    }

    #[test]
    fn verify_reports_suite_column() {
        let (code, s) = run_args(&["verify", "weyl", "--r", "3"]);
        assert_eq!(code, 0);
        assert!(s.lines().all(|l| l.starts_with("weyl ") && l.ends_with(" PASS")));
        let (_, s) = run_args(&["--format", "kv", "verify", "weyl", "--r", "3"]);
        assert!(s.lines().all(|l| l.starts_with("suite=weyl case=")));
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        let cli = Cli::try_parse_from(["affcat", "verify", "schur", "--n", "3", "--r", "3"]).unwrap();
        assert!(matches!(run(cli, &mut Vec::new()), Err(Error::InvalidParams(_))));
    }
}
