use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cyk_core::acceptance;
use cyk_core::category::RibbonData;
use cyk_core::format::{load_algebra, load_category, load_invariants, load_manifold, parse_pi1, render_manifold};
use cyk_core::frobenius::primitive_idempotents_up_to;
use cyk_core::link::{EvalConfig, LinkBody};
use cyk_core::manifold::{
    classify_stable, closed_form_value, cyk, cyk_generators, invariants_from_presentation, HandlePresentation,
    ManifoldInvariants, Stabilizer,
};
use cyk_core::{CycScalar, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "cyk", version, about = "Exact Crane-Yetter-Kauffman invariants of 4-manifolds")]
struct Cli {
    /// Largest cyclotomic order tried when splitting idempotents
    #[arg(long, global = true, default_value_t = 48)]
    order_cap: u64,
    /// Largest number of parallel strands in a TL evaluation
    #[arg(long, global = true, default_value_t = 16)]
    width_cap: usize,
    /// Digits after the decimal point in `approx` lines
    #[arg(long, global = true, default_value_t = 6)]
    approx_digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a ribbon category
    Validate { category: String },
    /// Gauss sums, global dimension and fermion test
    Gauss { category: String },
    /// Transparent simples and the symmetric center
    Center { category: String },
    /// Frobenius axioms, window and semisimplicity of an algebra
    Frobenius { algebra: String },
    /// The invariant of a presentation, exactly and approximately
    Cyk { category: String, manifold: String },
    /// Values on the generating manifolds
    Generators { category: String },
    /// Reference decomposition up to stabilization
    Classify {
        #[command(flatten)]
        inv: InvArgs,
        #[arg(long, value_enum, default_value_t = Stab::S2s2)]
        stab: Stab,
    },
    /// The invariant from (chi, sigma, spin) alone
    ClosedForm {
        category: String,
        #[command(flatten)]
        inv: InvArgs,
        /// Take the invariants from a presentation instead
        #[arg(long, conflicts_with_all = ["file", "chi", "sigma"])]
        manifold: Option<String>,
    },
    /// Slide handle `i` over handle `j` and print the new presentation
    Slide {
        manifold: String,
        i: usize,
        j: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i64,
    },
    /// Run the acceptance suite
    Selftest {
        /// Run a single criterion
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct InvArgs {
    /// Invariants file with chi, sigma, spin and optionally pi1
    file: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "sigma")]
    chi: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "chi")]
    sigma: Option<i64>,
    #[arg(long)]
    spin: bool,
    #[arg(long, default_value = "trivial")]
    pi1: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Stab {
    S2s2,
    Cp2,
}

impl InvArgs {
    fn resolve(&self) -> Result<ManifoldInvariants> {
        if let Some(path) = &self.file {
            return load_invariants(path);
        }
        let (Some(chi), Some(sigma)) = (self.chi, self.sigma) else {
            return Err(Error::InvalidInput("give an invariants file or --chi and --sigma".into()));
        };
        let pi1 = parse_pi1(&self.pi1)
            .ok_or_else(|| Error::InvalidInput(format!("--pi1 expects trivial or Z, found `{}`", self.pi1)))?;
        Ok(ManifoldInvariants { chi, sigma, spin: self.spin, pi1 })
    }
}

fn in_order(x: &CycScalar, order: u64) -> CycScalar {
    x.embed(order).unwrap_or_else(|_| x.clone())
}

fn approx(x: &CycScalar, digits: usize) -> String {
    let z = x.to_complex();
    let clean = |v: f64| if v.abs() < 0.5 * 10f64.powi(-(digits as i32)) { 0.0 } else { v };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.digits$}")
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re:.digits$} {sign} {:.digits$}i", im.abs())
    }
}

fn labels(r: &RibbonData, xs: &[usize]) -> String {
    xs.iter().map(|&x| r.labels[x].as_str()).collect::<Vec<_>>().join(", ")
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let cfg = EvalConfig { width_cap: cli.width_cap };
    let digits = cli.approx_digits;
    let mut out = String::new();
    let mut ok = true;
    match &cli.command {
        Command::Validate { category } => {
            let r = load_category(category)?;
            let report = r.validate();
            ok = report.all_passed();
            let _ = writeln!(out, "category = {}", r.name);
            out.push_str(&report.to_string());
        }
        Command::Gauss { category } => {
            let r = load_category(category)?;
            let o = r.order;
            let _ = writeln!(out, "order = {o}");
            let _ = writeln!(out, "tau+ = {}", in_order(&r.gauss_sum(true), o));
            let _ = writeln!(out, "tau- = {}", in_order(&r.gauss_sum(false), o));
            let _ = writeln!(out, "D = {}", in_order(&r.global_dimension(), o));
            let _ = writeln!(out, "has_fermion = {}", r.has_fermion()?);
        }
        Command::Center { category } => {
            let r = load_category(category)?;
            let o = r.order;
            let center = r.symmetric_center()?;
            let _ = writeln!(out, "order = {o}");
            let _ = writeln!(out, "transparent = {}", labels(&r, &r.transparent_simples()));
            for (label, d) in center.labels.iter().zip(&center.dims) {
                let _ = writeln!(out, "dim.{label} = {}", in_order(d, o));
            }
            let _ = writeln!(out, "center_dimension = {}", in_order(&center.global_dimension(), o));
            let _ = writeln!(out, "has_fermion = {}", r.has_fermion()?);
        }
        Command::Frobenius { algebra } => {
            let a = load_algebra(algebra)?;
            let o = a.order();
            let report = a.check_axioms();
            let _ = writeln!(out, "order = {o}");
            out.push_str(&report.to_string());
            if !report.all_passed() {
                return Ok((out, false));
            }
            let w = a.window()?;
            out.push_str("window =\n");
            for row in &w {
                let cells: Vec<String> = row.iter().map(|x| in_order(x, o).to_string()).collect();
                let _ = writeln!(out, "  {}", cells.join(" ; "));
            }
            let semisimple = a.is_semisimple()?;
            let _ = writeln!(out, "semisimple = {semisimple}");
            if semisimple {
                let _ = writeln!(out, "indecomposables = {}", a.indecomposable_count()?);
                match primitive_idempotents_up_to(&a, cli.order_cap) {
                    Ok((order, idems)) => {
                        let _ = writeln!(out, "split_order = {order}");
                        for (k, e) in idems.iter().enumerate() {
                            let cells: Vec<String> = e.iter().map(|x| in_order(x, order).to_string()).collect();
                            let _ = writeln!(out, "idempotent.{k} = {}", cells.join(" ; "));
                        }
                    }
                    Err(e @ Error::SplitFieldNeeded { .. }) => {
                        let _ = writeln!(out, "split_order = none up to {} ({})", cli.order_cap, e.code());
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Command::Cyk { category, manifold } => {
            let r = load_category(category)?;
            let p = load_manifold(manifold)?;
            let v = cyk(&p, &r, &cfg)?;
            let _ = writeln!(out, "order = {}", r.order);
            let _ = writeln!(out, "value = {}", in_order(&v, r.order));
            let _ = writeln!(out, "approx = {}", approx(&v, digits));
        }
        Command::Generators { category } => {
            let r = load_category(category)?;
            let g = cyk_generators(&r, &cfg)?;
            let _ = writeln!(out, "order = {}", r.order);
            let _ = writeln!(out, "{g}");
        }
        Command::Classify { inv, stab } => {
            let inv = inv.resolve()?;
            let stab = match stab {
                Stab::S2s2 => Stabilizer::S2S2,
                Stab::Cp2 => Stabilizer::CP2,
            };
            let _ = writeln!(out, "{}", classify_stable(&inv, stab)?);
        }
        Command::ClosedForm { category, inv, manifold } => {
            let r = load_category(category)?;
            let inv = match manifold {
                Some(m) => invariants_from_presentation(&load_manifold(m)?),
                None => inv.resolve()?,
            };
            inv.check()?;
            let g = cyk_generators(&r, &cfg)?;
            let v = closed_form_value(&g, &inv)?;
            let _ = writeln!(out, "order = {}", r.order);
            let _ = writeln!(out, "value = {}", in_order(&v, r.order));
            let _ = writeln!(out, "approx = {}", approx(&v, digits));
        }
        Command::Slide { manifold, i, j, sign } => {
            let p = load_manifold(manifold)?;
            let body = match &p.body {
                LinkBody::Diagram(l) => LinkBody::Diagram(l.handle_slide(*i, *j, *sign)?.link),
                LinkBody::Matrix(q) => LinkBody::Matrix(q.handle_slide(*i, *j, *sign)?),
            };
            let slid = HandlePresentation { body, ..p };
            out.push_str(&render_manifold(&slid));
        }
        Command::Selftest { only } => {
            let outcomes = match only {
                Some(id) if (1..=acceptance::TITLES.len()).contains(id) => vec![acceptance::run(*id, &cfg)],
                Some(id) => return Err(Error::InvalidInput(format!("no criterion {id}"))),
                None => acceptance::run_all(&cfg),
            };
            for o in &outcomes {
                let _ = writeln!(out, "{o}");
            }
            ok = outcomes.iter().all(|o| o.passed);
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(if e.is_parse_error() { 2 } else { 1 })
        }
    }
}
