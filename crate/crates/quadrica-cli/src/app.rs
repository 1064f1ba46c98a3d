//! Subcommand surface and exit-code policy.
//!
//! Exit codes: 0 success, 2 validation error (bad input, bad flags,
//! unmet preconditions), 3 computation bound exceeded (degree caps, search
//! guards, retry budgets), 4 verify-paper mismatch.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use quadrica::constructions::{
    edge_ideal, engheta_form, koszul_complex, minors2, northcott, scaled_koszul, table1_graphs,
    EnghetaCase, EnghetaParams, Graph, LinearMatrix,
};
use quadrica::error::AlgebraError;
use quadrica::groebner;
use quadrica::ideal::Ideal;
use quadrica::invariants::{hilbert_report, is_nondegenerate, socle_degrees};
use quadrica::koszul::{
    classify_ht2_mult2, g_quadratic_witness, koszul_necessary_battery, main_theorem_membership,
    sample_experiment, Classification, KoszulVerdict, SampleSpec,
};
use quadrica::order::{proof_product_orders, standard_orders, MonomialOrder};
use quadrica::parse::{parse_field, parse_ideal_file, parse_order, parse_polynomial};
use quadrica::poly::Polynomial;
use quadrica::resolution::{betti_table, minimize};
use quadrica::ring::{ring_order_text, PolyRing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser)]
#[command(
    name = "quadrica",
    about = "Exact commutative algebra for quadric ideals: Groebner bases, Betti tables, Hilbert invariants, Koszul checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutOpt {
    /// Write the primary output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal file, printed as an ideal file.
    Gb {
        ideal: PathBuf,
        /// lex | grlex | grevlex | block(sub[v,..];...)
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// Skip S-pairs above this degree (reported, exit code 3).
        #[arg(long)]
        degree_cap: Option<u32>,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Graded Betti table of S/I from the minimal free resolution.
    Betti {
        ideal: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Hilbert report of S/I as JSON: numerator Q, codim c, multiplicity e,
    /// dimension, and K = Q/(1-t)^c.
    Invariants {
        ideal: PathBuf,
        /// Also verify the input is unmixed (computes the hull; slower).
        #[arg(long)]
        check_unmixed: bool,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Socle degrees of an artinian quotient, as JSON.
    Socle {
        ideal: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Ideal quotient (I : f) or (I : J).
    Colon {
        ideal: PathBuf,
        /// A polynomial in the ideal's ring.
        #[arg(long, conflicts_with = "with")]
        by: Option<String>,
        /// A second ideal file.
        #[arg(long)]
        with: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Intersection of two ideals.
    Intersect {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Equidimensional hull (unmixed part) via the Ext annihilator.
    Unmixed {
        ideal: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Builders for the ideal and resolution families under study.
    Construct {
        #[command(subcommand)]
        family: ConstructCmd,
    },
    /// Necessary-condition battery plus G-quadratic witness search.
    CheckKoszul {
        ideal: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Structure classifier for height-two multiplicity-two quadric ideals
    /// over a small prime field.
    Classify {
        ideal: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Random quadric sampling harness; emits CSV.
    Sample {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        g: usize,
        /// QQ | Fp:<p>
        #[arg(long, default_value = "Fp:101")]
        field: String,
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        trials: u32,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Run the paper-table verification suite (the acceptance criteria).
    VerifyPaper {
        /// Only run criteria whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Edge ideal of a graph: one of the six classified table graphs by
    /// label, or an explicit edge list.
    Edge {
        /// i-a | i-b | i-c | ii | iii | iv
        #[arg(long)]
        table1: Option<String>,
        /// Comma-separated 1-based edges, e.g. "1-2,2-3,3-4,4-1".
        #[arg(long)]
        edges: Option<String>,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long, default_value = "QQ")]
        field: String,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Koszul complex on a sequence of forms: prints the Betti table of the
    /// minimized complex and verifies composition-zero.
    Koszul {
        /// Ring declaration, e.g. "ring QQ [x, y, z] order grevlex".
        #[arg(long)]
        ring: String,
        /// Semicolon-separated forms.
        #[arg(long)]
        forms: String,
        #[command(flatten)]
        out: OutOpt,
    },
    /// The z*J resolution: Koszul complex on independent linear forms with
    /// the first differential multiplied by z.
    Zj {
        #[arg(long)]
        ring: String,
        /// The linear form z.
        #[arg(long)]
        z: String,
        /// Semicolon-separated independent linear forms.
        #[arg(long)]
        forms: String,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Engheta form (x, y) ∩ (z, w).
    EnghetaIa1(EnghetaArgs),
    /// Engheta form ((x, y)^2, xz + yw).
    EnghetaIa2(EnghetaArgs),
    /// Engheta form (a_1 x, ..., a_{g-1} x, q), q in (a_i) \ (x).
    EnghetaIb(EnghetaArgs),
    /// Engheta form (a_1 x, ..., a_{g-1} x, q), q a nonzerodivisor.
    EnghetaIi(EnghetaArgs),
    /// All 2x2 minors of a 2xn matrix of linear forms.
    Minors2 {
        #[arg(long)]
        ring: String,
        /// Two rows separated by ';', entries by ','.
        #[arg(long)]
        rows: String,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Northcott/AKM linkage ideal: prints I_2 of the 2x3 matrix, with the
    /// complete intersection C in comments.
    Northcott {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        b1: String,
        #[arg(long)]
        b2: String,
        #[command(flatten)]
        out: OutOpt,
    },
}

#[derive(Args)]
struct EnghetaArgs {
    #[arg(long, default_value_t = 4)]
    g: usize,
    #[arg(long, default_value = "QQ")]
    field: String,
    /// Semicolon-separated linear forms ([x;y;z;w] for the (i_a) cases,
    /// [a_1;..;a_{g-1};x] for (i_b)/(ii)); canonical variables by default.
    #[arg(long)]
    forms: Option<String>,
    /// The quadric q for the (i_b)/(ii) cases.
    #[arg(long)]
    quadric: Option<String>,
    #[command(flatten)]
    out: OutOpt,
}

enum AppError {
    Validation(String),
    Bound(String),
}

impl From<AlgebraError> for AppError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::SearchBound(_) | AlgebraError::BoundExhausted(_) => {
                AppError::Bound(e.to_string())
            }
            other => AppError::Validation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Validation(format!("io error: {e}"))
    }
}

fn emit(out: &OutOpt, text: &str) -> Result<(), AppError> {
    match &out.out {
        Some(path) => {
            fs::write(path, text)?;
        }
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
        }
    }
    Ok(())
}

fn load_ideal(path: &PathBuf) -> Result<(Arc<PolyRing>, Ideal), AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let (ring, gens) = parse_ideal_file(&text)?;
    Ok((ring.clone(), Ideal::new(ring, gens)))
}

/// Ideal-file rendering: ring declaration plus one generator per line.
fn render_ideal(ideal: &Ideal) -> String {
    let mut s = format!("{}\n", ideal.ring);
    for g in &ideal.gens {
        s.push_str(&format!("{g}\n"));
    }
    s
}

#[derive(Serialize)]
struct HilbertJson {
    #[serde(rename = "Q")]
    q: Vec<i64>,
    c: usize,
    e: i64,
    dim: i64,
    #[serde(rename = "K")]
    k: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unmixed: Option<bool>,
}

pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with its own success exit.
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(AppError::Validation(m)) => {
            eprintln!("error: {m}");
            EXIT_VALIDATION
        }
        Err(AppError::Bound(m)) => {
            eprintln!("error: {m}");
            EXIT_BOUND
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, AppError> {
    match cmd {
        Command::Gb {
            ideal,
            order,
            degree_cap,
            out,
        } => {
            let (ring, ideal) = load_ideal(&ideal)?;
            let order = parse_order(&order, &ring.vars)?;
            let gb = groebner::reduced_groebner_basis(&ideal.gens, &order, degree_cap)?;
            let mut text = format!(
                "ring {} [{}] order {}\n",
                ring.field,
                ring.vars.join(", "),
                ring_order_text(&order, &ring.vars)
            );
            if let Some(d) = gb.truncated_at {
                text.push_str(&format!("# truncated: S-pairs above degree {d} skipped\n"));
            }
            for g in &gb.gens {
                text.push_str(&format!("{g}\n"));
            }
            emit(&out, &text)?;
            Ok(if gb.truncated_at.is_some() {
                EXIT_BOUND
            } else {
                EXIT_OK
            })
        }
        Command::Betti { ideal, out } => {
            let (_, ideal) = load_ideal(&ideal)?;
            let bt = betti_table(&ideal)?;
            emit(&out, &format!("{bt}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Invariants {
            ideal,
            check_unmixed,
            out,
        } => {
            let (_, ideal) = load_ideal(&ideal)?;
            let rep = hilbert_report(&ideal)?;
            let unmixed = if check_unmixed {
                Some(ideal.unmixed_part()?.equal(&ideal))
            } else {
                None
            };
            if !check_unmixed && rep.dim > 0 {
                eprintln!(
                    "note: e counts top-dimensional components only; \
                     pass --check-unmixed to verify unmixedness"
                );
            }
            let json = HilbertJson {
                q: rep.numerator.clone(),
                c: rep.codim,
                e: rep.multiplicity,
                dim: rep.dim,
                k: rep.k_poly.clone(),
                unmixed,
            };
            emit(&out, &format!("{}\n", serde_json::to_string(&json).unwrap()))?;
            Ok(EXIT_OK)
        }
        Command::Socle { ideal, out } => {
            let (_, ideal) = load_ideal(&ideal)?;
            let socle = socle_degrees(&ideal)?;
            let map: std::collections::BTreeMap<String, u64> = socle
                .degrees
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect();
            emit(
                &out,
                &format!("{}\n", serde_json::to_string(&map).unwrap()),
            )?;
            Ok(EXIT_OK)
        }
        Command::Colon {
            ideal,
            by,
            with,
            out,
        } => {
            let (ring, ideal) = load_ideal(&ideal)?;
            let result = match (by, with) {
                (Some(poly), None) => {
                    let f = parse_polynomial(&poly, &ring)?;
                    ideal.quotient(&f)?
                }
                (None, Some(path)) => {
                    let (other_ring, other) = load_ideal(&path)?;
                    if !other_ring.compatible(&ring) {
                        return Err(AppError::Validation(
                            "colon operands live in different rings".into(),
                        ));
                    }
                    ideal.colon(&other)?
                }
                _ => {
                    return Err(AppError::Validation(
                        "colon needs exactly one of --by <poly> or --with <ideal-file>".into(),
                    ))
                }
            };
            emit(&out, &render_ideal(&result))?;
            Ok(EXIT_OK)
        }
        Command::Intersect { a, b, out } => {
            let (ring_a, ia) = load_ideal(&a)?;
            let (ring_b, ib) = load_ideal(&b)?;
            if !ring_a.compatible(&ring_b) {
                return Err(AppError::Validation(
                    "intersect operands live in different rings".into(),
                ));
            }
            emit(&out, &render_ideal(&ia.intersect(&ib)))?;
            Ok(EXIT_OK)
        }
        Command::Unmixed { ideal, out } => {
            let (_, ideal) = load_ideal(&ideal)?;
            emit(&out, &render_ideal(&ideal.unmixed_part()?))?;
            Ok(EXIT_OK)
        }
        Command::Construct { family } => construct(family),
        Command::CheckKoszul {
            ideal,
            trials,
            seed,
            out,
        } => {
            let (ring, ideal) = load_ideal(&ideal)?;
            let report = koszul_necessary_battery(&ideal)?;
            let mut text = String::new();
            for (name, flag) in [
                ("quadratic-generation", report.quadratic_generation),
                ("subdiagonal (2.2)", report.subdiagonal_ok),
                ("linear-strand bounds (2.3a)", report.linear_strand_bounds),
                ("diagonal bounds (2.3b)", report.diagonal_bounds),
                ("diagonal vanishing (2.3c)", report.diagonal_vanishing_ok),
                ("beta_{2,3} >= 2 (2.4)", report.beta23_ok),
                ("pd-level linear socle (2.6)", report.pd_linear_socle_ok),
                ("reg <= pd (2.8)", report.reg_le_pd),
                ("reg = pd iff CI (2.8)", report.ci_equality_ok),
                ("beta_i <= C(g,i) bound", report.betti_bound_ok),
            ] {
                text.push_str(&format!(
                    "{} {}\n",
                    if flag { "ok  " } else { "FAIL" },
                    name
                ));
            }
            text.push_str(&format!("table:\n{}\n", report.table));
            let mut report = report;
            if report.verdict == KoszulVerdict::PassesNecessary
                && report.quadratic_generation
                && !ideal.is_zero_ideal()
            {
                let mut orders = standard_orders(ring.nvars());
                orders.extend(proof_product_orders(ring.nvars()));
                if let Some(w) = g_quadratic_witness(&ideal, &orders, trials, seed)? {
                    report = report.with_witness();
                    text.push_str(&format!(
                        "witness: order {}\n",
                        ring_order_text(&w.order, &ring.vars)
                    ));
                }
            }
            text.push_str(&format!("verdict: {}\n", report.verdict));
            if let Some(label) = main_theorem_membership(&report.table) {
                text.push_str(&format!("table-label: {label}\n"));
            }
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Classify { ideal, out } => {
            let (_, ideal) = load_ideal(&ideal)?;
            match classify_ht2_mult2(&ideal)? {
                Classification::Match(class) => {
                    emit(&out, &format!("{class}\n"))?;
                    Ok(EXIT_OK)
                }
                Classification::NoMatch { diagnostics } => {
                    emit(&out, &format!("none\n{diagnostics}\n"))?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Sample {
            n,
            g,
            field,
            count,
            seed,
            trials,
            out,
        } => {
            let field = parse_field(&field)?;
            let rows = sample_experiment(&SampleSpec {
                n,
                g,
                field,
                count,
                base_seed: seed,
                witness_trials: trials,
            })?;
            let mut csv =
                String::from("seed,n,g,codim,e,pd,reg,betti_bound_ok,table_label,witness_found\n");
            for r in rows {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    r.seed,
                    r.n,
                    r.g,
                    r.codim,
                    r.multiplicity,
                    r.pd,
                    r.reg,
                    r.betti_bound_ok,
                    r.table_label
                        .map(|l| l.to_string())
                        .unwrap_or_else(|| "none".into()),
                    r.witness_found
                ));
            }
            emit(&out, &csv)?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { only } => {
            let results = crate::verify::run_all(only.as_deref());
            let mut failed = false;
            for r in &results {
                match &r.outcome {
                    Ok(()) => println!("PASS {}", r.name),
                    Err(diff) => {
                        failed = true;
                        println!("FAIL {}", r.name);
                        for line in diff.lines() {
                            println!("     {line}");
                        }
                    }
                }
            }
            println!(
                "{} passed, {} failed",
                results.iter().filter(|r| r.outcome.is_ok()).count(),
                results.iter().filter(|r| r.outcome.is_err()).count()
            );
            Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
        }
    }
}

fn parse_forms(
    ring: &Arc<PolyRing>,
    text: &str,
) -> Result<Vec<Polynomial>, AppError> {
    text.split(';')
        .map(|s| parse_polynomial(s.trim(), ring).map_err(AppError::from))
        .collect()
}

fn construct(cmd: ConstructCmd) -> Result<i32, AppError> {
    match cmd {
        ConstructCmd::Edge {
            table1,
            edges,
            vertices,
            field,
            out,
        } => {
            let field = parse_field(&field)?;
            let graph = match (table1, edges) {
                (Some(label), None) => table1_graphs()
                    .into_iter()
                    .find(|(l, _)| *l == label)
                    .map(|(_, g)| g)
                    .ok_or_else(|| {
                        AppError::Validation(format!(
                            "unknown table label `{label}` (use i-a, i-b, i-c, ii, iii, iv)"
                        ))
                    })?,
                (None, Some(list)) => {
                    let mut pairs = Vec::new();
                    let mut max = 0;
                    for part in list.split(',') {
                        let (a, b) = part
                            .trim()
                            .split_once('-')
                            .ok_or_else(|| {
                                AppError::Validation(format!("bad edge `{part}`"))
                            })?;
                        let a: usize = a.trim().parse().map_err(|_| {
                            AppError::Validation(format!("bad vertex `{a}`"))
                        })?;
                        let b: usize = b.trim().parse().map_err(|_| {
                            AppError::Validation(format!("bad vertex `{b}`"))
                        })?;
                        if a == 0 || b == 0 {
                            return Err(AppError::Validation(
                                "vertices are 1-based".into(),
                            ));
                        }
                        max = max.max(a).max(b);
                        pairs.push((a - 1, b - 1));
                    }
                    let n = vertices.unwrap_or(max);
                    Graph::new(n, &pairs)?
                }
                _ => {
                    return Err(AppError::Validation(
                        "edge needs exactly one of --table1 <label> or --edges <list>".into(),
                    ))
                }
            };
            let vars: Vec<String> = (1..=graph.vertices).map(|i| format!("x{i}")).collect();
            let ring = PolyRing::new(field, vars, MonomialOrder::GrevLex)?;
            let ideal = edge_ideal(&graph, &ring)?;
            emit(&out, &render_ideal(&ideal))?;
            Ok(EXIT_OK)
        }
        ConstructCmd::Koszul { ring, forms, out } => {
            let ring = quadrica::parse::parse_ring_decl(&ring)?;
            let forms = parse_forms(&ring, &forms)?;
            let complex = koszul_complex(&forms)?;
            let ok = complex.verify_complex();
            let bt = minimize(&complex).betti();
            emit(
                &out,
                &format!("complex-ok: {ok}\n{bt}\n"),
            )?;
            Ok(EXIT_OK)
        }
        ConstructCmd::Zj {
            ring,
            z,
            forms,
            out,
        } => {
            let ring = quadrica::parse::parse_ring_decl(&ring)?;
            let z = parse_polynomial(&z, &ring)?;
            let forms = parse_forms(&ring, &forms)?;
            let complex = scaled_koszul(&z, &forms)?;
            let ok = complex.verify_complex();
            let bt = minimize(&complex).betti();
            emit(&out, &format!("complex-ok: {ok}\n{bt}\n"))?;
            Ok(EXIT_OK)
        }
        ConstructCmd::EnghetaIa1(args) => engheta(EnghetaCase::IaIntersection, args),
        ConstructCmd::EnghetaIa2(args) => engheta(EnghetaCase::IaQuadric, args),
        ConstructCmd::EnghetaIb(args) => engheta(EnghetaCase::Ib, args),
        ConstructCmd::EnghetaIi(args) => engheta(EnghetaCase::Ii, args),
        ConstructCmd::Minors2 { ring, rows, out } => {
            let ring = quadrica::parse::parse_ring_decl(&ring)?;
            let rows: Vec<Vec<Polynomial>> = rows
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(|e| parse_polynomial(e.trim(), &ring).map_err(AppError::from))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            if rows.len() != 2 {
                return Err(AppError::Validation("minors2 needs exactly 2 rows".into()));
            }
            let matrix = LinearMatrix::new(ring.clone(), rows)?;
            let ideal = minors2(&matrix)?;
            emit(&out, &render_ideal(&ideal))?;
            Ok(EXIT_OK)
        }
        ConstructCmd::Northcott {
            ring,
            f,
            g,
            a1,
            a2,
            b1,
            b2,
            out,
        } => {
            let ring = quadrica::parse::parse_ring_decl(&ring)?;
            let parse = |s: &str| parse_polynomial(s, &ring).map_err(AppError::from);
            let (c, ideal) = northcott(
                &parse(&f)?,
                &parse(&g)?,
                &parse(&a1)?,
                &parse(&a2)?,
                &parse(&b1)?,
                &parse(&b2)?,
            )?;
            let mut text = String::new();
            for gen in &c.gens {
                text.push_str(&format!("# C: {gen}\n"));
            }
            text.push_str(&render_ideal(&ideal));
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn engheta(case: EnghetaCase, args: EnghetaArgs) -> Result<i32, AppError> {
    let field = parse_field(&args.field)?;
    let g = args.g;
    // Canonical rings: 4 variables for the (i_a) cases, g-1 or g otherwise.
    let nvars = match case {
        EnghetaCase::IaIntersection | EnghetaCase::IaQuadric => 4,
        EnghetaCase::Ib => g - 1,
        EnghetaCase::Ii => g,
    };
    let vars: Vec<String> = (1..=nvars).map(|i| format!("a{i}")).collect();
    let ring = PolyRing::new(field, vars, MonomialOrder::GrevLex)?;
    let params = match case {
        EnghetaCase::IaIntersection | EnghetaCase::IaQuadric => {
            let forms = match &args.forms {
                Some(text) => parse_forms(&ring, text)?,
                None => (0..4).map(|i| Polynomial::var(ring.clone(), i)).collect(),
            };
            EnghetaParams {
                linear_forms: forms,
                quadric: None,
            }
        }
        EnghetaCase::Ib => {
            let forms = match &args.forms {
                Some(text) => parse_forms(&ring, text)?,
                None => {
                    let mut v: Vec<Polynomial> =
                        (0..g - 1).map(|i| Polynomial::var(ring.clone(), i)).collect();
                    v.push(Polynomial::var(ring.clone(), g - 2));
                    v
                }
            };
            let quadric = match &args.quadric {
                Some(text) => parse_polynomial(text, &ring)?,
                None => Polynomial::var(ring.clone(), 0).pow(2),
            };
            EnghetaParams {
                linear_forms: forms,
                quadric: Some(quadric),
            }
        }
        EnghetaCase::Ii => {
            let forms = match &args.forms {
                Some(text) => parse_forms(&ring, text)?,
                None => {
                    let mut v: Vec<Polynomial> =
                        (0..g - 1).map(|i| Polynomial::var(ring.clone(), i)).collect();
                    v.push(Polynomial::var(ring.clone(), g - 1));
                    v
                }
            };
            let quadric = match &args.quadric {
                Some(text) => parse_polynomial(text, &ring)?,
                None => Polynomial::var(ring.clone(), g - 1)
                    .pow(2)
                    .add(&Polynomial::var(ring.clone(), 0).pow(2)),
            };
            EnghetaParams {
                linear_forms: forms,
                quadric: Some(quadric),
            }
        }
    };
    let ideal = engheta_form(case, g, &ring, &params)?;
    // sanity line: the construction promises height two; report it
    let rep = hilbert_report(&ideal)?;
    let mut text = format!(
        "# codim {} multiplicity {} nondegenerate {}\n",
        rep.codim,
        rep.multiplicity,
        is_nondegenerate(&ideal)
    );
    text.push_str(&render_ideal(&ideal));
    emit(&args.out, &text)?;
    Ok(EXIT_OK)
}
