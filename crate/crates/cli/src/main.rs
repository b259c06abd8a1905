//! Command-line front end: every verification and report of the engine as a
//! subcommand, with JSON and aligned-text output and CI-friendly exit codes
//! (0 = all checks pass, 1 = a check failed, 2 = usage error).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lichcert::rep::{self, C2Weight};
use lichcert::sasaki;
use lichcert::scalar::parse_scalar;
use lichcert::stability::{self, CoindexKind, NormalizationContext};

#[derive(Parser)]
#[command(
    name = "lichcert",
    version,
    about = "Exact-arithmetic stability certificates for Einstein metrics with real Killing spinors"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report to this file (default directory comes from
    /// LICHCERT_OUTPUT_DIR when set)
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized identity sampling; recorded in the report
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// G2 structure: identity suite, decompositions, endomorphisms, margins
    G2 {
        #[command(subcommand)]
        cmd: G2Cmd,
    },
    /// Sasaki fibre model checks
    Sasaki {
        #[command(subcommand)]
        cmd: SasakiCmd,
    },
    /// sp(2) representation tables
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Berger-space certificate and verdict
    Berger {
        #[command(subcommand)]
        cmd: BergerCmd,
    },
    /// Scan the scalar Laplace spectrum up to a Casimir bound
    Spectrum {
        /// Bound as an exact rational, e.g. 8/3
        #[arg(long, value_parser = parse_scalar_arg)]
        bound: lichcert::Scalar,
    },
    /// Coindex lower bounds from Betti numbers
    Coindex(CoindexArgs),
}

#[derive(Subcommand)]
enum G2Cmd {
    /// Run the full identity suite, projector ranks, kernels and
    /// endomorphism values
    Verify {
        /// Number of seeded random unit spinors to re-run the suite on
        #[arg(long, default_value_t = 10)]
        spinors: usize,
    },
    /// Instability margin of the harmonic-3-form family
    Margin {
        /// Counterfactual τ₀² (labeled); default is the scal = 42 context
        #[arg(long, value_parser = parse_scalar_arg)]
        tau2: Option<lichcert::Scalar>,
    },
}

fn parse_scalar_arg(s: &str) -> Result<lichcert::Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

fn parse_hw_arg(s: &str) -> Result<C2Weight, String> {
    let (k, l) = s.split_once(',').ok_or("expected \"k,l\"")?;
    let k: u32 = k.trim().parse().map_err(|_| "k must be a non-negative integer")?;
    let l: u32 = l.trim().parse().map_err(|_| "l must be a non-negative integer")?;
    C2Weight::new(k, l).ok_or_else(|| "highest weight needs k >= l >= 0".to_string())
}

fn parse_kind_arg(s: &str) -> Result<CoindexKind, String> {
    s.parse()
}

#[derive(Subcommand)]
enum SasakiCmd {
    /// Verify the fibre identities for one n and report the margin
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Branching table of V(k,l) along the principal sp(1)
    Branch {
        /// Highest weight as "k,l"
        #[arg(long, value_parser = parse_hw_arg)]
        hw: C2Weight,
    },
    /// Decompose Sym^m or Λ^m of Sym^k E
    Decompose(DecomposeArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("power").required(true).multiple(false))]
struct DecomposeArgs {
    /// Symmetric power m
    #[arg(long, group = "power")]
    sym: Option<u32>,
    /// Exterior power m
    #[arg(long, group = "power")]
    alt: Option<u32>,
    /// The k of Sym^k E
    #[arg(long = "of")]
    of: u32,
}

#[derive(Subcommand)]
enum BergerCmd {
    /// Killing-tensor existence certificate
    Certificate,
    /// Full eigenvalue-vs-2E report
    Report {
        /// Counterfactual τ₀² (labeled), e.g. 1 or 6/5
        #[arg(long = "counterfactual-tau2", value_parser = parse_scalar_arg)]
        counterfactual_tau2: Option<lichcert::Scalar>,
    },
}

#[derive(Args)]
struct CoindexArgs {
    #[arg(long, default_value_t = 0)]
    b2: u32,
    #[arg(long, default_value_t = 0)]
    b3: u32,
    /// sasaki | g2 | sasaki-g2
    #[arg(long, value_parser = parse_kind_arg)]
    kind: CoindexKind,
}

struct Rendered {
    slug: &'static str,
    json: serde_json::Value,
    text: String,
    pass: bool,
    failing: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => {
            let body = match cli.format {
                Format::Json => format!("{:#}\n", rendered.json),
                Format::Text => rendered.text.clone(),
            };
            print!("{body}");
            if let Err(e) = write_output(&cli, &rendered, &body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if rendered.pass {
                ExitCode::SUCCESS
            } else {
                if let Some(anchor) = &rendered.failing {
                    eprintln!("FAILED: {anchor}");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn write_output(cli: &Cli, rendered: &Rendered, body: &str) -> Result<()> {
    let path = match (&cli.output, std::env::var_os("LICHCERT_OUTPUT_DIR")) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            let ext = match cli.format {
                Format::Json => "json",
                Format::Text => "txt",
            };
            Some(PathBuf::from(dir).join(format!("{}.{ext}", rendered.slug)))
        }
        (None, None) => None,
    };
    if let Some(path) = path {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)
                .with_context(|| format!("creating {}", parent.display()))?;
        }
        std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::G2 { cmd } => match cmd {
            G2Cmd::Verify { spinors } => g2_verify(cli.seed, *spinors),
            G2Cmd::Margin { tau2 } => g2_margin(tau2.clone()),
        },
        Command::Sasaki { cmd } => match cmd {
            SasakiCmd::Verify { n } => sasaki_verify(*n),
        },
        Command::Rep { cmd } => match cmd {
            RepCmd::Branch { hw } => rep_branch(*hw),
            RepCmd::Decompose(args) => rep_decompose(args.sym, args.alt, args.of),
        },
        Command::Berger { cmd } => match cmd {
            BergerCmd::Certificate => berger_certificate(),
            BergerCmd::Report {
                counterfactual_tau2,
            } => berger_report(counterfactual_tau2.clone()),
        },
        Command::Spectrum { bound } => spectrum(bound),
        Command::Coindex(args) => coindex(args),
    }
}

fn pass_mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn g2_verify(seed: u64, spinors: usize) -> Result<Rendered> {
    let report = lichcert::g2::verify_g2(seed, spinors)?;
    let mut text = String::new();
    text.push_str(&format!("g2 verify (seed {seed}, {spinors} random spinors)\n"));
    let width = report
        .identity_suite
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &report.identity_suite.checks {
        text.push_str(&format!(
            "  {} {:width$}  {}\n",
            pass_mark(c.pass),
            c.name,
            c.anchor
        ));
    }
    for r in &report.random_spinors {
        text.push_str(&format!(
            "  {} identity suite on random spinor {}\n",
            pass_mark(r.pass),
            r.index
        ));
    }
    let d = &report.decomposition;
    text.push_str(&format!(
        "  {} lambda^2 splits {} + {}\n",
        pass_mark((d.lambda2_7, d.lambda2_14) == (7, 14)),
        d.lambda2_7,
        d.lambda2_14
    ));
    text.push_str(&format!(
        "  {} lambda^3 splits {} + {} + {}\n",
        pass_mark((d.lambda3_1, d.lambda3_7, d.lambda3_27) == (1, 7, 27)),
        d.lambda3_1,
        d.lambda3_7,
        d.lambda3_27
    ));
    text.push_str(&format!(
        "  {} clifford kernels ({}, {}) coincide with the 14- and 27-summands: {}\n",
        pass_mark(
            d.kernels_match_summands
                && (d.clifford_kernel_lambda2, d.clifford_kernel_lambda3) == (14, 27)
        ),
        d.clifford_kernel_lambda2,
        d.clifford_kernel_lambda3,
        d.kernels_match_summands
    ));
    text.push_str(&format!(
        "  {} stabilizer of phi has dimension {}\n",
        pass_mark(d.stabilizer_dim == 14),
        d.stabilizer_dim
    ));
    let e = &report.endomorphisms;
    text.push_str(&format!(
        "  {} S = {} on T, {} on Sym^2_0, {} on the metric\n",
        pass_mark(e.s_on_vectors == "-6" && e.s_on_sym2_traceless == "-14" && e.s_on_metric == "0"),
        e.s_on_vectors,
        e.s_on_sym2_traceless,
        e.s_on_metric
    ));
    text.push_str(&format!(
        "  {} Cas^so(7) = {} / {} / {} on forms, {} on Sym^2_0\n",
        pass_mark(
            e.cas_lambda1 == "-6"
                && e.cas_lambda2 == "-10"
                && e.cas_lambda3 == "-12"
                && e.cas_sym2_traceless == "-14"
        ),
        e.cas_lambda1,
        e.cas_lambda2,
        e.cas_lambda3,
        e.cas_sym2_traceless
    ));
    text.push_str(&format!("overall: {}\n", pass_mark(report.pass)));
    let failing = report
        .identity_suite
        .checks
        .iter()
        .find(|c| !c.pass)
        .map(|c| c.anchor.clone())
        .or_else(|| (!report.pass).then(|| "g2 decomposition or endomorphism values".to_string()));
    Ok(Rendered {
        slug: "g2-verify",
        json: serde_json::to_value(&report)?,
        text,
        pass: report.pass,
        failing,
    })
}

fn g2_margin(tau2: Option<lichcert::Scalar>) -> Result<Rendered> {
    let (ctx, counterfactual) = match tau2 {
        None => (NormalizationContext::scal42(), false),
        Some(t) => (
            NormalizationContext::from_tau0_squared("counterfactual", t)?,
            true,
        ),
    };
    let report = stability::g2_b3_margin_labeled(&ctx, counterfactual)?;
    let text = stability_text(&report);
    let pass = report.verdict == stability::Verdict::Unstable;
    Ok(Rendered {
        slug: "g2-margin",
        json: serde_json::to_value(&report)?,
        text,
        pass,
        failing: (!pass).then(|| "margin is not negative".to_string()),
    })
}

fn stability_text(r: &stability::StabilityReport) -> String {
    let mut text = String::new();
    text.push_str(&format!("space          {}\n", r.space));
    text.push_str(&format!("tensor family  {}\n", r.tensor_family));
    text.push_str(&format!("eigenvalue     {}\n", r.eigenvalue));
    text.push_str(&format!("two_E          {}\n", r.two_e));
    text.push_str(&format!("margin         {}\n", r.margin));
    text.push_str(&format!("verdict        {:?}\n", r.verdict));
    if r.counterfactual {
        text.push_str("counterfactual yes (not a certified report)\n");
    }
    for a in &r.axioms {
        text.push_str(&format!("axiom          {a}\n"));
    }
    for p in &r.provenance {
        text.push_str(&format!("provenance     {}: {}\n", p.quantity, p.anchor));
    }
    text
}

fn sasaki_verify(n: usize) -> Result<Rendered> {
    if n < 1 {
        bail!("--n must be at least 1");
    }
    let fibre_report = sasaki::verify_fibre(n);
    let margin = stability::sasaki_margin(n as u32)?;
    let pass = fibre_report.pass;
    let mut text = String::new();
    text.push_str(&format!("sasaki verify (n = {n}, fibre dimension {})\n", 2 * n + 1));
    let width = fibre_report
        .checks
        .iter()
        .map(|c| c.lemma.len())
        .max()
        .unwrap_or(0);
    for c in &fibre_report.checks {
        text.push_str(&format!(
            "  {} {:width$}  [{}] expected {}, got {}\n",
            pass_mark(c.pass),
            c.lemma,
            c.class,
            c.expected,
            c.got
        ));
    }
    text.push_str(&format!(
        "  trace pairing constant: tr(h_alpha) = {} * <alpha, d_eta>\n",
        fibre_report.trace_pairing_constant
    ));
    text.push_str(&format!(
        "  margin: eigenvalue {} vs two_E {} -> {} ({:?})\n",
        margin.eigenvalue, margin.two_e, margin.margin, margin.verdict
    ));
    text.push_str(&format!("overall: {}\n", pass_mark(pass)));
    let failing = fibre_report
        .checks
        .iter()
        .find(|c| !c.pass)
        .map(|c| format!("{} [{}]", c.lemma, c.class));
    Ok(Rendered {
        slug: "sasaki-verify",
        json: json!({
            "fibre": serde_json::to_value(&fibre_report)?,
            "margin": serde_json::to_value(&margin)?,
            "pass": pass,
        }),
        text,
        pass,
        failing,
    })
}

fn rep_branch(w: C2Weight) -> Result<Rendered> {
    let table = rep::branch_table(w)?;
    let mut text = String::new();
    text.push_str(&format!(
        "V({},{}): dim {}, Casimir {}\n",
        table.weight[0], table.weight[1], table.dim, table.casimir
    ));
    for (k, m) in &table.branch {
        text.push_str(&format!("  Sym^{k} E x {m}\n"));
    }
    Ok(Rendered {
        slug: "rep-branch",
        json: serde_json::to_value(&table)?,
        text,
        pass: true,
        failing: None,
    })
}

fn rep_decompose(sym: Option<u32>, alt: Option<u32>, of: u32) -> Result<Rendered> {
    let base = rep::su2_char(of);
    let (op, m, ch) = match (sym, alt) {
        (Some(m), None) => ("sym", m, rep::sym_power(&base, m)?),
        (None, Some(m)) => ("alt", m, rep::alt_power(&base, m)?),
        _ => bail!("exactly one of --sym or --alt is required"),
    };
    let decomposition = rep::su2_decompose(&ch)?;
    let mut text = String::new();
    text.push_str(&format!(
        "{}^{} (Sym^{} E): dimension {}\n",
        if op == "sym" { "Sym" } else { "Lambda" },
        m,
        of,
        decomposition.total_dimension()
    ));
    for (k, mult) in decomposition.multiplicities() {
        text.push_str(&format!("  Sym^{k} E x {mult}\n"));
    }
    Ok(Rendered {
        slug: "rep-decompose",
        json: json!({
            "op": op,
            "power": m,
            "of": of,
            "dimension": decomposition.total_dimension(),
            "decomposition": decomposition
                .multiplicities()
                .iter()
                .map(|(k, mult)| (k.to_string(), *mult))
                .collect::<std::collections::BTreeMap<String, u32>>(),
        }),
        text,
        pass: true,
        failing: None,
    })
}

fn berger_certificate() -> Result<Rendered> {
    let cert = rep::killing_certificate()?;
    let mut text = String::new();
    text.push_str(&format!(
        "killing certificate for V({},{})\n",
        cert.weight[0], cert.weight[1]
    ));
    text.push_str(&format!(
        "  multiplicity in Sym^2_0 m: {}\n  multiplicity in m:         {}\n  multiplicity in Sym^3 m:   {}\n",
        cert.multiplicity_in_sym2_traceless, cert.multiplicity_in_tangent, cert.multiplicity_in_sym3
    ));
    text.push_str(&format!("  valid: {}\n  {}\n", cert.valid, cert.conclusion));
    for note in &cert.notes {
        text.push_str(&format!("  note: {note}\n"));
    }
    let pass = cert.valid;
    Ok(Rendered {
        slug: "berger-certificate",
        json: serde_json::to_value(&cert)?,
        text,
        pass,
        failing: (!pass).then(|| "killing certificate multiplicities".to_string()),
    })
}

fn berger_report(counterfactual_tau2: Option<lichcert::Scalar>) -> Result<Rendered> {
    let calibration = stability::berger_calibration()?;
    let report = stability::berger_verdict_with(counterfactual_tau2)?;
    let mut text = String::new();
    text.push_str(&format!(
        "calibration: c = {}, q(R-bar) = {} on Sym^6, {} on Sym^4, {} on Sym^0\n",
        calibration.constant,
        calibration.q_rbar_on_tangent,
        calibration.q_rbar_on_sym4,
        calibration.q_rbar_on_sym0
    ));
    text.push_str(&stability_text(&report));
    let pass = report.verdict == stability::Verdict::Unstable;
    Ok(Rendered {
        slug: "berger-report",
        json: json!({
            "calibration": serde_json::to_value(&calibration)?,
            "report": serde_json::to_value(&report)?,
        }),
        text,
        pass,
        failing: (!pass).then(|| "margin is not negative".to_string()),
    })
}

fn spectrum(bound: &lichcert::Scalar) -> Result<Rendered> {
    let entries = stability::function_spectrum_scan(bound)?;
    let mut text = String::new();
    text.push_str("weight  eigenvalue  invariants  dim\n");
    for e in &entries {
        text.push_str(&format!(
            "({},{})   {:<10}  {:<10}  {}\n",
            e.weight[0], e.weight[1], e.eigenvalue, e.invariant_multiplicity, e.dim
        ));
    }
    Ok(Rendered {
        slug: "spectrum",
        json: json!({
            "bound": lichcert::scalar::format_scalar(bound),
            "entries": serde_json::to_value(&entries)?,
        }),
        text,
        pass: true,
        failing: None,
    })
}

fn coindex(args: &CoindexArgs) -> Result<Rendered> {
    let summary = stability::betti_coindex_summary(args.b2, args.b3, args.kind);
    let text = format!(
        "kind {:?}: b2 = {}, b3 = {} -> coindex >= {} ({:?})\n  caveat: {}\n",
        summary.kind,
        summary.b2,
        summary.b3,
        summary.coindex_lower_bound,
        summary.verdict,
        summary.caveat
    );
    Ok(Rendered {
        slug: "coindex",
        json: serde_json::to_value(&summary)?,
        text,
        pass: true,
        failing: None,
    })
}
