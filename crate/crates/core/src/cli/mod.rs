//! Command-line front end.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 unparsable input,
//! 3 degenerate or invalid parameters.

pub mod grammar;
pub mod output;
pub mod verify;
pub mod wire;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use crate::casimir::{
    casimir_commutator, casimir_quommutator, commutator_offset_value, verify_casimir_relation,
};
use crate::deform::{
    self, arik_coon, bem, calogero_vasiliev, chakrabarti_jagannathan, macfarlane_biedenharn, qcv,
    FamilyName, Oscillator, QcvParams, QcvSign,
};
use crate::exact::{parse_rational, ExpPoly, Rational};
use crate::inverse::{simplest_q, to_q_quommutator, to_unit_quommutator};
use crate::opalg::{FockWindow, Verdict, DEFAULT_WINDOW};
use crate::ordering::{normal_order_table, normal_order_table_bar, verify_normal_order};
use crate::qcalc::{multi_q_derivative, Poly};
use crate::{Error, Result};

pub use grammar::parse_exppoly;
use output::{Cell, Document, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qoscil", version, about = "Exact deformed-oscillator algebra toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Fock window size N used by every verification.
    #[arg(
        long = "window",
        visible_alias = "N",
        global = true,
        env = "QOSCIL_WINDOW",
        default_value_t = DEFAULT_WINDOW,
        value_parser = parse_window
    )]
    pub window: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Exact,
    Equivalence,
    Ordering,
    Inverse,
    Casimir,
    Qcalc,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[default]
    Upper,
    Lower,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate the minimal deformation and tabulate every step.
    Chain {
        /// Initial commutator f_0.
        #[arg(long, default_value = "1")]
        start: String,
        /// Comma-separated deformation parameters.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        params: RationalList,
        #[arg(long, default_value_t = 8)]
        levels: usize,
        /// Value of the symbol `q` in `--start`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Option<Rational>,
    },
    /// A named oscillator from the catalog.
    Family {
        #[arg(long, value_parser = parse_family)]
        name: FamilyName,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q1: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q2: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        nu: Option<Rational>,
        /// `q^{2ν}` for the q-deformed Calogero-Vasiliev oscillator.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        t: Option<Rational>,
        #[arg(long, value_enum, default_value_t = SignArg::Upper)]
        sign: SignArg,
        /// Quommutator parameter of the qcv form (defaults to q).
        #[arg(long = "Q", allow_hyphen_values = true, value_parser = parse_rational)]
        big_q: Option<Rational>,
        #[arg(long, default_value_t = 8)]
        levels: usize,
    },
    /// Run the exact identity battery.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Normal-ordering coefficients of (a†a)^m.
    NormalOrder {
        #[arg(long)]
        f: String,
        /// Quommutator parameter, also the value of the symbol `q` in `--f`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Option<Rational>,
        #[arg(long, default_value_t = 6)]
        m: usize,
        /// Use the commutator form [a, a†] = f instead.
        #[arg(long)]
        bar: bool,
        /// Check the expansion on the Fock window.
        #[arg(long)]
        verify: bool,
        /// Verify on the window of this structure function instead of the
        /// one implied by `--f`.
        #[arg(long, requires = "verify")]
        structure: Option<String>,
    },
    /// Rewrite [a, a†] = φ as an equivalent quommutator.
    Inverse {
        #[arg(long)]
        phi: String,
        /// Value of the symbol `q` in `--phi`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Option<Rational>,
        /// Target quommutator parameter.
        #[arg(long = "Q", allow_hyphen_values = true, value_parser = parse_rational)]
        big_q: Option<Rational>,
        /// Rank every exponential base as a candidate.
        #[arg(long)]
        auto: bool,
        /// Produce the unit-Q form a a† - a† β(n̂) a = 1.
        #[arg(long)]
        unit: bool,
    },
    /// Casimir operators of [a, a†]_Q = f and of the equivalent commutator.
    Casimir {
        #[arg(long, default_value = "1")]
        f: String,
        /// Value of the symbol `q` in `--f`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Option<Rational>,
        /// Quommutator parameter (defaults to q).
        #[arg(long = "Q", allow_hyphen_values = true, value_parser = parse_rational)]
        big_q: Option<Rational>,
        /// Evaluate the Casimir on a lowest state with number eigenvalue c.
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<i64>,
        /// Print the interior entries of the Casimir operator.
        #[arg(long)]
        dump: bool,
    },
    /// Multi-parameter q-derivative of a polynomial in x.
    Qderiv {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        params: RationalList,
        /// Coefficients in increasing degree.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list, conflicts_with = "degree")]
        poly: Option<RationalList>,
        /// Shortcut for the monomial x^degree.
        #[arg(long)]
        degree: Option<usize>,
    },
}

/// Comma-separated rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalList(pub Vec<Rational>);

fn parse_list(s: &str) -> std::result::Result<RationalList, String> {
    s.split(',')
        .map(|p| parse_rational(p.trim()).map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(RationalList)
}

fn parse_family(s: &str) -> std::result::Result<FamilyName, String> {
    s.parse::<FamilyName>().map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("invalid window size {s:?}"))?;
    if n < 2 {
        return Err("window size must be at least 2".into());
    }
    Ok(n)
}

/// Outcome of one command: the report and whether every identity held.
pub struct Outcome {
    pub document: Document,
    pub holds: bool,
}

impl From<Document> for Outcome {
    fn from(document: Document) -> Self {
        Outcome {
            document,
            holds: true,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DEGENERATE,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&outcome.document.to_json()).expect("json") + "\n"
                }
                Format::Csv => outcome.document.to_csv(),
                Format::Text => outcome.document.to_text(),
            };
            let written = match &cli.output {
                Some(path) => std::fs::write(path, rendered),
                None => std::io::stdout().write_all(rendered.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write report: {e}");
                return EXIT_DEGENERATE;
            }
            if outcome.holds {
                EXIT_OK
            } else {
                EXIT_IDENTITY_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let n = cli.window;
    match &cli.command {
        Command::Chain {
            start,
            params,
            levels,
            q,
        } => cmd_chain(&parse_exppoly(start, q.as_ref())?, &params.0, *levels).map(Into::into),
        Command::Family {
            name,
            q,
            q1,
            q2,
            nu,
            t,
            sign,
            big_q,
            levels,
        } => {
            let args = FamilyArgs {
                q: q.clone(),
                q1: q1.clone(),
                q2: q2.clone(),
                nu: nu.clone(),
                t: t.clone(),
                sign: *sign,
                big_q: big_q.clone(),
            };
            cmd_family(*name, &args, *levels).map(Into::into)
        }
        Command::Verify { suite, seed } => Ok(verify::run_suite(*suite, *seed, n)),
        Command::NormalOrder {
            f,
            q,
            m,
            bar,
            verify,
            structure,
        } => {
            let structure = structure
                .as_deref()
                .map(|s| parse_exppoly(s, q.as_ref()))
                .transpose()?;
            let f = parse_exppoly(f, q.as_ref())?;
            let settings = NormalOrderArgs {
                q: q.clone(),
                m: *m,
                bar: *bar,
                verify: *verify,
                structure,
            };
            cmd_normal_order(&f, &settings, n)
        }
        Command::Inverse {
            phi,
            q,
            big_q,
            auto,
            unit,
        } => {
            let phi = parse_exppoly(phi, q.as_ref())?;
            cmd_inverse(&phi, big_q.as_ref(), *auto, *unit, n).map(Into::into)
        }
        Command::Casimir {
            f,
            q,
            big_q,
            offset,
            dump,
        } => {
            let f = parse_exppoly(f, q.as_ref())?;
            let big_q = big_q
                .clone()
                .or_else(|| q.clone())
                .ok_or_else(|| Error::Parse("casimir needs --Q or --q".into()))?;
            cmd_casimir(&f, &big_q, *offset, *dump, n)
        }
        Command::Qderiv {
            params,
            poly,
            degree,
        } => {
            let g = match (poly, degree) {
                (Some(p), _) => Poly::new(p.0.clone()),
                (None, Some(d)) => Poly::monomial(Rational::one(), *d),
                (None, None) => return Err(Error::Parse("qderiv needs --poly or --degree".into())),
            };
            cmd_qderiv(&params.0, &g).map(Into::into)
        }
    }
}

fn rationals(values: impl IntoIterator<Item = Rational>) -> Cell {
    Cell::list(values.into_iter().map(|v| Cell::rational(&v)).collect())
}

fn level_header(first: &str, levels: usize) -> Vec<String> {
    std::iter::once(first.to_string())
        .chain((0..levels).map(|l| l.to_string()))
        .collect()
}

fn value_row(label: String, e: &ExpPoly, levels: usize) -> Vec<Cell> {
    std::iter::once(Cell::str(label))
        .chain(e.table(0..levels as i64).iter().map(Cell::rational))
        .collect()
}

pub fn cmd_chain(start: &ExpPoly, params: &[Rational], levels: usize) -> Result<Document> {
    let chain = deform::chain(start, params)?;
    let mut doc = Document::default();
    doc.field("start", Cell::exppoly(start));
    doc.field("params", rationals(params.iter().cloned()));
    let mut steps = Table::new("steps", &["j", "q", "f", "F"]);
    for (i, s) in chain.steps().iter().enumerate() {
        steps.push(vec![
            Cell::int((i + 1) as i64),
            Cell::rational(&s.param),
            Cell::exppoly(&s.commutator),
            Cell::exppoly(&s.structure),
        ]);
    }
    doc.table(steps);
    let mut values = Table::with_header("values", level_header("function", levels));
    for j in 0..=chain.depth() {
        values.push(value_row(format!("f_{j}"), chain.commutator(j).expect("j ≤ depth"), levels));
    }
    for j in 1..=chain.depth() {
        values.push(value_row(format!("F_{j}"), chain.structure(j).expect("j ≥ 1"), levels));
    }
    doc.table(values);
    Ok(doc)
}

/// Parameters accepted by `family`.
#[derive(Clone, Debug, Default)]
pub struct FamilyArgs {
    pub q: Option<Rational>,
    pub q1: Option<Rational>,
    pub q2: Option<Rational>,
    pub nu: Option<Rational>,
    pub t: Option<Rational>,
    pub sign: SignArg,
    pub big_q: Option<Rational>,
}

fn required<'a>(value: &'a Option<Rational>, flag: &str, name: FamilyName) -> Result<&'a Rational> {
    value
        .as_ref()
        .ok_or_else(|| Error::Parse(format!("family {name} needs --{flag}")))
}

pub fn build_family(name: FamilyName, args: &FamilyArgs) -> Result<Oscillator> {
    match name {
        FamilyName::ArikCoon => arik_coon(required(&args.q, "q", name)?),
        FamilyName::MacfarlaneBiedenharn => macfarlane_biedenharn(required(&args.q, "q", name)?),
        FamilyName::ChakrabartiJagannathan => {
            chakrabarti_jagannathan(required(&args.q1, "q1", name)?, required(&args.q2, "q2", name)?)
        }
        FamilyName::CalogeroVasiliev => calogero_vasiliev(required(&args.nu, "nu", name)?),
        FamilyName::Bem => bem(required(&args.nu, "nu", name)?, required(&args.q, "q", name)?),
        FamilyName::Qcv => {
            let q = required(&args.q, "q", name)?.clone();
            let sign = match args.sign {
                SignArg::Upper => QcvSign::Upper,
                SignArg::Lower => QcvSign::Lower,
            };
            let params = match (&args.t, &args.nu) {
                (Some(t), _) => QcvParams::new(q.clone(), t.clone(), sign)?,
                (None, Some(nu)) => QcvParams::from_nu(q.clone(), nu, sign)?,
                (None, None) => return Err(Error::Parse("family qcv needs --t or --nu".into())),
            };
            Ok(qcv(&params, args.big_q.as_ref().unwrap_or(&q)))
        }
    }
}

pub fn cmd_family(name: FamilyName, args: &FamilyArgs, levels: usize) -> Result<Document> {
    let osc = build_family(name, args)?;
    let mut doc = Document::default();
    doc.field("name", Cell::str(name.id()));
    doc.field("Q", Cell::rational(&osc.deformation));
    doc.field("quommutator_rhs", Cell::exppoly(&osc.quommutator_rhs));
    doc.field("commutator", Cell::exppoly(&osc.commutator));
    doc.field("structure", Cell::exppoly(&osc.structure));
    if let Some(chain) = &osc.chain {
        doc.field("chain_start", Cell::exppoly(chain.start()));
        doc.field("chain_params", rationals(chain.params()));
    }
    let mut values = Table::with_header("values", level_header("function", levels));
    values.push(value_row("f".into(), &osc.commutator, levels));
    values.push(value_row("F".into(), &osc.structure, levels));
    doc.table(values);
    Ok(doc)
}

fn verdict_fields(doc: &mut Document, prefix: &str, v: &Verdict) {
    doc.field(&format!("{prefix}holds"), Cell::bool(v.complete()));
    doc.field(&format!("{prefix}checked"), Cell::int(v.checked as i64));
    if let Some(d) = &v.discrepancy {
        doc.field(&format!("{prefix}witness"), Cell::str(d.to_string()));
    }
}

/// Settings of `normal-order`.
#[derive(Clone, Debug, Default)]
pub struct NormalOrderArgs {
    pub q: Option<Rational>,
    pub m: usize,
    pub bar: bool,
    pub verify: bool,
    /// Window override for verification.
    pub structure: Option<ExpPoly>,
}

pub fn cmd_normal_order(f: &ExpPoly, args: &NormalOrderArgs, size: usize) -> Result<Outcome> {
    let (m, bar) = (args.m, args.bar);
    let q = args.q.as_ref();
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let table = if bar {
        normal_order_table_bar(f, m)
    } else {
        let q = q.ok_or_else(|| Error::Parse("normal-order needs --q (or --bar)".into()))?;
        normal_order_table(f, q, m)
    };
    let mut doc = Document::default();
    doc.field("form", Cell::str(if bar { "commutator" } else { "quommutator" }));
    doc.field("f", Cell::exppoly(f));
    if !bar {
        doc.field("q", Cell::rational(&table.q));
    }
    let header: Vec<String> = std::iter::once("m".to_string())
        .chain((1..=m).map(|l| format!("l={l}")))
        .collect();
    let mut rows = Table::with_header("coefficients", header);
    for row in 1..=m {
        let mut cells = vec![Cell::int(row as i64)];
        cells.extend((1..=m).map(|l| Cell::exppoly(&table.entry(row, l))));
        rows.push(cells);
    }
    doc.table(rows);
    let mut holds = true;
    if args.verify {
        let window = if let Some(structure) = &args.structure {
            FockWindow::from_structure(structure, size)?
        } else if bar {
            FockWindow::from_commutator(f, size)?
        } else {
            FockWindow::from_structure(&deform::minimal_deform(f, &table.q)?.structure, size)?
        };
        let v = verify_normal_order(&table, &Arc::new(window))?;
        holds = v.complete();
        verdict_fields(&mut doc, "verify_", &v);
    }
    Ok(Outcome { document: doc, holds })
}

pub fn cmd_inverse(
    phi: &ExpPoly,
    big_q: Option<&Rational>,
    auto: bool,
    unit: bool,
    size: usize,
) -> Result<Document> {
    let mut doc = Document::default();
    doc.field("phi", Cell::exppoly(phi));
    if let Some(q) = big_q {
        let form = to_q_quommutator(phi, q);
        doc.field("Q", Cell::rational(&form.q));
        doc.field("Phi", Cell::exppoly(&form.phi));
    }
    if auto || (big_q.is_none() && !unit) {
        let mut t = Table::new("candidates", &["rank", "Q", "Phi", "complexity"]);
        let candidates = simplest_q(phi);
        let mut rank = 0;
        let mut last = None;
        for c in &candidates {
            if last != Some(c.phi.complexity()) {
                rank += 1;
                last = Some(c.phi.complexity());
            }
            t.push(vec![
                Cell::int(rank),
                Cell::rational(&c.q),
                Cell::exppoly(&c.phi),
                Cell::int(c.phi.complexity() as i64),
            ]);
        }
        if big_q.is_none() {
            if let Some(best) = candidates.first() {
                doc.field("Q", Cell::rational(&best.q));
                doc.field("Phi", Cell::exppoly(&best.phi));
            }
        }
        doc.table(t);
    }
    if unit {
        let beta = to_unit_quommutator(phi, size)?;
        doc.field("beta_numerator", Cell::exppoly(&beta.numerator));
        doc.field("beta_denominator", Cell::exppoly(&beta.denominator));
        let mut t = Table::new("beta", &["n", "beta"]);
        for (n, b) in beta.table.iter().enumerate() {
            t.push(vec![Cell::int(n as i64), Cell::rational(b)]);
        }
        doc.table(t);
    }
    Ok(doc)
}

pub fn cmd_casimir(
    f: &ExpPoly,
    q: &Rational,
    offset: Option<i64>,
    dump: bool,
    size: usize,
) -> Result<Outcome> {
    let pair = casimir_quommutator(f, q)?;
    let chain = deform::chain(f, std::slice::from_ref(q))?;
    let structure = chain.last_structure();
    let mut doc = Document::default();
    doc.field("f", Cell::exppoly(f));
    doc.field("Q", Cell::rational(q));
    doc.field("mu", Cell::exppoly(&pair.mu));
    doc.field("nu", Cell::exppoly(&pair.nu));
    doc.field("structure", Cell::exppoly(&structure));
    let recurrences = pair.recurrences_hold(f);
    doc.field("recurrences_hold", Cell::bool(recurrences));
    let mu_matches = pair.mu == &pair.nu * &structure;
    doc.field("mu_equals_nu_times_structure", Cell::bool(mu_matches));
    let v = verify_casimir_relation(&chain, 0, size)?;
    verdict_fields(&mut doc, "relation_", &v);
    let window = Arc::new(FockWindow::from_structure(&structure, size)?);
    let c = casimir_commutator(&structure, &window)?;
    let central = crate::casimir::verify_centrality(&c)?;
    verdict_fields(&mut doc, "commutator_casimir_", &central);
    if let Some(c0) = offset {
        doc.field("quommutator_casimir_at_offset", Cell::rational(&pair.offset_value(c0)));
        doc.field(
            "commutator_casimir_at_offset",
            Cell::rational(&commutator_offset_value(&structure, c0)),
        );
    }
    if dump {
        let op = pair.operator(&window)?;
        let mut t = Table::new("operator", &["degree", "level", "value"]);
        for (d, l, v) in op.dump() {
            t.push(vec![Cell::int(d), Cell::int(l as i64), Cell::rational(&v)]);
        }
        doc.table(t);
    }
    Ok(Outcome {
        document: doc,
        holds: recurrences && mu_matches && v.complete() && central.complete(),
    })
}

pub fn cmd_qderiv(params: &[Rational], g: &Poly) -> Result<Document> {
    let d = multi_q_derivative(params, g)?;
    let mut doc = Document::default();
    doc.field("params", rationals(params.iter().cloned()));
    doc.field("input", Cell::str(g.to_string()));
    doc.field("derivative", Cell::str(d.to_string()));
    doc.field("coefficients", rationals(d.coefficients().iter().cloned()));
    Ok(doc)
}
