//! Command-line front end used by the `qf` binary.
//!
//! Exit codes: `0` success, `1` usage, parse or I/O error, `2` axiom
//! failure, `3` negative verdict (not isomorphic, no decomposition).

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{are_isomorphic, census, classify_family};
use crate::construct::{
    audit_transfer, decompose3, product3, validate_rule, IndexConvention, PhaseRule,
};
use crate::datasets::BuiltinDataset;
use crate::error::QuandleError;
use crate::format::{emit_phase, emit_table, parse_any, parse_phase, TableJson};
use crate::inner::{inn_group, inner_structure, orbits, spectrum_string, DEFAULT_MATERIALIZE_CAP};
use crate::properties::{alexander_recognize, centralizer, is_group_conjugation, PropertyFlags};
use crate::table::{dihedral, trivial, AxiomReport, CheckOptions, Magma, Quandle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_AXIOMS: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

/// Environment variable overriding the witness cap (`all` for no cap).
pub const WITNESS_CAP_ENV: &str = "QF_WITNESS_CAP";

#[derive(Debug, Parser)]
#[command(name = "qf", about = "Finite quandle construction and verification")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the three quandle axioms.
    Check { input: String },
    /// Build the order-3n product of a base with a phase rule.
    Construct {
        #[arg(long)]
        base: String,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value = "xa")]
        convention: IndexConvention,
        /// Append the axiom report and exit 2 on failure.
        #[arg(long)]
        validate: bool,
    },
    /// Right-translation listing, spectrum and inner group order.
    Inn { input: String },
    /// Property flags, orbits, centralizers and affine recognition.
    Props { input: String },
    /// Decide isomorphism of two quandles.
    Iso { a: String, b: String },
    /// Partition inputs into isomorphism classes.
    Classify {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Factor an order-3n table as a base times a phase rule.
    Decompose {
        input: String,
        #[arg(long, default_value = "xa")]
        convention: IndexConvention,
    },
    /// Audit property transfer from a base to its product.
    Audit {
        #[arg(long)]
        base: String,
        #[arg(long)]
        rule: String,
    },
    /// Representatives of all quandles of order n (n <= 6).
    Census { n: usize },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn error(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_ERROR,
            message: message.into(),
        }
    }
}

impl From<QuandleError> for Failure {
    fn from(e: QuandleError) -> Self {
        Failure::error(e.to_string())
    }
}

/// Resolves `paper:*`, `trivial:n`, `dihedral:n` or a file path.
pub fn load_input(spec: &str) -> Result<Magma, String> {
    if let Some(d) = BuiltinDataset::from_key(spec) {
        return Ok(d.table());
    }
    if let Some((family, n)) = spec.split_once(':') {
        if let Ok(n) = n.parse::<usize>() {
            let q = match family {
                "trivial" => Some(trivial(n)),
                "dihedral" => Some(dihedral(n)),
                _ => None,
            };
            if let Some(q) = q {
                return q.map(Quandle::into_magma).map_err(|e| e.to_string());
            }
        }
        if family == "paper" {
            return Err(format!("unknown built-in `{spec}`"));
        }
    }
    let text = std::fs::read_to_string(Path::new(spec)).map_err(|e| format!("{spec}: {e}"))?;
    parse_any(&text)
        .map(|m| m.with_name(spec))
        .map_err(|e| format!("{spec}: {e}"))
}

/// Resolves a built-in rule name or a phase file.
pub fn load_rule(spec: &str) -> Result<PhaseRule, String> {
    if let Some(r) = PhaseRule::by_name(spec) {
        return Ok(r);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        format!(
            "unknown rule `{spec}` (built-ins: {}): {e}",
            PhaseRule::BUILTIN_NAMES.join(", ")
        )
    })?;
    parse_phase(&text).map_err(|e| format!("{spec}: {e}"))
}

fn witness_options(env: Option<&str>) -> Result<CheckOptions, Failure> {
    match env.map(str::trim) {
        None | Some("") => Ok(CheckOptions::default()),
        Some("all") => Ok(CheckOptions::exhaustive()),
        Some(v) => v
            .parse::<usize>()
            .map(CheckOptions::capped)
            .map_err(|_| Failure::error(format!("{WITNESS_CAP_ENV}: invalid cap `{v}`"))),
    }
}

struct Ctx<'a> {
    format: Format,
    options: CheckOptions,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::error(format!("write failed: {e}")))
    }

    fn emit_json(&mut self, value: serde_json::Value) -> Result<(), Failure> {
        let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
        s.push('\n');
        self.emit(&s)
    }

    fn load(&self, spec: &str) -> Result<Magma, Failure> {
        load_input(spec).map_err(Failure::error)
    }

    /// Loads a table and insists on the axioms, reporting on failure.
    fn load_quandle(&mut self, spec: &str) -> Result<Quandle, Failure> {
        let m = self.load(spec)?;
        let report = m.check_axioms_with(&self.options);
        if !report.overall {
            self.report_axioms(spec, &report)?;
            return Err(Failure {
                code: EXIT_AXIOMS,
                message: format!("{spec}: not a quandle"),
            });
        }
        Ok(Quandle::new(m)?)
    }

    fn report_axioms(&mut self, label: &str, report: &AxiomReport) -> Result<(), Failure> {
        match self.format {
            Format::Text => self.emit(&format!("{label}\n{report}\n")),
            Format::Json => self.emit_json(json!({ "input": label, "axioms": report })),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let env = std::env::var(WITNESS_CAP_ENV).ok();
    run(&cli, env.as_deref(), out, err)
}

/// Runs a parsed command; `witness_cap` is the raw override value.
pub fn run(cli: &Cli, witness_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = witness_options(witness_cap).and_then(|options| {
        let mut ctx = Ctx {
            format: cli.format,
            options,
            out,
        };
        dispatch(&cli.command, &mut ctx)
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx<'_>) -> Result<i32, Failure> {
    match cmd {
        Command::Check { input } => cmd_check(ctx, input),
        Command::Construct {
            base,
            rule,
            convention,
            validate,
        } => cmd_construct(ctx, base, rule, *convention, *validate),
        Command::Inn { input } => cmd_inn(ctx, input),
        Command::Props { input } => cmd_props(ctx, input),
        Command::Iso { a, b } => cmd_iso(ctx, a, b),
        Command::Classify { inputs } => cmd_classify(ctx, inputs),
        Command::Decompose { input, convention } => cmd_decompose(ctx, input, *convention),
        Command::Audit { base, rule } => cmd_audit(ctx, base, rule),
        Command::Census { n } => cmd_census(ctx, *n),
    }
}

fn cmd_check(ctx: &mut Ctx<'_>, input: &str) -> Result<i32, Failure> {
    let m = ctx.load(input)?;
    let report = m.check_axioms_with(&ctx.options);
    ctx.report_axioms(input, &report)?;
    Ok(if report.overall { EXIT_OK } else { EXIT_AXIOMS })
}

fn cmd_construct(
    ctx: &mut Ctx<'_>,
    base: &str,
    rule: &str,
    conv: IndexConvention,
    validate: bool,
) -> Result<i32, Failure> {
    let base_table = ctx.load(base)?;
    let rule = load_rule(rule).map_err(Failure::error)?;
    let product = product3(&base_table, &rule, conv);
    let report = validate.then(|| product.table.check_axioms_with(&ctx.options));
    match ctx.format {
        Format::Text => {
            ctx.emit(&emit_table(&product.table))?;
            if let Some(r) = &report {
                ctx.emit(&format!("{r}\n"))?;
            }
        }
        Format::Json => ctx.emit_json(json!({
            "base": base,
            "rule": rule.name(),
            "convention": conv,
            "small_base": product.small_base,
            "table": TableJson::from(&product.table),
            "axioms": report,
        }))?,
    }
    Ok(match report {
        Some(r) if !r.overall => EXIT_AXIOMS,
        _ => EXIT_OK,
    })
}

fn cmd_inn(ctx: &mut Ctx<'_>, input: &str) -> Result<i32, Failure> {
    let m = ctx.load(input)?;
    let structure = match inner_structure(&m) {
        Ok(s) => s,
        Err(e @ QuandleError::ColumnNotBijective { .. }) => {
            return Err(Failure {
                code: EXIT_AXIOMS,
                message: e.to_string(),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let group = inn_group(&m, DEFAULT_MATERIALIZE_CAP)?;
    let group_spectrum = group.order_spectrum();
    match ctx.format {
        Format::Text => {
            let mut s = structure.to_string();
            s.push_str(&format!("spectrum: {}\n", structure.spectrum_string()));
            s.push_str(&format!("inner group order: {}\n", group.order));
            s.push_str(&format!(
                "inner group element orders: {}\n",
                spectrum_string(&group_spectrum)
            ));
            ctx.emit(&s)?;
        }
        Format::Json => ctx.emit_json(json!({
            "input": input,
            "structure": structure,
            "inner_group_order": group.order,
            "inner_group_element_orders": group_spectrum,
        }))?,
    }
    Ok(EXIT_OK)
}

fn cmd_props(ctx: &mut Ctx<'_>, input: &str) -> Result<i32, Failure> {
    let q = ctx.load_quandle(input)?;
    let flags = PropertyFlags::of(&q);
    let orbit_list = orbits(&q)?;
    let centralizers: Vec<Vec<usize>> = (1..=q.order())
        .map(|a| centralizer(&q, a))
        .collect::<Result<_, _>>()?;
    let alexander = alexander_recognize(&q);
    let conjugation = is_group_conjugation(&q);
    match ctx.format {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("order: {}\n", q.order()));
            s.push_str(&format!("involutory: {}\n", flags.involutory));
            s.push_str(&format!("abelian: {}\n", flags.abelian));
            s.push_str(&format!("left-distributive: {}\n", flags.left_distributive));
            s.push_str(&format!("connected: {}\n", flags.connected));
            s.push_str(&format!("cyclic type: {}\n", flags.cyclic_type));
            match &conjugation {
                Ok(v) => s.push_str(&format!("group conjugation: {v}\n")),
                Err(e) => s.push_str(&format!("group conjugation: unknown ({e})\n")),
            }
            match &alexander {
                Ok(Some(w)) => s.push_str(&format!(
                    "alexander: yes, group Z{:?}, automorphism generator images {:?}, iso {}\n",
                    w.group.factors(),
                    w.automorphism.generator_images(),
                    w.iso
                )),
                Ok(None) => s.push_str("alexander: no\n"),
                Err(e) => s.push_str(&format!("alexander: unknown ({e})\n")),
            }
            let orbit_text: Vec<String> = orbit_list
                .iter()
                .map(|o| {
                    let v: Vec<String> = o.iter().map(|e| e.to_string()).collect();
                    format!("{{{}}}", v.join(","))
                })
                .collect();
            s.push_str(&format!("orbits: {}\n", orbit_text.join(" ")));
            for (i, c) in centralizers.iter().enumerate() {
                s.push_str(&format!("centralizer({}): {:?}\n", i + 1, c));
            }
            ctx.emit(&s)?;
        }
        Format::Json => ctx.emit_json(json!({
            "input": input,
            "order": q.order(),
            "flags": flags,
            "group_conjugation": conjugation.ok(),
            "alexander": alexander.ok().map(|w| json!({ "recognized": w.is_some(), "witness": w })),
            "orbits": orbit_list,
            "centralizers": centralizers,
        }))?,
    }
    Ok(EXIT_OK)
}

fn cmd_iso(ctx: &mut Ctx<'_>, a: &str, b: &str) -> Result<i32, Failure> {
    let qa = ctx.load_quandle(a)?;
    let qb = ctx.load_quandle(b)?;
    let result = are_isomorphic(&qa, &qb);
    match ctx.format {
        Format::Text => {
            if let Some(phi) = &result.mapping {
                ctx.emit(&format!("isomorphic\nmapping: {:?}\n", phi.images()))?;
            } else {
                let cert = result
                    .certificate
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default();
                ctx.emit(&format!("not isomorphic\ncertificate: {cert}\n"))?;
            }
        }
        Format::Json => ctx.emit_json(json!({ "a": a, "b": b, "result": result }))?,
    }
    Ok(if result.is_isomorphic() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_classify(ctx: &mut Ctx<'_>, inputs: &[String]) -> Result<i32, Failure> {
    let mut qs = Vec::with_capacity(inputs.len());
    for input in inputs {
        qs.push(ctx.load_quandle(input)?);
    }
    let classes = classify_family(&qs);
    match ctx.format {
        Format::Text => {
            let mut s = format!("classes: {}\n", classes.len());
            for (i, c) in classes.iter().enumerate() {
                let names: Vec<&str> = c.members.iter().map(|&m| inputs[m].as_str()).collect();
                s.push_str(&format!("class {}: {}\n", i + 1, names.join(" ")));
            }
            ctx.emit(&s)?;
        }
        Format::Json => {
            let list: Vec<_> = classes
                .iter()
                .map(|c| {
                    json!({
                        "members": c.members.iter().map(|&m| &inputs[m]).collect::<Vec<_>>(),
                        "representative": TableJson::from(c.representative.as_magma()),
                        "profile": c.profile,
                    })
                })
                .collect();
            ctx.emit_json(json!({ "class_count": classes.len(), "classes": list }))?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(ctx: &mut Ctx<'_>, input: &str, conv: IndexConvention) -> Result<i32, Failure> {
    let m = ctx.load(input)?;
    let Some((base, rule)) = decompose3(&m, conv)? else {
        match ctx.format {
            Format::Text => ctx.emit("no decomposition\n")?,
            Format::Json => ctx.emit_json(json!({ "input": input, "decomposition": null }))?,
        }
        return Ok(EXIT_NEGATIVE);
    };
    let builtin = BuiltinDataset::ALL
        .into_iter()
        .find(|d| d.table().same_table(&base))
        .map(BuiltinDataset::key);
    let rule_valid = validate_rule(&rule).overall;
    match ctx.format {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("base = {}\n", builtin.unwrap_or("(table below)")));
            s.push_str(&format!("rule = {}\n", rule.name()));
            s.push_str(&format!("rule valid: {rule_valid}\n"));
            s.push_str(&emit_table(&base));
            s.push_str(&emit_phase(&rule));
            ctx.emit(&s)?;
        }
        Format::Json => ctx.emit_json(json!({
            "input": input,
            "convention": conv,
            "decomposition": {
                "base_builtin": builtin,
                "base": TableJson::from(&base),
                "rule": rule.name(),
                "phase": rule.table(),
                "rule_valid": rule_valid,
            }
        }))?,
    }
    Ok(EXIT_OK)
}

fn cmd_audit(ctx: &mut Ctx<'_>, base: &str, rule: &str) -> Result<i32, Failure> {
    let q = ctx.load_quandle(base)?;
    let rule = load_rule(rule).map_err(Failure::error)?;
    match audit_transfer(&q, &rule) {
        Ok(report) => {
            match ctx.format {
                Format::Text => ctx.emit(&report.to_string())?,
                Format::Json => ctx.emit_json(json!({ "audit": report }))?,
            }
            Ok(EXIT_OK)
        }
        Err(QuandleError::NotAQuandle(report)) => {
            ctx.report_axioms(
                &format!("rule {} (phase coordinates 0..2)", rule.name()),
                &report,
            )?;
            Ok(EXIT_AXIOMS)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_census(ctx: &mut Ctx<'_>, n: usize) -> Result<i32, Failure> {
    let reps = census(n)?;
    match ctx.format {
        Format::Text => {
            let mut s = format!("order {n}: {} isomorphism classes\n", reps.len());
            for q in &reps {
                s.push_str(&emit_table(q));
            }
            ctx.emit(&s)?;
        }
        Format::Json => {
            let tables: Vec<TableJson> =
                reps.iter().map(|q| TableJson::from(q.as_magma())).collect();
            ctx.emit_json(
                json!({ "order": n, "class_count": reps.len(), "representatives": tables }),
            )?
        }
    }
    Ok(EXIT_OK)
}
