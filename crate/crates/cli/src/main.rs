mod inputs;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use hompoisson::constructions::{self, DerivedKind};
use hompoisson::duality;
use hompoisson::format::{render, render_algebra, Template};
use hompoisson::linalg::Matrix;
use hompoisson::matched_pairs::{self, MatchedPair};
use hompoisson::operators;
use hompoisson::presentation::{Algebra, Representation, ALPHA, DOT};
use hompoisson::representations::{self, class_actions};
use hompoisson::scalar::{format_scalar, parse_binding};
use hompoisson::{axioms, catalog, AlgebraClass, CheckConfig, Error, Execution, ParameterBinding};
use serde_json::json;

use inputs::{load, Input};
use output::Outcome;

#[derive(Parser)]
#[command(name = "hompoisson", version, about = "Exact checks and constructions for Hom-Poisson type algebras")]
struct Cli {
    /// Parameter values, e.g. `lambda=5/2,a=1`.
    #[arg(long, global = true)]
    params: Option<String>,
    /// Structured report on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 32)]
    max_witnesses: usize,
    /// Write the document (builders) or report (checks) to a file.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Evaluate identities on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

fn class_arg(s: &str) -> std::result::Result<AlgebraClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra against a class.
    Check {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        input: String,
        /// Also check that the twist is multiplicative.
        #[arg(long)]
        multiplicative: bool,
    },
    /// Build a twisted algebra.
    Twist {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        input: String,
        #[command(flatten)]
        mode: TwistMode,
        /// Derived algebra of the first or second kind.
        #[arg(long, default_value_t = 1)]
        kind: u8,
    },
    /// Shorthand for `twist --derived N`.
    Derive {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        input: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        kind: u8,
    },
    /// Shorthand for `twist --alpha-h H`.
    Alphah {
        input: String,
        #[arg(long)]
        h: String,
    },
    /// Tensor product of two algebras.
    Tensor {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        left: String,
        right: String,
    },
    /// Commutator of a (Hom-)pre-Lie product.
    Subadjacent {
        #[arg(long, value_parser = class_arg)]
        class: Option<AlgebraClass>,
        input: String,
    },
    /// Bracket from one derivation, or from two commuting derivations.
    Bracketd {
        input: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        d2: Option<String>,
    },
    /// Semidirect product with a representation (regular by default).
    Semidirect {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        input: String,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Check a representation (regular by default).
    Checkrep {
        #[arg(long, value_parser = class_arg)]
        class: AlgebraClass,
        input: String,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Dual of a transposed Hom-Poisson representation.
    Dualrep {
        input: String,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Matched pairs of algebras.
    Matched {
        #[command(subcommand)]
        action: MatchedCmd,
    },
    /// Standard Manin triple on A ⊕ A*.
    Manin { input: String, dual: String },
    /// Bialgebra conditions for the coproducts `delta` and `Delta` of the input.
    Bialgebra {
        input: String,
        /// Document holding `coops`; defaults to the input.
        #[arg(long)]
        coops: Option<String>,
    },
    /// Bialgebra, matched pair and Manin triple verdicts for (A, A*).
    Equivalence { input: String, dual: String },
    /// O-operators.
    Oop {
        #[command(subcommand)]
        action: OopCmd,
    },
    /// Rota-Baxter operators.
    Rb {
        #[command(subcommand)]
        action: RbCmd,
    },
    /// Basis of the space of derivations.
    Derivations {
        input: String,
        #[arg(long, default_value = "dot")]
        op: String,
        /// Map the derivations must commute with, e.g. `alpha`.
        #[arg(long)]
        commuting: Option<String>,
    },
    /// Built-in example algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TwistMode {
    /// Yau twist along a morphism (map name or inline `a,b;c,d`).
    #[arg(long)]
    yau: Option<String>,
    /// Compose the twist with a morphism.
    #[arg(long)]
    compose: Option<String>,
    /// Twist of a transposed Poisson algebra by `x ↦ h·x`.
    #[arg(long)]
    alpha_h: Option<String>,
    /// n-th derived algebra.
    #[arg(long)]
    derived: Option<u32>,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, value_parser = class_arg)]
    class: AlgebraClass,
    a: String,
    b: String,
    /// Actions of A on B; zero when omitted.
    #[arg(long)]
    on_b: Option<String>,
    /// Actions of B on A; zero when omitted.
    #[arg(long)]
    on_a: Option<String>,
}

#[derive(Subcommand)]
enum MatchedCmd {
    Check(PairArgs),
    Double(PairArgs),
}

#[derive(Args)]
struct OopArgs {
    #[arg(long, value_parser = class_arg)]
    class: AlgebraClass,
    input: String,
    #[arg(long)]
    rep: Option<String>,
    /// Document holding `T`; defaults to the input.
    #[arg(long)]
    operator: Option<String>,
}

#[derive(Subcommand)]
enum OopCmd {
    Check(OopArgs),
    Induce(OopArgs),
}

#[derive(Args)]
struct RbArgs {
    #[arg(long, value_parser = class_arg, default_value = "transposed-hom-poisson")]
    class: AlgebraClass,
    input: String,
    /// Map name or inline matrix.
    #[arg(long)]
    r: String,
}

#[derive(Subcommand)]
enum RbCmd {
    Check(RbArgs),
    Induce(RbArgs),
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { id: String },
}

enum Done {
    Report(Outcome),
    Document { text: String, outcome: Outcome },
}

struct Ctx {
    binding: ParameterBinding,
    cfg: CheckConfig,
    command: String,
    inputs: Vec<String>,
}

impl Ctx {
    fn outcome(&self) -> Outcome {
        Outcome::new(&self.command, self.inputs.clone())
    }

    fn load(&mut self, spec: &str) -> Result<Input> {
        self.inputs.push(spec.to_string());
        load(spec)
    }

    fn algebra(&mut self, spec: &str) -> Result<(Input, Algebra)> {
        let input = self.load(spec)?;
        let a = input.algebra(&self.binding)?;
        Ok((input, a))
    }

    /// `--rep` document, else the input's own representation, else the regular one.
    fn representation(&mut self, input: &Input, a: &Algebra, rep: Option<&str>, class: AlgebraClass) -> Result<Representation> {
        if let Some(spec) = rep {
            let r = self.load(spec)?;
            return r.representation(&self.binding);
        }
        if input.has_representation() {
            return input.representation(&self.binding);
        }
        Ok(representations::regular_representation(a, class)?)
    }
}

fn document(a: &Algebra, outcome: Outcome) -> Done {
    Done::Document { text: render_algebra(a), outcome }
}

fn zero_actions(acting: &Algebra, acted: &Algebra, class: AlgebraClass) -> Result<Representation> {
    let mut rep = Representation::new(acting.dim, acted.square_map(ALPHA)?.clone());
    for name in class_actions(class)? {
        rep = rep.with_action(name, vec![Matrix::zeros(acted.dim, acted.dim); acting.dim]);
    }
    Ok(rep)
}

fn matched_pair(ctx: &mut Ctx, p: &PairArgs) -> Result<MatchedPair> {
    let (_, a) = ctx.algebra(&p.a)?;
    let (_, b) = ctx.algebra(&p.b)?;
    let a = a.restrict(p.class.ops())?;
    let b = b.restrict(p.class.ops())?;
    let on_b = match &p.on_b {
        Some(s) => ctx.load(s)?.representation(&ctx.binding)?,
        None => zero_actions(&a, &b, p.class)?,
    };
    let on_a = match &p.on_a {
        Some(s) => ctx.load(s)?.representation(&ctx.binding)?,
        None => zero_actions(&b, &a, p.class)?,
    };
    Ok(MatchedPair::new(a, b, on_b, on_a)?)
}

fn operator_inputs(ctx: &mut Ctx, o: &OopArgs) -> Result<(Algebra, Representation, Matrix)> {
    let (input, a) = ctx.algebra(&o.input)?;
    let rep = ctx.representation(&input, &a, o.rep.as_deref(), o.class)?;
    let t = match &o.operator {
        Some(s) => ctx.load(s)?.template.operator(&ctx.binding)?,
        None => input.template.operator(&ctx.binding)?,
    };
    Ok((a, rep, t))
}

fn derived_kind(kind: u8) -> Result<DerivedKind> {
    Ok(match kind {
        1 => DerivedKind::First,
        2 => DerivedKind::Second,
        other => bail!("--kind must be 1 or 2, not {other}"),
    })
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!((0..m.rows).map(|r| m.row(r).iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn execute(cli: &Cli, ctx: &mut Ctx) -> Result<Done> {
    let cfg = ctx.cfg.clone();
    Ok(match &cli.command {
        Command::Check { class, input, multiplicative } => {
            let (_, a) = ctx.algebra(input)?;
            let mut out = ctx.outcome().report(class.check(&a, &cfg)?);
            if *multiplicative {
                out = out.report(axioms::check_multiplicative(&a, class.ops(), &cfg)?);
            }
            Done::Report(out)
        }
        Command::Twist { class, input, mode, kind } => {
            let (input, a) = ctx.algebra(input)?;
            let out = if let Some(g) = &mode.yau {
                constructions::yau_twist(&a, *class, &input.matrix(g, &ctx.binding)?, &cfg)?
            } else if let Some(g) = &mode.compose {
                constructions::compose_twist(&a, *class, &input.matrix(g, &ctx.binding)?, &cfg)?
            } else if let Some(h) = &mode.alpha_h {
                constructions::alpha_h_twist(&a, &inputs::vector(h, &a.basis)?, &cfg)?
            } else {
                constructions::derived_algebra(&a, *class, mode.derived.expect("one mode"), derived_kind(*kind)?, &cfg)?
            };
            document(&out, ctx.outcome())
        }
        Command::Derive { class, input, n, kind } => {
            let (_, a) = ctx.algebra(input)?;
            document(&constructions::derived_algebra(&a, *class, *n, derived_kind(*kind)?, &cfg)?, ctx.outcome())
        }
        Command::Alphah { input, h } => {
            let (_, a) = ctx.algebra(input)?;
            document(&constructions::alpha_h_twist(&a, &inputs::vector(h, &a.basis)?, &cfg)?, ctx.outcome())
        }
        Command::Tensor { class, left, right } => {
            let (_, a1) = ctx.algebra(left)?;
            let (_, a2) = ctx.algebra(right)?;
            document(&constructions::tensor_product(&a1, &a2, *class, &cfg)?, ctx.outcome())
        }
        Command::Subadjacent { class, input } => {
            let (_, a) = ctx.algebra(input)?;
            let class = class.unwrap_or(if a.ops.contains_key(DOT) {
                AlgebraClass::HomPreLiePoisson
            } else {
                AlgebraClass::HomPreLie
            });
            document(&constructions::sub_adjacent(&a, class, &cfg)?, ctx.outcome())
        }
        Command::Bracketd { input, d, d2 } => {
            let (input, a) = ctx.algebra(input)?;
            let d1 = input.matrix(d, &ctx.binding)?;
            let out = match d2 {
                Some(d2) => constructions::bracket_from_two_derivations(&a, &d1, &input.matrix(d2, &ctx.binding)?, &cfg)?,
                None => constructions::bracket_from_derivation(&a, &d1, &cfg)?,
            };
            document(&out, ctx.outcome())
        }
        Command::Semidirect { class, input, rep } => {
            let (input, a) = ctx.algebra(input)?;
            let rep = ctx.representation(&input, &a, rep.as_deref(), *class)?;
            document(&representations::semidirect_product(&a, &rep, *class, &cfg)?, ctx.outcome())
        }
        Command::Checkrep { class, input, rep } => {
            let (input, a) = ctx.algebra(input)?;
            let rep = ctx.representation(&input, &a, rep.as_deref(), *class)?;
            Done::Report(ctx.outcome().report(representations::check_rep(*class, &a, &rep, &cfg)?))
        }
        Command::Dualrep { input, rep } => {
            let (input, a) = ctx.algebra(input)?;
            let class = AlgebraClass::TransposedHomPoisson;
            let rep = ctx.representation(&input, &a, rep.as_deref(), class)?;
            let o = representations::dual_representation(&a, &rep, &cfg)?;
            let text = render(&Template::from_algebra(&a).with_representation(&o.dual));
            let outcome = ctx.outcome().info(o.strict).info(o.symmetrized).report(o.dual_check);
            Done::Document { text, outcome }
        }
        Command::Matched { action } => match action {
            MatchedCmd::Check(p) => {
                let mp = matched_pair(ctx, p)?;
                let r = matched_pairs::check_matched_pair(&mp, p.class, &cfg)?;
                let mut out = ctx.outcome().report(r.normative).info(r.advisory);
                if !r.skipped.is_empty() {
                    out = out.line(format!("not evaluated: {}", r.skipped.join(", ")));
                }
                Done::Report(out)
            }
            MatchedCmd::Double(p) => {
                let mp = matched_pair(ctx, p)?;
                document(&matched_pairs::build_double(&mp, p.class, &cfg)?, ctx.outcome())
            }
        },
        Command::Manin { input, dual } => {
            let (_, a) = ctx.algebra(input)?;
            let (_, s) = ctx.algebra(dual)?;
            Done::Report(ctx.outcome().report(duality::check_manin_triple(&a, &s, &cfg)?))
        }
        Command::Bialgebra { input, coops } => {
            let (input, a) = ctx.algebra(input)?;
            let source = match coops {
                Some(s) => ctx.load(s)?,
                None => input,
            };
            let delta = source.template.comultiplication("delta", &ctx.binding)?;
            let cap = source.template.comultiplication("Delta", &ctx.binding)?;
            Done::Report(ctx.outcome().report(duality::check_bialgebra_conditions(&a, &delta, &cap, &cfg)?))
        }
        Command::Equivalence { input, dual } => {
            let (_, a) = ctx.algebra(input)?;
            let (_, s) = ctx.algebra(dual)?;
            let r = duality::equivalence_report(&a, &s, &cfg)?;
            let v = |b: bool| hompoisson::report::verdict(b);
            let mut out = ctx
                .outcome()
                .line(format!("bialgebra: {}", v(r.bialgebra_holds())))
                .line(format!("matched pair: {}", v(r.matched_pair_holds())))
                .line(format!("manin triple: {}", v(r.manin_triple_holds())))
                .verdict(r.agree())
                .info(r.bialgebra.clone())
                .info(r.matched_pair_sides.clone());
            if let Some(mp) = &r.matched_pair {
                out = out.info(mp.normative.clone());
            }
            out = out.info(r.manin_triple.clone());
            out.data = Some(json!({
                "bialgebra": r.bialgebra_holds(),
                "matched_pair": r.matched_pair_holds(),
                "manin_triple": r.manin_triple_holds(),
                "agree": r.agree(),
            }));
            Done::Report(out)
        }
        Command::Oop { action } => match action {
            OopCmd::Check(o) => {
                let (a, rep, t) = operator_inputs(ctx, o)?;
                Done::Report(ctx.outcome().report(operators::check_o_operator(&a, &rep, &t, o.class, &cfg)?))
            }
            OopCmd::Induce(o) => {
                let (a, rep, t) = operator_inputs(ctx, o)?;
                let out = operators::induced_products(&a, &rep, &t, o.class, &cfg)?;
                let morphism = operators::o_operator_is_morphism(&a, &rep, &t, o.class, &cfg)?;
                document(&out, ctx.outcome().report(morphism))
            }
        },
        Command::Rb { action } => match action {
            RbCmd::Check(r) => {
                let (input, a) = ctx.algebra(&r.input)?;
                let m = input.matrix(&r.r, &ctx.binding)?;
                Done::Report(ctx.outcome().report(operators::check_rota_baxter(&a, &m, r.class, &cfg)?))
            }
            RbCmd::Induce(r) => {
                let (input, a) = ctx.algebra(&r.input)?;
                let m = input.matrix(&r.r, &ctx.binding)?;
                document(&operators::rota_baxter_induced(&a, &m, &cfg)?, ctx.outcome())
            }
        },
        Command::Derivations { input, op, commuting } => {
            let (_, a) = ctx.algebra(input)?;
            let basis = operators::derivation_space(&a, op, commuting.as_deref(), &cfg)?;
            let mut out = ctx.outcome().line(format!("dimension {}", basis.len()));
            for d in &basis {
                let rows: Vec<String> =
                    (0..d.rows).map(|r| d.row(r).iter().map(format_scalar).collect::<Vec<_>>().join(" ")).collect();
                out = out.line(format!("[{}]", rows.join("; ")));
            }
            out.data = Some(json!({
                "op": op,
                "commuting": commuting,
                "dimension": basis.len(),
                "basis": basis.iter().map(matrix_json).collect::<Vec<_>>(),
            }));
            Done::Report(out)
        }
        Command::Catalog { action } => match action {
            CatalogCmd::List => {
                let mut out = ctx.outcome();
                let mut rows = Vec::new();
                for e in catalog::list() {
                    let params = e.params();
                    out = out.line(format!("{:<20} {:<24} {:?} [{}]", e.id, e.class.name(), e.status, params.join(",")));
                    rows.push(json!({
                        "id": e.id,
                        "class": e.class.name(),
                        "status": format!("{:?}", e.status).to_lowercase(),
                        "params": params,
                        "provenance": e.provenance,
                    }));
                }
                out.data = Some(json!(rows));
                Done::Report(out)
            }
            CatalogCmd::Show { id } => {
                let e = catalog::get(id)?;
                ctx.inputs.push(e.id.to_string());
                let text = if cli.params.is_some() {
                    render_algebra(&e.instantiate(&ctx.binding)?)
                } else {
                    e.source.to_string()
                };
                Done::Document { text, outcome: ctx.outcome() }
            }
        },
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Twist { .. } => "twist",
        Command::Derive { .. } => "derive",
        Command::Alphah { .. } => "alphah",
        Command::Tensor { .. } => "tensor",
        Command::Subadjacent { .. } => "subadjacent",
        Command::Bracketd { .. } => "bracketd",
        Command::Semidirect { .. } => "semidirect",
        Command::Checkrep { .. } => "checkrep",
        Command::Dualrep { .. } => "dualrep",
        Command::Matched { action: MatchedCmd::Check(_) } => "matched check",
        Command::Matched { action: MatchedCmd::Double(_) } => "matched double",
        Command::Manin { .. } => "manin",
        Command::Bialgebra { .. } => "bialgebra",
        Command::Equivalence { .. } => "equivalence",
        Command::Oop { action: OopCmd::Check(_) } => "oop check",
        Command::Oop { action: OopCmd::Induce(_) } => "oop induce",
        Command::Rb { action: RbCmd::Check(_) } => "rb check",
        Command::Rb { action: RbCmd::Induce(_) } => "rb induce",
        Command::Derivations { .. } => "derivations",
        Command::Catalog { action: CatalogCmd::List } => "catalog list",
        Command::Catalog { action: CatalogCmd::Show { .. } } => "catalog show",
    }
}

fn emit(cli: &Cli, outcome: &Outcome, status: &str, to_file: bool) -> Result<()> {
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&outcome.to_json(status))?;
        s.push('\n');
        s
    } else {
        outcome.to_text(status)
    };
    match (&cli.output, to_file) {
        (Some(path), true) => std::fs::write(path, text)?,
        _ => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let binding = match cli.params.as_deref().map(parse_binding).transpose() {
        Ok(b) => b.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let execution = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let mut ctx = Ctx {
        binding,
        cfg: CheckConfig { max_witnesses: cli.max_witnesses, execution },
        command: command_name(&cli.command).to_string(),
        inputs: Vec::new(),
    };
    let result = execute(&cli, &mut ctx).and_then(|done| match done {
        Done::Report(outcome) => {
            emit(&cli, &outcome, outcome.status(), true)?;
            Ok(if outcome.passed { 0 } else { 1 })
        }
        Done::Document { text, outcome } => {
            match &cli.output {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    emit(&cli, &outcome, outcome.status(), false)?;
                }
                None => print!("{text}"),
            }
            Ok(if outcome.passed { 0 } else { 1 })
        }
    });
    let code = match result {
        Ok(code) => code,
        Err(err) => match err.downcast_ref::<Error>() {
            Some(gate @ (Error::Precondition { report, .. } | Error::Postcondition { report, .. })) => {
                let (status, code) =
                    if matches!(gate, Error::Precondition { .. }) { ("precondition-failed", 3) } else { ("fail", 1) };
                eprintln!("error: {gate}");
                let mut outcome = ctx.outcome().info((**report).clone());
                outcome.passed = false;
                if let Err(e) = emit(&cli, &outcome, status, false) {
                    eprintln!("error: {e}");
                }
                code
            }
            _ => {
                eprintln!("error: {err:#}");
                2
            }
        },
    };
    ExitCode::from(code)
}

