//! The `qcomod` command line. [`run`] returns everything the process would
//! print, so tests can drive it without spawning.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::qdim::{decompose_tensor, green_class, green_mul, qdim, qdim_trace_oracle, GreenElem};
use crate::quantum::{
    basic_block, dimension_vector, indecomposables_with_dimension_vector, parse_label, realize,
    string_block, window_for, ComoduleLabel, RootParams,
};
use crate::quiver::CoalgebraPresentation;
use crate::string::{
    associated_string_coalgebra, check_special_biserial, enumerate_strings, injective_form,
    is_isomorphic,
};
use crate::syzygy::{
    almost_split, ar_window, omega_inv_oracle, omega_oracle, omega_power, orbit_of,
};

#[derive(Debug, Parser)]
#[command(
    name = "qcomod",
    version,
    about = "Comodules of quantum SL(2) blocks and string coalgebras"
)]
pub struct Cli {
    /// Order of the root of unity (odd, at least 3).
    #[arg(long, global = true)]
    pub ell: Option<u64>,
    /// Base weight r0 of a nontrivial block.
    #[arg(long, global = true)]
    pub block: Option<u64>,
    /// Truncation window n of the block coalgebra B_n.
    #[arg(long, global = true)]
    pub window: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coalgebra presentation file in the JSON schema.
    #[arg(long, global = true)]
    pub presentation: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conditions S1, S2, S3 of a presentation (default: B_n).
    CheckBiserial {
        /// Use B'_n instead of B_n.
        #[arg(long)]
        string: bool,
        /// Also classify every injective comodule.
        #[arg(long)]
        injectives: bool,
        /// Also print the associated string coalgebra.
        #[arg(long)]
        associated: bool,
    },
    /// Strings up to a number of letters, one per class.
    Strings {
        #[arg(long, default_value_t = 4)]
        max_letters: usize,
        #[arg(long)]
        string: bool,
    },
    /// A representation of a label over B_n.
    Realize { label: String },
    /// Syzygy in closed form.
    Omega {
        label: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        /// Recompute by linear algebra and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Cosyzygy in closed form.
    OmegaInv {
        label: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Orbit coordinate (k, n) with label = Ω^{-k} S(n).
    Orbit { label: String },
    /// The almost split sequence ending in a label.
    Ass { label: String },
    /// A window of the AR quiver of a block.
    ArQuiver {
        #[arg(long, allow_negative_numbers = true)]
        kmin: i64,
        #[arg(long, allow_negative_numbers = true)]
        kmax: i64,
        #[arg(long)]
        nmax: usize,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Quantum dimension.
    Qdim {
        label: String,
        /// Also compute the trace of K on the weights.
        #[arg(long)]
        oracle: bool,
    },
    /// L(a) ⊗ L(b) for restricted a, b.
    Tensor { a: u64, b: u64 },
    /// Stable Green ring class of a label, or of a product of labels.
    Green {
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Indecomposables with a dimension vector like 1,2,1.
    Enumerate { dims: String },
    /// Dimension, composition factors and socle layers.
    Dims { label: String },
}

/// What a finished invocation prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    error: Error,
    /// The text a parse position refers to.
    input: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, input: None }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Output {
    json: Value,
    text: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&out.json).expect("json values serialize")
                )
            } else {
                out.text
            };
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => report(&cli, f),
    }
}

fn report(cli: &Cli, f: Failure) -> Outcome {
    let code = f.error.exit_code();
    if cli.json {
        let mut body = json!({ "kind": f.error.kind(), "message": f.error.to_string() });
        if let Error::Parse { position, .. } = f.error {
            body["position"] = json!(position);
            if let Some(input) = &f.input {
                body["input"] = json!(input);
            }
        }
        let text =
            serde_json::to_string_pretty(&json!({ "error": body })).expect("json values serialize");
        return Outcome {
            code,
            stdout: format!("{text}\n"),
            stderr: String::new(),
        };
    }
    let mut stderr = format!("error: {}\n", f.error);
    if let (Error::Parse { position, .. }, Some(input)) = (&f.error, &f.input) {
        stderr.push_str(&format!("  {input}\n  {}^\n", " ".repeat(*position)));
    }
    Outcome {
        code,
        stdout: String::new(),
        stderr,
    }
}

fn params(cli: &Cli) -> CliResult<RootParams> {
    let ell = cli
        .ell
        .ok_or_else(|| Error::parse("--ell is required for this command", 0))?;
    Ok(RootParams::new(ell)?)
}

fn block(cli: &Cli, p: RootParams) -> CliResult<u64> {
    let base = cli
        .block
        .ok_or_else(|| Error::parse("--block is required for this command", 0))?;
    p.check_base(base)?;
    Ok(base)
}

fn label(text: &str, p: RootParams) -> CliResult<ComoduleLabel> {
    parse_label(text, p).map_err(|error| Failure {
        error,
        input: Some(text.to_string()),
    })
}

fn presentation(cli: &Cli, string: bool) -> CliResult<CoalgebraPresentation> {
    if let Some(path) = &cli.presentation {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Serialization(format!("cannot read {}: {e}", path.display())))?;
        return Ok(CoalgebraPresentation::from_json_str(&text)?);
    }
    let n = cli.window.unwrap_or(4);
    Ok(if string {
        string_block(n)
    } else {
        basic_block(n)
    })
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::CheckBiserial {
            string,
            injectives,
            associated,
        } => check_biserial(cli, *string, *injectives, *associated),
        Command::Strings {
            max_letters,
            string,
        } => strings(cli, *max_letters, *string),
        Command::Realize { label: text } => realize_cmd(cli, text),
        Command::Omega {
            label,
            power,
            verify,
        } => omega_cmd(cli, label, *power, *verify),
        Command::OmegaInv {
            label,
            power,
            verify,
        } => omega_cmd(cli, label, -*power, *verify),
        Command::Orbit { label: text } => {
            let p = params(cli)?;
            let l = label(text, p)?;
            let c = orbit_of(l, p)?;
            let base = l
                .block_form(p)
                .base()
                .expect("orbits live in nontrivial blocks");
            let simple = ComoduleLabel::simple_at(p, base, c.n);
            Ok(Output {
                json: json!({ "label": l, "k": c.k, "n": c.n, "simple": simple }),
                text: format!("{l} = Ω^{} {simple}  (k = {}, n = {})\n", -c.k, c.k, c.n),
            })
        }
        Command::Ass { label: text } => {
            let p = params(cli)?;
            let s = almost_split(label(text, p)?, p)?;
            Ok(Output {
                json: serde_json::to_value(&s).expect("plain data"),
                text: format!("{}\n", s.render()),
            })
        }
        Command::ArQuiver {
            kmin,
            kmax,
            nmax,
            dot,
        } => {
            let p = params(cli)?;
            let g = ar_window(p, block(cli, p)?, *kmin, *kmax, *nmax)?;
            let text = if *dot {
                g.export_dot()
            } else {
                let mut t = format!(
                    "{} nodes, {} edges, {} components\n",
                    g.nodes.len(),
                    g.edges.len(),
                    g.component_count()
                );
                for &(a, b) in &g.edges {
                    t.push_str(&format!("{} -> {}\n", g.nodes[a], g.nodes[b]));
                }
                t
            };
            Ok(Output {
                json: serde_json::to_value(g.to_json()).expect("plain data"),
                text,
            })
        }
        Command::Qdim {
            label: text,
            oracle,
        } => {
            let p = params(cli)?;
            let l = label(text, p)?;
            let q = qdim(l, p);
            let mut json = json!({ "label": l, "qdim": q.pretty(), "coefficients": q.coeffs() });
            let mut out = format!("qdim {l} = {}\ncoefficients {q}\n", q.pretty());
            if *oracle {
                let tr = qdim_trace_oracle(l, p);
                json["trace"] = json!(tr.coeffs());
                json["agrees"] = json!(tr == q);
                out.push_str(&format!(
                    "trace {tr} ({})\n",
                    if tr == q { "agrees" } else { "DIFFERS" }
                ));
            }
            Ok(Output { json, text: out })
        }
        Command::Tensor { a, b } => {
            let p = params(cli)?;
            let summands = decompose_tensor(*a, *b, p)?;
            let text: Vec<String> = summands.iter().map(ToString::to_string).collect();
            let dims: Vec<u64> = summands.iter().map(|l| l.dim(p)).collect();
            Ok(Output {
                json: json!({ "a": a, "b": b, "summands": summands, "dims": dims }),
                text: format!("{}\n", text.join(" ⊕ ")),
            })
        }
        Command::Green { labels } => {
            let p = params(cli)?;
            let parsed = labels
                .iter()
                .map(|t| label(t, p))
                .collect::<CliResult<Vec<_>>>()?;
            let class = parsed.iter().fold(GreenElem::one(p.ell()), |acc, &l| {
                green_mul(&acc, &green_class(l, p))
            });
            Ok(Output {
                json: json!({ "labels": parsed, "class": class, "text": class.to_string() }),
                text: format!("{class}\n"),
            })
        }
        Command::Enumerate { dims } => {
            let p = params(cli)?;
            let base = block(cli, p)?;
            let v = parse_dims(dims)?;
            let found = indecomposables_with_dimension_vector(p, base, &v)?;
            let text: String = found.iter().map(|l| format!("{l}\n")).collect();
            Ok(Output {
                json: json!({ "block": base, "dims": v, "labels": found }),
                text,
            })
        }
        Command::Dims { label: text } => dims_cmd(cli, text),
    }
}

fn parse_dims(text: &str) -> CliResult<Vec<usize>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let trimmed = part.trim();
        let v = trimmed.parse().map_err(|_| Failure {
            error: Error::parse(
                format!("expected a nonnegative integer, got {trimmed:?}"),
                pos,
            ),
            input: Some(text.to_string()),
        })?;
        out.push(v);
        pos += part.chars().count() + 1;
    }
    Ok(out)
}

fn weights_text(ws: &[u64]) -> String {
    ws.iter()
        .map(|r| format!("L({r})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn dims_cmd(cli: &Cli, text: &str) -> CliResult<Output> {
    let p = params(cli)?;
    let l = label(text, p)?;
    let factors = l.composition_factors(p);
    let layers = l.socle_layers(p);
    let dim = l.dim(p);
    let form = l.block_form(p);
    let vector = match form.base() {
        Some(_) => Some(dimension_vector(l, p, form.max_vertex())?),
        None => None,
    };
    let mut out = format!(
        "{l}\ndim {dim}\ncomposition factors {}\n",
        weights_text(&factors)
    );
    let layer_text: Vec<String> = layers
        .iter()
        .map(|ws| format!("[{}]", weights_text(ws)))
        .collect();
    out.push_str(&format!("socle layers {}\n", layer_text.join(" ")));
    if let Some(v) = &vector {
        let vs: Vec<String> = v.iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "dimension vector {} (block {})\n",
            vs.join(","),
            form.base().unwrap_or(0)
        ));
    }
    Ok(Output {
        json: json!({
            "label": l,
            "dim": dim,
            "composition_factors": factors,
            "socle_layers": layers,
            "block": form.base(),
            "dimension_vector": vector,
        }),
        text: out,
    })
}

fn realize_cmd(cli: &Cli, text: &str) -> CliResult<Output> {
    let p = params(cli)?;
    let l = label(text, p)?;
    let n = cli.window.unwrap_or_else(|| window_for(l, p));
    let rep = realize(l, p, n)?;
    let q = rep.quiver().clone();
    let mut out = format!("{l} over B_{n}\ndims");
    for (v, d) in rep.dims().iter().enumerate() {
        out.push_str(&format!(" {}:{d}", q.vertex_name(v)));
    }
    out.push('\n');
    for (a, arrow) in q.arrows().iter().enumerate() {
        let m = rep.map(a);
        if m.rows() == 0 || m.cols() == 0 {
            continue;
        }
        let rows: Vec<String> = m
            .to_strings()
            .iter()
            .map(|r| format!("[{}]", r.join(" ")))
            .collect();
        out.push_str(&format!(
            "{} ({}→{}): {}\n",
            arrow.name,
            q.vertex_name(arrow.source),
            q.vertex_name(arrow.target),
            rows.join(" ")
        ));
    }
    Ok(Output {
        json: json!({ "label": l, "window": n, "representation": rep.to_json() }),
        text: out,
    })
}

/// `Ω^power`; negative powers are cosyzygies.
fn omega_cmd(cli: &Cli, text: &str, power: i64, verify: bool) -> CliResult<Output> {
    let p = params(cli)?;
    let l = label(text, p)?;
    let result = omega_power(l, power, p)?;
    let mut json = json!({ "label": l, "power": power, "result": result });
    let mut out = format!("Ω^{power} {l} = {result}\n");
    if verify {
        let n = cli.window.unwrap_or_else(|| {
            window_for(l, p).max(window_for(result, p)) + power.unsigned_abs() as usize
        });
        let b = basic_block(n);
        let mut current = realize(l, p, n)?;
        for _ in 0..power.unsigned_abs() {
            current = if power > 0 {
                omega_oracle(&current, &b)?
            } else {
                omega_inv_oracle(&current, &b)?
            };
        }
        let agrees = is_isomorphic(&current, &realize(result, p, n)?);
        json["oracle_agrees"] = json!(agrees);
        json["window"] = json!(n);
        if !agrees {
            return Err(Error::domain(format!(
                "the linear-algebra syzygy over B_{n} is not {result}"
            ))
            .into());
        }
        out.push_str(&format!("verified over B_{n}\n"));
    }
    Ok(Output { json, text: out })
}

#[derive(Serialize)]
struct InjectiveReport {
    vertex: String,
    case: String,
    generators: Vec<String>,
}

fn check_biserial(
    cli: &Cli,
    string: bool,
    injectives: bool,
    associated: bool,
) -> CliResult<Output> {
    let b = presentation(cli, string)?;
    let q = b.quiver().clone();
    let r = check_special_biserial(&b);
    let mut json = json!({
        "s1": r.s1,
        "s2": r.s2,
        "s3": r.s3,
        "special_biserial": r.is_special_biserial(),
        "string": r.is_string(),
        "witnesses": r.witnesses,
    });
    let mut out = format!(
        "S1 {}\nS2 {}\nS3 {}\nspecial biserial {}\nstring coalgebra {}\n",
        r.s1,
        r.s2,
        r.s3,
        r.is_special_biserial(),
        r.is_string()
    );
    for w in &r.witnesses {
        out.push_str(&format!("witness: {w}\n"));
    }
    if injectives {
        let mut reports = Vec::new();
        for g in (0..q.vertex_count()).filter(|g| !b.boundary().contains(g)) {
            let f = injective_form(&b, g)?;
            let gens: Vec<String> = f.generators.iter().map(|v| v.render(&q)).collect();
            out.push_str(&format!(
                "I({}): case ({}) generated by {}\n",
                q.vertex_name(g),
                f.case,
                gens.join(", ")
            ));
            reports.push(InjectiveReport {
                vertex: q.vertex_name(g).to_string(),
                case: f.case.to_string(),
                generators: gens,
            });
        }
        json["injectives"] = serde_json::to_value(reports).expect("plain data");
    }
    if associated {
        let a = associated_string_coalgebra(&b)?;
        out.push_str(&format!(
            "associated string coalgebra\n{}\n",
            a.to_json_string()
        ));
        json["associated"] = serde_json::to_value(a.to_json()).expect("plain data");
    }
    Ok(Output { json, text: out })
}

fn strings(cli: &Cli, max_letters: usize, string: bool) -> CliResult<Output> {
    let b = presentation(cli, string)?;
    let q = b.quiver().clone();
    let classes = enumerate_strings(&b, max_letters);
    let mut out = String::new();
    let mut items = Vec::new();
    for c in &classes {
        let w = c.word();
        let rendered = w.render(&q);
        out.push_str(&format!("{rendered}\n"));
        items.push(json!({
            "word": rendered,
            "start": q.vertex_name(w.start()),
            "letters": w.to_json(&q),
        }));
    }
    Ok(Output {
        json: json!({ "max_letters": max_letters, "strings": items }),
        text: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("qcomod").chain(args.iter().copied()))
    }

    #[test]
    fn tensor_text() {
        let o = go(&["tensor", "--ell", "5", "4", "1"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "I(3)\n"));
    }

    #[test]
    fn parse_error_has_caret() {
        let o = go(&["qdim", "--ell", "5", "M(3,0)@b1"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("  M(3,0)@b1\n    ^"), "{}", o.stderr);
    }

    #[test]
    fn missing_ell() {
        assert_eq!(go(&["tensor", "1", "1"]).code, 2);
        assert_eq!(go(&["tensor", "--ell", "4", "1", "1"]).code, 3);
    }

    #[test]
    fn window_overflow_code() {
        let o = go(&["realize", "--ell", "5", "--window", "3", "M(4,0)@b1"]);
        assert_eq!(o.code, 4);
        let o = go(&[
            "--json",
            "realize",
            "--ell",
            "5",
            "--window",
            "3",
            "M(4,0)@b1",
        ]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "window_overflow");
    }
}
