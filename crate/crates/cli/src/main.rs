// SPDX-License-Identifier: Apache-2.0

//! `masure-kit`: queries on root systems and glued masure models, with a
//! JSON report on standard output.
//!
//! Exit status: 0 on success, 2 when the model violates an axiom or a
//! theorem (the witness is in the report), 1 on usage or input errors.

mod parse;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use masure_core::affine_order::Relation;
use masure_core::apartment::{enclosure_cl_sharp, EnclosureInput};
use masure_core::masure::{check_axioms, realize_intersection, Axiom, CatalogBounds};
use masure_core::rational::{format_vector, parse_q, Q};
use masure_core::serial::{model_to_json, parse_model, parse_system};
use masure_core::tits_order::{order_summary, vectorial_distance};
use masure_core::{build_complex, Apartment, DeltaFunctional, Error, GluedMasure, HalfSpaceSet};

use report::{Diagnostic, Inputs, Report, Severity};

#[derive(Parser, Debug)]
#[command(name = "masure-kit", version, about = "Exact queries on Kac-Moody apartments and glued masure models")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Seed recorded in the report for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximal Weyl word length for root windows and vectorial faces.
    #[arg(long, global = true, default_value_t = 3)]
    window: usize,
    /// Half-width of the catalog box in every chart.
    #[arg(long = "box", global = true, default_value = "2")]
    half_width: String,
    /// Grid step of the catalog box.
    #[arg(long, global = true, default_value = "1")]
    step: String,
    /// Half-width of the box holding chimney bases.
    #[arg(long, global = true, default_value = "1")]
    chimney_box: String,
    /// Maximal number of catalog germs.
    #[arg(long, global = true, default_value_t = 200_000)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite enclosure cl^# of a point set.
    Enclose {
        #[arg(long)]
        system: PathBuf,
        /// Points separated by `;` (commas also separate points in rank one).
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Tits preorder, strict preorder and vectorial distance of two points.
    Order(SystemPair),
    /// Vectorial distance d^v(x, y).
    Dv(SystemPair),
    /// Retraction of a point, or of the segment [point, to], onto the germ's chart.
    Retract {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        germ: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
    },
    /// A ∩ B as an enclosed set with its Weyl isomorphism.
    Intersect(ChartPair),
    /// Convex pieces of A ∩ B before merging.
    Decompose(ChartPair),
    /// Gallery distance between charts, optionally inside the family of a germ.
    Distance {
        #[command(flatten)]
        pair: ChartPair,
        #[arg(long, allow_hyphen_values = true)]
        germ: Option<String>,
    },
    /// Value of the null root on a point.
    Delta {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Compare two points by the null root, optionally with a certificate.
    Compare {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        certify: bool,
    },
    /// Run axiom checks on a catalog.
    Check {
        #[arg(long)]
        model: PathBuf,
        /// `all` or a comma-separated list such as `MA1,MAO`.
        #[arg(long, default_value = "all")]
        axioms: String,
    },
    /// Build a chain of charts whose intersection is the given set.
    Realize {
        #[arg(long)]
        system: PathBuf,
        /// HalfSpaceSet JSON file.
        #[arg(long)]
        set: PathBuf,
        /// Write the model file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SystemPair {
    #[arg(long)]
    system: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Args, Debug)]
struct ChartPair {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

struct Session {
    inputs: Inputs,
    diagnostics: Vec<Diagnostic>,
}

impl Session {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        self.inputs.file(&text);
        Ok(text)
    }

    fn system(&mut self, path: &Path) -> Result<Apartment> {
        Ok(parse_system(&self.read(path)?)?)
    }

    fn model(&mut self, path: &Path) -> Result<GluedMasure> {
        Ok(build_complex(parse_model(&self.read(path)?)?)?)
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn q_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

fn bounds(g: &Global) -> Result<CatalogBounds> {
    Ok(CatalogBounds {
        half_width: parse_q(&g.half_width)?,
        step: parse_q(&g.step)?,
        chimney_half_width: parse_q(&g.chimney_box)?,
        window: g.window,
        cap: g.cap,
    })
}

fn run(cmd: &Command, g: &Global, cx: &mut Session) -> Result<Value> {
    match cmd {
        Command::Enclose { system, points } => {
            let ap = cx.system(system)?;
            let pts = parse::points(points, ap.dim())?;
            let window = ap.root_window(g.window);
            let e = enclosure_cl_sharp(&ap, &window, &EnclosureInput::Points(pts))?;
            Ok(to_json(&e.simplified(ap.dim())))
        }
        Command::Order(p) => {
            let ap = cx.system(&p.system)?;
            let (x, y) = (parse::vector(&p.x)?, parse::vector(&p.y)?);
            ap.system.check_dim(&x)?;
            ap.system.check_dim(&y)?;
            Ok(to_json(&order_summary(&ap.system, &x, &y)))
        }
        Command::Dv(p) => {
            let ap = cx.system(&p.system)?;
            let (x, y) = (parse::vector(&p.x)?, parse::vector(&p.y)?);
            ap.system.check_dim(&x)?;
            ap.system.check_dim(&y)?;
            let dv = vectorial_distance(&ap.system, &x, &y)?;
            Ok(json!({ "dv": format_vector(&dv) }))
        }
        Command::Retract { model, germ, point, to } => {
            let m = cx.model(model)?;
            let germ = parse::germ(germ)?;
            let p = parse::point(point)?;
            m.check_point(&p)?;
            let image = m.retraction(&germ, &p)?;
            let mut out = json!({ "germ": germ, "point": p.to_string(), "image": format_vector(&image) });
            if let Some(to) = to {
                let r = parse::point(to)?;
                m.check_point(&r)?;
                let (path, lambda) = m.retract_segment(&germ, &p, &r)?;
                out["path"] = to_json(&path);
                out["lambda"] = Value::String(format_vector(&lambda));
            }
            Ok(out)
        }
        Command::Intersect(c) => {
            let m = cx.model(&c.model)?;
            let inter = m.intersect_apartments(c.a, c.b)?;
            Ok(json!({ "region": inter.region.simplified(m.dim()), "weyl": inter.weyl }))
        }
        Command::Decompose(c) => {
            let m = cx.model(&c.model)?;
            Ok(to_json(&m.decompose_intersection(c.a, c.b)?))
        }
        Command::Distance { pair, germ } => {
            let m = cx.model(&pair.model)?;
            let germ = germ.as_deref().map(parse::germ).transpose()?;
            let d = m.apartment_distance(pair.a, pair.b, germ.as_ref())?;
            let gallery = m.gallery(pair.a, pair.b, germ.as_ref())?;
            Ok(json!({ "distance": d, "gallery": gallery }))
        }
        Command::Delta { model, point } => {
            let m = cx.model(model)?;
            let p = parse::point(point)?;
            m.check_point(&p)?;
            let d = DeltaFunctional::new(&m)?;
            Ok(json!({ "point": p.to_string(), "delta": q_json(&d.value(&p)?) }))
        }
        Command::Compare { model, p, q, certify } => {
            let m = cx.model(model)?;
            let (p, q) = (parse::point(p)?, parse::point(q)?);
            m.check_point(&p)?;
            m.check_point(&q)?;
            let d = DeltaFunctional::new(&m)?;
            let cmp = d.compare(&p, &q)?;
            let mut out = json!({
                "p": p.to_string(),
                "q": q.to_string(),
                "delta_p": q_json(&d.value(&p)?),
                "delta_q": q_json(&d.value(&q)?),
                "comparison": cmp,
            });
            if *certify {
                let cert = match cmp.relation {
                    Relation::OpenLess => Some(d.certify(&p, &q)?),
                    Relation::OpenGreater => Some(d.certify(&q, &p)?),
                    Relation::NC => None,
                };
                out["certificate"] = to_json(&cert);
            }
            Ok(out)
        }
        Command::Check { model, axioms } => {
            let m = cx.model(model)?;
            let suite = parse_suite(axioms)?;
            let report = check_axioms(&m, &suite, &bounds(g)?)?;
            for r in report.results.iter().filter(|r| !r.passed) {
                cx.diagnostics.push(Diagnostic {
                    severity: Severity::Violation,
                    code: r.axiom.name().to_string(),
                    witness: r.witness.clone().unwrap_or_default(),
                });
            }
            Ok(to_json(&report))
        }
        Command::Realize { system, set, out } => {
            let ap = cx.system(system)?;
            let text = cx.read(set)?;
            let p: HalfSpaceSet = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let (m, k) = realize_intersection(ap, &p)?;
            let json = model_to_json(m.spec());
            if let Some(path) = out {
                std::fs::write(path, json.clone() + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let model: Value = serde_json::from_str(&json)?;
            Ok(json!({ "far_chart": k, "charts": m.charts(), "model": model }))
        }
    }
}

fn parse_suite(s: &str) -> Result<Vec<Axiom>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Axiom::ALL.to_vec());
    }
    s.split(',').map(|a| Axiom::parse(a.trim()).ok_or_else(|| anyhow!("unknown axiom {a:?}"))).collect()
}

fn command_bounds(cmd: &Command, g: &Global) -> Value {
    match cmd {
        Command::Check { .. } => bounds(g).map(|b| to_json(&b)).unwrap_or(Value::Null),
        Command::Enclose { .. } => json!({ "window": g.window }),
        _ => json!({}),
    }
    .as_object()
    .map(|o| {
        let mut o = o.clone();
        o.insert("seed".into(), json!(g.seed));
        Value::Object(o)
    })
    .unwrap_or(Value::Null)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut cx = Session { inputs: Inputs::new(&args), diagnostics: Vec::new() };
    let results = match run(&cli.command, &cli.global, &mut cx) {
        Ok(v) => v,
        Err(e) => {
            let d = match e.downcast_ref::<Error>() {
                Some(core) => Diagnostic::from_error(core),
                None => Diagnostic { severity: Severity::Error, code: "Usage".into(), witness: format!("{e:#}") },
            };
            cx.diagnostics.push(d);
            Value::Null
        }
    };
    let report = Report {
        command: args,
        inputs_digest: cx.inputs.digest(),
        bounds: command_bounds(&cli.command, &cli.global),
        results,
        diagnostics: cx.diagnostics,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    ExitCode::from(report.exit_code())
}
