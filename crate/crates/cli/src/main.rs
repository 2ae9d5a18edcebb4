//! `convex-order`: batch front end over the convex-order library.
//!
//! Every subcommand prints one JSON result document (or SVG for `render`).
//! Exit codes: 0 computed, 1 a verified property does not hold, 2 invalid
//! input, 3 size or budget limit.

mod document;
mod render;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use convex_order::convex_position::{
    bound_lemma1, bound_m, bound_pach_toth, canonical_order, dichotomy, exists_consistent_order,
    in_convex_position_direct, largest_convex_subfamily, ConvexPositionCertificate,
    DichotomyOutcome,
};
use convex_order::famgen::{fixture, generate_detailed, GenKind, GenSpec};
use convex_order::geom::hull_of_bodies;
use convex_order::order_type::{
    chirotope, gp3_violation, search_representation, verify_representation, RepresentationSearch,
};
use convex_order::predicates::{
    best_transversal, check_assumptions, is_disconnectable, is_general_position,
    is_pairwise_disjoint, is_pairwise_noncrossing, orientations, TransversalCertificate, Violation,
};
use convex_order::{Error, Family, Line, Sign};
use num::BigInt;
use serde_json::{json, Value};

use document::{
    big_value, parse_scalar_str, read_family, read_input, FamilyDocument, SpecDocument,
};

#[derive(Parser)]
#[command(
    name = "convex-order",
    version,
    about = "Exact predicates for families of planar convex bodies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Configuration assumptions, noncrossing, disjointness and general position.
    Check { family: String },
    /// Orientations of an ordered triple of bodies, given by id.
    Orient {
        family: String,
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], required = true)]
        triple: Vec<String>,
    },
    /// Direct convex-position test plus an ordering certificate.
    ConvexPosition {
        family: String,
        /// Check this ordering of body ids instead of searching.
        #[arg(long, num_args = 1..)]
        verify: Option<Vec<String>>,
    },
    /// Order of first appearance along the hull boundary.
    Order {
        family: String,
        /// `+` for counterclockwise traversal, `-` for clockwise.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        convention: String,
    },
    /// Largest subfamily in convex position.
    Subfamily { family: String },
    /// A line meeting as many bodies as possible.
    Transversal {
        family: String,
        /// Report "none" unless at least this many bodies are met.
        #[arg(long)]
        min: Option<usize>,
        /// Check the line `a x + b y = c` instead of searching.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true)]
        verify_line: Option<Vec<String>>,
    },
    /// A transversal of `t` bodies or `n` bodies in convex position.
    Dichotomy {
        family: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Sign table of a family whose triples are uniquely oriented.
    Chirotope { family: String },
    /// Search for, or verify, a point set representing the family.
    Represent {
        family: String,
        /// Points document to verify instead of searching.
        #[arg(long)]
        verify: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Closed-form size bounds.
    Bounds {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, requires = "l")]
        k: Option<u64>,
        #[arg(long, requires = "k")]
        l: Option<u64>,
    },
    /// Generate a family document from a spec file, flags, or a fixture name.
    Gen {
        #[arg(long, conflicts_with_all = ["fixture", "kind", "count"])]
        spec: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long)]
        scale: Option<i64>,
        #[arg(long)]
        aspect: Option<i64>,
        /// Write here instead of standard output.
        #[arg(long, short)]
        out: Option<String>,
    },
    /// Draw the family, its hull and boundary word as SVG.
    Render {
        family: String,
        /// Label bodies with their position in this ordering of ids.
        #[arg(long, num_args = 1..)]
        ordering: Option<Vec<String>>,
        /// Draw the line `a x + b y = c`.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true)]
        line: Option<Vec<String>>,
        #[arg(long, short)]
        out: Option<String>,
    },
}

/// A computed result and whether the property it reports holds.
struct Outcome {
    doc: Value,
    holds: bool,
}

impl Outcome {
    fn computed(doc: Value) -> Outcome {
        Outcome { doc, holds: true }
    }
}

fn ids(f: &Family, members: &[usize]) -> Vec<String> {
    f.ids(members)
}

fn indices(f: &Family, ids: &[String]) -> Result<Vec<usize>> {
    Ok(ids
        .iter()
        .map(|id| f.index_of(id))
        .collect::<convex_order::Result<_>>()?)
}

fn line_value(line: &Line) -> Value {
    let (a, b, c) = line.coefficients();
    json!({ "a": big_value(a), "b": big_value(b), "c": big_value(c) })
}

fn parse_line(parts: &[String]) -> Result<Line> {
    let mut v = Vec::new();
    for p in parts {
        let s = parse_scalar_str(p)?;
        v.push(s);
    }
    // clear denominators so the coefficients are integers
    let den = v.iter().fold(BigInt::from(1), |acc, s| {
        num::integer::lcm(acc, s.denom().clone())
    });
    let den = convex_order::Scalar::from_integer(den);
    let ints: Vec<BigInt> = v.iter().map(|s| (s * &den).to_integer()).collect();
    Line::from_coefficients(ints[0].clone(), ints[1].clone(), ints[2].clone())
        .ok_or_else(|| anyhow!("a line needs a nonzero normal (a, b)"))
}

fn transversal_value(f: &Family, cert: &TransversalCertificate) -> Value {
    json!({ "line": line_value(&cert.line), "members": ids(f, &cert.members) })
}

fn ordering_value(f: &Family, cert: &ConvexPositionCertificate) -> Value {
    json!({ "ordering": ids(f, &cert.ordering) })
}

fn violation_value(f: &Family, v: &Violation) -> Value {
    match v {
        Violation::Tangency { a, b } => json!({ "tangent": [f.id(*a), f.id(*b)] }),
        Violation::CommonTangent { bodies, line } => json!({
            "common_tangent": ids(f, bodies),
            "line": line_value(line),
        }),
    }
}

fn check(f: &Family) -> Outcome {
    let violations = check_assumptions(f);
    let noncrossing = match is_pairwise_noncrossing(f) {
        Ok(b) => json!(b),
        Err(e) => json!({ "undecided": e.to_string() }),
    };
    let word = match hull_of_bodies(f.bodies()) {
        Ok(h) => json!(ids(f, &h.word)),
        Err(e) => json!({ "undefined": e.to_string() }),
    };
    let general = is_general_position(f);
    Outcome::computed(json!({
        "assumptions": { "ok": violations.is_empty(), "violations": violations.iter().map(|v| violation_value(f, v)).collect::<Vec<_>>() },
        "pairwise_noncrossing": noncrossing,
        "pairwise_disjoint": is_pairwise_disjoint(f),
        "general_position": general,
        "disconnectable": is_disconnectable(f),
        "boundary_word": word,
    }))
}

fn run(cli: Cli) -> Result<Outcome> {
    Ok(match cli.command {
        Command::Check { family } => check(&read_family(&family)?),
        Command::Orient { family, triple } => {
            let f = read_family(&family)?;
            let t = indices(&f, &triple)?;
            let set = orientations(&f[t[0]], &f[t[1]], &f[t[2]])?;
            let signs: Vec<&str> = set.signs().iter().map(|s| s.symbol()).collect();
            Outcome::computed(json!({ "triple": triple, "orientations": signs }))
        }
        Command::ConvexPosition { family, verify } => {
            let f = read_family(&family)?;
            match verify {
                Some(order) => {
                    let cert = ConvexPositionCertificate {
                        ordering: indices(&f, &order)?,
                    };
                    let ok = cert.verify(&f)?;
                    Outcome {
                        doc: json!({ "ordering": order, "valid": ok }),
                        holds: ok,
                    }
                }
                None => {
                    let direct = in_convex_position_direct(&f);
                    let cert = exists_consistent_order(&f)?;
                    Outcome::computed(json!({
                        "convex_position": direct,
                        "certificate": cert.as_ref().map(|c| ordering_value(&f, c)),
                    }))
                }
            }
        }
        Command::Order { family, convention } => {
            let f = read_family(&family)?;
            let sign = match convention.as_str() {
                "+" => Sign::Positive,
                "-" | "\u{2212}" => Sign::Negative,
                other => bail!("convention must be + or -, not `{other}`"),
            };
            let order = canonical_order(&f, sign)?;
            Outcome::computed(json!({ "convention": sign.symbol(), "ordering": ids(&f, &order) }))
        }
        Command::Subfamily { family } => {
            let f = read_family(&family)?;
            let best = largest_convex_subfamily(&f)?;
            Outcome::computed(json!({
                "size": best.members.len(),
                "members": ids(&f, &best.members),
                "certificate": ordering_value(&f, &best.certificate),
            }))
        }
        Command::Transversal {
            family,
            min,
            verify_line,
        } => {
            let f = read_family(&family)?;
            if let Some(parts) = verify_line {
                let line = parse_line(&parts)?;
                let members: Vec<usize> = (0..f.len()).filter(|&i| line.meets(&f[i])).collect();
                let ok = members.len() >= min.unwrap_or(f.len());
                return Ok(Outcome {
                    doc: json!({ "line": line_value(&line), "members": ids(&f, &members), "valid": ok }),
                    holds: ok,
                });
            }
            let best = best_transversal(&f).filter(|c| c.members.len() >= min.unwrap_or(1));
            Outcome::computed(json!({
                "transversal": match &best {
                    Some(c) => transversal_value(&f, c),
                    None => json!("none"),
                }
            }))
        }
        Command::Dichotomy { family, t, n } => {
            let f = read_family(&family)?;
            match dichotomy(&f, t, n) {
                Ok(DichotomyOutcome::Transversal(c)) => Outcome::computed(json!({
                    "branch": "transversal",
                    "transversal": transversal_value(&f, &c),
                })),
                Ok(DichotomyOutcome::Convex {
                    members,
                    certificate,
                }) => Outcome::computed(json!({
                    "branch": "convex",
                    "members": ids(&f, &members),
                    "certificate": ordering_value(&f, &certificate),
                })),
                Err(Error::NoOutcome { .. }) => Outcome {
                    doc: json!({ "branch": null, "diagnostics": [format!("no transversal of {t} and no {n} bodies in convex position")] }),
                    holds: false,
                },
                Err(e) => return Err(e.into()),
            }
        }
        Command::Chirotope { family } => {
            let f = read_family(&family)?;
            let chi = chirotope(&f)?;
            let signs: Vec<Value> = chi
                .increasing_signs()
                .into_iter()
                .map(|(t, s)| json!({ "triple": ids(&f, &t), "sign": s.symbol() }))
                .collect();
            let violation = gp3_violation(&chi);
            Outcome::computed(json!({
                "ground": chi.ground(),
                "signs": signs,
                "gp3": violation.is_none(),
                "gp3_violation": violation.map(|v| ids(&f, &v)),
            }))
        }
        Command::Represent {
            family,
            verify,
            seed,
            budget,
        } => {
            let f = read_family(&family)?;
            if let Some(path) = verify {
                let (points, bijection) = document::read_points(&path, &f)?;
                let ok = verify_representation(&f, &points, &bijection)?;
                return Ok(Outcome {
                    doc: json!({ "valid": ok }),
                    holds: ok,
                });
            }
            match search_representation(&f, budget, seed)? {
                RepresentationSearch::Found(cert) => Outcome::computed(json!({
                    "found": true,
                    "certificate": document::points_document(&f, &cert.points, &cert.bijection),
                })),
                RepresentationSearch::Exhausted => Outcome {
                    doc: json!({ "found": false, "diagnostics": ["the complete grid search found no representation"] }),
                    holds: false,
                },
                RepresentationSearch::BudgetSpent => {
                    return Err(Error::GenerationBudget {
                        attempts: budget as usize,
                        what: "representation search".into(),
                    }
                    .into())
                }
            }
        }
        Command::Bounds { n, k, l } => {
            let mut doc = serde_json::Map::new();
            if n.is_none() && k.is_none() {
                bail!("give --n, or --k and --l");
            }
            if let Some(n) = n {
                doc.insert("pach_toth".into(), big_value(&bound_pach_toth(n)?));
                doc.insert("m_bound".into(), big_value(&bound_m(n)?));
            }
            if let (Some(k), Some(l)) = (k, l) {
                doc.insert("lemma1".into(), big_value(&bound_lemma1(k, l)?));
            }
            Outcome::computed(Value::Object(doc))
        }
        Command::Gen {
            spec,
            fixture: name,
            kind,
            count,
            seed,
            vertices,
            scale,
            aspect,
            out,
        } => {
            let (family, witness) = match (name, spec) {
                (Some(name), _) => (fixture(&name)?, None),
                (None, Some(path)) => {
                    let doc: SpecDocument = serde_json::from_str(&read_input(&path)?)
                        .with_context(|| format!("parsing spec {path}"))?;
                    let g = generate_detailed(&doc.into_spec()?)?;
                    (g.family, g.witness)
                }
                (None, None) => {
                    let kind = GenKind::from_name(kind.as_deref().unwrap_or("disjoint-random"))?;
                    let mut spec = GenSpec::new(seed.unwrap_or(0), count.unwrap_or(5), kind);
                    spec.vertices = vertices.unwrap_or(spec.vertices);
                    spec.scale = scale.unwrap_or(spec.scale);
                    spec.aspect = aspect.unwrap_or(spec.aspect);
                    let g = generate_detailed(&spec)?;
                    (g.family, g.witness)
                }
            };
            let mut doc = serde_json::to_value(FamilyDocument::from_family(&family))?;
            if let Some(line) = witness {
                doc["witness"] = line_value(&line);
            }
            write_output(
                out.as_deref(),
                &(serde_json::to_string_pretty(&doc)? + "\n"),
            )?;
            return Ok(Outcome {
                doc: Value::Null,
                holds: true,
            });
        }
        Command::Render {
            family,
            ordering,
            line,
            out,
        } => {
            let f = read_family(&family)?;
            let overlay = render::Overlay {
                line: line.as_deref().map(parse_line).transpose()?,
                ordering: ordering.as_deref().map(|o| indices(&f, o)).transpose()?,
            };
            write_output(out.as_deref(), &render::render(&f, &overlay))?;
            return Ok(Outcome {
                doc: Value::Null,
                holds: true,
            });
        }
    })
}

fn write_output(path: Option<&str>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {p}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::SizeLimit { .. }) | Some(Error::GenerationBudget { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().nth(1).unwrap_or_default();
    match run(cli) {
        Ok(Outcome {
            doc: Value::Null, ..
        }) => ExitCode::SUCCESS,
        Ok(Outcome { mut doc, holds }) => {
            if let Value::Object(map) = &mut doc {
                map.insert("command".into(), json!(command));
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(err) => {
            let code = exit_code(&err);
            let doc = json!({
                "command": command,
                "error": format!("{err:#}"),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
            ExitCode::from(code)
        }
    }
}
