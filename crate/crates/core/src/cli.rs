//! Command execution for the `metabelian` binary.
//!
//! Commands take raw strings and parse them against the configured algebra, so
//! parse failures surface with their own exit code. Element-valued results
//! print as a bare expression in text mode; matrices, endomorphisms and
//! reduction traces print as compact JSON in text mode and pretty JSON in JSON
//! mode.

use serde_json::{json, Value};

use crate::aut::{exp_ad, inner_jacobian, IAEndomorphism};
use crate::bch::{bch_compose, gerritzen_c};
use crate::canonical::{is_inner, reduce, same_coset};
use crate::envelope::rep_bch;
use crate::error::{Error, Result};
use crate::expr::{parse_endomorphism, parse_lie};
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::{fmt_rational, TruncPoly};
use crate::wreath::{embed, partials};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Normalize { expr: String },
    Bracket { left: String, right: String },
    Embed { expr: String },
    Partials { expr: String },
    Jacobian { phi: String },
    ExpAd { expr: String },
    InnerJacobian { expr: String },
    Bch { left: String, right: String },
    GerritzenTable,
    Compose { phi: String, psi: String },
    Inverse { phi: String },
    Reduce { psi: String },
    IsInner { psi: String },
    SameCoset { psi1: String, psi2: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub rank: usize,
    pub class: u32,
    pub output: OutputFormat,
    pub kind: CommandKind,
}

/// Rendered output and process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Rendered {
    Element(LieElement),
    Structured(Value),
    Lines(Vec<String>, Value),
}

pub fn run(cmd: &Command) -> Outcome {
    match execute(cmd) {
        Ok(rendered) => Outcome {
            stdout: format_output(rendered, cmd.output),
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn format_output(rendered: Rendered, output: OutputFormat) -> String {
    let mut s = match (rendered, output) {
        (Rendered::Element(u), OutputFormat::Text) => u.render(),
        (Rendered::Element(u), OutputFormat::Json) => {
            serde_json::to_string_pretty(&json!({ "element": u.render() })).unwrap()
        }
        (Rendered::Structured(v), OutputFormat::Text) => v.to_string(),
        (Rendered::Structured(v), OutputFormat::Json) => serde_json::to_string_pretty(&v).unwrap(),
        (Rendered::Lines(lines, _), OutputFormat::Text) => lines.join("\n"),
        (Rendered::Lines(_, v), OutputFormat::Json) => serde_json::to_string_pretty(&v).unwrap(),
    };
    s.push('\n');
    s
}

fn strings(polys: &[TruncPoly]) -> Vec<String> {
    polys.iter().map(TruncPoly::to_string).collect()
}

fn execute(cmd: &Command) -> Result<Rendered> {
    let cfg = AlgebraConfig::new(cmd.rank, cmd.class)?;
    let lie = |s: &str| parse_lie(s, cfg);
    let endo = |s: &str| parse_endomorphism(s, cfg);
    Ok(match &cmd.kind {
        CommandKind::Normalize { expr } => Rendered::Element(lie(expr)?),
        CommandKind::Bracket { left, right } => Rendered::Element(lie(left)?.bracket(&lie(right)?)?),
        CommandKind::Embed { expr } => {
            let w = embed(&lie(expr)?);
            let b: Vec<String> = w.b_coords().iter().map(fmt_rational).collect();
            let a = strings(w.a_coords());
            let mut lines = vec![format!("b: ({})", b.join(", "))];
            lines.extend(a.iter().enumerate().map(|(i, s)| format!("a{}: {s}", i + 1)));
            Rendered::Lines(lines, json!({ "b": b, "a": a }))
        }
        CommandKind::Partials { expr } => {
            let d = strings(&partials(&lie(expr)?));
            let lines = d
                .iter()
                .enumerate()
                .map(|(i, s)| format!("d/dy{}: {s}", i + 1))
                .collect();
            Rendered::Lines(lines, json!(d))
        }
        CommandKind::Jacobian { phi } => Rendered::Structured(endo(phi)?.jacobian().to_json()),
        CommandKind::ExpAd { expr } => Rendered::Structured(exp_ad(&lie(expr)?).expansion.to_json()),
        CommandKind::InnerJacobian { expr } => Rendered::Structured(inner_jacobian(&lie(expr)?).to_json()),
        CommandKind::Bch { left, right } => {
            let (u, v) = (lie(left)?, lie(right)?);
            let w = bch_compose(&u, &v)?;
            if rep_bch(&u, &v)? != w {
                return Err(Error::Internal(
                    "closed-form BCH disagrees with the envelope oracle".into(),
                ));
            }
            Rendered::Element(w)
        }
        CommandKind::GerritzenTable => {
            let c = gerritzen_c(cfg.quad_cap())?;
            let names = vec!["t1".to_string(), "t2".to_string()];
            let mut lines = Vec::new();
            let mut map = serde_json::Map::new();
            for (mono, coeff) in c.series.terms() {
                let one = TruncPoly::one(2, 0);
                let key = if mono.is_one() {
                    one.to_string()
                } else {
                    let mut single = TruncPoly::zero(2, mono.degree());
                    single.add_term(mono.clone(), num_traits::One::one());
                    single.render_with(&names)
                };
                lines.push(format!("{key}: {}", fmt_rational(coeff)));
                map.insert(key, Value::String(fmt_rational(coeff)));
            }
            Rendered::Lines(lines, json!({ "cap": c.cap, "coefficients": map }))
        }
        CommandKind::Compose { phi, psi } => Rendered::Structured(endo(phi)?.compose(&endo(psi)?)?.to_json()),
        CommandKind::Inverse { phi } => Rendered::Structured(endo(phi)?.inverse()?.to_json()),
        CommandKind::Reduce { psi } => Rendered::Structured(reduce(&endo(psi)?)?.to_json()),
        CommandKind::IsInner { psi } => {
            let psi: IAEndomorphism = endo(psi)?;
            Rendered::Structured(match is_inner(&psi)? {
                Some(v) => json!({ "inner": true, "generator": v.render() }),
                None => json!({ "inner": false }),
            })
        }
        CommandKind::SameCoset { psi1, psi2 } => {
            Rendered::Structured(json!({ "same_coset": same_coset(&endo(psi1)?, &endo(psi2)?)? }))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cmd(rank: usize, class: u32, kind: CommandKind) -> Command {
        Command {
            rank,
            class,
            output: OutputFormat::Text,
            kind,
        }
    }

    #[test]
    fn gerritzen_table_rows() {
        let out = run(&cmd(2, 4, CommandKind::GerritzenTable));
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[..4], ["1: 1/2", "t1: -1/12", "t2: 1/12", "t1*t2: -1/24"]);
    }

    #[test]
    fn identity_jacobian() {
        let out = run(&cmd(2, 3, CommandKind::Jacobian { phi: "identity".into() }));
        assert_eq!(out.stdout.trim(), r#"[["1","0"],["0","1"]]"#);
    }

    #[test]
    fn exit_codes() {
        let parse = run(&cmd(2, 3, CommandKind::Normalize { expr: "[y1".into() }));
        assert_eq!(parse.code, 1);
        let domain = run(&cmd(
            2,
            3,
            CommandKind::Inverse {
                phi: r#"[["1 + t1","0"],["0","1"]]"#.into(),
            },
        ));
        assert_eq!(domain.code, 2);
        let config = run(&cmd(1, 3, CommandKind::GerritzenTable));
        assert_eq!(config.code, 1);
    }
}
