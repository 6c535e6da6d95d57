//! Driving the command layer in-process, as the `metabelian` binary does.

use metabelian::cli::{run, Command, CommandKind, OutputFormat};

fn main() {
    let commands = [
        CommandKind::GerritzenTable,
        CommandKind::Normalize { expr: "[y1,y2,y1] + [y2,y1,y1]".into() },
        CommandKind::Bch { left: "y1".into(), right: "y2".into() },
        CommandKind::IsInner { psi: r#"{"y2":"y2 + [y2,y1]"}"#.into() },
        CommandKind::Normalize { expr: "[y1,".into() },
    ];
    for kind in commands {
        let out = run(&Command { rank: 2, class: 4, output: OutputFormat::Text, kind: kind.clone() });
        println!("{kind:?} -> exit {}", out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
