//! The `.gc` script language: the bundled scripts, run through the
//! embedded interpreter. The same files run from the command line with
//! `gcb run <file>`.
//!
//! ```bash
//! cargo run -p gcbrackets --example scripting
//! ```

use gcbrackets::script::{run_script, Environment};

fn main() {
    for (name, source) in [
        ("pluecker.gc", include_str!("scripts/pluecker.gc")),
        ("desargues.gc", include_str!("scripts/desargues.gc")),
        ("transversals.gc", include_str!("scripts/transversals.gc")),
    ] {
        println!("=== {name}");
        let mut env = Environment::new();
        for entry in run_script(source, &mut env).unwrap() {
            println!("> {}", entry.statement);
            println!("{}", entry.rendered);
        }
        println!();
    }
}
