//! A reduced verification run through the library entry point.

use repring_a4::report::{run, CheckGroup, Format, RunConfig};

fn main() -> repring_a4::Result<()> {
    let config = RunConfig {
        checks: vec![CheckGroup::Lemma2, CheckGroup::Lemma6, CheckGroup::Theorem, CheckGroup::Audit],
        table_n: 1,
        format: Format::Text,
        ..Default::default()
    };
    let report = run(&config)?;
    print!("{}", report.render());
    println!("exit code {}", report.exit_code());
    Ok(())
}
