//! Regenerates the embedded small-groups generator table.
//!
//! Usage: `cargo run -p cvt-cli --bin gen-smallgroups [-- PATH]`
//! Writes to crates/cli/assets/small_groups.txt by default.

use cvt_cli::families;

fn main() -> anyhow::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/cli/assets/small_groups.txt".to_string());
    let text = families::catalogue_text(120);
    std::fs::write(&path, &text)?;
    eprintln!(
        "wrote {} groups to {path}",
        text.lines().filter(|l| l.starts_with("group ")).count()
    );
    Ok(())
}
