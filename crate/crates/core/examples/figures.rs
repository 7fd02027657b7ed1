//! Writes every figure table into a directory (default `figures/`).

use std::path::PathBuf;

use rotation_sums::harness::{emit_figure, Figure};

fn main() -> rotation_sums::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).map_err(|source| rotation_sums::Error::Io { path: dir.clone(), source })?;
    for fig in Figure::ALL {
        let den_max = match fig {
            Figure::F3a | Figure::F3b => 600,
            _ => 150,
        };
        let path = dir.join(format!("{fig}.csv"));
        let rows = emit_figure(fig, den_max, &path)?;
        println!("{fig}: {rows} rows -> {}", path.display());
    }
    Ok(())
}
