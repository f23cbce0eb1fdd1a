//! Builds the method-comparison tables and writes them as CSV to the
//! directory given on the command line (default: the system temp dir).

use std::path::PathBuf;

use wellbound::analysis::{error_summary, figure1_data, figure2_data, figure2_default_grid, figure3_data};
use wellbound::cli::table::{critical_records, emit_table, energy_records, OutputFormat};
use wellbound::{Method, SolverConfig};

fn main() -> wellbound::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let cfg = SolverConfig::default();
    let methods = [Method::Koksal, Method::Variational, Method::Reference];

    let by_l = figure1_data(10, 200.0, &cfg)?;
    let by_xi = figure2_data(&figure2_default_grid(), &cfg)?;
    let thresholds = figure3_data(10, &cfg)?;

    for (name, data) in [("by_l", &by_l), ("by_xi", &by_xi)] {
        let s = error_summary(&data.rows)?;
        let (k, v) = (s.koksal.unwrap(), s.variational.unwrap());
        println!(
            "{name}: mean |error| koksal {:.4}, variational {:.4}",
            k.mean_abs, v.mean_abs
        );
        let path = dir.join(format!("gaussian_{name}.csv"));
        emit_table(&energy_records(&data.rows, &methods), OutputFormat::Csv, &path)?;
        println!("  wrote {}", path.display());
    }
    let path = dir.join("gaussian_thresholds.csv");
    emit_table(&critical_records(&thresholds.rows, &methods), OutputFormat::Csv, &path)?;
    println!("thresholds: wrote {}", path.display());
    Ok(())
}
