//! Gnuplot scripts that redraw a figure table.

use crate::model::Method;

struct Series {
    method: Method,
    style: &'static str,
    title: &'static str,
}

const ENERGY_SERIES: [Series; 3] = [
    Series {
        method: Method::Koksal,
        style: "points pt 5 lc rgb 'red'",
        title: "Koksal",
    },
    Series {
        method: Method::Variational,
        style: "points pt 7 lc rgb 'blue'",
        title: "variational",
    },
    Series {
        method: Method::Reference,
        style: "lines lw 2 lc rgb 'black'",
        title: "reference",
    },
];

/// Script for figure `id` reading the CSV at `csv_path`.
///
/// Columns follow the table layouts: figures 1-2 use
/// `potential,xi,n,l,method,energy,...`, figures 3-4
/// `potential,n,l,method,xi_crit,...`.
pub fn gnuplot_script(id: u8, csv_path: &str) -> String {
    let (x_col, y_col, method_col, xlabel, ylabel) = match id {
        1 => (4, 6, 5, "l", "E'_{0l}"),
        2 => (2, 6, 5, "xi", "E'_{00}"),
        _ => (3, 5, 4, "l", "xi_{0l}"),
    };
    let mut s = String::new();
    s.push_str(&format!("# figure {id}\n"));
    s.push_str("set datafile separator ','\n");
    s.push_str("set datafile commentschars '#'\n");
    s.push_str(&format!("set xlabel '{xlabel}'\nset ylabel '{ylabel}'\n"));
    s.push_str("set key left top\n");
    let series: Vec<&Series> = ENERGY_SERIES
        .iter()
        .filter(|series| id != 4 || series.method != Method::Koksal)
        .collect();
    let clauses: Vec<String> = series
        .iter()
        .map(|series| {
            format!(
                "'{csv_path}' every ::1 using {x_col}:(strcol({method_col}) eq '{}' ? ${y_col} : 1/0) with {} title '{}'",
                series.method.name(),
                series.style,
                series.title
            )
        })
        .collect();
    s.push_str("plot ");
    s.push_str(&clauses.join(", \\\n     "));
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yukawa_figure_has_no_empirical_series() {
        assert!(!gnuplot_script(4, "f.csv").contains("koksal"));
        let s = gnuplot_script(1, "f.csv");
        assert!(s.contains("'koksal'") && s.contains("'variational'") && s.contains("'reference'"));
        assert!(s.contains("lc rgb 'red'"));
    }
}
