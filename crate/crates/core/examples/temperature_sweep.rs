//! A temperature sweep through the library, printed as the CLI's CSV.

use casimir_eft::audit::GridPoint;
use casimir_eft::cli::{sweep_rows, Settings, CSV_COLUMNS};
use casimir_eft::SignConvention;

fn main() {
    let n = 25;
    let grid: Vec<GridPoint> = (0..n)
        .map(|i| GridPoint {
            beta: 0.05 * 1000f64.powf(i as f64 / (n - 1) as f64),
            gap: 1.0,
            m: 1000.0,
            alpha: 1.0 / 137.036,
        })
        .collect();
    let rows = sweep_rows(&grid, &Settings::default(), SignConvention::AsPrinted);
    println!("{}", CSV_COLUMNS.join(","));
    for r in rows {
        println!("{}", r.csv_line());
    }
}
