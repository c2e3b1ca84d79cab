//! Benchmark complete 4-ary trees and print the CSV report.

use lowply::bench::{run_bench, to_csv, BenchConfig, Family};

fn main() {
    let cfg = BenchConfig { family: Family::Kary, k: 4, max_h: 4, ..Default::default() };
    let rows = run_bench(&cfg).unwrap();
    print!("{}", to_csv(&rows));
    if rows.iter().any(|r| !r.ok) {
        std::process::exit(4);
    }
}
