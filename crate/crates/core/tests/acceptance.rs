//! Runs the desk acceptance grid and prints one PASS/FAIL line per criterion.

use std::time::Instant;

use mdc_core::genus_one::NonemptyCriterion;
use mdc_core::verify::{self, CriterionReport, DeskConfig};

fn main() {
    let cfg = DeskConfig::default();
    let start = Instant::now();
    let grid = verify::build_grid(NonemptyCriterion::Dmin).expect("grid builds");
    println!("acceptance: built 11 instances in {:.2}s", start.elapsed().as_secs_f64());
    let checks: Vec<Box<dyn Fn() -> CriterionReport + '_>> = vec![
        Box::new(|| verify::criterion_1(&grid)),
        Box::new(|| verify::criterion_2(&grid)),
        Box::new(|| verify::criterion_3(&grid)),
        Box::new(|| verify::criterion_4(&grid)),
        Box::new(|| verify::criterion_5(&grid, &cfg)),
        Box::new(|| verify::criterion_6(&grid, &cfg)),
        Box::new(|| verify::criterion_7(&grid)),
        Box::new(|| verify::criterion_8(&cfg)),
        Box::new(|| verify::criterion_9(&grid)),
    ];
    let mut failed = Vec::new();
    for check in checks {
        let t = Instant::now();
        let report = check();
        println!("{} [{:.1}s]", report.line(), t.elapsed().as_secs_f64());
        if !report.passed {
            failed.push(report.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed in {:.1}s", start.elapsed().as_secs_f64());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
