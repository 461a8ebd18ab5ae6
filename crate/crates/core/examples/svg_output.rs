//! Writes SVG cell diagrams and an Ext chart to a directory (default: the
//! system temp dir).

use std::path::PathBuf;

use a1kit::cli::load_module;
use a1kit::cli::render::{svg_cells, svg_chart};
use a1kit::resolutions::{ext_chart, minimal_resolution};

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    for (file, r) in [("a1.svg", "A1"), ("ku.svg", "A1/(Sq1,Sq3)"), ("joker.svg", "crates/core/data/joker.a1m")] {
        let Ok(m) = load_module(r) else {
            eprintln!("skipping {r}");
            continue;
        };
        let path = dir.join(file);
        std::fs::write(&path, svg_cells(&m)).unwrap();
        println!("wrote {}", path.display());
    }
    let chart = ext_chart(&minimal_resolution(&load_module("F2").unwrap(), 8, 24));
    let path = dir.join("ko_chart.svg");
    std::fs::write(&path, svg_chart(&chart)).unwrap();
    println!("wrote {}", path.display());
}
