//! Instances produced by each hardness construction, with provenance.

use kinfluence::graph::named;
use kinfluence::propagation::propagate;
use kinfluence::reductions::{
    basic_reduction, clique_reduction, constant_threshold_instance, dks_reduction,
    majority_hardness_instance, Label,
};

fn main() -> kinfluence::error::Result<()> {
    let g5 = named::g5();
    let outputs = [
        ("basic", basic_reduction(&g5)?),
        ("majority L=1", majority_hardness_instance(&g5, 2, 1)?),
        (
            "constant P=1 Q=2",
            constant_threshold_instance(&g5, 2, 1, 2)?,
        ),
        ("clique k=3", clique_reduction(&g5, 3)?),
        ("dks k=2", dks_reduction(&g5, 2)?),
    ];
    for (name, out) in &outputs {
        let g = &out.instance.graph;
        println!(
            "{name}\tn\t{}\tm\t{}\tscheme\t{}",
            g.n(),
            g.m(),
            out.instance.thresholds.scheme()
        );
    }
    let majority = &outputs[1].1;
    let seeds = majority.forward_map(&[1, 3])?;
    let tr = propagate(
        &majority.instance.graph,
        &majority.instance.thresholds,
        &seeds,
    );
    let grid = majority.vertices_labeled(|l| matches!(l, Label::Grid(..)));
    let reached = grid
        .iter()
        .filter(|v| tr.final_closed.binary_search(v).is_ok())
        .count();
    println!(
        "majority seeds\t{:?}\tgrid reached\t{reached}/{}",
        seeds.as_slice(),
        grid.len()
    );
    print!("{}", outputs[0].1.provenance_text());
    Ok(())
}
