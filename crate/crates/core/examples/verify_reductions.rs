//! Source and target oracles side by side, with and without a fault.

use kinfluence::graph::named;
use kinfluence::oracles::SearchConfig;
use kinfluence::reductions::{verify_reduction, Fault, ReductionKind, VerifyParams};

fn main() -> kinfluence::error::Result<()> {
    let cfg = SearchConfig::default();
    let g5 = named::g5();
    for kind in [
        ReductionKind::Basic,
        ReductionKind::Clique,
        ReductionKind::Dks,
    ] {
        print!(
            "{}",
            verify_reduction(kind, &g5, VerifyParams::new(2), &cfg)?.render()
        );
    }
    let mut faulty = VerifyParams::new(2);
    faulty.fault = Some(Fault {
        vertex: 5,
        threshold: 3,
    });
    print!(
        "{}",
        verify_reduction(ReductionKind::Basic, &g5, faulty, &cfg)?.render()
    );
    Ok(())
}
