//! Text instance format: parse, inspect and write back.

use kinfluence::format::{parse_instance, serialize_instance};
use kinfluence::graph::named;
use kinfluence::threshold::Instance;

const TEXT: &str = "\
c k 2
c ell 2
c scheme unanimity
p influence 4 4
t 0 2
t 1 2
t 2 2
t 3 2
e 0 1
e 1 2
e 2 3
e 0 3
";

fn main() -> kinfluence::error::Result<()> {
    let inst = parse_instance(TEXT)?;
    println!(
        "n\t{}\tm\t{}\tk\t{}\tell\t{:?}",
        inst.graph.n(),
        inst.graph.m(),
        inst.k,
        inst.ell
    );
    print!("{}", serialize_instance(&inst));
    let star = Instance::majority(named::star(3), 1)?.with_ell(3);
    print!("{}", serialize_instance(&star));
    match parse_instance("p influence 2 1\nt 0 1\nt 1 1\ne 0 0\n") {
        Err(e) => println!("rejected\t{e}"),
        Ok(_) => println!("accepted"),
    }
    Ok(())
}
