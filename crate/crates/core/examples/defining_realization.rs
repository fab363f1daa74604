//! The finite-dimensional defining matrices of pso(2m+1|2n) and their relations.

use parastat::fockmodule::{GeneratorLabel, Variant};
use parastat::matrixrep::{dimension, generator, verify_defining_relations};

fn main() -> parastat::Result<()> {
    let (m, n) = (1, 1);
    println!("dimension {}", dimension(m, n));
    let fp = generator(&GeneratorLabel::f(1, 1, Variant::Pso), m, n)?;
    println!("f1+ =\n{fp}");
    for (m, n) in [(1, 1), (2, 1), (1, 3)] {
        println!("{}", verify_defining_relations(m, n)?.summary());
    }
    Ok(())
}
