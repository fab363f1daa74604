//! Builds the matrix of one creation operator on a small Fock space and
//! applies it to the vacuum.

use parastat::fockmodule::{apply, matrix, FockBasis, GeneratorLabel, LinearCombination, Variant};
use parastat::gzbasis::{GzPattern, Signature};

fn main() -> parastat::Result<()> {
    let sig = Signature::new(1, 1, 2, 3)?;
    let basis = FockBasis::new(sig);
    let gen = GeneratorLabel::parse("b1+", Variant::Pso)?;

    let mat = matrix(&gen, &basis)?;
    println!(
        "{gen}: {} nonzero entries on {} vectors",
        mat.nnz(),
        basis.len()
    );

    let mut v = LinearCombination::basis_vector(GzPattern::vacuum(sig.m, sig.n));
    for step in 1..=3 {
        v = apply(&gen, &v, &sig)?;
        println!("({gen})^{step} |0> =");
        for (pat, c) in v.terms() {
            println!("  {c}  {pat}");
        }
    }
    Ok(())
}
