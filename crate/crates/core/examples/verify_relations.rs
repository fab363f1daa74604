//! Checks the triple relations, vacuum and adjointness conditions for both
//! gradings on one signature.

use parastat::fockmodule::{check_adjointness, check_vacuum, verify_relations, FockBasis, Variant};
use parastat::gzbasis::Signature;

fn main() -> parastat::Result<()> {
    let basis = FockBasis::new(Signature::new(2, 1, 1, 5)?);
    for v in [Variant::Osp, Variant::Pso] {
        for rep in [
            verify_relations(&basis, v)?,
            check_vacuum(&basis, v)?,
            check_adjointness(&basis, v)?,
        ] {
            println!("{}", rep.summary());
        }
    }
    Ok(())
}
