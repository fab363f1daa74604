//! The pso matrices as sign twists of the osp matrices, and the separate
//! route through twisted reduced elements.

use parastat::fockmodule::{check_dual_route, check_nilpotency, check_variant_link, FockBasis};
use parastat::gzbasis::Signature;

fn main() -> parastat::Result<()> {
    let basis = FockBasis::new(Signature::new(1, 1, 2, 5)?);
    println!("{}", check_variant_link(&basis)?.summary());
    println!("{}", check_nilpotency(&basis)?.summary());
    let (same, relations) = check_dual_route(&basis)?;
    println!("{}", same.summary());
    println!("{}", relations.summary());
    for c in same.failures().take(3) {
        println!("  differs: {} {:?}", c.relation, c.indices);
    }
    Ok(())
}
