//! Reduced matrix elements on every highest weight up to level 3, with the
//! number of cancelled 0/0 pairs.

use parastat::gzbasis::{Signature, TopRow};
use parastat::reduced::g_detailed;

fn main() -> parastat::Result<()> {
    let sig = Signature::new(2, 1, 3, 3)?;
    for level in 0..=3 {
        for top in TopRow::all_at_level(sig.m, sig.n, level, Some(sig.p)) {
            for k in 1..=sig.r() {
                let g = g_detailed(k, &top, &sig)?;
                println!(
                    "G_{k}{:?} = {}  (cancelled {})",
                    top.labels(),
                    g.value,
                    g.cancelled
                );
            }
        }
    }
    Ok(())
}
