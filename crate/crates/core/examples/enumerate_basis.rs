//! Lists the Gel'fand-Zetlin basis of a truncated Fock space, grouped by level.

use parastat::gzbasis::{basis, weight, Signature};

fn main() -> parastat::Result<()> {
    let sig = Signature::new(1, 1, 2, 3)?;
    let patterns = basis(&sig);
    println!("m=1 n=1 p=2, levels <= 3: {} vectors", patterns.len());
    for pat in &patterns {
        let w: Vec<String> = weight(pat, sig.p)
            .0
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("level {}  {pat}  weight ({})", pat.level(), w.join(", "));
    }
    Ok(())
}
