//! Shows every isoscalar factor behind the coefficients of one generator
//! acting on a fixed pattern.

use parastat::gzbasis::GzPattern;
use parastat::isoscalar::{cgc_trace, transitions};

fn main() -> parastat::Result<()> {
    let source = GzPattern::parse(2, 1, "[1,1,0 | 1,0 | 1]")?;
    for j in 1..=source.r() {
        for tr in transitions(&source, j) {
            let trace = cgc_trace(&tr)?;
            println!("j={j}: {} -> {}", tr.source, tr.target);
            println!("{trace}");
        }
    }
    Ok(())
}
