//! Compares tableau dimensions of hook partitions with GZ pattern counts.

use parastat::charcount::level_table;
use parastat::gzbasis::Signature;

fn main() -> parastat::Result<()> {
    let sig = Signature::new(2, 1, 6, 5)?;
    for row in level_table(&sig) {
        println!(
            "level {}  {:<12} tableaux {:>4}  patterns {:>4}  {}",
            row.level,
            row.partition.to_string(),
            row.dimension,
            row.pattern_count,
            if row.matches { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
