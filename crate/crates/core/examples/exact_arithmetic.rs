//! Square roots stay symbolic: sums of rational multiples of square-free radicals.

use parastat::exactnum::{rat, sqrt_normalize, RadicalSum};

fn main() -> parastat::Result<()> {
    let x = sqrt_normalize(&rat(72, 5))?;
    println!("sqrt(72/5) = {x}");

    let a = RadicalSum::sqrt(&rat(2, 1))?;
    let b = RadicalSum::sqrt(&rat(8, 1))?;
    let sum = &a + &b;
    println!("sqrt 2 + sqrt 8 = {sum}");
    println!("(sqrt 2 + sqrt 8)^2 = {}", &sum * &sum);

    let mixed = RadicalSum::from_terms([(rat(1, 2), 3), (rat(-2, 3), 6), (rat(5, 1), 1)])?;
    println!("{mixed}  ~ {:.6}", mixed.to_f64());
    println!("(x - x) is zero: {}", (&mixed - &mixed).is_zero());
    Ok(())
}
