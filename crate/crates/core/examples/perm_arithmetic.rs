//! Permutations in cycle notation: composition, inverses, orders, parity.

use grouplab::Perm;

fn main() -> grouplab::Result<()> {
    let a = Perm::parse("(1 2 3)(4 5)", 5)?;
    let b = Perm::parse("(1 4)", 5)?;

    // `a.then(&b)` applies `a` first.
    println!("a        = {a}");
    println!("b        = {b}");
    println!("a then b = {}", a.then(&b));
    println!("b then a = {}", b.then(&a));
    println!("a^-1     = {}", a.inverse());
    println!("a^3      = {}", a.pow(3));
    println!("a^b      = {}", a.conjugate_by(&b));
    println!("[a, b]   = {}", a.commutator(&b));
    println!(
        "order of a = {}, cycle type {:?}, parity {:?}",
        a.order(),
        a.cycle_type().parts(),
        a.parity()
    );

    // Separators may be spaces or commas; output is always canonical.
    let c = Perm::parse(" (3,1)(5 2) ", 5)?;
    println!("parsed ' (3,1)(5 2) ' as {c}");
    match Perm::parse("(1 2 2)", 5) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected '(1 2 2)': {e}"),
    }
    Ok(())
}
