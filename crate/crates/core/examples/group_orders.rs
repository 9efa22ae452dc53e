//! Named groups, direct products and generator files; orders come from a
//! Schreier-Sims stabilizer chain, so large groups are cheap.

use grouplab::group::parse_generator_file;
use grouplab::{construct, GroupSpec, Perm};

fn main() -> grouplab::Result<()> {
    for spec in ["sym:5", "alt:10", "dih:12", "q8", "sl23", "m10", "cyc:4 x sym:3", "sym:3 x sym:3"] {
        let g = construct(&GroupSpec::parse(spec)?)?;
        let orbits: Vec<usize> = g.bsgs().orbit_sizes();
        println!(
            "{spec:<14} degree {:>2}  order {:>8}  base orbits {orbits:?}",
            g.degree(),
            g.order()
        );
    }

    let alt10 = construct(&GroupSpec::parse("alt:10")?)?;
    let x = Perm::parse("(1 2 3 4 5 6 7 8 9)", 10)?;
    let y = Perm::parse("(1 2)", 10)?;
    println!("{x} in Alt(10): {}", alt10.contains(&x)?);
    println!("{y} in Alt(10): {}", alt10.contains(&y)?);
    println!("exponent of Alt(10) from cycle types: {}", alt10.exponent(0)?);

    let from_file = parse_generator_file("# the Klein four-group\ndegree 4\n(1 2)(3 4)\n(1 3)(2 4)\n")?;
    println!("generator file group: order {}", from_file.order());
    Ok(())
}
