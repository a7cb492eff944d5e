//! The README walkthrough, kept compiling.

use riggedpaths::kkr;
use riggedpaths::LatticeWord;

fn main() -> riggedpaths::Result<()> {
    let word: LatticeWord = "001101".parse()?;
    assert_eq!(word.energy_h(), 8);
    assert_eq!(word.energy_e()?, 2);

    let config = kkr::kkr_insert(&word, 2)?;
    assert_eq!(config.momentum()?, 4);
    assert_eq!(kkr::kkr_ramify(&config)?, word);

    let twin = kkr::kkr_insert(&word.reverse_complement()?, 2)?;
    assert_eq!(twin.momentum()?, word.energy_e()?);

    let report = riggedpaths::identity::bose_fermi_check(2, 8)?;
    assert!(report.equal);

    println!("{word} maps to");
    println!("{config}");
    Ok(())
}
