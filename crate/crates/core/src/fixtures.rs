//! Small named spaces used in docs, tests and the CLI examples.

use crate::partition::{Carrier, Partition};
use crate::space::NaSpace;

fn space(n: usize, gens: &[&[&[usize]]]) -> NaSpace {
    let parts = gens
        .iter()
        .map(|blocks| Partition::from_blocks(n, blocks).expect("fixture partition"))
        .collect();
    NaSpace::new(Carrier::indexed(n), parts).expect("fixture space")
}

/// `{0,1,2}` generated by `0 | 1 2` and `0 1 | 2`. T0 but not complete.
pub fn tri() -> NaSpace {
    space(3, &[&[&[0], &[1, 2]], &[&[0, 1], &[2]]])
}

/// Discrete space on `{0,1,2}`.
pub fn dsc3() -> NaSpace {
    NaSpace::discrete(Carrier::indexed(3))
}

/// `{0,1,2,3}` generated by `0 1 | 2 3` and `0 | 1 | 2 3`; the second
/// refines the first, and points 2 and 3 are never separated.
pub fn glue4() -> NaSpace {
    space(4, &[&[&[0, 1], &[2, 3]], &[&[0], &[1], &[2, 3]]])
}

/// Discrete space on `{u,v}`.
pub fn d2() -> NaSpace {
    NaSpace::discrete(Carrier::new(["u", "v"]).expect("labels"))
}

/// One-point space.
pub fn point() -> NaSpace {
    NaSpace::discrete(Carrier::indexed(1))
}
