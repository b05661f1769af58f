use crate::closed::{Conventions, Power};

/// The N-power insertions used throughout.
pub const STANDARD: Conventions = Conventions {
    center: Power::new(1, 0, -1),
    commutativity: Power::new(1, 0, -1),
    twist: Power::new(1, 0, 0),
    torus: Power::new(0, 1, -1),
    knowledge: Power::new(1, 0, -1),
    cardy: Power::new(1, 0, 0),
};
