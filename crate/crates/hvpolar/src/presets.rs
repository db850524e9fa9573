//! Named parameter sets.
//!
//! The preset names are part of the CLI contract; their values are fixed
//! constants.

use crate::profile::TransmissionProfileParams;
use crate::shrinkage::ShrinkageParams;

/// A named parameter set: a transmission profile plus, for the extended
/// model, the shrinkage-kernel parameters.
#[derive(Debug, Clone, Copy)]
pub struct Preset {
    pub name: &'static str,
    pub profile: TransmissionProfileParams,
    pub shrinkage: Option<ShrinkageParams>,
}

pub const FIG1_SIMPLE: &str = "fig1-simple";
pub const FIG2_SHRINKAGE: &str = "fig2-shrinkage";

/// Profile for the simple (no polarization change) model.
pub fn fig1_simple() -> TransmissionProfileParams {
    TransmissionProfileParams::new(1.74, 3.78, 200.0).expect("preset constants are valid")
}

/// Profile and kernel parameters for the polarization-shrinkage model.
pub fn fig2_shrinkage() -> Preset {
    Preset {
        name: FIG2_SHRINKAGE,
        profile: TransmissionProfileParams::new(2.38, 2.54, 186.8)
            .expect("preset constants are valid"),
        shrinkage: Some(
            ShrinkageParams::new(40.5, 0.40, 1.38).expect("preset constants are valid"),
        ),
    }
}

pub fn by_name(name: &str) -> Option<Preset> {
    match name {
        FIG1_SIMPLE => Some(Preset {
            name: FIG1_SIMPLE,
            profile: fig1_simple(),
            shrinkage: None,
        }),
        FIG2_SHRINKAGE => Some(fig2_shrinkage()),
        _ => None,
    }
}

pub fn names() -> [&'static str; 2] {
    [FIG1_SIMPLE, FIG2_SHRINKAGE]
}
