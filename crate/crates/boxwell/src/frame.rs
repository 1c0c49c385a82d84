//! The dimensionless working frame used everywhere in this crate.

/// Unit convention shared by every routine in the crate.
///
/// All formulas are written in oscillator units: energies are measured in
/// quanta of the free oscillator and lengths in its natural length, so the
/// four scale constants below are identically 1 and never appear in code.
/// What remains of the physical setup is a single dimensionless parameter,
/// the half-width
///
/// ```text
/// k = (wall distance from the origin) / (oscillator length)
/// ```
///
/// carried around as [`crate::eigensolve::Confinement`]. A level with
/// effective index `nu` has energy `nu + 1/2` in these units; multiply by
/// the physical quantum to leave the frame.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DimensionlessFrame;

impl DimensionlessFrame {
    /// Reduced Planck constant in the working frame.
    pub const HBAR: f64 = 1.0;
    /// Particle mass in the working frame.
    pub const MASS: f64 = 1.0;
    /// Oscillator angular frequency in the working frame.
    pub const OMEGA: f64 = 1.0;
    /// Oscillator length `sqrt(hbar / (mass * omega))` in the working frame.
    pub const OSC_LENGTH: f64 = 1.0;
}
