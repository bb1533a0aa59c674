//! Converts radiance-style voxel volumes (per-voxel RGB + density) into
//! discrete per-voxel pigment labels for multi-material voxel printing.
//!
//! The crate is organized along the conversion chain:
//!
//! * [`spectral`] — wavelength grids, spectra, CIE 1931 colorimetry under D65.
//! * [`kmcore`] — forward Kubelka-Munk optics of pigment layers and mixtures,
//!   plus the exponential density fit.
//! * [`calib`] — per-band recovery of absorption/scattering from measured
//!   reflectance/transmittance pairs, calibration files, synthetic pigments.
//! * [`gamut`] — the constrained color-to-concentration solver and the
//!   RGB→concentration / brightness→black-ratio lookup tables.
//! * [`volume`] — voxel volume data model, RVOL file I/O, synthetic volumes.
//! * [`pipeline`] — per-voxel conversion, density alignment, stochastic
//!   halftoning, slice export and the preview renderer.
//! * [`cli`] — the `vppc` command-line driver.

pub mod calib;
pub mod cli;
mod error;
pub mod gamut;
pub mod kmcore;
pub mod pipeline;
pub(crate) mod rng;
pub mod spectral;
pub mod volume;

pub use error::{Error, Result};
