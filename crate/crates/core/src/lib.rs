//! Two-center problems on planar disks: two-piercing, general two-disk
//! covering, and restricted two-disk covering.

pub mod cover_general;
pub mod cover_restricted;
pub mod geom;
pub mod io_cli;
pub mod one_center;
pub mod oracles;
pub mod piercing;
pub mod solution;

pub use geom::{Disk, GeomError, Instance, NormalizationMode, Point};
pub use solution::{CoverTag, PiercingSolution, TwoCenterSolution};
