//! Lommel functions `s_{mu,nu}`, `S_{mu,nu}` and the Bessel, Struve and
//! Neumann-type functions around them, evaluated on the logarithmic Riemann
//! surface, together with their continuation formulas and a solver for
//! second-order ODEs with exponential coefficients.

pub mod bessel;
pub mod continuation;
pub mod dd;
pub mod error;
pub mod gamma;
pub mod logpoint;
pub mod lommel;
pub mod ode;
pub mod path;
mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use logpoint::{branch_shift, logpoint_pow, Eval, LogPoint, Method, C64};
