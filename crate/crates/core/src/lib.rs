//! Mittag-Leffler type functions, their Fox-Wright reductions, asymptotic
//! expansions, contour integral representations and fractional operators.
//!
//! | module | contents |
//! |--------|----------|
//! | [`gamma`] | complex gamma, log-gamma, reciprocal gamma, Pochhammer symbols |
//! | [`params`] | convergence classes, order and type, empirical order |
//! | [`foxwright`] | Fox-Wright spec and evaluator |
//! | [`mlfamily`] | Mittag-Leffler family members |
//! | [`instances`] | M-series, K-function, Wright type series and their reductions |
//! | [`asymptotics`] | large-argument expansions |
//! | [`quad`] | Gauss-Legendre and double exponential quadrature |
//! | [`hyper`] | Gauss and Appell hypergeometric functions |
//! | [`contour`] | Hankel and Mellin-Barnes representations, transform checks |
//! | [`frac`] | Riemann-Liouville, Saigo and Saigo-Maeda operators |

pub mod asymptotics;
pub mod contour;
pub mod error;
pub mod foxwright;
pub mod frac;
pub mod gamma;
pub mod hyper;
pub mod instances;
pub mod mlfamily;
pub mod params;
pub mod quad;
pub mod sum;

pub use error::{Error, Result};
pub use num_complex::Complex64;
