pub mod bernstein;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod hypersurface;
pub mod ideal;
pub mod io;
pub mod jacobian;
pub mod newton;
pub mod poly;
pub mod random;
pub mod rational;

pub use error::{Error, Result};
pub use ideal::{Exponent, MonomialIdeal};
pub use newton::{FacetForm, NewtonPolyhedron};
pub use poly::SparsePolynomial;
pub use rational::Rational;
pub mod jumping;
