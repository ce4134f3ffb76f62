//! Exact scalar and polynomial arithmetic.

pub mod gauss;
pub mod laurent;
pub mod modp;
pub mod ring;
pub mod subst;
pub mod text;

pub use gauss::{GaussianRational, Q};
pub use laurent::{bracket, Exp, LaurentPoly};
pub use modp::{Fp, MontFp};
pub use ring::{Field, Ring};
pub use subst::{substitute, MonomialSubstitution, VarImage};
pub use text::{emit_canonical, from_json, parse_poly, to_json, JsonPoly};
