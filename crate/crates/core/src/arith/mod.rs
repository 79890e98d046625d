pub mod gaussian;
pub mod interp;
pub mod laurent;
pub mod sample;
pub mod scalar;

pub use gaussian::GaussianRational;
pub use interp::{eval_on_curve, interpolate, LaurentSeries};
pub use laurent::MultiLaurent;
pub use sample::Sampler;
pub use scalar::{brace, bracket, Field, Ring};
