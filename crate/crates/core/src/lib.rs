pub mod graph;
pub mod oracles;
pub mod scalar;
pub mod gyarfas;
pub mod geometry;
pub mod labeling;
pub mod protocol;

pub type Rational = num_rational::BigRational;
pub type RationalScene = geometry::Scene<Rational>;
pub type FloatScene = geometry::Scene<f64>;
