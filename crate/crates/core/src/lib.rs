//! Enumeration and counting of the distinct reduced Gröbner bases of
//! vanishing ideals of point sets over prime fields Z_p, with the
//! closed-form counts for small sets, the finite-field upper bound, and the
//! survey harnesses built on top.

pub mod enumerate;
pub mod error;
pub mod ff;
pub mod fm;
pub mod formulas;
pub mod geometry;
pub mod ideal;
pub mod models;
pub mod poly;
pub mod reference;
pub mod staircase;
pub mod survey;

pub use error::Error;
