pub mod algebra;
pub mod fixtures;
pub mod groebner;
pub mod input;
pub mod intmat;
pub mod nash;
pub mod report;
pub mod semigroup;
pub mod toric;
