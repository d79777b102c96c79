pub mod cli;
pub mod constructions;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod verify;
