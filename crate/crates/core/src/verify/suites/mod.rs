pub mod characters;
pub mod combinatorics;
pub mod exact_arith;
pub mod laughlin;
pub mod multiboson;
pub mod realizations;
