pub mod braid;
pub mod cli;
pub mod families;
pub mod invariants;
pub mod modular;
pub mod poly;
pub mod verify;
