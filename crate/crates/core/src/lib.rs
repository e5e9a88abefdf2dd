pub mod cli;
pub mod exec;
pub mod invariants;
pub mod liftengine;
pub mod oracle;
pub mod polyring;
pub mod scalars;
pub mod stdbasis;
