//! Centers of pointed fusion categories and their Grothendieck-Verdier
//! structure.

pub mod blocks;
pub mod center;
pub mod classify;
pub mod cocycles;
pub mod config;
pub mod groups;
pub mod gvduality;
pub mod linalg;
pub mod pointed;
pub mod scalars;
