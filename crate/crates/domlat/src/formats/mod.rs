pub mod csv;
pub mod cxt;
pub mod dot;
pub mod json;
pub mod listing;
