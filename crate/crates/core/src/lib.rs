//! Growing sparse CSS-like subsystem codes from small seeds, plus the
//! stabilizer lego machinery used to check the constructions.

pub mod catalog;
pub mod code;
pub mod conjoin;
pub mod css_network;
pub mod gf2;
pub mod grow;
pub mod io;
