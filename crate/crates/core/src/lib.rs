pub mod cli;
pub mod dobinski;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod series;
pub mod tables;
pub mod verify;
pub mod weyl;
