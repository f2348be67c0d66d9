pub mod cli;
pub mod counting;
pub mod diagram;
pub mod dsu;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod seifert;
pub mod word;
pub mod stats;
pub mod verify;
