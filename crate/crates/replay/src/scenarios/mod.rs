pub mod chain;
pub mod code1;
pub mod code2;
pub mod lemma;
