pub mod cli;
pub mod correspondence;
pub mod exact_linalg;
pub mod fixtures;
pub mod frobenius;
pub mod gfa;
pub mod groupoid;
pub mod rep_cat;
pub mod report;
pub mod weak_hopf;
