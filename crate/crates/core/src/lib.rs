#![no_std]

extern crate alloc;

pub mod arith;
pub mod descartes;
pub mod geometry;
pub mod forms;
pub mod solvers;
pub mod sequences;
