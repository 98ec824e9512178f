#![forbid(unsafe_code)]
//! Backdoor attacks on spiking neural networks trained on event-camera data,
//! end to end: AER event parsing and frame accumulation, a DVS pixel
//! simulator, Framed/Strobing/Flashy trigger injection, surrogate-gradient
//! SNN training, pruning/fine-tuning defenses, stealth metrics, and a
//! seeded experiment harness.

pub mod defense;
pub mod dvs;
pub mod event;
pub mod harness;
pub mod poison;
pub mod snn;
pub mod stealth;
