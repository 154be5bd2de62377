//! Ciphertext-only cipher identification.
//!
//! The pipeline turns raw ciphertext into *distributional fingerprints*:
//! every 1024-byte unit block is scored by a fixed panel of randomness
//! tests, each raw statistic is calibrated to [0,1] through its null CDF
//! (probability integral transform), and windows of consecutive score rows
//! are summarized per column by a fixed-bin histogram plus four moments.
//! Linear and shallow nonlinear classifiers are then trained and evaluated
//! under a leakage-aware grouped cross-validation protocol with boundary
//! purging, plus cross-domain transfer matrices and sanity checks.
//!
//! Module layout mirrors the pipeline stages:
//!
//! - [`corpus`]: synthetic/ingested plaintext streams with graded structure
//! - [`cryptobox`]: the six cipher configurations and per-window key schedule
//! - [`statpanel`]: the 41-column statistic panel over unit blocks
//! - [`calibrate`]: null CDFs and the probability integral transform
//! - [`fingerprint`]: windowing, histogram/moment features, baselines
//! - [`learn`]: standardizer + logistic regression / linear SVM / MLP
//! - [`evalproto`]: grouped CV with purging, metrics, gaps, sanity checks
//! - [`dataset`]: end-to-end dataset assembly (gen -> encrypt -> score)
//! - [`artifact`]: self-describing on-disk formats and canonical hashing
//! - [`cli`]: subcommand implementations for the `cipherprint` binary

pub mod artifact;
pub mod bits;
pub mod calibrate;
pub mod cli;
pub mod corpus;
pub mod cryptobox;
pub mod dataset;
pub mod error;
pub mod evalproto;
pub mod fft;
pub mod fingerprint;
pub mod learn;
pub mod rng;
pub mod special;
pub mod statpanel;
pub mod svg;

pub use error::{Error, Result};
