//! AES-128 grayscale image encryption toolkit.
//!
//! This crate bundles everything needed to encrypt raster images with
//! AES-128 and to quantify how well the result hides the plaintext:
//!
//! - [`aes`]: the block primitive, built from scratch, with two
//!   interchangeable engines (straight-line unrolled rounds vs. a
//!   round-counter loop over a single shared round datapath).
//! - [`modes`]: ECB and CTR modes over byte streams. ECB is included
//!   deliberately: its block-level determinism leaks image structure,
//!   which the analysis module makes measurable.
//! - [`image`]: binary PGM I/O, pixel-stream packing, and the `AESI`
//!   cipher container format.
//! - [`analysis`]: histogram, adjacent-pixel correlation, Shannon
//!   entropy, chi-square uniformity, NPCR/UACI differentials, the
//!   key-sensitivity experiment, and keyspace reporting.
//! - [`synth`]: deterministic synthetic test images.
//! - [`mod@bench`]: the analytic throughput model and measured software
//!   throughput over the engine × mode grid.
//!
//! The statistical and model code is generic over the float type via
//! `num-traits`; the aliases below fix `f64` as the default precision.
//!
//! Not hardened against timing side channels: S-box lookups and GF
//! multiplications are key-dependent. The crate targets functional and
//! statistical analysis, not side-channel resistance.

pub mod aes;
pub mod analysis;
pub mod bench;
pub mod image;
pub mod modes;
pub mod synth;

pub use aes::{Block, EngineKind, Key128, KeySchedule};
pub use image::{CipherContainer, GrayImage};
pub use modes::{CounterBlock, ModeKind};

/// Errors from the image-level encrypt/decrypt pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CryptError {
    #[error(transparent)]
    Mode(#[from] modes::ModeError),
    #[error(transparent)]
    Image(#[from] image::ImageError),
}

/// Encrypt an image into a cipher container. The `iv` seeds the CTR
/// counter and is ignored for ECB (the container then records a zero
/// IV). Deterministic: identical inputs yield identical containers.
pub fn encrypt_image(
    img: &GrayImage,
    key: &Key128,
    mode: ModeKind,
    engine: EngineKind,
    iv: CounterBlock,
) -> CipherContainer {
    let stream = image::image_to_stream(img);
    let ciphertext = modes::encrypt_stream(&stream, key, mode, engine, iv);
    CipherContainer {
        mode,
        iv: match mode {
            ModeKind::Ecb => [0u8; 16],
            ModeKind::Ctr => iv.into_bytes(),
        },
        width: img.width(),
        height: img.height(),
        ciphertext,
    }
}

/// Recover the image from a cipher container. A wrong key surfaces as
/// a padding error in ECB; CTR has no integrity check and yields noise.
pub fn decrypt_image(
    container: &CipherContainer,
    key: &Key128,
    engine: EngineKind,
) -> Result<GrayImage, CryptError> {
    let iv = CounterBlock::new(container.iv);
    let plain = modes::decrypt_stream(&container.ciphertext, key, container.mode, engine, iv)?;
    Ok(image::stream_to_image(
        &plain,
        container.width,
        container.height,
    )?)
}

/// Default-precision adjacent-pixel correlation.
pub type CorrelationResult = analysis::CorrelationResult<f64>;
/// Default-precision security battery report.
pub type SecurityReport = analysis::SecurityReport<f64>;
/// Default-precision key-sensitivity report.
pub type KeySensitivityReport = analysis::KeySensitivityReport<f64>;
/// Default-precision analytic throughput model input.
pub type HwThroughputInput = bench::HwThroughputInput<f64>;
