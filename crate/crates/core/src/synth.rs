//! Deterministic synthetic grayscale test images.
//!
//! Three patterns cover the plaintext shapes the analysis cares about:
//! `FlatRegions` (large uniform patches that ECB turns into visible
//! repeats), `Gradient` (strongly correlated neighbors, like natural
//! images), and `Noise` (the high-entropy baseline).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::image::GrayImage;

/// Smallest accepted width and height.
pub const MIN_DIMENSION: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    FlatRegions,
    Gradient,
    Noise,
}

impl Pattern {
    pub const ALL: [Pattern; 3] = [Pattern::FlatRegions, Pattern::Gradient, Pattern::Noise];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::FlatRegions => "flat-regions",
            Pattern::Gradient => "gradient",
            Pattern::Noise => "noise",
        }
    }

    pub fn from_name(name: &str) -> Option<Pattern> {
        Pattern::ALL.into_iter().find(|p| p.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("image dimensions {0}x{1} below the {MIN_DIMENSION}x{MIN_DIMENSION} minimum")]
pub struct SynthError(pub u32, pub u32);

/// Gray value of the first flat rectangle.
pub const FLAT_VALUE_A: u8 = 40;
/// Gray value of the second flat rectangle.
pub const FLAT_VALUE_B: u8 = 216;

/// Side length of the flat rectangles: 64 whenever the image is large
/// enough, otherwise half the smaller dimension.
pub fn flat_region_side(width: u32, height: u32) -> u32 {
    64.min(width.min(height) / 2)
}

/// Generate a deterministic test image: the same (size, seed, pattern)
/// triple always yields identical pixels.
pub fn generate(
    width: u32,
    height: u32,
    seed: u64,
    pattern: Pattern,
) -> Result<GrayImage, SynthError> {
    if width < MIN_DIMENSION || height < MIN_DIMENSION {
        return Err(SynthError(width, height));
    }
    let (w, h) = (width as usize, height as usize);
    let mut pixels = vec![0u8; w * h];
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    match pattern {
        Pattern::Noise => rng.fill(&mut pixels[..]),
        Pattern::Gradient => {
            // v = round(255·x / (w−1)): a horizontal ramp, so adjacent
            // pixels are maximally correlated.
            for y in 0..h {
                for x in 0..w {
                    pixels[y * w + x] = ((x * 255 + (w - 1) / 2) / (w - 1)) as u8;
                }
            }
        }
        Pattern::FlatRegions => {
            // Jittered vertical ramp background with two uniform
            // rectangles in opposite corners.
            for y in 0..h {
                let base = 32 + (y * 160 / (h - 1)) as i32;
                for x in 0..w {
                    let v = base + rng.random_range(-12..=12);
                    pixels[y * w + x] = v.clamp(0, 255) as u8;
                }
            }
            let s = flat_region_side(width, height) as usize;
            for y in 0..s {
                pixels[y * w..y * w + s].fill(FLAT_VALUE_A);
                let far = (h - s + y) * w + (w - s);
                pixels[far..far + s].fill(FLAT_VALUE_B);
            }
        }
    }
    Ok(GrayImage::new(width, height, pixels).expect("dimensions are validated above"))
}
