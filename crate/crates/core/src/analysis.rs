//! The security battery: histogram, adjacent-pixel correlation, Shannon
//! entropy, chi-square uniformity, NPCR/UACI differentials, the 1-bit
//! key-sensitivity experiment, and keyspace size reporting.
//!
//! Statistics accumulate in exact integer arithmetic (`u64`/`i128`) and
//! convert to the caller's float type only for the final few operations,
//! so results don't depend on summation order and `f32` vs `f64` differ
//! only in final rounding.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::aes::{EngineKind, Key128};
use crate::image::{image_to_stream, stream_to_image, GrayImage};
use crate::modes::{self, CounterBlock, ModeKind};

/// Orientation of an adjacent pixel pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [
        Direction::Horizontal,
        Direction::Vertical,
        Direction::Diagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
            Direction::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("images have different dimensions: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(u32, u32, u32, u32),
    #[error("{direction} correlation is undefined: {reason}")]
    Degenerate {
        direction: Direction,
        reason: &'static str,
    },
    #[error("key flip bit {0} outside 0..=127")]
    FlipBit(u8),
    #[error("keyspace exponent {0} outside 1..=512")]
    KeyspaceExponent(u32),
}

/// Gray-level frequency counts. The bins always sum to the pixel count
/// of the source image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub bins: [u64; 256],
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.bins.iter().sum()
    }
}

/// Count how often each gray level occurs.
pub fn histogram(img: &GrayImage) -> Histogram {
    let mut bins = [0u64; 256];
    for &p in img.pixels() {
        bins[usize::from(p)] += 1;
    }
    Histogram { bins }
}

/// Chi-square statistic of a histogram against the uniform distribution
/// over 256 levels (255 degrees of freedom). Small values mean flat:
/// the 1% critical value is about 310.
pub fn chi_square_uniformity<F: Float + FromPrimitive>(h: &Histogram) -> F {
    let n = h.total();
    assert!(n > 0, "chi-square needs a non-empty histogram");
    // Sum of (c - N/256)^2 / (N/256), kept exact as
    // sum((256c - N)^2) / (256N).
    let mut sum: u128 = 0;
    for &c in &h.bins {
        let d = 256 * i128::from(c) - i128::from(n);
        sum += (d * d) as u128;
    }
    F::from_u128(sum).unwrap() / F::from_u128(256 * u128::from(n)).unwrap()
}

/// Shannon entropy of the gray-level distribution in bits per pixel,
/// from 0 (constant image) to 8 (exactly uniform histogram).
pub fn entropy<F: Float + FromPrimitive>(img: &GrayImage) -> F {
    let bins = histogram(img).bins;
    let n = F::from_usize(img.pixel_count()).unwrap();
    let mut acc = F::zero();
    for &c in bins.iter().filter(|&&c| c > 0) {
        let p = F::from_u64(c).unwrap() / n;
        acc = acc - p * p.log2();
    }
    acc
}

/// Pearson correlation over every adjacent pixel pair along one
/// direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationResult<F> {
    pub direction: Direction,
    pub r: F,
    pub pair_count: u64,
}

/// Correlate each pixel with its right / lower / lower-right neighbor.
/// All pairs enter the statistic, so the result is deterministic.
/// Population moments; `r = cov/(σₓσᵧ)`.
pub fn adjacent_correlation<F: Float + FromPrimitive>(
    img: &GrayImage,
    direction: Direction,
) -> Result<CorrelationResult<F>, AnalysisError> {
    let w = img.width() as usize;
    let h = img.height() as usize;
    let p = img.pixels();
    let mut n = 0u64;
    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0u64, 0u64, 0u64, 0u64, 0u64);
    let mut pair = |a: u8, b: u8| {
        let (a, b) = (u64::from(a), u64::from(b));
        n += 1;
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    };
    match direction {
        Direction::Horizontal => {
            for y in 0..h {
                for x in 0..w - 1 {
                    pair(p[y * w + x], p[y * w + x + 1]);
                }
            }
        }
        Direction::Vertical => {
            for y in 0..h - 1 {
                for x in 0..w {
                    pair(p[y * w + x], p[(y + 1) * w + x]);
                }
            }
        }
        Direction::Diagonal => {
            for y in 0..h - 1 {
                for x in 0..w - 1 {
                    pair(p[y * w + x], p[(y + 1) * w + x + 1]);
                }
            }
        }
    }
    if n < 2 {
        return Err(AnalysisError::Degenerate {
            direction,
            reason: "fewer than two adjacent pairs",
        });
    }
    // n·cov = n·Σxy − Σx·Σy and n·var = n·Σx² − (Σx)², all exact in
    // i128; the common factor n cancels in r.
    let nw = i128::from(n);
    let cov = nw * i128::from(sxy) - i128::from(sx) * i128::from(sy);
    let var_x = nw * i128::from(sxx) - i128::from(sx) * i128::from(sx);
    let var_y = nw * i128::from(syy) - i128::from(sy) * i128::from(sy);
    if var_x == 0 || var_y == 0 {
        return Err(AnalysisError::Degenerate {
            direction,
            reason: "a marginal variance is zero",
        });
    }
    let f = |v: i128| F::from_i128(v).unwrap();
    let r = f(cov) / (f(var_x).sqrt() * f(var_y).sqrt());
    Ok(CorrelationResult {
        direction,
        r,
        pair_count: n,
    })
}

fn check_dims(a: &GrayImage, b: &GrayImage) -> Result<(), AnalysisError> {
    if a.same_dimensions(b) {
        Ok(())
    } else {
        Err(AnalysisError::DimensionMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ))
    }
}

/// Number of Pixel Change Rate: the percentage of positions at which
/// the two images differ.
pub fn npcr<F: Float + FromPrimitive>(a: &GrayImage, b: &GrayImage) -> Result<F, AnalysisError> {
    check_dims(a, b)?;
    let differing = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .filter(|(x, y)| x != y)
        .count();
    Ok(F::from_u64(100 * differing as u64).unwrap() / F::from_usize(a.pixel_count()).unwrap())
}

/// Unified Average Changing Intensity: mean absolute pixel difference
/// normalized by 255, as a percentage.
pub fn uaci<F: Float + FromPrimitive>(a: &GrayImage, b: &GrayImage) -> Result<F, AnalysisError> {
    check_dims(a, b)?;
    let total: u64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(x, y)| u64::from(x.abs_diff(*y)))
        .sum();
    Ok(F::from_u64(100 * total).unwrap() / F::from_u64(255 * a.pixel_count() as u64).unwrap())
}

/// Pixel-wise absolute difference of two equal-size images.
pub fn diff_image(a: &GrayImage, b: &GrayImage) -> Result<GrayImage, AnalysisError> {
    check_dims(a, b)?;
    let pixels = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(x, y)| x.abs_diff(*y))
        .collect();
    Ok(GrayImage::new(a.width(), a.height(), pixels).expect("dimensions come from a valid image"))
}

/// Seeded random sample of adjacent pairs for scatter plots. The
/// correlation statistic always uses every pair; this only keeps plot
/// files small. Returns an empty vector if the image is too narrow to
/// form pairs in the requested direction.
pub fn scatter_sample(
    img: &GrayImage,
    direction: Direction,
    pairs: usize,
    seed: u64,
) -> Vec<(u8, u8)> {
    let (dx, dy) = match direction {
        Direction::Horizontal => (1, 0),
        Direction::Vertical => (0, 1),
        Direction::Diagonal => (1, 1),
    };
    let x_max = img.width() - dx;
    let y_max = img.height() - dy;
    if x_max == 0 || y_max == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|_| {
            let x = rng.random_range(0..x_max);
            let y = rng.random_range(0..y_max);
            (img.pixel(x, y), img.pixel(x + dx, y + dy))
        })
        .collect()
}

/// The full battery over one (input, cipher) image pair.
#[derive(Debug, Clone)]
pub struct SecurityReport<F> {
    pub histogram_input: Histogram,
    pub histogram_cipher: Histogram,
    pub entropy_input: F,
    pub entropy_cipher: F,
    pub correlation_input: [CorrelationResult<F>; 3],
    pub correlation_cipher: [CorrelationResult<F>; 3],
    /// Chi-square uniformity of the cipher histogram.
    pub chi_square: F,
    pub npcr: F,
    pub uaci: F,
}

impl<F: Float + FromPrimitive> SecurityReport<F> {
    pub fn compute(input: &GrayImage, cipher: &GrayImage) -> Result<Self, AnalysisError> {
        check_dims(input, cipher)?;
        let correlations = |img: &GrayImage| -> Result<[CorrelationResult<F>; 3], AnalysisError> {
            Ok([
                adjacent_correlation(img, Direction::Horizontal)?,
                adjacent_correlation(img, Direction::Vertical)?,
                adjacent_correlation(img, Direction::Diagonal)?,
            ])
        };
        let histogram_cipher = histogram(cipher);
        Ok(SecurityReport {
            chi_square: chi_square_uniformity(&histogram_cipher),
            histogram_input: histogram(input),
            histogram_cipher,
            entropy_input: entropy(input),
            entropy_cipher: entropy(cipher),
            correlation_input: correlations(input)?,
            correlation_cipher: correlations(cipher)?,
            npcr: npcr(input, cipher)?,
            uaci: uaci(input, cipher)?,
        })
    }
}

/// Outcome of decrypting a ciphertext with the wrong key. ECB usually
/// fails its padding check; CTR always produces an image of noise.
#[derive(Debug, Clone, PartialEq)]
pub enum WrongKeyDecrypt<F> {
    Rejected,
    Decrypted { image: GrayImage, entropy: F },
}

/// Artifacts of the 1-bit key-change experiment.
#[derive(Debug, Clone)]
pub struct KeySensitivityReport<F> {
    pub flip_bit: u8,
    pub cipher_right: GrayImage,
    pub cipher_flipped: GrayImage,
    pub diff: GrayImage,
    pub npcr: F,
    pub uaci: F,
    pub wrong_key: WrongKeyDecrypt<F>,
    pub decrypt_right: GrayImage,
}

/// Encrypt `img` under `key` and under `key` with `flip_bit` flipped,
/// then compare the two ciphertexts and both decryptions of the first.
/// CTR reuses the same `iv` for both keys so the key is the only
/// changing variable; `iv` is ignored for ECB.
pub fn key_sensitivity_suite<F: Float + FromPrimitive>(
    img: &GrayImage,
    key: &Key128,
    flip_bit: u8,
    mode: ModeKind,
    engine: EngineKind,
    iv: CounterBlock,
) -> Result<KeySensitivityReport<F>, AnalysisError> {
    if flip_bit > 127 {
        return Err(AnalysisError::FlipBit(flip_bit));
    }
    let flipped = key.with_bit_flipped(flip_bit);
    let stream = image_to_stream(img);
    let c1 = modes::encrypt_stream(&stream, key, mode, engine, iv);
    let c2 = modes::encrypt_stream(&stream, &flipped, mode, engine, iv);
    let render = |bytes: &[u8]| {
        stream_to_image(bytes, img.width(), img.height())
            .expect("ciphertext covers the pixel count")
    };
    let cipher_right = render(&c1);
    let cipher_flipped = render(&c2);

    let wrong_key = match modes::decrypt_stream(&c1, &flipped, mode, engine, iv) {
        Err(_) => WrongKeyDecrypt::Rejected,
        // A false ECB padding accept can strip up to 16 bytes, leaving
        // too few pixels; that also counts as a rejection.
        Ok(bytes) => match stream_to_image(&bytes, img.width(), img.height()) {
            Ok(image) => WrongKeyDecrypt::Decrypted {
                entropy: entropy(&image),
                image,
            },
            Err(_) => WrongKeyDecrypt::Rejected,
        },
    };

    let right = modes::decrypt_stream(&c1, key, mode, engine, iv)
        .expect("decryption with the right key cannot fail");
    let decrypt_right = render(&right);
    assert_eq!(
        &decrypt_right, img,
        "right-key decryption must reproduce the input"
    );

    Ok(KeySensitivityReport {
        flip_bit,
        npcr: npcr(&cipher_right, &cipher_flipped)?,
        uaci: uaci(&cipher_right, &cipher_flipped)?,
        diff: diff_image(&cipher_right, &cipher_flipped)?,
        cipher_right,
        cipher_flipped,
        wrong_key,
        decrypt_right,
    })
}

/// Exact size of a k-bit keyspace as a decimal string. Documents the
/// brute-force cost; no search is performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyspaceReport {
    pub k: u32,
    pub size: String,
}

pub fn keyspace_report(k: u32) -> Result<KeyspaceReport, AnalysisError> {
    if !(1..=512).contains(&k) {
        return Err(AnalysisError::KeyspaceExponent(k));
    }
    Ok(KeyspaceReport {
        k,
        size: (BigUint::one() << k).to_string(),
    })
}
