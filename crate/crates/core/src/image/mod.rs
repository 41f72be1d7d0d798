//! Grayscale images, their on-disk formats, and byte-stream packing.
//!
//! The canonical interchange format is binary PGM (`P5`, maxval 255).
//! Ciphertext travels in the `AESI` container, which records the mode,
//! IV, and original dimensions so decryption can restore the image.

mod container;
mod pgm;

pub use container::{
    read_container, write_container, CipherContainer, HEADER_LEN as CONTAINER_HEADER_LEN,
};
pub use pgm::{read_pgm, write_pgm};

/// Failures while parsing or assembling image data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImageError {
    #[error("format error: {0}")]
    Format(String),
    #[error("stream of {got} bytes cannot fill a {width}x{height} image")]
    Size { got: usize, width: u32, height: u32 },
}

/// An 8-bit grayscale raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Build an image, checking that `pixels` holds exactly
    /// `width * height` bytes and both dimensions are nonzero.
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::Format(format!(
                "zero dimension: {width}x{height}"
            )));
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(ImageError::Format(format!(
                "pixel buffer holds {} bytes, dimensions {width}x{height} need {expected}",
                pixels.len()
            )));
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    pub fn pixel(&self, x: u32, y: u32) -> u8 {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    pub fn same_dimensions(&self, other: &GrayImage) -> bool {
        self.width == other.width && self.height == other.height
    }
}

/// Flatten an image into the byte stream the cipher consumes, row-major.
pub fn image_to_stream(img: &GrayImage) -> Vec<u8> {
    img.pixels.clone()
}

/// Rebuild an image from a byte stream, taking the first
/// `width * height` bytes and dropping any trailing padding.
pub fn stream_to_image(bytes: &[u8], width: u32, height: u32) -> Result<GrayImage, ImageError> {
    let needed = width as usize * height as usize;
    if bytes.len() < needed {
        return Err(ImageError::Size {
            got: bytes.len(),
            width,
            height,
        });
    }
    GrayImage::new(width, height, bytes[..needed].to_vec())
}
