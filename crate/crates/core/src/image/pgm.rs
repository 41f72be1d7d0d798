//! Binary PGM (`P5`) reading and writing.
//!
//! The writer emits exactly `P5\n<width> <height>\n255\n` followed by
//! the raw pixel bytes, so output files are byte-reproducible. The
//! reader accepts any single-byte whitespace runs between header
//! tokens but rejects `#` comments, non-255 maxvals, truncated pixel
//! data, and trailing bytes.

use super::{GrayImage, ImageError};

/// Serialize an image to canonical binary PGM bytes.
pub fn write_pgm(img: &GrayImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", img.width(), img.height());
    let mut out = Vec::with_capacity(header.len() + img.pixel_count());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(img.pixels());
    out
}

/// Parse binary PGM bytes into an image.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, ImageError> {
    let rest = bytes
        .strip_prefix(b"P5")
        .ok_or_else(|| ImageError::Format("missing P5 magic".into()))?;

    let mut cursor = rest;
    let mut fields = [0u64; 3];
    for field in fields.iter_mut() {
        *field = parse_header_int(&mut cursor)?;
    }
    let [width, height, maxval] = fields;
    // exactly one whitespace byte separates the header from pixel data
    match cursor.first() {
        Some(b) if b.is_ascii_whitespace() => cursor = &cursor[1..],
        _ => {
            return Err(ImageError::Format(
                "missing separator before pixel data".into(),
            ))
        }
    }

    if maxval != 255 {
        return Err(ImageError::Format(format!(
            "unsupported maxval {maxval} (only 255)"
        )));
    }
    if width == 0 || height == 0 {
        return Err(ImageError::Format(format!(
            "zero dimension: {width}x{height}"
        )));
    }
    let (width, height) = (
        u32::try_from(width).map_err(|_| ImageError::Format(format!("width {width} too large")))?,
        u32::try_from(height)
            .map_err(|_| ImageError::Format(format!("height {height} too large")))?,
    );
    let expected = width as usize * height as usize;
    if cursor.len() < expected {
        return Err(ImageError::Format(format!(
            "truncated pixel data: need {expected} bytes, found {}",
            cursor.len()
        )));
    }
    if cursor.len() > expected {
        return Err(ImageError::Format(format!(
            "{} trailing bytes after pixel data",
            cursor.len() - expected
        )));
    }
    GrayImage::new(width, height, cursor.to_vec())
}

/// Read one whitespace-delimited decimal token.
fn parse_header_int(cursor: &mut &[u8]) -> Result<u64, ImageError> {
    while let Some(b) = cursor.first() {
        if b.is_ascii_whitespace() {
            *cursor = &cursor[1..];
        } else {
            break;
        }
    }
    if cursor.first() == Some(&b'#') {
        return Err(ImageError::Format("comment lines are not accepted".into()));
    }
    let digits = cursor.iter().take_while(|b| b.is_ascii_digit()).count();
    if digits == 0 {
        return Err(ImageError::Format("expected a decimal header field".into()));
    }
    let value = std::str::from_utf8(&cursor[..digits])
        .unwrap()
        .parse::<u64>()
        .map_err(|e| ImageError::Format(format!("header field overflow: {e}")))?;
    *cursor = &cursor[digits..];
    Ok(value)
}
