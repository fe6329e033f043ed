//! Byte-exact output encodings: binary PPM images and the `BCJ1` voxel
//! volume. Writing to disk lives with the callers; these functions only
//! produce buffers so the formats stay testable bit for bit.

use alloc::vec::Vec;
use core::fmt;

use super::ClassGrid;

/// An RGB image, row-major with the top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgbImage {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl RgbImage {
    pub fn new(width: usize, height: usize, fill: [u8; 3]) -> Self {
        let mut data = Vec::with_capacity(width * height * 3);
        for _ in 0..width * height {
            data.extend_from_slice(&fill);
        }
        RgbImage {
            width,
            height,
            data,
        }
    }

    /// Adopt an existing RGB buffer; `data.len()` must be `3 * width * height`.
    pub fn from_raw(width: usize, height: usize, data: Vec<u8>) -> Option<Self> {
        (data.len() == 3 * width * height).then_some(RgbImage {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn set(&mut self, x: usize, y: usize, rgb: [u8; 3]) {
        let at = (y * self.width + x) * 3;
        self.data[at..at + 3].copy_from_slice(&rgb);
    }

    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        let at = (y * self.width + x) * 3;
        [self.data[at], self.data[at + 1], self.data[at + 2]]
    }

    pub fn pixels(&self) -> &[u8] {
        &self.data
    }

    /// Binary PPM (P6): `P6\n<width> <height>\n255\n` then raw RGB rows,
    /// top row first.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.data.len() + 32);
        out.extend_from_slice(b"P6\n");
        push_decimal(&mut out, self.width);
        out.push(b' ');
        push_decimal(&mut out, self.height);
        out.extend_from_slice(b"\n255\n");
        out.extend_from_slice(&self.data);
        out
    }
}

fn push_decimal(out: &mut Vec<u8>, value: usize) {
    let mut buf = [0u8; 20];
    let mut n = value;
    let mut at = buf.len();
    loop {
        at -= 1;
        buf[at] = b'0' + (n % 10) as u8;
        n /= 10;
        if n == 0 {
            break;
        }
    }
    out.extend_from_slice(&buf[at..]);
}

/// Voxel export requires a 3D grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotThreeDimensional(pub usize);

impl fmt::Display for NotThreeDimensional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "voxel export needs a 3D grid, got {} dimensions", self.0)
    }
}

impl core::error::Error for NotThreeDimensional {}

/// The `BCJ1` volume: magic bytes, three little-endian `u32` dimensions,
/// then one class ordinal byte per cell, row-major with the first axis
/// fastest.
pub fn encode_voxels(grid: &ClassGrid) -> Result<Vec<u8>, NotThreeDimensional> {
    if grid.dims.len() != 3 {
        return Err(NotThreeDimensional(grid.dims.len()));
    }
    let mut out = Vec::with_capacity(16 + grid.classes.len());
    out.extend_from_slice(b"BCJ1");
    for &d in &grid.dims {
        out.extend_from_slice(&(d as u32).to_le_bytes());
    }
    out.extend(grid.classes.iter().map(|c| c.ordinal()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::BicomplexClass;
    use alloc::vec;

    #[test]
    fn ppm_bytes_are_pinned() {
        let img = RgbImage::new(1, 1, [0xFF, 0xFF, 0xFF]);
        assert_eq!(img.to_ppm(), b"P6\n1 1\n255\n\xff\xff\xff");

        let mut img = RgbImage::new(2, 1, [0, 0, 0]);
        img.set(1, 0, [0xFF, 0xFF, 0xFF]);
        assert_eq!(img.to_ppm(), b"P6\n2 1\n255\n\x00\x00\x00\xff\xff\xff");
    }

    #[test]
    fn voxel_header_and_payload() {
        let grid = ClassGrid {
            dims: vec![2, 2, 2],
            classes: vec![BicomplexClass::F2Unbounded; 8],
            de: vec![f64::INFINITY; 8],
        };
        let bytes = encode_voxels(&grid).unwrap();
        assert_eq!(bytes.len(), 16 + 8);
        assert_eq!(&bytes[..4], b"BCJ1");
        assert_eq!(&bytes[4..8], &2u32.to_le_bytes());
        assert_eq!(&bytes[8..12], &2u32.to_le_bytes());
        assert_eq!(&bytes[12..16], &2u32.to_le_bytes());
        assert!(bytes[16..].iter().all(|&b| b == 4));
    }

    #[test]
    fn voxel_export_rejects_planar_grids() {
        let grid = ClassGrid {
            dims: vec![2, 2],
            classes: vec![BicomplexClass::J2; 4],
            de: vec![0.0; 4],
        };
        assert_eq!(encode_voxels(&grid), Err(NotThreeDimensional(2)));
    }
}
