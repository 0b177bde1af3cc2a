//! Binary PGM (P5) and PPM (P6) images plus plain-text matrices.
//!
//! Only 8-bit rasters are supported. Header comments (`#` to end of line)
//! are accepted between header tokens; every parse error carries the byte
//! offset where reading failed.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::SegMask;
use crate::grid::Grid;

pub type Rgb = [u8; 3];

/// Pixel values at or above this are read as navigable.
pub const NAVIGABLE_THRESHOLD: u8 = 128;

struct Header {
    width: usize,
    height: usize,
    maxval: usize,
    data_start: usize,
}

fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        msg: msg.into(),
    }
}

fn skip_space_and_comments(bytes: &[u8], mut pos: usize) -> usize {
    loop {
        match bytes.get(pos) {
            Some(b) if b.is_ascii_whitespace() => pos += 1,
            Some(b'#') => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            _ => return pos,
        }
    }
}

fn read_uint(bytes: &[u8], pos: usize, what: &str) -> Result<(usize, usize)> {
    let start = skip_space_and_comments(bytes, pos);
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        let msg = if start >= bytes.len() {
            format!("unexpected end of file, expected {what}")
        } else {
            format!("expected {what}")
        };
        return Err(parse_err(start, msg));
    }
    let text = std::str::from_utf8(&bytes[start..end]).expect("ascii digits");
    let value = text
        .parse()
        .map_err(|_| parse_err(start, format!("{what} is too large")))?;
    Ok((value, end))
}

fn read_header(bytes: &[u8], magic: &[u8; 2]) -> Result<Header> {
    if bytes.len() < 2 || &bytes[..2] != magic {
        return Err(parse_err(
            0,
            format!("expected magic number {}", String::from_utf8_lossy(magic)),
        ));
    }
    let (width, pos) = read_uint(bytes, 2, "width")?;
    let (height, pos) = read_uint(bytes, pos, "height")?;
    let (maxval, pos) = read_uint(bytes, pos, "maxval")?;
    if width == 0 || height == 0 {
        return Err(parse_err(pos, "image has zero size"));
    }
    if !(1..=255).contains(&maxval) {
        return Err(parse_err(pos, format!("unsupported maxval {maxval}")));
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => {}
        Some(_) => return Err(parse_err(pos, "expected whitespace after maxval")),
        None => return Err(parse_err(pos, "unexpected end of file before raster")),
    }
    Ok(Header {
        width,
        height,
        maxval,
        data_start: pos + 1,
    })
}

fn raster<'a>(bytes: &'a [u8], h: &Header, channels: usize) -> Result<&'a [u8]> {
    let n = h.width * h.height * channels;
    let data = &bytes[h.data_start..];
    if data.len() < n {
        return Err(parse_err(
            bytes.len(),
            format!("truncated raster: expected {n} bytes, found {}", data.len()),
        ));
    }
    if let Some(i) = data[..n].iter().position(|&b| b as usize > h.maxval) {
        return Err(parse_err(h.data_start + i, "sample exceeds maxval"));
    }
    Ok(&data[..n])
}

pub fn read_pgm(bytes: &[u8]) -> Result<Grid<u8>> {
    let h = read_header(bytes, b"P5")?;
    let data = raster(bytes, &h, 1)?;
    Grid::from_vec(h.width, h.height, data.to_vec())
}

pub fn write_pgm(img: &Grid<u8>) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.as_slice());
    out
}

pub fn read_ppm(bytes: &[u8]) -> Result<Grid<Rgb>> {
    let h = read_header(bytes, b"P6")?;
    let data = raster(bytes, &h, 3)?;
    let pixels = data.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
    Grid::from_vec(h.width, h.height, pixels)
}

pub fn write_ppm(img: &Grid<Rgb>) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    for px in img.as_slice() {
        out.extend_from_slice(px);
    }
    out
}

pub fn mask_from_pgm(bytes: &[u8]) -> Result<SegMask> {
    let img = read_pgm(bytes)?;
    SegMask::new(
        img.width(),
        img.height(),
        img.as_slice().iter().map(|&b| b >= NAVIGABLE_THRESHOLD).collect(),
    )
}

/// Navigable pixels become 255, the rest 0.
pub fn mask_to_pgm(mask: &SegMask) -> Vec<u8> {
    write_pgm(&mask.to_grid().map(|&n| if n { 255 } else { 0 }))
}

/// Blue-to-red colormap: `t = value / scale` clamped to `[0, 1]` maps to
/// `(255 t, 0, 255 (1 - t))`, rounded. A non-positive `scale` paints every
/// pixel blue.
pub fn heatmap(field: &Grid<f64>, scale: f64) -> Grid<Rgb> {
    field.map(|&x| {
        let t = if scale > 0.0 { (x / scale).clamp(0.0, 1.0) } else { 0.0 };
        [(255.0 * t).round() as u8, 0, (255.0 * (1.0 - t)).round() as u8]
    })
}

/// `width height` on the first line, then one line per row with values in
/// scientific notation to six significant digits.
pub fn write_matrix(field: &Grid<f64>) -> String {
    let mut out = format!("{} {}\n", field.width(), field.height());
    for v in 0..field.height() {
        for u in 0..field.width() {
            if u > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.5e}", field.at(u, v));
        }
        out.push('\n');
    }
    out
}

pub fn read_matrix(text: &str) -> Result<Grid<f64>> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for piece in text.split_inclusive(char::is_whitespace) {
        let tok = piece.trim_end();
        if !tok.is_empty() {
            tokens.push((offset, tok));
        }
        offset += piece.len();
    }
    let mut it = tokens.into_iter();
    let mut dim = |what: &str| -> Result<usize> {
        let (off, tok) = it
            .next()
            .ok_or_else(|| parse_err(text.len(), format!("missing {what}")))?;
        tok.parse().map_err(|_| parse_err(off, format!("bad {what}")))
    };
    let width = dim("width")?;
    let height = dim("height")?;
    let values = it
        .map(|(off, tok)| tok.parse::<f64>().map_err(|_| parse_err(off, "bad number")))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != width * height {
        return Err(parse_err(
            text.len(),
            format!("expected {} values, found {}", width * height, values.len()),
        ));
    }
    Grid::from_vec(width, height, values)
}
