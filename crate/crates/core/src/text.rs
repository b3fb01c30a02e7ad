//! Line-oriented text formats for fields, matrices, codes, triple families and
//! symbol vectors. Writers and readers are exact inverses: reading a file and
//! writing it back reproduces it byte for byte.
//!
//! ```text
//! lrc v1
//! field p=3 m=2 poly=2,2,1
//! params n=8 r=4 a=1 h=2
//! matrix 4 8
//! 1,0 0,1 ...
//! ```
//!
//! A tower field adds `tower` lines naming its base, outermost first, e.g.
//! `field p=2 m=3 poly=2,1,0,1` then `tower p=2 m=2 poly=1,1,1`. Polynomial
//! coefficients are integer encodings of base field elements.

use crate::elliptic::{ProjectivePoint, TripleFamily};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::lrc::{LrcCode, LrcParams};
use crate::matrix::Matrix;

/// Erased positions in a symbol file are written as this token.
pub const ERASED: &str = "?";

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(s: &'a str) -> Self {
        Lines {
            inner: s.lines().enumerate(),
            last: 0,
        }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            if !line.trim().is_empty() {
                return Ok((i + 1, line.trim()));
            }
        }
        Err(Error::parse(
            self.last + 1,
            format!("expected {what}, found end of input"),
        ))
    }

    fn peek_is(&self, prefix: &str) -> bool {
        self.inner
            .clone()
            .find(|(_, l)| !l.trim().is_empty())
            .is_some_and(|(_, l)| l.trim().starts_with(prefix))
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.find(|(_, l)| !l.trim().is_empty()) {
            Some((i, _)) => Err(Error::parse(i + 1, "trailing content")),
            None => Ok(()),
        }
    }
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::parse(line, other.to_string()),
    }
}

/// `key=value` pairs after a leading keyword, in the given order.
fn fields<'a>(line: &'a str, n: usize, keyword: &str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::parse(n, format!("expected `{keyword}`")));
    }
    let mut values = Vec::new();
    for key in keys {
        let part = parts
            .next()
            .ok_or_else(|| Error::parse(n, format!("missing `{key}=`")))?;
        let value = part
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| Error::parse(n, format!("expected `{key}=`, found `{part}`")))?;
        values.push(value);
    }
    if let Some(extra) = parts.next() {
        return Err(Error::parse(n, format!("unexpected `{extra}`")));
    }
    Ok(values)
}

fn number<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("invalid number `{s}`")))
}

fn header_line(keyword: &str, field: &Field) -> String {
    let p = field.characteristic();
    let m = field.degree();
    if m == 1 {
        return format!("{keyword} p={p} m=1");
    }
    let poly: Vec<String> = field
        .modulus()
        .iter()
        .map(|c| c.value().to_string())
        .collect();
    format!("{keyword} p={p} m={m} poly={}", poly.join(","))
}

pub fn write_field_header(field: &Field) -> String {
    let mut out = header_line("field", field);
    out.push('\n');
    let mut cur = field.tower_base();
    while let Some(base) = cur {
        out.push_str(&header_line("tower", base));
        out.push('\n');
        cur = base.tower_base();
    }
    out
}

fn parse_header(line: &str, n: usize, keyword: &str) -> Result<(u64, u32, Option<Vec<u64>>)> {
    let tokens = line.split_whitespace().count();
    let keys: &[&str] = if tokens == 3 {
        &["p", "m"]
    } else {
        &["p", "m", "poly"]
    };
    let v = fields(line, n, keyword, keys)?;
    let p = number(v[0], n)?;
    let m: u32 = number(v[1], n)?;
    let poly = v
        .get(2)
        .map(|s| {
            s.split(',')
                .map(|c| number(c, n))
                .collect::<Result<Vec<u64>>>()
        })
        .transpose()?;
    match (&poly, m) {
        (None, 1) => {}
        (Some(c), m) if m > 1 && c.len() == m as usize + 1 => {}
        _ => return Err(Error::parse(n, "polynomial does not match the degree")),
    }
    Ok((p, m, poly))
}

fn read_field(lines: &mut Lines<'_>) -> Result<Field> {
    let (n, line) = lines.next_line("field header")?;
    let mut headers = vec![(n, parse_header(line, n, "field")?)];
    while lines.peek_is("tower") {
        let (n, line) = lines.next_line("tower header")?;
        headers.push((n, parse_header(line, n, "tower")?));
    }
    let (n, (p, _, _)) = headers[0];
    let mut field = Field::prime(p).map_err(at_line(n))?;
    for &(n, (q, _, ref poly)) in headers.iter().rev() {
        if q != p {
            return Err(Error::parse(n, "tower characteristics differ"));
        }
        if let Some(poly) = poly {
            let modulus = poly
                .iter()
                .map(|&c| field.try_elem(c))
                .collect::<Result<Vec<Elem>>>()
                .map_err(at_line(n))?;
            field = Field::extension(&field, modulus).map_err(at_line(n))?;
        }
    }
    Ok(field)
}

pub fn parse_field_header(s: &str) -> Result<Field> {
    let mut lines = Lines::new(s);
    let f = read_field(&mut lines)?;
    lines.finish()?;
    Ok(f)
}

pub fn write_matrix(m: &Matrix) -> String {
    let f = m.field();
    let mut out = format!("matrix {} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&e| f.render(e)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_row(field: &Field, line: &str, n: usize) -> Result<Vec<Elem>> {
    line.split_whitespace()
        .map(|t| field.parse(t).map_err(at_line(n)))
        .collect()
}

fn read_matrix(lines: &mut Lines<'_>, field: &Field) -> Result<Matrix> {
    let (n, line) = lines.next_line("matrix header")?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some("matrix") {
        return Err(Error::parse(n, "expected `matrix <rows> <cols>`"));
    }
    let dims: Vec<usize> = parts.map(|t| number(t, n)).collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::parse(n, "expected `matrix <rows> <cols>`"));
    };
    let mut data = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (n, line) = lines.next_line("matrix row")?;
        let row = parse_row(field, line, n)?;
        if row.len() != cols {
            return Err(Error::parse(
                n,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        data.push(row);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Matrix::from_rows(field, &data)
}

pub fn parse_matrix(field: &Field, s: &str) -> Result<Matrix> {
    let mut lines = Lines::new(s);
    let m = read_matrix(&mut lines, field)?;
    lines.finish()?;
    Ok(m)
}

pub fn write_code(code: &LrcCode) -> String {
    let p = code.params();
    format!(
        "lrc v1\n{}params n={} r={} a={} h={}\n{}",
        write_field_header(code.field()),
        p.n,
        p.r,
        p.a,
        p.h,
        write_matrix(code.parity_check())
    )
}

fn expect_magic(lines: &mut Lines<'_>, magic: &str) -> Result<()> {
    let (n, line) = lines.next_line(magic)?;
    if line != magic {
        return Err(Error::parse(n, format!("expected `{magic}`")));
    }
    Ok(())
}

pub fn parse_code(s: &str) -> Result<LrcCode> {
    let mut lines = Lines::new(s);
    expect_magic(&mut lines, "lrc v1")?;
    let field = read_field(&mut lines)?;
    let (n, line) = lines.next_line("params line")?;
    let v = fields(line, n, "params", &["n", "r", "a", "h"])?;
    let nums: Vec<usize> = v.iter().map(|t| number(t, n)).collect::<Result<_>>()?;
    let params = LrcParams::new(nums[0], nums[1], nums[2], nums[3], &field).map_err(at_line(n))?;
    let hn = lines.last + 1;
    let h = read_matrix(&mut lines, &field)?;
    lines.finish()?;
    LrcCode::from_parity_check(params, &h).map_err(at_line(hn))
}

pub fn write_family(family: &TripleFamily) -> String {
    let f = family.field();
    let mut out = format!("triples v1\n{}", write_field_header(f));
    for t in family.triples() {
        let coords: Vec<String> = t
            .iter()
            .flat_map(|p| p.coords())
            .map(|e| f.render(e))
            .collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_family(s: &str) -> Result<TripleFamily> {
    let mut lines = Lines::new(s);
    expect_magic(&mut lines, "triples v1")?;
    let field = read_field(&mut lines)?;
    let mut points = Vec::new();
    while let Ok((n, line)) = lines.next_line("triple") {
        let row = parse_row(&field, line, n)?;
        if row.len() != 9 {
            return Err(Error::parse(
                n,
                format!("expected 9 coordinates, found {}", row.len()),
            ));
        }
        for c in row.chunks(3) {
            let p = ProjectivePoint::from_vec(&field, c).map_err(at_line(n))?;
            if p.coords() != [c[0], c[1], c[2]] {
                return Err(Error::parse(n, "point is not normalized"));
            }
            points.push(p);
        }
    }
    TripleFamily::new(&field, points)
}

/// Symbols separated by whitespace, `?` for an erasure.
pub fn write_symbols(field: &Field, symbols: &[Option<Elem>]) -> String {
    let parts: Vec<String> = symbols
        .iter()
        .map(|s| s.map_or_else(|| ERASED.to_string(), |e| field.render(e)))
        .collect();
    format!("{}\n", parts.join(" "))
}

pub fn parse_symbols(field: &Field, s: &str) -> Result<Vec<Option<Elem>>> {
    let mut out = Vec::new();
    for (i, line) in s.lines().enumerate() {
        for t in line.split_whitespace() {
            out.push(if t == ERASED {
                None
            } else {
                Some(field.parse(t).map_err(at_line(i + 1))?)
            });
        }
    }
    Ok(out)
}
