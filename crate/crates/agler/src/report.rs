//! Plain-text verdict tables and the complex-literal parser for `--point`.

use agler_core::C64;

#[derive(Clone, Debug)]
pub struct Row {
    pub check: String,
    pub value: String,
    /// `None` renders as an informational row without a verdict.
    pub pass: Option<bool>,
}

impl Row {
    pub fn new(check: impl Into<String>, value: impl Into<String>, pass: Option<bool>) -> Self {
        Row { check: check.into(), value: value.into(), pass }
    }
}

pub fn print_table(title: &str, rows: &[Row]) {
    println!("{title}");
    let w_check = rows.iter().map(|r| r.check.len()).max().unwrap_or(0).max(5);
    let w_value = rows.iter().map(|r| r.value.len()).max().unwrap_or(0).max(5);
    println!("  {:-<w_check$}  {:-<w_value$}  ------", "", "");
    for r in rows {
        let verdict = match r.pass {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "",
        };
        println!("  {:<w_check$}  {:<w_value$}  {verdict}", r.check, r.value);
    }
}

pub fn all_pass(rows: &[Row]) -> bool {
    rows.iter().all(|r| r.pass != Some(false))
}

/// Formats a complex number the way `parse_complex` reads it back; f64
/// Display is shortest-round-trip, so the text is bit-faithful.
pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses complex literals: `0.5`, `-0.3i`, `0.1+0.2i`, `1-0.5i`, `i`, `-i`,
/// `3e-2+1e-1i`.
pub fn parse_complex(text: &str) -> Result<C64, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // find a +/- separating real and imaginary parts (not leading, not
        // part of an exponent)
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().map_err(|e| format!("bad real part: {e}"))?;
                let im_text = &body[k..];
                let im: f64 = match im_text {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_text.parse().map_err(|e| format!("bad imaginary part: {e}"))?,
                };
                Ok(C64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    "+" => 1.0,
                    _ => body.parse().map_err(|e| format!("bad imaginary part: {e}"))?,
                };
                Ok(C64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|e| format!("bad number: {e}"))?;
        Ok(C64::new(re, 0.0))
    }
}

/// Parses a comma-separated point such as `0.1+0.2i, -0.3, 0.5i`.
pub fn parse_point(text: &str) -> Result<Vec<C64>, String> {
    text.split(',').map(parse_complex).collect()
}
