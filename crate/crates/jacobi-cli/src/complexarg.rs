//! Complex numbers on the command line.
//!
//! Accepted grammar (no internal whitespace):
//!   "re,im"      both parts, comma separated:  "0.5,-0.25"
//!   "a+bi"/"a-bi" cartesian with i suffix:     "0.5-0.25i"
//!   "bi"          pure imaginary:              "2i", "-i", "1.5e-3i"
//!   "a"           pure real:                   "0.7", "-2e-4"

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some((re, im)) = s.split_once(',') {
        let re = re
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("bad real part `{re}`"))?;
        let im = im
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("bad imaginary part `{im}`"))?;
        return Ok(Complex64::new(re, im));
    }
    if let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('I')) {
        // find the split between real and imaginary parts: the last +/-
        // that is not a leading sign and not an exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-')
                && !matches!(bytes[idx - 1], b'e' | b'E')
            {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            re_str
                .parse::<f64>()
                .map_err(|_| format!("bad real part `{re_str}`"))?
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad imaginary part `{other}`"))?,
        };
        return Ok(Complex64::new(re, im));
    }
    s.parse::<f64>()
        .map(|re| Complex64::new(re, 0.0))
        .map_err(|_| format!("`{s}` is not a complex literal (use re,im or a+bi)"))
}

/// Format with 15 significant decimal digits past the leading one,
/// matching the evaluation output contract.
pub fn sig_digits(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000000".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..15).contains(&exp) {
        let decimals = (15 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.15e}")
    }
}

pub fn format_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        sig_digits(v.re)
    } else if v.re == 0.0 {
        format!("{}i", sig_digits(v.im))
    } else if v.im < 0.0 {
        format!("{} - {}i", sig_digits(v.re), sig_digits(-v.im))
    } else {
        format!("{} + {}i", sig_digits(v.re), sig_digits(v.im))
    }
}
