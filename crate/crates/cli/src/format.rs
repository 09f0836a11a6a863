/// Rounds to 12 significant digits. Printing the result with `{}` gives the
/// shortest decimal that reads back to it, so plain and JSON output agree.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Parses `a,b,c` where any item may be an inclusive range `lo..hi`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start in `{item}`"))?;
            let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end in `{item}`"))?;
            if lo > hi {
                return Err(format!("empty range `{item}`"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().map_err(|_| format!("bad size `{item}`"))?);
        }
    }
    Ok(out)
}

/// The default B grid: 25 points log-spaced from 0.25 to 8.
pub fn default_b_grid() -> Vec<f64> {
    (0..25).map(|k| 0.25 * 32f64.powf(k as f64 / 24.0)).collect()
}
