//! `--cut` arguments: an explicit mode list or a named cut.

use anyhow::{bail, Context, Result};

use cvcluster::Bipartition;

use crate::source::Source;

/// Parses `SPEC` into the bipartition whose first side it names.
///
/// * `0,2,5`: those modes.
/// * `odd-even`: the odd-indexed modes 1, 3, 5, ...
/// * `diagonal`: the central anti-diagonal `r + c = l − 1` of a grid.
/// * `row:k`: row `k` of a grid, counted from 0 at the top.
pub fn parse_cut(spec: &str, source: &Source) -> Result<Bipartition> {
    let n = source.graph.n_vertices();
    let spec = spec.trim();
    let side: Vec<usize> = match spec {
        "odd-even" => (1..n).step_by(2).collect(),
        "diagonal" => {
            let l = source.require_grid("the diagonal cut")?;
            (0..l).map(|r| r * l + (l - 1 - r)).collect()
        }
        _ if spec.starts_with("row:") => {
            let l = source.require_grid("a row cut")?;
            let k: usize = spec[4..].parse().with_context(|| format!("bad row in `{spec}`"))?;
            if k >= l {
                bail!("row {k} is outside a grid with {l} rows");
            }
            (k * l..(k + 1) * l).collect()
        }
        _ => spec
            .split(',')
            .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad mode `{t}` in cut `{spec}`")))
            .collect::<Result<_>>()?,
    };
    Ok(Bipartition::new(n, side)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::Family;

    fn grid(l: usize) -> Source {
        Source::from_family(Family::Grid, l).unwrap()
    }

    #[test]
    fn named_cuts() {
        assert_eq!(parse_cut("diagonal", &grid(3)).unwrap().side_a(), vec![2, 4, 6]);
        assert_eq!(parse_cut("row:1", &grid(3)).unwrap().side_a(), vec![3, 4, 5]);
        let path = Source::from_family(Family::Path, 5).unwrap();
        assert_eq!(parse_cut("odd-even", &path).unwrap().side_a(), vec![1, 3]);
        assert_eq!(parse_cut(" 0, 4 ", &path).unwrap().side_a(), vec![0, 4]);
    }

    #[test]
    fn invalid_cuts() {
        let path = Source::from_family(Family::Path, 4).unwrap();
        assert!(parse_cut("diagonal", &path).is_err());
        assert!(parse_cut("row:3", &grid(3)).is_err());
        assert!(parse_cut("0,9", &path).is_err());
        assert!(parse_cut("0,1,2,3", &path).is_err());
        assert!(parse_cut("x", &path).is_err());
    }
}
