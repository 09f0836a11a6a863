//! Data series for each figure of the grid study.

use anyhow::Result;
use clap::ValueEnum;

use crate::source::{CutKind, Family, Source};
use crate::sweep::{Row, SweepSpec, Task};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// EW, diagonal and rectangular widths against B, 3×3 grid.
    Fig4a,
    /// The same for the 4×4 grid.
    Fig4b,
    /// Diagonal and rectangular EE widths against l ≤ 15.
    Fig5,
    /// LNW and both decomposition LN widths against B with loss, 3×3 and 4×4.
    Fig6,
    /// Diagonal and rectangular LN widths against l ≤ 15 with loss.
    Fig7,
}

impl Figure {
    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig4a => "fig4a",
            Figure::Fig4b => "fig4b",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
        }
    }

    /// B values used when none are given on the command line.
    pub fn default_b(self) -> Vec<f64> {
        match self {
            Figure::Fig5 | Figure::Fig7 => vec![0.5, 1.0, 2.0, 4.0],
            _ => crate::format::default_b_grid(),
        }
    }

    pub fn spec(self, b_values: Vec<f64>, cap: usize) -> Result<SweepSpec> {
        let grids = |sizes: &[usize]| -> Result<Vec<Source>> {
            sizes.iter().map(|&l| Source::from_family(Family::Grid, l)).collect()
        };
        let all = vec![Task::ExactWidth, Task::DiagonalWidth, Task::RectangularWidth];
        let named = vec![Task::DiagonalWidth, Task::RectangularWidth];
        let long: Vec<usize> = (2..=15).collect();
        let (sources, eta_values, kind, tasks) = match self {
            Figure::Fig4a => (grids(&[3])?, vec![1.0], CutKind::Ee, all),
            Figure::Fig4b => (grids(&[4])?, vec![1.0], CutKind::Ee, all),
            Figure::Fig5 => (grids(&long)?, vec![1.0], CutKind::Ee, named),
            Figure::Fig6 => (grids(&[3, 4])?, vec![1.0, 0.9, 0.5, 0.25], CutKind::Ln, all),
            Figure::Fig7 => (grids(&long)?, vec![1.0, 0.9, 0.5], CutKind::Ln, named),
        };
        Ok(SweepSpec {
            sources,
            b_values,
            eta_values,
            kind,
            tasks,
            cut: None,
            cap,
        })
    }
}

/// Grid points where the exact width lies strictly below both named widths.
pub fn suboptimal_points(rows: &[Row]) -> Vec<(usize, f64, f64)> {
    let mut out = Vec::new();
    for group in rows.chunks(3) {
        if let [exact, diag, rect] = group {
            if exact.task == Task::ExactWidth.name()
                && exact.value < diag.value - 1e-9
                && exact.value < rect.value - 1e-9
            {
                out.push((exact.l_or_n, exact.b, exact.eta));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_grids() {
        let fig6 = Figure::Fig6.spec(Figure::Fig6.default_b(), 20).unwrap();
        assert_eq!(fig6.sources.iter().map(|s| s.size).collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(fig6.eta_values, vec![1.0, 0.9, 0.5, 0.25]);
        assert_eq!(fig6.b_values.len(), 25);
        assert_eq!(fig6.kind, CutKind::Ln);
        let fig7 = Figure::Fig7.spec(vec![2.0], 20).unwrap();
        assert_eq!(fig7.sources.last().unwrap().size, 15);
        assert_eq!(fig7.tasks, vec![Task::DiagonalWidth, Task::RectangularWidth]);
        for fig in [Figure::Fig4a, Figure::Fig4b, Figure::Fig5, Figure::Fig6, Figure::Fig7] {
            fig.spec(fig.default_b(), 20).unwrap().validate().unwrap();
        }
    }
}
