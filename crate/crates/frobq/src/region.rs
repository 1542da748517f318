//! Multi-threaded region scan. Points are evaluated independently and the
//! report is assembled in sorted target order, so the output does not
//! depend on scheduling.

use frobq_core::oracle::cone_corner;
use frobq_core::{check_point, GeneratorPair, RegionReport, Result, TargetBox};
use rayon::prelude::*;

pub fn verify_box_par(pair: &GeneratorPair, bounds: &TargetBox) -> Result<RegionReport> {
    let corner = cone_corner(pair)?;
    let points: Vec<_> = bounds.points().collect();
    let rows = points
        .into_par_iter()
        .map(|t| check_point(pair, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionReport::assemble(corner, rows))
}

pub fn verify_region_par(pair: &GeneratorPair, pad: i128) -> Result<RegionReport> {
    let corner = cone_corner(pair)?;
    verify_box_par(pair, &TargetBox::around_corner(corner, pad)?)
}
