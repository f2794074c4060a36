//! Weighted straight-line fits with 95% intervals on the slope.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Half-width of the 95% confidence interval on the slope.
    pub half_width: f64,
    pub points: usize,
}

impl LineFit {
    pub fn ci(&self) -> (f64, f64) {
        (self.slope - self.half_width, self.slope + self.half_width)
    }
}

// two-sided 97.5% Student t quantiles, dof 1..=30
const T975: [f64; 30] = [
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228, 2.201, 2.179, 2.160,
    2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064, 2.060, 2.056,
    2.052, 2.048, 2.045, 2.042,
];

pub fn t_quantile_975(dof: usize) -> f64 {
    if dof == 0 {
        return f64::INFINITY;
    }
    if dof <= 30 {
        return T975[dof - 1];
    }
    let z = 1.959963984540054;
    let v = dof as f64;
    z + (z * z * z + z) / (4.0 * v)
}

/// Least squares for `y = a + b x` with weights `w(x)`.
pub fn weighted_line<W: Fn(f64) -> f64>(pts: &[(f64, f64)], w: W) -> Option<LineFit> {
    if pts.len() < 3 {
        return None;
    }
    let mut sw = 0.0;
    let mut sx = 0.0;
    let mut sy = 0.0;
    for &(x, y) in pts {
        let wi = w(x);
        sw += wi;
        sx += wi * x;
        sy += wi * y;
    }
    let mx = sx / sw;
    let my = sy / sw;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in pts {
        let wi = w(x);
        sxx += wi * (x - mx) * (x - mx);
        sxy += wi * (x - mx) * (y - my);
    }
    if sxx <= 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mut rss = 0.0;
    for &(x, y) in pts {
        let r = y - intercept - slope * x;
        rss += w(x) * r * r;
    }
    let dof = pts.len() - 2;
    let se = (rss / dof as f64 / sxx).sqrt();
    Some(LineFit { slope, intercept, half_width: t_quantile_975(dof) * se, points: pts.len() })
}
