//! Value parsers for command-line arguments. Errors are plain strings so clap
//! can report them as usage errors.

use pseudoeuclid::{ExtendedAngle, KleinIndex, Point};

pub fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// `x,y`
pub fn point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    Ok(Point::new(finite(x)?, finite(y)?))
}

/// `a,b,c`
pub fn triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    Ok([finite(parts[0])?, finite(parts[1])?, finite(parts[2])?])
}

/// A number, or `atanh(r)` with `|r| < 1`, optionally negated.
pub fn theta(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('-') {
        if rest.trim_start().starts_with("atanh") {
            return theta(rest).map(|t| -t);
        }
    }
    if let Some(arg) = s.strip_prefix("atanh(").and_then(|r| r.strip_suffix(')')) {
        let r = finite(arg)?;
        if r.abs() >= 1.0 {
            return Err(format!("atanh needs |r| < 1, got {r}"));
        }
        return Ok(r.atanh());
    }
    finite(s)
}

/// `<theta>,<k>` with `k` one of `+1`, `+h`, `-1`, `-h`.
pub fn angle(s: &str) -> Result<ExtendedAngle, String> {
    let (t, k) = s
        .rsplit_once(',')
        .ok_or_else(|| format!("expected `<theta>,<k>`, got `{s}`"))?;
    let k = KleinIndex::parse(k.trim()).ok_or_else(|| format!("unknown Klein index `{k}`; use +1, +h, -1 or -h"))?;
    ExtendedAngle::new(theta(t)?, k).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRange {
    pub from: f64,
    pub to: f64,
    pub n: usize,
}

impl SampleRange {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.to - self.from) / (self.n - 1) as f64;
        (0..self.n).map(move |i| {
            if i == self.n - 1 {
                self.to
            } else {
                self.from + step * i as f64
            }
        })
    }
}

/// `from:to:n`, `from < to`, `n ≥ 2`.
pub fn range(s: &str) -> Result<SampleRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [from, to, n] = parts[..] else {
        return Err(format!("expected `from:to:n`, got `{s}`"));
    };
    let (from, to) = (finite(from)?, finite(to)?);
    let n: usize = n.trim().parse().map_err(|_| format!("`{n}` is not a sample count"))?;
    if n < 2 {
        return Err("need at least two samples".into());
    }
    if from >= to {
        return Err(format!("empty range {from}..{to}"));
    }
    Ok(SampleRange { from, to, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        let a = angle("atanh(0.6),+1").unwrap();
        assert_eq!(a.theta(), 0.6f64.atanh());
        assert_eq!(a.k(), KleinIndex::P1);
        let a = angle("-atanh(0.5),-h").unwrap();
        assert_eq!(a.theta(), -(0.5f64.atanh()));
        assert_eq!(a.k(), KleinIndex::MH);
        assert_eq!(angle("1.5,+h").unwrap().theta(), 1.5);
        assert!(angle("atanh(1),+1").is_err());
        assert!(angle("0.3,+2").is_err());
        assert!(angle("0.3").is_err());
        assert!(angle("400,+1").is_err());
    }

    #[test]
    fn points_and_triples() {
        assert_eq!(point("5,-3").unwrap(), Point::new(5.0, -3.0));
        assert!(point("5").is_err());
        assert!(point("x,1").is_err());
        assert!(point("nan,1").is_err());
        assert_eq!(triple("1,1,100").unwrap(), [1.0, 1.0, 100.0]);
        assert!(triple("1,1").is_err());
    }

    #[test]
    fn ranges() {
        let r = range("0:6.283:1000").unwrap();
        assert_eq!(r.n, 1000);
        let v: Vec<f64> = range("-2:2:5").unwrap().values().collect();
        assert_eq!(v, [-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert!(range("0:1:1").is_err());
        assert!(range("1:0:5").is_err());
        assert!(range("0:1").is_err());
    }
}
