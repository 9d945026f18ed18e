//! Value lists `a,b,c` and ranges `start:step:stop`.

/// Parses a single number, a comma-separated list, or `start:step:stop`
/// (stop included when within half a step).
pub fn parse_values(s: &str) -> Result<Vec<f64>, String> {
    let s = s.trim();
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, h, b] = parts.as_slice() else {
            return Err(format!("range must be start:step:stop, got '{s}'"));
        };
        return range(number(a)?, number(h)?, number(b)?);
    }
    s.split(',').map(number).collect()
}

fn number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("not a number: '{}'", s.trim()))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not a finite number: '{}'", s.trim()))
    }
}

pub fn range(start: f64, step: f64, stop: f64) -> Result<Vec<f64>, String> {
    if !(step > 0.0) {
        return Err(format!("range step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("range stop {stop} is below start {start}"));
    }
    let steps = (stop - start) / step;
    if steps > 1e7 {
        return Err(format!("range {start}:{step}:{stop} has too many points"));
    }
    let k = (steps + 0.5).floor();
    let count = k as usize + 1;
    // Decimal steps: x_i = (m + i) / q with integers m, q is correctly rounded.
    let q = (1.0 / step).round();
    let m = (start * q).round();
    if q >= 1.0 && near(1.0 / step, q) && near(start * q, m) {
        return Ok((0..count).map(|i| (m + i as f64) / q).collect());
    }
    // A step that divides the interval hits the endpoint exactly.
    if k > 0.0 && near(steps, k) {
        let span = stop - start;
        return Ok((0..count)
            .map(|i| if i + 1 == count { stop } else { start + span * i as f64 / k })
            .collect());
    }
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * b.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_range() {
        let v = parse_values("0:0.5:5").unwrap();
        assert_eq!(v.len(), 11);
        assert_eq!(v[4], 2.0);
        assert_eq!(v[10], 5.0);
        let v = parse_values("-2.5:0.05:2.5").unwrap();
        assert_eq!(v.len(), 101);
        assert_eq!(v[50], 0.0);
        assert_eq!(v[49], -0.05);
        let v = parse_values("0.1:0.1:2").unwrap();
        assert_eq!(v.len(), 20);
        assert_eq!(v[2], 0.3);
        let v = parse_values("0:0.3:0.9").unwrap();
        assert_eq!(v[3], 0.9);
    }

    #[test]
    fn half_step_rule() {
        assert_eq!(parse_values("0:1:2.4").unwrap(), vec![0.0, 1.0, 2.0]);
        assert_eq!(parse_values("0:1:2.6").unwrap(), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(parse_values("1:1:1").unwrap(), vec![1.0]);
    }

    #[test]
    fn lists_and_errors() {
        assert_eq!(parse_values("1, 2,3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_values("-0.5").unwrap(), vec![-0.5]);
        assert!(parse_values("1:0:2").is_err());
        assert!(parse_values("2:1:1").is_err());
        assert!(parse_values("a").is_err());
        assert!(parse_values("1:2").is_err());
        assert!(parse_values("nan").is_err());
    }
}
