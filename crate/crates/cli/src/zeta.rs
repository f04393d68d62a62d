//! Zeta-axis construction: uniform grids and Farey (mediant) enumeration of
//! reduced rationals up to a denominator bound.

use gauss_talbot::{FractionalDistance, ZetaAxis};

/// Parses `start:stop:count`.
pub fn parse_grid(s: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:count, got '{s}'"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start '{}'", parts[0]))?;
    let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop '{}'", parts[1]))?;
    let count: usize = parts[2].parse().map_err(|_| format!("bad grid count '{}'", parts[2]))?;
    if count == 0 {
        return Err("grid count must be >= 1".into());
    }
    if stop < start {
        return Err("grid stop must be >= start".into());
    }
    Ok((start, stop, count))
}

/// All reduced fractions in `[0, 1]` with denominator at most `qmax`,
/// ascending (the Farey sequence), by the next-term recurrence.
fn farey_unit(qmax: u64) -> Vec<(u64, u64)> {
    let mut out = vec![(0u64, 1u64)];
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, qmax);
    while c <= qmax {
        out.push((c, d));
        let k = (qmax + b) / d;
        let (na, nb) = (c, d);
        let (nc, nd) = (k * c - a, k * d - b);
        (a, b, c, d) = (na, nb, nc, nd);
    }
    out
}

/// Positive rationals with denominator at most `qmax` covering
/// `[start, stop]`, as a Farey-sampled zeta axis.
pub fn farey_axis(start: f64, stop: f64, qmax: u64) -> Result<ZetaAxis, String> {
    if qmax == 0 {
        return Err("farey bound must be >= 1".into());
    }
    let unit = farey_unit(qmax);
    let mut fracs = Vec::new();
    let lo = start.max(0.0).floor() as u64;
    let hi = stop.ceil() as u64;
    for offset in lo..=hi {
        for &(n, d) in &unit {
            let num = offset * d + n;
            if num == 0 {
                continue;
            }
            let v = num as f64 / d as f64;
            if v < start - 1e-12 || v > stop + 1e-12 {
                continue;
            }
            let f = FractionalDistance::new(num, d).map_err(|e| e.to_string())?;
            if fracs.last() != Some(&f) {
                fracs.push(f);
            }
        }
    }
    fracs.dedup();
    if fracs.is_empty() {
        return Err(format!("no rationals with q <= {qmax} in [{start}, {stop}]"));
    }
    Ok(ZetaAxis::Fractions(fracs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parse() {
        assert_eq!(parse_grid("0:1:256").unwrap(), (0.0, 1.0, 256));
        assert!(parse_grid("1:0:4").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
    }

    #[test]
    fn farey_five() {
        let f = farey_unit(5);
        let expect = [
            (0u64, 1u64),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (1, 2),
            (3, 5),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 1),
        ];
        assert_eq!(f, expect);
    }

    #[test]
    fn farey_axis_skips_zero_and_covers_range() {
        let ZetaAxis::Fractions(fr) = farey_axis(0.0, 1.0, 4).unwrap() else {
            panic!("expected fractions")
        };
        let vals: Vec<String> = fr.iter().map(|f| f.to_string()).collect();
        assert_eq!(vals, ["1/4", "1/3", "1/2", "2/3", "3/4", "1/1"]);

        let ZetaAxis::Fractions(fr) = farey_axis(1.0, 2.0, 2).unwrap() else {
            panic!("expected fractions")
        };
        let vals: Vec<String> = fr.iter().map(|f| f.to_string()).collect();
        assert_eq!(vals, ["1/1", "3/2", "2/1"]);
    }
}
