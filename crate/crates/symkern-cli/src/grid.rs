use std::str::FromStr;

/// A single value or an inclusive `start:stop:step` range.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |p: &str| p.trim().parse::<f64>().map_err(|_| format!("'{p}' is not a number"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(Grid(vec![num(v)?])),
            [a, b, h] => {
                let (a, b, h) = (num(a)?, num(b)?, num(h)?);
                if !(h > 0.0) || !a.is_finite() || !b.is_finite() {
                    return Err(format!("grid '{s}' needs finite ends and a positive step"));
                }
                if b < a {
                    return Err(format!("grid '{s}' has stop below start"));
                }
                let n = ((b - a) / h + 1e-9).floor() as usize;
                if n > 1_000_000 {
                    return Err(format!("grid '{s}' has more than a million points"));
                }
                // a + i h rather than accumulated sums, so points do not drift
                Ok(Grid((0..=n).map(|i| a + i as f64 * h).collect()))
            }
            _ => Err(format!("grid '{s}' is neither a number nor start:stop:step")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values_and_ranges() {
        assert_eq!("2.5".parse::<Grid>().unwrap().0, vec![2.5]);
        let g: Grid = "0:1:0.25".parse().unwrap();
        assert_eq!(g.0, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!("0:10:0.1".parse::<Grid>().unwrap().0.len(), 101);
        assert_eq!("0.1:2:0.1".parse::<Grid>().unwrap().0.len(), 20);
        assert!("1:0:0.1".parse::<Grid>().is_err());
        assert!("0:1:0".parse::<Grid>().is_err());
        assert!("0:1".parse::<Grid>().is_err());
        assert!("x".parse::<Grid>().is_err());
    }
}
