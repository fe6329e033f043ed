//! Grammars for the command line: bicomplex literals, polynomial specs,
//! windows, resolutions, slice axes and colors.
//!
//! Bicomplex literals come in two spellings:
//!
//! - `(re,i1,i2,j)` — the four real coefficients;
//! - `e1e2(w1re,w1im;w2re,w2im)` — the idempotent components.

use std::fmt;

use bijulia_core::{Bicomplex, BicomplexPoly, Complex, IdempotentPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

fn parse_f64(s: &str) -> Result<f64, ParseError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| ParseError(format!("expected a number, got `{s}`")))
}

fn split_reals(body: &str, sep: char, want: usize, what: &str) -> Result<Vec<f64>, ParseError> {
    let parts: Vec<&str> = body.split(sep).collect();
    if parts.len() != want {
        return err(format!("{what} needs {want} values separated by `{sep}`, got `{body}`"));
    }
    parts.iter().map(|p| parse_f64(p)).collect()
}

/// Parse one bicomplex literal.
pub fn parse_bicomplex(s: &str) -> Result<Bicomplex, ParseError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("e1e2(") {
        let Some(body) = rest.strip_suffix(')') else {
            return err(format!("unterminated idempotent literal `{s}`"));
        };
        let halves: Vec<&str> = body.split(';').collect();
        if halves.len() != 2 {
            return err(format!("idempotent literal needs `;` between components: `{s}`"));
        }
        let w1 = split_reals(halves[0], ',', 2, "idempotent component")?;
        let w2 = split_reals(halves[1], ',', 2, "idempotent component")?;
        return Ok(Bicomplex::from_idempotent(IdempotentPair::new(
            Complex::new(w1[0], w1[1]),
            Complex::new(w2[0], w2[1]),
        )));
    }
    if let Some(rest) = s.strip_prefix('(') {
        let Some(body) = rest.strip_suffix(')') else {
            return err(format!("unterminated literal `{s}`"));
        };
        let v = split_reals(body, ',', 4, "bicomplex literal")?;
        return Ok(Bicomplex::from_reals(v[0], v[1], v[2], v[3]));
    }
    err(format!(
        "expected `(re,i1,i2,j)` or `e1e2(w1re,w1im;w2re,w2im)`, got `{s}`"
    ))
}

/// Parse a polynomial spec from positional tokens:
/// `quad c=<bicomplex>` or `coeffs <a0> <a1> ... <ad>`.
pub fn parse_poly(tokens: &[String]) -> Result<BicomplexPoly, ParseError> {
    let Some(head) = tokens.first() else {
        return err("missing polynomial spec (`quad c=...` or `coeffs ...`)");
    };
    match head.as_str() {
        "quad" => {
            let Some(ctok) = tokens.get(1) else {
                return err("`quad` needs `c=<bicomplex>`");
            };
            let Some(lit) = ctok.strip_prefix("c=") else {
                return err(format!("expected `c=<bicomplex>`, got `{ctok}`"));
            };
            if tokens.len() > 2 {
                return err(format!("unexpected token after quad spec: `{}`", tokens[2]));
            }
            Ok(BicomplexPoly::quadratic(parse_bicomplex(lit)?))
        }
        "coeffs" => {
            if tokens.len() < 2 {
                return err("`coeffs` needs at least one coefficient");
            }
            let coeffs = tokens[1..]
                .iter()
                .map(|t| parse_bicomplex(t))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(BicomplexPoly::new(coeffs))
        }
        other => err(format!("unknown polynomial spec `{other}` (want `quad` or `coeffs`)")),
    }
}

/// Pull `key=<bicomplex>` out of a token list.
pub fn take_point(tokens: &mut Vec<String>, key: &str) -> Result<Bicomplex, ParseError> {
    let prefix = format!("{key}=");
    let Some(at) = tokens.iter().position(|t| t.starts_with(&prefix)) else {
        return err(format!("missing `{key}=<bicomplex>`"));
    };
    let tok = tokens.remove(at);
    parse_bicomplex(&tok[prefix.len()..])
}

/// Pull `n=<int>` out of a token list.
pub fn take_count(tokens: &mut Vec<String>, key: &str) -> Result<u32, ParseError> {
    let prefix = format!("{key}=");
    let Some(at) = tokens.iter().position(|t| t.starts_with(&prefix)) else {
        return err(format!("missing `{key}=<count>`"));
    };
    let tok = tokens.remove(at);
    let n: u32 = tok[prefix.len()..]
        .parse()
        .map_err(|_| ParseError(format!("expected an integer in `{tok}`")))?;
    if n == 0 {
        return err(format!("`{key}` must be at least 1"));
    }
    Ok(n)
}

/// `lo:hi` or comma-separated per-axis list (`lo:hi,lo:hi[,lo:hi]`).
pub fn parse_window(s: &str, axes: usize) -> Result<Vec<(f64, f64)>, ParseError> {
    let ranges: Vec<&str> = s.split(',').collect();
    if ranges.len() != 1 && ranges.len() != axes {
        return err(format!("window needs 1 or {axes} ranges, got `{s}`"));
    }
    let mut out = Vec::with_capacity(axes);
    for r in &ranges {
        let parts: Vec<&str> = r.split(':').collect();
        if parts.len() != 2 {
            return err(format!("window range must be `lo:hi`, got `{r}`"));
        }
        let lo = parse_f64(parts[0])?;
        let hi = parse_f64(parts[1])?;
        if !(lo < hi) {
            return err(format!("window `{r}` is empty"));
        }
        out.push((lo, hi));
    }
    if out.len() == 1 {
        let only = out[0];
        out = vec![only; axes];
    }
    Ok(out)
}

/// `65` or per-axis `65,65,65`.
pub fn parse_resolution(s: &str, axes: usize) -> Result<Vec<usize>, ParseError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 1 && parts.len() != axes {
        return err(format!("resolution needs 1 or {axes} values, got `{s}`"));
    }
    let mut out = Vec::with_capacity(axes);
    for p in &parts {
        let n: usize = p
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("expected an integer, got `{p}`")))?;
        if n < 2 {
            return err(format!("resolution must be at least 2, got {n}"));
        }
        out.push(n);
    }
    if out.len() == 1 {
        out = vec![out[0]; axes];
    }
    Ok(out)
}

fn axis_index(name: &str) -> Result<usize, ParseError> {
    match name.trim() {
        "w0" | "re" => Ok(0),
        "w1" | "i1" => Ok(1),
        "w2" | "i2" => Ok(2),
        "w3" | "j" => Ok(3),
        other => err(format!("unknown axis `{other}` (want w0/re, w1/i1, w2/i2, w3/j)")),
    }
}

/// `j=0` or `w2=0,w3=0`: pinned axes with their values.
pub fn parse_slice(s: &str) -> Result<[Option<f64>; 4], ParseError> {
    let mut fixed = [None; 4];
    for part in s.split(',') {
        let Some((name, value)) = part.split_once('=') else {
            return Err(ParseError(format!("slice entry must be `axis=value`, got `{part}`")));
        };
        let axis = axis_index(name)?;
        if fixed[axis].is_some() {
            return err(format!("axis `{name}` pinned twice"));
        }
        fixed[axis] = Some(parse_f64(value)?);
    }
    Ok(fixed)
}

/// Camera spec `w2`, `w2-`, `w0+` ...: the view axis in world names, with
/// an optional direction sign (default looks along the negative axis).
pub fn parse_camera(s: &str, free: &[usize]) -> Result<(usize, f64), ParseError> {
    let (name, sign) = match s.strip_suffix(['+', '-']) {
        Some(base) if s.ends_with('+') => (base, 1.0),
        Some(base) => (base, -1.0),
        None => (s, -1.0),
    };
    let axis = axis_index(name)?;
    match free.iter().position(|&a| a == axis) {
        Some(pos) => Ok((pos, sign)),
        None => err(format!("camera axis `{name}` is pinned by the slice")),
    }
}

/// `RRGGBB` hex color.
pub fn parse_rgb(s: &str) -> Result<[u8; 3], ParseError> {
    let t = s.trim().trim_start_matches('#');
    if t.len() != 6 || !t.chars().all(|c| c.is_ascii_hexdigit()) {
        return err(format!("expected RRGGBB hex color, got `{s}`"));
    }
    let channel = |at: usize| u8::from_str_radix(&t[at..at + 2], 16).unwrap();
    Ok([channel(0), channel(2), channel(4)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bicomplex_literals() {
        assert_eq!(
            parse_bicomplex("(0.27,0,0,0)").unwrap(),
            Bicomplex::from_re(0.27)
        );
        assert_eq!(
            parse_bicomplex("(0,1,0,0)").unwrap(),
            Bicomplex::I1
        );
        let mixed = parse_bicomplex("e1e2(0.26,0;-1.754878,0)").unwrap();
        let pair = mixed.to_idempotent();
        assert!((pair.w1.re - 0.26).abs() < 1e-12);
        assert!((pair.w2.re + 1.754878).abs() < 1e-12);

        assert!(parse_bicomplex("(1,2,3)").is_err());
        assert!(parse_bicomplex("e1e2(1,2)").is_err());
        assert!(parse_bicomplex("nope").is_err());
    }

    #[test]
    fn poly_specs() {
        let tokens = vec!["quad".to_string(), "c=(0,0,0,0)".to_string()];
        assert_eq!(parse_poly(&tokens).unwrap().degree(), Some(2));

        let tokens: Vec<String> = ["coeffs", "(1,0,0,0)", "(0,0,0,0)", "(0,1,1,0)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let p = parse_poly(&tokens).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeffs()[2], Bicomplex::I1 + Bicomplex::I2);

        assert!(parse_poly(&[]).is_err());
        assert!(parse_poly(&["cubic".to_string()]).is_err());
        assert!(parse_poly(&["quad".to_string()]).is_err());
    }

    #[test]
    fn windows_and_resolutions() {
        assert_eq!(
            parse_window("-1.5:1.5", 3).unwrap(),
            vec![(-1.5, 1.5); 3]
        );
        assert_eq!(
            parse_window("-1:1,0:2", 2).unwrap(),
            vec![(-1.0, 1.0), (0.0, 2.0)]
        );
        assert!(parse_window("1:-1", 2).is_err());
        assert!(parse_window("-1:1,0:2", 3).is_err());

        assert_eq!(parse_resolution("65", 3).unwrap(), vec![65, 65, 65]);
        assert_eq!(parse_resolution("4,8", 2).unwrap(), vec![4, 8]);
        assert!(parse_resolution("1", 2).is_err());
    }

    #[test]
    fn slices_and_cameras() {
        assert_eq!(parse_slice("j=0").unwrap(), [None, None, None, Some(0.0)]);
        assert_eq!(
            parse_slice("w2=0,w3=0.5").unwrap(),
            [None, None, Some(0.0), Some(0.5)]
        );
        assert!(parse_slice("j=0,j=1").is_err());
        assert!(parse_slice("w9=0").is_err());

        let free = [0usize, 1, 2];
        assert_eq!(parse_camera("w2", &free).unwrap(), (2, -1.0));
        assert_eq!(parse_camera("w0+", &free).unwrap(), (0, 1.0));
        assert!(parse_camera("j", &free).is_err());
    }

    #[test]
    fn colors() {
        assert_eq!(parse_rgb("ff8000").unwrap(), [255, 128, 0]);
        assert_eq!(parse_rgb("#102030").unwrap(), [16, 32, 48]);
        assert!(parse_rgb("12345").is_err());
        assert!(parse_rgb("zzzzzz").is_err());
    }
}
