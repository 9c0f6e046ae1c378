//! Field spec parser: `Q`, `Q(sqrt,d)`, `Q(zeta,n)`, `Q(eta,n)`,
//! `fixed(k;h1,h2,...)`, `poly(c0,c1,...,1)`.

use super::{AbelianFieldRef, FieldError, FieldRef, PolyFieldRef};

fn perr(pos: usize, msg: impl Into<String>) -> FieldError {
    FieldError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_i64(s: &str, pos: usize) -> Result<i64, FieldError> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| perr(pos, format!("expected integer, found {s:?}")))
}

pub fn parse_field(input: &str) -> Result<FieldRef, FieldError> {
    let s = input.trim();
    if s == "Q" {
        return Ok(FieldRef::rationals());
    }
    if let Some(rest) = s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        let mut parts = rest.splitn(2, ',');
        let kind = parts.next().unwrap_or("").trim();
        let arg = parts
            .next()
            .ok_or_else(|| perr(2, "expected Q(<kind>,<arg>)"))?;
        let n = parse_i64(arg, 2)?;
        return match kind {
            "sqrt" => Ok(FieldRef::Abelian(AbelianFieldRef::from_sqrt(n)?)),
            "zeta" => {
                if n < 1 {
                    return Err(perr(2, "zeta index must be positive"));
                }
                Ok(FieldRef::Abelian(AbelianFieldRef::from_zeta(n as u32)))
            }
            "eta" => {
                if n < 1 {
                    return Err(perr(2, "eta index must be positive"));
                }
                Ok(FieldRef::Abelian(AbelianFieldRef::from_eta(n as u32)))
            }
            other => Err(perr(2, format!("unknown field constructor Q({other},...)"))),
        };
    }
    if let Some(rest) = s.strip_prefix("fixed(").and_then(|r| r.strip_suffix(')')) {
        let (k_str, h_str) = rest
            .split_once(';')
            .ok_or_else(|| perr(6, "expected fixed(<k>;<h1>,<h2>,...)"))?;
        let k = parse_i64(k_str, 6)?;
        if k < 1 {
            return Err(perr(6, "conductor must be positive"));
        }
        let mut gens = Vec::new();
        for part in h_str.split(',') {
            if part.trim().is_empty() {
                continue;
            }
            let h = parse_i64(part, 6)?;
            if h < 0 {
                return Err(perr(6, "subgroup residues must be non-negative"));
            }
            gens.push(h as u32);
        }
        return Ok(FieldRef::Abelian(AbelianFieldRef::new(k as u32, &gens)));
    }
    if let Some(rest) = s.strip_prefix("poly(").and_then(|r| r.strip_suffix(')')) {
        let coeffs: Result<Vec<i64>, _> = rest.split(',').map(|c| parse_i64(c, 5)).collect();
        return Ok(FieldRef::Poly(PolyFieldRef::new(coeffs?)?).normalized());
    }
    Err(perr(0, format!("unrecognized field spec {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for spec in ["Q", "Q(sqrt,-1)", "Q(sqrt,2)", "Q(zeta,8)", "Q(eta,16)"] {
            let f = parse_field(spec).unwrap();
            let printed = f.to_string();
            assert_eq!(parse_field(&printed).unwrap(), f, "{spec} -> {printed}");
        }
    }

    #[test]
    fn sqrt_minus_one_is_conductor_four() {
        let f = parse_field("Q(sqrt,-1)").unwrap();
        let FieldRef::Abelian(a) = f else { panic!() };
        assert_eq!(a.conductor(), 4);
        assert_eq!(a.subgroup(), &[1]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(parse_field("Q(sqrt,12)").is_err());
        assert!(parse_field("Q(cbrt,2)").is_err());
        assert!(parse_field("poly(4,0,0,0,1)").is_err()); // x^4+4 reducible
    }

    #[test]
    fn poly_degree_two_normalizes_to_abelian() {
        let f = parse_field("poly(1,0,1)").unwrap(); // x^2+1
        assert_eq!(f, parse_field("Q(sqrt,-1)").unwrap());
    }
}
