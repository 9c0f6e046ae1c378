//! Group spec parser: family atoms with parameters, products joined by
//! `x`, quotients as `<spec>/<word,word,...>` with words over the built
//! group's generator labels.

use super::families::{build_product, GroupSpec};
use super::{quotient, FiniteGroup, GroupError, DEFAULT_PRODUCT_CAP};
use std::sync::Arc;

fn perr(pos: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Split at top-level occurrences of a separator (bracket-depth aware).
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_u32(s: &str, pos: usize) -> Result<u32, GroupError> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| perr(pos, format!("expected positive integer, found {s:?}")))
}

/// Parse one family atom like `W1[2]` or `S[1,C4,C2]` into a spec.
pub fn parse_spec_atom(s: &str) -> Result<GroupSpec, GroupError> {
    let s = s.trim();
    let (name, args) = match s.find('[') {
        None => (s, vec![]),
        Some(i) => {
            let inner = s[i..]
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| perr(i, "unbalanced brackets in group spec"))?;
            (&s[..i], split_top_level(inner, ','))
        }
    };
    // `C4`, `D16`, `Q8`, `Dplus16` are accepted shorthands; digit suffixes
    // are unambiguous for these families only
    for (prefix, make) in [
        ("Dplus", GroupSpec::Dplus as fn(u32) -> GroupSpec),
        ("Dminus", GroupSpec::Dminus as fn(u32) -> GroupSpec),
        ("C", GroupSpec::C as fn(u32) -> GroupSpec),
        ("D", GroupSpec::D as fn(u32) -> GroupSpec),
        ("Q", GroupSpec::Q as fn(u32) -> GroupSpec),
    ] {
        if let Some(digits) = name.strip_prefix(prefix) {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) && args.is_empty() {
                return Ok(make(parse_u32(digits, 0)?));
            }
        }
    }
    let one_arg = |args: &[&str]| -> Result<u32, GroupError> {
        if args.len() != 1 {
            return Err(perr(0, format!("{name} takes exactly one parameter")));
        }
        parse_u32(args[0], 0)
    };
    let no_args = |args: &[&str]| -> Result<(), GroupError> {
        if args.is_empty() {
            Ok(())
        } else {
            Err(perr(0, format!("{name} takes no parameters")))
        }
    };
    Ok(match name {
        "C" => GroupSpec::C(one_arg(&args)?),
        "D" => GroupSpec::D(one_arg(&args)?),
        "Q" => GroupSpec::Q(one_arg(&args)?),
        "Dplus" => GroupSpec::Dplus(one_arg(&args)?),
        "Dminus" => GroupSpec::Dminus(one_arg(&args)?),
        "W" => {
            no_args(&args)?;
            GroupSpec::W
        }
        "W1" => GroupSpec::W1(one_arg(&args)?),
        "W2" => GroupSpec::W2(one_arg(&args)?),
        "V" => {
            no_args(&args)?;
            GroupSpec::V
        }
        "V1" => GroupSpec::V1(one_arg(&args)?),
        "V2" => GroupSpec::V2(one_arg(&args)?),
        "U1" => {
            no_args(&args)?;
            GroupSpec::U1
        }
        "U2" => {
            no_args(&args)?;
            GroupSpec::U2
        }
        "T" => {
            no_args(&args)?;
            GroupSpec::T
        }
        "T1" => GroupSpec::T1(one_arg(&args)?),
        "T2" => GroupSpec::T2(one_arg(&args)?),
        "T3" => GroupSpec::T3(one_arg(&args)?),
        "S" => {
            if args.len() != 3 {
                return Err(perr(0, "S takes [rank,<P-spec>,<Q-gens>]"));
            }
            let rank = parse_u32(args[0], 0)?;
            let p = Box::new(parse_spec_atom(args[1])?);
            let q_arg = args[2].trim();
            let q_words = resolve_q_shorthand(q_arg, &p)?;
            GroupSpec::S { rank, p, q_words }
        }
        other => return Err(perr(0, format!("unknown family {other:?}"))),
    })
}

/// `S[n,C[2t],C<t>]` may name Q by its isomorphism type; a cyclic P of
/// order 2t has the unique index-2 subgroup ⟨a²⟩.
fn resolve_q_shorthand(q_arg: &str, p: &GroupSpec) -> Result<Vec<String>, GroupError> {
    if let Some(rest) = q_arg.strip_prefix('C') {
        let cyclic_param = match rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            Some(inner) => inner.parse::<u32>().ok(),
            None => rest.parse::<u32>().ok(),
        };
        if let (Some(t), GroupSpec::C(n)) = (cyclic_param, p) {
            if t * 2 == *n {
                return Ok(if t == 1 {
                    vec![]
                } else {
                    vec!["a^2".to_string()]
                });
            }
            return Err(perr(
                0,
                format!("Q shorthand C{t} does not have index 2 in C[{n}]"),
            ));
        }
    }
    if q_arg == "1" {
        return Ok(vec![]);
    }
    Ok(q_arg.split_whitespace().map(|w| w.to_string()).collect())
}

/// Evaluate a word like `x^2t1` or `ty^-2` over the group's generator
/// labels; labels are matched greedily by length.
pub fn evaluate_word(g: &Arc<FiniteGroup>, word: &str) -> Result<u16, GroupError> {
    let mut labels: Vec<(String, u16)> = g.generators().to_vec();
    labels.sort_by_key(|(l, _)| std::cmp::Reverse(l.len()));
    let w = word.trim();
    let bytes = w.as_bytes();
    let mut pos = 0usize;
    let mut acc = g.identity();
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*' {
            pos += 1;
            continue;
        }
        let rest = &w[pos..];
        let Some((label, idx)) = labels
            .iter()
            .find(|(l, _)| rest.starts_with(l.as_str()))
            .cloned()
        else {
            return Err(perr(
                pos,
                format!(
                    "no generator label matches {rest:?} (labels: {})",
                    g.generators()
                        .iter()
                        .map(|(l, _)| l.clone())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            ));
        };
        pos += label.len();
        let mut exp: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = w[start..pos]
                .parse::<i64>()
                .map_err(|_| perr(start, "expected exponent"))?;
        }
        acc = g.mul(acc, g.pow(idx, exp));
    }
    Ok(acc)
}

/// Parse and build a full group spec: product of atoms with an optional
/// quotient by the normal closure of word values.
pub fn parse_group(input: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    parse_group_with_cap(input, DEFAULT_PRODUCT_CAP)
}

pub fn parse_group_with_cap(input: &str, cap: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    let s = input.trim();
    let (product_part, quotient_part) = match split_top_level(s, '/').as_slice() {
        [p] => (*p, None),
        [p, q] => (*p, Some(*q)),
        _ => return Err(perr(0, "at most one quotient '/' is supported")),
    };
    let specs: Result<Vec<GroupSpec>, GroupError> = split_top_level(product_part, 'x')
        .into_iter()
        .map(parse_spec_atom)
        .collect();
    let g = build_product(&specs?, cap)?;
    match quotient_part {
        None => Ok(g),
        Some(words) => {
            let mut seeds = Vec::new();
            for wtext in words.split(',') {
                if wtext.trim().is_empty() {
                    continue;
                }
                seeds.push(evaluate_word(&g, wtext)?);
            }
            Ok(quotient(&g, &seeds).0)
        }
    }
}
