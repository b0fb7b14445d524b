//! Ideal files: an `order:` header line followed by one polynomial per line.
//!
//! ```text
//! # Plücker ideal of L_4
//! order: elim keep=[p[1,3],p[1,4]]  vars=[p[1,2],p[1,3],p[1,4]]
//! p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]
//! ```
//!
//! `vars` lists the variables largest first. For `elim`, the variables not
//! in `keep` are eliminated; they must form a leading block of `vars`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::Ideal;
use crate::error::{Error, Result};
use crate::exactalg::{parse_variable, MonomialOrder, OrderScheme, Polynomial, Variable};

/// Parsed contents of an ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub order: MonomialOrder,
    pub ideal: Ideal,
}

fn split_list(body: &str) -> Result<Vec<Variable>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, ch) in body.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.checked_sub(1).ok_or_else(|| Error::Parse("unbalanced ']'".into()))?,
            ',' if depth == 0 => {
                out.push(parse_variable(body[start..idx].trim())?);
                start = idx + 1;
            }
            _ => {}
        }
    }
    let last = body[start..].trim();
    if !last.is_empty() {
        out.push(parse_variable(last)?);
    }
    Ok(out)
}

/// Extracts the bracketed list following `key=` in `line`.
fn bracket_arg<'a>(line: &'a str, key: &str) -> Result<Option<&'a str>> {
    let pat = format!("{key}=[");
    let Some(pos) = line.find(&pat) else { return Ok(None) };
    let rest = &line[pos + pat.len()..];
    let mut depth = 1usize;
    for (idx, ch) in rest.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(Some(&rest[..idx]));
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("unterminated list for {key}")))
}

fn parse_header(line: &str) -> Result<MonomialOrder> {
    let body = line
        .strip_prefix("order:")
        .ok_or_else(|| Error::Parse("expected 'order:' header".into()))?
        .trim();
    let scheme = body.split_whitespace().next().unwrap_or("");
    let vars = bracket_arg(body, "vars")?.ok_or_else(|| Error::Parse("missing vars=[...]".into()))?;
    let vars = split_list(vars)?;
    match scheme {
        "lex" => MonomialOrder::lex(vars),
        "revlex" => MonomialOrder::revlex(vars),
        "elim" => {
            let keep = bracket_arg(body, "keep")?.ok_or_else(|| Error::Parse("elim needs keep=[...]".into()))?;
            let keep: BTreeSet<Variable> = split_list(keep)?.into_iter().collect();
            let eliminated = vars.iter().copied().filter(|v| !keep.contains(v)).collect();
            if keep.iter().any(|v| !vars.contains(v)) {
                return Err(Error::Parse("keep lists a variable missing from vars".into()));
            }
            MonomialOrder::block_elim_lex(vars, eliminated)
        }
        other => Err(Error::Parse(format!("unknown order scheme '{other}'"))),
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut order = None;
    let mut gens = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if order.is_none() {
            order = Some(parse_header(line)?);
            continue;
        }
        gens.push(line.parse::<Polynomial>()?);
    }
    let order = order.ok_or_else(|| Error::Parse("missing 'order:' header".into()))?;
    let ambient = order.variables().iter().copied().collect();
    let ideal = Ideal::new(gens, ambient)?;
    Ok(IdealFile { order, ideal })
}

fn join_vars<'a>(vars: impl IntoIterator<Item = &'a Variable>) -> String {
    vars.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

pub fn write_ideal_file(order: &MonomialOrder, generators: &[Polynomial]) -> String {
    let mut out = String::from("order: ");
    match order.scheme() {
        OrderScheme::Lex => out.push_str("lex"),
        OrderScheme::RevLex => out.push_str("revlex"),
        OrderScheme::BlockElimLex => {
            let _ = write!(out, "elim keep=[{}]", join_vars(order.kept().iter()));
        }
    }
    let _ = writeln!(out, "  vars=[{}]", join_vars(order.variables()));
    for g in generators {
        let _ = writeln!(out, "{g}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::p;

    #[test]
    fn roundtrip() {
        let text = "# comment\norder: revlex  vars=[p[3,4],p[2,4],p[1,4],p[2,3],p[1,3],p[1,2]]\n\
                    p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]  # Q\n";
        let file = parse_ideal_file(text).unwrap();
        assert_eq!(file.order.scheme(), OrderScheme::RevLex);
        assert_eq!(file.ideal.generators().len(), 1);
        let again = parse_ideal_file(&write_ideal_file(&file.order, file.ideal.generators())).unwrap();
        assert_eq!(again, file);
    }

    #[test]
    fn elim_header() {
        let text = "order: elim keep=[p[1,3],p[1,4]]  vars=[p[1,2],p[1,3],p[1,4]]\n";
        let file = parse_ideal_file(text).unwrap();
        assert_eq!(file.order.kept(), [p(1, 3), p(1, 4)].into_iter().collect());
        let again = parse_ideal_file(&write_ideal_file(&file.order, &[])).unwrap();
        assert_eq!(again.order, file.order);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_ideal_file("p[1,2]\n").is_err());
        assert!(parse_ideal_file("order: foo vars=[p[1,2]]\n").is_err());
        assert!(parse_ideal_file("order: lex vars=[p[1,2]]\np[1,3]\n").is_err());
        assert!(parse_ideal_file("order: elim keep=[p[1,2]] vars=[p[1,2],p[1,3]]\n").is_err());
    }
}
