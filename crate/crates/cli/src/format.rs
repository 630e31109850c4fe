//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! [field]
//! Q                      # or GF(p)
//!
//! [generators]
//! z y x                  # increasing order
//!
//! [relators]
//! x x y x y - x          # one expression per line
//!
//! [metadata]
//! key = value
//!
//! [certification]
//! checked_degree = 8     # or `all`
//! overlap_free = true
//! certified = true
//! relators = 3
//! ```
//!
//! Section headers are matched exactly, so relators may start with `[`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use shirshov_core::{Alphabet, FieldSpec, GsBasis, Presentation};

use crate::error::CliError;
use crate::expr::parse_expression;

/// The optional trailer written with certified bases. Informational only:
/// readers re-verify instead of trusting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub checked_degree: Option<usize>,
    pub overlap_free: bool,
    pub certified: bool,
    pub relators: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Field,
    Generators,
    Relators,
    Metadata,
    Certification,
}

fn section(line: &str) -> Option<Section> {
    match line {
        "[field]" => Some(Section::Field),
        "[generators]" => Some(Section::Generators),
        "[relators]" => Some(Section::Relators),
        "[metadata]" => Some(Section::Metadata),
        "[certification]" => Some(Section::Certification),
        _ => None,
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn key_value(line: &str, n: usize) -> Result<(String, String), CliError> {
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| CliError::Parse(format!("line {n}: expected `key = value`")))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn parse_bool(v: &str, n: usize) -> Result<bool, CliError> {
    v.parse()
        .map_err(|_| CliError::Parse(format!("line {n}: expected true or false, found `{v}`")))
}

pub fn parse_presentation(text: &str) -> Result<(Presentation, Option<Certification>), CliError> {
    let mut current: Option<Section> = None;
    let mut field: Option<FieldSpec> = None;
    let mut generators: Vec<String> = Vec::new();
    let mut relator_lines: Vec<(usize, String)> = Vec::new();
    let mut metadata = BTreeMap::new();
    let mut cert: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(s) = section(line) {
            current = Some(s);
            continue;
        }
        match current {
            None => return Err(CliError::Parse(format!("line {n}: content before any section"))),
            Some(Section::Field) => {
                if field.is_some() {
                    return Err(CliError::Parse(format!("line {n}: field given twice")));
                }
                field = Some(line.parse::<FieldSpec>().map_err(|e| CliError::Parse(format!("line {n}: {e}")))?);
            }
            Some(Section::Generators) => {
                for name in line.split_whitespace() {
                    if !valid_name(name) {
                        return Err(CliError::Parse(format!("line {n}: invalid generator name `{name}`")));
                    }
                    generators.push(name.to_string());
                }
            }
            Some(Section::Relators) => relator_lines.push((n, line.to_string())),
            Some(Section::Metadata) => {
                let (k, v) = key_value(line, n)?;
                metadata.insert(k, v);
            }
            Some(Section::Certification) => {
                let (k, v) = key_value(line, n)?;
                cert.insert(k, (n, v));
            }
        }
    }
    let field = field.unwrap_or(FieldSpec::Rationals);
    let alphabet = Alphabet::new(generators).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut relators = Vec::with_capacity(relator_lines.len());
    for (n, line) in relator_lines {
        let r = parse_expression(&line, &alphabet, field).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("line {n}: {msg}")),
            other => other,
        })?;
        if r.is_zero() {
            return Err(CliError::Parse(format!("line {n}: relator is zero")));
        }
        relators.push(r);
    }
    let mut p = Presentation::new(alphabet, field, relators)?;
    for (k, v) in metadata {
        p.set_metadata(k, v);
    }
    let certification = if cert.is_empty() {
        None
    } else {
        let get = |k: &str| {
            cert.get(k)
                .cloned()
                .ok_or_else(|| CliError::Parse(format!("certification block lacks `{k}`")))
        };
        let (n, d) = get("checked_degree")?;
        let checked_degree = if d == "all" {
            None
        } else {
            Some(d.parse().map_err(|_| CliError::Parse(format!("line {n}: bad degree `{d}`")))?)
        };
        let (n, o) = get("overlap_free")?;
        let (m, c) = get("certified")?;
        let (k, r) = get("relators")?;
        Some(Certification {
            checked_degree,
            overlap_free: parse_bool(&o, n)?,
            certified: parse_bool(&c, m)?,
            relators: r.parse().map_err(|_| CliError::Parse(format!("line {k}: bad count `{r}`")))?,
        })
    };
    Ok((p, certification))
}

pub fn print_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[field]\n{}\n", p.field());
    let _ = writeln!(out, "[generators]\n{}\n", p.alphabet().names().join(" "));
    out.push_str("[relators]\n");
    for r in p.relators() {
        let _ = writeln!(out, "{}", r.to_string_with(p.alphabet()));
    }
    if !p.metadata().is_empty() {
        out.push_str("\n[metadata]\n");
        for (k, v) in p.metadata() {
            let _ = writeln!(out, "{k} = {v}");
        }
    }
    out
}

pub fn certification_of(g: &GsBasis) -> Certification {
    Certification {
        checked_degree: (g.checked_degree() != usize::MAX).then_some(g.checked_degree()),
        overlap_free: g.is_overlap_free(),
        certified: g.is_certified(),
        relators: g.relators().len(),
    }
}

pub fn print_basis(g: &GsBasis) -> String {
    let mut out = print_presentation(g.presentation());
    let c = certification_of(g);
    let degree = c.checked_degree.map_or_else(|| "all".to_string(), |d| d.to_string());
    let _ = write!(
        out,
        "\n[certification]\nchecked_degree = {degree}\noverlap_free = {}\ncertified = {}\nrelators = {}\n",
        c.overlap_free, c.certified, c.relators
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: &str = "[field]\nQ\n\n[generators]\nz y x\n\n[relators]\nx x y x y - x\nx x y y x y - y\nx x y y y x y - z\n";

    #[test]
    fn round_trip() {
        let (p, cert) = parse_presentation(V).unwrap();
        assert!(cert.is_none());
        assert_eq!(print_presentation(&p), V);
    }

    #[test]
    fn bracket_relators_and_comments() {
        let text = "# Gamma\n[field]\nGF(5)\n[generators]\nt z y x\n[relators]\n[x,[y,z]] - z  # first\n[x, t]\n";
        let (p, _) = parse_presentation(text).unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.field(), FieldSpec::Prime(5));
    }

    #[test]
    fn certification_block() {
        let g = GsBasis::complete(&parse_presentation(V).unwrap().0, 8).unwrap();
        let text = print_basis(&g);
        let (p, cert) = parse_presentation(&text).unwrap();
        assert_eq!(cert, Some(certification_of(&g)));
        assert_eq!(p.relators(), g.relators());
    }

    #[test]
    fn errors() {
        assert!(parse_presentation("x y\n").is_err());
        assert!(parse_presentation("[generators]\n1x\n").is_err());
        assert!(parse_presentation("[generators]\nx y\n[relators]\nx y\n").is_err());
        assert!(parse_presentation("[field]\nGF(4)\n").is_err());
        assert!(parse_presentation("[generators]\nx x\n").is_err());
        assert!(parse_presentation("[generators]\nx y\n[metadata]\nnovalue\n").is_err());
    }
}
