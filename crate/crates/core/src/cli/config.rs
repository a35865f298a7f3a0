//! The sectioned key-value config format (grammar in `docs/config-format.md`).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactpoly::{CoefficientRing, VariableContext};
use crate::groups::MatrixGroup;
use crate::intlinalg::IntMatrix;
use crate::paperchecks::Registry;
use crate::presented::RingPresentation;
use crate::repcalc::{Catalog, Lattice, LatticeRef, VirtualRep};

use super::Format;

/// Largest group `generate` will enumerate for a config-defined group.
const MAX_GROUP_ORDER: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    pub max_degree: Option<u32>,
    pub per_check: BTreeMap<String, u32>,
    pub format: Option<Format>,
    pub groups: Vec<(String, MatrixGroup)>,
    pub representations: Vec<(String, VirtualRep)>,
    pub presentations: Vec<RingPresentation>,
}

#[derive(Debug)]
enum Section {
    None,
    Checks,
    Group(String),
    Representation(String),
    Presentation(String),
}

/// Raw `key [argument] = value` entries of one section.
#[derive(Debug, Default)]
struct Entries {
    header_line: usize,
    items: Vec<(usize, String, Option<String>, String)>,
}

impl Entries {
    fn single(&self, key: &str) -> Result<Option<(usize, &str)>, ConfigError> {
        let mut found = None;
        for (line, k, _, v) in &self.items {
            if k == key {
                if found.is_some() {
                    return Err(err(*line, format!("duplicate key `{key}`")));
                }
                found = Some((*line, v.as_str()));
            }
        }
        Ok(found)
    }

    fn required(&self, key: &str) -> Result<(usize, &str), ConfigError> {
        self.single(key)?
            .ok_or_else(|| err(self.header_line, format!("missing key `{key}`")))
    }

    fn only(&self, allowed: &[&str], with_arg: &[&str]) -> Result<(), ConfigError> {
        for (line, k, arg, _) in &self.items {
            if !allowed.contains(&k.as_str()) {
                return Err(err(*line, format!("unknown key `{k}`")));
            }
            if arg.is_some() != with_arg.contains(&k.as_str()) {
                return Err(err(*line, format!("malformed key for `{k}`")));
            }
        }
        Ok(())
    }
}

fn parse_u32(line: usize, v: &str) -> Result<u32, ConfigError> {
    v.trim()
        .parse()
        .map_err(|_| err(line, format!("expected a non-negative integer, got `{v}`")))
}

fn names(v: &str) -> Vec<&str> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// Rows separated by `;`, entries by whitespace or commas.
fn int_rows(line: usize, v: &str) -> Result<Vec<Vec<i64>>, ConfigError> {
    v.split(';')
        .map(|row| {
            row.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| err(line, format!("bad integer `{s}`")))
                })
                .collect()
        })
        .collect()
}

fn ring_for(line: usize, modulus: Option<(usize, &str)>) -> Result<CoefficientRing, ConfigError> {
    match modulus {
        None => Ok(CoefficientRing::Integers),
        Some((l, v)) => {
            let m = parse_u32(l, v)?;
            CoefficientRing::integers_mod(m.into()).map_err(|e| err(line.max(l), e.to_string()))
        }
    }
}

pub fn parse_config(text: &str) -> Result<ConfigFile, ConfigError> {
    let mut sections: Vec<(Section, Entries)> = Vec::new();
    let mut current = (Section::None, Entries::default());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(inner) = content.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| err(line, "unterminated section header"))?
                .trim();
            let (kind, name) = match inner.split_once(char::is_whitespace) {
                Some((k, n)) => (k, Some(n.trim().to_string())),
                None => (inner, None),
            };
            let section = match (kind, name) {
                ("checks", None) => Section::Checks,
                ("group", Some(n)) => Section::Group(n),
                ("representation", Some(n)) => Section::Representation(n),
                ("presentation", Some(n)) => Section::Presentation(n),
                (k, _) => return Err(err(line, format!("unknown section `{k}`"))),
            };
            sections.push(std::mem::replace(
                &mut current,
                (
                    section,
                    Entries {
                        header_line: line,
                        items: Vec::new(),
                    },
                ),
            ));
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(line, "expected `key = value`"))?;
        let key = key.trim();
        let (k, arg) = match key.split_once(char::is_whitespace) {
            Some((k, a)) => (k.to_string(), Some(a.trim().to_string())),
            None => (key.to_string(), None),
        };
        if matches!(current.0, Section::None) {
            return Err(err(line, "key outside of any section"));
        }
        current
            .1
            .items
            .push((line, k, arg, value.trim().to_string()));
    }
    sections.push(current);

    let mut out = ConfigFile::default();
    let mut catalog = Catalog::builtin();
    let registry = Registry::standard();
    let mut seen = Vec::new();
    for (section, entries) in sections {
        let line = entries.header_line;
        let name = match &section {
            Section::None => continue,
            Section::Checks => "checks".to_string(),
            Section::Group(n) | Section::Representation(n) | Section::Presentation(n) => n.clone(),
        };
        let tag = format!("{section:?}")
            .split('(')
            .next()
            .unwrap_or("")
            .to_string();
        if seen.contains(&(tag.clone(), name.clone())) {
            return Err(err(line, format!("duplicate section `{name}`")));
        }
        seen.push((tag, name.clone()));
        match section {
            Section::None => {}
            Section::Checks => read_checks(&entries, &registry, &mut out)?,
            Section::Group(_) => out.groups.push((name, read_group(&entries)?)),
            Section::Representation(_) => {
                let rep = read_representation(&entries, &catalog)?;
                catalog.add_rep(&name, rep.clone());
                out.representations.push((name, rep));
            }
            Section::Presentation(_) => out.presentations.push(read_presentation(&name, &entries)?),
        }
    }
    Ok(out)
}

fn read_checks(e: &Entries, registry: &Registry, out: &mut ConfigFile) -> Result<(), ConfigError> {
    for (line, k, arg, v) in &e.items {
        if arg.is_some() {
            return Err(err(*line, format!("malformed key `{k}`")));
        }
        match k.as_str() {
            "max_degree" => out.max_degree = Some(parse_u32(*line, v)?),
            "format" => {
                out.format = Some(match v.as_str() {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    _ => return Err(err(*line, format!("unknown format `{v}`"))),
                })
            }
            name => {
                let entry = registry
                    .get(name)
                    .map_err(|_| err(*line, format!("unknown key `{name}`")))?;
                if entry.spec.degree_bound.is_none() {
                    return Err(err(*line, format!("check `{name}` takes no degree bound")));
                }
                out.per_check.insert(name.to_string(), parse_u32(*line, v)?);
            }
        }
    }
    Ok(())
}

fn read_group(e: &Entries) -> Result<MatrixGroup, ConfigError> {
    e.only(&["variables", "modulus", "generator"], &["generator"])?;
    let (vl, vars) = e.required("variables")?;
    let ctx = VariableContext::new(names(vars)).map_err(|x| err(vl, x.to_string()))?;
    let modulus = e
        .single("modulus")?
        .map(|(l, v)| parse_u32(l, v).map(u64::from))
        .transpose()?;
    let mut gens = Vec::new();
    for (line, k, arg, v) in &e.items {
        if k != "generator" {
            continue;
        }
        let rows = int_rows(*line, v)?;
        let n = ctx.arity();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(err(*line, format!("generator must be a {n}x{n} matrix")));
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        gens.push((arg.clone().unwrap_or_default(), IntMatrix::from_i64(&refs)));
    }
    if gens.is_empty() {
        return Err(err(e.header_line, "a group needs at least one generator"));
    }
    MatrixGroup::generate(&ctx, gens, modulus, MAX_GROUP_ORDER)
        .map_err(|x| err(e.header_line, x.to_string()))
}

fn read_representation(e: &Entries, catalog: &Catalog) -> Result<VirtualRep, ConfigError> {
    e.only(&["lattice", "variables", "modulus", "weights", "expr"], &[])?;
    let lattice: LatticeRef = match (e.single("lattice")?, e.single("variables")?) {
        (Some((l, name)), None) => catalog
            .lattice(name)
            .map_err(|x| err(l, x.to_string()))?
            .clone(),
        (None, Some((l, vars))) => {
            let ring = ring_for(l, e.single("modulus")?)?;
            Lattice::new("config", &names(vars), ring).map_err(|x| err(l, x.to_string()))?
        }
        _ => {
            return Err(err(
                e.header_line,
                "give exactly one of `lattice` or `variables`",
            ))
        }
    };
    if e.single("lattice")?.is_some() {
        if let Some((l, _)) = e.single("modulus")? {
            return Err(err(l, "`modulus` only applies with `variables`"));
        }
    }
    match (e.single("weights")?, e.single("expr")?) {
        (Some((l, w)), None) => {
            let rows = int_rows(l, w)?;
            VirtualRep::from_weights(&lattice, &rows).map_err(|x| err(l, x.to_string()))
        }
        (None, Some((l, text))) => catalog
            .parse(text, &lattice)
            .map_err(|x| err(l, x.to_string())),
        _ => Err(err(
            e.header_line,
            "give exactly one of `weights` or `expr`",
        )),
    }
}

fn read_presentation(name: &str, e: &Entries) -> Result<RingPresentation, ConfigError> {
    e.only(&["generators", "relation"], &[])?;
    let (gl, gens) = e.required("generators")?;
    let mut parsed = Vec::new();
    for g in names(gens) {
        let (n, d) = g
            .split_once(':')
            .ok_or_else(|| err(gl, format!("generator `{g}` needs a degree, as in `{g}:2`")))?;
        parsed.push((n.trim(), parse_u32(gl, d)?));
    }
    let rels: Vec<(usize, &str)> = e
        .items
        .iter()
        .filter(|(_, k, _, _)| k == "relation")
        .map(|(l, _, _, v)| (*l, v.as_str()))
        .collect();
    let texts: Vec<&str> = rels.iter().map(|(_, t)| *t).collect();
    RingPresentation::new(name, &parsed, &texts).map_err(|x| {
        let line = rels.first().map_or(gl, |(l, _)| *l);
        err(line, x.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# overrides
[checks]
max_degree = 6
gamma-generation = 8   # wins over the global value
format = json

[group S3xy]
variables = x, y
generator (12) = 0 1; 1 0
generator (123) = 0 1; -1 -1

[representation sym2]
lattice = T_GL3
expr = sym(E, 2)

[representation W]
variables = a, b
modulus = 3
weights = 1 1; -1 1; 0 1

[presentation P]
generators = a:2, b:3
relation = 2*a^3 - b^2
";

    #[test]
    fn sample_parses() {
        let c = parse_config(SAMPLE).unwrap();
        assert_eq!(c.max_degree, Some(6));
        assert_eq!(c.per_check.get("gamma-generation"), Some(&8));
        assert_eq!(c.format, Some(Format::Json));
        assert_eq!(c.groups[0].1.order(), 6);
        assert_eq!(c.representations[0].1.dim(), 6);
        assert_eq!(
            c.representations[1].1.chern_class(2).unwrap().to_string(),
            "-a^2"
        );
        assert_eq!(
            c.presentations[0].graded_component(6).unwrap().to_string(),
            "6: Z"
        );
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let e = parse_config("[checks]\ncolour = blue\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_config("[group G]\nvariables = x\nsize = 2\ngenerator g = -1\n").is_err());
        assert!(parse_config("[widget w]\n").is_err());
        assert!(parse_config("max_degree = 3\n").is_err());
        assert!(parse_config("[checks]\ngamma-syzygy = 3\n").is_err());
    }

    #[test]
    fn malformed_values() {
        assert!(parse_config("[checks]\nmax_degree = -1\n").is_err());
        assert!(parse_config("[group G]\nvariables = x, y\ngenerator g = 1 0\n").is_err());
        assert!(parse_config("[presentation P]\ngenerators = a\n").is_err());
        assert!(parse_config("[presentation P]\ngenerators = a:1\nrelation = a + a^2\n").is_err());
        let dup = "[presentation P]\ngenerators = a:1\n[presentation P]\ngenerators = b:1\n";
        assert!(parse_config(dup).is_err());
    }
}
