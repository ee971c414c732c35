//! Line-oriented text format for categories with cocycles.
//!
//! ```text
//! OBJECTS
//! <object-name>
//! MORPHISMS
//! <morphism-name> <dom> <cod>
//! IDENTITIES
//! <object-name> <morphism-name>
//! COMP
//! <t> <s> <result>
//! COCYCLE
//! <t> <s> <p>/<q>
//! ```
//!
//! Names are whitespace-free tokens; `#` starts a comment. The COCYCLE
//! section may be omitted for the trivial cocycle. Loading validates both
//! the category axioms and the cocycle identity.

use crate::category::FiniteCategory;
use crate::cocycle::Cocycle;
use crate::exactla::{fmt_rat, parse_rat};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("validation failed: {0}")]
    Validation(String),
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Serialize a category and cocycle; the COCYCLE section is omitted when
/// the cocycle is constant 1.
pub fn save_to_string(c: &FiniteCategory, a: &Cocycle) -> String {
    let mut out = String::new();
    out.push_str("OBJECTS\n");
    for x in 0..c.num_objects() {
        let _ = writeln!(out, "{}", c.object_name(x));
    }
    out.push_str("MORPHISMS\n");
    for s in 0..c.num_morphisms() {
        let _ = writeln!(
            out,
            "{} {} {}",
            c.morphism_name(s),
            c.object_name(c.dom(s)),
            c.object_name(c.cod(s))
        );
    }
    out.push_str("IDENTITIES\n");
    for x in 0..c.num_objects() {
        let _ = writeln!(
            out,
            "{} {}",
            c.object_name(x),
            c.morphism_name(c.identity_of(x))
        );
    }
    out.push_str("COMP\n");
    for t in 0..c.num_morphisms() {
        for s in 0..c.num_morphisms() {
            if let Some(r) = c.compose(t, s) {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    c.morphism_name(t),
                    c.morphism_name(s),
                    c.morphism_name(r)
                );
            }
        }
    }
    if !a.is_trivial() {
        out.push_str("COCYCLE\n");
        for (&(t, s), v) in a.entries() {
            let _ = writeln!(
                out,
                "{} {} {}",
                c.morphism_name(t),
                c.morphism_name(s),
                fmt_rat(v)
            );
        }
    }
    out
}

pub fn save(c: &FiniteCategory, a: &Cocycle, path: impl AsRef<Path>) -> Result<(), FileError> {
    std::fs::write(path, save_to_string(c, a))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<(FiniteCategory, Cocycle), FileError> {
    let text = std::fs::read_to_string(path)?;
    load_from_str(&text)
}

#[derive(PartialEq, Eq, Clone, Copy, Debug)]
enum Section {
    None,
    Objects,
    Morphisms,
    Identities,
    Comp,
    Cocycle,
}

pub fn load_from_str(text: &str) -> Result<(FiniteCategory, Cocycle), FileError> {
    let (category, cocycle) = parse_from_str(text)?;
    let report = category.validate();
    if !report.ok() {
        return Err(FileError::Validation(format!(
            "category axioms fail: {:?}",
            report.violations[0]
        )));
    }
    let creport = cocycle.validate(&category);
    if !creport.ok() {
        return Err(FileError::Validation(format!(
            "cocycle invalid: {:?}",
            creport.violations[0]
        )));
    }
    Ok((category, cocycle))
}

/// Parse without the mathematical checks; name resolution and structure
/// errors still surface. Callers that want a go/no-go answer should use
/// [`load_from_str`]; the CLI parses first so that axiom violations land in
/// the report with witnesses.
pub fn parse_from_str(text: &str) -> Result<(FiniteCategory, Cocycle), FileError> {
    let mut section = Section::None;
    let mut objects: Vec<String> = Vec::new();
    let mut morphisms: Vec<(String, String, String)> = Vec::new();
    let mut identities: Vec<(String, String)> = Vec::new();
    let mut comp: Vec<(String, String, String)> = Vec::new();
    let mut cocycle_lines: Vec<(String, String, String, usize, usize)> = Vec::new();
    let mut saw_cocycle_section = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|tok| {
                let col = tok.as_ptr() as usize - line.as_ptr() as usize + 1;
                (col, tok)
            })
            .collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0].1 {
            "OBJECTS" => {
                section = Section::Objects;
                continue;
            }
            "MORPHISMS" => {
                section = Section::Morphisms;
                continue;
            }
            "IDENTITIES" => {
                section = Section::Identities;
                continue;
            }
            "COMP" => {
                section = Section::Comp;
                continue;
            }
            "COCYCLE" => {
                section = Section::Cocycle;
                saw_cocycle_section = true;
                continue;
            }
            _ => {}
        }
        let expect = |n: usize| -> Result<(), FileError> {
            if tokens.len() != n {
                Err(parse_err(
                    line_no,
                    tokens[0].0,
                    format!("expected {} tokens, found {}", n, tokens.len()),
                ))
            } else {
                Ok(())
            }
        };
        match section {
            Section::None => {
                return Err(parse_err(
                    line_no,
                    tokens[0].0,
                    "content before any section header",
                ));
            }
            Section::Objects => {
                expect(1)?;
                objects.push(tokens[0].1.to_string());
            }
            Section::Morphisms => {
                expect(3)?;
                morphisms.push((
                    tokens[0].1.to_string(),
                    tokens[1].1.to_string(),
                    tokens[2].1.to_string(),
                ));
            }
            Section::Identities => {
                expect(2)?;
                identities.push((tokens[0].1.to_string(), tokens[1].1.to_string()));
            }
            Section::Comp => {
                expect(3)?;
                comp.push((
                    tokens[0].1.to_string(),
                    tokens[1].1.to_string(),
                    tokens[2].1.to_string(),
                ));
            }
            Section::Cocycle => {
                expect(3)?;
                cocycle_lines.push((
                    tokens[0].1.to_string(),
                    tokens[1].1.to_string(),
                    tokens[2].1.to_string(),
                    line_no,
                    tokens[2].0,
                ));
            }
        }
    }

    // Resolve names.
    let mut obj_id: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, name) in objects.iter().enumerate() {
        if obj_id.insert(name, i).is_some() {
            return Err(FileError::Validation(format!(
                "duplicate object name {}",
                name
            )));
        }
    }
    let mut mor_id: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, (name, _, _)) in morphisms.iter().enumerate() {
        if mor_id.insert(name, i).is_some() {
            return Err(FileError::Validation(format!(
                "duplicate morphism name {}",
                name
            )));
        }
    }
    let lookup_obj = |name: &str| -> Result<usize, FileError> {
        obj_id
            .get(name)
            .copied()
            .ok_or_else(|| FileError::Validation(format!("unknown object {}", name)))
    };
    let lookup_mor = |name: &str| -> Result<usize, FileError> {
        mor_id
            .get(name)
            .copied()
            .ok_or_else(|| FileError::Validation(format!("unknown morphism {}", name)))
    };
    let mut mor_records = Vec::with_capacity(morphisms.len());
    for (name, d, c) in &morphisms {
        mor_records.push((name.clone(), lookup_obj(d)?, lookup_obj(c)?));
    }
    let mut identity = vec![usize::MAX; objects.len()];
    for (obj, mor) in &identities {
        identity[lookup_obj(obj)?] = lookup_mor(mor)?;
    }
    if let Some(x) = identity.iter().position(|&i| i == usize::MAX) {
        return Err(FileError::Validation(format!(
            "object {} has no identity",
            objects[x]
        )));
    }
    let mut comp_entries = Vec::with_capacity(comp.len());
    for (t, s, r) in &comp {
        comp_entries.push((lookup_mor(t)?, lookup_mor(s)?, lookup_mor(r)?));
    }
    let category = FiniteCategory::new(objects, mor_records, identity, comp_entries);
    let cocycle = if saw_cocycle_section {
        let mut values = BTreeMap::new();
        for (t, s, v, line_no, col) in &cocycle_lines {
            let value = parse_rat(v)
                .ok_or_else(|| parse_err(*line_no, *col, format!("bad fraction {:?}", v)))?;
            values.insert((lookup_mor(t)?, lookup_mor(s)?), value);
        }
        Cocycle::from_values(values)
    } else {
        Cocycle::trivial(&category)
    };
    Ok((category, cocycle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, rat};
    use crate::generators;

    #[test]
    fn round_trip_t2() {
        let c = generators::full_transformation_monoid(2).unwrap();
        let a = Cocycle::trivial(&c);
        let text = save_to_string(&c, &a);
        let (c2, a2) = load_from_str(&text).unwrap();
        assert_eq!(c, c2);
        assert_eq!(a, a2);
    }

    #[test]
    fn round_trip_twisted_tl() {
        let d = generators::temperley_lieb(3, frac(5, 3)).unwrap();
        let text = save_to_string(&d.category, &d.cocycle);
        let (c2, a2) = load_from_str(&text).unwrap();
        assert_eq!(d.category, c2);
        assert_eq!(d.cocycle, a2);
    }

    #[test]
    fn missing_cocycle_entry_is_invalid() {
        let d = generators::temperley_lieb(2, rat(2)).unwrap();
        let mut text = save_to_string(&d.category, &d.cocycle);
        // Drop the last cocycle line.
        text = text.trim_end().rsplit_once('\n').unwrap().0.to_string();
        match load_from_str(&text) {
            Err(FileError::Validation(msg)) => assert!(msg.contains("cocycle"), "{}", msg),
            other => panic!("expected validation error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn fractions_normalize_on_load() {
        let text = "\
OBJECTS
X
MORPHISMS
id X X
IDENTITIES
X id
COMP
id id id
COCYCLE
id id 2/4
";
        let (_, a) = load_from_str(text).unwrap();
        assert_eq!(a.value(0, 0), Some(&frac(1, 2)));
    }

    #[test]
    fn parse_error_carries_position() {
        let text = "OBJECTS\nX\nMORPHISMS\nid X\n";
        match load_from_str(text) {
            Err(FileError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "\
# a category with one object
OBJECTS
X   # the object

MORPHISMS
id X X
IDENTITIES
X id
COMP
id id id
";
        let (c, a) = load_from_str(text).unwrap();
        assert_eq!(c.num_morphisms(), 1);
        assert!(a.is_trivial());
    }

    #[test]
    fn broken_associativity_rejected_at_load() {
        let text = "\
OBJECTS
X
MORPHISMS
e X X
a X X
b X X
IDENTITIES
X e
COMP
e e e
e a a
e b b
a e a
a a b
a b a
b e b
b a e
b b b
";
        match load_from_str(text) {
            Err(FileError::Validation(msg)) => assert!(msg.contains("Associativity"), "{}", msg),
            other => panic!("expected validation error, got {:?}", other.map(|_| ())),
        }
    }
}
