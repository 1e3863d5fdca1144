//! The `.nas` text format.
//!
//! ```text
//! # comments run to end of line
//! space TRI
//! points 0 1 2
//! gen 0 | 1 2
//! gen 0 1 | 2
//!
//! map u TRI -> DSC3
//! 0 -> 0
//! 1 -> 1
//! 2 -> 1
//! ```
//!
//! A `space` section lists its points once and then any number of
//! generating partitions, blocks separated by `|`. A `map` section gives one
//! `point -> point` line per domain point. Emission is canonical: generators
//! are normalized and sorted, blocks are ordered by their first point, and
//! map lines follow domain order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::morphism::{uc_violation, UcMap};
use crate::partition::{Carrier, Partition};
use crate::space::NaSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub domain: String,
    pub codomain: String,
    pub map: UcMap,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub spaces: Vec<(String, NaSpace)>,
    pub maps: Vec<NamedMap>,
}

impl Document {
    pub fn space(&self, name: &str) -> Option<&NaSpace> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn map(&self, name: &str) -> Option<&NamedMap> {
        self.maps.iter().find(|m| m.name == name)
    }

    fn name_taken(&self, name: &str) -> bool {
        self.space(name).is_some() || self.map(name).is_some()
    }

    pub fn add_space(&mut self, name: &str, space: NaSpace) -> Result<(), Error> {
        validate_name(name).map_err(Error::Validation)?;
        if self.name_taken(name) {
            return Err(Error::Validation(format!("duplicate name `{name}`")));
        }
        self.spaces.push((name.to_string(), space));
        Ok(())
    }

    /// Adds a map between two already declared spaces.
    pub fn add_map(&mut self, name: &str, domain: &str, codomain: &str, map: UcMap) -> Result<(), Error> {
        validate_name(name).map_err(Error::Validation)?;
        if self.name_taken(name) {
            return Err(Error::Validation(format!("duplicate name `{name}`")));
        }
        let declared = |n: &str, s: &NaSpace| self.space(n).is_some_and(|d| d == s);
        if !declared(domain, map.domain()) || !declared(codomain, map.codomain()) {
            return Err(Error::Validation(format!(
                "map `{name}` must connect declared spaces `{domain}` and `{codomain}`"
            )));
        }
        self.maps.push(NamedMap {
            name: name.to_string(),
            domain: domain.to_string(),
            codomain: codomain.to_string(),
            map,
        });
        Ok(())
    }
}

fn validate_name(name: &str) -> Result<(), String> {
    if name.is_empty() || name == "->" || name.chars().any(|c| c.is_whitespace() || matches!(c, '|' | '#')) {
        return Err(format!("invalid name `{name}`"));
    }
    Ok(())
}

enum Section {
    None,
    Space {
        name: String,
        line: usize,
        carrier: Option<Carrier>,
        gens: Vec<Partition>,
    },
    Map {
        name: String,
        line: usize,
        domain: String,
        codomain: String,
        table: Vec<Option<usize>>,
    },
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut doc = Document::default();
    let mut section = Section::None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or("");
        match head {
            "space" => {
                finish(&mut doc, std::mem::replace(&mut section, Section::None))?;
                let name = single_name(words, line_no, "space")?;
                if doc.name_taken(&name) {
                    return err(line_no, format!("duplicate name `{name}`"));
                }
                section = Section::Space {
                    name,
                    line: line_no,
                    carrier: None,
                    gens: Vec::new(),
                };
            }
            "map" => {
                finish(&mut doc, std::mem::replace(&mut section, Section::None))?;
                let parts: Vec<&str> = words.collect();
                let [name, domain, "->", codomain] = parts[..] else {
                    return err(line_no, "expected `map NAME DOMAIN -> CODOMAIN`");
                };
                validate_name(name).or_else(|m| err(line_no, m))?;
                if doc.name_taken(name) {
                    return err(line_no, format!("duplicate name `{name}`"));
                }
                let Some(dom) = doc.space(domain) else {
                    return err(line_no, format!("unknown space `{domain}`"));
                };
                if doc.space(codomain).is_none() {
                    return err(line_no, format!("unknown space `{codomain}`"));
                }
                section = Section::Map {
                    name: name.to_string(),
                    line: line_no,
                    domain: domain.to_string(),
                    codomain: codomain.to_string(),
                    table: vec![None; dom.size()],
                };
            }
            "points" => {
                let Section::Space { carrier, gens, .. } = &mut section else {
                    return err(line_no, "`points` outside a space section");
                };
                if carrier.is_some() {
                    return err(line_no, "points declared twice");
                }
                if !gens.is_empty() {
                    return err(line_no, "points must precede generators");
                }
                let names: Vec<&str> = words.collect();
                *carrier = Some(Carrier::new(names).or_else(|e| err(line_no, e.to_string()))?);
            }
            "gen" => {
                let Section::Space { carrier, gens, .. } = &mut section else {
                    return err(line_no, "`gen` outside a space section");
                };
                let Some(carrier) = carrier else {
                    return err(line_no, "`gen` before `points`");
                };
                let body = line["gen".len()..].trim();
                gens.push(parse_partition(body, carrier, line_no)?);
            }
            _ => {
                let Section::Map {
                    domain,
                    codomain,
                    table,
                    ..
                } = &mut section
                else {
                    return err(line_no, format!("unexpected `{head}`"));
                };
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [from, "->", to] = parts[..] else {
                    return err(line_no, "expected `POINT -> POINT`");
                };
                let dom = doc.space(domain).expect("checked at header");
                let cod = doc.space(codomain).expect("checked at header");
                let Some(x) = dom.carrier().index_of(from) else {
                    return err(line_no, format!("unknown point `{from}` in `{domain}`"));
                };
                let Some(y) = cod.carrier().index_of(to) else {
                    return err(line_no, format!("unknown point `{to}` in `{codomain}`"));
                };
                if table[x].replace(y).is_some() {
                    return err(line_no, format!("point `{from}` mapped twice"));
                }
            }
        }
    }
    finish(&mut doc, section)?;
    Ok(doc)
}

fn single_name<'a>(mut words: impl Iterator<Item = &'a str>, line: usize, what: &str) -> Result<String, ParseError> {
    let (Some(name), None) = (words.next(), words.next()) else {
        return err(line, format!("expected `{what} NAME`"));
    };
    validate_name(name).or_else(|m| err(line, m))?;
    Ok(name.to_string())
}

fn parse_partition(body: &str, carrier: &Carrier, line: usize) -> Result<Partition, ParseError> {
    let mut blocks = Vec::new();
    for chunk in body.split('|') {
        let mut block = Vec::new();
        for word in chunk.split_whitespace() {
            match carrier.index_of(word) {
                Some(x) => block.push(x),
                None => return err(line, format!("unknown point `{word}`")),
            }
        }
        blocks.push(block);
    }
    Partition::from_blocks(carrier.size(), &blocks)
        .or_else(|e| err(line, format!("not a partition of the points: {e}")))
}

fn finish(doc: &mut Document, section: Section) -> Result<(), ParseError> {
    match section {
        Section::None => Ok(()),
        Section::Space {
            name,
            line,
            carrier,
            gens,
        } => {
            let Some(carrier) = carrier else {
                return err(line, format!("space `{name}` has no `points` line"));
            };
            let space = NaSpace::new(carrier, gens).or_else(|e| err(line, e.to_string()))?;
            doc.spaces.push((name, space));
            Ok(())
        }
        Section::Map {
            name,
            line,
            domain,
            codomain,
            table,
        } => {
            let dom = doc.space(&domain).expect("checked at header").clone();
            let cod = doc.space(&codomain).expect("checked at header").clone();
            if let Some(x) = table.iter().position(Option::is_none) {
                return err(
                    line,
                    format!("map `{name}` has no value for point `{}`", dom.carrier().name(x)),
                );
            }
            let table: Vec<usize> = table.into_iter().flatten().collect();
            if let Some(g) = uc_violation(&table, &dom, &cod) {
                return err(
                    line,
                    format!(
                        "map `{name}` is not uniformly continuous: preimage of generator `{}` of `{codomain}` is not in the stack of `{domain}`",
                        g.display_with(cod.names())
                    ),
                );
            }
            let map = UcMap::new(dom, cod, table).or_else(|e| err(line, e.to_string()))?;
            doc.maps.push(NamedMap {
                name,
                domain,
                codomain,
                map,
            });
            Ok(())
        }
    }
}

pub fn emit_space(out: &mut String, name: &str, space: &NaSpace) {
    let _ = writeln!(out, "space {name}");
    let _ = writeln!(out, "points {}", space.names().join(" "));
    for g in space.generators() {
        let _ = writeln!(out, "gen {}", g.display_with(space.names()));
    }
}

pub fn emit_map(out: &mut String, map: &NamedMap) {
    let _ = writeln!(out, "map {} {} -> {}", map.name, map.domain, map.codomain);
    let dom = map.map.domain();
    let cod = map.map.codomain();
    for (x, &y) in map.map.table().iter().enumerate() {
        let _ = writeln!(out, "{} -> {}", dom.carrier().name(x), cod.carrier().name(y));
    }
}

pub fn emit(doc: &Document) -> String {
    let mut sections = Vec::new();
    for (name, space) in &doc.spaces {
        let mut s = String::new();
        emit_space(&mut s, name, space);
        sections.push(s);
    }
    for map in &doc.maps {
        let mut s = String::new();
        emit_map(&mut s, map);
        sections.push(s);
    }
    sections.join("\n")
}
