//! The ACT/1 exchange format and its JSON mirror.
//!
//! ```text
//! monoid 2 0      # size, identity
//! 0 1
//! 1 1
//! act 1           # size; one row of |M| entries per element
//! 0 0
//! hom 0 0         # source act, target act; one row of |source| entries
//! 0
//! ```
//!
//! A bare `hom` line takes the last act read as source and the one before it
//! as target (a single act gives an endomorphism). Everything after `#` is a
//! comment. The emitter always writes explicit `hom s t` lines, so emitted
//! text parses back to the same document.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::act::RightAct;
use crate::adjunction::{HomAct, TensorAct};
use crate::error::{ActError, Result};
use crate::hom::ActHom;
use crate::monoid::Monoid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomEntry {
    pub source: usize,
    pub target: usize,
    pub hom: ActHom,
}

/// A monoid with acts over it and homs between those acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub monoid: Arc<Monoid>,
    pub acts: Vec<RightAct>,
    pub homs: Vec<HomEntry>,
}

impl Document {
    pub fn new(monoid: Arc<Monoid>) -> Self {
        Document {
            monoid,
            acts: Vec::new(),
            homs: Vec::new(),
        }
    }

    /// Appends an act and returns its index.
    pub fn push_act(&mut self, act: RightAct) -> usize {
        self.acts.push(act);
        self.acts.len() - 1
    }

    pub fn push_hom(&mut self, source: usize, target: usize, hom: ActHom) {
        self.homs.push(HomEntry {
            source,
            target,
            hom,
        });
    }

    pub fn to_text(&self) -> String {
        self.to_text_annotated(&[])
    }

    /// Text form with comment lines after act `i` taken from `notes[i]`.
    pub fn to_text_annotated(&self, notes: &[Vec<String>]) -> String {
        let mut out = String::new();
        let m = &self.monoid;
        writeln!(out, "monoid {} {}", m.size(), m.identity()).unwrap();
        for row in m.rows() {
            push_row(&mut out, &row);
        }
        for (i, act) in self.acts.iter().enumerate() {
            writeln!(out, "act {}", act.size()).unwrap();
            for row in act.rows() {
                push_row(&mut out, &row);
            }
            for note in notes.get(i).into_iter().flatten() {
                writeln!(out, "# {note}").unwrap();
            }
        }
        for h in &self.homs {
            writeln!(out, "hom {} {}", h.source, h.target).unwrap();
            push_row(&mut out, h.hom.map());
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Document> {
        Parser::new(text).document()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonDocument::from(self)).expect("plain data serializes")
    }

    pub fn parse_json(text: &str) -> Result<Document> {
        let doc: JsonDocument = serde_json::from_str(text).map_err(|e| ActError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        doc.into_document()
    }

    /// JSON if the first non-blank character is `{`, ACT/1 otherwise.
    pub fn parse(text: &str) -> Result<Document> {
        if text.trim_start().starts_with('{') {
            Document::parse_json(text)
        } else {
            Document::parse_text(text)
        }
    }
}

fn push_row(out: &mut String, row: &[usize]) {
    let mut first = true;
    for v in row {
        if !first {
            out.push(' ');
        }
        first = false;
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
}

/// `homIndex i: f_0 ... f_{|A|-1}` for each element of `H(X)`.
pub fn hom_index_notes(hom: &HomAct) -> Vec<String> {
    hom.homs()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut line = format!("homIndex {i}:");
            for v in f.map() {
                write!(line, " {v}").unwrap();
            }
            line
        })
        .collect()
}

/// `tensorClass i: y a` naming the least pair `(y, a)` in each class of `T(Y)`.
pub fn tensor_class_notes(tensor: &TensorAct) -> Vec<String> {
    tensor
        .representatives()
        .iter()
        .enumerate()
        .map(|(i, (y, a))| format!("tensorClass {i}: {y} {a}"))
        .collect()
}

/// Reads back the maps listed by [`hom_index_notes`] from ACT/1 text.
pub fn parse_hom_index(text: &str) -> Vec<Vec<usize>> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix("homIndex "))
        .filter_map(|l| l.split_once(':'))
        .map(|(_, maps)| {
            maps.split_whitespace()
                .filter_map(|v| v.parse().ok())
                .collect()
        })
        .collect()
}

struct Parser<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                let words: Vec<&str> = l.split_whitespace().collect();
                (!words.is_empty()).then_some((i + 1, words))
            })
            .collect();
        Parser { lines, pos: 0 }
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |(n, _)| *n)
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let line = self
            .lines
            .get(self.pos)
            .cloned()
            .ok_or_else(|| ActError::Parse {
                line: self.last_line(),
                message: format!("unexpected end of input, expected {what}"),
            })?;
        self.pos += 1;
        Ok(line)
    }

    fn row(&mut self, len: usize, what: &str) -> Result<(usize, Vec<usize>)> {
        if len == 0 {
            return Ok((self.last_line(), Vec::new()));
        }
        let (line, words) = self.next(what)?;
        if words.len() != len {
            return Err(ActError::Parse {
                line,
                message: format!("{what} has {} entries, expected {len}", words.len()),
            });
        }
        let row = words
            .iter()
            .enumerate()
            .map(|(col, w)| number(line, w, &format!("{what} entry {col}")))
            .collect::<Result<_>>()?;
        Ok((line, row))
    }

    fn document(&mut self) -> Result<Document> {
        let (line, words) = self.next("a monoid header")?;
        let (n, identity) = match words.as_slice() {
            ["monoid", n, id] => (
                number(line, n, "monoid size")?,
                number(line, id, "identity")?,
            ),
            _ => {
                return Err(ActError::Parse {
                    line,
                    message: "expected `monoid <n> <identity>`".into(),
                })
            }
        };
        let mut table = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (l, row) = self.row(n, &format!("monoid row {r}"))?;
            rows.push(l);
            table.push(row);
        }
        let monoid = Arc::new(Monoid::new(table, identity).map_err(|e| at(line, &rows, e))?);
        let mut doc = Document::new(monoid.clone());
        while self.pos < self.lines.len() {
            let (line, words) = self.next("a block header")?;
            match words.as_slice() {
                ["act", m] => {
                    let m = number(line, m, "act size")?;
                    let mut action = Vec::with_capacity(m);
                    let mut rows = Vec::with_capacity(m);
                    for x in 0..m {
                        let (l, row) = self.row(n, &format!("act row {x}"))?;
                        rows.push(l);
                        action.push(row);
                    }
                    let act =
                        RightAct::new(monoid.clone(), action).map_err(|e| at(line, &rows, e))?;
                    doc.push_act(act);
                }
                ["hom", rest @ ..] => {
                    let (source, target) = match rest {
                        [] if !doc.acts.is_empty() => {
                            let s = doc.acts.len() - 1;
                            (s, s.saturating_sub(1))
                        }
                        [s, t] => (
                            number(line, s, "hom source")?,
                            number(line, t, "hom target")?,
                        ),
                        _ => {
                            return Err(ActError::Parse {
                                line,
                                message: "expected `hom` after an act, or `hom <source> <target>`"
                                    .into(),
                            })
                        }
                    };
                    for (idx, role) in [(source, "source"), (target, "target")] {
                        if idx >= doc.acts.len() {
                            return Err(ActError::Parse {
                                line,
                                message: format!("hom {role} {idx} names no act read so far"),
                            });
                        }
                    }
                    let len = doc.acts[source].size();
                    let (row, map) = self.row(len, "hom row")?;
                    let hom = ActHom::new(doc.acts[source].clone(), doc.acts[target].clone(), map)
                        .map_err(|e| at(row, &[], e))?;
                    doc.push_hom(source, target, hom);
                }
                _ => {
                    return Err(ActError::Parse {
                        line,
                        message: format!("unknown block `{}`", words.join(" ")),
                    })
                }
            }
        }
        Ok(doc)
    }
}

fn number(line: usize, word: &str, what: &str) -> Result<usize> {
    word.parse().map_err(|_| ActError::Parse {
        line,
        message: format!("{what}: `{word}` is not a nonnegative integer"),
    })
}

/// Moves a validation error onto the row it concerns, or onto `header`.
fn at(header: usize, rows: &[usize], err: ActError) -> ActError {
    let row = match err {
        ActError::OutOfRange { row, .. } => Some(row),
        ActError::AssociativityViolation { a, .. } => Some(a),
        ActError::ActUnitViolation { x } | ActError::ActAssociativityViolation { x, .. } => Some(x),
        _ => None,
    };
    ActError::Parse {
        line: row.and_then(|r| rows.get(r).copied()).unwrap_or(header),
        message: err.to_string(),
    }
}

#[derive(Serialize, Deserialize)]
struct JsonMonoid {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct JsonAct {
    size: usize,
    action: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct JsonHom {
    source: usize,
    target: usize,
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    monoid: JsonMonoid,
    #[serde(default)]
    acts: Vec<JsonAct>,
    #[serde(default)]
    homs: Vec<JsonHom>,
}

impl From<&Document> for JsonDocument {
    fn from(doc: &Document) -> Self {
        JsonDocument {
            monoid: JsonMonoid {
                size: doc.monoid.size(),
                identity: doc.monoid.identity(),
                table: doc.monoid.rows(),
            },
            acts: doc
                .acts
                .iter()
                .map(|a| JsonAct {
                    size: a.size(),
                    action: a.rows(),
                })
                .collect(),
            homs: doc
                .homs
                .iter()
                .map(|h| JsonHom {
                    source: h.source,
                    target: h.target,
                    map: h.hom.map().to_vec(),
                })
                .collect(),
        }
    }
}

impl JsonDocument {
    fn into_document(self) -> Result<Document> {
        let mismatch = |what: String| ActError::Parse {
            line: 0,
            message: what,
        };
        if self.monoid.table.len() != self.monoid.size {
            return Err(mismatch(format!(
                "monoid size {} but table has {} rows",
                self.monoid.size,
                self.monoid.table.len()
            )));
        }
        let monoid = Arc::new(Monoid::new(self.monoid.table, self.monoid.identity)?);
        let mut doc = Document::new(monoid.clone());
        for (i, a) in self.acts.into_iter().enumerate() {
            if a.action.len() != a.size {
                return Err(mismatch(format!(
                    "act {i} has size {} but {} action rows",
                    a.size,
                    a.action.len()
                )));
            }
            doc.push_act(RightAct::new(monoid.clone(), a.action)?);
        }
        for (i, h) in self.homs.into_iter().enumerate() {
            let (Some(s), Some(t)) = (doc.acts.get(h.source), doc.acts.get(h.target)) else {
                return Err(mismatch(format!("hom {i} names a missing act")));
            };
            let hom = ActHom::new(s.clone(), t.clone(), h.map)?;
            doc.push_hom(h.source, h.target, hom);
        }
        Ok(doc)
    }
}
