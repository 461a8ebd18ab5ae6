//! The `.a1m` module description format.
//!
//! ```text
//! # integral cohomology, as an A(1)-module
//! name: HZ
//! generators:
//! g0 @ 0
//! g2 @ 2
//! g3 @ 3
//! g5 @ 5
//! sq1:
//! g2 -> g3
//! sq2:
//! g0 -> g2
//! g3 -> g5
//! ```
//!
//! Cells not listed under an action section are sent to zero. Within a
//! degree, cells are ordered as declared.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::a1algebra::Gen;
use crate::a1modules::{A1Module, GradedA1Module};
use crate::gf2linalg::Gf2Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undeclared identifier `{0}`")]
    Undeclared(String),
    #[error("`{0}` is declared twice")]
    Duplicate(String),
    #[error("{op} sends `{from}` (degree {from_degree}) to `{to}` (degree {to_degree}), expected degree {expected}")]
    DegreeMismatch {
        op: &'static str,
        from: String,
        from_degree: i32,
        to: String,
        to_degree: i32,
        expected: i32,
    },
    #[error("relation {relation} fails on degree {degree}")]
    Action { relation: &'static str, degree: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FileError {
    pub line: usize,
    pub kind: FileErrorKind,
}

/// One `from -> to (+ to)*` line. The source line number is bookkeeping and
/// does not take part in comparisons, so a printed and reparsed file
/// compares equal to the original.
#[derive(Debug, Clone, Eq)]
pub struct ActionLine {
    pub from: String,
    pub to: Vec<String>,
    pub line: usize,
}

impl PartialEq for ActionLine {
    fn eq(&self, other: &Self) -> bool {
        self.from == other.from && self.to == other.to
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleFile {
    pub name: String,
    pub generators: Vec<(String, i32)>,
    pub sq1: Vec<ActionLine>,
    pub sq2: Vec<ActionLine>,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn syntax(line: usize, msg: impl Into<String>) -> FileError {
    FileError {
        line,
        kind: FileErrorKind::Syntax(msg.into()),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Start,
    Generators,
    Sq1,
    Sq2,
}

impl ModuleFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut name = None;
        let mut generators: Vec<(String, i32)> = Vec::new();
        let mut sq1 = Vec::new();
        let mut sq2 = Vec::new();
        let mut section = Section::Start;
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("name:") {
                if name.is_some() || section != Section::Start {
                    return Err(syntax(line, "`name:` must come first, once"));
                }
                let rest = rest.trim();
                if rest.is_empty() {
                    return Err(syntax(line, "empty module name"));
                }
                name = Some(rest.to_string());
                continue;
            }
            let next = match content {
                "generators:" => Some(Section::Generators),
                "sq1:" => Some(Section::Sq1),
                "sq2:" => Some(Section::Sq2),
                _ => None,
            };
            if let Some(next) = next {
                let ok = match next {
                    Section::Generators => section == Section::Start && name.is_some(),
                    Section::Sq1 => section == Section::Generators,
                    Section::Sq2 => matches!(section, Section::Generators | Section::Sq1),
                    Section::Start => unreachable!(),
                };
                if !ok {
                    return Err(syntax(line, format!("unexpected section `{content}`")));
                }
                section = next;
                continue;
            }
            match section {
                Section::Start => return Err(syntax(line, "expected `name:` or `generators:`")),
                Section::Generators => {
                    let (id, deg) = content
                        .split_once('@')
                        .ok_or_else(|| syntax(line, "expected `ident @ degree`"))?;
                    let id = id.trim();
                    if !is_ident(id) {
                        return Err(syntax(line, format!("`{id}` is not an identifier")));
                    }
                    let deg: i32 = deg
                        .trim()
                        .parse()
                        .map_err(|_| syntax(line, format!("`{}` is not an integer", deg.trim())))?;
                    if generators.iter().any(|(g, _)| g == id) {
                        return Err(FileError {
                            line,
                            kind: FileErrorKind::Duplicate(id.to_string()),
                        });
                    }
                    generators.push((id.to_string(), deg));
                }
                Section::Sq1 | Section::Sq2 => {
                    let (from, to) = content
                        .split_once("->")
                        .ok_or_else(|| syntax(line, "expected `ident -> ident (+ ident)*`"))?;
                    let from = from.trim().to_string();
                    let to: Vec<String> = to.split('+').map(|t| t.trim().to_string()).collect();
                    for id in std::iter::once(&from).chain(&to) {
                        if !is_ident(id) {
                            return Err(syntax(line, format!("`{id}` is not an identifier")));
                        }
                    }
                    let target = if section == Section::Sq1 { &mut sq1 } else { &mut sq2 };
                    target.push(ActionLine { from, to, line });
                }
            }
        }
        let name = name.ok_or_else(|| syntax(last_line.max(1), "missing `name:`"))?;
        if generators.is_empty() {
            return Err(syntax(last_line.max(1), "no generators declared"));
        }
        Ok(Self {
            name,
            generators,
            sq1,
            sq2,
        })
    }

    /// Builds the module and checks the A(1) relations.
    pub fn to_module(&self) -> Result<A1Module, FileError> {
        let mut position: HashMap<&str, (i32, usize)> = HashMap::new();
        let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
        for (id, d) in &self.generators {
            let slot = dims.entry(*d).or_insert(0);
            position.insert(id, (*d, *slot));
            *slot += 1;
        }
        let dim = |d: i32| dims.get(&d).copied().unwrap_or(0);
        let mut tables: [BTreeMap<i32, Gf2Matrix>; 2] = Default::default();
        let mut source_lines: [BTreeMap<i32, usize>; 2] = Default::default();
        for (k, (op, lines, step)) in [("sq1", &self.sq1, 1), ("sq2", &self.sq2, 2)].into_iter().enumerate() {
            let mut seen = HashMap::new();
            for l in lines {
                let undeclared = |id: &str| FileError {
                    line: l.line,
                    kind: FileErrorKind::Undeclared(id.to_string()),
                };
                let &(d, i) = position.get(l.from.as_str()).ok_or_else(|| undeclared(&l.from))?;
                if seen.insert(l.from.as_str(), l.line).is_some() {
                    return Err(FileError {
                        line: l.line,
                        kind: FileErrorKind::Duplicate(format!("{op} line for {}", l.from)),
                    });
                }
                source_lines[k].entry(d).or_insert(l.line);
                let m = tables[k]
                    .entry(d)
                    .or_insert_with(|| Gf2Matrix::zeros(dim(d + step), dim(d)));
                for to in &l.to {
                    let &(e, j) = position.get(to.as_str()).ok_or_else(|| undeclared(to))?;
                    if e != d + step {
                        return Err(FileError {
                            line: l.line,
                            kind: FileErrorKind::DegreeMismatch {
                                op,
                                from: l.from.clone(),
                                from_degree: d,
                                to: to.clone(),
                                to_degree: e,
                                expected: d + step,
                            },
                        });
                    }
                    m.set(j, i, !m.get(j, i));
                }
            }
        }
        let [sq1, sq2] = tables;
        let module = A1Module::from_parts(self.name.clone(), &dims, &sq1, &sq2)
            .expect("matrices are sized from the declared cells");
        if let Some(f) = module.verify_action().failures.first() {
            let primary = if f.relation == "Sq1Sq1" { 0 } else { 1 };
            let line = source_lines[primary]
                .get(&f.degree)
                .or_else(|| source_lines[1 - primary].get(&f.degree))
                .or_else(|| source_lines[0].get(&(f.degree + 1)))
                .copied()
                .unwrap_or(0);
            return Err(FileError {
                line,
                kind: FileErrorKind::Action {
                    relation: f.relation,
                    degree: f.degree,
                },
            });
        }
        Ok(module)
    }

    /// Describes an existing module, naming the cells `x<d>` (or `x<d>_<i>`
    /// when a degree has several), with `n` for a minus sign.
    pub fn from_module(m: &A1Module) -> Self {
        let cell = |d: i32, i: usize| {
            let deg = if d < 0 { format!("n{}", -d) } else { d.to_string() };
            if m.dim(d) == 1 {
                format!("x{deg}")
            } else {
                format!("x{deg}_{i}")
            }
        };
        let mut generators = Vec::new();
        let mut sq = [Vec::new(), Vec::new()];
        for d in m.degrees() {
            for i in 0..m.dim(d) {
                generators.push((cell(d, i), d));
            }
        }
        for d in m.degrees() {
            for (k, g) in [Gen::Sq1, Gen::Sq2].into_iter().enumerate() {
                let mat = m.sq(g, d);
                for i in 0..m.dim(d) {
                    let to: Vec<String> = mat.column(i).ones().map(|j| cell(d + g.degree(), j)).collect();
                    if !to.is_empty() {
                        sq[k].push(ActionLine {
                            from: cell(d, i),
                            to,
                            line: 0,
                        });
                    }
                }
            }
        }
        let [sq1, sq2] = sq;
        let name = m.name().replace('#', "");
        Self {
            name: if name.trim().is_empty() { "M".to_string() } else { name },
            generators,
            sq1,
            sq2,
        }
    }
}

impl fmt::Display for ModuleFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "generators:")?;
        for (id, d) in &self.generators {
            writeln!(f, "{id} @ {d}")?;
        }
        for (label, lines) in [("sq1:", &self.sq1), ("sq2:", &self.sq2)] {
            if lines.is_empty() {
                continue;
            }
            writeln!(f, "{label}")?;
            for l in lines {
                writeln!(f, "{} -> {}", l.from, l.to.join(" + "))?;
            }
        }
        Ok(())
    }
}

pub fn parse_module_file(text: &str) -> Result<A1Module, FileError> {
    ModuleFile::parse(text)?.to_module()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1algebra::parse_element;
    use crate::a1modules::{cyclic_quotient, f2, free_module};
    use crate::morphisms::is_isomorphic;

    const HZ: &str = include_str!("../../data/HZ.a1m");
    const JOKER: &str = include_str!("../../data/joker.a1m");

    #[test]
    fn single_generator_is_suspended_f2() {
        let m = parse_module_file("name: point\ngenerators:\np @ 4\n").unwrap();
        assert_eq!(m, f2().suspend(4));
    }

    #[test]
    fn shipped_hz_is_a1_mod_sq1() {
        let m = parse_module_file(HZ).unwrap();
        let q = cyclic_quotient(&[parse_element("Sq1").unwrap()], "q");
        assert!(is_isomorphic(&m, &q).unwrap().is_some());
    }

    #[test]
    fn shipped_joker_is_valid() {
        let m = parse_module_file(JOKER).unwrap();
        assert_eq!(m.total_dim(), 5);
        assert!(m.verify_action().passed());
    }

    #[test]
    fn sq1_squared_rejected() {
        let text = "name: bad\ngenerators:\ng0 @ 0\ng1 @ 1\ng2 @ 2\nsq1:\ng0 -> g1\ng1 -> g2\n";
        let err = parse_module_file(text).unwrap_err();
        assert!(matches!(err.kind, FileErrorKind::Action { relation: "Sq1Sq1", degree: 0 }));
        assert_eq!(err.line, 7);
    }

    #[test]
    fn diagnostics_carry_lines() {
        let err = parse_module_file("name: x\ngenerators:\ng0 @ 0\nsq1:\ng0 -> h\n").unwrap_err();
        assert_eq!(err, FileError { line: 5, kind: FileErrorKind::Undeclared("h".into()) });

        let err = parse_module_file("name: x\ngenerators:\ng0 @ 0\ng2 @ 2\nsq1:\ng0 -> g2\n").unwrap_err();
        assert_eq!(err.line, 6);
        assert!(matches!(err.kind, FileErrorKind::DegreeMismatch { expected: 1, .. }));

        let err = parse_module_file("name: x\ngenerators:\ng0 @ zero\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, FileErrorKind::Syntax(_)));

        let err = parse_module_file("generators:\ng0 @ 0\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = parse_module_file("name: x\ngenerators:\ng0 @ 0\ng0 @ 1\n").unwrap_err();
        assert_eq!(err, FileError { line: 4, kind: FileErrorKind::Duplicate("g0".into()) });
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\nname: c   # trailing\n\ngenerators:\n  a @ 0\n b @ 1 \nsq1:\na -> b # edge\n";
        let m = parse_module_file(text).unwrap();
        assert_eq!(m.dims(), BTreeMap::from([(0, 1), (1, 1)]));
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [HZ, JOKER] {
            let file = ModuleFile::parse(text).unwrap();
            let again = ModuleFile::parse(&file.to_string()).unwrap();
            assert_eq!(again, file);
            assert_eq!(again.to_string(), file.to_string());
        }
    }

    #[test]
    fn from_module_round_trip() {
        for m in [
            free_module(&[0]),
            f2().suspend(-3),
            cyclic_quotient(&[parse_element("Sq2").unwrap()], "A1/(Sq2)"),
        ] {
            let file = ModuleFile::from_module(&m);
            let back = parse_module_file(&file.to_string()).unwrap();
            assert_eq!(back, m);
        }
    }
}
