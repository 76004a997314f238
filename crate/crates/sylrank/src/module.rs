//! Module text: inline `gens 1; rels 6; sub 2` or a file with one
//! statement per line.
//!
//! ```text
//! ring Z
//! generators 2
//! relations
//! 2,0
//! 0,3
//! sub
//! 1,1
//! ```
//!
//! Statements are separated by `;` or newlines and `#` starts a comment.
//! Lines after `relations` or `sub` that do not start with a keyword are
//! matrix rows of that block.

use sylrank_core::{FpModule, Matrix, Ring, Scalar, Submodule};

use crate::parse::{core_error, matrix, ring, scalar, Cursor, ParseResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub module: FpModule,
    /// One generator matrix per `sub` block.
    pub subs: Vec<Matrix>,
}

impl ModuleSpec {
    pub fn ring(&self) -> &Ring {
        self.module.ring()
    }

    /// The single `sub` block as a submodule.
    pub fn submodule(&self) -> Result<Submodule, String> {
        match self.subs.as_slice() {
            [g] => Submodule::new(self.module.clone(), g.clone()).map_err(|e| e.to_string()),
            [] => Err("no sub block given".into()),
            _ => Err(format!("{} sub blocks given, expected one", self.subs.len())),
        }
    }
}

/// `(start, end)` byte ranges of the statements, comments removed.
fn statements(text: &str) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let code = line.find('#').map_or(line, |i| &line[..i]);
        let mut start = offset;
        for piece in code.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let body = piece.trim();
            if !body.is_empty() {
                out.push((start + lead, start + lead + body.len()));
            }
            start += piece.len() + 1;
        }
        offset += line.len();
    }
    out
}

fn keyword(stmt: &str) -> Option<(&'static str, usize)> {
    let word: String = stmt.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let canonical = match word.as_str() {
        "ring" => "ring",
        "generators" | "gens" => "gens",
        "relations" | "rels" => "rels",
        "sub" => "sub",
        _ => return None,
    };
    let next = stmt[word.len()..].chars().next();
    if next.is_some_and(|c| !c.is_whitespace()) {
        return None;
    }
    Some((canonical, word.len()))
}

enum Block {
    None,
    Relations,
    Sub,
}

/// Parses module text. `context` is the ring from the command line; a
/// `ring` statement must agree with it.
pub fn parse_module(text: &str, context: Option<&Ring>) -> ParseResult<ModuleSpec> {
    let mut r: Option<Ring> = context.cloned();
    let mut gens: Option<usize> = None;
    let mut rels: Vec<Vec<Scalar>> = Vec::new();
    let mut subs: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut block = Block::None;
    let mut end_pos = 0;

    for (start, end) in statements(text) {
        end_pos = end;
        let stmt = &text[start..end];
        let mut cur = Cursor::span(text, start, end);
        let mut row_at = start;
        if let Some((kw, len)) = keyword(stmt) {
            cur.pos = start + len;
            match kw {
                "ring" => {
                    let at = cur.mark();
                    let parsed = ring(&mut cur)?;
                    cur.finish()?;
                    if let Some(ctx) = &r {
                        if *ctx != parsed {
                            return Err(cur.error_at(at, format!("module ring {parsed} does not match {ctx}")));
                        }
                    }
                    r = Some(parsed);
                    continue;
                }
                "gens" => {
                    let at = cur.mark();
                    let m = cur.usize()?;
                    cur.finish()?;
                    if gens.is_some() || !rels.is_empty() || !subs.is_empty() {
                        return Err(cur.error_at(at, "generator count must come first and only once"));
                    }
                    gens = Some(m);
                    continue;
                }
                "rels" => block = Block::Relations,
                _ => {
                    block = Block::Sub;
                    subs.push(Vec::new());
                }
            }
            if cur.at_end() {
                continue;
            }
            row_at = cur.pos;
        }
        let Some(ring_now) = &r else {
            return Err(cur.error_at(start, "ring unknown; add a 'ring' line or pass --ring"));
        };
        let row = parse_row(&mut cur, ring_now)?;
        let m = *gens.get_or_insert(row.len());
        if row.len() != m {
            return Err(cur.error_at(row_at, format!("row has {} entries, expected {m}", row.len())));
        }
        match block {
            Block::Relations => rels.push(row),
            Block::Sub => subs.last_mut().expect("sub block open").push(row),
            Block::None => return Err(cur.error_at(row_at, "matrix row outside a 'rels' or 'sub' block")),
        }
    }

    let eof = Cursor::span(text, end_pos, text.len());
    let ring = r.ok_or_else(|| eof.error_at(end_pos, "ring unknown; add a 'ring' line or pass --ring"))?;
    let m = gens.ok_or_else(|| eof.error_at(end_pos, "missing generator count"))?;
    let to_matrix = |rows: Vec<Vec<Scalar>>| Matrix::from_rows(&ring, m, rows).map_err(|e| core_error(&eof, end_pos, e));
    let relations = to_matrix(rels)?;
    let subs = subs.into_iter().map(to_matrix).collect::<ParseResult<Vec<_>>>()?;
    Ok(ModuleSpec {
        module: FpModule::new(relations),
        subs,
    })
}

fn parse_row(cur: &mut Cursor<'_>, ring: &Ring) -> ParseResult<Vec<Scalar>> {
    let mut row = vec![scalar(cur, ring)?];
    while cur.eat(",") {
        row.push(scalar(cur, ring)?);
    }
    cur.finish()?;
    Ok(row)
}

/// Submodule generators on their own: inline `1,1;0,2` or a file with one
/// row per line, optionally headed by `sub`.
pub fn parse_generators(text: &str, ring: &Ring, cols: usize) -> ParseResult<Matrix> {
    let mut rows = Vec::new();
    let mut last = 0;
    for (i, (start, end)) in statements(text).into_iter().enumerate() {
        last = end;
        let stmt = &text[start..end];
        let mut cur = Cursor::span(text, start, end);
        if i == 0 {
            if let Some(("sub", len)) = keyword(stmt) {
                cur.pos = start + len;
                if cur.at_end() {
                    continue;
                }
            }
        }
        let at = cur.mark();
        let row = parse_row(&mut cur, ring)?;
        if row.len() != cols {
            return Err(cur.error_at(at, format!("row has {} entries, expected {cols}", row.len())));
        }
        rows.push(row);
    }
    let eof = Cursor::span(text, last, text.len());
    Matrix::from_rows(ring, cols, rows).map_err(|e| core_error(&eof, last, e))
}

/// A bare matrix from a file: rows on separate lines or separated by `;`.
pub fn parse_matrix_file(text: &str, ring: &Ring) -> ParseResult<Matrix> {
    // Same byte layout as `text`: comments blanked, line breaks between rows
    // turned into `;`.
    let mut flat = String::with_capacity(text.len());
    let mut pending_row = false;
    for line in text.split_inclusive('\n') {
        let (body, newline) = match line.strip_suffix('\n') {
            Some(b) => (b, true),
            None => (line, false),
        };
        let code_len = body.find('#').unwrap_or(body.len());
        let code = &body[..code_len];
        if pending_row && !code.trim().is_empty() && !code.trim_start().starts_with(';') {
            flat.pop();
            flat.push(';');
        }
        flat.push_str(code);
        flat.extend(std::iter::repeat_n(' ', body.len() - code_len));
        if !code.trim().is_empty() {
            pending_row = !code.trim_end().ends_with(';');
        }
        if newline {
            flat.push(' ');
        }
    }
    let mut cur = Cursor::with_origin(&flat, text);
    let m = matrix(&mut cur, ring, ';', None)?;
    cur.finish()?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_modules() {
        let m = parse_module("gens 1; rels 6", Some(&Ring::Integers)).unwrap();
        assert_eq!(m.module.relations().to_text(), "6");
        let m = parse_module("gens 2; rels 2,0; 0,3; sub 1,1", Some(&Ring::Integers)).unwrap();
        assert_eq!(m.module.relations().to_text(), "2,0;0,3");
        assert_eq!(m.subs.len(), 1);
        assert_eq!(m.subs[0].to_text(), "1,1");
        let free = parse_module("gens 3", Some(&Ring::Rationals)).unwrap();
        assert_eq!(free.module.relations().rows(), 0);
        assert_eq!(free.module.generators(), 3);
        let zero_sub = parse_module("gens 1; sub", Some(&Ring::Integers)).unwrap();
        assert_eq!(zero_sub.subs[0].rows(), 0);
    }

    #[test]
    fn module_files() {
        let text = "# Z/2 + Z/3\nring Z\ngenerators 2\nrelations\n2,0\n0,3\nsub\n1,1\n";
        let m = parse_module(text, None).unwrap();
        assert_eq!(m.ring(), &Ring::Integers);
        assert_eq!(m.module.relations().to_text(), "2,0;0,3");
        assert!(m.submodule().is_ok());

        let e = parse_module("ring Z\ngenerators 2\nrelations\n2,0\n0\n", None).unwrap_err();
        assert_eq!((e.line, e.column), (5, 1));
        let e = parse_module("ring Z\nrelations\n2,x\n", None).unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_module("ring Q\ngens 1\n", Some(&Ring::Integers)).unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(parse_module("gens 1", None).is_err());
        assert!(parse_module("2,0", Some(&Ring::Integers)).is_err());
    }

    #[test]
    fn generator_and_matrix_files() {
        let g = parse_generators("sub\n1,0\n0,1\n", &Ring::Integers, 2).unwrap();
        assert_eq!(g.to_text(), "1,0;0,1");
        assert_eq!(parse_generators("1,1", &Ring::Integers, 2).unwrap().rows(), 1);
        assert!(parse_generators("1", &Ring::Integers, 2).is_err());
        let m = parse_matrix_file("1,2\n3,4\n", &Ring::Integers).unwrap();
        assert_eq!(m.to_text(), "1,2;3,4");
        assert_eq!(parse_matrix_file("0x2:", &Ring::Integers).unwrap().cols(), 2);
        let e = parse_matrix_file("1,2\n3,y\n", &Ring::Integers).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }
}
