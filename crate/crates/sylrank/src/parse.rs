//! Text grammars for rings, groups, scalars and matrices.
//!
//! Every parser reports errors with a 1-based line and column into the text it
//! was given, so file inputs point at the offending line.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use sylrank_core::{FiniteGroup, Matrix, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

/// A position-tracking reader over `src[pos..end]`.
#[derive(Clone)]
pub(crate) struct Cursor<'a> {
    src: &'a str,
    /// Text used for line/column reporting; same byte layout as `src`.
    origin: &'a str,
    pub(crate) pos: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, origin: src, pos: 0, end: src.len() }
    }

    pub(crate) fn with_origin(src: &'a str, origin: &'a str) -> Self {
        Cursor { src, origin, pos: 0, end: src.len() }
    }

    pub(crate) fn span(src: &'a str, start: usize, end: usize) -> Self {
        Cursor { src, origin: src, pos: start, end }
    }

    pub(crate) fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let before = &self.origin[..pos.min(self.origin.len())];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        ParseError {
            line,
            column: before[line_start..].chars().count() + 1,
            message: message.into(),
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..self.end]
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// Position of the next token.
    pub(crate) fn mark(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.end
    }

    pub(crate) fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, token: &str) -> ParseResult<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("'{c}'"));
            Err(self.error(format!("expected '{token}', found {found}")))
        }
    }

    pub(crate) fn finish(&mut self) -> ParseResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!("unexpected trailing input '{}'", self.rest())))
        }
    }

    /// Letters, digits and `_`, starting with a letter.
    pub(crate) fn ident(&mut self) -> ParseResult<&'a str> {
        self.skip_ws();
        let start = self.mark();
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            return Err(self.error("expected a name"));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        Ok(&self.src[start..self.pos])
    }

    fn digits(&mut self) -> ParseResult<&'a str> {
        self.skip_ws();
        let start = self.mark();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(&self.src[start..self.pos])
    }

    pub(crate) fn uint(&mut self) -> ParseResult<u64> {
        let start = self.mark();
        let d = self.digits()?;
        d.parse().map_err(|_| self.error_at(start, format!("{d} is too large")))
    }

    pub(crate) fn usize(&mut self) -> ParseResult<usize> {
        let start = self.mark();
        let n = self.uint()?;
        usize::try_from(n).map_err(|_| self.error_at(start, format!("{n} is too large")))
    }

    pub(crate) fn natural(&mut self) -> ParseResult<BigInt> {
        Ok(BigInt::from_str(self.digits()?).expect("digits"))
    }

    pub(crate) fn integer(&mut self) -> ParseResult<BigInt> {
        let neg = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        let n = self.natural()?;
        Ok(if neg { -n } else { n })
    }

    /// `n` or `n/d`.
    pub(crate) fn rational(&mut self) -> ParseResult<BigRational> {
        let n = self.integer()?;
        if self.eat("/") {
            let at = self.mark();
            let d = self.natural()?;
            if d.is_zero() {
                return Err(self.error_at(at, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }
}

pub(crate) fn core_error(cur: &Cursor<'_>, at: usize, e: sylrank_core::Error) -> ParseError {
    cur.error_at(at, e.to_string())
}

/// Parses a whole string with `f` and rejects trailing input.
pub(crate) fn whole<T>(text: &str, f: impl FnOnce(&mut Cursor<'_>) -> ParseResult<T>) -> ParseResult<T> {
    let mut cur = Cursor::new(text);
    let v = f(&mut cur)?;
    cur.finish()?;
    Ok(v)
}

pub fn parse_ring(text: &str) -> ParseResult<Ring> {
    whole(text, ring)
}

pub fn parse_group(text: &str) -> ParseResult<FiniteGroup> {
    whole(text, group)
}

pub fn parse_matrix(text: &str, ring: &Ring) -> ParseResult<Matrix> {
    whole(text, |c| matrix(c, ring, ';', None))
}

/// `Z | Q | Fp(p) | Zmod(n) | GroupRing(k,G) | Mat(R,k)`, and the shorthand
/// `k[G]` for a group algebra.
pub(crate) fn ring(cur: &mut Cursor<'_>) -> ParseResult<Ring> {
    let start = cur.mark();
    let name = cur.ident()?;
    let r = match name {
        "Z" => Ring::Integers,
        "Q" => Ring::Rationals,
        "Fp" | "Zmod" => {
            cur.expect("(")?;
            let at = cur.mark();
            let n = cur.uint()?;
            cur.expect(")")?;
            let r = if name == "Fp" { Ring::prime_field(n) } else { Ring::integers_mod(n) };
            r.map_err(|e| core_error(cur, at, e))?
        }
        "GroupRing" => {
            cur.expect("(")?;
            let base = ring(cur)?;
            cur.expect(",")?;
            let g = group(cur)?;
            cur.expect(")")?;
            Ring::group_algebra(base, g).map_err(|e| core_error(cur, start, e))?
        }
        "Mat" => {
            cur.expect("(")?;
            let base = ring(cur)?;
            cur.expect(",")?;
            let at = cur.mark();
            let k = cur.usize()?;
            cur.expect(")")?;
            Ring::matrix_amplification(base, k).map_err(|e| core_error(cur, at, e))?
        }
        other => return Err(cur.error_at(start, format!("unknown ring '{other}'"))),
    };
    if cur.eat("[") {
        let g = group(cur)?;
        cur.expect("]")?;
        return Ring::group_algebra(r, g).map_err(|e| core_error(cur, start, e));
    }
    Ok(r)
}

/// `C<n> | S3 | cayley:<path>`.
pub(crate) fn group(cur: &mut Cursor<'_>) -> ParseResult<FiniteGroup> {
    let start = cur.mark();
    let name = cur.ident()?;
    if name == "cayley" {
        cur.expect(":")?;
        let at = cur.mark();
        while matches!(cur.peek(), Some(c) if !matches!(c, ')' | ']' | ',')) {
            cur.bump();
        }
        let path = cur.src[at..cur.pos].trim();
        if path.is_empty() {
            return Err(cur.error_at(at, "expected a path after 'cayley:'"));
        }
        return read_cayley(Path::new(path)).map_err(|e| match e {
            CayleyError::Io(msg) => cur.error_at(at, msg),
            CayleyError::Parse(p) => ParseError {
                message: format!("{path}:{}:{}: {}", p.line, p.column, p.message),
                ..cur.error_at(at, "")
            },
        });
    }
    if name == "S3" {
        return Ok(FiniteGroup::symmetric3());
    }
    if let Some(n) = name.strip_prefix('C').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())) {
        let n: usize = n.parse().map_err(|_| cur.error_at(start, "group order too large"))?;
        return FiniteGroup::cyclic(n).map_err(|e| core_error(cur, start, e));
    }
    Err(cur.error_at(start, format!("unknown group '{name}'")))
}

enum CayleyError {
    Io(String),
    Parse(ParseError),
}

fn read_cayley(path: &Path) -> Result<FiniteGroup, CayleyError> {
    let text = std::fs::read_to_string(path).map_err(|e| CayleyError::Io(format!("cannot read {}: {e}", path.display())))?;
    let name = format!("cayley:{}", path.display());
    parse_cayley(&text, &name).map_err(CayleyError::Parse)
}

/// First line the order `n`, then `n` lines of `n` space-separated indices.
pub fn parse_cayley(text: &str, name: &str) -> ParseResult<FiniteGroup> {
    let mut cur = Cursor::new(text);
    let order = cur.usize()?;
    if order == 0 {
        return Err(cur.error("group order must be positive"));
    }
    let mut table = Vec::with_capacity(order * order);
    for _ in 0..order * order {
        let at = cur.mark();
        if cur.at_end() {
            return Err(cur.error(format!("expected {} table entries, found {}", order * order, table.len())));
        }
        let v = cur.usize()?;
        if v >= order {
            return Err(cur.error_at(at, format!("index {v} out of range for order {order}")));
        }
        table.push(v);
    }
    cur.finish()?;
    FiniteGroup::from_cayley(name, order, table).map_err(|e| cur.error_at(0, e.to_string()))
}

/// One ring element.
///
/// Group-algebra entries are sums `c*gI` (a bare `c` is `c*e`); matrix
/// amplification entries are `{a b | c d}` blocks or an integer.
pub(crate) fn scalar(cur: &mut Cursor<'_>, ring: &Ring) -> ParseResult<Scalar> {
    cur.skip_ws();
    let start = cur.mark();
    match ring {
        Ring::Integers => Ok(Scalar::Int(cur.integer()?)),
        Ring::Rationals => Ok(Scalar::Rat(cur.rational()?)),
        Ring::PrimeField(_) | Ring::IntegersMod(_) => {
            let n = cur.integer()?;
            Ok(ring.from_integer(&n))
        }
        Ring::GroupAlgebra { base, group } => {
            let mut coeffs = vec![base.zero(); group.order()];
            let mut first = true;
            loop {
                let neg = if cur.eat("-") {
                    true
                } else {
                    let plus = cur.eat("+");
                    if !first && !plus {
                        break;
                    }
                    false
                };
                first = false;
                cur.skip_ws();
                let (c, g) = if cur.peek() == Some('g') {
                    (base.one(), group_index(cur, group.order())?)
                } else {
                    let c = scalar(cur, base)?;
                    let g = if cur.eat("*") { group_index(cur, group.order())? } else { group.identity() };
                    (c, g)
                };
                let c = if neg { base.neg(&c) } else { c };
                coeffs[g] = base.add(&coeffs[g], &c);
                cur.skip_ws();
                if !matches!(cur.peek(), Some('+' | '-')) {
                    break;
                }
            }
            ring.group_element(coeffs).map_err(|e| core_error(cur, start, e))
        }
        Ring::MatrixAmplification { base, k } => {
            if !cur.eat("{") {
                let n = cur.integer()?;
                return Ok(ring.from_integer(&n));
            }
            let mut entries = Vec::with_capacity(k * k);
            for i in 0..*k {
                if i > 0 {
                    cur.expect("|")?;
                }
                for _ in 0..*k {
                    entries.push(scalar(cur, base)?);
                }
            }
            cur.expect("}")?;
            Ok(Scalar::Block(entries))
        }
    }
}

fn group_index(cur: &mut Cursor<'_>, order: usize) -> ParseResult<usize> {
    cur.expect("g")?;
    let at = cur.mark();
    let i = cur.usize()?;
    if i >= order {
        return Err(cur.error_at(at, format!("group element g{i} out of range for order {order}")));
    }
    Ok(i)
}

/// Rows separated by `row_sep`, entries by `,`. An empty body is a `0 x 0`
/// matrix unless a shape prefix `RxC:` is given, e.g. `0x3:`.
pub(crate) fn matrix(cur: &mut Cursor<'_>, ring: &Ring, row_sep: char, stop: Option<char>) -> ParseResult<Matrix> {
    let shape = shape_prefix(cur)?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let body_empty = |c: &mut Cursor<'_>| c.at_end() || (stop.is_some() && c.peek() == stop);
    if !body_empty(cur) {
        loop {
            let row_at = cur.mark();
            let mut row = vec![scalar(cur, ring)?];
            while cur.eat(",") {
                row.push(scalar(cur, ring)?);
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(cur.error_at(row_at, format!("row has {} entries, expected {}", row.len(), first.len())));
                }
            }
            rows.push(row);
            let mut sep = [0u8; 4];
            if !cur.eat(row_sep.encode_utf8(&mut sep)) {
                break;
            }
        }
    }
    let cols = rows.first().map_or(0, |r| r.len());
    if let Some((at, r, c)) = shape {
        if rows.is_empty() {
            if r != 0 && c != 0 {
                return Err(cur.error_at(at, "a shape prefix without entries must have a zero dimension"));
            }
            return Ok(Matrix::zeros(ring, r, c));
        }
        if rows.len() != r || cols != c {
            return Err(cur.error_at(at, format!("shape {r}x{c} does not match the {}x{cols} entries", rows.len())));
        }
    }
    Matrix::from_rows(ring, cols, rows).map_err(|e| cur.error(e.to_string()))
}

fn shape_prefix(cur: &mut Cursor<'_>) -> ParseResult<Option<(usize, usize, usize)>> {
    cur.skip_ws();
    let save = cur.mark();
    let mut probe = cur.clone();
    let Ok(r) = probe.usize() else { return Ok(None) };
    if !probe.rest().starts_with('x') {
        return Ok(None);
    }
    probe.bump();
    let Ok(c) = probe.usize() else { return Ok(None) };
    if !probe.eat(":") {
        return Ok(None);
    }
    *cur = probe;
    Ok(Some((save, r, c)))
}
