//! Parser for group-description strings.
//!
//! Grammar:
//!
//! ```text
//! spec := term (("x" | "*") term)*
//! term := atom | "(" spec ")"
//! atom := ("Z" | "D" | "Q" | "S" | "A") integer
//! ```
//!
//! Letters are case-insensitive and whitespace is ignored. For `Z`, `D`
//! and `Q` the integer is the group order (`D30` is the dihedral group of
//! order 30, `Q12` the dicyclic group of order 12); `S` and `A` use the
//! symmetric-degree convention (`S5` acts on 5 points). Products are
//! flattened to a single n-ary direct product.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A single group atom of the description language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    /// Cyclic group of order n (n >= 1).
    Cyclic(u32),
    /// Dihedral group of order 2m (even, >= 6), presentation
    /// ⟨x, y : x^m = y^2 = e, xy = yx⁻¹⟩.
    Dihedral(u32),
    /// Dicyclic group of order 4n (>= 8), presentation
    /// ⟨a, b : a^{2n} = e, a^n = b^2, ba = a⁻¹b⟩.
    Dicyclic(u32),
    /// Symmetric group on n points (n >= 1).
    Symmetric(u32),
    /// Alternating group on n points (n >= 1).
    Alternating(u32),
}

impl Atom {
    /// Number of elements of the realized atom.
    pub fn order(&self) -> u64 {
        match *self {
            Atom::Cyclic(n) => n as u64,
            Atom::Dihedral(n) | Atom::Dicyclic(n) => n as u64,
            Atom::Symmetric(n) => factorial(n),
            Atom::Alternating(n) => {
                let f = factorial(n);
                if n <= 2 {
                    1
                } else {
                    f / 2
                }
            }
        }
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Dicyclic(n) => write!(f, "Q{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
        }
    }
}

/// Parsed abstract syntax of a group description.
///
/// Direct products are associative up to isomorphism, so nested products
/// are flattened into one factor list at parse time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecNode {
    Atom(Atom),
    /// n-ary direct product, at least two factors.
    Product(Vec<Atom>),
}

impl SpecNode {
    pub fn atoms(&self) -> &[Atom] {
        match self {
            SpecNode::Atom(a) => core::slice::from_ref(a),
            SpecNode::Product(v) => v,
        }
    }

    pub fn order(&self) -> u64 {
        self.atoms()
            .iter()
            .fold(1u64, |acc, a| acc.saturating_mul(a.order()))
    }
}

/// A group description: the flattened AST plus the original source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub ast: SpecNode,
    pub source: String,
}

impl GroupSpec {
    /// Canonical rendering of the AST; `parse(render(..))` round-trips.
    pub fn render(&self) -> String {
        render(&self.ast)
    }

    pub fn order(&self) -> u64 {
        self.ast.order()
    }
}

pub fn render(ast: &SpecNode) -> String {
    match ast {
        SpecNode::Atom(a) => a.to_string(),
        SpecNode::Product(v) => {
            let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
            parts.join(" x ")
        }
    }
}

/// Errors of the description language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    /// Malformed input; `offset` is the byte position of the offending text.
    Syntax { offset: usize, message: String },
    /// Grammatically valid atom with an impossible parameter.
    Semantic { offset: usize, message: String },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            SpecError::Semantic { offset, message } => {
                write!(f, "semantic error at byte {offset}: {message}")
            }
        }
    }
}

impl core::error::Error for SpecError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn syntax(&self, message: &str) -> SpecError {
        SpecError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn parse_spec(&mut self) -> Result<Vec<Atom>, SpecError> {
        let mut atoms = self.parse_term()?;
        while let Some(c) = self.peek() {
            match c {
                b'x' | b'X' | b'*' => {
                    self.pos += 1;
                    atoms.extend(self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(atoms)
    }

    fn parse_term(&mut self) -> Result<Vec<Atom>, SpecError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_spec()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.syntax("expected ')'")),
                }
            }
            Some(_) => Ok(alloc::vec![self.parse_atom()?]),
            None => Err(self.syntax("expected a group atom")),
        }
    }

    fn parse_atom(&mut self) -> Result<Atom, SpecError> {
        let letter = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => c.to_ascii_uppercase(),
            _ => return Err(self.syntax("expected one of Z, D, Q, S, A")),
        };
        let atom_offset = self.pos;
        self.pos += 1;
        self.skip_ws();
        let num_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == num_start {
            return Err(self.syntax("expected an integer after the atom letter"));
        }
        let digits = core::str::from_utf8(&self.bytes[num_start..self.pos]).unwrap();
        let n: u32 = digits.parse().map_err(|_| SpecError::Semantic {
            offset: num_start,
            message: format!("integer '{digits}' out of range"),
        })?;
        let semantic = |message: String| SpecError::Semantic {
            offset: atom_offset,
            message,
        };
        match letter {
            b'Z' => {
                if n < 1 {
                    return Err(semantic("cyclic order must be >= 1".to_string()));
                }
                Ok(Atom::Cyclic(n))
            }
            b'D' => {
                if n % 2 != 0 || n < 6 {
                    return Err(semantic(format!(
                        "dihedral order must be even and >= 6, got {n}"
                    )));
                }
                Ok(Atom::Dihedral(n))
            }
            b'Q' => {
                if n % 4 != 0 || n < 8 {
                    return Err(semantic(format!(
                        "dicyclic order must be a multiple of 4 and >= 8, got {n}"
                    )));
                }
                Ok(Atom::Dicyclic(n))
            }
            b'S' => {
                if n < 1 {
                    return Err(semantic("symmetric degree must be >= 1".to_string()));
                }
                Ok(Atom::Symmetric(n))
            }
            b'A' => {
                if n < 1 {
                    return Err(semantic("alternating degree must be >= 1".to_string()));
                }
                Ok(Atom::Alternating(n))
            }
            other => Err(self.syntax(&format!(
                "unknown atom letter '{}'",
                other as char
            ))),
        }
    }
}

/// Parse a group description string.
pub fn parse(text: &str) -> Result<GroupSpec, SpecError> {
    if text.trim().is_empty() {
        return Err(SpecError::Syntax {
            offset: 0,
            message: "empty group description".to_string(),
        });
    }
    let mut p = Parser::new(text);
    let atoms = p.parse_spec()?;
    if p.peek().is_some() {
        return Err(p.syntax("trailing input after group description"));
    }
    let ast = if atoms.len() == 1 {
        SpecNode::Atom(atoms[0])
    } else {
        SpecNode::Product(atoms)
    };
    Ok(GroupSpec {
        ast,
        source: text.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_atoms() {
        assert_eq!(parse("D30").unwrap().ast, SpecNode::Atom(Atom::Dihedral(30)));
        assert_eq!(parse(" s5 ").unwrap().ast, SpecNode::Atom(Atom::Symmetric(5)));
        assert_eq!(parse("q8").unwrap().ast, SpecNode::Atom(Atom::Dicyclic(8)));
    }

    #[test]
    fn parses_products_and_flattens() {
        let s = parse("Z2 x Z9").unwrap();
        assert_eq!(
            s.ast,
            SpecNode::Product(alloc::vec![Atom::Cyclic(2), Atom::Cyclic(9)])
        );
        let nested = parse("(Z2 * Z3) x (Z5 x S3)").unwrap();
        assert_eq!(
            nested.ast,
            SpecNode::Product(alloc::vec![
                Atom::Cyclic(2),
                Atom::Cyclic(3),
                Atom::Cyclic(5),
                Atom::Symmetric(3)
            ])
        );
    }

    #[test]
    fn rejects_bad_dihedral_order() {
        // odd order
        match parse("D7") {
            Err(SpecError::Semantic { .. }) => {}
            other => panic!("expected semantic error, got {other:?}"),
        }
        // too small
        assert!(matches!(parse("D4"), Err(SpecError::Semantic { .. })));
        assert!(matches!(parse("Q6"), Err(SpecError::Semantic { .. })));
        assert!(matches!(parse("Q4"), Err(SpecError::Semantic { .. })));
        assert!(matches!(parse("Z0"), Err(SpecError::Semantic { .. })));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse("Z2 x") {
            Err(SpecError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("Z2 ) Z3") {
            Err(SpecError::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse(""), Err(SpecError::Syntax { .. })));
        assert!(matches!(parse("B5"), Err(SpecError::Syntax { .. })));
    }

    #[test]
    fn order_of_products_multiplies() {
        assert_eq!(parse("Z2 x Z9").unwrap().order(), 18);
        assert_eq!(parse("S5").unwrap().order(), 120);
        assert_eq!(parse("A7").unwrap().order(), 2520);
        assert_eq!(parse("D30 x Q8").unwrap().order(), 240);
    }

    #[test]
    fn render_round_trips() {
        for text in ["D30", "Z2 x Z9", "(Z2 x Z3) x S4", "q12 * a5"] {
            let s = parse(text).unwrap();
            let r = s.render();
            assert_eq!(parse(&r).unwrap().ast, s.ast, "round trip of {text}");
        }
    }
}
