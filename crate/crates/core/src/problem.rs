//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! vars: x y z
//! order: degrevlex
//! completion_order: lex
//! x^2*y - z
//! x*z - y
//! ```
//! `vars` is required and fixes the variable order (first = greatest).
//! `order` defaults to `degrevlex`; `completion_order` defaults to `order`.
//! Every other non-empty line holds one polynomial (or monomial).

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::monomials::{Monomial, MonomialOrdering, VariableContext};
use crate::polynomials::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    /// 1-based source line.
    pub line: usize,
    pub poly: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub context: VariableContext,
    pub order: MonomialOrdering,
    pub completion_order: Option<MonomialOrdering>,
    pub entries: Vec<Entry>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn leading_ws_chars(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

impl ProblemFile {
    pub fn new(context: VariableContext, order: MonomialOrdering, polys: Vec<Polynomial>) -> Self {
        ProblemFile {
            context,
            order,
            completion_order: None,
            entries: polys
                .into_iter()
                .enumerate()
                .map(|(i, poly)| Entry { line: i + 1, poly })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<ProblemFile, ParseError> {
        let mut vars: Option<(usize, VariableContext)> = None;
        let mut order: Option<MonomialOrdering> = None;
        let mut completion_order: Option<MonomialOrdering> = None;
        let mut body: Vec<(usize, &str)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let Some(colon) = line.find(':') else {
                body.push((line_no, line));
                continue;
            };
            let key = line[..colon].trim().to_ascii_lowercase();
            let value = &line[colon + 1..];
            let value_col = line[..colon + 1].chars().count() + 1 + leading_ws_chars(value);
            let err = |msg: String| ParseError::new(line_no, value_col, msg);
            match key.as_str() {
                "vars" | "variables" => {
                    if vars.is_some() {
                        return Err(ParseError::new(line_no, 1, "`vars` declared twice"));
                    }
                    let ctx = VariableContext::new(value.split_whitespace().map(|s| s.trim_end_matches(',')))
                        .map_err(|e| err(e.to_string()))?;
                    vars = Some((line_no, ctx));
                }
                "order" => {
                    if order.is_some() {
                        return Err(ParseError::new(line_no, 1, "`order` declared twice"));
                    }
                    order = Some(value.parse().map_err(err)?);
                }
                "completion_order" | "completion-order" => {
                    if completion_order.is_some() {
                        return Err(ParseError::new(line_no, 1, "`completion_order` declared twice"));
                    }
                    completion_order = Some(value.parse().map_err(err)?);
                }
                other => {
                    let col = leading_ws_chars(line) + 1;
                    return Err(ParseError::new(line_no, col, format!("unknown header `{other}`")));
                }
            }
        }

        let Some((_, context)) = vars else {
            return Err(ParseError::new(1, 1, "missing `vars:` declaration"));
        };
        let order = order.unwrap_or(MonomialOrdering::DegRevLex);
        let mut entries = Vec::with_capacity(body.len());
        for (line_no, text) in body {
            let poly = Polynomial::parse(text, &context, order).map_err(|e| e.on_line(line_no))?;
            entries.push(Entry { line: line_no, poly });
        }
        Ok(ProblemFile {
            context,
            order,
            completion_order,
            entries,
        })
    }

    pub fn completion_order(&self) -> MonomialOrdering {
        self.completion_order.unwrap_or(self.order)
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|e| e.poly.clone()).collect()
    }

    /// Entries as monomials; each must be a single term with coefficient 1.
    pub fn monomials(&self) -> Result<Vec<Monomial>, ParseError> {
        self.entries
            .iter()
            .map(|e| match e.poly.terms() {
                [t] if t.coeff == num_rational::BigRational::from_integer(1.into()) => Ok(t.monomial.clone()),
                _ => Err(ParseError::new(1, 1, "expected a monomial").on_line(e.line)),
            })
            .collect()
    }

    /// Canonical text form; parses back to an equal `ProblemFile` up to line
    /// numbers.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vars: {}", self.context.names().join(" "));
        let _ = writeln!(out, "order: {}", self.order);
        if let Some(c) = self.completion_order {
            let _ = writeln!(out, "completion_order: {c}");
        }
        for e in &self.entries {
            let _ = writeln!(out, "{}", e.poly.display(&self.context));
        }
        out
    }
}
