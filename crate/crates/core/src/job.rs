//! Job files: a presentation, a number field with an embedding hint, the
//! generator images, and an optional reference volume.
//!
//! ```text
//! gens: a b
//! rel: aBAba = baBAb
//! field: 1 1 1
//! embed: -0.5 0.8660254
//! rep a: [[[1],[1]],[[0],[1]]]
//! rep b: [[[1],[0]],[[0,-1],[1]]]
//! reference: 2.02988
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{parse_coefficient_vector, NfElement, NumberField};
use crate::group::{split_key, strip_comment, tokens, Presentation};
use crate::matrix::Matrix;
use crate::rep::{check_relations, RepSl2};

#[derive(Clone, Debug)]
pub struct Job {
    pub presentation: Presentation,
    pub field: Arc<NumberField>,
    pub rep: RepSl2<NfElement>,
    /// Reference volume as written in the file.
    pub reference: Option<String>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

impl Job {
    /// Parses and validates: every image has determinant 1 and every
    /// relation holds exactly.
    pub fn parse(text: &str) -> Result<Self> {
        let job = Self::parse_unchecked(text)?;
        job.validate()?;
        Ok(job)
    }

    /// Parses without the determinant and relation checks.
    pub fn parse_unchecked(text: &str) -> Result<Self> {
        let mut group_lines = Vec::new();
        let mut field_line: Option<(usize, usize, &str)> = None;
        let mut embed_line: Option<(usize, usize, &str)> = None;
        let mut rep_lines: Vec<(usize, usize, char, &str)> = Vec::new();
        let mut reference = None;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let (key, body, col) = split_key(line, line_no)?;
            match key {
                "gens" | "rel" | "alpha" => group_lines.push((line_no, raw)),
                "field" | "embed" => {
                    let slot = if key == "field" {
                        &mut field_line
                    } else {
                        &mut embed_line
                    };
                    if slot.is_some() {
                        return Err(syntax(line_no, 1, format!("duplicate `{key}:` line")));
                    }
                    *slot = Some((line_no, col, body));
                }
                "reference" => {
                    if reference.is_some() {
                        return Err(syntax(line_no, 1, "duplicate `reference:` line"));
                    }
                    let value = body.trim();
                    if value.parse::<f64>().map_or(true, |v| !v.is_finite()) {
                        return Err(syntax(line_no, col, format!("bad decimal `{value}`")));
                    }
                    reference = Some(value.to_string());
                }
                k if k.starts_with("rep") => {
                    let name = k["rep".len()..].trim();
                    let mut chars = name.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) if c.is_ascii_lowercase() => {
                            rep_lines.push((line_no, col, c, body))
                        }
                        _ => {
                            return Err(syntax(
                                line_no,
                                1,
                                format!("expected `rep <letter>:`, found `{k}:`"),
                            ))
                        }
                    }
                }
                other => return Err(syntax(line_no, 1, format!("unknown key `{other}`"))),
            }
        }

        let presentation = Presentation::parse_lines(group_lines)?;
        let field = parse_field(field_line, embed_line)?;

        let g = presentation.num_generators();
        let mut images: Vec<Option<Matrix<NfElement>>> = vec![None; g];
        for (line_no, col, name, body) in rep_lines {
            let idx = presentation.generator_index(name).ok_or_else(|| {
                syntax(
                    line_no,
                    1,
                    format!("`rep {name}` names an undeclared generator"),
                )
            })?;
            if images[idx].is_some() {
                return Err(syntax(line_no, 1, format!("duplicate `rep {name}:` line")));
            }
            images[idx] = Some(parse_matrix(body, &field, line_no, col)?);
        }
        let mut full = Vec::with_capacity(g);
        for (idx, m) in images.into_iter().enumerate() {
            let name = presentation.generators()[idx];
            full.push(m.ok_or_else(|| syntax(1, 1, format!("missing `rep {name}:` line")))?);
        }
        let rep = RepSl2::new_unchecked(full)?;
        Ok(Job {
            presentation,
            field,
            rep,
            reference,
        })
    }

    /// Determinant-one and relation checks.
    pub fn validate(&self) -> Result<()> {
        if let Some((g, det)) = self.rep.determinant_failures().into_iter().next() {
            return Err(Error::NotSl2 {
                generator: self.presentation.generators()[g],
                det: crate::scalar::Scalar::to_coeff_string(&det),
            });
        }
        let failures = check_relations(&self.rep, &self.presentation)?;
        if !failures.is_empty() {
            return Err(Error::RelationCheck(
                failures.iter().map(|f| f.index).collect(),
            ));
        }
        Ok(())
    }

    /// Same job with every generator sent to the identity.
    pub fn with_trivial_rep(&self) -> Self {
        Job {
            rep: RepSl2::trivial(self.presentation.num_generators()),
            ..self.clone()
        }
    }

    /// Same job with a different embedding hint.
    pub fn with_embedding_hint(&self, re: f64, im: f64) -> Result<Self> {
        let coeffs: Vec<BigInt> = self
            .field
            .modulus()
            .iter()
            .map(|c| c.to_integer())
            .collect();
        let field = NumberField::new(&coeffs, Some((re, im)))?;
        let rebase = |x: &NfElement| field.element(x.coefficient_vector());
        let images = (0..self.rep.num_generators())
            .map(|g| self.rep.image(g).map(rebase))
            .collect();
        Ok(Job {
            presentation: self.presentation.clone(),
            field: Arc::clone(&field),
            rep: RepSl2::new_unchecked(images)?,
            reference: self.reference.clone(),
        })
    }
}

fn parse_field(
    field_line: Option<(usize, usize, &str)>,
    embed_line: Option<(usize, usize, &str)>,
) -> Result<Arc<NumberField>> {
    let Some((line_no, col, body)) = field_line else {
        if let Some((line_no, _, _)) = embed_line {
            return Err(syntax(line_no, 1, "`embed:` given without `field:`"));
        }
        return Ok(NumberField::rationals());
    };
    let mut coeffs = Vec::new();
    for (c, tok) in tokens(body, col) {
        coeffs.push(
            tok.parse::<BigInt>()
                .map_err(|_| syntax(line_no, c, format!("bad integer `{tok}`")))?,
        );
    }
    let hint = match embed_line {
        None => None,
        Some((eline, ecol, ebody)) => {
            let toks = tokens(ebody, ecol);
            if toks.len() != 2 {
                return Err(syntax(eline, ecol, "`embed:` expects two decimals"));
            }
            let num = |(c, t): (usize, &str)| {
                t.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| syntax(eline, c, format!("bad decimal `{t}`")))
            };
            Some((num(toks[0])?, num(toks[1])?))
        }
    };
    NumberField::new(&coeffs, hint)
}

#[derive(Debug)]
enum Nested<'a> {
    Leaf(&'a str, usize),
    List(Vec<Nested<'a>>, usize),
}

/// Recursive-descent parse of a bracketed list; positions are byte offsets.
fn parse_nested<'a>(
    s: &'a str,
    pos: &mut usize,
) -> std::result::Result<Nested<'a>, (usize, String)> {
    let bytes = s.as_bytes();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(pos);
    let start = *pos;
    if bytes.get(*pos) != Some(&b'[') {
        return Err((start, "expected `[`".into()));
    }
    *pos += 1;
    skip_ws(pos);
    if bytes.get(*pos) == Some(&b'[') {
        let mut items = Vec::new();
        loop {
            items.push(parse_nested(s, pos)?);
            skip_ws(pos);
            match bytes.get(*pos) {
                Some(b',') => *pos += 1,
                Some(b']') => {
                    *pos += 1;
                    return Ok(Nested::List(items, start));
                }
                _ => return Err((*pos, "expected `,` or `]`".into())),
            }
        }
    }
    let close = s[*pos..]
        .find(']')
        .ok_or_else(|| (start, "unclosed `[`".to_string()))?;
    let leaf = &s[start..*pos + close + 1];
    *pos += close + 1;
    Ok(Nested::Leaf(leaf, start))
}

/// `[[v,v],[v,v]]` with `v` a bracketed coefficient vector.
fn parse_matrix(
    body: &str,
    field: &Arc<NumberField>,
    line_no: usize,
    col0: usize,
) -> Result<Matrix<NfElement>> {
    let at = |offset: usize, msg: String| syntax(line_no, col0 + offset, msg);
    let mut pos = 0;
    let tree = parse_nested(body, &mut pos).map_err(|(o, m)| at(o, m))?;
    if !body[pos..].trim().is_empty() {
        return Err(at(pos, "trailing characters after matrix".into()));
    }
    let shape_err = |o| at(o, "expected a 2x2 matrix `[[v,v],[v,v]]`".into());
    let Nested::List(rows, o) = tree else {
        return Err(shape_err(0));
    };
    if rows.len() != 2 {
        return Err(shape_err(o));
    }
    let mut out = Vec::new();
    for row in rows {
        let Nested::List(cells, o) = row else {
            return Err(shape_err(o_of(&row)));
        };
        if cells.len() != 2 {
            return Err(shape_err(o));
        }
        let mut r = Vec::new();
        for cell in cells {
            match cell {
                Nested::Leaf(text, o) => {
                    r.push(parse_coefficient_vector(text, field).map_err(|m| at(o, m))?)
                }
                Nested::List(_, o) => {
                    return Err(at(
                        o,
                        "matrix entry must be a flat coefficient vector".into(),
                    ))
                }
            }
        }
        out.push(r);
    }
    Ok(Matrix::from_rows(out))
}

fn o_of(n: &Nested<'_>) -> usize {
    match n {
        Nested::Leaf(_, o) | Nested::List(_, o) => *o,
    }
}
