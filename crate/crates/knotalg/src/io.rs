//! Line-oriented text formats for Seifert forms, chain complexes, wall
//! triads, chain-level cobordism triads and Murasugi–Kawauchi instances,
//! with parse diagnostics naming the offending line.

use crate::chain::{ChainComplex, ChainMap, RelativeCobordismTriad};
use crate::exact_linalg::IntMatrix;
use crate::forms::{Eps, EpsSymmetricForm, TriadLagrangians};
use crate::polyarith::RootOfUnity;
use crate::seifert::{MKInstance, SeifertForm};
use num_bigint::BigInt;
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A cursor over the meaningful lines of a document (blank lines and
/// `#` comments are skipped), remembering positions for diagnostics.
struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let l = self.peek();
        if l.is_some() {
            self.pos += 1;
        }
        l
    }

    fn last_line_number(&self) -> usize {
        self.lines.last().map_or(0, |(n, _)| *n)
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.next_line().ok_or_else(|| ParseError {
            line: self.last_line_number() + 1,
            message: format!("unexpected end of file, expected {}", what),
        })
    }

    fn expect_keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let (n, l) = self.expect(&format!("'{}'", keyword))?;
        let mut parts = l.split_whitespace();
        let head = parts.next().unwrap_or("");
        if head != keyword {
            return Err(ParseError {
                line: n,
                message: format!("expected '{}', found '{}'", keyword, head),
            });
        }
        Ok((n, parts.collect()))
    }

    fn done(&mut self) -> Result<(), ParseError> {
        if let Some((n, l)) = self.peek() {
            return Err(ParseError {
                line: n,
                message: format!("unexpected trailing content '{}'", l),
            });
        }
        Ok(())
    }
}

fn parse_int<T: FromStr>(line: usize, field: &str, s: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| ParseError {
        line,
        message: format!("field '{}': cannot parse '{}'", field, s),
    })
}

fn parse_row(line: usize, s: &str, expected: usize, row: usize) -> Result<Vec<BigInt>, ParseError> {
    let entries: Result<Vec<BigInt>, _> = s
        .split_whitespace()
        .map(|tok| {
            BigInt::from_str(tok).map_err(|_| ParseError {
                line,
                message: format!("row {}: '{}' is not an integer", row + 1, tok),
            })
        })
        .collect();
    let entries = entries?;
    if entries.len() != expected {
        return Err(ParseError {
            line,
            message: format!(
                "row {} has {} entries, expected {}",
                row + 1,
                entries.len(),
                expected
            ),
        });
    }
    Ok(entries)
}

/// Matrices with no rows or no columns have no body lines.
fn parse_matrix(lines: &mut Lines, rows: usize, cols: usize) -> Result<IntMatrix, ParseError> {
    if rows == 0 || cols == 0 {
        return Ok(IntMatrix::zeros(rows, cols));
    }
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let (n, l) = lines.expect(&format!("matrix row {} of {}", r + 1, rows))?;
        data.push(parse_row(n, l, cols, r)?);
    }
    Ok(IntMatrix::from_fn(rows, cols, |i, j| data[i][j].clone()))
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    if m.rows() == 0 || m.cols() == 0 {
        return;
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", m[(i, j)]);
        }
        out.push('\n');
    }
}

// ---- Seifert form files ----

/// A parsed Seifert form document: parity, square matrix, optional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertFile {
    pub label: Option<String>,
    pub form: SeifertForm,
}

pub fn parse_seifert_file(text: &str) -> Result<SeifertFile, ParseError> {
    let mut lines = Lines::new(text);
    let label = match lines.peek() {
        Some((_, l)) if l.starts_with("label") => {
            let (n, args) = lines.expect_keyword("label")?;
            if args.is_empty() {
                return Err(ParseError {
                    line: n,
                    message: "field 'label': missing value".into(),
                });
            }
            Some(args.join(" "))
        }
        _ => None,
    };
    let (n, args) = lines.expect_keyword("parity")?;
    let parity: u8 = match args.as_slice() {
        [v] => parse_int::<u64>(n, "parity", v)? as u8 % 2,
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'parity': expected one integer".into(),
            })
        }
    };
    let (n, args) = lines.expect_keyword("matrix")?;
    let dim: usize = match args.as_slice() {
        [v] => parse_int(n, "matrix", v)?,
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'matrix': expected the dimension".into(),
            })
        }
    };
    let m = parse_matrix(&mut lines, dim, dim)?;
    lines.done()?;
    let form = SeifertForm::new(m, parity).expect("square by construction");
    Ok(SeifertFile { label, form })
}

pub fn print_seifert_file(file: &SeifertFile) -> String {
    let mut out = String::new();
    if let Some(label) = &file.label {
        let _ = writeln!(out, "label {}", label);
    }
    let _ = writeln!(out, "parity {}", file.form.parity());
    let _ = writeln!(out, "matrix {}", file.form.dim());
    write_matrix(&mut out, file.form.matrix());
    out
}

// ---- chain complex files ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub label: Option<String>,
    pub complex: ChainComplex,
}

fn parse_complex_body(lines: &mut Lines) -> Result<ChainComplex, ParseError> {
    let (n, args) = lines.expect_keyword("degrees")?;
    let (lo, hi): (i64, i64) = match args.as_slice() {
        [a, b] => (parse_int(n, "degrees", a)?, parse_int(n, "degrees", b)?),
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'degrees': expected 'degrees <lo> <hi>'".into(),
            })
        }
    };
    if hi < lo {
        return Err(ParseError {
            line: n,
            message: format!("degree range [{}, {}] is empty", lo, hi),
        });
    }
    let (n, args) = lines.expect_keyword("ranks")?;
    if args.len() != (hi - lo + 1) as usize {
        return Err(ParseError {
            line: n,
            message: format!(
                "field 'ranks': expected {} ranks for degrees {}..={}",
                hi - lo + 1,
                lo,
                hi
            ),
        });
    }
    let ranks: Result<Vec<usize>, _> = args
        .iter()
        .map(|v| parse_int::<usize>(n, "ranks", v))
        .collect();
    let ranks = ranks?;
    let mut interior = Vec::new();
    for r in lo + 1..=hi {
        let (n, args) = lines.expect_keyword("differential")?;
        match args.as_slice() {
            [v] if parse_int::<i64>(n, "differential", v)? == r => {}
            _ => {
                return Err(ParseError {
                    line: n,
                    message: format!("expected 'differential {}'", r),
                })
            }
        }
        let rows = ranks[(r - 1 - lo) as usize];
        let cols = ranks[(r - lo) as usize];
        interior.push(parse_matrix(lines, rows, cols)?);
    }
    ChainComplex::new(lo, ranks, interior).map_err(|e| ParseError {
        line: n,
        message: format!("invalid complex: {}", e),
    })
}

pub fn parse_complex_file(text: &str) -> Result<ComplexFile, ParseError> {
    let mut lines = Lines::new(text);
    let label = match lines.peek() {
        Some((_, l)) if l.starts_with("label") => {
            let (_, args) = lines.expect_keyword("label")?;
            Some(args.join(" "))
        }
        _ => None,
    };
    let complex = parse_complex_body(&mut lines)?;
    lines.done()?;
    Ok(ComplexFile { label, complex })
}

fn write_complex_body(out: &mut String, c: &ChainComplex) {
    let (lo, hi) = if c.is_zero_complex() {
        (0, 0)
    } else {
        (c.degree_lo(), c.degree_hi())
    };
    let _ = writeln!(out, "degrees {} {}", lo, hi);
    let ranks: Vec<String> = (lo..=hi).map(|r| c.rank_at(r).to_string()).collect();
    let _ = writeln!(out, "ranks {}", ranks.join(" "));
    for r in lo + 1..=hi {
        let _ = writeln!(out, "differential {}", r);
        write_matrix(out, &c.differential_at(r));
    }
}

pub fn print_complex_file(file: &ComplexFile) -> String {
    let mut out = String::new();
    if let Some(label) = &file.label {
        let _ = writeln!(out, "label {}", label);
    }
    write_complex_body(&mut out, &file.complex);
    out
}

// ---- wall triad files (a form with three lagrangians) ----

pub fn parse_wall_file(text: &str) -> Result<TriadLagrangians, ParseError> {
    let mut lines = Lines::new(text);
    let (n, args) = lines.expect_keyword("epsilon")?;
    let eps = match args.as_slice() {
        ["1"] | ["+1"] => Eps::Plus,
        ["-1"] => Eps::Minus,
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'epsilon': expected 1 or -1".into(),
            })
        }
    };
    let (n, args) = lines.expect_keyword("dim")?;
    let dim: usize = match args.as_slice() {
        [v] => parse_int(n, "dim", v)?,
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'dim': expected one integer".into(),
            })
        }
    };
    let (gn, _) = lines.expect_keyword("gram")?;
    let gram = parse_matrix(&mut lines, dim, dim)?;
    let ambient = EpsSymmetricForm::new(eps, gram).map_err(|e| ParseError {
        line: gn,
        message: format!("invalid gram matrix: {}", e),
    })?;
    let mut parse_lagrangian = |which: &str| -> Result<IntMatrix, ParseError> {
        let (n, args) = lines.expect_keyword("lagrangian")?;
        match args.as_slice() {
            [w, r] if *w == which => {
                let rank: usize = parse_int(n, "lagrangian", r)?;
                // vectors are given as rows of length dim; columns of the
                // inclusion matrix
                let rows = parse_matrix(&mut lines, rank, dim)?;
                Ok(rows.transpose())
            }
            _ => Err(ParseError {
                line: n,
                message: format!("expected 'lagrangian {} <rank>'", which),
            }),
        }
    };
    let j_minus = parse_lagrangian("minus")?;
    let j_dprime = parse_lagrangian("dprime")?;
    let j_plus = parse_lagrangian("plus")?;
    lines.done()?;
    TriadLagrangians::new(ambient, j_minus, j_dprime, j_plus).map_err(|e| ParseError {
        line: 0,
        message: format!("invalid triad: {}", e),
    })
}

pub fn print_wall_file(t: &TriadLagrangians) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "epsilon {}", t.ambient.epsilon().sign());
    let _ = writeln!(out, "dim {}", t.ambient.dim());
    let _ = writeln!(out, "gram");
    write_matrix(&mut out, t.ambient.gram());
    for (name, j) in [
        ("minus", &t.j_minus),
        ("dprime", &t.j_dprime),
        ("plus", &t.j_plus),
    ] {
        let _ = writeln!(out, "lagrangian {} {}", name, j.cols());
        write_matrix(&mut out, &j.transpose());
    }
    out
}

// ---- chain triad files ----

const TRIAD_COMPLEXES: [&str; 6] = ["B", "Bp", "C", "Cp", "E", "D"];
const TRIAD_MAPS: [(&str, &str); 7] = [
    ("B", "C"),
    ("B", "E"),
    ("Bp", "Cp"),
    ("Bp", "E"),
    ("C", "D"),
    ("Cp", "D"),
    ("E", "D"),
];

pub fn parse_chain_triad_file(text: &str) -> Result<RelativeCobordismTriad, ParseError> {
    let mut lines = Lines::new(text);
    let mut complexes = Vec::new();
    for name in TRIAD_COMPLEXES {
        let (n, args) = lines.expect_keyword("complex")?;
        if args.as_slice() != [name] {
            return Err(ParseError {
                line: n,
                message: format!("expected 'complex {}'", name),
            });
        }
        complexes.push(parse_complex_body(&mut lines)?);
    }
    let complex_of = |name: &str| -> &ChainComplex {
        &complexes[TRIAD_COMPLEXES.iter().position(|c| *c == name).unwrap()]
    };
    let mut maps = Vec::new();
    for (src_name, dst_name) in TRIAD_MAPS {
        let (n, args) = lines.expect_keyword("map")?;
        if args.as_slice() != [src_name, dst_name] {
            return Err(ParseError {
                line: n,
                message: format!("expected 'map {} {}'", src_name, dst_name),
            });
        }
        let src = complex_of(src_name);
        let dst = complex_of(dst_name);
        let (lo, hi) = (
            src.degree_lo().min(dst.degree_lo()),
            src.degree_hi().max(dst.degree_hi()),
        );
        let mut comps = Vec::new();
        for r in lo..=hi {
            let (n, args) = lines.expect_keyword("component")?;
            match args.as_slice() {
                [v] if parse_int::<i64>(n, "component", v)? == r => {}
                _ => {
                    return Err(ParseError {
                        line: n,
                        message: format!("expected 'component {}'", r),
                    })
                }
            }
            comps.push(parse_matrix(&mut lines, dst.rank_at(r), src.rank_at(r))?);
        }
        let map = ChainMap::new(src.clone(), dst.clone(), lo, comps).map_err(|e| ParseError {
            line: n,
            message: format!("invalid map {} -> {}: {}", src_name, dst_name, e),
        })?;
        maps.push(map);
    }
    lines.done()?;
    let mut it = maps.into_iter();
    let (b_to_c, b_to_e, bp_to_cp, bp_to_e, c_to_d, cp_to_d, e_to_d) = (
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    );
    RelativeCobordismTriad::new(b_to_c, b_to_e, bp_to_cp, bp_to_e, c_to_d, cp_to_d, e_to_d)
        .map_err(|e| ParseError {
            line: 0,
            message: format!("invalid triad: {}", e),
        })
}

pub fn print_chain_triad_file(t: &RelativeCobordismTriad) -> String {
    let mut out = String::new();
    let named: [(&str, &ChainComplex); 6] = [
        ("B", &t.b),
        ("Bp", &t.b_prime),
        ("C", &t.c),
        ("Cp", &t.c_prime),
        ("E", &t.e),
        ("D", &t.d),
    ];
    for (name, c) in named {
        let _ = writeln!(out, "complex {}", name);
        write_complex_body(&mut out, c);
    }
    let maps: [(&str, &str, &ChainMap); 7] = [
        ("B", "C", &t.b_to_c),
        ("B", "E", &t.b_to_e),
        ("Bp", "Cp", &t.bp_to_cp),
        ("Bp", "E", &t.bp_to_e),
        ("C", "D", &t.c_to_d),
        ("Cp", "D", &t.cp_to_d),
        ("E", "D", &t.e_to_d),
    ];
    for (src, dst, f) in maps {
        let _ = writeln!(out, "map {} {}", src, dst);
        let (lo, hi) = (
            f.source().degree_lo().min(f.target().degree_lo()),
            f.source().degree_hi().max(f.target().degree_hi()),
        );
        for r in lo..=hi {
            let _ = writeln!(out, "component {}", r);
            write_matrix(&mut out, &f.component_at(r));
        }
    }
    out
}

// ---- Murasugi–Kawauchi instance files ----

pub fn parse_mk_file(text: &str) -> Result<MKInstance, ParseError> {
    let mut lines = Lines::new(text);
    let (n, args) = lines.expect_keyword("xi")?;
    let xi = match args.as_slice() {
        [v] => parse_root(n, v)?,
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'xi': expected p/q".into(),
            })
        }
    };
    let (n, args) = lines.expect_keyword("betti")?;
    let (bs, b0, b1): (usize, usize, usize) = match args.as_slice() {
        [a, b, c] => (
            parse_int(n, "betti", a)?,
            parse_int(n, "betti", b)?,
            parse_int(n, "betti", c)?,
        ),
        _ => {
            return Err(ParseError {
                line: n,
                message: "field 'betti': expected three integers".into(),
            })
        }
    };
    let mut parse_form = |name: &str| -> Result<SeifertForm, ParseError> {
        let (n, args) = lines.expect_keyword("form")?;
        if args.as_slice() != [name] {
            return Err(ParseError {
                line: n,
                message: format!("expected 'form {}'", name),
            });
        }
        let (n, args) = lines.expect_keyword("parity")?;
        let parity: u8 = match args.as_slice() {
            [v] => parse_int::<u64>(n, "parity", v)? as u8 % 2,
            _ => {
                return Err(ParseError {
                    line: n,
                    message: "field 'parity': expected one integer".into(),
                })
            }
        };
        let (n, args) = lines.expect_keyword("matrix")?;
        let dim: usize = match args.as_slice() {
            [v] => parse_int(n, "matrix", v)?,
            _ => {
                return Err(ParseError {
                    line: n,
                    message: "field 'matrix': expected the dimension".into(),
                })
            }
        };
        let m = parse_matrix(&mut lines, dim, dim)?;
        Ok(SeifertForm::new(m, parity).expect("square"))
    };
    let a0 = parse_form("a0")?;
    let a1 = parse_form("a1")?;
    lines.done()?;
    MKInstance::new(a0, a1, bs, b0, b1, xi).map_err(|e| ParseError {
        line: 0,
        message: format!("invalid instance: {}", e),
    })
}

pub fn print_mk_file(inst: &MKInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "xi {}", inst.xi);
    let _ = writeln!(out, "betti {} {} {}", inst.b_sigma, inst.b_sigma0, inst.b_sigma1);
    for (name, f) in [("a0", &inst.a0), ("a1", &inst.a1)] {
        let _ = writeln!(out, "form {}", name);
        let _ = writeln!(out, "parity {}", f.parity());
        let _ = writeln!(out, "matrix {}", f.dim());
        write_matrix(&mut out, f.matrix());
    }
    out
}

/// Parse "p/q" into a root of unity; `0/1` (that is, ξ = 1) is rejected
/// because every invariant here is defined away from 1.
pub fn parse_root(line: usize, s: &str) -> Result<RootOfUnity, ParseError> {
    let Some((p, q)) = s.split_once('/') else {
        return Err(ParseError {
            line,
            message: format!("'{}' is not of the form p/q", s),
        });
    };
    let p: i64 = parse_int(line, "xi", p)?;
    let q: i64 = parse_int(line, "xi", q)?;
    if q <= 0 {
        return Err(ParseError {
            line,
            message: format!("denominator of '{}' must be positive", s),
        });
    }
    RootOfUnity::new(p, q).map_err(|_| ParseError {
        line,
        message: format!("'{}' reduces to xi = 1, which is excluded (the twisted form degenerates there)", s),
    })
}
