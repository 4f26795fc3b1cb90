//! Plain-text gluing tables.
//!
//! ```text
//! tri 1
//! # comment
//! tet 0: 0:1023 0:1023 0:0132 0:0132
//! ```
//!
//! One line per tetrahedron in index order; each entry is `-` for an unglued
//! face or `<tet>:<p0p1p2p3>`.

use std::fmt::Write;

use super::{Gluing, Perm4, Triangulation};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, "tri 1")) => {}
        Some((no, other)) => return Err(syntax(no, format!("expected header `tri 1`, found `{other}`"))),
        None => return Err(syntax(1, "empty document")),
    }

    let mut rows: Vec<(usize, [Option<(usize, Perm4)>; 4])> = Vec::new();
    for (no, line) in lines {
        let rest = line
            .strip_prefix("tet ")
            .ok_or_else(|| syntax(no, "expected `tet <i>: ...`"))?;
        let (idx, body) = rest
            .split_once(':')
            .ok_or_else(|| syntax(no, "missing `:` after tetrahedron index"))?;
        let idx: usize = idx.trim().parse().map_err(|_| syntax(no, "bad tetrahedron index"))?;
        if idx != rows.len() {
            return Err(syntax(no, format!("expected tet {}, found tet {idx}", rows.len())));
        }
        let entries: Vec<&str> = body.split_whitespace().collect();
        if entries.len() != 4 {
            return Err(syntax(no, format!("expected 4 face entries, found {}", entries.len())));
        }
        let mut faces = [None; 4];
        for (f, entry) in entries.into_iter().enumerate() {
            if entry == "-" {
                continue;
            }
            let (target, digits) = entry
                .split_once(':')
                .ok_or_else(|| syntax(no, format!("bad face entry `{entry}`")))?;
            let target: usize = target
                .parse()
                .map_err(|_| syntax(no, format!("bad target in `{entry}`")))?;
            let bytes = digits.as_bytes();
            if bytes.len() != 4 || !bytes.iter().all(|b| (b'0'..=b'3').contains(b)) {
                return Err(syntax(no, format!("bad permutation in `{entry}`")));
            }
            let perm = Perm4::new([bytes[0] - b'0', bytes[1] - b'0', bytes[2] - b'0', bytes[3] - b'0'])
                .map_err(|_| syntax(no, format!("`{digits}` is not a permutation")))?;
            faces[f] = Some((target, perm));
        }
        rows.push((no, faces));
    }

    let n = rows.len();
    for (no, faces) in &rows {
        for (target, _) in faces.iter().flatten() {
            if *target >= n {
                return Err(Error::TetOutOfRange { index: *target, n }).map_err(|e| syntax(*no, e.to_string()));
            }
        }
    }
    let gluings = rows
        .into_iter()
        .map(|(_, faces)| faces.map(|g| g.map(|(tet, perm)| Gluing { tet, perm })))
        .collect();
    Triangulation::from_gluings(gluings)
}

pub fn serialise_triangulation(tri: &Triangulation) -> String {
    let mut out = String::from("tri 1\n");
    for (t, faces) in tri.gluings().iter().enumerate() {
        write!(out, "tet {t}:").unwrap();
        for g in faces {
            match g {
                None => out.push_str(" -"),
                Some(g) => write!(out, " {}:{}", g.tet, g.perm).unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
