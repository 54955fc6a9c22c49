//! Matroid text format: a `ground` line followed by one body form.
//!
//! ```text
//! ground e1 e2 e3 e4
//! bases {e1 e2} {e1 e3} {e2 e4}
//! ```
//!
//! Other bodies: `uniform k`, `free`, `zero`, `linear <matrix-file>`,
//! `graphic <graph-file>`, `dual <file>`, `minor <file> {T1} {T2}`,
//! `union <file> <file>`, `link <file> <file>`, `completion <file> {S} {Q}`.
//! Files are resolved by the loader, relative to the including file.

use vspace::GroundSet;

use crate::build::ExplicitBases;
use crate::sets::bits;
use crate::MatroidError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidBody {
    Bases(Vec<GroundSet>),
    Uniform(usize),
    Free,
    Zero,
    Linear(String),
    Graphic(String),
    Dual(String),
    Minor(String, GroundSet, GroundSet),
    Union(String, String),
    Link(String, String),
    Completion(String, GroundSet, GroundSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidDoc {
    pub ground: GroundSet,
    pub body: MatroidBody,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Word(String, usize),
    Group(Vec<String>, usize),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, MatroidError> {
    let mut out = Vec::new();
    let mut open: Option<(Vec<String>, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        // braces may hug their contents: `{a b}`
        let spaced = line.replace('{', " { ").replace('}', " } ");
        for w in spaced.split_whitespace() {
            match (w, &mut open) {
                ("{", None) => open = Some((Vec::new(), ln)),
                ("{", Some(_)) => return Err(parse_err(ln, "nested `{`")),
                ("}", Some(_)) => {
                    let (g, l) = open.take().expect("open group");
                    out.push(Tok::Group(g, l));
                }
                ("}", None) => return Err(parse_err(ln, "unmatched `}`")),
                (w, Some((g, _))) => g.push(w.to_string()),
                (w, None) => out.push(Tok::Word(w.to_string(), ln)),
            }
        }
    }
    if let Some((_, l)) = open {
        return Err(parse_err(l, "unclosed `{`"));
    }
    Ok(out)
}

fn parse_err(line: usize, msg: &str) -> MatroidError {
    MatroidError::Parse { line, msg: msg.to_string() }
}

pub fn parse_matroid(text: &str) -> Result<MatroidDoc, MatroidError> {
    let toks = tokenize(text)?;
    let mut it = toks.into_iter().peekable();
    let ground_line = match it.next() {
        Some(Tok::Word(w, l)) if w == "ground" => l,
        Some(Tok::Word(_, l)) | Some(Tok::Group(_, l)) => return Err(parse_err(l, "expected `ground ...`")),
        None => return Err(parse_err(0, "empty matroid file")),
    };
    let mut names = Vec::new();
    while let Some(Tok::Word(w, l)) = it.peek() {
        if *l != ground_line {
            break;
        }
        names.push(w.clone());
        it.next();
    }
    let ground = GroundSet::parse_list(&names.join(" ")).map_err(|e| parse_err(ground_line, &e.to_string()))?;

    let (kind, kl) = match it.next() {
        Some(Tok::Word(w, l)) => (w, l),
        Some(Tok::Group(_, l)) => return Err(parse_err(l, "expected a body keyword")),
        None => return Err(parse_err(ground_line, "missing body")),
    };
    let rest: Vec<Tok> = it.collect();
    let words = |n: usize| -> Result<Vec<String>, MatroidError> {
        let w: Vec<String> = rest
            .iter()
            .filter_map(|t| match t {
                Tok::Word(w, _) => Some(w.clone()),
                _ => None,
            })
            .collect();
        if w.len() != n || rest.len() != n {
            return Err(parse_err(kl, &format!("`{kind}` takes {n} argument(s)")));
        }
        Ok(w)
    };
    let file_and_groups = || -> Result<(String, GroundSet, GroundSet), MatroidError> {
        match rest.as_slice() {
            [Tok::Word(f, _), Tok::Group(a, la), Tok::Group(b, lb)] => {
                let a = GroundSet::parse_list(&a.join(" ")).map_err(|e| parse_err(*la, &e.to_string()))?;
                let b = GroundSet::parse_list(&b.join(" ")).map_err(|e| parse_err(*lb, &e.to_string()))?;
                Ok((f.clone(), a, b))
            }
            _ => Err(parse_err(kl, &format!("`{kind}` takes a file and two `{{...}}` sets"))),
        }
    };
    let body = match kind.as_str() {
        "bases" => {
            let mut bases = Vec::new();
            for t in &rest {
                match t {
                    Tok::Group(g, l) => {
                        bases.push(GroundSet::parse_list(&g.join(" ")).map_err(|e| parse_err(*l, &e.to_string()))?)
                    }
                    Tok::Word(_, l) => return Err(parse_err(*l, "bases are written `{a b}`")),
                }
            }
            MatroidBody::Bases(bases)
        }
        "uniform" => {
            let w = words(1)?;
            MatroidBody::Uniform(w[0].parse().map_err(|_| parse_err(kl, "bad rank"))?)
        }
        "free" => {
            words(0)?;
            MatroidBody::Free
        }
        "zero" => {
            words(0)?;
            MatroidBody::Zero
        }
        "linear" => MatroidBody::Linear(words(1)?.remove(0)),
        "graphic" => MatroidBody::Graphic(words(1)?.remove(0)),
        "dual" => MatroidBody::Dual(words(1)?.remove(0)),
        "union" => {
            let mut w = words(2)?;
            let b = w.pop().expect("two");
            MatroidBody::Union(w.pop().expect("two"), b)
        }
        "link" => {
            let mut w = words(2)?;
            let b = w.pop().expect("two");
            MatroidBody::Link(w.pop().expect("two"), b)
        }
        "minor" => {
            let (f, a, b) = file_and_groups()?;
            MatroidBody::Minor(f, a, b)
        }
        "completion" => {
            let (f, a, b) = file_and_groups()?;
            MatroidBody::Completion(f, a, b)
        }
        other => return Err(parse_err(kl, &format!("unknown body `{other}`"))),
    };
    Ok(MatroidDoc { ground, body })
}

/// Canonical explicit form: ground in order, one base per line, bases sorted
/// by their position lists.
pub fn write_bases(e: &ExplicitBases) -> String {
    let g = e.ground();
    let mut lists: Vec<Vec<usize>> = e.bases().iter().map(|&b| bits(b).collect()).collect();
    lists.sort();
    let mut out = format!("ground {g}\nbases");
    for l in lists {
        let names: Vec<&str> = l.iter().map(|&i| g.labels()[i].as_str()).collect();
        out.push_str(&format!("\n  {{{}}}", names.join(" ")));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_round_trip() {
        let text = "ground a b c\nbases\n  {a b}\n  {a c}\n";
        let doc = parse_matroid(text).unwrap();
        let MatroidBody::Bases(bs) = &doc.body else { panic!() };
        let masks: Vec<u64> = bs.iter().map(|b| doc.ground.mask(b).unwrap()).collect();
        let e = ExplicitBases::new(doc.ground.clone(), masks).unwrap();
        assert_eq!(write_bases(&e), text);
    }

    #[test]
    fn derived_forms() {
        let doc = parse_matroid("ground a b\nminor m.mat {a b c} {a b}").unwrap();
        assert_eq!(
            doc.body,
            MatroidBody::Minor("m.mat".into(), GroundSet::of(&["a", "b", "c"]), GroundSet::of(&["a", "b"]))
        );
        let doc = parse_matroid("ground a b\nuniform 1 # comment").unwrap();
        assert_eq!(doc.body, MatroidBody::Uniform(1));
        let doc = parse_matroid("ground\nbases {}").unwrap();
        assert_eq!(doc.body, MatroidBody::Bases(vec![GroundSet::empty()]));
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(parse_matroid("ground a\n\nfoo").unwrap_err(), parse_err(3, "unknown body `foo`"));
        assert!(matches!(parse_matroid("ground a\nbases {a"), Err(MatroidError::Parse { line: 2, .. })));
        assert!(matches!(parse_matroid("uniform 2"), Err(MatroidError::Parse { line: 1, .. })));
    }
}
