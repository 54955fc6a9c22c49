//! Reading the three text formats from disk. Matroid files may refer to
//! other files, resolved relative to the referring file.

use std::path::{Path, PathBuf};

use graphspace::{parse_graph, Graph};
use matroid_core::{explicit, free, graphic, linear, parse_matroid, uniform, zero, Matroid, MatroidBody};
use vspace::{parse_matrix, GroundSet, VSpace};

use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse(e.to_string()))
}

/// Errors are prefixed with the file they came from, outermost first.
fn within<T>(path: &Path, f: impl FnOnce() -> Result<T, CliError>) -> Result<T, CliError> {
    f().map_err(|e| e.in_input(&path.display().to_string()))
}

pub fn matrix(path: &Path) -> Result<VSpace, CliError> {
    within(path, || Ok(parse_matrix(&read(path)?)?))
}

pub fn graph(path: &Path) -> Result<Graph, CliError> {
    within(path, || Ok(parse_graph(&read(path)?)?))
}

pub fn matroid(path: &Path) -> Result<Matroid, CliError> {
    load(path, &[])
}

fn near(base: &Path, file: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(file)
}

/// `outer` holds the files that are being loaded around this one.
fn load(path: &Path, outer: &[PathBuf]) -> Result<Matroid, CliError> {
    let key = path.canonicalize().unwrap_or_else(|_| path.to_path_buf());
    if outer.contains(&key) {
        return Err(CliError::parse(format!("{} refers back to itself", path.display())));
    }
    let mut chain = outer.to_vec();
    chain.push(key);
    within(path, || body(path, &chain))
}

fn body(path: &Path, chain: &[PathBuf]) -> Result<Matroid, CliError> {
    let doc = parse_matroid(&read(path)?)?;
    let sub = |f: &str| load(&near(path, f), chain);
    let g = doc.ground.clone();
    let m = match doc.body {
        MatroidBody::Bases(list) => {
            let masks = list.iter().map(|b| g.mask(b)).collect::<Result<Vec<_>, _>>()?;
            explicit(g.clone(), masks)?
        }
        MatroidBody::Uniform(k) => uniform(g.clone(), k)?,
        MatroidBody::Free => free(g.clone()),
        MatroidBody::Zero => zero(g.clone()),
        MatroidBody::Linear(f) => linear(&matrix(&near(path, &f))?),
        MatroidBody::Graphic(f) => graphic(&graph(&near(path, &f))?),
        MatroidBody::Dual(f) => sub(&f)?.dual(),
        MatroidBody::Minor(f, t1, t2) => sub(&f)?.minor(&t1, &t2)?,
        MatroidBody::Union(a, b) => matroid_ui::union(&sub(&a)?, &sub(&b)?)?,
        MatroidBody::Link(a, b) => matroid_link::link(&sub(&a)?, &sub(&b)?)?,
        MatroidBody::Completion(f, s, q) => sq_complete::completion(&sub(&f)?, &s, &q)?,
    };
    declared(m, &g)
}

/// The body must produce exactly the declared labels; the result takes the
/// declared order.
fn declared(m: Matroid, g: &GroundSet) -> Result<Matroid, CliError> {
    if !m.ground().same_labels(g) {
        return Err(CliError::parse(format!("declared ground {{{g}}} but the body has {{{}}}", m.ground())));
    }
    Ok(m.reorder(g)?)
}
