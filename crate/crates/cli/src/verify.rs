//! `--verify`: recompute each result from enumerated base families or by a
//! second algebraic route, and dump a counterexample on disagreement.

use matroid_core::sets::size;
use matroid_core::{enumerate_bases, ExplicitBases, GroundSet, Matroid, Set};
use matroid_link::{LinkInstance, Multiport};
use oracle::{brute_completion, brute_exchange_check, brute_is_complete, brute_link, brute_rank};
use sq_complete::CompletionWitness;
use vcompose::CompositionPair;
use vspace::VSpace;

use crate::error::CliError;

type Canon = Vec<Vec<String>>;

fn canon(g: &GroundSet, bases: impl IntoIterator<Item = Set>) -> Canon {
    let mut out: Canon = bases
        .into_iter()
        .map(|b| {
            let mut v: Vec<String> = g.names(b).into_iter().map(str::to_string).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Equal families, or a base found on one side only.
fn same(what: &str, got: &Canon, want: &Canon) -> Result<(), CliError> {
    if got == want {
        return Ok(());
    }
    let show = |b: &Vec<String>| format!("{{{}}}", b.join(" "));
    let witness = match got.iter().find(|b| !want.contains(b)) {
        Some(b) => format!("{} is a base of the result but not of the brute-force {what}", show(b)),
        None => {
            let b = want.iter().find(|b| !got.contains(b)).expect("families differ");
            format!("{} is a base of the brute-force {what} but not of the result", show(b))
        }
    };
    Err(CliError::breach(format!("{what} disagrees with brute force"), witness))
}

fn explicit_canon(m: &Matroid) -> Result<Canon, CliError> {
    Ok(enumerate_bases(m)?.canonical())
}

fn brute_canon(e: &ExplicitBases) -> Canon {
    e.canonical()
}

pub fn rank(m: &Matroid, x: Set) -> Result<(), CliError> {
    let want = brute_rank(m)?[x as usize];
    if m.rank(x) != want {
        return Err(CliError::breach("rank disagrees", format!("r({}) = {want} from the bases", m.ground().show(x))));
    }
    Ok(())
}

/// The oracle's bases satisfy exchange and its ranks match the base family.
pub fn consistent(m: &Matroid) -> Result<(), CliError> {
    let e = enumerate_bases(m)?;
    if let Err(w) = brute_exchange_check(e.bases()) {
        return Err(CliError::breach("bases violate exchange", w.render(m.ground())));
    }
    let table = brute_rank(m)?;
    match (0..m.full() + 1).find(|&x| m.rank(x) != table[x as usize]) {
        Some(x) => Err(CliError::breach("rank disagrees with the bases", m.ground().show(x))),
        None => Ok(()),
    }
}

pub fn dual(m: &Matroid, d: &Matroid) -> Result<(), CliError> {
    let full = m.full();
    let want = canon(m.ground(), enumerate_bases(m)?.bases().iter().map(|b| full & !b));
    same("dual", &explicit_canon(d)?, &want)
}

/// Bases of `(M ∘ T1) × T2` by definition: the largest traces on `T1`, then
/// the smallest of those traces on `T2`.
pub fn minor(m: &Matroid, t1: &GroundSet, t2: &GroundSet, n: &Matroid) -> Result<(), CliError> {
    let (a, b) = (m.mask_of(t1)?, m.mask_of(t2)?);
    let e = enumerate_bases(m)?;
    let top = e.bases().iter().map(|x| size(x & a)).max().unwrap_or(0);
    let rest: Vec<Set> = e.bases().iter().map(|x| x & a).filter(|x| size(*x) == top).collect();
    let low = rest.iter().map(|x| size(x & b)).min().unwrap_or(0);
    let want = canon(m.ground(), rest.iter().filter(|x| size(*x & b) == low).map(|x| x & b));
    same("minor", &explicit_canon(n)?, &want)
}

pub fn link(a: &Matroid, b: &Matroid, l: &Matroid) -> Result<(), CliError> {
    same("link", &explicit_canon(l)?, &brute_canon(&brute_link(a, b)?))
}

pub fn minimize(before: &LinkInstance, after: &LinkInstance) -> Result<(), CliError> {
    let want = brute_canon(&brute_link(&before.left, &before.right)?);
    same("link of the input pair", &brute_canon(&brute_link(&after.left, &after.right)?), &want)
}

pub fn connectivity(m: &Matroid, s: &GroundSet, lam: usize) -> Result<(), CliError> {
    let r = brute_rank(m)?;
    let sm = m.mask_of(s)?;
    let want = r[sm as usize] + r[(m.full() & !sm) as usize] - r[m.full() as usize];
    if lam != want {
        return Err(CliError::breach("connectivity disagrees", format!("r(S) + r(Q) − r(M) = {want}")));
    }
    Ok(())
}

fn same_space(what: &str, got: &VSpace, want: &VSpace) -> Result<(), CliError> {
    if got.same_space(want) {
        return Ok(());
    }
    Err(CliError::breach(format!("{what} differs"), format!("expected\n{}", vspace::write_matrix(want))))
}

pub fn vs_compose(pair: &CompositionPair, v: &VSpace) -> Result<(), CliError> {
    same_space("composition", v, &pair.left.matched_compose_via_sum(&pair.right)?)
}

pub fn vs_minimize(pair: &CompositionPair, out: &CompositionPair) -> Result<(), CliError> {
    same_space("composition", &out.compose(), &pair.compose())?;
    let want = pair.left.sum(&pair.right)?.rank() - pair.left.intersect(&pair.right)?.rank();
    if out.overlap.len() != want {
        return Err(CliError::breach("overlap size", format!("|P'| = {} but r(sum) − r(∩) = {want}", out.overlap.len())));
    }
    Ok(())
}

pub fn vs_decompose(v: &VSpace, s: &GroundSet, out: &CompositionPair) -> Result<(), CliError> {
    same_space("recomposition", &out.compose(), v)?;
    let lam = v.restrict(s)?.rank() - v.contract(s)?.rank();
    if out.overlap.len() != lam {
        return Err(CliError::breach("overlap size", format!("|P| = {} but λ(S) = {lam}", out.overlap.len())));
    }
    Ok(())
}

pub fn overlay(a: &graphspace::Graph, b: &graphspace::Graph, g: &graphspace::Graph) -> Result<(), CliError> {
    same_space("overlay incidence space", &g.incidence_space(), &graphspace::compose_space(a, b)?)
}

pub fn completion(m: &Matroid, s: &GroundSet, c: &Matroid) -> Result<(), CliError> {
    same("completion", &explicit_canon(c)?, &brute_canon(&brute_completion(m, m.mask_of(s)?)?))
}

pub fn is_complete(m: &Matroid, s: &GroundSet, yes: bool) -> Result<(), CliError> {
    let want = brute_is_complete(m, m.mask_of(s)?)?;
    if yes != want {
        return Err(CliError::breach("completeness disagrees", format!("brute force says complete = {want}")));
    }
    Ok(())
}

pub fn multiport(m: &Matroid, out: &Multiport) -> Result<(), CliError> {
    let sides = out.left.direct_sum(&out.right)?;
    same("multiport composition", &explicit_canon(m)?, &brute_canon(&brute_link(&sides, &out.ports)?))
}

pub fn complete_product(p: &Matroid, s: &GroundSet) -> Result<(), CliError> {
    if !brute_is_complete(p, p.mask_of(s)?)? {
        let c = brute_completion(p, p.mask_of(s)?)?;
        let extra = c.bases().iter().copied().find(|&b| !p.is_base(b)).expect("incomplete");
        return Err(CliError::breach("product is not complete", format!("missing corner {}", p.ground().show(extra))));
    }
    Ok(())
}

pub fn witness(m: &Matroid, s: &GroundSet, t: Set, w: &CompletionWitness) -> Result<(), CliError> {
    let e = enumerate_bases(m)?;
    let sm = m.mask_of(s)?;
    let qm = m.full() & !sm;
    let corners = [w.base_bb, w.base_hb, w.base_bh];
    if let Some(&b) = corners.iter().find(|&&b| !e.contains(b)) {
        return Err(CliError::breach("witness is not made of bases", m.ground().show(b)));
    }
    let shaped = w.base_hb & sm == t & sm
        && w.base_bh & qm == t & qm
        && w.base_bb & qm == w.base_hb & qm
        && w.base_bb & sm == w.base_bh & sm;
    if !shaped {
        let all: Vec<String> = corners.iter().map(|&b| m.ground().show(b)).collect();
        return Err(CliError::breach("witness corners do not fit together", all.join(" ")));
    }
    Ok(())
}
