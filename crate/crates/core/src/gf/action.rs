//! Turning matrix groups into permutation groups on vectors or projective points.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

use super::{Field, FieldElement, Matrix};

/// Which side matrices act from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `v -> M v` on column vectors.
    Column,
    /// `v -> v M` on row vectors.
    Row,
}

fn act(field: &Field, m: &Matrix, v: &[FieldElement], side: Side) -> Vec<FieldElement> {
    match side {
        Side::Column => m.apply(field, v),
        Side::Row => m.apply_row(field, v),
    }
}

/// Index of `v` with the first coordinate most significant.
pub fn vector_index(field: &Field, v: &[FieldElement]) -> usize {
    v.iter().fold(0, |acc, x| acc * field.size() as usize + x.raw() as usize)
}

pub fn vector_from_index(field: &Field, n: usize, mut index: usize) -> Vec<FieldElement> {
    let q = field.size() as usize;
    let mut v = vec![FieldElement::ZERO; n];
    for slot in v.iter_mut().rev() {
        *slot = field.from_raw((index % q) as u32).expect("digit below field size");
        index /= q;
    }
    v
}

/// Scales so the first nonzero coordinate is 1.
pub fn canonical_projective(field: &Field, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let lead = v.iter().copied().find(|x| !x.is_zero())?;
    let inv = field.inv(lead).expect("nonzero");
    Some(v.iter().map(|&x| field.mul(inv, x)).collect())
}

/// Canonical projective points of `F^n`, in lexicographic order.
pub fn projective_points(field: &Field, n: usize) -> Vec<Vec<FieldElement>> {
    let total = (field.size() as usize).pow(n as u32);
    (1..total)
        .map(|i| vector_from_index(field, n, i))
        .filter(|v| canonical_projective(field, v).as_deref() == Some(v.as_slice()))
        .collect()
}

fn check_square(gens: &[Matrix]) -> Result<usize> {
    let n = gens.first().map_or(0, Matrix::rows);
    if n == 0 || gens.iter().any(|g| !g.is_square() || g.rows() != n) {
        return Err(Error::Shape("expected square generators of one size".into()));
    }
    Ok(n)
}

/// Action on the nonzero vectors of `F^n` (faithful for any linear group).
/// Point `i` is the vector with index `i + 1`.
pub fn linear_action(field: &Field, gens: &[Matrix]) -> Result<PermGroup> {
    let n = check_square(gens)?;
    let total = (field.size() as usize).pow(n as u32);
    let mut perms = Vec::new();
    for g in gens {
        if g.det(field)?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images = (1..total)
            .map(|i| {
                let w = g.apply(field, &vector_from_index(field, n, i));
                vector_index(field, &w) as u32 - 1
            })
            .collect();
        perms.push(Permutation::from_images(images)?);
    }
    PermGroup::from_generators(perms, total - 1)
}

/// Action on the given canonical points. Returns an error if some generator
/// does not preserve the point set.
pub fn action_on_points(field: &Field, gens: &[Matrix], points: &[Vec<FieldElement>], side: Side) -> Result<PermGroup> {
    check_square(gens)?;
    let index: HashMap<&[FieldElement], u32> =
        points.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();
    let mut perms = Vec::new();
    for g in gens {
        if g.det(field)?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut images = Vec::with_capacity(points.len());
        for p in points {
            let w = canonical_projective(field, &act(field, g, p, side)).expect("invertible");
            let i = index
                .get(w.as_slice())
                .ok_or_else(|| Error::Precondition("generator does not preserve the point set".into()))?;
            images.push(*i);
        }
        perms.push(Permutation::from_images(images)?);
    }
    PermGroup::from_generators(perms, points.len())
}

/// Action on all projective points of `F^n`.
pub fn projective_action(field: &Field, gens: &[Matrix], side: Side) -> Result<PermGroup> {
    let n = check_square(gens)?;
    action_on_points(field, gens, &projective_points(field, n), side)
}

/// Orbit of the projective point `start` under the generators, sorted
/// lexicographically.
pub fn projective_orbit(
    field: &Field,
    gens: &[Matrix],
    start: &[FieldElement],
    side: Side,
    cap: usize,
) -> Result<Vec<Vec<FieldElement>>> {
    let start = canonical_projective(field, start).ok_or(Error::Precondition("zero vector".into()))?;
    let mut seen: HashMap<Vec<FieldElement>, ()> = HashMap::from([(start.clone(), ())]);
    let mut orbit = vec![start];
    let mut next = 0;
    while next < orbit.len() {
        for g in gens {
            let w = canonical_projective(field, &act(field, g, &orbit[next], side)).expect("invertible");
            if seen.insert(w.clone(), ()).is_none() {
                if orbit.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                orbit.push(w);
            }
        }
        next += 1;
    }
    orbit.sort();
    Ok(orbit)
}
