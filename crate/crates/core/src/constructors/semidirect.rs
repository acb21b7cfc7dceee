use std::collections::HashMap;

use crate::gf::action::{linear_action, vector_from_index, vector_index};
use crate::gf::{matrix_group_closure, Field, Matrix};
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

use super::table::{Law, TableElement, TableGroup};

/// Default bound on the size of the acting group.
pub const ACTING_CAP: usize = 1 << 12;

/// `N ⋊ H` with `N = GF(q)^m` and `H` acting through invertible matrices.
#[derive(Clone, Debug)]
pub struct SemidirectSpec {
    pub field: Field,
    pub dimension: usize,
    /// Matrices of the generators of `H`.
    pub h_generators: Vec<Matrix>,
    /// When set, `H` is this group and its generators map, in order, to
    /// `h_generators`; the action need not be faithful. Otherwise `H` is the
    /// matrix group itself.
    pub h_abstract: Option<PermGroup>,
    pub label: String,
}

impl SemidirectSpec {
    pub fn new(field: Field, h_generators: Vec<Matrix>, label: impl Into<String>) -> Result<Self> {
        let dimension = check_matrices(&field, &h_generators)?;
        Ok(SemidirectSpec { field, dimension, h_generators, h_abstract: None, label: label.into() })
    }

    /// `H` given abstractly, acting through the images of its generators.
    pub fn with_abstract(field: Field, h: PermGroup, images: Vec<Matrix>, label: impl Into<String>) -> Result<Self> {
        if images.len() != h.generators().len() {
            return Err(Error::Precondition(format!(
                "{} generator images for {} generators",
                images.len(),
                h.generators().len()
            )));
        }
        let dimension = check_matrices(&field, &images)?;
        Ok(SemidirectSpec { field, dimension, h_generators: images, h_abstract: Some(h), label: label.into() })
    }

    pub fn n_order(&self) -> u64 {
        (self.field.size() as u64).pow(self.dimension as u32)
    }

    /// `H` as a permutation group: the abstract group if given, otherwise
    /// the matrix group acting on nonzero vectors.
    pub fn acting_group(&self) -> Result<PermGroup> {
        match &self.h_abstract {
            Some(h) => Ok(h.clone()),
            None if self.h_generators.is_empty() => PermGroup::trivial(1),
            None => linear_action(&self.field, &self.h_generators),
        }
    }
}

fn check_matrices(field: &Field, gens: &[Matrix]) -> Result<usize> {
    let n = match gens.first() {
        Some(g) => g.rows(),
        None => return Err(Error::Precondition("the acting group needs at least one generator".into())),
    };
    for g in gens {
        if !g.is_square() || g.rows() != n || n == 0 {
            return Err(Error::Shape("acting matrices must be square of one size".into()));
        }
        if g.det(field)?.is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    Ok(n)
}

/// The elements of `H` with their matrices and multiplication table.
struct Acting {
    matrices: Vec<Matrix>,
    mul: Vec<Vec<u32>>,
    generators: Vec<u32>,
}

fn acting(spec: &SemidirectSpec, cap: usize) -> Result<Acting> {
    let field = &spec.field;
    match &spec.h_abstract {
        None => {
            let matrices = matrix_group_closure(field, &spec.h_generators, cap)?;
            let index: HashMap<&Matrix, u32> = matrices.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
            let mul = matrices
                .iter()
                .map(|a| matrices.iter().map(|b| Ok(index[&a.mul(field, b)?])).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let generators = spec.h_generators.iter().map(|g| index[g]).collect();
            Ok(Acting { matrices, mul, generators })
        }
        Some(h) => {
            let gens = h.generators();
            let mut perms = vec![h.identity()];
            let mut matrices = vec![Matrix::identity(spec.dimension)];
            let mut index: HashMap<Permutation, u32> = HashMap::from([(perms[0].clone(), 0)]);
            let mut next = 0;
            while next < perms.len() {
                for (g, image) in gens.iter().zip(&spec.h_generators) {
                    let y = perms[next].compose(g);
                    let m = matrices[next].mul(field, image)?;
                    match index.get(&y) {
                        Some(&i) if matrices[i as usize] != m => {
                            return Err(Error::Precondition("generator images do not define a homomorphism".into()));
                        }
                        Some(_) => {}
                        None => {
                            if perms.len() >= cap {
                                return Err(Error::CapExceeded { cap });
                            }
                            index.insert(y.clone(), perms.len() as u32);
                            perms.push(y);
                            matrices.push(m);
                        }
                    }
                }
                next += 1;
            }
            let mul = perms.iter().map(|a| perms.iter().map(|b| index[&a.compose(b)]).collect()).collect();
            let generators = gens.iter().map(|g| index[g]).collect();
            Ok(Acting { matrices, mul, generators })
        }
    }
}

/// How `H` acts on `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub h_order: u64,
    /// Size of the matrix group the generators produce.
    pub image_order: u64,
    pub faithful: bool,
    /// No non-identity matrix in the image has eigenvalue 1.
    pub fixed_point_free: bool,
    /// A non-identity matrix of the image with eigenvalue 1.
    pub fixed_witness: Option<Matrix>,
}

pub fn fixed_point_free(spec: &SemidirectSpec, cap: usize) -> Result<ActionReport> {
    let h = acting(spec, cap)?;
    let image = matrix_group_closure(&spec.field, &spec.h_generators, cap)?;
    let mut fixed_witness = None;
    for m in image.iter().filter(|m| !m.is_identity()) {
        if m.has_eigenvalue_one(&spec.field)? {
            fixed_witness = Some(m.clone());
            break;
        }
    }
    Ok(ActionReport {
        h_order: h.matrices.len() as u64,
        image_order: image.len() as u64,
        faithful: image.len() == h.matrices.len(),
        fixed_point_free: fixed_witness.is_none(),
        fixed_witness,
    })
}

struct Semidirect {
    field: Field,
    dimension: usize,
    vectors: u32,
    h_mul: Vec<Vec<u32>>,
    h_inv: Vec<u32>,
    /// `act[h][w]`: index of `h · w`.
    act: Vec<Vec<u32>>,
}

impl Semidirect {
    fn combine(&self, v: u32, w: u32, negate_w: bool) -> u32 {
        let f = &self.field;
        let x = vector_from_index(f, self.dimension, v as usize);
        let y = vector_from_index(f, self.dimension, w as usize);
        let sum: Vec<_> = x.into_iter().zip(y).map(|(a, b)| if negate_w { f.sub(a, b) } else { f.add(a, b) }).collect();
        vector_index(f, &sum) as u32
    }
}

impl Law for Semidirect {
    fn first(&self) -> u32 {
        self.vectors
    }

    fn second(&self) -> u32 {
        self.h_mul.len() as u32
    }

    fn multiply(&self, x: TableElement, y: TableElement) -> TableElement {
        let hw = self.act[x.b as usize][y.a as usize];
        TableElement::new(self.combine(x.a, hw, false), self.h_mul[x.b as usize][y.b as usize])
    }

    fn invert(&self, x: TableElement) -> TableElement {
        let hi = self.h_inv[x.b as usize];
        let w = self.act[hi as usize][x.a as usize];
        TableElement::new(self.combine(0, w, true), hi)
    }
}

/// Elements `(v, h)` with `v` a vector index and `h` an index into the
/// elements of `H`, multiplied by `(v, h)(w, k) = (v + h·w, hk)` where `h·w`
/// is the matrix of `h` applied to the column vector `w`.
pub fn semidirect_product(spec: &SemidirectSpec, cap: usize) -> Result<TableGroup> {
    let h = acting(spec, cap)?;
    let field = &spec.field;
    let vectors = spec.n_order();
    if vectors.checked_mul(h.matrices.len() as u64).is_none_or(|n| n > u32::MAX as u64) {
        return Err(Error::OrderOverflow);
    }
    let act = h
        .matrices
        .iter()
        .map(|m| {
            (0..vectors as usize)
                .map(|w| vector_index(field, &m.apply(field, &vector_from_index(field, spec.dimension, w))) as u32)
                .collect()
        })
        .collect();
    let h_inv = h.mul.iter().map(|row| row.iter().position(|&x| x == 0).expect("group has inverses") as u32).collect();
    let mut gens = Vec::new();
    for i in 0..spec.dimension {
        let mut t = field.one();
        for _ in 0..field.degree() {
            let mut v = vec![field.zero(); spec.dimension];
            v[i] = t;
            gens.push(TableElement::new(vector_index(field, &v) as u32, 0));
            t = field.mul(t, field.primitive_element());
        }
    }
    gens.extend(h.generators.iter().filter(|&&g| g != 0).map(|&g| TableElement::new(0, g)));
    let law = Semidirect {
        field: field.clone(),
        dimension: spec.dimension,
        vectors: vectors as u32,
        h_mul: h.mul,
        h_inv,
        act,
    };
    let name = format!("semidirect q={} m={} H={}", field.size(), spec.dimension, spec.label);
    Ok(TableGroup::new(name, Box::new(law), gens))
}
