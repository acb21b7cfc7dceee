use crate::arith::{is_prime, prime_power};
use crate::gf::action::{action_on_points, projective_action, projective_orbit, vector_from_index, vector_index, Side};
use crate::gf::{Field, FieldElement, Matrix};
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

fn cycles(degree: usize, cs: &[&[u32]]) -> Permutation {
    let cs: Vec<Vec<u32>> = cs.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cs).expect("valid cycles")
}

/// Alternating group on 5 points, generated by `(1 2 3 4 5)` and `(1 2 3)`.
pub fn a5() -> PermGroup {
    PermGroup::from_generators(vec![cycles(5, &[&[0, 1, 2, 3, 4]]), cycles(5, &[&[0, 1, 2]])], 5)
        .expect("consistent degrees")
}

/// `PSL(2, q)` on the projective line. Point `i < q` is the field element
/// with raw value `i`, point `q` is infinity. Generated by `x ↦ x + 1`,
/// `x ↦ -1/x` and, when `q` is not prime, `x ↦ ζ² x`.
pub fn psl2(q: u64) -> Result<PermGroup> {
    if prime_power(q).is_none() {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    let field = Field::of_size(q)?;
    let n = q as usize;
    let inf = q as u32;
    let on_line = |f: &dyn Fn(FieldElement) -> Option<FieldElement>, at_inf: u32| -> Result<Permutation> {
        let mut images: Vec<u32> = field.elements().map(|x| f(x).map_or(inf, FieldElement::raw)).collect();
        images.push(at_inf);
        Permutation::from_images(images)
    };
    let one = field.one();
    let mut gens =
        vec![on_line(&|x| Some(field.add(x, one)), inf)?, on_line(&|x| field.inv(x).map(|y| field.neg(y)), 0)?];
    if !is_prime(q) {
        let z2 = field.pow(field.primitive_element(), 2);
        gens.push(on_line(&|x| Some(field.mul(z2, x)), inf)?);
    }
    PermGroup::from_generators(gens, n + 1)
}

fn transvection(n: usize, i: usize, j: usize, t: FieldElement) -> Matrix {
    let mut m = Matrix::identity(n);
    m.set(i, j, t);
    m
}

/// `PSL(3, 4)` on the 21 points of the projective plane over GF(4),
/// generated by the elementary transvections `x_12, x_21, x_23, x_32` with
/// parameters 1 and a primitive element.
pub fn psl3_4() -> PermGroup {
    let field = Field::new(2, 2).expect("GF(4) is in the table");
    let mut gens = Vec::new();
    for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
        for t in [field.one(), field.primitive_element()] {
            gens.push(transvection(3, i, j, t));
        }
    }
    projective_action(&field, &gens, Side::Column).expect("transvections are invertible")
}

/// Matrices of the Suzuki group over `GF(q)`, `q = 2^(2e+1)`, acting on row
/// vectors: the lower unitriangular family `T(a, b)` for `(a, b)` in
/// `{(1, 0), (z, 0), (0, 1)}`, the torus element `D(z)` and the flip.
pub fn suzuki_matrices(q: u64) -> Result<(Field, Vec<Matrix>)> {
    let e = match q {
        8 => 1,
        32 => 2,
        _ => return Err(Error::Precondition(format!("Suzuki groups are built for q = 8, 32, not {q}"))),
    };
    let f = Field::of_size(q)?;
    let s = 1i64 << e;
    let theta = |x| f.pow(x, 2 * s);
    let t = |a: FieldElement, b: FieldElement| {
        let z = f.zero();
        let one = f.one();
        let corner = f.add(f.add(f.mul(f.mul(a, a), theta(a)), f.mul(a, b)), theta(b));
        Matrix::square(vec![
            one,
            z,
            z,
            z, //
            a,
            one,
            z,
            z, //
            b,
            theta(a),
            one,
            z, //
            corner,
            f.add(f.mul(a, theta(a)), b),
            a,
            one,
        ])
    };
    let d = |l: FieldElement| Matrix::diagonal(&[f.pow(l, 1 + s), f.pow(l, s), f.pow(l, -s), f.pow(l, -1 - s)]);
    let z = f.from_raw(2)?;
    let (zero, one) = (f.zero(), f.one());
    let flip = Matrix::permutation(&cycles(4, &[&[0, 3], &[1, 2]]));
    let gens = vec![t(one, zero)?, t(z, zero)?, t(zero, one)?, d(z), flip];
    Ok((f, gens))
}

/// The Suzuki group `Sz(q)` on the `q² + 1` points of its ovoid, the orbit
/// of `(0, 0, 0, 1)` in projective 3-space.
pub fn suzuki(q: u64) -> Result<PermGroup> {
    let (f, gens) = suzuki_matrices(q)?;
    let start = [f.zero(), f.zero(), f.zero(), f.one()];
    let cap = (q * q + 1) as usize;
    let points = projective_orbit(&f, &gens, &start, Side::Row, cap)?;
    action_on_points(&f, &gens, &points, Side::Row)
}

/// The Q8 matrices used for the affine group of degree 9.
pub fn m9_quaternion() -> (Field, Vec<Matrix>) {
    let f = Field::new(3, 1).expect("prime field");
    let i = Matrix::from_ints(&f, &[&[0, 2], &[1, 0]]).expect("square");
    let j = Matrix::from_ints(&f, &[&[1, 1], &[1, 2]]).expect("square");
    (f, vec![i, j])
}

/// `GF(3)² ⋊ Q8` acting on the 9 vectors: translations by the basis
/// vectors and the quaternion matrices. Point `i` is the vector with index `i`.
pub fn m9() -> PermGroup {
    let (f, mats) = m9_quaternion();
    let n = 9;
    let on_vectors = |map: &dyn Fn(Vec<FieldElement>) -> Vec<FieldElement>| {
        let images = (0..n).map(|i| vector_index(&f, &map(vector_from_index(&f, 2, i))) as u32).collect();
        Permutation::from_images(images).expect("bijection on vectors")
    };
    let mut gens = Vec::new();
    for k in 0..2 {
        gens.push(on_vectors(&|mut v| {
            v[k] = f.add(v[k], f.one());
            v
        }));
    }
    for m in &mats {
        gens.push(on_vectors(&|v| m.apply(&f, &v)));
    }
    PermGroup::from_generators(gens, n).expect("consistent degrees")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(a5().order(), 60);
        assert_eq!(psl2(5).unwrap().order(), 60);
        assert_eq!(psl2(5).unwrap().degree(), 6);
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(psl2(9).unwrap().order(), 360);
        assert_eq!(psl2(31).unwrap().order(), 14880);
        assert_eq!(psl3_4().order(), 20160);
        assert_eq!(psl3_4().degree(), 21);
        let sz8 = suzuki(8).unwrap();
        assert_eq!((sz8.order(), sz8.degree()), (29120, 65));
        assert_eq!(m9().order(), 72);
        assert!(psl2(6).is_err());
        assert!(suzuki(2).is_err());
    }

    #[test]
    fn m9_sharply_two_transitive() {
        let g = m9();
        assert!(g.is_transitive());
        let elements: Vec<_> = g.elements(100).unwrap().collect();
        let stab0 = elements.iter().filter(|p| p.image(0) == 0).count();
        assert_eq!(stab0, 8);
        let fix2 = elements.iter().filter(|p| p.image(0) == 0 && p.image(1) == 1).count();
        assert_eq!(fix2, 1);
    }
}
