use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::weight::Weight;

/// A 3x3 matrix of arbitrary-precision integers.
///
/// The same type plays every matrix role in the factorization
/// `B_a = C D`: the weight matrix `B_a`, the exponent matrix `C`
/// and the unimodular factor `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IMat3 {
    e: [[BigInt; 3]; 3],
}

/// All six permutations of `{0, 1, 2}`.
pub const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl IMat3 {
    pub fn new(e: [[BigInt; 3]; 3]) -> Self {
        IMat3 { e }
    }

    pub fn from_i64(e: [[i64; 3]; 3]) -> Self {
        IMat3::new(e.map(|row| row.map(BigInt::from)))
    }

    pub fn from_u64(e: [[u64; 3]; 3]) -> Self {
        IMat3::new(e.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        IMat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.e[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt; 3] {
        &self.e[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt; 3]> {
        self.e.iter()
    }

    pub fn mul(&self, other: &IMat3) -> IMat3 {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = BigInt::zero();
                for (k, item) in other.e.iter().enumerate() {
                    s += &self.e[i][k] * &item[j];
                }
                out[i][j] = s;
            }
        }
        IMat3::new(out)
    }

    pub fn neg(&self) -> IMat3 {
        IMat3::new(self.e.clone().map(|row| row.map(|x| -x)))
    }

    pub fn scale(&self, k: &BigInt) -> IMat3 {
        IMat3::new(self.e.clone().map(|row| row.map(|x| x * k)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.e.iter().flatten().all(|x| !x.is_negative())
    }

    pub fn row_sums(&self) -> [BigInt; 3] {
        [0, 1, 2].map(|i| self.e[i].iter().sum())
    }

    pub fn col_sums(&self) -> [BigInt; 3] {
        [0, 1, 2].map(|j| self.e.iter().map(|row| &row[j]).sum())
    }

    /// Row-major flattening `(m11, m12, ..., m33)`.
    pub fn flatten(&self) -> [BigInt; 9] {
        let mut out: [BigInt; 9] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[3 * i + j] = self.e[i][j].clone();
            }
        }
        out
    }

    /// The matrix with rows and columns permuted: `out[i][j] = self[pr[i]][pc[j]]`.
    pub fn permuted(&self, pr: &[usize; 3], pc: &[usize; 3]) -> IMat3 {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = self.e[pr[i]][pc[j]].clone();
            }
        }
        IMat3::new(out)
    }
}

impl fmt::Display for IMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]",
            self.e[0][0],
            self.e[0][1],
            self.e[0][2],
            self.e[1][0],
            self.e[1][1],
            self.e[1][2],
            self.e[2][0],
            self.e[2][1],
            self.e[2][2]
        )
    }
}

/// The lexicographically minimal row-major flattening of a matrix over all
/// 36 row/column permutation pairs. Two matrices have equal keys exactly
/// when one is a row/column permutation of the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub [BigInt; 9]);

impl CanonicalKey {
    /// The canonical representative as a matrix.
    pub fn as_matrix(&self) -> IMat3 {
        let k = &self.0;
        IMat3::new([
            [k[0].clone(), k[1].clone(), k[2].clone()],
            [k[3].clone(), k[4].clone(), k[5].clone()],
            [k[6].clone(), k[7].clone(), k[8].clone()],
        ])
    }
}

/// Exact determinant by cofactor expansion.
pub fn det3(m: &IMat3) -> BigInt {
    let e = &m.e;
    &e[0][0] * (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1])
        - &e[0][1] * (&e[1][0] * &e[2][2] - &e[1][2] * &e[2][0])
        + &e[0][2] * (&e[1][0] * &e[2][1] - &e[1][1] * &e[2][0])
}

/// The adjugate, satisfying `M * adjugate(M) = det3(M) * I` exactly.
pub fn adjugate(m: &IMat3) -> IMat3 {
    let e = &m.e;
    let minor = |i: usize, j: usize| -> BigInt {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        &e[r[0]][c[0]] * &e[r[1]][c[1]] - &e[r[0]][c[1]] * &e[r[1]][c[0]]
    };
    let mut out: [[BigInt; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            // cofactor C_ji, transposed into place
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            out[j][i] = minor(i, j) * BigInt::from(sign);
        }
    }
    IMat3::new(out)
}

/// The weight matrix `B_a` with row `i` equal to `(a1, a2, a3)` plus 1
/// added at position `i`; `det B_a = a1 + a2 + a3 + 1`.
pub fn build_b(a: &Weight) -> IMat3 {
    let w = a.a();
    let mut out: [[BigInt; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = BigInt::from(w[j] + u64::from(i == j));
        }
    }
    IMat3::new(out)
}

/// Canonical form of a matrix under the row/column permutation action:
/// the minimum of all 36 flattenings, compared entrywise.
pub fn canonicalize(m: &IMat3) -> CanonicalKey {
    let mut best: Option<[BigInt; 9]> = None;
    for pr in &PERMS3 {
        for pc in &PERMS3 {
            let mut flat: [BigInt; 9] = Default::default();
            for i in 0..3 {
                for j in 0..3 {
                    flat[3 * i + j] = m.e[pr[i]][pc[j]].clone();
                }
            }
            if best.as_ref().is_none_or(|b| flat < *b) {
                best = Some(flat);
            }
        }
    }
    CanonicalKey(best.unwrap())
}

/// Reads a non-negative exponent matrix as the three-monomial polynomial
/// `f_C(x, y, z) = sum_i x^{c_i1} y^{c_i2} z^{c_i3}`.
/// Coinciding rows merge into one term with coefficient 2 or 3.
pub fn exponent_matrix_to_poly(c: &IMat3) -> Result<SparsePoly> {
    let mut f = SparsePoly::zero(3);
    for row in c.rows() {
        let mut exps = [0u64; 4];
        for (j, entry) in row.iter().enumerate() {
            if entry.is_negative() {
                return Err(Error::InvalidMatrix(format!(
                    "exponent matrix has negative entry {entry}"
                )));
            }
            exps[j] = num::ToPrimitive::to_u64(entry).ok_or_else(|| {
                Error::Range(format!("exponent {entry} does not fit in 64 bits"))
            })?;
        }
        f.add_term(exps, BigInt::from(1));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn det_examples() {
        assert_eq!(
            det3(&IMat3::from_i64([[1, 2, 3], [2, 5, 7], [3, 7, 11]])),
            BigInt::one()
        );
        assert_eq!(det3(&IMat3::identity()), BigInt::one());
        let b = build_b(&Weight::new([1, 2, 3]).unwrap());
        assert_eq!(det3(&b), BigInt::from(7));
    }

    #[test]
    fn build_b_examples() {
        let b = build_b(&Weight::new([6, 14, 21]).unwrap());
        assert_eq!(
            b,
            IMat3::from_i64([[7, 14, 21], [6, 15, 21], [6, 14, 22]])
        );
        let b = build_b(&Weight::new([1, 1, 1]).unwrap());
        assert_eq!(b, IMat3::from_i64([[2, 1, 1], [1, 2, 1], [1, 1, 2]]));
        let b = build_b(&Weight::new([1, 2, 3]).unwrap());
        assert_eq!(b, IMat3::from_i64([[2, 2, 3], [1, 3, 3], [1, 2, 4]]));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(adjugate(&IMat3::identity()), IMat3::identity());
        let d = IMat3::from_i64([[2, 0, 0], [0, 3, 0], [0, 0, 5]]);
        assert_eq!(
            adjugate(&d),
            IMat3::from_i64([[15, 0, 0], [0, 10, 0], [0, 0, 6]])
        );
        // unimodular: adjugate is the exact inverse
        let m = IMat3::from_i64([[1, 2, 3], [2, 5, 7], [3, 7, 11]]);
        assert_eq!(m.mul(&adjugate(&m)), IMat3::identity());
    }

    #[test]
    fn adjugate_identity_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(0x00adead1);
        for _ in 0..200 {
            let m = IMat3::from_i64([[0; 3]; 3].map(|row: [i64; 3]| {
                row.map(|_| rng.gen_range(-9i64..=9))
            }));
            let d = det3(&m);
            let prod = m.mul(&adjugate(&m));
            let mut expect: [[BigInt; 3]; 3] = Default::default();
            for (i, row) in expect.iter_mut().enumerate() {
                row[i] = d.clone();
            }
            assert_eq!(prod, IMat3::new(expect));
        }
    }

    #[test]
    fn canonicalize_matches_hand_enumeration() {
        let m = IMat3::from_i64([[0, 0, 2], [7, 0, 0], [0, 3, 0]]);
        let key = canonicalize(&m);
        assert_eq!(
            key.as_matrix(),
            IMat3::from_i64([[0, 0, 2], [0, 3, 0], [7, 0, 0]])
        );
    }

    #[test]
    fn canonicalize_is_permutation_invariant_and_idempotent() {
        let mut rng = StdRng::seed_from_u64(0x0ca11);
        for _ in 0..40 {
            let m = IMat3::from_i64([[0; 3]; 3].map(|row: [i64; 3]| {
                row.map(|_| rng.gen_range(0i64..=9))
            }));
            let key = canonicalize(&m);
            for _ in 0..10 {
                let pr = PERMS3[rng.gen_range(0..6)];
                let pc = PERMS3[rng.gen_range(0..6)];
                assert_eq!(canonicalize(&m.permuted(&pr, &pc)), key);
            }
            assert_eq!(canonicalize(&key.as_matrix()), key);
        }
    }

    #[test]
    fn exponent_matrix_examples() {
        let c = IMat3::from_i64([[7, 0, 0], [0, 3, 0], [0, 0, 2]]);
        let f = exponent_matrix_to_poly(&c).unwrap();
        assert_eq!(f.to_string(), "x^7 + y^3 + z^2");

        let c = IMat3::from_i64([[3, 1, 0], [0, 5, 0], [0, 0, 2]]);
        let f = exponent_matrix_to_poly(&c).unwrap();
        assert_eq!(f.to_string(), "x^3*y + y^5 + z^2");

        let c = IMat3::from_i64([[1, 1, 1], [1, 1, 1], [1, 1, 1]]);
        let f = exponent_matrix_to_poly(&c).unwrap();
        assert_eq!(f.to_string(), "3*x*y*z");

        let c = IMat3::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        assert!(exponent_matrix_to_poly(&c).is_err());
    }
}
