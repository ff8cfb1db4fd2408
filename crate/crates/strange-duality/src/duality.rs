use std::collections::BTreeSet;

use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::dataset::table1;
use crate::enumerate::{dual_weight_system, semi_dual_candidates, SemiDualSolution};
use crate::error::Result;
use crate::matrix::{build_b, canonicalize, det3, exponent_matrix_to_poly, CanonicalKey};
use crate::poly::rat_pow;
use crate::singularity::{isolated_at_origin, milnor_number};
use crate::weight::Weight;

/// Everything the theorem says about one weight system: all factorizations
/// with the isolatedness verdict filled in, the distinct canonical C
/// classes among the isolated ones, and the identified strange dual.
#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub weight: Weight,
    /// Every factorization, `isolated` decided, in canonical-class order.
    pub solutions: Vec<SemiDualSolution>,
    /// Distinct canonical keys of C over the isolated solutions, sorted.
    pub isolated_classes: Vec<CanonicalKey>,
    /// The weight comes from an exceptional unimodal singularity iff some
    /// solution is isolated.
    pub is_exceptional: bool,
    /// Table-1 identification, when the isolated solutions agree on one.
    pub dual_name: Option<&'static str>,
}

/// Runs the full decision procedure for one weight: enumerate candidate
/// factorizations, decide Condition (1.iv) per candidate, group the
/// isolated ones by canonical C, and identify the strange dual.
pub fn classify(a: &Weight) -> Result<ClassificationResult> {
    let mut solutions = semi_dual_candidates(a)?;
    for sol in &mut solutions {
        sol.isolated = Some(isolated_at_origin(&sol.c)?);
    }
    let mut isolated_classes: Vec<CanonicalKey> = solutions
        .iter()
        .filter(|s| s.isolated == Some(true))
        .map(|s| canonicalize(&s.c))
        .collect();
    isolated_classes.sort();
    isolated_classes.dedup();
    let is_exceptional = !isolated_classes.is_empty();

    let mut names = BTreeSet::new();
    for sol in solutions.iter().filter(|s| s.isolated == Some(true)) {
        if let Some(name) = identify_dual(sol)? {
            names.insert(name);
        }
    }
    let dual_name = if names.len() == 1 {
        names.into_iter().next()
    } else {
        None
    };

    Ok(ClassificationResult {
        weight: *a,
        solutions,
        isolated_classes,
        is_exceptional,
        dual_name,
    })
}

/// Checks the mirror identities for one emitted solution: symbolically,
/// f_{C·D} = f_{B_a} (substituting the monomial map φ_D into f_C composes
/// the exponent matrices) and (1,1,1)·D = a (so h ∘ φ_D is the monomial
/// x^a1 y^a2 z^a3); numerically, both composites are spot-checked at five
/// seeded rational points with exact arithmetic.
pub fn verify_mirror_identities(a: &Weight, sol: &SemiDualSolution) -> bool {
    let b = build_b(a);
    let cd = sol.c.mul(&sol.d);
    let (Ok(f_cd), Ok(f_b), Ok(f_c)) = (
        exponent_matrix_to_poly(&cd),
        exponent_matrix_to_poly(&b),
        exponent_matrix_to_poly(&sol.c),
    ) else {
        return false;
    };
    if f_cd != f_b {
        return false;
    }
    let cols = sol.d.col_sums();
    let aw = a.a();
    if (0..3).any(|j| cols[j] != BigInt::from(aw[j])) {
        return false;
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_0011);
    for _ in 0..5 {
        let p: Vec<BigRational> = (0..3)
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(1..=9i64)),
                    BigInt::from(rng.gen_range(1..=9i64)),
                )
            })
            .collect();
        // φ_D sends (x,y,z) to the monomials given by the rows of D
        let phi: Vec<BigRational> = (0..3)
            .map(|j| {
                let mut v = BigRational::one();
                for (k, pk) in p.iter().enumerate() {
                    let e = sol.d.get(j, k).to_u64().expect("non-negative entry");
                    v *= rat_pow(pk, e);
                }
                v
            })
            .collect();
        // G_a = f_C ∘ φ_D
        if f_c.eval(&phi) != f_b.eval(&p) {
            return false;
        }
        // H_a = h ∘ φ_D with h = xyz
        let lhs: BigRational = phi.iter().product();
        let rhs: BigRational = (0..3).map(|k| rat_pow(&p[k], aw[k])).product();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// The weighted-magic-square conditions for C against a weight pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MagicSquareReport {
    /// C·aᵀ = (h,h,h)ᵀ — every row is weighted-row-sum h.
    pub left: bool,
    /// ǎ·C = (ȟ,ȟ,ȟ) — every column is weighted-column-sum ȟ.
    pub right: bool,
    /// |det C| = h = ȟ.
    pub primitive: bool,
}

impl MagicSquareReport {
    pub fn holds(&self) -> bool {
        self.left && self.right && self.primitive
    }
}

/// Evaluates the three primitive-weighted-magic-square conditions exactly.
pub fn kobayashi_check(c: &crate::matrix::IMat3, a: &Weight, dual: &Weight) -> MagicSquareReport {
    let h = BigInt::from(a.h());
    let hv = BigInt::from(dual.h());
    let aw = a.a();
    let dw = dual.a();
    let left = (0..3).all(|i| {
        (0..3)
            .map(|j| c.get(i, j) * BigInt::from(aw[j]))
            .sum::<BigInt>()
            == h
    });
    let right = (0..3).all(|j| {
        (0..3)
            .map(|i| BigInt::from(dw[i]) * c.get(i, j))
            .sum::<BigInt>()
            == hv
    });
    let primitive = det3(c).abs() == h && h == hv;
    MagicSquareReport {
        left,
        right,
        primitive,
    }
}

/// Semi-duality is reflexive: every dual weight ǎ of `a` must itself admit
/// a factorization whose dual weight is `a` again (as multisets — the
/// candidate sets of permuted weights are permutations of one another, so
/// each distinct sorted ǎ needs only one reverse search).
pub fn reflexivity_check(a: &Weight) -> Result<bool> {
    let sols = semi_dual_candidates(a)?;
    let mut back_key = a.a();
    back_key.sort_unstable();
    let mut seen: BTreeSet<[u64; 3]> = BTreeSet::new();
    for sol in &sols {
        let dual = dual_weight_system(sol)?;
        let mut key = dual.a();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        let back = semi_dual_candidates(&dual)?;
        let found = back.iter().any(|s| {
            let mut d = s.dual_weight;
            d.sort_unstable();
            d == back_key
        });
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matches (sorted dual weight, dual degree, μ) against the embedded table.
pub fn match_record(dual_sorted: [u64; 3], dual_degree: u64, mu: u64) -> Option<&'static str> {
    table1()
        .iter()
        .find(|r| r.weights.sorted() == dual_sorted && r.weights.h() == dual_degree && r.mu == mu)
        .map(|r| r.name)
}

/// Identifies the strange dual of an isolated solution: the Table-1 record
/// whose weight system equals ǎ up to coordinate permutation and whose
/// subscript equals the Groebner-computed Milnor number of f_C.
pub fn identify_dual(sol: &SemiDualSolution) -> Result<Option<&'static str>> {
    assert_eq!(
        sol.isolated,
        Some(true),
        "identify_dual expects a decided isolated solution"
    );
    let milnor = milnor_number(&sol.c)?;
    let Some(mu) = milnor.mu else {
        return Ok(None);
    };
    let mut key = sol.dual_weight;
    key.sort_unstable();
    Ok(match_record(key, sol.dual_degree(), mu))
}
