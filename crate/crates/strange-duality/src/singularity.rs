use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, is_trivial_ideal, TermOrder};
use crate::matrix::{adjugate, det3, exponent_matrix_to_poly, IMat3};
use crate::poly::{Monomial, SparsePoly};
use crate::weight::Weight;

/// Version tag for CLI engine metadata.
pub const ENGINE_VERSION: &str = "strata-rabinowitsch/1";

/// The critical-point equations of f_C: the three formal partial derivatives.
#[derive(Clone, Debug)]
pub struct JacobianSystem {
    /// Exponent matrix the system came from, when built from one.
    pub source: Option<IMat3>,
    pub f: SparsePoly,
    pub generators: [SparsePoly; 3],
}

/// Exact formal partial derivatives of a polynomial in x, y, z.
pub fn partials(f: &SparsePoly) -> JacobianSystem {
    assert_eq!(f.nvars(), 3, "Jacobian systems live in three variables");
    JacobianSystem {
        source: None,
        generators: [f.partial(0), f.partial(1), f.partial(2)],
        f: f.clone(),
    }
}

fn jacobian_of(c: &IMat3) -> Result<JacobianSystem> {
    if det3(c).is_zero() {
        return Err(Error::InvalidMatrix(
            "exponent matrix must have nonzero determinant".into(),
        ));
    }
    let f = exponent_matrix_to_poly(c)?;
    let mut sys = partials(&f);
    sys.source = Some(c.clone());
    Ok(sys)
}

/// Outcome of the Groebner-side engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MilnorResult {
    /// True when the Jacobian ideal is zero-dimensional (finite μ).
    pub finite: bool,
    /// Number of standard monomials, defined only when finite.
    pub mu: Option<u64>,
}

impl MilnorResult {
    /// This engine's prediction of Condition (1.iv): the critical locus is
    /// finite *and* the origin actually is a critical point (μ ≥ 1; μ = 0
    /// means the Jacobian ideal is the whole ring, e.g. f contains a linear
    /// monomial, so there is no critical point at the origin at all).
    pub fn predicts_isolated(&self) -> bool {
        self.finite && self.mu.is_some_and(|m| m >= 1)
    }
}

/// Ceiling on the standard-monomial walk; boxes beyond this indicate inputs
/// far outside the intended universe and produce a Range error, never a hang.
const MAX_BOX_CELLS: u128 = 50_000_000;

/// Milnor number of f_C by Groebner basis of the Jacobian ideal: finite iff
/// the leading terms contain a pure power of each variable; μ counts the
/// monomials outside the leading-term ideal by bounded exhaustive walk.
pub fn milnor_number(c: &IMat3) -> Result<MilnorResult> {
    let sys = jacobian_of(c)?;
    let gb = groebner_basis(&sys.generators, 3, TermOrder::Grevlex);
    let mut bounds: [Option<u64>; 3] = [None; 3];
    for g in &gb {
        let lm = g.leading().unwrap().0;
        for v in 0..3 {
            if (0..4).all(|k| k == v || lm.0[k] == 0) {
                let e = lm.0[v];
                if bounds[v].is_none_or(|b| e < b) {
                    bounds[v] = Some(e);
                }
            }
        }
    }
    let (Some(bx), Some(by), Some(bz)) = (bounds[0], bounds[1], bounds[2]) else {
        return Ok(MilnorResult {
            finite: false,
            mu: None,
        });
    };
    if (bx as u128) * (by as u128) * (bz as u128) > MAX_BOX_CELLS {
        return Err(Error::Range(format!(
            "standard-monomial box {}x{}x{} is too large to walk",
            bx, by, bz
        )));
    }
    let lts: Vec<Monomial> = gb.iter().map(|g| *g.leading().unwrap().0).collect();
    let mut mu = 0u64;
    for ex in 0..bx {
        for ey in 0..by {
            for ez in 0..bz {
                let m = Monomial([ex, ey, ez, 0]);
                if !lts.iter().any(|l| l.divides(&m)) {
                    mu += 1;
                }
            }
        }
    }
    Ok(MilnorResult {
        finite: true,
        mu: Some(mu),
    })
}

/// Decides Condition (1.iv): does f_C have an isolated critical point at
/// the origin? Candidate polynomials are quasi-homogeneous with positive
/// weights, so their critical locus is a cone and the question reduces to
/// V(∂f) = {0}, decided stratum by stratum over the coordinate hyperplanes:
///
/// * origin (s3): every partial must vanish there, else there is no
///   critical point at the origin to speak of — return false;
/// * coordinate axes (s2): the restricted partials are univariate; after
///   dividing each nonzero one by its largest monomial factor, a common
///   nonzero root exists iff their gcd has degree ≥ 1 (if all restrictions
///   vanish identically the whole punctured axis is critical);
/// * coordinate planes (s1): a common zero with both surviving variables
///   nonzero exists iff the ideal of the restricted partials together with
///   u·v·t − 1 (Rabinowitsch) is proper, decided by Groebner basis;
/// * the full torus (s0) is critical-point-free whenever det C ≠ 0, since
///   on it the equations force C㆕m = 0 for the monomial value vector m.
pub fn isolated_at_origin(c: &IMat3) -> Result<bool> {
    let sys = jacobian_of(c)?;

    // (s3) the origin itself
    if sys
        .generators
        .iter()
        .any(|g| !g.constant_coefficient().is_zero())
    {
        return Ok(false);
    }

    // (s2) punctured coordinate axes
    for axis in 0..3 {
        let others = [(axis + 1) % 3, (axis + 2) % 3];
        let mut stripped: Vec<Vec<BigInt>> = Vec::new();
        for g in &sys.generators {
            let r = g.substitute_zero(others[0]).substitute_zero(others[1]);
            if r.is_zero() {
                continue;
            }
            let uni = r
                .as_univariate(axis)
                .expect("restriction is supported on the axis variable");
            stripped.push(strip_monomial_factor(&uni));
        }
        if stripped.is_empty() {
            return Ok(false); // every axis point is critical
        }
        let mut g = stripped[0].clone();
        for u in &stripped[1..] {
            if g.len() == 1 {
                break;
            }
            g = uni_gcd(&g, u);
        }
        if g.len() >= 2 {
            return Ok(false); // common nonzero root on the axis
        }
    }

    // (s1) coordinate planes minus the axes
    for zeroed in 0..3 {
        let others = [(zeroed + 1) % 3, (zeroed + 2) % 3];
        let mut gens: Vec<SparsePoly> = sys
            .generators
            .iter()
            .map(|g| g.substitute_zero(zeroed).extended_to(4))
            .filter(|g| !g.is_zero())
            .collect();
        let mut rabinowitsch = SparsePoly::zero(4);
        let mut e = [0u64; 4];
        e[others[0]] = 1;
        e[others[1]] = 1;
        e[3] = 1;
        rabinowitsch.add_term(e, BigInt::one());
        rabinowitsch.add_term([0; 4], -BigInt::one());
        gens.push(rabinowitsch);
        let gb = groebner_basis(&gens, 4, TermOrder::Grevlex);
        if !is_trivial_ideal(&gb) {
            return Ok(false);
        }
    }

    Ok(true)
}

/// Divides a univariate polynomial (sparse, ascending exponents) by its
/// largest monomial factor and returns dense coefficients, constant first.
fn strip_monomial_factor(u: &[(u64, BigInt)]) -> Vec<BigInt> {
    let min = u.first().expect("nonzero polynomial").0;
    let max = u.last().unwrap().0;
    let mut v = vec![BigInt::zero(); (max - min + 1) as usize];
    for (e, c) in u {
        v[(e - min) as usize] = c.clone();
    }
    v
}

fn uni_normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Gcd of two univariate integer polynomials over the rationals, returned
/// primitive with positive leading coefficient (dense, constant first).
/// Plain pseudo-remainder Euclid with content stripping at every step.
fn uni_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = uni_normalize(a.to_vec());
    let mut b = uni_normalize(b.to_vec());
    while !b.is_empty() {
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let shift = a.len() - b.len();
        let la = a.last().unwrap().clone();
        let lb = b.last().unwrap().clone();
        for c in &mut a {
            *c = &*c * &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            a[j + shift] = &a[j + shift] - bc * &la;
        }
        a = uni_normalize(a);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    a
}

/// Exact Milnor number of the quasi-homogeneous singularity with the given
/// weight system, by the Milnor–Orlik product Π_i (ȟ − ǎ_i)/ǎ_i.
pub fn milnor_orlik(dual_weight: &Weight) -> BigRational {
    let [a1, a2, a3] = dual_weight.a();
    orlik_product(
        &[BigInt::from(a1), BigInt::from(a2), BigInt::from(a3)],
        &BigInt::from(dual_weight.h()),
    )
}

/// The Milnor–Orlik product for an arbitrary positive weight vector and
/// degree: Π_i (degree − w_i)/w_i. Scale-invariant in (w, degree).
pub fn orlik_product(weights: &[BigInt; 3], degree: &BigInt) -> BigRational {
    let mut r = BigRational::one();
    for w in weights {
        r *= BigRational::new(degree - w, w.clone());
    }
    r
}

/// Positive integer weights w with C·wᵀ = (d,d,d)ᵀ, i.e. the witness that
/// f_C is quasi-homogeneous of degree d, normalized to content 1 jointly
/// with d. None when det C = 0 or when some solved weight is ≤ 0.
pub fn quasi_weights(c: &IMat3) -> Option<([BigInt; 3], BigInt)> {
    let det = det3(c);
    if det.is_zero() {
        return None;
    }
    let adj = adjugate(c);
    let mut v: Vec<BigInt> = (0..3)
        .map(|i| (0..3).map(|j| adj.get(i, j).clone()).sum())
        .collect();
    if det.is_negative() {
        for x in &mut v {
            *x = -&*x;
        }
    }
    if !v.iter().all(|x| x.is_positive()) {
        return None;
    }
    let mut d = det.abs();
    let g = v
        .iter()
        .fold(d.clone(), |acc, x| acc.gcd(x));
    for x in &mut v {
        *x = &*x / &g;
    }
    d = &d / &g;
    Some(([v[0].clone(), v[1].clone(), v[2].clone()], d))
}

/// One summand shape of an invertible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// x^p on a single variable (Brieskorn–Pham).
    Fermat { var: usize, p: u64 },
    /// x1^p1·x2 + x2^p2 (+ x2^p2·x3-style continuation) on 2 or 3 variables.
    Chain { vars: Vec<usize>, exps: Vec<u64> },
    /// Cyclic x1^p1·x2 + … + xk^pk·x1 on 2 or 3 variables.
    Loop { vars: Vec<usize>, exps: Vec<u64> },
}

impl Atom {
    fn var_mask(&self) -> u8 {
        match self {
            Atom::Fermat { var, .. } => 1 << var,
            Atom::Chain { vars, .. } | Atom::Loop { vars, .. } => {
                vars.iter().fold(0, |m, v| m | (1 << v))
            }
        }
    }

    fn min_var(&self) -> usize {
        match self {
            Atom::Fermat { var, .. } => *var,
            Atom::Chain { vars, .. } | Atom::Loop { vars, .. } => {
                *vars.iter().min().unwrap()
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |exps: &[u64]| {
            exps.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Atom::Fermat { p, .. } => write!(f, "Fermat({})", p),
            Atom::Chain { exps, .. } => write!(f, "Chain({})", list(exps)),
            Atom::Loop { exps, .. } => write!(f, "Loop({})", list(exps)),
        }
    }
}

/// A full decomposition of f_C into variable-disjoint atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition(pub Vec<Atom>);

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn unit_split(row: &[u64; 3]) -> Option<(usize, u64)> {
    let nz: Vec<usize> = (0..3).filter(|&j| row[j] != 0).collect();
    match nz.as_slice() {
        [v] => Some((*v, row[*v])),
        _ => None,
    }
}

fn two_split(row: &[u64; 3]) -> Option<[(usize, u64); 2]> {
    let nz: Vec<usize> = (0..3).filter(|&j| row[j] != 0).collect();
    match nz.as_slice() {
        [u, v] => Some([(*u, row[*u]), (*v, row[*v])]),
        _ => None,
    }
}

fn try_fermat(row: &[u64; 3]) -> Option<Atom> {
    unit_split(row).map(|(var, p)| Atom::Fermat { var, p })
}

fn try_pair(r: &[u64; 3], s: &[u64; 3]) -> Option<Atom> {
    for (head, tail) in [(r, s), (s, r)] {
        let Some(pair) = two_split(head) else { continue };
        for k in 0..2 {
            let (u, p) = pair[k];
            let (v, linked) = pair[1 - k];
            if linked != 1 {
                continue;
            }
            // chain: x_u^p x_v + x_v^q
            if let Some((tv, q)) = unit_split(tail) {
                if tv == v {
                    return Some(Atom::Chain {
                        vars: vec![u, v],
                        exps: vec![p, q],
                    });
                }
            }
            // loop: x_u^p x_v + x_v^q x_u, canonical start at the smaller var
            if let Some(tpair) = two_split(tail) {
                for m in 0..2 {
                    let (tv, q) = tpair[m];
                    let (tu, back) = tpair[1 - m];
                    if tv == v && tu == u && back == 1 {
                        return Some(if u < v {
                            Atom::Loop {
                                vars: vec![u, v],
                                exps: vec![p, q],
                            }
                        } else {
                            Atom::Loop {
                                vars: vec![v, u],
                                exps: vec![q, p],
                            }
                        });
                    }
                }
            }
        }
    }
    None
}

fn try_triple(rows: &[[u64; 3]; 3]) -> Option<Atom> {
    for perm in crate::matrix::PERMS3 {
        let r1 = &rows[perm[0]];
        let r2 = &rows[perm[1]];
        let r3 = &rows[perm[2]];
        let Some(pair1) = two_split(r1) else { continue };
        for k in 0..2 {
            let (u, p) = pair1[k];
            let (v, linked) = pair1[1 - k];
            if linked != 1 {
                continue;
            }
            let Some(pair2) = two_split(r2) else { continue };
            for m in 0..2 {
                let (v2, q) = pair2[m];
                let (w, link2) = pair2[1 - m];
                if v2 != v || link2 != 1 || w == u {
                    continue;
                }
                // chain: third row is a pure power of w
                if let Some((tw, rr)) = unit_split(r3) {
                    if tw == w {
                        return Some(Atom::Chain {
                            vars: vec![u, v, w],
                            exps: vec![p, q, rr],
                        });
                    }
                }
                // loop: third row is x_w^r x_u
                if let Some(pair3) = two_split(r3) {
                    for n in 0..2 {
                        let (w3, rr) = pair3[n];
                        let (u3, back) = pair3[1 - n];
                        if w3 == w && u3 == u && back == 1 {
                            // rotate so the cycle starts at its smallest variable
                            let vars = [u, v, w];
                            let exps = [p, q, rr];
                            let start = (0..3).min_by_key(|&i| vars[i]).unwrap();
                            return Some(Atom::Loop {
                                vars: (0..3).map(|i| vars[(start + i) % 3]).collect(),
                                exps: (0..3).map(|i| exps[(start + i) % 3]).collect(),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Matches f_C against sums of Fermat/chain/loop atoms on disjoint variable
/// sets, up to row order. Purely informational — never part of the
/// isolatedness decision.
pub fn atomic_decomposition(c: &IMat3) -> Option<Decomposition> {
    let mut rows = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            rows[i][j] = num::ToPrimitive::to_u64(c.get(i, j))?;
        }
    }
    if rows[0] == rows[1] || rows[0] == rows[2] || rows[1] == rows[2] {
        return None;
    }

    let disjoint = |atoms: &[Atom]| -> bool {
        let mut seen = 0u8;
        for a in atoms {
            let m = a.var_mask();
            if seen & m != 0 {
                return false;
            }
            seen |= m;
        }
        true
    };
    let finish = |mut atoms: Vec<Atom>| -> Option<Decomposition> {
        if !disjoint(&atoms) {
            return None;
        }
        atoms.sort_by_key(|a| a.min_var());
        Some(Decomposition(atoms))
    };

    // three Fermat summands
    if let (Some(a), Some(b), Some(c)) = (
        try_fermat(&rows[0]),
        try_fermat(&rows[1]),
        try_fermat(&rows[2]),
    ) {
        if let Some(d) = finish(vec![a, b, c]) {
            return Some(d);
        }
    }
    // one pair + one Fermat
    for lone in 0..3 {
        let (i, j) = match lone {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        if let (Some(pair), Some(single)) =
            (try_pair(&rows[i], &rows[j]), try_fermat(&rows[lone]))
        {
            if let Some(d) = finish(vec![pair, single]) {
                return Some(d);
            }
        }
    }
    // a single three-variable atom
    if let Some(atom) = try_triple(&rows) {
        if let Some(d) = finish(vec![atom]) {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::semi_dual_candidates;

    fn m(rows: [[i64; 3]; 3]) -> IMat3 {
        IMat3::from_i64(rows)
    }

    #[test]
    fn partial_derivatives_match_hand_computation() {
        let f = exponent_matrix_to_poly(&m([[7, 0, 0], [0, 3, 0], [0, 0, 2]])).unwrap();
        let sys = partials(&f);
        assert_eq!(format!("{}", sys.generators[0]), "7*x^6");
        assert_eq!(format!("{}", sys.generators[1]), "3*y^2");
        assert_eq!(format!("{}", sys.generators[2]), "2*z");

        let f = exponent_matrix_to_poly(&m([[3, 1, 0], [0, 5, 0], [0, 0, 2]])).unwrap();
        let sys = partials(&f);
        assert_eq!(format!("{}", sys.generators[0]), "3*x^2*y");
        assert_eq!(format!("{}", sys.generators[1]), "x^3 + 5*y^4");

        let f = exponent_matrix_to_poly(&m([[2, 1, 1], [1, 2, 1], [1, 1, 2]])).unwrap();
        let sys = partials(&f);
        assert_eq!(format!("{}", sys.generators[0]), "2*x*y*z + y^2*z + y*z^2");
        assert_eq!(format!("{}", sys.generators[1]), "x^2*z + 2*x*y*z + x*z^2");
        assert_eq!(format!("{}", sys.generators[2]), "x^2*y + x*y^2 + 2*x*y*z");
    }

    #[test]
    fn milnor_numbers_match_independent_cas_runs() {
        // every (matrix, μ) pair below was computed beforehand with an
        // independent computer algebra system
        let cases: [([[i64; 3]; 3], Option<u64>); 9] = [
            ([[7, 0, 0], [0, 3, 0], [0, 0, 2]], Some(12)),
            ([[3, 1, 0], [0, 5, 0], [0, 0, 2]], Some(11)),
            ([[2, 1, 1], [1, 2, 1], [1, 1, 2]], None),
            ([[3, 1, 0], [0, 2, 1], [1, 0, 2]], Some(12)),
            ([[5, 0, 0], [0, 2, 1], [0, 0, 2]], Some(12)),
            ([[3, 0, 0], [0, 2, 1], [1, 0, 3]], Some(11)),
            ([[3, 0, 0], [0, 4, 0], [0, 1, 2]], Some(10)),
            ([[4, 0, 0], [1, 4, 0], [0, 0, 2]], Some(13)),
            ([[3, 1, 0], [1, 4, 0], [0, 0, 2]], Some(12)),
        ];
        for (rows, expected) in cases {
            let r = milnor_number(&m(rows)).unwrap();
            assert_eq!(r.mu, expected, "matrix {:?}", rows);
            assert_eq!(r.finite, expected.is_some(), "matrix {:?}", rows);
        }
    }

    #[test]
    fn isolation_decisions() {
        assert!(isolated_at_origin(&m([[7, 0, 0], [0, 3, 0], [0, 0, 2]])).unwrap());
        assert!(isolated_at_origin(&m([[3, 1, 0], [0, 5, 0], [0, 0, 2]])).unwrap());
        // f = xyz(x+y+z): the axes are critical
        assert!(!isolated_at_origin(&m([[2, 1, 1], [1, 2, 1], [1, 1, 2]])).unwrap());
        // linear monomials: no critical point at the origin at all
        assert!(!isolated_at_origin(&m([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap());
    }

    #[test]
    fn diagonal_matrices_are_isolated_iff_all_exponents_exceed_one() {
        for p in 1..=3i64 {
            for q in 1..=3i64 {
                for r in 1..=3i64 {
                    let c = m([[p, 0, 0], [0, q, 0], [0, 0, r]]);
                    let expected = p >= 2 && q >= 2 && r >= 2;
                    assert_eq!(isolated_at_origin(&c).unwrap(), expected);
                    let mr = milnor_number(&c).unwrap();
                    assert_eq!(mr.predicts_isolated(), expected);
                    if expected {
                        assert_eq!(mr.mu, Some(((p - 1) * (q - 1) * (r - 1)) as u64));
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_matrices_are_rejected() {
        let c = m([[1, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(milnor_number(&c).is_err());
        assert!(isolated_at_origin(&c).is_err());
    }

    #[test]
    fn milnor_orlik_products() {
        let w = |a, b, c| Weight::new([a, b, c]).unwrap();
        assert_eq!(
            milnor_orlik(&w(6, 14, 21)),
            BigRational::from_integer(BigInt::from(12))
        );
        assert_eq!(
            milnor_orlik(&w(4, 10, 15)),
            BigRational::from_integer(BigInt::from(13))
        );
        assert_eq!(
            milnor_orlik(&w(1, 1, 1)),
            BigRational::from_integer(BigInt::from(27))
        );
    }

    #[test]
    fn quasi_weights_solve_the_degree_equations() {
        let (w, d) = quasi_weights(&m([[7, 0, 0], [0, 3, 0], [0, 0, 2]])).unwrap();
        assert_eq!(w, [BigInt::from(6), BigInt::from(14), BigInt::from(21)]);
        assert_eq!(d, BigInt::from(42));
        // x y^2 + y + z solves to a negative x-weight
        assert!(quasi_weights(&m([[1, 2, 0], [0, 1, 0], [0, 0, 1]])).is_none());
        assert!(quasi_weights(&m([[1, 1, 0], [1, 1, 0], [0, 0, 1]])).is_none());
    }

    #[test]
    fn engines_agree_on_small_weight_searches() {
        for (a1, a2, a3) in [(3, 4, 4), (1, 1, 1)] {
            let w = Weight::new([a1, a2, a3]).unwrap();
            for sol in semi_dual_candidates(&w).unwrap() {
                let strat = isolated_at_origin(&sol.c).unwrap();
                let milnor = milnor_number(&sol.c).unwrap();
                assert_eq!(strat, milnor.predicts_isolated());
                assert_eq!(strat, milnor.finite, "candidates always have μ ≥ 1");
            }
        }
    }

    #[test]
    fn atomic_shapes() {
        let d = atomic_decomposition(&m([[7, 0, 0], [0, 3, 0], [0, 0, 2]])).unwrap();
        assert_eq!(d.to_string(), "Fermat(7) ⊕ Fermat(3) ⊕ Fermat(2)");
        let d = atomic_decomposition(&m([[3, 1, 0], [0, 5, 0], [0, 0, 2]])).unwrap();
        assert_eq!(d.to_string(), "Chain(3,5) ⊕ Fermat(2)");
        let d = atomic_decomposition(&m([[3, 1, 0], [0, 2, 1], [1, 0, 2]])).unwrap();
        assert_eq!(d.to_string(), "Loop(3,2,2)");
        // x^4 y + x y^3 + z^2: a two-variable loop
        let d = atomic_decomposition(&m([[4, 1, 0], [1, 3, 0], [0, 0, 2]])).unwrap();
        assert_eq!(d.to_string(), "Loop(4,3) ⊕ Fermat(2)");
        // chain of length three: x^2 y + y^3 z + z^3
        let d = atomic_decomposition(&m([[2, 1, 0], [0, 3, 1], [0, 0, 3]])).unwrap();
        assert_eq!(d.to_string(), "Chain(2,3,3)");
        // xyz-style rows match nothing
        assert!(atomic_decomposition(&m([[2, 1, 1], [1, 2, 1], [1, 1, 2]])).is_none());
        // duplicate rows match nothing
        assert!(atomic_decomposition(&m([[2, 0, 0], [2, 0, 0], [0, 0, 2]])).is_none());
    }
}
