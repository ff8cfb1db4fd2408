use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num::{BigInt, Integer, One};

use crate::poly::{Monomial, SparsePoly};

/// Version tag for CLI engine metadata.
pub const ENGINE_VERSION: &str = "buchberger-grevlex/1";

/// The term order used throughout. Only graded reverse lexicographic with
/// x < y < z < t is supported; the tag exists so call sites state it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Grevlex,
}

/// Full fraction-free reduction of `p` modulo `basis`: no term of the result
/// is divisible by any basis leading monomial. The result is `p` up to a
/// nonzero rational scalar modulo the ideal; content is not normalized here.
pub fn normal_form(p: &SparsePoly, basis: &[SparsePoly]) -> SparsePoly {
    let nvars = p.nvars();
    let mut rest = p.clone();
    let mut out = SparsePoly::zero(nvars);
    'outer: while !rest.is_zero() {
        let (mono, coeff) = {
            let (m, c) = rest.leading().unwrap();
            (*m, c.clone())
        };
        for g in basis {
            let Some((gm, gc)) = g.leading() else { continue };
            if gm.divides(&mono) {
                let gamma = coeff.gcd(gc);
                let mult = gc / &gamma;
                let q = &coeff / &gamma;
                let shift = gm.quotient_into(&mono);
                rest = rest.scaled(&mult).sub(&g.mul_term(&shift, &q));
                if !mult.is_one() {
                    out = out.scaled(&mult);
                }
                // keep coefficients small: strip any common content of the
                // scaled pair (out + rest stays proportional to p mod ideal)
                let c = out.content().gcd(&rest.content());
                if c > BigInt::one() {
                    out = divide_content(&out, &c);
                    rest = divide_content(&rest, &c);
                }
                continue 'outer;
            }
        }
        out.add_term(mono.0, coeff.clone());
        rest.add_term(mono.0, -coeff);
    }
    out
}

fn divide_content(p: &SparsePoly, c: &BigInt) -> SparsePoly {
    let mut out = SparsePoly::zero(p.nvars());
    for (m, k) in p.terms() {
        out.add_term(m.0, k / c);
    }
    out
}

/// The S-polynomial with integer coefficients:
/// `(lc_g/gamma) x^(L-lm_f) f - (lc_f/gamma) x^(L-lm_g) g` for `L = lcm(lm_f, lm_g)`.
fn s_polynomial(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let gamma = fc.gcd(gc);
    let a = gc / &gamma;
    let b = fc / &gamma;
    f.mul_term(&fm.quotient_into(&l), &a)
        .sub(&g.mul_term(&gm.quotient_into(&l), &b))
}

/// A reduced Groebner basis over the rationals in the fixed grevlex order,
/// represented with content-1 integer coefficients and positive leading
/// coefficients, sorted ascending by leading monomial. Deterministic:
/// S-pairs are processed by (lcm degree, lcm, indices), smallest first,
/// with Buchberger's coprime-leading-term criterion applied.
pub fn groebner_basis(gens: &[SparsePoly], nvars: usize, order: TermOrder) -> Vec<SparsePoly> {
    let TermOrder::Grevlex = order;
    let mut basis: Vec<SparsePoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            assert!(p.nvars() <= nvars);
            p.extended_to(nvars).primitive()
        })
        .collect();

    let mut pairs: BinaryHeap<Reverse<(u128, Monomial, usize, usize)>> = BinaryHeap::new();
    let push_pairs = |pairs: &mut BinaryHeap<_>, basis: &[SparsePoly], k: usize| {
        let lk = *basis[k].leading().unwrap().0;
        for (i, g) in basis.iter().enumerate().take(k) {
            let li = *g.leading().unwrap().0;
            let l = li.lcm(&lk);
            pairs.push(Reverse((l.degree(), l, i, k)));
        }
    };
    for k in 0..basis.len() {
        push_pairs(&mut pairs, &basis, k);
    }

    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        let li = *basis[i].leading().unwrap().0;
        let lj = *basis[j].leading().unwrap().0;
        if li.coprime(&lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.primitive());
            push_pairs(&mut pairs, &basis, k);
        }
    }

    reduce_basis(basis)
}

/// Minimalizes and tail-reduces a Groebner basis into the reduced basis.
fn reduce_basis(mut basis: Vec<SparsePoly>) -> Vec<SparsePoly> {
    basis.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    let mut minimal: Vec<SparsePoly> = Vec::new();
    for g in basis {
        let lm = *g.leading().unwrap().0;
        if !minimal
            .iter()
            .any(|h| h.leading().unwrap().0.divides(&lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<SparsePoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(normal_form(&minimal[i], &others).primitive());
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// True when the reduced basis is `{1}`, i.e. the ideal is the whole ring.
pub fn is_trivial_ideal(basis: &[SparsePoly]) -> bool {
    basis.len() == 1 && basis[0].leading().map(|(m, _)| m.is_one()) == Some(true)
}
