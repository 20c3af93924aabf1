use crate::poly::{Monomial, Polynomial, Term, TermOrder};

use super::basis::GroebnerBasis;
use super::division::{divide_prepared, s_polynomial_prepared};
use super::{GroebnerError, Ideal};

/// Maximum number of S-pair reductions in a single run.
pub const MAX_PAIR_REDUCTIONS: usize = 1_000_000;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Cofactors expressing a basis element in the ideal's generators.
type Cofactors = Vec<Polynomial>;

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller pair criteria. The output is a (not necessarily reduced)
/// Groebner basis of monic elements sorted by increasing leading monomial,
/// together with a certificate expressing each element in the ideal's
/// generators.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<GroebnerBasis, GroebnerError> {
    run(ideal, order, true)
}

pub(crate) fn run(
    ideal: &Ideal,
    order: &TermOrder,
    track: bool,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring();
    if order.nvars() != ring.nvars() {
        return Err(GroebnerError::RingMismatch);
    }
    let field = ring.field().clone();
    let ngens = ideal.generators().len();
    let zero = Polynomial::zero(ring, order);

    // Every polynomial ever produced, indexed by creation. `active` holds the
    // current basis; the rest were superseded.
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut certs: Vec<Cofactors> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for (k, g) in ideal.generators().iter().enumerate() {
        let g = g.with_order(order);
        let inv = field
            .inv(g.leading_coeff().expect("generators are nonzero"))
            .expect("nonzero");
        if track {
            let mut cert = vec![zero.clone(); ngens];
            cert[k] = Polynomial::constant(ring, order, inv.clone());
            certs.push(cert);
        }
        basis.push(g.scale(&inv));
        update(&basis, &mut active, &mut pairs, k);
    }

    let mut reductions = 0usize;
    while let Some(idx) = select(&pairs, order) {
        let Pair { i, j, lcm } = pairs.swap_remove(idx);
        reductions += 1;
        if reductions > MAX_PAIR_REDUCTIONS {
            return Err(GroebnerError::ResourceExhausted(MAX_PAIR_REDUCTIONS));
        }
        let (lmi, lmj) = (lm(&basis[i]), lm(&basis[j]));
        let s = s_polynomial_prepared(&basis[i], &basis[j])?;
        let reducers: Vec<&Polynomial> = active.iter().map(|&k| &basis[k]).collect();
        let mut quotients: Vec<Vec<Term>> =
            vec![Vec::new(); if track { reducers.len() } else { 0 }];
        let r = divide_prepared(&s, &reducers, track.then_some(&mut quotients))?;
        if r.is_zero() {
            continue;
        }
        let inv = field
            .inv(r.leading_coeff().expect("nonzero"))
            .expect("nonzero");
        if track {
            // r = ui·gi − uj·gj − Σ qk·gk, every basis element monic.
            let one = field.one();
            let ui = lmi.quotient_of(&lcm).expect("lcm multiple");
            let uj = lmj.quotient_of(&lcm).expect("lcm multiple");
            let mut cert = Vec::with_capacity(ngens);
            for c in 0..ngens {
                let mut acc = certs[i][c].mul_term(&one, &ui)?;
                acc = acc.sub_scaled(&one, &uj, &certs[j][c])?;
                for (&k, q) in active.iter().zip(&quotients) {
                    if q.is_empty() {
                        continue;
                    }
                    let qk = Polynomial::from_sorted_unchecked(ring, order, q.clone());
                    acc = acc.sub(&qk.mul(&certs[k][c])?)?;
                }
                cert.push(acc.scale(&inv));
            }
            certs.push(cert);
        }
        let r = r.scale(&inv);
        let unit = r.is_constant();
        basis.push(r);
        if unit {
            // 1 is in the ideal; every remaining pair reduces to zero.
            active = vec![basis.len() - 1];
            break;
        }
        update(&basis, &mut active, &mut pairs, basis.len() - 1);
    }

    active.sort_by(|&a, &b| order.compare(lm(&basis[a]), lm(&basis[b])));
    let elements = active.iter().map(|&k| basis[k].clone()).collect();
    let certificate = track.then(|| active.iter().map(|&k| certs[k].clone()).collect());
    Ok(GroebnerBasis::from_parts(
        ideal.clone(),
        order.clone(),
        elements,
        false,
        certificate,
    ))
}

fn lm(p: &Polynomial) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

/// Gebauer–Möller update: adds `basis[h]` to the active basis, creating only
/// the pairs with `h` that survive the product and chain criteria, pruning
/// old pairs made redundant by `h`, and retiring active elements whose
/// leading monomial `h` divides.
fn update(basis: &[Polynomial], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let mh = lm(&basis[h]);
    let mut candidates: Vec<(usize, Monomial)> =
        active.iter().map(|&g| (g, mh.lcm(lm(&basis[g])))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while !candidates.is_empty() {
        let (g, l) = candidates.remove(0);
        let coprime = mh.is_coprime(lm(&basis[g]));
        let dominated = candidates
            .iter()
            .chain(&kept)
            .any(|(_, other)| other.divides(&l));
        if coprime || !dominated {
            kept.push((g, l));
        }
    }
    kept.retain(|(g, _)| !mh.is_coprime(lm(&basis[*g])));

    pairs.retain(|p| {
        !mh.divides(&p.lcm) || lm(&basis[p.i]).lcm(mh) == p.lcm || lm(&basis[p.j]).lcm(mh) == p.lcm
    });
    pairs.extend(kept.into_iter().map(|(g, lcm)| Pair { i: g, j: h, lcm }));

    active.retain(|&g| !mh.divides(lm(&basis[g])));
    active.push(h);
}

/// Normal strategy: smallest lcm in the term order, then creation indices.
/// Graded orders therefore take the lowest lcm degree first.
fn select(pairs: &[Pair], order: &TermOrder) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            order
                .compare(&a.lcm, &b.lcm)
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
        })
        .map(|(k, _)| k)
}
