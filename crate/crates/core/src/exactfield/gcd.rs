//! Multivariate polynomial gcd.
//!
//! The main entry point [`poly_gcd`] uses a dense modular algorithm: images of the
//! gcd are computed modulo word-sized primes by recursive evaluation and Newton
//! interpolation, combined by Chinese remaindering, and the candidate is accepted
//! only after exact trial division over the rationals. [`prs_gcd`] is a plain
//! primitive pseudo-remainder-sequence implementation used as a fallback and as an
//! independent reference in tests.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::{self, UPoly};
use super::mpoly::{Exponent, MPoly, Semantics, Var};
use super::rational::Rational;

const VARS: [Var; 3] = [Var::M, Var::T1, Var::T2];

type Mono = [u32; 3];

/// Polynomial over `Z_p` with terms keyed by exponent slots; slot 0 is the most
/// significant variable in lex order.
type PolyP = BTreeMap<Mono, u64>;

fn lex_lead(a: &PolyP) -> Option<(&Mono, &u64)> {
    a.iter().next_back()
}

/// Greatest common divisor normalized to a primitive integer polynomial with
/// positive leading coefficient.
///
/// Under trig semantics monomials in `t1, t2` are units and never appear in the
/// result; under rational semantics they are ordinary factors.
pub fn poly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    gcd_with(a, b, true)
}

/// Reference gcd via primitive pseudo-remainder sequences (slow).
pub fn prs_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    gcd_with(a, b, false)
}

fn gcd_with(a: &MPoly, b: &MPoly, modular: bool) -> MPoly {
    assert_eq!(a.semantics(), b.semantics(), "semantics mismatch in gcd");
    let sem = a.semantics();
    if a.is_zero() && b.is_zero() {
        return MPoly::zero(sem);
    }
    let (ea, eb) = (a.min_exponent(), b.min_exponent());
    let mut common = Exponent::new(ea.m.min(eb.m), ea.t1.min(eb.t1), ea.t2.min(eb.t2));
    if a.is_zero() {
        common = eb;
    } else if b.is_zero() {
        common = ea;
    }
    if sem == Semantics::Trig {
        common.t1 = 0;
        common.t2 = 0;
    }
    let strip = |p: &MPoly, e: Exponent| -> MPoly {
        p.shift(&Exponent::new(-e.m, -e.t1, -e.t2))
            .with_semantics(Semantics::Rational)
            .expect("shifted to nonnegative exponents")
    };
    let pa = strip(a, ea).primitive_integer();
    let pb = strip(b, eb).primitive_integer();
    let core = if pa.is_zero() {
        pb
    } else if pb.is_zero() {
        pa
    } else if pa.is_constant() || pb.is_constant() {
        MPoly::one(Semantics::Rational)
    } else if pa == pb {
        pa
    } else if modular {
        brown_gcd(&pa, &pb).unwrap_or_else(|| prs_core(&pa, &pb))
    } else {
        prs_core(&pa, &pb)
    };
    core.with_semantics(sem)
        .expect("nonnegative exponents")
        .shift(&common)
        .primitive_integer()
}

fn to_modp(a: &MPoly, slots: &[Var], p: u64) -> Option<PolyP> {
    let mut out = PolyP::new();
    for (e, c) in a.terms() {
        let v = c.mod_prime(p)?;
        if v == 0 {
            continue;
        }
        let mut mono = [0u32; 3];
        for (i, var) in slots.iter().enumerate() {
            mono[i] = e.get(*var) as u32;
        }
        out.insert(mono, v);
    }
    Some(out)
}

/// Modular gcd of two primitive integer polynomials with nonnegative exponents and
/// no monomial content. Returns `None` if the prime budget is exhausted.
fn brown_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    // Order active variables by decreasing degree; unused slots stay at exponent 0.
    let mut active: Vec<Var> = VARS
        .iter()
        .copied()
        .filter(|v| a.degree(*v).unwrap_or(0) > 0 || b.degree(*v).unwrap_or(0) > 0)
        .collect();
    active.sort_by_key(|v| -(a.degree(*v).unwrap_or(0).max(b.degree(*v).unwrap_or(0))));
    let n = active.len();
    if n == 0 {
        return Some(MPoly::one(Semantics::Rational));
    }
    let lc_int = |x: &MPoly| -> BigInt {
        let lead = x
            .terms()
            .iter()
            .max_by(|s, t| lex_cmp_exp(&s.0, &t.0, &active))
            .unwrap();
        lead.1.numer()
    };
    let (la, lb) = (lc_int(a), lc_int(b));
    let gamma = la.gcd(&lb);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 ^ (a.len() as u64) << 20 ^ b.len() as u64);

    let mut modulus = BigInt::one();
    let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
    let mut best: Option<Mono> = None;
    let mut prev: Option<BTreeMap<Mono, BigInt>> = None;
    for &p in modp::prime_table() {
        let pb = BigInt::from(p);
        if (&la % &pb).is_zero() || (&lb % &pb).is_zero() {
            continue;
        }
        let (Some(ap), Some(bp)) = (to_modp(a, &active, p), to_modp(b, &active, p)) else {
            continue;
        };
        let g = gcd_p(&ap, &bp, n, p, &mut rng)?;
        let (lead, lc) = match lex_lead(&g) {
            Some((m, c)) => (*m, *c),
            None => continue,
        };
        if lead == [0, 0, 0] {
            return Some(MPoly::one(Semantics::Rational));
        }
        let scale = modp::mul(
            modp::inv(lc, p),
            gamma.mod_floor(&pb).to_u64().unwrap(),
            p,
        );
        let g: PolyP = g.into_iter().map(|(m, c)| (m, modp::mul(c, scale, p))).collect();
        match best.map(|b| lead.cmp(&b)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Equal) => {}
            _ => {
                best = Some(lead);
                modulus = BigInt::one();
                acc.clear();
                prev = None;
            }
        }
        crt_combine(&mut acc, &modulus, &g, p);
        modulus *= &pb;
        let sym = symmetric(&acc, &modulus);
        if prev.as_ref() == Some(&sym) {
            let cand = from_slots(&sym, &active);
            let cand = cand.primitive_integer();
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        prev = Some(sym);
    }
    None
}

fn lex_cmp_exp(x: &Exponent, y: &Exponent, slots: &[Var]) -> Ordering {
    for v in slots {
        match x.get(*v).cmp(&y.get(*v)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn crt_combine(acc: &mut BTreeMap<Mono, BigInt>, modulus: &BigInt, g: &PolyP, p: u64) {
    let pb = BigInt::from(p);
    let minv = if modulus.is_one() {
        1
    } else {
        modp::inv(modulus.mod_floor(&pb).to_u64().unwrap(), p)
    };
    let mut keys: Vec<Mono> = acc.keys().copied().collect();
    keys.extend(g.keys().copied());
    keys.sort_unstable();
    keys.dedup();
    for k in keys {
        let h = acc.get(&k).cloned().unwrap_or_default();
        let gv = g.get(&k).copied().unwrap_or(0);
        let hm = h.mod_floor(&pb).to_u64().unwrap();
        let t = modp::mul(modp::sub(gv, hm, p), minv, p);
        let v = h + modulus * BigInt::from(t);
        if v.is_zero() {
            acc.remove(&k);
        } else {
            acc.insert(k, v);
        }
    }
}

fn symmetric(acc: &BTreeMap<Mono, BigInt>, modulus: &BigInt) -> BTreeMap<Mono, BigInt> {
    let half = modulus >> 1;
    acc.iter()
        .map(|(k, v)| {
            let v = if *v > half { v - modulus } else { v.clone() };
            (*k, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

fn from_slots(sym: &BTreeMap<Mono, BigInt>, slots: &[Var]) -> MPoly {
    let terms = sym.iter().map(|(mono, c)| {
        let mut e = Exponent::ZERO;
        for (i, v) in slots.iter().enumerate() {
            let k = mono[i] as i32;
            e = e.plus(&match v {
                Var::M => Exponent::new(k, 0, 0),
                Var::T1 => Exponent::new(0, k, 0),
                Var::T2 => Exponent::new(0, 0, k),
            });
        }
        (e, Rational::from_bigint(c.clone()))
    });
    MPoly::from_terms(Semantics::Rational, terms).expect("nonnegative exponents")
}

/// Splits `a` into coefficients in `Z_p[x_{k-1}]` indexed by the remaining monomial.
fn split_last(a: &PolyP, k: usize) -> BTreeMap<Mono, UPoly> {
    let last = k - 1;
    let mut out: BTreeMap<Mono, UPoly> = BTreeMap::new();
    for (m, c) in a {
        let mut key = *m;
        let d = key[last] as usize;
        key[last] = 0;
        let u = out.entry(key).or_default();
        if u.len() <= d {
            u.resize(d + 1, 0);
        }
        u[d] = *c;
    }
    out
}

fn join_last(parts: &BTreeMap<Mono, UPoly>, k: usize) -> PolyP {
    let last = k - 1;
    let mut out = PolyP::new();
    for (key, u) in parts {
        for (d, &c) in u.iter().enumerate() {
            if c != 0 {
                let mut m = *key;
                m[last] = d as u32;
                out.insert(m, c);
            }
        }
    }
    out
}

fn eval_last(a: &PolyP, k: usize, r: u64, p: u64) -> PolyP {
    let last = k - 1;
    let mut out = PolyP::new();
    let mut powers: Vec<u64> = vec![1];
    for (m, c) in a {
        let d = m[last] as usize;
        while powers.len() <= d {
            let next = modp::mul(*powers.last().unwrap(), r, p);
            powers.push(next);
        }
        let mut key = *m;
        key[last] = 0;
        let v = modp::mul(*c, powers[d], p);
        let e = out.entry(key).or_insert(0);
        *e = modp::add(*e, v, p);
    }
    out.retain(|_, c| *c != 0);
    out
}

fn monic(a: PolyP, p: u64) -> PolyP {
    match lex_lead(&a) {
        None => a,
        Some((_, &lc)) => {
            let s = modp::inv(lc, p);
            a.into_iter().map(|(m, c)| (m, modp::mul(c, s, p))).collect()
        }
    }
}

fn degree_last(a: &PolyP, k: usize) -> usize {
    a.keys().map(|m| m[k - 1] as usize).max().unwrap_or(0)
}

/// Gcd over `Z_p` in the first `k` slots, monic in lex order. `None` signals that
/// no usable evaluation points were found (practically impossible for large `p`).
fn gcd_p(a: &PolyP, b: &PolyP, k: usize, p: u64, rng: &mut ChaCha8Rng) -> Option<PolyP> {
    if a.is_empty() {
        return Some(monic(b.clone(), p));
    }
    if b.is_empty() {
        return Some(monic(a.clone(), p));
    }
    if k == 1 {
        let ua = split_last(a, 1).remove(&[0, 0, 0]).unwrap_or_default();
        let ub = split_last(b, 1).remove(&[0, 0, 0]).unwrap_or_default();
        let g = modp::ugcd(&ua, &ub, p);
        let mut parts = BTreeMap::new();
        parts.insert([0u32, 0, 0], g);
        return Some(join_last(&parts, 1));
    }
    // Content in the evaluation variable.
    let sa = split_last(a, k);
    let sb = split_last(b, k);
    let content = |s: &BTreeMap<Mono, UPoly>| {
        s.values().fold(Vec::new(), |g, u| if g.len() == 1 { g } else { modp::ugcd(&g, u, p) })
    };
    let (ca, cb) = (content(&sa), content(&sb));
    let c = modp::ugcd(&ca, &cb, p);
    let prim = |s: BTreeMap<Mono, UPoly>, cont: &UPoly| -> BTreeMap<Mono, UPoly> {
        if cont.len() == 1 {
            return s;
        }
        s.into_iter().map(|(m, u)| (m, modp::udivrem(&u, cont, p).0)).collect()
    };
    let sa = prim(sa, &ca);
    let sb = prim(sb, &cb);
    let lca = sa.iter().next_back().unwrap().1.clone();
    let lcb = sb.iter().next_back().unwrap().1.clone();
    let gamma = modp::ugcd(&lca, &lcb, p);
    let a = join_last(&sa, k);
    let b = join_last(&sb, k);
    let bound = degree_last(&a, k).min(degree_last(&b, k)) + gamma.len();

    let mut best: Option<Mono> = None;
    let mut interp: BTreeMap<Mono, UPoly> = BTreeMap::new();
    let mut q: UPoly = vec![1];
    let mut npoints = 0usize;
    let mut failures = 0usize;
    loop {
        if failures > 64 {
            return None;
        }
        let r = rng.gen_range(1..p);
        if modp::ueval(&lca, r, p) == 0 || modp::ueval(&lcb, r, p) == 0 {
            failures += 1;
            continue;
        }
        let ar = eval_last(&a, k, r, p);
        let br = eval_last(&b, k, r, p);
        let g = gcd_p(&ar, &br, k - 1, p, rng)?;
        let lead = *lex_lead(&g).unwrap().0;
        if lead == [0, 0, 0] {
            let mut parts = BTreeMap::new();
            parts.insert([0u32, 0, 0], c);
            return Some(monic(join_last(&parts, k), p));
        }
        match best.map(|b| lead.cmp(&b)) {
            Some(Ordering::Greater) => {
                failures += 1;
                continue;
            }
            Some(Ordering::Equal) => {}
            _ => {
                best = Some(lead);
                interp.clear();
                q = vec![1];
                npoints = 0;
            }
        }
        let gr = modp::ueval(&gamma, r, p);
        let g: PolyP = g.into_iter().map(|(m, v)| (m, modp::mul(v, gr, p))).collect();
        // Newton step: H += q * (g - H(r)) / q(r).
        let qr_inv = modp::inv(modp::ueval(&q, r, p), p);
        let mut keys: Vec<Mono> = interp.keys().copied().collect();
        keys.extend(g.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        let mut changed = false;
        for key in keys {
            let h = interp.get(&key).cloned().unwrap_or_default();
            let hv = modp::ueval(&h, r, p);
            let gv = g.get(&key).copied().unwrap_or(0);
            let diff = modp::mul(modp::sub(gv, hv, p), qr_inv, p);
            if diff != 0 {
                changed = true;
                let upd = modp::uadd(&h, &modp::uscale(&q, diff, p), p);
                if upd.is_empty() {
                    interp.remove(&key);
                } else {
                    interp.insert(key, upd);
                }
            }
        }
        q = modp::umul(&q, &[modp::neg(r, p), 1].to_vec(), p);
        npoints += 1;
        if npoints > bound || (!changed && npoints > 1) {
            break;
        }
    }
    let hc = interp.values().fold(Vec::new(), |g, u| if g.len() == 1 { g } else { modp::ugcd(&g, u, p) });
    let h: BTreeMap<Mono, UPoly> = interp
        .into_iter()
        .map(|(m, u)| (m, modp::umul(&modp::udivrem(&u, &hc, p).0, &c, p)))
        .collect();
    Some(monic(join_last(&h, k), p))
}

fn prs_core(a: &MPoly, b: &MPoly) -> MPoly {
    let var = VARS
        .iter()
        .copied()
        .find(|v| a.degree(*v).unwrap_or(0) > 0 || b.degree(*v).unwrap_or(0) > 0);
    let Some(v) = var else {
        return MPoly::one(Semantics::Rational);
    };
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let cont = |u: &[MPoly]| {
        u.iter()
            .filter(|c| !c.is_zero())
            .fold(MPoly::zero(Semantics::Rational), |g, c| prs_gcd(&g, c))
    };
    let (ca, cb) = (cont(&ua), cont(&ub));
    let c = prs_gcd(&ca, &cb);
    let prim = |u: Vec<MPoly>, cnt: &MPoly| -> Vec<MPoly> {
        u.into_iter().map(|x| x.div_exact(cnt).expect("content divides")).collect()
    };
    let mut x = prim(ua, &ca);
    let mut y = prim(ub, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        if r.is_empty() {
            break;
        }
        let rc = cont(&r);
        y = prim(r, &rc);
    }
    let g = MPoly::from_univariate(Semantics::Rational, v, &x);
    (&g * &c).primitive_integer()
}

fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut r: Vec<MPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(bc * &lr);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(sem: Semantics, x: Var) -> MPoly {
        MPoly::var(sem, x)
    }

    fn c(sem: Semantics, n: i64) -> MPoly {
        MPoly::int(sem, n)
    }

    #[test]
    fn gcd_of_products_with_common_factor() {
        let s = Semantics::Rational;
        let (m, x, y) = (v(s, Var::M), v(s, Var::T1), v(s, Var::T2));
        let f = &(&x + &y) + &(&m * &x);
        let a = &f * &(&x - &c(s, 3));
        let b = &(&f * &f) * &(&y + &c(s, 2));
        assert_eq!(poly_gcd(&a, &b), f.primitive_integer());
        assert_eq!(prs_gcd(&a, &b), f.primitive_integer());
    }

    #[test]
    fn coprime_gives_one() {
        let s = Semantics::Rational;
        let (x, y) = (v(s, Var::T1), v(s, Var::T2));
        let a = &(&x * &x) + &c(s, 1);
        let b = &(&y * &x) - &c(s, 1);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn trig_monomials_are_units() {
        let s = Semantics::Trig;
        let z = v(s, Var::T1);
        let a = &(&z * &z) * &(&z - &c(s, 1));
        let b = &z * &(&z + &c(s, 1));
        assert!(poly_gcd(&a, &b).is_one());
        let r = Semantics::Rational;
        let w = v(r, Var::T1);
        let a = &(&w * &w) * &(&w - &c(r, 1));
        let b = &w * &(&w + &c(r, 1));
        assert_eq!(poly_gcd(&a, &b), w);
    }

    #[test]
    fn integer_content_is_removed() {
        let s = Semantics::Rational;
        let x = v(s, Var::T1);
        let a = (&x - &c(s, 1)).scale(&Rational::from_int(6));
        let b = (&(&x - &c(s, 1)) * &x).scale(&Rational::new(4, 3));
        assert_eq!(poly_gcd(&a, &b), &x - &c(s, 1));
    }
}
