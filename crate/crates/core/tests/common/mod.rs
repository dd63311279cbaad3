//! Brute-force oracles shared by the integration tests and the acceptance run.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use pairwalls_core::ratpoly::{int, rat, to_i64};
use pairwalls_core::{NumClass, RatPoly, Rational};

pub fn classes() -> Vec<NumClass> {
    vec![
        NumClass::new(2, -1, rat(-1, 2), rat(5, 6)).unwrap(),
        NumClass::new(2, 0, int(-1), int(0)).unwrap(),
        NumClass::new(2, 0, int(-3), int(4)).unwrap(),
        NumClass::new(2, 0, int(-2), int(0)).unwrap(),
        NumClass::new(2, 0, int(-2), int(1)).unwrap(),
    ]
}

/// `chi(v(t))` straight from `ch * exp(tH) * td(P^3)`.
pub fn chi(v: &NumClass, t: i64) -> Rational {
    let t = int(t);
    let (c0, c1, c2, c3) = (int(v.ch0()), int(v.ch1()), v.ch2().clone(), v.ch3().clone());
    let half = rat(1, 2);
    let sixth = rat(1, 6);
    let e1 = &c1 + &(&t * &c0);
    let e2 = &c2 + &(&t * &c1) + &(&t * &t * &half * &c0);
    let e3 = &c3 + &(&t * &c2) + &(&t * &t * &half * &c1) + &(&t * &t * &t * &sixth * &c0);
    e3 + int(2) * e2 + rat(11, 6) * e1 + c0
}

/// Forward differences `f(0), Df(0), D^2f(0), D^3f(0)`: the coordinates of a
/// cubic in the basis `binom(t, j)`. Each basis element has a positive
/// leading coefficient, so lex order on polynomials is lex order on these
/// coordinates read from the top.
fn diffs(f: impl Fn(i64) -> i64) -> [i64; 4] {
    let mut v: Vec<i64> = (0..=3).map(f).collect();
    let mut out = [0; 4];
    for slot in &mut out {
        *slot = v[0];
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

fn top_cmp(a: &[i64; 4], b: &[i64; 4]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

fn to_poly(b: &[i64; 4]) -> RatPoly {
    let mut out = RatPoly::zero();
    for (j, c) in b.iter().enumerate() {
        out = &out + &RatPoly::binomial(0, j as u32).scalar_mul(&int(*c));
    }
    out
}

fn p_o(t: i64) -> i64 {
    (t + 3) * (t + 2) * (t + 1) / 6
}

fn min_chi(d: i64) -> i64 {
    1 - (d - 1) * (d - 2) / 2
}

fn scheme_ok(d: i64, chi: i64) -> bool {
    match d {
        0 => chi >= 0,
        d if d > 0 => chi >= min_chi(d),
        _ => false,
    }
}

pub type Key = (i64, i64, i64, i64, i64, RatPoly);

/// Every `(s, A)` on the bounded grid whose critical value lies in
/// `(0, W_empty)`, plus the collapsing record.
pub fn naive_walls(v: &NumClass, k: i64) -> BTreeSet<Key> {
    let m = 2 * k + v.c1();
    let pe = |t: i64| to_i64(&chi(v, t + k)).expect("integral class");
    let pe_vals: Vec<i64> = (-(m + 1)..=4).map(pe).collect();
    let pe = |t: i64| pe_vals[(t + m + 1) as usize];
    let zero = [0; 4];
    let w_empty = diffs(|t| pe(t) - 2 * p_o(t));
    let mut out = BTreeSet::new();
    for s in 0..=k {
        for da in 0..=10 {
            for ca in -40..=40 {
                if !scheme_ok(da, ca) {
                    continue;
                }
                let pa = |t: i64| da * t + ca;
                let delta = diffs(|t| pe(t) - 2 * (p_o(t + s) - pa(t + s)));
                let collapsing = s == 0 && da == 0 && ca == 0;
                let inside = top_cmp(&delta, &zero).is_gt() && top_cmp(&delta, &w_empty).is_lt();
                if !collapsing && !inside {
                    continue;
                }
                let pb = diffs(|t| {
                    let u = t - (m - s);
                    p_o(u + s) + p_o(u + m - s) - pe(u) - pa(u + s)
                });
                let [cb, db, 0, 0] = pb else { continue };
                if scheme_ok(db, cb) {
                    out.insert((s, da, ca, db, cb, to_poly(&delta)));
                }
            }
        }
    }
    out
}

/// The invariants of a spectrum, checked without the generator.
pub fn valid(ks: &[i64], c2: i64, c3: i64) -> Option<i64> {
    if ks.len() as i64 != c2 || ks.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    let sum: i64 = ks.iter().sum();
    // c3 = -2 sum - 2 s
    if (-c3 - 2 * sum) % 2 != 0 {
        return None;
    }
    let s = (-c3 - 2 * sum) / 2;
    if s < 0 || s > (c2 * c2 + c2) / 2 {
        return None;
    }
    for &k in ks {
        let need: Vec<i64> = if k <= -2 {
            (k..=-1).collect()
        } else if k >= 1 {
            (1..=k).collect()
        } else {
            vec![]
        };
        if need.iter().any(|j| !ks.contains(j)) {
            return None;
        }
    }
    Some(s)
}
