//! Verification suites. Each returns a [`VerificationReport`] with one case
//! per checked instance.

use std::collections::BTreeMap;
use std::time::Instant;

use kkpoly::nilhecke::{self, d, dyer_check_with, x_of, x_of_word};
use kkpoly::weyl::{
    bruhat_leq, bruhat_leq_subword, enumerate, enumerate_involutions, involution_leq,
};
use kkpoly::{
    CartanType, Error, GroupElement, Kind, LinearForm, Polynomial, Result, Root, RootSystem,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use kkpoly::coadjoint::OrbitProblem;

use crate::distinguish;
use crate::embedding::{self, Embedding, Sign};
use crate::report::VerificationReport;

/// Size limits for the expensive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest rank for the pairwise `d_w` sweep.
    pub dw_rank: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { dw_rank: 3 }
    }
}

impl Budget {
    /// Allows rank four, the largest size the sweeps are sized for.
    pub fn extended() -> Self {
        Budget { dw_rank: 4 }
    }
}

fn params(ct: CartanType) -> Value {
    json!({"type": ct.kind().to_string(), "rank": ct.rank()})
}

fn timed(
    name: &str,
    p: Value,
    body: impl FnOnce(&mut VerificationReport) -> Result<()>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(name, p);
    body(&mut report)?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn require_kind(ct: CartanType, allowed: &[Kind], what: &'static str) -> Result<()> {
    if allowed.contains(&ct.kind()) {
        Ok(())
    } else {
        Err(Error::UnsupportedKind { kind: ct.kind(), what })
    }
}

fn reflection(rs: &RootSystem, eps: &str) -> Result<GroupElement> {
    GroupElement::from_reflection(rs, &rs.parse_root(eps)?)
}

fn show(w: &GroupElement) -> Value {
    Value::String(w.to_string())
}

fn roots_json(roots: &[Root]) -> Value {
    Value::Array(roots.iter().map(|r| Value::String(r.eps_string())).collect())
}

/// Pairwise distinctness of `d_w` over all involutions.
pub fn distinct_dw(ct: CartanType, budget: Budget) -> Result<VerificationReport> {
    if ct.rank() > budget.dw_rank {
        return Err(Error::Precondition(format!(
            "{ct} exceeds the d_w sweep budget (rank <= {}): {} involutions in a group of \
             order {}; raise the budget explicitly",
            budget.dw_rank,
            enumerate_involutions(ct).count(),
            kkpoly::weyl::group_order(ct)
        )));
    }
    timed("distinct-dw", params(ct), |report| {
        let inv: Vec<GroupElement> = enumerate_involutions(ct).collect();
        let values: Vec<Result<Polynomial>> = inv.par_iter().map(|w| d(w).map(|k| k.value)).collect();
        let mut polys = Vec::with_capacity(inv.len());
        for (w, v) in inv.iter().zip(values) {
            match v {
                Ok(p) => polys.push(Some(p)),
                Err(e) => {
                    report.push(json!({"w": show(w)}), json!("polynomial"), json!(e.to_string()), false);
                    polys.push(None);
                }
            }
        }
        for i in 0..inv.len() {
            for j in i + 1..inv.len() {
                let (Some(a), Some(b)) = (&polys[i], &polys[j]) else {
                    continue;
                };
                let got = if a == b {
                    json!({"equal": a.to_string()})
                } else {
                    json!("distinct")
                };
                report.check(json!({"w1": show(&inv[i]), "w2": show(&inv[j])}), json!("distinct"), got);
            }
        }
        Ok(())
    })
}

/// `w` restricted to `2..n` as an element of the rank `n - 1` group.
fn restrict_to_tail(w: &GroupElement) -> Result<GroupElement> {
    let ct = w.cartan();
    let small = CartanType::new_unchecked_rank(ct.kind(), ct.rank() - 1)?;
    let images = w.images()[1..]
        .iter()
        .map(|&x| x.signum() * (x.abs() - 1))
        .collect();
    GroupElement::from_images(small, images)
}

/// Inserts a zero exponent for `a1`.
fn lift(p: &Polynomial) -> Result<Polynomial> {
    Polynomial::from_terms(
        p.nvars() + 1,
        p.terms().map(|(m, c)| {
            let mut e = vec![0];
            e.extend_from_slice(&m.0);
            (c.clone(), e)
        }),
    )
}

/// Divisibility of `d_w` by the first-column roots.
pub fn divisibility(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::B, Kind::C], "first-column divisibility")?;
    timed("divisibility", params(ct), |report| {
        let rs = RootSystem::from_cartan(ct);
        let col = rs.column(1)?;
        let forms: Vec<LinearForm> = col.iter().map(LinearForm::from).collect();
        let inv: Vec<GroupElement> = enumerate_involutions(ct).collect();
        let values: Vec<Result<Polynomial>> = inv.par_iter().map(|w| d(w).map(|k| k.value)).collect();
        let mut empty = 0;
        for (w, dw) in inv.iter().zip(values) {
            let dw = dw?;
            let supp = w.support(&rs)?;
            let meet: Vec<Root> = supp.into_iter().filter(|r| col.contains(r)).collect();
            match meet.as_slice() {
                [] => {
                    empty += 1;
                    let mut divisible = Vec::new();
                    for (r, l) in col.iter().zip(&forms) {
                        if dw.divide_by_linear(l)?.is_some() {
                            divisible.push(r.clone());
                        }
                    }
                    let tilde = d(&restrict_to_tail(w)?)?.value;
                    let product = forms.iter().fold(lift(&tilde)?, |acc, l| acc.mul_linear(l));
                    report.check(
                        json!({"w": show(w), "support_meets_first_column": Value::Null}),
                        json!({"divisible_by": roots_json(&col), "factorization": true}),
                        json!({"divisible_by": roots_json(&divisible), "factorization": product == dw}),
                    );
                }
                [beta] => {
                    let divides = dw.divide_by_linear(&LinearForm::from(beta))?.is_some();
                    report.check(
                        json!({"w": show(w), "support_meets_first_column": beta.eps_string()}),
                        json!({"divides": false}),
                        json!({"divides": divides}),
                    );
                }
                _ => report.push(
                    json!({"w": show(w)}),
                    json!("at most one support root in the first column"),
                    roots_json(&meet),
                    false,
                ),
            }
        }
        report.note(format!("{empty} involutions with support disjoint from the first column"));
        Ok(())
    })
}

fn strictly_below(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    Ok(bruhat_leq(a, b)? && !bruhat_leq(b, a)?)
}

fn incomparable(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    Ok(!bruhat_leq(a, b)? && !bruhat_leq(b, a)?)
}

/// Bruhat relations between reflections in the first column and between
/// short/long-root reflections.
pub fn bruhat_remarks(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::B, Kind::C], "reflection comparisons")?;
    timed("bruhat-remarks", params(ct), |report| {
        let rs = RootSystem::from_cartan(ct);
        let n = ct.rank();
        let mut chain: Vec<String> = (2..=n).map(|j| format!("e1-e{j}")).collect();
        chain.extend((2..=n).rev().map(|j| format!("e1+e{j}")));
        for pair in chain.windows(2) {
            let below = strictly_below(&reflection(&rs, &pair[0])?, &reflection(&rs, &pair[1])?)?;
            report.check(json!({"less": pair[0], "greater": pair[1]}), json!(true), json!(below));
        }
        let col = rs.column(1)?;
        for a in &col {
            for b in rs.positive_roots().iter().filter(|r| !col.contains(r)) {
                let sa = GroupElement::from_reflection(&rs, a)?;
                let sb = GroupElement::from_reflection(&rs, b)?;
                report.check(
                    json!({"first_column": a.eps_string(), "other": b.eps_string()}),
                    json!({"leq": false}),
                    json!({"leq": bruhat_leq(&sa, &sb)?}),
                );
            }
        }
        let long = |k: usize| match ct.kind() {
            Kind::C => format!("2e{k}"),
            _ => format!("e{k}"),
        };
        let mut outside = 0;
        let mut outside_hold = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=n {
                    let sk = reflection(&rs, &long(k))?;
                    let below = strictly_below(&reflection(&rs, &format!("e{i}-e{j}"))?, &sk)?;
                    let apart = incomparable(&reflection(&rs, &format!("e{i}+e{j}"))?, &sk)?;
                    if k <= i {
                        report.check(
                            json!({"i": i, "j": j, "k": k, "long": long(k)}),
                            json!({"diff_below": true, "sum_incomparable": true}),
                            json!({"diff_below": below, "sum_incomparable": apart}),
                        );
                    } else {
                        outside += 1;
                        if below && apart {
                            outside_hold += 1;
                        }
                    }
                }
            }
        }
        report.note(format!(
            "triples with k > i: {outside}, of which both relations hold for {outside_hold}"
        ));
        Ok(())
    })
}

fn tally_printed(report: &mut VerificationReport, offsets: &BTreeMap<i64, usize>, agree: usize, total: usize) {
    report.note(format!("printed closed form agrees with the inversion count in {agree} of {total} cases"));
    let hist: Vec<String> = offsets.iter().map(|(o, c)| format!("{o:+}: {c}")).collect();
    report.note(format!("printed minus direct: {}", hist.join(", ")));
}

/// Type A length formula for every involution and every `(k1, k2)`.
pub fn length_lemma_a(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::A], "type A length formula")?;
    timed("length-lemma-a", params(ct), |report| {
        let mut offsets = BTreeMap::new();
        let mut agree = 0;
        let mut total = 0;
        for w in enumerate_involutions(ct) {
            for e in Embedding::all(ct) {
                let lc = embedding::length_lemma_a(&e, &w)?;
                total += 1;
                agree += usize::from(lc.printed_holds());
                *offsets.entry(lc.printed_offset()).or_insert(0) += 1;
                report.check(
                    json!({"w": show(&w), "k1": e.k1(), "k2": e.k2(), "printed": lc.printed}),
                    json!(lc.corrected),
                    json!(lc.direct),
                );
            }
        }
        tally_printed(report, &offsets, agree, total);
        Ok(())
    })
}

/// Type C length formulas for both signs.
pub fn length_lemma_c(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::C], "type C length formula")?;
    timed("length-lemma-c", params(ct), |report| {
        let mut offsets = BTreeMap::new();
        let mut agree = 0;
        let mut total = 0;
        for w in enumerate_involutions(ct) {
            for e in Embedding::all(ct) {
                for sign in [Sign::Minus, Sign::Plus] {
                    let lc = embedding::length_lemma_c(&e, &w, sign)?;
                    total += 1;
                    agree += usize::from(lc.printed_holds());
                    *offsets.entry(lc.printed_offset()).or_insert(0) += 1;
                    report.check(
                        json!({"w": show(&w), "k1": e.k1(), "k2": e.k2(), "sign": sign, "printed": lc.printed}),
                        json!(lc.corrected),
                        json!(lc.direct),
                    );
                }
            }
        }
        tally_printed(report, &offsets, agree, total);
        Ok(())
    })
}

/// Separation of equal-length involution pairs by the twisted lengths.
pub fn distinguish(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::A, Kind::C], "distinguishing embedding")?;
    timed("distinguish", params(ct), |report| {
        let inv: Vec<GroupElement> = enumerate_involutions(ct).collect();
        let mut per_case: BTreeMap<String, usize> = BTreeMap::new();
        let mut relabelled = 0;
        for (i, a) in inv.iter().enumerate() {
            for b in &inv[i + 1..] {
                if a.length() != b.length() {
                    continue;
                }
                let input = json!({"w1": show(a), "w2": show(b)});
                match distinguish::choose(a, b)? {
                    None => report.push(input, json!("inside the case analysis"), json!("outside every case"), false),
                    Some(c) => {
                        let (l1, l2) = c.lengths()?;
                        let label = serde_json::to_value(c.case).expect("case serializes");
                        *per_case.entry(label.as_str().unwrap_or("?").to_string()).or_insert(0) += 1;
                        relabelled += usize::from(c.relabelled);
                        report.push(
                            json!({
                                "w1": show(&c.w1), "w2": show(&c.w2),
                                "k1": c.embedding.k1(), "k2": c.embedding.k2(),
                                "sign": c.sign, "case": label,
                            }),
                            json!("different lengths"),
                            json!([l1, l2]),
                            l1 != l2,
                        );
                    }
                }
            }
        }
        let counts: Vec<String> = per_case.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        report.note(format!("pairs per case: {}", counts.join(", ")));
        if ct.kind() == Kind::C {
            report.note(format!(
                "{relabelled} pairs with both images negative needed the larger index as w1"
            ));
        }
        Ok(())
    })
}

/// Orbit dimension against length for every involution.
pub fn orbit_dims(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::A, Kind::C], "coadjoint orbits")?;
    let limit = if ct.kind() == Kind::A { 4 } else { 3 };
    if ct.rank() > limit {
        return Err(Error::Precondition(format!(
            "{ct} exceeds the orbit budget (rank <= {limit}); the tangent matrix has {} rows",
            ct.rank() + ct.num_positive_roots()
        )));
    }
    timed("orbit-dim", params(ct), |report| {
        let problem = OrbitProblem::for_cartan(ct)?;
        let inv: Vec<GroupElement> = enumerate_involutions(ct).collect();
        let dims: Vec<Result<usize>> = inv.par_iter().map(|s| problem.orbit_dim(s)).collect();
        for (s, dim) in inv.iter().zip(dims) {
            report.check(json!({"sigma": show(s)}), json!(s.length()), json!(dim?));
        }
        Ok(())
    })
}

type Disagreement = (String, String);

/// Rank-matrix Bruhat order against the subword oracle on all pairs, and
/// the strictly-lower criterion against the full one on involution pairs.
pub fn bruhat_oracles(ct: CartanType) -> Result<VerificationReport> {
    timed("bruhat-oracles", params(ct), |report| {
        let all: Vec<GroupElement> = enumerate(ct).collect();
        let rows: Vec<Result<(usize, Vec<Disagreement>)>> = all
            .par_iter()
            .map(|w| {
                let mut bad = Vec::new();
                for v in &all {
                    if bruhat_leq(v, w)? != bruhat_leq_subword(v, w)? {
                        bad.push((v.to_string(), w.to_string()));
                    }
                }
                Ok((all.len(), bad))
            })
            .collect();
        let mut checked = 0;
        for row in rows {
            let (count, bad) = row?;
            checked += count;
            for (v, w) in bad {
                report.push(json!({"v": v, "w": w}), json!("rank = subword"), json!("disagree"), false);
            }
        }
        report.check(json!({"pairs": checked}), json!("all agree"), json!(if report.passed() { "all agree" } else { "disagreements" }));
        let inv: Vec<GroupElement> = enumerate_involutions(ct).collect();
        let mut agree = true;
        for a in &inv {
            for b in &inv {
                if involution_leq(a, b)? != bruhat_leq(a, b)? {
                    agree = false;
                    report.push(json!({"sigma": show(a), "tau": show(b)}), json!("strict-lower = full"), json!("disagree"), false);
                }
            }
        }
        report.check(
            json!({"involution_pairs": inv.len() * inv.len()}),
            json!(true),
            json!(agree),
        );
        Ok(())
    })
}

/// `x_v x_w = x_{vw}` when lengths add and `0` otherwise.
pub fn product_table(ct: CartanType) -> Result<VerificationReport> {
    timed("product-table", params(ct), |report| {
        let all: Vec<GroupElement> = enumerate(ct).collect();
        let xs: Vec<_> = all.par_iter().map(x_of).collect();
        let index: BTreeMap<&GroupElement, usize> = all.iter().enumerate().map(|(i, w)| (w, i)).collect();
        for (i, v) in all.iter().enumerate() {
            for (j, w) in all.iter().enumerate() {
                let prod = xs[i].multiply(&xs[j])?;
                let vw = v.compose(w)?;
                let adds = vw.length() == v.length() + w.length();
                let ok = if adds { prod == xs[index[&vw]] } else { prod.is_zero() };
                report.push(
                    json!({"v": show(v), "w": show(w)}),
                    json!(if adds { "x_vw" } else { "0" }),
                    json!(if ok { if adds { "x_vw" } else { "0" } } else { "mismatch" }),
                    ok,
                );
            }
        }
        Ok(())
    })
}

/// Reduced words of `w`, at most `limit` of them.
pub fn reduced_words(w: &GroupElement, limit: usize) -> Vec<Vec<usize>> {
    fn go(w: &GroupElement, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if w.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in 1..=w.cartan().rank() {
            if w.is_right_descent(i) {
                suffix.push(i);
                go(&w.mul_simple(i), suffix, out, limit);
                suffix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out, limit);
    out
}

/// `x_w` computed along different reduced words. With `sample = Some((count, seed))`
/// only that many random elements are checked.
pub fn word_independence(ct: CartanType, sample: Option<(usize, u64)>) -> Result<VerificationReport> {
    timed("word-independence", params(ct), |report| {
        let mut all: Vec<GroupElement> = enumerate(ct).collect();
        if let Some((count, seed)) = sample {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            all = all.choose_multiple(&mut rng, count).cloned().collect();
        }
        for w in &all {
            let mut words = reduced_words(w, 64);
            words.sort();
            words.dedup();
            let first = x_of_word(ct, &words[0])?;
            let other = words.last().expect("at least one word");
            let same = x_of_word(ct, other)? == first;
            report.check(
                json!({"w": show(w), "words": words.len()}),
                json!(true),
                json!(same),
            );
        }
        Ok(())
    })
}

/// For involutions meeting the first column in `e1 - ej` (`j > 2`) or
/// `e1 + ej`, the tail factor `v` of `w = u v` satisfies `v^{-1} >= u s1`.
pub fn parabolic_step(ct: CartanType) -> Result<VerificationReport> {
    require_kind(ct, &[Kind::B, Kind::C], "first-column factorization")?;
    timed("parabolic-step", params(ct), |report| {
        let rs = RootSystem::from_cartan(ct);
        let col = rs.column(1)?;
        let tail: Vec<usize> = (2..=ct.rank()).collect();
        for w in enumerate_involutions(ct) {
            let supp = w.support(&rs)?;
            let Some(beta) = supp.iter().find(|r| col.contains(r)) else {
                continue;
            };
            let x = w.apply(1);
            let relevant = (x > 2) || (x < 0 && x != -1);
            if !relevant {
                continue;
            }
            let (u, v) = w.parabolic_decompose(&tail)?;
            let g0 = u.mul_simple(1);
            let holds = bruhat_leq(&g0, &v.inverse())?;
            report.check(
                json!({"w": show(&w), "beta": beta.eps_string(), "u": show(&u), "v": show(&v)}),
                json!(true),
                json!(holds),
            );
        }
        Ok(())
    })
}

/// `c_{w,v} != 0` exactly on the Bruhat interval, and the root-product
/// denominator bound. With `sample = Some((count, seed))`, random pairs.
pub fn support_and_dyer(ct: CartanType, sample: Option<(usize, u64)>) -> Result<VerificationReport> {
    timed("support-dyer", params(ct), |report| {
        let all: Vec<GroupElement> = enumerate(ct).collect();
        let pairs: Vec<(GroupElement, GroupElement)> = match sample {
            None => all
                .iter()
                .flat_map(|w| all.iter().map(move |v| (w.clone(), v.clone())))
                .collect(),
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let w = all.choose(&mut rng).expect("nonempty group").clone();
                        let v = all.choose(&mut rng).expect("nonempty group").clone();
                        (w, v)
                    })
                    .collect()
            }
        };
        let mut by_w: BTreeMap<GroupElement, Vec<GroupElement>> = BTreeMap::new();
        for (w, v) in pairs {
            by_w.entry(w).or_default().push(v);
        }
        let groups: Vec<(GroupElement, Vec<GroupElement>)> = by_w.into_iter().collect();
        let rows: Vec<Result<Vec<(Value, Value, Value)>>> = groups
            .par_iter()
            .map(|(w, vs)| {
                let xw = x_of(w);
                let mut out = Vec::new();
                for v in vs {
                    let cwv = xw.coeff(v);
                    let below = bruhat_leq(v, w)?;
                    let dyer = if below {
                        json!(dyer_check_with(w, v, &cwv)?.ok)
                    } else {
                        Value::Null
                    };
                    out.push((
                        json!({"w": show(w), "v": show(v)}),
                        json!({"nonzero": below, "dyer": if below { json!(true) } else { Value::Null }}),
                        json!({"nonzero": !cwv.is_zero(), "dyer": dyer}),
                    ));
                }
                Ok(out)
            })
            .collect();
        for row in rows {
            for (i, e, g) in row? {
                report.check(i, e, g);
            }
        }
        Ok(())
    })
}

/// `delta_w` expanded in the `x` basis and back.
pub fn delta_round_trip(ct: CartanType) -> Result<VerificationReport> {
    timed("delta-round-trip", params(ct), |report| {
        for w in enumerate(ct) {
            let dx = nilhecke::delta_in_x_basis(&w)?;
            let back = nilhecke::x_combination(ct, &dx)?;
            report.check(
                json!({"w": show(&w)}),
                json!(true),
                json!(back == nilhecke::NilHeckeElement::delta(&w)),
            );
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(kind: Kind, n: usize) -> CartanType {
        CartanType::new(kind, n).unwrap()
    }

    #[test]
    fn small_sweeps_pass() {
        let r = distinct_dw(ct(Kind::C, 2), Budget::default()).unwrap();
        assert_eq!(r.summary.pass, 15);
        assert!(r.passed());
        assert_eq!(distinct_dw(ct(Kind::A, 2), Budget::default()).unwrap().summary.pass, 6);
        assert!(divisibility(ct(Kind::C, 2)).unwrap().passed());
        assert!(bruhat_remarks(ct(Kind::C, 3)).unwrap().passed());
        assert!(length_lemma_a(ct(Kind::A, 2)).unwrap().passed());
        assert!(length_lemma_c(ct(Kind::C, 2)).unwrap().passed());
        assert!(distinguish(ct(Kind::C, 2)).unwrap().passed());
        assert!(orbit_dims(ct(Kind::A, 2)).unwrap().passed());
        assert!(product_table(ct(Kind::A, 2)).unwrap().passed());
        assert!(delta_round_trip(ct(Kind::A, 2)).unwrap().passed());
    }

    #[test]
    fn budgets_refuse() {
        let err = distinct_dw(ct(Kind::B, 4), Budget::default()).unwrap_err();
        assert!(err.to_string().contains("budget"));
        assert!(orbit_dims(ct(Kind::C, 4)).is_err());
        assert!(divisibility(ct(Kind::A, 3)).is_err());
    }

    #[test]
    fn divisibility_examples_at_c2() {
        let r = divisibility(ct(Kind::C, 2)).unwrap();
        let case = |w: &str| r.cases.iter().find(|c| c.input["w"] == json!(w)).unwrap().clone();
        // s2 = sign change at 2, support {2e2}
        let s2 = case("1,-2");
        assert_eq!(s2.got["divisible_by"].as_array().unwrap().len(), 3);
        assert!(s2.pass);
        let long = case("-1,2");
        assert_eq!(long.got, json!({"divides": false}));
    }

    #[test]
    fn tail_restriction() {
        let w = GroupElement::parse(ct(Kind::C, 3), "1,-3,-2").unwrap();
        let r = restrict_to_tail(&w).unwrap();
        assert_eq!(r.images(), &[-2, -1]);
        let p = Polynomial::var(2, 1);
        assert_eq!(lift(&p).unwrap(), Polynomial::var(3, 2));
    }

    #[test]
    fn reduced_word_listing() {
        let w0 = kkpoly::weyl::longest_element(ct(Kind::A, 2));
        let mut words = reduced_words(&w0, 10);
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }
}
