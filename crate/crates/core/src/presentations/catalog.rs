//! Enumeration of defining-relation instances over index windows.

use super::{cartan, params, twist, GenSym, LieExpr, ParamValue, RelationInstance};
use crate::scalars::Scalar;

const PERMS2: [[usize; 2]; 2] = [[0, 1], [1, 0]];
const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn g(s: GenSym) -> LieExpr {
    LieExpr::gen(s)
}

fn br(a: GenSym, b: GenSym) -> LieExpr {
    LieExpr::br(a, b)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

fn sign_str(sign: i64) -> ParamValue {
    ParamValue::from(if sign > 0 { "+" } else { "-" })
}

struct Out(Vec<RelationInstance>);

impl Out {
    fn push(&mut self, family: &str, params: super::Params, expr: LieExpr) {
        self.0.push(RelationInstance { family: family.to_string(), params, expr });
    }
}

/// Family tags of the loop-type catalog (identical for every `n`).
pub fn u_tags(_n: usize) -> &'static [&'static str] {
    &["u1", "u2", "u3", "u4", "u5", "u6", "u7.1", "u7.2"]
}

/// Family tags of the Yangian-type catalog (identical for every `n`).
pub fn y_tags(_n: usize) -> &'static [&'static str] {
    &["y1", "y2", "y3", "y4", "y5", "y6"]
}

/// Every instance of the loop-type relations with all integer indices in `[−K, K]`, symbolic `d`.
pub fn u_relations(n: usize, window: i64) -> Vec<RelationInstance> {
    u_relations_at(n, window, &Scalar::d())
}

/// As [`u_relations`] with `d` replaced by the given value.
pub fn u_relations_at(n: usize, window: i64, d: &Scalar) -> Vec<RelationInstance> {
    assert!(n >= 1, "n must be positive");
    let ks: Vec<i64> = (-window..=window).collect();
    let mut out = Out(Vec::new());
    let dp = |e: i64| d.pow_i(e).expect("d is nonzero");
    let c = GenSym::c();

    // u4 is uniform in n
    let u4 = |out: &mut Out| {
        for i in 0..n {
            for j in 0..n {
                for &k in &ks {
                    for &l in &ks {
                        let dij = delta(i as i64, j as i64);
                        let mut expr = br(GenSym::e(i, k), GenSym::f(j, l));
                        if dij == 1 {
                            expr = expr.minus(g(GenSym::h(i, k + l)));
                            let cc = k * delta(k, -l);
                            if cc != 0 {
                                expr = expr.minus(g(c).scale(int(cc)));
                            }
                        }
                        out.push("u4", params([("i", i.into()), ("j", j.into()), ("k", k.into()), ("l", l.into())]), expr);
                    }
                }
            }
        }
    };

    match n {
        1 => {
            for &k in &ks {
                for &l in &ks {
                    let coef = int(k * delta(k, -l)) * (int(2) - dp(k) - dp(-k));
                    let expr = br(GenSym::h(0, k), GenSym::h(0, l)).minus(g(c).scale(coef));
                    out.push("u1", params([("k", k.into()), ("l", l.into())]), expr);
                }
            }
            let q = int(1) + dp(1) + dp(-1);
            for (tag, mk) in [("u2", GenSym::e as fn(usize, i64) -> GenSym), ("u3", GenSym::f)] {
                for &k in &ks {
                    for &l in &ks {
                        let expr = LieExpr::sum(vec![
                            br(mk(0, k + 3), mk(0, l)),
                            br(mk(0, k + 2), mk(0, l + 1)).scale(-&q),
                            br(mk(0, k + 1), mk(0, l + 2)).scale(q.clone()),
                            br(mk(0, k), mk(0, l + 3)).scale(int(-1)),
                        ]);
                        out.push(tag, params([("k", k.into()), ("l", l.into())]), expr);
                    }
                }
            }
            u4(&mut out);
            for (tag, mk, sign) in [("u5", GenSym::e as fn(usize, i64) -> GenSym, 1), ("u6", GenSym::f, -1)] {
                for &k in &ks {
                    for &l in &ks {
                        let coef = (int(2) - dp(k) - dp(-k)).scale_int(sign);
                        let expr = br(GenSym::h(0, k), mk(0, l)).minus(g(mk(0, l + k)).scale(coef));
                        out.push(tag, params([("k", k.into()), ("l", l.into())]), expr);
                    }
                }
            }
            for (tag, mk) in [("u7.1", GenSym::e as fn(usize, i64) -> GenSym), ("u7.2", GenSym::f)] {
                for &k1 in &ks {
                    for &k2 in &ks {
                        for &k3 in &ks {
                            let kk = [k1, k2, k3];
                            let parts = PERMS3
                                .iter()
                                .map(|p| {
                                    LieExpr::bracket(
                                        g(mk(0, kk[p[0]])),
                                        br(mk(0, kk[p[1]] + 1), mk(0, kk[p[2]] - 1)),
                                    )
                                })
                                .collect();
                            out.push(
                                tag,
                                params([("k1", k1.into()), ("k2", k2.into()), ("k3", k3.into())]),
                                LieExpr::sum(parts),
                            );
                        }
                    }
                }
            }
        }
        2 => {
            for i in 0..2 {
                let i1 = (i + 1) % 2;
                for &k in &ks {
                    for &l in &ks {
                        let dl = delta(k, -l);
                        let expr = br(GenSym::h(i, k), GenSym::h(i, l)).minus(g(c).scale(int(2 * k * dl)));
                        out.push("u1", params([("part", 1i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                        let coef = (dp(k) + dp(-k)).scale_int(-k * dl);
                        let expr = br(GenSym::h(i, k), GenSym::h(i1, l)).minus(g(c).scale(coef));
                        out.push("u1", params([("part", 2i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                    }
                }
            }
            let q = dp(1) + dp(-1);
            for (tag, mk) in [("u2", GenSym::e as fn(usize, i64) -> GenSym), ("u3", GenSym::f)] {
                for i in 0..2 {
                    let i1 = (i + 1) % 2;
                    for &k in &ks {
                        for &l in &ks {
                            let expr = br(mk(i, k + 1), mk(i, l)).minus(br(mk(i, k), mk(i, l + 1)));
                            out.push(tag, params([("part", 1i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                            let expr = LieExpr::sum(vec![
                                br(mk(i, k + 2), mk(i1, l)),
                                br(mk(i, k + 1), mk(i1, l + 1)).scale(-&q),
                                br(mk(i, k), mk(i1, l + 2)),
                            ]);
                            out.push(tag, params([("part", 2i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                        }
                    }
                }
            }
            u4(&mut out);
            for (tag, mk, sign) in [("u5", GenSym::e as fn(usize, i64) -> GenSym, 1), ("u6", GenSym::f, -1)] {
                for i in 0..2 {
                    let i1 = (i + 1) % 2;
                    for &k in &ks {
                        for &l in &ks {
                            let expr = br(GenSym::h(i, k), mk(i, l)).minus(g(mk(i, l + k)).scale(int(2 * sign)));
                            out.push(tag, params([("part", 1i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                            let coef = (dp(k) + dp(-k)).scale_int(-sign);
                            let expr = br(GenSym::h(i, k), mk(i1, l)).minus(g(mk(i1, l + k)).scale(coef));
                            out.push(tag, params([("part", 2i64.into()), ("i", i.into()), ("k", k.into()), ("l", l.into())]), expr);
                        }
                    }
                }
            }
            for (tag, mk) in [("u7.1", GenSym::e as fn(usize, i64) -> GenSym), ("u7.2", GenSym::f)] {
                for i in 0..2 {
                    let i1 = (i + 1) % 2;
                    for &k1 in &ks {
                        for &k2 in &ks {
                            for &k3 in &ks {
                                for &l in &ks {
                                    let kk = [k1, k2, k3];
                                    let parts = PERMS3
                                        .iter()
                                        .map(|p| {
                                            LieExpr::bracket(
                                                g(mk(i, kk[p[0]])),
                                                LieExpr::bracket(g(mk(i, kk[p[1]])), br(mk(i, kk[p[2]]), mk(i1, l))),
                                            )
                                        })
                                        .collect();
                                    out.push(
                                        tag,
                                        params([
                                            ("i", i.into()),
                                            ("k1", k1.into()),
                                            ("k2", k2.into()),
                                            ("k3", k3.into()),
                                            ("l", l.into()),
                                        ]),
                                        LieExpr::sum(parts),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in 0..n {
                    let a = cartan(n, i, j);
                    let m = twist(n, i, j);
                    for &k in &ks {
                        for &l in &ks {
                            let coef = dp(-k * m).scale_int(k * a * delta(k, -l));
                            let expr = br(GenSym::h(i, k), GenSym::h(j, l)).minus(g(c).scale(coef));
                            out.push("u1", params([("i", i.into()), ("j", j.into()), ("k", k.into()), ("l", l.into())]), expr);
                        }
                    }
                }
            }
            for (tag, mk) in [("u2", GenSym::e as fn(usize, i64) -> GenSym), ("u3", GenSym::f)] {
                for i in 0..n {
                    for j in 0..n {
                        let m = twist(n, i, j);
                        for &k in &ks {
                            for &l in &ks {
                                let expr = br(mk(i, k + 1), mk(j, l)).minus(br(mk(i, k), mk(j, l + 1)).scale(dp(-m)));
                                out.push(tag, params([("i", i.into()), ("j", j.into()), ("k", k.into()), ("l", l.into())]), expr);
                            }
                        }
                    }
                }
            }
            u4(&mut out);
            for (tag, mk, sign) in [("u5", GenSym::e as fn(usize, i64) -> GenSym, 1), ("u6", GenSym::f, -1)] {
                for i in 0..n {
                    for j in 0..n {
                        let a = cartan(n, i, j);
                        let m = twist(n, i, j);
                        for &k in &ks {
                            for &l in &ks {
                                let coef = dp(-k * m).scale_int(sign * a);
                                let expr = br(GenSym::h(i, k), mk(j, l)).minus(g(mk(j, l + k)).scale(coef));
                                out.push(tag, params([("i", i.into()), ("j", j.into()), ("k", k.into()), ("l", l.into())]), expr);
                            }
                        }
                    }
                }
            }
            for (tag, mk) in [("u7.1", GenSym::e as fn(usize, i64) -> GenSym), ("u7.2", GenSym::f)] {
                for i in 0..n {
                    for nb in [1i64, -1] {
                        let j = (i as i64 + nb).rem_euclid(n as i64) as usize;
                        for &k1 in &ks {
                            for &k2 in &ks {
                                for &l in &ks {
                                    let kk = [k1, k2];
                                    let parts = PERMS2
                                        .iter()
                                        .map(|p| LieExpr::bracket(g(mk(i, kk[p[0]])), br(mk(i, kk[p[1]]), mk(j, l))))
                                        .collect();
                                    out.push(
                                        tag,
                                        params([
                                            ("part", 1i64.into()),
                                            ("i", i.into()),
                                            ("neighbor", nb.into()),
                                            ("k1", k1.into()),
                                            ("k2", k2.into()),
                                            ("l", l.into()),
                                        ]),
                                        LieExpr::sum(parts),
                                    );
                                }
                            }
                        }
                    }
                    for j in 0..n {
                        if j == i || j == (i + 1) % n || j == (i + n - 1) % n {
                            continue;
                        }
                        for &k in &ks {
                            for &l in &ks {
                                out.push(
                                    tag,
                                    params([
                                        ("part", 2i64.into()),
                                        ("i", i.into()),
                                        ("j", j.into()),
                                        ("k", k.into()),
                                        ("l", l.into()),
                                    ]),
                                    br(mk(i, k), mk(j, l)),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out.0
}

/// Every instance of the Yangian-type relations with indices in `[0, R]`, symbolic `β`.
pub fn y_relations(n: usize, window: u32) -> Vec<RelationInstance> {
    y_relations_at(n, window, &Scalar::beta())
}

/// As [`y_relations`] with `β` replaced by the given value.
pub fn y_relations_at(n: usize, window: u32, beta: &Scalar) -> Vec<RelationInstance> {
    assert!(n >= 1, "n must be positive");
    let rs: Vec<u32> = (0..=window).collect();
    let signs = [1i64, -1];
    let beta2 = beta * beta;
    let mut out = Out(Vec::new());

    for i in 0..n {
        for j in 0..n {
            for &r in &rs {
                for &s in &rs {
                    let p = || params([("i", i.into()), ("j", j.into()), ("r", r.into()), ("s", s.into())]);
                    out.push("y1", p(), br(GenSym::xi(i, r), GenSym::xi(j, s)));
                    let mut expr = br(GenSym::xp(i, r), GenSym::xm(j, s));
                    if i == j {
                        expr = expr.minus(g(GenSym::xi(i, r + s)));
                    }
                    out.push("y2", p(), expr);
                }
            }
        }
    }

    match n {
        1 => {
            for &sg in &signs {
                let x = |r: u32| GenSym::x(sg, 0, r);
                for &r in &rs {
                    for &s in &rs {
                        let p = || params([("sign", sign_str(sg)), ("r", r.into()), ("s", s.into())]);
                        let expr = LieExpr::sum(vec![
                            br(x(r + 3), x(s)),
                            br(x(r + 2), x(s + 1)).scale(int(-3)),
                            br(x(r + 1), x(s + 2)).scale(int(3)),
                            br(x(r), x(s + 3)).scale(int(-1)),
                            br(x(r + 1), x(s)).scale(-&beta2),
                            br(x(r), x(s + 1)).scale(beta2.clone()),
                        ]);
                        out.push("y3", p(), expr);
                        let xi = |r: u32| GenSym::xi(0, r);
                        let expr = LieExpr::sum(vec![
                            br(xi(r + 3), x(s)),
                            br(xi(r + 2), x(s + 1)).scale(int(-3)),
                            br(xi(r + 1), x(s + 2)).scale(int(3)),
                            br(xi(r), x(s + 3)).scale(int(-1)),
                            br(xi(r + 1), x(s)).scale(-&beta2),
                            br(xi(r), x(s + 1)).scale(beta2.clone()),
                        ]);
                        out.push("y4", p(), expr);
                    }
                }
                for &s in &rs {
                    let p = |part: i64| params([("part", part.into()), ("sign", sign_str(sg)), ("s", s.into())]);
                    out.push("y5", p(1), br(GenSym::xi(0, 0), x(s)));
                    out.push("y5", p(2), br(GenSym::xi(0, 1), x(s)));
                    let expr = br(GenSym::xi(0, 2), x(s)).plus(g(x(s)).scale(beta2.scale_int(2 * sg)));
                    out.push("y5", p(3), expr);
                }
                for &r1 in &rs {
                    for &r2 in &rs {
                        for &r3 in &rs {
                            let rr = [r1, r2, r3];
                            let parts = PERMS3
                                .iter()
                                .map(|p| LieExpr::bracket(g(x(rr[p[0]])), br(x(rr[p[1]]), x(rr[p[2]] + 1))))
                                .collect();
                            out.push(
                                "y6",
                                params([("sign", sign_str(sg)), ("r1", r1.into()), ("r2", r2.into()), ("r3", r3.into())]),
                                LieExpr::sum(parts),
                            );
                        }
                    }
                }
            }
        }
        2 => {
            for &sg in &signs {
                let x = |i: usize, r: u32| GenSym::x(sg, i, r);
                for i in 0..2 {
                    let i1 = (i + 1) % 2;
                    for &r in &rs {
                        for &s in &rs {
                            let p = |part: i64| {
                                params([
                                    ("part", part.into()),
                                    ("sign", sign_str(sg)),
                                    ("i", i.into()),
                                    ("r", r.into()),
                                    ("s", s.into()),
                                ])
                            };
                            let expr = br(x(i, r + 1), x(i, s)).minus(br(x(i, r), x(i, s + 1)));
                            out.push("y3", p(1), expr);
                            let expr = LieExpr::sum(vec![
                                br(x(i, r + 2), x(i1, s)),
                                br(x(i, r + 1), x(i1, s + 1)).scale(int(-2)),
                                br(x(i, r), x(i1, s + 2)),
                                br(x(i, r), x(i1, s)).scale(-&beta2),
                            ]);
                            out.push("y3", p(2), expr);
                            let xi = |r: u32| GenSym::xi(i, r);
                            let expr = br(xi(r + 1), x(i, s)).minus(br(xi(r), x(i, s + 1)));
                            out.push("y4", p(1), expr);
                            let expr = LieExpr::sum(vec![
                                br(xi(r + 2), x(i1, s)),
                                br(xi(r + 1), x(i1, s + 1)).scale(int(-2)),
                                br(xi(r), x(i1, s + 2)),
                                br(xi(r), x(i1, s)).scale(-&beta2),
                            ]);
                            out.push("y4", p(2), expr);
                        }
                    }
                    for &s in &rs {
                        for j in 0..2 {
                            let expr = br(GenSym::xi(i, 0), x(j, s)).minus(g(x(j, s)).scale(int(sg * cartan(2, i, j))));
                            out.push(
                                "y5",
                                params([
                                    ("part", 1i64.into()),
                                    ("sign", sign_str(sg)),
                                    ("i", i.into()),
                                    ("j", j.into()),
                                    ("s", s.into()),
                                ]),
                                expr,
                            );
                        }
                        let expr = br(GenSym::xi(i, 1), x(i1, s)).plus(g(x(i1, s + 1)).scale(int(2 * sg)));
                        out.push(
                            "y5",
                            params([("part", 2i64.into()), ("sign", sign_str(sg)), ("i", i.into()), ("s", s.into())]),
                            expr,
                        );
                    }
                    for &r1 in &rs {
                        for &r2 in &rs {
                            for &r3 in &rs {
                                for &s in &rs {
                                    let rr = [r1, r2, r3];
                                    let parts = PERMS3
                                        .iter()
                                        .map(|p| {
                                            LieExpr::bracket(
                                                g(x(i, rr[p[0]])),
                                                LieExpr::bracket(g(x(i, rr[p[1]])), br(x(i, rr[p[2]]), x(i1, s))),
                                            )
                                        })
                                        .collect();
                                    out.push(
                                        "y6",
                                        params([
                                            ("sign", sign_str(sg)),
                                            ("i", i.into()),
                                            ("r1", r1.into()),
                                            ("r2", r2.into()),
                                            ("r3", r3.into()),
                                            ("s", s.into()),
                                        ]),
                                        LieExpr::sum(parts),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => {
            for &sg in &signs {
                let x = |i: usize, r: u32| GenSym::x(sg, i, r);
                for i in 0..n {
                    for j in 0..n {
                        let m = twist(n, i, j);
                        let a = cartan(n, i, j);
                        let mb = beta.scale_int(m);
                        for &r in &rs {
                            for &s in &rs {
                                let p = || {
                                    params([
                                        ("sign", sign_str(sg)),
                                        ("i", i.into()),
                                        ("j", j.into()),
                                        ("r", r.into()),
                                        ("s", s.into()),
                                    ])
                                };
                                let expr = LieExpr::sum(vec![
                                    br(x(i, r + 1), x(j, s)),
                                    br(x(i, r), x(j, s + 1)).scale(int(-1)),
                                    br(x(i, r), x(j, s)).scale(mb.clone()),
                                ]);
                                out.push("y3", p(), expr);
                                let expr = LieExpr::sum(vec![
                                    br(GenSym::xi(i, r + 1), x(j, s)),
                                    br(GenSym::xi(i, r), x(j, s + 1)).scale(int(-1)),
                                    br(GenSym::xi(i, r), x(j, s)).scale(mb.clone()),
                                ]);
                                out.push("y4", p(), expr);
                            }
                        }
                        for &s in &rs {
                            let expr = br(GenSym::xi(i, 0), x(j, s)).minus(g(x(j, s)).scale(int(sg * a)));
                            out.push(
                                "y5",
                                params([("sign", sign_str(sg)), ("i", i.into()), ("j", j.into()), ("s", s.into())]),
                                expr,
                            );
                        }
                    }
                    for nb in [1i64, -1] {
                        let j = (i as i64 + nb).rem_euclid(n as i64) as usize;
                        for &r1 in &rs {
                            for &r2 in &rs {
                                for &s in &rs {
                                    let rr = [r1, r2];
                                    let parts = PERMS2
                                        .iter()
                                        .map(|p| LieExpr::bracket(g(x(i, rr[p[0]])), br(x(i, rr[p[1]]), x(j, s))))
                                        .collect();
                                    out.push(
                                        "y6",
                                        params([
                                            ("part", 1i64.into()),
                                            ("sign", sign_str(sg)),
                                            ("i", i.into()),
                                            ("neighbor", nb.into()),
                                            ("r1", r1.into()),
                                            ("r2", r2.into()),
                                            ("s", s.into()),
                                        ]),
                                        LieExpr::sum(parts),
                                    );
                                }
                            }
                        }
                    }
                    for j in 0..n {
                        if j == i || j == (i + 1) % n || j == (i + n - 1) % n {
                            continue;
                        }
                        for &r in &rs {
                            for &s in &rs {
                                out.push(
                                    "y6",
                                    params([
                                        ("part", 2i64.into()),
                                        ("sign", sign_str(sg)),
                                        ("i", i.into()),
                                        ("j", j.into()),
                                        ("r", r.into()),
                                        ("s", s.into()),
                                    ]),
                                    br(x(i, r), x(j, s)),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn find<'a>(rels: &'a [RelationInstance], family: &str, p: &super::super::Params) -> &'a RelationInstance {
        rels.iter().find(|r| r.family == family && &r.params == p).expect("instance present")
    }

    #[test]
    fn u4_count_and_shape() {
        let rels = u_relations(2, 1);
        assert_eq!(rels.iter().filter(|r| r.family == "u4").count(), 36);
        let r = find(&rels, "u4", &params([("i", 0usize.into()), ("j", 0usize.into()), ("k", 1i64.into()), ("l", (-1i64).into())]));
        let expected = br(GenSym::e(0, 1), GenSym::f(0, -1))
            .minus(g(GenSym::h(0, 0)))
            .minus(g(GenSym::c()).scale(int(1)));
        assert_eq!(r.expr.expand(), expected.expand());
    }

    #[test]
    fn u5_for_one() {
        let rels = u_relations(1, 2);
        let r = find(&rels, "u5", &params([("k", 2i64.into()), ("l", 0i64.into())]));
        let coef = int(2) - Scalar::d_pow(2) - Scalar::d_pow(-2);
        let expected = br(GenSym::h(0, 2), GenSym::e(0, 0)).minus(g(GenSym::e(0, 2)).scale(coef));
        assert_eq!(r.expr.expand(), expected.expand());
    }

    #[test]
    fn serre_for_three_has_two_summands() {
        let rels = u_relations(3, 0);
        let r = find(
            &rels,
            "u7.1",
            &params([
                ("part", 1i64.into()),
                ("i", 0usize.into()),
                ("neighbor", (-1i64).into()),
                ("k1", 0i64.into()),
                ("k2", 0i64.into()),
                ("l", 0i64.into()),
            ]),
        );
        match &r.expr {
            LieExpr::Sum(v) => assert_eq!(v.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(r.expr.generators().contains(&GenSym::e(2, 0)));
        // no distant pairs exist for n = 3
        assert!(!rels.iter().any(|r| r.family == "u7.1" && r.params.get("part") == Some(&ParamValue::Int(2))));
    }

    #[test]
    fn y_examples() {
        let rels = y_relations(1, 3);
        let r = find(&rels, "y5", &params([("part", 3i64.into()), ("sign", "+".into()), ("s", 3u32.into())]));
        let b2 = Scalar::beta() * Scalar::beta();
        let expected = br(GenSym::xi(0, 2), GenSym::xp(0, 3)).plus(g(GenSym::xp(0, 3)).scale(b2.scale_int(2)));
        assert_eq!(r.expr.expand(), expected.expand());

        let rels = y_relations(2, 1);
        let r = find(
            &rels,
            "y5",
            &params([("part", 2i64.into()), ("sign", "-".into()), ("i", 0usize.into()), ("s", 1u32.into())]),
        );
        let expected = br(GenSym::xi(0, 1), GenSym::xm(1, 1)).minus(g(GenSym::xm(1, 2)).scale(int(2)));
        assert_eq!(r.expr.expand(), expected.expand());

        let rels = y_relations(3, 0);
        let r = find(&rels, "y2", &params([("i", 1usize.into()), ("j", 2usize.into()), ("r", 0u32.into()), ("s", 0u32.into())]));
        assert_eq!(r.expr.expand(), br(GenSym::xp(1, 0), GenSym::xm(2, 0)).expand());
    }

    #[test]
    fn catalogs_are_complete_and_unique() {
        for n in 1..=4 {
            let rels = u_relations(n, 1);
            let tags: BTreeSet<&str> = rels.iter().map(|r| r.family.as_str()).collect();
            assert_eq!(tags, u_tags(n).iter().copied().collect());
            let keys: BTreeSet<_> = rels.iter().map(|r| (r.family.clone(), r.params.clone())).collect();
            assert_eq!(keys.len(), rels.len());

            let rels = y_relations(n, 1);
            let tags: BTreeSet<&str> = rels.iter().map(|r| r.family.as_str()).collect();
            assert_eq!(tags, y_tags(n).iter().copied().collect());
            let keys: BTreeSet<_> = rels.iter().map(|r| (r.family.clone(), r.params.clone())).collect();
            assert_eq!(keys.len(), rels.len());
        }
    }
}

#[cfg(test)]
mod rescaling {
    use super::*;
    use crate::scalars::{Param, ParamAssignment};
    use num_rational::BigRational;

    // Substituting x_r -> beta^r x_r, xi_r -> beta^r xi_r into a beta-instance
    // gives a multiple of the beta = 1 instance.
    #[test]
    fn beta_instances_are_rescaled_unit_instances() {
        let one = ParamAssignment::new().with(Param::Beta, BigRational::from_integer(1.into()));
        for n in 1..=3 {
            let general = y_relations(n, 2);
            for rel in &general {
                let substituted: Vec<(super::super::Word, Scalar)> = rel
                    .expr
                    .expand()
                    .into_iter()
                    .map(|(w, c)| {
                        let weight: i64 = w.leaves().iter().map(|g| g.idx).sum();
                        (w, c * Scalar::beta().pow_i(weight).unwrap())
                    })
                    .collect();
                let unit: std::collections::BTreeMap<_, _> = rel
                    .expr
                    .expand()
                    .into_iter()
                    .map(|(w, c)| (w, c.specialize(&one).unwrap()))
                    .collect();
                let mut ratio: Option<Scalar> = None;
                for (w, c) in &substituted {
                    let u = unit.get(w).cloned().unwrap_or_else(Scalar::zero);
                    if u.is_zero() {
                        assert!(c.is_zero(), "{} {:?}", rel.family, rel.params);
                        continue;
                    }
                    let q = c.checked_div(&u).unwrap();
                    match &ratio {
                        None => ratio = Some(q),
                        Some(r) => assert_eq!(r, &q, "{} {:?}", rel.family, rel.params),
                    }
                }
            }
        }
    }
}
