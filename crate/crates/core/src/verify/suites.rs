//! The seven suites. Each returns its outcomes in a fixed order for a given context.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::checks::*;
use super::{run_all, Ctx, Mode, Outcome, Suite, SuiteConfig};
use crate::derops::{dim_diff, DerOp};
use crate::diffops::{graded_basis, DiffDegree, DiffOp};
use crate::error::Result;
use crate::lattice::{box_vectors, delta, difference_table, differential_table};
use crate::lie::{LieAlgebra, LieElem};
use crate::morphisms::{
    eval_expr, heisenberg_closed_form, miki_bar_at, miki_bar_inv_at, shift_closed_form, Morphism,
};
use crate::presentations::{params, u_relations_at, v_comm, w_comm, y_relations_at, GenSym, LieExpr};
use crate::scalars::{rank_det, Scalar, ScalarMatrix};

const STRUCTURE_SEED: u64 = 0x7261_6e64_6f6d;

pub(super) fn run(suite: Suite, cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    match suite {
        Suite::Theorem1 => theorem1(cfg, ctx),
        Suite::Theorem2 => theorem2(cfg, ctx),
        Suite::Structure => structure(cfg, ctx),
        Suite::Miki => miki(cfg, ctx),
        Suite::Subalgebras => subalgebras(cfg, ctx),
        Suite::Commutative => commutative(cfg, ctx),
        Suite::Dims => dims(cfg, ctx),
    }
}

fn theorem1(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window);
    let th = ctx.theta();
    let rels = u_relations_at(n, w, &ctx.d);
    let mut out = run_all(&rels, |r| Outcome::new(&r.family, r.params.clone(), residual(eval_expr(&r.expr, &th))));

    if n >= 2 {
        let items: Vec<(usize, i64, i64)> =
            (0..n).flat_map(|j| (-w..=w).flat_map(move |a| (-w..=w).map(move |b| (j, a, b)))).collect();
        out.extend(run_all(&items, |&(j, a, b)| {
            let expr = LieExpr::br(GenSym::e(j, a), GenSym::e(j, b));
            Outcome::new("e_commute", params([("j", j.into()), ("a", a.into()), ("b", b.into())]), residual(eval_expr(&expr, &th)))
        }));
    }

    let amax = w.max(1);
    let items: Vec<(usize, i64)> =
        (1..=2usize).flat_map(|l| (-2..=2i64).map(move |k| (l, k))).filter(|&(l, _)| l * n >= 2).collect();
    out.extend(run_all(&items, |&(l, k)| {
        let result = (|| {
            let deg = DiffDegree::new(delta(n, l as i64), k);
            let basis = graded_basis(n, &deg);
            let mut rows = Vec::new();
            for i in 0..n {
                for a in -amax..=amax {
                    let img = eval_expr(&v_comm(n, i, l, a, k - a)?, &th)?;
                    match coords(&img, &basis) {
                        Some(c) => rows.push(c),
                        None => return Ok(Some(format!("image outside the graded piece: {img}"))),
                    }
                }
            }
            let (rank, _) = rank_det(&ScalarMatrix::from_rows(rows)?);
            verdict(rank == n && basis.len() == n, || format!("rank {rank} in a piece of dimension {}", basis.len()))
        })();
        Outcome::new("spanning", params([("l", l.into()), ("k", k.into())]), result)
    }));

    let items: Vec<usize> = (1..=2usize).filter(|l| l * n >= 2).collect();
    out.extend(run_all(&items, |&l| {
        let result = (|| {
            let parts = (0..n).map(|i| v_comm(n, i, l, 0, 0)).collect::<Result<Vec<_>>>()?;
            residual(eval_expr(&LieExpr::sum(parts), &th))
        })();
        Outcome::new("v_sum", params([("l", l.into())]), result)
    }));
    Ok(out)
}

fn theorem2(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let vt = ctx.vartheta();
    let alg = vt.algebra();
    let rels = y_relations_at(n, cfg.window, &ctx.beta);
    let mut out = run_all(&rels, |r| Outcome::new(&r.family, r.params.clone(), residual(eval_expr(&r.expr, &vt))));
    if n != 2 {
        return Ok(out);
    }
    let beta2 = &ctx.beta * &ctx.beta;
    let xi_sum = |r: u32| LieExpr::sum((0..2).map(|i| LieExpr::gen(GenSym::xi(i, r))).collect());
    let h3 = xi_sum(3).scale(beta2.scale_int(-6).inv()?);
    let h4 = LieExpr::sum(vec![
        xi_sum(4).scale(beta2.scale_int(-12).inv()?),
        xi_sum(2).scale(Scalar::from_ratio(1, 12)),
    ]);
    let h3 = eval_expr(&h3, &vt)?;
    let h4 = eval_expr(&h4, &vt)?;
    let mut items = Vec::new();
    for (which, step) in [(3i64, 1u32), (4, 2)] {
        for sign in [1i64, -1] {
            for i in 0..2 {
                for r in 0..=cfg.window + 1 {
                    items.push((which, step, sign, i, r));
                }
            }
        }
    }
    out.extend(run_all(&items, |&(which, step, sign, i, r)| {
        let h = if which == 3 { &h3 } else { &h4 };
        let lhs = vt.image(&GenSym::x(sign, i, r)).and_then(|x| alg.bracket(h, &x));
        let rhs = vt.image(&GenSym::x(sign, i, r + step)).map(|x| x.scale(&Scalar::from_int(sign)));
        Outcome::new(
            "ladder",
            params([("h", which.into()), ("sign", (if sign > 0 { "+" } else { "-" }).into()), ("i", i.into()), ("r", r.into())]),
            mismatch(lhs, rhs),
        )
    }));

    let ls: Vec<usize> = (1..=3).collect();
    out.extend(run_all(&ls, |&l| {
        let result = (|| {
            let parts = (0..2).map(|i| w_comm(i, l, 0, 0)).collect::<Result<Vec<_>>>()?;
            residual(eval_expr(&LieExpr::sum(parts), &vt))
        })();
        Outcome::new("w_sum", params([("l", l.into())]), result)
    }));

    let mut items = Vec::new();
    for l in 1..=3usize {
        for nn in 1..=3u32 {
            items.push((l, nn));
        }
    }
    let lead_params = |l: usize, nn: u32, part: i64| params([("l", l.into()), ("N", nn.into()), ("part", part.into())]);
    out.extend(run_all(&items, |&(l, nn)| {
        // top ∂-order part of ϑ(w^{(1,l)}_{0,N}) is 2^{N−1}(E₁₁−E₂₂)⊗∂^N x^l
        let result = (|| {
            let x = eval_expr(&w_comm(1, l, 0, nn)?, &vt)?;
            let c = Scalar::from_int(1 << (nn - 1));
            let expected = &DerOp::monomial(2, 1, 1, nn, l as i64, c.clone()) - &DerOp::monomial(2, 2, 2, nn, l as i64, c);
            Ok(leading_mismatch(&x, nn, &expected))
        })();
        Outcome::new("lead", lead_params(l, nn, 1), result)
    }));
    out.extend(run_all(&items, |&(l, nn)| {
        // top part of ϑ(w^{(0,l)}_{0,N} + w^{(1,l)}_{0,N}) is −2^{l−1}Nβ(E₁₁+E₂₂)⊗∂^{N−1} x^l
        let result = (|| {
            let x = eval_expr(&LieExpr::sum(vec![w_comm(0, l, 0, nn)?, w_comm(1, l, 0, nn)?]), &vt)?;
            let c = ctx.beta.scale_int(-(1i64 << (l - 1)) * i64::from(nn));
            let expected = DerOp::monomial(2, 1, 1, nn - 1, l as i64, c.clone()) + DerOp::monomial(2, 2, 2, nn - 1, l as i64, c);
            Ok(leading_mismatch(&x, nn - 1, &expected))
        })();
        Outcome::new("lead", lead_params(l, nn, 2), result)
    }));
    out.extend(run_all(&items, |&(l, nn)| {
        let result = (|| {
            let imgs = (0..2).map(|i| eval_expr(&w_comm(i, l, 0, nn)?, &vt)).collect::<Result<Vec<_>>>()?;
            let mut rows = Vec::new();
            for x in &imgs {
                let f = x.filt_degree()?;
                if f.k > nn {
                    return Ok(Some(format!("filtration level {} exceeds {nn}: {x}", f.k)));
                }
                let mut row = Vec::new();
                for i in 1..=2 {
                    for j in 1..=2 {
                        row.push(x.coeff(i, j, nn, l as i64));
                    }
                }
                row.push(x.coeff(1, 1, nn - 1, l as i64) + x.coeff(2, 2, nn - 1, l as i64));
                rows.push(row);
            }
            let (rank, _) = rank_det(&ScalarMatrix::from_rows(rows)?);
            verdict(rank == 2, || format!("rank {rank} in the filtration quotient"))
        })();
        Outcome::new("independence", params([("l", l.into()), ("N", nn.into())]), result)
    }));
    Ok(out)
}

/// Compares the `∂^top` part of `x` with `expected`, requiring no higher `∂`-powers.
fn leading_mismatch(x: &DerOp, top: u32, expected: &DerOp) -> Option<String> {
    if x.max_order() > top {
        return Some(format!("order {} exceeds {top}: {x}", x.max_order()));
    }
    let mut lead = DerOp::zero(x.n());
    for (k, c) in x.terms() {
        if k.r == top {
            lead = lead + DerOp::monomial(x.n(), k.i, k.j, k.r, k.l, c.clone());
        }
    }
    let diff = &lead - expected;
    if diff.is_zero() {
        None
    } else {
        Some(format!("leading part {lead}, expected {expected}"))
    }
}

fn structure(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window.max(1));
    let seed = match cfg.mode {
        Mode::Exact => STRUCTURE_SEED,
        Mode::Random => cfg.seed ^ STRUCTURE_SEED,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let dalg = ctx.diff_alg();
    let walg = ctx.der_alg();
    let idx = |t: usize| params([("index", t.into())]);

    let triples: Vec<[DiffOp; 3]> = (0..200).map(|_| random_diff_triple(&mut rng, n, w)).collect();
    let wtriples: Vec<[DerOp; 3]> = (0..200).map(|_| random_der_triple(&mut rng, n, w)).collect();
    let pairs: Vec<(DiffOp, DiffOp)> =
        (0..200).map(|_| (random_diff_monomial(&mut rng, n, w), random_diff_monomial(&mut rng, n, w))).collect();
    let wpairs: Vec<(DerOp, DerOp)> =
        (0..200).map(|_| (random_der_monomial(&mut rng, n, w), random_der_monomial(&mut rng, n, w))).collect();
    let opairs: Vec<(DiffOp, DiffOp)> =
        (0..100).map(|_| (random_diff_element(&mut rng, n, w), random_diff_element(&mut rng, n, w))).collect();
    let wopairs: Vec<(DerOp, DerOp)> =
        (0..100).map(|_| (random_der_element(&mut rng, n, w), random_der_element(&mut rng, n, w))).collect();
    let tpairs: Vec<(DiffOp, DiffOp)> =
        (0..100).map(|_| (random_traceless(&mut rng, n, w), random_traceless(&mut rng, n, w))).collect();

    fn jacobi<A: LieAlgebra>(alg: &A, t: &[A::Elem; 3]) -> Result<Option<String>> {
        let [x, y, z] = t;
        let a = alg.bracket(x, &alg.bracket(y, z)?)?;
        let b = alg.bracket(y, &alg.bracket(z, x)?)?;
        let c = alg.bracket(z, &alg.bracket(x, y)?)?;
        residual(Ok(a.plus(&b).plus(&c)))
    }
    fn antisym<A: LieAlgebra>(alg: &A, p: &(A::Elem, A::Elem)) -> Result<Option<String>> {
        residual(Ok(alg.bracket(&p.0, &p.1)?.plus(&alg.bracket(&p.1, &p.0)?)))
    }

    let numbered = |v: usize| (0..v).collect::<Vec<usize>>();
    let mut out = run_all(&numbered(triples.len()), |&t| Outcome::new("jacobi.diff", idx(t), jacobi(&dalg, &triples[t])));
    out.extend(run_all(&numbered(wtriples.len()), |&t| Outcome::new("jacobi.der", idx(t), jacobi(&walg, &wtriples[t]))));
    out.extend(run_all(&numbered(pairs.len()), |&t| Outcome::new("antisymmetry.diff", idx(t), antisym(&dalg, &pairs[t]))));
    out.extend(run_all(&numbered(wpairs.len()), |&t| Outcome::new("antisymmetry.der", idx(t), antisym(&walg, &wpairs[t]))));

    out.extend(run_all(&numbered(opairs.len()), |&t| {
        let (x, y) = &opairs[t];
        let result = (|| {
            let xy = dalg.product(x, y)?;
            for col in 1..=n {
                for m in -8..=8 {
                    if dalg.oracle_apply(&xy, m, col) != dalg.apply(x, &dalg.oracle_apply(y, m, col)) {
                        return Ok(Some(format!("action mismatch on e{col} z^{m} for ({x})*({y})")));
                    }
                }
            }
            Ok(None)
        })();
        Outcome::new("oracle.diff", idx(t), result)
    }));
    out.extend(run_all(&numbered(wopairs.len()), |&t| {
        let (x, y) = &wopairs[t];
        let result = (|| {
            let xy = walg.product(x, y)?;
            for col in 1..=n {
                for m in -8..=8 {
                    if walg.oracle_apply(&xy, m, col) != walg.apply(x, &walg.oracle_apply(y, m, col)) {
                        return Ok(Some(format!("action mismatch on e{col} z^{m} for ({x})*({y})")));
                    }
                }
            }
            Ok(None)
        })();
        Outcome::new("oracle.der", idx(t), result)
    }));

    out.extend(run_all(&numbered(pairs.len()), |&t| {
        let (x, y) = &pairs[t];
        let result = (|| {
            let xy = dalg.product(x, y)?;
            if xy.is_zero() {
                return Ok(None);
            }
            let expected = x.degree()?.add(&y.degree()?);
            let got = xy.degree()?;
            verdict(got == expected, || format!("degree {got:?}, expected {expected:?}"))
        })();
        Outcome::new("degree.diff", idx(t), result)
    }));
    out.extend(run_all(&numbered(wpairs.len()), |&t| {
        let (x, y) = &wpairs[t];
        let result = (|| {
            let xy = walg.product(x, y)?;
            if xy.is_zero() {
                return Ok(None);
            }
            let expected: Vec<i64> = x.alpha()?.iter().zip(y.alpha()?).map(|(a, b)| a + b).collect();
            let got = xy.alpha()?;
            let order_ok = xy.max_order() <= x.max_order() + y.max_order();
            verdict(got == expected && order_ok, || format!("degree {got:?}, expected {expected:?}"))
        })();
        Outcome::new("degree.der", idx(t), result)
    }));
    out.extend(run_all(&numbered(tpairs.len()), |&t| {
        let (x, y) = &tpairs[t];
        let result = dalg.bracket(x, y).map(|b| if b.is_traceless() { None } else { Some(b.to_string()) });
        Outcome::new("traceless", idx(t), result)
    }));
    Ok(out)
}

fn miki(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window);
    let alg = ctx.diff_alg();
    let d = &ctx.d;
    let mb = |x: &DiffOp| miki_bar_at(x, d);
    let mut monos = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in -w..=w {
                for l in -w..=w {
                    monos.push((i, j, k, l));
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for a in 0..monos.len() {
        for b in a + 1..monos.len() {
            pairs.push((a, b));
        }
    }
    let mut out = run_all(&pairs, |&(a, b)| {
        let (i1, j1, k1, l1) = monos[a];
        let (i2, j2, k2, l2) = monos[b];
        let x = DiffOp::unit(n, i1, j1, k1, l1);
        let y = DiffOp::unit(n, i2, j2, k2, l2);
        let lhs = alg.bracket(&x, &y).map(|b| mb(&b));
        let rhs = alg.bracket(&mb(&x), &mb(&y));
        Outcome::new(
            "miki.bracket",
            params([
                ("i1", i1.into()),
                ("j1", j1.into()),
                ("k1", k1.into()),
                ("l1", l1.into()),
                ("i2", i2.into()),
                ("j2", j2.into()),
                ("k2", k2.into()),
                ("l2", l2.into()),
            ]),
            mismatch(lhs, rhs),
        )
    });
    out.extend(run_all(&monos, |&(i, j, k, l)| {
        let x = DiffOp::unit(n, i, j, k, l);
        let ok = miki_bar_inv_at(&mb(&x), d) == x && mb(&miki_bar_inv_at(&x, d)) == x;
        Outcome::new(
            "miki.inverse",
            params([("i", i.into()), ("j", j.into()), ("k", k.into()), ("l", l.into())]),
            verdict(ok, || format!("inverse fails on {x}")),
        )
    }));

    let nn = n as i64;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut gens: Vec<(String, usize, DiffOp, DiffOp)> = vec![
        ("e0".into(), 0, DiffOp::unit(n, n, 1, 0, 1), DiffOp::monomial(n, n, 1, 1, 0, d.pow_i(nn)?.scale_int(sign))),
        ("f0".into(), 0, DiffOp::unit(n, 1, n, 0, -1), DiffOp::monomial(n, 1, n, -1, 0, d.pow_i(-nn)?.scale_int(sign))),
    ];
    for i in 1..n {
        let hd = |k: i64, l: i64| DiffOp::unit(n, i, i, k, l) - DiffOp::unit(n, i + 1, i + 1, k, l);
        gens.push(("e".into(), i, DiffOp::unit(n, i, i + 1, 0, 0), DiffOp::unit(n, i, i + 1, 0, 0)));
        gens.push(("f".into(), i, DiffOp::unit(n, i + 1, i, 0, 0), DiffOp::unit(n, i + 1, i, 0, 0)));
        gens.push(("h+".into(), i, hd(1, 0), hd(0, -1).scale(&d.pow_i(-nn)?)));
        gens.push(("h-".into(), i, hd(-1, 0), hd(0, 1).scale(&d.pow_i(nn)?)));
    }
    gens.push(("c1".into(), 0, DiffOp::central1(n), DiffOp::central2(n)));
    gens.push(("c2".into(), 0, DiffOp::central2(n), -&DiffOp::central1(n)));
    out.extend(run_all(&gens, |(which, i, x, expected)| {
        Outcome::new(
            "miki.generators",
            params([("which", which.as_str().into()), ("i", (*i).into())]),
            mismatch(Ok(mb(x)), Ok(expected.clone())),
        )
    }));
    Ok(out)
}

fn subalgebras(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window);
    let th = ctx.theta();
    let alg = th.algebra();
    let mut out = Vec::new();
    let fam_name = |g: &GenSym| match g.family {
        crate::presentations::Family::E => "e",
        crate::presentations::Family::F => "f",
        crate::presentations::Family::H => "h",
        _ => "c",
    };

    let mut vertical: Vec<GenSym> = Vec::new();
    for i in 1..n {
        for k in -w..=w {
            vertical.extend([GenSym::e(i, k), GenSym::f(i, k), GenSym::h(i, k)]);
        }
    }
    if n >= 2 {
        let mut items = vertical.clone();
        items.push(GenSym::c());
        out.extend(run_all(&items, |g| {
            let result = th.image(g).map(|x| if in_vertical(&x) { None } else { Some(x.to_string()) });
            Outcome::new("vertical", params([("gen", fam_name(g).into()), ("i", g.i.into()), ("k", g.idx.into())]), result)
        }));

        let horizontal: Vec<GenSym> = (0..n).flat_map(|i| [GenSym::e(i, 0), GenSym::f(i, 0), GenSym::h(i, 0)]).collect();
        let mut items = Vec::new();
        for a in 0..horizontal.len() {
            items.push((a, None));
            for b in a + 1..horizontal.len() {
                items.push((a, Some(b)));
            }
        }
        out.extend(run_all(&items, |&(a, b)| {
            let ga = horizontal[a];
            let result = (|| {
                let x = th.image(&ga)?;
                let x = match b {
                    None => x,
                    Some(b) => alg.bracket(&x, &th.image(&horizontal[b])?)?,
                };
                Ok(if in_horizontal(&x) { None } else { Some(x.to_string()) })
            })();
            let mut p = params([("gen", fam_name(&ga).into()), ("i", ga.i.into())]);
            if let Some(b) = b {
                let gb = horizontal[b];
                p.insert("gen2".into(), fam_name(&gb).into());
                p.insert("i2".into(), gb.i.into());
            }
            Outcome::new("horizontal", p, result)
        }));
    }

    let ks: Vec<i64> = (-w..=w).filter(|&k| k != 0).collect();
    out.extend(run_all(&ks, |&k| {
        Outcome::new("heisenberg", params([("k", k.into())]), mismatch(th.heisenberg_v(k), heisenberg_closed_form(n, k, &ctx.d)))
    }));
    let hv = ks.iter().map(|&k| th.heisenberg_v(k)).collect::<Result<Vec<_>>>();
    let hv = match hv {
        Ok(h) => h,
        Err(e) => {
            out.push(Outcome::new("heisenberg", params([("k", 0i64.into())]), Err(e)));
            return Ok(out);
        }
    };
    let mut items = Vec::new();
    for p in 0..ks.len() {
        for g in &vertical {
            items.push((p, *g));
        }
    }
    out.extend(run_all(&items, |&(p, g)| {
        let result = th.image(&g).and_then(|x| alg.bracket(&hv[p], &x));
        Outcome::new(
            "heisenberg.commute",
            params([("k", ks[p].into()), ("gen", fam_name(&g).into()), ("i", g.i.into()), ("l", g.idx.into())]),
            residual(result),
        )
    }));
    let idx: Vec<usize> = (0..ks.len()).collect();
    out.extend(run_all(&idx, |&p| {
        let k = ks[p];
        let result = (|| {
            let x = alg.bracket(&hv[p], &DiffOp::unit(n, 1, 1, -k, 0))?;
            let c = (Scalar::one() - ctx.d.pow_i(n as i64 * k)?).checked_div(&Scalar::from_int(n as i64))?.scale_int(k);
            mismatch(Ok(x), Ok(DiffOp::central2(n).scale(&c)))
        })();
        Outcome::new("heisenberg.central", params([("k", k.into())]), result)
    }));
    let mut items = Vec::new();
    for p in 0..ks.len() {
        for i in 1..=n {
            for j in 1..=n {
                for m in -w..=w {
                    items.push((p, i, j, m));
                }
            }
        }
    }
    out.extend(run_all(&items, |&(p, i, j, m)| {
        let result = alg
            .bracket(&hv[p], &DiffOp::unit(n, i, j, m, 0))
            .map(|x| if in_vertical_gl(&x) { None } else { Some(x.to_string()) });
        Outcome::new(
            "heisenberg.closure",
            params([("k", ks[p].into()), ("i", i.into()), ("j", j.into()), ("m", m.into())]),
            result,
        )
    }));
    Ok(out)
}

fn commutative(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window);
    let th = ctx.theta();
    let alg = th.algebra();
    let fam = ctx.commutative_family()?;
    let mut out = Vec::new();

    let mut gens = Vec::new();
    for i in 0..n {
        for k in 1..=w {
            gens.push((i, k, fam.generator(i, k)?));
        }
    }
    let mut pairs = Vec::new();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            pairs.push((a, b));
        }
    }
    out.extend(run_all(&pairs, |&(a, b)| {
        let (i1, k1, x) = &gens[a];
        let (i2, k2, y) = &gens[b];
        Outcome::new(
            "commutative.bracket",
            params([("i1", (*i1).into()), ("k1", (*k1).into()), ("i2", (*i2).into()), ("k2", (*k2).into())]),
            residual(alg.bracket(x, y)),
        )
    }));

    let ks: Vec<i64> = (1..=w).collect();
    out.extend(run_all(&ks, |&k| {
        let result = fam.independence(k).map(|(rank, det)| {
            let ok = rank == n && det.as_ref().is_some_and(|d| !d.is_zero());
            if ok {
                None
            } else {
                Some(format!("rank {rank}, determinant {}", det.map_or("none".into(), |d| d.to_string())))
            }
        });
        Outcome::new("commutative.independence", params([("k", k.into())]), result)
    }));

    // L_{i−1;k} L_{i;−k} (I⊗Z^k) is proportional to A_i(d^k)⊗Z^k
    let mut items = Vec::new();
    for i in 1..=n {
        for k in 1..=w.min(3) {
            items.push((i, k));
        }
    }
    out.extend(run_all(&items, |&(i, k)| {
        let result = (|| {
            let x = th.ad_poly(i % n, -k, &DiffOp::identity(n, 0, k))?;
            let x = th.ad_poly(i - 1, k, &x)?;
            let nn = n as i64;
            let a_entries: Vec<Scalar> =
                (1..=n).map(|m| ctx.d.pow_i(k * if m == i { 1 - nn } else { 1 })).collect::<Result<_>>()?;
            let ratio = x.coeff(1, 1, 0, k).checked_div(&a_entries[0])?;
            let expected = DiffOp::diagonal(&a_entries, 0, k).scale(&ratio);
            if ratio.is_zero() {
                return Ok(Some(format!("vanishes: {x}")));
            }
            mismatch(Ok(x), Ok(expected))
        })();
        Outcome::new("commutative.ladder", params([("i", i.into()), ("k", k.into())]), result)
    }));

    let mut items = Vec::new();
    for i in 0..n {
        for k in -w..=w {
            if k != 0 {
                items.push((i, k));
            }
        }
    }
    out.extend(run_all(&items, |&(i, k)| {
        Outcome::new(
            "shift",
            params([("i", i.into()), ("k", k.into())]),
            mismatch(th.shift_element(i, k).map(|s| s.image), shift_closed_form(n, i, k, &ctx.d)),
        )
    }));
    Ok(out)
}

fn alpha_str(alpha: &[i64]) -> String {
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

fn dims(cfg: &SuiteConfig, ctx: &Ctx) -> Result<Vec<Outcome>> {
    let n = cfg.n;
    let w = i64::from(cfg.window);
    let th = ctx.theta();
    let alphas = box_vectors(n, w);
    let mut items = Vec::new();
    for a in 0..alphas.len() {
        for k in -w..=w {
            items.push((a, k));
        }
    }
    let mut out = run_all(&items, |&(a, k)| {
        let alpha = &alphas[a];
        let got = graded_basis(n, &DiffDegree::new(alpha.clone(), k)).len();
        let expected = difference_table(n, alpha, k);
        Outcome::new(
            "dims.difference",
            params([("alpha", alpha_str(alpha).as_str().into()), ("k", k.into())]),
            verdict(got == expected, || format!("dimension {got}, table {expected}")),
        )
    });
    let mut items = Vec::new();
    for a in 0..alphas.len() {
        for k in 0..=cfg.window + 1 {
            items.push((a, k));
        }
    }
    out.extend(run_all(&items, |&(a, k)| {
        let alpha = &alphas[a];
        let got = dim_diff(n, alpha, k);
        let expected = differential_table(n, alpha, k);
        Outcome::new(
            "dims.differential",
            params([("alpha", alpha_str(alpha).as_str().into()), ("k", k.into())]),
            verdict(got == expected, || format!("dimension difference {got}, table {expected}")),
        )
    }));

    let mut items = Vec::new();
    for i in 0..n {
        for l in 1..=2i64 {
            for k in -2..=2i64 {
                items.push((i, l, k));
            }
        }
    }
    out.extend(run_all(&items, |&(i, l, k)| {
        let result = (|| {
            let src = graded_basis(n, &DiffDegree::new(delta(n, l), k));
            let dst = graded_basis(n, &DiffDegree::new(delta(n, l), k + l));
            let mut rows = Vec::new();
            for b in &src {
                let img = th.ad_poly(i, l, b)?;
                match coords(&img, &dst) {
                    Some(c) => rows.push(c),
                    None => return Ok(Some(format!("image outside the target piece: {img}"))),
                }
            }
            let (rank, _) = rank_det(&ScalarMatrix::from_rows(rows)?);
            verdict(rank == n, || format!("rank {rank}, expected {n}"))
        })();
        Outcome::new("dims.shift", params([("i", i.into()), ("l", l.into()), ("k", k.into())]), result)
    }));

    // ad h′_{i,1} moves θ(ē_{i,k}) to θ(ē_{i,k+1})
    let items: Vec<(usize, i64)> = (0..n).flat_map(|i| (-2..=2i64).map(move |k| (i, k))).collect();
    out.extend(run_all(&items, |&(i, k)| {
        let lhs = th.image(&GenSym::e(i, k)).and_then(|x| th.ad_poly(i, 1, &x));
        Outcome::new("dims.shift.generator", params([("i", i.into()), ("k", k.into())]), mismatch(lhs, th.image(&GenSym::e(i, k + 1))))
    }));
    Ok(out)
}
