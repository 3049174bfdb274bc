//! Splitting a vertex `v` along an even set `U` of its neighbors.
//!
//! The first construction places `x` on `v·u_k` next to `v` and redraws
//! every other `v·u_i` as `u_i·x`, running alongside the old edge and then
//! around `v` inside a small disk. Edges with `i` in the first half after
//! `k` turn clockwise, the others counterclockwise, which is what balances
//! the disk crossings. The second construction repeats this with `y` as a
//! twin of `x`.

use std::collections::BTreeSet;

use crosskit_graph::{EdgeClass, Graph};
use crosskit_map::{Drawing, ParallelEnd, Side};

use crate::certificate::PipelineCertificate;
use crate::context::Lemma1Context;
use crate::LemmaError;

/// Routes `u_i·t` for every `i ≠ k` next to `v·u_i`, turning around `v`
/// to the spoke of `t`, which sits where `v·u_k` leaves `v`. The spokes
/// `v·u_i` are kept.
fn route_all(ctx: &Lemma1Context, mut d: Drawing, k: usize, t: &str) -> Result<Drawing, LemmaError> {
    let (p, h) = (ctx.p(), ctx.p() / 2);
    // inner routes are drawn last: clockwise ones in increasing i,
    // counterclockwise ones in decreasing i
    for i in k + 1..k + h {
        let want = ctx.clockwise_between(i, k)?;
        d = d.add_parallel_edge(ctx.u_at(i), t, &ctx.v, Side::Left, &ParallelEnd::Disk(Some(want)))?;
    }
    for i in (k + h..k + p).rev() {
        let want = ctx.counterclockwise_between(i, k)?;
        d = d.add_parallel_edge(ctx.u_at(i), t, &ctx.v, Side::Right, &ParallelEnd::Disk(Some(want)))?;
    }
    Ok(d)
}

/// The first construction without its final deletions.
fn split_keeping_spokes(ctx: &Lemma1Context, k: usize, x: &str) -> Result<Drawing, LemmaError> {
    let d = ctx.drawing.subdivide_on_spoke(&ctx.v, ctx.u_at(k), x)?;
    route_all(ctx, d, k, x)
}

fn spokes_except(d: &Drawing, v: &str, us: &[&str]) -> Result<EdgeClass, LemmaError> {
    let g = d.graph();
    let mut members = BTreeSet::new();
    for u in us {
        let e =
            g.find_edge_by_label(v, u)?.ok_or_else(|| LemmaError::Construction(format!("edge {v}{u} is missing")))?;
        members.insert(e);
    }
    Ok(EdgeClass::new("spokes", members))
}

fn check_context(ctx: &Lemma1Context) -> Result<(), LemmaError> {
    if ctx.p() % 2 == 1 {
        return Err(LemmaError::OddP(ctx.p()));
    }
    if ctx.p() == 0 {
        return Err(LemmaError::BadContext("U is empty".into()));
    }
    let g = ctx.drawing.graph();
    for l in [&ctx.x_label, &ctx.y_label] {
        if g.vertex(l).is_some() {
            return Err(LemmaError::BadContext(format!("new label {l} is already a vertex")));
        }
    }
    if ctx.x_label == ctx.y_label {
        return Err(LemmaError::BadContext("the two new labels coincide".into()));
    }
    let total: usize = ctx.gaps.iter().map(Vec::len).sum();
    if total != ctx.q() {
        return Err(LemmaError::BadContext(format!("gaps hold {total} vertices, q = {}", ctx.q())));
    }
    if !g.is_connected() {
        return Err(LemmaError::BadContext("the graph is not connected".into()));
    }
    let report = ctx.drawing.validate();
    if !report.passed() {
        return Err(crosskit_map::MapError::Goodness(format!("input drawing: {:?}", report.violations)).into());
    }
    Ok(())
}

/// `G_1`: `v·u_i` replaced by `x·u_i` for all `i`, plus `x·v`.
pub fn split_graph(g: &Graph, v: &str, u: &[String], x: &str) -> Result<Graph, LemmaError> {
    let mut pairs: Vec<(String, String)> =
        g.label_pairs().into_iter().filter(|(a, b)| !(a == v && u.contains(b) || b == v && u.contains(a))).collect();
    pairs.extend(u.iter().map(|ui| (x.to_string(), ui.clone())));
    pairs.push((x.to_string(), v.to_string()));
    let mut parts = g.part_labels();
    parts.push(vec![x.to_string()]);
    Ok(Graph::new(parts, &pairs)?)
}

/// `G_1^{y T x}`.
pub fn split_twin_graph(g: &Graph, v: &str, u: &[String], x: &str, y: &str) -> Result<Graph, LemmaError> {
    Ok(split_graph(g, v, u, x)?.twin_via_template(x, y)?)
}

/// `cr_D(E({v},U), E(G)−E(v))`.
fn spoke_load(ctx: &Lemma1Context) -> Result<i64, LemmaError> {
    let d = &ctx.drawing;
    let g = d.graph();
    let vu = g.edge_class("E(v,U)", &[&ctx.v], &ctx.u.iter().map(String::as_str).collect::<Vec<_>>())?;
    let star = g.star_class("E(v)", g.require(&ctx.v)?);
    let rest = g.all_edges_class("E").difference(&star);
    Ok(d.crossings_between(&vu, &rest)? as i64)
}

/// Builds `D^1_k` of `G_1` and certifies its crossing count.
pub fn lemma1_d1(ctx: &Lemma1Context) -> Result<(Drawing, PipelineCertificate), LemmaError> {
    check_context(ctx)?;
    let (d, k, x) = (&ctx.drawing, ctx.k, ctx.x_label.as_str());
    let mut cert = PipelineCertificate::new("lemma1_d1", d);
    cert.notes.push(format!("v = {}, U = {:?}, k = {k}, new vertex {x}", ctx.v, ctx.u));
    let kept = split_keeping_spokes(ctx, k, x)?;
    let others: Vec<&str> = (1..ctx.p()).map(|j| ctx.u_at(k + j)).collect();
    let out = kept.delete_edges(&spokes_except(&kept, &ctx.v, &others)?)?;

    let g = d.graph();
    let vu = g.edge_class("E(v,U)", &[&ctx.v], &ctx.u.iter().map(String::as_str).collect::<Vec<_>>())?;
    let rest = g.all_edges_class("E").difference(&vu);
    let cr_d = d.crossings_total() as i64;
    let (within_rest, across) = (d.crossings_within(&rest)? as i64, d.crossings_between(&rest, &vu)? as i64);
    cert.equality("C1", within_rest + across, cr_d);

    let og = out.graph();
    let star_x = og.star_class("E(x)", og.require(x)?);
    let not_x = og.all_edges_class("E").difference(&star_x);
    let cr_x = out.vertex_crossings(x)? as i64;
    cert.equality("C2", out.crossings_within(&not_x)? as i64 + cr_x, out.crossings_total() as i64);
    cert.equality("C3", ctx.disk_sum(k) + across, cr_x);
    cert.equality("Z1", cr_d + ctx.disk_sum(k), out.crossings_total() as i64);

    let expected = split_graph(g, &ctx.v, &ctx.u, x)?;
    cert.check("graph", og.same_labeled_edges(&expected), format!("output is {}", og.spec_string()));
    cert.check("valid", out.validate().passed(), "output validates");
    cert.output("D1", &out);
    Ok((out, cert))
}

/// Builds `D^2_k` of `G_2 = G_1^{yTx}` and certifies its crossing count.
///
/// The construction first draws `D^1_{k+p/2}` keeping the spokes, puts
/// `y` on `v·u_k`, and draws a temporary `v·u_{k+p/2}` alongside
/// `x·u_{k+p/2}` and around `x`. That temporary edge is the template for
/// `u_{k+p/2}·y`; like the other spokes `v·u_i`, `i ≠ k`, it is removed at
/// the end.
pub fn lemma1_d2(ctx: &Lemma1Context) -> Result<(Drawing, PipelineCertificate), LemmaError> {
    check_context(ctx)?;
    let (d, k) = (&ctx.drawing, ctx.k);
    let (p, h) = (ctx.p(), ctx.p() / 2);
    let (x, y) = (ctx.x_label.as_str(), ctx.y_label.as_str());
    let k2 = (k + h) % p;
    let mut cert = PipelineCertificate::new("lemma1_d2", d);
    cert.notes.push(format!("v = {}, U = {:?}, k = {k}, new vertices {x}, {y}", ctx.v, ctx.u));

    let base = split_keeping_spokes(ctx, k2, x)?;
    let with_y = base.subdivide_on_spoke(&ctx.v, ctx.u_at(k), y)?;
    // the temporary spoke crosses exactly the routes that reach x turning clockwise
    let around_x: Vec<String> = (k2 + 1..k2 + h).map(|i| ctx.u_at(i).to_string()).collect();
    let mut with_temp = None;
    let mut last_err = None;
    for side in [Side::Left, Side::Right] {
        match with_y.add_parallel_edge(ctx.u_at(k2), &ctx.v, x, side, &ParallelEnd::Disk(Some(around_x.clone()))) {
            Ok(t) => {
                with_temp = Some(t);
                break;
            }
            Err(e) => last_err = Some(e),
        }
    }
    let with_temp = match with_temp {
        Some(t) => t,
        None => return Err(last_err.expect("two attempts").into()),
    };
    let routed = route_all(ctx, with_temp, k, y)?;
    let others: Vec<&str> = (1..p).map(|j| ctx.u_at(k + j)).collect();
    let out = routed.delete_edges(&spokes_except(&routed, &ctx.v, &others)?)?;

    let cr_d = d.crossings_total() as i64;
    let load = spoke_load(ctx)?;
    let (hp, q) = (h as i64, ctx.q() as i64);
    let total = out.crossings_total() as i64;
    cert.equality("D2", cr_d + load + hp * (q + hp - 1), total);

    let cr_xy = out.vertex_pair_crossings(x, y)? as i64;
    let cr_vy = out.vertex_pair_crossings(&ctx.v, y)? as i64;
    let cr_y = out.vertex_crossings(y)? as i64;
    cert.equality("Z0.xy", hp * (hp - 1), cr_xy);
    cert.equality("Z0.vy", ctx.disk_sum(k), cr_vy);
    cert.equality("Z0", ctx.disk_sum(k) + hp * (hp - 1) + load, cr_y);

    // the twin-free part of the output is the first construction at k + p/2
    let others2: Vec<&str> = (1..p).map(|j| ctx.u_at(k2 + j)).collect();
    let d1 = base.delete_edges(&spokes_except(&base, &ctx.v, &others2)?)?;
    let cr_d1 = d1.crossings_total() as i64;
    let z3 = (k + h..k + p - 1).map(|s| (k + p - s - 1) as i64 * ctx.gap_len(s)).sum::<i64>()
        + (k..(k + h).saturating_sub(1)).map(|s| (s + 1 - k) as i64 * ctx.gap_len(s)).sum::<i64>()
        + hp * ctx.gap_len(k + h - 1);
    cert.equality("Z3", cr_d + z3, cr_d1);
    cert.equality("split", cr_d1 + cr_y, total);

    let expected = split_twin_graph(d.graph(), &ctx.v, &ctx.u, x, y)?;
    let og = out.graph();
    cert.check("graph", og.same_labeled_edges(&expected), format!("output is {}", og.spec_string()));
    cert.check("valid", out.validate().passed(), "output validates");
    cert.output("D2", &out);
    Ok((out, cert))
}
