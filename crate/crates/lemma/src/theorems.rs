//! The three `K_{1,1,m,n}` pipelines and the edge-removal check.
//!
//! Each pipeline takes a drawing `D` of `K_{1,1,m,n}` with parts
//! `O = {o}`, `X = {x}`, `Y`, `Z`, builds the auxiliary drawings of
//! complete bipartite or tripartite graphs that the argument needs, and
//! records every crossing-count identity with its predicted and measured
//! values. Summing those identities and bounding the auxiliary drawings
//! from below by crossing numbers gives the lower bound.

use crosskit_bounds::{theorem_lower_bound, CrSource, Ratio, Theorem};
use crosskit_graph::{EdgeClass, Graph};
use crosskit_map::{Drawing, FourClasses, MapError, ParallelEnd, Side};
use serde::{Deserialize, Serialize};

use crate::certificate::{BoundStatement, Instance, PipelineCertificate};
use crate::context::Lemma1Context;
use crate::lemma1::{lemma1_d1, lemma1_d2};
use crate::LemmaError;

fn classes(d: &Drawing) -> Result<FourClasses, LemmaError> {
    FourClasses::of(d.graph()).map_err(|e| match e {
        MapError::WrongFamily(s) => LemmaError::WrongFamily(s),
        other => other.into(),
    })
}

fn validated_input(d: &Drawing) -> Result<FourClasses, LemmaError> {
    let c = classes(d)?;
    let report = d.validate();
    if !report.passed() {
        return Err(MapError::Goodness(format!("input drawing: {:?}", report.violations)).into());
    }
    Ok(c)
}

/// `base` if it is not a vertex of `g`, otherwise `base` with primes.
fn fresh(g: &Graph, base: &str) -> String {
    let mut s = base.to_string();
    while g.vertex(&s).is_some() {
        s.push('\'');
    }
    s
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn cr(d: &Drawing) -> i64 {
    d.crossings_total() as i64
}

fn between(d: &Drawing, a: &EdgeClass, b: &EdgeClass) -> Result<i64, LemmaError> {
    Ok(d.crossings_between(a, b)? as i64)
}

/// Records whether `d` is a drawing of the complete multipartite graph with
/// the given part sizes; the digest is taken with the parts regrouped.
fn check_shape(cert: &mut PipelineCertificate, name: &str, d: &Drawing, want: &[usize]) {
    let mut want = want.to_vec();
    want.sort_unstable();
    let shape = d.graph().complete_multipartite_shape();
    let pass = shape.as_deref() == Some(want.as_slice()) && d.validate().passed();
    cert.check(name, pass, format!("want K{want:?}, got {shape:?}"));
    match d.regrouped_complete() {
        Ok(r) if pass => cert.output(name, &r),
        _ => cert.output(name, d),
    }
}

fn bound(thm: Theorem, m: usize, n: usize, src: &CrSource, statement: &str) -> BoundStatement {
    match theorem_lower_bound(thm, m, n, src) {
        Ok(b) => BoundStatement {
            statement: statement.to_string(),
            value: Some(b.value),
            exact: Some(b.exact().to_string()),
            inputs: b.inputs.iter().map(|(k, v)| (k.clone(), v.value)).collect(),
        },
        Err(e) => {
            BoundStatement { statement: format!("{statement} ({e})"), value: None, exact: None, inputs: Vec::new() }
        }
    }
}

fn instance(statement: String, lhs: i64, rhs: Ratio<i64>) -> Instance {
    Instance { statement, lhs, rhs: rhs.to_string(), holds: Ratio::from_integer(lhs) >= rhs }
}

fn parity(pipeline: &'static str, needs: &'static str, m: usize, n: usize, ok: bool) -> Result<(), LemmaError> {
    if ok {
        Ok(())
    } else {
        Err(LemmaError::WrongParity { pipeline, needs, m, n })
    }
}

/// `m` and `n` even: `D_2` of `K_{m+1,n+3}` from `D − E(X,Z)` split at `o`
/// along `Y`, and `D_4` of `K_{m+3,n+1}` from `D − E(O,Y)` split at `x`
/// along `Z`.
pub fn thm1_pipeline(d: &Drawing, src: &CrSource) -> Result<PipelineCertificate, LemmaError> {
    let c = validated_input(d)?;
    let (m, n) = (c.ys.len(), c.zs.len());
    parity("thm1", "m and n even", m, n, m % 2 == 0 && n % 2 == 0)?;
    let mut cert = PipelineCertificate::new("thm1", d);
    let g = d.graph();
    let (mi, ni) = (m as i64, n as i64);
    let cr_d = cr(d);

    let d1 = d.delete_edges(&c.xz)?;
    cert.alias("z0", &c.x);
    let b4 = cr_d - between(d, &c.xz, &c.oy.union(&c.oz).union(&c.yz))?;
    cert.equality("B4", b4, cr(&d1));
    let (z_a, z_b) = (fresh(g, &format!("z{}", n + 1)), fresh(g, &format!("z{}", n + 2)));
    cert.alias(&format!("z{}", n + 1), &z_a);
    cert.alias(&format!("z{}", n + 2), &z_b);
    let ctx = Lemma1Context::new(&d1, &c.o, &strs(&c.ys), 0)?.with_labels(&z_a, &z_b);
    let (d2, l2) = lemma1_d2(&ctx)?;
    cert.absorb("D2", &l2);
    check_shape(&mut cert, "D2", &d2, &[m + 1, n + 3]);
    let b5 = cr(&d1) + between(d, &c.oy, &c.xy.union(&c.yz))? + (mi / 2) * (ni + mi / 2);
    cert.equality("B5", b5, cr(&d2));

    let d3 = d.delete_edges(&c.oy)?;
    cert.alias("y0", &c.o);
    let b2 = cr_d - between(d, &c.oy, &c.xy.union(&c.xz).union(&c.yz))?;
    cert.equality("B2", b2, cr(&d3));
    let (y_a, y_b) = (fresh(g, &format!("y{}", m + 1)), fresh(g, &format!("y{}", m + 2)));
    cert.alias(&format!("y{}", m + 1), &y_a);
    cert.alias(&format!("y{}", m + 2), &y_b);
    let ctx = Lemma1Context::new(&d3, &c.x, &strs(&c.zs), 0)?.with_labels(&y_a, &y_b);
    let (d4, l4) = lemma1_d2(&ctx)?;
    cert.absorb("D4", &l4);
    check_shape(&mut cert, "D4", &d4, &[m + 3, n + 1]);
    let b3 = cr(&d3) + between(d, &c.xz, &c.oz.union(&c.yz))? + (ni / 2) * (mi + ni / 2);
    cert.equality("B3", b3, cr(&d4));

    let extra = (ni / 2) * (mi + ni / 2) + (mi / 2) * (ni + mi / 2);
    let b6 = 2 * cr_d - 2 * between(d, &c.oy, &c.xz)? + extra;
    cert.equality("B6", b6, cr(&d2) + cr(&d4));

    cert.bound = Some(bound(
        Theorem::One,
        m,
        n,
        src,
        &format!(
            "cr(K_{{1,1,{m},{n}}}) >= 1/2 (cr(K_{{{},{}}}) + cr(K_{{{},{}}}) - mn - (m^2+n^2)/4)",
            m + 1,
            n + 3,
            m + 3,
            n + 1
        ),
    ));
    cert.instance = Some(instance(
        "cr(D) >= 1/2 (cr(D2) + cr(D4) - mn - (m^2+n^2)/4)".into(),
        cr_d,
        Ratio::new(4 * (cr(&d2) + cr(&d4)) - 4 * mi * ni - mi * mi - ni * ni, 8),
    ));
    Ok(cert)
}

/// `Σ_{i<h} |Y_i|` and `Σ_{i≥h} |Y_i|` for the gaps of `Y` between the
/// spokes to `X ∪ Z` at `o`, read from `z_0 = x`.
fn gap_halves(d: &Drawing, c: &FourClasses) -> Result<(i64, i64), LemmaError> {
    let mut u = vec![c.x.as_str()];
    u.extend(strs(&c.zs));
    let ctx = Lemma1Context::new(d, &c.o, &u, 0)?;
    let h = ctx.p() / 2;
    Ok(((0..h).map(|i| ctx.gap_len(i)).sum(), (h..ctx.p()).map(|i| ctx.gap_len(i)).sum()))
}

/// The first steps shared by the two odd-`n` pipelines: `x` is read as
/// `z_0`, and `o` is split along `X ∪ Z` into `D^1_0` and `D^1_{(n+1)/2}`.
struct OddSplit {
    ctx: Lemma1Context,
    d10: Drawing,
    d1h: Drawing,
    y0: String,
}

fn odd_split(cert: &mut PipelineCertificate, d: &Drawing, c: &FourClasses) -> Result<OddSplit, LemmaError> {
    let n = c.zs.len();
    let h = n.div_ceil(2);
    cert.alias("z0", &c.x);
    let y0 = fresh(d.graph(), "y0");
    cert.alias("y0", &y0);
    let mut u = vec![c.x.as_str()];
    u.extend(strs(&c.zs));
    let spare = fresh(d.graph(), "_t");
    let ctx = Lemma1Context::new(d, &c.o, &u, 0)?.with_labels(&y0, &spare);
    cert.notes.push(format!("rotation of X+Z at {}: {:?}", c.o, ctx.u));
    let (d10, l0) = lemma1_d1(&ctx)?;
    let (d1h, lh) = lemma1_d1(&ctx.clone().with_k(h))?;
    cert.absorb("D1_0", &l0);
    cert.absorb("D1_h", &lh);
    let y = |i: usize| ctx.gap_len(i);
    let cr_d = cr(d);
    let b7 = cr_d
        + (0..h.saturating_sub(1)).map(|i| (h - i - 1) as i64 * y(i)).sum::<i64>()
        + (h..=n).map(|i| (i + 1 - h) as i64 * y(i)).sum::<i64>();
    cert.equality("B7", b7, cr(&d10));
    let b8 =
        cr_d + (h..n).map(|i| (n - i) as i64 * y(i)).sum::<i64>() + (0..h).map(|i| (i + 1) as i64 * y(i)).sum::<i64>();
    cert.equality("B8", b8, cr(&d1h));
    Ok(OddSplit { ctx, d10, d1h, y0 })
}

/// Adds `x·o` next to `x·y_0`, leaving it before the disk around `o`.
fn add_xo(d: &Drawing, x: &str, o: &str, y0: &str, outside: usize) -> Result<Drawing, LemmaError> {
    let mut last = None;
    for side in [Side::Left, Side::Right] {
        match d.add_parallel_edge(x, o, y0, side, &ParallelEnd::Truncate(outside)) {
            Ok(out) => return Ok(out),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("two attempts").into())
}

/// `m` and `n` odd: two drawings of `K_{1,m+1,n+1}` from the splits of `o`
/// along `X ∪ Z`, one of them with `y_0·z_0` rerouted around the lighter
/// side of the disk.
pub fn thm2_pipeline(d: &Drawing, src: &CrSource) -> Result<PipelineCertificate, LemmaError> {
    let c = validated_input(d)?;
    let (m, n) = (c.ys.len(), c.zs.len());
    parity("thm2", "m and n odd", m, n, m % 2 == 1 && n % 2 == 1)?;
    let mut cert = PipelineCertificate::new("thm2", d);
    let h = n.div_ceil(2);
    let (mi, ni) = (m as i64, n as i64);

    // orient so that the gaps after z_0 hold at least half of Y
    let (heavy, light) = gap_halves(d, &c)?;
    let dd = if heavy < light {
        cert.notes.push("the drawing is mirrored so that the first half of the gaps is the heavier".into());
        d.mirrored()
    } else {
        d.clone()
    };
    let split = odd_split(&mut cert, &dd, &c)?;
    cert.output("D", &dd);
    let OddSplit { ctx, d10, d1h, y0 } = split;
    let cr_d = cr(&dd);
    let cv = gap_halves(&dd, &c)?.1;
    cert.check("c", 2 * cv < mi, format!("c = {cv}, (m-1)/2 = {}", (mi - 1) / 2));
    let y = |i: usize| ctx.gap_len(i);
    let z6 = cr_d
        + (0..h.saturating_sub(1)).map(|i| (h - i - 1) as i64 * y(i)).sum::<i64>()
        + cv
        + (h..=n).map(|i| (i - h) as i64 * y(i)).sum::<i64>();
    cert.equality("Z6", z6, cr(&d10));

    // D': y_0 z_0 crosses the spokes to the gaps Y_h..Y_n instead
    let mut light: Vec<String> = (h..=n).flat_map(|i| ctx.gaps[i].clone()).collect();
    light.reverse();
    let d_prime = d1h.reroute_in_disk(&c.x, &y0, &c.o, &strs(&light))?;
    let z7 =
        cr_d + (h..n).map(|i| (n - i) as i64 * y(i)).sum::<i64>() + cv + (0..h).map(|i| i as i64 * y(i)).sum::<i64>();
    cert.equality("Z7", z7, cr(&d_prime));

    let ox = c.ox.members.iter().next().copied().expect("one edge ox");
    let load = dd.edge_crossings(ox) as i64;
    let d_1 = add_xo(&d_prime, &c.x, &c.o, &y0, load as usize)?;
    cert.equality("B9", cr(&d_prime) + load, cr(&d_1));

    let near: Vec<String> = (1..h).map(|i| ctx.u_at(i).to_string()).collect();
    let mut d_2 = None;
    let mut last = None;
    for side in [Side::Left, Side::Right] {
        match d10.add_parallel_edge(&c.o, &c.x, &y0, side, &ParallelEnd::Disk(Some(near.clone()))) {
            Ok(out) => {
                d_2 = Some(out);
                break;
            }
            Err(e) => last = Some(e),
        }
    }
    let d_2 = match d_2 {
        Some(x) => x,
        None => return Err(last.expect("two attempts").into()),
    };
    cert.equality("B10", cr(&d10) + load + (ni - 1) / 2, cr(&d_2));
    check_shape(&mut cert, "D1", &d_1, &[1, m + 1, n + 1]);
    check_shape(&mut cert, "D2", &d_2, &[1, m + 1, n + 1]);
    let b11 = 2 * (cr_d + load + cv) + (ni - 1) / 2 * mi + (ni - 1) / 2;
    cert.equality("B11", b11, cr(&d_1) + cr(&d_2));

    let k2mn = src.lookup(&[2, m, n]).map(|v| v.value).unwrap_or(0);
    cert.bound = Some(bound(
        Theorem::Two,
        m,
        n,
        src,
        &format!(
            "cr(K_{{1,1,{m},{n}}}) >= 1/2 (cr(K_{{1,{},{}}}) + cr(K_{{2,{m},{n}}}) - (m+1)(n+1)/4 + 1)",
            m + 1,
            n + 1
        ),
    ));
    cert.instance = Some(instance(
        format!("cr(D) >= 1/4 (cr(D1) + cr(D2) + 2*{k2mn} - (m-1) - (n-1)(m+1)/2)"),
        cr_d,
        Ratio::new(2 * (cr(&d_1) + cr(&d_2) + 2 * k2mn - (mi - 1)) - (ni - 1) * (mi + 1), 8),
    ));
    Ok(cert)
}

/// `m` even and `n` odd: `D_2` of `K_{m+1,n+2}` from `D^1_0`, `D_1` of
/// `K_{1,m+1,n+1}` from `D^1_{(n+1)/2}`, and `D_3` of `K_{m+3,n+2}` by
/// splitting `x` in `D_1` along `O ∪ Z`.
pub fn thm3_pipeline(d: &Drawing, src: &CrSource) -> Result<PipelineCertificate, LemmaError> {
    let c = validated_input(d)?;
    let (m, n) = (c.ys.len(), c.zs.len());
    parity("thm3", "m even and n odd", m, n, m % 2 == 0 && n % 2 == 1)?;
    let mut cert = PipelineCertificate::new("thm3", d);
    let h = n.div_ceil(2);
    let (mi, hi) = (m as i64, h as i64);
    let cr_d = cr(d);
    let OddSplit { d10, d1h, y0, .. } = odd_split(&mut cert, d, &c)?;

    let all = c.everything();
    let ox = c.ox.members.iter().next().copied().expect("one edge ox");
    let load = d.edge_crossings(ox) as i64;
    cert.equality("L3", between(d, &c.ox, &all.difference(&c.ox))?, between(d, &c.ox, &c.yz)?);
    let d_1 = add_xo(&d1h, &c.x, &c.o, &y0, load as usize)?;
    cert.equality("J1", cr(&d1h) + load, cr(&d_1));
    check_shape(&mut cert, "D1", &d_1, &[1, m + 1, n + 1]);

    let g10 = d10.graph();
    let xz10 = g10.edge_class("E(X,Z)", &[&c.x], &strs(&c.zs))?;
    let d_2 = d10.delete_edges(&xz10)?;
    let xz_rest = between(d, &c.xz, &all.difference(&c.xz))?;
    cert.equality("J2", cr(&d10) - xz_rest, cr(&d_2));
    check_shape(&mut cert, "D2", &d_2, &[m + 1, n + 2]);

    cert.alias("z0'", &c.o);
    let (y_a, y_b) = (fresh(d_1.graph(), &format!("y{}", m + 1)), fresh(d_1.graph(), &format!("y{}", m + 2)));
    cert.alias(&format!("y{}", m + 1), &y_a);
    cert.alias(&format!("y{}", m + 2), &y_b);
    let mut u = vec![c.o.as_str()];
    u.extend(strs(&c.zs));
    let ctx = Lemma1Context::new(&d_1, &c.x, &u, 0)?.with_labels(&y_a, &y_b);
    let (d_3, l3) = lemma1_d2(&ctx)?;
    cert.absorb("D3", &l3);
    check_shape(&mut cert, "D3", &d_3, &[m + 3, n + 2]);

    // ledger on D_1
    let g1 = d_1.graph();
    let (o, x) = (c.o.as_str(), c.x.as_str());
    let zs = strs(&c.zs);
    let ys = strs(&c.ys);
    let mut oz: Vec<&str> = vec![o];
    oz.extend(&zs);
    let x_o = g1.edge_class("E(X,O)", &[x], &[o])?;
    let x_z = g1.edge_class("E(X,Z)", &[x], &zs)?;
    let x_oz = g1.edge_class("E(X,O+Z)", &[x], &oz)?;
    let y_oz = g1.edge_class("E(Y,O+Z)", &ys, &oz)?;
    let y0_oz = g1.edge_class("E(y0,O+Z)", &[&y0], &oz)?;
    let star_x = g1.star_class("E(x)", g1.require(x)?);
    let not_x = g1.all_edges_class("E").difference(&star_x);
    let x0_terms = [
        between(&d_1, &x_o, &y_oz)?,
        between(&d_1, &x_o, &y0_oz)?,
        between(&d_1, &x_z, &y_oz)?,
        between(&d_1, &x_z, &y0_oz)?,
    ];
    cert.equality("X0", x0_terms.iter().sum(), between(&d_1, &x_oz, &not_x)?);
    let y_oz_d = c.oy.union(&c.yz);
    cert.equality("X1", between(d, &c.ox, &c.yz)?, x0_terms[0]);
    cert.equality("X2", 0, x0_terms[1]);
    cert.equality("X3", between(d, &c.xz, &y_oz_d)?, x0_terms[2]);
    cert.equality("X4", between(d, &c.xz, &c.oz)?, x0_terms[3]);
    cert.equality("X5", between(d, &c.xz, &c.oz)? + between(d, &c.xz, &y_oz_d)?, xz_rest);
    let tail = hi * (mi + hi);
    cert.equality("C6", cr(&d_1) + between(d, &c.ox, &c.yz)? + xz_rest + tail, cr(&d_3));
    cert.equality("C7", 2 * load + cr(&d10) + cr(&d1h) + tail, cr(&d_2) + cr(&d_3));
    cert.equality("C8", 2 * (cr_d + load) + hi * mi + tail, cr(&d_2) + cr(&d_3));

    let k2mn = src.lookup(&[2, m, n]).map(|v| v.value).unwrap_or(0);
    cert.bound = Some(bound(
        Theorem::Three,
        m,
        n,
        src,
        &format!(
            "cr(K_{{1,1,{m},{n}}}) >= 1/4 (cr(K_{{{},{}}}) + cr(K_{{{},{}}}) + 2 cr(K_{{2,{m},{n}}}) - m(n+1) - (n+1)^2/4)",
            m + 1,
            n + 2,
            m + 3,
            n + 2
        ),
    ));
    cert.instance = Some(instance(
        format!("cr(D) >= 1/4 (cr(D2) + cr(D3) + 2*{k2mn} - m(n+1) - (n+1)^2/4)"),
        cr_d,
        Ratio::new(4 * (cr(&d_2) + cr(&d_3) + 2 * k2mn) - 4 * mi * (2 * hi) - 4 * hi * hi, 16),
    ));
    Ok(cert)
}

/// Outcome of checking the bound on crossings at the edge `o·x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma3Report {
    /// `cr_D(E(O,X), E(Y,Z))`.
    pub ox_yz: i64,
    /// `cr_D(E(O,X), E − E(O,X))`.
    pub ox_rest: i64,
    pub total: i64,
    pub cr_k2mn: i64,
    pub equality: bool,
    pub inequality: bool,
    /// `cr(D) − cr(K_{2,m,n}) − cr_D(E(O,X), E − E(O,X))`.
    pub slack: i64,
}

/// Checks `cr_D(E(O,X),E(Y,Z)) = cr_D(E(O,X),E−E(O,X)) ≤ cr(D) − cr(K_{2,m,n})`.
pub fn lemma3_check(d: &Drawing, cr_k2mn: i64) -> Result<Lemma3Report, LemmaError> {
    let c = classes(d)?;
    let all = c.everything();
    let ox_yz = between(d, &c.ox, &c.yz)?;
    let ox_rest = between(d, &c.ox, &all.difference(&c.ox))?;
    let total = cr(d);
    let slack = total - cr_k2mn - ox_rest;
    Ok(Lemma3Report { ox_yz, ox_rest, total, cr_k2mn, equality: ox_yz == ox_rest, inequality: slack >= 0, slack })
}
