use rayon::prelude::*;
use serde_json::{json, Value};

use crosskit_bounds::CrSource;
use crosskit_gen::{cylinder_k11mn, random_geometric_drawing};
use crosskit_graph::{parse_graph_spec, Graph};
use crosskit_lemma::{
    lemma1_d1, lemma1_d2, lemma3_check, part_unions, thm1_pipeline, thm2_pipeline, thm3_pipeline, Lemma1Context,
    PipelineCertificate,
};
use crosskit_map::Drawing;

use crate::args::{Source, VerifyArgs, VerifyTarget};
use crate::commands::{assumptions, fresh_label};
use crate::{write_file, CliError, CommandOutcome, Ctx};

struct RunResult {
    label: String,
    checks: usize,
    failures: Vec<String>,
    bound: Option<String>,
    body: Value,
}

fn family(a: &VerifyArgs) -> Result<(usize, usize), CliError> {
    match (a.m, a.n) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok((m, n)),
        _ => Err(CliError::Usage("--m and --n (both at least 1) are required".into())),
    }
}

fn inputs(a: &VerifyArgs, ctx: &Ctx) -> Result<Vec<(String, Drawing)>, CliError> {
    let (g, k11mn) = match (&a.graph, a.target) {
        (Some(spec), VerifyTarget::Lemma1) => {
            let g = parse_graph_spec(spec)?;
            let shape = g.part_sizes();
            let k11mn = (shape.len() == 4 && shape[0] == 1 && shape[1] == 1).then(|| (shape[2], shape[3]));
            (g, k11mn)
        }
        (Some(_), _) => return Err(CliError::Usage("--graph only applies to lemma1".into())),
        (None, _) => {
            let (m, n) = family(a)?;
            (Graph::complete_multipartite(&[1, 1, m, n])?, Some((m, n)))
        }
    };
    let mut out = Vec::new();
    if matches!(a.source, Source::Cylinder | Source::All) {
        match k11mn {
            Some((m, n)) => out.push(("cylinder".to_string(), cylinder_k11mn(m, n)?)),
            None if a.source == Source::Cylinder => {
                return Err(CliError::Usage(format!("no cylinder drawing of {}", g.spec_string())))
            }
            None => {}
        }
    }
    if matches!(a.source, Source::Random | Source::All) {
        for i in 0..a.seeds {
            let seed = ctx.seed.wrapping_add(i);
            out.push((format!("seed {seed}"), random_geometric_drawing(&g, seed)?));
        }
    }
    Ok(out)
}

fn certificate_run(label: &str, cert: PipelineCertificate) -> RunResult {
    let bound = cert.bound.as_ref().map(|b| match b.value {
        Some(v) => format!("{} = {v}", b.statement),
        None => format!("{} (a needed crossing number is unknown)", b.statement),
    });
    RunResult {
        label: label.to_string(),
        checks: cert.equalities.len() + cert.checks.len(),
        failures: cert.failures(),
        bound,
        body: serde_json::to_value(&cert).expect("certificates serialize"),
    }
}

fn lemma1_run(label: &str, d: &Drawing) -> Result<RunResult, CliError> {
    let g = d.graph();
    let x = fresh_label(g, "x", &[]);
    let y = fresh_label(g, "y", &[&x]);
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut certs = Vec::new();
    for v in g.labels() {
        for u in part_unions(g, v)? {
            let us: Vec<&str> = u.iter().map(String::as_str).collect();
            for k in 0..u.len() {
                let ctx = Lemma1Context::new(d, v, &us, k)?.with_labels(&x, &y);
                for (name, result) in [("D1", lemma1_d1(&ctx)), ("D2", lemma1_d2(&ctx))] {
                    let (_, cert) = result?;
                    checks += cert.equalities.len() + cert.checks.len();
                    failures.extend(cert.failures().into_iter().map(|f| format!("v={v} U={u:?} k={k} {name}: {f}")));
                    certs.push(cert);
                }
            }
        }
    }
    Ok(RunResult {
        label: label.to_string(),
        checks,
        failures,
        bound: None,
        body: serde_json::to_value(&certs).expect("certificates serialize"),
    })
}

fn run_one(a: &VerifyArgs, src: &CrSource, label: &str, d: &Drawing) -> Result<RunResult, CliError> {
    Ok(match a.target {
        VerifyTarget::Thm1 => certificate_run(label, thm1_pipeline(d, src)?),
        VerifyTarget::Thm2 => certificate_run(label, thm2_pipeline(d, src)?),
        VerifyTarget::Thm3 => certificate_run(label, thm3_pipeline(d, src)?),
        VerifyTarget::Lemma1 => lemma1_run(label, d)?,
        VerifyTarget::Lemma2 => {
            let l = d.lemma2_decomposition()?;
            let failures =
                if l.holds() { Vec::new() } else { vec![format!("terms sum to {}, cr(D) = {}", l.sum, l.total)] };
            RunResult {
                label: label.to_string(),
                checks: 1,
                failures,
                bound: None,
                body: serde_json::to_value(&l).expect("ledgers serialize"),
            }
        }
        VerifyTarget::Lemma3 => {
            let (m, n) = family(a)?;
            let k2mn = src
                .lookup(&[2, m, n])
                .ok_or_else(|| CliError::rejected("MISSING_VALUE", format!("cr(K_{{2,{m},{n}}}) is not known")))?;
            let r = lemma3_check(d, k2mn.value)?;
            let mut failures = Vec::new();
            if !r.equality {
                failures.push(format!("crossings at ox: {} with E(Y,Z), {} in all", r.ox_yz, r.ox_rest));
            }
            if !r.inequality {
                failures.push(format!("slack {} is negative", r.slack));
            }
            RunResult {
                label: label.to_string(),
                checks: 2,
                failures,
                bound: None,
                body: serde_json::to_value(&r).expect("reports serialize"),
            }
        }
    })
}

pub(crate) fn verify(a: &VerifyArgs, ctx: &Ctx) -> Result<CommandOutcome, CliError> {
    let src = CrSource::assuming(assumptions(&a.assume));
    let drawings = inputs(a, ctx)?;
    if drawings.is_empty() {
        return Err(CliError::Usage("no drawings selected (--seeds 0 without a cylinder drawing)".into()));
    }
    let work = || -> Vec<Result<RunResult, CliError>> {
        drawings.par_iter().map(|(label, d)| run_one(a, &src, label, d)).collect()
    };
    let results = match a.jobs.and_then(|j| rayon::ThreadPoolBuilder::new().num_threads(j).build().ok()) {
        Some(pool) => pool.install(work),
        None => work(),
    };
    let mut runs = Vec::new();
    for (r, (label, _)) in results.into_iter().zip(&drawings) {
        match r {
            Ok(run) => runs.push(run),
            Err(e) if e.exit_code() == 2 => return Err(e),
            Err(e) => runs.push(RunResult {
                label: label.clone(),
                checks: 1,
                failures: vec![format!("[{}] {e}", e.code())],
                bound: None,
                body: json!({ "error": e.code(), "message": e.to_string() }),
            }),
        }
    }
    let target = format!("{:?}", a.target).to_lowercase();
    let graph = drawings[0].1.graph().spec_string();
    let passed = runs.iter().filter(|r| r.failures.is_empty()).count();
    let checks: usize = runs.iter().map(|r| r.checks).sum();
    let mut lines = vec![format!("{target} on {graph}: {passed}/{} drawings pass ({checks} checks)", runs.len())];
    if let Some(b) = runs.iter().find_map(|r| r.bound.as_ref().map(|b| (r.label.as_str(), b))) {
        lines.push(format!("bound ({}): {}", b.0, b.1));
    }
    for r in runs.iter().filter(|r| !r.failures.is_empty()) {
        for f in &r.failures {
            lines.push(format!("  {}: {f}", r.label));
        }
    }
    let all_pass = passed == runs.len();
    let reports: Vec<Value> =
        runs.iter().map(|r| json!({ "drawing": r.label, "passed": r.failures.is_empty(), "report": r.body })).collect();
    let body = json!({
        "target": target,
        "graph": graph,
        "passed": all_pass,
        "drawings": runs.len(),
        "checks": checks,
        "bound": runs.iter().find_map(|r| r.bound.clone()),
        "failures": runs.iter().flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.label))).collect::<Vec<_>>(),
    });
    let mut outcome = CommandOutcome::new(all_pass, lines.join("\n"), body);
    if let Some(p) = &a.output {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        outcome.artifacts.push(write_file(p, &text)?);
    }
    Ok(outcome)
}
