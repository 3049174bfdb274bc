use crosskit_bounds::{zarankiewicz, CrSource};
use crosskit_gen::{cylinder_k11mn, random_geometric_drawing, zarankiewicz_drawing};
use crosskit_graph::complete_multipartite;
use crosskit_lemma::{drawing_digest, lemma3_check, thm1_pipeline, thm2_pipeline, thm3_pipeline, PipelineCertificate};
use crosskit_map::Drawing;

fn tag(c: &PipelineCertificate, t: &str) -> (i64, i64) {
    let e = c.equality_by_tag(t).unwrap_or_else(|| panic!("no equality {t}"));
    assert!(e.pass, "{t}: {e:?}");
    (e.predicted, e.measured)
}

fn output<'a>(c: &'a PipelineCertificate, name: &str) -> &'a crosskit_lemma::NamedDigest {
    c.outputs.iter().find(|o| o.name == name).unwrap()
}

/// Crossings between two vertex-set edge classes, counted from labels.
fn cr_between(d: &Drawing, a: (&[&str], &[&str]), b: (&[&str], &[&str])) -> i64 {
    let g = d.graph();
    let in_class = |e, (p, q): (&[&str], &[&str])| {
        let (x, y) = g.edge_labels(e);
        (p.contains(&x) && q.contains(&y)) || (p.contains(&y) && q.contains(&x))
    };
    d.crossings()
        .iter()
        .filter(|[e, f]| (in_class(*e, a) && in_class(*f, b)) || (in_class(*f, a) && in_class(*e, b)))
        .count() as i64
}

#[test]
fn even_even_cylinder() {
    let d = cylinder_k11mn(4, 4).unwrap();
    let c = thm1_pipeline(&d, &CrSource::registry()).unwrap();
    assert!(c.passed, "{:?}", c.failures());
    for t in ["B4", "B5", "B2", "B3"] {
        tag(&c, t);
    }
    let (ys, zs): (&[&str], &[&str]) = (&["y1", "y2", "y3", "y4"], &["z1", "z2", "z3", "z4"]);
    let oy_xz = cr_between(&d, (&["o"], ys), (&["x"], zs));
    assert_eq!(tag(&c, "B6").1, 48 - 2 * oy_xz + 12 + 12);
    assert_eq!(output(&c, "D2").graph, "K=5,7");
    assert_eq!(output(&c, "D4").graph, "K=5,7");
    let b = c.bound.as_ref().unwrap();
    assert_eq!(b.value, Some(24));
    assert!(c.instance.as_ref().unwrap().holds);
}

#[test]
fn odd_odd_cylinder() {
    let d = cylinder_k11mn(3, 3).unwrap();
    let src = CrSource::from_table([(vec![1, 4, 4], 12), (vec![2, 3, 3], 7)]);
    let c = thm2_pipeline(&d, &src).unwrap();
    assert!(c.passed, "{:?}", c.failures());
    for t in ["B7", "B8", "Z6", "Z7", "B9", "B10", "B11"] {
        tag(&c, t);
    }
    assert_eq!(output(&c, "D1").graph, "K=1,4,4");
    assert_eq!(output(&c, "D2").graph, "K=1,4,4");
    assert_eq!(c.bound.as_ref().unwrap().value, Some(8));
    // the registry knows both inputs as well
    let c = thm2_pipeline(&d, &CrSource::registry()).unwrap();
    assert_eq!(c.bound.as_ref().unwrap().value, Some(8));
}

#[test]
fn even_odd_cylinder() {
    let d = cylinder_k11mn(4, 3).unwrap();
    let src = CrSource::from_table([(vec![5, 5], 16), (vec![7, 5], 36), (vec![2, 4, 3], 12)]);
    let c = thm3_pipeline(&d, &src).unwrap();
    assert!(c.passed, "{:?}", c.failures());
    for t in ["B7", "B8", "J1", "J2", "X0", "X1", "X2", "X3", "X4", "X5", "C6", "C7", "C8"] {
        tag(&c, t);
    }
    assert_eq!(tag(&c, "X2"), (0, 0));
    assert_eq!(output(&c, "D1").graph, "K=1,4,5");
    assert_eq!(output(&c, "D2").graph, "K=5,5");
    assert_eq!(output(&c, "D3").graph, "K=5,7");
    assert_eq!(c.bound.as_ref().unwrap().value, Some(14));
    assert_eq!(zarankiewicz(6, 5) - 12, 12);
}

fn run_seeds(sizes: [usize; 4], t: &str) {
    let g = complete_multipartite(&sizes).unwrap();
    let src = CrSource::registry();
    for seed in 0..50 {
        let d = random_geometric_drawing(&g, seed).unwrap();
        let c = match t {
            "B6" => thm1_pipeline(&d, &src),
            "B11" => thm2_pipeline(&d, &src),
            _ => thm3_pipeline(&d, &src),
        }
        .unwrap();
        assert!(c.passed, "seed {seed}: {:?}", c.failures());
        tag(&c, t);
        assert!(c.instance.as_ref().unwrap().holds, "seed {seed}");
        if let Some(v) = c.bound.as_ref().unwrap().value {
            assert!(v <= d.crossings_total() as i64, "seed {seed}: bound {v} above {}", d.crossings_total());
        }
    }
}

#[test]
fn even_even_random_drawings() {
    run_seeds([1, 1, 2, 2], "B6");
}

#[test]
fn odd_odd_random_drawings() {
    run_seeds([1, 1, 3, 3], "B11");
}

#[test]
fn even_odd_random_drawings() {
    run_seeds([1, 1, 2, 3], "C8");
}

#[test]
fn wrong_parity_and_family() {
    let src = CrSource::registry();
    let d = cylinder_k11mn(3, 4).unwrap();
    assert_eq!(thm1_pipeline(&d, &src).unwrap_err().code(), "WRONG_PARITY");
    assert_eq!(thm2_pipeline(&cylinder_k11mn(4, 4).unwrap(), &src).unwrap_err().code(), "WRONG_PARITY");
    assert_eq!(thm3_pipeline(&cylinder_k11mn(3, 3).unwrap(), &src).unwrap_err().code(), "WRONG_PARITY");
    let kmn = zarankiewicz_drawing(3, 4).unwrap();
    assert_eq!(thm1_pipeline(&kmn, &src).unwrap_err().code(), "WRONG_FAMILY");
    assert_eq!(lemma3_check(&kmn, 0).unwrap_err().code(), "WRONG_FAMILY");
}

#[test]
fn edge_ox_bound() {
    let d = cylinder_k11mn(3, 3).unwrap();
    let r = lemma3_check(&d, 7).unwrap();
    assert!(r.equality && r.inequality);
    assert_eq!(r.slack, d.crossings_total() as i64 - 7 - r.ox_rest);
    let r = lemma3_check(&d, 0).unwrap();
    assert!(r.inequality);
    let g = complete_multipartite(&[1, 1, 2, 2]).unwrap();
    for seed in 0..20 {
        let r = lemma3_check(&random_geometric_drawing(&g, seed).unwrap(), 0).unwrap();
        assert!(r.equality && r.inequality);
    }
}

#[test]
fn certificate_json_and_digests() {
    let d = cylinder_k11mn(2, 2).unwrap();
    let c = thm1_pipeline(&d, &CrSource::registry()).unwrap();
    assert_eq!(c.input.sha256, drawing_digest(&d));
    assert_eq!(c.input.sha256.len(), 64);
    let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    assert_eq!(v["pipeline"], "thm1");
    assert!(v["equalities"].as_array().unwrap().iter().all(|e| e["pass"] == true));
    assert!(v["equalities"][0]["predicted"].is_i64());
    assert!(v["bound"]["statement"].as_str().unwrap().starts_with("cr(K_{1,1,2,2})"));
    assert!(v["bound"]["value"].is_i64());
    let again = thm1_pipeline(&d, &CrSource::registry()).unwrap();
    assert_eq!(c, again);
    let aliases: Vec<(&str, &str)> = c.aliases.iter().map(|a| (a.name.as_str(), a.vertex.as_str())).collect();
    assert!(aliases.contains(&("z0", "x")) && aliases.contains(&("y0", "o")));
}
