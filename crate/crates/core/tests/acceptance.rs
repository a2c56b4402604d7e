//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always print.

use std::collections::BTreeSet;
use std::time::Instant;

use gaudinlab::commutant::verdict::CYCLIC_TRIALS;
use gaudinlab::commutant::{perfect_integrability_verdict, run_counterexample, seeded_rng, ProbeVerdict, Verdict};
use gaudinlab::exact::matrix::Matrix;
use gaudinlab::exact::scalar::{self, Scalar};
use gaudinlab::gaudin::model::twist_element;
use gaudinlab::gaudin::{regular_cartan_element, ChainKind, GaudinConfig, GaudinModel};
use gaudinlab::hw::build_irrep;
use gaudinlab::lie::{ChevalleyAlgebra, FormNormalization, InvariantForm, LieType};
use gaudinlab::report::cache::module_json_text;
use gaudinlab::report::run::text_digest;
use gaudinlab::report::{run_config, ModuleCache, RunOptions};

use serde_json::json;

struct Case {
    label: String,
    config: GaudinConfig,
}

fn config(t: &str, r: usize, weights: &[Vec<i64>], mode: &str, mu_h: &[Scalar], mu_f: &[(&str, &str)], cartan: Option<bool>) -> GaudinConfig {
    let z: Vec<String> = ["1", "3", "-1/2", "5"][..weights.len()].iter().map(|s| s.to_string()).collect();
    let mut v = json!({
        "algebra": {"type": t, "rank": r},
        "weights": weights,
        "z": z,
        "mode": mode,
        "mu": {
            "h": mu_h.iter().map(scalar::format).collect::<Vec<_>>(),
            "f": mu_f.iter().map(|(k, x)| (k.to_string(), json!(x))).collect::<serde_json::Map<_, _>>(),
        },
    });
    if let Some(c) = cartan {
        v["include_cartan"] = json!(c);
    }
    GaudinConfig::from_json_str(&v.to_string()).expect("fixture config parses")
}

fn regular_h(t: LieType, r: usize) -> Vec<Scalar> {
    let alg = ChevalleyAlgebra::build(t, r).unwrap();
    let mu = regular_cartan_element(&alg);
    (0..r).map(|i| mu[alg.h(i)].clone()).collect()
}

/// The commutativity / residue grid: both μ = 0 and a regular μ ∈ h.
fn grid() -> Vec<Case> {
    let families: [(&str, LieType, usize, Vec<Vec<Vec<i64>>>); 4] = [
        ("A", LieType::A, 1, vec![vec![vec![2], vec![1]], vec![vec![1], vec![1], vec![2]]]),
        ("A", LieType::A, 2, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![1, 0], vec![0, 1]]]),
        ("B", LieType::B, 2, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1], vec![1, 0]]]),
        ("G", LieType::G, 2, vec![vec![vec![1, 0], vec![1, 0]], vec![vec![1, 0], vec![1, 0], vec![0, 0]]]),
    ];
    let mut out = Vec::new();
    for (t, lt, r, weight_sets) in families {
        for w in weight_sets {
            out.push(Case {
                label: format!("{t}{r} {w:?} mu=0"),
                config: config(t, r, &w, "periodic", &[], &[], None),
            });
            out.push(Case {
                label: format!("{t}{r} {w:?} mu=regular"),
                config: config(t, r, &w, "regular", &regular_h(lt, r), &[], None),
            });
        }
    }
    out
}

fn model(c: &GaudinConfig) -> GaudinModel {
    GaudinModel::build(c.validate().expect("fixture validates")).expect("model builds")
}

fn verdict(m: &GaudinModel) -> Verdict {
    perfect_integrability_verdict(m, String::new(), 0, None, &mut seeded_rng(0)).expect("verdict runs")
}

fn commutativity_ok(m: &GaudinModel) -> bool {
    let hs = &m.hamiltonians;
    (0..hs.len()).all(|a| (a + 1..hs.len()).all(|b| hs[a].commutator(&hs[b]).is_zero()))
}

fn shapovalov_ok(m: &GaudinModel) -> bool {
    let g = m.tensor.gram();
    m.hamiltonians.iter().all(|h| g.matmul(h) == h.transpose().matmul(&g))
}

fn residue_ok(m: &GaudinModel) -> bool {
    let n = m.tensor.dim();
    let mut sum = Matrix::zeros(n, n);
    for h in &m.hamiltonians {
        sum = &sum + h;
    }
    let two = scalar::int(2);
    sum == m.tensor.diagonal(&twist_element(&m.instance))
        && m.casimir_scalars().iter().enumerate().all(|(a, c)| {
            c.as_ref().is_some_and(|c| m.segal_sugawara.coefficient(a, 2) == Matrix::scalar(n, c))
                && m.segal_sugawara.coefficient(a, 1) == m.hamiltonians[a].scale(&two)
        })
}

fn diagonal_ok(m: &GaudinModel) -> bool {
    let alg = &m.instance.algebra;
    (0..alg.dim()).all(|x| {
        let d = m.tensor.diagonal_basis(x);
        m.hamiltonians.iter().all(|h| h.commutator(&d).is_zero())
    })
}

fn report(n: usize, ok: bool, detail: &str, failures: &mut Vec<usize>) {
    println!("criterion {n:>2}: {}  {detail}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        failures.push(n);
    }
}

fn main() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut certified_verdicts: Vec<(String, Verdict)> = Vec::new();
    let record = |label: &str, v: &Verdict, store: &mut Vec<(String, Verdict)>| {
        if v.frobenius.certified {
            store.push((label.to_string(), v.clone()));
        }
    };

    // 1-4 on the grid.
    let cases = grid();
    let models: Vec<(String, bool, GaudinModel)> = cases
        .iter()
        .map(|c| (c.label.clone(), c.config.mu.h.is_empty(), model(&c.config)))
        .collect();
    let max_dim = models.iter().map(|(_, _, m)| m.tensor.dim()).max().unwrap_or(0);
    let bad: Vec<&str> = models.iter().filter(|(_, _, m)| !commutativity_ok(m)).map(|(l, _, _)| l.as_str()).collect();
    report(1, bad.is_empty(), &format!("[H_a, H_b] = 0 on {} instances (max dim V = {max_dim}) {bad:?}", models.len()), &mut failures);
    let bad: Vec<&str> = models.iter().filter(|(_, _, m)| !shapovalov_ok(m)).map(|(l, _, _)| l.as_str()).collect();
    report(2, bad.is_empty(), &format!("G H_a = H_a^T G on {} instances {bad:?}", models.len()), &mut failures);
    let bad: Vec<&str> = models.iter().filter(|(_, _, m)| !residue_ok(m)).map(|(l, _, _)| l.as_str()).collect();
    report(3, bad.is_empty(), &format!("sum H_a = D(mu), S(u) pole data on {} instances {bad:?}", models.len()), &mut failures);
    let zero_mu: Vec<_> = models.iter().filter(|(_, zero, _)| *zero).collect();
    let bad: Vec<&str> = zero_mu.iter().filter(|(_, _, m)| !diagonal_ok(m)).map(|(l, _, _)| l.as_str()).collect();
    report(4, bad.is_empty(), &format!("[H_a, D(x)] = 0 on {} mu = 0 instances {bad:?}", zero_mu.len()), &mut failures);
    for (label, zero, m) in &models {
        if *zero || m.tensor.dim() <= 30 {
            let v = verdict(m);
            record(label, &v, &mut certified_verdicts);
        }
    }

    // 5: the sl2 family.
    let mut c5 = Vec::new();
    for w in [vec![vec![1], vec![1]], vec![vec![1], vec![1], vec![1]], vec![vec![2], vec![1]]] {
        for regular in [false, true] {
            let c = if regular {
                config("A", 1, &w, "regular", &regular_h(LieType::A, 1), &[], None)
            } else {
                config("A", 1, &w, "periodic", &[], &[], None)
            };
            let m = model(&c);
            let v = verdict(&m);
            let expected_kind = if regular { ChainKind::Full } else { ChainKind::Singular };
            let ok = v.chain_space == expected_kind
                && v.cyclic.found
                && v.frobenius.method == "form"
                && v.dims.algebra == v.dims.m
                && v.eigen.all_eigenspaces_one
                && v.all_checks_pass;
            let label = format!("{w:?} {}", if regular { "regular" } else { "mu=0" });
            c5.push((format!("{label}: M={} A={}", v.dims.m, v.dims.algebra), ok));
            record(&label, &v, &mut certified_verdicts);
        }
    }
    report(
        5,
        c5.iter().all(|(_, ok)| *ok),
        &c5.iter().map(|(d, ok)| format!("{d}{}", if *ok { "" } else { " (fail)" })).collect::<Vec<_>>().join("; "),
        &mut failures,
    );

    // 6: rank-2 report.
    let mut lines = Vec::new();
    let mut ok6 = true;
    for (mode, mu) in [("periodic", vec![]), ("regular", regular_h(LieType::A, 2))] {
        let mut dims = Vec::new();
        for cartan in [false, true] {
            let c = config("A", 2, &[vec![1, 0], vec![0, 1]], mode, &mu, &[], Some(cartan));
            let m = model(&c);
            let v = verdict(&m);
            ok6 &= ["commutativity", "shapovalov", "residue", "diagonal"]
                .iter()
                .all(|name| v.check(name).is_none_or(|c| !c.failed_required()));
            dims.push(v.dims.algebra);
            if cartan {
                lines.push(format!("{mode}: M={} quadratic={} +cartan={}", v.dims.m, dims[0], dims[1]));
            }
            record(&format!("A2 (w1,w2) {mode} cartan={cartan}"), &v, &mut certified_verdicts);
        }
    }
    report(6, ok6, &lines.join("; "), &mut failures);

    // 7: the counterexample.
    let ce = run_counterexample(CYCLIC_TRIALS, &mut seeded_rng(0)).unwrap();
    let ok7 = ce.pass && ce.algebra_dim == 3 && ce.lambda_determinant == "0" && ce.invariant_forms_all_degenerate == Some(true);
    report(
        7,
        ok7,
        &format!(
            "cyclic={} frobenius={} eigenspace={} generalized={} dim={}",
            ce.cyclic_holds, !ce.not_frobenius_holds, ce.trivial_eigenspace_dim, ce.trivial_generalized_dim, ce.algebra_dim
        ),
        &mut failures,
    );

    // 9: general-μ explorer.
    let mut lines9 = Vec::new();
    let mut ok9 = true;
    for (name, h) in [("f1", vec![]), ("f1+h1+2h2", vec![scalar::int(1), scalar::int(2)])] {
        let c = config("A", 2, &[vec![1, 0], vec![0, 1]], "general", &h, &[("f1", "1")], None);
        let m = model(&c);
        let invariant = m.hamiltonians.iter().all(|hm| m.chain.space.restrict(hm).is_ok());
        let v = verdict(&m);
        let certs = v.cyclic.found == v.cyclic.vector.is_some()
            && v.check("chain_invariance").is_some_and(|c| !c.failed_required());
        ok9 &= invariant && certs;
        lines9.push(format!(
            "mu={name}: annihilators={} M={} A={} cyclic={} frobenius={} ({}) integrable={}",
            m.chain.annihilators.len(),
            v.dims.m,
            v.dims.algebra,
            v.cyclic.found,
            v.frobenius.certified,
            v.frobenius.method,
            v.perfectly_integrable
        ));
        record(&format!("A2 general {name}"), &v, &mut certified_verdicts);
    }
    report(9, ok9, &lines9.join("; "), &mut failures);

    // 8: cross-implications on every certified instance, plus the contrapositive.
    let bad: Vec<&str> = certified_verdicts
        .iter()
        .filter(|(_, v)| {
            !(v.cyclic.found && v.dims.algebra == v.dims.m && v.eigen.all_eigenspaces_one && v.eigen.blocks_consistent
                && v.frobenius.probe.is_frobenius() == Some(true))
        })
        .map(|(l, _)| l.as_str())
        .collect();
    let contrapositive = ce.trivial_eigenspace_dim == "2" && matches!(ce.probe, ProbeVerdict::NotFrobenius { .. });
    report(
        8,
        bad.is_empty() && contrapositive && !certified_verdicts.is_empty(),
        &format!("{} certified instances consistent {bad:?}; counterexample contrapositive {contrapositive}", certified_verdicts.len()),
        &mut failures,
    );

    // 10: infrastructure.
    let dir = tempfile::tempdir().unwrap();
    let mut determinism = true;
    for c in [&cases[0].config, &cases[3].config] {
        let runs: Vec<String> = (0..2)
            .map(|k| {
                let opts = RunOptions {
                    seed: 11,
                    cache_dir: dir.path().join(format!("cache{k}")),
                    out: Some(dir.path().join(format!("out{k}"))),
                    ..RunOptions::default()
                };
                run_config(c.clone(), None, &opts).unwrap();
                std::fs::read_to_string(dir.path().join(format!("out{k}/verdict.json"))).unwrap()
            })
            .collect();
        determinism &= runs[0] == runs[1];
    }
    let mut built: BTreeSet<(String, usize, Vec<i64>)> = BTreeSet::new();
    for c in &cases {
        for w in &c.config.weights {
            built.insert((format!("{:?}", c.config.algebra.lie_type), c.config.algebra.rank, w.clone()));
        }
    }
    let extra: [(LieType, usize, Vec<i64>); 6] = [
        (LieType::A, 3, vec![1, 0, 1]),
        (LieType::B, 3, vec![0, 0, 1]),
        (LieType::C, 3, vec![0, 1, 0]),
        (LieType::D, 4, vec![0, 0, 0, 1]),
        (LieType::F, 4, vec![0, 0, 0, 1]),
        (LieType::E, 6, vec![1, 0, 0, 0, 0, 0]),
    ];
    let mut cache = ModuleCache::new(dir.path().join("soundness"));
    let (mut weyl_ok, mut cache_ok, mut algebra_ok, mut irreps, mut algebras) = (true, true, true, 0, BTreeSet::new());
    let types: Vec<(LieType, usize, Vec<i64>)> = built
        .iter()
        .map(|(t, r, w)| (t.parse::<LieType>().unwrap(), *r, w.clone()))
        .chain(extra)
        .collect();
    for (t, r, w) in &types {
        let alg = ChevalleyAlgebra::build(*t, *r).unwrap();
        if algebras.insert((format!("{t:?}"), *r)) {
            algebra_ok &= alg.jacobi_defects() == 0 && alg.serre_defects() == 0 && alg.antisymmetry_defects() == 0;
        }
        for norm in [FormNormalization::Killing, FormNormalization::Normalized] {
            let form = InvariantForm::new(&alg, norm).unwrap();
            let cold = build_irrep(&alg, w, 400).unwrap();
            irreps += 1;
            weyl_ok &= alg.root_system().weyl_dimension(w).unwrap() == scalar::int(cold.dim() as i64)
                && cold.representation_defects(&alg) == 0;
            let cold_digest = text_digest(&module_json_text(&cold, &alg, &form).unwrap());
            let (first, _, _) = cache.load_or_build(&alg, &form, w, 400).unwrap();
            let (hit, _, was_hit) = cache.load_or_build(&alg, &form, w, 400).unwrap();
            cache_ok &= was_hit
                && text_digest(&module_json_text(&first, &alg, &form).unwrap()) == cold_digest
                && text_digest(&module_json_text(&hit, &alg, &form).unwrap()) == cold_digest;
        }
    }
    report(
        10,
        determinism && cache_ok && weyl_ok && algebra_ok,
        &format!(
            "determinism={determinism} cache={cache_ok} weyl={weyl_ok} ({irreps} irreps) jacobi/serre={algebra_ok} ({} algebras)",
            algebras.len()
        ),
        &mut failures,
    );

    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if !failures.is_empty() {
        println!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
