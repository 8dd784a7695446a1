//! The nine acceptance criteria, each evaluated in exact arithmetic and reported on one line.

use std::path::PathBuf;

use double_algebra::antipode::solve_antipode;
use double_algebra::cli::{cmd_report, InstanceFile};
use double_algebra::double::{Corner, DoubleAlgebra};
use double_algebra::families::{
    commutative_double, double_category_double, extension_antipode_report, frobenius_extension_double, groupoid_double,
    hopf_group_double, matrix_algebra, matrix_double, matrix_double_over, matrix_transpose_oracle, wha_double,
    DoubleCategory, FrobeniusExtension, Group, Groupoid, WeakHopfData,
};
use double_algebra::frobenius::{regularity_witness, solve_dual_basis, Frobenius, MaschkeReport};
use double_algebra::linalg::Matrix;
use double_algebra::scalar::{vector, Field};
use double_algebra::structure::{
    check_distributivity, comultiplication_multiplicativity, extract_hopf_algebroids, hgd_round_trip, takeuchi_double,
    DISTRIBUTIVE_CORNERS,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

/// Every valid instance file of the golden corpus, by file stem.
fn corpus() -> Vec<(String, DoubleAlgebra)> {
    let mut out = Vec::new();
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    for path in paths {
        let Ok(file) = InstanceFile::load(&path) else { continue };
        let d = file.to_algebra(None).unwrap();
        if d.check_axioms().passed() {
            out.push((path.file_stem().unwrap().to_string_lossy().into_owned(), d));
        }
    }
    out
}

fn q() -> Field {
    Field::Rational
}

fn group_instances() -> Vec<(&'static str, Group)> {
    vec![("Z2", Group::cyclic(2)), ("Z3", Group::cyclic(3)), ("S3", Group::symmetric3())]
}

fn groupoid_instances() -> Vec<(&'static str, Groupoid)> {
    vec![
        ("trivial", Groupoid::from_group(&Group::trivial())),
        ("Z2", Groupoid::from_group(&Group::cyclic(2))),
        ("pair(3)", Groupoid::pair(3)),
        ("Z2 ⊔ point", Groupoid::from_group(&Group::cyclic(2)).disjoint_union(&Groupoid::from_group(&Group::trivial()))),
    ]
}

fn axiom_suite() -> Outcome {
    for n in 1..=3 {
        ensure(matrix_double(n).unwrap().check_axioms().passed(), || format!("matrix_double({n}) fails"))?;
    }
    for (name, g) in groupoid_instances() {
        ensure(groupoid_double(&g, q()).unwrap().check_axioms().passed(), || format!("groupoid {name} fails"))?;
    }
    // M_2 with both products equal to matrix multiplication is not a double algebra.
    match commutative_double(matrix_algebra(q(), 2).unwrap()) {
        Ok(_) => Err("M_2 with ∘ = ⋆ was accepted".into()),
        Err(e) => ensure(e.to_string().contains("fails at"), || format!("no witness in rejection: {e}")),
    }
}

fn base_suite() -> Outcome {
    for (name, d) in corpus() {
        let rep = d.check_base_lemmas();
        ensure(rep.passed(), || format!("{name}: {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
        let nondegenerate = Corner::ALL.iter().all(|&c| d.form_nondegenerate(c));
        if nondegenerate {
            for c in Corner::ALL {
                let ispace = d.integral_space(c);
                ensure(ispace.equals_base, || format!("{name}: I_{c} differs from its base ideal"))?;
            }
        }
    }
    Ok(())
}

fn frobenius_galois_suite() -> Outcome {
    let mut instances: Vec<(String, DoubleAlgebra, Option<i64>)> = Vec::new();
    for n in 2..=3 {
        instances.push((format!("matrix_double({n})"), matrix_double(n).unwrap(), Some(n as i64)));
    }
    for (name, g) in groupoid_instances() {
        instances.push((format!("groupoid {name}"), groupoid_double(&g, q()).unwrap(), None));
    }
    for (name, g) in group_instances() {
        instances.push((format!("hopf_group {name}"), hopf_group_double(&g, q()).unwrap(), Some(g.order() as i64)));
    }
    for (name, d, scale) in instances {
        let fr = Frobenius::new(&d).map_err(|e| format!("{name}: {e}"))?;
        for k in 1..=8 {
            ensure(fr.galois_identity_holds(k), || format!("{name}: G{k} fails"))?;
        }
        let rep = fr.galois_report();
        ensure(rep.passed(), || format!("{name}: Galois maps are not mutually inverse"))?;
        if let Some(m) = scale {
            let ind_l = &fr.index_elements()[0];
            let expected = vector::scale(&q().from_i64(m), d.e());
            ensure(ind_l.corner == Corner::Left && ind_l.from_dual_basis == expected, || {
                format!("{name}: Ind Φ_L = {}, expected {m}e", d.render(&ind_l.from_dual_basis))
            })?;
        }
    }
    Ok(())
}

fn maschke_suite() -> Outcome {
    let mut distributive: Vec<(String, DoubleAlgebra, Option<i64>)> = Vec::new();
    for n in 1..=3 {
        distributive.push((format!("matrix_double({n})"), matrix_double(n).unwrap(), Some(n as i64)));
    }
    for (name, g) in group_instances() {
        distributive.push((format!("hopf_group {name}"), hopf_group_double(&g, q()).unwrap(), Some(g.order() as i64)));
    }
    for (name, d) in corpus() {
        distributive.push((name, d, None));
    }
    for (name, d, order) in distributive {
        let Ok(fr) = Frobenius::new(&d) else { continue };
        if !check_distributivity(&fr).distributive() {
            continue;
        }
        let j = regularity_witness(&d).ok_or_else(|| format!("{name}: i is not regular"))?;
        if let Some(m) = order {
            let expected = vector::scale(&q().fraction(1, m), d.e());
            ensure(j == expected, || format!("{name}: j = {}, expected e/{m}", d.render(&j)))?;
        }
        let rep = MaschkeReport::new(&d);
        ensure(rep.vertical.all_agree() && rep.vertical.regular.is_some(), || format!("{name}: Maschke conditions disagree"))?;
    }
    let f2 = Field::prime(2).unwrap();
    let d = hopf_group_double(&Group::cyclic(2), f2).unwrap();
    let rep = MaschkeReport::new(&d);
    let flags = rep.vertical.decided();
    ensure(flags.iter().all(|(_, b)| !b), || format!("Z_2 over F_2: {flags:?}"))?;
    ensure(regularity_witness(&d).is_none(), || "Z_2 over F_2: i is regular".into())
}

fn antipode_suite() -> Outcome {
    for n in 1..=3 {
        let d = matrix_double(n).unwrap();
        let s = solve_antipode(&d).unwrap().ok_or_else(|| format!("matrix_double({n}) has no antipode"))?;
        let oracle = Matrix::from_columns(q(), n * n, &matrix_transpose_oracle(q(), n));
        ensure(s.matrix == oracle, || format!("matrix_double({n}): S is not the transpose"))?;
    }
    for (name, g) in groupoid_instances() {
        let d = groupoid_double(&g, q()).unwrap();
        let s = solve_antipode(&d).unwrap().ok_or_else(|| format!("groupoid {name} has no antipode"))?;
        ensure(s.matrix == g.inversion_matrix(q()), || format!("groupoid {name}: S is not inversion"))?;
    }
    for (name, g) in group_instances() {
        let d = hopf_group_double(&g, q()).unwrap();
        let s = solve_antipode(&d).unwrap().ok_or_else(|| format!("group {name} has no antipode"))?;
        let gd = Groupoid::from_group(&g);
        ensure(s.matrix == gd.inversion_matrix(q()), || format!("group {name}: S is not inversion"))?;
    }
    for (name, d) in corpus() {
        let Ok(fr) = Frobenius::new(&d) else { continue };
        let (rep, _) = fr.antipode_report().map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.passed(), || format!("{name}: {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
    }
    let extensions = [
        ("k ⊂ M_2 trace", FrobeniusExtension::matrix_trace(q(), 2).unwrap()),
        ("diagonal ⊂ M_2", FrobeniusExtension::matrix_diagonal(q(), 2).unwrap()),
        ("kS_2 ⊂ kS_3", FrobeniusExtension::group_subgroup(&Group::symmetric3(), &[0, 1], q()).unwrap()),
    ];
    for (name, ext) in extensions {
        let dbl = frobenius_extension_double(&ext).unwrap();
        let s = solve_antipode(&dbl.algebra).unwrap().ok_or_else(|| format!("{name}: no antipode"))?;
        ensure(s.matrix == dbl.antipode, || format!("{name}: printed S differs from the solver"))?;
        ensure(extension_antipode_report(&dbl).passed(), || format!("{name}: printed S fails its identities"))?;
    }
    Ok(())
}

fn distributivity_hopf_suite() -> Outcome {
    for (name, d) in corpus() {
        let Ok(fr) = Frobenius::new(&d) else { continue };
        let distributive = check_distributivity(&fr).distributive();
        let multiplicative = DISTRIBUTIVE_CORNERS.iter().all(|&c| comultiplication_multiplicativity(&fr, c).multiplicative);
        let antipode = solve_antipode(&d).unwrap().is_some();
        ensure(distributive == (multiplicative && antipode), || {
            format!("{name}: distributive={distributive} multiplicative={multiplicative} antipode={antipode}")
        })?;
        if distributive {
            let h = extract_hopf_algebroids(&fr).map_err(|e| format!("{name}: {e}"))?;
            ensure(h.report.passed(), || format!("{name}: {:?}", h.report.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
            let rt = hgd_round_trip(&fr).map_err(|e| format!("{name}: {e}"))?;
            ensure(rt.passed() && rt.checks.len() == 2, || format!("{name}: round trip fails"))?;
        }
    }
    Ok(())
}

fn construction_cross_checks() -> Outcome {
    for n in 1..=3 {
        let g = groupoid_double(&Groupoid::pair(n), q()).unwrap();
        let m = matrix_double_over(q(), n).unwrap();
        ensure(g.vertical() == m.vertical() && g.horizontal() == m.horizontal(), || format!("pair({n}) ≠ matrix({n})"))?;
    }
    for (name, g) in group_instances() {
        let w = wha_double(&WeakHopfData::group(&g, q()).unwrap()).map_err(|e| format!("{name}: {e}"))?;
        let h = hopf_group_double(&g, q()).unwrap();
        ensure(w.algebra.vertical() == h.vertical() && w.algebra.horizontal() == h.horizontal(), || {
            format!("wha_double({name}) ≠ hopf_group_double({name})")
        })?;
        ensure(w.report.passed(), || format!("wha_double({name}) formulas fail"))?;
    }
    for (name, d) in [("matrix_double(2)", matrix_double(2).unwrap()), ("hopf_group(Z_2)", hopf_group_double(&Group::cyclic(2), q()).unwrap())] {
        let td = takeuchi_double(&Frobenius::new(&d).unwrap()).map_err(|e| format!("{name}: {e}"))?;
        ensure(td.algebra.check_axioms().passed(), || format!("Takeuchi product of {name} fails the axioms"))?;
    }
    Ok(())
}

fn double_category_criterion() -> Outcome {
    const TOTAL: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];
    const ORDER: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
    let inputs = [
        ("trivial", DoubleCategory::trivial()),
        ("squares in pair(2)", DoubleCategory::from_preorders(2, &TOTAL, &TOTAL).unwrap()),
        ("horizontal order", DoubleCategory::from_preorders(2, &ORDER, &TOTAL).unwrap()),
        ("both orders", DoubleCategory::from_preorders(2, &ORDER, &ORDER).unwrap()),
    ];
    let mut accepted = 0;
    let mut rejected = 0;
    for (name, dc) in inputs {
        let out = double_category_double(&dc, q()).unwrap();
        let axioms = out.axioms.passed();
        ensure(axioms == out.groupoids, || format!("{name}: axioms={axioms} groupoids={}", out.groupoids))?;
        if axioms {
            accepted += 1;
        } else {
            rejected += 1;
        }
    }
    ensure(accepted >= 1 && rejected >= 1, || "inputs do not exercise both verdicts".into())
}

fn determinism() -> Outcome {
    for name in ["matrix2", "hopf_s3", "frobext_s2_s3", "broken_a1"] {
        let file = InstanceFile::load(&corpus_dir().join(format!("{name}.json"))).unwrap();
        let first = cmd_report(&file, false, None).unwrap();
        let second = cmd_report(&file, false, None).unwrap();
        ensure(first == second, || format!("{name}: two reports differ"))?;
    }
    for (name, d) in corpus() {
        for c in Corner::ALL {
            let a = solve_dual_basis(&d, c).map(|db| db.pairs);
            let b = solve_dual_basis(&d, c).map(|db| db.pairs);
            ensure(a == b, || format!("{name}: dual basis of Φ_{c} is not reproducible"))?;
        }
        let a = solve_antipode(&d).unwrap().map(|s| s.matrix);
        let b = solve_antipode(&d).unwrap().map(|s| s.matrix);
        ensure(a == b, || format!("{name}: antipode is not reproducible"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("axiom suite", axiom_suite),
        ("base-map lemmas on the corpus", base_suite),
        ("Frobenius and Galois suite", frobenius_galois_suite),
        ("Maschke suite", maschke_suite),
        ("antipode suite", antipode_suite),
        ("distributivity and Hopf suite", distributivity_hopf_suite),
        ("construction cross-checks", construction_cross_checks),
        ("double-category criterion", double_category_criterion),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: PASS {name}", k + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
