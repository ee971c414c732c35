//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! The bundled instances are the transformation monoids T_2, T_3, the
//! Temperley–Lieb categories TL_2 and TL_3 at δ ∈ {1, 2, 3}, the Brauer
//! categories B_2 and B_3 at δ ∈ {1, 2}, and the partition category P_2 at
//! δ = 1. All arithmetic is exact; every tolerance below is zero.

use qhcat::algebra::CategoryAlgebra;
use qhcat::cocycle::Cocycle;
use qhcat::exactla::{rat, Subspace};
use qhcat::generators::{self, GeneratorError};
use qhcat::green::{self, JClassDecomposition, LocalData, OrderPolicy};
use qhcat::heredity::{self, PipelineFailure};
use qhcat::modrep::{self, CoverData, ModOpts, StandardFamily};
use std::sync::OnceLock;
use std::time::Instant;

struct Bundled {
    name: String,
    category: qhcat::category::FiniteCategory,
    cocycle: Cocycle,
}

fn bundled() -> Vec<Bundled> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let c = generators::full_transformation_monoid(n).unwrap();
        let a = Cocycle::trivial(&c);
        out.push(Bundled {
            name: format!("T_{}", n),
            category: c,
            cocycle: a,
        });
    }
    for n in [2usize, 3] {
        for delta in [1i64, 2, 3] {
            let d = generators::temperley_lieb(n, rat(delta)).unwrap();
            out.push(Bundled {
                name: format!("TL_{}(d={})", n, delta),
                category: d.category,
                cocycle: d.cocycle,
            });
        }
    }
    for n in [2usize, 3] {
        for delta in [1i64, 2] {
            let d = generators::brauer(n, rat(delta)).unwrap();
            out.push(Bundled {
                name: format!("B_{}(d={})", n, delta),
                category: d.category,
                cocycle: d.cocycle,
            });
        }
    }
    let d = generators::partition_category(2, rat(1)).unwrap();
    out.push(Bundled {
        name: "P_2(d=1)".to_string(),
        category: d.category,
        cocycle: d.cocycle,
    });
    out
}

struct FullRun {
    name: String,
    alg: CategoryAlgebra,
    jdec: JClassDecomposition,
    local: LocalData,
    radical: Subspace,
    family: StandardFamily,
    covers: Vec<CoverData>,
}

fn full_runs() -> &'static Vec<FullRun> {
    static RUNS: OnceLock<Vec<FullRun>> = OnceLock::new();
    RUNS.get_or_init(|| {
        bundled()
            .into_iter()
            .map(|b| {
                let opts = ModOpts::default();
                let jdec = green::j_decompose(&b.category, OrderPolicy::default()).unwrap();
                let local = green::local_data(&b.category, &jdec).unwrap();
                let alg = CategoryAlgebra::new(b.category, b.cocycle);
                let radical = alg.radical_corner_criterion(&jdec, &local);
                let family =
                    modrep::standard_modules(&alg, &jdec, &local, &radical, &opts).unwrap();
                let covers =
                    modrep::projective_covers(&alg, &jdec, &family, &radical, &opts).unwrap();
                FullRun {
                    name: b.name,
                    alg,
                    jdec,
                    local,
                    radical,
                    family,
                    covers,
                }
            })
            .collect()
    })
}

#[test]
fn criterion_01_radical_cross_validation() {
    let start = Instant::now();
    for b in bundled() {
        let jdec = green::j_decompose(&b.category, OrderPolicy::default()).unwrap();
        let local = green::local_data(&b.category, &jdec).unwrap();
        let alg = CategoryAlgebra::new(b.category, b.cocycle);
        let corner = alg.radical_corner_criterion(&jdec, &local);
        let trace = alg.radical_trace_form();
        assert_eq!(
            corner, trace,
            "[criterion 1] FAIL: radical methods disagree on {}",
            b.name
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() <= 60,
        "[criterion 1] FAIL: took {:?} (> 60 s)",
        elapsed
    );
    println!(
        "[criterion 1] PASS: corner-criterion radical equals trace-form radical on all bundled algebras ({:.2?})",
        elapsed
    );
}

#[test]
fn criterion_02_quasi_heredity_certificates() {
    for b in bundled() {
        let cert = heredity::certify(
            &b.category,
            &b.cocycle,
            OrderPolicy::default(),
            &ModOpts::default(),
        );
        assert!(
            cert.pass,
            "[criterion 2] FAIL: certificate for {} did not pass: {:?}",
            b.name, cert.failure
        );
        if b.name == "TL_3(d=1)" {
            assert!(
                cert.radical_dim.unwrap() > 0,
                "[criterion 2] FAIL: TL_3(δ=1) should have nonzero radical"
            );
            assert!(cert.layers.iter().all(|l| l.ok()));
        }
    }
    println!("[criterion 2] PASS: certify succeeds on every bundled split category, including non-semisimple TL_3(δ=1)");
}

#[test]
fn criterion_03_negative_controls() {
    let c = generators::n3_monoid();
    let cert = heredity::certify(
        &c,
        &Cocycle::trivial(&c),
        OrderPolicy::default(),
        &ModOpts::default(),
    );
    assert!(!cert.pass, "[criterion 3] FAIL: N3 must not certify");
    match cert.failure {
        Some(PipelineFailure::NotSplit {
            ref witness_name, ..
        }) => {
            assert_eq!(
                witness_name, "x",
                "[criterion 3] FAIL: expected witness x, got {}",
                witness_name
            );
        }
        ref other => panic!(
            "[criterion 3] FAIL: expected splitness failure, got {:?}",
            other
        ),
    }
    assert!(matches!(
        generators::temperley_lieb(3, rat(0)),
        Err(GeneratorError::ZeroDelta)
    ));
    assert!(matches!(
        generators::brauer(2, rat(0)),
        Err(GeneratorError::ZeroDelta)
    ));
    assert!(matches!(
        generators::partition_category(2, rat(0)),
        Err(GeneratorError::ZeroDelta)
    ));
    println!("[criterion 3] PASS: {{1,x,0}} fails at splitness with witness x; δ = 0 rejected by all diagram constructors");
}

#[test]
fn criterion_04_layer_dimension_ledger() {
    for run in full_runs() {
        let ledger = modrep::check_layer_decomposition(
            &run.alg,
            &run.jdec,
            &run.local,
            &run.family,
            &run.covers,
        )
        .unwrap();
        for row in &ledger.rows {
            assert!(
                row.dims_match,
                "[criterion 4] FAIL: {} layer {}: dim {} != predicted {}",
                run.name,
                row.layer + 1,
                row.quotient_dim,
                row.predicted_dim
            );
        }
    }
    println!(
        "[criterion 4] PASS: dim(J_i/J_i-1) = |ε_i|·Σ n_ir·dim Δ_ir on every layer of every bundled example"
    );
}

#[test]
fn criterion_05_t2_gold_run() {
    let run = full_runs().iter().find(|r| r.name == "T_2").unwrap();
    assert_eq!(run.jdec.num_classes(), 2, "[criterion 5] FAIL: J-classes");
    let simple_dims: Vec<usize> = run.family.simple.iter().map(|d| d.dim).collect();
    assert_eq!(
        simple_dims,
        vec![1, 1, 1],
        "[criterion 5] FAIL: simple dims"
    );
    let delta_dims: Vec<usize> = run.family.delta.iter().map(|d| d.dim).collect();
    assert_eq!(delta_dims, vec![2, 1, 1], "[criterion 5] FAIL: Δ dims");
    // Radical = span{c_1 − c_2}; the constant maps are morphisms 0 and 3.
    assert_eq!(run.radical.dim(), 1, "[criterion 5] FAIL: radical dim");
    assert!(
        run.radical.contains_vec(&[rat(1), rat(0), rat(0), rat(-1)]),
        "[criterion 5] FAIL: radical is not spanned by c_1 − c_2"
    );
    let dec = modrep::decomposition_matrix(&run.family, &run.covers).unwrap();
    // Unitriangular with exactly one off-diagonal 1, sitting in the Δ_const
    // row and the D_sign column (sign = swap acts by −1).
    assert_eq!(dec[0][0], 1);
    assert_eq!(dec[1], vec![0, 1, 0]);
    assert_eq!(dec[2], vec![0, 0, 1]);
    assert_eq!(dec[0][1] + dec[0][2], 1, "[criterion 5] FAIL: off-diagonal");
    let sign_col = if dec[0][1] == 1 { 1 } else { 2 };
    let swap_action = &run.family.simple[sign_col].action[1];
    assert_eq!(
        swap_action[(0, 0)],
        rat(-1),
        "[criterion 5] FAIL: off-diagonal column is not the sign module"
    );
    println!("[criterion 5] PASS: T_2 gold run (2 classes; simples 1,1,1; Δ 2,1,1; radical = <c1−c2>; off-diagonal lands in column D_sign)");
}

#[test]
fn criterion_06_counting_identities() {
    // Closed forms for the diagram families.
    for n in 1..=4 {
        let d = generators::temperley_lieb(n, rat(2)).unwrap();
        assert_eq!(
            d.category.num_morphisms(),
            generators::catalan(n),
            "[criterion 6] FAIL: TL_{} dimension",
            n
        );
    }
    for n in 1..=3 {
        let d = generators::brauer(n, rat(1)).unwrap();
        assert_eq!(
            d.category.num_morphisms(),
            generators::double_factorial_odd(n),
            "[criterion 6] FAIL: B_{} dimension",
            n
        );
    }
    for n in 1..=2 {
        let d = generators::partition_category(n, rat(1)).unwrap();
        assert_eq!(
            d.category.num_morphisms(),
            generators::bell(2 * n),
            "[criterion 6] FAIL: P_{} dimension",
            n
        );
    }
    // Regular-module audit on every bundled example.
    for run in full_runs() {
        let audit: usize = (0..run.family.len())
            .map(|a| run.family.simple[a].dim * run.covers[a].module.dim)
            .sum();
        assert_eq!(
            audit,
            run.alg.dim(),
            "[criterion 6] FAIL: Σ dim D·dim P != dim A on {}",
            run.name
        );
    }
    println!("[criterion 6] PASS: Catalan/(2n−1)!!/Bell dimensions and Σ dim D·dim P = dim A on every bundled example");
}

#[test]
fn criterion_07_standard_module_axiom_suite() {
    let targets = ["T_2", "T_3", "TL_3(d=1)", "TL_3(d=2)", "B_3(d=1)"];
    for name in targets {
        let run = full_runs().iter().find(|r| r.name == name).unwrap();
        let report = modrep::verify_standard_axioms(
            &run.alg,
            &run.jdec,
            &run.family,
            &run.covers,
            &run.radical,
            &ModOpts::default(),
        )
        .unwrap();
        assert!(
            report.ok(),
            "[criterion 7] FAIL on {}: {:?}",
            name,
            report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
        );
    }
    println!("[criterion 7] PASS: head/radical-order/filtration axioms hold on T_2, T_3, TL_3(δ=1), TL_3(δ=2), B_3(δ=1)");
}

#[test]
fn criterion_08_order_and_representative_independence() {
    let alternative = OrderPolicy {
        reverse_ties: true,
        max_id_reps: true,
    };
    for b in bundled() {
        let cert_a = heredity::certify(
            &b.category,
            &b.cocycle,
            OrderPolicy::default(),
            &ModOpts::default(),
        );
        let cert_b = heredity::certify(&b.category, &b.cocycle, alternative, &ModOpts::default());
        assert!(cert_a.pass && cert_b.pass, "[criterion 8] FAIL: {}", b.name);
        let mut dims_a = cert_a.module_dims.clone();
        let mut dims_b = cert_b.module_dims.clone();
        dims_a.sort_unstable();
        dims_b.sort_unstable();
        assert_eq!(
            dims_a, dims_b,
            "[criterion 8] FAIL: (dim Δ, dim D) multisets differ on {}",
            b.name
        );
    }
    // Q-modules built from different equivalent idempotents of one layer agree.
    for run in full_runs() {
        for i in 0..run.jdec.num_classes() {
            assert!(
                modrep::idempotent_independence_check(&run.alg, &run.jdec, i, &ModOpts::default())
                    .unwrap(),
                "[criterion 8] FAIL: representative dependence on {} layer {}",
                run.name,
                i + 1
            );
        }
    }
    println!("[criterion 8] PASS: alternative admissible orders and representatives give passing certificates with identical (dim Δ, dim D) multisets");
}

#[test]
fn criterion_09_brute_force_multiplicity_oracle() {
    for run in full_runs() {
        if run.alg.dim() > 6 {
            continue;
        }
        let reg = modrep::regular_module(&run.alg);
        let mut modules: Vec<(String, qhcat::modrep::LeftModule)> =
            vec![("regular".to_string(), reg.clone())];
        for a in 0..run.family.len() {
            modules.push((format!("Δ[{}]", a), run.family.delta[a].clone()));
        }
        for (label, m) in &modules {
            let via_covers: Vec<usize> = (0..run.family.len())
                .map(|b| modrep::composition_multiplicity(m, &run.family, &run.covers, b).unwrap())
                .collect();
            let via_socle =
                modrep::socle_series_multiplicities(m, &run.family, &run.radical).unwrap();
            assert_eq!(
                via_covers, via_socle,
                "[criterion 9] FAIL: {} {} multiplicities disagree",
                run.name, label
            );
        }
        // Jordan–Hölder additivity across the cyclic-submodule lattice.
        let lattice = modrep::cyclic_submodule_lattice(&reg, 256);
        let full = modrep::socle_series_multiplicities(&reg, &run.family, &run.radical).unwrap();
        for sub in &lattice {
            if sub.dim() == 0 || sub.dim() == reg.dim {
                continue;
            }
            let n = modrep::submodule_module(&reg, sub).unwrap();
            let q = modrep::quotient_module(&reg, sub).unwrap();
            let mn = modrep::socle_series_multiplicities(&n, &run.family, &run.radical).unwrap();
            let mq = modrep::socle_series_multiplicities(&q, &run.family, &run.radical).unwrap();
            let sum: Vec<usize> = mn.iter().zip(&mq).map(|(x, y)| x + y).collect();
            assert_eq!(
                sum, full,
                "[criterion 9] FAIL: {} lattice additivity",
                run.name
            );
        }
    }
    println!("[criterion 9] PASS: hom/projective multiplicities match the socle-series oracle and lattice additivity on all algebras of dim ≤ 6");
}

#[test]
fn criterion_10_deterministic_reports() {
    let cases: [&[&str]; 4] = [
        &["validate", "builtin:tl:3:2/1", "--json", "--seed", "17"],
        &["analyze", "builtin:brauer:3:1/1", "--json", "--seed", "17"],
        &["certify", "builtin:tl:3:1/1", "--json", "--seed", "17"],
        &["standard", "builtin:t:2", "--json", "--seed", "17"],
    ];
    for case in cases {
        let args: Vec<String> = case.iter().map(|s| s.to_string()).collect();
        let a = qhcat::cli::run(&args, None);
        let b = qhcat::cli::run(&args, None);
        assert_eq!(
            a.output, b.output,
            "[criterion 10] FAIL: report bytes differ for {:?}",
            case
        );
        assert_eq!(a.exit_code, b.exit_code);
    }
    // The installed binary behaves identically (byte-for-byte stdout).
    let exe = env!("CARGO_BIN_EXE_qhcat");
    let invoke = || {
        std::process::Command::new(exe)
            .args(["standard", "builtin:tl:3:1/1", "--json", "--seed", "99"])
            .output()
            .expect("binary runs")
    };
    let (o1, o2) = (invoke(), invoke());
    assert_eq!(
        o1.stdout, o2.stdout,
        "[criterion 10] FAIL: binary stdout differs"
    );
    assert_eq!(o1.status.code(), Some(0));
    println!("[criterion 10] PASS: same input and seed give byte-identical JSON reports (library and binary)");
}

/// The full radical for every bundled example is an ideal and nilpotent —
/// cross-brace for criteria 1 and 2.
#[test]
fn radical_structure_cross_checks() {
    for run in full_runs() {
        assert!(run.alg.is_nilpotent_subspace(&run.radical), "{}", run.name);
        let elements: Vec<qhcat::algebra::Element> = run
            .radical
            .basis_rows()
            .iter()
            .map(|r| qhcat::algebra::Element::from_vec(r))
            .collect();
        assert_eq!(
            run.alg.ideal_span(&elements),
            run.radical,
            "{}: radical is not an ideal",
            run.name
        );
    }
    println!("[extra] PASS: radicals are nilpotent two-sided ideals on every bundled example");
}

/// Every constructed module respects the algebra product exactly.
#[test]
fn module_axiom_spot_checks() {
    for run in full_runs() {
        if run.alg.dim() > 15 {
            continue;
        }
        for a in 0..run.family.len() {
            assert!(
                modrep::module_check(&run.alg, &run.family.delta[a]),
                "{}: Δ[{}] violates the module axioms",
                run.name,
                a
            );
            assert!(
                modrep::module_check(&run.alg, &run.family.simple[a]),
                "{}: D[{}] violates the module axioms",
                run.name,
                a
            );
            assert!(
                modrep::module_check(&run.alg, &run.covers[a].module),
                "{}: P[{}] violates the module axioms",
                run.name,
                a
            );
        }
    }
    println!(
        "[extra] PASS: action(t)·action(s) equals the action of t·s on every constructed Δ, D, P"
    );
}

/// Simple-count consistency: Σ l_i equals the number of simple modules.
#[test]
fn simple_parametrization_count() {
    for run in full_runs() {
        let total: usize = run.family.layer_counts.iter().sum();
        assert_eq!(total, run.family.len(), "{}", run.name);
        // Each layer count equals the number of Q_i summand classes, which
        // is the simple-module count of the twisted maximal-subgroup
        // algebra over Q; for the symmetric groups appearing here that is
        // the number of rational irreducibles.
        for (i, gamma) in run.local.gamma.iter().enumerate() {
            let expected = match gamma.len() {
                1 => 1,
                2 => 2,
                6 => 3,  // S_3 over Q
                24 => 5, // S_4 over Q
                _ => continue,
            };
            assert_eq!(
                run.family.layer_counts[i],
                expected,
                "{} layer {}",
                run.name,
                i + 1
            );
        }
    }
    println!(
        "[extra] PASS: Σ l_i matches the simple-module parametrization on every bundled example"
    );
}
