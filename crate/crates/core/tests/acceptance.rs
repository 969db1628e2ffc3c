//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Each criterion also has a wall-clock budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use coxassoc::geometry::{BasePoint, Realization};
use coxassoc::isometry::{classify_associahedra, classify_reducible, g_map, verify_against_oracle};
use coxassoc::sortable::{both_singleton_pairs, c_singletons, c_sorting_word};
use coxassoc::{CoxeterSystem, GroupElement};

type Outcome = Result<(), String>;

const EPS: f64 = 1e-9;

fn sys(code: &str) -> CoxeterSystem {
    CoxeterSystem::from_type(code).expect("known type")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn balanced(sys: &CoxeterSystem) -> Realization<'_> {
    Realization::new(sys, BasePoint::balanced(sys.rank())).expect("valid base point")
}

fn elements_of(sys: &CoxeterSystem, words: &[&str]) -> BTreeSet<GroupElement> {
    words.iter().map(|w| sys.evaluate(&sys.parse_word(w).expect("word"))).collect()
}

fn sorting_words() -> Outcome {
    let a3 = sys("A3");
    let w0 = a3.longest_element();
    for (c, expected) in [("s2,s1,s3", "s2s1s3s2s1s3"), ("s1,s2,s3", "s1s2s3s1s2s1")] {
        let word = c_sorting_word(&a3, &w0, &a3.parse_word(c).unwrap()).map_err(|e| e.to_string())?;
        let got = a3.format_word(&word);
        ensure(got == expected, || format!("c={c}: got {got}, expected {expected}"))?;
    }
    Ok(())
}

fn singleton_lists() -> Outcome {
    let cases: [(&str, &str, &[&str]); 2] = [
        ("A2", "s1,s2", &["e", "s1", "s1,s2", "s1,s2,s1"]),
        (
            "A3",
            "s2,s3,s1",
            &[
                "e",
                "s2",
                "s2,s1",
                "s2,s3",
                "s2,s1,s3",
                "s2,s1,s3,s2",
                "s2,s1,s3,s2,s1",
                "s2,s1,s3,s2,s3",
                "s2,s1,s3,s2,s1,s3",
            ],
        ),
    ];
    for (ty, c, expected) in cases {
        let s = sys(ty);
        let lattice = c_singletons(&s, &s.parse_word(c).unwrap()).map_err(|e| e.to_string())?;
        let got: BTreeSet<GroupElement> = lattice.elements().cloned().collect();
        ensure(got.len() == lattice.len(), || format!("{ty}: repeated singletons"))?;
        ensure(got == elements_of(&s, expected), || format!("{ty} c={c}: singleton set differs"))?;
    }
    Ok(())
}

/// The four A3 singleton lattices, as element lists; covers are
/// `x < x·s` with both ends listed.
fn a3_singleton_lattices() -> Outcome {
    let a3 = sys("A3");
    let cases: [(&str, &[&str]); 4] = [
        (
            "s1,s2,s3",
            &["e", "s1", "s1,s2", "s1,s2,s3", "s1,s2,s1", "s1,s2,s3,s1", "s1,s2,s3,s1,s2", "s1,s2,s3,s1,s2,s1"],
        ),
        (
            "s3,s2,s1",
            &["e", "s3", "s3,s2", "s3,s2,s1", "s3,s2,s3", "s3,s2,s1,s3", "s3,s2,s1,s3,s2", "s3,s2,s1,s3,s2,s3"],
        ),
        (
            "s2,s1,s3",
            &[
                "e",
                "s2",
                "s2,s3",
                "s2,s1",
                "s2,s1,s3",
                "s2,s1,s3,s2",
                "s2,s1,s3,s2,s1",
                "s2,s1,s3,s2,s3",
                "s2,s1,s3,s2,s1,s3",
            ],
        ),
        (
            "s3,s1,s2",
            &[
                "e",
                "s1",
                "s3",
                "s3,s1",
                "s3,s1,s2",
                "s3,s1,s2,s1",
                "s3,s1,s2,s3",
                "s3,s1,s2,s3,s1",
                "s3,s1,s2,s3,s1,s2",
            ],
        ),
    ];
    for (c, listed) in cases {
        let lattice = c_singletons(&a3, &a3.parse_word(c).unwrap()).map_err(|e| e.to_string())?;
        let expected = elements_of(&a3, listed);
        let got: BTreeSet<GroupElement> = lattice.elements().cloned().collect();
        ensure(lattice.len() == listed.len(), || {
            format!("c={c}: {} nodes, expected {}", lattice.len(), listed.len())
        })?;
        ensure(got == expected, || format!("c={c}: node set differs"))?;

        let mut expected_covers = BTreeSet::new();
        for x in &expected {
            for s in 0..3 {
                let xs = a3.mul_generator(x, s);
                if xs.length() > x.length() && expected.contains(&xs) {
                    expected_covers.insert((x.clone(), xs));
                }
            }
        }
        let got_covers: BTreeSet<(GroupElement, GroupElement)> = lattice
            .hasse_edges
            .iter()
            .map(|&(a, b)| (lattice.nodes[a].element.clone(), lattice.nodes[b].element.clone()))
            .collect();
        ensure(got_covers.len() == lattice.hasse_edges.len(), || format!("c={c}: repeated edges"))?;
        ensure(got_covers == expected_covers, || {
            format!("c={c}: {} covers, expected {}", got_covers.len(), expected_covers.len())
        })?;
    }
    Ok(())
}

fn polytope_counts() -> Outcome {
    for (ty, order, ass) in [("A2", 6, 5), ("A3", 24, 14), ("B3", 48, 20), ("H3", 120, 32), ("D4", 192, 50)] {
        let s = sys(ty);
        let real = balanced(&s);
        let perm = real.permutahedron();
        ensure(perm.vertices.len() == order, || format!("{ty}: Perm has {} vertices", perm.vertices.len()))?;
        for c in s.coxeter_elements() {
            let word = s.format_word(&c.word);
            let poly = real.associahedron(&c.word).map_err(|e| format!("{ty} {word}: {e}"))?;
            ensure(poly.vertices.len() == ass, || {
                format!("{ty} c={word}: {} vertices, expected {ass}", poly.vertices.len())
            })?;
            if s.rank() == 3 {
                let f = poly.f_vector();
                ensure(f[0] as i64 - f[1] as i64 + f[2] as i64 == 2, || format!("{ty} c={word}: f-vector {f:?}"))?;
            }
        }
    }
    Ok(())
}

/// Six D4 elements sharing one class; `s1` is the branch node.
const D4_SIX: [&str; 6] = ["s4,s2,s1,s3", "s4,s3,s1,s2", "s2,s3,s1,s4", "s3,s1,s2,s4", "s2,s1,s3,s4", "s4,s1,s2,s3"];

fn class_words(classes: &[Vec<String>]) -> BTreeSet<BTreeSet<String>> {
    classes.iter().map(|c| c.iter().cloned().collect()).collect()
}

fn oracle_cross_validation() -> Outcome {
    for ty in ["A2", "A3", "B3", "H3", "D4"] {
        let s = sys(ty);
        let real = balanced(&s);
        let report = verify_against_oracle(&real, 1).map_err(|e| format!("{ty}: {e}"))?;
        ensure(report.agreement, || format!("{ty}: classifier and oracle disagree: {:?}", report.counterexample))?;
        ensure(report.witnesses_verified, || format!("{ty}: a witness does not map vertex sets"))?;
        let classes: Vec<Vec<String>> = report
            .classification
            .classes
            .iter()
            .map(|c| {
                let mut v: Vec<String> = c.members.iter().map(|w| s.format_word(w)).collect();
                v.sort();
                v
            })
            .collect();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        match ty {
            "A3" => {
                let expected: Vec<Vec<String>> = vec![
                    vec!["s1s2s3".into(), "s3s2s1".into()],
                    vec!["s1s3s2".into(), "s2s1s3".into()],
                ];
                ensure(class_words(&classes) == class_words(&expected), || format!("A3 classes {classes:?}"))?;
            }
            "D4" => {
                let six = elements_of(&s, &D4_SIX);
                let found = report.classification.classes.iter().any(|class| {
                    let members: BTreeSet<GroupElement> = class.members.iter().map(|w| s.evaluate(w)).collect();
                    members == six
                });
                ensure(found, || format!("D4 classes {classes:?}"))?;
            }
            "B3" | "H3" => {
                for class in &report.classification.classes {
                    let c = s.evaluate(&class.members[0]);
                    let expected: BTreeSet<GroupElement> = [c.clone(), c.inverse()].into_iter().collect();
                    let members: BTreeSet<GroupElement> = class.members.iter().map(|w| s.evaluate(w)).collect();
                    ensure(members == expected, || format!("{ty}: class {classes:?} is not {{c, c^-1}}"))?;
                }
            }
            _ => ensure(sizes == vec![2], || format!("{ty}: sizes {sizes:?}"))?,
        }
    }
    Ok(())
}

fn generic_kappa() -> Outcome {
    let s = sys("A3");
    let real = Realization::new(&s, BasePoint::new(vec![1.0, 2.0, 3.0]).unwrap()).unwrap();
    let report = verify_against_oracle(&real, 1).map_err(|e| e.to_string())?;
    let sizes = report.classification.sizes();
    ensure(sizes.iter().all(|&n| n == 1 || n == 2), || format!("sizes {sizes:?}"))?;
    ensure(report.agreement, || format!("oracle disagrees: {:?}", report.counterexample))?;
    ensure(report.witnesses_verified, || "a witness does not map vertex sets".into())
}

fn twisted_identity() -> Outcome {
    for ty in ["A2", "A3", "B3", "H3", "D4"] {
        let s = sys(ty);
        let real = balanced(&s);
        let g = g_map(&s);
        let w0 = s.longest_element();
        let psi = s.conjugation_by_w0();
        for c in s.coxeter_elements() {
            let twisted = psi.apply_word(&c.word.reversed());
            ensure(s.evaluate(&twisted) == w0.compose(&c.element.inverse()).unwrap().compose(&w0).unwrap(), || {
                format!("{ty}: bad twist")
            })?;
            let ass = real.associahedron(&c.word).map_err(|e| e.to_string())?;
            let other = real.associahedron(&twisted).map_err(|e| e.to_string())?;
            ensure(g.maps_vertex_set(&other, &ass, EPS), || {
                format!("{ty} c={}: g(Ass_(w0 c^-1 w0)) != Ass_c", s.format_word(&c.word))
            })?;
        }
    }
    Ok(())
}

const IRREDUCIBLE_UP_TO_RANK_4: [&str; 16] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "H3", "H4", "I2(5)", "I2(7)", "I2(8)", "I2(10)",
];

fn singleton_pairs() -> Outcome {
    for ty in IRREDUCIBLE_UP_TO_RANK_4 {
        let s = sys(ty);
        let expected: Vec<GroupElement> = {
            let mut v = vec![s.identity(), s.longest_element()];
            v.dedup();
            v
        };
        for c in s.coxeter_elements() {
            let pairs = both_singleton_pairs(&s, &c.word).map_err(|e| e.to_string())?;
            ensure(pairs == expected, || {
                format!("{ty} c={}: {} elements", s.format_word(&c.word), pairs.len())
            })?;
        }
    }
    Ok(())
}

fn reducible_identity() -> Outcome {
    for ty in ["A1xA2", "A1xA1xA1"] {
        let s = sys(ty);
        let report = classify_reducible(&balanced(&s)).map_err(|e| e.to_string())?;
        let expected = s.coxeter_elements().len() << s.components().len();
        ensure(report.checks.len() == expected, || format!("{ty}: {} checks", report.checks.len()))?;
        if let Some(bad) = report.checks.iter().find(|c| !c.vertex_sets_agree) {
            return Err(format!("{ty} c={} A={:?}: vertex sets differ", s.format_word(&bad.c), bad.components));
        }
    }
    Ok(())
}

fn class_cardinalities() -> Outcome {
    for ty in IRREDUCIBLE_UP_TO_RANK_4 {
        // A single generator has a single Coxeter element.
        if ty == "A1" {
            continue;
        }
        let s = sys(ty);
        let sizes = classify_associahedra(&balanced(&s)).map_err(|e| e.to_string())?.sizes();
        ensure(sizes.iter().all(|n| [2, 4, 6].contains(n)), || format!("{ty}: sizes {sizes:?}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("1 sorting-word fidelity", Duration::from_secs(1), sorting_words),
        ("2 singleton lists", Duration::from_secs(1), singleton_lists),
        ("3 A3 singleton lattices", Duration::from_secs(1), a3_singleton_lattices),
        ("4 polytope vertex counts", Duration::from_secs(120), polytope_counts),
        ("5 classifier vs congruence oracle", Duration::from_secs(600), oracle_cross_validation),
        ("6 generic kappa", Duration::from_secs(60), generic_kappa),
        ("7 g(Ass_(w0 c^-1 w0)) = Ass_c", Duration::from_secs(120), twisted_identity),
        ("8 singleton pairs are {e, w0}", Duration::from_secs(60), singleton_pairs),
        ("9 reducible g_A identities", Duration::from_secs(60), reducible_identity),
        ("10 class sizes in {2, 4, 6}", Duration::from_secs(600), class_cardinalities),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
