use wreathforge_core::catalog::{self, Suite, ALPHA_PARTNERS, COLLAPSE_SET};
use wreathforge_core::check::{check_axiom, check_on_model, run_suite, Verdict};
use wreathforge_core::library;
use wreathforge_core::model::{mirror_partner, mirrored};
use wreathforge_core::{build_product, Field, HopfDatumModel, PrimeField, Rationals, SignatureTable, Word};

fn words(s: &str) -> Word {
    Word::parse(s)
}

#[test]
fn both_sides_of_every_identity_share_a_boundary() {
    let m = library::trivial(Rationals).unwrap();
    let p = build_product(&m).unwrap();
    let base = m.interpretation().unwrap();
    for a in catalog::catalog() {
        let table: &dyn Fn(&wreathforge_core::Diagram) -> _ = if a.suite.on_product() {
            &|d| d.infer_boundary(p.interpretation())
        } else {
            &|d| d.infer_boundary(base)
        };
        let lhs = table(&a.lhs).unwrap_or_else(|e| panic!("{} lhs: {e}", a.id));
        let rhs = table(&a.rhs).unwrap_or_else(|e| panic!("{} rhs: {e}", a.id));
        assert_eq!(lhs, rhs, "{}", a.id);
    }
}

#[test]
fn braid_relation_boundary() {
    let m = library::trivial(Rationals).unwrap();
    let a = catalog::axiom("ybe.fbf").unwrap();
    let got = a.lhs.infer_boundary(m.interpretation().unwrap()).unwrap();
    assert_eq!(got, (words("F B F"), words("F B F")));
    assert!(catalog::axiom("nonsense").is_err());
}

#[test]
fn every_suite_is_populated() {
    for s in Suite::ALL {
        assert!(catalog::suite_axioms(s).count() > 0, "{}", s.name());
    }
    assert!(catalog::catalog().len() >= 60);
}

/// Each generator used in the catalog has a declared type.
#[test]
fn catalog_uses_only_known_generators() {
    let m = library::trivial(Rationals).unwrap();
    let p = build_product(&m).unwrap();
    for a in catalog::catalog() {
        for d in [&a.lhs, &a.rhs] {
            for g in d.generators() {
                let known = if a.suite.on_product() {
                    p.interpretation().signature(g).is_some()
                } else {
                    m.interpretation().unwrap().signature(g).is_some()
                };
                assert!(known, "{}: {g}", a.id);
            }
        }
    }
}

fn mirror_verdicts_agree<K: Field>(name: &str, m: &HopfDatumModel<K>) {
    let base = mirrored(m.interpretation().unwrap()).unwrap();
    let product = mirrored(build_product(m).unwrap().interpretation()).unwrap();
    for a in catalog::catalog() {
        let interp = if a.suite.on_product() { &product } else { &base };
        let mut flipped = a.clone();
        flipped.lhs = a.lhs.mirror(&mirror_partner).unwrap();
        flipped.rhs = a.rhs.mirror(&mirror_partner).unwrap();
        assert_eq!(
            check_axiom(a, interp).verdict,
            check_axiom(&flipped, interp).verdict,
            "{name}: {}",
            a.id
        );
    }
}

#[test]
fn mirrored_identities_keep_their_verdicts() {
    for (name, _) in library::EXAMPLES {
        mirror_verdicts_agree(name, &library::example(name, Rationals).unwrap());
    }
    let bent = library::perturb(
        &library::radford_h4(Rationals).unwrap(),
        "tau_FF",
        1,
        2,
        &Rationals.one(),
    )
    .unwrap();
    mirror_verdicts_agree("perturbed radford_h4", &bent);
}

fn untwisted<K: Field>(field: K) -> Vec<(&'static str, HopfDatumModel<K>)> {
    library::EXAMPLES
        .iter()
        .map(|(n, _)| (*n, library::example(n, field.clone()).unwrap()))
        .filter(|(_, m)| {
            let s = m.triviality_flags().unwrap();
            !s.monad.twist && !s.comonad.twist
        })
        .collect()
}

#[test]
fn collapse_set_holds_without_cocycles() {
    for (name, m) in untwisted(Rationals) {
        for id in COLLAPSE_SET {
            let a = catalog::axiom(id).unwrap();
            assert_eq!(check_on_model(a, &m).verdict, Verdict::Pass, "{name}: {id}");
        }
    }
    for (name, m) in untwisted(PrimeField::new(7).unwrap()) {
        for id in COLLAPSE_SET {
            let a = catalog::axiom(id).unwrap();
            assert_eq!(check_on_model(a, &m).verdict, Verdict::Pass, "{name} over F7: {id}");
        }
    }
}

#[test]
fn alpha_partners_share_verdicts_without_cocycles() {
    let models = untwisted(PrimeField::new(7).unwrap());
    assert!(models.len() >= 4);
    for (name, m) in &models {
        for (a, b) in ALPHA_PARTNERS {
            let va = check_on_model(catalog::axiom(a).unwrap(), m).verdict;
            let vb = check_on_model(catalog::axiom(b).unwrap(), m).verdict;
            assert_eq!(va, vb, "{name}: {a} / {b}");
        }
    }
}

#[test]
fn twisted_model_fails_exactly_the_cocycle_sensitive_identities() {
    let m = library::twisted_v4(Rationals).unwrap();
    let hopf = run_suite(Suite::HopfDatum, &m);
    let failing: Vec<&str> = hopf.failures().map(|r| r.id.as_str()).collect();
    assert_eq!(
        failing,
        [
            "hopf.weak-assoc",
            "hopf.epsilon-to-sigma",
            "hopf.eq-4-6-first",
            "hopf.eq-4-6-second"
        ]
    );
    let r = hopf.result("hopf.epsilon-to-sigma").unwrap();
    assert!(r.counterexample.is_some());
    assert_eq!(run_suite(Suite::Wreath, &m).verdict, Verdict::Pass);
}
