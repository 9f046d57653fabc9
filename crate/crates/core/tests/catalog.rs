use std::collections::BTreeSet;

use qgarnier::catalog::{
    catalog, catalog_from_json, catalog_to_json, errata, get_type, item_with_readings, reference_hamiltonian,
    transformations, CatalogError, Catalog, Direction, GarnierName, Target,
};
use qgarnier::field::ParamSymbol;
use qgarnier::parse::{parse_element, parse_ratfunc};
use qgarnier::weyl::{Scalar, VarSet, WeylMonomial};

fn rat(s: &str) -> Scalar {
    parse_ratfunc(s).unwrap().into()
}

#[test]
fn transformation_counts() {
    let want = [6, 5, 4, 4, 3, 6, 4];
    for (name, n) in GarnierName::ALL.iter().zip(want) {
        let ty = get_type(name.as_str()).unwrap();
        assert_eq!(ty.transformation_count, n, "{name}");
        assert_eq!(transformations(*name).len(), n);
        let idx: Vec<usize> = transformations(*name).iter().map(|r| r.index).collect();
        assert_eq!(idx, (1..=n).collect::<Vec<_>>());
    }
    assert_eq!(get_type("G99"), Err(CatalogError::UnknownSystem("G99".into())));
}

#[test]
fn first_map_image() {
    let r1 = &transformations(GarnierName::G11111)[0];
    let p1 = parse_element("-x1^2*y1 - x1*x2*y2 - a1*x1", VarSet::New).unwrap();
    assert_eq!(r1.forward.images[1], p1);
}

#[test]
fn time_dependence() {
    let g113 = transformations(GarnierName::G113);
    assert_eq!(g113[3].t_dependent, BTreeSet::from([ParamSymbol::T1, ParamSymbol::T2]));
    assert!(transformations(GarnierName::G11111)[2].t_dependent.is_empty());
}

/// Time symbols are collected again from the images and, as a cross-check,
/// from the source text.
#[test]
fn time_dependence_is_recomputed() {
    for name in GarnierName::ALL {
        for r in transformations(name) {
            let mut from_images = BTreeSet::new();
            for d in [Direction::Forward, Direction::Backward] {
                for corrected in [false, true] {
                    for e in &r.map(d, corrected).images {
                        from_images.extend(e.params_used().into_iter().filter(|p| p.is_time()));
                    }
                }
            }
            assert_eq!(r.t_dependent, from_images, "{}", r.id());
            for (t, name) in [(ParamSymbol::T1, "t1"), (ParamSymbol::T2, "t2")] {
                if r.source.iter().any(|s| s.contains(name)) {
                    assert!(r.t_dependent.contains(&t), "{} mentions {name}", r.id());
                }
            }
        }
    }
}

#[test]
fn reference_coefficients() {
    let h1 = &reference_hamiltonian(GarnierName::G11111, 1).element;
    assert_eq!(
        h1.coeff(&WeylMonomial::new(3, 2, 0, 0)),
        rat("(t2 - t1)/((h - a1 - a2 - a3 - a4 - a5 - a6)*t1*(t1 - 1)*(t1 - t2))")
    );
    let g5 = &reference_hamiltonian(GarnierName::G5, 1).element;
    assert_eq!(g5.coeff(&WeylMonomial::new(0, 2, 1, 0)), rat("1/(3*h + 2*a1 - 2*a2)"));
    let g14 = &reference_hamiltonian(GarnierName::G14, 2).element;
    let prefactor = parse_ratfunc("1/((2*h + a1 + a2 + a3)*(t1 - t2))").unwrap();
    let term = parse_ratfunc("-(1/2)*t2*(t1 - t2)").unwrap();
    assert_eq!(g14.coeff(&WeylMonomial::new(0, 0, 0, 1)), Scalar::from(prefactor.mul(&term)));
}

#[test]
fn references_are_polynomial_of_degree_at_most_five() {
    for name in GarnierName::ALL {
        for flow in [1, 2] {
            let r = reference_hamiltonian(name, flow);
            for e in [&r.element, &r.corrected] {
                assert!(e.is_k_free());
                assert!(e.pole_split().0.is_zero(), "{name} H{flow}");
                assert!(e.max_total_degree() <= 5);
                assert!(e.terms().keys().all(|m| m.exps().iter().all(|x| *x >= 0)));
            }
        }
    }
}

#[test]
fn json_roundtrip_is_exact() {
    let c = catalog();
    let v = catalog_to_json(c);
    let back: Catalog = catalog_from_json(&v).unwrap();
    assert_eq!(&back, c);
    let text = serde_json::to_string(&v).unwrap();
    assert_eq!(serde_json::to_string(&catalog_to_json(&back)).unwrap(), text);
}

#[test]
fn errata_examples() {
    let g122 = errata(GarnierName::G122);
    assert!(g122.iter().any(|e| e.printed == r"+\alpha_{1}tq_{2}p_{2})"));
    let g5 = errata(GarnierName::G5);
    let a3 = g5.iter().find(|e| e.printed.contains(r"(\alpha_{1}-2\alpha_{3})")).unwrap();
    assert!(a3.nature.contains("forward"));
    assert!(g5.iter().any(|e| e.printed.contains(r"-2tq_{1}q_{2}")));
}

#[test]
fn every_reading_applies() {
    for name in GarnierName::ALL {
        for e in errata(name) {
            assert!(!e.printed.is_empty() && !e.readings.is_empty(), "{}", e.id);
            for r in e.readings {
                for t in e.targets {
                    if matches!(t, Target::PoleCoefficient { .. }) {
                        continue;
                    }
                    item_with_readings(name, *t, &[(e, r)]).unwrap_or_else(|err| panic!("{} / {}: {err}", e.id, r.label));
                }
            }
        }
    }
}

#[test]
fn corrected_forms_differ_only_where_registered() {
    for name in GarnierName::ALL {
        let touched: BTreeSet<usize> = errata(name)
            .iter()
            .flat_map(|e| e.targets.iter())
            .filter_map(|t| match t {
                Target::Image { transform, .. } => Some(*transform),
                _ => None,
            })
            .collect();
        for r in transformations(name) {
            if !touched.contains(&r.index) {
                assert_eq!(r.forward, r.corrected_forward, "{}", r.id());
                assert_eq!(r.backward, r.corrected_backward, "{}", r.id());
            }
        }
    }
}
