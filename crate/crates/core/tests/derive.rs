use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use qgarnier::catalog::{reference_hamiltonian, transformations, GarnierName};
use qgarnier::derive::calibration::{calibrate, CalibrationStatus};
use qgarnier::derive::{
    build_ansatz, conditions_from_flow, conditions_from_transform, flow_conditions, pole_conditions, run_pipeline,
    solve, DerivationReport, DeriveError, Echelon, FlowConvention, HoloCondition, LinearSystem, Normalization,
    PipelineConfig, Provenance,
};
use qgarnier::field::{LinForm, ParamSymbol, RatFunc, UnknownSymbol};
use qgarnier::parse::parse_ratfunc;
use qgarnier::weyl::{SubstMap, VarSet, WeylElement, WeylMonomial};
use rayon::prelude::*;

fn derived() -> &'static [DerivationReport] {
    static ALL: OnceLock<Vec<DerivationReport>> = OnceLock::new();
    ALL.get_or_init(|| {
        let jobs: Vec<(GarnierName, usize)> = GarnierName::ALL.iter().flat_map(|n| [(*n, 1), (*n, 2)]).collect();
        jobs.par_iter()
            .map(|(n, f)| run_pipeline(*n, *f, &PipelineConfig::default()).unwrap())
            .collect()
    })
}

fn report(name: GarnierName, flow: usize) -> &'static DerivationReport {
    derived().iter().find(|r| r.system == name && r.flow == flow).unwrap()
}

#[test]
fn ansatz_sizes() {
    for degree in 0..=5u32 {
        let mut lattice = 0;
        for a in 0..=degree {
            for b in 0..=degree - a {
                for c in 0..=degree - a - b {
                    lattice += degree - a - b - c + 1;
                }
            }
        }
        assert_eq!(build_ansatz(degree, 1).len(), lattice as usize);
    }
    assert_eq!(build_ansatz(5, 1).len(), 126);
    assert_eq!(build_ansatz(0, 1).len(), 1);
    assert_eq!(build_ansatz(1, 2).len(), 5);
    assert!(build_ansatz(5, 1).element.terms().values().all(|s| s.to_linform().constant_part().is_zero()));
}

fn cond(lhs: LinForm) -> HoloCondition {
    HoloCondition {
        lhs,
        provenance: Provenance {
            transformation: "test".into(),
            monomial: WeylMonomial::one(),
            flow: None,
        },
    }
}

fn k(i: u8) -> UnknownSymbol {
    UnknownSymbol::new(1, [i, 0, 0, 0])
}

fn c(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

#[test]
fn solve_examples() {
    let (k1, k2) = (k(1), k(2));
    let sys = LinearSystem::new(vec![
        cond(LinForm::unknown(k1).sub(&LinForm::unknown(k2))),
        cond(LinForm::term(k1, c("t1")).add(&LinForm::unknown(k2)).sub(&LinForm::constant(c("t1 + 1")))),
    ]);
    let s = solve(&sys).unwrap();
    assert_eq!(s.nullity(), 0);
    assert_eq!(s.solution, BTreeMap::from([(k1, RatFunc::one()), (k2, RatFunc::one())]));

    let bad = LinearSystem::new(vec![
        cond(LinForm::unknown(k1)),
        cond(LinForm::unknown(k1).sub(&LinForm::constant(RatFunc::one()))),
    ]);
    let err = solve(&bad).unwrap_err();
    assert_eq!(err.index, 1);

    let free = LinearSystem::new(vec![cond(LinForm::unknown(k1).add(&LinForm::unknown(k2)))]);
    let s = solve(&free).unwrap();
    assert_eq!(s.nullity(), 1);
    assert_eq!(s.rank, 1);
    assert_eq!(s.nullspace[0], BTreeMap::from([(k1, RatFunc::one()), (k2, RatFunc::from_int(-1))]));
}

#[test]
fn time_dependent_map_is_rejected() {
    let r6 = &transformations(GarnierName::G11111)[5];
    let ansatz = build_ansatz(5, 1);
    assert!(matches!(
        conditions_from_transform(&ansatz.element, r6),
        Err(DeriveError::TDependentTransformation { .. })
    ));
}

#[test]
fn identity_map_gives_no_conditions() {
    let ansatz = build_ansatz(5, 1);
    assert!(pole_conditions(&ansatz.element, &SubstMap::identity(VarSet::Old), "id").unwrap().is_empty());
}

#[test]
fn flow_conditions_range_over_the_new_variables() {
    let r6 = &transformations(GarnierName::G11111)[5];
    let ansatz = build_ansatz(5, 1);
    let conds = conditions_from_flow(&ansatz.element, r6, ParamSymbol::T1, FlowConvention::Literal).unwrap();
    let mut fs: Vec<&str> = conds.iter().map(|c| c.provenance.flow.unwrap().1).collect();
    fs.dedup();
    fs.sort();
    fs.dedup();
    assert_eq!(fs, ["x1", "x2", "y1", "y2"]);
    assert!(conds.iter().any(|c| !c.lhs.constant_part().is_zero()));
    assert!(conditions_from_flow(&ansatz.element, r6, ParamSymbol::H, FlowConvention::Literal).is_err());
}

fn sum_by_monomial(cs: &[HoloCondition]) -> BTreeMap<WeylMonomial, LinForm> {
    let mut out: BTreeMap<WeylMonomial, LinForm> = BTreeMap::new();
    for c in cs {
        out.entry(c.provenance.monomial).or_default().add_assign(&c.lhs);
    }
    out.retain(|_, l| !l.is_zero());
    out
}

#[test]
fn condition_assembly_is_linear() {
    let ansatz = build_ansatz(5, 1);
    let terms: Vec<(WeylMonomial, _)> = ansatz.element.terms().iter().map(|(m, s)| (*m, s.clone())).collect();
    let mut runner = TestRunner::new(Config {
        cases: 8,
        rng_seed: RngSeed::Fixed(21),
        failure_persistence: None,
        ..Config::default()
    });
    for r in &transformations(GarnierName::G11111)[..2] {
        let whole = sum_by_monomial(&pole_conditions(&ansatz.element, &r.corrected_forward, "r").unwrap());
        runner
            .run(&prop::collection::vec(any::<bool>(), terms.len()), |mask| {
                let part = |side: bool| {
                    WeylElement::from_terms(terms.iter().zip(&mask).filter(|(_, b)| **b == side).map(|(t, _)| t.clone()))
                };
                let mut sum = sum_by_monomial(&pole_conditions(&part(true), &r.corrected_forward, "r").unwrap());
                for (m, l) in sum_by_monomial(&pole_conditions(&part(false), &r.corrected_forward, "r").unwrap()) {
                    sum.entry(m).or_default().add_assign(&l);
                }
                sum.retain(|_, l| !l.is_zero());
                prop_assert_eq!(&sum, &whole);
                Ok(())
            })
            .unwrap();
    }
}

fn echelon(cs: &[HoloCondition]) -> Echelon {
    let mut e = Echelon::new();
    for c in cs {
        e.push(&c.lhs).unwrap();
    }
    e
}

/// Reduced echelon forms with a fixed pivot order are unique, so equal
/// solution sets give equal forms.
#[test]
fn flow_and_pole_conditions_agree_without_time() {
    let r1 = &transformations(GarnierName::G11111)[0];
    let ansatz = build_ansatz(5, 1);
    let pole = conditions_from_transform(&ansatz.element, r1).unwrap();
    let flow = flow_conditions(
        &ansatz.element,
        &r1.corrected_forward,
        &r1.corrected_backward,
        "r1",
        ParamSymbol::T1,
        FlowConvention::default(),
    )
    .unwrap();
    assert!(flow.iter().all(|c| c.lhs.constant_part().is_zero()));
    assert_eq!(echelon(&pole), echelon(&flow));
}

#[test]
fn first_stage_ignores_order() {
    let ansatz = build_ansatz(5, 1);
    let rs = &transformations(GarnierName::G11111)[..5];
    let conds: Vec<Vec<HoloCondition>> =
        rs.iter().map(|r| conditions_from_transform(&ansatz.element, r).unwrap()).collect();
    let run = |order: &[usize]| {
        let all: Vec<HoloCondition> = order.iter().flat_map(|i| conds[*i].clone()).collect();
        echelon(&all)
    };
    let base = run(&[0, 1, 2, 3, 4]);
    assert_eq!(ansatz.len() - base.rank(), 6);
    for order in [[4, 3, 2, 1, 0], [2, 0, 4, 1, 3], [1, 3, 0, 4, 2]] {
        assert_eq!(run(&order), base, "{order:?}");
    }
    let cfg = PipelineConfig {
        stage1_order: Some(vec![5, 3, 1, 4, 2]),
        ..PipelineConfig::default()
    };
    let permuted = run_pipeline(GarnierName::G11111, 1, &cfg).unwrap();
    assert_eq!(permuted.hamiltonian, report(GarnierName::G11111, 1).hamiltonian);
    assert_eq!(permuted.stages[0].nullity, 5);
}

#[test]
fn first_type_stages() {
    let r = report(GarnierName::G11111, 1);
    assert_eq!(r.stages[0].nullity, 5);
    assert_eq!(r.nullity(), 0);
    assert_eq!(r.normalization, Normalization::FlowDetermined);
    assert_eq!(r.hamiltonian, reference_hamiltonian(GarnierName::G11111, 1).corrected);
}

#[test]
fn last_type_second_flow_matches_corrected_reference() {
    let r = report(GarnierName::G5, 2);
    assert!(r.is_unique());
    assert_eq!(r.hamiltonian, reference_hamiltonian(GarnierName::G5, 2).corrected);
}

#[test]
fn derived_hamiltonians_are_pole_free_everywhere() {
    for r in derived() {
        let tv = if r.flow == 1 { ParamSymbol::T1 } else { ParamSymbol::T2 };
        assert!(r.hamiltonian.max_total_degree() <= 5);
        assert!(r.hamiltonian.terms().keys().all(|m| !m.is_polar()));
        for t in transformations(r.system) {
            let conds = if t.t_dependent.is_empty() {
                conditions_from_transform(&r.hamiltonian, t).unwrap()
            } else {
                conditions_from_flow(&r.hamiltonian, t, tv, r.flow_convention).unwrap()
            };
            assert!(conds.is_empty(), "{} H{} under {}: {:?}", r.system, r.flow, t.id(), conds[0].to_json());
        }
    }
}

#[test]
fn low_degree_has_no_solution() {
    let cfg = PipelineConfig {
        degree: 2,
        ..PipelineConfig::default()
    };
    // recorded outcome: the pole conditions leave too little room for the
    // inhomogeneous flow conditions of r6
    match run_pipeline(GarnierName::G11111, 1, &cfg) {
        Err(DeriveError::Inconsistent {
            stage,
            transformation,
            monomial,
            residue,
        }) => {
            assert_eq!(stage, "flow conditions");
            assert_eq!(transformation, "G11111 r6");
            assert_eq!(monomial, "y1^-2");
            assert_eq!(residue, "1");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn printed_pole_coefficient_is_documented() {
    let cal = calibrate().unwrap();
    assert_eq!(cal.status, CalibrationStatus::Documented("G11111-r1-pole-indices".into()));
    assert_ne!(cal.printed, cal.computed);
}
