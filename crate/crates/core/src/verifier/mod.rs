//! Relation verifier: checks operator identities as exact matrix equalities
//! on graded components, and product rules on seeded random polynomial pairs.

mod relations;
mod report;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ops::named::d_r;
use crate::linalg::ExactMatrix;
use crate::ops::{graded_basis, to_matrix_in, OperatorExpr, ValueSpace};
use crate::qclifford::{Blade, CliffordPolynomial};
use crate::qpoly::{QMonomial, QPolynomial};
use crate::scalars::ScalarQ;

pub use relations::{registry, Check, Expectation, Instance, RelationSpec, Role};
pub use report::{ConformanceReport, Counterexample, DegreeVerdict, Entry, SuiteConfig};

/// Runs the named relations, or the whole registry when `names` is empty.
pub fn run_suite(names: &[String], config: &SuiteConfig) -> Result<ConformanceReport> {
    let start = Instant::now();
    let all = registry();
    let selected: Vec<RelationSpec> = if names.is_empty() {
        all
    } else {
        names
            .iter()
            .map(|name| {
                let hits: Vec<RelationSpec> =
                    all.iter().filter(|s| s.name == *name || s.family == *name).cloned().collect();
                if hits.is_empty() {
                    Err(Error::UnknownRelation(name.clone()))
                } else {
                    Ok(hits)
                }
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect()
    };
    let mut jobs: Vec<(RelationSpec, usize)> = Vec::new();
    for spec in selected {
        let n_max = if spec.uses_clifford_source() {
            config.clifford_n_max()
        } else if matches!(spec.check, Check::Product(_)) {
            config.product_n_max()
        } else {
            config.n_max
        };
        if jobs.iter().any(|(s, _)| s.name == spec.name) {
            continue;
        }
        for n in config.n_min..=n_max {
            jobs.push((spec.clone(), n));
        }
    }
    let mut entries: Vec<Entry> = jobs
        .par_iter()
        .map(|(spec, n)| run_one(spec, *n, config))
        .collect::<Result<Vec<Option<Entry>>>>()?
        .into_iter()
        .flatten()
        .collect();
    entries.sort_by(|a, b| (&a.relation, a.n).cmp(&(&b.relation, b.n)));
    Ok(ConformanceReport {
        seed: config.seed,
        n_min: config.n_min,
        n_max: config.n_max,
        k_max: config.k_max,
        pairs: config.pairs,
        entries,
        elapsed_ms: config.timing.then(|| start.elapsed().as_millis()),
    })
}

fn run_one(spec: &RelationSpec, n: usize, config: &SuiteConfig) -> Result<Option<Entry>> {
    let (checks, counterexample) = match &spec.check {
        Check::Matrix { build, space, degrees } => {
            let instances = build(n);
            if instances.is_empty() {
                return Ok(None);
            }
            let k_max = if matches!(space, ValueSpace::Clifford(_)) {
                config.clifford_k_max()
            } else {
                config.k_max
            };
            let ks: Vec<u32> = degrees.clone().unwrap_or_else(|| (0..=k_max).collect());
            let mut checks = 0;
            let mut found = None;
            'outer: for inst in &instances {
                for v in check_identity(&inst.lhs, &inst.rhs, n, &ks, *space)? {
                    checks += 1;
                    if let Some(mut c) = v.counterexample {
                        c.instance = inst.label.clone();
                        found = Some(c);
                        break 'outer;
                    }
                }
            }
            (checks, found)
        }
        Check::Product(build) => product_rule_check(build.as_ref(), n, config)?,
    };
    let observed = counterexample.is_none();
    let expected = spec.expectation.holds_at(n);
    Ok(Some(Entry {
        relation: spec.name.clone(),
        family: spec.family.clone(),
        role: spec.role,
        n,
        expected_holds: expected,
        observed_holds: observed,
        ok: expected == observed,
        checks,
        counterexample,
    }))
}

/// Compares `lhs` and `rhs` on every requested degree of `space`.
pub fn check_identity(lhs: &OperatorExpr, rhs: &OperatorExpr, n: usize, degrees: &[u32], space: ValueSpace) -> Result<Vec<DegreeVerdict>> {
    let is_zero = |op: &OperatorExpr| matches!(op, OperatorExpr::Sum(v) if v.is_empty());
    let (sl, sr) = (lhs.degree_shift()?, rhs.degree_shift()?);
    // the zero operator takes the shift of the other side
    let shift = if is_zero(lhs) { sr } else { sl };
    if sl != sr && !is_zero(lhs) && !is_zero(rhs) {
        return Err(Error::DegreeShiftMismatch { left: sl, right: sr });
    }
    let target = space
        .join(ValueSpace::from_deformation(lhs.deformation()?))?
        .join(ValueSpace::from_deformation(rhs.deformation()?))?;
    let matrix = |op: &OperatorExpr, k: u32| -> Result<(Vec<(QMonomial, Blade)>, ExactMatrix)> {
        if is_zero(op) {
            let source = graded_basis(n, k as i64, space);
            let rows = graded_basis(n, k as i64 + shift, target).len();
            let cols = source.len();
            return Ok((source, ExactMatrix::zeros(rows, cols)));
        }
        let m = to_matrix_in(op, k as i64, n, space, target)?;
        Ok((m.source, m.matrix))
    };
    degrees
        .iter()
        .map(|&k| {
            let (source, a) = matrix(lhs, k)?;
            let (_, b) = matrix(rhs, k)?;
            let counterexample = a.first_difference(&b).map(|(_, col)| {
                let (m, bl) = &source[col];
                let p = CliffordPolynomial::term(m.clone(), *bl, ScalarQ::one(), space.deformation())
                    .expect("basis element");
                Counterexample {
                    instance: String::new(),
                    k,
                    input: p.to_text(),
                    lhs: lhs.apply(&p).map(|v| v.to_text()).unwrap_or_default(),
                    rhs: rhs.apply(&p).map(|v| v.to_text()).unwrap_or_default(),
                }
            });
            Ok(DegreeVerdict {
                k,
                holds: counterexample.is_none(),
                counterexample,
            })
        })
        .collect()
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, deg_max: u32) -> QPolynomial {
    let terms = rng.gen_range(1..=3);
    let mut p = QPolynomial::zero(n);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=deg_max);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        let mag = rng.gen_range(1..=3i64);
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        let c = &ScalarQ::from_int(sign * mag) * &ScalarQ::s_pow(rng.gen_range(-2..=2));
        p = p
            .add(&QPolynomial::monomial(QMonomial::new(exps), c))
            .expect("same dimension");
    }
    p
}

type ProductFn = dyn Fn(usize, usize) -> (OperatorExpr, OperatorExpr) + Send + Sync;

/// Seeded check of `d_i^R(f g) = A_i(f) d_i^R(g) + d_i^R(f) B_i(g)`.
fn product_rule_check(build: &ProductFn, n: usize, config: &SuiteConfig) -> Result<(usize, Option<Counterexample>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((n as u64) << 32));
    let deg = config.product_deg_max();
    let lift = |p: &QPolynomial| CliffordPolynomial::from_qpoly(p);
    let mut checks = 0;
    for _ in 0..config.pairs {
        let f = lift(&random_poly(&mut rng, n, deg));
        let g = lift(&random_poly(&mut rng, n, deg));
        let fg = f.mul(&g)?;
        for i in 1..=n {
            let (a, b) = build(n, i);
            let d = d_r(i);
            let lhs = d.apply(&fg)?;
            let rhs = a.apply(&f)?.mul(&d.apply(&g)?)?.add(&d.apply(&f)?.mul(&b.apply(&g)?)?)?;
            checks += 1;
            if lhs != rhs {
                return Ok((
                    checks,
                    Some(Counterexample {
                        instance: format!("i={i}"),
                        k: 0,
                        input: format!("f = {}, g = {}", f.to_text(), g.to_text()),
                        lhs: lhs.to_text(),
                        rhs: rhs.to_text(),
                    }),
                ));
            }
        }
    }
    Ok((checks, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::named::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            n_max: 3,
            k_max: 3,
            pairs: 20,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn registry_names_are_unique_and_every_family_has_a_mutant() {
        let reg = registry();
        let mut names: Vec<&str> = reg.iter().map(|s| s.name.as_str()).collect();
        names.dedup();
        assert_eq!(names.len(), reg.len());
        for s in reg.iter().filter(|s| s.role == Role::Identity) {
            assert!(
                reg.iter().any(|m| m.family == s.family && m.role == Role::Mutant),
                "no mutant for {}",
                s.family
            );
        }
    }

    #[test]
    fn quick_suite_matches_expectations() {
        let report = run_suite(&[], &quick()).unwrap();
        let bad: Vec<String> = report.entries.iter().filter(|e| !e.ok).map(|e| format!("{} n={}", e.relation, e.n)).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn check_identity_examples() {
        let same = check_identity(&d_r(1), &d_r(1), 2, &[0, 1, 2], ValueSpace::Scalar).unwrap();
        assert!(same.iter().all(|v| v.holds));
        let lhs = OperatorExpr::compose([d_r(1), d_r(2)]);
        let rhs = OperatorExpr::compose([d_r(2), d_r(1)]).scaled(ScalarQ::q_pow(-1));
        assert!(check_identity(&lhs, &rhs, 2, &[0, 1, 2, 3], ValueSpace::Scalar).unwrap().iter().all(|v| v.holds));
        assert!(matches!(
            check_identity(&d_r(1), &x_r(1), 2, &[1], ValueSpace::Scalar),
            Err(Error::DegreeShiftMismatch { .. })
        ));
    }

    #[test]
    fn unknown_relation() {
        assert!(matches!(run_suite(&["nope".into()], &quick()), Err(Error::UnknownRelation(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let names = vec!["product-rule-1".to_string(), "weyl-R".to_string()];
        let a = run_suite(&names, &quick()).unwrap();
        let b = run_suite(&names, &quick()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
