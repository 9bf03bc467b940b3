//! The built-in relation registry.
//!
//! Every family has a variant that holds, and one mutated variant that must
//! fail. Where the stated form of an identity turns out to be wrong, both the
//! stated and the corrected forms are registered. Identities that only hold
//! on scalar inputs also get a Clifford-valued instance; these fail from
//! `n = 2` on because the deformed Clifford product is not associative there.

use std::sync::Arc;

use crate::ops::named::*;
use crate::ops::{OperatorExpr, ValueSpace};
use crate::qclifford::Deformation;
use crate::scalars::{qnum, qnum_half, ScalarQ};

/// One instantiated identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
}

impl Instance {
    fn new(label: impl Into<String>, lhs: OperatorExpr, rhs: OperatorExpr) -> Self {
        Instance {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

/// Why a relation is in the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// An identity expected to hold.
    Identity,
    /// A stated form that does not hold as written.
    Erratum,
    /// A deliberately perturbed identity.
    Mutant,
    /// A scalar-input identity checked on Clifford-valued inputs.
    Obstruction,
}

/// Expected verdict as a function of the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Holds below the given dimension and fails from it on.
    FailsFrom(usize),
}

impl Expectation {
    pub fn holds_at(self, n: usize) -> bool {
        match self {
            Expectation::Holds => true,
            Expectation::FailsFrom(n0) => n < n0,
        }
    }
}

pub type Builder = Arc<dyn Fn(usize) -> Vec<Instance> + Send + Sync>;

/// Product rule `d_i^R(f g) = A_i(f) d_i^R(g) + d_i^R(f) B_i(g)`; the
/// builder returns `(A_i, B_i)` for given `n` and `i`.
pub type ProductBuilder = Arc<dyn Fn(usize, usize) -> (OperatorExpr, OperatorExpr) + Send + Sync>;

#[derive(Clone)]
pub enum Check {
    /// Matrix equality on graded components; `degrees` overrides the sweep.
    Matrix {
        build: Builder,
        space: ValueSpace,
        degrees: Option<Vec<u32>>,
    },
    /// Randomized check on polynomial pairs.
    Product(ProductBuilder),
}

#[derive(Clone)]
pub struct RelationSpec {
    pub name: String,
    pub family: String,
    pub role: Role,
    pub expectation: Expectation,
    pub description: String,
    pub check: Check,
}

impl RelationSpec {
    pub fn uses_clifford_source(&self) -> bool {
        matches!(
            self.check,
            Check::Matrix {
                space: ValueSpace::Clifford(_),
                ..
            }
        )
    }
}

fn q() -> ScalarQ {
    ScalarQ::q()
}

fn qi(e: i64) -> ScalarQ {
    ScalarQ::q_pow(e)
}

fn c2(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr {
    OperatorExpr::compose([a, b])
}

fn lt_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

fn ne_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

struct Registry(Vec<RelationSpec>);

impl Registry {
    fn matrix<F>(&mut self, name: &str, role: Role, expectation: Expectation, description: &str, space: ValueSpace, build: F)
    where
        F: Fn(usize) -> Vec<Instance> + Send + Sync + 'static,
    {
        self.push(name, role, expectation, description, Check::Matrix {
            build: Arc::new(build),
            space,
            degrees: None,
        });
    }

    fn scalar<F>(&mut self, name: &str, role: Role, expectation: Expectation, description: &str, build: F)
    where
        F: Fn(usize) -> Vec<Instance> + Send + Sync + 'static,
    {
        self.matrix(name, role, expectation, description, ValueSpace::Scalar, build);
    }

    fn push(&mut self, name: &str, role: Role, expectation: Expectation, description: &str, check: Check) {
        let family = name.split(':').next().unwrap_or(name).to_string();
        self.0.push(RelationSpec {
            name: name.to_string(),
            family,
            role,
            expectation,
            description: description.to_string(),
            check,
        });
    }
}

use Expectation::{FailsFrom, Holds};
use Role::{Erratum, Identity, Mutant, Obstruction};

const CL: ValueSpace = ValueSpace::Clifford(Deformation::Plus);
const CLP: ValueSpace = ValueSpace::Clifford(Deformation::Minus);

/// The full registry, sorted by name.
pub fn registry() -> Vec<RelationSpec> {
    let mut r = Registry(Vec::new());
    basic_relations(&mut r);
    weyl_relations(&mut r);
    product_rules(&mut r);
    harmonic_relations(&mut r);
    factorizations(&mut r);
    osp_relations(&mut r);
    let mut v = r.0;
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}

fn basic_relations(r: &mut Registry) {
    r.scalar("rel-1", Identity, Holds, "xL(i) xL(j) = q xL(j) xL(i) and xR(i) xR(j) = q^-1 xR(j) xR(i), i < j", |n| {
        lt_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                [
                    Instance::new(format!("L i={i} j={j}"), c2(x_l(i), x_l(j)), c2(x_l(j), x_l(i)).scaled(q())),
                    Instance::new(format!("R i={i} j={j}"), c2(x_r(i), x_r(j)), c2(x_r(j), x_r(i)).scaled(qi(-1))),
                ]
            })
            .collect()
    });
    r.scalar("rel-1:mutant", Mutant, FailsFrom(2), "xL(i) xL(j) = xL(j) xL(i)", |n| {
        lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), c2(x_l(i), x_l(j)), c2(x_l(j), x_l(i))))
            .collect()
    });
    r.scalar("rel-2", Identity, Holds, "dL(i) dL(j) = q dL(j) dL(i) and dR(i) dR(j) = q^-1 dR(j) dR(i), i < j", |n| {
        lt_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                [
                    Instance::new(format!("L i={i} j={j}"), c2(d_l(i), d_l(j)), c2(d_l(j), d_l(i)).scaled(q())),
                    Instance::new(format!("R i={i} j={j}"), c2(d_r(i), d_r(j)), c2(d_r(j), d_r(i)).scaled(qi(-1))),
                ]
            })
            .collect()
    });
    r.scalar("rel-2:mutant", Mutant, FailsFrom(2), "dR(i) dR(j) = dR(j) dR(i)", |n| {
        lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), c2(d_r(i), d_r(j)), c2(d_r(j), d_r(i))))
            .collect()
    });
    r.scalar("rel-3", Identity, Holds, "dR(i) xR(j) = q xR(j) dR(i) and dL(i) xL(j) = q^-1 xL(j) dL(i), i < j", |n| {
        lt_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                [
                    Instance::new(format!("R i={i} j={j}"), c2(d_r(i), x_r(j)), c2(x_r(j), d_r(i)).scaled(q())),
                    Instance::new(format!("L i={i} j={j}"), c2(d_l(i), x_l(j)), c2(x_l(j), d_l(i)).scaled(qi(-1))),
                ]
            })
            .collect()
    });
    r.scalar("rel-3:mutant", Mutant, FailsFrom(2), "dR(i) xR(j) = xR(j) dR(i)", |n| {
        lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), c2(d_r(i), x_r(j)), c2(x_r(j), d_r(i))))
            .collect()
    });
    r.scalar("rel-4", Identity, Holds, "dR(i) xL(j) = xL(j) dR(i) and dL(i) xR(j) = xR(j) dL(i), i != j", |n| {
        ne_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                [
                    Instance::new(format!("RL i={i} j={j}"), c2(d_r(i), x_l(j)), c2(x_l(j), d_r(i))),
                    Instance::new(format!("LR i={i} j={j}"), c2(d_l(i), x_r(j)), c2(x_r(j), d_l(i))),
                ]
            })
            .collect()
    });
    r.scalar("rel-4:mutant", Mutant, FailsFrom(2), "dR(i) xL(j) = q xL(j) dR(i)", |n| {
        ne_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), c2(d_r(i), x_l(j)), c2(x_l(j), d_r(i)).scaled(q())))
            .collect()
    });
    r.scalar("rel-5", Identity, Holds, "g(i) xR(j) = q^delta(i,j) xR(j) g(i), same for xL", |n| {
        all_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                let f = qi((i == j) as i64);
                [
                    Instance::new(format!("R i={i} j={j}"), c2(gamma(i, 1), x_r(j)), c2(x_r(j), gamma(i, 1)).scaled(f.clone())),
                    Instance::new(format!("L i={i} j={j}"), c2(gamma(i, 1), x_l(j)), c2(x_l(j), gamma(i, 1)).scaled(f)),
                ]
            })
            .collect()
    });
    r.scalar("rel-5:mutant", Mutant, FailsFrom(1), "g(i) xR(i) = xR(i) g(i)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), c2(gamma(i, 1), x_r(i)), c2(x_r(i), gamma(i, 1))))
            .collect()
    });
    r.scalar("rel-6", Identity, Holds, "g(i) dR(j) = q^-delta(i,j) dR(j) g(i), same for dL", |n| {
        all_pairs(n)
            .into_iter()
            .flat_map(|(i, j)| {
                let f = qi(-((i == j) as i64));
                [
                    Instance::new(format!("R i={i} j={j}"), c2(gamma(i, 1), d_r(j)), c2(d_r(j), gamma(i, 1)).scaled(f.clone())),
                    Instance::new(format!("L i={i} j={j}"), c2(gamma(i, 1), d_l(j)), c2(d_l(j), gamma(i, 1)).scaled(f)),
                ]
            })
            .collect()
    });
    r.scalar("rel-6:mutant", Mutant, FailsFrom(1), "g(i) dR(i) = dR(i) g(i)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), c2(gamma(i, 1), d_r(i)), c2(d_r(i), gamma(i, 1))))
            .collect()
    });
    r.scalar("rel-7", Identity, Holds, "xR(i) = xL(i) w(i,-1) and xL(i) = xR(i) w(i)", |n| {
        (1..=n)
            .flat_map(|i| {
                [
                    Instance::new(format!("R i={i}"), x_r(i), c2(x_l(i), omega(i, -1))),
                    Instance::new(format!("L i={i}"), x_l(i), c2(x_r(i), omega(i, 1))),
                ]
            })
            .collect()
    });
    r.scalar("rel-7:mutant", Mutant, FailsFrom(2), "xR(i) = xL(i) w(i)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), x_r(i), c2(x_l(i), omega(i, 1))))
            .collect()
    });
    r.scalar("rel-8", Identity, Holds, "dR(i) = dL(i) w(i) and dL(i) = dR(i) w(i,-1)", |n| {
        (1..=n)
            .flat_map(|i| {
                [
                    Instance::new(format!("R i={i}"), d_r(i), c2(d_l(i), omega(i, 1))),
                    Instance::new(format!("L i={i}"), d_l(i), c2(d_r(i), omega(i, -1))),
                ]
            })
            .collect()
    });
    r.scalar("rel-8:mutant", Mutant, FailsFrom(2), "dR(i) = dL(i) w(i,-1)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), d_r(i), c2(d_l(i), omega(i, -1))))
            .collect()
    });
}

/// `x d - c d x` for the given pair.
fn weyl(x: OperatorExpr, d: OperatorExpr, c: ScalarQ) -> OperatorExpr {
    c2(x.clone(), d.clone()).minus(c2(d, x).scaled(c))
}

/// `-[1/2] (s g(i) + s^-1 g(i,-1)) w(i)^e`.
fn mixed_weyl_rhs(i: usize, omega_exp: i8) -> OperatorExpr {
    let inner = OperatorExpr::sum([gamma(i, 1).scaled(ScalarQ::s()), gamma(i, -1).scaled(ScalarQ::s_pow(-1))]);
    c2(inner, omega(i, omega_exp)).scaled(-qnum_half())
}

fn weyl_relations(r: &mut Registry) {
    r.scalar("weyl-L", Identity, Holds, "xL(i) dL(j) - q^-1 dL(j) xL(i) = 0 for i < j, -q^-1 g(i,-1) for i = j", |n| {
        let mut v: Vec<Instance> = lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), weyl(x_l(i), d_l(j), qi(-1)), OperatorExpr::zero()))
            .collect();
        v.extend((1..=n).map(|i| {
            Instance::new(format!("i=j={i}"), weyl(x_l(i), d_l(i), qi(-1)), gamma(i, -1).scaled(-qi(-1)))
        }));
        v
    });
    r.scalar("weyl-L:mutant", Mutant, FailsFrom(1), "xL(i) dL(i) - q^-1 dL(i) xL(i) = -g(i,-1)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), weyl(x_l(i), d_l(i), qi(-1)), gamma(i, -1).neg()))
            .collect()
    });
    r.scalar("weyl-R", Identity, Holds, "xR(i) dR(j) - q dR(j) xR(i) = 0 for i < j, -q g(i) for i = j", |n| {
        let mut v: Vec<Instance> = lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), weyl(x_r(i), d_r(j), q()), OperatorExpr::zero()))
            .collect();
        v.extend((1..=n).map(|i| Instance::new(format!("i=j={i}"), weyl(x_r(i), d_r(i), q()), gamma(i, 1).scaled(-q()))));
        v
    });
    r.scalar("weyl-R:stated", Erratum, FailsFrom(1), "xR(i) dR(i) - q dR(i) xR(i) = +q g(i)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), weyl(x_r(i), d_r(i), q()), gamma(i, 1).scaled(q())))
            .collect()
    });
    r.scalar("weyl-R:mutant", Mutant, FailsFrom(2), "xR(i) dR(j) - dR(j) xR(i) = 0 for i < j", |n| {
        lt_pairs(n)
            .into_iter()
            .map(|(i, j)| Instance::new(format!("i={i} j={j}"), weyl(x_r(i), d_r(j), ScalarQ::one()), OperatorExpr::zero()))
            .collect()
    });
    r.scalar(
        "mixed-weyl-L",
        Identity,
        Holds,
        "xL(i) dR(j) - dR(j) xL(i) = 0 for i != j, -[1/2](s g(i) + s^-1 g(i,-1)) w(i) for i = j",
        |n| {
            let mut v: Vec<Instance> = ne_pairs(n)
                .into_iter()
                .map(|(i, j)| Instance::new(format!("i={i} j={j}"), weyl(x_l(i), d_r(j), ScalarQ::one()), OperatorExpr::zero()))
                .collect();
            v.extend((1..=n).map(|i| Instance::new(format!("i=j={i}"), weyl(x_l(i), d_r(i), ScalarQ::one()), mixed_weyl_rhs(i, 1))));
            v
        },
    );
    r.scalar("mixed-weyl-L:mutant", Mutant, FailsFrom(2), "mixed Weyl relation with w(i,-1) in place of w(i)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), weyl(x_l(i), d_r(i), ScalarQ::one()), mixed_weyl_rhs(i, -1)))
            .collect()
    });
    r.scalar(
        "mixed-weyl-R",
        Identity,
        Holds,
        "xR(i) dL(j) - dL(j) xR(i) = 0 for i != j, -[1/2](s g(i) + s^-1 g(i,-1)) w(i,-1) for i = j",
        |n| {
            let mut v: Vec<Instance> = ne_pairs(n)
                .into_iter()
                .map(|(i, j)| Instance::new(format!("i={i} j={j}"), weyl(x_r(i), d_l(j), ScalarQ::one()), OperatorExpr::zero()))
                .collect();
            v.extend((1..=n).map(|i| Instance::new(format!("i=j={i}"), weyl(x_r(i), d_l(i), ScalarQ::one()), mixed_weyl_rhs(i, -1))));
            v
        },
    );
    r.scalar("mixed-weyl-R:mutant", Mutant, FailsFrom(2), "mixed Weyl relation with w(i) in place of w(i,-1)", |n| {
        (1..=n)
            .map(|i| Instance::new(format!("i={i}"), weyl(x_r(i), d_l(i), ScalarQ::one()), mixed_weyl_rhs(i, 1)))
            .collect()
    });
}

fn product_rules(r: &mut Registry) {
    let rules: [(&str, Role, Expectation, &str, ProductBuilder); 6] = [
        (
            "product-rule-1",
            Identity,
            Holds,
            "dR(i)(f g) = g(i,-1)(f) dR(i)(g) + dR(i)(f) (w(i) g(i))(g)",
            Arc::new(|_, i| (gamma(i, -1), c2(omega(i, 1), gamma(i, 1)))),
        ),
        (
            "product-rule-1:stated",
            Erratum,
            FailsFrom(2),
            "dR(i)(f g) = g(i,-1)(f) dR(i)(g) + dR(i)(f) gamma(g)",
            Arc::new(|_, i| (gamma(i, -1), gamma_all(1))),
        ),
        (
            "product-rule-1:proof",
            Erratum,
            FailsFrom(2),
            "dR(i)(f g) = g(i,-1)(f) dR(i)(g) + dR(i)(f) (w(i,-1) g(i))(g)",
            Arc::new(|_, i| (gamma(i, -1), c2(omega(i, -1), gamma(i, 1)))),
        ),
        (
            "product-rule-1:mutant",
            Mutant,
            FailsFrom(1),
            "dR(i)(f g) = f dR(i)(g) + dR(i)(f) (w(i) g(i))(g)",
            Arc::new(|_, i| (OperatorExpr::identity(), c2(omega(i, 1), gamma(i, 1)))),
        ),
        (
            "product-rule-2",
            Identity,
            Holds,
            "dR(i)(f g) = g(i)(f) dR(i)(g) + dR(i)(f) (w(i) g(i,-1))(g)",
            Arc::new(|_, i| (gamma(i, 1), c2(omega(i, 1), gamma(i, -1)))),
        ),
        (
            "product-rule-2:stated",
            Erratum,
            FailsFrom(2),
            "dR(i)(f g) = g(i)(f) dR(i)(g) + dR(i)(f) gamma(-1)(g)",
            Arc::new(|_, i| (gamma(i, 1), gamma_all(-1))),
        ),
    ];
    for (name, role, exp, desc, b) in rules {
        r.push(name, role, exp, desc, Check::Product(b));
    }
    r.push(
        "product-rule-2:mutant",
        Mutant,
        FailsFrom(1),
        "dR(i)(f g) = g(i)(f) dR(i)(g) + dR(i)(f) (w(i) g(i))(g)",
        Check::Product(Arc::new(|_, i| (gamma(i, 1), c2(omega(i, 1), gamma(i, 1))))),
    );
}

/// `{c gamma^2}_q` with `c = q^e`.
fn brace_gamma_sq(e: i64) -> OperatorExpr {
    let (g2, g2inv) = gamma_sq();
    OperatorExpr::q_brace(&qi(e), g2, g2inv).expect("q is not a root of unity")
}

fn fixed(r: &mut Registry, name: &str, role: Role, exp: Expectation, desc: &str, degrees: Vec<u32>, build: Builder) {
    r.push(name, role, exp, desc, Check::Matrix {
        build,
        space: ValueSpace::Scalar,
        degrees: Some(degrees),
    });
}

fn harmonic_relations(r: &mut Registry) {
    let conj = |c: i64| {
        move |n: usize| {
            let (g2, g2inv) = gamma_sq();
            vec![
                Instance::new("Qhat_L", c2(c2(g2.clone(), qhat_l(n)), g2inv.clone()), qhat_l(n).scaled(qi(c))),
                Instance::new("Lap_R", c2(c2(g2, laplacian_r(n)), g2inv), laplacian_r(n).scaled(qi(-c))),
            ]
        }
    };
    r.scalar("sl2-conjugation", Identity, Holds, "gamma^2 Qhat_L gamma^-2 = q^4 Qhat_L, gamma^2 Lap_R gamma^-2 = q^-4 Lap_R", conj(4));
    r.scalar("sl2-conjugation:stated", Erratum, FailsFrom(1), "gamma^2 Qhat_L gamma^-2 = q^2 Qhat_L, gamma^2 Lap_R gamma^-2 = q^-2 Lap_R", conj(2));
    r.scalar("sl2-conjugation:mutant", Mutant, FailsFrom(1), "gamma^2 Qhat_L gamma^-2 = Qhat_L", |n| {
        let (g2, g2inv) = gamma_sq();
        vec![Instance::new("Qhat_L", c2(c2(g2, qhat_l(n)), g2inv), qhat_l(n))]
    });
    let comm = |scale: bool| {
        move |n: usize| {
            let mut lhs = OperatorExpr::commutator(&laplacian_r(n), &qhat_l(n));
            if scale {
                lhs = lhs.scaled(qnum(2).inv().expect("nonzero"));
            }
            vec![Instance::new("", lhs, brace_gamma_sq(n as i64))]
        }
    };
    r.scalar("sl2-commutator", Identity, Holds, "(Lap_R Qhat_L - Qhat_L Lap_R)/[2] = {q^n gamma^2}", comm(true));
    r.scalar("sl2-commutator:mutant", Mutant, FailsFrom(1), "Lap_R Qhat_L - Qhat_L Lap_R = {q^n gamma^2}", comm(false));
    let power = |mutant: bool| {
        move |n: usize| {
            (1..=3u32)
                .map(|k| {
                    let lap = laplacian_r(n);
                    let qk = qhat_l(n).pow(k);
                    let lhs = c2(lap.clone(), qk.clone()).minus(c2(qk, lap));
                    let factor = if mutant { qnum(k as i64) } else { qnum(2 * k as i64) };
                    let rhs = c2(qhat_l(n).pow(k - 1), brace_gamma_sq(2 * k as i64 + n as i64 - 2)).scaled(factor);
                    Instance::new(format!("k={k}"), lhs, rhs)
                })
                .collect()
        }
    };
    r.scalar("comm-power", Identity, Holds, "Lap_R Qhat_L^k - Qhat_L^k Lap_R = Qhat_L^(k-1) [2k] {q^(2k+n-2) gamma^2}", power(false));
    r.scalar("comm-power:mutant", Mutant, FailsFrom(1), "comm-power with [k] in place of [2k]", power(true));
    let radius = |shift: i64| -> Builder {
        Arc::new(move |n: usize| {
            (1..=3u32)
                .map(|k| {
                    let lhs = c2(laplacian_r(n), qhat_l(n).pow(k));
                    let c = &qnum(2 * k as i64) * &qnum(2 * k as i64 + n as i64 - 2 + shift);
                    Instance::new(format!("k={k}"), lhs, qhat_l(n).pow(k - 1).scaled(c))
                })
                .collect()
        })
    };
    fixed(r, "laplacian-radius-power", Identity, Holds, "Lap_R(Q^k) = Q^(k-1) [2k] [2k+n-2]", vec![0], radius(0));
    fixed(r, "laplacian-radius-power:mutant", Mutant, FailsFrom(1), "Lap_R(Q^k) = Q^(k-1) [2k] [2k+n]", vec![0], radius(2));
}

fn neg_sq(a: OperatorExpr, b: OperatorExpr) -> (OperatorExpr, OperatorExpr) {
    (a.pow(2), b.neg())
}

/// Dirac operator of the given generator family with the `D^R` weights.
fn dirac_r_in(n: usize, d: Deformation) -> OperatorExpr {
    OperatorExpr::sum((1..=n).map(|i| c2(gen(i, d), d_r(i)).scaled(ScalarQ::s_pow((n - i) as i64))))
}

fn factorizations(r: &mut Registry) {
    let sq = |f: fn(usize) -> (OperatorExpr, OperatorExpr)| {
        move |n: usize| {
            let (l, rr) = f(n);
            vec![Instance::new("", l, rr)]
        }
    };
    let dr: fn(usize) -> (OperatorExpr, OperatorExpr) = |n| neg_sq(dirac_r(n), laplacian_r(n));
    let dl: fn(usize) -> (OperatorExpr, OperatorExpr) = |n| neg_sq(dirac_l(n), laplacian_l(n));
    let vl: fn(usize) -> (OperatorExpr, OperatorExpr) = |n| neg_sq(vector_var(VectorSide::Left, n), qhat_l(n));
    let vr: fn(usize) -> (OperatorExpr, OperatorExpr) = |n| neg_sq(vector_var(VectorSide::Right, n), qhat_r(n));
    r.scalar("dirac-square-R", Identity, Holds, "Dirac_R Dirac_R = -Lap_R on scalar inputs", sq(dr));
    r.matrix("dirac-square-R:clifford", Obstruction, FailsFrom(2), "Dirac_R Dirac_R = -Lap_R on e-valued inputs", CL, sq(dr));
    r.scalar("dirac-square-R:mutant", Mutant, FailsFrom(2), "Dirac_R built on ep generators squares to -Lap_R", sq(|n| {
        neg_sq(dirac_r_in(n, Deformation::Minus), laplacian_r(n))
    }));
    r.scalar("dirac-square-L", Identity, Holds, "Dirac_L Dirac_L = -Lap_L on scalar inputs", sq(dl));
    r.matrix("dirac-square-L:clifford", Obstruction, FailsFrom(2), "Dirac_L Dirac_L = -Lap_L on ep-valued inputs", CLP, sq(dl));
    r.scalar("dirac-square-L:mutant", Mutant, FailsFrom(2), "Dirac_L Dirac_L = -Lap_R", sq(|n| neg_sq(dirac_l(n), laplacian_r(n))));
    r.scalar("vector-square-L", Identity, Holds, "xvec_L xvec_L = -Qhat_L on scalar inputs", sq(vl));
    r.matrix("vector-square-L:clifford", Obstruction, FailsFrom(2), "xvec_L xvec_L = -Qhat_L on ep-valued inputs", CLP, sq(vl));
    r.scalar("vector-square-L:mutant", Mutant, FailsFrom(2), "xvec_L xvec_L = -Qhat_R", sq(|n| {
        neg_sq(vector_var(VectorSide::Left, n), qhat_r(n))
    }));
    r.scalar("vector-square-R", Identity, Holds, "xvec_R xvec_R = -Qhat_R on scalar inputs", sq(vr));
    r.matrix("vector-square-R:clifford", Obstruction, FailsFrom(2), "xvec_R xvec_R = -Qhat_R on e-valued inputs", CL, sq(vr));
    r.scalar("vector-square-R:mutant", Mutant, FailsFrom(2), "xvec_R xvec_R = -Qhat_L", sq(|n| {
        neg_sq(vector_var(VectorSide::Right, n), qhat_l(n))
    }));

    let two_dim = |first: OperatorExpr, second: OperatorExpr| -> Builder {
        Arc::new(move |n: usize| {
            if n != 2 {
                return Vec::new();
            }
            vec![Instance::new("", c2(first.clone(), second.clone()), laplacian_r(2))]
        })
    };
    let e2d2 = || c2(gen(2, Deformation::Plus), d_r(2));
    let i = ScalarQ::i;
    let builds = [
        (
            "complex-factorization",
            Identity,
            Holds,
            "(q dR(1) - i dR(2)) (dR(1) + i dR(2)) = Lap_R at n = 2",
            two_dim(
                d_r(1).scaled(q()).minus(d_r(2).scaled(i())),
                OperatorExpr::sum([d_r(1), d_r(2).scaled(i())]),
            ),
        ),
        (
            "complex-factorization:mutant",
            Mutant,
            FailsFrom(1),
            "(dR(1) - i dR(2)) (dR(1) + i dR(2)) = Lap_R at n = 2",
            two_dim(d_r(1).minus(d_r(2).scaled(i())), OperatorExpr::sum([d_r(1), d_r(2).scaled(i())])),
        ),
        (
            "clifford-factorization",
            Identity,
            Holds,
            "(q dR(1) - e(2) dR(2)) (dR(1) + e(2) dR(2)) = Lap_R at n = 2 on scalar inputs",
            two_dim(d_r(1).scaled(q()).minus(e2d2()), OperatorExpr::sum([d_r(1), e2d2()])),
        ),
        (
            "clifford-factorization:mutant",
            Mutant,
            FailsFrom(1),
            "(q dR(1) + e(2) dR(2)) (dR(1) + e(2) dR(2)) = Lap_R at n = 2",
            two_dim(OperatorExpr::sum([d_r(1).scaled(q()), e2d2()]), OperatorExpr::sum([d_r(1), e2d2()])),
        ),
    ];
    for (name, role, exp, desc, build) in builds {
        fixed_space(r, name, role, exp, desc, build);
    }
}

fn fixed_space(r: &mut Registry, name: &str, role: Role, exp: Expectation, desc: &str, build: Builder) {
    r.push(name, role, exp, desc, Check::Matrix {
        build,
        space: ValueSpace::Scalar,
        degrees: None,
    });
}

/// Generators `(E, F, K, K^-1)` of one realization.
type Triple = (OperatorExpr, OperatorExpr, OperatorExpr, OperatorExpr);

/// `K E K^-1 = q E`, `K F K^-1 = q^-1 F` and
/// `c (E F + F E) = (K - K^-1)/(q - q^-1)` with `c = 1/(s + s^-1)`; the
/// normalization `1/sqrt(s + s^-1)` of `E` and `F` is absorbed into `c`.
fn osp_instances(i: usize, (e, f, k, kinv): Triple) -> Vec<Instance> {
    let c = (&ScalarQ::s() + &ScalarQ::s_pow(-1)).inv().expect("nonzero");
    let brace = OperatorExpr::sum([k.clone(), kinv.clone().neg()]).scaled((&q() - &qi(-1)).inv().expect("nonzero"));
    vec![
        Instance::new(format!("KEK^-1 i={i}"), c2(c2(k.clone(), e.clone()), kinv.clone()), e.clone().scaled(q())),
        Instance::new(format!("KFK^-1 i={i}"), c2(c2(k, f.clone()), kinv), f.clone().scaled(qi(-1))),
        Instance::new(format!("EF+FE i={i}"), OperatorExpr::anticommutator(&e, &f).scaled(c), brace),
    ]
}

fn clifford_triple(i: usize, d: OperatorExpr, x: OperatorExpr) -> Triple {
    let e = || gen(i, Deformation::Plus);
    (
        c2(e(), d),
        c2(e(), x),
        gamma(i, -1).scaled(ScalarQ::s_pow(-1)),
        gamma(i, 1).scaled(ScalarQ::s()),
    )
}

fn plain_triple(i: usize, d: OperatorExpr, x: OperatorExpr, ks: ScalarQ) -> Triple {
    (
        x,
        d,
        gamma(i, 1).scaled(ks.clone()),
        gamma(i, -1).scaled(ks.inv().expect("nonzero")),
    )
}

fn osp_relations(r: &mut Registry) {
    let cl_l = |n: usize| (1..=n).flat_map(|i| osp_instances(i, clifford_triple(i, d_l(i), x_l(i)))).collect();
    let cl_r = |n: usize| (1..=n).flat_map(|i| osp_instances(i, clifford_triple(i, d_r(i), x_r(i)))).collect();
    r.scalar("osp-L", Identity, Holds, "E = e(i) dL(i), F = e(i) xL(i), K = s^-1 g(i,-1) on scalar inputs", cl_l);
    r.matrix("osp-L:clifford", Obstruction, FailsFrom(2), "osp-L relations on e-valued inputs", CL, cl_l);
    r.scalar("osp-L:mutant", Mutant, FailsFrom(1), "osp-L with K = s g(i,-1)", |n| {
        (1..=n)
            .flat_map(|i| {
                let (e, f, _, _) = clifford_triple(i, d_l(i), x_l(i));
                osp_instances(i, (e, f, gamma(i, -1).scaled(ScalarQ::s()), gamma(i, 1).scaled(ScalarQ::s_pow(-1))))
            })
            .collect()
    });
    r.scalar("osp-R", Identity, Holds, "E = e(i) dR(i), F = e(i) xR(i), K = s^-1 g(i,-1) on scalar inputs", cl_r);
    r.matrix("osp-R:clifford", Obstruction, FailsFrom(2), "osp-R relations on e-valued inputs", CL, cl_r);
    r.scalar("osp-R:mutant", Mutant, FailsFrom(1), "osp-R with F = xR(i) e(i) and K = s g(i,-1)", |n| {
        (1..=n)
            .flat_map(|i| {
                let (e, _, _, _) = clifford_triple(i, d_r(i), x_r(i));
                let f = c2(x_r(i), gen(i, Deformation::Plus));
                osp_instances(i, (e, f, gamma(i, -1).scaled(ScalarQ::s()), gamma(i, 1).scaled(ScalarQ::s_pow(-1))))
            })
            .collect()
    });
    r.scalar("osp-plain-L", Identity, Holds, "E = xL(i), F = dL(i), K = s g(i)", |n| {
        (1..=n)
            .flat_map(|i| osp_instances(i, plain_triple(i, d_l(i), x_l(i), ScalarQ::s())))
            .collect()
    });
    r.scalar("osp-plain-L:mutant", Mutant, FailsFrom(1), "E = xL(i), F = dL(i), K = g(i)", |n| {
        (1..=n)
            .flat_map(|i| osp_instances(i, plain_triple(i, d_l(i), x_l(i), ScalarQ::one())))
            .collect()
    });
    r.scalar("osp-plain-R", Identity, Holds, "E = xR(i), F = dR(i), K = s g(i)", |n| {
        (1..=n)
            .flat_map(|i| osp_instances(i, plain_triple(i, d_r(i), x_r(i), ScalarQ::s())))
            .collect()
    });
    r.scalar("osp-plain-R:mutant", Mutant, FailsFrom(1), "E = xR(i), F = dR(i), K = s^-1 g(i)", |n| {
        (1..=n)
            .flat_map(|i| osp_instances(i, plain_triple(i, d_r(i), x_r(i), ScalarQ::s_pow(-1))))
            .collect()
    });
}
