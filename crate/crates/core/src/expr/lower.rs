//! Lowering of parse trees to scalars, polynomials and operators.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::parse::Ast;
use super::Value;
use crate::error::{Error, Result};
use crate::ops::named::{self, VectorSide};
use crate::ops::{OperatorExpr, PrimitiveOp};
use crate::qclifford::{Blade, CliffordPolynomial, Deformation};
use crate::qpoly::{check_index, q_radius, zq_power, QMonomial, QPolynomial};
use crate::scalars::{qnum, qnum_half, GaussRat, ScalarQ};

fn type_error(what: &str, a: &Value, b: &Value) -> Error {
    Error::Lowering(format!("cannot {what} a {} and a {}", a.kind(), b.kind()))
}

fn poly(n: usize, c: ScalarQ) -> CliffordPolynomial {
    CliffordPolynomial::from_qpoly(&QPolynomial::constant(n, c))
}

fn add(a: Value, b: Value, n: usize) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (Value::Op(x), Value::Op(y)) => Value::Op(OperatorExpr::sum([x, y])),
        (Value::Op(x), Value::Scalar(y)) => Value::Op(OperatorExpr::sum([x, OperatorExpr::scalar(y)])),
        (Value::Scalar(x), Value::Op(y)) => Value::Op(OperatorExpr::sum([OperatorExpr::scalar(x), y])),
        (a @ Value::Op(_), b) | (a, b @ Value::Op(_)) => return Err(type_error("add", &a, &b)),
        (a, b) => Value::Poly(a.into_poly(n)?.add(&b.into_poly(n)?)?),
    })
}

fn mul(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(x), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(x)) => Value::Poly(p.scale(&x)),
        (Value::Poly(x), Value::Poly(y)) => Value::Poly(x.mul(&y)?),
        (Value::Scalar(x), Value::Op(o)) | (Value::Op(o), Value::Scalar(x)) => Value::Op(o.scaled(x)),
        (Value::Op(x), Value::Op(y)) => Value::Op(OperatorExpr::compose([x, y])),
        (a, b) => return Err(type_error("multiply", &a, &b)),
    })
}

fn neg(v: Value) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Poly(p) => Value::Poly(p.neg()),
        Value::Op(o) => Value::Op(o.neg()),
    }
}

fn pow(v: Value, e: i64) -> Result<Value> {
    if let Value::Scalar(c) = v {
        return Ok(Value::Scalar(c.pow(e)?));
    }
    let k = u32::try_from(e).map_err(|_| Error::Lowering(format!("negative power {e} of a {}", v.kind())))?;
    Ok(match v {
        Value::Poly(p) => {
            let mut acc = poly(p.dim(), ScalarQ::one());
            if let Some(d) = p.deformation() {
                acc = acc.with_deformation(d)?;
            }
            for _ in 0..k {
                acc = acc.mul(&p)?;
            }
            Value::Poly(acc)
        }
        Value::Op(o) => Value::Op(o.pow(k)),
        Value::Scalar(_) => unreachable!(),
    })
}

fn exponent(args: &[i64], name: &str) -> Result<i8> {
    match args {
        [] | [1] => Ok(1),
        [-1] => Ok(-1),
        _ => Err(Error::Lowering(format!("`{name}` takes an exponent of 1 or -1"))),
    }
}

fn one_index(name: &str, args: &[i64], n: usize) -> Result<usize> {
    match args {
        [i] if *i >= 1 => {
            let i = *i as usize;
            check_index(i, n)?;
            Ok(i)
        }
        _ => Err(Error::Lowering(format!("`{name}` takes one positive index"))),
    }
}

fn blade(args: &[i64], n: usize) -> Result<Blade> {
    let idx: Vec<usize> = args
        .iter()
        .map(|&a| usize::try_from(a).map_err(|_| Error::Lowering(format!("bad blade index {a}"))))
        .collect::<Result<_>>()?;
    for &i in &idx {
        check_index(i, n)?;
    }
    Blade::from_indices(&idx)
}

fn call(name: &str, args: &[i64], n: usize) -> Result<Value> {
    let prim = |p: PrimitiveOp| Ok(Value::Op(p.into()));
    match name {
        "dR" => prim(PrimitiveOp::DiffR(one_index(name, args, n)?)),
        "dL" => prim(PrimitiveOp::DiffL(one_index(name, args, n)?)),
        "xL" => prim(PrimitiveOp::MulVarL(one_index(name, args, n)?)),
        "xR" => prim(PrimitiveOp::MulVarR(one_index(name, args, n)?)),
        "g" | "w" => {
            let (i, rest) = args
                .split_first()
                .ok_or_else(|| Error::Lowering(format!("`{name}` needs an index")))?;
            let i = one_index(name, &[*i], n)?;
            let e = exponent(rest, name)?;
            prim(if name == "g" { PrimitiveOp::Gamma(i, e) } else { PrimitiveOp::Omega(i, e) })
        }
        "gamma" => prim(PrimitiveOp::GammaAll(exponent(args, name)?)),
        "e" => prim(PrimitiveOp::MulBladeLeft(blade(args, n)?, Deformation::Plus)),
        "ep" => prim(PrimitiveOp::MulBladeLeft(blade(args, n)?, Deformation::Minus)),
        "eR" => prim(PrimitiveOp::MulBladeRight(blade(args, n)?, Deformation::Plus)),
        "epR" => prim(PrimitiveOp::MulBladeRight(blade(args, n)?, Deformation::Minus)),
        "zq" | "zqbar" => {
            if n != 2 {
                return Err(Error::Lowering(format!("`{name}` lives in two variables, not {n}")));
            }
            match args {
                [m] if *m >= 0 => Ok(Value::Poly(CliffordPolynomial::from_qpoly(&zq_power(*m as u32, name == "zqbar")))),
                _ => Err(Error::Lowering(format!("`{name}` takes one non-negative power"))),
            }
        }
        _ => Err(Error::Lowering(format!("unknown function `{name}`"))),
    }
}

fn name(name: &str, n: usize) -> Result<Value> {
    let op = |o: OperatorExpr| Ok(Value::Op(o));
    match name {
        "i" => Ok(Value::Scalar(ScalarQ::i())),
        "q" => Ok(Value::Scalar(ScalarQ::q())),
        "s" => Ok(Value::Scalar(ScalarQ::s())),
        "Q" => Ok(Value::Poly(CliffordPolynomial::from_qpoly(&q_radius(n)))),
        "id" => op(OperatorExpr::identity()),
        "gamma" => op(named::gamma_all(1)),
        "Lap_R" => op(named::laplacian_r(n)),
        "Lap_L" => op(named::laplacian_l(n)),
        "Qhat_L" => op(named::qhat_l(n)),
        "Qhat_R" => op(named::qhat_r(n)),
        "Dirac_R" => op(named::dirac_r(n)),
        "Dirac_L" => op(named::dirac_l(n)),
        "xvec_L" => op(named::vector_var(VectorSide::Left, n)),
        "xvec_R" => op(named::vector_var(VectorSide::Right, n)),
        "LxQ" => op(named::vector_var(VectorSide::LeftInPlus, n)),
        _ => Err(Error::Lowering(format!("unknown name `{name}`"))),
    }
}

/// Lowers a tree in dimension `n`.
pub fn lower(ast: &Ast, n: usize) -> Result<Value> {
    match ast {
        Ast::Int(v) => Ok(Value::Scalar(ScalarQ::from_gauss(GaussRat::real(BigRational::from_integer(
            BigInt::clone(v),
        ))))),
        Ast::Name(s) => name(s, n),
        Ast::Var(i) => {
            check_index(*i, n)?;
            Ok(Value::Poly(CliffordPolynomial::from_qpoly(&QPolynomial::monomial(
                QMonomial::var(n, *i),
                ScalarQ::one(),
            ))))
        }
        Ast::Generator { minus, indices } => {
            let d = if *minus { Deformation::Minus } else { Deformation::Plus };
            let mut acc = poly(n, ScalarQ::one()).with_deformation(d)?;
            for &i in indices {
                check_index(i, n)?;
                let g = CliffordPolynomial::term(QMonomial::one(n), Blade::generator(i), ScalarQ::one(), Some(d))?;
                acc = acc.mul(&g)?;
            }
            Ok(Value::Poly(acc))
        }
        Ast::Bracket { m, half } => Ok(Value::Scalar(if *half { qnum_half() } else { qnum(*m) })),
        Ast::Call { name, args } => call(name, args, n),
        Ast::Neg(a) => Ok(neg(lower(a, n)?)),
        Ast::Add(a, b) => add(lower(a, n)?, lower(b, n)?, n),
        Ast::Sub(a, b) => add(lower(a, n)?, neg(lower(b, n)?), n),
        Ast::Mul(a, b) => mul(lower(a, n)?, lower(b, n)?),
        Ast::Div(a, b) => {
            let d = match lower(b, n)? {
                Value::Scalar(d) => d.inv()?,
                other => return Err(Error::Lowering(format!("cannot divide by a {}", other.kind()))),
            };
            mul(lower(a, n)?, Value::Scalar(d))
        }
        Ast::Pow(a, e) => pow(lower(a, n)?, *e),
    }
}
