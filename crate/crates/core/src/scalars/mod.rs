//! The coefficient field `Q(i)(s)` with `s` a formal square root of `q`.

mod gauss;
mod laurent;
mod modgcd;
mod scalar;
mod zpoly;

pub use gauss::GaussRat;
pub use laurent::LaurentPoly;
pub use scalar::{qbrace, qfactorial, qnum, qnum_half, ScalarQ};
pub(crate) use zpoly::ZPoly;

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i64) -> ScalarQ {
        ScalarQ::s_pow(e)
    }

    #[test]
    fn qnum_values() {
        assert!(qnum(0).is_zero());
        assert_eq!(qnum(2), &ScalarQ::q() + &ScalarQ::q_pow(-1));
        assert_eq!(qnum(3), [ScalarQ::q_pow(2), ScalarQ::one(), ScalarQ::q_pow(-2)].into_iter().sum());
        assert_eq!(qnum(-3), -qnum(3));
        assert_eq!(qnum(3).to_text(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn qnum_matches_quotient_definition() {
        for m in -5..=6 {
            let top = &ScalarQ::q_pow(m) - &ScalarQ::q_pow(-m);
            let bot = &ScalarQ::q() - &ScalarQ::q_pow(-1);
            assert_eq!(top.checked_div(&bot).unwrap(), qnum(m));
            assert!(qnum(m).is_laurent());
        }
    }

    #[test]
    fn half_bracket() {
        let h = qnum_half();
        assert!((&h * &(&s(1) + &s(-1))).is_one());
        let top = &s(1) - &s(-1);
        let bot = &s(2) - &s(-2);
        assert_eq!(top.checked_div(&bot).unwrap(), h);
        assert_eq!(h.eval_at(&GaussRat::one()).unwrap(), GaussRat::from_ratio(1, 2));
    }

    #[test]
    fn factorials() {
        assert!(qfactorial(&[0, 0, 0]).is_one());
        assert_eq!(qfactorial(&[2]), qnum(2));
        assert_eq!(qfactorial(&[2, 1]), qnum(2));
        assert_eq!(qfactorial(&[3]), &qnum(3) * &qnum(2));
    }

    #[test]
    fn brace_of_power() {
        // {q^m} = [m]
        for m in 1..4 {
            assert_eq!(qbrace(&ScalarQ::q_pow(m)).unwrap(), qnum(m));
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(qnum(2).eval_at(&GaussRat::one()).unwrap(), GaussRat::from_int(2));
        // s = 2 means q = 4
        assert_eq!(qnum(3).eval_at(&GaussRat::from_int(2)).unwrap(), GaussRat::from_ratio(273, 16));
        assert_eq!(qnum(3).eval_at_q(&GaussRat::from_int(2)).unwrap(), GaussRat::from_ratio(21, 4));
        assert!(ScalarQ::s().eval_at_q(&GaussRat::one()).is_err());
        let pole = ScalarQ::one().checked_div(&(&s(1) - &ScalarQ::one())).unwrap();
        assert!(matches!(pole.eval_at(&GaussRat::one()), Err(crate::Error::Pole { .. })));
        assert!(matches!(s(-1).eval_at(&GaussRat::zero()), Err(crate::Error::Pole { .. })));
    }

    #[test]
    fn normalization_is_canonical() {
        let a = (&s(2) + &s(-2)).checked_div(&(&s(1) + &s(-1))).unwrap();
        let b = (&s(4) + &ScalarQ::one()).checked_div(&(&s(3) + &s(1))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denominator().low(), 0);
        assert!(a.denominator().lowest_coeff().unwrap().is_one());
        assert_eq!(a.to_text(), "(s^3 + s^-1)/(s^2 + 1)");
        let c = (&ScalarQ::from_int(2) * &s(3)).checked_div(&(&ScalarQ::from_int(4) * &s(5))).unwrap();
        assert_eq!(c, &ScalarQ::from_ratio(1, 2) * &s(-2));
    }

    #[test]
    fn text_forms() {
        assert_eq!(ScalarQ::zero().to_text(), "0");
        assert_eq!((-&ScalarQ::q_pow(-1)).to_text(), "-q^-1");
        assert_eq!((&s(1) - &ScalarQ::i()).to_text(), "s - i");
        assert_eq!(qnum(2).to_latex(), "q+q^{-1}");
        assert_eq!(qnum_half().to_text(), "s/(s^2 + 1)");
    }

    #[test]
    fn json_round_trip() {
        let x = (&qnum(3) + &ScalarQ::i()).checked_div(&(&s(1) - &ScalarQ::from_ratio(2, 3))).unwrap();
        let j = serde_json::to_string(&x).unwrap();
        let y: ScalarQ = serde_json::from_str(&j).unwrap();
        assert_eq!(x, y);
        assert_eq!(serde_json::to_string(&ScalarQ::q()).unwrap(), r#"{"num":[[2,"1","0"]],"den":[[0,"1","0"]]}"#);
    }

    #[test]
    fn conjugation() {
        let x = &ScalarQ::i() * &s(1);
        assert_eq!(x.conj(), -x);
    }
}
