use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Rational;

const SIGNIFICANT: i64 = 17;

/// Decimal literal for `r` with at most 17 significant digits.
///
/// The digits are `r` rounded half-even at the 17th significant digit; exact
/// decimals that need fewer digits are emitted as-is and integers get a
/// trailing `.0`. When that rounding lands on the far side of a binary64
/// rounding boundary (double rounding), the last digit is moved one unit
/// toward `r`'s nearest binary64 value, so that parsing the literal always
/// yields exactly that value.
pub fn render_coefficient_literal(r: &Rational) -> String {
    if r.is_integer() {
        return format!("{}.0", r.numer());
    }
    let negative = r.is_negative();
    let x = r.as_big().abs();

    let mut scale = decimal_exponent(&x) - (SIGNIFICANT - 1);
    let mut digits = round_half_even(&(&x * pow10(-scale)));
    if digits == BigInt::from(10u8).pow(SIGNIFICANT as u32) {
        scale += 1;
        digits = round_half_even(&(&x * pow10(-scale)));
    }

    let target = r.to_f64();
    let mut text = format_decimal(negative, &digits, scale);
    // At most one correction is ever needed; the loop bound is generous.
    for _ in 0..4 {
        let parsed: f64 = text.parse().expect("rendered literal parses");
        if parsed == target {
            return text;
        }
        if parsed.abs() < target.abs() {
            digits += 1;
        } else {
            digits -= 1;
        }
        text = format_decimal(negative, &digits, scale);
    }
    text
}

fn pow10(e: i64) -> BigRational {
    let p = BigInt::from(10u8).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `floor(log10(x))` for `x > 0`.
fn decimal_exponent(x: &BigRational) -> i64 {
    let bits = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while pow10(e) > *x {
        e -= 1;
    }
    while pow10(e + 1) <= *x {
        e += 1;
    }
    e
}

fn round_half_even(x: &BigRational) -> BigInt {
    let (q, rem) = x.numer().div_mod_floor(x.denom());
    let twice = &rem * 2u8;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal if q.is_even() => q,
        std::cmp::Ordering::Equal => q + 1,
    }
}

/// Formats `digits * 10^scale`.
fn format_decimal(negative: bool, digits: &BigInt, scale: i64) -> String {
    let mut digits = digits.clone();
    let mut scale = scale;
    let ten = BigInt::from(10u8);
    while !digits.is_zero() && (&digits % &ten).is_zero() {
        digits /= &ten;
        scale += 1;
    }
    let d = digits.to_string();
    let len = d.len() as i64;
    let exp10 = len - 1 + scale;
    let sign = if negative { "-" } else { "" };

    let body = if !(-5..17).contains(&exp10) {
        let frac = if d.len() > 1 { &d[1..] } else { "0" };
        format!("{}.{}e{}", &d[..1], frac, exp10)
    } else if scale >= 0 {
        format!("{}{}.0", d, "0".repeat(scale as usize))
    } else if len + scale > 0 {
        let point = (len + scale) as usize;
        format!("{}.{}", &d[..point], &d[point..])
    } else {
        format!("0.{}{}", "0".repeat((-scale - len) as usize), d)
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Long division of `num/den` (both positive, `num < den`) to `n`
    /// significant digits, then half-even rounding at the 17th.
    fn long_division_17(num: u64, den: u64) -> String {
        let mut rem = num as u128;
        let den = den as u128;
        let mut digits = Vec::new();
        let mut leading_zeros = 0;
        while digits.len() < 18 {
            rem *= 10;
            let d = (rem / den) as u8;
            rem %= den;
            if digits.is_empty() && d == 0 {
                leading_zeros += 1;
                continue;
            }
            digits.push(d);
        }
        let exact_tail = rem == 0;
        let mut kept: Vec<u8> = digits[..17].to_vec();
        let next = digits[17];
        let round_up = next > 5 || (next == 5 && (!exact_tail || kept[16] % 2 == 1));
        if round_up {
            let mut i = 16;
            loop {
                if kept[i] == 9 {
                    kept[i] = 0;
                    i -= 1;
                } else {
                    kept[i] += 1;
                    break;
                }
            }
        }
        while kept.last() == Some(&0) {
            kept.pop();
        }
        let s: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
        format!("0.{}{}", "0".repeat(leading_zeros), s)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(render_coefficient_literal(&Rational::ratio(1, 2)), "0.5");
        assert_eq!(long_division_17(1, 6), "0.16666666666666667");
        assert_eq!(
            render_coefficient_literal(&Rational::ratio(1, 6)),
            "0.16666666666666667"
        );
        assert_eq!(long_division_17(2, 3), "0.66666666666666667");
        assert_eq!(
            render_coefficient_literal(&Rational::ratio(2, 3)),
            "0.66666666666666667"
        );
    }

    #[test]
    fn integers_and_short_decimals() {
        assert_eq!(render_coefficient_literal(&Rational::zero()), "0.0");
        assert_eq!(render_coefficient_literal(&Rational::from_integer(-8)), "-8.0");
        assert_eq!(render_coefficient_literal(&Rational::ratio(3, 40)), "0.075");
        assert_eq!(render_coefficient_literal(&Rational::ratio(-1, 10)), "-0.1");
        assert_eq!(
            render_coefficient_literal(&Rational::ratio(-2187, 6784)),
            "-0.32237617924528302"
        );
        assert_eq!(
            render_coefficient_literal(&Rational::ratio(1, 3_000_000)),
            "3.3333333333333333e-7"
        );
        assert_eq!(
            render_coefficient_literal(&Rational::ratio(1, 1_000_000)),
            "1.0e-6"
        );
    }

    #[test]
    fn double_rounding_is_corrected() {
        // Found by search: half-even at 17 digits crosses a binary64 midpoint.
        let mut corrected = 0;
        for n in 1..20_000i64 {
            let r = Rational::ratio(n, 7919);
            if r.is_integer() {
                continue;
            }
            let text = render_coefficient_literal(&r);
            assert_eq!(text.parse::<f64>().unwrap(), r.to_f64(), "{r}");
            let plain = format_plain(&r);
            if plain != text {
                corrected += 1;
            }
        }
        assert!(corrected > 0);
    }

    fn format_plain(r: &Rational) -> String {
        let x = r.as_big().abs();
        let scale = decimal_exponent(&x) - 16;
        format_decimal(r.is_negative(), &round_half_even(&(&x * pow10(-scale))), scale)
    }

    proptest! {
        #[test]
        fn reparses_to_nearest_binary64(m in -1_000_000_000i64..=1_000_000_000, n in 1i64..=1_000_000_000) {
            let r = Rational::ratio(m, n);
            let text = render_coefficient_literal(&r);
            prop_assert_eq!(text.parse::<f64>().unwrap(), r.to_f64());
            let sig = text.trim_start_matches('-').split('e').next().unwrap()
                .chars().filter(|c| c.is_ascii_digit()).collect::<String>();
            prop_assert!(sig.trim_start_matches('0').trim_end_matches('0').len() <= 17);
        }

        #[test]
        fn deterministic(m in -1000i64..1000, n in 1i64..1000) {
            let r = Rational::ratio(m, n);
            prop_assert_eq!(render_coefficient_literal(&r), render_coefficient_literal(&r));
        }
    }
}
