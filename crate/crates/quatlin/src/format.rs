//! Text and JSON renderings of quaternions, canonical forms and matrices.
//!
//! Reals are printed with up to 12 significant digits; integral values are
//! printed without a decimal point.

use quatlin_core::{CanonicalForm, Matrix4, Quaternion};
use serde_json::{json, Value};

/// Output style for [`format_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// The canonical expression `A*q + B*q*i + C*q*j + D*q*k`, with unit
    /// coefficients and zero terms suppressed.
    Text,
    Json,
}

const SIGNIFICANT_DIGITS: usize = 12;

pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    if x.fract() == 0.0 && x.abs() < 1e15 {
        return format!("{}", x as i64);
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_fraction(mantissa))
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Tuple style, `(a,b,c,d)`.
pub fn format_quaternion(q: Quaternion) -> String {
    let [a, b, c, d] = q.to_array().map(format_real);
    format!("({a},{b},{c},{d})")
}

/// `{ A; B; C; D }` with tuple-style coefficients.
pub fn format_tuple(f: &CanonicalForm) -> String {
    let [a, b, c, d] = f.slots().map(format_quaternion);
    format!("{{ {a}; {b}; {c}; {d} }}")
}

/// Four bracketed rows with right-aligned columns.
pub fn format_matrix(m: &Matrix4) -> String {
    let cells: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|v| format_real(*v)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("[ {} ]\n", padded.join("  ")));
    }
    out
}

pub fn format_form(f: &CanonicalForm, style: Style) -> String {
    match style {
        Style::Text => format_expression(f),
        Style::Json => form_json(f).to_string(),
    }
}

fn format_expression(f: &CanonicalForm) -> String {
    let mut out = String::new();
    for (coeff, suffix) in f.slots().into_iter().zip(["", "*i", "*j", "*k"]) {
        if coeff == Quaternion::ZERO {
            continue;
        }
        let (negative, prefix) = coefficient_prefix(coeff);
        let term = format!("{prefix}q{suffix}");
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        out.push_str("0*q");
    }
    out
}

/// Sign and `coeff*` prefix for one slot; unit coefficients print bare.
fn coefficient_prefix(c: Quaternion) -> (bool, String) {
    let nonzero: Vec<usize> = (0..4).filter(|&n| c.to_array()[n] != 0.0).collect();
    if let [n] = nonzero[..] {
        let value = c.to_array()[n];
        let magnitude = value.abs();
        let negative = value < 0.0;
        let body = match (n, magnitude == 1.0) {
            (0, true) => String::new(),
            (0, false) => format!("{}*", format_real(magnitude)),
            (_, true) => format!("{}*", ["", "i", "j", "k"][n]),
            (_, false) => format!("{}{}*", format_real(magnitude), ["", "i", "j", "k"][n]),
        };
        // An imaginary suffix cannot follow exponent notation.
        if !body.contains('e') {
            return (negative, body);
        }
    }
    (false, format!("{}*", format_quaternion(c)))
}

fn json_number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        Value::from(x as i64)
    } else {
        Value::from(x)
    }
}

pub fn quaternion_json(q: Quaternion) -> Value {
    Value::Array(q.to_array().into_iter().map(json_number).collect())
}

/// `{"A":[…],"B":[…],"C":[…],"D":[…]}`
pub fn form_json(f: &CanonicalForm) -> Value {
    json!({
        "A": quaternion_json(f.a),
        "B": quaternion_json(f.b),
        "C": quaternion_json(f.c),
        "D": quaternion_json(f.d),
    })
}

/// Row-major array of 16 numbers.
pub fn matrix_json(m: &Matrix4) -> Value {
    Value::Array(m.to_array().into_iter().map(json_number).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, reduce_program};
    use proptest::prelude::*;
    use quatlin_core::{bar_operator_matrix, BarOp, Basis, Method};

    const Z: Quaternion = Quaternion::ZERO;

    fn reparse(text: &str) -> CanonicalForm {
        reduce_program(&parse(text).unwrap(), Method::Matrix)
            .unwrap()
            .result
    }

    #[test]
    fn reals() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(-0.0), "0");
        assert_eq!(format_real(-3.0), "-3");
        assert_eq!(format_real(0.5), "0.5");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(-2.0 / 3.0), "-0.666666666667");
        assert_eq!(format_real(123456.789), "123456.789");
        assert_eq!(format_real(1.5e-7), "1.5e-7");
        assert_eq!(format_real(2.5e20), "2.5e20");
        assert_eq!(format_real(0.1 + 0.2), "0.3");
    }

    #[test]
    fn quaternion_and_tuple() {
        assert_eq!(
            format_quaternion(Quaternion::new(1.0, -2.0, 0.5, 0.0)),
            "(1,-2,0.5,0)"
        );
        let f = CanonicalForm::new(Z, Z, Quaternion::I, Z);
        assert_eq!(
            format_tuple(&f),
            "{ (0,0,0,0); (0,0,0,0); (0,1,0,0); (0,0,0,0) }"
        );
    }

    #[test]
    fn expression_text() {
        assert_eq!(format_form(&CanonicalForm::IDENTITY, Style::Text), "q");
        let k_i = CanonicalForm::new(Z, Quaternion::K, Z, Z);
        assert_eq!(format_form(&k_i, Style::Text), "k*q*i");
        assert_eq!(reparse("k*q*i"), k_i);
        assert_eq!(format_form(&CanonicalForm::ZERO, Style::Text), "0*q");
        let mixed = CanonicalForm::new(
            Quaternion::real(-1.0),
            Quaternion::new(1.0, 2.0, 0.0, 0.0),
            -Quaternion::J.scale(2.0),
            Quaternion::real(0.5),
        );
        let text = format_form(&mixed, Style::Text);
        assert_eq!(text, "-q + (1,2,0,0)*q*i - 2j*q*j + 0.5*q*k");
        assert_eq!(reparse(&text), mixed);
    }

    #[test]
    fn json_outputs() {
        assert_eq!(
            format_form(&CanonicalForm::IDENTITY, Style::Json),
            r#"{"A":[1,0,0,0],"B":[0,0,0,0],"C":[0,0,0,0],"D":[0,0,0,0]}"#
        );
        let m = bar_operator_matrix(BarOp::new(Basis::K, Basis::I));
        assert_eq!(
            matrix_json(&m).to_string(),
            "[0,0,1,0,0,0,0,-1,1,0,0,0,0,-1,0,0]"
        );
        assert_eq!(
            quaternion_json(Quaternion::new(0.25, 0.0, -1.0, 0.0)).to_string(),
            "[0.25,0,-1,0]"
        );
    }

    #[test]
    fn matrix_text() {
        let m = bar_operator_matrix(BarOp::new(Basis::K, Basis::I));
        assert_eq!(
            format_matrix(&m),
            "[  0   0   1   0 ]\n[  0   0   0  -1 ]\n[  1   0   0   0 ]\n[  0  -1   0   0 ]\n"
        );
    }

    fn int_quat() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-9i32..=9)
            .prop_map(|c| Quaternion::new(c[0] as f64, c[1] as f64, c[2] as f64, c[3] as f64))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn expression_round_trip(slots in prop::array::uniform4(int_quat())) {
            let f = CanonicalForm::from_slots(slots);
            prop_assert_eq!(reparse(&format_form(&f, Style::Text)), f);
        }
    }
}
