//! Number formatting for CSV output: 12 significant digits, `.` separator,
//! shortest form (trailing zeros dropped), scientific notation outside
//! `1e-5 <= |x| < 1e12`.

pub const SIG_DIGITS: usize = 12;

pub fn sig(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("`e` formatting always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-5..12).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
