use crate::error::{Error, Result};

/// Coupling strength and mass of the shell interaction.
///
/// `critical` is set exactly when the coupling equals `+2` or `-2`. When the
/// parameters come from decimal strings the comparison is made on the exact
/// decimal value, so `"2"`, `"2.0"` and `"20e-1"` are critical while
/// `"1.9999999"` is not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellParams {
    eta: f64,
    m: f64,
    critical: bool,
}

impl ShellParams {
    pub fn new(eta: f64, m: f64) -> Result<Self> {
        if !eta.is_finite() || !m.is_finite() {
            return Err(Error::precondition(format!(
                "eta and m must be finite, got eta = {eta}, m = {m}"
            )));
        }
        Ok(ShellParams {
            eta,
            m,
            critical: eta.abs() == 2.0,
        })
    }

    /// Parse decimal strings (scientific notation accepted).
    pub fn parse(eta: &str, m: &str) -> Result<Self> {
        let eta_dec = Decimal::parse(eta)?;
        let m_dec = Decimal::parse(m)?;
        let params = ShellParams::new(eta_dec.value, m_dec.value)?;
        let exact_critical = eta_dec.is_plus_minus_two();
        if params.critical != exact_critical {
            return Err(Error::Parse(format!(
                "coupling {eta:?} is not critical but rounds to {} in double precision",
                params.eta
            )));
        }
        Ok(params)
    }

    #[inline]
    pub fn eta(&self) -> f64 {
        self.eta
    }

    #[inline]
    pub fn m(&self) -> f64 {
        self.m
    }

    #[inline]
    pub fn abs_m(&self) -> f64 {
        self.m.abs()
    }

    #[inline]
    pub fn is_critical(&self) -> bool {
        self.critical
    }

    /// `eta == 0`: the free operator.
    #[inline]
    pub fn is_free(&self) -> bool {
        self.eta == 0.0
    }

    pub(crate) fn require_coupling(&self, op: &str) -> Result<()> {
        if self.is_free() {
            return Err(Error::domain(format!("{op} is undefined for eta = 0")));
        }
        Ok(())
    }

    /// Rejects `eta` in {0, +2, -2}.
    pub(crate) fn require_noncritical(&self, op: &str) -> Result<()> {
        if self.is_free() || self.critical {
            return Err(Error::precondition(format!(
                "{op} requires eta not in {{0, 2, -2}}, got eta = {}",
                self.eta
            )));
        }
        Ok(())
    }
}

/// A parsed decimal literal, kept alongside its digit string for exact tests.
struct Decimal {
    value: f64,
    /// Significant digits with leading and trailing zeros removed.
    digits: String,
    /// Value = 0.digits * 10^point.
    point: i64,
}

impl Decimal {
    fn parse(s: &str) -> Result<Decimal> {
        let err = || Error::Parse(format!("not a decimal number: {s:?}"));
        let t = s.trim();
        let body = t.strip_prefix(['+', '-']).unwrap_or(t);
        let (mantissa, exp) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], body[i + 1..].parse::<i64>().map_err(|_| err())?),
            None => (body, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((a, b)) => (a, b),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty()
            || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        let value: f64 = t.parse().map_err(|_| err())?;

        let all: String = int_part.chars().chain(frac_part.chars()).collect();
        let leading = all.len() - all.trim_start_matches('0').len();
        let digits = all.trim_start_matches('0').trim_end_matches('0').to_string();
        let point = int_part.len() as i64 - leading as i64 + exp;
        Ok(Decimal {
            value,
            digits,
            point,
        })
    }

    fn is_plus_minus_two(&self) -> bool {
        self.digits == "2" && self.point == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criticality_is_exact() {
        for s in ["2", "2.0", "-2", "+2.000", "20e-1", "0.2E1", "-0002.0e0"] {
            assert!(ShellParams::parse(s, "1").unwrap().is_critical(), "{s}");
        }
        for s in ["1.9999999", "2.0000001", "0.2", "20", "-1", "0"] {
            assert!(!ShellParams::parse(s, "1").unwrap().is_critical(), "{s}");
        }
        assert!(ShellParams::new(-2.0, 1.0).unwrap().is_critical());
        assert!(!ShellParams::new(2.0 - 1e-15, 1.0).unwrap().is_critical());
    }

    #[test]
    fn indistinguishable_coupling_is_rejected() {
        assert!(matches!(
            ShellParams::parse("2.00000000000000000001", "1"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn parse_errors() {
        for s in ["", "abc", "1.2.3", "inf", "nan", "1e", "--2", "."] {
            assert!(ShellParams::parse(s, "1").is_err(), "{s:?}");
        }
        assert!(ShellParams::new(f64::NAN, 1.0).is_err());
        let p = ShellParams::parse("0", "0").unwrap();
        assert!(p.is_free() && p.m() == 0.0);
    }
}
