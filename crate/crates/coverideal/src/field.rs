use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti computations.
///
/// `Rational` is the default and uses exact integer arithmetic throughout.
/// `Prime(p)` works modulo a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Field, D::Error> {
        let s = String::deserialize(deserializer)?;
        Field::parse(&s).map_err(D::Error::custom)
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Rational
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "f{p}"),
        }
    }
}

impl Field {
    /// Parses `q` or `f<p>` (case-insensitive), validating primality of `p`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix('f').or_else(|| t.strip_prefix('F')) {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::NotPrime(0))
                .and_then(|p: u64| if p < (1 << 31) { Ok(p) } else { Err(Error::NotPrime(p)) })?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(Field::Prime(p as u32));
        }
        Err(Error::NotPrime(0))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_q_and_primes() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("f7").unwrap(), Field::Prime(7));
        assert_eq!(Field::parse("F101").unwrap(), Field::Prime(101));
    }

    #[test]
    fn parse_rejects_composites_and_junk() {
        assert!(Field::parse("f9").is_err());
        assert!(Field::parse("f1").is_err());
        assert!(Field::parse("f").is_err());
        assert!(Field::parse("z5").is_err());
        // 2^31 is out of range even if prime-shaped input is given
        assert!(Field::parse("f2147483648").is_err());
    }

    #[test]
    fn display_round_trips() {
        assert_eq!(Field::parse(&Field::Prime(13).to_string()).unwrap(), Field::Prime(13));
        assert_eq!(Field::parse(&Field::Rational.to_string()).unwrap(), Field::Rational);
    }
}
