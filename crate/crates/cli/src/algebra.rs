use std::fmt;
use std::str::FromStr;

use dynkin_core::reps::classical_type;
use dynkin_core::{ClassicalKind, Error, Family, LieType, Result};

/// An algebra named on the command line, either by matrix label (`sl8`,
/// `sp6`, `so13`) or by Cartan type (`C3`, `E6`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    Matrix(ClassicalKind, usize),
    Abstract(LieType),
}

impl Algebra {
    /// The vector representation partitions live in, if classical.
    pub fn matrix(self) -> Option<(ClassicalKind, usize)> {
        match self {
            Algebra::Matrix(k, n) => Some((k, n)),
            Algebra::Abstract(t) => {
                let n = t.rank();
                match t.family() {
                    Family::A => Some((ClassicalKind::Sl, n + 1)),
                    Family::B => Some((ClassicalKind::So, 2 * n + 1)),
                    Family::C => Some((ClassicalKind::Sp, 2 * n)),
                    Family::D => Some((ClassicalKind::So, 2 * n)),
                    _ => None,
                }
            }
        }
    }

    /// The Cartan type, when the algebra is simple.
    pub fn lie_type(self) -> Result<LieType> {
        match self {
            Algebra::Abstract(t) => Ok(t),
            Algebra::Matrix(k, n) => classical_type(k, n)
                .ok_or(Error::DegenerateClassical { kind: k, dim: n }),
        }
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        for kind in ClassicalKind::ALL {
            let prefix = kind.to_string();
            if let Some(rest) = lower.strip_prefix(&prefix) {
                let rest = rest.trim_start_matches('_');
                let n: usize = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension in {s:?}")))?;
                if n == 0 {
                    return Err(Error::Parse(format!("{s:?} has dimension 0")));
                }
                if kind == ClassicalKind::Sp && n % 2 == 1 {
                    return Err(Error::Parse(format!("{s:?}: sp needs even dimension")));
                }
                return Ok(Algebra::Matrix(kind, n));
            }
        }
        t.parse().map(Algebra::Abstract)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Matrix(k, n) => write!(f, "{k}{n}"),
            Algebra::Abstract(t) => write!(f, "{t}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_and_abstract_labels() {
        assert_eq!("sl8".parse(), Ok(Algebra::Matrix(ClassicalKind::Sl, 8)));
        assert_eq!("SO13".parse(), Ok(Algebra::Matrix(ClassicalKind::So, 13)));
        let c3: Algebra = "C3".parse().unwrap();
        assert_eq!(c3.matrix(), Some((ClassicalKind::Sp, 6)));
        let e6: Algebra = "E6".parse().unwrap();
        assert_eq!(e6.matrix(), None);
        assert_eq!("B4".parse::<Algebra>().unwrap().matrix(), Some((ClassicalKind::So, 9)));
        assert!("sp5".parse::<Algebra>().is_err());
        assert!("slx".parse::<Algebra>().is_err());
        assert!("H3".parse::<Algebra>().is_err());
    }

    #[test]
    fn matrix_to_type() {
        let so8: Algebra = "so8".parse().unwrap();
        assert_eq!(so8.lie_type().unwrap().to_string(), "D4");
        let so4: Algebra = "so4".parse().unwrap();
        assert!(so4.lie_type().is_err());
    }
}
