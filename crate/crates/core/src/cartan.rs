//! Grammar for compact connected group types: products of simple Cartan
//! types and torus factors, written "A2", "A1xA1", "B2xT1", and so on.
//! Parsing is case-insensitive and accepts "x" or "\u{d7}" as the separator;
//! printing always produces the canonical form, so parse(print(s)) == s.

use crate::error::Error;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(&self) -> usize {
        match *self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::E(n) => n,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Simple(SimpleType),
    Torus(usize),
}

impl Factor {
    pub fn rank(&self) -> usize {
        match *self {
            Factor::Simple(t) => t.rank(),
            Factor::Torus(n) => n,
        }
    }
}

/// A product of simple factors and tori, in given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanSpec {
    pub factors: Vec<Factor>,
}

impl CartanSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType("empty product".into()));
        }
        for f in &factors {
            validate_factor(f)?;
        }
        Ok(CartanSpec { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn is_pure_torus(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Factor::Torus(_)))
    }

    /// The same factor list repeated twice, used by diagonal embeddings.
    pub fn doubled(&self) -> CartanSpec {
        let mut f = self.factors.clone();
        f.extend(self.factors.iter().copied());
        CartanSpec { factors: f }
    }

    /// A pure torus of the same rank.
    pub fn torus_of_same_rank(&self) -> CartanSpec {
        CartanSpec { factors: vec![Factor::Torus(self.rank())] }
    }
}

fn validate_factor(f: &Factor) -> Result<(), Error> {
    let bad = |msg: String| Err(Error::InvalidCartanType(msg));
    match *f {
        Factor::Torus(n) if n == 0 => bad("torus factor needs rank >= 1".into()),
        Factor::Simple(SimpleType::A(n)) | Factor::Simple(SimpleType::B(n))
        | Factor::Simple(SimpleType::C(n))
            if n == 0 =>
        {
            bad("simple factor needs rank >= 1".into())
        }
        Factor::Simple(SimpleType::D(n)) if n < 3 => {
            bad(format!("D{n} is not defined; D requires rank >= 3"))
        }
        Factor::Simple(SimpleType::E(n)) if !(6..=8).contains(&n) => {
            bad(format!("E{n} is not defined; E requires rank 6, 7 or 8"))
        }
        _ => Ok(()),
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            match *factor {
                Factor::Simple(SimpleType::A(n)) => write!(f, "A{n}")?,
                Factor::Simple(SimpleType::B(n)) => write!(f, "B{n}")?,
                Factor::Simple(SimpleType::C(n)) => write!(f, "C{n}")?,
                Factor::Simple(SimpleType::D(n)) => write!(f, "D{n}")?,
                Factor::Simple(SimpleType::E(n)) => write!(f, "E{n}")?,
                Factor::Simple(SimpleType::F4) => write!(f, "F4")?,
                Factor::Simple(SimpleType::G2) => write!(f, "G2")?,
                Factor::Torus(n) => write!(f, "T{n}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for CartanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut factors = Vec::new();
        for raw in s.split(['x', 'X', '\u{d7}']) {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(Error::InvalidCartanType(format!(
                    "empty factor in {s:?}"
                )));
            }
            let mut chars = tok.chars();
            let letter = chars.next().expect("nonempty").to_ascii_uppercase();
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidCartanType(format!("bad factor {tok:?}")))?;
            let factor = match letter {
                'A' => Factor::Simple(SimpleType::A(rank)),
                'B' => Factor::Simple(SimpleType::B(rank)),
                'C' => Factor::Simple(SimpleType::C(rank)),
                'D' => Factor::Simple(SimpleType::D(rank)),
                'E' => Factor::Simple(SimpleType::E(rank)),
                'F' if rank == 4 => Factor::Simple(SimpleType::F4),
                'G' if rank == 2 => Factor::Simple(SimpleType::G2),
                'F' | 'G' => {
                    return Err(Error::InvalidCartanType(format!(
                        "{letter}{rank} is not a simple type"
                    )))
                }
                'T' => Factor::Torus(rank),
                _ => {
                    return Err(Error::InvalidCartanType(format!(
                        "unknown family {letter:?} in {tok:?}"
                    )))
                }
            };
            factors.push(factor);
        }
        CartanSpec::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["A2", "A1xA1", "B2xT1", "G2", "E8", "T3", "A1xT1xC3"] {
            let spec: CartanSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let again: CartanSpec = spec.to_string().parse().unwrap();
            assert_eq!(again, spec);
        }
    }

    #[test]
    fn parse_is_case_insensitive_and_accepts_unicode_times() {
        let a: CartanSpec = "b2xt1".parse().unwrap();
        assert_eq!(a.to_string(), "B2xT1");
        let b: CartanSpec = "A1 \u{d7} A1".parse().unwrap();
        assert_eq!(b.to_string(), "A1xA1");
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        for s in ["D2", "E5", "E9", "F3", "G1", "A0", "T0", "", "Q3", "Ax"] {
            assert!(s.parse::<CartanSpec>().is_err(), "{s:?} should fail");
        }
        assert!("D3".parse::<CartanSpec>().is_ok());
        assert!("B1".parse::<CartanSpec>().is_ok());
    }

    #[test]
    fn rank_sums_over_factors() {
        let spec: CartanSpec = "A2xT1xB2".parse().unwrap();
        assert_eq!(spec.rank(), 5);
        assert!(!spec.is_pure_torus());
        assert!("T2".parse::<CartanSpec>().unwrap().is_pure_torus());
    }
}
