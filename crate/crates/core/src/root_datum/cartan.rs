use std::fmt;

use crate::error::{Error, Result};

/// An irreducible finite Cartan type, Bourbaki numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::UnknownType(family.to_string())),
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::RankOutOfRange { family, rank })
        }
    }

    /// The Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>`: row `i` is the
    /// simple coroot, column `j` the simple root.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            'A' | 'B' | 'C' => (0..n - 1).for_each(|i| link(i, i + 1)),
            'D' => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            'E' => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            'F' => (0..3).for_each(|i| link(i, i + 1)),
            'G' => link(0, 1),
            _ => unreachable!("family validated in CartanType::new"),
        }
        match self.family {
            // alpha_n short
            'B' => a[n - 1][n - 2] = -2,
            // alpha_n long
            'C' => a[n - 2][n - 1] = -2,
            'F' => a[2][1] = -2,
            // alpha_1 short, alpha_2 long
            'G' => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Parsed form of a type expression such as `A2`, `A1xA1`, `B3 x T1` or `A1×A1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    pub components: Vec<CartanType>,
    pub torus_rank: usize,
}

impl TypeSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let normalized = s.replace('×', "x");
        let tokens: Vec<&str> = normalized
            .split(|c: char| c == 'x' || c == '*' || c == '+' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::UnknownType(s.to_string()));
        }
        let mut components = Vec::new();
        let mut torus_rank = 0;
        for token in tokens {
            let mut chars = token.chars();
            let family = chars.next().unwrap().to_ascii_uppercase();
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::UnknownType(token.to_string()))?;
            if family == 'T' {
                torus_rank += rank;
            } else {
                if rank == 0 {
                    return Err(Error::RankOutOfRange { family, rank });
                }
                components.push(CartanType::new(family, rank)?);
            }
        }
        Ok(TypeSpec {
            components,
            torus_rank,
        })
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        write!(f, "{}", parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_tori() {
        let t = TypeSpec::parse("A1×A1").unwrap();
        assert_eq!(t.components.len(), 2);
        assert_eq!(t.to_string(), "A1xA1");
        let t = TypeSpec::parse("b3 x T2").unwrap();
        assert_eq!(t.components, vec![CartanType::new('B', 3).unwrap()]);
        assert_eq!(t.torus_rank, 2);
        assert_eq!(TypeSpec::parse("T1").unwrap().components.len(), 0);
    }

    #[test]
    fn rejects_bad_types() {
        assert!(matches!(TypeSpec::parse("H3"), Err(Error::UnknownType(_))));
        assert!(matches!(TypeSpec::parse("Q2"), Err(Error::UnknownType(_))));
        assert!(matches!(
            TypeSpec::parse("D3"),
            Err(Error::RankOutOfRange { family: 'D', rank: 3 })
        ));
        assert!(matches!(TypeSpec::parse("E9"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(TypeSpec::parse("A0"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(TypeSpec::parse(""), Err(Error::UnknownType(_))));
        assert!(matches!(TypeSpec::parse("Ax"), Err(Error::UnknownType(_))));
    }

    #[test]
    fn small_matrices() {
        let b2 = CartanType::new('B', 2).unwrap().cartan_matrix();
        assert_eq!(b2, vec![vec![2, -1], vec![-2, 2]]);
        let c2 = CartanType::new('C', 2).unwrap().cartan_matrix();
        assert_eq!(c2, vec![vec![2, -2], vec![-1, 2]]);
        let d4 = CartanType::new('D', 4).unwrap().cartan_matrix();
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
    }
}
