use crate::error::{Error, Result};
use crate::exactfield::RootOfUnity;

/// A finite group given by its multiplication table, with a distinguished
/// central element `g` and a character `χ` with values in roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupData {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    g: usize,
    chi: Vec<RootOfUnity>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn join_names(parts: &[String]) -> String {
    let parts: Vec<&str> = parts
        .iter()
        .map(String::as_str)
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

impl FiniteGroupData {
    /// Checks closure, associativity, identity, inverses, centrality of `g`
    /// and that `χ` is a homomorphism.
    pub fn from_table(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        g: usize,
        chi: Vec<RootOfUnity>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(invalid("empty group"));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(invalid(format!("multiplication table must be {n}×{n}")));
        }
        if let Some((a, b)) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| table[a][b] >= n)
        {
            return Err(invalid(format!(
                "product {}·{} is out of range",
                names[a], names[b]
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(invalid(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| invalid("no identity element"))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| invalid(format!("{} has no inverse", names[a])))?;
            inverse.push(b);
        }
        if g >= n {
            return Err(invalid("distinguished element out of range"));
        }
        if let Some(x) = (0..n).find(|&x| table[g][x] != table[x][g]) {
            return Err(invalid(format!(
                "g = {} is not central: it does not commute with {}",
                names[g], names[x]
            )));
        }
        if chi.len() != n {
            return Err(invalid("character must have one value per element"));
        }
        for a in 0..n {
            for b in 0..n {
                if chi[table[a][b]] != chi[a].mul(&chi[b]) {
                    return Err(invalid(format!(
                        "χ is not a homomorphism at ({}, {})",
                        names[a], names[b]
                    )));
                }
            }
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(invalid("duplicate element names"));
        }
        Ok(FiniteGroupData {
            names,
            table,
            identity,
            inverse,
            g,
            chi,
        })
    }

    /// `Cₙ = ⟨c⟩` with `g = c` and `χ(c)` given. Element `k` is `c^k`.
    pub fn cyclic(n: usize, chi_c: RootOfUnity) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group of order 0"));
        }
        let names = (0..n).map(|k| join_names(&[power_name("c", k)])).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let chi = (0..n).map(|k| chi_c.pow(k as i64)).collect();
        Self::from_table(names, table, 1 % n, chi)
    }

    /// `Cₙ × C₂ = ⟨c⟩ × ⟨d⟩` with `g = c`; element `i + n·j` is `c^i d^j`.
    pub fn cyclic_times_c2(n: usize, chi_c: RootOfUnity, chi_d: RootOfUnity) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group of order 0"));
        }
        let idx = |i: usize, j: usize| i % n + n * (j % 2);
        let mut names = Vec::new();
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        let mut chi = Vec::new();
        for j in 0..2 {
            for i in 0..n {
                names.push(join_names(&[power_name("c", i), power_name("d", j)]));
                chi.push(chi_c.pow(i as i64).mul(&chi_d.pow(j as i64)));
                for l in 0..2 {
                    for k in 0..n {
                        table[idx(i, j)][idx(k, l)] = idx(i + k, j + l);
                    }
                }
            }
        }
        Self::from_table(names, table, idx(1, 0), chi)
    }

    /// The dihedral group of order `2m`, element `i + m·j` being `r^i t^j`
    /// with `t r t = r⁻¹`. `g = r^{m/2}` (central for even `m`); `χ(r) = −1`
    /// and `χ(t)` given.
    pub fn dihedral(m: usize, chi_t: RootOfUnity) -> Result<Self> {
        if m == 0 || m % 2 == 1 {
            return Err(invalid("dihedral construction needs an even m"));
        }
        let idx = |i: usize, j: usize| i % m + m * (j % 2);
        let minus = RootOfUnity::new(2, 1)?;
        let mut names = Vec::new();
        let mut table = vec![vec![0; 2 * m]; 2 * m];
        let mut chi = Vec::new();
        for j in 0..2 {
            for i in 0..m {
                names.push(join_names(&[power_name("r", i), power_name("t", j)]));
                chi.push(minus.pow(i as i64).mul(&chi_t.pow(j as i64)));
                for l in 0..2 {
                    for k in 0..m {
                        // r^i t^j r^k t^l = r^{i ± k} t^{j+l}
                        let k = if j == 1 { m - k } else { k };
                        table[idx(i, j)][idx(k, l)] = idx(i + k, j + l);
                    }
                }
            }
        }
        Self::from_table(names, table, m / 2, chi)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn chi(&self, a: usize) -> RootOfUnity {
        self.chi[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.table[acc][a])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus() -> RootOfUnity {
        RootOfUnity::new(2, 1).unwrap()
    }

    #[test]
    fn constructors_validate() {
        let c4 = FiniteGroupData::cyclic(4, RootOfUnity::new(4, 1).unwrap()).unwrap();
        assert_eq!(c4.element_order(c4.g()), 4);
        assert_eq!(c4.name(3), "c^3");
        let p =
            FiniteGroupData::cyclic_times_c2(3, RootOfUnity::new(3, 1).unwrap(), minus()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.name(4), "c·d");
        let d = FiniteGroupData::dihedral(6, minus()).unwrap();
        assert_eq!(d.order(), 12);
        assert_eq!(d.element_order(d.g()), 2);
        assert_eq!(d.chi(d.g()), minus());
    }

    #[test]
    fn rejects_bad_data() {
        // χ(c) = i is not a character of C₂
        assert!(FiniteGroupData::cyclic(2, RootOfUnity::new(4, 1).unwrap()).is_err());
        // a·a = a with a ≠ e: no inverse
        let names = vec!["e".to_string(), "a".to_string()];
        let bad = vec![vec![0, 1], vec![1, 1]];
        let one = RootOfUnity::one();
        assert!(FiniteGroupData::from_table(names, bad, 0, vec![one, one]).is_err());
        assert!(FiniteGroupData::dihedral(3, minus()).is_err());
    }
}
