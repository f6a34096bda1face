use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite partial order stored as its full `≤` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

fn index_names(elements: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::new();
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.clone(), i).is_some() {
            return Err(Error::InvalidPoset(format!("duplicate element '{e}'")));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds the reflexive-transitive closure of the given strict relations.
    /// Fails if the closure is not antisymmetric.
    pub fn from_covers<E, C>(elements: E, covers: C) -> Result<Self>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        C: IntoIterator<Item = (String, String)>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let index = index_names(&elements)?;
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (x, y) in covers {
            let i = *index
                .get(&x)
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element '{x}'")))?;
            let j = *index
                .get(&y)
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element '{y}'")))?;
            if i == j {
                return Err(Error::InvalidPoset(format!("'{x}' < '{x}' is not strict")));
            }
            leq[i][j] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!(
                        "'{}' and '{}' lie on a cycle of relations",
                        elements[i], elements[j]
                    )));
                }
            }
        }
        Ok(Poset {
            elements,
            index,
            leq,
        })
    }

    /// Takes an explicit `≤` matrix and checks the partial-order axioms.
    pub fn from_relation(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let index = index_names(&elements)?;
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidPoset(
                "relation matrix has the wrong shape".into(),
            ));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::InvalidPoset(format!(
                    "not reflexive at '{}'",
                    elements[i]
                )));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric at '{}', '{}'",
                        elements[i], elements[j]
                    )));
                }
                if leq[i][j] {
                    if let Some(k) = (0..n).find(|&k| leq[j][k] && !leq[i][k]) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive: '{}' ≤ '{}' ≤ '{}'",
                            elements[i], elements[j], elements[k]
                        )));
                    }
                }
            }
        }
        Ok(Poset {
            elements,
            index,
            leq,
        })
    }

    /// `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Self {
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Poset::from_relation(elements, leq).expect("chain is a partial order")
    }

    pub fn antichain(n: usize) -> Self {
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Poset::from_relation(elements, leq).expect("antichain is a partial order")
    }

    /// Componentwise order on `X × Y`; element `(x, y)` has index
    /// `x·|Y| + y` and name `(x,y)`.
    pub fn product(x: &Poset, y: &Poset) -> Result<Self> {
        let (nx, ny) = (x.len(), y.len());
        let elements = (0..nx)
            .flat_map(|i| (0..ny).map(move |j| (i, j)))
            .map(|(i, j)| format!("({},{})", x.elements[i], y.elements[j]))
            .collect();
        let leq = (0..nx * ny)
            .map(|a| {
                (0..nx * ny)
                    .map(|b| x.leq[a / ny][b / ny] && y.leq[a % ny][b % ny])
                    .collect()
            })
            .collect();
        Poset::from_relation(elements, leq)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Elements of the closed interval `[i, j]`, in index order.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq[i][z] && self.leq[z][j])
            .collect()
    }

    /// Covering pairs `x ⋖ y`, ordered by `(x, y)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|z| self.lt(i, z) && self.lt(z, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True when `≤` is equality.
    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| i == j || !self.leq[i][j]))
    }

    /// The reversed order on the same elements.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        Poset {
            elements: self.elements.clone(),
            index: self.index.clone(),
            leq: (0..n)
                .map(|i| (0..n).map(|j| self.leq[j][i]).collect())
                .collect(),
        }
    }
}
