use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_s, is_prime};
use super::formal::{boundary_sum, FormalMatSum, P1Divisor};
use super::matrix::{IntMat2, ProjPoint};
use crate::error::{Error, Result};

/// Largest prime accepted by [`chain_decompose`].
pub const MAX_CHAIN_PRIME: u64 = 10_000;

/// Matrices `M_0, ..., M_k` of `S_l` with `M_i 0 = M_{i+1} oo`, running from
/// `[[l, n], [0, 1]]` to `[[1, 0], [x_n, l]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    /// The `n` of the starting matrix `[[l, n], [0, 1]]`.
    pub index: i64,
    pub matrices: Vec<IntMat2>,
    pub x_n: i64,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Members with `b > 0`; all but the terminal matrix.
    pub fn plus_part(&self) -> impl Iterator<Item = &IntMat2> {
        self.matrices.iter().filter(|m| m.b > 0)
    }

    pub fn boundary(&self) -> P1Divisor {
        boundary_sum(
            &FormalMatSum::from_matrices(&self.matrices).expect("chain shares one determinant"),
        )
    }
}

/// `S_l` split into its two diagonal matrices and the chains `C_1 .. C_{l-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDecomposition {
    pub l: i64,
    pub diagonal: [IntMat2; 2],
    pub chains: Vec<Chain>,
}

pub fn chain_decompose(l: u64) -> Result<ChainDecomposition> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if l > MAX_CHAIN_PRIME {
        return Err(Error::Range(format!(
            "chain decomposition supports l <= {MAX_CHAIN_PRIME}, got {l}"
        )));
    }
    let li = l as i64;
    let all = enumerate_s(li)?;
    let mut by_infinity: HashMap<ProjPoint, Vec<IntMat2>> = HashMap::new();
    for m in &all {
        by_infinity.entry(m.at_infinity()).or_default().push(*m);
    }

    let is_terminal = |m: &IntMat2| m.a == 1 && m.b == 0 && m.d == li && m.c >= 1;
    let mut chains = Vec::with_capacity(l as usize - 1);
    for n in 1..li {
        let mut current = IntMat2::from_entries(li, n, 0, 1);
        let mut matrices = vec![current];
        while !is_terminal(&current) {
            let next = match by_infinity.get(&current.at_zero()).map(Vec::as_slice) {
                Some([only]) => *only,
                Some(many) if many.len() > 1 => {
                    return Err(Error::Structure(format!(
                        "{current} links to {} matrices of S_{l}",
                        many.len()
                    )))
                }
                _ => {
                    return Err(Error::Structure(format!(
                        "chain through {current} does not continue"
                    )))
                }
            };
            if matrices.len() > all.len() {
                return Err(Error::Structure(format!("chain C_{n} does not terminate")));
            }
            matrices.push(next);
            current = next;
        }
        chains.push(Chain {
            index: n,
            matrices,
            x_n: current.c,
        });
    }

    let diagonal = [
        IntMat2::from_entries(li, 0, 0, 1),
        IntMat2::from_entries(1, 0, 0, li),
    ];
    let mut seen = BTreeSet::new();
    for m in diagonal
        .iter()
        .chain(chains.iter().flat_map(|c| c.matrices.iter()))
    {
        if !seen.insert(*m) {
            return Err(Error::Structure(format!(
                "{m} appears twice in the decomposition of S_{l}"
            )));
        }
    }
    if seen.len() != all.len() || !all.iter().all(|m| seen.contains(m)) {
        return Err(Error::Structure(format!(
            "decomposition covers {} of {} elements of S_{l}",
            seen.len(),
            all.len()
        )));
    }
    Ok(ChainDecomposition {
        l: li,
        diagonal,
        chains,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> IntMat2 {
        IntMat2::from_entries(a, b, c, d)
    }

    #[test]
    fn chains_of_three() {
        let dec = chain_decompose(3).unwrap();
        assert_eq!(dec.diagonal, [m(3, 0, 0, 1), m(1, 0, 0, 3)]);
        assert_eq!(dec.chains.len(), 2);
        assert_eq!(dec.chains[0].matrices, vec![m(3, 1, 0, 1), m(1, 0, 1, 3)]);
        assert_eq!(dec.chains[0].x_n, 1);
        assert_eq!(
            dec.chains[1].matrices,
            vec![m(3, 2, 0, 1), m(2, 1, 1, 2), m(1, 0, 2, 3)]
        );
        assert_eq!(dec.chains[1].x_n, 2);
    }

    #[test]
    fn chains_of_two() {
        let dec = chain_decompose(2).unwrap();
        assert_eq!(dec.chains.len(), 1);
        assert_eq!(dec.chains[0].matrices, vec![m(2, 1, 0, 1), m(1, 0, 1, 2)]);
        assert_eq!(dec.chains[0].x_n, 1);
    }

    #[test]
    fn chains_telescope() {
        for chain in chain_decompose(7).unwrap().chains {
            assert_eq!(chain.boundary(), P1Divisor::infinity_minus_zero());
            assert_eq!(chain.plus_part().count(), chain.len() - 1);
        }
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(chain_decompose(4), Err(Error::NotPrime(4)));
        assert_eq!(chain_decompose(1), Err(Error::NotPrime(1)));
        assert!(chain_decompose(10_007).is_err());
    }
}
