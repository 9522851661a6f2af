use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{factorize, RingSpec};
use crate::error::{Error, Result};
use crate::module::ModuleSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Z_{p^e}` over itself.
    LocalChain,
    /// `Z_n` with at least two distinct prime factors, i.e. a direct sum of
    /// local cyclic modules by CRT.
    DirectSumLocal,
    /// `Z_n` with `n` a squarefree composite.
    ReducedCyclic,
    /// `Z_a × Z_b` over itself, `a` and `b` prime powers.
    ProductMixed,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::LocalChain,
        Family::DirectSumLocal,
        Family::ReducedCyclic,
        Family::ProductMixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::LocalChain => "local_chain",
            Family::DirectSumLocal => "direct_sum_local",
            Family::ReducedCyclic => "reduced_cyclic",
            Family::ProductMixed => "product_mixed",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::LocalChain => "Z_{p^e} over itself, p^e <= budget",
            Family::DirectSumLocal => "Z_n over itself with >= 2 distinct primes, n <= budget",
            Family::ReducedCyclic => "Z_n over itself, n squarefree composite, n <= budget",
            Family::ProductMixed => "Z_a x Z_b over itself, a <= b prime powers, ab <= budget",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown family {s:?}"),
            })
    }
}

fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}

fn regular(moduli: Vec<u64>) -> ModuleSpec {
    ModuleSpec::regular(RingSpec::new(moduli).expect("moduli >= 2"))
}

/// Modules of the family whose order is at most `budget`, in increasing
/// order of their moduli.
pub fn generate_family(kind: Family, budget: u64) -> Result<Vec<ModuleSpec>> {
    if budget < 4 {
        return Err(Error::InvalidModule(format!("size budget {budget} is below 4")));
    }
    let out = match kind {
        Family::LocalChain => (2..=budget).filter(|&n| is_prime_power(n)).map(|n| regular(vec![n])).collect(),
        Family::DirectSumLocal => (2..=budget)
            .filter(|&n| factorize(n).len() >= 2)
            .map(|n| regular(vec![n]))
            .collect(),
        Family::ReducedCyclic => (2..=budget)
            .filter(|&n| {
                let f = factorize(n);
                f.len() >= 2 && f.iter().all(|&(_, e)| e == 1)
            })
            .map(|n| regular(vec![n]))
            .collect(),
        Family::ProductMixed => {
            let pp: Vec<u64> = (2..=budget / 2).filter(|&n| is_prime_power(n)).collect();
            let mut out = Vec::new();
            for (i, &a) in pp.iter().enumerate() {
                for &b in &pp[i..] {
                    if a * b <= budget {
                        out.push(regular(vec![a, b]));
                    }
                }
            }
            out
        }
    };
    Ok(out)
}
